//! Signed permutations and the Weyl groups of types A, BC and D.
//!
//! An element is stored as its window `w(1) … w(n)`; a negative entry `-k`
//! encodes the barred letter `k̄`, and `w(ī)` is implicitly `overline(w(i))`.
//! For a product of simple factors the windows of the factors are
//! concatenated, each segment using its own letters `1..=n_j`.
//!
//! Letters are compared with the order `1 < 2 < … < n < n̄ < … < 2̄ < 1̄`
//! ([`cmp_letters`]), never with the signed-integer order.
//!
//! The simple reflections follow the usual classical conventions: `s_i`
//! swaps positions `i, i+1`; in type BC the last generator negates `w(n)`;
//! in type D it maps `(w(n-1), w(n))` to `(w(n)̄, w(n-1)̄)`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Range;

use num_traits::{Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Result, WeylError};
use crate::geometry::Rational;

/// Default cap on the order of groups that may be enumerated.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// Compares two letters of `[n] ∪ [n̄]` in the order `1 < … < n < n̄ < … < 1̄`.
#[inline]
pub fn cmp_letters(a: i32, b: i32) -> Ordering {
    (a < 0, a).cmp(&(b < 0, b))
}

#[inline]
fn letter_gt(a: i32, b: i32) -> bool {
    cmp_letters(a, b) == Ordering::Greater
}

/// The classical families. B and C share their Weyl group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylType {
    A,
    BC,
    D,
}

impl WeylType {
    pub fn name(self) -> &'static str {
        match self {
            WeylType::A => "A",
            WeylType::BC => "BC",
            WeylType::D => "D",
        }
    }

    fn min_rank(self) -> usize {
        match self {
            WeylType::A => 1,
            WeylType::BC | WeylType::D => 2,
        }
    }

    fn generator_count(self, rank: usize) -> usize {
        match self {
            WeylType::A => rank - 1,
            WeylType::BC | WeylType::D => rank,
        }
    }

    fn order(self, rank: usize) -> u128 {
        let fact = (1..=rank as u128).fold(1u128, |acc, k| acc.saturating_mul(k));
        let signs = match self {
            WeylType::A => 1u128,
            WeylType::BC => 1u128.checked_shl(rank as u32).unwrap_or(u128::MAX),
            WeylType::D => 1u128.checked_shl(rank as u32 - 1).unwrap_or(u128::MAX),
        };
        fact.saturating_mul(signs)
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One simple factor. `rank` is the number of letters `n`, so type A with
/// rank `n` is the symmetric group `S_n` (Lie type `A_{n-1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub ty: WeylType,
    pub rank: usize,
}

impl Factor {
    pub fn new(ty: WeylType, rank: usize) -> Self {
        Factor { ty, rank }
    }
}

/// An ordered product of classical simple factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    factors: Vec<Factor>,
    offsets: Vec<usize>,
}

/// An extended index: a letter of `[n] ∪ [n̄]`, ordered by [`cmp_letters`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedIndex(i32);

impl ExtendedIndex {
    pub fn new(value: i32) -> Option<Self> {
        (value != 0).then_some(ExtendedIndex(value))
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn bar(self) -> Self {
        ExtendedIndex(-self.0)
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// 1-based position of the letter in `1 < … < n < n̄ < … < 1̄`.
    pub fn position(self, rank: usize) -> usize {
        if self.0 > 0 {
            self.0 as usize
        } else {
            2 * rank + 1 - self.0.unsigned_abs() as usize
        }
    }
}

impl Ord for ExtendedIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_letters(self.0, other.0)
    }
}

impl PartialOrd for ExtendedIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 0 {
            write!(f, "{}\u{0304}", -self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

pub type Window = SmallVec<[i32; 8]>;

/// A group element in window notation.
///
/// Ordering is lexicographic on windows under [`cmp_letters`]; this is also
/// the enumeration order of [`GroupDescriptor::elements`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation(Window);

impl SignedPermutation {
    pub fn new(window: &[i32]) -> Self {
        SignedPermutation(Window::from_slice(window))
    }

    pub fn window(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0.into_vec()
    }

    fn from_window(window: Window) -> Self {
        SignedPermutation(window)
    }
}

impl From<Vec<i32>> for SignedPermutation {
    fn from(v: Vec<i32>) -> Self {
        SignedPermutation(Window::from_vec(v))
    }
}

impl<const N: usize> From<[i32; N]> for SignedPermutation {
    fn from(v: [i32; N]) -> Self {
        SignedPermutation::new(&v)
    }
}

impl FromIterator<i32> for SignedPermutation {
    fn from_iter<I: IntoIterator<Item = i32>>(iter: I) -> Self {
        SignedPermutation(iter.into_iter().collect())
    }
}

impl Ord for SignedPermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            match cmp_letters(*a, *b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Per-segment kernels. `w` is the window of one simple factor.

#[inline]
fn apply_letter(w: &[i32], letter: i32) -> i32 {
    let image = w[letter.unsigned_abs() as usize - 1];
    if letter > 0 {
        image
    } else {
        -image
    }
}

fn seg_inverse(w: &[i32], out: &mut [i32]) {
    for (i, &a) in w.iter().enumerate() {
        let pos = (i + 1) as i32;
        out[a.unsigned_abs() as usize - 1] = if a > 0 { pos } else { -pos };
    }
}

fn seg_length(ty: WeylType, w: &[i32]) -> usize {
    let n = w.len();
    let mut len = 0;
    for i in 0..n {
        for j in i + 1..n {
            if letter_gt(w[i], w[j]) {
                len += 1;
            }
            if ty != WeylType::A && letter_gt(w[i], -w[j]) {
                len += 1;
            }
        }
    }
    if ty == WeylType::BC {
        len += w.iter().filter(|&&a| a < 0).count();
    }
    len
}

fn seg_descent(ty: WeylType, w: &[i32], g: usize) -> bool {
    let n = w.len();
    if g + 1 < n {
        return letter_gt(w[g], w[g + 1]);
    }
    match ty {
        WeylType::A => unreachable!("type A has n-1 generators"),
        WeylType::BC => w[n - 1] < 0,
        WeylType::D => letter_gt(w[n - 2], -w[n - 1]),
    }
}

fn seg_mul_generator(ty: WeylType, w: &mut [i32], g: usize) {
    let n = w.len();
    if g + 1 < n {
        w.swap(g, g + 1);
        return;
    }
    match ty {
        WeylType::A => unreachable!("type A has n-1 generators"),
        WeylType::BC => w[n - 1] = -w[n - 1],
        WeylType::D => {
            let (a, b) = (w[n - 2], w[n - 1]);
            w[n - 2] = -b;
            w[n - 1] = -a;
        }
    }
}

/// Tableau criterion: `v ≤ w` in the symmetric group on `1..=m` iff every
/// sorted prefix of `v` is entrywise below the sorted prefix of `w`.
fn tableau_leq(v: &[usize], w: &[usize], m: usize) -> bool {
    let mut cv: SmallVec<[u16; 32]> = SmallVec::from_elem(0, m + 1);
    let mut cw: SmallVec<[u16; 32]> = SmallVec::from_elem(0, m + 1);
    for (&a, &b) in v.iter().zip(w.iter()) {
        for c in &mut cv[1..=a] {
            *c += 1;
        }
        for c in &mut cw[1..=b] {
            *c += 1;
        }
        if cv[1..].iter().zip(cw[1..].iter()).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

/// Bruhat order for type BC via the embedding into the symmetric group on
/// the `2n` letters, read in the order `1 < … < n < n̄ < … < 1̄`.
fn unfold(w: &[i32]) -> SmallVec<[usize; 16]> {
    let n = w.len();
    let key = |a: i32| ExtendedIndex(a).position(n);
    let mut out: SmallVec<[usize; 16]> = w.iter().map(|&a| key(a)).collect();
    out.extend(w.iter().rev().map(|&a| key(-a)));
    out
}

/// Bruhat order by descent recursion: if `s` is a right descent of `w`, then
/// `v ≤ w` iff `min(v, vs) ≤ ws`.
fn descent_leq(ty: WeylType, v: &[i32], w: &[i32]) -> bool {
    let mut v: Window = Window::from_slice(v);
    let mut w: Window = Window::from_slice(w);
    let mut lv = seg_length(ty, &v);
    let mut lw = seg_length(ty, &w);
    let gens = ty.generator_count(w.len());
    loop {
        if lv > lw {
            return false;
        }
        if lw == 0 {
            return lv == 0;
        }
        let g = (0..gens)
            .find(|&g| seg_descent(ty, &w, g))
            .expect("non-identity element has a right descent");
        seg_mul_generator(ty, &mut w, g);
        lw -= 1;
        if seg_descent(ty, &v, g) {
            seg_mul_generator(ty, &mut v, g);
            lv -= 1;
        }
    }
}

fn seg_bruhat_leq(ty: WeylType, v: &[i32], w: &[i32]) -> bool {
    let n = v.len();
    match ty {
        WeylType::A => {
            let vk: SmallVec<[usize; 16]> = v.iter().map(|&a| a as usize).collect();
            let wk: SmallVec<[usize; 16]> = w.iter().map(|&a| a as usize).collect();
            tableau_leq(&vk, &wk, n)
        }
        WeylType::BC => tableau_leq(&unfold(v), &unfold(w), 2 * n),
        WeylType::D => descent_leq(ty, v, w),
    }
}

fn seg_validate(ty: WeylType, w: &[i32]) -> core::result::Result<(), &'static str> {
    let n = w.len();
    let mut seen: SmallVec<[bool; 16]> = SmallVec::from_elem(false, n);
    let mut bars = 0;
    for &a in w {
        let k = a.unsigned_abs() as usize;
        if k == 0 || k > n {
            return Err("letter out of range");
        }
        if seen[k - 1] {
            return Err("repeated letter");
        }
        seen[k - 1] = true;
        if a < 0 {
            bars += 1;
        }
    }
    match ty {
        WeylType::A if bars > 0 => Err("type A elements carry no bars"),
        WeylType::D if bars % 2 == 1 => Err("type D elements carry an even number of bars"),
        _ => Ok(()),
    }
}

fn seg_elements(ty: WeylType, n: usize) -> Vec<Window> {
    fn rec(
        ty: WeylType,
        n: usize,
        letters: &[i32],
        used: &mut [bool],
        cur: &mut Window,
        out: &mut Vec<Window>,
    ) {
        if cur.len() == n {
            if ty != WeylType::D || cur.iter().filter(|&&a| a < 0).count() % 2 == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for &a in letters {
            let k = a.unsigned_abs() as usize - 1;
            if used[k] {
                continue;
            }
            used[k] = true;
            cur.push(a);
            rec(ty, n, letters, used, cur, out);
            cur.pop();
            used[k] = false;
        }
    }
    let mut letters: Vec<i32> = (1..=n as i32).collect();
    if ty != WeylType::A {
        letters.extend((1..=n as i32).rev().map(|k| -k));
    }
    let mut out = Vec::new();
    rec(
        ty,
        n,
        &letters,
        &mut vec![false; n],
        &mut Window::new(),
        &mut out,
    );
    out
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn seg_simple_roots(ty: WeylType, n: usize) -> Vec<Vec<i64>> {
    let mut roots: Vec<Vec<i64>> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r[i + 1] = -1;
            r
        })
        .collect();
    match ty {
        WeylType::A => {}
        WeylType::BC => roots.push(unit(n, n - 1, 2)),
        WeylType::D => {
            let mut r = vec![0; n];
            r[n - 2] = 1;
            r[n - 1] = 1;
            roots.push(r);
        }
    }
    roots
}

fn seg_positive_roots(ty: WeylType, n: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut r = vec![0; n];
            r[i] = 1;
            r[j] = -1;
            roots.push(r);
            if ty != WeylType::A {
                let mut r = vec![0; n];
                r[i] = 1;
                r[j] = 1;
                roots.push(r);
            }
        }
        if ty == WeylType::BC {
            roots.push(unit(n, i, 2));
        }
    }
    roots
}

/// The reflection `s_α` as a signed permutation: `e_k ↦ e_k - 2⟨e_k,α⟩/⟨α,α⟩ α`.
fn reflection_window(alpha: &[i64]) -> Window {
    let n = alpha.len();
    let norm: i64 = alpha.iter().map(|a| a * a).sum();
    (0..n)
        .map(|k| {
            let coeff = 2 * alpha[k];
            let mut image = unit(n, k, 1);
            if coeff != 0 {
                let scale = coeff / norm;
                for (x, a) in image.iter_mut().zip(alpha) {
                    *x -= scale * a;
                }
            }
            let (m, &c) = image
                .iter()
                .enumerate()
                .find(|(_, &c)| c != 0)
                .expect("reflection maps e_k to ±e_m");
            (m as i32 + 1) * c.signum() as i32
        })
        .collect()
}

fn seg_chamber_of(ty: WeylType, a: &[Rational]) -> Result<Window> {
    let n = a.len();
    let mut idx: SmallVec<[usize; 16]> = (0..n).collect();
    match ty {
        WeylType::A => {
            if !a.iter().fold(Rational::zero(), |acc, x| acc + x).is_zero() {
                return Err(WeylError::NotInAmbient);
            }
            idx.sort_by(|&i, &j| a[i].cmp(&a[j]));
            if idx.windows(2).any(|p| a[p[0]] == a[p[1]]) {
                return Err(WeylError::BoundaryPoint);
            }
            Ok(idx.iter().map(|&i| i as i32 + 1).collect())
        }
        WeylType::BC | WeylType::D => {
            // Largest magnitude first: a_{u(1)} is the most negative value.
            idx.sort_by(|&i, &j| a[j].abs().cmp(&a[i].abs()));
            if idx.windows(2).any(|p| a[p[0]].abs() == a[p[1]].abs()) {
                return Err(WeylError::BoundaryPoint);
            }
            let signed = |i: usize| {
                let k = i as i32 + 1;
                if a[i].is_positive() {
                    -k
                } else {
                    k
                }
            };
            let mut u: Window = idx.iter().map(|&i| signed(i)).collect();
            match ty {
                WeylType::BC => {
                    if a[idx[n - 1]].is_zero() {
                        return Err(WeylError::BoundaryPoint);
                    }
                }
                _ => {
                    // The last letter only needs |a_{u(n)}| < |a_{u(n-1)}|;
                    // its bar is fixed by parity.
                    let bars = u[..n - 1].iter().filter(|&&x| x < 0).count();
                    let k = idx[n - 1] as i32 + 1;
                    u[n - 1] = if bars % 2 == 0 { k } else { -k };
                }
            }
            Ok(u)
        }
    }
}

// ---------------------------------------------------------------------------

impl GroupDescriptor {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(WeylError::EmptyDescriptor);
        }
        let mut offsets = Vec::with_capacity(factors.len() + 1);
        offsets.push(0);
        for f in &factors {
            if f.rank < f.ty.min_rank() || f.rank > 64 {
                return Err(WeylError::InvalidRank {
                    ty: f.ty.name(),
                    rank: f.rank,
                });
            }
            offsets.push(offsets.last().unwrap() + f.rank);
        }
        Ok(GroupDescriptor { factors, offsets })
    }

    /// A single simple factor.
    pub fn simple(ty: WeylType, rank: usize) -> Result<Self> {
        Self::new(vec![Factor::new(ty, rank)])
    }

    /// The symmetric group `S_n`.
    pub fn symmetric(n: usize) -> Result<Self> {
        Self::simple(WeylType::A, n)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    /// Total number of letters, which is also the ambient dimension.
    pub fn window_len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn segment(&self, factor: usize) -> Range<usize> {
        self.offsets[factor]..self.offsets[factor + 1]
    }

    pub fn segments(&self) -> impl Iterator<Item = (Factor, Range<usize>)> + '_ {
        self.factors
            .iter()
            .enumerate()
            .map(move |(i, f)| (*f, self.segment(i)))
    }

    pub fn order(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, f| acc.saturating_mul(f.ty.order(f.rank)))
    }

    pub fn identity(&self) -> SignedPermutation {
        self.segments()
            .flat_map(|(f, _)| 1..=f.rank as i32)
            .collect()
    }

    pub fn is_identity(&self, w: &SignedPermutation) -> bool {
        self.segments()
            .all(|(_, r)| w.0[r].iter().enumerate().all(|(i, &a)| a == i as i32 + 1))
    }

    fn check_len(&self, w: &SignedPermutation) -> Result<()> {
        if w.len() != self.window_len() {
            return Err(WeylError::DescriptorMismatch {
                expected: self.window_len(),
                found: w.len(),
            });
        }
        Ok(())
    }

    /// Checks that `w` is an element of this group.
    pub fn validate(&self, w: &SignedPermutation) -> Result<()> {
        self.check_len(w)?;
        for (f, r) in self.segments() {
            seg_validate(f.ty, &w.0[r]).map_err(|reason| WeylError::InvalidElement {
                window: w.0.to_vec(),
                reason,
            })?;
        }
        Ok(())
    }

    pub fn element(&self, window: &[i32]) -> Result<SignedPermutation> {
        let w = SignedPermutation::new(window);
        self.validate(&w)?;
        Ok(w)
    }

    /// `(v∘w)(i) = v(w(i))`.
    pub fn compose(
        &self,
        v: &SignedPermutation,
        w: &SignedPermutation,
    ) -> Result<SignedPermutation> {
        self.check_len(v)?;
        self.check_len(w)?;
        let mut out = Window::with_capacity(w.len());
        for (_, r) in self.segments() {
            let (vs, ws) = (&v.0[r.clone()], &w.0[r]);
            out.extend(ws.iter().map(|&x| apply_letter(vs, x)));
        }
        Ok(SignedPermutation(out))
    }

    pub fn inverse(&self, w: &SignedPermutation) -> SignedPermutation {
        let mut out = w.0.clone();
        for (_, r) in self.segments() {
            seg_inverse(&w.0[r.clone()], &mut out[r]);
        }
        SignedPermutation(out)
    }

    /// Coxeter length, i.e. the number of positive roots sent to negative roots.
    pub fn length(&self, w: &SignedPermutation) -> usize {
        self.segments()
            .map(|(f, r)| seg_length(f.ty, &w.0[r]))
            .sum()
    }

    /// Bruhat order, computed factor by factor.
    pub fn bruhat_leq(&self, v: &SignedPermutation, w: &SignedPermutation) -> Result<bool> {
        self.check_len(v)?;
        self.check_len(w)?;
        Ok(self
            .segments()
            .all(|(f, r)| seg_bruhat_leq(f.ty, &v.0[r.clone()], &w.0[r])))
    }

    /// The word metric `d(v, w) = ℓ(v⁻¹w)`.
    pub fn metric(&self, v: &SignedPermutation, w: &SignedPermutation) -> Result<usize> {
        let vw = self.compose(&self.inverse(v), w)?;
        Ok(self.length(&vw))
    }

    /// Whether letter `i` precedes (or equals) letter `j` in the extended
    /// window `u(1) … u(n) u(n̄) … u(1̄)` of the given factor of `u`.
    pub fn u_leq(
        &self,
        factor: usize,
        i: ExtendedIndex,
        j: ExtendedIndex,
        u: &SignedPermutation,
    ) -> Result<bool> {
        self.check_len(u)?;
        let f = *self.factors.get(factor).ok_or(WeylError::IndexOutOfRange {
            index: factor,
            size: self.factors.len(),
        })?;
        let seg = &u.0[self.segment(factor)];
        for x in [i, j] {
            if x.0.unsigned_abs() as usize > f.rank || (f.ty == WeylType::A && x.is_barred()) {
                return Err(WeylError::InvalidIndex(x.0));
            }
        }
        let mut inv = Window::from_elem(0, seg.len());
        seg_inverse(seg, &mut inv);
        Ok(cmp_letters(apply_letter(&inv, i.0), apply_letter(&inv, j.0)) != Ordering::Greater)
    }

    /// All elements, lexicographic under the letter order.
    pub fn elements(&self) -> Result<Vec<SignedPermutation>> {
        self.elements_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn elements_capped(&self, cap: u128) -> Result<Vec<SignedPermutation>> {
        let order = self.order();
        if order > cap {
            return Err(WeylError::CapExceeded { order, cap });
        }
        let mut acc: Vec<Window> = vec![Window::new()];
        for f in &self.factors {
            let seg = seg_elements(f.ty, f.rank);
            let mut next = Vec::with_capacity(acc.len() * seg.len());
            for prefix in &acc {
                for s in &seg {
                    let mut w = prefix.clone();
                    w.extend_from_slice(s);
                    next.push(w);
                }
            }
            acc = next;
        }
        Ok(acc
            .into_iter()
            .map(SignedPermutation::from_window)
            .collect())
    }

    /// Number of simple generators over all factors.
    pub fn generator_count(&self) -> usize {
        self.factors
            .iter()
            .map(|f| f.ty.generator_count(f.rank))
            .sum()
    }

    fn locate_generator(&self, g: usize) -> (usize, usize) {
        let mut g = g;
        for (i, f) in self.factors.iter().enumerate() {
            let c = f.ty.generator_count(f.rank);
            if g < c {
                return (i, g);
            }
            g -= c;
        }
        panic!("generator index out of range")
    }

    /// Whether the `g`-th simple reflection is a right descent of `w`.
    pub fn is_right_descent(&self, w: &SignedPermutation, g: usize) -> bool {
        let (i, local) = self.locate_generator(g);
        seg_descent(self.factors[i].ty, &w.0[self.segment(i)], local)
    }

    /// `w · s_g`.
    pub fn mul_generator(&self, w: &SignedPermutation, g: usize) -> SignedPermutation {
        let (i, local) = self.locate_generator(g);
        let mut out = w.0.clone();
        seg_mul_generator(self.factors[i].ty, &mut out[self.segment(i)], local);
        SignedPermutation(out)
    }

    /// The `g`-th simple reflection as a group element.
    pub fn generator(&self, g: usize) -> SignedPermutation {
        self.mul_generator(&self.identity(), g)
    }

    /// The longest element `w₀`.
    pub fn longest_element(&self) -> SignedPermutation {
        let mut out = Window::new();
        for f in &self.factors {
            let n = f.rank as i32;
            match f.ty {
                WeylType::A => out.extend((1..=n).rev()),
                WeylType::BC => out.extend((1..=n).map(|k| -k)),
                WeylType::D => {
                    out.extend((1..n).map(|k| -k));
                    out.push(if n % 2 == 0 { -n } else { n });
                }
            }
        }
        SignedPermutation(out)
    }

    fn embed_roots(&self, per_factor: impl Fn(WeylType, usize) -> Vec<Vec<i64>>) -> Vec<Vec<i64>> {
        let dim = self.window_len();
        let mut out = Vec::new();
        for (f, r) in self.segments() {
            for root in per_factor(f.ty, f.rank) {
                let mut v = vec![0; dim];
                v[r.clone()].copy_from_slice(&root);
                out.push(v);
            }
        }
        out
    }

    /// Simple roots in ambient coordinates, factor by factor.
    pub fn simple_roots_int(&self) -> Vec<Vec<i64>> {
        self.embed_roots(seg_simple_roots)
    }

    pub fn positive_roots_int(&self) -> Vec<Vec<i64>> {
        self.embed_roots(seg_positive_roots)
    }

    pub fn simple_roots(&self) -> Vec<Vec<Rational>> {
        to_rational(self.simple_roots_int())
    }

    pub fn positive_roots(&self) -> Vec<Vec<Rational>> {
        to_rational(self.positive_roots_int())
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> Vec<Vec<Rational>> {
        let pos = self.positive_roots_int();
        let neg: Vec<Vec<i64>> = pos.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        to_rational(pos.into_iter().chain(neg).collect())
    }

    /// One reflection per positive root.
    pub fn reflections(&self) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for (i, (f, r)) in self.segments().enumerate() {
            for root in seg_positive_roots(f.ty, f.rank) {
                let mut w = self.identity().0;
                w[r.clone()].copy_from_slice(&reflection_window(&root));
                let _ = i;
                out.push(SignedPermutation(w));
            }
        }
        out
    }

    pub fn is_reflection(&self, w: &SignedPermutation) -> bool {
        self.reflections().iter().any(|t| t == w)
    }

    /// `u · ν`: coordinate `|u(i)|` of the result is `sign(u(i)) · ν_i`.
    pub fn act_on_vector(&self, u: &SignedPermutation, nu: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(u)?;
        if nu.len() != self.window_len() {
            return Err(WeylError::DimensionMismatch {
                expected: self.window_len(),
                found: nu.len(),
            });
        }
        let mut out = vec![Rational::zero(); nu.len()];
        for (_, r) in self.segments() {
            let base = r.start;
            for i in r {
                let a = u.0[i];
                let target = base + a.unsigned_abs() as usize - 1;
                out[target] = if a > 0 { nu[i].clone() } else { -nu[i].clone() };
            }
        }
        Ok(out)
    }

    /// The unique `u` with `λ` in the interior of the chamber `C(u)`.
    pub fn chamber_of(&self, lambda: &[Rational]) -> Result<SignedPermutation> {
        if lambda.len() != self.window_len() {
            return Err(WeylError::DimensionMismatch {
                expected: self.window_len(),
                found: lambda.len(),
            });
        }
        let mut out = Window::new();
        for (f, r) in self.segments() {
            out.extend(seg_chamber_of(f.ty, &lambda[r])?);
        }
        Ok(SignedPermutation(out))
    }

    /// Whether every type-A block of `v` sums to zero.
    pub fn in_ambient(&self, v: &[Rational]) -> bool {
        v.len() == self.window_len()
            && self.segments().all(|(f, r)| {
                f.ty != WeylType::A || v[r].iter().fold(Rational::zero(), |a, x| a + x).is_zero()
            })
    }

    /// Linear equations cutting out the ambient space inside `ℚ^dim`
    /// (one sum-zero row per type-A factor).
    pub fn ambient_equations(&self) -> Vec<Vec<Rational>> {
        let dim = self.window_len();
        self.segments()
            .filter(|(f, _)| f.ty == WeylType::A)
            .map(|(_, r)| {
                let mut v = vec![Rational::zero(); dim];
                for x in &mut v[r] {
                    *x = Rational::from_integer(1.into());
                }
                v
            })
            .collect()
    }

    /// The image `u(α)` of an integer root vector.
    pub fn act_on_root(&self, u: &SignedPermutation, alpha: &[i64]) -> Vec<i64> {
        let mut out = vec![0; alpha.len()];
        for (_, r) in self.segments() {
            let base = r.start;
            for i in r {
                let a = u.0[i];
                let target = base + a.unsigned_abs() as usize - 1;
                out[target] = if a > 0 { alpha[i] } else { -alpha[i] };
            }
        }
        out
    }
}

fn to_rational(v: Vec<Vec<i64>>) -> Vec<Vec<Rational>> {
    v.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect()
}
