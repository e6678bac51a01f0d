//! Retractions of a Weyl group onto a subset `M`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Result, WeylError};
use crate::weyl::{GroupDescriptor, SignedPermutation, WeylType, DEFAULT_ENUMERATION_CAP};

/// Prefix trie over the windows of one factor: the nodes at depth `k` are
/// exactly the length-`k` prefixes `(w(1), …, w(k))` of members.
#[derive(Clone, Debug, Default)]
pub struct PrefixTrie {
    nodes: Vec<BTreeMap<i32, usize>>,
}

impl PrefixTrie {
    pub const ROOT: usize = 0;

    fn new() -> Self {
        PrefixTrie {
            nodes: alloc::vec![BTreeMap::new()],
        }
    }

    fn insert(&mut self, word: &[i32]) {
        let mut node = Self::ROOT;
        for &a in word {
            node = match self.nodes[node].get(&a) {
                Some(&next) => next,
                None => {
                    let next = self.nodes.len();
                    self.nodes.push(BTreeMap::new());
                    self.nodes[node].insert(a, next);
                    next
                }
            };
        }
    }

    pub fn child(&self, node: usize, letter: i32) -> Option<usize> {
        self.nodes[node].get(&letter).copied()
    }

    pub fn contains_prefix(&self, prefix: &[i32]) -> bool {
        let mut node = Self::ROOT;
        for &a in prefix {
            match self.child(node, a) {
                Some(next) => node = next,
                None => return false,
            }
        }
        true
    }

    /// The letters that extend the prefix at `node`.
    pub fn extensions(&self, node: usize) -> impl Iterator<Item = i32> + '_ {
        self.nodes[node].keys().copied()
    }
}

/// A nonempty subset of a Weyl group, indexed for the greedy retraction.
#[derive(Clone, Debug)]
pub struct SubsetM {
    group: GroupDescriptor,
    elements: BTreeSet<SignedPermutation>,
    /// One trie per factor, present iff `M` is the product of its projections.
    tries: Option<Vec<PrefixTrie>>,
}

impl PartialEq for SubsetM {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.elements == other.elements
    }
}

impl Eq for SubsetM {}

impl SubsetM {
    pub fn new<I>(group: &GroupDescriptor, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = SignedPermutation>,
    {
        let mut set = BTreeSet::new();
        for w in elements {
            group.validate(&w)?;
            set.insert(w);
        }
        if set.is_empty() {
            return Err(WeylError::EmptySubset);
        }
        let mut projections: Vec<BTreeSet<&[i32]>> = (0..group.factors().len())
            .map(|_| BTreeSet::new())
            .collect();
        for w in &set {
            for (i, (_, r)) in group.segments().enumerate() {
                projections[i].insert(&w.window()[r]);
            }
        }
        let product_size = projections
            .iter()
            .try_fold(1usize, |acc, p| acc.checked_mul(p.len()));
        let tries = (product_size == Some(set.len())).then(|| {
            projections
                .iter()
                .map(|p| {
                    let mut t = PrefixTrie::new();
                    for w in p {
                        t.insert(w);
                    }
                    t
                })
                .collect()
        });
        Ok(SubsetM {
            group: group.clone(),
            elements: set,
            tries,
        })
    }

    /// Builds a subset from raw windows.
    pub fn from_windows(group: &GroupDescriptor, windows: &[&[i32]]) -> Result<Self> {
        Self::new(group, windows.iter().map(|w| SignedPermutation::new(w)))
    }

    /// The whole group.
    pub fn full(group: &GroupDescriptor) -> Result<Self> {
        Self::new(group, group.elements()?)
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn elements(&self) -> &BTreeSet<SignedPermutation> {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &SignedPermutation> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &SignedPermutation) -> bool {
        self.elements.contains(w)
    }

    pub fn is_product(&self) -> bool {
        self.tries.is_some()
    }

    /// The trie of factor `i`, if `M` is a product.
    pub fn trie(&self, factor: usize) -> Option<&PrefixTrie> {
        self.tries.as_ref().map(|t| &t[factor])
    }

    /// The left translate `vM`.
    pub fn translate(&self, v: &SignedPermutation) -> Result<Self> {
        let moved: Result<Vec<_>> = self.iter().map(|w| self.group.compose(v, w)).collect();
        Self::new(&self.group, moved?)
    }
}

/// The greedy retraction: at step `k` take the smallest unused letter `i`
/// (in the order `1 < … < n < n̄ < … < 1̄`) whose image `u(i)` extends the
/// current prefix to a prefix of some member. Applied factor by factor.
pub fn algebraic_retract(m: &SubsetM, u: &SignedPermutation) -> Result<SignedPermutation> {
    let group = m.group();
    group.validate(u)?;
    let tries = m.tries.as_ref().ok_or(WeylError::NotAProduct)?;
    let mut out: Vec<i32> = Vec::with_capacity(u.len());
    for ((f, r), trie) in group.segments().zip(tries) {
        let us = &u.window()[r];
        let n = f.rank as i32;
        let mut candidates: Vec<i32> = (1..=n).collect();
        if f.ty != WeylType::A {
            candidates.extend((1..=n).rev().map(|k| -k));
        }
        let mut used = alloc::vec![false; f.rank + 1];
        let mut node = PrefixTrie::ROOT;
        for _ in 0..f.rank {
            let (i, image, next) = candidates
                .iter()
                .filter(|i| !used[i.unsigned_abs() as usize])
                .find_map(|&i| {
                    let image = if i > 0 {
                        us[i as usize - 1]
                    } else {
                        -us[(-i) as usize - 1]
                    };
                    trie.child(node, image).map(|next| (i, image, next))
                })
                .expect("every prefix of a member extends within the trie");
            used[i.unsigned_abs() as usize] = true;
            out.push(image);
            node = next;
        }
    }
    Ok(SignedPermutation::from(out))
}

/// How [`matroid_retract`] searches for the `≤^u`-minimum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MatroidStrategy {
    /// Compute all Bruhat-minimal elements of `u⁻¹M`.
    #[default]
    MinimalSet,
    /// Try the greedy candidate first and verify it is below every member;
    /// fall back to [`MatroidStrategy::MinimalSet`] if it is not.
    GreedyFirst,
}

/// Bruhat-minimal elements of `xs`.
pub fn minimal_elements(
    group: &GroupDescriptor,
    xs: &[SignedPermutation],
) -> Result<Vec<SignedPermutation>> {
    let mut by_len: Vec<(usize, &SignedPermutation)> =
        xs.iter().map(|x| (group.length(x), x)).collect();
    by_len.sort();
    let mut minimal: Vec<(usize, &SignedPermutation)> = Vec::new();
    for (l, x) in by_len {
        let mut dominated = false;
        for &(lm, m) in &minimal {
            if lm < l && group.bruhat_leq(m, x)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            minimal.push((l, x));
        }
    }
    Ok(minimal.into_iter().map(|(_, x)| x.clone()).collect())
}

/// Bruhat-maximal elements of `xs`.
pub fn maximal_elements(
    group: &GroupDescriptor,
    xs: &[SignedPermutation],
) -> Result<Vec<SignedPermutation>> {
    let mut by_len: Vec<(usize, &SignedPermutation)> =
        xs.iter().map(|x| (group.length(x), x)).collect();
    by_len.sort_by(|a, b| b.cmp(a));
    let mut maximal: Vec<(usize, &SignedPermutation)> = Vec::new();
    for (l, x) in by_len {
        let mut dominated = false;
        for &(lm, m) in &maximal {
            if lm > l && group.bruhat_leq(x, m)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            maximal.push((l, x));
        }
    }
    Ok(maximal.into_iter().map(|(_, x)| x.clone()).collect())
}

fn minimum_by_set(m: &SubsetM, u: &SignedPermutation) -> Result<SignedPermutation> {
    let group = m.group();
    let ui = group.inverse(u);
    let moved: Result<Vec<_>> = m.iter().map(|w| group.compose(&ui, w)).collect();
    let minimal = minimal_elements(group, &moved?)?;
    let back: Result<Vec<_>> = minimal.iter().map(|x| group.compose(u, x)).collect();
    let mut back = back?;
    if back.len() == 1 {
        Ok(back.pop().unwrap())
    } else {
        back.sort();
        Err(WeylError::NotAMatroidAt {
            u: u.clone(),
            minimal: back,
        })
    }
}

/// Whether `u⁻¹c ≤ u⁻¹w` for every `w ∈ M`.
pub fn is_u_minimum(m: &SubsetM, u: &SignedPermutation, c: &SignedPermutation) -> Result<bool> {
    let group = m.group();
    let ui = group.inverse(u);
    let uc = group.compose(&ui, c)?;
    let lc = group.length(&uc);
    for w in m.iter() {
        let uw = group.compose(&ui, w)?;
        if group.length(&uw) < lc || !group.bruhat_leq(&uc, &uw)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique `v ∈ M` with `u⁻¹v ≤ u⁻¹w` for all `w ∈ M`.
pub fn matroid_retract(
    m: &SubsetM,
    u: &SignedPermutation,
    strategy: MatroidStrategy,
) -> Result<SignedPermutation> {
    m.group().validate(u)?;
    if strategy == MatroidStrategy::GreedyFirst && m.is_product() {
        let c = algebraic_retract(m, u)?;
        if is_u_minimum(m, u, &c)? {
            return Ok(c);
        }
    }
    minimum_by_set(m, u)
}

/// `d(u, M)` together with every minimiser, by exhaustive search.
pub fn closest_set(m: &SubsetM, u: &SignedPermutation) -> Result<(usize, Vec<SignedPermutation>)> {
    let group = m.group();
    group.validate(u)?;
    let mut best = usize::MAX;
    let mut argmin = Vec::new();
    for w in m.iter() {
        let d = group.metric(u, w)?;
        if d < best {
            best = d;
            argmin.clear();
        }
        if d == best {
            argmin.push(w.clone());
        }
    }
    Ok((best, argmin))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Algebraic,
    Matroid,
    GeometricLimit,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Algebraic => "algebraic",
            Provenance::Matroid => "matroid",
            Provenance::GeometricLimit => "geometric-limit",
        }
    }
}

/// `u ↦ R(u)` over a whole group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractionTable {
    provenance: Provenance,
    entries: BTreeMap<SignedPermutation, SignedPermutation>,
}

impl RetractionTable {
    pub fn new(
        provenance: Provenance,
        entries: BTreeMap<SignedPermutation, SignedPermutation>,
    ) -> Self {
        RetractionTable {
            provenance,
            entries,
        }
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn entries(&self) -> &BTreeMap<SignedPermutation, SignedPermutation> {
        &self.entries
    }

    pub fn get(&self, u: &SignedPermutation) -> Option<&SignedPermutation> {
        self.entries.get(u)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SignedPermutation, &SignedPermutation)> {
        self.entries.iter()
    }

    /// Whether both tables assign the same value to every element,
    /// regardless of provenance.
    pub fn same_values(&self, other: &RetractionTable) -> bool {
        self.entries == other.entries
    }

    /// The image set `{R(u)}`.
    pub fn image(&self) -> BTreeSet<SignedPermutation> {
        self.entries.values().cloned().collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Algebraic,
    Matroid(MatroidStrategy),
}

pub fn retraction_table(m: &SubsetM, method: Method) -> Result<RetractionTable> {
    retraction_table_capped(m, method, DEFAULT_ENUMERATION_CAP)
}

pub fn retraction_table_capped(m: &SubsetM, method: Method, cap: u128) -> Result<RetractionTable> {
    let mut entries = BTreeMap::new();
    for u in m.group().elements_capped(cap)? {
        let r = match method {
            Method::Algebraic => algebraic_retract(m, &u)?,
            Method::Matroid(s) => matroid_retract(m, &u, s)?,
        };
        entries.insert(u, r);
    }
    let provenance = match method {
        Method::Algebraic => Provenance::Algebraic,
        Method::Matroid(_) => Provenance::Matroid,
    };
    Ok(RetractionTable::new(provenance, entries))
}
