//! Coxeter matroids, flag matroids and matroid polytopes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Result, WeylError};
use crate::geometry::{dot, lp_edge_feasible, parallel, rat, sub, Rational};
use crate::retraction::{
    algebraic_retract, closest_set, matroid_retract, maximal_elements, MatroidStrategy, Provenance,
    RetractionTable, SubsetM,
};
use crate::weyl::{
    cmp_letters, GroupDescriptor, SignedPermutation, WeylType, DEFAULT_ENUMERATION_CAP,
};

/// Outcome of a matroid check over every `u ∈ W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidVerdict {
    pub is_matroid: bool,
    /// A failing `u` and the extremal elements of `M` found there (zero or
    /// at least two of them).
    pub witness: Option<(SignedPermutation, Vec<SignedPermutation>)>,
    /// On success of the minimal-element check, the full `R^m` table.
    pub table: Option<RetractionTable>,
}

impl MatroidVerdict {
    fn fail(u: SignedPermutation, extremal: Vec<SignedPermutation>) -> Self {
        MatroidVerdict {
            is_matroid: false,
            witness: Some((u, extremal)),
            table: None,
        }
    }
}

/// Checks that `u⁻¹M` has a unique Bruhat-minimal element for every `u`.
pub fn is_coxeter_matroid(m: &SubsetM) -> Result<MatroidVerdict> {
    is_coxeter_matroid_with(m, MatroidStrategy::MinimalSet, DEFAULT_ENUMERATION_CAP)
}

pub fn is_coxeter_matroid_with(
    m: &SubsetM,
    strategy: MatroidStrategy,
    cap: u128,
) -> Result<MatroidVerdict> {
    let mut entries = BTreeMap::new();
    for u in m.group().elements_capped(cap)? {
        match matroid_retract(m, &u, strategy) {
            Ok(v) => {
                entries.insert(u, v);
            }
            Err(WeylError::NotAMatroidAt { u, minimal }) => {
                return Ok(MatroidVerdict::fail(u, minimal));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(MatroidVerdict {
        is_matroid: true,
        witness: None,
        table: Some(RetractionTable::new(Provenance::Matroid, entries)),
    })
}

/// The maximal elements of `M` under `≤^u`.
pub fn u_maximal_elements(m: &SubsetM, u: &SignedPermutation) -> Result<Vec<SignedPermutation>> {
    let group = m.group();
    let ui = group.inverse(u);
    let moved: Result<Vec<_>> = m.iter().map(|w| group.compose(&ui, w)).collect();
    let maximal = maximal_elements(group, &moved?)?;
    let mut back: Vec<_> = maximal
        .iter()
        .map(|x| group.compose(u, x))
        .collect::<Result<_>>()?;
    back.sort();
    Ok(back)
}

/// The maximality property: a unique `≤^u`-maximal element for every `u`.
pub fn has_unique_maximum(m: &SubsetM) -> Result<MatroidVerdict> {
    for u in m.group().elements()? {
        let maximal = u_maximal_elements(m, &u)?;
        if maximal.len() != 1 {
            return Ok(MatroidVerdict::fail(u, maximal));
        }
    }
    Ok(MatroidVerdict {
        is_matroid: true,
        witness: None,
        table: None,
    })
}

/// Compares two sets of letters under `≤^u`: both are sorted by `≤^u` and
/// compared entrywise. `u` is a window of a single factor.
pub fn set_u_leq(a: &[i32], b: &[i32], u: &[i32]) -> bool {
    let n = u.len();
    let mut inv = alloc::vec![0i32; n];
    for (i, &x) in u.iter().enumerate() {
        let p = (i + 1) as i32;
        inv[x.unsigned_abs() as usize - 1] = if x > 0 { p } else { -p };
    }
    let pull = |x: i32| {
        let y = inv[x.unsigned_abs() as usize - 1];
        if x > 0 {
            y
        } else {
            -y
        }
    };
    let mut pa: Vec<i32> = a.iter().map(|&x| pull(x)).collect();
    let mut pb: Vec<i32> = b.iter().map(|&x| pull(x)).collect();
    pa.sort_by(|x, y| cmp_letters(*x, *y));
    pb.sort_by(|x, y| cmp_letters(*x, *y));
    pa.len() == pb.len()
        && pa
            .iter()
            .zip(&pb)
            .all(|(x, y)| cmp_letters(*x, *y) != Ordering::Greater)
}

/// `F(v) ≤^u F(w)`: every prefix set of `v` is `≤^u` the prefix set of `w`
/// of the same size, factor by factor.
pub fn flag_order_leq(
    group: &GroupDescriptor,
    v: &SignedPermutation,
    w: &SignedPermutation,
    u: &SignedPermutation,
) -> Result<bool> {
    group.validate(v)?;
    group.validate(w)?;
    group.validate(u)?;
    for (f, r) in group.segments() {
        let (vs, ws, us) = (
            &v.window()[r.clone()],
            &w.window()[r.clone()],
            &u.window()[r],
        );
        for k in 1..=f.rank {
            if !set_u_leq(&vs[..k], &ws[..k], us) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The flag-matroid maximality property: for every `u` some member's flag
/// is `≤^u`-above the flags of all members.
pub fn is_flag_matroid(m: &SubsetM) -> Result<MatroidVerdict> {
    let group = m.group();
    let members: Vec<&SignedPermutation> = m.iter().collect();
    for u in group.elements()? {
        let mut top = Vec::new();
        for v in &members {
            let mut above_all = true;
            for w in &members {
                if !flag_order_leq(group, w, v, &u)? {
                    above_all = false;
                    break;
                }
            }
            if above_all {
                top.push((*v).clone());
            }
        }
        if top.len() != 1 {
            return Ok(MatroidVerdict::fail(u, top));
        }
    }
    Ok(MatroidVerdict {
        is_matroid: true,
        witness: None,
        table: None,
    })
}

/// The default base point.
///
/// The point lies in the open fundamental chamber: `(1, …, n)` on type A
/// factors and `(−n, …, −1)` on types BC and D. Only for such `ν` does the
/// root-parallel edge property coincide with the Coxeter matroid property;
/// a base point in another chamber `C(x)` tests the right translate `Mx`.
pub fn default_base_point(group: &GroupDescriptor) -> Vec<Rational> {
    let mut nu = Vec::with_capacity(group.window_len());
    for f in group.factors() {
        let n = f.rank as i64;
        match f.ty {
            WeylType::A => nu.extend((1..=n).map(rat)),
            WeylType::BC | WeylType::D => nu.extend((-n..=-1).map(rat)),
        }
    }
    nu
}

/// Whether `ν` lies in the open fundamental chamber `C(e)`.
pub fn is_dominant(group: &GroupDescriptor, nu: &[Rational]) -> bool {
    nu.len() == group.window_len()
        && group
            .simple_roots()
            .iter()
            .all(|a| dot(a, nu).is_negative())
}

/// Whether no reflection fixes `ν`, i.e. `⟨α, ν⟩ ≠ 0` for every root.
pub fn is_regular(group: &GroupDescriptor, nu: &[Rational]) -> bool {
    nu.len() == group.window_len() && group.positive_roots().iter().all(|a| !dot(a, nu).is_zero())
}

/// The polytope `Δ_M = conv{w·ν : w ∈ M}` and its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    pub base_point: Vec<Rational>,
    /// Members of `M` in order; `vertices[i] = members[i]·ν`.
    pub members: Vec<SignedPermutation>,
    pub vertices: Vec<Vec<Rational>>,
    pub edges: Vec<(usize, usize)>,
    /// Edges whose direction is not parallel to any root.
    pub offending: Vec<(usize, usize)>,
}

impl PhiReport {
    /// Every edge of `Δ_M` is parallel to a root.
    pub fn is_phi(&self) -> bool {
        self.offending.is_empty()
    }
}

/// Computes every edge of `Δ_M` with the exact LP and tests each edge
/// direction against the roots.
pub fn phi_polytope_check(m: &SubsetM, nu: &[Rational]) -> Result<PhiReport> {
    let group = m.group();
    if nu.len() != group.window_len() {
        return Err(WeylError::DimensionMismatch {
            expected: group.window_len(),
            found: nu.len(),
        });
    }
    if !is_regular(group, nu) {
        return Err(WeylError::DegenerateBase);
    }
    let members: Vec<SignedPermutation> = m.iter().cloned().collect();
    let vertices: Vec<Vec<Rational>> = members
        .iter()
        .map(|w| group.act_on_vector(w, nu))
        .collect::<Result<_>>()?;
    let roots = group.positive_roots();
    let mut edges = Vec::new();
    let mut offending = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let others: Vec<Vec<Rational>> = vertices
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, v)| v.clone())
                .collect();
            if !lp_edge_feasible(&vertices[i], &vertices[j], &others)? {
                continue;
            }
            edges.push((i, j));
            let dir = sub(&vertices[i], &vertices[j]);
            if !roots.iter().any(|r| parallel(&dir, r)) {
                offending.push((i, j));
            }
        }
    }
    Ok(PhiReport {
        base_point: nu.to_vec(),
        members,
        vertices,
        edges,
        offending,
    })
}

/// The Bruhat interval `[v, w]`.
pub fn bruhat_interval(
    group: &GroupDescriptor,
    v: &SignedPermutation,
    w: &SignedPermutation,
) -> Result<SubsetM> {
    group.validate(v)?;
    group.validate(w)?;
    if !group.bruhat_leq(v, w)? {
        return Err(WeylError::NotComparable {
            v: v.clone(),
            w: w.clone(),
        });
    }
    let mut members = Vec::new();
    for z in group.elements()? {
        if group.bruhat_leq(v, &z)? && group.bruhat_leq(&z, w)? {
            members.push(z);
        }
    }
    SubsetM::new(group, members)
}

/// The seven lines of the Fano plane.
pub const FANO_LINES: [[i32; 3]; 7] = [
    [1, 2, 4],
    [1, 3, 5],
    [1, 6, 7],
    [2, 3, 6],
    [2, 5, 7],
    [3, 4, 7],
    [4, 5, 6],
];

/// `{w ∈ S_7 : {w(1), w(2), w(3)} is not a Fano line}`.
pub fn fano_matroid_s7() -> SubsetM {
    let s7 = GroupDescriptor::symmetric(7).expect("S_7 is valid");
    let members = s7
        .elements()
        .expect("S_7 is below the enumeration cap")
        .into_iter()
        .filter(|w| {
            let mut head = [w.window()[0], w.window()[1], w.window()[2]];
            head.sort_unstable();
            !FANO_LINES.contains(&head)
        });
    SubsetM::new(&s7, members).expect("the Fano subset is nonempty")
}

/// The three equivalent statements for a two-element subset `{x, y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoElementReport {
    /// For every `u` the greedy retraction `R^a(u)` is the unique member of
    /// `M` closest to `u`.
    pub unique_closest: bool,
    pub coxeter_matroid: bool,
    pub flag_matroid: bool,
    /// `x⁻¹y` is a reflection, i.e. `x` and `y` span a GKM edge.
    pub reflection_difference: bool,
}

impl TwoElementReport {
    pub fn consistent(&self) -> bool {
        self.unique_closest == self.coxeter_matroid
            && self.coxeter_matroid == self.flag_matroid
            && self.flag_matroid == self.reflection_difference
    }
}

pub fn two_element_analysis(m: &SubsetM) -> Result<TwoElementReport> {
    let group = m.group();
    if m.len() != 2 {
        return Err(WeylError::WrongShape {
            expected: "a two-element subset",
            found: "a subset of another size",
        });
    }
    if !group.factors().iter().all(|f| f.ty == WeylType::A) {
        return Err(WeylError::WrongShape {
            expected: "a type A group",
            found: "a group with factors of type BC or D",
        });
    }
    let unique_closest = retraction_is_unique_closest(m)?;
    let mut it = m.iter();
    let (x, y) = (it.next().unwrap(), it.next().unwrap());
    let diff = group.compose(&group.inverse(x), y)?;
    Ok(TwoElementReport {
        unique_closest,
        coxeter_matroid: is_coxeter_matroid(m)?.is_matroid,
        flag_matroid: is_flag_matroid(m)?.is_matroid,
        reflection_difference: group.is_reflection(&diff),
    })
}

/// Whether, for every `u`, `R^a(u)` is the only member of `M` at distance
/// `d(u, M)` from `u`.
pub fn retraction_is_unique_closest(m: &SubsetM) -> Result<bool> {
    for u in m.group().elements()? {
        let (_, argmin) = closest_set(m, &u)?;
        if argmin.len() != 1 || argmin[0] != algebraic_retract(m, &u)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches subsets of size `sizes` of a small group for one in which every
/// `u` has `R^a(u)` as its unique closest member although the subset is not
/// a Coxeter matroid. Subsets are visited in lexicographic order of member indices;
/// returns the first hit and the number of subsets examined.
pub fn search_closest_but_not_matroid(
    group: &GroupDescriptor,
    sizes: core::ops::RangeInclusive<usize>,
    max_subsets: usize,
) -> Result<(Option<SubsetM>, usize)> {
    let all = group.elements()?;
    let mut examined = 0;
    for k in sizes {
        if k == 0 || k > all.len() {
            continue;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if examined >= max_subsets {
                return Ok((None, examined));
            }
            examined += 1;
            let m = SubsetM::new(group, idx.iter().map(|&i| all[i].clone()))?;
            if retraction_is_unique_closest(&m)? && !is_coxeter_matroid(&m)?.is_matroid {
                return Ok((Some(m), examined));
            }
            // Next k-combination.
            let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + all.len() - k) else {
                break;
            };
            idx[pos] += 1;
            for q in pos + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    Ok((None, examined))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sp(w: &[i32]) -> SignedPermutation {
        SignedPermutation::new(w)
    }

    fn s3() -> GroupDescriptor {
        GroupDescriptor::symmetric(3).unwrap()
    }

    #[test]
    fn trapezoid_is_a_matroid() {
        let g = s3();
        let m =
            SubsetM::from_windows(&g, &[&[1, 2, 3], &[2, 1, 3], &[1, 3, 2], &[3, 1, 2]]).unwrap();
        assert!(is_coxeter_matroid(&m).unwrap().is_matroid);
        assert!(has_unique_maximum(&m).unwrap().is_matroid);
        assert!(is_flag_matroid(&m).unwrap().is_matroid);
        let report = phi_polytope_check(&m, &default_base_point(&g)).unwrap();
        assert!(report.is_phi());
        assert_eq!(report.edges.len(), 4);
        let pos = |w: &[i32]| report.members.iter().position(|m| *m == sp(w)).unwrap();
        let is_edge = |a: &[i32], b: &[i32]| {
            let (i, j) = (pos(a), pos(b));
            report.edges.contains(&(i.min(j), i.max(j)))
        };
        // The diagonals of the quadrilateral are 123–312 and 132–213.
        assert!(!is_edge(&[1, 2, 3], &[3, 1, 2]));
        assert!(!is_edge(&[1, 3, 2], &[2, 1, 3]));
        assert!(is_edge(&[2, 1, 3], &[3, 1, 2]));
    }

    #[test]
    fn two_point_non_matroid() {
        let g = s3();
        let m = SubsetM::from_windows(&g, &[&[2, 1, 3], &[1, 3, 2]]).unwrap();
        let verdict = is_coxeter_matroid(&m).unwrap();
        assert!(!verdict.is_matroid);
        assert_eq!(verdict.witness.unwrap().0, g.identity());
        assert!(!has_unique_maximum(&m).unwrap().is_matroid);
        let report = phi_polytope_check(&m, &default_base_point(&g)).unwrap();
        assert_eq!(report.edges, vec![(0, 1)]);
        assert!(!report.is_phi());
    }

    #[test]
    fn permutohedron_is_phi() {
        let g = s3();
        let m = SubsetM::full(&g).unwrap();
        let report = phi_polytope_check(&m, &default_base_point(&g)).unwrap();
        assert_eq!(report.edges.len(), 6);
        assert!(report.is_phi());
    }

    #[test]
    fn degenerate_base_point_rejected() {
        let g = s3();
        let m = SubsetM::full(&g).unwrap();
        let nu = vec![rat(1), rat(1), rat(2)];
        assert_eq!(phi_polytope_check(&m, &nu), Err(WeylError::DegenerateBase));
        let bc2 = GroupDescriptor::simple(WeylType::BC, 2).unwrap();
        assert!(!is_regular(&bc2, &[rat(0), rat(1)]));
        assert!(!is_regular(&bc2, &[rat(-1), rat(1)]));
        assert!(is_regular(&bc2, &[rat(1), rat(2)]));
    }

    #[test]
    fn intervals() {
        let g = s3();
        assert_eq!(
            bruhat_interval(&g, &g.identity(), &sp(&[3, 2, 1]))
                .unwrap()
                .len(),
            6
        );
        let iv = bruhat_interval(&g, &sp(&[1, 3, 2]), &sp(&[3, 1, 2])).unwrap();
        assert_eq!(
            iv.iter().cloned().collect::<Vec<_>>(),
            vec![sp(&[1, 3, 2]), sp(&[3, 1, 2])]
        );
        assert!(matches!(
            bruhat_interval(&g, &sp(&[2, 1, 3]), &sp(&[1, 3, 2])),
            Err(WeylError::NotComparable { .. })
        ));
    }

    #[test]
    fn set_order_example() {
        let u = [1, -4, 2, 3];
        assert!(set_u_leq(&[2, -4], &[-3, 2], &u));
        assert!(!set_u_leq(&[-3, 2], &[2, -4], &u));
    }

    #[test]
    fn two_element_examples() {
        let s4 = GroupDescriptor::symmetric(4).unwrap();
        let edge = SubsetM::from_windows(&s4, &[&[1, 2, 3, 4], &[4, 2, 3, 1]]).unwrap();
        let r = two_element_analysis(&edge).unwrap();
        assert!(r.unique_closest && r.coxeter_matroid && r.flag_matroid && r.reflection_difference);
        let far = SubsetM::from_windows(&s4, &[&[2, 1, 4, 3], &[4, 3, 1, 2]]).unwrap();
        let r = two_element_analysis(&far).unwrap();
        assert!(
            !r.unique_closest && !r.coxeter_matroid && !r.flag_matroid && !r.reflection_difference
        );
    }

    #[test]
    fn search_finds_nothing_in_small_sizes() {
        let (hit, examined) = search_closest_but_not_matroid(&s3(), 1..=3, 1000).unwrap();
        assert!(hit.is_none());
        assert_eq!(examined, 6 + 15 + 20);
    }
}
