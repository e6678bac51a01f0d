//! Maximal cones of a torus orbit fan, assembled from a retraction table.
//!
//! The cone of `y` is the union of the chambers `C(u)` with `R(u) = y`. It
//! is kept as a list of chamber labels; its bounding inequalities are the
//! walls `⟨u(α_i), λ⟩ ≤ 0` whose neighbouring chamber `C(u·s_i)` has a
//! different image.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Result, WeylError};
use crate::geometry::{dot, rank_of, rat, HalfspaceCone, Membership, Rational};
use crate::retraction::RetractionTable;
use crate::weyl::{GroupDescriptor, SignedPermutation, WeylType};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitFan {
    group: GroupDescriptor,
    table: RetractionTable,
    cones: BTreeMap<SignedPermutation, Vec<SignedPermutation>>,
    walls: BTreeMap<SignedPermutation, Vec<Vec<Rational>>>,
    cone_lineality: BTreeMap<SignedPermutation, Vec<Vec<Rational>>>,
    lineality: Vec<Vec<Rational>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grade {
    /// `λ` is interior to a single chamber.
    Interior,
    /// `λ` lies on chamber walls, and every chamber containing it has the
    /// same image.
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeQueryResult {
    pub y: SignedPermutation,
    pub grade: Grade,
}

/// A point of `Int C(u)`: `u` applied to a fixed point of `Int C(e)`.
pub fn chamber_interior_point(
    group: &GroupDescriptor,
    u: &SignedPermutation,
) -> Result<Vec<Rational>> {
    let mut rho = Vec::with_capacity(group.window_len());
    for f in group.factors() {
        let n = f.rank as i64;
        match f.ty {
            WeylType::A => rho.extend((1..=n).map(|j| rat(2 * j - n - 1))),
            WeylType::BC => rho.extend((1..=n).map(|j| rat(j - n - 1))),
            WeylType::D => rho.extend((1..=n).map(|j| rat(j - n))),
        }
    }
    group.act_on_vector(u, &rho)
}

fn same_subspace(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let joint: Vec<Vec<Rational>> = a.iter().chain(b).cloned().collect();
    rank_of(&joint) == a.len() && rank_of(a) == a.len() && rank_of(b) == b.len()
}

/// Groups chambers by image and computes the lineality of every cone.
pub fn build_fan(group: &GroupDescriptor, table: &RetractionTable) -> Result<OrbitFan> {
    let elements = group.elements()?;
    if table.len() != elements.len() {
        return Err(WeylError::IncompleteTable);
    }
    let mut cones: BTreeMap<SignedPermutation, Vec<SignedPermutation>> = BTreeMap::new();
    for u in &elements {
        let y = table.get(u).ok_or(WeylError::IncompleteTable)?;
        cones.entry(y.clone()).or_default().push(u.clone());
    }
    let simple = group.simple_roots_int();
    let equalities = group.ambient_equations();
    let mut walls = BTreeMap::new();
    let mut cone_lineality = BTreeMap::new();
    for (y, chambers) in &cones {
        let mut normals: BTreeSet<Vec<i64>> = BTreeSet::new();
        for u in chambers {
            for (g, alpha) in simple.iter().enumerate() {
                let nb = group.mul_generator(u, g);
                if table.get(&nb) != Some(y) {
                    normals.insert(group.act_on_root(u, alpha));
                }
            }
        }
        let normals: Vec<Vec<Rational>> = normals
            .into_iter()
            .map(|v| v.into_iter().map(rat).collect())
            .collect();
        let cone = HalfspaceCone::new(group.window_len(), normals.clone(), equalities.clone())?;
        cone_lineality.insert(y.clone(), cone.lineality());
        walls.insert(y.clone(), normals);
    }
    let mut linealities = cone_lineality.values();
    let lineality = linealities.next().cloned().unwrap_or_default();
    if linealities.any(|l| !same_subspace(l, &lineality)) {
        return Err(WeylError::InconsistentLineality);
    }
    Ok(OrbitFan {
        group: group.clone(),
        table: table.clone(),
        cones,
        walls,
        cone_lineality,
        lineality,
    })
}

impl OrbitFan {
    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn table(&self) -> &RetractionTable {
        &self.table
    }

    /// `y ↦` chambers `u` with `R(u) = y`.
    pub fn cones(&self) -> &BTreeMap<SignedPermutation, Vec<SignedPermutation>> {
        &self.cones
    }

    /// Outward normals of the walls bounding the cone of `y`.
    pub fn walls(&self, y: &SignedPermutation) -> Option<&[Vec<Rational>]> {
        self.walls.get(y).map(Vec::as_slice)
    }

    /// A basis of the common lineality space.
    pub fn lineality(&self) -> &[Vec<Rational>] {
        &self.lineality
    }

    /// `y ↦` whether the cone of `y` contains no line.
    pub fn strong_convexity_report(&self) -> BTreeMap<SignedPermutation, bool> {
        self.cone_lineality
            .iter()
            .map(|(y, l)| (y.clone(), l.is_empty()))
            .collect()
    }

    /// Whether the chambers of each cone are connected through shared facets.
    pub fn connectivity_report(&self) -> BTreeMap<SignedPermutation, bool> {
        let gens = self.group.generator_count();
        self.cones
            .iter()
            .map(|(y, chambers)| {
                let members: BTreeSet<&SignedPermutation> = chambers.iter().collect();
                let mut seen = BTreeSet::new();
                let mut queue = VecDeque::new();
                seen.insert(chambers[0].clone());
                queue.push_back(chambers[0].clone());
                while let Some(u) = queue.pop_front() {
                    for g in 0..gens {
                        let nb = self.group.mul_generator(&u, g);
                        if members.contains(&nb) && seen.insert(nb.clone()) {
                            queue.push_back(nb);
                        }
                    }
                }
                (y.clone(), seen.len() == chambers.len())
            })
            .collect()
    }

    /// Whether each cone equals the intersection of its wall halfspaces:
    /// interior points of member chambers satisfy every wall inequality and
    /// interior points of all other chambers violate at least one.
    pub fn convexity_report(&self) -> Result<BTreeMap<SignedPermutation, bool>> {
        let mut points = BTreeMap::new();
        for u in self.table.entries().keys() {
            points.insert(u.clone(), chamber_interior_point(&self.group, u)?);
        }
        let mut out = BTreeMap::new();
        for (y, walls) in &self.walls {
            let convex = points.iter().all(|(u, p)| {
                let inside = walls.iter().all(|n| !dot(n, p).is_positive());
                inside == (self.table.get(u) == Some(y))
            });
            out.insert(y.clone(), convex);
        }
        Ok(out)
    }

    /// The cone containing `λ`.
    pub fn query(&self, lambda: &[Rational]) -> Result<ConeQueryResult> {
        if lambda.len() != self.group.window_len() {
            return Err(WeylError::DimensionMismatch {
                expected: self.group.window_len(),
                found: lambda.len(),
            });
        }
        if !self.group.in_ambient(lambda) {
            return Err(WeylError::NotInAmbient);
        }
        match self.group.chamber_of(lambda) {
            Ok(u) => {
                let y = self.table.get(&u).ok_or(WeylError::IncompleteTable)?;
                return Ok(ConeQueryResult {
                    y: y.clone(),
                    grade: Grade::Interior,
                });
            }
            Err(WeylError::BoundaryPoint) => {}
            Err(e) => return Err(e),
        }
        let mut images = BTreeSet::new();
        for (u, y) in self.table.iter() {
            let chamber = HalfspaceCone::chamber(&self.group, u)?;
            if chamber.membership(lambda)? != Membership::Outside {
                images.insert(y.clone());
            }
        }
        if images.len() == 1 {
            Ok(ConeQueryResult {
                y: images.pop_first().unwrap(),
                grade: Grade::Boundary,
            })
        } else {
            Err(WeylError::AmbiguousBoundary)
        }
    }

    /// Whether `λ` lies on a wall of the cone of `y` (and in the cone).
    pub fn on_cone_boundary(&self, y: &SignedPermutation, lambda: &[Rational]) -> bool {
        self.walls.get(y).is_some_and(|walls| {
            walls.iter().all(|n| !dot(n, lambda).is_positive())
                && walls.iter().any(|n| dot(n, lambda).is_zero())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::parallel;
    use crate::retraction::Provenance;
    use alloc::vec;

    fn sp(w: &[i32]) -> SignedPermutation {
        SignedPermutation::new(w)
    }

    fn table(pairs: &[([i32; 3], [i32; 3])]) -> RetractionTable {
        RetractionTable::new(
            Provenance::GeometricLimit,
            pairs.iter().map(|(u, y)| (sp(u), sp(y))).collect(),
        )
    }

    fn y_table() -> RetractionTable {
        table(&[
            ([1, 2, 3], [1, 2, 3]),
            ([2, 1, 3], [2, 1, 3]),
            ([2, 3, 1], [2, 1, 3]),
            ([3, 2, 1], [3, 1, 2]),
            ([3, 1, 2], [3, 1, 2]),
            ([1, 3, 2], [1, 3, 2]),
        ])
    }

    fn y_prime_table() -> RetractionTable {
        table(&[
            ([1, 2, 3], [1, 2, 3]),
            ([2, 1, 3], [1, 2, 3]),
            ([2, 3, 1], [3, 2, 1]),
            ([3, 2, 1], [3, 2, 1]),
            ([3, 1, 2], [3, 2, 1]),
            ([1, 3, 2], [1, 2, 3]),
        ])
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn fan_of_y() {
        let s3 = GroupDescriptor::symmetric(3).unwrap();
        let fan = build_fan(&s3, &y_table()).unwrap();
        assert_eq!(fan.cones().len(), 4);
        assert_eq!(
            fan.cones()[&sp(&[2, 1, 3])],
            vec![sp(&[2, 1, 3]), sp(&[2, 3, 1])]
        );
        assert!(fan.lineality().is_empty());
        assert!(fan.strong_convexity_report().values().all(|&b| b));
        assert!(fan.connectivity_report().values().all(|&b| b));
        assert!(fan.convexity_report().unwrap().values().all(|&b| b));
    }

    #[test]
    fn fan_of_y_prime() {
        let s3 = GroupDescriptor::symmetric(3).unwrap();
        let fan = build_fan(&s3, &y_prime_table()).unwrap();
        assert_eq!(fan.cones().len(), 2);
        assert_eq!(fan.lineality().len(), 1);
        assert!(parallel(&fan.lineality()[0], &v(&[1, -2, 1])));
        assert!(fan.strong_convexity_report().values().all(|&b| !b));
    }

    #[test]
    fn queries() {
        let s3 = GroupDescriptor::symmetric(3).unwrap();
        let fan = build_fan(&s3, &y_table()).unwrap();
        // a_2 < a_3 < a_1: the chamber of 231.
        let r = fan.query(&v(&[2, -2, 0])).unwrap();
        assert_eq!(
            r,
            ConeQueryResult {
                y: sp(&[2, 1, 3]),
                grade: Grade::Interior
            }
        );
        // a_2 < a_1 = a_3: the wall between C(213) and C(231).
        let r = fan.query(&v(&[1, -2, 1])).unwrap();
        assert_eq!(
            r,
            ConeQueryResult {
                y: sp(&[2, 1, 3]),
                grade: Grade::Boundary
            }
        );
        // a_1 = a_2 < a_3: the wall between C(123) and C(213).
        assert_eq!(
            fan.query(&v(&[-1, -1, 2])),
            Err(WeylError::AmbiguousBoundary)
        );
        assert_eq!(fan.query(&v(&[1, 1, 1])), Err(WeylError::NotInAmbient));
    }

    #[test]
    fn incomplete_table_rejected() {
        let s3 = GroupDescriptor::symmetric(3).unwrap();
        let t = table(&[([1, 2, 3], [1, 2, 3])]);
        assert_eq!(build_fan(&s3, &t), Err(WeylError::IncompleteTable));
    }

    #[test]
    fn interior_points_land_in_their_chambers() {
        for (ty, n) in [
            (WeylType::A, 4),
            (WeylType::BC, 3),
            (WeylType::D, 3),
            (WeylType::D, 4),
        ] {
            let g = GroupDescriptor::simple(ty, n).unwrap();
            for u in g.elements().unwrap() {
                let p = chamber_interior_point(&g, &u).unwrap();
                assert_eq!(g.chamber_of(&p).unwrap(), u);
            }
        }
    }
}
