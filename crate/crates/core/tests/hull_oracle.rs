//! The LP edge detector against brute-force convex hulls in dimension ≤ 3.

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylret_core::geometry::{lp_edge_feasible, rat, sub, Rational, RationalMatrix};
use weylret_core::matroid::{default_base_point, phi_polytope_check};
use weylret_core::{GroupDescriptor, SubsetM, WeylType};

fn det3(a: &[Rational], b: &[Rational], c: &[Rational]) -> Rational {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

fn cross(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn collinear(p: &[Rational], q: &[Rational], r: &[Rational]) -> bool {
    let m = RationalMatrix::from_rows(vec![sub(q, p), sub(r, p)]).unwrap();
    m.rank() < 2
}

/// Coordinates of the points in an affine chart of their affine hull: keep
/// `k = dim aff` coordinates on which the projection is injective.
fn chart(points: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    if diffs.is_empty() {
        return vec![vec![]; points.len()];
    }
    let m = RationalMatrix::from_rows(diffs.clone()).unwrap();
    let k = m.rank();
    let dim = points[0].len();
    // Greedily pick coordinates that keep the projected differences at rank k.
    let mut chosen: Vec<usize> = Vec::new();
    for c in 0..dim {
        let mut trial = chosen.clone();
        trial.push(c);
        let proj: Vec<Vec<Rational>> = diffs
            .iter()
            .map(|d| trial.iter().map(|&i| d[i].clone()).collect())
            .collect();
        if RationalMatrix::from_rows(proj).unwrap().rank() == trial.len() {
            chosen = trial;
        }
        if chosen.len() == k {
            break;
        }
    }
    points
        .iter()
        .map(|p| chosen.iter().map(|&i| p[i].clone()).collect())
        .collect()
}

/// Brute-force edge test for points in general enough position (in the
/// chart of their affine hull, of dimension at most 3).
fn hull_edge(points: &[Vec<Rational>], i: usize, j: usize) -> bool {
    let pts = chart(points);
    let k = pts[0].len();
    let (p, q) = (&pts[i], &pts[j]);
    let others: Vec<&Vec<Rational>> = (0..pts.len())
        .filter(|&x| x != i && x != j)
        .map(|x| &pts[x])
        .collect();
    match k {
        0 => false,
        1 => {
            let lo = pts.iter().map(|x| &x[0]).min().unwrap();
            let hi = pts.iter().map(|x| &x[0]).max().unwrap();
            let (a, b) = if p[0] < q[0] {
                (&p[0], &q[0])
            } else {
                (&q[0], &p[0])
            };
            a == lo
                && b == hi
                && others
                    .iter()
                    .all(|r| r[0] != *a && r[0] != *b && (r[0] < *a || r[0] > *b))
        }
        2 => {
            let side = |r: &Vec<Rational>| {
                (&q[0] - &p[0]) * (&r[1] - &p[1]) - (&q[1] - &p[1]) * (&r[0] - &p[0])
            };
            let s: Vec<Rational> = others.iter().map(|r| side(r)).collect();
            s.iter().all(|x| !x.is_zero())
                && (s.iter().all(|x| x.is_positive()) || s.iter().all(|x| x.is_negative()))
        }
        3 => {
            if others.iter().any(|r| collinear(p, q, r)) {
                return false;
            }
            // Supporting planes through p, q and a third point.
            let mut normals: Vec<Vec<Rational>> = Vec::new();
            for r in &others {
                let n = cross(&sub(q, p), &sub(r, p));
                let vals: Vec<Rational> = pts
                    .iter()
                    .map(|x| det3(&sub(q, p), &sub(r, p), &sub(x, p)))
                    .collect();
                if vals.iter().all(|v| !v.is_positive()) || vals.iter().all(|v| !v.is_negative()) {
                    normals.push(n);
                }
            }
            normals.iter().any(|a| {
                normals
                    .iter()
                    .any(|b| cross(a, b).iter().any(|x| !x.is_zero()))
            })
        }
        _ => unreachable!("dimension above 3"),
    }
}

fn lp_edge(points: &[Vec<Rational>], i: usize, j: usize) -> bool {
    let others: Vec<Vec<Rational>> = (0..points.len())
        .filter(|&x| x != i && x != j)
        .map(|x| points[x].clone())
        .collect();
    lp_edge_feasible(&points[i], &points[j], &others).unwrap()
}

fn subsets_of(
    els: &[weylret_core::SignedPermutation],
) -> impl Iterator<Item = Vec<weylret_core::SignedPermutation>> + '_ {
    (1u32..(1 << els.len())).map(move |mask| {
        els.iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, w)| w.clone())
            .collect()
    })
}

#[test]
fn lp_matches_hull_on_all_s3_polytopes() {
    let g = GroupDescriptor::symmetric(3).unwrap();
    let nu = default_base_point(&g);
    let els = g.elements().unwrap();
    let mut checked = 0;
    for members in subsets_of(&els) {
        let m = SubsetM::new(&g, members).unwrap();
        let report = phi_polytope_check(&m, &nu).unwrap();
        let pts = &report.vertices;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let expected = hull_edge(pts, i, j);
                assert_eq!(
                    lp_edge(pts, i, j),
                    expected,
                    "{:?} ({i},{j})",
                    report.members
                );
                assert_eq!(report.edges.contains(&(i, j)), expected);
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 240);
}

#[test]
fn lp_matches_hull_on_bc2_polytopes() {
    let g = GroupDescriptor::simple(WeylType::BC, 2).unwrap();
    let nu = default_base_point(&g);
    for members in subsets_of(&g.elements().unwrap()) {
        let m = SubsetM::new(&g, members).unwrap();
        let report = phi_polytope_check(&m, &nu).unwrap();
        for i in 0..report.vertices.len() {
            for j in i + 1..report.vertices.len() {
                assert_eq!(
                    report.edges.contains(&(i, j)),
                    hull_edge(&report.vertices, i, j)
                );
            }
        }
    }
}

#[test]
fn lp_matches_hull_on_random_s4_polytopes() {
    let g = GroupDescriptor::symmetric(4).unwrap();
    let els = g.elements().unwrap();
    let nu: Vec<Rational> = [2, -3, 5, 7].iter().map(|&x| rat(x)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..40 {
        let size = rng.gen_range(2..=10);
        let mut shuffled = els.clone();
        shuffled.shuffle(&mut rng);
        let members: Vec<_> = shuffled.into_iter().take(size).collect();
        let m = SubsetM::new(&g, members).unwrap();
        let report = phi_polytope_check(&m, &nu).unwrap();
        for i in 0..report.vertices.len() {
            for j in i + 1..report.vertices.len() {
                assert_eq!(
                    report.edges.contains(&(i, j)),
                    hull_edge(&report.vertices, i, j),
                    "{:?} ({i},{j})",
                    report.members
                );
            }
        }
    }
}

#[test]
fn lp_matches_hull_on_random_point_clouds() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for dim in 2..=3 {
        for _ in 0..30 {
            let count = rng.gen_range(2..=8);
            let pts: Vec<Vec<Rational>> = (0..count)
                .map(|_| (0..dim).map(|_| rat(rng.gen_range(-6..=6))).collect())
                .collect();
            // Keep clouds without repeated points or collinear triples.
            let distinct = (0..count).all(|i| (i + 1..count).all(|j| pts[i] != pts[j]));
            let degenerate = dim > 1
                && (0..count).any(|i| {
                    (i + 1..count)
                        .any(|j| (j + 1..count).any(|k| collinear(&pts[i], &pts[j], &pts[k])))
                });
            if !distinct || degenerate {
                continue;
            }
            for i in 0..count {
                for j in i + 1..count {
                    assert_eq!(
                        lp_edge(&pts, i, j),
                        hull_edge(&pts, i, j),
                        "{pts:?} ({i},{j})"
                    );
                }
            }
        }
    }
}
