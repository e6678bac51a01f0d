//! Exhaustive comparisons against slow, independent reference computations.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use weylret_core::fan::chamber_interior_point;
use weylret_core::geometry::rat;
use weylret_core::{GroupDescriptor, SignedPermutation, WeylType};

fn groups() -> Vec<(WeylType, usize)> {
    vec![
        (WeylType::A, 1),
        (WeylType::A, 2),
        (WeylType::A, 3),
        (WeylType::A, 4),
        (WeylType::A, 5),
        (WeylType::BC, 2),
        (WeylType::BC, 3),
        (WeylType::BC, 4),
        (WeylType::D, 2),
        (WeylType::D, 3),
        (WeylType::D, 4),
    ]
}

/// Simple reflections written out by hand.
fn generators(ty: WeylType, n: usize) -> Vec<SignedPermutation> {
    let id: Vec<i32> = (1..=n as i32).collect();
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut w = id.clone();
        w.swap(i, i + 1);
        gens.push(SignedPermutation::from(w));
    }
    match ty {
        WeylType::A => {}
        WeylType::BC => {
            let mut w = id.clone();
            w[n - 1] = -(n as i32);
            gens.push(SignedPermutation::from(w));
        }
        WeylType::D => {
            let mut w = id.clone();
            w[n - 2] = -(n as i32);
            w[n - 1] = -(n as i32 - 1);
            gens.push(SignedPermutation::from(w));
        }
    }
    gens
}

/// Reflections written out by hand: transpositions, barred transpositions
/// `i ↔ j̄` and (type BC) single sign changes.
fn reflections(ty: WeylType, n: usize) -> Vec<SignedPermutation> {
    let id: Vec<i32> = (1..=n as i32).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut w = id.clone();
            w.swap(i, j);
            out.push(SignedPermutation::from(w));
            if ty != WeylType::A {
                let mut w = id.clone();
                w[i] = -(j as i32 + 1);
                w[j] = -(i as i32 + 1);
                out.push(SignedPermutation::from(w));
            }
        }
        if ty == WeylType::BC {
            let mut w = id.clone();
            w[i] = -w[i];
            out.push(SignedPermutation::from(w));
        }
    }
    out
}

/// Signed permutation matrix with `P e_i = sign(w(i)) e_{|w(i)|}`.
fn matrix(w: &SignedPermutation) -> Vec<Vec<i32>> {
    let n = w.len();
    let mut m = vec![vec![0; n]; n];
    for (i, &a) in w.window().iter().enumerate() {
        m[a.unsigned_abs() as usize - 1][i] = a.signum();
    }
    m
}

fn matmul(a: &[Vec<i32>], b: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn bfs_lengths(
    g: &GroupDescriptor,
    gens: &[SignedPermutation],
) -> BTreeMap<SignedPermutation, usize> {
    let mut dist = BTreeMap::new();
    let mut queue = VecDeque::new();
    dist.insert(g.identity(), 0);
    queue.push_back(g.identity());
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for s in gens {
            let ws = g.compose(&w, s).unwrap();
            if !dist.contains_key(&ws) {
                dist.insert(ws.clone(), d + 1);
                queue.push_back(ws);
            }
        }
    }
    dist
}

#[test]
fn compose_matches_matrix_product() {
    for (ty, n) in groups() {
        let g = GroupDescriptor::simple(ty, n).unwrap();
        let els = g.elements().unwrap();
        let step = (els.len() / 40).max(1);
        for v in els.iter().step_by(step) {
            for w in els.iter().step_by(step) {
                let vw = g.compose(v, w).unwrap();
                assert_eq!(matrix(&vw), matmul(&matrix(v), &matrix(w)), "{v} ∘ {w}");
            }
            let vi = g.inverse(v);
            assert!(g.is_identity(&g.compose(v, &vi).unwrap()));
            assert!(g.is_identity(&g.compose(&vi, v).unwrap()));
        }
    }
}

#[test]
fn enumeration_is_complete_and_closed() {
    for (ty, n) in groups() {
        let g = GroupDescriptor::simple(ty, n).unwrap();
        let els = g.elements().unwrap();
        assert_eq!(els.len() as u128, g.order());
        let reached = bfs_lengths(&g, &generators(ty, n));
        assert_eq!(reached.len(), els.len(), "{ty}{n}");
        for w in &els {
            assert!(reached.contains_key(w));
        }
    }
}

#[test]
fn length_matches_bfs_word_length() {
    for (ty, n) in groups() {
        let g = GroupDescriptor::simple(ty, n).unwrap();
        let gens = generators(ty, n);
        for (i, s) in gens.iter().enumerate() {
            assert_eq!(&g.generator(i), s);
        }
        for (w, d) in bfs_lengths(&g, &gens) {
            assert_eq!(g.length(&w), d, "{ty}{n} {w}");
            for (i, s) in gens.iter().enumerate() {
                let ws = g.compose(&w, s).unwrap();
                let descent = g.length(&ws) < d;
                assert_eq!(g.is_right_descent(&w, i), descent, "{ty}{n} {w} s{i}");
                assert_eq!(g.mul_generator(&w, i), ws);
            }
        }
    }
}

#[test]
fn reflections_match_hand_built_list() {
    for (ty, n) in groups() {
        let g = GroupDescriptor::simple(ty, n).unwrap();
        let ours: BTreeSet<_> = g.reflections().into_iter().collect();
        let theirs: BTreeSet<_> = reflections(ty, n).into_iter().collect();
        assert_eq!(ours, theirs, "{ty}{n}");
        assert_eq!(ours.len(), g.positive_roots().len());
    }
}

/// Bruhat order as the transitive closure of `v → vt` with `ℓ(vt) = ℓ(v) + 1`,
/// lengths taken from breadth-first search.
fn closure_oracle(
    g: &GroupDescriptor,
    ty: WeylType,
    n: usize,
) -> BTreeMap<SignedPermutation, BTreeSet<SignedPermutation>> {
    let len = bfs_lengths(g, &generators(ty, n));
    let refl = reflections(ty, n);
    let mut covers: BTreeMap<SignedPermutation, Vec<SignedPermutation>> = BTreeMap::new();
    for (v, &lv) in &len {
        for t in &refl {
            let vt = g.compose(v, t).unwrap();
            if len[&vt] == lv + 1 {
                covers.entry(v.clone()).or_default().push(vt);
            }
        }
    }
    let mut up = BTreeMap::new();
    for v in len.keys() {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([v.clone()]);
        seen.insert(v.clone());
        while let Some(x) = queue.pop_front() {
            for y in covers.get(&x).into_iter().flatten() {
                if seen.insert(y.clone()) {
                    queue.push_back(y.clone());
                }
            }
        }
        up.insert(v.clone(), seen);
    }
    up
}

#[test]
fn bruhat_matches_covering_closure() {
    for (ty, n) in groups() {
        if g_order(ty, n) > 400 {
            continue;
        }
        let g = GroupDescriptor::simple(ty, n).unwrap();
        let up = closure_oracle(&g, ty, n);
        for (v, above) in &up {
            for w in up.keys() {
                assert_eq!(
                    g.bruhat_leq(v, w).unwrap(),
                    above.contains(w),
                    "{ty}{n}: {v} ≤ {w}"
                );
            }
        }
    }
}

fn g_order(ty: WeylType, n: usize) -> u128 {
    GroupDescriptor::simple(ty, n).unwrap().order()
}

#[test]
fn distance_one_means_simple_step() {
    for (ty, n) in groups() {
        let g = GroupDescriptor::simple(ty, n).unwrap();
        let els = g.elements().unwrap();
        let gens = generators(ty, n);
        let step = (els.len() / 30).max(1);
        for v in els.iter().step_by(step) {
            let neighbours: BTreeSet<_> = gens.iter().map(|s| g.compose(v, s).unwrap()).collect();
            for w in &els {
                assert_eq!(g.metric(v, w).unwrap() == 1, neighbours.contains(w));
            }
        }
    }
}

#[test]
fn longest_element_is_the_bruhat_maximum() {
    for (ty, n) in groups() {
        let g = GroupDescriptor::simple(ty, n).unwrap();
        let w0 = g.longest_element();
        for w in g.elements().unwrap() {
            assert!(g.bruhat_leq(&w, &w0).unwrap());
        }
    }
}

/// Extended coordinate `a_i` for a letter `i` (`a_ī = −a_i`).
fn coord(a: &[i64], letter: i32) -> i64 {
    let x = a[letter.unsigned_abs() as usize - 1];
    if letter > 0 {
        x
    } else {
        -x
    }
}

/// The chamber inequalities written out directly.
fn in_open_chamber(ty: WeylType, u: &[i32], a: &[i64]) -> bool {
    let n = u.len();
    let c = |k: usize| coord(a, u[k]);
    let chain = (0..n - 1).all(|k| c(k) < c(k + 1));
    match ty {
        WeylType::A => chain,
        WeylType::BC => chain && c(n - 1) < 0,
        WeylType::D => {
            (0..n - 2).all(|k| c(k) < c(k + 1)) && c(n - 2) < c(n - 1) && c(n - 1) < -c(n - 2)
        }
    }
}

#[test]
fn chambers_match_direct_inequalities() {
    for (ty, n) in [
        (WeylType::A, 3),
        (WeylType::A, 4),
        (WeylType::BC, 3),
        (WeylType::D, 3),
        (WeylType::D, 4),
    ] {
        let g = GroupDescriptor::simple(ty, n).unwrap();
        let els = g.elements().unwrap();
        // All integer points in a box (with type A restricted to sum zero).
        let r = 4i64;
        let mut points = vec![vec![]];
        for _ in 0..n {
            points = points
                .into_iter()
                .flat_map(|p: Vec<i64>| (-r..=r).map(move |x| [p.clone(), vec![x]].concat()))
                .collect();
        }
        for a in points {
            if ty == WeylType::A && a.iter().sum::<i64>() != 0 {
                continue;
            }
            let hits: Vec<_> = els
                .iter()
                .filter(|u| in_open_chamber(ty, u.window(), &a))
                .collect();
            assert!(hits.len() <= 1);
            let lambda: Vec<_> = a.iter().map(|&x| rat(x)).collect();
            match g.chamber_of(&lambda) {
                Ok(u) => assert_eq!(hits, vec![&u], "{ty}{n} {a:?}"),
                Err(_) => assert!(hits.is_empty(), "{ty}{n} {a:?}"),
            }
        }
        for u in &els {
            let p = chamber_interior_point(&g, u).unwrap();
            let ints: Vec<i64> = p
                .iter()
                .map(|x| x.to_integer().try_into().unwrap())
                .collect();
            assert!(in_open_chamber(ty, u.window(), &ints));
        }
    }
}

#[test]
fn permutohedron_vertices_are_distinct() {
    for (ty, n) in groups() {
        let g = GroupDescriptor::simple(ty, n).unwrap();
        let nu: Vec<_> = (1..=n as i64).map(rat).collect();
        let verts: BTreeSet<_> = g
            .elements()
            .unwrap()
            .iter()
            .map(|w| g.act_on_vector(w, &nu).unwrap())
            .collect();
        assert_eq!(verts.len() as u128, g.order());
    }
}
