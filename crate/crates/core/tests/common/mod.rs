#![allow(dead_code)]

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylret_core::{Factor, GroupDescriptor, SignedPermutation, SubsetM, WeylType};

/// A uniformly random element, drawn independently of the enumeration code.
pub fn random_element(g: &GroupDescriptor, seed: u64) -> SignedPermutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut window = Vec::new();
    for f in g.factors() {
        let mut seg: Vec<i32> = (1..=f.rank as i32).collect();
        seg.shuffle(&mut rng);
        if f.ty != WeylType::A {
            for x in seg.iter_mut() {
                if rng.gen_bool(0.5) {
                    *x = -*x;
                }
            }
            if f.ty == WeylType::D && seg.iter().filter(|&&x| x < 0).count() % 2 == 1 {
                seg[0] = -seg[0];
            }
        }
        window.extend(seg);
    }
    SignedPermutation::from(window)
}

/// A random nonempty subset of the given size range. For product groups the
/// subset is a product of random per-factor subsets.
pub fn random_subset(g: &GroupDescriptor, seed: u64, min: usize, max: usize) -> SubsetM {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if g.factors().len() > 1 {
        let mut product: Vec<Vec<i32>> = vec![vec![]];
        for f in g.factors() {
            let single = GroupDescriptor::simple(f.ty, f.rank).unwrap();
            let mut els = single.elements().unwrap();
            els.shuffle(&mut rng);
            let size = rng.gen_range(1..=3);
            product = product
                .iter()
                .flat_map(|p| {
                    els.iter()
                        .take(size)
                        .map(move |e| [p.clone(), e.window().to_vec()].concat())
                })
                .collect();
        }
        return SubsetM::new(g, product.into_iter().map(SignedPermutation::from)).unwrap();
    }
    let mut els = g.elements().unwrap();
    els.shuffle(&mut rng);
    let size = rng.gen_range(min..=max.min(els.len()));
    SubsetM::new(g, els.into_iter().take(size)).unwrap()
}

pub fn small_groups() -> Vec<GroupDescriptor> {
    let simple = |ty, n| GroupDescriptor::simple(ty, n).unwrap();
    vec![
        simple(WeylType::A, 3),
        simple(WeylType::A, 4),
        simple(WeylType::A, 5),
        simple(WeylType::BC, 2),
        simple(WeylType::BC, 3),
        simple(WeylType::BC, 4),
        simple(WeylType::D, 3),
        simple(WeylType::D, 4),
        GroupDescriptor::new(vec![
            Factor::new(WeylType::A, 3),
            Factor::new(WeylType::BC, 2),
        ])
        .unwrap(),
        GroupDescriptor::new(vec![
            Factor::new(WeylType::D, 3),
            Factor::new(WeylType::A, 2),
        ])
        .unwrap(),
    ]
}

pub fn group() -> impl Strategy<Value = GroupDescriptor> {
    proptest::sample::select(small_groups())
}
