use num_traits::Zero;
use proptest::prelude::*;

use weylret_core::fan::{build_fan, chamber_interior_point};
use weylret_core::geometry::{rat, Rational, RationalMatrix};
use weylret_core::matroid::is_coxeter_matroid;
use weylret_core::orbit::{fixed_points, geometric_table, sample_rational_point, SampleProfile};
use weylret_core::retraction::{closest_set, retraction_table, Method};
use weylret_core::GroupDescriptor;

fn sparse(n: usize, seed: u64) -> RationalMatrix {
    let density = [35, 50, 65][(seed % 3) as usize];
    sample_rational_point(
        n,
        seed,
        &SampleProfile::Sparse {
            density_percent: density,
        },
    )
    .unwrap()
}

/// An invertible upper-triangular matrix built from the seed.
fn upper(n: usize, seed: u64) -> RationalMatrix {
    let mut b = RationalMatrix::zeros(n, n);
    let mut s = seed;
    for i in 0..n {
        for j in i..n {
            s = s
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let v = ((s >> 33) % 7) as i64 - 3;
            b[(i, j)] = if i == j {
                rat(if v == 0 { 2 } else { v })
            } else {
                rat(v)
            };
        }
    }
    b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn geometric_and_algebraic_tables_agree(n in 3usize..=5, seed: u64) {
        let x = sparse(n, seed);
        let fp = fixed_points(&x).unwrap();
        let geometric = geometric_table(&x).unwrap();
        let algebraic = retraction_table(&fp.points, Method::Algebraic).unwrap();
        prop_assert!(geometric.same_values(&algebraic));
        prop_assert_eq!(geometric.image(), fp.points.elements().clone());
        let verdict = is_coxeter_matroid(&fp.points).unwrap();
        prop_assert!(verdict.is_matroid);
        prop_assert!(verdict.table.unwrap().same_values(&algebraic));
        for (u, r) in geometric.iter() {
            prop_assert_eq!(closest_set(&fp.points, u).unwrap().1, vec![r.clone()]);
        }
    }

    #[test]
    fn orbit_data_is_invariant_under_the_borel(n in 3usize..=4, seed: u64, b: u64) {
        let x = sparse(n, seed);
        let xb = x.mul(&upper(n, b)).unwrap();
        prop_assert_eq!(fixed_points(&x).unwrap().points, fixed_points(&xb).unwrap().points);
        prop_assert!(geometric_table(&x).unwrap().same_values(&geometric_table(&xb).unwrap()));
    }

    #[test]
    fn orbit_fans_are_well_formed(n in 3usize..=4, seed: u64) {
        let x = sparse(n, seed);
        let g = GroupDescriptor::symmetric(n).unwrap();
        let fp = fixed_points(&x).unwrap().points;
        let geometric = geometric_table(&x).unwrap();
        let fan = build_fan(&g, &geometric).unwrap();
        let algebraic = build_fan(&g, &retraction_table(&fp, Method::Algebraic).unwrap()).unwrap();
        prop_assert_eq!(fan.cones(), algebraic.cones());
        let total: usize = fan.cones().values().map(Vec::len).sum();
        prop_assert_eq!(total as u128, g.order());
        for (y, us) in fan.cones() {
            prop_assert!(us.contains(y));
        }
        prop_assert!(fan.connectivity_report().values().all(|&ok| ok));
        prop_assert!(fan.convexity_report().unwrap().values().all(|&ok| ok));
        for u in g.elements().unwrap() {
            let lambda = chamber_interior_point(&g, &u).unwrap();
            prop_assert_eq!(&fan.query(&lambda).unwrap().y, geometric.get(&u).unwrap());
        }
        // Lineality vectors lie in every cone together with their negatives.
        for l in fan.lineality() {
            let neg: Vec<Rational> = l.iter().map(|x| -x).collect();
            prop_assert!(l.iter().cloned().sum::<Rational>().is_zero());
            for y in fan.cones().keys() {
                prop_assert!(!fan.on_cone_boundary(y, l) || fan.on_cone_boundary(y, &neg));
            }
        }
    }

    #[test]
    fn minors_change_sign_under_row_swaps(n in 2usize..=4, seed: u64, i in 0usize..4, j in 0usize..4) {
        prop_assume!(i < n && j < n && i != j);
        let x = sparse(n, seed);
        let mut rows = x.to_rows();
        rows.swap(i, j);
        let y = RationalMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(y.det().unwrap(), -x.det().unwrap());
        prop_assert_eq!(x.det().unwrap().is_zero(), x.rank() < n);
    }
}
