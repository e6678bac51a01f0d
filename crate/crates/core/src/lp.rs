//! Exact feasibility for small linear systems over the rationals.
//!
//! Phase I of the two-phase simplex method on a dense tableau, with Bland's
//! rule for both the entering and the leaving variable, so it terminates on
//! degenerate problems.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::geometry::Rational;

/// Finds `x ∈ ℚ^nvars` (unrestricted in sign) with `a·x = b` for every row
/// of `eqs` and `a·x ≥ b` for every row of `ges`, or `None` if none exists.
pub fn find_feasible_point(
    nvars: usize,
    eqs: &[(Vec<Rational>, Rational)],
    ges: &[(Vec<Rational>, Rational)],
) -> Option<Vec<Rational>> {
    let m = eqs.len() + ges.len();
    if m == 0 {
        return Some(vec![Rational::zero(); nvars]);
    }
    // Columns: x⁺ (nvars), x⁻ (nvars), surplus (one per `≥` row), artificial (m), rhs.
    let n_struct = 2 * nvars + ges.len();
    let width = n_struct + m + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    let rows = eqs
        .iter()
        .map(|r| (r, false))
        .chain(ges.iter().map(|r| (r, true)));
    let mut surplus = 0;
    for (i, ((a, b), is_ge)) in rows.enumerate() {
        debug_assert_eq!(a.len(), nvars);
        let mut row = vec![Rational::zero(); width];
        for (j, x) in a.iter().enumerate() {
            row[j] = x.clone();
            row[nvars + j] = -x.clone();
        }
        if is_ge {
            row[2 * nvars + surplus] = -Rational::one();
            surplus += 1;
        }
        row[rhs] = b.clone();
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -core::mem::take(x);
            }
        }
        row[n_struct + i] = Rational::one();
        t.push(row);
    }
    // Objective row: reduced costs of `minimise Σ artificials`.
    let mut obj = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..n_struct {
            obj[j] -= &row[j];
        }
        obj[rhs] -= &row[rhs];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n_struct..n_struct + m).collect();

    while let Some(enter) = (0..n_struct).find(|&j| t[m][j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase I is bounded below by zero, so some row always qualifies.
        let (p, _) = leave.expect("phase I objective is bounded");
        pivot(&mut t, p, enter);
        basis[p] = enter;
    }

    if !t[m][rhs].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); nvars];
    for (i, &b) in basis.iter().enumerate() {
        if b < nvars {
            x[b] += &t[i][rhs];
        } else if b < 2 * nvars {
            x[b - nvars] -= &t[i][rhs];
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rational>], p: usize, col: usize) {
    let inv = t[p][col].recip();
    for x in t[p].iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
    let pivot_row = core::mem::take(&mut t[p]);
    let nz: Vec<usize> = (0..pivot_row.len())
        .filter(|&j| !pivot_row[j].is_zero())
        .collect();
    for (i, row) in t.iter_mut().enumerate() {
        if i == p || row[col].is_zero() {
            continue;
        }
        let f = row[col].clone();
        for &j in &nz {
            let v = &f * &pivot_row[j];
            row[j] -= v;
        }
    }
    t[p] = pivot_row;
}
