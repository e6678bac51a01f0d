//! Exact rational linear algebra: matrices, minors, cones and edge tests.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, WeylError};
use crate::lp;
use crate::weyl::{GroupDescriptor, SignedPermutation};

/// Arbitrary-precision rational in canonical form. Displays as `p/q`, or
/// `p` when the denominator is one, and parses back with [`str::parse`].
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`; panics if `q` is zero.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// A dense rectangular matrix over the rationals, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl core::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(WeylError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    /// The permutation matrix sending `e_i` to `e_{w(i)}` (type A windows).
    pub fn permutation(w: &SignedPermutation) -> Self {
        let n = w.len();
        let mut m = Self::zeros(n, n);
        for (i, &a) in w.window().iter().enumerate() {
            let sign = if a > 0 { 1 } else { -1 };
            m[(a.unsigned_abs() as usize - 1, i)] = rat(sign);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(WeylError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(WeylError::NotSquare);
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        self.minor(&idx, &idx)
    }

    /// Determinant of the submatrix on the given 0-based rows and columns,
    /// by fraction-free (Bareiss) elimination after clearing denominators.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Rational> {
        if rows.len() != cols.len() {
            return Err(WeylError::NotSquare);
        }
        for &r in rows {
            if r >= self.rows {
                return Err(WeylError::IndexOutOfRange {
                    index: r,
                    size: self.rows,
                });
            }
        }
        for &c in cols {
            if c >= self.cols {
                return Err(WeylError::IndexOutOfRange {
                    index: c,
                    size: self.cols,
                });
            }
        }
        let k = rows.len();
        if k == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(k);
        for &r in rows {
            let lcm = cols
                .iter()
                .fold(BigInt::one(), |acc, &c| acc.lcm(self[(r, c)].denom()));
            a.push(
                cols.iter()
                    .map(|&c| {
                        let x = &self[(r, c)];
                        x.numer() * (&lcm / x.denom())
                    })
                    .collect(),
            );
            scale *= lcm;
        }
        let det = bareiss(&mut a);
        Ok(Rational::new(det, scale))
    }

    /// Reduced row echelon form, returning the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let v = &f * &self[(r, j)];
                    self[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{x : Mx = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m[(r, f)].clone();
                }
                v
            })
            .collect()
    }
}

fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Rank of a list of vectors of equal length.
pub fn rank_of(vectors: &[Vec<Rational>]) -> usize {
    match RationalMatrix::from_rows(vectors.to_vec()) {
        Ok(m) => m.rank(),
        Err(_) => 0,
    }
}

/// Whether `a` and `b` are nonzero and proportional.
pub fn parallel(a: &[Rational], b: &[Rational]) -> bool {
    a.iter().any(|x| !x.is_zero())
        && b.iter().any(|x| !x.is_zero())
        && rank_of(&[a.to_vec(), b.to_vec()]) == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

/// The cone `{λ : ⟨n_i, λ⟩ ≤ 0 ∀i}` inside the linear subspace cut out by
/// `equalities`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceCone {
    dim: usize,
    normals: Vec<Vec<Rational>>,
    equalities: Vec<Vec<Rational>>,
}

impl HalfspaceCone {
    pub fn new(
        dim: usize,
        normals: Vec<Vec<Rational>>,
        equalities: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        for v in normals.iter().chain(&equalities) {
            if v.len() != dim {
                return Err(WeylError::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
        }
        if normals.iter().any(|v| v.iter().all(Zero::is_zero)) {
            return Err(WeylError::ZeroNormal);
        }
        Ok(HalfspaceCone {
            dim,
            normals,
            equalities,
        })
    }

    /// The closed Weyl chamber `C(u)`: `⟨u(α), λ⟩ ≤ 0` for every simple root.
    pub fn chamber(group: &GroupDescriptor, u: &SignedPermutation) -> Result<Self> {
        group.validate(u)?;
        let normals = group
            .simple_roots_int()
            .iter()
            .map(|a| group.act_on_root(u, a).into_iter().map(rat).collect())
            .collect();
        Self::new(group.window_len(), normals, group.ambient_equations())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Vec<Rational>] {
        &self.normals
    }

    pub fn equalities(&self) -> &[Vec<Rational>] {
        &self.equalities
    }

    pub fn membership(&self, lambda: &[Rational]) -> Result<Membership> {
        if lambda.len() != self.dim {
            return Err(WeylError::DimensionMismatch {
                expected: self.dim,
                found: lambda.len(),
            });
        }
        if self.equalities.iter().any(|e| !dot(e, lambda).is_zero()) {
            return Ok(Membership::Outside);
        }
        let mut boundary = false;
        for n in &self.normals {
            let v = dot(n, lambda);
            if v.is_positive() {
                return Ok(Membership::Outside);
            }
            boundary |= v.is_zero();
        }
        Ok(if boundary {
            Membership::Boundary
        } else {
            Membership::Interior
        })
    }

    /// A basis of `C ∩ (−C)`.
    pub fn lineality(&self) -> Vec<Vec<Rational>> {
        let rows: Vec<Vec<Rational>> = self
            .normals
            .iter()
            .chain(&self.equalities)
            .cloned()
            .collect();
        if rows.is_empty() {
            return RationalMatrix::identity(self.dim).to_rows();
        }
        RationalMatrix::from_rows(rows)
            .expect("rows share the cone dimension")
            .nullspace()
    }
}

/// Whether the segment `[p, q]` is an edge of `conv({p, q} ∪ others)`:
/// exact feasibility of `⟨c, p⟩ = ⟨c, q⟩ ≥ ⟨c, r⟩ + 1` for all `r`.
pub fn lp_edge_feasible(p: &[Rational], q: &[Rational], others: &[Vec<Rational>]) -> Result<bool> {
    let dim = p.len();
    for v in core::iter::once(q).chain(others.iter().map(Vec::as_slice)) {
        if v.len() != dim {
            return Err(WeylError::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
    }
    let eq = vec![(sub(p, q), Rational::zero())];
    let ge: Vec<(Vec<Rational>, Rational)> = others
        .iter()
        .map(|r| (sub(p, r), Rational::one()))
        .collect();
    Ok(lp::find_feasible_point(dim, &eq, &ge).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylType;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rational_text_round_trip() {
        let r = ratio(-6, 4);
        assert_eq!(alloc::format!("{r}"), "-3/2");
        assert_eq!("-3/2".parse::<Rational>().unwrap(), r);
        assert_eq!(alloc::format!("{}", rat(5)), "5");
    }

    #[test]
    fn minors_of_example_matrix() {
        let x = RationalMatrix::from_i64_rows(&[&[1, 1, 0], &[1, 0, 1], &[1, 0, 0]]).unwrap();
        assert_eq!(x.minor(&[0, 1], &[0, 1]).unwrap(), rat(-1));
        assert_eq!(x.minor(&[1, 2], &[0, 1]).unwrap(), rat(0));
        assert_eq!(
            RationalMatrix::identity(3).minor(&[0, 1], &[0, 1]).unwrap(),
            rat(1)
        );
        assert!(matches!(
            x.minor(&[0, 3], &[0, 1]),
            Err(WeylError::IndexOutOfRange { .. })
        ));
        assert_eq!(x.det().unwrap(), rat(1));
    }

    #[test]
    fn minor_with_fractions_and_pivoting() {
        let x = RationalMatrix::from_rows(vec![
            vec![rat(0), ratio(1, 2), rat(1)],
            vec![ratio(2, 3), rat(0), rat(1)],
            vec![rat(1), rat(1), rat(0)],
        ])
        .unwrap();
        // Cofactor expansion along the first row.
        let expected = -ratio(1, 2) * (ratio(2, 3) * rat(0) - rat(1) * rat(1))
            + rat(1) * (ratio(2, 3) * rat(1) - rat(0) * rat(1));
        assert_eq!(x.det().unwrap(), expected);
    }

    #[test]
    fn cone_membership_examples() {
        let s3 = GroupDescriptor::symmetric(3).unwrap();
        let c = HalfspaceCone::chamber(&s3, &s3.identity()).unwrap();
        assert_eq!(
            c.membership(&v(&[-2, -1, 3])).unwrap(),
            Membership::Interior
        );
        assert_eq!(c.membership(&v(&[1, -1, 0])).unwrap(), Membership::Outside);
        assert_eq!(c.membership(&v(&[0, 0, 0])).unwrap(), Membership::Boundary);
        assert!(c.lineality().is_empty());
    }

    #[test]
    fn lineality_examples() {
        let half = HalfspaceCone::new(3, vec![v(&[1, 0, -1])], vec![v(&[1, 1, 1])]).unwrap();
        let basis = half.lineality();
        assert_eq!(basis.len(), 1);
        assert!(parallel(&basis[0], &v(&[1, -2, 1])));
        let whole = HalfspaceCone::new(3, vec![], vec![]).unwrap();
        assert_eq!(whole.lineality().len(), 3);
    }

    #[test]
    fn chamber_normals_in_type_c() {
        let bc2 = GroupDescriptor::simple(WeylType::BC, 2).unwrap();
        let c = HalfspaceCone::chamber(&bc2, &bc2.identity()).unwrap();
        assert_eq!(c.membership(&v(&[-3, -1])).unwrap(), Membership::Interior);
        assert_eq!(c.membership(&v(&[-1, -3])).unwrap(), Membership::Outside);
    }

    #[test]
    fn square_edges() {
        let pts = [v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        let others = |i: usize, j: usize| -> Vec<Vec<Rational>> {
            (0..4)
                .filter(|&k| k != i && k != j)
                .map(|k| pts[k].clone())
                .collect()
        };
        assert!(lp_edge_feasible(&pts[0], &pts[1], &others(0, 1)).unwrap());
        assert!(!lp_edge_feasible(&pts[0], &pts[3], &others(0, 3)).unwrap());
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m =
            RationalMatrix::from_i64_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 4 - m.rank());
        for x in &ns {
            for i in 0..m.nrows() {
                assert!(dot(m.row(i), x).is_zero());
            }
        }
    }
}
