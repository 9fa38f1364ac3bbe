//! Integral symmetric forms and their diagonalization over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("form is degenerate (determinant 0)")]
    Degenerate,
}

/// A nondegenerate symmetric bilinear form on `Z^n`, given by its Gram matrix.
///
/// The rank may be zero; the empty form has determinant 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerSymmetricForm {
    gram: Vec<Vec<BigInt>>,
    det: BigInt,
}

impl fmt::Debug for IntegerSymmetricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntegerSymmetricForm")
            .field("gram", &self.gram)
            .finish()
    }
}

impl IntegerSymmetricForm {
    /// Validates `rows` as a square, symmetric, nondegenerate Gram matrix.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, FormError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(FormError::NotSquare { row: i, len: row.len(), expected: n });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(FormError::NotSymmetric(i, j));
                }
            }
        }
        let det = bareiss_determinant(&rows);
        if det.is_zero() {
            return Err(FormError::Degenerate);
        }
        Ok(Self { gram: rows, det })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, FormError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// The diagonal form `<a_1> ⊕ … ⊕ <a_n>`.
    pub fn diagonal(entries: &[i64]) -> Result<Self, FormError> {
        let n = entries.len();
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for (i, &a) in entries.iter().enumerate() {
            rows[i][i] = BigInt::from(a);
        }
        Self::from_rows(rows)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.gram[i][j]
    }

    /// Exact determinant (fraction-free Bareiss elimination, cached at construction).
    pub fn determinant(&self) -> &BigInt {
        &self.det
    }

    /// Every vector has even norm iff every diagonal Gram entry is even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[i][i].is_even())
    }

    pub fn signature(&self) -> i64 {
        self.diagonalize().signature()
    }

    pub fn diagonalize(&self) -> DiagonalRationalForm {
        self.diagonalize_with(PivotPolicy::FirstNonzero)
    }

    /// Congruence diagonalization `P·B·Pᵀ = diag(entries)` over `Q`.
    ///
    /// At step `k` the pivot is `B[k][k]` if nonzero; otherwise a remaining
    /// index with nonzero diagonal is swapped in (chosen by `policy`); if every
    /// remaining diagonal entry vanishes, `e_k ↦ e_k + e_j` is applied for the
    /// first `j` with `B[k][j] ≠ 0`, producing the diagonal `2·B[k][j]`.
    pub fn diagonalize_with(&self, policy: PivotPolicy) -> DiagonalRationalForm {
        let n = self.rank();
        let mut m: Vec<Vec<BigRational>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect();
        let mut p = identity(n);

        for k in 0..n {
            if m[k][k].is_zero() {
                let candidates = (k + 1..n).filter(|&j| !m[j][j].is_zero());
                let swap = match policy {
                    PivotPolicy::FirstNonzero => candidates.min(),
                    PivotPolicy::LastNonzero => candidates.max(),
                };
                if let Some(j) = swap {
                    m.swap(k, j);
                    for row in m.iter_mut() {
                        row.swap(k, j);
                    }
                    p.swap(k, j);
                } else {
                    // nondegeneracy guarantees a nonzero pairing in row k
                    let j = (k + 1..n)
                        .find(|&j| !m[k][j].is_zero())
                        .expect("nondegenerate form has a nonzero off-diagonal pairing");
                    add_row_col(&mut m, k, j, &BigRational::one());
                    let pj = p[j].clone();
                    for (a, b) in p[k].iter_mut().zip(pj.iter()) {
                        *a += b;
                    }
                }
            }
            let pivot = m[k][k].clone();
            debug_assert!(!pivot.is_zero());
            for i in (k + 1)..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let f = &m[i][k] / &pivot;
                add_row_col(&mut m, i, k, &-f.clone());
                let pk = p[k].clone();
                for (a, b) in p[i].iter_mut().zip(pk.iter()) {
                    *a -= &f * b;
                }
            }
        }

        let entries = (0..n).map(|i| m[i][i].clone()).collect();
        DiagonalRationalForm { entries, transition: p }
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n1, n2) = (self.rank(), other.rank());
        let mut rows = vec![vec![BigInt::zero(); n1 + n2]; n1 + n2];
        for i in 0..n1 {
            rows[i][..n1].clone_from_slice(&self.gram[i]);
        }
        for i in 0..n2 {
            rows[n1 + i][n1..].clone_from_slice(&other.gram[i]);
        }
        Self { gram: rows, det: &self.det * &other.det }
    }

    /// The form with every Gram entry negated.
    pub fn negated(&self) -> Self {
        let gram = self.gram.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        let det = if self.rank() % 2 == 0 { self.det.clone() } else { -&self.det };
        Self { gram, det }
    }

    /// `x·B·y` for rational coordinate vectors.
    pub fn eval(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row = BigRational::zero();
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.gram[i][j].is_zero() {
                    row += yj * BigRational::from_integer(self.gram[i][j].clone());
                }
            }
            acc += xi * row;
        }
        acc
    }

    pub fn report(&self) -> FormReport {
        FormReport {
            rank: self.rank(),
            determinant: self.det.clone(),
            signature: self.signature(),
            is_even: self.is_even(),
        }
    }
}

/// Tie-breaking rule for zero pivots in [`IntegerSymmetricForm::diagonalize_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotPolicy {
    #[default]
    FirstNonzero,
    LastNonzero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalRationalForm {
    pub entries: Vec<BigRational>,
    /// Rows of `P`; row `i` expresses the `i`-th new basis vector in the old basis.
    pub transition: Vec<Vec<BigRational>>,
}

impl DiagonalRationalForm {
    pub fn signature(&self) -> i64 {
        self.entries
            .iter()
            .map(|e| if e.is_positive() { 1 } else { -1 })
            .sum()
    }

    /// Checks `P·B·Pᵀ = diag(entries)` exactly.
    pub fn verifies(&self, form: &IntegerSymmetricForm) -> bool {
        let n = self.entries.len();
        if n != form.rank() || self.transition.len() != n {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                let v = form.eval(&self.transition[i], &self.transition[j]);
                let expected = if i == j { self.entries[i].clone() } else { BigRational::zero() };
                if v != expected {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormReport {
    pub rank: usize,
    pub determinant: BigInt,
    pub signature: i64,
    pub is_even: bool,
}

/// Fraction-free Gaussian elimination; exact for any integer matrix.
pub fn bareiss_determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn identity(n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

/// Replace basis vector `e_i` by `e_i + f·e_j` in a symmetric matrix.
fn add_row_col(m: &mut [Vec<BigRational>], i: usize, j: usize, f: &BigRational) {
    let n = m.len();
    let rj = m[j].clone();
    for c in 0..n {
        let d = f * &rj[c];
        m[i][c] += d;
    }
    for r in 0..n {
        let d = f * &m[r][j];
        m[r][i] += d;
    }
}
