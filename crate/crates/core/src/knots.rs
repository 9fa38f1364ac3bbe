//! Knot signatures from Seifert matrices, and closed formulas for pretzel
//! knots `P(p, q, r)` with `p`, `q` odd and `r` even.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::forms::{bareiss_determinant, FormError, IntegerSymmetricForm};
use crate::witt::{WittClassQ, WittError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("det(ξ - ξᵀ) = {0}, expected 1")]
    InvalidSeifert(BigInt),
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("pretzel parameters must have p, q odd and r even")]
    InvalidParity,
    #[error("degenerate pretzel parameter: {0}")]
    DegenerateParameter(&'static str),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Witt(#[from] WittError),
}

/// A Seifert matrix `ξ` of a knot, normalized so that `det(ξ - ξᵀ) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self, KnotError> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(KnotError::NotSquare { row: i, len: row.len(), expected: n });
            }
        }
        let skew: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| &entries[i][j] - &entries[j][i]).collect())
            .collect();
        let d = bareiss_determinant(&skew);
        if !d.is_one() {
            return Err(KnotError::InvalidSeifert(d));
        }
        Ok(Self { entries })
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, KnotError> {
        Self::new(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// The unknot's empty Seifert matrix.
    pub fn unknot() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Seifert matrix of the connected sum.
    pub fn block_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.size(), other.size());
        let mut entries = alloc::vec![alloc::vec![BigInt::default(); a + b]; a + b];
        for i in 0..a {
            entries[i][..a].clone_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            entries[a + i][a..].clone_from_slice(&other.entries[i]);
        }
        Self { entries }
    }

    /// `ξ + ξᵀ`, an even form with odd determinant.
    pub fn symmetrize(&self) -> IntegerSymmetricForm {
        let n = self.size();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| &self.entries[i][j] + &self.entries[j][i]).collect())
            .collect();
        // det(ξ + ξᵀ) ≡ det(ξ - ξᵀ) = 1 mod 2, so the form is nondegenerate
        IntegerSymmetricForm::from_rows(rows).expect("symmetrized Seifert form is nondegenerate")
    }

    pub fn signature(&self) -> i64 {
        self.symmetrize().signature()
    }

    pub fn determinant(&self) -> BigInt {
        self.symmetrize().determinant().clone()
    }

    /// `σ ≡ 0 mod 4` when `|det| ≡ 1 mod 4`, and `σ ≡ 2 mod 4` when `|det| ≡ 3 mod 4`.
    pub fn murasugi_check(&self) -> bool {
        let f = self.symmetrize();
        murasugi_holds(f.signature(), f.determinant())
    }
}

fn murasugi_holds(signature: i64, det: &BigInt) -> bool {
    let d = det.abs().mod_floor(&BigInt::from(4)).to_u8().expect("residue");
    matches!((d, signature.rem_euclid(4)), (1, 0) | (3, 2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotReport {
    pub signature: i64,
    pub determinant: BigInt,
    /// `σ mod 4`, which is 0 or 2.
    pub murasugi_class: i64,
    pub murasugi_holds: bool,
    pub boundary_zero: bool,
    /// Present when the boundary vanishes.
    pub signature_mod_8: Option<i64>,
}

/// Symmetrizes, diagonalizes and tests the boundary of the rational Witt class.
pub fn analyze_knot(s: &SeifertMatrix) -> Result<KnotReport, KnotError> {
    let form = s.symmetrize();
    let signature = form.signature();
    let determinant = form.determinant().clone();
    let boundary_zero = WittClassQ::of_form(&form)?.boundary_is_zero()?;
    Ok(KnotReport {
        signature,
        murasugi_class: signature.rem_euclid(4),
        murasugi_holds: murasugi_holds(signature, &determinant),
        determinant,
        boundary_zero,
        signature_mod_8: boundary_zero.then(|| signature.rem_euclid(8)),
    })
}

/// The pretzel knot `P(p, q, r)` with `p`, `q` odd and `r` even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PretzelKnot {
    p: i64,
    q: i64,
    r: i64,
}

impl PretzelKnot {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self, KnotError> {
        if p % 2 == 0 || q % 2 == 0 || r % 2 != 0 {
            return Err(KnotError::InvalidParity);
        }
        // pq is odd and r(p + q) even, so the determinant never vanishes
        Ok(Self { p, q, r })
    }

    pub fn params(&self) -> (i64, i64, i64) {
        (self.p, self.q, self.r)
    }

    /// `pq + pr + qr`, computed in 128 bits.
    pub fn determinant(&self) -> i128 {
        let (p, q, r) = (self.p as i128, self.q as i128, self.r as i128);
        p * q + p * r + q * r
    }

    /// `<p> ⊕ <q> ⊕ <r> ⊕ <pqr>`, which agrees with the Witt class of the
    /// symmetrized Seifert form up to summands `<±1>`.
    pub fn witt_class(&self) -> Result<WittClassQ, KnotError> {
        if self.r == 0 {
            return Err(KnotError::DegenerateParameter("r = 0"));
        }
        let (p, q, r) = (BigInt::from(self.p), BigInt::from(self.q), BigInt::from(self.r));
        let pqr = &p * &q * &r;
        let entries = [p, q, r, pqr].map(num_rational::BigRational::from_integer);
        Ok(WittClassQ::from_diagonal(&entries)?)
    }

    /// `-(p+q) + Sign(p) + Sign(q) - Sign(pq(p+q)) + Sign((p+q)(pq+pr+qr))`.
    pub fn signature(&self) -> Result<i64, KnotError> {
        let s = self.p as i128 + self.q as i128;
        if s == 0 {
            return Err(KnotError::DegenerateParameter("p + q = 0"));
        }
        let (p, q) = (self.p as i128, self.q as i128);
        let sign = |x: i128| x.signum() as i64;
        let sigma = -(s as i64) + sign(p) + sign(q) - sign(p * q * s) + sign(s) * sign(self.determinant());
        Ok(sigma)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use alloc::vec;

    #[test]
    fn trefoil() {
        let t = super::fixtures::trefoil();
        let f = t.symmetrize();
        assert_eq!(f, IntegerSymmetricForm::from_i64_rows(&[[-2, 1], [1, -2]]).unwrap());
        assert_eq!(t.signature(), -2);
        assert_eq!(t.determinant(), BigInt::from(3));
        assert!(t.murasugi_check());
        let r = analyze_knot(&t).unwrap();
        assert!(!r.boundary_zero);
        assert_eq!(r.signature_mod_8, None);
        assert_eq!(r.murasugi_class, 2);
    }

    #[test]
    fn nine_one() {
        let k = knot_9_1();
        let f = k.symmetrize();
        for i in 0..8 {
            for j in 0..8 {
                let want = if i == j { -2 } else { -1 };
                assert_eq!(*f.entry(i, j), BigInt::from(want));
            }
        }
        let r = analyze_knot(&k).unwrap();
        assert_eq!(r.signature, -8);
        assert_eq!(r.determinant, BigInt::from(9));
        assert!(r.boundary_zero && r.murasugi_holds);
        assert_eq!(r.signature_mod_8, Some(0));
    }

    #[test]
    fn unknot() {
        let r = analyze_knot(&SeifertMatrix::unknot()).unwrap();
        assert_eq!(r.signature, 0);
        assert_eq!(r.determinant, BigInt::one());
        assert!(r.boundary_zero);
        assert_eq!(SeifertMatrix::from_i64_rows::<[i64; 0]>(&[]).unwrap(), SeifertMatrix::unknot());
    }

    #[test]
    fn connected_sum_6_3_8_1() {
        let (a, b) = (knot_6_3(), knot_8_1());
        assert_eq!(a.determinant(), BigInt::from(13));
        assert_eq!(b.determinant(), BigInt::from(-13));
        assert!(!analyze_knot(&a).unwrap().boundary_zero);
        assert!(!analyze_knot(&b).unwrap().boundary_zero);
        let r = analyze_knot(&a.block_sum(&b)).unwrap();
        assert!(r.boundary_zero);
        assert_eq!(r.signature, 0);
        assert_eq!(r.signature, a.signature() + b.signature());
    }

    #[test]
    fn invalid_seifert() {
        assert_eq!(
            SeifertMatrix::from_i64_rows(&[[1, 0], [0, 1]]),
            Err(KnotError::InvalidSeifert(BigInt::from(0)))
        );
        assert!(matches!(
            SeifertMatrix::from_i64_rows(&[vec![1, 0], vec![0]]),
            Err(KnotError::NotSquare { .. })
        ));
    }

    #[test]
    fn pretzel_values() {
        assert_eq!(PretzelKnot::new(3, 7, 6).unwrap().determinant(), 81);
        assert_eq!(PretzelKnot::new(3, -5, -8).unwrap().determinant(), 1);
        let k = PretzelKnot::new(3, 5, -2).unwrap();
        assert_eq!(k.determinant(), -1);
        assert_eq!(k.signature().unwrap(), -8);
        let w = k.witt_class().unwrap();
        let vals: Vec<i64> = w.values().map(|v| v.to_i64().unwrap()).collect();
        assert_eq!(vals, vec![3, 5, -2, -30]);
        assert!(w.boundary_is_zero().unwrap());

        let k = PretzelKnot::new(3, 7, 6).unwrap();
        assert_eq!(k.signature().unwrap(), -8);
        // pqr = 126 = 2·3²·7
        let vals: Vec<i64> = k.witt_class().unwrap().values().map(|v| v.to_i64().unwrap()).collect();
        assert_eq!(vals, vec![3, 7, 6, 14]);
        assert!(!k.witt_class().unwrap().boundary_is_zero().unwrap());

        assert_eq!(PretzelKnot::new(-3, -5, 2).unwrap().signature().unwrap(), 8);
        let vals: Vec<i64> =
            PretzelKnot::new(1, 1, 2).unwrap().witt_class().unwrap().values().map(|v| v.to_i64().unwrap()).collect();
        assert_eq!(vals, vec![1, 1, 2, 2]);
    }

    #[test]
    fn pretzel_errors() {
        assert_eq!(PretzelKnot::new(2, 3, 4), Err(KnotError::InvalidParity));
        assert_eq!(PretzelKnot::new(3, 5, 3), Err(KnotError::InvalidParity));
        // 3·(-3) + 0 = -9: valid knot, but r = 0 and p + q = 0 are outside the formulas
        let k = PretzelKnot::new(3, -3, 0).unwrap();
        assert!(matches!(k.witt_class(), Err(KnotError::DegenerateParameter(_))));
        assert!(matches!(k.signature(), Err(KnotError::DegenerateParameter(_))));
    }
}
