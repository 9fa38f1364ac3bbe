//! The signature theorem for even forms of odd determinant: if the rational
//! Witt class has vanishing boundary, the signature is divisible by 8.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{DiscriminantError, DiscriminantForm, Metabolizer};
use crate::forms::IntegerSymmetricForm;
use crate::smith::lattice_basis;
use crate::witt::WittClassQ;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainTheoremReport {
    pub is_even: bool,
    pub det: BigInt,
    pub det_odd: bool,
    pub boundary_zero: bool,
    /// Generators of a metabolizer over the cyclic factors, if one was found.
    pub metabolizer: Option<Vec<Vec<u64>>>,
    /// False when `|G|` exceeded the search bound.
    pub metabolizer_searched: bool,
    pub signature: i64,
    pub signature_mod_8: i64,
    pub theorem_applies: bool,
    pub conclusion_holds: bool,
    /// For odd determinant the boundary vanishes exactly when the linking
    /// form is metabolic; set if the two computations disagree.
    pub witness_disagreement: bool,
}

/// Assembles the hypotheses and the conclusion of the theorem for `form`.
///
/// The metabolizer search runs only when `|G| ≤ group_bound`. Degenerate
/// forms are rejected with [`WittError::ZeroEntry`](crate::witt::WittError).
pub fn verify_main_theorem(
    form: &IntegerSymmetricForm,
    group_bound: u64,
) -> Result<MainTheoremReport, DiscriminantError> {
    let is_even = form.is_even();
    let det = form.determinant().clone();
    let det_odd = det.is_odd();
    let boundary_zero = WittClassQ::of_form(form)?.boundary_is_zero()?;
    let signature = form.signature();
    let signature_mod_8 = signature.rem_euclid(8);

    let disc = DiscriminantForm::of_form(form);
    let (metabolizer, metabolizer_searched) = match disc.find_metabolizer(group_bound) {
        Ok(m) => (m.map(|m| m.generators), true),
        Err(DiscriminantError::GroupTooLarge { .. }) => (None, false),
        Err(e) => return Err(e),
    };
    let witness_disagreement =
        det_odd && metabolizer_searched && metabolizer.is_some() != boundary_zero;

    let theorem_applies = is_even && det_odd && boundary_zero;
    Ok(MainTheoremReport {
        is_even,
        det,
        det_odd,
        boundary_zero,
        metabolizer,
        metabolizer_searched,
        signature,
        signature_mod_8,
        theorem_applies,
        conclusion_holds: signature_mod_8 == 0,
        witness_disagreement,
    })
}

/// The overlattice `L₁ = L + Σ Z·h` spanned by `L` and representatives of the
/// metabolizer generators, as a form on a basis of `L₁`. Its index over `L`
/// is `|H|`.
pub fn overlattice(
    form: &IntegerSymmetricForm,
    disc: &DiscriminantForm,
    metabolizer: &Metabolizer,
) -> Result<IntegerSymmetricForm, DiscriminantError> {
    let n = form.rank();
    let k = disc.rank();
    let mut vectors: Vec<Vec<BigRational>> = Vec::new();
    for gen in &metabolizer.generators {
        if gen.len() != k {
            return Err(DiscriminantError::LengthMismatch { got: gen.len(), expected: k });
        }
        let mut v = alloc::vec![BigRational::zero(); n];
        for (c, x) in gen.iter().zip(&disc.generators) {
            let c = BigRational::from_integer(BigInt::from(*c));
            for (vi, xi) in v.iter_mut().zip(x) {
                *vi += &c * xi;
            }
        }
        vectors.push(v);
    }

    let mut scale = BigInt::one();
    for x in vectors.iter().flatten() {
        scale = scale.lcm(x.denom());
    }
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { scale.clone() } else { BigInt::zero() }).collect())
        .collect();
    for v in &vectors {
        rows.push(v.iter().map(|x| (x * BigRational::from_integer(scale.clone())).to_integer()).collect());
    }
    let basis: Vec<Vec<BigRational>> = lattice_basis(&rows)
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::new(x, scale.clone())).collect())
        .collect();

    let mut gram = Vec::with_capacity(n);
    for u in &basis {
        let mut row = Vec::with_capacity(n);
        for v in &basis {
            let b = form.eval(u, v);
            if !b.is_integer() {
                return Err(DiscriminantError::NotIntegral);
            }
            row.push(b.to_integer());
        }
        gram.push(row);
    }
    Ok(IntegerSymmetricForm::from_rows(gram).expect("Gram matrix of a basis is square and symmetric"))
}
