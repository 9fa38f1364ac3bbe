//! Gauss sums `G(b) = Σ_{u ∈ L#/L} e^{πi·b(u,u)}` of even forms.

use alloc::collections::BTreeMap;
use core::ops::Range;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::{DiscriminantError, DiscriminantForm, SmallForm};
use crate::cyclotomic::{lcm, CyclotomicElement};
use crate::forms::IntegerSymmetricForm;

/// `Σ_r count[r]·e^{πi·r/N}` with residues `r` taken mod `2N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussSumValue {
    /// The common denominator `N` of the exponents `b(u, u)`.
    pub modulus: u64,
    pub terms: BTreeMap<u64, u64>,
}

impl GaussSumValue {
    pub fn new(modulus: u64) -> Self {
        Self { modulus, terms: BTreeMap::new() }
    }

    /// Number of cosets summed over.
    pub fn count(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Combines partial sums over disjoint coset ranges.
    pub fn merge(&mut self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "partial sums must share a modulus");
        for (&r, &c) in &other.terms {
            *self.terms.entry(r).or_insert(0) += c;
        }
    }

    /// The sum as an element of `Z[ζ_{2N}]`.
    pub fn to_cyclotomic(&self) -> CyclotomicElement {
        let mut e = CyclotomicElement::zero(2 * self.modulus);
        for (&r, &c) in &self.terms {
            e.add_term(r, &BigInt::from(c));
        }
        e
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (&r, &c) in &self.terms {
            let theta = core::f64::consts::PI * r as f64 / self.modulus as f64;
            re += c as f64 * libm::cos(theta);
            im += c as f64 * libm::sin(theta);
        }
        (re, im)
    }
}

fn small_form(
    form: &IntegerSymmetricForm,
    enum_bound: u64,
) -> Result<(DiscriminantForm, SmallForm), DiscriminantError> {
    if !form.is_even() {
        return Err(DiscriminantError::NotEven);
    }
    let det = form.determinant().abs();
    if det > BigInt::from(enum_bound) {
        return Err(DiscriminantError::DeterminantTooLarge { det, bound: enum_bound });
    }
    let disc = DiscriminantForm::of_form(form);
    let small = disc
        .small()
        .ok_or(DiscriminantError::DeterminantTooLarge { det, bound: enum_bound })?;
    Ok((disc, small))
}

/// Enumerates all `|det|` cosets of `L` in `L#`.
pub fn gauss_sum(form: &IntegerSymmetricForm, enum_bound: u64) -> Result<GaussSumValue, DiscriminantError> {
    let (_, small) = small_form(form, enum_bound)?;
    let size = small.size();
    Ok(partial_sum(&small, 0..size))
}

/// The part of the sum over coset indices in `range` (mixed-radix order,
/// first cyclic factor fastest). Disjoint ranges merge to the full sum.
pub fn gauss_sum_range(
    form: &IntegerSymmetricForm,
    enum_bound: u64,
    range: Range<u64>,
) -> Result<GaussSumValue, DiscriminantError> {
    let (_, small) = small_form(form, enum_bound)?;
    let end = range.end.min(small.size());
    Ok(partial_sum(&small, range.start..end))
}

/// `|det|` for forms within the enumeration bound.
pub fn coset_count(form: &IntegerSymmetricForm) -> Option<u64> {
    form.determinant().abs().to_u64()
}

fn partial_sum(small: &SmallForm, range: Range<u64>) -> GaussSumValue {
    let mut out = GaussSumValue::new(small.den);
    if range.is_empty() {
        return out;
    }
    let mut x = small.decode(range.start);
    for _ in range {
        *out.terms.entry(small.quad(&x)).or_insert(0) += 1;
        // odometer increment
        for (c, &d) in x.iter_mut().zip(&small.orders) {
            *c += 1;
            if *c < d {
                break;
            }
            *c = 0;
        }
    }
    out
}

/// Outcome of comparing `G(b)` with `√|det|·e^{2πiσ/8}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussCheck {
    pub value: GaussSumValue,
    pub signature: i64,
    /// Exact cyclotomic comparison; only available when `|det|` is a square.
    pub exact: Option<bool>,
    /// `|G_computed - G_predicted|`.
    pub numeric_error: f64,
    pub passed: bool,
}

/// Absolute tolerance of the floating-point comparison.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

pub fn gauss_sum_check(form: &IntegerSymmetricForm, enum_bound: u64) -> Result<GaussCheck, DiscriminantError> {
    Ok(check_gauss_value(form, gauss_sum(form, enum_bound)?))
}

/// Compares an already computed sum (for instance merged from
/// [`gauss_sum_range`] pieces) with the prediction for `form`.
pub fn check_gauss_value(form: &IntegerSymmetricForm, value: GaussSumValue) -> GaussCheck {
    let signature = form.signature();
    let det = form.determinant().abs();

    let (re, im) = value.to_complex();
    let root = libm::sqrt(det.to_f64().unwrap_or(f64::INFINITY));
    let theta = 2.0 * core::f64::consts::PI * signature.rem_euclid(8) as f64 / 8.0;
    let (pre, pim) = (root * libm::cos(theta), root * libm::sin(theta));
    let numeric_error = libm::hypot(re - pre, im - pim);

    let exact = exact_root(&det).map(|m| {
        let predicted =
            CyclotomicElement::monomial(8, signature.rem_euclid(8) as u64, BigInt::from(m));
        let order = lcm(8, 2 * value.modulus);
        value.to_cyclotomic().lift(order).sub(&predicted.lift(order)).is_zero()
    });
    let passed = match exact {
        Some(e) => e,
        None => numeric_error < NUMERIC_TOLERANCE,
    };
    GaussCheck { value, signature, exact, numeric_error, passed }
}

fn exact_root(n: &BigInt) -> Option<u64> {
    let r = n.sqrt();
    (&r * &r == *n).then(|| r.to_u64()).flatten()
}
