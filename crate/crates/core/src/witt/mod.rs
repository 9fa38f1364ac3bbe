//! The rational Witt group `W(Q)` and its residue maps `∂_p : W(Q) → W(F_p)`.
//!
//! A class is stored as a list of one-dimensional forms `<a>` with every `a`
//! reduced to its square-free integer representative (`<a/b> = <ab>` and
//! `<a·t²> = <a>`). The class vanishes iff its signature is zero and every
//! residue `∂_p` vanishes; the linking-form boundary `∂ : W(Q) → W(Q/Z)`
//! vanishes iff every `∂_p` does.

mod factor;
mod finite;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use factor::{factorize, factorize_u128, is_prime, PrimeFactorization, MILLER_RABIN_LIMIT};
pub use finite::{quadratic_residue, FiniteWittClass};

use crate::forms::IntegerSymmetricForm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WittError {
    #[error("zero entry in a diagonal form")]
    ZeroEntry,
    #[error("{0} is not prime")]
    NotPrime(u128),
    #[error("classes over different fields F_{0} and F_{1}")]
    PrimeMismatch(u128, u128),
    #[error("value is divisible by the prime")]
    NotCoprime,
    #[error("integer too large to factor with certified primality")]
    TooLarge,
}

/// One summand `<s>` with `s` a nonzero square-free integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass {
    value: BigInt,
    primes: Vec<u128>,
}

impl SquareClass {
    fn from_rational(a: &BigRational) -> Result<Self, WittError> {
        if a.is_zero() {
            return Err(WittError::ZeroEntry);
        }
        let num = factorize(a.numer())?;
        let den = factorize(a.denom())?;
        let mut primes: Vec<u128> = num
            .factors
            .iter()
            .chain(den.factors.iter())
            .map(|&(p, _)| p)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .filter(|&p| (num.valuation(p) + den.valuation(p)) % 2 == 1)
            .collect();
        primes.sort_unstable();
        let magnitude = primes.iter().fold(BigInt::one(), |acc, &p| acc * BigInt::from(p));
        let value = if a.is_negative() { -magnitude } else { magnitude };
        Ok(Self { value, primes })
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    /// Primes dividing the square-free representative (ascending).
    pub fn primes(&self) -> &[u128] {
        &self.primes
    }

    fn negated(&self) -> Self {
        Self { value: -&self.value, primes: self.primes.clone() }
    }
}

/// A diagonalized class `<a_1> ⊕ … ⊕ <a_k>` in `W(Q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WittClassQ {
    entries: Vec<SquareClass>,
}

impl WittClassQ {
    /// Builds the class of a diagonal form, normalizing each entry.
    pub fn from_diagonal(entries: &[BigRational]) -> Result<Self, WittError> {
        let entries = entries.iter().map(SquareClass::from_rational).collect::<Result<_, _>>()?;
        Ok(Self { entries })
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self, WittError> {
        let q: Vec<BigRational> =
            entries.iter().map(|&a| BigRational::from_integer(a.into())).collect();
        Self::from_diagonal(&q)
    }

    /// The rational Witt class of an integral form.
    pub fn of_form(form: &IntegerSymmetricForm) -> Result<Self, WittError> {
        Self::from_diagonal(&form.diagonalize().entries)
    }

    pub fn entries(&self) -> &[SquareClass] {
        &self.entries
    }

    /// Square-free representatives, in input order.
    pub fn values(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter().map(|e| &e.value)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn signature(&self) -> i64 {
        self.entries.iter().map(|e| if e.value.is_positive() { 1 } else { -1 }).sum()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Self { entries }
    }

    /// The additive inverse, `-<a> = <-a>`.
    pub fn negated(&self) -> Self {
        Self { entries: self.entries.iter().map(SquareClass::negated).collect() }
    }

    /// The residue `∂_p` of the class.
    ///
    /// A summand `<u·p>` (u coprime to p) contributes `<ū>`; summands prime to
    /// `p` contribute nothing.
    pub fn boundary_at_prime(&self, p: u128) -> Result<FiniteWittClass, WittError> {
        if !is_prime(p)? {
            return Err(WittError::NotPrime(p));
        }
        let pb = BigInt::from(p);
        let mut acc = FiniteWittClass::zero(p);
        for e in &self.entries {
            if e.primes.binary_search(&p).is_ok() {
                let unit = &e.value / &pb;
                acc = acc.add(&FiniteWittClass::unit(p, &unit)?)?;
            }
        }
        Ok(acc)
    }

    /// Primes at which some summand has odd valuation; all other residues vanish.
    pub fn relevant_primes(&self) -> Vec<u128> {
        self.entries
            .iter()
            .flat_map(|e| e.primes.iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// `(p, ∂_p)` for every relevant prime, primes ascending.
    pub fn boundary_table(&self) -> Result<Vec<FiniteWittClass>, WittError> {
        self.relevant_primes().into_iter().map(|p| self.boundary_at_prime(p)).collect()
    }

    /// Whether `∂ : W(Q) → W(Q/Z)` kills the class.
    pub fn boundary_is_zero(&self) -> Result<bool, WittError> {
        for p in self.relevant_primes() {
            if !self.boundary_at_prime(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Zero in `W(Q)`: signature zero and every residue zero.
    pub fn is_zero(&self) -> Result<bool, WittError> {
        Ok(self.signature() == 0 && self.boundary_is_zero()?)
    }

    pub fn witt_equal(&self, other: &Self) -> Result<bool, WittError> {
        self.direct_sum(&other.negated()).is_zero()
    }
}
