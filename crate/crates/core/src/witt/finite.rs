//! Witt groups of the prime fields `F_p`.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::factor::pow_mod;
use super::WittError;

/// An element of `W(F_p)` in canonical form.
///
/// Forms over `F_p` are classified by rank and discriminant, so a Witt class is
/// pinned down by the rank parity together with the square class of the
/// signed discriminant `(-1)^(n(n-1)/2)·det`. The class is zero exactly when
/// the rank is even and the signed discriminant is a square, i.e. when the
/// discriminant matches that of a hyperbolic space. Over `F_2` every unit is
/// a square and only the rank parity survives.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteWittClass {
    prime: u128,
    rank_parity: u8,
    disc_is_square: bool,
}

impl fmt::Debug for FiniteWittClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "W(F_{})[rank {} mod 2, disc {}]",
            self.prime,
            self.rank_parity,
            if self.disc_is_square { "square" } else { "non-square" }
        )
    }
}

impl FiniteWittClass {
    pub fn zero(prime: u128) -> Self {
        Self { prime, rank_parity: 0, disc_is_square: true }
    }

    /// The class of the one-dimensional form `<u>` over `F_p`.
    pub fn unit(prime: u128, u: &BigInt) -> Result<Self, WittError> {
        let disc_is_square = quadratic_residue(u, prime)?;
        Ok(Self { prime, rank_parity: 1, disc_is_square })
    }

    /// Rebuilds a class from its stored components (e.g. after deserialization).
    pub fn from_parts(prime: u128, rank_parity: u8, disc_is_square: bool) -> Self {
        Self {
            prime,
            rank_parity: rank_parity & 1,
            disc_is_square: disc_is_square || prime == 2,
        }
    }

    pub fn prime(&self) -> u128 {
        self.prime
    }

    pub fn rank_parity(&self) -> u8 {
        self.rank_parity
    }

    /// Whether the signed discriminant is a square in `F_p`.
    pub fn disc_is_square(&self) -> bool {
        self.disc_is_square
    }

    pub fn add(&self, other: &Self) -> Result<Self, WittError> {
        if self.prime != other.prime {
            return Err(WittError::PrimeMismatch(self.prime, other.prime));
        }
        let both_odd = self.rank_parity & other.rank_parity == 1;
        let mut square = self.disc_is_square == other.disc_is_square;
        if both_odd && self.prime % 4 == 3 {
            // the extra factor (-1)^(r1·r2) is a non-square
            square = !square;
        }
        Ok(Self::from_parts(self.prime, self.rank_parity ^ other.rank_parity, square))
    }

    pub fn neg(&self) -> Self {
        if self.prime == 2 || self.rank_parity == 0 {
            return *self;
        }
        // <-u>: flips the square class iff -1 is not a square
        Self { disc_is_square: self.disc_is_square ^ (self.prime % 4 == 3), ..*self }
    }

    pub fn is_zero(&self) -> bool {
        self.rank_parity == 0 && (self.prime == 2 || self.disc_is_square)
    }
}

/// Euler's criterion: `u` is a square mod `p` iff `u^((p-1)/2) ≡ 1`.
///
/// Every unit of `F_2` is a square, so `p = 2` returns `true` for odd `u`.
pub fn quadratic_residue(u: &BigInt, p: u128) -> Result<bool, WittError> {
    let pb = BigInt::from(p);
    let r = u.mod_floor(&pb);
    if r.bits() == 0 {
        return Err(WittError::NotCoprime);
    }
    if p == 2 {
        return Ok(true);
    }
    let r = r.abs().to_u128().expect("residue below p");
    Ok(pow_mod(r, (p - 1) / 2, p) == 1)
}
