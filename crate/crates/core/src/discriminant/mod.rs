//! Discriminant groups `L#/L` with their linking forms `λ_b`.
//!
//! For a Gram matrix `B` with Smith form `U·B·V = diag(d_1, …, d_n)`, the
//! dual lattice is `B⁻¹·Z^n` and `L#/L ≅ ⊕ Z/d_i`; the class of the vector
//! `x_i = V·e_i / d_i` generates the `i`-th cyclic factor. Linking values are
//! `λ(x_i, x_j) = x_iᵀ·B·x_j mod 1`, and since an even form makes `b(u, u)`
//! well defined mod 2 on cosets, the diagonal `b(x_i, x_i) mod 2` is kept as
//! well for Gauss sums.

mod gauss;
mod metabolizer;
mod theorem;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use gauss::{
    check_gauss_value, coset_count, gauss_sum, gauss_sum_check, gauss_sum_range, GaussCheck, GaussSumValue,
    NUMERIC_TOLERANCE,
};
pub use metabolizer::Metabolizer;
pub use theorem::{overlattice, verify_main_theorem, MainTheoremReport};

use crate::forms::IntegerSymmetricForm;
use crate::smith::smith_normal_form;
use crate::witt::WittError;

/// Default cap on `|G|` for the exhaustive metabolizer search.
pub const DEFAULT_GROUP_BOUND: u64 = 10_000;
/// Default cap on `|det|` for Gauss-sum enumeration.
pub const DEFAULT_DET_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiscriminantError {
    #[error("form is not even")]
    NotEven,
    #[error("|det| = {det} exceeds the enumeration bound {bound}")]
    DeterminantTooLarge { det: BigInt, bound: u64 },
    #[error("group order {order} exceeds the search bound {bound}")]
    GroupTooLarge { order: BigInt, bound: u64 },
    #[error("coefficient vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("sublattice is not integral")]
    NotIntegral,
    #[error(transparent)]
    Witt(#[from] WittError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantForm {
    /// Invariant factors `d_1 | d_2 | …`, all greater than 1.
    pub orders: Vec<BigInt>,
    /// `λ(g_i, g_j)` reduced into `[0, 1)`.
    pub linking: Vec<Vec<BigRational>>,
    /// `b(g_i, g_i)` reduced into `[0, 2)`.
    pub quad_diag: Vec<BigRational>,
    /// Representatives of the `g_i` in `L#`, in coordinates of the basis of `L`.
    pub generators: Vec<Vec<BigRational>>,
}

impl DiscriminantForm {
    pub fn of_form(form: &IntegerSymmetricForm) -> Self {
        let n = form.rank();
        let snf = smith_normal_form(form.gram());
        let mut orders = Vec::new();
        let mut generators = Vec::new();
        for (i, d) in snf.invariants.iter().enumerate() {
            if d.is_one() {
                continue;
            }
            let col: Vec<BigRational> = (0..n)
                .map(|r| BigRational::new(snf.right[r][i].clone(), d.clone()))
                .collect();
            orders.push(d.clone());
            generators.push(col);
        }
        let k = orders.len();
        let mut linking = alloc::vec![alloc::vec![BigRational::zero(); k]; k];
        let mut quad_diag = Vec::with_capacity(k);
        for i in 0..k {
            for j in i..k {
                let v = form.eval(&generators[i], &generators[j]);
                if i == j {
                    quad_diag.push(mod_rational(&v, 2));
                }
                let l = mod_rational(&v, 1);
                linking[i][j] = l.clone();
                linking[j][i] = l;
            }
        }
        Self { orders, linking, quad_diag, generators }
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> BigInt {
        self.orders.iter().product()
    }

    /// `|G|` as a machine integer, when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    /// `Σ x_i·y_j·λ(g_i, g_j)` reduced into `[0, 1)`.
    pub fn linking_value(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigRational, DiscriminantError> {
        let k = self.rank();
        for v in [x, y] {
            if v.len() != k {
                return Err(DiscriminantError::LengthMismatch { got: v.len(), expected: k });
            }
        }
        let mut acc = BigRational::zero();
        for i in 0..k {
            for j in 0..k {
                if x[i].is_zero() || y[j].is_zero() {
                    continue;
                }
                acc += &self.linking[i][j] * BigRational::from_integer(&x[i] * &y[j]);
            }
        }
        Ok(mod_rational(&acc, 1))
    }

    /// Smallest `e` with every `λ(g_i, g_j)·e` and `b(g_i, g_i)·e` integral.
    pub fn exponent(&self) -> BigInt {
        let mut e = BigInt::one();
        for v in self.linking.iter().flatten().chain(self.quad_diag.iter()) {
            e = e.lcm(v.denom());
        }
        e
    }

    /// Integer model of the form, for enumeration over `⊕ Z/d_i`.
    pub(crate) fn small(&self) -> Option<SmallForm> {
        let orders = self.orders.iter().map(ToPrimitive::to_u64).collect::<Option<Vec<_>>>()?;
        let den = self.exponent().to_u64()?;
        // keeps every product in `linking`/`quad` below 2^128
        if den >= 1 << 61 || orders.iter().any(|&d| d >= 1 << 62) {
            return None;
        }
        let scale = |v: &BigRational, m: u64| -> u64 {
            let s = v * BigRational::from_integer(den.into());
            debug_assert!(s.is_integer());
            s.to_integer().mod_floor(&BigInt::from(m)).to_u64().expect("reduced")
        };
        let k = orders.len();
        let linking = (0..k)
            .map(|i| (0..k).map(|j| scale(&self.linking[i][j], den)).collect())
            .collect();
        let quad = self.quad_diag.iter().map(|q| scale(q, 2 * den)).collect();
        Some(SmallForm { orders, den, linking, quad })
    }

    /// Brute-force check of the structural invariants; `None` if the group
    /// is too large for the nondegeneracy sweep.
    pub fn check_invariants(&self, form: &IntegerSymmetricForm, bound: u64) -> Option<bool> {
        let k = self.rank();
        if self.order() != form.determinant().abs() {
            return Some(false);
        }
        for w in self.orders.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Some(false);
            }
        }
        for i in 0..k {
            // b(g, g) mod 2 refines λ(g, g) mod 1
            if mod_rational(&(&self.quad_diag[i] - &self.linking[i][i]), 1) != BigRational::zero() {
                return Some(false);
            }
            for j in 0..k {
                if self.linking[i][j] != self.linking[j][i] {
                    return Some(false);
                }
                let t = &self.linking[i][j] * BigRational::from_integer(self.orders[i].clone());
                if !t.is_integer() {
                    return Some(false);
                }
            }
        }
        let small = self.small()?;
        let size = small.size();
        if size > bound {
            return None;
        }
        // nondegenerate: every nonzero x pairs nontrivially with some generator
        for idx in 1..size {
            let x = small.decode(idx);
            let kernel = (0..k).all(|j| {
                let mut e = alloc::vec![0u64; k];
                e[j] = 1;
                small.linking(&x, &e) == 0
            });
            if kernel {
                return Some(false);
            }
        }
        Some(true)
    }
}

/// Integer model of a discriminant form with scaled linking values.
#[derive(Debug, Clone)]
pub(crate) struct SmallForm {
    pub orders: Vec<u64>,
    /// Common denominator `N` of linking values and `b(g_i, g_i)`.
    pub den: u64,
    /// `λ(g_i, g_j)·N mod N`.
    pub linking: Vec<Vec<u64>>,
    /// `b(g_i, g_i)·N mod 2N`.
    pub quad: Vec<u64>,
}

impl SmallForm {
    pub fn size(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn decode(&self, mut idx: u64) -> Vec<u64> {
        self.orders
            .iter()
            .map(|&d| {
                let c = idx % d;
                idx /= d;
                c
            })
            .collect()
    }

    pub fn encode(&self, x: &[u64]) -> u64 {
        let mut idx = 0;
        for (c, d) in x.iter().zip(&self.orders).rev() {
            idx = idx * d + c;
        }
        idx
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).zip(&self.orders).map(|((a, b), d)| (a + b) % d).collect()
    }

    /// `λ(x, y)·N mod N`.
    pub fn linking(&self, x: &[u64], y: &[u64]) -> u64 {
        let n = self.den as u128;
        let mut acc: u128 = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    acc = (acc + xi as u128 * yj as u128 % n * self.linking[i][j] as u128) % n;
                }
            }
        }
        acc as u64
    }

    /// `b(u, u)·N mod 2N` for `u = Σ x_i g_i`.
    pub fn quad(&self, x: &[u64]) -> u64 {
        let m = 2 * self.den as u128;
        let mut acc: u128 = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let xi = xi as u128;
            acc = (acc + xi * xi % m * self.quad[i] as u128) % m;
            for (j, &xj) in x.iter().enumerate().skip(i + 1) {
                if xj != 0 {
                    // 2·λ_ij·N taken mod 2N
                    let c = 2 * self.linking[i][j] as u128;
                    acc = (acc + xi * xj as u128 % m * c) % m;
                }
            }
        }
        acc as u64
    }
}

/// `v` reduced into `[0, m)`.
pub(crate) fn mod_rational(v: &BigRational, m: i64) -> BigRational {
    let m = BigRational::from_integer(m.into());
    let q = (v / &m).floor();
    v - q * m
}
