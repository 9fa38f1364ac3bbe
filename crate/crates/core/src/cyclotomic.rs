//! Exact arithmetic in `Z[ζ_n]`.
//!
//! An element is a polynomial in `ζ = e^{2πi/n}` with integer coefficients,
//! stored modulo `x^n - 1`. Equality is decided by reducing modulo the
//! cyclotomic polynomial `Φ_n`, using `Φ_n(x) = Φ_r(x^s)` for `r = rad(n)`,
//! `s = n / r`: the remainder is computed blockwise on the `s` residue classes
//! of exponents mod `s`, each reduced modulo the much smaller `Φ_r`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    order: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicElement {
    pub fn zero(order: u64) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        Self { order, coeffs: vec![BigInt::zero(); order as usize] }
    }

    /// `c · ζ^k`.
    pub fn monomial(order: u64, k: u64, c: BigInt) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[(k % order) as usize] = c;
        e
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add_term(&mut self, k: u64, c: &BigInt) {
        self.coeffs[(k % self.order) as usize] += c;
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Self { order: self.order, coeffs }
    }

    /// Re-expresses the element in `Z[ζ_m]` for a multiple `m` of the order.
    pub fn lift(&self, m: u64) -> Self {
        assert_eq!(m % self.order, 0, "lift target must be a multiple of the order");
        let step = m / self.order;
        let mut out = Self::zero(m);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[(k as u64 * step) as usize] = c.clone();
            }
        }
        out
    }

    /// Canonical representative: the remainder modulo `Φ_n`, as a coefficient
    /// vector of length `φ(n)`.
    pub fn reduced(&self) -> Vec<BigInt> {
        let n = self.order;
        let r = radical(n);
        let s = n / r;
        let phi_r = cyclotomic_polynomial(r);
        let deg_r = phi_r.len() - 1;
        let mut out = vec![BigInt::zero(); deg_r * s as usize];
        for j in 0..s {
            // block j collects the coefficients of x^(j + t·s)
            let block: Vec<BigInt> =
                (0..r).map(|t| self.coeffs[(j + t * s) as usize].clone()).collect();
            let rem = poly_rem_monic(block, &phi_r);
            for (t, c) in rem.into_iter().enumerate() {
                out[j as usize + t * s as usize] = c;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(Zero::is_zero)
    }

    pub fn exact_eq(&self, other: &Self) -> bool {
        let m = lcm(self.order, other.order);
        self.lift(m).sub(&other.lift(m)).is_zero()
    }

    /// Floating-point value in `C` as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * core::f64::consts::PI * k as f64 / self.order as f64;
            re += c * libm::cos(theta);
            im += c * libm::sin(theta);
        }
        (re, im)
    }
}

/// `Φ_n`, coefficients ascending, by dividing `x^n - 1` by `Φ_d` for every
/// proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut memo = BTreeMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: u64, memo: &mut BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_memo(d, memo);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    memo.insert(n, num.clone());
    num
}

/// Quotient of an exact division by a monic polynomial.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut q = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    q
}

/// Remainder modulo a monic polynomial, padded to its degree.
fn poly_rem_monic(mut a: Vec<BigInt>, m: &[BigInt]) -> Vec<BigInt> {
    let dm = m.len() - 1;
    for k in (dm..a.len()).rev() {
        let c = a[k].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in m.iter().enumerate() {
            a[k - dm + i] -= &c * d;
        }
    }
    a.resize(dm, BigInt::zero());
    a
}

fn radical(mut n: u64) -> u64 {
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            r *= p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    r * n.max(1)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
