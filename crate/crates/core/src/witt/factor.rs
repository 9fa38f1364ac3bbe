//! Integer factorization: trial division, Pollard rho (Brent), and
//! deterministic Miller-Rabin.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::WittError;

/// Miller-Rabin with the first 13 prime bases is deterministic below this value.
pub const MILLER_RABIN_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

const TRIAL_LIMIT: u64 = 1_000_000;
const BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Prime-power decomposition of `|n|`, primes ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub factors: Vec<(u128, u32)>,
}

impl PrimeFactorization {
    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn product(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::from(1u8), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }

    pub fn valuation(&self, p: u128) -> u32 {
        self.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    /// Product of the primes that occur to an odd power.
    pub fn square_free_part(&self) -> u128 {
        self.factors
            .iter()
            .filter(|&&(_, e)| e % 2 == 1)
            .map(|&(p, _)| p)
            .product()
    }
}

pub fn factorize(n: &BigInt) -> Result<PrimeFactorization, WittError> {
    if n.bits() == 0 {
        return Err(WittError::ZeroEntry);
    }
    let m = n.magnitude().to_u128().ok_or(WittError::TooLarge)?;
    factorize_u128(m)
}

pub fn factorize_u128(mut n: u128) -> Result<PrimeFactorization, WittError> {
    let mut out: Vec<(u128, u32)> = Vec::new();
    if n == 0 {
        return Err(WittError::ZeroEntry);
    }
    let mut push = |p: u128, n: &mut u128| {
        let mut e = 0;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut d: u128 = 5;
    while d <= TRIAL_LIMIT as u128 && d * d <= n {
        push(d, &mut n);
        push(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        let mut large = Vec::new();
        split(n, &mut large)?;
        large.sort_unstable();
        for p in large {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
    }
    out.sort_unstable();
    Ok(PrimeFactorization { factors: out })
}

/// Recursively splits `n` (free of factors below the trial limit) into primes.
fn split(n: u128, out: &mut Vec<u128>) -> Result<(), WittError> {
    if n == 1 {
        return Ok(());
    }
    if (n as u64 as u128) == n && (n as u64) < TRIAL_LIMIT * TRIAL_LIMIT {
        // no factor below the trial limit and n < limit² ⇒ n is prime
        out.push(n);
        return Ok(());
    }
    if n >= MILLER_RABIN_LIMIT {
        // cofactors beyond the certified range are rejected, not guessed
        return Err(WittError::TooLarge);
    }
    if is_prime(n)? {
        out.push(n);
        return Ok(());
    }
    let d = rho(n).expect("pollard rho finds a factor of a composite");
    split(d, out)?;
    split(n / d, out)
}

/// Deterministic Miller-Rabin for `n < MILLER_RABIN_LIMIT`.
pub fn is_prime(n: u128) -> Result<bool, WittError> {
    if n >= MILLER_RABIN_LIMIT {
        return Err(WittError::TooLarge);
    }
    if n < 2 {
        return Ok(false);
    }
    for &p in &BASES {
        if n == p {
            return Ok(true);
        }
        if n % p == 0 {
            return Ok(false);
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

pub(crate) fn mul_mod(a: u128, b: u128, n: u128) -> u128 {
    if n <= u64::MAX as u128 {
        return (a * b) % n;
    }
    // n < 2^127 here, so sums below 2n never overflow
    let (mut a, mut b) = (a % n, b % n);
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = (acc + a) % n;
        }
        a = (a + a) % n;
        b >>= 1;
    }
    acc
}

pub(crate) fn pow_mod(mut base: u128, mut exp: u128, n: u128) -> u128 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Brent's variant of Pollard rho; returns a nontrivial factor of composite `n`.
fn rho(n: u128) -> Option<u128> {
    if n % 2 == 0 {
        return Some(2);
    }
    for c in 1..64u128 {
        let f = |x: u128| (mul_mod(x, x, n) + c) % n;
        let mut y: u128 = 2;
        let mut r: u64 = 1;
        let mut q: u128 = 1;
        let mut g: u128 = 1;
        let mut x = y;
        let mut ys = y;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
            if r > 1 << 40 {
                break;
            }
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g > 1 && g < n {
            return Some(g);
        }
    }
    None
}
