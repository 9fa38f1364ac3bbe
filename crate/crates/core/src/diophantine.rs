//! Integer solutions of `pq + pr + qr = ±m²` with `p`, `q`, `m` odd and `r` even.
//!
//! With the minus sign every solution has `p + q ≡ 0 mod 8`; with the plus
//! sign both residues 2 and 6 occur.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_integer::Roots;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Self> {
        match v {
            -1 => Some(Self::Minus),
            1 => Some(Self::Plus),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Self::Minus => -1,
            Self::Plus => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiophantineError {
    #[error("no solution with p + q ≡ {0} mod 8 in the window")]
    NotFound(u8),
}

/// Inclusive ranges; values of the wrong parity are skipped during iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchWindow {
    pub p_range: RangeInclusive<i64>,
    pub q_range: RangeInclusive<i64>,
    pub r_range: RangeInclusive<i64>,
    pub m_max: u64,
}

impl SearchWindow {
    /// `|p|, |q| ≤ pq`, `|r| ≤ r`, `m ≤ m_max`.
    pub fn symmetric(pq: i64, r: i64, m_max: u64) -> Self {
        Self { p_range: -pq..=pq, q_range: -pq..=pq, r_range: -r..=r, m_max }
    }

    /// Splits the `p` range into at most `parts` contiguous windows.
    pub fn split_p(&self, parts: usize) -> Vec<SearchWindow> {
        let (lo, hi) = (*self.p_range.start(), *self.p_range.end());
        if hi < lo || parts <= 1 {
            return alloc::vec![self.clone()];
        }
        let len = (hi - lo + 1) as u64;
        let step = len.div_ceil(parts as u64) as i64;
        let mut out = Vec::new();
        let mut start = lo;
        while start <= hi {
            let end = (start + step - 1).min(hi);
            out.push(Self { p_range: start..=end, ..self.clone() });
            start = end + 1;
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionRecord {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub m: u64,
    pub sign: Sign,
    pub p_plus_q_mod_8: u8,
}

fn odd_values(range: &RangeInclusive<i64>) -> impl Iterator<Item = i64> + '_ {
    range.clone().filter(|v| v.rem_euclid(2) == 1)
}

fn even_values(range: &RangeInclusive<i64>) -> impl Iterator<Item = i64> + '_ {
    range.clone().filter(|v| v.rem_euclid(2) == 0)
}

/// Every solution in the window, sorted by `(p, q, r)`.
///
/// With `dedup`, only records with `p ≤ q` are kept (the equation is
/// symmetric in `p` and `q`).
pub fn search(w: &SearchWindow, sign: Sign, dedup: bool) -> Vec<SolutionRecord> {
    let s = sign.as_i64() as i128;
    let mut out = Vec::new();
    for p in odd_values(&w.p_range) {
        for q in odd_values(&w.q_range) {
            if dedup && p > q {
                continue;
            }
            let pq = p as i128 * q as i128;
            let pplusq = p as i128 + q as i128;
            for r in even_values(&w.r_range) {
                let t = s * (pq + pplusq * r as i128);
                if t <= 0 {
                    continue;
                }
                let m = t.sqrt();
                // t is odd, so its root is odd too
                if m * m == t && m <= w.m_max as i128 {
                    out.push(SolutionRecord {
                        p,
                        q,
                        r,
                        m: m as u64,
                        sign,
                        p_plus_q_mod_8: pplusq.rem_euclid(8) as u8,
                    });
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Whether every solution of `pq + pr + qr = -m²` in the window has `p + q ≡ 0 mod 8`.
pub fn verify_negative_restriction(w: &SearchWindow) -> bool {
    search(w, Sign::Minus, false).iter().all(|s| s.p_plus_q_mod_8 == 0)
}

/// Residues of `p + q mod 8` for which the equation has a solution modulo 4.
///
/// This gives `{0, 4}` for the minus sign and `{2, 6}` for the plus sign.
pub fn residue_prefilter(sign: Sign) -> BTreeSet<u8> {
    residue_classes(sign, 4)
}

/// Residues of `p + q mod 8` over all tuples `(p, q, r, m)` mod 8 of the
/// right parities satisfying the equation modulo `modulus` (a divisor of 8).
///
/// Modulo 8 the minus-sign equation already forces `p + q ≡ 0`.
pub fn residue_classes(sign: Sign, modulus: i64) -> BTreeSet<u8> {
    assert!(matches!(modulus, 1 | 2 | 4 | 8), "modulus must divide 8");
    let s = sign.as_i64();
    let mut out = BTreeSet::new();
    for p in (1..8).step_by(2) {
        for q in (1..8).step_by(2) {
            for r in (0..8).step_by(2) {
                for m in (1..8).step_by(2) {
                    if (p * q + p * r + q * r - s * m * m).rem_euclid(modulus) == 0 {
                        out.insert(((p + q) % 8) as u8);
                    }
                }
            }
        }
    }
    out
}

/// The first solutions (in sorted order) of the plus-sign equation with
/// `p + q ≡ 2` and `p + q ≡ 6 mod 8`.
pub fn witness_both_positive_residues(
    w: &SearchWindow,
) -> Result<(SolutionRecord, SolutionRecord), DiophantineError> {
    let all = search(w, Sign::Plus, false);
    let find = |res: u8| {
        all.iter().find(|s| s.p_plus_q_mod_8 == res).copied().ok_or(DiophantineError::NotFound(res))
    };
    Ok((find(2)?, find(6)?))
}
