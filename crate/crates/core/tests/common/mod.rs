//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use linkform::knots::SeifertMatrix;
use linkform::{BigInt, IntegerSymmetricForm};
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn form(rows: &[Vec<i64>]) -> IntegerSymmetricForm {
    IntegerSymmetricForm::from_i64_rows(rows).unwrap()
}

/// Chain of `n` nodes with diagonal `-2` and `1` between neighbours.
pub fn neg_a_chain(n: usize) -> IntegerSymmetricForm {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| match i.abs_diff(j) { 0 => -2, 1 => 1, _ => 0 }).collect())
        .collect();
    form(&rows)
}

pub fn e8() -> IntegerSymmetricForm {
    let mut a = vec![vec![0i64; 8]; 8];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)] {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    form(&a)
}

pub fn trefoil() -> SeifertMatrix {
    SeifertMatrix::from_i64_rows(&[[-1, 1], [0, -1]]).unwrap()
}

pub fn knot_9_1() -> SeifertMatrix {
    let rows: Vec<Vec<i64>> =
        (0..8).map(|i| (0..8).map(|j| if i >= j { -1 } else { 0 }).collect()).collect();
    SeifertMatrix::from_i64_rows(&rows).unwrap()
}

pub fn knot_6_3() -> SeifertMatrix {
    SeifertMatrix::from_i64_rows(&[[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]]).unwrap()
}

pub fn knot_8_1() -> SeifertMatrix {
    SeifertMatrix::from_i64_rows(&[[-1, 1], [0, 3]]).unwrap()
}

pub fn knot_fixtures() -> Vec<(&'static str, SeifertMatrix)> {
    vec![
        ("unknot", SeifertMatrix::unknot()),
        ("3_1", trefoil()),
        ("6_3", knot_6_3()),
        ("8_1", knot_8_1()),
        ("9_1", knot_9_1()),
        ("6_3#8_1", knot_6_3().block_sum(&knot_8_1())),
    ]
}

/// Determinant by the Leibniz permutation expansion.
pub fn leibniz_det(a: &[Vec<i64>]) -> i128 {
    fn go(a: &[Vec<i64>], row: usize, used: &mut Vec<bool>, sign: i128) -> i128 {
        let n = a.len();
        if row == n {
            return sign;
        }
        let mut total = 0;
        for col in 0..n {
            if used[col] || a[row][col] == 0 {
                continue;
            }
            // sign flips once per already-used column to the right
            let inversions = used[col + 1..].iter().filter(|&&u| u).count();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            used[col] = true;
            total += a[row][col] as i128 * go(a, row + 1, used, s);
            used[col] = false;
        }
        total
    }
    go(a, 0, &mut vec![false; a.len()], 1)
}

/// Characteristic polynomial `det(xI - A)` (coefficients ascending) by Faddeev–LeVerrier.
pub fn char_poly(a: &[Vec<i64>]) -> Vec<BigInt> {
    let n = a.len();
    let a: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(1);
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for t in 0..n {
                    s += &a[i][t] * &m[t][j];
                }
                if i == j {
                    s += &c[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        m = next;
        let mut tr = BigInt::zero();
        for i in 0..n {
            for t in 0..n {
                tr += &a[i][t] * &m[t][i];
            }
        }
        c[n - k] = -tr / BigInt::from(k as i64);
    }
    c
}

/// Signature from Descartes' rule of signs, exact because a symmetric
/// matrix has only real eigenvalues.
pub fn descartes_signature(a: &[Vec<i64>]) -> i64 {
    let c = char_poly(a);
    let n = a.len() as i64;
    let changes = |coeffs: Vec<BigInt>| -> i64 {
        let nz: Vec<_> = coeffs.into_iter().filter(|x| !x.is_zero()).collect();
        nz.windows(2).filter(|w| w[0].is_positive() != w[1].is_positive()).count() as i64
    };
    let pos = changes(c.clone());
    // roots of p(-x)
    let neg = changes(
        c.iter().enumerate().map(|(i, x)| if i % 2 == 1 { -x.clone() } else { x.clone() }).collect(),
    );
    assert_eq!(pos + neg, n, "matrix must be nondegenerate");
    pos - neg
}

/// Random symmetric matrix with even diagonal in `[-b, b]` and off-diagonal
/// entries in `[-b, b]`.
pub fn random_even_rows(rng: &mut impl Rng, n: usize, b: i64) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2 * rng.gen_range(-(b / 2)..=b / 2);
        for j in (i + 1)..n {
            let v = rng.gen_range(-b..=b);
            a[i][j] = v;
            a[j][i] = v;
        }
    }
    a
}

pub fn random_symmetric_rows(rng: &mut impl Rng, n: usize, b: i64) -> Vec<Vec<i64>> {
    let mut a = random_even_rows(rng, n, b);
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = rng.gen_range(-b..=b);
    }
    a
}

/// Random even form with `det` accepted by `keep`.
pub fn random_even_form(
    rng: &mut impl Rng,
    n: usize,
    b: i64,
    keep: impl Fn(i128) -> bool,
) -> (Vec<Vec<i64>>, IntegerSymmetricForm) {
    loop {
        let rows = random_even_rows(rng, n, b);
        let d = leibniz_det(&rows);
        if d != 0 && keep(d) {
            let f = form(&rows);
            return (rows, f);
        }
    }
}

/// A random Seifert matrix of size `2g`: `P·(S + K)·Pᵀ` with `S` symmetric,
/// `K - Kᵀ` the standard symplectic matrix and `P` unimodular.
pub fn random_seifert(rng: &mut impl Rng, g: usize, b: i64) -> SeifertMatrix {
    let n = 2 * g;
    let mut xi = random_symmetric_rows(rng, n, b);
    for k in 0..g {
        xi[2 * k][2 * k + 1] += 1;
    }
    let mut p: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            let f = rng.gen_range(-1..=1);
            for c in 0..n {
                p[i][c] += f * p[j][c];
            }
        }
    }
    let mul = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|t| x[i][t] * y[t][j]).sum()).collect()).collect()
    };
    let pt: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| p[j][i]).collect()).collect();
    let out = mul(&mul(&p, &xi), &pt);
    SeifertMatrix::from_i64_rows(&out).unwrap()
}

fn inv_mod(a: i64, p: i64) -> i64 {
    (1..p).find(|x| (a * x).rem_euclid(p) == 1).expect("unit")
}

/// Basis of `{x : row·x = 0}` over `F_p` for a nonzero row.
fn kernel_of_row(row: &[i64], p: i64) -> Vec<Vec<i64>> {
    let n = row.len();
    let pivot = row.iter().position(|&x| x.rem_euclid(p) != 0).expect("nonzero row");
    let inv = inv_mod(row[pivot].rem_euclid(p), p);
    (0..n)
        .filter(|&j| j != pivot)
        .map(|j| {
            let mut v = vec![0i64; n];
            v[j] = 1;
            v[pivot] = (-row[j] * inv).rem_euclid(p);
            v
        })
        .collect()
}

fn bil(g: &[Vec<i64>], x: &[i64], y: &[i64], p: i64) -> i64 {
    let n = g.len();
    let mut s = 0;
    for i in 0..n {
        for j in 0..n {
            s = (s + x[i] * g[i][j] % p * y[j]) % p;
        }
    }
    s.rem_euclid(p)
}

/// Whether the nondegenerate form with Gram matrix `g` over `F_p` has a
/// Lagrangian `L = L^⊥`, by trying every isotropic vector `v` and recursing
/// on `v^⊥ / v`.
pub fn metabolic_oracle(g: &[Vec<i64>], p: i64) -> bool {
    let n = g.len();
    if n == 0 {
        return true;
    }
    if n % 2 == 1 {
        return false;
    }
    let total = (p as u64).pow(n as u32);
    for idx in 1..total {
        let mut v = vec![0i64; n];
        let mut t = idx;
        for c in v.iter_mut() {
            *c = (t % p as u64) as i64;
            t /= p as u64;
        }
        if bil(g, &v, &v, p) != 0 {
            continue;
        }
        // v^⊥ = kernel of the row v·G; pick a complement of v inside it
        let row: Vec<i64> = (0..n).map(|j| (0..n).map(|i| v[i] * g[i][j]).sum::<i64>().rem_euclid(p)).collect();
        let perp = kernel_of_row(&row, p);
        let complement = complement_of(&v, &perp, p);
        let sub: Vec<Vec<i64>> =
            complement.iter().map(|x| complement.iter().map(|y| bil(g, x, y, p)).collect()).collect();
        if metabolic_oracle(&sub, p) {
            return true;
        }
    }
    false
}

/// Vectors of `basis` (which spans a space containing `v`) extending `v` to a
/// basis, with `v` itself dropped.
fn complement_of(v: &[i64], basis: &[Vec<i64>], p: i64) -> Vec<Vec<i64>> {
    let mut chosen: Vec<Vec<i64>> = vec![v.to_vec()];
    let mut out = Vec::new();
    for b in basis {
        let mut trial = chosen.clone();
        trial.push(b.clone());
        if rank_mod(&trial, p) == trial.len() {
            chosen.push(b.clone());
            out.push(b.clone());
        }
    }
    out
}

fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, r);
        let inv = inv_mod(m[rank][c], p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c] * inv % p;
                for j in 0..cols {
                    m[i][j] = (m[i][j] - f * m[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Triple loop over the window, testing `t = ±(pq + pr + qr)` against every odd `m ≤ m_max`.
pub fn naive_solutions(n: i64, m_max: u64, sign: i64) -> Vec<(i64, i64, i64, u64)> {
    let mut out = Vec::new();
    for p in (-n..=n).filter(|x| x % 2 != 0) {
        for q in (-n..=n).filter(|x| x % 2 != 0) {
            for r in (-n..=n).filter(|x| x % 2 == 0) {
                let t = sign * (p * q + p * r + q * r);
                for m in (1..=m_max).step_by(2) {
                    if t == (m * m) as i64 {
                        out.push((p, q, r, m));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn big_to_i128(x: &BigInt) -> i128 {
    x.to_i128().unwrap()
}
