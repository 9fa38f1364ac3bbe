//! Smith normal form over `Z` with unimodular transforms, and integer row
//! echelon bases for lattices given by generators.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `left · A · right = diag(invariants)` with `left`, `right` unimodular and
/// `invariants[i] | invariants[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub invariants: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Smith normal form of a square matrix.
///
/// Pivots are chosen as the entry of smallest nonzero absolute value in the
/// remaining block (first in row-major order on ties).
pub fn smith_normal_form(a: &[Vec<BigInt>]) -> SmithForm {
    let n = a.len();
    let mut m: IntMatrix = a.to_vec();
    let mut left = identity(n);
    let mut right = identity(n);

    for t in 0..n {
        while let Some((pi, pj)) = smallest_entry(&m, t) {
            swap_rows(&mut m, &mut left, t, pi);
            swap_cols(&mut m, &mut right, t, pj);

            let mut clean = true;
            for i in (t + 1)..n {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                add_row(&mut m, &mut left, i, t, &-q);
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in (t + 1)..n {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                add_col(&mut m, &mut right, j, t, &-q);
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole remaining block
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_multiple_of(&m[t][t]));
            match bad {
                Some((i, _)) => add_row(&mut m, &mut left, t, i, &BigInt::one()),
                None => break,
            }
        }
        if m[t][t].is_negative() {
            for x in m[t].iter_mut() {
                *x = -&*x;
            }
            for x in left[t].iter_mut() {
                *x = -&*x;
            }
        }
    }

    let invariants = (0..n).map(|i| m[i][i].clone()).collect();
    SmithForm { invariants, left, right }
}

fn smallest_entry(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let n = m.len();
    let mut best: Option<(usize, usize)> = None;
    for i in t..n {
        for j in t..n {
            if m[i][j].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[bi][bj].abs() <= m[i][j].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_rows(m: &mut IntMatrix, left: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        m.swap(a, b);
        left.swap(a, b);
    }
}

fn swap_cols(m: &mut IntMatrix, right: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut().chain(right.iter_mut()) {
            row.swap(a, b);
        }
    }
}

/// row_dst += f · row_src
fn add_row(m: &mut IntMatrix, left: &mut IntMatrix, dst: usize, src: usize, f: &BigInt) {
    for mat in [m, left] {
        let s = mat[src].clone();
        for (d, x) in mat[dst].iter_mut().zip(s.iter()) {
            *d += f * x;
        }
    }
}

/// col_dst += f · col_src
fn add_col(m: &mut IntMatrix, right: &mut IntMatrix, dst: usize, src: usize, f: &BigInt) {
    for mat in [m, right] {
        for row in mat.iter_mut() {
            let v = f * &row[src];
            row[dst] += v;
        }
    }
}

/// A basis (in row echelon form) of the lattice spanned by integer `rows`.
pub fn lattice_basis(rows: &[Vec<BigInt>]) -> IntMatrix {
    let mut rows: IntMatrix = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let Some(width) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut basis = Vec::new();
    for col in 0..width {
        // Euclid on column `col` until at most one row has a nonzero entry there
        loop {
            let mut nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    let mut r = rows.swap_remove(i);
                    if r[col].is_negative() {
                        r.iter_mut().for_each(|x| *x = -&*x);
                    }
                    basis.push(r);
                }
                break;
            }
            nz.sort_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let p = nz[0];
            let pivot = rows[p].clone();
            for &i in &nz[1..] {
                let q = rows[i][col].div_floor(&pivot[col]);
                for (x, y) in rows[i].iter_mut().zip(pivot.iter()) {
                    *x -= &q * y;
                }
            }
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    basis
}
