//! Typed JSON reports. Every integer that can exceed 64 bits is a decimal
//! string and every rational is a `"num/den"` string.

use linkform::discriminant::{GaussCheck, Metabolizer};
use linkform::witt::FiniteWittClass;
use linkform::{BigInt, BigRational, DiscriminantForm, KnotReport, MainTheoremReport};
use serde::{Deserialize, Serialize};

pub fn rational(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremJson {
    pub rank: usize,
    pub is_even: bool,
    pub det: String,
    pub det_odd: bool,
    pub boundary_zero: bool,
    pub metabolizer: Option<Vec<Vec<u64>>>,
    pub metabolizer_searched: bool,
    pub signature: i64,
    pub signature_mod_8: i64,
    pub theorem_applies: bool,
    pub conclusion_holds: bool,
    pub witness_disagreement: bool,
}

impl TheoremJson {
    pub fn new(rank: usize, r: &MainTheoremReport) -> Self {
        Self {
            rank,
            is_even: r.is_even,
            det: r.det.to_string(),
            det_odd: r.det_odd,
            boundary_zero: r.boundary_zero,
            metabolizer: r.metabolizer.clone(),
            metabolizer_searched: r.metabolizer_searched,
            signature: r.signature,
            signature_mod_8: r.signature_mod_8,
            theorem_applies: r.theorem_applies,
            conclusion_holds: r.conclusion_holds,
            witness_disagreement: r.witness_disagreement,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagJson {
    pub pivot: String,
    pub entries: Vec<String>,
    /// Rows of `P` with `P·B·Pᵀ` diagonal.
    pub transition: Vec<Vec<String>>,
    pub signature: i64,
    /// Square-free representatives of the diagonal entries.
    pub witt_class: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries_approx: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteWittJson {
    pub prime: u128,
    pub rank_parity: u8,
    pub disc_square: bool,
    pub zero: bool,
}

impl From<&FiniteWittClass> for FiniteWittJson {
    fn from(c: &FiniteWittClass) -> Self {
        Self {
            prime: c.prime(),
            rank_parity: c.rank_parity(),
            disc_square: c.disc_is_square(),
            zero: c.is_zero(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryJson {
    pub witt_class: Vec<String>,
    pub signature: i64,
    pub boundary: Vec<FiniteWittJson>,
    pub boundary_zero: bool,
    pub witt_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetabolizerJson {
    pub generators: Vec<Vec<u64>>,
    pub order: u64,
}

impl From<&Metabolizer> for MetabolizerJson {
    fn from(m: &Metabolizer) -> Self {
        Self { generators: m.generators.clone(), order: m.order }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscJson {
    pub order: String,
    pub orders: Vec<String>,
    /// `λ(g_i, g_j)` in `[0, 1)`.
    pub linking: Vec<Vec<String>>,
    /// `b(g_i, g_i)` in `[0, 2)`.
    pub quad_diag: Vec<String>,
    pub metabolizer: Option<MetabolizerJson>,
    pub metabolizer_searched: bool,
}

impl DiscJson {
    pub fn new(d: &DiscriminantForm, metabolizer: Option<&Metabolizer>, searched: bool) -> Self {
        Self {
            order: d.order().to_string(),
            orders: d.orders.iter().map(BigInt::to_string).collect(),
            linking: d.linking.iter().map(|r| r.iter().map(rational).collect()).collect(),
            quad_diag: d.quad_diag.iter().map(rational).collect(),
            metabolizer: metabolizer.map(MetabolizerJson::from),
            metabolizer_searched: searched,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussTerm {
    pub residue: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussJson {
    /// The sum is `Σ count·e^{πi·residue/modulus}`.
    pub modulus: u64,
    pub terms: Vec<GaussTerm>,
    pub cosets: u64,
    pub signature: i64,
    pub det: String,
    /// `"exact"` when |det| is a square, otherwise `"numeric"`.
    pub method: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value_approx: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric_error: Option<f64>,
}

impl GaussJson {
    pub fn new(c: &GaussCheck, det: &BigInt, approx: bool) -> Self {
        let (re, im) = c.value.to_complex();
        Self {
            modulus: c.value.modulus,
            terms: c.value.terms.iter().map(|(&residue, &count)| GaussTerm { residue, count }).collect(),
            cosets: c.value.count(),
            signature: c.signature,
            det: det.to_string(),
            method: if c.exact.is_some() { "exact" } else { "numeric" }.into(),
            passed: c.passed,
            value_approx: approx.then_some([re, im]),
            numeric_error: approx.then_some(c.numeric_error),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotJson {
    pub size: usize,
    pub signature: i64,
    pub determinant: String,
    pub murasugi_class: i64,
    pub murasugi_holds: bool,
    pub boundary_zero: bool,
    pub signature_mod_8: Option<i64>,
}

impl KnotJson {
    pub fn new(size: usize, r: &KnotReport) -> Self {
        Self {
            size,
            signature: r.signature,
            determinant: r.determinant.to_string(),
            murasugi_class: r.murasugi_class,
            murasugi_holds: r.murasugi_holds,
            boundary_zero: r.boundary_zero,
            signature_mod_8: r.signature_mod_8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PretzelJson {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub determinant: String,
    /// `null` when `r = 0`.
    pub witt_class: Option<Vec<String>>,
    pub boundary_zero: Option<bool>,
    /// `null` when `p + q = 0`.
    pub signature: Option<i64>,
}
