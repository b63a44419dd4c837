//! JSON report documents.
//!
//! Exact quantities are written twice: as a canonical radical string when
//! one exists, and as a decimal string with 16 significant digits. Integers
//! that fit in an `i64` are JSON numbers; larger ones are decimal strings.

use latscale::lattice::LatticePoint;
use latscale::{
    DirectionalScaling, Family, GridReport, IdealReport, IntMatrix2, SymmetryReport, TowerElement,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::decimal;

pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument<I, R> {
    pub schema_version: String,
    pub command: String,
    pub inputs: I,
    pub results: R,
}

impl<I, R> ReportDocument<I, R> {
    pub fn new(command: &str, inputs: I, results: R) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            inputs,
            results,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Int {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for Int {
    fn from(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(s) => Int::Small(s),
            None => Int::Big(v.to_string()),
        }
    }
}

impl std::fmt::Display for Int {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(v) => f.write_str(v),
        }
    }
}

pub type Matrix = [[Int; 2]; 2];

pub fn matrix(m: &IntMatrix2) -> Matrix {
    [
        [Int::from(&m.a), Int::from(&m.b)],
        [Int::from(&m.c), Int::from(&m.d)],
    ]
}

pub fn matrix_string(m: &Matrix) -> String {
    format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactValue {
    /// Canonical radical string, absent when the value is not in `Q(sqrt d)`.
    pub radical: Option<String>,
    /// Coefficients over the tower generators.
    pub tower: String,
    pub decimal: String,
}

impl ExactValue {
    pub fn of(e: &TowerElement) -> Self {
        ExactValue {
            radical: e.to_surd().map(|s| s.to_string()),
            tower: e.to_string(),
            decimal: decimal::report(e.embed().re),
        }
    }

    /// Radical form when available, tower form otherwise.
    pub fn display(&self) -> &str {
        self.radical.as_deref().unwrap_or(&self.tower)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformSummary {
    pub lattice: String,
    /// `k` in `x^2 = 1 - k x`, when the transform belongs to the scheme.
    pub k: Option<KValue>,
    pub tan_theta: ExactValue,
    pub theta_degrees: String,
    pub scale: ExactValue,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KValue {
    pub a: i64,
    pub b: i64,
    pub radical: String,
    pub decimal: String,
}

impl TransformSummary {
    pub fn of(ds: &DirectionalScaling) -> Self {
        let k = match ds.family() {
            Family::Scheme(k) => Some(KValue {
                a: k.a,
                b: k.b,
                radical: k.to_surd().to_string(),
                decimal: decimal::report(k.to_f64()),
            }),
            _ => None,
        };
        TransformSummary {
            lattice: ds.kind().to_string(),
            k,
            tan_theta: ExactValue::of(ds.tan_theta()),
            theta_degrees: decimal::report(ds.theta_degrees()),
            scale: ExactValue::of(ds.scale()),
            relations: ds.tower().relations(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointValue {
    pub m: Int,
    pub n: Int,
}

impl PointValue {
    pub fn of(p: &LatticePoint) -> Self {
        PointValue {
            m: Int::from(&p.m),
            n: Int::from(&p.n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSummary {
    pub principal: bool,
    pub generator: Option<PointValue>,
    pub index: Int,
}

impl IdealSummary {
    pub fn of(r: &IdealReport) -> Self {
        IdealSummary {
            principal: r.is_principal,
            generator: r.generator.as_ref().map(PointValue::of),
            index: Int::from(&r.index),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSummary {
    pub radius: u64,
    pub checked: u64,
    pub failures: u64,
    pub injective: bool,
}

impl GridSummary {
    pub fn of(g: &GridReport) -> Self {
        GridSummary {
            radius: g.radius,
            checked: g.checked,
            failures: g.failures,
            injective: g.injective,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetrySummary {
    pub transform: TransformSummary,
    pub verified: bool,
    pub scalar: Option<ExactValue>,
    /// Primitive integer matrix of the induced map.
    pub matrix: Option<Matrix>,
    /// Integer matrix over the baseline scalar, before the entry gcd is
    /// folded into `scalar`.
    pub raw_matrix: Option<Matrix>,
    pub det: Option<Int>,
    pub raw_det: Option<Int>,
    pub sublattice_index: Option<Int>,
    /// Ideal structure of the image of `matrix`.
    pub image: Option<IdealSummary>,
    pub grid: Option<GridSummary>,
    pub notes: String,
}

impl SymmetrySummary {
    pub fn of(r: &SymmetryReport, image: Option<&IdealReport>) -> Self {
        let im = r.induced.as_ref();
        SymmetrySummary {
            transform: TransformSummary::of(&r.transform),
            verified: r.verified(),
            scalar: im.map(|im| ExactValue::of(&im.scalar)),
            matrix: im.map(|im| matrix(&im.matrix)),
            raw_matrix: im.map(|im| matrix(&im.raw_matrix)),
            det: r.det().as_ref().map(Int::from),
            raw_det: r.raw_det().as_ref().map(Int::from),
            sublattice_index: r.sublattice_index().as_ref().map(Int::from),
            image: image.map(IdealSummary::of),
            grid: r.grid.as_ref().map(GridSummary::of),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyInputs {
    pub lattice: String,
    pub k: Option<u64>,
    pub radius: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInputs {
    pub k_max: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyResults {
    pub rows: Vec<SymmetrySummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchInputs {
    pub lattice: String,
    /// Inclusive range of the rational part of `k`.
    pub k_int: Option<[i64; 2]>,
    /// Inclusive range of the `sqrt3` coefficient of `k`.
    pub k_sqrt3: Option<[i64; 2]>,
    pub radius: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResults {
    pub candidates: u64,
    pub findings: Vec<SymmetrySummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckFloatInputs {
    pub lattice: String,
    pub k: Option<u64>,
    pub samples: u64,
    pub tol: String,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckFloatResults {
    pub samples: u64,
    pub max_deviation: String,
    pub worst: PointValue,
    pub passed: bool,
}

pub type VerifyDocument = ReportDocument<VerifyInputs, SymmetrySummary>;
pub type FamilyDocument = ReportDocument<FamilyInputs, FamilyResults>;
pub type SearchDocument = ReportDocument<SearchInputs, SearchResults>;
pub type CheckFloatDocument = ReportDocument<CheckFloatInputs, CheckFloatResults>;

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use latscale::analyze;

    #[test]
    fn big_integers_become_strings() {
        let big = BigInt::from(i64::MAX) * 4;
        assert_eq!(Int::from(&BigInt::from(-7)), Int::Small(-7));
        assert_eq!(Int::from(&big), Int::Big(big.to_string()));
        let json = serde_json::to_string(&[Int::from(&big), Int::Small(3)]).unwrap();
        assert_eq!(json, format!("[\"{big}\",3]"));
    }

    #[test]
    fn summary_round_trips() {
        let r = analyze(DirectionalScaling::square_family(2).unwrap(), Some(3));
        let doc = ReportDocument::new(
            "verify",
            VerifyInputs {
                lattice: "square".into(),
                k: Some(2),
                radius: 3,
            },
            SymmetrySummary::of(&r, None),
        );
        let json = to_json(&doc);
        let back: VerifyDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_json(&back), json);
    }

    #[test]
    fn exact_values_carry_radicals() {
        let r = analyze(DirectionalScaling::square_family(2).unwrap(), None);
        let s = SymmetrySummary::of(&r, None);
        let scalar = s.scalar.unwrap();
        assert_eq!(scalar.radical.as_deref(), Some("(2-sqrt(2))/2"));
        assert_eq!(scalar.decimal, "0.2928932188134524");
        assert_eq!(s.transform.scale.display(), "3-2*sqrt(2)");
        assert_eq!(s.transform.theta_degrees, "22.50000000000000");
    }
}
