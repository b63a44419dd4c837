//! Enumeration of scheme parameters `k` and lattice-preservation tests.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::LatticeKind;
use crate::symmetry::{analyze, SymmetryReport};
use crate::transform::{DirectionalScaling, SchemeK};

/// Candidate parameters `k = a + b*sqrt(3)`; all ranges are inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KForm {
    IntegerRange { min: i64, max: i64 },
    SqrtThreeMultiples { min: i64, max: i64 },
    MixedQ3 { a: (i64, i64), b: (i64, i64) },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub kind: LatticeKind,
    pub form: KForm,
    /// Radius of the exact grid sweep run on every positive candidate.
    pub grid_radius: u64,
}

fn range(lo: i64, hi: i64, what: &str) -> Result<std::ops::RangeInclusive<i64>> {
    if lo > hi {
        return Err(Error::InvalidSearchSpec(format!(
            "empty {what} range {lo}..{hi}"
        )));
    }
    Ok(lo..=hi)
}

impl SearchSpec {
    /// Candidates in ascending `(a, b)` order.
    pub fn candidates(&self) -> Result<Vec<SchemeK>> {
        if self.grid_radius == 0 {
            return Err(Error::InvalidSearchSpec(
                "grid radius must be positive".into(),
            ));
        }
        let ks: Vec<SchemeK> = match self.form {
            KForm::IntegerRange { min, max } => {
                range(min, max, "k")?.map(SchemeK::integer).collect()
            }
            KForm::SqrtThreeMultiples { min, max } => {
                range(min, max, "b")?.map(SchemeK::sqrt3_multiple).collect()
            }
            KForm::MixedQ3 { a, b } => {
                let bs = range(b.0, b.1, "b")?;
                range(a.0, a.1, "a")?
                    .flat_map(|a| bs.clone().map(move |b| SchemeK { a, b }))
                    .collect()
            }
        };
        if let Some(k) = ks.iter().find(|k| !k.is_positive()) {
            return Err(Error::InvalidSearchSpec(format!(
                "candidate k = {k} is not positive"
            )));
        }
        Ok(ks)
    }
}

/// Tests every candidate and returns the verified ones, in candidate order.
/// Candidates are processed in parallel; the output does not depend on the
/// number of workers.
pub fn search(spec: &SearchSpec) -> Result<Vec<SymmetryReport>> {
    let found: Vec<Option<SymmetryReport>> = spec
        .candidates()?
        .into_par_iter()
        .map(|k| {
            let ds = DirectionalScaling::scheme(spec.kind, k)?;
            let report = analyze(ds, Some(spec.grid_radius));
            Ok(report.verified().then_some(report))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}
