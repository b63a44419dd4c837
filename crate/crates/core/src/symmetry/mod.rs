//! Lattice-preservation checks for directional scalings.
//!
//! A scaling `T` preserves a lattice up to scale when there is an exact
//! scalar `c` and an integer matrix `M` with `T(p) = c * (M p)` for every
//! lattice point `p`. [`induced_map`] recovers `(c, M)` from the images of
//! the two basis points; the remaining functions machine-check it.

mod search;

pub use search::{search, KForm, SearchSpec};

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{Rational, TowerElement};
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix2, LatticeKind, LatticePoint};
use crate::transform::DirectionalScaling;

/// `T(p) = scalar * (matrix p)` on lattice coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedMap {
    pub scalar: TowerElement,
    /// Primitive form of `raw_matrix`.
    pub matrix: IntMatrix2,
    /// Integer matrix relative to the scheme baseline `x^2 / (1 + x^2)`,
    /// before the entry gcd is folded into the scalar.
    pub raw_matrix: IntMatrix2,
    pub primitive: bool,
}

impl InducedMap {
    pub fn det(&self) -> BigInt {
        self.matrix.det()
    }

    pub fn raw_det(&self) -> BigInt {
        self.raw_matrix.det()
    }

    /// `|det|` of the primitive matrix: the index of the image sublattice.
    pub fn sublattice_index(&self) -> BigInt {
        self.det().abs()
    }

    /// Exact `scalar * (matrix p)`.
    pub fn image(&self, p: &LatticePoint) -> Result<TowerElement> {
        Ok(&self.scalar * &self.matrix.apply(p).to_elem(self.scalar.tower())?)
    }
}

/// Baseline scalar `S / (1 + S)`, which equals `x^2 / (1 + x^2)`.
fn baseline(ds: &DirectionalScaling) -> Result<TowerElement> {
    let one = ds.tower().one();
    Ok(ds.scale() * &(&one + ds.scale()).inv()?)
}

/// Recovers `(scalar, M)` for `ds`, or `NotLatticePreserving` when the basis
/// images divided by the baseline are not rational combinations of `1` and
/// the lattice unit.
pub fn induced_map(ds: &DirectionalScaling) -> Result<InducedMap> {
    let kind = ds.kind();
    let unit = kind.unit_name();
    let base = baseline(ds)?;
    let base_inv = base.inv()?;

    let mut cols = Vec::with_capacity(2);
    for (m, n) in [(1, 0), (0, 1)] {
        let p = LatticePoint::new(m, n, kind);
        let q = ds.apply_exact(&p)? * &base_inv;
        let pair = q.as_rational_pair(unit).ok_or_else(|| {
            Error::NotLatticePreserving(format!(
                "image of {p} over the baseline scalar is {q}, not in Q + Q*{unit}"
            ))
        })?;
        cols.push(pair);
    }

    let den = cols
        .iter()
        .flat_map(|(a, b)| [a.denom(), b.denom()])
        .fold(BigInt::one(), |acc, d| acc.lcm(d));
    let clear = |q: &Rational| (q * Rational::from_integer(den.clone())).to_integer();
    let raw_matrix = IntMatrix2::from_columns(
        (clear(&cols[0].0), clear(&cols[0].1)),
        (clear(&cols[1].0), clear(&cols[1].1)),
    );
    let (g, matrix) = raw_matrix.primitive()?;
    let scalar = base.scale(&Rational::new(g, den));
    Ok(InducedMap {
        scalar,
        primitive: matrix.is_primitive(),
        matrix,
        raw_matrix,
    })
}

/// Exact check of `T(e) = scalar * (M e)` on both basis points.
pub fn check_basis(ds: &DirectionalScaling, im: &InducedMap) -> Result<bool> {
    for (m, n) in [(1, 0), (0, 1)] {
        let p = LatticePoint::new(m, n, ds.kind());
        if ds.apply_exact(&p)? != im.image(&p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridReport {
    pub radius: u64,
    pub checked: u64,
    pub failures: u64,
    /// No two grid points share an image.
    pub injective: bool,
}

impl GridReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.injective
    }
}

/// Checks `T(p) = scalar * (M p)` exactly for every `|m|, |n| <= radius`,
/// and that the map is injective on that grid.
pub fn grid_coincidence_check(
    ds: &DirectionalScaling,
    im: &InducedMap,
    radius: u64,
) -> Result<GridReport> {
    let r =
        i64::try_from(radius).map_err(|_| Error::InvalidTransform("radius too large".into()))?;
    let kind = ds.kind();
    let rows: Vec<(u64, Vec<(BigInt, BigInt)>)> = (-r..=r)
        .into_par_iter()
        .map(|m| {
            let mut failures = 0;
            let mut images = Vec::with_capacity(2 * r as usize + 1);
            for n in -r..=r {
                let p = LatticePoint::new(m, n, kind);
                let q = im.matrix.apply(&p);
                if ds.apply_exact(&p)? != &im.scalar * &q.to_elem(ds.tower())? {
                    failures += 1;
                }
                images.push((q.m, q.n));
            }
            Ok((failures, images))
        })
        .collect::<Result<_>>()?;

    let side = 2 * radius + 1;
    let mut seen = HashSet::with_capacity((side * side) as usize);
    let mut failures = 0;
    for (f, images) in rows {
        failures += f;
        seen.extend(images);
    }
    Ok(GridReport {
        radius,
        checked: side * side,
        failures,
        injective: seen.len() as u64 == side * side,
    })
}

#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub transform: DirectionalScaling,
    /// Present exactly when the transform was verified.
    pub induced: Option<InducedMap>,
    pub grid: Option<GridReport>,
    pub notes: String,
}

impl SymmetryReport {
    pub fn verified(&self) -> bool {
        self.induced.is_some()
    }

    pub fn det(&self) -> Option<BigInt> {
        self.induced.as_ref().map(InducedMap::det)
    }

    pub fn raw_det(&self) -> Option<BigInt> {
        self.induced.as_ref().map(InducedMap::raw_det)
    }

    pub fn sublattice_index(&self) -> Option<BigInt> {
        self.induced.as_ref().map(InducedMap::sublattice_index)
    }
}

/// Runs [`induced_map`], the basis identity and, with a radius, the grid
/// sweep. Failures become `verified = false` with an explanatory note.
pub fn analyze(ds: DirectionalScaling, grid_radius: Option<u64>) -> SymmetryReport {
    let mut report = SymmetryReport {
        transform: ds,
        induced: None,
        grid: None,
        notes: String::new(),
    };
    let ds = &report.transform;
    let im = match induced_map(ds) {
        Ok(im) => im,
        Err(e) => {
            report.notes = e.to_string();
            return report;
        }
    };
    match check_basis(ds, &im) {
        Ok(true) => {}
        Ok(false) => {
            report.notes = "basis identity failed".into();
            return report;
        }
        Err(e) => {
            report.notes = e.to_string();
            return report;
        }
    }
    if let Some(radius) = grid_radius {
        match grid_coincidence_check(ds, &im, radius) {
            Ok(grid) => {
                let passed = grid.passed();
                if !passed {
                    report.notes = format!(
                        "grid check failed: {} failures, injective = {}",
                        grid.failures, grid.injective
                    );
                }
                report.grid = Some(grid);
                if !passed {
                    return report;
                }
            }
            Err(e) => {
                report.notes = e.to_string();
                return report;
            }
        }
    }
    report.induced = Some(im);
    report
}

/// One report per `k` in `1..=k_max`, in ascending order.
pub fn verify_square_family(k_max: u64) -> Result<Vec<SymmetryReport>> {
    if k_max == 0 {
        return Err(Error::InvalidTransform("k_max must be positive".into()));
    }
    (1..=k_max)
        .into_par_iter()
        .map(|k| Ok(analyze(DirectionalScaling::square_family(k)?, None)))
        .collect()
}

pub fn verify_triangular() -> SymmetryReport {
    analyze(DirectionalScaling::triangular_known(), None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    /// The image `M Z^2` equals `g * Z[unit]` for a single lattice element.
    pub is_principal: bool,
    pub generator: Option<LatticePoint>,
    pub index: BigInt,
}

/// Decides whether the image sublattice of `matrix` is a principal ideal of
/// `Z[i]` or `Z[omega]`.
///
/// The columns generate the ideal `(g)` with `g` their gcd, which contains
/// the image; the two coincide iff `N(g)` equals the index `|det|`. When the
/// first column generates, it is reported as the generator.
pub fn image_ideal_check(matrix: &IntMatrix2, kind: LatticeKind) -> Result<IdealReport> {
    let index = matrix.det().abs();
    if index.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let c0 = LatticePoint::new(matrix.a.clone(), matrix.c.clone(), kind);
    let c1 = LatticePoint::new(matrix.b.clone(), matrix.d.clone(), kind);
    let g = c0.gcd(&c1);
    if g.norm() != index {
        return Ok(IdealReport {
            is_principal: false,
            generator: None,
            index,
        });
    }
    let generator = if c0.div_exact(&g).is_some_and(|u| u.is_unit()) {
        c0
    } else {
        LatticePoint::units(kind)
            .iter()
            .map(|u| &g * u)
            .max_by(|a, b| (&a.m, &a.n).cmp(&(&b.m, &b.n)))
            .expect("unit group is nonempty")
    };
    Ok(IdealReport {
        is_principal: true,
        generator: Some(generator),
        index,
    })
}
