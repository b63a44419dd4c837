//! SVG rendering of a lattice patch, its image and the scaling direction.
//!
//! One lattice unit is 40 user units and the origin sits at the centre.
//! Output depends only on the inputs, so it can be compared byte for byte.

use std::fmt::Write;

use latscale::lattice::LatticePoint;
use latscale::{DirectionalScaling, InducedMap, Result};

use crate::decimal::svg as f;
use crate::points::grid;

pub const UNIT: f64 = 40.0;

/// Scaled-lattice sites are drawn only when the scalar is at least this
/// large, which bounds their number.
const MIN_SITE_SCALAR: f64 = 0.1;

pub fn render(ds: &DirectionalScaling, im: &InducedMap, radius: i64) -> Result<String> {
    let points = grid(ds, radius);
    let originals: Vec<(f64, f64)> = points.iter().map(LatticePoint::cartesian).collect();
    let images = points
        .iter()
        .map(|p| ds.apply_exact(p).map(|e| (e.embed().re, e.embed().im)))
        .collect::<Result<Vec<_>>>()?;

    let reach = originals
        .iter()
        .chain(&images)
        .fold((0.0f64, 0.0f64), |(w, h), (x, y)| {
            (w.max(x.abs()), h.max(y.abs()))
        });
    let half_w = (reach.0.ceil() + 1.0) * UNIT;
    let half_h = (reach.1.ceil() + 1.0) * UNIT;

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="{x} {y} {w} {h}">"#,
        w = f(2.0 * half_w),
        h = f(2.0 * half_h),
        x = f(-half_w),
        y = f(-half_h),
    )
    .unwrap();
    writeln!(
        s,
        "<title>{} lattice, tan(theta) = {}, radius {}</title>",
        ds.kind(),
        ds.tan_theta()
            .to_surd()
            .map(|v| v.to_string())
            .unwrap_or_else(|| ds.tan_theta().to_string()),
        radius
    )
    .unwrap();
    writeln!(
        s,
        r#"<rect class="background" x="{}" y="{}" width="{}" height="{}" fill="white"/>"#,
        f(-half_w),
        f(-half_h),
        f(2.0 * half_w),
        f(2.0 * half_h)
    )
    .unwrap();

    let scalar = im.scalar.embed();
    if scalar.norm() >= MIN_SITE_SCALAR {
        writeln!(s, r##"<g class="sites" fill="#d0d0d0">"##).unwrap();
        for (x, y) in scaled_sites(ds, scalar.re, half_w / UNIT, half_h / UNIT) {
            writeln!(
                s,
                r#"<rect x="{}" y="{}" width="6.000" height="6.000"/>"#,
                f(x * UNIT - 3.0),
                f(-y * UNIT - 3.0)
            )
            .unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }

    let (sin, cos) = ds.theta().sin_cos();
    let len = half_w.max(half_h) * 2.0;
    writeln!(
        s,
        r#"<line class="direction" x1="{}" y1="{}" x2="{}" y2="{}" stroke="steelblue" stroke-width="1.5"/>"#,
        f(-len * cos),
        f(len * sin),
        f(len * cos),
        f(-len * sin)
    )
    .unwrap();

    writeln!(
        s,
        r#"<g class="lattice" fill="none" stroke="black" stroke-width="1">"#
    )
    .unwrap();
    for (x, y) in &originals {
        writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="5"/>"#,
            f(x * UNIT),
            f(-y * UNIT)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(s, r#"<g class="image" fill="crimson">"#).unwrap();
    for (x, y) in &images {
        writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="2.5"/>"#,
            f(x * UNIT),
            f(-y * UNIT)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}

/// Points `c * q` for lattice points `q` that land inside the viewport.
fn scaled_sites(ds: &DirectionalScaling, c: f64, half_w: f64, half_h: f64) -> Vec<(f64, f64)> {
    let kind = ds.kind();
    // |m|, |n| bounds that cover the viewport for both lattices
    let bound = ((half_w.max(half_h) * 2.0) / c.abs()).ceil() as i64 + 1;
    let mut out = Vec::new();
    for m in -bound..=bound {
        for n in -bound..=bound {
            let (x, y) = LatticePoint::new(m, n, kind).cartesian();
            let (x, y) = (c * x, c * y);
            if x.abs() <= half_w && y.abs() <= half_h {
                out.push((x, y));
            }
        }
    }
    out
}
