//! CSV dump of a lattice patch and its images.

use latscale::lattice::LatticePoint;
use latscale::{DirectionalScaling, InducedMap, Result};

use crate::decimal;

pub const HEADER: [&str; 8] = ["m", "n", "x", "y", "x'", "y'", "M_m", "M_n"];

/// Points with `|m|, |n| <= radius` in row-major order of `m`, then `n`.
pub fn grid(ds: &DirectionalScaling, radius: i64) -> Vec<LatticePoint> {
    let kind = ds.kind();
    (-radius..=radius)
        .flat_map(|m| (-radius..=radius).map(move |n| LatticePoint::new(m, n, kind)))
        .collect()
}

/// CSV with a header row and LF line endings. `x'`, `y'` are the
/// embedding of the exact image.
pub fn write_csv(ds: &DirectionalScaling, im: &InducedMap, radius: i64) -> Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for p in grid(ds, radius) {
        let (x, y) = p.cartesian();
        let image = ds.apply_exact(&p)?.embed();
        let q = im.matrix.apply(&p);
        w.write_record([
            p.m.to_string(),
            p.n.to_string(),
            decimal::general(x, 12),
            decimal::general(y, 12),
            decimal::general(image.re, 12),
            decimal::general(image.im, 12),
            q.m.to_string(),
            q.n.to_string(),
        ])
        .expect("in-memory write");
    }
    Ok(w.into_inner().expect("in-memory flush"))
}
