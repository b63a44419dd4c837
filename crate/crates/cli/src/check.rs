//! Cross-check of the floating-point transform against the exact one.

use latscale::lattice::LatticePoint;
use latscale::{DirectionalScaling, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const COORD_BOUND: i64 = 1000;

#[derive(Clone, Debug, PartialEq)]
pub struct FloatCheck {
    pub samples: u64,
    pub max_deviation: f64,
    pub worst: LatticePoint,
}

/// The origin followed by `samples - 1` seeded points with coordinates in
/// `[-1000, 1000]`.
pub fn sample_points(ds: &DirectionalScaling, samples: u64, seed: u64) -> Vec<LatticePoint> {
    let kind = ds.kind();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = vec![LatticePoint::origin(kind)];
    for _ in 1..samples {
        let m = rng.random_range(-COORD_BOUND..=COORD_BOUND);
        let n = rng.random_range(-COORD_BOUND..=COORD_BOUND);
        pts.push(LatticePoint::new(m, n, kind));
    }
    pts
}

/// Largest `|embed(exact) - float|` over the sample; ties go to the earliest
/// point.
pub fn check_float(ds: &DirectionalScaling, samples: u64, seed: u64) -> Result<FloatCheck> {
    let pts = sample_points(ds, samples, seed);
    let devs = pts
        .par_iter()
        .map(|p| {
            let exact = ds.apply_exact(p)?.embed();
            let (x, y) = ds.apply_float(p.cartesian());
            Ok((exact - Complex64::new(x, y)).norm())
        })
        .collect::<Result<Vec<f64>>>()?;
    let (worst, max_deviation) =
        devs.iter().enumerate().fold(
            (0, 0.0f64),
            |(bi, bd), (i, &d)| if d > bd { (i, d) } else { (bi, bd) },
        );
    Ok(FloatCheck {
        samples,
        max_deviation,
        worst: pts[worst].clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_sample_is_the_origin() {
        let ds = DirectionalScaling::square_family(3).unwrap();
        let r = check_float(&ds, 1, 99).unwrap();
        assert_eq!(r.max_deviation, 0.0);
        assert!(r.worst.is_zero());
    }

    #[test]
    fn sampling_is_seeded() {
        let ds = DirectionalScaling::triangular_known();
        assert_eq!(sample_points(&ds, 50, 7), sample_points(&ds, 50, 7));
        assert_ne!(sample_points(&ds, 50, 7), sample_points(&ds, 50, 8));
        assert!(sample_points(&ds, 500, 1)
            .iter()
            .all(|p| p.m.magnitude() <= &1000u32.into() && p.n.magnitude() <= &1000u32.into()));
    }

    #[test]
    fn deviation_is_tiny_but_nonzero() {
        let ds = DirectionalScaling::square_family(3).unwrap();
        let r = check_float(&ds, 2000, 0).unwrap();
        assert!(r.max_deviation > 0.0 && r.max_deviation <= 1e-9);
    }
}
