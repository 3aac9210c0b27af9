//! Closed-form asymptotic rate/distance bounds, for the syndrome-assignment
//! construction family and for the literature bounds it is compared with.
//!
//! Every bound maps a relative distance delta in [0, 1] to a rate alpha,
//! clamped to [0, 1]. The construction family carries the `-thm2` suffix in
//! its identifiers; the remaining names are the standard quantum bounds.

use crate::{Error, Result};

/// Binary entropy with the continuity convention H(0) = H(1) = 0.
pub fn h2(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::OutOfRange { value: x });
    }
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    Ok(-x * x.log2() - (1.0 - x) * (1.0 - x).log2())
}

const LOG2_3: f64 = 1.584_962_500_721_156;

/// All recognized bound identifiers, construction family first.
pub const BOUND_NAMES: [&str; 10] = [
    "hamming-thm2",
    "plotkin-thm2",
    "elias-thm2",
    "mrrw-thm2",
    "singleton-thm2",
    "gv-thm2",
    "quantum-hamming",
    "quantum-singleton",
    "gv-stabilizer",
    "gv-css",
];

/// Upper bounds of the construction family (everything there except the
/// existence bound `gv-thm2`).
pub const CONSTRUCTION_UPPER_BOUNDS: [&str; 5] = [
    "hamming-thm2",
    "plotkin-thm2",
    "elias-thm2",
    "mrrw-thm2",
    "singleton-thm2",
];

fn clamp01(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

/// Evaluate the named bound at relative distance `delta`.
pub fn bound_value(name: &str, delta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::OutOfRange { value: delta });
    }
    let value = match name {
        "hamming-thm2" => 1.0 - 2.0 * h2(delta / 2.0)?,
        "plotkin-thm2" => {
            if delta <= 0.25 {
                1.0 - 4.0 * delta
            } else {
                0.0
            }
        }
        "elias-thm2" => {
            if delta <= 0.5 {
                1.0 - 2.0 * h2(0.5 - (0.5 * (0.5 - delta)).sqrt())?
            } else {
                0.0
            }
        }
        "mrrw-thm2" => {
            let entropy = h2(0.5 - (delta * (1.0 - delta)).sqrt())?;
            if entropy >= 0.5 {
                2.0 * entropy - 1.0
            } else {
                0.0
            }
        }
        "singleton-thm2" => 1.0 - 2.0 * delta,
        // the existence bounds are stated for relative distance up to 1/2
        "gv-thm2" | "gv-css" => {
            if delta <= 0.5 {
                1.0 - 2.0 * h2(delta)?
            } else {
                0.0
            }
        }
        "quantum-hamming" => 1.0 - 0.5 * delta * LOG2_3 - h2(delta / 2.0)?,
        "quantum-singleton" => 1.0 - 2.0 * delta,
        "gv-stabilizer" => {
            if delta <= 0.5 {
                1.0 - delta * LOG2_3 - h2(delta)?
            } else {
                0.0
            }
        }
        other => return Err(Error::UnknownBound(other.to_string())),
    };
    Ok(clamp01(value))
}

/// A named curve sampled on an even grid over [0, 1].
#[derive(Clone, Debug)]
pub struct BoundCurve {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

/// Sample one bound on a `grid`-point even grid (grid >= 2).
pub fn bound_curve(name: &str, grid: usize) -> Result<BoundCurve> {
    if grid < 2 {
        return Err(Error::GridTooSmall(grid));
    }
    let points = (0..grid)
        .map(|i| {
            let delta = i as f64 / (grid - 1) as f64;
            bound_value(name, delta).map(|alpha| (delta, alpha))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundCurve {
        name: name.to_string(),
        points,
    })
}

/// CSV with header `delta,<name1>,...` and one row per grid point.
/// Values are printed to six decimals so outputs are byte-stable.
pub fn bound_table(names: &[&str], grid: usize) -> Result<String> {
    if grid < 2 {
        return Err(Error::GridTooSmall(grid));
    }
    let curves = names
        .iter()
        .map(|n| bound_curve(n, grid))
        .collect::<Result<Vec<_>>>()?;
    let mut out = String::from("delta");
    for name in names {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for i in 0..grid {
        let delta = i as f64 / (grid - 1) as f64;
        out.push_str(&format!("{delta:.6}"));
        for curve in &curves {
            out.push_str(&format!(",{:.6}", curve.points[i].1));
        }
        out.push('\n');
    }
    Ok(out)
}
