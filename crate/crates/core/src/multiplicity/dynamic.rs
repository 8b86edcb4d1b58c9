//! Numerical multiplicity: perturb a generic line off the origin and count
//! the nearby intersection points with the argument principle.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::polyring::PolyQ;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DynamicParams {
    /// Radius of the counting disc in the line parameter.
    pub eps: f64,
    /// Distance of the perturbed line from the origin.
    pub tau: f64,
    pub trials: usize,
    pub seed: u64,
    /// Jittered-radius retries per trial when the circle passes too close to a root.
    pub max_retries: usize,
}

impl Default for DynamicParams {
    fn default() -> Self {
        DynamicParams {
            eps: 1e-3,
            tau: 1e-6,
            trials: 8,
            seed: 20_240_917,
            max_retries: 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DynamicReport {
    pub count: u64,
    pub per_trial: Vec<u64>,
    /// Total number of jittered retries used across trials.
    pub retries: usize,
    pub seed: u64,
}

type CPoly = Vec<Complex64>;

fn cpoly_mul(a: &CPoly, b: &CPoly) -> CPoly {
    let mut out = vec![Complex64::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn cpoly_pow(a: &CPoly, k: u32) -> CPoly {
    let mut acc = vec![Complex64::new(1.0, 0.0)];
    for _ in 0..k {
        acc = cpoly_mul(&acc, a);
    }
    acc
}

fn horner(p: &CPoly, z: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::zero(), |acc, c| acc * z + c)
}

/// Coefficients in `t` of `f(p0 + t·d)`.
fn restrict_to_line(f: &PolyQ, p0: [Complex64; 2], d: [Complex64; 2]) -> CPoly {
    let deg = f.total_degree().unwrap_or(0) as usize;
    let mut out = vec![Complex64::zero(); deg + 1];
    let lx = vec![p0[0], d[0]];
    let ly = vec![p0[1], d[1]];
    for (e, c) in f.terms() {
        let c = c.to_f64().unwrap_or(f64::NAN);
        let term = cpoly_mul(&cpoly_pow(&lx, e.get(0)), &cpoly_pow(&ly, e.get(1)));
        for (k, v) in term.iter().enumerate() {
            out[k] += v * c;
        }
    }
    out
}

/// Winding number of `p` around the circle `|t| = radius`, or `None` when the
/// circle passes too close to a root for the count to be trusted.
fn winding_number(p: &CPoly, radius: f64) -> Option<i64> {
    let base = 64.max(16 * p.len());
    let at = |theta: f64| horner(p, Complex64::from_polar(radius, theta));
    let samples: Vec<(f64, Complex64)> = (0..=base)
        .map(|k| {
            let th = 2.0 * PI * k as f64 / base as f64;
            (th, at(th))
        })
        .collect();
    let scale = samples.iter().map(|(_, v)| v.norm()).fold(0.0, f64::max);
    if !(scale.is_finite() && scale > 0.0) {
        return None;
    }
    let floor = scale * 1e-10;

    fn segment(
        at: &dyn Fn(f64) -> Complex64,
        (ta, va): (f64, Complex64),
        (tb, vb): (f64, Complex64),
        floor: f64,
        depth: u32,
    ) -> Option<f64> {
        if va.norm() < floor || vb.norm() < floor {
            return None;
        }
        let d = (vb * va.conj()).arg();
        if d.abs() <= PI / 8.0 {
            return Some(d);
        }
        if depth == 0 {
            return None;
        }
        let tm = 0.5 * (ta + tb);
        let vm = at(tm);
        Some(
            segment(at, (ta, va), (tm, vm), floor, depth - 1)?
                + segment(at, (tm, vm), (tb, vb), floor, depth - 1)?,
        )
    }

    let mut total = 0.0;
    for w in samples.windows(2) {
        total += segment(&at, w[0], w[1], floor, 24)?;
    }
    let turns = total / (2.0 * PI);
    let k = turns.round();
    ((turns - k).abs() < 1e-3).then_some(k as i64)
}

fn random_unit(rng: &mut ChaCha8Rng) -> [Complex64; 2] {
    loop {
        let v: [Complex64; 2] = std::array::from_fn(|_| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        if n > 1e-3 {
            return [v[0] / n, v[1] / n];
        }
    }
}

/// Counts the points where a generic line at distance `tau` from the origin
/// meets `{f = 0}` within distance `eps`, for several random lines.
///
/// Every trial must produce the same count, which is returned.
pub fn dynamic_multiplicity(f: &PolyQ, params: &DynamicParams) -> Result<DynamicReport> {
    if f.nvars() != 2 {
        return Err(Error::Invalid(
            "dynamic multiplicity needs a plane germ".into(),
        ));
    }
    match f.ord() {
        ExtNat::Finite(d) if d >= 1 => {}
        _ => {
            return Err(Error::Invalid(format!(
                "`{f}` must be nonzero and vanish at the origin"
            )))
        }
    }
    if !(params.tau > 0.0 && params.eps > params.tau) {
        return Err(Error::Invalid("need 0 < tau < eps".into()));
    }
    if params.trials == 0 {
        return Err(Error::Invalid("need at least one trial".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut per_trial = Vec::with_capacity(params.trials);
    let mut retries = 0;
    for trial in 0..params.trials {
        let d = random_unit(&mut rng);
        let off = random_unit(&mut rng);
        let p0 = [off[0] * params.tau, off[1] * params.tau];
        let g = restrict_to_line(f, p0, d);
        let mut radius = params.eps;
        let mut count = None;
        for attempt in 0..=params.max_retries {
            if let Some(k) = winding_number(&g, radius) {
                count = Some(k);
                break;
            }
            if attempt < params.max_retries {
                retries += 1;
                radius = params.eps * (1.0 + 0.2 * rng.gen_range(-1.0..1.0));
            }
        }
        let k = count.ok_or_else(|| {
            Error::Numerical(format!(
                "winding number ill-conditioned in trial {trial} after {} retries",
                params.max_retries
            ))
        })?;
        if k < 0 {
            return Err(Error::Numerical(format!(
                "negative winding number {k} in trial {trial}"
            )));
        }
        per_trial.push(k as u64);
    }
    let first = per_trial[0];
    if let Some(other) = per_trial.iter().find(|&&c| c != first) {
        return Err(Error::Numerical(format!(
            "trials disagree: counted {first} and {other}"
        )));
    }
    Ok(DynamicReport {
        count: first,
        per_trial,
        retries,
        seed: params.seed,
    })
}
