//! Monte Carlo estimate of the normalized load of a disk: the expected length
//! of `[s, t] ∩ B_r(c)` for `s, t` uniform in `B_R(0)`.
//!
//! Samples are drawn in fixed-size batches. Batch `i` uses a ChaCha8 stream
//! seeded with `seed` and stream number `i`, and batch statistics are merged
//! in batch order, so a result depends only on `(cfg, samples, seed)`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{BallConfig, ContinuumError, CurvatureClass};

const BATCH: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MCEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: usize,
    pub seed: u64,
    /// Fraction of segments that meet the inner ball.
    pub transit_fraction: f64,
    pub transit_stderr: f64,
}

#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1.0;
        let d = x - self.mean;
        self.mean += d / self.n;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, o: Moments) -> Moments {
        if self.n == 0.0 {
            return o;
        }
        let n = self.n + o.n;
        let d = o.mean - self.mean;
        Moments { n, mean: self.mean + d * o.n / n, m2: self.m2 + o.m2 + d * d * self.n * o.n / n }
    }

    fn stderr(&self) -> f64 {
        (self.m2 / (self.n - 1.0) / self.n).sqrt()
    }
}

/// Polar point `(a, phi)` in `k = 1` units.
#[derive(Debug, Clone, Copy)]
struct Polar {
    a: f64,
    phi: f64,
}

impl Polar {
    fn flat(self) -> [f64; 2] {
        [self.a * self.phi.cos(), self.a * self.phi.sin()]
    }

    /// Hyperboloid (`cosh a`, ...) or unit-sphere (`cos a`, ...) coordinates.
    fn embed(self, class: CurvatureClass) -> [f64; 3] {
        let (s, c) = self.phi.sin_cos();
        match class {
            CurvatureClass::Negative => [self.a.cosh(), self.a.sinh() * c, self.a.sinh() * s],
            _ => [self.a.cos(), self.a.sin() * c, self.a.sin() * s],
        }
    }
}

/// `cosh d - 1` (negative class) or `1 - cos d` (positive class), free of
/// cancellation for nearby points.
fn versine(class: CurvatureClass, p: Polar, q: Polar) -> f64 {
    let half = (0.5 * (p.phi - q.phi)).sin().powi(2);
    match class {
        CurvatureClass::Negative => {
            2.0 * (0.5 * (p.a - q.a)).sinh().powi(2) + 2.0 * p.a.sinh() * q.a.sinh() * half
        }
        _ => 2.0 * (0.5 * (p.a - q.a)).sin().powi(2) + 2.0 * p.a.sin() * q.a.sin() * half,
    }
}

fn det3(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn overlap(lo: f64, hi: f64, len: f64) -> f64 {
    (hi.min(len) - lo.max(0.0)).max(0.0)
}

/// Length of the geodesic segment `[s, t]` inside the disk of radius `r`
/// about `c`, all in `k = 1` units.
fn transit_length(class: CurvatureClass, s: Polar, t: Polar, c: Polar, r: f64) -> f64 {
    match class {
        CurvatureClass::Zero => {
            let (s, t, c) = (s.flat(), t.flat(), c.flat());
            let d = [t[0] - s[0], t[1] - s[1]];
            let len = d[0].hypot(d[1]);
            if len == 0.0 {
                return 0.0;
            }
            let u = [d[0] / len, d[1] / len];
            let w = [c[0] - s[0], c[1] - s[1]];
            let foot = w[0] * u[0] + w[1] * u[1];
            let perp = (w[0] * u[1] - w[1] * u[0]).abs();
            if perp >= r {
                return 0.0;
            }
            let h = ((r - perp) * (r + perp)).sqrt();
            overlap(foot - h, foot + h, len)
        }
        CurvatureClass::Negative => {
            let v = versine(class, s, t);
            if v == 0.0 {
                return 0.0;
            }
            let len = 2.0 * (0.5 * v).sqrt().asinh();
            let (cosh_l, sinh_l) = (1.0 + v, len.sinh());
            let sinh_perp = det3(c.embed(class), s.embed(class), t.embed(class)).abs() / sinh_l;
            if sinh_perp >= r.sinh() {
                return 0.0;
            }
            let cosh_perp = sinh_perp.hypot(1.0);
            let alpha_s = 1.0 + versine(class, c, s);
            let alpha_t = 1.0 + versine(class, c, t);
            let beta = (alpha_t - cosh_l * alpha_s) / sinh_l;
            let foot = (-beta / cosh_perp).asinh();
            let h = (r.cosh() / cosh_perp).max(1.0).acosh();
            overlap(foot - h, foot + h, len)
        }
        CurvatureClass::Positive => {
            let v = versine(class, s, t);
            if v == 0.0 {
                return 0.0;
            }
            let len = 2.0 * (0.5 * v).sqrt().min(1.0).asin();
            let (cos_l, sin_l) = (1.0 - v, len.sin());
            let sin_perp = (det3(c.embed(class), s.embed(class), t.embed(class)).abs() / sin_l).min(1.0);
            if sin_perp >= r.sin() {
                return 0.0;
            }
            let cos_perp = (1.0 - sin_perp * sin_perp).sqrt();
            let alpha = 1.0 - versine(class, c, s);
            let beta = (1.0 - versine(class, c, t) - cos_l * alpha) / sin_l;
            let foot = beta.atan2(alpha);
            let h = (r.cos() / cos_perp).min(1.0).acos();
            [-2.0 * PI, 0.0, 2.0 * PI].iter().map(|shift| overlap(foot + shift - h, foot + shift + h, len)).sum()
        }
    }
}

fn sample_radius(class: CurvatureClass, big: f64, u: f64) -> f64 {
    match class {
        CurvatureClass::Negative => (1.0 + u * 2.0 * (0.5 * big).sinh().powi(2)).acosh(),
        CurvatureClass::Zero => big * u.sqrt(),
        CurvatureClass::Positive => (1.0 - u * 2.0 * (0.5 * big).sin().powi(2)).acos(),
    }
}

/// Estimates the normalized load of `B_r(c)` by sampling `samples` uniform
/// point pairs of `B_R(0)`. Only the plane (`n = 2`) is supported.
pub fn mc_transit(cfg: BallConfig, samples: usize, seed: u64) -> Result<MCEstimate, ContinuumError> {
    if cfg.space.dimension != 2 {
        return Err(ContinuumError::UnsupportedDimension(cfg.space.dimension));
    }
    cfg.validate()?;
    if samples < 1000 {
        return Err(ContinuumError::BadSampleCount(samples));
    }
    let class = cfg.space.class;
    let unit = cfg.space.unit();
    let (big, r) = (cfg.outer / unit, cfg.r / unit);
    let centre = Polar { a: cfg.rho / unit, phi: 0.0 };
    let batches = samples.div_ceil(BATCH);
    let stats: Vec<(Moments, Moments)> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b as u64);
            let mut draw = || Polar {
                a: sample_radius(class, big, rng.random::<f64>()),
                phi: 2.0 * PI * rng.random::<f64>(),
            };
            let (mut len, mut hit) = (Moments::default(), Moments::default());
            for _ in 0..BATCH.min(samples - b * BATCH) {
                let (s, t) = (draw(), draw());
                let l = transit_length(class, s, t, centre, r);
                len.push(l * unit);
                hit.push(if l > 0.0 { 1.0 } else { 0.0 });
            }
            (len, hit)
        })
        .collect();
    let (len, hit) = stats
        .into_iter()
        .fold((Moments::default(), Moments::default()), |(a, b), (x, y)| (a.merge(x), b.merge(y)));
    Ok(MCEstimate {
        mean: len.mean,
        stderr: len.stderr(),
        samples,
        seed,
        transit_fraction: hit.mean,
        transit_stderr: hit.stderr(),
    })
}
