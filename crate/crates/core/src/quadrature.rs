//! Globally adaptive Gauss–Legendre integration on finite intervals.
//!
//! Each panel is integrated with a 10-point rule and again as two halves; the
//! difference is the panel's error estimate. The panel with the largest
//! estimate is bisected until the total estimate meets the tolerance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

const NODES: [f64; 5] = [
    0.148_874_338_981_631_2,
    0.433_395_394_129_247_2,
    0.679_409_568_299_024_4,
    0.865_063_366_688_984_5,
    0.973_906_528_517_171_7,
];
const WEIGHTS: [f64; 5] = [
    0.295_524_224_714_752_9,
    0.269_266_719_309_996_3,
    0.219_086_362_515_982,
    0.149_451_349_150_580_6,
    0.066_671_344_308_688_1,
];

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("quadrature did not converge on [{a}, {b}]: error {error:e} after {panels} panels")]
pub struct QuadratureNotConverged {
    pub a: f64,
    pub b: f64,
    pub error: f64,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub relative: f64,
    pub absolute: f64,
    pub max_panels: usize,
}

impl Tolerance {
    pub const fn relative(relative: f64) -> Self {
        Self { relative, absolute: 0.0, max_panels: 4000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    /// Integrand evaluations spent.
    pub evaluations: usize,
}

impl std::ops::Add for Integral {
    type Output = Integral;
    fn add(self, o: Integral) -> Integral {
        Integral { value: self.value + o.value, error: self.error + o.error, evaluations: self.evaluations + o.evaluations }
    }
}

impl Integral {
    pub fn scale(self, c: f64) -> Integral {
        Integral { value: self.value * c, error: self.error * c.abs(), evaluations: self.evaluations }
    }
}

/// Rule value and the integral of `|f|` on `[a, b]`.
fn rule<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let (mut s, mut abs) = (0.0, 0.0);
    for (x, w) in NODES.iter().zip(WEIGHTS) {
        let (l, r) = (f(mid - half * x), f(mid + half * x));
        s += w * (l + r);
        abs += w * (l.abs() + r.abs());
    }
    (s * half, abs * half)
}

struct Panel {
    a: f64,
    b: f64,
    // 10-point value on each half; the whole-panel value is their sum
    left: f64,
    right: f64,
    abs: f64,
    error: f64,
}

impl Panel {
    fn new<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64, coarse: f64) -> Self {
        let m = 0.5 * (a + b);
        let (left, al) = rule(f, a, m);
        let (right, ar) = rule(f, m, b);
        Self { a, b, left, right, abs: al + ar, error: (coarse - left - right).abs() }
    }
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.error.total_cmp(&o.error).then(o.a.total_cmp(&self.a))
    }
}

/// Integrates `f` over `[a, b]` (either orientation; empty intervals give 0).
///
/// Stops once the summed error estimate is below
/// `max(absolute, relative * |value|)` or below the rounding floor set by the
/// integral of `|f|`.
pub fn integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: Tolerance,
) -> Result<Integral, QuadratureNotConverged> {
    if a == b {
        return Ok(Integral::default());
    }
    if b < a {
        return integrate(f, b, a, tol).map(|i| i.scale(-1.0));
    }
    let (coarse, _) = rule(&mut f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Panel::new(&mut f, a, b, coarse));
    let mut evaluations = 30;
    loop {
        let (mut value, mut error, mut abs) = (0.0, 0.0, 0.0);
        for p in heap.iter() {
            value += p.left + p.right;
            error += p.error;
            abs += p.abs;
        }
        let target = tol.absolute.max(tol.relative * value.abs()).max(64.0 * f64::EPSILON * abs);
        if !value.is_finite() {
            return Err(QuadratureNotConverged { a, b, error, panels: heap.len() });
        }
        if error <= target {
            return Ok(Integral { value, error, evaluations });
        }
        if heap.len() >= tol.max_panels {
            return Err(QuadratureNotConverged { a, b, error, panels: heap.len() });
        }
        let worst = heap.pop().expect("heap is never empty");
        let m = 0.5 * (worst.a + worst.b);
        if !(worst.a < m && m < worst.b) {
            // interval exhausted in floating point
            return Err(QuadratureNotConverged { a, b, error, panels: heap.len() + 1 });
        }
        heap.push(Panel::new(&mut f, worst.a, m, worst.left));
        heap.push(Panel::new(&mut f, m, worst.b, worst.right));
        evaluations += 40;
    }
}

/// Integrates over consecutive pieces `breaks[0]..breaks[1]..`, sharing the
/// relative tolerance. Breakpoints should sit at the integrand's kinks.
pub fn integrate_pieces<F: FnMut(f64) -> f64>(
    mut f: F,
    breaks: &[f64],
    tol: Tolerance,
) -> Result<Integral, QuadratureNotConverged> {
    let mut total = Integral::default();
    for w in breaks.windows(2) {
        total = total + integrate(&mut f, w[0], w[1], tol)?;
    }
    Ok(total)
}
