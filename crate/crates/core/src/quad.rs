//! Quadrature utilities: adaptive Simpson refinement, Romberg extrapolation
//! as an independent second rule, and the Fejér cosine moment
//! (2/π)∫₀^∞ cos(Ωu)(1−cos u)/u² du evaluated numerically with an analytic
//! treatment of the slowly decaying tail.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum QuadError {
    #[error("quadrature did not converge to tolerance {tol} (worst interval [{a}, {b}])")]
    Failure { a: f64, b: f64, tol: f64 },
}

/// Tolerances and budgets shared by all integrals.
#[derive(Clone, Copy, Debug, serde::Serialize, serde::Deserialize)]
pub struct QuadratureConfig {
    /// absolute tolerance per integral
    pub abs_tol: f64,
    /// recursion depth cap for adaptive refinement
    pub max_depth: u32,
    /// half-width, in units of α/T, of the window used when averaging over
    /// the window height α
    pub alpha_window: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-10,
            max_depth: 40,
            alpha_window: 2000.0,
        }
    }
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64, QuadError> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(QuadError::Failure { a, b, tol });
    }
    let lv = adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?;
    let rv = adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?;
    Ok(lv + rv)
}

/// Adaptive Simpson rule with absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> Result<f64, QuadError> {
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth)
}

/// Adaptive Simpson over an interval pre-split into `panels` equal pieces,
/// for integrands whose oscillation would fool a single coarse estimate.
pub fn adaptive_simpson_panels<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    panels: usize,
    tol: f64,
    max_depth: u32,
) -> Result<f64, QuadError> {
    let panels = panels.max(1);
    let h = (b - a) / panels as f64;
    let per = tol / panels as f64;
    let mut total = 0.0;
    for k in 0..panels {
        let x0 = a + k as f64 * h;
        total += adaptive_simpson(f, x0, x0 + h, per, max_depth)?;
    }
    Ok(total)
}

/// Romberg extrapolation of the trapezoid rule; the independent cross-check
/// rule for dual-route identities.
pub fn romberg<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64, QuadError> {
    const MAX_LEVEL: usize = 22;
    let mut table: Vec<Vec<f64>> = Vec::new();
    let mut h = b - a;
    let mut trap = 0.5 * h * (f(a) + f(b));
    table.push(vec![trap]);
    for level in 1..MAX_LEVEL {
        let points = 1usize << (level - 1);
        h *= 0.5;
        let mut mid_sum = 0.0;
        for i in 0..points {
            mid_sum += f(a + (2 * i + 1) as f64 * h);
        }
        trap = 0.5 * table[level - 1][0] + h * mid_sum;
        let mut row = vec![trap];
        let mut pow4 = 1.0;
        for j in 1..=level {
            pow4 *= 4.0;
            let v = (pow4 * row[j - 1] - table[level - 1][j - 1]) / (pow4 - 1.0);
            row.push(v);
        }
        let diag = row[level];
        let prev = table[level - 1][level - 1];
        table.push(row);
        if level >= 4 && (diag - prev).abs() <= tol {
            return Ok(diag);
        }
    }
    Err(QuadError::Failure { a, b, tol })
}

/// sin(x)/x with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// Power series of the sine integral Si(z) = Σ (−1)^k z^{2k+1}/((2k+1)(2k+1)!);
/// accurate and cancellation-free for |z| ≤ 1.
fn si_small(z: f64) -> f64 {
    debug_assert!(z.abs() <= 1.0 + 1e-12);
    let z2 = z * z;
    let mut t = z; // (−1)^k z^{2k+1}/(2k+1)!
    let mut sum = z;
    for k in 1..40u32 {
        let two_k = 2.0 * k as f64;
        t *= -z2 / (two_k * (two_k + 1.0));
        let contrib = t / (two_k + 1.0);
        sum += contrib;
        if contrib.abs() < 1e-19 {
            return sum;
        }
    }
    unreachable!("Si series converges in well under 40 terms on [0,1]");
}

/// ∫_A^∞ cos(ωu)/u² du for ω ≥ 0, A > 0.
fn tail_cos_over_u2(omega: f64, a: f64) -> f64 {
    debug_assert!(omega >= 0.0 && a > 0.0);
    if omega == 0.0 {
        return 1.0 / a;
    }
    let z0 = omega * a;
    if z0 <= 1.0 {
        // (1/A)(cos z₀ − z₀(π/2 − Si(z₀))), Si by its power series
        return (z0.cos() - z0 * (std::f64::consts::FRAC_PI_2 - si_small(z0))) / a;
    }
    // Oscillatory regime: split at the zeros of cos(ωu) and Euler-accelerate
    // the alternating series of half-period segments.
    let pi = std::f64::consts::PI;
    let g = |u: f64| (omega * u).cos() / (u * u);
    let k0 = ((z0 - pi / 2.0) / pi).ceil().max(0.0);
    let mut z = (pi / 2.0 + k0 * pi) / omega;
    if z <= a {
        z += pi / omega;
    }
    let seg_tol = |lo: f64| 1e-14 / (omega * lo * lo) + 1e-300;
    let head = adaptive_simpson(&g, a, z, seg_tol(a).min(1e-14), 48)
        .expect("partial segment converges");
    const SEGMENTS: usize = 48;
    let mut terms = Vec::with_capacity(SEGMENTS);
    for _ in 0..SEGMENTS {
        let next = z + pi / omega;
        let t = adaptive_simpson(&g, z, next, seg_tol(z), 48).expect("segment converges");
        terms.push(t);
        z = next;
    }
    // repeated averaging of partial sums (Euler transform)
    let mut row: Vec<f64> = terms
        .iter()
        .scan(0.0, |acc, t| {
            *acc += t;
            Some(*acc)
        })
        .collect();
    while row.len() > 1 {
        row = row.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    head + row[0]
}

/// The Fejér cosine moment Q(Ω) = (2/π)∫₀^∞ cos(Ωu)(1−cos u)/u² du, computed
/// numerically (head by adaptive panels, tail analytically per cosine
/// component). Q equals the triangle max(0, 1−Ω); this routine never uses
/// that identity, so the two can be played against each other.
pub fn fejer_cos_moment(omega: f64, cfg: &QuadratureConfig) -> Result<f64, QuadError> {
    let omega = omega.abs();
    assert!(
        omega <= 64.0,
        "fejer_cos_moment is intended for the near-resonant regime"
    );
    let a = 100.0;
    let two_over_pi = std::f64::consts::FRAC_2_PI;
    // (1−cos u)/u² = ½·sinc²(u/2), cancellation-free
    let integrand = |u: f64| 0.5 * sinc(0.5 * u).powi(2) * (omega * u).cos();
    let panels = (a * (omega + 1.0) / std::f64::consts::PI).ceil() as usize * 4;
    let head = adaptive_simpson_panels(
        &integrand,
        0.0,
        a,
        panels.clamp(64, 20_000),
        cfg.abs_tol.min(1e-12),
        cfg.max_depth,
    )?;
    // (1−cos u)cos(Ωu) = cos(Ωu) − ½cos((Ω+1)u) − ½cos((Ω−1)u)
    let tail = tail_cos_over_u2(omega, a)
        - 0.5 * tail_cos_over_u2(omega + 1.0, a)
        - 0.5 * tail_cos_over_u2((omega - 1.0).abs(), a);
    Ok(two_over_pi * (head + tail))
}
