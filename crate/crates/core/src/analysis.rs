//! The test function ψ (through its compactly supported transform ψ̂), the
//! window function h and its transform, the GOE/GUE number-variance
//! functionals, the Fejér averaging weight, and the deterministic term of
//! the counting statistic.
//!
//! Fourier convention: ψ̂(s) = (1/2π)∫ψ(x)e^{−isx}dx, so ψ(x) = ∫ψ̂(s)e^{isx}ds.

use serde::{Deserialize, Serialize};

use crate::group::{Character, SymmetryClass};
use crate::quad::{adaptive_simpson, adaptive_simpson_panels, sinc, QuadError, QuadratureConfig};

/// Named ψ̂ families. Only the smooth bump is built in; the tag keeps config
/// files explicit about what they asked for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum TestFunctionFamily {
    #[default]
    Bump,
}

/// ψ via its transform: ψ̂(s) = exp(1 − 1/(1 − (s/ρ)²)) on (−ρ, ρ), zero
/// outside, normalized so ψ̂(0) = 1. The support radius ρ must stay ≤ 1.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct TestFunctionSpec {
    pub family: TestFunctionFamily,
    pub support_radius: f64,
}

impl Default for TestFunctionSpec {
    fn default() -> Self {
        TestFunctionSpec {
            family: TestFunctionFamily::Bump,
            support_radius: 1.0,
        }
    }
}

impl TestFunctionSpec {
    pub fn new(support_radius: f64) -> Self {
        assert!(
            support_radius > 0.0 && support_radius <= 1.0,
            "support radius must lie in (0, 1]"
        );
        TestFunctionSpec {
            family: TestFunctionFamily::Bump,
            support_radius,
        }
    }

    /// ψ̂(s); even, smooth, supported in [−ρ, ρ].
    pub fn psi_hat(&self, s: f64) -> f64 {
        let x = s / self.support_radius;
        let x2 = x * x;
        if x2 >= 1.0 {
            0.0
        } else {
            (1.0 - 1.0 / (1.0 - x2)).exp()
        }
    }

    /// ψ(x) = ∫ψ̂ e^{isx} ds = 2∫₀^ρ ψ̂(s)cos(sx)ds, by quadrature.
    ///
    /// The tolerance is pinned at least as tight as 1e−12 regardless of the
    /// config: ψ feeds outer quadratures, whose refinement would otherwise
    /// chase the discretization noise of the inner integral.
    pub fn psi(&self, x: f64, quad: &QuadratureConfig) -> Result<f64, QuadError> {
        let rho = self.support_radius;
        let f = |s: f64| self.psi_hat(s) * (s * x).cos();
        // resolve the cosine oscillation when |x| is large
        let panels = ((rho * x.abs()) / std::f64::consts::PI).ceil() as usize + 1;
        let tol = 0.5 * quad.abs_tol.min(1e-12);
        let v = adaptive_simpson_panels(&f, 0.0, rho, panels.min(4000), tol, quad.max_depth)?;
        Ok(2.0 * v)
    }

    /// ∫ψ(x)dx = 2π ψ̂(0), exact under the transform convention.
    pub fn psi_integral(&self) -> f64 {
        2.0 * std::f64::consts::PI * self.psi_hat(0.0)
    }
}

/// Sampled ψ with cubic Hermite interpolation. ψ itself is a quadrature per
/// evaluation; outer integrals over ψ both need speed and choke on the
/// discretization noise of nested adaptive calls, so the hot paths read this
/// table instead. Grid step 0.01 keeps the interpolation error near 1e−11.
pub struct PsiTable {
    step: f64,
    values: Vec<f64>,
    slopes: Vec<f64>,
}

/// ψ is numerically negligible past this point for every admissible spec
/// (the transform of the bump decays faster than any power).
pub const PSI_TAIL: f64 = 400.0;

impl PsiTable {
    pub fn build(spec: &TestFunctionSpec, _quad: &QuadratureConfig) -> Result<Self, QuadError> {
        let step = 0.02;
        let n = (PSI_TAIL / step).round() as usize + 1;
        // One composite-Simpson pass in s shared by every grid point, with
        // cos(s·x_i) advanced by the three-term recurrence in i. 2^15
        // subintervals keep the s-rule error below ~2e-10 even at the far
        // end of the x range.
        let n_s = (1usize << 15) + 1;
        let rho = spec.support_radius;
        let h_s = rho / (n_s - 1) as f64;
        let mut values = vec![0.0; n];
        for j in 0..n_s {
            let s = j as f64 * h_s;
            let w = if j == 0 || j == n_s - 1 {
                1.0
            } else if j % 2 == 1 {
                4.0
            } else {
                2.0
            };
            let c = 2.0 * spec.psi_hat(s) * w * h_s / 3.0;
            if c == 0.0 {
                continue;
            }
            let theta = s * step;
            let two_cos = 2.0 * theta.cos();
            let mut prev = theta.cos(); // cos(s·x_1), stepping down to x_0
            let mut cur = 1.0; // cos(s·x_0)
            for v in values.iter_mut() {
                *v += c * cur;
                let next = two_cos * cur - prev;
                prev = cur;
                cur = next;
            }
        }
        // fourth-order central differences for the slopes
        let mut slopes = vec![0.0; n];
        for i in 0..n {
            let v = |j: isize| -> f64 {
                // ψ is even around 0 and ~0 beyond the tail
                if j < 0 {
                    values[(-j) as usize]
                } else if (j as usize) < n {
                    values[j as usize]
                } else {
                    0.0
                }
            };
            let i = i as isize;
            slopes[i as usize] =
                (v(i - 2) - 8.0 * v(i - 1) + 8.0 * v(i + 1) - v(i + 2)) / (12.0 * step);
        }
        Ok(PsiTable {
            step,
            values,
            slopes,
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x = x.abs();
        if x >= PSI_TAIL {
            return 0.0;
        }
        let pos = x / self.step;
        let i = (pos.floor() as usize).min(self.values.len() - 2);
        let t = pos - i as f64;
        let (v0, v1) = (self.values[i], self.values[i + 1]);
        let (m0, m1) = (self.slopes[i] * self.step, self.slopes[i + 1] * self.step);
        let t2 = t * t;
        let t3 = t2 * t;
        (2.0 * t3 - 3.0 * t2 + 1.0) * v0
            + (t3 - 2.0 * t2 + t) * m0
            + (-2.0 * t3 + 3.0 * t2) * v1
            + (t3 - t2) * m1
    }

    /// h(r) = ψ(L(r−α)) + ψ(L(r+α)) through the table.
    pub fn h(&self, p: &WindowParams, r: f64) -> f64 {
        self.eval(p.big_l * (r - p.alpha)) + self.eval(p.big_l * (r + p.alpha))
    }
}

/// Window parameters: height α, inverse width L, averaging scale T.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct WindowParams {
    pub alpha: f64,
    pub big_l: f64,
    pub big_t: f64,
}

impl WindowParams {
    pub fn new(alpha: f64, big_l: f64, big_t: f64) -> Self {
        assert!(big_l > 0.0 && big_t > 0.0);
        WindowParams {
            alpha,
            big_l,
            big_t,
        }
    }
}

/// h(r) = ψ(L(r−α)) + ψ(L(r+α)).
pub fn h_eval(
    spec: &TestFunctionSpec,
    p: &WindowParams,
    r: f64,
    quad: &QuadratureConfig,
) -> Result<f64, QuadError> {
    Ok(spec.psi(p.big_l * (r - p.alpha), quad)? + spec.psi(p.big_l * (r + p.alpha), quad)?)
}

/// ĥ(ζ) = (2cos(αζ)/L)·ψ̂(ζ/L); vanishes for |ζ| ≥ ρL.
pub fn h_hat_eval(spec: &TestFunctionSpec, p: &WindowParams, zeta: f64) -> f64 {
    2.0 * (p.alpha * zeta).cos() / p.big_l * spec.psi_hat(zeta / p.big_l)
}

/// Σ²_GOE(ψ) = 2∫|x|ψ̂(x)²dx.
pub fn sigma_goe_sq(spec: &TestFunctionSpec, quad: &QuadratureConfig) -> Result<f64, QuadError> {
    let f = |x: f64| x * spec.psi_hat(x).powi(2);
    let v = adaptive_simpson(&f, 0.0, spec.support_radius, 0.25 * quad.abs_tol, quad.max_depth)?;
    Ok(4.0 * v)
}

/// σ²_{χ,ψ}: the GOE value when χ² = 1, half of it otherwise.
pub fn sigma_sq_for_character(
    spec: &TestFunctionSpec,
    chi: &Character,
    quad: &QuadratureConfig,
) -> Result<f64, QuadError> {
    let goe = sigma_goe_sq(spec, quad)?;
    Ok(match chi.symmetry_class() {
        SymmetryClass::Goe => goe,
        SymmetryClass::Gue => 0.5 * goe,
    })
}

/// N^det = n(g−1)∫h(r)·r·tanh(πr)dr, with ψ read from `psi`.
pub fn n_det(
    n: usize,
    genus: usize,
    psi: &PsiTable,
    p: &WindowParams,
    quad: &QuadratureConfig,
) -> Result<f64, QuadError> {
    assert!(genus >= 2);
    // substitute u = L(r∓α) in each bump separately
    let mut total = 0.0;
    for sign in [1.0f64, -1.0] {
        let f = |u: f64| {
            let r = sign * p.alpha + u / p.big_l;
            psi.eval(u) * r * (std::f64::consts::PI * r).tanh()
        };
        let tol = quad.abs_tol.max(1e-9) * (1.0 + p.alpha.abs());
        total += adaptive_simpson_panels(&f, -PSI_TAIL, PSI_TAIL, 512, tol, quad.max_depth)?
            / p.big_l;
    }
    Ok(n as f64 * (genus - 1) as f64 * total)
}

/// C_α = 2α·tanh(πα), the density factor of the mean asymptotics.
pub fn c_alpha(alpha: f64) -> f64 {
    2.0 * alpha * (std::f64::consts::PI * alpha).tanh()
}

/// The averaging weight: w(x) = (1/2π)·sinc²(x/2) with transform
/// ŵ(s) = (1/2π)·max(0, 1−|s|). Nonnegative, even, ∫w = 1.
#[derive(Clone, Copy, Debug, Default)]
pub struct WeightSpec;

impl WeightSpec {
    pub fn w(&self, x: f64) -> f64 {
        0.5 * std::f64::consts::FRAC_1_PI * sinc(0.5 * x).powi(2)
    }

    pub fn w_hat(&self, s: f64) -> f64 {
        0.5 * std::f64::consts::FRAC_1_PI * (1.0 - s.abs()).max(0.0)
    }
}

/// E_T[F] = (1/T)∫F(α)w(α/T)dα, computed over the window |α/T| ≤ A of the
/// quadrature config and self-normalized by the weight mass of that window
/// (so constants are averaged exactly; the neglected tail mass is ~2/(πA)).
pub fn expect_over_alpha<F: Fn(f64) -> f64>(
    f: F,
    big_t: f64,
    quad: &QuadratureConfig,
) -> Result<f64, QuadError> {
    assert!(big_t > 0.0);
    let w = WeightSpec;
    let a = quad.alpha_window;
    let panels = (a * 4.0).ceil() as usize;
    let num = adaptive_simpson_panels(
        &|u: f64| f(big_t * u) * w.w(u),
        -a,
        a,
        panels.min(40_000),
        quad.abs_tol,
        quad.max_depth,
    )?;
    let den = adaptive_simpson_panels(
        &|u: f64| w.w(u),
        -a,
        a,
        panels.min(40_000),
        quad.abs_tol,
        quad.max_depth,
    )?;
    Ok(num / den)
}
