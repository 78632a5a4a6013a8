//! Real 2×2 unit-determinant matrices acting on the upper half plane, and
//! lengths of the closed geodesics their hyperbolic classes define.

use serde::{Deserialize, Serialize};

use super::SpectrumError;

pub const DET_TOL: f64 = 1e-9;
pub const HYPERBOLIC_TOL: f64 = 1e-9;

/// Row-major [[a, b], [c, d]], det = 1 up to `DET_TOL`. Sign is a PSL(2,ℝ)
/// gauge: M and −M act identically.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MobiusMatrix {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl MobiusMatrix {
    pub const IDENTITY: MobiusMatrix = MobiusMatrix {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        MobiusMatrix { a, b, c, d }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn mul(&self, o: &MobiusMatrix) -> MobiusMatrix {
        MobiusMatrix {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// Inverse of a det-1 matrix.
    pub fn inverse(&self) -> MobiusMatrix {
        MobiusMatrix {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Entrywise distance to ±identity.
    pub fn dist_to_pm_identity(&self) -> f64 {
        let d_plus = (self.a - 1.0)
            .abs()
            .max(self.b.abs())
            .max(self.c.abs())
            .max((self.d - 1.0).abs());
        let d_minus = (self.a + 1.0)
            .abs()
            .max(self.b.abs())
            .max(self.c.abs())
            .max((self.d + 1.0).abs());
        d_plus.min(d_minus)
    }

    pub fn is_pm_identity(&self, tol: f64) -> bool {
        self.dist_to_pm_identity() <= tol
    }

    /// cosh of the hyperbolic displacement d(i, M·i) equals
    /// (a² + b² + c² + d²)/2 for det 1.
    pub fn displacement(&self) -> f64 {
        let q = 0.5 * (self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d);
        q.max(1.0).acosh()
    }

    /// Flip the PSL sign so the largest-magnitude entry (first in reading
    /// order among near-maximal ones) is positive.
    pub fn sign_normalized(&self) -> MobiusMatrix {
        let entries = [self.a, self.b, self.c, self.d];
        let scale = entries.iter().fold(0.0f64, |m, e| m.max(e.abs()));
        let lead = entries
            .iter()
            .find(|e| e.abs() > 1e-3 * scale)
            .copied()
            .unwrap_or(1.0);
        if lead < 0.0 {
            MobiusMatrix {
                a: -self.a,
                b: -self.b,
                c: -self.c,
                d: -self.d,
            }
        } else {
            *self
        }
    }

    /// Quantized direction key for exact element dedup: entries scaled by
    /// the max magnitude, sign-normalized, rounded at 1e−9 resolution.
    /// Distinct group elements in a desk-scale ball differ in direction by
    /// far more than the resolution (their quotient displaces i by at least
    /// the systole), and det = 1 pins the overall scale.
    pub fn direction_key(&self) -> [i64; 4] {
        let m = self.sign_normalized();
        let entries = [m.a, m.b, m.c, m.d];
        let scale = entries.iter().fold(0.0f64, |acc, e| acc.max(e.abs()));
        let s = if scale == 0.0 { 1.0 } else { scale };
        entries.map(|e| (e / s * 1e9).round() as i64)
    }
}

/// Geodesic length of the class of a hyperbolic matrix: 2·arccosh(|tr|/2).
/// Conjugation-invariant; errs when the matrix is not hyperbolic, which in a
/// cocompact torsion-free group signals a broken model rather than data.
pub fn translation_length(m: &MobiusMatrix) -> Result<f64, SpectrumError> {
    let half_tr = 0.5 * m.trace().abs();
    if half_tr <= 1.0 + 0.5 * HYPERBOLIC_TOL {
        return Err(SpectrumError::NotHyperbolic { trace: m.trace() });
    }
    Ok(2.0 * half_tr.acosh())
}
