//! The geometric side: Fuchsian matrix models, translation lengths,
//! enumeration of the primitive unoriented length spectrum up to a cutoff,
//! geodesic counting functions, and spectrum file I/O.

mod enumerate;
mod matrix;
mod model;
mod store;

pub use enumerate::{enumerate_spectrum, enumerate_spectrum_words, stability_check, BallParams};
pub use matrix::{translation_length, MobiusMatrix};
pub use model::{bolza_boosts, bolza_reference, FuchsianModel};
pub use store::{load_spectrum, save_spectrum};

use thiserror::Error;

use crate::group::{ConjClassKey, Word};

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("matrix is not hyperbolic (trace {trace}); the model is broken")]
    NotHyperbolic { trace: f64 },
    #[error("model invalid: {0}")]
    ModelInvalid(String),
    #[error("enumeration horizon too small: {0}")]
    HorizonTooSmall(String),
    #[error("cutoff {requested} exceeds the spectrum cutoff {cutoff}")]
    CutoffExceeded { requested: f64, cutoff: f64 },
    #[error("spectrum parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("spectrum invariant violated: {0}")]
    InvariantViolation(String),
    #[error("spectrum carries no words; only the limit model can use it")]
    WordsAbsent,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// One primitive unoriented class: canonical key (with word), geodesic
/// length, |trace| of its matrix, and the canonical word length.
#[derive(Clone, Debug)]
pub struct PrimitiveGeodesic {
    pub key: Option<ConjClassKey>,
    pub length: f64,
    pub trace: f64,
    pub word_length: usize,
}

impl PrimitiveGeodesic {
    pub fn word(&self) -> Option<&Word> {
        self.key.as_ref().map(|k| k.word())
    }
}

/// The primitive unoriented length spectrum below a cutoff, sorted by
/// (length, key). Synthetic spectra (loaded from files without words) have
/// `key = None` entries and only support the limit model.
#[derive(Clone, Debug)]
pub struct LengthSpectrum {
    pub cutoff: f64,
    pub classes: Vec<PrimitiveGeodesic>,
    pub horizon: f64,
}

impl LengthSpectrum {
    pub fn systole(&self) -> f64 {
        self.classes.first().map_or(f64::INFINITY, |c| c.length)
    }

    pub fn has_words(&self) -> bool {
        self.classes.iter().all(|c| c.key.is_some())
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    fn check_cutoff(&self, t: f64) -> Result<(), SpectrumError> {
        if t > self.cutoff + 1e-12 {
            return Err(SpectrumError::CutoffExceeded {
                requested: t,
                cutoff: self.cutoff,
            });
        }
        Ok(())
    }

    /// N⁰(T): oriented primitive geodesics of length ≤ T. Unoriented classes
    /// are stored, and no class is conjugate to its inverse in a surface
    /// group, so the oriented count is exactly twice the stored one.
    pub fn counting_n0(&self, t: f64) -> Result<f64, SpectrumError> {
        self.check_cutoff(t)?;
        let n = self.classes.iter().filter(|c| c.length <= t).count();
        Ok(2.0 * n as f64)
    }

    /// N(T): all oriented closed geodesics (powers included) of length ≤ T.
    pub fn counting_n(&self, t: f64) -> Result<f64, SpectrumError> {
        self.check_cutoff(t)?;
        let mut total = 0u64;
        for c in &self.classes {
            if c.length <= t {
                total += (t / c.length).floor() as u64;
            }
        }
        Ok(2.0 * total as f64)
    }

    /// N_χ(T) = Σ_{k·l_γ ≤ T} χ(γᵏ) over oriented primitive classes; real
    /// because inverse classes pair conjugate values.
    pub fn counting_n_chi(
        &self,
        t: f64,
        chi: &crate::group::Character,
    ) -> Result<f64, SpectrumError> {
        self.check_cutoff(t)?;
        if !self.has_words() {
            return Err(SpectrumError::WordsAbsent);
        }
        let mut total = 0.0;
        for c in &self.classes {
            let word = c.word().expect("words checked above");
            let kmax = (t / c.length).floor() as u32;
            for k in 1..=kmax {
                total += 2.0 * chi.re_power(word, k);
            }
        }
        Ok(total)
    }
}
