//! Fuchsian matrix models of the surface group, with the Bolza surface
//! (genus 2, the regular-octagon surface) built in.
//!
//! The octagon group is generated by four hyperbolic translations of equal
//! length 2·arccosh(1+√2) whose axes pass through i at angles kπ/4. Those
//! side-pairing boosts satisfy an octagon relation; a fixed free-group
//! rewriting turns them into canonical generators a₁,b₁,a₂,b₂ with
//! [a₁,b₁][a₂,b₂] = 1, which is the presentation everything else uses.

use serde::{Deserialize, Serialize};

use super::matrix::{translation_length, MobiusMatrix, DET_TOL, HYPERBOLIC_TOL};
use super::SpectrumError;
use crate::group::{GeneratorSymbol, SurfaceGroupPresentation, Word};

/// A matrix model: one Möbius matrix per canonical generator, plus a
/// walking alphabet for ball enumeration (defaults to the generators, but a
/// model may supply a geometrically better generating set, each letter with
/// its spelling in the canonical generators).
#[derive(Clone)]
pub struct FuchsianModel {
    presentation: SurfaceGroupPresentation,
    gen_matrices: Vec<MobiusMatrix>,
    walk_letters: Vec<(MobiusMatrix, Word)>,
    name: String,
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    name: String,
    genus: usize,
    /// row-major [a, b, c, d] per canonical generator a₁,b₁,…
    generators: Vec<[f64; 4]>,
    /// optional walking alphabet: matrix plus word in the canonical
    /// generators (text form)
    #[serde(default)]
    walk_letters: Vec<([f64; 4], String)>,
}

impl FuchsianModel {
    pub fn new(genus: usize, gen_matrices: Vec<MobiusMatrix>, name: &str) -> Result<Self, SpectrumError> {
        assert_eq!(gen_matrices.len(), 2 * genus);
        let presentation = SurfaceGroupPresentation::new(genus);
        let walk_letters = gen_matrices
            .iter()
            .enumerate()
            .map(|(i, m)| {
                (
                    *m,
                    Word::from_letters(vec![GeneratorSymbol::new(i + 1, false)]),
                )
            })
            .collect();
        let model = FuchsianModel {
            presentation,
            gen_matrices,
            walk_letters,
            name: name.to_string(),
        };
        model.validate()?;
        Ok(model)
    }

    pub fn presentation(&self) -> &SurfaceGroupPresentation {
        &self.presentation
    }

    pub fn genus(&self) -> usize {
        self.presentation.genus()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator_matrices(&self) -> &[MobiusMatrix] {
        &self.gen_matrices
    }

    pub fn walk_letters(&self) -> &[(MobiusMatrix, Word)] {
        &self.walk_letters
    }

    /// Multiplicative extension to words; the relator lands on ±identity.
    pub fn word_to_matrix(&self, w: &Word) -> MobiusMatrix {
        let mut acc = MobiusMatrix::IDENTITY;
        for l in w.letters() {
            let m = &self.gen_matrices[l.index() - 1];
            acc = if l.inverted() {
                acc.mul(&m.inverse())
            } else {
                acc.mul(m)
            };
        }
        acc
    }

    /// Geodesic length of the class of `w`.
    pub fn word_length(&self, w: &Word) -> Result<f64, SpectrumError> {
        translation_length(&self.word_to_matrix(w))
    }

    /// Model invariants: unit determinants, the defining relation to 1e−9,
    /// every nonempty reduced word of length ≤ 4 hyperbolic, and the walk
    /// alphabet consistent with its spellings.
    pub fn validate(&self) -> Result<(), SpectrumError> {
        for m in &self.gen_matrices {
            if (m.det() - 1.0).abs() > DET_TOL {
                return Err(SpectrumError::ModelInvalid(format!(
                    "generator determinant {} off unity",
                    m.det()
                )));
            }
        }
        let rel = self.word_to_matrix(self.presentation.relator());
        if !rel.is_pm_identity(1e-9) {
            return Err(SpectrumError::ModelInvalid(format!(
                "relator maps {} away from ±identity",
                rel.dist_to_pm_identity()
            )));
        }
        let mut words: Vec<Word> = vec![Word::empty()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for w in &words {
                for code in 0..4 * self.genus() {
                    let l = GeneratorSymbol::new(code / 2 + 1, code % 2 == 1);
                    if w.letters().last().map_or(false, |p| p.inverse() == l) {
                        continue;
                    }
                    let mut letters = w.letters().to_vec();
                    letters.push(l);
                    next.push(Word::from_letters(letters));
                }
            }
            for w in &next {
                let m = self.word_to_matrix(w);
                if m.trace().abs() <= 2.0 + HYPERBOLIC_TOL {
                    return Err(SpectrumError::ModelInvalid(format!(
                        "short word {w} is not hyperbolic (trace {})",
                        m.trace()
                    )));
                }
            }
            words = next;
        }
        for (m, w) in &self.walk_letters {
            let from_word = self.word_to_matrix(w);
            let diff = m.mul(&from_word.inverse());
            if !diff.is_pm_identity(1e-8) {
                return Err(SpectrumError::ModelInvalid(format!(
                    "walk letter disagrees with its spelling {w}"
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let file = ModelFile {
            name: self.name.clone(),
            genus: self.genus(),
            generators: self
                .gen_matrices
                .iter()
                .map(|m| [m.a, m.b, m.c, m.d])
                .collect(),
            walk_letters: self
                .walk_letters
                .iter()
                .map(|(m, w)| ([m.a, m.b, m.c, m.d], w.to_string()))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("model serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, SpectrumError> {
        let file: ModelFile = serde_json::from_str(text)
            .map_err(|e| SpectrumError::ModelInvalid(format!("bad model file: {e}")))?;
        if file.generators.len() != 2 * file.genus {
            return Err(SpectrumError::ModelInvalid(
                "generator count must be 2·genus".into(),
            ));
        }
        let gens: Vec<MobiusMatrix> = file
            .generators
            .iter()
            .map(|e| MobiusMatrix::new(e[0], e[1], e[2], e[3]))
            .collect();
        let mut model = FuchsianModel::new(file.genus, gens, &file.name)?;
        if !file.walk_letters.is_empty() {
            model.walk_letters = file
                .walk_letters
                .iter()
                .map(|(e, text)| {
                    Ok((
                        MobiusMatrix::new(e[0], e[1], e[2], e[3]),
                        Word::parse(text).map_err(|err| {
                            SpectrumError::ModelInvalid(format!("bad walk word: {err}"))
                        })?,
                    ))
                })
                .collect::<Result<_, SpectrumError>>()?;
            model.validate()?;
        }
        Ok(model)
    }

    /// The built-in Bolza model, loaded from the checked-in data file and
    /// validated.
    pub fn bolza() -> FuchsianModel {
        static DATA: &str = include_str!("../../data/bolza.json");
        FuchsianModel::from_json(DATA).expect("built-in Bolza model must validate")
    }
}

/// The four octagon side-pairing boosts: translation length 2·arccosh(1+√2),
/// axes through i at angles kπ/4.
pub fn bolza_boosts() -> [MobiusMatrix; 4] {
    let ch = 1.0 + std::f64::consts::SQRT_2; // cosh(l/2)
    let sh = (ch * ch - 1.0).sqrt();
    std::array::from_fn(|k| {
        let theta = k as f64 * std::f64::consts::FRAC_PI_4;
        MobiusMatrix::new(
            ch + sh * theta.cos(),
            -sh * theta.sin(),
            -sh * theta.sin(),
            ch - sh * theta.cos(),
        )
    })
}

/// Construct the Bolza model from the boosts by the fixed rewriting
///   a₁ = g₁, b₁ = g₂⁻¹g₃g₄⁻¹, a₂ = g₂⁻¹g₃, b₂ = g₄⁻¹g₂,
/// which satisfies [a₁,b₁][a₂,b₂] = g₁g₂⁻¹g₃g₄⁻¹g₁⁻¹g₂g₃⁻¹g₄ identically in
/// the free group, and supplies the boosts as the walking alphabet
///   g₁ = a₁, g₂ = b₁⁻¹a₂b₂, g₃ = b₁⁻¹a₂b₂a₂, g₄ = b₁⁻¹a₂.
pub fn bolza_reference() -> Result<FuchsianModel, SpectrumError> {
    let [g1, g2, g3, g4] = bolza_boosts();
    let a1 = g1;
    let b1 = g2.inverse().mul(&g3).mul(&g4.inverse());
    let a2 = g2.inverse().mul(&g3);
    let b2 = g4.inverse().mul(&g2);
    let mut model = FuchsianModel::new(2, vec![a1, b1, a2, b2], "bolza")?;
    let spellings = [
        (g1, "a1"),
        (g2, "B1 a2 b2"),
        (g3, "B1 a2 b2 a2"),
        (g4, "B1 a2"),
    ];
    model.walk_letters = spellings
        .iter()
        .map(|(m, text)| (*m, Word::parse(text).expect("fixed spelling parses")))
        .collect();
    model.validate()?;
    Ok(model)
}
