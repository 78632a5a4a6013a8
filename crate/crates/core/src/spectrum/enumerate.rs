//! Enumeration of the primitive unoriented length spectrum.
//!
//! The production enumerator walks group elements in order of increasing
//! displacement of the base point i (a Dijkstra sweep over the Cayley graph
//! of the walking alphabet, deduplicated by exact matrix direction). Every
//! class of geodesic length ≤ L has a representative whose displacement is
//! at most L plus twice the covering radius of the orbit, so a ball of
//! radius L + slack captures the whole truncated spectrum once slack covers
//! that geometry; the runtime stability check compares two slacks.
//!
//! A word-horizon enumerator over canonical generators is kept alongside as
//! an independent cross-validation oracle for small cutoffs.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap, HashSet};

use super::model::FuchsianModel;
use super::{LengthSpectrum, PrimitiveGeodesic, SpectrumError};
use crate::group::{canonical_class, primitive_root, ConjClassKey, GeneratorSymbol, Word};

/// Ball radii for the geometric enumerator: elements are expanded while
/// their displacement is ≤ l_max + slack and inserted up to an extra margin
/// (galleries realizing a short element may pass slightly beyond it).
#[derive(Clone, Copy, Debug)]
pub struct BallParams {
    pub slack: f64,
    pub margin: f64,
}

impl Default for BallParams {
    fn default() -> Self {
        // 2·ln(cosh ρ) ≈ 3.53 for the Bolza covering radius ρ ≈ 2.448; 3.6
        // covers the worst-case representative of any class below cutoff.
        BallParams {
            slack: 3.6,
            margin: 1.0,
        }
    }
}

struct HeapEntry {
    disp: f64,
    matrix: super::MobiusMatrix,
    word: Vec<u8>,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.disp == other.disp
    }
}
impl Eq for HeapEntry {}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap by displacement
        other.disp.total_cmp(&self.disp)
    }
}

fn assemble_word(letter_words: &[Word], path: &[u8]) -> Word {
    let mut letters = Vec::new();
    for &i in path {
        letters.extend_from_slice(letter_words[i as usize].letters());
    }
    Word::from_letters(letters)
}

/// Collect the canonical keys of every class with length ≤ l_max found in
/// the displacement ball.
fn ball_classes(
    model: &FuchsianModel,
    l_max: f64,
    params: &BallParams,
) -> Result<BTreeMap<ConjClassKey, f64>, SpectrumError> {
    assert!(l_max > 0.0 && params.slack > 0.0 && params.margin >= 0.0);
    let pres = model.presentation();
    let pop_radius = l_max + params.slack;
    let insert_radius = pop_radius + params.margin;
    // walking alphabet closed under inverses
    let mut letters: Vec<(super::MobiusMatrix, Word)> = Vec::new();
    for (m, w) in model.walk_letters() {
        letters.push((*m, w.clone()));
        letters.push((m.inverse(), w.inverse()));
    }
    let letter_words: Vec<Word> = letters.iter().map(|(_, w)| w.clone()).collect();

    let mut visited: HashSet<[i64; 4]> = HashSet::new();
    let mut heap: BinaryHeap<HeapEntry> = BinaryHeap::new();
    let identity = super::MobiusMatrix::IDENTITY;
    visited.insert(identity.direction_key());
    heap.push(HeapEntry {
        disp: 0.0,
        matrix: identity,
        word: Vec::new(),
    });

    let accept = |l: f64| l <= l_max * (1.0 + 1e-12) + 1e-12;
    let mut classes: BTreeMap<ConjClassKey, f64> = BTreeMap::new();
    while let Some(entry) = heap.pop() {
        if entry.disp > insert_radius {
            break;
        }
        if !entry.word.is_empty() {
            let half_tr = 0.5 * entry.matrix.trace().abs();
            if half_tr > 1.0 + 1e-12 {
                let l = 2.0 * half_tr.acosh();
                if accept(l) {
                    let word = assemble_word(&letter_words, &entry.word);
                    let key = canonical_class(&word, pres).map_err(|_| {
                        SpectrumError::ModelInvalid(
                            "nontrivial matrix with identity word: model is not faithful".into(),
                        )
                    })?;
                    // deterministic length: evaluate the canonical word
                    let l_key = model.word_length(key.word())?;
                    if (l_key - l).abs() > 1e-6 {
                        return Err(SpectrumError::InvariantViolation(format!(
                            "conjugates disagree on length: {l} vs {l_key}"
                        )));
                    }
                    if accept(l_key) {
                        classes.entry(key).or_insert(l_key);
                    }
                }
            } else if entry.matrix.dist_to_pm_identity() > 1e-6 {
                // elliptic or parabolic: impossible in a cocompact
                // torsion-free model, so abort loudly
                return Err(SpectrumError::NotHyperbolic {
                    trace: entry.matrix.trace(),
                });
            }
        }
        if entry.disp > pop_radius {
            continue;
        }
        for (i, (m, _)) in letters.iter().enumerate() {
            let next = entry.matrix.mul(m);
            let disp = next.displacement();
            if disp > insert_radius {
                continue;
            }
            if visited.insert(next.direction_key()) {
                let mut word = entry.word.clone();
                word.push(i as u8);
                heap.push(HeapEntry {
                    disp,
                    matrix: next,
                    word,
                });
            }
        }
    }
    Ok(classes)
}

/// Split classes into primitives and proper powers, using both the cyclic
/// period of the canonical word and closure under powers within the cutoff.
fn primitive_filter(
    model: &FuchsianModel,
    classes: &BTreeMap<ConjClassKey, f64>,
    l_max: f64,
) -> Vec<(ConjClassKey, f64)> {
    let pres = model.presentation();
    let mut non_primitive: HashSet<ConjClassKey> = HashSet::new();
    for (key, &l) in classes.iter() {
        let (_, q) = primitive_root(key, pres);
        if q > 1 {
            non_primitive.insert(key.clone());
        }
        // powers of this class that fall below the cutoff
        let mut p = 2u32;
        while f64::from(p) * l <= l_max * (1.0 + 1e-12) + 1e-12 {
            let power_key = canonical_class(&key.word().pow(p as usize), pres)
                .expect("powers of nontrivial elements are nontrivial");
            debug_assert!(
                primitive_root(&power_key, pres).1 > 1,
                "power of a class must have a visible period"
            );
            non_primitive.insert(power_key);
            p += 1;
        }
    }
    classes
        .iter()
        .filter(|(k, _)| !non_primitive.contains(*k))
        .map(|(k, &l)| (k.clone(), l))
        .collect()
}

fn build_spectrum(
    model: &FuchsianModel,
    primitives: Vec<(ConjClassKey, f64)>,
    l_max: f64,
    horizon: f64,
) -> LengthSpectrum {
    let mut classes: Vec<PrimitiveGeodesic> = primitives
        .into_iter()
        .map(|(key, length)| {
            let trace = model.word_to_matrix(key.word()).trace().abs();
            let word_length = key.len();
            PrimitiveGeodesic {
                key: Some(key),
                length,
                trace,
                word_length,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        a.length
            .total_cmp(&b.length)
            .then_with(|| a.key.as_ref().unwrap().cmp(b.key.as_ref().unwrap()))
    });
    LengthSpectrum {
        cutoff: l_max,
        classes,
        horizon,
    }
}

/// Enumerate the primitive unoriented spectrum up to `l_max` with the
/// geometric ball enumerator.
pub fn enumerate_spectrum(
    model: &FuchsianModel,
    l_max: f64,
    params: &BallParams,
) -> Result<LengthSpectrum, SpectrumError> {
    let classes = ball_classes(model, l_max, params)?;
    let primitives = primitive_filter(model, &classes, l_max);
    Ok(build_spectrum(model, primitives, l_max, l_max + params.slack))
}

/// Run the enumeration at `slack − 2` and at `slack`, and demand identical
/// class lists. Returns the full-slack spectrum on success.
pub fn stability_check(
    model: &FuchsianModel,
    l_max: f64,
    params: &BallParams,
) -> Result<LengthSpectrum, SpectrumError> {
    assert!(params.slack > 2.0, "stability check needs slack > 2");
    let reduced = BallParams {
        slack: params.slack - 2.0,
        margin: params.margin,
    };
    let small = enumerate_spectrum(model, l_max, &reduced)?;
    let full = enumerate_spectrum(model, l_max, params)?;
    if small.len() != full.len() {
        return Err(SpectrumError::HorizonTooSmall(format!(
            "class count changed between slack {} ({}) and {} ({})",
            reduced.slack,
            small.len(),
            params.slack,
            full.len()
        )));
    }
    for (a, b) in small.classes.iter().zip(full.classes.iter()) {
        if a.key != b.key || (a.length - b.length).abs() > 1e-12 {
            return Err(SpectrumError::HorizonTooSmall(
                "class lists differ between slacks".into(),
            ));
        }
    }
    Ok(full)
}

/// Word-horizon enumerator over the canonical generators: all reduced words
/// of length ≤ `horizon`, canonicalized and filtered to length ≤ l_max.
/// Independent of the ball walker; intended for cross-validation at small
/// cutoffs. Errs when the empirical length-per-letter constant suggests
/// that longer words could still reach below the cutoff.
pub fn enumerate_spectrum_words(
    model: &FuchsianModel,
    l_max: f64,
    horizon: usize,
) -> Result<LengthSpectrum, SpectrumError> {
    let pres = model.presentation();
    let n_letters = 4 * model.genus();
    let letters: Vec<GeneratorSymbol> = (0..n_letters)
        .map(|c| GeneratorSymbol::new(c / 2 + 1, c % 2 == 1))
        .collect();
    let mut classes: BTreeMap<ConjClassKey, f64> = BTreeMap::new();
    let mut c_min = f64::INFINITY;
    let mut stack: Vec<Vec<GeneratorSymbol>> = vec![Vec::new()];
    // depth-first over freely reduced words
    while let Some(prefix) = stack.pop() {
        if prefix.len() == horizon {
            continue;
        }
        for &l in &letters {
            if let Some(last) = prefix.last() {
                if last.inverse() == l {
                    continue;
                }
            }
            let mut word = prefix.clone();
            word.push(l);
            let w = Word::from_letters(word.clone());
            if w.len() == word.len() {
                if let Ok(key) = canonical_class(&w, pres) {
                    if !classes.contains_key(&key) {
                        let l_geo = model.word_length(key.word())?;
                        c_min = c_min.min(l_geo / key.len().max(1) as f64);
                        if l_geo <= l_max * (1.0 + 1e-12) + 1e-12 {
                            classes.insert(key, l_geo);
                        }
                    }
                }
            }
            stack.push(word);
        }
    }
    if (horizon + 1) as f64 * c_min <= l_max {
        return Err(SpectrumError::HorizonTooSmall(format!(
            "words beyond horizon {horizon} may still reach length ≤ {l_max} \
             (empirical length per letter {c_min:.3})"
        )));
    }
    let primitives = primitive_filter(model, &classes, l_max);
    Ok(build_spectrum(model, primitives, l_max, horizon as f64))
}

/// Pairs (class index, power) with k·l_γ strictly below `limit`, in
/// deterministic spectrum order. The shared truncation rule for every
/// geodesic-side sum.
pub fn truncated_powers(spectrum: &LengthSpectrum, limit: f64) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    for (i, c) in spectrum.classes.iter().enumerate() {
        let mut k = 1u32;
        while f64::from(k) * c.length < limit {
            out.push((i, k));
            k += 1;
        }
    }
    out
}

