//! Words and conjugacy classes of the genus-g surface group
//! Γ = ⟨a₁,b₁,…,a_g,b_g | [a₁,b₁]⋯[a_g,b_g]⟩, together with unitary
//! characters Γ → ℂ.
//!
//! Conjugacy is decided combinatorially with Dehn's algorithm: any cyclic
//! subword longer than half the relator is replaced by its shorter
//! complement, and words of exactly half the relator length are closed up
//! under the length-preserving half swaps before taking a lexicographic
//! minimum. Keys identify a class with its inverse class, so they label
//! unoriented geodesics.

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("word reduces to the identity")]
    IdentityWord,
    #[error("invalid word syntax: {0}")]
    Parse(String),
    #[error("generator index {index} out of range for genus {genus}")]
    GenusMismatch { index: usize, genus: usize },
}

/// One letter aᵢ±¹ or bᵢ±¹. Letters order as a₁ < a₁⁻¹ < b₁ < b₁⁻¹ < a₂ < …,
/// the fixed total order used for canonical keys.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSymbol {
    /// `(slot << 1) | inverted` where `slot` counts a₁,b₁,a₂,b₂,… from 0.
    code: u8,
}

impl GeneratorSymbol {
    /// `index` is 1-based in `[1, 2g]`: odd values are aᵢ, even values bᵢ.
    pub fn new(index: usize, inverted: bool) -> Self {
        assert!(index >= 1 && index <= 128, "generator index out of range");
        let slot = (index - 1) as u8;
        GeneratorSymbol {
            code: (slot << 1) | u8::from(inverted),
        }
    }

    pub fn a(i: usize) -> Self {
        Self::new(2 * i - 1, false)
    }

    pub fn b(i: usize) -> Self {
        Self::new(2 * i, false)
    }

    fn from_code(code: u8) -> Self {
        GeneratorSymbol { code }
    }

    /// 1-based generator index in `[1, 2g]`.
    pub fn index(&self) -> usize {
        (self.code >> 1) as usize + 1
    }

    pub fn inverted(&self) -> bool {
        self.code & 1 == 1
    }

    pub fn inverse(&self) -> Self {
        GeneratorSymbol {
            code: self.code ^ 1,
        }
    }

    fn is_inverse_of(&self, other: &Self) -> bool {
        self.code ^ 1 == other.code
    }
}

impl fmt::Debug for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slot = self.index() - 1;
        let family = if slot % 2 == 0 { 'a' } else { 'b' };
        let family = if self.inverted() {
            family.to_ascii_uppercase()
        } else {
            family
        };
        write!(f, "{}{}", family, slot / 2 + 1)
    }
}

/// A word in the surface-group generators. `reduced` records whether the
/// letter sequence is known to be freely reduced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<GeneratorSymbol>,
    reduced: bool,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
            reduced: true,
        }
    }

    pub fn from_letters(letters: Vec<GeneratorSymbol>) -> Self {
        Word {
            letters,
            reduced: false,
        }
        .reduce_in_place()
    }

    /// Raw constructor that trusts the caller about reducedness.
    fn from_reduced(letters: Vec<GeneratorSymbol>) -> Self {
        debug_assert!(is_freely_reduced(&letters));
        Word {
            letters,
            reduced: true,
        }
    }

    pub fn letters(&self) -> &[GeneratorSymbol] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Word {
            letters,
            reduced: self.reduced,
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            reduced: false,
        }
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word {
            letters,
            reduced: false,
        }
    }

    fn reduce_in_place(mut self) -> Word {
        if !self.reduced {
            self.letters = free_reduce_letters(&self.letters);
            self.reduced = true;
        }
        self
    }

    /// Largest generator index used, 0 for the empty word.
    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    pub fn check_genus(&self, genus: usize) -> Result<(), GroupError> {
        match self.letters.iter().find(|l| l.index() > 2 * genus) {
            Some(l) => Err(GroupError::GenusMismatch {
                index: l.index(),
                genus,
            }),
            None => Ok(()),
        }
    }

    /// Parse the whitespace-separated text form `a1 A1 b1 B1 a2 …`
    /// (capital letter = inverse).
    pub fn parse(text: &str) -> Result<Word, GroupError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let mut chars = token.chars();
            let head = chars
                .next()
                .ok_or_else(|| GroupError::Parse(format!("empty token in {text:?}")))?;
            let (family, inverted) = match head {
                'a' => (0usize, false),
                'A' => (0, true),
                'b' => (1, false),
                'B' => (1, true),
                c => {
                    return Err(GroupError::Parse(format!(
                        "letter must start with a/A/b/B, got {c:?}"
                    )))
                }
            };
            let idx: usize = chars
                .as_str()
                .parse()
                .map_err(|_| GroupError::Parse(format!("bad generator subscript in {token:?}")))?;
            if idx == 0 || idx > 64 {
                return Err(GroupError::Parse(format!(
                    "generator subscript out of range in {token:?}"
                )));
            }
            letters.push(GeneratorSymbol::new(2 * idx - 1 + family, inverted));
        }
        Ok(Word::from_letters(letters))
    }
}

macro_rules! fmt_word_body {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            for (i, l) in self.letters.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", l)?;
            }
            Ok(())
        }
    };
}

impl fmt::Display for Word {
    fmt_word_body!();
}

impl fmt::Debug for Word {
    fmt_word_body!();
}

fn is_freely_reduced(letters: &[GeneratorSymbol]) -> bool {
    letters.windows(2).all(|w| !w[0].is_inverse_of(&w[1]))
}

fn free_reduce_letters(letters: &[GeneratorSymbol]) -> Vec<GeneratorSymbol> {
    let mut stack: Vec<GeneratorSymbol> = Vec::with_capacity(letters.len());
    for &l in letters {
        match stack.last() {
            Some(top) if top.is_inverse_of(&l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    stack
}

/// Unique freely reduced form; idempotent.
pub fn free_reduce(w: &Word) -> Word {
    w.clone().reduce_in_place()
}

/// Reduce as a cyclic word: freely reduce, then cancel across the seam.
fn cyclic_reduce(mut letters: Vec<GeneratorSymbol>) -> Vec<GeneratorSymbol> {
    letters = free_reduce_letters(&letters);
    while letters.len() >= 2 && letters[0].is_inverse_of(letters.last().unwrap()) {
        letters.pop();
        letters.remove(0);
        letters = free_reduce_letters(&letters);
    }
    letters
}

/// The presentation ⟨a₁,b₁,…,a_g,b_g | [a₁,b₁]⋯[a_g,b_g]⟩.
#[derive(Clone)]
pub struct SurfaceGroupPresentation {
    genus: usize,
    relator: Word,
    /// All 8g cyclic rotations of the relator and of its inverse.
    rotations: Vec<Vec<GeneratorSymbol>>,
}

impl SurfaceGroupPresentation {
    pub fn new(genus: usize) -> Self {
        assert!(genus >= 2, "surface group requires genus >= 2");
        let mut letters = Vec::with_capacity(4 * genus);
        for i in 1..=genus {
            let a = GeneratorSymbol::a(i);
            let b = GeneratorSymbol::b(i);
            letters.extend([a, b, a.inverse(), b.inverse()]);
        }
        let relator = Word::from_reduced(letters);
        let mut rotations = Vec::with_capacity(8 * genus);
        for base in [relator.clone(), relator.inverse()] {
            let ls = base.letters();
            for s in 0..ls.len() {
                let mut rot = ls[s..].to_vec();
                rot.extend_from_slice(&ls[..s]);
                rotations.push(rot);
            }
        }
        SurfaceGroupPresentation {
            genus,
            relator,
            rotations,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn relator(&self) -> &Word {
        &self.relator
    }

    pub fn relator_length(&self) -> usize {
        4 * self.genus
    }

    fn half_length(&self) -> usize {
        2 * self.genus
    }

    /// If the cyclic subword of `w` starting at `pos` with length `len`
    /// matches the prefix of some relator rotation, return the inverse of
    /// the complementary suffix (the replacement word).
    fn complement(&self, w: &[GeneratorSymbol], pos: usize, len: usize) -> Option<Vec<GeneratorSymbol>> {
        let m = w.len();
        debug_assert!(len <= m && len <= self.relator_length());
        'rot: for rot in &self.rotations {
            for k in 0..len {
                if rot[k] != w[(pos + k) % m] {
                    continue 'rot;
                }
            }
            let inv: Vec<GeneratorSymbol> =
                rot[len..].iter().rev().map(|l| l.inverse()).collect();
            return Some(inv);
        }
        None
    }

    /// Replace the cyclic subword at (pos, len) by `repl`, returning the new
    /// cyclically reduced letter sequence.
    fn splice(
        &self,
        w: &[GeneratorSymbol],
        pos: usize,
        len: usize,
        repl: &[GeneratorSymbol],
    ) -> Vec<GeneratorSymbol> {
        let m = w.len();
        let mut out = repl.to_vec();
        for k in len..m {
            out.push(w[(pos + k) % m]);
        }
        cyclic_reduce(out)
    }

    /// Dehn reduction of a cyclic word: cancel freely, and shorten any cyclic
    /// subword strictly longer than half the relator. Returns the (possibly
    /// empty) reduced cyclic word.
    fn dehn_reduce(&self, letters: Vec<GeneratorSymbol>) -> Vec<GeneratorSymbol> {
        let rl = self.relator_length();
        let half = self.half_length();
        let mut w = cyclic_reduce(letters);
        'outer: loop {
            let m = w.len();
            if m <= half {
                return w;
            }
            // Longest matches first so each hit shortens as much as possible.
            let max_len = m.min(rl);
            for len in (half + 1..=max_len).rev() {
                for pos in 0..m {
                    if let Some(repl) = self.complement(&w, pos, len) {
                        w = self.splice(&w, pos, len, &repl);
                        continue 'outer;
                    }
                }
            }
            return w;
        }
    }

    /// All distinct results of a single half-relator swap, cyclically reduced.
    fn half_swaps(&self, w: &[GeneratorSymbol]) -> Vec<Vec<GeneratorSymbol>> {
        let half = self.half_length();
        let mut out = Vec::new();
        if w.len() < half {
            return out;
        }
        for pos in 0..w.len() {
            if let Some(repl) = self.complement(w, pos, half) {
                out.push(self.splice(w, pos, half, &repl));
            }
        }
        out
    }
}

/// Canonical label of an unoriented conjugacy class: the cyclically
/// Dehn-reduced word, minimized lexicographically over all rotations of the
/// half-swap orbit of the word and of its inverse.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConjClassKey {
    cyclic_word: Word,
}

impl ConjClassKey {
    pub fn word(&self) -> &Word {
        &self.cyclic_word
    }

    pub fn len(&self) -> usize {
        self.cyclic_word.len()
    }
}

impl fmt::Debug for ConjClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.cyclic_word)
    }
}

fn min_rotation(w: &[GeneratorSymbol]) -> Vec<GeneratorSymbol> {
    let m = w.len();
    let mut best: Option<Vec<GeneratorSymbol>> = None;
    for s in 0..m {
        let mut rot = w[s..].to_vec();
        rot.extend_from_slice(&w[..s]);
        if best.as_ref().map_or(true, |b| rot < *b) {
            best = Some(rot);
        }
    }
    best.unwrap_or_default()
}

/// Canonical class of `w` under conjugation and inversion.
///
/// Errors with `IdentityWord` if `w` represents the identity of the group.
pub fn canonical_class(
    w: &Word,
    p: &SurfaceGroupPresentation,
) -> Result<ConjClassKey, GroupError> {
    w.check_genus(p.genus())?;
    let mut current = p.dehn_reduce(w.letters().to_vec());
    // Each restart strictly shortens the word, so this terminates.
    'restart: loop {
        if current.is_empty() {
            return Err(GroupError::IdentityWord);
        }
        // Orbit of length-preserving half swaps.
        let mut orbit: BTreeSet<Vec<GeneratorSymbol>> = BTreeSet::new();
        let mut frontier = vec![current.clone()];
        orbit.insert(current.clone());
        while let Some(word) = frontier.pop() {
            for swapped in p.half_swaps(&word) {
                let reduced = p.dehn_reduce(swapped);
                if reduced.len() < current.len() {
                    current = reduced;
                    continue 'restart;
                }
                if reduced.len() == current.len() && orbit.insert(reduced.clone()) {
                    frontier.push(reduced);
                }
            }
            assert!(
                orbit.len() < 1 << 20,
                "half-swap orbit blow-up on {word:?}"
            );
        }
        let mut best: Option<Vec<GeneratorSymbol>> = None;
        for member in &orbit {
            let inv: Vec<GeneratorSymbol> = member.iter().rev().map(|l| l.inverse()).collect();
            for cand in [min_rotation(member), min_rotation(&inv)] {
                if best.as_ref().map_or(true, |b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        return Ok(ConjClassKey {
            cyclic_word: Word::from_reduced(best.unwrap()),
        });
    }
}

/// Decompose a class as root^q with q maximal, via the smallest cyclic
/// period of the canonical word.
pub fn primitive_root(
    key: &ConjClassKey,
    p: &SurfaceGroupPresentation,
) -> (ConjClassKey, usize) {
    let w = key.word().letters();
    let m = w.len();
    for period in 1..=m {
        if m % period != 0 {
            continue;
        }
        let periodic = (0..m).all(|i| w[i] == w[(i + period) % m]);
        if periodic {
            let q = m / period;
            if q == 1 {
                return (key.clone(), 1);
            }
            let root = Word::from_reduced(w[..period].to_vec());
            let root_key = canonical_class(&root, p)
                .expect("nonempty period of a reduced word cannot be the identity");
            return (root_key, q);
        }
    }
    unreachable!("period m always matches");
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymmetryClass {
    Goe,
    Gue,
}

/// A one-dimensional unitary character Γ → ℂ, stored through the angles of
/// its generator values. The relator is a product of commutators, so any
/// assignment of unit complex values extends to a character.
#[derive(Clone, Debug)]
pub struct Character {
    /// angles[j] is the argument of χ(generator with 1-based index j+1)
    angles: Vec<f64>,
}

impl Character {
    pub fn from_angles(angles: Vec<f64>) -> Self {
        assert!(angles.len() % 2 == 0, "need one angle per generator (2g)");
        Character { angles }
    }

    pub fn trivial(genus: usize) -> Self {
        Character {
            angles: vec![0.0; 2 * genus],
        }
    }

    /// Real sign character from a pattern of ±1 values.
    pub fn from_signs(signs: &[i8]) -> Self {
        Character {
            angles: signs
                .iter()
                .map(|&s| if s >= 0 { 0.0 } else { std::f64::consts::PI })
                .collect(),
        }
    }

    pub fn genus(&self) -> usize {
        self.angles.len() / 2
    }

    pub fn value(&self, index: usize) -> Complex64 {
        Complex64::from_polar(1.0, self.angles[index - 1])
    }

    /// Argument of χ(w); χ only sees the abelianized word, so this is
    /// conjugation-invariant and additive over concatenation.
    pub fn eval_angle(&self, w: &Word) -> f64 {
        let mut angle = 0.0;
        for l in w.letters() {
            let theta = self.angles[l.index() - 1];
            angle += if l.inverted() { -theta } else { theta };
        }
        angle
    }

    pub fn eval(&self, w: &Word) -> Complex64 {
        Complex64::from_polar(1.0, self.eval_angle(w))
    }

    /// ℜ χ(γ^k) for the class with representative word `w`.
    pub fn re_power(&self, w: &Word, k: u32) -> f64 {
        (k as f64 * self.eval_angle(w)).cos()
    }

    /// All generator values equal to 1.
    pub fn is_trivial(&self) -> bool {
        self.angles
            .iter()
            .all(|&t| t.sin().abs() < 1e-12 && t.cos() > 0.0)
    }

    /// GOE iff every generator value is ±1, i.e. χ² = 1.
    pub fn symmetry_class(&self) -> SymmetryClass {
        let real = self.angles.iter().all(|&t| {
            let s = t.sin();
            s.abs() < 1e-12
        });
        if real {
            SymmetryClass::Goe
        } else {
            SymmetryClass::Gue
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> SurfaceGroupPresentation {
        SurfaceGroupPresentation::new(2)
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert!(free_reduce(&w("a1 A1")).is_empty());
        assert_eq!(free_reduce(&w("a1 b1 B1 a2")), w("a1 a2"));
        let already = w("a1 b2 A1");
        assert_eq!(free_reduce(&already), already);
        // idempotence
        let r = free_reduce(&w("a1 b1 B1 A1 a2 A2 a1"));
        assert_eq!(free_reduce(&r), r);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let word = w("a1 A1 b1 B2 a2");
        assert_eq!(word.to_string(), "b1 B2 a2");
        assert_eq!(Word::parse(&word.to_string()).unwrap(), word);
        assert!(Word::parse("c1").is_err());
        assert!(Word::parse("a0").is_err());
        assert!(Word::parse("ax").is_err());
    }

    #[test]
    fn relator_shape() {
        let p = p2();
        assert_eq!(p.relator().len(), 8);
        assert_eq!(p.relator().to_string(), "a1 b1 A1 B1 a2 b2 A2 B2");
        assert!(p.relator().is_reduced());
    }

    #[test]
    fn identity_word_detected() {
        let p = p2();
        assert_eq!(
            canonical_class(&w("a1 A1"), &p).unwrap_err(),
            GroupError::IdentityWord
        );
        assert_eq!(
            canonical_class(p.relator(), &p).unwrap_err(),
            GroupError::IdentityWord
        );
        // relator conjugated and squared still dies
        let r = p.relator();
        let u = w("b2 a1");
        let conj = u.concat(r).concat(&u.inverse());
        assert_eq!(
            canonical_class(&conj, &p).unwrap_err(),
            GroupError::IdentityWord
        );
    }

    #[test]
    fn conjugates_share_keys() {
        let p = p2();
        let k1 = canonical_class(&w("a1"), &p).unwrap();
        let k2 = canonical_class(&w("b2 a1 B2"), &p).unwrap();
        assert_eq!(k1, k2);
        // inverse identification
        let k3 = canonical_class(&w("A1"), &p).unwrap();
        assert_eq!(k1, k3);
        // cyclic rotation
        let k4 = canonical_class(&w("a1 b1"), &p).unwrap();
        let k5 = canonical_class(&w("b1 a1"), &p).unwrap();
        assert_eq!(k4, k5);
    }

    #[test]
    fn half_relator_spellings_agree() {
        let p = p2();
        // a1 b1 A1 B1 and the inverse of a2 b2 A2 B2 are equal in Γ and both
        // have exactly half the relator length.
        let k1 = canonical_class(&w("a1 b1 A1 B1"), &p).unwrap();
        let k2 = canonical_class(&w("b2 a2 B2 A2"), &p).unwrap();
        assert_eq!(k1, k2);
    }

    #[test]
    fn long_words_dehn_reduce() {
        let p = p2();
        // w * relator-conjugate == w in the group
        let base = w("a1 b2");
        let r = p.relator();
        let u = w("a2 b1 A1");
        let noisy = base
            .concat(&u)
            .concat(r)
            .concat(&u.inverse());
        assert_eq!(
            canonical_class(&noisy, &p).unwrap(),
            canonical_class(&base, &p).unwrap()
        );
    }

    #[test]
    fn conjugation_exhaustive_short_words() {
        let p = p2();
        // all reduced words of length <= 4 in genus 2, conjugated by all
        // length-<=2 words, land on the same key
        let letters: Vec<GeneratorSymbol> = (0..8).map(GeneratorSymbol::from_code).collect();
        let mut words = vec![Vec::new()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for wd in &words {
                for &l in &letters {
                    let mut v = wd.clone();
                    v.push(l);
                    if is_freely_reduced(&v) {
                        next.push(v);
                    }
                }
            }
            for wd in next {
                words.push(wd);
            }
        }
        let conjugators: Vec<Word> = {
            let mut out = vec![Word::empty()];
            for &l in &letters {
                out.push(Word::from_reduced(vec![l]));
                for &l2 in &letters {
                    if !l.is_inverse_of(&l2) {
                        out.push(Word::from_reduced(vec![l, l2]));
                    }
                }
            }
            out
        };
        let mut checked = 0usize;
        for wd in words.iter().filter(|v| !v.is_empty()) {
            let word = Word::from_reduced(wd.clone());
            let key = match canonical_class(&word, &p) {
                Ok(k) => k,
                Err(GroupError::IdentityWord) => continue,
                Err(e) => panic!("{e}"),
            };
            for u in &conjugators {
                let conj = u.concat(&word).concat(&u.inverse());
                assert_eq!(canonical_class(&conj, &p).unwrap(), key, "w={word} u={u}");
            }
            checked += 1;
        }
        assert!(checked > 3000);
    }

    #[test]
    fn primitive_root_examples() {
        let p = p2();
        let k = canonical_class(&w("a1"), &p).unwrap();
        let (root, q) = primitive_root(&k, &p);
        assert_eq!((root, q), (k.clone(), 1));

        let k2 = canonical_class(&w("a1 a1"), &p).unwrap();
        let (root2, q2) = primitive_root(&k2, &p);
        assert_eq!(root2, k);
        assert_eq!(q2, 2);

        let k3 = canonical_class(&w("a1 b1 a1 b1 a1 b1"), &p).unwrap();
        let (root3, q3) = primitive_root(&k3, &p);
        assert_eq!(root3, canonical_class(&w("a1 b1"), &p).unwrap());
        assert_eq!(q3, 3);
    }

    #[test]
    fn primitive_root_reconstructs() {
        let p = p2();
        for text in ["a1 b1", "a1 a2 B1", "a1 b1 A1 b2", "a2"] {
            for q in 1..=4usize {
                let word = w(text).pow(q);
                let key = canonical_class(&word, &p).unwrap();
                let (root, got_q) = primitive_root(&key, &p);
                // re-raise and canonicalize
                let again = canonical_class(&root.word().pow(got_q), &p).unwrap();
                assert_eq!(again, key);
                assert!(got_q >= q, "{text} q={q} got {got_q}");
            }
        }
    }

    #[test]
    fn character_basics() {
        let p = p2();
        let chi = Character::trivial(2);
        assert_eq!(chi.eval(&Word::empty()), Complex64::new(1.0, 0.0));
        let r = chi.eval(p.relator());
        assert!((r - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(chi.symmetry_class(), SymmetryClass::Goe);

        let sign = Character::from_signs(&[-1, -1, -1, -1]);
        let v = sign.eval(&w("a1 b1"));
        assert!((v.re - 1.0).abs() < 1e-12, "(-1)(-1) = 1");
        assert_eq!(sign.symmetry_class(), SymmetryClass::Goe);

        let gue = Character::from_angles(vec![std::f64::consts::PI / 3.0, 0.0, 0.0, 0.0]);
        assert_eq!(gue.symmetry_class(), SymmetryClass::Gue);
        // relator still maps to 1 (commutators kill any character)
        assert!((gue.eval(p.relator()) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn character_multiplicative_and_conjugation_invariant() {
        let chi = Character::from_angles(vec![0.3, -1.1, 2.0, 0.7]);
        let u = w("a1 b2 A2");
        let v = w("b1 b1 a2");
        let lhs = chi.eval(&u.concat(&v));
        let rhs = chi.eval(&u) * chi.eval(&v);
        assert!((lhs - rhs).norm() < 1e-12);
        let conj = w("a2 b1").concat(&u).concat(&w("a2 b1").inverse());
        assert!((chi.eval(&conj) - chi.eval(&u)).norm() < 1e-12);
        assert!((chi.eval(&u.inverse()) - chi.eval(&u).conj()).norm() < 1e-12);
    }
}
