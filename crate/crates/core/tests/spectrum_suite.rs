//! Enumeration and spectrum-file behavior on the built-in Bolza model.

use covertrace::group::{canonical_class, Character, Word};
use covertrace::spectrum::*;

fn bolza() -> FuchsianModel {
    FuchsianModel::bolza()
}

#[test]
fn systole_and_class_counts() {
    let model = bolza();
    let s = enumerate_spectrum(&model, 6.0, &BallParams::default()).unwrap();
    let expected = 2.0 * (1.0 + std::f64::consts::SQRT_2).acosh();
    assert!((s.systole() - expected).abs() < 1e-9);
    // the Bolza surface has exactly 12 unoriented systolic geodesics
    let systolic = s
        .classes
        .iter()
        .filter(|c| (c.length - expected).abs() < 1e-9)
        .count();
    assert_eq!(systolic, 12);
    // all keys distinct, lengths sorted, all primitive
    for w in s.classes.windows(2) {
        assert!(w[0].length <= w[1].length);
        assert_ne!(w[0].key, w[1].key);
    }
}

#[test]
fn empty_below_systole() {
    let model = bolza();
    let s = enumerate_spectrum(&model, 2.5, &BallParams::default()).unwrap();
    assert!(s.is_empty());
    assert_eq!(s.counting_n0(2.0).unwrap(), 0.0);
    assert_eq!(s.counting_n(2.0).unwrap(), 0.0);
}

#[test]
fn ball_and_word_enumerators_agree() {
    let model = bolza();
    let ball = enumerate_spectrum(&model, 4.7, &BallParams::default()).unwrap();
    let words = enumerate_spectrum_words(&model, 4.7, 7).unwrap();
    assert_eq!(ball.len(), words.len(), "class counts differ");
    for (a, b) in ball.classes.iter().zip(words.classes.iter()) {
        assert_eq!(a.key, b.key);
        assert!((a.length - b.length).abs() < 1e-12);
    }
    // horizon too small is reported, not silently wrong
    assert!(matches!(
        enumerate_spectrum_words(&model, 4.7, 4),
        Err(SpectrumError::HorizonTooSmall(_))
    ));
}

#[test]
fn slack_stability_gate() {
    let model = bolza();
    let s = stability_check(&model, 6.0, &BallParams::default()).unwrap();
    assert_eq!(
        s.len(),
        enumerate_spectrum(&model, 6.0, &BallParams::default())
            .unwrap()
            .len()
    );
}

#[test]
fn power_length_law() {
    let model = bolza();
    let s = enumerate_spectrum(&model, 6.0, &BallParams::default()).unwrap();
    let pres = model.presentation();
    for c in s.classes.iter().take(20) {
        let w = c.word().unwrap();
        for q in [2usize, 3] {
            let m = model.word_to_matrix(&w.pow(q));
            let l_pow = translation_length(&m).unwrap();
            assert!(
                (l_pow - q as f64 * c.length).abs() < 1e-7,
                "power law fails: {} vs {}",
                l_pow,
                q as f64 * c.length
            );
        }
        // powers canonicalize to non-primitive classes with this root
        let key2 = canonical_class(&w.pow(2), pres).unwrap();
        let (root, q) = covertrace::group::primitive_root(&key2, pres);
        assert_eq!(q, 2);
        assert_eq!(&root, c.key.as_ref().unwrap());
    }
}

#[test]
fn trace_is_conjugation_invariant_across_keys() {
    // random conjugates of spectrum words keep both key and trace
    let model = bolza();
    let s = enumerate_spectrum(&model, 5.0, &BallParams::default()).unwrap();
    let pres = model.presentation();
    let conjugators = ["a1", "b2 A1", "a2 b1 a1", "B2 B1 a1 b1"];
    for c in &s.classes {
        let w = c.word().unwrap();
        for u_text in conjugators {
            let u = Word::parse(u_text).unwrap();
            let conj = u.concat(w).concat(&u.inverse());
            assert_eq!(&canonical_class(&conj, pres).unwrap(), c.key.as_ref().unwrap());
            let tr = model.word_to_matrix(&conj).trace().abs();
            // trace cancellation loses ~‖u‖² relative digits
            let mu = model.word_to_matrix(&u);
            let norm_sq = mu.a * mu.a + mu.b * mu.b + mu.c * mu.c + mu.d * mu.d;
            let tol = 1e-13 * norm_sq * c.trace.max(1.0) + 1e-9;
            assert!((tr - c.trace).abs() < tol, "u={u_text}: {tr} vs {}", c.trace);
        }
    }
}

#[test]
fn counting_functions() {
    let model = bolza();
    let s = enumerate_spectrum(&model, 8.0, &BallParams::default()).unwrap();
    let sys = s.systole();
    assert_eq!(s.counting_n0(sys * 0.99).unwrap(), 0.0);
    // 12 systoles, counted once per orientation
    assert_eq!(s.counting_n0(sys + 1e-9).unwrap(), 24.0);
    // N(T) counts the squares of systoles too
    let n0 = s.counting_n0(7.0).unwrap();
    let n = s.counting_n(7.0).unwrap();
    assert_eq!(n - n0, 24.0, "between 6.11 and 7 the powers are exactly the systole squares");
    // trivial character reproduces N(T)
    let chi = Character::trivial(2);
    let n_chi = s.counting_n_chi(7.0, &chi).unwrap();
    assert!((n_chi - n).abs() < 1e-9);
    // cutoff guarded
    assert!(matches!(
        s.counting_n0(9.0),
        Err(SpectrumError::CutoffExceeded { .. })
    ));
}

#[test]
fn spectrum_io_roundtrip() {
    let model = bolza();
    let s = enumerate_spectrum(&model, 6.0, &BallParams::default()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.csv");
    save_spectrum(&s, &path).unwrap();
    let loaded = load_spectrum(&path).unwrap();
    assert_eq!(loaded.len(), s.len());
    assert!((loaded.cutoff - s.cutoff).abs() < 1e-9);
    assert!(loaded.has_words());
    for (a, b) in s.classes.iter().zip(loaded.classes.iter()) {
        assert_eq!(a.key, b.key);
        assert!((a.length - b.length).abs() < 1e-10);
        assert!((a.trace - b.trace).abs() < 1e-8 * a.trace.max(1.0));
    }
}

#[test]
fn spectrum_io_rejects_inconsistent_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    // trace does not match the length
    std::fs::write(
        &path,
        "word,length,trace\na1,3.05714209591e0,9.0e0\n",
    )
    .unwrap();
    assert!(matches!(
        load_spectrum(&path),
        Err(SpectrumError::InvariantViolation(_))
    ));
    // proper power rejected
    std::fs::write(
        &path,
        format!(
            "word,length,trace\na1 a1,{:.11e},{:.11e}\n",
            2.0 * 3.0571420959092887f64,
            2.0 * (3.0571420959092887f64).cosh()
        ),
    )
    .unwrap();
    assert!(matches!(
        load_spectrum(&path),
        Err(SpectrumError::InvariantViolation(_))
    ));
}

#[test]
fn synthetic_wordless_spectrum_loads() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("synthetic.csv");
    let l: f64 = 3.3;
    let tr = 2.0 * (l / 2.0).cosh();
    std::fs::write(
        &path,
        format!("# covertrace spectrum v1 cutoff=5.0 horizon=0.0\nword,length,trace\n,{l:.11e},{tr:.11e}\n"),
    )
    .unwrap();
    let s = load_spectrum(&path).unwrap();
    assert_eq!(s.len(), 1);
    assert!(!s.has_words());
    assert!((s.cutoff - 5.0).abs() < 1e-12);
    // character counting needs words
    assert!(matches!(
        s.counting_n_chi(4.0, &Character::trivial(2)),
        Err(SpectrumError::WordsAbsent)
    ));
}
