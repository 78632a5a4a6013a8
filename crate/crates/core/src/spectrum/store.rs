//! Spectrum CSV files: header `word,length,trace`, the word in the group
//! text format (empty for synthetic spectra), lengths and traces with 12
//! significant digits. A leading comment line carries cutoff and horizon.

use std::fs;
use std::path::Path;

use super::{LengthSpectrum, PrimitiveGeodesic, SpectrumError};
use crate::group::{canonical_class, primitive_root, SurfaceGroupPresentation, Word};

pub fn save_spectrum(s: &LengthSpectrum, path: &Path) -> Result<(), SpectrumError> {
    let mut out = String::new();
    out.push_str(&format!(
        "# covertrace spectrum v1 cutoff={:.12e} horizon={:.12e}\n",
        s.cutoff, s.horizon
    ));
    out.push_str("word,length,trace\n");
    for c in &s.classes {
        let word = c.word().map_or(String::new(), |w| w.to_string());
        out.push_str(&format!("{word},{:.11e},{:.11e}\n", c.length, c.trace));
    }
    fs::write(path, out)?;
    Ok(())
}

fn parse_meta(line: &str) -> Option<(f64, f64)> {
    let mut cutoff = None;
    let mut horizon = None;
    for tok in line.trim_start_matches('#').split_whitespace() {
        if let Some(v) = tok.strip_prefix("cutoff=") {
            cutoff = v.parse().ok();
        }
        if let Some(v) = tok.strip_prefix("horizon=") {
            horizon = v.parse().ok();
        }
    }
    Some((cutoff?, horizon?))
}

pub fn load_spectrum(path: &Path) -> Result<LengthSpectrum, SpectrumError> {
    let text = fs::read_to_string(path)?;
    let mut cutoff = None;
    let mut horizon = 0.0;
    let mut rows: Vec<(usize, Option<Word>, f64, f64)> = Vec::new();
    let mut saw_header = false;
    let mut max_index = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if let Some((c, h)) = parse_meta(line) {
                cutoff = Some(c);
                horizon = h;
            }
            continue;
        }
        if !saw_header {
            if line != "word,length,trace" {
                return Err(SpectrumError::Parse {
                    line: lineno + 1,
                    message: format!("expected header word,length,trace, got {line:?}"),
                });
            }
            saw_header = true;
            continue;
        }
        let mut parts = line.splitn(3, ',');
        let (word_text, length_text, trace_text) =
            match (parts.next(), parts.next(), parts.next()) {
                (Some(w), Some(l), Some(t)) => (w.trim(), l.trim(), t.trim()),
                _ => {
                    return Err(SpectrumError::Parse {
                        line: lineno + 1,
                        message: "expected word,length,trace".into(),
                    })
                }
            };
        let length: f64 = length_text.parse().map_err(|_| SpectrumError::Parse {
            line: lineno + 1,
            message: format!("bad length {length_text:?}"),
        })?;
        let trace: f64 = trace_text.parse().map_err(|_| SpectrumError::Parse {
            line: lineno + 1,
            message: format!("bad trace {trace_text:?}"),
        })?;
        if length <= 0.0 {
            return Err(SpectrumError::InvariantViolation(format!(
                "nonpositive length at line {}",
                lineno + 1
            )));
        }
        // length and trace must describe the same hyperbolic class
        let implied = 2.0 * (0.5 * trace.abs()).acosh();
        if (implied - length).abs() > 1e-9 * length.max(1.0) {
            return Err(SpectrumError::InvariantViolation(format!(
                "length {length} and trace {trace} disagree at line {}",
                lineno + 1
            )));
        }
        let word = if word_text.is_empty() {
            None
        } else {
            let w = Word::parse(word_text).map_err(|e| SpectrumError::Parse {
                line: lineno + 1,
                message: e.to_string(),
            })?;
            max_index = max_index.max(w.max_index());
            Some(w)
        };
        rows.push((lineno + 1, word, length, trace.abs()));
    }
    if !saw_header {
        return Err(SpectrumError::Parse {
            line: 1,
            message: "missing header".into(),
        });
    }
    // canonicalize and validate words now that the ambient genus is known
    let pres = (max_index > 0).then(|| SurfaceGroupPresentation::new(((max_index + 1) / 2).max(2)));
    let mut classes = Vec::with_capacity(rows.len());
    let mut seen = std::collections::BTreeSet::new();
    for (lineno, word, length, trace) in rows {
        let key = match word {
            None => None,
            Some(w) => {
                let pres = pres.as_ref().expect("presentation exists when words do");
                let key = canonical_class(&w, pres).map_err(|e| SpectrumError::Parse {
                    line: lineno,
                    message: e.to_string(),
                })?;
                if primitive_root(&key, pres).1 != 1 {
                    return Err(SpectrumError::InvariantViolation(format!(
                        "class {w} at line {lineno} is a proper power"
                    )));
                }
                if !seen.insert(key.clone()) {
                    return Err(SpectrumError::InvariantViolation(format!(
                        "duplicate class at line {lineno}"
                    )));
                }
                Some(key)
            }
        };
        classes.push(PrimitiveGeodesic {
            word_length: key.as_ref().map_or(0, |k| k.len()),
            key,
            length,
            trace,
        });
    }
    classes.sort_by(|a, b| a.length.total_cmp(&b.length));
    let cutoff = cutoff.unwrap_or_else(|| classes.last().map_or(0.0, |c| c.length));
    Ok(LengthSpectrum {
        cutoff,
        classes,
        horizon,
    })
}
