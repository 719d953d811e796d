//! The action file format.
//!
//! A plain-text document of `key = value` lines:
//!
//! ```text
//! # comment
//! signature = (0; +; [ ]; {(2,3),( )})
//! degree = 4
//! c1.0 = (1,2)
//! c1.1 = (3,4)
//! ...
//! ```
//!
//! `signature` uses the signature text syntax, `degree` is the number of
//! cosets, and every other key is a canonical generator name mapped to a
//! permutation in cycle notation (1-indexed, fixed points optional).
//! `signature` and `degree` must appear before the generator lines so the
//! permutations can be checked against the degree as they are read.

use necsig::permutation::{parse_cycles, PermError, Permutation};
use necsig::signature::{parse_signature, NecSignature};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("line {line}, column {column}: bad signature: {message}")]
    BadSignature {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: bad degree: {message}")]
    BadDegree { line: usize, message: String },
    #[error("line {line}, column {column}: bad permutation for {name}: {message}")]
    BadPermutation {
        line: usize,
        column: usize,
        name: String,
        message: String,
    },
    #[error("line {line}: duplicate `{key}`")]
    Duplicate { line: usize, key: String },
    #[error("line {line}: generator images must come after `signature` and `degree`")]
    GeneratorBeforeHeader { line: usize },
    #[error("missing `{field}` line")]
    MissingField { field: &'static str },
}

#[derive(Debug, Clone)]
pub struct ActionFile {
    pub signature: NecSignature,
    pub degree: usize,
    pub generators: Vec<(String, Permutation)>,
}

pub fn parse_action_file(text: &str) -> Result<ActionFile, InputError> {
    let mut signature: Option<NecSignature> = None;
    let mut degree: Option<usize> = None;
    let mut generators: Vec<(String, Permutation)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some(eq) = raw.find('=') else {
            return Err(InputError::Syntax { line });
        };
        let key = raw[..eq].trim();
        if key.is_empty() {
            return Err(InputError::Syntax { line });
        }
        let after_eq = &raw[eq + 1..];
        let value = after_eq.trim();
        // 1-based column where the value starts, for error positions.
        let value_col = eq + 1 + (after_eq.len() - after_eq.trim_start().len()) + 1;

        match key {
            "signature" => {
                if signature.is_some() {
                    return Err(InputError::Duplicate {
                        line,
                        key: key.to_string(),
                    });
                }
                let sig = parse_signature(value).map_err(|e| InputError::BadSignature {
                    line,
                    column: value_col + e.offset,
                    message: e.message,
                })?;
                signature = Some(sig);
            }
            "degree" => {
                if degree.is_some() {
                    return Err(InputError::Duplicate {
                        line,
                        key: key.to_string(),
                    });
                }
                let d: usize = value.parse().map_err(|e| InputError::BadDegree {
                    line,
                    message: format!("{e}"),
                })?;
                if d == 0 {
                    return Err(InputError::BadDegree {
                        line,
                        message: "degree must be at least 1".to_string(),
                    });
                }
                degree = Some(d);
            }
            name => {
                let Some(d) = degree else {
                    return Err(InputError::GeneratorBeforeHeader { line });
                };
                if signature.is_none() {
                    return Err(InputError::GeneratorBeforeHeader { line });
                }
                if generators.iter().any(|(n, _)| n == name) {
                    return Err(InputError::Duplicate {
                        line,
                        key: name.to_string(),
                    });
                }
                let perm = parse_cycles(value, d).map_err(|e| {
                    let column = match &e {
                        PermError::Parse { offset, .. } => value_col + offset,
                        _ => value_col,
                    };
                    InputError::BadPermutation {
                        line,
                        column,
                        name: name.to_string(),
                        message: e.to_string(),
                    }
                })?;
                generators.push((name.to_string(), perm));
            }
        }
    }

    let signature = signature.ok_or(InputError::MissingField { field: "signature" })?;
    let degree = degree.ok_or(InputError::MissingField { field: "degree" })?;
    Ok(ActionFile {
        signature,
        degree,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOOD: &str = "\
# the degree-4 action on a signature with one (2,3) cycle and one empty cycle
signature = (0; +; [ ]; {(2,3),( )})
degree = 4

c1.0 = (1,2)
c1.1 = (3,4)
c1.2 = (1,3)
c2.0 = (2,3)
e1 = (2,3)
e2 = (2,3)
";

    #[test]
    fn parses_a_full_file() {
        let f = parse_action_file(GOOD).unwrap();
        assert_eq!(f.degree, 4);
        assert_eq!(f.signature.to_string(), "(0; +; [ ]; {(2,3),( )})");
        assert_eq!(f.generators.len(), 6);
        assert_eq!(f.generators[0].0, "c1.0");
        assert_eq!(f.generators[0].1.to_string(), "(1,2)(3)(4)");
    }

    #[test]
    fn rejects_points_beyond_the_degree() {
        let text = "signature = (1;-;[];{})\ndegree = 4\na1 = (1,5)\n";
        let err = parse_action_file(text).unwrap_err();
        match err {
            InputError::BadPermutation {
                line,
                name,
                ref message,
                ..
            } => {
                assert_eq!(line, 3);
                assert_eq!(name, "a1");
                assert!(message.contains('5'), "{message}");
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn errors_carry_line_and_column() {
        let text = "signature = (0; +; [ ]; {(2,X)})\ndegree = 2\n";
        match parse_action_file(text).unwrap_err() {
            InputError::BadSignature { line, column, .. } => {
                assert_eq!(line, 1);
                // Points at the X inside the value.
                assert_eq!(&text[column - 1..column], "X");
            }
            other => panic!("unexpected error {other}"),
        }

        let text = "signature = (1;-;[];{})\ndegree = 3\na1 = (1,2\n";
        match parse_action_file(text).unwrap_err() {
            InputError::BadPermutation { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column >= 6, "column {column}");
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn header_must_precede_generators() {
        let text = "c1.0 = (1,2)\nsignature = (0;+;[];{()})\ndegree = 2\n";
        assert!(matches!(
            parse_action_file(text).unwrap_err(),
            InputError::GeneratorBeforeHeader { line: 1 }
        ));
    }

    #[test]
    fn duplicates_and_missing_fields_are_rejected() {
        let text = "signature = (1;-;[];{})\nsignature = (1;-;[];{})\n";
        assert!(matches!(
            parse_action_file(text).unwrap_err(),
            InputError::Duplicate { line: 2, .. }
        ));

        let text = "degree = 2\n";
        assert!(matches!(
            parse_action_file(text).unwrap_err(),
            InputError::MissingField { field: "signature" }
        ));

        let text = "signature = (1;-;[];{})\ndegree = 2\na1 = (1,2)\na1 = (1,2)\n";
        assert!(matches!(
            parse_action_file(text).unwrap_err(),
            InputError::Duplicate { line: 4, .. }
        ));
    }
}
