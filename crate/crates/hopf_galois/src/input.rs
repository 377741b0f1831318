//! The Lie-algebra description file: a small table-structured text format
//! (TOML), with JSON accepted as an alternative encoding of the same schema.
//!
//! ```toml
//! p = 3
//! dim = 2
//! basis = ["e0", "e1"]            # optional, defaults to e0, e1, ...
//! bracket = [{ i = 0, j = 1, coeffs = [0, 1] }]
//! pmap = [[1, 0], [0, 0]]
//! xi = [0, 1]                     # optional
//! # [params]                      # optional, for parametric fixtures
//! # a = 1
//! # b = 0
//! ```
//!
//! Only entries with j > i are accepted in `bracket`; antisymmetry is
//! filled in. Coefficients are reduced mod p on load.

use crate::fp::Fp;
use crate::lie::{LinearForm, RestrictedLie};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Params {
    pub a: Option<i64>,
    pub b: Option<i64>,
}

/// On-disk schema of a Lie algebra description.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LieSpecFile {
    pub p: u16,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub bracket: Vec<BracketEntry>,
    pub pmap: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
}

impl LieSpecFile {
    /// Parse from TOML, falling back to JSON when the text looks like JSON.
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            serde_json::from_str(text).map_err(|e| InputError::Parse(format!("json: {e}")))
        } else {
            toml::from_str(text).map_err(|e| InputError::Parse(format!("toml: {e}")))
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("schema serialises")
    }

    /// Validate and convert into a Lie algebra plus the optional form.
    pub fn build(&self) -> Result<(RestrictedLie, Option<LinearForm>), InputError> {
        let f = Fp::new(self.p).map_err(|e| InputError::Field {
            field: "p".into(),
            message: e.to_string(),
        })?;
        let n = self.dim;
        if let Some(names) = &self.basis {
            if names.len() != n {
                return Err(InputError::Field {
                    field: "basis".into(),
                    message: format!("{} names for dimension {n}", names.len()),
                });
            }
        }
        let mut bracket = vec![0u8; n * n * n];
        for (idx, e) in self.bracket.iter().enumerate() {
            if e.i >= n || e.j >= n {
                return Err(InputError::Field {
                    field: format!("bracket[{idx}]"),
                    message: format!("indices ({}, {}) out of range 0..{n}", e.i, e.j),
                });
            }
            if e.j <= e.i {
                return Err(InputError::Field {
                    field: format!("bracket[{idx}]"),
                    message: "only entries with j > i are accepted (antisymmetry is filled in)"
                        .into(),
                });
            }
            if e.coeffs.len() != n {
                return Err(InputError::Field {
                    field: format!("bracket[{idx}].coeffs"),
                    message: format!("expected {n} coefficients, got {}", e.coeffs.len()),
                });
            }
            for (l, &c) in e.coeffs.iter().enumerate() {
                let v = f.reduce_i64(c);
                bracket[(e.i * n + e.j) * n + l] = v;
                bracket[(e.j * n + e.i) * n + l] = f.neg(v);
            }
        }
        if self.pmap.len() != n {
            return Err(InputError::Field {
                field: "pmap".into(),
                message: format!("expected {n} rows, got {}", self.pmap.len()),
            });
        }
        let mut pmap = vec![0u8; n * n];
        for (i, row) in self.pmap.iter().enumerate() {
            if row.len() != n {
                return Err(InputError::Field {
                    field: format!("pmap[{i}]"),
                    message: format!("expected {n} coefficients, got {}", row.len()),
                });
            }
            for (l, &c) in row.iter().enumerate() {
                pmap[i * n + l] = f.reduce_i64(c);
            }
        }
        let xi = match &self.xi {
            None => None,
            Some(v) => {
                if v.len() != n {
                    return Err(InputError::Field {
                        field: "xi".into(),
                        message: format!("expected {n} coefficients, got {}", v.len()),
                    });
                }
                Some(LinearForm { xi: v.iter().map(|&c| f.reduce_i64(c)).collect() })
            }
        };
        Ok((RestrictedLie::new(self.p, n, bracket, pmap), xi))
    }

    pub fn basis_names(&self) -> Vec<String> {
        match &self.basis {
            Some(v) => v.clone(),
            None => (0..self.dim).map(|i| format!("e{i}")).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = r#"
p = 3
dim = 2
basis = ["e0", "e1"]
bracket = [{ i = 0, j = 1, coeffs = [0, 1] }]
pmap = [[1, 0], [0, 0]]
xi = [0, 1]
"#;

    #[test]
    fn parses_toml_and_builds() {
        let spec = LieSpecFile::parse(EXAMPLE).unwrap();
        let (g, xi) = spec.build().unwrap();
        assert!(g.check().pass());
        assert_eq!(xi.unwrap().xi, vec![0, 1]);
    }

    #[test]
    fn parses_json_alternative() {
        let json = r#"{ "p": 3, "dim": 2,
            "bracket": [{ "i": 0, "j": 1, "coeffs": [0, 1] }],
            "pmap": [[1, 0], [0, 0]], "xi": [0, 1] }"#;
        let spec = LieSpecFile::parse(json).unwrap();
        let (g, _) = spec.build().unwrap();
        assert!(g.check().pass());
    }

    #[test]
    fn rejects_nonprime_modulus() {
        let bad = EXAMPLE.replace("p = 3", "p = 4");
        let spec = LieSpecFile::parse(&bad).unwrap();
        assert!(matches!(spec.build(), Err(InputError::Field { field, .. }) if field == "p"));
    }

    #[test]
    fn rejects_lower_triangle_and_missing_pmap() {
        let bad = EXAMPLE.replace("i = 0, j = 1", "i = 1, j = 0");
        let spec = LieSpecFile::parse(&bad).unwrap();
        assert!(spec.build().is_err());
        let bad = EXAMPLE.replace("pmap = [[1, 0], [0, 0]]", "pmap = [[1, 0]]");
        let spec = LieSpecFile::parse(&bad).unwrap();
        assert!(matches!(spec.build(), Err(InputError::Field { field, .. }) if field == "pmap"));
    }

    #[test]
    fn negative_coefficients_reduce() {
        let neg = EXAMPLE.replace("coeffs = [0, 1]", "coeffs = [0, -2]");
        let spec = LieSpecFile::parse(&neg).unwrap();
        let (g, _) = spec.build().unwrap();
        assert_eq!(g.bracket_row(0, 1), &[0, 1]);
    }

    #[test]
    fn roundtrips_through_toml() {
        let spec = LieSpecFile::parse(EXAMPLE).unwrap();
        let text = spec.to_toml();
        let again = LieSpecFile::parse(&text).unwrap();
        assert_eq!(again.p, 3);
        assert_eq!(again.bracket.len(), 1);
    }
}
