//! JSON problem files.
//!
//! ```json
//! {
//!   "variables": ["x1", "x2"],
//!   "ideal": ["x1^2 - 3*x1 + 2", "x2^2 - x2"],
//!   "vectors": ["x1 - x2"],
//!   "options": { "subset_cap": 20, "run_oracle": false, "shift_override": [1, 0] }
//! }
//! ```
//!
//! `eliminants` (one univariate polynomial per variable) may replace
//! `ideal`. Without `variables`, the identifiers used are taken in natural
//! order.

use serde::{Deserialize, Serialize};

use super::parse::{identifiers, is_identifier, natural_cmp, parse_polynomial};
use super::CliError;
use crate::mzdecide::{DecideOptions, IdealInput, Problem, DEFAULT_SUBSET_CAP};
use crate::Poly;

fn default_cap() -> usize {
    DEFAULT_SUBSET_CAP
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemOptions {
    #[serde(default = "default_cap")]
    pub subset_cap: usize,
    #[serde(default)]
    pub run_oracle: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift_override: Option<Vec<i64>>,
}

impl Default for ProblemOptions {
    fn default() -> Self {
        ProblemOptions { subset_cap: DEFAULT_SUBSET_CAP, run_oracle: false, shift_override: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eliminants: Option<Vec<String>>,
    #[serde(default)]
    pub vectors: Vec<String>,
    #[serde(default)]
    pub options: ProblemOptions,
}

/// A parsed problem together with its variable names and options.
#[derive(Clone, Debug)]
pub struct LoadedProblem {
    pub variables: Vec<String>,
    pub problem: Problem,
    pub options: DecideOptions,
    pub run_oracle: bool,
}

impl ProblemFile {
    pub fn from_json(src: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(src)?)
    }

    fn all_sources(&self) -> impl Iterator<Item = &String> {
        self.ideal.iter().flatten().chain(self.eliminants.iter().flatten()).chain(&self.vectors)
    }

    fn resolve_variables(&self) -> Result<Vec<String>, CliError> {
        let vars = match &self.variables {
            Some(v) => v.clone(),
            None => {
                let mut found: Vec<String> = Vec::new();
                for s in self.all_sources() {
                    for id in identifiers(s) {
                        if !found.contains(&id) {
                            found.push(id);
                        }
                    }
                }
                found.sort_by(|a, b| natural_cmp(a, b));
                found
            }
        };
        if vars.is_empty() {
            return Err(CliError::Invalid("no variables declared or used".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(CliError::Invalid(format!("variable name {v:?} is not an identifier")));
            }
            if vars[..i].contains(v) {
                return Err(CliError::Invalid(format!("variable {v:?} declared twice")));
            }
        }
        Ok(vars)
    }

    pub fn load(&self) -> Result<LoadedProblem, CliError> {
        let variables = self.resolve_variables()?;
        let parse_all = |field: &'static str, srcs: &[String]| -> Result<Vec<Poly>, CliError> {
            srcs.iter()
                .enumerate()
                .map(|(index, s)| {
                    parse_polynomial(s, &variables).map_err(|source| CliError::Parse { field, index, source })
                })
                .collect()
        };
        let ideal = match (&self.ideal, &self.eliminants) {
            (Some(g), None) => IdealInput::Generators(parse_all("ideal", g)?),
            (None, Some(e)) => IdealInput::Eliminants(parse_all("eliminants", e)?),
            _ => return Err(CliError::Invalid("exactly one of \"ideal\" and \"eliminants\" is required".into())),
        };
        let vectors = parse_all("vectors", &self.vectors)?;
        let options = DecideOptions {
            subset_cap: self.options.subset_cap,
            shift_override: self.options.shift_override.clone(),
            ..Default::default()
        };
        Ok(LoadedProblem {
            problem: Problem { nvars: variables.len(), ideal, vectors },
            variables,
            options,
            run_oracle: self.options.run_oracle,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infers_variables_in_natural_order() {
        let f = ProblemFile::from_json(r#"{"ideal": ["x10 - 1", "x2^2", "x1"], "vectors": ["x2"]}"#).unwrap();
        let loaded = f.load().unwrap();
        assert_eq!(loaded.variables, vec!["x1", "x2", "x10"]);
        assert_eq!(loaded.options.subset_cap, DEFAULT_SUBSET_CAP);
        assert!(!loaded.run_oracle);
    }

    #[test]
    fn rejects_bad_files() {
        let bad = [
            r#"{"ideal": ["x1"], "eliminants": ["x1"]}"#,
            r#"{"vectors": ["x1"]}"#,
            r#"{"variables": ["x", "x"], "ideal": ["x"]}"#,
            r#"{"variables": ["1x"], "ideal": ["1"]}"#,
            r#"{"ideal": ["1"]}"#,
            r#"{"ideal": ["x1 x2"]}"#,
        ];
        for src in bad {
            assert!(ProblemFile::from_json(src).unwrap().load().is_err(), "{src}");
        }
        assert!(ProblemFile::from_json(r#"{"ideal": ["x1"], "extra": 1}"#).is_err());
    }

    #[test]
    fn parse_errors_name_their_field() {
        let f = ProblemFile::from_json(r#"{"ideal": ["x1"], "vectors": ["1", "x1 +"]}"#).unwrap();
        match f.load() {
            Err(CliError::Parse { field, index, .. }) => assert_eq!((field, index), ("vectors", 1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn options_are_read() {
        let f = ProblemFile::from_json(
            r#"{"eliminants": ["t^2 - 1"], "options": {"subset_cap": 5, "run_oracle": true, "shift_override": [3]}}"#,
        )
        .unwrap();
        let loaded = f.load().unwrap();
        assert_eq!(loaded.options.subset_cap, 5);
        assert_eq!(loaded.options.shift_override, Some(vec![3]));
        assert!(loaded.run_oracle);
        assert!(matches!(loaded.problem.ideal, IdealInput::Eliminants(_)));
    }
}
