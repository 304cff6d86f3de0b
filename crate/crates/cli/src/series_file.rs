//! JSON series files: `{"name": ..., "N": ..., "M": ..., "entries": [[n, m, "p/q"], ...]}`.

use std::path::Path;

use pade_core::algebra::parse_rational;
use pade_core::{BivSeries, Rational, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesFile {
    #[serde(default)]
    pub name: String,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "M")]
    pub m: usize,
    pub entries: Vec<(usize, usize, Value)>,
}

/// A coefficient literal; numbers are accepted alongside strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Text(String),
    Number(serde_json::Number),
}

impl Value {
    fn literal(&self) -> String {
        match self {
            Value::Text(s) => s.trim().to_string(),
            Value::Number(n) => n.to_string(),
        }
    }
}

/// Scalars the command line can read from files.
pub trait FileScalar: Scalar {
    const MODE: &'static str;

    fn parse_literal(s: &str) -> Option<Self>;
}

impl FileScalar for Rational {
    const MODE: &'static str = "exact";

    // decimals would smuggle in a rounding choice; only p/q and integers
    fn parse_literal(s: &str) -> Option<Self> {
        if s.contains(['.', 'e', 'E']) {
            return None;
        }
        parse_rational(s)
    }
}

impl FileScalar for f64 {
    const MODE: &'static str = "float";

    fn parse_literal(s: &str) -> Option<Self> {
        if let Some((p, q)) = s.split_once('/') {
            let (p, q): (f64, f64) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
            return (q != 0.0).then(|| p / q);
        }
        s.parse().ok().filter(|v: &f64| v.is_finite())
    }
}

impl SeriesFile {
    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    /// Pretty JSON with one entry per line.
    pub fn to_json(&self) -> String {
        let json = |v: &dyn erased::Json| v.json();
        let entries: Vec<String> = self.entries.iter().map(|e| format!("    {}", json(e))).collect();
        format!(
            "{{\n  \"name\": {},\n  \"N\": {},\n  \"M\": {},\n  \"entries\": [\n{}\n  ]\n}}",
            json(&self.name),
            self.n,
            self.m,
            entries.join(",\n")
        )
    }

    pub fn from_series<S: Scalar>(name: &str, series: &BivSeries<S>) -> Self {
        let mut entries = Vec::new();
        for (i, row) in series.rows().iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                entries.push((i, j, Value::Text(v.to_string())));
            }
        }
        SeriesFile { name: name.to_string(), n: series.order_x(), m: series.order_y(), entries }
    }

    pub fn to_series<S: FileScalar>(&self) -> CliResult<BivSeries<S>> {
        let mut grid: Vec<Vec<Option<S>>> = vec![vec![None; self.m + 1]; self.n + 1];
        for (i, j, v) in &self.entries {
            let (i, j) = (*i, *j);
            if i > self.n || j > self.m {
                return Err(CliError::Input(format!(
                    "entry ({i}, {j}) outside declared orders N = {}, M = {}",
                    self.n, self.m
                )));
            }
            let lit = v.literal();
            let value = S::parse_literal(&lit)
                .ok_or_else(|| CliError::Input(format!("entry ({i}, {j}): cannot parse {lit:?} in {} mode", S::MODE)))?;
            if grid[i][j].replace(value).is_some() {
                return Err(CliError::Input(format!("entry ({i}, {j}) appears twice")));
            }
        }
        let mut rows = Vec::with_capacity(self.n + 1);
        for (i, row) in grid.into_iter().enumerate() {
            let mut out = Vec::with_capacity(self.m + 1);
            for (j, v) in row.into_iter().enumerate() {
                out.push(v.ok_or_else(|| CliError::Input(format!("entry ({i}, {j}) is missing")))?);
            }
            rows.push(out);
        }
        Ok(BivSeries::new(rows)?)
    }
}

mod erased {
    pub trait Json {
        fn json(&self) -> String;
    }

    impl<T: serde::Serialize> Json for T {
        fn json(&self) -> String {
            serde_json::to_string(self).expect("value serializes")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn round_trip_exact() {
        let s = BivSeries::new(vec![vec![q(0, 1), q(1, 3)], vec![q(-7, 2), q(5, 1)], vec![q(1, 9), q(0, 1)]]).unwrap();
        let file = SeriesFile::from_series("t", &s);
        let back: SeriesFile = serde_json::from_str(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_series::<Rational>().unwrap(), s);
    }

    #[test]
    fn decimals_only_in_float_mode() {
        let file: SeriesFile =
            serde_json::from_str(r#"{"name": "d", "N": 1, "M": 0, "entries": [[0, 0, "0"], [1, 0, "0.5"]]}"#).unwrap();
        assert!(file.to_series::<Rational>().is_err());
        assert_eq!(file.to_series::<f64>().unwrap().at(1, 0), &0.5);
    }

    #[test]
    fn missing_and_duplicate_entries() {
        let missing: SeriesFile =
            serde_json::from_str(r#"{"name": "", "N": 1, "M": 0, "entries": [[0, 0, "0"]]}"#).unwrap();
        assert!(missing.to_series::<Rational>().unwrap_err().to_string().contains("missing"));
        let dup: SeriesFile =
            serde_json::from_str(r#"{"N": 0, "M": 0, "entries": [[0, 0, "0"], [0, 0, 0]]}"#).unwrap();
        assert!(dup.to_series::<Rational>().unwrap_err().to_string().contains("twice"));
    }

    #[test]
    fn nonzero_constant_rejected() {
        let f: SeriesFile = serde_json::from_str(r#"{"N": 0, "M": 0, "entries": [[0, 0, "1"]]}"#).unwrap();
        assert_eq!(f.to_series::<Rational>().unwrap_err().code(), 2);
    }
}
