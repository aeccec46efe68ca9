//! Per-suite parameter schemas and their validation.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug)]
pub enum ParamKind {
    /// An integer in `min..=max`.
    Int { min: i64, max: i64 },
    /// An integer from a fixed list.
    OneOf(&'static [i64]),
    /// A word from a fixed list.
    Word(&'static [&'static str]),
}

#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub key: &'static str,
    pub kind: ParamKind,
    pub default: &'static str,
    pub help: &'static str,
}

impl ParamSpec {
    pub const fn int(key: &'static str, min: i64, max: i64, default: &'static str, help: &'static str) -> Self {
        Self { key, kind: ParamKind::Int { min, max }, default, help }
    }

    pub const fn one_of(key: &'static str, values: &'static [i64], default: &'static str, help: &'static str) -> Self {
        Self { key, kind: ParamKind::OneOf(values), default, help }
    }

    pub const fn word(key: &'static str, values: &'static [&'static str], default: &'static str, help: &'static str) -> Self {
        Self { key, kind: ParamKind::Word(values), default, help }
    }

    pub fn parse(&self, raw: &str) -> Result<ParamValue, CliError> {
        let bad = |why: String| CliError::Config(format!("parameter {}={raw}: {why}", self.key));
        match self.kind {
            ParamKind::Int { min, max } => {
                let v: i64 = raw.trim().parse().map_err(|_| bad("not an integer".into()))?;
                if v < min || v > max {
                    return Err(bad(format!("must lie in {min}..={max}")));
                }
                Ok(ParamValue::Int(v))
            }
            ParamKind::OneOf(values) => {
                let v: i64 = raw.trim().parse().map_err(|_| bad("not an integer".into()))?;
                if !values.contains(&v) {
                    return Err(bad(format!("must be one of {values:?}")));
                }
                Ok(ParamValue::Int(v))
            }
            ParamKind::Word(values) => {
                let v = raw.trim();
                if !values.contains(&v) {
                    return Err(bad(format!("must be one of {values:?}")));
                }
                Ok(ParamValue::Word(v.to_string()))
            }
        }
    }

    pub fn describe(&self) -> String {
        let range = match self.kind {
            ParamKind::Int { min, max } => format!("{min}..={max}"),
            ParamKind::OneOf(values) => format!("{values:?}"),
            ParamKind::Word(values) => values.join("|"),
        };
        format!("{} ({range}, default {}): {}", self.key, self.default, self.help)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Word(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Word(w) => write!(f, "{w}"),
        }
    }
}

/// Validated parameters of one run, seed included.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Params(pub BTreeMap<String, ParamValue>);

impl Params {
    /// Applies the schema: every given key must be declared, every value must
    /// parse, and undeclared keys fall back to their defaults.
    pub fn resolve(schema: &[ParamSpec], given: &[(String, String)], seed: u64) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for (key, raw) in given {
            let spec = schema
                .iter()
                .find(|s| s.key == key)
                .ok_or_else(|| CliError::Config(format!("unknown parameter {key}")))?;
            if map.insert(key.clone(), spec.parse(raw)?).is_some() {
                return Err(CliError::Config(format!("parameter {key} given twice")));
            }
        }
        for spec in schema {
            if !map.contains_key(spec.key) {
                map.insert(spec.key.to_string(), spec.parse(spec.default)?);
            }
        }
        map.insert("seed".into(), ParamValue::Int(seed as i64));
        Ok(Self(map))
    }

    pub fn int(&self, key: &str) -> i64 {
        match self.0.get(key) {
            Some(ParamValue::Int(v)) => *v,
            other => panic!("parameter {key} is not an integer: {other:?}"),
        }
    }

    pub fn usize(&self, key: &str) -> usize {
        usize::try_from(self.int(key)).unwrap_or_else(|_| panic!("parameter {key} is negative"))
    }

    pub fn word(&self, key: &str) -> &str {
        match self.0.get(key) {
            Some(ParamValue::Word(w)) => w,
            other => panic!("parameter {key} is not a word: {other:?}"),
        }
    }

    pub fn seed(&self) -> u64 {
        self.int("seed") as u64
    }
}

/// Splits `key=value`.
pub fn parse_assignment(s: &str) -> Result<(String, String), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got {s}"))?;
    if k.trim().is_empty() {
        return Err(format!("empty key in {s}"));
    }
    Ok((k.trim().to_string(), v.trim().to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SCHEMA: &[ParamSpec] = &[
        ParamSpec::int("n", 0, 3, "1", "dimension"),
        ParamSpec::one_of("l", &[2, 3, 5], "3", "prime"),
        ParamSpec::word("variant", &["proper", "all"], "proper", "ideal"),
    ];

    #[test]
    fn defaults_and_overrides() {
        let p = Params::resolve(SCHEMA, &[("n".into(), "2".into())], 7).unwrap();
        assert_eq!(p.int("n"), 2);
        assert_eq!(p.int("l"), 3);
        assert_eq!(p.word("variant"), "proper");
        assert_eq!(p.seed(), 7);
    }

    #[test]
    fn schema_violations() {
        for (k, v) in [("n", "4"), ("l", "4"), ("variant", "odd"), ("n", "x"), ("m", "1")] {
            assert!(Params::resolve(SCHEMA, &[(k.into(), v.into())], 0).is_err(), "{k}={v}");
        }
        let twice = [("n".to_string(), "1".to_string()), ("n".to_string(), "2".to_string())];
        assert!(Params::resolve(SCHEMA, &twice, 0).is_err());
    }

    #[test]
    fn assignments() {
        assert_eq!(parse_assignment("l = 3").unwrap(), ("l".into(), "3".into()));
        assert!(parse_assignment("l3").is_err());
        assert!(parse_assignment("=3").is_err());
    }
}
