use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::index_algebra::{Index, Rational};

/// A resolved parameter value.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    Int(i64),
    List(Vec<i64>),
    Ratio(Rational),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::List(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            ParamValue::Ratio(q) => write!(f, "{q}"),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(v) => s.serialize_i64(*v),
            ParamValue::List(v) => {
                let mut seq = s.serialize_seq(Some(v.len()))?;
                for x in v {
                    seq.serialize_element(x)?;
                }
                seq.end()
            }
            ParamValue::Ratio(q) => s.serialize_str(&q.to_string()),
        }
    }
}

/// Named parameters of one identity instance.
pub type Params = BTreeMap<String, ParamValue>;

/// Builds a parameter map from `(name, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, ParamValue); N]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn int(v: i64) -> ParamValue {
    ParamValue::Int(v)
}

pub fn list(v: &[i64]) -> ParamValue {
    ParamValue::List(v.to_vec())
}

pub fn ratio(n: i64, d: i64) -> ParamValue {
    ParamValue::Ratio(Rational::new(BigInt::from(n), BigInt::from(d)))
}

/// Renders parameters compactly, e.g. `m=(1,2);p=2`.
pub fn render(p: &Params) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

/// Accepted shape and range of one parameter.
#[derive(Clone, Copy, Debug)]
pub enum ParamKind {
    Int {
        min: i64,
        max: i64,
    },
    List {
        min_len: usize,
        max_len: usize,
        min: i64,
        max: i64,
    },
    /// Rational strictly inside `(min, max)` unless the bound is marked inclusive.
    Ratio {
        min: f64,
        max: f64,
        inclusive: bool,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub optional: bool,
}

impl ParamSpec {
    pub const fn int(name: &'static str, min: i64, max: i64) -> Self {
        ParamSpec { name, kind: ParamKind::Int { min, max }, optional: false }
    }

    pub const fn list(name: &'static str, min_len: usize, max_len: usize, min: i64, max: i64) -> Self {
        ParamSpec { name, kind: ParamKind::List { min_len, max_len, min, max }, optional: false }
    }

    pub const fn ratio(name: &'static str, min: f64, max: f64, inclusive: bool) -> Self {
        ParamSpec { name, kind: ParamKind::Ratio { min, max, inclusive }, optional: false }
    }

    pub const fn optional(mut self) -> Self {
        self.optional = true;
        self
    }

    pub fn describe(&self) -> String {
        let body = match self.kind {
            ParamKind::Int { min, max } => format!("integer in [{min}, {max}]"),
            ParamKind::List { min_len, max_len, min, max } => {
                format!("list of {min_len}..={max_len} integers in [{min}, {max}]")
            }
            ParamKind::Ratio { min, max, inclusive } => {
                let (l, r) = if inclusive { ('[', ']') } else { ('(', ')') };
                format!("rational in {l}{min}, {max}{r}")
            }
        };
        if self.optional {
            format!("{}: {body} (optional)", self.name)
        } else {
            format!("{}: {body}", self.name)
        }
    }

    fn check(&self, v: &ParamValue) -> Result<()> {
        let range = |detail: String| Error::ParamRange { name: self.name.to_string(), detail };
        match (self.kind, v) {
            (ParamKind::Int { min, max }, ParamValue::Int(x)) => {
                if *x < min || *x > max {
                    return Err(range(format!("{x} not in [{min}, {max}]")));
                }
            }
            (ParamKind::List { min_len, max_len, min, max }, ParamValue::List(xs)) => {
                if xs.len() < min_len || xs.len() > max_len {
                    return Err(range(format!("length {} not in [{min_len}, {max_len}]", xs.len())));
                }
                if let Some(x) = xs.iter().find(|&&x| x < min || x > max) {
                    return Err(range(format!("entry {x} not in [{min}, {max}]")));
                }
            }
            (ParamKind::List { .. }, ParamValue::Int(x)) => {
                return self.check(&ParamValue::List(vec![*x]));
            }
            (ParamKind::Ratio { min, max, inclusive }, ParamValue::Ratio(q)) => {
                let f = ratio_to_f64(q);
                let ok = if inclusive { f >= min && f <= max } else { f > min && f < max };
                if !ok {
                    return Err(range(format!("{q} outside the allowed interval")));
                }
            }
            (ParamKind::Ratio { .. }, ParamValue::Int(x)) => {
                return self.check(&ParamValue::Ratio(Rational::from_integer(BigInt::from(*x))));
            }
            (_, other) => return Err(range(format!("value {other} has the wrong shape"))),
        }
        Ok(())
    }
}

fn ratio_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Validates `p` against `specs`, normalizing scalar-for-list and
/// integer-for-rational values.
pub fn validate(specs: &[ParamSpec], p: &Params) -> Result<Params> {
    let mut out = Params::new();
    for spec in specs {
        match p.get(spec.name) {
            Some(v) => {
                spec.check(v)?;
                let v = match (spec.kind, v) {
                    (ParamKind::List { .. }, ParamValue::Int(x)) => ParamValue::List(vec![*x]),
                    (ParamKind::Ratio { .. }, ParamValue::Int(x)) => {
                        ParamValue::Ratio(Rational::from_integer(BigInt::from(*x)))
                    }
                    _ => v.clone(),
                };
                out.insert(spec.name.to_string(), v);
            }
            None if spec.optional => {}
            None => return Err(Error::ParamRange { name: spec.name.to_string(), detail: "missing".into() }),
        }
    }
    if let Some(extra) = p.keys().find(|k| !specs.iter().any(|s| s.name == k.as_str())) {
        return Err(Error::ParamRange {
            name: extra.clone(),
            detail: "not a parameter of this identity".into(),
        });
    }
    Ok(out)
}

/// Parses a command-line value: `3`, `1,2,1`, `(1,2)`, or `1/2`.
pub fn parse_value(text: &str) -> Result<ParamValue> {
    let t = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
    let bad = || Error::Syntax { offset: 0, message: format!("cannot parse parameter value '{text}'") };
    if t.contains('/') {
        let (a, b) = t.split_once('/').ok_or_else(bad)?;
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok(ParamValue::Ratio(Rational::new(BigInt::from(a), BigInt::from(b))));
    }
    if t.contains(',') || text.trim().starts_with('(') {
        if t.is_empty() {
            return Ok(ParamValue::List(Vec::new()));
        }
        let xs =
            t.split(',').map(|s| s.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
        return Ok(ParamValue::List(xs));
    }
    t.parse::<i64>().map(ParamValue::Int).map_err(|_| bad())
}

/// Typed accessors used by the identity builders after validation.
pub(crate) trait ParamsExt {
    fn int(&self, name: &str) -> i64;
    fn uint(&self, name: &str) -> u32 {
        self.int(name) as u32
    }
    fn list(&self, name: &str) -> Vec<u32>;
    fn index(&self, name: &str) -> Index {
        Index::new(self.list(name)).expect("validated positive entries")
    }
    fn ratio(&self, name: &str) -> Rational;
}

impl ParamsExt for Params {
    fn int(&self, name: &str) -> i64 {
        match self.get(name) {
            Some(ParamValue::Int(v)) => *v,
            other => panic!("parameter {name} is not an integer: {other:?}"),
        }
    }

    fn list(&self, name: &str) -> Vec<u32> {
        match self.get(name) {
            Some(ParamValue::List(v)) => v.iter().map(|&x| x as u32).collect(),
            other => panic!("parameter {name} is not a list: {other:?}"),
        }
    }

    fn ratio(&self, name: &str) -> Rational {
        match self.get(name) {
            Some(ParamValue::Ratio(q)) => q.clone(),
            other => panic!("parameter {name} is not a rational: {other:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_values() {
        assert_eq!(parse_value("3").unwrap(), int(3));
        assert_eq!(parse_value("1,2").unwrap(), list(&[1, 2]));
        assert_eq!(parse_value("(2)").unwrap(), list(&[2]));
        assert_eq!(parse_value("1/2").unwrap(), ratio(1, 2));
        assert!(parse_value("x").is_err());
    }

    #[test]
    fn validation_names_the_range() {
        let specs = [ParamSpec::int("m", 0, 5)];
        let err = validate(&specs, &params([("m", int(9))])).unwrap_err();
        assert!(matches!(err, Error::ParamRange { ref name, .. } if name == "m"));
        let err = validate(&specs, &Params::new()).unwrap_err();
        assert!(err.to_string().contains("missing"));
        let specs = [ParamSpec::list("m", 1, 3, 0, 2)];
        let ok = validate(&specs, &params([("m", int(2))])).unwrap();
        assert_eq!(ok["m"], list(&[2]));
    }
}
