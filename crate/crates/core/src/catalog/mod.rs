//! Registry of checkable identities and the verification runner.

mod ctx;
mod entries;
mod params;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::precision::{BoundKind, HpReal, PrecisionConfig, ValueWithError};

pub use params::{
    int, list, params, parse_value, ratio, render, validate, ParamKind, ParamSpec, ParamValue, Params,
};

/// Digits printed for values in reports.
const REPORT_DIGITS: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Theorem,
    Cited,
    Conjecture,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Theorem => "theorem",
            Status::Cited => "cited",
            Status::Conjecture => "conjecture",
        })
    }
}

/// Both sides of one identity instance.
pub struct Sides {
    pub lhs: ValueWithError,
    pub rhs: ValueWithError,
}

type Builder = fn(&Params, &PrecisionConfig) -> Result<Sides>;

/// One catalog entry.
pub struct Identity {
    pub id: &'static str,
    /// The identity as a formula, in plain text.
    pub anchor: &'static str,
    pub status: Status,
    pub params: Vec<ParamSpec>,
    pub default_tolerance: f64,
    /// Upper limit on series terms for this entry; `--max-terms` can lower it.
    pub series_terms: Option<u64>,
    grid: fn() -> Vec<Params>,
    sides: Builder,
}

impl Identity {
    /// The fixed default parameter grid.
    pub fn grid(&self) -> Vec<Params> {
        (self.grid)()
    }

    fn config(&self, cfg: &PrecisionConfig) -> PrecisionConfig {
        match self.series_terms {
            Some(n) => cfg.clone().with_max_terms(cfg.max_terms.min(n)),
            None => cfg.clone(),
        }
    }
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("status", &self.status)
            .field("default_tolerance", &self.default_tolerance)
            .finish_non_exhaustive()
    }
}

/// Outcome of one check. Values are decimal strings so that identical
/// configurations give byte-identical reports.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
    pub abs_diff: String,
    pub tolerance: String,
    pub bound: String,
    pub passed: bool,
    pub terms_used: u64,
    pub seconds: f64,
    #[serde(skip)]
    pub status: Status,
    #[serde(skip)]
    pub bound_kind: BoundKind,
    #[serde(skip)]
    pub abs_diff_f64: f64,
    #[serde(skip)]
    pub error: Option<String>,
}

impl VerificationReport {
    /// Whether this record can fail a run; conjectures only record agreement.
    pub fn counts(&self) -> bool {
        self.status != Status::Conjecture
    }
}

/// The full catalog, sorted by id.
pub fn catalog() -> &'static [Identity] {
    entries::all()
}

fn glob_match(pattern: &[u8], text: &[u8]) -> bool {
    match pattern.split_first() {
        None => text.is_empty(),
        Some((b'*', rest)) => (0..=text.len()).any(|i| glob_match(rest, &text[i..])),
        Some((c, rest)) => {
            text.split_first().is_some_and(|(t, trest)| c.eq_ignore_ascii_case(t) && glob_match(rest, trest))
        }
    }
}

/// Whether `id` matches `filter`: a `*` glob, otherwise a case-insensitive prefix.
pub fn matches_filter(id: &str, filter: &str) -> bool {
    if filter.contains('*') {
        glob_match(filter.as_bytes(), id.as_bytes())
    } else {
        id.to_ascii_lowercase().starts_with(&filter.to_ascii_lowercase())
    }
}

pub fn list_identities(filter: Option<&str>) -> Vec<&'static Identity> {
    catalog().iter().filter(|e| filter.is_none_or(|f| matches_filter(e.id, f))).collect()
}

pub fn find(id: &str) -> Result<&'static Identity> {
    catalog()
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Evaluates both sides of `id` at `p` and compares them.
pub fn verify(id: &str, p: &Params, cfg: &PrecisionConfig) -> Result<VerificationReport> {
    let entry = find(id)?;
    cfg.validate()?;
    let p = validate(&entry.params, p)?;
    let ecfg = entry.config(cfg);
    let start = Instant::now();
    let sides = (entry.sides)(&p, &ecfg)?;
    Ok(report(entry, p, &sides, cfg, start.elapsed().as_secs_f64()))
}

fn report(
    entry: &Identity,
    p: Params,
    sides: &Sides,
    cfg: &PrecisionConfig,
    seconds: f64,
) -> VerificationReport {
    let tol_f = cfg.tolerance.unwrap_or(entry.default_tolerance);
    let tol = HpReal::from_f64(tol_f, cfg.bits());
    let diff = (&sides.lhs.value - &sides.rhs.value).abs();
    let bound = &sides.lhs.bound + &sides.rhs.bound;
    let passed = diff <= tol.clone().max(bound.clone());
    VerificationReport {
        id: entry.id.to_string(),
        params: p,
        lhs: sides.lhs.value.to_decimal(REPORT_DIGITS),
        rhs: sides.rhs.value.to_decimal(REPORT_DIGITS),
        abs_diff: diff.to_sci(3),
        tolerance: format!("{tol_f:e}"),
        bound: bound.to_sci(3),
        passed,
        terms_used: sides.lhs.terms.max(sides.rhs.terms),
        seconds,
        status: entry.status,
        bound_kind: sides.lhs.kind.and(sides.rhs.kind),
        abs_diff_f64: diff.to_f64(),
        error: None,
    }
}

fn failed_report(entry: &Identity, p: Params, err: &Error, seconds: f64) -> VerificationReport {
    VerificationReport {
        id: entry.id.to_string(),
        params: p,
        lhs: String::new(),
        rhs: String::new(),
        abs_diff: String::new(),
        tolerance: format!("{:e}", entry.default_tolerance),
        bound: String::new(),
        passed: false,
        terms_used: 0,
        seconds,
        status: entry.status,
        bound_kind: BoundKind::Heuristic,
        abs_diff_f64: f64::INFINITY,
        error: Some(err.to_string()),
    }
}

/// Runs every matching entry over its default grid. Work is spread across
/// the rayon pool; reports come back in catalog order.
pub fn run_suite(filter: Option<&str>, cfg: &PrecisionConfig) -> Vec<VerificationReport> {
    let jobs: Vec<(&Identity, Params)> =
        list_identities(filter).into_iter().flat_map(|e| e.grid().into_iter().map(move |p| (e, p))).collect();
    jobs.into_par_iter()
        .map(|(entry, p)| {
            let start = Instant::now();
            let ecfg = entry.config(cfg);
            match (entry.sides)(&p, &ecfg) {
                Ok(s) => report(entry, p, &s, cfg, start.elapsed().as_secs_f64()),
                Err(e) => failed_report(entry, p, &e, start.elapsed().as_secs_f64()),
            }
        })
        .collect()
}

/// Largest observed `|LHS - RHS|` per conjecture entry.
pub fn conjecture_summary(reports: &[VerificationReport]) -> Vec<(String, f64)> {
    let mut out: Vec<(String, f64)> = Vec::new();
    for r in reports.iter().filter(|r| !r.counts()) {
        match out.iter_mut().find(|(id, _)| *id == r.id) {
            Some((_, m)) => *m = m.max(r.abs_diff_f64),
            None => out.push((r.id.clone(), r.abs_diff_f64)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_sorted_and_unique() {
        let ids: Vec<&str> = catalog().iter().map(|e| e.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn filters() {
        let ids: Vec<&str> = list_identities(Some("EQ3")).iter().map(|e| e.id).collect();
        assert_eq!(ids, ["EQ3.4", "EQ3.5"]);
        assert_eq!(list_identities(Some("GOLD-*")).len(), 2);
        assert!(list_identities(Some("NOTHING")).is_empty());
        assert!(glob_match(b"*-ONES", b"STAR-2-ONES"));
    }

    #[test]
    fn every_default_grid_validates() {
        for e in catalog() {
            let grid = e.grid();
            assert!(!grid.is_empty(), "{} has an empty grid", e.id);
            for p in grid {
                validate(&e.params, &p).unwrap_or_else(|err| panic!("{}: {err}", e.id));
            }
        }
    }

    #[test]
    fn unknown_id() {
        let cfg = PrecisionConfig::default();
        assert!(matches!(verify("NOPE", &Params::new(), &cfg), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn star_two_ones_instance() {
        let cfg = PrecisionConfig::default();
        let r = verify("STAR-2-ONES", &params([("m", int(3))]), &cfg).unwrap();
        assert!(r.passed);
        let err = verify("STAR-2-ONES", &params([("m", int(99))]), &cfg).unwrap_err();
        assert!(matches!(err, Error::ParamRange { ref name, .. } if name == "m"));
    }
}
