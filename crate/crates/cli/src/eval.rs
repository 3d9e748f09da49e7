//! Turns parsed expressions into output records, consulting the cache for numbers.

use mzvlab::index_algebra::{hoffman_dual, star_expand, stuffle};
use mzvlab::precision::fundamental_constants;
use mzvlab::series::hurwitz_mzv;
use mzvlab::{values, HpReal, PrecisionConfig, ValueWithError};
use serde::Serialize;

use crate::cache::{Cache, CacheEntry};
use crate::expr::Expression;
use crate::CliError;

/// One line of `eval` or `constants` output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub expr: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub digits: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
}

impl Record {
    pub const FIELDS: [&'static str; 7] =
        ["expr", "value", "bound", "bound_kind", "terms", "digits", "result"];

    fn numeric(expr: String, value: String, bound: String, kind: String, terms: u64, digits: u32) -> Self {
        Record {
            expr,
            value: Some(value),
            bound: Some(bound),
            bound_kind: Some(kind),
            terms: Some(terms),
            digits: Some(digits),
            result: None,
        }
    }

    fn formal(expr: String, result: String) -> Self {
        Record {
            expr,
            value: None,
            bound: None,
            bound_kind: None,
            terms: None,
            digits: None,
            result: Some(result),
        }
    }

    pub fn row(&self) -> Vec<String> {
        let s = |o: &Option<String>| o.clone().unwrap_or_default();
        vec![
            self.expr.clone(),
            s(&self.value),
            s(&self.bound),
            s(&self.bound_kind),
            self.terms.map(|t| t.to_string()).unwrap_or_default(),
            self.digits.map(|d| d.to_string()).unwrap_or_default(),
            s(&self.result),
        ]
    }
}

/// Cache key for the settings that can change a value besides the precision.
pub fn config_key(cfg: &PrecisionConfig) -> String {
    format!("backend={};max_terms={}", format!("{:?}", cfg.backend).to_lowercase(), cfg.max_terms)
}

fn compute(e: &Expression, cfg: &PrecisionConfig) -> mzvlab::Result<ValueWithError> {
    match e {
        Expression::Zeta(k) => values::zeta(k, cfg),
        Expression::ZetaStar(k) => values::zeta_star(k, cfg),
        Expression::AZeta(s) => values::azeta(s, cfg),
        Expression::AZetaStar(s) => values::azeta_star(s, cfg),
        Expression::Li(k, x) => values::li(k, &cfg.rational(x), cfg),
        Expression::Ky(k, l) => values::ky(k, l, cfg),
        Expression::ZbStar(k) => values::zeta_binomial_star(k, cfg),
        Expression::Hz(k, a) => hurwitz_mzv(k, &cfg.rational(a), cfg),
        Expression::Dual(_) | Expression::Stuffle(..) | Expression::StarExpand(_) => {
            unreachable!("formal expressions are not evaluated numerically")
        }
    }
}

fn render(v: &HpReal, digits: u32) -> String {
    v.to_decimal(digits as usize)
}

/// Evaluates `e`, reusing a cached value computed at the same or higher precision.
pub fn evaluate(
    e: &Expression,
    cfg: &PrecisionConfig,
    cache: Option<&mut Cache>,
) -> Result<Record, CliError> {
    let expr = e.to_string();
    match e {
        Expression::Dual(k) => return Ok(Record::formal(expr, hoffman_dual(k)?.to_string())),
        Expression::Stuffle(a, b) => return Ok(Record::formal(expr, stuffle(a, b).to_string())),
        Expression::StarExpand(k) => return Ok(Record::formal(expr, star_expand(k).to_string())),
        _ => {}
    }
    let config = config_key(cfg);
    if let Some(hit) = cache.as_deref().and_then(|c| c.lookup(&expr, &config, cfg.digits)) {
        let v = HpReal::parse(&hit.value, cfg.bits())?;
        let value = render(&v, cfg.digits);
        return Ok(Record::numeric(
            expr,
            value,
            hit.bound.clone(),
            hit.bound_kind.clone(),
            hit.terms,
            cfg.digits,
        ));
    }
    let v = compute(e, cfg)?;
    let record = Record::numeric(
        expr.clone(),
        render(&v.value, cfg.digits),
        v.bound.to_sci(3),
        v.kind.to_string(),
        v.terms,
        cfg.digits,
    );
    if let Some(c) = cache {
        c.insert(CacheEntry::new(expr, config, cfg.digits, &record))?;
    }
    Ok(record)
}

/// `pi` and `log 2` at working precision, then the constants the worked
/// examples rely on.
pub fn constants(cfg: &PrecisionConfig, mut cache: Option<&mut Cache>) -> Result<Vec<Record>, CliError> {
    let c = fundamental_constants(cfg);
    let mut out = vec![
        Record::numeric("pi".into(), render(&c.pi, cfg.digits), "0".into(), "rigorous".into(), 0, cfg.digits),
        Record::numeric(
            "log2".into(),
            render(&c.log2, cfg.digits),
            "0".into(),
            "rigorous".into(),
            0,
            cfg.digits,
        ),
    ];
    for text in ["zeta(2)", "zeta(3)", "zeta(4)", "zeta(5)", "li(4; 1/2)", "zbstar(1)"] {
        let e: Expression = text.parse()?;
        out.push(evaluate(&e, cfg, cache.as_deref_mut())?);
    }
    Ok(out)
}
