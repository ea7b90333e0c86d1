//! Instance file parser.
//!
//! A file declares one semigroup, named ideals, named module presentations,
//! bounds, and check selections, one declaration per line:
//!
//! ```text
//! # comments and blank lines are ignored
//! S = <3,5>
//! I = [3,5]
//! C = conductor
//! M = module ideal I
//! K = module quotient I
//! W = module syzygy 1 M
//! jmax = 3
//! degree_bound = 60
//! truncate = 9
//! check lemma-43 M 1
//! check prop-trentry I
//! ```
//!
//! Ideal expressions are exponent lists `[8,9,10]` or the keywords
//! `conductor`, `canonical`, `maxideal`, `unit`, resolved against `S`.

use std::collections::BTreeMap;
use std::sync::Arc;

use sgring::graded::{minimal_resolution, presentation_of_ideal, GradedRing, Presentation};
use sgring::ideal::MonomialFractionalIdeal as Ideal;
use sgring::semigroup::NumericalSemigroup;

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, Clone)]
pub enum ModuleSpec {
    Ideal(String),
    Quotient(String),
    Syzygy(usize, String),
}

#[derive(Debug, Clone)]
pub struct CheckLine {
    pub line: usize,
    pub statement: String,
    pub args: Vec<String>,
}

#[derive(Debug)]
pub struct InstanceFile {
    pub semigroup: Arc<NumericalSemigroup>,
    pub ideals: BTreeMap<String, Ideal>,
    pub modules: BTreeMap<String, ModuleSpec>,
    pub jmax: Option<usize>,
    pub degree_bound: Option<i64>,
    pub truncate: Option<u64>,
    pub checks: Vec<CheckLine>,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<InstanceFile, ParseError> {
    let mut semigroup: Option<Arc<NumericalSemigroup>> = None;
    let mut ideal_exprs: Vec<(usize, String, String)> = Vec::new();
    let mut modules: BTreeMap<String, ModuleSpec> = BTreeMap::new();
    let mut jmax = None;
    let mut degree_bound = None;
    let mut truncate = None;
    let mut checks = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("check ") {
            let mut parts = rest.split_whitespace();
            let statement = parts
                .next()
                .ok_or_else(|| err(lineno, "check needs a statement id"))?
                .to_string();
            checks.push(CheckLine {
                line: lineno,
                statement,
                args: parts.map(str::to_string).collect(),
            });
            continue;
        }
        let Some((lhs, rhs)) = line.split_once('=') else {
            return Err(err(lineno, format!("cannot parse `{line}`")));
        };
        let name = lhs.trim();
        let value = rhs.trim();
        match name {
            "S" => {
                let inner = value
                    .strip_prefix('<')
                    .and_then(|v| v.strip_suffix('>'))
                    .ok_or_else(|| err(lineno, "semigroup syntax is S = <a,b,...>"))?;
                let gens: Vec<u64> = inner
                    .split(',')
                    .map(|t| t.trim().parse::<u64>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| err(lineno, format!("bad generator: {e}")))?;
                let s = NumericalSemigroup::from_generators(&gens)
                    .map_err(|e| err(lineno, e.to_string()))?;
                semigroup = Some(Arc::new(s));
            }
            "jmax" => {
                jmax = Some(
                    value
                        .parse()
                        .map_err(|e| err(lineno, format!("bad jmax: {e}")))?,
                );
            }
            "degree_bound" => {
                degree_bound = Some(
                    value
                        .parse()
                        .map_err(|e| err(lineno, format!("bad degree_bound: {e}")))?,
                );
            }
            "truncate" => {
                truncate = Some(
                    value
                        .parse()
                        .map_err(|e| err(lineno, format!("bad truncate: {e}")))?,
                );
            }
            _ => {
                if !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(err(lineno, format!("bad name `{name}`")));
                }
                if let Some(rest) = value.strip_prefix("module ") {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    let spec = match parts.as_slice() {
                        ["ideal", i] => ModuleSpec::Ideal(i.to_string()),
                        ["quotient", i] => ModuleSpec::Quotient(i.to_string()),
                        ["syzygy", j, m] => ModuleSpec::Syzygy(
                            j.parse()
                                .map_err(|e| err(lineno, format!("bad syzygy index: {e}")))?,
                            m.to_string(),
                        ),
                        _ => {
                            return Err(err(
                                lineno,
                                "module forms: `module ideal I`, `module quotient I`, `module syzygy j M`",
                            ))
                        }
                    };
                    modules.insert(name.to_string(), spec);
                } else {
                    ideal_exprs.push((lineno, name.to_string(), value.to_string()));
                }
            }
        }
    }

    let semigroup = semigroup.ok_or_else(|| err(0, "no semigroup declared (S = <...>)"))?;
    if jmax == Some(0) {
        return Err(err(0, "jmax must be at least 1"));
    }
    if matches!(degree_bound, Some(d) if d <= 0) {
        return Err(err(0, "degree_bound must be positive"));
    }
    if truncate == Some(0) {
        return Err(err(0, "truncate must be at least 1"));
    }
    let mut ideals = BTreeMap::new();
    for (lineno, name, expr) in ideal_exprs {
        let ideal = parse_ideal_expr(&semigroup, &expr).map_err(|m| err(lineno, m))?;
        ideals.insert(name, ideal);
    }
    // Closed-name check: every module reference must resolve.
    for (name, spec) in &modules {
        let target_ok = match spec {
            ModuleSpec::Ideal(i) | ModuleSpec::Quotient(i) => ideals.contains_key(i),
            ModuleSpec::Syzygy(_, m) => modules.contains_key(m),
        };
        if !target_ok {
            return Err(err(
                0,
                format!("module `{name}` references an unknown name"),
            ));
        }
    }
    Ok(InstanceFile {
        semigroup,
        ideals,
        modules,
        jmax,
        degree_bound,
        truncate,
        checks,
    })
}

pub fn parse_ideal_expr(s: &Arc<NumericalSemigroup>, expr: &str) -> Result<Ideal, String> {
    match expr.trim() {
        "conductor" => Ok(Ideal::conductor(s.clone())),
        "canonical" => Ok(Ideal::canonical(s.clone())),
        "maxideal" => Ok(Ideal::maximal(s.clone())),
        "unit" => Ok(Ideal::unit(s.clone())),
        other => {
            let inner = other
                .strip_prefix('[')
                .and_then(|v| v.strip_suffix(']'))
                .ok_or_else(|| format!("cannot parse ideal expression `{other}`"))?;
            if inner.trim().is_empty() {
                return Ok(Ideal::zero(s.clone()));
            }
            let exps: Vec<i64> = inner
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|e| format!("bad exponent: {e}"))?;
            Ok(Ideal::new(s.clone(), &exps))
        }
    }
}

impl InstanceFile {
    pub fn ring(&self) -> GradedRing {
        match self.truncate {
            None => GradedRing::new(self.semigroup.clone()),
            Some(n) => GradedRing::truncated(self.semigroup.clone(), n),
        }
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal, String> {
        self.ideals
            .get(name)
            .ok_or_else(|| format!("unknown ideal `{name}`"))
    }

    /// Builds the named module's presentation, computing syzygies as needed.
    pub fn presentation(&self, name: &str) -> Result<Presentation, String> {
        let spec = self
            .modules
            .get(name)
            .ok_or_else(|| format!("unknown module `{name}`"))?;
        let ring = self.ring();
        match spec {
            ModuleSpec::Ideal(i) => {
                let ideal = self.ideal(i)?;
                if ideal.is_unit() {
                    return Ok(Presentation::of_ring(ring));
                }
                presentation_of_ideal(&ring, ideal, self.degree_bound).map_err(|e| e.to_string())
            }
            ModuleSpec::Quotient(i) => {
                Presentation::of_quotient(ring, self.ideal(i)?).map_err(|e| e.to_string())
            }
            ModuleSpec::Syzygy(j, m) => {
                let inner = self.presentation(m)?;
                let res = minimal_resolution(&inner, j + 1, self.degree_bound)
                    .map_err(|e| e.to_string())?;
                Ok(res.syzygy_presentation(*j))
            }
        }
    }
}
