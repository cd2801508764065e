//! Text selectors for transformable functions: `family:key=value,...`.
//!
//! Lists inside a value are separated by `/`, and a parameter of the form
//! `q^t` stands for the power `q^t` of the base.

use std::collections::BTreeMap;

use qnatural::special::{BesselKind, HyperParams, QParam, TrigFamily, TrigFn};
use qnatural::transform::{CoefficientRule, Family, FunctionSpec, PowerSeriesSpec};

use crate::CliError;

/// Family names accepted by [`parse`].
pub const FAMILIES: [&str; 7] = [
    "monomial", "series", "eexp", "Eexp", "trig", "bessel", "hyper",
];

struct Fields<'a> {
    family: &'a str,
    map: BTreeMap<&'a str, &'a str>,
}

impl<'a> Fields<'a> {
    fn take(&mut self, key: &str) -> Option<&'a str> {
        self.map.remove(key)
    }

    fn real(&mut self, key: &str) -> Result<Option<f64>, CliError> {
        self.take(key).map(|s| number(key, s)).transpose()
    }

    fn real_or(&mut self, key: &str, default: f64) -> Result<f64, CliError> {
        Ok(self.real(key)?.unwrap_or(default))
    }

    fn required(&mut self, key: &str) -> Result<f64, CliError> {
        self.real(key)?
            .ok_or_else(|| usage(format!("'{}' needs the parameter '{key}'", self.family)))
    }

    fn finish(self) -> Result<(), CliError> {
        match self.map.keys().next() {
            Some(k) => Err(usage(format!(
                "unknown parameter '{k}' for '{}'",
                self.family
            ))),
            None => Ok(()),
        }
    }
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

fn number(key: &str, s: &str) -> Result<f64, CliError> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| usage(format!("parameter '{key}' is not a number: '{s}'")))
}

fn param(s: &str) -> Result<QParam, CliError> {
    match s.trim().strip_prefix("q^") {
        Some(t) => Ok(QParam::QPower(number("q^", t)?)),
        None => Ok(QParam::real(number("parameter", s)?)),
    }
}

fn params(s: Option<&str>) -> Result<Vec<QParam>, CliError> {
    match s {
        None | Some("") => Ok(Vec::new()),
        Some(s) => s.split('/').map(param).collect(),
    }
}

fn hyper_params(f: &mut Fields) -> Result<HyperParams, CliError> {
    let num = params(f.take("num"))?;
    let den = params(f.take("den"))?;
    match f.take("variant").unwrap_or("phi") {
        "phi" => {
            if f.take("k").is_some() {
                return Err(usage("'k' applies only to variant=Phi".into()));
            }
            Ok(HyperParams::phi(num, den))
        }
        "Phi" => {
            let k = f.real_or("k", 1.0)?;
            if k < 0.0 || k.fract() != 0.0 {
                return Err(usage(format!(
                    "'k' must be a non-negative integer, got {k}"
                )));
            }
            Ok(HyperParams::big_phi(num, den, k as u32))
        }
        other => Err(usage(format!(
            "unknown hypergeometric variant '{other}' (phi or Phi)"
        ))),
    }
}

fn rule(f: &mut Fields) -> Result<CoefficientRule, CliError> {
    let name = f
        .take("rule")
        .ok_or_else(|| usage("'series' needs the parameter 'rule'".into()))?;
    Ok(match name {
        "unit" => CoefficientRule::Unit,
        "inverse_factorial" => CoefficientRule::InverseFactorial,
        "geometric" => CoefficientRule::Geometric {
            ratio: f.required("ratio")?,
        },
        "eq" => CoefficientRule::SmallQExp {
            a: f.required("a")?,
        },
        "Eq" => CoefficientRule::BigQExp {
            a: f.required("a")?,
        },
        "bessel" => CoefficientRule::QBessel {
            mu: f.required("mu")?,
            a: f.required("a")?,
        },
        "hyper" => CoefficientRule::Hyper {
            params: hyper_params(f)?,
            a: f.required("a")?,
        },
        "explicit" => {
            let coeffs = f
                .take("coeffs")
                .ok_or_else(|| usage("rule 'explicit' needs 'coeffs'".into()))?;
            CoefficientRule::Explicit {
                coeffs: coeffs
                    .split('/')
                    .map(|c| number("coeffs", c))
                    .collect::<Result<_, _>>()?,
            }
        }
        other => return Err(usage(format!("unknown coefficient rule '{other}'"))),
    })
}

/// Parses a selector such as `eexp:a=0.5` or `trig:family=upper,fn=cos,a=0.2`.
pub fn parse(text: &str) -> Result<FunctionSpec, CliError> {
    let (family, rest) = text.split_once(':').unwrap_or((text, ""));
    let family = family.trim();
    let mut map = BTreeMap::new();
    for pair in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| usage(format!("expected key=value, got '{pair}'")))?;
        if map.insert(k.trim(), v.trim()).is_some() {
            return Err(usage(format!("parameter '{}' given twice", k.trim())));
        }
    }
    let mut f = Fields { family, map };
    let alpha = f.real("alpha")?;
    let fam = match family {
        "monomial" => Family::Monomial {
            power: f.real_or("n", 0.0)?,
        },
        "series" => {
            let rule = rule(&mut f)?;
            let max_index = f.real("max_index")?;
            match max_index {
                Some(n) if n >= 0.0 && n.fract() == 0.0 => {
                    Family::PowerSeries(PowerSeriesSpec::truncated(rule, n as usize))
                }
                Some(n) => {
                    return Err(usage(format!(
                        "max_index must be a non-negative integer, got {n}"
                    )))
                }
                None => Family::PowerSeries(PowerSeriesSpec::new(rule)),
            }
        }
        "eexp" => Family::SmallExp {
            a: f.required("a")?,
        },
        "Eexp" => Family::BigExp {
            a: f.required("a")?,
        },
        "trig" => {
            let family = match f.take("family").unwrap_or("lower") {
                "lower" => TrigFamily::Lower,
                "upper" => TrigFamily::Upper,
                other => {
                    return Err(usage(format!(
                        "unknown trig family '{other}' (lower or upper)"
                    )))
                }
            };
            let func = match f.take("fn") {
                Some("sin") => TrigFn::Sin,
                Some("cos") => TrigFn::Cos,
                Some("sinh") => TrigFn::Sinh,
                Some("cosh") => TrigFn::Cosh,
                Some(other) => return Err(usage(format!("unknown trig function '{other}'"))),
                None => return Err(usage("'trig' needs the parameter 'fn'".into())),
            };
            Family::Trig {
                family,
                func,
                a: f.required("a")?,
            }
        }
        "bessel" => {
            let kind = f.real_or("kind", 1.0)?;
            let kind = (kind.fract() == 0.0 && (1.0..=3.0).contains(&kind))
                .then(|| BesselKind::from_index(kind as u8))
                .flatten()
                .ok_or_else(|| usage(format!("Bessel kind must be 1, 2 or 3, got {kind}")))?;
            Family::Bessel {
                kind,
                order: f.real_or("order", 0.0)?,
                a: f.required("a")?,
            }
        }
        "hyper" => Family::Hyper {
            params: hyper_params(&mut f)?,
            a: f.required("a")?,
        },
        other => {
            return Err(usage(format!(
                "unknown function family '{other}' (one of {})",
                FAMILIES.join(", ")
            )))
        }
    };
    f.finish()?;
    let spec = match alpha {
        Some(a) => FunctionSpec::with_prefactor(fam, a),
        None => FunctionSpec::new(fam),
    };
    spec.validate().map_err(|e| usage(e.to_string()))?;
    Ok(spec)
}
