//! Parsing of the textual system description shared by all subcommands.

use std::str::FromStr;

use num_traits::Zero;
use salem_core::{BarredSystem, FlipSet, ProbVector, Rational};

use crate::CliError;

/// `--p` and `--flips` as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemConfig {
    pub p: String,
    pub flips: String,
}

impl SystemConfig {
    pub fn new(p: impl Into<String>, flips: impl Into<String>) -> Self {
        SystemConfig {
            p: p.into(),
            flips: flips.into(),
        }
    }

    pub fn prob_vector(&self) -> Result<ProbVector, CliError> {
        let mut weights = Vec::new();
        for (column, token) in split_columns(&self.p, ',', 1) {
            weights.push(parse_rational_at(token, "--p", column)?);
        }
        ProbVector::new(weights).map_err(|e| CliError::parse("--p", 1, e.to_string()))
    }

    pub fn flip_set(&self) -> Result<FlipSet, CliError> {
        parse_flips(&self.flips)
    }

    pub fn system(&self) -> Result<BarredSystem, CliError> {
        Ok(BarredSystem::new(self.prob_vector()?, self.flip_set()?))
    }
}

/// Pieces of `text` split on `sep`, each with its 1-based column (offset by
/// `start - 1`). Surrounding whitespace is dropped from each piece.
fn split_columns(text: &str, sep: char, start: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(sep) {
        let lead = piece.len() - piece.trim_start().len();
        out.push((start + offset + lead, piece.trim()));
        offset += piece.len() + sep.len_utf8();
    }
    out
}

/// Parses `n/d`, an integer, or a finite decimal such as `0.25`, exactly.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("expected a number".into());
    }
    if let Some((int, frac)) = text.split_once('.') {
        let negative = int.starts_with('-');
        let int = int.trim_start_matches(['-', '+']);
        let digits_ok = |s: &str| s.chars().all(|c| c.is_ascii_digit());
        if !digits_ok(int) || !digits_ok(frac) || (int.is_empty() && frac.is_empty()) {
            return Err(format!("invalid decimal `{text}`"));
        }
        let numer = format!("{int}{frac}");
        let denom = format!("1{}", "0".repeat(frac.len()));
        let value = Rational::from_str(&format!("{numer}/{denom}")).map_err(|e| e.to_string())?;
        return Ok(if negative { -value } else { value });
    }
    let value = Rational::from_str(text).map_err(|_| format!("invalid rational `{text}`"))?;
    Ok(value)
}

fn parse_rational_at(text: &str, flag: &'static str, column: usize) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|msg| CliError::parse(flag, column, msg))
}

/// Parses a rational flag value such as `--x 7/20`.
pub fn parse_rational_flag(text: &str, flag: &'static str) -> Result<Rational, CliError> {
    let lead = text.len() - text.trim_start().len();
    parse_rational_at(text, flag, lead + 1)
}

/// Parses a positive tolerance.
pub fn parse_tolerance(text: &str) -> Result<Rational, CliError> {
    let tol = parse_rational_flag(text, "--tol")?;
    if tol <= Rational::zero() {
        return Err(CliError::parse("--tol", 1, "tolerance must be positive"));
    }
    Ok(tol)
}

/// `none`, `all`, `even`, `finite:2,5` or `mask:<preperiod>;<period>` with
/// the two parts written as strings of `0` and `1`.
pub fn parse_flips(text: &str) -> Result<FlipSet, CliError> {
    let err = |column: usize, msg: String| CliError::parse("--flips", column, msg);
    let trimmed = text.trim();
    let start = text.len() - text.trim_start().len() + 1;
    let (kind, rest) = match trimmed.split_once(':') {
        Some((k, r)) => (k, Some(r)),
        None => (trimmed, None),
    };
    let body_start = start + kind.len() + 1;
    match (kind, rest) {
        ("none", None) => Ok(FlipSet::none()),
        ("all", None) => Ok(FlipSet::all()),
        ("even", None) => Ok(FlipSet::even_positions()),
        ("finite", Some(body)) => {
            let mut positions = Vec::new();
            if !body.trim().is_empty() {
                for (column, token) in split_columns(body, ',', body_start) {
                    let k: usize = token
                        .parse()
                        .map_err(|_| err(column, format!("invalid position `{token}`")))?;
                    if k == 0 {
                        return Err(err(column, "positions start at 1".into()));
                    }
                    positions.push(k);
                }
            }
            FlipSet::finite(positions).map_err(|e| err(body_start, e.to_string()))
        }
        ("mask", Some(body)) => {
            let Some((pre, period)) = body.split_once(';') else {
                return Err(err(body_start, "expected `<preperiod>;<period>`".into()));
            };
            let bits = |s: &str, first: usize| -> Result<Vec<bool>, CliError> {
                s.chars()
                    .enumerate()
                    .map(|(i, c)| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(err(first + i, format!("expected 0 or 1, found `{c}`"))),
                    })
                    .collect()
            };
            let pre = bits(pre, body_start)?;
            let period_start = body_start + pre.len() + 1;
            let period = bits(period, period_start)?;
            FlipSet::mask(pre, period).map_err(|e| err(period_start, e.to_string()))
        }
        _ => Err(err(
            start,
            format!("unknown flip set `{trimmed}`; expected none, all, even, finite:<k,...> or mask:<pre>;<period>"),
        )),
    }
}

/// Comma-separated list of ranks such as `6,8,10`.
pub fn parse_ranks(text: &str) -> Result<Vec<usize>, CliError> {
    split_columns(text, ',', 1)
        .into_iter()
        .map(|(column, token)| {
            token
                .parse()
                .map_err(|_| CliError::parse("--ranks", column, format!("invalid rank `{token}`")))
        })
        .collect()
}
