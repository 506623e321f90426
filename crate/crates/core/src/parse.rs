//! Text form of rings and monomial ideals: `x^3, x^2*y^4, x*y^5, y^7`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// A polynomial ring identified by its variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::Parse(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Parse(format!("duplicate variable `{n}`")));
            }
        }
        Ok(PolyRing { names })
    }

    /// Parses a comma-separated variable list such as `a,b,c,d`.
    pub fn parse(spec: &str) -> Result<Self> {
        let names: Vec<String> = spec
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if names.is_empty() {
            return Err(Error::Parse("empty variable list".into()));
        }
        Self::new(names)
    }

    /// Default names: `x, y, z, w` up to four variables, `x1..xk` beyond.
    pub fn standard(nvars: usize) -> Self {
        let names = if nvars <= 4 {
            ["x", "y", "z", "w"][..nvars].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=nvars).map(|i| format!("x{i}")).collect()
        };
        PolyRing { names }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut exps = vec![0u32; self.nvars()];
        if compact == "1" {
            return Ok(Monomial::new(exps));
        }
        for factor in compact.split('*') {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            let j = self
                .names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            exps[j] = exps[j].checked_add(exp).ok_or(Error::Overflow)?;
        }
        Ok(Monomial::new(exps))
    }

    /// Parses comma-separated generators. An empty string or `0` is the zero ideal.
    pub fn parse_ideal(&self, text: &str) -> Result<MonomialIdeal> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "0" {
            return Ok(MonomialIdeal::zero(self.nvars()));
        }
        let gens = compact
            .split(',')
            .map(|g| self.parse_monomial(g))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.nvars(), gens)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut out = String::new();
        for (name, &e) in self.names.iter().zip(m.exponents()) {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(name);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }

    pub fn format_ideal(&self, ideal: &MonomialIdeal) -> String {
        if ideal.is_zero() {
            return "0".into();
        }
        ideal
            .gens()
            .iter()
            .map(|g| self.format_monomial(g))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Parses a comma-separated list of positive integers (`4,5,6,7`).
pub fn parse_int_list(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| Error::Parse(format!("expected a nonnegative integer, got `{s}`")))
        })
        .collect()
}
