//! Text grammars used on the command line.
//!
//! Polynomials: terms `c*x^a*y^b` joined by `+` (or `-`), e.g. `y^2 + 2*x*y`.
//! The coefficient is a decimal field-element code and may be omitted; an
//! omitted exponent means 1 and an omitted variable means exponent 0.

use super::field::{Field, Fq};
use super::poly::{add_exp, Exponents, Poly};
use crate::error::{Error, Result};

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Splits `s` at top-level `+`/`-` signs, returning `(negated, term)` pairs.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negated = false;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(err("unbalanced parentheses"));
                }
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                let term = current.trim().to_string();
                if term.is_empty() {
                    if !out.is_empty() || negated {
                        return Err(err(format!("dangling sign in `{s}`")));
                    }
                } else {
                    out.push((negated, term));
                }
                negated = ch == '-';
                current.clear();
            }
            c if c.is_whitespace() => {}
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(err("unbalanced parentheses"));
    }
    let term = current.trim().to_string();
    if term.is_empty() {
        return Err(err(format!("empty term in `{s}`")));
    }
    out.push((negated, term));
    Ok(out)
}

pub(crate) fn parse_coefficient(field: Field, s: &str) -> Result<Fq> {
    let code: u64 = s.parse().map_err(|_| err(format!("bad coefficient `{s}`")))?;
    field.element(code)
}

/// Parses `x^a*y^b`-style products of variables (`1` alone is allowed).
pub(crate) fn parse_monomial(s: &str) -> Result<Exponents> {
    let mut exps = (0u32, 0u32);
    for factor in s.split('*') {
        let factor = factor.trim();
        if factor == "1" {
            continue;
        }
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => (v.trim(), e.trim().parse::<u32>().map_err(|_| err(format!("bad exponent in `{factor}`")))?),
            None => (factor, 1),
        };
        match var {
            "x" => exps.0 = add_exp(exps.0, exp),
            "y" => exps.1 = add_exp(exps.1, exp),
            _ => return Err(err(format!("unknown factor `{factor}`"))),
        }
    }
    Ok(exps)
}

/// Parses a single product term: an optional leading coefficient followed by
/// variable factors.
fn parse_poly_term(field: Field, term: &str) -> Result<(Exponents, Fq)> {
    let (coeff, rest) = match term.split_once('*') {
        Some((head, tail)) if head.chars().all(|c| c.is_ascii_digit()) => (parse_coefficient(field, head)?, tail),
        _ if term.chars().all(|c| c.is_ascii_digit()) => return Ok(((0, 0), parse_coefficient(field, term)?)),
        _ => (field.one(), term),
    };
    Ok((parse_monomial(rest)?, coeff))
}

pub fn parse_poly(field: Field, s: &str) -> Result<Poly> {
    let mut out = Poly::zero(field);
    for (negated, term) in split_terms(s)? {
        let (e, c) = parse_poly_term(field, &term)?;
        out.add_term(e, if negated { -c } else { c });
    }
    Ok(out)
}
