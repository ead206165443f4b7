use num::{BigInt, BigRational, One};

use super::poly::{Monomial, Poly, Var};
use crate::error::{Error, Result};

/// Parse the canonical polynomial rendering (both spaced and compact forms):
/// a signed sum of terms, each a `*`-joined product of an optional rational
/// coefficient `p/q` and factors `x<idx>` or `x<idx>^<exp>`.
pub fn parse_poly(input: &str) -> Result<Poly> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let mut out = Poly::zero();
    let mut rest = s.as_str();
    let mut sign = BigRational::one();
    if let Some(r) = rest.strip_prefix('-') {
        sign = -sign;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        let end = rest
            .char_indices()
            .find(|&(i, c)| (c == '+' || c == '-') && i > 0 && !rest[..i].ends_with('^'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = &rest[..end];
        out += &parse_term(term, &sign)?;
        if end == rest.len() {
            break;
        }
        sign = if rest[end..].starts_with('-') {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        rest = &rest[end + 1..];
        if rest.is_empty() {
            return Err(Error::parse("trailing sign"));
        }
    }
    Ok(out)
}

fn parse_term(term: &str, sign: &BigRational) -> Result<Poly> {
    if term.is_empty() {
        return Err(Error::parse("empty term"));
    }
    let mut coeff = sign.clone();
    let mut pairs: Vec<(Var, u32)> = Vec::new();
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::parse(format!("empty factor in term `{term}`")));
        }
        if let Some(body) = factor.strip_prefix('x') {
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let v: Var = idx
                .parse()
                .map_err(|_| Error::parse(format!("bad variable `{factor}`")))?;
            if v == 0 {
                return Err(Error::parse("variable indices are positive"));
            }
            let e: u32 = exp
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent `{factor}`")))?;
            pairs.push((v, e));
        } else {
            coeff *= parse_rat(factor)?;
        }
    }
    Ok(Poly::monomial(Monomial::from_pairs(pairs), coeff))
}

/// Parse a rational `p` or `p/q` with optional leading sign.
pub fn parse_rat(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("bad rational `{s}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("bad rational `{s}`")))?;
    if d == BigInt::from(0) {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_canonical_form() {
        for src in [
            "2*x1^2*x2 + x2^3",
            "x1 - x2",
            "-1/2*x3 + 5",
            "0",
            "3/4",
            "x12*x21",
        ] {
            let p = parse_poly(src).unwrap();
            let q = parse_poly(&p.render(false)).unwrap();
            let r = parse_poly(&p.render(true)).unwrap();
            assert_eq!(p, q);
            assert_eq!(p, r);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("x0").is_err());
        assert!(parse_poly("x1 +").is_err());
        assert!(parse_poly("**").is_err());
        assert!(parse_rat("1/0").is_err());
    }
}
