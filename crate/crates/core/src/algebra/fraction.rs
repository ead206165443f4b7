use num::{BigRational, One};

use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};

/// A formal quotient of polynomials. No rational-function normal form is
/// computed; equality is decided by cross-multiplication. Construction
/// rejects a zero denominator, which keeps every arithmetic operation total.
#[derive(Clone, Debug)]
pub struct Fraction {
    pub num: Poly,
    pub den: Poly,
}

impl Fraction {
    pub fn new(num: Poly, den: Poly) -> Result<Fraction> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Fraction { num, den })
    }

    pub fn from_poly(p: Poly) -> Fraction {
        Fraction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn one() -> Fraction {
        Fraction::from_poly(Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, rhs: &Fraction) -> Fraction {
        Fraction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }

    pub fn add(&self, rhs: &Fraction) -> Fraction {
        Fraction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }

    pub fn div(&self, rhs: &Fraction) -> Result<Fraction> {
        if rhs.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Fraction {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        })
    }

    pub fn inv(&self) -> Result<Fraction> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Fraction {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    /// Equality by cross-multiplication: a/b = c/d iff ad = cb.
    pub fn eq_cross(&self, rhs: &Fraction) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }

    /// Cancel the common monomial content of numerator and denominator and
    /// rescale so the denominator's leading coefficient is 1. This is not a
    /// full normal form (no polynomial gcd), but it reproduces the compact
    /// shapes one writes by hand, e.g. `x12*x21/(x12+x21)`.
    pub fn normalized(&self) -> Fraction {
        if self.num.is_zero() {
            return Fraction {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let content = |p: &Poly| -> Monomial {
            let mut it = p.terms();
            let mut acc = it.next().expect("nonzero").0.clone();
            for (m, _) in it {
                acc = acc.gcd(m);
                if acc.is_one() {
                    break;
                }
            }
            acc
        };
        let common = content(&self.num).gcd(&content(&self.den));
        let strip = |p: &Poly| -> Poly {
            let mut out = Poly::zero();
            for (m, c) in p.terms() {
                let m = m.div(&common).expect("content divides");
                out += &Poly::monomial(m, c.clone());
            }
            out
        };
        let num = strip(&self.num);
        let den = strip(&self.den);
        let lead = den.leading_term().expect("nonzero denominator").1.clone();
        let inv = BigRational::one() / lead;
        Fraction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn render(&self, compact: bool) -> String {
        let n = self.normalized();
        if n.den.is_one() {
            return n.num.render(compact);
        }
        let wrap = |p: &Poly, always_on_product: bool| {
            let s = p.render(compact);
            let needs = p.num_terms() > 1 || (always_on_product && s.contains('*'));
            if needs {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(&n.num, false), wrap(&n.den, true))
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        self.eq_cross(other)
    }
}
