use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Variable index. Variables are positive integers rendered as `x<index>`;
/// grid-indexed families use index `10*i + j` so that `x12` is the weight at
/// row 1, column 2.
pub type Var = u32;

/// A monomial: a finite product of variables with positive exponents,
/// stored as a sorted `(variable, exponent)` list. The empty product is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    vars: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { vars: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        assert!(v > 0, "variable indices are positive");
        Monomial { vars: vec![(v, 1)] }
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable();
        let mut vars: Vec<(Var, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            assert!(v > 0, "variable indices are positive");
            match vars.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => vars.push((v, e)),
            }
        }
        Monomial { vars }
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.vars.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.vars
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.vars[i].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.vars
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut a, mut b) = (self.vars.iter().peekable(), other.vars.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { vars: out }
    }

    /// Componentwise gcd, used to cancel common monomial content in fractions.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for &(v, e) in &self.vars {
            let f = other.exponent(v);
            if f > 0 {
                out.push((v, e.min(f)));
            }
        }
        Monomial { vars: out }
    }

    /// Exact division; `None` if some exponent of `other` exceeds ours.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        let mut rest = other.vars.iter().peekable();
        for &(v, e) in &self.vars {
            let mut e = e;
            while let Some(&&(w, f)) = rest.peek() {
                if w < v {
                    return None; // divisor has a variable we lack
                }
                if w == v {
                    if f > e {
                        return None;
                    }
                    e -= f;
                    rest.next();
                }
                break;
            }
            if e > 0 {
                out.push((v, e));
            }
        }
        if rest.peek().is_some() {
            return None;
        }
        Some(Monomial { vars: out })
    }
}

/// Graded-lexicographic order: compare total degree first, then exponent
/// vectors with smaller variable indices weighted first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.vars.iter(), other.vars.iter());
        loop {
            match (a.next(), b.next()) {
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    // Earlier variable with positive exponent wins lex.
                    match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        },
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial with rational coefficients. The zero
/// polynomial is the empty term map; no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(n.into()))
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), BigRational::one());
        Poly { terms }
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// The constant value if this polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Greatest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// All variables occurring with nonzero exponent.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for &(v, _) in m.pairs() {
                vs.push(v);
            }
        }
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// True when every coefficient is positive (hence the value is positive
    /// for every positive assignment of the variables). This is the
    /// positivity test used for symbolic edge weights.
    pub fn is_coefficient_positive(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.is_positive())
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Division restricted to the rational instantiation: the divisor must be
    /// a nonzero constant. Dividing by a genuine polynomial is unsupported.
    pub fn try_div(&self, rhs: &Poly) -> Result<Poly> {
        match rhs.as_constant() {
            Some(c) if c.is_zero() => Err(Error::DivisionByZero),
            Some(c) => Ok(self.scale(&(BigRational::one() / c))),
            None => Err(Error::Unsupported(
                "polynomial division is not provided".into(),
            )),
        }
    }

    /// Substitute rational values for the assigned variables; unassigned
    /// variables remain symbolic.
    pub fn specialize(&self, assignment: &BTreeMap<Var, BigRational>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest: Vec<(Var, u32)> = Vec::new();
            let mut zero = false;
            for &(v, e) in m.pairs() {
                match assignment.get(&v) {
                    Some(val) if val.is_zero() => {
                        zero = true;
                        break;
                    }
                    Some(val) => {
                        let mut p = val.clone();
                        for _ in 1..e {
                            p *= val;
                        }
                        coeff *= p;
                    }
                    None => rest.push((v, e)),
                }
            }
            if !zero {
                out.add_term(Monomial::from_pairs(rest), coeff);
            }
        }
        out
    }

    /// Full evaluation; errors if some variable has no value.
    pub fn eval(&self, assignment: &BTreeMap<Var, BigRational>) -> Result<BigRational> {
        let specialized = self.specialize(assignment);
        specialized.as_constant().ok_or_else(|| {
            Error::arg(format!(
                "evaluation left symbolic variables: {:?}",
                specialized.variables()
            ))
        })
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial_derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut pairs: Vec<(Var, u32)> = m.pairs().to_vec();
            for p in pairs.iter_mut() {
                if p.0 == v {
                    p.1 -= 1;
                }
            }
            out.add_term(
                Monomial::from_pairs(pairs),
                c * BigRational::from_integer(e.into()),
            );
        }
        out
    }

    /// Exchange two variables, used for symmetry checking.
    pub fn swap_vars(&self, a: Var, b: Var) -> Poly {
        if a == b {
            return self.clone();
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let pairs = m
                .pairs()
                .iter()
                .map(|&(v, e)| {
                    if v == a {
                        (b, e)
                    } else if v == b {
                        (a, e)
                    } else {
                        (v, e)
                    }
                })
                .collect();
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        out
    }

    /// Render in canonical form: terms in descending graded-lex order,
    /// `2*x1^2*x2 + x2^3` style. `compact` omits the spaces around signs so
    /// the result is a single whitespace-free token.
    pub fn render(&self, compact: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if compact {
                out.push(if neg { '-' } else { '+' });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_is_one = abs.is_one();
            if !coeff_is_one || m.is_one() {
                out.push_str(&render_rat(&abs));
                if !m.is_one() {
                    out.push('*');
                }
            }
            let mut first = true;
            for &(v, e) in m.pairs() {
                if !first {
                    out.push('*');
                }
                first = false;
                out.push_str(&format!("x{v}"));
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

/// Canonical `p/q` rendering of a rational (integers as plain integers).
pub fn render_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident :: $meth:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $meth(self, rhs: Poly) -> Poly { $tr::$meth(&self, &rhs) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $meth(self, rhs: &Poly) -> Poly { $tr::$meth(&self, rhs) }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $meth(self, rhs: Poly) -> Poly { $tr::$meth(self, &rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);
