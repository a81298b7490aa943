//! Exact scalars: arbitrary-precision rationals and sparse multivariate
//! polynomials over them.
//!
//! A [`Polynomial`] carries the ordered list of parameter names it is written
//! in. Terms are kept in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, zero coefficients are never stored, so two equal
//! polynomials have identical term maps and zero testing is an emptiness test.
//!
//! Polynomials with an empty variable list are constants. They combine with
//! polynomials over any variable list; two non-empty lists must agree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Ordered parameter names shared by a family of polynomials.
pub type Vars = Arc<[String]>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::PolynomialSyntax {
        pos: 0,
        msg: format!("invalid rational `{t}`"),
    };
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::PolynomialSyntax {
                    pos: 0,
                    msg: "zero denominator".into(),
                });
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(t).map_err(|_| bad())?,
        )),
    }
}

/// Exponent vector with trailing zeros trimmed, so the constant monomial is
/// the empty vector regardless of how many variables are in scope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn var(index: usize) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let exps = (0..n).map(|i| self.exponent(i) + other.exponent(i)).collect();
        Monomial(exps)
    }
}

impl Ord for Monomial {
    // graded lexicographic
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            (0..n)
                .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

fn no_vars() -> Vars {
    Arc::from(Vec::<String>::new())
}

fn unify(a: &Vars, b: &Vars) -> Result<Vars> {
    if b.is_empty() || Arc::ptr_eq(a, b) || a == b {
        Ok(a.clone())
    } else if a.is_empty() {
        Ok(b.clone())
    } else {
        Err(Error::VariableMismatch {
            left: a.join(","),
            right: b.join(","),
        })
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            vars: no_vars(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial {
            vars: no_vars(),
            terms,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// The variable `vars[index]`.
    pub fn var(vars: &Vars, index: usize) -> Self {
        assert!(index < vars.len(), "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(index), Rational::one());
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// like terms and dropping zeros.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() > vars.len() {
                return Err(Error::Structural(format!(
                    "exponent vector of length {} over {} variables",
                    exps.len(),
                    vars.len()
                )));
            }
            let m = Monomial::new(exps);
            let slot = map.entry(m).or_insert_with(Rational::zero);
            *slot += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            vars: vars.clone(),
            terms: map,
        })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// Re-labels the polynomial as living over `vars`. Fails if a variable in
    /// use would fall outside the new list.
    pub fn with_vars(&self, vars: &Vars) -> Result<Self> {
        let used = self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0);
        if used > vars.len() {
            return Err(Error::Structural(
                "polynomial uses more variables than the target list".into(),
            ));
        }
        Ok(Polynomial {
            vars: vars.clone(),
            terms: self.terms.clone(),
        })
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::one()).cloned()
        } else {
            None
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        match op {
            ArithOp::Add => self.checked_add(other),
            ArithOp::Sub => self.checked_sub(other),
            ArithOp::Mul => self.checked_mul(other),
            ArithOp::Neg => Ok(-self),
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        let vars = unify(&self.vars, &other.vars)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial { vars, terms })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let vars = unify(&self.vars, &other.vars)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(Polynomial { vars, terms })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation; every variable that occurs must be assigned.
    pub fn evaluate(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = &self.vars[i];
                let value = assignment
                    .get(name)
                    .ok_or_else(|| Error::MissingVariable(name.clone()))?;
                term *= num_traits::pow(value.clone(), e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Replaces the assigned variables by their values, leaving the others
    /// symbolic. The variable list is kept.
    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut exps = m.0.clone();
            for (i, e) in exps.iter_mut().enumerate() {
                if *e > 0 {
                    if let Some(v) = assignment.get(&self.vars[i]) {
                        coef *= num_traits::pow(v.clone(), *e as usize);
                        *e = 0;
                    }
                }
            }
            accumulate(&mut terms, Monomial::new(exps), coef);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Leading term under graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Rescales by a nonzero rational so the coefficients are coprime
    /// integers and the leading coefficient is positive. Returns the factor
    /// `c` with `self = c * normalized`.
    pub fn normalized(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Parses the text form, e.g. `16*l1^2 - 16*l3^2`, `1/2*l1*l2 - l3`.
    /// Sums, differences, products, integer powers and parentheses are
    /// accepted. Every name must appear in `vars`.
    pub fn parse(text: &str, vars: &Vars) -> Result<Polynomial> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            vars,
        };
        let value = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        value.with_vars(vars)
    }

    fn fmt_monomial(&self, m: &Monomial, out: &mut String) {
        let mut first = true;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(&self.vars[i]);
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&m) {
        Some(existing) => {
            *existing += c;
            if existing.is_zero() {
                terms.remove(&m);
            }
        }
        None => {
            terms.insert(m, c);
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        unify(&self.vars, &other.vars).is_ok() && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Default for Polynomial {
    fn default() -> Self {
        Polynomial::zero()
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::from_int(n)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let c = if k == 0 {
                c.clone()
            } else if c.is_negative() {
                out.push_str(" - ");
                -c
            } else {
                out.push_str(" + ");
                c.clone()
            };
            if m.is_one() {
                out.push_str(&c.to_string());
            } else if c.is_one() {
                self.fmt_monomial(m, &mut out);
            } else if (-&c).is_one() {
                out.push('-');
                self.fmt_monomial(m, &mut out);
            } else {
                out.push_str(&c.to_string());
                out.push('*');
                self.fmt_monomial(m, &mut out);
            }
        }
        f.write_str(&out)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands have incompatible variable lists; use
            /// the `checked_*` form to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::PolynomialSyntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.checked_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()
            }
            _ => {
                let base = self.atom()?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let exp = self.integer()?;
                    let exp: u32 = exp
                        .try_into()
                        .map_err(|_| self.error("exponent too large"))?;
                    Ok(base.pow(exp))
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(digits).expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        let den = self.integer()?;
                        if den.is_zero() {
                            return Err(self.error("zero denominator"));
                        }
                        return Ok(Polynomial::constant(Rational::new(num, den)));
                    }
                    self.pos = save;
                    return Err(self.error("expected denominator after `/`"));
                }
                Ok(Polynomial::constant(Rational::from_integer(num)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(Polynomial::var(self.vars, i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
