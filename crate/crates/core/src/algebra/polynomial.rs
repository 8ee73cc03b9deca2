use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::context::{same_ctx, Ctx};
use super::monomial::{Monomial, MonomialOrder};
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Order of vanishing at a point; the zero polynomial vanishes to infinite order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointOrder {
    Finite(u32),
    Infinite,
}

impl PointOrder {
    pub fn finite(self) -> Option<u32> {
        match self {
            PointOrder::Finite(k) => Some(k),
            PointOrder::Infinite => None,
        }
    }

    pub fn plus(self, k: u32) -> PointOrder {
        match self {
            PointOrder::Finite(a) => PointOrder::Finite(a + k),
            PointOrder::Infinite => PointOrder::Infinite,
        }
    }
}

impl fmt::Display for PointOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointOrder::Finite(k) => write!(f, "{k}"),
            PointOrder::Infinite => write!(f, "inf"),
        }
    }
}

/// Sparse polynomial over Q. Terms are kept in descending grevlex order with
/// nonzero coefficients, so structural equality is polynomial equality.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ctx: Ctx,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.cmp(a, b)
}

impl Polynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Ctx, c: Rational) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.len()), c)
    }

    pub fn from_int(ctx: &Ctx, c: i64) -> Self {
        Self::constant(ctx, Rational::from_integer(c.into()))
    }

    /// The variable with index `i`. Panics when `i` is out of range.
    pub fn var(ctx: &Ctx, i: usize) -> Self {
        Self::monomial(ctx, Monomial::var(ctx.len(), i), Rational::one())
    }

    pub fn var_named(ctx: &Ctx, name: &str) -> Result<Self> {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ctx, i))
    }

    pub fn monomial(ctx: &Ctx, m: Monomial, c: Rational) -> Self {
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms(ctx: &Ctx, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ctx.len());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grevlex(&b.0, &a.0));
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| grevlex(m, t))
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Lowest total degree of a term, the order at the origin.
    pub fn low_degree(&self) -> PointOrder {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .min()
            .map_or(PointOrder::Infinite, PointOrder::Finite)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.ctx.len()).filter(|&i| self.uses_var(i)).collect()
    }

    /// Leading term in grevlex.
    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Scaled so the grevlex leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grevlex(&b.0, &a.0));
        Ok(Polynomial {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                grevlex(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: out,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.exp(i) > 0).map(|(m, c)| {
            let e = m.exp(i);
            (m.with_exp(i, e - 1), c * Rational::from_integer(e.into()))
        });
        Self::from_terms(&self.ctx, terms)
    }

    /// Replaces variable `i` by `images[i]`; the images live in `target`.
    pub fn substitute(&self, target: &Ctx, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ctx.len() {
            return Err(Error::DimensionMismatch {
                expected: self.ctx.len(),
                got: images.len(),
            });
        }
        if images.iter().any(|p| !same_ctx(p.ctx(), target)) {
            return Err(Error::ContextMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|_| vec![Polynomial::one(target)])
            .collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Substitutes some variables by polynomials of the same context.
    pub fn substitute_vars(&self, assignments: &[(usize, Polynomial)]) -> Result<Polynomial> {
        let mut images: Vec<Polynomial> =
            (0..self.ctx.len()).map(|i| Polynomial::var(&self.ctx, i)).collect();
        for (i, p) in assignments {
            self.check(p)?;
            if *i >= images.len() {
                return Err(Error::invalid(format!("variable index {i} out of range")));
            }
            images[*i] = p.clone();
        }
        self.substitute(&self.ctx.clone(), &images)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ctx.len() {
            return Err(Error::DimensionMismatch {
                expected: self.ctx.len(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// `f(x + p)`.
    pub fn translate(&self, p: &[Rational]) -> Result<Polynomial> {
        if p.len() != self.ctx.len() {
            return Err(Error::DimensionMismatch {
                expected: self.ctx.len(),
                got: p.len(),
            });
        }
        if p.iter().all(Zero::is_zero) {
            return Ok(self.clone());
        }
        let images: Vec<Polynomial> = (0..self.ctx.len())
            .map(|i| &Polynomial::var(&self.ctx, i) + &Polynomial::constant(&self.ctx, p[i].clone()))
            .collect();
        self.substitute(&self.ctx.clone(), &images)
    }

    /// Order of vanishing at `p`.
    pub fn order_at(&self, p: &[Rational]) -> Result<PointOrder> {
        Ok(self.translate(p)?.low_degree())
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// Exact quotient `self / g`.
    pub fn exact_divide(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check(g)?;
        let (lm, lc) = g.leading_term().ok_or(Error::DivisionByZero)?.clone();
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = r.leading_term().cloned() {
            if !lm.divides(&m) {
                return Err(Error::NotDivisible);
            }
            let qm = m.div(&lm);
            let qc = &c / &lc;
            r = &r - &g.mul_monomial(&qm, &qc);
            q.push((qm, qc));
        }
        Ok(Polynomial::from_terms(&self.ctx, q))
    }

    pub fn divides(&self, f: &Polynomial) -> Result<bool> {
        match f.exact_divide(self) {
            Ok(_) => Ok(true),
            Err(Error::NotDivisible) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Rewrites this polynomial over `target`, matching variables by name.
    pub fn embed(&self, target: &Ctx) -> Result<Polynomial> {
        if same_ctx(&self.ctx, target) {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ctx.len());
        for i in 0..self.ctx.len() {
            map.push(target.index_of(self.ctx.name(i)));
        }
        for i in self.vars_used() {
            if map[i].is_none() {
                return Err(Error::UnknownVariable(self.ctx.name(i).to_string()));
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    e[map[i].unwrap()] = k;
                }
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Multiplies by the least common denominator and divides by the integer content,
    /// making the leading coefficient positive.
    pub fn integer_primitive(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den = num_bigint::BigInt::one();
        let mut num = num_bigint::BigInt::zero();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        for (_, c) in &self.terms {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut s = Rational::new(den, num);
        if self.terms[0].1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    pub fn display_with(&self, ctx_names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = format_monomial(m, ctx_names);
            if mono.is_empty() {
                out.push_str(&format_rational(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format_rational(&a));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

pub(crate) fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(self.ctx.names()))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live in different contexts.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial context mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
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
