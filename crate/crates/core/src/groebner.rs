//! Ideals, reduced Groebner bases and the ideal operations built on them.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::algebra::{same_ctx, Ctx, Monomial, MonomialOrder, Polynomial, Rational};
use crate::error::{Error, Result};

static DEFAULT_BUDGET: AtomicUsize = AtomicUsize::new(200_000);

/// Sets the S-pair budget used by every Groebner computation that does not pass its own.
pub fn set_default_budget(limit: usize) {
    DEFAULT_BUDGET.store(limit, AtomicOrdering::Relaxed);
}

pub fn default_budget() -> usize {
    DEFAULT_BUDGET.load(AtomicOrdering::Relaxed)
}

/// How ideal containment is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Containment {
    /// Ideal membership.
    Scheme,
    /// Radical membership, i.e. containment of zero sets over the algebraic closure.
    Set,
}

impl Containment {
    pub fn name(self) -> &'static str {
        match self {
            Containment::Scheme => "scheme",
            Containment::Set => "set",
        }
    }
}

type Terms = Vec<(Monomial, Rational)>;

fn to_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t = p.terms().to_vec();
    if *order != MonomialOrder::Grevlex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

fn make_monic(t: &mut Terms) {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.recip();
            for (_, a) in t.iter_mut() {
                *a *= &inv;
            }
        }
    }
}

/// `p - c * m * g`, all sorted descending in `order`.
fn sub_scaled(p: &[(Monomial, Rational)], c: &Rational, m: &Monomial, g: &[(Monomial, Rational)], order: &MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut gm: Option<Monomial> = g.first().map(|t| t.0.mul(m));
    while i < p.len() || j < g.len() {
        let ord = match (&gm, i < p.len()) {
            (None, _) => Ordering::Greater,
            (Some(_), false) => Ordering::Less,
            (Some(q), true) => order.cmp(&p[i].0, q),
        };
        match ord {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.take().unwrap(), -(c * &g[j].1)));
                j += 1;
                gm = g.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let v = &p[i].1 - c * &g[j].1;
                if !v.is_zero() {
                    out.push((p[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    out
}

/// Full reduction of `p` by monic polynomials `basis`.
fn reduce(mut p: Terms, basis: &[&Terms], order: &MonomialOrder) -> Terms {
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let lm = &p[start].0;
        match basis.iter().find(|g| g[0].0.divides(lm)) {
            Some(g) => {
                let m = lm.div(&g[0].0);
                let c = p[start].1.clone();
                p = sub_scaled(&p[start + 1..], &c, &m, &g[1..], order);
                start = 0;
            }
            None => {
                let t = std::mem::replace(&mut p[start], (Monomial::one(0), Rational::zero()));
                rem.push(t);
                start += 1;
            }
        }
    }
    rem
}

fn s_polynomial(f: &Terms, g: &Terms, order: &MonomialOrder) -> Terms {
    let l = f[0].0.lcm(&g[0].0);
    let mf = l.div(&f[0].0);
    let mg = l.div(&g[0].0);
    let lhs: Terms = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_scaled(&lhs, &Rational::one(), &mg, &g[1..], order)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    polys: Vec<Terms>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn basis_refs(&self) -> Vec<&Terms> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Adds a monic polynomial, pruning pairs with the Gebauer-Moeller criteria.
    fn update(&mut self, h_terms: Terms) {
        let h = self.polys.len();
        self.polys.push(h_terms);
        self.active.push(false);
        let lh = self.lm(h).clone();

        let cands: Vec<(usize, Monomial)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| (g, lh.lcm(self.lm(g))))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g1, l1)) in cands.iter().enumerate() {
            let coprime = lh.is_coprime(self.lm(*g1));
            let dominated = cands[k + 1..].iter().any(|(_, l2)| l2.divides(l1))
                || kept.iter().any(|(_, l2)| l2.divides(l1));
            if coprime || !dominated {
                kept.push((*g1, l1.clone()));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !lh.is_coprime(self.lm(*g)))
            .map(|(g, lcm)| Pair { i: g, j: h, lcm })
            .collect();

        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let drop = lh.divides(&p.lcm)
                && lh.lcm(self.lm(p.i)) != p.lcm
                && lh.lcm(self.lm(p.j)) != p.lcm;
            if !drop {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(fresh);

        for g in 0..h {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            (p.lcm.degree(), p.i, p.j).cmp(&(q.lcm.degree(), q.i, q.j))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Groebner basis of an ideal in a fixed monomial order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ctx: Ctx,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    work: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Monic basis elements sorted by ascending leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.work.iter().map(|t| t[0].0.clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.work.len() == 1 && self.work[0][0].0.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.work.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ctx(f.ctx(), &self.ctx) {
            return Err(Error::ContextMismatch);
        }
        let refs: Vec<&Terms> = self.work.iter().collect();
        let r = reduce(to_terms(f, &self.order), &refs, &self.order);
        Ok(Polynomial::from_terms(&self.ctx, r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.order == other.order && self.basis == other.basis
    }
}

/// Buchberger's algorithm with the default budget.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_budget(ideal, order, default_budget())
}

/// Buchberger's algorithm: normal selection strategy (smallest lcm degree, ties broken
/// by generator indices), Gebauer-Moeller pair pruning, result reduced and monic.
/// Fails with [`Error::BudgetExceeded`] after `budget` S-pair reductions.
pub fn buchberger_with_budget(ideal: &Ideal, order: &MonomialOrder, budget: usize) -> Result<GroebnerBasis> {
    let ctx = ideal.ctx().clone();
    let mut engine = Engine {
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut inputs: Vec<Terms> = ideal.gens().iter().map(|g| to_terms(g, order)).collect();
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    for g in inputs {
        let mut h = reduce(g, &engine.basis_refs(), order);
        if !h.is_empty() {
            make_monic(&mut h);
            engine.update(h);
        }
    }
    let mut steps = 0usize;
    while let Some(pair) = engine.next_pair() {
        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExceeded { limit: budget });
        }
        let s = s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j], order);
        let mut h = reduce(s, &engine.basis_refs(), order);
        if !h.is_empty() {
            make_monic(&mut h);
            engine.update(h);
        }
    }

    let mut minimal: Vec<Terms> = engine
        .polys
        .into_iter()
        .zip(engine.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    minimal.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut reduced: Vec<Terms> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Terms> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, p)| p)
            .collect();
        let head = minimal[k][0].clone();
        let mut tail = reduce(minimal[k][1..].to_vec(), &others, order);
        let mut p = vec![head];
        p.append(&mut tail);
        reduced.push(p);
    }
    let basis = reduced
        .iter()
        .map(|t| Polynomial::from_terms(&ctx, t.iter().cloned()))
        .collect();
    Ok(GroebnerBasis {
        ctx,
        order: order.clone(),
        basis,
        work: reduced,
    })
}

/// Ideal of a polynomial ring, given by generators. The grevlex Groebner basis is
/// computed on first use and cached.
#[derive(Debug, Clone)]
pub struct Ideal {
    ctx: Ctx,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ctx: &Ctx, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            if !same_ctx(g.ctx(), ctx) {
                return Err(Error::ContextMismatch);
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal {
            ctx: ctx.clone(),
            gens: out,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ctx: &Ctx) -> Self {
        Ideal {
            ctx: ctx.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ctx: &Ctx) -> Self {
        Ideal {
            ctx: ctx.clone(),
            gens: vec![Polynomial::one(ctx)],
            gb: OnceLock::new(),
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Grevlex reduced Groebner basis.
    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(self, &MonomialOrder::Grevlex)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        ideal_member(f, self)
    }

    pub fn contains_radical(&self, f: &Polynomial) -> Result<bool> {
        radical_member(f, self)
    }

    pub fn contains_with(&self, f: &Polynomial, mode: Containment) -> Result<bool> {
        match mode {
            Containment::Scheme => self.contains(f),
            Containment::Set => self.contains_radical(f),
        }
    }

    /// Whether `other` is contained in `self` (or in its radical).
    pub fn contains_ideal(&self, other: &Ideal, mode: Containment) -> Result<bool> {
        ideal_contains_scheme(self, other, mode)
    }

    /// Equality by reduced Groebner bases (scheme) or by mutual radical containment (set).
    pub fn equals(&self, other: &Ideal, mode: Containment) -> Result<bool> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        match mode {
            Containment::Scheme => Ok(self.groebner()?.basis() == other.groebner()?.basis()),
            Containment::Set => Ok(self.contains_ideal(other, Containment::Set)?
                && other.contains_ideal(self, Containment::Set)?),
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ideal::new(&self.ctx, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ctx, gens)
    }

    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ctx);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// The same generators over another context, matched by variable name.
    pub fn embed(&self, ctx: &Ctx) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.embed(ctx)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ctx, gens)
    }
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if !same_ctx(f.ctx(), ideal.ctx()) {
        return Err(Error::ContextMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    ideal.groebner()?.contains(f)
}

/// `f ∈ √I`. Looks for a small power of `f` in `I` first, then decides with the
/// Rabinowitsch trick: `1 ∈ I + (1 - y f)`.
pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if !same_ctx(f.ctx(), ideal.ctx()) {
        return Err(Error::ContextMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let gb = ideal.groebner()?;
    if gb.is_unit() {
        return Ok(true);
    }
    let mut p = gb.normal_form(f)?;
    for _ in 0..8 {
        if p.is_zero() {
            return Ok(true);
        }
        p = gb.normal_form(&(&p * f))?;
    }
    let ext = ideal.ctx().extended(&["y"]);
    let y = Polynomial::var(&ext, ext.len() - 1);
    let fe = f.embed(&ext)?;
    let mut gens = ideal.gens().iter().map(|g| g.embed(&ext)).collect::<Result<Vec<_>>>()?;
    gens.push(&Polynomial::one(&ext) - &(&y * &fe));
    Ideal::new(&ext, gens)?.is_unit()
}

/// Whether `J ⊆ I` (scheme mode) or `J ⊆ √I` (set mode), generator by generator.
pub fn ideal_contains_scheme(i: &Ideal, j: &Ideal, mode: Containment) -> Result<bool> {
    if !same_ctx(i.ctx(), j.ctx()) {
        return Err(Error::ContextMismatch);
    }
    for g in j.gens() {
        if !i.contains_with(g, mode)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I ∩ k[remaining variables]`, kept over the same context.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let order = MonomialOrder::Elimination(vars.to_vec());
    let gb = buchberger(ideal, &order)?;
    let keep = gb
        .basis()
        .iter()
        .filter(|p| vars.iter().all(|&v| !p.uses_var(v)))
        .cloned();
    Ideal::new(ideal.ctx(), keep)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
pub fn ideal_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !same_ctx(i.ctx(), j.ctx()) {
        return Err(Error::ContextMismatch);
    }
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(i.ctx()));
    }
    let ext = i.ctx().extended(&["t"]);
    let t = Polynomial::var(&ext, ext.len() - 1);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in i.gens() {
        gens.push(&t * &g.embed(&ext)?);
    }
    for g in j.gens() {
        gens.push(&one_minus_t * &g.embed(&ext)?);
    }
    let elim = eliminate(&Ideal::new(&ext, gens)?, &[ext.len() - 1])?;
    elim.embed(i.ctx())
}

/// `I : f^∞` by eliminating `y` from `I + (1 - y f)`.
pub fn saturate_ideal(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if !same_ctx(ideal.ctx(), f.ctx()) {
        return Err(Error::ContextMismatch);
    }
    if f.is_zero() {
        return Ok(Ideal::unit(ideal.ctx()));
    }
    if f.is_constant() || ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let ext = ideal.ctx().extended(&["y"]);
    let y = Polynomial::var(&ext, ext.len() - 1);
    let mut gens = ideal.gens().iter().map(|g| g.embed(&ext)).collect::<Result<Vec<_>>>()?;
    gens.push(&Polynomial::one(&ext) - &(&y * &f.embed(&ext)?));
    let elim = eliminate(&Ideal::new(&ext, gens)?, &[ext.len() - 1])?;
    elim.embed(ideal.ctx())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarContext;

    fn ctx3() -> (Ctx, Polynomial, Polynomial, Polynomial) {
        let ctx = VarContext::new(&["x", "y", "z"]).unwrap();
        let v = |i| Polynomial::var(&ctx, i);
        (ctx.clone(), v(0), v(1), v(2))
    }

    #[test]
    fn twisted_cubic_basis() {
        let (ctx, x, y, z) = ctx3();
        let i = Ideal::new(&ctx, [&y - &x.pow(2), &z - &x.pow(3)]).unwrap();
        let gb = i.groebner().unwrap();
        let printed: Vec<String> = gb.basis().iter().map(|p| p.to_string()).collect();
        assert_eq!(printed, vec!["y^2 - x*z", "x*y - z", "x^2 - y"]);
        assert!(i.contains(&(&(&x * &z) - &y.pow(2))).unwrap());
        assert!(!i.contains(&x).unwrap());
    }

    #[test]
    fn lex_elimination() {
        let (ctx, x, y, z) = ctx3();
        let i = Ideal::new(&ctx, [&y - &x.pow(2), &z - &x.pow(3)]).unwrap();
        let e = eliminate(&i, &[0]).unwrap();
        assert_eq!(e.gens().len(), 1);
        assert_eq!(e.gens()[0].to_string(), "y^3 - z^2");
    }

    #[test]
    fn radical_membership() {
        let (ctx, x, y, _) = ctx3();
        let i = Ideal::new(&ctx, [x.pow(3), &(&x * &y) + &y.pow(4)]).unwrap();
        assert!(!i.contains(&x).unwrap());
        assert!(i.contains_radical(&x).unwrap());
        assert!(i.contains_radical(&y).unwrap());
        let j = Ideal::new(&ctx, [&x * &y]).unwrap();
        assert!(!j.contains_radical(&x).unwrap());
    }

    #[test]
    fn intersection_and_saturation() {
        let (ctx, x, y, _) = ctx3();
        let i = Ideal::new(&ctx, [x.clone()]).unwrap();
        let j = Ideal::new(&ctx, [y.clone()]).unwrap();
        let k = ideal_intersection(&i, &j).unwrap();
        let xy = Ideal::new(&ctx, [&x * &y]).unwrap();
        assert!(k.equals(&xy, Containment::Scheme).unwrap());

        let sq = Ideal::new(&ctx, [&x.pow(2) * &y, &x * &y.pow(3)]).unwrap();
        let sat = saturate_ideal(&sq, &x).unwrap();
        assert!(sat.equals(&j, Containment::Scheme).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let (ctx, x, y, z) = ctx3();
        let i = Ideal::new(
            &ctx,
            [&(&x.pow(2) * &y) - &z, &(&x * &y.pow(2)) - &x, &(&y * &z) - &x.pow(2)],
        )
        .unwrap();
        let err = buchberger_with_budget(&i, &MonomialOrder::Grevlex, 1).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { limit: 1 });
        assert!(buchberger_with_budget(&i, &MonomialOrder::Grevlex, 10_000).is_ok());
    }

    #[test]
    fn unit_ideal() {
        let (ctx, x, _, _) = ctx3();
        let i = Ideal::new(&ctx, [x.clone(), &x - &Polynomial::one(&ctx)]).unwrap();
        assert!(i.is_unit().unwrap());
        assert_eq!(i.groebner().unwrap().basis()[0].to_string(), "1");
    }
}
