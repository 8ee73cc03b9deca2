//! Jet schemes of ideals and of foliations, jet fibers, induced jet maps and the
//! normal-crossings oracle.
//!
//! An order-`m` arc is `x_i(t) = Σ_{j=0}^{m} a_i_j t^j`. Jet variables are named
//! `a_<i>_<j>` with `i` counted from 1.

use num_traits::Zero;

use crate::algebra::{Ctx, PolyMap, Polynomial, Rational, VarContext, VarRole};
use crate::error::{Error, Result};
use crate::foliation::OneForm;
use crate::groebner::{ideal_intersection, Ideal};

/// Variables of the order-`m` jet space over a base context. A fibered context omits the
/// `j = 0` coordinates, which are fixed by the base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetContext {
    base: Ctx,
    order: usize,
    fibered: bool,
    ctx: Ctx,
}

impl JetContext {
    pub fn new(base: &Ctx, order: usize) -> Self {
        Self::build(base, order, false)
    }

    pub fn fibered(base: &Ctx, order: usize) -> Self {
        Self::build(base, order, true)
    }

    fn build(base: &Ctx, order: usize, fibered: bool) -> Self {
        let mut names = Vec::new();
        let mut roles = Vec::new();
        let j0 = usize::from(fibered);
        for i in 0..base.len() {
            for j in j0..=order {
                names.push(format!("a_{}_{}", i + 1, j));
                roles.push(VarRole::Jet { i, j });
            }
        }
        let ctx = VarContext::with_roles(names, roles).expect("jet names are distinct");
        JetContext {
            base: base.clone(),
            order,
            fibered,
            ctx,
        }
    }

    pub fn base(&self) -> &Ctx {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_fibered(&self) -> bool {
        self.fibered
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Index of `a_{i,j}` (0-based `i`), if present.
    pub fn index(&self, i: usize, j: usize) -> Option<usize> {
        let j0 = usize::from(self.fibered);
        if i >= self.n() || j < j0 || j > self.order {
            return None;
        }
        Some(i * (self.order + 1 - j0) + (j - j0))
    }

    pub fn var(&self, i: usize, j: usize) -> Option<Polynomial> {
        self.index(i, j).map(|k| Polynomial::var(&self.ctx, k))
    }

    /// Arc component `x_i(t)`; in a fibered context the constant term is `base_point[i]`.
    fn arc(&self, i: usize, base_point: Option<&[Rational]>) -> Vec<Polynomial> {
        (0..=self.order)
            .map(|j| match self.var(i, j) {
                Some(v) => v,
                None => Polynomial::constant(
                    &self.ctx,
                    base_point.map_or_else(Rational::zero, |p| p[i].clone()),
                ),
            })
            .collect()
    }

    /// Jet coordinates of the arcs `x_i(t) = Σ_j arcs[i][j] t^j`.
    /// Each arc lists its coefficients from `t^0` to `t^m`.
    pub fn point_from_arcs(&self, arcs: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        if arcs.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: arcs.len(),
            });
        }
        let mut point = vec![Rational::zero(); self.ctx.len()];
        for (i, arc) in arcs.iter().enumerate() {
            for j in 0..=self.order {
                if let Some(k) = self.index(i, j) {
                    point[k] = arc.get(j).cloned().unwrap_or_else(Rational::zero);
                }
            }
        }
        Ok(point)
    }
}

/// Whether generators come from an ideal or from a foliation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JetKind {
    Scheme,
    Foliation,
}

/// Coefficient of `t^{t_index}` in the pullback of base generator number `source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetGenerator {
    pub t_index: usize,
    pub source: usize,
    pub poly: Polynomial,
}

/// Generators of a jet ideal, tagged by the power of `t` they come from.
#[derive(Debug, Clone)]
pub struct JetIdeal {
    jet: JetContext,
    kind: JetKind,
    gens: Vec<JetGenerator>,
    base_point: Option<Vec<Rational>>,
}

impl JetIdeal {
    pub fn jet(&self) -> &JetContext {
        &self.jet
    }

    pub fn ctx(&self) -> &Ctx {
        self.jet.ctx()
    }

    pub fn kind(&self) -> JetKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.jet.order
    }

    pub fn base_point(&self) -> Option<&[Rational]> {
        self.base_point.as_deref()
    }

    /// Nonzero generators in order of `(t_index, source)`.
    pub fn generators(&self) -> &[JetGenerator] {
        &self.gens
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.gens.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.jet.ctx(), self.polys()).expect("generators share the jet context")
    }

    /// Whether every generator vanishes at a point of the jet space.
    pub fn vanishes_at(&self, point: &[Rational]) -> Result<bool> {
        for g in &self.gens {
            if !g.poly.evaluate(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Truncated power series in `t` with polynomial coefficients.
fn series_mul(a: &[Polynomial], b: &[Polynomial], m: usize) -> Vec<Polynomial> {
    let ctx = a[0].ctx();
    let mut out = vec![Polynomial::zero(ctx); m + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(m + 1 - i) {
            if !bj.is_zero() {
                out[i + j] = &out[i + j] + &(ai * bj);
            }
        }
    }
    out
}

/// `f(x_1(t), ..., x_n(t)) mod t^{m+1}`.
fn compose_series(f: &Polynomial, arcs: &[Vec<Polynomial>], ctx: &Ctx, m: usize) -> Vec<Polynomial> {
    let mut powers: Vec<Vec<Vec<Polynomial>>> = arcs
        .iter()
        .map(|_| {
            let mut one = vec![Polynomial::zero(ctx); m + 1];
            one[0] = Polynomial::one(ctx);
            vec![one]
        })
        .collect();
    let mut acc = vec![Polynomial::zero(ctx); m + 1];
    for (mono, c) in f.terms() {
        let mut term = vec![Polynomial::zero(ctx); m + 1];
        term[0] = Polynomial::constant(ctx, c.clone());
        for (i, &e) in mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e as usize {
                let next = series_mul(powers[i].last().unwrap(), &arcs[i], m);
                powers[i].push(next);
            }
            term = series_mul(&term, &powers[i][e as usize], m);
        }
        for k in 0..=m {
            if !term[k].is_zero() {
                acc[k] = &acc[k] + &term[k];
            }
        }
    }
    acc
}

fn series_derivative(s: &[Polynomial]) -> Vec<Polynomial> {
    let ctx = s[0].ctx();
    let mut out: Vec<Polynomial> = (1..s.len())
        .map(|j| s[j].scale(&Rational::from_integer(j.into())))
        .collect();
    out.push(Polynomial::zero(ctx));
    out
}

fn jet_arcs(jet: &JetContext, base_point: Option<&[Rational]>) -> Vec<Vec<Polynomial>> {
    (0..jet.n()).map(|i| jet.arc(i, base_point)).collect()
}

/// Order-`m` jet scheme of `V(I)`: the coefficients of `t^0, ..., t^m` of each generator
/// evaluated on a generic arc.
pub fn jet_ideal_scheme(ideal: &Ideal, m: usize) -> Result<JetIdeal> {
    let jet = JetContext::new(ideal.ctx(), m);
    let arcs = jet_arcs(&jet, None);
    let mut gens = Vec::new();
    let mut per_source = Vec::new();
    for (src, f) in ideal.gens().iter().enumerate() {
        per_source.push((src, compose_series(f, &arcs, jet.ctx(), m)));
    }
    for k in 0..=m {
        for (src, series) in &per_source {
            if !series[k].is_zero() {
                gens.push(JetGenerator {
                    t_index: k,
                    source: *src,
                    poly: series[k].clone(),
                });
            }
        }
    }
    Ok(JetIdeal {
        jet,
        kind: JetKind::Scheme,
        gens,
        base_point: None,
    })
}

/// Order-`m` jets of a foliation: the coefficients of `t^0, ..., t^{m-1}` of the pullback
/// of the form along a generic arc.
pub fn jet_ideal_foliation(form: &OneForm, m: usize) -> Result<JetIdeal> {
    let jet = JetContext::new(form.ctx(), m);
    let gens = foliation_generators(form, &jet, None)?;
    Ok(JetIdeal {
        jet,
        kind: JetKind::Foliation,
        gens,
        base_point: None,
    })
}

fn foliation_generators(
    form: &OneForm,
    jet: &JetContext,
    base_point: Option<&[Rational]>,
) -> Result<Vec<JetGenerator>> {
    let m = jet.order();
    if m == 0 {
        return Ok(Vec::new());
    }
    let arcs = jet_arcs(jet, base_point);
    let mut total = vec![Polynomial::zero(jet.ctx()); m + 1];
    for (i, b) in form.coeffs().iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        let bt = compose_series(b, &arcs, jet.ctx(), m);
        let dx = series_derivative(&arcs[i]);
        let prod = series_mul(&bt, &dx, m);
        for k in 0..=m {
            total[k] = &total[k] + &prod[k];
        }
    }
    Ok(total
        .into_iter()
        .take(m)
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(k, poly)| JetGenerator {
            t_index: k,
            source: 0,
            poly,
        })
        .collect())
}

/// Fiber over a base point: substitutes `a_i_0 = P_i`.
pub fn jet_fiber(jets: &JetIdeal, point: &[Rational]) -> Result<JetIdeal> {
    if jets.jet.fibered {
        return Err(Error::invalid("jet ideal is already a fiber"));
    }
    let n = jets.jet.n();
    if point.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: point.len(),
        });
    }
    let fib = JetContext::fibered(&jets.jet.base, jets.jet.order);
    let mut images = Vec::with_capacity(jets.ctx().len());
    for k in 0..jets.ctx().len() {
        match *jets.ctx().role(k) {
            VarRole::Jet { i, j: 0 } => images.push(Polynomial::constant(fib.ctx(), point[i].clone())),
            VarRole::Jet { i, j } => images.push(fib.var(i, j).expect("fibered jet variable")),
            _ => unreachable!("jet contexts hold jet variables only"),
        }
    }
    let mut gens = Vec::new();
    for g in &jets.gens {
        let p = g.poly.substitute(fib.ctx(), &images)?;
        if !p.is_zero() {
            gens.push(JetGenerator {
                t_index: g.t_index,
                source: g.source,
                poly: p,
            });
        }
    }
    Ok(JetIdeal {
        jet: fib,
        kind: jets.kind,
        gens,
        base_point: Some(point.to_vec()),
    })
}

/// Image of an order-`m` jet ideal in order `p ≤ m`.
pub fn jet_truncate(jets: &JetIdeal, p: usize) -> Result<JetIdeal> {
    if p > jets.order() {
        return Err(Error::invalid(format!(
            "cannot truncate order {} jets to order {p}",
            jets.order()
        )));
    }
    let jet = JetContext::build(&jets.jet.base, p, jets.jet.fibered);
    let mut gens = Vec::new();
    for g in &jets.gens {
        let keep = match jets.kind {
            JetKind::Scheme => g.t_index <= p,
            JetKind::Foliation => g.t_index < p,
        };
        if keep {
            gens.push(JetGenerator {
                t_index: g.t_index,
                source: g.source,
                poly: g.poly.embed(jet.ctx())?,
            });
        }
    }
    Ok(JetIdeal {
        jet,
        kind: jets.kind,
        gens,
        base_point: jets.base_point.clone(),
    })
}

/// Map on order-`m` jets induced by a polynomial map of base spaces.
#[derive(Debug, Clone)]
pub struct JetMap {
    source: JetContext,
    target: JetContext,
    images: Vec<Polynomial>,
}

impl JetMap {
    pub fn source(&self) -> &JetContext {
        &self.source
    }

    pub fn target(&self) -> &JetContext {
        &self.target
    }

    /// Image of target jet coordinate `a_{i,j}` (0-based `i`).
    pub fn image(&self, i: usize, j: usize) -> Option<&Polynomial> {
        self.target.index(i, j).map(|k| &self.images[k])
    }

    pub fn pull(&self, f: &Polynomial) -> Result<Polynomial> {
        f.substitute(self.source.ctx(), &self.images)
    }

    /// Preimage of a jet ideal over the target, with the same tags.
    pub fn pull_jets(&self, jets: &JetIdeal) -> Result<JetIdeal> {
        if jets.jet != self.target {
            return Err(Error::ContextMismatch);
        }
        let mut gens = Vec::new();
        for g in &jets.gens {
            let p = self.pull(&g.poly)?;
            if !p.is_zero() {
                gens.push(JetGenerator {
                    t_index: g.t_index,
                    source: g.source,
                    poly: p,
                });
            }
        }
        Ok(JetIdeal {
            jet: self.source.clone(),
            kind: jets.kind,
            gens,
            base_point: None,
        })
    }
}

/// `φ_m`: sends an arc `τ` to `φ ∘ τ mod t^{m+1}`.
pub fn induced_jet_map(map: &PolyMap, m: usize) -> Result<JetMap> {
    let source = JetContext::new(map.source(), m);
    let target = JetContext::new(map.target(), m);
    let arcs = jet_arcs(&source, None);
    let mut images = vec![Polynomial::zero(source.ctx()); target.ctx().len()];
    for (i, phi) in map.images().iter().enumerate() {
        let s = compose_series(phi, &arcs, source.ctx(), m);
        for (j, c) in s.into_iter().enumerate() {
            images[target.index(i, j).unwrap()] = c;
        }
    }
    Ok(JetMap {
        source,
        target,
        images,
    })
}

/// Explicit description of the jets at the origin of a normal-crossings divisor
/// `x_{i_1} ⋯ x_{i_t} = 0`: one linear component per composition `j_1 + ... + j_t = m - t + 1`.
#[derive(Debug, Clone)]
pub struct NcOracle {
    pub jet: JetContext,
    pub vars: Vec<usize>,
    pub compositions: Vec<Vec<usize>>,
    /// The linear ideals `(a_{i,1}, ..., a_{i,j_i})`, one per composition.
    pub components: Vec<Ideal>,
    /// Intersection of the components; zero when the fiber is the whole space.
    pub intersection: Ideal,
}

impl NcOracle {
    /// True when `m < t` and the fiber is the whole jet space.
    pub fn is_full_space(&self) -> bool {
        self.components.is_empty()
    }
}

/// Compositions of `total` into `parts` nonnegative parts, first part descending.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Normal-crossings oracle for the coordinate hyperplanes `vars` of `base` at order `m`,
/// in the fibered jet context over the origin.
pub fn nc_jet_oracle(base: &Ctx, vars: &[usize], m: usize) -> Result<NcOracle> {
    let t = vars.len();
    if t == 0 || vars.iter().any(|&v| v >= base.len()) {
        return Err(Error::invalid("normal-crossings variables must be a nonempty subset of the base"));
    }
    let jet = JetContext::fibered(base, m);
    if m < t {
        let intersection = Ideal::zero(jet.ctx());
        return Ok(NcOracle {
            jet,
            vars: vars.to_vec(),
            compositions: Vec::new(),
            components: Vec::new(),
            intersection,
        });
    }
    let comps = compositions(m + 1 - t, t);
    let mut components = Vec::new();
    for comp in &comps {
        let mut gens = Vec::new();
        for (k, &ji) in comp.iter().enumerate() {
            for j in 1..=ji {
                gens.push(jet.var(vars[k], j).unwrap());
            }
        }
        components.push(Ideal::new(jet.ctx(), gens)?);
    }
    let mut intersection = components[0].clone();
    for c in &components[1..] {
        intersection = ideal_intersection(&intersection, c)?;
    }
    Ok(NcOracle {
        jet,
        vars: vars.to_vec(),
        compositions: comps,
        components,
        intersection,
    })
}
