//! Classification of foliation singularities.
//!
//! In the plane a singular point is *reduced* when the linear part of the dual vector
//! field has eigenvalues that are not both zero and whose ratio is not a positive
//! rational. Non-reduced points with a nonzero semisimple-compatible linear part are
//! split into the resonant pre-simple type (A) and the type (C) shape
//! `y dx - (r x + a y^r) dy`.
//!
//! Irrational real eigenvalues never have a positive rational ratio: if `λ₁ = q λ₂` with
//! `q ∈ Q⁺`, then `trace = (1 + q) λ₂` is rational and `1 + q ≠ 0`, so `λ₂` and `λ₁` are
//! rational and the discriminant is a rational square.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{
    linalg, rat, rational_sqrt, Ctx, Monomial, Polynomial, Rational, VarContext,
};
use crate::error::{Error, Result};
use crate::foliation::{
    dual_field_2d, invariant_hypersurface_check, linear_coefficients, saturate_form,
    singular_ideal, OneForm,
};
use crate::groebner::{Containment, Ideal};
use crate::jets::{jet_fiber, jet_ideal_foliation, jet_truncate, nc_jet_oracle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Eigenvalues {
    /// Distinct rational eigenvalues, larger first.
    Rational(Rational, Rational),
    Double(Rational),
    IrrationalReal,
    ComplexConjugate,
}

/// Characteristic data of a 2×2 matrix: `t² - trace·t + det`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenData {
    pub trace: Rational,
    pub det: Rational,
    pub discriminant: Rational,
    pub eigenvalues: Eigenvalues,
}

impl EigenData {
    pub fn from_matrix(m: &[[Rational; 2]; 2]) -> Self {
        let trace = &m[0][0] + &m[1][1];
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        Self::from_trace_det(trace, det)
    }

    pub fn from_trace_det(trace: Rational, det: Rational) -> Self {
        let discriminant = &trace * &trace - &det * rat(4);
        let eigenvalues = if discriminant.is_zero() {
            Eigenvalues::Double(&trace / rat(2))
        } else if discriminant.is_negative() {
            Eigenvalues::ComplexConjugate
        } else {
            match rational_sqrt(&discriminant) {
                Some(s) => Eigenvalues::Rational((&trace + &s) / rat(2), (&trace - &s) / rat(2)),
                None => Eigenvalues::IrrationalReal,
            }
        };
        EigenData {
            trace,
            det,
            discriminant,
            eigenvalues,
        }
    }

    pub fn both_zero(&self) -> bool {
        self.trace.is_zero() && self.det.is_zero()
    }

    /// The eigenvalues when they are rational, with multiplicity.
    pub fn rational_pair(&self) -> Option<(Rational, Rational)> {
        match &self.eigenvalues {
            Eigenvalues::Rational(a, b) => Some((a.clone(), b.clone())),
            Eigenvalues::Double(l) => Some((l.clone(), l.clone())),
            _ => None,
        }
    }
}

/// Whether `λ₁/λ₂ ∈ Q⁺`. A zero eigenvalue next to a nonzero one gives ratio 0, which is
/// not positive.
pub fn ratio_in_positive_rationals(e: &EigenData) -> Result<bool> {
    if e.both_zero() {
        return Err(Error::invalid("both eigenvalues vanish"));
    }
    Ok(match &e.eigenvalues {
        Eigenvalues::Rational(a, b) => (a * b).is_positive(),
        Eigenvalues::Double(_) => true,
        Eigenvalues::IrrationalReal | Eigenvalues::ComplexConjugate => false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingularityTag {
    Reduced,
    PreSimpleAResonant,
    TypeCShape,
    NilpotentNonPreSimple,
    ZeroLinearNonPreSimple,
    Smooth,
    NotSingular,
}

impl SingularityTag {
    pub fn name(self) -> &'static str {
        match self {
            SingularityTag::Reduced => "Reduced",
            SingularityTag::PreSimpleAResonant => "PreSimpleA_Resonant",
            SingularityTag::TypeCShape => "TypeC_Shape",
            SingularityTag::NilpotentNonPreSimple => "Nilpotent_NonPreSimple",
            SingularityTag::ZeroLinearNonPreSimple => "ZeroLinear_NonPreSimple",
            SingularityTag::Smooth => "Smooth",
            SingularityTag::NotSingular => "NotSingular",
        }
    }

    pub fn is_reduced(self) -> bool {
        self == SingularityTag::Reduced
    }
}

/// Type (C) data: eigenvalue ratio `r` and the coefficient of the resonant term that
/// obstructs an invariant curve along the weak eigendirection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCData {
    pub r: u32,
    pub obstruction: Rational,
}

/// A classification together with the data needed to recheck it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityClass {
    pub tag: SingularityTag,
    pub point: Vec<Rational>,
    /// Factor removed by saturating the form before classifying.
    pub saturating_factor: Polynomial,
    /// Coefficients of the saturated form at the point (nonsingular points only).
    pub value: Option<Vec<Rational>>,
    /// Minimal order of the coefficients at the point.
    pub order: Option<u32>,
    pub linear_part: Option<[[Rational; 2]; 2]>,
    pub eigen: Option<EigenData>,
    pub type_c: Option<TypeCData>,
    /// Resonance among the type (A) parameters, for resonant pre-simple points.
    pub resonance: Option<Vec<u64>>,
}

impl SingularityClass {
    fn bare(tag: SingularityTag, point: &[Rational], factor: Polynomial) -> Self {
        SingularityClass {
            tag,
            point: point.to_vec(),
            saturating_factor: factor,
            value: None,
            order: None,
            linear_part: None,
            eigen: None,
            type_c: None,
            resonance: None,
        }
    }
}

pub fn classify_reduced_2d(form: &OneForm, point: &[Rational]) -> Result<SingularityClass> {
    if form.n() != 2 {
        return Err(Error::unsupported("reduced-singularity classification is planar only"));
    }
    if point.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: point.len(),
        });
    }
    let sat = saturate_form(form)?;
    let w = sat.form;
    if singular_ideal(&w).is_unit()? {
        return Ok(SingularityClass::bare(SingularityTag::Smooth, point, sat.factor));
    }
    let value = w
        .coeffs()
        .iter()
        .map(|c| c.evaluate(point))
        .collect::<Result<Vec<_>>>()?;
    if value.iter().any(|v| !v.is_zero()) {
        let mut c = SingularityClass::bare(SingularityTag::NotSingular, point, sat.factor);
        c.value = Some(value);
        return Ok(c);
    }
    let order = w
        .coeffs()
        .iter()
        .map(|c| c.order_at(point))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .and_then(|o| o.finite());
    let df = dual_field_2d(&w, point)?;
    let m = df.linear_part.clone();
    let mut class = SingularityClass::bare(SingularityTag::Reduced, point, sat.factor);
    class.order = order;
    class.linear_part = Some(m.clone());
    if m.iter().flatten().all(Zero::is_zero) {
        class.tag = SingularityTag::ZeroLinearNonPreSimple;
        return Ok(class);
    }
    let eigen = EigenData::from_matrix(&m);
    class.eigen = Some(eigen.clone());
    if eigen.both_zero() {
        class.tag = SingularityTag::NilpotentNonPreSimple;
        return Ok(class);
    }
    if !ratio_in_positive_rationals(&eigen)? {
        return Ok(class);
    }
    let (l1, l2) = eigen.rational_pair().expect("positive rational ratio forces rational eigenvalues");
    if l1 == l2 {
        let scalar = m[0][1].is_zero() && m[1][0].is_zero();
        if scalar {
            class.tag = SingularityTag::PreSimpleAResonant;
            class.resonance = resonance_check(&[-l2, l1]);
        } else {
            class.tag = SingularityTag::TypeCShape;
            class.type_c = Some(TypeCData {
                r: 1,
                obstruction: if m[0][1].is_zero() { m[1][0].clone() } else { m[0][1].clone() },
            });
        }
        return Ok(class);
    }
    let (strong, weak) = if l1.abs() > l2.abs() { (l1, l2) } else { (l2, l1) };
    let ratio = &strong / &weak;
    if ratio.is_integer() {
        let r = ratio.to_integer().to_u32().ok_or_else(|| Error::unsupported("eigenvalue ratio too large"))?;
        let obstruction = invariant_curve_obstruction(&df.field, &m, &strong, &weak, r)?;
        if !obstruction.is_zero() {
            class.tag = SingularityTag::TypeCShape;
            class.type_c = Some(TypeCData { r, obstruction });
            return Ok(class);
        }
    }
    class.tag = SingularityTag::PreSimpleAResonant;
    class.resonance = resonance_check(&[-weak, strong]);
    Ok(class)
}

fn eigenvector(m: &[[Rational; 2]; 2], l: &Rational) -> [Rational; 2] {
    let a = &m[0][0] - l;
    let b = m[0][1].clone();
    if !a.is_zero() || !b.is_zero() {
        return [-b, a];
    }
    let c = m[1][0].clone();
    let d = &m[1][1] - l;
    if !c.is_zero() || !d.is_zero() {
        [-d, c]
    } else {
        [rat(1), rat(0)]
    }
}

/// With eigenvalues `λ_s = r λ_w`, solves `u_s = φ(u_w)` order by order for an invariant
/// curve tangent to the weak direction and returns the coefficient that cannot be
/// cancelled at order `r`. It vanishes exactly when the resonant term is absent.
fn invariant_curve_obstruction(
    field: &[Polynomial; 2],
    m: &[[Rational; 2]; 2],
    strong: &Rational,
    weak: &Rational,
    r: u32,
) -> Result<Rational> {
    let ctx = field[0].ctx().clone();
    let vs = eigenvector(m, strong);
    let vw = eigenvector(m, weak);
    let det = &vs[0] * &vw[1] - &vw[0] * &vs[1];
    let u0 = Polynomial::var(&ctx, 0);
    let u1 = Polynomial::var(&ctx, 1);
    let images = [
        &u0.scale(&vs[0]) + &u1.scale(&vw[0]),
        &u0.scale(&vs[1]) + &u1.scale(&vw[1]),
    ];
    let xs = [
        field[0].substitute(&ctx, &images)?,
        field[1].substitute(&ctx, &images)?,
    ];
    // Inverse of the eigenbasis matrix applied to X.
    let y = [
        (&xs[0].scale(&vw[1]) - &xs[1].scale(&vw[0])).scale(&det.recip()),
        (&xs[1].scale(&vs[0]) - &xs[0].scale(&vs[1])).scale(&det.recip()),
    ];
    let line = VarContext::new(&["s"])?;
    let s = Polynomial::var(&line, 0);
    let mut phi = Polynomial::zero(&line);
    for k in 2..=r.max(2) {
        let at = [phi.clone(), s.clone()];
        let e = &y[0].substitute(&line, &at)? - &(&phi.derivative(0) * &y[1].substitute(&line, &at)?);
        let ek = e.coefficient(&Monomial::from_exponents(vec![k]));
        if k == r {
            return Ok(ek);
        }
        let c = -ek / (strong - weak * rat(k as i64));
        phi = &phi + &Polynomial::monomial(&line, Monomial::from_exponents(vec![k]), c);
    }
    unreachable!("loop returns at k = r")
}

/// A nonzero `φ ∈ N₀ⁿ` with `Σ φ_j λ_j = 0` and minimal `Σ φ_j`, if any exists.
pub fn resonance_check(lambdas: &[Rational]) -> Option<Vec<u64>> {
    let n = lambdas.len();
    if let Some(j) = lambdas.iter().position(Zero::is_zero) {
        let mut phi = vec![0; n];
        phi[j] = 1;
        return Some(phi);
    }
    let den = lambdas.iter().fold(BigInt::one(), |acc, l| acc.lcm(l.denom()));
    let w: Vec<BigInt> = lambdas.iter().map(|l| (l * Rational::from_integer(den.clone())).to_integer()).collect();
    let pos: Vec<usize> = (0..n).filter(|&j| w[j].is_positive()).collect();
    let neg: Vec<usize> = (0..n).filter(|&j| w[j].is_negative()).collect();
    if pos.is_empty() || neg.is_empty() {
        return None;
    }
    // Best two-entry witness, which bounds the search depth.
    let mut best: Option<(BigInt, Vec<u64>)> = None;
    for &p in &pos {
        for &q in &neg {
            let g = w[p].gcd(&w[q]);
            let fp = (-&w[q]) / &g;
            let fq = &w[p] / &g;
            let total = &fp + &fq;
            if best.as_ref().is_none_or(|(b, _)| &total < b) {
                let mut phi = vec![0u64; n];
                phi[p] = fp.to_u64()?;
                phi[q] = fq.to_u64()?;
                best = Some((total, phi));
            }
        }
    }
    let (bound, pair) = best.expect("mixed signs give a pair");
    let wmax = w.iter().map(|x| x.abs()).max().expect("nonempty");
    let (Some(bound), Some(wmax), Some(wi)) = (
        bound.to_i64(),
        wmax.to_i64(),
        w.iter().map(|x| x.to_i64()).collect::<Option<Vec<_>>>(),
    ) else {
        return Some(pair);
    };
    if bound.saturating_mul(wmax) > SEARCH_LIMIT {
        return Some(pair);
    }
    let mut level: BTreeMap<i64, Vec<u64>> = BTreeMap::from([(0, vec![0; n])]);
    for s in 1..=bound {
        let slack = (bound - s) * wmax;
        let mut next: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
        for (v, phi) in &level {
            for j in 0..n {
                let nv = v + wi[j];
                if nv.abs() <= slack && !next.contains_key(&nv) {
                    let mut p = phi.clone();
                    p[j] += 1;
                    next.insert(nv, p);
                }
            }
        }
        if let Some(phi) = next.remove(&0) {
            return Some(phi);
        }
        level = next;
    }
    Some(pair)
}

/// Above this many partial sums per level the minimal-sum search falls back to the best
/// two-entry witness.
const SEARCH_LIMIT: i64 = 1_000_000;

/// Adapted order `ν` and adapted multiplicity `μ` relative to `E = V(∏_{i∈A} (x_i - P_i))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedOrders {
    pub nu: u32,
    pub mu: u32,
    /// Coefficients of the adapted presentation, in coordinates centred at the point.
    pub b: Vec<Polynomial>,
}

pub fn adapted_order(form: &OneForm, a: &[usize], point: &[Rational]) -> Result<AdaptedOrders> {
    let n = form.n();
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != a.len() || sorted.iter().any(|&i| i >= n) {
        return Err(Error::invalid("divisor indices must be distinct coordinates"));
    }
    let w = form.translate(point)?;
    let ctx = w.ctx().clone();
    for &i in a {
        if !invariant_hypersurface_check(&w, &Polynomial::var(&ctx, i))? {
            return Err(Error::invalid(format!("V({}) is not invariant", ctx.name(i))));
        }
    }
    let prod = |skip: Option<usize>| {
        a.iter()
            .filter(|&&j| Some(j) != skip)
            .fold(Polynomial::one(&ctx), |acc, &j| &acc * &Polynomial::var(&ctx, j))
    };
    let mut b = Vec::with_capacity(n);
    for (i, f) in w.coeffs().iter().enumerate() {
        let d = if a.contains(&i) { prod(Some(i)) } else { prod(None) };
        b.push(f.exact_divide(&d).map_err(|_| {
            Error::invalid(format!("coefficient of d({}) is not divisible by {d}", ctx.name(i)))
        })?);
    }
    let ord = |p: &Polynomial| p.low_degree().finite().unwrap_or(u32::MAX);
    let nu = b.iter().map(ord).min().unwrap_or(u32::MAX);
    let in_a = (0..n).filter(|i| a.contains(i)).map(|i| ord(&b[i])).min();
    let out_a = (0..n).filter(|i| !a.contains(i)).map(|i| ord(&b[i]).saturating_add(1)).min();
    let mu = in_a.into_iter().chain(out_a).min().unwrap_or(u32::MAX);
    Ok(AdaptedOrders { nu, mu, b })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresimpleBranch {
    /// `ν = 0`.
    NuZero,
    /// `ν = μ = 1` and some `b_i`, `i ∈ A`, has a linear term outside the divisor variables.
    LinearPart,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresimpleReport {
    pub presimple: bool,
    pub branch: Option<PresimpleBranch>,
    pub orders: AdaptedOrders,
}

pub fn presimple_check(form: &OneForm, a: &[usize], point: &[Rational]) -> Result<PresimpleReport> {
    let orders = adapted_order(form, a, point)?;
    let branch = if orders.nu == 0 {
        Some(PresimpleBranch::NuZero)
    } else if orders.nu == 1
        && orders.mu == 1
        && a.iter().any(|&i| {
            linear_coefficients(&orders.b[i])
                .iter()
                .enumerate()
                .any(|(k, c)| !c.is_zero() && !a.contains(&k))
        })
    {
        Some(PresimpleBranch::LinearPart)
    } else {
        None
    };
    Ok(PresimpleReport {
        presimple: branch.is_some(),
        branch,
        orders,
    })
}

/// Runs [`presimple_check`] for every set of coordinate hyperplanes through the point
/// that are invariant.
pub fn presimple_search(form: &OneForm, point: &[Rational]) -> Result<Vec<(Vec<usize>, PresimpleReport)>> {
    let w = form.translate(point)?;
    let mut invariant = Vec::new();
    for i in 0..w.n() {
        if invariant_hypersurface_check(&w, &Polynomial::var(w.ctx(), i))? {
            invariant.push(i);
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << invariant.len()) {
        let a: Vec<usize> = invariant
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &i)| i)
            .collect();
        let report = presimple_check(form, &a, point)?;
        out.push((a, report));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalFormType {
    A,
    B,
    C,
}

/// Parameters of a pre-simple normal form in the first `t` coordinates.
///
/// * type A: `lambda = [λ_1, ..., λ_t]`, all nonzero, `p` and `psi` empty;
/// * type B: `p = [p_1, ..., p_k]`, `lambda = [λ_2, ..., λ_t]`, `psi[j]` the coefficient of
///   `s^j` in `Ψ(s)` with `psi[0] = 0`;
/// * type C: `p = [p_2, ..., p_k]`, `lambda = [λ_2, ..., λ_t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormSpec {
    pub kind: NormalFormType,
    pub t: usize,
    pub k: usize,
    pub p: Vec<u32>,
    pub lambda: Vec<Rational>,
    pub psi: Vec<Rational>,
}

impl NormalFormSpec {
    pub fn type_a(lambda: Vec<Rational>) -> Self {
        NormalFormSpec {
            kind: NormalFormType::A,
            t: lambda.len(),
            k: 0,
            p: Vec::new(),
            lambda,
            psi: Vec::new(),
        }
    }

    pub fn type_b(t: usize, p: Vec<u32>, lambda: Vec<Rational>, psi: Vec<Rational>) -> Self {
        NormalFormSpec {
            kind: NormalFormType::B,
            t,
            k: p.len(),
            p,
            lambda,
            psi,
        }
    }

    pub fn type_c(t: usize, p: Vec<u32>, lambda: Vec<Rational>) -> Self {
        NormalFormSpec {
            kind: NormalFormType::C,
            t,
            k: p.len() + 1,
            p,
            lambda,
            psi: Vec::new(),
        }
    }

    /// `y dx - (r x + a y^r) dy`.
    pub fn type_c_slice(r: u32, a: Rational) -> Self {
        Self::type_c(2, vec![r], vec![-a])
    }

    /// `x, y, z` for `t ≤ 3`, otherwise `x1, ..., xt`.
    pub fn default_ctx(&self) -> Ctx {
        let names: Vec<String> = if self.t <= 3 {
            ["x", "y", "z"][..self.t].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=self.t).map(|i| format!("x{i}")).collect()
        };
        VarContext::new(&names).expect("distinct names")
    }

    fn validate(&self) -> Result<()> {
        let t = self.t;
        let bad = |msg: &str| Err(Error::invalid(format!("type {:?} normal form: {msg}", self.kind)));
        if t == 0 {
            return bad("t must be positive");
        }
        match self.kind {
            NormalFormType::A => {
                if self.lambda.len() != t || self.lambda.iter().any(Zero::is_zero) {
                    return bad("needs t nonzero λ");
                }
            }
            NormalFormType::B => {
                if self.k == 0 || self.k > t || self.p.len() != self.k || self.p.contains(&0) {
                    return bad("needs 1 ≤ k ≤ t positive exponents p");
                }
                if self.p.iter().fold(0u32, |g, &x| g.gcd(&x)) != 1 {
                    return bad("p must have no common factor");
                }
                if self.lambda.len() != t - 1 || self.lambda[self.k - 1..].iter().any(Zero::is_zero) {
                    return bad("needs λ_2..λ_t with λ_{k+1}..λ_t nonzero");
                }
                if self.psi.first().is_some_and(|c| !c.is_zero()) {
                    return bad("Ψ must vanish at 0");
                }
            }
            NormalFormType::C => {
                if self.k < 2 || self.k > t || self.p.len() != self.k - 1 || self.p.contains(&0) {
                    return bad("needs 2 ≤ k ≤ t and positive p_2..p_k");
                }
                if self.lambda.len() != t - 1 || self.lambda[self.k - 1..].iter().any(Zero::is_zero) {
                    return bad("needs λ_2..λ_t with λ_{k+1}..λ_t nonzero");
                }
            }
        }
        Ok(())
    }
}

/// The polynomial 1-form of a normal form over `ctx`, which needs at least `t` variables;
/// further variables are cylinder directions.
pub fn normal_form_generate(spec: &NormalFormSpec, ctx: &Ctx) -> Result<OneForm> {
    spec.validate()?;
    let (t, k) = (spec.t, spec.k);
    let n = ctx.len();
    if n < t {
        return Err(Error::invalid(format!("a type {:?} form with t = {t} needs {t} variables", spec.kind)));
    }
    let x = |i: usize| Polynomial::var(ctx, i);
    let prod_except = |from: usize, skip: usize| {
        (from..t).filter(|&j| j != skip).fold(Polynomial::one(ctx), |acc, j| &acc * &x(j))
    };
    let c = |q: &Rational| Polynomial::constant(ctx, q.clone());
    let mut coeffs = vec![Polynomial::zero(ctx); n];
    match spec.kind {
        NormalFormType::A => {
            for i in 0..t {
                coeffs[i] = &c(&spec.lambda[i]) * &prod_except(0, i);
            }
        }
        NormalFormType::B => {
            let m = (0..k).fold(Polynomial::one(ctx), |acc, i| &acc * &x(i).pow(spec.p[i]));
            let psi = spec
                .psi
                .iter()
                .enumerate()
                .fold(Polynomial::zero(ctx), |acc, (j, cj)| &acc + &(&c(cj) * &m.pow(j as u32)));
            for i in 0..t {
                let mut a = Polynomial::zero(ctx);
                if i < k {
                    a = &a + &Polynomial::from_int(ctx, spec.p[i] as i64);
                }
                if i >= 1 {
                    a = &a + &(&c(&spec.lambda[i - 1]) * &psi);
                }
                coeffs[i] = &a * &prod_except(0, i);
            }
        }
        NormalFormType::C => {
            let m = (1..k).fold(Polynomial::one(ctx), |acc, i| &acc * &x(i).pow(spec.p[i - 1]));
            coeffs[0] = prod_except(1, 0);
            for i in 1..t {
                let mut a = &c(&spec.lambda[i - 1]) * &m;
                if i < k {
                    a = &a - &x(0).scale(&rat(spec.p[i - 1] as i64));
                }
                coeffs[i] = &a * &prod_except(1, i);
            }
        }
    }
    OneForm::new(ctx, coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeVerdict {
    EqualsNcOracle,
    /// The foliation jets contain the normal-crossings jets and more.
    SchemeStrictlyLarger,
    Other,
}

impl ProbeVerdict {
    pub fn name(self) -> &'static str {
        match self {
            ProbeVerdict::EqualsNcOracle => "EqualsNCOracle",
            ProbeVerdict::SchemeStrictlyLarger => "SchemeStrictlyLarger",
            ProbeVerdict::Other => "Other",
        }
    }
}

/// Comparison of the foliation jet fibre `J_k(F, P)` with the normal-crossings fibre
/// `N_k` at one order. Both sides are compared as sets; `N_k` is radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderComparison {
    pub order: usize,
    pub equal: bool,
    /// `V(N_k) ⊆ V(J_k(F))`.
    pub contains_nc: bool,
    /// `V(J_k(F)) ⊆ V(N_k)`.
    pub within_nc: bool,
    pub nc_components: usize,
    /// Components of `V(N_k)` that lie in `V(J_k(F))`.
    pub components_present: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetProbeReport {
    pub verdict: ProbeVerdict,
    pub divergence_order: Option<usize>,
    pub per_order: Vec<OrderComparison>,
}

/// Compares jet fibres of the form at `P` with those of `V(x_1 ⋯ x_t)` translated to `P`,
/// for orders `1..=m`, in the given coordinates.
pub fn jet_comparison_probe(form: &OneForm, t: usize, m: usize, point: &[Rational]) -> Result<JetProbeReport> {
    let n = form.n();
    if t == 0 || t > n {
        return Err(Error::invalid(format!("t must lie in 1..={n}")));
    }
    if m == 0 {
        return Err(Error::invalid("probe order must be positive"));
    }
    let vars: Vec<usize> = (0..t).collect();
    let fiber = jet_fiber(&jet_ideal_foliation(form, m)?, point)?;
    let mut per_order = Vec::with_capacity(m);
    let mut verdict = ProbeVerdict::EqualsNcOracle;
    let mut divergence_order = None;
    for k in 1..=m {
        let jf = jet_truncate(&fiber, k)?.ideal();
        let nc = nc_jet_oracle(form.ctx(), &vars, k)?;
        let nc_ideal = nc.intersection.embed(jf.ctx())?;
        let contains_nc = jf.contains_ideal(&nc_ideal, Containment::Set)?;
        let within_nc = nc_ideal.contains_ideal(&jf, Containment::Scheme)?;
        let mut present = 0;
        for c in &nc.components {
            if c.embed(jf.ctx())?.contains_ideal(&jf, Containment::Scheme)? {
                present += 1;
            }
        }
        let nc_components = if nc.is_full_space() { 1 } else { nc.components.len() };
        if nc.is_full_space() && jf.is_zero() {
            present = 1;
        }
        let equal = contains_nc && within_nc;
        per_order.push(OrderComparison {
            order: k,
            equal,
            contains_nc,
            within_nc,
            nc_components,
            components_present: present,
        });
        if !equal && divergence_order.is_none() {
            divergence_order = Some(k);
            verdict = if within_nc {
                ProbeVerdict::SchemeStrictlyLarger
            } else {
                ProbeVerdict::Other
            };
        }
    }
    Ok(JetProbeReport {
        verdict,
        divergence_order,
        per_order,
    })
}

fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n {
            out.push(Monomial::from_exponents(prefix.clone()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Upper bound for the dimensional type at `P`: `n` minus the rank at `P` of the
/// polynomial vector fields of degree `≤ deg_bound` annihilated by the form.
pub fn dimensional_type_estimate(form: &OneForm, point: &[Rational], deg_bound: u32) -> Result<usize> {
    let w = form.translate(point)?;
    let n = w.n();
    let basis = monomials_up_to(n, deg_bound);
    let ncols = n * basis.len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut row_of: std::collections::HashMap<Monomial, usize> = std::collections::HashMap::new();
    for (k, b) in w.coeffs().iter().enumerate() {
        for (a, alpha) in basis.iter().enumerate() {
            let col = k * basis.len() + a;
            for (mono, c) in b.terms() {
                let gamma = mono.mul(alpha);
                let r = *row_of.entry(gamma).or_insert_with(|| {
                    rows.push(vec![Rational::zero(); ncols]);
                    rows.len() - 1
                });
                rows[r][col] += c;
            }
        }
    }
    let kernel = linalg::nullspace(&rows, ncols);
    let const_idx = basis.iter().position(Monomial::is_one).expect("constant monomial");
    let at_point: Vec<Vec<Rational>> = kernel
        .iter()
        .map(|v| (0..n).map(|k| v[k * basis.len() + const_idx].clone()).collect())
        .collect();
    Ok(n - linalg::rank(&at_point))
}

/// Invariant lines through a planar point: the coordinate lines and the lines along
/// rational eigendirections of the linear part.
pub fn invariant_lines_through(form: &OneForm, point: &[Rational]) -> Result<Vec<Polynomial>> {
    if form.n() != 2 {
        return Err(Error::unsupported("invariant line search is planar only"));
    }
    let ctx = form.ctx();
    let dx = &Polynomial::var(ctx, 0) - &Polynomial::constant(ctx, point[0].clone());
    let dy = &Polynomial::var(ctx, 1) - &Polynomial::constant(ctx, point[1].clone());
    let mut candidates = vec![dx.clone(), dy.clone()];
    let df = dual_field_2d(form, point)?;
    if let Some((a, b)) = EigenData::from_matrix(&df.linear_part).rational_pair() {
        for l in [a, b] {
            let v = eigenvector(&df.linear_part, &l);
            candidates.push((&dx.scale(&v[1]) - &dy.scale(&v[0])).monic());
        }
    }
    let mut out: Vec<Polynomial> = Vec::new();
    for g in candidates {
        let g = g.monic();
        if !g.is_constant() && !out.contains(&g) && invariant_hypersurface_check(form, &g)? {
            out.push(g);
        }
    }
    Ok(out)
}

/// `V(x_1 ⋯ x_t)` as an ideal, for oracles and examples.
pub fn nc_divisor(ctx: &Ctx, t: usize) -> Result<Ideal> {
    let p = (0..t).fold(Polynomial::one(ctx), |acc, i| &acc * &Polynomial::var(ctx, i));
    Ideal::new(ctx, [p])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn xy() -> (Ctx, Polynomial, Polynomial) {
        let ctx = VarContext::new(&["x", "y"]).unwrap();
        (ctx.clone(), Polynomial::var(&ctx, 0), Polynomial::var(&ctx, 1))
    }

    fn origin() -> Vec<Rational> {
        vec![rat(0), rat(0)]
    }

    fn diag(a: i64, b: i64) -> [[Rational; 2]; 2] {
        [[rat(a), rat(0)], [rat(0), rat(b)]]
    }

    #[test]
    fn eigen_ratios() {
        assert!(!ratio_in_positive_rationals(&EigenData::from_matrix(&diag(1, -1))).unwrap());
        assert!(ratio_in_positive_rationals(&EigenData::from_matrix(&diag(1, 1))).unwrap());
        let rot = EigenData::from_trace_det(rat(0), rat(1));
        assert_eq!(rot.eigenvalues, Eigenvalues::ComplexConjugate);
        assert!(!ratio_in_positive_rationals(&rot).unwrap());
        let irr = EigenData::from_trace_det(rat(1), rat(-1));
        assert_eq!(irr.eigenvalues, Eigenvalues::IrrationalReal);
        assert!(!ratio_in_positive_rationals(&EigenData::from_matrix(&diag(0, 3))).unwrap());
        assert!(ratio_in_positive_rationals(&EigenData::from_matrix(&diag(0, 0))).is_err());
    }

    #[test]
    fn classification_tags() {
        let (ctx, x, y) = xy();
        let o = origin();
        let f = |a: Polynomial, b: Polynomial| OneForm::new(&ctx, vec![a, b]).unwrap();
        let tag = |w: &OneForm| classify_reduced_2d(w, &o).unwrap().tag;
        assert_eq!(tag(&f(y.clone(), x.clone())), SingularityTag::Reduced);
        let c = classify_reduced_2d(&f(y.clone(), -&(&x + &y)), &o).unwrap();
        assert_eq!(c.tag, SingularityTag::TypeCShape);
        assert_eq!(c.type_c.unwrap().r, 1);
        assert_eq!(tag(&f(-&x.pow(2), y.clone())), SingularityTag::NilpotentNonPreSimple);
        assert_eq!(tag(&f(y.pow(2), -&x.pow(2))), SingularityTag::ZeroLinearNonPreSimple);
        let radial = classify_reduced_2d(&f(y.clone(), -&x), &o).unwrap();
        assert_eq!(radial.tag, SingularityTag::PreSimpleAResonant);
        assert_eq!(radial.resonance, Some(vec![1, 1]));
        assert_eq!(tag(&f(Polynomial::one(&ctx), x.clone())), SingularityTag::Smooth);
        let w = f(y.clone(), x.clone());
        assert_eq!(classify_reduced_2d(&w, &[rat(1), rat(0)]).unwrap().tag, SingularityTag::NotSingular);
    }

    #[test]
    fn integer_ratio_type_c_needs_the_resonant_term() {
        let (ctx, x, y) = xy();
        let o = origin();
        for r in 2..=3u32 {
            let c = normal_form_generate(&NormalFormSpec::type_c_slice(r, rat(1)), &ctx).unwrap();
            let cl = classify_reduced_2d(&c, &o).unwrap();
            assert_eq!(cl.tag, SingularityTag::TypeCShape);
            assert_eq!(cl.type_c.unwrap().r, r);
            let linear = OneForm::new(&ctx, vec![y.clone(), -&x.scale(&rat(r as i64))]).unwrap();
            assert_eq!(classify_reduced_2d(&linear, &o).unwrap().tag, SingularityTag::PreSimpleAResonant);
        }
        let half = OneForm::new(&ctx, vec![y.clone(), -&x.scale(&ratio(3, 2))]).unwrap();
        assert_eq!(classify_reduced_2d(&half, &o).unwrap().tag, SingularityTag::PreSimpleAResonant);
    }

    #[test]
    fn resonance_witnesses() {
        assert_eq!(resonance_check(&[rat(1), rat(2)]), None);
        assert_eq!(resonance_check(&[rat(1), rat(-1)]), Some(vec![1, 1]));
        assert_eq!(resonance_check(&[rat(0), rat(5)]), Some(vec![1, 0]));
        assert_eq!(resonance_check(&[rat(3), rat(5), rat(-4)]), Some(vec![1, 1, 2]));
        assert_eq!(resonance_check(&[ratio(1, 2), ratio(-1, 3)]), Some(vec![2, 3]));
    }

    #[test]
    fn adapted_orders() {
        let (ctx, x, y) = xy();
        let o = origin();
        let a = normal_form_generate(&NormalFormSpec::type_a(vec![rat(1), rat(2)]), &ctx).unwrap();
        assert_eq!(adapted_order(&a, &[0, 1], &o).unwrap().nu, 0);
        let c = OneForm::new(&ctx, vec![y.clone(), -&(&x + &y)]).unwrap();
        let r = adapted_order(&c, &[1], &o).unwrap();
        assert!(r.b[0].is_one());
        assert_eq!(r.nu, 0);
        assert!(adapted_order(&c, &[0], &o).is_err());
        let high = OneForm::new(&ctx, vec![y.pow(2), -&x.pow(2)]).unwrap();
        assert!(adapted_order(&high, &[], &o).unwrap().nu >= 2);
    }

    #[test]
    fn presimple() {
        let (ctx, x, y) = xy();
        let o = origin();
        let a = normal_form_generate(&NormalFormSpec::type_a(vec![rat(1), rat(-3)]), &ctx).unwrap();
        assert!(presimple_check(&a, &[0, 1], &o).unwrap().presimple);
        let nil = OneForm::new(&ctx, vec![-&x.pow(2), y.clone()]).unwrap();
        let search = presimple_search(&nil, &o).unwrap();
        assert_eq!(search.len(), 1);
        assert!(!search[0].1.presimple);
        let c = normal_form_generate(&NormalFormSpec::type_c_slice(2, rat(1)), &ctx).unwrap();
        assert!(presimple_check(&c, &[1], &o).unwrap().presimple);
    }

    #[test]
    fn normal_forms() {
        let (ctx, ..) = xy();
        let a = normal_form_generate(&NormalFormSpec::type_a(vec![rat(1), rat(2)]), &ctx).unwrap();
        assert_eq!(a.to_string(), "y*d(x) + 2*x*d(y)");
        let c = normal_form_generate(&NormalFormSpec::type_c_slice(1, rat(1)), &ctx).unwrap();
        assert_eq!(c.to_string(), "y*d(x) + (-x - y)*d(y)");
        let b = normal_form_generate(&NormalFormSpec::type_b(2, vec![1], vec![rat(1)], vec![rat(0), rat(1)]), &ctx).unwrap();
        assert_eq!(b.to_string(), "y*d(x) + x^2*d(y)");
        assert!(normal_form_generate(&NormalFormSpec::type_b(2, vec![2], vec![rat(1)], vec![rat(1)]), &ctx).is_err());
    }

    #[test]
    fn probe_verdicts() {
        let (ctx, x, y) = xy();
        let o = origin();
        let a = normal_form_generate(&NormalFormSpec::type_a(vec![rat(1), rat(2)]), &ctx).unwrap();
        let r = jet_comparison_probe(&a, 2, 4, &o).unwrap();
        assert_eq!(r.verdict, ProbeVerdict::EqualsNcOracle);
        let res = OneForm::new(&ctx, vec![y.clone(), -&x]).unwrap();
        let r = jet_comparison_probe(&res, 2, 2, &o).unwrap();
        assert_eq!((r.verdict, r.divergence_order), (ProbeVerdict::SchemeStrictlyLarger, Some(2)));
        let c = OneForm::new(&ctx, vec![y.clone(), -&(&x + &y)]).unwrap();
        let r = jet_comparison_probe(&c, 2, 2, &o).unwrap();
        assert_eq!(r.divergence_order, Some(2));
        let last = r.per_order.last().unwrap();
        assert_eq!((last.nc_components, last.components_present), (2, 1));
    }

    #[test]
    fn dimensional_types() {
        let ctx = VarContext::new(&["x", "y", "z"]).unwrap();
        let o = vec![rat(0); 3];
        let x = Polynomial::var(&ctx, 0);
        let y = Polynomial::var(&ctx, 1);
        let cyl = OneForm::new(&ctx, vec![y.clone(), x.clone(), Polynomial::zero(&ctx)]).unwrap();
        assert_eq!(dimensional_type_estimate(&cyl, &o, 2).unwrap(), 2);
        let dx = OneForm::differential(&x);
        assert_eq!(dimensional_type_estimate(&dx, &[rat(3), rat(1), rat(0)], 1).unwrap(), 1);
        let c4 = VarContext::new(&["x", "y", "z", "w"]).unwrap();
        let a = normal_form_generate(&NormalFormSpec::type_a(vec![rat(1), rat(2), rat(3)]), &c4).unwrap();
        assert_eq!(dimensional_type_estimate(&a, &vec![rat(0); 4], 1).unwrap(), 3);
    }

    #[test]
    fn lines_through_a_saddle() {
        let (ctx, x, y) = xy();
        let w = OneForm::new(&ctx, vec![y.clone(), x.clone()]).unwrap();
        let lines = invariant_lines_through(&w, &origin()).unwrap();
        assert_eq!(lines, vec![x, y]);
    }
}
