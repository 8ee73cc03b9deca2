//! Polynomial 1-forms `ω = Σ b_i dx_i` and the foliation operations on them.

use std::fmt;

use crate::algebra::{
    poly_gcd_all, same_ctx, Ctx, Monomial, PointOrder, PolyMap, Polynomial, Rational, VarContext,
};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// Polynomial 1-form over a context; `coeffs[i]` multiplies `dx_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneForm {
    ctx: Ctx,
    coeffs: Vec<Polynomial>,
}

impl OneForm {
    pub fn new(ctx: &Ctx, coeffs: Vec<Polynomial>) -> Result<Self> {
        if coeffs.len() != ctx.len() {
            return Err(Error::DimensionMismatch {
                expected: ctx.len(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| !same_ctx(c.ctx(), ctx)) {
            return Err(Error::ContextMismatch);
        }
        Ok(OneForm {
            ctx: ctx.clone(),
            coeffs,
        })
    }

    /// `dg`.
    pub fn differential(g: &Polynomial) -> Self {
        let ctx = g.ctx().clone();
        let coeffs = (0..ctx.len()).map(|i| g.derivative(i)).collect();
        OneForm { ctx, coeffs }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Result<OneForm> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(f))
            .collect::<Result<Vec<_>>>()?;
        OneForm::new(&self.ctx, coeffs)
    }

    pub fn add(&self, other: &OneForm) -> Result<OneForm> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        OneForm::new(&self.ctx, coeffs)
    }

    /// The same form in coordinates centred at `p`.
    pub fn translate(&self, p: &[Rational]) -> Result<OneForm> {
        let coeffs = self.coeffs.iter().map(|c| c.translate(p)).collect::<Result<Vec<_>>>()?;
        OneForm::new(&self.ctx, coeffs)
    }

    /// `ω(X) = Σ b_i X_i`.
    pub fn contract(&self, field: &[Polynomial]) -> Result<Polynomial> {
        if field.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: field.len(),
            });
        }
        let mut acc = Polynomial::zero(&self.ctx);
        for (b, x) in self.coeffs.iter().zip(field) {
            acc = &acc + &b.checked_mul(x)?;
        }
        Ok(acc)
    }

    /// Whether `other = c · self` for a nonzero constant `c`.
    pub fn equals_up_to_constant(&self, other: &OneForm) -> bool {
        if !same_ctx(&self.ctx, &other.ctx) {
            return false;
        }
        let pivot = self.coeffs.iter().zip(&other.coeffs).find(|(a, _)| !a.is_zero());
        let Some((a, b)) = pivot else {
            return other.is_zero();
        };
        let Some(lb) = b.leading_coefficient() else {
            return false;
        };
        let c = lb / a.leading_coefficient().unwrap();
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| &a.scale(&c) == b)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = format!("d({})", self.ctx.name(i));
            let body = c.display_with(names);
            let piece = if c.num_terms() > 1 {
                format!("({body})*{d}")
            } else if body == "1" {
                d
            } else if body == "-1" {
                format!("-{d}")
            } else {
                format!("{body}*{d}")
            };
            parts.push(piece);
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(self.ctx.names()))
    }
}

/// Result of the Frobenius test `ω ∧ dω = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrabilityReport {
    pub integrable: bool,
    /// First nonzero coefficient `c_ijk` of `dx_i ∧ dx_j ∧ dx_k` (0-based indices).
    pub witness: Option<(usize, usize, usize, Polynomial)>,
}

pub fn integrability_check(form: &OneForm) -> IntegrabilityReport {
    let b = form.coeffs();
    let d = |f: &Polynomial, i: usize| f.derivative(i);
    let n = form.n();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let c = &(&(&b[i] * &(&d(&b[k], j) - &d(&b[j], k)))
                    + &(&b[j] * &(&d(&b[i], k) - &d(&b[k], i))))
                    + &(&b[k] * &(&d(&b[j], i) - &d(&b[i], j)));
                if !c.is_zero() {
                    return IntegrabilityReport {
                        integrable: false,
                        witness: Some((i, j, k, c)),
                    };
                }
            }
        }
    }
    IntegrabilityReport {
        integrable: true,
        witness: None,
    }
}

/// `ω = factor · form` with `form` saturated and `factor` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    pub factor: Polynomial,
    pub form: OneForm,
}

pub fn saturate_form(form: &OneForm) -> Result<Saturation> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    let g = poly_gcd_all(form.ctx(), form.coeffs())?;
    let coeffs = form
        .coeffs()
        .iter()
        .map(|c| c.exact_divide(&g))
        .collect::<Result<Vec<_>>>()?;
    Ok(Saturation {
        factor: g,
        form: OneForm::new(form.ctx(), coeffs)?,
    })
}

/// Whether the coefficients have no common nonconstant factor.
pub fn is_saturated(form: &OneForm) -> Result<bool> {
    Ok(saturate_form(form)?.factor.is_one())
}

/// `(b_1, ..., b_n)`. Its zero set has codimension at least two only for saturated forms.
pub fn singular_ideal(form: &OneForm) -> Ideal {
    Ideal::new(form.ctx(), form.coeffs().to_vec()).expect("coefficients share the form context")
}

/// `φ*ω = Σ_i b_i(φ) dφ_i` for `φ: source -> ctx(ω)`.
pub fn pullback_form(form: &OneForm, map: &PolyMap) -> Result<OneForm> {
    if !same_ctx(map.target(), form.ctx()) {
        return Err(Error::ContextMismatch);
    }
    let src = map.source();
    let pulled = form
        .coeffs()
        .iter()
        .map(|b| map.pull(b))
        .collect::<Result<Vec<_>>>()?;
    let mut coeffs = vec![Polynomial::zero(src); src.len()];
    for (bi, phi) in pulled.iter().zip(map.images()) {
        if bi.is_zero() {
            continue;
        }
        for (k, ck) in coeffs.iter_mut().enumerate() {
            let dphi = phi.derivative(k);
            if !dphi.is_zero() {
                *ck = &*ck + &(bi * &dphi);
            }
        }
    }
    OneForm::new(src, coeffs)
}

/// Fixes `x_i = c_i` for the listed indices and drops their `dx_i` terms. The result
/// lives over the remaining variables.
pub fn specialize(form: &OneForm, fixed: &[(usize, Rational)]) -> Result<OneForm> {
    let n = form.n();
    if let Some((i, _)) = fixed.iter().find(|(i, _)| *i >= n) {
        return Err(Error::invalid(format!("variable index {i} out of range")));
    }
    let is_fixed = |i: usize| fixed.iter().any(|(k, _)| *k == i);
    let names: Vec<&str> = (0..n).filter(|&i| !is_fixed(i)).map(|i| form.ctx().name(i)).collect();
    let small = VarContext::new(&names)?;
    let mut images = Vec::with_capacity(n);
    let mut next = 0;
    for i in 0..n {
        match fixed.iter().find(|(k, _)| *k == i) {
            Some((_, c)) => images.push(Polynomial::constant(&small, c.clone())),
            None => {
                images.push(Polynomial::var(&small, next));
                next += 1;
            }
        }
    }
    let coeffs = (0..n)
        .filter(|&i| !is_fixed(i))
        .map(|i| form.coeffs()[i].substitute(&small, &images))
        .collect::<Result<Vec<_>>>()?;
    OneForm::new(&small, coeffs)
}

/// `V(g)` is invariant when `g` divides every `b_i ∂_j g - b_j ∂_i g`.
pub fn invariant_hypersurface_check(form: &OneForm, g: &Polynomial) -> Result<bool> {
    if !same_ctx(form.ctx(), g.ctx()) {
        return Err(Error::ContextMismatch);
    }
    if g.is_constant() {
        return Err(Error::invalid("an invariant hypersurface needs a nonconstant equation"));
    }
    let b = form.coeffs();
    let dg: Vec<Polynomial> = (0..form.n()).map(|i| g.derivative(i)).collect();
    for i in 0..form.n() {
        for j in i + 1..form.n() {
            let c = &(&b[i] * &dg[j]) - &(&b[j] * &dg[i]);
            if !g.divides(&c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Vector field `X = (b, -a)` annihilating `ω = a dx + b dy`, in coordinates centred at a
/// point, with its linear part there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualField {
    pub point: Vec<Rational>,
    pub field: [Polynomial; 2],
    /// `linear_part[r][c]` is the coefficient of `x_c` in the linear part of `X_r`.
    pub linear_part: [[Rational; 2]; 2],
}

pub fn dual_field_2d(form: &OneForm, point: &[Rational]) -> Result<DualField> {
    if form.n() != 2 {
        return Err(Error::unsupported("dual vector fields are only built in dimension 2"));
    }
    let t = form.translate(point)?;
    let field = [t.coeffs()[1].clone(), -&t.coeffs()[0]];
    let lin = |p: &Polynomial, c: usize| p.coefficient(&Monomial::var(2, c));
    let linear_part = [
        [lin(&field[0], 0), lin(&field[0], 1)],
        [lin(&field[1], 0), lin(&field[1], 1)],
    ];
    Ok(DualField {
        point: point.to_vec(),
        field,
        linear_part,
    })
}

/// `ord_P(g) ≤ 1 + min_i ord_P(b_i)` for an invariant `V(g)` at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderCriterion {
    pub ord_g: PointOrder,
    pub min_ord_b: PointOrder,
    pub holds: bool,
    /// Whether the point is a singular point of the form.
    pub singular: bool,
    pub invariant: bool,
}

pub fn order_criterion_check(form: &OneForm, g: &Polynomial, point: &[Rational]) -> Result<OrderCriterion> {
    let invariant = invariant_hypersurface_check(form, g)?;
    let ord_g = g.order_at(point)?;
    let mut min_ord_b = PointOrder::Infinite;
    for b in form.coeffs() {
        min_ord_b = min_ord_b.min(b.order_at(point)?);
    }
    let singular = min_ord_b > PointOrder::Finite(0);
    Ok(OrderCriterion {
        ord_g,
        min_ord_b,
        holds: ord_g <= min_ord_b.plus(1),
        singular,
        invariant,
    })
}

/// Linear part of a polynomial at the origin, as coefficients of each variable.
pub(crate) fn linear_coefficients(p: &Polynomial) -> Vec<Rational> {
    let n = p.ctx().len();
    (0..n).map(|c| p.coefficient(&Monomial::var(n, c))).collect()
}
