//! Weak, strong and full tangency of subschemes to foliations, compared through jets.

use num_traits::Zero;

use crate::algebra::{poly_gcd_all, rat, PolyMap, Polynomial, Rational, VarContext};
use crate::error::{Error, Result};
use crate::foliation::{invariant_hypersurface_check, pullback_form, OneForm};
use crate::groebner::{Containment, Ideal};
use crate::jets::{jet_fiber, jet_ideal_foliation, jet_ideal_scheme, JetIdeal, JetKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangencyMode {
    Weak,
    Strong,
    Full,
}

impl TangencyMode {
    pub fn name(self) -> &'static str {
        match self {
            TangencyMode::Weak => "weak",
            TangencyMode::Strong => "strong",
            TangencyMode::Full => "full",
        }
    }
}

/// Where a tangency check first broke down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangencyFailure {
    pub order: usize,
    /// A generator on one side that the other side does not contain.
    pub generator: Polynomial,
    /// Arcs through the origin, lowest coefficient first, lying in the jets of the scheme
    /// but not in those of the foliation.
    pub witness: Option<Vec<Vec<Rational>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangencyVerdict {
    pub mode: TangencyMode,
    pub containment: Containment,
    pub max_order_checked: usize,
    pub holds: bool,
    /// Outcome at each order that was checked, in increasing order.
    pub per_order: Vec<(usize, bool)>,
    pub first_failure: Option<TangencyFailure>,
}

fn check_ctx(ideal: &Ideal, form: &OneForm) -> Result<()> {
    if crate::algebra::same_ctx(ideal.ctx(), form.ctx()) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

fn at_order(jets: &JetIdeal, k: usize) -> Vec<Polynomial> {
    jets.generators()
        .iter()
        .filter(|g| match jets.kind() {
            JetKind::Scheme => g.t_index <= k,
            JetKind::Foliation => g.t_index < k,
        })
        .map(|g| g.poly.clone())
        .collect()
}

/// Order-1 test: the tangent vectors of the scheme are killed by the form.
pub fn weak_tangency(ideal: &Ideal, form: &OneForm, mode: Containment) -> Result<TangencyVerdict> {
    let mut v = strong_tangency_up_to(ideal, form, 1, mode)?;
    v.mode = TangencyMode::Weak;
    Ok(v)
}

/// `J_k(C) ⊆ J_k(F)` for every `k ≤ m`: each foliation jet generator lies in the scheme
/// jet ideal (or its radical in set mode).
pub fn strong_tangency_up_to(ideal: &Ideal, form: &OneForm, m: usize, mode: Containment) -> Result<TangencyVerdict> {
    check_ctx(ideal, form)?;
    let cj = jet_ideal_scheme(ideal, m)?;
    let fj = jet_ideal_foliation(form, m)?;
    let mut per_order = Vec::new();
    let mut first_failure = None;
    for k in 1..=m {
        let scheme = Ideal::new(cj.ctx(), at_order(&cj, k))?;
        let mut bad = None;
        for g in at_order(&fj, k) {
            if !scheme.contains_with(&g, mode)? {
                bad = Some(g);
                break;
            }
        }
        per_order.push((k, bad.is_none()));
        if let Some(g) = bad {
            let witness = find_jet_witness(ideal, &cj, &fj, k, 6)?;
            first_failure = Some(TangencyFailure {
                order: k,
                generator: g,
                witness,
            });
            break;
        }
    }
    Ok(TangencyVerdict {
        mode: TangencyMode::Strong,
        containment: mode,
        max_order_checked: per_order.last().map_or(0, |p| p.0),
        holds: first_failure.is_none(),
        per_order,
        first_failure,
    })
}

/// `J_k(C) = J_k(F) ∩ π^{-1}(C)` for every `k ≤ m`, compared as ideals
/// `J_k(C)` and `J_k(F) + I_C(a_0)`.
pub fn full_tangency_up_to(ideal: &Ideal, form: &OneForm, m: usize, mode: Containment) -> Result<TangencyVerdict> {
    check_ctx(ideal, form)?;
    let cj = jet_ideal_scheme(ideal, m)?;
    let fj = jet_ideal_foliation(form, m)?;
    let jet = cj.jet();
    let base_images: Vec<Polynomial> = (0..ideal.ctx().len()).map(|i| jet.var(i, 0).unwrap()).collect();
    let lifted = ideal
        .gens()
        .iter()
        .map(|g| g.substitute(jet.ctx(), &base_images))
        .collect::<Result<Vec<_>>>()?;
    let mut per_order = Vec::new();
    let mut first_failure = None;
    for k in 1..=m {
        let a = Ideal::new(jet.ctx(), at_order(&cj, k))?;
        let b = Ideal::new(jet.ctx(), at_order(&fj, k).into_iter().chain(lifted.iter().cloned()))?;
        let mut bad = None;
        for g in a.gens() {
            if !b.contains_with(g, mode)? {
                bad = Some(g.clone());
                break;
            }
        }
        if bad.is_none() {
            for g in b.gens() {
                if !a.contains_with(g, mode)? {
                    bad = Some(g.clone());
                    break;
                }
            }
        }
        per_order.push((k, bad.is_none()));
        if let Some(g) = bad {
            first_failure = Some(TangencyFailure {
                order: k,
                generator: g,
                witness: None,
            });
            break;
        }
    }
    Ok(TangencyVerdict {
        mode: TangencyMode::Full,
        containment: mode,
        max_order_checked: per_order.last().map_or(0, |p| p.0),
        holds: first_failure.is_none(),
        per_order,
        first_failure,
    })
}

/// Searches arcs through the origin with small integer coefficients that lie in
/// `J_k(C)` but not in `J_k(F)`. Gives up when the search space has more than
/// `5^max_unknowns` points or the origin is not on `C`.
fn find_jet_witness(
    ideal: &Ideal,
    cj: &JetIdeal,
    fj: &JetIdeal,
    k: usize,
    max_unknowns: usize,
) -> Result<Option<Vec<Vec<Rational>>>> {
    let n = ideal.ctx().len();
    let origin = vec![Rational::zero(); n];
    for g in ideal.gens() {
        if !g.evaluate(&origin)?.is_zero() {
            return Ok(None);
        }
    }
    let unknowns = n * k;
    if unknowns > max_unknowns {
        return Ok(None);
    }
    let cfib = jet_fiber(cj, &origin)?;
    let ffib = jet_fiber(fj, &origin)?;
    let scheme = at_order(&cfib, k);
    let fol = at_order(&ffib, k);
    let values = [rat(0), rat(1), rat(-1), rat(2), rat(-2)];
    let cost = [0u32, 1, 1, 2, 2];
    let mut best: Option<(u32, Vec<usize>)> = None;
    let mut digits = vec![0usize; unknowns];
    loop {
        let c: u32 = digits.iter().map(|&d| cost[d]).sum();
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            let arcs = digits_to_arcs(&digits, n, k, cfib.order(), &values);
            let point = cfib.jet().point_from_arcs(&arcs)?;
            let mut inside = true;
            for g in &scheme {
                if !g.evaluate(&point)?.is_zero() {
                    inside = false;
                    break;
                }
            }
            if inside {
                let mut off = false;
                for g in &fol {
                    if !g.evaluate(&point)?.is_zero() {
                        off = true;
                        break;
                    }
                }
                if off {
                    best = Some((c, digits.clone()));
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == unknowns {
                return Ok(best.map(|(_, d)| digits_to_arcs(&d, n, k, k, &values)));
            }
            digits[pos] += 1;
            if digits[pos] < values.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

fn digits_to_arcs(digits: &[usize], n: usize, k: usize, len: usize, values: &[Rational]) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            let mut arc = vec![Rational::zero(); len + 1];
            for j in 1..=k {
                arc[j] = values[digits[i * k + j - 1]].clone();
            }
            arc
        })
        .collect()
}

/// Largest `r ≤ max_probe` such that the jet fibers of `V(I)` over `P` are the whole fiber
/// for every order up to `r`.
pub fn full_jet_depth(ideal: &Ideal, point: &[Rational], max_probe: usize) -> Result<usize> {
    for g in ideal.gens() {
        if !g.evaluate(point)?.is_zero() {
            return Err(Error::invalid("the point does not lie on the scheme"));
        }
    }
    let fib = jet_fiber(&jet_ideal_scheme(ideal, max_probe)?, point)?;
    Ok(match fib.generators().iter().map(|g| g.t_index).min() {
        Some(k) => k - 1,
        None => max_probe,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalReport {
    pub smooth: bool,
    pub invariant: bool,
    /// `None` when the earlier conditions already fail.
    pub restriction_saturated: Option<bool>,
    pub truly_transversal: bool,
}

/// A smooth, non-invariant hypersurface on which the restricted form stays saturated.
/// The restriction is computed for graphs `c·x_k = h(other variables)` only.
pub fn truly_transversal_check(g: &Polynomial, form: &OneForm) -> Result<TransversalReport> {
    if !crate::algebra::same_ctx(g.ctx(), form.ctx()) {
        return Err(Error::ContextMismatch);
    }
    let ctx = g.ctx();
    let mut gens = vec![g.clone()];
    gens.extend((0..ctx.len()).map(|i| g.derivative(i)));
    let smooth = !g.is_constant() && Ideal::new(ctx, gens)?.is_unit()?;
    let invariant = !g.is_constant() && invariant_hypersurface_check(form, g)?;
    if !smooth || invariant {
        return Ok(TransversalReport {
            smooth,
            invariant,
            restriction_saturated: None,
            truly_transversal: false,
        });
    }
    let k = (0..ctx.len())
        .find(|&k| {
            g.degree_in(k) == 1 && {
                let rest = g.terms().iter().filter(|(m, _)| m.exp(k) == 1);
                rest.clone().count() == 1 && rest.clone().all(|(m, _)| m.degree() == 1)
            }
        })
        .ok_or_else(|| Error::unsupported("restriction to a hypersurface that is not a coordinate graph"))?;
    let c = g.coefficient(&crate::algebra::Monomial::var(ctx.len(), k));
    let names: Vec<&str> = (0..ctx.len()).filter(|&i| i != k).map(|i| ctx.name(i)).collect();
    let sub = VarContext::new(&names)?;
    let mut inclusion = Vec::with_capacity(ctx.len());
    let mut next = 0;
    for i in 0..ctx.len() {
        if i == k {
            inclusion.push(Polynomial::zero(&sub));
        } else {
            inclusion.push(Polynomial::var(&sub, next));
            next += 1;
        }
    }
    let h = &Polynomial::var(ctx, k).scale(&c) - g;
    inclusion[k] = h.substitute(&sub, &inclusion)?.scale(&c.recip());
    let restricted = pullback_form(form, &PolyMap::new(&sub, ctx, inclusion)?)?;
    let saturated = !restricted.is_zero() && poly_gcd_all(&sub, restricted.coeffs())?.is_one();
    Ok(TransversalReport {
        smooth,
        invariant,
        restriction_saturated: Some(saturated),
        truly_transversal: saturated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ctx;

    fn xy() -> (Ctx, Polynomial, Polynomial) {
        let ctx = VarContext::new(&["x", "y"]).unwrap();
        (ctx.clone(), Polynomial::var(&ctx, 0), Polynomial::var(&ctx, 1))
    }

    fn ideal(ctx: &Ctx, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(ctx, gens).unwrap()
    }

    #[test]
    fn weak_tangency_examples() {
        let (ctx, x, y) = xy();
        let w = OneForm::new(&ctx, vec![y.clone(), x.clone()]).unwrap();
        for mode in [Containment::Scheme, Containment::Set] {
            assert!(weak_tangency(&ideal(&ctx, vec![x.clone()]), &w, mode).unwrap().holds);
            assert!(!weak_tangency(&ideal(&ctx, vec![&y - &x]), &w, mode).unwrap().holds);
            assert!(weak_tangency(&ideal(&ctx, vec![x.clone(), y.clone()]), &w, mode).unwrap().holds);
        }
    }

    #[test]
    fn strong_tangency_of_coordinate_axis() {
        let (ctx, x, y) = xy();
        let w = OneForm::new(&ctx, vec![y.clone(), x.clone()]).unwrap();
        let v = strong_tangency_up_to(&ideal(&ctx, vec![x.clone()]), &w, 2, Containment::Scheme).unwrap();
        assert!(v.holds);
        let v = strong_tangency_up_to(&ideal(&ctx, vec![x.pow(2), &x * &y, y.pow(2)]), &w, 3, Containment::Scheme).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn full_tangency_examples() {
        let (ctx, x, y) = xy();
        let w = OneForm::new(&ctx, vec![y.clone(), x.clone()]).unwrap();
        assert!(full_tangency_up_to(&ideal(&ctx, vec![&x * &y]), &w, 3, Containment::Scheme).unwrap().holds);
        assert!(!full_tangency_up_to(&ideal(&ctx, vec![x.clone()]), &w, 2, Containment::Set).unwrap().holds);
    }

    #[test]
    fn jet_depth() {
        let (ctx, x, y) = xy();
        let o = [rat(0), rat(0)];
        assert_eq!(full_jet_depth(&ideal(&ctx, vec![x.clone(), y.clone()]), &o, 4).unwrap(), 0);
        let m3 = ideal(&ctx, vec![x.clone(), y.clone()]).power(3).unwrap();
        assert_eq!(full_jet_depth(&m3, &o, 4).unwrap(), 2);
    }

    #[test]
    fn transversality() {
        let (ctx, x, y) = xy();
        let one = Polynomial::one(&ctx);
        let w = OneForm::new(&ctx, vec![y.clone(), x.clone()]).unwrap();
        assert!(truly_transversal_check(&(&y - &one), &w).unwrap().truly_transversal);
        assert!(!truly_transversal_check(&x.pow(2), &w).unwrap().truly_transversal);
        let r = truly_transversal_check(&(&(&x * &y) - &one), &w).unwrap();
        assert!(r.invariant && !r.truly_transversal);
    }
}
