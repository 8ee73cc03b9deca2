//! Point blow-ups in affine charts: pulled-back forms, saturation, exceptional
//! multiplicity and invariance, strict transforms, and the dicritical probe.

use std::collections::VecDeque;

use crate::algebra::{format_rational, Ctx, PolyMap, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::foliation::{invariant_hypersurface_check, pullback_form, saturate_form, OneForm};
use crate::groebner::{saturate_ideal, Ideal};
use crate::resolve::singular_points_2d;

/// Chart `j` of the blow-up at `P`: `x_j ↦ x_j + P_j` and `x_i ↦ x_j x_i + P_i` for
/// `i ≠ j`. The chart reuses the coordinate names of the base; `x_j = 0` is the
/// exceptional divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    pub center: Vec<Rational>,
    pub index: usize,
    map: PolyMap,
}

impl Chart {
    pub fn ctx(&self) -> &Ctx {
        self.map.source()
    }

    /// Chart coordinates to base coordinates.
    pub fn map(&self) -> &PolyMap {
        &self.map
    }

    pub fn exceptional(&self) -> Polynomial {
        Polynomial::var(self.ctx(), self.index)
    }

    /// `x=x, y=x*y` style description of the substitution.
    pub fn describe(&self) -> String {
        let ctx = self.ctx();
        self.map
            .images()
            .iter()
            .enumerate()
            .map(|(i, p)| format!("{}={}", ctx.name(i), p))
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn center_string(&self) -> String {
        format_point(&self.center)
    }
}

pub fn format_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(format_rational).collect();
    format!("({})", parts.join(","))
}

pub fn blowup_chart(base: &Ctx, center: &[Rational], j: usize) -> Result<Chart> {
    if center.len() != base.len() {
        return Err(Error::DimensionMismatch {
            expected: base.len(),
            got: center.len(),
        });
    }
    if j >= base.len() {
        return Err(Error::invalid(format!("chart index {} out of range", j + 1)));
    }
    let xj = Polynomial::var(base, j);
    let images = (0..base.len())
        .map(|i| {
            let c = Polynomial::constant(base, center[i].clone());
            if i == j {
                &xj + &c
            } else {
                &(&xj * &Polynomial::var(base, i)) + &c
            }
        })
        .collect();
    Ok(Chart {
        center: center.to_vec(),
        index: j,
        map: PolyMap::new(base, base, images)?,
    })
}

/// All `n` charts of the blow-up at `center`.
pub fn blowup_point_charts(base: &Ctx, center: &[Rational]) -> Result<Vec<Chart>> {
    (0..base.len()).map(|j| blowup_chart(base, center, j)).collect()
}

/// Total transform of a form in one chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformResult {
    pub raw: OneForm,
    /// Monic gcd of the raw coefficients.
    pub factor: Polynomial,
    /// Exponent of the exceptional variable in `factor`.
    pub exceptional_multiplicity: u32,
    pub saturated: OneForm,
    pub exceptional_invariant: bool,
}

pub(crate) fn valuation(f: &Polynomial, var: usize) -> u32 {
    f.terms().iter().map(|(m, _)| m.exp(var)).min().unwrap_or(0)
}

pub fn transform_form(form: &OneForm, chart: &Chart) -> Result<TransformResult> {
    let raw = pullback_form(form, &chart.map)?;
    let sat = saturate_form(&raw)?;
    let exceptional_multiplicity = valuation(&sat.factor, chart.index);
    let exceptional_invariant = invariant_hypersurface_check(&sat.form, &chart.exceptional())?;
    Ok(TransformResult {
        raw,
        factor: sat.factor,
        exceptional_multiplicity,
        saturated: sat.form,
        exceptional_invariant,
    })
}

/// Strict transform `φ*(I) : x_j^∞`.
pub fn strict_transform_scheme(ideal: &Ideal, chart: &Chart) -> Result<Ideal> {
    let pulled = ideal
        .gens()
        .iter()
        .map(|g| chart.map.pull(g))
        .collect::<Result<Vec<_>>>()?;
    saturate_ideal(&Ideal::new(chart.ctx(), pulled)?, &chart.exceptional())
}

/// One blow-up in a chain: centre in the current chart and the chart index (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartStep {
    pub center: Vec<Rational>,
    pub chart: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicriticalReport {
    pub dicritical: bool,
    /// Blow-up chain ending in a non-invariant exceptional divisor.
    pub witness: Option<Vec<ChartStep>>,
    pub max_depth: usize,
    pub blowups: usize,
    /// Singular points left out because they are not rational.
    pub nonrational_skipped: bool,
}

/// Whether a singular point in chart `j` on the exceptional divisor is first seen here:
/// the points with some earlier coordinate nonzero are covered by an earlier chart.
pub(crate) fn owned_by_chart(point: &[Rational], j: usize) -> bool {
    use num_traits::Zero;
    point[j].is_zero() && point[..j].iter().all(Zero::is_zero)
}

/// Breadth-first blow-ups over rational singular points, stopping at the first
/// exceptional divisor that is not invariant. Plane forms only.
pub fn dicritical_probe(form: &OneForm, max_depth: usize) -> Result<DicriticalReport> {
    if form.n() != 2 {
        return Err(Error::unsupported("the dicritical probe handles plane foliations only"));
    }
    let root = saturate_form(form)?.form;
    let mut report = DicriticalReport {
        dicritical: false,
        witness: None,
        max_depth,
        blowups: 0,
        nonrational_skipped: false,
    };
    let sing = singular_points_2d(&root)?;
    report.nonrational_skipped |= sing.residual.is_some();
    let mut queue: VecDeque<(OneForm, Vec<ChartStep>, Vec<Rational>)> =
        sing.points.into_iter().map(|p| (root.clone(), Vec::new(), p)).collect();
    while let Some((w, path, point)) = queue.pop_front() {
        if path.len() >= max_depth {
            continue;
        }
        for chart in blowup_point_charts(w.ctx(), &point)? {
            report.blowups += 1;
            let t = transform_form(&w, &chart)?;
            let mut chain = path.clone();
            chain.push(ChartStep {
                center: point.clone(),
                chart: chart.index,
            });
            if !t.exceptional_invariant {
                report.dicritical = true;
                report.witness = Some(chain);
                return Ok(report);
            }
            if chain.len() < max_depth {
                let s = singular_points_2d(&t.saturated)?;
                report.nonrational_skipped |= s.residual.is_some();
                for q in s.points {
                    if owned_by_chart(&q, chart.index) {
                        queue.push_back((t.saturated.clone(), chain.clone(), q));
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, VarContext};

    fn xy() -> (Ctx, Polynomial, Polynomial) {
        let ctx = VarContext::new(&["x", "y"]).unwrap();
        (ctx.clone(), Polynomial::var(&ctx, 0), Polynomial::var(&ctx, 1))
    }

    #[test]
    fn first_blowup_of_the_cusp_like_form() {
        let (ctx, x, y) = xy();
        let w = OneForm::new(&ctx, vec![y.pow(2), -&x.pow(2)]).unwrap();
        let o = [rat(0), rat(0)];
        let c0 = blowup_chart(&ctx, &o, 0).unwrap();
        assert_eq!(c0.describe(), "x=x, y=x*y");
        let t = transform_form(&w, &c0).unwrap();
        assert_eq!(t.exceptional_multiplicity, 2);
        assert_eq!(t.saturated.to_string(), "(y^2 - y)*d(x) - x*d(y)");
        assert!(t.exceptional_invariant);
        let t1 = transform_form(&w, &blowup_chart(&ctx, &o, 1).unwrap()).unwrap();
        assert_eq!(t1.exceptional_multiplicity, 2);
        assert_eq!(t1.saturated.to_string(), "y*d(x) + (-x^2 + x)*d(y)");
    }

    #[test]
    fn radial_foliation_is_dicritical() {
        let (ctx, x, y) = xy();
        let w = OneForm::new(&ctx, vec![y.clone(), -&x]).unwrap();
        let t = transform_form(&w, &blowup_chart(&ctx, &[rat(0), rat(0)], 0).unwrap()).unwrap();
        assert_eq!(t.raw.to_string(), "-x^2*d(y)");
        assert!(!t.exceptional_invariant);
        let r = dicritical_probe(&w, 1).unwrap();
        assert!(r.dicritical);
        assert_eq!(r.witness.unwrap(), vec![ChartStep { center: vec![rat(0), rat(0)], chart: 0 }]);
    }

    #[test]
    fn probe_results() {
        let (ctx, x, y) = xy();
        let node = OneForm::new(&ctx, vec![y.clone(), x.clone()]).unwrap();
        assert!(!dicritical_probe(&node, 3).unwrap().dicritical);
        let w = OneForm::new(&ctx, vec![y.pow(2), -&x.pow(2)]).unwrap();
        assert!(!dicritical_probe(&w, 1).unwrap().dicritical);
        let r = dicritical_probe(&w, 2).unwrap();
        assert!(r.dicritical);
        assert_eq!(r.witness.unwrap().len(), 2);
    }

    #[test]
    fn strict_transform_of_node() {
        let (ctx, x, y) = xy();
        let i = Ideal::new(&ctx, [&(&x * &y) - &x.pow(3)]).unwrap();
        let c0 = blowup_chart(&ctx, &[rat(0), rat(0)], 0).unwrap();
        let s = strict_transform_scheme(&i, &c0).unwrap();
        assert_eq!(s.groebner().unwrap().basis()[0].to_string(), "x - y");
    }
}
