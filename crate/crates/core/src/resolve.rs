//! Bounded resolution of plane foliation singularities by repeated point blow-ups.

use num_traits::Zero;

use crate::algebra::{poly_gcd_all, rational_roots, squarefree_part, Polynomial, Rational};
use crate::blowup::{blowup_point_charts, format_point, owned_by_chart, transform_form, valuation, Chart};
use crate::classify::{classify_reduced_2d, invariant_lines_through, SingularityClass};
use crate::error::{Error, Result};
use crate::foliation::{is_saturated, pullback_form, saturate_form, singular_ideal, OneForm};
use crate::groebner::{eliminate, ideal_intersection, Ideal};

/// Rational singular points of a saturated plane form, plus an ideal cutting out the
/// singular points that are not defined over Q.
#[derive(Debug, Clone)]
pub struct SingularPoints {
    /// Sorted lexicographically.
    pub points: Vec<Vec<Rational>>,
    pub residual: Option<Ideal>,
}

pub fn singular_points_2d(form: &OneForm) -> Result<SingularPoints> {
    if form.n() != 2 {
        return Err(Error::unsupported("singular point search is planar only"));
    }
    if !is_saturated(form)? {
        return Err(Error::invalid(
            "form is not saturated, so its singular locus is positive-dimensional",
        ));
    }
    let sing = singular_ideal(form);
    if sing.is_unit()? {
        return Ok(SingularPoints {
            points: Vec::new(),
            residual: None,
        });
    }
    let ctx = sing.ctx().clone();
    let gy = poly_gcd_all(&ctx, eliminate(&sing, &[0])?.gens())?;
    if gy.is_zero() {
        return Err(Error::invalid("singular locus is positive-dimensional"));
    }
    let gy = squarefree_part(&gy, 1)?;
    let ys = rational_roots(&gy, 1);
    let basis = sing.groebner()?.basis().to_vec();
    let y = Polynomial::var(&ctx, 1);
    let x = Polynomial::var(&ctx, 0);
    let mut points = Vec::new();
    let mut residual_parts = Vec::new();
    let mut irr_y = gy.clone();
    for y0 in &ys {
        let lin = &y - &Polynomial::constant(&ctx, y0.clone());
        irr_y = irr_y.exact_divide(&lin)?;
        let specialized = basis
            .iter()
            .map(|g| g.substitute_vars(&[(1, Polynomial::constant(&ctx, y0.clone()))]))
            .collect::<Result<Vec<_>>>()?;
        let gx = squarefree_part(&poly_gcd_all(&ctx, &specialized)?, 0)?;
        let mut irr_x = gx.clone();
        for x0 in rational_roots(&gx, 0) {
            irr_x = irr_x.exact_divide(&(&x - &Polynomial::constant(&ctx, x0.clone())))?;
            points.push(vec![x0, y0.clone()]);
        }
        if !irr_x.is_constant() {
            residual_parts.push(Ideal::new(&ctx, [lin, irr_x])?);
        }
    }
    if !irr_y.is_constant() {
        residual_parts.push(sing.sum(&Ideal::new(&ctx, [irr_y])?)?);
    }
    points.sort();
    let mut residual: Option<Ideal> = None;
    for part in residual_parts {
        residual = Some(match residual {
            None => part,
            Some(r) => ideal_intersection(&r, &part)?,
        });
    }
    Ok(SingularPoints { points, residual })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointAction {
    /// Reduced, nothing to do.
    Leaf,
    /// Blown up; the children hold the charts.
    BlownUp,
    /// Lies on an earlier chart or off the new exceptional divisor.
    CoveredElsewhere,
    /// Not reduced, but the depth budget is spent.
    DepthLimit,
}

impl PointAction {
    pub fn name(self) -> &'static str {
        match self {
            PointAction::Leaf => "leaf",
            PointAction::BlownUp => "blown-up",
            PointAction::CoveredElsewhere => "covered-elsewhere",
            PointAction::DepthLimit => "depth-limit",
        }
    }
}

#[derive(Debug, Clone)]
pub struct PointRecord {
    pub point: Vec<Rational>,
    pub class: SingularityClass,
    pub on_exceptional: bool,
    /// Whether this node is responsible for the point.
    pub owned: bool,
    pub action: PointAction,
    /// Some blow-up chart at this point has a non-invariant exceptional divisor.
    pub dicritical: bool,
    /// Invariant lines through the point (reduced points only).
    pub separatrix_lines: Vec<Polynomial>,
    pub children: Vec<ResolutionNode>,
}

#[derive(Debug, Clone)]
pub struct ResolutionNode {
    /// Blow-ups leading here, outermost first.
    pub chain: Vec<Chart>,
    pub depth: usize,
    /// Pullback of the original form along the chain, never saturated.
    pub total_form: OneForm,
    /// Monic factor with `total_form = factor · form`.
    pub factor: Polynomial,
    /// Order of the last blow-up's exceptional variable in the factor of this step.
    pub step_multiplicity: Option<u32>,
    /// Order of the last exceptional variable in `factor`.
    pub total_multiplicity: Option<u32>,
    pub exceptional_invariant: Option<bool>,
    pub form: OneForm,
    pub points: Vec<PointRecord>,
    pub residual: Option<Ideal>,
}

impl ResolutionNode {
    pub fn chart(&self) -> Option<&Chart> {
        self.chain.last()
    }

    /// Nodes in depth-first order, this one first.
    pub fn walk(&self) -> Vec<&ResolutionNode> {
        let mut out = vec![self];
        for p in &self.points {
            for c in &p.children {
                out.extend(c.walk());
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolutionVerdict {
    AllReducedWithinDepth,
    DicriticalDetected,
    DepthExhausted,
    NonRationalPointsSkipped,
}

impl ResolutionVerdict {
    pub fn name(self) -> &'static str {
        match self {
            ResolutionVerdict::AllReducedWithinDepth => "AllReducedWithinDepth",
            ResolutionVerdict::DicriticalDetected => "DicriticalDetected",
            ResolutionVerdict::DepthExhausted => "DepthExhausted",
            ResolutionVerdict::NonRationalPointsSkipped => "NonRationalPointsSkipped",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ResolutionStats {
    pub nodes: usize,
    pub blowups: usize,
    pub max_depth_reached: usize,
    pub reduced_leaves: usize,
}

#[derive(Debug, Clone)]
pub struct ResolutionReport {
    pub root: ResolutionNode,
    pub verdict: ResolutionVerdict,
    pub max_depth: usize,
    pub stats: ResolutionStats,
}

pub const DEFAULT_MAX_DEPTH: usize = 6;

#[derive(Default)]
struct Flags {
    dicritical: bool,
    depth_exhausted: bool,
    nonrational: bool,
}

pub fn resolve_2d(form: &OneForm, max_depth: usize) -> Result<ResolutionReport> {
    if form.n() != 2 {
        return Err(Error::unsupported("resolution is implemented for plane foliations only"));
    }
    let sat = saturate_form(form)?;
    let mut flags = Flags::default();
    let mut stats = ResolutionStats::default();
    let root = build_node(
        Vec::new(),
        form.clone(),
        sat.factor,
        None,
        None,
        sat.form,
        max_depth,
        &mut flags,
        &mut stats,
    )?;
    let verdict = if flags.dicritical {
        ResolutionVerdict::DicriticalDetected
    } else if flags.depth_exhausted {
        ResolutionVerdict::DepthExhausted
    } else if flags.nonrational {
        ResolutionVerdict::NonRationalPointsSkipped
    } else {
        ResolutionVerdict::AllReducedWithinDepth
    };
    Ok(ResolutionReport {
        root,
        verdict,
        max_depth,
        stats,
    })
}

#[allow(clippy::too_many_arguments)]
fn build_node(
    chain: Vec<Chart>,
    total_form: OneForm,
    factor: Polynomial,
    step_multiplicity: Option<u32>,
    exceptional_invariant: Option<bool>,
    form: OneForm,
    max_depth: usize,
    flags: &mut Flags,
    stats: &mut ResolutionStats,
) -> Result<ResolutionNode> {
    let depth = chain.len();
    stats.nodes += 1;
    stats.max_depth_reached = stats.max_depth_reached.max(depth);
    let last = chain.last().map(|c| c.index);
    let total_multiplicity = last.map(|j| valuation(&factor, j));
    let sing = singular_points_2d(&form)?;
    flags.nonrational |= sing.residual.is_some();
    let mut points = Vec::new();
    for p in sing.points {
        let class = classify_reduced_2d(&form, &p)?;
        let on_exceptional = last.is_none_or(|j| p[j].is_zero());
        let owned = last.is_none_or(|j| owned_by_chart(&p, j));
        let mut record = PointRecord {
            point: p.clone(),
            on_exceptional,
            owned,
            action: PointAction::Leaf,
            dicritical: false,
            separatrix_lines: Vec::new(),
            children: Vec::new(),
            class,
        };
        if record.class.tag.is_reduced() {
            record.separatrix_lines = invariant_lines_through(&form, &p)?;
            if owned {
                stats.reduced_leaves += 1;
            }
        } else if !owned {
            record.action = PointAction::CoveredElsewhere;
        } else if depth >= max_depth {
            record.action = PointAction::DepthLimit;
            flags.depth_exhausted = true;
        } else {
            record.action = PointAction::BlownUp;
            for chart in blowup_point_charts(form.ctx(), &p)? {
                stats.blowups += 1;
                let t = transform_form(&form, &chart)?;
                if !t.exceptional_invariant {
                    record.dicritical = true;
                    flags.dicritical = true;
                }
                let child_total = pullback_form(&total_form, chart.map())?;
                let child_factor = &pullback_factor(&factor, &chart)? * &t.factor;
                let mut child_chain = chain.clone();
                child_chain.push(chart);
                record.children.push(build_node(
                    child_chain,
                    child_total,
                    child_factor.monic(),
                    Some(t.exceptional_multiplicity),
                    Some(t.exceptional_invariant),
                    t.saturated,
                    max_depth,
                    flags,
                    stats,
                )?);
            }
        }
        points.push(record);
    }
    Ok(ResolutionNode {
        chain,
        depth,
        total_form,
        factor,
        step_multiplicity,
        total_multiplicity,
        exceptional_invariant,
        form,
        points,
        residual: sing.residual,
    })
}

fn pullback_factor(factor: &Polynomial, chart: &Chart) -> Result<Polynomial> {
    chart.map().pull(factor)
}

/// Indented plain-text rendering of a resolution tree.
pub fn render_text(report: &ResolutionReport) -> String {
    let mut out = format!("verdict: {}\n", report.verdict.name());
    render_node(&report.root, 0, &mut out);
    out
}

fn render_node(node: &ResolutionNode, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match node.chart() {
        None => out.push_str(&format!("{pad}root: {}\n", node.form)),
        Some(c) => out.push_str(&format!(
            "{pad}chart {} at {} [{}]: {} * ({}), multiplicity {}\n",
            c.index + 1,
            c.center_string(),
            c.describe(),
            node.factor,
            node.form,
            node.total_multiplicity.unwrap_or(0),
        )),
    }
    for p in &node.points {
        out.push_str(&format!(
            "{pad}  point {}: {}{}{}\n",
            format_point(&p.point),
            p.class.tag.name(),
            if p.dicritical { ", dicritical" } else { "" },
            if p.action == PointAction::Leaf { String::new() } else { format!(", {}", p.action.name()) },
        ));
        for c in &p.children {
            render_node(c, indent + 2, out);
        }
    }
    if let Some(r) = &node.residual {
        let gens: Vec<String> = r.gens().iter().map(|g| g.to_string()).collect();
        out.push_str(&format!("{pad}  irrational points: [{}]\n", gens.join(", ")));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::SingularityTag;
    use crate::algebra::{rat, Ctx, VarContext};

    fn xy() -> (Ctx, Polynomial, Polynomial) {
        let ctx = VarContext::new(&["x", "y"]).unwrap();
        (ctx.clone(), Polynomial::var(&ctx, 0), Polynomial::var(&ctx, 1))
    }

    #[test]
    fn singular_points() {
        let (ctx, x, y) = xy();
        let w = OneForm::new(&ctx, vec![&y.pow(2) - &y, -&x]).unwrap();
        let s = singular_points_2d(&w).unwrap();
        assert_eq!(s.points, vec![vec![rat(0), rat(0)], vec![rat(0), rat(1)]]);
        assert!(s.residual.is_none());
        let irr = OneForm::new(&ctx, vec![&y.pow(2) - &Polynomial::from_int(&ctx, 2), x.clone()]).unwrap();
        let s = singular_points_2d(&irr).unwrap();
        assert!(s.points.is_empty());
        let r = s.residual.unwrap();
        assert!(r.contains(&(&y.pow(2) - &Polynomial::from_int(&ctx, 2))).unwrap());
        let mixed = OneForm::new(&ctx, vec![&y * &(&y.pow(2) - &Polynomial::from_int(&ctx, 3)), x.clone()]).unwrap();
        let s = singular_points_2d(&mixed).unwrap();
        assert_eq!(s.points, vec![vec![rat(0), rat(0)]]);
        assert!(s.residual.is_some());
        let unsat = OneForm::new(&ctx, vec![&x * &y, x.pow(2)]).unwrap();
        assert!(singular_points_2d(&unsat).is_err());
    }

    #[test]
    fn reduced_root_needs_no_blowup() {
        let (ctx, x, y) = xy();
        let w = OneForm::new(&ctx, vec![y, x.scale(&rat(2))]).unwrap();
        let r = resolve_2d(&w, 1).unwrap();
        assert_eq!(r.verdict, ResolutionVerdict::AllReducedWithinDepth);
        assert_eq!(r.stats.blowups, 0);
    }

    #[test]
    fn dicritical_tree() {
        let (ctx, x, y) = xy();
        let w = OneForm::new(&ctx, vec![y.pow(2), -&x.pow(2)]).unwrap();
        let r = resolve_2d(&w, 3).unwrap();
        assert_eq!(r.verdict, ResolutionVerdict::DicriticalDetected);
        let first = &r.root.points[0].children[0];
        assert_eq!(first.factor.to_string(), "x^2");
        assert_eq!(first.form.to_string(), "(y^2 - y)*d(x) - x*d(y)");
        let tags: Vec<_> = first.points.iter().map(|p| p.class.tag).collect();
        assert_eq!(tags, vec![SingularityTag::Reduced, SingularityTag::PreSimpleAResonant]);
        assert!(first.points[1].dicritical);
        let second = &first.points[1].children;
        assert_eq!(second[0].factor.to_string(), "x^4");
        assert_eq!(second[0].total_multiplicity, Some(4));
        assert_eq!(second[1].total_multiplicity, Some(4));
        assert!(render_text(&r).contains("dicritical"));
    }

    #[test]
    fn type_c_resolves_in_one_step() {
        let (ctx, x, y) = xy();
        let w = OneForm::new(&ctx, vec![y.clone(), -&(&x + &y)]).unwrap();
        let r = resolve_2d(&w, 2).unwrap();
        assert_eq!(r.verdict, ResolutionVerdict::AllReducedWithinDepth);
        let charts = &r.root.points[0].children;
        assert_eq!(charts[0].points.len(), 1);
        assert_eq!(charts[0].points[0].class.tag, SingularityTag::Reduced);
        assert!(charts[1].points.is_empty());
        assert_eq!(charts[1].exceptional_invariant, Some(true));
    }
}
