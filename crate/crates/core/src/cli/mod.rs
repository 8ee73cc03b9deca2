//! Command-line front end. [`run`] parses arguments, executes one command and returns
//! the rendered report with its exit code.
//!
//! Exit codes: 0 success, 1 internal error, 2 parse or user error, 3 Groebner budget
//! exhausted, 4 unsupported construct.

pub mod parse;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{format_rational, Ctx, PointOrder, Polynomial, Rational, VarContext};
use crate::blowup::{blowup_chart, dicritical_probe, format_point, transform_form};
use crate::classify::{classify_reduced_2d, jet_comparison_probe, Eigenvalues, SingularityClass};
use crate::error::{Error, Result};
use crate::foliation::{integrability_check, order_criterion_check, saturate_form};
use crate::groebner::{set_default_budget, Containment, Ideal};
use crate::jets::{jet_fiber, jet_ideal_foliation, jet_ideal_scheme, JetIdeal};
use crate::resolve::{render_text, resolve_2d, singular_points_2d, ResolutionNode, DEFAULT_MAX_DEPTH};
use crate::tangency::{full_tangency_up_to, strong_tangency_up_to, weak_tangency, TangencyMode, TangencyVerdict};

use parse::{infer_variables, parse_form, parse_ideal, parse_point, parse_polynomial};

#[derive(Debug, Parser)]
#[command(name = "folijet", version, about = "Jets, tangency and resolution for algebraic foliations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Cap on S-pair reductions per Groebner basis computation.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Comma-separated variable order; inferred from the inputs when absent.
    #[arg(long, global = true)]
    pub vars: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Weak,
    Strong,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ContainmentArg {
    Scheme,
    Set,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jet ideals of schemes and foliations.
    #[command(subcommand)]
    Jets(JetsCommand),
    /// Weak, strong or full tangency of a scheme to a foliation.
    Tangency {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        form: String,
        #[arg(long, default_value_t = 1)]
        order: usize,
        #[arg(long, value_enum, default_value_t = ContainmentArg::Set)]
        containment: ContainmentArg,
    },
    /// Classify a planar singular point.
    Classify {
        #[arg(long)]
        form: String,
        #[arg(long)]
        point: String,
    },
    /// Divide out the gcd of the coefficients.
    Saturate {
        #[arg(long)]
        form: String,
    },
    /// Frobenius integrability test.
    Integrable {
        #[arg(long)]
        form: String,
    },
    /// Singular points of a planar foliation.
    Singular {
        #[arg(long)]
        form: String,
    },
    /// Transform a form under one chart of a point blow-up.
    Blowup {
        #[arg(long)]
        form: String,
        #[arg(long)]
        point: String,
        /// Chart number, starting at 1.
        #[arg(long)]
        chart: usize,
    },
    /// Bounded resolution of a planar foliation.
    Resolve {
        #[arg(long)]
        form: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Dicriticality and normal-crossings jet probes
    #[command(subcommand)]
    Probe(ProbeCommand),
    /// Local checks on invariant hypersurfaces
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Debug, Subcommand)]
pub enum JetsCommand {
    Scheme(JetArgs<IdealArg>),
    Foliation(JetArgs<FormArg>),
}

#[derive(Debug, Args)]
pub struct IdealArg {
    #[arg(long)]
    ideal: String,
}

#[derive(Debug, Args)]
pub struct FormArg {
    #[arg(long)]
    form: String,
}

#[derive(Debug, Args)]
pub struct JetArgs<T: Args> {
    #[command(flatten)]
    input: T,
    #[arg(long)]
    order: usize,
    #[arg(long)]
    point: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum ProbeCommand {
    /// Search for a non-invariant exceptional divisor.
    Dicritical {
        #[arg(long)]
        form: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Compare foliation jets with those of `x_1 ⋯ x_t = 0`.
    JetsVsNc {
        #[arg(long)]
        form: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        point: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// `ord g ≤ 1 + min ord b_i` at a point.
    OrderCriterion {
        #[arg(long)]
        form: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        point: String,
    },
}

/// Rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::Unsupported(_) => 4,
        Error::ContextMismatch => 1,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::BudgetExceeded { .. } => "budget",
        Error::Unsupported(_) => "unsupported",
        Error::ContextMismatch => "internal",
        _ => "input",
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    if let Some(b) = cli.budget {
        set_default_budget(b);
    }
    let name = command_name(&cli.command);
    let mut inputs = Map::new();
    let outcome = execute(&cli, &mut inputs);
    match outcome {
        Ok((result, text)) => {
            let stdout = match cli.format {
                Format::Json => {
                    let doc = json!({
                        "command": name,
                        "inputs": Value::Object(inputs),
                        "result": result,
                        "diagnostics": [],
                    });
                    format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
                }
                Format::Text => text.unwrap_or_else(|| render_value(&result, 0)),
            };
            Outcome { stdout, stderr: String::new(), code: 0 }
        }
        Err(e) => {
            let code = exit_code(&e);
            let mut diag = Map::new();
            diag.insert("level".into(), json!("error"));
            diag.insert("kind".into(), json!(error_kind(&e)));
            diag.insert("message".into(), json!(e.to_string()));
            if let Error::Parse { line, column, .. } = &e {
                diag.insert("line".into(), json!(line));
                diag.insert("column".into(), json!(column));
            }
            match cli.format {
                Format::Json => {
                    let doc = json!({
                        "command": name,
                        "inputs": Value::Object(inputs),
                        "result": Value::Null,
                        "diagnostics": [Value::Object(diag)],
                    });
                    Outcome {
                        stdout: format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")),
                        stderr: String::new(),
                        code,
                    }
                }
                Format::Text => Outcome {
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                    code,
                },
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Jets(JetsCommand::Scheme(_)) => "jets scheme",
        Command::Jets(JetsCommand::Foliation(_)) => "jets foliation",
        Command::Tangency { .. } => "tangency",
        Command::Classify { .. } => "classify",
        Command::Saturate { .. } => "saturate",
        Command::Integrable { .. } => "integrable",
        Command::Singular { .. } => "singular",
        Command::Blowup { .. } => "blowup",
        Command::Resolve { .. } => "resolve",
        Command::Probe(ProbeCommand::Dicritical { .. }) => "probe dicritical",
        Command::Probe(ProbeCommand::JetsVsNc { .. }) => "probe jets-vs-nc",
        Command::Check(CheckCommand::OrderCriterion { .. }) => "check order-criterion",
    }
}

/// Builds the context from `--vars` or from the inputs, and records it.
fn context(cli: &Cli, sources: &[(&str, bool)], inputs: &mut Map<String, Value>) -> Result<Ctx> {
    let names: Vec<String> = match &cli.vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => infer_variables(sources)?,
    };
    if names.is_empty() {
        return Err(Error::invalid("no variables; pass --vars"));
    }
    inputs.insert("variables".into(), json!(names));
    VarContext::new(&names)
}

fn point_arg(src: &str, n: usize) -> Result<Vec<Rational>> {
    let p = parse_point(src)?;
    if p.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: p.len() });
    }
    Ok(p)
}

type Rendered = (Value, Option<String>);

fn execute(cli: &Cli, inputs: &mut Map<String, Value>) -> Result<Rendered> {
    match &cli.command {
        Command::Jets(JetsCommand::Scheme(a)) => {
            record(inputs, "ideal", &a.input.ideal);
            record_opt(inputs, "point", &a.point);
            inputs.insert("order".into(), json!(a.order));
            let ctx = context(cli, &[(&a.input.ideal, false)], inputs)?;
            let ideal = Ideal::new(&ctx, parse_ideal(&a.input.ideal, &ctx)?)?;
            let jets = jet_ideal_scheme(&ideal, a.order)?;
            jets_result(jets, a.point.as_deref(), ctx.len())
        }
        Command::Jets(JetsCommand::Foliation(a)) => {
            record(inputs, "form", &a.input.form);
            record_opt(inputs, "point", &a.point);
            inputs.insert("order".into(), json!(a.order));
            let ctx = context(cli, &[(&a.input.form, true)], inputs)?;
            let form = parse_form(&a.input.form, &ctx)?;
            let jets = jet_ideal_foliation(&form, a.order)?;
            jets_result(jets, a.point.as_deref(), ctx.len())
        }
        Command::Tangency { mode, ideal, form, order, containment } => {
            record(inputs, "mode", mode_name(*mode));
            record(inputs, "ideal", ideal);
            record(inputs, "form", form);
            inputs.insert("order".into(), json!(order));
            let c = match containment {
                ContainmentArg::Scheme => Containment::Scheme,
                ContainmentArg::Set => Containment::Set,
            };
            inputs.insert("containment".into(), json!(c.name()));
            let ctx = context(cli, &[(form, true), (ideal, false)], inputs)?;
            let w = parse_form(form, &ctx)?;
            let i = Ideal::new(&ctx, parse_ideal(ideal, &ctx)?)?;
            let v = match mode {
                ModeArg::Weak => weak_tangency(&i, &w, c)?,
                ModeArg::Strong => strong_tangency_up_to(&i, &w, *order, c)?,
                ModeArg::Full => full_tangency_up_to(&i, &w, *order, c)?,
            };
            Ok((tangency_value(&v), None))
        }
        Command::Classify { form, point } => {
            record(inputs, "form", form);
            record(inputs, "point", point);
            let ctx = context(cli, &[(form, true)], inputs)?;
            let w = parse_form(form, &ctx)?;
            let p = point_arg(point, ctx.len())?;
            let c = classify_reduced_2d(&w, &p)?;
            Ok((class_value(&c), None))
        }
        Command::Saturate { form } => {
            record(inputs, "form", form);
            let ctx = context(cli, &[(form, true)], inputs)?;
            let s = saturate_form(&parse_form(form, &ctx)?)?;
            Ok((json!({"factor": s.factor.to_string(), "form": s.form.to_string()}), None))
        }
        Command::Integrable { form } => {
            record(inputs, "form", form);
            let ctx = context(cli, &[(form, true)], inputs)?;
            let r = integrability_check(&parse_form(form, &ctx)?);
            let witness = match r.witness {
                Some((i, j, k, c)) => json!({
                    "indices": [i + 1, j + 1, k + 1],
                    "coefficient": c.to_string(),
                }),
                None => Value::Null,
            };
            Ok((json!({"integrable": r.integrable, "witness": witness}), None))
        }
        Command::Singular { form } => {
            record(inputs, "form", form);
            let ctx = context(cli, &[(form, true)], inputs)?;
            let s = saturate_form(&parse_form(form, &ctx)?)?;
            let pts = singular_points_2d(&s.form)?;
            Ok((
                json!({
                    "factor": s.factor.to_string(),
                    "saturated": s.form.to_string(),
                    "points": pts.points.iter().map(|p| point_value(p)).collect::<Vec<_>>(),
                    "residual": pts.residual.as_ref().map(ideal_value),
                }),
                None,
            ))
        }
        Command::Blowup { form, point, chart } => {
            record(inputs, "form", form);
            record(inputs, "point", point);
            inputs.insert("chart".into(), json!(chart));
            let ctx = context(cli, &[(form, true)], inputs)?;
            let w = parse_form(form, &ctx)?;
            let p = point_arg(point, ctx.len())?;
            if *chart == 0 || *chart > ctx.len() {
                return Err(Error::invalid(format!("chart must lie in 1..={}", ctx.len())));
            }
            let c = blowup_chart(&ctx, &p, chart - 1)?;
            let t = transform_form(&w, &c)?;
            Ok((
                json!({
                    "chart": chart,
                    "center": point_value(&p),
                    "substitution": c.describe(),
                    "raw": t.raw.to_string(),
                    "factor": t.factor.to_string(),
                    "exceptional_multiplicity": t.exceptional_multiplicity,
                    "saturated": t.saturated.to_string(),
                    "exceptional_invariant": t.exceptional_invariant,
                }),
                None,
            ))
        }
        Command::Resolve { form, max_depth } => {
            record(inputs, "form", form);
            inputs.insert("max_depth".into(), json!(max_depth));
            let ctx = context(cli, &[(form, true)], inputs)?;
            let r = resolve_2d(&parse_form(form, &ctx)?, *max_depth)?;
            let value = json!({
                "verdict": r.verdict.name(),
                "max_depth": r.max_depth,
                "stats": {
                    "nodes": r.stats.nodes,
                    "blowups": r.stats.blowups,
                    "max_depth_reached": r.stats.max_depth_reached,
                    "reduced_leaves": r.stats.reduced_leaves,
                },
                "tree": node_value(&r.root),
            });
            Ok((value, Some(render_text(&r))))
        }
        Command::Probe(ProbeCommand::Dicritical { form, max_depth }) => {
            record(inputs, "form", form);
            inputs.insert("max_depth".into(), json!(max_depth));
            let ctx = context(cli, &[(form, true)], inputs)?;
            let r = dicritical_probe(&parse_form(form, &ctx)?, *max_depth)?;
            let witness = r.witness.as_ref().map(|w| {
                w.iter()
                    .map(|s| json!({"center": point_value(&s.center), "chart": s.chart + 1}))
                    .collect::<Vec<_>>()
            });
            Ok((
                json!({
                    "dicritical": r.dicritical,
                    "witness": witness,
                    "max_depth": r.max_depth,
                    "blowups": r.blowups,
                    "nonrational_skipped": r.nonrational_skipped,
                }),
                None,
            ))
        }
        Command::Probe(ProbeCommand::JetsVsNc { form, t, order, point }) => {
            record(inputs, "form", form);
            record(inputs, "point", point);
            inputs.insert("t".into(), json!(t));
            inputs.insert("order".into(), json!(order));
            let ctx = context(cli, &[(form, true)], inputs)?;
            let w = parse_form(form, &ctx)?;
            let p = point_arg(point, ctx.len())?;
            let r = jet_comparison_probe(&w, *t, *order, &p)?;
            let per_order: Vec<Value> = r
                .per_order
                .iter()
                .map(|o| {
                    json!({
                        "order": o.order,
                        "equal": o.equal,
                        "contains_nc": o.contains_nc,
                        "within_nc": o.within_nc,
                        "nc_components": o.nc_components,
                        "components_present": o.components_present,
                    })
                })
                .collect();
            Ok((
                json!({
                    "verdict": r.verdict.name(),
                    "divergence_order": r.divergence_order,
                    "per_order": per_order,
                }),
                None,
            ))
        }
        Command::Check(CheckCommand::OrderCriterion { form, g, point }) => {
            record(inputs, "form", form);
            record(inputs, "g", g);
            record(inputs, "point", point);
            let ctx = context(cli, &[(form, true), (g, false)], inputs)?;
            let w = parse_form(form, &ctx)?;
            let gp = parse_polynomial(g, &ctx)?;
            let p = point_arg(point, ctx.len())?;
            let r = order_criterion_check(&w, &gp, &p)?;
            Ok((
                json!({
                    "holds": r.holds,
                    "ord_g": order_value(r.ord_g),
                    "min_ord_b": order_value(r.min_ord_b),
                    "singular": r.singular,
                    "invariant": r.invariant,
                }),
                None,
            ))
        }
    }
}

fn record(inputs: &mut Map<String, Value>, k: &str, v: &str) {
    inputs.insert(k.into(), json!(v));
}

fn record_opt(inputs: &mut Map<String, Value>, k: &str, v: &Option<String>) {
    if let Some(v) = v {
        inputs.insert(k.into(), json!(v));
    }
}

fn mode_name(m: ModeArg) -> &'static str {
    match m {
        ModeArg::Weak => TangencyMode::Weak.name(),
        ModeArg::Strong => TangencyMode::Strong.name(),
        ModeArg::Full => TangencyMode::Full.name(),
    }
}

fn jets_result(jets: JetIdeal, point: Option<&str>, n: usize) -> Result<Rendered> {
    let jets = match point {
        Some(p) => jet_fiber(&jets, &point_arg(p, n)?)?,
        None => jets,
    };
    let gens = jets.generators();
    Ok((
        json!({
            "order": jets.order(),
            "point": jets.base_point().map(point_value),
            "variables": jets.ctx().names(),
            "generators": gens.iter().map(|g| g.poly.to_string()).collect::<Vec<_>>(),
            "t_indices": gens.iter().map(|g| g.t_index).collect::<Vec<_>>(),
            "sources": gens.iter().map(|g| g.source + 1).collect::<Vec<_>>(),
        }),
        None,
    ))
}

pub fn rational_value(q: &Rational) -> Value {
    json!(format_rational(q))
}

pub fn point_value(p: &[Rational]) -> Value {
    Value::Array(p.iter().map(rational_value).collect())
}

fn ideal_value(i: &Ideal) -> Value {
    Value::Array(i.gens().iter().map(|g| json!(g.to_string())).collect())
}

fn order_value(o: PointOrder) -> Value {
    match o {
        PointOrder::Finite(k) => json!(k),
        PointOrder::Infinite => json!("infinity"),
    }
}

fn matrix_value(m: &[[Rational; 2]; 2]) -> Value {
    Value::Array(m.iter().map(|r| point_value(r)).collect())
}

pub fn class_value(c: &SingularityClass) -> Value {
    let eigen = c.eigen.as_ref().map(|e| {
        let (kind, values) = match &e.eigenvalues {
            Eigenvalues::Rational(a, b) => ("rational", vec![a.clone(), b.clone()]),
            Eigenvalues::Double(l) => ("double", vec![l.clone()]),
            Eigenvalues::IrrationalReal => ("irrational-real", vec![]),
            Eigenvalues::ComplexConjugate => ("complex-conjugate", vec![]),
        };
        json!({
            "trace": rational_value(&e.trace),
            "det": rational_value(&e.det),
            "discriminant": rational_value(&e.discriminant),
            "kind": kind,
            "values": point_value(&values),
        })
    });
    json!({
        "tag": c.tag.name(),
        "point": point_value(&c.point),
        "saturating_factor": c.saturating_factor.to_string(),
        "value": c.value.as_deref().map(point_value),
        "order": c.order,
        "linear_part": c.linear_part.as_ref().map(matrix_value),
        "eigen": eigen,
        "type_c": c.type_c.as_ref().map(|t| json!({"r": t.r, "obstruction": rational_value(&t.obstruction)})),
        "resonance": c.resonance,
    })
}

fn tangency_value(v: &TangencyVerdict) -> Value {
    let failure = v.first_failure.as_ref().map(|f| {
        json!({
            "order": f.order,
            "generator": f.generator.to_string(),
            "witness": f.witness.as_ref().map(|w| w.iter().map(|a| point_value(a)).collect::<Vec<_>>()),
        })
    });
    json!({
        "mode": v.mode.name(),
        "containment": v.containment.name(),
        "holds": v.holds,
        "max_order_checked": v.max_order_checked,
        "per_order": v.per_order.iter().map(|(k, h)| json!({"order": k, "holds": h})).collect::<Vec<_>>(),
        "first_failure": failure,
    })
}

fn poly_list(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(|p| json!(p.to_string())).collect())
}

pub fn node_value(n: &ResolutionNode) -> Value {
    let chain: Vec<Value> = n
        .chain
        .iter()
        .map(|c| {
            json!({
                "center": point_value(&c.center),
                "chart": c.index + 1,
                "substitution": c.describe(),
            })
        })
        .collect();
    let points: Vec<Value> = n
        .points
        .iter()
        .map(|p| {
            json!({
                "point": point_value(&p.point),
                "label": format_point(&p.point),
                "classification": class_value(&p.class),
                "on_exceptional": p.on_exceptional,
                "owned": p.owned,
                "action": p.action.name(),
                "dicritical": p.dicritical,
                "separatrix_lines": poly_list(&p.separatrix_lines),
                "children": p.children.iter().map(node_value).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "depth": n.depth,
        "chain": chain,
        "total_form": n.total_form.to_string(),
        "factor": n.factor.to_string(),
        "step_multiplicity": n.step_multiplicity,
        "total_multiplicity": n.total_multiplicity,
        "exceptional_invariant": n.exceptional_invariant,
        "form": n.form.to_string(),
        "points": points,
        "residual": n.residual.as_ref().map(ideal_value),
    })
}

/// Indented `key: value` rendering of a JSON value.
pub fn render_value(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    let mut out = String::new();
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => out.push_str(&format!("{pad}{k}:\n{}", render_value(x, indent + 1))),
                    Value::Array(a) if !is_flat(x) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for e in a {
                            out.push_str(&format!("{pad}  -\n{}", render_value(e, indent + 2)));
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        Value::Array(a) => {
            for e in a {
                out.push_str(&format!("{pad}{}\n", scalar(e)));
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(a) => a.iter().all(is_flat),
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json_of(args: &[&str]) -> (Value, i32) {
        let mut full = vec!["folijet"];
        full.extend_from_slice(args);
        let o = run(full);
        (serde_json::from_str(&o.stdout).unwrap_or(Value::Null), o.code)
    }

    #[test]
    fn jets_of_the_node() {
        let (v, code) = json_of(&["jets", "scheme", "--ideal", "[x*y]", "--order", "2", "--point", "(0,0)"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["generators"], json!(["a_1_1*a_2_1"]));
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["command", "inputs", "result", "diagnostics"]);
    }

    #[test]
    fn exit_codes() {
        let (v, code) = json_of(&["classify", "--form", "y*d(x) + x*d(", "--point", "(0,0)"]);
        assert_eq!(code, 2);
        assert_eq!(v["diagnostics"][0]["kind"], "parse");
        let (_, code) = json_of(&["classify", "--form", "z*d(x) + x*d(y) + d(z)", "--point", "(0,0,0)"]);
        assert_eq!(code, 4);
        let (_, code) = json_of(&["blowup", "--form", "y*d(x)", "--point", "(0,0)", "--chart", "3"]);
        assert_eq!(code, 2);
    }
}
