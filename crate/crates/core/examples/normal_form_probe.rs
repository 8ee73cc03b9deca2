//! Jet fibres of normal forms compared with the normal-crossings oracle.

use folijet::algebra::{rat, VarContext};
use folijet::classify::{dimensional_type_estimate, jet_comparison_probe, normal_form_generate, NormalFormSpec};

fn main() -> folijet::Result<()> {
    let ctx = VarContext::new(&["x", "y"])?;
    let o = [rat(0), rat(0)];
    let specs = [
        ("A, lambda = (1, 2)", NormalFormSpec::type_a(vec![rat(1), rat(2)])),
        ("A, lambda = (1, -1)", NormalFormSpec::type_a(vec![rat(1), rat(-1)])),
        ("C, r = 1, a = 1", NormalFormSpec::type_c_slice(1, rat(1))),
    ];
    for (name, spec) in specs {
        let w = normal_form_generate(&spec, &ctx)?;
        let r = jet_comparison_probe(&w, 2, 4, &o)?;
        println!("{name}: {w}");
        println!("  {} (first divergence: {:?})", r.verdict.name(), r.divergence_order);
    }
    let c3 = VarContext::new(&["x", "y", "z", "w"])?;
    let a3 = normal_form_generate(&NormalFormSpec::type_a(vec![rat(1), rat(2), rat(3)]), &c3)?;
    println!("dimensional type of {a3} in 4 variables: {}", dimensional_type_estimate(&a3, &[rat(0), rat(0), rat(0), rat(0)], 1)?);
    Ok(())
}
