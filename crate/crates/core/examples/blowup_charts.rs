//! Blowing up `y^2 dx - x^2 dy` at the origin and probing for dicriticality.

use folijet::algebra::{rat, Polynomial, VarContext};
use folijet::blowup::{blowup_point_charts, dicritical_probe, transform_form};
use folijet::foliation::OneForm;

fn main() -> folijet::Result<()> {
    let ctx = VarContext::new(&["x", "y"])?;
    let x = Polynomial::var(&ctx, 0);
    let y = Polynomial::var(&ctx, 1);
    let w = OneForm::new(&ctx, vec![y.pow(2), -&x.pow(2)])?;
    for chart in blowup_point_charts(&ctx, &[rat(0), rat(0)])? {
        let t = transform_form(&w, &chart)?;
        println!("chart {} [{}]", chart.index + 1, chart.describe());
        println!("  total      {}", t.raw);
        println!("  saturated  {}  (factor {}, exceptional multiplicity {})", t.saturated, t.factor, t.exceptional_multiplicity);
        println!("  exceptional divisor invariant: {}", t.exceptional_invariant);
    }
    let r = dicritical_probe(&w, 3)?;
    println!("dicritical: {} after {} chart transforms", r.dicritical, r.blowups);
    Ok(())
}
