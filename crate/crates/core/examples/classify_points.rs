//! Reduced and non-reduced planar singularities, resonance and pre-simple tests.

use folijet::algebra::{rat, Polynomial, VarContext};
use folijet::classify::{classify_reduced_2d, presimple_search, resonance_check};
use folijet::foliation::OneForm;

fn main() -> folijet::Result<()> {
    let ctx = VarContext::new(&["x", "y"])?;
    let x = Polynomial::var(&ctx, 0);
    let y = Polynomial::var(&ctx, 1);
    let o = [rat(0), rat(0)];
    let forms = [
        OneForm::new(&ctx, vec![y.clone(), x.clone()])?,
        OneForm::new(&ctx, vec![y.clone(), -&x])?,
        OneForm::new(&ctx, vec![y.clone(), -&(&x + &y)])?,
        OneForm::new(&ctx, vec![y.clone(), -&(&x.scale(&rat(2)) + &y.pow(2))])?,
        OneForm::new(&ctx, vec![-&x.pow(2), y.clone()])?,
        OneForm::new(&ctx, vec![y.pow(2), -&x.pow(2)])?,
    ];
    for w in &forms {
        let c = classify_reduced_2d(w, &o)?;
        let presimple = presimple_search(w, &o)?.iter().any(|(_, r)| r.presimple);
        println!("{:<32} {:<24} pre-simple: {presimple}", w.to_string(), c.tag.name());
    }
    for l in [vec![rat(1), rat(2)], vec![rat(3), rat(5), rat(-4)]] {
        let shown: Vec<String> = l.iter().map(|q| q.to_string()).collect();
        println!("resonance of ({}): {:?}", shown.join(", "), resonance_check(&l));
    }
    Ok(())
}
