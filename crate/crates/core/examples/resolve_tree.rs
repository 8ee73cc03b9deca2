//! Bounded resolution of a dicritical singularity and of a type (C) saddle-node.

use folijet::algebra::{Polynomial, VarContext};
use folijet::foliation::OneForm;
use folijet::resolve::{render_text, resolve_2d};

fn main() -> folijet::Result<()> {
    let ctx = VarContext::new(&["x", "y"])?;
    let x = Polynomial::var(&ctx, 0);
    let y = Polynomial::var(&ctx, 1);
    for w in [
        OneForm::new(&ctx, vec![y.pow(2), -&x.pow(2)])?,
        OneForm::new(&ctx, vec![y.clone(), -&(&x + &y)])?,
    ] {
        print!("{}", render_text(&resolve_2d(&w, 3)?));
        println!();
    }
    Ok(())
}
