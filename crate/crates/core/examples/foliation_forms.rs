//! Saturation, integrability and invariant hypersurfaces of 1-forms.

use folijet::algebra::{Polynomial, VarContext};
use folijet::foliation::{integrability_check, invariant_hypersurface_check, saturate_form, OneForm};

fn main() -> folijet::Result<()> {
    let ctx = VarContext::new(&["x", "v"])?;
    let x = Polynomial::var(&ctx, 0);
    let v = Polynomial::var(&ctx, 1);
    let w = OneForm::new(&ctx, vec![&(&x.pow(2) * &v.pow(2)) - &(&x.pow(2) * &v), -&x.pow(3)])?;
    let s = saturate_form(&w)?;
    println!("{w}  =  {} * ({})", s.factor, s.form);
    for g in [x.clone(), v.clone(), &v - &Polynomial::one(&ctx)] {
        println!("V({g}) invariant: {}", invariant_hypersurface_check(&s.form, &g)?);
    }

    let c3 = VarContext::new(&["x", "y", "z"])?;
    let y = Polynomial::var(&c3, 1);
    let contact = OneForm::new(&c3, vec![-&y, Polynomial::zero(&c3), Polynomial::one(&c3)])?;
    let r = integrability_check(&contact);
    println!("{contact} integrable: {}", r.integrable);
    Ok(())
}
