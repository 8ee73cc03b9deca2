//! Two invariant lines of the radial foliation are strongly tangent, their union is not.

use folijet::algebra::{format_rational, Polynomial, VarContext};
use folijet::foliation::OneForm;
use folijet::groebner::{Containment, Ideal};
use folijet::tangency::strong_tangency_up_to;

fn main() -> folijet::Result<()> {
    let ctx = VarContext::new(&["x", "y"])?;
    let x = Polynomial::var(&ctx, 0);
    let y = Polynomial::var(&ctx, 1);
    let radial = OneForm::new(&ctx, vec![y.clone(), -&x])?;
    let curves = [
        ("xy", &x * &y),
        ("y - x", &y - &x),
        ("xy(y - x)", &(&x * &y) * &(&y - &x)),
    ];
    for (name, g) in curves {
        let v = strong_tangency_up_to(&Ideal::new(&ctx, [g])?, &radial, 4, Containment::Set)?;
        match &v.first_failure {
            None => println!("V({name}): strongly tangent through order {}", v.max_order_checked),
            Some(f) => {
                println!("V({name}): fails at order {} on {}", f.order, f.generator);
                if let Some(w) = &f.witness {
                    for (var, arc) in ["x", "y"].iter().zip(w) {
                        let terms: Vec<String> = arc.iter().map(format_rational).collect();
                        println!("  witness {var}(t) coefficients: [{}]", terms.join(", "));
                    }
                }
            }
        }
    }
    Ok(())
}
