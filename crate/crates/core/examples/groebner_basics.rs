//! Reduced Groebner bases, membership, elimination and saturation.

use folijet::algebra::{Polynomial, VarContext};
use folijet::groebner::{eliminate, saturate_ideal, Containment, Ideal};

fn main() -> folijet::Result<()> {
    let ctx = VarContext::new(&["x", "y", "z"])?;
    let x = Polynomial::var(&ctx, 0);
    let y = Polynomial::var(&ctx, 1);
    let z = Polynomial::var(&ctx, 2);

    // Twisted cubic (t, t^2, t^3).
    let cubic = Ideal::new(&ctx, [&y - &x.pow(2), &z - &x.pow(3)])?;
    let gb = cubic.groebner()?;
    println!("grevlex basis:");
    for g in gb.basis() {
        println!("  {g}");
    }
    println!("x*z - y^2 in I: {}", cubic.contains(&(&(&x * &z) - &y.pow(2)))?);
    println!("eliminating x: {:?}", eliminate(&cubic, &[0])?.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>());

    let fat = Ideal::new(&ctx, [x.pow(2), &x * &y])?;
    println!("x in (x^2, xy) as a scheme: {}", fat.contains_with(&x, Containment::Scheme)?);
    println!("x in (x^2, xy) as a set:    {}", fat.contains_with(&x, Containment::Set)?);
    let sat = saturate_ideal(&fat, &y)?;
    println!("(x^2, xy) : y^inf = {:?}", sat.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>());
    Ok(())
}
