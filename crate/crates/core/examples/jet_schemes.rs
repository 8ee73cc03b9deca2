//! Jet ideals of the node `xy = 0` and the normal-crossings oracle.

use folijet::algebra::{rat, Polynomial, VarContext};
use folijet::groebner::{Containment, Ideal};
use folijet::jets::{jet_fiber, jet_ideal_scheme, nc_jet_oracle};

fn main() -> folijet::Result<()> {
    let ctx = VarContext::new(&["x", "y"])?;
    let node = Ideal::new(&ctx, [&Polynomial::var(&ctx, 0) * &Polynomial::var(&ctx, 1)])?;
    for m in 1..=4 {
        let fiber = jet_fiber(&jet_ideal_scheme(&node, m)?, &[rat(0), rat(0)])?;
        let oracle = nc_jet_oracle(&ctx, &[0, 1], m)?;
        let same = fiber.ideal().equals(&oracle.intersection, Containment::Set)?;
        println!("order {m}: {} generators, {} components, matches oracle as a set: {same}",
            fiber.generators().len(), oracle.components.len());
        for g in fiber.generators() {
            println!("  t^{}: {}", g.t_index, g.poly);
        }
    }
    Ok(())
}
