//! Exact polynomial arithmetic over Q.

mod context;
mod gcd;
pub(crate) mod linalg;
mod map;
mod monomial;
mod polynomial;
mod rational;
mod roots;

pub use context::{Ctx, VarContext, VarRole};
pub(crate) use context::same_ctx;
pub use gcd::{poly_gcd, poly_gcd_all, squarefree_part};
pub use map::PolyMap;
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{PointOrder, Polynomial};
pub use rational::{format_rational, parse_rational, rat, ratio, rational_sqrt, Rational};
pub use roots::rational_roots;
