use super::context::same_ctx;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};
use num_traits::One;

/// Greatest common divisor over Q, normalized to be monic in grevlex.
/// The gcd of two zero polynomials is zero.
pub fn poly_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if !same_ctx(f.ctx(), g.ctx()) {
        return Err(Error::ContextMismatch);
    }
    Ok(gcd_rec(f, g).monic())
}

/// Gcd of a list; zero for an empty or all-zero list.
pub fn poly_gcd_all<'a>(
    ctx: &super::Ctx,
    polys: impl IntoIterator<Item = &'a Polynomial>,
) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(ctx);
    for p in polys {
        acc = poly_gcd(&acc, p)?;
        if acc.is_one() {
            break;
        }
    }
    Ok(acc)
}

fn gcd_rec(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(f.ctx());
    }
    let k = f
        .vars_used()
        .into_iter()
        .chain(g.vars_used())
        .max()
        .expect("nonconstant polynomial uses a variable");
    if !f.uses_var(k) {
        return gcd_rec(f, &content(g, k));
    }
    if !g.uses_var(k) {
        return gcd_rec(&content(f, k), g);
    }
    let cf = content(f, k);
    let cg = content(g, k);
    let mut a = f.exact_divide(&cf).expect("content divides");
    let mut b = g.exact_divide(&cg).expect("content divides");
    if a.degree_in(k) < b.degree_in(k) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_remainder(&a, &b, k);
        a = b;
        b = if r.is_zero() { r } else { primitive(&r, k) };
    }
    &gcd_rec(&cf, &cg) * &primitive(&a, k)
}

/// Coefficients of `f` viewed as a polynomial in variable `k`, indexed by degree.
fn coefficients_in(f: &Polynomial, k: usize) -> Vec<Polynomial> {
    let d = f.degree_in(k) as usize;
    let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); d + 1];
    for (m, c) in f.terms() {
        buckets[m.exp(k) as usize].push((m.with_exp(k, 0), c.clone()));
    }
    buckets
        .into_iter()
        .map(|t| Polynomial::from_terms(f.ctx(), t))
        .collect()
}

fn content(f: &Polynomial, k: usize) -> Polynomial {
    let mut acc = Polynomial::zero(f.ctx());
    for c in coefficients_in(f, k) {
        acc = gcd_rec(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive(f: &Polynomial, k: usize) -> Polynomial {
    f.exact_divide(&content(f, k)).expect("content divides")
}

fn pseudo_remainder(a: &Polynomial, b: &Polynomial, k: usize) -> Polynomial {
    let db = b.degree_in(k);
    let lb = coefficients_in(b, k).pop().unwrap();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(k) >= db {
        let dr = r.degree_in(k);
        let lr = coefficients_in(&r, k).pop().unwrap();
        let shift = Monomial::var(a.ctx().len(), k);
        let mut xs = Monomial::one(a.ctx().len());
        for _ in 0..(dr - db) {
            xs = xs.mul(&shift);
        }
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&xs, &Rational::one()));
    }
    r
}

/// Squarefree part of a polynomial in a single variable `k`.
pub fn squarefree_part(f: &Polynomial, k: usize) -> Result<Polynomial> {
    if f.is_constant() {
        return Ok(f.monic());
    }
    let g = poly_gcd(f, &f.derivative(k))?;
    Ok(f.exact_divide(&g)?.monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarContext;

    #[test]
    fn multivariate_gcd() {
        let ctx = VarContext::new(&["x", "y", "z"]).unwrap();
        let x = Polynomial::var(&ctx, 0);
        let y = Polynomial::var(&ctx, 1);
        let z = Polynomial::var(&ctx, 2);
        let common = &(&x * &y) - &z.pow(2);
        let f = &common * &(&x + &y.pow(3));
        let g = &common.scale(&Rational::from_integer(7.into())) * &(&z - &x);
        assert_eq!(poly_gcd(&f, &g).unwrap(), common.monic());
        assert!(poly_gcd(&x, &y).unwrap().is_one());
        assert!(poly_gcd(&y, &(&x + &y)).unwrap().is_one());
        let zero = Polynomial::zero(&ctx);
        assert_eq!(poly_gcd(&zero, &g).unwrap(), g.monic());
        assert!(poly_gcd(&zero, &zero).unwrap().is_zero());
    }

    #[test]
    fn gcd_of_form_coefficients() {
        let ctx = VarContext::new(&["x", "v"]).unwrap();
        let x = Polynomial::var(&ctx, 0);
        let v = Polynomial::var(&ctx, 1);
        let a = &(&x.pow(2) * &v.pow(2)) - &(&x.pow(2) * &v);
        let b = -&x.pow(3);
        assert_eq!(poly_gcd(&a, &b).unwrap(), x.pow(2));
    }

    #[test]
    fn squarefree() {
        let ctx = VarContext::new(&["y"]).unwrap();
        let y = Polynomial::var(&ctx, 0);
        let one = Polynomial::one(&ctx);
        let f = &(&y - &one).pow(3) * &(&y + &one);
        assert_eq!(squarefree_part(&f, 0).unwrap(), &(&y - &one) * &(&y + &one));
    }
}
