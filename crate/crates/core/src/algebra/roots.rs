use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::polynomial::Polynomial;
use super::rational::Rational;

/// Rational roots of a polynomial in the single variable `k`, ascending and without repetition.
pub fn rational_roots(f: &Polynomial, k: usize) -> Vec<Rational> {
    if f.is_zero() || f.is_constant() {
        return Vec::new();
    }
    let d = f.degree_in(k) as usize;
    let mut coeffs = vec![Rational::zero(); d + 1];
    for (m, c) in f.terms() {
        coeffs[m.exp(k) as usize] = c.clone();
    }
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Rational::zero());
        ints.drain(..low);
    }
    if ints.len() > 1 {
        let lead = ints.last().unwrap().abs();
        let tail = ints[0].abs();
        let ps = divisors(&tail);
        let qs = divisors(&lead);
        for p in &ps {
            for q in &qs {
                for sign in [1, -1] {
                    let r = Rational::new(p * BigInt::from(sign), q.clone());
                    if !roots.contains(&r) && horner(&ints, &r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

fn horner(ints: &[BigInt], x: &Rational) -> Rational {
    ints.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let e = n / &d;
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio, VarContext};

    #[test]
    fn finds_rational_roots() {
        let ctx = VarContext::new(&["y"]).unwrap();
        let y = Polynomial::var(&ctx, 0);
        let c = |a: i64, b: i64| Polynomial::constant(&ctx, ratio(a, b));
        let f = &(&(&y - &c(1, 2)) * &(&y + &c(3, 1))) * &(&y.pow(2) - &c(2, 1));
        let f = &f * &y;
        assert_eq!(rational_roots(&f, 0), vec![rat(-3), rat(0), ratio(1, 2)]);
        assert!(rational_roots(&(&y.pow(2) + &c(1, 1)), 0).is_empty());
    }
}
