#![allow(dead_code)]

//! Randomized invariant suites shared by the property tests and the acceptance report.

use folijet::algebra::{rat, Ctx, Monomial, MonomialOrder, PolyMap, Polynomial, Rational, VarContext};
use folijet::blowup::blowup_chart;
use folijet::classify::{classify_reduced_2d, resonance_check};
use folijet::foliation::{is_saturated, pullback_form, OneForm};
use folijet::groebner::{buchberger, Containment, Ideal};
use folijet::jets::{induced_jet_map, jet_fiber, jet_ideal_foliation, jet_ideal_scheme, jet_truncate, JetIdeal};
use folijet::tangency::strong_tangency_up_to;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const CASES: u32 = 200;

pub fn xy() -> Ctx {
    VarContext::new(&["x", "y"]).unwrap()
}

pub fn xyz() -> Ctx {
    VarContext::new(&["x", "y", "z"]).unwrap()
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        max_global_rejects: cases * 20,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

fn lib<T>(r: folijet::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

/// Polynomials with coefficients in `-c..=c`, at most `terms` terms and total degree `≤ deg`.
pub fn poly(ctx: Ctx, deg: u32, terms: usize, c: i64) -> impl Strategy<Value = Polynomial> {
    let n = ctx.len();
    prop::collection::vec((-c..=c, prop::collection::vec(0..=deg, n)), 0..=terms).prop_map(move |ts| {
        Polynomial::from_terms(
            &ctx,
            ts.into_iter()
                .filter(|(_, e)| e.iter().sum::<u32>() <= deg)
                .map(|(c, e)| (Monomial::from_exponents(e), rat(c))),
        )
    })
}

pub fn nonconstant(ctx: Ctx, deg: u32, terms: usize, c: i64) -> impl Strategy<Value = Polynomial> {
    poly(ctx, deg, terms, c).prop_filter("nonconstant", |p| !p.is_constant())
}

fn form(ctx: &Ctx, coeffs: Vec<Polynomial>) -> OneForm {
    OneForm::new(ctx, coeffs).unwrap()
}

fn same_generators(a: &JetIdeal, b: &JetIdeal) -> bool {
    let key = |j: &JetIdeal| {
        let mut v: Vec<(usize, usize, String)> =
            j.generators().iter().map(|g| (g.t_index, g.source, g.poly.to_string())).collect();
        v.sort();
        v
    };
    key(a) == key(b)
}

/// Ring axioms, plus Groebner bases that reduce their generators and combinations to zero
/// and do not depend on generator order.
pub fn ring_and_groebner(cases: u32) -> Result<(), String> {
    let c = xyz();
    let p = || poly(c.clone(), 3, 4, 4);
    run(cases, (p(), p(), p()), |(f, g, h)| {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f + &(-&f)).is_zero());
        Ok(())
    })?;
    let c = xy();
    let g = || poly(c.clone(), 2, 3, 3);
    run(cases, (g(), g(), g(), g()), |(g1, g2, u, v)| {
        let i = lib(Ideal::new(&xy(), [g1.clone(), g2.clone()]))?;
        let gb = lib(i.groebner())?;
        for b in gb.basis() {
            prop_assert!(lib(gb.normal_form(b))?.is_zero());
        }
        let combo = &(&u * &g1) + &(&v * &g2);
        prop_assert!(lib(i.contains(&combo))?);
        let swapped = lib(Ideal::new(&xy(), [g2.clone(), g1.clone(), combo]))?;
        let other = lib(buchberger(&swapped, &MonomialOrder::Grevlex))?;
        prop_assert_eq!(gb.basis(), other.basis());
        Ok(())
    })
}

/// Truncating order-`m` jets to order `p` gives the order-`p` jets, for schemes and forms.
pub fn truncation_consistency(cases: u32) -> Result<(), String> {
    let c = xy();
    let g = || nonconstant(c.clone(), 3, 3, 3);
    run(cases, (g(), g(), g(), 2usize..=4, 1usize..=3), |(f, a, b, m, p)| {
        let p = p.min(m - 1);
        let ctx = xy();
        let ideal = lib(Ideal::new(&ctx, [f]))?;
        let scheme = lib(jet_ideal_scheme(&ideal, m))?;
        let low = lib(jet_ideal_scheme(&ideal, p))?;
        prop_assert!(same_generators(&lib(jet_truncate(&scheme, p))?, &low));
        let w = form(&ctx, vec![a, b]);
        let fj = lib(jet_ideal_foliation(&w, m))?;
        let fl = lib(jet_ideal_foliation(&w, p))?;
        prop_assert!(same_generators(&lib(jet_truncate(&fj, p))?, &fl));
        let origin = [rat(0), rat(0)];
        let fib = lib(jet_fiber(&fj, &origin))?;
        prop_assert!(same_generators(&lib(jet_truncate(&fib, p))?, &lib(jet_fiber(&fl, &origin))?));
        Ok(())
    })
}

/// Triangular automorphisms `(x, y) -> (u x + p(y), v y + q)` composed with a swap.
fn automorphism() -> impl Strategy<Value = PolyMap> {
    (poly(VarContext::new(&["y"]).unwrap(), 2, 3, 2), prop_oneof![Just(1i64), Just(-1), Just(2)], 1i64..=3, -1i64..=1, any::<bool>())
        .prop_map(|(p, u, v, q, swap)| {
            let c = xy();
            let x = Polynomial::var(&c, 0);
            let y = Polynomial::var(&c, 1);
            let py = p.substitute(&c, std::slice::from_ref(&y)).unwrap();
            let first = &x.scale(&rat(u)) + &py;
            let second = &y.scale(&rat(v)) + &Polynomial::from_int(&c, q);
            let images = if swap { vec![second, first] } else { vec![first, second] };
            PolyMap::new(&c, &c, images).unwrap()
        })
}

/// `J_m(f^{-1} F) = f_m^{-1}(J_m F)` and the same for schemes, on automorphisms and
/// point blow-up charts, orders `≤ 3`.
pub fn change_of_variables(cases: u32) -> Result<(), String> {
    let c = xy();
    let g = || poly(c.clone(), 2, 3, 3);
    let chart = (0usize..2, -1i64..=1, -1i64..=1).prop_map(|(j, a, b)| {
        blowup_chart(&xy(), &[rat(a), rat(b)], j).unwrap().map().clone()
    });
    let map = prop_oneof![automorphism(), chart];
    run(cases, (map, g(), g(), nonconstant(c.clone(), 2, 3, 3), 1usize..=3), |(f, a, b, h, m)| {
        let ctx = xy();
        let w = form(&ctx, vec![a, b]);
        let fm = lib(induced_jet_map(&f, m))?;
        let pulled = lib(pullback_form(&w, &f))?;
        let lhs = lib(jet_ideal_foliation(&pulled, m))?;
        let rhs = lib(fm.pull_jets(&lib(jet_ideal_foliation(&w, m))?))?;
        prop_assert!(same_generators(&lhs, &rhs));
        let hs = lib(f.pull(&h))?;
        if !hs.is_zero() {
            let lhs = lib(jet_ideal_scheme(&lib(Ideal::new(f.source(), [hs]))?, m))?;
            let rhs = lib(fm.pull_jets(&lib(jet_ideal_scheme(&lib(Ideal::new(&ctx, [h]))?, m))?))?;
            prop_assert!(same_generators(&lhs, &rhs));
        }
        Ok(())
    })
}

/// `V(g)` is strongly tangent to `a dg + g η`; then `V(f g)` is strongly tangent to the
/// unsaturated form `f (a dg + g η)` for `f ∈ {x, xy}`.
pub fn unsaturated_transport(cases: u32) -> Result<(), String> {
    let c = xy();
    let small = || poly(c.clone(), 1, 2, 2);
    run(
        cases,
        (nonconstant(c.clone(), 2, 2, 2), small(), small(), small(), any::<bool>(), 1usize..=3),
        |(g, a, e1, e2, use_xy, m)| {
            let ctx = xy();
            let w = form(&ctx, vec![&(&a * &g.derivative(0)) + &(&g * &e1), &(&a * &g.derivative(1)) + &(&g * &e2)]);
            prop_assume!(!w.is_zero());
            let base = lib(strong_tangency_up_to(&lib(Ideal::new(&ctx, [g.clone()]))?, &w, m, Containment::Scheme))?;
            prop_assert!(base.holds, "V(g) should be tangent: {:?}", base.first_failure);
            let x = Polynomial::var(&ctx, 0);
            let f = if use_xy { &x * &Polynomial::var(&ctx, 1) } else { x };
            let wf = lib(w.mul_poly(&f))?;
            let v = lib(strong_tangency_up_to(&lib(Ideal::new(&ctx, [&f * &g]))?, &wf, m, Containment::Set))?;
            prop_assert!(v.holds, "V(fg) not tangent: {:?}", v.first_failure);
            Ok(())
        },
    )
}

fn brute_resonance(l: &[Rational], bound: u64) -> Option<Vec<u64>> {
    let k = l.len();
    let mut phi = vec![0u64; k];
    loop {
        let mut pos = 0;
        loop {
            if pos == k {
                return None;
            }
            phi[pos] += 1;
            if phi[pos] <= bound {
                break;
            }
            phi[pos] = 0;
            pos += 1;
        }
        let s: Rational = phi.iter().zip(l).map(|(&p, x)| Rational::from_integer(p.into()) * x).sum();
        if s.is_zero() {
            return Some(phi.clone());
        }
    }
}

/// `resonance_check` agrees with exhaustive search over `φ_j ≤ 6`, and every witness it
/// returns is a genuine relation.
pub fn resonance_vs_brute_force(cases: u32) -> Result<(), String> {
    let entry = (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()));
    run(cases, prop::collection::vec(entry, 2..=3), |l| {
        let found = resonance_check(&l);
        let brute = brute_resonance(&l, 6);
        if let Some(w) = &found {
            prop_assert_eq!(w.len(), l.len());
            prop_assert!(w.iter().any(|&p| p > 0));
            let s: Rational = w.iter().zip(&l).map(|(&p, x)| Rational::from_integer(p.into()) * x).sum();
            prop_assert!(s.is_zero());
        }
        if brute.is_some() {
            prop_assert!(found.is_some(), "missed relation {:?}", brute);
        }
        Ok(())
    })
}

/// The singularity tag at the origin is unchanged by invertible linear changes of
/// coordinates and by scaling the form.
pub fn classification_invariance(cases: u32) -> Result<(), String> {
    let c = xy();
    let lin = prop::collection::vec(-2i64..=2, 4);
    let quad = || poly(c.clone(), 2, 2, 2).prop_map(|p| p.homogeneous_part(2));
    let mat = prop::collection::vec(-2i64..=2, 4).prop_filter("invertible", |m| m[0] * m[3] - m[1] * m[2] != 0);
    run(cases, (lin, quad(), quad(), mat, prop_oneof![Just(1i64), Just(-3), Just(5)]), |(l, q1, q2, a, s)| {
        let ctx = xy();
        let x = Polynomial::var(&ctx, 0);
        let y = Polynomial::var(&ctx, 1);
        let b1 = &(&x.scale(&rat(l[0])) + &y.scale(&rat(l[1]))) + &q1;
        let b2 = &(&x.scale(&rat(l[2])) + &y.scale(&rat(l[3]))) + &q2;
        let w = form(&ctx, vec![b1, b2]);
        prop_assume!(!w.is_zero() && lib(is_saturated(&w))?);
        let origin = [rat(0), rat(0)];
        let before = lib(classify_reduced_2d(&w, &origin))?;
        let images = vec![
            &x.scale(&rat(a[0])) + &y.scale(&rat(a[1])),
            &x.scale(&rat(a[2])) + &y.scale(&rat(a[3])),
        ];
        let map = lib(PolyMap::new(&ctx, &ctx, images))?;
        let moved = lib(lib(pullback_form(&w, &map))?.mul_poly(&Polynomial::from_int(&ctx, s)))?;
        let after = lib(classify_reduced_2d(&moved, &origin))?;
        prop_assert_eq!(before.tag, after.tag);
        prop_assert_eq!(before.type_c.map(|t| t.r), after.type_c.map(|t| t.r));
        prop_assert_eq!(before.resonance.is_some(), after.resonance.is_some());
        Ok(())
    })
}
