//! Trial functions, one per suite.

use super::report::Checks;
use super::{trial_seed, Suite, Trial};
use crate::error::AlgebraError;
use crate::grassmann::{GrassmannElement as GE, Parity};
use crate::lambda_module::{
    act_both, act_left, act_right, antiscalar, apply, char_fn_even, char_fn_odd, char_poly_even,
    char_poly_odd, eigen_rhs, eigenvalues, eigenvector, odd_antiscalar, odd_scalar, queer_mul, scalar,
    star_product, Actor, Branch, QueerElement, ScalarPair,
};
use crate::reduced::{Reduced, ReducedKind};
use crate::sample::Sampler;
use crate::semigroups::{
    band_mul, c_idempotent_defect, rees_laws, sandwich_product, sandwich_set_product, sqrt_member,
    sqrt_square, triple_product_shape, tsg_ideal_class, tsg_member, BandElement, Sandwich, SetLabel,
    TsgIdeal,
};
use crate::supermatrix::{InvertibilityClass, OddMatrix, ShapeClass, SuperMatrix};
use num_traits::Zero;
use serde_json::json;
use std::collections::BTreeSet;

pub(crate) type TrialFn = fn(&Trial, &mut Sampler, &mut Checks);

pub(crate) fn trial_fn(suite: Suite) -> TrialFn {
    match suite {
        Suite::Kernel => kernel,
        Suite::Berezinian => berezinian,
        Suite::Invertibility => invertibility,
        Suite::Transposes => transposes,
        Suite::Tsg => tsg,
        Suite::Bands => bands,
        Suite::Rees => rees,
        Suite::Sqrt => sqrt,
        Suite::Tables => tables,
        Suite::SandwichSet => sandwich_set,
        Suite::Scalars => scalars,
        Suite::AntiTranspose => anti_transpose,
        Suite::ModuleLaws => module_laws,
        Suite::Star => star,
        Suite::Eigen => eigen,
        Suite::CayleyHamilton => cayley_hamilton,
    }
}

fn th(n: usize, i: usize) -> GE {
    GE::generator(n, i).expect("generator in range")
}

fn blade(n: usize, idx: &[usize]) -> GE {
    GE::blade(n, idx).expect("blade in range")
}

fn int(n: usize, k: i64) -> GE {
    GE::int(n, k)
}

fn sm(a: GE, alpha: GE, beta: GE, b: GE) -> SuperMatrix {
    SuperMatrix::new(a, alpha, beta, b).expect("graded entries")
}

fn odd_sm(a: GE, alpha: GE, beta: GE, b: GE) -> OddMatrix {
    OddMatrix::new(a, alpha, beta, b).expect("graded entries")
}

fn code<T>(r: &crate::error::Result<T>) -> Option<&'static str> {
    r.as_ref().err().map(AlgebraError::code)
}

macro_rules! try_ok {
    ($c:expr, $law:expr, $result:expr, $inputs:expr) => {
        match $c.ok($law, $result, $inputs) {
            Some(v) => v,
            None => return,
        }
    };
}

/// θᵢθⱼ = −θⱼθᵢ and θᵢ² = 0 for every pair of generators.
pub fn generator_relations(n: usize, c: &mut Checks) {
    for i in 1..=n {
        let ti = th(n, i);
        c.holds("generator-square", (&ti * &ti).is_zero(), || json!({ "i": i }));
        for j in 1..=n {
            let tj = th(n, j);
            c.eq("generator-anticommutation", &(&ti * &tj), &-(&tj * &ti), || json!({ "i": i, "j": j }));
        }
    }
}

fn kernel(t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let n = t.gens;
    if t.index == 0 {
        generator_relations(n, c);
    }
    let (x, y, z) = (s.element(), s.element(), s.element());
    let inputs = || json!({ "x": &x, "y": &y, "z": &z });
    c.eq("associativity", &(&(&x * &y) * &z), &(&x * &(&y * &z)), inputs);
    c.eq("distributivity", &(&x * &(&y + &z)), &(&(&x * &y) + &(&x * &z)), inputs);
    let xy = &x * &y;
    c.eq("body-homomorphism", &xy.body().to_string(), &(x.body() * y.body()).to_string(), inputs);
    let either_soul = x.body().is_zero() || y.body().is_zero();
    c.holds("soul-ideal", !either_soul || xy.body().is_zero(), inputs);

    let (p, q) = (s.homogeneous(), s.homogeneous());
    let both_odd = p.parity() == Parity::Odd && q.parity() == Parity::Odd;
    let qp = &q * &p;
    let expected = if both_odd { -&qp } else { qp };
    c.eq("graded-commutativity", &expected, &(&p * &q), || json!({ "x": &p, "y": &q }));

    let sx = x.soul();
    c.holds("soul-nilpotent", sx.pow(n as u32 + 1).is_zero(), || json!({ "x": &x }));
    match sx.nilpotency_index() {
        Some(k) => {
            let minimal = k == 1 || !sx.pow(k - 1).is_zero();
            c.holds("nilpotency-index", k as usize <= n + 1 && sx.pow(k).is_zero() && minimal, || {
                json!({ "x": &sx, "index": k })
            });
        }
        None => {
            c.holds("nilpotency-index", false, || json!({ "x": &sx }));
        }
    }
    c.holds("nilpotency-index-unit", s.unit().nilpotency_index().is_none(), || json!(null));

    let u = s.unit();
    let inv = try_ok!(c, "inversion-round-trip", u.invert(), || json!({ "x": &u }));
    let one = GE::one(n);
    c.eq("inversion-round-trip", &one, &(&u * &inv), || json!({ "x": &u }));
    c.eq("inversion-round-trip", &one, &(&inv * &u), || json!({ "x": &u }));
    c.eq("inversion-undefined", &Some("NotInvertible"), &code(&sx.invert()), || {
        json!({ "x": &sx })
    });
}

fn berezinian(_t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let n = s.num_generators();
    let m = s.m_double_prime();
    let inputs = || json!({ "m": &m });
    let ber = try_ok!(c, "ber-additivity", m.ber(), inputs);
    let be = try_ok!(c, "ber-additivity", m.even_part().ber(), inputs);
    let bo = try_ok!(c, "ber-additivity", m.odd_part().ber(), inputs);
    c.eq("ber-additivity", &ber, &(&be + &bo), inputs);
    c.holds("ber-even", ber.is_even(), inputs);

    let tm = sm(GE::zero(n), s.odd(), s.odd(), s.even_unit());
    let inputs = || json!({ "t": &tm });
    let bt = try_ok!(c, "odd-degeneracy-square", tm.ber(), inputs);
    c.holds("odd-degeneracy-square", (&bt * &bt).is_zero(), inputs);
    let btt = try_ok!(c, "odd-degeneracy-product", (&tm * &tm).ber(), inputs);
    c.holds("odd-degeneracy-product", btt.is_zero(), inputs);

    let (g1, g2) = (s.group(), s.group());
    let inputs = || json!({ "m1": &g1, "m2": &g2 });
    let b1 = try_ok!(c, "ber-multiplicativity", g1.ber(), inputs);
    let b2 = try_ok!(c, "ber-multiplicativity", g2.ber(), inputs);
    let b12 = try_ok!(c, "ber-multiplicativity", (&g1 * &g2).ber(), inputs);
    c.eq("ber-multiplicativity", &b12, &(&b1 * &b2), inputs);
    let bi = try_ok!(c, "ber-inverse", g1.ber_inv(), inputs);
    c.eq("ber-inverse", &GE::one(n), &(&bi * &b1), inputs);

    let (m1, m2) = (s.matrix(), s.matrix());
    c.eq("str-cyclicity", &(&m1 * &m2).str(), &(&m2 * &m1).str(), || json!({ "m1": &m1, "m2": &m2 }));
    c.holds("str-even", m1.str().is_even(), || json!({ "m": &m1 }));

    let soul_b = sm(s.diagonal_entry(), s.odd(), s.odd(), s.even_soul());
    c.eq("ber-undefined", &Some("BerUndefined"), &code(&soul_b.ber()), || json!({ "m": &soul_b }));
    let soul_a = sm(s.even_soul(), s.odd(), s.odd(), s.diagonal_entry());
    c.eq("ber-inv-undefined", &Some("BerInvUndefined"), &code(&soul_a.ber_inv()), || {
        json!({ "m": &soul_a })
    });
}

fn expected_class(m: &SuperMatrix) -> InvertibilityClass {
    match (m.a().has_unit_body(), m.b().has_unit_body()) {
        (true, true) => InvertibilityClass::Group,
        (true, false) => InvertibilityClass::JPrime,
        (false, true) => InvertibilityClass::JDoublePrime,
        (false, false) => InvertibilityClass::CoreIdeal,
    }
}

fn invertibility(_t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let n = s.num_generators();
    let (m1, m2) = (s.matrix(), s.matrix());
    let p = &m1 * &m2;
    let inputs = || json!({ "m1": &m1, "m2": &m2 });
    c.eq("body-a-homomorphism", &p.a().body().to_string(), &(m1.a().body() * m2.a().body()).to_string(), inputs);
    c.eq("body-b-homomorphism", &p.b().body().to_string(), &(m1.b().body() * m2.b().body()).to_string(), inputs);
    c.eq("filter-law", &(m1.is_invertible() && m2.is_invertible()), &p.is_invertible(), inputs);
    c.holds("isolated-ideal", p.is_invertible() || !m1.is_invertible() || !m2.is_invertible(), inputs);
    let a_soul = !m1.a().has_unit_body() || !m2.a().has_unit_body();
    c.holds("i-prime-ideal", !a_soul || !p.a().has_unit_body(), inputs);
    let b_soul = !m1.b().has_unit_body() || !m2.b().has_unit_body();
    c.holds("i-double-prime-ideal", !b_soul || !p.b().has_unit_body(), inputs);
    for m in [&m1, &m2, &p] {
        c.eq("invertibility-partition", &expected_class(m).name(), &m.invertibility().name(), || {
            json!({ "m": m })
        });
        if !m.is_invertible() {
            c.eq("inverse-undefined", &Some("NotInvertible"), &code(&m.invert()), || json!({ "m": m }));
        }
    }

    let g = s.group();
    let inputs = || json!({ "m": &g });
    let gi = try_ok!(c, "inverse-round-trip", g.invert(), inputs);
    let id = SuperMatrix::identity(n);
    c.eq("inverse-round-trip", &id, &(&g * &gi), inputs);
    c.eq("inverse-round-trip", &id, &(&gi * &g), inputs);

    let t = s.odd_reduced();
    let class = t.invertibility();
    c.holds(
        "odd-reduced-in-i-prime",
        !t.a().has_unit_body()
            && matches!(class, InvertibilityClass::JDoublePrime | InvertibilityClass::CoreIdeal),
        || json!({ "t": &t }),
    );
    let a = s.matrix_in(SetLabel::A);
    c.eq("antidiagonal-core-ideal", &InvertibilityClass::CoreIdeal.name(), &a.invertibility().name(), || {
        json!({ "a": &a })
    });
}

fn shape_oracle(m: &SuperMatrix) -> BTreeSet<ShapeClass> {
    let (a0, al0, be0, b0) = (m.a().is_zero(), m.alpha().is_zero(), m.beta().is_zero(), m.b().is_zero());
    let mut out = BTreeSet::new();
    for (shape, holds) in [
        (ShapeClass::EvenReduced, be0),
        (ShapeClass::OddReduced, a0),
        (ShapeClass::Diagonal, al0 && be0),
        (ShapeClass::Antidiagonal, a0 && b0),
        (ShapeClass::LowerTriangular, al0),
        (ShapeClass::PiOddReduced, b0),
    ] {
        if holds {
            out.insert(shape);
        }
    }
    if out.is_empty() {
        out.insert(ShapeClass::General);
    }
    out
}

fn transposes(_t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let m = s.matrix();
    let (a, al, be, b) = (m.a().clone(), m.alpha().clone(), m.beta().clone(), m.b().clone());
    let inputs = || json!({ "m": &m });
    c.eq("st-formula", &sm(a.clone(), be.clone(), -&al, b.clone()), &m.st(), inputs);
    c.eq("st-square", &sm(a.clone(), -&al, -&be, b.clone()), &m.st().st(), inputs);
    c.eq("st-order-four", &m, &m.st().st().st().st(), inputs);
    c.eq("st-preserves-str", &m.str(), &m.st().str(), inputs);
    c.eq("pi-formula", &sm(b.clone(), be.clone(), al.clone(), a.clone()), &m.pi(), inputs);
    c.eq("pi-involution", &m, &m.pi().pi(), inputs);
    c.eq("parts-reassemble", &m, &(&m.diag_part() + &m.adiag_part()), inputs);
    c.eq("even-part-idempotent", &m.even_part(), &m.even_part().even_part(), inputs);
    c.eq("odd-part-idempotent", &m.odd_part(), &m.odd_part().odd_part(), inputs);
    let names = |set: BTreeSet<ShapeClass>| set.into_iter().map(ShapeClass::name).collect::<Vec<_>>();
    c.eq("shape-predicates", &names(shape_oracle(&m)), &names(m.shapes()), inputs);
    c.holds("primary-shape", m.shapes().contains(&m.primary_shape()), inputs);

    let n2 = s.matrix();
    c.eq("st-antihomomorphism", &(&n2.st() * &m.st()), &(&m * &n2).st(), || json!({ "m": &m, "n": &n2 }));

    let md = s.m_double_prime();
    let inputs = || json!({ "m": &md });
    let b1 = try_ok!(c, "st-preserves-ber", md.ber(), inputs);
    let b2 = try_ok!(c, "st-preserves-ber", md.st().ber(), inputs);
    c.eq("st-preserves-ber", &b1, &b2, inputs);

    let sr = s.even_reduced();
    c.eq("even-part-fixes-s", &sr, &sr.even_part(), || json!({ "s": &sr }));
}

/// [[0, γp], [γq, b]]
fn common_line(gamma: &GE, p: &GE, q: &GE, b: &GE) -> SuperMatrix {
    sm(GE::zero(gamma.num_generators()), gamma * p, gamma * q, b.clone())
}

/// Zero with probability 1/4, otherwise a sampled even element.
fn even_or_zero(s: &mut Sampler) -> GE {
    if s.index(4) == 0 {
        GE::zero(s.num_generators())
    } else {
        s.even()
    }
}

fn expected_ideal(t: &SuperMatrix) -> TsgIdeal {
    if t.b().is_zero() {
        TsgIdeal::TwoSided
    } else if t.beta().is_zero() {
        TsgIdeal::LeftIdeal
    } else if t.alpha().is_zero() {
        TsgIdeal::RightIdeal
    } else {
        TsgIdeal::Plain
    }
}

/// An odd-reduced member with α = θᵢx, β = θᵢy for a random i.
fn shared_generator_member(s: &mut Sampler) -> SuperMatrix {
    let n = s.num_generators();
    let g = th(n, s.index(n) + 1);
    let (x, y, b) = (s.even(), s.even(), s.even());
    sm(GE::zero(n), &g * &x, &g * &y, b)
}

fn tsg(_t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let n = s.num_generators();
    let gamma = s.odd_nonzero();
    let member = |s: &mut Sampler| {
        let (p, q, b) = (even_or_zero(s), even_or_zero(s), even_or_zero(s));
        common_line(&gamma, &p, &q, &b)
    };
    let t1 = member(s);
    let t2 = member(s);
    let left = common_line(&gamma, &s.even(), &GE::zero(n), &s.even());
    let right = common_line(&gamma, &GE::zero(n), &s.even(), &s.even());
    let two = common_line(&gamma, &s.even(), &s.even(), &GE::zero(n));
    let inputs = || json!({ "t1": &t1, "t2": &t2, "left": &left, "right": &right, "two_sided": &two });

    c.holds("tsg-member", [&t1, &t2, &left, &right, &two].iter().all(|m| tsg_member(m)), inputs);
    c.holds("tsg-closure", tsg_member(&(&t1 * &t2)), inputs);
    for m in [&t1, &t2] {
        let lp = m * &left;
        c.holds("tsg-left-ideal", tsg_member(&lp) && lp.beta().is_zero(), inputs);
        let rp = &right * m;
        c.holds("tsg-right-ideal", tsg_member(&rp) && rp.alpha().is_zero(), inputs);
        let (x, y) = (m * &two, &two * m);
        c.holds(
            "tsg-two-sided-ideal",
            tsg_member(&x) && tsg_member(&y) && x.b().is_zero() && y.b().is_zero(),
            inputs,
        );
    }
    for m in [&t1, &t2, &left, &right, &two] {
        let class = try_ok!(c, "tsg-ideal-class", tsg_ideal_class(m), inputs);
        c.holds("tsg-ideal-class", class == expected_ideal(m), inputs);
    }

    // Independent members: αβ = 0 through a shared generator inside each
    // factor only.
    let (g1, g2) = (shared_generator_member(s), shared_generator_member(s));
    let inputs = || json!({ "t1": &g1, "t2": &g2 });
    c.holds("tsg-member", tsg_member(&g1) && tsg_member(&g2), inputs);
    c.observe("tsg-closure-general", tsg_member(&(&g1 * &g2)), inputs);
    let gl = sm(GE::zero(n), g2.alpha().clone(), GE::zero(n), g2.b().clone());
    let gr = sm(GE::zero(n), GE::zero(n), g2.beta().clone(), g2.b().clone());
    let gt = sm(GE::zero(n), g2.alpha().clone(), g2.beta().clone(), GE::zero(n));
    let lp = &g1 * &gl;
    c.holds("tsg-left-ideal", tsg_member(&lp) && lp.beta().is_zero(), inputs);
    let rp = &gr * &g1;
    c.holds("tsg-right-ideal", tsg_member(&rp) && rp.alpha().is_zero(), inputs);
    let (x, y) = (&g1 * &gt, &gt * &g1);
    c.observe(
        "tsg-two-sided-ideal-general",
        tsg_member(&x) && tsg_member(&y) && x.b().is_zero() && y.b().is_zero(),
        inputs,
    );

    let outside = sm(GE::zero(n), s.odd(), s.odd(), s.even());
    if !tsg_member(&outside) {
        c.eq("tsg-non-member", &Some("NotMember"), &code(&tsg_ideal_class(&outside)), || {
            json!({ "t": &outside })
        });
    }
}

/// Three distinct nonzero odd α shared by all trials of a bands run.
pub fn band_alphas(gens: usize, master: u64) -> Vec<GE> {
    let mut out: Vec<GE> = Vec::new();
    let mut k = 0;
    while out.len() < 3 {
        let a = Sampler::new(gens, trial_seed(master, "bands-alpha", k)).odd_nonzero();
        k += 1;
        // ∧(1) has a single odd direction; repeats are unavoidable there
        if !out.contains(&a) || k > 64 {
            out.push(a);
        }
    }
    out
}

fn bands(t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let alphas = band_alphas(t.gens, t.master);
    let alpha = alphas[(t.index % 3) as usize].clone();
    let (t1, u1, v1, t2, u2, v2) = (s.even(), s.even(), s.even(), s.even(), s.even(), s.even());
    let inputs = || json!({ "alpha": &alpha, "t1": &t1, "u1": &u1, "v1": &v1, "t2": &t2, "u2": &u2, "v2": &v2 });

    let z1 = try_ok!(c, "z-law", BandElement::z(alpha.clone(), t1.clone()), inputs);
    let z2 = try_ok!(c, "z-law", BandElement::z(alpha.clone(), t2.clone()), inputs);
    let zz = try_ok!(c, "z-law", band_mul(&z1, &z2), inputs);
    c.eq("z-law", &z1, &zz, inputs);
    c.eq("z-homomorphism", &zz.realize(), &(&z1.realize() * &z2.realize()), inputs);
    let rz = z1.realize();
    c.eq("z-idempotent", &rz, &(&rz * &rz), inputs);
    c.eq("z-realize", &sm(GE::zero(t.gens), &alpha * &t1, alpha.clone(), GE::one(t.gens)), &rz, inputs);

    let b1 = try_ok!(c, "b-law", BandElement::b(alpha.clone(), t1.clone(), u1.clone()), inputs);
    let b2 = try_ok!(c, "b-law", BandElement::b(alpha.clone(), t2.clone(), u2.clone()), inputs);
    let bb = try_ok!(c, "b-law", band_mul(&b1, &b2), inputs);
    let expect_b = try_ok!(c, "b-law", BandElement::b(alpha.clone(), t1.clone(), u2.clone()), inputs);
    c.eq("b-law", &expect_b, &bb, inputs);
    c.eq("b-homomorphism", &bb.realize(), &(&b1.realize() * &b2.realize()), inputs);
    let rb = b1.realize();
    c.eq("b-idempotent", &rb, &(&rb * &rb), inputs);

    let c1 = try_ok!(c, "c-law", BandElement::c(alpha.clone(), t1.clone(), u1.clone(), v1.clone()), inputs);
    let c2 = try_ok!(c, "c-law", BandElement::c(alpha.clone(), t2.clone(), u2.clone(), v2.clone()), inputs);
    let cc = try_ok!(c, "c-law", band_mul(&c1, &c2), inputs);
    let expect_c = try_ok!(c, "c-law", BandElement::c(alpha.clone(), &t1 * &v2, &u2 * &v1, &v1 * &v2), inputs);
    c.eq("c-law", &expect_c, &cc, inputs);
    c.eq("c-homomorphism", &cc.realize(), &(&c1.realize() * &c2.realize()), inputs);
    let rc = c1.realize();
    let defect = try_ok!(c, "c-idempotent-defect", c_idempotent_defect(&c1), inputs);
    c.eq("c-idempotent-defect", &defect.realize(), &(&(&rc * &rc) - &rc), inputs);

    c.holds("band-kind-mismatch", band_mul(&z1, &b2).is_err(), inputs);
}

fn rees(_t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let alpha = s.odd_nonzero();
    let p1 = (s.even(), s.even());
    let p2 = (s.even(), s.even());
    if let Err(e) = rees_laws(c, &alpha, &p1, &p2) {
        c.ok::<(), _>("rees-homomorphism", Err(e), || json!({ "alpha": &alpha }));
    }
}

fn sqrt(t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let n = t.gens;
    let z = || GE::zero(n);
    if t.index == 0 && n >= 3 {
        let m = sm(z(), th(n, 1), th(n, 2), blade(n, &[2, 3]));
        let expected = try_ok!(
            c,
            "sqrt-example-1",
            sm(int(n, 1), th(n, 3), z(), int(n, -1)).even_lmul(&blade(n, &[1, 2])),
            || json!(null)
        );
        let got = try_ok!(c, "sqrt-example-1", sqrt_square(&m), || json!({ "t": &m }));
        c.eq("sqrt-example-1", &expected, &got, || json!({ "t": &m }));
        let m = sm(z(), th(n, 1), th(n, 2), z());
        let expected = sm(blade(n, &[1, 2]), z(), z(), -&blade(n, &[1, 2]));
        let got = try_ok!(c, "sqrt-example-2", sqrt_square(&m), || json!({ "t": &m }));
        c.eq("sqrt-example-2", &expected, &got, || json!({ "t": &m }));
    }

    let alpha = s.odd();
    let case = t.index % 3;
    let (beta, b, gamma) = match case {
        0 => {
            let (beta, gamma) = (s.odd(), s.odd());
            (beta.clone(), &beta * &gamma, Some(gamma))
        }
        1 => (s.odd(), z(), None),
        _ => {
            let g = th(n, s.index(n) + 1);
            (&g * &s.even(), &g * &s.odd(), None)
        }
    };
    let m = sm(z(), alpha.clone(), beta.clone(), b.clone());
    let inputs = || json!({ "t": &m });
    c.holds("sqrt-member", sqrt_member(&m), inputs);
    let sq = try_ok!(c, "sqrt-even-reduced", sqrt_square(&m), inputs);
    c.holds("sqrt-even-reduced", sq.is_shape(ShapeClass::EvenReduced), inputs);
    let ab = &alpha * &beta;
    match (case, gamma) {
        (0, Some(gamma)) => {
            let shape = sm(int(n, 1), gamma, z(), int(n, -1));
            let expected = try_ok!(c, "sqrt-closed-form", shape.even_lmul(&ab), inputs);
            c.eq("sqrt-closed-form", &expected, &sq, inputs);
        }
        (1, _) => {
            let expected = sm(ab.clone(), z(), z(), -&ab);
            c.eq("sqrt-closed-form-antidiagonal", &expected, &sq, inputs);
        }
        _ => {}
    }

    let outside = sm(z(), s.odd(), s.odd_nonzero(), s.even_unit());
    c.holds("sqrt-non-member", !sqrt_member(&outside) && sqrt_square(&outside).is_err(), || {
        json!({ "t": &outside })
    });
}

const PAIR_ROWS: [(SetLabel, SetLabel, SetLabel, &str); 10] = {
    use SetLabel::*;
    [
        (S, S, S, "S*S->S"),
        (D, D, D, "D*D->D"),
        (D, S, S, "D*S->S"),
        (S, D, S, "S*D->S"),
        (A, T, S, "A*T->S"),
        (A, S, T, "A*S->T"),
        (T, A, Sst, "T*A->Sst"),
        (S, A, TPi, "S*A->TPi"),
        (T, S, T, "T*S->T"),
        (A, A, D, "A*A->D"),
    ]
};

const TRIPLE_ROWS: [(SetLabel, SetLabel, SetLabel, SetLabel, &str); 4] = {
    use SetLabel::*;
    [
        (S, A, T, S, "S*A*T->S"),
        (T, A, T, T, "T*A*T->T"),
        (S, D, S, S, "S*D*S->S"),
        (T, D, S, T, "T*D*S->T"),
    ]
};

const ODOT_ROWS: [(ReducedKind, ReducedKind, &str); 4] = {
    use ReducedKind::*;
    [
        (Even, Odd, "S.T->S"),
        (Odd, Odd, "T.T->T"),
        (Even, Even, "S.S->S"),
        (Odd, Even, "T.S->T"),
    ]
};

fn sample_sandwich(s: &mut Sampler) -> Sandwich {
    let n = s.num_generators();
    let d = sm(s.even(), GE::zero(n), GE::zero(n), s.even());
    let a = sm(GE::zero(n), s.odd(), s.odd(), GE::zero(n));
    Sandwich::new(d, a).expect("sandwich shapes")
}

fn tables(t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let n = t.gens;
    for (x, y, target, law) in PAIR_ROWS {
        debug_assert_eq!(crate::semigroups::set_product_shape(x, y), Some(target));
        let (mx, my) = (s.matrix_in(x), s.matrix_in(y));
        c.holds(law, target.contains(&(&mx * &my)), || json!({ "x": &mx, "y": &my }));
    }
    for (x, w, y, target, law) in TRIPLE_ROWS {
        debug_assert_eq!(triple_product_shape(x, w, y), Some(target));
        let (mx, mw, my) = (s.matrix_in(x), s.matrix_in(w), s.matrix_in(y));
        c.holds(law, target.contains(&(&(&mx * &mw) * &my)), || json!({ "x": &mx, "w": &mw, "y": &my }));
    }
    let w = sample_sandwich(s);
    for (k1, k2, law) in ODOT_ROWS {
        let (r1, r2) = (s.reduced_of(k1), s.reduced_of(k2));
        let inputs = || json!({ "r1": &r1, "r2": &r2, "d": w.diag(), "a": w.adiag() });
        let out = try_ok!(c, law, sandwich_product(&r1, &r2, &w), inputs);
        c.holds(law, out.matrix().is_shape(k1.shape()) && out.kind() == k1, inputs);
    }

    let (ms, mt) = (s.matrix_in(SetLabel::S), s.matrix_in(SetLabel::T));
    let p = &ms * &mt;
    c.observe("S*T in S or T", SetLabel::S.contains(&p) || SetLabel::T.contains(&p), || {
        json!({ "s": &ms, "t": &mt })
    });
    if t.index == 0 && n >= 3 {
        let z = || GE::zero(n);
        let ws = sm(int(n, 1), th(n, 1), z(), z());
        let wt = sm(z(), th(n, 2), th(n, 3), int(n, 1));
        let p = &ws * &wt;
        c.holds("S*T witness in S", SetLabel::S.contains(&p) && !SetLabel::T.contains(&p), || {
            json!({ "s": &ws, "t": &wt })
        });
        let ws = sm(int(n, 2), z(), z(), int(n, 1));
        let wt = sm(z(), th(n, 1), th(n, 2), int(n, 1));
        let p = &ws * &wt;
        c.holds("S*T witness in T", SetLabel::T.contains(&p) && !SetLabel::S.contains(&p), || {
            json!({ "s": &ws, "t": &wt })
        });
    }
}

fn kinds(index: u64) -> [ReducedKind; 3] {
    let k = |bit: u64| {
        if index >> bit & 1 == 0 {
            ReducedKind::Even
        } else {
            ReducedKind::Odd
        }
    };
    [k(0), k(1), k(2)]
}

fn fixed_sandwich(n: usize) -> Sandwich {
    let d = SuperMatrix::diag(int(n, 2), int(n, 3)).expect("even entries");
    let a = SuperMatrix::antidiag(th(n, 1), th(n, n.min(2))).expect("odd entries");
    Sandwich::new(d, a).expect("sandwich shapes")
}

fn sandwich_set(t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let [k1, k2, k3] = kinds(t.index);
    let (r1, r2, r3) = (s.reduced_of(k1), s.reduced_of(k2), s.reduced_of(k3));
    for (law, w) in [
        ("odot-associativity-fixed", fixed_sandwich(t.gens)),
        ("odot-associativity-sampled", sample_sandwich(s)),
    ] {
        let inputs = || json!({ "r1": &r1, "r2": &r2, "r3": &r3, "d": w.diag(), "a": w.adiag() });
        let r12 = try_ok!(c, law, sandwich_product(&r1, &r2, &w), inputs);
        let lhs = try_ok!(c, law, sandwich_product(&r12, &r3, &w), inputs);
        let r23 = try_ok!(c, law, sandwich_product(&r2, &r3, &w), inputs);
        let rhs = try_ok!(c, law, sandwich_product(&r1, &r23, &w), inputs);
        c.eq(law, lhs.matrix(), rhs.matrix(), inputs);
        c.holds("odot-left-label", r12.kind() == k1 && r12.matrix().is_shape(k1.shape()), inputs);
        let middle = match k2 {
            ReducedKind::Even => w.diag(),
            ReducedKind::Odd => w.adiag(),
        };
        c.eq("odot-expansion", &(&(r1.matrix() * middle) * r2.matrix()), r12.matrix(), inputs);
        if Reduced::classify(r2.matrix().clone()).map(|r| r.kind()) == Ok(k2) {
            let raw = try_ok!(
                c,
                "odot-set-product-agrees",
                sandwich_set_product(r1.matrix(), r2.matrix(), w.diag(), w.adiag()),
                inputs
            );
            c.eq("odot-set-product-agrees", r12.matrix(), &raw, inputs);
        }
    }
}

fn scalars(_t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let n = s.num_generators();
    let z = || GE::zero(n);
    let (c1, c2, x) = (s.odd(), s.odd(), s.even());
    let inputs = || json!({ "chi1": &c1, "chi2": &c2, "x": &x });
    let e1 = try_ok!(c, "antiscalar-formula", antiscalar(&c1), inputs);
    let e2 = try_ok!(c, "antiscalar-formula", antiscalar(&c2), inputs);
    c.eq("antiscalar-formula", &sm(z(), c1.clone(), c1.clone(), z()), &e1, inputs);
    c.eq("antiscalar-anticommute", &SuperMatrix::zero(n), &(&(&e1 * &e2) + &(&e2 * &e1)), inputs);
    c.eq("antiscalar-square-zero", &SuperMatrix::zero(n), &(&e1 * &e1), inputs);
    let ex = try_ok!(c, "scalar-formula", scalar(&x), inputs);
    c.eq("scalar-formula", &sm(x.clone(), z(), z(), x.clone()), &ex, inputs);
    let m = s.matrix();
    c.eq("scalar-central", &(&ex * &m), &(&m * &ex), || json!({ "x": &x, "m": &m }));
    c.eq("scalar-unit", &SuperMatrix::identity(n), &scalar(&GE::one(n)).expect("even"), inputs);

    let q1 = try_ok!(c, "queer-homomorphism", QueerElement::new(s.even(), s.odd()), inputs);
    let q2 = try_ok!(c, "queer-homomorphism", QueerElement::new(s.even(), s.odd()), inputs);
    let inputs = || json!({ "q1": [q1.x(), q1.chi()], "q2": [q2.x(), q2.chi()] });
    let q12 = try_ok!(c, "queer-homomorphism", queer_mul(&q1, &q2), inputs);
    let product = &q1.realize() * &q2.realize();
    c.eq("queer-homomorphism", &product, &q12.realize(), inputs);
    c.holds("queer-closure", product.a() == product.b() && product.alpha() == product.beta(), inputs);
    let parts = &scalar(q1.x()).expect("even") + &antiscalar(q1.chi()).expect("odd");
    c.eq("queer-decomposition", &parts, &q1.realize(), inputs);

    let inputs = || json!({ "chi": &c1, "x": &x });
    let os = try_ok!(c, "odd-scalar-formula", odd_scalar(&c1), inputs);
    c.eq("odd-scalar-formula", &odd_sm(c1.clone(), z(), z(), -&c1), &os, inputs);
    c.eq("odd-scalar-square", &SuperMatrix::zero(n), &(&os * &os), inputs);
    let oa = try_ok!(c, "odd-antiscalar-formula", odd_antiscalar(&x), inputs);
    c.eq("odd-antiscalar-formula", &odd_sm(z(), x.clone(), x.clone(), z()), &oa, inputs);
    c.eq("odd-antiscalar-square", &scalar(&(&x * &x)).expect("even"), &(&oa * &oa), inputs);
    let pair = try_ok!(c, "scalar-pair", ScalarPair::new(x.clone(), c1.clone()), inputs);
    c.eq("scalar-pair", &(ex.clone(), e1.clone()), &(pair.scalar(), pair.antiscalar()), inputs);
}

fn anti_transpose(_t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let m = s.matrix();
    let chi = s.odd();
    let (a, al, be, b) = (m.a().clone(), m.alpha().clone(), m.beta().clone(), m.b().clone());
    let inputs = || json!({ "m": &m, "chi": &chi });
    c.eq("ptrans-formula", &odd_sm(be.clone(), b.clone(), a.clone(), al.clone()), &m.ptrans(), inputs);
    c.eq("qtrans-formula", &odd_sm(al.clone(), a.clone(), b.clone(), be.clone()), &m.qtrans(), inputs);
    c.eq("pq-equals-pi", &m.pi(), &m.ptrans().qtrans(), inputs);
    c.eq("qp-equals-pi", &m.pi(), &m.qtrans().ptrans(), inputs);
    c.eq("ptrans-involution", &m, &m.ptrans().ptrans(), inputs);
    c.eq("qtrans-involution", &m, &m.qtrans().qtrans(), inputs);

    let e = try_ok!(c, "atr1-left-p", antiscalar(&chi), inputs);
    let em = &e * &m;
    let me = &m * &e;
    let chi_m = try_ok!(c, "atr1-left-p", m.odd_lmul(&chi), inputs);
    c.eq("atr1-left-p", &chi_m, &em.ptrans(), inputs);
    let chi_pi = try_ok!(c, "atr1-left-q", m.pi().odd_lmul(&chi), inputs);
    c.eq("atr1-left-q", &chi_pi, &em.qtrans(), inputs);
    let pi_chi = try_ok!(c, "atr1-right-p", m.pi().odd_rmul(&chi), inputs);
    c.eq("atr1-right-p", &pi_chi, &me.ptrans(), inputs);
    let m_chi = try_ok!(c, "atr1-right-q", m.odd_rmul(&chi), inputs);
    c.eq("atr1-right-q", &m_chi, &me.qtrans(), inputs);
}

fn module_laws(_t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let (m, nm) = (s.matrix(), s.matrix());
    let (x1, x2, c1, c2) = (s.even(), s.even(), s.odd(), s.odd());
    let inputs = || json!({ "m": &m, "n": &nm, "x1": &x1, "x2": &x2, "chi1": &c1, "chi2": &c2 });
    let sc = Actor::Scalar(x1.clone());
    let sc2 = Actor::Scalar(x2.clone());
    let an = Actor::AntiScalar(c1.clone());

    let lhs = try_ok!(c, "mod1-left", act_left(&an, &m), inputs);
    let rhs = try_ok!(c, "mod1-left", m.ptrans().odd_lmul(&c1), inputs);
    c.eq("mod1-left", &rhs, &lhs, inputs);
    let lhs = try_ok!(c, "mod1-right", act_right(&m, &an), inputs);
    let rhs = try_ok!(c, "mod1-right", m.qtrans().odd_rmul(&c1), inputs);
    c.eq("mod1-right", &rhs, &lhs, inputs);
    let lhs = try_ok!(c, "mod1-both", act_both(&c1, &m, &c2), inputs);
    let rhs = try_ok!(c, "mod1-both", m.pi().odd_lmul(&c1).and_then(|o| o.odd_rmul(&c2)), inputs);
    c.eq("mod1-both", &rhs, &lhs, inputs);

    let lhs = try_ok!(c, "mod2-left", act_left(&sc, &m), inputs);
    let rhs = try_ok!(c, "mod2-left", m.even_lmul(&x1), inputs);
    c.eq("mod2-left", &rhs, &lhs, inputs);
    let lhs = try_ok!(c, "mod2-right", act_right(&m, &sc), inputs);
    let rhs = try_ok!(c, "mod2-right", m.even_rmul(&x1), inputs);
    c.eq("mod2-right", &rhs, &lhs, inputs);
    let lhs = try_ok!(c, "mod2-both", act_left(&sc, &m).and_then(|y| act_right(&y, &sc2)), inputs);
    let rhs = try_ok!(c, "mod2-both", m.even_lmul(&x1).and_then(|y| y.even_rmul(&x2)), inputs);
    c.eq("mod2-both", &rhs, &lhs, inputs);

    let mn = &m * &nm;
    for (actor, [l1, l2, l3]) in [
        (&sc, ["mod3-scalar-left", "mod3-scalar-middle", "mod3-scalar-right"]),
        (&an, ["mod3-antiscalar-left", "mod3-antiscalar-middle", "mod3-antiscalar-right"]),
    ] {
        let lhs = try_ok!(c, l1, act_left(actor, &m).map(|y| &y * &nm), inputs);
        let rhs = try_ok!(c, l1, act_left(actor, &mn), inputs);
        c.eq(l1, &rhs, &lhs, inputs);
        let lhs = try_ok!(c, l2, act_right(&m, actor).map(|y| &y * &nm), inputs);
        let rhs = try_ok!(c, l2, act_left(actor, &nm).map(|y| &m * &y), inputs);
        c.eq(l2, &rhs, &lhs, inputs);
        let lhs = try_ok!(c, l3, act_right(&nm, actor).map(|y| &m * &y), inputs);
        let rhs = try_ok!(c, l3, act_right(&mn, actor), inputs);
        c.eq(l3, &rhs, &lhs, inputs);
    }
}

fn star(t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let n = t.gens;
    let [k1, k2, k3] = kinds(t.index);
    let (r1, r2, r3) = (s.reduced_of(k1), s.reduced_of(k2), s.reduced_of(k3));
    let x = ScalarPair::new(s.even(), s.odd()).expect("graded pair");
    let inputs = || json!({ "r1": &r1, "r2": &r2, "r3": &r3, "x": &x });
    let r12 = try_ok!(c, "star-associativity", star_product(&r1, &r2, &x), inputs);
    let lhs = try_ok!(c, "star-associativity", star_product(&r12, &r3, &x), inputs);
    let r23 = try_ok!(c, "star-associativity", star_product(&r2, &r3, &x), inputs);
    let rhs = try_ok!(c, "star-associativity", star_product(&r1, &r23, &x), inputs);
    c.eq("star-associativity", lhs.matrix(), rhs.matrix(), inputs);
    c.holds("star-left-label", r12.kind() == k1 && r12.matrix().is_shape(k1.shape()), inputs);
    let middle = match k2 {
        ReducedKind::Even => x.scalar(),
        ReducedKind::Odd => x.antiscalar(),
    };
    c.eq("star-expansion", &(&(r1.matrix() * &middle) * r2.matrix()), r12.matrix(), inputs);

    let tm = s.reduced_of(ReducedKind::Odd);
    let se = s.reduced_of(ReducedKind::Even);
    let unit = ScalarPair::new(GE::one(n), th(n, 1)).expect("graded pair");
    let inputs = || json!({ "t": &tm, "s": &se });
    let ts = try_ok!(c, "star-unit-scalar", star_product(&tm, &se, &unit), inputs);
    c.eq("star-unit-scalar", &(tm.matrix() * se.matrix()), ts.matrix(), inputs);
}

fn eigen(_t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let n = s.num_generators();
    let sr = s.reduced_of(ReducedKind::Even);
    let m = sr.matrix().clone();
    let inputs = || json!({ "s": &m });
    c.eq("eigenvalues-even", &(m.a().clone(), m.b().clone()), &eigenvalues(&sr), inputs);
    for (branch, value, law) in [
        (Branch::First, m.a(), "eigen-even-first"),
        (Branch::Second, m.b(), "eigen-even-second"),
    ] {
        let v = try_ok!(c, law, eigenvector(&sr, branch), inputs);
        c.holds(law, !v.is_zero() && apply(&m, &v) == eigen_rhs(ReducedKind::Even, value, &v), inputs);
    }
    for x in [m.a(), m.b()] {
        let f = try_ok!(c, "charfn-even-roots", char_fn_even(&m, x), inputs);
        c.holds("charfn-even-roots", f.numerator.is_zero(), inputs);
    }
    let x = &m.b().clone() + &s.even_unit();
    let inputs = || json!({ "s": &m, "x": &x });
    let f = try_ok!(c, "charfn-even-ber", char_fn_even(&m, &x), inputs);
    let shifted = try_ok!(c, "charfn-even-ber", scalar(&x).map(|e| &e - &m), inputs);
    let ber = try_ok!(c, "charfn-even-ber", shifted.ber(), inputs);
    c.eq("charfn-even-ber", &f.numerator, &(&ber * &f.denominator), inputs);

    // odd, branch β on any T, branch α on T with body(b) ≠ 0
    let tr = s.reduced_of(ReducedKind::Odd);
    let tm = tr.matrix().clone();
    let inputs = || json!({ "t": &tm });
    c.eq("eigenvalues-odd", &(tm.alpha().clone(), tm.beta().clone()), &eigenvalues(&tr), inputs);
    let v = try_ok!(c, "eigen-odd-second", eigenvector(&tr, Branch::Second), inputs);
    c.holds(
        "eigen-odd-second",
        !v.is_zero() && apply(&tm, &v) == eigen_rhs(ReducedKind::Odd, tm.beta(), &v),
        inputs,
    );
    for chi in [tm.alpha(), tm.beta()] {
        let f = try_ok!(c, "charfn-odd-roots", char_fn_odd(&tm, chi), inputs);
        c.holds("charfn-odd-roots", f.numerator.is_zero(), inputs);
    }
    let tu = sm(GE::zero(n), s.odd(), s.odd(), s.even_unit());
    let ru = Reduced::odd(tu.clone()).expect("odd-reduced");
    let inputs = || json!({ "t": &tu });
    let v = try_ok!(c, "eigen-odd-first", eigenvector(&ru, Branch::First), inputs);
    c.holds(
        "eigen-odd-first",
        !v.is_zero() && apply(&tu, &v) == eigen_rhs(ReducedKind::Odd, tu.alpha(), &v),
        inputs,
    );
    let chi = s.odd();
    let inputs = || json!({ "t": &tu, "chi": &chi });
    let f = try_ok!(c, "charfn-odd-ber", char_fn_odd(&tu, &chi), inputs);
    let shifted = try_ok!(c, "charfn-odd-ber", antiscalar(&chi).map(|e| &e - &tu), inputs);
    let ber = try_ok!(c, "charfn-odd-ber", shifted.ber(), inputs);
    c.eq("charfn-odd-ber", &-&f.numerator, &(&ber * &f.denominator), inputs);

    let ts = sm(GE::zero(n), s.odd(), s.odd(), s.even_soul());
    let rs = Reduced::odd(ts.clone()).expect("odd-reduced");
    c.eq("eigen-odd-first-undefined", &Some("NoEigenvector"), &code(&eigenvector(&rs, Branch::First)), || {
        json!({ "t": &ts })
    });
}

/// Even b with b² = 0.
fn square_zero(s: &mut Sampler) -> GE {
    let n = s.num_generators();
    if s.index(4) == 0 {
        return GE::zero(n);
    }
    let g = th(n, s.index(n) + 1);
    &g * &s.odd()
}

/// Even b with b² ≠ 0, nilpotent when the sampler finds one.
fn square_nonzero(s: &mut Sampler) -> GE {
    if s.coin() {
        for _ in 0..8 {
            let b = s.even_soul();
            if !(&b * &b).is_zero() {
                return b;
            }
        }
    }
    s.even_unit()
}

fn cayley_hamilton(t: &Trial, s: &mut Sampler, c: &mut Checks) {
    let n = t.gens;
    let se = s.even_reduced();
    let p = try_ok!(c, "ch-even", char_poly_even(&se), || json!({ "s": &se }));
    c.eq("ch-even", &SuperMatrix::zero(n), &p, || json!({ "s": &se }));

    let nilpotent = t.index % 2 == 0;
    let b = if nilpotent { square_zero(s) } else { square_nonzero(s) };
    let b2 = &b * &b;
    let tm = sm(GE::zero(n), s.odd(), s.odd(), b);
    let inputs = || json!({ "t": &tm });
    let p = try_ok!(c, "ch-odd-formula", char_poly_odd(&tm), inputs);
    let residual = sm(GE::zero(n), GE::zero(n), GE::zero(n), b2.clone());
    c.eq("ch-odd-formula", &residual, &p, inputs);
    if nilpotent {
        c.holds("ch-odd-nilpotent", b2.is_zero() && p.is_zero(), inputs);
    } else {
        c.holds("ch-odd-residual", !b2.is_zero() && !p.is_zero() && p == residual, inputs);
    }
    c.holds("ch-odd-zero-iff-b2-zero", p.is_zero() == b2.is_zero(), inputs);
    let general = sm(s.even(), s.odd(), s.odd_nonzero(), s.even());
    c.eq("ch-shape-error", &Some("NotReduced"), &code(&char_poly_even(&general)), || {
        json!({ "m": &general })
    });
}
