use num_bigint::BigInt;
use proptest::prelude::*;
use supersemi::codec::parse_rational;
use supersemi::lambda_module::{antiscalar, char_poly_even, char_poly_odd};
use supersemi::{Blade, GrassmannElement as GE, Rational, SuperMatrix};

const N: usize = 4;

fn blade_of(mask: u32) -> Blade {
    let idx: Vec<usize> = (0..N).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
    Blade::from_indices(&idx).unwrap()
}

fn coeff() -> impl Strategy<Value = Rational> {
    (prop_oneof![-3i64..=-1, 1i64..=3], 1i64..=2)
        .prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn element_with(masks: impl Strategy<Value = u32> + Clone) -> impl Strategy<Value = GE> {
    prop::collection::vec((masks, coeff()), 0..=4)
        .prop_map(|terms| GE::from_terms(N, terms.into_iter().map(|(m, q)| (blade_of(m), q))).unwrap())
}

fn any_element() -> impl Strategy<Value = GE> {
    element_with(0u32..16)
}

fn even() -> impl Strategy<Value = GE> {
    element_with(prop::sample::select(vec![0u32, 3, 5, 6, 9, 10, 12, 15]))
}

fn odd() -> impl Strategy<Value = GE> {
    element_with(prop::sample::select(vec![1u32, 2, 4, 7, 8, 11, 13, 14]))
}

fn unit_even() -> impl Strategy<Value = GE> {
    (coeff(), even()).prop_map(|(q, x)| &GE::constant(N, q) + &x.soul())
}

fn matrix() -> impl Strategy<Value = SuperMatrix> {
    (even(), odd(), odd(), even()).prop_map(|(a, al, be, b)| SuperMatrix::new(a, al, be, b).unwrap())
}

fn group() -> impl Strategy<Value = SuperMatrix> {
    (unit_even(), odd(), odd(), unit_even()).prop_map(|(a, al, be, b)| SuperMatrix::new(a, al, be, b).unwrap())
}

/// Sign and product of two blades by sorting the concatenated index list
/// with adjacent swaps.
fn bubble_product(x: &[usize], y: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v: Vec<usize> = x.iter().chain(y).copied().collect();
    let mut negative = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                negative = !negative;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, negative))
}

proptest! {
    #[test]
    fn blade_product_matches_sorting(m1 in 0u32..64, m2 in 0u32..64) {
        let idx = |m: u32| (0..6).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect::<Vec<usize>>();
        let (x, y) = (idx(m1), idx(m2));
        let got = Blade::from_indices(&x).unwrap().product(Blade::from_indices(&y).unwrap());
        let want = bubble_product(&x, &y).map(|(v, s)| (Blade::from_indices(&v).unwrap(), s));
        prop_assert_eq!(got, want);
    }

    #[test]
    fn ring_axioms(x in any_element(), y in any_element(), z in any_element()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&x - &x, GE::zero(N));
        prop_assert_eq!((&x * &y).body(), x.body() * y.body());
    }

    #[test]
    fn graded_commutativity(x in odd(), y in odd(), e in even()) {
        prop_assert_eq!(&x * &y, -(&y * &x));
        prop_assert_eq!(&e * &x, &x * &e);
        prop_assert!((&x * &x).is_zero());
    }

    #[test]
    fn soul_is_nilpotent(x in any_element()) {
        let s = x.soul();
        prop_assert!(s.body() == Rational::from_integer(0.into()));
        prop_assert!(s.pow(N as u32 + 1).is_zero());
        let k = s.nilpotency_index().unwrap();
        prop_assert!(k as usize <= N + 1);
    }

    #[test]
    fn inversion(q in coeff(), x in any_element()) {
        let u = &GE::constant(N, q) + &x.soul();
        let inv = u.invert().unwrap();
        prop_assert_eq!(&u * &inv, GE::one(N));
        prop_assert_eq!(&inv * &u, GE::one(N));
        prop_assert!(x.soul().invert().is_err());
    }

    #[test]
    fn json_round_trip(x in any_element(), m in matrix()) {
        let back: GE = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
        let back: SuperMatrix = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn berezinian_is_multiplicative(m1 in group(), m2 in group()) {
        let b12 = (&m1 * &m2).ber().unwrap();
        prop_assert_eq!(b12, &m1.ber().unwrap() * &m2.ber().unwrap());
        prop_assert_eq!(&m1.ber_inv().unwrap() * &m1.ber().unwrap(), GE::one(N));
    }

    #[test]
    fn inverse_round_trip(m in group()) {
        let inv = m.invert().unwrap();
        prop_assert_eq!(&m * &inv, SuperMatrix::identity(N));
        prop_assert_eq!(&inv * &m, SuperMatrix::identity(N));
    }

    #[test]
    fn supertranspose_reverses_products(m1 in matrix(), m2 in matrix()) {
        prop_assert_eq!((&m1 * &m2).st(), &m2.st() * &m1.st());
        prop_assert_eq!(m1.pi().pi(), m1.clone());
        prop_assert_eq!(m1.ptrans().qtrans(), m1.pi());
        prop_assert_eq!((&m1 * &m2).str(), (&m2 * &m1).str());
    }

    #[test]
    fn cayley_hamilton(a in even(), al in odd(), be in odd(), b in even()) {
        let z = GE::zero(N);
        let s = SuperMatrix::new(a, al.clone(), z.clone(), b.clone()).unwrap();
        prop_assert!(char_poly_even(&s).unwrap().is_zero());
        let t = SuperMatrix::new(z.clone(), al, be, b.clone()).unwrap();
        let b2 = &b * &b;
        prop_assert_eq!(char_poly_odd(&t).unwrap(), SuperMatrix::new(z.clone(), z.clone(), z, b2).unwrap());
    }

    #[test]
    fn antiscalars_anticommute(c1 in odd(), c2 in odd()) {
        let (e1, e2) = (antiscalar(&c1).unwrap(), antiscalar(&c2).unwrap());
        prop_assert!((&(&e1 * &e2) + &(&e2 * &e1)).is_zero());
    }
}

#[test]
fn rational_strings() {
    assert_eq!(parse_rational("-3/6").unwrap(), Rational::new((-1).into(), 2.into()));
    assert_eq!(parse_rational("7").unwrap(), Rational::from_integer(7.into()));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("x").is_err());
}
