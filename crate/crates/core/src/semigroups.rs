//! Semigroup structure of the reduced supermatrices.
//!
//! Covers the odd-reduced subsemigroup T^SG (αβ = 0) and its ideals, the band
//! families Z_α, B_α, C_α and their abstract multiplications, the square-root
//! subset (βb = 0), the set multiplication tables, and the right-sensible
//! sandwich product ⊙ of even- and odd-reduced matrices.

use crate::error::{AlgebraError, Result};
use crate::grassmann::GrassmannElement as GE;
use crate::reduced::Reduced;
use crate::supermatrix::{require_even, require_odd, ShapeClass, SuperMatrix};
use crate::verify::report::{Checks, ReportBuilder, SuiteReport};
use serde_json::json;

/// Odd-reduced with αβ = 0.
pub fn tsg_member(t: &SuperMatrix) -> bool {
    t.is_shape(ShapeClass::OddReduced) && (t.alpha() * t.beta()).is_zero()
}

/// Ideal of T^SG a member belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TsgIdeal {
    /// β = 0
    LeftIdeal,
    /// α = 0
    RightIdeal,
    /// b = 0
    TwoSided,
    Plain,
}

/// Classifies a T^SG member. When several conditions hold the order is
/// b = 0, then β = 0, then α = 0.
pub fn tsg_ideal_class(t: &SuperMatrix) -> Result<TsgIdeal> {
    if !tsg_member(t) {
        return Err(AlgebraError::NotMember("T^SG"));
    }
    Ok(if t.b().is_zero() {
        TsgIdeal::TwoSided
    } else if t.beta().is_zero() {
        TsgIdeal::LeftIdeal
    } else if t.alpha().is_zero() {
        TsgIdeal::RightIdeal
    } else {
        TsgIdeal::Plain
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BandKind {
    /// `Z(t)`, multiplication {t₁}∗{t₂} = {t₁}
    Z,
    /// `B(t, u)`, rectangular band {t₁,u₁}∗{t₂,u₂} = {t₁,u₂}
    B,
    /// `C(t, u, v)`, {t₁,u₁,v₁}∗{t₂,u₂,v₂} = {t₁v₂, u₂v₁, v₁v₂}
    C,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BandParams {
    Z { t: GE },
    B { t: GE, u: GE },
    C { t: GE, u: GE, v: GE },
}

/// An element of one of the band semigroups attached to a nonzero odd α.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BandElement {
    alpha: GE,
    params: BandParams,
}

impl BandElement {
    pub fn new(alpha: GE, params: BandParams) -> Result<Self> {
        require_odd("alpha", &alpha)?;
        if alpha.is_zero() {
            return Err(AlgebraError::ZeroBandGenerator);
        }
        let n = alpha.num_generators();
        let params_list: Vec<(&'static str, &GE)> = match &params {
            BandParams::Z { t } => vec![("t", t)],
            BandParams::B { t, u } => vec![("t", t), ("u", u)],
            BandParams::C { t, u, v } => vec![("t", t), ("u", u), ("v", v)],
        };
        for (name, p) in params_list {
            if p.num_generators() != n {
                return Err(AlgebraError::GeneratorMismatch {
                    left: n,
                    right: p.num_generators(),
                });
            }
            require_even(name, p)?;
        }
        Ok(BandElement { alpha, params })
    }

    pub fn z(alpha: GE, t: GE) -> Result<Self> {
        Self::new(alpha, BandParams::Z { t })
    }

    pub fn b(alpha: GE, t: GE, u: GE) -> Result<Self> {
        Self::new(alpha, BandParams::B { t, u })
    }

    pub fn c(alpha: GE, t: GE, u: GE, v: GE) -> Result<Self> {
        Self::new(alpha, BandParams::C { t, u, v })
    }

    pub fn kind(&self) -> BandKind {
        match self.params {
            BandParams::Z { .. } => BandKind::Z,
            BandParams::B { .. } => BandKind::B,
            BandParams::C { .. } => BandKind::C,
        }
    }

    pub fn alpha(&self) -> &GE {
        &self.alpha
    }

    pub fn params(&self) -> &BandParams {
        &self.params
    }

    /// Z(t) = [[0, αt], [α, 1]], B(t,u) = [[0, αt], [αu, 1]],
    /// C(t,u,v) = [[0, αt], [αu, v]].
    pub fn realize(&self) -> SuperMatrix {
        let n = self.alpha.num_generators();
        let al = &self.alpha;
        let (alpha_entry, beta_entry, b) = match &self.params {
            BandParams::Z { t } => (al * t, al.clone(), GE::one(n)),
            BandParams::B { t, u } => (al * t, al * u, GE::one(n)),
            BandParams::C { t, u, v } => (al * t, al * u, v.clone()),
        };
        SuperMatrix::new(GE::zero(n), alpha_entry, beta_entry, b).expect("band entries are graded")
    }
}

/// Abstract band multiplication on parameters.
pub fn band_mul(x: &BandElement, y: &BandElement) -> Result<BandElement> {
    if x.alpha != y.alpha {
        return Err(AlgebraError::BandMismatch);
    }
    let params = match (&x.params, &y.params) {
        (BandParams::Z { t: t1 }, BandParams::Z { .. }) => BandParams::Z { t: t1.clone() },
        (BandParams::B { t: t1, .. }, BandParams::B { u: u2, .. }) => BandParams::B {
            t: t1.clone(),
            u: u2.clone(),
        },
        (
            BandParams::C { t: t1, v: v1, .. },
            BandParams::C { u: u2, v: v2, .. },
        ) => BandParams::C {
            t: t1 * v2,
            u: u2 * v1,
            v: v1 * v2,
        },
        _ => return Err(AlgebraError::BandMismatch),
    };
    Ok(BandElement {
        alpha: x.alpha.clone(),
        params,
    })
}

/// Parameters of x² − x for a C-element: (t(v−1), u(v−1), v(v−1)).
pub fn c_idempotent_defect(x: &BandElement) -> Result<BandElement> {
    match &x.params {
        BandParams::C { t, u, v } => {
            let vm1 = v - &GE::one(v.num_generators());
            BandElement::c(x.alpha.clone(), t * &vm1, u * &vm1, v * &vm1)
        }
        _ => Err(AlgebraError::BandMismatch),
    }
}

/// Checks the Z/B band representation for a fixed α on the given (t, u)
/// samples: realize is a homomorphism from the abstract band multiplication to
/// matrix multiplication, and every realized element is idempotent.
/// Sample i is multiplied with sample i+1, cyclically.
pub fn rees_check(alpha: &GE, samples: &[(GE, GE)]) -> Result<SuiteReport> {
    let mut builder = ReportBuilder::new("rees", alpha.num_generators(), 0, samples.len() as u64);
    for i in 0..samples.len() {
        let mut checks = Checks::new(0, i as u64);
        rees_laws(&mut checks, alpha, &samples[i], &samples[(i + 1) % samples.len()])?;
        builder.absorb(checks);
    }
    Ok(builder.finish())
}

pub(crate) fn rees_laws(
    checks: &mut Checks,
    alpha: &GE,
    (t1, u1): &(GE, GE),
    (t2, u2): &(GE, GE),
) -> Result<()> {
    let inputs = || json!({ "alpha": alpha, "t1": t1, "u1": u1, "t2": t2, "u2": u2 });
    for (x, y) in [
        (BandElement::z(alpha.clone(), t1.clone())?, BandElement::z(alpha.clone(), t2.clone())?),
        (
            BandElement::b(alpha.clone(), t1.clone(), u1.clone())?,
            BandElement::b(alpha.clone(), t2.clone(), u2.clone())?,
        ),
    ] {
        let abstract_product = band_mul(&x, &y)?.realize();
        let matrix_product = &x.realize() * &y.realize();
        checks.eq("rees-homomorphism", &abstract_product, &matrix_product, inputs);
        let rx = x.realize();
        checks.eq("rees-idempotent", &rx, &(&rx * &rx), inputs);
    }
    Ok(())
}

/// Members of the square-root subset: odd-reduced with βb = 0.
pub fn sqrt_member(t: &SuperMatrix) -> bool {
    t.is_shape(ShapeClass::OddReduced) && (t.beta() * t.b()).is_zero()
}

/// T·T for a square-root member; always even-reduced.
pub fn sqrt_square(t: &SuperMatrix) -> Result<SuperMatrix> {
    if !sqrt_member(t) {
        return Err(AlgebraError::NotMember("T^√S"));
    }
    Ok(t * t)
}

/// Labels of the matrix sets appearing in the multiplication tables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SetLabel {
    S,
    T,
    D,
    A,
    Sst,
    TPi,
}

impl SetLabel {
    pub const ALL: [SetLabel; 6] = [
        SetLabel::S,
        SetLabel::T,
        SetLabel::D,
        SetLabel::A,
        SetLabel::Sst,
        SetLabel::TPi,
    ];

    pub fn shape(self) -> ShapeClass {
        match self {
            SetLabel::S => ShapeClass::EvenReduced,
            SetLabel::T => ShapeClass::OddReduced,
            SetLabel::D => ShapeClass::Diagonal,
            SetLabel::A => ShapeClass::Antidiagonal,
            SetLabel::Sst => ShapeClass::LowerTriangular,
            SetLabel::TPi => ShapeClass::PiOddReduced,
        }
    }

    pub fn contains(self, m: &SuperMatrix) -> bool {
        m.is_shape(self.shape())
    }

    pub fn name(self) -> &'static str {
        match self {
            SetLabel::S => "S",
            SetLabel::T => "T",
            SetLabel::D => "D",
            SetLabel::A => "A",
            SetLabel::Sst => "Sst",
            SetLabel::TPi => "TPi",
        }
    }
}

/// Tabulated closure target of the set product `x·y`, `None` where the
/// table gives no single shape (S·T) or has no entry.
pub fn set_product_shape(x: SetLabel, y: SetLabel) -> Option<SetLabel> {
    use SetLabel::*;
    match (x, y) {
        (S, S) | (D, S) | (S, D) | (A, T) => Some(S),
        (D, D) | (A, A) => Some(D),
        (A, S) | (T, S) => Some(T),
        (T, A) => Some(Sst),
        (S, A) => Some(TPi),
        _ => None,
    }
}

/// Tabulated closure target of the triple product `x·w·y`.
pub fn triple_product_shape(x: SetLabel, w: SetLabel, y: SetLabel) -> Option<SetLabel> {
    use SetLabel::*;
    match (x, w, y) {
        (S, A, T) | (S, D, S) => Some(S),
        (T, A, T) | (T, D, S) => Some(T),
        _ => None,
    }
}

/// The pair of sandwich elements for ⊙: a diagonal one used in front of
/// even-reduced right operands and an antidiagonal one in front of
/// odd-reduced right operands.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sandwich {
    diag: SuperMatrix,
    adiag: SuperMatrix,
}

impl Sandwich {
    pub fn new(diag: SuperMatrix, adiag: SuperMatrix) -> Result<Self> {
        if !diag.is_shape(ShapeClass::Diagonal) {
            return Err(AlgebraError::BadSandwich("Diagonal"));
        }
        if !adiag.is_shape(ShapeClass::Antidiagonal) {
            return Err(AlgebraError::BadSandwich("Antidiagonal"));
        }
        if diag.num_generators() != adiag.num_generators() {
            return Err(AlgebraError::GeneratorMismatch {
                left: diag.num_generators(),
                right: adiag.num_generators(),
            });
        }
        Ok(Sandwich { diag, adiag })
    }

    pub fn diag(&self) -> &SuperMatrix {
        &self.diag
    }

    pub fn adiag(&self) -> &SuperMatrix {
        &self.adiag
    }
}

/// `R₁ ⊙ R₂`: R₁·D·R₂ for even R₂, R₁·A·R₂ for odd R₂; labelled like R₁.
pub fn sandwich_product(r1: &Reduced, r2: &Reduced, w: &Sandwich) -> Result<Reduced> {
    r1.right_sensible(r2, &w.diag, &w.adiag)
}

/// ⊙ on unlabelled matrices. Operands in both reduced shapes count as
/// even-reduced.
pub fn sandwich_set_product(
    r1: &SuperMatrix,
    r2: &SuperMatrix,
    diag: &SuperMatrix,
    adiag: &SuperMatrix,
) -> Result<SuperMatrix> {
    let w = Sandwich::new(diag.clone(), adiag.clone())?;
    let l = Reduced::classify(r1.clone())?;
    let r = Reduced::classify(r2.clone())?;
    Ok(sandwich_product(&l, &r, &w)?.into_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::rational;

    const N: usize = 4;

    fn th(i: usize) -> GE {
        GE::generator(N, i).unwrap()
    }
    fn bl(idx: &[usize]) -> GE {
        GE::blade(N, idx).unwrap()
    }
    fn c(k: i64) -> GE {
        GE::int(N, k)
    }
    fn z() -> GE {
        GE::zero(N)
    }
    fn sm(a: GE, alpha: GE, beta: GE, b: GE) -> SuperMatrix {
        SuperMatrix::new(a, alpha, beta, b).unwrap()
    }

    #[test]
    fn tsg_membership() {
        assert!(!tsg_member(&sm(z(), th(1), th(2), c(1))));
        assert!(tsg_member(&sm(z(), th(1), th(1), c(1))));
        assert!(!tsg_member(&sm(c(1), th(1), th(1), c(1))));
    }

    #[test]
    fn tsg_ideals() {
        assert_eq!(tsg_ideal_class(&sm(z(), th(1), z(), c(1))).unwrap(), TsgIdeal::LeftIdeal);
        assert_eq!(tsg_ideal_class(&sm(z(), z(), th(2), c(1))).unwrap(), TsgIdeal::RightIdeal);
        assert_eq!(tsg_ideal_class(&sm(z(), th(1), th(1), z())).unwrap(), TsgIdeal::TwoSided);
        let plain = sm(z(), th(1), th(1).scale(&rational(2, 1)), c(1));
        assert_eq!(tsg_ideal_class(&plain).unwrap(), TsgIdeal::Plain);
        assert_eq!(
            tsg_ideal_class(&sm(z(), th(1), th(2), c(1))),
            Err(AlgebraError::NotMember("T^SG"))
        );
    }

    #[test]
    fn band_multiplications() {
        let al = th(1);
        let z1 = BandElement::z(al.clone(), c(2)).unwrap();
        let z2 = BandElement::z(al.clone(), c(3)).unwrap();
        assert_eq!(band_mul(&z1, &z2).unwrap(), z1);

        let b1 = BandElement::b(al.clone(), c(2), c(5)).unwrap();
        let b2 = BandElement::b(al.clone(), c(3), c(7)).unwrap();
        assert_eq!(band_mul(&b1, &b2).unwrap(), BandElement::b(al.clone(), c(2), c(7)).unwrap());

        let c1 = BandElement::c(al.clone(), c(1), c(1), c(2)).unwrap();
        let c2 = BandElement::c(al.clone(), c(1), c(1), c(3)).unwrap();
        let c3 = band_mul(&c1, &c2).unwrap();
        assert_eq!(c3, BandElement::c(al.clone(), c(3), c(2), c(6)).unwrap());
        assert_eq!(c3.realize(), &c1.realize() * &c2.realize());
    }

    #[test]
    fn band_errors() {
        let z1 = BandElement::z(th(1), c(2)).unwrap();
        let z2 = BandElement::z(th(2), c(2)).unwrap();
        assert_eq!(band_mul(&z1, &z2), Err(AlgebraError::BandMismatch));
        let b1 = BandElement::b(th(1), c(2), c(1)).unwrap();
        assert_eq!(band_mul(&z1, &b1), Err(AlgebraError::BandMismatch));
        assert_eq!(BandElement::z(z(), c(1)), Err(AlgebraError::ZeroBandGenerator));
        assert!(BandElement::z(th(1), th(2)).is_err());
        assert!(BandElement::z(c(1), c(1)).is_err());
    }

    #[test]
    fn band_idempotency_and_defect() {
        let t = &c(2) + &bl(&[2, 3]);
        let z1 = BandElement::z(th(1), t.clone()).unwrap().realize();
        assert_eq!(&z1 * &z1, z1);
        let x = BandElement::c(th(1), t, c(3), &c(2) + &bl(&[1, 4])).unwrap();
        let rx = x.realize();
        let defect = &(&rx * &rx) - &rx;
        assert_eq!(defect, c_idempotent_defect(&x).unwrap().realize());
    }

    #[test]
    fn rees_check_passes_on_fixed_samples() {
        let samples = vec![
            (c(1), c(2)),
            (&c(3) + &bl(&[2, 3]), bl(&[1, 2])),
            (z(), &c(-1) + &bl(&[3, 4])),
        ];
        let report = rees_check(&th(1), &samples).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.law("rees-homomorphism").unwrap().checks, 6);
    }

    #[test]
    fn square_roots() {
        let t = sm(z(), th(1), th(2), bl(&[2, 3]));
        assert!(sqrt_member(&t));
        let expect = sm(bl(&[1, 2]), bl(&[1, 2, 3]), z(), -bl(&[1, 2]));
        assert_eq!(sqrt_square(&t).unwrap(), expect);
        let a = sm(z(), th(1), th(2), z());
        assert_eq!(
            sqrt_square(&a).unwrap(),
            SuperMatrix::diag(bl(&[1, 2]), -bl(&[1, 2])).unwrap()
        );
        let not = sm(z(), th(1), th(2), c(1));
        assert!(!sqrt_member(&not));
        assert_eq!(sqrt_square(&not), Err(AlgebraError::NotMember("T^√S")));
    }

    #[test]
    fn table_entries() {
        use SetLabel::*;
        assert_eq!(set_product_shape(A, T), Some(S));
        assert_eq!(set_product_shape(T, S), Some(T));
        assert_eq!(set_product_shape(A, A), Some(D));
        assert_eq!(set_product_shape(S, T), None);
        let w = &sm(z(), th(1), th(2), z()) * &sm(z(), th(3), th(4), c(1));
        assert_eq!(w, sm(bl(&[1, 4]), th(1), z(), bl(&[2, 3])));
        assert!(S.contains(&w));
        assert_eq!(triple_product_shape(T, D, S), Some(T));
        assert_eq!(triple_product_shape(T, S, S), None);
    }

    #[test]
    fn sandwich_products() {
        let t = sm(z(), th(1), th(2), c(1));
        let s = sm(c(2), th(3), z(), &c(1) + &bl(&[1, 4]));
        let d = SuperMatrix::identity(N);
        let a = SuperMatrix::antidiag(th(3), th(3)).unwrap();
        let ts = sandwich_set_product(&t, &s, &d, &a).unwrap();
        assert_eq!(ts, &t * &s);
        assert!(ts.is_shape(ShapeClass::OddReduced));
        let st = sandwich_set_product(&s, &t, &d, &a).unwrap();
        assert_eq!(st, &(&s * &a) * &t);
        assert!(st.is_shape(ShapeClass::EvenReduced));

        let w = Sandwich::new(d.clone(), a.clone()).unwrap();
        let (rt, rs) = (Reduced::odd(t).unwrap(), Reduced::even(s).unwrap());
        let left = sandwich_product(&sandwich_product(&rt, &rs, &w).unwrap(), &rt, &w).unwrap();
        let right = sandwich_product(&rt, &sandwich_product(&rs, &rt, &w).unwrap(), &w).unwrap();
        assert_eq!(left, right);
        assert_eq!(left.kind(), crate::reduced::ReducedKind::Odd);

        assert_eq!(Sandwich::new(a.clone(), a.clone()), Err(AlgebraError::BadSandwich("Diagonal")));
        let general = sm(c(1), th(1), th(2), c(1));
        assert_eq!(
            sandwich_set_product(&general, &general, &d, &a),
            Err(AlgebraError::NotReduced)
        );
    }
}
