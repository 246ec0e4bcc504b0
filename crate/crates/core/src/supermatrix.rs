//! (1|1) supermatrices over ∧(N).
//!
//! A [`SuperMatrix`] is `[[a, α], [β, b]]` with `a, b` even and `α, β` odd: an
//! even morphism of Λ^{1|1}. An [`OddMatrix`] has the swapped pattern (`a, b`
//! odd, `α, β` even) and holds the odd morphisms produced by anti-transposes
//! and odd scalars. Both wrap the unconstrained [`Mat2`].

use crate::error::{AlgebraError, Result};
use crate::grassmann::{GrassmannElement as GE, Parity};
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A 2×2 matrix with Grassmann entries and no parity constraint.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2 {
    pub a: GE,
    pub alpha: GE,
    pub beta: GE,
    pub b: GE,
}

impl Mat2 {
    pub fn new(a: GE, alpha: GE, beta: GE, b: GE) -> Result<Self> {
        let n = a.num_generators();
        for x in [&alpha, &beta, &b] {
            if x.num_generators() != n {
                return Err(AlgebraError::GeneratorMismatch {
                    left: n,
                    right: x.num_generators(),
                });
            }
        }
        Ok(Mat2 { a, alpha, beta, b })
    }

    pub fn zero(n: usize) -> Self {
        Mat2 {
            a: GE::zero(n),
            alpha: GE::zero(n),
            beta: GE::zero(n),
            b: GE::zero(n),
        }
    }

    pub fn num_generators(&self) -> usize {
        self.a.num_generators()
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|x| x.is_zero())
    }

    pub fn entries(&self) -> [&GE; 4] {
        [&self.a, &self.alpha, &self.beta, &self.b]
    }

    fn same_algebra(&self, other: &Mat2) -> Result<()> {
        if self.num_generators() != other.num_generators() {
            return Err(AlgebraError::GeneratorMismatch {
                left: self.num_generators(),
                right: other.num_generators(),
            });
        }
        Ok(())
    }

    /// Row-by-column product; entries of the left factor stay on the left.
    pub fn try_mul(&self, r: &Mat2) -> Result<Mat2> {
        self.same_algebra(r)?;
        let l = self;
        Ok(Mat2 {
            a: &(&l.a * &r.a) + &(&l.alpha * &r.beta),
            alpha: &(&l.a * &r.alpha) + &(&l.alpha * &r.b),
            beta: &(&l.beta * &r.a) + &(&l.b * &r.beta),
            b: &(&l.beta * &r.alpha) + &(&l.b * &r.b),
        })
    }

    fn zip(&self, r: &Mat2, f: impl Fn(&GE, &GE) -> GE) -> Result<Mat2> {
        self.same_algebra(r)?;
        Ok(Mat2 {
            a: f(&self.a, &r.a),
            alpha: f(&self.alpha, &r.alpha),
            beta: f(&self.beta, &r.beta),
            b: f(&self.b, &r.b),
        })
    }

    fn map(&self, f: impl Fn(&GE) -> GE) -> Mat2 {
        Mat2 {
            a: f(&self.a),
            alpha: f(&self.alpha),
            beta: f(&self.beta),
            b: f(&self.b),
        }
    }

    pub fn try_add(&self, r: &Mat2) -> Result<Mat2> {
        self.zip(r, |x, y| x + y)
    }

    pub fn try_sub(&self, r: &Mat2) -> Result<Mat2> {
        self.zip(r, |x, y| x - y)
    }

    /// Entrywise `x · m`.
    pub fn lscale(&self, x: &GE) -> Result<Mat2> {
        self.check_scalar(x)?;
        Ok(self.map(|e| x * e))
    }

    /// Entrywise `m · x`.
    pub fn rscale(&self, x: &GE) -> Result<Mat2> {
        self.check_scalar(x)?;
        Ok(self.map(|e| e * x))
    }

    fn check_scalar(&self, x: &GE) -> Result<()> {
        if x.num_generators() != self.num_generators() {
            return Err(AlgebraError::GeneratorMismatch {
                left: self.num_generators(),
                right: x.num_generators(),
            });
        }
        Ok(())
    }

    /// `[[b, β], [α, a]]`
    pub fn pi(&self) -> Mat2 {
        Mat2 {
            a: self.b.clone(),
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
            b: self.a.clone(),
        }
    }

    /// Left anti-transpose `[[β, b], [a, α]]`.
    pub fn ptrans(&self) -> Mat2 {
        Mat2 {
            a: self.beta.clone(),
            alpha: self.b.clone(),
            beta: self.a.clone(),
            b: self.alpha.clone(),
        }
    }

    /// Right anti-transpose `[[α, a], [b, β]]`.
    pub fn qtrans(&self) -> Mat2 {
        Mat2 {
            a: self.alpha.clone(),
            alpha: self.a.clone(),
            beta: self.b.clone(),
            b: self.beta.clone(),
        }
    }

    /// `Even` if this is an even morphism, `Odd` if odd, `Mixed` otherwise.
    /// The zero matrix reports `Even`.
    pub fn parity(&self) -> Parity {
        let diag_even = self.a.is_even() && self.b.is_even();
        let off_odd = self.alpha.is_odd() && self.beta.is_odd();
        if diag_even && off_odd {
            return Parity::Even;
        }
        let diag_odd = self.a.is_odd() && self.b.is_odd();
        let off_even = self.alpha.is_even() && self.beta.is_even();
        if diag_odd && off_even {
            Parity::Odd
        } else {
            Parity::Mixed
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.alpha, self.beta, self.b)
    }
}

fn expect_parity(entry: &'static str, x: &GE, odd: bool) -> Result<()> {
    let ok = if odd { x.is_odd() } else { x.is_even() };
    if ok {
        Ok(())
    } else {
        Err(AlgebraError::ParityViolation {
            entry,
            expected: if odd { Parity::Odd } else { Parity::Even },
            found: x.parity(),
        })
    }
}

pub(crate) fn require_even(entry: &'static str, x: &GE) -> Result<()> {
    expect_parity(entry, x, false)
}

pub(crate) fn require_odd(entry: &'static str, x: &GE) -> Result<()> {
    expect_parity(entry, x, true)
}

/// Reduced shapes of a supermatrix. Several may hold at once.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ShapeClass {
    General,
    /// β = 0
    EvenReduced,
    /// a = 0
    OddReduced,
    /// α = β = 0
    Diagonal,
    /// a = b = 0
    Antidiagonal,
    /// α = 0, the shape of supertransposed even-reduced matrices
    LowerTriangular,
    /// b = 0, the shape of Π-transposed odd-reduced matrices
    PiOddReduced,
}

impl ShapeClass {
    pub fn name(self) -> &'static str {
        match self {
            ShapeClass::General => "General",
            ShapeClass::EvenReduced => "EvenReduced",
            ShapeClass::OddReduced => "OddReduced",
            ShapeClass::Diagonal => "Diagonal",
            ShapeClass::Antidiagonal => "Antidiagonal",
            ShapeClass::LowerTriangular => "LowerTriangular",
            ShapeClass::PiOddReduced => "PiOddReduced",
        }
    }

    /// Order used by [`SuperMatrix::primary_shape`], most specific first.
    pub const PRIORITY: [ShapeClass; 7] = [
        ShapeClass::Antidiagonal,
        ShapeClass::Diagonal,
        ShapeClass::EvenReduced,
        ShapeClass::OddReduced,
        ShapeClass::LowerTriangular,
        ShapeClass::PiOddReduced,
        ShapeClass::General,
    ];
}

/// Partition of all supermatrices by the bodies of the diagonal entries.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum InvertibilityClass {
    /// body(a) ≠ 0 and body(b) ≠ 0
    Group,
    /// body(a) ≠ 0, body(b) = 0
    JPrime,
    /// body(a) = 0, body(b) ≠ 0
    JDoublePrime,
    /// both bodies zero
    CoreIdeal,
}

impl InvertibilityClass {
    pub fn name(self) -> &'static str {
        match self {
            InvertibilityClass::Group => "Group",
            InvertibilityClass::JPrime => "JPrime",
            InvertibilityClass::JDoublePrime => "JDoublePrime",
            InvertibilityClass::CoreIdeal => "CoreIdeal",
        }
    }
}

/// An even (1|1) supermatrix `[[a, α], [β, b]]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SuperMatrix(Mat2);

/// An odd (1|1) matrix: odd diagonal, even off-diagonal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OddMatrix(Mat2);

impl SuperMatrix {
    pub fn new(a: GE, alpha: GE, beta: GE, b: GE) -> Result<Self> {
        Self::from_mat2(Mat2::new(a, alpha, beta, b)?)
    }

    pub fn from_mat2(m: Mat2) -> Result<Self> {
        require_even("a", &m.a)?;
        require_odd("alpha", &m.alpha)?;
        require_odd("beta", &m.beta)?;
        require_even("b", &m.b)?;
        Ok(SuperMatrix(m))
    }

    pub fn zero(n: usize) -> Self {
        SuperMatrix(Mat2::zero(n))
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(GE::one(n), GE::one(n)).expect("unit is even")
    }

    pub fn diag(a: GE, b: GE) -> Result<Self> {
        let n = a.num_generators();
        Self::new(a, GE::zero(n), GE::zero(n), b)
    }

    pub fn antidiag(alpha: GE, beta: GE) -> Result<Self> {
        let n = alpha.num_generators();
        Self::new(GE::zero(n), alpha, beta, GE::zero(n))
    }

    pub fn a(&self) -> &GE {
        &self.0.a
    }
    pub fn alpha(&self) -> &GE {
        &self.0.alpha
    }
    pub fn beta(&self) -> &GE {
        &self.0.beta
    }
    pub fn b(&self) -> &GE {
        &self.0.b
    }

    pub fn as_mat2(&self) -> &Mat2 {
        &self.0
    }

    pub fn into_mat2(self) -> Mat2 {
        self.0
    }

    pub fn num_generators(&self) -> usize {
        self.0.num_generators()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn try_mul(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        Ok(SuperMatrix(self.0.try_mul(&other.0)?))
    }

    /// Supertrace `a − b`.
    pub fn str(&self) -> GE {
        self.a() - self.b()
    }

    /// Berezinian `a·b⁻¹ + β·α·b⁻²`, defined when body(b) ≠ 0.
    pub fn ber(&self) -> Result<GE> {
        let inv_b = self.b().invert().map_err(|_| AlgebraError::BerUndefined)?;
        let beta_alpha = self.beta() * self.alpha();
        Ok(&(self.a() * &inv_b) + &(&beta_alpha * &(&inv_b * &inv_b)))
    }

    /// Inverse Berezinian `b·a⁻¹ − β·α·a⁻²`, defined when body(a) ≠ 0.
    pub fn ber_inv(&self) -> Result<GE> {
        let inv_a = self.a().invert().map_err(|_| AlgebraError::BerInvUndefined)?;
        let beta_alpha = self.beta() * self.alpha();
        Ok(&(self.b() * &inv_a) - &(&beta_alpha * &(&inv_a * &inv_a)))
    }

    /// Supertranspose `[[a, β], [−α, b]]`.
    pub fn st(&self) -> SuperMatrix {
        SuperMatrix(Mat2 {
            a: self.a().clone(),
            alpha: self.beta().clone(),
            beta: -self.alpha(),
            b: self.b().clone(),
        })
    }

    /// Π-transpose `[[b, β], [α, a]]`.
    pub fn pi(&self) -> SuperMatrix {
        SuperMatrix(self.0.pi())
    }

    /// Left anti-transpose; lands in the odd container.
    pub fn ptrans(&self) -> OddMatrix {
        OddMatrix(self.0.ptrans())
    }

    /// Right anti-transpose; lands in the odd container.
    pub fn qtrans(&self) -> OddMatrix {
        OddMatrix(self.0.qtrans())
    }

    pub fn is_shape(&self, shape: ShapeClass) -> bool {
        let m = &self.0;
        match shape {
            ShapeClass::General => !ShapeClass::PRIORITY[..6].iter().any(|s| self.is_shape(*s)),
            ShapeClass::EvenReduced => m.beta.is_zero(),
            ShapeClass::OddReduced => m.a.is_zero(),
            ShapeClass::Diagonal => m.alpha.is_zero() && m.beta.is_zero(),
            ShapeClass::Antidiagonal => m.a.is_zero() && m.b.is_zero(),
            ShapeClass::LowerTriangular => m.alpha.is_zero(),
            ShapeClass::PiOddReduced => m.b.is_zero(),
        }
    }

    /// Every shape predicate that holds; `{General}` when none does.
    pub fn shapes(&self) -> BTreeSet<ShapeClass> {
        ShapeClass::PRIORITY
            .iter()
            .copied()
            .filter(|s| self.is_shape(*s))
            .collect()
    }

    /// The most specific holding shape (Antidiagonal, then Diagonal, then
    /// EvenReduced, OddReduced, LowerTriangular, PiOddReduced, General).
    pub fn primary_shape(&self) -> ShapeClass {
        ShapeClass::PRIORITY
            .iter()
            .copied()
            .find(|s| self.is_shape(*s))
            .unwrap_or(ShapeClass::General)
    }

    pub fn invertibility(&self) -> InvertibilityClass {
        match (self.a().has_unit_body(), self.b().has_unit_body()) {
            (true, true) => InvertibilityClass::Group,
            (true, false) => InvertibilityClass::JPrime,
            (false, true) => InvertibilityClass::JDoublePrime,
            (false, false) => InvertibilityClass::CoreIdeal,
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.invertibility() == InvertibilityClass::Group
    }

    /// Zeroes β, leaving the even-reduced part.
    pub fn even_part(&self) -> SuperMatrix {
        let mut m = self.0.clone();
        m.beta = GE::zero(self.num_generators());
        SuperMatrix(m)
    }

    /// Zeroes a, leaving the odd-reduced part.
    pub fn odd_part(&self) -> SuperMatrix {
        let mut m = self.0.clone();
        m.a = GE::zero(self.num_generators());
        SuperMatrix(m)
    }

    pub fn diag_part(&self) -> SuperMatrix {
        let mut m = self.0.clone();
        m.alpha = GE::zero(self.num_generators());
        m.beta = GE::zero(self.num_generators());
        SuperMatrix(m)
    }

    pub fn adiag_part(&self) -> SuperMatrix {
        let mut m = self.0.clone();
        m.a = GE::zero(self.num_generators());
        m.b = GE::zero(self.num_generators());
        SuperMatrix(m)
    }

    /// Two-sided inverse by block elimination on `a` and the Schur
    /// complement `b − β a⁻¹ α`.
    pub fn invert(&self) -> Result<SuperMatrix> {
        if !self.is_invertible() {
            return Err(AlgebraError::NotInvertible);
        }
        let inv_a = self.a().invert()?;
        let schur = self.b() - &(&(self.beta() * &inv_a) * self.alpha());
        let inv_s = schur.invert()?;
        let top_right = -(&(&inv_a * self.alpha()) * &inv_s);
        let bottom_left = -(&(&inv_s * self.beta()) * &inv_a);
        let top_left = &inv_a - &(&top_right * &(self.beta() * &inv_a));
        Ok(SuperMatrix(Mat2 {
            a: top_left,
            alpha: top_right,
            beta: bottom_left,
            b: inv_s,
        }))
    }

    pub fn even_lmul(&self, x: &GE) -> Result<SuperMatrix> {
        require_even("scalar", x)?;
        Ok(SuperMatrix(self.0.lscale(x)?))
    }

    pub fn even_rmul(&self, x: &GE) -> Result<SuperMatrix> {
        require_even("scalar", x)?;
        Ok(SuperMatrix(self.0.rscale(x)?))
    }

    pub fn odd_lmul(&self, chi: &GE) -> Result<OddMatrix> {
        require_odd("scalar", chi)?;
        Ok(OddMatrix(self.0.lscale(chi)?))
    }

    pub fn odd_rmul(&self, chi: &GE) -> Result<OddMatrix> {
        require_odd("scalar", chi)?;
        Ok(OddMatrix(self.0.rscale(chi)?))
    }
}

impl OddMatrix {
    pub fn new(a: GE, alpha: GE, beta: GE, b: GE) -> Result<Self> {
        Self::from_mat2(Mat2::new(a, alpha, beta, b)?)
    }

    pub fn from_mat2(m: Mat2) -> Result<Self> {
        require_odd("a", &m.a)?;
        require_even("alpha", &m.alpha)?;
        require_even("beta", &m.beta)?;
        require_odd("b", &m.b)?;
        Ok(OddMatrix(m))
    }

    pub fn a(&self) -> &GE {
        &self.0.a
    }
    pub fn alpha(&self) -> &GE {
        &self.0.alpha
    }
    pub fn beta(&self) -> &GE {
        &self.0.beta
    }
    pub fn b(&self) -> &GE {
        &self.0.b
    }

    pub fn as_mat2(&self) -> &Mat2 {
        &self.0
    }

    pub fn num_generators(&self) -> usize {
        self.0.num_generators()
    }

    pub fn ptrans(&self) -> SuperMatrix {
        SuperMatrix(self.0.ptrans())
    }

    pub fn qtrans(&self) -> SuperMatrix {
        SuperMatrix(self.0.qtrans())
    }

    pub fn even_lmul(&self, x: &GE) -> Result<OddMatrix> {
        require_even("scalar", x)?;
        Ok(OddMatrix(self.0.lscale(x)?))
    }

    pub fn even_rmul(&self, x: &GE) -> Result<OddMatrix> {
        require_even("scalar", x)?;
        Ok(OddMatrix(self.0.rscale(x)?))
    }

    pub fn odd_lmul(&self, chi: &GE) -> Result<SuperMatrix> {
        require_odd("scalar", chi)?;
        Ok(SuperMatrix(self.0.lscale(chi)?))
    }

    pub fn odd_rmul(&self, chi: &GE) -> Result<SuperMatrix> {
        require_odd("scalar", chi)?;
        Ok(SuperMatrix(self.0.rscale(chi)?))
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for OddMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

// Even·even and odd·odd are even; mixed products are odd.
macro_rules! graded_mul {
    ($lhs:ident, $rhs:ident, $out:ident) => {
        impl<'a> Mul<&'a $rhs> for &'a $lhs {
            type Output = $out;
            fn mul(self, rhs: &'a $rhs) -> $out {
                $out(self.0.try_mul(&rhs.0).expect("operands from different Grassmann algebras"))
            }
        }
        impl Mul<$rhs> for $lhs {
            type Output = $out;
            fn mul(self, rhs: $rhs) -> $out {
                &self * &rhs
            }
        }
    };
}

graded_mul!(SuperMatrix, SuperMatrix, SuperMatrix);
graded_mul!(SuperMatrix, OddMatrix, OddMatrix);
graded_mul!(OddMatrix, SuperMatrix, OddMatrix);
graded_mul!(OddMatrix, OddMatrix, SuperMatrix);

macro_rules! linear_ops {
    ($ty:ident) => {
        impl<'a> Add<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn add(self, rhs: &'a $ty) -> $ty {
                $ty(self.0.try_add(&rhs.0).expect("operands from different Grassmann algebras"))
            }
        }
        impl<'a> Sub<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn sub(self, rhs: &'a $ty) -> $ty {
                $ty(self.0.try_sub(&rhs.0).expect("operands from different Grassmann algebras"))
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty(self.0.map(|x| -x))
            }
        }
    };
}

linear_ops!(SuperMatrix);
linear_ops!(OddMatrix);

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
    fn constructor_rejects_wrong_parity() {
        let err = SuperMatrix::new(th(1), z(), z(), c(1)).unwrap_err();
        assert_eq!(err.code(), "ParityViolation");
        assert!(SuperMatrix::new(c(1), c(1), z(), c(1)).is_err());
        assert!(SuperMatrix::new(&c(1) + &th(1), z(), z(), c(1)).is_err());
        assert!(SuperMatrix::new(c(1), z(), z(), GE::one(3)).is_err());
    }

    #[test]
    fn product_of_odd_reduced_pair() {
        let t1 = sm(z(), th(1), th(2), c(1));
        let t2 = sm(z(), th(3), th(4), c(1));
        let expect = sm(bl(&[1, 4]), th(1), th(4), &c(1) + &bl(&[2, 3]));
        assert_eq!(&t1 * &t2, expect);
        assert_eq!(&t1 * &SuperMatrix::identity(N), t1);
    }

    #[test]
    fn antidiagonal_square() {
        let a = SuperMatrix::antidiag(th(1), th(2)).unwrap();
        let expect = SuperMatrix::diag(bl(&[1, 2]), -bl(&[1, 2])).unwrap();
        assert_eq!(&a * &a, expect);
    }

    #[test]
    fn mismatched_generators() {
        let m3 = SuperMatrix::identity(3);
        assert!(SuperMatrix::identity(N).try_mul(&m3).is_err());
    }

    #[test]
    fn supertrace() {
        let m = sm(c(3), th(1), th(2), &c(1) + &bl(&[1, 2]));
        assert_eq!(m.str(), &c(2) - &bl(&[1, 2]));
        assert!(SuperMatrix::identity(N).str().is_zero());
    }

    #[test]
    fn berezinian_examples() {
        let m = sm(c(1), th(1), th(2), c(1));
        assert_eq!(m.ber().unwrap(), &c(1) - &bl(&[1, 2]));
        let d = SuperMatrix::diag(c(2), c(1)).unwrap();
        assert_eq!(d.ber().unwrap(), c(2));
        let t = sm(z(), th(1), th(2), c(1));
        assert!((&t * &t).ber().unwrap().is_zero());
        let sing = sm(c(1), th(1), th(2), bl(&[1, 2]));
        assert_eq!(sing.ber(), Err(AlgebraError::BerUndefined));
    }

    #[test]
    fn inverse_berezinian() {
        let d = SuperMatrix::diag(c(2), c(1)).unwrap();
        assert_eq!(d.ber_inv().unwrap(), GE::constant(N, rational(1, 2)));
        let m = sm(c(1), th(1), th(2), c(1));
        let inv = m.ber_inv().unwrap();
        assert_eq!(inv, &c(1) + &bl(&[1, 2]));
        assert!((&inv * &m.ber().unwrap()).is_one());
        let bad = sm(bl(&[1, 2]), th(1), th(2), c(1));
        assert_eq!(bad.ber_inv(), Err(AlgebraError::BerInvUndefined));
    }

    #[test]
    fn transposes() {
        let (a, b) = (&c(2) + &bl(&[3, 4]), c(5));
        let m = sm(a.clone(), th(1), th(2), b.clone());
        assert_eq!(m.st(), sm(a.clone(), th(2), -th(1), b.clone()));
        assert_eq!(m.st().st(), sm(a.clone(), -th(1), -th(2), b.clone()));
        assert_eq!(m.st().st().st().st(), m);
        assert_eq!(m.pi(), sm(b.clone(), th(2), th(1), a.clone()));
        assert_eq!(m.pi().pi(), m);
        let d = SuperMatrix::diag(a, b).unwrap();
        assert_eq!(d.st(), d);
        let odd = sm(z(), th(1), th(2), z());
        assert_eq!(odd.pi(), sm(z(), th(2), th(1), z()));
    }

    #[test]
    fn classification_examples() {
        use InvertibilityClass::*;
        use ShapeClass::*;
        let t = sm(z(), th(1), th(2), c(1));
        assert_eq!(t.shapes(), BTreeSet::from([OddReduced]));
        assert_eq!(t.invertibility(), JDoublePrime);
        let s = sm(c(1), th(1), z(), c(1));
        assert_eq!(s.shapes(), BTreeSet::from([EvenReduced]));
        assert_eq!(s.invertibility(), Group);
        let both = sm(z(), th(1), z(), c(1));
        assert_eq!(both.shapes(), BTreeSet::from([EvenReduced, OddReduced]));
        assert_eq!(both.invertibility(), JDoublePrime);
        let g = sm(c(1), th(1), th(2), bl(&[1, 2]));
        assert_eq!(g.shapes(), BTreeSet::from([General]));
        assert_eq!(g.invertibility(), JPrime);
        let zero = SuperMatrix::zero(N);
        assert_eq!(zero.primary_shape(), Antidiagonal);
        assert_eq!(zero.invertibility(), CoreIdeal);
        assert_eq!(SuperMatrix::identity(N).primary_shape(), Diagonal);
    }

    #[test]
    fn parts() {
        let m = sm(c(1), th(1), th(2), c(1));
        let parts_sum = &m.even_part().ber().unwrap() + &m.odd_part().ber().unwrap();
        assert_eq!(m.ber().unwrap(), parts_sum);
        assert_eq!(m.odd_part().ber().unwrap(), -bl(&[1, 2]));
        assert_eq!(&m.diag_part() + &m.adiag_part(), m);
        let s = m.even_part();
        assert_eq!(s.even_part(), s);
        assert!(s.is_shape(ShapeClass::EvenReduced));
        assert!(m.odd_part().is_shape(ShapeClass::OddReduced));
    }

    #[test]
    fn inversion() {
        let id = SuperMatrix::identity(N);
        assert_eq!(id.invert().unwrap(), id);
        let d = SuperMatrix::diag(c(2), c(1)).unwrap();
        let half = GE::constant(N, rational(1, 2));
        assert_eq!(d.invert().unwrap(), SuperMatrix::diag(half, c(1)).unwrap());
        let m = sm(c(1), th(1), th(2), c(1));
        let inv = m.invert().unwrap();
        assert_eq!(&m * &inv, id);
        assert_eq!(&inv * &m, id);
        let t = sm(z(), th(1), th(2), c(1));
        assert_eq!(t.invert(), Err(AlgebraError::NotInvertible));
    }

    #[test]
    fn graded_products_land_in_right_container() {
        let m = sm(c(2), th(1), th(2), c(3));
        let p = m.ptrans();
        assert_eq!(p.as_mat2().parity(), Parity::Odd);
        let back: SuperMatrix = &p * &p;
        assert_eq!(back.as_mat2().parity(), Parity::Even);
        assert!(OddMatrix::from_mat2(m.as_mat2().clone()).is_err());
        assert!(m.odd_lmul(&c(1)).is_err());
        assert!(m.even_lmul(&th(1)).is_err());
    }
}
