//! Exact arithmetic in the finite Grassmann algebra ∧(N) over the rationals.
//!
//! An element is a finite sum of blades θᵢ₁θᵢ₂…θᵢₖ (i₁ < … < iₖ) with nonzero
//! rational coefficients. Blades are stored as bitmasks; bit `i - 1` stands for
//! generator θᵢ. Zero coefficients are never stored, so structural equality is
//! algebraic equality.

use crate::error::{AlgebraError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rational = BigRational;

/// Largest supported generator count.
pub const MAX_GENERATORS: usize = 16;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A basis monomial θᵢ₁…θᵢₖ with strictly increasing indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Blade(u32);

impl Blade {
    pub const UNIT: Blade = Blade(0);

    /// The single generator θᵢ (1-based).
    pub fn generator(index: usize) -> Result<Blade> {
        if index == 0 || index > MAX_GENERATORS {
            return Err(AlgebraError::BladeOutOfRange {
                index,
                n: MAX_GENERATORS,
            });
        }
        Ok(Blade(1 << (index - 1)))
    }

    pub fn from_indices(indices: &[usize]) -> Result<Blade> {
        let mut mask = 0u32;
        let mut last = 0usize;
        for &i in indices {
            if i <= last {
                return Err(if i == 0 {
                    AlgebraError::BladeOutOfRange {
                        index: 0,
                        n: MAX_GENERATORS,
                    }
                } else {
                    AlgebraError::BladeNotIncreasing
                });
            }
            mask |= Blade::generator(i)?.0;
            last = i;
        }
        Ok(Blade(mask))
    }

    pub(crate) fn from_mask(mask: u32) -> Blade {
        Blade(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32)
            .filter(|bit| self.0 & (1 << bit) != 0)
            .map(|bit| bit + 1)
            .collect()
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_even(self) -> bool {
        self.grade() % 2 == 0
    }

    /// Largest generator index, 0 for the unit blade.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Product of two blades: `None` if a generator repeats, otherwise the
    /// merged blade and whether the sort to ascending order is odd.
    pub fn product(self, other: Blade) -> Option<(Blade, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // Inversions: pairs (i in self, j in other) with i > j.
        let mut inversions = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let j = rest.trailing_zeros();
            inversions += (self.0 >> j).count_ones();
            rest &= rest - 1;
        }
        Some((Blade(self.0 | other.0), inversions % 2 == 1))
    }

    /// Comma-joined index list, `""` for the unit blade.
    pub fn key(self) -> String {
        self.indices()
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_key(key: &str) -> Result<Blade> {
        if key.trim().is_empty() {
            return Ok(Blade::UNIT);
        }
        let indices = key
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| AlgebraError::BladeNotIncreasing)
            })
            .collect::<Result<Vec<_>>>()?;
        Blade::from_indices(&indices)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

/// An element of ∧(N) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrassmannElement {
    n: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl GrassmannElement {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS, "too many generators: {n}");
        GrassmannElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, q: Rational) -> Self {
        let mut x = Self::zero(n);
        if !q.is_zero() {
            x.terms.insert(Blade::UNIT, q);
        }
        x
    }

    pub fn int(n: usize, k: i64) -> Self {
        Self::constant(n, Rational::from_integer(BigInt::from(k)))
    }

    /// θᵢ in ∧(n).
    pub fn generator(n: usize, index: usize) -> Result<Self> {
        Self::monomial(n, Blade::generator(index)?, Rational::one())
    }

    /// Product θᵢ₁⋯θᵢₖ of the given (strictly increasing) generators.
    pub fn blade(n: usize, indices: &[usize]) -> Result<Self> {
        Self::monomial(n, Blade::from_indices(indices)?, Rational::one())
    }

    pub fn monomial(n: usize, blade: Blade, q: Rational) -> Result<Self> {
        Self::from_terms(n, [(blade, q)])
    }

    /// Builds an element from arbitrary terms, merging repeated blades and
    /// dropping zero coefficients.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, Rational)>,
    {
        if n > MAX_GENERATORS {
            return Err(AlgebraError::TooManyGenerators {
                n,
                max: MAX_GENERATORS,
            });
        }
        let mut out = Self::zero(n);
        for (blade, q) in terms {
            if blade.max_index() > n {
                return Err(AlgebraError::BladeOutOfRange {
                    index: blade.max_index(),
                    n,
                });
            }
            out.accumulate(blade, q);
        }
        out.terms.retain(|_, q| !q.is_zero());
        Ok(out)
    }

    fn accumulate(&mut self, blade: Blade, q: Rational) {
        *self.terms.entry(blade).or_insert_with(Rational::zero) += q;
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(b, q)| (*b, q))
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Blade::UNIT).is_some_and(|q| q.is_one())
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(AlgebraError::GeneratorMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = self.clone();
        for (blade, q) in &other.terms {
            out.accumulate(*blade, q.clone());
        }
        out.terms.retain(|_, q| !q.is_zero());
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Graded-commutative product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = Self::zero(self.n);
        for (lb, lq) in &self.terms {
            for (rb, rq) in &other.terms {
                if let Some((blade, negative)) = lb.product(*rb) {
                    let q = lq * rq;
                    out.accumulate(blade, if negative { -q } else { q });
                }
            }
        }
        out.terms.retain(|_, q| !q.is_zero());
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.n);
        }
        GrassmannElement {
            n: self.n,
            terms: self.terms.iter().map(|(b, c)| (*b, c * q)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for blade in self.terms.keys() {
            if blade.is_even() {
                even = true;
            } else {
                odd = true;
            }
        }
        match (even, odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Zero counts as odd here as well as even.
    pub fn is_odd(&self) -> bool {
        self.is_zero() || self.parity() == Parity::Odd
    }

    /// Coefficient of the unit blade.
    pub fn body(&self) -> Rational {
        self.coefficient(Blade::UNIT)
    }

    pub fn soul(&self) -> Self {
        let mut out = self.clone();
        out.terms.remove(&Blade::UNIT);
        out
    }

    pub fn has_unit_body(&self) -> bool {
        !self.body().is_zero()
    }

    /// Least k ≥ 1 with xᵏ = 0, or `None` when the body is nonzero.
    pub fn nilpotency_index(&self) -> Option<u32> {
        if self.has_unit_body() {
            return None;
        }
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_zero() {
            power = &power * self;
            k += 1;
        }
        Some(k)
    }

    /// Inverse through the terminating geometric series in the soul.
    pub fn invert(&self) -> Result<Self> {
        let body = self.body();
        if body.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        let inv_body = body.recip();
        let ratio = -self.soul().scale(&inv_body);
        let mut sum = Self::one(self.n);
        let mut power = Self::one(self.n);
        for _ in 0..self.n {
            power = &power * &ratio;
            if power.is_zero() {
                break;
            }
            sum = &sum + &power;
        }
        Ok(sum.scale(&inv_body))
    }

    /// Projection keeping only blades whose grade parity matches `odd`.
    pub fn graded_part(&self, odd: bool) -> Self {
        GrassmannElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.is_even() != odd)
                .map(|(b, q)| (*b, q.clone()))
                .collect(),
        }
    }
}

impl fmt::Debug for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [N={}]", self.n)
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(b, _)| (b.grade(), b.indices()));
        for (i, (blade, q)) in terms.into_iter().enumerate() {
            let magnitude = q.abs();
            match (i, q.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = *blade == Blade::UNIT;
            if unit || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            for idx in blade.indices() {
                write!(f, "θ{idx}")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a GrassmannElement> for &'a GrassmannElement {
            type Output = GrassmannElement;
            fn $method(self, rhs: &'a GrassmannElement) -> GrassmannElement {
                self.$checked(rhs).expect("operands from different Grassmann algebras")
            }
        }
        impl $trait for GrassmannElement {
            type Output = GrassmannElement;
            fn $method(self, rhs: GrassmannElement) -> GrassmannElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &GrassmannElement {
    type Output = GrassmannElement;
    fn neg(self) -> GrassmannElement {
        GrassmannElement {
            n: self.n,
            terms: self.terms.iter().map(|(b, q)| (*b, -q)).collect(),
        }
    }
}

impl Neg for GrassmannElement {
    type Output = GrassmannElement;
    fn neg(self) -> GrassmannElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th(n: usize, i: usize) -> GrassmannElement {
        GrassmannElement::generator(n, i).unwrap()
    }

    fn bl(n: usize, idx: &[usize]) -> GrassmannElement {
        GrassmannElement::blade(n, idx).unwrap()
    }

    fn q(p: i64, d: i64) -> Rational {
        rational(p, d)
    }

    /// Concatenate index lists and bubble sort, counting swaps.
    fn blade_product_oracle(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
        let mut seq: Vec<usize> = a.iter().chain(b).copied().collect();
        let mut swaps = 0;
        for i in 0..seq.len() {
            for j in 0..seq.len() - 1 - i {
                if seq[j] > seq[j + 1] {
                    seq.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        if seq.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((seq, swaps % 2 == 1))
    }

    #[test]
    fn blade_product_matches_bubble_sort_for_n6() {
        for a in 0u32..64 {
            for b in 0u32..64 {
                let (ba, bb) = (Blade::from_mask(a), Blade::from_mask(b));
                let got = ba.product(bb).map(|(bl, s)| (bl.indices(), s));
                assert_eq!(got, blade_product_oracle(&ba.indices(), &bb.indices()));
            }
        }
    }

    #[test]
    fn generator_products() {
        let n = 3;
        assert_eq!(&th(n, 1) * &th(n, 2), bl(n, &[1, 2]));
        assert_eq!(&th(n, 2) * &th(n, 1), -bl(n, &[1, 2]));
        assert!((&bl(n, &[1, 2]) * &bl(n, &[1, 3])).is_zero());
    }

    #[test]
    fn linear_structure() {
        let n = 2;
        assert_eq!(&th(n, 1) + &th(n, 1), th(n, 1).scale(&q(2, 1)));
        assert!((&th(n, 1) + &-th(n, 1)).is_zero());
        let x = &GrassmannElement::int(n, 2) + &bl(n, &[1, 2]).scale(&q(4, 1));
        let expect = &GrassmannElement::one(n) + &bl(n, &[1, 2]).scale(&q(2, 1));
        assert_eq!(x.scale(&q(1, 2)), expect);
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let err = th(2, 1).checked_mul(&th(3, 1)).unwrap_err();
        assert_eq!(err, AlgebraError::GeneratorMismatch { left: 2, right: 3 });
        assert!(th(2, 1).checked_add(&th(3, 1)).is_err());
    }

    #[test]
    fn parity_tags() {
        let n = 3;
        assert_eq!((&GrassmannElement::int(n, 3) + &bl(n, &[1, 2])).parity(), Parity::Even);
        assert_eq!((&th(n, 1) + &bl(n, &[1, 2, 3])).parity(), Parity::Odd);
        assert_eq!((&GrassmannElement::one(n) + &th(n, 1)).parity(), Parity::Mixed);
        assert_eq!(GrassmannElement::zero(n).parity(), Parity::Even);
    }

    #[test]
    fn body_and_soul() {
        let n = 2;
        let x = &GrassmannElement::int(n, 3) + &th(n, 1);
        assert_eq!(x.body(), q(3, 1));
        assert_eq!(x.soul(), th(n, 1));
        assert_eq!(bl(n, &[1, 2]).body(), q(0, 1));
        assert!(GrassmannElement::int(n, 5).soul().is_zero());
        assert_eq!(bl(n, &[1, 2]).soul(), bl(n, &[1, 2]));
        let y = &GrassmannElement::int(n, 2) + &th(n, 1);
        let z = &GrassmannElement::int(n, 3) + &th(n, 2);
        assert_eq!((&y * &z).body(), q(6, 1));
    }

    #[test]
    fn nilpotency() {
        assert_eq!(th(1, 1).nilpotency_index(), Some(2));
        let x = &bl(4, &[1, 2]) + &bl(4, &[3, 4]);
        // oracle by direct squaring
        assert_eq!(&x * &x, bl(4, &[1, 2, 3, 4]).scale(&q(2, 1)));
        assert!((&(&x * &x) * &x).is_zero());
        assert_eq!(x.nilpotency_index(), Some(3));
        assert_eq!((&GrassmannElement::one(1) + &th(1, 1)).nilpotency_index(), None);
        assert_eq!(GrassmannElement::zero(3).nilpotency_index(), Some(1));
    }

    #[test]
    fn inversion() {
        let n = 2;
        let x = &GrassmannElement::int(n, 2) + &bl(n, &[1, 2]);
        let inv = x.invert().unwrap();
        assert!((&x * &inv).is_one());
        let expect = &GrassmannElement::constant(n, q(1, 2)) - &bl(n, &[1, 2]).scale(&q(1, 4));
        assert_eq!(inv, expect);
        assert!(GrassmannElement::one(n).invert().unwrap().is_one());
        assert_eq!(th(n, 1).invert(), Err(AlgebraError::NotInvertible));
    }

    #[test]
    fn blade_keys_round_trip() {
        let b = Blade::from_indices(&[1, 3, 10]).unwrap();
        assert_eq!(b.key(), "1,3,10");
        assert_eq!(Blade::parse_key("1,3,10").unwrap(), b);
        assert_eq!(Blade::parse_key("").unwrap(), Blade::UNIT);
        assert_eq!(Blade::from_indices(&[2, 1]), Err(AlgebraError::BladeNotIncreasing));
        assert!(Blade::from_indices(&[0]).is_err());
        assert!(GrassmannElement::blade(2, &[3]).is_err());
    }

    #[test]
    fn display() {
        let n = 3;
        let x = &(&GrassmannElement::constant(n, q(1, 2)) - &bl(n, &[1, 3]).scale(&q(2, 1)))
            + &th(n, 2);
        assert_eq!(x.to_string(), "1/2 + θ2 - 2θ1θ3");
        assert_eq!(GrassmannElement::zero(n).to_string(), "0");
    }
}
