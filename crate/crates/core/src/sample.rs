//! Seeded random elements and supermatrices for the verification suites.
//!
//! Coefficients are drawn from {±1, ±2, ±3}/{1, 2} and elements carry at most
//! four terms, so products stay small while zero divisors still show up.

use crate::grassmann::{Blade, GrassmannElement as GE, Rational};
use crate::reduced::{Reduced, ReducedKind};
use crate::semigroups::SetLabel;
use crate::supermatrix::SuperMatrix;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_TERMS: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Grade {
    Even,
    Odd,
    Any,
}

#[derive(Clone, Debug)]
pub struct Sampler {
    n: usize,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(n: usize, seed: u64) -> Self {
        Sampler {
            n,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.random_range(0..len)
    }

    pub fn coefficient(&mut self) -> Rational {
        let mut p: i64 = self.rng.random_range(1..=3);
        if self.coin() {
            p = -p;
        }
        let q: i64 = self.rng.random_range(1..=2);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    fn blade(&mut self, grade: Grade) -> Option<Blade> {
        if self.n == 0 {
            return (grade != Grade::Odd).then_some(Blade::UNIT);
        }
        let mut mask: u32 = self.rng.random_range(0..1u32 << self.n);
        let odd = mask.count_ones() % 2 == 1;
        match grade {
            Grade::Even if odd => mask ^= 1,
            Grade::Odd if !odd => mask ^= 1,
            _ => {}
        }
        Some(Blade::from_mask(mask))
    }

    fn graded(&mut self, grade: Grade, min_terms: usize) -> GE {
        if min_terms == 0 && self.rng.random_ratio(1, 8) {
            return GE::zero(self.n);
        }
        let k = self.rng.random_range(min_terms.max(1)..=MAX_TERMS);
        let terms: Vec<_> = (0..k)
            .filter_map(|_| {
                let b = self.blade(grade)?;
                Some((b, self.coefficient()))
            })
            .collect();
        GE::from_terms(self.n, terms).expect("blades fit")
    }

    /// Arbitrary element, not necessarily homogeneous.
    pub fn element(&mut self) -> GE {
        self.graded(Grade::Any, 0)
    }

    pub fn even(&mut self) -> GE {
        self.graded(Grade::Even, 0)
    }

    pub fn odd(&mut self) -> GE {
        self.graded(Grade::Odd, 0)
    }

    /// Even or odd with equal probability.
    pub fn homogeneous(&mut self) -> GE {
        if self.coin() {
            self.even()
        } else {
            self.odd()
        }
    }

    /// Even with body zero.
    pub fn even_soul(&mut self) -> GE {
        self.even().soul()
    }

    /// Even with nonzero body.
    pub fn even_unit(&mut self) -> GE {
        let body = GE::constant(self.n, self.coefficient());
        &body + &self.even_soul()
    }

    /// Any element with body zero.
    pub fn soul(&mut self) -> GE {
        self.element().soul()
    }

    /// Any element with nonzero body.
    pub fn unit(&mut self) -> GE {
        let body = GE::constant(self.n, self.coefficient());
        &body + &self.soul()
    }

    /// Nonzero odd element; needs at least one generator.
    pub fn odd_nonzero(&mut self) -> GE {
        assert!(self.n > 0, "no odd elements in the algebra with zero generators");
        loop {
            let x = self.graded(Grade::Odd, 1);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Nonzero even element.
    pub fn even_nonzero(&mut self) -> GE {
        loop {
            let x = self.graded(Grade::Even, 1);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Even diagonal entry whose body is zero or not with equal probability.
    pub fn diagonal_entry(&mut self) -> GE {
        if self.coin() {
            self.even_unit()
        } else {
            self.even_soul()
        }
    }

    pub fn matrix(&mut self) -> SuperMatrix {
        let a = self.diagonal_entry();
        let alpha = self.odd();
        let beta = self.odd();
        let b = self.diagonal_entry();
        SuperMatrix::new(a, alpha, beta, b).expect("graded entries")
    }

    /// A matrix with body(b) ≠ 0.
    pub fn m_double_prime(&mut self) -> SuperMatrix {
        let a = self.diagonal_entry();
        let alpha = self.odd();
        let beta = self.odd();
        let b = self.even_unit();
        SuperMatrix::new(a, alpha, beta, b).expect("graded entries")
    }

    /// An invertible matrix.
    pub fn group(&mut self) -> SuperMatrix {
        let a = self.even_unit();
        let alpha = self.odd();
        let beta = self.odd();
        let b = self.even_unit();
        SuperMatrix::new(a, alpha, beta, b).expect("graded entries")
    }

    /// A random member of the set `label`.
    pub fn matrix_in(&mut self, label: SetLabel) -> SuperMatrix {
        let m = self.matrix();
        let n = self.n;
        let (a, alpha, beta, b) = (m.a().clone(), m.alpha().clone(), m.beta().clone(), m.b().clone());
        let z = || GE::zero(n);
        let (a, alpha, beta, b) = match label {
            SetLabel::S => (a, alpha, z(), b),
            SetLabel::T => (z(), alpha, beta, b),
            SetLabel::D => (a, z(), z(), b),
            SetLabel::A => (z(), alpha, beta, z()),
            SetLabel::Sst => (a, z(), beta, b),
            SetLabel::TPi => (a, alpha, beta, z()),
        };
        SuperMatrix::new(a, alpha, beta, b).expect("graded entries")
    }

    pub fn even_reduced(&mut self) -> SuperMatrix {
        self.matrix_in(SetLabel::S)
    }

    pub fn odd_reduced(&mut self) -> SuperMatrix {
        self.matrix_in(SetLabel::T)
    }

    pub fn reduced_of(&mut self, kind: ReducedKind) -> Reduced {
        let m = match kind {
            ReducedKind::Even => self.even_reduced(),
            ReducedKind::Odd => self.odd_reduced(),
        };
        Reduced::new(kind, m).expect("sampled in shape")
    }

    pub fn reduced(&mut self) -> Reduced {
        let kind = if self.coin() {
            ReducedKind::Even
        } else {
            ReducedKind::Odd
        };
        self.reduced_of(kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::Parity;

    #[test]
    fn same_seed_same_stream() {
        let mut s1 = Sampler::new(4, 9);
        let mut s2 = Sampler::new(4, 9);
        for _ in 0..50 {
            assert_eq!(s1.matrix(), s2.matrix());
        }
    }

    #[test]
    fn samples_respect_constraints() {
        let mut s = Sampler::new(4, 1);
        for _ in 0..500 {
            let e = s.even();
            assert!(e.len() <= MAX_TERMS);
            assert_ne!(e.parity(), Parity::Mixed);
            assert!(e.is_even());
            assert!(s.odd().is_odd());
            assert!(!s.odd_nonzero().is_zero());
            assert!(s.even_unit().has_unit_body());
            assert!(!s.even_soul().has_unit_body());
            assert!(s.group().is_invertible());
            assert!(s.m_double_prime().b().has_unit_body());
            for label in SetLabel::ALL {
                assert!(label.contains(&s.matrix_in(label)));
            }
            {
                let q = s.coefficient();
                let q2 = &q * Rational::from_integer(2.into());
                assert!(q2.is_integer());
                assert!(q2.numer().magnitude() <= &6u32.into());
            }
        }
    }

    #[test]
    fn invertibility_classes_all_occur() {
        let mut s = Sampler::new(4, 3);
        let classes: std::collections::BTreeSet<_> =
            (0..200).map(|_| s.matrix().invertibility().name()).collect();
        assert_eq!(classes.len(), 4);
    }
}
