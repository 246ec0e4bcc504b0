//! The generalized Λ₀⊕Λ₁-module on (1|1) supermatrices.
//!
//! Even elements act through scalars E(x) = diag(x, x) and odd elements
//! through anti-scalars ℰ(χ) = antidiag(χ, χ). On top of that sit the queer
//! subalgebra, the anti-transposes, the right-sensible ⋆ product, and the
//! eigenvalue / characteristic-function / Cayley–Hamilton theory of reduced
//! supermatrices.

use crate::error::{AlgebraError, Result};
use crate::grassmann::GrassmannElement as GE;
use crate::reduced::{Reduced, ReducedKind};
use crate::supermatrix::{require_even, require_odd, OddMatrix, ShapeClass, SuperMatrix};
use serde::Serialize;

/// E(x) = diag(x, x) for even x.
pub fn scalar(x: &GE) -> Result<SuperMatrix> {
    require_even("x", x)?;
    SuperMatrix::diag(x.clone(), x.clone())
}

/// ℰ(χ) = antidiag(χ, χ) for odd χ.
pub fn antiscalar(chi: &GE) -> Result<SuperMatrix> {
    require_odd("chi", chi)?;
    SuperMatrix::antidiag(chi.clone(), chi.clone())
}

/// Odd scalar diag(χ, −χ).
pub fn odd_scalar(chi: &GE) -> Result<OddMatrix> {
    require_odd("chi", chi)?;
    let n = chi.num_generators();
    OddMatrix::new(chi.clone(), GE::zero(n), GE::zero(n), -chi)
}

/// Odd anti-scalar antidiag(x, x).
pub fn odd_antiscalar(x: &GE) -> Result<OddMatrix> {
    require_even("x", x)?;
    let n = x.num_generators();
    OddMatrix::new(GE::zero(n), x.clone(), x.clone(), GE::zero(n))
}

/// A pair X = {x, χ} of an even and an odd element.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct ScalarPair {
    x: GE,
    chi: GE,
}

impl ScalarPair {
    pub fn new(x: GE, chi: GE) -> Result<Self> {
        require_even("x", &x)?;
        require_odd("chi", &chi)?;
        if x.num_generators() != chi.num_generators() {
            return Err(AlgebraError::GeneratorMismatch {
                left: x.num_generators(),
                right: chi.num_generators(),
            });
        }
        Ok(ScalarPair { x, chi })
    }

    pub fn x(&self) -> &GE {
        &self.x
    }

    pub fn chi(&self) -> &GE {
        &self.chi
    }

    pub fn scalar(&self) -> SuperMatrix {
        scalar(&self.x).expect("validated")
    }

    pub fn antiscalar(&self) -> SuperMatrix {
        antiscalar(&self.chi).expect("validated")
    }
}

/// An element [[x, χ], [χ, x]] of the queer subalgebra, i.e. E(x) + ℰ(χ).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct QueerElement {
    x: GE,
    chi: GE,
}

impl QueerElement {
    pub fn new(x: GE, chi: GE) -> Result<Self> {
        let pair = ScalarPair::new(x, chi)?;
        Ok(QueerElement {
            x: pair.x,
            chi: pair.chi,
        })
    }

    pub fn x(&self) -> &GE {
        &self.x
    }

    pub fn chi(&self) -> &GE {
        &self.chi
    }

    pub fn realize(&self) -> SuperMatrix {
        SuperMatrix::new(self.x.clone(), self.chi.clone(), self.chi.clone(), self.x.clone())
            .expect("validated")
    }
}

/// (x₁x₂ + χ₁χ₂, x₁χ₂ + χ₁x₂)
pub fn queer_mul(q1: &QueerElement, q2: &QueerElement) -> Result<QueerElement> {
    let x = q1.x.checked_mul(&q2.x)?.checked_add(&q1.chi.checked_mul(&q2.chi)?)?;
    let chi = q1.x.checked_mul(&q2.chi)?.checked_add(&q1.chi.checked_mul(&q2.x)?)?;
    Ok(QueerElement { x, chi })
}

/// A module actor: a scalar E(x) or an anti-scalar ℰ(χ).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Actor {
    Scalar(GE),
    AntiScalar(GE),
}

impl Actor {
    pub fn matrix(&self) -> Result<SuperMatrix> {
        match self {
            Actor::Scalar(x) => scalar(x),
            Actor::AntiScalar(chi) => antiscalar(chi),
        }
    }
}

pub fn act_left(actor: &Actor, m: &SuperMatrix) -> Result<SuperMatrix> {
    actor.matrix()?.try_mul(m)
}

pub fn act_right(m: &SuperMatrix, actor: &Actor) -> Result<SuperMatrix> {
    m.try_mul(&actor.matrix()?)
}

/// ℰ(χ₁) M ℰ(χ₂)
pub fn act_both(chi1: &GE, m: &SuperMatrix, chi2: &GE) -> Result<SuperMatrix> {
    antiscalar(chi1)?.try_mul(m)?.try_mul(&antiscalar(chi2)?)
}

/// `R₁ ⋆_X R₂`: R₁·E(x)·R₂ for even R₂, R₁·ℰ(χ)·R₂ for odd R₂.
pub fn star_product(r1: &Reduced, r2: &Reduced, x: &ScalarPair) -> Result<Reduced> {
    r1.right_sensible(r2, &x.scalar(), &x.antiscalar())
}

/// (a, b) for even-reduced, (α, β) for odd-reduced.
pub fn eigenvalues(r: &Reduced) -> (GE, GE) {
    let m = r.matrix();
    match r.kind() {
        ReducedKind::Even => (m.a().clone(), m.b().clone()),
        ReducedKind::Odd => (m.alpha().clone(), m.beta().clone()),
    }
}

/// A column (v, w) ∈ Λ^{1|1} with v even and w odd.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct ColumnVector {
    pub v: GE,
    pub w: GE,
}

impl ColumnVector {
    pub fn new(v: GE, w: GE) -> Result<Self> {
        require_even("v", &v)?;
        require_odd("w", &w)?;
        Ok(ColumnVector { v, w })
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero() && self.w.is_zero()
    }
}

pub fn apply(m: &SuperMatrix, col: &ColumnVector) -> ColumnVector {
    ColumnVector {
        v: &(m.a() * &col.v) + &(m.alpha() * &col.w),
        w: &(m.beta() * &col.v) + &(m.b() * &col.w),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Branch {
    First,
    Second,
}

/// Right-hand side of the eigen-equation: E(λ)V for even-reduced matrices,
/// ℰ(λ)V for odd-reduced ones.
pub fn eigen_rhs(kind: ReducedKind, value: &GE, col: &ColumnVector) -> ColumnVector {
    match kind {
        ReducedKind::Even => ColumnVector {
            v: value * &col.v,
            w: value * &col.w,
        },
        ReducedKind::Odd => ColumnVector {
            v: value * &col.w,
            w: value * &col.v,
        },
    }
}

/// A nonzero V with R·V = E(λ)V (even) or R·V = ℰ(λ)V (odd) for the chosen
/// eigenvalue branch.
///
/// Even, λ = a: (1, 0). Even, λ = b: (0, α), or (0, θ₁) when α = 0.
/// Odd, λ = β: (1, 0). Odd, λ = α: (1, b⁻¹(α − β)), needing body(b) ≠ 0.
pub fn eigenvector(r: &Reduced, branch: Branch) -> Result<ColumnVector> {
    let m = r.matrix();
    let n = m.num_generators();
    let unit = || ColumnVector {
        v: GE::one(n),
        w: GE::zero(n),
    };
    match (r.kind(), branch) {
        (ReducedKind::Even, Branch::First) | (ReducedKind::Odd, Branch::Second) => Ok(unit()),
        (ReducedKind::Even, Branch::Second) => {
            let w = if m.alpha().is_zero() {
                GE::generator(n, 1).map_err(|_| AlgebraError::NoEigenvector)?
            } else {
                m.alpha().clone()
            };
            Ok(ColumnVector { v: GE::zero(n), w })
        }
        (ReducedKind::Odd, Branch::First) => {
            let inv_b = m.b().invert().map_err(|_| AlgebraError::NoEigenvector)?;
            Ok(ColumnVector {
                v: GE::one(n),
                w: &inv_b * &(m.alpha() - m.beta()),
            })
        }
    }
}

/// A characteristic function kept as an uncancelled fraction.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct CharFn {
    pub numerator: GE,
    pub denominator: GE,
}

/// ((x − a)(x − b), (x − b)²) from the diagonal of `s`.
pub fn char_fn_even(s: &SuperMatrix, x: &GE) -> Result<CharFn> {
    require_even("x", x)?;
    let xa = x.checked_sub(s.a())?;
    let xb = x.checked_sub(s.b())?;
    Ok(CharFn {
        numerator: &xa * &xb,
        denominator: &xb * &xb,
    })
}

/// ((χ − α)(χ − β), b²) from the entries of `t`.
pub fn char_fn_odd(t: &SuperMatrix, chi: &GE) -> Result<CharFn> {
    require_odd("chi", chi)?;
    let ca = chi.checked_sub(t.alpha())?;
    let cb = chi.checked_sub(t.beta())?;
    Ok(CharFn {
        numerator: &ca * &cb,
        denominator: t.b() * t.b(),
    })
}

/// (S − E(a))(S − E(b)); zero for every even-reduced S.
pub fn char_poly_even(s: &SuperMatrix) -> Result<SuperMatrix> {
    if !s.is_shape(ShapeClass::EvenReduced) {
        return Err(AlgebraError::NotReduced);
    }
    let left = s - &scalar(s.a())?;
    let right = s - &scalar(s.b())?;
    Ok(&left * &right)
}

/// (T − ℰ(α))(T − ℰ(β)); equals diag(0, b²).
pub fn char_poly_odd(t: &SuperMatrix) -> Result<SuperMatrix> {
    if !t.is_shape(ShapeClass::OddReduced) {
        return Err(AlgebraError::NotReduced);
    }
    let left = t - &antiscalar(t.alpha())?;
    let right = t - &antiscalar(t.beta())?;
    Ok(&left * &right)
}
