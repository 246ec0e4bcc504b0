//! Even- and odd-reduced supermatrices as labelled values.
//!
//! The two reduced shapes overlap (`[[0, α], [0, b]]` is both), so a reduced
//! operand carries its label explicitly. Right-sensible sandwich products pick
//! the middle factor from the label of the right operand and give the result
//! the label of the left operand.

use crate::error::{AlgebraError, Result};
use crate::supermatrix::{ShapeClass, SuperMatrix};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ReducedKind {
    /// β = 0
    Even,
    /// a = 0
    Odd,
}

impl ReducedKind {
    pub fn shape(self) -> ShapeClass {
        match self {
            ReducedKind::Even => ShapeClass::EvenReduced,
            ReducedKind::Odd => ShapeClass::OddReduced,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ReducedKind::Even => "even",
            ReducedKind::Odd => "odd",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Reduced {
    kind: ReducedKind,
    matrix: SuperMatrix,
}

impl Reduced {
    pub fn new(kind: ReducedKind, matrix: SuperMatrix) -> Result<Self> {
        if !matrix.is_shape(kind.shape()) {
            return Err(AlgebraError::NotReduced);
        }
        Ok(Reduced { kind, matrix })
    }

    pub fn even(matrix: SuperMatrix) -> Result<Self> {
        Self::new(ReducedKind::Even, matrix)
    }

    pub fn odd(matrix: SuperMatrix) -> Result<Self> {
        Self::new(ReducedKind::Odd, matrix)
    }

    /// Labels a raw matrix, preferring `Even` on the overlap.
    pub fn classify(matrix: SuperMatrix) -> Result<Self> {
        if matrix.is_shape(ShapeClass::EvenReduced) {
            Self::even(matrix)
        } else {
            Self::odd(matrix)
        }
    }

    pub fn kind(&self) -> ReducedKind {
        self.kind
    }

    pub fn matrix(&self) -> &SuperMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SuperMatrix {
        self.matrix
    }

    /// `self · W · rhs`, where `W` is `even_middle` for an even right operand
    /// and `odd_middle` for an odd one. The result keeps the left label.
    pub fn right_sensible(
        &self,
        rhs: &Reduced,
        even_middle: &SuperMatrix,
        odd_middle: &SuperMatrix,
    ) -> Result<Reduced> {
        let middle = match rhs.kind {
            ReducedKind::Even => even_middle,
            ReducedKind::Odd => odd_middle,
        };
        let product = self.matrix.try_mul(middle)?.try_mul(&rhs.matrix)?;
        Reduced::new(self.kind, product)
    }
}
