//! Antiunitary operators `v ↦ K·conj(v)`.

use super::{ExactMatrix, GaussianRational, LinalgError};

/// An antiunitary operator stored through its unitary linear part `K`.
///
/// The operator acts as `v ↦ K·conj(v)`. Composition rules follow from that:
/// two antiunitaries compose to the linear map `K₁·conj(K₂)`, an antiunitary
/// after a unitary `U` is the antiunitary with linear part `K·conj(U)`, and
/// conjugating a linear operator gives `J A J⁻¹ = K·conj(A)·K†`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Antiunitary {
    k: ExactMatrix,
}

impl Antiunitary {
    /// Wraps `k`, checking that it is square and unitary.
    pub fn new(k: ExactMatrix) -> Result<Self, LinalgError> {
        if !k.is_square() {
            return Err(LinalgError::NotSquare { rows: k.rows(), cols: k.cols() });
        }
        if !k.is_unitary() {
            return Err(LinalgError::NotUnitary);
        }
        Ok(Self { k })
    }

    /// Complex conjugation itself (`K = I`).
    pub fn complex_conjugation(n: usize) -> Self {
        Self { k: ExactMatrix::identity(n) }
    }

    /// The linear part `K`.
    pub fn k(&self) -> &ExactMatrix {
        &self.k
    }

    pub fn into_k(self) -> ExactMatrix {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.k.rows()
    }

    /// `K·conj(v)`.
    pub fn apply(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>, LinalgError> {
        let conj: Vec<_> = v.iter().map(GaussianRational::conj).collect();
        self.k.apply(&conj)
    }

    /// The linear map `self ∘ other`, i.e. `K₁·conj(K₂)`.
    pub fn compose(&self, other: &Self) -> Result<ExactMatrix, LinalgError> {
        self.k.mul(&other.k.conj())
    }

    /// `J² = K·conj(K)`.
    pub fn square(&self) -> ExactMatrix {
        self.compose(self).expect("square antiunitary")
    }

    /// `self ∘ u` for a unitary `u` applied first; linear part `K·conj(u)`.
    pub fn after_unitary(&self, u: &ExactMatrix) -> Result<Self, LinalgError> {
        Self::new(self.k.mul(&u.conj())?)
    }

    /// `J A J⁻¹ = K·conj(A)·K†`.
    pub fn conjugate(&self, a: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        self.k.mul(&a.conj())?.mul(&self.k.dagger())
    }

    /// `J₁ ⊗ J₂`, whose linear part is `K₁ ⊗ K₂`.
    pub fn tensor(&self, other: &Self) -> Self {
        Self { k: self.k.kron(&other.k) }
    }
}
