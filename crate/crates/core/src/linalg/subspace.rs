use num_traits::One;

use super::{kernel_basis, Echelon, SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A subspace of `Q^ambient` held by its reduced echelon basis, so equality of
/// subspaces is equality of values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self { ambient, basis: (0..ambient).map(SparseVec::unit).collect() }
    }

    pub fn span<'a, I: IntoIterator<Item = &'a SparseVec>>(ambient: usize, vectors: I) -> Self {
        Self { ambient, basis: Echelon::from_vectors(ambient, vectors).rref() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        Echelon::from_vectors(self.ambient, &self.basis).contains(v)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        let e = Echelon::from_vectors(self.ambient, &self.basis);
        Ok(other.basis.iter().all(|v| e.contains(v)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::span(self.ambient, self.basis.iter().chain(&other.basis)))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        // Σ a_i u_i - Σ b_j w_j = 0
        let r = self.basis.len();
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.scale(&-Rational::one())));
        let m = SparseMatrix::from_columns(self.ambient, cols);
        let vectors: Vec<SparseVec> = kernel_basis(&m)
            .iter()
            .map(|k| {
                let mut acc = SparseVec::new();
                for (i, a) in k.iter().take_while(|(i, _)| *i < r) {
                    acc = acc.add_scaled(&self.basis[i], a);
                }
                acc
            })
            .collect();
        Ok(Self::span(self.ambient, &vectors))
    }

    /// `dim self - dim sub`, requiring `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Self) -> Result<usize> {
        if !self.contains(sub)? {
            return Err(Error::NotContained);
        }
        Ok(self.dim() - sub.dim())
    }

    /// A complement of `self` inside `inside`, built by walking the basis of
    /// `inside` in order and keeping every vector not yet in the span.
    pub fn complement_in(&self, inside: &Self) -> Result<Self> {
        if !inside.contains(self)? {
            return Err(Error::NotContained);
        }
        let mut e = Echelon::from_vectors(self.ambient, &self.basis);
        let mut picked = Vec::new();
        for v in &inside.basis {
            if e.insert(v) {
                picked.push(v.clone());
            }
        }
        Ok(Self { ambient: self.ambient, basis: picked })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| qi(x)).collect::<Vec<_>>())
    }

    #[test]
    fn self_intersection_is_self() {
        let u = Subspace::span(3, &[v(&[1, 2, 0]), v(&[0, 1, 1])]);
        assert_eq!(u.intersection(&u).unwrap(), u);
    }

    #[test]
    fn quotient_by_zero() {
        let u = Subspace::span(3, &[v(&[1, 2, 0])]);
        assert_eq!(u.quotient_dim(&Subspace::zero(3)).unwrap(), 1);
    }

    #[test]
    fn quotient_requires_containment() {
        let u = Subspace::span(3, &[v(&[1, 0, 0])]);
        let w = Subspace::span(3, &[v(&[0, 1, 0])]);
        assert_eq!(u.quotient_dim(&w), Err(Error::NotContained));
    }

    #[test]
    fn complement_edges() {
        let inside = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let zero = Subspace::zero(3);
        assert_eq!(zero.complement_in(&inside).unwrap().dim(), 2);
        assert!(inside.complement_in(&inside).unwrap().is_zero());
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
    }
}
