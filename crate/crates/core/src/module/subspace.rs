//! Kernels and images of generators on single weight spaces. Subspaces are
//! expressed in coordinates of [`DensityModule::weight_basis`].

use std::collections::HashMap;

use super::{BasisVector, DensityModule, ModuleVector};
use crate::algebra::Generator;
use crate::error::Result;
use crate::linalg::{kernel_basis, SparseMatrix, SparseVec, Subspace};
use crate::rational::Rational;

fn index_of(basis: &[BasisVector]) -> HashMap<BasisVector, usize> {
    basis.iter().enumerate().map(|(i, v)| (*v, i)).collect()
}

/// Coordinates of `w` in `basis`; every term of `w` must occur in it.
pub fn coordinates(basis: &[BasisVector], w: &ModuleVector) -> SparseVec {
    let idx = index_of(basis);
    SparseVec::from_pairs(w.iter().map(|(v, c)| {
        let i = *idx.get(v).unwrap_or_else(|| panic!("{v} outside the weight basis"));
        (i, c.clone())
    }))
}

pub fn from_coordinates(basis: &[BasisVector], x: &SparseVec) -> ModuleVector {
    let mut out = ModuleVector::zero();
    for (i, c) in x.iter() {
        out.add_term(c.clone(), basis[i]);
    }
    out
}

/// Matrix of `g` from weight α to weight α + wt(g).
pub fn action_matrix(module: &DensityModule, g: Generator, alpha: &Rational) -> Result<SparseMatrix> {
    let src = module.weight_basis(alpha);
    let dst = module.weight_basis(&(alpha + g.weight()));
    let cols = src
        .iter()
        .map(|v| Ok(coordinates(&dst, &module.act(g, v)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix::from_columns(dst.len(), cols))
}

/// Joint kernel of `gens` on the weight-α space.
pub fn kernel_in_weight(module: &DensityModule, gens: &[Generator], alpha: &Rational) -> Result<Subspace> {
    let n = module.weight_basis(alpha).len();
    let mut rows = Vec::new();
    for &g in gens {
        rows.extend(action_matrix(module, g, alpha)?.rows());
    }
    let m = SparseMatrix::from_columns(n, rows).transpose();
    Ok(Subspace::span(n, &kernel_basis(&m)))
}

/// `g(sub)` where `sub` lives in the weight-α space.
pub fn image_of(module: &DensityModule, g: Generator, sub: &Subspace, alpha: &Rational) -> Result<Subspace> {
    let a = action_matrix(module, g, alpha)?;
    let images: Vec<SparseVec> = sub.basis().iter().map(|v| a.mul_vec(v)).collect();
    Ok(Subspace::span(a.nrows(), &images))
}
