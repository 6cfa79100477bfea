//! Matrices of the coboundary restricted to one cochain weight.
//!
//! An n-cochain of weight w sends a monomial u to the weight space
//! `M^{w + wt(u)}`. Since every weight of D_{λ,μ} is `-p` plus a half
//! integer whose fractional part records the parity, all cochains of a
//! given weight share one parity.

use std::collections::HashMap;

use num_integer::Integer;

use super::coboundary_terms;
use crate::algebra::{monomial_basis, Parity, StructureTable, SuperMonomial};
use crate::linalg::SparseMatrix;
use crate::module::{BasisVector, DensityModule};
use crate::rational::{q, qi, Rational};

/// Which cochain complex: all of osp(1|2), or its even part sl(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Complex {
    Full,
    Sl2,
}

impl Complex {
    pub fn basis(self, n: u32) -> Vec<SuperMonomial> {
        match self {
            Complex::Full => monomial_basis(n),
            Complex::Sl2 => monomial_basis(n).into_iter().filter(SuperMonomial::is_even_part).collect(),
        }
    }
}

/// `∂ : C^n_w → C^{n+1}_w` with its row and column labels.
#[derive(Clone, Debug)]
pub struct WeightBlock {
    pub n: u32,
    pub w: Rational,
    pub parity: Parity,
    pub domain: Vec<(SuperMonomial, BasisVector)>,
    pub codomain: Vec<(SuperMonomial, BasisVector)>,
    pub matrix: SparseMatrix,
}

/// Parity of the cochains of weight w, if any exist.
pub fn block_parity(module: &DensityModule, w: &Rational) -> Option<Parity> {
    let t = (w + module.shift()) * qi(2);
    t.is_integer().then(|| if t.to_integer().is_even() { Parity::Even } else { Parity::Odd })
}

pub fn cochain_basis(module: &DensityModule, complex: Complex, n: u32, w: &Rational) -> Vec<(SuperMonomial, BasisVector)> {
    let mut out = Vec::new();
    for u in complex.basis(n) {
        let alpha = w + q(u.weight2(), 2);
        for v in module.weight_basis(&alpha) {
            out.push((u, v));
        }
    }
    out
}

pub fn build_block(module: &DensityModule, table: &StructureTable, complex: Complex, n: u32, w: &Rational) -> WeightBlock {
    let parity = block_parity(module, w).unwrap_or(Parity::Even);
    let domain = cochain_basis(module, complex, n, w);
    let codomain = cochain_basis(module, complex, n + 1, w);
    let col: HashMap<(SuperMonomial, BasisVector), usize> = domain.iter().enumerate().map(|(i, x)| (*x, i)).collect();
    let row: HashMap<(SuperMonomial, BasisVector), usize> = codomain.iter().enumerate().map(|(i, x)| (*x, i)).collect();
    let mut by_source: HashMap<SuperMonomial, Vec<BasisVector>> = HashMap::new();
    for (u, v) in &domain {
        by_source.entry(*u).or_default().push(*v);
    }
    let mut triplets = Vec::new();
    for target in complex.basis(n + 1) {
        for term in coboundary_terms(&target.tuple(), parity, table) {
            let Some(vs) = by_source.get(&term.source) else { continue };
            for v in vs {
                let c = col[&(term.source, *v)];
                let image = match term.action {
                    Some(g) => module.act(g, v).expect("weight basis lies in the truncation"),
                    None => crate::module::ModuleVector::basis(*v),
                };
                for (b, x) in image.iter() {
                    let r = row[&(target, *b)];
                    triplets.push((r, c, &term.coeff * x));
                }
            }
        }
    }
    let matrix = SparseMatrix::from_triplets(codomain.len(), domain.len(), triplets);
    WeightBlock { n, w: w.clone(), parity, domain, codomain, matrix }
}
