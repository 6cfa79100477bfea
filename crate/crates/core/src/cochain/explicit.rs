//! The explicit 1-cocycles h_λ, f_k and f̃_k.
//!
//! Each constructor fixes the support of the printed template (values on
//! H, B, Y only) and solves `∂f = 0` for one scale per slot. The kernel
//! must be a line; it is normalized so the B-slot scale is 1. The solved
//! scales are reported as ratios to the printed slot values.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use super::Cochain;
use crate::algebra::{repaired_table, Generator, Parity, StructureTable, SuperMonomial};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, SparseMatrix, SparseVec};
use crate::module::{BasisVector, DensityModule, ModuleVector};
use crate::rational::{q, qi, Rational};

/// Solved scale of one slot relative to its printed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlotRatio {
    pub slot: String,
    #[serde(with = "crate::rational::serde_fraction")]
    pub ratio: Rational,
}

#[derive(Clone, Debug)]
pub struct ExplicitCocycle {
    pub name: String,
    pub cochain: Cochain,
    pub ratios: Vec<SlotRatio>,
}

impl ExplicitCocycle {
    pub fn ratio(&self, g: Generator) -> Option<&Rational> {
        self.ratios.iter().find(|r| r.slot == g.symbol().to_string()).map(|r| &r.ratio)
    }
}

fn slot(g: Generator) -> SuperMonomial {
    let (m, _) = crate::algebra::canonicalize(&[g]);
    m.expect("single generator")
}

/// Solves the slot scales of a template so that the result is a cocycle.
fn solve_template(
    name: String,
    module: DensityModule,
    parity: Parity,
    template: Vec<(Generator, ModuleVector)>,
    table: &StructureTable,
) -> Result<ExplicitCocycle> {
    let mut columns = Vec::new();
    let mut index: HashMap<(SuperMonomial, BasisVector), usize> = HashMap::new();
    for (g, v) in &template {
        let mut e = Cochain::zero(module.clone(), 1, parity);
        e.set(slot(*g), v.clone())?;
        let de = e.coboundary(table)?;
        let mut pairs = Vec::new();
        for (u, w) in de.values() {
            for (b, c) in w.iter() {
                let n = index.len();
                let i = *index.entry((*u, *b)).or_insert(n);
                pairs.push((i, c.clone()));
            }
        }
        columns.push(SparseVec::from_pairs(pairs));
    }
    let matrix = SparseMatrix::from_columns(index.len(), columns);
    let kernel = kernel_basis(&matrix);
    if kernel.len() != 1 {
        return Err(Error::NoCocycle(format!("{name}: template admits {} independent cocycles", kernel.len())));
    }
    let b_pos = template
        .iter()
        .position(|(g, _)| *g == Generator::B)
        .ok_or_else(|| Error::NoCocycle(format!("{name}: template has no B slot")))?;
    let b_scale = kernel[0].get(b_pos);
    if b_scale.is_zero() {
        return Err(Error::NoCocycle(format!("{name}: solved cocycle vanishes on B")));
    }
    let scales = kernel[0].scale(&(qi(1) / b_scale));
    let mut cochain = Cochain::zero(module, 1, parity);
    let mut ratios = Vec::new();
    for (i, (g, v)) in template.iter().enumerate() {
        let s = scales.get(i);
        cochain.set(slot(*g), v.scale(&s))?;
        ratios.push(SlotRatio { slot: g.symbol().to_string(), ratio: s });
    }
    if !cochain.coboundary(table)?.is_zero() {
        return Err(Error::NoCocycle(format!("{name}: solved scales fail substitution")));
    }
    Ok(ExplicitCocycle { name, cochain, ratios })
}

fn vec(terms: &[(Rational, BasisVector)]) -> ModuleVector {
    let mut v = ModuleVector::zero();
    for (c, b) in terms {
        v.add_term(c.clone(), *b);
    }
    v
}

/// h_λ on D_{λ,λ}: printed slots H ↦ -id, B ↦ θ, Y ↦ -2x.
pub fn make_h_lambda(lambda: &Rational) -> Result<ExplicitCocycle> {
    let module = DensityModule::new(lambda.clone(), lambda.clone(), 0);
    let template = vec![
        (Generator::H, vec(&[(qi(-1), BasisVector::a(0, 0))])),
        (Generator::B, vec(&[(qi(1), BasisVector::c(0, 0))])),
        (Generator::Y, vec(&[(qi(-2), BasisVector::a(1, 0))])),
    ];
    solve_template(format!("h_{lambda}"), module, Parity::Even, template, repaired_table())
}

/// The module D_{-k/2,(k+1)/2} carrying f_k and f̃_k.
pub fn f_module(k: u32) -> DensityModule {
    let k = k as i64;
    DensityModule::new(q(-k, 2), q(k + 1, 2), k as u32)
}

/// f_k: printed slots H ↦ d_{0,k}, B ↦ b_{0,k}, Y ↦ 2d_{1,k}.
pub fn make_f_k(k: u32) -> Result<ExplicitCocycle> {
    let template = vec![
        (Generator::H, vec(&[(qi(1), BasisVector::d(0, k))])),
        (Generator::B, vec(&[(qi(1), BasisVector::b(0, k))])),
        (Generator::Y, vec(&[(qi(2), BasisVector::d(1, k))])),
    ];
    solve_template(format!("f_{k}"), f_module(k), Parity::Odd, template, repaired_table())
}

/// f̃_k: printed slots B ↦ a_{0,k}, Y ↦ 2(c_{0,k} - k d_{0,k-1}).
pub fn make_ftilde_k(k: u32) -> Result<ExplicitCocycle> {
    let mut y = vec![(qi(2), BasisVector::c(0, k))];
    if k > 0 {
        y.push((qi(-2 * k as i64), BasisVector::d(0, k - 1)));
    }
    let template = vec![
        (Generator::B, vec(&[(qi(1), BasisVector::a(0, k))])),
        (Generator::Y, vec(&y)),
    ];
    solve_template(format!("ftilde_{k}"), f_module(k), Parity::Odd, template, repaired_table())
}
