//! Cochains of osp(1|2) with values in a truncated density module, the
//! graded coboundary, reduction, restriction to sl(2) and cup products.
//!
//! A cochain is stored on canonical monomials only; any other argument
//! order is reached through [`canonicalize`]. The coboundary of `f` on
//! `U_0 … U_n` is
//!
//! ```text
//! Σ_i (-1)^i (-1)^{U_i (f + U_0 + … + U_{i-1})} U_i f(…, Û_i, …)
//! + Σ_{i<j} (-1)^{i+j} (-1)^{U_i (U_0 + … + U_{i-1})}
//!           (-1)^{U_j (U_0 + … + Û_i + … + U_{j-1})} f([U_i, U_j], …, Û_i, …, Û_j, …)
//! ```

mod blocks;
mod cup;
mod explicit;
mod sl2;

pub use blocks::{block_parity, build_block, cochain_basis, Complex, WeightBlock};
pub use cup::{cup, cup_cocycle, CupSign};
pub use explicit::{f_module, make_f_k, make_ftilde_k, make_h_lambda, ExplicitCocycle, SlotRatio};
pub use sl2::{restrict_sl2, sl2_coboundary, Sl2Cochain};

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{canonicalize, monomial_basis, Generator, Parity, StructureTable, SuperMonomial};
use crate::error::{Error, Result};
use crate::linalg::{solve, SparseVec};
use crate::module::{DensityModule, ModuleVector};
use crate::rational::{qi, Rational};

/// One summand of the coboundary on a fixed argument tuple:
/// `coeff · (action ·) f(source)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryTerm {
    pub coeff: Rational,
    pub action: Option<Generator>,
    pub source: SuperMonomial,
}

fn parity_sum(ts: &[Generator]) -> u32 {
    ts.iter().map(|g| g.parity().bit()).sum()
}

fn sign(bit: u32) -> i64 {
    if bit.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The coboundary formula on the argument tuple `target` for a cochain of
/// parity `pf`, with every source already canonicalized.
pub fn coboundary_terms(target: &[Generator], pf: Parity, table: &StructureTable) -> Vec<CoboundaryTerm> {
    let n1 = target.len();
    let mut out = Vec::new();
    for i in 0..n1 {
        let ui = target[i];
        let s = sign(i as u32) * sign(ui.parity().bit() * (pf.bit() + parity_sum(&target[..i])));
        let rest: Vec<Generator> = target.iter().enumerate().filter(|&(l, _)| l != i).map(|(_, &g)| g).collect();
        if let (Some(source), c) = canonicalize(&rest) {
            out.push(CoboundaryTerm { coeff: qi(s * c), action: Some(ui), source });
        }
    }
    for i in 0..n1 {
        for j in i + 1..n1 {
            let (ui, uj) = (target[i], target[j]);
            let before_j: u32 = target[..j]
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != i)
                .map(|(_, g)| g.parity().bit())
                .sum();
            let s = sign((i + j) as u32)
                * sign(ui.parity().bit() * parity_sum(&target[..i]))
                * sign(uj.parity().bit() * before_j);
            let rest: Vec<Generator> = target
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != i && l != j)
                .map(|(_, &g)| g)
                .collect();
            for (g, c) in table.bracket(ui, uj).terms() {
                let mut args = vec![g];
                args.extend_from_slice(&rest);
                if let (Some(source), cs) = canonicalize(&args) {
                    out.push(CoboundaryTerm { coeff: c * qi(s * cs), action: None, source });
                }
            }
        }
    }
    out
}

/// A parity-homogeneous n-cochain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    module: DensityModule,
    degree: u32,
    parity: Parity,
    values: BTreeMap<SuperMonomial, ModuleVector>,
}

impl Cochain {
    pub fn zero(module: DensityModule, degree: u32, parity: Parity) -> Self {
        Self { module, degree, parity, values: BTreeMap::new() }
    }

    pub fn module(&self) -> &DensityModule {
        &self.module
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Sets the value on a canonical monomial, checking degree, parity and truncation.
    pub fn set(&mut self, u: SuperMonomial, value: ModuleVector) -> Result<()> {
        if u.degree() != self.degree {
            return Err(Error::DimensionMismatch { expected: self.degree as usize, found: u.degree() as usize });
        }
        if let Some(p) = value.parity() {
            if p != self.parity + u.parity() {
                return Err(Error::InhomogeneousValue { monomial: u.to_string() });
            }
        } else if !value.is_zero() {
            return Err(Error::InhomogeneousValue { monomial: u.to_string() });
        }
        if let Some(k) = value.max_k() {
            if k > self.module.kmax() {
                let v = *value.iter().find(|(v, _)| v.k == k).expect("max k present").0;
                return Err(Error::TruncationViolation { vector: v, kmax: self.module.kmax() });
            }
        }
        if value.is_zero() {
            self.values.remove(&u);
        } else {
            self.values.insert(u, value);
        }
        Ok(())
    }

    pub fn value(&self, u: &SuperMonomial) -> ModuleVector {
        self.values.get(u).cloned().unwrap_or_default()
    }

    pub fn values(&self) -> impl Iterator<Item = (&SuperMonomial, &ModuleVector)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Value on an arbitrary argument tuple.
    pub fn evaluate(&self, tuple: &[Generator]) -> Result<ModuleVector> {
        if tuple.len() != self.degree as usize {
            return Err(Error::DimensionMismatch { expected: self.degree as usize, found: tuple.len() });
        }
        Ok(match canonicalize(tuple) {
            (Some(u), s) => self.value(&u).scale(&qi(s)),
            _ => ModuleVector::zero(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.module.clone(), self.degree, self.parity);
        if !c.is_zero() {
            for (u, v) in &self.values {
                out.values.insert(*u, v.scale(c));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (u, v) in &other.values {
            let sum = out.value(u).add(v);
            out.set(*u, sum)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DimensionMismatch { expected: self.degree as usize, found: other.degree as usize });
        }
        if self.module.lambda() != other.module.lambda() || self.module.mu() != other.module.mu() {
            return Err(Error::TypeMismatch("cochains take values in different modules".into()));
        }
        if self.parity != other.parity && !self.is_zero() && !other.is_zero() {
            return Err(Error::TypeMismatch("cochains of different parity".into()));
        }
        Ok(())
    }

    /// Value of `∂f` on an arbitrary argument tuple.
    pub fn coboundary_at(&self, target: &[Generator], table: &StructureTable) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for t in coboundary_terms(target, self.parity, table) {
            let v = self.value(&t.source);
            if v.is_zero() {
                continue;
            }
            let v = match t.action {
                Some(g) => self.module.act_vec(g, &v)?,
                None => v,
            };
            out.add_scaled(&v, &t.coeff);
        }
        Ok(out)
    }

    pub fn coboundary(&self, table: &StructureTable) -> Result<Self> {
        let mut out = Self::zero(self.module.clone(), self.degree + 1, self.parity);
        for u in monomial_basis(self.degree + 1) {
            let v = self.coboundary_at(&u.tuple(), table)?;
            out.set(u, v)?;
        }
        Ok(out)
    }

    /// Zero on every monomial containing A.
    pub fn is_reduced(&self) -> bool {
        self.values.keys().all(|u| u.mult_a() == 0)
    }

    /// Cochain weights present: `wt(value) - wt(monomial)` over all terms.
    pub fn weights(&self) -> Vec<Rational> {
        let p = self.module.shift();
        let mut ws: Vec<Rational> = self
            .values
            .iter()
            .flat_map(|(u, v)| {
                let wu = crate::rational::q(u.weight2(), 2);
                let p = p.clone();
                v.iter().map(move |(b, _)| b.weight(&p) - &wu).collect::<Vec<_>>()
            })
            .collect();
        ws.sort();
        ws.dedup();
        ws
    }

    /// The weight-w component.
    pub fn weight_component(&self, w: &Rational) -> Self {
        let p = self.module.shift();
        let mut out = Self::zero(self.module.clone(), self.degree, self.parity);
        for (u, v) in &self.values {
            let wu = crate::rational::q(u.weight2(), 2);
            let mut part = ModuleVector::zero();
            for (b, c) in v.iter() {
                if &(b.weight(&p) - &wu) == w {
                    part.add_term(c.clone(), *b);
                }
            }
            if !part.is_zero() {
                out.values.insert(*u, part);
            }
        }
        out
    }

    /// `{"A^2 H B": [["a", m, k, "p/q"], ...], ...}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(self.values.iter().map(|(u, v)| (u.to_string(), v.to_json())).collect())
    }

    pub fn from_json(module: DensityModule, degree: u32, parity: Parity, value: &serde_json::Value) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| Error::Parse("cochain must be a JSON object".into()))?;
        let mut out = Self::zero(module, degree, parity);
        for (k, v) in obj {
            let u: SuperMonomial = k.parse()?;
            out.set(u, ModuleVector::from_json(v)?)?;
        }
        Ok(out)
    }

    /// Coordinates in the domain basis of a weight block.
    pub(crate) fn to_coordinates(&self, block_domain: &[(SuperMonomial, crate::module::BasisVector)]) -> Result<SparseVec> {
        let idx: std::collections::HashMap<_, _> = block_domain.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut pairs = Vec::new();
        for (u, v) in &self.values {
            for (b, c) in v.iter() {
                let i = idx.get(&(*u, *b)).ok_or_else(|| Error::InhomogeneousValue { monomial: u.to_string() })?;
                pairs.push((*i, c.clone()));
            }
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    pub(crate) fn from_coordinates(
        module: &DensityModule,
        degree: u32,
        parity: Parity,
        block_domain: &[(SuperMonomial, crate::module::BasisVector)],
        x: &SparseVec,
    ) -> Self {
        let mut out = Self::zero(module.clone(), degree, parity);
        for (i, c) in x.iter() {
            let (u, b) = block_domain[i];
            out.values.entry(u).or_default().add_term(c.clone(), b);
        }
        out.values.retain(|_, v| !v.is_zero());
        out
    }

    /// Some `g` with `∂g = self`, solved weight by weight and verified.
    pub fn is_coboundary(&self, table: &StructureTable) -> Result<Option<Cochain>> {
        if !self.coboundary(table)?.is_zero() {
            return Err(Error::NotACocycle);
        }
        if self.degree == 0 {
            return Ok(if self.is_zero() { Some(Cochain::zero(self.module.clone(), 0, self.parity)) } else { None });
        }
        let mut g = Cochain::zero(self.module.clone(), self.degree - 1, self.parity);
        for w in self.weights() {
            let part = self.weight_component(&w);
            let block = build_block(&self.module, table, Complex::Full, self.degree - 1, &w);
            let rhs = part.to_coordinates(&block.codomain)?;
            match solve(&block.matrix, &rhs) {
                Some(x) => {
                    let gw = Cochain::from_coordinates(&self.module, self.degree - 1, self.parity, &block.domain, &x);
                    g = g.add(&gw)?;
                }
                None => return Ok(None),
            }
        }
        if g.coboundary(table)? != *self {
            return Err(Error::SolveFailed("primitive failed substitution".into()));
        }
        Ok(Some(g))
    }

    /// `(g, f - ∂g)` with `f - ∂g` reduced. Solvable for cocycles; an
    /// arbitrary cochain may have no reduced representative.
    pub fn reduce(&self, table: &StructureTable) -> Result<(Cochain, Cochain)> {
        let mut g = Cochain::zero(self.module.clone(), self.degree.saturating_sub(1), self.parity);
        if self.degree == 0 || self.is_reduced() {
            return Ok((g, self.clone()));
        }
        for w in self.weights() {
            let part = self.weight_component(&w);
            let block = build_block(&self.module, table, Complex::Full, self.degree - 1, &w);
            let a_rows: Vec<usize> = block
                .codomain
                .iter()
                .enumerate()
                .filter(|(_, (u, _))| u.mult_a() > 0)
                .map(|(i, _)| i)
                .collect();
            let m = block.matrix.select_rows(&a_rows);
            let full = part.to_coordinates(&block.codomain)?;
            let pos: std::collections::HashMap<usize, usize> = a_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
            let rhs = full.remap(|r| pos.get(&r).copied());
            let x = solve(&m, &rhs).ok_or_else(|| Error::SolveFailed(format!("no reducing primitive at weight {w}")))?;
            let gw = Cochain::from_coordinates(&self.module, self.degree - 1, self.parity, &block.domain, &x);
            g = g.add(&gw)?;
        }
        let red = self.sub(&g.coboundary(table)?)?;
        if !red.is_reduced() {
            return Err(Error::SolveFailed("reduction left A-values".into()));
        }
        Ok((g, red))
    }
}

#[cfg(test)]
mod tests;
