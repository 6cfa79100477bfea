//! Restriction to the even part sl(2) = span{X, H, Y}.

use super::{build_block, Cochain, Complex};
use crate::algebra::{StructureTable, SuperMonomial};
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::module::ModuleVector;

/// A cochain of sl(2): supported on monomials in X, H, Y only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Cochain(Cochain);

impl Sl2Cochain {
    pub fn as_cochain(&self) -> &Cochain {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.degree()
    }

    pub fn value(&self, u: &SuperMonomial) -> ModuleVector {
        self.0.value(u)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.sub(&other.0)?))
    }

    /// A primitive in the sl(2) complex, or `None` for a nontrivial class.
    pub fn is_coboundary(&self, table: &StructureTable) -> Result<Option<Sl2Cochain>> {
        if !sl2_coboundary(self, table)?.is_zero() {
            return Err(Error::NotACocycle);
        }
        let f = &self.0;
        if f.degree() == 0 {
            return Ok(f.is_zero().then(|| self.clone()));
        }
        let mut g = Cochain::zero(f.module().clone(), f.degree() - 1, f.parity());
        for w in f.weights() {
            let part = f.weight_component(&w);
            let block = build_block(f.module(), table, Complex::Sl2, f.degree() - 1, &w);
            let rhs = part.to_coordinates(&block.codomain)?;
            match solve(&block.matrix, &rhs) {
                Some(x) => {
                    g = g.add(&Cochain::from_coordinates(f.module(), f.degree() - 1, f.parity(), &block.domain, &x))?;
                }
                None => return Ok(None),
            }
        }
        let g = Sl2Cochain(g);
        if sl2_coboundary(&g, table)? != *self {
            return Err(Error::SolveFailed("sl(2) primitive failed substitution".into()));
        }
        Ok(Some(g))
    }
}

pub fn restrict_sl2(f: &Cochain) -> Sl2Cochain {
    let mut out = Cochain::zero(f.module().clone(), f.degree(), f.parity());
    for (u, v) in f.values() {
        if u.is_even_part() {
            out.set(*u, v.clone()).expect("value already validated");
        }
    }
    Sl2Cochain(out)
}

/// The Chevalley–Eilenberg differential of sl(2); all signs are the classical ones.
pub fn sl2_coboundary(h: &Sl2Cochain, table: &StructureTable) -> Result<Sl2Cochain> {
    let f = &h.0;
    let mut out = Cochain::zero(f.module().clone(), f.degree() + 1, f.parity());
    for u in Complex::Sl2.basis(f.degree() + 1) {
        out.set(u, f.coboundary_at(&u.tuple(), table)?)?;
    }
    Ok(Sl2Cochain(out))
}
