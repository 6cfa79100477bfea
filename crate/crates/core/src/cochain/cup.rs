//! Cup product of 1-cochains by operator composition.

use super::Cochain;
use crate::algebra::{koszul, monomial_basis, Generator, StructureTable};
use crate::error::{Error, Result};
use crate::module::DensityModule;
use crate::rational::qi;
use crate::realization::Operator;

/// Sign rule for `(f ∨ h)(U, V)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CupSign {
    /// `f(U)∘h(V) - (-1)^{UV} f(V)∘h(U)`
    Printed,
    /// As `Printed`, with `h` additionally passing its argument:
    /// `(-1)^{hU} f(U)∘h(V) - (-1)^{UV} (-1)^{hV} f(V)∘h(U)`
    Koszul,
}

impl CupSign {
    pub fn name(self) -> &'static str {
        match self {
            CupSign::Printed => "printed",
            CupSign::Koszul => "koszul",
        }
    }
}

/// `f ∨ h` for `f` valued in D_{λ2,μ} and `h` in D_{λ1,λ2}; the result is
/// valued in D_{λ1,μ}. A composition of orders k and l can reach basis
/// index k + l + 1 through the d-family, which bounds the truncation.
pub fn cup(f: &Cochain, h: &Cochain, sign: CupSign) -> Result<Cochain> {
    if f.degree() != 1 || h.degree() != 1 {
        return Err(Error::TypeMismatch("cup product is defined on 1-cochains".into()));
    }
    if f.module().lambda() != h.module().mu() {
        return Err(Error::TypeMismatch(format!(
            "source weight {} of the left factor differs from target weight {} of the right factor",
            f.module().lambda(),
            h.module().mu()
        )));
    }
    let module = DensityModule::new(
        h.module().lambda().clone(),
        f.module().mu().clone(),
        f.module().kmax() + h.module().kmax() + 1,
    );
    let op = |c: &Cochain, g: Generator| Operator::from_module_vector(&c.evaluate(&[g]).expect("degree 1"));
    let ph = h.parity();
    let mut out = Cochain::zero(module, 2, f.parity() + ph);
    for uv in monomial_basis(2) {
        let t = uv.tuple();
        let (u, v) = (t[0], t[1]);
        let (su, sv) = match sign {
            CupSign::Printed => (1, 1),
            CupSign::Koszul => (koszul(ph, u.parity()), koszul(ph, v.parity())),
        };
        let first = op(f, u).compose(&op(h, v)).scale(&qi(su));
        let second = op(f, v).compose(&op(h, u)).scale(&qi(sv * koszul(u.parity(), v.parity())));
        out.set(uv, first.sub(&second).to_module_vector())?;
    }
    Ok(out)
}

/// The first sign rule under which `f ∨ h` is a cocycle.
pub fn cup_cocycle(f: &Cochain, h: &Cochain, table: &StructureTable) -> Result<(Cochain, CupSign)> {
    for sign in [CupSign::Printed, CupSign::Koszul] {
        let omega = cup(f, h, sign)?;
        if omega.coboundary(table)?.is_zero() {
            return Ok((omega, sign));
        }
    }
    Err(Error::NotACocycle)
}
