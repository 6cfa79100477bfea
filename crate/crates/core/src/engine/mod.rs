//! Cohomology dimensions by brute force and the closed-form predictions
//! they are compared against.
//!
//! Everything is computed at a fixed cochain weight w. Since H acts on
//! cochains of weight w by w, only w = 0 can carry cohomology; the other
//! weights in the window are computed as a structural check.

mod checks;
mod report;

pub use checks::{
    class_representatives, gelfand_fuchs_check, lemma_check, localization_check, restriction_injectivity_check,
    ClassVerdict, GelfandFuchsReport, LemmaReport, LocalizationReport, PairValue, RestrictionReport,
};
pub use report::{compute_report, CohomologyReport, DimEntry, ReportConfig};

use num_traits::Zero;

use crate::algebra::{Generator, StructureTable};
use crate::cochain::{build_block, Complex};
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::module::{action_matrix, image_of, kernel_in_weight, DensityModule};
use crate::rational::{ceil_abs, half, is_natural, q, qi, Rational};

/// `(columns, rank)` of `∂ : C^n_w → C^{n+1}_w` for n = 0..=nmax.
fn block_ranks(module: &DensityModule, table: &StructureTable, complex: Complex, nmax: u32, w: &Rational) -> Vec<(usize, usize)> {
    (0..=nmax)
        .map(|n| {
            let b = build_block(module, table, complex, n, w);
            (b.domain.len(), rank(&b.matrix))
        })
        .collect()
}

/// `dim H^n_w` for n = 0..=nmax.
pub fn h_dims(module: &DensityModule, table: &StructureTable, complex: Complex, nmax: u32, w: &Rational) -> Vec<usize> {
    let ranks = block_ranks(module, table, complex, nmax, w);
    (0..ranks.len())
        .map(|n| {
            let incoming = if n == 0 { 0 } else { ranks[n - 1].1 };
            ranks[n].0 - ranks[n].1 - incoming
        })
        .collect()
}

/// `dim H^n_w` of the full complex.
pub fn h_dim(module: &DensityModule, table: &StructureTable, n: u32, w: &Rational) -> usize {
    h_dims(module, table, Complex::Full, n, w)[n as usize]
}

/// Smallest truncation at which the closed-form predictions apply.
pub fn guarded_kmax(lambda: &Rational, mu: &Rational) -> u32 {
    ceil_abs(&(mu - lambda)) + 1
}

/// The module with K raised to the guard if needed.
pub fn guarded(module: &DensityModule) -> DensityModule {
    let k = guarded_kmax(module.lambda(), module.mu());
    if module.kmax() >= k {
        module.clone()
    } else {
        module.with_kmax(k)
    }
}

fn expand(d0: usize, q: usize, nmax: u32) -> Vec<usize> {
    (0..=nmax as usize)
        .map(|n| match n {
            0 => d0,
            1 => d0 + q,
            2 => q,
            _ => 0,
        })
        .collect()
}

/// Checks that A maps onto every weight space near 0.
pub fn check_a_onto(module: &DensityModule) -> Result<()> {
    for t in -4..=4 {
        let alpha = q(t, 2);
        let src = &alpha - Generator::A.weight();
        let target = module.weight_basis(&alpha).len();
        let r = rank(&action_matrix(module, Generator::A, &src)?);
        if r != target {
            return Err(Error::HypothesisViolated(format!("A is not onto weight {alpha}: rank {r} < {target}")));
        }
    }
    Ok(())
}

/// `{d0, d0+q, q, 0, …}` from d0 = dim (ker A ∩ ker B)^0 and
/// q = dim (ker A)^{-1/2} / B((ker A)^0), on the truncation itself.
pub fn predict_theorem(module: &DensityModule, nmax: u32) -> Result<Vec<usize>> {
    check_a_onto(module)?;
    let zero = Rational::zero();
    let d0 = kernel_in_weight(module, &[Generator::A, Generator::B], &zero)?.dim();
    let ka0 = kernel_in_weight(module, &[Generator::A], &zero)?;
    let ka_half = kernel_in_weight(module, &[Generator::A], &-half())?;
    let image = image_of(module, Generator::B, &ka0, &zero)?;
    let q = ka_half.quotient_dim(&image)?;
    Ok(expand(d0, q, nmax))
}

/// The same shape for sl(2) with X, Y in place of A, B.
pub fn predict_sl2(module: &DensityModule, nmax: u32) -> Result<Vec<usize>> {
    let zero = Rational::zero();
    let d0 = kernel_in_weight(module, &[Generator::X, Generator::Y], &zero)?.dim();
    let kx0 = kernel_in_weight(module, &[Generator::X], &zero)?;
    let kx_one = kernel_in_weight(module, &[Generator::X], &qi(-1))?;
    let image = image_of(module, Generator::Y, &kx0, &zero)?;
    let q = kx_one.quotient_dim(&image)?;
    Ok(expand(d0, q, nmax))
}

/// The case table for the full module D_{λ,μ}: (1,1,0) when λ = μ,
/// (1,2,1) when λ = -k/2 and μ = (k+1)/2 for a natural k, else 0.
pub fn predict_proposition(lambda: &Rational, mu: &Rational, nmax: u32) -> Vec<usize> {
    let k = -lambda * qi(2);
    if lambda == mu {
        expand(1, 0, nmax)
    } else if is_natural(&k) && *mu == (&k + qi(1)) / qi(2) {
        expand(1, 1, nmax)
    } else {
        expand(0, 0, nmax)
    }
}

#[cfg(test)]
mod tests;
