//! Structural checks beyond dimension counting: nontrivial classes and
//! their restriction to sl(2), the cup product against Gelfand–Fuchs,
//! the kernel inclusion used for injectivity, and localization.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{canonicalize, Generator, StructureTable};
use crate::cochain::{
    build_block, cochain_basis, cup_cocycle, make_f_k, make_h_lambda, restrict_sl2, Cochain, Complex,
};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Echelon, SparseMatrix, SparseVec, Subspace};
use crate::module::{action_matrix, image_of, kernel_in_weight, DensityModule, ModuleVector};
use crate::rational::{half, q, qi, to_fraction, Rational};
use crate::realization::{parse_operator, SuperFunction};

/// Cocycles whose classes form a basis of `H^n_w`, chosen greedily in
/// kernel-basis order.
pub fn class_representatives(
    module: &DensityModule,
    table: &StructureTable,
    complex: Complex,
    n: u32,
    w: &Rational,
) -> Vec<Cochain> {
    let block = build_block(module, table, complex, n, w);
    let mut ech = Echelon::new(block.domain.len());
    if n > 0 {
        let prev = build_block(module, table, complex, n - 1, w);
        for c in prev.matrix.columns() {
            ech.insert(c);
        }
    }
    kernel_basis(&block.matrix)
        .into_iter()
        .filter(|z| ech.insert(z))
        .map(|z| Cochain::from_coordinates(module, n, block.parity, &block.domain, &z))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassVerdict {
    pub degree: u32,
    pub index: usize,
    /// The restriction is independent of the sl(2) coboundaries and of the
    /// restrictions of the classes listed before it.
    pub restricts_nontrivially: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub classes: Vec<ClassVerdict>,
    pub injective: bool,
}

/// Whether restriction to sl(2) is injective on weight-0 cohomology in
/// degrees 0..=nmax.
pub fn restriction_injectivity_check(module: &DensityModule, table: &StructureTable, nmax: u32) -> Result<RestrictionReport> {
    let zero = Rational::zero();
    let mut classes = Vec::new();
    for n in 0..=nmax {
        let basis = cochain_basis(module, Complex::Sl2, n, &zero);
        let mut ech = Echelon::new(basis.len());
        if n > 0 {
            for c in build_block(module, table, Complex::Sl2, n - 1, &zero).matrix.columns() {
                ech.insert(c);
            }
        }
        for (index, z) in class_representatives(module, table, Complex::Full, n, &zero).iter().enumerate() {
            let r = restrict_sl2(z).as_cochain().to_coordinates(&basis)?;
            classes.push(ClassVerdict { degree: n, index, restricts_nontrivially: ech.insert(&r) });
        }
    }
    let injective = classes.iter().all(|c| c.restricts_nontrivially);
    Ok(RestrictionReport { classes, injective })
}

#[derive(Clone, Debug, Serialize)]
pub struct PairValue {
    pub pair: String,
    pub omega: i64,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GelfandFuchsReport {
    pub k: u32,
    pub cup_sign: String,
    #[serde(with = "crate::rational::serde_fraction")]
    pub constant: Rational,
    #[serde(with = "crate::rational::serde_fraction")]
    pub ratio_to_printed: Rational,
    pub pairs: Vec<PairValue>,
    pub is_coboundary: bool,
    pub sl2_restriction_is_coboundary: bool,
}

/// `k∂θ∂x^{k-1} - (k+1)θ∂x^k` in the module basis.
fn gf_shape(k: u32) -> Result<ModuleVector> {
    let dx = |e: u32| match e {
        0 => String::new(),
        1 => "∂x".to_string(),
        _ => format!("∂x^{e}"),
    };
    let text = if k == 0 { "-θ".to_string() } else { format!("{k}∂θ{} - {}θ{}", dx(k - 1), k + 1, dx(k)) };
    Ok(parse_operator(&text)?.to_module_vector())
}

/// `ω(f, g) = f′g″ - g′f″` for polynomials in x; constant for x^a with a ≤ 2.
fn omega(f: &SuperFunction, g: &SuperFunction) -> i64 {
    let prod = |a: &SuperFunction, b: &SuperFunction| a.as_operator().apply(b);
    let (f1, g1) = (f.derivative(), g.derivative());
    let w = prod(&f1, &g1.derivative()).add(&prod(&g1, &f1.derivative()).scale(&qi(-1)));
    let c = w.iter().find(|((j, _), _)| *j == 0).map(|(_, c)| c.clone()).unwrap_or_default();
    assert_eq!(w, SuperFunction::monomial(0, 0).scale(&c), "ω is constant on quadratic polynomials");
    c.to_integer().try_into().expect("small")
}

/// Ω_k = f_k ∨ h_{-k/2} on pairs of sl(2) generators, against one constant
/// multiple of ω(f, g)·(k∂θ∂x^{k-1} - (k+1)θ∂x^k), under X_1 = X,
/// X_x = -H, X_{x²} = -Y.
pub fn gelfand_fuchs_check(k: u32, table: &StructureTable) -> Result<GelfandFuchsReport> {
    let f = make_f_k(k)?.cochain;
    let h = make_h_lambda(&q(-(k as i64), 2))?.cochain;
    let (big_omega, sign) = cup_cocycle(&f, &h, table)?;
    let fields = [("1", Generator::X, 1i64), ("x", Generator::H, -1), ("x^2", Generator::Y, -1)];
    let shape = gf_shape(k)?;
    let (lead, lead_c) = shape.iter().next().map(|(b, c)| (*b, c.clone())).expect("nonzero shape");
    let mut constant: Option<Rational> = None;
    let mut values = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let (fi, gi, si) = fields[i];
            let (fj, gj, sj) = fields[j];
            let w = omega(&SuperFunction::monomial(i as u32, 0), &SuperFunction::monomial(j as u32, 0));
            let value = big_omega.evaluate(&[gi, gj])?.scale(&qi(si * sj));
            if w != 0 {
                let c = value.get(&lead) / (&lead_c * qi(w));
                if constant.as_ref().is_some_and(|c0| *c0 != c) {
                    return Err(Error::NotProportional(k));
                }
                constant = Some(c);
            }
            values.push((format!("{fi},{fj}"), w, value));
        }
    }
    let constant = constant.unwrap_or_default();
    let mut pairs = Vec::new();
    for (pair, w, value) in values {
        if value != shape.scale(&(&constant * qi(w))) {
            return Err(Error::NotProportional(k));
        }
        pairs.push(PairValue { pair, omega: w, value: value.to_string() });
    }
    let printed = qi(if k.is_multiple_of(2) { -1 } else { 1 });
    let is_coboundary = big_omega.is_coboundary(table)?.is_some();
    let sl2_restriction_is_coboundary = restrict_sl2(&big_omega).is_coboundary(table)?.is_some();
    Ok(GelfandFuchsReport {
        k,
        cup_sign: sign.name().to_string(),
        ratio_to_printed: &constant / &printed,
        constant,
        pairs,
        is_coboundary,
        sl2_restriction_is_coboundary,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub preimage_dim: usize,
    pub image_dim: usize,
    pub holds: bool,
}

/// Every v in (ker A)^{-1/2} with Bv ∈ Y((ker X)^0) lies in B((ker A)^0).
pub fn lemma_check(module: &DensityModule) -> Result<LemmaReport> {
    let zero = Rational::zero();
    let ka_half = kernel_in_weight(module, &[Generator::A], &-half())?;
    let ka0 = kernel_in_weight(module, &[Generator::A], &zero)?;
    let kx0 = kernel_in_weight(module, &[Generator::X], &zero)?;
    let b = action_matrix(module, Generator::B, &-half())?;
    let target = image_of(module, Generator::Y, &kx0, &zero)?;
    let mut cols: Vec<SparseVec> = ka_half.basis().iter().map(|s| b.mul_vec(s)).collect();
    cols.extend(target.basis().iter().cloned());
    let m = SparseMatrix::from_columns(b.nrows(), cols);
    let preimage: Vec<SparseVec> = kernel_basis(&m)
        .iter()
        .map(|c| {
            ka_half
                .basis()
                .iter()
                .enumerate()
                .fold(SparseVec::new(), |acc, (i, s)| acc.add_scaled(s, &c.get(i)))
        })
        .collect();
    let preimage = Subspace::span(ka_half.ambient(), &preimage);
    let image = image_of(module, Generator::B, &ka0, &zero)?;
    let holds = image.contains(&preimage)?;
    Ok(LemmaReport { preimage_dim: preimage.dim(), image_dim: image.dim(), holds })
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalizationReport {
    pub degree: u32,
    /// `(w, dim)` of reduced cocycles vanishing on B^n, per weight.
    pub kernels: Vec<(String, usize)>,
    pub injective: bool,
}

/// A reduced n-cocycle is determined by its value on B^n: the reduced
/// cocycles vanishing there are 0, checked weight by weight.
pub fn localization_check(module: &DensityModule, table: &StructureTable, n: u32, weights: &[Rational]) -> LocalizationReport {
    let bn = canonicalize(&vec![Generator::B; n as usize]).0.expect("odd powers are allowed");
    let kernels: Vec<(String, usize)> = weights
        .iter()
        .map(|w| {
            let block = build_block(module, table, Complex::Full, n, w);
            let keep: Vec<usize> = block
                .domain
                .iter()
                .enumerate()
                .filter(|(_, (u, _))| u.mult_a() == 0 && *u != bn)
                .map(|(i, _)| i)
                .collect();
            (to_fraction(w), kernel_basis(&block.matrix.select_columns(&keep)).len())
        })
        .collect();
    let injective = kernels.iter().all(|(_, d)| *d == 0);
    LocalizationReport { degree: n, kernels, injective }
}
