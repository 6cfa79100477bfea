//! The module D_{λ,μ} of super differential operators between tensor
//! densities, in the basis
//!
//! ```text
//! a_{m,k} = x^m ∂x^k          b_{m,k} = x^m θ∂θ ∂x^k
//! c_{m,k} = x^m θ ∂x^k        d_{m,k} = x^m ∂θ ∂x^k - x^m θ ∂x^{k+1}
//! ```
//!
//! with a, b even and c, d odd. The action of osp(1|2) is given by a closed
//! table of formulas in `m`, `k`, `λ` and `p = μ - λ`; the operator
//! realization in [`crate::realization`] serves as its independent check.
//! Keeping only `k ≤ K` gives a finite-type submodule.

mod subspace;

pub use subspace::{action_matrix, coordinates, from_coordinates, image_of, kernel_in_weight};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{koszul, Generator, Parity, StructureTable};
use crate::error::{Error, Result};
use crate::rational::{is_natural, parse_rational, q, qi, to_fraction, to_u32, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    pub fn parity(self) -> Parity {
        match self {
            Family::A | Family::B => Parity::Even,
            Family::C | Family::D => Parity::Odd,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'a',
            Family::B => 'b',
            Family::C => 'c',
            Family::D => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.letter() == c)
    }

    /// Offset of the H-weight relative to `k - m - p`.
    fn weight_shift(self) -> Rational {
        match self {
            Family::A | Family::B => Rational::zero(),
            Family::C => q(-1, 2),
            Family::D => q(1, 2),
        }
    }
}

/// A basis vector; ordered by (family, k, m).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisVector {
    pub family: Family,
    pub m: u32,
    pub k: u32,
}

impl BasisVector {
    pub fn new(family: Family, m: u32, k: u32) -> Self {
        Self { family, m, k }
    }

    pub fn a(m: u32, k: u32) -> Self {
        Self::new(Family::A, m, k)
    }

    pub fn b(m: u32, k: u32) -> Self {
        Self::new(Family::B, m, k)
    }

    pub fn c(m: u32, k: u32) -> Self {
        Self::new(Family::C, m, k)
    }

    pub fn d(m: u32, k: u32) -> Self {
        Self::new(Family::D, m, k)
    }

    pub fn parity(&self) -> Parity {
        self.family.parity()
    }

    /// H-eigenvalue for the shift `p = μ - λ`.
    pub fn weight(&self, p: &Rational) -> Rational {
        qi(self.k as i64 - self.m as i64) - p + self.family.weight_shift()
    }
}

impl Ord for BasisVector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.family, self.k, self.m).cmp(&(other.family, other.k, other.m))
    }
}

impl PartialOrd for BasisVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{},{}}}", self.family.letter(), self.m, self.k)
    }
}

/// Finite rational combination of basis vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    terms: BTreeMap<BasisVector, Rational>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(v: BasisVector) -> Self {
        Self::term(Rational::one(), v)
    }

    pub fn term(c: Rational, v: BasisVector) -> Self {
        let mut out = Self::zero();
        out.add_term(c, v);
        out
    }

    pub fn add_term(&mut self, c: Rational, v: BasisVector) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(v).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&v);
        }
    }

    pub fn get(&self, v: &BasisVector) -> Rational {
        self.terms.get(v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisVector, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(v, x)| (*v, x * c)).collect() }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (v, x) in &other.terms {
            self.add_term(x * c, *v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    /// Parity when every term agrees, `None` for zero or mixed vectors.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(BasisVector::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn max_k(&self) -> Option<u32> {
        self.terms.keys().map(|v| v.k).max()
    }

    /// `[["a", m, k, "p/q"], ...]`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(v, c)| {
                    serde_json::json!([v.family.letter().to_string(), v.m, v.k, to_fraction(c)])
                })
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Parse(format!("bad module vector {value}"));
        let mut out = Self::zero();
        for item in value.as_array().ok_or_else(bad)? {
            let arr = item.as_array().filter(|a| a.len() == 4).ok_or_else(bad)?;
            let family = arr[0]
                .as_str()
                .and_then(|s| s.chars().next())
                .and_then(Family::from_letter)
                .ok_or_else(bad)?;
            let m = arr[1].as_u64().ok_or_else(bad)? as u32;
            let k = arr[2].as_u64().ok_or_else(bad)? as u32;
            let c = parse_rational(arr[3].as_str().ok_or_else(bad)?)?;
            out.add_term(c, BasisVector::new(family, m, k));
        }
        Ok(out)
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(v, c)| {
                if c.is_one() {
                    v.to_string()
                } else if *c == -Rational::one() {
                    format!("-{v}")
                } else {
                    format!("{}*{v}", crate::rational::to_compact(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// The truncated module D_{λ,μ} with `k ≤ kmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityModule {
    lambda: Rational,
    mu: Rational,
    kmax: u32,
}

impl DensityModule {
    pub fn new(lambda: Rational, mu: Rational, kmax: u32) -> Self {
        Self { lambda, mu, kmax }
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn kmax(&self) -> u32 {
        self.kmax
    }

    /// `p = μ - λ`.
    pub fn shift(&self) -> Rational {
        &self.mu - &self.lambda
    }

    pub fn with_kmax(&self, kmax: u32) -> Self {
        Self { kmax, ..self.clone() }
    }

    fn check(&self, v: &BasisVector) -> Result<()> {
        if v.k > self.kmax {
            return Err(Error::TruncationViolation { vector: *v, kmax: self.kmax });
        }
        Ok(())
    }

    /// The action of a generator on a basis vector.
    pub fn act(&self, g: Generator, v: &BasisVector) -> Result<ModuleVector> {
        self.check(v)?;
        Ok(action(g, v, &self.lambda, &self.shift()))
    }

    pub fn act_vec(&self, g: Generator, w: &ModuleVector) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (v, c) in w.iter() {
            out.add_scaled(&self.act(g, v)?, c);
        }
        Ok(out)
    }

    /// `u(v w) - (-1)^{uv} v(u w) - [u,v] w`, zero exactly when the action
    /// respects the bracket of `table` on this triple.
    pub fn action_compat_defect(
        &self,
        table: &StructureTable,
        u: Generator,
        v: Generator,
        w: &BasisVector,
    ) -> Result<ModuleVector> {
        let wv = ModuleVector::basis(*w);
        let uvw = self.act_vec(u, &self.act_vec(v, &wv)?)?;
        let vuw = self.act_vec(v, &self.act_vec(u, &wv)?)?;
        let mut out = uvw;
        out.add_scaled(&vuw, &-qi(koszul(u.parity(), v.parity())));
        for (g, c) in table.bracket(u, v).terms() {
            out.add_scaled(&self.act(g, w)?, &-c);
        }
        Ok(out)
    }

    /// Checks every generator pair on every basis vector with `m ≤ mmax`.
    pub fn satisfies_module_axiom(&self, table: &StructureTable, mmax: u32) -> Result<bool> {
        for v in self.basis_upto(mmax) {
            for a in Generator::ALL {
                for b in Generator::ALL {
                    if !self.action_compat_defect(table, a, b, &v)?.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// All basis vectors with `m ≤ mmax`, `k ≤ kmax`.
    pub fn basis_upto(&self, mmax: u32) -> Vec<BasisVector> {
        let mut out = Vec::new();
        for f in Family::ALL {
            for k in 0..=self.kmax {
                for m in 0..=mmax {
                    out.push(BasisVector::new(f, m, k));
                }
            }
        }
        out
    }

    /// Basis of the weight-α subspace of the truncation, ordered by (family, k, m).
    pub fn weight_basis(&self, alpha: &Rational) -> Vec<BasisVector> {
        let p = self.shift();
        let mut out = Vec::new();
        for f in Family::ALL {
            for k in 0..=self.kmax {
                let m = qi(k as i64) - &p - alpha + f.weight_shift();
                if is_natural(&m) {
                    out.push(BasisVector::new(f, to_u32(&m).expect("natural"), k));
                }
            }
        }
        out
    }
}

fn push(out: &mut ModuleVector, c: Rational, f: Family, m: i64, k: i64) {
    if c.is_zero() {
        return;
    }
    assert!(m >= 0 && k >= 0, "action produced {f:?}_{{{m},{k}}} with nonzero coefficient");
    out.add_term(c, BasisVector::new(f, m as u32, k as u32));
}

/// The closed-form action table.
fn action(g: Generator, v: &BasisVector, lambda: &Rational, p: &Rational) -> ModuleVector {
    use Family::*;
    let (m, k) = (v.m as i64, v.k as i64);
    let (mq, kq) = (qi(m), qi(k));
    let two_l = lambda * qi(2);
    let two_p = p * qi(2);
    let mut out = ModuleVector::zero();
    match g {
        Generator::H => {
            let c = v.weight(p);
            push(&mut out, c, v.family, m, k);
        }
        Generator::X => push(&mut out, mq, v.family, m - 1, k),
        Generator::A => match v.family {
            A => push(&mut out, mq, C, m - 1, k),
            B => push(&mut out, qi(1), D, m, k),
            C => push(&mut out, qi(1), A, m, k),
            D => push(&mut out, mq, B, m - 1, k),
        },
        Generator::B => {
            let base = &mq - qi(2 * k) + &two_p;
            match v.family {
                A => {
                    push(&mut out, base, C, m, k);
                    push(&mut out, -&kq, D, m, k - 1);
                }
                B => {
                    push(&mut out, qi(1), D, m + 1, k);
                    push(&mut out, -(&two_l + &kq), C, m, k);
                }
                C => {
                    push(&mut out, qi(1), A, m + 1, k);
                    push(&mut out, kq, B, m, k - 1);
                }
                D => {
                    push(&mut out, base - qi(1), B, m, k);
                    push(&mut out, &two_l + &kq, A, m, k);
                }
            }
        }
        Generator::Y => {
            let base = qi(2 * k - m) - &two_p;
            let lk = &two_l + &kq;
            match v.family {
                A => {
                    push(&mut out, base, A, m + 1, k);
                    push(&mut out, &kq * (&lk - qi(1)), A, m, k - 1);
                    push(&mut out, kq, B, m, k - 1);
                }
                B => {
                    push(&mut out, base, B, m + 1, k);
                    push(&mut out, &kq * &lk, B, m, k - 1);
                }
                C => {
                    push(&mut out, base - qi(1), C, m + 1, k);
                    push(&mut out, &kq * (&lk - qi(1)), C, m, k - 1);
                }
                D => {
                    push(&mut out, base + qi(1), D, m + 1, k);
                    push(&mut out, &kq * &lk, D, m, k - 1);
                    push(&mut out, -&lk, C, m, k);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::audit_and_repair;

    fn repaired() -> StructureTable {
        audit_and_repair(&StructureTable::printed()).unwrap().0
    }

    #[test]
    fn weight_zero_at_p_zero() {
        let m = DensityModule::new(qi(0), qi(0), 2);
        let wb = m.weight_basis(&qi(0));
        assert_eq!(
            wb,
            vec![
                BasisVector::a(0, 0),
                BasisVector::a(1, 1),
                BasisVector::a(2, 2),
                BasisVector::b(0, 0),
                BasisVector::b(1, 1),
                BasisVector::b(2, 2),
            ]
        );
        assert!(m.weight_basis(&q(1, 3)).is_empty());
    }

    #[test]
    fn truncation_is_enforced() {
        let m = DensityModule::new(qi(0), qi(0), 1);
        assert!(matches!(
            m.act(Generator::A, &BasisVector::a(0, 2)),
            Err(Error::TruncationViolation { .. })
        ));
    }

    #[test]
    fn a_maps_c_to_a() {
        let m = DensityModule::new(q(1, 3), q(2, 5), 3);
        let r = m.act(Generator::A, &BasisVector::c(2, 1)).unwrap();
        assert_eq!(r, ModuleVector::basis(BasisVector::a(2, 1)));
    }

    #[test]
    fn module_axiom_with_repaired_table() {
        let t = repaired();
        for (l, mu) in [(qi(0), qi(0)), (q(2, 3), q(-1, 5)), (q(-1, 2), qi(1))] {
            let m = DensityModule::new(l, mu, 3);
            assert!(m.satisfies_module_axiom(&t, 3).unwrap());
        }
    }

    #[test]
    fn printed_table_breaks_module_axiom() {
        let m = DensityModule::new(qi(0), qi(0), 1);
        let d = m
            .action_compat_defect(&StructureTable::printed(), Generator::A, Generator::B, &BasisVector::c(0, 0))
            .unwrap();
        assert_eq!(d, ModuleVector::term(qi(2), BasisVector::c(0, 0)));
    }

    #[test]
    fn vector_json_round_trip() {
        let mut v = ModuleVector::basis(BasisVector::d(1, 2));
        v.add_term(q(-3, 4), BasisVector::a(0, 0));
        let back = ModuleVector::from_json(&v.to_json()).unwrap();
        assert_eq!(back, v);
        assert_eq!(v.to_json().to_string(), r#"[["a",0,0,"-3/4"],["d",1,2,"1/1"]]"#);
    }
}
