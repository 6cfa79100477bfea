//! Super differential operators on the line R^{1|1} with coordinates (x, θ),
//! the vector fields X_G that realize osp(1|2), and the induced action on
//! operators between densities. This is the reference implementation the
//! closed-form module table is checked against.

mod notation;

pub use notation::{parse_operator, format_operator};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::algebra::{koszul, AlgElem, Generator, Parity, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::{solve, SparseMatrix, SparseVec};
use crate::module::{BasisVector, Family, ModuleVector};
use crate::rational::{q, qi, Rational};

/// `x^m θ^e1 ∂θ^e2 ∂x^k`, always written in this normal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpMonomial {
    pub m: u32,
    pub e1: u8,
    pub e2: u8,
    pub k: u32,
}

impl OpMonomial {
    pub fn new(m: u32, e1: u8, e2: u8, k: u32) -> Self {
        debug_assert!(e1 <= 1 && e2 <= 1);
        Self { m, e1, e2, k }
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit((self.e1 + self.e2) as u32)
    }
}

fn falling(n: u32, j: u32) -> Rational {
    let mut r = Rational::one();
    for i in 0..j {
        if n < i {
            return Rational::zero();
        }
        r *= qi((n - i) as i64);
    }
    r
}

fn binomial(n: u32, j: u32) -> Rational {
    falling(n, j) / falling(j, j)
}

/// Odd part of a product: `θ^a ∂θ^b · θ^c ∂θ^d` as a combination of `θ^e ∂θ^f`.
fn clifford(a: u8, b: u8, c: u8, d: u8) -> Vec<(i64, u8, u8)> {
    match (b, c) {
        (0, _) => {
            if a == 1 && c == 1 {
                vec![]
            } else {
                vec![(1, a + c, d)]
            }
        }
        (1, 0) => {
            if d == 1 {
                vec![]
            } else {
                vec![(1, a, 1)]
            }
        }
        _ => {
            // ∂θ θ = 1 - θ ∂θ
            let mut out = vec![(1, a, d)];
            if a == 0 && d == 0 {
                out.push((-1, 1, 1));
            }
            out
        }
    }
}

/// A finite combination of operator monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Operator {
    terms: BTreeMap<OpMonomial, Rational>,
}

impl Operator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::monomial(OpMonomial::new(0, 0, 0, 0))
    }

    pub fn monomial(m: OpMonomial) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn term(c: Rational, m: OpMonomial) -> Self {
        let mut out = Self::zero();
        out.add_term(c, m);
        out
    }

    /// Multiplication by `x^j θ^e`.
    pub fn mult(j: u32, e: u8) -> Self {
        Self::monomial(OpMonomial::new(j, e, 0, 0))
    }

    pub fn dx() -> Self {
        Self::monomial(OpMonomial::new(0, 0, 0, 1))
    }

    pub fn dtheta() -> Self {
        Self::monomial(OpMonomial::new(0, 0, 1, 0))
    }

    pub fn add_term(&mut self, c: Rational, m: OpMonomial) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OpMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(x * c, *m);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, x) in &other.terms {
            out.add_term(x.clone(), *m);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Parity when homogeneous; the zero operator counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(OpMonomial::parity);
        match it.next() {
            None => Some(Parity::Even),
            Some(p) => it.all(|r| r == p).then_some(p),
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (l, a) in &self.terms {
            for (r, b) in &other.terms {
                let ab = a * b;
                for (s, e, f) in clifford(l.e1, l.e2, r.e1, r.e2) {
                    // ∂x^k x^m' = Σ_j C(k,j) m'^(j) x^{m'-j} ∂x^{k-j}
                    for j in 0..=l.k.min(r.m) {
                        let c = &ab * qi(s) * binomial(l.k, j) * falling(r.m, j);
                        out.add_term(c, OpMonomial::new(l.m + r.m - j, e, f, l.k - j + r.k));
                    }
                }
            }
        }
        out
    }

    /// `PQ - (-1)^{|P||Q|} QP` for homogeneous operands.
    pub fn supercommutator(&self, other: &Self) -> Self {
        let s = koszul(
            self.parity().expect("homogeneous operator"),
            other.parity().expect("homogeneous operator"),
        );
        self.compose(other).sub(&other.compose(self).scale(&qi(s)))
    }

    pub fn apply(&self, f: &SuperFunction) -> SuperFunction {
        let mut out = SuperFunction::zero();
        for (op, c) in &self.terms {
            for (&(j, e), a) in &f.terms {
                if j < op.k {
                    continue;
                }
                let coeff = c * a * falling(j, op.k);
                let mut e = e;
                if op.e2 == 1 {
                    if e == 0 {
                        continue;
                    }
                    e = 0;
                }
                if op.e1 == 1 {
                    if e == 1 {
                        continue;
                    }
                    e = 1;
                }
                out.add_term(coeff, j - op.k + op.m, e);
            }
        }
        out
    }

    pub fn max_order(&self) -> u32 {
        self.terms.keys().map(|m| m.k).max().unwrap_or(0)
    }

    /// Expands in the a/b/c/d basis.
    pub fn to_module_vector(&self) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (op, c) in &self.terms {
            let (m, k) = (op.m, op.k);
            match (op.e1, op.e2) {
                (0, 0) => out.add_term(c.clone(), BasisVector::a(m, k)),
                (1, 1) => out.add_term(c.clone(), BasisVector::b(m, k)),
                (1, 0) => out.add_term(c.clone(), BasisVector::c(m, k)),
                _ => {
                    // x^m ∂θ ∂x^k = d_{m,k} + c_{m,k+1}
                    out.add_term(c.clone(), BasisVector::d(m, k));
                    out.add_term(c.clone(), BasisVector::c(m, k + 1));
                }
            }
        }
        out
    }

    pub fn from_module_vector(v: &ModuleVector) -> Self {
        let mut out = Self::zero();
        for (b, c) in v.iter() {
            out = out.add(&basis_operator(b).scale(c));
        }
        out
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_operator(self))
    }
}

pub fn basis_operator(v: &BasisVector) -> Operator {
    let (m, k) = (v.m, v.k);
    match v.family {
        Family::A => Operator::monomial(OpMonomial::new(m, 0, 0, k)),
        Family::B => Operator::monomial(OpMonomial::new(m, 1, 1, k)),
        Family::C => Operator::monomial(OpMonomial::new(m, 1, 0, k)),
        Family::D => Operator::monomial(OpMonomial::new(m, 0, 1, k))
            .sub(&Operator::monomial(OpMonomial::new(m, 1, 0, k + 1))),
    }
}

/// `Σ c x^j θ^e`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperFunction {
    terms: BTreeMap<(u32, u8), Rational>,
}

impl SuperFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(j: u32, e: u8) -> Self {
        let mut f = Self::zero();
        f.add_term(Rational::one(), j, e);
        f
    }

    pub fn add_term(&mut self, c: Rational, j: u32, e: u8) {
        if c.is_zero() {
            return;
        }
        let x = self.terms.entry((j, e)).or_insert_with(Rational::zero);
        *x += c;
        if x.is_zero() {
            self.terms.remove(&(j, e));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u8), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(j, e), x) in &self.terms {
            out.add_term(x * c, j, e);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(j, e), x) in &other.terms {
            out.add_term(x.clone(), j, e);
        }
        out
    }

    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|&(_, e)| Parity::from_bit(e as u32));
        match it.next() {
            None => Some(Parity::Even),
            Some(p) => it.all(|r| r == p).then_some(p),
        }
    }

    /// Multiplication operator.
    pub fn as_operator(&self) -> Operator {
        let mut out = Operator::zero();
        for (&(j, e), c) in &self.terms {
            out.add_term(c.clone(), OpMonomial::new(j, e, 0, 0));
        }
        out
    }

    pub fn derivative(&self) -> Self {
        Operator::dx().apply(self)
    }

    /// `η(G) = ∂θ G + θ ∂x G`.
    pub fn eta(&self) -> Self {
        eta().apply(self)
    }
}

/// `η = ∂θ + θ∂x`.
pub fn eta() -> Operator {
    Operator::dtheta().add(&Operator::monomial(OpMonomial::new(0, 1, 0, 1)))
}

/// `η̄ = ∂θ - θ∂x`.
pub fn eta_bar() -> Operator {
    Operator::dtheta().sub(&Operator::monomial(OpMonomial::new(0, 1, 0, 1)))
}

/// `X_G = G ∂x + ½ η(G) η̄`.
pub fn vector_field(g: &SuperFunction) -> Operator {
    g.as_operator()
        .compose(&Operator::dx())
        .add(&g.eta().as_operator().compose(&eta_bar()).scale(&q(1, 2)))
}

/// `X_G + ν G'`: the action on ν-densities.
pub fn density_action(g: &SuperFunction, nu: &Rational) -> Operator {
    vector_field(g).add(&g.derivative().as_operator().scale(nu))
}

/// Contact bracket `{F,G} = F G' - F' G + ½ η(F) η̄(G)`; `[X_F, X_G] = X_{F,G}`.
pub fn contact_bracket(f: &SuperFunction, g: &SuperFunction) -> SuperFunction {
    let prod = |a: &SuperFunction, b: &SuperFunction| a.as_operator().apply(b);
    prod(f, &g.derivative())
        .add(&prod(&f.derivative(), g).scale(&-Rational::one()))
        .add(&prod(&f.eta(), &eta_bar().apply(g)).scale(&q(1, 2)))
}

/// The function whose vector field is (a multiple of) a generator.
pub fn generator_symbol(g: Generator) -> SuperFunction {
    match g {
        Generator::X => SuperFunction::monomial(0, 0),
        Generator::H => SuperFunction::monomial(1, 0),
        Generator::Y => SuperFunction::monomial(2, 0),
        Generator::A => SuperFunction::monomial(0, 1),
        Generator::B => SuperFunction::monomial(1, 1),
    }
}

/// Scalars `c_g` such that `g ↦ c_g X_{symbol(g)}` respects a bracket table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    constants: [Rational; 5],
}

impl Realization {
    pub fn constant(&self, g: Generator) -> &Rational {
        &self.constants[g.index()]
    }

    pub fn constants(&self) -> &[Rational; 5] {
        &self.constants
    }

    pub fn operator(&self, g: Generator, nu: &Rational) -> Operator {
        density_action(&generator_symbol(g), nu).scale(self.constant(g))
    }

    /// `g·T = L^μ_g ∘ T - (-1)^{|g||T|} T ∘ L^λ_g`.
    pub fn act(&self, g: Generator, t: &Operator, lambda: &Rational, mu: &Rational) -> Operator {
        let pt = t.parity().expect("homogeneous operator");
        let left = self.operator(g, mu).compose(t);
        let right = t.compose(&self.operator(g, lambda));
        left.sub(&right.scale(&qi(koszul(g.parity(), pt))))
    }

    pub fn act_on_basis(&self, g: Generator, v: &BasisVector, lambda: &Rational, mu: &Rational) -> ModuleVector {
        self.act(g, &basis_operator(v), lambda, mu).to_module_vector()
    }
}

/// Candidate values for each constant, tried in this order.
fn constant_values() -> Vec<Rational> {
    vec![qi(1), qi(-1), qi(2), qi(-2), q(1, 2), q(-1, 2), qi(4), qi(-4), q(1, 4), q(-1, 4)]
}

/// Unscaled structure constants of the vector fields: `[X_u, X_v] = Σ s X_w`,
/// read off by solving against the five fields.
fn field_brackets() -> [[AlgElem; 5]; 5] {
    let fields: Vec<Operator> = Generator::ALL.iter().map(|&g| vector_field(&generator_symbol(g))).collect();
    let mut index: BTreeMap<OpMonomial, usize> = BTreeMap::new();
    let mut flatten = |op: &Operator| -> SparseVec {
        let pairs: Vec<(usize, Rational)> = op
            .iter()
            .map(|(m, c)| {
                let n = index.len();
                (*index.entry(*m).or_insert(n), c.clone())
            })
            .collect();
        SparseVec::from_pairs(pairs)
    };
    let cols: Vec<SparseVec> = fields.iter().map(&mut flatten).collect();
    let mut rhs = Vec::new();
    for u in 0..5 {
        for v in 0..5 {
            rhs.push(flatten(&fields[u].supercommutator(&fields[v])));
        }
    }
    let a = SparseMatrix::from_columns(index.len(), cols);
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let x = solve(&a, &rhs[i * 5 + j]).expect("fields close under the bracket");
            let mut e = AlgElem::zero();
            for (w, c) in x.iter() {
                e = e.add(&AlgElem::term(c.clone(), Generator::from_index(w)));
            }
            e
        })
    })
}

/// Finds the first constant assignment (search order X, H, Y, A, B) under
/// which the realization satisfies `table`.
pub fn solve_constants(table: &StructureTable) -> Result<Realization> {
    let s = field_brackets();
    let order = [Generator::X, Generator::H, Generator::Y, Generator::A, Generator::B];
    let values = constant_values();
    // [c_u X_u, c_v X_v] = c_u c_v Σ s_w X_w must equal Σ t_w c_w X_w
    let consistent = |c: &[Option<Rational>; 5]| -> bool {
        for u in Generator::ALL {
            for v in Generator::ALL {
                let (Some(cu), Some(cv)) = (&c[u.index()], &c[v.index()]) else { continue };
                let t = table.bracket(u, v);
                for w in Generator::ALL {
                    let Some(cw) = &c[w.index()] else { continue };
                    let lhs = cu * cv * s[u.index()][v.index()].coeff(w);
                    if lhs != t.coeff(w) * cw {
                        return false;
                    }
                }
            }
        }
        true
    };
    fn search(
        depth: usize,
        order: &[Generator; 5],
        values: &[Rational],
        c: &mut [Option<Rational>; 5],
        ok: &dyn Fn(&[Option<Rational>; 5]) -> bool,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        for val in values {
            c[order[depth].index()] = Some(val.clone());
            if ok(c) && search(depth + 1, order, values, c, ok) {
                return true;
            }
        }
        c[order[depth].index()] = None;
        false
    }
    let mut c: [Option<Rational>; 5] = Default::default();
    if !search(0, &order, &values, &mut c, &consistent) {
        return Err(Error::SolveFailed("no realization constants for this table".into()));
    }
    Ok(Realization { constants: c.map(|x| x.expect("assigned")) })
}

/// Realization of the adopted table, computed once.
pub fn realization() -> &'static Realization {
    static R: OnceLock<Realization> = OnceLock::new();
    R.get_or_init(|| solve_constants(crate::algebra::repaired_table()).expect("adopted table is realizable"))
}

#[cfg(test)]
mod tests;
