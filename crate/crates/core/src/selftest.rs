//! Invariant suites runnable from an installed binary.

use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{audit_and_repair, canonicalize, koszul, repaired_table, Generator, StructureTable};
use crate::cochain::{build_block, restrict_sl2, sl2_coboundary, Cochain, Complex};
use crate::engine::localization_check;
use crate::error::{Error, Result};
use crate::module::{BasisVector, DensityModule, Family, ModuleVector};
use crate::rational::{q, qi, Rational};
use crate::realization::{contact_bracket, generator_symbol, realization, vector_field};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Module,
    Complex,
    Oracle,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "algebra" => Suite::Algebra,
            "module" => Suite::Module,
            "complex" => Suite::Complex,
            "oracle" => Suite::Oracle,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite '{s}'"))),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// The (λ, μ) grid used by the module and oracle suites.
pub fn parameter_grid() -> Vec<(Rational, Rational)> {
    vec![
        (qi(0), qi(0)),
        (qi(1), qi(1)),
        (qi(0), q(1, 2)),
        (q(-1, 2), qi(1)),
        (qi(-1), q(3, 2)),
        (q(1, 3), qi(0)),
    ]
}

fn check(suite: &'static str, name: &'static str, run: impl FnOnce() -> Result<Option<String>>) -> Check {
    match run() {
        Ok(None) => Check { suite, name, passed: true, detail: String::new() },
        Ok(Some(detail)) => Check { suite, name, passed: false, detail },
        Err(e) => Check { suite, name, passed: false, detail: e.to_string() },
    }
}

fn algebra_checks() -> Vec<Check> {
    let s = "algebra";
    vec![
        check(s, "printed table fails Jacobi at (A,A,B)", || {
            let t = StructureTable::printed();
            Ok((t.jacobi_defect(Generator::A, Generator::A, Generator::B).is_zero()).then(|| "defect vanishes".into()))
        }),
        check(s, "audit adopts a Jacobi-consistent table", || {
            audit_and_repair(&StructureTable::printed()).map(|(t, r)| {
                (!t.satisfies_jacobi() || r.changes.is_empty()).then(|| format!("variant {}", r.variant))
            })
        }),
        check(s, "adopted table is graded antisymmetric and weight additive", || {
            let t = repaired_table();
            Ok((!t.is_graded_antisymmetric() || !t.is_weight_additive()).then(|| t.label().to_string()))
        }),
        check(s, "adjacent swaps cost -(-1)^{uv}", || {
            let mut bad = None;
            for a in Generator::ALL {
                for b in Generator::ALL {
                    for c in Generator::ALL {
                        let (m0, s0) = canonicalize(&[a, b, c]);
                        let (m1, s1) = canonicalize(&[b, a, c]);
                        if m0 != m1 || (m0.is_some() && s1 != -koszul(a.parity(), b.parity()) * s0) {
                            bad = Some(format!("({a:?},{b:?},{c:?})"));
                        }
                    }
                }
            }
            Ok(bad)
        }),
    ]
}

fn module_checks() -> Vec<Check> {
    let s = "module";
    let table = repaired_table();
    vec![
        check(s, "module axiom on all generator pairs, m,k ≤ 4", || {
            let mut bad = None;
            for (l, m) in parameter_grid() {
                if !DensityModule::new(l.clone(), m.clone(), 4).satisfies_module_axiom(table, 4)? {
                    bad = Some(format!("λ={l} μ={m}"));
                }
            }
            Ok(bad)
        }),
        check(s, "H acts diagonally by the weight", || {
            let mut bad = None;
            for (l, m) in parameter_grid() {
                let md = DensityModule::new(l, m, 4);
                for v in md.basis_upto(4) {
                    if md.act(Generator::H, &v)? != ModuleVector::term(v.weight(&md.shift()), v) {
                        bad = Some(v.to_string());
                    }
                }
            }
            Ok(bad)
        }),
        check(s, "A is onto near weight 0", || {
            let mut bad = None;
            for (l, m) in parameter_grid() {
                if let Err(e) = crate::engine::check_a_onto(&DensityModule::new(l, m, 3)) {
                    bad = Some(e.to_string());
                }
            }
            Ok(bad)
        }),
    ]
}

fn complex_checks() -> Vec<Check> {
    let s = "complex";
    let table = repaired_table();
    let module = DensityModule::new(q(2, 3), q(-1, 5), 3);
    vec![
        check(s, "∂∂ = 0 on every block, n ≤ 3, |w| ≤ 3", || {
            let mut bad = None;
            for n in 0..=3 {
                for t in -6..=6 {
                    let w = q(t, 2);
                    let lo = build_block(&module, table, Complex::Full, n, &w);
                    let hi = build_block(&module, table, Complex::Full, n + 1, &w);
                    if !hi.matrix.mul(&lo.matrix).is_zero() {
                        bad = Some(format!("n={n} w={w}"));
                    }
                }
            }
            Ok(bad)
        }),
        check(s, "restriction to sl(2) commutes with ∂", || {
            let mut bad = None;
            for u in crate::algebra::monomial_basis(1) {
                for fam in Family::ALL {
                    let v = BasisVector::new(fam, 1, 1);
                    let mut f = Cochain::zero(module.clone(), 1, u.parity() + v.parity());
                    f.set(u, ModuleVector::basis(v))?;
                    if restrict_sl2(&f.coboundary(table)?) != sl2_coboundary(&restrict_sl2(&f), table)? {
                        bad = Some(format!("{u} ↦ {v}"));
                    }
                }
            }
            Ok(bad)
        }),
        check(s, "reduced cocycles are determined by f(B^n)", || {
            let weights: Vec<Rational> = (-4..=4).map(|t| q(t, 2)).collect();
            let m = DensityModule::new(qi(0), q(1, 2), 3);
            Ok((1..=3)
                .map(|n| localization_check(&m, table, n, &weights))
                .find(|r| !r.injective)
                .map(|r| format!("n={}", r.degree)))
        }),
    ]
}

fn oracle_checks() -> Vec<Check> {
    let s = "oracle";
    vec![
        check(s, "action table equals the realization", || {
            let mut bad = None;
            for (l, m) in parameter_grid() {
                let md = DensityModule::new(l.clone(), m.clone(), 4);
                for v in md.basis_upto(4) {
                    for g in Generator::ALL {
                        if md.act(g, &v)? != realization().act_on_basis(g, &v, &l, &m) {
                            bad = Some(format!("{g:?}·{v} at λ={l} μ={m}"));
                        }
                    }
                }
            }
            Ok(bad)
        }),
        check(s, "generator fields close under the contact bracket", || {
            let mut bad = None;
            for a in Generator::ALL {
                for b in Generator::ALL {
                    let (f, g) = (generator_symbol(a), generator_symbol(b));
                    if vector_field(&f).supercommutator(&vector_field(&g)) != vector_field(&contact_bracket(&f, &g)) {
                        bad = Some(format!("({a:?},{b:?})"));
                    }
                }
            }
            Ok(bad)
        }),
    ]
}

pub fn run_selftest(suite: Suite) -> SelftestReport {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Algebra | Suite::All) {
        checks.extend(algebra_checks());
    }
    if matches!(suite, Suite::Module | Suite::All) {
        checks.extend(module_checks());
    }
    if matches!(suite, Suite::Complex | Suite::All) {
        checks.extend(complex_checks());
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        checks.extend(oracle_checks());
    }
    let passed = checks.iter().all(|c| c.passed);
    SelftestReport { checks, passed }
}
