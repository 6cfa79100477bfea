use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{koszul, Generator};
use crate::error::{Error, Result};
use crate::rational::{q, qi, to_compact, Rational};

/// A rational linear combination of the five generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgElem {
    coeffs: [Rational; 5],
}

impl Default for AlgElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl AlgElem {
    pub fn zero() -> Self {
        Self { coeffs: std::array::from_fn(|_| Rational::zero()) }
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(Rational::one(), g)
    }

    pub fn term(c: Rational, g: Generator) -> Self {
        let mut e = Self::zero();
        e.coeffs[g.index()] = c;
        e
    }

    pub fn coeff(&self, g: Generator) -> &Rational {
        &self.coeffs[g.index()]
    }

    pub fn terms(&self) -> impl Iterator<Item = (Generator, &Rational)> {
        Generator::ALL
            .into_iter()
            .zip(self.coeffs.iter())
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: std::array::from_fn(|i| &self.coeffs[i] * c) }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { coeffs: std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]) }
    }

    /// Parses the compact form used in reports, e.g. `-2H`, `1/2A`, `X - B`.
    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(|c: char| c.is_ascii_uppercase()).ok_or_else(|| {
                Error::Parse(format!("missing generator in {text:?}"))
            })?;
            let g = body[end..]
                .chars()
                .next()
                .and_then(Generator::from_symbol)
                .ok_or_else(|| Error::Parse(format!("bad generator in {text:?}")))?;
            let c = if end == 0 {
                Rational::one()
            } else {
                crate::rational::parse_rational(&body[..end])?
            };
            out.coeffs[g.index()] += c * qi(sign);
            rest = &body[end + 1..];
        }
        Ok(out)
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if !a.is_one() {
                write!(f, "{}", to_compact(&a))?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// The brackets as printed, one per unordered pair (in print orientation).
pub(crate) const PRINTED_PAIRS: [(Generator, Generator); 12] = {
    use Generator::*;
    [
        (H, X),
        (H, Y),
        (X, Y),
        (H, A),
        (X, A),
        (Y, A),
        (H, B),
        (X, B),
        (Y, B),
        (A, A),
        (A, B),
        (B, B),
    ]
};

/// Bracket coefficients for every ordered pair of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    label: String,
    rows: Vec<AlgElem>,
}

impl StructureTable {
    /// The commutation relations exactly as printed for osp(1|2).
    pub fn printed() -> Self {
        use Generator::*;
        let t = AlgElem::term;
        Self::from_relations(
            "printed",
            &[
                (H, X, t(qi(1), X)),
                (H, Y, t(qi(-1), Y)),
                (X, Y, t(qi(2), H)),
                (H, A, t(q(1, 2), A)),
                (X, A, AlgElem::zero()),
                (Y, A, t(qi(-1), B)),
                (H, B, t(q(-1, 2), B)),
                (X, B, t(qi(1), A)),
                (Y, B, AlgElem::zero()),
                (A, A, t(qi(2), X)),
                (A, B, t(qi(2), H)),
                (B, B, t(qi(-2), Y)),
            ],
        )
        .expect("printed relations are antisymmetric and weight additive")
    }

    /// Completes the given brackets by graded antisymmetry; unlisted pairs are zero.
    pub fn from_relations(label: &str, relations: &[(Generator, Generator, AlgElem)]) -> Result<Self> {
        let mut rows = vec![AlgElem::zero(); 25];
        let mut set = [false; 25];
        for (u, v, e) in relations {
            let sign = -koszul(u.parity(), v.parity());
            let swapped = e.scale(&qi(sign));
            if u == v && swapped != *e {
                return Err(Error::HypothesisViolated(format!(
                    "[{u},{u}] = {e} violates graded antisymmetry"
                )));
            }
            for (idx, val) in [(u.index() * 5 + v.index(), e.clone()), (v.index() * 5 + u.index(), swapped)] {
                if set[idx] && rows[idx] != val {
                    return Err(Error::HypothesisViolated(format!("conflicting entries for [{u},{v}]")));
                }
                rows[idx] = val;
                set[idx] = true;
            }
        }
        let table = Self { label: label.to_string(), rows };
        if !table.is_weight_additive() {
            return Err(Error::HypothesisViolated(format!("table {label} is not weight additive")));
        }
        Ok(table)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn bracket(&self, u: Generator, v: Generator) -> &AlgElem {
        &self.rows[u.index() * 5 + v.index()]
    }

    /// Bilinear extension of the bracket.
    pub fn bracket_elems(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let mut acc = AlgElem::zero();
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                acc = acc.add(&self.bracket(u, v).scale(&(a * b)));
            }
        }
        acc
    }

    /// `[[u,v],w] - [u,[v,w]] + (-1)^{uv}[v,[u,w]]`; zero exactly when `ad_u` acts
    /// as a graded derivation on `[v,w]`.
    pub fn jacobi_defect(&self, u: Generator, v: Generator, w: Generator) -> AlgElem {
        let gu = AlgElem::generator(u);
        let gv = AlgElem::generator(v);
        let gw = AlgElem::generator(w);
        let lhs = self.bracket_elems(self.bracket(u, v), &gw);
        let t1 = self.bracket_elems(&gu, self.bracket(v, w));
        let t2 = self
            .bracket_elems(&gv, self.bracket(u, w))
            .scale(&qi(koszul(u.parity(), v.parity())));
        lhs.sub(&t1).add(&t2)
    }

    pub fn jacobi_failures(&self) -> Vec<(Generator, Generator, Generator, AlgElem)> {
        let mut out = Vec::new();
        for u in Generator::ALL {
            for v in Generator::ALL {
                for w in Generator::ALL {
                    let d = self.jacobi_defect(u, v, w);
                    if !d.is_zero() {
                        out.push((u, v, w, d));
                    }
                }
            }
        }
        out
    }

    pub fn satisfies_jacobi(&self) -> bool {
        Generator::ALL.iter().all(|&u| {
            Generator::ALL.iter().all(|&v| {
                Generator::ALL.iter().all(|&w| self.jacobi_defect(u, v, w).is_zero())
            })
        })
    }

    pub fn is_graded_antisymmetric(&self) -> bool {
        Generator::ALL.iter().all(|&u| {
            Generator::ALL.iter().all(|&v| {
                let s = qi(koszul(u.parity(), v.parity()));
                self.bracket(u, v).add(&self.bracket(v, u).scale(&s)).is_zero()
            })
        })
    }

    pub fn is_weight_additive(&self) -> bool {
        Generator::ALL.iter().all(|&u| {
            Generator::ALL.iter().all(|&v| {
                self.bracket(u, v)
                    .terms()
                    .all(|(g, _)| g.weight2() == u.weight2() + v.weight2())
            })
        })
    }

    /// Multiplies the row `[u,v]` (and its antisymmetric partner) by `c`.
    pub fn with_row_scaled(&self, u: Generator, v: Generator, c: &Rational) -> Self {
        let mut out = self.clone();
        let i = u.index() * 5 + v.index();
        let j = v.index() * 5 + u.index();
        out.rows[i] = self.rows[i].scale(c);
        if i != j {
            out.rows[j] = self.rows[j].scale(c);
        }
        out
    }

    /// The table in the rescaled basis `g ↦ scale[g] * g`.
    pub fn rescaled(&self, scale: &[Rational; 5]) -> Self {
        let mut out = self.clone();
        for u in Generator::ALL {
            for v in Generator::ALL {
                let row = self.bracket(u, v);
                let mut new = AlgElem::zero();
                for (g, c) in row.terms() {
                    let f = &scale[u.index()] * &scale[v.index()] / &scale[g.index()];
                    new.coeffs[g.index()] = c * f;
                }
                out.rows[u.index() * 5 + v.index()] = new;
            }
        }
        out
    }

    /// Printed-orientation rows whose value differs from `other`.
    pub fn differences(&self, other: &Self) -> Vec<(Generator, Generator, AlgElem, AlgElem)> {
        PRINTED_PAIRS
            .iter()
            .filter(|(u, v)| self.bracket(*u, *v) != other.bracket(*u, *v))
            .map(|&(u, v)| (u, v, self.bracket(u, v).clone(), other.bracket(u, v).clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn printed_brackets() {
        let t = StructureTable::printed();
        assert_eq!(*t.bracket(H, X), AlgElem::generator(X));
        assert_eq!(*t.bracket(A, A), AlgElem::term(qi(2), X));
        assert!(t.bracket(X, X).is_zero());
        // graded antisymmetric completion
        assert_eq!(*t.bracket(X, H), AlgElem::term(qi(-1), X));
        assert_eq!(*t.bracket(B, A), AlgElem::term(qi(2), H));
        assert_eq!(*t.bracket(A, H), AlgElem::term(q(-1, 2), A));
    }

    #[test]
    fn printed_table_fails_jacobi_on_aab() {
        let t = StructureTable::printed();
        assert_eq!(t.jacobi_defect(A, A, B), AlgElem::term(qi(4), A));
        assert!(!t.satisfies_jacobi());
    }

    #[test]
    fn repeated_even_argument_has_no_defect() {
        let t = StructureTable::printed();
        assert!(t.jacobi_defect(H, H, X).is_zero());
    }

    #[test]
    fn elem_text_round_trip() {
        for s in ["2H", "-2H", "-B", "1/2A", "0", "X - 3/2Y"] {
            assert_eq!(AlgElem::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn even_diagonal_must_vanish() {
        let r = StructureTable::from_relations("bad", &[(H, H, AlgElem::generator(H))]);
        assert!(r.is_err());
    }

    #[test]
    fn rescaling_preserves_jacobi_status() {
        let t = StructureTable::printed();
        let s = [qi(2), q(1, 2), qi(1), qi(4), q(1, 4)];
        assert_eq!(t.rescaled(&s).satisfies_jacobi(), t.satisfies_jacobi());
        assert!(t.rescaled(&s).is_graded_antisymmetric());
    }
}
