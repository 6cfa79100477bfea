//! The Lie superalgebra osp(1|2): generators, bracket tables, the super
//! exterior monomials that index cochains, and the sign-convention audit.

mod audit;
mod monomial;
mod table;

pub use audit::{audit_and_repair, changes_between, jacobi_report, repaired_table, AuditReport, Candidate, Change, JacobiFailure};
pub use monomial::{canonicalize, monomial_basis, monomial_count, SuperMonomial};
pub use table::{AlgElem, StructureTable};

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::rational::{q, Rational};

/// Z/2 grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u32) -> Self {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

/// `(-1)^{ab}`.
pub fn koszul(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

/// Root vectors of osp(1|2), declared in canonical order X < A < H < B < Y
/// (descending weight).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    X,
    A,
    H,
    B,
    Y,
}

impl Generator {
    pub const ALL: [Generator; 5] = [Generator::X, Generator::A, Generator::H, Generator::B, Generator::Y];
    pub const EVEN: [Generator; 3] = [Generator::X, Generator::H, Generator::Y];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    pub fn parity(self) -> Parity {
        match self {
            Generator::A | Generator::B => Parity::Odd,
            _ => Parity::Even,
        }
    }

    /// Twice the H-weight.
    pub fn weight2(self) -> i64 {
        match self {
            Generator::X => 2,
            Generator::A => 1,
            Generator::H => 0,
            Generator::B => -1,
            Generator::Y => -2,
        }
    }

    pub fn weight(self) -> Rational {
        q(self.weight2(), 2)
    }

    pub fn symbol(self) -> char {
        match self {
            Generator::X => 'X',
            Generator::A => 'A',
            Generator::H => 'H',
            Generator::B => 'B',
            Generator::Y => 'Y',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.symbol() == c)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}
