use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{koszul, Generator, Parity};
use crate::error::{Error, Result};

/// A basis element of the super exterior power: a set of even generators and
/// multiplicities for the odd ones, read in canonical order X < A < H < B < Y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuperMonomial {
    x: bool,
    h: bool,
    y: bool,
    a: u32,
    b: u32,
}

impl SuperMonomial {
    pub fn new(evens: &[Generator], mult_a: u32, mult_b: u32) -> Result<Self> {
        let mut m = Self { x: false, h: false, y: false, a: mult_a, b: mult_b };
        for &g in evens {
            let slot = match g {
                Generator::X => &mut m.x,
                Generator::H => &mut m.h,
                Generator::Y => &mut m.y,
                _ => return Err(Error::Parse(format!("{g} is odd"))),
            };
            if *slot {
                return Err(Error::Parse(format!("even generator {g} repeated")));
            }
            *slot = true;
        }
        Ok(m)
    }

    pub fn unit() -> Self {
        Self { x: false, h: false, y: false, a: 0, b: 0 }
    }

    pub fn count(&self, g: Generator) -> u32 {
        match g {
            Generator::X => self.x as u32,
            Generator::H => self.h as u32,
            Generator::Y => self.y as u32,
            Generator::A => self.a,
            Generator::B => self.b,
        }
    }

    pub fn mult_a(&self) -> u32 {
        self.a
    }

    pub fn mult_b(&self) -> u32 {
        self.b
    }

    pub fn degree(&self) -> u32 {
        Generator::ALL.iter().map(|&g| self.count(g)).sum()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.a + self.b)
    }

    pub fn weight2(&self) -> i64 {
        Generator::ALL.iter().map(|&g| g.weight2() * self.count(g) as i64).sum()
    }

    /// No odd factor: the monomial is an sl2 cochain argument.
    pub fn is_even_part(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn tuple(&self) -> Vec<Generator> {
        Generator::ALL
            .iter()
            .flat_map(|&g| std::iter::repeat_n(g, self.count(g) as usize))
            .collect()
    }

    /// Removes one factor `g`, if present.
    pub fn without(&self, g: Generator) -> Option<Self> {
        if self.count(g) == 0 {
            return None;
        }
        let mut m = *self;
        match g {
            Generator::X => m.x = false,
            Generator::H => m.h = false,
            Generator::Y => m.y = false,
            Generator::A => m.a -= 1,
            Generator::B => m.b -= 1,
        }
        Some(m)
    }
}

impl Ord for SuperMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.tuple().cmp(&other.tuple()))
    }
}

impl PartialOrd for SuperMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for g in Generator::ALL {
            match self.count(g) {
                0 => {}
                1 => parts.push(g.to_string()),
                n => parts.push(format!("{g}^{n}")),
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for SuperMonomial {
    type Err = Error;

    /// Accepts `A^2 H B` style; factors may come in any order but an odd
    /// generator may appear only once per token.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::unit());
        }
        let mut evens = Vec::new();
        let (mut a, mut b) = (0u32, 0u32);
        for tok in s.split_whitespace() {
            let (sym, exp) = match tok.split_once('^') {
                Some((g, e)) => (g, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?),
                None => (tok, 1),
            };
            let mut chars = sym.chars();
            let g = match (chars.next().and_then(Generator::from_symbol), chars.next()) {
                (Some(g), None) => g,
                _ => return Err(Error::Parse(format!("bad factor {tok:?}"))),
            };
            match g {
                Generator::A => a += exp,
                Generator::B => b += exp,
                _ => evens.extend(std::iter::repeat_n(g, exp as usize)),
            }
        }
        Self::new(&evens, a, b)
    }
}

/// Sorts a tuple of generators into canonical order. The sign collects
/// `-(-1)^{|U||V|}` for each adjacent transposition; a repeated even
/// generator makes the product vanish, reported as `(None, 0)`.
pub fn canonicalize(tuple: &[Generator]) -> (Option<SuperMonomial>, i64) {
    let mut t = tuple.to_vec();
    let mut sign = 1i64;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            sign *= -koszul(t[j - 1].parity(), t[j].parity());
            t.swap(j - 1, j);
            j -= 1;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1] && w[0].parity() == Parity::Even) {
        return (None, 0);
    }
    let evens: Vec<Generator> = t.iter().copied().filter(|g| g.parity() == Parity::Even).collect();
    let a = t.iter().filter(|&&g| g == Generator::A).count() as u32;
    let b = t.iter().filter(|&&g| g == Generator::B).count() as u32;
    (Some(SuperMonomial::new(&evens, a, b).expect("evens are distinct")), sign)
}

/// All monomials of degree `n`, sorted.
pub fn monomial_basis(n: u32) -> Vec<SuperMonomial> {
    let mut out = Vec::new();
    for mask in 0u8..8 {
        let evens: Vec<Generator> = Generator::EVEN
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &g)| g)
            .collect();
        let e = evens.len() as u32;
        if e > n {
            continue;
        }
        for a in 0..=(n - e) {
            out.push(SuperMonomial::new(&evens, a, n - e - a).expect("distinct evens"));
        }
    }
    out.sort();
    out
}

/// `Σ_{j ≤ min(3,n)} C(3,j) (n-j+1)`.
pub fn monomial_count(n: u32) -> usize {
    const C3: [usize; 4] = [1, 3, 3, 1];
    (0..=n.min(3) as usize).map(|j| C3[j] * (n as usize - j + 1)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Generator::*;

    #[test]
    fn counts_match_formula() {
        let expected = [1, 5, 12, 20, 28, 36];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(monomial_basis(n as u32).len(), c);
            assert_eq!(monomial_count(n as u32), c);
        }
    }

    #[test]
    fn swapping_evens_flips_sign() {
        let (m, s) = canonicalize(&[H, X]);
        assert_eq!(m.unwrap().to_string(), "X H");
        assert_eq!(s, -1);
    }

    #[test]
    fn swapping_odds_keeps_sign() {
        let (m, s) = canonicalize(&[B, A]);
        assert_eq!(m.unwrap().to_string(), "A B");
        assert_eq!(s, 1);
    }

    #[test]
    fn repeated_even_vanishes() {
        assert_eq!(canonicalize(&[X, A, X]), (None, 0));
    }

    #[test]
    fn repeated_odd_survives() {
        let (m, s) = canonicalize(&[A, A, H]);
        assert_eq!(m.unwrap().to_string(), "A^2 H");
        assert_eq!(s, 1);
    }

    #[test]
    fn text_round_trip() {
        for m in monomial_basis(4) {
            let back: SuperMonomial = m.to_string().parse().unwrap();
            assert_eq!(back, m);
        }
        assert!("X X".parse::<SuperMonomial>().is_err());
        assert!("Q".parse::<SuperMonomial>().is_err());
    }

    fn arb_tuple() -> impl Strategy<Value = Vec<Generator>> {
        prop::collection::vec((0usize..5).prop_map(Generator::from_index), 0..6)
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent(t in arb_tuple()) {
            if let (Some(m), _) = canonicalize(&t) {
                prop_assert_eq!(canonicalize(&m.tuple()), (Some(m), 1));
                prop_assert_eq!(m.degree() as usize, t.len());
            }
        }

        #[test]
        fn adjacent_swap_sign(t in arb_tuple(), i in 0usize..5) {
            prop_assume!(i + 1 < t.len());
            let mut s = t.clone();
            s.swap(i, i + 1);
            let (m1, s1) = canonicalize(&t);
            let (m2, s2) = canonicalize(&s);
            prop_assert_eq!(m1, m2);
            prop_assert_eq!(s1, s2 * -koszul(t[i].parity(), t[i + 1].parity()));
        }
    }
}
