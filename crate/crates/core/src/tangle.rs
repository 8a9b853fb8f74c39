//! Rational tangle arithmetic.
//!
//! A tangle is identified by its slope `p/q`. Twist boxes with `a` vertical
//! half twists have slope `1/a`; `1/0` is the tangle of two untwisted vertical
//! strands and `0/1` the tangle of two horizontal arcs.

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::diagram::TangleBox;
use crate::error::{Error, Result};

/// Reduced slope `p/q` with `q >= 0`; the infinite slope is stored as `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction {
    p: i64,
    q: i64,
}

impl Fraction {
    pub const INFINITY: Fraction = Fraction { p: 1, q: 0 };
    pub const ZERO: Fraction = Fraction { p: 0, q: 1 };

    /// Builds the canonical representative of an already reduced pair.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if (p, q) == (0, 0) || p.unsigned_abs().gcd(&q.unsigned_abs()) != 1 {
            return Err(Error::NonReduced { p, q });
        }
        Ok(Self::canonical(p, q))
    }

    /// Reduces an arbitrary nonzero pair.
    pub fn reduce(p: i64, q: i64) -> Result<Self> {
        if (p, q) == (0, 0) {
            return Err(Error::NonReduced { p, q });
        }
        let g = p.gcd(&q);
        Ok(Self::canonical(p / g, q / g))
    }

    fn canonical(p: i64, q: i64) -> Self {
        match q.signum() {
            0 => Self::INFINITY,
            -1 => Fraction { p: -p, q: -q },
            _ => Fraction { p, q },
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// How the four endpoints of a tangle are joined, ignoring crossings.
///
/// Endpoints are NW, NE (top) and SW, SE (bottom).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pairing {
    /// NW-SW and NE-SE.
    ThroughIdentity,
    /// NW-SE and NE-SW.
    ThroughSwap,
    /// NW-NE and SW-SE.
    Caps,
}

/// Incompressibility level of a rational tangle space, `min(q, 3)`.
///
/// Level 1 or more: the twice punctured disk on either side of the vertical
/// circle is incompressible. Level 2 or more: the boundary minus the vertical
/// circle is incompressible. Level 3: every compressing disk of the boundary
/// meets that punctured disk at least twice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IncompressibilityClass {
    pub level: u8,
}

impl IncompressibilityClass {
    pub fn punctured_disk_incompressible(&self) -> bool {
        self.level >= 1
    }

    pub fn complement_of_circle_incompressible(&self) -> bool {
        self.level >= 2
    }

    pub fn compressing_disks_meet_twice(&self) -> bool {
        self.level >= 3
    }
}

/// Evaluates `t_k + 1/(t_{k-1} + 1/(... + 1/t_1))`, innermost term first.
///
/// The evaluation runs projectively on `(p, q)` pairs, so `1/0` and `0`
/// intermediate values are handled without special cases.
pub fn continued_fraction(terms: &[i64]) -> Result<Fraction> {
    let (&first, rest) = terms.split_first().ok_or(Error::EmptyContinuedFraction)?;
    let (mut p, mut q) = (first, 1i64);
    for &t in rest {
        let next = t
            .checked_mul(p)
            .and_then(|tp| tp.checked_add(q))
            .ok_or(Error::Overflow)?;
        (p, q) = (next, p);
    }
    // Each step multiplies by a unimodular matrix, so (p, q) stays coprime.
    Fraction::new(p, q)
}

/// Expansion of `f` that [`continued_fraction`] maps back to `f`.
///
/// Finite slopes expand by the floor Euclidean algorithm; `1/0` expands to
/// `[0, 0]`.
pub fn canonical_expansion(f: Fraction) -> Vec<i64> {
    if f.is_infinite() {
        return vec![0, 0];
    }
    let (mut p, mut q) = (f.p, f.q);
    let mut outer_first = Vec::new();
    loop {
        let t = p.div_euclid(q);
        let r = p.rem_euclid(q);
        outer_first.push(t);
        if r == 0 {
            break;
        }
        (p, q) = (q, r);
    }
    outer_first.reverse();
    outer_first
}

pub fn box_fraction(b: &TangleBox) -> Fraction {
    match *b {
        TangleBox::Twist(a) => Fraction::canonical(1, a),
        TangleBox::Rational { p, q } => Fraction::canonical(p, q),
    }
}

/// Endpoint pairing of a tangle, read off the parities of `p` and `q`.
pub fn pairing(f: Fraction) -> Pairing {
    match (f.p.rem_euclid(2), f.q.rem_euclid(2)) {
        (1, 0) => Pairing::ThroughIdentity,
        (1, 1) => Pairing::ThroughSwap,
        (0, 1) => Pairing::Caps,
        _ => unreachable!("canonical fractions are never even/even"),
    }
}

pub fn incompressibility_class(f: Fraction) -> IncompressibilityClass {
    IncompressibilityClass {
        level: f.q.unsigned_abs().min(3) as u8,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continued_fraction_examples() {
        assert_eq!(continued_fraction(&[3]).unwrap(), Fraction::new(3, 1).unwrap());
        assert_eq!(continued_fraction(&[2, 3]).unwrap(), Fraction::new(7, 2).unwrap());
        assert_eq!(continued_fraction(&[0]).unwrap(), Fraction::ZERO);
        assert_eq!(continued_fraction(&[0, 0]).unwrap(), Fraction::INFINITY);
        assert_eq!(continued_fraction(&[]), Err(Error::EmptyContinuedFraction));
    }

    #[test]
    fn box_fractions() {
        assert_eq!(box_fraction(&TangleBox::Twist(3)).to_string(), "1/3");
        assert_eq!(box_fraction(&TangleBox::Twist(0)).to_string(), "1/0");
        assert_eq!(box_fraction(&TangleBox::Twist(-3)).to_string(), "-1/3");
        let r = TangleBox::Rational { p: -7, q: 2 };
        assert_eq!(box_fraction(&r).to_string(), "-7/2");
        let r = TangleBox::Rational { p: 7, q: -2 };
        assert_eq!(box_fraction(&r).to_string(), "-7/2");
    }

    #[test]
    fn pinned_pairings() {
        assert_eq!(pairing(Fraction::INFINITY), Pairing::ThroughIdentity);
        assert_eq!(pairing(Fraction::new(1, 3).unwrap()), Pairing::ThroughSwap);
        assert_eq!(pairing(Fraction::new(1, 4).unwrap()), Pairing::ThroughIdentity);
        assert_eq!(pairing(Fraction::ZERO), Pairing::Caps);
        assert_eq!(pairing(Fraction::new(7, 2).unwrap()), Pairing::ThroughIdentity);
    }

    #[test]
    fn levels() {
        let level = |p, q| incompressibility_class(Fraction::new(p, q).unwrap()).level;
        assert_eq!(level(1, 3), 3);
        assert_eq!(level(1, 1), 1);
        assert_eq!(level(1, 0), 0);
        assert_eq!(level(-5, 2), 2);
        assert_eq!(level(2, 17), 3);
    }

    #[test]
    fn rejects_unreduced() {
        assert!(Fraction::new(2, 4).is_err());
        assert!(Fraction::new(0, 0).is_err());
        assert!(Fraction::new(0, 5).is_err());
        assert_eq!(Fraction::new(-1, 0).unwrap(), Fraction::INFINITY);
        assert_eq!(Fraction::reduce(6, -4).unwrap().to_string(), "-3/2");
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(canonical_expansion(Fraction::new(7, 2).unwrap()), vec![2, 3]);
        assert_eq!(canonical_expansion(Fraction::new(-7, 3).unwrap()), vec![2, 1, -3]);
        assert_eq!(canonical_expansion(Fraction::INFINITY), vec![0, 0]);
    }
}
