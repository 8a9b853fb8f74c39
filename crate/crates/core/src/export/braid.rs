use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::{PlatDiagram, TangleBox};
use crate::error::{Error, Result};

/// `σ_index^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraidLetter {
    pub index: usize,
    pub exponent: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<BraidLetter>,
}

impl BraidWord {
    /// Entry `x - 1` is the final position of the strand starting at `x`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut occupant: Vec<usize> = (1..=self.strands).collect();
        for l in &self.letters {
            if l.exponent % 2 != 0 {
                occupant.swap(l.index - 1, l.index);
            }
        }
        let mut perm = vec![0; self.strands];
        for (pos, &s) in occupant.iter().enumerate() {
            perm[s - 1] = pos + 1;
        }
        perm
    }

    /// Total number of crossings.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|l| l.exponent.unsigned_abs()).sum()
    }

    pub fn parse(strands: usize, s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|tok| {
                let bad = || Error::Format(format!("bad braid letter {tok:?}"));
                let body = tok.strip_prefix('s').ok_or_else(bad)?;
                let (index, exponent) = match body.split_once('^') {
                    Some((i, e)) => (i.parse().map_err(|_| bad())?, e.parse().map_err(|_| bad())?),
                    None => (body.parse().map_err(|_| bad())?, 1),
                };
                if index == 0 || index >= strands {
                    return Err(bad());
                }
                Ok(BraidLetter { index, exponent })
            })
            .collect::<Result<_>>()?;
        Ok(BraidWord { strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}^{}", l.index, l.exponent)?;
        }
        Ok(())
    }
}

impl FromStr for BraidLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let w = BraidWord::parse(usize::MAX, s)?;
        match w.letters.as_slice() {
            [l] => Ok(*l),
            _ => Err(Error::Format(format!("expected one braid letter, got {s:?}"))),
        }
    }
}

/// Reads the boxes top to bottom, left to right. Zero boxes are dropped.
pub fn to_braid_word(d: &PlatDiagram) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for (i, j, b) in d.boxes() {
        match *b {
            TangleBox::Twist(0) => {}
            TangleBox::Twist(a) => letters.push(BraidLetter {
                index: d.box_strand(i, j),
                exponent: a,
            }),
            TangleBox::Rational { .. } => {
                return Err(Error::UnsupportedBox {
                    row: i,
                    column: j,
                    operation: "braid export",
                })
            }
        }
    }
    Ok(BraidWord {
        strands: d.strands(),
        letters,
    })
}
