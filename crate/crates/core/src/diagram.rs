//! 2n-plat diagrams.
//!
//! Strands are numbered `1..=2n` from left to right and rows `1..=m` from top
//! to bottom. Odd rows hold `n - 1` boxes, box `j` sitting over strands
//! `(2j, 2j + 1)`; even rows hold `n` boxes over `(2j - 1, 2j)`. Caps join
//! `(2j - 1, 2j)` above row 1 and below row `m`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::tangle::{box_fraction, Fraction};

/// Contents of one box of the plat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BoxRepr", into = "BoxRepr")]
pub enum TangleBox {
    /// Signed number of half twists; positive is left-handed. Slope `1/a`.
    Twist(i64),
    /// Rational tangle of slope `p/q`, stored in canonical form.
    Rational { p: i64, q: i64 },
}

impl TangleBox {
    pub fn rational(p: i64, q: i64) -> Result<Self> {
        let f = Fraction::new(p, q)?;
        Ok(TangleBox::Rational { p: f.p(), q: f.q() })
    }

    pub fn fraction(&self) -> Fraction {
        box_fraction(self)
    }

    /// `|a|` for twists and `|q|` for rational boxes.
    pub fn denominator(&self) -> u64 {
        self.fraction().q().unsigned_abs()
    }

    pub fn twist(&self) -> Option<i64> {
        match *self {
            TangleBox::Twist(a) => Some(a),
            TangleBox::Rational { .. } => None,
        }
    }
}

impl fmt::Display for TangleBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TangleBox::Twist(a) => write!(f, "{a}"),
            TangleBox::Rational { p, q } => write!(f, "{p}/{q}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BoxRepr {
    Twist(i64),
    Rational([i64; 2]),
}

impl TryFrom<BoxRepr> for TangleBox {
    type Error = Error;

    fn try_from(repr: BoxRepr) -> Result<Self> {
        match repr {
            BoxRepr::Twist(a) => Ok(TangleBox::Twist(a)),
            BoxRepr::Rational([p, q]) => TangleBox::rational(p, q),
        }
    }
}

impl From<TangleBox> for BoxRepr {
    fn from(b: TangleBox) -> Self {
        match b {
            TangleBox::Twist(a) => BoxRepr::Twist(a),
            TangleBox::Rational { p, q } => BoxRepr::Rational([p, q]),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramFile {
    n: usize,
    m: usize,
    rows: Vec<Vec<TangleBox>>,
}

/// A validated 2n-plat projection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramFile", into = "DiagramFile")]
pub struct PlatDiagram {
    n: usize,
    m: usize,
    rows: Vec<Vec<TangleBox>>,
}

impl TryFrom<DiagramFile> for PlatDiagram {
    type Error = Error;

    fn try_from(file: DiagramFile) -> Result<Self> {
        PlatDiagram::new(file.n, file.m, file.rows)
    }
}

impl From<PlatDiagram> for DiagramFile {
    fn from(d: PlatDiagram) -> Self {
        DiagramFile {
            n: d.n,
            m: d.m,
            rows: d.rows,
        }
    }
}

/// Number of boxes in row `row` (1-based) of an `n`-plat.
pub fn row_len(n: usize, row: usize) -> usize {
    if row % 2 == 1 {
        n - 1
    } else {
        n
    }
}

impl PlatDiagram {
    pub fn new(n: usize, m: usize, rows: Vec<Vec<TangleBox>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroWidth);
        }
        if m.is_multiple_of(2) {
            return Err(Error::EvenRowCount(m));
        }
        if rows.len() != m {
            return Err(Error::RowCount {
                expected: m,
                found: rows.len(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            let expected = row_len(n, i + 1);
            if row.len() != expected {
                return Err(Error::RowLength {
                    row: i + 1,
                    expected,
                    found: row.len(),
                });
            }
        }
        let mut rows = rows;
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, b) in row.iter_mut().enumerate() {
                if let TangleBox::Rational { p, q } = *b {
                    *b = TangleBox::rational(p, q).map_err(|_| Error::NonReducedBox {
                        row: i + 1,
                        column: j + 1,
                        p,
                        q,
                    })?;
                }
            }
        }
        Ok(PlatDiagram { n, m, rows })
    }

    /// Builds an all-twist diagram from signed half-twist counts.
    pub fn from_twists(n: usize, m: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(TangleBox::Twist).collect())
            .collect();
        Self::new(n, m, rows)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serialization is infallible")
    }

    /// Hex SHA-256 of the compact JSON form.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn strands(&self) -> usize {
        2 * self.n
    }

    pub fn rows(&self) -> &[Vec<TangleBox>] {
        &self.rows
    }

    /// Row `i`, 1-based.
    pub fn row(&self, i: usize) -> &[TangleBox] {
        &self.rows[i - 1]
    }

    pub fn row_len(&self, i: usize) -> usize {
        row_len(self.n, i)
    }

    /// Box `(i, j)`, both 1-based.
    pub fn get(&self, i: usize, j: usize) -> &TangleBox {
        &self.rows[i - 1][j - 1]
    }

    /// Left strand of box `(i, j)`; the box spans `x` and `x + 1`.
    pub fn box_strand(&self, i: usize, j: usize) -> usize {
        if i % 2 == 1 {
            2 * j
        } else {
            2 * j - 1
        }
    }

    /// `(row, column, box)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize, &TangleBox)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, b)| (i + 1, j + 1, b))
        })
    }

    pub fn box_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_all_twist(&self) -> bool {
        self.boxes().all(|(_, _, b)| b.twist().is_some())
    }

    /// `Σ|a|` over twist boxes.
    pub fn crossing_number(&self) -> u64 {
        self.boxes()
            .filter_map(|(_, _, b)| b.twist())
            .map(i64::unsigned_abs)
            .sum()
    }

    /// Left-right reflection of the box layout; coefficients are kept.
    pub fn reflected(&self) -> PlatDiagram {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlatDiagram { rows, ..*self }
    }

    /// Negates every twist count, flipping the handedness of every crossing.
    pub fn mirrored(&self) -> PlatDiagram {
        let flip = |b: &TangleBox| match *b {
            TangleBox::Twist(a) => TangleBox::Twist(-a),
            TangleBox::Rational { p, q } => TangleBox::Rational { p: -p, q },
        };
        let rows = self.rows.iter().map(|r| r.iter().map(flip).collect()).collect();
        PlatDiagram { rows, ..*self }
    }

    /// Copy with box `(i, j)` replaced.
    pub fn with_box(&self, i: usize, j: usize, b: TangleBox) -> PlatDiagram {
        let mut out = self.clone();
        out.rows[i - 1][j - 1] = b;
        out
    }

    pub fn check_hypotheses(&self, mode: Strictness) -> HypothesisReport {
        HypothesisReport::evaluate(self, mode)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strictness {
    /// End boxes of odd rows need denominator at least 3.
    Strict,
    /// End boxes of odd rows need denominator at least 2.
    Relaxed,
}

impl Strictness {
    pub fn end_threshold(self) -> u64 {
        match self {
            Strictness::Strict => 3,
            Strictness::Relaxed => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `n >= 3`.
    BraidIndex,
    /// Boxes other than the first and last of a row have nonzero denominator.
    InteriorNonzero,
    /// First and last boxes of odd rows meet the denominator threshold.
    OddRowEnds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: Condition,
    pub row: usize,
    pub column: usize,
    pub value: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// `n <= 2`: a two-bridge link, whose exterior has no closed essential
    /// surface at all.
    TwoBridge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub mode: Strictness,
    pub verdict: Verdict,
    pub braid_index: bool,
    pub interior_nonzero: bool,
    pub odd_row_ends: bool,
    pub failures: Vec<Witness>,
}

impl HypothesisReport {
    fn evaluate(d: &PlatDiagram, mode: Strictness) -> Self {
        let threshold = mode.end_threshold();
        let mut failures = Vec::new();
        for (i, j, b) in d.boxes() {
            let len = d.row_len(i);
            let is_end = j == 1 || j == len;
            let condition = if !is_end {
                (b.denominator() == 0).then_some(Condition::InteriorNonzero)
            } else if i % 2 == 1 {
                (b.denominator() < threshold).then_some(Condition::OddRowEnds)
            } else {
                None
            };
            if let Some(condition) = condition {
                failures.push(Witness {
                    condition,
                    row: i,
                    column: j,
                    value: b.to_string(),
                });
            }
        }
        let braid_index = d.n() >= 3;
        let interior_nonzero = !failures
            .iter()
            .any(|w| w.condition == Condition::InteriorNonzero);
        let odd_row_ends = !failures.iter().any(|w| w.condition == Condition::OddRowEnds);
        let verdict = if !braid_index {
            Verdict::TwoBridge
        } else if interior_nonzero && odd_row_ends {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        HypothesisReport {
            mode,
            verdict,
            braid_index,
            interior_nonzero,
            odd_row_ends,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(f, "mode: {:?}", self.mode)?;
        writeln!(f, "(i)   n >= 3:                 {}", mark(self.braid_index))?;
        writeln!(f, "(ii)  interior boxes nonzero: {}", mark(self.interior_nonzero))?;
        writeln!(
            f,
            "(iii) odd-row end boxes >= {}: {}",
            self.mode.end_threshold(),
            mark(self.odd_row_ends)
        )?;
        for w in &self.failures {
            writeln!(f, "  box ({}, {}) = {} violates {:?}", w.row, w.column, w.value, w.condition)?;
        }
        match self.verdict {
            Verdict::Pass => write!(f, "verdict: pass"),
            Verdict::Fail => write!(f, "verdict: fail"),
            Verdict::TwoBridge => write!(
                f,
                "verdict: two-bridge link; its exterior contains no closed essential surface"
            ),
        }
    }
}

/// Deterministic generator of diagrams satisfying the strict hypotheses.
///
/// Odd-row end boxes get `3 <= |a| <= max_twist`, interior boxes
/// `1 <= |a| <= max_twist` and even-row end boxes `0 <= |a| <= max_twist`,
/// each with a random sign. With `require_parity`, some odd row gets an odd
/// first box and some odd row an odd last box.
pub fn random_diagram(
    n: usize,
    m: usize,
    max_twist: u32,
    seed: u64,
    require_parity: bool,
) -> Result<PlatDiagram> {
    if n < 3 {
        return Err(Error::Parameter(format!("n must be at least 3, got {n}")));
    }
    if m.is_multiple_of(2) {
        return Err(Error::Parameter(format!("m must be odd, got {m}")));
    }
    if max_twist < 3 {
        return Err(Error::Parameter(format!(
            "max_twist must be at least 3, got {max_twist}"
        )));
    }
    let max = i64::from(max_twist);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<i64>> = (1..=m)
        .map(|i| {
            let len = row_len(n, i);
            (1..=len)
                .map(|j| {
                    let is_end = j == 1 || j == len;
                    let low = match (is_end, i % 2 == 1) {
                        (true, true) => 3,
                        (true, false) => 0,
                        (false, _) => 1,
                    };
                    let magnitude = rng.gen_range(low..=max);
                    if rng.gen_bool(0.5) {
                        magnitude
                    } else {
                        -magnitude
                    }
                })
                .collect()
        })
        .collect();

    if require_parity {
        let odd_rows: Vec<usize> = (0..m).step_by(2).collect();
        let make_odd = |a: i64| {
            if a % 2 != 0 {
                a
            } else if a.abs() < max {
                a + a.signum()
            } else {
                a - a.signum()
            }
        };
        if !odd_rows.iter().any(|&r| rows[r][0] % 2 != 0) {
            let r = odd_rows[rng.gen_range(0..odd_rows.len())];
            rows[r][0] = make_odd(rows[r][0]);
        }
        if !odd_rows.iter().any(|&r| rows[r][n - 2] % 2 != 0) {
            let r = odd_rows[rng.gen_range(0..odd_rows.len())];
            rows[r][n - 2] = make_odd(rows[r][n - 2]);
        }
    }
    PlatDiagram::from_twists(n, m, rows)
}
