//! Allowable paths `α(a_1, …, a_m)`.
//!
//! `a_i` counts the boxes of row `i` left of the arc. In row `i` the arc runs
//! between strands `pos(i)` and `pos(i) + 1`, where `pos(i) = 2a_i + 1` on odd
//! rows and `2a_i` on even rows. An arc is allowable when every row keeps a
//! box on each side and each band is crossed by exactly one strand, which
//! turns into the step rule
//!
//! * odd row `i` to even row `i + 1`: `a_{i+1} ∈ {a_i, a_i + 1}`,
//! * even row `i` to odd row `i + 1`: `a_{i+1} ∈ {a_i - 1, a_i}`.
//!
//! Allowability depends on the shape `(n, m)` only, never on coefficients.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::diagram::{row_len, PlatDiagram};
use crate::error::{Error, Result};
use crate::geometry;
use crate::topology::{Segment, Side};

/// An entry sequence checked against the step rule for a fixed shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AllowablePath {
    n: usize,
    entries: Vec<usize>,
}

impl AllowablePath {
    pub fn new(d: &PlatDiagram, entries: Vec<usize>) -> Result<Self> {
        Self::for_shape(d.n(), d.m(), entries)
    }

    pub fn for_shape(n: usize, m: usize, entries: Vec<usize>) -> Result<Self> {
        let check = check_shape(n, m, &entries)?;
        match check.diagnostic {
            None => Ok(AllowablePath { n, entries }),
            Some(reason) => Err(Error::NotAllowable {
                path: join(&entries),
                reason,
            }),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn positions(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &a)| position(i + 1, a))
            .collect()
    }

    /// Strand crossed in band `gap`, for `1 <= gap <= m - 1`.
    pub fn crossed_strand(&self, gap: usize) -> usize {
        let pos = |i: usize| position(i, self.entries[i - 1]);
        (pos(gap) + pos(gap + 1)).div_ceil(2)
    }

    /// Whether the arc moves right while crossing band `gap`.
    pub fn moves_right(&self, gap: usize) -> bool {
        position(gap + 1, self.entries[gap]) > position(gap, self.entries[gap - 1])
    }

    /// The `m + 1` link pieces met by the sphere: the top cap (as its left
    /// segment), one segment per inner band, and the bottom cap.
    pub fn crossing_segments(&self) -> Vec<Segment> {
        let m = self.m();
        let pos = self.positions();
        let mut out = Vec::with_capacity(m + 1);
        out.push(Segment { gap: 0, x: pos[0] });
        for gap in 1..m {
            out.push(Segment {
                gap,
                x: self.crossed_strand(gap),
            });
        }
        out.push(Segment { gap: m, x: pos[m - 1] });
        out
    }

    /// Side of the sphere holding segment `s`; `None` for crossed pieces.
    ///
    /// In the outer bands the crossed cap spans `pos` and `pos + 1`.
    pub fn segment_side(&self, s: Segment) -> Option<Side> {
        let m = self.m();
        let (low, high) = if s.gap == 0 || s.gap == m {
            let p = position(s.gap.max(1), self.entries[s.gap.max(1) - 1]);
            (p, p + 1)
        } else {
            let c = self.crossed_strand(s.gap);
            (c, c)
        };
        if s.x < low {
            Some(Side::Left)
        } else if s.x > high {
            Some(Side::Right)
        } else {
            None
        }
    }

    /// The path of the reflected diagram that mirrors this one.
    pub fn reflected(&self) -> AllowablePath {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &a)| row_len(self.n, i + 1) - a)
            .collect();
        AllowablePath { n: self.n, entries }
    }
}

impl fmt::Display for AllowablePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.entries))
    }
}

fn join(entries: &[usize]) -> String {
    entries
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses `"1,1,1,2,2"`.
pub fn parse_entries(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::BadPathSyntax(s.to_string()))
}

fn position(row: usize, a: usize) -> usize {
    if row % 2 == 1 {
        2 * a + 1
    } else {
        2 * a
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Allowability {
    pub allowable: bool,
    /// First violated bound or band, when not allowable.
    pub diagnostic: Option<String>,
}

pub fn check_allowable(d: &PlatDiagram, entries: &[usize]) -> Result<Allowability> {
    check_shape(d.n(), d.m(), entries)
}

fn check_shape(n: usize, m: usize, entries: &[usize]) -> Result<Allowability> {
    if entries.len() != m {
        return Err(Error::PathLength {
            expected: m,
            found: entries.len(),
        });
    }
    let fail = |reason: String| {
        Ok(Allowability {
            allowable: false,
            diagnostic: Some(reason),
        })
    };
    for (k, &a) in entries.iter().enumerate() {
        let i = k + 1;
        let len = row_len(n, i);
        if a < 1 || a + 1 > len {
            return fail(format!(
                "row {i}: a_{i} = {a} must leave a box on each side of the arc (row has {len} boxes)"
            ));
        }
        if i > 1 {
            let prev = entries[k - 1];
            let ok = if (i - 1) % 2 == 1 {
                a == prev || a == prev + 1
            } else {
                a + 1 == prev || a == prev
            };
            if !ok {
                return fail(format!(
                    "band {}: moving from a_{} = {prev} to a_{i} = {a} crosses the link more than once",
                    i - 1,
                    i - 1
                ));
            }
        }
    }
    Ok(Allowability {
        allowable: true,
        diagnostic: None,
    })
}

/// Counts intersections of the monotone arc with the drawn link.
///
/// Independent of the step rule: the arc is laid out from the box geometry
/// and intersected with every cap, band segment and box diagonal. Accepts any
/// entries with `0 <= a_i <= row length`.
pub fn crossing_count_oracle(d: &PlatDiagram, entries: &[usize]) -> Result<usize> {
    if entries.len() != d.m() {
        return Err(Error::PathLength {
            expected: d.m(),
            found: entries.len(),
        });
    }
    if let Some((k, &a)) = entries
        .iter()
        .enumerate()
        .find(|&(k, &a)| a > d.row_len(k + 1))
    {
        return Err(Error::Parameter(format!(
            "a_{} = {a} exceeds the {} boxes of row {}",
            k + 1,
            d.row_len(k + 1),
            k + 1
        )));
    }
    let polyline = geometry::corridor_polyline(d, entries);
    Ok(geometry::intersections(&polyline, &geometry::link_pieces(d)))
}

/// All allowable paths in lexicographic order; empty when `n <= 2`.
pub fn enumerate_allowable(d: &PlatDiagram) -> Vec<AllowablePath> {
    enumerate_shape(d.n(), d.m())
}

pub fn enumerate_shape(n: usize, m: usize) -> Vec<AllowablePath> {
    fn extend(n: usize, m: usize, prefix: &mut Vec<usize>, out: &mut Vec<AllowablePath>) {
        let i = prefix.len() + 1;
        if i > m {
            out.push(AllowablePath {
                n,
                entries: prefix.clone(),
            });
            return;
        }
        let upper = row_len(n, i).saturating_sub(1);
        let (lo, hi) = match prefix.last() {
            None => (1, upper),
            Some(&prev) if (i - 1) % 2 == 1 => (prev.max(1), (prev + 1).min(upper)),
            Some(&prev) => (prev.saturating_sub(1).max(1), prev.min(upper)),
        };
        for a in lo..=hi {
            prefix.push(a);
            extend(n, m, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 3 {
        extend(n, m, &mut Vec::with_capacity(m), &mut out);
    }
    out
}

/// Number of allowable paths of the `(n, m)` shape by a transfer recurrence.
pub fn count_allowable(n: usize, m: usize) -> Result<BigUint> {
    if m.is_multiple_of(2) {
        return Err(Error::Parameter(format!("m must be odd, got {m}")));
    }
    if n < 3 {
        return Ok(BigUint::zero());
    }
    // counts[a] for a in 0..=n; entries outside the row bounds stay zero.
    let mut counts = vec![BigUint::zero(); n + 1];
    for c in counts.iter_mut().take(n - 1).skip(1) {
        *c = BigUint::one();
    }
    for i in 1..m {
        let upper = row_len(n, i + 1) - 1;
        let mut next = vec![BigUint::zero(); n + 1];
        for (b, slot) in next.iter_mut().enumerate().take(upper + 1).skip(1) {
            *slot = if i % 2 == 1 {
                &counts[b] + &counts[b - 1]
            } else {
                &counts[b] + &counts[b + 1]
            };
        }
        counts = next;
    }
    Ok(counts.into_iter().sum())
}

/// `α(1, …, 1)` and `α(n-2, n-1, n-2, …, n-2)`.
pub fn extremal_paths(d: &PlatDiagram) -> Result<(AllowablePath, AllowablePath)> {
    let (n, m) = (d.n(), d.m());
    if n <= 2 {
        return Err(Error::TwoBridge(n));
    }
    let left = AllowablePath::new(d, vec![1; m])?;
    let right = (1..=m)
        .map(|i| if i % 2 == 1 { n - 2 } else { n - 1 })
        .collect();
    let right = AllowablePath::new(d, right)?;
    Ok((left, right))
}
