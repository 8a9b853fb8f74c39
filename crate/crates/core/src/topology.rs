//! Strand-segment graph of a plat closure.
//!
//! A segment `(gap, x)` is the piece of strand position `x` lying in the
//! horizontal band `gap`: band 0 is above row 1, band `g` lies between rows
//! `g` and `g + 1`, band `m` is below row `m`. Rows, caps and boxes glue the
//! segments into closed curves, one per link component.

use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::diagram::{PlatDiagram, TangleBox};
use crate::error::{Error, Result};
use crate::paths::AllowablePath;
use crate::tangle::{pairing, Pairing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Segment {
    pub gap: usize,
    pub x: usize,
}

/// One gluing made inside a row.
///
/// `Through` joins the bottom of `(i - 1, upper)` to the top of `(i, lower)`.
/// `UpperCap` and `LowerCap` are the horizontal arcs of a `0/1` box, joining
/// the bottoms of `(i - 1, x)`, `(i - 1, x + 1)` or the tops of `(i, x)`,
/// `(i, x + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RowLink {
    Through { upper: usize, lower: usize },
    UpperCap(usize),
    LowerCap(usize),
}

pub(crate) fn row_links(d: &PlatDiagram, i: usize) -> Vec<RowLink> {
    let strands = d.strands();
    let mut links = Vec::with_capacity(strands);
    let mut x = 1;
    let mut boxes = d.row(i).iter().enumerate().peekable();
    while x <= strands {
        let starts_box = boxes
            .peek()
            .is_some_and(|&(j, _)| d.box_strand(i, j + 1) == x);
        if !starts_box {
            links.push(RowLink::Through { upper: x, lower: x });
            x += 1;
            continue;
        }
        let (_, b) = boxes.next().expect("peeked");
        match pairing(b.fraction()) {
            Pairing::ThroughIdentity => {
                links.push(RowLink::Through { upper: x, lower: x });
                links.push(RowLink::Through { upper: x + 1, lower: x + 1 });
            }
            Pairing::ThroughSwap => {
                links.push(RowLink::Through { upper: x, lower: x + 1 });
                links.push(RowLink::Through { upper: x + 1, lower: x });
            }
            Pairing::Caps => {
                links.push(RowLink::UpperCap(x));
                links.push(RowLink::LowerCap(x));
            }
        }
        x += 2;
    }
    links
}

/// Connected components of the plat closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkTopology {
    n: usize,
    m: usize,
    labels: Vec<usize>,
    count: usize,
}

impl LinkTopology {
    pub fn build(d: &PlatDiagram) -> Self {
        let (n, m) = (d.n(), d.m());
        let strands = 2 * n;
        let id = |gap: usize, x: usize| gap * strands + x - 1;
        let mut uf = UnionFind::<usize>::new((m + 1) * strands);

        for j in 1..=n {
            uf.union(id(0, 2 * j - 1), id(0, 2 * j));
            uf.union(id(m, 2 * j - 1), id(m, 2 * j));
        }
        for i in 1..=m {
            for link in row_links(d, i) {
                match link {
                    RowLink::Through { upper, lower } => uf.union(id(i - 1, upper), id(i, lower)),
                    RowLink::UpperCap(x) => uf.union(id(i - 1, x), id(i - 1, x + 1)),
                    RowLink::LowerCap(x) => uf.union(id(i, x), id(i, x + 1)),
                };
            }
        }

        // Ids are handed out in order of each component's smallest segment.
        let roots = uf.into_labeling();
        let mut root_label = vec![usize::MAX; roots.len()];
        let mut labels = Vec::with_capacity(roots.len());
        let mut count = 0;
        for &r in &roots {
            if root_label[r] == usize::MAX {
                root_label[r] = count;
                count += 1;
            }
            labels.push(root_label[r]);
        }
        LinkTopology {
            n,
            m,
            labels,
            count,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn component_count(&self) -> usize {
        self.count
    }

    pub fn segment_count(&self) -> usize {
        self.labels.len()
    }

    pub fn component(&self, s: Segment) -> usize {
        self.labels[s.gap * 2 * self.n + s.x - 1]
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        let strands = 2 * self.n;
        (0..self.labels.len()).map(move |k| Segment {
            gap: k / strands,
            x: k % strands + 1,
        })
    }

    pub fn segments_of(&self, component: usize) -> Vec<Segment> {
        self.segments()
            .filter(|&s| self.component(s) == component)
            .collect()
    }

    /// Smallest segment of a component in `(gap, x)` order.
    pub fn canonical_segment(&self, component: usize) -> Segment {
        self.segments()
            .find(|&s| self.component(s) == component)
            .expect("component ids are dense")
    }

    /// Component of the top cap joining `(2j - 1, 2j)`.
    pub fn top_cap_component(&self, j: usize) -> usize {
        self.component(Segment { gap: 0, x: 2 * j - 1 })
    }

    pub fn bottom_cap_component(&self, j: usize) -> usize {
        self.component(Segment {
            gap: self.m,
            x: 2 * j - 1,
        })
    }

    fn check_path(&self, path: &AllowablePath) -> Result<()> {
        if path.n() != self.n || path.entries().len() != self.m {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }

    /// Component of each of the `m + 1` link pieces crossed by the sphere,
    /// top cap first.
    pub fn crossing_components(&self, path: &AllowablePath) -> Result<Vec<usize>> {
        self.check_path(path)?;
        Ok(path
            .crossing_segments()
            .into_iter()
            .map(|s| self.component(s))
            .collect())
    }

    pub fn components_meeting_sphere(&self, path: &AllowablePath) -> Result<BTreeSet<usize>> {
        Ok(self.crossing_components(path)?.into_iter().collect())
    }

    /// Components lying entirely on one side of the sphere.
    pub fn components_strictly_beside(
        &self,
        path: &AllowablePath,
        side: Side,
    ) -> Result<BTreeSet<usize>> {
        let meeting = self.components_meeting_sphere(path)?;
        let mut all_on_side = vec![true; self.count];
        for s in self.segments() {
            if path.segment_side(s) != Some(side) {
                all_on_side[self.component(s)] = false;
            }
        }
        Ok((0..self.count)
            .filter(|c| all_on_side[*c] && !meeting.contains(c))
            .collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Permutation of strand positions induced by the boxes, top to bottom.
///
/// Entry `x - 1` is the bottom position reached by the strand entering at
/// top position `x`. Odd twists transpose their two strands; even twists and
/// `ThroughIdentity` rational boxes do not.
pub fn braid_permutation(d: &PlatDiagram) -> Result<Vec<usize>> {
    let strands = d.strands();
    let mut occupant: Vec<usize> = (1..=strands).collect();
    for (i, j, b) in d.boxes() {
        let swaps = match b {
            TangleBox::Twist(a) => a % 2 != 0,
            TangleBox::Rational { .. } => match pairing(b.fraction()) {
                Pairing::ThroughSwap => true,
                Pairing::ThroughIdentity => false,
                Pairing::Caps => {
                    return Err(Error::UnsupportedBox {
                        row: i,
                        column: j,
                        operation: "braid permutation",
                    })
                }
            },
        };
        if swaps {
            let x = d.box_strand(i, j);
            occupant.swap(x - 1, x);
        }
    }
    let mut perm = vec![0; strands];
    for (pos, &strand) in occupant.iter().enumerate() {
        perm[strand - 1] = pos + 1;
    }
    Ok(perm)
}

/// Components of the plat closure of a braid with permutation `perm`.
///
/// Top caps give the involution `c`, bottom caps pulled back to the top give
/// `perm⁻¹ c perm`; each closure component is an alternating cycle of the two
/// and contributes two cycles to their composite.
pub fn closure_component_count(perm: &[usize]) -> usize {
    let k = perm.len();
    let cap = |x: usize| if x % 2 == 1 { x + 1 } else { x - 1 };
    let mut inverse = vec![0; k];
    for (x, &y) in perm.iter().enumerate() {
        inverse[y - 1] = x + 1;
    }
    let bottom = |x: usize| inverse[cap(perm[x - 1]) - 1];
    let mut seen = vec![false; k + 1];
    let mut cycles = 0;
    for start in 1..=k {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = cap(bottom(x));
        }
    }
    cycles / 2
}
