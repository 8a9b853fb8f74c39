//! Cutting the link along an allowable sphere and the surfaces `P`, `F`, `F′`.
//!
//! `P` is the sphere minus the `m + 1` punctures. `F` (resp. `F′`) is `P`
//! tubed along the `(m + 1) / 2` arcs of the tangle on the left (resp. right).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::diagram::PlatDiagram;
use crate::error::{Error, Result};
use crate::paths::AllowablePath;
use crate::topology::{row_links, LinkTopology, RowLink, Segment, Side};

mod assembly;

pub use assembly::CellCounts;

/// What one side of the sphere holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideSummary {
    /// Arcs of the side tangle as pairs of puncture indices, sorted.
    /// Puncture 0 is the top cap, puncture `g` the band `g` crossing and
    /// puncture `m` the bottom cap.
    pub arcs: Vec<(usize, usize)>,
    /// Closed link components lying on this side.
    pub loops: usize,
    pub boxes: BTreeSet<(usize, usize)>,
    pub components: BTreeSet<usize>,
}

impl SideSummary {
    fn new() -> Self {
        SideSummary {
            arcs: Vec::new(),
            loops: 0,
            boxes: BTreeSet::new(),
            components: BTreeSet::new(),
        }
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereDecomposition {
    #[serde(serialize_with = "crate::certificate::display")]
    pub path: AllowablePath,
    pub left: SideSummary,
    pub right: SideSummary,
    /// Component of each puncture, top cap first.
    pub crossing_components: Vec<usize>,
}

impl SphereDecomposition {
    pub fn side(&self, side: Side) -> &SideSummary {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn m(&self) -> usize {
        self.path.m()
    }
}

const TOP: usize = 0;
const BOTTOM: usize = 1;

/// Splits the link along the sphere of `path` and traces both tangles.
///
/// Every segment contributes a top and a bottom half; the sphere cuts the
/// crossed band segments between their halves and the two crossed caps in
/// the middle. Each side's pieces are then followed end to end, so arcs and
/// loops are found by traversal rather than by formula.
pub fn decompose(d: &PlatDiagram, path: &AllowablePath) -> Result<SphereDecomposition> {
    if path.n() != d.n() || path.m() != d.m() {
        return Err(Error::ShapeMismatch);
    }
    let topology = LinkTopology::build(d);
    let (n, m) = (d.n(), d.m());
    let strands = 2 * n;
    let pos = path.positions();
    let seg = |gap: usize, x: usize| gap * strands + x - 1;
    let half = |gap: usize, x: usize, h: usize| 2 * seg(gap, x) + h;
    let node_count = 2 * (m + 1) * strands;

    let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(2); node_count];
    let mut join = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };

    let mut crossed = vec![false; (m + 1) * strands];
    for gap in 1..m {
        crossed[seg(gap, path.crossed_strand(gap))] = true;
    }
    for (s, _) in crossed.iter().enumerate().filter(|(_, &c)| !c) {
        join(2 * s + TOP, 2 * s + BOTTOM);
    }
    for j in 1..=n {
        if 2 * j - 1 != pos[0] {
            join(half(0, 2 * j - 1, TOP), half(0, 2 * j, TOP));
        }
        if 2 * j - 1 != pos[m - 1] {
            join(half(m, 2 * j - 1, BOTTOM), half(m, 2 * j, BOTTOM));
        }
    }
    for i in 1..=m {
        for link in row_links(d, i) {
            match link {
                RowLink::Through { upper, lower } => {
                    join(half(i - 1, upper, BOTTOM), half(i, lower, TOP))
                }
                RowLink::UpperCap(x) => join(half(i - 1, x, BOTTOM), half(i - 1, x + 1, BOTTOM)),
                RowLink::LowerCap(x) => join(half(i, x, TOP), half(i, x + 1, TOP)),
            }
        }
    }

    // Cut ends: (node, puncture, side).
    let mut ends = vec![
        (half(0, pos[0], TOP), 0, Side::Left),
        (half(0, pos[0] + 1, TOP), 0, Side::Right),
    ];
    for gap in 1..m {
        let c = path.crossed_strand(gap);
        let (top_side, bottom_side) = if path.moves_right(gap) {
            (Side::Right, Side::Left)
        } else {
            (Side::Left, Side::Right)
        };
        ends.push((half(gap, c, TOP), gap, top_side));
        ends.push((half(gap, c, BOTTOM), gap, bottom_side));
    }
    ends.push((half(m, pos[m - 1], BOTTOM), m, Side::Left));
    ends.push((half(m, pos[m - 1] + 1, BOTTOM), m, Side::Right));

    let node_side = |node: usize| -> Side {
        let s = node / 2;
        let segment = Segment {
            gap: s / strands,
            x: s % strands + 1,
        };
        if let Some(side) = path.segment_side(segment) {
            return side;
        }
        if let Some(&(_, _, side)) = ends.iter().find(|&&(e, _, _)| e == node) {
            return side;
        }
        // Remaining halves of a crossed cap's segments follow their cap end.
        let p = if segment.gap == 0 { pos[0] } else { pos[m - 1] };
        if segment.x == p {
            Side::Left
        } else {
            Side::Right
        }
    };

    for (k, list) in adj.iter().enumerate() {
        let expected = if ends.iter().any(|&(e, _, _)| e == k) { 1 } else { 2 };
        if list.len() != expected {
            return Err(Error::Inconsistent(format!(
                "half segment {k} has degree {}, expected {expected}",
                list.len()
            )));
        }
    }

    let mut left = SideSummary::new();
    let mut right = SideSummary::new();
    let mut visited = vec![false; node_count];

    let walk = |start: usize, visited: &mut Vec<bool>| -> Vec<usize> {
        let mut nodes = vec![start];
        visited[start] = true;
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = adj[cur].iter().copied().find(|&v| v != prev && !visited[v]);
            match next {
                Some(v) => {
                    visited[v] = true;
                    nodes.push(v);
                    prev = cur;
                    cur = v;
                }
                None => return nodes,
            }
        }
    };

    for &(start, puncture, side) in &ends {
        if visited[start] {
            continue;
        }
        let nodes = walk(start, &mut visited);
        let last = *nodes.last().expect("walk includes start");
        let &(_, other, other_side) = ends
            .iter()
            .find(|&&(e, _, _)| e == last)
            .ok_or_else(|| Error::Inconsistent("arc does not end on the sphere".into()))?;
        if other_side != side || nodes.iter().any(|&v| node_side(v) != side) {
            return Err(Error::Inconsistent(format!(
                "arc from puncture {puncture} leaves its side"
            )));
        }
        let summary = if side == Side::Left { &mut left } else { &mut right };
        summary.arcs.push((puncture.min(other), puncture.max(other)));
        summary.components.insert(topology.component(segment_of(start, strands)));
    }

    for start in 0..node_count {
        if visited[start] {
            continue;
        }
        let nodes = walk(start, &mut visited);
        let side = node_side(start);
        if nodes.iter().any(|&v| node_side(v) != side) {
            return Err(Error::Inconsistent("closed loop meets the sphere".into()));
        }
        let summary = if side == Side::Left { &mut left } else { &mut right };
        summary.loops += 1;
        summary.components.insert(topology.component(segment_of(start, strands)));
    }

    for (i, &a) in path.entries().iter().enumerate() {
        for j in 1..=d.row_len(i + 1) {
            let target = if j <= a { &mut left } else { &mut right };
            target.boxes.insert((i + 1, j));
        }
    }
    left.arcs.sort_unstable();
    right.arcs.sort_unstable();

    Ok(SphereDecomposition {
        path: path.clone(),
        left,
        right,
        crossing_components: topology.crossing_components(path)?,
    })
}

fn segment_of(node: usize, strands: usize) -> Segment {
    let s = node / 2;
    Segment {
        gap: s / strands,
        x: s % strands + 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SurfaceKind {
    #[serde(rename = "P")]
    Planar,
    #[serde(rename = "F")]
    LeftTubed,
    #[serde(rename = "F'")]
    RightTubed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub kind: SurfaceKind,
    pub euler: i64,
    pub genus: u64,
    pub boundary: usize,
    pub closed: bool,
    /// Torus components of the boundary of that side's tangle space, one per
    /// closed loop there; never part of the tubed surface.
    pub extra_tori: usize,
    /// The same invariants recounted on an explicit triangulation.
    pub assembled: CellCounts,
}

impl SurfaceReport {
    /// Closed form and assembly agree.
    pub fn consistent(&self) -> bool {
        self.assembled.euler == self.euler
            && self.assembled.boundary == self.boundary
            && self.assembled.genus == Some(self.genus)
            && self.assembled.connected
    }
}

/// Reports for `P`, `F` and `F′`, in that order.
pub fn surface_invariants(dec: &SphereDecomposition) -> [SurfaceReport; 3] {
    let m = dec.m();
    let euler = 1 - m as i64;
    let planar = SurfaceReport {
        kind: SurfaceKind::Planar,
        euler,
        genus: 0,
        boundary: m + 1,
        closed: false,
        extra_tori: 0,
        assembled: assembly::tubed_sphere(m + 1, &[]),
    };
    let tubed = |kind, side: &SideSummary| SurfaceReport {
        kind,
        euler,
        genus: (m as u64).div_ceil(2),
        boundary: 0,
        closed: true,
        extra_tori: side.loops,
        assembled: assembly::tubed_sphere(m + 1, &side.arcs),
    };
    [
        planar,
        tubed(SurfaceKind::LeftTubed, &dec.left),
        tubed(SurfaceKind::RightTubed, &dec.right),
    ]
}
