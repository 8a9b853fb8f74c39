use std::collections::BTreeSet;
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::diagram::{PlatDiagram, TangleBox};
use crate::error::{Error, Result};
use crate::topology::{LinkTopology, Segment};

// Crossing ports, listed counterclockwise as drawn: TL, BL, BR, TR.
const TL: usize = 0;
const TR: usize = 1;
const BL: usize = 2;
const BR: usize = 3;
const CCW: [usize; 4] = [TL, BL, BR, TR];

fn port_vector(port: usize) -> (i64, i64) {
    match port {
        TL => (-1, 1),
        TR => (1, 1),
        BL => (-1, -1),
        _ => (1, -1),
    }
}

/// One crossing: edge labels counterclockwise from the incoming under-edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    pub labels: [usize; 4],
    /// `+1` for a right-handed crossing of the oriented strands.
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PDCode {
    pub crossings: Vec<Crossing>,
}

impl PDCode {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| i64::from(c.sign)).sum()
    }

    /// Every label in `1..=2c` occurs exactly twice.
    pub fn is_well_formed(&self) -> bool {
        let top = 2 * self.crossings.len();
        let mut seen = vec![0u8; top + 1];
        for c in &self.crossings {
            for &l in &c.labels {
                if l == 0 || l > top {
                    return false;
                }
                seen[l] += 1;
            }
        }
        seen[1..].iter().all(|&k| k == 2)
    }

    /// Components recovered from the code alone: labels `a, c` share the
    /// under strand and `b, d` the over strand of each `X(a, b, c, d)`.
    pub fn component_count(&self) -> usize {
        let top = 2 * self.crossings.len();
        let mut uf = UnionFind::<usize>::new(top + 1);
        for c in &self.crossings {
            let [a, b, cc, d] = c.labels;
            uf.union(a, cc);
            uf.union(b, d);
        }
        (1..=top).map(|l| uf.find(l)).collect::<BTreeSet<_>>().len()
    }
}

impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("PD[")?;
        for (k, c) in self.crossings.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let [a, b, cc, d] = c.labels;
            write!(f, "X({a},{b},{cc},{d})")?;
        }
        f.write_str("]")
    }
}

/// Ports of the drawn link: four per crossing, then one top and one bottom
/// terminal per strand position. Each port has a partner along a wire and a
/// partner through its crossing (or cap).
struct PortGraph {
    wire: Vec<usize>,
    inner: Vec<usize>,
    twists: Vec<i64>,
    upper_end: Vec<usize>,
}

impl PortGraph {
    fn build(d: &PlatDiagram) -> Result<Self> {
        let strands = d.strands();
        let crossings = usize::try_from(d.crossing_number()).map_err(|_| Error::Overflow)?;
        let top = |x: usize| 4 * crossings + x - 1;
        let bottom = |x: usize| 4 * crossings + strands + x - 1;
        let total = 4 * crossings + 2 * strands;
        let mut g = PortGraph {
            wire: vec![usize::MAX; total],
            inner: vec![usize::MAX; total],
            twists: Vec::with_capacity(crossings),
            upper_end: Vec::with_capacity((d.m() + 1) * strands),
        };
        let cap = |x: usize| if x % 2 == 1 { x + 1 } else { x - 1 };
        for x in 1..=strands {
            g.inner[top(x)] = top(cap(x));
            g.inner[bottom(x)] = bottom(cap(x));
        }
        let mut open: Vec<usize> = (1..=strands).map(top).collect();
        g.upper_end.extend_from_slice(&open);
        for i in 1..=d.m() {
            for (j, b) in d.row(i).iter().enumerate() {
                let a = match *b {
                    TangleBox::Twist(a) => a,
                    TangleBox::Rational { .. } => {
                        return Err(Error::UnsupportedBox {
                            row: i,
                            column: j + 1,
                            operation: "PD export",
                        })
                    }
                };
                let x = d.box_strand(i, j + 1);
                for _ in 0..a.unsigned_abs() {
                    let c = g.twists.len();
                    g.twists.push(a.signum());
                    g.link_wire(open[x - 1], 4 * c + TL);
                    g.link_wire(open[x], 4 * c + TR);
                    g.inner[4 * c + TL] = 4 * c + BR;
                    g.inner[4 * c + BR] = 4 * c + TL;
                    g.inner[4 * c + TR] = 4 * c + BL;
                    g.inner[4 * c + BL] = 4 * c + TR;
                    open[x - 1] = 4 * c + BL;
                    open[x] = 4 * c + BR;
                }
            }
            g.upper_end.extend_from_slice(&open);
        }
        for x in 1..=strands {
            g.link_wire(open[x - 1], bottom(x));
        }
        Ok(g)
    }

    fn link_wire(&mut self, a: usize, b: usize) {
        self.wire[a] = b;
        self.wire[b] = a;
    }

    fn crossings(&self) -> usize {
        self.twists.len()
    }
}

/// PD code of an all-twist diagram.
///
/// Components are numbered as in [`LinkTopology`] and traversed in that
/// order, each starting downward along its canonical segment. Labels run
/// consecutively along the traversal. In a box of positive twist the strand
/// from top-left to bottom-right passes over.
pub fn to_pd_code(d: &PlatDiagram) -> Result<PDCode> {
    let g = PortGraph::build(d)?;
    if g.crossings() == 0 {
        return Err(Error::NoCrossings);
    }
    let topology = LinkTopology::build(d);
    let strands = d.strands();
    let mut label = vec![0usize; 4 * g.crossings()];
    let mut came_in = vec![false; 4 * g.crossings()];
    let mut next_label = 0;

    for c in 0..topology.component_count() {
        let Segment { gap, x } = topology.canonical_segment(c);
        let start = g.upper_end[gap * strands + x - 1];
        // (entry port, exit port) of each crossing pass, in order.
        let mut passes = Vec::new();
        let mut cur = start;
        loop {
            let arrived = g.wire[cur];
            cur = g.inner[arrived];
            if arrived < 4 * g.crossings() {
                passes.push((arrived, cur));
            }
            if cur == start {
                break;
            }
        }
        if passes.is_empty() {
            return Err(Error::CrossingFreeComponent(c));
        }
        let base = next_label;
        let k = passes.len();
        for (step, &(entry, exit)) in passes.iter().enumerate() {
            label[entry] = base + step + 1;
            label[exit] = if step + 1 == k { base + 1 } else { base + step + 2 };
            came_in[entry] = true;
        }
        next_label += k;
    }

    let crossings = (0..g.crossings())
        .map(|c| {
            let port = |p: usize| 4 * c + p;
            let (over, under) = if g.twists[c] > 0 {
                ([TL, BR], [TR, BL])
            } else {
                ([TR, BL], [TL, BR])
            };
            let oriented = |pair: [usize; 2]| {
                if came_in[port(pair[0])] {
                    (pair[0], pair[1])
                } else {
                    (pair[1], pair[0])
                }
            };
            let (over_in, over_out) = oriented(over);
            let (under_in, under_out) = oriented(under);
            let direction = |from: usize, to: usize| {
                let (a, b) = (port_vector(from), port_vector(to));
                (b.0 - a.0, b.1 - a.1)
            };
            let o = direction(over_in, over_out);
            let u = direction(under_in, under_out);
            let sign = (o.0 * u.1 - o.1 * u.0).signum() as i8;
            let offset = CCW.iter().position(|&p| p == under_in).expect("port");
            let labels = std::array::from_fn(|k| label[port(CCW[(offset + k) % 4])]);
            Crossing { labels, sign }
        })
        .collect();
    Ok(PDCode { crossings })
}
