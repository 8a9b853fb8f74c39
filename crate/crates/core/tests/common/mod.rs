//! Test-side oracles. None of these reuse the library's tracing, union-find
//! or step-rule code; they re-derive the same facts by slower, more literal
//! means.

#![allow(dead_code)]

use platsurf::diagram::row_len;
use platsurf::{PlatDiagram, TangleBox};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Endpoint pairing of a tangle, found by building it from the ∞ tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Traced {
    Identity,
    Swap,
    Caps,
}

/// Builds the tangle with continued-fraction terms `terms` (innermost first):
/// each term rotates the current tangle a quarter turn and then adds that
/// many twists on its right endpoints.
pub fn trace_pairing(terms: &[i64]) -> Traced {
    let mut t = Traced::Identity;
    for &a in terms {
        t = match t {
            Traced::Identity => Traced::Caps,
            Traced::Caps => Traced::Identity,
            Traced::Swap => Traced::Swap,
        };
        if a % 2 != 0 {
            t = match t {
                Traced::Caps => Traced::Swap,
                Traced::Swap => Traced::Caps,
                Traced::Identity => Traced::Identity,
            };
        }
    }
    t
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `t_k + 1/(t_{k-1} + … + 1/t_1)` as a reduced `(p, q)` with `q >= 0`,
/// evaluated outermost first by recursion on exact rationals.
pub fn exact_continued_fraction(terms: &[i64]) -> (i128, i128) {
    fn eval(terms: &[i64]) -> (i128, i128) {
        match terms.split_last() {
            None => (1, 0),
            Some((&t, rest)) => {
                let (p, q) = eval(rest);
                // t + 1/(p/q) = t + q/p
                let (num, den) = (t as i128 * p + q, p);
                let g = gcd(num, den).max(1);
                (num / g, den / g)
            }
        }
    }
    let (p, q) = eval(terms);
    let (p, q) = if q < 0 || (q == 0 && p < 0) { (-p, -q) } else { (p, q) };
    if q == 0 {
        (1, 0)
    } else {
        (p, q)
    }
}

/// Pairing of a box: Identity joins each upper end to the lower end below
/// it, Swap crosses them, Caps joins the two upper and the two lower ends.
pub fn box_pairing(b: &TangleBox) -> Traced {
    match *b {
        TangleBox::Twist(a) => trace_pairing(&[a, 0]),
        TangleBox::Rational { p, q } => {
            trace_pairing(&platsurf::canonical_expansion(platsurf::Fraction::new(p, q).unwrap()))
        }
    }
}

/// Box of row `i` covering strand `x`, as `(left strand, pairing)`.
fn box_at(d: &PlatDiagram, i: usize, x: usize) -> Option<(usize, Traced)> {
    let first = if i % 2 == 1 { 2 } else { 1 };
    if x < first {
        return None;
    }
    let j = (x - first) / 2 + 1;
    if j > d.row_len(i) {
        return None;
    }
    let left = first + 2 * (j - 1);
    Some((left, box_pairing(d.get(i, j))))
}

fn cap_partner(x: usize) -> usize {
    if x % 2 == 1 {
        x + 1
    } else {
        x - 1
    }
}

/// One step of a walk along the link: position `(gap, x)` and direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Walker {
    pub gap: usize,
    pub x: usize,
    pub down: bool,
}

/// What happened between two consecutive segments of a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Via {
    TopCap(usize),
    BottomCap(usize),
    Row(usize),
}

/// Moves to the next segment, reporting how.
pub fn step(d: &PlatDiagram, w: Walker) -> (Walker, Via) {
    let m = d.m();
    if w.down {
        if w.gap == m {
            let x = cap_partner(w.x);
            return (Walker { gap: m, x, down: false }, Via::BottomCap(w.x.min(x)));
        }
        let i = w.gap + 1;
        let next = match box_at(d, i, w.x) {
            None => Walker { gap: i, x: w.x, down: true },
            Some((_, Traced::Identity)) => Walker { gap: i, x: w.x, down: true },
            Some((l, Traced::Swap)) => Walker { gap: i, x: 2 * l + 1 - w.x, down: true },
            Some((l, Traced::Caps)) => Walker { gap: w.gap, x: 2 * l + 1 - w.x, down: false },
        };
        (next, Via::Row(i))
    } else {
        if w.gap == 0 {
            let x = cap_partner(w.x);
            return (Walker { gap: 0, x, down: true }, Via::TopCap(w.x.min(x)));
        }
        let i = w.gap;
        let next = match box_at(d, i, w.x) {
            None => Walker { gap: i - 1, x: w.x, down: false },
            Some((_, Traced::Identity)) => Walker { gap: i - 1, x: w.x, down: false },
            Some((l, Traced::Swap)) => Walker { gap: i - 1, x: 2 * l + 1 - w.x, down: false },
            Some((l, Traced::Caps)) => Walker { gap: i, x: 2 * l + 1 - w.x, down: true },
        };
        (next, Via::Row(i))
    }
}

/// Every component as the cyclic list of walker states met, starting from
/// the smallest unvisited segment heading down.
pub fn walk_components(d: &PlatDiagram) -> Vec<Vec<(Walker, Via)>> {
    let strands = d.strands();
    let mut seen = vec![false; (d.m() + 1) * strands];
    let id = |g: usize, x: usize| g * strands + x - 1;
    let mut out = Vec::new();
    for gap in 0..=d.m() {
        for x in 1..=strands {
            if seen[id(gap, x)] {
                continue;
            }
            let start = Walker { gap, x, down: true };
            let mut w = start;
            let mut comp = Vec::new();
            loop {
                seen[id(w.gap, w.x)] = true;
                let (next, via) = step(d, w);
                comp.push((w, via));
                w = next;
                if w == start {
                    break;
                }
                assert!(comp.len() <= 4 * seen.len(), "walk did not close");
            }
            out.push(comp);
        }
    }
    out
}

/// Permutation of strand positions: follow each top strand straight down,
/// swapping through odd boxes.
pub fn walk_permutation(d: &PlatDiagram) -> Vec<usize> {
    (1..=d.strands())
        .map(|x| {
            let mut pos = x;
            for i in 1..=d.m() {
                if let Some((l, t)) = box_at(d, i, pos) {
                    assert_ne!(t, Traced::Caps);
                    if t == Traced::Swap {
                        pos = 2 * l + 1 - pos;
                    }
                }
            }
            pos
        })
        .collect()
}

pub fn position(row: usize, a: usize) -> usize {
    2 * a + row % 2
}

/// Intersections of a monotone corridor with the link, counted from the
/// position arithmetic: two caps plus the strands between consecutive
/// corridor positions.
pub fn arithmetic_crossings(entries: &[usize]) -> usize {
    let pos: Vec<usize> = entries
        .iter()
        .enumerate()
        .map(|(k, &a)| position(k + 1, a))
        .collect();
    2 + pos.windows(2).map(|w| w[0].abs_diff(w[1])).sum::<usize>()
}

/// Every entry vector with `0 <= a_i <= row length`.
pub fn all_vectors(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 1..=m {
        let len = row_len(n, i);
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=len).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn bounds_hold(n: usize, entries: &[usize]) -> bool {
    entries
        .iter()
        .enumerate()
        .all(|(k, &a)| a >= 1 && a < row_len(n, k + 1))
}

/// Allowable paths by brute force over all bounded vectors.
pub fn brute_force_allowable(n: usize, m: usize) -> Vec<Vec<usize>> {
    all_vectors(n, m)
        .into_iter()
        .filter(|v| bounds_hold(n, v) && arithmetic_crossings(v) == m + 1)
        .collect()
}

/// Punctures met along each component, in walking order.
///
/// Puncture 0 is the crossed top cap, puncture `g` the crossed segment of band
/// `g`, puncture `m` the crossed bottom cap.
pub fn puncture_cycles(d: &PlatDiagram, entries: &[usize]) -> Vec<Vec<usize>> {
    let m = d.m();
    let pos: Vec<usize> = entries
        .iter()
        .enumerate()
        .map(|(k, &a)| position(k + 1, a))
        .collect();
    let crossed: Vec<usize> = (1..m).map(|g| (pos[g - 1] + pos[g]).div_ceil(2)).collect();
    walk_components(d)
        .into_iter()
        .map(|comp| {
            let mut events = Vec::new();
            for (w, via) in comp {
                if w.gap >= 1 && w.gap < m && w.x == crossed[w.gap - 1] {
                    events.push(w.gap);
                }
                match via {
                    Via::TopCap(l) if l == pos[0] => events.push(0),
                    Via::BottomCap(l) if l == pos[m - 1] => events.push(m),
                    _ => {}
                }
            }
            events
        })
        .collect()
}

/// Arcs of both tangles together: consecutive punctures along each component.
pub fn arcs_from_walk(d: &PlatDiagram, entries: &[usize]) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for cycle in puncture_cycles(d, entries) {
        let k = cycle.len();
        for t in 0..k {
            let (a, b) = (cycle[t], cycle[(t + 1) % k]);
            arcs.push((a.min(b), a.max(b)));
        }
    }
    arcs.sort_unstable();
    arcs
}

/// Euler characteristic, boundary count and genus of a sphere with `holes`
/// punctures tubed along `tubes`, from a minimal cell structure: one vertex
/// and one loop per puncture, a spanning tree of `holes - 1` edges, one
/// face; each tube adds one edge and one square.
pub fn ribbon_surface(holes: usize, tubes: &[(usize, usize)]) -> (i64, usize, Option<u64>) {
    let v = holes as i64;
    let e = holes as i64 + (holes as i64 - 1) + tubes.len() as i64;
    let f = 1 + tubes.len() as i64;
    let euler = v - e + f;
    let mut used = vec![0usize; holes];
    for &(a, b) in tubes {
        used[a] += 1;
        used[b] += 1;
    }
    if used.iter().any(|&u| u > 1) {
        return (euler, 0, None);
    }
    let boundary = used.iter().filter(|&&u| u == 0).count();
    let twice = 2 - euler - boundary as i64;
    (euler, boundary, (twice >= 0 && twice % 2 == 0).then_some(twice as u64 / 2))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Odd `m` in `1..=max_m`.
pub fn odd(rng: &mut ChaCha8Rng, max_m: usize) -> usize {
    2 * rng.gen_range(0..=(max_m - 1) / 2) + 1
}

/// Arbitrary all-twist diagram, zeros allowed everywhere.
pub fn any_twist_diagram(rng: &mut ChaCha8Rng, n_range: (usize, usize), max_m: usize, max_twist: i64) -> PlatDiagram {
    let n = rng.gen_range(n_range.0..=n_range.1);
    let m = odd(rng, max_m);
    let rows = (1..=m)
        .map(|i| (0..row_len(n, i)).map(|_| rng.gen_range(-max_twist..=max_twist)).collect())
        .collect();
    PlatDiagram::from_twists(n, m, rows).unwrap()
}

/// Strict-valid diagram from the library generator with random shape.
pub fn strict_diagram(rng: &mut ChaCha8Rng, n_range: (usize, usize), m_range: (usize, usize)) -> PlatDiagram {
    let n = rng.gen_range(n_range.0..=n_range.1);
    let m = loop {
        let m = odd(rng, m_range.1);
        if m >= m_range.0 {
            break m;
        }
    };
    let seed = rng.gen();
    platsurf::random_diagram(n, m, 7, seed, false).unwrap()
}
