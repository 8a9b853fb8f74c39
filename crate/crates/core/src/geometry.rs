//! Planar coordinates for plat diagrams.
//!
//! Strand `x` sits at abscissa `x`. Band `g` spans `2g <= y <= 2g + 1` and row
//! `i` spans `2i - 1 <= y <= 2i`, with `y` growing downward. Caps are half
//! circles of radius 1/2 above band 0 and below band `m`. Inside a row every
//! box is drawn as the crossing of its two diagonals.

use crate::diagram::PlatDiagram;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Piece {
    Line(Point, Point),
    /// Half circle over `[left, left + 1]` bulging upward from `y`.
    TopCap { left: f64, y: f64 },
    /// Half circle over `[left, left + 1]` bulging downward from `y`.
    BottomCap { left: f64, y: f64 },
}

pub fn band_top(gap: usize) -> f64 {
    2.0 * gap as f64
}

pub fn row_top(row: usize) -> f64 {
    2.0 * row as f64 - 1.0
}

/// Every drawn piece of the link.
pub fn link_pieces(d: &PlatDiagram) -> Vec<Piece> {
    let (n, m) = (d.n(), d.m());
    let strands = d.strands();
    let mut pieces = Vec::new();
    for j in 1..=n {
        let left = (2 * j - 1) as f64;
        pieces.push(Piece::TopCap { left, y: 0.0 });
        pieces.push(Piece::BottomCap {
            left,
            y: band_top(m) + 1.0,
        });
    }
    for gap in 0..=m {
        let y = band_top(gap);
        for x in 1..=strands {
            let x = x as f64;
            pieces.push(Piece::Line(Point::new(x, y), Point::new(x, y + 1.0)));
        }
    }
    for i in 1..=m {
        let (top, bottom) = (row_top(i), row_top(i) + 1.0);
        let mut boxed = vec![false; strands + 2];
        for j in 1..=d.row_len(i) {
            let x = d.box_strand(i, j);
            boxed[x] = true;
            boxed[x + 1] = true;
            let (l, r) = (x as f64, x as f64 + 1.0);
            pieces.push(Piece::Line(Point::new(l, top), Point::new(r, bottom)));
            pieces.push(Piece::Line(Point::new(r, top), Point::new(l, bottom)));
        }
        for x in (1..=strands).filter(|&x| !boxed[x]) {
            let x = x as f64;
            pieces.push(Piece::Line(Point::new(x, top), Point::new(x, bottom)));
        }
    }
    pieces
}

/// Abscissa of a monotone arc in row `i` with `left_boxes` boxes on its left.
pub fn corridor_x(d: &PlatDiagram, i: usize, left_boxes: usize) -> f64 {
    if d.row_len(i) == 0 {
        return 1.5;
    }
    if left_boxes == 0 {
        d.box_strand(i, 1) as f64 - 0.5
    } else {
        d.box_strand(i, left_boxes) as f64 + 1.5
    }
}

/// Polyline of the monotone arc: vertical inside each row, straight across
/// each band, extended past the caps at both ends.
pub fn corridor_polyline(d: &PlatDiagram, entries: &[usize]) -> Vec<Point> {
    let m = d.m();
    let mut pts = Vec::with_capacity(2 * m + 2);
    let first = corridor_x(d, 1, entries[0]);
    pts.push(Point::new(first, -1.0));
    for i in 1..=m {
        let x = corridor_x(d, i, entries[i - 1]);
        pts.push(Point::new(x, row_top(i)));
        pts.push(Point::new(x, row_top(i) + 1.0));
    }
    let last = pts.last().expect("m >= 1").x;
    pts.push(Point::new(last, band_top(m) + 2.0));
    pts
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn segments_cross(p: Point, q: Point, a: Point, b: Point) -> bool {
    let d1 = orient(p, q, a);
    let d2 = orient(p, q, b);
    let d3 = orient(a, b, p);
    let d4 = orient(a, b, q);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

fn segment_meets_half_circle(p: Point, q: Point, left: f64, y: f64, upward: bool) -> usize {
    let (cx, r) = (left + 0.5, 0.5);
    let (dx, dy) = (q.x - p.x, q.y - p.y);
    let (fx, fy) = (p.x - cx, p.y - y);
    let a = dx * dx + dy * dy;
    let b = 2.0 * (fx * dx + fy * dy);
    let c = fx * fx + fy * fy - r * r;
    let disc = b * b - 4.0 * a * c;
    if a == 0.0 || disc <= 0.0 {
        return 0;
    }
    let root = disc.sqrt();
    [(-b - root) / (2.0 * a), (-b + root) / (2.0 * a)]
        .into_iter()
        .filter(|t| (0.0..=1.0).contains(t))
        .filter(|t| {
            let py = p.y + t * dy;
            if upward {
                py < y
            } else {
                py > y
            }
        })
        .count()
}

/// Number of transverse intersections between a polyline and the link.
pub fn intersections(polyline: &[Point], pieces: &[Piece]) -> usize {
    polyline
        .windows(2)
        .map(|w| {
            let (p, q) = (w[0], w[1]);
            pieces
                .iter()
                .map(|piece| match *piece {
                    Piece::Line(a, b) => usize::from(segments_cross(p, q, a, b)),
                    Piece::TopCap { left, y } => segment_meets_half_circle(p, q, left, y, true),
                    Piece::BottomCap { left, y } => segment_meets_half_circle(p, q, left, y, false),
                })
                .sum::<usize>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertical_line_through_one_cap() {
        let pieces = [Piece::TopCap { left: 3.0, y: 0.0 }, Piece::TopCap { left: 1.0, y: 0.0 }];
        let line = [Point::new(3.5, -1.0), Point::new(3.5, 1.0)];
        assert_eq!(intersections(&line, &pieces), 1);
        let line = [Point::new(2.5, -1.0), Point::new(2.5, 1.0)];
        assert_eq!(intersections(&line, &pieces), 0);
    }

    #[test]
    fn diagonal_crosses_strands_between() {
        let pieces: Vec<_> = (1..=6)
            .map(|x| Piece::Line(Point::new(x as f64, 2.0), Point::new(x as f64, 3.0)))
            .collect();
        let line = [Point::new(3.5, 2.0), Point::new(6.5, 3.0)];
        assert_eq!(intersections(&line, &pieces), 3);
    }

    #[test]
    fn piece_counts() {
        let d = PlatDiagram::from_twists(3, 1, vec![vec![3, 5]]).unwrap();
        let pieces = link_pieces(&d);
        // 6 caps, 12 band segments, 4 box diagonals, 2 straight strands.
        assert_eq!(pieces.len(), 24);
    }
}
