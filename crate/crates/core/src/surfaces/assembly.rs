//! Explicit triangulations of tubed punctured spheres.
//!
//! Used to recount Euler characteristic, boundary circles and genus from
//! vertices, edges and faces instead of trusting the closed forms.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub boundary: usize,
    pub connected: bool,
    /// Every edge lies on one or two triangles.
    pub manifold: bool,
    /// `(2 - χ - b) / 2` for connected surfaces.
    pub genus: Option<u64>,
}

struct Complex {
    vertices: usize,
    triangles: Vec<[usize; 3]>,
}

impl Complex {
    fn fresh(&mut self, count: usize) -> Vec<usize> {
        let start = self.vertices;
        self.vertices += count;
        (start..self.vertices).collect()
    }

    /// Triangulated annulus between two disjoint vertex cycles.
    fn band(&mut self, a: &[usize], b: &[usize]) {
        let (p, q) = (a.len(), b.len());
        let (mut i, mut j) = (0, 0);
        while i < p || j < q {
            if i < p && (j == q || (i + 1) * q <= (j + 1) * p) {
                self.triangles.push([a[i], a[(i + 1) % p], b[j % q]]);
                i += 1;
            } else {
                self.triangles.push([a[i % p], b[j], b[(j + 1) % q]]);
                j += 1;
            }
        }
    }

    /// Glues a tube joining two boundary cycles, through a fresh middle ring.
    fn tube(&mut self, a: &[usize], b: &[usize]) {
        let middle = self.fresh(a.len());
        self.band(a, &middle);
        self.band(&middle, b);
    }

    fn counts(&self) -> CellCounts {
        let mut edge_faces: HashMap<(usize, usize), usize> = HashMap::new();
        for t in &self.triangles {
            for (u, v) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                *edge_faces.entry((u.min(v), u.max(v))).or_default() += 1;
            }
        }
        let mut used = vec![false; self.vertices];
        let mut all = UnionFind::<usize>::new(self.vertices);
        for t in &self.triangles {
            for &v in t {
                used[v] = true;
            }
            all.union(t[0], t[1]);
            all.union(t[1], t[2]);
        }
        let mut rims = UnionFind::<usize>::new(self.vertices);
        let mut on_rim = vec![false; self.vertices];
        for (&(u, v), _) in edge_faces.iter().filter(|(_, &c)| c == 1) {
            rims.union(u, v);
            on_rim[u] = true;
            on_rim[v] = true;
        }
        let mut rim_roots: Vec<usize> = (0..self.vertices)
            .filter(|&v| on_rim[v])
            .map(|v| rims.find(v))
            .collect();
        rim_roots.sort_unstable();
        rim_roots.dedup();

        let used_vertices: Vec<usize> = (0..self.vertices).filter(|&v| used[v]).collect();
        let connected = used_vertices
            .windows(2)
            .all(|w| all.equiv(w[0], w[1]));
        let vertices = used_vertices.len();
        let edges = edge_faces.len();
        let faces = self.triangles.len();
        let euler = vertices as i64 - edges as i64 + faces as i64;
        let boundary = rim_roots.len();
        let twice_genus = 2 - euler - boundary as i64;
        let genus = (connected && twice_genus >= 0 && twice_genus % 2 == 0)
            .then_some(twice_genus as u64 / 2);
        CellCounts {
            vertices,
            edges,
            faces,
            euler,
            boundary,
            connected,
            manifold: edge_faces.values().all(|&c| c <= 2),
            genus,
        }
    }
}

/// Sphere with `holes` punctures, tubed along the given puncture pairs.
///
/// The punctured sphere is a 3-row grid of squares with `holes - 1` interior
/// squares removed; its outer rim is the last puncture.
pub fn tubed_sphere(holes: usize, tubes: &[(usize, usize)]) -> CellCounts {
    assert!(holes >= 1);
    let width = 2 * holes - 1;
    let vertex = |c: usize, r: usize| r * (width + 1) + c;
    let mut complex = Complex {
        vertices: (width + 1) * 4,
        triangles: Vec::new(),
    };
    let is_hole = |c: usize, r: usize| r == 1 && c % 2 == 1 && c < width - 1;
    for r in 0..3 {
        for c in 0..width {
            if is_hole(c, r) {
                continue;
            }
            let (a, b) = (vertex(c, r), vertex(c + 1, r));
            let (d, e) = (vertex(c, r + 1), vertex(c + 1, r + 1));
            complex.triangles.push([a, b, e]);
            complex.triangles.push([a, e, d]);
        }
    }

    let mut rims: Vec<Vec<usize>> = (0..holes - 1)
        .map(|k| {
            let c = 2 * k + 1;
            vec![vertex(c, 1), vertex(c + 1, 1), vertex(c + 1, 2), vertex(c, 2)]
        })
        .collect();
    let mut outer: Vec<usize> = (0..=width).map(|c| vertex(c, 0)).collect();
    outer.extend((1..=3).map(|r| vertex(width, r)));
    outer.extend((0..width).rev().map(|c| vertex(c, 3)));
    outer.extend((1..=2).rev().map(|r| vertex(0, r)));
    rims.push(outer);

    for &(a, b) in tubes {
        let (ra, rb) = (rims[a].clone(), rims[b].clone());
        complex.tube(&ra, &rb);
    }
    complex.counts()
}
