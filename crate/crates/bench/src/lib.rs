//! Fixed inputs shared by the benchmarks.

use platsurf::{random_diagram, PlatDiagram};

/// A strict-valid diagram of the given shape, identical across runs.
pub fn fixture(n: usize, m: usize) -> PlatDiagram {
    random_diagram(n, m, 9, (n * 1000 + m) as u64, true).expect("valid shape")
}
