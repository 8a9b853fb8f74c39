//! Plat diagrams of links, their allowable spheres, and the closed surfaces
//! obtained by tubing those spheres.
//!
//! A diagram is read from JSON ([`PlatDiagram::from_json`]), checked against
//! the box conditions ([`PlatDiagram::check_hypotheses`]), and then used to
//! enumerate allowable paths ([`paths`]), decompose the link along a sphere
//! ([`surfaces::decompose`]), emit certificates ([`certify`],
//! [`certify_haken`]) or export to other formats ([`export`]).

pub mod certificate;
pub mod diagram;
pub mod error;
pub mod export;
pub mod geometry;
pub mod paths;
pub mod surfaces;
pub mod surgery;
pub mod tangle;
pub mod topology;

pub use certificate::{certify, Certificate, CertificateMode, Citation, Conclusion, Outcome, Refusal};
pub use diagram::{
    random_diagram, Condition, HypothesisReport, PlatDiagram, Strictness, TangleBox, Verdict, Witness,
};
pub use error::{Error, Result};
pub use export::{render, to_braid_word, to_pd_code, BraidWord, PDCode, RenderFormat};
pub use paths::{
    check_allowable, count_allowable, crossing_count_oracle, enumerate_allowable, extremal_paths,
    AllowablePath,
};
pub use surfaces::{decompose, surface_invariants, SphereDecomposition, SurfaceKind, SurfaceReport};
pub use surgery::{
    certify_haken, direct_coverage_check, is_totally_nontrivial, parity_criterion, Slope, SurgerySpec,
};
pub use tangle::{
    canonical_expansion, continued_fraction, incompressibility_class, pairing, Fraction,
    IncompressibilityClass, Pairing,
};
pub use topology::{braid_permutation, closure_component_count, LinkTopology, Segment, Side};
