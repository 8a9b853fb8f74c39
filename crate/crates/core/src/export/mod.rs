//! Braid words, PD codes and drawings.

mod braid;
mod pd;
mod render;

pub use braid::{to_braid_word, BraidLetter, BraidWord};
pub use pd::{to_pd_code, Crossing, PDCode};
pub use render::{render, RenderFormat};
