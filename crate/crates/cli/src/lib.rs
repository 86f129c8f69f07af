//! Document formats and report rendering for the near-ring CLI.

pub mod document;
pub mod render;
