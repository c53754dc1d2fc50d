//! File formats, Graphviz export, text rendering and the command-line
//! interface for [`borcherds_rc`].

pub mod cli;
pub mod dot;
pub mod format;
pub mod render;
pub mod word;
