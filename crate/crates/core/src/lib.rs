pub mod bipartization;
pub mod certificate;
pub mod dimacs;
pub mod error;
mod flow;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod oracles;
pub mod reductions;
pub mod vcl1;
pub mod vcu1;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
