//! Edge and total coloring classification for split graphs of stretch index 2.

pub mod batch;
pub mod coloring;
pub mod error;
pub mod generator;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod overfull;
pub mod report;
pub mod sigma2;
pub mod split;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
