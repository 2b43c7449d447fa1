//! Defective colourings of sparse graphs.
//!
//! A `(k, d)`-colouring gives every vertex one of `k` colours so that each
//! vertex has at most `d` neighbours of its own colour. The crate computes
//! such colourings (and list versions) for graphs excluding a `K*_{s,t}`
//! subgraph, a tree, or a dominant vertex over stars as a minor, and
//! returns a checkable certificate whenever the precondition fails. See
//! `examples/` for one program per capability.

pub mod bounds;
pub mod caps;
pub mod cli;
pub mod colouring;
pub mod corpus;
pub mod density;
pub mod error;
pub mod experiment;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod rational;
pub mod structure;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::Graph;
