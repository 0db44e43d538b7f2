//! Face Cover Number kernelization over SPR-trees.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod cover;
pub mod decomposition;
pub mod embedding;
pub mod graph;
pub mod harness;
pub mod kernelize;
pub mod oracle;
pub mod profile;

pub use graph::{Edge, EdgeId, EdgeKind, GraphError, Instance, MultiGraph, VertexId};
