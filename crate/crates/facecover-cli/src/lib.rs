//! File formats, traces, DOT export and test suites around the `facecover`
//! kernelizer.

pub mod config;
pub mod dot;
pub mod format;
pub mod report;
pub mod suites;
