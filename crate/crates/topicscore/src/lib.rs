//! File formats, reports and the command-line pipeline around
//! [`topicscore_core`].

pub mod config;
pub mod corpus;
pub mod error;
pub mod heatmap;
pub mod pipeline;
pub mod reference;
pub mod report;
pub mod vocabulary;

pub use error::{Error, Result};
pub use topicscore_core as core;
