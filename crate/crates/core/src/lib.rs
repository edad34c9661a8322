//! Coverage-hole detection and healing for planar sensor fields.

// `!(x > 0.0)` is used on purpose so that NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod geom;
pub mod heal;
pub mod hole;
pub mod io;
pub mod oracle;
pub mod pipeline;
pub mod svg;
pub mod triangulation;

pub use error::{Error, Result};
