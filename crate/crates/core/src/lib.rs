//! Exact enumeration of multipartite series-reduced trees, symbolic
//! ultrametrics and related families via Bell polynomials and exponential
//! generating functions.

pub mod bell;
pub mod egf;
pub mod error;
pub mod labeled;
pub mod oracle;
pub mod poly;
pub mod reference;
pub mod ring;
pub mod unlabeled;
pub mod weight;

pub use error::{Error, Result};
