pub mod analysis;
pub mod cli;
pub mod curvature;
pub mod domains;
pub mod error;
pub mod export;
pub mod limit_curves;
pub mod number_theory;
pub mod polygon;

#[cfg(test)]
mod testutil;

pub use domains::{DomainSpec, MomentPair};
pub use error::{Error, Result};
pub use limit_curves::LimitCurve;
