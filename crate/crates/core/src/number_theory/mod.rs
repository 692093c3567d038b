//! Exact integer number theory: Möbius and totient sieves, Farey sequences,
//! continued fractions and their (secondary) convergents.

mod cf;
mod farey;
mod fraction;
mod moebius;
mod real;

pub use cf::{cf_expand, convergents, denominator_ratios, CfKind, ContinuedFraction};
pub use farey::{
    farey_neighbors, farey_neighbors_sided, farey_neighbors_stern_brocot, farey_sequence, FareyNeighbors, Side,
};
pub use fraction::Fraction;
pub use moebius::{moebius_sieve, partial_zeta_inverse, totient_sieve, MoebiusTable};
pub use real::{PatternConstant, QuadraticSurd, Quotients, RealSpec};
