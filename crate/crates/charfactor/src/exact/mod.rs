//! Exact scalar arithmetic over Q and Q(ω), Laurent evaluation, square
//! matrices with exact determinants, and rational evaluation points. This is
//! the evaluation substrate for every character formula in the crate; nothing
//! here ever touches floating point.

pub mod cyclotomic;
pub mod matrix;
pub mod point;
pub mod rational;

pub use cyclotomic::{cyclotomic_polynomial, phi_degree, CycNum};
pub use matrix::SquareMatrix;
pub use point::EvalPoint;
pub use rational::{format_rat, laurent_eval, parse_rat, rat, ratio, Rat};
