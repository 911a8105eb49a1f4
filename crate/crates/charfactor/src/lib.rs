//! Exact computation with classical-group characters at root-of-unity
//! specializations.
//!
//! The library evaluates irreducible characters of GL, SO(2N+1), Sp(2N) and
//! O(2N) at variable tuples of the form `X, ωX, …, ω^{t−1}X, y, ωy, …` with
//! ω a primitive t-th root of unity, decides exactly when such a value
//! vanishes in terms of t-cores and asymmetric partitions, and builds the
//! factored form of every nonzero value as a signed product of smaller
//! classical characters. All arithmetic is exact, over Q and the cyclotomic
//! field Q(ω); identities are verified by evaluation at seeded generic
//! rational points, never by floating point.
//!
//! Module map:
//!
//! * [`exact`] — rationals, Q(ω), exact determinants, evaluation points.
//! * [`partition`] — partitions, beta-sets, Frobenius coordinates, t-cores,
//!   t-quotients, residue-sorting permutations.
//! * [`asymmetric`] — (z1,z2,k)-asymmetric partitions and the vanishing
//!   classifiers.
//! * [`characters`] — direct Weyl character evaluation and the factorization
//!   builders/evaluator.
//! * [`genfun`] — generating functions for asymmetric partitions and the
//!   core-lattice bijection.
//! * [`verify`] — the sweep harness comparing factored against direct values.
//! * [`enumerate`] — partition and t-core enumeration.
//! * [`oracles`] — independent reference implementations for the test suites.
//! * [`cli`] — the `charfactor` command-line surface.

pub mod asymmetric;
pub mod characters;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod genfun;
pub mod oracles;
pub mod partition;
pub mod verify;

pub use error::CharError;
