//! Exact-arithmetic verification engine for the intersection-theory
//! computations behind the Prym-Brill-Noether divisor class and the
//! two-pointed strongly Brill-Noether divisor class.
//!
//! Everything is computed from first principles over arbitrary-precision
//! rationals: the tautological ring of `C x C x Pic` with its rewrite system,
//! the flag degeneracy-locus determinant and its intersection numbers, the
//! divisor-class relation systems and slopes, the Brill-Noether feasibility
//! numerology, and the genus-14 Kodaira-dimension slope check. Independent
//! combinatorial closed forms act as oracles for the ring computations, and
//! `verify::run_all` replays every pinned result.

pub mod applications;
pub mod cli;
pub mod degeneracy;
pub mod divisors;
pub mod exactnum;
pub mod tautring;
pub mod verify;

pub use exactnum::Rational;
