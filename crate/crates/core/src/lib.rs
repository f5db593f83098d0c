//! Exact arithmetic on desk-scale surreal numbers.
//!
//! The kernel works with two representations of a surreal number: the
//! Hahn normal form `sum r_i w^(a_i)` with finitely many terms and rational
//! coefficients ([`NormalForm`]), and the run-length encoded sign sequence
//! ([`SignSeq`]). Ordinals below `eps_omega` have their own Cantor normal
//! form type ([`Ordinal`]).
//!
//! On top of these sit the field operations, Gonshor's `g` and `h`, the
//! exponential and logarithm, and checkers for the `SRF` / `Gamma^up`
//! hierarchy of exp-log closed subfields.

pub mod cli;
pub mod convert;
pub mod error;
pub mod explog;
pub mod field;
pub mod gonshor;
pub mod hierarchy;
pub mod json;
pub mod ordinal;
pub mod rational;
pub mod signseq;
pub mod surreal;

pub use error::{Error, Result};
pub use ordinal::Ordinal;
pub use rational::Rational;
pub use signseq::{Sign, SignSeq};
pub use surreal::{ArchRelation, Exp, NormalForm, Term};
