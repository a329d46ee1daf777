//! Graded decomposition numbers for Rouquier and RoCK blocks of
//! Ariki-Koike algebras, with the supporting combinatorics and an
//! independent Fock-space canonical basis oracle.

pub mod beta;
pub mod block;
pub mod cli;
pub mod error;
pub mod fock;
pub mod formula;
pub mod laurent;
pub mod lr;
pub mod multipartition;
pub mod partition;
pub mod verify;

pub use beta::{e_core_and_quotient, BetaSet, CoreQuotient};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use multipartition::{Multicharge, Multipartition, Node};
pub use partition::Partition;
