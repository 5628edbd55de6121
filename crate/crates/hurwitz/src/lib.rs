pub mod catalog;
pub mod cli;
pub mod datafmt;
pub mod error;
pub mod genvec;
pub mod group;
pub mod perm;
pub mod scan;
pub mod signature;
mod snf;
mod stabchain;

pub use catalog::{GroupLabel, GroupSpec, LabeledGroup};
pub use error::{Error, Result};
pub use genvec::{
    brute_force_epimorphisms, is_generating_vector, representatives_epimorphisms, Budgets,
    EpimorphismRecord, GeneratingVector,
};
pub use group::{ConjClass, PermGroup};
pub use perm::Permutation;
pub use signature::{admissible_signatures, is_large_group, Rational, Signature};
