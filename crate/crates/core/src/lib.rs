//! Exact arithmetic for the topological invariant systems of threefolds:
//! the cup-product cubic form, Chern classes and the checks relating them.

pub mod arith;
pub mod chern_bounds;
pub mod congruences;
pub mod corpus;
pub mod cubic_factor;
pub mod error;
pub mod forms;
pub mod group_action;
pub mod record;
pub mod report;

pub use error::{Error, Result};
