//! Short local algebras (J³ = 0), their finite-length modules, and exact
//! computation of syzygies, duals, Ext and related invariants.

pub mod algebra;
pub mod error;
pub mod explorer;
pub mod homology;
pub mod io;
pub mod kronecker;
pub mod limits;
pub mod linalg;
pub mod module;
pub mod numerics;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
