use crate::error::{Error, Result};

pub const DEFAULT_MAX_DIM: usize = 5000;

/// Resource limits for computations whose intermediate modules grow
/// exponentially (Betti numbers of `S` over `L(e)` are `e^n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_dim: usize,
}

impl Limits {
    pub fn new(max_dim: usize) -> Limits {
        Limits { max_dim }
    }

    /// The cap from `SHORTLOC_CAP`, falling back to 5000.
    pub fn from_env() -> Limits {
        let max_dim = std::env::var("SHORTLOC_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&c| c >= 1)
            .unwrap_or(DEFAULT_MAX_DIM);
        Limits { max_dim }
    }

    pub fn check(&self, dim: usize) -> Result<()> {
        if dim > self.max_dim {
            Err(Error::ResourceCap {
                dim,
                cap: self.max_dim,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::from_env()
    }
}
