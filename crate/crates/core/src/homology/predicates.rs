use std::fmt;

use serde::Serialize;

use super::ext::first_nonvanishing_ext;
use super::transpose::transpose_with;
use crate::error::Result;
use crate::limits::Limits;
use crate::module::{left_regular, AModule};

pub const DEFAULT_BOUND: usize = 10;

/// Outcome of a check of `Ext^i = 0` for `1 ≤ i ≤ bound`; never an
/// unbounded certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundedCheck {
    TrueUpTo(usize),
    FalseAt(usize),
}

impl BoundedCheck {
    pub fn holds(&self) -> bool {
        matches!(self, BoundedCheck::TrueUpTo(_))
    }
}

impl fmt::Display for BoundedCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundedCheck::TrueUpTo(b) => write!(f, "true up to {b}"),
            BoundedCheck::FalseAt(i) => write!(f, "false at {i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GpCheck {
    pub semi_gp: BoundedCheck,
    pub inf_torsionfree: BoundedCheck,
}

impl GpCheck {
    pub fn holds(&self) -> bool {
        self.semi_gp.holds() && self.inf_torsionfree.holds()
    }
}

/// `Ext^i(M, A) = 0` for `1 ≤ i ≤ bound`.
pub fn is_semi_gp(m: &AModule, bound: usize) -> Result<BoundedCheck> {
    is_semi_gp_with(m, bound, &Limits::default())
}

pub fn is_semi_gp_with(m: &AModule, bound: usize, limits: &Limits) -> Result<BoundedCheck> {
    let reg = left_regular(m.algebra());
    Ok(match first_nonvanishing_ext(m, &reg, 1, bound, limits)? {
        Some(i) => BoundedCheck::FalseAt(i),
        None => BoundedCheck::TrueUpTo(bound),
    })
}

/// `Tr M` semi-Gorenstein-projective over the opposite algebra.
pub fn is_inf_torsionfree(m: &AModule, bound: usize) -> Result<BoundedCheck> {
    is_inf_torsionfree_with(m, bound, &Limits::default())
}

pub fn is_inf_torsionfree_with(m: &AModule, bound: usize, limits: &Limits) -> Result<BoundedCheck> {
    is_semi_gp_with(&transpose_with(m, limits)?, bound, limits)
}

pub fn is_gp(m: &AModule, bound: usize) -> Result<GpCheck> {
    is_gp_with(m, bound, &Limits::default())
}

pub fn is_gp_with(m: &AModule, bound: usize, limits: &Limits) -> Result<GpCheck> {
    Ok(GpCheck {
        semi_gp: is_semi_gp_with(m, bound, limits)?,
        inf_torsionfree: is_inf_torsionfree_with(m, bound, limits)?,
    })
}
