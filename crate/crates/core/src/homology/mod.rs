//! Projective covers, syzygies, duals, ℧, the transpose, Ext and the
//! Gorenstein-type predicates built on them.

mod cover;
mod dual;
mod ext;
mod predicates;
mod transpose;

pub use cover::{
    betti, betti_with, projective_cover, projective_cover_with, resolve, syzygy, syzygy_power,
    syzygy_power_with, syzygy_with, BettiTable, Presentation, Resolution,
};
pub use dual::{
    a_dual, eval_map, is_reflexive, is_torsionless, minimal_left_approximation, mho, mho_flagged,
    mho_power, Approximation, Dual, MhoFlags,
};
pub use ext::{ext_dim, ext_dim_with, ext_dims, first_nonvanishing_ext, stable_hom_dim};
pub use predicates::{
    is_gp, is_gp_with, is_inf_torsionfree, is_inf_torsionfree_with, is_semi_gp, is_semi_gp_with,
    BoundedCheck, GpCheck, DEFAULT_BOUND,
};
pub use transpose::{transpose, transpose_with};
