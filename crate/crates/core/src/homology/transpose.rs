use std::sync::Arc;

use super::cover::projective_cover_with;
use crate::error::Result;
use crate::limits::Limits;
use crate::linalg::{Scalar, Subspace};
use crate::module::{free_module, quotient_by_subspace, AModule};

/// `Tr M = coker(d_1*: (A^{t_0})* → (A^{t_1})*)` for the minimal
/// presentation `A^{t_1} → A^{t_0} → M → 0`, as a left `A^op`-module.
///
/// Identifying `(A^t)*` with `A^t`, `d_1*` sends `b` to
/// `(Σ_k a_kj b_k)_j` where `(a_kj)_k` is the `j`-th generator of `ΩM`.
pub fn transpose(m: &AModule) -> Result<AModule> {
    transpose_with(m, &Limits::default())
}

pub fn transpose_with(m: &AModule, limits: &Limits) -> Result<AModule> {
    let alg = m.algebra();
    let op = Arc::new(alg.opposite());
    let n = alg.dim();
    let pres = projective_cover_with(m, limits)?;
    let gens = pres.syzygy_generators();
    let (t0, t1) = (pres.rank, gens.len());
    limits.check(t1 * n)?;
    let mut images: Vec<Vec<Scalar>> = Vec::with_capacity(t0 * n);
    for k in 0..t0 {
        for b in 0..n {
            let basis = alg.basis_element(b);
            let mut v = Vec::with_capacity(t1 * n);
            for u in &gens {
                v.extend(alg.mul(&u[k * n..(k + 1) * n], &basis));
            }
            images.push(v);
        }
    }
    let image = Subspace::span(alg.field(), t1 * n, &images)?;
    Ok(quotient_by_subspace(&free_module(&op, t1), &image))
}
