use super::cover::{projective_cover, projective_cover_with, Presentation};
use crate::error::Result;
use crate::limits::Limits;
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::module::{hom_matrices, left_regular, AModule};

/// `δ^i: N^{t_i} → N^{t_{i+1}}`, block `(j, k)` acting by the `k`-th
/// component of the `j`-th generator of `Ω^{i+1}M` inside `A^{t_i}`.
fn coboundary(pres: &Presentation, n: &AModule) -> Matrix {
    let nalg = n.algebra().dim();
    let dn = n.dim();
    let gens = pres.syzygy_generators();
    let mut m = Matrix::zeros(n.field(), gens.len() * dn, pres.rank * dn);
    for (j, u) in gens.iter().enumerate() {
        for k in 0..pres.rank {
            let a = &u[k * nalg..(k + 1) * nalg];
            if a.iter().all(Scalar::is_zero) {
                continue;
            }
            m.set_block(j * dn, k * dn, &n.act(a));
        }
    }
    m
}

/// Runs `visit(i, dim Ext^i(M, N))` for `i = 0, 1, ..` until it returns
/// false or `i = last`.
fn walk_ext(
    m: &AModule,
    n: &AModule,
    last: usize,
    limits: &Limits,
    mut visit: impl FnMut(usize, usize) -> bool,
) -> Result<()> {
    m.check_same_algebra(n)?;
    let mut prev_rank = 0;
    let mut cur = m.clone();
    for i in 0..=last {
        let pres = projective_cover_with(&cur, limits)?;
        let rank = if n.dim() == 0 { 0 } else { coboundary(&pres, n).rank() };
        let ext = pres.rank * n.dim() - rank - prev_rank;
        if !visit(i, ext) {
            break;
        }
        prev_rank = rank;
        cur = pres.syzygy.clone();
    }
    Ok(())
}

/// `dim Ext^i(M, N)` for `i = 0..=last`.
pub fn ext_dims(m: &AModule, n: &AModule, last: usize, limits: &Limits) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(last + 1);
    walk_ext(m, n, last, limits, |_, e| {
        out.push(e);
        true
    })?;
    Ok(out)
}

pub fn ext_dim(m: &AModule, n: &AModule, i: usize) -> Result<usize> {
    ext_dim_with(m, n, i, &Limits::default())
}

pub fn ext_dim_with(m: &AModule, n: &AModule, i: usize, limits: &Limits) -> Result<usize> {
    Ok(ext_dims(m, n, i, limits)?[i])
}

/// Least `i` in `from..=to` with `Ext^i(M, N) ≠ 0`.
pub fn first_nonvanishing_ext(
    m: &AModule,
    n: &AModule,
    from: usize,
    to: usize,
    limits: &Limits,
) -> Result<Option<usize>> {
    let mut hit = None;
    walk_ext(m, n, to, limits, |i, e| {
        if i >= from && e != 0 {
            hit = Some(i);
            return false;
        }
        true
    })?;
    Ok(hit)
}

/// `dim Hom(M, N)` minus the maps factoring through a projective module;
/// those are spanned by `π_k ∘ F` with `F ∈ Hom(M, A)` and `π_k: A → N` the
/// restriction of the projective cover of `N` to its `k`-th summand.
pub fn stable_hom_dim(m: &AModule, n: &AModule) -> Result<usize> {
    m.check_same_algebra(n)?;
    let homs = hom_matrices(m, n)?;
    if homs.is_empty() {
        return Ok(0);
    }
    let alg = m.algebra();
    let nalg = alg.dim();
    let to_a = hom_matrices(m, &left_regular(alg))?;
    let cover = projective_cover(n)?.cover_matrix(n);
    let mut factored = Vec::new();
    for k in 0..cover.cols() / nalg {
        let pi = cover.block(0, k * nalg, n.dim(), nalg);
        for f in &to_a {
            factored.push(pi.mul(f).entries().to_vec());
        }
    }
    let span = Subspace::span(m.field(), n.dim() * m.dim(), &factored)?;
    Ok(homs.len() - span.dim())
}
