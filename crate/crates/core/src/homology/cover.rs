use std::sync::Arc;

use serde::Serialize;

use crate::algebra::ShortAlgebra;
use crate::error::Result;
use crate::limits::Limits;
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::module::{free_module, AModule, ModuleMap};

/// Minimal projective presentation data `0 → ΩM → A^t → M → 0`.
///
/// The cover sends the `k`-th generator of `A^t` to the standard vector
/// `e_{generators[k]}` of `M`; coordinate `k·n + b` of `A^t` is the basis
/// element `b` of the `k`-th copy of `A`.
pub struct Presentation {
    alg: Arc<ShortAlgebra>,
    pub dim: usize,
    pub generators: Vec<usize>,
    pub rank: usize,
    /// `ΩM` as a subspace of `A^t`.
    pub kernel: Subspace,
    pub syzygy: AModule,
    /// Columns of the cover matrix forming a basis of `M`.
    basis_columns: Vec<usize>,
    /// Inverse of the square matrix formed by `basis_columns`.
    basis_inverse: Matrix,
}

impl Presentation {
    fn build(m: &AModule, limits: &Limits) -> Result<Presentation> {
        let alg = m.algebra();
        let (n, d, f) = (alg.dim(), m.dim(), m.field());
        let generators = m.top_positions();
        let t = generators.len();
        limits.check(t * n)?;
        let cover = cover_matrix(m, &generators);
        let r = cover.rref();
        debug_assert_eq!(r.rank, d, "cover must be surjective");
        let kernel = Subspace::kernel_from_rref(&cover, &r);
        limits.check(kernel.dim())?;
        let basis_columns = r.pivots.clone();
        let square = Matrix::from_columns(
            f,
            d,
            &basis_columns.iter().map(|&c| cover.column(c)).collect::<Vec<_>>(),
        );
        let basis_inverse = square.inverse().expect("pivot columns are a basis");
        let syzygy = submodule_of_free(alg, t, &kernel);
        Ok(Presentation {
            alg: alg.clone(),
            dim: d,
            generators,
            rank: t,
            kernel,
            syzygy,
            basis_columns,
            basis_inverse,
        })
    }

    /// The `d × t·n` matrix of the cover `A^t → M`; `m` must be the module
    /// this presentation was built for.
    pub fn cover_matrix(&self, m: &AModule) -> Matrix {
        assert_eq!(m.dim(), self.dim, "presentation of a different module");
        cover_matrix(m, &self.generators)
    }

    pub fn cover_map(&self, m: &AModule) -> ModuleMap {
        let free = free_module(&self.alg, self.rank);
        ModuleMap::new_unchecked(free, m.clone(), self.cover_matrix(m))
    }

    /// Generators of `ΩM` as elements of `A^t`: the kernel basis vectors at
    /// the top positions of `ΩM`.
    pub fn syzygy_generators(&self) -> Vec<Vec<Scalar>> {
        self.syzygy
            .top_positions()
            .into_iter()
            .map(|p| self.kernel.basis()[p].clone())
            .collect()
    }

    /// `ΩM ⊆ J·A^t`: every kernel vector has zero unit coordinates.
    pub fn is_minimal(&self) -> bool {
        let n = self.alg.dim();
        self.kernel
            .basis()
            .iter()
            .all(|v| (0..self.rank).all(|k| v[k * n].is_zero()))
    }

    /// The unique `F` with `F·cover[:, c] = images[c]` on the basis columns,
    /// where `image(k, b)` is the prescribed image of column `k·n + b`.
    pub(crate) fn extend_from_columns(
        &self,
        target_dim: usize,
        image: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Matrix {
        let n = self.alg.dim();
        let cols: Vec<Vec<Scalar>> = self
            .basis_columns
            .iter()
            .map(|&c| image(c / n, c % n))
            .collect();
        Matrix::from_columns(self.alg.field(), target_dim, &cols).mul(&self.basis_inverse)
    }
}

fn cover_matrix(m: &AModule, generators: &[usize]) -> Matrix {
    let alg = m.algebra();
    let (n, d) = (alg.dim(), m.dim());
    let f = m.field();
    let mut cols = Vec::with_capacity(generators.len() * n);
    for &g in generators {
        let mut unit = vec![f.zero(); d];
        unit[g] = f.one();
        cols.push(unit);
        for x in m.actions() {
            cols.push(x.column(g));
        }
        for y in m.w_actions() {
            cols.push(y.column(g));
        }
        debug_assert_eq!(cols.len() % n, 0);
    }
    Matrix::from_columns(f, d, &cols)
}

/// The submodule of `A^t` on a subspace known to be invariant, with the
/// action read off at the subspace pivots.
fn submodule_of_free(
    alg: &Arc<ShortAlgebra>,
    t: usize,
    sub: &Subspace,
) -> AModule {
    let (f, k) = (alg.field(), sub.dim());
    let pivots = sub.pivots();
    let actions = (0..alg.e())
        .map(|i| {
            let cols: Vec<Vec<Scalar>> = sub
                .basis()
                .iter()
                .map(|u| {
                    let image = free_left_mul(alg, i, t, u);
                    pivots.iter().map(|&p| image[p].clone()).collect()
                })
                .collect();
            Matrix::from_columns(f, k, &cols)
        })
        .collect();
    AModule::from_parts(alg.clone(), k, actions)
}

/// `v_i · u` for `u ∈ A^t`.
fn free_left_mul(
    alg: &ShortAlgebra,
    i: usize,
    t: usize,
    u: &[Scalar],
) -> Vec<Scalar> {
    let n = alg.dim();
    let mut out = Vec::with_capacity(t * n);
    for k in 0..t {
        out.extend(alg.left_mul_v(i, &u[k * n..(k + 1) * n]));
    }
    out
}

pub fn projective_cover(m: &AModule) -> Result<Arc<Presentation>> {
    projective_cover_with(m, &Limits::default())
}

/// Minimal presentation of `m`, cached on the module.
pub fn projective_cover_with(m: &AModule, limits: &Limits) -> Result<Arc<Presentation>> {
    if let Some(p) = m.presentation_cell().get() {
        limits.check(p.rank * m.algebra().dim())?;
        limits.check(p.syzygy.dim())?;
        return Ok(p.clone());
    }
    let p = Arc::new(Presentation::build(m, limits)?);
    Ok(m.presentation_cell().get_or_init(|| p).clone())
}

pub fn syzygy(m: &AModule) -> Result<AModule> {
    Ok(projective_cover(m)?.syzygy.clone())
}

pub fn syzygy_with(m: &AModule, limits: &Limits) -> Result<AModule> {
    Ok(projective_cover_with(m, limits)?.syzygy.clone())
}

pub fn syzygy_power(m: &AModule, n: usize) -> Result<AModule> {
    syzygy_power_with(m, n, &Limits::default())
}

pub fn syzygy_power_with(m: &AModule, n: usize, limits: &Limits) -> Result<AModule> {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = projective_cover_with(&cur, limits)?.syzygy.clone();
    }
    Ok(cur)
}

/// `Ω^0 M .. Ω^{len-1} M` with their presentations.
pub struct Resolution {
    pub modules: Vec<AModule>,
    pub presentations: Vec<Arc<Presentation>>,
}

impl Resolution {
    pub fn module(&self, i: usize) -> &AModule {
        &self.modules[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.presentations[i].rank
    }

    pub fn len(&self) -> usize {
        self.presentations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.presentations.is_empty()
    }
}

pub fn resolve(m: &AModule, len: usize, limits: &Limits) -> Result<Resolution> {
    let mut presentations = Vec::with_capacity(len);
    let mut modules = Vec::with_capacity(len);
    let mut cur = m.clone();
    for _ in 0..len {
        let p = projective_cover_with(&cur, limits)?;
        modules.push(std::mem::replace(&mut cur, p.syzygy.clone()));
        presentations.push(p);
    }
    Ok(Resolution {
        modules,
        presentations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub values: Vec<usize>,
}

/// `t_0 .. t_n` with `t_i = |top Ω^i M|`.
pub fn betti(m: &AModule, n: usize) -> Result<BettiTable> {
    betti_with(m, n, &Limits::default())
}

pub fn betti_with(m: &AModule, n: usize, limits: &Limits) -> Result<BettiTable> {
    let res = resolve(m, n, limits)?;
    let mut values: Vec<usize> = res.presentations.iter().map(|p| p.rank).collect();
    let last = match res.presentations.last() {
        Some(p) => p.syzygy.clone(),
        None => m.clone(),
    };
    values.push(last.top_dim());
    Ok(BettiTable { values })
}
