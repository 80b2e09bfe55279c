use super::AModule;
use crate::error::{Error, Result};
use crate::homology::projective_cover;
use crate::linalg::{Matrix, Scalar, Subspace};

/// An `A`-linear map given by a `dim target × dim source` matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: AModule,
    pub target: AModule,
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: AModule, target: AModule, matrix: Matrix) -> Result<ModuleMap> {
        source.check_same_algebra(&target)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        let map = ModuleMap::new_unchecked(source, target, matrix);
        if !map.is_homomorphism() {
            return Err(Error::BadParams("matrix does not commute with the action".into()));
        }
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: AModule, target: AModule, matrix: Matrix) -> ModuleMap {
        ModuleMap {
            source,
            target,
            matrix,
        }
    }

    /// `X_i^target · F = F · X_i^source` for all `i`.
    pub fn is_homomorphism(&self) -> bool {
        self.source
            .actions()
            .iter()
            .zip(self.target.actions())
            .all(|(xs, xt)| xt.mul(&self.matrix) == self.matrix.mul(xs))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap) -> Result<ModuleMap> {
        if first.target.dim() != self.source.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source.dim(),
                found: first.target.dim(),
            });
        }
        Ok(ModuleMap::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            self.matrix.mul(&first.matrix),
        ))
    }
}

/// Basis of `Hom(M, N)` as matrices, computed through the presentation of
/// `M`: a map is determined by the images `g_k ∈ N` of the generators of `M`,
/// subject to `Σ_k a_kj g_k = 0` for each generator `(a_kj)_k` of `ΩM`.
pub(crate) fn hom_matrices(m: &AModule, n: &AModule) -> Result<Vec<Matrix>> {
    m.check_same_algebra(n)?;
    let f = m.field();
    let (dn, nalg) = (n.dim(), m.algebra().dim());
    if m.dim() == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    let pres = projective_cover(m)?;
    let t = pres.rank;
    let relations = pres.syzygy_generators();
    let mut system = Matrix::zeros(f, relations.len() * dn, t * dn);
    for (j, u) in relations.iter().enumerate() {
        for k in 0..t {
            let a = &u[k * nalg..(k + 1) * nalg];
            if a.iter().all(Scalar::is_zero) {
                continue;
            }
            system.set_block(j * dn, k * dn, &n.act(a));
        }
    }
    let solutions = Subspace::kernel(&system);
    let basis_actions: Vec<Matrix> = (0..nalg).map(|b| n.basis_action(b)).collect();
    Ok(solutions
        .basis()
        .iter()
        .map(|g| {
            pres.extend_from_columns(dn, |k, b| basis_actions[b].mul_vec(&g[k * dn..(k + 1) * dn]))
        })
        .collect())
}

pub fn hom_basis(m: &AModule, n: &AModule) -> Result<Vec<ModuleMap>> {
    Ok(hom_matrices(m, n)?
        .into_iter()
        .map(|f| ModuleMap::new_unchecked(m.clone(), n.clone(), f))
        .collect())
}

pub fn hom_dim(m: &AModule, n: &AModule) -> Result<usize> {
    Ok(hom_matrices(m, n)?.len())
}

pub fn end_dim(m: &AModule) -> Result<usize> {
    hom_dim(m, m)
}

/// Basis of `Hom(M, N)` by solving `X_i^N F = F X_i^M` in all `d_M·d_N`
/// unknowns; slower, kept as an independent check of [`hom_basis`].
pub fn hom_basis_direct(m: &AModule, n: &AModule) -> Result<Vec<ModuleMap>> {
    m.check_same_algebra(n)?;
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let unknown = |r: usize, c: usize| r * dm + c;
    let mut rows = Vec::new();
    for (xm, xn) in m.actions().iter().zip(n.actions()) {
        for r in 0..dn {
            for c in 0..dm {
                let mut eq = vec![f.zero(); dn * dm];
                for s in 0..dn {
                    let coef = xn.get(r, s);
                    if !coef.is_zero() {
                        let slot = &mut eq[unknown(s, c)];
                        *slot = &*slot + coef;
                    }
                }
                for s in 0..dm {
                    let coef = xm.get(s, c);
                    if !coef.is_zero() {
                        let slot = &mut eq[unknown(r, s)];
                        *slot = &*slot - coef;
                    }
                }
                rows.push(eq);
            }
        }
    }
    let solutions = if rows.is_empty() {
        Subspace::full(f, dn * dm)
    } else {
        Subspace::kernel(&Matrix::from_rows(f, rows)?)
    };
    Ok(solutions
        .basis()
        .iter()
        .map(|v| {
            let rows = (0..dn).map(|r| v[r * dm..(r + 1) * dm].to_vec()).collect();
            let matrix = Matrix::from_rows(f, rows).unwrap_or_else(|_| Matrix::zeros(f, dn, dm));
            ModuleMap::new_unchecked(m.clone(), n.clone(), matrix)
        })
        .collect())
}
