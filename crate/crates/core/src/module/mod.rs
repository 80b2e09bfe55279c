//! Finite-length left modules over a short local algebra.

mod constructors;
mod hom;
mod iso;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::algebra::ShortAlgebra;
use crate::error::{Error, Result};
use crate::homology::Presentation;
use crate::linalg::{Field, Matrix, Scalar, Subspace};

pub use constructors::{
    cyclic_submodule, direct_sum, direct_sum_all, free_module, generated_submodule, left_regular,
    m_alpha, quotient, radical_module, random_loewy2_module, random_module, simple_module,
    submodule,
};
pub(crate) use constructors::quotient_by as quotient_by_subspace;
pub(crate) use hom::hom_matrices;
pub use hom::{end_dim, hom_basis, hom_basis_direct, hom_dim, ModuleMap};
pub use iso::{is_isomorphic, is_isomorphic_with, IsoOptions, IsoResult};

/// Dimension vector `(t, s) = (|top M|, |JM|)` of a module of Loewy length ≤ 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DimVec {
    pub t: usize,
    pub s: usize,
}

impl DimVec {
    pub fn new(t: usize, s: usize) -> DimVec {
        DimVec { t, s }
    }
}

impl fmt::Display for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.s)
    }
}

struct ModuleData {
    alg: Arc<ShortAlgebra>,
    dim: usize,
    /// `X_i`, the action of `v_i`.
    actions: Vec<Matrix>,
    /// `Y_m`, the action of `w_m`, derived from products of the `X_i`.
    w_actions: Vec<Matrix>,
    presentation: OnceLock<Arc<Presentation>>,
}

/// A module `M = k^d` with action matrices; cheap to clone.
#[derive(Clone)]
pub struct AModule(Arc<ModuleData>);

impl fmt::Debug for AModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AModule")
            .field("algebra", &self.0.alg.name())
            .field("dim", &self.0.dim)
            .finish()
    }
}

impl AModule {
    /// Builds and validates a module from the actions of `v_1..v_e`.
    pub fn new(alg: Arc<ShortAlgebra>, dim: usize, actions: Vec<Matrix>) -> Result<AModule> {
        if actions.len() != alg.e() {
            return Err(Error::DimensionMismatch {
                expected: alg.e(),
                found: actions.len(),
            });
        }
        for x in &actions {
            if x.rows() != dim || x.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: if x.rows() != dim { x.rows() } else { x.cols() },
                });
            }
            if x.field() != alg.field() {
                return Err(Error::FieldMismatch);
            }
        }
        let m = AModule::from_parts(alg, dim, actions);
        m.validate()?;
        Ok(m)
    }

    /// Trusted constructor for actions that satisfy the relations by
    /// construction (submodules, quotients, syzygies).
    pub(crate) fn from_parts(alg: Arc<ShortAlgebra>, dim: usize, actions: Vec<Matrix>) -> AModule {
        let field = alg.field();
        let w_actions = alg
            .w_products()
            .iter()
            .map(|s| {
                let mut y = Matrix::zeros(field, dim, dim);
                let e = alg.e();
                for i in 0..e {
                    for j in 0..e {
                        let c = &s[i * e + j];
                        if !c.is_zero() {
                            y.add_scaled(c, &actions[i].mul(&actions[j]));
                        }
                    }
                }
                y
            })
            .collect();
        AModule(Arc::new(ModuleData {
            alg,
            dim,
            actions,
            w_actions,
            presentation: OnceLock::new(),
        }))
    }

    /// Checks `Σ λ_ij X_i X_j = 0` for every relation `λ` and `J³M = 0`.
    pub fn validate(&self) -> Result<()> {
        let (alg, e) = (&self.0.alg, self.0.alg.e());
        let xs = &self.0.actions;
        if !alg.relations().is_empty() {
            let products: Vec<Matrix> = (0..e * e).map(|ij| xs[ij / e].mul(&xs[ij % e])).collect();
            for (r, lambda) in alg.relations().iter().enumerate() {
                let mut acc = Matrix::zeros(self.field(), self.dim(), self.dim());
                for (ij, c) in lambda.iter().enumerate() {
                    if !c.is_zero() {
                        acc.add_scaled(c, &products[ij]);
                    }
                }
                if !acc.is_zero() {
                    return Err(Error::InvalidModule(format!(
                        "actions violate quadratic relation {}",
                        r + 1
                    )));
                }
            }
        }
        for y in &self.0.w_actions {
            for x in xs {
                if !y.mul(x).is_zero() {
                    return Err(Error::InvalidModule("J^3 does not act as zero".into()));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<ShortAlgebra> {
        &self.0.alg
    }

    pub fn field(&self) -> Field {
        self.0.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn is_zero(&self) -> bool {
        self.0.dim == 0
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.0.actions
    }

    pub fn w_actions(&self) -> &[Matrix] {
        &self.0.w_actions
    }

    /// Action of the algebra basis element `b` in `(1, v.., w..)` order.
    pub fn basis_action(&self, b: usize) -> Matrix {
        let e = self.0.alg.e();
        match b {
            0 => Matrix::identity(self.field(), self.dim()),
            b if b <= e => self.0.actions[b - 1].clone(),
            b => self.0.w_actions[b - 1 - e].clone(),
        }
    }

    /// Matrix by which the algebra element `x` acts.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let e = self.0.alg.e();
        let mut m = Matrix::identity(self.field(), self.dim()).scale(&x[0]);
        for (i, c) in x[1..=e].iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.0.actions[i]);
            }
        }
        for (k, c) in x[1 + e..].iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.0.w_actions[k]);
            }
        }
        m
    }

    /// `x · m` without forming the action matrix.
    pub fn act_vec(&self, x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let e = self.0.alg.e();
        let mut out: Vec<Scalar> = m.iter().map(|c| c * &x[0]).collect();
        for (i, c) in x[1..=e].iter().enumerate() {
            if !c.is_zero() {
                crate::linalg::axpy(&mut out, c, &self.0.actions[i].mul_vec(m));
            }
        }
        for (k, c) in x[1 + e..].iter().enumerate() {
            if !c.is_zero() {
                crate::linalg::axpy(&mut out, c, &self.0.w_actions[k].mul_vec(m));
            }
        }
        out
    }

    pub fn same_algebra(&self, other: &AModule) -> bool {
        Arc::ptr_eq(&self.0.alg, &other.0.alg) || self.0.alg.same_structure(&other.0.alg)
    }

    pub(crate) fn check_same_algebra(&self, other: &AModule) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub(crate) fn presentation_cell(&self) -> &OnceLock<Arc<Presentation>> {
        &self.0.presentation
    }

    /// `JM = Σ_i X_i(M)`.
    pub fn radical(&self) -> Subspace {
        if self.0.actions.is_empty() || self.dim() == 0 {
            return Subspace::zero(self.field(), self.dim());
        }
        let mut stacked = self.0.actions[0].clone();
        for x in &self.0.actions[1..] {
            stacked = stacked.hstack(x);
        }
        Subspace::column_space(&stacked)
    }

    /// `{m : Jm = 0} = ∩_i ker X_i`.
    pub fn socle(&self) -> Subspace {
        let d = self.dim();
        if self.0.actions.is_empty() {
            return Subspace::full(self.field(), d);
        }
        Subspace::kernel(&Matrix::vstack_all(self.field(), d, &self.0.actions))
    }

    pub fn top_dim(&self) -> usize {
        self.dim() - self.radical().dim()
    }

    /// Positions `c` such that the standard vectors `e_c` lift a basis of
    /// `top M`.
    pub fn top_positions(&self) -> Vec<usize> {
        self.radical().complement_positions()
    }

    pub fn loewy_length(&self) -> usize {
        if self.dim() == 0 {
            0
        } else if self.0.actions.iter().all(Matrix::is_zero) {
            1
        } else if self.0.w_actions.iter().all(Matrix::is_zero) {
            2
        } else {
            3
        }
    }

    pub(crate) fn require_loewy2(&self) -> Result<()> {
        if self.loewy_length() > 2 {
            Err(Error::LoewyTooLong)
        } else {
            Ok(())
        }
    }

    pub fn dim_vector(&self) -> Result<DimVec> {
        self.require_loewy2()?;
        let s = self.radical().dim();
        Ok(DimVec::new(self.dim() - s, s))
    }

    /// `soc M = JM` for nonzero `M`.
    pub fn is_bipartite(&self) -> bool {
        self.dim() > 0 && {
            let rad = self.radical();
            let soc = self.socle();
            rad.dim() == soc.dim() && rad.is_subspace_of(&soc)
        }
    }

    /// Number `w` of simple direct summands: `|soc M| - |JM|`.
    pub fn simple_multiplicity(&self) -> Result<usize> {
        self.require_loewy2()?;
        Ok(self.socle().dim() - self.radical().dim())
    }

    /// `dim End M = 1 + t·|JM|`.
    pub fn is_solid(&self) -> Result<bool> {
        if self.dim() == 0 {
            return Err(Error::ZeroModule);
        }
        let v = self.dim_vector()?;
        Ok(end_dim(self)? == 1 + v.t * v.s)
    }

    pub fn is_projective(&self) -> Result<bool> {
        Ok(crate::homology::projective_cover(self)?.syzygy.is_zero())
    }

    /// Action matrices as strings, for serialization.
    pub fn action_strings(&self) -> Vec<Vec<Vec<String>>> {
        self.0.actions.iter().map(Matrix::to_strings).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{preset, PresetParams};

    fn alg(name: &str, params: PresetParams) -> Arc<ShortAlgebra> {
        Arc::new(preset(name, &params).unwrap())
    }

    #[test]
    fn structure_of_simple_and_regular() {
        let a = alg("lambda_c", PresetParams::default());
        let s = simple_module(&a);
        assert_eq!((s.radical().dim(), s.socle().dim(), s.loewy_length()), (0, 1, 1));
        assert_eq!(s.dim_vector().unwrap(), DimVec::new(1, 0));
        let r = left_regular(&a);
        assert_eq!((r.dim(), r.loewy_length(), r.top_dim()), (6, 3, 1));
        assert_eq!(r.dim_vector(), Err(Error::LoewyTooLong));
        r.validate().unwrap();

        let l2 = alg("L", PresetParams::e(2));
        let r = left_regular(&l2);
        assert_eq!((r.loewy_length(), r.radical().dim()), (2, 2));
        assert_eq!(r.dim_vector().unwrap(), DimVec::new(1, 2));
    }

    #[test]
    fn radical_of_lambda0() {
        let j = radical_module(&alg("lambda_c", PresetParams::default()));
        assert_eq!(j.dim_vector().unwrap(), DimVec::new(3, 2));
    }

    #[test]
    fn simple_summands() {
        let j = radical_module(&alg("ex9_3", PresetParams::default()));
        assert_eq!(j.simple_multiplicity().unwrap(), 1);
        let a = alg("ex5_5", PresetParams::default());
        let jr = radical_module(&Arc::new(a.opposite()));
        assert_eq!(jr.simple_multiplicity().unwrap(), 1);
        assert!(!jr.is_bipartite());
        assert!(radical_module(&a).is_bipartite());
    }

    #[test]
    fn rejects_invalid_actions() {
        let a = alg("ex9_3", PresetParams::default());
        let f = a.field();
        // x acting nontrivially twice violates x^2 = 0
        let x = Matrix::from_i64(f, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let y = Matrix::zeros(f, 3, 3);
        assert!(matches!(AModule::new(a.clone(), 3, vec![x, y]), Err(Error::InvalidModule(_))));
        assert!(AModule::new(a, 2, vec![Matrix::zeros(f, 2, 2)]).is_err());
    }

    #[test]
    fn solidity() {
        let j = radical_module(&alg("ex3_4", PresetParams::default()));
        assert_eq!(end_dim(&j).unwrap(), 7);
        assert!(j.is_solid().unwrap());
        assert!(!radical_module(&alg("L", PresetParams::e(2))).is_solid().unwrap());
        assert!(!radical_module(&alg("ex5_4a", PresetParams::default())).is_solid().unwrap());
        let a = alg("ex5_3", PresetParams::default());
        assert_eq!(left_regular(&a).is_solid(), Err(Error::LoewyTooLong));
    }
}
