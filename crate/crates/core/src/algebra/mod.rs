//! Short local algebras `A = k ⊕ V ⊕ W` with `V = J/J²`, `W = J²` and
//! `J³ = 0`, stored by the structure constants of `μ: V ⊗ V → W`.

mod presets;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Subspace};

pub use presets::{preset, PresetParams, PRESET_NAMES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortAlgebra {
    field: Field,
    e: usize,
    a: usize,
    /// `c[(i * e + j) * a + m]` is the coefficient of `w_m` in `v_i v_j`.
    structure: Vec<Scalar>,
    name: Option<String>,
    /// `w_products[m]` is a vector `s ∈ k^{e²}` with `Σ s_ij v_i v_j = w_m`.
    w_products: Vec<Vec<Scalar>>,
    /// Basis of the linear relations among the degree-two monomials.
    relations: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub name: Option<String>,
    pub hilbert_type: (usize, usize),
    pub commutative: bool,
    pub left_socle_dim: usize,
    pub right_socle_dim: usize,
    pub self_injective: bool,
    pub j2_equals_left_socle: bool,
    pub j2_equals_right_socle: bool,
}

impl ShortAlgebra {
    /// Builds an algebra from 0-based triples `(i, j, m, c)`; absent triples are
    /// zero and repeated triples are summed.
    pub fn new(
        field: Field,
        e: usize,
        a: usize,
        triples: &[(usize, usize, usize, Scalar)],
        name: Option<String>,
    ) -> Result<ShortAlgebra> {
        field.check()?;
        let mut structure = vec![field.zero(); e * e * a];
        for (i, j, m, c) in triples {
            if *i >= e || *j >= e || *m >= a {
                return Err(Error::BadParams(format!(
                    "structure index ({}, {}, {}) out of range for type ({e}, {a})",
                    i + 1,
                    j + 1,
                    m + 1
                )));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            let slot = &mut structure[(i * e + j) * a + m];
            *slot = &*slot + c;
        }
        ShortAlgebra::from_dense(field, e, a, structure, name)
    }

    pub(crate) fn from_dense(
        field: Field,
        e: usize,
        a: usize,
        structure: Vec<Scalar>,
        name: Option<String>,
    ) -> Result<ShortAlgebra> {
        assert_eq!(structure.len(), e * e * a);
        let p = Matrix::from_rows(
            field,
            (0..e * e).map(|r| structure[r * a..(r + 1) * a].to_vec()).collect(),
        )?;
        let pt = if e == 0 {
            Matrix::zeros(field, a, 0)
        } else {
            p.transpose()
        };
        let rank = pt.rank();
        if rank < a {
            return Err(Error::SurjectivityViolation { rank, a });
        }
        let s = pt
            .solve_many(&Matrix::identity(field, a))
            .expect("full row rank system is consistent");
        Ok(ShortAlgebra {
            field,
            e,
            a,
            w_products: s.columns(),
            relations: pt.kernel_basis(),
            structure,
            name,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn hilbert_type(&self) -> (usize, usize) {
        (self.e, self.a)
    }

    /// `1 + e + a`.
    pub fn dim(&self) -> usize {
        1 + self.e + self.a
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> ShortAlgebra {
        self.name = Some(name.into());
        self
    }

    pub fn constant(&self, i: usize, j: usize, m: usize) -> &Scalar {
        &self.structure[(i * self.e + j) * self.a + m]
    }

    /// Coefficients of `v_i v_j` in the basis of `W`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.e + j) * self.a;
        &self.structure[start..start + self.a]
    }

    /// Nonzero triples, 0-based, in lexicographic order.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.e {
            for j in 0..self.e {
                for m in 0..self.a {
                    let c = self.constant(i, j, m);
                    if !c.is_zero() {
                        out.push((i, j, m, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn w_products(&self) -> &[Vec<Scalar>] {
        &self.w_products
    }

    pub fn relations(&self) -> &[Vec<Scalar>] {
        &self.relations
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.e).all(|i| (0..self.e).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// The opposite algebra: `c'_{ijm} = c_{jim}`.
    pub fn opposite(&self) -> ShortAlgebra {
        let (e, a) = (self.e, self.a);
        let mut structure = Vec::with_capacity(self.structure.len());
        for i in 0..e {
            for j in 0..e {
                structure.extend_from_slice(self.product(j, i));
            }
        }
        let name = self.name.as_ref().map(|n| match n.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{n}^op"),
        });
        ShortAlgebra::from_dense(self.field, e, a, structure, name)
            .expect("opposite of a valid algebra is valid")
    }

    /// Same structure constants, ignoring the name.
    pub fn same_structure(&self, other: &ShortAlgebra) -> bool {
        self.field == other.field
            && self.e == other.e
            && self.a == other.a
            && self.structure == other.structure
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.basis_element(0)
    }

    pub fn basis_element(&self, b: usize) -> Vec<Scalar> {
        let mut x = self.zero();
        x[b] = self.field.one();
        x
    }

    /// `x y` in the basis `(1, v_1..v_e, w_1..w_a)`.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let (e, n) = (self.e, self.dim());
        assert!(x.len() == n && y.len() == n, "algebra element length");
        let mut out = self.zero();
        let (x0, y0) = (&x[0], &y[0]);
        out[0] = x0 * y0;
        for b in 1..n {
            let mut acc = self.field.zero();
            if !x0.is_zero() && !y[b].is_zero() {
                acc = &acc + &(x0 * &y[b]);
            }
            if !y0.is_zero() && !x[b].is_zero() {
                acc = &acc + &(y0 * &x[b]);
            }
            out[b] = acc;
        }
        for i in 0..e {
            if x[1 + i].is_zero() {
                continue;
            }
            for j in 0..e {
                if y[1 + j].is_zero() {
                    continue;
                }
                let coef = &x[1 + i] * &y[1 + j];
                crate::linalg::axpy(&mut out[1 + e..], &coef, self.product(i, j));
            }
        }
        out
    }

    /// `v_i · u`.
    pub fn left_mul_v(&self, i: usize, u: &[Scalar]) -> Vec<Scalar> {
        let e = self.e;
        let mut out = self.zero();
        out[1 + i] = u[0].clone();
        for j in 0..e {
            if !u[1 + j].is_zero() {
                crate::linalg::axpy(&mut out[1 + e..], &u[1 + j], self.product(i, j));
            }
        }
        out
    }

    /// `u · v_i`.
    pub fn right_mul_v(&self, i: usize, u: &[Scalar]) -> Vec<Scalar> {
        let e = self.e;
        let mut out = self.zero();
        out[1 + i] = u[0].clone();
        for j in 0..e {
            if !u[1 + j].is_zero() {
                crate::linalg::axpy(&mut out[1 + e..], &u[1 + j], self.product(j, i));
            }
        }
        out
    }

    /// Matrix of `u ↦ x u`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|b| self.mul(x, &self.basis_element(b))).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Matrix of `u ↦ u x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|b| self.mul(&self.basis_element(b), x)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Socle of the regular module on the given side: `{z : v_i z = 0}`
    /// (left) or `{z : z v_i = 0}` (right).
    fn socle(&self, left: bool) -> Subspace {
        let n = self.dim();
        let parts: Vec<Matrix> = (0..self.e)
            .map(|i| {
                let v = self.basis_element(1 + i);
                if left {
                    self.left_mul_matrix(&v)
                } else {
                    self.right_mul_matrix(&v)
                }
            })
            .collect();
        Subspace::kernel(&Matrix::vstack_all(self.field, n, &parts))
    }

    pub fn left_socle_dim(&self) -> usize {
        self.socle(true).dim()
    }

    pub fn right_socle_dim(&self) -> usize {
        self.socle(false).dim()
    }

    /// A local algebra is self-injective iff its left socle is simple.
    pub fn is_self_injective(&self) -> bool {
        self.left_socle_dim() == 1
    }

    pub fn report(&self) -> AlgebraReport {
        let left = self.left_socle_dim();
        let right = self.right_socle_dim();
        AlgebraReport {
            name: self.name.clone(),
            hilbert_type: (self.e, self.a),
            commutative: self.is_commutative(),
            left_socle_dim: left,
            right_socle_dim: right,
            self_injective: left == 1,
            j2_equals_left_socle: self.e > 0 && left == self.a,
            j2_equals_right_socle: self.e > 0 && right == self.a,
        }
    }

    pub fn into_arc(self) -> Arc<ShortAlgebra> {
        Arc::new(self)
    }
}

/// Checks the surjectivity invariant and returns the report.
pub fn validate(alg: &ShortAlgebra) -> Result<AlgebraReport> {
    let again = ShortAlgebra::from_dense(
        alg.field,
        alg.e,
        alg.a,
        alg.structure.clone(),
        alg.name.clone(),
    )?;
    Ok(again.report())
}
