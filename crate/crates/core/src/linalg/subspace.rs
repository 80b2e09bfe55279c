use super::matrix::{axpy, is_zero_vec, Matrix, Rref};
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A subspace of `k^n` with a basis in which vector `r` has a 1 at
/// `pivots[r]` and zeros at every other pivot (reduced row-echelon bases and
/// null-space bases both qualify).  Coordinates of a member are its entries
/// at the pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::from_rref(&Matrix::identity(field, ambient))
    }

    fn from_rref(m: &Matrix) -> Subspace {
        let r = m.rref();
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis: (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect(),
            pivots: r.pivots,
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, ambient));
        }
        Ok(Subspace::from_rref(&Matrix::from_rows(field, vectors.to_vec())?))
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Subspace {
        Subspace::from_rref(&m.transpose())
    }

    /// Null space of `m`, using its free columns as pivots.
    pub fn kernel(m: &Matrix) -> Subspace {
        Subspace::kernel_from_rref(m, &m.rref())
    }

    /// Null space of `m` given its already computed echelon form.
    pub fn kernel_from_rref(m: &Matrix, r: &Rref) -> Subspace {
        let mut is_pivot = vec![false; m.cols()];
        for &p in &r.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..m.cols()).filter(|&c| !is_pivot[c]).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![m.field().zero(); m.cols()];
                v[f] = m.field().one();
                for (row, &p) in r.pivots.iter().enumerate() {
                    v[p] = -r.reduced.get(row, f);
                }
                v
            })
            .collect();
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis,
            pivots: free,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut residual, &-c, b);
        }
        is_zero_vec(&residual).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // Solve sum x_i a_i = sum y_j b_j via the kernel of [A^T | -B^T].
        let a = Matrix::from_columns(self.field, self.ambient, &self.basis);
        let b = Matrix::from_columns(self.field, self.ambient, &other.basis);
        let stacked = a.hstack(&b.scale(&-self.field.one()));
        let vectors: Vec<Vec<Scalar>> = stacked
            .kernel_basis()
            .into_iter()
            .map(|k| a.mul_vec(&k[..self.dim()]))
            .collect();
        Subspace::span(self.field, self.ambient, &vectors)
    }

    /// `v` minus its projection along the basis; zero exactly on members.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut residual = v.to_vec();
        for (&p, b) in self.pivots.iter().zip(&self.basis) {
            let c = residual[p].clone();
            if !c.is_zero() {
                axpy(&mut residual, &-c, b);
            }
        }
        residual
    }

    /// Standard basis vectors completing `self` to the ambient space.
    pub fn complement(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&c| !is_pivot[c])
            .map(|c| {
                let mut v = vec![self.field.zero(); self.ambient];
                v[c] = self.field.one();
                v
            })
            .collect()
    }

    /// Positions of [`Subspace::complement`] vectors.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Basis vectors as columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.basis)
    }
}
