//! Representations of the `e`-Kronecker quiver and their relation to
//! modules of Loewy length ≤ 2: `M ↦ M̃`, the push-down `π`, and the
//! reflection `σ_β` that models `Ω` over self-injective algebras of type `(e,1)`.

use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::algebra::ShortAlgebra;
use crate::error::{Error, Result};
use crate::homology::syzygy;
use crate::linalg::{Field, Matrix, Scalar, Subspace};
use crate::module::{hom_dim, is_isomorphic, AModule};

/// `(V_0, V_1; φ_1..φ_e)` with each `φ_i: V_0 → V_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct KroneckerRep {
    pub field: Field,
    pub e: usize,
    pub dim0: usize,
    pub dim1: usize,
    pub maps: Vec<Matrix>,
}

impl Serialize for KroneckerRep {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("KroneckerRep", 4)?;
        st.serialize_field("e", &self.e)?;
        st.serialize_field("dim0", &self.dim0)?;
        st.serialize_field("dim1", &self.dim1)?;
        let maps: Vec<_> = self.maps.iter().map(Matrix::to_strings).collect();
        st.serialize_field("maps", &maps)?;
        st.end()
    }
}

impl KroneckerRep {
    pub fn new(field: Field, dim0: usize, dim1: usize, maps: Vec<Matrix>) -> Result<KroneckerRep> {
        for m in &maps {
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
            if m.rows() != dim1 || m.cols() != dim0 {
                return Err(Error::DimensionMismatch {
                    expected: dim1 * dim0,
                    found: m.rows() * m.cols(),
                });
            }
        }
        Ok(KroneckerRep {
            field,
            e: maps.len(),
            dim0,
            dim1,
            maps,
        })
    }

    /// `S(0) = (k, 0)`, pushed down to `S` with top `k`.
    pub fn simple_injective(field: Field, e: usize) -> KroneckerRep {
        KroneckerRep::new(field, 1, 0, vec![Matrix::zeros(field, 0, 1); e]).unwrap()
    }

    /// `S(1) = (0, k)`, the simple projective.
    pub fn simple_projective(field: Field, e: usize) -> KroneckerRep {
        KroneckerRep::new(field, 0, 1, vec![Matrix::zeros(field, 1, 0); e]).unwrap()
    }

    pub fn dim_vector(&self) -> (usize, usize) {
        (self.dim0, self.dim1)
    }

    /// `[φ_1 | .. | φ_e]: k^e ⊗ V_0 → V_1`.
    pub fn assembled(&self) -> Matrix {
        self.maps
            .iter()
            .fold(Matrix::zeros(self.field, self.dim1, 0), |acc, m| acc.hstack(m))
    }

    /// `V_1` not covered by the images of the `φ_i`, i.e. a summand `S(1)`.
    pub fn has_simple_projective_summand(&self) -> bool {
        self.assembled().rank() < self.dim1
    }

    /// Dual representation with the vertices swapped: `(V_1*, V_0*; φ_i^T)`.
    /// It exchanges preinjective and preprojective representations.
    pub fn swap_dual(&self) -> KroneckerRep {
        KroneckerRep {
            field: self.field,
            e: self.e,
            dim0: self.dim1,
            dim1: self.dim0,
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }
}

/// `M̃ = (top M, rad M; φ)` with `φ_i` induced by the action of `v_i`.
pub fn tilde(m: &AModule) -> Result<KroneckerRep> {
    m.require_loewy2()?;
    let f = m.field();
    let rad = m.radical();
    let top = m.top_positions();
    let maps = m
        .actions()
        .iter()
        .map(|x| {
            let cols: Vec<Vec<Scalar>> = top
                .iter()
                .map(|&p| {
                    let image = x.column(p);
                    rad.pivots().iter().map(|&q| image[q].clone()).collect()
                })
                .collect();
            Matrix::from_columns(f, rad.dim(), &cols)
        })
        .collect();
    KroneckerRep::new(f, top.len(), rad.dim(), maps)
}

/// `π V = (V_0 ⊕ V_1; [[0, 0], [φ_i, 0]])` over an algebra with `a = 0`.
pub fn push_down(rep: &KroneckerRep, alg: &Arc<ShortAlgebra>) -> Result<AModule> {
    if alg.a() != 0 {
        return Err(Error::AlgebraMismatch);
    }
    push_down_to(rep, alg)
}

/// The same block action over any short algebra with `e` generators; the
/// result is annihilated by `J²`.
pub fn push_down_to(rep: &KroneckerRep, alg: &Arc<ShortAlgebra>) -> Result<AModule> {
    if rep.e != alg.e() || rep.field != alg.field() {
        return Err(Error::AlgebraMismatch);
    }
    let d = rep.dim0 + rep.dim1;
    let actions = rep
        .maps
        .iter()
        .map(|phi| {
            let mut x = Matrix::zeros(rep.field, d, d);
            x.set_block(rep.dim0, 0, phi);
            x
        })
        .collect();
    AModule::new(alg.clone(), d, actions)
}

/// `dim Hom(V, W)`: pairs `(f_0, f_1)` with `ψ_i f_0 = f_1 φ_i`.
pub fn kronecker_hom_dim(v: &KroneckerRep, w: &KroneckerRep) -> Result<usize> {
    if v.e != w.e || v.field != w.field {
        return Err(Error::AlgebraMismatch);
    }
    let f = v.field;
    let n0 = w.dim0 * v.dim0;
    let n1 = w.dim1 * v.dim1;
    let f0 = |s: usize, c: usize| s * v.dim0 + c;
    let f1 = |r: usize, s: usize| n0 + r * v.dim1 + s;
    let mut rows = Vec::new();
    for (phi, psi) in v.maps.iter().zip(&w.maps) {
        for r in 0..w.dim1 {
            for c in 0..v.dim0 {
                let mut eq = vec![f.zero(); n0 + n1];
                for s in 0..w.dim0 {
                    eq[f0(s, c)] = psi.get(r, s).clone();
                }
                for s in 0..v.dim1 {
                    eq[f1(r, s)] = -phi.get(s, c);
                }
                rows.push(eq);
            }
        }
    }
    if rows.is_empty() {
        return Ok(n0 + n1);
    }
    Ok(n0 + n1 - Matrix::from_rows(f, rows)?.rank())
}

/// Breakdown of `dim Hom_A(M, N) = dim Hom(M̃, Ñ) + |top M|·|rad N|`.
#[derive(Clone, Debug, Serialize)]
pub struct HomDecomposition {
    pub hom_a: usize,
    pub hom_kronecker: usize,
    pub top_to_rad: usize,
    pub holds: bool,
}

pub fn hom_decomposition(m: &AModule, n: &AModule) -> Result<HomDecomposition> {
    if m.algebra().a() != 0 {
        return Err(Error::WrongHilbertType(format!(
            "hom decomposition is stated over L(e), got {:?}",
            m.algebra().hilbert_type()
        )));
    }
    let (tm, tn) = (tilde(m)?, tilde(n)?);
    let hom_a = hom_dim(m, n)?;
    let hom_kronecker = kronecker_hom_dim(&tm, &tn)?;
    let top_to_rad = tm.dim0 * tn.dim1;
    Ok(HomDecomposition {
        hom_a,
        hom_kronecker,
        top_to_rad,
        holds: hom_a == hom_kronecker + top_to_rad,
    })
}

pub fn hom_decomposition_check(m: &AModule, n: &AModule) -> Result<bool> {
    Ok(hom_decomposition(m, n)?.holds)
}

/// `β(v_i, v_j)`, the coefficient of `w_1` in `v_i v_j`, checked non-degenerate.
fn beta_form(alg: &ShortAlgebra) -> Result<Matrix> {
    if alg.a() != 1 {
        return Err(Error::WrongHilbertType(format!(
            "σ needs Hilbert type (e,1), got {:?}",
            alg.hilbert_type()
        )));
    }
    if !alg.is_self_injective() {
        return Err(Error::NotSelfInjective);
    }
    let e = alg.e();
    let rows = (0..e)
        .map(|i| (0..e).map(|j| alg.constant(i, j, 0).clone()).collect())
        .collect();
    let beta = Matrix::from_rows(alg.field(), rows)?;
    if !beta.is_invertible() {
        return Err(Error::InvariantViolation("multiplication form is degenerate".into()));
    }
    Ok(beta)
}

/// `σ_β(V_0, V_1; φ) = (Ker φ, φ')` with `φ'_j(κ) = Σ_i β(v_j, v_i) κ_i`
/// for `κ = Σ_i v_i ⊗ κ_i` in the kernel of `k^e ⊗ V_0 → V_1`.
pub fn sigma_reflection(alg: &ShortAlgebra, rep: &KroneckerRep) -> Result<KroneckerRep> {
    let beta = beta_form(alg)?;
    if rep.e != alg.e() || rep.field != alg.field() {
        return Err(Error::AlgebraMismatch);
    }
    let (f, e, d0) = (rep.field, rep.e, rep.dim0);
    let kernel = Subspace::kernel(&rep.assembled());
    let maps = (0..e)
        .map(|j| {
            let cols: Vec<Vec<Scalar>> = kernel
                .basis()
                .iter()
                .map(|kappa| {
                    let mut out = vec![f.zero(); d0];
                    for i in 0..e {
                        let b = beta.get(j, i);
                        if !b.is_zero() {
                            crate::linalg::axpy(&mut out, b, &kappa[i * d0..(i + 1) * d0]);
                        }
                    }
                    out
                })
                .collect();
            Matrix::from_columns(f, d0, &cols)
        })
        .collect();
    KroneckerRep::new(f, kernel.dim(), d0, maps)
}

/// `π σ(V) ≅ Ω π(V)` for a representation without an `S(1)` summand.
pub fn verify_sigma_omega_rep(alg: &Arc<ShortAlgebra>, rep: &KroneckerRep) -> Result<bool> {
    if rep.has_simple_projective_summand() {
        return Err(Error::HypothesisNotMet(
            "representation has the simple projective S(1) as a summand".into(),
        ));
    }
    let reflected = push_down_to(&sigma_reflection(alg, rep)?, alg)?;
    let omega = syzygy(&push_down_to(rep, alg)?)?;
    is_isomorphic(&reflected, &omega, 0)
}

/// `π σ(M̃) ≅ ΩM`.
pub fn verify_sigma_omega(alg: &Arc<ShortAlgebra>, m: &AModule) -> Result<bool> {
    if !m.algebra().same_structure(alg) {
        return Err(Error::AlgebraMismatch);
    }
    let rep = tilde(m)?;
    if rep.has_simple_projective_summand() {
        return Err(Error::HypothesisNotMet(
            "M̃ has the simple projective S(1) as a summand".into(),
        ));
    }
    let reflected = push_down_to(&sigma_reflection(alg, &rep)?, alg)?;
    is_isomorphic(&reflected, &syzygy(m)?, 0)
}

/// Preinjective `Q_i = σ^i S(0)` built with the form of `alg`, of
/// dimension vector `(b_i, b_{i−1})` over `K(e)`.
pub fn preinjective(alg: &ShortAlgebra, i: usize) -> Result<KroneckerRep> {
    let mut rep = KroneckerRep::simple_injective(alg.field(), alg.e());
    for _ in 0..i {
        rep = sigma_reflection(alg, &rep)?;
    }
    Ok(rep)
}

/// Preprojective `P_i`, the swapped dual of `Q_i`.
pub fn preprojective(alg: &ShortAlgebra, i: usize) -> Result<KroneckerRep> {
    Ok(preinjective(alg, i)?.swap_dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{preset, PresetParams};
    use crate::homology::ext_dim;
    use crate::module::{cyclic_submodule, left_regular, radical_module, simple_module};

    fn alg(name: &str, params: PresetParams) -> Arc<ShortAlgebra> {
        Arc::new(preset(name, &params).unwrap())
    }

    #[test]
    fn tilde_examples() {
        let l2 = alg("L", PresetParams::e(2));
        assert_eq!(tilde(&simple_module(&l2)).unwrap().dim_vector(), (1, 0));
        let reg = tilde(&left_regular(&l2)).unwrap();
        assert_eq!(reg.dim_vector(), (1, 2));
        let f = l2.field();
        assert_eq!(reg.maps[0], Matrix::from_i64(f, &[&[1], &[0]]));
        assert_eq!(reg.maps[1], Matrix::from_i64(f, &[&[0], &[1]]));
        let q = alg("qexterior", PresetParams::default());
        assert_eq!(tilde(&radical_module(&q)).unwrap().dim_vector(), (2, 1));
    }

    #[test]
    fn push_down_round_trip() {
        let l2 = alg("L", PresetParams::e(2));
        let s = push_down(&KroneckerRep::simple_injective(l2.field(), 2), &l2).unwrap();
        assert!(is_isomorphic(&s, &simple_module(&l2), 0).unwrap());
        let reg = left_regular(&l2);
        assert!(is_isomorphic(&push_down(&tilde(&reg).unwrap(), &l2).unwrap(), &reg, 0).unwrap());
        let q = alg("qexterior", PresetParams::default());
        assert!(matches!(push_down(&tilde(&simple_module(&q)).unwrap(), &q), Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn hom_decomposition_examples() {
        let l2 = alg("L", PresetParams::e(2));
        let s = simple_module(&l2);
        let d = hom_decomposition(&s, &s).unwrap();
        assert_eq!((d.hom_a, d.hom_kronecker, d.top_to_rad), (1, 1, 0));
        let reg = left_regular(&l2);
        let d = hom_decomposition(&reg, &reg).unwrap();
        assert_eq!((d.hom_a, d.hom_kronecker, d.top_to_rad), (3, 1, 2));
    }

    #[test]
    fn sigma_examples() {
        let q = alg("qexterior", PresetParams::default());
        let f = q.field();
        assert_eq!(sigma_reflection(&q, &KroneckerRep::simple_projective(f, 2)).unwrap().dim_vector(), (0, 0));
        let j = radical_module(&q);
        assert_eq!(sigma_reflection(&q, &tilde(&j).unwrap()).unwrap().dim_vector(), (3, 2));
        assert!(verify_sigma_omega(&q, &j).unwrap());
        assert!(verify_sigma_omega(&q, &simple_module(&q)).unwrap());
        let x_minus_y = |alpha: i64| {
            let mut v = q.zero();
            v[1] = f.one();
            v[2] = f.from_i64(-alpha);
            cyclic_submodule(&q, &v).unwrap()
        };
        assert!(verify_sigma_omega(&q, &x_minus_y(1)).unwrap());
        assert!(is_isomorphic(&syzygy(&x_minus_y(1)).unwrap(), &x_minus_y(2), 0).unwrap());
        let s1 = KroneckerRep::simple_projective(f, 2);
        assert!(matches!(verify_sigma_omega_rep(&q, &s1), Err(Error::HypothesisNotMet(_))));
        assert!(matches!(
            sigma_reflection(&alg("L", PresetParams::e(2)), &s1),
            Err(Error::WrongHilbertType(_))
        ));
    }

    #[test]
    fn exceptional_modules_have_no_self_extensions() {
        let q = alg("qexterior", PresetParams::default());
        let l2 = alg("L", PresetParams::e(2));
        for i in 1..=3 {
            let qi = preinjective(&q, i).unwrap();
            assert_eq!(qi.dim_vector(), (i + 1, i));
            for rep in [qi.clone(), qi.swap_dual()] {
                let m = push_down(&rep, &l2).unwrap();
                assert_eq!(ext_dim(&m, &m, 1).unwrap(), 0, "i = {i}");
            }
        }
    }
}
