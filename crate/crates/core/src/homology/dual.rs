use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::module::{free_module, hom_matrices, left_regular, AModule, ModuleMap};

/// `M* = Hom(M, A)` as a left module over the opposite algebra, together
/// with its basis of maps `F_j` (`n × d` matrices).
pub struct Dual {
    pub module: AModule,
    pub maps: Vec<Matrix>,
    /// Span of the flattened `F_j`; its basis is exactly `maps`.
    space: Subspace,
}

impl Dual {
    /// Coordinates of a map `M → A` in the basis `F_j`.
    pub fn coordinates(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        self.space.coordinates(f.entries())
    }
}

fn flat_to_matrix(v: &[Scalar], rows: usize, cols: usize, field: crate::linalg::Field) -> Matrix {
    let data = (0..rows).map(|r| v[r * cols..(r + 1) * cols].to_vec()).collect();
    Matrix::from_rows(field, data).unwrap_or_else(|_| Matrix::zeros(field, rows, cols))
}

/// `M*` with `(f·a)(m) = f(m)·a`; as a module over `A^op` the element `v_i`
/// acts by right multiplication with `v_i` in `A`.
pub fn a_dual(m: &AModule) -> Result<Dual> {
    let alg = m.algebra();
    let (n, d, f) = (alg.dim(), m.dim(), m.field());
    let op = Arc::new(alg.opposite());
    let homs = hom_matrices(m, &left_regular(alg))?;
    let flat: Vec<Vec<Scalar>> = homs.iter().map(|h| h.entries().to_vec()).collect();
    let space = Subspace::span(f, n * d, &flat)?;
    let maps: Vec<Matrix> = space.basis().iter().map(|v| flat_to_matrix(v, n, d, f)).collect();
    let pivots = space.pivots();
    let actions = (0..alg.e())
        .map(|i| {
            let r = alg.right_mul_matrix(&alg.basis_element(1 + i));
            let cols: Vec<Vec<Scalar>> = maps
                .iter()
                .map(|fj| {
                    let image = r.mul(fj);
                    pivots.iter().map(|&p| image.entries()[p].clone()).collect()
                })
                .collect();
            Matrix::from_columns(f, maps.len(), &cols)
        })
        .collect();
    let module = AModule::from_parts(op, maps.len(), actions);
    Ok(Dual {
        module,
        maps,
        space,
    })
}

/// `ev: M → M**`, `ev(m)(f) = f(m)`, with `M**` built as the dual of the
/// dual (a module over `(A^op)^op = A`).
pub fn eval_map(m: &AModule) -> Result<ModuleMap> {
    let first = a_dual(m)?;
    let second = a_dual(&first.module)?;
    let (f, n, d) = (m.field(), m.algebra().dim(), m.dim());
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|c| {
            // ev(e_c) is the n × h matrix whose column j is F_j e_c
            let image = Matrix::from_columns(
                f,
                n,
                &first.maps.iter().map(|fj| fj.column(c)).collect::<Vec<_>>(),
            );
            second.coordinates(&image).ok_or_else(|| {
                Error::InvariantViolation("evaluation is not a homomorphism".into())
            })
        })
        .collect::<Result<_>>()?;
    let matrix = Matrix::from_columns(f, second.maps.len(), &cols);
    let target = AModule::from_parts(m.algebra().clone(), second.module.dim(), second.module.actions().to_vec());
    Ok(ModuleMap::new_unchecked(m.clone(), target, matrix))
}

/// `ev` injective: the maps `M → A` separate points.
pub fn is_torsionless(m: &AModule) -> Result<bool> {
    let d = m.dim();
    if d == 0 {
        return Ok(true);
    }
    let homs = hom_matrices(m, &left_regular(m.algebra()))?;
    if homs.is_empty() {
        return Ok(false);
    }
    let stacked = Matrix::vstack_all(m.field(), d, &homs);
    Ok(stacked.rank() == d)
}

/// `ev` bijective.
pub fn is_reflexive(m: &AModule) -> Result<bool> {
    if !is_torsionless(m)? {
        return Ok(false);
    }
    let first = a_dual(m)?;
    let second = a_dual(&first.module)?;
    Ok(second.module.dim() == m.dim())
}

/// Minimal left `add(A)`-approximation `u: M → A^z`.
pub struct Approximation {
    pub z: usize,
    /// `z·n × d`: the stacked generators `f_1..f_z` of `M*`.
    pub map: Matrix,
    pub injective: bool,
    /// Every map `M → A` factors through `u`.
    pub certified: bool,
    /// `℧M = coker u`.
    pub cokernel: AModule,
}

pub fn minimal_left_approximation(m: &AModule) -> Result<Approximation> {
    let alg = m.algebra();
    let (n, d, f) = (alg.dim(), m.dim(), m.field());
    let dual = a_dual(m)?;
    let gens: Vec<&Matrix> = dual
        .module
        .top_positions()
        .into_iter()
        .map(|p| &dual.maps[p])
        .collect();
    let z = gens.len();
    let map = if z == 0 {
        Matrix::zeros(f, 0, d)
    } else {
        Matrix::vstack_all(f, d, &gens.iter().map(|g| (*g).clone()).collect::<Vec<_>>())
    };
    // a map A → A of left modules is right multiplication by an element
    let mut factored = Vec::new();
    for b in 0..n {
        let r = alg.right_mul_matrix(&alg.basis_element(b));
        for g in &gens {
            factored.push(r.mul(g).entries().to_vec());
        }
    }
    let reach = Subspace::span(f, n * d, &factored)?;
    let certified = dual.maps.iter().all(|fj| reach.contains(fj.entries()));
    let injective = map.rank() == d;
    let image = Subspace::column_space(&map);
    let cokernel = crate::module::quotient_by_subspace(&free_module(alg, z), &image);
    Ok(Approximation {
        z,
        map,
        injective,
        certified,
        cokernel,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MhoFlags {
    pub torsionless: bool,
    pub certified: bool,
}

/// `℧M`; the flags record whether `M → A^z` was injective.
pub fn mho_flagged(m: &AModule) -> Result<(AModule, MhoFlags)> {
    let approx = minimal_left_approximation(m)?;
    if !approx.certified {
        return Err(Error::InvariantViolation(
            "approximation does not factor all maps into A".into(),
        ));
    }
    Ok((
        approx.cokernel,
        MhoFlags {
            torsionless: approx.injective,
            certified: approx.certified,
        },
    ))
}

pub fn mho(m: &AModule) -> Result<AModule> {
    Ok(mho_flagged(m)?.0)
}

pub fn mho_power(m: &AModule, n: usize) -> Result<AModule> {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = mho(&cur)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{preset, PresetParams};
    use crate::module::{cyclic_submodule, is_isomorphic, m_alpha, simple_module, DimVec};

    fn alg(name: &str, params: PresetParams) -> Arc<crate::algebra::ShortAlgebra> {
        Arc::new(preset(name, &params).unwrap())
    }

    #[test]
    fn dual_of_regular_is_regular_of_opposite() {
        let a = alg("ex5_3", PresetParams::default());
        let dual = a_dual(&left_regular(&a)).unwrap();
        let op = Arc::new(a.opposite());
        assert!(is_isomorphic(&dual.module, &left_regular(&op), 0).unwrap());
    }

    #[test]
    fn dual_dimension_vectors() {
        let a = alg("ex15_1", PresetParams::ea(3, 2));
        let ax = cyclic_submodule(&a, &a.basis_element(1)).unwrap();
        assert_eq!(a_dual(&ax).unwrap().module.dim_vector().unwrap(), DimVec::new(1, 2));
    }

    #[test]
    fn eval_map_is_a_homomorphism() {
        let a = alg("ex9_3", PresetParams::default());
        let ax = cyclic_submodule(&a, &a.basis_element(1)).unwrap();
        let ev = eval_map(&ax).unwrap();
        assert!(ev.is_homomorphism());
        assert!(ev.is_injective());
    }

    #[test]
    fn torsionless_and_reflexive_examples() {
        let q = alg("qexterior", PresetParams::default());
        assert!(is_reflexive(&simple_module(&q)).unwrap());
        let l = alg("L", PresetParams::e(2));
        let s = simple_module(&l);
        assert!(is_torsionless(&s).unwrap());
        assert!(!is_reflexive(&s).unwrap());
        let l0 = alg("lambda_c", PresetParams::default());
        let m2 = m_alpha(&l0, &l0.field().from_i64(2)).unwrap();
        assert!(!is_torsionless(&m2).unwrap());
    }

    #[test]
    fn approximation_examples() {
        let a = alg("ex9_3", PresetParams::default());
        let ap = minimal_left_approximation(&left_regular(&a)).unwrap();
        assert_eq!(ap.z, 1);
        assert!(ap.injective && ap.certified && ap.cokernel.is_zero());
        let ap = minimal_left_approximation(&simple_module(&a)).unwrap();
        // S* = span(y, yx) is cyclic over the opposite algebra
        assert_eq!(ap.z, 1);
        assert!(ap.certified);
    }

    #[test]
    fn mho_examples() {
        let q = alg("qexterior", PresetParams::default());
        let m = mho(&simple_module(&q)).unwrap();
        // A / soc A
        assert_eq!((m.dim(), m.top_dim()), (3, 1));
        let a = alg("ex15_1", PresetParams::ea(3, 2));
        let ax = cyclic_submodule(&a, &a.basis_element(1)).unwrap();
        assert_eq!(mho(&ax).unwrap().dim_vector().unwrap(), DimVec::new(1, 2));
    }
}
