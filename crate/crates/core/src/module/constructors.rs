use std::sync::Arc;

use super::AModule;
use crate::algebra::ShortAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, ScalarRng, Subspace};

pub fn simple_module(alg: &Arc<ShortAlgebra>) -> AModule {
    let zero = Matrix::zeros(alg.field(), 1, 1);
    AModule::from_parts(alg.clone(), 1, vec![zero; alg.e()])
}

/// `_A A` in the basis `(1, v_1..v_e, w_1..w_a)`.
pub fn left_regular(alg: &Arc<ShortAlgebra>) -> AModule {
    free_module(alg, 1)
}

/// `A^t`, with copy `k` occupying coordinates `k·n .. (k+1)·n`.
pub fn free_module(alg: &Arc<ShortAlgebra>, t: usize) -> AModule {
    let n = alg.dim();
    let actions = (0..alg.e())
        .map(|i| {
            let l = alg.left_mul_matrix(&alg.basis_element(1 + i));
            let mut m = Matrix::zeros(alg.field(), t * n, t * n);
            for k in 0..t {
                m.set_block(k * n, k * n, &l);
            }
            m
        })
        .collect();
    AModule::from_parts(alg.clone(), t * n, actions)
}

/// `_A J` as a submodule of the regular module.
pub fn radical_module(alg: &Arc<ShortAlgebra>) -> AModule {
    let reg = left_regular(alg);
    let basis: Vec<Vec<Scalar>> = (1..alg.dim()).map(|b| alg.basis_element(b)).collect();
    let sub = Subspace::span(alg.field(), alg.dim(), &basis).expect("lengths match");
    restrict(&reg, &sub)
}

/// `A·x` inside the regular module.
pub fn cyclic_submodule(alg: &Arc<ShortAlgebra>, x: &[Scalar]) -> Result<AModule> {
    if x.len() != alg.dim() {
        return Err(Error::BadParams(format!(
            "element has {} coordinates, algebra has dimension {}",
            x.len(),
            alg.dim()
        )));
    }
    generated_submodule(&left_regular(alg), &[x.to_vec()])
}

/// Span of all `b·g` for algebra basis elements `b`; since `J³ = 0` this is
/// the submodule generated by the `g`.
pub(crate) fn generated_subspace(m: &AModule, gens: &[Vec<Scalar>]) -> Result<Subspace> {
    let n = m.algebra().dim();
    let mut vectors = Vec::new();
    for g in gens {
        if g.len() != m.dim() {
            return Err(Error::DimensionMismatch {
                expected: m.dim(),
                found: g.len(),
            });
        }
        vectors.push(g.clone());
        for b in 1..n {
            vectors.push(m.act_vec(&m.algebra().basis_element(b), g));
        }
    }
    Subspace::span(m.field(), m.dim(), &vectors)
}

pub fn generated_submodule(m: &AModule, gens: &[Vec<Scalar>]) -> Result<AModule> {
    Ok(restrict(m, &generated_subspace(m, gens)?))
}

fn is_invariant(m: &AModule, sub: &Subspace) -> bool {
    sub.basis()
        .iter()
        .all(|b| m.actions().iter().all(|x| sub.contains(&x.mul_vec(b))))
}

/// The submodule with the given basis; fails unless the span is invariant.
pub fn submodule(m: &AModule, basis: &[Vec<Scalar>]) -> Result<AModule> {
    let sub = Subspace::span(m.field(), m.dim(), basis)?;
    if !is_invariant(m, &sub) {
        return Err(Error::BadParams("span is not a submodule".into()));
    }
    Ok(restrict(m, &sub))
}

/// `M / U`; fails unless `U` is a submodule.
pub fn quotient(m: &AModule, sub_basis: &[Vec<Scalar>]) -> Result<AModule> {
    let sub = Subspace::span(m.field(), m.dim(), sub_basis)?;
    if !is_invariant(m, &sub) {
        return Err(Error::BadParams("span is not a submodule".into()));
    }
    Ok(quotient_by(m, &sub))
}

/// Action on an invariant subspace, in the coordinates of its basis.
pub(crate) fn restrict(m: &AModule, sub: &Subspace) -> AModule {
    let (f, k) = (m.field(), sub.dim());
    let pivots = sub.pivots();
    let actions = m
        .actions()
        .iter()
        .map(|x| {
            let cols: Vec<Vec<Scalar>> = sub
                .basis()
                .iter()
                .map(|b| {
                    let image = x.mul_vec(b);
                    pivots.iter().map(|&p| image[p].clone()).collect()
                })
                .collect();
            Matrix::from_columns(f, k, &cols)
        })
        .collect();
    AModule::from_parts(m.algebra().clone(), k, actions)
}

/// Induced action on `M / U`, with the standard vectors off the pivots of
/// `U` as basis.
pub(crate) fn quotient_by(m: &AModule, sub: &Subspace) -> AModule {
    let f = m.field();
    let positions = sub.complement_positions();
    let actions = m
        .actions()
        .iter()
        .map(|x| {
            let cols: Vec<Vec<Scalar>> = positions
                .iter()
                .map(|&c| {
                    let r = sub.reduce(&x.column(c));
                    positions.iter().map(|&p| r[p].clone()).collect()
                })
                .collect();
            Matrix::from_columns(f, positions.len(), &cols)
        })
        .collect();
    AModule::from_parts(m.algebra().clone(), positions.len(), actions)
}

pub fn direct_sum(m: &AModule, n: &AModule) -> Result<AModule> {
    m.check_same_algebra(n)?;
    let actions = m
        .actions()
        .iter()
        .zip(n.actions())
        .map(|(x, y)| x.direct_sum(y))
        .collect();
    Ok(AModule::from_parts(m.algebra().clone(), m.dim() + n.dim(), actions))
}

pub fn direct_sum_all(alg: &Arc<ShortAlgebra>, parts: &[AModule]) -> Result<AModule> {
    let mut acc = AModule::from_parts(
        alg.clone(),
        0,
        vec![Matrix::zeros(alg.field(), 0, 0); alg.e()],
    );
    for p in parts {
        acc = direct_sum(&acc, p)?;
    }
    Ok(acc)
}

/// The module `M(α)` over `Λ_c`: basis `v, v', v'', v_1..v_c` with
/// `xv = αv'`, `yv = v'`, `zv = v''`, `u_i v = v_i`.
pub fn m_alpha(alg: &Arc<ShortAlgebra>, alpha: &Scalar) -> Result<AModule> {
    let (e, a) = alg.hilbert_type();
    if e < 3 || a + 1 != e {
        return Err(Error::WrongHilbertType(format!(
            "M(alpha) needs type (3+c, 2+c), got ({e}, {a})"
        )));
    }
    if alpha.field() != alg.field() {
        return Err(Error::FieldMismatch);
    }
    let f = alg.field();
    let d = e;
    let mut actions = vec![Matrix::zeros(f, d, d); e];
    actions[0].set(1, 0, alpha.clone());
    actions[1].set(1, 0, f.one());
    actions[2].set(2, 0, f.one());
    for (i, x) in actions.iter_mut().enumerate().skip(3) {
        x.set(i, 0, f.one());
    }
    AModule::new(alg.clone(), d, actions)
        .map_err(|err| Error::BadParams(format!("M(alpha) is not a module here: {err}")))
}

fn random_radical_elements(
    alg: &ShortAlgebra,
    gens: usize,
    count: usize,
    seed: u64,
) -> Vec<Vec<Scalar>> {
    let n = alg.dim();
    let mut rng = ScalarRng::new(alg.field(), seed);
    (0..count)
        .map(|_| {
            let mut v = rng.vector(gens * n);
            for k in 0..gens {
                v[k * n] = alg.field().zero();
            }
            v
        })
        .collect()
}

/// `A^g / A·{r_1..r_k}` for `k = rels` random radical elements of `A^g`.
pub fn random_module(alg: &Arc<ShortAlgebra>, gens: usize, rels: usize, seed: u64) -> AModule {
    let free = free_module(alg, gens);
    let r = random_radical_elements(alg, gens, rels, seed);
    let sub = generated_subspace(&free, &r).expect("lengths match");
    quotient_by(&free, &sub)
}

/// Like [`random_module`] but also factoring out `J²A^g`, so the result has
/// Loewy length at most 2.
pub fn random_loewy2_module(
    alg: &Arc<ShortAlgebra>,
    gens: usize,
    rels: usize,
    seed: u64,
) -> AModule {
    let n = alg.dim();
    let free = free_module(alg, gens);
    let mut r = random_radical_elements(alg, gens, rels, seed);
    for k in 0..gens {
        for b in 1 + alg.e()..n {
            let mut v = vec![alg.field().zero(); gens * n];
            v[k * n + b] = alg.field().one();
            r.push(v);
        }
    }
    let sub = generated_subspace(&free, &r).expect("lengths match");
    quotient_by(&free, &sub)
}
