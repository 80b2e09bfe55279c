//! Oracles for integration tests that share no code with the library's
//! linear algebra: plain Gaussian elimination over `BigRational`.
#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use shortloc::algebra::{preset, PresetParams, ShortAlgebra};
use shortloc::kronecker::KroneckerRep;
use shortloc::linalg::Matrix;
use shortloc::module::{cyclic_submodule, AModule};

pub type Q = BigRational;
pub type QMatrix = Vec<Vec<Q>>;

pub fn alg(name: &str, params: PresetParams) -> Arc<ShortAlgebra> {
    Arc::new(preset(name, &params).unwrap_or_else(|e| panic!("preset {name}: {e}")))
}

/// `A·x` for `x = v_1 − α·v_2`, or `A·v_2` when `alpha` is `None`.
pub fn x_minus(a: &Arc<ShortAlgebra>, alpha: Option<i64>) -> AModule {
    let f = a.field();
    let mut v = a.zero();
    match alpha {
        Some(al) => {
            v[1] = f.one();
            v[2] = f.from_i64(-al);
        }
        None => v[2] = f.one(),
    }
    cyclic_submodule(a, &v).unwrap()
}

fn parse(rows: Vec<Vec<String>>) -> QMatrix {
    rows.into_iter()
        .map(|r| r.iter().map(|s| s.parse::<Q>().expect("rational entry")).collect())
        .collect()
}

pub fn to_q(m: &Matrix) -> QMatrix {
    parse(m.to_strings())
}

pub fn actions(m: &AModule) -> Vec<QMatrix> {
    m.action_strings().into_iter().map(parse).collect()
}

pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &pivot;
            let (head, tail) = rows.split_at_mut(i);
            for (x, y) in tail[0][c..].iter_mut().zip(&head[r][c..]) {
                *x -= &factor * y;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// `dim {F : F X_i = Y_i F}` for `d × d` matrices `X_i` and `d' × d'` matrices `Y_i`.
pub fn intertwiner_dim(xs: &[QMatrix], ys: &[QMatrix], d: usize, d2: usize) -> usize {
    let unknowns = d2 * d;
    if unknowns == 0 {
        return 0;
    }
    let mut rows = Vec::new();
    for (x, y) in xs.iter().zip(ys) {
        for r in 0..d2 {
            for c in 0..d {
                let mut row = vec![Q::zero(); unknowns];
                for k in 0..d {
                    row[r * d + k] += &x[k][c];
                }
                for k in 0..d2 {
                    row[k * d + c] -= &y[r][k];
                }
                rows.push(row);
            }
        }
    }
    unknowns - rank(rows)
}

pub fn hom_dim_oracle(m: &AModule, n: &AModule) -> usize {
    intertwiner_dim(&actions(m), &actions(n), m.dim(), n.dim())
}

/// Pairs `(f_0, f_1)` with `ψ_i f_0 = f_1 φ_i`.
pub fn kronecker_hom_oracle(v: &KroneckerRep, w: &KroneckerRep) -> usize {
    let (a0, a1, b0, b1) = (v.dim0, v.dim1, w.dim0, w.dim1);
    let unknowns = b0 * a0 + b1 * a1;
    if unknowns == 0 {
        return 0;
    }
    let f1 = |r: usize, k: usize| b0 * a0 + r * a1 + k;
    let mut rows = Vec::new();
    for (phi, psi) in v.maps.iter().zip(&w.maps) {
        let (phi, psi) = (to_q(phi), to_q(psi));
        for r in 0..b1 {
            for c in 0..a0 {
                let mut row = vec![Q::zero(); unknowns];
                for k in 0..b0 {
                    row[k * a0 + c] += &psi[r][k];
                }
                for k in 0..a1 {
                    row[f1(r, k)] -= &phi[k][c];
                }
                rows.push(row);
            }
        }
    }
    unknowns - rank(rows)
}

/// `J·M = 0`, checked on the action matrices.
pub fn is_semisimple(m: &AModule) -> bool {
    actions(m).iter().all(|x| x.iter().flatten().all(Zero::is_zero))
}

/// `b_n = Y / 2^n` where `(e + √d)^(n+1) = X + Y√d`, `d = e² − 4a`.
pub fn b_by_conjugates(e: usize, a: usize, n: usize) -> Option<BigInt> {
    let d = BigInt::from(e * e - 4 * a);
    let e = BigInt::from(e);
    let (mut x, mut y) = (BigInt::one(), BigInt::zero());
    for _ in 0..=n {
        (x, y) = (&x * &e + &y * &d, &x + &y * &e);
    }
    let pow = BigInt::one() << n;
    let (q, r) = y.div_rem(&pow);
    r.is_zero().then_some(q)
}

