use serde::Serialize;

use super::hom::hom_matrices;
use super::AModule;
use crate::error::Result;
use crate::linalg::{Field, Matrix, ScalarRng};

#[derive(Clone, Copy, Debug)]
pub struct IsoOptions {
    pub seed: u64,
    /// Random combinations of the `Hom(M, N)` basis to try.
    pub random_trials: usize,
    /// Over ℚ, points `1..=moment_points` on the curve `Σ t^k F_k`.
    pub moment_points: usize,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            seed: 0,
            random_trials: 64,
            moment_points: 16,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// True for a found isomorphism or a dimension obstruction; a negative
    /// answer from the search alone is not certified.
    pub certified: bool,
    pub reason: String,
}

impl IsoResult {
    fn no(certified: bool, reason: &str) -> IsoResult {
        IsoResult {
            isomorphic: false,
            certified,
            reason: reason.into(),
        }
    }
}

pub fn is_isomorphic(m: &AModule, n: &AModule, seed: u64) -> Result<bool> {
    let opts = IsoOptions {
        seed,
        ..Default::default()
    };
    Ok(is_isomorphic_with(m, n, &opts)?.isomorphic)
}

/// Searches `Hom(M, N)` for an invertible element.
pub fn is_isomorphic_with(m: &AModule, n: &AModule, opts: &IsoOptions) -> Result<IsoResult> {
    m.check_same_algebra(n)?;
    if m.dim() != n.dim() {
        return Ok(IsoResult::no(true, "dimensions differ"));
    }
    if m.dim() == 0 {
        return Ok(IsoResult {
            isomorphic: true,
            certified: true,
            reason: "both zero".into(),
        });
    }
    if m.top_dim() != n.top_dim() || m.socle().dim() != n.socle().dim() {
        return Ok(IsoResult::no(true, "top or socle dimensions differ"));
    }
    let forward = hom_matrices(m, n)?;
    let backward = hom_matrices(n, m)?;
    if forward.len() != backward.len() {
        return Ok(IsoResult::no(true, "dim Hom(M,N) != dim Hom(N,M)"));
    }
    let found = |reason: &str| IsoResult {
        isomorphic: true,
        certified: true,
        reason: reason.into(),
    };
    if forward.iter().any(Matrix::is_invertible) {
        return Ok(found("basis element is invertible"));
    }
    let f = m.field();
    let combine = |coefs: &[crate::linalg::Scalar]| {
        let mut acc = Matrix::zeros(f, n.dim(), m.dim());
        for (c, basis) in coefs.iter().zip(&forward) {
            acc.add_scaled(c, basis);
        }
        acc
    };
    let mut rng = ScalarRng::new(f, opts.seed);
    for _ in 0..opts.random_trials {
        if combine(&rng.vector(forward.len())).is_invertible() {
            return Ok(found("random combination is invertible"));
        }
    }
    if f == Field::Rationals {
        for point in 1..=opts.moment_points as i64 {
            let t = f.from_i64(point);
            let mut power = f.one();
            let coefs: Vec<_> = (0..forward.len())
                .map(|_| {
                    let c = power.clone();
                    power = &power * &t;
                    c
                })
                .collect();
            if combine(&coefs).is_invertible() {
                return Ok(found("moment-curve combination is invertible"));
            }
        }
    }
    Ok(IsoResult::no(false, "no isomorphism found (probabilistic)"))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{preset, PresetParams};
    use crate::module::{direct_sum, random_module, simple_module};

    #[test]
    fn basic_cases() {
        let a = Arc::new(preset("ex5_5", &PresetParams::default()).unwrap());
        let m = random_module(&a, 2, 1, 3);
        assert!(is_isomorphic(&m, &m, 0).unwrap());
        let s = simple_module(&a);
        let s2 = direct_sum(&s, &s).unwrap();
        let r = is_isomorphic_with(&s, &s2, &IsoOptions::default()).unwrap();
        assert!(!r.isomorphic && r.certified);
    }

    #[test]
    fn change_of_basis_is_detected() {
        let a = Arc::new(preset("qexterior", &PresetParams::default()).unwrap());
        let m = random_module(&a, 2, 2, 11);
        let f = a.field();
        let d = m.dim();
        // conjugate by an invertible upper triangular matrix
        let mut p = Matrix::identity(f, d);
        for i in 0..d {
            for j in i + 1..d {
                p.set(i, j, f.from_i64(((i + 2 * j) % 3) as i64 - 1));
            }
        }
        let pinv = p.inverse().unwrap();
        let actions = m.actions().iter().map(|x| p.mul(x).mul(&pinv)).collect();
        let n = AModule::new(a, d, actions).unwrap();
        assert!(is_isomorphic(&m, &n, 0).unwrap());
    }
}
