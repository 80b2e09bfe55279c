use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// Seeded source of field elements.  All randomness in the crate goes
/// through ChaCha8 seeded from an explicit `u64`, so results replay exactly.
pub struct ScalarRng {
    rng: ChaCha8Rng,
    pool: Vec<Scalar>,
}

impl ScalarRng {
    pub fn new(field: Field, seed: u64) -> ScalarRng {
        ScalarRng::with_pool(field.default_pool(), seed)
    }

    pub fn with_pool(pool: Vec<Scalar>, seed: u64) -> ScalarRng {
        assert!(!pool.is_empty(), "empty scalar pool");
        ScalarRng {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool,
        }
    }

    pub fn scalar(&mut self) -> Scalar {
        let i = self.rng.gen_range(0..self.pool.len());
        self.pool[i].clone()
    }

    pub fn vector(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

pub fn random_matrix(field: Field, rows: usize, cols: usize, seed: u64, pool: &[Scalar]) -> Matrix {
    if rows == 0 || cols == 0 {
        return Matrix::zeros(field, rows, cols);
    }
    let pool = if pool.is_empty() {
        field.default_pool()
    } else {
        pool.to_vec()
    };
    let mut rng = ScalarRng::with_pool(pool, seed);
    let data = (0..rows).map(|_| rng.vector(cols)).collect();
    Matrix::from_rows(field, data).expect("rows have equal length")
}
