use super::ShortAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

pub const PRESET_NAMES: &[&str] = &[
    "L",
    "qexterior",
    "lambda_c",
    "ex3_4",
    "ex5_3",
    "ex5_4a",
    "ex5_4b",
    "ex5_5",
    "ex8_3",
    "ex9_3",
    "ex9_4",
    "ex14_1",
    "ex15_1",
];

/// Optional parameters shared by the presets; unused ones are ignored.
#[derive(Clone, Debug)]
pub struct PresetParams {
    pub field: Field,
    pub e: Option<usize>,
    pub a: Option<usize>,
    pub c: Option<usize>,
    pub q: Option<Scalar>,
}

impl Default for PresetParams {
    fn default() -> Self {
        PresetParams {
            field: Field::Rationals,
            e: None,
            a: None,
            c: None,
            q: None,
        }
    }
}

impl PresetParams {
    pub fn e(e: usize) -> Self {
        PresetParams {
            e: Some(e),
            ..Default::default()
        }
    }

    pub fn ea(e: usize, a: usize) -> Self {
        PresetParams {
            e: Some(e),
            a: Some(a),
            ..Default::default()
        }
    }

    pub fn c(c: usize) -> Self {
        PresetParams {
            c: Some(c),
            ..Default::default()
        }
    }

    fn q(&self) -> Result<Scalar> {
        match &self.q {
            Some(q) if q.field() != self.field => Err(Error::FieldMismatch),
            Some(q) => Ok(q.clone()),
            None => Ok(self.field.from_i64(2)),
        }
    }
}

/// Quadratic algebra `k<x_1..x_e> / (relations) + J³`, where `basis` lists
/// the monomials `x_i x_j` chosen as a basis of `J²`.
struct Builder {
    field: Field,
    e: usize,
    relations: Vec<Vec<Scalar>>,
    basis: Vec<(usize, usize)>,
}

impl Builder {
    fn new(field: Field, e: usize) -> Builder {
        Builder {
            field,
            e,
            relations: Vec::new(),
            basis: Vec::new(),
        }
    }

    fn rel(&mut self, terms: &[(usize, usize, Scalar)]) -> &mut Self {
        let mut v = vec![self.field.zero(); self.e * self.e];
        for (i, j, c) in terms {
            let slot = &mut v[i * self.e + j];
            *slot = &*slot + c;
        }
        self.relations.push(v);
        self
    }

    fn zero(&mut self, i: usize, j: usize) -> &mut Self {
        let one = self.field.one();
        self.rel(&[(i, j, one)])
    }

    /// `x_i x_j - x_k x_l`.
    fn equal(&mut self, (i, j): (usize, usize), (k, l): (usize, usize)) -> &mut Self {
        let (one, minus) = (self.field.one(), self.field.from_i64(-1));
        self.rel(&[(i, j, one), (k, l, minus)])
    }

    fn build(&self, name: String) -> Result<ShortAlgebra> {
        let (e, f) = (self.e, self.field);
        let n2 = e * e;
        let a = self.basis.len();
        if self.relations.len() + a != n2 {
            return Err(Error::InvariantViolation(format!(
                "{name}: {} relations and {a} basis monomials for {n2} products",
                self.relations.len()
            )));
        }
        let mut cols = self.relations.clone();
        for &(i, j) in &self.basis {
            let mut v = vec![f.zero(); n2];
            v[i * e + j] = f.one();
            cols.push(v);
        }
        let b = Matrix::from_columns(f, n2, &cols);
        let x = b.inverse().ok_or_else(|| {
            Error::InvariantViolation(format!("{name}: relations and basis are dependent"))
        })?;
        let r = self.relations.len();
        let mut structure = Vec::with_capacity(n2 * a);
        for ij in 0..n2 {
            for m in 0..a {
                structure.push(x.get(r + m, ij).clone());
            }
        }
        ShortAlgebra::from_dense(f, e, a, structure, Some(name))
    }
}

fn need(v: Option<usize>, what: &str, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::BadParams(format!("preset {name} needs parameter {what}")))
}

/// Builds a named example algebra.
pub fn preset(name: &str, params: &PresetParams) -> Result<ShortAlgebra> {
    let f = params.field;
    f.check()?;
    let one = f.one();
    match name {
        "L" => {
            let e = need(params.e, "e", name)?;
            if e < 1 {
                return Err(Error::BadParams("L(e) needs e >= 1".into()));
            }
            ShortAlgebra::new(f, e, 0, &[], Some(format!("L({e})")))
        }
        "qexterior" => {
            let q = params.q()?;
            let (x, y) = (0, 1);
            let mut b = Builder::new(f, 2);
            b.zero(x, x).zero(y, y).rel(&[(x, y, one), (y, x, q.clone())]);
            b.basis = vec![(y, x)];
            b.build(format!("qexterior(q={q})"))
        }
        "lambda_c" => {
            let c = params.c.unwrap_or(0);
            let q = params.q()?;
            let (x, y, z) = (0, 1, 2);
            let u = |i: usize| 3 + i;
            let mut b = Builder::new(f, 3 + c);
            b.zero(x, x).zero(y, y).zero(z, z).zero(y, z);
            b.rel(&[(x, y, one.clone()), (y, x, q.clone())]);
            b.equal((x, z), (z, x)).equal((z, y), (z, x));
            for i in 0..c {
                b.equal((x, u(i)), (u(i), x));
                b.zero(y, u(i)).zero(u(i), y).zero(z, u(i)).zero(u(i), z);
                for j in 0..c {
                    b.zero(u(i), u(j));
                }
            }
            b.basis = vec![(y, x), (z, x)];
            b.basis.extend((0..c).map(|i| (u(i), x)));
            b.build(format!("lambda_{c}(q={q})"))
        }
        "ex3_4" => {
            let mut b = Builder::new(f, 2);
            b.equal((0, 1), (1, 0));
            b.basis = vec![(0, 0), (0, 1), (1, 1)];
            b.build("ex3_4".into())
        }
        "ex5_3" => {
            let mut b = Builder::new(f, 2);
            b.zero(1, 0).zero(1, 1);
            b.basis = vec![(0, 0), (0, 1)];
            b.build("ex5_3".into())
        }
        "ex5_4a" => {
            let (x, y, z) = (0, 1, 2);
            let mut b = Builder::new(f, 3);
            b.zero(z, z).zero(x, y).zero(y, x).zero(y, z).zero(z, y);
            b.equal((z, x), (x, z)).equal((y, y), (x, z));
            b.basis = vec![(x, x), (y, y)];
            b.build("ex5_4a".into())
        }
        "ex5_4b" => {
            let mut b = Builder::new(f, 2);
            b.equal((0, 1), (1, 0));
            b.rel(&[(0, 0, one.clone()), (1, 1, one.clone())]);
            b.basis = vec![(0, 0), (0, 1)];
            b.build("ex5_4b".into())
        }
        "ex5_5" => {
            let (x, y, z) = (0, 1, 2);
            let mut b = Builder::new(f, 3);
            b.zero(x, x).zero(y, y).zero(z, z).zero(y, x).zero(y, z);
            b.equal((z, x), (x, y)).equal((z, y), (x, z));
            b.basis = vec![(z, x), (x, z)];
            b.build("ex5_5".into())
        }
        "ex8_3" => {
            let mut b = Builder::new(f, 2);
            b.zero(1, 0).equal((0, 0), (1, 1));
            b.basis = vec![(0, 0), (0, 1)];
            b.build("ex8_3".into())
        }
        "ex9_3" => {
            let mut b = Builder::new(f, 2);
            b.zero(0, 0).zero(0, 1).zero(1, 1);
            b.basis = vec![(1, 0)];
            b.build("ex9_3".into())
        }
        "ex9_4" => {
            let q = params.q()?;
            let (x, y, z) = (0, 1, 2);
            let mut b = Builder::new(f, 3);
            b.zero(x, x).zero(y, y).zero(z, z).zero(x, z).zero(y, z);
            b.rel(&[(x, y, one.clone()), (y, x, q.clone())]);
            b.equal((z, y), (z, x));
            b.basis = vec![(y, x), (z, x)];
            b.build(format!("ex9_4(q={q})"))
        }
        "ex14_1" => {
            let e = need(params.e, "e", name)?;
            let a = need(params.a, "a", name)?;
            if e < 2 || a > e * e {
                return Err(Error::BadParams(format!(
                    "ex14_1 needs e >= 2 and 0 <= a <= e^2, got e={e}, a={a}"
                )));
            }
            truncated_tensor_quotient(f, e, a)
        }
        "ex15_1" => {
            let e = need(params.e, "e", name)?;
            let a = need(params.a, "a", name)?;
            if a < 1 || a + 1 > e {
                return Err(Error::BadParams(format!(
                    "ex15_1 needs 1 <= a <= e-1, got e={e}, a={a}"
                )));
            }
            conca_example(f, e, a)
        }
        _ => Err(Error::BadParams(format!(
            "unknown preset {name:?}; known: {}",
            PRESET_NAMES.join(", ")
        ))),
    }
}

/// `T/U` for the truncated tensor algebra `T = k ⊕ E ⊕ E⊗E`; the monomial
/// `x_i x_j` stands for `x_i ⊗ x_j`, and `x = x_1`.
fn truncated_tensor_quotient(f: Field, e: usize, a: usize) -> Result<ShortAlgebra> {
    let name = format!("ex14_1(e={e},a={a})");
    if a == 0 {
        return ShortAlgebra::new(f, e, 0, &[], Some(name));
    }
    let mut b = Builder::new(f, e);
    let mut killed = vec![false; e * e];
    if a >= e {
        // U is spanned by the first e²-a monomials x_i ⊗ x_j with j ≥ 2
        let mut count = 0;
        'outer: for i in 0..e {
            for j in 1..e {
                if count == e * e - a {
                    break 'outer;
                }
                killed[i * e + j] = true;
                count += 1;
            }
        }
    } else {
        for i in 0..e {
            for j in 0..e {
                killed[i * e + j] = j >= 1 || i >= a;
            }
        }
    }
    for i in 0..e {
        for j in 0..e {
            if killed[i * e + j] {
                b.zero(i, j);
            } else {
                b.basis.push((i, j));
            }
        }
    }
    b.build(name)
}

/// The commutative algebra with generators `x, y_1..y_a, z_1..z_c`,
/// `c = e - a - 1`, and `J² = span{x y_i}`.
fn conca_example(f: Field, e: usize, a: usize) -> Result<ShortAlgebra> {
    let c = e - a - 1;
    let x = 0;
    let y = |i: usize| 1 + i;
    let z = |j: usize| 1 + a + j;
    let mut b = Builder::new(f, e);
    for i in 0..e {
        for j in i + 1..e {
            b.equal((i, j), (j, i));
        }
    }
    b.zero(x, x);
    for j in 0..c {
        b.zero(x, z(j));
        b.equal((z(j), z(j)), (x, y(a - 1)));
        for j2 in j + 1..c {
            b.zero(z(j), z(j2));
        }
        for i in 0..a {
            b.zero(y(i), z(j));
        }
    }
    for i in 0..a {
        for i2 in i..a {
            b.zero(y(i), y(i2));
        }
    }
    b.basis = (0..a).map(|i| (x, y(i))).collect();
    b.build(format!("ex15_1(e={e},a={a})"))
}
