//! Walks along Ω and ℧, periodicity detection, and the Type I / Type II
//! classification of finite windows of acyclic minimal complexes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{is_reflexive, is_torsionless, mho, syzygy_with};
use crate::limits::Limits;
use crate::module::{is_isomorphic, AModule, DimVec};
use crate::numerics::defect;

#[derive(Clone, Debug, Serialize)]
pub struct PathStep {
    pub index: usize,
    pub dim: usize,
    pub dim_vector: Option<DimVec>,
    pub rank: usize,
    pub bipartite: bool,
    pub simple_mult: Option<usize>,
    pub defect: Option<i64>,
}

impl PathStep {
    pub fn of(index: usize, m: &AModule) -> PathStep {
        let a = m.algebra();
        let loewy2 = m.loewy_length() <= 2;
        PathStep {
            index,
            dim: m.dim(),
            dim_vector: m.dim_vector().ok(),
            rank: m.top_dim(),
            bipartite: m.is_bipartite(),
            simple_mult: m.simple_multiplicity().ok(),
            defect: if loewy2 && a.a() + 1 == a.e() { defect(m).ok() } else { None },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Omega,
    Mho,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    NotTorsionless,
    LoewyTooLong,
    ResourceCap,
    ProjectiveReached,
}

/// Step 0 is the starting module; step `i` is `Ω^i M` or `℧^i M`.
#[derive(Clone, Debug, Serialize)]
pub struct PathRecord {
    pub direction: Direction,
    pub steps: Vec<PathStep>,
    pub terminated: Option<Termination>,
    pub advisory: Option<String>,
    #[serde(skip)]
    pub modules: Vec<AModule>,
}

impl PathRecord {
    fn start(direction: Direction, m: &AModule) -> PathRecord {
        PathRecord {
            direction,
            steps: vec![PathStep::of(0, m)],
            terminated: None,
            advisory: None,
            modules: vec![m.clone()],
        }
    }

    fn push(&mut self, m: AModule) {
        self.steps.push(PathStep::of(self.steps.len(), &m));
        self.modules.push(m);
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.rank).collect()
    }
}

pub fn omega_path(m: &AModule, n: usize) -> PathRecord {
    omega_path_with(m, n, &Limits::default())
}

pub fn omega_path_with(m: &AModule, n: usize, limits: &Limits) -> PathRecord {
    let mut path = PathRecord::start(Direction::Omega, m);
    let mut cur = m.clone();
    for _ in 0..n {
        if cur.is_zero() {
            path.terminated = Some(Termination::ProjectiveReached);
            break;
        }
        match syzygy_with(&cur, limits) {
            Ok(next) => {
                path.push(next.clone());
                cur = next;
            }
            Err(_) => {
                path.terminated = Some(Termination::ResourceCap);
                break;
            }
        }
    }
    path
}

pub fn mho_path(m: &AModule, n: usize) -> PathRecord {
    mho_path_with(m, n, &Limits::default())
}

/// Iterates `℧` while the current module is torsionless of Loewy length ≤ 2.
pub fn mho_path_with(m: &AModule, n: usize, limits: &Limits) -> PathRecord {
    let mut path = PathRecord::start(Direction::Mho, m);
    let alg = m.algebra();
    if n >= 4 && alg.a() + 1 != alg.e() && !alg.is_self_injective() {
        path.advisory = Some(format!(
            "℧-paths of length 4 need a = e-1 >= 2 unless A is self-injective; here (e,a) = {:?}",
            alg.hilbert_type()
        ));
    }
    let mut cur = m.clone();
    for _ in 0..n {
        if cur.is_zero() {
            path.terminated = Some(Termination::ProjectiveReached);
            break;
        }
        if cur.loewy_length() > 2 {
            path.terminated = Some(Termination::LoewyTooLong);
            break;
        }
        match is_torsionless(&cur) {
            Ok(true) => {}
            Ok(false) => {
                path.terminated = Some(Termination::NotTorsionless);
                break;
            }
            Err(_) => {
                path.terminated = Some(Termination::ResourceCap);
                break;
            }
        }
        match mho(&cur) {
            Ok(next) if limits.check(next.dim()).is_ok() => {
                path.push(next.clone());
                cur = next;
            }
            _ => {
                path.terminated = Some(Termination::ResourceCap);
                break;
            }
        }
    }
    path
}

/// Least `p ≤ bound` with `Ω^p M ≅ M`.
pub fn periodicity_detect(m: &AModule, bound: usize) -> Result<Option<usize>> {
    periodicity_detect_with(m, bound, &Limits::default())
}

pub fn periodicity_detect_with(m: &AModule, bound: usize, limits: &Limits) -> Result<Option<usize>> {
    if m.is_zero() {
        return Ok(None);
    }
    let mut cur = m.clone();
    for p in 1..=bound {
        cur = match syzygy_with(&cur, limits) {
            Ok(next) => next,
            Err(Error::ResourceCap { .. }) => return Ok(None),
            Err(e) => return Err(e),
        };
        if cur.is_zero() {
            return Ok(None);
        }
        if cur.dim() == m.dim() && is_isomorphic(&cur, m, 0)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComplexKind {
    TypeI,
    TypeII,
    NotAcyclicExtendable,
    SelfInjectiveRegime,
}

/// Images `M_i` of a window of the complex, `M_0 = M`, `M_i = Ω^i M` for
/// `i > 0` and `M_{-j}` either `Ω^{-j mod p} M` for an Ω-periodic `M` or
/// `℧^j M`; `t_i = |top M_i|`.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexClassification {
    pub kind: ComplexKind,
    /// Last index of the constant part, for Type II.
    pub v_index: Option<i64>,
    /// Index of the first entry of `ranks`.
    pub first_index: i64,
    pub ranks: Vec<usize>,
    pub bipartite: Vec<bool>,
    pub dim_vectors: Vec<Option<DimVec>>,
    pub defects: Option<Vec<i64>>,
    pub periodic: Option<usize>,
    pub obstruction: Option<String>,
}

/// 7.3: how `t` and `δ` may change from `M` to `ΩM` when `a = e−1`.
pub fn defect_step_ok(t: usize, delta: i64, t_next: usize, delta_next: i64, next_bipartite: bool) -> bool {
    match delta.cmp(&0) {
        std::cmp::Ordering::Equal => {
            (t_next == t && delta_next == 0) || (t_next > t && delta_next > 0 && !next_bipartite)
        }
        std::cmp::Ordering::Greater => t_next > t && delta_next > 0,
        std::cmp::Ordering::Less => true,
    }
}

pub fn classify_complex(m: &AModule, back: usize, fwd: usize) -> Result<ComplexClassification> {
    classify_complex_with(m, back, fwd, &Limits::default())
}

pub fn classify_complex_with(
    m: &AModule,
    back: usize,
    fwd: usize,
    limits: &Limits,
) -> Result<ComplexClassification> {
    let alg = m.algebra();
    let mut obstruction: Option<String> = None;
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    if m.loewy_length() > 2 {
        obstruction = Some("M has Loewy length 3".into());
    } else if !is_torsionless(m)? {
        obstruction = Some("M is not torsionless".into());
    }

    let periodic = if obstruction.is_none() {
        periodicity_detect_with(m, back.max(fwd).max(1), limits)?
    } else {
        None
    };

    // ℧ side, nearest first; a periodic module continues by its own
    // syzygies, otherwise each step needs a reflexive source
    let mut left: Vec<AModule> = Vec::new();
    if let (None, Some(p)) = (&obstruction, periodic) {
        let mut powers = vec![m.clone()];
        for _ in 1..p {
            let next = syzygy_with(powers.last().unwrap(), limits)?;
            powers.push(next);
        }
        left = (1..=fwd).map(|j| powers[(p - j % p) % p].clone()).collect();
    } else if obstruction.is_none() {
        let mut cur = m.clone();
        for j in 0..fwd {
            if !is_reflexive(&cur)? {
                obstruction = Some(format!("℧^{j} M is not reflexive and M is not Ω-periodic"));
                break;
            }
            let next = mho(&cur)?;
            limits.check(next.dim())?;
            if next.is_zero() {
                obstruction = Some(format!("℧^{} M is zero", j + 1));
                break;
            }
            left.push(next.clone());
            cur = next;
        }
    }
    // Ω side
    let mut right: Vec<AModule> = Vec::new();
    if obstruction.is_none() {
        let mut cur = m.clone();
        for i in 1..=back {
            let next = match syzygy_with(&cur, limits) {
                Ok(next) => next,
                Err(Error::ResourceCap { dim, cap }) => {
                    obstruction = Some(format!("Ω^{i} M exceeds the cap ({dim} > {cap})"));
                    break;
                }
                Err(e) => return Err(e),
            };
            if next.is_zero() {
                obstruction = Some(format!("Ω^{i} M is zero, M has finite projective dimension"));
                break;
            }
            right.push(next.clone());
            cur = next;
        }
    }

    let window: Vec<AModule> = left.iter().rev().cloned().chain(std::iter::once(m.clone())).chain(right).collect();
    let first_index = -(left.len() as i64);
    let ranks: Vec<usize> = window.iter().map(AModule::top_dim).collect();
    let bipartite: Vec<bool> = window.iter().map(AModule::is_bipartite).collect();
    let dim_vectors: Vec<Option<DimVec>> = window.iter().map(|x| x.dim_vector().ok()).collect();
    let defects = if alg.a() + 1 == alg.e() && dim_vectors.iter().all(Option::is_some) {
        let d: Vec<i64> = window.iter().map(defect).collect::<Result<_>>()?;
        for i in 0..d.len().saturating_sub(1) {
            if !defect_step_ok(ranks[i], d[i], ranks[i + 1], d[i + 1], bipartite[i + 1]) {
                return Err(Error::InvariantViolation(format!(
                    "defect behaviour between M_{} and M_{}",
                    first_index + i as i64,
                    first_index + i as i64 + 1
                )));
            }
        }
        Some(d)
    } else {
        None
    };
    let a = alg.a();
    let balanced = |i: usize| dim_vectors[i] == Some(DimVec::new(ranks[i], a * ranks[i]));
    let mut v_index = None;
    let kind = if alg.is_self_injective() {
        ComplexKind::SelfInjectiveRegime
    } else if obstruction.is_some() {
        ComplexKind::NotAcyclicExtendable
    } else {
        // constant prefix 0..=v, then strictly increasing
        let mut v = 0;
        while v + 1 < ranks.len() && ranks[v + 1] == ranks[0] {
            v += 1;
        }
        let increasing = ranks[v..].windows(2).all(|w| w[1] > w[0]);
        let prefix_ok = (0..=v).all(|i| balanced(i) && bipartite[i]);
        if v + 1 == ranks.len() {
            if prefix_ok {
                ComplexKind::TypeI
            } else {
                obstruction = Some("constant ranks, but some M_i is not bipartite of dimension (t, a·t)".into());
                ComplexKind::NotAcyclicExtendable
            }
        } else if increasing
            && prefix_ok
            && !bipartite[v + 1]
            && (v + 1..ranks.len()).all(|i| dim_vectors[i].is_some_and(|d| d.s < a * ranks[i]))
        {
            v_index = Some(first_index + v as i64);
            ComplexKind::TypeII
        } else {
            obstruction = Some(format!("rank sequence {ranks:?} fits neither type"));
            ComplexKind::NotAcyclicExtendable
        }
    };
    Ok(ComplexClassification {
        kind,
        v_index,
        first_index,
        ranks,
        bipartite,
        dim_vectors,
        defects,
        periodic,
        obstruction,
    })
}

/// `c_i = e·c_{i+1} − a·c_{i+2}` wherever defined.
pub fn cv_sequence_check(seq: &[i64], e: i64, a: i64) -> bool {
    seq.windows(3).all(|w| w[0] == e * w[1] - a * w[2])
}
