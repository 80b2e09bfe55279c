//! The published examples and identities, recomputed as a checklist.
//! Each claim records every individual comparison it makes.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{preset, PresetParams, ShortAlgebra};
use crate::error::Result;
use crate::explorer::{classify_complex, mho_path, periodicity_detect, ComplexKind};
use crate::homology::{
    betti, ext_dim, ext_dims, is_gp, is_inf_torsionfree, is_reflexive, is_semi_gp, is_torsionless,
    mho_power, syzygy, syzygy_power, BoundedCheck,
};
use crate::kronecker::{hom_decomposition, verify_sigma_omega};
use crate::limits::Limits;
use crate::module::{
    cyclic_submodule, direct_sum, direct_sum_all, end_dim, hom_basis_direct, is_isomorphic,
    left_regular, m_alpha, radical_module, random_loewy2_module, simple_module, AModule, DimVec,
};
use crate::numerics::{b_closed_form, b_sequence, is_aligned, main_lemma_witness, recursion_check};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    /// Same checks with smaller random samples.
    Fast,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            suite: Suite::All,
            seed: 0,
        }
    }
}

impl VerifyOptions {
    fn samples(&self, full: usize) -> usize {
        match self.suite {
            Suite::All => full,
            Suite::Fast => (full / 8).max(4),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub what: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: usize,
    pub tag: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub error: Option<String>,
}

#[derive(Default)]
struct Log {
    checks: Vec<Check>,
}

impl Log {
    fn check(&mut self, passed: bool, what: impl Into<String>) {
        self.checks.push(Check {
            what: what.into(),
            passed,
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, found: T, expected: T) {
        let passed = found == expected;
        self.check(passed, format!("{what}: {found:?} (expected {expected:?})"));
    }
}

pub struct Claim {
    pub id: usize,
    pub tag: &'static str,
    pub title: &'static str,
    run: fn(&mut Log, &VerifyOptions) -> Result<()>,
}

pub const CLAIMS: &[Claim] = &[
    Claim { id: 1, tag: "A.1, B.2", title: "Betti numbers of S follow b(e,a); closed form equals recursion", run: claim1 },
    Claim { id: 2, tag: "§11", title: "Λ_0 and Λ_1: M(0) Gorenstein-projective, M(2) semi-GP not torsionless, M(1) ∞-torsionfree", run: claim2 },
    Claim { id: 3, tag: "8.3", title: "ex8_3: t(S) = [1,2,2], dim Ω²S = (2,4)", run: claim3 },
    Claim { id: 4, tag: "9.3", title: "ex9_3: Ax is Ω-periodic and gives a Type I complex", run: claim4 },
    Claim { id: 5, tag: "5.5", title: "ex5_5: J solid on the left, not on the right", run: claim5 },
    Claim { id: 6, tag: "3.4, A.2", title: "ex3_4: J solid with dim End J = 7", run: claim6 },
    Claim { id: 7, tag: "2.1, 2.2", title: "self-injective iff Ext¹(S, A) = 0", run: claim7 },
    Claim { id: 8, tag: "14.1", title: "ex14_1: J decomposable, ΩN = S^e, no persistent complexes", run: claim8 },
    Claim { id: 9, tag: "15.1, 10.1, 10.2", title: "ex15_1: Ax reflexive of dim (1,a); Ω³M ≅ ΩM", run: claim9 },
    Claim { id: 10, tag: "4.1, 4.4, 13.1", title: "Main Lemma on random modules", run: claim10 },
    Claim { id: 11, tag: "A.2", title: "hom decomposition over L(2), L(3)", run: claim11 },
    Claim { id: 12, tag: "A.5", title: "quantum exterior algebra: Ext between the modules A(x-αy)", run: claim12 },
    Claim { id: 13, tag: "A.6, A.7", title: "σ-reflection models Ω; t_{i-1} + t_{i+1} = 2 t_i", run: claim13 },
    Claim { id: 14, tag: "Theorems 4, 5", title: "Λ_0, Λ_1: dim Ω^i M = (t, a·t) and Ext^i(M,M) ≠ 0", run: claim14 },
];

pub fn run_claim(claim: &Claim, opts: &VerifyOptions) -> ClaimResult {
    let mut log = Log::default();
    let outcome = (claim.run)(&mut log, opts);
    let error = outcome.err().map(|e| e.to_string());
    let passed = error.is_none() && !log.checks.is_empty() && log.checks.iter().all(|c| c.passed);
    ClaimResult {
        id: claim.id,
        tag: claim.tag,
        title: claim.title,
        passed,
        checks: log.checks,
        error,
    }
}

/// Runs every claim, each on its own thread; results come back in order.
pub fn run_suite(opts: &VerifyOptions) -> Vec<ClaimResult> {
    std::thread::scope(|s| {
        let handles: Vec<_> = CLAIMS.iter().map(|c| s.spawn(move || run_claim(c, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("claim thread panicked")).collect()
    })
}

fn alg(name: &str, params: PresetParams) -> Result<Arc<ShortAlgebra>> {
    Ok(Arc::new(preset(name, &params)?))
}

fn lambda(c: usize) -> Result<Arc<ShortAlgebra>> {
    alg("lambda_c", PresetParams::c(c))
}

/// `A·v_1`.
fn ax(a: &Arc<ShortAlgebra>) -> Result<AModule> {
    cyclic_submodule(a, &a.basis_element(1))
}

/// `A(x − αy)` over an algebra generated by `x = v_1`, `y = v_2`.
fn x_minus(a: &Arc<ShortAlgebra>, alpha: i64) -> Result<AModule> {
    let f = a.field();
    let mut v = a.zero();
    v[1] = f.one();
    v[2] = f.from_i64(-alpha);
    cyclic_submodule(a, &v)
}

fn simples(a: &Arc<ShortAlgebra>, k: usize) -> Result<AModule> {
    direct_sum_all(a, &vec![simple_module(a); k])
}

fn random_sample(a: &Arc<ShortAlgebra>, k: u64, seed: u64) -> AModule {
    let gens = 1 + (k % 3) as usize;
    let rels = (k % 4) as usize;
    random_loewy2_module(a, gens, rels, seed.wrapping_mul(0x9e37_79b9).wrapping_add(k))
}

fn claim1(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    let b: Vec<String> = b_sequence(3, 1, 6).from_zero().iter().map(|x| x.to_string()).collect();
    let expected: Vec<String> = [1, 3, 8, 21, 55, 144, 377].iter().map(|x: &i32| x.to_string()).collect();
    log.eq("b(3,1)_0..6", b.clone(), expected);
    let (mut f0, mut f1) = (0u64, 1u64);
    let mut even_fib = Vec::new();
    for k in 1..=14 {
        (f0, f1) = (f1, f0 + f1);
        if k % 2 == 0 {
            even_fib.push(f0.to_string());
        }
    }
    log.eq("even-index Fibonacci F_2..F_14", b, even_fib);
    let mut sweep = 0;
    for e in 1..=8usize {
        for a in (0..).take_while(|a| 4 * a < e * e) {
            for n in 0..=40 {
                b_closed_form(e, a, n)?;
                sweep += 1;
            }
        }
    }
    log.check(true, format!("closed form = recursion, integral, in {sweep} cases (e ≤ 8, 4a < e², n ≤ 40)"));
    for (name, params, n) in [("qexterior", PresetParams::default(), 6), ("ex15_1", PresetParams::ea(3, 1), 6)] {
        let a = alg(name, params)?;
        let s = simple_module(&a);
        let t = betti(&s, n)?.values;
        let bs = b_sequence(a.e(), a.a(), n);
        let mut cur = s.clone();
        let mut aligned_upto = 0;
        for k in 0..n {
            if !is_aligned(&cur)? {
                break;
            }
            aligned_upto = k + 1;
            cur = syzygy(&cur)?;
        }
        let matches = (0..=aligned_upto).all(|k| bs.get(k as i64).to_string() == t[k].to_string());
        log.check(
            matches && aligned_upto == n,
            format!("{name} {:?}: t(S) = {t:?}, aligned through Ω^{aligned_upto}, b = {:?}", a.hilbert_type(), bs.from_zero()),
        );
    }
    Ok(())
}

fn claim2(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    for c in [0, 1] {
        let a = lambda(c)?;
        let f = a.field();
        let tag = format!("Λ_{c} {:?}", a.hilbert_type());
        let m0 = m_alpha(&a, &f.zero())?;
        let m1 = m_alpha(&a, &f.one())?;
        let m2 = m_alpha(&a, &f.from_i64(2))?;
        log.eq(&format!("{tag}: Ω-period of M(0)"), periodicity_detect(&m0, 4)?, Some(1));
        let gp = is_gp(&m0, 10)?;
        log.check(gp.holds(), format!("{tag}: M(0) Gorenstein-projective: {} / {}", gp.semi_gp, gp.inf_torsionfree));
        log.eq(&format!("{tag}: M(2) semi-GP"), is_semi_gp(&m2, 10)?, BoundedCheck::TrueUpTo(10));
        log.eq(&format!("{tag}: M(2) torsionless"), is_torsionless(&m2)?, false);
        log.eq(&format!("{tag}: M(1) ∞-torsionfree"), is_inf_torsionfree(&m1, 10)?, BoundedCheck::TrueUpTo(10));
        let om1 = syzygy(&m1)?;
        log.eq(&format!("{tag}: simple summands of ΩM(1)"), om1.simple_multiplicity()?, 1);
        log.eq(&format!("{tag}: dim ΩM(1)"), om1.dim_vector()?, DimVec::new(2, a.a() - 1));
    }
    Ok(())
}

fn claim3(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    let a = alg("ex8_3", PresetParams::default())?;
    let s = simple_module(&a);
    log.eq("t_0..2(S)", betti(&s, 2)?.values, vec![1, 2, 2]);
    log.eq("dim Ω²S", syzygy_power(&s, 2)?.dim_vector()?, DimVec::new(2, 4));
    Ok(())
}

fn claim4(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    let a = alg("ex9_3", PresetParams::default())?;
    let m = ax(&a)?;
    log.eq("Ω-period of Ax", periodicity_detect(&m, 2)?, Some(1));
    let c = classify_complex(&m, 3, 3)?;
    log.eq("complex through Ax", (c.kind, c.ranks), (ComplexKind::TypeI, vec![1; 7]));
    log.eq("(left socle, right socle, a)", (a.left_socle_dim(), a.right_socle_dim(), a.a()), (2, 2, 1));
    Ok(())
}

fn claim5(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    let a = alg("ex5_5", PresetParams::default())?;
    log.eq("_AJ solid", radical_module(&a).is_solid()?, true);
    let op = Arc::new(a.opposite());
    let j_right = radical_module(&op);
    log.eq("J_A solid", j_right.is_solid()?, false);
    log.eq("simple summands of J_A", j_right.simple_multiplicity()?, 1);
    Ok(())
}

fn claim6(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    let a = alg("ex3_4", PresetParams::default())?;
    let j = radical_module(&a);
    // counted by hand from the multiplication table: 1 + |top J|·|rad J| = 1 + 3·2
    log.eq("dim End J (presentation route)", end_dim(&j)?, 7);
    log.eq("dim End J (intertwiner route)", hom_basis_direct(&j, &j)?.len(), 7);
    log.eq("J solid", j.is_solid()?, true);
    Ok(())
}

fn claim7(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    let cases = [
        ("qexterior", PresetParams::default(), true),
        ("L", PresetParams::e(2), false),
        ("lambda_c", PresetParams::default(), false),
        ("ex9_3", PresetParams::default(), false),
        ("ex5_3", PresetParams::default(), false),
    ];
    for (name, params, self_injective) in cases {
        let a = alg(name, params)?;
        let ext = ext_dim(&simple_module(&a), &left_regular(&a), 1)?;
        log.check(
            a.is_self_injective() == self_injective && (ext == 0) == self_injective,
            format!("{name}: self-injective {}, dim Ext¹(S,A) = {ext}", a.is_self_injective()),
        );
    }
    Ok(())
}

fn claim8(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    for (e, a_) in [(2, 1), (3, 2), (3, 0), (3, 9)] {
        let a = alg("ex14_1", PresetParams::ea(e, a_))?;
        let tag = format!("ex14_1({e},{a_})");
        log.eq(&format!("{tag}: J solid"), radical_module(&a).is_solid()?, false);
        if a_ + 1 != e {
            continue;
        }
        let n = ax(&a)?;
        let s = simple_module(&a);
        let omega_n = syzygy(&n)?;
        log.eq(&format!("{tag}: simple summands of ΩN"), omega_n.simple_multiplicity()?, e);
        log.eq(&format!("{tag}: ΩN ≅ S^e"), is_isomorphic(&omega_n, &simples(&a, e)?, 0)?, true);
        let target = direct_sum(&n, &simples(&a, e - 1)?)?;
        log.eq(&format!("{tag}: ΩS ≅ N ⊕ S^(e-1)"), is_isomorphic(&syzygy(&s)?, &target, 0)?, true);
        let c = classify_complex(&n, 3, 3)?;
        log.check(
            !matches!(c.kind, ComplexKind::TypeI | ComplexKind::TypeII),
            format!("{tag}: complex through N is {:?} ({})", c.kind, c.obstruction.unwrap_or_default()),
        );
    }
    Ok(())
}

fn claim9(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    for (e, a_) in [(2, 1), (3, 1), (3, 2), (4, 3)] {
        let a = alg("ex15_1", PresetParams::ea(e, a_))?;
        let tag = format!("ex15_1({e},{a_})");
        let m = ax(&a)?;
        log.eq(&format!("{tag}: Ax reflexive"), is_reflexive(&m)?, true);
        log.eq(&format!("{tag}: dim Ax"), m.dim_vector()?, DimVec::new(1, a_));
        if a_ + 1 != e || !a.is_commutative() {
            continue;
        }
        let path = mho_path(&m, 2);
        let dims: Vec<_> = path.steps.iter().map(|s| s.dim_vector).collect();
        log.eq(&format!("{tag}: ℧-path of Ax"), dims, vec![Some(DimVec::new(1, a_)); 3]);
        for (label, start) in [("Ax", m.clone()), ("℧³Ax", mho_power(&m, 3)?)] {
            let o1 = syzygy(&start)?;
            let o2 = syzygy(&o1)?;
            let local = start.top_dim() == 1 && o1.top_dim() == 1 && o2.top_dim() == 1;
            let o3 = syzygy(&o2)?;
            log.check(
                local && is_isomorphic(&o3, &o1, 0)?,
                format!("{tag}: M = {label}, ΩM and Ω²M local and Ω³M ≅ ΩM"),
            );
        }
    }
    Ok(())
}

fn claim10(log: &mut Log, opts: &VerifyOptions) -> Result<()> {
    let presets = [
        ("L", PresetParams::e(2)),
        ("L", PresetParams::e(3)),
        ("qexterior", PresetParams::default()),
        ("lambda_c", PresetParams::default()),
        ("ex15_1", PresetParams::ea(3, 2)),
        ("ex9_3", PresetParams::default()),
    ];
    let n = opts.samples(200);
    for (name, params) in presets {
        let a = alg(name, params)?;
        let soc_is_j2 = a.left_socle_dim() == a.a();
        let (mut witnessed, mut refined, mut recursions, mut failures) = (0, 0, 0, Vec::new());
        for k in 0..n as u64 {
            let m = random_sample(&a, k, opts.seed);
            if m.is_zero() {
                continue;
            }
            match main_lemma_witness(&m) {
                Ok(w) => {
                    witnessed += 1;
                    if soc_is_j2 && w.w as usize == w.omega.simple_multiplicity()? {
                        refined += 1;
                    }
                }
                Err(e) => failures.push(format!("sample {k}: {e}")),
            }
            let r = recursion_check(&m)?;
            if r.hypothesis_met {
                recursions += 1;
                if !r.holds {
                    failures.push(format!("sample {k}: t = {:?} breaks t_2 = e t_1 - a t_0", r.betti));
                }
            }
        }
        log.check(
            failures.is_empty() && witnessed > 0 && (!soc_is_j2 || refined == witnessed),
            format!(
                "{name} {:?}: {witnessed} witnesses, {refined} with w = simple multiplicity, {recursions} recursions{}",
                a.hilbert_type(),
                if failures.is_empty() { String::new() } else { format!("; {}", failures.join("; ")) }
            ),
        );
    }
    Ok(())
}

fn claim11(log: &mut Log, opts: &VerifyOptions) -> Result<()> {
    let n = opts.samples(50);
    for e in [2, 3] {
        let a = alg("L", PresetParams::e(e))?;
        let mut bad = Vec::new();
        for k in 0..n as u64 {
            let m = random_sample(&a, 2 * k, opts.seed);
            let m2 = random_sample(&a, 2 * k + 1, opts.seed ^ 0x5555);
            let d = hom_decomposition(&m, &m2)?;
            if !d.holds {
                bad.push(format!("{} ≠ {} + {}", d.hom_a, d.hom_kronecker, d.top_to_rad));
            }
        }
        log.check(bad.is_empty(), format!("L({e}): {n} pairs, failures {bad:?}"));
    }
    Ok(())
}

fn claim12(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    let a = alg("qexterior", PresetParams::default())?;
    let m = x_minus(&a, 1)?;
    let limits = Limits::default();
    let self_ext = ext_dims(&m, &m, 10, &limits)?;
    log.check(self_ext[2..].iter().all(|&x| x == 0), format!("dim Ext^i(M,M), i = 0..10: {self_ext:?}"));
    log.check(self_ext[1] >= 1, format!("dim Ext¹(M,M) = {} ≥ 1", self_ext[1]));
    for alpha in [0, 4, 8] {
        log.eq(&format!("dim Ext¹(M, M_{alpha})"), ext_dim(&m, &x_minus(&a, alpha)?, 1)?, 0);
    }
    let ext_omega = ext_dim(&m, &x_minus(&a, 2)?, 1)?;
    log.check(ext_omega >= 1, format!("dim Ext¹(M, ΩM = M_2) = {ext_omega} ≥ 1"));
    Ok(())
}

fn claim13(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    let a = alg("qexterior", PresetParams::default())?;
    let j = radical_module(&a);
    for (label, m) in [("J", j.clone()), ("A(x-y)", x_minus(&a, 1)?), ("A(x-2y)", x_minus(&a, 2)?)] {
        log.eq(&format!("πσ(M̃) ≅ ΩM for M = {label}"), verify_sigma_omega(&a, &m)?, true);
    }
    let t = betti(&j, 6)?.values;
    let holds = t.windows(3).all(|w| w[0] + w[2] == 2 * w[1]);
    log.check(holds, format!("t(J) = {t:?} satisfies t_(i-1) + t_(i+1) = 2 t_i"));
    Ok(())
}

fn claim14(log: &mut Log, _: &VerifyOptions) -> Result<()> {
    let limits = Limits::default();
    for c in [0, 1] {
        let a = lambda(c)?;
        let f = a.field();
        for alpha in [0, 2] {
            let m = m_alpha(&a, &f.from_i64(alpha))?;
            let tag = format!("Λ_{c}, M({alpha})");
            let t = m.top_dim();
            let mut cur = m.clone();
            let mut dims = vec![cur.dim_vector()?];
            for _ in 0..6 {
                cur = syzygy(&cur)?;
                dims.push(cur.dim_vector()?);
            }
            let balanced = dims.iter().all(|d| d.t == t && d.s == a.a() * t);
            log.check(balanced, format!("{tag}: dim Ω^i M, i = 0..6: {dims:?}"));
            let ext = ext_dims(&m, &m, 6, &limits)?;
            log.check(ext[1..].iter().all(|&x| x >= 1), format!("{tag}: dim Ext^i(M,M), i = 0..6: {ext:?}"));
        }
    }
    Ok(())
}
