mod common;

use proptest::prelude::*;

use common::{alg, hom_dim_oracle, kronecker_hom_oracle};
use shortloc::algebra::PresetParams;
use shortloc::homology::ext_dim;
use shortloc::io::{kronecker_from_json, kronecker_to_json};
use shortloc::kronecker::{
    kronecker_hom_dim, preinjective, preprojective, push_down, tilde, KroneckerRep,
};
use shortloc::linalg::{random_matrix, Field};
use shortloc::module::{end_dim, is_isomorphic, random_module, AModule};
use shortloc::numerics::q_form;

fn l_module() -> impl Strategy<Value = AModule> {
    (2..=3usize, 1..=3usize, 0..=4usize, any::<u64>()).prop_map(|(e, g, r, seed)| random_module(&alg("L", PresetParams::e(e)), g, r, seed))
}

fn rep() -> impl Strategy<Value = KroneckerRep> {
    (2..=3usize, 0..=3usize, 0..=3usize, any::<u64>()).prop_map(|(e, d0, d1, seed)| {
        let f = Field::Rationals;
        let pool = f.default_pool();
        let maps = (0..e).map(|i| random_matrix(f, d1, d0, seed.wrapping_add(i as u64), &pool)).collect();
        KroneckerRep::new(f, d0, d1, maps).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn push_down_inverts_tilde(m in l_module()) {
        let t = tilde(&m).unwrap();
        let v = m.dim_vector().unwrap();
        prop_assert_eq!(t.dim_vector(), (v.t, v.s));
        let back = push_down(&t, m.algebra()).unwrap();
        prop_assert!(is_isomorphic(&back, &m, 1).unwrap());
    }

    #[test]
    fn tilde_of_push_down_keeps_dimensions(v in rep()) {
        let l = alg("L", PresetParams::e(v.e));
        let m = push_down(&v, &l).unwrap();
        prop_assert_eq!(m.dim(), v.dim0 + v.dim1);
        if !v.has_simple_projective_summand() {
            prop_assert_eq!(tilde(&m).unwrap().dim_vector(), v.dim_vector());
        }
        let back = kronecker_from_json(&kronecker_to_json(&v), v.field).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn kronecker_hom_matches_oracle(v in rep(), w in rep()) {
        prop_assume!(v.e == w.e);
        prop_assert_eq!(kronecker_hom_dim(&v, &w).unwrap(), kronecker_hom_oracle(&v, &w));
    }

    /// `Hom(M, M') = π Hom(M̃, M̃') ⊕ Hom(top M, rad M')`.
    #[test]
    fn hom_splits_over_the_cover(m in l_module(), seed in any::<u64>()) {
        let n = random_module(m.algebra(), 1 + (seed % 2) as usize, (seed % 3) as usize, seed);
        let (tm, tn) = (tilde(&m).unwrap(), tilde(&n).unwrap());
        let expected = kronecker_hom_oracle(&tm, &tn) + m.top_dim() * n.radical().dim();
        prop_assert_eq!(hom_dim_oracle(&m, &n), expected);
    }

    /// For bipartite `M` of dimension vector `(x, y)` over `L(e)`,
    /// `dim Ext¹(M, M) = 1 − q(x, y) + g(M)` with `g(M) = dim End M − 1 − xy`.
    #[test]
    fn self_extensions_of_bipartite_modules(m in l_module()) {
        prop_assume!(m.is_bipartite());
        let e = m.algebra().e();
        let v = m.dim_vector().unwrap();
        let (x, y) = (v.t as i64, v.s as i64);
        let g = hom_dim_oracle(&m, &m) as i64 - 1 - x * y;
        let q = q_form(e, (x, y));
        let ext = ext_dim(&m, &m, 1).unwrap() as i64;
        prop_assert_eq!(ext, 1 - q + g);
        if q <= 0 {
            prop_assert!(ext >= 1);
        }
        // solid iff End(M̃) = k
        let solid = m.is_solid().unwrap();
        prop_assert_eq!(solid, kronecker_hom_dim(&tilde(&m).unwrap(), &tilde(&m).unwrap()).unwrap() == 1);
    }
}

#[test]
fn preprojectives_and_preinjectives_have_no_self_extensions() {
    let form = alg("qexterior", PresetParams::default());
    let l2 = alg("L", PresetParams::e(2));
    for i in 1..=4 {
        for rep in [preinjective(&form, i).unwrap(), preprojective(&form, i).unwrap()] {
            let (x, y) = rep.dim_vector();
            assert_eq!(q_form(2, (x as i64, y as i64)), 1);
            let m = push_down(&rep, &l2).unwrap();
            assert!(m.is_solid().unwrap(), "i = {i}");
            assert_eq!(ext_dim(&m, &m, 1).unwrap(), 0, "i = {i}, dim {:?}", (x, y));
            assert_eq!(end_dim(&m).unwrap(), 1 + x * y);
        }
    }
}
