//! Monomial resolutions, rank and height checks and multiplier certificates.

use std::sync::Arc;

use proptest::prelude::*;
use reestype::monres::{
    is_stable, mapping_cone_resolution, monomial_colon, pairwise_syzygy_matrix, rank_over_quotient, verify_rank_height,
    MonomialIdeal,
};
use reestype::multipliers::{cm_multiplier_check, cm_multiplier_power_search, colon_transfer_check, superficial_check};
use reestype::{ErrorKind, Monomial, PolyRing, QuotientRing};

fn mono(e: &[u32]) -> Monomial {
    Monomial::from_exponents(e).unwrap()
}

fn ring(names: &[&str]) -> Arc<PolyRing> {
    Arc::new(PolyRing::grevlex(32003, names).unwrap())
}

fn example21() -> QuotientRing {
    let s = ring(&["x", "y", "z", "w"]);
    let rels = s.parse_list("w^2, w*z").unwrap();
    QuotientRing::new(s, rels).unwrap()
}

#[test]
fn koszul_complex_of_three_variables() {
    let s = ring(&["x", "y", "z"]);
    let i = MonomialIdeal::new(3, [mono(&[1, 0, 0]), mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
    let c = mapping_cone_resolution(&s, &i).unwrap();
    assert_eq!(c.betti(), [1, 3, 3, 1]);
    let r = QuotientRing::polynomial(s.clone());
    assert!(c.is_complex(&r).unwrap());
    let vars: Vec<_> = (0..3).map(|i| s.var(i)).collect();
    assert!(verify_rank_height(&r, &c, Some(&vars)).unwrap().passes());
}

#[test]
fn base_change_to_dependent_parameters_breaks_height() {
    let s = ring(&["x", "y"]);
    let c = mapping_cone_resolution(&s, &MonomialIdeal::new(2, [mono(&[1, 0]), mono(&[0, 1])])).unwrap();
    let t = ring(&["u", "v"]);
    let target = QuotientRing::polynomial(t.clone());
    let images = t.parse_list("u, u").unwrap();
    let bc = c.base_change(&target, &images).unwrap();
    assert!(bc.is_complex(&target).unwrap());
    let rep = verify_rank_height(&target, &bc, Some(&images)).unwrap();
    // Ranks still match; the ideal of entries of the second map is (u).
    assert!(rep.rank_ok());
    assert!(!rep.height_ok());
}

#[test]
fn colons_and_stability() {
    let i = MonomialIdeal::new(2, [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 3])]);
    assert_eq!(monomial_colon(&i, &mono(&[1, 0])).gens(), [mono(&[1, 0]), mono(&[0, 1])]);
    assert!(is_stable(&MonomialIdeal::new(2, [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]), &[0, 1]).unwrap());
    assert!(!is_stable(&MonomialIdeal::new(2, [mono(&[0, 2])]), &[0, 1]).unwrap());
    assert!(is_stable(&i, &[0, 0]).is_err());
}

#[test]
fn rank_over_a_quotient() {
    let r = example21();
    let s = r.ring();
    let m = reestype::monres::Matrix::from_rows(vec![
        vec![s.parse("w").unwrap(), s.parse("z").unwrap()],
        vec![s.zero(), s.parse("w").unwrap()],
    ])
    .unwrap();
    // det = w^2 = 0 in R, but the entries are nonzero.
    assert_eq!(rank_over_quotient(&r, &m).unwrap(), 1);
}

#[test]
fn multiplier_certificates() {
    let r = example21();
    let sop = r.ring().parse_list("x, y, z").unwrap();
    assert!(cm_multiplier_check(&r, &r.parse("w").unwrap(), &sop).unwrap().passes());
    let one = cm_multiplier_check(&r, &r.ring().one(), &sop).unwrap();
    assert_eq!(one.first_failure(), Some(3));
    let searched = cm_multiplier_power_search(&r, &r.parse("x+w").unwrap(), &sop, 3).unwrap();
    assert!(searched.power >= 1);
    let not_sop = r.ring().parse_list("x, y").unwrap();
    assert_eq!(cm_multiplier_check(&r, &r.ring().one(), &not_sop).unwrap_err().kind(), ErrorKind::Precondition);
}

#[test]
fn transfer_with_a_multiplier() {
    let r = example21();
    let sop = r.ring().parse_list("x, y, z+w").unwrap();
    let i = MonomialIdeal::new(3, [mono(&[1, 0, 0]), mono(&[0, 1, 0])]);
    let m = mono(&[0, 0, 1]);
    assert!(colon_transfer_check(&r, &r.parse("w").unwrap(), &sop, &i, &m).unwrap().passes());
    assert!(!colon_transfer_check(&r, &r.ring().one(), &sop, &i, &m).unwrap().passes());
}

#[test]
fn superficial_elements_of_the_maximal_ideal() {
    let s = ring(&["x", "y"]);
    let r = QuotientRing::polynomial(s.clone());
    let m = s.parse_list("x, y").unwrap();
    assert!(superficial_check(&r, &m, &s.parse("x").unwrap(), 0, 4).unwrap());
    assert_eq!(superficial_check(&r, &m, &s.parse("1").unwrap(), 0, 3).unwrap_err().kind(), ErrorKind::Precondition);
}

fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..3, n), 1..5).prop_map(move |gens| {
            MonomialIdeal::new(n, gens.into_iter().map(|e| mono(&e)).filter(|m| m.degree() > 0))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolutions_are_exact_length_complexes(ideal in arb_ideal()) {
        prop_assume!(!ideal.gens().is_empty());
        let names = ["x", "y", "z"];
        let s = ring(&names[..ideal.nvars()]);
        let c = mapping_cone_resolution(&s, &ideal).unwrap();
        let r = QuotientRing::polynomial(s.clone());
        prop_assert!(c.length() <= ideal.nvars());
        prop_assert!(c.is_complex(&r).unwrap());
        // Alternating sum of ranks of a resolution of S/I vanishes.
        let euler: i64 = c.betti().iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(euler, 0);
        prop_assert!(verify_rank_height(&r, &c, None).unwrap().passes());
    }

    #[test]
    fn pairwise_columns_are_syzygies(ideal in arb_ideal()) {
        prop_assume!(ideal.gens().len() >= 2);
        let names = ["x", "y", "z"];
        let s = ring(&names[..ideal.nvars()]);
        let m = pairwise_syzygy_matrix(&s, ideal.gens()).unwrap();
        let gens = ideal.to_polynomials(&s);
        for j in 0..m.cols {
            let col = m.column(j);
            prop_assert_eq!(col.iter().filter(|p| !p.is_zero()).count(), 2);
            let total = col.iter().zip(&gens).fold(s.zero(), |acc, (c, g)| s.add(&acc, &s.mul(c, g)));
            prop_assert!(total.is_zero());
        }
    }
}
