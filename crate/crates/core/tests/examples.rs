use yangian_core::lift::{e_elem, lift_by_dominance, lift_t, shift_expand, verify_projection};
use yangian_core::pbw::{Gen, GeneratorOrder, PbwElement};
use yangian_core::poisson::{
    bracket_pp, bracket_pt, bracket_tt, eval_poly, g_bracket, h_bracket, kks, leibniz_oracle, GElement, PSymbol,
    PoissonPolynomial,
};
use yangian_core::scalar::{rat, Scalar};
use yangian_core::stable::{
    extract_by_linear_algebra, instantiate_check, normalize_relation, relation_from_json, relation_to_json,
    stable_comm, NormalOrder, Tag, INDEX_TUPLES,
};
use yangian_core::words::{circular_canonical, Word};

fn w(t: &str) -> Word {
    Word::parse(t, 9).unwrap()
}

fn gen(n: usize, i: usize, j: usize, a: u8) -> PbwElement {
    PbwElement::generator(n, Gen::new(i, j, a)).unwrap()
}

#[test]
fn projection_examples() {
    let x = gen(3, 1, 3, 1).multiply(&gen(3, 3, 1, 1)).unwrap();
    assert_eq!(x.project().unwrap(), gen(2, 1, 1, 1));
    let e = e_elem(1, 1, &w("11"), 3).unwrap().project().unwrap();
    let want = e_elem(1, 1, &w("11"), 2).unwrap().add(&e_elem(1, 1, &w("1"), 2).unwrap()).unwrap();
    assert_eq!(e, want);
    for (v, n, s) in [("1", 2, 0), ("11", 3, 0), ("12", 3, 1)] {
        assert!(verify_projection(&w(v), n, &Scalar::from_int(s)).unwrap().passed());
    }
}

#[test]
fn lifting_examples() {
    let n = 3;
    let e2 = e_elem(1, 2, &w("11"), n).unwrap();
    let e1 = e_elem(1, 2, &w("1"), n).unwrap();
    let t = lift_t(1, 2, &w("11"), n, &Scalar::zero(), true).unwrap().value;
    assert_eq!(t, e2.sub(&e1.scale(&Scalar::from_int(3))).unwrap());
    let t = lift_by_dominance(1, 2, &w("11"), n, &Scalar::s()).unwrap();
    assert_eq!(t, e2.sub(&e1.scale(&Scalar::s())).unwrap());
    assert_eq!(lift_by_dominance(2, 1, &w("2"), n, &Scalar::s()).unwrap(), gen(n, 2, 1, 2));
    let (s, sp) = (Scalar::s(), Scalar::from_int(4));
    assert_eq!(shift_expand(&w("11"), &s, &sp).unwrap(), vec![(w("11"), Scalar::one()), (w("1"), &sp - &s)]);
}

#[test]
fn stable_examples() {
    let r = stable_comm(2, &w("2"), &w("12"), 1).unwrap();
    let text = relation_to_json(&r);
    assert_eq!(
        text,
        r#"{"L":2,"w":"2","wt":"12","form":1,"terms":[{"tag":"KJ.IL","z1":"1","z2":"2","coeff":1},{"tag":"KJ.IL","z1":"12","z2":"","coeff":-1}]}"#
    );
    assert_eq!(relation_from_json(&text).unwrap(), r);
    assert!(stable_comm(2, &w("1"), &w("2"), 3).unwrap().terms.is_empty());
    assert!(instantiate_check(2, &w("2"), &w("12"), 1, &[(1, 2, 3, 4)], &[4, 5, 6]).unwrap().passed());
    assert!(instantiate_check(2, &w("11"), &w("11"), 1, &[(1, 2, 3, 4), (1, 1, 1, 2)], &[4, 5, 6]).unwrap().passed());
    let r = stable_comm(2, &w("12"), &w("21"), 1).unwrap();
    assert_eq!(extract_by_linear_algebra(2, &w("12"), &w("21"), 1, Some(8)).unwrap(), r);
    assert!(instantiate_check(2, &w("12"), &w("21"), 1, &INDEX_TUPLES, &[4, 5]).unwrap().passed());
}

#[test]
fn yangian_two_two() {
    let r = stable_comm(1, &w("11"), &w("11"), 1).unwrap();
    let mut got: Vec<(Tag, String, String, i64)> =
        r.sorted_terms().iter().map(|t| (t.tag, t.z1.text(1), t.z2.text(1), t.coeff)).collect();
    let want = vec![
        (Tag::KJ_IL, "".to_string(), "111".to_string(), 1),
        (Tag::KJ_IL, "1".to_string(), "11".to_string(), 1),
        (Tag::KJ_IL, "11".to_string(), "1".to_string(), -1),
        (Tag::KJ_IL, "111".to_string(), "".to_string(), -1),
    ];
    got.sort_by(|a, b| (a.1.len(), &a.1).cmp(&(b.1.len(), &b.1)));
    assert_eq!(got, want);
}

#[test]
fn normalization_fixed_point() {
    let fixed: NormalOrder = "IJ<KJ<IL<KL".parse().unwrap();
    for (m, n) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        let r = stable_comm(1, &Word::power(1, m), &Word::power(1, n), 1).unwrap();
        assert_eq!(normalize_relation(&r, &fixed).terms, r.terms);
    }
}

#[test]
fn poisson_examples() {
    let d = 2;
    let p = |i, j, t: &str| PoissonPolynomial::p(i, j, &w(t), d).unwrap();
    assert!(kks(&w("1"), &w("2")).is_empty());
    assert!(bracket_pp(1, 2, &w("1"), 2, 1, &w("2"), d).unwrap().is_zero());
    let want = p(2, 2, "2").mul(&p(1, 1, "1")).sub(&p(2, 2, "21"));
    assert_eq!(bracket_pp(1, 2, &w("1"), 2, 1, &w("21"), d).unwrap(), want);
    let c = |t: &str| circular_canonical(&w(t)).unwrap();
    assert_eq!(bracket_pt(1, 2, &w("1"), &c("12"), d).unwrap(), p(1, 2, "12").sub(&p(1, 2, "21")));
    assert!(bracket_pt(1, 2, &w("1"), &c("2"), d).unwrap().is_zero());
    assert!(bracket_tt(&c("1"), &c("12")).unwrap().is_zero());
    assert!(bracket_tt(&c("11"), &c("12")).unwrap().is_zero());
    assert!(bracket_tt(&c("12"), &c("122")).unwrap().is_zero());

    let (a, b) = (PSymbol::Trace(c("12")), PSymbol::Trace(c("112")));
    let closed = eval_poly(&bracket_tt(&c("12"), &c("112")).unwrap(), 3).unwrap();
    assert_eq!(closed, leibniz_oracle(&a, &b, 3).unwrap());

    let one = |i: u8, j: u8, t: &str| -> GElement { [((i, j, w(t)), rat(1))].into() };
    let want: GElement = [((1, 1, w("121")), rat(1)), ((2, 2, w("212")), rat(-1))].into();
    assert_eq!(g_bracket(&one(1, 2, "12"), &one(2, 1, "21")), want);
    let h0 = h_bracket(1, 2, &w("12"), 2, 1, &w("21"), &rat(0), d).unwrap();
    assert_eq!(h0, p(1, 1, "121").sub(&p(2, 2, "212")));
    let h1 = h_bracket(1, 2, &w("12"), 2, 1, &w("21"), &rat(1), d).unwrap();
    assert_eq!(h1, bracket_pp(1, 2, &w("12"), 2, 1, &w("21"), d).unwrap());
}

#[test]
fn straightening_example() {
    let x = gen(2, 2, 1, 1).multiply(&gen(2, 1, 2, 1)).unwrap();
    let want = PbwElement::product_of(2, GeneratorOrder::Default, &[Gen::new(1, 2, 1), Gen::new(2, 1, 1)])
        .unwrap()
        .add(&gen(2, 2, 2, 1))
        .unwrap()
        .sub(&gen(2, 1, 1, 1))
        .unwrap();
    assert_eq!(x, want);
}
