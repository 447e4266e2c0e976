use num_traits::Zero;

use super::brackets::{bracket_pt_rep, bracket_tt_rep};
use super::{
    bracket, bracket_pp_tensor, bracket_tt, eval_poly, g_add, g_bracket, h_bracket, kks, leibniz_oracle, mult_circular,
    mult_reversed, poly_bracket, FreeTensor, GElement, PSymbol, PoissonPolynomial,
};
use crate::error::Result;
use crate::report::Report;
use crate::scalar::Rational;
use crate::stable::{stable_comm, BiSlot, Tag};
use crate::words::{circular_canonical, circular_words_up_to, pseudo_concat, words_up_to, CircularWord, Word};

/// All generators `p_ij(w)` (`i,j <= d`) and `p(ŵ)` with word length at
/// most `max_len`.
pub fn generators_up_to(l: usize, d: usize, max_len: usize) -> Vec<PSymbol> {
    let mut out = Vec::new();
    for w in words_up_to(l, max_len) {
        for i in 1..=d {
            for j in 1..=d {
                out.push(PSymbol::Matrix(i as u8, j as u8, w.clone()));
            }
        }
    }
    out.extend(circular_words_up_to(l, max_len).into_iter().map(PSymbol::Trace));
    out
}

fn quads(d: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                for l in 1..=d {
                    out.push((i, j, k, l));
                }
            }
        }
    }
    out
}

/// Closed-form brackets against the Leibniz oracle at level `n`, plus the
/// representative independence of the trace formulas.
pub fn leibniz_suite(l: usize, d: usize, n: usize, max_len: usize) -> Result<Report> {
    let mut report = Report::new(format!("closed forms vs Leibniz, L={l} d={d} N={n} len<={max_len}"));
    let gens = generators_up_to(l, d, max_len);
    for a in &gens {
        for b in &gens {
            let closed = eval_poly(&bracket(a, b, d)?, n)?;
            let oracle = leibniz_oracle(a, b, n)?;
            report.check(closed == oracle, || format!("{{{a}, {b}}} disagrees with the Leibniz expansion"));
        }
    }
    for z in circular_words_up_to(l, max_len) {
        for w in circular_words_up_to(l, max_len) {
            let want = bracket_tt(&z, &w)?;
            for rz in 0..z.len() {
                for rw in 0..w.len() {
                    let got = bracket_tt_rep(&z.canonical().rotate(rz), &w.canonical().rotate(rw))?;
                    report.check(got == want, || format!("{{P[{z}], P[{w}]}} depends on representatives"));
                }
            }
        }
    }
    for z in words_up_to(l, max_len) {
        for w in circular_words_up_to(l, max_len) {
            let want = bracket_pt_rep(1, 1, &z, w.canonical(), 1)?;
            for rw in 1..w.len() {
                let got = bracket_pt_rep(1, 1, &z, &w.canonical().rotate(rw), 1)?;
                report.check(got == want, || format!("{{p({z}), P[{w}]}} depends on the representative"));
            }
        }
    }
    Ok(report)
}

/// Closed forms against the KKS double bracket: the Sweedler contraction,
/// the reversed product (for `{p_ij, p}`) and the circular product (for
/// `{p, p}`).
pub fn kks_suite(l: usize, max_len: usize) -> Result<Report> {
    let mut report = Report::new(format!("KKS consistency, L={l} len<={max_len}"));
    let words = words_up_to(l, max_len);
    for z in &words {
        for w in &words {
            let double = kks(z, w);
            report.check(bracket_pp_tensor(z, w) == double, || format!("pp vs KKS at {z:?},{w:?}"));
            let circ = mult_circular(&double);
            let tt = bracket_tt_rep(z, w)?;
            let mut want = PoissonPolynomial::zero();
            for (cw, c) in &circ {
                want.add_term(vec![PSymbol::Trace(cw.clone())], c.clone());
            }
            report.check(tt == want, || format!("tt vs circular KKS product at {z:?},{w:?}"));
            let rev = mult_reversed(&double);
            let pt = bracket_pt_rep(1, 1, z, w, 1)?;
            let mut want = PoissonPolynomial::zero();
            for (word, c) in &rev {
                want.add_scaled(&PoissonPolynomial::p(1, 1, word, 1)?, c);
            }
            report.check(pt == want, || format!("pt vs reversed KKS product at {z:?},{w:?}"));
        }
    }
    Ok(report)
}

fn gen_poly(s: &PSymbol) -> PoissonPolynomial {
    PoissonPolynomial::symbol(s.clone())
}

/// Antisymmetry and degree −1 on all pairs, Jacobi on all unordered triples
/// of generators with total word length at most `max_total`.
pub fn jacobi_suite(l: usize, d: usize, max_total: usize) -> Result<Report> {
    let mut report = Report::new(format!("Poisson axioms, L={l} d={d} total<={max_total}"));
    let gens = generators_up_to(l, d, max_total.saturating_sub(1).max(1));
    for a in &gens {
        for b in &gens {
            if a.degree() + b.degree() > max_total {
                continue;
            }
            let ab = bracket(a, b, d)?;
            let ba = bracket(b, a, d)?;
            report.check(ab.add(&ba).is_zero(), || format!("{{{a},{b}}} not antisymmetric"));
            let want = a.degree() + b.degree() - 1;
            report.check(ab.is_zero() || ab.degrees() == vec![want], || {
                format!("{{{a},{b}}} has degrees {:?}, expected {want}", ab.degrees())
            });
        }
    }
    let gens: Vec<PSymbol> = gens.into_iter().filter(|g| g.degree() + 2 <= max_total).collect();
    for (x, a) in gens.iter().enumerate() {
        for (y, b) in gens.iter().enumerate().skip(x) {
            if a.degree() + b.degree() + 1 > max_total {
                continue;
            }
            let ab = bracket(a, b, d)?;
            for c in gens.iter().skip(y) {
                if a.degree() + b.degree() + c.degree() > max_total {
                    continue;
                }
                let bc = bracket(b, c, d)?;
                let ca = bracket(c, a, d)?;
                let total = poly_bracket(&gen_poly(a), &bc, d)?
                    .add(&poly_bracket(&gen_poly(b), &ca, d)?)
                    .add(&poly_bracket(&gen_poly(c), &ab, d)?);
                report.check(total.is_zero(), || format!("Jacobi fails on ({a}, {b}, {c}): {total}"));
            }
        }
    }
    Ok(report)
}

/// `{p(α^k), p(ŵ)} = 0` for `k <= max_k` and all `ŵ` with `ℓ <= max_len`.
pub fn necklace_center_suite(l: usize, max_k: usize, max_len: usize) -> Result<Report> {
    let mut report = Report::new(format!("necklace center, L={l} k<={max_k} len<={max_len}"));
    for alpha in 1..=l as u8 {
        for k in 1..=max_k {
            let z = circular_canonical(&Word::power(alpha, k))?;
            for w in circular_words_up_to(l, max_len) {
                let b = bracket_tt(&z, &w)?;
                report.check(b.is_zero(), || format!("{{P[{z}], P[{w}]}} = {b}"));
            }
        }
    }
    Ok(report)
}

/// The first pair of circular words, in order of total length and then
/// shortlex, whose necklace bracket is nonzero.
pub fn first_nonzero_necklace_bracket(
    l: usize,
    max_len: usize,
) -> Result<Option<(CircularWord, CircularWord, PoissonPolynomial)>> {
    let all = circular_words_up_to(l, max_len);
    for total in 2..=2 * max_len {
        for z in &all {
            for w in &all {
                if z.len() + w.len() != total {
                    continue;
                }
                let b = bracket_tt(z, w)?;
                if !b.is_zero() {
                    return Ok(Some((z.clone(), w.clone(), b)));
                }
            }
        }
    }
    Ok(None)
}

/// Leading terms of the form-1 relation for `(w, w̃)` against the bracket
/// `{p_ij(w), p_kl(w̃)}`, both abstractly and at every index tuple in `[2]^4`.
pub fn top_degree_crosscheck(l: usize, w: &Word, wt: &Word) -> Result<Report> {
    let mut report = Report::new(format!("top degree {w:?},{wt:?}"));
    let rel = stable_comm(l, w, wt, 1)?;
    let lead = rel.leading_terms();
    let mut abstract_lead = FreeTensor::new();
    for ((tag, z1, z2), c) in &lead {
        if *tag != Tag::KJ_IL {
            report.fail(format!("leading term with tag {tag}"));
            continue;
        }
        abstract_lead.insert((z1.clone(), z2.clone()), Rational::from_integer((*c).into()));
    }
    let want = bracket_pp_tensor(w, wt);
    report.check(abstract_lead == want, || format!("leading terms {abstract_lead:?} vs bracket {want:?}"));
    let d = 2;
    for ijkl in quads(d) {
        let (i, j, k, l_) = ijkl;
        let mut from_rel = PoissonPolynomial::zero();
        for ((tag, z1, z2), c) in &lead {
            let pick = |s: BiSlot, z: &Word| {
                let (a, b) = s.indices(ijkl);
                PoissonPolynomial::p(a, b, z, d)
            };
            let x = pick(tag.0, z1)?.mul(&pick(tag.1, z2)?);
            from_rel.add_scaled(&x, &Rational::from_integer((*c).into()));
        }
        let closed = super::bracket_pp(i, j, w, k, l_, wt, d)?;
        report.check(from_rel == closed, || format!("at {ijkl:?}: relation {from_rel} vs bracket {closed}"));
    }
    Ok(report)
}

/// Reads a linear polynomial as an element of `gl(d, A_L)`.
fn as_g_element(x: &PoissonPolynomial) -> Option<GElement> {
    let mut out = GElement::new();
    for (m, c) in x.terms() {
        match m.as_slice() {
            [PSymbol::Matrix(i, j, w)] => g_add(&mut out, *i, *j, w.clone(), c.clone()),
            _ => return None,
        }
    }
    Some(out)
}

/// `h = 0` bracket against `gl(d, A_L)`, associativity of `⊙` and the unit
/// `Σ_α α`.
pub fn degeneration_suite(l: usize, d: usize, max_total: usize, max_assoc_len: usize) -> Result<Report> {
    let mut report = Report::new(format!("degeneration, L={l} d={d} total<={max_total}"));
    let words = words_up_to(l, max_total.saturating_sub(1).max(1));
    for z in &words {
        for w in &words {
            if z.len() + w.len() > max_total {
                continue;
            }
            for (i, j, k, l_) in quads(d) {
                let h0 = h_bracket(i, j, z, k, l_, w, &Rational::zero(), d)?;
                let x: GElement = [((i as u8, j as u8, z.clone()), Rational::from_integer(1.into()))].into();
                let y: GElement = [((k as u8, l_ as u8, w.clone()), Rational::from_integer(1.into()))].into();
                let g = g_bracket(&x, &y);
                let ok = as_g_element(&h0).is_some_and(|h| h == g);
                report.check(ok, || format!("h=0 bracket of {z:?}_{i}{j}, {w:?}_{k}{l_}: {h0} vs {g:?}"));
            }
        }
    }
    let small = words_up_to(l, max_assoc_len);
    for a in &small {
        for b in &small {
            for c in &small {
                let left = pseudo_concat(a, b).and_then(|ab| pseudo_concat(&ab, c));
                let right = pseudo_concat(b, c).and_then(|bc| pseudo_concat(a, &bc));
                report.check(left == right, || format!("⊙ not associative on {a:?},{b:?},{c:?}"));
            }
        }
        let lefts: Vec<Word> = (1..=l as u8).filter_map(|x| pseudo_concat(&Word::letter(x), a)).collect();
        let rights: Vec<Word> = (1..=l as u8).filter_map(|x| pseudo_concat(a, &Word::letter(x))).collect();
        report.check(lefts == vec![a.clone()], || format!("left unit fails on {a:?}"));
        report.check(rights == vec![a.clone()], || format!("right unit fails on {a:?}"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for r in [
            leibniz_suite(2, 2, 3, 2).unwrap(),
            kks_suite(2, 3).unwrap(),
            jacobi_suite(2, 2, 4).unwrap(),
            necklace_center_suite(2, 3, 3).unwrap(),
            degeneration_suite(2, 2, 4, 3).unwrap(),
        ] {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn first_nonzero_necklace_bracket_golden() {
        let (z, w, b) = first_nonzero_necklace_bracket(2, 4).unwrap().unwrap();
        assert_eq!((z.to_string(), w.to_string()), ("112".to_string(), "1122".to_string()));
        assert_eq!(b.to_string(), "-1 * P[112122] + 1 * P[112212]");
        let (a, c) = (PSymbol::Trace(z), PSymbol::Trace(w));
        assert_eq!(eval_poly(&b, 3).unwrap(), leibniz_oracle(&a, &c, 3).unwrap());
        assert!(!leibniz_oracle(&a, &c, 3).unwrap().is_zero());
    }

    #[test]
    fn top_degree_examples() {
        let w = |t: &str| Word::parse(t, 2).unwrap();
        assert!(top_degree_crosscheck(1, &w("1"), &w("1")).unwrap().passed());
        assert!(top_degree_crosscheck(2, &w("1"), &w("21")).unwrap().passed());
    }
}
