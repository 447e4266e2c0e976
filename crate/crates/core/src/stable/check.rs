use std::collections::HashMap;

use num_traits::Zero;

use super::{add_term, check_form, form_tags, stable_comm, BiSlot, StableRelation, Tag, Terms};
use crate::error::{usage, Error, Result};
use crate::lift::{e_elem, lift_by_dominance};
use crate::linalg::{solve_columns, SparseVec};
use crate::pbw::{GeneratorOrder, Monomial, PbwElement};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::words::{words_of_length, Word};

/// Index tuples `(i, j, k, l)` used for instantiation checks: pairwise
/// distinct, partially coincident and fully coincident.
pub const INDEX_TUPLES: [(usize, usize, usize, usize); 4] = [(1, 2, 3, 4), (1, 1, 2, 2), (1, 1, 1, 1), (1, 1, 1, 2)];

const EXTRACTION_TUPLES: [(usize, usize, usize, usize); 6] =
    [(1, 2, 3, 4), (1, 1, 1, 2), (1, 2, 1, 1), (1, 1, 2, 2), (1, 2, 2, 1), (1, 1, 1, 1)];

type Provider<'a> = dyn Fn(usize, usize, &Word) -> Result<PbwElement> + 'a;

fn max_index(ijkl: (usize, usize, usize, usize)) -> usize {
    let (i, j, k, l) = ijkl;
    i.max(j).max(k).max(l)
}

/// Evaluates `Σ c · f_X(z1) f_Y(z2)` where `f` supplies the element for a
/// concrete bi-index and word (the empty word must give `δ`).
pub fn instantiate_with(
    terms: &Terms,
    ijkl: (usize, usize, usize, usize),
    n: usize,
    f: &Provider<'_>,
) -> Result<PbwElement> {
    if ijkl.0 == 0 || ijkl.1 == 0 || ijkl.2 == 0 || ijkl.3 == 0 || max_index(ijkl) > n {
        return Err(usage(format!("indices {ijkl:?} do not fit N={n}")));
    }
    let mut acc = PbwElement::zero(n, GeneratorOrder::Default);
    for ((tag, z1, z2), c) in terms {
        let (a, b) = tag.0.indices(ijkl);
        let x = f(a, b, z1)?;
        if x.is_zero() {
            continue;
        }
        let (a, b) = tag.1.indices(ijkl);
        let y = f(a, b, z2)?;
        if y.is_zero() {
            continue;
        }
        acc.add_scaled(&x.multiply(&y)?, &Scalar::from_int(*c));
    }
    Ok(acc)
}

/// The right-hand side of a relation at concrete indices, with the special
/// elements `e_ab(z;N)` (and `e_ab(ε) = δ_ab`).
pub fn instantiate(terms: &Terms, ijkl: (usize, usize, usize, usize), n: usize) -> Result<PbwElement> {
    instantiate_with(terms, ijkl, n, &|a, b, z| e_elem(a, b, z, n))
}

fn direct_commutator(w: &Word, wt: &Word, ijkl: (usize, usize, usize, usize), n: usize) -> Result<PbwElement> {
    let (i, j, k, l) = ijkl;
    e_elem(i, j, w, n)?.commutator(&e_elem(k, l, wt, n)?)
}

/// Compares the instantiated relation with the directly computed
/// commutator over a grid of index tuples and levels.
pub fn instantiate_check(
    l: usize,
    w: &Word,
    wt: &Word,
    form: u8,
    tuples: &[(usize, usize, usize, usize)],
    ns: &[usize],
) -> Result<Report> {
    let rel = stable_comm(l, w, wt, form)?;
    let mut report = Report::new(format!("instantiate {w:?},{wt:?} form {form}"));
    for &n in ns {
        for &ijkl in tuples {
            if max_index(ijkl) > n {
                continue;
            }
            let lhs = direct_commutator(w, wt, ijkl, n)?;
            let rhs = instantiate(&rel.terms, ijkl, n)?;
            report.check(lhs == rhs, || format!("at {ijkl:?}, N={n}: commutator {lhs} but relation gives {rhs}"));
        }
    }
    Ok(report)
}

/// The same relation with the lifted `t̃(·;N;s)` in place of `e(·;N)`.
pub fn s_independence_check(
    rel: &StableRelation,
    ijkl: (usize, usize, usize, usize),
    n: usize,
    s: &Scalar,
) -> Result<Report> {
    let (i, j, k, l) = ijkl;
    let t = |a: usize, b: usize, z: &Word| -> Result<PbwElement> {
        if z.is_empty() {
            e_elem(a, b, z, n)
        } else {
            lift_by_dominance(a, b, z, n, s)
        }
    };
    let lhs = t(i, j, &rel.w)?.commutator(&t(k, l, &rel.wt)?)?;
    let rhs = instantiate_with(&rel.terms, ijkl, n, &t)?;
    let mut report = Report::new(format!("t̃ relation {:?},{:?} at s={s}", rel.w, rel.wt));
    report.check(lhs == rhs, || format!("at {ijkl:?}, N={n}: {lhs} != {rhs}"));
    Ok(report)
}

/// Candidate terms of a form: every tag/word-pair allowed by the degree
/// bound and the parity rule.
fn candidates(l: usize, total: usize, form: u8) -> Vec<(Tag, Word, Word)> {
    let (odd, even) = form_tags(form);
    let mut out = Vec::new();
    for len in 1..total {
        let tag = if (total - len) % 2 == 1 { odd } else { even };
        for len1 in 0..=len {
            for z1 in words_of_length(l, len1) {
                for z2 in words_of_length(l, len - len1) {
                    out.push((tag, z1.clone(), z2));
                }
            }
        }
    }
    out
}

fn to_sparse(x: &PbwElement, tuple_idx: usize, index: &mut HashMap<(usize, Monomial), usize>) -> Result<SparseVec> {
    let mut v = SparseVec::new();
    for (m, c) in x.raw_terms() {
        let c = c.as_rational().ok_or_else(|| Error::Domain("extraction needs constant coefficients".into()))?;
        let next = index.len();
        let k = *index.entry((tuple_idx, m.clone())).or_insert(next);
        v.insert(k, c);
    }
    Ok(v)
}

/// Recovers the relation coefficients by solving exact linear systems over
/// concrete instantiations at level `N` (default `ℓ(w) + ℓ(w̃) + 4`).
pub fn extract_by_linear_algebra(l: usize, w: &Word, wt: &Word, form: u8, n: Option<usize>) -> Result<StableRelation> {
    check_form(form)?;
    if w.is_empty() || wt.is_empty() {
        return Err(usage("extraction needs nonempty words"));
    }
    let total = w.len() + wt.len();
    let n = n.unwrap_or(total + 4);
    if n < 4 {
        return Err(Error::Singular { n, reason: "index tuple (1,2,3,4) needs N >= 4".into() });
    }
    let cands = candidates(l, total, form);
    let mut index = HashMap::new();
    let mut columns = vec![SparseVec::new(); cands.len()];
    let mut rhs = SparseVec::new();
    for (t, &ijkl) in EXTRACTION_TUPLES.iter().enumerate() {
        let lhs = direct_commutator(w, wt, ijkl, n)?;
        rhs.extend(to_sparse(&lhs, t, &mut index)?);
        for (c, key) in cands.iter().enumerate() {
            let single: Terms = [(key.clone(), 1)].into_iter().collect();
            let v = instantiate(&single, ijkl, n)?;
            columns[c].extend(to_sparse(&v, t, &mut index)?);
        }
    }
    let x = match solve_columns(&columns, &rhs) {
        Err(rank) => {
            return Err(Error::Singular { n, reason: format!("candidate rank {rank} < {} unknowns", cands.len()) })
        }
        Ok(None) => {
            return Err(Error::Mismatch(format!(
                "commutator of {w:?},{wt:?} is not in the span of form-{form} candidates"
            )))
        }
        Ok(Some(x)) => x,
    };
    let mut terms = Terms::new();
    for (key, v) in cands.into_iter().zip(x) {
        if v.is_zero() {
            continue;
        }
        if !v.is_integer() {
            return Err(Error::Mismatch(format!("non-integer coefficient {v} for {key:?}")));
        }
        let c: i64 = i64::try_from(v.to_integer()).map_err(|_| Error::Mismatch("coefficient overflow".into()))?;
        add_term(&mut terms, key, c);
    }
    Ok(StableRelation { l, w: w.clone(), wt: wt.clone(), form, terms })
}

/// The `L = 1` relation between `t^(m)` and `t^(n)` in form 1.
pub fn yangian_expected(m: usize, n: usize) -> Terms {
    let mut terms = Terms::new();
    let top = Word::power(1, m + n - 1);
    add_term(&mut terms, (Tag::KJ_IL, Word::empty(), top.clone()), 1);
    add_term(&mut terms, (Tag::KJ_IL, top, Word::empty()), -1);
    for r in 1..m.min(n) {
        let q = m + n - 1 - r;
        add_term(&mut terms, (Tag::KJ_IL, Word::power(1, r), Word::power(1, q)), 1);
        add_term(&mut terms, (Tag::KJ_IL, Word::power(1, q), Word::power(1, r)), -1);
    }
    terms
}

/// Checks `stable_comm(1^m, 1^n, form 1)` against the closed formula for all
/// `m + n <= max_total`.
pub fn yangian_regression(max_total: usize) -> Result<Report> {
    let mut report = Report::new(format!("yangian m+n<={max_total}"));
    for m in 1..max_total {
        for n in 1..=(max_total - m) {
            let rel = stable_comm(1, &Word::power(1, m), &Word::power(1, n), 1)?;
            let even_free = rel.terms.keys().all(|(t, _, _)| t.0 != BiSlot::IJ && t.0 != BiSlot::KL);
            report.check(even_free, || format!("(m,n)=({m},{n}): even-family terms present: {rel}"));
            let want = yangian_expected(m, n);
            report.check(rel.terms == want, || format!("(m,n)=({m},{n}): got {rel}"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(t: &str) -> Word {
        Word::parse(t, 9).unwrap()
    }

    #[test]
    fn empty_relation_instantiates_to_zero() {
        assert!(instantiate(&Terms::new(), (1, 2, 3, 4), 4).unwrap().is_zero());
        assert!(instantiate(&Terms::new(), (1, 2, 3, 5), 4).is_err());
    }

    #[test]
    fn single_letter_instance() {
        let rel = stable_comm(1, &w("1"), &w("1"), 1).unwrap();
        let got = instantiate(&rel.terms, (1, 1, 2, 1), 2).unwrap();
        let e = |i, j| e_elem(i, j, &w("1"), 2).unwrap();
        assert_eq!(got, e(1, 1).commutator(&e(2, 1)).unwrap());
        let got = instantiate(&rel.terms, (1, 2, 3, 4), 4).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn small_instantiations() {
        let all: Vec<_> = (1..=2)
            .flat_map(|i| (1..=2).flat_map(move |j| (1..=2).flat_map(move |k| (1..=2).map(move |l| (i, j, k, l)))))
            .collect();
        assert!(instantiate_check(1, &w("1"), &w("1"), 1, &all, &[2, 3, 4]).unwrap().passed());
        let r = instantiate_check(2, &w("2"), &w("12"), 1, &[(1, 2, 3, 4)], &[4, 5, 6]).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn extraction_small() {
        let a = extract_by_linear_algebra(1, &w("1"), &w("1"), 1, Some(6)).unwrap();
        assert_eq!(a, stable_comm(1, &w("1"), &w("1"), 1).unwrap());
        assert!(extract_by_linear_algebra(2, &w("1"), &w("2"), 1, Some(6)).unwrap().is_empty());
    }

    #[test]
    fn yangian_low_degree() {
        let r = yangian_regression(4).unwrap();
        assert!(r.passed(), "{r}");
    }
}
