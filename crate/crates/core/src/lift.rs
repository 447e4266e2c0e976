//! Special elements `e_ij(w;N)`, their traces, and the parameter liftings
//! `t̃_ij(w;N;s)` and `t_ij(w;N;s) = t̃_ij(w;N;N+s)`.

use std::sync::{Arc, LazyLock};

use dashmap::DashMap;

use crate::error::{usage, Error, Result};
use crate::pbw::{Gen, GeneratorOrder, PbwElement};
use crate::report::Report;
use crate::scalar::{rat, Scalar};
use crate::words::{dominated_words, transition_coeff, Word};

const ORDER: GeneratorOrder = GeneratorOrder::Default;

type RowMemo = DashMap<(Word, usize, usize), Arc<Vec<PbwElement>>>;

static ROW_MEMO: LazyLock<RowMemo> = LazyLock::new(DashMap::new);

#[derive(Clone, Debug, PartialEq)]
pub struct SpecialElement {
    pub i: usize,
    pub j: usize,
    pub w: Word,
    pub n: usize,
    pub value: PbwElement,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftedElement {
    pub i: usize,
    pub j: usize,
    pub w: Word,
    pub n: usize,
    pub s: Scalar,
    pub shifted: bool,
    pub value: PbwElement,
}

fn check_indices(i: usize, j: usize, n: usize) -> Result<()> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(usage(format!("indices ({i},{j}) outside 1..={n}")));
    }
    Ok(())
}

/// Row `i` of the matrix product `E_{w_1} ... E_{w_n}`: entry `j` is
/// `e_ij(w;N)`. The empty word gives the identity row.
pub fn special_row(i: usize, w: &Word, n: usize) -> Arc<Vec<PbwElement>> {
    let key = (w.clone(), n, i);
    if let Some(hit) = ROW_MEMO.get(&key) {
        return hit.clone();
    }
    let row = if w.is_empty() {
        (1..=n).map(|j| if j == i { PbwElement::one(n, ORDER) } else { PbwElement::zero(n, ORDER) }).collect()
    } else {
        let prefix = special_row(i, &w.slice(0..w.len() - 1), n);
        let alpha = w.last().unwrap();
        times_generator_matrix(&prefix, alpha, n)
    };
    let row = Arc::new(row);
    ROW_MEMO.insert(key, row.clone());
    row
}

/// Row vector times the generator matrix `(E[a,j|alpha])_{a,j}`.
fn times_generator_matrix(row: &[PbwElement], alpha: u8, n: usize) -> Vec<PbwElement> {
    (1..=n)
        .map(|j| {
            let mut acc = PbwElement::zero(n, ORDER);
            for (a, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let g = PbwElement::generator(n, Gen::new(a + 1, j, alpha)).expect("in range");
                acc.add_assign(&x.multiply(&g).expect("same ambient"));
            }
            acc
        })
        .collect()
}

/// `e_ij(w;N)`; for the empty word this is the constant `δ_ij`.
pub fn e_elem(i: usize, j: usize, w: &Word, n: usize) -> Result<PbwElement> {
    check_indices(i, j, n)?;
    Ok(special_row(i, w, n)[j - 1].clone())
}

pub fn special(i: usize, j: usize, w: &Word, n: usize) -> Result<SpecialElement> {
    if w.is_empty() {
        return Err(usage("special element of the empty word"));
    }
    let value = e_elem(i, j, w, n)?;
    Ok(SpecialElement { i, j, w: w.clone(), n, value })
}

/// `e(w;N) = Σ_i e_ii(w;N)`.
pub fn trace_special(w: &Word, n: usize) -> Result<PbwElement> {
    if w.is_empty() {
        return Err(usage("trace of the empty word"));
    }
    let mut acc = PbwElement::zero(n, ORDER);
    for i in 1..=n {
        acc.add_assign(&special_row(i, w, n)[i - 1]);
    }
    Ok(acc)
}

/// `t̃_ij(w;N;s) = Σ_{w' ⪯ w} c(w,w';s,0) e_ij(w';N)`.
pub fn lift_by_dominance(i: usize, j: usize, w: &Word, n: usize, s: &Scalar) -> Result<PbwElement> {
    check_indices(i, j, n)?;
    if w.is_empty() {
        return Err(usage("lifting of the empty word"));
    }
    let delta = -s;
    let mut acc = PbwElement::zero(n, ORDER);
    for wp in dominated_words(w) {
        let c = transition_coeff(w, &wp, &delta)?;
        acc.add_scaled(&special_row(i, &wp, n)[j - 1], &c);
    }
    Ok(acc)
}

/// The coefficient of `u_{w_1}^{-1} ... u_{w_n}^{-1}` in row `i` of
/// `(1 − Σ_α E_α (u_α + s)^{-1})^{-1}`, expanding
/// `(u_α + s)^{-1} = Σ_k (−s)^k u_α^{−k−1}` with noncommuting `u_α`.
///
/// A term `E_{α_1} ... E_{α_p}` with exponents `k_1+1, ..., k_p+1` lands on
/// the word `α_1^{k_1+1} ... α_p^{k_p+1}`, so the coefficient is a sum over
/// factorisations of `w` into constant blocks.
pub fn lift_row_by_series(i: usize, w: &Word, n: usize, s: &Scalar) -> Result<Vec<PbwElement>> {
    if i == 0 || i > n {
        return Err(usage(format!("row index {i} outside 1..={n}")));
    }
    let letters = w.letters();
    let len = letters.len();
    let minus_s = -s;
    let mut prefix: Vec<Vec<PbwElement>> = Vec::with_capacity(len + 1);
    prefix.push(special_row(i, &Word::empty(), n).to_vec());
    for p in 1..=len {
        let mut row = vec![PbwElement::zero(n, ORDER); n];
        let alpha = letters[p - 1];
        for q in (0..p).rev() {
            if letters[q] != alpha {
                break;
            }
            let weight = minus_s.pow((p - q - 1) as u32);
            if weight.is_zero() {
                continue;
            }
            let step = times_generator_matrix(&prefix[q], alpha, n);
            for (acc, x) in row.iter_mut().zip(&step) {
                acc.add_scaled(x, &weight);
            }
        }
        prefix.push(row);
    }
    Ok(prefix.pop().expect("nonempty"))
}

/// Effective parameter of `t̃`: `s` itself, or `N + s` for the shifted `t`.
pub fn effective_s(n: usize, s: &Scalar, shifted: bool) -> Scalar {
    if shifted {
        s + &Scalar::from_int(n as i64)
    } else {
        s.clone()
    }
}

/// `t̃_ij(w;N;s)` (or `t_ij` when `shifted`), computed along both routes;
/// disagreement is reported as [`Error::Mismatch`].
pub fn lift_t(i: usize, j: usize, w: &Word, n: usize, s: &Scalar, shifted: bool) -> Result<LiftedElement> {
    let s_eff = effective_s(n, s, shifted);
    let value = lift_by_dominance(i, j, w, n, &s_eff)?;
    let series = lift_row_by_series(i, w, n, &s_eff)?;
    if series[j - 1] != value {
        return Err(Error::Mismatch(format!(
            "lifting of {w:?} at ({i},{j}), N={n}: dominance route {value} vs series route {}",
            series[j - 1]
        )));
    }
    Ok(LiftedElement { i, j, w: w.clone(), n, s: s.clone(), shifted, value })
}

/// Trace `Σ_i t̃_ii(w;N;s)`.
pub fn lift_trace(w: &Word, n: usize, s: &Scalar, shifted: bool) -> Result<PbwElement> {
    let s_eff = effective_s(n, s, shifted);
    let mut acc = PbwElement::zero(n, ORDER);
    for i in 1..=n {
        acc.add_assign(&lift_by_dominance(i, i, w, n, &s_eff)?);
    }
    Ok(acc)
}

/// `t_ij(w;s) = Σ_{w'⪯w} c(w,w';s,s') t_ij(w';s')` as abstract coefficients.
pub fn shift_expand(w: &Word, s: &Scalar, s_prime: &Scalar) -> Result<Vec<(Word, Scalar)>> {
    let delta = s_prime - s;
    dominated_words(w)
        .into_iter()
        .rev()
        .map(|wp| {
            let c = transition_coeff(w, &wp, &delta)?;
            Ok((wp, c))
        })
        .collect()
}

/// Checks `π(t̃_ij(w;N;s)) = t̃_ij(w;N−1;s−1)` for all `i,j ≤ N−1`, the
/// trace analogue, and the shifted form `π(t_ij(w;N;s)) = t_ij(w;N−1;s)`.
pub fn verify_projection(w: &Word, n: usize, s: &Scalar) -> Result<Report> {
    if n < 2 {
        return Err(usage("projection check needs N >= 2"));
    }
    let mut report = Report::new(format!("projection w={w:?} N={n} s={s}"));
    let s_down = s - &Scalar::one();
    for i in 1..n {
        for j in 1..n {
            let up = lift_by_dominance(i, j, w, n, s)?.project()?;
            let down = lift_by_dominance(i, j, w, n - 1, &s_down)?;
            report.check(up == down, || format!("π t̃_{i}{j}: {up} != {down}"));

            let up = lift_by_dominance(i, j, w, n, &effective_s(n, s, true))?.project()?;
            let down = lift_by_dominance(i, j, w, n - 1, &effective_s(n - 1, s, true))?;
            report.check(up == down, || format!("π t_{i}{j}: {up} != {down}"));
        }
    }
    let up = lift_trace(w, n, s, false)?.project()?;
    let down = lift_trace(w, n - 1, &s_down, false)?;
    report.check(up == down, || format!("π t̃ trace: {up} != {down}"));
    Ok(report)
}

/// Evaluates every coefficient of a lifted element at a rational `s`.
pub fn at_s(x: &PbwElement, s: i64) -> PbwElement {
    x.eval_s(&rat(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(t: &str) -> Word {
        Word::parse(t, 9).unwrap()
    }

    fn gen(n: usize, i: usize, j: usize, a: u8) -> PbwElement {
        PbwElement::generator(n, Gen::new(i, j, a)).unwrap()
    }

    #[test]
    fn single_letter_is_generator() {
        assert_eq!(e_elem(1, 2, &w("2"), 3).unwrap(), gen(3, 1, 2, 2));
        let t = lift_t(1, 1, &w("1"), 2, &Scalar::from_int(5), false).unwrap();
        assert_eq!(t.value, gen(2, 1, 1, 1));
    }

    #[test]
    fn two_term_sum() {
        let want = gen(2, 1, 1, 1)
            .multiply(&gen(2, 1, 1, 1))
            .unwrap()
            .add(&gen(2, 1, 2, 1).multiply(&gen(2, 2, 1, 1)).unwrap())
            .unwrap();
        assert_eq!(e_elem(1, 1, &w("11"), 2).unwrap(), want);
    }

    #[test]
    fn lift_of_square() {
        let n = 3;
        let s = Scalar::s();
        let t = lift_t(1, 2, &w("11"), n, &s, false).unwrap();
        let want = e_elem(1, 2, &w("11"), n).unwrap().sub(&e_elem(1, 2, &w("1"), n).unwrap().scale(&s)).unwrap();
        assert_eq!(t.value, want);

        let t = lift_t(1, 2, &w("11"), n, &Scalar::zero(), true).unwrap();
        let want = e_elem(1, 2, &w("11"), n).unwrap().sub(&gen(n, 1, 2, 1).scale(&Scalar::from_int(3))).unwrap();
        assert_eq!(t.value, want);
    }

    #[test]
    fn shift_expand_examples() {
        let (s, sp) = (Scalar::s(), Scalar::from_int(4));
        assert_eq!(shift_expand(&w("1"), &s, &sp).unwrap(), vec![(w("1"), Scalar::one())]);
        assert_eq!(shift_expand(&w("11"), &s, &sp).unwrap(), vec![(w("11"), Scalar::one()), (w("1"), &sp - &s)]);
    }

    #[test]
    fn projection_small_cases() {
        assert!(verify_projection(&w("1"), 2, &Scalar::zero()).unwrap().passed());
        assert!(verify_projection(&w("11"), 3, &Scalar::zero()).unwrap().passed());
        assert!(verify_projection(&w("12"), 3, &Scalar::one()).unwrap().passed());
    }

    #[test]
    fn projection_of_square_trace_entry() {
        let x = e_elem(1, 1, &w("11"), 3).unwrap().project().unwrap();
        let want = e_elem(1, 1, &w("11"), 2).unwrap().add(&e_elem(1, 1, &w("1"), 2).unwrap()).unwrap();
        assert_eq!(x, want);
    }
}
