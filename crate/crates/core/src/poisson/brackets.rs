use num_traits::{One, Zero};

use super::{g_add, tensor_add, FreeTensor, GElement, PSymbol, PoissonPolynomial};
use crate::error::{usage, Result};
use crate::scalar::Rational;
use crate::words::{pseudo_concat, CircularWord, Word};

/// `{p_ij(z), p_kl(w)}` in abstract form: `(A, B) ↦ c` stands for
/// `c · p_kj(A) p_il(B)`.
pub fn bracket_pp_tensor(z: &Word, w: &Word) -> FreeTensor {
    let (zl, wl) = (z.letters(), w.letters());
    let (m, n) = (zl.len(), wl.len());
    let mut out = FreeTensor::new();
    for r in 0..m {
        for s in 0..n {
            if zl[r] != wl[s] {
                continue;
            }
            // p_kj(w_<s z_>r) p_il(z_<r z_r w_>s)
            let a: Vec<u8> = wl[..s].iter().chain(&zl[r + 1..]).copied().collect();
            let b: Vec<u8> = zl[..=r].iter().chain(&wl[s + 1..]).copied().collect();
            tensor_add(&mut out, Word::from_letters(&a), Word::from_letters(&b), Rational::one());
            // p_kj(w_<s z_r z_>r) p_il(z_<r w_>s)
            let a: Vec<u8> = wl[..s].iter().chain(&zl[r..]).copied().collect();
            let b: Vec<u8> = zl[..r].iter().chain(&wl[s + 1..]).copied().collect();
            tensor_add(&mut out, Word::from_letters(&a), Word::from_letters(&b), -Rational::one());
        }
    }
    out
}

fn check_pair(z: &Word, w: &Word) -> Result<()> {
    if z.is_empty() || w.is_empty() {
        return Err(usage("brackets need nonempty words"));
    }
    Ok(())
}

fn contract(t: &FreeTensor, i: usize, j: usize, k: usize, l: usize, d: usize) -> Result<PoissonPolynomial> {
    let mut out = PoissonPolynomial::zero();
    for ((a, b), c) in t {
        let x = PoissonPolynomial::p(k, j, a, d)?.mul(&PoissonPolynomial::p(i, l, b, d)?);
        out.add_scaled(&x, c);
    }
    Ok(out)
}

/// `{p_ij(z), p_kl(w)}` with `p(ε) = δ`.
pub fn bracket_pp(i: usize, j: usize, z: &Word, k: usize, l: usize, w: &Word, d: usize) -> Result<PoissonPolynomial> {
    check_pair(z, w)?;
    contract(&bracket_pp_tensor(z, w), i, j, k, l, d)
}

/// The words `z_<r z_r w_>s w_<s z_>r` (sign +) and
/// `z_<r w_>s w_<s z_r z_>r` (sign −) over matching positions, for a
/// representative `w` of a circular word.
fn insertion_terms(z: &Word, w: &Word) -> Vec<(Word, i64)> {
    let (zl, wl) = (z.letters(), w.letters());
    let mut out = Vec::new();
    for r in 0..zl.len() {
        for s in 0..wl.len() {
            if zl[r] != wl[s] {
                continue;
            }
            let rotated: Vec<u8> = wl[s + 1..].iter().chain(&wl[..s]).copied().collect();
            let plus: Vec<u8> = zl[..=r].iter().chain(&rotated).chain(&zl[r + 1..]).copied().collect();
            let minus: Vec<u8> = zl[..r].iter().chain(&rotated).chain(&zl[r..]).copied().collect();
            out.push((Word::from_letters(&plus), 1));
            out.push((Word::from_letters(&minus), -1));
        }
    }
    out
}

/// `{p_ij(z), p(ŵ)}` computed with the given representative `w` of `ŵ`.
pub fn bracket_pt_rep(i: usize, j: usize, z: &Word, w: &Word, d: usize) -> Result<PoissonPolynomial> {
    check_pair(z, w)?;
    let mut out = PoissonPolynomial::zero();
    for (word, c) in insertion_terms(z, w) {
        out.add_scaled(&PoissonPolynomial::p(i, j, &word, d)?, &Rational::from_integer(c.into()));
    }
    Ok(out)
}

pub fn bracket_pt(i: usize, j: usize, z: &Word, w: &CircularWord, d: usize) -> Result<PoissonPolynomial> {
    bracket_pt_rep(i, j, z, w.canonical(), d)
}

/// `{p(ẑ), p(ŵ)}` computed with representatives `z`, `w`.
pub fn bracket_tt_rep(z: &Word, w: &Word) -> Result<PoissonPolynomial> {
    check_pair(z, w)?;
    let mut out = PoissonPolynomial::zero();
    for (word, c) in insertion_terms(z, w) {
        out.add_term(vec![PSymbol::trace(&word)?], Rational::from_integer(c.into()));
    }
    Ok(out)
}

pub fn bracket_tt(z: &CircularWord, w: &CircularWord) -> Result<PoissonPolynomial> {
    bracket_tt_rep(z.canonical(), w.canonical())
}

/// Bracket of two generators.
pub fn bracket(a: &PSymbol, b: &PSymbol, d: usize) -> Result<PoissonPolynomial> {
    use PSymbol::*;
    match (a, b) {
        (Matrix(i, j, z), Matrix(k, l, w)) => bracket_pp(*i as usize, *j as usize, z, *k as usize, *l as usize, w, d),
        (Matrix(i, j, z), Trace(w)) => bracket_pt(*i as usize, *j as usize, z, w, d),
        (Trace(z), Matrix(i, j, w)) => Ok(bracket_pt(*i as usize, *j as usize, w, z, d)?.scale(&-Rational::one())),
        (Trace(z), Trace(w)) => bracket_tt(z, w),
    }
}

/// The bracket of two polynomials, extended from generators by the Leibniz
/// rule in both arguments.
pub fn poly_bracket(x: &PoissonPolynomial, y: &PoissonPolynomial, d: usize) -> Result<PoissonPolynomial> {
    let mut out = PoissonPolynomial::zero();
    for (ma, ca) in x.terms() {
        for (mb, cb) in y.terms() {
            let c = ca * cb;
            for r in 0..ma.len() {
                for s in 0..mb.len() {
                    let b = bracket(&ma[r], &mb[s], d)?;
                    if b.is_zero() {
                        continue;
                    }
                    let rest: Vec<PSymbol> = ma
                        .iter()
                        .enumerate()
                        .filter(|(t, _)| *t != r)
                        .map(|(_, v)| v.clone())
                        .chain(mb.iter().enumerate().filter(|(t, _)| *t != s).map(|(_, v)| v.clone()))
                        .collect();
                    let mut rest_poly = PoissonPolynomial::zero();
                    rest_poly.add_term(rest, c.clone());
                    out = out.add(&b.mul(&rest_poly));
                }
            }
        }
    }
    Ok(out)
}

/// `[x, y]` in `gl(d, A_L)`: `[z_ij, w_kl] = δ_kj (z⊙w)_il − δ_il (w⊙z)_kj`.
pub fn g_bracket(x: &GElement, y: &GElement) -> GElement {
    let mut out = GElement::new();
    for ((i, j, z), a) in x {
        for ((k, l, w), b) in y {
            let c = a * b;
            if k == j {
                if let Some(zw) = pseudo_concat(z, w) {
                    g_add(&mut out, *i, *l, zw, c.clone());
                }
            }
            if i == l {
                if let Some(wz) = pseudo_concat(w, z) {
                    g_add(&mut out, *k, *j, wz, -c);
                }
            }
        }
    }
    out
}

/// The linear part `{·,·}_1` and quadratic part `{·,·}_2` of
/// `{p_ij(z), p_kl(w)}`: the linear summands come from the first term at
/// `(r,s) = (m,1)` and the second term at `(r,s) = (1,n)`.
pub fn h_bracket_parts(
    i: usize,
    j: usize,
    z: &Word,
    k: usize,
    l: usize,
    w: &Word,
    d: usize,
) -> Result<(PoissonPolynomial, PoissonPolynomial)> {
    check_pair(z, w)?;
    let mut linear = PoissonPolynomial::zero();
    if z.last() == w.first() {
        let zw = pseudo_concat(z, w).expect("boundary letters match");
        let delta = if k == j { Rational::one() } else { Rational::zero() };
        linear.add_scaled(&PoissonPolynomial::p(i, l, &zw, d)?, &delta);
    }
    if z.first() == w.last() {
        let wz = pseudo_concat(w, z).expect("boundary letters match");
        let delta = if i == l { Rational::one() } else { Rational::zero() };
        linear.add_scaled(&PoissonPolynomial::p(k, j, &wz, d)?, &-delta);
    }
    let full = bracket_pp(i, j, z, k, l, w, d)?;
    Ok((linear.clone(), full.sub(&linear)))
}

/// `{p_ij(z), p_kl(w) | h} = {·,·}_1 + h {·,·}_2`.
pub fn h_bracket(
    i: usize,
    j: usize,
    z: &Word,
    k: usize,
    l: usize,
    w: &Word,
    h: &Rational,
    d: usize,
) -> Result<PoissonPolynomial> {
    let (linear, quadratic) = h_bracket_parts(i, j, z, k, l, w, d)?;
    Ok(linear.add(&quadratic.scale(h)))
}

/// The algebra automorphism `p_ij(z) ↦ h^(ℓ(z)−1) p_ij(z)`; trace symbols
/// are left alone.
pub fn phi_h(x: &PoissonPolynomial, h: &Rational) -> PoissonPolynomial {
    let mut out = PoissonPolynomial::zero();
    for (m, c) in x.terms() {
        let mut factor = c.clone();
        for sym in m {
            if let PSymbol::Matrix(_, _, w) = sym {
                for _ in 1..w.len() {
                    factor *= h;
                }
            }
        }
        out.add_term(m.clone(), factor);
    }
    out
}
