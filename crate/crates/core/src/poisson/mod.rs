//! The Poisson layer: generators `p_ij(w)` and `p(ŵ)`, their brackets, the
//! KKS double bracket on the free algebra, the pseudo-concatenation Lie
//! algebra and a brute-force Leibniz oracle at finite `N`.

mod brackets;
mod checks;
mod kks;
mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{usage, Result};
use crate::scalar::{fmt_rational, Rational};
use crate::words::{circular_canonical, CircularWord, Word};

pub use brackets::{
    bracket, bracket_pp, bracket_pp_tensor, bracket_pt, bracket_pt_rep, bracket_tt, bracket_tt_rep, g_bracket,
    h_bracket, h_bracket_parts, phi_h, poly_bracket,
};
pub use checks::{
    degeneration_suite, first_nonzero_necklace_bracket, generators_up_to, jacobi_suite, kks_suite, leibniz_suite,
    necklace_center_suite, top_degree_crosscheck,
};
pub use kks::{kks, kks_by_derivation, mult_circular, mult_reversed};
pub use oracle::{eval_poly, leibniz_oracle, symbol_at_level, SymPoly};

/// `Σ c · (A ⊗ B)` in `F_L ⊗ F_L`; the empty word is the unit.
pub type FreeTensor = BTreeMap<(Word, Word), Rational>;

pub(crate) fn tensor_add(t: &mut FreeTensor, a: Word, b: Word, c: Rational) {
    if c.is_zero() {
        return;
    }
    let key = (a, b);
    let slot = t.entry(key.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        t.remove(&key);
    }
}

/// A generator of the Poisson algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum PSymbol {
    /// `p_ij(w)`, `w` nonempty.
    Matrix(u8, u8, Word),
    /// `p(ŵ)`.
    Trace(CircularWord),
}

impl PSymbol {
    pub fn matrix(i: usize, j: usize, w: &Word, d: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > d || j > d {
            return Err(usage(format!("p[{i},{j}] outside 1..={d}")));
        }
        if w.is_empty() {
            return Err(usage("p_ij of the empty word is a constant, not a generator"));
        }
        Ok(PSymbol::Matrix(i as u8, j as u8, w.clone()))
    }

    pub fn trace(w: &Word) -> Result<Self> {
        Ok(PSymbol::Trace(circular_canonical(w)?))
    }

    /// Degree = word length.
    pub fn degree(&self) -> usize {
        match self {
            PSymbol::Matrix(_, _, w) => w.len(),
            PSymbol::Trace(w) => w.len(),
        }
    }
}

impl fmt::Display for PSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PSymbol::Matrix(i, j, w) => write!(f, "p[{i},{j}|{w}]"),
            PSymbol::Trace(w) => write!(f, "P[{w}]"),
        }
    }
}

pub type PMonomial = Vec<PSymbol>;

/// Commutative polynomial in the [`PSymbol`]s with rational coefficients.
/// Monomials are sorted multisets.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PoissonPolynomial {
    terms: BTreeMap<PMonomial, Rational>,
}

impl PoissonPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(Vec::new(), c);
        out
    }

    pub fn symbol(s: PSymbol) -> Self {
        let mut out = Self::zero();
        out.add_term(vec![s], Rational::one());
        out
    }

    /// `p_ij(w)`, with `p_ij(ε) = δ_ij`.
    pub fn p(i: usize, j: usize, w: &Word, d: usize) -> Result<Self> {
        if w.is_empty() {
            if i == 0 || j == 0 || i > d || j > d {
                return Err(usage(format!("p[{i},{j}] outside 1..={d}")));
            }
            return Ok(if i == j { Self::constant(Rational::one()) } else { Self::zero() });
        }
        Ok(Self::symbol(PSymbol::matrix(i, j, w, d)?))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<PMonomial, Rational> {
        &self.terms
    }

    pub fn add_term(&mut self, mut m: PMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        m.sort();
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut m = a.clone();
                m.extend(b.iter().cloned());
                out.add_term(m, x * y);
            }
        }
        out
    }

    /// Degrees of the monomials present (sum of word lengths).
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.keys().map(|m| m.iter().map(PSymbol::degree).sum()).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Keeps only the part of polynomial degree (number of factors) `k`.
    pub fn factor_count_part(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.len() == k {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for PoissonPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        let parts: Vec<String> = ordered
            .into_iter()
            .map(|(m, c)| {
                let mut s = fmt_rational(c);
                for sym in m {
                    s.push_str(&format!(" * {sym}"));
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Element of `gl(d, A_L)`: `Σ c · z_ij`.
pub type GElement = BTreeMap<(u8, u8, Word), Rational>;

pub fn g_add(g: &mut GElement, i: u8, j: u8, w: Word, c: Rational) {
    if c.is_zero() {
        return;
    }
    let key = (i, j, w);
    let slot = g.entry(key.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        g.remove(&key);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn empty_word_is_delta() {
        let e = Word::empty();
        assert_eq!(PoissonPolynomial::p(1, 1, &e, 2).unwrap(), PoissonPolynomial::constant(rat(1)));
        assert!(PoissonPolynomial::p(1, 2, &e, 2).unwrap().is_zero());
        assert!(PoissonPolynomial::p(3, 1, &Word::letter(1), 2).is_err());
    }

    #[test]
    fn display_sorted() {
        let w = Word::parse("21", 2).unwrap();
        let a = PoissonPolynomial::p(2, 1, &Word::letter(1), 2).unwrap();
        let b = PoissonPolynomial::symbol(PSymbol::trace(&w).unwrap());
        let x = a.mul(&b).sub(&PoissonPolynomial::constant(rat(2)));
        assert_eq!(x.to_string(), "-2 + 1 * p[2,1|1] * P[12]");
    }
}
