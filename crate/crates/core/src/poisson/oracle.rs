use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{PSymbol, PoissonPolynomial};
use crate::error::{usage, Result};
use crate::pbw::{bracket_gens, Gen};
use crate::scalar::Rational;
use crate::words::Word;

/// Commutative polynomial in the matrix units `E[i,j|α]`, i.e. an element
/// of the symmetric algebra `S(gl(N)^{⊕L})`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<Vec<Gen>, Rational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut out = Self::zero();
        out.add_term(Vec::new(), Rational::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mut m: Vec<Gen>, c: Rational) {
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

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut m = a.clone();
                m.extend_from_slice(b);
                out.add_term(m, x * y);
            }
        }
        out
    }

    /// Lie–Poisson bracket: the Leibniz rule over factors with the
    /// `gl(N)^{⊕L}` bracket on pairs of matrix units.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let c = x * y;
                for r in 0..a.len() {
                    for s in 0..b.len() {
                        for (g, k) in bracket_gens(a[r], b[s]) {
                            let mut m: Vec<Gen> = Vec::with_capacity(a.len() + b.len() - 1);
                            m.push(g);
                            m.extend(a.iter().enumerate().filter(|(t, _)| *t != r).map(|(_, v)| *v));
                            m.extend(b.iter().enumerate().filter(|(t, _)| *t != s).map(|(_, v)| *v));
                            out.add_term(m, &c * Rational::from_integer(k.into()));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Every index path `i = a_0, a_1, ..., a_n = j` turned into the monomial
/// `E[a_0,a_1|w_1] ... E[a_{n-1},a_n|w_n]`.
fn matrix_symbol(i: usize, j: usize, w: &Word, n: usize) -> SymPoly {
    let mut out = SymPoly::zero();
    let len = w.len();
    let mut inner = vec![1usize; len.saturating_sub(1)];
    loop {
        let mut path = Vec::with_capacity(len + 1);
        path.push(i);
        path.extend_from_slice(&inner);
        path.push(j);
        let m: Vec<Gen> = (0..len).map(|t| Gen::new(path[t], path[t + 1], w.letters()[t])).collect();
        out.add_term(m, Rational::one());
        // odometer over the inner indices
        let mut pos = inner.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if inner[pos] < n {
                inner[pos] += 1;
                break;
            }
            inner[pos] = 1;
        }
    }
}

/// The image of a generator in `S(gl(N)^{⊕L})`.
pub fn symbol_at_level(sym: &PSymbol, n: usize) -> Result<SymPoly> {
    match sym {
        PSymbol::Matrix(i, j, w) => {
            if *i as usize > n || *j as usize > n {
                return Err(usage(format!("{sym} does not fit N={n}")));
            }
            Ok(matrix_symbol(*i as usize, *j as usize, w, n))
        }
        PSymbol::Trace(w) => {
            let mut out = SymPoly::zero();
            for i in 1..=n {
                out.add_scaled(&matrix_symbol(i, i, w.canonical(), n), &Rational::one());
            }
            Ok(out)
        }
    }
}

/// The image of a polynomial in the generators.
pub fn eval_poly(x: &PoissonPolynomial, n: usize) -> Result<SymPoly> {
    let mut out = SymPoly::zero();
    for (m, c) in x.terms() {
        let mut prod = SymPoly::one();
        for sym in m {
            prod = prod.mul(&symbol_at_level(sym, n)?);
        }
        out.add_scaled(&prod, c);
    }
    Ok(out)
}

/// `{a, b}` at level `N`, computed by expanding both generators into
/// matrix units and applying the Leibniz rule; no closed formula involved.
pub fn leibniz_oracle(a: &PSymbol, b: &PSymbol, n: usize) -> Result<SymPoly> {
    Ok(symbol_at_level(a, n)?.bracket(&symbol_at_level(b, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poisson::bracket;

    fn w(t: &str) -> Word {
        Word::parse(t, 9).unwrap()
    }

    #[test]
    fn symbol_sizes() {
        let s = symbol_at_level(&PSymbol::matrix(1, 2, &w("121"), 2).unwrap(), 3).unwrap();
        assert_eq!(s.len(), 9);
        let t = symbol_at_level(&PSymbol::trace(&w("12")).unwrap(), 3).unwrap();
        assert_eq!(t.len(), 9);
    }

    #[test]
    fn matches_closed_forms() {
        let a = PSymbol::matrix(1, 1, &w("1"), 2).unwrap();
        let b = PSymbol::matrix(2, 2, &w("1"), 2).unwrap();
        let closed = eval_poly(&bracket(&a, &b, 2).unwrap(), 3).unwrap();
        assert_eq!(leibniz_oracle(&a, &b, 3).unwrap(), closed);
        let a = PSymbol::trace(&w("12")).unwrap();
        let b = PSymbol::trace(&w("112")).unwrap();
        let closed = eval_poly(&bracket(&a, &b, 2).unwrap(), 3).unwrap();
        assert_eq!(leibniz_oracle(&a, &b, 3).unwrap(), closed);
    }

    #[test]
    fn oracle_antisymmetric() {
        let a = PSymbol::matrix(1, 2, &w("12"), 2).unwrap();
        let b = PSymbol::matrix(2, 1, &w("211"), 2).unwrap();
        let mut sum = leibniz_oracle(&a, &b, 3).unwrap();
        sum.add_scaled(&leibniz_oracle(&b, &a, 3).unwrap(), &Rational::one());
        assert!(sum.is_zero());
    }
}
