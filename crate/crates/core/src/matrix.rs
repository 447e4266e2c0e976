//! Exact evaluation of `p_ij(w)` and `p(ŵ)` as polynomial functions on
//! `L`-tuples of `N×N` rational matrices.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{domain, usage, Error, Result};
use crate::linalg::{rank, SparseVec};
use crate::poisson::{PSymbol, PoissonPolynomial};
use crate::report::Report;
use crate::scalar::{fmt_rational, parse_rational, Rational};
use crate::words::{CircularWord, Word};

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Gauss–Jordan inverse; `None` when singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> =
        a.iter().zip(identity(n)).map(|(row, id)| row.iter().cloned().chain(id).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `(X_1, ..., X_L)`, all `N×N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTuple {
    n: usize,
    mats: Vec<Matrix>,
}

impl MatrixTuple {
    pub fn new(mats: Vec<Matrix>) -> Result<Self> {
        let n = mats.first().map_or(0, Vec::len);
        if mats.is_empty() || n == 0 {
            return Err(usage("a matrix tuple needs at least one nonempty matrix"));
        }
        for (a, m) in mats.iter().enumerate() {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(domain(format!("X_{} is not {n}x{n}", a + 1)));
            }
        }
        Ok(Self { n, mats })
    }

    /// Integer entries uniform in `[-bound, bound]` from a seeded ChaCha stream.
    pub fn random(n: usize, l: usize, bound: i64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mats = (0..l)
            .map(|_| {
                (0..n)
                    .map(|_| (0..n).map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into())).collect())
                    .collect()
            })
            .collect();
        Self { n, mats }
    }

    /// Parses `[[["1","2"],["3","4"]], ...]`, one array of rows per letter.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<Vec<Vec<String>>> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mats = raw
            .iter()
            .map(|m| m.iter().map(|row| row.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>()).collect())
            .collect::<Result<Vec<Matrix>>>()?;
        Self::new(mats)
    }

    pub fn to_json(&self) -> String {
        let raw: Vec<Vec<Vec<String>>> =
            self.mats.iter().map(|m| m.iter().map(|row| row.iter().map(fmt_rational).collect()).collect()).collect();
        serde_json::to_string(&raw).expect("strings serialize")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> usize {
        self.mats.len()
    }

    pub fn matrix(&self, alpha: usize) -> &Matrix {
        &self.mats[alpha - 1]
    }

    /// `X_{w_1} ... X_{w_n}`; the identity for `ε`.
    pub fn word_product(&self, w: &Word) -> Result<Matrix> {
        let mut out = identity(self.n);
        for &a in w.letters() {
            let a = a as usize;
            if a > self.mats.len() {
                return Err(domain(format!("letter {a} but only {} matrices", self.mats.len())));
            }
            out = mat_mul(&out, &self.mats[a - 1]);
        }
        Ok(out)
    }

    /// `g X_α g^{-1}` for every `α`.
    pub fn conjugate(&self, g: &Matrix) -> Result<Self> {
        if g.len() != self.n {
            return Err(domain(format!("conjugating matrix has size {}, tuple has {}", g.len(), self.n)));
        }
        let g_inv = inverse(g).ok_or_else(|| Error::Singular { n: self.n, reason: "conjugating matrix".into() })?;
        let mats = self.mats.iter().map(|x| mat_mul(&mat_mul(g, x), &g_inv)).collect();
        Ok(Self { n: self.n, mats })
    }
}

pub fn eval_trace(w: &CircularWord, t: &MatrixTuple) -> Result<Rational> {
    let p = t.word_product(w.canonical())?;
    Ok((0..t.n).map(|i| p[i][i].clone()).sum())
}

pub fn eval_entry(i: usize, j: usize, w: &Word, t: &MatrixTuple) -> Result<Rational> {
    if i == 0 || j == 0 || i > t.n || j > t.n {
        return Err(domain(format!("entry ({i},{j}) outside a {0}x{0} matrix", t.n)));
    }
    let p = t.word_product(w)?;
    Ok(p[i - 1][j - 1].clone())
}

pub fn eval_symbol(sym: &PSymbol, t: &MatrixTuple) -> Result<Rational> {
    match sym {
        PSymbol::Matrix(i, j, w) => eval_entry(*i as usize, *j as usize, w, t),
        PSymbol::Trace(w) => eval_trace(w, t),
    }
}

pub fn eval_polynomial(x: &PoissonPolynomial, t: &MatrixTuple) -> Result<Rational> {
    let mut out = Rational::zero();
    for (m, c) in x.terms() {
        let mut v = c.clone();
        for sym in m {
            v *= eval_symbol(sym, t)?;
        }
        out += v;
    }
    Ok(out)
}

/// `block-diag(1_d, g)`.
pub fn block_diag(d: usize, g: &Matrix) -> Matrix {
    let n = d + g.len();
    let mut out = identity(n);
    for (r, row) in g.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            out[d + r][d + c] = x.clone();
        }
    }
    out
}

/// Conjugates by `block-diag(1_d, g)` and compares `p_ij(w)` for
/// `i,j <= d` and `p(ŵ)` on every word of the list.
pub fn invariance_check(d: usize, t: &MatrixTuple, g: &Matrix, words: &[Word]) -> Result<Report> {
    if d >= t.n {
        return Err(usage(format!("d={d} must be smaller than N={}", t.n)));
    }
    if g.len() != t.n - d || g.iter().any(|row| row.len() != t.n - d) {
        return Err(domain(format!("g must be {0}x{0}", t.n - d)));
    }
    let moved = t.conjugate(&block_diag(d, g))?;
    let mut report = Report::new(format!("GL invariance, d={d} N={}", t.n));
    for w in words {
        for i in 1..=d {
            for j in 1..=d {
                let (a, b) = (eval_entry(i, j, w, t)?, eval_entry(i, j, w, &moved)?);
                report.check(a == b, || format!("p[{i},{j}|{w}] moved from {a} to {b}"));
            }
        }
        if !w.is_empty() {
            let c = crate::words::circular_canonical(w)?;
            let (a, b) = (eval_trace(&c, t)?, eval_trace(&c, &moved)?);
            report.check(a == b, || format!("P[{c}] moved from {a} to {b}"));
        }
    }
    Ok(report)
}

/// Rank of the matrix of values `f_k(t_s)` over `samples` seeded random
/// tuples. Full rank certifies linear independence of the family.
pub fn evaluation_rank(family: &[PoissonPolynomial], n: usize, l: usize, samples: usize, seed: u64) -> Result<usize> {
    let tuples: Vec<MatrixTuple> =
        (0..samples).map(|s| MatrixTuple::random(n, l, 5, seed.wrapping_add(s as u64))).collect();
    let rows = family
        .par_iter()
        .map(|f| {
            let mut v = SparseVec::new();
            for (s, t) in tuples.iter().enumerate() {
                let x = eval_polynomial(f, t)?;
                if !x.is_zero() {
                    v.insert(s, x);
                }
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rank(rows))
}
