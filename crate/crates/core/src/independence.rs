//! Linear independence of normal monomials in the lifted generators
//! `t_ij(w)` after instantiation at a fixed `N`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lift::lift_t;
use crate::linalg::{EchelonBasis, SparseVec};
use crate::pbw::{GeneratorOrder, Monomial, PbwElement};
use crate::scalar::Scalar;
use crate::words::{words_up_to, Word};

/// A generator `t_ij(w)`; the derived order (word length, shortlex word,
/// `i`, `j`) is the normal order on generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TGen {
    pub i: usize,
    pub j: usize,
    pub w: Word,
}

impl Ord for TGen {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.w
            .len()
            .cmp(&other.w.len())
            .then_with(|| self.w.shortlex_cmp(&other.w))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

impl PartialOrd for TGen {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub fn t_generators(l: usize, d: usize, max_len: usize) -> Vec<TGen> {
    let mut out = Vec::new();
    for w in words_up_to(l, max_len) {
        for i in 1..=d {
            for j in 1..=d {
                out.push(TGen { i, j, w: w.clone() });
            }
        }
    }
    out.sort();
    out
}

/// Nondecreasing products of generators with total word length at most
/// `max_degree`, including the empty product.
pub fn normal_t_monomials(l: usize, d: usize, max_degree: usize) -> Vec<Vec<TGen>> {
    let gens = t_generators(l, d, max_degree);
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(Vec<TGen>, usize, usize)> = vec![(Vec::new(), 0, 0)];
    while let Some((m, start, deg)) = frontier.pop() {
        for (k, g) in gens.iter().enumerate().skip(start) {
            let nd = deg + g.w.len();
            if nd > max_degree {
                continue;
            }
            let mut next = m.clone();
            next.push(g.clone());
            out.push(next.clone());
            frontier.push((next, k, nd));
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceResult {
    pub family: usize,
    pub rank: usize,
    /// First monomial found to be dependent on earlier ones, if any.
    pub first_dependent: Option<Vec<TGen>>,
}

/// Instantiates every normal monomial as a product of `t_ij(w;N;s)`
/// (shifted) in the PBW basis of `U(gl(N)^{⊕L})` and computes the exact
/// rank of the resulting coefficient vectors.
pub fn t_monomial_rank(l: usize, d: usize, max_degree: usize, n: usize, s: i64) -> Result<IndependenceResult> {
    let family = normal_t_monomials(l, d, max_degree);
    let s = Scalar::from_int(s);
    let mut cache: HashMap<TGen, PbwElement> = HashMap::new();
    for g in t_generators(l, d, max_degree) {
        let value = lift_t(g.i, g.j, &g.w, n, &s, true)?.value;
        cache.insert(g, value);
    }
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut basis = EchelonBasis::new();
    let mut first_dependent = None;
    for m in &family {
        let mut x = PbwElement::one(n, GeneratorOrder::Default);
        for g in m {
            x = x.multiply(&cache[g])?;
        }
        let mut v = SparseVec::new();
        for (mono, c) in x.raw_terms() {
            let next = index.len();
            let k = *index.entry(mono.clone()).or_insert(next);
            let c = c.as_rational().ok_or_else(|| Error::Domain(format!("coefficient {c} still depends on s")))?;
            v.insert(k, c);
        }
        if !basis.insert(v) && first_dependent.is_none() {
            first_dependent = Some(m.clone());
        }
    }
    Ok(IndependenceResult { family: family.len(), rank: basis.rank(), first_dependent })
}
