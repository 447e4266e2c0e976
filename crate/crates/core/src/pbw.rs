//! Exact arithmetic in `U(gl(N)^{⊕L})` with PBW normal forms.
//!
//! Elements are finite sums of ordered monomials in the matrix units
//! `E[i,j|α]`; every product is straightened back to normal form with
//! respect to the element's [`GeneratorOrder`].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use smallvec::SmallVec;

use crate::error::{domain, usage, Result};
use crate::scalar::{Rational, Scalar};
use crate::words::Letter;

/// The matrix unit `E[i,j|alpha]`. The derived order is `(alpha, i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gen {
    pub alpha: Letter,
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub fn new(i: usize, j: usize, alpha: Letter) -> Self {
        Gen { alpha, i: i as u8, j: j as u8 }
    }

    fn max_index(&self) -> usize {
        self.i.max(self.j) as usize
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}|{}]", self.i, self.j, self.alpha)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GeneratorOrder {
    /// Sort by `(alpha, i, j)`.
    Default,
    /// Blocks for the projection from level `N`: `E[N,j]` with `j < N`
    /// first, then everything else except `E[i,N]` with `i < N`, which come
    /// last. Ties inside a block by `(alpha, i, j)`.
    Projection(u8),
}

impl GeneratorOrder {
    #[inline]
    pub fn key(self, g: Gen) -> u32 {
        let block = match self {
            GeneratorOrder::Default => 1,
            GeneratorOrder::Projection(n) => {
                if g.i == n && g.j < n {
                    0
                } else if g.i < n && g.j == n {
                    2
                } else {
                    1
                }
            }
        };
        (block << 24) | ((g.alpha as u32) << 16) | ((g.i as u32) << 8) | g.j as u32
    }

    pub fn cmp_gen(self, a: Gen, b: Gen) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// Length first, then lexicographic in the generator order.
    pub fn cmp_monomial(self, a: &Monomial, b: &Monomial) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            a.iter().zip(b.iter()).map(|(x, y)| self.cmp_gen(*x, *y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
        })
    }
}

pub type Monomial = SmallVec<[Gen; 6]>;

type Expansion = Arc<Vec<(Monomial, i64)>>;

static INSERT_MEMO: LazyLock<DashMap<(GeneratorOrder, Monomial, Gen), Expansion>> = LazyLock::new(DashMap::new);

/// `[a, b]` in `gl(N)^{⊕L}` as a list of generators with coefficients.
pub fn bracket_gens(a: Gen, b: Gen) -> SmallVec<[(Gen, i64); 2]> {
    let mut out = SmallVec::new();
    if a.alpha != b.alpha {
        return out;
    }
    let plus = (a.j == b.i).then_some(Gen { alpha: a.alpha, i: a.i, j: b.j });
    let minus = (b.j == a.i).then_some(Gen { alpha: a.alpha, i: b.i, j: a.j });
    match (plus, minus) {
        (Some(p), Some(m)) if p == m => {}
        (p, m) => {
            if let Some(p) = p {
                out.push((p, 1));
            }
            if let Some(m) = m {
                out.push((m, -1));
            }
        }
    }
    out
}

fn add_to(acc: &mut HashMap<Monomial, i64>, m: Monomial, c: i64) {
    let slot = acc.entry(m).or_insert(0);
    *slot = slot.checked_add(c).expect("straightening coefficient overflow");
}

/// Normal form of `m · g` for a normal monomial `m`.
fn insert(order: GeneratorOrder, m: &Monomial, g: Gen) -> Expansion {
    match m.last() {
        None => return Arc::new(vec![(Monomial::from_slice(&[g]), 1)]),
        Some(&x) if order.key(x) <= order.key(g) => {
            let mut out = m.clone();
            out.push(g);
            return Arc::new(vec![(out, 1)]);
        }
        _ => {}
    }
    let key = (order, m.clone(), g);
    if let Some(hit) = INSERT_MEMO.get(&key) {
        return hit.clone();
    }
    // m = m' x with x > g:  m' x g = (m' g) x + m' [x, g]
    let x = *m.last().unwrap();
    let prefix: Monomial = m[..m.len() - 1].iter().copied().collect();
    let mut acc: HashMap<Monomial, i64> = HashMap::new();
    for (n, c) in insert(order, &prefix, g).iter() {
        for (n2, c2) in insert(order, n, x).iter() {
            add_to(&mut acc, n2.clone(), c * c2);
        }
    }
    for (h, c) in bracket_gens(x, g) {
        for (n, c2) in insert(order, &prefix, h).iter() {
            add_to(&mut acc, n.clone(), c * c2);
        }
    }
    let result: Expansion = Arc::new(acc.into_iter().filter(|(_, c)| *c != 0).collect());
    INSERT_MEMO.insert(key, result.clone());
    result
}

/// Normal form of the (not necessarily ordered) product `a · gens`.
fn multiply_monomial(order: GeneratorOrder, a: &Monomial, gens: &[Gen]) -> Vec<(Monomial, i64)> {
    let mut current: Vec<(Monomial, i64)> = vec![(a.clone(), 1)];
    for &g in gens {
        let mut acc: HashMap<Monomial, i64> = HashMap::new();
        for (m, c) in &current {
            for (n, c2) in insert(order, m, g).iter() {
                add_to(&mut acc, n.clone(), c * c2);
            }
        }
        current = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    }
    current
}

/// Result of [`PbwElement::weight`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Weight {
    Homogeneous(i64),
    Mixed,
}

#[derive(Clone, Debug)]
pub struct PbwElement {
    n: usize,
    order: GeneratorOrder,
    terms: HashMap<Monomial, Scalar>,
}

impl PartialEq for PbwElement {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.order == other.order && self.terms == other.terms
    }
}

impl Eq for PbwElement {}

impl PbwElement {
    pub fn zero(n: usize, order: GeneratorOrder) -> Self {
        PbwElement { n, order, terms: HashMap::new() }
    }

    pub fn one(n: usize, order: GeneratorOrder) -> Self {
        Self::constant(n, order, Scalar::one())
    }

    pub fn constant(n: usize, order: GeneratorOrder, c: Scalar) -> Self {
        let mut out = Self::zero(n, order);
        out.add_term(Monomial::new(), c);
        out
    }

    /// The generator `E[i,j|alpha]` at level `n` in the default order.
    pub fn generator(n: usize, g: Gen) -> Result<Self> {
        Self::generator_in(n, GeneratorOrder::Default, g)
    }

    pub fn generator_in(n: usize, order: GeneratorOrder, g: Gen) -> Result<Self> {
        if g.i == 0 || g.j == 0 || g.max_index() > n || g.alpha == 0 {
            return Err(usage(format!("{g} is not a generator at N={n}")));
        }
        let mut out = Self::zero(n, order);
        out.add_term(Monomial::from_slice(&[g]), Scalar::one());
        Ok(out)
    }

    /// The product `gens[0] · gens[1] · ...` in normal form.
    pub fn product_of(n: usize, order: GeneratorOrder, gens: &[Gen]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.max_index() > n || g.i == 0 || g.j == 0) {
            return Err(usage(format!("{g} is not a generator at N={n}")));
        }
        let mut out = Self::zero(n, order);
        for (m, c) in multiply_monomial(order, &Monomial::new(), gens) {
            out.add_term(m, Scalar::from_int(c));
        }
        Ok(out)
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> GeneratorOrder {
        self.order
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

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms sorted by the length-lex monomial order.
    pub fn terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|a, b| self.order.cmp_monomial(a.0, b.0));
        out
    }

    pub fn raw_terms(&self) -> &HashMap<Monomial, Scalar> {
        &self.terms
    }

    /// Adds `c · m` for a monomial already in normal form.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.windows(2).all(|p| self.order.key(p[0]) <= self.order.key(p[1])));
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(usage(format!("ambient N mismatch: {} vs {}", self.n, other.n)));
        }
        if self.order != other.order {
            return Err(usage("generator order mismatch"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        Ok(out)
    }

    /// `self += other`. Panics on an ambient mismatch.
    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, &Scalar::one());
    }

    /// `self += c · other`. Panics on an ambient mismatch.
    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        assert!(self.n == other.n && self.order == other.order, "incompatible PBW elements");
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.n, self.order);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    /// Applies `f` to every coefficient (e.g. evaluating `s`).
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut out = Self::zero(self.n, self.order);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), f(v));
        }
        out
    }

    pub fn eval_s(&self, s: &Rational) -> Self {
        self.map_coeffs(|c| Scalar::from_rational(c.eval(s)))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.n, self.order);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                for (m, k) in multiply_monomial(self.order, ma, mb) {
                    out.add_term(m, c.scale(&Rational::from_integer(k.into())));
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let xy = self.multiply(other)?;
        let yx = other.multiply(self)?;
        xy.sub(&yx)
    }

    /// Filtration-degree part: only monomials of exactly `k` factors.
    pub fn degree_part(&self, k: usize) -> Self {
        let mut out = Self::zero(self.n, self.order);
        for (m, v) in &self.terms {
            if m.len() == k {
                out.add_term(m.clone(), v.clone());
            }
        }
        out
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.len()).max()
    }

    /// The same algebra element in normal form for another order.
    pub fn with_order(&self, order: GeneratorOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut out = Self::zero(self.n, order);
        for (m, v) in &self.terms {
            for (n, k) in multiply_monomial(order, &Monomial::new(), m) {
                out.add_term(n, v.scale(&Rational::from_integer(k.into())));
            }
        }
        out
    }

    /// Eigenvalue of `ad(Σ_α E[N,N|α])`: each monomial contributes
    /// `#E[N,j] (j<N) − #E[i,N] (i<N)`.
    pub fn weight(&self) -> Weight {
        let n = self.n as u8;
        let mut common = None;
        for m in self.terms.keys() {
            let w: i64 = m
                .iter()
                .map(|g| match (g.i == n, g.j == n) {
                    (true, false) => 1,
                    (false, true) => -1,
                    _ => 0,
                })
                .sum();
            match common {
                None => common = Some(w),
                Some(c) if c != w => return Weight::Mixed,
                _ => {}
            }
        }
        Weight::Homogeneous(common.unwrap_or(0))
    }

    /// `π_{N,N−1}` on the weight-zero subalgebra. The result lives at level
    /// `N − 1` in the default order.
    pub fn project(&self) -> Result<Self> {
        if self.n < 2 {
            return Err(usage("projection needs N >= 2"));
        }
        match self.weight() {
            Weight::Homogeneous(0) => {}
            w => return Err(domain(format!("projection needs weight 0, got {w:?}"))),
        }
        let n = self.n as u8;
        let sorted = self.with_order(GeneratorOrder::Projection(n));
        let mut out = Self::zero(self.n - 1, GeneratorOrder::Default);
        for (m, v) in &sorted.terms {
            if m.iter().all(|g| g.i < n && g.j < n) {
                out.add_term(m.clone(), v.clone());
            }
        }
        Ok(out)
    }

    /// Re-embeds a level-`N` element at level `n_big >= N`.
    pub fn embed(&self, n_big: usize) -> Result<Self> {
        if n_big < self.n {
            return Err(usage("cannot embed into a smaller level"));
        }
        Ok(PbwElement { n: n_big, order: self.order, terms: self.terms.clone() })
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(m, c)| {
                if m.is_empty() {
                    c.to_string()
                } else {
                    let gens: Vec<String> = m.iter().map(|g| g.to_string()).collect();
                    format!("{c} * {}", gens.join(" "))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Clears the straightening cache (mainly for memory-bounded batch runs).
pub fn clear_memo() {
    INSERT_MEMO.clear();
}
