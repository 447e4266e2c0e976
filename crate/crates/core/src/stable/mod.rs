//! Universal quadratic-linear commutation relations for the special
//! elements: `[e_ij(w), e_kl(w̃)]` expanded over abstract bi-index slots,
//! independent of `N` and of the concrete indices.

mod algorithm;
mod check;
mod json;
mod normal;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::Word;

pub use algorithm::{stable_comm, stable_comm_with, Split};
pub use check::{
    extract_by_linear_algebra, instantiate, instantiate_check, instantiate_with, s_independence_check,
    yangian_expected, yangian_regression, INDEX_TUPLES,
};
pub use json::{normal_from_json, normal_to_json, relation_from_json, relation_to_json};
pub use normal::{normalize_relation, NormalOrder, NormalRelation, Priority};

/// The four abstract bi-indices built from the `i, j, k, l` of
/// `[e_ij(w), e_kl(w̃)]`. Declared in the order `IJ < IL < KJ < KL`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BiSlot {
    IJ,
    IL,
    KJ,
    KL,
}

impl BiSlot {
    pub const ALL: [BiSlot; 4] = [BiSlot::IJ, BiSlot::IL, BiSlot::KJ, BiSlot::KL];

    /// Whether the row index is `i` (otherwise `k`).
    fn row_is_i(self) -> bool {
        matches!(self, BiSlot::IJ | BiSlot::IL)
    }

    /// Whether the column index is `j` (otherwise `l`).
    fn col_is_j(self) -> bool {
        matches!(self, BiSlot::IJ | BiSlot::KJ)
    }

    fn from_parts(row_is_i: bool, col_is_j: bool) -> Self {
        match (row_is_i, col_is_j) {
            (true, true) => BiSlot::IJ,
            (true, false) => BiSlot::IL,
            (false, true) => BiSlot::KJ,
            (false, false) => BiSlot::KL,
        }
    }

    /// Concrete `(row, col)` for the indices `(i, j, k, l)`.
    pub fn indices(self, ijkl: (usize, usize, usize, usize)) -> (usize, usize) {
        let (i, j, k, l) = ijkl;
        (if self.row_is_i() { i } else { k }, if self.col_is_j() { j } else { l })
    }

    /// Rewrites a slot of an inner commutator `[e_X(·), e_Y(·)]`, whose own
    /// `ij` is `X` and `kl` is `Y`, in terms of the outer slots.
    pub fn relabel(self, x: BiSlot, y: BiSlot) -> BiSlot {
        let row_src = if self.row_is_i() { x } else { y };
        let col_src = if self.col_is_j() { x } else { y };
        BiSlot::from_parts(row_src.row_is_i(), col_src.col_is_j())
    }

    pub fn name(self) -> &'static str {
        match self {
            BiSlot::IJ => "IJ",
            BiSlot::IL => "IL",
            BiSlot::KJ => "KJ",
            BiSlot::KL => "KL",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "IJ" => Ok(BiSlot::IJ),
            "IL" => Ok(BiSlot::IL),
            "KJ" => Ok(BiSlot::KJ),
            "KL" => Ok(BiSlot::KL),
            _ => Err(Error::Parse(format!("unknown bi-index {text:?}"))),
        }
    }
}

/// Ordered pair of slots `X·Y`, standing for `e_X(z1) e_Y(z2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tag(pub BiSlot, pub BiSlot);

impl Tag {
    pub const KJ_IL: Tag = Tag(BiSlot::KJ, BiSlot::IL);
    pub const IL_KJ: Tag = Tag(BiSlot::IL, BiSlot::KJ);
    pub const IJ_KL: Tag = Tag(BiSlot::IJ, BiSlot::KL);
    pub const KL_IJ: Tag = Tag(BiSlot::KL, BiSlot::IJ);

    pub fn reversed(self) -> Tag {
        Tag(self.1, self.0)
    }

    /// Odd family `{KJ·IL, IL·KJ}` versus even family `{IJ·KL, KL·IJ}`.
    pub fn is_odd_family(self) -> bool {
        matches!(self.0, BiSlot::KJ | BiSlot::IL)
    }

    pub fn relabel(self, x: BiSlot, y: BiSlot) -> Tag {
        Tag(self.0.relabel(x, y), self.1.relabel(x, y))
    }

    pub fn text(self) -> String {
        format!("{}.{}", self.0.name(), self.1.name())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (a, b) = text.split_once('.').ok_or_else(|| Error::Parse(format!("bad tag {text:?}")))?;
        let tag = Tag(BiSlot::parse(a)?, BiSlot::parse(b)?);
        if ![Tag::KJ_IL, Tag::IL_KJ, Tag::IJ_KL, Tag::KL_IJ].contains(&tag) {
            return Err(Error::Parse(format!("tag {text:?} is not one of the four products")));
        }
        Ok(tag)
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// Tags permitted by a form, as `(odd family, even family)`.
pub fn form_tags(form: u8) -> (Tag, Tag) {
    match form {
        1 => (Tag::KJ_IL, Tag::IJ_KL),
        2 => (Tag::KJ_IL, Tag::KL_IJ),
        3 => (Tag::IL_KJ, Tag::IJ_KL),
        4 => (Tag::IL_KJ, Tag::KL_IJ),
        _ => panic!("form must be 1..=4"),
    }
}

pub fn check_form(form: u8) -> Result<()> {
    if (1..=4).contains(&form) {
        Ok(())
    } else {
        Err(Error::Usage(format!("form must be 1..=4, got {form}")))
    }
}

/// Term key: `(tag, z1, z2)`; the empty word stands for a Kronecker delta.
pub type TermKey = (Tag, Word, Word);

pub type Terms = BTreeMap<TermKey, i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RelTerm<'a> {
    pub tag: Tag,
    pub z1: &'a Word,
    pub z2: &'a Word,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableRelation {
    pub l: usize,
    pub w: Word,
    pub wt: Word,
    pub form: u8,
    pub terms: Terms,
}

impl StableRelation {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in serialisation order: tag text, then `z1`, `z2` shortlex.
    pub fn sorted_terms(&self) -> Vec<RelTerm<'_>> {
        sorted_terms(&self.terms)
    }

    /// The quadratic and linear terms of maximal total length
    /// `ℓ(w) + ℓ(w̃) − 1`.
    pub fn leading_terms(&self) -> Terms {
        let top = self.w.len() + self.wt.len() - 1;
        self.terms.iter().filter(|((_, a, b), _)| a.len() + b.len() == top).map(|(k, v)| (k.clone(), *v)).collect()
    }

    /// Checks the degree bound and the parity rule of the declared form.
    pub fn check_shape(&self) -> Result<()> {
        let (odd, even) = form_tags(self.form);
        let total = self.w.len() + self.wt.len();
        for ((tag, z1, z2), c) in &self.terms {
            let len = z1.len() + z2.len();
            let want = if (total - len) % 2 == 1 { odd } else { even };
            if len >= total || *tag != want || *c == 0 || len == 0 {
                return Err(Error::Mismatch(format!(
                    "term {tag}({z1:?},{z2:?}) = {c} violates the shape of form {}",
                    self.form
                )));
            }
        }
        Ok(())
    }
}

pub(crate) fn sorted_terms(terms: &Terms) -> Vec<RelTerm<'_>> {
    let mut out: Vec<RelTerm<'_>> =
        terms.iter().map(|((tag, z1, z2), c)| RelTerm { tag: *tag, z1, z2, coeff: *c }).collect();
    out.sort_by(|a, b| {
        a.tag.text().cmp(&b.tag.text()).then_with(|| a.z1.shortlex_cmp(b.z1)).then_with(|| a.z2.shortlex_cmp(b.z2))
    });
    out
}

pub(crate) fn add_term(terms: &mut Terms, key: TermKey, c: i64) {
    if c == 0 {
        return;
    }
    let slot = terms.entry(key.clone()).or_insert(0);
    *slot = slot.checked_add(c).expect("relation coefficient overflow");
    if *slot == 0 {
        terms.remove(&key);
    }
}

impl fmt::Display for StableRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[e_IJ({}), e_KL({})] =", self.w.text(self.l), self.wt.text(self.l))?;
        if self.terms.is_empty() {
            return f.write_str(" 0");
        }
        for t in self.sorted_terms() {
            write!(
                f,
                " {} {}·{}({:?},{:?})",
                if t.coeff < 0 { format!("- {}", -t.coeff) } else { format!("+ {}", t.coeff) },
                t.tag.0.name(),
                t.tag.1.name(),
                t.z1,
                t.z2
            )?;
        }
        Ok(())
    }
}
