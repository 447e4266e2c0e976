use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::algorithm::{comm_terms, Split};
use super::{add_term, sorted_terms, BiSlot, RelTerm, StableRelation, Terms};
use crate::error::Error;
use crate::words::Word;

/// Which component of a `(BiSlot, Word)` pair is compared first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Priority {
    /// Slot rank, then word length, then lexicographic.
    SlotFirst,
    /// Word length, then slot rank, then lexicographic.
    LengthFirst,
}

/// A total order on the factors `e_X(z)` of quadratic monomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct NormalOrder {
    /// Slots from smallest to largest.
    pub slots: [BiSlot; 4],
    pub priority: Priority,
}

impl Default for NormalOrder {
    fn default() -> Self {
        NormalOrder { slots: BiSlot::ALL, priority: Priority::SlotFirst }
    }
}

impl NormalOrder {
    fn rank(&self, x: BiSlot) -> usize {
        self.slots.iter().position(|s| *s == x).expect("permutation")
    }

    pub fn cmp_factor(&self, a: (BiSlot, &Word), b: (BiSlot, &Word)) -> Ordering {
        let slot = self.rank(a.0).cmp(&self.rank(b.0));
        let len = a.1.len().cmp(&b.1.len());
        let lex = a.1.cmp(b.1);
        match self.priority {
            Priority::SlotFirst => slot.then(len).then(lex),
            Priority::LengthFirst => len.then(slot).then(lex),
        }
    }

    pub fn is_normal(&self, x: BiSlot, z1: &Word, y: BiSlot, z2: &Word) -> bool {
        self.cmp_factor((x, z1), (y, z2)) != Ordering::Greater
    }
}

impl fmt::Display for NormalOrder {
    /// `IJ<IL<KJ<KL`, prefixed with `length:` for length-first comparison.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.priority == Priority::LengthFirst {
            f.write_str("length:")?;
        }
        let names: Vec<&str> = self.slots.iter().map(|s| s.name()).collect();
        f.write_str(&names.join("<"))
    }
}

impl FromStr for NormalOrder {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let (priority, body) = match text.trim().strip_prefix("length:") {
            Some(rest) => (Priority::LengthFirst, rest),
            None => (Priority::SlotFirst, text.trim()),
        };
        let parsed: Vec<BiSlot> = body.split('<').map(|p| BiSlot::parse(p.trim())).collect::<Result<_, _>>()?;
        let mut sorted = parsed.clone();
        sorted.sort();
        if sorted != BiSlot::ALL {
            return Err(Error::Parse(format!("{text:?} must order each of IJ, IL, KJ, KL once")));
        }
        Ok(NormalOrder { slots: [parsed[0], parsed[1], parsed[2], parsed[3]], priority })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalRelation {
    pub l: usize,
    pub w: Word,
    pub wt: Word,
    pub order: NormalOrder,
    pub terms: Terms,
}

impl NormalRelation {
    pub fn sorted_terms(&self) -> Vec<RelTerm<'_>> {
        sorted_terms(&self.terms)
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(|(tag, z1, z2)| self.order.is_normal(tag.0, z1, tag.1, z2))
    }
}

/// Reorders every quadratic term to normal form, adding the commutator of
/// each swapped pair (itself normalised recursively). Linear terms are
/// reoriented without correction.
pub fn normalize_terms(terms: &Terms, order: &NormalOrder) -> Terms {
    let mut out = Terms::new();
    let mut stack: Vec<((super::Tag, Word, Word), i64)> = terms.iter().map(|(k, c)| (k.clone(), *c)).collect();
    while let Some(((tag, z1, z2), c)) = stack.pop() {
        if order.is_normal(tag.0, &z1, tag.1, &z2) {
            add_term(&mut out, (tag, z1, z2), c);
            continue;
        }
        add_term(&mut out, (tag.reversed(), z2.clone(), z1.clone()), c);
        if z1.is_empty() || z2.is_empty() {
            continue;
        }
        for ((itag, y1, y2), d) in comm_terms(&z1, &z2, 1, Split::First).iter() {
            stack.push(((itag.relabel(tag.0, tag.1), y1.clone(), y2.clone()), c * d));
        }
    }
    out
}

pub fn normalize_relation(r: &StableRelation, order: &NormalOrder) -> NormalRelation {
    NormalRelation { l: r.l, w: r.w.clone(), wt: r.wt.clone(), order: *order, terms: normalize_terms(&r.terms, order) }
}
