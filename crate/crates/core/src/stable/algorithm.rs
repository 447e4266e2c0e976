use std::sync::{Arc, LazyLock};

use dashmap::DashMap;

use super::{add_term, check_form, form_tags, BiSlot, StableRelation, Tag, Terms};
use crate::error::{usage, Result};
use crate::words::Word;

/// Where the longer word is cut in the recursion.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Split {
    /// `w = (first letter) · rest`
    First,
    /// `w = rest · (last letter)`
    Last,
}

type Memo = DashMap<(Word, Word, u8, Split), Arc<Terms>>;

static MEMO: LazyLock<Memo> = LazyLock::new(DashMap::new);

/// The relation `[e_ij(w), e_kl(w̃)] = Σ c · e_X(z1) e_Y(z2)` in the requested
/// form, via the recursive splitting algorithm.
pub fn stable_comm(l: usize, w: &Word, wt: &Word, form: u8) -> Result<StableRelation> {
    stable_comm_with(l, w, wt, form, Split::First)
}

pub fn stable_comm_with(l: usize, w: &Word, wt: &Word, form: u8, split: Split) -> Result<StableRelation> {
    check_form(form)?;
    for word in [w, wt] {
        if word.is_empty() {
            return Err(usage("stable relation needs nonempty words"));
        }
        if word.max_letter() as usize > l {
            return Err(usage(format!("word {word:?} uses letters beyond L={l}")));
        }
    }
    let terms = comm_terms(w, wt, form, split);
    Ok(StableRelation { l, w: w.clone(), wt: wt.clone(), form, terms: (*terms).clone() })
}

/// The form that the swap `(i,j,w) <-> (k,l,w̃)` carries form `f` to.
fn swapped_form(form: u8) -> u8 {
    5 - form
}

pub(super) fn comm_terms(w: &Word, wt: &Word, form: u8, split: Split) -> Arc<Terms> {
    let key = (w.clone(), wt.clone(), form, split);
    if let Some(hit) = MEMO.get(&key) {
        return hit.clone();
    }
    let terms = Arc::new(compute(w, wt, form, split));
    MEMO.insert(key, terms.clone());
    terms
}

fn compute(w: &Word, wt: &Word, form: u8, split: Split) -> Terms {
    if w.len() == 1 && wt.len() == 1 {
        let mut raw = Terms::new();
        if w == wt {
            // [E_ij, E_kl] = δ_kj E_il − δ_il E_kj
            add_term(&mut raw, (Tag::KJ_IL, Word::empty(), w.clone()), 1);
            add_term(&mut raw, (Tag::IL_KJ, Word::empty(), w.clone()), -1);
        }
        return to_form(raw, form, split);
    }
    if w.len() == 1 {
        let inner = comm_terms(wt, w, swapped_form(form), split);
        let mut out = Terms::new();
        for ((tag, z1, z2), c) in inner.iter() {
            add_term(&mut out, (tag.relabel(BiSlot::KL, BiSlot::IJ), z1.clone(), z2.clone()), -c);
        }
        return out;
    }
    let cut = match split {
        Split::First => 1,
        Split::Last => w.len() - 1,
    };
    let (head, tail) = (w.slice(0..cut), w.slice(cut..w.len()));
    let mut raw = Terms::new();
    // Σ_a [e_ia(head), e_kl(w̃)] e_aj(tail), inner relation in form 4.
    for ((tag, z1, z2), c) in comm_terms(&head, wt, 4, split).iter() {
        add_term(&mut raw, (*tag, z1.clone(), z2.concat(&tail)), *c);
    }
    // Σ_a e_ia(head) [e_aj(tail), e_kl(w̃)], inner relation in form 3.
    for ((tag, z1, z2), c) in comm_terms(&tail, wt, 3, split).iter() {
        add_term(&mut raw, (*tag, head.concat(z1), z2.clone()), *c);
    }
    to_form(raw, form, split)
}

/// Rewrites terms with non-permitted tags: linear ones by swapping the
/// factors, quadratic ones by swapping and adding the commutator.
fn to_form(raw: Terms, form: u8, split: Split) -> Terms {
    let (odd, even) = form_tags(form);
    let mut out = Terms::new();
    for ((tag, z1, z2), c) in raw {
        let permitted = if tag.is_odd_family() { odd } else { even };
        if tag == permitted {
            add_term(&mut out, (tag, z1, z2), c);
            continue;
        }
        add_term(&mut out, (tag.reversed(), z2.clone(), z1.clone()), c);
        if z1.is_empty() || z2.is_empty() {
            continue;
        }
        let (x, y) = (tag.0, tag.1);
        let inner_form = (1..=4u8)
            .find(|&g| {
                let (io, ie) = form_tags(g);
                let (mo, me) = (io.relabel(x, y), ie.relabel(x, y));
                (mo == odd || mo == even) && (me == odd || me == even)
            })
            .expect("some inner form maps into every outer form");
        for ((itag, y1, y2), d) in comm_terms(&z1, &z2, inner_form, split).iter() {
            add_term(&mut out, (itag.relabel(x, y), y1.clone(), y2.clone()), c * d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(t: &str) -> Word {
        Word::parse(t, 9).unwrap()
    }

    fn terms(entries: &[(Tag, &str, &str, i64)]) -> Terms {
        entries.iter().map(|&(t, a, b, c)| ((t, w(a), w(b)), c)).collect()
    }

    #[test]
    fn single_letters() {
        let r = stable_comm(1, &w("1"), &w("1"), 1).unwrap();
        assert_eq!(r.terms, terms(&[(Tag::KJ_IL, "", "1", 1), (Tag::KJ_IL, "1", "", -1)]));
        for form in 1..=4 {
            assert!(stable_comm(2, &w("1"), &w("2"), form).unwrap().is_empty());
        }
    }

    #[test]
    fn letter_against_pair() {
        let r = stable_comm(2, &w("2"), &w("12"), 1).unwrap();
        assert_eq!(r.terms, terms(&[(Tag::KJ_IL, "1", "2", 1), (Tag::KJ_IL, "12", "", -1)]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(stable_comm(2, &w("1"), &w("1"), 5).is_err());
        assert!(stable_comm(2, &w(""), &w("1"), 1).is_err());
        assert!(stable_comm(2, &w("3"), &w("1"), 1).is_err());
    }

    #[test]
    fn shapes_hold() {
        for a in crate::words::words_up_to(2, 3) {
            for b in crate::words::words_up_to(2, 3) {
                for form in 1..=4 {
                    stable_comm(2, &a, &b, form).unwrap().check_shape().unwrap();
                }
            }
        }
    }
}
