use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{tensor_add, FreeTensor};
use crate::scalar::Rational;
use crate::words::{circular_canonical, CircularWord, Letter, Word};

/// `{{α, β}} = δ_αβ (1 ⊗ α − α ⊗ 1)`.
fn on_letters(a: Letter, b: Letter) -> FreeTensor {
    let mut t = FreeTensor::new();
    if a == b {
        tensor_add(&mut t, Word::empty(), Word::letter(a), Rational::one());
        tensor_add(&mut t, Word::letter(a), Word::empty(), -Rational::one());
    }
    t
}

/// The KKS double bracket rebuilt from its values on letters by the two
/// derivation rules: outer in the second argument,
/// `{{a, bc}} = b{{a,c}} + {{a,b}}c`, and inner in the first,
/// `{{ab, c}} = a∗{{b,c}} + {{a,c}}∗b` with `a∗(x⊗y)∗b = xb ⊗ ay`.
pub fn kks_by_derivation(z: &Word, w: &Word) -> FreeTensor {
    let mut out = FreeTensor::new();
    for r in 0..z.len() {
        let (z_before, z_after) = (z.slice(0..r), z.slice(r + 1..z.len()));
        for s in 0..w.len() {
            let (w_before, w_after) = (w.slice(0..s), w.slice(s + 1..w.len()));
            for ((x, y), c) in on_letters(z.letters()[r], w.letters()[s]) {
                // outer action of w_before, w_after
                let (x, y) = (w_before.concat(&x), y.concat(&w_after));
                // inner action of z_before, z_after
                let (x, y) = (x.concat(&z_after), z_before.concat(&y));
                tensor_add(&mut out, x, y, c);
            }
        }
    }
    out
}

/// The KKS double bracket `{{z, w}}` as the explicit double sum over
/// matching letter positions.
pub fn kks(z: &Word, w: &Word) -> FreeTensor {
    let (zl, wl) = (z.letters(), w.letters());
    let (m, n) = (zl.len(), wl.len());
    let mut out = FreeTensor::new();
    for r in 0..m {
        for s in 0..n {
            if zl[r] != wl[s] {
                continue;
            }
            let zr = Word::letter(zl[r]);
            let (z_lt, z_gt) = (z.slice(0..r), z.slice(r + 1..m));
            let (w_lt, w_gt) = (w.slice(0..s), w.slice(s + 1..n));
            tensor_add(&mut out, w_lt.concat(&z_gt), z_lt.concat(&zr).concat(&w_gt), Rational::one());
            tensor_add(&mut out, w_lt.concat(&zr).concat(&z_gt), z_lt.concat(&w_gt), -Rational::one());
        }
    }
    out
}

/// `Σ c · ĉirc(A·B)`: multiplication followed by passage to circular words.
pub fn mult_circular(t: &FreeTensor) -> BTreeMap<CircularWord, Rational> {
    let mut out: BTreeMap<CircularWord, Rational> = BTreeMap::new();
    for ((a, b), c) in t {
        let key = circular_canonical(&a.concat(b)).expect("bracket terms are nonempty");
        let slot = out.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            out.remove(&key);
        }
    }
    out
}

/// `Σ c · (B·A)`.
pub fn mult_reversed(t: &FreeTensor) -> BTreeMap<Word, Rational> {
    let mut out: BTreeMap<Word, Rational> = BTreeMap::new();
    for ((a, b), c) in t {
        let key = b.concat(a);
        let slot = out.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            out.remove(&key);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::words::words_up_to;

    fn w(t: &str) -> Word {
        Word::parse(t, 9).unwrap()
    }

    fn tensor(entries: &[(&str, &str, i64)]) -> FreeTensor {
        entries.iter().map(|&(a, b, c)| ((w(a), w(b)), rat(c))).collect()
    }

    #[test]
    fn letters() {
        assert_eq!(kks(&w("1"), &w("1")), tensor(&[("", "1", 1), ("1", "", -1)]));
        assert!(kks(&w("1"), &w("2")).is_empty());
        assert_eq!(kks(&w("1"), &w("21")), tensor(&[("2", "1", 1), ("21", "", -1)]));
    }

    #[test]
    fn derivation_rules_match_formula() {
        for a in words_up_to(2, 3) {
            for b in words_up_to(2, 3) {
                assert_eq!(kks(&a, &b), kks_by_derivation(&a, &b), "{a:?} {b:?}");
            }
        }
    }
}
