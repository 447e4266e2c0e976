//! Words over the alphabet `[L] = {1, ..., L}`, circular words, run
//! structure, the dominance order and pseudo-concatenation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use smallvec::SmallVec;

use crate::error::{domain, usage, Error, Result};
use crate::scalar::Scalar;

pub type Letter = u8;

/// A finite sequence of letters. The empty word is the sentinel ε; code that
/// works with elements of `W_L` rejects it explicitly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(SmallVec<[Letter; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letter(a: Letter) -> Self {
        Word::from_letters(&[a])
    }

    /// `a` repeated `n` times.
    pub fn power(a: Letter, n: usize) -> Self {
        Word(std::iter::repeat_n(a, n).collect())
    }

    /// Parses the text format: digit string when `l <= 9`, otherwise
    /// comma-separated integers. The empty string is ε.
    pub fn parse(text: &str, l: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let letters: Vec<usize> = if l <= 9 {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad letter {p:?} in {text:?}"))))
                .collect::<Result<_>>()?
        };
        if l > Letter::MAX as usize {
            return Err(usage(format!("alphabet size {l} too large")));
        }
        for &a in &letters {
            if a == 0 || a > l {
                return Err(Error::Parse(format!("letter {a} outside 1..={l} in {text:?}")));
            }
        }
        Ok(Word(letters.into_iter().map(|a| a as Letter).collect()))
    }

    /// Text form for alphabet size `l`.
    pub fn text(&self, l: usize) -> String {
        if l <= 9 {
            self.0.iter().map(|a| char::from(b'0' + *a)).collect()
        } else {
            self.0.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word::from_letters(&self.0[range])
    }

    pub fn rotate(&self, k: usize) -> Word {
        let n = self.len();
        if n == 0 {
            return Word::empty();
        }
        let k = k % n;
        Word(self.0[k..].iter().chain(&self.0[..k]).copied().collect())
    }

    pub fn runs(&self) -> RunDecomposition {
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &a in &self.0 {
            match runs.last_mut() {
                Some((b, m)) if *b == a => *m += 1,
                _ => runs.push((a, 1)),
            }
        }
        RunDecomposition { runs }
    }

    /// Ordering by length first, then lexicographically.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.max_letter() > 9 { 10 } else { 9 };
        f.write_str(&self.text(l))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "{self}")
        }
    }
}

/// A word up to cyclic rotation, stored by its lexicographically least
/// rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CircularWord(Word);

impl CircularWord {
    pub fn canonical(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parse(text: &str, l: usize) -> Result<Self> {
        circular_canonical(&Word::parse(text, l)?)
    }
}

impl fmt::Display for CircularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn circular_canonical(w: &Word) -> Result<CircularWord> {
    if w.is_empty() {
        return Err(usage("circular word of the empty word"));
    }
    let best = (0..w.len()).map(|k| w.rotate(k)).min().expect("nonempty");
    Ok(CircularWord(best))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition {
    pub runs: Vec<(Letter, usize)>,
}

impl RunDecomposition {
    pub fn word(&self) -> Word {
        Word(self.runs.iter().flat_map(|&(a, m)| std::iter::repeat_n(a, m)).collect())
    }
}

/// `z ⊙ w`: `None` plays the role of the zero element.
pub fn pseudo_concat(z: &Word, w: &Word) -> Option<Word> {
    match (z.last(), w.first()) {
        (Some(a), Some(b)) if a == b => Some(z.concat(&w.slice(1..w.len()))),
        _ => None,
    }
}

/// Run reductions `r_i` taking `w` down to `w_prime`, if `w_prime ⪯ w`.
pub fn reduction(w: &Word, w_prime: &Word) -> Option<Vec<usize>> {
    let big = w.runs().runs;
    let small = w_prime.runs().runs;
    if big.len() != small.len() {
        return None;
    }
    big.iter().zip(&small).map(|(&(a, m), &(b, n))| (a == b && n >= 1 && n <= m).then(|| m - n)).collect()
}

pub fn dominates(w: &Word, w_prime: &Word) -> bool {
    reduction(w, w_prime).is_some()
}

/// All `w' ⪯ w`, sorted shortlex (so `w` itself comes last).
pub fn dominated_words(w: &Word) -> Vec<Word> {
    let runs = w.runs().runs;
    let mut out = vec![Vec::<Letter>::new()];
    for &(a, m) in &runs {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=m).map(move |n| {
                    let mut p = prefix.clone();
                    p.extend(std::iter::repeat_n(a, n));
                    p
                })
            })
            .collect();
    }
    let mut words: Vec<Word> = out.into_iter().map(|l| Word::from_letters(&l)).collect();
    words.sort_by(Word::shortlex_cmp);
    words
}

/// `c(w, w'; s, s')` as a function of `delta = s' - s`:
/// `delta^(Σ r_i) · Π binom(m_i - 1, r_i)`.
pub fn transition_coeff(w: &Word, w_prime: &Word, delta: &Scalar) -> Result<Scalar> {
    if w.is_empty() {
        return Err(usage("transition coefficient of the empty word"));
    }
    let r = reduction(w, w_prime).ok_or_else(|| domain(format!("{w_prime:?} is not dominated by {w:?}")))?;
    let mut coeff = BigInt::from(1);
    let mut total = 0u32;
    for (&(_, m), &ri) in w.runs().runs.iter().zip(&r) {
        coeff *= binomial(BigInt::from(m - 1), BigInt::from(ri));
        total += ri as u32;
    }
    Ok(delta.pow(total).scale(&BigRational::from_integer(coeff)))
}

/// Every word of length exactly `n` over `[l]`, lexicographic.
pub fn words_of_length(l: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (1..=l as Letter).map(move |a| w.concat(&Word::letter(a)))).collect();
    }
    out
}

/// Every nonempty word of length at most `max_len` over `[l]`, shortlex.
pub fn words_up_to(l: usize, max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(|n| words_of_length(l, n)).collect()
}

/// Distinct circular words of length at most `max_len`, by canonical form.
pub fn circular_words_up_to(l: usize, max_len: usize) -> Vec<CircularWord> {
    let mut out: Vec<CircularWord> =
        words_up_to(l, max_len).iter().map(|w| circular_canonical(w).expect("nonempty")).collect();
    out.sort_by(|a, b| a.0.shortlex_cmp(&b.0));
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn w(text: &str) -> Word {
        Word::parse(text, 9).unwrap()
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(w("112").letters(), &[1, 1, 2]);
        assert_eq!(Word::parse("1,10,2", 12).unwrap().letters(), &[1, 10, 2]);
        assert_eq!(Word::parse("1,10,2", 12).unwrap().text(12), "1,10,2");
        assert!(Word::parse("13", 2).is_err());
        assert!(Word::parse("1a", 2).is_err());
        assert!(Word::parse("", 2).unwrap().is_empty());
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(circular_canonical(&w("1")).unwrap().canonical(), &w("1"));
        assert_eq!(circular_canonical(&w("21")).unwrap().canonical(), &w("12"));
        assert_eq!(circular_canonical(&w("211")).unwrap().canonical(), &w("112"));
        assert!(circular_canonical(&Word::empty()).is_err());
    }

    #[test]
    fn pseudo_concat_examples() {
        assert_eq!(pseudo_concat(&w("12"), &w("21")), Some(w("121")));
        assert_eq!(pseudo_concat(&w("12"), &w("11")), None);
        for m in 1..5 {
            for n in 1..5 {
                assert_eq!(pseudo_concat(&Word::power(1, m), &Word::power(1, n)), Some(Word::power(1, m + n - 1)));
            }
        }
    }

    #[test]
    fn dominated_examples() {
        assert_eq!(dominated_words(&w("12")), vec![w("12")]);
        assert_eq!(dominated_words(&w("112")), vec![w("12"), w("112")]);
        let mut got = dominated_words(&w("1122"));
        got.sort();
        let mut want = vec![w("1122"), w("122"), w("112"), w("12")];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn transition_examples() {
        let d = Scalar::s();
        assert_eq!(transition_coeff(&w("121"), &w("121"), &d).unwrap(), Scalar::one());
        assert_eq!(transition_coeff(&w("111"), &w("11"), &d).unwrap(), d.scale(&rat(2)));
        assert_eq!(transition_coeff(&w("1122"), &w("12"), &d).unwrap(), d.pow(2));
        assert!(matches!(transition_coeff(&w("12"), &w("112"), &d), Err(Error::Domain(_))));
    }
}
