use serde::{Deserialize, Serialize};

use super::normal::{NormalOrder, NormalRelation};
use super::{add_term, check_form, sorted_terms, RelTerm, StableRelation, Tag, Terms};
use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    tag: String,
    z1: String,
    z2: String,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationJson {
    #[serde(rename = "L")]
    l: usize,
    w: String,
    wt: String,
    form: u8,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NormalJson {
    #[serde(rename = "L")]
    l: usize,
    w: String,
    wt: String,
    normal: String,
    terms: Vec<TermJson>,
}

fn terms_json(terms: Vec<RelTerm<'_>>, l: usize) -> Vec<TermJson> {
    terms
        .into_iter()
        .map(|t| TermJson { tag: t.tag.text(), z1: t.z1.text(l), z2: t.z2.text(l), coeff: t.coeff })
        .collect()
}

fn parse_terms(terms: &[TermJson], l: usize) -> Result<Terms> {
    let mut out = Terms::new();
    for t in terms {
        let key = (Tag::parse(&t.tag)?, Word::parse(&t.z1, l)?, Word::parse(&t.z2, l)?);
        if key.1.is_empty() && key.2.is_empty() {
            return Err(Error::Parse("a term cannot have both words empty".into()));
        }
        if t.coeff == 0 {
            return Err(Error::Parse("zero coefficient in relation".into()));
        }
        if out.contains_key(&key) {
            return Err(Error::Parse(format!("duplicate term {} {:?} {:?}", t.tag, t.z1, t.z2)));
        }
        add_term(&mut out, key, t.coeff);
    }
    Ok(out)
}

fn nonempty(text: &str, l: usize) -> Result<Word> {
    let w = Word::parse(text, l)?;
    if w.is_empty() {
        return Err(Error::Parse("relation words must be nonempty".into()));
    }
    Ok(w)
}

pub fn relation_to_json(r: &StableRelation) -> String {
    let doc = RelationJson {
        l: r.l,
        w: r.w.text(r.l),
        wt: r.wt.text(r.l),
        form: r.form,
        terms: terms_json(sorted_terms(&r.terms), r.l),
    };
    serde_json::to_string(&doc).expect("plain data serialises")
}

pub fn relation_from_json(text: &str) -> Result<StableRelation> {
    let doc: RelationJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    check_form(doc.form).map_err(|e| Error::Parse(e.to_string()))?;
    let rel = StableRelation {
        l: doc.l,
        w: nonempty(&doc.w, doc.l)?,
        wt: nonempty(&doc.wt, doc.l)?,
        form: doc.form,
        terms: parse_terms(&doc.terms, doc.l)?,
    };
    rel.check_shape().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(rel)
}

pub fn normal_to_json(r: &NormalRelation) -> String {
    let doc = NormalJson {
        l: r.l,
        w: r.w.text(r.l),
        wt: r.wt.text(r.l),
        normal: r.order.to_string(),
        terms: terms_json(r.sorted_terms(), r.l),
    };
    serde_json::to_string(&doc).expect("plain data serialises")
}

pub fn normal_from_json(text: &str) -> Result<NormalRelation> {
    let doc: NormalJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(NormalRelation {
        l: doc.l,
        w: nonempty(&doc.w, doc.l)?,
        wt: nonempty(&doc.wt, doc.l)?,
        order: doc.normal.parse::<NormalOrder>()?,
        terms: parse_terms(&doc.terms, doc.l)?,
    })
}
