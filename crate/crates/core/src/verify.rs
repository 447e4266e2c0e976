//! Batch verification suites behind `yangian verify`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{usage, Error, Result};
use crate::lift::{e_elem, lift_t, verify_projection};
use crate::matrix::{invariance_check, MatrixTuple};
use crate::pbw::{Gen, GeneratorOrder, PbwElement};
use crate::poisson::{
    degeneration_suite, jacobi_suite, kks_suite, leibniz_suite, necklace_center_suite, top_degree_crosscheck,
};
use crate::report::Report;
use crate::scalar::{rat, Scalar};
use crate::stable::{extract_by_linear_algebra, instantiate_check, stable_comm, yangian_regression, INDEX_TUPLES};
use crate::words::{words_up_to, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Stable,
    Projection,
    Poisson,
    Yangian,
    Pbw,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stable" => Ok(Suite::Stable),
            "projection" => Ok(Suite::Projection),
            "poisson" => Ok(Suite::Poisson),
            "yangian" => Ok(Suite::Yangian),
            "pbw" => Ok(Suite::Pbw),
            other => Err(usage(format!("unknown suite {other:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Stable => "stable",
            Suite::Projection => "projection",
            Suite::Poisson => "poisson",
            Suite::Yangian => "yangian",
            Suite::Pbw => "pbw",
        })
    }
}

/// Size knobs; `None` means the suite's desk-size default.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub l: Option<usize>,
    pub max_len: Option<usize>,
    pub max_degree: Option<usize>,
    pub ns: Vec<usize>,
    pub ss: Vec<i64>,
    pub seed: u64,
}

impl SuiteConfig {
    fn ns_or(&self, default: &[usize]) -> Vec<usize> {
        if self.ns.is_empty() {
            default.to_vec()
        } else {
            self.ns.clone()
        }
    }

    fn ss_or(&self, default: &[i64]) -> Vec<i64> {
        if self.ss.is_empty() {
            default.to_vec()
        } else {
            self.ss.clone()
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Report>> {
    if cfg.l == Some(0) {
        return Err(usage("--L must be at least 1"));
    }
    match suite {
        Suite::Stable => stable_suite(cfg),
        Suite::Projection => projection_suite(cfg),
        Suite::Poisson => poisson_suite(cfg),
        Suite::Yangian => yangian_suite(cfg),
        Suite::Pbw => pbw_suite(cfg),
    }
}

fn pairs(l: usize, max_total: usize) -> Vec<(Word, Word)> {
    let ws = words_up_to(l, max_total.saturating_sub(1));
    let mut out = Vec::new();
    for a in ws.iter().filter(|w| !w.is_empty()) {
        for b in ws.iter().filter(|w| !w.is_empty()) {
            if a.len() + b.len() <= max_total {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn stable_suite(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    let l = cfg.l.unwrap_or(2);
    let max_total = cfg.max_len.unwrap_or(4);
    let ns = cfg.ns_or(&[4, 5, 6]);
    let items = pairs(l, max_total);
    let mut reports = Vec::new();
    for form in 1..=4u8 {
        let mut report = Report::new(format!("stable relations vs commutators, L={l} total<={max_total} form {form}"));
        let parts = items
            .par_iter()
            .map(|(a, b)| instantiate_check(l, a, b, form, &INDEX_TUPLES, &ns))
            .collect::<Result<Vec<_>>>()?;
        parts.into_iter().for_each(|r| report.absorb(r));
        reports.push(report);
    }
    let mut report = Report::new(format!("extraction vs algorithm, L={l} total<={}", max_total.min(3)));
    for (a, b) in pairs(l, max_total.min(3)) {
        let got = extract_by_linear_algebra(l, &a, &b, 1, Some(8))?;
        let want = stable_comm(l, &a, &b, 1)?;
        report.check(got == want, || format!("{a:?},{b:?}: extracted {got} vs {want}"));
    }
    reports.push(report);
    Ok(reports)
}

fn projection_suite(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    let l = cfg.l.unwrap_or(2);
    let max_len = cfg.max_len.unwrap_or(3);
    let ns = cfg.ns_or(&[3, 4]);
    let ss = cfg.ss_or(&[0, 1, -2]);
    if ns.iter().any(|&n| n < 2) {
        return Err(usage("projection needs every N >= 2"));
    }
    let words: Vec<Word> = words_up_to(l, max_len).into_iter().filter(|w| !w.is_empty()).collect();
    let mut grid = Vec::new();
    for w in &words {
        for &n in &ns {
            for &s in &ss {
                grid.push((w.clone(), n, s));
            }
        }
    }
    let parts =
        grid.par_iter().map(|(w, n, s)| verify_projection(w, *n, &Scalar::from_int(*s))).collect::<Result<Vec<_>>>()?;
    let mut proj = Report::new(format!("projection, L={l} len<={max_len} N={ns:?} s={ss:?}"));
    parts.into_iter().for_each(|r| proj.absorb(r));

    let mut dual = Report::new(format!("dual-route lifting, L={l} len<={max_len} N<={}", ns.iter().max().unwrap()));
    for w in &words {
        for &n in &ns {
            for i in 1..=n {
                for j in 1..=n {
                    match lift_t(i, j, w, n, &Scalar::s(), false) {
                        Ok(_) => dual.check(true, String::new),
                        Err(Error::Mismatch(msg)) => dual.fail(msg),
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(vec![proj, dual])
}

fn poisson_suite(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    let l = cfg.l.unwrap_or(2);
    let max_len = cfg.max_len.unwrap_or(4);
    let d = 2;
    let mut reports = vec![
        leibniz_suite(l, d, 3, max_len.min(3))?,
        kks_suite(l, max_len)?,
        jacobi_suite(l, d, max_len)?,
        necklace_center_suite(l, 3, max_len.min(3))?,
        degeneration_suite(l, d, max_len.min(4), 3)?,
    ];
    let mut top = Report::new(format!("top degree, L={l} total<={}", max_len.min(4)));
    for (a, b) in pairs(l, max_len.min(4)) {
        top.absorb(top_degree_crosscheck(l, &a, &b)?);
    }
    reports.push(top);
    let t = MatrixTuple::random(3, l, 5, cfg.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let g = loop {
        let g: Vec<Vec<_>> = (0..2).map(|_| (0..2).map(|_| rat(rng.gen_range(-5..=5))).collect()).collect();
        if &g[0][0] * &g[1][1] != &g[0][1] * &g[1][0] {
            break g;
        }
    };
    reports.push(invariance_check(1, &t, &g, &words_up_to(l, max_len.min(3)))?);
    Ok(reports)
}

fn yangian_suite(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    let max_degree = cfg.max_degree.unwrap_or(6);
    let mut reports = vec![yangian_regression(max_degree)?];
    let ns = cfg.ns_or(&[3]);
    let mut dual = Report::new(format!("L=1 lifting routes, len<={}", max_degree.min(4)));
    for k in 1..=max_degree.min(4) {
        for &n in &ns {
            match lift_t(1, n.min(2), &Word::power(1, k), n, &Scalar::s(), true) {
                Ok(_) => dual.check(true, String::new),
                Err(Error::Mismatch(msg)) => dual.fail(msg),
                Err(e) => return Err(e),
            }
        }
    }
    reports.push(dual);
    Ok(reports)
}

fn all_gens(n: usize, l: usize) -> Vec<Gen> {
    let mut out = Vec::new();
    for a in 1..=l as u8 {
        for i in 1..=n {
            for j in 1..=n {
                out.push(Gen::new(i, j, a));
            }
        }
    }
    out
}

fn random_element(rng: &mut ChaCha8Rng, n: usize, gens: &[Gen], max_len: usize) -> Result<PbwElement> {
    let mut x = PbwElement::zero(n, GeneratorOrder::Default);
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(0..=max_len);
        let m: Vec<Gen> = (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
        let c = Scalar::from_int(rng.gen_range(-3..=3));
        x.add_scaled(&PbwElement::product_of(n, GeneratorOrder::Default, &m)?, &c);
    }
    Ok(x)
}

fn pbw_suite(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    let l = cfg.l.unwrap_or(2);
    let ns = cfg.ns_or(&[3]);
    let max_len = cfg.max_len.unwrap_or(3);
    let samples = 40;
    let mut reports = Vec::new();
    for &n in &ns {
        let gens = all_gens(n, l);
        let mut jac = Report::new(format!("Jacobi on generators, N={n} L={l}"));
        let one = |g: Gen| PbwElement::generator(n, g);
        for (x, &a) in gens.iter().enumerate() {
            for (y, &b) in gens.iter().enumerate().skip(x) {
                for &c in gens.iter().skip(y) {
                    let (a, b, c) = (one(a)?, one(b)?, one(c)?);
                    let t = a
                        .commutator(&b.commutator(&c)?)?
                        .add(&b.commutator(&c.commutator(&a)?)?)?
                        .add(&c.commutator(&a.commutator(&b)?)?)?;
                    jac.check(t.is_zero(), || format!("Jacobi fails: {t}"));
                }
            }
        }
        reports.push(jac);

        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ n as u64);
        let mut alg = Report::new(format!("associativity and order round trip, N={n}, monomials up to {max_len}"));
        for _ in 0..samples {
            let a = random_element(&mut rng, n, &gens, max_len)?;
            let b = random_element(&mut rng, n, &gens, max_len)?;
            let c = random_element(&mut rng, n, &gens, max_len)?;
            let left = a.multiply(&b)?.multiply(&c)?;
            let right = a.multiply(&b.multiply(&c)?)?;
            alg.check(left == right, || format!("(ab)c != a(bc) for a={a}, b={b}, c={c}"));
            let back = left.with_order(GeneratorOrder::Projection(n as u8)).with_order(GeneratorOrder::Default);
            alg.check(back == left, || format!("order round trip changes {left}"));
        }
        reports.push(alg);

        if n >= 2 {
            let mut hom = Report::new(format!("projection is multiplicative on e_ij(w), N={n}"));
            let words: Vec<Word> = words_up_to(l, 2).into_iter().filter(|w| !w.is_empty()).collect();
            for z in &words {
                for w in &words {
                    for (i, j, k, m) in [(1, 1, 1, 1), (1, n - 1, n - 1, 1), (n - 1, 1, 1, n - 1)] {
                        let x = e_elem(i, j, z, n)?;
                        let y = e_elem(k, m, w, n)?;
                        let lhs = x.multiply(&y)?.project()?;
                        let rhs = x.project()?.multiply(&y.project()?)?;
                        hom.check(lhs == rhs, || format!("π(xy) != π(x)π(y) for e_{i}{j}({z:?}), e_{k}{m}({w:?})"));
                    }
                }
            }
            reports.push(hom);
        }
    }
    Ok(reports)
}
