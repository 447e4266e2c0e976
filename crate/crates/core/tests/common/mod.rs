use num_traits::{One, Zero};
use yangian_core::scalar::Rational;

/// `t_m(s) = [u^{-m}] (1 - x/(u+s))^{-1}` as a polynomial in `x`:
/// `Σ_k x^k [u^{-m}] (u+s)^{-k}`.
pub fn series_coeff(m: usize, s: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); m + 1];
    if m == 0 {
        out[0] = Rational::one();
        return out;
    }
    for k in 1..=m {
        // [u^{-m}] u^{-k} (1 + s/u)^{-k} = binom(-k, m-k) s^{m-k}
        let r = m - k;
        let mut c = Rational::one();
        for t in 0..r {
            c = c * Rational::from_integer((-(k as i64) - t as i64).into())
                / Rational::from_integer(((t + 1) as i64).into());
        }
        for _ in 0..r {
            c *= s;
        }
        out[k] = c;
    }
    out
}

/// Coefficients `c_r` with `t_m(s) = Σ_r c_r t_{m-r}(s')`, by triangular
/// elimination in the basis of powers of `x`.
pub fn series_transition(m: usize, s: &Rational, sp: &Rational) -> Vec<Rational> {
    let mut rest = series_coeff(m, s);
    let mut cs = vec![Rational::zero(); m];
    for r in 0..m {
        let deg = m - r;
        let c = rest[deg].clone();
        let basis = series_coeff(deg, sp);
        for (k, b) in basis.iter().enumerate() {
            rest[k] -= &c * b;
        }
        cs[r] = c;
    }
    assert!(rest.iter().all(Zero::is_zero));
    cs
}
