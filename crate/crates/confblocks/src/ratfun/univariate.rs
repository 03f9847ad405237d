use super::form::{LinearFactor, RationalForm};
use crate::error::{Error, Result};
use crate::linalg::Q;
use num::{One, Zero};
use std::collections::BTreeMap;

/// Residues of a one-variable form at its finite poles and at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residues {
    pub finite: Vec<(Q, Q)>,
    pub infinity: Q,
}

impl Residues {
    pub fn total(&self) -> Q {
        self.finite.iter().fold(self.infinity.clone(), |acc, (_, r)| acc + r)
    }
}

fn mul_trunc(a: &[Q], b: &[Q], len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Series of `(d + e s)^{-m}` up to `s^{len-1}`.
fn inv_linear_pow(d: &Q, e: &Q, m: u32, len: usize) -> Vec<Q> {
    let r = -(e / d);
    let mut base = vec![Q::zero(); len];
    let mut p = d.recip();
    for c in base.iter_mut() {
        *c = p.clone();
        p *= &r;
    }
    let mut out = vec![Q::zero(); len];
    out[0] = Q::one();
    for _ in 0..m {
        out = mul_trunc(&out, &base, len);
    }
    out
}

/// `p(c + s)` truncated to `len` coefficients.
fn taylor_shift(p: &[Q], c: &Q, len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for coeff in p.iter().rev() {
        // out = out * (c + s) + coeff
        let mut next = vec![Q::zero(); len];
        for (i, x) in out.iter().enumerate() {
            next[i] += x * c;
            if i + 1 < len {
                next[i + 1] += x;
            }
        }
        next[0] += coeff;
        out = next;
    }
    out
}

/// All residues of a parameter-free rational 1-form `g(t) dt`.
pub fn residues(form: &RationalForm) -> Result<Residues> {
    let [a] = form.active() else {
        return Err(Error::Precondition("expected a 1-form".into()));
    };
    let a = *a;
    if form.numerator().vars_used().iter().any(|&v| v != a) {
        return Err(Error::HasParameters("numerator depends on other variables".into()));
    }
    let mut poles: BTreeMap<Q, u32> = BTreeMap::new();
    for (&f, &m) in form.denominator() {
        match f {
            LinearFactor::Point(x, j) if x == a => *poles.entry(form.points()[j].clone()).or_insert(0) += m,
            _ => return Err(Error::HasParameters(format!("denominator factor {f}"))),
        }
    }
    let coeffs = form.numerator().coefficients_in(a);
    let deg = coeffs.keys().max().copied().unwrap_or(0) as usize;
    let mut num = vec![Q::zero(); deg + 1];
    for (k, p) in &coeffs {
        num[*k as usize] = p.as_constant().unwrap_or_else(Q::zero);
    }

    let mut finite = Vec::new();
    for (c, &m) in &poles {
        let len = m as usize;
        let mut series = taylor_shift(&num, c, len);
        for (d, &mk) in &poles {
            if d != c {
                series = mul_trunc(&series, &inv_linear_pow(&(c - d), &Q::one(), mk, len), len);
            }
        }
        finite.push((c.clone(), series[len - 1].clone()));
    }

    // Res_∞ = -[s^1] g(1/s) = -[s^{1-(D-n)}] rev(N)(s) Π (1 - c s)^{-m}
    let total: i64 = poles.values().map(|&m| m as i64).sum();
    let shift = total - deg as i64;
    let infinity = if form.numerator().is_zero() || shift > 1 {
        Q::zero()
    } else {
        let want = (1 - shift) as usize;
        let len = want + 1;
        let rev: Vec<Q> = num.iter().rev().cloned().collect();
        let mut series: Vec<Q> = rev.into_iter().take(len).collect();
        series.resize(len, Q::zero());
        for (c, &m) in &poles {
            series = mul_trunc(&series, &inv_linear_pow(&Q::one(), &-c.clone(), m, len), len);
        }
        -series[want].clone()
    };
    Ok(Residues { finite, infinity })
}

/// Whether the residues of a parameter-free 1-form on `P^1` sum to zero.
pub fn sum_residues_zero(form: &RationalForm) -> Result<bool> {
    Ok(residues(form)?.total().is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::ratfun::form::Endpoint;
    use crate::ratfun::poly::SparsePoly;

    fn pts() -> Vec<Q> {
        vec![q(0), q(1)]
    }

    #[test]
    fn two_simple_poles() {
        let a = RationalForm::from_differences(1, vec![0], pts(), q(1), &[(0, Endpoint::Point(0))]);
        let b = RationalForm::from_differences(1, vec![0], pts(), q(1), &[(0, Endpoint::Point(1))]);
        let w = a.sub(&b).unwrap();
        let r = residues(&w).unwrap();
        assert_eq!(r.finite, vec![(q(0), q(1)), (q(1), q(-1))]);
        assert_eq!(r.infinity, q(0));
        assert!(sum_residues_zero(&w).unwrap());
    }

    #[test]
    fn residue_at_infinity_of_t_omega() {
        // Ω' = dt / ((t - z1)(t - z2)); t Ω' has residue -1 at infinity
        let w = RationalForm::from_differences(
            1,
            vec![0],
            pts(),
            q(1),
            &[(0, Endpoint::Point(0)), (0, Endpoint::Point(1))],
        );
        let tw = w.mul_poly(&SparsePoly::var(1, 0));
        let r = residues(&tw).unwrap();
        assert_eq!(r.infinity, q(-1));
        assert_eq!(r.finite.iter().fold(Q::zero(), |s, (_, x)| s + x), q(1));
    }

    #[test]
    fn double_pole() {
        // t^2 dt / (t-1)^2: residue 2 at 1, -2 at infinity
        let n = SparsePoly::var(1, 0).pow(2);
        let w = RationalForm::new(1, vec![0], pts(), n, vec![(LinearFactor::Point(0, 1), 2)]);
        let r = residues(&w).unwrap();
        assert_eq!(r.finite, vec![(q(1), q(2))]);
        assert_eq!(r.infinity, q(-2));
    }

    #[test]
    fn parameters_rejected() {
        let w = RationalForm::from_differences(2, vec![0], pts(), q(1), &[(0, Endpoint::Var(1))]);
        assert!(matches!(residues(&w), Err(Error::HasParameters(_))));
    }
}
