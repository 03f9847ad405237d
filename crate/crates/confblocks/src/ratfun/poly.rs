use crate::linalg::{fmt_q, Q};
use crate::repspace::add_entry;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse polynomial with exact rational coefficients in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = SparsePoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = SparsePoly::zero(nvars);
        p.add_term(e, Q::one());
        p
    }

    /// `x_a - x_b`.
    pub fn diff(nvars: usize, a: usize, b: usize) -> Self {
        &SparsePoly::var(nvars, a) - &SparsePoly::var(nvars, b)
    }

    /// `x_a - c`.
    pub fn var_minus(nvars: usize, a: usize, c: &Q) -> Self {
        &SparsePoly::var(nvars, a) - &SparsePoly::constant(nvars, c.clone())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Self {
        let mut p = SparsePoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Q> {
        &self.terms
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Q) {
        add_entry(&mut self.terms, e, c);
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

    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = SparsePoly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn degree_in(e: &[u32], vars: &[usize]) -> u32 {
        vars.iter().map(|&v| e[v]).sum()
    }

    /// Largest total degree in the given variables.
    pub fn max_degree_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms.keys().map(|e| Self::degree_in(e, vars)).max()
    }

    /// Smallest total degree in the given variables.
    pub fn min_degree_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms.keys().map(|e| Self::degree_in(e, vars)).min()
    }

    /// Terms whose degree in `vars` equals `d`.
    pub fn part_of_degree_in(&self, vars: &[usize], d: u32) -> Self {
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| Self::degree_in(e, vars) == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.uses_var(i)).collect()
    }

    /// Replaces `x_i` by the polynomial `p`.
    pub fn subst(&self, i: usize, p: &SparsePoly) -> Self {
        let mut powers: Vec<SparsePoly> = vec![SparsePoly::one(self.nvars)];
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * p;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            for (pe, pc) in &powers[k].terms {
                let ne: Vec<u32> = rest.iter().zip(pe).map(|(a, b)| a + b).collect();
                out.add_term(ne, c * pc);
            }
        }
        out
    }

    /// Replaces `x_i` by the constant `c`.
    pub fn subst_const(&self, i: usize, c: &Q) -> Self {
        self.subst(i, &SparsePoly::constant(self.nvars, c.clone()))
    }

    /// Replaces `x_i` by `x_j`.
    pub fn subst_var(&self, i: usize, j: usize) -> Self {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[j] += ne[i];
            ne[i] = 0;
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Coefficients of `x_i^k` as polynomials free of `x_i`.
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<u32, SparsePoly> {
        let mut out: BTreeMap<u32, SparsePoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[i] = 0;
            out.entry(e[i]).or_insert_with(|| SparsePoly::zero(self.nvars)).add_term(rest, c.clone());
        }
        out
    }

    /// Exact quotient by `x_a - l`, where `l` does not involve `x_a`.
    pub fn div_linear(&self, a: usize, l: &SparsePoly) -> Option<SparsePoly> {
        debug_assert!(!l.uses_var(a));
        if self.is_zero() {
            return Some(self.clone());
        }
        let coeffs = self.coefficients_in(a);
        let d = *coeffs.keys().max().unwrap();
        if d == 0 {
            return None;
        }
        // synthetic division: q_{e-1} = c_e + l q_e
        let mut quot: Vec<SparsePoly> = vec![SparsePoly::zero(self.nvars); d as usize];
        let mut carry = SparsePoly::zero(self.nvars);
        for e in (1..=d).rev() {
            let c = coeffs.get(&e).cloned().unwrap_or_else(|| SparsePoly::zero(self.nvars));
            let qe = &c + &(l * &carry);
            quot[(e - 1) as usize] = qe.clone();
            carry = qe;
        }
        let c0 = coeffs.get(&0).cloned().unwrap_or_else(|| SparsePoly::zero(self.nvars));
        let rem = &c0 + &(l * &carry);
        if !rem.is_zero() {
            return None;
        }
        let xa = SparsePoly::var(self.nvars, a);
        let mut out = SparsePoly::zero(self.nvars);
        let mut power = SparsePoly::one(self.nvars);
        for qe in quot {
            out = &out + &(&qe * &power);
            power = &power * &xa;
        }
        Some(out)
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        let mut s = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            s += t;
        }
        s
    }

    /// Renames variables: `x_i ↦ x_{perm[i]}`.
    pub fn rename(&self, perm: &[usize]) -> Self {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &k) in e.iter().enumerate() {
                ne[perm[i]] += k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Same polynomial in a ring with `n >= nvars` variables.
    pub fn widen(&self, n: usize) -> Self {
        assert!(n >= self.nvars);
        let mut out = SparsePoly::zero(n);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.resize(n, 0);
            out.add_term(ne, c.clone());
        }
        out
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Q::one())
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("t{}", i + 1) } else { format!("t{}^{}", i + 1, k) })
                    .collect();
                if mono.is_empty() {
                    fmt_q(c)
                } else {
                    format!("{}*{}", fmt_q(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
