use super::poly::SparsePoly;
use crate::error::{Error, Result};
use crate::linalg::{fmt_q, Q};
use num::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// `Diag(a, b)` is `t_a - t_b` with `a < b`; `Point(a, j)` is `t_a - z_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LinearFactor {
    Diag(usize, usize),
    Point(usize, usize),
}

impl LinearFactor {
    /// `t_a - t_b` as a normalized factor and a sign.
    pub fn diag(a: usize, b: usize) -> (LinearFactor, i32) {
        assert_ne!(a, b);
        if a < b {
            (LinearFactor::Diag(a, b), 1)
        } else {
            (LinearFactor::Diag(b, a), -1)
        }
    }

    pub fn involves(&self, v: usize) -> bool {
        match *self {
            LinearFactor::Diag(a, b) => a == v || b == v,
            LinearFactor::Point(a, _) => a == v,
        }
    }

    pub fn vars(&self) -> Vec<usize> {
        match *self {
            LinearFactor::Diag(a, b) => vec![a, b],
            LinearFactor::Point(a, _) => vec![a],
        }
    }

    pub fn to_poly(&self, nvars: usize, points: &[Q]) -> SparsePoly {
        match *self {
            LinearFactor::Diag(a, b) => SparsePoly::diff(nvars, a, b),
            LinearFactor::Point(a, j) => SparsePoly::var_minus(nvars, a, &points[j]),
        }
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LinearFactor::Diag(a, b) => write!(f, "(t{} - t{})", a + 1, b + 1),
            LinearFactor::Point(a, j) => write!(f, "(t{} - z{})", a + 1, j + 1),
        }
    }
}

/// Image of a factor under a substitution.
enum Mapped {
    Factor(LinearFactor, i32),
    Constant(Q),
}

fn sign_q(s: i32) -> Q {
    if s >= 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

/// `N / Π f^m · dt_{active}` with linear factors `f` of the two allowed shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    nvars: usize,
    numerator: SparsePoly,
    denominator: BTreeMap<LinearFactor, u32>,
    active: Vec<usize>,
    points: Vec<Q>,
}

impl RationalForm {
    /// Builds and reduces a form; `active` is sorted and gives the wedge order.
    pub fn new(
        nvars: usize,
        active: Vec<usize>,
        points: Vec<Q>,
        numerator: SparsePoly,
        factors: impl IntoIterator<Item = (LinearFactor, u32)>,
    ) -> RationalForm {
        let mut denominator = BTreeMap::new();
        for (f, m) in factors {
            if m > 0 {
                *denominator.entry(f).or_insert(0) += m;
            }
        }
        let mut active = active;
        active.sort();
        active.dedup();
        let mut out = RationalForm { nvars, numerator, denominator, active, points };
        out.reduce();
        out
    }

    /// `dt_{active} / Π (x_i - y_i)`, where each side is a variable or a point.
    pub fn from_differences(
        nvars: usize,
        active: Vec<usize>,
        points: Vec<Q>,
        coefficient: Q,
        diffs: &[(usize, Endpoint)],
    ) -> RationalForm {
        let mut sign = 1;
        let mut factors = Vec::new();
        for &(a, e) in diffs {
            match e {
                Endpoint::Var(b) => {
                    let (f, s) = LinearFactor::diag(a, b);
                    sign *= s;
                    factors.push((f, 1));
                }
                Endpoint::Point(j) => factors.push((LinearFactor::Point(a, j), 1)),
            }
        }
        let num = SparsePoly::constant(nvars, coefficient * sign_q(sign));
        RationalForm::new(nvars, active, points, num, factors)
    }

    pub fn zero(nvars: usize, active: Vec<usize>, points: Vec<Q>) -> RationalForm {
        RationalForm::new(nvars, active, points, SparsePoly::zero(nvars), Vec::new())
    }

    pub fn zero_like(&self) -> RationalForm {
        RationalForm::zero(self.nvars, self.active.clone(), self.points.clone())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<LinearFactor, u32> {
        &self.denominator
    }

    pub fn active(&self) -> &[usize] {
        &self.active
    }

    pub fn points(&self) -> &[Q] {
        &self.points
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The value of a 0-form with no poles.
    pub fn as_scalar(&self) -> Option<Q> {
        if self.active.is_empty() && self.denominator.is_empty() {
            self.numerator.as_constant()
        } else {
            None
        }
    }

    fn divide_once(&self, num: &SparsePoly, f: &LinearFactor) -> Option<SparsePoly> {
        match *f {
            LinearFactor::Diag(a, b) => num.div_linear(a, &SparsePoly::var(self.nvars, b)),
            LinearFactor::Point(a, j) => {
                num.div_linear(a, &SparsePoly::constant(self.nvars, self.points[j].clone()))
            }
        }
    }

    /// Cancels linear factors shared by numerator and denominator.
    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.denominator.clear();
            return;
        }
        let keys: Vec<LinearFactor> = self.denominator.keys().copied().collect();
        for f in keys {
            while self.denominator[&f] > 0 {
                match self.divide_once(&self.numerator, &f) {
                    Some(q) => {
                        self.numerator = q;
                        *self.denominator.get_mut(&f).unwrap() -= 1;
                    }
                    None => break,
                }
            }
        }
        self.denominator.retain(|_, m| *m > 0);
    }

    pub fn pole_order(&self, f: &LinearFactor) -> u32 {
        self.denominator.get(f).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: &Q) -> RationalForm {
        let mut out = self.clone();
        out.numerator = self.numerator.scale(c);
        if out.numerator.is_zero() {
            out.denominator.clear();
        }
        out
    }

    pub fn mul_poly(&self, p: &SparsePoly) -> RationalForm {
        RationalForm::new(
            self.nvars,
            self.active.clone(),
            self.points.clone(),
            &self.numerator * p,
            self.denominator.clone(),
        )
    }

    fn compatible(&self, other: &RationalForm) -> bool {
        self.nvars == other.nvars && self.active == other.active && self.points == other.points
    }

    fn lift(&self, target: &BTreeMap<LinearFactor, u32>) -> SparsePoly {
        let mut num = self.numerator.clone();
        for (f, &m) in target {
            let have = self.pole_order(f);
            if m > have {
                let p = f.to_poly(self.nvars, &self.points);
                for _ in have..m {
                    num = &num * &p;
                }
            }
        }
        num
    }

    pub fn add(&self, other: &RationalForm) -> Result<RationalForm> {
        if !self.compatible(other) {
            return Err(Error::IncompatibleForms);
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut lcm = self.denominator.clone();
        for (f, &m) in &other.denominator {
            let e = lcm.entry(*f).or_insert(0);
            *e = (*e).max(m);
        }
        let num = &self.lift(&lcm) + &other.lift(&lcm);
        Ok(RationalForm::new(self.nvars, self.active.clone(), self.points.clone(), num, lcm))
    }

    pub fn sub(&self, other: &RationalForm) -> Result<RationalForm> {
        self.add(&other.scale(&-Q::one()))
    }

    /// Exact equality as meromorphic forms.
    pub fn equals(&self, other: &RationalForm) -> Result<bool> {
        Ok(self.sub(other)?.is_zero())
    }

    /// Sum of forms sharing variables and points.
    pub fn sum<'a>(forms: impl IntoIterator<Item = &'a RationalForm>, like: &RationalForm) -> Result<RationalForm> {
        let mut acc = like.zero_like();
        for f in forms {
            acc = acc.add(f)?;
        }
        Ok(acc)
    }

    /// `Σ c_i ω_i` over a common denominator, reduced once.
    pub fn linear_combination(like: &RationalForm, terms: &[(Q, &RationalForm)]) -> Result<RationalForm> {
        let mut lcm: BTreeMap<LinearFactor, u32> = BTreeMap::new();
        for (c, f) in terms {
            if !like.compatible(f) {
                return Err(Error::IncompatibleForms);
            }
            if c.is_zero() || f.is_zero() {
                continue;
            }
            for (g, &m) in &f.denominator {
                let e = lcm.entry(*g).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let mut num = SparsePoly::zero(like.nvars);
        for (c, f) in terms {
            if c.is_zero() || f.is_zero() {
                continue;
            }
            num = &num + &f.lift(&lcm).scale(c);
        }
        Ok(RationalForm::new(like.nvars, like.active.clone(), like.points.clone(), num, lcm))
    }

    fn count_after(&self, a: usize) -> usize {
        self.active.iter().filter(|&&x| x > a).count()
    }

    fn substituted(
        &self,
        removed: usize,
        numerator: SparsePoly,
        map: impl Fn(LinearFactor) -> Mapped,
    ) -> RationalForm {
        let mut num = numerator;
        let mut factors = Vec::new();
        let mut constant = Q::one();
        for (&f, &m) in &self.denominator {
            match map(f) {
                Mapped::Factor(g, s) => {
                    if s < 0 && m % 2 == 1 {
                        constant = -constant;
                    }
                    factors.push((g, m));
                }
                Mapped::Constant(c) => {
                    for _ in 0..m {
                        constant *= &c;
                    }
                }
            }
        }
        num = num.scale(&constant.recip());
        let active = self.active.iter().copied().filter(|&x| x != removed).collect();
        RationalForm::new(self.nvars, active, self.points.clone(), num, factors)
    }

    fn require_active(&self, a: usize) -> Result<()> {
        if self.active.contains(&a) {
            Ok(())
        } else {
            Err(Error::InvalidDivisor(format!("t{} is not an active variable", a + 1)))
        }
    }

    /// Poincaré residue along `t_a = t_b` (`b < a`), eliminating `t_a`.
    ///
    /// `dt_a` is moved to the back of the wedge and extracted against
    /// `d(t_a - t_b)/(t_a - t_b)`.
    pub fn residue_diagonal(&self, a: usize, b: usize) -> Result<RationalForm> {
        if a == b {
            return Err(Error::InvalidDivisor(format!("t{} = t{}", a + 1, b + 1)));
        }
        if b > a {
            return Err(Error::InvalidDivisor(format!(
                "residue along t{} = t{} must eliminate the larger index",
                a + 1,
                b + 1
            )));
        }
        self.require_active(a)?;
        self.require_active(b)?;
        let f = LinearFactor::Diag(b, a);
        let order = self.pole_order(&f);
        let rest_active: Vec<usize> = self.active.iter().copied().filter(|&x| x != a).collect();
        if order == 0 {
            return Ok(RationalForm::zero(self.nvars, rest_active, self.points.clone()));
        }
        if order > 1 {
            return Err(Error::HigherOrderPole { divisor: f.to_string(), order });
        }
        // Ω = (-1)^{after(a)} g · dt_rest ∧ d(t_a - t_b)/(t_a - t_b), g = -N/D'
        let sign = if self.count_after(a).is_multiple_of(2) { -Q::one() } else { Q::one() };
        let mut without = self.clone();
        without.denominator.remove(&f);
        let num = without.numerator.subst_var(a, b).scale(&sign);
        Ok(without.substituted(a, num, |g| match g {
            LinearFactor::Diag(x, y) => {
                let x2 = if x == a { b } else { x };
                let y2 = if y == a { b } else { y };
                let (h, s) = LinearFactor::diag(x2, y2);
                Mapped::Factor(h, s)
            }
            LinearFactor::Point(x, j) => Mapped::Factor(LinearFactor::Point(if x == a { b } else { x }, j), 1),
        }))
    }

    /// Poincaré residue along `t_a = z_j`.
    pub fn residue_at_point(&self, a: usize, j: usize) -> Result<RationalForm> {
        self.require_active(a)?;
        if j >= self.points.len() {
            return Err(Error::InvalidDivisor(format!("no point z{}", j + 1)));
        }
        let f = LinearFactor::Point(a, j);
        let order = self.pole_order(&f);
        let rest_active: Vec<usize> = self.active.iter().copied().filter(|&x| x != a).collect();
        if order == 0 {
            return Ok(RationalForm::zero(self.nvars, rest_active, self.points.clone()));
        }
        if order > 1 {
            return Err(Error::HigherOrderPole { divisor: f.to_string(), order });
        }
        let sign = if self.count_after(a).is_multiple_of(2) { Q::one() } else { -Q::one() };
        let mut without = self.clone();
        without.denominator.remove(&f);
        let zj = self.points[j].clone();
        for g in without.denominator.keys() {
            if let LinearFactor::Point(x, k) = *g {
                if x == a && self.points[k] == zj {
                    return Err(Error::InvalidDivisor("coincident points".into()));
                }
            }
        }
        let num = without.numerator.subst_const(a, &zj).scale(&sign);
        let points = self.points.clone();
        Ok(without.substituted(a, num, |g| match g {
            LinearFactor::Diag(x, y) if x == a => Mapped::Factor(LinearFactor::Point(y, j), -1),
            LinearFactor::Diag(x, y) if y == a => Mapped::Factor(LinearFactor::Point(x, j), 1),
            LinearFactor::Point(x, k) if x == a => Mapped::Constant(&points[j] - &points[k]),
            other => Mapped::Factor(other, 1),
        }))
    }

    /// Residues along `t_a = t_m` for `a ∈ J \ {m}` in order, `m = min J`.
    pub fn iterated_residue(&self, j: &[usize]) -> Result<RationalForm> {
        let Some(&m) = j.iter().min() else {
            return Ok(self.clone());
        };
        let mut out = self.clone();
        for &a in j {
            if a != m {
                out = out.residue_diagonal(a, m)?;
            }
        }
        Ok(out)
    }

    /// Pullback under the relabeling `t_i ↦ t_{perm[i]}`, which must
    /// preserve the set of active variables.
    pub fn pullback(&self, perm: &[usize]) -> Result<RationalForm> {
        let mut image: Vec<usize> = self.active.iter().map(|&a| perm[a]).collect();
        let mut sorted = image.clone();
        sorted.sort();
        if sorted != self.active {
            return Err(Error::Precondition("relabeling must preserve the active variables".into()));
        }
        let mut sign = 1;
        for i in 0..image.len() {
            for k in i + 1..image.len() {
                if image[i] > image[k] {
                    sign = -sign;
                }
            }
        }
        image.sort();
        let mut num = self.numerator.rename(perm);
        let mut factors = Vec::new();
        for (&f, &m) in &self.denominator {
            match f {
                LinearFactor::Diag(a, b) => {
                    let (g, s) = LinearFactor::diag(perm[a], perm[b]);
                    if s < 0 && m % 2 == 1 {
                        sign = -sign;
                    }
                    factors.push((g, m));
                }
                LinearFactor::Point(a, j) => factors.push((LinearFactor::Point(perm[a], j), m)),
            }
        }
        num = num.scale(&sign_q(sign));
        Ok(RationalForm::new(self.nvars, self.active.clone(), self.points.clone(), num, factors))
    }

    /// Coefficient function evaluated at a point off the poles.
    pub fn evaluate(&self, t: &[Q]) -> Option<Q> {
        let mut den = Q::one();
        for (f, &m) in &self.denominator {
            let v = f.to_poly(self.nvars, &self.points).eval(t);
            for _ in 0..m {
                den *= &v;
            }
        }
        if den.is_zero() {
            None
        } else {
            Some(self.numerator.eval(t) / den)
        }
    }
}

/// Right-hand side of a difference `t_a - (·)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Var(usize),
    Point(usize),
}

impl fmt::Display for RationalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den: Vec<String> = self
            .denominator
            .iter()
            .map(|(g, &m)| if m == 1 { g.to_string() } else { format!("{g}^{m}") })
            .collect();
        let wedge: Vec<String> = self.active.iter().map(|a| format!("dt{}", a + 1)).collect();
        write!(f, "[{}]", self.numerator)?;
        if !den.is_empty() {
            write!(f, " / {}", den.join(""))?;
        }
        if !wedge.is_empty() {
            write!(f, " {}", wedge.join("^"))?;
        }
        Ok(())
    }
}

/// Serializable view of a form.
#[derive(Clone, Debug, Serialize)]
pub struct FormView {
    pub active: Vec<usize>,
    pub numerator: Vec<(Vec<u32>, String)>,
    pub denominator: Vec<(String, u32)>,
    pub text: String,
}

impl From<&RationalForm> for FormView {
    fn from(f: &RationalForm) -> Self {
        FormView {
            active: f.active.iter().map(|a| a + 1).collect(),
            numerator: f.numerator.terms().iter().map(|(e, c)| (e.clone(), fmt_q(c))).collect(),
            denominator: f.denominator.iter().map(|(g, &m)| (g.to_string(), m)).collect(),
            text: f.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn simple_diagonal_residue() {
        // dt1∧dt2/(t2 - t1) → dt1
        let w = RationalForm::from_differences(2, vec![0, 1], vec![q(0)], q(1), &[(1, Endpoint::Var(0))]);
        let r = w.residue_diagonal(1, 0).unwrap();
        assert_eq!(r.active(), &[0]);
        assert_eq!(r.numerator(), &SparsePoly::one(2));
        assert!(r.denominator().is_empty());
    }

    #[test]
    fn chain_residue_sign() {
        // dt1∧dt2/((t1 - t2)(t2 - z1)) → -dt1/(t1 - z1)
        let w = RationalForm::from_differences(
            2,
            vec![0, 1],
            vec![q(5)],
            q(1),
            &[(0, Endpoint::Var(1)), (1, Endpoint::Point(0))],
        );
        let r = w.residue_diagonal(1, 0).unwrap();
        let expect = RationalForm::from_differences(2, vec![0], vec![q(5)], q(-1), &[(0, Endpoint::Point(0))]);
        assert!(r.equals(&expect).unwrap());
    }

    #[test]
    fn point_residue_to_scalar() {
        let w = RationalForm::from_differences(1, vec![0], vec![q(3)], q(1), &[(0, Endpoint::Point(0))]);
        assert_eq!(w.residue_at_point(0, 0).unwrap().as_scalar(), Some(q(1)));
        let reg = RationalForm::new(1, vec![0], vec![q(3)], SparsePoly::one(1), Vec::new());
        assert!(reg.residue_at_point(0, 0).unwrap().is_zero());
    }

    #[test]
    fn double_pole_is_error() {
        let w = RationalForm::new(2, vec![0, 1], vec![], SparsePoly::one(2), vec![(LinearFactor::Diag(0, 1), 2)]);
        assert_eq!(w.pole_order(&LinearFactor::Diag(0, 1)), 2);
        assert!(matches!(w.residue_diagonal(1, 0), Err(Error::HigherOrderPole { .. })));
    }

    #[test]
    fn reduction_cancels() {
        let n = 2;
        let num = SparsePoly::diff(n, 0, 1);
        let w = RationalForm::new(n, vec![0, 1], vec![], num, vec![(LinearFactor::Diag(0, 1), 1)]);
        assert!(w.denominator().is_empty());
        assert_eq!(w.numerator(), &SparsePoly::one(n));
    }

    #[test]
    fn addition_common_denominator() {
        let z = vec![q(0), q(1)];
        let a = RationalForm::from_differences(1, vec![0], z.clone(), q(1), &[(0, Endpoint::Point(0))]);
        let b = RationalForm::from_differences(1, vec![0], z.clone(), q(-1), &[(0, Endpoint::Point(1))]);
        let s = a.add(&b).unwrap();
        // 1/t - 1/(t-1) = -1/(t(t-1))
        let expect = RationalForm::from_differences(
            1,
            vec![0],
            z,
            q(-1),
            &[(0, Endpoint::Point(0)), (0, Endpoint::Point(1))],
        );
        assert!(s.equals(&expect).unwrap());
    }
}
