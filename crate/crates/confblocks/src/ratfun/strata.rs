use super::form::{LinearFactor, RationalForm};
use super::poly::SparsePoly;
use crate::error::{Error, Result};
use crate::linalg::Q;
use num::One;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// A boundary stratum of the configuration space.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Stratum {
    /// The variables `t_a`, `a ∈ A`, come together (`|A| ≥ 2`).
    Diagonal(Vec<usize>),
    /// The variables `t_a`, `a ∈ A`, tend to the point `z_j`.
    Point(Vec<usize>, usize),
    /// The variables `t_a`, `a ∈ A`, tend to infinity.
    Infinity(Vec<usize>),
}

impl Stratum {
    pub fn indices(&self) -> &[usize] {
        match self {
            Stratum::Diagonal(a) | Stratum::Point(a, _) | Stratum::Infinity(a) => a,
        }
    }

    pub fn size(&self) -> usize {
        self.indices().len()
    }

    /// Offset turning the degree of the coefficient into the logarithmic degree.
    pub fn log_adjust(&self) -> i64 {
        let l = self.size() as i64;
        match self {
            Stratum::Diagonal(_) => l - 1,
            Stratum::Point(..) => l,
            Stratum::Infinity(_) => -l,
        }
    }

    pub fn validate(&self, form: &RationalForm) -> Result<()> {
        let idx = self.indices();
        let min = if matches!(self, Stratum::Diagonal(_)) { 2 } else { 1 };
        if idx.len() < min {
            return Err(Error::InvalidDivisor(format!("stratum {self} is too small")));
        }
        for (i, a) in idx.iter().enumerate() {
            if idx[..i].contains(a) {
                return Err(Error::InvalidDivisor(format!("stratum {self} repeats an index")));
            }
            if !form.active().contains(a) {
                return Err(Error::InvalidDivisor(format!("t{} is not an active variable", a + 1)));
            }
        }
        if let Stratum::Point(_, j) = self {
            if *j >= form.points().len() {
                return Err(Error::InvalidDivisor(format!("no point z{}", j + 1)));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.indices().iter().map(|a| format!("t{}", a + 1)).collect();
        match self {
            Stratum::Diagonal(_) => write!(f, "S1{{{}}}", names.join(",")),
            Stratum::Point(_, j) => write!(f, "S2{{{}}}->z{}", names.join(","), j + 1),
            Stratum::Infinity(_) => write!(f, "Sinf{{{}}}", names.join(",")),
        }
    }
}

/// Leading behaviour of a form near a stratum.
///
/// Near `S1`/`S2` the coefficient is `h / (P · E)` to leading order, where
/// `h` is the lowest part of the shifted numerator (degree `d0` in the normal
/// variables `u_a`, which reuse the slots of `t_a`), `P` collects the
/// stratum-internal factors and `E` the restricted external ones. Near `S∞`,
/// `d0 = -deg_A N`, `h` is the top part of `N` and `P` lists the factors
/// involving `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowestTerm {
    pub d0: i64,
    pub h: SparsePoly,
    pub external: BTreeMap<LinearFactor, u32>,
    pub correction: BTreeMap<LinearFactor, u32>,
    pub degree: i64,
    pub base: Option<usize>,
}

fn mult_sum(m: &BTreeMap<LinearFactor, u32>) -> i64 {
    m.values().map(|&x| x as i64).sum()
}

fn push(map: &mut BTreeMap<LinearFactor, u32>, f: LinearFactor, m: u32) {
    *map.entry(f).or_insert(0) += m;
}

/// Lowest degree term with the initial variable `min A` for diagonal strata.
pub fn lowest_degree_term(form: &RationalForm, s: &Stratum) -> Result<Option<LowestTerm>> {
    let base = match s {
        Stratum::Diagonal(a) => a.iter().copied().min(),
        _ => None,
    };
    lowest_degree_term_with_base(form, s, base)
}

/// Lowest degree term; `base` selects the initial variable of a diagonal stratum.
pub fn lowest_degree_term_with_base(
    form: &RationalForm,
    s: &Stratum,
    base: Option<usize>,
) -> Result<Option<LowestTerm>> {
    s.validate(form)?;
    if form.is_zero() {
        return Ok(None);
    }
    let n = form.nvars();
    let a_set = s.indices();
    let inside = |v: usize| a_set.contains(&v);
    let mut external = BTreeMap::new();
    let mut correction = BTreeMap::new();
    let mut scale = Q::one();
    let out = match s {
        Stratum::Diagonal(_) => {
            let b = base.ok_or_else(|| Error::Precondition("diagonal stratum needs a base".into()))?;
            if !inside(b) {
                return Err(Error::Precondition("base must lie in the stratum".into()));
            }
            let normal: Vec<usize> = a_set.iter().copied().filter(|&a| a != b).collect();
            let mut num = form.numerator().clone();
            for &a in &normal {
                num = num.subst(a, &(&SparsePoly::var(n, b) + &SparsePoly::var(n, a)));
            }
            let d0 = num.min_degree_in(&normal).unwrap_or(0);
            let h = num.part_of_degree_in(&normal, d0);
            for (&f, &m) in form.denominator() {
                match f {
                    LinearFactor::Diag(x, y) if inside(x) && inside(y) => push(&mut correction, f, m),
                    LinearFactor::Diag(x, y) if inside(x) || inside(y) => {
                        let (g, sg) = if inside(x) { LinearFactor::diag(b, y) } else { LinearFactor::diag(x, b) };
                        if sg < 0 && m % 2 == 1 {
                            scale = -scale;
                        }
                        push(&mut external, g, m);
                    }
                    LinearFactor::Point(x, j) if inside(x) => push(&mut external, LinearFactor::Point(b, j), m),
                    _ => push(&mut external, f, m),
                }
            }
            let degree = d0 as i64 - mult_sum(&correction);
            LowestTerm { d0: d0 as i64, h: h.scale(&scale), external, correction, degree, base: Some(b) }
        }
        Stratum::Point(_, j) => {
            let zj = form.points()[*j].clone();
            let mut num = form.numerator().clone();
            for &a in a_set {
                num = num.subst(a, &SparsePoly::var_minus(n, a, &-zj.clone()));
            }
            let d0 = num.min_degree_in(a_set).unwrap_or(0);
            let h = num.part_of_degree_in(a_set, d0);
            for (&f, &m) in form.denominator() {
                match f {
                    LinearFactor::Diag(x, y) if inside(x) && inside(y) => push(&mut correction, f, m),
                    LinearFactor::Point(x, k) if inside(x) && k == *j => push(&mut correction, f, m),
                    LinearFactor::Point(x, k) if inside(x) => {
                        let c = &zj - &form.points()[k];
                        for _ in 0..m {
                            scale /= &c;
                        }
                    }
                    LinearFactor::Diag(x, y) if inside(x) || inside(y) => {
                        // z_j - t_y or t_x - z_j
                        let other = if inside(x) { y } else { x };
                        if inside(x) && m % 2 == 1 {
                            scale = -scale;
                        }
                        push(&mut external, LinearFactor::Point(other, *j), m);
                    }
                    _ => push(&mut external, f, m),
                }
            }
            let degree = d0 as i64 - mult_sum(&correction);
            LowestTerm { d0: d0 as i64, h: h.scale(&scale), external, correction, degree, base: None }
        }
        Stratum::Infinity(_) => {
            let top = form.numerator().max_degree_in(a_set).unwrap_or(0);
            let h = form.numerator().part_of_degree_in(a_set, top);
            for (&f, &m) in form.denominator() {
                if f.vars().iter().any(|&v| inside(v)) {
                    push(&mut correction, f, m);
                } else {
                    push(&mut external, f, m);
                }
            }
            let d0 = -(top as i64);
            let degree = d0 + mult_sum(&correction);
            LowestTerm { d0, h, external, correction, degree, base: None }
        }
    };
    Ok(Some(out))
}

/// Logarithmic degree `d^S(ω)`; `None` for the zero form.
pub fn log_degree(form: &RationalForm, s: &Stratum) -> Result<Option<i64>> {
    Ok(lowest_degree_term(form, s)?.map(|t| t.degree + s.log_adjust()))
}

/// A diagonal lowest term written in base-independent coordinates: the
/// stratum location occupies the extra slot `nvars` and each `u_a` is
/// replaced by `t_a - t_base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTerm {
    pub d0: i64,
    pub h: SparsePoly,
    pub external: BTreeMap<LinearFactor, u32>,
}

pub fn canonical_lowest_term(form: &RationalForm, s: &Stratum, base: usize) -> Result<Option<CanonicalTerm>> {
    let Stratum::Diagonal(a_set) = s else {
        return Err(Error::Precondition("canonical form is defined for diagonal strata".into()));
    };
    let Some(lt) = lowest_degree_term_with_base(form, s, Some(base))? else {
        return Ok(None);
    };
    let n = form.nvars();
    let mut perm: Vec<usize> = (0..=n).collect();
    perm[base] = n;
    perm[n] = base;
    let mut h = lt.h.widen(n + 1).rename(&perm);
    for &a in a_set {
        if a != base {
            h = h.subst(a, &SparsePoly::diff(n + 1, a, base));
        }
    }
    let mut external = BTreeMap::new();
    for (&f, &m) in &lt.external {
        let g = match f {
            LinearFactor::Diag(x, y) if x == base => {
                if m % 2 == 1 {
                    h = -&h;
                }
                LinearFactor::Diag(y, n)
            }
            LinearFactor::Diag(x, y) if y == base => LinearFactor::Diag(x, n),
            LinearFactor::Point(x, j) if x == base => LinearFactor::Point(n, j),
            other => other,
        };
        push(&mut external, g, m);
    }
    Ok(Some(CanonicalTerm { d0: lt.d0, h, external }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::ratfun::form::Endpoint;

    #[test]
    fn simple_pole_degree() {
        let w = RationalForm::from_differences(2, vec![0, 1], vec![], q(1), &[(0, Endpoint::Var(1))]);
        let lt = lowest_degree_term(&w, &Stratum::Diagonal(vec![0, 1])).unwrap().unwrap();
        assert_eq!(lt.d0, 0);
        assert_eq!(lt.degree, -1);
        assert_eq!(lt.correction.get(&LinearFactor::Diag(0, 1)), Some(&1));
        assert_eq!(log_degree(&w, &Stratum::Diagonal(vec![0, 1])).unwrap(), Some(0));
    }

    #[test]
    fn infinity_and_point() {
        let z = vec![q(2)];
        let w = RationalForm::from_differences(1, vec![0], z.clone(), q(1), &[(0, Endpoint::Point(0))]);
        assert_eq!(log_degree(&w, &Stratum::Point(vec![0], 0)).unwrap(), Some(0));
        assert_eq!(log_degree(&w, &Stratum::Infinity(vec![0])).unwrap(), Some(0));
        let dt = RationalForm::new(1, vec![0], z, SparsePoly::one(1), Vec::new());
        assert_eq!(log_degree(&dt, &Stratum::Infinity(vec![0])).unwrap(), Some(-1));
        assert_eq!(log_degree(&dt, &Stratum::Point(vec![0], 0)).unwrap(), Some(1));
    }

    #[test]
    fn base_independence() {
        let n = 3;
        let num = &(&SparsePoly::var(n, 0) * &SparsePoly::var(n, 1)) + &SparsePoly::var(n, 2);
        let w = RationalForm::new(
            n,
            vec![0, 1, 2],
            vec![q(1)],
            num,
            vec![(LinearFactor::Diag(0, 2), 1), (LinearFactor::Point(1, 0), 1), (LinearFactor::Diag(1, 2), 1)],
        );
        let s = Stratum::Diagonal(vec![0, 1]);
        let c0 = canonical_lowest_term(&w, &s, 0).unwrap().unwrap();
        let c1 = canonical_lowest_term(&w, &s, 1).unwrap().unwrap();
        assert_eq!(c0, c1);
    }

    #[test]
    fn invalid_strata() {
        let w = RationalForm::new(2, vec![0, 1], vec![], SparsePoly::one(2), Vec::new());
        assert!(lowest_degree_term(&w, &Stratum::Diagonal(vec![0])).is_err());
        assert!(lowest_degree_term(&w, &Stratum::Infinity(vec![3])).is_err());
        assert!(lowest_degree_term(&w, &Stratum::Point(vec![0], 0)).is_err());
    }
}
