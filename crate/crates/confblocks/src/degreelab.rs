//! Exact lower bounds on the degree of symmetric polynomials vanishing on
//! partial diagonals.

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, Echelon, Q};
use crate::ratfun::SparsePoly;
use num::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

pub const DEFAULT_MONOMIAL_CEILING: u128 = 200_000;

/// Variables, symmetry blocks, vanishing diagonals and the claimed degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProblem {
    pub name: String,
    pub variables: Vec<String>,
    pub blocks: Vec<Vec<usize>>,
    pub diagonals: Vec<Vec<usize>>,
    pub bound: u32,
}

impl DegreeProblem {
    pub fn from_names(
        name: &str,
        variables: &[&str],
        blocks: &[&[&str]],
        diagonals: &[Vec<&str>],
        bound: u32,
    ) -> Result<Self> {
        let index: BTreeMap<&str, usize> = variables.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        if index.len() != variables.len() {
            return Err(Error::Precondition(format!("{name}: repeated variable")));
        }
        let look = |v: &&str| {
            index.get(v).copied().ok_or_else(|| Error::Precondition(format!("{name}: unknown variable {v}")))
        };
        let blocks: Vec<Vec<usize>> =
            blocks.iter().map(|b| b.iter().map(look).collect()).collect::<Result<_>>()?;
        let diagonals: Vec<Vec<usize>> =
            diagonals.iter().map(|d| d.iter().map(look).collect()).collect::<Result<_>>()?;
        let p = DegreeProblem {
            name: name.to_string(),
            variables: variables.iter().map(|s| s.to_string()).collect(),
            blocks,
            diagonals,
            bound,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.variables.len();
        let mut seen = BTreeSet::new();
        for b in &self.blocks {
            for &v in b {
                if v >= n || !seen.insert(v) {
                    return Err(Error::Precondition(format!("{}: symmetry blocks overlap", self.name)));
                }
            }
        }
        for d in &self.diagonals {
            let set: BTreeSet<usize> = d.iter().copied().collect();
            if set.len() < 2 || set.len() != d.len() || d.iter().any(|&v| v >= n) {
                return Err(Error::Precondition(format!("{}: malformed diagonal", self.name)));
            }
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    /// Exponent vector with each block sorted non-increasingly.
    fn canonical(&self, e: &[u32]) -> Vec<u32> {
        let mut c = e.to_vec();
        for b in &self.blocks {
            let mut vals: Vec<u32> = b.iter().map(|&i| e[i]).collect();
            vals.sort_unstable_by(|x, y| y.cmp(x));
            let mut pos = b.clone();
            pos.sort_unstable();
            for (i, v) in pos.into_iter().zip(vals) {
                c[i] = v;
            }
        }
        c
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of monomials of total degree `≤ d` in `n` variables.
pub fn monomial_count(n: usize, d: u32) -> u128 {
    binomial(n as u128 + d as u128, n as u128)
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Outcome of a degree certification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// No nonzero solution of degree `≤ through`.
    Empty { through: u32 },
    /// A nonzero homogeneous solution of the given degree.
    Witness { degree: u32, poly: SparsePoly },
}

impl Verdict {
    pub fn is_empty(&self) -> bool {
        matches!(self, Verdict::Empty { .. })
    }
}

/// Solutions of degree exactly `d`, as a basis of polynomials.
pub fn homogeneous_solutions(p: &DegreeProblem, d: u32) -> Vec<SparsePoly> {
    let n = p.nvars();
    let monos = monomials_of_degree(n, d);
    let mut orbit: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut col_of = Vec::with_capacity(monos.len());
    for m in &monos {
        let c = p.canonical(m);
        let next = orbit.len();
        col_of.push(*orbit.entry(c).or_insert(next));
    }
    let ncols = orbit.len();
    let mut rows: BTreeMap<(usize, Vec<u32>), BTreeMap<usize, i64>> = BTreeMap::new();
    for (di, diag) in p.diagonals.iter().enumerate() {
        let rep = *diag.iter().min().unwrap();
        for (m, &col) in monos.iter().zip(&col_of) {
            let mut s = m.clone();
            for &v in diag {
                if v != rep {
                    s[rep] += s[v];
                    s[v] = 0;
                }
            }
            *rows.entry((di, s)).or_default().entry(col).or_insert(0) += 1;
        }
    }
    let mut ech = Echelon::new(ncols);
    for row in rows.values() {
        if ech.is_full() {
            break;
        }
        let mut dense = vec![Q::zero(); ncols];
        for (&c, &x) in row {
            dense[c] = Q::from_integer(x.into());
        }
        ech.insert(&dense);
    }
    ech.nullspace()
        .into_iter()
        .map(|v| {
            let mut poly = SparsePoly::zero(n);
            for (m, &col) in monos.iter().zip(&col_of) {
                if !v[col].is_zero() {
                    poly.add_term(m.clone(), v[col].clone());
                }
            }
            poly
        })
        .collect()
}

/// Certifies that no nonzero solution has degree `< bound`.
pub fn min_degree_certify(p: &DegreeProblem, ceiling: u128) -> Result<Verdict> {
    certify_through(p, p.bound.saturating_sub(1), ceiling)
}

/// Certifies emptiness for all degrees `≤ through`, or returns a witness.
pub fn certify_through(p: &DegreeProblem, through: u32, ceiling: u128) -> Result<Verdict> {
    p.validate()?;
    let count = monomial_count(p.nvars(), through);
    if count > ceiling {
        return Err(Error::CeilingExceeded { count, ceiling });
    }
    for d in 0..=through {
        if let Some(poly) = homogeneous_solutions(p, d).into_iter().next() {
            return Ok(Verdict::Witness { degree: d, poly });
        }
    }
    Ok(Verdict::Empty { through })
}

/// Checks that `poly` is symmetric in its blocks and vanishes on every diagonal.
pub fn satisfies(p: &DegreeProblem, poly: &SparsePoly) -> bool {
    let n = p.nvars();
    for b in &p.blocks {
        for w in b.windows(2) {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(w[0], w[1]);
            if poly.rename(&perm) != *poly {
                return false;
            }
        }
    }
    p.diagonals.iter().all(|d| {
        let rep = *d.iter().min().unwrap();
        d.iter().filter(|&&v| v != rep).fold(poly.clone(), |acc, &v| acc.subst_var(v, rep)).is_zero()
    })
}

/// `g = Σ_{i<j} (u_i - u_j)^2 A_ij` for `g` symmetric in `block` and vanishing on its diagonal.
pub fn bansun_decompose(g: &SparsePoly, block: &[usize]) -> Result<Vec<((usize, usize), SparsePoly)>> {
    let n = g.nvars();
    if block.len() < 2 || block.iter().any(|&v| v >= n) {
        return Err(Error::Precondition("block needs at least two variables".into()));
    }
    for w in block.windows(2) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(w[0], w[1]);
        if g.rename(&perm) != *g {
            return Err(Error::Precondition("polynomial is not symmetric in the block".into()));
        }
    }
    let rep = block[0];
    let on_diag = block[1..].iter().fold(g.clone(), |acc, &v| acc.subst_var(v, rep));
    if !on_diag.is_zero() {
        return Err(Error::Precondition("polynomial does not vanish on the diagonal".into()));
    }
    if g.is_zero() {
        return Ok(Vec::new());
    }
    let deg = g.total_degree().unwrap_or(0);
    if deg < 2 {
        return Err(Error::Precondition("nonzero solution of degree below 2".into()));
    }
    let pairs: Vec<(usize, usize)> =
        (0..block.len()).flat_map(|i| (i + 1..block.len()).map(move |j| (block[i], block[j]))).collect();
    let a_monos: Vec<Vec<u32>> = (0..=deg - 2).flat_map(|d| monomials_of_degree(n, d)).collect();
    let squares: Vec<SparsePoly> = pairs.iter().map(|&(i, j)| SparsePoly::diff(n, i, j).pow(2)).collect();
    let nunk = pairs.len() * a_monos.len();
    // column k: (pair, monomial); last column: -g
    let mut eqs: BTreeMap<Vec<u32>, BTreeMap<usize, Q>> = BTreeMap::new();
    for (pi, sq) in squares.iter().enumerate() {
        for (mi, m) in a_monos.iter().enumerate() {
            let col = pi * a_monos.len() + mi;
            for (e, c) in sq.terms() {
                let prod: Vec<u32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
                *eqs.entry(prod).or_default().entry(col).or_insert_with(Q::zero) += c;
            }
        }
    }
    for (e, c) in g.terms() {
        *eqs.entry(e.clone()).or_default().entry(nunk).or_insert_with(Q::zero) -= c;
    }
    let mut ech = Echelon::new(nunk + 1);
    for row in eqs.values() {
        let mut dense = vec![Q::zero(); nunk + 1];
        for (&c, x) in row {
            dense[c] = x.clone();
        }
        ech.insert(&dense);
    }
    let sol = ech
        .nullspace()
        .into_iter()
        .find(|v| !v[nunk].is_zero())
        .ok_or_else(|| Error::Precondition("no decomposition exists".into()))?;
    let scale = sol[nunk].recip();
    let mut out = Vec::new();
    let mut rebuilt = SparsePoly::zero(n);
    for (pi, &pair) in pairs.iter().enumerate() {
        let mut a = SparsePoly::zero(n);
        for (mi, m) in a_monos.iter().enumerate() {
            a.add_term(m.clone(), &sol[pi * a_monos.len() + mi] * &scale);
        }
        if !a.is_zero() {
            rebuilt = &rebuilt + &(&squares[pi] * &a);
            out.push((pair, a));
        }
    }
    if rebuilt != *g {
        return Err(Error::Precondition("decomposition failed to reconstruct".into()));
    }
    Ok(out)
}

/// A renaming of variables carrying one problem's blocks and diagonals onto the other's.
pub fn equivalent_up_to_renaming(a: &DegreeProblem, b: &DegreeProblem) -> Option<Vec<usize>> {
    let n = a.nvars();
    if n != b.nvars() || a.diagonals.len() != b.diagonals.len() {
        return None;
    }
    let sets = |x: &[Vec<usize>], min: usize| -> BTreeSet<BTreeSet<usize>> {
        x.iter().filter(|s| s.len() >= min).map(|s| s.iter().copied().collect()).collect()
    };
    let b_blocks = sets(&b.blocks, 2);
    let b_diags = sets(&b.diagonals, 2);
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn search(
        i: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        check: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if i == perm.len() {
            return check(perm);
        }
        for v in 0..perm.len() {
            if !used[v] {
                used[v] = true;
                perm[i] = v;
                if search(i + 1, perm, used, check) {
                    return true;
                }
                used[v] = false;
            }
        }
        false
    }
    let check = |p: &[usize]| {
        let map = |x: &[Vec<usize>]| -> Vec<Vec<usize>> {
            x.iter().map(|s| s.iter().map(|&v| p[v]).collect()).collect()
        };
        sets(&map(&a.blocks), 2) == b_blocks && sets(&map(&a.diagonals), 2) == b_diags
    };
    search(0, &mut perm, &mut used, &check).then_some(perm)
}

fn neighbours(a: usize, vars: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for b in [a.wrapping_sub(1), a + 1] {
        for p in ["t", "u"] {
            let name = format!("{p}{b}");
            if vars.contains(&name.as_str()) {
                out.push(name);
            }
        }
    }
    out
}

fn build(name: &str, vars: Vec<String>, blocks: Vec<Vec<String>>, diags: Vec<Vec<String>>, bound: u32) -> DegreeProblem {
    let v: Vec<&str> = vars.iter().map(String::as_str).collect();
    let b: Vec<Vec<&str>> = blocks.iter().map(|x| x.iter().map(String::as_str).collect()).collect();
    let b_refs: Vec<&[&str]> = b.iter().map(Vec::as_slice).collect();
    let d: Vec<Vec<&str>> = diags.iter().map(|x| x.iter().map(String::as_str).collect()).collect();
    DegreeProblem::from_names(name, &v, &b_refs, &d, bound).expect("suite problem is well formed")
}

fn s(x: &str) -> String {
    x.to_string()
}

fn strs(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

/// Pair diagonals `t_a = u_a = x` for the listed `a` and neighbouring `x`.
fn pair_diagonals(range: impl Iterator<Item = usize>, vars: &[String]) -> Vec<Vec<String>> {
    let v: Vec<&str> = vars.iter().map(String::as_str).collect();
    range
        .flat_map(|a| neighbours(a, &v).into_iter().map(move |x| vec![format!("t{a}"), format!("u{a}"), x]))
        .collect()
}

pub fn bansun_problem(n: usize) -> DegreeProblem {
    let vars: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    build(&format!("bansun n={n}"), vars.clone(), vec![vars.clone()], vec![vars], 2)
}

pub fn mindeg1() -> DegreeProblem {
    let mut diags = Vec::new();
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        for k in 1..=3 {
            diags.push(vec![format!("u{i}"), format!("u{j}"), format!("t{k}")]);
        }
    }
    build("mindeg1", strs(&["u1", "u2", "u3", "t1", "t2", "t3"]), vec![strs(&["u1", "u2", "u3"])], diags, 5)
}

pub fn mindeg2() -> DegreeProblem {
    let mut diags: Vec<Vec<String>> = (1..=4).map(|k| vec![s("u1"), s("u2"), format!("t{k}")]).collect();
    for i in 1..=2 {
        diags.push(vec![s("t1"), s("t2"), s("t3"), s("t4"), format!("u{i}")]);
    }
    build(
        "mindeg2",
        strs(&["u1", "u2", "t1", "t2", "t3", "t4"]),
        vec![strs(&["u1", "u2"]), strs(&["t1", "t2", "t3", "t4"])],
        diags,
        4,
    )
}

pub fn mindeg3() -> DegreeProblem {
    let mut diags = Vec::new();
    for i in 1..=2 {
        diags.push(vec![s("u1"), s("u2"), format!("v{i}")]);
        diags.push(vec![s("v1"), s("v2"), format!("t{i}")]);
        diags.push(vec![s("v1"), s("v2"), format!("u{i}")]);
    }
    build(
        "mindeg3",
        strs(&["u1", "u2", "v1", "v2", "t1", "t2"]),
        vec![strs(&["u1", "u2"]), strs(&["v1", "v2"])],
        diags,
        4,
    )
}

pub fn deg3() -> DegreeProblem {
    let mut diags: Vec<Vec<String>> =
        [(1, 2), (1, 3), (2, 3)].iter().map(|(i, j)| vec![format!("u{i}"), format!("u{j}"), s("t1")]).collect();
    diags.push(strs(&["u1", "u2", "u3", "v1"]));
    build("deg3", strs(&["t1", "u1", "u2", "u3", "v1"]), vec![strs(&["u1", "u2", "u3"])], diags, 3)
}

pub fn deg3_prime() -> DegreeProblem {
    let diags = vec![strs(&["u1", "u2", "t1"]), strs(&["v1", "v2", "u1"]), strs(&["v1", "v2", "u2"])];
    build(
        "deg3'",
        strs(&["t1", "u1", "u2", "v1", "v2"]),
        vec![strs(&["u1", "u2"]), strs(&["v1", "v2"])],
        diags,
        3,
    )
}

pub fn mindeg_k1(m: usize) -> DegreeProblem {
    let vars: Vec<String> = (1..=m + 2).flat_map(|a| [format!("t{a}"), format!("u{a}")]).collect();
    let blocks = (1..m + 2).map(|a| vec![format!("t{a}"), format!("u{a}")]).collect();
    let diags = pair_diagonals(1..m + 2, &vars);
    build(&format!("mindegk+1 m={m}"), vars, blocks, diags, 2 * m as u32 + 2)
}

/// Diagonals `x = v = y` for `x` in `pair` and `y` in `others`.
fn v_diagonals(pair: [&str; 2], v: &str, others: &[String]) -> Vec<Vec<String>> {
    pair.iter().flat_map(|x| others.iter().map(move |y| vec![s(x), s(v), y.clone()])).collect()
}

pub fn mindeg_k3(m: usize) -> DegreeProblem {
    let mut vars = strs(&["t0", "t1", "u1", "v1"]);
    vars.extend((2..=m + 1).flat_map(|a| [format!("t{a}"), format!("u{a}")]));
    let mut blocks = vec![strs(&["t1", "u1", "v1"])];
    blocks.extend((2..m + 1).map(|a| vec![format!("t{a}"), format!("u{a}")]));
    let mut diags = pair_diagonals(1..m + 1, &vars);
    diags.push(strs(&["t2", "u2", "v1"]));
    diags.extend(v_diagonals(["t1", "u1"], "v1", &strs(&["t0", "t2", "u2"])));
    build(&format!("mindegk+3 m={m}"), vars, blocks, diags, 2 * m as u32 + 3)
}

pub fn mindeg_k4(m: usize) -> DegreeProblem {
    let mut vars = strs(&["t0", "t1", "u1", "t2", "u2", "v2"]);
    vars.extend((3..=m.max(2) + 1).flat_map(|a| [format!("t{a}"), format!("u{a}")]));
    let mut blocks = vec![strs(&["t1", "u1"]), strs(&["t2", "u2", "v2"])];
    blocks.extend((3..m + 1).map(|a| vec![format!("t{a}"), format!("u{a}")]));
    let mut diags: Vec<Vec<String>> = pair_diagonals(1..m + 1, &vars).into_iter().filter(|d| d[0] != "t2").collect();
    diags.push(strs(&["t1", "u1", "v2"]));
    diags.push(strs(&["t3", "u3", "v2"]));
    diags.extend(v_diagonals(["t2", "u2"], "v2", &strs(&["t1", "t3", "u1", "u3"])));
    build(&format!("mindegk+4 m={m}"), vars, blocks, diags, 2 * m as u32 + 4)
}

pub fn mig3(m: usize) -> DegreeProblem {
    let mut vars = strs(&["t0", "t1", "u1", "v1"]);
    vars.extend((2..=m.max(1) + 1).flat_map(|a| [format!("t{a}"), format!("u{a}")]));
    let mut blocks = vec![strs(&["t1", "u1", "v1"])];
    blocks.extend((2..=m).map(|a| vec![format!("t{a}"), format!("u{a}")]));
    let mut diags = pair_diagonals(1..=m, &vars);
    diags.extend(v_diagonals(["t1", "u1"], "v1", &strs(&["t0", "t2", "u2"])));
    build(&format!("mig3 m={m}"), vars, blocks, diags, 2 * m as u32 + 2)
}

pub fn mig4(m: usize) -> DegreeProblem {
    let mut vars = strs(&["t0", "t1", "u1", "t2", "u2", "v2"]);
    vars.extend((3..=m).flat_map(|a| [format!("t{a}"), format!("u{a}")]));
    let mut blocks = vec![strs(&["t1", "u1"])];
    if m >= 2 {
        blocks.push(strs(&["t2", "u2", "v2"]));
    }
    blocks.extend((3..=m).map(|a| vec![format!("t{a}"), format!("u{a}")]));
    let mut diags = pair_diagonals(1..=m, &vars);
    diags.push(strs(&["t1", "u1", "v2"]));
    if m >= 3 {
        diags.push(strs(&["t3", "u3", "v2"]));
    }
    diags.extend(v_diagonals(["u1", "t1"], "v2", &strs(&["t0", "t2", "u2"])));
    build(&format!("mig4 m={m}"), vars, blocks, diags, 2 * m as u32 + 1)
}

/// The built-in catalog, in report order.
pub fn lemma_suite() -> Vec<DegreeProblem> {
    vec![
        bansun_problem(2),
        mindeg1(),
        mindeg2(),
        mindeg3(),
        deg3(),
        deg3_prime(),
        mindeg_k1(1),
        mindeg_k1(2),
        mindeg_k3(1),
        mindeg_k4(1),
        mig3(1),
        mig4(1),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteEntry {
    pub name: String,
    pub variables: usize,
    pub diagonals: usize,
    pub bound: u32,
    pub certified_through: Option<u32>,
    pub verdict: String,
    /// Dimension of the solution space in degree `bound` (informational).
    pub solutions_at_bound: Option<usize>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
    /// Renaming carrying mindeg3 onto mindegk+1 with m = 1, if one exists.
    pub mindeg3_matches_k1: bool,
    pub bansun_example_ok: bool,
    pub all_empty: bool,
}

pub fn run_problem(p: &DegreeProblem, ceiling: u128) -> SuiteEntry {
    let verdict = min_degree_certify(p, ceiling);
    let at_bound = if monomial_count(p.nvars(), p.bound) <= ceiling {
        Some(homogeneous_solutions(p, p.bound).len())
    } else {
        None
    };
    let (through, text, witness) = match verdict {
        Ok(Verdict::Empty { through }) => (Some(through), "EMPTY".to_string(), None),
        Ok(Verdict::Witness { degree, poly }) => {
            (None, format!("WITNESS at degree {degree}"), Some(poly_with_names(&poly, &p.variables)))
        }
        Err(e) => (None, e.to_string(), None),
    };
    SuiteEntry {
        name: p.name.clone(),
        variables: p.nvars(),
        diagonals: p.diagonals.len(),
        bound: p.bound,
        certified_through: through,
        verdict: text,
        solutions_at_bound: at_bound,
        witness,
    }
}

fn bansun_example() -> bool {
    // Σ_{i<j} (u_i - u_j)^2 (u_1 + u_2 + u_3) is symmetric and vanishes on the diagonal
    let n = 3;
    let e1 = &(&SparsePoly::var(n, 0) + &SparsePoly::var(n, 1)) + &SparsePoly::var(n, 2);
    let mut g = SparsePoly::zero(n);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        g = &g + &(&SparsePoly::diff(n, i, j).pow(2) * &e1);
    }
    bansun_decompose(&g, &[0, 1, 2]).is_ok()
}

pub fn run_lemma_suite(ceiling: u128) -> SuiteReport {
    let entries: Vec<SuiteEntry> = lemma_suite().iter().map(|p| run_problem(p, ceiling)).collect();
    let all_empty = entries.iter().all(|e| e.certified_through.is_some());
    SuiteReport {
        entries,
        mindeg3_matches_k1: equivalent_up_to_renaming(&mindeg3(), &mindeg_k1(1)).is_some(),
        bansun_example_ok: bansun_example(),
        all_empty,
    }
}

pub fn poly_with_names(p: &SparsePoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .iter()
        .map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{}", names[i], k) })
                .collect();
            if mono.is_empty() {
                fmt_q(c)
            } else if c.is_one() {
                mono.join("*")
            } else {
                format!("{}*{}", fmt_q(c), mono.join("*"))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bansun_small() {
        let p = bansun_problem(2);
        assert_eq!(min_degree_certify(&p, DEFAULT_MONOMIAL_CEILING).unwrap(), Verdict::Empty { through: 1 });
        let sols = homogeneous_solutions(&p, 2);
        assert_eq!(sols.len(), 1);
        assert!(satisfies(&p, &sols[0]));
        let g = SparsePoly::diff(2, 0, 1).pow(2);
        let dec = bansun_decompose(&g, &[0, 1]).unwrap();
        assert_eq!(dec, vec![((0, 1), SparsePoly::one(2))]);
        assert!(bansun_decompose(&SparsePoly::var(2, 0), &[0, 1]).is_err());
        assert!(bansun_decompose(&(&SparsePoly::var(2, 0) + &SparsePoly::var(2, 1)), &[0, 1]).is_err());
    }

    #[test]
    fn encodings() {
        assert_eq!(mindeg1().diagonals.len(), 9);
        assert_eq!(mindeg2().diagonals.len(), 6);
        assert_eq!(mindeg3().diagonals.len(), 6);
        assert_eq!(deg3().diagonals.len(), 4);
        assert_eq!(mindeg_k1(1).diagonals.len(), 6);
        assert!(equivalent_up_to_renaming(&mindeg3(), &mindeg_k1(1)).is_some());
        assert!(equivalent_up_to_renaming(&mindeg3(), &deg3_prime()).is_none());
    }

    #[test]
    fn ceiling() {
        let p = mindeg1();
        assert!(matches!(min_degree_certify(&p, 10), Err(Error::CeilingExceeded { .. })));
        assert_eq!(monomial_count(12, 20), binomial(32, 12));
    }

    #[test]
    fn small_lemmas() {
        for p in [deg3(), deg3_prime(), mig4(1)] {
            assert!(min_degree_certify(&p, DEFAULT_MONOMIAL_CEILING).unwrap().is_empty(), "{}", p.name);
        }
    }
}
