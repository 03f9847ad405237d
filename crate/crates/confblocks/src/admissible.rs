//! Master-function exponents and square-integrability as jet vanishing
//! along boundary strata.
//!
//! Constraint rows come from exact expansions of `Ω_β(Ψ)` along random
//! rational curves `ε ↦ t(ε)` entering each stratum; every row is a
//! necessary condition, so the sampled nullspace contains the admissible
//! space. Certification recomputes the logarithmic degrees symbolically on
//! a basis of the sampled space, which closes the gap.

use crate::blocks::{self, BlockInstance};
use crate::rootsys::{self, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::linalg::{self, fmt_q, q, Echelon, Q};
use crate::logforms::{self, MarkedPartition};
use crate::ratfun::{log_degree, Endpoint, RationalForm, Stratum};
use crate::repspace::{self, FunctionalBasis, TensorFunctional, WeightSpace};
use num::integer::lcm;
use num::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// One problem instance with its coloring, `κ = k + g*` and evenness constant.
#[derive(Clone, Debug)]
pub struct MasterData {
    pub instance: BlockInstance,
    pub beta: Vec<usize>,
    pub kappa: Q,
    pub c: u64,
}

impl MasterData {
    pub fn new(instance: BlockInstance, beta: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = beta.iter().find(|&&b| b >= instance.rs.rank) {
            return Err(Error::BadIndex(bad));
        }
        let kappa = q((instance.k + instance.rs.dual_coxeter) as i64);
        let c = min_even_constant(&instance, &beta);
        Ok(MasterData { instance, beta, kappa, c })
    }

    /// Master data for the natural coloring, if `Σλ_i` is in the root lattice.
    pub fn natural(instance: BlockInstance) -> Result<Option<Self>> {
        match instance.natural_coloring() {
            Some(beta) => Ok(Some(MasterData::new(instance, beta)?)),
            None => Ok(None),
        }
    }

    pub fn m(&self) -> usize {
        self.beta.len()
    }

    fn root_pair(&self, a: usize, b: usize) -> Q {
        self.instance.rs.pair(self.beta[a], self.beta[b]).clone()
    }

    fn weight_root(&self, j: usize, a: usize) -> Q {
        self.instance.rs.weight_simple_pairing(&self.instance.weights[j], self.beta[a])
    }
}

/// Least `C` making all pairings of weights and colors integral and `C(α,α)` even.
pub fn min_even_constant(inst: &BlockInstance, beta: &[usize]) -> u64 {
    let rs = &inst.rs;
    let mut vals: Vec<Q> = Vec::new();
    for a in &inst.weights {
        for b in &inst.weights {
            vals.push(rs.weight_pairing(a, b));
        }
        for &i in beta {
            vals.push(rs.weight_simple_pairing(a, i));
        }
    }
    for &i in beta {
        for &j in beta {
            vals.push(rs.pair(i, j).clone());
        }
    }
    for i in 0..rs.rank {
        vals.push(rs.root_length(i) / q(2));
    }
    vals.iter().fold(1u64, |acc, v| lcm(acc, v.denom().to_u64().unwrap_or(1)))
}

/// Order of the master function along a stratum.
pub fn r_degree_on_stratum(md: &MasterData, s: &Stratum) -> Q {
    let a_set = s.indices();
    let mut internal = Q::zero();
    for (i, &a) in a_set.iter().enumerate() {
        for &b in &a_set[i + 1..] {
            internal += md.root_pair(a, b);
        }
    }
    match s {
        Stratum::Diagonal(_) => -internal / &md.kappa,
        Stratum::Point(_, j) => {
            let point: Q = a_set.iter().map(|&a| md.weight_root(*j, a)).sum();
            (point - internal) / &md.kappa
        }
        Stratum::Infinity(_) => {
            let rs = &md.instance.rs;
            let mut total = vec![Q::zero(); rs.rank];
            let mut squares = Q::zero();
            for &a in a_set {
                total[md.beta[a]] += Q::one();
                squares += rs.root_length(md.beta[a]);
            }
            let tt = rs.killing(&total, &total).unwrap();
            -(tt + squares) / (q(2) * &md.kappa)
        }
    }
}

/// Largest coefficient order `e` whose vanishing is forced: `e + adj + r ≤ 0`.
pub fn max_forced_order(md: &MasterData, s: &Stratum) -> i64 {
    let bound = q(-s.log_adjust()) - r_degree_on_stratum(md, s);
    bound.floor().to_integer().to_i64().unwrap()
}

/// Smallest coefficient order any basis form can have along the stratum.
pub fn min_possible_order(s: &Stratum) -> i64 {
    let l = s.size() as i64;
    match s {
        Stratum::Diagonal(_) => -(l - 1),
        Stratum::Point(..) => -l,
        Stratum::Infinity(_) => 0,
    }
}

fn subsets(items: &[usize], min: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << items.len()) {
        if (mask.count_ones() as usize) < min {
            continue;
        }
        out.push((0..items.len()).filter(|&i| mask >> i & 1 == 1).map(|i| items[i]).collect());
    }
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// All `S1`, `S2` and `S∞` strata for `m` variables and `n` points.
pub fn stratum_catalog(m: usize, n: usize) -> Vec<Stratum> {
    let vars: Vec<usize> = (0..m).collect();
    let mut out = Vec::new();
    for a in subsets(&vars, 1) {
        if a.len() >= 2 {
            out.push(Stratum::Diagonal(a.clone()));
        }
        for j in 0..n {
            out.push(Stratum::Point(a.clone(), j));
        }
        out.push(Stratum::Infinity(a));
    }
    out
}

#[derive(Clone, Debug)]
pub struct AdmissibleOptions {
    /// Largest `M` for which the stratum catalog is built.
    pub stratum_cap: usize,
    pub seed: u64,
    /// Consecutive samples without rank growth that end a stratum.
    pub stable_rounds: usize,
    pub max_samples: usize,
    /// Symbolic certification of the sampled basis up to this `M`.
    pub certify_max_m: usize,
}

impl Default for AdmissibleOptions {
    fn default() -> Self {
        AdmissibleOptions { stratum_cap: 6, seed: 0x5eed, stable_rounds: 3, max_samples: 64, certify_max_m: 4 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StratumReport {
    pub stratum: String,
    pub r_degree: String,
    pub max_forced_order: i64,
    pub constraints: usize,
    pub samples: usize,
}

#[derive(Clone, Debug)]
pub struct AdmissibleSpace {
    pub functionals: FunctionalBasis,
    pub strata: Vec<StratumReport>,
    /// `Some(true)` when every basis vector was checked symbolically.
    pub certified: Option<bool>,
}

impl AdmissibleSpace {
    pub fn dim(&self) -> usize {
        self.functionals.dim()
    }
}

#[derive(Clone, Copy)]
enum Val {
    Const,
    Lin,
    Inv,
}

/// Laurent data of a point along the curve: `(kind, c0, c1)`.
#[derive(Clone)]
struct Curve {
    vars: Vec<(Val, Q, Q)>,
    points: Vec<Q>,
}

impl Curve {
    /// `[c_{-1}, c_0, c_1]` of `t_a - (endpoint)`.
    fn diff(&self, a: usize, e: Endpoint) -> [Q; 3] {
        let coeffs = |v: &(Val, Q, Q)| -> [Q; 3] {
            match v.0 {
                Val::Const => [Q::zero(), v.1.clone(), Q::zero()],
                Val::Lin => [Q::zero(), v.1.clone(), v.2.clone()],
                Val::Inv => [v.1.clone(), Q::zero(), Q::zero()],
            }
        };
        let x = coeffs(&self.vars[a]);
        let y = match e {
            Endpoint::Var(b) => coeffs(&self.vars[b]),
            Endpoint::Point(j) => [Q::zero(), self.points[j].clone(), Q::zero()],
        };
        [&x[0] - &y[0], &x[1] - &y[1], &x[2] - &y[2]]
    }
}

fn distinct_ints(rng: &mut ChaCha8Rng, n: usize, avoid: &BTreeSet<Q>, nonzero: bool) -> Vec<Q> {
    let mut used = avoid.clone();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = q(rng.gen_range(-20_000i64..=20_000));
        if (nonzero && x.is_zero()) || used.contains(&x) {
            continue;
        }
        used.insert(x.clone());
        out.push(x);
    }
    out
}

/// A random curve entering the stratum with all leading coefficients nonzero.
fn draw_curve(rng: &mut ChaCha8Rng, m: usize, points: &[Q], s: &Stratum) -> Curve {
    let avoid: BTreeSet<Q> = points.iter().cloned().collect();
    let bases = distinct_ints(rng, m, &avoid, false);
    let dirs = distinct_ints(rng, m, &BTreeSet::new(), true);
    let a_set = s.indices();
    let base = a_set[0];
    let vars = (0..m)
        .map(|c| {
            if !a_set.contains(&c) {
                return (Val::Const, bases[c].clone(), Q::zero());
            }
            match s {
                Stratum::Diagonal(_) => {
                    let d = if c == base { Q::zero() } else { dirs[c].clone() };
                    (Val::Lin, bases[base].clone(), d)
                }
                Stratum::Point(_, j) => (Val::Lin, points[*j].clone(), dirs[c].clone()),
                Stratum::Infinity(_) => (Val::Inv, dirs[c].clone(), Q::zero()),
            }
        })
        .collect();
    Curve { vars, points: points.to_vec() }
}

fn mul_trunc(a: &[Q], b: &[Q]) -> Vec<Q> {
    let len = a.len();
    let mut out = vec![Q::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Order and truncated inverse series of one factor along the curve.
fn inverse_factor(c: [Q; 3], len: usize) -> (i64, Vec<Q>) {
    let p = c.iter().position(|x| !x.is_zero()).expect("factor vanishes identically");
    let lead = c[p].clone();
    let next = if p + 1 < 3 { c[p + 1].clone() } else { Q::zero() };
    debug_assert!(p + 2 >= 3 || c[p + 2].is_zero());
    let r = -(next / &lead);
    let mut out = Vec::with_capacity(len);
    let mut x = lead.recip();
    for _ in 0..len {
        out.push(x.clone());
        x *= &r;
    }
    (-(p as i64 - 1), out)
}

struct Prepared {
    factors: Vec<Vec<(usize, Endpoint)>>,
    class: Vec<usize>,
}

fn prepare(md: &MarkedPartition, beta: &[usize], space: &WeightSpace) -> (Vec<(usize, Endpoint)>, usize) {
    let mut f = Vec::new();
    for (j, chain) in md.chains().iter().enumerate() {
        for w in chain.windows(2) {
            f.push((w[0], Endpoint::Var(w[1])));
        }
        if let Some(&last) = chain.last() {
            f.push((last, Endpoint::Point(j)));
        }
    }
    (f, space.index_of(&md.word(beta)).expect("word lies in the weight space"))
}

/// Rows `Σ_class Ψ_class [ε^e] Σ_{mp ∈ class} Ω_mp(t(ε))` for `lo ≤ e ≤ emax`.
fn sample_rows(prep: &Prepared, curve: &Curve, nclasses: usize, lo: i64, emax: i64) -> Vec<Vec<Q>> {
    let len = (emax - lo + 1) as usize;
    let mut cache: BTreeMap<(usize, usize, usize), (i64, Vec<Q>)> = BTreeMap::new();
    let mut acc = vec![vec![Q::zero(); nclasses]; len];
    for (factors, &class) in prep.factors.iter().zip(&prep.class) {
        let mut order = 0i64;
        let mut series = vec![Q::zero(); len];
        series[0] = Q::one();
        for &(a, e) in factors {
            let key = match e {
                Endpoint::Var(b) => (a, 0, b),
                Endpoint::Point(j) => (a, 1, j),
            };
            let (v, inv) = cache.entry(key).or_insert_with(|| inverse_factor(curve.diff(a, e), len));
            order += *v;
            series = mul_trunc(&series, inv);
        }
        for (e, row) in acc.iter_mut().enumerate() {
            let idx = lo + e as i64 - order;
            if idx >= 0 && (idx as usize) < len {
                row[class] += &series[idx as usize];
            }
        }
    }
    acc
}

/// Functionals `Ψ` whose form `𝓡 Ω_β(Ψ)` has positive logarithmic degree on every stratum.
pub fn admissible_subspace(md: &MasterData, opts: &AdmissibleOptions) -> Result<AdmissibleSpace> {
    let inst = &md.instance;
    let m = md.m();
    if m > opts.stratum_cap {
        return Err(Error::StratumCapExceeded { m, cap: opts.stratum_cap });
    }
    let space = repspace::weight_zero_basis(&inst.rs, &inst.weights, &md.beta)?;
    if !space.weight_ok {
        return Ok(AdmissibleSpace {
            functionals: FunctionalBasis { space, vectors: Vec::new() },
            strata: Vec::new(),
            certified: Some(true),
        });
    }
    let n = inst.points.len();
    let mut prep = Prepared { factors: Vec::new(), class: Vec::new() };
    for mp in logforms::enumerate_marked_partitions(m, n) {
        let (f, c) = prepare(&mp, &md.beta, &space);
        prep.factors.push(f);
        prep.class.push(c);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut ech = Echelon::new(space.len());
    let catalog = stratum_catalog(m, n);
    let mut strata = Vec::with_capacity(catalog.len());
    for s in &catalog {
        let emax = max_forced_order(md, s);
        let lo = min_possible_order(s);
        let before = ech.rank();
        let mut samples = 0;
        if emax >= lo {
            let mut stable = 0;
            while stable < opts.stable_rounds && samples < opts.max_samples && !ech.is_full() {
                let curve = draw_curve(&mut rng, m, &inst.points, s);
                samples += 1;
                let mut grew = false;
                for row in sample_rows(&prep, &curve, space.len(), lo, emax) {
                    grew |= ech.insert(&row);
                }
                stable = if grew { 0 } else { stable + 1 };
            }
        }
        strata.push(StratumReport {
            stratum: s.to_string(),
            r_degree: fmt_q(&r_degree_on_stratum(md, s)),
            max_forced_order: emax,
            constraints: ech.rank() - before,
            samples,
        });
    }
    let vectors = ech.nullspace();
    let functionals = FunctionalBasis { space, vectors };
    let certified = if m <= opts.certify_max_m { Some(certify(md, &functionals, &catalog)?) } else { None };
    Ok(AdmissibleSpace { functionals, strata, certified })
}

/// Whether `d^S(𝓡 ω) > 0` on every stratum of the catalog.
pub fn is_admissible(form: &RationalForm, md: &MasterData, catalog: &[Stratum]) -> Result<bool> {
    for s in catalog {
        if let Some(d) = log_degree(form, s)? {
            if q(d) + r_degree_on_stratum(md, s) <= Q::zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn certify(md: &MasterData, basis: &FunctionalBasis, catalog: &[Stratum]) -> Result<bool> {
    if basis.dim() == 0 {
        return Ok(true);
    }
    let sym = logforms::symmetrized_basis(&md.beta, &md.instance.points, md.instance.rs.rank)?;
    for psi in basis.functionals() {
        let form = logforms::sv_map_with_basis(&psi, &sym)?;
        if !is_admissible(&form, md, catalog)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A failed item of the pole-order observation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub item: u8,
    pub detail: String,
}

fn ld_positive(form: &RationalForm, s: &Stratum) -> Result<bool> {
    Ok(log_degree(form, s)?.is_none_or(|d| d > 0))
}

/// Items 1–6 of the pole-order observation for a candidate form `Ω_β(Ψ)`.
pub fn observation_check(form: &RationalForm, md: &MasterData) -> Result<Vec<Violation>> {
    let rs = &md.instance.rs;
    let mut out = Vec::new();
    for (f, &mult) in form.denominator() {
        match *f {
            crate::ratfun::LinearFactor::Diag(a, b) => {
                if mult > 1 {
                    out.push(Violation { item: 1, detail: format!("pole of order {mult} along {f}") });
                }
                if md.root_pair(a, b) >= Q::zero() {
                    out.push(Violation { item: 2, detail: format!("pole along {f} with (β_a,β_b) ≥ 0") });
                }
            }
            crate::ratfun::LinearFactor::Point(..) => {
                if mult > 1 {
                    out.push(Violation { item: 4, detail: format!("pole of order {mult} along {f}") });
                }
            }
        }
    }
    for &a in form.active() {
        if log_degree(form, &Stratum::Infinity(vec![a]))?.is_some_and(|d| d < 1) {
            out.push(Violation { item: 3, detail: format!("t{} = ∞ is not regular", a + 1) });
        }
    }
    let by_color: Vec<Vec<usize>> =
        (0..rs.rank).map(|i| (0..md.m()).filter(|&a| md.beta[a] == i).collect()).collect();
    for (i, vars) in by_color.iter().enumerate() {
        for (j, w) in md.instance.weights.iter().enumerate() {
            let need = w.coeffs[i] as usize + 1;
            for a in subsets(vars, need) {
                let s = Stratum::Point(a, j);
                if !ld_positive(form, &s)? {
                    out.push(Violation { item: 5, detail: format!("no vanishing on {s}") });
                }
            }
        }
        for (i2, others) in by_color.iter().enumerate() {
            if i2 == i {
                continue;
            }
            let need = (1 - rs.cartan[i][i2]) as usize;
            for a in subsets(vars, need) {
                for &b in others {
                    let mut set = a.clone();
                    set.push(b);
                    set.sort();
                    let s = Stratum::Diagonal(set);
                    if !ld_positive(form, &s)? {
                        out.push(Violation { item: 6, detail: format!("no vanishing on {s}") });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ControlPolesReport {
    pub indices: Vec<usize>,
    pub residue_zero: bool,
    pub sum_is_positive_root: bool,
    pub simple_toward_variables: bool,
    pub simple_toward_points: bool,
    pub holds: bool,
}

/// Pole profile of `Res_T Ω_β(Ψ)` toward the remaining variables and the points.
pub fn control_poles_check(psi: &TensorFunctional, md: &MasterData, t: &[usize]) -> Result<ControlPolesReport> {
    let form = logforms::sv_map(psi, &md.beta, &md.instance.points)?;
    let mut report = ControlPolesReport {
        indices: t.iter().map(|a| a + 1).collect(),
        residue_zero: false,
        sum_is_positive_root: true,
        simple_toward_variables: true,
        simple_toward_points: true,
        holds: true,
    };
    let res = match form.iterated_residue(t) {
        Ok(r) => r,
        Err(Error::HigherOrderPole { .. }) => {
            report.simple_toward_variables = false;
            report.holds = false;
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    if res.is_zero() {
        report.residue_zero = true;
        return Ok(report);
    }
    let mut sum = vec![0i64; md.instance.rs.rank];
    for &a in t {
        sum[md.beta[a]] += 1;
    }
    report.sum_is_positive_root = md.instance.rs.is_positive_root(&sum);
    let m = *t.iter().min().unwrap();
    for (f, &mult) in res.denominator() {
        if f.involves(m) && mult > 1 {
            match f {
                crate::ratfun::LinearFactor::Diag(..) => report.simple_toward_variables = false,
                crate::ratfun::LinearFactor::Point(..) => report.simple_toward_points = false,
            }
        }
    }
    report.holds = report.sum_is_positive_root && report.simple_toward_variables && report.simple_toward_points;
    Ok(report)
}

/// Outcome of comparing the conformal-block space with the admissible space.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremCheck {
    pub algebra: String,
    pub level: u64,
    pub weights: Vec<Vec<u64>>,
    pub coloring: Vec<usize>,
    pub dim_blocks: usize,
    pub dim_admissible: usize,
    pub same_span: bool,
    pub certified: Option<bool>,
    pub strata: Vec<StratumReport>,
    pub pass: bool,
}

/// Runs both pipelines on one instance; `beta` defaults to the natural coloring.
pub fn verify_theorem(inst: &BlockInstance, beta: Option<Vec<usize>>, opts: &AdmissibleOptions) -> Result<TheoremCheck> {
    let beta = match beta.or_else(|| inst.natural_coloring()) {
        Some(b) => b,
        None => {
            return Ok(TheoremCheck {
                algebra: inst.rs.name(),
                level: inst.k,
                weights: inst.weights.iter().map(|w| w.coeffs.clone()).collect(),
                coloring: Vec::new(),
                dim_blocks: 0,
                dim_admissible: 0,
                same_span: true,
                certified: Some(true),
                strata: Vec::new(),
                pass: true,
            })
        }
    };
    let cb = blocks::conformal_blocks(inst, &beta)?;
    let md = MasterData::new(inst.clone(), beta.clone())?;
    let adm = admissible_subspace(&md, opts)?;
    let same = linalg::same_span(cb.basis(), &adm.functionals.vectors, cb.space().len());
    let pass = same && cb.dim() == adm.dim() && adm.certified != Some(false);
    Ok(TheoremCheck {
        algebra: inst.rs.name(),
        level: inst.k,
        weights: inst.weights.iter().map(|w| w.coeffs.clone()).collect(),
        coloring: beta.iter().map(|b| b + 1).collect(),
        dim_blocks: cb.dim(),
        dim_admissible: adm.dim(),
        same_span: same,
        certified: adm.certified,
        strata: adm.strata,
        pass,
    })
}

/// All ordered `sl2` weight tuples with `k ≤ kmax`, `N ≤ nmax` and `1 ≤ M ≤ mmax`.
pub fn sl2_instances(kmax: u64, nmax: usize, mmax: usize) -> Vec<BlockInstance> {
    let rs = rootsys::root_system("A1").expect("A1");
    let mut out = Vec::new();
    for k in 1..=kmax {
        for n in 1..=nmax {
            let mut tuple = vec![0u64; n];
            'odometer: loop {
                let total: u64 = tuple.iter().sum();
                if total.is_multiple_of(2) && total > 0 && (total / 2) as usize <= mmax {
                    let weights = tuple.iter().map(|&l| Weight::new(&[l as i64]).unwrap()).collect();
                    out.push(BlockInstance::with_default_points(rs.clone(), k, weights).unwrap());
                }
                for x in tuple.iter_mut().rev() {
                    if *x < k {
                        *x += 1;
                        continue 'odometer;
                    }
                    *x = 0;
                }
                break;
            }
        }
    }
    out
}

/// `sl3` and `G2` instances with `M ≤ 3`, together with their expected dimensions.
pub fn spot_instances() -> Vec<(BlockInstance, usize)> {
    let a2 = rootsys::root_system("A2").expect("A2");
    let g2 = rootsys::root_system("G2").expect("G2");
    let w = |c: &[i64]| Weight::new(c).unwrap();
    let mut out = Vec::new();
    let mut push = |rs: &RootSystem, k: u64, ws: Vec<Weight>, dim: usize| {
        out.push((BlockInstance::with_default_points(rs.clone(), k, ws).unwrap(), dim));
    };
    for k in [1, 2] {
        push(&a2, k, vec![w(&[1, 0]), w(&[0, 1])], 1);
        push(&a2, k, vec![w(&[1, 0]), w(&[0, 1]), w(&[0, 0])], 1);
        push(&a2, k, vec![w(&[1, 0]), w(&[1, 0]), w(&[1, 0])], 1);
        push(&a2, k, vec![w(&[0, 1]), w(&[0, 1]), w(&[0, 1])], 1);
    }
    push(&a2, 2, vec![w(&[1, 1]), w(&[1, 1])], 1);
    for k in [1, 2] {
        push(&g2, k, vec![w(&[1, 0])], 0);
        push(&g2, k, vec![w(&[1, 0]), w(&[0, 0])], 0);
        push(&g2, k, vec![w(&[1, 0]), w(&[0, 0]), w(&[0, 0])], 0);
        push(&g2, k, vec![w(&[0, 0]), w(&[0, 0])], 1);
    }
    out
}
