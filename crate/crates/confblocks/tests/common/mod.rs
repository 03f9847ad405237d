#![allow(dead_code)]

use confblocks::admissible::{self, AdmissibleOptions};
use confblocks::blocks::{self, BlockInstance};
use confblocks::linalg::{q, Q};
use confblocks::logforms::{self, MarkedPartition};
use confblocks::ratfun::{
    canonical_lowest_term, lowest_degree_term_with_base, residues, LinearFactor, RationalForm, SparsePoly, Stratum,
};
use confblocks::repspace::TensorFunctional;
use confblocks::rootsys::{self, RootSystem};
use num::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub const INSTANCES: usize = 200;

// ---------- sl2 fusion oracle ----------

/// Quantum Clebsch–Gordan rule for `sl2` at level `k`.
pub fn cg_allowed(a: u64, b: u64, c: u64, k: u64) -> bool {
    (a + b + c).is_multiple_of(2) && a + b >= c && b + c >= a && a + c >= b && a + b + c <= 2 * k
}

/// Verlinde formula in floating point, rounded.
pub fn verlinde(a: u64, b: u64, c: u64, k: u64) -> i64 {
    let n = (k + 2) as f64;
    let s = |i: u64, j: u64| (2.0 / n).sqrt() * (std::f64::consts::PI * ((i + 1) * (j + 1)) as f64 / n).sin();
    let total: f64 = (0..=k).map(|j| s(a, j) * s(b, j) * s(c, j) / s(0, j)).sum();
    total.round() as i64
}

/// Mismatches `(a, b, c, k, dim)` between the block dimension and both oracles.
pub fn fusion_mismatches(kmax: u64) -> (usize, Vec<(u64, u64, u64, u64, usize)>) {
    let rs = rootsys::root_system("A1").unwrap();
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in 1..=kmax {
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    let w = |x: u64| rootsys::Weight::new(&[x as i64]).unwrap();
                    let inst = BlockInstance::with_default_points(rs.clone(), k, vec![w(a), w(b), w(c)]).unwrap();
                    let dim = blocks::conformal_blocks_auto(&inst).unwrap().dim();
                    let cg = cg_allowed(a, b, c, k) as usize;
                    checked += 1;
                    if dim != cg || verlinde(a, b, c, k) != cg as i64 {
                        bad.push((a, b, c, k, dim));
                    }
                }
            }
        }
    }
    (checked, bad)
}

// ---------- dualb ----------

pub fn dualb_algebras() -> Vec<String> {
    let mut out: Vec<String> = (1..=6).map(|r| format!("A{r}")).collect();
    out.extend((2..=6).map(|r| format!("B{r}")));
    out.extend((2..=6).map(|r| format!("C{r}")));
    out.extend((3..=6).map(|r| format!("D{r}")));
    out.push("G2".into());
    out
}

/// Orderings of simple roots whose partial sums are all positive roots, ending at `gamma`.
pub fn simple_decompositions(rs: &RootSystem, gamma: &[i64]) -> Vec<Vec<usize>> {
    let roots: BTreeSet<Vec<i64>> = rs.positive_roots.iter().map(|r| r.coeffs.clone()).collect();
    let mut out = Vec::new();
    fn go(
        cur: &mut Vec<i64>,
        seq: &mut Vec<usize>,
        gamma: &[i64],
        roots: &BTreeSet<Vec<i64>>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.as_slice() == gamma {
            out.push(seq.clone());
            return;
        }
        for i in 0..gamma.len() {
            if cur[i] < gamma[i] {
                cur[i] += 1;
                if roots.contains(cur) {
                    seq.push(i);
                    go(cur, seq, gamma, roots, out);
                    seq.pop();
                }
                cur[i] -= 1;
            }
        }
    }
    let mut cur = vec![0; gamma.len()];
    go(&mut cur, &mut Vec::new(), gamma, &roots, &mut out);
    out
}

/// Brute-force `Σ_{i<j} (δ_i, δ_j) > -g*` over every decomposition; returns (decompositions, failures).
pub fn dualb_brute(rs: &RootSystem) -> (usize, usize) {
    let bound = -q(rs.dual_coxeter as i64);
    let mut count = 0;
    let mut fail = 0;
    for gamma in &rs.positive_roots {
        for seq in simple_decompositions(rs, &gamma.coeffs) {
            count += 1;
            let mut s = Q::zero();
            for i in 0..seq.len() {
                for j in i + 1..seq.len() {
                    s += rs.pair(seq[i], seq[j]);
                }
            }
            if s <= bound {
                fail += 1;
            }
        }
    }
    (count, fail)
}

// ---------- random forms ----------

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_points<R: Rng>(rng: &mut R, n: usize) -> Vec<Q> {
    let mut pool: Vec<i64> = (-6..=6).collect();
    pool.shuffle(rng);
    pool[..n].iter().map(|&x| q(x)).collect()
}

pub fn random_poly<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32) -> SparsePoly {
    loop {
        let mut p = SparsePoly::zero(nvars);
        for _ in 0..rng.gen_range(1..=4) {
            let mut e = vec![0u32; nvars];
            for _ in 0..rng.gen_range(0..=max_deg) {
                e[rng.gen_range(0..nvars)] += 1;
            }
            p.add_term(e, q(rng.gen_range(-3..=3)));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Every diagonal and point factor on `m` variables and `n` points.
pub fn all_factors(m: usize, n: usize) -> Vec<LinearFactor> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            out.push(LinearFactor::Diag(a, b));
        }
        for j in 0..n {
            out.push(LinearFactor::Point(a, j));
        }
    }
    out
}

/// A top form with simple poles on `simple`, no pole on `forbidden`, and
/// random poles of order at most 2 elsewhere.
pub fn random_form<R: Rng>(
    rng: &mut R,
    m: usize,
    n: usize,
    simple: &[LinearFactor],
    forbidden: &[LinearFactor],
) -> RationalForm {
    let points = random_points(rng, n);
    let num = random_poly(rng, m, 2);
    let mut factors: Vec<(LinearFactor, u32)> = simple.iter().map(|&f| (f, 1)).collect();
    for f in all_factors(m, n) {
        if simple.contains(&f) || forbidden.contains(&f) {
            continue;
        }
        if rng.gen_bool(0.3) {
            factors.push((f, rng.gen_range(1..=2)));
        }
    }
    RationalForm::new(m, (0..m).collect(), points, num, factors)
}

/// Star diagonals `t_min = t_a` of a block, and the non-star diagonals inside it.
fn block_factors(block: &[usize]) -> (Vec<LinearFactor>, Vec<LinearFactor>) {
    let m = *block.iter().min().unwrap();
    let star = block.iter().filter(|&&a| a != m).map(|&a| LinearFactor::Diag(m, a)).collect();
    let mut inner = Vec::new();
    for &a in block {
        for &b in block {
            if a < b && a != m {
                inner.push(LinearFactor::Diag(a, b));
            }
        }
    }
    (star, inner)
}

/// Koszul sign of applying block residues in the order `perm` instead of `0, 1, ...`.
pub fn koszul_sign(sizes: &[usize], perm: &[usize]) -> Q {
    let mut odd = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                odd += (sizes[perm[i]] - 1) * (sizes[perm[j]] - 1);
            }
        }
    }
    if odd % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

/// `Res_{I_{order[0]}} ⋯ Res_{I_{order[last]}} Ω`, innermost residue applied first.
fn apply_blocks(form: &RationalForm, blocks: &[Vec<usize>], order: &[usize]) -> RationalForm {
    let mut out = form.clone();
    for &i in order.iter().rev() {
        out = out.iterated_residue(&blocks[i]).unwrap();
    }
    out
}

/// Disjoint ordered blocks with random contents.
fn random_blocks<R: Rng>(rng: &mut R, m: usize, sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut vars: Vec<usize> = (0..m).collect();
    vars.shuffle(rng);
    let mut out = Vec::new();
    let mut at = 0;
    for &s in sizes {
        out.push(vars[at..at + s].to_vec());
        at += s;
    }
    out
}

fn form_for_blocks<R: Rng>(rng: &mut R, m: usize, blocks: &[Vec<usize>]) -> RationalForm {
    let mut simple = Vec::new();
    let mut forbidden = Vec::new();
    for b in blocks {
        let (s, f) = block_factors(b);
        simple.extend(s);
        forbidden.extend(f);
    }
    let n = rng.gen_range(1..=2);
    random_form(rng, m, n, &simple, &forbidden)
}

/// Compares two block orders with the Koszul sign; returns the failing instance if any.
fn compare_orders(form: &RationalForm, blocks: &[Vec<usize>], order: &[usize]) -> Result<(), String> {
    let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let id: Vec<usize> = (0..blocks.len()).collect();
    let lhs = apply_blocks(form, blocks, order);
    let rhs = apply_blocks(form, blocks, &id).scale(&koszul_sign(&sizes, order));
    if lhs.equals(&rhs).unwrap() {
        Ok(())
    } else {
        Err(format!("{form} blocks {blocks:?} order {order:?}: {lhs} vs {rhs}"))
    }
}

/// Lemma iter1: `t1 = t2` and `t3 = t4`.
pub fn iter1_suite(seed: u64, count: usize) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..count {
        let m = r.gen_range(4..=5);
        let blocks = vec![vec![0, 1], vec![2, 3]];
        let f = form_for_blocks(&mut r, m, &blocks);
        compare_orders(&f, &blocks, &[1, 0])?;
    }
    Ok(count)
}

/// Lemma iter2: the chain `t_1 = ... = t_L` against `t_{L+1} = t_{L+2}`.
pub fn iter2_suite(seed: u64, count: usize) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..count {
        let m = r.gen_range(4..=6);
        let l = r.gen_range(2..m - 1);
        let blocks = vec![(0..l).collect(), vec![l, l + 1]];
        let f = form_for_blocks(&mut r, m, &blocks);
        compare_orders(&f, &blocks, &[1, 0])?;
    }
    Ok(count)
}

/// Lemma iter3: two random disjoint blocks.
pub fn iter3_suite(seed: u64, count: usize) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..count {
        let m = r.gen_range(4..=6);
        let s1 = r.gen_range(2..=m - 2);
        let s2 = r.gen_range(2..=m - s1);
        let blocks = random_blocks(&mut r, m, &[s1, s2]);
        let f = form_for_blocks(&mut r, m, &blocks);
        compare_orders(&f, &blocks, &[1, 0])?;
    }
    Ok(count)
}

/// Lemma iter4: three blocks in a random order.
pub fn iter4_suite(seed: u64, count: usize) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..count {
        let sizes: Vec<usize> = (0..3).map(|_| r.gen_range(2..=3)).collect();
        let m = sizes.iter().sum::<usize>() + r.gen_range(0..=1);
        let blocks = random_blocks(&mut r, m, &sizes);
        let f = form_for_blocks(&mut r, m, &blocks);
        let mut order = vec![0, 1, 2];
        order.shuffle(&mut r);
        compare_orders(&f, &blocks, &order)?;
    }
    Ok(count)
}

/// Lemma lemmefondamental: both parts on forms with a simple pole on `t1 = t2`.
pub fn lemmefondamental_suite(seed: u64, count: usize) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..count {
        let m = r.gen_range(4..=5);
        let n = r.gen_range(1..=2);
        let f = random_form(
            &mut r,
            m,
            n,
            &[LinearFactor::Diag(0, 1)],
            &[LinearFactor::Diag(0, 2), LinearFactor::Diag(1, 2)],
        );
        let res = f.residue_diagonal(1, 0).unwrap();
        if res.pole_order(&LinearFactor::Diag(0, 2)) != 0 {
            return Err(format!("new pole on t1 = t3 from {f}"));
        }
        let before = f.pole_order(&LinearFactor::Diag(2, 3));
        if res.pole_order(&LinearFactor::Diag(2, 3)) > before {
            return Err(format!("pole on t3 = t4 grew for {f}"));
        }
    }
    Ok(count)
}

/// Lemma polyvanish (1): `d0` and the canonical `h` do not depend on the initial variable.
pub fn polyvanish_suite(seed: u64, count: usize) -> Result<usize, String> {
    let mut r = rng(seed);
    let mut done = 0;
    while done < count {
        let m = r.gen_range(3..=4);
        let n = r.gen_range(1..=2);
        let f = random_form(&mut r, m, n, &[], &[]);
        let size = r.gen_range(2..=m);
        let mut vars: Vec<usize> = (0..m).collect();
        vars.shuffle(&mut r);
        let mut a: Vec<usize> = vars[..size].to_vec();
        a.sort();
        let s = Stratum::Diagonal(a.clone());
        let reference = canonical_lowest_term(&f, &s, a[0]).unwrap();
        for &b in &a[1..] {
            let other = canonical_lowest_term(&f, &s, b).unwrap();
            let d = |x: usize| lowest_degree_term_with_base(&f, &s, Some(x)).unwrap().map(|t| t.d0);
            if other != reference || d(a[0]) != d(b) {
                return Err(format!("{f} on {s}: bases t{} and t{} disagree", a[0] + 1, b + 1));
            }
        }
        done += 1;
    }
    Ok(done)
}

/// Lemma polyvanish (2): symmetry in `t1, t2` passes to the lowest term.
pub fn polyvanish_symmetric_suite(seed: u64, count: usize) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..count {
        let m = r.gen_range(3..=4);
        let n = r.gen_range(1..=2);
        let mut swap: Vec<usize> = (0..m).collect();
        swap.swap(0, 1);
        let p = random_poly(&mut r, m, 2);
        let num = &p + &p.rename(&swap);
        let mut factors = Vec::new();
        if r.gen_bool(0.5) {
            factors.push((LinearFactor::Diag(0, 1), 2));
        }
        for f in all_factors(m, n) {
            let image = match f {
                LinearFactor::Diag(0, 1) => continue,
                LinearFactor::Diag(a, b) => LinearFactor::diag(swap[a], swap[b]).0,
                LinearFactor::Point(a, j) => LinearFactor::Point(swap[a], j),
            };
            if f <= image && r.gen_bool(0.3) {
                let mult = r.gen_range(1..=2);
                factors.push((f, mult));
                if image != f {
                    factors.push((image, mult));
                }
            }
        }
        let points = random_points(&mut r, n);
        let f = RationalForm::new(m, (0..m).collect(), points, num, factors);
        let size = r.gen_range(2..=m);
        let a: Vec<usize> = (0..size).collect();
        let s = Stratum::Diagonal(a);
        if let Some(t) = canonical_lowest_term(&f, &s, 0).unwrap() {
            let mut swap_h: Vec<usize> = (0..=m).collect();
            swap_h.swap(0, 1);
            let h2 = t.h.rename(&swap_h);
            // (t1 - t2)^2 is symmetric, so `h` must be too
            if h2 != t.h {
                return Err(format!("{f} on {s}: h not symmetric"));
            }
        }
    }
    Ok(count)
}

/// Residues of a random one-variable form sum to zero on `P^1`.
pub fn sum_residues_suite(seed: u64, count: usize) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..count {
        let n = r.gen_range(1..=4);
        let points = random_points(&mut r, n);
        let num = random_poly(&mut r, 1, 6);
        let mut factors = vec![(LinearFactor::Point(0, 0), r.gen_range(1..=3))];
        for j in 1..n {
            factors.push((LinearFactor::Point(0, j), r.gen_range(0..=3)));
        }
        let f = RationalForm::new(1, vec![0], points, num, factors);
        let res = residues(&f).unwrap();
        if !res.total().is_zero() {
            return Err(format!("{f}: residues sum to {}", res.total()));
        }
    }
    Ok(count)
}

// ---------- SV map ----------

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k as u128 {
        r = r * (n as u128 - i) / (i + 1);
    }
    r
}

/// The matrix `R_π(Ω_β(dual of w(π')))` for distinct colors is a signed permutation matrix.
pub fn sv_signed_permutation(m: usize, n: usize) -> Result<usize, String> {
    let beta: Vec<usize> = (0..m).collect();
    let points: Vec<Q> = (0..n).map(|j| q((j * j + 2 * j) as i64)).collect();
    let parts = logforms::enumerate_marked_partitions(m, n);
    let mut col_hits = vec![0usize; parts.len()];
    for mp in &parts {
        let psi = TensorFunctional::dual_of(&mp.word(&beta));
        let form = logforms::sv_map(&psi, &beta, &points).map_err(|e| e.to_string())?;
        let mut hits = 0;
        for (c, other) in parts.iter().enumerate() {
            let v = logforms::dual_residue(&form, other).map_err(|e| e.to_string())?;
            if v.is_zero() {
                continue;
            }
            if v.abs() != Q::one() {
                return Err(format!("entry {v} at {mp} / {other}"));
            }
            hits += 1;
            col_hits[c] += 1;
        }
        if hits != 1 {
            return Err(format!("row {mp} has {hits} nonzero entries"));
        }
    }
    if col_hits.iter().any(|&h| h != 1) {
        return Err("column with no or several entries".into());
    }
    Ok(parts.len())
}

/// Marked partitions are distinct and number `M!·C(M+N-1, N-1)`.
pub fn partition_count_ok(m: usize, n: usize) -> bool {
    let parts = logforms::enumerate_marked_partitions(m, n);
    let distinct: BTreeSet<&MarkedPartition> = parts.iter().collect();
    let expected = factorial(m) * binomial(m + n - 1, n - 1);
    parts.len() as u128 == expected && distinct.len() == parts.len() && logforms::marked_partition_count(m, n) == expected
}

// ---------- theorem instances and invariance battery ----------

pub fn theorem_instances() -> Vec<BlockInstance> {
    let mut out = admissible::sl2_instances(2, 4, 4);
    out.extend(admissible::spot_instances().into_iter().map(|(i, _)| i));
    out
}

pub fn verify_all(insts: &[BlockInstance]) -> Vec<String> {
    let opts = AdmissibleOptions::default();
    let mut bad = Vec::new();
    for inst in insts {
        let c = admissible::verify_theorem(inst, None, &opts).unwrap();
        if !c.pass {
            bad.push(format!("{} k={} {:?}: {} vs {}", c.algebra, c.level, c.weights, c.dim_blocks, c.dim_admissible));
        }
    }
    bad
}

/// Vacuum propagation, z-independence, f_θ rescaling and affine invariance.
pub fn invariance_failures(inst: &BlockInstance) -> Vec<&'static str> {
    let Some(beta) = inst.natural_coloring() else {
        return Vec::new();
    };
    let n = inst.points.len();
    let alt: Vec<Q> = (0..n).map(|j| q((2 * j * j + 3 * j + 7) as i64)).collect();
    let mut bad = Vec::new();
    if !blocks::vacuum_propagation_check(inst, &beta).unwrap() {
        bad.push("vacuum");
    }
    if !blocks::z_independence_check(inst, &beta, &alt).unwrap() {
        bad.push("z-independence");
    }
    if !blocks::rescale_invariance_check(inst, &beta, &q(3)).unwrap() {
        bad.push("rescale");
    }
    if !blocks::affine_invariance_check(inst, &beta, &q(-2), &q(5)).unwrap() {
        bad.push("affine");
    }
    bad
}
