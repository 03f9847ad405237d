//! Tensor products of free Verma modules `M'(λ)`.
//!
//! A word `[i1, ..., ik]` in factor `j` stands for `f'_{i1} ⋯ f'_{ik} |λ_j⟩`:
//! the last letter acts first. Letters are 0-based simple-root indices.

use crate::error::{Error, Result};
use crate::linalg::{q, Echelon, Q};
use crate::rootsys::{Root, RootSystem, Weight};
use num::{BigInt, One, Zero};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

pub type Word = Vec<u8>;
pub type TensorMonomial = Vec<Word>;
pub type TensorVec = BTreeMap<TensorMonomial, Q>;

/// Element of the free associative algebra on the `f'_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeElem {
    pub terms: BTreeMap<Word, Q>,
}

impl FreeElem {
    pub fn zero() -> Self {
        FreeElem::default()
    }

    pub fn one() -> Self {
        FreeElem::word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        FreeElem::word(vec![i as u8])
    }

    pub fn word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Q::one());
        FreeElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        add_entry(&mut self.terms, w, c);
    }

    pub fn add(&self, other: &FreeElem) -> FreeElem {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> FreeElem {
        if c.is_zero() {
            return FreeElem::zero();
        }
        FreeElem { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &FreeElem) -> FreeElem {
        let mut out = FreeElem::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// `[a, b] = ab - ba`.
    pub fn bracket(a: &FreeElem, b: &FreeElem) -> FreeElem {
        a.mul(b).add(&b.mul(a).scale(&-Q::one()))
    }

    /// Letter multiplicities, if homogeneous.
    pub fn counts(&self, rank: usize) -> Option<Vec<usize>> {
        let mut it = self.terms.keys().map(|w| word_counts(w, rank));
        let first = it.next()?;
        if it.all(|c| c == first) {
            Some(first)
        } else {
            None
        }
    }
}

pub fn word_counts(w: &[u8], rank: usize) -> Vec<usize> {
    let mut c = vec![0; rank];
    for &l in w {
        c[l as usize] += 1;
    }
    c
}

pub fn counts_from_coloring(rank: usize, beta: &[usize]) -> Result<Vec<usize>> {
    let mut c = vec![0; rank];
    for &b in beta {
        if b >= rank {
            return Err(Error::BadIndex(b));
        }
        c[b] += 1;
    }
    Ok(c)
}

/// The sorted coloring with the given letter multiplicities.
pub fn coloring_from_counts(counts: &[usize]) -> Vec<usize> {
    counts.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i, c)).collect()
}

/// Coloring `β` with `Σα_β = Σλ_i`, when the sum is in the root lattice.
pub fn natural_coloring(rs: &RootSystem, weights: &[Weight]) -> Option<Vec<usize>> {
    let coords = rs.root_lattice_coords(weights)?;
    if coords.iter().any(|&c| c < 0) {
        return None;
    }
    Some(coloring_from_counts(&coords.iter().map(|&c| c as usize).collect::<Vec<_>>()))
}

fn multiset_words(counts: &mut Vec<usize>, remaining: usize, cur: &mut Word, out: &mut Vec<Word>) {
    if remaining == 0 {
        out.push(cur.clone());
        return;
    }
    for i in 0..counts.len() {
        if counts[i] > 0 {
            counts[i] -= 1;
            cur.push(i as u8);
            multiset_words(counts, remaining - 1, cur, out);
            cur.pop();
            counts[i] += 1;
        }
    }
}

/// All words with exactly the given letter multiplicities.
pub fn words_with_counts(counts: &[usize]) -> Vec<Word> {
    let mut out = Vec::new();
    let total = counts.iter().sum();
    multiset_words(&mut counts.to_vec(), total, &mut Vec::new(), &mut out);
    out
}

fn sub_counts(bound: &[usize], i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i == bound.len() {
        out.push(cur.clone());
        return;
    }
    for c in 0..=bound[i] {
        cur.push(c);
        sub_counts(bound, i + 1, cur, out);
        cur.pop();
    }
}

fn distribute(counts: &[usize], factors: usize, cur: &mut TensorMonomial, out: &mut Vec<TensorMonomial>) {
    if factors == 1 {
        for w in words_with_counts(counts) {
            cur.push(w);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    let mut subs = Vec::new();
    sub_counts(counts, 0, &mut Vec::new(), &mut subs);
    for s in subs {
        let rest: Vec<usize> = counts.iter().zip(&s).map(|(a, b)| a - b).collect();
        for w in words_with_counts(&s) {
            cur.push(w);
            distribute(&rest, factors - 1, cur, out);
            cur.pop();
        }
    }
}

/// Every distribution of the letters into `factors` ordered words, sorted.
pub fn monomials_with_counts(counts: &[usize], factors: usize) -> Vec<TensorMonomial> {
    if factors == 0 {
        return if counts.iter().all(|&c| c == 0) { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    distribute(counts, factors, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// An ordered monomial basis of one weight space of `⊗_j M'(λ_j)`.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub counts: Vec<usize>,
    pub factors: usize,
    pub monomials: Vec<TensorMonomial>,
    /// False when `Σλ_i` differs from the total color weight.
    pub weight_ok: bool,
    index: HashMap<TensorMonomial, usize>,
}

impl WeightSpace {
    pub fn new(counts: &[usize], factors: usize) -> Self {
        let monomials = monomials_with_counts(counts, factors);
        WeightSpace::from_monomials(counts.to_vec(), factors, monomials, true)
    }

    fn from_monomials(
        counts: Vec<usize>,
        factors: usize,
        monomials: Vec<TensorMonomial>,
        weight_ok: bool,
    ) -> Self {
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        WeightSpace { counts, factors, monomials, weight_ok, index }
    }

    pub fn empty(counts: &[usize], factors: usize) -> Self {
        WeightSpace::from_monomials(counts.to_vec(), factors, Vec::new(), false)
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &TensorMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Dense coordinates; monomials outside the basis are ignored.
    pub fn to_dense(&self, v: &TensorVec) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.len()];
        for (m, c) in v {
            if let Some(i) = self.index_of(m) {
                out[i] += c;
            }
        }
        out
    }

    pub fn from_dense(&self, v: &[Q]) -> TensorVec {
        self.monomials
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }
}

/// Weight-zero basis of `⊗M'(λ_j)` for the color multiset of `β`.
pub fn weight_zero_basis(rs: &RootSystem, weights: &[Weight], beta: &[usize]) -> Result<WeightSpace> {
    let counts = counts_from_coloring(rs.rank, beta)?;
    let ok = rs
        .root_lattice_coords(weights)
        .map(|c| c.iter().zip(&counts).all(|(&a, &b)| a == b as i64))
        .unwrap_or(false);
    if ok {
        Ok(WeightSpace::new(&counts, weights.len()))
    } else {
        Ok(WeightSpace::empty(&counts, weights.len()))
    }
}

/// Linear functional on a weight space, keyed by monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorFunctional {
    pub coeffs: BTreeMap<TensorMonomial, Q>,
}

impl TensorFunctional {
    pub fn from_dense(space: &WeightSpace, v: &[Q]) -> Self {
        TensorFunctional { coeffs: space.from_dense(v) }
    }

    pub fn dual_of(m: &TensorMonomial) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(m.clone(), Q::one());
        TensorFunctional { coeffs }
    }

    pub fn eval(&self, v: &TensorVec) -> Q {
        let mut s = Q::zero();
        for (m, c) in v {
            if let Some(x) = self.coeffs.get(m) {
                s += x * c;
            }
        }
        s
    }

    pub fn eval_monomial(&self, m: &TensorMonomial) -> Q {
        self.coeffs.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(Zero::is_zero)
    }
}

pub fn add_into(v: &mut TensorVec, m: TensorMonomial, c: Q) {
    add_entry(v, m, c);
}

/// Adds `c` at key `k`, dropping the entry if it cancels.
pub fn add_entry<K: Ord>(map: &mut BTreeMap<K, Q>, k: K, c: Q) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Prepends `elem` to the word of factor `j`.
pub fn apply_free(v: &TensorVec, j: usize, elem: &FreeElem) -> TensorVec {
    let mut out = TensorVec::new();
    for (m, c) in v {
        for (w, x) in &elem.terms {
            let mut n = m.clone();
            let mut word = w.clone();
            word.extend_from_slice(&m[j]);
            n[j] = word;
            add_into(&mut out, n, c * x);
        }
    }
    out
}

pub fn apply_word(v: &TensorVec, j: usize, word: &[u8]) -> TensorVec {
    apply_free(v, j, &FreeElem::word(word.to_vec()))
}

/// `f_i` acting diagonally on the tensor product.
pub fn apply_f(v: &TensorVec, i: usize) -> TensorVec {
    let mut out = TensorVec::new();
    for (m, c) in v {
        for j in 0..m.len() {
            let mut n = m.clone();
            n[j].insert(0, i as u8);
            add_into(&mut out, n, c.clone());
        }
    }
    out
}

/// `λ(h_i)` minus the letters' pairings, for the tail `w` of a word.
fn h_value(rs: &RootSystem, lam: &Weight, i: usize, tail: &[u8]) -> i64 {
    lam.coeffs[i] as i64 - tail.iter().map(|&l| rs.cartan[i][l as usize]).sum::<i64>()
}

/// Eigenvalue of `h_i` on a monomial.
pub fn h_eigenvalue(rs: &RootSystem, weights: &[Weight], m: &TensorMonomial, i: usize) -> i64 {
    m.iter().zip(weights).map(|(w, lam)| h_value(rs, lam, i, w)).sum()
}

/// `e_i` acting diagonally, via `[e_i, f_j] = δ_ij h_i` and `e_i|λ⟩ = 0`.
pub fn apply_e(rs: &RootSystem, weights: &[Weight], v: &TensorVec, i: usize) -> TensorVec {
    let mut out = TensorVec::new();
    for (m, c) in v {
        for (j, w) in m.iter().enumerate() {
            for p in 0..w.len() {
                if w[p] as usize != i {
                    continue;
                }
                let h = h_value(rs, &weights[j], i, &w[p + 1..]);
                if h == 0 {
                    continue;
                }
                let mut n = m.clone();
                n[j].remove(p);
                add_into(&mut out, n, c * q(h));
            }
        }
    }
    out
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// `θ⁻_{il} = ad(f_i)^{1-a_il} f_l` expanded in the free algebra.
pub fn serre_element(rs: &RootSystem, i: usize, l: usize) -> FreeElem {
    let n = 1 - rs.cartan[i][l];
    let mut out = FreeElem::zero();
    for k in 0..=n {
        let mut w = vec![i as u8; (n - k) as usize];
        w.push(l as u8);
        w.extend(std::iter::repeat_n(i as u8, k as usize));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        out.add_term(w, Q::from_integer(BigInt::from(sign * binom(n, k))));
    }
    out
}

fn subtract_counts(counts: &[usize], sub: &[usize]) -> Option<Vec<usize>> {
    counts.iter().zip(sub).map(|(a, b)| a.checked_sub(*b)).collect()
}

/// Serre-ideal vectors in the weight space with the given multiplicities.
pub fn serre_vectors(rs: &RootSystem, counts: &[usize], factors: usize) -> Vec<TensorVec> {
    let mut out = Vec::new();
    for i in 0..rs.rank {
        for l in 0..rs.rank {
            if i == l {
                continue;
            }
            let theta = serre_element(rs, i, l);
            let need = theta.counts(rs.rank).unwrap();
            let Some(rest) = subtract_counts(counts, &need) else { continue };
            for m in monomials_with_counts(&rest, factors) {
                for j in 0..factors {
                    for s in 0..=m[j].len() {
                        let mut v = TensorVec::new();
                        for (w, c) in &theta.terms {
                            let mut n = m.clone();
                            let mut word = m[j][..s].to_vec();
                            word.extend_from_slice(w);
                            word.extend_from_slice(&m[j][s..]);
                            n[j] = word;
                            add_into(&mut v, n, c.clone());
                        }
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// Vectors `u · f_i^{1+λ_j(h_i)} |λ_j⟩` in the given weight space.
pub fn verma_vectors(rs: &RootSystem, weights: &[Weight], counts: &[usize]) -> Vec<TensorVec> {
    let factors = weights.len();
    let mut out = Vec::new();
    for (j, lam) in weights.iter().enumerate() {
        for i in 0..rs.rank {
            let e = lam.coeffs[i] as usize + 1;
            let mut need = vec![0; rs.rank];
            need[i] = e;
            let Some(rest) = subtract_counts(counts, &need) else { continue };
            for mut m in monomials_with_counts(&rest, factors) {
                m[j].extend(std::iter::repeat_n(i as u8, e));
                let mut v = TensorVec::new();
                v.insert(m, Q::one());
                out.push(v);
            }
        }
    }
    out
}

/// Serre span of the weight-zero space.
pub fn serre_span(rs: &RootSystem, weights: &[Weight], beta: &[usize]) -> Result<Vec<TensorVec>> {
    let space = weight_zero_basis(rs, weights, beta)?;
    if !space.weight_ok {
        return Ok(Vec::new());
    }
    Ok(serre_vectors(rs, &space.counts, weights.len()))
}

/// Verma-kernel span of the weight-zero space.
pub fn verma_kernel_span(rs: &RootSystem, weights: &[Weight], beta: &[usize]) -> Result<Vec<TensorVec>> {
    let space = weight_zero_basis(rs, weights, beta)?;
    if !space.weight_ok {
        return Ok(Vec::new());
    }
    Ok(verma_vectors(rs, weights, &space.counts))
}

/// Rows (as vectors in `space`) cut out by the kernels and by `g`-invariance.
pub fn invariance_rows(rs: &RootSystem, weights: &[Weight], space: &WeightSpace) -> Vec<TensorVec> {
    let factors = weights.len();
    let mut rows = serre_vectors(rs, &space.counts, factors);
    rows.extend(verma_vectors(rs, weights, &space.counts));
    for i in 0..rs.rank {
        if space.counts[i] > 0 {
            let mut lower = space.counts.clone();
            lower[i] -= 1;
            for m in monomials_with_counts(&lower, factors) {
                let mut v = TensorVec::new();
                v.insert(m, Q::one());
                rows.push(apply_f(&v, i));
            }
        }
        let mut upper = space.counts.clone();
        upper[i] += 1;
        for m in monomials_with_counts(&upper, factors) {
            let mut v = TensorVec::new();
            v.insert(m, Q::one());
            rows.push(apply_e(rs, weights, &v, i));
        }
    }
    rows
}

/// A basis of functionals on a weight space, as dense coordinate vectors.
#[derive(Clone, Debug)]
pub struct FunctionalBasis {
    pub space: WeightSpace,
    pub vectors: Vec<Vec<Q>>,
}

impl FunctionalBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn functional(&self, i: usize) -> TensorFunctional {
        TensorFunctional::from_dense(&self.space, &self.vectors[i])
    }

    pub fn functionals(&self) -> Vec<TensorFunctional> {
        (0..self.dim()).map(|i| self.functional(i)).collect()
    }
}

/// Echelon of the constraint rows; its nullspace is the functional space.
pub fn constraint_echelon(space: &WeightSpace, rows: &[TensorVec]) -> Echelon {
    let mut e = Echelon::new(space.len());
    for r in rows {
        if e.is_full() {
            break;
        }
        e.insert(&space.to_dense(r));
    }
    e
}

/// `g`-invariant functionals on `⊗M'(λ_j)` vanishing on both kernels.
pub fn invariant_functionals(rs: &RootSystem, weights: &[Weight], beta: &[usize]) -> Result<FunctionalBasis> {
    let space = weight_zero_basis(rs, weights, beta)?;
    if !space.weight_ok {
        return Ok(FunctionalBasis { space, vectors: Vec::new() });
    }
    let rows = invariance_rows(rs, weights, &space);
    let vectors = constraint_echelon(&space, &rows).nullspace();
    Ok(FunctionalBasis { space, vectors })
}

/// `f_γ` as the nested bracket `[f_{iℓ}, [⋯[f_{i2}, f_{i1}]⋯]]` along a chain.
pub fn lower_by_pattern(rs: &RootSystem, chain: &[Root]) -> Result<FreeElem> {
    let first = chain.first().ok_or_else(|| Error::InvalidPattern("empty chain".into()))?;
    if first.height() != 1 || first.coeffs.iter().any(|&c| c < 0) {
        return Err(Error::InvalidPattern(format!("{first} is not simple")));
    }
    let start = first.coeffs.iter().position(|&c| c == 1).unwrap();
    let mut elem = FreeElem::letter(start);
    for pair in chain.windows(2) {
        let diff: Vec<i64> = pair[1].coeffs.iter().zip(&pair[0].coeffs).map(|(a, b)| a - b).collect();
        let step = diff.iter().position(|&c| c == 1);
        let ok = step.is_some()
            && diff.iter().sum::<i64>() == 1
            && diff.iter().all(|&c| c >= 0)
            && rs.is_positive_root(&pair[1].coeffs);
        if !ok {
            return Err(Error::InvalidPattern(format!("{} -> {}", pair[0], pair[1])));
        }
        elem = FreeElem::bracket(&FreeElem::letter(step.unwrap()), &elem);
    }
    Ok(elem)
}

/// `f_θ` built along the first maximal pattern from `α_1`.
pub fn theta_lowering(rs: &RootSystem) -> FreeElem {
    let chain = rs.root_patterns(0).unwrap().into_iter().next().unwrap();
    lower_by_pattern(rs, &chain).unwrap()
}

/// True when a homogeneous element is nonzero modulo the Serre ideal.
pub fn is_nonzero_mod_serre(rs: &RootSystem, elem: &FreeElem) -> bool {
    let Some(counts) = elem.counts(rs.rank) else {
        return !elem.is_zero();
    };
    let space = WeightSpace::new(&counts, 1);
    let ideal = constraint_echelon(&space, &serre_vectors(rs, &counts, 1));
    let v: TensorVec = elem.terms.iter().map(|(w, c)| (vec![w.clone()], c.clone())).collect();
    !ideal.contains(&space.to_dense(&v))
}
