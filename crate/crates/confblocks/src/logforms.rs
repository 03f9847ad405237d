//! Marked-partition log forms, the symmetrized basis and the
//! Schechtman–Varchenko map.

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::ratfun::{Endpoint, RationalForm};
use crate::repspace::{self, FreeElem, TensorFunctional, TensorMonomial, TensorVec, WeightSpace};
use num::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Chains `π_j = (π_j(1), ..., π_j(k_j))` of variables, one per point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MarkedPartition {
    chains: Vec<Vec<usize>>,
}

impl MarkedPartition {
    /// Checks that the chains are disjoint and cover `vars`.
    pub fn new(vars: &[usize], chains: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen: Vec<usize> = chains.iter().flatten().copied().collect();
        seen.sort();
        let mut want = vars.to_vec();
        want.sort();
        if seen != want {
            return Err(Error::Precondition("chains must partition the variables".into()));
        }
        Ok(MarkedPartition { chains })
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn composition(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    pub fn vars(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.chains.iter().flatten().copied().collect();
        v.sort();
        v
    }

    /// The colored tensor monomial `⊗_j f_{β(π_j(1))} ⋯ f_{β(π_j(k_j))}`.
    pub fn word(&self, beta: &[usize]) -> TensorMonomial {
        self.chains.iter().map(|c| c.iter().map(|&a| beta[a] as u8).collect()).collect()
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .chains
            .iter()
            .map(|c| c.iter().map(|a| (a + 1).to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "({})", parts.join("|"))
    }
}

fn compositions(m: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![m]];
    }
    let mut out = Vec::new();
    for first in 0..=m {
        for mut rest in compositions(m - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Marked partitions of the given variables into `n` chains, ordered by
/// composition and then by permutation.
pub fn enumerate_marked_partitions_of(vars: &[usize], n: usize) -> Vec<MarkedPartition> {
    let mut sorted = vars.to_vec();
    sorted.sort();
    let perms = permutations(&sorted);
    let mut out = Vec::new();
    for k in compositions(sorted.len(), n) {
        for p in &perms {
            let mut chains = Vec::with_capacity(n);
            let mut start = 0;
            for &kj in &k {
                chains.push(p[start..start + kj].to_vec());
                start += kj;
            }
            out.push(MarkedPartition { chains });
        }
    }
    out
}

pub fn enumerate_marked_partitions(m: usize, n: usize) -> Vec<MarkedPartition> {
    enumerate_marked_partitions_of(&(0..m).collect::<Vec<_>>(), n)
}

/// `M! · C(M+N-1, N-1)`.
pub fn marked_partition_count(m: usize, n: usize) -> u128 {
    let fact: u128 = (1..=m as u128).product();
    let mut binom: u128 = 1;
    for i in 0..(n as u128 - 1) {
        binom = binom * (m as u128 + 1 + i) / (i + 1);
    }
    fact * binom
}

/// `Ω(π⃗, k⃗) = Π_j 1/((t_{π_j(1)} - t_{π_j(2)}) ⋯ (t_{π_j(k_j)} - z_j))` times the
/// ascending wedge of its variables.
pub fn omega_basis_form(mp: &MarkedPartition, nvars: usize, points: &[Q]) -> RationalForm {
    let mut diffs = Vec::new();
    for (j, chain) in mp.chains.iter().enumerate() {
        for w in chain.windows(2) {
            diffs.push((w[0], Endpoint::Var(w[1])));
        }
        if let Some(&last) = chain.last() {
            diffs.push((last, Endpoint::Point(j)));
        }
    }
    RationalForm::from_differences(nvars, mp.vars(), points.to_vec(), Q::one(), &diffs)
}

fn combine(nvars: usize, active: Vec<usize>, points: &[Q], terms: Vec<(Q, RationalForm)>) -> Result<RationalForm> {
    let like = RationalForm::zero(nvars, active, points.to_vec());
    let refs: Vec<(Q, &RationalForm)> = terms.iter().map(|(c, f)| (c.clone(), f)).collect();
    RationalForm::linear_combination(&like, &refs)
}

/// `θ(δ⃗, k⃗)` for every colored class with the color multiset of `β`, in the
/// order of the weight space monomials.
pub fn symmetrized_basis(beta: &[usize], points: &[Q], rank: usize) -> Result<Vec<(TensorMonomial, RationalForm)>> {
    let counts = repspace::counts_from_coloring(rank, beta)?;
    let space = WeightSpace::new(&counts, points.len());
    let m = beta.len();
    let mut groups: BTreeMap<TensorMonomial, Vec<(Q, RationalForm)>> = BTreeMap::new();
    for mp in enumerate_marked_partitions(m, points.len()) {
        groups.entry(mp.word(beta)).or_default().push((Q::one(), omega_basis_form(&mp, m, points)));
    }
    let mut out = Vec::with_capacity(space.len());
    for mono in &space.monomials {
        let terms = groups.remove(mono).unwrap_or_default();
        out.push((mono.clone(), combine(m, (0..m).collect(), points, terms)?));
    }
    Ok(out)
}

/// Terms `(⟨Ψ|w⃗(π⃗,k⃗)⟩, (π⃗,k⃗))` of the Schechtman–Varchenko form, zero terms omitted.
pub fn sv_map_terms(psi: &TensorFunctional, beta: &[usize], n: usize) -> Vec<(Q, MarkedPartition)> {
    enumerate_marked_partitions(beta.len(), n)
        .into_iter()
        .filter_map(|mp| {
            let c = psi.eval_monomial(&mp.word(beta));
            (!c.is_zero()).then_some((c, mp))
        })
        .collect()
}

/// `Ω_β(Ψ) = Σ ⟨Ψ|w⃗(π⃗,k⃗)⟩ Ω(π⃗,k⃗)`, summed class by class.
pub fn sv_map(psi: &TensorFunctional, beta: &[usize], points: &[Q]) -> Result<RationalForm> {
    let m = beta.len();
    let mut groups: BTreeMap<TensorMonomial, Vec<(Q, RationalForm)>> = BTreeMap::new();
    for (_, mp) in sv_map_terms(psi, beta, points.len()) {
        groups.entry(mp.word(beta)).or_default().push((Q::one(), omega_basis_form(&mp, m, points)));
    }
    let mut classes = Vec::with_capacity(groups.len());
    for (w, terms) in groups {
        classes.push((psi.eval_monomial(&w), combine(m, (0..m).collect(), points, terms)?));
    }
    combine(m, (0..m).collect(), points, classes)
}

/// `Ω_β(Ψ)` from a precomputed symmetrized basis.
pub fn sv_map_with_basis(
    psi: &TensorFunctional,
    basis: &[(TensorMonomial, RationalForm)],
) -> Result<RationalForm> {
    let like = basis.first().map(|(_, f)| f.zero_like()).ok_or_else(|| {
        Error::Precondition("empty symmetrized basis".into())
    })?;
    let terms: Vec<(Q, &RationalForm)> = basis.iter().map(|(w, f)| (psi.eval_monomial(w), f)).collect();
    RationalForm::linear_combination(&like, &terms)
}

/// Iterated point residues `R_{π⃗,k⃗}`: chains in order, each from its last
/// element to its first, all at the chain's point.
pub fn dual_residue(form: &RationalForm, mp: &MarkedPartition) -> Result<Q> {
    let mut cur = form.clone();
    for (j, chain) in mp.chains.iter().enumerate() {
        for &a in chain.iter().rev() {
            cur = cur.residue_at_point(a, j)?;
            if cur.is_zero() {
                return Ok(Q::zero());
            }
        }
    }
    cur.as_scalar().ok_or_else(|| Error::Precondition("residue did not reduce to a scalar".into()))
}

/// Coefficients of a form in the marked-partition basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub partitions: Vec<MarkedPartition>,
    pub coeffs: Vec<Q>,
}

impl Expansion {
    pub fn nonzero(&self) -> impl Iterator<Item = (&MarkedPartition, &Q)> {
        self.partitions.iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero())
    }
}

/// Expands a top form in the `Ω(π⃗,k⃗)` basis; a nonzero remainder is `NotInSpan`.
pub fn expand_in_basis(form: &RationalForm) -> Result<Expansion> {
    let m = form.nvars();
    if form.active() != (0..m).collect::<Vec<_>>() {
        return Err(Error::Precondition("expected a top-degree form".into()));
    }
    let points = form.points();
    let partitions = enumerate_marked_partitions(m, points.len());
    let mut coeffs = Vec::with_capacity(partitions.len());
    let mut recon = Vec::new();
    for mp in &partitions {
        let basis = omega_basis_form(mp, m, points);
        let norm = dual_residue(&basis, mp)?;
        let c = dual_residue(form, mp)? / norm;
        if !c.is_zero() {
            recon.push((c.clone(), basis));
        }
        coeffs.push(c);
    }
    let rebuilt = combine(m, form.active().to_vec(), points, recon)?;
    if !rebuilt.equals(form)? {
        return Err(Error::NotInSpan);
    }
    Ok(Expansion { partitions, coeffs })
}

/// Reads `Ψ` off an expansion of `Ω_β(Ψ)`; coefficients must agree on words.
pub fn functional_from_expansion(exp: &Expansion, beta: &[usize]) -> Result<TensorFunctional> {
    let mut coeffs: BTreeMap<TensorMonomial, Q> = BTreeMap::new();
    for (mp, c) in exp.partitions.iter().zip(&exp.coeffs) {
        let w = mp.word(beta);
        match coeffs.get(&w) {
            Some(prev) if prev != c => return Err(Error::NotInSpan),
            Some(_) => {}
            None => {
                coeffs.insert(w, c.clone());
            }
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(TensorFunctional { coeffs })
}

/// `⟨Ψ| X_{a_1}(t_{a_1}) ⋯ X_{a_L}(t_{a_L}) v⃗⟩` as a form in the listed variables.
///
/// Sums over marked partitions of the variables: each chain contributes its
/// denominator and acts on its factor by `X_{π_j(1)} ⋯ X_{π_j(k_j)}`.
pub fn correlation_function(
    psi: &TensorFunctional,
    ops: &[(usize, FreeElem)],
    v: &TensorVec,
    nvars: usize,
    points: &[Q],
) -> Result<RationalForm> {
    let vars: Vec<usize> = ops.iter().map(|(a, _)| *a).collect();
    let by_var: BTreeMap<usize, &FreeElem> = ops.iter().map(|(a, x)| (*a, x)).collect();
    if by_var.len() != ops.len() {
        return Err(Error::Precondition("each variable carries one operator".into()));
    }
    let mut terms = Vec::new();
    for mp in enumerate_marked_partitions_of(&vars, points.len()) {
        let mut w = v.clone();
        for (j, chain) in mp.chains.iter().enumerate() {
            for a in chain.iter().rev() {
                w = repspace::apply_free(&w, j, by_var[a]);
            }
        }
        let c = psi.eval(&w);
        if !c.is_zero() {
            terms.push((c, omega_basis_form(&mp, nvars, points)));
        }
    }
    let mut active = vars;
    active.sort();
    combine(nvars, active, points, terms)
}

/// The tensor of empty words.
pub fn highest_weight_vector(n: usize) -> TensorVec {
    let mut v = TensorVec::new();
    v.insert(vec![Vec::new(); n], Q::one());
    v
}
