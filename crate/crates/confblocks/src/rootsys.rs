//! Root data for A_n, B_n, C_n, D_n and G2 with the invariant form
//! normalized so that the highest root has squared length 2.

use crate::error::{Error, Result};
use crate::linalg::{self, q, qf, Q};
use num::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

/// A root in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn to_q(&self) -> Vec<Q> {
        self.coeffs.iter().map(|&c| q(c)).collect()
    }

    fn plus_simple(&self, i: usize) -> Root {
        let mut c = self.coeffs.clone();
        c[i] += 1;
        Root { coeffs: c }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("a{}", i + 1)),
                _ => parts.push(format!("{}a{}", c, i + 1)),
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// A dominant integral weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight {
    pub coeffs: Vec<u64>,
}

impl Weight {
    pub fn new(coeffs: &[i64]) -> Result<Weight> {
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::NotDominant(coeffs.to_vec()));
        }
        Ok(Weight { coeffs: coeffs.iter().map(|&c| c as u64).collect() })
    }

    pub fn zero(rank: usize) -> Weight {
        Weight { coeffs: vec![0; rank] }
    }

    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Weight { coeffs }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub simple_roots: Vec<Root>,
    pub positive_roots: Vec<Root>,
    #[serde(skip)]
    pub gram: Vec<Vec<Q>>,
    #[serde(skip)]
    gram_inv: Vec<Vec<Q>>,
    /// `cartan[i][j] = 2(α_i,α_j)/(α_i,α_i)`.
    pub cartan: Vec<Vec<i64>>,
    pub highest_root: Root,
    pub dual_coxeter: u64,
}

fn gram_matrix(family: Family, n: usize) -> Vec<Vec<Q>> {
    let mut g = vec![vec![Q::zero(); n]; n];
    match family {
        Family::A => {
            for i in 0..n {
                g[i][i] = q(2);
                if i + 1 < n {
                    g[i][i + 1] = q(-1);
                    g[i + 1][i] = q(-1);
                }
            }
        }
        Family::B => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { q(1) } else { q(2) };
                if i + 1 < n {
                    g[i][i + 1] = q(-1);
                    g[i + 1][i] = q(-1);
                }
            }
        }
        Family::C => {
            for i in 0..n {
                g[i][i] = if i + 1 == n { q(2) } else { q(1) };
                if i + 1 < n {
                    let v = if i + 2 == n { q(-1) } else { qf(-1, 2) };
                    g[i][i + 1] = v.clone();
                    g[i + 1][i] = v;
                }
            }
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = q(2);
            }
            for i in 0..n - 2 {
                g[i][i + 1] = q(-1);
                g[i + 1][i] = q(-1);
            }
            // fork: α_{n-2} joins both α_{n-1} and α_n
            let a = n - 3;
            let b = n - 1;
            g[a][b] = q(-1);
            g[b][a] = q(-1);
        }
        Family::G2 => {
            g[0][0] = qf(2, 3);
            g[0][1] = q(-1);
            g[1][0] = q(-1);
            g[1][1] = q(2);
        }
    }
    g
}

fn positive_roots_from_cartan(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut all = Vec::new();
    for r in &layer {
        known.insert(r.coeffs.clone());
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for r in &layer {
            for i in 0..n {
                // α_i-string through r: r - pα_i, ..., r + qα_i
                let mut p = 0;
                let mut c = r.coeffs.clone();
                loop {
                    c[i] -= 1;
                    if known.contains(&c) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| r.coeffs[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let s = r.plus_simple(i);
                    if known.insert(s.coeffs.clone()) {
                        next.push(s);
                    }
                }
            }
        }
        all.extend(layer);
        layer = next;
    }
    all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coeffs.cmp(&a.coeffs)));
    all
}

/// Parses names such as `A3`, `B2`, `G2`.
pub fn parse_algebra(name: &str) -> Result<(Family, usize)> {
    let name = name.trim();
    if name.eq_ignore_ascii_case("G2") {
        return Ok((Family::G2, 2));
    }
    let mut chars = name.chars();
    let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('A') => Family::A,
        Some('B') => Family::B,
        Some('C') => Family::C,
        Some('D') => Family::D,
        _ => return Err(Error::UnsupportedAlgebra(name.to_string())),
    };
    let rank: usize =
        chars.as_str().parse().map_err(|_| Error::UnsupportedAlgebra(name.to_string()))?;
    Ok((fam, rank))
}

/// Builds the root system of the given family and rank.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let ok = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 3,
        Family::G2 => rank == 2,
    };
    if !ok {
        return Err(Error::UnsupportedAlgebra(format!("{:?}{}", family, rank)));
    }
    let gram = gram_matrix(family, rank);
    let cartan: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| (q(2) * &gram[i][j] / &gram[i][i]).to_integer().to_i64().unwrap())
                .collect()
        })
        .collect();
    let positive_roots = positive_roots_from_cartan(&cartan);
    let highest_root = positive_roots.iter().max_by_key(|r| r.height()).unwrap().clone();
    let gram_inv = linalg::inverse(&gram).expect("gram matrix is nonsingular");
    let simple_roots = (0..rank).map(|i| Root::simple(rank, i)).collect();
    let mut rs = RootSystem {
        family,
        rank,
        simple_roots,
        positive_roots,
        gram,
        gram_inv,
        cartan,
        highest_root,
        dual_coxeter: 0,
    };
    let comarks: Q = rs.comarks().iter().sum();
    rs.dual_coxeter = (comarks + Q::one()).to_integer().to_u64().unwrap();
    Ok(rs)
}

/// Parses and builds in one step.
pub fn root_system(name: &str) -> Result<RootSystem> {
    let (f, r) = parse_algebra(name)?;
    build_root_system(f, r)
}

impl RootSystem {
    pub fn name(&self) -> String {
        match self.family {
            Family::G2 => "G2".to_string(),
            f => format!("{:?}{}", f, self.rank),
        }
    }

    /// `(α_i, α_i)`.
    pub fn root_length(&self, i: usize) -> &Q {
        &self.gram[i][i]
    }

    /// Comarks `c_i (α_i,α_i)/2` where `θ = Σ c_i α_i`.
    pub fn comarks(&self) -> Vec<Q> {
        (0..self.rank)
            .map(|i| q(self.highest_root.coeffs[i]) * &self.gram[i][i] / q(2))
            .collect()
    }

    /// Invariant form of two vectors in the simple-root basis.
    pub fn killing(&self, v: &[Q], w: &[Q]) -> Result<Q> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: v.len() });
        }
        if w.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: w.len() });
        }
        let mut s = Q::zero();
        for i in 0..self.rank {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if !w[j].is_zero() && !self.gram[i][j].is_zero() {
                    s += &v[i] * &w[j] * &self.gram[i][j];
                }
            }
        }
        Ok(s)
    }

    pub fn killing_roots(&self, a: &Root, b: &Root) -> Q {
        self.killing(&a.to_q(), &b.to_q()).unwrap()
    }

    /// `(α_i, α_j)`.
    pub fn pair(&self, i: usize, j: usize) -> &Q {
        &self.gram[i][j]
    }

    /// Coordinates of a weight in the simple-root basis.
    pub fn weight_to_roots(&self, w: &Weight) -> Vec<Q> {
        // (λ, α_j) = m_j (α_j,α_j)/2
        let b: Vec<Q> =
            (0..self.rank).map(|j| q(w.coeffs[j] as i64) * &self.gram[j][j] / q(2)).collect();
        (0..self.rank).map(|i| linalg::dot(&self.gram_inv[i], &b)).collect()
    }

    /// `(λ, μ)` for weights.
    pub fn weight_pairing(&self, a: &Weight, b: &Weight) -> Q {
        self.killing(&self.weight_to_roots(a), &self.weight_to_roots(b)).unwrap()
    }

    /// `(λ, α_i)`.
    pub fn weight_simple_pairing(&self, w: &Weight, i: usize) -> Q {
        q(w.coeffs[i] as i64) * &self.gram[i][i] / q(2)
    }

    /// `(λ, θ)`.
    pub fn level(&self, w: &Weight) -> u64 {
        let c = self.comarks();
        let s: Q = (0..self.rank).map(|i| q(w.coeffs[i] as i64) * &c[i]).sum();
        s.to_integer().to_u64().unwrap()
    }

    /// Simple-root coordinates of `Σλ_i` when it lies in the root lattice.
    pub fn root_lattice_coords(&self, weights: &[Weight]) -> Option<Vec<i64>> {
        let mut total = vec![Q::zero(); self.rank];
        for w in weights {
            for (t, x) in total.iter_mut().zip(self.weight_to_roots(w)) {
                *t += x;
            }
        }
        total
            .iter()
            .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn is_positive_root(&self, coeffs: &[i64]) -> bool {
        self.positive_roots.iter().any(|r| r.coeffs == coeffs)
    }

    /// Maximal chains starting at `α_start`, each step adding one simple root.
    pub fn root_patterns(&self, start: usize) -> Result<Vec<Vec<Root>>> {
        if start >= self.rank {
            return Err(Error::BadIndex(start));
        }
        let mut out = Vec::new();
        let mut chain = vec![Root::simple(self.rank, start)];
        self.extend_patterns(&mut chain, &mut out);
        Ok(out)
    }

    fn extend_patterns(&self, chain: &mut Vec<Root>, out: &mut Vec<Vec<Root>>) {
        let last = chain.last().unwrap().clone();
        let mut extended = false;
        for i in 0..self.rank {
            let next = last.plus_simple(i);
            if self.is_positive_root(&next.coeffs) {
                extended = true;
                chain.push(next);
                self.extend_patterns(chain, out);
                chain.pop();
            }
        }
        if !extended {
            out.push(chain.clone());
        }
    }

    /// Checks `Σ_{i<j}(δ_i,δ_j) > -g*` over all positive roots.
    pub fn check_dualb(&self) -> DualbReport {
        let bound = -q(self.dual_coxeter as i64);
        let mut entries = Vec::new();
        for gamma in &self.positive_roots {
            let decomposition: Vec<usize> = gamma
                .coeffs
                .iter()
                .enumerate()
                .flat_map(|(i, &c)| std::iter::repeat_n(i, c as usize))
                .collect();
            let g = gamma.to_q();
            let norm = self.killing(&g, &g).unwrap();
            let diag: Q = decomposition.iter().map(|&i| self.gram[i][i].clone()).sum();
            let pair_sum = (norm - diag) / q(2);
            let margin = &pair_sum - &bound;
            entries.push(DualbEntry { gamma: gamma.clone(), decomposition, pair_sum, margin });
        }
        let min_margin = entries.iter().map(|e| e.margin.clone()).min().unwrap_or_else(Q::zero);
        DualbReport {
            algebra: self.name(),
            dual_coxeter: self.dual_coxeter,
            holds: min_margin.is_positive(),
            min_margin,
            entries,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DualbEntry {
    pub gamma: Root,
    /// Simple-root indices with multiplicity.
    pub decomposition: Vec<usize>,
    pub pair_sum: Q,
    /// `pair_sum + g*`.
    pub margin: Q,
}

#[derive(Clone, Debug)]
pub struct DualbReport {
    pub algebra: String,
    pub dual_coxeter: u64,
    pub entries: Vec<DualbEntry>,
    pub min_margin: Q,
    pub holds: bool,
}

/// Closed-form count of positive roots.
pub fn expected_positive_root_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::G2 => 6,
    }
}
