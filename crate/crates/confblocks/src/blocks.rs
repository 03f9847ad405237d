//! Genus-0 conformal blocks: invariant functionals killing `T^{k+1}`.

use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::repspace::{
    self, apply_free, constraint_echelon, invariance_rows, FreeElem, FunctionalBasis, TensorVec,
    WeightSpace,
};
use crate::rootsys::{RootSystem, Weight};
use num::{One, Zero};
use std::collections::BTreeSet;

#[derive(Clone, Debug)]
pub struct BlockInstance {
    pub rs: RootSystem,
    pub k: u64,
    pub weights: Vec<Weight>,
    pub points: Vec<Q>,
}

impl BlockInstance {
    pub fn new(rs: RootSystem, k: u64, weights: Vec<Weight>, points: Vec<Q>) -> Result<Self> {
        if points.len() != weights.len() {
            return Err(Error::PointCount { points: points.len(), weights: weights.len() });
        }
        let distinct: BTreeSet<&Q> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::RepeatedPoints);
        }
        for (index, w) in weights.iter().enumerate() {
            if w.coeffs.len() != rs.rank {
                return Err(Error::DimensionMismatch { expected: rs.rank, got: w.coeffs.len() });
            }
            let level = rs.level(w);
            if level > k {
                return Err(Error::LevelTooHigh { index, level, k });
            }
        }
        Ok(BlockInstance { rs, k, weights, points })
    }

    /// Instance with the default generic points `0, 1, 3, 6, 10, ...`.
    pub fn with_default_points(rs: RootSystem, k: u64, weights: Vec<Weight>) -> Result<Self> {
        let points = default_points(weights.len());
        BlockInstance::new(rs, k, weights, points)
    }

    pub fn with_points(&self, points: Vec<Q>) -> Result<Self> {
        BlockInstance::new(self.rs.clone(), self.k, self.weights.clone(), points)
    }

    /// The coloring determined by `Σλ_i`, if it lies in the positive root cone.
    pub fn natural_coloring(&self) -> Option<Vec<usize>> {
        repspace::natural_coloring(&self.rs, &self.weights)
    }
}

/// Distinct small rationals `0, 1, 3, 6, 10, 15, ...` used as generic points.
pub fn default_points(n: usize) -> Vec<Q> {
    let mut out = Vec::with_capacity(n);
    let mut x = 0i64;
    for i in 0..n {
        out.push(q(x));
        x += if i == 0 { 1 } else { i as i64 + 1 };
    }
    out
}

/// `T = Σ_i z_i f_θ^{(i)}`.
#[derive(Clone, Debug)]
pub struct TOperator {
    pub f_theta: FreeElem,
    pub points: Vec<Q>,
}

impl TOperator {
    pub fn apply(&self, v: &TensorVec) -> TensorVec {
        let mut out = TensorVec::new();
        for (j, z) in self.points.iter().enumerate() {
            if z.is_zero() {
                continue;
            }
            for (m, c) in apply_free(v, j, &self.f_theta) {
                repspace::add_into(&mut out, m, c * z);
            }
        }
        out
    }

    pub fn power(&self, v: &TensorVec, n: usize) -> TensorVec {
        (0..n).fold(v.clone(), |acc, _| self.apply(&acc))
    }
}

pub fn t_operator(inst: &BlockInstance) -> TOperator {
    TOperator { f_theta: repspace::theta_lowering(&inst.rs), points: inst.points.clone() }
}

/// `T` with `f_θ` rescaled by `c`.
pub fn t_operator_scaled(inst: &BlockInstance, c: &Q) -> TOperator {
    let mut t = t_operator(inst);
    t.f_theta = t.f_theta.scale(c);
    t
}

#[derive(Clone, Debug)]
pub struct BlockSpace {
    pub functionals: FunctionalBasis,
}

impl BlockSpace {
    pub fn dim(&self) -> usize {
        self.functionals.dim()
    }

    pub fn space(&self) -> &WeightSpace {
        &self.functionals.space
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.functionals.vectors
    }
}

/// Rows `T^{k+1} v` for `v` in the weight space `β - (k+1)θ`.
pub fn t_power_rows(inst: &BlockInstance, space: &WeightSpace, t: &TOperator) -> Vec<TensorVec> {
    let n = inst.k as usize + 1;
    let theta = &inst.rs.highest_root.coeffs;
    let lower: Option<Vec<usize>> = space
        .counts
        .iter()
        .zip(theta)
        .map(|(&c, &t)| c.checked_sub(n * t as usize))
        .collect();
    let Some(lower) = lower else { return Vec::new() };
    repspace::monomials_with_counts(&lower, inst.weights.len())
        .into_iter()
        .map(|m| {
            let mut v = TensorVec::new();
            v.insert(m, Q::one());
            t.power(&v, n)
        })
        .collect()
}

pub fn conformal_blocks_with(inst: &BlockInstance, beta: &[usize], t: &TOperator) -> Result<BlockSpace> {
    let space = repspace::weight_zero_basis(&inst.rs, &inst.weights, beta)?;
    if !space.weight_ok {
        return Ok(BlockSpace { functionals: FunctionalBasis { space, vectors: Vec::new() } });
    }
    let mut rows = invariance_rows(&inst.rs, &inst.weights, &space);
    rows.extend(t_power_rows(inst, &space, t));
    let vectors = constraint_echelon(&space, &rows).nullspace();
    Ok(BlockSpace { functionals: FunctionalBasis { space, vectors } })
}

/// The space of conformal blocks for the coloring `β`.
pub fn conformal_blocks(inst: &BlockInstance, beta: &[usize]) -> Result<BlockSpace> {
    conformal_blocks_with(inst, beta, &t_operator(inst))
}

/// Conformal blocks for the natural coloring (dimension 0 outside the root lattice).
pub fn conformal_blocks_auto(inst: &BlockInstance) -> Result<BlockSpace> {
    match inst.natural_coloring() {
        Some(beta) => conformal_blocks(inst, &beta),
        None => {
            let space = WeightSpace::empty(&vec![0; inst.rs.rank], inst.weights.len());
            Ok(BlockSpace { functionals: FunctionalBasis { space, vectors: Vec::new() } })
        }
    }
}

fn fresh_point(points: &[Q]) -> Q {
    let max = points.iter().max().cloned().unwrap_or_else(Q::zero);
    max + q(5)
}

/// Adding a vacuum weight at a fresh point leaves the dimension unchanged.
pub fn vacuum_propagation_check(inst: &BlockInstance, beta: &[usize]) -> Result<bool> {
    let base = conformal_blocks(inst, beta)?.dim();
    let mut weights = inst.weights.clone();
    weights.push(Weight::zero(inst.rs.rank));
    let mut points = inst.points.clone();
    points.push(fresh_point(&inst.points));
    let ext = BlockInstance::new(inst.rs.clone(), inst.k, weights, points)?;
    Ok(conformal_blocks(&ext, beta)?.dim() == base)
}

/// Dimensions agree at two generic point configurations.
pub fn z_independence_check(inst: &BlockInstance, beta: &[usize], alternate: &[Q]) -> Result<bool> {
    let other = inst.with_points(alternate.to_vec())?;
    Ok(conformal_blocks(inst, beta)?.dim() == conformal_blocks(&other, beta)?.dim())
}

/// Rescaling `f_θ` by a nonzero rational leaves the space unchanged.
pub fn rescale_invariance_check(inst: &BlockInstance, beta: &[usize], c: &Q) -> Result<bool> {
    let a = conformal_blocks(inst, beta)?;
    let b = conformal_blocks_with(inst, beta, &t_operator_scaled(inst, c))?;
    Ok(crate::linalg::same_span(a.basis(), b.basis(), a.space().len()))
}

/// Dimension is unchanged under `z ↦ a z + b`.
pub fn affine_invariance_check(inst: &BlockInstance, beta: &[usize], a: &Q, b: &Q) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::Precondition("affine map must have a != 0".into()));
    }
    let moved: Vec<Q> = inst.points.iter().map(|z| a * z + b).collect();
    z_independence_check(inst, beta, &moved)
}
