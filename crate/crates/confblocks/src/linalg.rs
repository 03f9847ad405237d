//! Exact linear algebra over the rationals.

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p/q` (or `p` when integral).
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `p/q` or a decimal-free integer string.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// Rows are kept fully reduced, so `basis()` is canonical for the row space.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    fn reduce_in_place(&self, row: &mut [Q]) {
        for (p, r) in &self.rows {
            if !row[*p].is_zero() {
                let f = row[*p].clone();
                for (x, y) in row.iter_mut().zip(r.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
    }

    /// Remainder of `row` modulo the current row space.
    pub fn reduce(&self, row: &[Q]) -> Vec<Q> {
        let mut r = row.to_vec();
        self.reduce_in_place(&mut r);
        r
    }

    pub fn contains(&self, row: &[Q]) -> bool {
        self.reduce(row).iter().all(Zero::is_zero)
    }

    /// Adds a row; returns true when the rank grew.
    pub fn insert(&mut self, row: &[Q]) -> bool {
        assert_eq!(row.len(), self.ncols);
        let mut r = row.to_vec();
        self.reduce_in_place(&mut r);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (_, other) in self.rows.iter_mut() {
            if !other[p].is_zero() {
                let f = other[p].clone();
                for (x, y) in other.iter_mut().zip(r.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let pos = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(pos, (p, r));
        true
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Canonical basis of the row space.
    pub fn basis(&self) -> Vec<Vec<Q>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    /// Basis of `{x : r·x = 0 for all rows r}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Q::zero(); self.ncols];
            v[f] = Q::one();
            for (p, r) in &self.rows {
                if !r[f].is_zero() {
                    v[*p] = -r[f].clone();
                }
            }
            out.push(v);
        }
        out
    }
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Nullspace basis of the matrix whose rows are `rows`.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.nullspace()
}

/// Canonical reduced basis of a span.
pub fn row_basis(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.basis()
}

/// True when every vector of `a` lies in the span of `b`.
pub fn span_contains(b: &[Vec<Q>], a: &[Vec<Q>], ncols: usize) -> bool {
    let mut e = Echelon::new(ncols);
    for r in b {
        e.insert(r);
    }
    a.iter().all(|r| e.contains(r))
}

pub fn same_span(a: &[Vec<Q>], b: &[Vec<Q>], ncols: usize) -> bool {
    span_contains(a, b, ncols) && span_contains(b, a, ncols)
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant by fraction-exact elimination.
pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * y;
                }
            }
        }
    }
    det
}

/// Sylvester's criterion on leading principal minors.
pub fn is_positive_definite(m: &[Vec<Q>]) -> bool {
    (1..=m.len()).all(|k| {
        let minor: Vec<Vec<Q>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        determinant(&minor).is_positive()
    })
}
