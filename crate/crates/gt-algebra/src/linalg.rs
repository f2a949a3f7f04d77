//! Exact sparse linear algebra over the rationals.
//!
//! Stored rows are primitive integer vectors (content removed, positive
//! pivot), so elimination is fraction-free on the stored side. Pivots are
//! always the lowest nonzero column, which makes every result deterministic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Sparse rational vector keyed by column index.
pub type SparseVec = BTreeMap<usize, Rational>;

/// Row echelon basis of a growing subspace.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, BTreeMap<usize, BigInt>>,
}

fn primitive_row(v: &SparseVec) -> BTreeMap<usize, BigInt> {
    let mut lcm = BigInt::one();
    for c in v.values() {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: BTreeMap<usize, BigInt> =
        v.iter().map(|(&k, c)| (k, (c * Rational::from_integer(lcm.clone())).to_integer())).collect();
    let mut g = BigInt::zero();
    for x in ints.values() {
        g = g.gcd(x);
    }
    let lead_neg = ints.values().next().map(|x| x.is_negative()).unwrap_or(false);
    if lead_neg {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for x in ints.values_mut() {
            *x = &*x / &g;
        }
    }
    ints
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Reduces `v` until no pivot column appears in its support. The result
    /// is the normal form of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        v.retain(|_, c| !c.is_zero());
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(p) = next else { break };
            let row = &self.rows[&p];
            let factor = &v[&p] / Rational::from_integer(row[&p].clone());
            for (k, x) in row {
                let delta = &factor * Rational::from_integer(x.clone());
                let entry = v.entry(*k).or_insert_with(Rational::zero);
                *entry -= delta;
                if entry.is_zero() {
                    v.remove(k);
                }
            }
            cursor = p + 1;
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.keys().next() {
            None => false,
            Some(&p) => {
                self.rows.insert(p, primitive_row(&r));
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Fully reduced row echelon form with unit pivots, in pivot order.
    pub fn rref(&self) -> Vec<(usize, SparseVec)> {
        let mut rows: Vec<(usize, SparseVec)> = self
            .rows
            .iter()
            .map(|(&p, r)| {
                let lead = Rational::from_integer(r[&p].clone());
                (p, r.iter().map(|(&k, x)| (k, Rational::from_integer(x.clone()) / &lead)).collect())
            })
            .collect();
        // back substitution from the last pivot upwards
        for i in (0..rows.len()).rev() {
            let (p, pivot_row) = rows[i].clone();
            for row in rows.iter_mut().take(i) {
                if let Some(f) = row.1.get(&p).cloned() {
                    for (k, x) in &pivot_row {
                        let e = row.1.entry(*k).or_insert_with(Rational::zero);
                        *e -= &f * x;
                        if e.is_zero() {
                            row.1.remove(k);
                        }
                    }
                }
            }
        }
        rows
    }

    /// Basis of `{x : r · x = 0 for every row r}` in `ncols` unknowns, one
    /// vector per free column (free column set to 1).
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseVec> {
        let rref = self.rref();
        let mut out = Vec::new();
        for free in (0..ncols).filter(|c| !self.rows.contains_key(c)) {
            let mut v = SparseVec::new();
            v.insert(free, Rational::one());
            for (p, row) in &rref {
                if let Some(x) = row.get(&free) {
                    v.insert(*p, -x.clone());
                }
            }
            out.push(v);
        }
        out
    }
}

/// Rank of a list of sparse vectors.
pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut b = EchelonBasis::new();
    for v in vectors {
        b.insert(v);
    }
    b.rank()
}
