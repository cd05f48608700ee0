//! Trinomial coefficients `T(n,k) = [v^k](1+v+v²)ⁿ`.
//!
//! These drive the exact coefficient extraction for the height numerator:
//! a single row `n` suffices to read off `[z^{n+1}]` of any expression in
//! `v` via the substitution calculus. Rows satisfy the local recurrence
//! `T(n+1,k) = T(n,k) + T(n,k−1) + T(n,k−2)`, so the triangle is walked
//! with one frontier vector; rows that callers ask for are snapshotted in
//! a cache so that ladder scans pay for the walk only once.

use num::{BigInt, One, Zero};
use std::collections::BTreeMap;

/// One full row of the trinomial triangle: `T(n,k)` for `k = 0..=2n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TrinomialRow {
    n: usize,
    values: Vec<BigInt>,
}

impl TrinomialRow {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Total lookup: zero for `k` outside `0..=2n`.
    pub fn get(&self, k: i64) -> BigInt {
        if k < 0 || k as usize >= self.values.len() {
            BigInt::zero()
        } else {
            self.values[k as usize].clone()
        }
    }
}

fn next_row(values: &[BigInt]) -> Vec<BigInt> {
    let len = values.len() + 2;
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let mut c = BigInt::zero();
        for d in 0..=2usize {
            if k >= d && k - d < values.len() {
                c += &values[k - d];
            }
        }
        out.push(c);
    }
    out
}

/// Row `n` computed from the top of the triangle.
pub fn trinomial_row(n: usize) -> TrinomialRow {
    let mut values = vec![BigInt::one()];
    for _ in 0..n {
        values = next_row(&values);
    }
    TrinomialRow { n, values }
}

/// Single coefficient, zero-extended in `k`. Convenience wrapper that
/// rebuilds row `n` per call; use [`TrinomialTable`] for repeated access.
pub fn trinomial(n: usize, k: i64) -> BigInt {
    trinomial_row(n).get(k)
}

/// On-demand row store. Keeps one frontier row that only ever moves
/// forward, plus snapshots of the rows callers requested; asking for rows
/// in ascending order therefore costs a single walk of the triangle.
#[derive(Default)]
pub struct TrinomialTable {
    frontier_n: usize,
    frontier: Vec<BigInt>,
    cache: BTreeMap<usize, TrinomialRow>,
}

impl TrinomialTable {
    pub fn new() -> Self {
        Self {
            frontier_n: 0,
            frontier: vec![BigInt::one()],
            cache: BTreeMap::new(),
        }
    }

    pub fn row(&mut self, n: usize) -> &TrinomialRow {
        if !self.cache.contains_key(&n) {
            let row = if n >= self.frontier_n {
                while self.frontier_n < n {
                    self.frontier = next_row(&self.frontier);
                    self.frontier_n += 1;
                }
                TrinomialRow {
                    n,
                    values: self.frontier.clone(),
                }
            } else {
                // a request below the frontier after the walk moved on
                trinomial_row(n)
            };
            self.cache.insert(n, row);
        }
        &self.cache[&n]
    }
}
