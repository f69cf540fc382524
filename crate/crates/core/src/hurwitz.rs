//! Orbifold Hurwitz numbers from the edge-contraction recursion.
//!
//! The arrowed count `H^r_{g,n}(mu)` (graph side) satisfies a recursion in
//! the edge count `s = 2g - 2 + d/r + n`: contracting one of the `s` edges
//! either merges two vertices, cuts a handle, or separates the graph. The
//! base case is the single graph with one vertex and no edges,
//! `H^r_{0,1}(r) = 1`. The orbifold Hurwitz number is the arrowed count
//! divided by `mu_1 ... mu_n`.
//!
//! [`MemoTable`] is single-threaded: evaluation takes `&mut self`. Build one
//! table per thread if you need parallel evaluation; results are
//! deterministic, so independent tables always agree.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::index::HurwitzIndex;
use crate::rational::{int, Rational};

type Key = (u64, u64, Vec<u64>);

/// Cache of arrowed counts keyed by `(r, g, mu sorted descending)`.
#[derive(Debug, Default, Clone)]
pub struct MemoTable {
    values: HashMap<Key, Rational>,
}

fn edges(r: u64, g: i64, mu: &[u64]) -> Option<i64> {
    let d: u64 = mu.iter().sum();
    (d % r == 0).then(|| 2 * g - 2 + (d / r) as i64 + mu.len() as i64)
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn clear(&mut self) {
        self.values.clear();
    }

    /// Arrowed count `H^r_{g,n}(mu)`.
    pub fn arrowed(&mut self, idx: &HurwitzIndex) -> Rational {
        self.eval(idx.r(), idx.genus() as i64, idx.mu().to_vec())
    }

    /// Orbifold Hurwitz number, the arrowed count over `mu_1 ... mu_n`.
    pub fn orbifold(&mut self, idx: &HurwitzIndex) -> Rational {
        let weight: u64 = idx.mu().iter().product();
        self.arrowed(idx) / int(weight as i64)
    }

    fn eval(&mut self, r: u64, g: i64, mut mu: Vec<u64>) -> Rational {
        if g < 0 {
            return Rational::zero();
        }
        let s = match edges(r, g, &mu) {
            None => return Rational::zero(),
            Some(s) if s < 0 => return Rational::zero(),
            Some(s) => s,
        };
        if s == 0 {
            let base = g == 0 && mu.len() == 1 && mu[0] == r;
            return if base { Rational::one() } else { Rational::zero() };
        }

        mu.sort_unstable_by(|a, b| b.cmp(a));
        let key = (r, g as u64, mu);
        if let Some(v) = self.values.get(&key) {
            return v.clone();
        }
        let mu = key.2.clone();
        let value = self.contract(r, g, s, &mu) / int(s);
        self.values.insert(key, value.clone());
        value
    }

    /// Right-hand side of the recursion, i.e. `s` times the arrowed count.
    fn contract(&mut self, r: u64, g: i64, s: i64, mu: &[u64]) -> Rational {
        let n = mu.len();
        let mut merge = Rational::zero();
        for i in 0..n {
            for j in i + 1..n {
                let mut merged: Vec<u64> = mu.to_vec();
                merged[i] += mu[j];
                merged.remove(j);
                debug_assert_eq!(edges(r, g, &merged), Some(s - 1));
                merge += self.eval(r, g, merged) * int((mu[i] * mu[j]) as i64);
            }
        }

        let mut loops = Rational::zero();
        for i in 0..n {
            let rest: Vec<u64> = mu.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &p)| p).collect();
            let mut bracket = Rational::zero();
            for alpha in 1..mu[i] {
                let beta = mu[i] - alpha;

                let mut cut = vec![alpha, beta];
                cut.extend_from_slice(&rest);
                debug_assert_eq!(edges(r, g - 1, &cut), Some(s - 1));
                bracket += self.eval(r, g - 1, cut);

                // ordered splits ((g1, I), (g2, J)), empty I or J included
                for mask in 0u32..(1 << rest.len()) {
                    let mut left = vec![alpha];
                    let mut right = vec![beta];
                    for (k, &p) in rest.iter().enumerate() {
                        if mask & (1 << k) != 0 {
                            left.push(p);
                        } else {
                            right.push(p);
                        }
                    }
                    if let (Some(s1), Some(s2)) = (edges(r, 0, &left), edges(r, 0, &right)) {
                        debug_assert_eq!(s1 + s2 + 2 * g, s - 1);
                    } else {
                        continue;
                    }
                    for g1 in 0..=g {
                        let a = self.eval(r, g1, left.clone());
                        if a.is_zero() {
                            continue;
                        }
                        bracket += a * self.eval(r, g - g1, right.clone());
                    }
                }
            }
            loops += bracket * int(mu[i] as i64);
        }
        merge + loops / int(2)
    }
}

pub fn arrowed_hurwitz(idx: &HurwitzIndex, memo: &mut MemoTable) -> Rational {
    memo.arrowed(idx)
}

/// Orbifold Hurwitz number `H^r_{g,n}(mu)` evaluated with a fresh cache.
pub fn orbifold_hurwitz(idx: &HurwitzIndex) -> Rational {
    MemoTable::new().orbifold(idx)
}
