//! Brute-force orbifold Hurwitz numbers from monodromy in `S_d`.
//!
//! A cover is encoded by a tuple `(sigma_0, tau_1, .., tau_s, sigma_inf)`
//! with `sigma_0` of cycle type `(r, .., r)`, every `tau_k` a transposition,
//! `sigma_inf` of cycle type `mu`, product equal to the identity, and a
//! transitive generated subgroup. Each cycle of `sigma_inf` additionally
//! carries a label `1..=n` matching its length to `mu_i`. The Hurwitz number
//! is the number of such labeled tuples divided by `d! s!`.
//!
//! This module deliberately depends on nothing but [`crate::rational`], so it
//! stays an independent check on the recursion.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::rational::{factorial, Rational};

/// Estimated elementary steps above which enumeration is refused.
pub const DEFAULT_MAX_STEPS: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid input: {0}")]
    Invalid(&'static str),
    #[error("r = {r} does not divide d = {d}")]
    NotDivisible { r: u64, d: u64 },
    #[error("edge count s = {0} is negative")]
    NegativeEdges(i64),
    #[error("degree {d} exceeds the enumeration limit {limit}")]
    DegreeLimit { d: u64, limit: u64 },
    #[error("edge count {s} exceeds the enumeration limit {limit}")]
    EdgeLimit { s: u64, limit: u64 },
    #[error("search space of about {estimate} steps exceeds the budget of {limit}")]
    Budget { estimate: u128, limit: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_degree: u64,
    pub max_edges: u64,
    pub max_steps: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self { max_degree: 8, max_edges: 8, max_steps: DEFAULT_MAX_STEPS }
    }
}

/// A permutation of `{0, .., d-1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Self((0..d).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Self(images)
    }

    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(d);
        p.0.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles including fixed points, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths sorted descending.
    pub fn cycle_type(&self) -> Vec<u64> {
        let mut t: Vec<u64> = self.cycles().iter().map(|c| c.len() as u64).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        if cycles.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", cycles.concat())
        }
    }
}

/// One counted object: monodromy plus a labeling of the cycles over infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationTuple {
    pub sigma0: Permutation,
    pub taus: Vec<(usize, usize)>,
    pub sigma_inf: Permutation,
    /// `labels[i]` is the cycle of `sigma_inf` carrying label `i + 1`.
    pub labels: Vec<Vec<usize>>,
}

impl PermutationTuple {
    /// `sigma_0 tau_1 .. tau_s sigma_inf`.
    pub fn product(&self) -> Permutation {
        let d = self.sigma0.degree();
        let mut p = self.sigma0.clone();
        for &(a, b) in &self.taus {
            p = p.compose(&Permutation::transposition(d, a, b));
        }
        p.compose(&self.sigma_inf)
    }

    pub fn is_transitive(&self) -> bool {
        let d = self.sigma0.degree();
        let mut uf = UnionFind::new(d);
        for x in 0..d {
            uf.union(x, self.sigma0.apply(x));
        }
        for &(a, b) in &self.taus {
            uf.union(a, b);
        }
        uf.components() == 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// A monodromy counting problem, validated against the enumeration limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationInstance {
    r: u64,
    g: u64,
    mu: Vec<u64>,
    s: u64,
    require_transitive: bool,
}

impl FactorizationInstance {
    pub fn new(r: u64, g: u64, mu: Vec<u64>, limits: EnumerationLimits) -> Result<Self, OracleError> {
        if r == 0 {
            return Err(OracleError::Invalid("r must be at least 1"));
        }
        if mu.is_empty() || mu.contains(&0) {
            return Err(OracleError::Invalid("profile parts must be positive"));
        }
        let d: u64 = mu.iter().sum();
        if d % r != 0 {
            return Err(OracleError::NotDivisible { r, d });
        }
        let s = 2 * g as i64 - 2 + (d / r) as i64 + mu.len() as i64;
        if s < 0 {
            return Err(OracleError::NegativeEdges(s));
        }
        let s = s as u64;
        if d > limits.max_degree {
            return Err(OracleError::DegreeLimit { d, limit: limits.max_degree });
        }
        if s > limits.max_edges {
            return Err(OracleError::EdgeLimit { s, limit: limits.max_edges });
        }
        let inst = Self { r, g, mu, s, require_transitive: true };
        let estimate = inst.estimated_steps();
        if estimate > limits.max_steps as u128 {
            return Err(OracleError::Budget { estimate, limit: limits.max_steps });
        }
        Ok(inst)
    }

    /// Counts disconnected covers too. Only meant for sanity checks.
    pub fn without_transitivity(mut self) -> Self {
        self.require_transitive = false;
        self
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn genus(&self) -> u64 {
        self.g
    }

    pub fn mu(&self) -> &[u64] {
        &self.mu
    }

    pub fn degree(&self) -> u64 {
        self.mu.iter().sum()
    }

    pub fn faces(&self) -> u64 {
        self.degree() / self.r
    }

    pub fn edges(&self) -> u64 {
        self.s
    }

    /// `#sigma_0 * C(d,2)^s * d`: leaves of the search times the per-leaf work.
    pub fn estimated_steps(&self) -> u128 {
        let d = self.degree();
        let m = self.faces();
        let sigma0 = factorial(d) / (num_traits::pow(BigInt::from(self.r), m as usize) * factorial(m));
        let sigma0: u128 = sigma0.try_into().unwrap_or(u128::MAX);
        let pairs = (d * d.saturating_sub(1) / 2).max(1) as u128;
        sigma0
            .saturating_mul(pairs.saturating_pow(self.s as u32))
            .saturating_mul(d.max(1) as u128)
    }

    /// Visits every `(sigma_0, taus, sigma_inf)` with the right cycle types,
    /// identity product and (unless disabled) transitivity.
    fn for_each_factorization(&self, mut visit: impl FnMut(&[usize], &[(usize, usize)], &Permutation)) {
        let d = self.degree() as usize;
        let mut target = self.mu.clone();
        target.sort_unstable_by(|a, b| b.cmp(a));
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect();

        for sigma0 in cycle_type_class(d, self.r as usize) {
            let mut prefix = sigma0.clone();
            let mut taus = Vec::with_capacity(self.s as usize);
            self.descend(&sigma0, &mut prefix, &mut taus, &pairs, &target, &mut visit);
        }
    }

    fn descend(
        &self,
        sigma0: &[usize],
        prefix: &mut Vec<usize>,
        taus: &mut Vec<(usize, usize)>,
        pairs: &[(usize, usize)],
        target: &[u64],
        visit: &mut impl FnMut(&[usize], &[(usize, usize)], &Permutation),
    ) {
        if taus.len() == self.s as usize {
            // sigma_inf = (sigma_0 tau_1 .. tau_s)^{-1}
            let sigma_inf = Permutation(prefix.clone()).inverse();
            if sigma_inf.cycle_type() != target {
                return;
            }
            if self.require_transitive {
                let mut uf = UnionFind::new(sigma0.len());
                for (x, &y) in sigma0.iter().enumerate() {
                    uf.union(x, y);
                }
                for &(a, b) in taus.iter() {
                    uf.union(a, b);
                }
                if uf.components() != 1 {
                    return;
                }
            }
            visit(sigma0, taus, &sigma_inf);
            return;
        }
        for &(a, b) in pairs {
            // right multiplication by (a b) swaps two entries of the image list
            prefix.swap(a, b);
            taus.push((a, b));
            self.descend(sigma0, prefix, taus, pairs, target, visit);
            taus.pop();
            prefix.swap(a, b);
        }
    }

    /// All labeled tuples. Intended for small instances and tests.
    pub fn tuples(&self) -> Vec<PermutationTuple> {
        let mut out = Vec::new();
        self.for_each_factorization(|sigma0, taus, sigma_inf| {
            for labels in labelings(&sigma_inf.cycles(), &self.mu) {
                out.push(PermutationTuple {
                    sigma0: Permutation(sigma0.to_vec()),
                    taus: taus.to_vec(),
                    sigma_inf: sigma_inf.clone(),
                    labels,
                });
            }
        });
        out
    }

    /// Number of labeled tuples.
    pub fn tuple_count(&self) -> BigInt {
        let mut count = BigInt::from(0);
        self.for_each_factorization(|_, _, sigma_inf| {
            count += labelings(&sigma_inf.cycles(), &self.mu).len();
        });
        count
    }
}

/// Every assignment of labels `1..=n` to distinct cycles with
/// `len(cycle of label i) = mu_i`.
fn labelings(cycles: &[Vec<usize>], mu: &[u64]) -> Vec<Vec<Vec<usize>>> {
    fn go(cycles: &[Vec<usize>], mu: &[u64], used: &mut [bool], current: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let label = current.len();
        if label == mu.len() {
            out.push(current.clone());
            return;
        }
        for (c, cycle) in cycles.iter().enumerate() {
            if !used[c] && cycle.len() as u64 == mu[label] {
                used[c] = true;
                current.push(cycle.clone());
                go(cycles, mu, used, current, out);
                current.pop();
                used[c] = false;
            }
        }
    }
    if cycles.len() != mu.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(cycles, mu, &mut vec![false; cycles.len()], &mut Vec::new(), &mut out);
    out
}

/// All permutations of `{0..d-1}` whose cycles all have length `r`.
fn cycle_type_class(d: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, images: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(start) = images.iter().position(Option::is_none) else {
            out.push(images.iter().map(|x| x.expect("filled")).collect());
            return;
        };
        let mut cycle = vec![start];
        extend(r, images, &mut cycle, out);
    }
    fn extend(r: usize, images: &mut Vec<Option<usize>>, cycle: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cycle.len() == r {
            for k in 0..r {
                images[cycle[k]] = Some(cycle[(k + 1) % r]);
            }
            go(r, images, out);
            for &x in cycle.iter() {
                images[x] = None;
            }
            return;
        }
        for x in 0..images.len() {
            if images[x].is_none() && !cycle.contains(&x) {
                cycle.push(x);
                extend(r, images, cycle, out);
                cycle.pop();
            }
        }
    }
    assert!(r >= 1 && d % r == 0);
    let mut out = Vec::new();
    go(r, &mut vec![None; d], &mut out);
    out
}

/// Orbifold Hurwitz number as `#labeled tuples / (d! s!)`.
pub fn count_monodromy_tuples(inst: &FactorizationInstance) -> Rational {
    let norm = factorial(inst.degree()) * factorial(inst.edges());
    Rational::new(inst.tuple_count(), norm)
}
