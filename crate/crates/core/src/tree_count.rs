//! Exact spanning-tree counting and enumeration.
//!
//! [`count_spanning_trees`] evaluates a Laplacian cofactor with fraction-free
//! (Bareiss) elimination. Every intermediate value of Bareiss elimination is a
//! minor of the input matrix, so the Hadamard bound of the reduced Laplacian
//! decides up front whether `i64`, `i128` or a big integer is wide enough; the
//! result is exact in every case.
//!
//! [`count_spanning_trees_bruteforce`] shares no code with the determinant path
//! and serves as its oracle.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// An exact non-negative count. Serializes as a decimal string.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn pow(base: u64, exp: u32) -> Self {
        BigCount(BigUint::from(base).pow(exp))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_usize(&self) -> Option<usize> {
        self.0.to_usize()
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<u128> for BigCount {
    fn from(v: u128) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl Mul for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 * rhs.0)
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigCount {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(BigCount)
            .map_err(|e| Error::parse(0, format!("invalid count {s:?}: {e}")))
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for BigCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A set of edges forming a spanning tree of some host graph, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpanningTree {
    edges: Vec<Edge>,
}

impl SpanningTree {
    /// Validates `edges` against `host`.
    pub fn new(host: &Graph, edges: Vec<Edge>) -> Result<Self> {
        let tree = SpanningTree::from_edges_unchecked(edges);
        tree.validate(host)?;
        Ok(tree)
    }

    /// Sorts but does not validate.
    pub fn from_edges_unchecked(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        SpanningTree { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks `n - 1` distinct host edges with no cycle.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        let n = host.n();
        let invalid = |why: String| Err(Error::precondition(format!("not a spanning tree: {why}")));
        if n == 0 {
            return if self.edges.is_empty() {
                Ok(())
            } else {
                invalid("edges on an empty graph".into())
            };
        }
        if self.edges.len() != n - 1 {
            return invalid(format!("{} edges for {} vertices", self.edges.len(), n));
        }
        if self.edges.windows(2).any(|w| w[0] == w[1]) {
            return invalid("repeated edge".into());
        }
        let mut dsu = Dsu::new(n);
        for &e in &self.edges {
            if !host.has_edge(e.u(), e.v()) {
                return invalid(format!("{e} is not a host edge"));
            }
            if !dsu.union(e.u(), e.v()) {
                return invalid(format!("{e} closes a cycle"));
            }
        }
        Ok(())
    }
}

/// Union-find with path halving; used by validation and the witness code.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Number of spanning trees via the Matrix-Tree theorem.
pub fn count_spanning_trees(g: &Graph) -> BigCount {
    let n = g.n();
    if n <= 1 {
        return BigCount::one();
    }
    if !g.is_connected() {
        return BigCount::zero();
    }
    // Drop the last row and column of the Laplacian.
    let m = n - 1;
    let mut rows = vec![vec![0i64; m]; m];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = g.degree(i) as i64;
        for &j in g.neighbors(i) {
            if j < m {
                row[j] = -1;
            }
        }
    }

    // Squared Hadamard bound H^2 = prod of squared row norms. Intermediate
    // products are at most H^2, their difference at most 2 H^2.
    let mut h2: Option<u128> = Some(1);
    for row in &rows {
        let norm2: u128 = row.iter().map(|&x| (x * x) as u128).sum();
        h2 = h2.and_then(|h| h.checked_mul(norm2));
    }
    let det = match h2 {
        Some(h) if h < 1 << 61 => BigInt::from(bareiss(rows)),
        Some(h) if h < 1 << 125 => BigInt::from(bareiss(widen::<i128>(rows))),
        _ => bareiss(widen::<BigInt>(rows)),
    };
    let det = det.abs().to_biguint().expect("non-negative");
    BigCount(det)
}

fn widen<T: From<i64>>(rows: Vec<Vec<i64>>) -> Vec<Vec<T>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(T::from).collect())
        .collect()
}

/// The integer operations Bareiss elimination needs.
trait ExactRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn neg(self) -> Self;
    /// `(a * b - c * d) / e`, where the division is known to be exact.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Self;
}

macro_rules! exact_ring_primitive {
    ($t:ty) => {
        impl ExactRing for $t {
            fn zero() -> Self {
                0
            }
            fn one() -> Self {
                1
            }
            fn is_zero(&self) -> bool {
                *self == 0
            }
            fn neg(self) -> Self {
                -self
            }
            fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Self {
                (a * b - c * d) / e
            }
        }
    };
}

exact_ring_primitive!(i64);
exact_ring_primitive!(i128);

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg(self) -> Self {
        -self
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Self {
        (a * b - c * d) / e
    }
}

/// Fraction-free determinant of a square matrix.
fn bareiss<T: ExactRing>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return T::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = T::cross_div(&m[i][j], &m[k][k], &m[i][k], &m[k][j], &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Include/exclude backtracking over the edge list. An edge is included only
/// if it joins two components of the partial forest, and excluded only if the
/// graph of undecided plus included edges stays connected, so every leaf is a
/// spanning tree.
struct Backtrack {
    n: usize,
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
    excluded: Vec<bool>,
    /// Union-find without path compression so unions can be undone.
    parent: Vec<usize>,
    size: Vec<usize>,
    chosen: Vec<usize>,
    seen: Vec<bool>,
    stack: Vec<usize>,
}

impl Backtrack {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let edges: Vec<Edge> = g.edges().collect();
        let mut incident = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            incident[e.u()].push(i);
            incident[e.v()].push(i);
        }
        Backtrack {
            n,
            excluded: vec![false; edges.len()],
            edges,
            incident,
            parent: (0..n).collect(),
            size: vec![1; n],
            chosen: Vec::with_capacity(n),
            seen: vec![false; n],
            stack: Vec::with_capacity(n),
        }
    }

    fn root(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn still_connected(&mut self) -> bool {
        self.seen.iter_mut().for_each(|s| *s = false);
        self.stack.clear();
        self.seen[0] = true;
        self.stack.push(0);
        let mut reached = 1;
        while let Some(u) = self.stack.pop() {
            for &ei in &self.incident[u] {
                if self.excluded[ei] {
                    continue;
                }
                let w = self.edges[ei].other(u).expect("incident edge");
                if !self.seen[w] {
                    self.seen[w] = true;
                    reached += 1;
                    self.stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Visits every spanning tree extending the current state, in
    /// lexicographic order of sorted edge lists. `visit` returns `false` to stop.
    fn run(&mut self, next: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if self.chosen.len() == self.n - 1 {
            return visit(&self.chosen);
        }
        if next == self.edges.len() || self.edges.len() - next < self.n - 1 - self.chosen.len() {
            return true;
        }
        let e = self.edges[next];
        let (ra, rb) = (self.root(e.u()), self.root(e.v()));
        if ra != rb {
            let (big, small) = if self.size[ra] >= self.size[rb] {
                (ra, rb)
            } else {
                (rb, ra)
            };
            self.parent[small] = big;
            self.size[big] += self.size[small];
            self.chosen.push(next);
            let keep_going = self.run(next + 1, visit);
            self.chosen.pop();
            self.size[big] -= self.size[small];
            self.parent[small] = small;
            if !keep_going {
                return false;
            }
        }
        self.excluded[next] = true;
        let keep_going = if self.still_connected() {
            self.run(next + 1, visit)
        } else {
            true
        };
        self.excluded[next] = false;
        keep_going
    }
}

/// Number of spanning trees by exhaustive backtracking. Exponential; meant
/// for graphs up to about ten vertices.
pub fn count_spanning_trees_bruteforce(g: &Graph) -> BigCount {
    let n = g.n();
    if n <= 1 {
        return BigCount::one();
    }
    if !g.is_connected() {
        return BigCount::zero();
    }
    let mut count: u128 = 0;
    Backtrack::new(g).run(0, &mut |_| {
        count += 1;
        true
    });
    BigCount::from(count)
}

/// All spanning trees in lexicographic order of their sorted edge lists, or
/// the first `limit` of them.
pub fn enumerate_spanning_trees(g: &Graph, limit: Option<usize>) -> Vec<SpanningTree> {
    let n = g.n();
    if limit == Some(0) {
        return Vec::new();
    }
    if n <= 1 {
        return vec![SpanningTree { edges: Vec::new() }];
    }
    if !g.is_connected() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut bt = Backtrack::new(g);
    let edges = bt.edges.clone();
    bt.run(0, &mut |chosen| {
        out.push(SpanningTree {
            edges: chosen.iter().map(|&i| edges[i]).collect(),
        });
        limit.is_none_or(|l| out.len() < l)
    });
    out
}

/// All `k^(k-2)` labeled trees on `0..k`, decoded from Prüfer sequences in
/// lexicographic sequence order.
pub fn cayley_complete_trees(k: usize) -> Result<Vec<SpanningTree>> {
    Ok(CayleyTrees::new(k)?.collect())
}

/// Lazy form of [`cayley_complete_trees`].
#[derive(Clone, Debug)]
pub struct CayleyTrees {
    k: usize,
    seq: Vec<usize>,
    done: bool,
}

impl CayleyTrees {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::precondition(
                "complete graph needs at least one vertex",
            ));
        }
        Ok(CayleyTrees {
            k,
            seq: vec![0; k.saturating_sub(2)],
            done: false,
        })
    }
}

impl Iterator for CayleyTrees {
    type Item = SpanningTree;

    fn next(&mut self) -> Option<SpanningTree> {
        if self.done {
            return None;
        }
        let tree = match self.k {
            1 => SpanningTree { edges: Vec::new() },
            2 => SpanningTree {
                edges: vec![Edge::new(0, 1)],
            },
            k => prufer_decode(&self.seq, k),
        };
        // odometer, last position fastest
        self.done = true;
        for slot in self.seq.iter_mut().rev() {
            *slot += 1;
            if *slot < self.k {
                self.done = false;
                break;
            }
            *slot = 0;
        }
        Some(tree)
    }
}

/// Decodes a Prüfer sequence of length `k - 2` over `0..k`.
pub fn prufer_decode(seq: &[usize], k: usize) -> SpanningTree {
    debug_assert_eq!(seq.len() + 2, k);
    let mut degree = vec![1usize; k];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..k).filter(|&v| degree[v] == 1).collect();
    for &x in seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push(Edge::new(leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push(Edge::new(a, b));
    SpanningTree::from_edges_unchecked(edges)
}
