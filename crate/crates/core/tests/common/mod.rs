//! Brute-force reference implementations. Nothing here calls the library's
//! algorithms; graphs are only read through `n`, `has_edge` and `edges`.

#![allow(dead_code)]

use treebound::{Edge, Graph};

/// Labeled connected graph counts for n = 0..=7.
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 1, 4, 38, 728, 26704, 1866256];

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// Every labeled graph on `n` vertices, connected or not.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn connected(g: &Graph) -> bool {
    connected_without(g, None)
}

/// Depth-first reachability, optionally pretending `skip` is absent.
pub fn connected_without(g: &Graph, skip: Option<usize>) -> bool {
    let n = g.n();
    let live: Vec<usize> = (0..n).filter(|&v| Some(v) != skip).collect();
    let Some(&start) = live.first() else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if Some(w) != skip && !seen[w] && g.has_edge(u, w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    live.iter().all(|&v| seen[v])
}

fn colorable(g: &Graph, k: usize, colors: &mut Vec<usize>) -> bool {
    let v = colors.len();
    if v == g.n() {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|u| !(g.has_edge(u, v) && colors[u] == c)) {
            colors.push(c);
            if colorable(g, k, colors) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

/// Smallest `k` admitting a proper coloring, by plain backtracking.
pub fn min_colors(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&k| colorable(g, k, &mut Vec::new()))
        .unwrap()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

/// `n - 1` distinct host edges with no cycle.
pub fn is_spanning_tree(g: &Graph, edges: &[Edge]) -> bool {
    let n = g.n();
    if edges.len() + 1 != n.max(1) {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for e in edges {
        if !g.has_edge(e.u(), e.v()) {
            return false;
        }
        let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Number of trees among all `(n-1)`-subsets of the edge set.
pub fn count_trees_by_subsets(g: &Graph) -> u64 {
    let edges: Vec<Edge> = g.edges().collect();
    let need = g.n().saturating_sub(1);
    let mut count = 0;
    for mask in 0u64..1 << edges.len() {
        if mask.count_ones() as usize == need {
            let chosen: Vec<Edge> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if is_spanning_tree(g, &chosen) {
                count += 1;
            }
        }
    }
    count
}

/// `k^(k-2)` with `bound(1) = bound(2) = 1`.
pub fn cayley(k: usize) -> u128 {
    if k <= 2 {
        1
    } else {
        (k as u128).pow(k as u32 - 2)
    }
}
