//! Exact vertex coloring.
//!
//! `is_k_colorable` is a DSATUR-ordered branch and bound: a greedy clique is
//! colored up front (which both bounds from below and breaks color symmetry),
//! then the uncolored vertex with the most distinct neighbor colors is branched
//! on, trying used colors first and at most one fresh color.

use crate::graph::Graph;

/// A proper coloring; `colors()[v]` is the color of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    /// Number of distinct colors used.
    pub fn num_colors(&self) -> usize {
        self.0.iter().max().map_or(0, |&c| c + 1)
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.0.len() == g.n() && g.edges().all(|e| self.0[e.u()] != self.0[e.v()])
    }
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    if k >= n {
        return Some(Coloring((0..n).collect()));
    }
    let clique = greedy_clique(g);
    if clique.len() > k {
        return None;
    }
    let mut search = Dsatur::new(g, k);
    for (c, &v) in clique.iter().enumerate() {
        search.assign(v, c);
    }
    search.used = clique.len();
    if search.solve(n - clique.len()) {
        Some(Coloring(
            search
                .colors
                .into_iter()
                .map(|c| c.expect("all colored"))
                .collect(),
        ))
    } else {
        None
    }
}

/// The chromatic number; 0 for the empty graph.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let lower = greedy_clique(g).len();
    let upper = greedy_coloring(g).num_colors();
    (lower..upper)
        .find(|&k| is_k_colorable(g, k).is_some())
        .unwrap_or(upper)
}

/// One-pass DSATUR coloring (no backtracking); an upper bound.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut search = Dsatur::new(g, n.max(1));
    for _ in 0..n {
        let v = search.pick().expect("uncolored vertex remains");
        let c = (0..n)
            .find(|&c| search.neighbor_count[v * search.k + c] == 0)
            .expect("a free color");
        search.assign(v, c);
    }
    Coloring(
        search
            .colors
            .into_iter()
            .map(|c| c.expect("all colored"))
            .collect(),
    )
}

/// Clique grown greedily from a maximum-degree vertex.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let Some(start) = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))) else {
        return Vec::new();
    };
    let mut clique = vec![start];
    let mut candidates: Vec<usize> = g.neighbors(start).iter().copied().collect();
    while !candidates.is_empty() {
        let &best = candidates
            .iter()
            .max_by_key(|&&v| {
                let links = candidates.iter().filter(|&&w| g.has_edge(v, w)).count();
                (links, std::cmp::Reverse(v))
            })
            .expect("non-empty");
        clique.push(best);
        candidates.retain(|&w| w != best && g.has_edge(best, w));
    }
    clique
}

struct Dsatur<'g> {
    g: &'g Graph,
    k: usize,
    colors: Vec<Option<usize>>,
    /// `neighbor_count[v * k + c]`: colored neighbors of `v` with color `c`.
    neighbor_count: Vec<u32>,
    saturation: Vec<usize>,
    used: usize,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        let n = g.n();
        Dsatur {
            g,
            k,
            colors: vec![None; n],
            neighbor_count: vec![0; n * k],
            saturation: vec![0; n],
            used: 0,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        for &w in self.g.neighbors(v) {
            let slot = &mut self.neighbor_count[w * self.k + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v].take().expect("vertex was colored");
        for &w in self.g.neighbors(v) {
            let slot = &mut self.neighbor_count[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Highest saturation, then highest degree, then smallest index.
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn solve(&mut self, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let v = self.pick().expect("uncolored vertex remains");
        if self.saturation[v] >= self.k {
            return false;
        }
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.neighbor_count[v * self.k + c] != 0 {
                continue;
            }
            let prev_used = self.used;
            self.used = self.used.max(c + 1);
            self.assign(v, c);
            if self.solve(remaining - 1) {
                return true;
            }
            self.unassign(v);
            self.used = prev_used;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_colorable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        if n == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        let mut colors = vec![0usize; n];
        loop {
            if g.edges().all(|e| colors[e.u()] != colors[e.v()]) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn odd_cycle() {
        let c5 = Graph::cycle(5);
        assert!(is_k_colorable(&c5, 2).is_none());
        let col = is_k_colorable(&c5, 3).unwrap();
        assert!(col.is_proper(&c5));
        assert!(col.num_colors() <= 3);
        assert_eq!(chromatic_number(&c5), 3);
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let p = Graph::petersen();
        assert!(!brute_force_colorable(&p, 2));
        assert!(brute_force_colorable(&p, 3));
        let col = is_k_colorable(&p, 3).unwrap();
        assert!(col.is_proper(&p) && col.num_colors() <= 3);
        assert!(is_k_colorable(&p, 2).is_none());
        assert_eq!(chromatic_number(&p), 3);
    }

    #[test]
    fn conventions_and_small_cases() {
        assert_eq!(chromatic_number(&Graph::new(0)), 0);
        assert_eq!(chromatic_number(&Graph::new(1)), 1);
        assert_eq!(chromatic_number(&Graph::new(4)), 1);
        assert_eq!(chromatic_number(&Graph::complete(6)), 6);
        assert_eq!(chromatic_number(&Graph::complete_bipartite(2, 3)), 2);
        assert_eq!(chromatic_number(&Graph::path(7)), 2);
        assert!(is_k_colorable(&Graph::new(0), 0).is_some());
        assert!(is_k_colorable(&Graph::new(1), 0).is_none());
    }

    #[test]
    fn agrees_with_brute_force_on_all_graphs_up_to_five_vertices() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &p)| p),
                )
                .unwrap();
                let chi = chromatic_number(&g);
                let brute = (0..=n).find(|&k| brute_force_colorable(&g, k)).unwrap();
                assert_eq!(chi, brute, "n={n} mask={mask:b}");
                if n > 0 {
                    assert!(is_k_colorable(&g, chi).unwrap().is_proper(&g));
                    assert!(chi == 0 || is_k_colorable(&g, chi - 1).is_none());
                }
            }
        }
    }

    #[test]
    fn greedy_is_proper() {
        let g = Graph::petersen();
        assert!(greedy_coloring(&g).is_proper(&g));
    }
}
