//! Simple undirected graphs and the structural primitives used by the
//! witness construction: vertex deletion, identification of vertex sets,
//! cut vertices and the small searches over neighborhoods.
//!
//! Vertices are `0..n`. Every operation that produces a new graph compacts
//! indices in an order-preserving way and reports the index map, so results
//! can always be translated back to the caller's labels.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// An undirected edge stored as `(min, max)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics if `u == v`.
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "an edge needs two distinct endpoints");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn try_new(u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(Edge::new(u, v))
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(self, x: usize) -> Option<usize> {
        if self.0 == x {
            Some(self.1)
        } else if self.1 == x {
            Some(self.0)
        } else {
            None
        }
    }

    /// Relabels both endpoints through `map`.
    pub fn map(self, map: impl Fn(usize) -> usize) -> Edge {
        Edge::new(map(self.0), map(self.1))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

/// One block of a cut-vertex split: an induced subgraph together with the
/// map from its vertex indices back to the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub graph: Graph,
    /// `vertices[i]` is the parent index of piece vertex `i` (ascending).
    pub vertices: Vec<usize>,
}

/// The result of identifying a vertex set.
///
/// `lift` maps each edge of the contracted graph to one original edge. For
/// edges at the merged vertex the original edge whose identified endpoint has
/// the smallest index is chosen; every other edge lifts to itself (relabeled).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionResult {
    pub graph: Graph,
    /// Original vertex -> contracted vertex.
    pub vertex_map: Vec<usize>,
    /// The identified set, sorted.
    pub identified: Vec<usize>,
    /// Contracted index of the merged vertex.
    pub merged: usize,
    lift: BTreeMap<Edge, Edge>,
}

impl ContractionResult {
    pub fn lift_edge(&self, e: Edge) -> Option<Edge> {
        self.lift.get(&e).copied()
    }

    pub fn lift_table(&self) -> &BTreeMap<Edge, Edge> {
        &self.lift
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// All edges in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| Edge(u, v)))
    }

    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = Edge> + '_ {
        self.adj[v].iter().map(move |&w| Edge::new(v, w))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("valid bipartite graph")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("valid Petersen graph")
    }

    /// `G - v`, with remaining vertices renumbered in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, nb)| nb.iter().filter(|&&w| w != v).map(|&w| shift(w)).collect())
            .collect();
        Ok(Graph { adj })
    }

    /// The subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if index[v] != usize::MAX {
                return Err(Error::precondition(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Ok(Graph { adj })
    }

    /// `G / S`: merges `set` into one vertex and drops the resulting loops and
    /// parallel edges. The merged vertex takes the position of `min(set)`; the
    /// other vertices keep their relative order.
    pub fn identify(&self, set: &[usize]) -> Result<ContractionResult> {
        let identified: Vec<usize> = set
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if identified.len() < 2 {
            return Err(Error::precondition(
                "identification needs at least two distinct vertices",
            ));
        }
        for &v in &identified {
            self.check_vertex(v)?;
        }
        let in_set = |x: usize| identified.binary_search(&x).is_ok();
        let root = identified[0];

        let mut vertex_map = vec![0; self.n()];
        let mut next = 0;
        for (v, slot) in vertex_map.iter_mut().enumerate() {
            if in_set(v) && v != root {
                continue;
            }
            *slot = next;
            next += 1;
        }
        let merged = vertex_map[root];
        for &v in &identified {
            vertex_map[v] = merged;
        }

        let mut graph = Graph::new(next);
        let mut lift: BTreeMap<Edge, Edge> = BTreeMap::new();
        for e in self.edges() {
            let (a, b) = (vertex_map[e.0], vertex_map[e.1]);
            if a == b {
                continue;
            }
            let image = Edge::new(a, b);
            graph.adj[a].insert(b);
            graph.adj[b].insert(a);
            // keep the preimage with the smallest identified endpoint
            let side = |f: Edge| if in_set(f.0) { f.0 } else { f.1 };
            lift.entry(image)
                .and_modify(|cur| {
                    if side(e) < side(*cur) {
                        *cur = e;
                    }
                })
                .or_insert(e);
        }

        Ok(ContractionResult {
            graph,
            vertex_map,
            identified,
            merged,
            lift,
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(None)
    }

    fn components_avoiding(&self, skip: Option<usize>) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        if let Some(s) = skip {
            seen[s] = true;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph and the single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Articulation points via DFS lowpoints.
    pub fn cut_vertices(&self) -> Result<BTreeSet<usize>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.n();
        let mut cut = BTreeSet::new();
        if n <= 2 {
            return Ok(cut);
        }
        let neighbors: Vec<Vec<usize>> = self
            .adj
            .iter()
            .map(|s| s.iter().copied().collect())
            .collect();
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut parent = vec![usize::MAX; n];
        let mut root_children = 0;
        let mut clock = 0;
        // (vertex, next neighbor position)
        let mut stack = vec![(0usize, 0usize)];
        order[0] = clock;
        low[0] = clock;
        clock += 1;
        while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
            if let Some(&w) = neighbors[u].get(*pos) {
                *pos += 1;
                if order[w] == usize::MAX {
                    parent[w] = u;
                    order[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    if u == 0 {
                        root_children += 1;
                    }
                    stack.push((w, 0));
                } else if w != parent[u] {
                    low[u] = low[u].min(order[w]);
                }
            } else {
                stack.pop();
                let p = parent[u];
                if p != usize::MAX {
                    low[p] = low[p].min(low[u]);
                    if p != 0 && low[u] >= order[p] {
                        cut.insert(p);
                    }
                }
            }
        }
        if root_children > 1 {
            cut.insert(0);
        }
        Ok(cut)
    }

    /// Splits connected `G` at cut vertex `v`: one induced subgraph per
    /// component of `G - v`, each including `v`.
    pub fn split_at_cut_vertex(&self, v: usize) -> Result<Vec<Piece>> {
        self.check_vertex(v)?;
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let comps = self.components_avoiding(Some(v));
        if comps.len() < 2 {
            return Err(Error::NotCutVertex(v));
        }
        comps
            .into_iter()
            .map(|mut vertices| {
                let at = vertices.binary_search(&v).unwrap_err();
                vertices.insert(at, v);
                Ok(Piece {
                    graph: self.induced_subgraph(&vertices)?,
                    vertices,
                })
            })
            .collect()
    }

    /// Lexicographically first `k`-clique, if any.
    pub fn find_clique(&self, k: usize) -> Option<Vec<usize>> {
        if k > self.n() {
            return None;
        }
        let mut clique = Vec::with_capacity(k);
        let candidates: Vec<usize> = (0..self.n()).filter(|&v| self.degree(v) + 1 >= k).collect();
        self.extend_clique(&mut clique, &candidates, k)
            .then_some(clique)
    }

    fn extend_clique(&self, clique: &mut Vec<usize>, candidates: &[usize], k: usize) -> bool {
        if clique.len() == k {
            return true;
        }
        let need = k - clique.len();
        for (i, &v) in candidates.iter().enumerate() {
            if candidates.len() - i < need {
                break;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| self.adj[v].contains(&w))
                .collect();
            if next.len() + 1 < need {
                continue;
            }
            clique.push(v);
            if self.extend_clique(clique, &next, k) {
                return true;
            }
            clique.pop();
        }
        false
    }

    /// First non-adjacent pair `(a, b)`, `a < b`, within `set`.
    pub fn find_nonadjacent_pair(&self, set: &[usize]) -> Option<(usize, usize)> {
        let s = sorted_unique(set);
        for (i, &a) in s.iter().enumerate() {
            for &b in &s[i + 1..] {
                if !self.has_edge(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Lexicographically first pair of vertex-disjoint non-adjacent pairs
    /// within `set`, i.e. a 2-matching in the complement restricted to `set`.
    pub fn find_two_disjoint_nonadjacent_pairs(
        &self,
        set: &[usize],
    ) -> Option<((usize, usize), (usize, usize))> {
        let s = sorted_unique(set);
        let mut pairs = Vec::new();
        for (i, &a) in s.iter().enumerate() {
            for &b in &s[i + 1..] {
                if !self.has_edge(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if let Some(&second) = pairs[i + 1..]
                .iter()
                .find(|&&(c, d)| c != a && c != b && d != a && d != b)
            {
                return Some(((a, b), second));
            }
        }
        None
    }

    /// Lexicographically first independent triple within `set`.
    pub fn find_nonadjacent_triple(&self, set: &[usize]) -> Option<(usize, usize, usize)> {
        let s = sorted_unique(set);
        for (i, &a) in s.iter().enumerate() {
            for (j, &b) in s.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    continue;
                }
                for &c in &s[j + 1..] {
                    if !self.has_edge(a, c) && !self.has_edge(b, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Breadth-first spanning forest grown from `roots` in order, scanning
    /// neighbors in ascending order. Returns the tree edges, sorted.
    pub fn bfs_forest(&self, roots: &[usize]) -> Vec<Edge> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::new();
        for &r in roots {
            if !seen[r] {
                seen[r] = true;
                queue.push_back(r);
            }
        }
        let mut edges = Vec::new();
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    edges.push(Edge::new(u, w));
                    queue.push_back(w);
                }
            }
        }
        edges.sort_unstable();
        edges
    }
}

fn sorted_unique(set: &[usize]) -> Vec<usize> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges_of(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().map(Edge::endpoints).collect()
    }

    fn two_triangles() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn edge_is_canonical() {
        assert_eq!(Edge::new(3, 1).endpoints(), (1, 3));
        assert!(Edge::try_new(2, 2).is_err());
        assert_eq!(Edge::new(1, 4).other(4), Some(1));
    }

    #[test]
    fn add_edge_rejects_loops_and_range() {
        let mut g = Graph::new(3);
        assert!(matches!(g.add_edge(1, 1), Err(Error::SelfLoop(1))));
        assert!(matches!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn delete_vertex_examples() {
        let k3 = Graph::complete(3).delete_vertex(0).unwrap();
        assert_eq!((k3.n(), edges_of(&k3)), (2, vec![(0, 1)]));

        let p = Graph::path(3).delete_vertex(1).unwrap();
        assert_eq!((p.n(), p.edge_count()), (2, 0));

        // C5 minus 0 leaves 1-2-3-4, renumbered 0-1-2-3.
        let c = Graph::cycle(5).delete_vertex(0).unwrap();
        assert_eq!(c, Graph::path(4));

        assert!(Graph::path(2).delete_vertex(2).is_err());
    }

    #[test]
    fn identify_opposite_corners_of_c4() {
        let cr = Graph::cycle(4).identify(&[0, 2]).unwrap();
        // merged vertex 0, then 1 -> 1, 3 -> 2
        assert_eq!(cr.merged, 0);
        assert_eq!(cr.vertex_map, vec![0, 1, 0, 2]);
        assert_eq!(edges_of(&cr.graph), vec![(0, 1), (0, 2)]);
        assert_eq!(cr.lift_edge(Edge::new(0, 1)), Some(Edge::new(0, 1)));
        assert_eq!(cr.lift_edge(Edge::new(0, 2)), Some(Edge::new(0, 3)));
    }

    #[test]
    fn identify_adjacent_pair_drops_loop() {
        let cr = Graph::complete(3).identify(&[0, 1]).unwrap();
        assert_eq!(edges_of(&cr.graph), vec![(0, 1)]);
        assert_eq!(cr.lift_edge(Edge::new(0, 1)), Some(Edge::new(0, 2)));
    }

    #[test]
    fn identify_path_ends_merges_parallels() {
        let cr = Graph::path(3).identify(&[0, 2]).unwrap();
        assert_eq!(cr.graph.n(), 2);
        assert_eq!(edges_of(&cr.graph), vec![(0, 1)]);
        assert_eq!(cr.lift_edge(Edge::new(0, 1)), Some(Edge::new(0, 1)));
    }

    #[test]
    fn identify_prefers_smallest_identified_endpoint() {
        // 4 is adjacent to 1 and 3; identifying {3, 1} must lift via 1.
        let g = Graph::from_edges(5, [(1, 4), (3, 4), (0, 3)]).unwrap();
        let cr = g.identify(&[3, 1]).unwrap();
        let m = cr.merged;
        let x = cr.vertex_map[4];
        assert_eq!(cr.lift_edge(Edge::new(m, x)), Some(Edge::new(1, 4)));
        assert_eq!(
            cr.lift_edge(Edge::new(m, cr.vertex_map[0])),
            Some(Edge::new(0, 3))
        );
    }

    #[test]
    fn identify_needs_two_vertices() {
        assert!(Graph::cycle(4).identify(&[1]).is_err());
        assert!(Graph::cycle(4).identify(&[1, 1]).is_err());
        assert!(Graph::cycle(4).identify(&[1, 9]).is_err());
    }

    #[test]
    fn connectivity_conventions() {
        assert!(Graph::new(0).is_connected());
        assert!(Graph::new(1).is_connected());
        assert!(Graph::cycle(5).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(Graph::path(3).cut_vertices().unwrap(), BTreeSet::from([1]));
        assert!(Graph::cycle(5).cut_vertices().unwrap().is_empty());
        assert_eq!(two_triangles().cut_vertices().unwrap(), BTreeSet::from([0]));
        assert!(Graph::path(2).cut_vertices().unwrap().is_empty());
        assert!(matches!(
            Graph::new(2).cut_vertices(),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn split_examples() {
        let pieces = Graph::path(3).split_at_cut_vertex(1).unwrap();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].vertices, vec![0, 1]);
        assert_eq!(pieces[1].vertices, vec![1, 2]);
        assert!(pieces.iter().all(|p| p.graph == Graph::path(2)));

        let pieces = two_triangles().split_at_cut_vertex(0).unwrap();
        assert_eq!(pieces.len(), 2);
        assert!(pieces.iter().all(|p| p.graph == Graph::complete(3)));

        // K4 on 0..4 with pendant 4 hung on 2
        let mut g = Graph::complete(4);
        let p = g.add_vertex();
        g.add_edge(2, p).unwrap();
        let pieces = g.split_at_cut_vertex(2).unwrap();
        assert_eq!(pieces[0].vertices, vec![0, 1, 2, 3]);
        assert_eq!(pieces[0].graph, Graph::complete(4));
        assert_eq!(pieces[1].vertices, vec![2, 4]);
        assert_eq!(pieces[1].graph, Graph::path(2));

        assert!(matches!(
            Graph::cycle(4).split_at_cut_vertex(0),
            Err(Error::NotCutVertex(0))
        ));
    }

    #[test]
    fn clique_search() {
        assert_eq!(Graph::complete(4).find_clique(4), Some(vec![0, 1, 2, 3]));
        assert_eq!(Graph::cycle(5).find_clique(3), None);
        assert_eq!(Graph::petersen().find_clique(3), None);
        assert_eq!(Graph::petersen().find_clique(2), Some(vec![0, 1]));
        assert_eq!(two_triangles().find_clique(3), Some(vec![0, 1, 2]));
        assert_eq!(Graph::new(3).find_clique(1), Some(vec![0]));
        assert_eq!(Graph::new(3).find_clique(4), None);
    }

    #[test]
    fn neighborhood_searches() {
        let c5 = Graph::cycle(5);
        let nb: Vec<usize> = c5.neighbors(0).iter().copied().collect();
        assert_eq!(c5.find_nonadjacent_pair(&nb), Some((1, 4)));
        assert_eq!(Graph::complete(4).find_nonadjacent_pair(&[0, 1, 2]), None);
        assert_eq!(
            Graph::path(3).find_nonadjacent_pair(&[2, 1, 0]),
            Some((0, 2))
        );

        assert_eq!(
            Graph::new(4).find_two_disjoint_nonadjacent_pairs(&[0, 1, 2, 3]),
            Some(((0, 1), (2, 3)))
        );
        assert_eq!(
            Graph::complete(4).find_two_disjoint_nonadjacent_pairs(&[0, 1, 2, 3]),
            None
        );
        assert_eq!(
            Graph::cycle(4).find_two_disjoint_nonadjacent_pairs(&[0, 1, 2, 3]),
            Some(((0, 2), (1, 3)))
        );
        // complement is a triangle on {0,1,2}: no 2-matching
        let g = Graph::from_edges(4, [(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.find_two_disjoint_nonadjacent_pairs(&[0, 1, 2, 3]), None);

        assert_eq!(
            Graph::new(3).find_nonadjacent_triple(&[0, 1, 2]),
            Some((0, 1, 2))
        );
        assert_eq!(Graph::complete(3).find_nonadjacent_triple(&[0, 1, 2]), None);
        assert_eq!(
            Graph::cycle(6).find_nonadjacent_triple(&[0, 1, 2, 3, 4, 5]),
            Some((0, 2, 4))
        );
        assert_eq!(
            Graph::cycle(5).find_nonadjacent_triple(&[0, 1, 2, 3, 4]),
            None
        );
    }

    #[test]
    fn bfs_forest_spans() {
        let t = Graph::cycle(5).bfs_forest(&[0]);
        assert_eq!(t.len(), 4);
        let t = Graph::cycle(5).bfs_forest(&[0, 1]);
        assert_eq!(t.len(), 3);
    }
}
