//! Explicit witnesses for the spanning-tree lower bound.
//!
//! [`construct_witnesses`] runs the inductive argument as a recursive
//! algorithm. Given a connected graph `G` whose chromatic number is at least
//! `k`, it returns at least `k^(k-2)` pairwise distinct spanning trees of `G`.
//! The cases are tried in this order:
//!
//! 1. `k <= 2`: one breadth-first spanning tree.
//! 2. A cut vertex `v`: some block at `v` is not `(k-1)`-colorable; recurse on
//!    it and complete every tree with fixed trees of the other blocks.
//! 3. A vertex `v` of degree at most `k - 2`: `G - v` is still not
//!    `(k-1)`-colorable; recurse and attach `v` by each of its edges.
//! 4. A `k`-clique: all Cayley trees of the clique, each completed by one fixed
//!    forest.
//! 5. Otherwise take the first vertex `v` of minimum degree `d >= k - 1` with
//!    incident edges `F`. Trees of `G - v` (for `k - 1`) plus one edge of `F`
//!    give the first family. Further trees contain at least two edges of `F`
//!    and come from contracting non-adjacent neighbors of `v` in `G - v`:
//!    a pair when `d = k - 1`, a triple when the neighborhood has no two
//!    disjoint non-adjacent pairs, and otherwise two disjoint pairs with
//!    `k - 1` each.
//!
//! A tree of a contraction lifts to a spanning forest of `G - v` in which each
//! identified vertex lies in its own component; adding edges from `v` to the
//! right components closes it into a spanning tree of `G`.
//!
//! Every level validates its trees, deduplicates them and checks the count
//! against the bound. A failed check is reported as
//! [`Error::ProofInvariantViolated`].

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chromatic::is_k_colorable;
use crate::error::{Error, Result};
use crate::format::describe;
use crate::graph::{ContractionResult, Edge, Graph};
use crate::tree_count::{BigCount, CayleyTrees, Dsu, SpanningTree};

/// Which step of the construction produced a tree (at the top level).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Case {
    Base,
    CutVertex,
    LowDegree,
    Clique,
    ContractPair,
    ContractTriple,
    TwoPairs,
    SingleFEdge,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Case::Base => "BASE",
            Case::CutVertex => "CUT_VERTEX",
            Case::LowDegree => "LOW_DEGREE",
            Case::Clique => "CLIQUE",
            Case::ContractPair => "CONTRACT_PAIR",
            Case::ContractTriple => "CONTRACT_TRIPLE",
            Case::TwoPairs => "TWO_PAIRS",
            Case::SingleFEdge => "SINGLE_F_EDGE",
        };
        f.pad(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessTree {
    #[serde(serialize_with = "serialize_tree")]
    pub tree: SpanningTree,
    pub provenance: Case,
}

fn serialize_tree<S: serde::Serializer>(
    t: &SpanningTree,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for e in t.edges() {
        seq.serialize_element(&[e.u(), e.v()])?;
    }
    seq.end()
}

/// Distinct spanning trees certifying `tau(G) >= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSet {
    pub trees: Vec<WitnessTree>,
    pub k_lb: usize,
    pub bound: BigCount,
}

impl WitnessSet {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn counts_by_case(&self) -> BTreeMap<Case, usize> {
        let mut counts = BTreeMap::new();
        for t in &self.trees {
            *counts.entry(t.provenance).or_insert(0) += 1;
        }
        counts
    }
}

/// `k^(k-2)`, with `bound(1) = bound(2) = 1`.
pub fn bound(k: usize) -> Result<BigCount> {
    match k {
        0 => Err(Error::precondition("the bound is defined for k >= 1")),
        1 | 2 => Ok(BigCount::one()),
        _ => Ok(BigCount::pow(k as u64, (k - 2) as u32)),
    }
}

/// Maps a spanning tree of `cr.graph` to a forest of the graph before
/// contraction and checks that the identified vertices land in distinct
/// components, one component each.
pub fn lift_tree(cr: &ContractionResult, t: &SpanningTree) -> Result<Vec<Edge>> {
    t.validate(&cr.graph)?;
    let lifted: Vec<Edge> = t
        .edges()
        .iter()
        .map(|&e| {
            cr.lift_edge(e).ok_or_else(|| {
                Error::precondition(format!("{e} is not an edge of the contracted graph"))
            })
        })
        .collect::<Result<_>>()?;

    let n = cr.vertex_map.len();
    let violated = |reason: String| Error::ProofInvariantViolated {
        graph: describe(&cr.graph),
        reason,
    };
    let mut dsu = Dsu::new(n);
    for &e in &lifted {
        if !dsu.union(e.u(), e.v()) {
            return Err(violated(format!("lifted edge {e} closes a cycle")));
        }
    }
    let components = n - lifted.len();
    if components != cr.identified.len() {
        return Err(violated(format!(
            "lifted forest has {components} components, expected {}",
            cr.identified.len()
        )));
    }
    let mut roots: Vec<usize> = cr.identified.iter().map(|&x| dsu.find(x)).collect();
    roots.sort_unstable();
    roots.dedup();
    if roots.len() != cr.identified.len() {
        return Err(violated("identified vertices share a component".into()));
    }
    let mut lifted = lifted;
    lifted.sort_unstable();
    Ok(lifted)
}

/// At least `bound(k_lb)` distinct spanning trees of `g`.
///
/// The caller guarantees `chromatic_number(g) >= k_lb`. With `cap`, at most
/// `max(cap, bound(k_lb))` trees are produced.
pub fn construct_witnesses(g: &Graph, k_lb: usize, cap: Option<usize>) -> Result<WitnessSet> {
    let bound = bound(k_lb)?;
    if g.n() == 0 {
        return Err(Error::precondition("the empty graph has no witnesses"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let limit = match (cap, bound.to_usize()) {
        (Some(c), Some(b)) => Some(c.max(b)),
        _ => None,
    };
    let found = Builder { limit }.build(g, k_lb)?;
    let trees = found
        .into_iter()
        .map(|(edges, provenance)| WitnessTree {
            tree: SpanningTree::from_edges_unchecked(edges),
            provenance,
        })
        .collect();
    Ok(WitnessSet { trees, k_lb, bound })
}

type Tree = Vec<Edge>;

/// Trees collected at one recursion level, deduplicated, stopping at `limit`.
struct Family {
    trees: Vec<(Tree, Case)>,
    seen: HashSet<Tree>,
    limit: Option<usize>,
}

impl Family {
    fn new(limit: Option<usize>) -> Self {
        Family {
            trees: Vec::new(),
            seen: HashSet::new(),
            limit,
        }
    }

    fn full(&self) -> bool {
        self.limit.is_some_and(|l| self.trees.len() >= l)
    }

    fn push(&mut self, mut tree: Tree, case: Case) {
        if self.full() {
            return;
        }
        tree.sort_unstable();
        if self.seen.insert(tree.clone()) {
            self.trees.push((tree, case));
        }
    }
}

struct Builder {
    limit: Option<usize>,
}

/// Index in `G` of vertex `x` of `G - v`.
fn restore(v: usize) -> impl Fn(usize) -> usize {
    move |x| if x >= v { x + 1 } else { x }
}

impl Builder {
    fn build(&self, g: &Graph, k: usize) -> Result<Vec<(Tree, Case)>> {
        if g.n() < k {
            return Err(violation(
                g,
                format!("{} vertices cannot need {k} colors", g.n()),
            ));
        }
        let mut family = Family::new(self.limit);
        if k <= 2 {
            family.push(g.bfs_forest(&[0]), Case::Base);
        } else if let Some(&v) = g.cut_vertices()?.first() {
            self.cut_vertex(g, k, v, &mut family)?;
        } else if let Some(v) = (0..g.n()).find(|&v| g.degree(v) + 2 <= k) {
            self.low_degree(g, k, v, &mut family)?;
        } else if let Some(clique) = g.find_clique(k) {
            self.clique(g, k, &clique, &mut family)?;
        } else {
            self.contract(g, k, &mut family)?;
        }
        self.check(g, k, family)
    }

    fn check(&self, g: &Graph, k: usize, family: Family) -> Result<Vec<(Tree, Case)>> {
        for (tree, _) in &family.trees {
            SpanningTree::from_edges_unchecked(tree.clone())
                .validate(g)
                .map_err(|e| violation(g, format!("emitted an invalid tree: {e}")))?;
        }
        let needed = bound(k)?;
        if BigCount::from(family.trees.len()) < needed {
            return Err(violation(
                g,
                format!(
                    "only {} trees for k = {k}, need {needed}",
                    family.trees.len()
                ),
            ));
        }
        Ok(family.trees)
    }

    fn cut_vertex(&self, g: &Graph, k: usize, v: usize, family: &mut Family) -> Result<()> {
        let pieces = g.split_at_cut_vertex(v)?;
        let chosen = pieces
            .iter()
            .position(|p| is_k_colorable(&p.graph, k - 1).is_none())
            .ok_or_else(|| {
                violation(
                    g,
                    format!("every block at cut vertex {v} is {}-colorable", k - 1),
                )
            })?;
        let fixed: Vec<Edge> = pieces
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != chosen)
            .flat_map(|(_, p)| {
                p.graph
                    .bfs_forest(&[0])
                    .into_iter()
                    .map(|e| e.map(|x| p.vertices[x]))
            })
            .collect();
        let piece = &pieces[chosen];
        for (t, _) in self.build(&piece.graph, k)? {
            let mut tree: Tree = t.iter().map(|e| e.map(|x| piece.vertices[x])).collect();
            tree.extend_from_slice(&fixed);
            family.push(tree, Case::CutVertex);
            if family.full() {
                break;
            }
        }
        Ok(())
    }

    fn low_degree(&self, g: &Graph, k: usize, v: usize, family: &mut Family) -> Result<()> {
        let back = restore(v);
        for (t, _) in self.build(&g.delete_vertex(v)?, k)? {
            let base: Tree = t.iter().map(|e| e.map(&back)).collect();
            for f in g.incident_edges(v) {
                let mut tree = base.clone();
                tree.push(f);
                family.push(tree, Case::LowDegree);
            }
            if family.full() {
                break;
            }
        }
        Ok(())
    }

    fn clique(&self, g: &Graph, k: usize, clique: &[usize], family: &mut Family) -> Result<()> {
        let rest = g.bfs_forest(clique);
        for t in CayleyTrees::new(k)? {
            let mut tree: Tree = t.edges().iter().map(|e| e.map(|x| clique[x])).collect();
            tree.extend_from_slice(&rest);
            family.push(tree, Case::Clique);
            if family.full() {
                break;
            }
        }
        Ok(())
    }

    fn contract(&self, g: &Graph, k: usize, family: &mut Family) -> Result<()> {
        let v = (0..g.n())
            .min_by_key(|&x| (g.degree(x), x))
            .expect("non-empty graph");
        let d = g.degree(v);
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().collect();
        let back = restore(v);
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let minus_v = g.delete_vertex(v)?;

        // Trees of G - v with exactly one edge at v.
        for (t, _) in self.build(&minus_v, k - 1)? {
            let base: Tree = t.iter().map(|e| e.map(&back)).collect();
            for &w in &nbrs {
                let mut tree = base.clone();
                tree.push(Edge::new(v, w));
                family.push(tree, Case::SingleFEdge);
            }
            if family.full() {
                return Ok(());
            }
        }

        let excluding = |skip: &[usize]| -> Vec<usize> {
            nbrs.iter().copied().filter(|x| !skip.contains(x)).collect()
        };

        if d + 1 == k {
            let (a, b) = g.find_nonadjacent_pair(&nbrs).ok_or_else(|| {
                violation(
                    g,
                    format!("neighbors of {v} form a clique but no {k}-clique was found"),
                )
            })?;
            let cr = minus_v.identify(&[shift(a), shift(b)])?;
            self.extend_lifted(
                g,
                v,
                &cr,
                k,
                &[a, b],
                &excluding(&[a, b]),
                Case::ContractPair,
                family,
            )?;
        } else if let Some(((a, b), (c, d2))) = g.find_two_disjoint_nonadjacent_pairs(&nbrs) {
            let ab = minus_v.identify(&[shift(a), shift(b)])?;
            self.extend_lifted(
                g,
                v,
                &ab,
                k - 1,
                &[a, b],
                &excluding(&[a, b]),
                Case::TwoPairs,
                family,
            )?;
            if family.full() {
                return Ok(());
            }
            let cd = minus_v.identify(&[shift(c), shift(d2)])?;
            // these avoid both av and bv, so they differ from the previous family
            self.extend_lifted(
                g,
                v,
                &cd,
                k - 1,
                &[c, d2],
                &excluding(&[a, b, c, d2]),
                Case::TwoPairs,
                family,
            )?;
        } else {
            if d != k {
                return Err(violation(
                    g,
                    format!("vertex {v} has degree {d} > {k} but no two disjoint non-adjacent neighbor pairs"),
                ));
            }
            let (a, b, c) = g.find_nonadjacent_triple(&nbrs).ok_or_else(|| {
                violation(
                    g,
                    format!("no independent triple among the neighbors of {v}"),
                )
            })?;
            let cr = minus_v.identify(&[shift(a), shift(b), shift(c)])?;
            self.extend_lifted(
                g,
                v,
                &cr,
                k,
                &[a, b, c],
                &excluding(&[a, b, c]),
                Case::ContractTriple,
                family,
            )?;
        }
        Ok(())
    }

    /// Recurse on the contraction `cr` of `G - v`, lift each tree to a forest
    /// of `G - v` and close it through `v`: either with all edges from `v` to
    /// the identified vertices, or with one edge `vx` (`x` in `others`) plus
    /// the edges to the identified vertices outside the component of `x`.
    #[allow(clippy::too_many_arguments)]
    fn extend_lifted(
        &self,
        g: &Graph,
        v: usize,
        cr: &ContractionResult,
        k: usize,
        identified: &[usize],
        others: &[usize],
        case: Case,
        family: &mut Family,
    ) -> Result<()> {
        let back = restore(v);
        for (t, _) in self.build(&cr.graph, k)? {
            let forest: Tree = lift_tree(cr, &SpanningTree::from_edges_unchecked(t))?
                .into_iter()
                .map(|e| e.map(&back))
                .collect();
            let mut dsu = Dsu::new(g.n());
            for e in &forest {
                dsu.union(e.u(), e.v());
            }

            let mut tree = forest.clone();
            tree.extend(identified.iter().map(|&t| Edge::new(v, t)));
            family.push(tree, case);

            for &x in others {
                let home = dsu.find(x);
                let joined: Vec<usize> = identified
                    .iter()
                    .copied()
                    .filter(|&t| dsu.find(t) != home)
                    .collect();
                if joined.len() + 1 != identified.len() {
                    return Err(violation(
                        g,
                        format!("vertex {x} is not in exactly one identified component"),
                    ));
                }
                let mut tree = forest.clone();
                tree.push(Edge::new(v, x));
                tree.extend(joined.into_iter().map(|t| Edge::new(v, t)));
                family.push(tree, case);
            }
            if family.full() {
                break;
            }
        }
        Ok(())
    }
}

fn violation(g: &Graph, reason: String) -> Error {
    Error::ProofInvariantViolated {
        graph: describe(g),
        reason,
    }
}
