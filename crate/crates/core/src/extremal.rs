//! The extremal family: a complete graph `K_k` with pendant vertices attached
//! one at a time. Pendant edges lie in every spanning tree, so these graphs
//! have exactly `k^(k-2)` spanning trees and chromatic number `k`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::chromatic::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `K_k` on `0..k`, then vertex `k + i` joined to `attachments[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantSpec {
    pub k: usize,
    pub attachments: Vec<usize>,
}

impl PendantSpec {
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::precondition(
                "the core clique needs at least one vertex",
            ));
        }
        for (i, &a) in self.attachments.iter().enumerate() {
            if a >= self.k + i {
                return Err(Error::precondition(format!(
                    "attachment {i} names vertex {a}, but only 0..{} exist at that step",
                    self.k + i
                )));
            }
        }
        Ok(())
    }
}

pub fn generate_extremal(spec: &PendantSpec) -> Result<Graph> {
    spec.validate()?;
    let mut g = Graph::complete(spec.k);
    for &a in &spec.attachments {
        let p = g.add_vertex();
        g.add_edge(a, p)?;
    }
    Ok(g)
}

/// Evidence that a graph is `K_k` plus iterated pendants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalCertificate {
    /// Vertices of the complete core, ascending.
    pub core: Vec<usize>,
    /// `(leaf, attached_to)` in the order the leaves were stripped.
    pub stripped: Vec<(usize, usize)>,
}

impl ExtremalCertificate {
    pub fn k(&self) -> usize {
        self.core.len()
    }

    /// An equivalent [`PendantSpec`] together with the relabeling:
    /// `labels[i]` is the vertex of the certified graph playing spec vertex `i`.
    pub fn to_spec(&self) -> (PendantSpec, Vec<usize>) {
        let k = self.core.len();
        let mut labels = self.core.clone();
        let mut position = std::collections::HashMap::new();
        for (i, &v) in self.core.iter().enumerate() {
            position.insert(v, i);
        }
        let mut attachments = Vec::with_capacity(self.stripped.len());
        // re-adding leaves in reverse stripping order keeps every anchor present
        for &(leaf, anchor) in self.stripped.iter().rev() {
            attachments.push(position[&anchor]);
            position.insert(leaf, k + attachments.len() - 1);
            labels.push(leaf);
        }
        (PendantSpec { k, attachments }, labels)
    }
}

/// Strips degree-1 vertices (smallest index first) while more than two
/// vertices remain, then accepts iff what is left is complete and its size
/// equals the chromatic number of `g`.
pub fn recognize_extremal(g: &Graph) -> Result<Option<ExtremalCertificate>> {
    recognize_with_order(g, |leaves| *leaves.first().expect("non-empty"))
}

/// As [`recognize_extremal`], with `pick` choosing which current leaf to strip.
pub fn recognize_with_order(
    g: &Graph,
    mut pick: impl FnMut(&BTreeSet<usize>) -> usize,
) -> Result<Option<ExtremalCertificate>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut stripped = Vec::new();
    while remaining > 2 && !leaves.is_empty() {
        let leaf = pick(&leaves);
        leaves.remove(&leaf);
        let anchor = *g
            .neighbors(leaf)
            .iter()
            .find(|&&w| alive[w])
            .expect("a leaf has one live neighbor");
        alive[leaf] = false;
        remaining -= 1;
        degree[anchor] -= 1;
        if degree[anchor] == 1 {
            leaves.insert(anchor);
        }
        stripped.push((leaf, anchor));
    }
    let core: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let complete = core.iter().all(|&v| degree[v] + 1 == core.len());
    if !complete || core.len() != chromatic_number(g) {
        return Ok(None);
    }
    Ok(Some(ExtremalCertificate { core, stripped }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_count::count_spanning_trees_bruteforce;
    use crate::witness::bound;

    #[test]
    fn generate_examples() {
        let g = generate_extremal(&PendantSpec {
            k: 4,
            attachments: vec![],
        })
        .unwrap();
        assert_eq!(g, Graph::complete(4));

        let g = generate_extremal(&PendantSpec {
            k: 3,
            attachments: vec![0],
        })
        .unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 4));
        assert_eq!(count_spanning_trees_bruteforce(&g), 3u64);

        let g = generate_extremal(&PendantSpec {
            k: 3,
            attachments: vec![0, 3],
        })
        .unwrap();
        assert!(g.has_edge(3, 4));
        assert_eq!(count_spanning_trees_bruteforce(&g), 3u64);

        assert!(generate_extremal(&PendantSpec {
            k: 3,
            attachments: vec![3]
        })
        .is_err());
        assert!(generate_extremal(&PendantSpec {
            k: 0,
            attachments: vec![]
        })
        .is_err());
    }

    #[test]
    fn recognize_examples() {
        let g = generate_extremal(&PendantSpec {
            k: 4,
            attachments: vec![2, 4],
        })
        .unwrap();
        let cert = recognize_extremal(&g).unwrap().unwrap();
        assert_eq!(cert.core, vec![0, 1, 2, 3]);
        assert_eq!(cert.stripped, vec![(5, 4), (4, 2)]);

        assert!(recognize_extremal(&Graph::cycle(5)).unwrap().is_none());

        let mut g = Graph::complete(4);
        let p = g.add_vertex();
        g.add_edge(0, p).unwrap();
        g.add_edge(1, p).unwrap();
        assert!(recognize_extremal(&g).unwrap().is_none());

        assert!(matches!(
            recognize_extremal(&Graph::new(2)),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn low_chromatic_conventions() {
        let cert = recognize_extremal(&Graph::new(1)).unwrap().unwrap();
        assert_eq!(cert.k(), 1);
        let tree = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        let cert = recognize_extremal(&tree).unwrap().unwrap();
        assert_eq!(cert.k(), 2);
        assert_eq!(recognize_extremal(&Graph::path(2)).unwrap().unwrap().k(), 2);
    }

    #[test]
    fn round_trip_and_counts() {
        // all attachment sequences with k <= 6 and up to 4 pendants
        for k in 1..=6usize {
            let mut specs = vec![vec![]];
            for step in 0..4 {
                let mut next = Vec::new();
                for s in &specs {
                    if s.len() == step {
                        for a in 0..k + step {
                            let mut t: Vec<usize> = s.clone();
                            t.push(a);
                            next.push(t);
                        }
                    }
                }
                specs.extend(next);
            }
            for attachments in specs {
                let spec = PendantSpec { k, attachments };
                let g = generate_extremal(&spec).unwrap();
                let cert = recognize_extremal(&g)
                    .unwrap()
                    .unwrap_or_else(|| panic!("{spec:?} not recognized"));
                // k = 1 with a pendant is K_2: the core is the edge
                let expected_core = if k == 1 && !spec.attachments.is_empty() {
                    2
                } else {
                    k
                };
                assert_eq!(cert.k(), expected_core, "{spec:?}");
                let (back, labels) = cert.to_spec();
                let rebuilt = generate_extremal(&back).unwrap();
                for e in rebuilt.edges() {
                    assert!(g.has_edge(labels[e.u()], labels[e.v()]));
                }
                assert_eq!(rebuilt.edge_count(), g.edge_count());
                assert_eq!(
                    count_spanning_trees_bruteforce(&g),
                    bound(expected_core).unwrap()
                );
            }
        }
    }
}
