//! The base graph of a matroid and the two neighbourhood partitions of each basis.

use crate::graph::Graph;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Vertices are the bases (in the matroid's order); edges join bases at
/// exchange distance one.
#[derive(Clone, Debug)]
pub struct BaseGraph {
    bases: Vec<Subset>,
    graph: Graph,
}

/// One class of a neighbourhood partition, tagged by the element that defines it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighbourClass {
    pub element: usize,
    pub members: Vec<usize>,
}

impl BaseGraph {
    pub fn new(m: &Matroid) -> BaseGraph {
        let bases = m.bases().to_vec();
        let mut graph = Graph::new(bases.len());
        for i in 0..bases.len() {
            for j in i + 1..bases.len() {
                if (bases[i] - bases[j]).len() == 1 {
                    graph.add_edge(i, j);
                }
            }
        }
        BaseGraph { bases, graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn index_of(&self, b: Subset) -> Option<usize> {
        self.bases.binary_search(&b).ok()
    }

    /// `π(B)`: neighbours grouped by the element `x ∈ B` they drop.
    pub fn pi(&self, v: usize) -> Vec<NeighbourClass> {
        let b = self.bases[v];
        b.iter()
            .filter_map(|x| {
                let members: Vec<usize> =
                    self.graph.neighbors(v).iter().copied().filter(|&w| !self.bases[w].contains(x)).collect();
                (!members.is_empty()).then_some(NeighbourClass { element: x, members })
            })
            .collect()
    }

    /// `π′(B)`: neighbours grouped by the element `y ∉ B` they gain.
    pub fn pi_prime(&self, v: usize) -> Vec<NeighbourClass> {
        let b = self.bases[v];
        let union = self.bases.iter().fold(Subset::EMPTY, |acc, &s| acc | s);
        (union - b)
            .iter()
            .filter_map(|y| {
                let members: Vec<usize> =
                    self.graph.neighbors(v).iter().copied().filter(|&w| self.bases[w].contains(y)).collect();
                (!members.is_empty()).then_some(NeighbourClass { element: y, members })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_r, uniform};

    #[test]
    fn u12_single_edge() {
        let bg = BaseGraph::new(&uniform(1, 2));
        assert_eq!(bg.graph().vertex_count(), 2);
        assert_eq!(bg.graph().edges(), vec![(0, 1)]);
    }

    #[test]
    fn u24_regular() {
        let bg = BaseGraph::new(&uniform(2, 4));
        assert_eq!(bg.graph().degree_multiset(), vec![4; 6]);
        for v in 0..6 {
            let pi = bg.pi(v);
            let pi2 = bg.pi_prime(v);
            assert_eq!((pi.len(), pi2.len()), (2, 2));
            for p in &pi {
                for q in &pi2 {
                    let common = p.members.iter().filter(|m| q.members.contains(m)).count();
                    assert!(common <= 1);
                }
            }
        }
    }

    #[test]
    fn r6_connected() {
        let bg = BaseGraph::new(&construct_r(3).unwrap());
        assert!(bg.graph().is_connected());
        assert_eq!(bg.graph().vertex_count(), 18);
    }
}
