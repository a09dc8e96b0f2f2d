use petgraph::graph::DiGraph;

use crate::ffmat::FieldCtx;
use crate::scheme::SchemeData;

/// Edge `i -> l` iff `p` does not divide `p_{l b}^i` for some `b`; `i ~ j`
/// iff `i` and `j` share a strongly connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureDigraph {
    pub adjacency: Vec<Vec<usize>>,
    /// Component id per vertex, numbered by smallest member.
    pub scc: Vec<usize>,
}

impl ClosureDigraph {
    pub fn has_edge(&self, i: usize, l: usize) -> bool {
        self.adjacency[i].binary_search(&l).is_ok()
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.scc[i] == self.scc[j]
    }

    /// Components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let count = self.scc.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); count];
        for (v, &c) in self.scc.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Classes of the global partition meeting `subset`, intersected with it.
    pub fn restrict(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        self.components()
            .into_iter()
            .map(|c| c.into_iter().filter(|v| subset.contains(v)).collect::<Vec<_>>())
            .filter(|c| !c.is_empty())
            .collect()
    }
}

pub fn closure_digraph(s: &SchemeData, f: &FieldCtx) -> ClosureDigraph {
    let r = s.rank();
    let adjacency: Vec<Vec<usize>> = (0..r)
        .map(|i| (0..r).filter(|&l| (0..r).any(|b| !f.divides(s.p(l, b, i)))).collect())
        .collect();
    let scc = tarjan_scc(&adjacency);
    ClosureDigraph { adjacency, scc }
}

/// Strongly connected components of a digraph on `0..adj.len()`, returned as
/// a component id per vertex with ids ordered by smallest member.
pub fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<usize> {
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(v, out)| out.iter().map(move |&w| (v as u32, w as u32)));
    let mut graph = DiGraph::<(), ()>::from_edges(edges);
    while graph.node_count() < adj.len() {
        graph.add_node(());
    }
    let mut comps: Vec<Vec<usize>> = petgraph::algo::tarjan_scc(&graph)
        .into_iter()
        .map(|c| c.into_iter().map(|v| v.index()).collect())
        .collect();
    comps.iter_mut().for_each(|c| c.sort_unstable());
    comps.sort();
    let mut id = vec![0; adj.len()];
    for (k, c) in comps.iter().enumerate() {
        for &v in c {
            id[v] = k;
        }
    }
    id
}
