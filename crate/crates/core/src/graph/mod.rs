//! Undirected simple graphs over dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are kept as a sorted list of
//! pairs `(u, v)` with `u < v`, alongside sorted adjacency lists and a dense
//! adjacency matrix for O(1) lookups.

mod io;
mod iso;

pub use io::{parse_edge_list, to_dot, to_edge_list};
pub use iso::{are_isomorphic, IsoCertificate};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an arbitrary pair list. Reversed and repeated pairs
    /// collapse; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::EndpointOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(n, set.into_iter().collect()))
    }

    /// `edges` must be sorted, deduplicated, with `u < v < n`.
    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut matrix = vec![false; n * n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            matrix,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_canonical(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_canonical(n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Self::from_canonical(a + b, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    /// Common neighbours of `u` and `v`, ascending.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in ascending order of
    /// the original ids. Returns the graph and the label map (new id → old id).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut labels: Vec<usize> = vertices.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if let Some(&bad) = labels.iter().find(|&&v| v >= self.n) {
            return Err(Error::EndpointOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let mut edges = Vec::new();
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Ok((Self::from_canonical(labels.len(), edges), labels))
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Self::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("permutation keeps edges valid")
    }

    /// Number of edges inside the vertex set `vs`.
    pub fn edges_within(&self, vs: &[usize]) -> usize {
        let mut count = 0;
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.has_edge(u, v) {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Convenience alias matching the module operation name.
pub fn graph_from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, pairs.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{friendship, paley9};

    #[test]
    fn triangle_from_pairs() {
        let g = graph_from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = graph_from_edge_list(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            graph_from_edge_list(2, &[(0, 2)]),
            Err(Error::EndpointOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(graph_from_edge_list(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn isolated_vertices_are_kept() {
        let g = graph_from_edge_list(5, &[(0, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.degree(4), 0);
    }

    #[test]
    fn paley_degrees() {
        let g = paley9();
        assert_eq!(g.edge_count(), 18);
        assert!(g.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn induced_edge_of_triangle() {
        let (h, map) = Graph::complete(3).induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(h, Graph::complete(2));
        assert_eq!(map, vec![0, 1]);
    }

    #[test]
    fn paley_neighbourhoods_are_matchings() {
        let g = paley9();
        for v in 0..9 {
            let (h, _) = g.induced_subgraph(g.neighbors(v)).unwrap();
            assert_eq!(h.vertex_count(), 4);
            assert_eq!(h.edge_count(), 2);
            assert!(h.degrees().iter().all(|&d| d == 1));
        }
    }

    #[test]
    fn friendship_centre_neighbourhood() {
        let g = friendship(2).unwrap();
        let (h, _) = g.induced_subgraph(g.neighbors(0)).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(h.degrees().iter().all(|&d| d == 1));
    }

    #[test]
    fn induced_rejects_out_of_range() {
        assert!(Graph::complete(3).induced_subgraph(&[0, 3]).is_err());
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let g = paley9();
        let all: Vec<usize> = (0..9).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap().0, g);
    }
}
