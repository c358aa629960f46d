//! Local linearity and the triangle decomposition.
//!
//! A graph is locally linear when every neighbourhood induces a perfect
//! matching. For graphs without isolated vertices this is the same as every
//! edge lying in exactly one triangle. [`check_locally_linear`] evaluates both
//! characterisations and refuses to answer if they disagree.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Three vertex ids, ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle(pub [usize; 3]);

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        Triangle(v)
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// Vertices shared with `other`, ascending.
    pub fn shared(&self, other: &Triangle) -> Vec<usize> {
        self.0
            .iter()
            .copied()
            .filter(|&v| other.contains(v))
            .collect()
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}

/// Why a graph fails to be locally linear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    IsolatedVertex(usize),
    /// An edge lying in zero or several triangles.
    EdgeTriangleCount {
        edge: (usize, usize),
        triangles: usize,
    },
    /// A vertex whose neighbourhood is not 1-regular; `vertex_in_nbhd` is a
    /// neighbour with `degree` neighbours inside the neighbourhood.
    IrregularNeighborhood {
        vertex: usize,
        vertex_in_nbhd: usize,
        degree: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IsolatedVertex(v) => write!(f, "isolated vertex {v}"),
            Violation::EdgeTriangleCount {
                edge: (u, v),
                triangles,
            } => write!(f, "edge ({u},{v}) in {triangles} triangles"),
            Violation::IrregularNeighborhood {
                vertex,
                vertex_in_nbhd,
                degree,
            } => write!(
                f,
                "neighbourhood of {vertex} not 1-regular: {vertex_in_nbhd} has degree {degree}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearityVerdict {
    pub is_locally_linear: bool,
    pub witness: Option<Violation>,
}

/// All triangles, sorted lexicographically. The position in this list is the
/// triangle id used everywhere downstream.
pub fn enumerate_triangles(g: &Graph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        for w in g.common_neighbors(u, v) {
            // u < v already; keep each triangle once, from its smallest edge
            if w > v {
                out.push(Triangle([u, v, w]));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Neighbourhood characterisation: every vertex has a nonempty neighbourhood
/// that induces a 1-regular graph.
pub fn check_by_neighborhoods(g: &Graph) -> Option<Violation> {
    for v in 0..g.vertex_count() {
        let nbhd = g.neighbors(v);
        if nbhd.is_empty() {
            return Some(Violation::IsolatedVertex(v));
        }
        for &w in nbhd {
            let degree = nbhd.iter().filter(|&&x| g.has_edge(w, x)).count();
            if degree != 1 {
                return Some(Violation::IrregularNeighborhood {
                    vertex: v,
                    vertex_in_nbhd: w,
                    degree,
                });
            }
        }
    }
    None
}

/// Edge characterisation: no isolated vertex, and every edge lies in exactly
/// one triangle. Reports the isolated vertex first, then the smallest bad edge.
pub fn check_by_edges(g: &Graph) -> Option<Violation> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Some(Violation::IsolatedVertex(v));
    }
    g.edges().iter().find_map(|&(u, v)| {
        let triangles = g.common_neighbors(u, v).len();
        (triangles != 1).then_some(Violation::EdgeTriangleCount {
            edge: (u, v),
            triangles,
        })
    })
}

/// # Panics
///
/// If the two characterisations disagree, which would contradict the
/// equivalence they encode.
pub fn check_locally_linear(g: &Graph) -> LinearityVerdict {
    let by_edges = check_by_edges(g);
    let by_nbhd = check_by_neighborhoods(g);
    assert_eq!(
        by_edges.is_none(),
        by_nbhd.is_none(),
        "local linearity characterisations disagree: edges={by_edges:?} neighbourhoods={by_nbhd:?}"
    );
    LinearityVerdict {
        is_locally_linear: by_edges.is_none(),
        witness: by_edges,
    }
}

pub(crate) fn require_locally_linear(g: &Graph) -> Result<()> {
    match check_locally_linear(g).witness {
        None => Ok(()),
        Some(w) => Err(Error::NotLocallyLinear(w)),
    }
}

/// The n×m vertex–triangle incidence matrix, stored column-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    triangles: Vec<Triangle>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn get(&self, vertex: usize, triangle: usize) -> bool {
        self.triangles[triangle].contains(vertex)
    }

    pub fn row_sum(&self, vertex: usize) -> usize {
        self.triangles.iter().filter(|t| t.contains(vertex)).count()
    }

    pub fn col_sum(&self, triangle: usize) -> usize {
        (0..self.rows).filter(|&v| self.get(v, triangle)).count()
    }

    /// Dense 0/1 entries, row-major.
    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|v| (0..self.cols()).map(|t| self.get(v, t) as u8).collect())
            .collect()
    }
}

pub fn triangle_incidence(g: &Graph) -> Result<IncidenceMatrix> {
    require_locally_linear(g)?;
    Ok(IncidenceMatrix {
        rows: g.vertex_count(),
        triangles: enumerate_triangles(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        friendship, paley9, random_locally_linear, random_triangular_cactus, triangular_snake,
    };
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Brute force over all vertex triples.
    fn triangles_oracle(g: &Graph) -> Vec<Triangle> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        out.push(Triangle([a, b, c]));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(
            enumerate_triangles(&Graph::complete(3)),
            vec![Triangle([0, 1, 2])]
        );
        assert_eq!(enumerate_triangles(&paley9()).len(), 6);
        assert_eq!(enumerate_triangles(&triangular_snake(5).unwrap()).len(), 5);
        assert_eq!(enumerate_triangles(&Graph::complete(5)).len(), 10);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.gen_range(3..12);
            let pairs: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let g = Graph::from_edges(n, pairs).unwrap();
            assert_eq!(enumerate_triangles(&g), triangles_oracle(&g));
        }
    }

    #[test]
    fn verdicts() {
        assert!(check_locally_linear(&Graph::complete(3)).is_locally_linear);
        assert!(check_locally_linear(&paley9()).is_locally_linear);
        let k4 = check_locally_linear(&Graph::complete(4));
        assert!(!k4.is_locally_linear);
        assert_eq!(
            k4.witness,
            Some(Violation::EdgeTriangleCount {
                edge: (0, 1),
                triangles: 2
            })
        );
        assert_eq!(k4.witness.unwrap().to_string(), "edge (0,1) in 2 triangles");
    }

    #[test]
    fn isolated_vertex_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let v = check_locally_linear(&g);
        assert_eq!(v.witness, Some(Violation::IsolatedVertex(3)));
        assert!(matches!(
            check_by_neighborhoods(&g),
            Some(Violation::IsolatedVertex(3))
        ));
    }

    #[test]
    fn triangle_free_edges_are_rejected() {
        let v = check_locally_linear(&Graph::path(3));
        assert_eq!(
            v.witness,
            Some(Violation::EdgeTriangleCount {
                edge: (0, 1),
                triangles: 0
            })
        );
    }

    #[test]
    fn characterisations_agree_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut positives = 0;
        for i in 0..400 {
            let g = if i % 2 == 0 {
                let n = rng.gen_range(1..10);
                let p = rng.gen_range(0.1..0.9);
                let pairs: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(p))
                    .collect();
                Graph::from_edges(n, pairs).unwrap()
            } else {
                // perturb a locally linear graph by toggling one pair
                let g = random_locally_linear(6, 0.4, i).unwrap();
                let n = g.vertex_count();
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let mut pairs: Vec<_> = g.edges().to_vec();
                if u != v && i % 4 == 1 {
                    let e = (u.min(v), u.max(v));
                    if let Some(pos) = pairs.iter().position(|&x| x == e) {
                        pairs.remove(pos);
                    } else {
                        pairs.push(e);
                    }
                }
                Graph::from_edges(n, pairs).unwrap()
            };
            let a = check_by_neighborhoods(&g).is_none();
            let b = check_by_edges(&g).is_none();
            assert_eq!(a, b, "{g:?}");
            positives += a as usize;
        }
        assert!(positives > 50);
    }

    #[test]
    fn incidence_shapes() {
        let b = triangle_incidence(&Graph::complete(3)).unwrap();
        assert_eq!(b.to_dense(), vec![vec![1], vec![1], vec![1]]);

        let b = triangle_incidence(&paley9()).unwrap();
        assert_eq!((b.rows(), b.cols()), (9, 6));
        assert!((0..9).all(|v| b.row_sum(v) == 2));
        assert!((0..6).all(|t| b.col_sum(t) == 3));

        let b = triangle_incidence(&friendship(3).unwrap()).unwrap();
        assert_eq!((b.rows(), b.cols()), (7, 3));
        assert_eq!(b.row_sum(0), 3);
        assert!((1..7).all(|v| b.row_sum(v) == 1));
    }

    #[test]
    fn incidence_requires_local_linearity() {
        assert!(matches!(
            triangle_incidence(&Graph::complete(4)),
            Err(Error::NotLocallyLinear(_))
        ));
    }

    #[test]
    fn degrees_even_and_edges_three_per_triangle() {
        for seed in 0..30 {
            let g = random_triangular_cactus(8, seed).unwrap();
            let b = triangle_incidence(&g).unwrap();
            for v in 0..g.vertex_count() {
                assert_eq!(g.degree(v) % 2, 0);
                assert_eq!(g.degree(v) / 2, b.row_sum(v));
            }
            assert_eq!(g.edge_count(), 3 * b.cols());
        }
    }
}
