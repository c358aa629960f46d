//! Example graphs and seeded random locally linear graphs.
//!
//! Random families draw from a ChaCha8 stream seeded with the 64-bit seed; one
//! stream per generated graph, consumed in construction order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Paley graph on GF(9) = GF(3)[i]/(i² + 1). Vertex `3a + b` is `a + b·i`;
/// two vertices are adjacent when their difference is a nonzero square.
pub fn paley9() -> Graph {
    let mul = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        // (a + bi)(c + di) with i² = -1
        ((a * c + 2 * b * d) % 3, (a * d + b * c) % 3)
    };
    let elems: Vec<(usize, usize)> = (0..9).map(|v| (v / 3, v % 3)).collect();
    let mut squares = [false; 9];
    for &e in &elems[1..] {
        let (a, b) = mul(e, e);
        squares[3 * a + b] = true;
    }
    let mut pairs = Vec::new();
    for u in 0..9 {
        for v in u + 1..9 {
            let (a, b) = elems[v];
            let (c, d) = elems[u];
            let diff = 3 * ((a + 3 - c) % 3) + (b + 3 - d) % 3;
            if squares[diff] {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(9, pairs).expect("valid pairs")
}

fn require_positive(t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidParam(
            "triangle count must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Path `0..=t` with apex `t + i` on the i-th segment.
pub fn triangular_snake(t: usize) -> Result<Graph> {
    require_positive(t)?;
    let pairs = (1..=t).flat_map(|i| {
        let apex = t + i;
        [(i - 1, i), (i - 1, apex), (i, apex)]
    });
    Graph::from_edges(2 * t + 1, pairs)
}

/// `t` triangles through vertex 0; triangle `i` is `{0, 2i - 1, 2i}`.
pub fn friendship(t: usize) -> Result<Graph> {
    require_positive(t)?;
    let pairs = (1..=t).flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
    Graph::from_edges(2 * t + 1, pairs)
}

/// Starts from one triangle and repeatedly hangs a new triangle on a
/// uniformly chosen existing vertex.
pub fn random_triangular_cactus(t: usize, seed: u64) -> Result<Graph> {
    require_positive(t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = vec![(0, 1), (0, 2), (1, 2)];
    let mut n = 3;
    for _ in 1..t {
        let hook = rng.gen_range(0..n);
        pairs.extend([(hook, n), (hook, n + 1), (n, n + 1)]);
        n += 2;
    }
    Graph::from_edges(n, pairs)
}

const RETRIES_PER_TRIANGLE: usize = 1000;

/// Adds `t` triangles one at a time. Each corner independently reuses an
/// existing vertex with probability `merge_bias`, otherwise it is a fresh
/// vertex. A draw is rejected when two of its corners are already adjacent or
/// already have a common neighbour, since either would put an edge in two
/// triangles.
pub fn random_locally_linear(t: usize, merge_bias: f64, seed: u64) -> Result<Graph> {
    require_positive(t)?;
    if !(0.0..=1.0).contains(&merge_bias) {
        return Err(Error::InvalidParam(format!(
            "merge bias {merge_bias} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut pairs = Vec::new();
    for _ in 0..t {
        let mut attempt = 0;
        let corners = loop {
            if attempt == RETRIES_PER_TRIANGLE {
                return Err(Error::RetryExhausted(attempt));
            }
            attempt += 1;
            let n = adj.len();
            let mut fresh = n;
            let corners: [usize; 3] = std::array::from_fn(|_| {
                if n > 0 && rng.gen_bool(merge_bias) {
                    rng.gen_range(0..n)
                } else {
                    fresh += 1;
                    fresh - 1
                }
            });
            let ok = (0..3).all(|i| {
                (i + 1..3).all(|j| {
                    let (u, v) = (corners[i], corners[j]);
                    u != v && (u >= n || v >= n || !linked(&adj, u, v))
                })
            });
            if ok {
                break corners;
            }
        };
        let top = corners.iter().copied().max().unwrap();
        if top >= adj.len() {
            adj.resize(top + 1, Vec::new());
        }
        for i in 0..3 {
            for j in i + 1..3 {
                let (u, v) = (corners[i], corners[j]);
                adj[u].push(v);
                adj[v].push(u);
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(adj.len(), pairs)
}

/// Adjacent, or sharing a neighbour.
fn linked(adj: &[Vec<usize>], u: usize, v: usize) -> bool {
    adj[u].contains(&v) || adj[u].iter().any(|w| adj[v].contains(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{check_locally_linear, enumerate_triangles};
    use crate::star::star_graph;

    #[test]
    fn paley_is_strongly_regular() {
        let g = paley9();
        assert_eq!(g.edge_count(), 18);
        for u in 0..9 {
            assert_eq!(g.degree(u), 4);
            for v in u + 1..9 {
                let common = g.common_neighbors(u, v).len();
                assert_eq!(common, if g.has_edge(u, v) { 1 } else { 2 });
            }
        }
    }

    #[test]
    fn snakes() {
        let s = triangular_snake(5).unwrap();
        assert_eq!(s.vertex_count(), 11);
        assert_eq!(enumerate_triangles(&s).len(), 5);
        assert_eq!(triangular_snake(1).unwrap(), Graph::complete(3));
        assert_eq!(
            star_graph(&triangular_snake(2).unwrap()).unwrap().star,
            Graph::complete(2)
        );
        assert!(matches!(triangular_snake(0), Err(Error::InvalidParam(_))));
    }

    #[test]
    fn friendships() {
        assert_eq!(friendship(1).unwrap(), Graph::complete(3));
        let f3 = friendship(3).unwrap();
        assert_eq!(f3.vertex_count(), 7);
        assert_eq!(star_graph(&f3).unwrap().star, Graph::complete(3));
        assert_eq!(
            star_graph(&friendship(5).unwrap()).unwrap().star,
            Graph::complete(5)
        );
        assert!(friendship(0).is_err());
    }

    #[test]
    fn cacti() {
        for seed in 0..10 {
            assert_eq!(
                random_triangular_cactus(1, seed).unwrap(),
                Graph::complete(3)
            );
        }
        let g = random_triangular_cactus(10, 7).unwrap();
        assert!(check_locally_linear(&g).is_locally_linear);
        assert_eq!(g.vertex_count(), 21);
        assert_eq!(g.edge_count(), 30);
        assert_eq!(g, random_triangular_cactus(10, 7).unwrap());
        assert!(random_triangular_cactus(0, 1).is_err());
    }

    #[test]
    fn random_locally_linear_graphs() {
        assert_eq!(
            random_locally_linear(1, 0.7, 9).unwrap(),
            Graph::complete(3)
        );
        let g = random_locally_linear(6, 0.0, 1).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(star_graph(&g).unwrap().star.edge_count(), 0);
        for seed in 0..50 {
            let g = random_locally_linear(20, 0.5, seed).unwrap();
            assert!(check_locally_linear(&g).is_locally_linear);
            assert_eq!(enumerate_triangles(&g).len(), 20);
        }
        assert_eq!(
            random_locally_linear(20, 0.5, 42).unwrap(),
            random_locally_linear(20, 0.5, 42).unwrap()
        );
        assert!(random_locally_linear(3, 1.5, 0).is_err());
    }
}
