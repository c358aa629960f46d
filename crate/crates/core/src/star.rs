//! The triangle graph G* and the forbidden induced patterns it avoids.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linear::{enumerate_triangles, require_locally_linear, Triangle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarResult {
    /// Vertex `i` is `triangles[i]`.
    pub star: Graph,
    pub triangles: Vec<Triangle>,
    pub source_n: usize,
}

/// Builds G*: one vertex per triangle of `g` (lexicographic order), adjacent
/// when the triangles share a vertex.
pub fn star_graph(g: &Graph) -> Result<StarResult> {
    require_locally_linear(g)?;
    let triangles = enumerate_triangles(g);

    // triangles through each vertex
    let mut through = vec![Vec::new(); g.vertex_count()];
    for (id, t) in triangles.iter().enumerate() {
        for v in t.vertices() {
            through[v].push(id);
        }
    }
    let mut pairs = Vec::new();
    for ids in &through {
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                pairs.push((a, b));
            }
        }
    }
    let star = Graph::from_edges(triangles.len(), pairs)?;
    debug_assert!(star
        .edges()
        .iter()
        .all(|&(a, b)| { triangles[a].shared(&triangles[b]).len() == 1 }));
    Ok(StarResult {
        star,
        triangles,
        source_n: g.vertex_count(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarViolation {
    /// Four vertices inducing K4 minus an edge, ascending.
    Diamond([usize; 4]),
    /// Centre followed by four pairwise nonadjacent neighbours.
    Claw([usize; 5]),
}

impl fmt::Display for StarViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarViolation::Diamond(v) => write!(f, "induced diamond on {v:?}"),
            StarViolation::Claw([c, rest @ ..]) => {
                write!(f, "induced K1,4 centred at {c} with leaves {rest:?}")
            }
        }
    }
}

/// Lexicographically first 4-set inducing K4 minus one edge.
pub fn find_induced_diamond(h: &Graph) -> Option<[usize; 4]> {
    // every diamond vertex has degree >= 2
    let cand: Vec<usize> = (0..h.vertex_count())
        .filter(|&v| h.degree(v) >= 2)
        .collect();
    let k = cand.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let partial = h.edges_within(&[cand[a], cand[b], cand[c]]);
                // three of the vertices span at least two edges
                if partial < 2 {
                    continue;
                }
                for d in c + 1..k {
                    let quad = [cand[a], cand[b], cand[c], cand[d]];
                    if h.edges_within(&quad) == 5 {
                        return Some(quad);
                    }
                }
            }
        }
    }
    None
}

/// First induced K1,4 ordered by centre, then by sorted leaves.
pub fn find_induced_k14(h: &Graph) -> Option<[usize; 5]> {
    for c in 0..h.vertex_count() {
        let nb = h.neighbors(c);
        if nb.len() < 4 {
            continue;
        }
        let mut chosen = Vec::with_capacity(4);
        if pick_independent(h, nb, 0, &mut chosen) {
            return Some([c, chosen[0], chosen[1], chosen[2], chosen[3]]);
        }
    }
    None
}

fn pick_independent(h: &Graph, pool: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == 4 {
        return true;
    }
    for i in from..pool.len() {
        let v = pool[i];
        if chosen.iter().any(|&w| h.has_edge(v, w)) {
            continue;
        }
        chosen.push(v);
        if pick_independent(h, pool, i + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Maximum number of common neighbours over nonadjacent pairs, with the first
/// pair attaining it. Complete graphs give `(0, None)`.
pub fn max_common_neighbors_nonadjacent(h: &Graph) -> Result<(usize, Option<(usize, usize)>)> {
    let n = h.vertex_count();
    if n < 2 {
        return Err(Error::TooSmall);
    }
    let mut best: (usize, Option<(usize, usize)>) = (0, None);
    for u in 0..n {
        for v in u + 1..n {
            if h.has_edge(u, v) {
                continue;
            }
            let c = h.common_neighbors(u, v).len();
            if best.1.is_none() || c > best.0 {
                best = (c, Some((u, v)));
            }
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarValidity {
    pub valid: bool,
    pub violation: Option<StarViolation>,
}

/// Necessary conditions only: no induced diamond and no induced K1,4.
pub fn is_valid_star(h: &Graph) -> StarValidity {
    let violation = find_induced_diamond(h)
        .map(StarViolation::Diamond)
        .or_else(|| find_induced_k14(h).map(StarViolation::Claw));
    StarValidity {
        valid: violation.is_none(),
        violation,
    }
}
