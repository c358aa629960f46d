//! Isomorphism testing for small graphs.
//!
//! Both graphs are colour-refined jointly (degree, then repeated
//! neighbour-colour multisets) so that colours are comparable across them.
//! A backtracking search then only tries targets of matching colour and checks
//! adjacency against every vertex already mapped.

use std::collections::BTreeMap;

use super::Graph;

/// A vertex bijection `mapping[v_g] = v_h` that preserves adjacency and
/// non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCertificate {
    pub mapping: Vec<usize>,
}

impl IsoCertificate {
    /// Checks the certificate edge by edge, independent of how it was found.
    pub fn validate(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.vertex_count();
        if h.vertex_count() != n || self.mapping.len() != n || g.edge_count() != h.edge_count() {
            return false;
        }
        let mut seen = vec![false; n];
        for &t in &self.mapping {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return false;
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) != h.has_edge(self.mapping[u], self.mapping[v]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn inverse(&self) -> IsoCertificate {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &t) in self.mapping.iter().enumerate() {
            inv[t] = i;
        }
        IsoCertificate { mapping: inv }
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<IsoCertificate> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }

    let (cg, ch) = refine_jointly(g, h);
    let histogram = |c: &[usize]| {
        let mut m = BTreeMap::new();
        for &x in c {
            *m.entry(x).or_insert(0usize) += 1;
        }
        m
    };
    if histogram(&cg) != histogram(&ch) {
        return None;
    }

    let order = search_order(g, &cg);
    let mut search = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        let cert = IsoCertificate {
            mapping: search.map,
        };
        debug_assert!(cert.validate(g, h));
        Some(cert)
    } else {
        None
    }
}

fn refine_jointly(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg = g.degrees();
    let mut ch = h.degrees();
    let mut classes = 0;
    loop {
        let sig = |graph: &Graph, colors: &[usize], v: usize| {
            let mut nb: Vec<usize> = graph.neighbors(v).iter().map(|&w| colors[w]).collect();
            nb.sort_unstable();
            (colors[v], nb)
        };
        let sg: Vec<_> = (0..g.vertex_count()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.vertex_count()).map(|v| sig(h, &ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (cg, ch);
        }
        classes = ids.len();
    }
}

/// Greedy order: prefer vertices with many already-placed neighbours, then
/// rare colours.
fn search_order(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut class_size = BTreeMap::new();
    for &c in colors {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                (
                    links[v],
                    std::cmp::Reverse(class_size[&colors[v]]),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for cand in 0..self.h.vertex_count() {
            if self.used[cand] || self.ch[cand] != self.cg[u] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.g.has_edge(u, w) == self.h.has_edge(cand, self.map[w]));
            if !consistent {
                continue;
            }
            self.map[u] = cand;
            self.used[cand] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[cand] = false;
            self.map[u] = usize::MAX;
        }
        false
    }
}
