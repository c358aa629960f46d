#![allow(dead_code)]

use trigraph::generators::{
    friendship, paley9, random_locally_linear, random_triangular_cactus, triangular_snake,
};
use trigraph::Graph;

pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

/// Hamming graph H(d, 3): words over {0,1,2}, adjacent when they differ in
/// one place. Locally linear with n = 3^d and m = d·3^(d-1), so m = n at d = 3.
pub fn hamming3(d: u32) -> Graph {
    let n = 3usize.pow(d);
    let digit = |v: usize, i: u32| (v / 3usize.pow(i)) % 3;
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (0..d).filter(|&i| digit(u, i) != digit(v, i)).count() == 1 {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(n, pairs).unwrap()
}

/// Cayley graph on Z_3^3 whose connection set is `±e1, ±e2, ±e3, ±(e1+e2+e3)`.
/// Every vertex lies on four lines of three, so n = 27 and m = 36.
pub fn z3_cube_four_lines() -> Graph {
    let dirs = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
    let enc = |x: [usize; 3]| x[0] + 3 * x[1] + 9 * x[2];
    let mut pairs = Vec::new();
    for v in 0..27 {
        let x = [v % 3, (v / 3) % 3, v / 9];
        for d in dirs {
            let y = [(x[0] + d[0]) % 3, (x[1] + d[1]) % 3, (x[2] + d[2]) % 3];
            pairs.push((v.min(enc(y)), v.max(enc(y))));
        }
    }
    Graph::from_edges(27, pairs).unwrap()
}

pub const BIASES: [f64; 4] = [0.2, 0.35, 0.5, 0.65];

/// The randomized suite: 100 cacti and 140 random locally linear graphs with
/// 1..=15 triangles, plus the named examples.
pub fn suite() -> Vec<Instance> {
    let mut out = Vec::new();
    for i in 0..100u64 {
        let t = 1 + (i as usize % 15);
        out.push(Instance {
            name: format!("cactus(t={t},seed={i})"),
            graph: random_triangular_cactus(t, i).unwrap(),
        });
    }
    let mut seed = 0u64;
    while out.len() < 240 {
        let t = 1 + (seed as usize % 15);
        let bias = BIASES[(seed as usize / 15) % BIASES.len()];
        if let Ok(g) = random_locally_linear(t, bias, seed) {
            out.push(Instance {
                name: format!("random_locally_linear(t={t},bias={bias},seed={seed})"),
                graph: g,
            });
        }
        seed += 1;
    }
    out.push(Instance {
        name: "K3".into(),
        graph: Graph::complete(3),
    });
    out.push(Instance {
        name: "paley9".into(),
        graph: paley9(),
    });
    for t in [2, 5, 8] {
        out.push(Instance {
            name: format!("snake({t})"),
            graph: triangular_snake(t).unwrap(),
        });
        out.push(Instance {
            name: format!("friendship({t})"),
            graph: friendship(t).unwrap(),
        });
    }
    out.push(Instance {
        name: "hamming(3,3)".into(),
        graph: hamming3(3),
    });
    out.push(Instance {
        name: "z3_cube_four_lines".into(),
        graph: z3_cube_four_lines(),
    });
    out
}

/// Edge-by-edge check of a claimed isomorphism, independent of the library.
pub fn certificate_holds(mapping: &[usize], g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if mapping.len() != n || h.vertex_count() != n {
        return false;
    }
    let mut image: Vec<usize> = mapping.to_vec();
    image.sort_unstable();
    if image != (0..n).collect::<Vec<_>>() {
        return false;
    }
    let mapped: std::collections::BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (mapping[u], mapping[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    mapped.len() == h.edge_count() && h.edges().iter().all(|e| mapped.contains(e))
}
