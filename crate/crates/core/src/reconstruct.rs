//! Rebuilding a locally linear G from its triangle graph.
//!
//! Each vertex `x` of H splits its neighbourhood into at most three cliques;
//! the three sets `{x} ∪ clique` (padded with `{x}`) are the corners of the
//! triangle that `x` stands for. Corners that share two or more H-vertices are
//! the same vertex of G and get glued. The gluing is driven by the edges of
//! H: for an edge `xy`, the corner of `x` holding `y` and the corner of `y`
//! holding `x` share both `x` and `y`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, Graph, IsoCertificate};
use crate::linear::{check_locally_linear, enumerate_triangles, require_locally_linear, Triangle};
use crate::star::{is_valid_star, star_graph};

/// Neighbourhood of `center` split into cliques, each with `center` added,
/// padded with `{center}` to exactly three parts. Real parts come first,
/// ordered by their smallest neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    pub center: usize,
    pub parts: [Vec<usize>; 3],
}

impl CliquePartition {
    /// Index of the part containing neighbour `w`.
    pub fn part_of(&self, w: usize) -> Option<usize> {
        (0..3).find(|&k| w != self.center && self.parts[k].binary_search(&w).is_ok())
    }
}

pub fn neighborhood_partition(h: &Graph, v: usize) -> Result<CliquePartition> {
    let nb = h.neighbors(v);
    let mut assigned = vec![false; nb.len()];
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for i in 0..nb.len() {
        if assigned[i] {
            continue;
        }
        // component of nb[i] inside the neighbourhood
        let mut comp = vec![nb[i]];
        assigned[i] = true;
        let mut frontier = vec![nb[i]];
        while let Some(u) = frontier.pop() {
            for (j, &w) in nb.iter().enumerate() {
                if !assigned[j] && h.has_edge(u, w) {
                    assigned[j] = true;
                    comp.push(w);
                    frontier.push(w);
                }
            }
        }
        let c = comp.len();
        if h.edges_within(&comp) != c * (c - 1) / 2 {
            return Err(Error::NotClusterNeighborhood(v));
        }
        comp.sort_unstable();
        cliques.push(comp);
    }
    if cliques.len() > 3 {
        return Err(Error::TooManyParts {
            vertex: v,
            parts: cliques.len(),
        });
    }
    cliques.sort();
    let mut parts: [Vec<usize>; 3] = Default::default();
    for (k, part) in parts.iter_mut().enumerate() {
        let mut set = cliques.get(k).cloned().unwrap_or_default();
        set.push(v);
        set.sort_unstable();
        *part = set;
    }
    Ok(CliquePartition { center: v, parts })
}

/// A corner: part `part` of the partition around H-vertex `center`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub center: usize,
    pub part: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionResult {
    pub base: Graph,
    /// For each base vertex, the set of H-vertices its corners contain.
    pub vertex_origin: Vec<Vec<usize>>,
    /// For each base vertex, the glued corners, ascending.
    pub corners: Vec<Vec<Corner>>,
    /// For each H-vertex, its triangle in `base`.
    pub triangle_of: Vec<Triangle>,
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }
}

pub fn reconstruct_base(h: &Graph) -> Result<ReconstructionResult> {
    if let Some(v) = is_valid_star(h).violation {
        return Err(Error::InvalidStar(v));
    }
    let m = h.vertex_count();
    let partitions = (0..m)
        .map(|v| neighborhood_partition(h, v))
        .collect::<Result<Vec<_>>>()?;
    let corner_id = |c: Corner| 3 * c.center + c.part;
    let corner_set = |c: Corner| &partitions[c.center].parts[c.part];
    let contradiction = |msg: String| Err(Error::GluingContradiction(msg));

    let mut dsu = DisjointSets::new(3 * m);
    for &(x, y) in h.edges() {
        let cx = Corner {
            center: x,
            part: partitions[x].part_of(y).expect("neighbour lies in a part"),
        };
        let cy = Corner {
            center: y,
            part: partitions[y].part_of(x).expect("neighbour lies in a part"),
        };
        if corner_set(cx) != corner_set(cy) {
            return contradiction(format!(
                "corners {:?} and {:?} share {x} and {y} but differ",
                corner_set(cx),
                corner_set(cy)
            ));
        }
        dsu.union(corner_id(cx), corner_id(cy));
    }

    // classes, numbered by smallest corner
    let all_corners: Vec<Corner> = (0..m)
        .flat_map(|center| (0..3).map(move |part| Corner { center, part }))
        .collect();
    let mut class_index = vec![usize::MAX; 3 * m];
    let mut corners: Vec<Vec<Corner>> = Vec::new();
    for &c in &all_corners {
        let root = dsu.find(corner_id(c));
        if class_index[root] == usize::MAX {
            class_index[root] = corners.len();
            corners.push(Vec::new());
        }
        corners[class_index[root]].push(c);
    }
    let class_of = |dsu: &mut DisjointSets, c: Corner| class_index[dsu.find(corner_id(c))];

    // merged iff the sets meet in two or more H-vertices
    for (i, &a) in all_corners.iter().enumerate() {
        for &b in &all_corners[i + 1..] {
            let meet = corner_set(a)
                .iter()
                .filter(|v| corner_set(b).binary_search(v).is_ok())
                .count();
            let same = class_of(&mut dsu, a) == class_of(&mut dsu, b);
            if same != (meet >= 2) {
                return contradiction(format!(
                    "corners {a:?} and {b:?} meet in {meet} vertices but merged={same}"
                ));
            }
        }
    }

    let mut vertex_origin = Vec::with_capacity(corners.len());
    for class in &corners {
        let set = corner_set(class[0]).clone();
        let centers: BTreeSet<usize> = class.iter().map(|c| c.center).collect();
        // a real vertex of G sits in exactly the triangles named by its set
        if centers.len() != class.len() || set.len() != class.len() || centers.iter().ne(set.iter())
        {
            return contradiction(format!("class {class:?} does not match its set {set:?}"));
        }
        vertex_origin.push(set);
    }

    let mut triangle_of = Vec::with_capacity(m);
    let mut edges = BTreeSet::new();
    for x in 0..m {
        let [a, b, c] = [0, 1, 2].map(|part| class_of(&mut dsu, Corner { center: x, part }));
        if a == b || b == c || a == c {
            return contradiction(format!("triangle of {x} collapses"));
        }
        let t = Triangle::new(a, b, c);
        for e in [(t.0[0], t.0[1]), (t.0[0], t.0[2]), (t.0[1], t.0[2])] {
            if !edges.insert(e) {
                return contradiction(format!("edge {e:?} lies in two triangles"));
            }
        }
        triangle_of.push(t);
    }
    let base = Graph::from_edges(corners.len(), edges)?;

    // no triangles beyond the m built ones
    let mut built: Vec<Triangle> = triangle_of.clone();
    built.sort_unstable();
    if enumerate_triangles(&base) != built {
        return contradiction("gluing created a new triangle".into());
    }
    if let Some(w) = check_locally_linear(&base).witness {
        return contradiction(format!("rebuilt graph is not locally linear: {w}"));
    }

    Ok(ReconstructionResult {
        base,
        vertex_origin,
        corners,
        triangle_of,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTrip {
    pub holds: bool,
    /// Rebuilt base → original graph.
    pub base_certificate: Option<IsoCertificate>,
    /// Triangle graph of the rebuilt base → original triangle graph.
    pub star_certificate: Option<IsoCertificate>,
    pub reconstruction: ReconstructionResult,
}

pub fn roundtrip_check(g: &Graph) -> Result<RoundTrip> {
    require_locally_linear(g)?;
    let h = star_graph(g)?.star;
    let rec = reconstruct_base(&h)?;
    let rebuilt_star = star_graph(&rec.base)?.star;
    let base_certificate = are_isomorphic(&rec.base, g).filter(|c| c.validate(&rec.base, g));
    let star_certificate =
        are_isomorphic(&rebuilt_star, &h).filter(|c| c.validate(&rebuilt_star, &h));
    Ok(RoundTrip {
        holds: base_certificate.is_some() && star_certificate.is_some(),
        base_certificate,
        star_certificate,
        reconstruction: rec,
    })
}
