//! Induced cycle census and the cycle correspondence between G and G*.
//!
//! Induced 4- and 5-cycles of a locally linear graph correspond one to one
//! with those of its triangle graph: a cycle of triangles maps to the cycle of
//! vertices where consecutive triangles meet. Six-cycles do not correspond in
//! general; [`find_hexagon_counterexamples`] searches for graphs that break
//! the count in each direction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::generators::random_locally_linear;
use crate::graph::{to_edge_list, Graph};
use crate::linear::{require_locally_linear, Triangle};
use crate::star::star_graph;

/// Induced cycles of one length. Each cycle starts at its smallest vertex and
/// continues towards the smaller of that vertex's two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSet {
    pub length: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl CycleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Rotates and reflects a vertex cycle into canonical form.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let next = cycle[(start + 1) % k];
    let prev = cycle[(start + k - 1) % k];
    if next <= prev {
        (0..k).map(|i| cycle[(start + i) % k]).collect()
    } else {
        (0..k).map(|i| cycle[(start + k - i) % k]).collect()
    }
}

/// All induced cycles of length `k` (4, 5 or 6), sorted.
///
/// Scans every connected `k`-subset (each enumerated once, rooted at its
/// smallest vertex) and keeps those inducing a 2-regular graph. Branches where
/// some vertex already has three chosen neighbours are cut.
pub fn count_induced_cycles(h: &Graph, k: usize) -> Result<CycleSet> {
    if !(4..=6).contains(&k) {
        return Err(Error::UnsupportedLength(k));
    }
    let mut scan = SubsetScan {
        h,
        k,
        sub: Vec::with_capacity(k),
        inner_degree: vec![0; h.vertex_count()],
        found: Vec::new(),
    };
    for root in 0..h.vertex_count() {
        if h.degree(root) < 2 {
            continue;
        }
        scan.sub.push(root);
        let ext: Vec<usize> = h
            .neighbors(root)
            .iter()
            .copied()
            .filter(|&u| u > root)
            .collect();
        scan.extend(root, ext);
        scan.sub.pop();
    }
    let mut cycles = scan.found;
    cycles.sort_unstable();
    debug_assert!(cycles.windows(2).all(|w| w[0] != w[1]));
    Ok(CycleSet { length: k, cycles })
}

struct SubsetScan<'a> {
    h: &'a Graph,
    k: usize,
    sub: Vec<usize>,
    inner_degree: Vec<u8>,
    found: Vec<Vec<usize>>,
}

impl SubsetScan<'_> {
    fn extend(&mut self, root: usize, mut ext: Vec<usize>) {
        if self.sub.len() == self.k {
            self.record();
            return;
        }
        while let Some(w) = ext.pop() {
            let links: Vec<usize> = self
                .sub
                .iter()
                .copied()
                .filter(|&s| self.h.has_edge(s, w))
                .collect();
            if links.len() > 2 || links.iter().any(|&s| self.inner_degree[s] >= 2) {
                continue;
            }
            // exclusive neighbourhood of w with respect to the current subset
            let mut next_ext = ext.clone();
            for &u in self.h.neighbors(w) {
                if u > root
                    && !self.sub.contains(&u)
                    && !self.sub.iter().any(|&s| self.h.has_edge(s, u))
                    && !next_ext.contains(&u)
                {
                    next_ext.push(u);
                }
            }
            for &s in &links {
                self.inner_degree[s] += 1;
            }
            self.inner_degree[w] = links.len() as u8;
            self.sub.push(w);
            self.extend(root, next_ext);
            self.sub.pop();
            self.inner_degree[w] = 0;
            for &s in &links {
                self.inner_degree[s] -= 1;
            }
        }
    }

    fn record(&mut self) {
        if self.sub.iter().any(|&s| self.inner_degree[s] != 2) {
            return;
        }
        // connected and 2-regular, so a single cycle; walk it
        let start = *self.sub.iter().min().unwrap();
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while walk.len() < self.k {
            let next = self
                .sub
                .iter()
                .copied()
                .find(|&s| s != prev && s != cur && self.h.has_edge(cur, s))
                .unwrap();
            walk.push(next);
            prev = cur;
            cur = next;
        }
        self.found.push(canonical_cycle(&walk));
    }
}

/// Pairs of (cycle of triangle ids in G*, cycle of vertices in G).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBijection {
    pub length: usize,
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
}

impl CycleBijection {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub fn quadrilateral_bijection(g: &Graph) -> Result<CycleBijection> {
    cycle_bijection(g, 4)
}

pub fn pentagon_bijection(g: &Graph) -> Result<CycleBijection> {
    cycle_bijection(g, 5)
}

/// Maps a cycle of triangles to the vertices where consecutive triangles
/// meet. Fails unless consecutive triangles share exactly one vertex,
/// non-consecutive ones share none, and the meeting vertices are distinct.
pub fn meeting_vertices(triangles: &[Triangle], star_cycle: &[usize]) -> Option<Vec<usize>> {
    let k = star_cycle.len();
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let a = &triangles[star_cycle[i]];
        for j in i + 1..k {
            let shared = a.shared(&triangles[star_cycle[j]]);
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if shared.len() != usize::from(consecutive) {
                return None;
            }
        }
        out.push(a.shared(&triangles[star_cycle[(i + 1) % k]])[0]);
    }
    let distinct: BTreeSet<_> = out.iter().collect();
    (distinct.len() == k).then_some(out)
}

fn cycle_bijection(g: &Graph, k: usize) -> Result<CycleBijection> {
    require_locally_linear(g)?;
    let star = star_graph(g)?;
    let star_cycles = count_induced_cycles(&star.star, k)?;
    let base_cycles = count_induced_cycles(g, k)?;

    let fail = |msg: String| Err(Error::BijectionFailure(msg));
    let base_set: BTreeSet<&Vec<usize>> = base_cycles.cycles.iter().collect();

    // edge -> its unique triangle, for the inverse direction
    let mut edge_triangle = BTreeMap::new();
    for (id, t) in star.triangles.iter().enumerate() {
        let [a, b, c] = t.vertices();
        for e in [(a, b), (a, c), (b, c)] {
            edge_triangle.insert(e, id);
        }
    }

    let mut pairs = Vec::with_capacity(star_cycles.len());
    let mut images = BTreeSet::new();
    for sc in &star_cycles.cycles {
        let Some(meet) = meeting_vertices(&star.triangles, sc) else {
            return fail(format!(
                "triangle cycle {sc:?} has no well-formed meeting vertices"
            ));
        };
        let image = canonical_cycle(&meet);
        if !base_set.contains(&image) {
            return fail(format!(
                "image {image:?} of {sc:?} is not an induced cycle of G"
            ));
        }
        if !images.insert(image.clone()) {
            return fail(format!("image {image:?} hit twice"));
        }
        pairs.push((sc.clone(), image));
    }
    if images.len() != base_cycles.len() {
        return fail(format!(
            "{} of {} cycles of G are not covered",
            base_cycles.len() - images.len(),
            base_cycles.len()
        ));
    }

    // inverse: each cycle edge of G lies in one triangle; the k triangles must
    // be distinct and come back to the paired triangle cycle
    let preimage: BTreeMap<&Vec<usize>, &Vec<usize>> = pairs.iter().map(|(s, b)| (b, s)).collect();
    for bc in &base_cycles.cycles {
        let tris: Vec<usize> = (0..k)
            .map(|i| {
                let (u, v) = (bc[i], bc[(i + 1) % k]);
                edge_triangle[&(u.min(v), u.max(v))]
            })
            .collect();
        if tris.iter().collect::<BTreeSet<_>>().len() != k {
            return fail(format!("cycle {bc:?} of G uses a triangle twice"));
        }
        if canonical_cycle(&tris) != *preimage[bc] {
            return fail(format!("cycle {bc:?} of G does not map back to its pair"));
        }
    }

    Ok(CycleBijection { length: k, pairs })
}

/// A locally linear graph where induced hexagons fail to correspond.
#[derive(Debug, Clone, PartialEq)]
pub struct HexagonCase {
    pub graph: Graph,
    pub triangles: usize,
    pub merge_bias: f64,
    pub seed: u64,
    pub c6_base: usize,
    pub c6_star: usize,
    /// Forward case: a hexagon of G. Backward case: a hexagon of G* (triangle ids).
    pub witness: Vec<usize>,
}

impl HexagonCase {
    /// Edge-list text with the construction recorded in comments.
    pub fn fixture_text(&self, label: &str) -> String {
        let mut out = String::new();
        writeln!(out, "# {label}").unwrap();
        writeln!(
            out,
            "# generator: random_locally_linear t={} merge_bias={} seed={}",
            self.triangles, self.merge_bias, self.seed
        )
        .unwrap();
        writeln!(out, "# c6_base={} c6_star={}", self.c6_base, self.c6_star).unwrap();
        writeln!(out, "# witness={:?}", self.witness).unwrap();
        out.push_str(&to_edge_list(&self.graph));
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HexagonCounterexamples {
    /// More hexagons in G than in G*, with a hexagon of G whose triangles do
    /// not form a hexagon of G*.
    pub forward: HexagonCase,
    /// More hexagons in G* than in G, with a hexagon of G* whose meeting
    /// vertices do not form a hexagon of G.
    pub backward: HexagonCase,
}

pub const HEXAGON_MAX_TRIANGLES: usize = 12;
const HEXAGON_BIASES: [f64; 4] = [0.3, 0.4, 0.5, 0.6];
const HEXAGON_SEEDS: u64 = 400;

/// Bounded search over small random gluings, smallest triangle count first.
pub fn find_hexagon_counterexamples() -> Result<HexagonCounterexamples> {
    let mut forward: Option<HexagonCase> = None;
    let mut backward: Option<HexagonCase> = None;
    for t in 4..=HEXAGON_MAX_TRIANGLES {
        for &bias in &HEXAGON_BIASES {
            for seed in 0..HEXAGON_SEEDS {
                if let (Some(f), Some(b)) = (&forward, &backward) {
                    return Ok(HexagonCounterexamples {
                        forward: f.clone(),
                        backward: b.clone(),
                    });
                }
                let Ok(g) = random_locally_linear(t, bias, seed) else {
                    continue;
                };
                let star = star_graph(&g)?;
                let base6 = count_induced_cycles(&g, 6)?;
                let star6 = count_induced_cycles(&star.star, 6)?;
                let case = |witness: Vec<usize>| HexagonCase {
                    graph: g.clone(),
                    triangles: t,
                    merge_bias: bias,
                    seed,
                    c6_base: base6.len(),
                    c6_star: star6.len(),
                    witness,
                };
                if forward.is_none() && base6.len() > star6.len() {
                    if let Some(w) =
                        untranslated_base_hexagon(&g, &star.triangles, &star.star, &base6)
                    {
                        forward = Some(case(w));
                    }
                }
                if backward.is_none() && star6.len() > base6.len() {
                    if let Some(w) = untranslated_star_hexagon(&star.triangles, &base6, &star6) {
                        backward = Some(case(w));
                    }
                }
            }
        }
    }
    match (forward, backward) {
        (Some(forward), Some(backward)) => Ok(HexagonCounterexamples { forward, backward }),
        _ => Err(Error::SearchExhausted),
    }
}

/// A hexagon of G whose six edge-triangles do not induce a hexagon in G*.
pub fn untranslated_base_hexagon(
    g: &Graph,
    triangles: &[Triangle],
    star: &Graph,
    base6: &CycleSet,
) -> Option<Vec<usize>> {
    let tri_of_edge = |u: usize, v: usize| {
        let w = g.common_neighbors(u, v)[0];
        triangles.binary_search(&Triangle::new(u, v, w)).unwrap()
    };
    base6.cycles.iter().find_map(|c| {
        let tris: Vec<usize> = (0..6).map(|i| tri_of_edge(c[i], c[(i + 1) % 6])).collect();
        let is_hexagon = (0..6).all(|i| {
            (i + 1..6).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == 5);
                star.has_edge(tris[i], tris[j]) == consecutive
            })
        });
        (!is_hexagon).then(|| c.clone())
    })
}

/// A hexagon of G* whose meeting vertices do not form an induced hexagon of G.
pub fn untranslated_star_hexagon(
    triangles: &[Triangle],
    base6: &CycleSet,
    star6: &CycleSet,
) -> Option<Vec<usize>> {
    star6.cycles.iter().find_map(|sc| {
        let translated = meeting_vertices(triangles, sc)
            .map(|m| base6.cycles.binary_search(&canonical_cycle(&m)).is_ok())
            .unwrap_or(false);
        (!translated).then(|| sc.clone())
    })
}
