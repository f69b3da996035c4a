//! Simple graphs, their edge ideals, and the combinatorial v-number.
//!
//! `v(I(G))` is the least size of a stable set `A` whose neighborhood `N(A)`
//! is a minimal vertex cover of `G`. Vertices are 1-based throughout the
//! public API.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::engine::SearchConfig;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Largest graph accepted by the subset enumeration.
pub const MAX_ENUMERATION_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Validates a simple graph on vertices `1..=n`. Edges are unordered.
    pub fn from_edges<I>(vertex_count: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut edges = BTreeSet::new();
        for (a, b) in pairs {
            if a == 0 || b == 0 || a > vertex_count || b > vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} outside 1..={vertex_count}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            if !edges.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {a}-{b}")));
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
            labels: None,
        })
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidGraph(format!("path needs n >= 2, got {n}")));
        }
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1)).chain([(n, 1)]))
    }

    /// A graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_edges(n, [])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.vertex_count {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Vertex names: the labels if present, else `x1..xn`.
    pub fn names(&self) -> Vec<String> {
        self.labels
            .clone()
            .unwrap_or_else(|| crate::monomial::default_names(self.vertex_count))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.vertex_count {
            return Err(Error::InvalidGraph(format!(
                "vertex {v} outside 1..={}",
                self.vertex_count
            )));
        }
        Ok(())
    }

    fn check_set(&self, set: &BTreeSet<usize>) -> Result<()> {
        set.iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// Glues `g1` and `g2` along `v1 ~ v2`. `g1` keeps its indices; the other
    /// vertices of `g2` follow in order, shifted past `g1`.
    pub fn clique_sum_1(g1: &Graph, g2: &Graph, v1: usize, v2: usize) -> Result<Graph> {
        g1.check_vertex(v1)?;
        g2.check_vertex(v2)?;
        let n1 = g1.vertex_count;
        let relabel = |w: usize| match w.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => n1 + w,
            std::cmp::Ordering::Greater => n1 + w - 1,
        };
        let edges = g1
            .edges
            .iter()
            .copied()
            .chain(g2.edges.iter().map(|&(a, b)| (relabel(a), relabel(b))));
        Graph::from_edges(n1 + g2.vertex_count - 1, edges)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
        let n1 = g1.vertex_count;
        let n2 = g2.vertex_count;
        let edges = g1
            .edges
            .iter()
            .copied()
            .chain(g2.edges.iter().map(|&(a, b)| (a + n1, b + n1)))
            .chain((1..=n1).flat_map(|a| (1..=n2).map(move |b| (a, n1 + b))));
        Graph::from_edges(n1 + n2, edges)
    }

    /// `I(G) = <x_i x_j : ij in E(G)>` in `n` variables.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        if self.edges.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let mut e = vec![0; self.vertex_count];
                e[a - 1] = 1;
                e[b - 1] = 1;
                Monomial::new(e)
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(gens)
    }

    /// Vertices `x` such that `{x} ∪ set` contains an edge.
    pub fn neighborhood(&self, set: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        self.check_set(set)?;
        let mut out = BTreeSet::new();
        for &(a, b) in &self.edges {
            if set.contains(&a) {
                out.insert(b);
            }
            if set.contains(&b) {
                out.insert(a);
            }
        }
        Ok(out)
    }

    pub fn is_stable(&self, set: &BTreeSet<usize>) -> Result<bool> {
        self.check_set(set)?;
        Ok(!self
            .edges
            .iter()
            .any(|(a, b)| set.contains(a) && set.contains(b)))
    }

    pub fn is_vertex_cover(&self, cover: &BTreeSet<usize>) -> Result<bool> {
        self.check_set(cover)?;
        Ok(self
            .edges
            .iter()
            .all(|(a, b)| cover.contains(a) || cover.contains(b)))
    }

    /// A cover from which no single vertex can be dropped.
    pub fn is_minimal_vertex_cover(&self, cover: &BTreeSet<usize>) -> Result<bool> {
        if !self.is_vertex_cover(cover)? {
            return Ok(false);
        }
        for &v in cover {
            let mut smaller = cover.clone();
            smaller.remove(&v);
            if self.is_vertex_cover(&smaller)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All minimal vertex covers, by brute force over subsets.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<BTreeSet<usize>>> {
        let bits = BitGraph::new(self)?;
        Ok((0u32..1 << self.vertex_count)
            .filter(|&mask| bits.is_minimal_cover(mask))
            .map(mask_to_set)
            .collect())
    }
}

/// A stable set whose neighborhood is a minimal vertex cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableWitness {
    pub value: usize,
    pub stable_set: BTreeSet<usize>,
}

impl StableWitness {
    pub fn is_valid_for(&self, graph: &Graph) -> bool {
        self.stable_set.len() == self.value
            && graph.is_stable(&self.stable_set).unwrap_or(false)
            && graph
                .neighborhood(&self.stable_set)
                .and_then(|n| graph.is_minimal_vertex_cover(&n))
                .unwrap_or(false)
    }
}

/// Adjacency bitmasks, bit `i` for vertex `i + 1`.
struct BitGraph {
    adjacency: Vec<u32>,
    edges: Vec<u32>,
}

impl BitGraph {
    fn new(graph: &Graph) -> Result<BitGraph> {
        if graph.vertex_count > MAX_ENUMERATION_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{} vertices exceeds the enumeration limit of {MAX_ENUMERATION_VERTICES}",
                graph.vertex_count
            )));
        }
        let mut adjacency = vec![0u32; graph.vertex_count];
        let mut edges = Vec::with_capacity(graph.edges.len());
        for &(a, b) in &graph.edges {
            adjacency[a - 1] |= 1 << (b - 1);
            adjacency[b - 1] |= 1 << (a - 1);
            edges.push((1 << (a - 1)) | (1 << (b - 1)));
        }
        Ok(BitGraph { adjacency, edges })
    }

    /// Only called on stable sets, where members have no neighbors inside.
    fn neighborhood(&self, set: u32) -> u32 {
        let mut out = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            out |= self.adjacency[v];
            rest &= rest - 1;
        }
        out
    }

    fn is_cover(&self, cover: u32) -> bool {
        self.edges.iter().all(|&e| e & cover != 0)
    }

    /// Every vertex of the cover has a neighbor outside it.
    fn is_minimal_cover(&self, cover: u32) -> bool {
        if !self.is_cover(cover) {
            return false;
        }
        let mut rest = cover;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if self.adjacency[v] & !cover == 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }
}

fn mask_to_set(mask: u32) -> BTreeSet<usize> {
    (0..32)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i + 1)
        .collect()
}

/// Stable subsets of size `k` in lex order of their sorted vertex lists.
/// Extensions of non-stable prefixes are never generated.
struct StableSearch<'a> {
    bits: &'a BitGraph,
    n: usize,
    visited: u64,
    budget: u64,
}

impl StableSearch<'_> {
    fn visit<F>(&mut self, k: usize, start: usize, set: u32, on_hit: &mut F) -> Result<bool>
    where
        F: FnMut(u32) -> bool,
    {
        if k == 0 {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                    required: self.visited as u128,
                });
            }
            let n = self.bits.neighborhood(set);
            return Ok(self.bits.is_minimal_cover(n) && on_hit(set));
        }
        for v in start..=self.n - k {
            if self.bits.adjacency[v] & set != 0 {
                continue;
            }
            if self.visit(k - 1, v + 1, set | (1 << v), on_hit)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn stable_search(graph: &Graph, config: &SearchConfig, all: bool) -> Result<Vec<StableWitness>> {
    if graph.edges.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let bits = BitGraph::new(graph)?;
    let mut search = StableSearch {
        bits: &bits,
        n: graph.vertex_count,
        visited: 0,
        budget: config.budget,
    };
    for k in 1..=graph.vertex_count {
        let mut hits = Vec::new();
        search.visit(k, 0, 0, &mut |set| {
            hits.push(set);
            !all
        })?;
        if !hits.is_empty() {
            return Ok(hits
                .into_iter()
                .map(|set| StableWitness {
                    value: k,
                    stable_set: mask_to_set(set),
                })
                .collect());
        }
    }
    Err(Error::Internal(
        "graph with edges has no stable set dominating a minimal cover".into(),
    ))
}

/// `v(I(G))` by subset enumeration; the witness is the lex-first stable set
/// of minimum size.
pub fn v_graph(graph: &Graph, config: &SearchConfig) -> Result<StableWitness> {
    stable_search(graph, config, false)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("empty witness list".into()))
}

/// Every minimum-size witness stable set.
pub fn v_graph_all(graph: &Graph, config: &SearchConfig) -> Result<Vec<StableWitness>> {
    stable_search(graph, config, true)
}

/// `v(P_n)`: `floor(n/4)` if `n = 0, 1 (mod 4)`, else `floor(n/4) + 1`.
pub fn v_path_closed(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "path needs n >= 2, got {n}"
        )));
    }
    Ok(match n % 4 {
        0 | 1 => n / 4,
        _ => n / 4 + 1,
    })
}

/// `v(C_n) = v(P_{n-3}) + 1` for `n >= 5`; `C_3` and `C_4` have v-number 1.
pub fn v_cycle_closed(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        ))),
        3 | 4 => Ok(1),
        _ => Ok(v_path_closed(n - 3)? + 1),
    }
}

/// `v(G1 * G2) = min(v(G1), v(G2))`. An edgeless operand has no v-number of
/// its own, so the join is enumerated directly instead.
pub fn v_join_closed(g1: &Graph, g2: &Graph, config: &SearchConfig) -> Result<usize> {
    if g1.edges.is_empty() || g2.edges.is_empty() {
        return Ok(v_graph(&Graph::join(g1, g2)?, config)?.value);
    }
    Ok(v_graph(g1, config)?.value.min(v_graph(g2, config)?.value))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CliqueSumKind {
    /// `C_cycle` glued to an endpoint of `P_path`.
    CyclePath { cycle: usize, path: usize },
    /// Two cycles sharing one vertex.
    CycleCycle { first: usize, second: usize },
}

impl CliqueSumKind {
    pub fn graph(&self) -> Result<Graph> {
        match *self {
            CliqueSumKind::CyclePath { cycle, path } => {
                Graph::clique_sum_1(&Graph::cycle(cycle)?, &Graph::path(path)?, 1, 1)
            }
            CliqueSumKind::CycleCycle { first, second } => {
                Graph::clique_sum_1(&Graph::cycle(first)?, &Graph::cycle(second)?, 1, 1)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliqueSumAnalysis {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
}

/// Closed-form bracket (and exact value where known) for 1-clique sums.
/// Cycles must have length at least 5, paths at least 4 vertices.
pub fn clique_sum_analysis(kind: CliqueSumKind) -> Result<CliqueSumAnalysis> {
    let cycle_ok = |n: usize| {
        if n < 5 {
            Err(Error::InvalidParameter(format!(
                "clique-sum formulas need cycles of length >= 5, got {n}"
            )))
        } else {
            Ok(())
        }
    };
    match kind {
        CliqueSumKind::CyclePath { cycle, path } => {
            cycle_ok(cycle)?;
            if path < 4 {
                return Err(Error::InvalidParameter(format!(
                    "clique-sum formulas need paths with >= 4 vertices, got {path}"
                )));
            }
            let base = v_cycle_closed(cycle)? + v_path_closed(path - 2)?;
            let lower = base - 1;
            let exact = (matches!(cycle % 4, 1 | 2) && path % 4 == 0).then_some(lower);
            Ok(CliqueSumAnalysis {
                lower,
                upper: base,
                exact,
            })
        }
        CliqueSumKind::CycleCycle { first, second } => {
            cycle_ok(first)?;
            cycle_ok(second)?;
            let value = v_cycle_closed(first)? + v_cycle_closed(second)? - 1;
            Ok(CliqueSumAnalysis {
                lower: value,
                upper: value,
                exact: Some(value),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    const CFG: SearchConfig = SearchConfig {
        budget: crate::engine::DEFAULT_BUDGET,
    };

    #[test]
    fn constructors() {
        assert_eq!(
            Graph::path(4).unwrap().edges(),
            &BTreeSet::from([(1, 2), (2, 3), (3, 4)])
        );
        assert_eq!(
            Graph::cycle(5).unwrap().edges(),
            &BTreeSet::from([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
        );
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(1, 4)]).is_err());
        assert!(Graph::from_edges(3, [(1, 2), (2, 1)]).is_err());
        assert!(Graph::path(1).is_err());
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn clique_sums_and_joins() {
        let cp =
            Graph::clique_sum_1(&Graph::cycle(5).unwrap(), &Graph::path(4).unwrap(), 1, 1).unwrap();
        assert_eq!((cp.vertex_count(), cp.edges().len()), (8, 8));
        let cc = Graph::clique_sum_1(&Graph::cycle(5).unwrap(), &Graph::cycle(5).unwrap(), 1, 1)
            .unwrap();
        assert_eq!((cc.vertex_count(), cc.edges().len()), (9, 10));
        assert!(
            Graph::clique_sum_1(&Graph::cycle(5).unwrap(), &Graph::path(4).unwrap(), 6, 1).is_err()
        );

        let k4 = Graph::join(&Graph::path(2).unwrap(), &Graph::path(2).unwrap()).unwrap();
        assert_eq!(k4.edges().len(), 6);
        let j = Graph::join(&Graph::cycle(5).unwrap(), &Graph::path(4).unwrap()).unwrap();
        assert_eq!((j.vertex_count(), j.edges().len()), (9, 28));
        let cone = Graph::join(&Graph::path(3).unwrap(), &Graph::empty(1).unwrap()).unwrap();
        assert_eq!(cone.neighborhood(&set(&[4])).unwrap(), set(&[1, 2, 3]));
    }

    #[test]
    fn example_clique_sum_ideal() {
        let g1 = Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).unwrap();
        // x1, x7, x8, x9, x10 renumbered 1..5
        let g2 = Graph::from_edges(5, [(1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
        let h = Graph::clique_sum_1(&g1, &g2, 1, 1).unwrap();
        let expected = Graph::from_edges(
            10,
            [
                (1, 2),
                (2, 3),
                (3, 4),
                (2, 5),
                (5, 6),
                (1, 7),
                (7, 8),
                (1, 9),
                (9, 10),
            ],
        )
        .unwrap();
        assert_eq!(h.edge_ideal().unwrap(), expected.edge_ideal().unwrap());
    }

    #[test]
    fn edge_ideals() {
        let p4 = Graph::path(4).unwrap().edge_ideal().unwrap();
        assert_eq!(p4.to_string(), "<x3*x4, x2*x3, x1*x2>");
        let c5 = Graph::cycle(5)
            .unwrap()
            .with_labels(["a", "b", "c", "d", "e"].map(String::from).to_vec())
            .unwrap();
        assert_eq!(
            c5.edge_ideal().unwrap().render(&c5.names()),
            "d*e, c*d, b*c, a*e, a*b"
        );
        assert_eq!(Graph::empty(3).unwrap().edge_ideal(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn neighborhoods_and_covers() {
        let p4 = Graph::path(4).unwrap();
        let n = p4.neighborhood(&set(&[3])).unwrap();
        assert_eq!(n, set(&[2, 4]));
        assert!(p4.is_minimal_vertex_cover(&n).unwrap());
        assert!(p4.neighborhood(&set(&[])).unwrap().is_empty());
        assert!(!p4.is_vertex_cover(&set(&[])).unwrap());
        assert!(p4.neighborhood(&set(&[5])).is_err());

        let c5 = Graph::cycle(5).unwrap();
        assert!(!c5.is_vertex_cover(&set(&[1, 2, 3])).unwrap());
        // {a,b,c} misses de; {a,b,c,d} covers but drops b
        assert!(c5.is_vertex_cover(&set(&[1, 2, 3, 4])).unwrap());
        assert!(!c5.is_minimal_vertex_cover(&set(&[1, 2, 3, 4])).unwrap());
        assert!(c5.is_minimal_vertex_cover(&set(&[1, 3, 4])).unwrap());
        assert!(c5.is_stable(&set(&[1, 3])).unwrap());
        assert!(!c5.is_stable(&set(&[1, 2])).unwrap());
    }

    #[test]
    fn v_graph_examples() {
        let w = v_graph(&Graph::path(4).unwrap(), &CFG).unwrap();
        assert_eq!(w.value, 1);
        assert!(w.is_valid_for(&Graph::path(4).unwrap()));
        assert_eq!(v_graph(&Graph::cycle(5).unwrap(), &CFG).unwrap().value, 2);
        assert_eq!(v_graph(&Graph::path(6).unwrap(), &CFG).unwrap().value, 2);
        assert_eq!(
            v_graph(&Graph::empty(2).unwrap(), &CFG),
            Err(Error::ZeroIdeal)
        );
        let big = Graph::path(25).unwrap();
        assert!(matches!(v_graph(&big, &CFG), Err(Error::InvalidGraph(_))));
        let tiny = SearchConfig { budget: 3 };
        assert!(v_graph(&Graph::path(10).unwrap(), &tiny)
            .unwrap_err()
            .is_budget());
    }

    #[test]
    fn all_witnesses_of_p4() {
        let all = v_graph_all(&Graph::path(4).unwrap(), &CFG).unwrap();
        let sets: Vec<_> = all.iter().map(|w| w.stable_set.clone()).collect();
        assert_eq!(sets, vec![set(&[2]), set(&[3])]);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(v_path_closed(4).unwrap(), 1);
        assert_eq!(v_path_closed(5).unwrap(), 1);
        assert_eq!(v_path_closed(6).unwrap(), 2);
        assert_eq!(v_path_closed(10).unwrap(), 3);
        assert_eq!(v_path_closed(2).unwrap(), 1);
        assert!(v_path_closed(1).is_err());

        assert_eq!(v_cycle_closed(5).unwrap(), 2);
        assert_eq!(v_cycle_closed(3).unwrap(), 1);
        assert_eq!(v_cycle_closed(4).unwrap(), 1);
        assert_eq!(v_cycle_closed(9).unwrap(), 3);
        assert!(v_cycle_closed(2).is_err());

        let c5 = Graph::cycle(5).unwrap();
        let p4 = Graph::path(4).unwrap();
        let p6 = Graph::path(6).unwrap();
        assert_eq!(v_join_closed(&c5, &p4, &CFG).unwrap(), 1);
        assert_eq!(v_join_closed(&p6, &p6, &CFG).unwrap(), 2);
        assert_eq!(
            v_graph(&Graph::join(&c5, &c5).unwrap(), &CFG)
                .unwrap()
                .value,
            2
        );
        let point = Graph::empty(1).unwrap();
        assert_eq!(v_join_closed(&c5, &point, &CFG).unwrap(), 1);
    }

    #[test]
    fn clique_sum_formulas() {
        let a = clique_sum_analysis(CliqueSumKind::CyclePath { cycle: 5, path: 8 }).unwrap();
        assert_eq!(
            a,
            CliqueSumAnalysis {
                lower: 3,
                upper: 4,
                exact: Some(3)
            }
        );
        let b = clique_sum_analysis(CliqueSumKind::CycleCycle {
            first: 5,
            second: 5,
        })
        .unwrap();
        assert_eq!(b.exact, Some(3));
        let c = clique_sum_analysis(CliqueSumKind::CyclePath { cycle: 6, path: 8 }).unwrap();
        assert_eq!(c.exact, Some(3));
        let d = clique_sum_analysis(CliqueSumKind::CyclePath { cycle: 7, path: 8 }).unwrap();
        assert_eq!(d.exact, None);
        assert!(clique_sum_analysis(CliqueSumKind::CyclePath { cycle: 4, path: 8 }).is_err());
        assert!(clique_sum_analysis(CliqueSumKind::CyclePath { cycle: 5, path: 3 }).is_err());
    }
}
