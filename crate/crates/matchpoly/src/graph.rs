//! Weighted graphs: simple undirected graphs with Gaussian-rational edge
//! weights and rational vertex weights.
//!
//! Vertices are dense indices 0..n-1; user-facing string labels ride along
//! so deletions and reports can always name the original vertex. The weight
//! of an edge belongs to the unordered pair; ordering semantics (which end
//! gets the conjugate) enter only when a Hermitian matrix is built, which is
//! why `permute` can change the characteristic polynomial but never the
//! matching polynomial.

use std::collections::BTreeMap;

use num::Zero;

use crate::error::{Error, Result};
use crate::rational::{GaussianRational, Rational};

/// Caps for the brute-force enumerators. These guard oracle-grade routines;
/// the production recurrences have their own (much higher) vertex cap.
#[derive(Clone, Debug)]
pub struct EnumerationCaps {
    /// Largest vertex count an enumerator will touch.
    pub max_vertices: usize,
    /// Most items a materializing enumerator will collect.
    pub max_items: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps { max_vertices: 16, max_items: 1_000_000 }
    }
}

impl EnumerationCaps {
    pub fn with_max_vertices(n: usize) -> Self {
        EnumerationCaps { max_vertices: n, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    labels: Vec<String>,
    vertex_weights: Vec<Rational>,
    edges: BTreeMap<(usize, usize), GaussianRational>,
    adj: Vec<Vec<usize>>,
}

impl WeightedGraph {
    /// Build and validate. `labels` defaults to "0".."n-1". Rejects loops,
    /// duplicate edges, zero edge weights, out-of-range endpoints, and
    /// duplicate labels, naming the offender.
    pub fn from_parts(
        labels: Option<Vec<String>>,
        vertex_weights: Vec<Rational>,
        edge_list: Vec<(usize, usize, GaussianRational)>,
    ) -> Result<Self> {
        let n = vertex_weights.len();
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(Error::input(format!(
                        "{} labels for {} vertices",
                        l.len(),
                        n
                    )));
                }
                l
            }
            None => (0..n).map(|v| v.to_string()).collect(),
        };
        {
            let mut seen = std::collections::BTreeSet::new();
            for l in &labels {
                if !seen.insert(l) {
                    return Err(Error::input(format!("duplicate vertex id {l:?}")));
                }
            }
        }
        let mut edges = BTreeMap::new();
        for (u, v, w) in edge_list {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge endpoint {} out of range for {} vertices",
                    u.max(v),
                    n
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {:?}", labels[u])));
            }
            if w.is_zero() {
                return Err(Error::input(format!(
                    "zero weight on edge {:?}-{:?}",
                    labels[u.min(v)],
                    labels[u.max(v)]
                )));
            }
            let key = (u.min(v), u.max(v));
            if edges.insert(key, w).is_some() {
                return Err(Error::input(format!(
                    "duplicate edge {:?}-{:?}",
                    labels[key.0], labels[key.1]
                )));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges.keys() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(WeightedGraph { labels, vertex_weights, edges, adj })
    }

    /// Unweighted-style test helper: unit edge weights, zero vertex weights.
    pub fn with_unit_weights(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        WeightedGraph::from_parts(
            None,
            vec![Rational::zero(); n],
            edge_list.iter().map(|&(u, v)| (u, v, GaussianRational::one())).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.vertex_weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertex_weight(&self, v: usize) -> &Rational {
        &self.vertex_weights[v]
    }

    pub fn vertex_weights(&self) -> &[Rational] {
        &self.vertex_weights
    }

    /// Weight of the unordered edge {u, v}, if present.
    pub fn edge_weight(&self, u: usize, v: usize) -> Option<&GaussianRational> {
        self.edges.get(&(u.min(v), u.max(v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains_key(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges as (u, v, weight) with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &GaussianRational)> {
        self.edges.iter().map(|(&(u, v), w)| (u, v, w))
    }

    /// Induced subgraph on `keep` (sorted, deduplicated); survivors keep
    /// their relative order, weights, and labels.
    pub fn induced(&self, keep: &[usize]) -> Result<Self> {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n()) {
            return Err(Error::input(format!(
                "vertex index {bad} out of range for {} vertices",
                self.n()
            )));
        }
        let mut new_index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let weights = keep.iter().map(|&v| self.vertex_weights[v].clone()).collect();
        let edge_list = self
            .edges
            .iter()
            .filter(|(&(u, v), _)| new_index[u] != usize::MAX && new_index[v] != usize::MAX)
            .map(|(&(u, v), w)| (new_index[u], new_index[v], w.clone()))
            .collect();
        WeightedGraph::from_parts(Some(labels), weights, edge_list)
    }

    /// G minus a set of vertices, value semantics.
    pub fn delete_vertices(&self, remove: &[usize]) -> Result<Self> {
        if let Some(&bad) = remove.iter().find(|&&v| v >= self.n()) {
            return Err(Error::input(format!(
                "vertex index {bad} out of range for {} vertices",
                self.n()
            )));
        }
        let mut gone = vec![false; self.n()];
        for &v in remove {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.delete_vertices(&[v])
    }

    /// G minus one edge; the edge must exist.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n() || v >= self.n() {
            return Err(Error::input(format!(
                "vertex index {} out of range for {} vertices",
                u.max(v),
                self.n()
            )));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.contains_key(&key) {
            return Err(Error::input(format!(
                "no edge between {:?} and {:?}",
                self.labels[key.0], self.labels[key.1]
            )));
        }
        let edge_list = self
            .edges
            .iter()
            .filter(|(&k, _)| k != key)
            .map(|(&(a, b), w)| (a, b, w.clone()))
            .collect();
        WeightedGraph::from_parts(
            Some(self.labels.clone()),
            self.vertex_weights.clone(),
            edge_list,
        )
    }

    /// Connected components as index sets, ordered by smallest member.
    pub fn component_index_sets(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut queue = vec![start];
            seen[start] = true;
            let mut comp = Vec::new();
            while let Some(v) = queue.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components as graphs, same order as the index sets.
    pub fn components(&self) -> Vec<Self> {
        self.component_index_sets()
            .iter()
            .map(|set| self.induced(set).expect("component indices are valid"))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_index_sets().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_index_sets().len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.is_forest() && self.is_connected()
    }

    /// Relabel by the bijection sigma (old index v becomes sigma[v]). Labels
    /// and weights travel with their vertex; the unordered edge weights are
    /// unchanged, so this is a weight-isomorphism onto the result.
    pub fn permute(&self, sigma: &[usize]) -> Result<Self> {
        if sigma.len() != self.n() {
            return Err(Error::input(format!(
                "permutation of length {} for {} vertices",
                sigma.len(),
                self.n()
            )));
        }
        let mut seen = vec![false; self.n()];
        for &img in sigma {
            if img >= self.n() || seen[img] {
                return Err(Error::input("not a permutation of the vertex set"));
            }
            seen[img] = true;
        }
        let mut labels = vec![String::new(); self.n()];
        let mut weights = vec![Rational::zero(); self.n()];
        for v in 0..self.n() {
            labels[sigma[v]] = self.labels[v].clone();
            weights[sigma[v]] = self.vertex_weights[v].clone();
        }
        let edge_list = self
            .edges
            .iter()
            .map(|(&(u, v), w)| (sigma[u], sigma[v], w.clone()))
            .collect();
        WeightedGraph::from_parts(Some(labels), weights, edge_list)
    }

    /// Neighbor bitmasks for the subset-memo routes; hard 64-vertex cap.
    pub(crate) fn neighbor_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(Error::resource(format!(
                "graph has {} vertices; subset-indexed routes support at most 64",
                self.n()
            )));
        }
        Ok(self
            .adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &u| m | (1u64 << u)))
            .collect())
    }

    fn check_enumeration_cap(&self, caps: &EnumerationCaps) -> Result<()> {
        if self.n() > caps.max_vertices {
            return Err(Error::resource(format!(
                "graph has {} vertices; enumeration cap is {}",
                self.n(),
                caps.max_vertices
            )));
        }
        if self.n() > 64 {
            return Err(Error::resource(format!(
                "graph has {} vertices; enumerators support at most 64",
                self.n()
            )));
        }
        Ok(())
    }

    /// All matchings (including the empty one), lazily, each exactly once,
    /// in a deterministic order.
    pub fn enumerate_matchings(&self, caps: &EnumerationCaps) -> Result<MatchingsIter<'_>> {
        self.check_enumeration_cap(caps)?;
        let full: u64 = if self.n() == 64 { u64::MAX } else { (1u64 << self.n()) - 1 };
        Ok(MatchingsIter { graph: self, stack: vec![(full, Vec::new())] })
    }

    /// All simple paths from u to v (u != v), with the product of their edge
    /// weights, in a deterministic order.
    pub fn enumerate_paths_between(
        &self,
        u: usize,
        v: usize,
        caps: &EnumerationCaps,
    ) -> Result<Vec<GraphPath>> {
        self.check_enumeration_cap(caps)?;
        if u >= self.n() || v >= self.n() {
            return Err(Error::input(format!(
                "vertex index {} out of range for {} vertices",
                u.max(v),
                self.n()
            )));
        }
        if u == v {
            return Err(Error::input("path endpoints must be distinct"));
        }
        let mut out = Vec::new();
        let mut path = vec![u];
        let mut visited = 1u64 << u;
        self.path_dfs(u, v, &mut path, &mut visited, &GaussianRational::one(), &mut out, caps)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn path_dfs(
        &self,
        at: usize,
        target: usize,
        path: &mut Vec<usize>,
        visited: &mut u64,
        weight: &GaussianRational,
        out: &mut Vec<GraphPath>,
        caps: &EnumerationCaps,
    ) -> Result<()> {
        for &next in &self.adj[at] {
            if *visited & (1u64 << next) != 0 {
                continue;
            }
            let w = &self.edges[&(at.min(next), at.max(next))];
            let acc = weight * w;
            if next == target {
                if out.len() >= caps.max_items {
                    return Err(Error::resource(format!(
                        "more than {} paths between the endpoints",
                        caps.max_items
                    )));
                }
                let mut vertices = path.clone();
                vertices.push(target);
                out.push(GraphPath { vertices, weight: acc });
                continue;
            }
            path.push(next);
            *visited |= 1u64 << next;
            self.path_dfs(next, target, path, visited, &acc, out, caps)?;
            *visited &= !(1u64 << next);
            path.pop();
        }
        Ok(())
    }

    /// All simple cycles (length >= 3), canonical orientation: smallest
    /// vertex first, then toward its smaller cycle-neighbor.
    pub fn enumerate_cycles(&self, caps: &EnumerationCaps) -> Result<Vec<Cycle>> {
        self.check_enumeration_cap(caps)?;
        let mut out = Vec::new();
        for anchor in 0..self.n() {
            let mut path = vec![anchor];
            let mut visited = 1u64 << anchor;
            self.cycle_dfs(anchor, anchor, &mut path, &mut visited, &mut out, caps)?;
        }
        Ok(out)
    }

    fn cycle_dfs(
        &self,
        anchor: usize,
        at: usize,
        path: &mut Vec<usize>,
        visited: &mut u64,
        out: &mut Vec<Cycle>,
        caps: &EnumerationCaps,
    ) -> Result<()> {
        for &next in &self.adj[at] {
            if next <= anchor || *visited & (1u64 << next) != 0 {
                continue;
            }
            path.push(next);
            *visited |= 1u64 << next;
            if path.len() >= 3 && self.has_edge(next, anchor) && path[1] < next {
                if out.len() >= caps.max_items {
                    return Err(Error::resource(format!(
                        "more than {} cycles",
                        caps.max_items
                    )));
                }
                out.push(Cycle { vertices: path.clone() });
            }
            self.cycle_dfs(anchor, next, path, visited, out, caps)?;
            *visited &= !(1u64 << next);
            path.pop();
        }
        Ok(())
    }

    /// All nonempty sets of pairwise vertex-disjoint cycles, deterministic
    /// order, each exactly once.
    pub fn enumerate_cycle_unions(&self, caps: &EnumerationCaps) -> Result<Vec<CycleUnion>> {
        let cycles = self.enumerate_cycles(caps)?;
        let masks: Vec<u64> = cycles.iter().map(|c| c.vertex_mask()).collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        Self::union_dfs(&cycles, &masks, 0, 0, &mut chosen, &mut out, caps)?;
        Ok(out)
    }

    fn union_dfs(
        cycles: &[Cycle],
        masks: &[u64],
        from: usize,
        used: u64,
        chosen: &mut Vec<usize>,
        out: &mut Vec<CycleUnion>,
        caps: &EnumerationCaps,
    ) -> Result<()> {
        for i in from..cycles.len() {
            if masks[i] & used != 0 {
                continue;
            }
            chosen.push(i);
            if out.len() >= caps.max_items {
                return Err(Error::resource(format!(
                    "more than {} cycle unions",
                    caps.max_items
                )));
            }
            out.push(CycleUnion { cycles: chosen.iter().map(|&j| cycles[j].clone()).collect() });
            Self::union_dfs(cycles, masks, i + 1, used | masks[i], chosen, out, caps)?;
            chosen.pop();
        }
        Ok(())
    }
}

/// A set of pairwise vertex-disjoint edges, each stored (min, max), sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Bitmask of covered vertices.
    pub fn covered_mask(&self) -> u64 {
        self.edges.iter().fold(0u64, |m, &(u, v)| m | (1u64 << u) | (1u64 << v))
    }
}

/// Lazy depth-first matching enumerator. At each undecided vertex the
/// "leave unmatched" branch comes first, then partners in ascending order.
pub struct MatchingsIter<'g> {
    graph: &'g WeightedGraph,
    stack: Vec<(u64, Vec<(usize, usize)>)>,
}

impl Iterator for MatchingsIter<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        while let Some((undecided, chosen)) = self.stack.pop() {
            if undecided == 0 {
                return Some(Matching { edges: chosen });
            }
            let v = undecided.trailing_zeros() as usize;
            let rest = undecided & !(1u64 << v);
            // Pushed in reverse so the pop order is: unmatched first, then
            // partners ascending.
            let partners: Vec<usize> = self
                .graph
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| rest & (1u64 << u) != 0)
                .collect();
            for &u in partners.iter().rev() {
                let mut next = chosen.clone();
                next.push((v.min(u), v.max(u)));
                self.stack.push((rest & !(1u64 << u), next));
            }
            self.stack.push((rest, chosen));
        }
        None
    }
}

/// A simple path with the product of its edge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphPath {
    pub vertices: Vec<usize>,
    pub weight: GaussianRational,
}

impl GraphPath {
    /// |w(p)|^2, the quantity the endpoint-path identity consumes.
    pub fn weight_norm_sqr(&self) -> Rational {
        self.weight.norm_sqr()
    }
}

/// A simple cycle, canonically oriented (see `enumerate_cycles`). Identity
/// is the vertex sequence: two cycles on the same vertex set with different
/// adjacency are distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex_mask(&self) -> u64 {
        self.vertices.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    /// Consecutive unordered edges, including the closing one.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.vertices.len();
        (0..k).map(|i| (self.vertices[i], self.vertices[(i + 1) % k])).collect()
    }
}

/// A nonempty set of pairwise vertex-disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleUnion {
    cycles: Vec<Cycle>,
}

impl CycleUnion {
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Number of cycles, the sign exponent in the cycle expansion.
    pub fn component_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn vertex_mask(&self) -> u64 {
        self.cycles.iter().fold(0u64, |m, c| m | c.vertex_mask())
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cycles.iter().flat_map(|c| c.vertices().iter().copied()).collect();
        v.sort_unstable();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_int, GaussianRational};

    fn path_graph(n: usize) -> WeightedGraph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|k| (k, k + 1)).collect();
        WeightedGraph::with_unit_weights(n, &edges).unwrap()
    }

    #[test]
    fn construction_rejects_malformed_graphs() {
        let loops = WeightedGraph::with_unit_weights(2, &[(1, 1)]);
        assert!(loops.unwrap_err().to_string().contains("loop"));
        let dup = WeightedGraph::with_unit_weights(3, &[(0, 1), (1, 0)]);
        assert!(dup.unwrap_err().to_string().contains("duplicate edge"));
        let zero = WeightedGraph::from_parts(
            None,
            vec![Rational::zero(); 2],
            vec![(0, 1, GaussianRational::zero())],
        );
        assert!(zero.unwrap_err().to_string().contains("zero weight"));
        let range = WeightedGraph::with_unit_weights(2, &[(0, 2)]);
        assert!(range.unwrap_err().to_string().contains("out of range"));
        let labels = WeightedGraph::from_parts(
            Some(vec!["a".into(), "a".into()]),
            vec![Rational::zero(); 2],
            vec![],
        );
        assert!(labels.unwrap_err().to_string().contains("duplicate vertex id"));
    }

    #[test]
    fn deletion_keeps_order_weights_and_labels() {
        let g = WeightedGraph::from_parts(
            Some(vec!["a".into(), "b".into(), "c".into(), "d".into()]),
            vec![rat_int(1), rat_int(2), rat_int(3), rat_int(4)],
            vec![
                (0, 1, GaussianRational::of(1, 1)),
                (1, 2, GaussianRational::of(0, 1)),
                (2, 3, GaussianRational::of(5, 0)),
            ],
        )
        .unwrap();
        let h = g.delete_vertices(&[1]).unwrap();
        assert_eq!(h.labels(), &["a".to_string(), "c".to_string(), "d".to_string()]);
        assert_eq!(h.vertex_weight(1), &rat_int(3));
        assert_eq!(h.edge_weight(1, 2), Some(&GaussianRational::of(5, 0)));
        assert_eq!(h.edge_weight(0, 1), None);
        // Value semantics: g untouched.
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        // Deleting everything leaves the empty graph.
        assert_eq!(g.delete_vertices(&[0, 1, 2, 3]).unwrap().n(), 0);
    }

    #[test]
    fn delete_edge_requires_presence() {
        let g = path_graph(3);
        let h = g.delete_edge(1, 0).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert!(g.delete_edge(0, 2).is_err());
    }

    #[test]
    fn components_ordered_by_smallest_member() {
        let g = WeightedGraph::with_unit_weights(5, &[(3, 4), (0, 2)]).unwrap();
        let sets = g.component_index_sets();
        assert_eq!(sets, vec![vec![0, 2], vec![1], vec![3, 4]]);
        let comps = g.components();
        assert_eq!(comps[0].labels(), &["0".to_string(), "2".to_string()]);
        assert!(!g.is_connected());
        assert!(g.is_forest());
        assert!(!g.is_tree());
        assert!(path_graph(4).is_tree());
    }

    #[test]
    fn permutation_round_trips_and_validates() {
        let g = WeightedGraph::from_parts(
            None,
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![(0, 1, GaussianRational::of(1, 2)), (1, 2, GaussianRational::of(2, -7))],
        )
        .unwrap();
        let sigma = vec![2usize, 0, 1];
        let h = g.permute(&sigma).unwrap();
        assert_eq!(h.vertex_weight(2), &rat_int(1));
        assert_eq!(h.edge_weight(2, 0), Some(&GaussianRational::of(1, 2)));
        let mut inverse = vec![0usize; 3];
        for (v, &img) in sigma.iter().enumerate() {
            inverse[img] = v;
        }
        assert_eq!(h.permute(&inverse).unwrap(), g);
        assert!(g.permute(&[0, 0, 1]).is_err());
        assert!(g.permute(&[0, 1]).is_err());
    }

    #[test]
    fn matching_counts_on_small_graphs() {
        let caps = EnumerationCaps::default();
        let count = |g: &WeightedGraph| g.enumerate_matchings(&caps).unwrap().count();
        assert_eq!(count(&path_graph(3)), 3);
        assert_eq!(count(&path_graph(4)), 5);
        let triangle = WeightedGraph::with_unit_weights(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(count(&triangle), 4);
        let empty = WeightedGraph::with_unit_weights(0, &[]).unwrap();
        let all: Vec<Matching> = empty.enumerate_matchings(&caps).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].size(), 0);
    }

    #[test]
    fn matchings_are_disjoint_and_unique() {
        let g = WeightedGraph::with_unit_weights(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)],
        )
        .unwrap();
        let caps = EnumerationCaps::default();
        let all: Vec<Matching> = g.enumerate_matchings(&caps).unwrap().collect();
        let mut seen = std::collections::BTreeSet::new();
        for m in &all {
            for w in m.edges().windows(2) {
                assert!(w[0] < w[1], "edges sorted");
            }
            let mask_sum: u32 = m.edges().iter().map(|_| 2u32).sum();
            assert_eq!(m.covered_mask().count_ones(), mask_sum, "pairwise disjoint");
            assert!(seen.insert(m.edges().to_vec()), "no duplicates");
        }
    }

    #[test]
    fn path_enumeration_with_weights() {
        let g = WeightedGraph::from_parts(
            None,
            vec![Rational::zero(); 4],
            vec![
                (0, 1, GaussianRational::of(0, 1)),
                (1, 2, GaussianRational::of(0, 1)),
                (2, 3, GaussianRational::of(0, 1)),
                (0, 3, GaussianRational::of(0, 1)),
            ],
        )
        .unwrap();
        let caps = EnumerationCaps::default();
        let paths = g.enumerate_paths_between(0, 2, &caps).unwrap();
        assert_eq!(paths.len(), 2);
        // i * i = -1 both ways around the square.
        for p in &paths {
            assert_eq!(p.weight, GaussianRational::of(-1, 0));
            assert_eq!(p.weight_norm_sqr(), rat_int(1));
        }
        assert!(g.enumerate_paths_between(0, 0, &caps).is_err());
    }

    #[test]
    fn cycle_enumeration_canonical_and_complete() {
        let caps = EnumerationCaps::default();
        let k4 = WeightedGraph::with_unit_weights(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cycles = k4.enumerate_cycles(&caps).unwrap();
        assert_eq!(cycles.len(), 7); // 4 triangles + 3 four-cycles
        for c in &cycles {
            let vs = c.vertices();
            assert_eq!(vs[0], *vs.iter().min().unwrap());
            assert!(vs[1] < *vs.last().unwrap());
            for (u, v) in c.edge_pairs() {
                assert!(k4.has_edge(u, v));
            }
        }
        // No two disjoint cycles fit in K4.
        assert_eq!(k4.enumerate_cycle_unions(&caps).unwrap().len(), 7);
        let two_triangles =
            WeightedGraph::with_unit_weights(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let unions = two_triangles.enumerate_cycle_unions(&caps).unwrap();
        assert_eq!(unions.len(), 3);
        assert_eq!(unions.iter().filter(|u| u.component_count() == 2).count(), 1);
    }

    #[test]
    fn caps_are_enforced() {
        let g = path_graph(5);
        let small = EnumerationCaps { max_vertices: 4, max_items: 10 };
        assert!(matches!(g.enumerate_matchings(&small), Err(Error::Resource(_))));
        let tiny_items = EnumerationCaps { max_vertices: 16, max_items: 1 };
        let c5 = WeightedGraph::with_unit_weights(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(matches!(c5.enumerate_paths_between(0, 2, &tiny_items), Err(Error::Resource(_))));
    }
}
