//! Simple undirected graphs with dense vertex ids.
//!
//! A [`Graph`] is an immutable value: every structural edit returns a new
//! graph, and edits that remove vertices renumber the survivors densely and
//! hand back the old-id to new-id mapping.

mod canon;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_labeling, CanonicalCode};
pub use graph6::{decode_graph6, decode_sparse6, encode_graph6, encode_sparse6, parse_graph_line};

/// Old vertex id to new vertex id, produced by contractions.
pub type IdMap = Vec<usize>;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// Bitmask form; every member must be below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | (1u64 << v))
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(bits(mask).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Iterates the set bits of a mask in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n(),
            edges: g.edges().collect(),
            labels: g.labels,
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        let g = Graph::from_edges(r.n, &r.edges)?;
        match r.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Graph on `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge; loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Graph { adj, labels: None }
    }

    /// Builds a graph from per-vertex neighbor bitmasks (n ≤ 64).
    pub fn from_masks(masks: &[u64]) -> Self {
        let adj = masks.iter().map(|&m| bits(m).collect()).collect();
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External name of `v`, or its id when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Vertex id carrying `label`.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
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

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::NoSuchVertex(v))
        }
    }

    /// Per-vertex neighbor bitmasks. Fails for graphs with more than 64
    /// vertices.
    pub fn masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(Error::TooLarge(self.n()));
        }
        Ok(self
            .adj
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect())
    }

    /// `self + uv`. Adding an existing edge returns an equal graph.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::OutOfRange { u, v, n });
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        let mut g = self.clone();
        if let Err(p) = g.adj[u].binary_search(&v) {
            g.adj[u].insert(p, v);
            let q = g.adj[v].binary_search(&u).unwrap_err();
            g.adj[v].insert(q, u);
        }
        Ok(g)
    }

    /// `self - uv`.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        Ok(g)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut adj = vec![Vec::new(); n];
        for (v, list) in self.adj.iter().enumerate() {
            let mut l: Vec<usize> = list.iter().map(|&w| perm[w]).collect();
            l.sort_unstable();
            adj[perm[v]] = l;
        }
        let labels = self.labels.as_ref().map(|old| {
            let mut l = vec![String::new(); n];
            for v in 0..n {
                l[perm[v]] = old[v].clone();
            }
            l
        });
        Graph { adj, labels }
    }

    /// Subgraph induced by `keep`, renumbered in increasing id order.
    /// Returns the graph and the map old id -> new id.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n()];
        for (i, v) in keep.iter().enumerate() {
            map[v] = Some(i);
        }
        let adj = keep
            .iter()
            .map(|v| self.adj[v].iter().filter_map(|&w| map[w]).collect())
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|v| l[v].clone()).collect());
        (Graph { adj, labels }, map)
    }

    /// Deletes the given vertices.
    pub fn delete_vertices(&self, removed: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let keep: VertexSet = (0..self.n()).filter(|&v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Contracts the edge `uv`: the endpoints merge, loops and parallel
    /// edges disappear, and the vertex count drops by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, IdMap)> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(self.contract_set(&[u, v].into_iter().collect()))
    }

    /// Merges a vertex set into one vertex, which takes the smallest id of
    /// the set (after renumbering). The set need not be connected.
    pub fn contract_set(&self, set: &VertexSet) -> (Graph, IdMap) {
        let n = self.n();
        let Some(rep) = set.first() else {
            return (self.clone(), (0..n).collect());
        };
        let mut map = vec![0usize; n];
        let mut next = 0;
        for v in 0..n {
            if set.contains(v) && v != rep {
                continue;
            }
            map[v] = next;
            next += 1;
        }
        for v in set.iter() {
            map[v] = map[rep];
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); next];
        for (u, w) in self.edges() {
            let (a, b) = (map[u], map[w]);
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for l in &mut adj {
            l.sort_unstable();
            l.dedup();
        }
        let labels = self.labels.as_ref().map(|old| {
            let mut l = vec![String::new(); next];
            for v in (0..n).rev() {
                l[map[v]] = old[v].clone();
            }
            l
        });
        (Graph { adj, labels }, map)
    }

    /// Vertex sets of the components of `self - removed`, each sorted, in
    /// order of their smallest vertex.
    pub fn connected_components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        for v in removed.iter() {
            if v < n {
                seen[v] = true;
            }
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.connected_components(&VertexSet::new()).len() == 1
    }

    /// Shortest path from `from` to `to` whose internal vertices all satisfy
    /// `allowed`. Returns the vertex sequence including both ends.
    pub fn shortest_path_through(
        &self,
        from: usize,
        to: usize,
        allowed: impl Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        self.check_vertex(from).ok()?;
        self.check_vertex(to).ok()?;
        let n = self.n();
        let mut prev = vec![usize::MAX; n];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if prev[w] != usize::MAX {
                    continue;
                }
                if w == to {
                    prev[w] = v;
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                if allowed(w) {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// True when the graph is bipartite; returns the side of each vertex.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &w in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Disjoint union of `self` and `other`; `other`'s ids are shifted by
    /// `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + off).collect::<Vec<_>>()),
        );
        Graph { adj, labels: None }
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canon::canonical_code(self)
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        parse_graph_line(s)
    }
}

/// Connected components of `g - removed`.
pub fn connected_components(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    g.connected_components(removed)
}

/// Connected-closure of `start` inside `allowed` (bitmask form).
pub(crate) fn mask_closure(adj: &[u64], start: u64, allowed: u64) -> u64 {
    let mut reached = start & allowed;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= allowed & !reached;
        reached |= next;
        frontier = next;
    }
    reached
}

/// Union of neighborhoods of the members of `set`.
pub(crate) fn mask_neighbors(adj: &[u64], set: u64) -> u64 {
    bits(set).fold(0, |acc, v| acc | adj[v])
}

/// True when `set` is nonempty and induces a connected subgraph.
pub(crate) fn mask_connected(adj: &[u64], set: u64) -> bool {
    set != 0 && mask_closure(adj, set & set.wrapping_neg(), set) == set
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn build_complete_graph() {
        let g = k(4);
        assert_eq!(g.degrees(), vec![3, 3, 3, 3]);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn build_dedups_symmetric_pairs() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn build_rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::OutOfRange { u: 0, v: 3, n: 3 })
        );
    }

    #[test]
    fn contract_k4_edge_gives_k3() {
        let (h, map) = k(4).contract_edge(1, 2).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        assert_eq!(map, vec![0, 1, 1, 2]);
    }

    #[test]
    fn contract_non_edge_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.contract_edge(0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn components_of_k23_minus_small_side() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let comps = g.connected_components(&[0, 1].into_iter().collect());
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
        assert_eq!(k(4).connected_components(&VertexSet::new()).len(), 1);
    }

    #[test]
    fn labels_follow_relabel_and_contract() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let r = g.relabel(&[2, 1, 0]);
        assert_eq!(r.label(2), "a");
        let (c, _) = g.contract_edge(1, 2).unwrap();
        assert_eq!(c.labels().unwrap(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn girth_and_bipartition() {
        let c6 = Graph::from_edges(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>()).unwrap();
        assert_eq!(c6.girth(), Some(6));
        assert!(c6.bipartition().is_some());
        assert!(k(3).bipartition().is_none());
        assert_eq!(Graph::from_edges(3, &[(0, 1)]).unwrap().girth(), None);
    }

    #[test]
    fn serde_roundtrip_keeps_labels() {
        let g = Graph::from_edges(2, &[(0, 1)])
            .unwrap()
            .with_labels(vec!["x".into(), "y".into()])
            .unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
