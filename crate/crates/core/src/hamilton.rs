//! Hamilton cycles, longest cycles, toughness cuts, and Hamilton paths in
//! outerplanar graphs.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{bits, mask_closure, CanonicalCode, Graph, VertexSet};
use crate::topology::{is_block, outerplanar_embedding, xy_outerplanar_embedding};

/// Cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    pub vertices: Vec<usize>,
}

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Self {
        Cycle { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Cyclically consecutive pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// Length at least 3, distinct vertices, consecutive pairs are edges.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        self.vertices.len() >= 3
            && self
                .vertices
                .iter()
                .all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
            && self.edges().all(|(u, v)| g.has_edge(u, v))
    }

    pub fn is_hamiltonian_in(&self, g: &Graph) -> bool {
        self.vertices.len() == g.n() && self.verify(g)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

/// Vertex set whose removal leaves more components than its size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessCut {
    pub cut: VertexSet,
    pub component_count: usize,
}

impl ToughnessCut {
    pub fn verify(&self, g: &Graph) -> bool {
        self.cut.iter().all(|v| v < g.n())
            && g.connected_components(&self.cut).len() == self.component_count
            && self.component_count > self.cut.len()
    }
}

/// Hamilton path with the degree of its last vertex in the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamPath {
    pub vertices: Vec<usize>,
    pub terminal_degree: usize,
}

impl HamPath {
    /// Distinct vertices covering exactly `cover`, consecutive pairs edges.
    pub fn verify(&self, g: &Graph, cover: &VertexSet) -> bool {
        let mut seen = vec![false; g.n()];
        let distinct = self
            .vertices
            .iter()
            .all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true));
        distinct
            && self.vertices.len() == cover.len()
            && self.vertices.iter().all(|&v| cover.contains(v))
            && self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && self.vertices.last().map(|&t| g.degree(t)) == Some(self.terminal_degree)
    }
}

/// Record of an exhaustive negative search: node count, SHA-256 of the
/// node transcript, and the searched graph's canonical code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustionProof {
    pub nodes: u64,
    pub transcript_sha256: String,
    pub code: CanonicalCode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HamiltonResult {
    Cycle(Cycle),
    Exhausted(ExhaustionProof),
}

impl HamiltonResult {
    pub fn cycle(&self) -> Option<&Cycle> {
        match self {
            HamiltonResult::Cycle(c) => Some(c),
            HamiltonResult::Exhausted(_) => None,
        }
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.cycle().is_some()
    }
}

struct HamSearch<'a> {
    adj: &'a [u64],
    start: usize,
    first: usize,
    nodes: u64,
    hasher: Option<Sha256>,
    path: Vec<usize>,
}

impl HamSearch<'_> {
    /// `unvisited` excludes every path vertex; `cur` is the path end.
    fn extend(&mut self, cur: usize, unvisited: u64) -> bool {
        self.nodes += 1;
        if let Some(h) = self.hasher.as_mut() {
            h.update((cur as u8).to_le_bytes());
            h.update(unvisited.to_le_bytes());
        }
        let adj = self.adj;
        let s = self.start;
        if unvisited == 0 {
            return adj[cur] >> s & 1 == 1 && cur > self.first;
        }
        // The closing vertex is some unvisited neighbor of s above `first`.
        let above_first = !((2u64 << self.first) - 1);
        if adj[s] & unvisited & above_first == 0 {
            return false;
        }
        let ends = unvisited | 1 << s | 1 << cur;
        for u in bits(unvisited) {
            if (adj[u] & ends).count_ones() < 2 {
                return false;
            }
        }
        let low = unvisited & unvisited.wrapping_neg();
        if mask_closure(adj, low, unvisited) != unvisited {
            return false;
        }
        for w in bits(adj[cur] & unvisited) {
            self.path.push(w);
            if self.extend(w, unvisited & !(1 << w)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

fn ham_search(g: &Graph, transcript: bool) -> Result<(Option<Cycle>, u64, Option<Sha256>)> {
    let n = g.n();
    if n < 3 {
        return Err(Error::precondition("Hamilton cycle search needs at least 3 vertices"));
    }
    let adj = g.masks()?;
    let start = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = HamSearch {
        adj: &adj,
        start,
        first: 0,
        nodes: 0,
        hasher: transcript.then(Sha256::new),
        path: Vec::with_capacity(n),
    };
    if g.min_degree() >= 2 {
        for a in g.neighbors(start).to_vec() {
            search.first = a;
            search.path.clear();
            search.path.extend([start, a]);
            if search.extend(a, all & !(1 << start) & !(1 << a)) {
                let cycle = Cycle::new(search.path.clone());
                return Ok((Some(cycle), search.nodes, search.hasher));
            }
        }
    }
    Ok((None, search.nodes, search.hasher))
}

/// Exact Hamilton cycle search. A negative answer carries an
/// [`ExhaustionProof`].
pub fn hamilton_cycle(g: &Graph) -> Result<HamiltonResult> {
    let (cycle, nodes, hasher) = ham_search(g, true)?;
    Ok(match cycle {
        Some(c) => HamiltonResult::Cycle(c),
        None => HamiltonResult::Exhausted(ExhaustionProof {
            nodes,
            transcript_sha256: hex(&hasher.expect("transcript enabled").finalize()),
            code: g.canonical_code(),
        }),
    })
}

/// Hamilton cycle without transcript bookkeeping.
pub fn find_hamilton_cycle(g: &Graph) -> Result<Option<Cycle>> {
    Ok(ham_search(g, false)?.0)
}

pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    Ok(find_hamilton_cycle(g)?.is_some())
}

/// Re-runs the search and compares against a stored proof.
pub fn check_exhaustion(g: &Graph, proof: &ExhaustionProof) -> Result<bool> {
    match hamilton_cycle(g)? {
        HamiltonResult::Cycle(_) => Ok(false),
        HamiltonResult::Exhausted(p) => Ok(&p == proof),
    }
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// A longest cycle. Exact; intended for graphs with at most ~14 vertices.
pub fn longest_cycle(g: &Graph) -> Result<Cycle> {
    let n = g.n();
    if n >= 3 {
        if let Some(c) = find_hamilton_cycle(g)? {
            return Ok(c);
        }
    }
    let adj = g.masks()?;
    let mut best: Vec<usize> = Vec::new();
    fn dfs(adj: &[u64], s: usize, first: usize, cur: usize, free: u64, path: &mut Vec<usize>, best: &mut Vec<usize>) {
        if path.len() >= 3 && adj[cur] >> s & 1 == 1 && cur > first && path.len() > best.len() {
            *best = path.clone();
        }
        let reach = mask_closure(adj, adj[cur] & free, free);
        if path.len() + reach.count_ones() as usize <= best.len() {
            return;
        }
        for w in bits(adj[cur] & free) {
            path.push(w);
            dfs(adj, s, first, w, free & !(1 << w), path, best);
            path.pop();
        }
    }
    for s in 0..n {
        // Cycles whose least vertex is s.
        let free0 = adj[s] & !((2u64 << s) - 1);
        let above = if s + 1 >= 64 { 0 } else { !((2u64 << s) - 1) };
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if (n - s) <= best.len() {
            break;
        }
        for a in bits(free0) {
            let mut path = vec![s, a];
            dfs(&adj, s, a, a, all & above & !(1 << a), &mut path, &mut best);
        }
    }
    if best.is_empty() {
        return Err(Error::precondition("graph has no cycle"));
    }
    Ok(Cycle::new(best))
}

/// Every cycle of `g`, each listed once: least vertex first, second vertex
/// smaller than the last.
pub fn all_cycles(g: &Graph) -> Result<Vec<Cycle>> {
    let adj = g.masks()?;
    let n = g.n();
    let mut out = Vec::new();
    fn dfs(adj: &[u64], s: usize, cur: usize, free: u64, path: &mut Vec<usize>, out: &mut Vec<Cycle>) {
        if path.len() >= 3 && adj[cur] >> s & 1 == 1 && cur > path[1] {
            out.push(Cycle::new(path.clone()));
        }
        for w in bits(adj[cur] & free) {
            path.push(w);
            dfs(adj, s, w, free & !(1 << w), path, out);
            path.pop();
        }
    }
    for s in 0..n {
        let above = if s >= 63 { 0 } else { !((2u64 << s) - 1) };
        let mut path = vec![s];
        dfs(&adj, s, s, above & mask_all(n), &mut path, &mut out);
    }
    Ok(out)
}

fn mask_all(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Smallest vertex set `S` (size at most `max_size`) with more than `|S|`
/// components in `g - S`; subsets are scanned by size, then
/// lexicographically.
pub fn find_tough_cut(g: &Graph, max_size: usize) -> Result<Option<ToughnessCut>> {
    let n = g.n();
    let adj = g.masks()?;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let verts: Vec<usize> = (0..n).collect();
    for size in 1..=max_size.min(n) {
        let mut found = None;
        crate::minors::for_each_subset(&verts, size, &mut |sub| {
            if found.is_some() {
                return;
            }
            let cut = sub.iter().fold(0u64, |m, &v| m | 1 << v);
            let mut rest = all & !cut;
            let mut comps = 0;
            while rest != 0 {
                let c = mask_closure(&adj, rest & rest.wrapping_neg(), rest);
                rest &= !c;
                comps += 1;
            }
            if comps > size {
                found = Some(ToughnessCut {
                    cut: sub.iter().copied().collect(),
                    component_count: comps,
                });
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Hamilton path `x y ... t` in a 2-connected outerplanar graph, where `xy`
/// is an edge of the outer cycle and `t` has degree 2.
pub fn outerplanar_ham_path(g: &Graph, x: usize, y: usize) -> Result<HamPath> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::NoSuchVertex(v));
        }
    }
    if n < 3 || !is_block(g) {
        return Err(Error::precondition("graph is not 2-connected"));
    }
    let outer = outerplanar_embedding(g)?.ok_or_else(|| Error::precondition("graph is not outerplanar"))?;
    let walk = outer.outer_walk();
    let i = walk.iter().position(|&v| v == x).expect("outer cycle is Hamiltonian");
    let mut z: Vec<usize> = walk[i..].iter().chain(&walk[..i]).copied().collect();
    if z[1] != y {
        if z[n - 1] != y {
            return Err(Error::precondition("xy is not an edge of the outer cycle"));
        }
        z[1..].reverse();
    }
    let vertices = ham_path_along(g, z);
    let t = *vertices.last().unwrap();
    if g.degree(t) != 2 {
        return Err(Error::Internal(format!("outer path ends at {t} of degree {}", g.degree(t))));
    }
    Ok(HamPath {
        vertices,
        terminal_degree: 2,
    })
}

/// Induction on the outer cycle `z` (with `z[1]` following `z[0]`) of the
/// subgraph induced by its vertices.
fn ham_path_along(g: &Graph, mut z: Vec<usize>) -> Vec<usize> {
    let mut prefix: Vec<usize> = Vec::new();
    loop {
        let last = z.len() - 1;
        let w = z[last];
        let pos = |v: usize| z.iter().position(|&u| u == v);
        let chords: Vec<usize> = g
            .neighbors(w)
            .iter()
            .filter_map(|&v| pos(v))
            .filter(|&p| p != 0 && p != last - 1 && p != last)
            .collect();
        if z.len() == 3 || chords.is_empty() {
            prefix.extend(z);
            return prefix;
        }
        let p = *chords.iter().max().unwrap();
        prefix.extend(&z[..p]);
        let mut next = vec![z[p], w];
        next.extend(z[p + 1..last].iter().rev());
        z = next;
    }
}

/// Hamilton path `x ... t` of `g - y` for an xy-outerplanar `g`; `t = x`
/// when `g` has two vertices, otherwise `deg_g(t) = 2`.
pub fn outerplanar_ham_path_minus(g: &Graph, x: usize, y: usize) -> Result<HamPath> {
    if xy_outerplanar_embedding(g, x, y)?.is_none() {
        return Err(Error::precondition("graph is not xy-outerplanar"));
    }
    if g.n() == 2 {
        return Ok(HamPath {
            vertices: vec![x],
            terminal_degree: g.degree(x),
        });
    }
    let h = if g.has_edge(x, y) { g.clone() } else { g.add_edge(x, y)? };
    let p = outerplanar_ham_path(&h, y, x)?;
    let vertices = p.vertices[1..].to_vec();
    let t = *vertices.last().unwrap();
    Ok(HamPath {
        terminal_degree: g.degree(t),
        vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn k23() -> Graph {
        Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn cycle_is_hamiltonian() {
        let g = cycle(6);
        let c = hamilton_cycle(&g).unwrap();
        assert!(c.cycle().unwrap().is_hamiltonian_in(&g));
    }

    #[test]
    fn k23_negative_with_proof() {
        let g = k23();
        match hamilton_cycle(&g).unwrap() {
            HamiltonResult::Exhausted(p) => {
                assert_eq!(p.transcript_sha256.len(), 64);
                assert!(check_exhaustion(&g, &p).unwrap());
            }
            _ => panic!("K2,3 is not Hamiltonian"),
        }
        let cut = find_tough_cut(&g, 2).unwrap().unwrap();
        assert_eq!(cut.cut.as_slice(), &[0, 1]);
        assert_eq!(cut.component_count, 3);
    }

    #[test]
    fn small_graph_rejected() {
        assert!(hamilton_cycle(&Graph::from_edges(2, &[(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn petersen_longest_cycle_nine() {
        let g = petersen();
        assert!(!is_hamiltonian(&g).unwrap());
        let c = longest_cycle(&g).unwrap();
        assert_eq!(c.len(), 9);
        assert!(c.verify(&g));
    }

    #[test]
    fn k4_no_tough_cut() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(find_tough_cut(&k4, 3).unwrap().is_none());
        assert_eq!(longest_cycle(&k4).unwrap().len(), 4);
    }

    #[test]
    fn outerplanar_paths() {
        let k3 = cycle(3);
        let p = outerplanar_ham_path(&k3, 0, 1).unwrap();
        assert_eq!(p.vertices, vec![0, 1, 2]);
        let fan = Graph::from_edges(4, &[(0, 1), (1, 2), (3, 0), (3, 1), (3, 2)]).unwrap();
        let p = outerplanar_ham_path(&fan, 3, 0).unwrap();
        assert_eq!(p.vertices, vec![3, 0, 1, 2]);
        assert_eq!(p.terminal_degree, 2);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p = outerplanar_ham_path_minus(&k2, 0, 1).unwrap();
        assert_eq!(p.vertices, vec![0]);
        let p = outerplanar_ham_path_minus(&k3, 0, 1).unwrap();
        assert_eq!(p.vertices, vec![0, 2]);
        assert!(outerplanar_ham_path(&cycle(5), 0, 2).is_err());
    }

    #[test]
    fn chord_recursion() {
        // Hexagon 0..5 with chords 5-1 and 5-3: w = 5 has chord neighbors.
        let g = cycle(6).add_edge(5, 1).unwrap().add_edge(5, 3).unwrap();
        let p = outerplanar_ham_path(&g, 0, 1).unwrap();
        assert_eq!(&p.vertices[..2], &[0, 1]);
        assert!(p.verify(&g, &(0..6).collect()));
        assert_eq!(g.degree(*p.vertices.last().unwrap()), 2);
    }
}
