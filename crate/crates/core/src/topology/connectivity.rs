//! Vertex connectivity, blocks, and internally disjoint path search.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, mask_closure, Graph, VertexSet};

/// Paths sharing only their two common endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointPaths {
    pub paths: Vec<Vec<usize>>,
}

impl DisjointPaths {
    /// Checks the paths against `g`: each is a path between the same two
    /// ends and no internal vertex is shared.
    pub fn verify(&self, g: &Graph, x: usize, y: usize) -> bool {
        let mut used = vec![false; g.n()];
        for p in &self.paths {
            if p.len() < 2 || p[0] != x || p[p.len() - 1] != y {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &p[1..p.len() - 1] {
                if v == x || v == y || used[v] {
                    return false;
                }
                used[v] = true;
            }
        }
        let direct = self.paths.iter().filter(|p| p.len() == 2).count();
        direct <= 1
    }
}

/// Biconnected components as edge lists, plus the articulation points.
pub fn blocks(g: &Graph) -> (Vec<Vec<(usize, usize)>>, Vec<usize>) {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut out = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        out.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    let cuts = (0..n).filter(|&v| is_cut[v]).collect();
    (out, cuts)
}

/// A block is a connected graph without a cutvertex: 2-connected, K2 or K1.
pub fn is_block(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    g.n() <= 2 || blocks(g).1.is_empty()
}

struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, a: usize, b: usize, c: i32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut prev_edge = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    prev_edge[v] = e;
                    if v == t {
                        let mut cur = t;
                        while cur != s {
                            let e = prev_edge[cur];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            cur = self.to[e ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        false
    }
}

/// Vertex-split unit-capacity network: `v_in = 2v`, `v_out = 2v + 1`.
/// Edge ids of the graph arcs are returned for path extraction.
fn split_network(g: &Graph, s: usize, t: usize) -> FlowNet {
    let n = g.n();
    let big = n as i32 + 1;
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.add(2 * u + 1, 2 * v, 1);
        net.add(2 * v + 1, 2 * u, 1);
    }
    net
}

/// Maximum number of internally disjoint `s`-`t` paths, stopping early
/// once `limit` is reached.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = split_network(g, s, t);
    let mut flow = 0;
    while flow < limit && net.augment(2 * s + 1, 2 * t) {
        flow += 1;
    }
    flow
}

fn flow_paths(g: &Graph, s: usize, t: usize, k: usize) -> Option<Vec<Vec<usize>>> {
    let mut net = split_network(g, s, t);
    let mut flow = 0;
    while flow < k && net.augment(2 * s + 1, 2 * t) {
        flow += 1;
    }
    if flow < k {
        return None;
    }
    // An arc u_out -> v_in carries flow when its reverse has capacity.
    let n = g.n();
    let mut used = vec![false; net.to.len()];
    let mut paths = Vec::new();
    for _ in 0..k {
        let mut path = vec![s];
        let mut u = s;
        while u != t {
            let next = net.head[2 * u + 1].iter().copied().find(|&e| {
                e % 2 == 0 && !used[e] && net.cap[e ^ 1] > 0 && net.to[e].is_multiple_of(2) && net.to[e] / 2 != u
            })?;
            used[next] = true;
            u = net.to[next] / 2;
            if u >= n {
                return None;
            }
            path.push(u);
        }
        paths.push(path);
    }
    Some(paths)
}

/// Vertex connectivity: the size of a smallest disconnecting vertex set, or
/// `n - 1` for complete graphs. Computed exactly by maximum disjoint-path
/// counts over nonadjacent pairs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::precondition("vertex connectivity needs at least 2 vertices"));
    }
    Ok(connectivity_capped(g, usize::MAX))
}

/// `min(κ(g), cap)`; cheaper than the exact value when `cap` is small.
pub fn connectivity_capped(g: &Graph, cap: usize) -> usize {
    let n = g.n();
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree().min(cap);
    if g.is_complete() {
        return (n - 1).min(cap);
    }
    // Some vertex among the first best + 1 avoids a minimum separator.
    let mut i = 0;
    while i < n && i <= best {
        for j in i + 1..n {
            if best == 0 {
                return 0;
            }
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// True when `g` is k-connected (more than k vertices, no separator of size
/// below k).
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    g.n() > k && connectivity_capped(g, k) >= k
}

/// Bitmask 3-connectivity test: more than 3 vertices and no set of at most
/// two vertices disconnects the graph.
pub(crate) fn is_3_connected_masks(adj: &[u64]) -> bool {
    let n = adj.len();
    if n < 4 {
        return false;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if adj.iter().any(|m| m.count_ones() < 3) {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            let rest = all & !(1u64 << a) & !(1u64 << b);
            let start = rest & rest.wrapping_neg();
            if mask_closure(adj, start, rest) != rest {
                return false;
            }
        }
    }
    true
}

/// Finds `k` internally disjoint `x`-`y` paths, each with at least
/// `min_len` edges. `None` means no such family exists.
pub fn internally_disjoint_paths(
    g: &Graph,
    x: usize,
    y: usize,
    k: usize,
    min_len: usize,
) -> Result<Option<DisjointPaths>> {
    if x >= g.n() || y >= g.n() {
        return Err(Error::NoSuchVertex(x.max(y)));
    }
    if x == y {
        return Err(Error::precondition("path ends must differ"));
    }
    if k == 0 {
        return Ok(Some(DisjointPaths { paths: Vec::new() }));
    }
    let paths = if min_len <= 2 {
        let host = if min_len == 2 && g.has_edge(x, y) {
            g.remove_edge(x, y)?
        } else {
            g.clone()
        };
        flow_paths(&host, x, y, k)
    } else {
        long_paths(g, x, y, k, min_len)?
    };
    Ok(paths.map(|paths| DisjointPaths { paths }))
}

/// Exhaustive search used when paths must have three or more edges.
fn long_paths(g: &Graph, x: usize, y: usize, k: usize, min_len: usize) -> Result<Option<Vec<Vec<usize>>>> {
    let adj = g.masks()?;
    fn extend(
        adj: &[u64],
        y: usize,
        min_len: usize,
        path: &mut Vec<usize>,
        used: u64,
        out: &mut Vec<(Vec<usize>, u64)>,
    ) {
        let v = *path.last().unwrap();
        for w in bits(adj[v] & !used) {
            if w == y {
                if path.len() >= min_len {
                    let mut p = path.clone();
                    p.push(y);
                    let interior = p[1..p.len() - 1].iter().fold(0u64, |m, &u| m | (1 << u));
                    out.push((p, interior));
                }
                continue;
            }
            path.push(w);
            extend(adj, y, min_len, path, used | (1 << w), out);
            path.pop();
        }
    }
    let mut all = Vec::new();
    let mut path = vec![x];
    extend(&adj, y, min_len, &mut path, 1 << x, &mut all);
    all.sort_by_key(|(p, _)| p.len());
    fn choose(all: &[(Vec<usize>, u64)], start: usize, k: usize, used: u64, acc: &mut Vec<usize>) -> bool {
        if acc.len() == k {
            return true;
        }
        for i in start..all.len() {
            if all[i].1 & used == 0 {
                acc.push(i);
                if choose(all, i + 1, k, used | all[i].1, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    if choose(&all, 0, k, 0, &mut acc) {
        Ok(Some(acc.into_iter().map(|i| all[i].0.clone()).collect()))
    } else {
        Ok(None)
    }
}

/// Vertices whose removal (as a set) disconnects `g`; brute force over
/// subsets of the given size. Used to cross-check the flow computation.
pub fn separators_of_size(g: &Graph, size: usize) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    if size > n {
        return out;
    }
    loop {
        let s: VertexSet = idx.iter().copied().collect();
        if n - size >= 2 && g.connected_components(&s).len() > 1 {
            out.push(s);
        }
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - size + i {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        if size == 0 {
            return out;
        }
    }
}
