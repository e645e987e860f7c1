//! Brute-force reference implementations used as test oracles. Each works
//! directly on adjacency bitmasks and shares no code with the library.

#![allow(dead_code)]

use std::collections::HashSet;

use minorham_core::Graph;

pub fn masks(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub fn graph_from_masks(adj: &[u64]) -> Graph {
    let mut e = Vec::new();
    for (u, &m) in adj.iter().enumerate() {
        for v in u + 1..adj.len() {
            if m >> v & 1 == 1 {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(adj.len(), &e).unwrap()
}

/// All labeled graphs on `n` vertices, by edge bitstring.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Vec<u64>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        adj
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Minimum over all relabelings of the upper-triangle edge bitstring.
pub fn brute_canon(adj: &[u64], perms: &[Vec<usize>]) -> u64 {
    let n = adj.len();
    let mut best = u64::MAX;
    for p in perms {
        let mut code = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                // Edge between the vertices mapped to positions u and v.
                if adj[p[u]] >> p[v] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    }
    best
}

pub fn connected_within(adj: &[u64], keep: u64) -> bool {
    if keep == 0 {
        return true;
    }
    let mut seen = keep & keep.wrapping_neg();
    let mut stack = vec![seen.trailing_zeros() as usize];
    while let Some(u) = stack.pop() {
        let mut fresh = adj[u] & keep & !seen;
        seen |= fresh;
        while fresh != 0 {
            stack.push(fresh.trailing_zeros() as usize);
            fresh &= fresh - 1;
        }
    }
    seen == keep
}

pub fn component_count(adj: &[u64], keep: u64) -> usize {
    let mut rest = keep;
    let mut count = 0;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        loop {
            let mut grown = comp;
            for u in 0..adj.len() {
                if comp >> u & 1 == 1 {
                    grown |= adj[u] & rest;
                }
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        rest &= !comp;
        count += 1;
    }
    count
}

/// Smallest vertex set whose removal disconnects the graph or leaves one
/// vertex.
pub fn brute_connectivity(adj: &[u64]) -> usize {
    let n = adj.len();
    let all = (1u64 << n) - 1;
    let mut best = n.saturating_sub(1);
    for s in 0..1u64 << n {
        let k = s.count_ones() as usize;
        if k < best && n - k >= 2 && !connected_within(adj, all & !s) {
            best = k;
        }
    }
    best
}

pub fn brute_hamiltonian(adj: &[u64]) -> bool {
    let n = adj.len();
    if n < 3 {
        return false;
    }
    fn rec(adj: &[u64], cur: usize, used: u64, depth: usize) -> bool {
        let n = adj.len();
        if depth == n {
            return adj[cur] & 1 == 1;
        }
        (1..n).any(|w| used >> w & 1 == 0 && adj[cur] >> w & 1 == 1 && rec(adj, w, used | 1 << w, depth + 1))
    }
    rec(adj, 0, 1, 1)
}

/// Length of a longest cycle (0 when acyclic).
pub fn brute_circumference(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut best = 0;
    fn rec(adj: &[u64], s: usize, cur: usize, used: u64, len: usize, best: &mut usize) {
        if len >= 3 && adj[cur] >> s & 1 == 1 {
            *best = (*best).max(len);
        }
        for w in 0..adj.len() {
            if w > s && used >> w & 1 == 0 && adj[cur] >> w & 1 == 1 {
                rec(adj, s, w, used | 1 << w, len + 1, best);
            }
        }
    }
    for s in 0..n {
        rec(adj, s, s, 1 << s, 1, &mut best);
    }
    best
}

fn delete_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    let low = (1u64 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, &m)| (m & low) | ((m >> 1) & !low))
        .collect()
}

fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut a = adj.to_vec();
    let merged = (a[u] | a[v]) & !(1 << u) & !(1 << v);
    a[u] = merged;
    for w in 0..a.len() {
        if merged >> w & 1 == 1 {
            a[w] |= 1 << u;
        }
    }
    delete_vertex(&a, v)
}

fn edge_count(adj: &[u64]) -> usize {
    adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
}

fn contains_k5_or_k33(adj: &[u64]) -> bool {
    let n = adj.len();
    if n == 5 {
        return edge_count(adj) == 10;
    }
    if n == 6 {
        let all = 63u64;
        for side in 0..64u64 {
            if side.count_ones() == 3 && side & 1 == 1 {
                let other = all & !side;
                if (0..6).filter(|&u| side >> u & 1 == 1).all(|u| adj[u] & other == other) {
                    return true;
                }
            }
        }
    }
    false
}

/// Wagner's criterion by exhaustive deletion and contraction.
pub fn brute_nonplanar(adj: &[u64]) -> bool {
    fn rec(adj: Vec<u64>, memo: &mut HashSet<Vec<u64>>) -> bool {
        if adj.len() < 5 || edge_count(&adj) < 9 || memo.contains(&adj) {
            return false;
        }
        if contains_k5_or_k33(&adj) {
            return true;
        }
        let n = adj.len();
        for v in 0..n {
            if rec(delete_vertex(&adj, v), memo) {
                return true;
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if adj[u] >> v & 1 == 1 && rec(contract(&adj, u, v), memo) {
                    return true;
                }
            }
        }
        memo.insert(adj);
        false
    }
    rec(adj.to_vec(), &mut HashSet::new())
}

/// Whether `g` has a K2,t minor, by assigning every vertex to one of the
/// t + 2 branch sets or to none.
pub fn brute_k2t_minor(adj: &[u64], t: usize) -> bool {
    let n = adj.len();
    let k = t + 2;
    let mut label = vec![0usize; n];
    let total = (k as u64 + 1).pow(n as u32);
    'outer: for code in 0..total {
        let mut c = code;
        for l in label.iter_mut() {
            *l = (c % (k as u64 + 1)) as usize;
            c /= k as u64 + 1;
        }
        let mut sets = vec![0u64; k];
        for (v, &l) in label.iter().enumerate() {
            if l > 0 {
                sets[l - 1] |= 1 << v;
            }
        }
        if sets.iter().any(|&s| s == 0 || !connected_within(adj, s)) {
            continue;
        }
        let touches = |a: u64, b: u64| (0..n).any(|v| a >> v & 1 == 1 && adj[v] & b != 0);
        for side in &sets[..2] {
            for other in &sets[2..] {
                if !touches(*side, *other) {
                    continue 'outer;
                }
            }
        }
        return true;
    }
    false
}

/// Rooted K2,2: branch sets A (containing x), B (containing y), C, D with
/// A and B each touching C and D.
pub fn brute_rooted_k22(adj: &[u64], x: usize, y: usize) -> bool {
    let n = adj.len();
    let touches = |a: u64, b: u64| (0..n).any(|v| a >> v & 1 == 1 && adj[v] & b != 0);
    for code in 0..5u64.pow(n as u32) {
        let mut c = code;
        let mut sets = [0u64; 4];
        for v in 0..n {
            let l = (c % 5) as usize;
            c /= 5;
            if l > 0 {
                sets[l - 1] |= 1 << v;
            }
        }
        if sets[0] >> x & 1 == 0 || sets[1] >> y & 1 == 0 {
            continue;
        }
        if sets.iter().any(|&s| s == 0 || !connected_within(adj, s)) {
            continue;
        }
        if touches(sets[0], sets[2]) && touches(sets[0], sets[3]) && touches(sets[1], sets[2]) && touches(sets[1], sets[3]) {
            return true;
        }
    }
    false
}

/// 2-connected (at least 3 vertices) or K2, by vertex deletion.
pub fn brute_is_block(adj: &[u64]) -> bool {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if !connected_within(adj, all) {
        return false;
    }
    n <= 2 || (0..n).all(|v| connected_within(adj, all & !(1 << v)))
}
