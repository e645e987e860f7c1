//! Canonical labeling by equitable partition refinement and an
//! individualization search tree with automorphism pruning.
//!
//! The code of a graph is the graph6 string of its canonically relabeled
//! copy, so codes are exact (two graphs share a code iff they are
//! isomorphic) and the canonical form can be decoded back from the code.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Exact isomorphism-class identifier: the graph6 string of the canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Trusted constructor for strings known to be canonical codes.
    pub fn from_string_unchecked(s: String) -> Self {
        CanonicalCode(s)
    }

    /// The canonical form this code describes.
    pub fn to_graph(&self) -> Graph {
        super::decode_graph6(&self.0).expect("canonical codes are valid graph6")
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone)]
struct Partition {
    /// Vertices listed cell by cell.
    lab: Vec<usize>,
    /// For a cell starting at position `s`, `end[s]` is its exclusive end.
    end: Vec<usize>,
    /// Start position of the cell holding each vertex.
    cell_of: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut end = vec![0; n];
        if n > 0 {
            end[0] = n;
        }
        Partition {
            lab: (0..n).collect(),
            end,
            cell_of: vec![0; n],
            cells: usize::from(n > 0),
        }
    }


    fn first_nonsingleton(&self) -> Option<usize> {
        let mut s = 0;
        while s < self.lab.len() {
            let e = self.end[s];
            if e - s > 1 {
                return Some(s);
            }
            s = e;
        }
        None
    }
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    n: usize,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
    count: Vec<u32>,
}

impl<'a> Search<'a> {
    fn refine(&mut self, p: &mut Partition, stack: &mut Vec<usize>, in_stack: &mut [bool]) {
        while let Some(s) = stack.pop() {
            in_stack[s] = false;
            if p.cells == self.n {
                break;
            }
            let e = p.end[s];
            for i in s..e {
                let u = p.lab[i];
                for &v in &self.adj[u] {
                    self.count[v] += 1;
                }
            }
            let mut c = 0;
            while c < self.n {
                let ce = p.end[c];
                if ce - c > 1 {
                    let k0 = self.count[p.lab[c]];
                    if p.lab[c + 1..ce].iter().any(|&v| self.count[v] != k0) {
                        self.split(p, c, ce, stack, in_stack);
                    }
                }
                c = ce;
            }
            for i in 0..self.n {
                self.count[i] = 0;
            }
        }
    }

    fn split(&self, p: &mut Partition, c: usize, ce: usize, stack: &mut Vec<usize>, in_stack: &mut [bool]) {
        let count = &self.count;
        p.lab[c..ce].sort_unstable_by_key(|&v| (count[v], v));
        let mut starts = vec![c];
        for i in c + 1..ce {
            if count[p.lab[i]] != count[p.lab[i - 1]] {
                starts.push(i);
            }
        }
        starts.push(ce);
        for w in starts.windows(2) {
            let (a, b) = (w[0], w[1]);
            p.end[a] = b;
            for i in a..b {
                p.cell_of[p.lab[i]] = a;
            }
        }
        p.cells += starts.len() - 2;
        let pieces = &starts[..starts.len() - 1];
        if in_stack[c] {
            for &a in &pieces[1..] {
                stack.push(a);
                in_stack[a] = true;
            }
        } else {
            let mut largest = pieces[0];
            for &a in pieces {
                if p.end[a] - a > p.end[largest] - largest {
                    largest = a;
                }
            }
            for &a in pieces {
                if a != largest {
                    stack.push(a);
                    in_stack[a] = true;
                }
            }
        }
    }

    fn individualize(&mut self, p: &Partition, v: usize) -> Partition {
        let mut q = p.clone();
        let s = q.cell_of[v];
        let e = q.end[s];
        let pos = (s..e).find(|&i| q.lab[i] == v).unwrap();
        q.lab.swap(s, pos);
        q.end[s] = s + 1;
        q.end[s + 1] = e;
        for i in s + 1..e {
            q.cell_of[q.lab[i]] = s + 1;
        }
        q.cells += 1;
        let mut stack = vec![s];
        let mut in_stack = vec![false; self.n];
        in_stack[s] = true;
        self.refine(&mut q, &mut stack, &mut in_stack);
        q
    }

    fn leaf_code(&self, lab: &[usize]) -> Vec<u64> {
        let n = self.n;
        let nbits = n * n.saturating_sub(1) / 2;
        let mut code = vec![0u64; nbits.div_ceil(64).max(1)];
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        for u in 0..n {
            for &v in &self.adj[u] {
                let (i, j) = (pos[u], pos[v]);
                if i < j {
                    let k = j * (j - 1) / 2 + i;
                    code[k / 64] |= 1u64 << (63 - k % 64);
                }
            }
        }
        code
    }

    fn record_auto(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; self.n];
        for i in 0..self.n {
            gamma[from[i]] = to[i];
        }
        if gamma.iter().enumerate().any(|(i, &g)| i != g) {
            self.autos.push(gamma);
        }
    }

    fn leaf(&mut self, lab: &[usize]) {
        let code = self.leaf_code(lab);
        let Some((first_code, first_lab)) = &self.first else {
            self.first = Some((code.clone(), lab.to_vec()));
            self.best = Some((code, lab.to_vec()));
            return;
        };
        if &code == first_code {
            let fl = first_lab.clone();
            self.record_auto(&fl, lab);
            return;
        }
        let (best_code, best_lab) = self.best.as_ref().unwrap();
        match code.cmp(best_code) {
            std::cmp::Ordering::Greater => self.best = Some((code, lab.to_vec())),
            std::cmp::Ordering::Equal => {
                let bl = best_lab.clone();
                self.record_auto(&bl, lab);
            }
            std::cmp::Ordering::Less => {}
        }
    }

    /// True when `a` and `b` share an orbit of the group generated by the
    /// automorphisms found so far that fix every vertex of `prefix`.
    fn same_orbit(&self, prefix: &[usize], a: usize, b: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for g in &self.autos {
            if prefix.iter().all(|&v| g[v] == v) {
                any = true;
                for (x, &y) in g.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        any && find(&mut parent, a) == find(&mut parent, b)
    }

    fn explore(&mut self, p: &Partition, prefix: &mut Vec<usize>) {
        let Some(s) = p.first_nonsingleton() else {
            self.leaf(&p.lab);
            return;
        };
        let mut cell: Vec<usize> = p.lab[s..p.end[s]].to_vec();
        cell.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for v in cell {
            if tried.iter().any(|&u| self.same_orbit(prefix, u, v)) {
                continue;
            }
            tried.push(v);
            let child = self.individualize(p, v);
            prefix.push(v);
            self.explore(&child, prefix);
            prefix.pop();
        }
    }
}

/// Canonical labeling: `result[v]` is the position of vertex `v` in the
/// canonical order.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut search = Search {
        adj: &adj,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
        count: vec![0; n],
    };
    let mut p = Partition::unit(n);
    if n > 0 {
        // Seed with the degree partition, then refine to equitability.
        for v in 0..n {
            search.count[v] = adj[v].len() as u32;
        }
        let mut stack = Vec::new();
        let mut in_stack = vec![false; n];
        search.split(&mut p, 0, n, &mut stack, &mut in_stack);
        search.count.iter_mut().for_each(|c| *c = 0);
        stack.clear();
        in_stack.iter_mut().for_each(|f| *f = false);
        let mut s = 0;
        while s < n {
            stack.push(s);
            in_stack[s] = true;
            s = p.end[s];
        }
        search.refine(&mut p, &mut stack, &mut in_stack);
    }
    search.explore(&p, &mut Vec::new());
    let lab = match search.best {
        Some((_, lab)) => lab,
        None => Vec::new(),
    };
    let mut pos = vec![0; n];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

pub(crate) fn canonical_code(g: &Graph) -> CanonicalCode {
    let perm = canonical_labeling(g);
    let mut adj = vec![Vec::new(); g.n()];
    for v in 0..g.n() {
        let mut l: Vec<usize> = g.neighbors(v).iter().map(|&w| perm[w]).collect();
        l.sort_unstable();
        adj[perm[v]] = l;
    }
    CanonicalCode(super::encode_graph6(&Graph::from_sorted_adjacency(adj)))
}
