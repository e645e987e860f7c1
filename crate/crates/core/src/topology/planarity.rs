//! Planarity testing with explicit rotation systems.
//!
//! Each block is embedded by path addition: start from a cycle, then
//! repeatedly route a path of some fragment through a face that contains
//! all of the fragment's attachment vertices, preferring fragments with a
//! single admissible face. Block rotations are concatenated at cutvertices.
//!
//! Face walks follow the rule: after the dart `u -> v` comes `v -> w`, where
//! `w` is the successor of `u` in the rotation at `v`. Faces are listed as
//! the sequence of dart tails.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::connectivity::blocks;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A rotation system together with its face walks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarEmbedding {
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    outer_face: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// Subdivision of K5 or K3,3 contained in a nonplanar graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonplanarWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl NonplanarWitness {
    /// Checks that the witness edges lie in `g` and form a subdivision of
    /// the claimed Kuratowski graph.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.edges.iter().any(|&(u, v)| !g.has_edge(u, v)) {
            return false;
        }
        let Ok(sub) = Graph::from_edges(g.n(), &self.edges) else {
            return false;
        };
        let (want_branch, want_deg) = match self.kind {
            KuratowskiKind::K5 => (5, 4),
            KuratowskiKind::K33 => (6, 3),
        };
        let branch: Vec<usize> = (0..g.n()).filter(|&v| sub.degree(v) > 2).collect();
        if branch != self.branch_vertices || branch.len() != want_branch {
            return false;
        }
        if branch.iter().any(|&v| sub.degree(v) != want_deg) {
            return false;
        }
        // Suppress degree-2 vertices: trace each branch-to-branch thread.
        let mut links = Vec::new();
        for &b in &branch {
            for &first in sub.neighbors(b) {
                let (mut prev, mut cur) = (b, first);
                let mut steps = 0;
                while sub.degree(cur) == 2 {
                    let next = sub.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
                    prev = cur;
                    cur = next;
                    steps += 1;
                    if steps > g.n() {
                        return false;
                    }
                }
                if sub.degree(cur) < 3 || cur == b {
                    return false;
                }
                links.push((b.min(cur), b.max(cur)));
            }
        }
        links.sort_unstable();
        links.dedup();
        let idx = |v: usize| branch.iter().position(|&b| b == v).unwrap();
        let core = Graph::from_edges(
            branch.len(),
            &links.iter().map(|&(a, b)| (idx(a), idx(b))).collect::<Vec<_>>(),
        )
        .unwrap();
        let target = match self.kind {
            KuratowskiKind::K5 => {
                let e: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
                Graph::from_edges(5, &e).unwrap()
            }
            KuratowskiKind::K33 => {
                let e: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
                Graph::from_edges(6, &e).unwrap()
            }
        };
        let isolated = (0..g.n()).all(|v| sub.degree(v) == 0 || sub.degree(v) >= 2);
        isolated && core.canonical_code() == target.canonical_code()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    Planar(PlanarEmbedding),
    Nonplanar(NonplanarWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(&self) -> Option<&PlanarEmbedding> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::Nonplanar(_) => None,
        }
    }
}

/// Face walks of a rotation system. Isolated vertices contribute the
/// one-vertex walk `[v]`.
pub fn face_walks(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for (v, rot) in rotation.iter().enumerate() {
        for (i, &u) in rot.iter().enumerate() {
            pos.insert((v, u), i);
        }
    }
    let mut seen: HashMap<(usize, usize), bool> = HashMap::new();
    let mut faces = Vec::new();
    for (v, rot) in rotation.iter().enumerate() {
        if rot.is_empty() {
            faces.push(vec![v]);
        }
    }
    for (u, rot) in rotation.iter().enumerate() {
        for &v in rot {
            if seen.contains_key(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            while !seen.contains_key(&(a, b)) {
                seen.insert((a, b), true);
                walk.push(a);
                let r = &rotation[b];
                let w = r[(pos[&(b, a)] + 1) % r.len()];
                a = b;
                b = w;
            }
            faces.push(walk);
        }
    }
    faces
}

/// Smallest rotation of a cyclic sequence.
fn canonical_walk(w: &[usize]) -> Vec<usize> {
    (0..w.len().max(1))
        .map(|i| w[i..].iter().chain(&w[..i]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Index of the longest face, ties broken by the lexicographically smallest
/// canonical walk.
fn default_outer(faces: &[Vec<usize>]) -> usize {
    let mut best = 0;
    for i in 1..faces.len() {
        let (a, b) = (&faces[i], &faces[best]);
        if a.len() > b.len() || (a.len() == b.len() && canonical_walk(a) < canonical_walk(b)) {
            best = i;
        }
    }
    best
}

impl PlanarEmbedding {
    /// Builds an embedding from a rotation system, recomputing faces and
    /// checking that every rotation is a permutation of the neighbors and
    /// that Euler's formula holds in each component.
    pub fn from_rotation(g: &Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != g.n() {
            return Err(Error::precondition("rotation system size differs from vertex count"));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::precondition(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                )));
            }
        }
        let faces = face_walks(&rotation);
        let components = g.connected_components(&VertexSet::new()).len();
        let euler = g.n() as i64 - g.m() as i64 + faces.len() as i64;
        if euler != 2 * components as i64 {
            return Err(Error::precondition(format!(
                "rotation system has genus > 0 (V - E + F = {euler} over {components} components)"
            )));
        }
        let outer_face = default_outer(&faces);
        Ok(PlanarEmbedding {
            rotation,
            faces,
            outer_face,
        })
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn outer_walk(&self) -> &[usize] {
        &self.faces[self.outer_face]
    }

    pub fn with_outer_face(mut self, index: usize) -> Result<Self> {
        if index >= self.faces.len() {
            return Err(Error::precondition("outer face index out of range"));
        }
        self.outer_face = index;
        Ok(self)
    }

    /// The underlying graph.
    pub fn graph(&self) -> Graph {
        let edges: Vec<_> = self
            .rotation
            .iter()
            .enumerate()
            .flat_map(|(v, r)| r.iter().map(move |&w| (v, w)))
            .collect();
        Graph::from_edges(self.rotation.len(), &edges).expect("rotation ids are in range")
    }

    /// Checks Euler's formula and that every dart lies on exactly one face.
    pub fn verify(&self, g: &Graph) -> bool {
        let Ok(fresh) = PlanarEmbedding::from_rotation(g, self.rotation.clone()) else {
            return false;
        };
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        for f in &self.faces {
            if f.len() == 1 && g.degree(f[0]) == 0 {
                continue;
            }
            for i in 0..f.len() {
                *count.entry((f[i], f[(i + 1) % f.len()])).or_default() += 1;
            }
        }
        let darts_ok = g.edges().all(|(u, v)| count.get(&(u, v)) == Some(&1) && count.get(&(v, u)) == Some(&1))
            && count.len() == 2 * g.m();
        let mut a: Vec<_> = fresh.faces.iter().map(|f| canonical_walk(f)).collect();
        let mut b: Vec<_> = self.faces.iter().map(|f| canonical_walk(f)).collect();
        a.sort();
        b.sort();
        darts_ok && a == b
    }

    /// Text form: one line per vertex, `v: w1 w2 ...` in rotation order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            let _ = write!(s, "{v}:");
            for w in rot {
                let _ = write!(s, " {w}");
            }
            s.push('\n');
        }
        s
    }

    /// Parses the text form; faces are recomputed and verified.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut rotation: Vec<Vec<usize>> = Vec::new();
        let mut offset = 0;
        for line in text.lines() {
            let line_start = offset;
            offset += line.len() + 1;
            if line.trim().is_empty() {
                continue;
            }
            let (head, tail) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_start, "expected 'v: neighbors'"))?;
            let v: usize = head
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_start, "bad vertex id"))?;
            if v != rotation.len() {
                return Err(Error::parse(line_start, format!("expected vertex {}", rotation.len())));
            }
            let mut rot = Vec::new();
            for tok in tail.split_whitespace() {
                rot.push(
                    tok.parse::<usize>()
                        .map_err(|_| Error::parse(line_start, format!("bad neighbor '{tok}'")))?,
                );
            }
            rotation.push(rot);
        }
        let n = rotation.len();
        let mut edges = Vec::new();
        for (v, rot) in rotation.iter().enumerate() {
            for &w in rot {
                if w >= n {
                    return Err(Error::OutOfRange { u: v, v: w, n });
                }
                edges.push((v, w));
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        for (v, rot) in rotation.iter().enumerate() {
            for &w in rot {
                if !rotation[w].contains(&v) {
                    return Err(Error::precondition(format!("edge {v}-{w} listed on one side only")));
                }
            }
        }
        PlanarEmbedding::from_rotation(&g, rotation)
    }
}

/// Embeds a 2-connected graph; returns oriented face cycles or `None` when
/// the graph is nonplanar.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let cycle = find_cycle(g)?;
    let mut in_h = vec![false; n];
    let mut edge_in_h: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        edge_in_h.insert((a.min(b), a.max(b)));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];
    let total = g.m();
    while edge_in_h.len() < total {
        // Fragments: components of non-embedded vertices, and single
        // non-embedded edges joining embedded vertices.
        let mut frags: Vec<(Vec<usize>, Vec<usize>)> = Vec::new(); // (attachments, component)
        let mut comp_of = vec![usize::MAX; n];
        for s in 0..n {
            if in_h[s] || comp_of[s] != usize::MAX {
                continue;
            }
            let id = frags.len();
            let mut comp = vec![s];
            comp_of[s] = id;
            let mut i = 0;
            let mut att = Vec::new();
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in g.neighbors(v) {
                    if in_h[w] {
                        att.push(w);
                    } else if comp_of[w] == usize::MAX {
                        comp_of[w] = id;
                        comp.push(w);
                    }
                }
            }
            att.sort_unstable();
            att.dedup();
            frags.push((att, comp));
        }
        for (u, v) in g.edges() {
            if in_h[u] && in_h[v] && !edge_in_h.contains(&(u, v)) {
                frags.push((vec![u, v], Vec::new()));
            }
        }
        let mut choice: Option<(usize, usize)> = None;
        for (i, (att, _)) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| att.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let (att, comp) = &frags[fi];
        let path = if comp.is_empty() {
            vec![att[0], att[1]]
        } else {
            let a1 = att[0];
            let a2 = att[1];
            let in_comp = |w: usize| comp_of[w] == fi;
            // BFS from a1 into the component until a vertex adjacent to a2.
            let mut prev = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::new();
            for &w in g.neighbors(a1) {
                if in_comp(w) && prev[w] == usize::MAX {
                    prev[w] = a1;
                    queue.push_back(w);
                }
            }
            let mut end = usize::MAX;
            while let Some(v) = queue.pop_front() {
                if g.has_edge(v, a2) {
                    end = v;
                    break;
                }
                for &w in g.neighbors(v) {
                    if in_comp(w) && prev[w] == usize::MAX {
                        prev[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            let mut p = vec![a2];
            let mut cur = end;
            while cur != a1 {
                p.push(cur);
                cur = prev[cur];
            }
            p.push(a1);
            p.reverse();
            p
        };
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            edge_in_h.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h[v] = true;
        }
    }
    Some(faces)
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&v| v == a).unwrap();
    let rotated: Vec<usize> = face[i..].iter().chain(&face[..i]).copied().collect();
    let j = rotated.iter().position(|&v| v == b).unwrap();
    let interior = &path[1..path.len() - 1];
    let mut f1: Vec<usize> = rotated[..=j].to_vec();
    f1.extend(interior.iter().rev());
    let mut f2: Vec<usize> = rotated[j..].to_vec();
    f2.push(a);
    f2.extend(interior.iter());
    (f1, f2)
}

fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    stack.push((w, 0));
                } else if w != parent[v] && depth[w] < depth[v] {
                    let mut cyc = vec![v];
                    let mut cur = v;
                    while cur != w {
                        cur = parent[cur];
                        cyc.push(cur);
                    }
                    return Some(cyc);
                }
            } else {
                stack.pop();
            }
        }
    }
    None
}

/// Rotation system for any planar graph (connected or not), or `None`.
pub(crate) fn embed_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    let (blks, _) = blocks(g);
    for block in blks {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let verts: VertexSet = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let ids = verts.as_slice();
        let sub = Graph::from_edges(
            verts.len(),
            &block.iter().map(|&(u, v)| (local[&u], local[&v])).collect::<Vec<_>>(),
        )
        .ok()?;
        let faces = embed_biconnected(&sub)?;
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); sub.n()];
        for f in &faces {
            let k = f.len();
            for i in 0..k {
                let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                succ[v].insert(u, w);
            }
        }
        for v in 0..sub.n() {
            let start = sub.neighbors(v)[0];
            let mut cur = start;
            loop {
                rotation[ids[v]].push(ids[cur]);
                cur = succ[v][&cur];
                if cur == start {
                    break;
                }
            }
        }
    }
    Some(rotation)
}

/// True when `g` is planar. Works for disconnected graphs.
pub fn is_planar(g: &Graph) -> bool {
    match embed_rotation(g) {
        Some(rot) => PlanarEmbedding::from_rotation(g, rot).is_ok(),
        None => false,
    }
}

/// Minimal nonplanar subgraph, classified as a K5 or K3,3 subdivision.
fn kuratowski_witness(g: &Graph) -> Result<NonplanarWitness> {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        let h = Graph::from_edges(g.n(), &trial)?;
        if is_planar(&h) {
            i += 1;
        } else {
            edges = trial;
        }
    }
    let h = Graph::from_edges(g.n(), &edges)?;
    let branch: Vec<usize> = (0..g.n()).filter(|&v| h.degree(v) > 2).collect();
    let kind = if branch.len() == 5 && branch.iter().all(|&v| h.degree(v) == 4) {
        KuratowskiKind::K5
    } else if branch.len() == 6 && branch.iter().all(|&v| h.degree(v) == 3) {
        KuratowskiKind::K33
    } else {
        return Err(Error::Internal("minimal nonplanar subgraph is not a Kuratowski subdivision".into()));
    };
    Ok(NonplanarWitness {
        kind,
        branch_vertices: branch,
        edges,
    })
}

/// Planar embedding of a connected graph, or a Kuratowski subdivision.
pub fn planar_embedding(g: &Graph) -> Result<Planarity> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match embed_rotation(g) {
        Some(rot) => {
            let emb = PlanarEmbedding::from_rotation(g, rot)
                .map_err(|e| Error::Internal(format!("path addition produced a bad embedding: {e}")))?;
            Ok(Planarity::Planar(emb))
        }
        None => Ok(Planarity::Nonplanar(kuratowski_witness(g)?)),
    }
}

/// The subgraph made of a cycle and everything drawn inside it, where
/// "outside" is the side holding the embedding's outer face. Returns the
/// subgraph's vertex set and edge list (original ids).
pub fn cycle_interior(emb: &PlanarEmbedding, cycle: &[usize]) -> (VertexSet, Vec<(usize, usize)>) {
    let k = cycle.len();
    let on_cycle: std::collections::HashSet<(usize, usize)> = (0..k)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect();
    // Face adjacency across non-cycle edges.
    let faces = emb.faces();
    let mut face_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..f.len() {
            if f.len() > 1 {
                face_of.insert((f[i], f[(i + 1) % f.len()]), fi);
            }
        }
    }
    let mut outside = vec![false; faces.len()];
    outside[emb.outer_face()] = true;
    let mut stack = vec![emb.outer_face()];
    while let Some(fi) = stack.pop() {
        let f = &faces[fi];
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            if on_cycle.contains(&(a.min(b), a.max(b))) {
                continue;
            }
            if let Some(&other) = face_of.get(&(b, a)) {
                if !outside[other] {
                    outside[other] = true;
                    stack.push(other);
                }
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = on_cycle.iter().copied().collect();
    for (fi, f) in faces.iter().enumerate() {
        if outside[fi] || f.len() < 2 {
            continue;
        }
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            let inner = face_of.get(&(b, a)).is_some_and(|&o| !outside[o]);
            if inner {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let verts: VertexSet = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    (verts, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn k33() -> Graph {
        let e: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
        Graph::from_edges(6, &e).unwrap()
    }

    #[test]
    fn k4_has_four_faces() {
        let p = planar_embedding(&complete(4)).unwrap();
        let emb = p.embedding().unwrap();
        assert_eq!(emb.faces().len(), 4);
        assert!(emb.verify(&complete(4)));
    }

    #[test]
    fn k5_and_k33_nonplanar_with_witness() {
        match planar_embedding(&complete(5)).unwrap() {
            Planarity::Nonplanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K5);
                assert!(w.verify(&complete(5)));
            }
            _ => panic!("K5 is nonplanar"),
        }
        match planar_embedding(&k33()).unwrap() {
            Planarity::Nonplanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K33);
                assert!(w.verify(&k33()));
            }
            _ => panic!("K3,3 is nonplanar"),
        }
    }

    #[test]
    fn disconnected_rejected() {
        assert_eq!(planar_embedding(&Graph::empty(2)), Err(Error::Disconnected));
        assert!(is_planar(&Graph::empty(2)));
    }

    #[test]
    fn trees_and_cutvertices_embed() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let emb = planar_embedding(&bowtie).unwrap();
        let emb = emb.embedding().unwrap();
        assert_eq!(emb.faces().len(), 3);
        assert!(emb.verify(&bowtie));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let emb = planar_embedding(&star).unwrap();
        assert_eq!(emb.embedding().unwrap().faces().len(), 1);
        let single = planar_embedding(&Graph::empty(1)).unwrap();
        assert_eq!(single.embedding().unwrap().faces().len(), 1);
    }

    #[test]
    fn text_roundtrip() {
        let g = complete(4);
        let emb = planar_embedding(&g).unwrap().embedding().unwrap().clone();
        let back = PlanarEmbedding::from_text(&emb.to_text()).unwrap();
        assert_eq!(back.rotation(), emb.rotation());
        assert_eq!(back.faces().len(), 4);
    }

    #[test]
    fn text_rejects_nonplanar_rotation() {
        // K4 with one vertex's rotation reversed has genus 1.
        let bad = "0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n";
        assert!(PlanarEmbedding::from_text(bad).is_err());
    }

    #[test]
    fn octahedron_cycle_interior_is_block() {
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4), (1, 2), (2, 3), (3, 4), (4, 1)],
        )
        .unwrap();
        let emb = planar_embedding(&g).unwrap().embedding().unwrap().clone();
        let (verts, edges) = cycle_interior(&emb, &[1, 2, 3, 4]);
        assert!(verts.len() == 4 || verts.len() == 5);
        assert!(edges.len() == 4 || edges.len() == 8);
    }
}
