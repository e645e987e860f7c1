//! Named graphs and parametrized families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamilton::is_hamiltonian;
use crate::topology::{planar_embedding, Planarity};

pub const HERSCHEL_LABELS: [&str; 11] = ["u1", "u2", "u3", "u4", "u5", "u6", "u7", "x", "y", "z", "v1"];

const U1: usize = 0;
const U2: usize = 1;
const U3: usize = 2;
const U4: usize = 3;
const U5: usize = 4;
const U6: usize = 5;
const U7: usize = 6;
const X: usize = 7;
const Y: usize = 8;
const Z: usize = 9;
const V1: usize = 10;

/// Herschel edges without those at `v1`.
const HERSCHEL_CORE: [(usize, usize); 15] = [
    (X, U1),
    (X, U2),
    (X, U3),
    (U5, U1),
    (U5, U2),
    (U5, U6),
    (U5, U7),
    (Z, U3),
    (Z, U6),
    (Z, U7),
    (U4, U1),
    (U4, U3),
    (U4, U6),
    (Y, U2),
    (Y, U7),
];

/// The order-3 automorphism (u4)(u1 u6 u3)(x u5 z)(u2 u7 v1)(y), as an
/// image table.
pub const HERSCHEL_AUTOMORPHISM: [usize; 11] = {
    let mut p = [0usize; 11];
    p[U4] = U4;
    p[U1] = U6;
    p[U6] = U3;
    p[U3] = U1;
    p[X] = U5;
    p[U5] = Z;
    p[Z] = X;
    p[U2] = U7;
    p[U7] = V1;
    p[V1] = U2;
    p[Y] = Y;
    p
};

/// The 11-vertex, 18-edge Herschel graph, labelled u1..u7, x, y, z, v1
/// (ids 0..10 in that order).
pub fn herschel() -> Graph {
    g_k(1).expect("k = 1 is valid")
}

/// Herschel graph with `v1` replaced by a path `v1 .. vk`: `x ~ v1`,
/// `z ~ vk`, and `y` adjacent to every `vi`. Vertex `vi` has id `9 + i`.
pub fn g_k(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::precondition("g_k needs k >= 1"));
    }
    let n = 10 + k;
    let v = |i: usize| V1 + i - 1;
    let mut edges = HERSCHEL_CORE.to_vec();
    edges.push((X, v(1)));
    edges.push((Z, v(k)));
    for i in 1..=k {
        edges.push((Y, v(i)));
        if i < k {
            edges.push((v(i), v(i + 1)));
        }
    }
    let mut labels: Vec<String> = HERSCHEL_LABELS[..10].iter().map(|s| s.to_string()).collect();
    labels.extend((1..=k).map(|i| format!("v{i}")));
    Graph::from_edges(n, &edges)?.with_labels(labels)
}

/// Diagonals added to the Herschel graph to obtain the Goldner-Harary
/// triangulation: one per quadrilateral face, each joining two vertices
/// of the 5-vertex colour class.
pub const GOLDNER_HARARY_DIAGONALS: [(usize, usize); 9] = [
    (U4, U5),
    (U4, X),
    (U4, Z),
    (U5, X),
    (U5, Y),
    (U5, Z),
    (X, Y),
    (X, Z),
    (Y, Z),
];

/// The 11-vertex Goldner-Harary triangulation (27 edges), a supergraph of
/// [`herschel`] on the same labelled vertex set.
pub fn goldner_harary() -> Graph {
    let h = herschel();
    let mut edges: Vec<_> = h.edges().collect();
    edges.extend(GOLDNER_HARARY_DIAGONALS);
    Graph::from_edges(11, &edges)
        .and_then(|g| g.with_labels(HERSCHEL_LABELS.iter().map(|s| s.to_string()).collect()))
        .expect("frozen edge list is valid")
}

/// Searches the diagonal choices on the faces of the Herschel embedding for
/// a simple non-Hamiltonian triangulation. Returns the added diagonals,
/// sorted. Used to audit [`GOLDNER_HARARY_DIAGONALS`].
pub fn search_goldner_harary_diagonals() -> Result<Option<Vec<(usize, usize)>>> {
    let h = herschel();
    let Planarity::Planar(emb) = planar_embedding(&h)? else {
        return Err(Error::Internal("Herschel graph embeds".into()));
    };
    let faces = emb.faces().to_vec();
    if faces.iter().any(|f| f.len() != 4) {
        return Err(Error::Internal("Herschel faces are quadrilaterals".into()));
    }
    for choice in 0u32..1 << faces.len() {
        let diagonals: Vec<(usize, usize)> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let (a, b) = if choice >> i & 1 == 0 { (f[0], f[2]) } else { (f[1], f[3]) };
                (a.min(b), a.max(b))
            })
            .collect();
        let mut sorted = diagonals.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != faces.len() || sorted.iter().any(|&(a, b)| h.has_edge(a, b)) {
            continue;
        }
        let mut edges: Vec<_> = h.edges().collect();
        edges.extend(&sorted);
        let g = Graph::from_edges(11, &edges)?;
        if !is_hamiltonian(&g)? {
            return Ok(Some(sorted));
        }
    }
    Ok(None)
}

/// Prism `C_m x K2` (top `0..m`, bottom `m..2m`), with diagonal
/// `bottom_i ~ top_{i+1}` in quadrilateral face `i` when `mask[i]` is set.
pub fn prism_with_chords(m: usize, mask: &[bool]) -> Result<Graph> {
    if m < 3 {
        return Err(Error::precondition("prism needs m >= 3"));
    }
    if mask.len() != m {
        return Err(Error::precondition(format!("chord mask has length {}, expected {m}", mask.len())));
    }
    let mut edges = Vec::with_capacity(4 * m);
    for i in 0..m {
        let j = (i + 1) % m;
        edges.push((i, j));
        edges.push((m + i, m + j));
        edges.push((i, m + i));
        if mask[i] {
            edges.push((m + i, j));
        }
    }
    Graph::from_edges(2 * m, &edges)
}

/// Chord mask from the low `m` bits of `bits` (bit `i` = face `i`).
pub fn mask_from_bits(m: usize, bits: u64) -> Vec<bool> {
    (0..m).map(|i| bits >> i & 1 == 1).collect()
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &e).expect("static edges")
}

/// Wheel with rim `0..n` and hub `n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::precondition("wheel needs at least 3 rim vertices"));
    }
    let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    e.extend((0..n).map(|i| (i, n)));
    Graph::from_edges(n + 1, &e)
}

/// `K_{s,t}` with sides `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(Error::precondition("both sides must be nonempty"));
    }
    let e: Vec<_> = (0..s).flat_map(|a| (s..s + t).map(move |b| (a, b))).collect();
    Graph::from_edges(s + t, &e)
}

pub fn complete(n: usize) -> Graph {
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &e).expect("static edges")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::precondition("cycle needs at least 3 vertices"));
    }
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

/// 3-cube, vertices as 3-bit words.
pub fn cube() -> Graph {
    let mut e = Vec::new();
    for v in 0..8usize {
        for b in 0..3 {
            let w = v ^ (1 << b);
            if v < w {
                e.push((v, w));
            }
        }
    }
    Graph::from_edges(8, &e).expect("static edges")
}

/// Octahedron `K_{2,2,2}`: antipodal pairs (0,1), (2,3), (4,5).
pub fn octahedron() -> Graph {
    let e: Vec<_> = (0..6usize)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| u / 2 != v / 2)
        .collect();
    Graph::from_edges(6, &e).expect("static edges")
}

/// Uniform description of a named graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum FamilySpec {
    Herschel,
    GoldnerHarary,
    Gk { k: usize },
    PrismChords { m: usize, mask: Vec<bool> },
    Petersen,
    Wheel { n: usize },
    CompleteBipartite { s: usize, t: usize },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Herschel => "herschel",
            FamilySpec::GoldnerHarary => "goldner-harary",
            FamilySpec::Gk { .. } => "gk",
            FamilySpec::PrismChords { .. } => "prism-chords",
            FamilySpec::Petersen => "petersen",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
        }
    }
}

pub fn named_graph(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Herschel => Ok(herschel()),
        FamilySpec::GoldnerHarary => Ok(goldner_harary()),
        FamilySpec::Gk { k } => g_k(*k),
        FamilySpec::PrismChords { m, mask } => prism_with_chords(*m, mask),
        FamilySpec::Petersen => Ok(petersen()),
        FamilySpec::Wheel { n } => wheel(*n),
        FamilySpec::CompleteBipartite { s, t } => complete_bipartite(*s, *t),
    }
}
