//! Outerplanarity via an apex vertex, and xy-outerplanarity.

use serde::{Deserialize, Serialize};

use super::connectivity::is_block;
use super::planarity::{embed_rotation, PlanarEmbedding};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Plane embedding with every vertex on an outer face.
///
/// `outer_faces` holds one face index per connected component. For
/// xy-outerplane embeddings `outer_path` is the Hamilton xy-path along the
/// boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterplaneEmbedding {
    pub embedding: PlanarEmbedding,
    pub outer_faces: Vec<usize>,
    pub outer_path: Option<Vec<usize>>,
}

impl OuterplaneEmbedding {
    /// Boundary walk of the outer face of the first component.
    pub fn outer_walk(&self) -> &[usize] {
        &self.embedding.faces()[self.outer_faces[0]]
    }

    /// Checks the embedding and that every vertex lies on an outer face.
    /// When present, `outer_path` must be a Hamilton path of `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        if !self.embedding.verify(g) {
            return false;
        }
        let mut on_outer = vec![false; g.n()];
        for &f in &self.outer_faces {
            match self.embedding.faces().get(f) {
                Some(face) => face.iter().for_each(|&v| on_outer[v] = true),
                None => return false,
            }
        }
        if !on_outer.iter().all(|&b| b) {
            return false;
        }
        match &self.outer_path {
            None => true,
            Some(p) => {
                let mut seen = vec![false; g.n()];
                p.len() == g.n()
                    && p.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
                    && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
            }
        }
    }
}

fn face_rank(face: &[usize]) -> (usize, std::cmp::Reverse<Vec<usize>>) {
    let min_rot = (0..face.len())
        .map(|i| face[i..].iter().chain(&face[..i]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default();
    (face.len(), std::cmp::Reverse(min_rot))
}

/// Embedding of `g` with all vertices on the outer face, or `None`.
pub fn outerplanar_embedding(g: &Graph) -> Result<Option<OuterplaneEmbedding>> {
    let n = g.n();
    // Outerplanar graphs have at most 2n - 3 edges.
    if n >= 2 && g.m() > 2 * n - 3 {
        return Ok(None);
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend((0..n).map(|v| (v, n)));
    let apex = Graph::from_edges(n + 1, &edges)?;
    let Some(mut rotation) = embed_rotation(&apex) else {
        return Ok(None);
    };
    rotation.pop();
    for rot in rotation.iter_mut() {
        rot.retain(|&w| w != n);
    }
    let embedding = PlanarEmbedding::from_rotation(g, rotation)
        .map_err(|e| Error::Internal(format!("apex embedding restricted badly: {e}")))?;
    let mut outer_faces = Vec::new();
    for comp in g.connected_components(&VertexSet::new()) {
        let best = embedding
            .faces()
            .iter()
            .enumerate()
            .filter(|(_, f)| comp.iter().all(|v| f.contains(&v)))
            .max_by(|a, b| face_rank(a.1).cmp(&face_rank(b.1)))
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Internal("no face covers a component".into()))?;
        outer_faces.push(best);
    }
    let embedding = embedding.with_outer_face(outer_faces[0])?;
    Ok(Some(OuterplaneEmbedding {
        embedding,
        outer_faces,
        outer_path: None,
    }))
}

/// xy-outerplane embedding: an outerplane embedding whose outer boundary
/// carries a Hamilton path from `x` to `y`.
pub fn xy_outerplanar_embedding(g: &Graph, x: usize, y: usize) -> Result<Option<OuterplaneEmbedding>> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::NoSuchVertex(v));
        }
    }
    if x == y {
        return Err(Error::precondition("x and y must differ"));
    }
    if n == 2 {
        if !g.has_edge(x, y) {
            return Ok(None);
        }
        let embedding = PlanarEmbedding::from_rotation(g, vec![vec![1], vec![0]])?;
        return Ok(Some(OuterplaneEmbedding {
            embedding,
            outer_faces: vec![0],
            outer_path: Some(vec![x, y]),
        }));
    }
    let h = if g.has_edge(x, y) { g.clone() } else { g.add_edge(x, y)? };
    if !is_block(&h) {
        return Ok(None);
    }
    let Some(outer) = outerplanar_embedding(&h)? else {
        return Ok(None);
    };
    // In a 2-connected outerplane graph the outer face is a Hamilton cycle.
    let walk = outer.outer_walk();
    let i = walk.iter().position(|&v| v == x).expect("outer cycle covers all vertices");
    let cyc: Vec<usize> = walk[i..].iter().chain(&walk[..i]).copied().collect();
    let path: Vec<usize> = if cyc[n - 1] == y {
        cyc
    } else if cyc[1] == y {
        std::iter::once(x).chain(cyc[1..].iter().rev().copied()).collect()
    } else {
        return Ok(None);
    };
    let mut rotation = outer.embedding.rotation().to_vec();
    if !g.has_edge(x, y) {
        rotation[x].retain(|&w| w != y);
        rotation[y].retain(|&w| w != x);
    }
    let embedding = PlanarEmbedding::from_rotation(g, rotation)?;
    let (a, b) = (path[0], path[1]);
    let outer_face = embedding
        .faces()
        .iter()
        .position(|f| {
            f.len() >= n
                && (0..n).all(|v| f.contains(&v))
                && (0..f.len()).any(|k| {
                    let (p, q) = (f[k], f[(k + 1) % f.len()]);
                    (p, q) == (a, b) || (p, q) == (b, a)
                })
        })
        .ok_or_else(|| Error::Internal("outer path lost after removing xy".into()))?;
    Ok(Some(OuterplaneEmbedding {
        embedding: embedding.with_outer_face(outer_face)?,
        outer_faces: vec![outer_face],
        outer_path: Some(path),
    }))
}
