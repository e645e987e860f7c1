//! K2,t minors through standard models `(R1, R2; S)`: two disjoint
//! connected branch sets and `t` single vertices adjacent to both.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, mask_closure, mask_connected, mask_neighbors, Graph, VertexSet};
use crate::topology::is_block;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardModel {
    pub t: usize,
    #[serde(rename = "R1")]
    pub r1: VertexSet,
    #[serde(rename = "R2")]
    pub r2: VertexSet,
    #[serde(rename = "S")]
    pub s: VertexSet,
}

impl StandardModel {
    /// Independent check of the model conditions against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let in_range = |set: &VertexSet| set.iter().all(|v| v < n);
        if !(in_range(&self.r1) && in_range(&self.r2) && in_range(&self.s)) {
            return false;
        }
        if self.s.len() != self.t || self.r1.is_empty() || self.r2.is_empty() {
            return false;
        }
        if !self.r1.is_disjoint(&self.r2) || !self.r1.is_disjoint(&self.s) || !self.r2.is_disjoint(&self.s) {
            return false;
        }
        let connected = |set: &VertexSet| {
            let (sub, _) = g.induced_subgraph(set);
            sub.is_connected()
        };
        if !connected(&self.r1) || !connected(&self.r2) {
            return false;
        }
        self.s.iter().all(|s| {
            g.neighbors(s).iter().any(|&w| self.r1.contains(w))
                && g.neighbors(s).iter().any(|&w| self.r2.contains(w))
        })
    }

    /// The same model with the two sides exchanged.
    pub fn swapped(&self) -> StandardModel {
        StandardModel {
            t: self.t,
            r1: self.r2.clone(),
            r2: self.r1.clone(),
            s: self.s.clone(),
        }
    }
}

/// K2,2 model whose sides contain the roots `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedK22Model {
    pub x: usize,
    pub y: usize,
    pub model: StandardModel,
}

impl RootedK22Model {
    pub fn verify(&self, g: &Graph) -> bool {
        self.model.t == 2
            && self.model.r1.contains(self.x)
            && self.model.r2.contains(self.y)
            && self.model.verify(g)
    }
}

/// Outcome of an exhaustive K2,t search, with the number of search nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSearch {
    pub model: Option<StandardModel>,
    pub nodes: u64,
}

struct Search<'a> {
    adj: &'a [u64],
    all: u64,
    t: u32,
    nodes: u64,
}

impl Search<'_> {
    /// Grows `r1` and `r2`; `no1`/`no2` are vertices barred from each side.
    fn run(&mut self, r1: u64, r2: u64, no1: u64, no2: u64) -> Option<(u64, u64, u64)> {
        self.nodes += 1;
        let adj = self.adj;
        let taken = r1 | r2;
        let common = mask_neighbors(adj, r1) & mask_neighbors(adj, r2) & !taken;
        if common.count_ones() >= self.t {
            return Some((r1, r2, common));
        }
        let allowed1 = self.all & !r2 & !no1;
        let allowed2 = self.all & !r1 & !no2;
        let reach1 = mask_closure(adj, r1, allowed1 | r1);
        let reach2 = mask_closure(adj, r2, allowed2 | r2);
        let cand = mask_neighbors(adj, reach1) & mask_neighbors(adj, reach2) & !taken;
        if cand.count_ones() < self.t {
            return None;
        }
        let f1 = mask_neighbors(adj, r1) & allowed1 & !r1;
        let f2 = mask_neighbors(adj, r2) & allowed2 & !r2;
        if f1 != 0 {
            let v = 1u64 << f1.trailing_zeros();
            return self
                .run(r1 | v, r2, no1, no2)
                .or_else(|| self.run(r1, r2, no1 | v, no2));
        }
        if f2 != 0 {
            let v = 1u64 << f2.trailing_zeros();
            return self
                .run(r1, r2 | v, no1, no2)
                .or_else(|| self.run(r1, r2, no1, no2 | v));
        }
        None
    }
}

fn model_from_masks(t: usize, (r1, r2, common): (u64, u64, u64)) -> StandardModel {
    StandardModel {
        t,
        r1: VertexSet::from_mask(r1),
        r2: VertexSet::from_mask(r2),
        s: bits(common).take(t).collect(),
    }
}

/// Exhaustive search for a K2,t standard model, reporting node counts.
pub fn k2t_search(g: &Graph, t: usize) -> Result<MinorSearch> {
    if t < 2 {
        return Err(Error::precondition("t must be at least 2"));
    }
    let adj = g.masks()?;
    let n = g.n();
    let mut search = Search {
        adj: &adj,
        all: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        t: t as u32,
        nodes: 0,
    };
    // At least t vertices of degree >= 2 are needed for S.
    if n < t + 2 || (0..n).filter(|&v| g.degree(v) >= 2).count() < t {
        return Ok(MinorSearch { model: None, nodes: 0 });
    }
    for a in 0..n {
        let below_a = (1u64 << a) - 1;
        for b in a + 1..n {
            let below_b = (1u64 << b) - 1;
            if let Some(found) = search.run(1 << a, 1 << b, below_a, below_b) {
                return Ok(MinorSearch {
                    model: Some(model_from_masks(t, found)),
                    nodes: search.nodes,
                });
            }
        }
    }
    Ok(MinorSearch {
        model: None,
        nodes: search.nodes,
    })
}

/// A K2,t standard model of `g`, or `None` when `g` has no K2,t minor.
pub fn find_k2t_model(g: &Graph, t: usize) -> Result<Option<StandardModel>> {
    Ok(k2t_search(g, t)?.model)
}

/// True when `g` has no K2,t minor.
pub fn is_k2t_minor_free(g: &Graph, t: usize) -> Result<bool> {
    Ok(find_k2t_model(g, t)?.is_none())
}

/// Every standard model of K2,t, with the two sides unordered (listed with
/// `min(R1) < min(R2)`), sorted.
pub fn enumerate_k2t_models(g: &Graph, t: usize) -> Result<Vec<StandardModel>> {
    if t < 2 {
        return Err(Error::precondition("t must be at least 2"));
    }
    let n = g.n();
    if n > 20 {
        return Err(Error::precondition("model enumeration is limited to 20 vertices"));
    }
    let adj = g.masks()?;
    let connected: Vec<u64> = (1u64..1 << n).filter(|&m| mask_connected(&adj, m)).collect();
    let mut out = Vec::new();
    for &r1 in &connected {
        let n1 = mask_neighbors(&adj, r1);
        for &r2 in &connected {
            if r1 & r2 != 0 || r2.trailing_zeros() <= r1.trailing_zeros() {
                continue;
            }
            let common = n1 & mask_neighbors(&adj, r2) & !(r1 | r2);
            if (common.count_ones() as usize) < t {
                continue;
            }
            let members: Vec<usize> = bits(common).collect();
            for_each_subset(&members, t, &mut |s| {
                out.push(StandardModel {
                    t,
                    r1: VertexSet::from_mask(r1),
                    r2: VertexSet::from_mask(r2),
                    s: s.iter().copied().collect(),
                });
            });
        }
    }
    out.sort_by(|a, b| (&a.r1, &a.r2, &a.s).cmp(&(&b.r1, &b.r2, &b.s)));
    Ok(out)
}

/// Calls `f` on every `k`-subset of `items`, in lexicographic order.
pub(crate) fn for_each_subset(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - acc.len() {
                break;
            }
            acc.push(items[i]);
            rec(items, k, i + 1, acc, f);
            acc.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// K2,2 model with `x` in R1 and `y` in R2. Requires `g + xy` to be a
/// block.
pub fn find_rooted_k22(g: &Graph, x: usize, y: usize) -> Result<Option<RootedK22Model>> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::NoSuchVertex(v));
        }
    }
    if x == y {
        return Err(Error::precondition("roots must differ"));
    }
    let h = if g.has_edge(x, y) { g.clone() } else { g.add_edge(x, y)? };
    if !is_block(&h) {
        return Err(Error::precondition("g + xy is not a block"));
    }
    let adj = g.masks()?;
    let mut search = Search {
        adj: &adj,
        all: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        t: 2,
        nodes: 0,
    };
    Ok(search.run(1 << x, 1 << y, 0, 0).map(|found| RootedK22Model {
        x,
        y,
        model: model_from_masks(2, found),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2t(t: usize) -> Graph {
        let e: Vec<_> = (2..2 + t).flat_map(|s| [(0, s), (1, s)]).collect();
        Graph::from_edges(2 + t, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn k25_contains_itself() {
        let g = k2t(5);
        let m = find_k2t_model(&g, 5).unwrap().unwrap();
        assert!(m.verify(&g));
        assert_eq!(m.r1.as_slice(), &[0]);
        assert_eq!(m.r2.as_slice(), &[1]);
        assert!(find_k2t_model(&g, 6).unwrap().is_none());
    }

    #[test]
    fn t_below_two_rejected() {
        assert!(find_k2t_model(&k2t(3), 1).is_err());
    }

    #[test]
    fn c4_k22_models_are_opposite_pairs() {
        // One model per pair of opposite vertices; the two are swapped by a
        // rotation of the cycle.
        let models = enumerate_k2t_models(&cycle(4), 2).unwrap();
        assert_eq!(models.len(), 2);
        assert_eq!((models[0].r1.as_slice(), models[0].r2.as_slice()), (&[0][..], &[2][..]));
        assert_eq!((models[1].r1.as_slice(), models[1].r2.as_slice()), (&[1][..], &[3][..]));
    }

    #[test]
    fn cycles_have_k22_but_not_k23() {
        for n in 4..9 {
            assert!(find_k2t_model(&cycle(n), 2).unwrap().is_some());
            assert!(find_k2t_model(&cycle(n), 3).unwrap().is_none());
        }
    }

    #[test]
    fn rooted_cases() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(find_rooted_k22(&k2, 0, 1).unwrap().is_none());
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                if x != y {
                    let m = find_rooted_k22(&k4, x, y).unwrap().unwrap();
                    assert!(m.verify(&k4));
                }
            }
        }
        let fan = Graph::from_edges(4, &[(0, 1), (1, 2), (3, 0), (3, 1), (3, 2)]).unwrap();
        assert!(find_rooted_k22(&fan, 0, 3).unwrap().is_none());
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(find_rooted_k22(&path, 0, 1).is_err());
    }

    #[test]
    fn model_json_shape() {
        let m = find_k2t_model(&k2t(2), 2).unwrap().unwrap();
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v["t"], 2);
        assert!(v["R1"].is_array() && v["R2"].is_array() && v["S"].is_array());
    }
}
