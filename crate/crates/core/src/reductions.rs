//! C-reductions: contractions and deletions that keep a cycle `C` intact,
//! keep the graph 3-connected, and never shorten the longest achievable
//! cycle. Steps are recorded so cycles of the reduced graph can be lifted.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, IdMap, VertexSet};
use crate::hamilton::Cycle;
use crate::topology::{internally_disjoint_paths, is_k_connected, is_planar};

/// One reduction, in pre-step vertex ids, with the pre -> post id map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReductionStep {
    ContractComponent { set: VertexSet, id_map: IdMap },
    ContractDeg3Edge { b: usize, c: usize, id_map: IdMap },
    DeleteEdge { u: usize, v: usize, id_map: IdMap },
}

impl ReductionStep {
    pub fn id_map(&self) -> &IdMap {
        match self {
            ReductionStep::ContractComponent { id_map, .. }
            | ReductionStep::ContractDeg3Edge { id_map, .. }
            | ReductionStep::DeleteEdge { id_map, .. } => id_map,
        }
    }

    /// Re-applies the step to its pre-step graph.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        let (h, map) = match self {
            ReductionStep::ContractComponent { set, .. } => {
                if set.iter().any(|v| v >= g.n()) || set.is_empty() {
                    return Err(Error::precondition("contracted set out of range"));
                }
                g.contract_set(set)
            }
            ReductionStep::ContractDeg3Edge { b, c, .. } => g.contract_edge(*b, *c)?,
            ReductionStep::DeleteEdge { u, v, .. } => (g.remove_edge(*u, *v)?, (0..g.n()).collect()),
        };
        if &map != self.id_map() {
            return Err(Error::precondition("recorded id map does not match the step"));
        }
        Ok(h)
    }
}

/// A sequence of C-reductions from `original` to `result`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub original: Graph,
    pub cycle: Cycle,
    pub steps: Vec<ReductionStep>,
    pub result: Graph,
}

fn map_cycle(c: &Cycle, map: &IdMap) -> Cycle {
    Cycle::new(c.vertices.iter().map(|&v| map[v]).collect())
}

/// True when `c` survives the map: distinct images, every edge kept.
fn cycle_intact(c: &Cycle, map: &IdMap, after: &Graph) -> bool {
    let image = map_cycle(c, map);
    image.verify(after) && image.len() == c.len()
}

impl ReductionTrace {
    pub fn empty(g: &Graph, c: &Cycle) -> Self {
        ReductionTrace {
            original: g.clone(),
            cycle: c.clone(),
            steps: Vec::new(),
            result: g.clone(),
        }
    }

    /// The cycle `C` in result ids.
    pub fn cycle_in_result(&self) -> Cycle {
        self.steps.iter().fold(self.cycle.clone(), |c, s| map_cycle(&c, s.id_map()))
    }

    /// Graphs before each step, followed by the result.
    pub fn intermediates(&self) -> Result<Vec<Graph>> {
        let mut out = vec![self.original.clone()];
        for s in &self.steps {
            let next = s.apply(out.last().unwrap())?;
            out.push(next);
        }
        Ok(out)
    }

    /// Replays every step, checking 3-connectivity after each, that `C`
    /// stays intact, and that the replay ends at `result`.
    pub fn validate(&self) -> Result<()> {
        if !self.cycle.verify(&self.original) {
            return Err(Error::precondition("trace cycle is not a cycle of the original graph"));
        }
        let graphs = self.intermediates()?;
        let mut c = self.cycle.clone();
        for (i, s) in self.steps.iter().enumerate() {
            if !cycle_intact(&c, s.id_map(), &graphs[i + 1]) {
                return Err(Error::precondition(format!("step {i} breaks the cycle")));
            }
            c = map_cycle(&c, s.id_map());
            if !is_k_connected(&graphs[i + 1], 3) {
                return Err(Error::precondition(format!("step {i} loses 3-connectivity")));
            }
        }
        if graphs.last().unwrap() != &self.result {
            return Err(Error::precondition("replayed graph differs from the recorded result"));
        }
        Ok(())
    }

    /// Appends `other`, whose original must equal this trace's result.
    pub fn then(mut self, other: ReductionTrace) -> Result<ReductionTrace> {
        if other.original != self.result {
            return Err(Error::precondition("traces do not compose"));
        }
        if other.cycle != self.cycle_in_result() {
            return Err(Error::precondition("traces track different cycles"));
        }
        self.steps.extend(other.steps);
        self.result = other.result;
        Ok(self)
    }

    fn push(&mut self, step: ReductionStep, result: Graph) {
        self.steps.push(step);
        self.result = result;
    }
}

fn check_cycle(g: &Graph, c: &Cycle) -> Result<()> {
    if c.verify(g) {
        Ok(())
    } else {
        Err(Error::precondition("c is not a cycle of g"))
    }
}

fn require_3_connected(g: &Graph) -> Result<()> {
    if is_k_connected(g, 3) {
        Ok(())
    } else {
        Err(Error::precondition("graph is not 3-connected"))
    }
}

fn assert_3_connected(g: &Graph, what: &str) -> Result<()> {
    if is_k_connected(g, 3) {
        Ok(())
    } else {
        Err(Error::Internal(format!("{what} produced a graph that is not 3-connected")))
    }
}

/// An edge at the degree-3 vertex `v` whose contraction keeps `g`
/// 3-connected; neighbours are tried in ascending order.
pub fn halin_edge(g: &Graph, v: usize) -> Result<(usize, usize)> {
    if v >= g.n() {
        return Err(Error::NoSuchVertex(v));
    }
    if g.n() < 5 {
        return Err(Error::precondition("needs at least 5 vertices"));
    }
    if g.degree(v) != 3 {
        return Err(Error::precondition(format!("vertex {v} has degree {}, not 3", g.degree(v))));
    }
    require_3_connected(g)?;
    for &w in g.neighbors(v) {
        let (h, _) = g.contract_edge(v, w)?;
        if is_k_connected(&h, 3) {
            return Ok((v, w));
        }
    }
    Err(Error::Internal(format!("no contractible edge at degree-3 vertex {v}")))
}

/// Contracts a component `b` of `g - V(c)` with exactly three neighbours on
/// `c` to a single vertex.
pub fn contract_outside_component(g: &Graph, c: &Cycle, b: &VertexSet) -> Result<(Graph, ReductionStep)> {
    check_cycle(g, c)?;
    let on_c = c.vertex_set();
    if b.is_empty() || b.iter().any(|v| v >= g.n() || on_c.contains(v)) {
        return Err(Error::precondition("b must be a nonempty set of vertices off c"));
    }
    if !g.connected_components(&on_c).contains(b) {
        return Err(Error::precondition("b is not a component of g - V(c)"));
    }
    let attach: VertexSet = b
        .iter()
        .flat_map(|v| g.neighbors(v).iter().copied())
        .filter(|&w| on_c.contains(w))
        .collect();
    if attach.len() != 3 {
        return Err(Error::precondition(format!("b has {} neighbours on c, not 3", attach.len())));
    }
    require_3_connected(g)?;
    let (h, id_map) = g.contract_set(b);
    assert_3_connected(&h, "component contraction")?;
    Ok((h, ReductionStep::ContractComponent { set: b.clone(), id_map }))
}

/// Contracts the degree-3 vertex `b` (off `c`) along a Halin edge.
pub fn reduce_deg3_vertex(g: &Graph, c: &Cycle, b: usize) -> Result<(Graph, ReductionStep)> {
    check_cycle(g, c)?;
    if c.vertices.contains(&b) {
        return Err(Error::precondition("b lies on c"));
    }
    let (_, w) = halin_edge(g, b)?;
    let (h, id_map) = g.contract_edge(b, w)?;
    assert_3_connected(&h, "degree-3 contraction")?;
    Ok((h, ReductionStep::ContractDeg3Edge { b, c: w, id_map }))
}

/// Deletes the edge `e` (not on `c`) when its ends are joined by three
/// internally disjoint paths of at least `min_len` edges in `g - e`.
pub fn reduce_chord(g: &Graph, c: &Cycle, e: (usize, usize), min_len: usize) -> Result<(Graph, ReductionStep)> {
    check_cycle(g, c)?;
    let (u, v) = e;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    if c.edges().any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
        return Err(Error::precondition("edge lies on c"));
    }
    let h = g.remove_edge(u, v)?;
    if internally_disjoint_paths(&h, u, v, 3, min_len)?.is_none() {
        return Err(Error::precondition(format!(
            "no three internally disjoint {u}-{v} paths in g - {u}{v}"
        )));
    }
    assert_3_connected(&h, "chord deletion")?;
    let id_map = (0..g.n()).collect();
    Ok((h, ReductionStep::DeleteEdge { u, v, id_map }))
}

/// Normalizes `g` around `c`: every component of `g - V(c)` (each with
/// exactly three neighbours on `c`) is contracted to a vertex, every such
/// vertex except the image `d` of `d_component` is contracted into `c`,
/// then chords with three internally disjoint paths of length >= 2 are
/// deleted in ascending order until none remain.
pub fn normalize_claim3(g: &Graph, c: &Cycle, d_component: &VertexSet) -> Result<ReductionTrace> {
    check_cycle(g, c)?;
    require_3_connected(g)?;
    if !is_planar(g) {
        return Err(Error::precondition("graph is not planar"));
    }
    let on_c = c.vertex_set();
    let comps = g.connected_components(&on_c);
    if !comps.contains(d_component) {
        return Err(Error::precondition("d_component is not a component of g - V(c)"));
    }
    for comp in &comps {
        let attach: VertexSet = comp
            .iter()
            .flat_map(|v| g.neighbors(v).iter().copied())
            .filter(|&w| on_c.contains(w))
            .collect();
        if attach.len() != 3 {
            return Err(Error::precondition(format!(
                "component containing {} has {} neighbours on c, not 3",
                comp.first().unwrap(),
                attach.len()
            )));
        }
    }
    let mut trace = ReductionTrace::empty(g, c);
    let mut d = d_component.first().unwrap();
    let mut cur_c = c.clone();
    // Contract components one at a time; later components are re-identified
    // through the id maps.
    let mut pending: Vec<VertexSet> = comps.into_iter().filter(|s| s.len() > 1).collect();
    while let Some(comp) = pending.pop() {
        let is_d = comp.contains(d);
        let (h, step) = contract_outside_component(&trace.result, &cur_c, &comp)?;
        let map = step.id_map().clone();
        pending = pending.iter().map(|s| s.iter().map(|v| map[v]).collect()).collect();
        d = if is_d { map[comp.first().unwrap()] } else { map[d] };
        cur_c = map_cycle(&cur_c, &map);
        trace.push(step, h);
    }
    loop {
        let on_c = cur_c.vertex_set();
        let next = (0..trace.result.n()).find(|&v| v != d && !on_c.contains(v));
        let Some(b) = next else { break };
        let (h, step) = reduce_deg3_vertex(&trace.result, &cur_c, b)?;
        let map = step.id_map().clone();
        d = map[d];
        cur_c = map_cycle(&cur_c, &map);
        trace.push(step, h);
    }
    loop {
        let mut changed = false;
        let chords: Vec<(usize, usize)> = trace
            .result
            .edges()
            .filter(|&(u, v)| !cur_c.edges().any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u)))
            .collect();
        for (u, v) in chords {
            if !trace.result.has_edge(u, v) {
                continue;
            }
            let h = trace.result.remove_edge(u, v)?;
            if internally_disjoint_paths(&h, u, v, 3, 2)?.is_some() {
                let (h, step) = reduce_chord(&trace.result, &cur_c, (u, v), 2)?;
                trace.push(step, h);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(trace)
}

/// Inverse image of `v` under `map`, which must be unique.
fn preimage(map: &IdMap, v: usize) -> Option<usize> {
    let mut it = map.iter().enumerate().filter(|&(_, &w)| w == v).map(|(u, _)| u);
    let first = it.next()?;
    it.next().is_none().then_some(first)
}

/// Shortest `p`-`q` path with at least one internal vertex, all internal
/// vertices in `inside`.
fn path_through(g: &Graph, p: usize, q: usize, inside: &VertexSet) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &w in g.neighbors(p) {
        if inside.contains(w) {
            prev[w] = p;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        if g.has_edge(v, q) {
            let mut path = vec![q, v];
            let mut cur = v;
            while prev[cur] != p {
                cur = prev[cur];
                path.push(cur);
            }
            path.push(p);
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(v) {
            if inside.contains(w) && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Lifts a cycle of `trace.result` back to the original graph; the lifted
/// cycle is at least as long.
pub fn lift_cycle(trace: &ReductionTrace, z: &Cycle) -> Result<Cycle> {
    if !z.verify(&trace.result) {
        return Err(Error::precondition("z is not a cycle of the reduced graph"));
    }
    let graphs = trace.intermediates()?;
    let mut cyc = z.vertices.clone();
    for (i, step) in trace.steps.iter().enumerate().rev() {
        let pre = &graphs[i];
        let map = step.id_map();
        let merged = match step {
            ReductionStep::DeleteEdge { .. } => None,
            ReductionStep::ContractComponent { set, .. } => Some(map[set.first().unwrap()]),
            ReductionStep::ContractDeg3Edge { b, .. } => Some(map[*b]),
        };
        let k = cyc.len();
        let pos = merged.and_then(|m| cyc.iter().position(|&v| v == m));
        let mut out = Vec::with_capacity(k + 2);
        match pos {
            None => {
                for &v in &cyc {
                    out.push(preimage(map, v).ok_or_else(|| Error::Internal("id map not invertible".into()))?);
                }
            }
            Some(j) => {
                // Rotate so the merged vertex is last; p and q are its cycle
                // neighbours.
                let rot: Vec<usize> = (1..=k).map(|o| cyc[(j + o) % k]).collect();
                let back = |v: usize| preimage(map, v).ok_or_else(|| Error::Internal("id map not invertible".into()));
                let body: Vec<usize> = rot[..k - 1].iter().map(|&v| back(v)).collect::<Result<_>>()?;
                let (p, q) = (*body.last().unwrap(), body[0]);
                let insert: Vec<usize> = match step {
                    ReductionStep::ContractComponent { set, .. } => {
                        let path = path_through(pre, p, q, set)
                            .ok_or_else(|| Error::Internal("no path through contracted component".into()))?;
                        path[1..path.len() - 1].to_vec()
                    }
                    ReductionStep::ContractDeg3Edge { b, c, .. } => {
                        let (b, c) = (*b, *c);
                        let options = [vec![b, c], vec![c, b], vec![b], vec![c]];
                        options
                            .into_iter()
                            .find(|mid| pre.has_edge(p, mid[0]) && pre.has_edge(*mid.last().unwrap(), q))
                            .ok_or_else(|| Error::Internal("cannot re-route through contracted edge".into()))?
                    }
                    ReductionStep::DeleteEdge { .. } => unreachable!(),
                };
                out.extend(body);
                out.extend(insert);
            }
        }
        cyc = out;
    }
    let lifted = Cycle::new(cyc);
    if !lifted.verify(&trace.original) || lifted.len() < z.len() {
        return Err(Error::Internal("lifted cycle failed verification".into()));
    }
    Ok(lifted)
}
