//! Isomorph-free generation of planar triangulations and of 3-connected
//! planar graphs, with K2,t-minor and Hamiltonicity filters.
//!
//! Triangulations on `n + 1` vertices are obtained from those on `n` by
//! vertex splitting (the inverse of contracting an edge), carrying rotation
//! systems along. 3-connected planar graphs on `n` vertices are the
//! closure of the `n`-vertex triangulations under deleting one edge while
//! staying 3-connected, processed level by level in decreasing edge count.
//! Each level is deduplicated by canonical code.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CanonicalCode, Graph};
use crate::hamilton::find_hamilton_cycle;
use crate::minors::find_k2t_model;
use crate::topology::connectivity::is_3_connected_masks;
use crate::topology::{is_k_connected, is_planar, PlanarEmbedding};

/// A triangulation together with its rotation system.
#[derive(Clone, Debug)]
struct Triangulation {
    rotation: Vec<Vec<usize>>,
}

impl Triangulation {
    fn k4() -> Self {
        // Rotations of a planar K4 (face-walk convention of the topology
        // module).
        Triangulation {
            rotation: vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
        }
    }

    fn graph(&self) -> Graph {
        let adj = self
            .rotation
            .iter()
            .map(|r| {
                let mut l = r.clone();
                l.sort_unstable();
                l
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Splits `v` between its `i`-th and `j`-th rotation neighbours (`i <
    /// j`): the new vertex takes neighbours `i..=j`, `v` keeps `j..=i`
    /// cyclically, and the two become adjacent.
    fn split(&self, v: usize, i: usize, j: usize) -> Triangulation {
        let rot = &self.rotation[v];
        let d = rot.len();
        let nv = self.rotation.len();
        let mut r = self.rotation.clone();
        let (wi, wj) = (rot[i], rot[j]);
        let mut new_rot: Vec<usize> = rot[i..=j].to_vec();
        new_rot.push(v);
        let mut keep: Vec<usize> = (0..=(d + i - j)).map(|k| rot[(j + k) % d]).collect();
        keep.push(nv);
        for &w in &rot[i + 1..j] {
            for x in r[w].iter_mut() {
                if *x == v {
                    *x = nv;
                }
            }
        }
        let p = r[wi].iter().position(|&x| x == v).unwrap();
        r[wi].insert(p, nv);
        let p = r[wj].iter().position(|&x| x == v).unwrap();
        r[wj].insert(p + 1, nv);
        r[v] = keep;
        r.push(new_rot);
        Triangulation { rotation: r }
    }
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        b = b.num_threads(w.max(1));
    }
    b.build().map_err(|e| Error::Internal(format!("worker pool: {e}")))
}

/// Triangulations on exactly `n` vertices, keyed by canonical code.
fn triangulations_with_rotations(n: usize, workers: Option<usize>) -> Result<Vec<(CanonicalCode, Triangulation)>> {
    if n < 4 {
        return Err(Error::precondition("triangulations need at least 4 vertices"));
    }
    if n > 64 {
        return Err(Error::TooLarge(n));
    }
    let pool = pool(workers)?;
    let k4 = Triangulation::k4();
    let mut level = vec![(k4.graph().canonical_code(), k4)];
    for _ in 4..n {
        let children: Vec<Vec<(CanonicalCode, Triangulation)>> = pool.install(|| {
            level
                .par_iter()
                .map(|(_, t)| {
                    let mut out = Vec::new();
                    for v in 0..t.rotation.len() {
                        let d = t.rotation[v].len();
                        for i in 0..d {
                            for j in i + 1..d {
                                let child = t.split(v, i, j);
                                out.push((child.graph().canonical_code(), child));
                            }
                        }
                    }
                    out
                })
                .collect()
        });
        let mut seen: HashMap<CanonicalCode, Triangulation> = HashMap::new();
        for batch in children {
            for (code, t) in batch {
                seen.entry(code).or_insert(t);
            }
        }
        let mut next: Vec<_> = seen.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next;
    }
    Ok(level)
}

/// One representative per isomorphism class of triangulations on `n`
/// vertices, as canonical forms sorted by code.
pub fn generate_triangulations(n: usize) -> Result<Vec<Graph>> {
    Ok(triangulations_with_rotations(n, None)?
        .into_iter()
        .map(|(c, _)| c.to_graph())
        .collect())
}

/// Triangulations as plane embeddings (rotation systems in original
/// generation ids).
pub fn generate_triangulation_embeddings(n: usize) -> Result<Vec<PlanarEmbedding>> {
    triangulations_with_rotations(n, None)?
        .into_iter()
        .map(|(_, t)| {
            let g = t.graph();
            PlanarEmbedding::from_rotation(&g, t.rotation)
        })
        .collect()
}

/// Which graphs get a Hamiltonicity check during a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HamiltonScope {
    None,
    /// Only graphs passing the minor filter.
    Filtered,
    All,
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Keep only K2,t-minor-free graphs for this `t` (when set).
    pub minor_free_t: Option<usize>,
    pub hamilton: HamiltonScope,
    pub workers: Option<usize>,
    pub checkpoint_dir: Option<PathBuf>,
    /// Minimum number of emitted graphs between checkpoints.
    pub checkpoint_every: u64,
    /// Re-check planarity and 3-connectivity of every emitted graph.
    pub audit: bool,
    /// Collect the canonical codes of graphs passing the filter.
    pub collect: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            minor_free_t: None,
            hamilton: HamiltonScope::None,
            workers: None,
            checkpoint_dir: None,
            checkpoint_every: 100_000,
            audit: false,
            collect: false,
        }
    }
}

/// Tallies of a sweep over all 3-connected planar graphs of one order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCounters {
    pub total: u64,
    /// Graphs passing the minor filter (all graphs when no filter is set).
    pub passing: u64,
    pub passing_hamiltonian: u64,
    /// Graphs whose Hamiltonicity was checked.
    pub hamilton_checked: u64,
    /// Codes of checked graphs found non-Hamiltonian.
    pub non_hamiltonian: Vec<CanonicalCode>,
    /// Emitted graphs failing the audit (should stay empty).
    pub audit_failures: Vec<CanonicalCode>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub n: usize,
    pub minor_free_t: Option<usize>,
    pub counters: SweepCounters,
    /// Sorted codes of passing graphs, when requested.
    pub codes: Vec<CanonicalCode>,
    pub elapsed_secs: f64,
    pub resumed: bool,
}

/// Resumable state: the next edge-count level to process, with the minor
/// status inherited from parents, and the tallies so far.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenerationCheckpoint {
    pub schema: u32,
    pub order: usize,
    pub minor_free_t: Option<usize>,
    pub hamilton: HamiltonScope,
    /// Edge count of the graphs in `frontier`.
    pub level_edges: usize,
    /// Canonical codes of the pending level, each with a flag telling
    /// whether some parent was already known to be minor-free.
    pub frontier: Vec<(CanonicalCode, bool)>,
    pub counters: SweepCounters,
    /// Passing codes collected so far (only when collecting).
    pub seen: Vec<CanonicalCode>,
}

impl GenerationCheckpoint {
    pub fn path(dir: &Path, n: usize, t: Option<usize>) -> PathBuf {
        let filter = t.map_or("none".to_string(), |t| format!("k2{t}-free"));
        dir.join(format!("checkpoint-n{n}-{filter}.json"))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::parse(e.column(), e.to_string()))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("json.tmp");
        let text = serde_json::to_string(self).map_err(|e| Error::Internal(e.to_string()))?;
        fs::write(&tmp, text)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

struct Evaluated {
    code: CanonicalCode,
    passing: bool,
    minor_free: bool,
    hamiltonian: Option<bool>,
    audit_ok: bool,
}

fn evaluate(code: &CanonicalCode, inherited_free: bool, opts: &SweepOptions) -> Result<Evaluated> {
    let g = code.to_graph();
    let minor_free = match opts.minor_free_t {
        Some(t) => inherited_free || find_k2t_model(&g, t)?.is_none(),
        None => true,
    };
    let check_ham = match opts.hamilton {
        HamiltonScope::None => false,
        HamiltonScope::Filtered => minor_free,
        HamiltonScope::All => true,
    };
    let hamiltonian = if check_ham {
        Some(find_hamilton_cycle(&g)?.is_some())
    } else {
        None
    };
    let audit_ok = !opts.audit || (is_planar(&g) && is_k_connected(&g, 3));
    Ok(Evaluated {
        code: code.clone(),
        passing: minor_free,
        minor_free,
        hamiltonian,
        audit_ok,
    })
}

/// One-edge deletions of `g` that stay 3-connected, by canonical code.
fn children(code: &CanonicalCode) -> Result<Vec<CanonicalCode>> {
    let g = code.to_graph();
    let adj = g.masks()?;
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if g.degree(u) <= 3 || g.degree(v) <= 3 {
            continue;
        }
        let mut a = adj.clone();
        a[u] &= !(1 << v);
        a[v] &= !(1 << u);
        if is_3_connected_masks(&a) {
            out.push(Graph::from_masks(&a).canonical_code());
        }
    }
    Ok(out)
}

/// Sweeps every 3-connected planar graph on `n` vertices, applying the
/// filters in `opts`. Resumes from a checkpoint in `opts.checkpoint_dir`
/// when one matches.
pub fn sweep_3c_planar(n: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let start = Instant::now();
    if n < 4 {
        return Err(Error::precondition("3-connected graphs need at least 4 vertices"));
    }
    if let Some(t) = opts.minor_free_t {
        if t < 2 {
            return Err(Error::precondition("t must be at least 2"));
        }
    }
    let pool = pool(opts.workers)?;
    let ckpt_path = opts
        .checkpoint_dir
        .as_ref()
        .map(|d| GenerationCheckpoint::path(d, n, opts.minor_free_t));
    let mut resumed = false;
    let (mut level_edges, mut frontier, mut counters, mut seen) = match ckpt_path.as_ref().filter(|p| p.exists()) {
        Some(p) => {
            let ck = GenerationCheckpoint::load(p)?;
            if ck.order != n || ck.minor_free_t != opts.minor_free_t || ck.hamilton != opts.hamilton {
                return Err(Error::precondition(format!(
                    "checkpoint {} was written for different settings",
                    p.display()
                )));
            }
            resumed = true;
            (ck.level_edges, ck.frontier, ck.counters, ck.seen)
        }
        None => {
            let tri = triangulations_with_rotations(n, opts.workers)?;
            let frontier = tri.into_iter().map(|(c, _)| (c, false)).collect();
            (3 * n - 6, frontier, SweepCounters::default(), Vec::new())
        }
    };
    let mut since_checkpoint = 0u64;
    while !frontier.is_empty() {
        let evaluated: Vec<Evaluated> = pool.install(|| {
            frontier
                .par_iter()
                .map(|(code, inherited)| evaluate(code, *inherited, opts))
                .collect::<Result<_>>()
        })?;
        for e in &evaluated {
            counters.total += 1;
            if !e.audit_ok {
                counters.audit_failures.push(e.code.clone());
            }
            if let Some(h) = e.hamiltonian {
                counters.hamilton_checked += 1;
                if !h {
                    counters.non_hamiltonian.push(e.code.clone());
                }
            }
            if e.passing {
                counters.passing += 1;
                if e.hamiltonian == Some(true) {
                    counters.passing_hamiltonian += 1;
                }
                if opts.collect {
                    seen.push(e.code.clone());
                }
            }
        }
        since_checkpoint += evaluated.len() as u64;
        let kids: Vec<(Vec<CanonicalCode>, bool)> = pool.install(|| {
            evaluated
                .par_iter()
                .map(|e| children(&e.code).map(|k| (k, e.minor_free && opts.minor_free_t.is_some())))
                .collect::<Result<_>>()
        })?;
        let mut next: HashMap<CanonicalCode, bool> = HashMap::new();
        for (batch, free) in kids {
            for code in batch {
                *next.entry(code).or_insert(false) |= free;
            }
        }
        let mut next: Vec<(CanonicalCode, bool)> = next.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        frontier = next;
        level_edges -= 1;
        if let Some(p) = &ckpt_path {
            if since_checkpoint >= opts.checkpoint_every && !frontier.is_empty() {
                fs::create_dir_all(p.parent().unwrap())?;
                GenerationCheckpoint {
                    schema: 1,
                    order: n,
                    minor_free_t: opts.minor_free_t,
                    hamilton: opts.hamilton,
                    level_edges,
                    frontier: frontier.clone(),
                    counters: counters.clone(),
                    seen: seen.clone(),
                }
                .save(p)?;
                since_checkpoint = 0;
            }
        }
    }
    if let Some(p) = ckpt_path.filter(|p| p.exists()) {
        fs::remove_file(p)?;
    }
    counters.non_hamiltonian.sort();
    counters.audit_failures.sort();
    seen.sort();
    Ok(SweepReport {
        n,
        minor_free_t: opts.minor_free_t,
        counters,
        codes: seen,
        elapsed_secs: start.elapsed().as_secs_f64(),
        resumed,
    })
}

/// One representative per isomorphism class of 3-connected planar graphs
/// on `n` vertices, as canonical forms sorted by code.
pub fn generate_3c_planar(n: usize) -> Result<Vec<Graph>> {
    let opts = SweepOptions {
        collect: true,
        ..SweepOptions::default()
    };
    Ok(sweep_3c_planar(n, &opts)?.codes.iter().map(CanonicalCode::to_graph).collect())
}

/// Counts for one order: all 3-connected planar graphs, the K2,5-minor-free
/// ones, and how many of those are Hamiltonian.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub n: usize,
    pub total_3c_planar: u64,
    pub k25_free: u64,
    pub k25_free_hamiltonian: u64,
    pub elapsed: f64,
}

pub fn count_k25_free(n: usize) -> Result<CountReport> {
    count_k25_free_with(n, &SweepOptions::default())
}

/// [`count_k25_free`] with explicit worker and checkpoint settings.
pub fn count_k25_free_with(n: usize, base: &SweepOptions) -> Result<CountReport> {
    let opts = SweepOptions {
        minor_free_t: Some(5),
        hamilton: HamiltonScope::Filtered,
        ..base.clone()
    };
    let r = sweep_3c_planar(n, &opts)?;
    Ok(CountReport {
        n,
        total_3c_planar: r.counters.total,
        k25_free: r.counters.passing,
        k25_free_hamiltonian: r.counters.passing_hamiltonian,
        elapsed: r.elapsed_secs,
    })
}

/// One representative per isomorphism class of all graphs on `n` vertices
/// (any connectivity), by vertex augmentation; sorted by code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 9 {
        return Err(Error::precondition("all_graphs is limited to 9 vertices"));
    }
    let mut level = vec![Graph::empty(0).canonical_code()];
    for k in 0..n {
        let mut next: Vec<CanonicalCode> = level
            .par_iter()
            .flat_map_iter(|code| {
                let g = code.to_graph();
                let base: Vec<(usize, usize)> = g.edges().collect();
                (0u64..1 << k).map(move |nbrs| {
                    let mut e = base.clone();
                    e.extend((0..k).filter(|&v| nbrs >> v & 1 == 1).map(|v| (v, k)));
                    Graph::from_edges(k + 1, &e).expect("ids in range").canonical_code()
                })
            })
            .collect();
        next.sort();
        next.dedup();
        level = next;
    }
    Ok(level.iter().map(CanonicalCode::to_graph).collect())
}
