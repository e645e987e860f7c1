//! Verification matrix: every mechanically checkable claim about the
//! K2,5-minor-free Hamiltonicity result, replayed by exact search.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::enumerate::{all_graphs, generate_3c_planar, sweep_3c_planar, HamiltonScope, SweepOptions, SweepReport};
use crate::error::Result;
use crate::families::{self, GOLDNER_HARARY_DIAGONALS};
use crate::graph::{CanonicalCode, Graph, VertexSet};
use crate::hamilton::{all_cycles, find_hamilton_cycle, find_tough_cut, hamilton_cycle, longest_cycle};
use crate::hamilton::{outerplanar_ham_path, outerplanar_ham_path_minus, Cycle};
use crate::minors::{enumerate_k2t_models, find_k2t_model, find_rooted_k22};
use crate::reductions::{lift_cycle, normalize_claim3};
use crate::topology::{is_block, is_k_connected, is_planar, planar_embedding, vertex_connectivity};
use crate::topology::{xy_outerplanar_embedding, Planarity};

/// Published counts of 3-connected planar K2,5-minor-free graphs.
pub const G_TABLE: [(usize, u64); 6] = [(7, 31), (8, 194), (9, 918), (10, 3278), (11, 8346), (12, 18154)];

/// Number of isomorphism classes of 3-connected planar graphs, n = 4..=12.
pub const POLYHEDRA: [(usize, u64); 9] = [
    (4, 1),
    (5, 2),
    (6, 7),
    (7, 34),
    (8, 257),
    (9, 2606),
    (10, 32300),
    (11, 440564),
    (12, 6384634),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Level {
    /// Enumeration up to 9 vertices, reduced randomized suites.
    Quick,
    /// Enumeration up to 11 vertices, full suites.
    Full,
    /// Full plus the 12-vertex sweep.
    Extended,
}

impl Level {
    fn max_sweep(self) -> usize {
        match self {
            Level::Quick => 9,
            Level::Full => 11,
            Level::Extended => 12,
        }
    }

    fn max_k(self) -> usize {
        match self {
            Level::Quick => 2,
            _ => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationItem {
    pub id: String,
    pub claim: String,
    pub status: Status,
    pub details: String,
    /// graph6 of an offending graph, on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    /// Standalone command reproducing the check.
    pub reproduce: String,
    #[serde(skip)]
    pub elapsed_secs: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationMatrix {
    pub schema: u32,
    pub level: Level,
    pub items: Vec<VerificationItem>,
}

impl VerificationMatrix {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Fail)
    }

    pub fn item(&self, id: &str) -> Option<&VerificationItem> {
        self.items.iter().find(|i| i.id == id)
    }

    /// One line per item; timings appended when `timing` is set.
    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        for i in &self.items {
            let tag = match i.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = write!(out, "{tag} {}: {}", i.id, i.details);
            if timing {
                let _ = write!(out, " [{:.2}s]", i.elapsed_secs);
            }
            out.push('\n');
            if let Some(c) = &i.counterexample {
                let _ = writeln!(out, "     counterexample {c}; reproduce: {}", i.reproduce);
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub level: Level,
    /// Replacement for the built-in Herschel graph.
    pub herschel: Option<Graph>,
    pub workers: Option<usize>,
    pub seed: u64,
    /// Restrict to these item ids (all when empty).
    pub only: Vec<String>,
}

impl VerifyOptions {
    pub fn new(level: Level) -> Self {
        VerifyOptions {
            level,
            herschel: None,
            workers: None,
            seed: 0x5eed,
            only: Vec::new(),
        }
    }
}

/// Outcome of one check before it is wrapped into an item.
struct Outcome {
    status: Status,
    details: String,
    counterexample: Option<String>,
}

impl Outcome {
    fn pass(details: impl Into<String>) -> Self {
        Outcome {
            status: Status::Pass,
            details: details.into(),
            counterexample: None,
        }
    }

    fn fail(details: impl Into<String>, g: Option<&Graph>) -> Self {
        Outcome {
            status: Status::Fail,
            details: details.into(),
            counterexample: g.map(Graph::to_graph6),
        }
    }

    fn check(ok: bool, details: impl Into<String>, g: &Graph) -> Self {
        if ok {
            Self::pass(details)
        } else {
            Self::fail(details, Some(g))
        }
    }
}

/// Item identifiers in matrix order.
pub const ITEM_IDS: [&str; 16] = [
    "g-table",
    "k25-free-hamiltonian",
    "herschel-minimality",
    "herschel-k25-models",
    "gk-family",
    "petersen",
    "rooted-k22-equivalence",
    "outerplanar-paths",
    "c-reducibility",
    "prism-growth",
    "herschel-order-size",
    "herschel-planarity",
    "herschel-connectivity",
    "herschel-non-hamiltonian",
    "herschel-bipartite",
    "goldner-harary",
];

fn claim_of(id: &str) -> &'static str {
    match id {
        "g-table" => "counts of 3-connected planar K2,5-minor-free graphs match 31, 194, 918, 3278, 8346, 18154",
        "k25-free-hamiltonian" => "every 3-connected planar K2,5-minor-free graph is Hamiltonian",
        "herschel-minimality" => "the Herschel graph is the smallest non-Hamiltonian 3-connected planar graph",
        "herschel-k25-models" => "every K2,5 model of the Herschel graph covers V, has one degree-4 vertex per side, no R1-R2 edge",
        "gk-family" => "G_k is 3-connected, planar, non-Hamiltonian and K2,6-minor-free",
        "petersen" => "Petersen graph: nonplanar, 3-connected, non-Hamiltonian, circumference 9, K2,5-minor-free",
        "rooted-k22-equivalence" => "no rooted K2,2 minor on (x,y) iff xy-outerplanar, for blocks g+xy",
        "outerplanar-paths" => "Hamilton paths x y ... t and x ... t ending at degree-2 vertices in outerplanar graphs",
        "c-reducibility" => "C-reductions keep 3-connectivity and C, and lifted cycles are no shorter",
        "prism-growth" => "chorded prisms give at least 2^(n/2)/n classes, all K2,5-minor-free 3-connected planar Hamiltonian",
        "herschel-order-size" => "Herschel graph has 11 vertices and 18 edges",
        "herschel-planarity" => "Herschel graph is planar with 9 faces",
        "herschel-connectivity" => "Herschel graph is 3-connected",
        "herschel-non-hamiltonian" => "Herschel graph is not Hamiltonian",
        "herschel-bipartite" => "Herschel graph is bipartite with sides 5 and 6",
        "goldner-harary" => "Goldner-Harary graph: triangulation with 27 edges, non-Hamiltonian, Herschel plus 9 edges",
        _ => "",
    }
}

fn props_command(g: &Graph) -> String {
    format!("minorham props -g '{}'", g.to_graph6())
}

/// Runs the matrix at the requested level.
pub fn run_verification(opts: &VerifyOptions) -> Result<VerificationMatrix> {
    let herschel = opts.herschel.clone().unwrap_or_else(families::herschel);
    let wanted = |id: &str| opts.only.is_empty() || opts.only.iter().any(|o| o == id);
    let needs_sweeps = ["g-table", "k25-free-hamiltonian", "herschel-minimality"]
        .iter()
        .any(|id| wanted(id));
    let sweeps = if needs_sweeps { run_sweeps(opts)? } else { Vec::new() };
    let mut items = Vec::new();
    for id in ITEM_IDS {
        if !wanted(id) {
            continue;
        }
        let start = Instant::now();
        let (outcome, reproduce) = match id {
            "g-table" => (g_table(&sweeps), "minorham enumerate --n 10 --filter k25-free --count-only".to_string()),
            "k25-free-hamiltonian" => (
                k25_free_hamiltonian(&sweeps),
                "minorham enumerate --n 10 --filter k25-free --count-only".to_string(),
            ),
            "herschel-minimality" => (
                herschel_minimality(&sweeps, &herschel, opts.level),
                "minorham enumerate --n 11 --filter none --count-only".to_string(),
            ),
            "herschel-k25-models" => (herschel_models(&herschel)?, format!("minorham minor --t 5 --all -g '{}'", herschel.to_graph6())),
            "gk-family" => (gk_family(opts.level)?, "minorham family gk --k 4 | minorham ham --certificate".to_string()),
            "petersen" => (petersen()?, "minorham family petersen | minorham props".to_string()),
            "rooted-k22-equivalence" => (rooted_k22(opts.level)?, "minorham verify-paper --level full --only rooted-k22-equivalence".to_string()),
            "outerplanar-paths" => (outerplanar_paths(opts)?, "minorham verify-paper --level full --only outerplanar-paths".to_string()),
            "c-reducibility" => (c_reducibility(opts)?, "minorham verify-paper --level full --only c-reducibility".to_string()),
            "prism-growth" => (prism_growth(opts.level)?, "minorham family prism-chords --m 8 --mask 255 | minorham props".to_string()),
            "herschel-order-size" => (
                Outcome::check(
                    herschel.n() == 11 && herschel.m() == 18,
                    format!("n={} m={}", herschel.n(), herschel.m()),
                    &herschel,
                ),
                props_command(&herschel),
            ),
            "herschel-planarity" => (herschel_planarity(&herschel)?, props_command(&herschel)),
            "herschel-connectivity" => {
                let k = vertex_connectivity(&herschel)?;
                (Outcome::check(k == 3, format!("connectivity {k}"), &herschel), props_command(&herschel))
            }
            "herschel-non-hamiltonian" => (herschel_non_hamiltonian(&herschel)?, format!("minorham ham --certificate -g '{}'", herschel.to_graph6())),
            "herschel-bipartite" => (herschel_bipartite(&herschel), props_command(&herschel)),
            "goldner-harary" => (goldner_harary(&herschel)?, "minorham family goldner-harary | minorham props".to_string()),
            _ => unreachable!("unknown item id"),
        };
        items.push(VerificationItem {
            id: id.to_string(),
            claim: claim_of(id).to_string(),
            status: outcome.status,
            details: outcome.details,
            counterexample: outcome.counterexample,
            reproduce,
            elapsed_secs: start.elapsed().as_secs_f64(),
        });
    }
    Ok(VerificationMatrix {
        schema: 1,
        level: opts.level,
        items,
    })
}

fn run_sweeps(opts: &VerifyOptions) -> Result<Vec<SweepReport>> {
    let sweep_opts = SweepOptions {
        minor_free_t: Some(5),
        hamilton: HamiltonScope::All,
        workers: opts.workers,
        ..SweepOptions::default()
    };
    (4..=opts.level.max_sweep()).map(|n| sweep_3c_planar(n, &sweep_opts)).collect()
}

fn g_table(sweeps: &[SweepReport]) -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, expected) in G_TABLE {
        if let Some(r) = sweeps.iter().find(|r| r.n == n) {
            let got = r.counters.passing;
            ok &= got == expected;
            parts.push(format!("g({n})={got}{}", if got == expected { "" } else { " (expected differs)" }));
        }
    }
    let mut totals_ok = true;
    for r in sweeps {
        if let Some(&(_, t)) = POLYHEDRA.iter().find(|(n, _)| *n == r.n) {
            totals_ok &= r.counters.total == t;
        }
    }
    if !totals_ok {
        parts.push("3-connected planar totals disagree with known counts".into());
    }
    let details = parts.join(", ");
    if ok && totals_ok {
        Outcome::pass(details)
    } else {
        Outcome::fail(details, None)
    }
}

fn k25_free_hamiltonian(sweeps: &[SweepReport]) -> Outcome {
    let mut checked = 0u64;
    for r in sweeps {
        checked += r.counters.passing;
        if r.counters.passing_hamiltonian != r.counters.passing {
            // Minor-free non-Hamiltonian graphs are among the non-Hamiltonian codes.
            let bad = r
                .counters
                .non_hamiltonian
                .iter()
                .map(CanonicalCode::to_graph)
                .find(|g| find_k2t_model(g, 5).ok().flatten().is_none());
            return Outcome::fail(
                format!(
                    "n={}: {} of {} K2,5-minor-free graphs are Hamiltonian",
                    r.n, r.counters.passing_hamiltonian, r.counters.passing
                ),
                bad.as_ref(),
            );
        }
    }
    let max = sweeps.last().map_or(0, |r| r.n);
    Outcome::pass(format!("{checked} K2,5-minor-free classes with n<={max}, all Hamiltonian"))
}

fn herschel_minimality(sweeps: &[SweepReport], herschel: &Graph, level: Level) -> Outcome {
    let mut smaller = 0u64;
    for r in sweeps.iter().filter(|r| r.n <= 10) {
        smaller += r.counters.total;
        if let Some(c) = r.counters.non_hamiltonian.first() {
            return Outcome::fail(format!("non-Hamiltonian 3-connected planar graph at n={}", r.n), Some(&c.to_graph()));
        }
    }
    let max_small = sweeps.iter().map(|r| r.n).filter(|&n| n <= 10).max().unwrap_or(0);
    let mut details = format!("all {smaller} 3-connected planar classes with n<={max_small} Hamiltonian");
    match sweeps.iter().find(|r| r.n == 11) {
        Some(r) => {
            let code = herschel.canonical_code();
            let found = r.counters.non_hamiltonian.contains(&code);
            let _ = write!(
                details,
                "; n=11: {} non-Hamiltonian classes, Herschel {}",
                r.counters.non_hamiltonian.len(),
                if found { "among them" } else { "missing" }
            );
            if !found {
                return Outcome::fail(details, Some(herschel));
            }
        }
        None => {
            let _ = write!(details, "; n=11 sweep not run at {level:?} level");
        }
    }
    Outcome::pass(details)
}

fn herschel_models(h: &Graph) -> Result<Outcome> {
    let models = enumerate_k2t_models(h, 5)?;
    if models.is_empty() {
        return Ok(Outcome::fail("no K2,5 model", Some(h)));
    }
    let all: VertexSet = (0..h.n()).collect();
    for m in &models {
        let cover: VertexSet = m.r1.iter().chain(m.r2.iter()).chain(m.s.iter()).collect();
        let a = cover == all;
        let deg4 = |side: &VertexSet| side.iter().filter(|&v| h.degree(v) == 4).count() == 1;
        let b = deg4(&m.r1) && deg4(&m.r2);
        let c = !m.r1.iter().any(|u| m.r2.iter().any(|v| h.has_edge(u, v)));
        if !(m.verify(h) && a && b && c) {
            return Ok(Outcome::fail(
                format!("model R1={:?} R2={:?} S={:?} violates a={a} b={b} c={c}", m.r1.as_slice(), m.r2.as_slice(), m.s.as_slice()),
                Some(h),
            ));
        }
    }
    Ok(Outcome::pass(format!("{} labeled models, all satisfy (a), (b), (c)", models.len())))
}

fn gk_family(level: Level) -> Result<Outcome> {
    let mut parts = Vec::new();
    let mut prev: Option<Graph> = None;
    for k in 1..=level.max_k() {
        let g = families::g_k(k)?;
        let conn = vertex_connectivity(&g)?;
        let planar = is_planar(&g);
        let non_ham = find_hamilton_cycle(&g)?.is_none();
        let k26_free = find_k2t_model(&g, 6)?.is_none();
        let named_cut: VertexSet = ["x", "y", "z", "u4", "u5"].iter().filter_map(|l| g.vertex(l)).collect();
        let named_comps = g.connected_components(&named_cut).len();
        let cut = find_tough_cut(&g, 5)?;
        let cut_ok = named_cut.len() == 5 && named_comps == 6 && cut.as_ref().is_some_and(|c| c.verify(&g));
        // Contracting the path edge v_{k-1} v_k returns G_{k-1}.
        let chain_ok = match (&prev, g.vertex(&format!("v{}", k.max(2) - 1)), g.vertex(&format!("v{k}"))) {
            (None, _, _) => true,
            (Some(p), Some(u), Some(v)) => {
                g.has_edge(u, v) && g.contract_edge(u, v)?.0.canonical_code() == p.canonical_code()
            }
            _ => false,
        };
        let ok = conn == 3 && planar && non_ham && k26_free && cut_ok && chain_ok;
        parts.push(format!(
            "k={k}: n={} connectivity={conn} planar={planar} non-hamiltonian={non_ham} k26-free={k26_free} tough-cut-components={named_comps}",
            g.n()
        ));
        if !ok {
            return Ok(Outcome::fail(parts.join("; "), Some(&g)));
        }
        prev = Some(g);
    }
    Ok(Outcome::pass(parts.join("; ")))
}

fn petersen() -> Result<Outcome> {
    let g = families::petersen();
    let witness_ok = match planar_embedding(&g)? {
        Planarity::Nonplanar(w) => w.verify(&g),
        Planarity::Planar(_) => false,
    };
    let conn = vertex_connectivity(&g)?;
    let non_ham = matches!(hamilton_cycle(&g)?, crate::hamilton::HamiltonResult::Exhausted(_));
    let longest = longest_cycle(&g)?;
    let free = find_k2t_model(&g, 5)?.is_none();
    let ok = witness_ok && conn == 3 && non_ham && longest.len() == 9 && longest.verify(&g) && free;
    Ok(Outcome::check(
        ok,
        format!(
            "kuratowski-witness={witness_ok} connectivity={conn} non-hamiltonian={non_ham} longest-cycle={} k25-free={free}",
            longest.len()
        ),
        &g,
    ))
}

fn rooted_k22(level: Level) -> Result<Outcome> {
    let max_n = if level == Level::Quick { 6 } else { 7 };
    let mut instances = 0u64;
    let mut outerplanar = 0u64;
    let mut degenerate = 0u64;
    for n in 2..=max_n {
        for g in all_graphs(n)? {
            for x in 0..n {
                for y in 0..n {
                    if x == y {
                        continue;
                    }
                    let h = if g.has_edge(x, y) { g.clone() } else { g.add_edge(x, y)? };
                    if !is_block(&h) {
                        continue;
                    }
                    if g.m() == 0 {
                        // Two isolated roots have no Hamilton xy-path.
                        degenerate += 1;
                        continue;
                    }
                    instances += 1;
                    let model = find_rooted_k22(&g, x, y)?;
                    let emb = xy_outerplanar_embedding(&g, x, y)?;
                    let sound = model.as_ref().is_none_or(|m| m.verify(&g)) && emb.as_ref().is_none_or(|e| e.verify(&g));
                    if model.is_none() != emb.is_some() || !sound {
                        return Ok(Outcome::fail(
                            format!("disagreement at (x,y)=({x},{y}) after {instances} instances"),
                            Some(&g),
                        ));
                    }
                    outerplanar += emb.is_some() as u64;
                }
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{instances} rooted instances with n<={max_n} ({outerplanar} xy-outerplanar), zero disagreements; {degenerate} edgeless 2-vertex instances excluded"
    )))
}

/// Random 2-connected outerplanar graph on `n >= 3` vertices: a polygon with
/// a random subset of chords of a random triangulation, randomly relabeled.
/// Returns the graph and its outer cycle.
pub fn random_outerplanar(n: usize, rng: &mut StdRng) -> (Graph, Vec<usize>) {
    fn triangulate(i: usize, j: usize, rng: &mut StdRng, out: &mut Vec<(usize, usize)>) {
        if j - i < 2 {
            return;
        }
        let k = rng.random_range(i + 1..j);
        for (a, b) in [(i, k), (k, j)] {
            if b - a >= 2 {
                out.push((a, b));
            }
        }
        triangulate(i, k, rng, out);
        triangulate(k, j, rng, out);
    }
    let mut chords = Vec::new();
    triangulate(0, n - 1, rng, &mut chords);
    let keep = rng.random_range(0.0..1.0);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend(chords.into_iter().filter(|&(a, b)| !(a == 0 && b == n - 1) && rng.random_bool(keep)));
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    let g = Graph::from_edges(n, &edges).expect("valid outerplanar instance");
    (g, perm)
}

fn outerplanar_paths(opts: &VerifyOptions) -> Result<Outcome> {
    let count = if opts.level == Level::Quick { 1_000 } else { 10_000 };
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let mut xy_path_checks = 0u64;
    let mut x_path_checks = 0u64;
    for _ in 0..count {
        let n = rng.random_range(2..=12usize);
        if n == 2 {
            let g = Graph::from_edges(2, &[(0, 1)])?;
            let p = outerplanar_ham_path_minus(&g, 0, 1)?;
            x_path_checks += 1;
            if p.vertices != [0] {
                return Ok(Outcome::fail("two-vertex path does not end at x", Some(&g)));
            }
            continue;
        }
        let (g, outer) = random_outerplanar(n, &mut rng);
        let i = rng.random_range(0..n);
        let (mut x, mut y) = (outer[i], outer[(i + 1) % n]);
        if rng.random_bool(0.5) {
            std::mem::swap(&mut x, &mut y);
        }
        let all: VertexSet = (0..n).collect();
        let p = outerplanar_ham_path(&g, x, y)?;
        xy_path_checks += 1;
        let t = *p.vertices.last().unwrap();
        if !(p.verify(&g, &all) && p.vertices[..2] == [x, y] && g.degree(t) == 2) {
            return Ok(Outcome::fail(format!("bad x y ... t path for (x,y)=({x},{y})"), Some(&g)));
        }
        let h = if rng.random_bool(0.5) { g.remove_edge(x, y)? } else { g.clone() };
        let q = outerplanar_ham_path_minus(&h, x, y)?;
        x_path_checks += 1;
        let cover: VertexSet = (0..n).filter(|&v| v != y).collect();
        let t = *q.vertices.last().unwrap();
        if !(q.verify(&h, &cover) && q.vertices[0] == x && h.degree(t) == 2) {
            return Ok(Outcome::fail(format!("bad x ... t path in g - y for (x,y)=({x},{y})"), Some(&h)));
        }
    }
    Ok(Outcome::pass(format!(
        "{count} random instances (seed {}): {xy_path_checks} x y ... t paths, {x_path_checks} x ... t paths, zero violations",
        opts.seed
    )))
}

/// Cycles `c` of `g` such that `g - V(c)` is nonempty and each of its
/// components has exactly three neighbours on `c`.
pub fn reducible_cycles(g: &Graph) -> Result<Vec<Cycle>> {
    Ok(all_cycles(g)?
        .into_iter()
        .filter(|c| {
            let on_c = c.vertex_set();
            let comps = g.connected_components(&on_c);
            !comps.is_empty()
                && comps.iter().all(|comp| {
                    let attach: BTreeSet<usize> = comp
                        .iter()
                        .flat_map(|v| g.neighbors(v).iter().copied())
                        .filter(|&w| on_c.contains(w))
                        .collect();
                    attach.len() == 3
                })
        })
        .collect())
}

fn c_reducibility(opts: &VerifyOptions) -> Result<Outcome> {
    let count = if opts.level == Level::Quick { 100 } else { 1_000 };
    let max_n = if opts.level == Level::Quick { 8 } else { 9 };
    let pools: Vec<Vec<Graph>> = (6..=max_n).map(generate_3c_planar).collect::<Result<_>>()?;
    let mut rng = StdRng::seed_from_u64(opts.seed ^ 0xc0de);
    let mut steps = 0usize;
    let mut lifted = 0u64;
    let mut fixtures = 0;
    let mut attempts = 0;
    while fixtures < count {
        attempts += 1;
        let pool = &pools[rng.random_range(0..pools.len())];
        let base = &pool[rng.random_range(0..pool.len())];
        let mut perm: Vec<usize> = (0..base.n()).collect();
        perm.shuffle(&mut rng);
        let g = base.relabel(&perm);
        let cycles = reducible_cycles(&g)?;
        if cycles.is_empty() {
            continue;
        }
        let c = &cycles[rng.random_range(0..cycles.len())];
        let comps = g.connected_components(&c.vertex_set());
        let d = &comps[rng.random_range(0..comps.len())];
        let trace = normalize_claim3(&g, c, d)?;
        fixtures += 1;
        if let Err(e) = trace.validate() {
            return Ok(Outcome::fail(format!("trace invalid: {e}"), Some(&g)));
        }
        let r = &trace.result;
        let on_c = trace.cycle_in_result().vertex_set();
        let outside: Vec<usize> = (0..r.n()).filter(|&v| !on_c.contains(v)).collect();
        if outside.len() != 1 || r.degree(outside[0]) != 3 {
            return Ok(Outcome::fail("normalized graph does not have a single degree-3 vertex off C", Some(&g)));
        }
        steps += trace.steps.len();
        for z in all_cycles(r)? {
            let l = lift_cycle(&trace, &z)?;
            lifted += 1;
            if !l.verify(&g) || l.len() < z.len() {
                return Ok(Outcome::fail(format!("lift of cycle {:?} is shorter or invalid", z.vertices), Some(&g)));
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{fixtures} fixtures (n 6..={max_n}, {attempts} draws, seed {}): {steps} steps valid, {lifted} cycles lifted without loss",
        opts.seed
    )))
}

fn prism_growth(level: Level) -> Result<Outcome> {
    let max_m = if level == Level::Quick { 6 } else { 8 };
    let mut parts = Vec::new();
    for m in 5..=max_m {
        let n = 2 * m;
        let mut classes: BTreeSet<CanonicalCode> = BTreeSet::new();
        let mut reps = Vec::new();
        for bits in 0..1u64 << m {
            let g = families::prism_with_chords(m, &families::mask_from_bits(m, bits))?;
            if classes.insert(g.canonical_code()) {
                reps.push(g);
            }
        }
        for g in &reps {
            let ok = find_k2t_model(g, 5)?.is_none()
                && is_k_connected(g, 3)
                && is_planar(g)
                && find_hamilton_cycle(g)?.is_some();
            if !ok {
                return Ok(Outcome::fail(format!("prism member at n={n} fails"), Some(g)));
            }
        }
        let bound = 2f64.powi(m as i32) / n as f64;
        parts.push(format!("n={n}: {} classes (bound {bound:.1})", classes.len()));
        if (classes.len() as f64) < bound {
            return Ok(Outcome::fail(parts.join(", "), None));
        }
    }
    Ok(Outcome::pass(parts.join(", ")))
}

fn herschel_planarity(h: &Graph) -> Result<Outcome> {
    if !h.is_connected() {
        return Ok(Outcome::fail("disconnected", Some(h)));
    }
    Ok(match planar_embedding(h)? {
        Planarity::Planar(e) => {
            let f = e.faces().len();
            Outcome::check(f == 9, format!("planar, {f} faces"), h)
        }
        Planarity::Nonplanar(_) => Outcome::fail("nonplanar", Some(h)),
    })
}

fn herschel_non_hamiltonian(h: &Graph) -> Result<Outcome> {
    if h.n() < 3 {
        return Ok(Outcome::fail("too small", Some(h)));
    }
    Ok(match hamilton_cycle(h)? {
        crate::hamilton::HamiltonResult::Exhausted(p) => Outcome::pass(format!(
            "exhausted after {} nodes, transcript {}",
            p.nodes,
            &p.transcript_sha256[..16]
        )),
        crate::hamilton::HamiltonResult::Cycle(c) => Outcome::fail(format!("Hamilton cycle {:?}", c.vertices), Some(h)),
    })
}

fn herschel_bipartite(h: &Graph) -> Outcome {
    match h.bipartition() {
        Some(side) => {
            let a = side.iter().filter(|&&s| s).count();
            let (small, large) = (a.min(h.n() - a), a.max(h.n() - a));
            Outcome::check((small, large) == (5, 6), format!("sides {small} and {large}"), h)
        }
        None => Outcome::fail("not bipartite", Some(h)),
    }
}

fn goldner_harary(herschel: &Graph) -> Result<Outcome> {
    let g = families::goldner_harary();
    let triangulation = match planar_embedding(&g)? {
        Planarity::Planar(e) => e.faces().iter().all(|f| f.len() == 3),
        Planarity::Nonplanar(_) => false,
    };
    let mut base = g.clone();
    for &(u, v) in GOLDNER_HARARY_DIAGONALS.iter() {
        base = base.remove_edge(u, v)?;
    }
    let extends = base.canonical_code() == herschel.canonical_code();
    let non_ham = find_hamilton_cycle(&g)?.is_none();
    let conn = is_k_connected(&g, 3);
    Ok(Outcome::check(
        g.m() == 27 && triangulation && extends && non_ham && conn,
        format!(
            "m={} triangulation={triangulation} herschel-plus-9={extends} non-hamiltonian={non_ham} 3-connected={conn}",
            g.m()
        ),
        &g,
    ))
}
