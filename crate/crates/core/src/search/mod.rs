//! Exhaustive and pruned extremal search over unbalanced signed graphs of
//! small order, up to switching equivalence, with machine-verifiable
//! certificates.
//!
//! Underlying graphs are enumerated by adjacency bitmask, ascending; for
//! each one, one representative per switching class is walked (canonical
//! spanning forest positive, co-tree signs free). Pruning is against a
//! *static* threshold derived from a verified family member before the scan
//! starts: the candidate set, the winner, and the enumeration statistics are
//! then independent of worker count and timing, which keeps certificates
//! byte-identical across `jobs` settings. Ranges of bitmasks are handed to
//! workers as contiguous chunks; a chunk's results are merged in range
//! order.

mod checkpoint;
mod classes;
pub mod lemmas;
mod small;

pub use classes::enumerate_switching_classes;
pub use small::SEARCH_MAX_N;

use crate::constructions;
use crate::error::{Error, Result};
use crate::forbidden;
use crate::sgraph::{
    canonical_signed, decode_sg6, encode_sg6, switching_isomorphic, Sign, SignedGraph,
};
use crate::spectra;
use serde::{Deserialize, Serialize};
use small::{connected, rows_from_mask, SmallGraph, UnderlyingCtx};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

/// Values within this window of the maximum compete for the witness slot;
/// ties go to the lexicographically smallest canonical sg6.
pub const TIE_TOL: f64 = 1e-9;

/// Headroom subtracted from a verified feasible value to form the static
/// pruning threshold.
const SEED_SLACK: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Index,
    SpectralRadius,
}

impl Objective {
    pub fn value(&self, g: &SignedGraph) -> Result<f64> {
        match self {
            Objective::Index => spectra::index(g),
            Objective::SpectralRadius => spectra::spectral_radius(g),
        }
    }
}

/// Graph family searched over; membership is switching-invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    AllUnbalanced,
    /// Fewer than `t` distinct unbalanced 4-cliques.
    Tk4Free(u64),
    /// No unbalanced complete subgraph on `r` vertices.
    KrFree(usize),
    /// No negative triangle.
    C3Free,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::AllUnbalanced => "all_unbalanced",
            Family::Tk4Free(_) => "tk4_free",
            Family::KrFree(_) => "kr_free",
            Family::C3Free => "c3_free",
        }
    }

    pub fn param(&self) -> Option<u64> {
        match *self {
            Family::Tk4Free(t) => Some(t),
            Family::KrFree(r) => Some(r as u64),
            _ => None,
        }
    }

    pub fn from_parts(name: &str, param: Option<u64>) -> Result<Family> {
        match (name, param) {
            ("all_unbalanced", None) => Ok(Family::AllUnbalanced),
            ("tk4_free", Some(t)) => Ok(Family::Tk4Free(t)),
            ("kr_free", Some(r)) => Ok(Family::KrFree(r as usize)),
            ("c3_free", None) => Ok(Family::C3Free),
            _ => Err(Error::domain(format!("unknown family {name:?} / parameter mismatch"))),
        }
    }

    /// Membership test on a concrete signed graph.
    pub fn contains(&self, g: &SignedGraph) -> Result<bool> {
        match *self {
            Family::AllUnbalanced => Ok(true),
            Family::Tk4Free(t) => forbidden::is_tk4_free(g, t),
            Family::KrFree(r) => Ok(!forbidden::contains_unbalanced_kr(g, r)?),
            Family::C3Free => Ok(!forbidden::contains_unbalanced_ck(g, 3)?),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Family::Tk4Free(t) if t < 1 => Err(Error::domain("tk4_free requires t >= 1")),
            Family::KrFree(r) if r < 3 => Err(Error::domain("kr_free requires r >= 3")),
            _ => Ok(()),
        }
    }
}

/// Search request.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub n: usize,
    pub objective: Objective,
    pub family: Family,
    pub connected_only: bool,
    pub prune: bool,
    pub jobs: usize,
    pub checkpoint_path: Option<PathBuf>,
}

impl SearchSpec {
    pub fn new(n: usize, objective: Objective, family: Family) -> SearchSpec {
        SearchSpec {
            n,
            objective,
            family,
            connected_only: false,
            prune: n >= 7,
            jobs: 1,
            checkpoint_path: None,
        }
    }

    /// The search-defining parameters echoed into certificates. Runtime
    /// details (worker count, checkpoint path) are excluded so certificates
    /// compare byte-identical across equivalent runs.
    pub fn echo(&self) -> SpecEcho {
        SpecEcho {
            n: self.n,
            objective: self.objective,
            family: self.family.name().to_string(),
            family_param: self.family.param(),
            connected_only: self.connected_only,
            prune: self.prune,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecEcho {
    pub n: usize,
    pub objective: Objective,
    pub family: String,
    pub family_param: Option<u64>,
    pub connected_only: bool,
    pub prune: bool,
}

impl SpecEcho {
    pub fn family(&self) -> Result<Family> {
        Family::from_parts(&self.family, self.family_param)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessChecks {
    pub unbalanced: bool,
    pub family_free: bool,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchesConstruction {
    pub name: String,
    pub params: Vec<u64>,
    pub switching_isomorphic: bool,
}

/// Self-contained result of a completed search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchCertificate {
    pub schema: u32,
    pub spec: SpecEcho,
    pub best_value: f64,
    pub witness: String,
    pub classes_examined: u64,
    pub labeled_graphs_examined: u64,
    pub witness_checks: WitnessChecks,
    pub matches_construction: Option<MatchesConstruction>,
    pub wall_seconds: f64,
}

fn validate_spec(spec: &SearchSpec) -> Result<()> {
    if spec.n < 3 {
        return Err(Error::domain("search requires n >= 3"));
    }
    if spec.n > SEARCH_MAX_N {
        return Err(Error::capability(format!(
            "order guard: search is limited to n <= {SEARCH_MAX_N}"
        )));
    }
    if !spec.prune && spec.n >= 7 {
        return Err(Error::capability(
            "exhaustive-mode guard: pruned mode is required for n >= 7",
        ));
    }
    if spec.jobs < 1 {
        return Err(Error::domain("jobs must be >= 1"));
    }
    spec.family.validate()
}

/// Index of the all-positive signature of the underlying graph of `g`;
/// dominates the index (and spectral radius) of every signature, so it is a
/// sound pruning bound.
pub fn underlying_upper_bound(g: &SignedGraph) -> Result<f64> {
    spectra::index(&g.underlying())
}

/// Verified feasible constructions used to seed the pruning threshold; each
/// is checked against the actual family/connectivity predicates before use.
fn seed_candidates(n: usize) -> Vec<SignedGraph> {
    let mut out = Vec::new();
    for s in 1..=n.saturating_sub(2) {
        if let Ok(g) = constructions::gamma(s, n) {
            out.push(g);
        }
    }
    if n >= 3 {
        // Unbalanced cycle.
        let mut edges: Vec<(usize, usize, Sign)> =
            (0..n - 1).map(|i| (i, i + 1, Sign::Plus)).collect();
        edges.push((0, n - 1, Sign::Minus));
        if let Ok(g) = SignedGraph::new(n, &edges) {
            out.push(g);
        }
    }
    if n >= 4 {
        // Unbalanced complete bipartite K_{2,n-2} (triangle-free).
        let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
        for j in 2..n {
            edges.push((0, j, if j == 2 { Sign::Minus } else { Sign::Plus }));
            edges.push((1, j, Sign::Plus));
        }
        if let Ok(g) = SignedGraph::new(n, &edges) {
            out.push(g);
        }
    }
    out
}

fn prune_threshold(spec: &SearchSpec) -> Result<Option<f64>> {
    let mut best: Option<f64> = None;
    for g in seed_candidates(spec.n) {
        if g.is_balanced() {
            continue;
        }
        if spec.connected_only && !g.is_connected() {
            continue;
        }
        if !spec.family.contains(&g)? {
            continue;
        }
        let v = spec.objective.value(&g)?;
        best = Some(best.map_or(v, |b: f64| b.max(v)));
    }
    Ok(best.map(|v| v - SEED_SLACK))
}

/// Smallest edge count compatible with an objective value of `threshold`:
/// every eigenvalue of a +-1 adjacency satisfies `|lambda| <= sqrt(2m(n-1)/n)`.
fn min_edges_for(threshold: f64, n: usize) -> usize {
    if threshold <= 0.0 {
        return 0;
    }
    let pairs = n * (n - 1) / 2;
    for m in 0..=pairs {
        let bound = (2.0 * m as f64 * (n as f64 - 1.0) / n as f64).sqrt();
        if bound + 1e-9 >= threshold {
            return m;
        }
    }
    pairs + 1
}

/// Candidate pool: the running maximum plus everything within [`TIE_TOL`].
struct Candidates {
    max: f64,
    items: Vec<(f64, SmallGraph)>,
}

impl Candidates {
    fn new() -> Candidates {
        Candidates { max: f64::NEG_INFINITY, items: Vec::new() }
    }

    fn offer(&mut self, value: f64, g: &SmallGraph) {
        if value >= self.max - TIE_TOL {
            if value > self.max {
                self.max = value;
                let cutoff = self.max - TIE_TOL;
                self.items.retain(|(v, _)| *v >= cutoff);
            }
            self.items.push((value, *g));
        }
    }
}

struct ChunkOutcome {
    start: u64,
    graphs: u64,
    classes: u64,
    candidates: Vec<(f64, SignedGraph)>,
}

fn process_chunk(
    spec: &SearchSpec,
    threshold: Option<f64>,
    m_min: usize,
    start: u64,
    end: u64,
) -> Result<ChunkOutcome> {
    let n = spec.n;
    let kr = match spec.family {
        Family::KrFree(r) => Some(r),
        _ => None,
    };
    let tk4_cap = match spec.family {
        Family::Tk4Free(t) => Some(t - 1),
        _ => None,
    };
    let mut cands = Candidates::new();
    let mut graphs = 0u64;
    let mut classes = 0u64;
    let mut buf = [0.0f64; SEARCH_MAX_N * SEARCH_MAX_N];
    let mut failure: Result<()> = Ok(());

    for mask in start..end {
        let m = mask.count_ones() as usize;
        if m < m_min {
            continue;
        }
        if spec.connected_only && m < n - 1 {
            continue;
        }
        let (adj, _) = rows_from_mask(n, mask);
        if spec.connected_only && !connected(n, &adj) {
            continue;
        }
        if let Some(t) = threshold {
            // lambda_1 of the all-positive signature bounds every signature.
            buf[..n * n].fill(0.0);
            for i in 0..n {
                let mut row = adj[i];
                while row != 0 {
                    let j = row.trailing_zeros() as usize;
                    row &= row - 1;
                    buf[i * n + j] = 1.0;
                }
            }
            spectra::jacobi_in_place(&mut buf[..n * n], n, None, spectra::DEFAULT_TOL)?;
            let mut ub = f64::NEG_INFINITY;
            for i in 0..n {
                ub = ub.max(buf[i * n + i]);
            }
            if ub + 1e-8 < t {
                continue;
            }
        }
        let ctx = UnderlyingCtx::build(n, mask, kr);
        graphs += 1;
        classes += ctx.class_count() - 1;
        let mut inner_err: Option<Error> = None;
        ctx.for_each_unbalanced_class(|neg, neg_tris| {
            if inner_err.is_some() {
                return;
            }
            let pass = match spec.family {
                Family::AllUnbalanced => true,
                Family::C3Free => neg_tris == 0,
                Family::KrFree(_) => ctx.kr_tri.iter().all(|&t| t & neg_tris == 0),
                Family::Tk4Free(_) => {
                    let cap = tk4_cap.unwrap();
                    let mut count = 0u64;
                    let mut ok = true;
                    for &t in &ctx.k4_tri {
                        if t & neg_tris != 0 {
                            count += 1;
                            if count > cap {
                                ok = false;
                                break;
                            }
                        }
                    }
                    ok
                }
            };
            if !pass {
                return;
            }
            let small = SmallGraph { n, adj: ctx.adj, neg: *neg };
            small.fill_adjacency(&mut buf);
            if let Err(e) =
                spectra::jacobi_in_place(&mut buf[..n * n], n, None, spectra::DEFAULT_TOL)
            {
                inner_err = Some(e);
                return;
            }
            let mut hi = f64::NEG_INFINITY;
            let mut lo = f64::INFINITY;
            for i in 0..n {
                hi = hi.max(buf[i * n + i]);
                lo = lo.min(buf[i * n + i]);
            }
            let value = match spec.objective {
                Objective::Index => hi,
                Objective::SpectralRadius => hi.max(-lo),
            };
            cands.offer(value, &small);
        });
        if let Some(e) = inner_err {
            failure = Err(e);
            break;
        }
    }
    failure?;
    Ok(ChunkOutcome {
        start,
        graphs,
        classes,
        candidates: cands.items.iter().map(|(v, g)| (*v, g.to_signed())).collect(),
    })
}

fn spec_checksum(echo: &SpecEcho) -> Result<u64> {
    let json = serde_json::to_string(echo)
        .map_err(|e| Error::domain(format!("spec serialization failed: {e}")))?;
    Ok(checkpoint::fnv1a64(json.as_bytes()))
}

/// The per-range winner recorded in the checkpoint journal.
fn chunk_best(outcome: &ChunkOutcome) -> Option<(f64, String)> {
    let max = outcome.candidates.iter().map(|(v, _)| *v).fold(f64::NEG_INFINITY, f64::max);
    outcome
        .candidates
        .iter()
        .filter(|(v, _)| *v >= max - TIE_TOL)
        .map(|(v, g)| (*v, encode_sg6(g)))
        .min_by(|a, b| a.1.cmp(&b.1))
}

/// The construction the witness is expected to match, per family.
fn expected_construction(spec: &SearchSpec) -> Option<(String, Vec<u64>, SignedGraph)> {
    let n = spec.n;
    match spec.family {
        Family::AllUnbalanced => constructions::complete_one_negative(n)
            .ok()
            .map(|g| ("complete_one_negative".to_string(), vec![n as u64], g)),
        Family::Tk4Free(t) => {
            let choose2 = ((n - 2) * (n - 3) / 2) as u64;
            let s = if t > choose2 {
                Some(n - 2)
            } else {
                constructions::r_of_t(t).map(|r| r as usize)
            };
            let s = s?;
            constructions::gamma(s, n)
                .ok()
                .map(|g| ("gamma".to_string(), vec![s as u64, n as u64], g))
        }
        Family::KrFree(r) if r >= 4 => constructions::gamma(r - 3, n)
            .ok()
            .map(|g| ("gamma".to_string(), vec![(r - 3) as u64, n as u64], g)),
        _ => None,
    }
}

/// Runs the search described by `spec` and returns its certificate.
pub fn extremal_search(spec: &SearchSpec) -> Result<SearchCertificate> {
    let t_start = Instant::now();
    validate_spec(spec)?;
    let echo = spec.echo();
    let checksum = spec_checksum(&echo)?;

    let pairs = spec.n * (spec.n - 1) / 2;
    let total = 1u64 << pairs;
    let threshold = if spec.prune { prune_threshold(spec)? } else { None };
    let m_min = threshold.map_or(0, |t| min_edges_for(t, spec.n));

    // Fixed chunk grid (a function of n only), so journals and resumed runs
    // line up no matter how many workers ran before.
    let chunk_size = (total >> 10).max(1);
    let mut chunks: Vec<(u64, u64)> = Vec::new();
    let mut at = 0u64;
    while at < total {
        let end = (at + chunk_size).min(total);
        chunks.push((at, end));
        at = end;
    }

    let mut done: std::collections::HashSet<(u64, u64)> = std::collections::HashSet::new();
    let mut outcomes: Vec<ChunkOutcome> = Vec::new();
    let journal = match &spec.checkpoint_path {
        Some(path) => {
            let (journal, records) = checkpoint::Journal::open(path, checksum)?;
            for rec in records {
                done.insert((rec.start, rec.end));
                outcomes.push(ChunkOutcome {
                    start: rec.start,
                    graphs: rec.graphs,
                    classes: rec.classes,
                    candidates: rec.best.into_iter().collect(),
                });
            }
            Some(Mutex::new(journal))
        }
        None => None,
    };

    let next = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let results: Mutex<Vec<ChunkOutcome>> = Mutex::new(Vec::new());
    let first_error: Mutex<Option<Error>> = Mutex::new(None);

    std::thread::scope(|scope| {
        for _ in 0..spec.jobs.min(chunks.len()).max(1) {
            scope.spawn(|| loop {
                if stop.load(Ordering::Relaxed) {
                    break;
                }
                let k = next.fetch_add(1, Ordering::Relaxed) as usize;
                if k >= chunks.len() {
                    break;
                }
                let (start, end) = chunks[k];
                if done.contains(&(start, end)) {
                    continue;
                }
                match process_chunk(spec, threshold, m_min, start, end) {
                    Ok(outcome) => {
                        if let Some(j) = &journal {
                            let best = chunk_best(&outcome);
                            let rec = checkpoint::JournalRecord {
                                start,
                                end,
                                best: best
                                    .as_ref()
                                    .map(|(v, s)| (*v, decode_sg6(s).expect("own encoding"))),
                                graphs: outcome.graphs,
                                classes: outcome.classes,
                            };
                            let line = best.as_ref().map(|(_, s)| s.as_str());
                            if let Err(e) = j.lock().unwrap().append(&rec, line) {
                                *first_error.lock().unwrap() = Some(e);
                                stop.store(true, Ordering::Relaxed);
                                break;
                            }
                        }
                        results.lock().unwrap().push(outcome);
                    }
                    Err(e) => {
                        *first_error.lock().unwrap() = Some(e);
                        stop.store(true, Ordering::Relaxed);
                        break;
                    }
                }
            });
        }
    });

    if let Some(e) = first_error.into_inner().unwrap() {
        return Err(e);
    }
    outcomes.extend(results.into_inner().unwrap());
    outcomes.sort_by_key(|o| o.start);

    let labeled_graphs_examined: u64 = outcomes.iter().map(|o| o.graphs).sum();
    let classes_examined: u64 = outcomes.iter().map(|o| o.classes).sum();

    let mut all: Vec<(f64, SignedGraph)> =
        outcomes.into_iter().flat_map(|o| o.candidates).collect();
    if all.is_empty() {
        return Err(Error::domain(
            "the family has no unbalanced members at this order (or pruning found none above the seed)",
        ));
    }
    let gmax = all.iter().map(|(v, _)| *v).fold(f64::NEG_INFINITY, f64::max);
    all.retain(|(v, _)| *v >= gmax - TIE_TOL);

    let mut winner: Option<(String, SignedGraph)> = None;
    for (_, g) in &all {
        let canon = canonical_signed(g)?;
        let sg6 = encode_sg6(&canon);
        if winner.as_ref().is_none_or(|(best, _)| sg6 < *best) {
            winner = Some((sg6, canon));
        }
    }
    let (witness_sg6, witness) = winner.unwrap();

    let best_value = spec.objective.value(&witness)?;
    let witness_checks = WitnessChecks {
        unbalanced: !witness.is_balanced(),
        family_free: spec.family.contains(&witness)?,
        connected: witness.is_connected(),
    };
    let matches_construction = match expected_construction(spec) {
        Some((name, params, expected)) => Some(MatchesConstruction {
            name,
            params,
            switching_isomorphic: switching_isomorphic(&witness, &expected)?,
        }),
        None => None,
    };

    Ok(SearchCertificate {
        schema: 1,
        spec: echo,
        best_value,
        witness: witness_sg6,
        classes_examined,
        labeled_graphs_examined,
        witness_checks,
        matches_construction,
        wall_seconds: t_start.elapsed().as_secs_f64(),
    })
}

/// Serializes a certificate with stable key order.
pub fn certificate_to_json(cert: &SearchCertificate) -> Result<String> {
    serde_json::to_string_pretty(cert)
        .map_err(|e| Error::domain(format!("certificate serialization failed: {e}")))
}

/// Parses a certificate from JSON text.
pub fn certificate_from_json(text: &str) -> Result<SearchCertificate> {
    serde_json::from_str(text).map_err(|e| Error::domain(format!("certificate parse: {e}")))
}

/// Independently re-checks a certificate without re-running the search:
/// the witness must decode, be unbalanced, lie in the family, satisfy the
/// connectivity requirement, and attain `best_value` within 1e-8.
pub fn verify_certificate(cert: &SearchCertificate) -> Result<()> {
    let mut failures: Vec<String> = Vec::new();
    if cert.schema != 1 {
        failures.push(format!("unknown schema {}", cert.schema));
    }
    let family = cert.spec.family()?;
    match decode_sg6(&cert.witness) {
        Err(e) => failures.push(format!("witness decode: {e}")),
        Ok(w) => {
            if w.order() != cert.spec.n {
                failures.push("witness order mismatch".to_string());
            }
            if w.is_balanced() {
                failures.push("witness is balanced".to_string());
            }
            if !family.contains(&w)? {
                failures.push("family violation".to_string());
            }
            if cert.spec.connected_only && !w.is_connected() {
                failures.push("witness is disconnected".to_string());
            }
            let value = cert.spec.objective.value(&w)?;
            if (value - cert.best_value).abs() > 1e-8 {
                failures.push(format!(
                    "objective mismatch: witness attains {value}, certificate says {}",
                    cert.best_value
                ));
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Error::Verification(failures.join("; ")))
    }
}

/// Structural report for a `tK4`-free search witness, following the shape of
/// the extremal graph: connected, a single negative edge whose endpoints
/// share exactly `r` common neighbors, switching-isomorphic to the
/// corresponding `gamma` construction.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub unbalanced: bool,
    pub connected: bool,
    pub r: Option<u64>,
    pub negative_edges_after_switching: Option<usize>,
    pub common_neighborhood: Option<usize>,
    pub matches_gamma: Option<bool>,
    pub note: Option<String>,
}

pub fn verify_extremal_structure(g: &SignedGraph, t: u64) -> Result<StructureReport> {
    let mut report = StructureReport {
        unbalanced: !g.is_balanced(),
        connected: g.is_connected(),
        r: None,
        negative_edges_after_switching: None,
        common_neighborhood: None,
        matches_gamma: None,
        note: None,
    };
    if !report.unbalanced {
        report.note = Some("not unbalanced".to_string());
        return Ok(report);
    }
    let r = match constructions::r_of_t(t) {
        Some(r) => r,
        None => {
            report.note = Some("r not integral, structure check skipped".to_string());
            return Ok(report);
        }
    };
    report.r = Some(r);
    let (_, switched, _) = spectra::nonneg_switching(g)?;
    let neg_edges: Vec<(usize, usize)> = switched
        .edges()
        .filter(|&(_, _, s)| s == Sign::Minus)
        .map(|(i, j, _)| (i, j))
        .collect();
    report.negative_edges_after_switching = Some(neg_edges.len());
    if let [(a, b)] = neg_edges[..] {
        let common = switched
            .neighbors(a)?
            .intersection(switched.neighbors(b)?)
            .len();
        report.common_neighborhood = Some(common);
    }
    let n = g.order();
    if n >= (r as usize) + 2 {
        let expected = constructions::gamma(r as usize, n)?;
        report.matches_gamma = Some(switching_isomorphic(g, &expected)?);
    }
    Ok(report)
}

/// Test oracle: scans *all* `3^C(n,2)` labeled signed graphs directly (no
/// switching-class reduction, no pruning) and returns the best objective
/// value together with every maximizer within [`TIE_TOL`].
pub fn naive_scan(
    n: usize,
    objective: Objective,
    family: Family,
    connected_only: bool,
) -> Result<(f64, Vec<SignedGraph>)> {
    let pairs = n * (n - 1) / 2;
    if pairs > 10 {
        return Err(Error::capability("naive scan is limited to n <= 5"));
    }
    let total = 3u64.pow(pairs as u32);
    let mut best = f64::NEG_INFINITY;
    let mut argmax: Vec<(f64, SignedGraph)> = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                match c % 3 {
                    1 => edges.push((i, j, Sign::Plus)),
                    2 => edges.push((i, j, Sign::Minus)),
                    _ => {}
                }
                c /= 3;
            }
        }
        let g = SignedGraph::new(n, &edges)?;
        if g.is_balanced() {
            continue;
        }
        if connected_only && !g.is_connected() {
            continue;
        }
        if !family.contains(&g)? {
            continue;
        }
        let v = objective.value(&g)?;
        if v >= best - TIE_TOL {
            if v > best {
                best = v;
                argmax.retain(|(x, _)| *x >= best - TIE_TOL);
            }
            argmax.push((v, g));
        }
    }
    if argmax.is_empty() {
        return Err(Error::domain("family has no unbalanced members at this order"));
    }
    argmax.retain(|(x, _)| *x >= best - TIE_TOL);
    Ok((best, argmax.into_iter().map(|(_, g)| g).collect()))
}

#[cfg(test)]
mod tests;
