//! Canonical labeling of small graphs and switching isomorphism of signed
//! graphs.
//!
//! The canonical labeling of the underlying graph is the lexicographically
//! smallest column-major upper-triangle bit string over all vertex orderings
//! whose degree sequence is non-decreasing (brute-force search with
//! degree-class and prefix pruning; adequate for the orders the search
//! harness handles). On top of it, the canonical form of a *signed* graph
//! minimizes the canonical-signature bit string over all labelings attaining
//! the canonical underlying form, so equality of canonical forms decides
//! switching isomorphism.

use super::{Sign, SignedGraph};
use crate::error::{Error, Result};

/// Guard for the factorial-time canonical search.
const CANON_MAX_N: usize = 12;

type HitCallback<'a> = Box<dyn FnMut(&[usize]) + 'a>;

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    /// Find the minimal bit string.
    Minimize,
    /// Visit every labeling whose bit string equals `best` exactly.
    MatchExact,
}

struct CanonSearch<'a> {
    g: &'a SignedGraph,
    n: usize,
    degrees: Vec<usize>,
    /// Sorted non-decreasing degree sequence; position `k` may only take a
    /// vertex of degree `target[k]`.
    target: Vec<usize>,
    best: Option<Vec<u64>>,
    perm: Vec<usize>,
    used: u64,
    /// Upper-triangle bits of the partial labeling, column-major, packed
    /// MSB-first into u64 words.
    bits: Vec<u64>,
    mode: Mode,
    on_hit: Option<HitCallback<'a>>,
}

/// Lexicographic comparison of the first `hi` bits of two MSB-first packed
/// bit strings.
fn prefix_cmp(a: &[u64], b: &[u64], hi: usize) -> std::cmp::Ordering {
    let full_words = hi / 64;
    for w in 0..full_words {
        if a[w] != b[w] {
            return a[w].cmp(&b[w]);
        }
    }
    let rem = hi % 64;
    if rem == 0 {
        return std::cmp::Ordering::Equal;
    }
    let mask = !0u64 << (64 - rem);
    (a[full_words] & mask).cmp(&(b[full_words] & mask))
}

impl<'a> CanonSearch<'a> {
    fn new(g: &'a SignedGraph, mode: Mode) -> Self {
        let n = g.order();
        let degrees: Vec<usize> = (0..n).map(|v| g.degree(v).unwrap()).collect();
        let mut target = degrees.clone();
        target.sort_unstable();
        let nwords = (n * n.saturating_sub(1) / 2).div_ceil(64).max(1);
        CanonSearch {
            g,
            n,
            degrees,
            target,
            best: None,
            perm: Vec::with_capacity(n),
            used: 0,
            bits: vec![0u64; nwords],
            mode,
            on_hit: None,
        }
    }

    fn descend(&mut self, pos: usize) {
        if pos == self.n {
            match self.mode {
                Mode::Minimize => {
                    let better = match &self.best {
                        None => true,
                        Some(best) => self.bits < *best,
                    };
                    if better {
                        self.best = Some(self.bits.clone());
                    }
                }
                Mode::MatchExact => {
                    if let Some(hit) = self.on_hit.as_mut() {
                        hit(&self.perm);
                    }
                }
            }
            return;
        }
        // Bits revealed by placing position `pos`: the column (0,pos)..(pos-1,pos).
        let lo = pos * pos.saturating_sub(1) / 2;
        let hi = lo + pos;
        for v in 0..self.n {
            if self.used & (1u64 << v) != 0 || self.degrees[v] != self.target[pos] {
                continue;
            }
            for (i, &p) in self.perm.iter().enumerate() {
                let k = lo + i;
                let mask = 1u64 << (63 - (k % 64));
                if self.g.has_edge(p, v) {
                    self.bits[k / 64] |= mask;
                } else {
                    self.bits[k / 64] &= !mask;
                }
            }
            let prune = match (&self.best, self.mode) {
                (None, _) => false,
                (Some(best), Mode::Minimize) => {
                    prefix_cmp(&self.bits, best, hi) == std::cmp::Ordering::Greater
                }
                (Some(best), Mode::MatchExact) => {
                    prefix_cmp(&self.bits, best, hi) != std::cmp::Ordering::Equal
                }
            };
            if !prune {
                self.perm.push(v);
                self.used |= 1u64 << v;
                self.descend(pos + 1);
                self.used &= !(1u64 << v);
                self.perm.pop();
            }
        }
    }
}

fn minimal_bits(g: &SignedGraph) -> Vec<u64> {
    let mut search = CanonSearch::new(g, Mode::Minimize);
    search.descend(0);
    search.best.expect("canonical search found no labeling")
}

/// Visits every degree-compatible labeling attaining `best`.
fn for_each_achiever(g: &SignedGraph, best: Vec<u64>, hit: impl FnMut(&[usize])) {
    let mut search = CanonSearch::new(g, Mode::MatchExact);
    search.best = Some(best);
    search.on_hit = Some(Box::new(hit));
    search.descend(0);
}

fn guard(g: &SignedGraph, what: &str) -> Result<()> {
    if g.order() > CANON_MAX_N {
        return Err(Error::capability(format!("{what} is limited to order {CANON_MAX_N}")));
    }
    Ok(())
}

/// Canonical labeling of the underlying graph: a permutation
/// (`perm[k]` = original vertex at canonical position `k`) attaining the
/// canonical form of the underlying graph.
pub fn canonical_labeling(g: &SignedGraph) -> Result<Vec<usize>> {
    guard(g, "canonical labeling")?;
    if g.order() == 0 {
        return Ok(Vec::new());
    }
    let best = minimal_bits(g);
    let mut found: Option<Vec<usize>> = None;
    for_each_achiever(g, best, |perm| {
        if found.is_none() {
            found = Some(perm.to_vec());
        }
    });
    Ok(found.expect("no labeling attains the canonical form"))
}

fn relabel(g: &SignedGraph, perm: &[usize]) -> SignedGraph {
    let n = g.order();
    let mut inverse = vec![0usize; n];
    for (k, &v) in perm.iter().enumerate() {
        inverse[v] = k;
    }
    let edges: Vec<(usize, usize, Sign)> =
        g.edges().map(|(i, j, s)| (inverse[i], inverse[j], s)).collect();
    SignedGraph::new(n, &edges).expect("relabeling preserves validity")
}

/// Negative-edge bits of the canonical signature of `g`, in lexicographic
/// edge order, packed MSB-first.
fn signature_bits(canon_sig: &SignedGraph) -> Vec<u64> {
    let mut words = vec![0u64; canon_sig.size().div_ceil(64).max(1)];
    for (k, (_, _, s)) in canon_sig.edges().enumerate() {
        if s == Sign::Minus {
            words[k / 64] |= 1u64 << (63 - (k % 64));
        }
    }
    words
}

/// Canonical representative of the switching-isomorphism class of `g`: the
/// canonically labeled underlying graph carrying the minimal canonical
/// signature over all optimal labelings. Two signed graphs are switching
/// isomorphic iff their canonical representatives are equal.
pub fn canonical_signed(g: &SignedGraph) -> Result<SignedGraph> {
    guard(g, "canonical form")?;
    if g.order() == 0 {
        return Ok(g.clone());
    }
    let best = minimal_bits(g);
    let mut min_sig: Option<(Vec<u64>, SignedGraph)> = None;
    for_each_achiever(g, best, |perm| {
        let canon = relabel(g, perm).canonical_signature();
        let sig = signature_bits(&canon);
        let better = match &min_sig {
            None => true,
            Some((cur, _)) => sig < *cur,
        };
        if better {
            min_sig = Some((sig, canon));
        }
    });
    Ok(min_sig.expect("no labeling attains the canonical form").1)
}

/// True iff some relabeling of `g1` is switching equivalent to `g2`.
pub fn switching_isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> Result<bool> {
    if g1.order() != g2.order() {
        return Err(Error::domain("switching isomorphism requires equal orders"));
    }
    if g1.size() != g2.size() {
        return Ok(false);
    }
    Ok(canonical_signed(g1)? == canonical_signed(g2)?)
}
