//! Core signed-graph model: storage, switching, balance, negation, canonical
//! signatures, and the `sg6` text format.
//!
//! Vertices are 0-indexed; a graph of order `n` lives on `0..n`. Values are
//! immutable after construction, so every operation returns a new graph and
//! everything here is safe to call concurrently.

mod canon;
mod sg6;

pub use canon::{canonical_labeling, canonical_signed, switching_isomorphic};
pub use sg6::{decode_sg6, encode_sg6, read_sg6_lines};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::MAX_N;
use std::fmt;

/// Edge sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    #[inline]
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    #[inline]
    pub fn int_value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Subset of `0..n` backed by a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_N);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1u64 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    /// Ascending iterator over members.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A signed graph: an undirected graph on `0..n` with `{+1,-1}` edge signs.
///
/// Stored as per-vertex adjacency masks plus per-vertex negative-edge masks
/// (a subset of the adjacency). The order cap is [`MAX_N`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<u64>,
    neg: Vec<u64>,
    m: usize,
}

impl SignedGraph {
    /// Edgeless graph on `n` vertices (`n` may be 0).
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::capability(format!("order {n} exceeds the cap of {MAX_N}")));
        }
        Ok(SignedGraph { n, adj: vec![0; n], neg: vec![0; n], m: 0 })
    }

    /// Builds a graph from a signed edge list. Rejects self-loops,
    /// out-of-range endpoints, and duplicate pairs.
    pub fn new(n: usize, edges: &[(usize, usize, Sign)]) -> Result<Self> {
        let mut g = SignedGraph::empty(n)?;
        for &(i, j, s) in edges {
            g.add_edge(i, j, s)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, i: usize, j: usize, s: Sign) -> Result<()> {
        if i == j {
            return Err(Error::domain(format!("self-loop at vertex {i}")));
        }
        if i >= self.n || j >= self.n {
            return Err(Error::domain(format!(
                "edge ({i},{j}) out of range for order {}",
                self.n
            )));
        }
        if self.adj[i] & (1u64 << j) != 0 {
            return Err(Error::domain(format!("duplicate edge ({i},{j})")));
        }
        self.adj[i] |= 1u64 << j;
        self.adj[j] |= 1u64 << i;
        if s == Sign::Minus {
            self.neg[i] |= 1u64 << j;
            self.neg[j] |= 1u64 << i;
        }
        self.m += 1;
        Ok(())
    }

    /// Internal fast path: build from adjacency/negative row masks.
    /// `neg` rows must be symmetric subsets of `adj`.
    pub(crate) fn from_rows(n: usize, adj: Vec<u64>, neg: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        debug_assert_eq!(neg.len(), n);
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        SignedGraph { n, adj, neg, m }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.adj[i] & (1u64 << j) != 0
    }

    /// Sign of edge `{i,j}`, or `None` when the pair is not an edge.
    #[inline]
    pub fn sign(&self, i: usize, j: usize) -> Option<Sign> {
        if !self.has_edge(i, j) {
            None
        } else if self.neg[i] & (1u64 << j) != 0 {
            Some(Sign::Minus)
        } else {
            Some(Sign::Plus)
        }
    }

    pub(crate) fn adj_row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn neg_row(&self, v: usize) -> u64 {
        self.neg[v]
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n {
            return Err(Error::domain(format!("vertex {v} out of range for order {}", self.n)));
        }
        Ok(VertexSet(self.adj[v]))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn negative_edge_count(&self) -> usize {
        self.neg.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic `(i,j)`, `i < j` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        (0..self.n).flat_map(move |i| {
            VertexSet(self.adj[i] & !((1u64 << i) | ((1u64 << i) - 1)))
                .iter()
                .map(move |j| (i, j, self.sign(i, j).unwrap()))
        })
    }

    /// Signed adjacency matrix: entry `(i,j)` is the sign of edge `{i,j}`,
    /// or 0 when absent; symmetric with zero diagonal.
    pub fn adjacency_matrix(&self) -> SquareMatrix {
        let mut a = SquareMatrix::zeros(self.n);
        for (i, j, s) in self.edges() {
            a.set(i, j, s.value());
            a.set(j, i, s.value());
        }
        a
    }

    /// Switching at `u`: flips the sign of every edge with exactly one
    /// endpoint in `u`. The empty and the full set act as the identity.
    pub fn switch(&self, u: VertexSet) -> SignedGraph {
        let mut neg = self.neg.clone();
        for (i, row) in neg.iter_mut().enumerate() {
            let flip_row = if u.contains(i) { !u.mask() } else { u.mask() };
            *row = (*row ^ flip_row) & self.adj[i];
        }
        SignedGraph { n: self.n, adj: self.adj.clone(), neg, m: self.m }
    }

    /// Negation: every edge sign flipped.
    pub fn negate(&self) -> SignedGraph {
        let neg = (0..self.n).map(|i| self.adj[i] & !self.neg[i]).collect();
        SignedGraph { n: self.n, adj: self.adj.clone(), neg, m: self.m }
    }

    /// Subgraph induced by `s`, vertices relabeled `0..|s|` preserving order,
    /// signs inherited. The empty set yields the 0-vertex graph.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<SignedGraph> {
        if !s.is_subset_of(VertexSet::full(self.n)) {
            return Err(Error::domain("induced set contains out-of-range vertices"));
        }
        let verts: Vec<usize> = s.iter().collect();
        let k = verts.len();
        let mut adj = vec![0u64; k];
        let mut neg = vec![0u64; k];
        for (a, &va) in verts.iter().enumerate() {
            for (b, &vb) in verts.iter().enumerate().skip(a + 1) {
                if self.has_edge(va, vb) {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                    if self.sign(va, vb) == Some(Sign::Minus) {
                        neg[a] |= 1 << b;
                        neg[b] |= 1 << a;
                    }
                }
            }
        }
        Ok(SignedGraph::from_rows(k, adj, neg))
    }

    /// True when `s` induces a complete underlying subgraph.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        for v in s.iter() {
            if v >= self.n {
                return false;
            }
            let others = s.mask() & !(1u64 << v);
            if self.adj[v] & others != others {
                return false;
            }
        }
        true
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & (1u64 << v) != 0 {
                continue;
            }
            let mut comp = 1u64 << v;
            let mut frontier = 1u64 << v;
            while frontier != 0 {
                let mut next = 0u64;
                for w in VertexSet(frontier).iter() {
                    next |= self.adj[w] & !comp;
                }
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Same labeled underlying graph (ignoring signs).
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    /// All-positive copy of the underlying graph.
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph { n: self.n, adj: self.adj.clone(), neg: vec![0; self.n], m: self.m }
    }

    /// Per-component vertex factors `d` in `{+1,-1}` from a BFS spanning
    /// forest (smallest-index root, neighbors in increasing order), chosen so
    /// that every tree edge `uv` satisfies `sign(uv) * d_u * d_v = +1`.
    ///
    /// Switching at `{v : d_v = -1}` therefore makes the forest all-positive;
    /// this is the canonical switching used throughout.
    fn forest_factors(&self) -> Vec<i8> {
        let mut d = vec![0i8; self.n];
        for v in 0..self.n {
            if d[v] != 0 {
                continue;
            }
            d[v] = 1;
            let mut queue = std::collections::VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                for w in VertexSet(self.adj[u]).iter() {
                    if d[w] == 0 {
                        let s = if self.neg[u] & (1u64 << w) != 0 { -1 } else { 1 };
                        d[w] = d[u] * s;
                        queue.push_back(w);
                    }
                }
            }
        }
        d
    }

    /// Balance test: true iff every cycle has an even number of negative
    /// edges, i.e. iff the graph switches to the all-positive signature.
    pub fn is_balanced(&self) -> bool {
        let d = self.forest_factors();
        self.edges().all(|(i, j, s)| s.int_value() == d[i] * d[j])
    }

    /// The switching set that produces [`SignedGraph::canonical_signature`].
    pub fn canonical_switching(&self) -> VertexSet {
        let d = self.forest_factors();
        (0..self.n).filter(|&v| d[v] == -1).collect()
    }

    /// The unique switching-equivalent signature in which the canonical BFS
    /// spanning forest is all-positive. Constant on switching classes; equal
    /// signatures characterize switching equivalence.
    pub fn canonical_signature(&self) -> SignedGraph {
        self.switch(self.canonical_switching())
    }

    /// Switching equivalence of two signatures of the same labeled graph.
    pub fn switching_equivalent(&self, other: &SignedGraph) -> Result<bool> {
        if !self.same_underlying(other) {
            return Err(Error::domain(
                "switching equivalence requires identical labeled underlying graphs",
            ));
        }
        Ok(self.canonical_signature() == other.canonical_signature())
    }

    /// Sign product along a closed walk given as a vertex sequence; the
    /// closing edge `(last, first)` is included.
    pub fn cycle_sign(&self, cycle: &[usize]) -> Result<Sign> {
        if cycle.len() < 3 {
            return Err(Error::domain("cycle must list at least 3 vertices"));
        }
        let mut product = Sign::Plus;
        for k in 0..cycle.len() {
            let i = cycle[k];
            let j = cycle[(k + 1) % cycle.len()];
            match self.sign(i, j) {
                Some(s) => product = product * s,
                None => {
                    return Err(Error::domain(format!("({i},{j}) is not an edge of the graph")))
                }
            }
        }
        Ok(product)
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}, edges=[", self.n)?;
        for (k, (i, j, s)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let c = if s == Sign::Minus { '-' } else { '+' };
            write!(f, "({i},{j}){c}")?;
        }
        write!(f, "])")
    }
}
