//! Fixed-size machinery for the search hot loop (orders up to 8).
//!
//! An underlying graph is a bitmask over the `C(n,2)` vertex pairs in
//! lexicographic order. For each underlying graph we precompute its
//! triangles and small cliques as bitmasks, then walk the `2^(m-n+c)`
//! switching-class representatives in Gray-code order so that one edge sign
//! flips per step and the negative-triangle set updates in O(1).

use crate::sgraph::SignedGraph;

pub const SEARCH_MAX_N: usize = 8;

/// A signed graph small enough for the search loop; plain copyable rows.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SmallGraph {
    pub n: usize,
    pub adj: [u64; SEARCH_MAX_N],
    pub neg: [u64; SEARCH_MAX_N],
}

impl SmallGraph {
    pub fn to_signed(self) -> SignedGraph {
        SignedGraph::from_rows(
            self.n,
            self.adj[..self.n].to_vec(),
            self.neg[..self.n].to_vec(),
        )
    }

    /// Writes the signed adjacency into a row-major `n x n` prefix of `buf`.
    pub fn fill_adjacency(&self, buf: &mut [f64]) {
        let n = self.n;
        buf[..n * n].fill(0.0);
        for i in 0..n {
            let mut row = self.adj[i];
            while row != 0 {
                let j = row.trailing_zeros() as usize;
                row &= row - 1;
                buf[i * n + j] = if self.neg[i] >> j & 1 == 1 { -1.0 } else { 1.0 };
            }
        }
    }
}

/// Per-underlying-graph context: edges, triangles, cliques, and the co-tree
/// of the canonical BFS spanning forest.
pub struct UnderlyingCtx {
    pub adj: [u64; SEARCH_MAX_N],
    /// Edges in lexicographic order.
    pub edges: Vec<(usize, usize)>,
    /// Per-edge bitmask of the triangles containing it.
    pub edge_tri: Vec<u64>,
    /// Per-4-clique bitmask of its four triangles.
    pub k4_tri: Vec<u64>,
    /// Per-r-clique triangle bitmask (filled only for a KrFree family).
    pub kr_tri: Vec<u64>,
    /// Indices (into `edges`) of the co-tree edges of the canonical forest.
    pub cotree: Vec<usize>,
}

/// Decodes a pair bitmask into adjacency rows. Bit `pair_index(i,j)` set
/// means edge `{i,j}`.
pub fn rows_from_mask(n: usize, mask: u64) -> ([u64; SEARCH_MAX_N], usize) {
    let mut adj = [0u64; SEARCH_MAX_N];
    let mut k = 0;
    let mut m = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
                m += 1;
            }
            k += 1;
        }
    }
    (adj, m)
}

pub fn connected(n: usize, adj: &[u64; SEARCH_MAX_N]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut comp = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & !comp;
        }
        comp |= next;
        frontier = next;
    }
    comp.count_ones() as usize == n
}

impl UnderlyingCtx {
    /// `kr` requests r-clique triangle masks for the KrFree family.
    pub fn build(n: usize, mask: u64, kr: Option<usize>) -> UnderlyingCtx {
        let (adj, m) = rows_from_mask(n, mask);

        let mut edges = Vec::with_capacity(m);
        for (i, row) in adj.iter().enumerate().take(n) {
            for j in (i + 1)..n {
                if row >> j & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        let edge_index = |i: usize, j: usize| -> usize {
            edges.binary_search(&(i.min(j), i.max(j))).unwrap()
        };

        // Triangles in (i<j<k) order; each gets a bit, and each edge records
        // which triangles contain it.
        let mut edge_tri = vec![0u64; m];
        let mut tri_verts: Vec<(usize, usize, usize)> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if adj[i] >> j & 1 == 0 {
                    continue;
                }
                let mut common = adj[i] & adj[j] & !((1u64 << (j + 1)) - 1);
                while common != 0 {
                    let k = common.trailing_zeros() as usize;
                    common &= common - 1;
                    let t = tri_verts.len();
                    tri_verts.push((i, j, k));
                    edge_tri[edge_index(i, j)] |= 1 << t;
                    edge_tri[edge_index(i, k)] |= 1 << t;
                    edge_tri[edge_index(j, k)] |= 1 << t;
                }
            }
        }
        debug_assert!(tri_verts.len() <= 64);

        let tri_mask_of_clique = |verts: &[usize]| -> u64 {
            let mut mask = 0u64;
            for (t, &(a, b, c)) in tri_verts.iter().enumerate() {
                let mut inside = true;
                for v in [a, b, c] {
                    if !verts.contains(&v) {
                        inside = false;
                        break;
                    }
                }
                if inside {
                    mask |= 1 << t;
                }
            }
            mask
        };

        let k4_tri = cliques_of_size(n, &adj, 4)
            .into_iter()
            .map(|c| tri_mask_of_clique(&c))
            .collect();
        let kr_tri = match kr {
            Some(r) => cliques_of_size(n, &adj, r)
                .into_iter()
                .map(|c| tri_mask_of_clique(&c))
                .collect(),
            None => Vec::new(),
        };

        // Canonical BFS forest (smallest root, ascending neighbors); co-tree
        // edges carry the free signs of the class representatives.
        let mut in_tree = vec![false; m];
        let mut seen = 0u64;
        let mut components = 0;
        for root in 0..n {
            if seen >> root & 1 == 1 {
                continue;
            }
            components += 1;
            seen |= 1 << root;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let mut nbrs = adj[u] & !seen;
                while nbrs != 0 {
                    let w = nbrs.trailing_zeros() as usize;
                    nbrs &= nbrs - 1;
                    seen |= 1 << w;
                    in_tree[edge_index(u, w)] = true;
                    queue.push_back(w);
                }
            }
        }
        let cotree: Vec<usize> = (0..m).filter(|&e| !in_tree[e]).collect();
        debug_assert_eq!(cotree.len(), m + components - n);

        UnderlyingCtx { adj, edges, edge_tri, k4_tri, kr_tri, cotree }
    }

    pub fn class_count(&self) -> u64 {
        1u64 << self.cotree.len()
    }

    /// Walks every *unbalanced* switching-class representative (all nonzero
    /// co-tree sign assignments) in Gray-code order. The callback receives
    /// the negative rows and the negative-triangle bitmask.
    pub fn for_each_unbalanced_class<F: FnMut(&[u64; SEARCH_MAX_N], u64)>(&self, mut f: F) {
        let c = self.cotree.len();
        let mut neg = [0u64; SEARCH_MAX_N];
        let mut neg_tris = 0u64;
        for step in 1u64..(1u64 << c) {
            let bit = step.trailing_zeros() as usize;
            let e = self.cotree[bit];
            let (i, j) = self.edges[e];
            neg[i] ^= 1 << j;
            neg[j] ^= 1 << i;
            neg_tris ^= self.edge_tri[e];
            f(&neg, neg_tris);
        }
    }
}

/// All cliques of the given size as ascending vertex lists.
fn cliques_of_size(n: usize, adj: &[u64; SEARCH_MAX_N], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut stack: Vec<(Vec<usize>, u64)> = vec![(Vec::new(), full)];
    while let Some((current, cand)) = stack.pop() {
        if current.len() == size {
            out.push(current);
            continue;
        }
        if (cand.count_ones() as usize) < size - current.len() {
            continue;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let above = !((1u64 << v) | ((1u64 << v) - 1));
            let mut next = current.clone();
            next.push(v);
            stack.push((next, cand & adj[v] & above));
        }
    }
    out
}
