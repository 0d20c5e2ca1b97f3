//! Detection and counting of forbidden signed substructures: unbalanced
//! cliques and cycles, the unbalanced-K4 count behind the `tK4`-freeness
//! test, and the balanced clique number.
//!
//! Cliques are identified by their vertex sets; since a clique uses all of
//! its edges, the subgraph and induced-subgraph readings coincide here.
//! Cycle containment (`C_k`) is the plain subgraph reading: any `k` distinct
//! vertices carrying a cycle, chords permitted. Everything in this module is
//! switching-invariant, because cycle signs are.

use crate::error::{Error, Result};
use crate::sgraph::{SignedGraph, VertexSet};

/// All vertex sets of the given size inducing a complete underlying
/// subgraph, in lexicographic order.
pub fn enumerate_cliques(g: &SignedGraph, size: usize) -> Result<Vec<VertexSet>> {
    if size < 1 || size > g.order() {
        return Err(Error::domain(format!(
            "clique size {size} out of range 1..={}",
            g.order()
        )));
    }
    let mut out = Vec::new();
    let full = VertexSet::full(g.order()).mask();
    // current: chosen vertices; cand: vertices larger than the last chosen
    // and adjacent to all chosen.
    fn extend(
        g: &SignedGraph,
        size: usize,
        current: u64,
        count: usize,
        cand: u64,
        out: &mut Vec<VertexSet>,
    ) {
        if count == size {
            out.push(VertexSet::from_mask(current));
            return;
        }
        // Not enough candidates left to reach the target size.
        if (cand.count_ones() as usize) < size - count {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let above = !((1u64 << v) | ((1u64 << v) - 1));
            extend(g, size, current | (1u64 << v), count + 1, cand & g.adj_row(v) & above, out);
        }
    }
    extend(g, size, 0, 0, full, &mut out);
    Ok(out)
}

/// True iff `s` induces a complete *unbalanced* signed subgraph; errors when
/// `s` is not a clique. For complete signed graphs, unbalanced is equivalent
/// to having a negative triangle.
pub fn is_unbalanced_clique(g: &SignedGraph, s: VertexSet) -> Result<bool> {
    if !g.is_clique(s) {
        return Err(Error::domain(format!("{s} does not induce a complete subgraph")));
    }
    Ok(!g.induced_subgraph(s)?.is_balanced())
}

fn clique_has_negative_triangle(g: &SignedGraph, s: VertexSet) -> bool {
    let verts: Vec<usize> = s.iter().collect();
    for (a, &i) in verts.iter().enumerate() {
        for (b, &j) in verts.iter().enumerate().skip(a + 1) {
            for &k in verts.iter().skip(b + 1) {
                let parity = (g.neg_row(i) >> j & 1) ^ (g.neg_row(i) >> k & 1)
                    ^ (g.neg_row(j) >> k & 1);
                if parity == 1 {
                    return true;
                }
            }
        }
    }
    false
}

/// Number of 4-vertex sets inducing a complete unbalanced signed subgraph,
/// counting stops early once it exceeds `cap`.
pub fn count_unbalanced_k4_capped(g: &SignedGraph, cap: u64) -> u64 {
    let mut count = 0;
    let full = VertexSet::full(g.order()).mask();
    let mut stack = vec![(0u64, 0usize, full)];
    while let Some((current, size, cand)) = stack.pop() {
        if size == 4 {
            if clique_has_negative_triangle(g, VertexSet::from_mask(current)) {
                count += 1;
                if count > cap {
                    return count;
                }
            }
            continue;
        }
        if (cand.count_ones() as usize) < 4 - size {
            continue;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let above = !((1u64 << v) | ((1u64 << v) - 1));
            stack.push((current | (1u64 << v), size + 1, cand & g.adj_row(v) & above));
        }
    }
    count
}

/// Number of unbalanced 4-cliques (distinct vertex sets).
pub fn count_unbalanced_k4(g: &SignedGraph) -> u64 {
    count_unbalanced_k4_capped(g, u64::MAX - 1)
}

/// `tK4`-freeness: fewer than `t` distinct unbalanced 4-cliques.
pub fn is_tk4_free(g: &SignedGraph, t: u64) -> Result<bool> {
    if t < 1 {
        return Err(Error::domain("tK4-freeness requires t >= 1"));
    }
    Ok(count_unbalanced_k4_capped(g, t - 1) < t)
}

/// True iff some `r`-vertex set induces a complete unbalanced subgraph.
pub fn contains_unbalanced_kr(g: &SignedGraph, r: usize) -> Result<bool> {
    if r < 3 {
        return Err(Error::domain("unbalanced cliques require r >= 3"));
    }
    if r > g.order() {
        return Ok(false);
    }
    Ok(enumerate_cliques(g, r)?
        .into_iter()
        .any(|s| clique_has_negative_triangle(g, s)))
}

/// True iff `g` has a `k`-cycle subgraph with negative sign product.
pub fn contains_unbalanced_ck(g: &SignedGraph, k: usize) -> Result<bool> {
    if k < 3 {
        return Err(Error::domain("cycles require k >= 3"));
    }
    let n = g.order();
    if k > n {
        return Ok(false);
    }
    // DFS over simple paths anchored at the cycle's smallest vertex; each
    // cycle is visited once by requiring the second path vertex to be below
    // the closing vertex (this kills the reversed traversal).
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &SignedGraph,
        start: usize,
        second: usize,
        last: usize,
        visited: u64,
        len: usize,
        k: usize,
        negatives: u32,
    ) -> bool {
        if len == k {
            if g.has_edge(last, start) {
                let closing = (g.neg_row(last) >> start) & 1;
                if (negatives + closing as u32) % 2 == 1 {
                    return true;
                }
            }
            return false;
        }
        let mut cand = g.adj_row(last) & !visited & !((1u64 << start) - 1) & !(1u64 << start);
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if len == k - 1 && w < second {
                continue;
            }
            let second = if len == 1 { w } else { second };
            let neg = ((g.neg_row(last) >> w) & 1) as u32;
            if dfs(g, start, second, w, visited | (1u64 << w), len + 1, k, negatives + neg) {
                return true;
            }
        }
        false
    }
    for start in 0..n {
        if dfs(g, start, usize::MAX, start, 1u64 << start, 1, k, 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Order of the largest clique whose induced signed subgraph is balanced;
/// at least 1 (a single vertex), at least 2 when any edge exists.
/// Balanced cliques of size <= 2 carry no triangle; larger cliques are
/// balanced iff they contain no negative triangle.
pub fn balanced_clique_number(g: &SignedGraph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    for size in (1..=g.order()).rev() {
        let mut found = false;
        let full = VertexSet::full(g.order()).mask();
        let mut stack = vec![(0u64, 0usize, full)];
        while let Some((current, cnt, cand)) = stack.pop() {
            if cnt == size {
                if !clique_has_negative_triangle(g, VertexSet::from_mask(current)) {
                    // Balanced cliques of size <= 2 have no triangle at all;
                    // larger ones are balanced iff no negative triangle.
                    found = true;
                    break;
                }
                continue;
            }
            if (cand.count_ones() as usize) < size - cnt {
                continue;
            }
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let above = !((1u64 << v) | ((1u64 << v) - 1));
                stack.push((current | (1u64 << v), cnt + 1, cand & g.adj_row(v) & above));
            }
        }
        if found {
            return size;
        }
    }
    unreachable!("size 1 always yields a balanced clique");
}
