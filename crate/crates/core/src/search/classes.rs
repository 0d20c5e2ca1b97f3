//! Switching-class enumeration for arbitrary (small) signed graphs.

use crate::error::{Error, Result};
use crate::sgraph::{Sign, SignedGraph};

/// Guard on the number of classes materialized at once.
const MAX_COTREE: usize = 24;

/// One representative per switching class of signatures of the underlying
/// graph of `g` (input signs are ignored): the canonical BFS spanning forest
/// is all-positive and the `2^(m-n+c)` co-tree sign assignments are
/// enumerated in ascending binary order. Every representative equals its own
/// canonical signature, the all-positive one comes first, and every other
/// one is unbalanced.
pub fn enumerate_switching_classes(g: &SignedGraph) -> Result<Vec<SignedGraph>> {
    let underlying = g.underlying();
    let n = underlying.order();

    // Canonical BFS forest: smallest unvisited root, neighbors ascending.
    let mut in_tree = std::collections::HashSet::new();
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in underlying.neighbors(u)?.iter() {
                if !seen[w] {
                    seen[w] = true;
                    in_tree.insert((u.min(w), u.max(w)));
                    queue.push_back(w);
                }
            }
        }
    }
    let edges: Vec<(usize, usize)> = underlying.edges().map(|(i, j, _)| (i, j)).collect();
    let cotree: Vec<usize> = (0..edges.len())
        .filter(|&e| !in_tree.contains(&edges[e]))
        .collect();
    if cotree.len() > MAX_COTREE {
        return Err(Error::capability(format!(
            "switching-class enumeration is limited to {MAX_COTREE} co-tree edges (got {})",
            cotree.len()
        )));
    }
    let mut out = Vec::with_capacity(1usize << cotree.len());
    for assignment in 0u64..(1u64 << cotree.len()) {
        let signed_edges: Vec<(usize, usize, Sign)> = edges
            .iter()
            .enumerate()
            .map(|(e, &(i, j))| {
                let s = match cotree.binary_search(&e) {
                    Ok(bit) if assignment >> bit & 1 == 1 => Sign::Minus,
                    _ => Sign::Plus,
                };
                (i, j, s)
            })
            .collect();
        out.push(SignedGraph::new(n, &signed_edges)?);
    }
    Ok(out)
}
