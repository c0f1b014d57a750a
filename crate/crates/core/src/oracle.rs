//! Brute-force ground truth: explicit enumeration of every connected
//! induced subgraph of a tree. Exponential, so hard-guarded by size; the
//! counting DP in [`crate::census`] is checked against this.

use num_traits::Zero;
use thiserror::Error;

use crate::census::Count;
use crate::tree::Tree;

/// Subtree counts reach 2^(n-1) on stars; past this the enumeration is
/// refused rather than left to crawl.
pub const MAX_ORACLE_VERTICES: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("tree has {n} vertices; brute-force enumeration is limited to {max}")]
    TooLarge { n: usize, max: usize },
}

/// Calls `visit` once for every nonempty vertex set inducing a connected
/// subgraph, in increasing order of the set's minimum vertex. Each subtree
/// is anchored at its minimum vertex and grown using larger ids only, so
/// every set is produced exactly once.
pub fn for_each_subtree<F: FnMut(&[usize])>(
    tree: &Tree,
    mut visit: F,
) -> Result<(), OracleError> {
    let n = tree.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooLarge {
            n,
            max: MAX_ORACLE_VERTICES,
        });
    }
    let mut in_set = vec![false; n];
    let mut set = Vec::with_capacity(n);
    for anchor in 0..n {
        set.push(anchor);
        in_set[anchor] = true;
        let frontier: Vec<usize> = tree
            .neighbors(anchor)
            .iter()
            .copied()
            .filter(|&w| w > anchor)
            .collect();
        grow(tree, anchor, &mut set, frontier, &mut in_set, &mut visit);
        in_set[anchor] = false;
        set.pop();
    }
    Ok(())
}

fn grow<F: FnMut(&[usize])>(
    tree: &Tree,
    anchor: usize,
    set: &mut Vec<usize>,
    mut frontier: Vec<usize>,
    in_set: &mut [bool],
    visit: &mut F,
) {
    debug_assert!(is_connected_set(tree, set));
    visit(set);
    // each frontier vertex is either taken now (recursing) or excluded from
    // every later branch at this level, so no set repeats
    while let Some(u) = frontier.pop() {
        set.push(u);
        in_set[u] = true;
        let mut next = frontier.clone();
        for &w in tree.neighbors(u) {
            // in a tree a fresh neighbor of u cannot already touch the set,
            // so no dedup against `next` is needed
            if w > anchor && !in_set[w] {
                next.push(w);
            }
        }
        grow(tree, anchor, set, next, in_set, visit);
        in_set[u] = false;
        set.pop();
    }
}

fn is_connected_set(tree: &Tree, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let member: std::collections::HashSet<usize> = set.iter().copied().collect();
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![set[0]];
    seen.insert(set[0]);
    while let Some(v) = stack.pop() {
        for &w in tree.neighbors(v) {
            if member.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == set.len()
}

/// |{subtrees of T}| by explicit enumeration; the reference for F(T).
pub fn oracle_count(tree: &Tree) -> Result<Count, OracleError> {
    let mut total = Count::zero();
    for_each_subtree(tree, |_| total += 1u32)?;
    Ok(total)
}

/// Enumerated subtrees containing all of `required` and none of
/// `forbidden`; ground truth for f(v), f(u*v), and f(u/v).
pub fn oracle_count_filtered(
    tree: &Tree,
    required: &[usize],
    forbidden: &[usize],
) -> Result<Count, OracleError> {
    debug_assert!(required.iter().all(|r| !forbidden.contains(r)));
    let mut total = Count::zero();
    for_each_subtree(tree, |set| {
        if required.iter().all(|r| set.contains(r))
            && !forbidden.iter().any(|f| set.contains(f))
        {
            total += 1u32;
        }
    })?;
    Ok(total)
}
