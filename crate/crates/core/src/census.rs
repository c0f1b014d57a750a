//! Exact subtree counting: the total count F(T), vertex-anchored counts
//! f(v), pair counts f(u*v), exclusion counts f(u/v), and the Wiener index.
//!
//! Everything is linear-time tree DP over arbitrary-precision integers; the
//! all-vertices profile uses one down-pass plus a rerooting up-pass built
//! from prefix/suffix products (no bigint division anywhere).

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::tree::Tree;

/// Exact nonnegative count. Subtree counts grow like 2^(n-2), so this is
/// arbitrary precision throughout.
pub type Count = BigUint;

/// Entry v holds the number of subtrees containing v.
pub type VertexProfile = Vec<Count>;

/// Preorder (parents before children) and the parent array for a rooting.
fn rooted_order(tree: &Tree, root: usize) -> (Vec<usize>, Vec<usize>) {
    let n = tree.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in tree.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    (order, parent)
}

/// g[v] = number of subtrees of the subtree rooted at v that contain v,
/// for the rooting given by (order, parent): g[v] = prod over children c
/// of (1 + g[c]).
fn down_counts(order: &[usize], parent: &[usize]) -> Vec<Count> {
    let mut g = vec![Count::one(); order.len()];
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX {
            let factor = &g[v] + 1u32;
            g[p] *= factor;
        }
    }
    g
}

/// F(T): the number of nonempty connected induced subgraphs. Partitioning
/// subtrees by their vertex closest to the root gives F = sum of g[v].
pub fn count_all_subtrees(tree: &Tree) -> Count {
    let (order, parent) = rooted_order(tree, 0);
    down_counts(&order, &parent).into_iter().sum()
}

/// Disjoint forests add.
pub fn count_forest(components: &[Tree]) -> Count {
    components.iter().map(count_all_subtrees).sum()
}

/// f(v): subtrees containing v. Rooting at v makes this the product of
/// (1 + g[c]) over v's children, i.e. g[v] itself.
pub fn count_at_vertex(tree: &Tree, v: usize) -> Count {
    assert!(v < tree.n());
    let (order, parent) = rooted_order(tree, v);
    let mut g = down_counts(&order, &parent);
    std::mem::take(&mut g[v])
}

/// The whole profile f(v) for all v in one down-pass and one rerooting
/// up-pass. up[v] counts the subtrees of the component above v that contain
/// v's parent; then f(v) = g[v] * (1 + up[v]). The exclusive sibling
/// products come from prefix/suffix arrays, never from division.
pub fn count_at_all_vertices(tree: &Tree) -> VertexProfile {
    let n = tree.n();
    if n == 1 {
        return vec![Count::one()];
    }
    let (order, parent) = rooted_order(tree, 0);
    let mut g = down_counts(&order, &parent);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in &order {
        if parent[v] != usize::MAX {
            children[parent[v]].push(v);
        }
    }
    let mut up = vec![Count::zero(); n];
    let mut profile = vec![Count::zero(); n];
    for &v in &order {
        let up1 = std::mem::take(&mut up[v]) + 1u32;
        profile[v] = &g[v] * &up1;
        let kids = &children[v];
        if !kids.is_empty() {
            let vals: Vec<Count> = kids.iter().map(|&c| &g[c] + 1u32).collect();
            let mut prefix = Vec::with_capacity(vals.len() + 1);
            prefix.push(Count::one());
            for val in &vals {
                let last = prefix.last().expect("nonempty");
                prefix.push(last * val);
            }
            let mut suffix = vec![Count::one(); vals.len() + 1];
            for i in (0..vals.len()).rev() {
                suffix[i] = &suffix[i + 1] * &vals[i];
            }
            for (i, &c) in kids.iter().enumerate() {
                up[c] = &prefix[i] * &suffix[i + 1] * &up1;
            }
        }
        g[v] = Count::zero(); // parent pass is done with it; release the bits
    }
    profile
}

/// f(u*v): subtrees containing both u and v. Every such subtree contains
/// the whole u-v path, so contract the path to one vertex and count there.
pub fn count_containing_both(tree: &Tree, u: usize, v: usize) -> Count {
    assert!(u != v && u < tree.n() && v < tree.n());
    let path = tree.path_between(u, v);
    let n = tree.n();
    let mut on_path = vec![false; n];
    for &x in &path {
        on_path[x] = true;
    }
    // merged path vertex becomes 0, the others follow in id order
    let mut map = vec![0usize; n];
    let mut next = 1;
    for x in 0..n {
        if !on_path[x] {
            map[x] = next;
            next += 1;
        }
    }
    let mut edges = Vec::with_capacity(n - path.len());
    for (a, b) in tree.edges() {
        if on_path[a] && on_path[b] {
            continue;
        }
        edges.push((map[a], map[b]));
    }
    let contracted = Tree::from_edges(n - path.len() + 1, &edges)
        .expect("contracting a path in a tree yields a tree");
    count_at_vertex(&contracted, 0)
}

/// f(u/v): subtrees containing u but not v. These are exactly the subtrees
/// of the component of T - v that contains u.
pub fn count_containing_excluding(tree: &Tree, u: usize, v: usize) -> Count {
    assert!(u != v && u < tree.n() && v < tree.n());
    let n = tree.n();
    let mut comp = vec![false; n];
    comp[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &w in tree.neighbors(x) {
            if w != v && !comp[w] {
                comp[w] = true;
                stack.push(w);
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if comp[x] {
            map[x] = next;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for (a, b) in tree.edges() {
        if comp[a] && comp[b] {
            edges.push((map[a], map[b]));
        }
    }
    let sub = Tree::from_edges(next, &edges).expect("component of a tree is a tree");
    count_at_vertex(&sub, map[u])
}

/// W(T): the sum of distances over unordered vertex pairs, computed as the
/// sum over edges of s * (n - s) with s the size of one side.
pub fn wiener_index(tree: &Tree) -> Count {
    let n = tree.n();
    let (order, parent) = rooted_order(tree, 0);
    let mut size = vec![1u64; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let mut total = Count::zero();
    for &v in &order {
        if parent[v] != usize::MAX {
            total += Count::from(size[v]) * Count::from(n as u64 - size[v]);
        }
    }
    total
}
