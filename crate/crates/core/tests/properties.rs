//! Structural invariants checked on random and exhaustive inputs:
//! canonical codes vs. brute-force isomorphism, surgery round trips,
//! serialization, the anchored-count identities on the named
//! constructions, and the agreement of the two tree-generation routes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subtrees_core::atlas;
use subtrees_core::census::{
    count_all_subtrees, count_at_all_vertices, count_containing_both,
    count_containing_excluding, Count,
};
use subtrees_core::certify::{enumerate_trees, enumerate_trees_prufer, extend_representatives, random_tree};
use subtrees_core::tree::{parse_tree, serialize_tree, Tree};

fn relabeled(t: &Tree, seed: u64) -> Tree {
    let n = t.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let edges: Vec<_> = t.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Tree::from_edges(n, &edges).expect("relabeling keeps a tree")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

fn brute_force_isomorphic(a: &Tree, b: &Tree) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let eb: std::collections::HashSet<(usize, usize)> = b.edges().into_iter().collect();
    let ea = a.edges();
    'perm: for perm in permutations(a.n()) {
        for &(u, v) in &ea {
            let (x, y) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            if !eb.contains(&(x, y)) {
                continue 'perm;
            }
        }
        return true;
    }
    false
}

#[test]
fn codes_agree_with_brute_force_isomorphism_up_to_7() {
    for n in 1..=7 {
        let reps = enumerate_trees(n).unwrap();
        for (i, a) in reps.iter().enumerate() {
            for b in reps.iter().skip(i) {
                let same_code = a.canonical_code() == b.canonical_code();
                assert_eq!(same_code, brute_force_isomorphic(a, b));
            }
            let shuffled = relabeled(a, 0xC0DE + i as u64);
            assert_eq!(a.canonical_code(), shuffled.canonical_code());
            assert!(brute_force_isomorphic(a, &shuffled));
        }
    }
}

#[test]
fn metrics_are_isomorphism_invariant() {
    for seed in 0..200u64 {
        let n = 2 + (seed as usize * 13) % 80;
        let t = random_tree(n, seed);
        let s = relabeled(&t, seed ^ 0xFACE);
        assert_eq!(t.canonical_code(), s.canonical_code());
        assert_eq!(t.leaf_count(), s.leaf_count());
        assert_eq!(t.diameter(), s.diameter());
        assert_eq!(t.bipartition_sizes(), s.bipartition_sizes());
        let degree_sum: usize = (0..n).map(|v| t.degree(v)).sum();
        assert_eq!(degree_sum, 2 * (n - 1));
    }
}

#[test]
fn transplant_round_trips_on_random_surgeries() {
    let mut done = 0;
    let mut seed = 0u64;
    while done < 200 {
        seed += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(3..40);
        let t = random_tree(n, seed ^ 0x7A57);
        let src = rng.gen_range(0..n);
        let branches: Vec<usize> = t
            .neighbors(src)
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let dst = rng.gen_range(0..n);
        let Ok(moved) = t.transplant(src, dst, &branches) else {
            continue;
        };
        assert_eq!(moved.n(), n);
        let back = moved.transplant(dst, src, &branches).unwrap();
        assert_eq!(back, t);
        done += 1;
    }
}

#[test]
fn moving_a_pendant_off_center_loses_subtrees() {
    // P_5 with an extra pendant on the middle vertex; pushing the pendant
    // one step toward the end strictly decreases the total count
    let base = Tree::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
    let moved = base.transplant(2, 1, &[5]).unwrap();
    assert!(count_all_subtrees(&moved) < count_all_subtrees(&base));
}

#[test]
fn serialization_round_trips_on_random_trees() {
    for seed in 0..200u64 {
        let n = 1 + (seed as usize * 11) % 120;
        let t = random_tree(n, seed ^ 0x5E71);
        let text = serialize_tree(&t);
        let back = parse_tree(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(serialize_tree(&back), text);
    }
}

#[test]
fn six_vertex_classes_have_six_distinct_codes() {
    let reps = enumerate_trees(6).unwrap();
    let codes: std::collections::BTreeSet<_> =
        reps.iter().map(Tree::canonical_code).collect();
    assert_eq!(codes.len(), 6);
}

#[test]
fn generation_routes_agree_up_to_9() {
    // classical unlabeled tree counts
    let expect = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
    for n in 1..=9usize {
        let swept = enumerate_trees_prufer(n).unwrap();
        assert_eq!(swept.len(), expect[n - 1], "prufer route at n = {n}");
        if n > 1 {
            let extended = extend_representatives(&enumerate_trees(n - 1).unwrap());
            let a: Vec<_> = swept.iter().map(Tree::canonical_code).collect();
            let b: Vec<_> = extended.iter().map(Tree::canonical_code).collect();
            assert_eq!(a, b, "independent generation routes differ at n = {n}");
        }
    }
}

#[test]
fn broom_endpoint_identities() {
    // on P_m(a,b): both spine ends force the spine, each pendant is free;
    // one end excluded leaves 2^a sub-brooms times m-1 spine prefixes
    for (m, a, b) in [(2usize, 1usize, 2usize), (3, 1, 2), (4, 2, 2), (5, 3, 1), (6, 2, 4)] {
        let broom = atlas::double_broom(m, a, b).unwrap();
        let start = broom.landmarks["spine_start"];
        let end = broom.landmarks["spine_end"];
        assert_eq!(
            count_containing_both(&broom.tree, start, end),
            Count::from(1u32) << (a + b)
        );
        assert_eq!(
            count_containing_excluding(&broom.tree, start, end),
            (Count::from(1u32) << a) * Count::from((m - 1) as u64)
        );
        assert_eq!(
            count_containing_excluding(&broom.tree, end, start),
            (Count::from(1u32) << b) * Count::from((m - 1) as u64)
        );
    }
}

#[test]
fn double_star_hub_identities() {
    for (p, q) in [(2usize, 3usize), (3, 3), (2, 5), (4, 6)] {
        let n = p + q;
        let d = atlas::double_star(p, q).unwrap();
        let (u, v) = (d.landmarks["hub_u"], d.landmarks["hub_v"]);
        assert_eq!(
            count_containing_both(&d.tree, u, v),
            Count::from(1u32) << (n - 2)
        );
        assert_eq!(
            count_containing_excluding(&d.tree, u, v),
            Count::from(1u32) << (p - 1)
        );
        assert_eq!(
            count_containing_excluding(&d.tree, v, u),
            Count::from(1u32) << (q - 1)
        );
    }
}

#[test]
fn leaf_exclusion_counts_one() {
    for seed in 0..50u64 {
        let n = 2 + (seed as usize) % 30;
        let t = random_tree(n, seed ^ 0x1EAF);
        for u in 0..n {
            if t.degree(u) == 1 {
                let v = t.neighbors(u)[0];
                assert_eq!(count_containing_excluding(&t, u, v), Count::from(1u32));
            }
        }
    }
}

#[test]
fn profile_matches_anchored_counts_on_random_trees() {
    for seed in 0..60u64 {
        let n = 2 + (seed as usize * 7) % 200;
        let t = random_tree(n, seed ^ 0x0F11E);
        let profile = count_at_all_vertices(&t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..5 {
            let v = rng.gen_range(0..n);
            assert_eq!(profile[v], subtrees_core::census::count_at_vertex(&t, v));
        }
    }
}
