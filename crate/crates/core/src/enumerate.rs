//! Exhaustive enumeration of small connected graphs, one representative per
//! isomorphism class. Used to compare the pruned solver against naive
//! references over a complete universe of inputs.

use std::collections::HashSet;

use crate::graph::Graph;

/// All connected graphs on n vertices up to isomorphism, in a fixed order.
/// Counts for n = 1..7: 1, 1, 2, 6, 21, 112, 853.
///
/// Graphs are grown edge by edge from the empty graph, keeping one canonical
/// edge mask (minimum under vertex relabeling) per class. Sized for n <= 7;
/// the permutation canonizer is factorial in n.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "enumeration is sized for 1 <= n <= 7");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let pair_count = pairs.len();
    let mut pair_index = vec![vec![0usize; n]; n];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        pair_index[i][j] = b;
        pair_index[j][i] = b;
    }
    // pair_maps[p][b] = image of edge slot b under permutation p
    let pair_maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|perm| {
            pairs
                .iter()
                .map(|&(i, j)| pair_index[perm[i]][perm[j]])
                .collect()
        })
        .collect();
    let canon = |mask: u64| -> u64 {
        let mut best = u64::MAX;
        for map in &pair_maps {
            let mut image = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                image |= 1 << map[b];
            }
            best = best.min(image);
        }
        best
    };

    let mut all: HashSet<u64> = HashSet::new();
    let mut level: HashSet<u64> = HashSet::new();
    level.insert(0);
    all.insert(0);
    for _ in 0..pair_count {
        let mut next = HashSet::new();
        for &mask in &level {
            for b in 0..pair_count {
                if mask >> b & 1 == 0 {
                    let c = canon(mask | 1 << b);
                    if all.insert(c) {
                        next.insert(c);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }

    let mut masks: Vec<u64> = all.into_iter().collect();
    masks.sort_unstable();
    masks
        .into_iter()
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("enumerated edges are in range")
        })
        .filter(Graph::is_connected)
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}
