//! Definition-first reference implementations for cross-checking the
//! library. Deliberately unoptimized: no cover masks, no pruning, no
//! bounds. Everything reads the definitions off the public `Graph` API.

#![allow(dead_code)]

use coalitions::{DominationStyle, Graph};

/// Every vertex outside the set has a neighbor inside that dominates it
/// (degree condition only in the strong style).
pub fn dominates_by_definition(g: &Graph, set: &[usize], style: DominationStyle) -> bool {
    (0..g.n()).all(|x| {
        set.contains(&x)
            || set.iter().any(|&y| {
                g.has_edge(x, y) && (style == DominationStyle::Plain || g.degree(x) <= g.degree(y))
            })
    })
}

/// Checks the coalition-partition conditions directly on vertex lists.
pub fn partition_is_valid_by_definition(
    g: &Graph,
    blocks: &[Vec<usize>],
    style: DominationStyle,
) -> bool {
    let dominating: Vec<bool> = blocks
        .iter()
        .map(|b| dominates_by_definition(g, b, style))
        .collect();
    blocks.iter().enumerate().all(|(i, block)| {
        if dominating[i] {
            block.len() == 1 && g.degree(block[0]) == g.n() - 1
        } else {
            (0..blocks.len()).any(|j| {
                j != i && !dominating[j] && {
                    let mut union = block.clone();
                    union.extend_from_slice(&blocks[j]);
                    dominates_by_definition(g, &union, style)
                }
            })
        }
    })
}

/// Maximum coalition-partition size by enumerating every set partition of
/// the vertices and testing each against the definition. Zero when none is
/// valid.
pub fn max_coalition_partition_naive(g: &Graph, style: DominationStyle) -> usize {
    fn rec(
        g: &Graph,
        style: DominationStyle,
        v: usize,
        blocks: &mut Vec<Vec<usize>>,
        best: &mut usize,
    ) {
        if v == g.n() {
            if partition_is_valid_by_definition(g, blocks, style) {
                *best = (*best).max(blocks.len());
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            rec(g, style, v + 1, blocks, best);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        rec(g, style, v + 1, blocks, best);
        blocks.pop();
    }
    let mut best = 0;
    rec(g, style, 0, &mut Vec::new(), &mut best);
    best
}

/// Minimum dominating-set size over all 2^n subsets.
pub fn gamma_naive(g: &Graph, style: DominationStyle) -> usize {
    let n = g.n();
    assert!(n <= 16, "naive gamma is sized for tiny graphs");
    (0u32..1 << n)
        .filter(|mask| {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            dominates_by_definition(g, &set, style)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("the full vertex set dominates")
}

/// Number of dominating subsets over all 2^n subsets.
pub fn count_naive(g: &Graph, style: DominationStyle) -> u64 {
    let n = g.n();
    assert!(n <= 16, "naive count is sized for tiny graphs");
    (0u32..1 << n)
        .filter(|mask| {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            dominates_by_definition(g, &set, style)
        })
        .count() as u64
}

/// Maximum number of blocks in a partition into dominating sets, by full
/// partition enumeration.
pub fn domatic_naive(g: &Graph, style: DominationStyle) -> usize {
    fn rec(
        g: &Graph,
        style: DominationStyle,
        v: usize,
        blocks: &mut Vec<Vec<usize>>,
        best: &mut usize,
    ) {
        if v == g.n() {
            if blocks.iter().all(|b| dominates_by_definition(g, b, style)) {
                *best = (*best).max(blocks.len());
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            rec(g, style, v + 1, blocks, best);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        rec(g, style, v + 1, blocks, best);
        blocks.pop();
    }
    let mut best = 0;
    rec(g, style, 0, &mut Vec::new(), &mut best);
    best
}

/// Blocks of a library partition as plain vertex lists.
pub fn blocks_as_lists(p: &coalitions::Partition) -> Vec<Vec<usize>> {
    p.blocks().iter().map(|b| b.iter().collect()).collect()
}
