//! Domination predicates and the exact invariants built on them: domination
//! number, enumeration of minimum dominating sets, dominating-set counting,
//! and the domatic number.
//!
//! Everything is parametric in the domination style. In the strong style a
//! vertex y dominates a neighbor x only when deg(x) <= deg(y); the plain
//! style has no degree condition.

use std::fmt;
use std::str::FromStr;

use crate::coalition::{Partition, DEFAULT_EXACT_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DominationStyle {
    Plain,
    Strong,
}

impl DominationStyle {
    pub fn as_str(self) -> &'static str {
        match self {
            DominationStyle::Plain => "plain",
            DominationStyle::Strong => "strong",
        }
    }
}

impl fmt::Display for DominationStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DominationStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<DominationStyle> {
        match s {
            "plain" => Ok(DominationStyle::Plain),
            "strong" => Ok(DominationStyle::Strong),
            other => Err(Error::InvalidParameter(format!(
                "unknown domination style \"{other}\" (expected \"plain\" or \"strong\")"
            ))),
        }
    }
}

/// Per-vertex cover masks: `cover(v)` is v itself plus the neighbors v
/// dominates under the style. A set S dominates exactly when the union of
/// its members' masks is the whole vertex set, so block unions can be
/// maintained incrementally during search.
pub(crate) struct CoverTable {
    pub(crate) covers: Vec<VertexSet>,
    n: usize,
}

impl CoverTable {
    pub(crate) fn new(g: &Graph, style: DominationStyle) -> CoverTable {
        let n = g.n();
        let covers = (0..n)
            .map(|v| {
                let mut mask = VertexSet::singleton(n, v);
                for x in g.neighbors(v).iter() {
                    if style == DominationStyle::Plain || g.degree(x) <= g.degree(v) {
                        mask.insert(x);
                    }
                }
                mask
            })
            .collect();
        CoverTable { covers, n }
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn union_of(&self, s: &VertexSet) -> VertexSet {
        let mut cov = VertexSet::empty(self.n);
        for v in s.iter() {
            cov.union_with(&self.covers[v]);
        }
        cov
    }

    pub(crate) fn dominates(&self, s: &VertexSet) -> bool {
        self.union_of(s).is_full()
    }

    pub(crate) fn union_dominates(&self, a: &VertexSet, b: &VertexSet) -> bool {
        self.union_of(a).union_is_full(&self.union_of(b))
    }
}

/// True when `s` dominates the graph under the style: every vertex outside
/// `s` has a neighbor in `s` that dominates it.
pub fn is_dominating(g: &Graph, s: &VertexSet, style: DominationStyle) -> bool {
    assert_eq!(
        s.universe(),
        g.n(),
        "set universe must match the graph order"
    );
    CoverTable::new(g, style).dominates(s)
}

/// The domination number: minimum cardinality of a dominating set. `V`
/// always dominates, so this is total.
pub fn gamma(g: &Graph, style: DominationStyle) -> usize {
    let ct = CoverTable::new(g, style);
    let coverers = coverer_table(&ct);
    let mut chosen_cov = VertexSet::empty(g.n());
    for k in 1..=g.n() {
        if cover_search(&ct, &coverers, &mut chosen_cov, k) {
            return k;
        }
    }
    g.n()
}

/// `coverers[x]` = vertices whose cover mask includes x, i.e. the candidates
/// any dominating set must intersect for x.
fn coverer_table(ct: &CoverTable) -> Vec<VertexSet> {
    let n = ct.n;
    (0..n)
        .map(|x| VertexSet::from_vertices(n, (0..n).filter(|&y| ct.covers[y].contains(x))))
        .collect()
}

/// Depth-limited branch on an uncovered vertex with the fewest coverers.
fn cover_search(
    ct: &CoverTable,
    coverers: &[VertexSet],
    cov: &mut VertexSet,
    budget: usize,
) -> bool {
    if cov.is_full() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let x = (0..ct.n)
        .filter(|&x| !cov.contains(x))
        .min_by_key(|&x| coverers[x].len())
        .unwrap();
    let snapshot = cov.clone();
    for y in coverers[x].iter() {
        cov.union_with(&ct.covers[y]);
        if cover_search(ct, coverers, cov, budget - 1) {
            return true;
        }
        cov.copy_from(&snapshot);
    }
    false
}

/// All dominating sets of minimum cardinality, in ascending numeric order of
/// their bit vectors (vertex 1 in the lowest bit).
pub fn enumerate_min_cardinality_sds(g: &Graph, style: DominationStyle) -> Vec<VertexSet> {
    let n = g.n();
    let k = gamma(g, style);
    let ct = CoverTable::new(g, style);
    let mut out = Vec::new();
    let mut picked = Vec::with_capacity(k);
    // Chooses the largest member first, ascending, so complete sets appear in
    // ascending numeric order overall.
    fn rec(
        ct: &CoverTable,
        bound: usize,
        k: usize,
        picked: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        if k == 0 {
            let set = VertexSet::from_vertices(ct.n(), picked.iter().copied());
            if ct.dominates(&set) {
                out.push(set);
            }
            return;
        }
        for h in (k - 1)..bound {
            picked.push(h);
            rec(ct, h, k - 1, picked, out);
            picked.pop();
        }
    }
    rec(&ct, n, k, &mut picked, &mut out);
    out
}

/// Counts all dominating sets (the full vertex set counts). Exhaustive over
/// 2^n subsets, so the order is gated by [`DEFAULT_EXACT_LIMIT`].
pub fn count_all_sds(g: &Graph, style: DominationStyle) -> Result<u64> {
    count_all_sds_with_limit(g, style, DEFAULT_EXACT_LIMIT)
}

pub(crate) fn count_all_sds_with_limit(
    g: &Graph,
    style: DominationStyle,
    limit: usize,
) -> Result<u64> {
    let limit = limit.min(64);
    let n = g.n();
    if n > limit {
        return Err(Error::CapacityExceeded { order: n, limit });
    }
    let ct = CoverTable::new(g, style);
    let covers: Vec<u64> = ct.covers.iter().map(single_word).collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    fn rec(covers: &[u64], full: u64, v: usize, cov: u64) -> u64 {
        if cov == full {
            // every superset of the remaining vertices dominates
            return 1u64 << (covers.len() - v);
        }
        if v == covers.len() {
            return 0;
        }
        rec(covers, full, v + 1, cov | covers[v]) + rec(covers, full, v + 1, cov)
    }
    Ok(rec(&covers, full, 0, 0))
}

fn single_word(s: &VertexSet) -> u64 {
    let mut w = 0u64;
    for v in s.iter() {
        w |= 1 << v;
    }
    w
}

/// A maximum partition of the vertices into dominating sets.
#[derive(Clone, Debug)]
pub struct DomaticResult {
    pub value: usize,
    pub witness: Partition,
}

/// The domatic number under the style, with a witness partition. Searched
/// descending from min(delta + 1, n); the single-block partition always
/// works, so the search is total.
pub fn domatic(g: &Graph, style: DominationStyle) -> DomaticResult {
    let n = g.n();
    let ct = CoverTable::new(g, style);
    // Union of covers over all vertices is full (each vertex covers itself),
    // so k = 1 always succeeds.
    let ub = (g.min_degree() + 1).min(n);
    for k in (1..=ub).rev() {
        if let Some(assign) = domatic_search(&ct, k) {
            let witness = Partition::from_assignment(n, &assign, k);
            return DomaticResult { value: k, witness };
        }
    }
    unreachable!("the single-block partition dominates");
}

/// Restricted-growth search for a partition into exactly k dominating sets.
fn domatic_search(ct: &CoverTable, k: usize) -> Option<Vec<usize>> {
    let n = ct.n;
    if k > n {
        return None;
    }
    // suffix[v] = union of covers for vertices v..n
    let mut suffix = vec![VertexSet::empty(n); n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1].union(&ct.covers[v]);
    }
    let mut state = DomaticState {
        ct,
        k,
        suffix,
        assign: vec![usize::MAX; n],
        block_cov: vec![VertexSet::empty(n); k],
        saved: vec![VertexSet::empty(n); n],
        opened: 0,
    };
    if state.dfs(0) {
        Some(state.assign)
    } else {
        None
    }
}

struct DomaticState<'a> {
    ct: &'a CoverTable,
    k: usize,
    suffix: Vec<VertexSet>,
    assign: Vec<usize>,
    block_cov: Vec<VertexSet>,
    saved: Vec<VertexSet>,
    opened: usize,
}

impl DomaticState<'_> {
    fn dfs(&mut self, v: usize) -> bool {
        let n = self.ct.n;
        if v == n {
            return self.block_cov.iter().all(VertexSet::is_full);
        }
        let limit = (self.opened + 1).min(self.k);
        for b in 0..limit {
            let opening = b == self.opened;
            // remaining vertices must suffice to open the rest of the blocks
            let opened_after = self.opened + usize::from(opening);
            if self.k - opened_after > n - v - 1 {
                continue;
            }
            self.saved[v].copy_from(&self.block_cov[b]);
            self.block_cov[b].union_with(&self.ct.covers[v]);
            self.assign[v] = b;
            if opening {
                self.opened += 1;
            }
            // every block must still be completable from the suffix
            let viable =
                (0..self.opened).all(|i| self.block_cov[i].union_is_full(&self.suffix[v + 1]));
            if viable && self.dfs(v + 1) {
                return true;
            }
            if opening {
                self.opened -= 1;
            }
            self.block_cov[b].copy_from(&self.saved[v]);
        }
        self.assign[v] = usize::MAX;
        false
    }
}
