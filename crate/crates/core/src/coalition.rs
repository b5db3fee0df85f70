//! Coalition partitions and the exact maximum-partition solver.
//!
//! A coalition partition under a domination style splits the vertices into
//! blocks so that every block either is a dominating singleton whose vertex
//! is adjacent to all others, or fails to dominate but has a partner block
//! (also non-dominating) whose union dominates. The solver finds the
//! maximum number of blocks over all such partitions, with a witness.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use crate::domination::{domatic, CoverTable, DominationStyle};
use crate::error::{Error, Result};
use crate::families::family_f_member;
use crate::graph::{degree_stats, Graph, VertexSet};

/// Largest graph order the exact searches accept by default.
pub const DEFAULT_EXACT_LIMIT: usize = 20;

/// An ordered partition of `0..universe` into disjoint nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    universe: usize,
    blocks: Vec<VertexSet>,
}

impl Partition {
    /// Validates disjointness, coverage, and nonemptiness; block order is
    /// kept as given.
    pub fn new(universe: usize, blocks: Vec<VertexSet>) -> Result<Partition> {
        let mut owner: Vec<Option<usize>> = vec![None; universe];
        for (i, block) in blocks.iter().enumerate() {
            if block.universe() != universe {
                return Err(Error::UniverseMismatch {
                    partition_universe: block.universe(),
                    graph_order: universe,
                });
            }
            if block.is_empty() {
                return Err(Error::EmptyBlock { index: i });
            }
            for v in block.iter() {
                if let Some(first) = owner[v] {
                    return Err(Error::OverlappingBlocks {
                        vertex: v,
                        first,
                        second: i,
                    });
                }
                owner[v] = Some(i);
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(Error::UncoveredVertex { vertex: v });
        }
        Ok(Partition { universe, blocks })
    }

    pub fn singletons(universe: usize) -> Partition {
        let blocks = (0..universe)
            .map(|v| VertexSet::singleton(universe, v))
            .collect();
        Partition { universe, blocks }
    }

    /// Builds from a vertex-to-block assignment; blocks are ordered by their
    /// smallest vertex (restricted-growth numbering keeps this stable).
    pub(crate) fn from_assignment(
        universe: usize,
        assign: &[usize],
        block_count: usize,
    ) -> Partition {
        let mut blocks = vec![VertexSet::empty(universe); block_count];
        for (v, &b) in assign.iter().enumerate() {
            blocks[b].insert(v);
        }
        Partition { universe, blocks }
    }

    /// Parses the partition text format: one block per line, 1-based vertex
    /// ids separated by whitespace, `#` comments and blank lines skipped.
    pub fn parse(text: &str, universe: usize) -> Result<Partition> {
        let mut blocks = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut block = VertexSet::empty(universe);
            for token in line.split_whitespace() {
                let id: usize = token.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    reason: format!("vertex id \"{token}\" is not a positive integer"),
                })?;
                if id < 1 || id > universe {
                    return Err(Error::Parse {
                        line: idx + 1,
                        reason: format!("vertex id {id} out of range 1..={universe}"),
                    });
                }
                block.insert(id - 1);
            }
            blocks.push(block);
        }
        Partition::new(universe, blocks)
    }

    /// The inverse of [`Partition::parse`]: one line per block, ids ascending.
    pub fn to_block_lines(&self) -> String {
        let mut out = String::new();
        for block in &self.blocks {
            let ids: Vec<String> = block.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&ids.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// How a single block fares against the coalition-partition conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockStatus {
    /// Dominating singleton whose vertex is adjacent to all others.
    SingletonFullDegreeSds,
    /// Not dominating, and some other non-dominating block completes it.
    NonSdsWithPartner,
    /// Dominating but not a full-degree singleton; never allowed.
    InvalidSdsBlock,
    /// Not dominating and no partner exists.
    NonSdsWithoutPartner,
}

impl BlockStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            BlockStatus::SingletonFullDegreeSds => "singleton_full_degree_sds",
            BlockStatus::NonSdsWithPartner => "non_sds_with_partner",
            BlockStatus::InvalidSdsBlock => "invalid_sds_block",
            BlockStatus::NonSdsWithoutPartner => "non_sds_without_partner",
        }
    }

    pub fn is_acceptable(self) -> bool {
        matches!(
            self,
            BlockStatus::SingletonFullDegreeSds | BlockStatus::NonSdsWithPartner
        )
    }
}

impl fmt::Display for BlockStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict for one block: its status and the full list of partner blocks
/// (indices into the partition, ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockVerdict {
    pub block_index: usize,
    pub status: BlockStatus,
    pub partners: Vec<usize>,
}

/// Outcome of checking a whole partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionReview {
    pub valid: bool,
    pub verdicts: Vec<BlockVerdict>,
}

/// Checks every block of `p` against the coalition-partition conditions for
/// the style, reporting per-block verdicts with complete partner lists.
pub fn validate_partition(
    g: &Graph,
    p: &Partition,
    style: DominationStyle,
) -> Result<PartitionReview> {
    if p.universe() != g.n() {
        return Err(Error::UniverseMismatch {
            partition_universe: p.universe(),
            graph_order: g.n(),
        });
    }
    let ct = CoverTable::new(g, style);
    let covs: Vec<VertexSet> = p.blocks().iter().map(|b| ct.union_of(b)).collect();
    let full: Vec<bool> = covs.iter().map(VertexSet::is_full).collect();
    let verdicts = (0..p.len())
        .map(|i| {
            let status;
            let mut partners = Vec::new();
            if full[i] {
                status = if p.blocks()[i].len() == 1 {
                    BlockStatus::SingletonFullDegreeSds
                } else {
                    BlockStatus::InvalidSdsBlock
                };
            } else {
                for j in 0..p.len() {
                    if j != i && !full[j] && covs[i].union_is_full(&covs[j]) {
                        partners.push(j);
                    }
                }
                status = if partners.is_empty() {
                    BlockStatus::NonSdsWithoutPartner
                } else {
                    BlockStatus::NonSdsWithPartner
                };
            }
            BlockVerdict {
                block_index: i,
                status,
                partners,
            }
        })
        .collect::<Vec<_>>();
    let valid = verdicts.iter().all(|v| v.status.is_acceptable());
    Ok(PartitionReview { valid, verdicts })
}

/// Number of blocks that form a coalition with block `index`: non-dominating
/// blocks whose union with it dominates. Dominating blocks have none.
pub fn coalition_partner_count(
    g: &Graph,
    p: &Partition,
    index: usize,
    style: DominationStyle,
) -> Result<usize> {
    if index >= p.len() {
        return Err(Error::BlockIndexOutOfRange {
            index,
            blocks: p.len(),
        });
    }
    let review = validate_partition(g, p, style)?;
    Ok(review.verdicts[index].partners.len())
}

/// Why an upper bound holds. `Display` gives the short reason tags used in
/// reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundReason {
    /// Block count cannot exceed the order.
    Order(usize),
    /// A degree-1 vertex caps the count at 2 + 2 * max_degree.
    DeltaTwo(usize),
    /// Non-complete graph with a vertex adjacent to all others: no valid
    /// partition exists at all (strong style).
    FamilyF,
    /// Unique maximum-degree vertex: at most (number of dominating sets) + 1
    /// blocks (strong style).
    SdsCountPlusOne(usize),
    /// The count above was skipped because the order exceeds the limit.
    SdsCountUnavailable,
}

impl fmt::Display for BoundReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundReason::Order(n) => write!(f, "order={n}"),
            BoundReason::DeltaTwo(b) => write!(f, "delta2={b}"),
            BoundReason::FamilyF => write!(f, "family_F"),
            BoundReason::SdsCountPlusOne(b) => write!(f, "sds_count+1={b}"),
            BoundReason::SdsCountUnavailable => write!(f, "sds_count_unavailable"),
        }
    }
}

/// An upper bound on the maximum block count, with every reason that
/// contributed. `bound` is the minimum over the applicable reasons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperBound {
    pub bound: usize,
    pub reasons: Vec<BoundReason>,
}

/// Search configuration: capacity gate and worker threads.
#[derive(Clone, Copy, Debug)]
pub struct SolveConfig {
    /// Orders above this are rejected instead of searched.
    pub exact_limit: usize,
    /// Worker threads for the k-feasibility search. Results do not depend on
    /// the worker count; the witness is deterministic with one worker.
    pub workers: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            exact_limit: DEFAULT_EXACT_LIMIT,
            workers: 1,
        }
    }
}

pub fn upper_bounds(g: &Graph, style: DominationStyle) -> UpperBound {
    upper_bounds_with(g, style, &SolveConfig::default())
}

/// Combines the known upper bounds for the style. For the strong style a
/// non-complete graph with a universal vertex short-circuits to 0.
pub fn upper_bounds_with(g: &Graph, style: DominationStyle, config: &SolveConfig) -> UpperBound {
    let n = g.n();
    if style == DominationStyle::Strong && family_f_member(g) {
        return UpperBound {
            bound: 0,
            reasons: vec![BoundReason::FamilyF],
        };
    }
    let stats = degree_stats(g);
    let mut bound = n;
    let mut reasons = vec![BoundReason::Order(n)];
    if stats.min_degree == 1 {
        let b = 2 + 2 * stats.max_degree;
        reasons.push(BoundReason::DeltaTwo(b));
        bound = bound.min(b);
    }
    // With a unique maximum-degree vertex u (and u not universal), every
    // dominating set contains u, so every coalition involves u's block and
    // each of the other blocks unions with it to a distinct dominating set.
    if style == DominationStyle::Strong
        && stats.max_degree + 2 <= n
        && g_degree_count(g, stats.max_degree) == 1
    {
        match crate::domination::count_all_sds_with_limit(g, style, config.exact_limit) {
            Ok(r) => {
                let b = (r as usize).saturating_add(1);
                reasons.push(BoundReason::SdsCountPlusOne(b));
                bound = bound.min(b);
            }
            Err(_) => reasons.push(BoundReason::SdsCountUnavailable),
        }
    }
    UpperBound { bound, reasons }
}

fn g_degree_count(g: &Graph, d: usize) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) == d).count()
}

/// Result of an exact solve. `value = 0` means no valid partition exists
/// (then `witness` is absent). `certified` records that the search space was
/// exhausted (or a closed-form exclusion applied); this solver never returns
/// uncertified values.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Option<Partition>,
    pub certified: bool,
    pub nodes_explored: u64,
    pub wall_time: Duration,
}

pub fn solve(g: &Graph, style: DominationStyle) -> Result<SolveResult> {
    solve_with(g, style, &SolveConfig::default())
}

/// Maximum coalition-partition size under the style, by exhaustive
/// restricted-growth search for k = bound, bound-1, ..., 1 (no monotonicity
/// in k is assumed). First feasible k wins; its witness is returned.
pub fn solve_with(g: &Graph, style: DominationStyle, config: &SolveConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.n();
    if n > config.exact_limit {
        return Err(Error::CapacityExceeded {
            order: n,
            limit: config.exact_limit,
        });
    }
    if style == DominationStyle::Strong && family_f_member(g) {
        return Ok(SolveResult {
            value: 0,
            witness: None,
            certified: true,
            nodes_explored: 0,
            wall_time: start.elapsed(),
        });
    }
    let ub = upper_bounds_with(g, style, config);
    let ct = CoverTable::new(g, style);
    let nodes = AtomicU64::new(0);
    let mut found = None;
    for k in (1..=ub.bound).rev() {
        let hit = if config.workers > 1 {
            feasible_parallel(&ct, k, config.workers, &nodes)
        } else {
            feasible_sequential(&ct, k, &nodes)
        };
        if let Some(assign) = hit {
            found = Some((k, Partition::from_assignment(n, &assign, k)));
            break;
        }
    }
    let (value, witness) = match found {
        Some((k, p)) => (k, Some(p)),
        None => (0, None),
    };
    Ok(SolveResult {
        value,
        witness,
        certified: true,
        nodes_explored: nodes.load(AtomicOrdering::Relaxed),
        wall_time: start.elapsed(),
    })
}

/// Search state for partitions into exactly k blocks. Blocks carry their
/// incremental cover unions; snapshots make backtracking allocation-free.
struct CoalitionSearch<'a> {
    ct: &'a CoverTable,
    k: usize,
    assign: Vec<usize>,
    block_cov: Vec<VertexSet>,
    block_size: Vec<usize>,
    saved: Vec<VertexSet>,
    opened: usize,
    nodes: u64,
}

impl<'a> CoalitionSearch<'a> {
    fn new(ct: &'a CoverTable, k: usize) -> Self {
        let n = ct.n();
        CoalitionSearch {
            ct,
            k,
            assign: vec![usize::MAX; n],
            block_cov: vec![VertexSet::empty(n); k],
            block_size: vec![0; k],
            saved: vec![VertexSet::empty(n); n],
            opened: 0,
            nodes: 0,
        }
    }

    /// Places vertex v in block b if the prunes allow; returns false when the
    /// branch is cut. Restores nothing; pair with `unplace`.
    fn place(&mut self, v: usize, b: usize) -> bool {
        let n = self.ct.n();
        let opening = b == self.opened;
        let opened_after = self.opened + usize::from(opening);
        // remaining vertices must be able to open the still-missing blocks
        if self.k - opened_after > n - v - 1 {
            return false;
        }
        self.nodes += 1;
        // a dominating block larger than a singleton can never be repaired
        if !opening && self.block_size[b] >= 1 && self.block_cov[b].is_full() {
            return false;
        }
        self.saved[v].copy_from(&self.block_cov[b]);
        self.block_cov[b].union_with(&self.ct.covers[v]);
        self.block_size[b] += 1;
        self.assign[v] = b;
        if opening {
            self.opened += 1;
        }
        if self.block_size[b] >= 2 && self.block_cov[b].is_full() {
            self.unplace(v, b);
            return false;
        }
        true
    }

    fn unplace(&mut self, v: usize, b: usize) {
        if self.assign[v] == b && self.block_size[b] > 0 {
            self.block_cov[b].copy_from(&self.saved[v]);
            self.block_size[b] -= 1;
            self.assign[v] = usize::MAX;
            if b + 1 == self.opened && self.block_size[b] == 0 {
                self.opened -= 1;
            }
        }
    }

    fn dfs(&mut self, v: usize) -> bool {
        if v == self.ct.n() {
            return self.leaf_valid();
        }
        let limit = (self.opened + 1).min(self.k);
        for b in 0..limit {
            if self.place(v, b) {
                if self.dfs(v + 1) {
                    return true;
                }
                self.unplace(v, b);
            }
        }
        false
    }

    /// Full-partition check: dominating blocks are full-degree singletons
    /// (the prunes guarantee the singleton part), every other block needs a
    /// non-dominating partner. Partner existence is not monotone under
    /// growth, so it is only decided here.
    fn leaf_valid(&self) -> bool {
        debug_assert_eq!(self.opened, self.k);
        let full: Vec<bool> = self.block_cov.iter().map(VertexSet::is_full).collect();
        for i in 0..self.k {
            if full[i] {
                debug_assert_eq!(self.block_size[i], 1);
                continue;
            }
            let ok = (0..self.k)
                .any(|j| j != i && !full[j] && self.block_cov[i].union_is_full(&self.block_cov[j]));
            if !ok {
                return false;
            }
        }
        true
    }
}

fn feasible_sequential(ct: &CoverTable, k: usize, nodes: &AtomicU64) -> Option<Vec<usize>> {
    let mut search = CoalitionSearch::new(ct, k);
    let hit = search.dfs(0);
    nodes.fetch_add(search.nodes, AtomicOrdering::Relaxed);
    if hit {
        Some(search.assign)
    } else {
        None
    }
}

/// Fans the top of the search tree out to a thread pool: enumerate prefix
/// assignments to a depth with enough branches, then run each prefix to
/// completion in parallel. Feasibility (hence the value) is independent of
/// scheduling; witnesses may differ from the single-worker ones.
fn feasible_parallel(
    ct: &CoverTable,
    k: usize,
    workers: usize,
    nodes: &AtomicU64,
) -> Option<Vec<usize>> {
    use rayon::prelude::*;

    let n = ct.n();
    let mut depth = 1;
    let mut prefixes: Vec<Vec<usize>> = vec![Vec::new()];
    while depth <= n && prefixes.len() < workers * 8 && prefixes.len() < 2048 {
        let mut next = Vec::new();
        for pre in &prefixes {
            let mut search = CoalitionSearch::new(ct, k);
            if !replay(&mut search, pre) {
                continue;
            }
            let v = pre.len();
            let limit = (search.opened + 1).min(k);
            for b in 0..limit {
                if search.place(v, b) {
                    let mut ext = pre.clone();
                    ext.push(b);
                    next.push(ext);
                    search.unplace(v, b);
                }
            }
            nodes.fetch_add(search.nodes, AtomicOrdering::Relaxed);
        }
        prefixes = next;
        depth += 1;
        if prefixes.is_empty() {
            return None;
        }
        if depth > n {
            break;
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("building a thread pool cannot fail with a positive worker count");
    pool.install(|| {
        prefixes.par_iter().find_map_any(|pre| {
            let mut search = CoalitionSearch::new(ct, k);
            if !replay(&mut search, pre) {
                return None;
            }
            let hit = search.dfs(pre.len());
            nodes.fetch_add(search.nodes, AtomicOrdering::Relaxed);
            if hit {
                Some(search.assign.clone())
            } else {
                None
            }
        })
    })
}

/// Re-applies a previously validated prefix. Returns false only if a prune
/// fires, which cannot happen for prefixes produced by `place`.
fn replay(search: &mut CoalitionSearch, prefix: &[usize]) -> bool {
    for (v, &b) in prefix.iter().enumerate() {
        if !search.place(v, b) {
            return false;
        }
    }
    true
}

/// Builds a valid partition with at least 2 * (domatic number) blocks by
/// refining a maximum partition into dominating sets, for the strong style.
/// Requires a graph without a universal vertex.
///
/// Each of the first k-1 dominating blocks is shrunk to a minimal dominating
/// set (leftovers join the last block) and split in two; neither half
/// dominates, and the halves partner each other. The last block contributes
/// its own split minimal core, plus possibly one extra block when the
/// remainder has a partner of its own.
pub fn construct_from_domatic(g: &Graph) -> Result<Partition> {
    let stats = degree_stats(g);
    if let Some(v) = stats.universal_vertices.first() {
        return Err(Error::UniversalVertex { vertex: v });
    }
    let n = g.n();
    let style = DominationStyle::Strong;
    let ct = CoverTable::new(g, style);
    let dom = domatic(g, style);
    let k = dom.value;
    let mut blocks: Vec<VertexSet> = dom.witness.blocks().to_vec();

    for i in 0..k - 1 {
        let minimal = minimal_dominating_subset(&ct, &blocks[i]);
        let leftover = blocks[i].difference(&minimal);
        blocks[k - 1].union_with(&leftover);
        blocks[i] = minimal;
    }

    let mut result: Vec<VertexSet> = Vec::with_capacity(2 * k + 1);
    for block in blocks.iter().take(k - 1) {
        let (head, tail) = split_head(block);
        result.push(head);
        result.push(tail);
    }

    let last = &blocks[k - 1];
    let core = minimal_dominating_subset(&ct, last);
    let remainder = last.difference(&core);
    let (head, tail) = split_head(&core);
    if remainder.is_empty() {
        result.push(head);
        result.push(tail);
    } else {
        // maximality of the domatic partition keeps the remainder from
        // dominating on its own
        debug_assert!(!ct.dominates(&remainder));
        let has_partner = result
            .iter()
            .chain([&head, &tail])
            .any(|c| ct.union_dominates(c, &remainder));
        result.push(head);
        if has_partner {
            result.push(tail);
            result.push(remainder);
        } else {
            result.push(tail.union(&remainder));
        }
    }
    Partition::new(n, result)
}

/// Ascending one-pass shrink to a minimal dominating subset. One pass is
/// enough: removability is monotone under taking subsets.
fn minimal_dominating_subset(ct: &CoverTable, set: &VertexSet) -> VertexSet {
    debug_assert!(ct.dominates(set));
    let mut cur = set.clone();
    for v in set.iter() {
        cur.remove(v);
        if !ct.dominates(&cur) {
            cur.insert(v);
        }
    }
    cur
}

/// Splits off the smallest vertex. Callers guarantee at least two members
/// (no universal vertex means no dominating singleton here).
fn split_head(set: &VertexSet) -> (VertexSet, VertexSet) {
    let head_v = set.first().expect("blocks are nonempty");
    let head = VertexSet::singleton(set.universe(), head_v);
    let tail = set.difference(&head);
    debug_assert!(
        !tail.is_empty(),
        "minimal dominating sets have >= 2 vertices here"
    );
    (head, tail)
}
