//! Vertex sets, immutable graphs, edge-list text I/O, and the deterministic
//! family generators.
//!
//! Vertices are `0..n` internally; every text interface (edge lists,
//! partition files, DOT labels, error messages) is 1-based.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// A subset of a fixed vertex universe `0..universe`, stored as a bit vector.
///
/// Sets order as integers with vertex 0 in the lowest bit, so sorting a list
/// of sets yields the ascending numeric order used for deterministic output.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS).max(1)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::empty(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.universe);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} out of universe 0..{}",
            self.universe
        );
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    /// In-place union; `other` must share the universe.
    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        out
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(w, o)| w & o == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(w, o)| w & !o == 0)
    }

    /// True when the set is all of `0..universe`.
    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    /// True when `self | other` covers the whole universe. No allocation.
    pub fn union_is_full(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        let mut count = 0usize;
        for (w, o) in self.words.iter().zip(&other.words) {
            count += (w | o).count_ones() as usize;
        }
        count == self.universe
    }

    /// Overwrites `self` with `other` without reallocating.
    pub fn copy_from(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        self.words.copy_from_slice(&other.words);
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.words.len().max(other.words.len());
        for i in (0..len).rev() {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.universe.cmp(&other.universe)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "v{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A finite simple undirected graph, immutable after construction.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adjacency: Vec<VertexSet>,
    degrees: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `0..n` from 0-based endpoint pairs. Duplicate edges
    /// collapse; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph order must be at least 1".into(),
            ));
        }
        let mut adjacency = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({}, {}) out of range for order {n}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!(
                    "self-loop at vertex {}",
                    u + 1
                )));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        let degrees = adjacency.iter().map(VertexSet::len).collect();
        Ok(Graph {
            n,
            adjacency,
            degrees,
            labels: None,
        })
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Graph {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency[u].contains(v)
    }

    /// Edges as 0-based pairs `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adjacency[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap()
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.n,
            (0..self.n).filter(|&v| self.degrees[v] == self.n - 1),
        )
    }

    pub fn is_complete(&self) -> bool {
        self.degrees.iter().all(|&d| d == self.n - 1)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut frontier = vec![0];
        while let Some(u) = frontier.pop() {
            for v in self.adjacency[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    frontier.push(v);
                }
            }
        }
        seen.is_full()
    }

    /// Display label for a vertex; `v3` unless the generator set names.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(names) => names[v].clone(),
            None => format!("v{}", v + 1),
        }
    }
}

/// Minimum degree, maximum degree, and the set of universal vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub universal_vertices: VertexSet,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    DegreeStats {
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        universal_vertices: g.universal_vertices(),
    }
}

/// Parses the edge-list text format:
///
/// ```text
/// # comment
/// n m
/// u v        (m lines, 1-based endpoints)
/// ```
///
/// Blank lines and `#` comments are skipped anywhere. Duplicate edges
/// collapse. Errors name the offending line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut line_count = 0;
    for (idx, raw) in text.lines().enumerate() {
        line_count = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        line: line_count,
                        reason: format!("expected header \"n m\", found {} token(s)", tokens.len()),
                    });
                }
                let n = parse_usize(tokens[0], line_count, "vertex count")?;
                let m = parse_usize(tokens[1], line_count, "edge count")?;
                if n == 0 {
                    return Err(Error::Parse {
                        line: line_count,
                        reason: "graph order must be at least 1".into(),
                    });
                }
                header = Some((n, m));
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line: line_count,
                        reason: format!("expected {m} edge line(s) but found more data"),
                    });
                }
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        line: line_count,
                        reason: format!("expected edge \"u v\", found {} token(s)", tokens.len()),
                    });
                }
                let u = parse_usize(tokens[0], line_count, "endpoint")?;
                let v = parse_usize(tokens[1], line_count, "endpoint")?;
                for id in [u, v] {
                    if id < 1 || id > n {
                        return Err(Error::Parse {
                            line: line_count,
                            reason: format!("vertex id {id} out of range 1..={n}"),
                        });
                    }
                }
                if u == v {
                    return Err(Error::Parse {
                        line: line_count,
                        reason: format!("self-loop at vertex {u}"),
                    });
                }
                edges.push((u - 1, v - 1));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: line_count + 1,
        reason: "missing \"n m\" header".into(),
    })?;
    if edges.len() < m {
        return Err(Error::Parse {
            line: line_count + 1,
            reason: format!("expected {m} edge line(s), found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        reason: format!("{what} \"{token}\" is not a nonnegative integer"),
    })
}

/// Writes the edge-list format read by [`parse_edge_list`]: header then the
/// edges sorted ascending, 1-based. Output is byte-stable per graph.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Parameters of the two-clique family: a clique on r + s vertices
/// u_1..u_r, v_1..v_s joined to two disjoint p-cliques x_1..x_p and
/// w_1..w_p, with every x_i adjacent to every u_j and every w_i adjacent
/// to every v_j.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyGParams {
    pub r: usize,
    pub s: usize,
    pub p: usize,
}

impl FamilyGParams {
    pub fn order(&self) -> usize {
        self.r + self.s + 2 * self.p
    }
}

/// The named graph families the generators and closed-form oracles know.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Path P_n, n >= 1.
    Path(usize),
    /// Cycle C_n, n >= 3.
    Cycle(usize),
    /// Complete graph K_n, n >= 1.
    Complete(usize),
    /// Complete bipartite K_{r,s} with parts of size r and s.
    CompleteBipartite(usize, usize),
    /// Star K_{1,n}: one center and n leaves.
    Star(usize),
    /// Friendship graph F_k: k triangles sharing one vertex.
    Friendship(usize),
    /// The two-clique family; see [`FamilyGParams`].
    FamilyG(FamilyGParams),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(r, s) => write!(f, "complete_bipartite:{r},{s}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Friendship(k) => write!(f, "friendship:{k}"),
            Family::FamilyG(p) => write!(f, "family_g:{},{},{}", p.r, p.s, p.p),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses generator specs such as `path:9`, `complete_bipartite:4,3`,
    /// or `family_g:1,1,2`.
    fn from_str(spec: &str) -> Result<Family> {
        let bad = |msg: String| Error::InvalidParameter(msg);
        let (name, params) = spec.split_once(':').ok_or_else(|| {
            bad(format!(
                "generator spec \"{spec}\" must look like family:params"
            ))
        })?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|t| {
                t.trim().parse().map_err(|_| {
                    bad(format!(
                        "parameter \"{t}\" in \"{spec}\" is not a nonnegative integer"
                    ))
                })
            })
            .collect::<Result<_>>()?;
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(bad(format!(
                    "generator \"{name}\" takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        match name.replace('-', "_").as_str() {
            "path" => {
                arity(1)?;
                Ok(Family::Path(nums[0]))
            }
            "cycle" => {
                arity(1)?;
                Ok(Family::Cycle(nums[0]))
            }
            "complete" => {
                arity(1)?;
                Ok(Family::Complete(nums[0]))
            }
            "complete_bipartite" => {
                arity(2)?;
                Ok(Family::CompleteBipartite(nums[0], nums[1]))
            }
            "star" => {
                arity(1)?;
                Ok(Family::Star(nums[0]))
            }
            "friendship" => {
                arity(1)?;
                Ok(Family::Friendship(nums[0]))
            }
            "family_g" => {
                arity(3)?;
                Ok(Family::FamilyG(FamilyGParams {
                    r: nums[0],
                    s: nums[1],
                    p: nums[2],
                }))
            }
            other => Err(bad(format!("unknown family \"{other}\""))),
        }
    }
}

/// Builds the requested family member. Vertex numbering is fixed per family
/// so values and witnesses are reproducible: paths and cycles number along
/// the walk, stars put the center first, friendship graphs put the shared
/// vertex first, and the two-clique family orders u..., v..., x..., w... .
pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Path(n) => {
            if n < 1 {
                return Err(Error::InvalidParameter("path needs n >= 1".into()));
            }
            Graph::from_edges(n, &chain(0, n))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
            }
            let mut edges = chain(0, n);
            edges.push((n - 1, 0));
            Graph::from_edges(n, &edges)
        }
        Family::Complete(n) => {
            if n < 1 {
                return Err(Error::InvalidParameter(
                    "complete graph needs n >= 1".into(),
                ));
            }
            Graph::from_edges(n, &clique(0, n))
        }
        Family::CompleteBipartite(r, s) => {
            if r + s < 1 {
                return Err(Error::InvalidParameter(
                    "complete bipartite graph needs r + s >= 1".into(),
                ));
            }
            let mut edges = Vec::new();
            for a in 0..r {
                for b in 0..s {
                    edges.push((a, r + b));
                }
            }
            Graph::from_edges(r + s, &edges)
        }
        Family::Star(leaves) => {
            let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
            Graph::from_edges(leaves + 1, &edges)
        }
        Family::Friendship(k) => {
            if k < 1 {
                return Err(Error::InvalidParameter(
                    "friendship graph needs k >= 1".into(),
                ));
            }
            let mut edges = Vec::new();
            for t in 0..k {
                let (a, b) = (1 + 2 * t, 2 + 2 * t);
                edges.push((0, a));
                edges.push((0, b));
                edges.push((a, b));
            }
            Graph::from_edges(2 * k + 1, &edges)
        }
        Family::FamilyG(params) => {
            let FamilyGParams { r, s, p } = params;
            let n = params.order();
            if n < 1 {
                return Err(Error::InvalidParameter(
                    "two-clique family needs r + s + 2p >= 1".into(),
                ));
            }
            let x0 = r + s;
            let w0 = r + s + p;
            let mut edges = clique(0, r + s);
            edges.extend(clique(x0, p));
            edges.extend(clique(w0, p));
            for i in 0..p {
                for j in 0..r {
                    edges.push((x0 + i, j));
                }
                for j in 0..s {
                    edges.push((w0 + i, r + j));
                }
            }
            let mut labels = Vec::with_capacity(n);
            labels.extend((1..=r).map(|i| format!("u{i}")));
            labels.extend((1..=s).map(|i| format!("v{i}")));
            labels.extend((1..=p).map(|i| format!("x{i}")));
            labels.extend((1..=p).map(|i| format!("w{i}")));
            Ok(Graph::from_edges(n, &edges)?.with_labels(labels))
        }
    }
}

fn chain(start: usize, len: usize) -> Vec<(usize, usize)> {
    (start..start + len.saturating_sub(1))
        .map(|v| (v, v + 1))
        .collect()
}

fn clique(start: usize, len: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in start..start + len {
        for b in a + 1..start + len {
            edges.push((a, b));
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(69);
        assert_eq!(s.len(), 2);
        assert!(s.contains(69));
        assert!(!s.contains(68));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 69]);
        s.remove(69);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn vertex_set_orders_numerically() {
        let a = VertexSet::from_vertices(8, [1, 3, 6]); // 74
        let b = VertexSet::from_vertices(8, [1, 4, 6]); // 82
        let c = VertexSet::from_vertices(8, [0]); // 1
        assert!(c < a && a < b);
        let mut v = vec![b.clone(), c.clone(), a.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn vertex_set_algebra() {
        let a = VertexSet::from_vertices(6, [0, 2, 4]);
        let b = VertexSet::from_vertices(6, [1, 2, 5]);
        assert_eq!(a.union(&b).iter().collect::<Vec<_>>(), vec![0, 1, 2, 4, 5]);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![2]);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![0, 4]);
        assert!(!a.is_disjoint(&b));
        assert!(!a.union_is_full(&b));
        assert!(a.union_is_full(&VertexSet::from_vertices(6, [1, 3, 5])));
    }

    #[test]
    fn path_four_structure() {
        let g = generate(&Family::Path(4)).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            (0..4).map(|v| g.degree(v)).collect::<Vec<_>>(),
            vec![1, 2, 2, 1]
        );
        assert!(g.is_connected());
        assert!(!g.is_complete());
    }

    #[test]
    fn parse_accepts_comments_and_duplicates() {
        let text = "# a path\n4 4\n1 2\n2 3\n\n3 4\n2 1\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, generate(&Family::Path(4)).unwrap());
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn parse_single_vertex() {
        let g = parse_edge_list("1 0\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_errors_name_lines() {
        let e = parse_edge_list("4 2\n1 2\n1 5\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 3,
                reason: "vertex id 5 out of range 1..=4".into()
            }
        );
        let e = parse_edge_list("4 1\n2 2\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 2,
                reason: "self-loop at vertex 2".into()
            }
        );
        let e = parse_edge_list("x y\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_edge_list("3 2\n1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_edge_list("# empty\n").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let e = parse_edge_list("3 1\n1 2\n2 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn write_then_parse_round_trips() {
        for fam in [
            Family::Path(7),
            Family::Cycle(5),
            Family::Complete(4),
            Family::CompleteBipartite(3, 2),
            Family::Star(4),
            Family::Friendship(3),
            Family::FamilyG(FamilyGParams { r: 1, s: 1, p: 2 }),
        ] {
            let g = generate(&fam).unwrap();
            let text = write_edge_list(&g);
            assert_eq!(parse_edge_list(&text).unwrap(), g, "{fam}");
        }
        assert_eq!(
            write_edge_list(&generate(&Family::Path(4)).unwrap()),
            "4 3\n1 2\n2 3\n3 4\n"
        );
    }

    #[test]
    fn family_spec_round_trips() {
        for spec in [
            "path:9",
            "cycle:6",
            "complete:4",
            "complete_bipartite:4,3",
            "star:5",
            "friendship:3",
            "family_g:1,1,2",
        ] {
            let fam: Family = spec.parse().unwrap();
            assert_eq!(fam.to_string(), spec);
        }
        assert!("path".parse::<Family>().is_err());
        assert!("path:x".parse::<Family>().is_err());
        assert!("blob:3".parse::<Family>().is_err());
        assert!("complete_bipartite:4".parse::<Family>().is_err());
        assert_eq!(
            "complete-bipartite:4,3".parse::<Family>().unwrap(),
            Family::CompleteBipartite(4, 3)
        );
    }

    #[test]
    fn star_and_friendship_shapes() {
        let s = generate(&Family::Star(5)).unwrap();
        assert_eq!(s.n(), 6);
        assert_eq!(s.degree(0), 5);
        assert!((1..6).all(|v| s.degree(v) == 1));

        let f = generate(&Family::Friendship(3)).unwrap();
        assert_eq!(f.n(), 7);
        assert_eq!(f.degree(0), 6);
        assert!((1..7).all(|v| f.degree(v) == 2));
        assert_eq!(f.edge_count(), 9);
        assert!(f.has_edge(1, 2) && f.has_edge(3, 4) && f.has_edge(5, 6));
        assert!(!f.has_edge(2, 3));
    }

    #[test]
    fn complete_bipartite_shape() {
        let g = generate(&Family::CompleteBipartite(4, 2)).unwrap();
        assert_eq!(g.n(), 6);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!((4..6).all(|v| g.degree(v) == 4));
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn two_clique_family_degenerate_cases() {
        // r=0, s=0, p=3: the cross rules are vacuous, leaving two disjoint triangles.
        let g = generate(&Family::FamilyG(FamilyGParams { r: 0, s: 0, p: 3 })).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(!g.is_connected());

        // r=2, s=1, p=0: just the clique, K_3.
        let g = generate(&Family::FamilyG(FamilyGParams { r: 2, s: 1, p: 0 })).unwrap();
        assert!(g.is_complete());
        assert_eq!(g.n(), 3);

        // r=1, s=1, p=1 is a path on four vertices: x1 - u1 - v1 - w1.
        let g = generate(&Family::FamilyG(FamilyGParams { r: 1, s: 1, p: 1 })).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert!(g.is_connected());
        let mut degs: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        assert_eq!(g.label(2), "x1");
    }

    #[test]
    fn degree_stats_reports_universal_vertices() {
        let k1 = generate(&Family::Complete(1)).unwrap();
        let stats = degree_stats(&k1);
        assert_eq!(stats.universal_vertices.iter().collect::<Vec<_>>(), vec![0]);

        let star = generate(&Family::Star(3)).unwrap();
        let stats = degree_stats(&star);
        assert_eq!(stats.min_degree, 1);
        assert_eq!(stats.max_degree, 3);
        assert_eq!(stats.universal_vertices.iter().collect::<Vec<_>>(), vec![0]);

        let p4 = generate(&Family::Path(4)).unwrap();
        assert!(degree_stats(&p4).universal_vertices.is_empty());
    }
}
