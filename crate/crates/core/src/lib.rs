//! Exact solvers for domination-based coalition structure in small graphs.
//!
//! The library computes, by brute-force-complete search with certified
//! witnesses:
//!
//! - domination numbers, minimum dominating sets, dominating-set counts,
//!   and domatic numbers, in two styles (plain, and a strong style where a
//!   vertex only dominates neighbors of no larger degree);
//! - the maximum coalition partition of a graph: every block either is a
//!   dominating singleton adjacent to all other vertices, or fails to
//!   dominate but pairs with another such block whose union dominates;
//! - coalition graphs over the blocks of a partition, with DOT export;
//! - closed-form values for named families (paths, cycles, complete and
//!   complete bipartite graphs, stars, friendship graphs, a two-clique
//!   family), used to cross-check the solver.
//!
//! Vertices are `0..n` internally; all text formats are 1-based. Exact
//! searches are gated at [`DEFAULT_EXACT_LIMIT`] vertices.
//!
//! ```
//! use coalitions::{generate, solve, DominationStyle, Family};
//!
//! let g = generate(&Family::Cycle(6)).unwrap();
//! let result = solve(&g, DominationStyle::Strong).unwrap();
//! assert_eq!(result.value, 6);
//! assert!(result.certified);
//! ```

pub mod coalition;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod random;
pub mod scg;

pub use coalition::{
    coalition_partner_count, construct_from_domatic, solve, solve_with, upper_bounds,
    upper_bounds_with, validate_partition, BlockStatus, BlockVerdict, BoundReason, Partition,
    PartitionReview, SolveConfig, SolveResult, UpperBound, DEFAULT_EXACT_LIMIT,
};
pub use domination::{
    count_all_sds, domatic, enumerate_min_cardinality_sds, gamma, is_dominating, DomaticResult,
    DominationStyle,
};
pub use error::{Error, Result};
pub use families::{
    c_oracle, family_f_member, family_g_check, sc_oracle, FamilyGCheck, OracleAnswer, ValueSource,
};
pub use graph::{
    degree_stats, generate, parse_edge_list, write_edge_list, DegreeStats, Family, FamilyGParams,
    Graph, VertexSet,
};
pub use random::GraphSampler;
pub use scg::{build_scg, export_dot, CoalitionGraph};
