//! Closed-form values for the named families, and the structural classes
//! with known answers: graphs excluded by a universal vertex, and the
//! two-clique family whose coalition number equals its order.
//!
//! The oracles answer only where a closed form is established; everything
//! else is `Unsettled` so callers fall back to the exact solver.

use std::fmt;

use crate::coalition::{solve, validate_partition, Partition};
use crate::domination::DominationStyle;
use crate::error::{Error, Result};
use crate::graph::{generate, Family, FamilyGParams, Graph};

/// Which closed-form rule produced a settled value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueSource {
    /// Complete graph: singletons are all valid blocks.
    CompleteGraphRule,
    /// Piecewise path table.
    PathFormula,
    /// Piecewise cycle table.
    CycleFormula,
    /// Star with at least two leaves: the center blocks every partition.
    StarRule,
    /// Friendship graph with at least two triangles: same exclusion.
    FriendshipRule,
    /// Complete bipartite with both parts at least 2.
    CompleteBipartiteFormula,
    /// Two-clique family of order at least 4: value equals the order.
    TwoCliqueFamilyRule,
}

impl ValueSource {
    pub fn as_str(self) -> &'static str {
        match self {
            ValueSource::CompleteGraphRule => "complete_rule",
            ValueSource::PathFormula => "path_formula",
            ValueSource::CycleFormula => "cycle_formula",
            ValueSource::StarRule => "star_rule",
            ValueSource::FriendshipRule => "friendship_rule",
            ValueSource::CompleteBipartiteFormula => "complete_bipartite_formula",
            ValueSource::TwoCliqueFamilyRule => "two_clique_family_rule",
        }
    }
}

impl fmt::Display for ValueSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A closed-form answer, or a refusal to guess.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleAnswer {
    Settled { value: usize, source: ValueSource },
    Unsettled,
}

impl OracleAnswer {
    fn settled(value: usize, source: ValueSource) -> OracleAnswer {
        OracleAnswer::Settled { value, source }
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            OracleAnswer::Settled { value, .. } => Some(*value),
            OracleAnswer::Unsettled => None,
        }
    }

    pub fn is_settled(&self) -> bool {
        matches!(self, OracleAnswer::Settled { .. })
    }
}

/// Closed-form strong coalition number of a family member, where known.
pub fn sc_oracle(family: &Family) -> OracleAnswer {
    use ValueSource::*;
    match *family {
        Family::Path(n) => match n {
            0 => OracleAnswer::Unsettled,
            1 => OracleAnswer::settled(1, CompleteGraphRule),
            2 => OracleAnswer::settled(2, CompleteGraphRule),
            3 => OracleAnswer::settled(0, PathFormula),
            4..=7 => OracleAnswer::settled(4, PathFormula),
            8..=11 => OracleAnswer::settled(5, PathFormula),
            _ => OracleAnswer::settled(6, PathFormula),
        },
        Family::Cycle(n) => match n {
            0..=2 => OracleAnswer::Unsettled,
            3 => OracleAnswer::settled(3, CycleFormula),
            4 => OracleAnswer::settled(4, CycleFormula),
            5 | 7 => OracleAnswer::settled(5, CycleFormula),
            _ => OracleAnswer::settled(6, CycleFormula),
        },
        Family::Complete(n) => {
            if n >= 1 {
                OracleAnswer::settled(n, CompleteGraphRule)
            } else {
                OracleAnswer::Unsettled
            }
        }
        Family::Star(leaves) => match leaves {
            0 => OracleAnswer::settled(1, CompleteGraphRule),
            1 => OracleAnswer::settled(2, CompleteGraphRule),
            _ => OracleAnswer::settled(0, StarRule),
        },
        Family::Friendship(k) => match k {
            0 => OracleAnswer::Unsettled,
            // a single triangle is complete, so the exclusion does not apply
            1 => OracleAnswer::settled(3, CompleteGraphRule),
            _ => OracleAnswer::settled(0, FriendshipRule),
        },
        Family::CompleteBipartite(r, s) => {
            let (hi, lo) = (r.max(s), r.min(s));
            match (hi, lo) {
                (0, _) => OracleAnswer::Unsettled,
                (1, 0) => OracleAnswer::settled(1, CompleteGraphRule),
                (_, 0) => OracleAnswer::Unsettled,
                (1, 1) => OracleAnswer::settled(2, CompleteGraphRule),
                (_, 1) => OracleAnswer::settled(0, StarRule),
                _ if hi == lo => OracleAnswer::settled(2 * hi, CompleteBipartiteFormula),
                _ => OracleAnswer::settled(2, CompleteBipartiteFormula),
            }
        }
        Family::FamilyG(params) => {
            let order = params.order();
            if order >= 4 {
                OracleAnswer::settled(order, TwoCliqueFamilyRule)
            } else if order >= 1 && params.p == 0 {
                // no side cliques: the graph is K_{r+s}
                OracleAnswer::settled(order, CompleteGraphRule)
            } else {
                OracleAnswer::Unsettled
            }
        }
    }
}

/// Closed-form plain coalition number of a family member, where known:
/// complete graphs, cycles (regular, so plain and strong coincide), and the
/// lopsided complete bipartite range used for gap comparisons.
pub fn c_oracle(family: &Family) -> OracleAnswer {
    use ValueSource::*;
    match *family {
        Family::Complete(n) => {
            if n >= 1 {
                OracleAnswer::settled(n, CompleteGraphRule)
            } else {
                OracleAnswer::Unsettled
            }
        }
        Family::Cycle(_) => sc_oracle(family),
        Family::Path(n) if n <= 2 && n >= 1 => OracleAnswer::settled(n, CompleteGraphRule),
        Family::Star(0) => OracleAnswer::settled(1, CompleteGraphRule),
        Family::Star(1) => OracleAnswer::settled(2, CompleteGraphRule),
        Family::Friendship(1) => OracleAnswer::settled(3, CompleteGraphRule),
        Family::CompleteBipartite(r, s) => {
            let (hi, lo) = (r.max(s), r.min(s));
            match (hi, lo) {
                (1, 0) => OracleAnswer::settled(1, CompleteGraphRule),
                (1, 1) => OracleAnswer::settled(2, CompleteGraphRule),
                _ if hi > lo && lo > 1 => OracleAnswer::settled(hi + lo, CompleteBipartiteFormula),
                _ => OracleAnswer::Unsettled,
            }
        }
        Family::FamilyG(params) if params.p == 0 && (1..=3).contains(&params.order()) => {
            OracleAnswer::settled(params.order(), CompleteGraphRule)
        }
        _ => OracleAnswer::Unsettled,
    }
}

/// True for graphs that are not complete yet have a vertex adjacent to all
/// others. No strong coalition partition exists for them: the universal
/// vertex's block can be completed by nothing.
pub fn family_f_member(g: &Graph) -> bool {
    !g.is_complete() && !g.universal_vertices().is_empty()
}

/// Outcome of checking one two-clique family member against its closed form.
#[derive(Clone, Debug)]
pub struct FamilyGCheck {
    pub graph: Graph,
    /// True when the all-singletons partition is valid and the solver's
    /// maximum equals the order.
    pub sc_equals_order: bool,
}

/// Builds the family member and verifies, by exact search, that its strong
/// coalition number equals its order with singletons as a witness.
pub fn family_g_check(params: &FamilyGParams) -> Result<FamilyGCheck> {
    let order = params.order();
    if order < 4 {
        return Err(Error::InvalidParameter(format!(
            "two-clique family check needs order >= 4, got {order}"
        )));
    }
    let graph = generate(&Family::FamilyG(*params))?;
    let singles = Partition::singletons(order);
    let singles_valid = validate_partition(&graph, &singles, DominationStyle::Strong)?.valid;
    let solved = solve(&graph, DominationStyle::Strong)?;
    Ok(FamilyGCheck {
        graph,
        sc_equals_order: singles_valid && solved.value == order,
    })
}
