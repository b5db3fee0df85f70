//! The coalition graph of a valid partition: one vertex per block, an edge
//! between two blocks whose union dominates while neither does alone.

use crate::coalition::{validate_partition, Partition};
use crate::domination::DominationStyle;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Coalition graph over the blocks of a validated partition. Block i is
/// named `V{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalitionGraph {
    partition: Partition,
    edges: Vec<(usize, usize)>,
}

impl CoalitionGraph {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn vertex_count(&self) -> usize {
        self.partition.len()
    }

    /// Edges as 0-based block-index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Builds the coalition graph. The partition must pass
/// [`validate_partition`]; otherwise the first failing block is reported.
pub fn build_scg(g: &Graph, p: &Partition, style: DominationStyle) -> Result<CoalitionGraph> {
    let review = validate_partition(g, p, style)?;
    if let Some(bad) = review.verdicts.iter().find(|v| !v.status.is_acceptable()) {
        return Err(Error::InvalidCoalitionPartition {
            index: bad.block_index,
            status: bad.status,
        });
    }
    let mut edges = Vec::new();
    for verdict in &review.verdicts {
        for &j in &verdict.partners {
            if verdict.block_index < j {
                edges.push((verdict.block_index, j));
            }
        }
    }
    edges.sort_unstable();
    Ok(CoalitionGraph {
        partition: p.clone(),
        edges,
    })
}

/// DOT text for the coalition graph. Nodes are listed ascending with the
/// block contents (1-based vertex ids) in the label, then the edges sorted;
/// output is byte-stable for a given graph.
pub fn export_dot(cg: &CoalitionGraph) -> String {
    let mut out = String::from("graph coalition {\n");
    for (i, block) in cg.partition.blocks().iter().enumerate() {
        let ids: Vec<String> = block.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&format!(
            "  V{} [label=\"V{} = {{{}}}\"];\n",
            i + 1,
            i + 1,
            ids.join(",")
        ));
    }
    for &(i, j) in &cg.edges {
        out.push_str(&format!("  V{} -- V{};\n", i + 1, j + 1));
    }
    out.push_str("}\n");
    out
}
