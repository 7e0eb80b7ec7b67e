//! Hasse diagrams of fixed-point families and their DOT rendering.

use crate::family::FixedPointFamily;
use crate::set::Subset;

/// The cover relation of ⊆ restricted to the family members: the edge
/// (x, y) means x ⊊ y with no member strictly between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    nodes: Vec<Subset>,
    edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Nodes in canonical member order.
    pub fn nodes(&self) -> &[Subset] {
        &self.nodes
    }

    /// Edges as (lower, upper) node indices, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_subsets(&self) -> impl Iterator<Item = (&Subset, &Subset)> {
        self.edges
            .iter()
            .map(|&(a, b)| (&self.nodes[a], &self.nodes[b]))
    }

    /// Deterministic DOT rendering: nodes sorted by (cardinality, bit
    /// pattern), edges drawn from lower to upper.
    pub fn to_dot(&self) -> String {
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by_key(|&i| (self.nodes[i].len(), i));
        let mut dot_id = vec![0usize; self.nodes.len()];
        for (pos, &node) in order.iter().enumerate() {
            dot_id[node] = pos;
        }
        let mut out = String::new();
        out.push_str("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for &i in &order {
            out.push_str(&format!(
                "  n{} [label=\"{}\"];\n",
                dot_id[i], self.nodes[i]
            ));
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (dot_id[a], dot_id[b]))
            .collect();
        edges.sort();
        for (a, b) in edges {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl FixedPointFamily {
    /// The transitive reduction of ⊆ on the members.
    pub fn hasse(&self) -> HasseDiagram {
        let nodes = self.members().to_vec();
        let mut edges = Vec::new();
        for (i, lower) in nodes.iter().enumerate() {
            for (j, upper) in nodes.iter().enumerate() {
                if lower.is_proper_subset_of(upper) {
                    let between = nodes
                        .iter()
                        .any(|z| lower.is_proper_subset_of(z) && z.is_proper_subset_of(upper));
                    if !between {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges.sort();
        HasseDiagram { nodes, edges }
    }
}
