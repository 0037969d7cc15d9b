//! DOT rendering of concept lattices: the covering-pair digraph with
//! reduced labels, where each object names the smallest concept whose
//! extent contains it and each attribute the largest whose intent does.

use crate::concepts::ConceptLattice;
use crate::context::FormalContext;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The Hasse diagram as a DOT digraph, drawn bottom-up. Node order
/// follows the lattice's enumeration order and edges are the covering
/// pairs, so equal inputs render byte-identically.
pub fn export_dot(ctx: &FormalContext, lattice: &ConceptLattice) -> String {
    let mut out = String::new();
    out.push_str("digraph concept_lattice {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=record];\n");
    for (i, c) in lattice.concepts().iter().enumerate() {
        let attrs: Vec<&str> = (0..ctx.attribute_count())
            .filter(|&m| ctx.attribute_closure(1 << m) == c.intent)
            .map(|m| ctx.attribute_labels()[m].as_str())
            .collect();
        let objs: Vec<&str> = (0..ctx.object_count())
            .filter(|&g| ctx.object_closure(1 << g) == c.extent)
            .map(|g| ctx.object_labels()[g].as_str())
            .collect();
        out.push_str(&format!(
            "  c{i} [label=\"{}|{}\"];\n",
            escape(&attrs.join(" ")),
            escape(&objs.join(" "))
        ));
    }
    for (lower, upper) in lattice.covering_pairs() {
        out.push_str(&format!("  c{lower} -> c{upper};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concepts::enumerate_concepts;
    use crate::samples;

    #[test]
    fn single_concept_renders_one_node_without_edges() {
        let ctx = FormalContext::from_pairs(1, 1, &[(0, 0)]).unwrap();
        let text = export_dot(&ctx, &enumerate_concepts(&ctx));
        assert_eq!(text.matches("label=").count(), 1);
        assert!(!text.contains("->"));
        assert!(text.contains("c0 [label=\"m1|g1\"];"));
    }

    #[test]
    fn two_chain_renders_one_edge() {
        let ctx = FormalContext::from_pairs(1, 1, &[]).unwrap();
        let lattice = enumerate_concepts(&ctx);
        assert_eq!(lattice.len(), 2);
        let text = export_dot(&ctx, &lattice);
        assert_eq!(text.matches("->").count(), 1);
    }

    #[test]
    fn toy_lattice_mentions_every_carrier_label_once() {
        let ctx = samples::toy_context();
        let text = export_dot(&ctx, &enumerate_concepts(&ctx));
        for label in ctx.object_labels().iter().chain(ctx.attribute_labels()) {
            assert_eq!(
                text.matches(&format!("{label}")).count(),
                1,
                "{label} should label exactly one node"
            );
        }
        assert!(text.starts_with("digraph concept_lattice {"));
        assert!(text.ends_with("}\n"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let ctx = samples::toy_context();
        let a = export_dot(&ctx, &enumerate_concepts(&ctx));
        let b = export_dot(&ctx, &enumerate_concepts(&ctx));
        assert_eq!(a, b);
    }

    #[test]
    fn quotes_in_labels_are_escaped() {
        let ctx = FormalContext::new(
            vec![0b1],
            1,
            Some(vec!["g\"q".into()]),
            Some(vec!["m\\s".into()]),
        )
        .unwrap();
        let text = export_dot(&ctx, &enumerate_concepts(&ctx));
        assert!(text.contains("m\\\\s|g\\\"q"));
    }
}
