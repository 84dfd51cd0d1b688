//! Graphviz output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::automata::{Dfr, Ffa};

fn quote(text: &str) -> String {
    format!("\"{}\"", text.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Parallel edges between the same pair of states are merged into one edge
/// with a comma-separated label.
fn edges(out: &mut String, labelled: BTreeMap<(usize, usize), Vec<String>>) {
    for ((src, dst), labels) in labelled {
        let _ = writeln!(out, "  s{src} -> s{dst} [label={}];", quote(&labels.join(",")));
    }
}

pub fn dfr_to_dot(r: &Dfr) -> String {
    let mut out = String::from("digraph recognizer {\n  rankdir=LR;\n  init [shape=point];\n");
    for s in 0..r.state_count() {
        let shape = if r.is_final(s) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  s{s} [shape={shape}, label={}];", quote(r.state_name(s)));
    }
    let _ = writeln!(out, "  init -> s{};", r.initial());
    let mut labelled: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for (s, x, t) in r.dfa().edges() {
        labelled
            .entry((s, t))
            .or_default()
            .push(r.alphabet().name(x).to_string());
    }
    edges(&mut out, labelled);
    out.push_str("}\n");
    out
}

pub fn ffa_to_dot(ffa: &Ffa) -> String {
    let mut out = String::from("digraph ffa {\n  rankdir=LR;\n");
    for (s, name) in ffa.states().iter().enumerate() {
        let _ = writeln!(out, "  s{s} [shape=circle, label={}];", quote(name));
    }
    let mut labelled: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for (a, x, b, r) in ffa.transitions() {
        labelled
            .entry((a, b))
            .or_default()
            .push(format!("{}/{r}", ffa.alphabet().name(x)));
    }
    edges(&mut out, labelled);
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::directability::{build_recognizer, DirectingKind};
    use crate::fixtures;

    #[test]
    fn recognizer_graph() {
        let r = build_recognizer(&fixtures::ex31(), DirectingKind::D3).unwrap();
        let dot = dfr_to_dot(&r);
        assert!(dot.starts_with("digraph recognizer {"));
        assert!(dot.contains("init -> s0;"));
        assert!(dot.contains("label=\"{{a},{b},{c}}\""));
        assert!(dot.contains("doublecircle"));
        assert_eq!(dot.matches(" -> ").count() - 1, {
            let mut pairs: Vec<_> = r.dfa().edges().map(|(s, _, t)| (s, t)).collect();
            pairs.sort();
            pairs.dedup();
            pairs.len()
        });
    }

    #[test]
    fn automaton_graph() {
        let dot = ffa_to_dot(&fixtures::ex31());
        assert!(dot.contains("s2 -> s2 [label=\"x/3/5\"];"));
        assert!(dot.contains("s1 -> s2 [label=\"x/2/5,y/1/10\"];"));
    }
}
