use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{ContractedShiftGraph, ShiftGraph};
use crate::combstruct::UniformHypergraph;
use crate::error::{Error, Result};
use crate::symgroup::Permutation;

fn node_lists(nodes: &[UniformHypergraph]) -> Vec<Vec<Vec<usize>>> {
    nodes.iter().map(|s| s.edges().iter().map(|e| e.to_vec()).collect()).collect()
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    k: usize,
    nodes: Vec<Vec<Vec<usize>>>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    src: usize,
    dst: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    witnesses: Option<Vec<Permutation>>,
}

pub(super) fn graph_to_json(g: &ShiftGraph) -> String {
    let raw = GraphJson {
        n: g.n,
        k: g.k,
        nodes: node_lists(&g.nodes),
        edges: g
            .edges
            .iter()
            .map(|(&(src, dst), ws)| EdgeJson { src, dst, witnesses: Some(ws.iter().cloned().collect()) })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("graph serializes")
}

/// Reads the JSON written by [`ShiftGraph::to_json`].
pub fn parse_json(text: &str) -> Result<ShiftGraph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let nodes = raw
        .nodes
        .iter()
        .map(|edges| UniformHypergraph::from_vertex_lists(raw.n, raw.k, edges))
        .collect::<Result<Vec<_>>>()?;
    if nodes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parse("nodes must be distinct and sorted".into()));
    }
    let mut edges = BTreeMap::new();
    for e in raw.edges {
        if e.src >= nodes.len() || e.dst >= nodes.len() {
            return Err(Error::Parse(format!("edge {} -> {} refers to a missing node", e.src, e.dst)));
        }
        let ws: BTreeSet<Permutation> = e.witnesses.unwrap_or_default().into_iter().collect();
        if ws.is_empty() {
            return Err(Error::Parse(format!("edge {} -> {} has no witness", e.src, e.dst)));
        }
        edges.insert((e.src, e.dst), ws);
    }
    Ok(ShiftGraph { n: raw.n, k: raw.k, nodes, edges })
}

pub(super) fn graph_to_dot(g: &ShiftGraph) -> String {
    let mut out = String::from("digraph psg {\n");
    for (i, s) in g.nodes.iter().enumerate() {
        let shape = if s.is_shifted() { ", shape=box" } else { "" };
        writeln!(out, "  n{i} [label=\"{s}\"{shape}];").unwrap();
    }
    for (&(a, b), ws) in &g.edges {
        writeln!(out, "  n{a} -> n{b} [label=\"{}\"];", ws.len()).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn contracted_to_dot(g: &ContractedShiftGraph) -> String {
    let mut out = String::from("digraph contracted {\n");
    for (i, s) in g.nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{s}\", shape=box];").unwrap();
    }
    for (a, b) in &g.edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn contracted_to_json(g: &ContractedShiftGraph) -> String {
    let (n, k) = g.nodes.first().map_or((0, 0), |s| (s.n(), s.k()));
    let raw = GraphJson {
        n,
        k,
        nodes: node_lists(&g.nodes),
        edges: g.edges.iter().map(|&(src, dst)| EdgeJson { src, dst, witnesses: None }).collect(),
    };
    serde_json::to_string_pretty(&raw).expect("graph serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;
    use crate::shiftgraph::{build_psg, build_psg_from};

    #[test]
    fn single_node_dot() {
        let ctx = FieldContext::randomized(0, 0).unwrap();
        let s = UniformHypergraph::parse(3, 1, &["1"]).unwrap();
        let g = build_psg_from(&s, &ctx).unwrap();
        assert_eq!(g.to_dot(), "digraph psg {\n  n0 [label=\"{1}\", shape=box];\n}\n");
    }

    #[test]
    fn json_round_trip() {
        let ctx = FieldContext::randomized(0, 0).unwrap();
        let g = build_psg(4, 2, 3, &ctx).unwrap();
        let text = g.to_json();
        let back = parse_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json(), text);
        assert!(text.contains("\"witnesses\""));
    }

    #[test]
    fn dot_is_deterministic() {
        let ctx = FieldContext::randomized(0, 0).unwrap();
        let a = build_psg(4, 2, 5, &ctx).unwrap().to_dot();
        let b = build_psg(4, 2, 5, &FieldContext::randomized(0, 77).unwrap()).unwrap().to_dot();
        assert_eq!(a, b);
        assert_eq!(a.matches("[label=").count() - a.matches(" -> ").count(), 6);
    }
}
