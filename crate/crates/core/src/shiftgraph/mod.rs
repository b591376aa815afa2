//! Partial shift graphs: nodes are hypergraphs, and an edge `S → T` records every
//! permutation `w` with `Δ_{𝔯(w)}(S) = T ≠ S`.

mod export;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combstruct::{all_subsets, binomial, UniformHypergraph};
use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::shiftcore::{prepare, GenericMatrix, PreparedMatrix, ShiftPlan};
use crate::symgroup::Permutation;

pub use export::{contracted_to_dot, contracted_to_json, parse_json};

/// Default limit on the number of nodes `build_psg` will enumerate.
pub const DEFAULT_NODE_CAP: u64 = 20_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftGraph {
    n: usize,
    k: usize,
    nodes: Vec<UniformHypergraph>,
    edges: BTreeMap<(usize, usize), BTreeSet<Permutation>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedShiftGraph {
    pub nodes: Vec<UniformHypergraph>,
    pub edges: BTreeSet<(usize, usize)>,
}

/// Result of a topological sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Acyclicity {
    /// Node indices in a topological order.
    Acyclic(Vec<usize>),
    /// Node indices along a directed cycle.
    Cycle(Vec<usize>),
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic(_))
    }
}

fn topological_sort(num_nodes: usize, edges: impl Iterator<Item = (usize, usize)> + Clone) -> Acyclicity {
    let mut indegree = vec![0usize; num_nodes];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); num_nodes];
    for (a, b) in edges {
        indegree[b] += 1;
        out[a].push(b);
    }
    let mut queue: VecDeque<usize> = (0..num_nodes).filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::with_capacity(num_nodes);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &b in &out[v] {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                queue.push_back(b);
            }
        }
    }
    if order.len() == num_nodes {
        return Acyclicity::Acyclic(order);
    }
    // every remaining node has a remaining predecessor; walk backwards until a repeat
    let mut pred = vec![usize::MAX; num_nodes];
    for (a, targets) in out.iter().enumerate() {
        for &b in targets {
            if indegree[a] > 0 && indegree[b] > 0 {
                pred[b] = a;
            }
        }
    }
    let mut v = (0..num_nodes).find(|&v| indegree[v] > 0).unwrap();
    let mut seen = HashMap::new();
    let mut path = Vec::new();
    while !seen.contains_key(&v) {
        seen.insert(v, path.len());
        path.push(v);
        v = pred[v];
    }
    let mut cycle = path[seen[&v]..].to_vec();
    cycle.reverse();
    Acyclicity::Cycle(cycle)
}

fn prepare_all(n: usize, plan: ShiftPlan, ctx: &FieldContext) -> Result<Vec<(Permutation, PreparedMatrix)>> {
    let ch = ctx.characteristic().value();
    Permutation::all(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|w| {
            let g = prepare(&GenericMatrix::build_r(&w, ch), &[plan], ctx)?;
            Ok((w, g))
        })
        .collect()
}

impl ShiftGraph {
    fn from_parts(
        n: usize,
        k: usize,
        nodes: Vec<UniformHypergraph>,
        raw_edges: impl IntoIterator<Item = (UniformHypergraph, UniformHypergraph, Permutation)>,
    ) -> Self {
        let mut nodes = nodes;
        nodes.sort();
        nodes.dedup();
        let index: HashMap<&UniformHypergraph, usize> = nodes.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut edges: BTreeMap<(usize, usize), BTreeSet<Permutation>> = BTreeMap::new();
        for (s, t, w) in raw_edges {
            edges.entry((index[&s], index[&t])).or_default().insert(w);
        }
        ShiftGraph { n, k, nodes, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> &[UniformHypergraph] {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeMap<(usize, usize), BTreeSet<Permutation>> {
        &self.edges
    }

    pub fn node_index(&self, s: &UniformHypergraph) -> Option<usize> {
        self.nodes.binary_search(s).ok()
    }

    pub fn num_witnesses(&self) -> usize {
        self.edges.values().map(BTreeSet::len).sum()
    }

    /// Nodes without outgoing edges.
    pub fn sinks(&self) -> Vec<&UniformHypergraph> {
        let sources: BTreeSet<usize> = self.edges.keys().map(|&(a, _)| a).collect();
        (0..self.nodes.len()).filter(|i| !sources.contains(i)).map(|i| &self.nodes[i]).collect()
    }

    pub fn is_acyclic(&self) -> Acyclicity {
        topological_sort(self.nodes.len(), self.edges.keys().copied())
    }

    /// Quotient by `S ∼ T ⇔ Δ(S) = Δ(T)`, dropping the loops this creates.
    pub fn contract(&self, ctx: &FieldContext) -> Result<ContractedShiftGraph> {
        if self.nodes.is_empty() {
            return Ok(ContractedShiftGraph { nodes: Vec::new(), edges: BTreeSet::new() });
        }
        let m = self.nodes[0].len();
        let w0 = Permutation::longest(self.n);
        let g = prepare(&GenericMatrix::build_r(&w0, ctx.characteristic().value()), &[ShiftPlan { k: self.k, max_edges: m }], ctx)?;
        let full: Vec<UniformHypergraph> = self.nodes.par_iter().map(|s| g.shift(s)).collect::<Result<_>>()?;
        let mut reps: Vec<UniformHypergraph> = full.clone();
        reps.sort();
        reps.dedup();
        let idx = |s: &UniformHypergraph| reps.binary_search(s).unwrap();
        let edges = self
            .edges
            .keys()
            .map(|&(a, b)| (idx(&full[a]), idx(&full[b])))
            .filter(|(a, b)| a != b)
            .collect();
        Ok(ContractedShiftGraph { nodes: reps, edges })
    }

    pub fn to_dot(&self) -> String {
        export::graph_to_dot(self)
    }

    pub fn to_json(&self) -> String {
        export::graph_to_json(self)
    }
}

impl ContractedShiftGraph {
    pub fn is_acyclic(&self) -> Acyclicity {
        topological_sort(self.nodes.len(), self.edges.iter().copied())
    }

    pub fn node_index(&self, s: &UniformHypergraph) -> Option<usize> {
        self.nodes.binary_search(s).ok()
    }

    pub fn to_dot(&self) -> String {
        contracted_to_dot(self)
    }

    pub fn to_json(&self) -> String {
        contracted_to_json(self)
    }
}

/// `PSG(n, k, m)` over all `m`-edge `k`-uniform hypergraphs on `[n]`.
pub fn build_psg(n: usize, k: usize, m: usize, ctx: &FieldContext) -> Result<ShiftGraph> {
    build_psg_capped(n, k, m, ctx, DEFAULT_NODE_CAP)
}

pub fn build_psg_capped(n: usize, k: usize, m: usize, ctx: &FieldContext, cap: u64) -> Result<ShiftGraph> {
    if k > n {
        return Err(Error::DimensionMismatch(format!("k = {k} exceeds n = {n}")));
    }
    let columns = binomial(n, k);
    if m as u64 > columns {
        return Err(Error::DimensionMismatch(format!("m = {m} exceeds C({n},{k}) = {columns}")));
    }
    let count = node_count(columns, m as u64);
    if count.as_ref().is_none_or(|&c| c > cap) {
        let nodes = count.map_or_else(|| "more than 2^64".to_string(), |c| c.to_string());
        return Err(Error::NodeCapExceeded { nodes, cap: cap as usize });
    }
    let nodes: Vec<UniformHypergraph> = all_subsets(n, k)
        .combinations(m)
        .map(|edges| UniformHypergraph::new(n, k, edges))
        .collect::<Result<_>>()?;
    let prepared = prepare_all(n, ShiftPlan { k, max_edges: m }, ctx)?;
    let raw: Vec<(UniformHypergraph, UniformHypergraph, Permutation)> = prepared
        .par_iter()
        .map(|(w, g)| {
            let mut out = Vec::new();
            for s in &nodes {
                let t = g.shift(s)?;
                if t != *s {
                    out.push((s.clone(), t, w.clone()));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(ShiftGraph::from_parts(n, k, nodes, raw))
}

fn node_count(columns: u64, m: u64) -> Option<u64> {
    let m = m.min(columns - m);
    let mut acc: u128 = 1;
    for i in 0..m {
        acc = acc * (columns - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `PSG(S)`: everything reachable from `S` by partial shifts.
pub fn build_psg_from(s: &UniformHypergraph, ctx: &FieldContext) -> Result<ShiftGraph> {
    explore(s, ctx, None)
}

/// As [`build_psg_from`], but processing the worklist in a seeded random order.
pub fn build_psg_from_shuffled(s: &UniformHypergraph, ctx: &FieldContext, order_seed: u64) -> Result<ShiftGraph> {
    explore(s, ctx, Some(order_seed))
}

fn explore(start: &UniformHypergraph, ctx: &FieldContext, order_seed: Option<u64>) -> Result<ShiftGraph> {
    let (n, k) = (start.n(), start.k());
    let prepared = prepare_all(n, ShiftPlan { k, max_edges: start.len() }, ctx)?;
    let mut rng = order_seed.map(ChaCha8Rng::seed_from_u64);
    let mut seen: BTreeSet<UniformHypergraph> = BTreeSet::from([start.clone()]);
    let mut work = vec![start.clone()];
    let mut raw = Vec::new();
    while !work.is_empty() {
        let s = match rng.as_mut() {
            Some(r) => {
                let i = r.gen_range(0..work.len());
                work.swap_remove(i)
            }
            None => work.remove(0),
        };
        let images: Vec<(Permutation, UniformHypergraph)> = prepared
            .par_iter()
            .map(|(w, g)| Ok((w.clone(), g.shift(&s)?)))
            .collect::<Result<_>>()?;
        for (w, t) in images {
            if t != s {
                if seen.insert(t.clone()) {
                    work.push(t.clone());
                }
                raw.push((s.clone(), t, w));
            }
        }
    }
    Ok(ShiftGraph::from_parts(n, k, seen.into_iter().collect(), raw))
}
