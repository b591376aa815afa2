use std::fmt;

use serde::{Deserialize, Serialize};

use super::subset::{all_subsets, binomial, dominates, parse_subset, KSubset, MAX_N};
use crate::error::{Error, Result};

/// A `k`-uniform hypergraph on `[n]` with lex-sorted, distinct edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniformHypergraph {
    n: usize,
    k: usize,
    edges: Vec<KSubset>,
}

impl UniformHypergraph {
    pub fn new(n: usize, k: usize, mut edges: Vec<KSubset>) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::Unsupported(format!("n = {n} exceeds {MAX_N}")));
        }
        if k > n {
            return Err(Error::DimensionMismatch(format!("edge size {k} exceeds n = {n}")));
        }
        for e in &edges {
            if e.n() != n || e.k() != k {
                return Err(Error::DimensionMismatch(format!("edge {e} is not a {k}-subset of [{n}]")));
            }
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse(format!("duplicate edge {}", w[0])));
        }
        Ok(UniformHypergraph { n, k, edges })
    }

    pub fn empty(n: usize, k: usize) -> Self {
        UniformHypergraph { n, k, edges: Vec::new() }
    }

    pub fn complete(n: usize, k: usize) -> Self {
        UniformHypergraph { n, k, edges: all_subsets(n, k).collect() }
    }

    /// Edges already known to be valid and lex-sorted.
    pub(crate) fn from_sorted(n: usize, k: usize, edges: Vec<KSubset>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        UniformHypergraph { n, k, edges }
    }

    /// Parses edges such as `["12", "23"]` or `["1,2", "2,3"]`.
    pub fn parse(n: usize, k: usize, edges: &[&str]) -> Result<Self> {
        let edges = edges.iter().map(|e| parse_subset(n, e)).collect::<Result<Vec<_>>>()?;
        UniformHypergraph::new(n, k, edges)
    }

    pub fn from_vertex_lists(n: usize, k: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let edges = edges.iter().map(|e| KSubset::new(n, e)).collect::<Result<Vec<_>>>()?;
        UniformHypergraph::new(n, k, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[KSubset] {
        &self.edges
    }

    pub fn contains(&self, e: &KSubset) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() as u64 == binomial(self.n, self.k)
    }

    /// Initial in the domination order, checked through the covers `σ ∖ {j} ∪ {i}`, `i < j`.
    pub fn is_shifted(&self) -> bool {
        self.edges.iter().all(|e| {
            e.vertices().all(|j| (1..j).filter(|&i| !e.contains(i)).all(|i| self.contains(&e.without(j).with(i))))
        })
    }

    /// Lex comparison of sorted edge lists, as used to order partial shifts.
    pub fn lex_cmp(&self, other: &UniformHypergraph) -> std::cmp::Ordering {
        self.edges.cmp(&other.edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&HypergraphJson::from(self)).expect("hypergraph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: HypergraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }

    /// One edge per line, space-separated vertices; `n` defaults to the largest vertex.
    pub fn from_text(text: &str, n: Option<usize>) -> Result<Self> {
        let rows = parse_rows(text)?;
        let n = n.unwrap_or_else(|| rows.iter().flatten().copied().max().unwrap_or(0));
        let k = rows.first().map_or(0, Vec::len);
        UniformHypergraph::from_vertex_lists(n, k, &rows)
    }

    pub fn to_text(&self) -> String {
        self.edges.iter().map(|e| join_vertices(e) + "\n").collect()
    }
}

/// Brute-force shiftedness: closure under the full domination order.
pub fn is_shifted_bruteforce(s: &UniformHypergraph) -> bool {
    all_subsets(s.n(), s.k())
        .all(|rho| !s.edges().iter().any(|sigma| dominates(&rho, sigma).unwrap()) || s.contains(&rho))
}

pub(crate) fn join_vertices(e: &KSubset) -> String {
    e.vertices().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub(crate) fn parse_rows(text: &str) -> Result<Vec<Vec<usize>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex {t:?}"))))
                .collect()
        })
        .collect()
}

impl fmt::Display for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
}

impl From<&UniformHypergraph> for HypergraphJson {
    fn from(h: &UniformHypergraph) -> Self {
        HypergraphJson { n: h.n, k: h.k, edges: h.edges.iter().map(KSubset::to_vec).collect() }
    }
}

impl TryFrom<HypergraphJson> for UniformHypergraph {
    type Error = Error;
    fn try_from(raw: HypergraphJson) -> Result<Self> {
        UniformHypergraph::from_vertex_lists(raw.n, raw.k, &raw.edges)
    }
}

impl Serialize for UniformHypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HypergraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniformHypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        HypergraphJson::deserialize(d)?.try_into().map_err(serde::de::Error::custom)
    }
}
