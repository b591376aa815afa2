use rayon::prelude::*;
use serde::Serialize;

use super::{betti_numbers, preserves_betti_cert, shift_complex, BettiVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combstruct::{random_complex, SimplicialComplex, UniformHypergraph};
use crate::error::Result;
use crate::field::FieldContext;
use crate::shiftgraph::{build_psg, build_psg_from, Acyclicity, ContractedShiftGraph};
use crate::symgroup::Permutation;

#[derive(Debug, Clone)]
pub enum ScanInstance {
    /// Betti monotonicity under every partial shift of a complex.
    Complex { name: String, complex: SimplicialComplex },
    /// Acyclicity of the contracted `PSG(n, k, m)`.
    Psg { n: usize, k: usize, m: usize },
    /// Acyclicity of the contracted graph reachable from a hypergraph.
    Reachable { name: String, start: UniformHypergraph },
    /// Acyclicity of an already contracted graph.
    Contracted { name: String, graph: ContractedShiftGraph },
}

#[derive(Debug, Clone, Serialize)]
pub struct MonotonicityViolation {
    pub instance: String,
    pub permutation: Permutation,
    pub before: BettiVector,
    pub after: BettiVector,
    pub shifted: SimplicialComplex,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexSummary {
    pub instance: String,
    pub betti: BettiVector,
    pub permutations: usize,
    /// Permutations whose partial shift has exactly the same Betti numbers.
    pub preserving: Vec<Permutation>,
    pub certified: usize,
    pub certified_preserving: usize,
    pub certified_near_cones: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AcyclicityResult {
    pub instance: String,
    pub nodes: usize,
    pub edges: usize,
    pub acyclic: bool,
    /// Nodes along a directed cycle, when one exists.
    pub cycle: Option<Vec<UniformHypergraph>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub complexes: Vec<ComplexSummary>,
    pub violations: Vec<MonotonicityViolation>,
    pub acyclicity: Vec<AcyclicityResult>,
}

impl ScanReport {
    pub fn has_counterexamples(&self) -> bool {
        !self.violations.is_empty() || self.acyclicity.iter().any(|a| !a.acyclic)
    }
}

fn acyclicity(instance: String, g: &ContractedShiftGraph) -> AcyclicityResult {
    let result = g.is_acyclic();
    let cycle = match &result {
        Acyclicity::Cycle(c) => Some(c.iter().map(|&i| g.nodes[i].clone()).collect()),
        Acyclicity::Acyclic(_) => None,
    };
    AcyclicityResult { instance, nodes: g.nodes.len(), edges: g.edges.len(), acyclic: cycle.is_none(), cycle }
}

fn scan_complex(
    name: &str,
    k: &SimplicialComplex,
    ctx: &FieldContext,
) -> Result<(ComplexSummary, Vec<MonotonicityViolation>)> {
    let ch = ctx.characteristic();
    let before = betti_numbers(k, ch);
    let n = k.n();
    let results: Vec<(Permutation, SimplicialComplex, BettiVector)> = Permutation::all(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|w| {
            let shifted = shift_complex(k, &w, ctx)?;
            let b = betti_numbers(&shifted, ch);
            Ok((w, shifted, b))
        })
        .collect::<Result<_>>()?;
    let mut summary = ComplexSummary {
        instance: name.to_string(),
        betti: before.clone(),
        permutations: results.len(),
        preserving: Vec::new(),
        certified: 0,
        certified_preserving: 0,
        certified_near_cones: 0,
    };
    let mut violations = Vec::new();
    for (w, shifted, after) in results {
        let certified = preserves_betti_cert(&w, n);
        if after == before {
            summary.preserving.push(w.clone());
        }
        if certified {
            summary.certified += 1;
            summary.certified_preserving += usize::from(after == before);
            summary.certified_near_cones += usize::from(shifted.is_near_cone());
        }
        if !after.dominates(&before) {
            violations.push(MonotonicityViolation {
                instance: name.to_string(),
                permutation: w,
                before: before.clone(),
                after,
                shifted,
            });
        }
    }
    Ok((summary, violations))
}

/// `count` random complexes of dimension at most 2 on `n` vertices, named `random-0`, `random-1`, ...
pub fn random_instances(n: usize, count: usize, seed: u64) -> Vec<ScanInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| ScanInstance::Complex { name: format!("random-{i}"), complex: random_complex(&mut rng, n, 2) })
        .collect()
}

/// Checks Betti monotonicity under partial shifts and acyclicity of contracted
/// graphs; anything contradicting either expectation is reported, never raised.
pub fn conjecture_scan(instances: &[ScanInstance], ctx: &FieldContext) -> Result<ScanReport> {
    let mut report = ScanReport {
        characteristic: ctx.characteristic().value(),
        complexes: Vec::new(),
        violations: Vec::new(),
        acyclicity: Vec::new(),
    };
    for inst in instances {
        match inst {
            ScanInstance::Complex { name, complex } => {
                let (summary, violations) = scan_complex(name, complex, ctx)?;
                report.complexes.push(summary);
                report.violations.extend(violations);
            }
            ScanInstance::Psg { n, k, m } => {
                let g = build_psg(*n, *k, *m, ctx)?.contract(ctx)?;
                report.acyclicity.push(acyclicity(format!("PSG({n},{k},{m})"), &g));
            }
            ScanInstance::Reachable { name, start } => {
                let g = build_psg_from(start, ctx)?.contract(ctx)?;
                report.acyclicity.push(acyclicity(name.clone(), &g));
            }
            ScanInstance::Contracted { name, graph } => report.acyclicity.push(acyclicity(name.clone(), graph)),
        }
    }
    Ok(report)
}
