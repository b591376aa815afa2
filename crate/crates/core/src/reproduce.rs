//! Recomputes the bundled worked examples and diffs them against golden data.
//!
//! Each target returns a [`ReproReport`] of named checks. Targets with `n <= 4`
//! honour [`Backend::Symbolic`]; larger ones always use the randomized backend.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::combstruct::{all_subsets, binomial, KSubset, SimplicialComplex, UniformHypergraph};
use crate::error::{Error, Result};
use crate::field::{Backend, FieldContext, Monomial, MultiPoly, Var};
use crate::shiftcore::{
    combinatorial_shift, compound_rows, delta_shift, full_shift, prepare, GenericMatrix, ShiftPlan,
};
use crate::shiftgraph::{build_psg, build_psg_from, parse_json, ContractedShiftGraph, ShiftGraph};
use crate::symgroup::{parse_permutation, Permutation};
use crate::topology::{betti_numbers, conjecture_scan, shift_complex, ScanInstance};

/// Registered target names.
pub const TARGETS: &[&str] = &[
    "two-edges",
    "compound-rows",
    "vandermonde",
    "simple-transpositions",
    "psg-4-2-5",
    "rp2-shifts",
    "rp2-contracted",
    "rp2-tight",
];

pub const TWO_EDGES_JSON: &str = include_str!("../golden/two_edges.json");
pub const COMPOUND_ROWS_JSON: &str = include_str!("../golden/compound_rows.json");
pub const VANDERMONDE_JSON: &str = include_str!("../golden/vandermonde.json");
pub const PSG_4_2_5_JSON: &str = include_str!("../golden/psg_4_2_5.json");
pub const RP2_SHIFTS_JSON: &str = include_str!("../golden/rp2_shifts.json");
pub const RP2_CONTRACTED_JSON: &str = include_str!("../golden/rp2_contracted.json");
pub const RP2_TIGHT_JSON: &str = include_str!("../golden/rp2_tight.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReproOptions {
    pub backend: Backend,
    pub seed: u64,
    pub dual_prime: bool,
}

impl Default for ReproOptions {
    fn default() -> Self {
        ReproOptions { backend: Backend::Randomized, seed: 0, dual_prime: false }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproReport {
    pub target: String,
    pub backend: Backend,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl ReproReport {
    fn new(target: &str, backend: Backend) -> Self {
        ReproReport { target: target.to_string(), backend, checks: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { label: label.into(), passed, detail: detail.into() });
    }

    fn expect_eq<T: PartialEq + std::fmt::Display>(&mut self, label: &str, got: &T, want: &T) {
        let detail = if got == want { got.to_string() } else { format!("got {got}, expected {want}") };
        self.check(label, got == want, detail);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let backend = match self.backend {
            Backend::Symbolic => "symbolic",
            Backend::Randomized => "randomized",
        };
        writeln!(out, "{verdict} {} ({backend})", self.target).unwrap();
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(out, "  [{mark}] {}", c.label).unwrap();
            } else {
                writeln!(out, "  [{mark}] {}: {}", c.label, c.detail).unwrap();
            }
        }
        for n in &self.notes {
            writeln!(out, "  note: {n}").unwrap();
        }
        out
    }
}

/// Runs one registered target.
pub fn reproduce(name: &str, opts: &ReproOptions) -> Result<ReproReport> {
    match name {
        "two-edges" => two_edges(opts),
        "compound-rows" => compound_rows_target(opts),
        "vandermonde" => vandermonde(opts),
        "simple-transpositions" => simple_transpositions(opts),
        "psg-4-2-5" => psg_4_2_5(opts),
        "rp2-shifts" => rp2_shifts(opts),
        "rp2-contracted" => rp2_contracted(opts),
        "rp2-tight" => rp2_tight(opts),
        _ => Err(Error::Parse(format!("unknown target {name:?}; available: {}", TARGETS.join(", ")))),
    }
}

fn context(ch: u64, n: usize, opts: &ReproOptions, report: &mut ReproReport) -> Result<FieldContext> {
    let backend = if n <= 4 { opts.backend } else { Backend::Randomized };
    if backend != opts.backend {
        report.notes.push(format!("n = {n}: symbolic elimination skipped, randomized backend used"));
    }
    report.backend = backend;
    let ctx = match backend {
        Backend::Symbolic => FieldContext::symbolic(ch)?,
        Backend::Randomized => FieldContext::randomized(ch, opts.seed)?.with_dual_prime(opts.dual_prime && ch == 0),
    };
    Ok(ctx)
}

fn golden<T: for<'de> Deserialize<'de>>(text: &str) -> T {
    serde_json::from_str(text).expect("embedded golden data parses")
}

/// A product of variables written as two-digit names such as `"13"`.
fn term(ch: u64, vars: &[String]) -> Result<MultiPoly> {
    let mut m = Monomial::one();
    for v in vars {
        let d: Vec<usize> = v.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(
            || Error::Parse(format!("bad variable {v:?}")),
        )?;
        if d.len() != 2 {
            return Err(Error::Parse(format!("bad variable {v:?}")));
        }
        m = m.mul(&Monomial::var(Var::new(d[0], d[1])));
    }
    Ok(MultiPoly::monomial(ch, m, 1))
}

fn polynomial(ch: u64, terms: &[Vec<String>]) -> Result<MultiPoly> {
    terms.iter().try_fold(MultiPoly::zero(ch), |acc, t| Ok(acc.add(&term(ch, t)?)))
}

fn hypergraph(n: usize, k: usize, edges: &[String]) -> Result<UniformHypergraph> {
    let e: Vec<&str> = edges.iter().map(String::as_str).collect();
    UniformHypergraph::parse(n, k, &e)
}

fn complex(n: usize, facets: &[String]) -> Result<SimplicialComplex> {
    let f: Vec<&str> = facets.iter().map(String::as_str).collect();
    SimplicialComplex::parse(n, &f)
}

#[derive(Deserialize)]
struct EntryGolden {
    row: String,
    col: String,
    terms: Vec<Vec<String>>,
}

#[derive(Deserialize)]
pub struct TwoEdgesGolden {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub n: usize,
    pub k: usize,
    pub input: Vec<String>,
    pub shift: Vec<String>,
    entry: EntryGolden,
}

pub fn two_edges_golden() -> TwoEdgesGolden {
    golden(TWO_EDGES_JSON)
}

fn two_edges(opts: &ReproOptions) -> Result<ReproReport> {
    let g = two_edges_golden();
    let mut report = ReproReport::new("two-edges", opts.backend);
    let ctx = context(g.characteristic, g.n, opts, &mut report)?;
    let s = hypergraph(g.n, g.k, &g.input)?;
    let want = hypergraph(g.n, g.k, &g.shift)?;

    let x = GenericMatrix::build_x(g.n, g.characteristic);
    let rows = compound_rows(&x, &UniformHypergraph::parse(g.n, g.k, &[&g.entry.row])?);
    let got = rows
        .entry(&KSubset::new(g.n, &digits(&g.entry.row)?)?, &KSubset::new(g.n, &digits(&g.entry.col)?)?)
        .cloned()
        .unwrap_or_else(|| MultiPoly::zero(g.characteristic));
    let expected = polynomial(g.characteristic, &g.entry.terms)?;
    report.expect_eq(&format!("X^2 entry ({}, {})", g.entry.row, g.entry.col), &got, &expected);

    let via_x = delta_shift(&x, &s, &ctx)?;
    report.expect_eq("shift by X", &via_x, &want);
    let via_r = delta_shift(&GenericMatrix::build_r(&Permutation::longest(g.n), g.characteristic), &s, &ctx)?;
    report.expect_eq("shift by r(w0)", &via_r, &want);
    let full = full_shift(&s, &ctx)?;
    report.expect_eq("full shift", &full, &want);
    Ok(report)
}

fn digits(text: &str) -> Result<Vec<usize>> {
    text.chars()
        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad subset {text:?}"))))
        .collect()
}

#[derive(Deserialize)]
struct CompoundGolden {
    #[serde(rename = "char")]
    characteristic: u64,
    n: usize,
    k: usize,
    input: Vec<String>,
    compound: Vec<Vec<Vec<Vec<String>>>>,
    shift: Vec<String>,
}

fn compound_rows_target(opts: &ReproOptions) -> Result<ReproReport> {
    let g: CompoundGolden = golden(COMPOUND_ROWS_JSON);
    let mut report = ReproReport::new("compound-rows", opts.backend);
    let ctx = context(g.characteristic, g.n, opts, &mut report)?;
    let s = hypergraph(g.n, g.k, &g.input)?;
    let r = GenericMatrix::build_r(&Permutation::longest(g.n), g.characteristic);
    let rows = compound_rows(&r, &s);
    for (i, (rho, want_row)) in s.edges().iter().zip(&g.compound).enumerate() {
        let mismatches: Vec<String> = want_row
            .iter()
            .enumerate()
            .filter_map(|(j, terms)| {
                let want = polynomial(g.characteristic, terms).ok()?;
                (rows.entries[i][j] != want).then(|| format!("column {}: {}", j + 1, rows.entries[i][j]))
            })
            .collect();
        let detail = if mismatches.is_empty() {
            rows.entries[i].iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        } else {
            mismatches.join("; ")
        };
        report.check(format!("row {rho} of (U w0)^S"), mismatches.is_empty(), detail);
    }
    let got = delta_shift(&r, &s, &ctx)?;
    report.expect_eq("shift by U w0", &got, &hypergraph(g.n, g.k, &g.shift)?);
    Ok(report)
}

#[derive(Deserialize)]
pub struct VandermondeGolden {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub n: usize,
    pub k: usize,
    pub input: Vec<String>,
    pub full_shift: Vec<String>,
    pub vandermonde_shift: Vec<String>,
}

pub fn vandermonde_golden() -> VandermondeGolden {
    golden(VANDERMONDE_JSON)
}

fn vandermonde(opts: &ReproOptions) -> Result<ReproReport> {
    let g = vandermonde_golden();
    let mut report = ReproReport::new("vandermonde", opts.backend);
    let ctx = context(g.characteristic, g.n, opts, &mut report)?;
    let s = hypergraph(g.n, g.k, &g.input)?;
    let full = full_shift(&s, &ctx)?;
    report.expect_eq("full shift", &full, &hypergraph(g.n, g.k, &g.full_shift)?);
    let m = GenericMatrix::build_vandermonde(g.n, g.characteristic);
    let vdm = delta_shift(&m, &s, &ctx)?;
    report.expect_eq("Vandermonde shift", &vdm, &hypergraph(g.n, g.k, &g.vandermonde_shift)?);
    let partial = partial_shifts(&s, &ctx)?;
    let hit: Vec<&Permutation> = partial.iter().filter(|(_, t)| *t == vdm).map(|(w, _)| w).collect();
    report.check(
        "Vandermonde shift is no partial shift",
        hit.is_empty(),
        format!("{} partial shifts, {} distinct, {} equal", partial.len(), distinct(&partial), hit.len()),
    );
    Ok(report)
}

fn distinct(shifts: &[(Permutation, UniformHypergraph)]) -> usize {
    shifts.iter().map(|(_, t)| t).collect::<BTreeSet<_>>().len()
}

/// `Δ_{r(w)}(S)` for every `w` in `S_n`, in lex order of `w`.
pub fn partial_shifts(s: &UniformHypergraph, ctx: &FieldContext) -> Result<Vec<(Permutation, UniformHypergraph)>> {
    use rayon::prelude::*;
    let plan = [ShiftPlan { k: s.k(), max_edges: s.len() }];
    let ch = ctx.characteristic().value();
    Permutation::all(s.n())
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|w| {
            let t = prepare(&GenericMatrix::build_r(&w, ch), &plan, ctx)?.shift(s)?;
            Ok((w, t))
        })
        .collect()
}

/// Checks `Δ_{r(s_i)}(S) = Γ_{s_i}(S) = Δ_{γ(s_i)}(S)` for every hypergraph on
/// `[4]` with at most three edges.
fn simple_transpositions(opts: &ReproOptions) -> Result<ReproReport> {
    let n = 4;
    let max_m = 3;
    let mut report = ReproReport::new("simple-transpositions", opts.backend);
    let ctx = context(0, n, opts, &mut report)?;
    for k in 1..n {
        let plan = [ShiftPlan { k, max_edges: max_m }];
        let sets: Vec<KSubset> = all_subsets(n, k).collect();
        let mut checked = 0usize;
        let mut failures = Vec::new();
        for i in 1..n {
            let t = Permutation::simple(n, i)?;
            let r = prepare(&GenericMatrix::build_r(&t, 0), &plan, &ctx)?;
            let gamma = prepare(&GenericMatrix::build_gamma(&t, 0)?, &plan, &ctx)?;
            for m in 1..=max_m.min(sets.len()) {
                for edges in itertools::Itertools::combinations(sets.iter().cloned(), m) {
                    let s = UniformHypergraph::new(n, k, edges)?;
                    let comb = combinatorial_shift(&s, &t)?;
                    let a = r.shift(&s)?;
                    let b = gamma.shift(&s)?;
                    checked += 1;
                    if a != comb || b != comb {
                        failures.push(format!("{s} by s{i}: r gives {a}, gamma gives {b}, combinatorial {comb}"));
                    }
                }
            }
        }
        let expected: usize = (1..=max_m).map(|m| binomial(binomial(n, k) as usize, m) as usize).sum::<usize>() * (n - 1);
        let passed = failures.is_empty() && checked == expected;
        let detail = if failures.is_empty() {
            format!("{checked} cases")
        } else {
            failures.into_iter().take(3).collect::<Vec<_>>().join("; ")
        };
        report.check(format!("k = {k}, all m <= {max_m}, all s_i"), passed, detail);
    }
    Ok(report)
}

pub fn psg_4_2_5_golden() -> ShiftGraph {
    parse_json(PSG_4_2_5_JSON).expect("embedded golden graph parses")
}

fn psg_4_2_5(opts: &ReproOptions) -> Result<ReproReport> {
    let golden = psg_4_2_5_golden();
    let mut report = ReproReport::new("psg-4-2-5", opts.backend);
    let ctx = context(0, 4, opts, &mut report)?;
    let g = build_psg(4, 2, 5, &ctx)?;
    psg_invariants(&g, &mut report);
    report.check(
        "nodes, edges and witness sets match golden data",
        g == golden,
        format!("{} edges, {} witnesses", g.edges().len(), g.num_witnesses()),
    );
    Ok(report)
}

/// The properties of `PSG(4, 2, 5)` stated alongside its picture.
pub fn psg_invariants(g: &ShiftGraph, report: &mut ReproReport) {
    report.expect_eq("node count", &g.nodes().len(), &6);
    report.check("acyclic", g.is_acyclic().is_acyclic(), "");
    let sinks = g.sinks();
    let one_shifted_sink = sinks.len() == 1 && sinks[0].is_shifted();
    let sink_names: Vec<String> = sinks.iter().map(ToString::to_string).collect();
    report.check("exactly one sink and it is shifted", one_shifted_sink, sink_names.join(", "));
    report.check("identity in no witness set", g.edges().values().flatten().all(|w| !w.is_identity()), "");
    let w0 = Permutation::longest(g.n());
    let into_sink = g
        .edges()
        .iter()
        .filter(|(&(_, b), _)| sinks.first().is_some_and(|s| g.nodes()[b] == **s))
        .all(|(_, ws)| ws.contains(&w0));
    report.check("w0 witnesses every edge into the sink", into_sink, "");
}

#[derive(Deserialize)]
pub struct RpComplexGolden {
    pub facets: Vec<String>,
    pub betti_q: Vec<usize>,
    pub betti_gf2: Vec<usize>,
}

#[derive(Deserialize)]
pub struct RpRowGolden {
    pub name: String,
    pub perm: String,
    pub facets: Vec<String>,
    pub betti: Vec<usize>,
}

#[derive(Deserialize)]
pub struct RpShiftsGolden {
    pub n: usize,
    pub complex: RpComplexGolden,
    pub rows: Vec<RpRowGolden>,
    pub gf2_full_shift: String,
}

impl RpShiftsGolden {
    pub fn complex(&self) -> SimplicialComplex {
        complex(self.n, &self.complex.facets).expect("golden complex")
    }

    pub fn row_complex(&self, name: &str) -> SimplicialComplex {
        let row = self.rows.iter().find(|r| r.name == name).expect("golden row");
        complex(self.n, &row.facets).expect("golden row complex")
    }

    pub fn permutation(&self, name: &str) -> Permutation {
        let row = self.rows.iter().find(|r| r.name == name).expect("golden row");
        parse_permutation(self.n, &row.perm).expect("golden permutation")
    }
}

pub fn rp2_shifts_golden() -> RpShiftsGolden {
    golden(RP2_SHIFTS_JSON)
}

fn vec_string(v: &[usize]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn rp2_shifts(opts: &ReproOptions) -> Result<ReproReport> {
    let g = rp2_shifts_golden();
    let mut report = ReproReport::new("rp2-shifts", opts.backend);
    let q = context(0, g.n, opts, &mut report)?;
    let two = context(2, g.n, opts, &mut report)?;
    report.notes.dedup();
    let k = g.complex();
    let b0 = betti_numbers(&k, q.characteristic()).betti;
    report.expect_eq("rational Betti numbers of K", &vec_string(&b0), &vec_string(&g.complex.betti_q));
    let b2 = betti_numbers(&k, two.characteristic()).betti;
    report.expect_eq("GF(2) Betti numbers of K", &vec_string(&b2), &vec_string(&g.complex.betti_gf2));
    for row in &g.rows {
        let w = parse_permutation(g.n, &row.perm)?;
        let shifted = shift_complex(&k, &w, &q)?;
        let want = complex(g.n, &row.facets)?;
        report.expect_eq(&format!("{} = shift by r({})", row.name, row.perm), &shifted, &want);
        report.check(format!("{} is shifted", row.name), shifted.is_shifted(), "");
        let betti = betti_numbers(&shifted, q.characteristic()).betti;
        report.expect_eq(&format!("Betti numbers of {}", row.name), &vec_string(&betti), &vec_string(&row.betti));
    }
    let gf2 = shift_complex(&k, &Permutation::longest(g.n), &two)?;
    let want = g.row_complex(&g.gf2_full_shift);
    report.expect_eq(&format!("GF(2) full shift = {}", g.gf2_full_shift), &gf2, &want);
    Ok(report)
}

#[derive(Deserialize)]
pub struct ContractedGolden {
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Deserialize)]
pub struct RpContractedGolden {
    pub q: ContractedGolden,
    pub gf2: ContractedGolden,
}

pub fn rp2_contracted_golden() -> RpContractedGolden {
    golden(RP2_CONTRACTED_JSON)
}

/// Contracted shift graph reachable from the triangles of `K`, in the given characteristic.
pub fn rp2_contracted_graph(ctx: &FieldContext) -> Result<ContractedShiftGraph> {
    let k = rp2_shifts_golden().complex();
    build_psg_from(&k.layer(2), ctx)?.contract(ctx)
}

/// Node and edge names of a contracted graph whose nodes are labelled by the
/// triangle layers of the named rows; unknown nodes keep their edge lists.
pub fn label_contracted(g: &ContractedShiftGraph) -> (Vec<String>, Vec<(String, String)>) {
    let golden = rp2_shifts_golden();
    let names: BTreeMap<UniformHypergraph, String> =
        golden.rows.iter().map(|r| (golden.row_complex(&r.name).layer(2), r.name.clone())).collect();
    let label = |s: &UniformHypergraph| names.get(s).cloned().unwrap_or_else(|| s.to_string());
    let mut nodes: Vec<String> = g.nodes.iter().map(label).collect();
    nodes.sort();
    let mut edges: Vec<(String, String)> =
        g.edges.iter().map(|&(a, b)| (label(&g.nodes[a]), label(&g.nodes[b]))).collect();
    edges.sort();
    (nodes, edges)
}

fn rp2_contracted(opts: &ReproOptions) -> Result<ReproReport> {
    let golden = rp2_contracted_golden();
    let mut report = ReproReport::new("rp2-contracted", opts.backend);
    for (ch, want, field) in [(0, &golden.q, "Q"), (2, &golden.gf2, "GF(2)")] {
        let ctx = context(ch, 6, opts, &mut report)?;
        let g = rp2_contracted_graph(&ctx)?;
        let (nodes, edges) = label_contracted(&g);
        report.expect_eq(&format!("{field} nodes"), &nodes.join(","), &want.nodes.join(","));
        let fmt = |e: &[(String, String)]| e.iter().map(|(a, b)| format!("{a}->{b}")).collect::<Vec<_>>().join(",");
        let mut want_edges = want.edges.clone();
        want_edges.sort();
        report.expect_eq(&format!("{field} edges"), &fmt(&edges), &fmt(&want_edges));
        report.check(format!("{field} contracted graph acyclic"), g.is_acyclic().is_acyclic(), "");
    }
    report.notes.dedup();
    Ok(report)
}

#[derive(Deserialize)]
pub struct TightShiftGolden {
    pub perm: String,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub facets: Vec<String>,
    pub betti: Vec<usize>,
    pub shifted: bool,
    pub near_cone: bool,
}

#[derive(Deserialize)]
pub struct RpTightGolden {
    pub n: usize,
    pub certified: usize,
    pub uncertified: usize,
    pub uncertified_preserving: Vec<String>,
    pub tight: TightShiftGolden,
}

pub fn rp2_tight_golden() -> RpTightGolden {
    golden(RP2_TIGHT_JSON)
}

fn rp2_tight(opts: &ReproOptions) -> Result<ReproReport> {
    let g = rp2_tight_golden();
    let mut report = ReproReport::new("rp2-tight", opts.backend);
    let q = context(0, g.n, opts, &mut report)?;
    let k = rp2_shifts_golden().complex();
    let scan = conjecture_scan(&[ScanInstance::Complex { name: "K".into(), complex: k.clone() }], &q)?;
    let summary = &scan.complexes[0];
    report.expect_eq("certified permutations", &summary.certified, &g.certified);
    report.expect_eq("certified permutations preserving Betti numbers", &summary.certified_preserving, &g.certified);
    report.expect_eq("uncertified permutations", &(summary.permutations - summary.certified), &g.uncertified);
    let uncertified: Vec<String> = summary
        .preserving
        .iter()
        .filter(|w| !crate::topology::preserves_betti_cert(w, g.n))
        .map(Permutation::word_string)
        .collect();
    report.expect_eq(
        "uncertified permutations preserving Betti numbers",
        &uncertified.join(","),
        &g.uncertified_preserving.join(","),
    );
    report.check("no monotonicity violations", scan.violations.is_empty(), format!("{}", scan.violations.len()));

    let t = &g.tight;
    let ctx = context(t.characteristic, g.n, opts, &mut report)?;
    let w = parse_permutation(g.n, &t.perm)?;
    let shifted = shift_complex(&k, &w, &ctx)?;
    report.expect_eq(&format!("GF(2) shift by r({})", t.perm), &shifted, &complex(g.n, &t.facets)?);
    let betti = betti_numbers(&shifted, ctx.characteristic()).betti;
    report.expect_eq("its GF(2) Betti numbers", &vec_string(&betti), &vec_string(&t.betti));
    report.expect_eq("it is shifted", &shifted.is_shifted(), &t.shifted);
    report.expect_eq("it is a near cone", &shifted.is_near_cone(), &t.near_cone);
    report.notes.dedup();
    Ok(report)
}
