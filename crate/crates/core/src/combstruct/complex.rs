use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::hypergraph::{join_vertices, parse_rows, UniformHypergraph};
use super::subset::{KSubset, MAX_N};
use crate::error::{Error, Result};

/// A downward-closed family of subsets of `[n]`, stored by face size.
///
/// `by_size[d]` holds the `d`-element faces, so `by_size[0]` is `{∅}` for any
/// nonempty complex and the layer `K^s` is `by_size[s + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    by_size: Vec<UniformHypergraph>,
}

/// `f_{-1}, f_0, …, f_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        // reduced; f_{-1} enters with sign -1
        self.0.iter().enumerate().map(|(d, &f)| if d % 2 == 0 { -(f as i64) } else { f as i64 }).sum()
    }
}

impl SimplicialComplex {
    /// The void complex (no faces at all).
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, by_size: Vec::new() }
    }

    pub fn from_facets(n: usize, facets: &[KSubset]) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::Unsupported(format!("n = {n} exceeds {MAX_N}")));
        }
        let mut faces: HashSet<u64> = HashSet::new();
        let mut stack = Vec::new();
        for f in facets {
            if f.n() != n {
                return Err(Error::DimensionMismatch(format!("facet {f} is not a subset of [{n}]")));
            }
            stack.push(f.bits());
        }
        while let Some(b) = stack.pop() {
            if faces.insert(b) {
                let mut rest = b;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    stack.push(b & !low);
                    rest &= rest - 1;
                }
            }
        }
        Ok(Self::from_face_bits(n, faces))
    }

    pub fn from_facet_lists(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let facets = facets.iter().map(|f| KSubset::new(n, f)).collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(n, &facets)
    }

    /// Facets written as digit strings, e.g. `["125", "126", "45"]`.
    pub fn parse(n: usize, facets: &[&str]) -> Result<Self> {
        let facets = facets.iter().map(|f| super::subset::parse_subset(n, f)).collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(n, &facets)
    }

    fn from_face_bits(n: usize, faces: HashSet<u64>) -> Self {
        let top = faces.iter().map(|b| b.count_ones() as usize).max();
        let mut by_size: Vec<Vec<KSubset>> = match top {
            Some(t) => vec![Vec::new(); t + 1],
            None => Vec::new(),
        };
        for b in faces {
            by_size[b.count_ones() as usize].push(KSubset::raw(n, b));
        }
        let by_size = by_size
            .into_iter()
            .enumerate()
            .map(|(d, mut v)| {
                v.sort();
                UniformHypergraph::from_sorted(n, d, v)
            })
            .collect();
        SimplicialComplex { n, by_size }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.by_size.is_empty()
    }

    /// Dimension (`-1` for `{∅}`, `None` for the void complex).
    pub fn dim(&self) -> Option<isize> {
        (!self.by_size.is_empty()).then(|| self.by_size.len() as isize - 2)
    }

    /// `K^s`, the `(s + 1)`-element faces.
    pub fn layer(&self, s: usize) -> UniformHypergraph {
        self.by_size.get(s + 1).cloned().unwrap_or_else(|| UniformHypergraph::empty(self.n, (s + 1).min(self.n)))
    }

    /// Faces with exactly `d` elements.
    pub fn faces_of_size(&self, d: usize) -> &[KSubset] {
        self.by_size.get(d).map_or(&[], |h| h.edges())
    }

    /// Nonempty layers `K^0, K^1, …, K^dim`.
    pub fn layers(&self) -> Vec<UniformHypergraph> {
        self.by_size.iter().skip(1).cloned().collect()
    }

    pub fn num_faces(&self) -> usize {
        self.by_size.iter().map(UniformHypergraph::len).sum()
    }

    pub fn contains(&self, face: &KSubset) -> bool {
        self.by_size.get(face.k()).is_some_and(|h| h.contains(face))
    }

    pub fn contains_bits(&self, bits: u64) -> bool {
        self.contains(&KSubset::raw(self.n, bits))
    }

    /// Maximal faces, largest first and lex within each size.
    pub fn facets(&self) -> Vec<KSubset> {
        let mut out = Vec::new();
        for d in (0..self.by_size.len()).rev() {
            for f in self.by_size[d].edges() {
                let covered = self
                    .by_size
                    .get(d + 1)
                    .is_some_and(|up| (1..=self.n).any(|v| !f.contains(v) && up.contains(&f.with(v))));
                if !covered {
                    out.push(*f);
                }
            }
        }
        out
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.by_size.iter().map(UniformHypergraph::len).collect())
    }

    /// `σ ∖ {i} ∪ {1} ∈ K` for every face `σ ∌ 1` and `i ∈ σ`.
    pub fn is_near_cone(&self) -> bool {
        self.by_size.iter().flat_map(|h| h.edges()).filter(|s| !s.contains(1)).all(|s| {
            s.vertices().all(|i| self.contains(&s.without(i).with(1)))
        })
    }

    /// Every layer is shifted.
    pub fn is_shifted(&self) -> bool {
        self.by_size.iter().all(UniformHypergraph::is_shifted)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ComplexJson::from(self)).expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ComplexJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }

    /// One facet per line, space-separated vertices; `n` defaults to the largest vertex.
    pub fn from_text(text: &str, n: Option<usize>) -> Result<Self> {
        let rows = parse_rows(text)?;
        let n = n.unwrap_or_else(|| rows.iter().flatten().copied().max().unwrap_or(0));
        SimplicialComplex::from_facet_lists(n, &rows)
    }

    pub fn to_text(&self) -> String {
        self.facets().iter().map(|f| join_vertices(f) + "\n").collect()
    }
}

/// Union of the given layers and `∅`; fails with a missing face if not downward closed.
pub fn complex_from_layers(n: usize, layers: &[UniformHypergraph]) -> Result<SimplicialComplex> {
    let mut faces: HashSet<u64> = HashSet::new();
    for h in layers {
        if h.n() != n {
            return Err(Error::DimensionMismatch(format!("layer on [{}] in a complex on [{n}]", h.n())));
        }
        faces.extend(h.edges().iter().map(KSubset::bits));
    }
    if faces.is_empty() {
        return Ok(SimplicialComplex::void(n));
    }
    faces.insert(0);
    let mut sorted: Vec<u64> = faces.iter().copied().collect();
    sorted.sort_by_key(|b| (b.count_ones(), KSubset::raw(n, *b)));
    for &b in &sorted {
        let mut rest = b;
        while rest != 0 {
            let sub = b & !(rest & rest.wrapping_neg());
            if !faces.contains(&sub) {
                return Err(Error::ClosureViolation { witness: KSubset::raw(n, sub).to_string() });
            }
            rest &= rest - 1;
        }
    }
    Ok(SimplicialComplex::from_face_bits(n, faces))
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.facets().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    n: usize,
    facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexJson { n: k.n, facets: k.facets().iter().map(KSubset::to_vec).collect() }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;
    fn try_from(raw: ComplexJson) -> Result<Self> {
        SimplicialComplex::from_facet_lists(raw.n, &raw.facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ComplexJson::deserialize(d)?.try_into().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp2() -> SimplicialComplex {
        SimplicialComplex::parse(6, &["125", "126", "134", "135", "146", "234", "236", "245", "356", "456"]).unwrap()
    }

    #[test]
    fn projective_plane_counts() {
        let k = rp2();
        assert_eq!(k.f_vector(), FVector(vec![1, 6, 15, 10]));
        assert_eq!(k.layer(2).len(), 10);
        assert!(k.layer(3).is_empty());
        assert_eq!(k.num_faces() - 1, (0..4).map(|s| k.layer(s).len()).sum::<usize>());
        assert!(!k.is_near_cone());
        assert_eq!(k.f_vector().euler_characteristic(), 0);
    }

    #[test]
    fn near_cone_examples() {
        let k = SimplicialComplex::parse(6, &["123", "124", "125", "126", "134", "135", "136", "146", "156", "236", "45"])
            .unwrap();
        assert!(k.is_near_cone());
        assert!(!k.is_shifted());
        let b = SimplicialComplex::parse(6, &["123", "124", "125", "126", "134", "135", "136", "145", "146", "234", "56"])
            .unwrap();
        assert!(b.is_shifted());
        assert!(b.is_near_cone());
    }

    #[test]
    fn layers_round_trip() {
        let k = rp2();
        assert_eq!(complex_from_layers(6, &k.layers()).unwrap(), k);
        let a = UniformHypergraph::parse(3, 2, &["12"]).unwrap();
        let b = UniformHypergraph::parse(3, 3, &["123"]).unwrap();
        let ones = UniformHypergraph::parse(3, 1, &["1", "2", "3"]).unwrap();
        let err = complex_from_layers(3, &[ones, a, b]).unwrap_err();
        match err {
            Error::ClosureViolation { witness } => assert!(witness == "13" || witness == "23"),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn facets_and_formats() {
        let k = rp2();
        let facets: Vec<String> = k.facets().iter().map(|f| f.to_string()).collect();
        assert_eq!(facets, ["125", "126", "134", "135", "146", "234", "236", "245", "356", "456"]);
        assert_eq!(SimplicialComplex::from_json(&k.to_json()).unwrap(), k);
        assert_eq!(SimplicialComplex::from_text(&k.to_text(), None).unwrap(), k);
        let point = SimplicialComplex::parse(1, &["1"]).unwrap();
        assert_eq!(point.f_vector(), FVector(vec![1, 1]));
        assert_eq!(point.dim(), Some(0));
    }
}
