// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colex::colex_cmp;
use crate::error::{Error, Result};

/// An `r`-uniform hypergraph on the vertex set `{0, .., n-1}`.
///
/// Edges are strictly increasing tuples, stored without duplicates in colex
/// order. Vertices not covered by any edge are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::new(raw.n, raw.r, raw.edges)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> Self {
        RawHypergraph {
            n: h.n,
            r: h.r,
            edges: h.edges,
        }
    }
}

/// Which vertex sets count as independent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Independence {
    /// No edge lies entirely inside the set.
    #[default]
    Weak,
    /// No edge meets the set in two or more vertices.
    Strong,
}

impl Hypergraph {
    /// Validates and canonically orders the given edges.
    pub fn new<I, E>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if r == 0 {
            return Err(Error::ZeroUniformity);
        }
        let mut out = Vec::new();
        for e in edges {
            let e = e.as_ref();
            if e.len() != r {
                return Err(Error::WrongArity {
                    edge: e.to_vec(),
                    got: e.len(),
                    expected: r,
                });
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let mut s = e.to_vec();
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex(e.to_vec()));
            }
            out.push(s);
        }
        out.sort_by(|a, b| colex_cmp(a, b));
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Hypergraph { n, r, edges: out })
    }

    /// Builds from edges known to be well formed; duplicates are merged.
    pub(crate) fn from_edges_lossy(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Self {
        let mut edges: Vec<Vec<usize>> = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e
            })
            .collect();
        edges.sort_by(|a, b| colex_cmp(a, b));
        edges.dedup();
        debug_assert!(edges
            .iter()
            .all(|e| e.len() == r && e.windows(2).all(|w| w[0] < w[1]) && e[r - 1] < n));
        Hypergraph { n, r, edges }
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Hypergraph::new(n, r, Vec::<Vec<usize>>::new())
    }

    /// `K_n^r`.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroUniformity);
        }
        let table = crate::colex::EdgeTable::new(n, r);
        Ok(Hypergraph {
            n,
            r,
            edges: table.edges().to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_edge(&self, e: &[usize]) -> bool {
        let mut s = e.to_vec();
        s.sort_unstable();
        self.edges.binary_search_by(|x| colex_cmp(x, &s)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Vertices lying in at least one edge, ascending.
    pub fn covered_vertices(&self) -> Vec<usize> {
        let d = self.degrees();
        (0..self.n).filter(|&v| d[v] > 0).collect()
    }

    /// The link `L_H(v)`: the `(r-1)`-graph `{e : e ∪ {v} ∈ H}` on the same vertex set.
    pub fn link(&self, v: usize) -> Result<Hypergraph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if self.r < 2 {
            return Err(Error::InvalidParameter(
                "link needs uniformity at least 2".into(),
            ));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.contains(&v))
            .map(|e| e.iter().copied().filter(|&u| u != v).collect())
            .collect();
        Ok(Hypergraph::from_edges_lossy(self.n, self.r - 1, edges))
    }

    /// `H[U]`: edges lying entirely inside `set`, vertex labels unchanged.
    pub fn induced(&self, set: &[usize]) -> Result<Hypergraph> {
        let mask = self.vertex_mask(set)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| mask[v]))
            .cloned()
            .collect();
        Ok(Hypergraph {
            n: self.n,
            r: self.r,
            edges,
        })
    }

    /// `H[U_1, .., U_l]`: edges inside `∪ U_i` meeting each part in at most
    /// one vertex. Vertex labels are unchanged.
    pub fn induced_multipartite(&self, parts: &[Vec<usize>]) -> Result<Hypergraph> {
        let mut part_of = vec![usize::MAX; self.n];
        for (i, p) in parts.iter().enumerate() {
            for &v in p {
                if v >= self.n {
                    return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::OverlappingParts(v));
                }
                part_of[v] = i;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| {
                let mut seen = HashSet::with_capacity(e.len());
                e.iter()
                    .all(|&v| part_of[v] != usize::MAX && seen.insert(part_of[v]))
            })
            .cloned()
            .collect();
        Ok(Hypergraph {
            n: self.n,
            r: self.r,
            edges,
        })
    }

    fn vertex_mask(&self, set: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            mask[v] = true;
        }
        Ok(mask)
    }

    pub fn is_independent(&self, set: &[usize], mode: Independence) -> bool {
        let Ok(mask) = self.vertex_mask(set) else {
            return false;
        };
        self.edges.iter().all(|e| {
            let inside = e.iter().filter(|&&v| mask[v]).count();
            match mode {
                Independence::Weak => inside < e.len(),
                Independence::Strong => inside < 2,
            }
        })
    }

    /// All independent sets (ascending vertex lists, including the empty
    /// set), in lexicographic order.
    pub fn independent_sets(
        &self,
        mode: Independence,
        max_size: Option<usize>,
    ) -> Vec<Vec<usize>> {
        let mut incident = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                incident[v].push(i);
            }
        }
        let cap = max_size.unwrap_or(self.n);
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut inside = vec![false; self.n];
        self.independent_rec(0, mode, cap, &incident, &mut inside, &mut cur, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn independent_rec(
        &self,
        from: usize,
        mode: Independence,
        cap: usize,
        incident: &[Vec<usize>],
        inside: &mut [bool],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(cur.clone());
        if cur.len() == cap {
            return;
        }
        for v in from..self.n {
            let ok = incident[v].iter().all(|&i| {
                let e = &self.edges[i];
                let others = e.iter().filter(|&&u| u != v && inside[u]).count();
                match mode {
                    Independence::Weak => others + 1 < e.len(),
                    Independence::Strong => others == 0,
                }
            });
            if ok {
                inside[v] = true;
                cur.push(v);
                self.independent_rec(v + 1, mode, cap, incident, inside, cur, out);
                cur.pop();
                inside[v] = false;
            }
        }
    }

    /// Relabels vertex `v` as `map[v]` on a vertex set of size `n`.
    /// Panics if an edge vertex is unmapped or maps out of range.
    pub fn relabel(&self, map: &[usize], n: usize) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| map[v]).collect())
            .collect();
        Hypergraph::from_edges_lossy(n, self.r, edges)
    }

    /// Copy with the edge at position `idx` (in canonical order) removed.
    pub fn without_edge(&self, idx: usize) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Hypergraph {
            n: self.n,
            r: self.r,
            edges,
        }
    }

    /// Removes isolated vertices, keeping the relative order of the rest.
    pub fn drop_isolated(&self) -> Hypergraph {
        let covered = self.covered_vertices();
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in covered.iter().enumerate() {
            map[v] = i;
        }
        self.relabel(&map, covered.len())
    }

    /// `n r` on the first line, then one edge per line.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn from_text(s: &str) -> Result<Hypergraph> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `n r` header".into()))?;
        let head = parse_numbers(header)?;
        let [n, r] = head[..] else {
            return Err(Error::Parse(format!("bad header `{header}`")));
        };
        let edges = lines.map(parse_numbers).collect::<Result<Vec<_>>>()?;
        Hypergraph::new(n, r, edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn from_json(s: &str) -> Result<Hypergraph> {
        Ok(serde_json::from_str(s)?)
    }
}

pub(crate) fn parse_numbers(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: `{t}`")))
        })
        .collect()
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.r)?;
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
