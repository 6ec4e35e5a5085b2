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

//! Edge colorings of `K_n^r` and rainbow copies.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colex::{binomial, EdgeTable};
use crate::constructions::TuranPartition;
use crate::embed::Embedding;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::{parse_numbers, Hypergraph};

/// A surjective coloring `K_n^r -> {0, .., m-1}`, stored as one color id per
/// edge in colex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct Coloring {
    n: usize,
    r: usize,
    colors: Vec<usize>,
    num_colors: usize,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    n: usize,
    r: usize,
    m: usize,
    colors: Vec<usize>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        Coloring::with_palette(raw.n, raw.r, raw.m, raw.colors)
    }
}

impl From<Coloring> for RawColoring {
    fn from(c: Coloring) -> Self {
        RawColoring {
            n: c.n,
            r: c.r,
            m: c.num_colors,
            colors: c.colors,
        }
    }
}

impl Coloring {
    /// Validates length `C(n, r)` and that the ids are exactly `0..m`.
    pub fn new(n: usize, r: usize, colors: Vec<usize>) -> Result<Self> {
        let m = colors.iter().max().map_or(0, |&c| c + 1);
        Coloring::with_palette(n, r, m, colors)
    }

    pub fn with_palette(n: usize, r: usize, m: usize, colors: Vec<usize>) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroUniformity);
        }
        let expected = binomial(n, r) as usize;
        if colors.len() != expected {
            return Err(Error::InvalidColoring(format!(
                "expected {expected} color ids for K_{n}^{r}, got {}",
                colors.len()
            )));
        }
        let mut seen = vec![false; m];
        for &c in &colors {
            if c >= m {
                return Err(Error::InvalidColoring(format!("color {c} outside 0..{m}")));
            }
            seen[c] = true;
        }
        if let Some(c) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidColoring(format!("color {c} is never used")));
        }
        Ok(Coloring {
            n,
            r,
            colors,
            num_colors: m,
        })
    }

    /// Renumbers arbitrary labels to `0..m` in order of first occurrence.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(
        n: usize,
        r: usize,
        labels: &[T],
    ) -> Result<Self> {
        let mut ids = HashMap::new();
        let colors = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(l.clone()).or_insert(next)
            })
            .collect();
        Coloring::new(n, r, colors)
    }

    /// Colors each edge (sorted vertex tuple) by `f`, then renumbers.
    pub fn from_fn<T, F>(n: usize, r: usize, mut f: F) -> Result<Self>
    where
        T: Eq + std::hash::Hash + Clone,
        F: FnMut(&[usize]) -> T,
    {
        let table = EdgeTable::new(n, r);
        let labels: Vec<T> = table.edges().iter().map(|e| f(e)).collect();
        Coloring::from_labels(n, r, &labels)
    }

    /// Every edge its own color.
    pub fn rainbow(n: usize, r: usize) -> Result<Self> {
        Coloring::new(n, r, (0..binomial(n, r) as usize).collect())
    }

    pub fn monochromatic(n: usize, r: usize) -> Result<Self> {
        Coloring::new(n, r, vec![0; binomial(n, r) as usize])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color_of_rank(&self, rank: usize) -> usize {
        self.colors[rank]
    }

    /// Color of an edge given as a (not necessarily sorted) vertex tuple.
    pub fn color_of(&self, edge: &[usize]) -> usize {
        let mut s = edge.to_vec();
        s.sort_unstable();
        self.colors[crate::colex::rank(&s)]
    }

    /// Colors in first-occurrence (restricted growth) order?
    pub fn is_restricted_growth(&self) -> bool {
        let mut next = 0;
        for &c in &self.colors {
            if c > next {
                return false;
            }
            if c == next {
                next += 1;
            }
        }
        true
    }

    /// `n r m` header, then the color ids in colex edge order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn from_text(s: &str) -> Result<Coloring> {
        let body: Vec<&str> = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let header = body
            .first()
            .ok_or_else(|| Error::Parse("missing `n r m` header".into()))?;
        let head = parse_numbers(header)?;
        let [n, r, m] = head[..] else {
            return Err(Error::Parse(format!("bad coloring header `{header}`")));
        };
        let mut colors = Vec::new();
        for line in &body[1..] {
            colors.extend(parse_numbers(line)?);
        }
        Coloring::with_palette(n, r, m, colors)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(s: &str) -> Result<Coloring> {
        Ok(serde_json::from_str(s)?)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.n, self.r, self.num_colors)?;
        let ids: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        writeln!(f, "{}", ids.join(" "))
    }
}

/// The lower-bound coloring of `K_n^3` built on the balanced partition
/// `V_1 ⊔ .. ⊔ V_l`: all triples with two or more vertices in `V_i` share
/// one color per part, and the transversal triples get pairwise distinct
/// fresh colors in colex order.
///
/// Part colors come first, then the transversal colors. A part with fewer
/// than two vertices has no triple of its own, so its color does not occur
/// and the ids are compacted; the count is `t_3(n, l) + l` only when every
/// part has at least two vertices.
pub fn layered_coloring(n: usize, ell: usize) -> Result<Coloring> {
    if ell < 2 || n < ell {
        return Err(Error::InvalidParameter(format!(
            "layered coloring needs n >= l >= 2 (got n = {n}, l = {ell})"
        )));
    }
    let partition = TuranPartition::new(n, ell)?;
    let table = EdgeTable::new(n, 3);
    let used_parts: Vec<usize> = (0..ell).filter(|&i| partition.sizes[i] >= 2).collect();
    let mut part_color = vec![usize::MAX; ell];
    for (c, &i) in used_parts.iter().enumerate() {
        part_color[i] = c;
    }
    let mut fresh = used_parts.len();
    let colors = table
        .edges()
        .iter()
        .map(|e| {
            let mut count = vec![0usize; ell];
            for &v in e {
                count[partition.part_of[v]] += 1;
            }
            match count.iter().position(|&c| c >= 2) {
                Some(i) => part_color[i],
                None => {
                    fresh += 1;
                    fresh - 1
                }
            }
        })
        .collect();
    Coloring::new(n, 3, colors)
}

/// A copy of the pattern whose edges all receive distinct colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowWitness {
    pub embedding: Embedding,
    /// Image edges (sorted tuples) with their colors, in pattern edge order.
    pub edge_colors: Vec<(Vec<usize>, usize)>,
}

impl RainbowWitness {
    /// Recomputes colors from `chi` and checks injectivity and distinctness.
    pub fn is_valid(&self, chi: &Coloring, pattern: &Hypergraph) -> bool {
        let complete = match Hypergraph::complete(chi.n(), chi.r()) {
            Ok(k) => k,
            Err(_) => return false,
        };
        if !self.embedding.is_valid(pattern, &complete) {
            return false;
        }
        let images = self.embedding.image_edges(pattern);
        if images.len() != self.edge_colors.len() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        images.iter().zip(&self.edge_colors).all(|(im, (e, c))| {
            im == e && chi.color_of(e) == *c && seen.insert(*c)
        })
    }
}

/// Result of a rainbow search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RainbowOutcome {
    Found(RainbowWitness),
    Absent,
    /// The node budget ran out before the search finished.
    Indeterminate,
}

impl RainbowOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, RainbowOutcome::Found(_))
    }
}

/// Exhaustive backtracking for a rainbow copy of `pattern` in `chi`.
///
/// Pattern vertices are mapped one at a time; as soon as an edge has all of
/// its vertices mapped its color must differ from every color already used.
/// `budget` caps the number of vertex assignments.
pub fn find_rainbow_copy(
    chi: &Coloring,
    pattern: &Hypergraph,
    budget: Option<u64>,
) -> Result<RainbowOutcome> {
    if pattern.r() != chi.r() {
        return Err(Error::UniformityMismatch(pattern.r(), chi.r()));
    }
    let order = pattern_order(pattern);
    if order.len() > chi.n() {
        return Ok(RainbowOutcome::Absent);
    }
    let mut position = vec![usize::MAX; pattern.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut closing = vec![Vec::new(); order.len()];
    for (i, e) in pattern.edges().iter().enumerate() {
        let last = e.iter().map(|&v| position[v]).max().unwrap();
        closing[last].push(i);
    }
    let table = EdgeTable::new(chi.n(), chi.r());
    let mut state = RainbowSearch {
        chi,
        pattern,
        table: &table,
        order: &order,
        closing: &closing,
        map: vec![usize::MAX; pattern.n()],
        used_vertex: vec![false; chi.n()],
        used_color: vec![false; chi.num_colors()],
        nodes: 0,
        budget,
        out_of_budget: false,
    };
    if order.is_empty() {
        return Ok(RainbowOutcome::Found(state.witness()));
    }
    Ok(match state.dfs(0) {
        Some(w) => RainbowOutcome::Found(w),
        None if state.out_of_budget => RainbowOutcome::Indeterminate,
        None => RainbowOutcome::Absent,
    })
}

/// Non-isolated pattern vertices, each next vertex maximizing its number of
/// already-placed neighbours.
pub(crate) fn pattern_order(pattern: &Hypergraph) -> Vec<usize> {
    let deg = pattern.degrees();
    let mut adj = vec![vec![false; pattern.n()]; pattern.n()];
    for e in pattern.edges() {
        for &u in e {
            for &w in e {
                adj[u][w] = u != w;
            }
        }
    }
    let domain: Vec<usize> = (0..pattern.n()).filter(|&v| deg[v] > 0).collect();
    let mut placed = vec![false; pattern.n()];
    let mut order = Vec::with_capacity(domain.len());
    while order.len() < domain.len() {
        let next = *domain
            .iter()
            .filter(|&&v| !placed[v])
            .max_by_key(|&&v| {
                let back = (0..pattern.n()).filter(|&u| placed[u] && adj[v][u]).count();
                (back, deg[v], std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

struct RainbowSearch<'a> {
    chi: &'a Coloring,
    pattern: &'a Hypergraph,
    table: &'a EdgeTable,
    order: &'a [usize],
    closing: &'a [Vec<usize>],
    map: Vec<usize>,
    used_vertex: Vec<bool>,
    used_color: Vec<bool>,
    nodes: u64,
    budget: Option<u64>,
    out_of_budget: bool,
}

impl RainbowSearch<'_> {
    fn dfs(&mut self, depth: usize) -> Option<RainbowWitness> {
        let v = self.order[depth];
        let mut buf = Vec::with_capacity(self.chi.r());
        for x in 0..self.chi.n() {
            if self.used_vertex[x] {
                continue;
            }
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                self.out_of_budget = true;
                return None;
            }
            self.map[v] = x;
            // colors of edges completed by this assignment
            let mut added = Vec::with_capacity(self.closing[depth].len());
            let mut ok = true;
            for &i in &self.closing[depth] {
                buf.clear();
                buf.extend(self.pattern.edges()[i].iter().map(|&u| self.map[u]));
                let c = self.chi.color_of_rank(self.table.rank_unsorted(&mut buf));
                if self.used_color[c] {
                    ok = false;
                    break;
                }
                self.used_color[c] = true;
                added.push(c);
            }
            if ok {
                self.used_vertex[x] = true;
                let found = if depth + 1 == self.order.len() {
                    Some(self.witness())
                } else {
                    self.dfs(depth + 1)
                };
                self.used_vertex[x] = false;
                if found.is_some() {
                    return found;
                }
            }
            for c in added {
                self.used_color[c] = false;
            }
            self.map[v] = usize::MAX;
            if self.out_of_budget {
                return None;
            }
        }
        None
    }

    fn witness(&self) -> RainbowWitness {
        let map: Vec<Option<usize>> = self
            .map
            .iter()
            .map(|&x| (x != usize::MAX).then_some(x))
            .collect();
        let embedding = Embedding::new(map);
        let edge_colors = embedding
            .image_edges(self.pattern)
            .into_iter()
            .map(|e| {
                let c = self.chi.color_of_rank(self.table.rank(&e));
                (e, c)
            })
            .collect();
        RainbowWitness {
            embedding,
            edge_colors,
        }
    }
}

/// Outcome of [`is_rainbow_family_free`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyRainbow {
    /// No member has a rainbow copy.
    Free,
    /// Member `member` has the given rainbow copy.
    Witness {
        member: usize,
        witness: RainbowWitness,
    },
    /// Member `member` exhausted the budget; nothing is claimed.
    Indeterminate { member: usize },
}

pub fn is_rainbow_family_free(
    chi: &Coloring,
    family: &Family,
    budget: Option<u64>,
) -> Result<FamilyRainbow> {
    let mut undecided = None;
    for (i, f) in family.members().iter().enumerate() {
        match find_rainbow_copy(chi, f, budget)? {
            RainbowOutcome::Found(witness) => {
                return Ok(FamilyRainbow::Witness { member: i, witness })
            }
            RainbowOutcome::Indeterminate => {
                undecided.get_or_insert(i);
            }
            RainbowOutcome::Absent => {}
        }
    }
    Ok(match undecided {
        Some(member) => FamilyRainbow::Indeterminate { member },
        None => FamilyRainbow::Free,
    })
}

/// One edge per color class, the colex-least one. No rainbow subgraph has
/// more edges than there are colors.
pub fn max_rainbow_subgraph(chi: &Coloring) -> Hypergraph {
    let table = EdgeTable::new(chi.n(), chi.r());
    let mut seen = vec![false; chi.num_colors()];
    let edges = chi
        .colors()
        .iter()
        .enumerate()
        .filter(|(_, &c)| !std::mem::replace(&mut seen[c], true))
        .map(|(i, _)| table.edge(i).to_vec())
        .collect();
    Hypergraph::from_edges_lossy(chi.n(), chi.r(), edges)
}

/// Recolors class `b` with color `a`, then closes the gap left by `b`.
pub fn merge_colors(chi: &Coloring, a: usize, b: usize) -> Result<Coloring> {
    let m = chi.num_colors();
    if a >= m || b >= m {
        return Err(Error::InvalidColoring(format!(
            "cannot merge {a} and {b}: only {m} colors"
        )));
    }
    if a == b {
        return Err(Error::InvalidParameter("merged colors must differ".into()));
    }
    let colors = chi
        .colors()
        .iter()
        .map(|&c| {
            let c = if c == b { a } else { c };
            if c > b {
                c - 1
            } else {
                c
            }
        })
        .collect();
    Coloring::with_palette(chi.n(), chi.r(), m - 1, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{expansion, turan_count};

    fn k3() -> Hypergraph {
        Hypergraph::complete(3, 2).unwrap()
    }

    fn min_endpoint(n: usize) -> Coloring {
        Coloring::from_fn(n, 2, |e| e[0]).unwrap()
    }

    #[test]
    fn validation_and_formats() {
        assert!(Coloring::new(4, 2, vec![0; 5]).is_err());
        assert!(Coloring::new(3, 2, vec![0, 2, 2]).is_err());
        assert!(Coloring::with_palette(3, 2, 4, vec![0, 1, 2]).is_err());
        let c = Coloring::new(4, 2, vec![0, 1, 1, 2, 0, 1]).unwrap();
        assert_eq!(c.num_colors(), 3);
        let text = c.to_text();
        assert_eq!(text, "4 2 3\n0 1 1 2 0 1\n");
        assert_eq!(Coloring::from_text(&text).unwrap(), c);
        assert_eq!(Coloring::from_text("4 2 3\n0 1 1\n2 0 1\n").unwrap(), c);
        let json = c.to_json();
        assert_eq!(json, r#"{"n":4,"r":2,"m":3,"colors":[0,1,1,2,0,1]}"#);
        assert_eq!(Coloring::from_json(&json).unwrap(), c);
    }

    #[test]
    fn layered_counts() {
        let c = layered_coloring(7, 3).unwrap();
        assert_eq!(c.num_colors(), 15);
        let c6 = layered_coloring(6, 3).unwrap();
        assert_eq!(c6.num_colors(), 11);
        let part = TuranPartition::new(7, 3).unwrap();
        for e in EdgeTable::new(7, 3).edges() {
            for i in 0..3 {
                if e.iter().filter(|&&v| part.part_of[v] == i).count() >= 2 {
                    assert_eq!(c.color_of(e), i);
                }
            }
        }
        for n in 6..=12 {
            let c = layered_coloring(n, 3).unwrap();
            assert_eq!(c.num_colors() as u64, turan_count(n, 3, 3).unwrap() + 3);
        }
        assert!(layered_coloring(2, 3).is_err());
    }

    #[test]
    fn layered_small_parts_compact_ids() {
        // parts 2,2,1: the singleton part has no triple of its own
        let c = layered_coloring(5, 3).unwrap();
        assert_eq!(c.num_colors() as u64, turan_count(5, 3, 3).unwrap() + 2);
    }

    #[test]
    fn rainbow_detection_cases() {
        let all = Coloring::rainbow(4, 2).unwrap();
        let found = find_rainbow_copy(&all, &k3(), None).unwrap();
        let RainbowOutcome::Found(w) = found else {
            panic!("expected a rainbow triangle");
        };
        assert!(w.is_valid(&all, &k3()));
        for n in 3..=7 {
            assert_eq!(
                find_rainbow_copy(&min_endpoint(n), &k3(), None).unwrap(),
                RainbowOutcome::Absent
            );
        }
        let two = Hypergraph::new(6, 3, [[0, 1, 2], [3, 4, 5]]).unwrap();
        let layered = layered_coloring(7, 3).unwrap();
        assert!(find_rainbow_copy(&layered, &two, None).unwrap().is_found());
    }

    #[test]
    fn budget_gives_indeterminate() {
        let mono = Coloring::monochromatic(7, 2).unwrap();
        let out = find_rainbow_copy(&mono, &k3(), Some(3)).unwrap();
        assert_eq!(out, RainbowOutcome::Indeterminate);
        assert_eq!(
            find_rainbow_copy(&mono, &k3(), None).unwrap(),
            RainbowOutcome::Absent
        );
    }

    #[test]
    fn family_freeness() {
        let fam = Family::single(k3());
        assert_eq!(
            is_rainbow_family_free(&min_endpoint(5), &fam, None).unwrap(),
            FamilyRainbow::Free
        );
        assert!(matches!(
            is_rainbow_family_free(&Coloring::rainbow(5, 2).unwrap(), &fam, None).unwrap(),
            FamilyRainbow::Witness { member: 0, .. }
        ));
        let edge = Family::new(vec![k3(), Hypergraph::new(2, 2, [[0, 1]]).unwrap()]).unwrap();
        assert!(matches!(
            is_rainbow_family_free(&Coloring::monochromatic(5, 2).unwrap(), &edge, None).unwrap(),
            FamilyRainbow::Witness { member: 1, .. }
        ));
    }

    #[test]
    fn max_rainbow_cases() {
        let layered = layered_coloring(7, 3).unwrap();
        let m = max_rainbow_subgraph(&layered);
        assert_eq!(m.len(), 15);
        let mono = Coloring::monochromatic(5, 3).unwrap();
        assert_eq!(max_rainbow_subgraph(&mono).edges(), &[vec![0, 1, 2]]);
        let c = min_endpoint(6);
        let m = max_rainbow_subgraph(&c);
        assert_eq!(m.len(), c.num_colors());
        let colors: std::collections::HashSet<usize> =
            m.edges().iter().map(|e| c.color_of(e)).collect();
        assert_eq!(colors.len(), m.len());
    }

    #[test]
    fn merge_cases() {
        let c = Coloring::new(3, 2, vec![0, 1, 2]).unwrap();
        let m = merge_colors(&c, 0, 1).unwrap();
        assert_eq!(m.colors(), &[0, 0, 1]);
        let m = merge_colors(&c, 2, 0).unwrap();
        assert_eq!(m.colors(), &[1, 0, 1]);
        assert!(merge_colors(&c, 0, 3).is_err());
        assert!(merge_colors(&c, 1, 1).is_err());
        let one = merge_colors(&merge_colors(&c, 0, 1).unwrap(), 0, 1).unwrap();
        assert_eq!(one.num_colors(), 1);
        let path = Hypergraph::new(3, 2, [[0, 1], [1, 2]]).unwrap();
        assert_eq!(find_rainbow_copy(&one, &path, None).unwrap(), RainbowOutcome::Absent);
    }

    #[test]
    fn expansion_in_layered_coloring() {
        // outside the large-n range, but H_{K_3}^3 is still found
        let t = expansion(&k3(), 3).unwrap();
        let layered = layered_coloring(7, 3).unwrap();
        assert!(find_rainbow_copy(&layered, &t, None).unwrap().is_found());
    }
}
