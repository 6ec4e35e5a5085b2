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

//! Construction operators: expansion, blowup, splitting, edge-deletion
//! families, Turán hypergraphs and the special blowup graphs.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::{Hypergraph, Independence};

/// The expansion `H_F^r`: every edge of the `k`-graph `f` is padded with
/// `r - k` fresh vertices, disjoint across edges. Fresh vertices are
/// numbered from `f.n()` upward, one block per edge in canonical edge order.
pub fn expansion(f: &Hypergraph, r: usize) -> Result<Hypergraph> {
    let k = f.r();
    if r <= k {
        return Err(Error::InvalidParameter(format!(
            "expansion target uniformity {r} must exceed {k}"
        )));
    }
    let pad = r - k;
    let n = f.n() + pad * f.len();
    let edges = f
        .edges()
        .iter()
        .enumerate()
        .map(|(j, e)| {
            let start = f.n() + j * pad;
            e.iter().copied().chain(start..start + pad).collect()
        })
        .collect();
    Ok(Hypergraph::from_edges_lossy(n, r, edges))
}

/// The `t`-blowup `F[t]`: vertex `i` becomes the block `t*i .. t*i + t`,
/// every edge becomes the complete `r`-partite `r`-graph on its blocks.
pub fn blowup(f: &Hypergraph, t: usize) -> Result<Hypergraph> {
    if t == 0 {
        return Err(Error::InvalidParameter("blowup factor must be positive".into()));
    }
    let mut edges = Vec::with_capacity(f.len() * t.pow(f.r() as u32));
    for e in f.edges() {
        for pick in e.iter().map(|&v| t * v..t * v + t).multi_cartesian_product() {
            edges.push(pick);
        }
    }
    Ok(Hypergraph::from_edges_lossy(t * f.n(), f.r(), edges))
}

/// The `u`-splitting `F ∨ u`.
///
/// `u` is deleted (higher labels shift down by one) and each edge through
/// `u` is re-attached to its own fresh vertex; fresh vertices are appended
/// in the canonical order of the link of `u`. Edge count is preserved.
pub fn split_vertex(f: &Hypergraph, u: usize) -> Result<Hypergraph> {
    if u >= f.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: f.n() });
    }
    let shift = |v: usize| if v > u { v - 1 } else { v };
    let base = f.n() - 1;
    let mut edges = Vec::with_capacity(f.len());
    let mut fresh = base;
    let mut through_u = Vec::new();
    for e in f.edges() {
        if e.contains(&u) {
            through_u.push(e.iter().copied().filter(|&v| v != u).map(shift).collect::<Vec<_>>());
        } else {
            edges.push(e.iter().copied().map(shift).collect::<Vec<_>>());
        }
    }
    // link edges in canonical order (they already are: removing a common
    // vertex and shifting labels preserves colex order)
    for mut rest in through_u {
        rest.push(fresh);
        fresh += 1;
        edges.push(rest);
    }
    Ok(Hypergraph::from_edges_lossy(fresh, f.r(), edges))
}

/// The `I`-splitting `F ∨ I`, applying [`split_vertex`] to the members of
/// `set` in the given order.
pub fn split_set(f: &Hypergraph, set: &[usize], mode: Independence) -> Result<Hypergraph> {
    for &v in set {
        if v >= f.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: f.n() });
        }
    }
    if set.iter().duplicates().next().is_some() || !f.is_independent(set, mode) {
        return Err(Error::NotIndependent(set.to_vec()));
    }
    let mut current: Vec<Option<usize>> = (0..f.n()).map(Some).collect();
    let mut g = f.clone();
    for &u in set {
        let cu = current[u].expect("each vertex is split once");
        g = split_vertex(&g, cu)?;
        current[u] = None;
        for id in current.iter_mut().flatten() {
            if *id > cu {
                *id -= 1;
            }
        }
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyOptions {
    /// Collapse isomorphic members.
    pub dedup: bool,
    /// Keep vertices left isolated by an edge deletion.
    pub keep_isolated: bool,
    /// Independence notion used by [`splitting_family`].
    pub independence: Independence,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            dedup: true,
            keep_isolated: false,
            independence: Independence::Weak,
        }
    }
}

fn finish(members: Vec<Hypergraph>, opts: FamilyOptions) -> Result<Family> {
    if opts.dedup {
        Family::deduplicated(members)
    } else {
        Family::new(members)
    }
}

/// `Split(F)`: all splittings `F ∨ I` over independent sets `I`, including
/// `F` itself.
pub fn splitting_family(f: &Hypergraph, opts: FamilyOptions) -> Result<Family> {
    let members = f
        .independent_sets(opts.independence, None)
        .iter()
        .map(|set| split_set(f, set, opts.independence))
        .collect::<Result<Vec<_>>>()?;
    finish(members, opts)
}

/// `F_−`: single-edge deletions of `f`.
pub fn minus_family(f: &Hypergraph, opts: FamilyOptions) -> Result<Family> {
    if f.is_empty() {
        return Err(Error::InvalidParameter("F has no edges to delete".into()));
    }
    let members = (0..f.len())
        .map(|i| trim(f.without_edge(i), opts))
        .collect();
    finish(members, opts)
}

fn trim(g: Hypergraph, opts: FamilyOptions) -> Hypergraph {
    if opts.keep_isolated {
        g
    } else {
        g.drop_isolated()
    }
}

/// Is edge `idx` of `f` `k`-pendant, i.e. does it own a `k`-subset that
/// meets no other edge?
pub fn is_pendant(f: &Hypergraph, idx: usize, k: usize) -> bool {
    let e = &f.edges()[idx];
    let private = e
        .iter()
        .filter(|&&v| {
            f.edges()
                .iter()
                .enumerate()
                .all(|(j, g)| j == idx || !g.contains(&v))
        })
        .count();
    private >= k
}

/// Indices of the `k`-pendant edges of `f`.
pub fn pendant_edges(f: &Hypergraph, k: usize) -> Result<Vec<usize>> {
    if k == 0 || k >= f.r() {
        return Err(Error::InvalidParameter(format!(
            "pendant size k = {k} must satisfy 1 <= k < {}",
            f.r()
        )));
    }
    Ok((0..f.len()).filter(|&i| is_pendant(f, i, k)).collect())
}

/// `F_{k−}`: deletions of `k`-pendant edges.
pub fn pendant_minus_family(f: &Hypergraph, k: usize, opts: FamilyOptions) -> Result<Family> {
    let members = pendant_edges(f, k)?
        .into_iter()
        .map(|i| trim(f.without_edge(i), opts))
        .collect();
    finish(members, opts)
}

/// The balanced partition `V_1 ⊔ .. ⊔ V_l` of `[n]` into contiguous ranges,
/// larger parts first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranPartition {
    pub n: usize,
    pub ell: usize,
    pub part_of: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl TuranPartition {
    pub fn new(n: usize, ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidParameter("need at least one part".into()));
        }
        let sizes: Vec<usize> = (0..ell)
            .map(|i| n / ell + usize::from(i < n % ell))
            .collect();
        let part_of = sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
            .collect();
        Ok(TuranPartition {
            n,
            ell,
            part_of,
            sizes,
        })
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.ell];
        for (v, &p) in self.part_of.iter().enumerate() {
            parts[p].push(v);
        }
        parts
    }
}

/// `T_r(n, l)`: all `r`-subsets of `[n]` with at most one vertex per part.
pub fn turan_hypergraph(n: usize, ell: usize, r: usize) -> Result<(Hypergraph, TuranPartition)> {
    let partition = TuranPartition::new(n, ell)?;
    let complete = Hypergraph::complete(n, r)?;
    let h = complete.induced_multipartite(&partition.parts())?;
    Ok((h, partition))
}

/// `t_r(n, l)`, the elementary symmetric polynomial of degree `r` in the
/// part sizes.
pub fn turan_count(n: usize, ell: usize, r: usize) -> Result<u64> {
    let partition = TuranPartition::new(n, ell)?;
    // e[j] after processing a prefix of parts
    let mut e = vec![0u64; r + 1];
    e[0] = 1;
    for &s in &partition.sizes {
        for j in (1..=r).rev() {
            e[j] += e[j - 1] * s as u64;
        }
    }
    Ok(e[r])
}

/// Intra-part edge patterns added to `K_l[t]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpecialKind {
    /// A path of length two inside one part.
    Alpha,
    /// Two disjoint edges inside one part.
    Beta,
    /// One edge in each of two different parts.
    Gamma,
    /// A single edge inside one part.
    Plus,
}

impl SpecialKind {
    fn min_part(self) -> usize {
        match self {
            SpecialKind::Alpha => 3,
            SpecialKind::Beta => 4,
            SpecialKind::Gamma | SpecialKind::Plus => 2,
        }
    }

    /// True when `t` is below the usual part size `t >= 4` for
    /// these graphs; the graph is still well defined.
    pub fn below_standing_assumption(self, t: usize) -> bool {
        match self {
            SpecialKind::Plus => false,
            _ => t < 4,
        }
    }
}

impl FromStr for SpecialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alpha" | "α" | "a" => Ok(SpecialKind::Alpha),
            "beta" | "β" | "b" => Ok(SpecialKind::Beta),
            "gamma" | "γ" | "g" => Ok(SpecialKind::Gamma),
            "plus" | "+" => Ok(SpecialKind::Plus),
            other => Err(Error::Parse(format!("unknown special blowup kind `{other}`"))),
        }
    }
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialKind::Alpha => "alpha",
            SpecialKind::Beta => "beta",
            SpecialKind::Gamma => "gamma",
            SpecialKind::Plus => "plus",
        })
    }
}

/// `K_l^α[t]`, `K_l^β[t]`, `K_l^γ[t]` or `K_l^+[t]`. Part `i` is the block
/// `t*i .. t*i + t`; added edges use the lowest vertices of parts 0 and 1.
pub fn special_blowup_graph(kind: SpecialKind, ell: usize, t: usize) -> Result<Hypergraph> {
    if ell < 2 {
        return Err(Error::InvalidParameter("need at least two parts".into()));
    }
    if t < kind.min_part() {
        return Err(Error::InvalidParameter(format!(
            "parts of size {t} are too small for the {kind} pattern (need {})",
            kind.min_part()
        )));
    }
    let base = blowup(&Hypergraph::complete(ell, 2)?, t)?;
    let extra: Vec<[usize; 2]> = match kind {
        SpecialKind::Alpha => vec![[0, 1], [1, 2]],
        SpecialKind::Beta => vec![[0, 1], [2, 3]],
        SpecialKind::Gamma => vec![[0, 1], [t, t + 1]],
        SpecialKind::Plus => vec![[0, 1]],
    };
    let mut edges = base.edges().to_vec();
    edges.extend(extra.iter().map(|e| e.to_vec()));
    Hypergraph::new(base.n(), 2, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonical_form, is_isomorphic};
    use crate::embed::{count_copies, CopyOptions};

    fn h(n: usize, r: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, r, edges.iter().copied()).unwrap()
    }

    fn path(edges: usize) -> Hypergraph {
        let e: Vec<Vec<usize>> = (0..edges).map(|i| vec![i, i + 1]).collect();
        Hypergraph::new(edges + 1, 2, e).unwrap()
    }

    fn cycle(n: usize) -> Hypergraph {
        let e: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        Hypergraph::new(n, 2, e).unwrap()
    }

    fn k3() -> Hypergraph {
        Hypergraph::complete(3, 2).unwrap()
    }

    #[test]
    fn expansion_cases() {
        let p = expansion(&path(4), 3).unwrap();
        assert_eq!((p.n(), p.len()), (9, 4));
        let c = expansion(&cycle(6), 3).unwrap();
        assert_eq!((c.n(), c.len()), (12, 6));
        let t = expansion(&k3(), 3).unwrap();
        assert_eq!(t.edges(), &[vec![0, 1, 3], vec![0, 2, 4], vec![1, 2, 5]]);
        assert!(expansion(&k3(), 2).is_err());
        // two edges only meet inside the core
        for (i, a) in c.edges().iter().enumerate() {
            for b in &c.edges()[i + 1..] {
                assert!(a.iter().filter(|v| b.contains(v)).all(|&v| v < 6));
            }
        }
    }

    #[test]
    fn expansion_link() {
        let t = expansion(&k3(), 3).unwrap();
        for v in 3..6 {
            assert_eq!(t.link(v).unwrap().len(), 1);
        }
    }

    #[test]
    fn blowup_cases() {
        let edge = h(2, 2, &[&[0, 1]]);
        let b = blowup(&edge, 2).unwrap();
        assert_eq!(b.len(), 4);
        assert!(is_isomorphic(&b, &cycle(4)).unwrap());
        assert_eq!(blowup(&k3(), 2).unwrap().len(), 12);
        assert_eq!(blowup(&k3(), 1).unwrap(), k3());
        assert!(blowup(&k3(), 0).is_err());
        let t = Hypergraph::complete(4, 3).unwrap();
        assert_eq!(blowup(&t, 2).unwrap().len(), 4 * 8);
    }

    #[test]
    fn blowup_composition() {
        let corpus = [
            k3(),
            path(3),
            h(4, 2, &[&[0, 1], &[2, 3]]),
            h(4, 3, &[&[0, 1, 2], &[1, 2, 3]]),
            Hypergraph::complete(4, 2).unwrap(),
        ];
        for f in &corpus {
            for t in 1..=2 {
                for s in 1..=2 {
                    let twice = blowup(&blowup(f, t).unwrap(), s).unwrap();
                    let once = blowup(f, t * s).unwrap();
                    assert!(is_isomorphic(&twice, &once).unwrap());
                }
            }
        }
    }

    #[test]
    fn split_vertex_cases() {
        let s = split_vertex(&k3(), 0).unwrap();
        // {1,2} -> {0,1}; link of 0 is {1},{2} -> {0,2},{1,3}
        assert_eq!(s, h(4, 2, &[&[0, 1], &[0, 2], &[1, 3]]));
        assert!(is_isomorphic(&s, &path(3)).unwrap());

        let two = split_vertex(&path(2), 1).unwrap();
        assert!(is_isomorphic(&two, &h(4, 2, &[&[0, 1], &[2, 3]])).unwrap());

        let iso = h(4, 2, &[&[0, 1], &[1, 2]]);
        assert_eq!(split_vertex(&iso, 3).unwrap(), path(2));
        assert!(split_vertex(&iso, 4).is_err());
    }

    #[test]
    fn split_set_cases() {
        assert_eq!(split_set(&k3(), &[], Independence::Weak).unwrap(), k3());
        let s = split_set(&path(2), &[0, 2], Independence::Weak).unwrap();
        assert_eq!(canonical_form(&s).unwrap(), canonical_form(&path(2)).unwrap());
        assert!(matches!(
            split_set(&k3(), &[0, 1], Independence::Weak),
            Err(Error::NotIndependent(_))
        ));
        assert!(split_set(&k3(), &[0, 0], Independence::Weak).is_err());
    }

    #[test]
    fn split_set_handles_two_members_in_one_edge() {
        // weakly independent {0,1} inside the triple {0,1,2}
        let t = h(4, 3, &[&[0, 1, 2], &[1, 2, 3]]);
        let a = split_set(&t, &[0, 1], Independence::Weak).unwrap();
        let b = split_set(&t, &[1, 0], Independence::Weak).unwrap();
        assert_eq!(a.len(), 2);
        assert!(is_isomorphic(&a, &b).unwrap());
        assert!(split_set(&t, &[0, 1], Independence::Strong).is_err());
    }

    #[test]
    fn splitting_family_cases() {
        let s = splitting_family(&k3(), FamilyOptions::default()).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains_isomorph(&k3()).unwrap());
        assert!(s.contains_isomorph(&path(3)).unwrap());

        let s = splitting_family(&path(2), FamilyOptions::default()).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains_isomorph(&path(2)).unwrap());
        assert!(s.contains_isomorph(&h(4, 2, &[&[0, 1], &[2, 3]])).unwrap());

        let edge = h(2, 2, &[&[0, 1]]);
        assert_eq!(splitting_family(&edge, FamilyOptions::default()).unwrap().len(), 1);

        let raw = FamilyOptions {
            dedup: false,
            ..FamilyOptions::default()
        };
        assert_eq!(splitting_family(&path(2), raw).unwrap().len(), 5);
    }

    #[test]
    fn tripartite_split_contains_bipartite_member() {
        for (a, b, c) in [(1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2)] {
            let sizes = [a, b, c];
            let mut edges = Vec::new();
            let offs = [0, a, a + b];
            for i in 0..3 {
                for j in i + 1..3 {
                    for x in 0..sizes[i] {
                        for y in 0..sizes[j] {
                            edges.push(vec![offs[i] + x, offs[j] + y]);
                        }
                    }
                }
            }
            let f = Hypergraph::new(a + b + c, 2, edges).unwrap();
            let fam = splitting_family(&f, FamilyOptions::default()).unwrap();
            assert!(fam.members().iter().any(is_bipartite));
        }
    }

    fn is_bipartite(g: &Hypergraph) -> bool {
        let mut side = vec![None; g.n()];
        for s in 0..g.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for e in g.edges().iter().filter(|e| e.contains(&v)) {
                    let w = if e[0] == v { e[1] } else { e[0] };
                    match side[w] {
                        None => {
                            side[w] = Some(!side[v].unwrap());
                            stack.push(w);
                        }
                        Some(x) if x == side[v].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    #[test]
    fn minus_family_cases() {
        let k4 = Hypergraph::complete(4, 2).unwrap();
        assert_eq!(minus_family(&k4, FamilyOptions::default()).unwrap().len(), 1);
        let m = minus_family(&path(3), FamilyOptions::default()).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.contains_isomorph(&path(2)).unwrap());
        assert!(m.contains_isomorph(&h(4, 2, &[&[0, 1], &[2, 3]])).unwrap());
        let m = minus_family(&k3(), FamilyOptions::default()).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m.contains_isomorph(&path(2)).unwrap());
        assert!(minus_family(&Hypergraph::empty(3, 2).unwrap(), FamilyOptions::default()).is_err());
        let keep = FamilyOptions {
            keep_isolated: true,
            ..FamilyOptions::default()
        };
        assert_eq!(minus_family(&path(3), keep).unwrap().members()[0].n(), 4);
    }

    #[test]
    fn pendant_cases() {
        let t = expansion(&k3(), 3).unwrap();
        assert_eq!(pendant_edges(&t, 1).unwrap(), vec![0, 1, 2]);
        assert!(pendant_edges(&t, 2).unwrap().is_empty());
        assert_eq!(
            pendant_minus_family(&t, 1, FamilyOptions::default()).unwrap().len(),
            1
        );
        assert!(pendant_minus_family(&k3(), 1, FamilyOptions::default())
            .unwrap()
            .is_empty());
        let p = pendant_minus_family(&path(2), 1, FamilyOptions::default()).unwrap();
        assert_eq!(p.len(), 1);
        assert!(pendant_edges(&k3(), 2).is_err());
        assert!(pendant_edges(&k3(), 0).is_err());
    }

    #[test]
    fn turan_cases() {
        let (t, part) = turan_hypergraph(7, 3, 3).unwrap();
        assert_eq!(part.sizes, vec![3, 2, 2]);
        assert_eq!(t.len(), 12);
        assert_eq!(turan_count(7, 3, 3).unwrap(), 12);
        let (t, _) = turan_hypergraph(6, 3, 2).unwrap();
        assert_eq!(t.len(), 12);
        assert!(is_isomorphic(&t, &blowup(&k3(), 2).unwrap()).unwrap());
        assert_eq!(turan_hypergraph(8, 2, 3).unwrap().0.len(), 0);
        assert_eq!(turan_count(8, 2, 3).unwrap(), 0);
        let p = TuranPartition::new(10, 4).unwrap();
        assert_eq!(p.sizes, vec![3, 3, 2, 2]);
        assert_eq!(p.part_of, vec![0, 0, 0, 1, 1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn turan_graph_is_clique_free() {
        for ell in 2..=4 {
            for n in 1..=9 {
                let (t, _) = turan_hypergraph(n, ell, 2).unwrap();
                let clique = Hypergraph::complete(ell + 1, 2).unwrap();
                assert_eq!(count_copies(&clique, &t, CopyOptions::default()).unwrap(), 0);
            }
        }
    }

    #[test]
    fn special_blowups() {
        let a = special_blowup_graph(SpecialKind::Alpha, 3, 4).unwrap();
        assert_eq!(a.len(), 50);
        assert!(a.contains_edge(&[0, 1]) && a.contains_edge(&[1, 2]));
        let g = special_blowup_graph(SpecialKind::Gamma, 3, 4).unwrap();
        assert_eq!(g.len(), 50);
        assert!(g.contains_edge(&[0, 1]) && g.contains_edge(&[4, 5]));
        let b = special_blowup_graph(SpecialKind::Beta, 3, 4).unwrap();
        assert!(b.contains_edge(&[0, 1]) && b.contains_edge(&[2, 3]));
        assert_eq!(special_blowup_graph(SpecialKind::Plus, 2, 2).unwrap().len(), 5);
        assert!(special_blowup_graph(SpecialKind::Beta, 3, 3).is_err());
        assert!(special_blowup_graph(SpecialKind::Alpha, 1, 4).is_err());
        assert!(SpecialKind::Alpha.below_standing_assumption(3));
        assert!(!SpecialKind::Plus.below_standing_assumption(2));
        assert_eq!("γ".parse::<SpecialKind>().unwrap(), SpecialKind::Gamma);
    }
}
