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

//! Enumeration of embeddings (labeled copies) of a pattern in a host.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// An injective, edge-preserving vertex map from a pattern into a host,
/// indexed by pattern vertex. Unmapped (isolated) pattern vertices are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Embedding {
    map: Vec<Option<usize>>,
}

impl Embedding {
    pub fn new(map: Vec<Option<usize>>) -> Self {
        Embedding { map }
    }

    pub fn map(&self) -> &[Option<usize>] {
        &self.map
    }

    pub fn image(&self, v: usize) -> Option<usize> {
        self.map.get(v).copied().flatten()
    }

    /// Images of the pattern's edges, each sorted, in pattern edge order.
    pub fn image_edges(&self, pattern: &Hypergraph) -> Vec<Vec<usize>> {
        pattern
            .edges()
            .iter()
            .map(|e| {
                let mut s: Vec<usize> = e
                    .iter()
                    .map(|&v| self.map[v].expect("edge vertices are mapped"))
                    .collect();
                s.sort_unstable();
                s
            })
            .collect()
    }

    /// Checks injectivity and edge preservation against `host`.
    pub fn is_valid(&self, pattern: &Hypergraph, host: &Hypergraph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = HashSet::new();
        for v in self.map.iter().flatten() {
            if *v >= host.n() || !seen.insert(*v) {
                return false;
            }
        }
        pattern.edges().iter().all(|e| {
            e.iter().all(|&v| self.map[v].is_some())
        }) && self
            .image_edges(pattern)
            .iter()
            .all(|e| host.contains_edge(e))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CopyOptions {
    /// Stop after this many embeddings.
    pub limit: Option<usize>,
    /// Also map isolated pattern vertices (injectively, anywhere).
    pub include_isolated: bool,
    /// Yield one embedding per copy: the lexicographically least one in its
    /// orbit under the pattern's automorphisms.
    pub one_per_copy: bool,
}

/// Lazily enumerates every embedding of `pattern` into `host`.
pub fn enumerate_copies<'a>(
    pattern: &'a Hypergraph,
    host: &'a Hypergraph,
    opts: CopyOptions,
) -> Result<Copies<'a>> {
    if pattern.r() != host.r() {
        return Err(Error::UniformityMismatch(pattern.r(), host.r()));
    }
    let automorphisms = if opts.one_per_copy {
        automorphisms(pattern, opts.include_isolated)?
    } else {
        Vec::new()
    };
    Ok(Copies::new(pattern, host, opts, automorphisms))
}

pub fn count_copies(pattern: &Hypergraph, host: &Hypergraph, opts: CopyOptions) -> Result<usize> {
    Ok(enumerate_copies(pattern, host, opts)?.count())
}

pub fn contains_copy(pattern: &Hypergraph, host: &Hypergraph) -> Result<bool> {
    let opts = CopyOptions {
        limit: Some(1),
        ..CopyOptions::default()
    };
    Ok(enumerate_copies(pattern, host, opts)?.next().is_some())
}

/// Automorphisms of `pattern` restricted to its mapped vertices.
pub fn automorphisms(pattern: &Hypergraph, include_isolated: bool) -> Result<Vec<Embedding>> {
    let opts = CopyOptions {
        include_isolated,
        ..CopyOptions::default()
    };
    Ok(Copies::new(pattern, pattern, opts, Vec::new()).collect())
}

/// Iterator returned by [`enumerate_copies`].
pub struct Copies<'a> {
    pattern: &'a Hypergraph,
    order: Vec<usize>,
    closing: Vec<Vec<usize>>,
    anchors: Vec<Vec<usize>>,
    pattern_degree: Vec<usize>,
    host_degree: Vec<usize>,
    host_adj: Vec<Vec<bool>>,
    host_nbrs: Vec<Vec<usize>>,
    host_edges: HashSet<Vec<usize>>,
    automorphisms: Vec<Embedding>,
    limit: Option<usize>,
    yielded: usize,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    stack: Vec<(Vec<usize>, usize)>,
    started: bool,
    impossible: bool,
}

impl<'a> Copies<'a> {
    fn new(
        pattern: &'a Hypergraph,
        host: &'a Hypergraph,
        opts: CopyOptions,
        automorphisms: Vec<Embedding>,
    ) -> Self {
        let pattern_degree = pattern.degrees();
        let mut pnbrs = vec![Vec::new(); pattern.n()];
        for e in pattern.edges() {
            for &u in e {
                for &w in e {
                    if u != w && !pnbrs[u].contains(&w) {
                        pnbrs[u].push(w);
                    }
                }
            }
        }
        // greedy connectivity order over covered vertices, isolated ones last
        let mut domain: Vec<usize> = (0..pattern.n())
            .filter(|&v| pattern_degree[v] > 0)
            .collect();
        let mut order = Vec::with_capacity(pattern.n());
        let mut placed = vec![false; pattern.n()];
        while order.len() < domain.len() {
            let next = *domain
                .iter()
                .filter(|&&v| !placed[v])
                .max_by_key(|&&v| {
                    let back = pnbrs[v].iter().filter(|&&u| placed[u]).count();
                    (back, pattern_degree[v], std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        if opts.include_isolated {
            let isolated: Vec<usize> = (0..pattern.n())
                .filter(|&v| pattern_degree[v] == 0)
                .collect();
            order.extend(&isolated);
            domain.extend(isolated);
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
        let anchors = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                pnbrs[v]
                    .iter()
                    .copied()
                    .filter(|&u| position[u] < i)
                    .collect()
            })
            .collect();

        let host_degree = host.degrees();
        let mut host_adj = vec![vec![false; host.n()]; host.n()];
        for e in host.edges() {
            for &u in e {
                for &w in e {
                    if u != w {
                        host_adj[u][w] = true;
                    }
                }
            }
        }
        let host_nbrs = host_adj
            .iter()
            .map(|row| (0..host.n()).filter(|&w| row[w]).collect())
            .collect();
        let impossible = order.len() > host.n() || pattern.len() > host.len();
        Copies {
            pattern,
            order,
            closing,
            anchors,
            pattern_degree,
            host_degree,
            host_adj,
            host_nbrs,
            host_edges: host.edges().iter().cloned().collect(),
            automorphisms,
            limit: opts.limit,
            yielded: 0,
            map: vec![None; pattern.n()],
            used: vec![false; host.n()],
            stack: Vec::new(),
            started: false,
            impossible,
        }
    }

    fn candidates(&self, depth: usize) -> Vec<usize> {
        let v = self.order[depth];
        let need = self.pattern_degree[v];
        let anchors = &self.anchors[depth];
        let pool: Box<dyn Iterator<Item = usize> + '_> = match anchors.first() {
            Some(&a) => Box::new(self.host_nbrs[self.map[a].unwrap()].iter().copied()),
            None => Box::new(0..self.used.len()),
        };
        pool.filter(|&x| {
            !self.used[x]
                && self.host_degree[x] >= need
                && anchors
                    .iter()
                    .all(|&a| self.host_adj[self.map[a].unwrap()][x])
        })
        .collect()
    }

    fn closes(&self, depth: usize) -> bool {
        let mut buf = Vec::with_capacity(self.pattern.r());
        self.closing[depth].iter().all(|&i| {
            buf.clear();
            buf.extend(self.pattern.edges()[i].iter().map(|&v| self.map[v].unwrap()));
            buf.sort_unstable();
            self.host_edges.contains(&buf)
        })
    }

    fn is_representative(&self) -> bool {
        self.automorphisms.iter().all(|sigma| {
            for v in 0..self.map.len() {
                let (Some(a), Some(s)) = (self.map[v], sigma.image(v)) else {
                    continue;
                };
                let b = self.map[s].unwrap();
                if b != a {
                    return b > a;
                }
            }
            true
        })
    }

    fn advance(&mut self) -> Option<Embedding> {
        let depth_total = self.order.len();
        if !self.started {
            self.started = true;
            if self.impossible {
                return None;
            }
            if depth_total == 0 {
                return Some(Embedding::new(self.map.clone()));
            }
            let c = self.candidates(0);
            self.stack.push((c, 0));
        }
        while let Some(depth) = self.stack.len().checked_sub(1) {
            let v = self.order[depth];
            // undo the previous choice at this depth
            if let Some(prev) = self.map[v].take() {
                self.used[prev] = false;
            }
            let (cands, idx) = &mut self.stack[depth];
            if *idx == cands.len() {
                self.stack.pop();
                continue;
            }
            let x = cands[*idx];
            *idx += 1;
            self.map[v] = Some(x);
            self.used[x] = true;
            if !self.closes(depth) {
                continue;
            }
            if depth + 1 == depth_total {
                if self.automorphisms.is_empty() || self.is_representative() {
                    return Some(Embedding::new(self.map.clone()));
                }
                continue;
            }
            let c = self.candidates(depth + 1);
            self.stack.push((c, 0));
        }
        None
    }
}

impl Iterator for Copies<'_> {
    type Item = Embedding;

    fn next(&mut self) -> Option<Embedding> {
        if self.limit.is_some_and(|l| self.yielded >= l) {
            return None;
        }
        let out = self.advance();
        if out.is_some() {
            self.yielded += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn h(n: usize, r: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, r, edges.iter().copied()).unwrap()
    }

    fn brute_force(pattern: &Hypergraph, host: &Hypergraph) -> usize {
        let dom = pattern.covered_vertices();
        (0..host.n())
            .permutations(dom.len())
            .filter(|img| {
                let mut map = vec![usize::MAX; pattern.n()];
                for (&v, &x) in dom.iter().zip(img) {
                    map[v] = x;
                }
                pattern.edges().iter().all(|e| {
                    let im: Vec<usize> = e.iter().map(|&v| map[v]).collect();
                    host.contains_edge(&im)
                })
            })
            .count()
    }

    #[test]
    fn spec_counts() {
        let k4 = Hypergraph::complete(4, 2).unwrap();
        let edge = h(2, 2, &[&[0, 1]]);
        let opts = CopyOptions::default();
        assert_eq!(count_copies(&edge, &k4, opts).unwrap(), 12);
        let per_copy = CopyOptions {
            one_per_copy: true,
            ..opts
        };
        assert_eq!(count_copies(&edge, &k4, per_copy).unwrap(), 6);
        let k3 = Hypergraph::complete(3, 2).unwrap();
        assert_eq!(count_copies(&k3, &k4, per_copy).unwrap(), 4);
        assert_eq!(count_copies(&k3, &k4, opts).unwrap(), 24);
        let path = h(3, 2, &[&[0, 1], &[1, 2]]);
        assert_eq!(count_copies(&path, &k3, opts).unwrap(), 6);
    }

    #[test]
    fn isolated_vertices() {
        let k3 = Hypergraph::complete(3, 2).unwrap();
        let edge_plus = h(3, 2, &[&[0, 1]]);
        let opts = CopyOptions::default();
        assert_eq!(count_copies(&edge_plus, &k3, opts).unwrap(), 6);
        let with_iso = CopyOptions {
            include_isolated: true,
            ..opts
        };
        assert_eq!(count_copies(&edge_plus, &k3, with_iso).unwrap(), 6);
        let edge4 = h(4, 2, &[&[0, 1]]);
        assert_eq!(count_copies(&edge4, &k3, with_iso).unwrap(), 0);
        assert_eq!(count_copies(&edge4, &k3, opts).unwrap(), 6);
        let e = enumerate_copies(&edge4, &k3, opts).unwrap().next().unwrap();
        assert_eq!(e.map()[2], None);
        assert!(e.is_valid(&edge4, &k3));
    }

    #[test]
    fn limit_and_mismatch() {
        let k5 = Hypergraph::complete(5, 2).unwrap();
        let k3 = Hypergraph::complete(3, 2).unwrap();
        let opts = CopyOptions {
            limit: Some(7),
            ..CopyOptions::default()
        };
        assert_eq!(count_copies(&k3, &k5, opts).unwrap(), 7);
        let t = Hypergraph::complete(3, 3).unwrap();
        assert!(enumerate_copies(&t, &k5, opts).is_err());
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let r = rng.gen_range(2..=3);
            let fv = rng.gen_range(r..=5);
            let hv = rng.gen_range(fv..=7);
            let fe: Vec<Vec<usize>> = Hypergraph::complete(fv, r)
                .unwrap()
                .edges()
                .iter()
                .filter(|_| rng.gen_bool(0.35))
                .take(4)
                .cloned()
                .collect();
            let he: Vec<Vec<usize>> = Hypergraph::complete(hv, r)
                .unwrap()
                .edges()
                .iter()
                .filter(|_| rng.gen_bool(0.6))
                .cloned()
                .collect();
            let pattern = Hypergraph::new(fv, r, fe).unwrap();
            let host = Hypergraph::new(hv, r, he).unwrap();
            let got: Vec<Embedding> = enumerate_copies(&pattern, &host, CopyOptions::default())
                .unwrap()
                .collect();
            assert_eq!(got.len(), brute_force(&pattern, &host));
            assert!(got.iter().all(|e| e.is_valid(&pattern, &host)));
            let copies = count_copies(
                &pattern,
                &host,
                CopyOptions {
                    one_per_copy: true,
                    ..CopyOptions::default()
                },
            )
            .unwrap();
            let distinct: HashSet<Vec<Vec<usize>>> = got
                .iter()
                .map(|e| {
                    let mut im = e.image_edges(&pattern);
                    im.sort();
                    im
                })
                .collect();
            assert_eq!(copies, distinct.len());
        }
    }

    #[test]
    fn automorphism_counts() {
        let k4 = Hypergraph::complete(4, 2).unwrap();
        assert_eq!(automorphisms(&k4, false).unwrap().len(), 24);
        let c4 = h(4, 2, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(automorphisms(&c4, false).unwrap().len(), 8);
    }
}
