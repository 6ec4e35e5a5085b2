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

//! Canonical labeling of small hypergraphs.
//!
//! Individualization-refinement: vertices are partitioned by iterated
//! neighbourhood signatures, the first non-singleton cell is split by
//! individualizing each of its vertices in turn, and every discrete leaf
//! yields a relabeled edge list. The colex-least edge list over the whole
//! search tree is the canonical form. Automorphisms discovered between
//! leaves with equal certificates prune children lying in the same orbit
//! of the pointwise stabilizer of the current prefix.

use crate::colex::colex_cmp;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Default vertex cap for [`canonical_form`].
pub const DEFAULT_VERTEX_CAP: usize = 32;

/// Canonical relabeling of `h`. Isomorphic inputs give identical outputs.
pub fn canonical_form(h: &Hypergraph) -> Result<Hypergraph> {
    canonical_form_with_cap(h, DEFAULT_VERTEX_CAP)
}

pub fn canonical_form_with_cap(h: &Hypergraph, cap: usize) -> Result<Hypergraph> {
    canonical_labeling(h, cap).map(|(_, form)| form)
}

/// Returns `(labeling, form)` where `form == h.relabel(&labeling, h.n())`.
pub fn canonical_labeling(h: &Hypergraph, cap: usize) -> Result<(Vec<usize>, Hypergraph)> {
    if h.n() > cap {
        return Err(Error::TooLarge { n: h.n(), cap });
    }
    let mut incident = vec![Vec::new(); h.n()];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            incident[v].push(i);
        }
    }
    let mut search = Search {
        h,
        incident,
        best: None,
        generators: Vec::new(),
    };
    let start = if h.n() == 0 {
        Vec::new()
    } else {
        vec![(0..h.n()).collect()]
    };
    search.visit(start, &mut Vec::new());
    let (cert, labeling) = search.best.expect("search tree has at least one leaf");
    let form = Hypergraph::from_edges_lossy(h.n(), h.r(), cert);
    Ok((labeling, form))
}

/// Isomorphism test through canonical forms.
pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.n() != b.n() || a.r() != b.r() || a.len() != b.len() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    h: &'a Hypergraph,
    incident: Vec<Vec<usize>>,
    best: Option<(Vec<Vec<usize>>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn refine(&self, mut cells: Cells) -> Cells {
        let n = self.h.n();
        let mut color = vec![0usize; n];
        loop {
            for (c, cell) in cells.iter().enumerate() {
                for &v in cell {
                    color[v] = c;
                }
            }
            let mut next: Cells = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<Vec<usize>>, usize)> = cell
                    .iter()
                    .map(|&v| (self.signature(v, &color), v))
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn signature(&self, v: usize, color: &[usize]) -> Vec<Vec<usize>> {
        let mut sig: Vec<Vec<usize>> = self.incident[v]
            .iter()
            .map(|&i| {
                let mut s: Vec<usize> = self.h.edges()[i]
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|&u| color[u])
                    .collect();
                s.sort_unstable();
                s
            })
            .collect();
        sig.sort();
        sig
    }

    fn visit(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut children = cells[target].clone();
        children.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &children {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.visit(next, prefix);
            prefix.pop();
        }
    }

    /// Is `v` in the orbit of an explored sibling under the group generated
    /// by the known automorphisms that fix `prefix` pointwise?
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.h.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for g in &self.generators {
            if prefix.iter().any(|&p| g[p] != p) {
                continue;
            }
            any = true;
            for (x, &gx) in g.iter().enumerate().take(n) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == root)
    }

    fn leaf(&mut self, cells: &Cells) {
        let mut labeling = vec![0; self.h.n()];
        for (pos, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let mut cert: Vec<Vec<usize>> = self
            .h
            .edges()
            .iter()
            .map(|e| {
                let mut s: Vec<usize> = e.iter().map(|&v| labeling[v]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        cert.sort_by(|a, b| colex_cmp(a, b));
        match &self.best {
            None => self.best = Some((cert, labeling)),
            Some((best_cert, best_lab)) => match cmp_cert(&cert, best_cert) {
                std::cmp::Ordering::Less => self.best = Some((cert, labeling)),
                std::cmp::Ordering::Equal => {
                    // best_lab^{-1} . labeling is an automorphism
                    let mut inv = vec![0; best_lab.len()];
                    for (v, &p) in best_lab.iter().enumerate() {
                        inv[p] = v;
                    }
                    let g: Vec<usize> = labeling.iter().map(|&p| inv[p]).collect();
                    if g.iter().enumerate().any(|(i, &x)| i != x) {
                        self.generators.push(g);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

fn cmp_cert(a: &[Vec<usize>], b: &[Vec<usize>]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match colex_cmp(x, y) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}
