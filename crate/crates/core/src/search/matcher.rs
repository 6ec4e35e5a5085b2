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

//! Copies of a pattern that pass through one given host edge.

use itertools::Itertools;

use crate::colex::EdgeTable;
use crate::embed::automorphisms;
use crate::error::Result;
use crate::hypergraph::Hypergraph;

/// One way to start a search: pin a pattern edge onto the anchor, then map
/// the remaining vertices in `order`.
struct Plan {
    anchor: Vec<usize>,
    order: Vec<usize>,
    /// Pattern edges completed when `order[i]` is mapped.
    closing: Vec<Vec<usize>>,
}

pub(crate) struct Pattern {
    edges: Vec<Vec<usize>>,
    nv: usize,
    plans: Vec<Plan>,
    /// All orderings of `0..r`.
    arrangements: Vec<Vec<usize>>,
}

impl Pattern {
    /// Prepares `f` (isolated vertices ignored). One plan per orbit of edges
    /// under the automorphism group.
    pub(crate) fn new(f: &Hypergraph) -> Result<Self> {
        let f = f.drop_isolated();
        let nv = f.n();
        let edges = f.edges().to_vec();
        let auts = automorphisms(&f, false)?;
        let mut covered = vec![false; edges.len()];
        let mut plans = Vec::new();
        for i in 0..edges.len() {
            if covered[i] {
                continue;
            }
            for a in &auts {
                let mut im: Vec<usize> = edges[i].iter().map(|&v| a.image(v).unwrap()).collect();
                im.sort_unstable();
                if let Some(j) = edges.iter().position(|e| *e == im) {
                    covered[j] = true;
                }
            }
            plans.push(Self::plan(&edges, nv, i));
        }
        let arrangements = (0..f.r()).permutations(f.r()).collect();
        Ok(Pattern {
            edges,
            nv,
            plans,
            arrangements,
        })
    }

    fn plan(edges: &[Vec<usize>], nv: usize, anchor_edge: usize) -> Plan {
        let anchor = edges[anchor_edge].clone();
        let mut placed = vec![false; nv];
        for &v in &anchor {
            placed[v] = true;
        }
        let mut order = Vec::new();
        while order.len() + anchor.len() < nv {
            // the vertex closing the most edges, then touching the most placed vertices
            let next = (0..nv)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let closes = edges
                        .iter()
                        .filter(|e| e.contains(&v) && e.iter().all(|&u| u == v || placed[u]))
                        .count();
                    let touches = edges
                        .iter()
                        .filter(|e| e.contains(&v))
                        .flat_map(|e| e.iter())
                        .filter(|&&u| placed[u])
                        .count();
                    (closes, touches, std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let mut position = vec![usize::MAX; nv];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut closing = vec![Vec::new(); order.len()];
        for (i, e) in edges.iter().enumerate() {
            if i == anchor_edge {
                continue;
            }
            let last = e
                .iter()
                .filter(|&&v| position[v] != usize::MAX)
                .map(|&v| position[v])
                .max()
                .expect("distinct edges cannot both lie inside the anchor");
            closing[last].push(i);
        }
        Plan {
            anchor,
            order,
            closing,
        }
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.nv
    }

    /// Is there a copy of the pattern using host edge `anchor` whose edges
    /// all satisfy `label(rank).is_some()`? With `rainbow`, the labels of the
    /// copy's edges must also be pairwise distinct (`used` is scratch space
    /// sized to the label range, all false on entry and exit).
    pub(crate) fn copy_through<L>(
        &self,
        table: &EdgeTable,
        anchor: usize,
        label: &L,
        rainbow: bool,
        used: &mut [bool],
    ) -> bool
    where
        L: Fn(usize) -> Option<usize>,
    {
        if self.nv > table.n() || self.edges.is_empty() {
            return false;
        }
        let Some(anchor_label) = label(anchor) else {
            return false;
        };
        let host_anchor = table.edge(anchor);
        let mut state = MatchState {
            table,
            label,
            rainbow,
            map: vec![usize::MAX; self.nv],
            taken: vec![false; table.n()],
            used,
            marks: Vec::new(),
            buf: Vec::with_capacity(table.r()),
        };
        for &x in host_anchor {
            state.taken[x] = true;
        }
        if rainbow {
            state.used[anchor_label] = true;
        }
        let mut found = false;
        'plans: for plan in &self.plans {
            for arr in &self.arrangements {
                for (i, &v) in plan.anchor.iter().enumerate() {
                    state.map[v] = host_anchor[arr[i]];
                }
                if state.extend(self, plan, 0) {
                    found = true;
                    break 'plans;
                }
            }
        }
        if rainbow {
            state.used[anchor_label] = false;
        }
        found
    }
}

struct MatchState<'a, L> {
    table: &'a EdgeTable,
    label: &'a L,
    rainbow: bool,
    map: Vec<usize>,
    taken: Vec<bool>,
    used: &'a mut [bool],
    marks: Vec<usize>,
    buf: Vec<usize>,
}

impl<L> MatchState<'_, L>
where
    L: Fn(usize) -> Option<usize>,
{
    fn extend(&mut self, pattern: &Pattern, plan: &Plan, depth: usize) -> bool {
        if depth == plan.order.len() {
            return true;
        }
        let v = plan.order[depth];
        for x in 0..self.table.n() {
            if self.taken[x] {
                continue;
            }
            self.map[v] = x;
            let mark = self.marks.len();
            let mut ok = true;
            for &i in &plan.closing[depth] {
                self.buf.clear();
                self.buf.extend(pattern.edges[i].iter().map(|&u| self.map[u]));
                let rank = self.table.rank_unsorted(&mut self.buf);
                match (self.label)(rank) {
                    None => {
                        ok = false;
                        break;
                    }
                    Some(c) if self.rainbow => {
                        if self.used[c] {
                            ok = false;
                            break;
                        }
                        self.used[c] = true;
                        self.marks.push(c);
                    }
                    Some(_) => {}
                }
            }
            if ok {
                self.taken[x] = true;
                let done = self.extend(pattern, plan, depth + 1);
                self.taken[x] = false;
                if done {
                    self.unmark(mark);
                    return true;
                }
            }
            self.unmark(mark);
        }
        self.map[v] = usize::MAX;
        false
    }

    fn unmark(&mut self, mark: usize) {
        for c in self.marks.drain(mark..) {
            self.used[c] = false;
        }
    }
}
