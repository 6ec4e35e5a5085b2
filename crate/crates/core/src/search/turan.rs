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

use std::time::Instant;

use super::matcher::Pattern;
use super::symmetry::Transpositions;
use super::{
    reduce_in_order, split_depth, Instance, Problem, SearchReport, SearchStatus, Shared, SolverOptions,
    Ticker, Witness,
};
use crate::colex::EdgeTable;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::Hypergraph;

/// `ex(n, family)` for `r`-graphs, by include/exclude search over the edges
/// of `K_n^r` in colex order (include first).
///
/// The witness is the first extremal graph in search order. When the budget
/// runs out the value is the best found so far, a lower bound.
pub fn exact_turan(n: usize, r: usize, family: &Family, opts: &SolverOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if r == 0 {
        return Err(Error::ZeroUniformity);
    }
    for (i, f) in family.members().iter().enumerate() {
        if f.r() != r {
            return Err(Error::UniformityMismatch(f.r(), r));
        }
        if f.is_empty() {
            return Err(Error::EmptyMember(i));
        }
    }
    let table = EdgeTable::new(n, r);
    let patterns = family
        .members()
        .iter()
        .map(Pattern::new)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| p.vertex_count() <= n)
        .collect::<Vec<_>>();
    let symmetry = opts.orbit_pruning.then(|| Transpositions::new(&table));
    let shared = Shared::new(opts.budget);
    let ctx = Ctx {
        table: &table,
        patterns: &patterns,
        symmetry: symmetry.as_ref(),
        shared: &shared,
        bound: opts.bound_pruning,
    };

    let depth = split_depth(opts.threads, table.len(), 10);
    let mut prefixes = Vec::new();
    ctx.prefixes(&mut vec![0; table.len()], 0, depth, &mut prefixes);
    let best = reduce_in_order(opts.threads, prefixes, |prefix| ctx.solve_from(prefix));

    let status = if shared.stopped() {
        SearchStatus::BudgetExhausted
    } else {
        SearchStatus::Exact
    };
    let (value, witness) = match best {
        Some((v, chosen)) => {
            let edges: Vec<Vec<usize>> = chosen
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == 1)
                .map(|(i, _)| table.edge(i).to_vec())
                .collect();
            (v as u64, Hypergraph::new(n, r, edges)?)
        }
        None => (0, Hypergraph::empty(n, r)?),
    };
    Ok(SearchReport {
        instance: Instance {
            problem: Problem::Turan,
            n,
            r,
            family: family.members().to_vec(),
        },
        value,
        status,
        witness: Some(Witness::Hypergraph(witness)),
        nodes: shared.nodes(),
        leaves: shared.leaves(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

struct Ctx<'a> {
    table: &'a EdgeTable,
    patterns: &'a [Pattern],
    symmetry: Option<&'a Transpositions>,
    shared: &'a Shared,
    bound: bool,
}

impl Ctx<'_> {
    /// May edge `i` take value `chosen[i]` given the decided prefix?
    fn admissible(&self, chosen: &[usize], i: usize, scratch: &mut Vec<usize>) -> bool {
        if chosen[i] == 1 {
            let present = |rank: usize| (rank <= i && chosen[rank] == 1).then_some(0);
            if self
                .patterns
                .iter()
                .any(|p| p.copy_through(self.table, i, &present, false, &mut []))
            {
                return false;
            }
        }
        self.symmetry
            .is_none_or(|s| s.prefix_ok(chosen, i, false, scratch))
    }

    fn prefixes(&self, chosen: &mut Vec<usize>, i: usize, depth: usize, out: &mut Vec<Vec<usize>>) {
        if i == depth {
            out.push(chosen[..depth].to_vec());
            return;
        }
        let mut scratch = Vec::new();
        for v in [1, 0] {
            chosen[i] = v;
            if self.admissible(chosen, i, &mut scratch) {
                self.prefixes(chosen, i + 1, depth, out);
            }
        }
        chosen[i] = 0;
    }

    fn solve_from(&self, prefix: &[usize]) -> Option<(i64, Vec<usize>)> {
        let mut chosen = vec![0; self.table.len()];
        chosen[..prefix.len()].copy_from_slice(prefix);
        let count = prefix.iter().sum::<usize>() as i64;
        let mut worker = Worker {
            ctx: self,
            ticker: Ticker::new(self.shared),
            chosen,
            best: None,
            leaves: 0,
            scratch: Vec::new(),
        };
        worker.dfs(prefix.len(), count);
        self.shared.add_leaves(worker.leaves);
        worker.ticker.finish();
        worker.best
    }
}

struct Worker<'a, 'c> {
    ctx: &'c Ctx<'a>,
    ticker: Ticker<'a>,
    chosen: Vec<usize>,
    best: Option<(i64, Vec<usize>)>,
    leaves: u64,
    scratch: Vec<usize>,
}

impl Worker<'_, '_> {
    fn dfs(&mut self, i: usize, count: i64) {
        if !self.ticker.tick() {
            return;
        }
        let total = self.chosen.len();
        if i == total {
            self.leaves += 1;
            if self.best.as_ref().is_none_or(|(b, _)| count > *b) {
                self.best = Some((count, self.chosen.clone()));
                self.ctx.shared.offer(count);
            }
            return;
        }
        if self.ctx.bound {
            let reach = count + (total - i) as i64;
            let local = self.best.as_ref().map_or(-1, |(b, _)| *b);
            // ties against other workers must survive: their witness may come later
            if reach <= local || reach < self.ctx.shared.best() {
                return;
            }
        }
        for v in [1, 0] {
            self.chosen[i] = v;
            if self.ctx.admissible(&self.chosen, i, &mut self.scratch) {
                self.dfs(i + 1, count + v as i64);
            }
        }
        self.chosen[i] = 0;
    }
}
