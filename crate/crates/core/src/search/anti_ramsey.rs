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
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// `ar(n, F)`, computed as one more than the largest number of colors in a
/// rainbow-`F`-free coloring of `K_n^r`.
///
/// The reduction is exact because merging two classes of a rainbow-`F`-free
/// coloring never creates a rainbow copy: every `m` up to the maximum admits
/// a surjective rainbow-`F`-free coloring, and no larger `m` does.
///
/// Colorings are enumerated as restricted growth strings over the edges in
/// colex order, new color first. A branch dies as soon as the colored prefix
/// contains a rainbow copy through the newest edge; copies that need
/// uncolored edges are never considered. If `F` does not fit on `n` vertices
/// every coloring qualifies and the value is `C(n, r) + 1`.
pub fn exact_anti_ramsey(n: usize, f: &Hypergraph, opts: &SolverOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if f.is_empty() {
        return Err(Error::EmptyMember(0));
    }
    let r = f.r();
    let table = EdgeTable::new(n, r);
    let pattern = Pattern::new(f)?;
    let symmetry = opts.orbit_pruning.then(|| Transpositions::new(&table));
    let shared = Shared::new(opts.budget);
    let ctx = Ctx {
        table: &table,
        pattern: &pattern,
        symmetry: symmetry.as_ref(),
        shared: &shared,
        bound: opts.bound_pruning,
    };

    let depth = split_depth(opts.threads, table.len(), 7);
    let mut prefixes = Vec::new();
    ctx.prefixes(&mut vec![0; table.len()], 0, 0, depth, &mut prefixes);
    let best = reduce_in_order(opts.threads, prefixes, |prefix| ctx.solve_from(prefix));

    let status = if shared.stopped() {
        SearchStatus::BudgetExhausted
    } else {
        SearchStatus::Exact
    };
    let (value, witness) = match best {
        Some((colors, assignment)) => (
            colors as u64 + 1,
            Some(Witness::Coloring(Coloring::new(n, r, assignment)?)),
        ),
        None => (1, None),
    };
    Ok(SearchReport {
        instance: Instance {
            problem: Problem::AntiRamsey,
            n,
            r,
            family: vec![f.clone()],
        },
        value,
        status,
        witness,
        nodes: shared.nodes(),
        leaves: shared.leaves(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

struct Ctx<'a> {
    table: &'a EdgeTable,
    pattern: &'a Pattern,
    symmetry: Option<&'a Transpositions>,
    shared: &'a Shared,
    bound: bool,
}

/// Colors tried for edge `i` when `used` colors are open: a new one first.
fn choices(used: usize) -> impl Iterator<Item = usize> {
    std::iter::once(used).chain(0..used)
}

impl Ctx<'_> {
    fn admissible(&self, colors: &[usize], i: usize, used: &mut [bool], scratch: &mut Vec<usize>) -> bool {
        let label = |rank: usize| (rank <= i).then(|| colors[rank]);
        if self.pattern.copy_through(self.table, i, &label, true, used) {
            return false;
        }
        self.symmetry
            .is_none_or(|s| s.prefix_ok(colors, i, true, scratch))
    }

    fn prefixes(&self, colors: &mut Vec<usize>, i: usize, open: usize, depth: usize, out: &mut Vec<Vec<usize>>) {
        if i == depth {
            out.push(colors[..depth].to_vec());
            return;
        }
        let mut used = vec![false; self.table.len()];
        let mut scratch = Vec::new();
        for c in choices(open) {
            colors[i] = c;
            if self.admissible(colors, i, &mut used, &mut scratch) {
                self.prefixes(colors, i + 1, open.max(c + 1), depth, out);
            }
        }
        colors[i] = 0;
    }

    fn solve_from(&self, prefix: &[usize]) -> Option<(i64, Vec<usize>)> {
        let mut colors = vec![0; self.table.len()];
        colors[..prefix.len()].copy_from_slice(prefix);
        let open = prefix.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut worker = Worker {
            ctx: self,
            ticker: Ticker::new(self.shared),
            colors,
            best: None,
            leaves: 0,
            used: vec![false; self.table.len()],
            scratch: Vec::new(),
        };
        worker.dfs(prefix.len(), open);
        self.shared.add_leaves(worker.leaves);
        worker.ticker.finish();
        worker.best
    }
}

struct Worker<'a, 'c> {
    ctx: &'c Ctx<'a>,
    ticker: Ticker<'a>,
    colors: Vec<usize>,
    best: Option<(i64, Vec<usize>)>,
    leaves: u64,
    used: Vec<bool>,
    scratch: Vec<usize>,
}

impl Worker<'_, '_> {
    fn dfs(&mut self, i: usize, open: usize) {
        if !self.ticker.tick() {
            return;
        }
        let total = self.colors.len();
        if i == total {
            self.leaves += 1;
            let value = open as i64;
            if self.best.as_ref().is_none_or(|(b, _)| value > *b) {
                self.best = Some((value, self.colors.clone()));
                self.ctx.shared.offer(value);
            }
            return;
        }
        if self.ctx.bound {
            let reach = (open + total - i) as i64;
            let local = self.best.as_ref().map_or(-1, |(b, _)| *b);
            if reach <= local || reach < self.ctx.shared.best() {
                return;
            }
        }
        for c in choices(open) {
            self.colors[i] = c;
            if self
                .ctx
                .admissible(&self.colors, i, &mut self.used, &mut self.scratch)
            {
                self.dfs(i + 1, open.max(c + 1));
            }
        }
        self.colors[i] = 0;
    }
}
