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

//! Exact solvers for Turán and anti-Ramsey numbers.
//!
//! Both solvers walk the edges of `K_n^r` in colex order. The Turán solver
//! decides include/exclude per edge, the anti-Ramsey solver assigns each
//! edge an existing color class or opens a new one (restricted growth, so
//! color relabelings are never revisited). Branches are cut when the newest
//! decision completes a forbidden (rainbow) copy and, optionally, when the
//! remaining edges cannot beat the best value found.
//!
//! Parallel runs split the tree into prefixes taken in search order and
//! reduce to the first optimal leaf in that order, so the value, witness and
//! status never depend on the worker count.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicI64, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::hypergraph::Hypergraph;

mod anti_ramsey;
mod bounds;
mod matcher;
pub mod naive;
mod symmetry;
mod turan;
mod verify;

pub use anti_ramsey::exact_anti_ramsey;
pub use bounds::{bound_report, BoundCheck, BoundOptions, BoundsTable, ClaimScope, PendantBound, Verdict};
pub use turan::exact_turan;
pub use verify::verify_feasibility;

/// Node and wall-clock limits for one solver run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_secs: Option<f64>,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 2_000_000_000;
    pub const DEFAULT_SECS: f64 = 600.0;

    pub fn unlimited() -> Self {
        Budget {
            max_nodes: None,
            max_secs: None,
        }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_secs: None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Some(Self::DEFAULT_NODES),
            max_secs: Some(Self::DEFAULT_SECS),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverOptions {
    pub budget: Budget,
    /// Worker threads; 0 and 1 both mean sequential.
    pub threads: usize,
    /// Cut branches whose best completion cannot beat the incumbent.
    pub bound_pruning: bool,
    /// Lex-leader symmetry breaking under adjacent vertex transpositions.
    pub orbit_pruning: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: Budget::default(),
            threads: 1,
            bound_pruning: true,
            orbit_pruning: false,
        }
    }
}

impl SolverOptions {
    pub fn with_budget(budget: Budget) -> Self {
        SolverOptions {
            budget,
            ..SolverOptions::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Exact,
    /// The search stopped early; the value is only a lower bound.
    BudgetExhausted,
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStatus::Exact => "exact",
            SearchStatus::BudgetExhausted => "budget_exhausted",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    /// `ex(n, family)`
    Turan,
    /// `ar(n, F)`
    AntiRamsey,
}

/// What was solved: the problem, host size and forbidden graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub problem: Problem,
    pub n: usize,
    pub r: usize,
    pub family: Vec<Hypergraph>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Hypergraph(Hypergraph),
    Coloring(Coloring),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub instance: Instance,
    pub value: u64,
    pub status: SearchStatus,
    /// An extremal object; absent only for anti-Ramsey instances where no
    /// coloring avoids a rainbow copy.
    pub witness: Option<Witness>,
    pub nodes: u64,
    pub leaves: u64,
    pub elapsed_ms: u64,
}

impl SearchReport {
    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Counters and incumbent shared by all workers of one run.
pub(crate) struct Shared {
    best: AtomicI64,
    nodes: AtomicU64,
    leaves: AtomicU64,
    stop: AtomicBool,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

const FLUSH: u64 = 1024;

impl Shared {
    pub(crate) fn new(budget: Budget) -> Self {
        Shared {
            best: AtomicI64::new(-1),
            nodes: AtomicU64::new(0),
            leaves: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            max_nodes: budget.max_nodes,
            deadline: budget
                .max_secs
                .map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0))),
        }
    }

    pub(crate) fn best(&self) -> i64 {
        self.best.load(Ordering::Relaxed)
    }

    pub(crate) fn offer(&self, value: i64) {
        self.best.fetch_max(value, Ordering::Relaxed);
    }

    pub(crate) fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    pub(crate) fn add_leaves(&self, k: u64) {
        self.leaves.fetch_add(k, Ordering::Relaxed);
    }

    /// Flushes a worker's pending node count and checks the limits.
    pub(crate) fn flush(&self, pending: &mut u64) -> bool {
        let total = self.nodes.fetch_add(*pending, Ordering::Relaxed) + *pending;
        *pending = 0;
        let over_nodes = self.max_nodes.is_some_and(|m| total > m);
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stopped()
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub(crate) fn leaves(&self) -> u64 {
        self.leaves.load(Ordering::Relaxed)
    }
}

/// Per-worker node counter that reports to [`Shared`] in batches.
pub(crate) struct Ticker<'a> {
    shared: &'a Shared,
    pending: u64,
}

impl<'a> Ticker<'a> {
    pub(crate) fn new(shared: &'a Shared) -> Self {
        Ticker { shared, pending: 0 }
    }

    /// Counts one node; returns false once the run must stop.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= FLUSH {
            return !self.shared.flush(&mut self.pending);
        }
        !self.shared.stopped()
    }

    pub(crate) fn finish(mut self) {
        self.shared.flush(&mut self.pending);
    }
}

/// Runs `work` over the prefixes in order, on `threads` workers, and keeps
/// the first result with the largest value.
pub(crate) fn reduce_in_order<P, R, W>(threads: usize, prefixes: Vec<P>, work: W) -> Option<(i64, R)>
where
    P: Send + Sync,
    R: Send,
    W: Fn(&P) -> Option<(i64, R)> + Send + Sync,
{
    use rayon::prelude::*;
    let results: Vec<Option<(i64, R)>> = if threads <= 1 {
        prefixes.iter().map(&work).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| prefixes.par_iter().map(&work).collect())
    };
    let mut best: Option<(i64, R)> = None;
    for (v, r) in results.into_iter().flatten() {
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, r));
        }
    }
    best
}

/// Depth at which parallel runs split the tree.
pub(crate) fn split_depth(threads: usize, edges: usize, cap: usize) -> usize {
    if threads <= 1 {
        0
    } else {
        edges.min(cap)
    }
}
