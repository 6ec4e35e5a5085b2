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

//! Hypergraph anti-Ramsey and Turán machinery.
//!
//! The crate is organised bottom-up:
//!
//! * [`hypergraph`], [`canon`], [`embed`] and [`family`]: uniform
//!   hypergraphs, canonical labeling, embedding enumeration and families;
//! * [`constructions`]: expansion, blowup, splitting, edge-deletion families,
//!   Turán hypergraphs and special blowup graphs;
//! * [`coloring`]: edge colorings of `K_n^r` and rainbow-copy detection;
//! * [`search`]: exact Turán / anti-Ramsey solvers and bound evaluation;
//! * [`suite`]: the small-case verification table exposed by the CLI.
//!
//! Edges of `K_n^r` are always enumerated in colex order ([`colex`]).

pub mod canon;
pub mod colex;
pub mod coloring;
pub mod constructions;
pub mod embed;
pub mod error;
pub mod family;
pub mod hypergraph;
pub mod named;
pub mod search;
pub mod suite;

pub use canon::{canonical_form, is_isomorphic};
pub use coloring::{Coloring, RainbowOutcome, RainbowWitness};
pub use constructions::{SpecialKind, TuranPartition};
pub use embed::{enumerate_copies, CopyOptions, Embedding};
pub use error::{Error, Result};
pub use family::Family;
pub use hypergraph::{Hypergraph, Independence};
pub use search::{Budget, SearchReport, SearchStatus, SolverOptions};
