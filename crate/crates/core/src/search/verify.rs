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

use super::{naive, Problem, SearchReport, Witness};
use crate::colex::binomial;

/// Re-checks an exact report against its witness with the brute-force
/// routines: the witness must avoid the forbidden graphs and realize the
/// reported value.
///
/// Reports that stopped on the budget are never confirmed.
pub fn verify_feasibility(report: &SearchReport) -> bool {
    if !report.is_exact() {
        return false;
    }
    let inst = &report.instance;
    match (inst.problem, &report.witness) {
        (Problem::Turan, Some(Witness::Hypergraph(h))) => {
            h.n() == inst.n
                && h.r() == inst.r
                && h.len() as u64 == report.value
                && !inst.family.iter().any(|f| naive::contains(f, h))
        }
        (Problem::AntiRamsey, Some(Witness::Coloring(chi))) => {
            chi.n() == inst.n
                && chi.r() == inst.r
                && chi.num_colors() as u64 + 1 == report.value
                && !inst.family.iter().any(|f| naive::has_rainbow(chi, f))
        }
        // No coloring avoids a rainbow copy: only possible for one-edge patterns.
        (Problem::AntiRamsey, None) => {
            report.value == 1
                && binomial(inst.n, inst.r) > 0
                && inst.family.iter().all(|f| f.len() == 1)
        }
        _ => false,
    }
}
