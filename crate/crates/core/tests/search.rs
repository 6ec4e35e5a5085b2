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

use arl_core::named;
use arl_core::search::{bound_report, exact_anti_ramsey, exact_turan, BoundOptions, SearchReport, Witness};
use arl_core::{Family, Hypergraph, SearchStatus, SolverOptions};

fn unpruned() -> SolverOptions {
    SolverOptions {
        bound_pruning: false,
        ..SolverOptions::default()
    }
}

#[test]
fn colorings_of_k5_are_counted_by_bell_10() {
    // K_6 never fits in K_5, so every set partition of the 10 edges is a leaf.
    let k6 = named::parse("K6").unwrap();
    let rep = exact_anti_ramsey(5, &k6, &unpruned()).unwrap();
    assert_eq!(rep.leaves, 115_975);
    assert_eq!(rep.value, 11);
    let par = SolverOptions { threads: 4, ..unpruned() };
    assert_eq!(exact_anti_ramsey(5, &k6, &par).unwrap().leaves, 115_975);
}

#[test]
fn parallel_runs_reproduce_the_sequential_report() {
    let c4 = named::parse("C4").unwrap();
    let seq = exact_anti_ramsey(5, &c4, &SolverOptions::default()).unwrap();
    for threads in [2, 3, 8] {
        let opts = SolverOptions {
            threads,
            ..SolverOptions::default()
        };
        let par = exact_anti_ramsey(5, &c4, &opts).unwrap();
        assert_eq!((par.value, &par.witness, par.status), (seq.value, &seq.witness, seq.status));
    }
    let fam = Family::new(vec![named::parse("K3").unwrap(), c4]).unwrap();
    let seq = exact_turan(7, 2, &fam, &SolverOptions::default()).unwrap();
    let par = exact_turan(7, 2, &fam, &SolverOptions { threads: 4, ..SolverOptions::default() }).unwrap();
    assert_eq!(seq.value, 8);
    assert_eq!(seq.witness, par.witness);
}

#[test]
fn reports_round_trip_through_json() {
    let rep = exact_anti_ramsey(4, &named::parse("K3").unwrap(), &SolverOptions::default()).unwrap();
    let back = SearchReport::from_json(&rep.to_json()).unwrap();
    assert_eq!(back, rep);
    assert!(matches!(back.witness, Some(Witness::Coloring(_))));
    let rep = exact_turan(5, 2, &Family::single(named::parse("K3").unwrap()), &SolverOptions::default()).unwrap();
    let back = SearchReport::from_json(&rep.to_json()).unwrap();
    assert!(matches!(back.witness, Some(Witness::Hypergraph(ref h)) if h.len() == 6));
    let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    for key in ["instance", "value", "status", "witness", "nodes", "elapsed_ms"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    assert_eq!(json["status"], "exact");
}

#[test]
fn exhausted_budgets_are_reported() {
    let k4 = named::parse("K4").unwrap();
    let opts = SolverOptions::with_budget(arl_core::Budget::nodes(50));
    let rep = exact_turan(8, 2, &Family::single(k4), &opts).unwrap();
    assert_eq!(rep.status, SearchStatus::BudgetExhausted);
    assert!(rep.value <= 21);
}

#[test]
fn expanded_path_bounds() {
    let p3 = named::parse("P3").unwrap();
    let table = bound_report(6, &p3, 3, &BoundOptions::default()).unwrap();
    assert_eq!(table.split_ex, Some(1));
    assert_eq!(table.splitting_rhs, Some(2));
    assert!(table.hard_failures().is_empty());
    assert_eq!(table.target.r(), 3);
}

#[test]
fn triple_pairs_at_five_vertices() {
    // two triples sharing a pair / a single vertex
    for edges in [vec![[0, 1, 2], [0, 1, 3]], vec![[0, 1, 2], [0, 3, 4]]] {
        let v = edges.iter().flatten().max().unwrap() + 1;
        let f = Hypergraph::new(v, 3, edges).unwrap();
        let table = bound_report(5, &f, 3, &BoundOptions::default()).unwrap();
        assert!(table.hard_failures().is_empty());
        assert!(table.lower.unwrap() <= table.ar_exact.unwrap());
    }
}
