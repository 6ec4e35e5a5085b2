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

use serde::{Deserialize, Serialize};

use super::{exact_anti_ramsey, exact_turan, SearchReport, SolverOptions};
use crate::colex::binomial;
use crate::constructions::{expansion, minus_family, pendant_minus_family, splitting_family, FamilyOptions};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundOptions {
    pub solver: SolverOptions,
    /// Largest `C(n, r)` for which `ar` is computed.
    pub max_ar_edges: u64,
    /// Largest `C(n, r)` for which `ex` is computed.
    pub max_ex_edges: u64,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            solver: SolverOptions::default(),
            max_ar_edges: 20,
            max_ex_edges: 45,
        }
    }
}

/// For which `n` an inequality is claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimScope {
    AllN,
    /// Only for sufficiently large `n`; a violation at small `n` is data.
    LargeN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Satisfied,
    Violated,
    /// A side was not computed exactly.
    Indeterminate,
    /// The hypotheses of the inequality do not hold for this instance.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: Option<u64>,
    pub rhs: Option<u64>,
    /// `"<="` or `">="`.
    pub relation: String,
    pub scope: ClaimScope,
    pub verdict: Verdict,
}

impl BoundCheck {
    fn new(name: String, lhs: Option<u64>, relation: &str, rhs: Option<u64>, scope: ClaimScope) -> Self {
        let verdict = match (lhs, rhs) {
            (Some(a), Some(b)) => {
                let holds = if relation == "<=" { a <= b } else { a >= b };
                if holds {
                    Verdict::Satisfied
                } else {
                    Verdict::Violated
                }
            }
            _ => Verdict::Indeterminate,
        };
        BoundCheck {
            name,
            lhs,
            rhs,
            relation: relation.to_string(),
            scope,
            verdict,
        }
    }

    fn not_applicable(name: String, relation: &str, scope: ClaimScope) -> Self {
        BoundCheck {
            name,
            lhs: None,
            rhs: None,
            relation: relation.to_string(),
            scope,
            verdict: Verdict::NotApplicable,
        }
    }
}

/// `ar(n, F) <= ex(n, F_{k−}) + (|F| − 1)·C(n, k)` for one `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantBound {
    pub k: usize,
    /// Number of non-isomorphic members of `F_{k−}`.
    pub family_size: usize,
    pub additive: u64,
    pub ex: Option<u64>,
    pub rhs: Option<u64>,
}

/// The computed sides of the upper and lower bounds for `ar(n, target)`,
/// where `target` is `F` itself (`r = k`) or its expansion `H_F^r`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsTable {
    pub n: usize,
    /// Uniformity of `F`.
    pub k: usize,
    /// Uniformity of the target.
    pub r: usize,
    pub pattern: Hypergraph,
    pub target: Hypergraph,
    pub ar_exact: Option<u64>,
    /// `ex(n, target_−)`
    pub ex_minus: Option<u64>,
    /// `ex_minus + 2`
    pub lower: Option<u64>,
    /// `ex(n, Split(F))`, for expansions only.
    pub split_ex: Option<u64>,
    /// `ex(n, H_{F_−}^r)`, for expansions only.
    pub expanded_minus_ex: Option<u64>,
    /// `ex(n, H_{F_−}^r) + (|F| − 1)·ex(n, Split(F)) + 1`
    pub splitting_rhs: Option<u64>,
    pub pendant: Vec<PendantBound>,
    pub checks: Vec<BoundCheck>,
    /// Every solver run behind the table.
    pub reports: Vec<SearchReport>,
}

impl BoundsTable {
    /// Violated checks of inequalities claimed for every `n`.
    pub fn hard_failures(&self) -> Vec<&BoundCheck> {
        self.checks
            .iter()
            .filter(|c| c.scope == ClaimScope::AllN && c.verdict == Verdict::Violated)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    pub fn to_text(&self) -> String {
        let show = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
        let mut out = format!(
            "n {} k {} r {} |F| {}\nar {}\nex_minus {}\nlower {}\nsplit_ex {}\nexpanded_minus_ex {}\nsplitting_rhs {}\n",
            self.n,
            self.k,
            self.r,
            self.pattern.len(),
            show(self.ar_exact),
            show(self.ex_minus),
            show(self.lower),
            show(self.split_ex),
            show(self.expanded_minus_ex),
            show(self.splitting_rhs),
        );
        for p in &self.pendant {
            out += &format!(
                "pendant k={} members {} ex {} additive {} rhs {}\n",
                p.k,
                p.family_size,
                show(p.ex),
                p.additive,
                show(p.rhs)
            );
        }
        for c in &self.checks {
            out += &format!(
                "{:?}\t{} {} {}\t{:?}\t{}\n",
                c.verdict,
                show(c.lhs),
                c.relation,
                show(c.rhs),
                c.scope,
                c.name
            );
        }
        out
    }
}

struct Runner<'a> {
    n: usize,
    opts: &'a BoundOptions,
    reports: Vec<SearchReport>,
}

impl Runner<'_> {
    /// Exact `ex(n, family)` or `None` when too large or out of budget.
    /// An empty family forbids nothing.
    fn ex(&mut self, r: usize, family: &Family) -> Result<Option<u64>> {
        if family.is_empty() {
            return Ok(Some(binomial(self.n, r)));
        }
        if binomial(self.n, r) > self.opts.max_ex_edges {
            return Ok(None);
        }
        let rep = exact_turan(self.n, r, family, &self.opts.solver)?;
        let value = rep.is_exact().then_some(rep.value);
        self.reports.push(rep);
        Ok(value)
    }

    fn ar(&mut self, f: &Hypergraph) -> Result<Option<u64>> {
        if binomial(self.n, f.r()) > self.opts.max_ar_edges {
            return Ok(None);
        }
        let rep = exact_anti_ramsey(self.n, f, &self.opts.solver)?;
        let value = rep.is_exact().then_some(rep.value);
        self.reports.push(rep);
        Ok(value)
    }
}

/// Evaluates the lower bound `ar(n, T) >= ex(n, T_−) + 2`, the pendant-edge
/// upper bounds on `ar(n, T)` for every `1 <= k < r`, and, when `r > k >= 2`,
/// the splitting upper bound for `T = H_F^r`.
///
/// Quantities whose host has too many edges are left absent and the
/// inequalities that need them are indeterminate.
pub fn bound_report(n: usize, f: &Hypergraph, r: usize, opts: &BoundOptions) -> Result<BoundsTable> {
    let k = f.r();
    if f.is_empty() {
        return Err(Error::InvalidParameter("F must have at least one edge".into()));
    }
    if r < k {
        return Err(Error::InvalidParameter(format!(
            "target uniformity {r} is below the uniformity {k} of F"
        )));
    }
    let f = f.drop_isolated();
    let target = if r == k { f.clone() } else { expansion(&f, r)? };
    let fam_opts = FamilyOptions::default();
    let mut run = Runner {
        n,
        opts,
        reports: Vec::new(),
    };
    let mut checks = Vec::new();

    let ar_exact = run.ar(&target)?;

    // Deleting the only edge leaves nothing to forbid, so the lower bound
    // needs two edges.
    let (ex_minus, lower) = if target.len() >= 2 {
        let ex = run.ex(r, &minus_family(&target, fam_opts)?)?;
        (ex, ex.map(|e| e + 2))
    } else {
        (None, None)
    };
    let lower_name = "ar(n,F) >= ex(n,F_-) + 2".to_string();
    checks.push(if target.len() >= 2 {
        BoundCheck::new(lower_name, ar_exact, ">=", lower, ClaimScope::AllN)
    } else {
        BoundCheck::not_applicable(lower_name, ">=", ClaimScope::AllN)
    });

    let (mut split_ex, mut expanded_minus_ex, mut splitting_rhs) = (None, None, None);
    let splitting_name = "ar(n,H_F^r) <= ex(n,H_{F_-}^r) + (|F|-1) ex(n,Split(F)) + 1".to_string();
    if r > k && k >= 2 {
        split_ex = run.ex(k, &splitting_family(&f, fam_opts)?)?;
        expanded_minus_ex = if f.len() >= 2 {
            let expanded = minus_family(&f, fam_opts)?
                .members()
                .iter()
                .map(|m| expansion(m, r))
                .collect::<Result<Vec<_>>>()?;
            run.ex(r, &Family::new(expanded)?)?
        } else {
            // H_{F_−}^r is edgeless: nothing on n vertices avoids it.
            None
        };
        let additive = split_ex.map(|s| (f.len() as u64 - 1) * s);
        splitting_rhs = match (expanded_minus_ex, additive) {
            (Some(e), Some(a)) => Some(e + a + 1),
            _ => None,
        };
        checks.push(if f.len() >= 2 {
            BoundCheck::new(splitting_name, ar_exact, "<=", splitting_rhs, ClaimScope::LargeN)
        } else {
            BoundCheck::not_applicable(splitting_name, "<=", ClaimScope::LargeN)
        });
    } else {
        checks.push(BoundCheck::not_applicable(splitting_name, "<=", ClaimScope::LargeN));
    }

    let mut pendant = Vec::new();
    for kk in 1..r {
        let name = format!("ar(n,F) <= ex(n,F_{{{kk}-}}) + (|F|-1) C(n,{kk})");
        let additive = (target.len() as u64 - 1) * binomial(n, kk);
        if target.len() < 2 || n < r {
            pendant.push(PendantBound {
                k: kk,
                family_size: 0,
                additive,
                ex: None,
                rhs: None,
            });
            checks.push(BoundCheck::not_applicable(name, "<=", ClaimScope::AllN));
            continue;
        }
        let fam = pendant_minus_family(&target, kk, fam_opts)?;
        let ex = run.ex(r, &fam)?;
        let rhs = ex.map(|e| e + additive);
        pendant.push(PendantBound {
            k: kk,
            family_size: fam.len(),
            additive,
            ex,
            rhs,
        });
        checks.push(BoundCheck::new(name, ar_exact, "<=", rhs, ClaimScope::AllN));
    }

    Ok(BoundsTable {
        n,
        k,
        r,
        pattern: f,
        target,
        ar_exact,
        ex_minus,
        lower,
        split_ex,
        expanded_minus_ex,
        splitting_rhs,
        pendant,
        checks,
        reports: run.reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path2() -> Hypergraph {
        Hypergraph::new(3, 2, [[0, 1], [1, 2]]).unwrap()
    }

    #[test]
    fn expanded_two_edge_path() {
        let t = bound_report(6, &path2(), 3, &BoundOptions::default()).unwrap();
        assert_eq!(t.split_ex, Some(1));
        assert_eq!(t.expanded_minus_ex, Some(0));
        assert_eq!(t.splitting_rhs, Some(2));
        assert!(t.hard_failures().is_empty());
    }

    #[test]
    fn triangle_lower_bound() {
        let k3 = Hypergraph::complete(3, 2).unwrap();
        let t = bound_report(5, &k3, 2, &BoundOptions::default()).unwrap();
        assert_eq!(t.ex_minus, Some(2));
        assert_eq!(t.lower, Some(4));
        assert_eq!(t.ar_exact, Some(5));
        assert_eq!(t.pendant.len(), 1);
        assert!(t.hard_failures().is_empty());
        assert!(t
            .checks
            .iter()
            .all(|c| c.verdict == Verdict::Satisfied || c.verdict == Verdict::NotApplicable));
    }

    #[test]
    fn single_edge_has_no_additive_term() {
        let e = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let t = bound_report(5, &e, 3, &BoundOptions::default()).unwrap();
        assert!(t.pendant.iter().all(|p| p.additive == 0));
        assert_eq!(t.ar_exact, Some(1));
        assert!(t
            .checks
            .iter()
            .all(|c| c.verdict == Verdict::NotApplicable));
    }

    #[test]
    fn oversized_instances_stay_indeterminate() {
        let k3 = Hypergraph::complete(3, 2).unwrap();
        let opts = BoundOptions {
            max_ar_edges: 5,
            ..BoundOptions::default()
        };
        let t = bound_report(5, &k3, 2, &opts).unwrap();
        assert_eq!(t.ar_exact, None);
        assert_eq!(t.checks[0].verdict, Verdict::Indeterminate);
    }

    #[test]
    fn rejects_lower_target_uniformity() {
        assert!(bound_report(5, &path2(), 1, &BoundOptions::default()).is_err());
    }
}
