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

//! Short textual names for small forbidden graphs.
//!
//! | descriptor | graph |
//! |---|---|
//! | `K<l>` | complete graph on `l` vertices |
//! | `P<m>` | path on `m` vertices (`m − 1` edges) |
//! | `C<m>` | cycle on `m` vertices |
//! | `M<m>` | matching with `m` edges |
//! | `S<m>` | star with `m` edges |
//! | `edge`, `single-edge`, `K2` | one graph edge |
//! | `triple` | one 3-edge |
//! | `K<l>:<r>` | complete `r`-graph on `l` vertices |
//!
//! A suffix `^<r>` takes the `r`-uniform expansion, so `K4^3` is `H_4^3`.

use crate::constructions::expansion;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub fn parse(descriptor: &str) -> Result<Hypergraph> {
    let s = descriptor.trim();
    let bad = || Error::Parse(format!("unknown graph descriptor {descriptor:?}"));
    if let Some((base, r)) = s.split_once('^') {
        let r: usize = r.parse().map_err(|_| bad())?;
        let f = parse(base)?;
        if r == f.r() {
            return Ok(f);
        }
        return expansion(&f, r);
    }
    match s.to_ascii_lowercase().as_str() {
        "edge" | "single-edge" => return Hypergraph::new(2, 2, [[0, 1]]),
        "triple" => return Hypergraph::new(3, 3, [[0, 1, 2]]),
        _ => {}
    }
    if s.is_empty() || !s.is_char_boundary(1) {
        return Err(bad());
    }
    let (head, tail) = s.split_at(1);
    if head == "K" {
        if let Some((l, r)) = tail.split_once(':') {
            let l = l.parse().map_err(|_| bad())?;
            let r = r.parse().map_err(|_| bad())?;
            if r == 0 || l < r {
                return Err(bad());
            }
            return Hypergraph::complete(l, r);
        }
    }
    let m: usize = tail.parse().map_err(|_| bad())?;
    match head {
        "K" if m >= 2 => Hypergraph::complete(m, 2),
        "P" if m >= 2 => path(m),
        "C" if m >= 3 => {
            let mut edges: Vec<[usize; 2]> = (0..m - 1).map(|i| [i, i + 1]).collect();
            edges.push([0, m - 1]);
            Hypergraph::new(m, 2, edges)
        }
        "M" if m >= 1 => Hypergraph::new(2 * m, 2, (0..m).map(|i| [2 * i, 2 * i + 1])),
        "S" if m >= 1 => Hypergraph::new(m + 1, 2, (1..=m).map(|i| [0, i])),
        _ => Err(bad()),
    }
}

/// Path on `m` vertices.
pub fn path(m: usize) -> Result<Hypergraph> {
    Hypergraph::new(m, 2, (1..m).map(|i| [i - 1, i]))
}
