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

//! Brute-force reference checks over every injective vertex map.
//!
//! Exponential in `v(F)`; meant for cross-checking the fast routines on
//! small inputs.

use std::collections::HashSet;

use itertools::Itertools;

use crate::coloring::Coloring;
use crate::hypergraph::Hypergraph;

/// Calls `visit` with the image edges of every injective map of the
/// non-isolated vertices of `pattern` into `0..n`, stopping at the first
/// `true`.
fn any_map(pattern: &Hypergraph, n: usize, mut visit: impl FnMut(&[Vec<usize>]) -> bool) -> bool {
    let verts = pattern.covered_vertices();
    if verts.len() > n {
        return false;
    }
    let mut slot = vec![usize::MAX; pattern.n()];
    for (i, &v) in verts.iter().enumerate() {
        slot[v] = i;
    }
    for image in (0..n).permutations(verts.len()) {
        let edges: Vec<Vec<usize>> = pattern
            .edges()
            .iter()
            .map(|e| {
                let mut m: Vec<usize> = e.iter().map(|&v| image[slot[v]]).collect();
                m.sort_unstable();
                m
            })
            .collect();
        if visit(&edges) {
            return true;
        }
    }
    false
}

/// Does `host` contain a copy of `pattern`?
pub fn contains(pattern: &Hypergraph, host: &Hypergraph) -> bool {
    let present: HashSet<&[usize]> = host.edges().iter().map(Vec::as_slice).collect();
    any_map(pattern, host.n(), |edges| edges.iter().all(|e| present.contains(e.as_slice())))
}

/// Does `chi` contain a rainbow copy of `pattern`?
pub fn has_rainbow(chi: &Coloring, pattern: &Hypergraph) -> bool {
    any_map(pattern, chi.n(), |edges| {
        let colors: HashSet<usize> = edges.iter().map(|e| chi.color_of(e)).collect();
        colors.len() == edges.len()
    })
}

/// Largest edge count of a `family`-free `r`-graph on `n` vertices, over all
/// `2^C(n, r)` subsets.
pub fn turan_number(n: usize, r: usize, family: &[Hypergraph]) -> u64 {
    let all = Hypergraph::complete(n, r).expect("valid size").edges().to_vec();
    assert!(all.len() < 25, "too many edges for exhaustive search");
    let mut best = 0;
    for mask in 0u32..(1 << all.len()) {
        let k = mask.count_ones() as u64;
        if k <= best {
            continue;
        }
        let edges: Vec<Vec<usize>> = (0..all.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| all[i].clone())
            .collect();
        let h = Hypergraph::new(n, r, edges).expect("subset of K_n");
        if !family.iter().any(|f| contains(f, &h)) {
            best = k;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_in_k4() {
        let k3 = Hypergraph::complete(3, 2).unwrap();
        let k4 = Hypergraph::complete(4, 2).unwrap();
        assert!(contains(&k3, &k4));
        let c4 = Hypergraph::new(4, 2, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        assert!(!contains(&k3, &c4));
    }

    #[test]
    fn rainbow_and_monochromatic() {
        let k3 = Hypergraph::complete(3, 2).unwrap();
        assert!(has_rainbow(&Coloring::rainbow(4, 2).unwrap(), &k3));
        assert!(!has_rainbow(&Coloring::monochromatic(4, 2).unwrap(), &k3));
    }

    #[test]
    fn mantel_small() {
        let k3 = Hypergraph::complete(3, 2).unwrap();
        assert_eq!(turan_number(4, 2, std::slice::from_ref(&k3)), 4);
        assert_eq!(turan_number(5, 2, &[k3]), 6);
    }
}
