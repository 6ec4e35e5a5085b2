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

//! Brute-force reference implementations used only by the integration tests.
//!
//! Graphs are plain edge lists; nothing here calls the search or embedding
//! code of the crate.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

pub type Edges = Vec<Vec<usize>>;

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Edges {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Edges) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Injective maps of `k` items into `0..n`.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(k, n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(k, n, &mut Vec::new(), &mut vec![false; n], &mut out);
    }
    out
}

/// The pattern with its vertices renamed to `0..v`, isolated ones dropped.
pub fn compact(pattern: &Edges) -> (usize, Edges) {
    let mut ids = HashMap::new();
    let edges = pattern
        .iter()
        .map(|e| {
            e.iter()
                .map(|v| {
                    let next = ids.len();
                    *ids.entry(*v).or_insert(next)
                })
                .collect()
        })
        .collect();
    (ids.len(), edges)
}

fn image(e: &[usize], map: &[usize]) -> Vec<usize> {
    let mut m: Vec<usize> = e.iter().map(|&v| map[v]).collect();
    m.sort_unstable();
    m
}

pub fn contains(pattern: &Edges, host: &HashSet<Vec<usize>>, n: usize) -> bool {
    let (v, edges) = compact(pattern);
    injections(v, n)
        .iter()
        .any(|map| edges.iter().all(|e| host.contains(&image(e, map))))
}

pub fn count_maps(pattern: &Edges, host: &HashSet<Vec<usize>>, n: usize) -> usize {
    let (v, edges) = compact(pattern);
    injections(v, n)
        .iter()
        .filter(|map| edges.iter().all(|e| host.contains(&image(e, map))))
        .count()
}

/// Is there a copy of `pattern` in `K_n^r` whose edges get distinct colors?
pub fn has_rainbow(pattern: &Edges, color: &HashMap<Vec<usize>, usize>, n: usize) -> bool {
    let (v, edges) = compact(pattern);
    injections(v, n).iter().any(|map| {
        let seen: HashSet<usize> = edges.iter().map(|e| color[&image(e, map)]).collect();
        seen.len() == edges.len()
    })
}

/// `ex(n, family)` over all subsets of `K_n^r`.
pub fn turan(n: usize, r: usize, family: &[Edges]) -> u64 {
    let all = subsets(n, r);
    assert!(all.len() <= 20);
    let mut best = 0;
    for mask in 0u32..1 << all.len() {
        let k = mask.count_ones() as u64;
        if k <= best {
            continue;
        }
        let host: HashSet<Vec<usize>> = (0..all.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| all[i].clone())
            .collect();
        if !family.iter().any(|f| contains(f, &host, n)) {
            best = k;
        }
    }
    best
}

/// Calls `visit` with every set partition of `0..m` as a block label vector.
pub fn set_partitions(m: usize, mut visit: impl FnMut(&[usize], usize)) {
    fn go(i: usize, blocks: usize, labels: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize], usize)) {
        if i == labels.len() {
            visit(labels, blocks);
            return;
        }
        for b in 0..=blocks {
            labels[i] = b;
            go(i + 1, blocks.max(b + 1), labels, visit);
        }
    }
    go(0, 0, &mut vec![0; m], &mut visit);
}

/// `ar(n, F)` as one more than the most colors of a rainbow-`F`-free
/// coloring, over every coloring of `K_n^r` up to renaming colors.
pub fn anti_ramsey(n: usize, r: usize, pattern: &Edges) -> u64 {
    let all = subsets(n, r);
    assert!(all.len() <= 10);
    let mut best = 0;
    set_partitions(all.len(), |labels, blocks| {
        if blocks <= best {
            return;
        }
        let color: HashMap<Vec<usize>, usize> = all.iter().cloned().zip(labels.iter().copied()).collect();
        if !has_rainbow(pattern, &color, n) {
            best = blocks;
        }
    });
    best as u64 + 1
}

/// Balanced part sizes, larger parts first.
pub fn part_sizes(n: usize, ell: usize) -> Vec<usize> {
    (0..ell).map(|i| n / ell + usize::from(i < n % ell)).collect()
}

/// Sum over `r`-sets of parts of the product of their sizes.
pub fn product_sum(sizes: &[usize], r: usize) -> u64 {
    subsets(sizes.len(), r)
        .iter()
        .map(|c| c.iter().map(|&i| sizes[i] as u64).product::<u64>())
        .sum()
}

pub fn isomorphic(a: &Edges, b: &Edges) -> bool {
    let (va, ea) = compact(a);
    let (vb, eb) = compact(b);
    if va != vb || ea.len() != eb.len() {
        return false;
    }
    let target: HashSet<Vec<usize>> = eb.iter().map(|e| image(e, &(0..vb).collect::<Vec<_>>())).collect();
    injections(va, vb)
        .iter()
        .any(|map| ea.iter().all(|e| target.contains(&image(e, map))))
}

/// Edges with a `k`-subset meeting no other edge.
pub fn pendant(edges: &Edges, k: usize) -> Vec<usize> {
    (0..edges.len())
        .filter(|&i| {
            let private = edges[i]
                .iter()
                .filter(|v| edges.iter().enumerate().all(|(j, f)| j == i || !f.contains(v)))
                .count();
            private >= k
        })
        .collect()
}

pub fn without(edges: &Edges, i: usize) -> Edges {
    let mut out = edges.clone();
    out.remove(i);
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Image edges of some rainbow copy of `pattern`, if any.
pub fn rainbow_copy(pattern: &Edges, color: &HashMap<Vec<usize>, usize>, n: usize) -> Option<Edges> {
    let (v, edges) = compact(pattern);
    injections(v, n).iter().find_map(|map| {
        let images: Edges = edges.iter().map(|e| image(e, map)).collect();
        let seen: HashSet<usize> = images.iter().map(|e| color[e]).collect();
        (seen.len() == images.len()).then_some(images)
    })
}
