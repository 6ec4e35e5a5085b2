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

//! Colexicographic ranking of `r`-subsets.
//!
//! Every edge of the complete `r`-graph on `n` vertices gets the rank
//! `sum_i binom(c_i, i + 1)` for its sorted vertices `c_0 < c_1 < ...`.
//! That is the combinatorial number system, and ranks enumerate the edges
//! in colex order: all edges inside `[0, v)` precede any edge with top
//! vertex `v`.

/// `binom(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Colex comparison of two sorted tuples of equal length.
pub fn colex_cmp(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Colex rank of a sorted tuple.
pub fn rank(sorted: &[usize]) -> usize {
    sorted
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c, i + 1) as usize)
        .sum()
}

/// Inverse of [`rank`] for tuples of length `r`.
pub fn unrank(mut rank: usize, r: usize) -> Vec<usize> {
    let mut out = vec![0; r];
    for i in (0..r).rev() {
        // largest c with binom(c, i + 1) <= rank
        let mut c = i;
        while binomial(c + 1, i + 1) as usize <= rank {
            c += 1;
        }
        out[i] = c;
        rank -= binomial(c, i + 1) as usize;
    }
    out
}

/// Precomputed edge list of `K_n^r` in colex order, with fast ranking.
#[derive(Clone, Debug)]
pub struct EdgeTable {
    n: usize,
    r: usize,
    binom: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
}

impl EdgeTable {
    pub fn new(n: usize, r: usize) -> Self {
        let binom = (0..=n.max(1))
            .map(|c| (0..=r).map(|k| binomial(c, k) as usize).collect())
            .collect();
        let total = binomial(n, r) as usize;
        let edges = (0..total).map(|i| unrank(i, r)).collect();
        EdgeTable { n, r, binom, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, rank: usize) -> &[usize] {
        &self.edges[rank]
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Rank of a sorted tuple.
    #[inline]
    pub fn rank(&self, sorted: &[usize]) -> usize {
        let mut acc = 0;
        for (i, &c) in sorted.iter().enumerate() {
            acc += self.binom[c][i + 1];
        }
        acc
    }

    /// Rank of an unsorted tuple; sorts `buf` in place.
    #[inline]
    pub fn rank_unsorted(&self, buf: &mut [usize]) -> usize {
        buf.sort_unstable();
        self.rank(buf)
    }
}
