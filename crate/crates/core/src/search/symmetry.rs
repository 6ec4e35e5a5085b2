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

//! Lex-leader symmetry breaking under adjacent vertex transpositions.
//!
//! Every isomorphism class of edge labelings has a lexicographically
//! greatest member (edges in colex order, labels renumbered in order of
//! first occurrence). That member is never smaller than its image under a
//! transposition `(a a+1)`, so a prefix that is already smaller than such an
//! image can be discarded without losing any class.

use crate::colex::EdgeTable;

pub(crate) struct Transpositions {
    /// `perms[a][j]` is the rank of edge `j` with `a` and `a+1` swapped.
    perms: Vec<Vec<usize>>,
}

impl Transpositions {
    pub(crate) fn new(table: &EdgeTable) -> Self {
        let n = table.n();
        let mut buf = Vec::with_capacity(table.r());
        let perms = (0..n.saturating_sub(1))
            .map(|a| {
                table
                    .edges()
                    .iter()
                    .map(|e| {
                        buf.clear();
                        buf.extend(e.iter().map(|&v| {
                            if v == a {
                                a + 1
                            } else if v == a + 1 {
                                a
                            } else {
                                v
                            }
                        }));
                        table.rank_unsorted(&mut buf)
                    })
                    .collect()
            })
            .collect();
        Transpositions { perms }
    }

    /// With `labels[..=last]` decided (and restricted growth when
    /// `renumber` is set), can the prefix still be a lex-leader?
    pub(crate) fn prefix_ok(
        &self,
        labels: &[usize],
        last: usize,
        renumber: bool,
        scratch: &mut Vec<usize>,
    ) -> bool {
        for perm in &self.perms {
            if renumber {
                scratch.clear();
            }
            for j in 0..=last {
                let pj = perm[j];
                if pj > last {
                    break;
                }
                let mut image = labels[pj];
                if renumber {
                    image = match scratch.iter().position(|&c| c == image) {
                        Some(p) => p,
                        None => {
                            scratch.push(image);
                            scratch.len() - 1
                        }
                    };
                }
                let own = labels[j];
                if own > image {
                    break;
                }
                if own < image {
                    return false;
                }
            }
        }
        true
    }
}
