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

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// A finite list of hypergraphs of one uniformity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFamily")]
pub struct Family {
    members: Vec<Hypergraph>,
    /// Members are pairwise non-isomorphic.
    deduplicated: bool,
}

#[derive(Deserialize)]
struct RawFamily {
    members: Vec<Hypergraph>,
    #[serde(default)]
    deduplicated: bool,
}

impl TryFrom<RawFamily> for Family {
    type Error = Error;

    fn try_from(raw: RawFamily) -> Result<Self> {
        if raw.deduplicated {
            Family::deduplicated(raw.members)
        } else {
            Family::new(raw.members)
        }
    }
}

impl Family {
    pub fn new(members: Vec<Hypergraph>) -> Result<Self> {
        if let Some(first) = members.first() {
            if let Some(m) = members.iter().find(|m| m.r() != first.r()) {
                return Err(Error::UniformityMismatch(first.r(), m.r()));
            }
        }
        Ok(Family {
            members,
            deduplicated: false,
        })
    }

    /// Keeps the first member of every isomorphism class.
    pub fn deduplicated(members: Vec<Hypergraph>) -> Result<Self> {
        let raw = Family::new(members)?;
        let mut seen = Vec::new();
        let mut kept = Vec::new();
        for m in raw.members {
            let form = canonical_form(&m)?;
            if !seen.contains(&form) {
                seen.push(form);
                kept.push(m);
            }
        }
        Ok(Family {
            members: kept,
            deduplicated: true,
        })
    }

    pub fn single(h: Hypergraph) -> Self {
        Family {
            members: vec![h],
            deduplicated: true,
        }
    }

    pub fn dedup(&self) -> Result<Family> {
        Family::deduplicated(self.members.clone())
    }

    pub fn members(&self) -> &[Hypergraph] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Hypergraph> {
        self.members
    }

    pub fn is_deduplicated(&self) -> bool {
        self.deduplicated
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Common uniformity, if the family is nonempty.
    pub fn r(&self) -> Option<usize> {
        self.members.first().map(Hypergraph::r)
    }

    /// Does the family contain a member isomorphic to `h`?
    pub fn contains_isomorph(&self, h: &Hypergraph) -> Result<bool> {
        let form = canonical_form(h)?;
        for m in &self.members {
            if m.n() == h.n() && m.len() == h.len() && canonical_form(m)? == form {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Members in the hypergraph text format, separated by blank lines.
    pub fn to_text(&self) -> String {
        self.members
            .iter()
            .map(Hypergraph::to_text)
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn from_text(s: &str) -> Result<Family> {
        let mut members = Vec::new();
        let mut block = String::new();
        for line in s.lines().chain(std::iter::once("")) {
            if line.trim().is_empty() {
                if !block.trim().is_empty() {
                    members.push(Hypergraph::from_text(&block)?);
                }
                block.clear();
            } else {
                block.push_str(line);
                block.push('\n');
            }
        }
        Family::new(members)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family serializes")
    }

    pub fn from_json(s: &str) -> Result<Family> {
        Ok(serde_json::from_str(s)?)
    }
}
