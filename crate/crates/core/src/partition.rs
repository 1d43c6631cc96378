//! Set partitions of a quiver's vertex set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// An equivalence relation on vertices, stored as its blocks.
///
/// Blocks are kept sorted internally and ordered by their smallest member,
/// so two partitions with the same blocks compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPartition {
    blocks: Vec<BTreeSet<String>>,
}

impl VertexPartition {
    pub fn new<B, S>(blocks: impl IntoIterator<Item = B>) -> Result<Self>
    where
        B: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for b in blocks {
            let block: BTreeSet<String> = b.into_iter().map(Into::into).collect();
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for v in &block {
                if !seen.insert(v.clone()) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
            out.push(block);
        }
        out.sort_by(|a, b| a.iter().next().cmp(&b.iter().next()));
        Ok(VertexPartition { blocks: out })
    }

    /// Every vertex in its own block.
    pub fn identity<'a>(vertices: impl IntoIterator<Item = &'a str>) -> Self {
        VertexPartition::new(vertices.into_iter().map(|v| [v])).expect("distinct vertices")
    }

    /// A single block containing everything.
    pub fn total<'a>(vertices: impl IntoIterator<Item = &'a str>) -> Self {
        VertexPartition::new([vertices.into_iter().collect::<Vec<_>>()]).expect("distinct vertices")
    }

    /// Parses the `1,2|3|4,5,6` syntax.
    pub fn parse(spec: &str) -> Result<Self> {
        let blocks = spec
            .split('|')
            .map(|b| b.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        VertexPartition::new(blocks)
    }

    pub fn blocks(&self) -> &[BTreeSet<String>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_index(&self, v: &str) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }

    /// Display name of a block: its members joined with `+`.
    pub fn block_name(&self, i: usize) -> String {
        self.blocks[i].iter().cloned().collect::<Vec<_>>().join("+")
    }

    pub fn block_name_of(&self, v: &str) -> Option<String> {
        self.block_index(v).map(|i| self.block_name(i))
    }

    pub fn same_block(&self, x: &str, y: &str) -> bool {
        x == y || matches!((self.block_index(x), self.block_index(y)), (Some(a), Some(b)) if a == b)
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    pub fn check_covers(&self, q: &Quiver) -> Result<()> {
        let covered: BTreeSet<&str> = self.blocks.iter().flatten().map(String::as_str).collect();
        let vs: BTreeSet<&str> = q.vertices().collect();
        if covered != vs {
            return Err(Error::InvalidPartition(format!("blocks {self} do not partition the vertex set")));
        }
        Ok(())
    }

    /// The restricted growth string of this partition relative to the given
    /// vertex order.
    pub fn growth_string(&self, order: &[&str]) -> Vec<usize> {
        let mut label: BTreeMap<usize, usize> = BTreeMap::new();
        order
            .iter()
            .map(|v| {
                let b = self.block_index(v).expect("vertex in partition");
                let next = label.len();
                *label.entry(b).or_insert(next)
            })
            .collect()
    }
}

impl fmt::Display for VertexPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.iter().cloned().collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Iterates over all set partitions of `items` in restricted-growth-string
/// order: `a[0] = 0` and `a[i] ≤ 1 + max(a[..i])`.
pub struct SetPartitions {
    items: Vec<String>,
    rgs: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(items: Vec<String>) -> Self {
        let n = items.len();
        SetPartitions { items, rgs: vec![0; n], done: false }
    }

    fn current(&self) -> VertexPartition {
        let nblocks = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        for (item, &b) in self.items.iter().zip(&self.rgs) {
            blocks[b].push(item.clone());
        }
        VertexPartition::new(blocks).expect("growth string yields a partition")
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        // rightmost position that can still grow
        for i in (1..n).rev() {
            let prefix_max = self.rgs[..i].iter().copied().max().unwrap_or(0);
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for r in &mut self.rgs[i + 1..] {
                    *r = 0;
                }
                return;
            }
        }
        self.done = true;
    }

    pub fn growth_string(&self) -> &[usize] {
        &self.rgs
    }
}

impl Iterator for SetPartitions {
    type Item = VertexPartition;

    fn next(&mut self) -> Option<VertexPartition> {
        if self.done {
            return None;
        }
        if self.items.is_empty() {
            self.done = true;
            return Some(VertexPartition { blocks: Vec::new() });
        }
        let p = self.current();
        self.advance();
        Some(p)
    }
}

/// All partitions of the quiver's vertex set, in growth-string order over the
/// sorted vertex list.
pub fn vertex_partitions(q: &Quiver) -> SetPartitions {
    SetPartitions::new(q.vertices().map(str::to_string).collect())
}
