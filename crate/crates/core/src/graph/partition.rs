//! Partitions of a multiset into a fixed number of blocks.
//!
//! A block is a count vector over the distinct values. Each partition is
//! produced once, as its blocks listed in non-increasing lexicographic
//! order.

use std::ops::ControlFlow;

pub(crate) struct Multiset {
    pub values: Vec<i64>,
    pub counts: Vec<usize>,
}

impl Multiset {
    /// Distinct values in decreasing order with their multiplicities.
    pub fn from_values(items: &[i64]) -> Self {
        let mut sorted = items.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut values = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        for v in sorted {
            if values.last() == Some(&v) {
                *counts.last_mut().unwrap() += 1;
            } else {
                values.push(v);
                counts.push(1);
            }
        }
        Multiset { values, counts }
    }

    pub fn sum(&self, block: &[usize]) -> i64 {
        block
            .iter()
            .zip(&self.values)
            .map(|(&c, &v)| c as i64 * v)
            .sum()
    }
}

/// Calls `visit` on every partition of `set` into exactly `blocks` blocks
/// such that every block passes `block_ok` and holds at least one element
/// whose value satisfies `required`.
pub(crate) fn for_each_partition<B, R, V>(
    set: &Multiset,
    blocks: usize,
    required: R,
    block_ok: B,
    mut visit: V,
) -> ControlFlow<()>
where
    B: Fn(&[usize]) -> bool,
    R: Fn(i64) -> bool,
    V: FnMut(&[Vec<usize>]) -> ControlFlow<()>,
{
    if blocks == 0 {
        return ControlFlow::Continue(());
    }
    let required_mask: Vec<bool> = set.values.iter().map(|&v| required(v)).collect();
    let mut state = State {
        required: &required_mask,
        block_ok: &block_ok,
        visit: &mut visit,
        chosen: Vec::with_capacity(blocks),
    };
    let mut remaining = set.counts.clone();
    state.rec(&mut remaining, blocks)
}

struct State<'a, B, V> {
    required: &'a [bool],
    block_ok: &'a B,
    visit: &'a mut V,
    chosen: Vec<Vec<usize>>,
}

impl<B, V> State<'_, B, V>
where
    B: Fn(&[usize]) -> bool,
    V: FnMut(&[Vec<usize>]) -> ControlFlow<()>,
{
    fn required_count(&self, counts: &[usize]) -> usize {
        counts
            .iter()
            .zip(self.required)
            .filter(|(_, &r)| r)
            .map(|(&c, _)| c)
            .sum()
    }

    fn acceptable(&self, block: &[usize]) -> bool {
        self.required_count(block) > 0 && (self.block_ok)(block)
    }

    fn rec(&mut self, remaining: &mut Vec<usize>, left: usize) -> ControlFlow<()> {
        if left == 1 {
            let block = remaining.clone();
            let fits = self.chosen.last().is_none_or(|prev| block <= *prev);
            if fits && self.acceptable(&block) {
                self.chosen.push(block);
                let r = (self.visit)(&self.chosen);
                self.chosen.pop();
                return r;
            }
            return ControlFlow::Continue(());
        }
        if self.required_count(remaining) < left {
            return ControlFlow::Continue(());
        }
        let prev = self.chosen.last().cloned();
        let mut block = vec![0usize; remaining.len()];
        self.sub_blocks(remaining, prev.as_deref(), &mut block, 0, true, left)
    }

    /// Enumerates sub-multisets of `remaining` that are lexicographically at
    /// most `prev`, fixing one coordinate at a time (largest count first).
    fn sub_blocks(
        &mut self,
        remaining: &mut Vec<usize>,
        prev: Option<&[usize]>,
        block: &mut Vec<usize>,
        pos: usize,
        tight: bool,
        left: usize,
    ) -> ControlFlow<()> {
        if pos == block.len() {
            if block.iter().all(|&c| c == 0) || !self.acceptable(block) {
                return ControlFlow::Continue(());
            }
            for (r, b) in remaining.iter_mut().zip(block.iter()) {
                *r -= b;
            }
            self.chosen.push(block.clone());
            let flow = if self.required_count(remaining) >= left - 1 {
                self.rec(remaining, left - 1)
            } else {
                ControlFlow::Continue(())
            };
            self.chosen.pop();
            for (r, b) in remaining.iter_mut().zip(block.iter()) {
                *r += b;
            }
            return flow;
        }
        let cap = match (tight, prev) {
            (true, Some(p)) => remaining[pos].min(p[pos]),
            _ => remaining[pos],
        };
        for c in (0..=cap).rev() {
            block[pos] = c;
            let still_tight = tight && prev.is_some_and(|p| c == p[pos]);
            self.sub_blocks(remaining, prev, block, pos + 1, still_tight, left)?;
        }
        block[pos] = 0;
        ControlFlow::Continue(())
    }
}
