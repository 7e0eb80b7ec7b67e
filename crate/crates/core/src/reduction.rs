//! Reducible blocks and the reduction of a covering.

use crate::covering::{ApproxSpace, Covering};
use crate::error::Error;
use crate::set::Subset;

/// True iff `blocks[k]` equals the union of the other blocks contained
/// in it. The maximal candidate union either reaches the block or no
/// union of sub-blocks does, so no subfamily search is needed.
pub fn block_is_reducible(blocks: &[Subset], k: usize) -> bool {
    let target = &blocks[k];
    let mut union = target.universe().empty_subset();
    for (i, s) in blocks.iter().enumerate() {
        if i != k && s.is_subset_of(target) {
            union = union.union(s);
        }
    }
    union == *target
}

/// Removes reducible blocks until none remain, scanning in canonical
/// block order and removing the first reducible block found. The final
/// block set does not depend on the removal order; the surviving blocks
/// come out in canonical bit order.
pub fn reduct_of(covering: &Covering) -> Covering {
    let mut blocks = covering.canonical_blocks();
    while let Some(k) = (0..blocks.len()).find(|&k| block_is_reducible(&blocks, k)) {
        blocks.remove(k);
    }
    Covering::new(covering.universe().clone(), blocks)
        .expect("removing a reducible block keeps a valid covering")
}

/// Every covering reachable by removing reducible blocks in any order
/// until none remain. Removal-order independence means this always has
/// exactly one entry; the verification harness asserts that.
pub fn reduction_results_over_all_orders(covering: &Covering) -> Vec<Covering> {
    use std::collections::{BTreeSet, HashMap};

    fn explore(
        blocks: &[Subset],
        mask: u32,
        memo: &mut HashMap<u32, BTreeSet<u32>>,
    ) -> BTreeSet<u32> {
        if let Some(found) = memo.get(&mask) {
            return found.clone();
        }
        let live: Vec<usize> = (0..blocks.len()).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Vec<Subset> = live.iter().map(|&i| blocks[i].clone()).collect();
        let reducible: Vec<usize> = (0..sub.len())
            .filter(|&k| block_is_reducible(&sub, k))
            .collect();
        let result = if reducible.is_empty() {
            BTreeSet::from([mask])
        } else {
            let mut acc = BTreeSet::new();
            for k in reducible {
                acc.extend(explore(blocks, mask & !(1 << live[k]), memo));
            }
            acc
        };
        memo.insert(mask, result.clone());
        result
    }

    let blocks = covering.blocks();
    assert!(
        blocks.len() <= 25,
        "exhaustive removal orders need a small covering"
    );
    let full_mask = ((1u64 << blocks.len()) - 1) as u32;
    let mut memo = HashMap::new();
    explore(blocks, full_mask, &mut memo)
        .into_iter()
        .map(|mask| {
            let kept: Vec<Subset> = (0..blocks.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| blocks[i].clone())
                .collect();
            Covering::new(covering.universe().clone(), kept)
                .expect("removal orders end in coverings")
        })
        .collect()
}

impl ApproxSpace {
    /// True iff block `k` is a union of other blocks of the covering.
    pub fn is_reducible(&self, k: usize) -> Result<bool, Error> {
        let blocks = self.covering().blocks();
        if k >= blocks.len() {
            return Err(Error::BadIndex {
                index: k,
                len: blocks.len(),
            });
        }
        Ok(block_is_reducible(blocks, k))
    }

    /// The irreducible covering left after removing every reducible
    /// block; computed once and cached.
    pub fn reduct(&self) -> &Covering {
        self.space()
            .reduct
            .get_or_init(|| reduct_of(self.covering()))
    }

    /// True iff the reduction of the covering is a partition.
    pub fn reduct_is_partition(&self) -> bool {
        self.reduct().is_partition()
    }
}
