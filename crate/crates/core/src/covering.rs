//! Validated coverings and the approximation space built on one.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::descriptions::{MinimalDescriptions, NeighborhoodSystem};
use crate::error::Error;
use crate::set::{Subset, Universe};

/// A family of distinct nonempty subsets whose union is the universe.
#[derive(Clone)]
pub struct Covering {
    universe: Universe,
    blocks: Vec<Subset>,
}

impl Covering {
    /// Validates the defining invariants: no empty block, no duplicate
    /// block, and the union of the blocks is the whole universe.
    /// Duplicate input blocks are an error, not silently merged.
    pub fn new(universe: Universe, blocks: Vec<Subset>) -> Result<Self, Error> {
        let mut union = universe.empty_subset();
        for (i, block) in blocks.iter().enumerate() {
            if block.universe() != &universe {
                return Err(Error::UniverseMismatch);
            }
            if block.is_empty() {
                return Err(Error::EmptyBlock { index: i });
            }
            for (j, earlier) in blocks[..i].iter().enumerate() {
                if earlier == block {
                    return Err(Error::DuplicateBlock {
                        block: block.to_string(),
                        first: j,
                        second: i,
                    });
                }
            }
            union = union.union(block);
        }
        if union != universe.full_subset() {
            return Err(Error::NotACover {
                missing: union.complement().to_string(),
            });
        }
        Ok(Covering { universe, blocks })
    }

    /// Convenience constructor from element indices, mostly for tests.
    pub fn from_indices(universe: &Universe, blocks: &[&[usize]]) -> Result<Self, Error> {
        let subsets = blocks
            .iter()
            .map(|idxs| universe.subset_from_indices(idxs.iter().copied()))
            .collect::<Result<Vec<_>, _>>()?;
        Covering::new(universe.clone(), subsets)
    }

    pub fn from_labels(universe: &Universe, blocks: &[Vec<String>]) -> Result<Self, Error> {
        let subsets = blocks
            .iter()
            .map(|labels| universe.subset_from_labels(labels.iter().map(String::as_str)))
            .collect::<Result<Vec<_>, _>>()?;
        Covering::new(universe.clone(), subsets)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Blocks in input order; equality of coverings ignores this order.
    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// True when the blocks are pairwise disjoint, i.e. the covering is
    /// a partition of the universe.
    pub fn is_partition(&self) -> bool {
        self.blocks
            .iter()
            .enumerate()
            .all(|(i, a)| self.blocks[i + 1..].iter().all(|b| !a.intersects(b)))
    }

    /// Blocks sorted in canonical bit order.
    pub fn canonical_blocks(&self) -> Vec<Subset> {
        let mut v = self.blocks.clone();
        v.sort();
        v
    }
}

impl PartialEq for Covering {
    /// Order-insensitive set equality of blocks.
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.canonical_blocks() == other.canonical_blocks()
    }
}

impl Eq for Covering {}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A covering together with lazily computed derived structure:
/// neighborhoods, minimal descriptions, the reduction, the unary flag.
///
/// Everything is immutable after construction; caches fill at most once
/// and always with values bit-identical to recomputation, so spaces are
/// freely shared between threads.
#[derive(Clone)]
pub struct ApproxSpace {
    inner: Arc<SpaceInner>,
}

pub(crate) struct SpaceInner {
    pub(crate) covering: Covering,
    pub(crate) neighborhoods: OnceLock<NeighborhoodSystem>,
    pub(crate) minimal: OnceLock<MinimalDescriptions>,
    pub(crate) reduct: OnceLock<Covering>,
    pub(crate) unary: OnceLock<bool>,
}

impl ApproxSpace {
    pub fn new(covering: Covering) -> Self {
        ApproxSpace {
            inner: Arc::new(SpaceInner {
                covering,
                neighborhoods: OnceLock::new(),
                minimal: OnceLock::new(),
                reduct: OnceLock::new(),
                unary: OnceLock::new(),
            }),
        }
    }

    pub fn covering(&self) -> &Covering {
        &self.inner.covering
    }

    pub fn universe(&self) -> &Universe {
        self.inner.covering.universe()
    }

    pub(crate) fn space(&self) -> &SpaceInner {
        &self.inner
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<(), Error> {
        if x < self.universe().size() {
            Ok(())
        } else {
            Err(Error::UnknownElement {
                name: format!("#{x}"),
            })
        }
    }

    pub(crate) fn check_subset(&self, x: &Subset) -> Result<(), Error> {
        if x.universe() == self.universe() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

impl fmt::Debug for ApproxSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ApproxSpace({})", self.inner.covering)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_the_four_block_cover() {
        let u = Universe::of_size(4);
        let c = Covering::from_indices(&u, &[&[0, 1, 2], &[0], &[0, 2, 3], &[1, 2]]).unwrap();
        assert_eq!(c.to_string(), "{{1,2,3},{1},{1,3,4},{2,3}}");
        assert_eq!(c.len(), 4);
        assert!(!c.is_partition());
    }

    #[test]
    fn rejects_non_covers() {
        let u = Universe::of_size(3);
        let err = Covering::from_indices(&u, &[&[0, 1]]).unwrap_err();
        assert_eq!(
            err,
            Error::NotACover {
                missing: "{3}".into()
            }
        );
    }

    #[test]
    fn rejects_empty_blocks() {
        let u = Universe::of_size(2);
        let err = Covering::from_indices(&u, &[&[0], &[]]).unwrap_err();
        assert_eq!(err, Error::EmptyBlock { index: 1 });
    }

    #[test]
    fn rejects_duplicate_blocks() {
        let u = Universe::of_size(2);
        let err = Covering::from_indices(&u, &[&[0], &[1], &[0]]).unwrap_err();
        assert!(matches!(
            err,
            Error::DuplicateBlock {
                first: 0,
                second: 2,
                ..
            }
        ));
    }

    #[test]
    fn accepts_the_whole_universe_as_single_block() {
        let u = Universe::of_size(3);
        let c = Covering::from_indices(&u, &[&[0, 1, 2]]).unwrap();
        assert!(c.is_partition());
    }

    #[test]
    fn covering_equality_ignores_block_order() {
        let u = Universe::of_size(2);
        let a = Covering::from_indices(&u, &[&[0], &[1]]).unwrap();
        let b = Covering::from_indices(&u, &[&[1], &[0]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Universe>();
        assert_send_sync::<crate::set::Subset>();
        assert_send_sync::<Covering>();
        assert_send_sync::<ApproxSpace>();
        assert_send_sync::<crate::family::FixedPointFamily>();

        let u = Universe::of_size(4);
        let space =
            ApproxSpace::new(Covering::from_indices(&u, &[&[0, 1], &[1, 2], &[0, 2, 3]]).unwrap());
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|_| {
                    let space = space.clone();
                    scope.spawn(move || space.neighborhoods().distinct().len())
                })
                .collect();
            let counts: Vec<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
            assert!(counts.windows(2).all(|w| w[0] == w[1]));
        });
    }

    #[test]
    fn partition_detection() {
        let u = Universe::of_size(4);
        let p = Covering::from_indices(&u, &[&[0, 1], &[2, 3]]).unwrap();
        assert!(p.is_partition());
        let c = Covering::from_indices(&u, &[&[0, 1], &[1, 2], &[0, 2, 3]]).unwrap();
        assert!(!c.is_partition());
    }
}
