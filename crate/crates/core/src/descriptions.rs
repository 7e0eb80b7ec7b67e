//! Neighborhoods, minimal descriptions, and the unary test.

use crate::covering::ApproxSpace;
use crate::error::Error;
use crate::set::Subset;

/// The neighborhood of every element: N(x) is the intersection of all
/// blocks containing x. Since x lies in each of those blocks, x ∈ N(x).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NeighborhoodSystem {
    sets: Vec<Subset>,
}

impl NeighborhoodSystem {
    pub fn get(&self, x: usize) -> &Subset {
        &self.sets[x]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subset> {
        self.sets.iter()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// The distinct neighborhood sets in canonical order.
    pub fn distinct(&self) -> Vec<Subset> {
        let mut v = self.sets.clone();
        v.sort();
        v.dedup();
        v
    }
}

/// The minimal description of every element: Md(x) is the set of
/// ⊆-minimal blocks containing x, in canonical block order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalDescriptions {
    per_element: Vec<Vec<Subset>>,
}

impl MinimalDescriptions {
    pub fn get(&self, x: usize) -> &[Subset] {
        &self.per_element[x]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Subset]> {
        self.per_element.iter().map(Vec::as_slice)
    }
}

fn compute_neighborhoods(space: &ApproxSpace) -> NeighborhoodSystem {
    let u = space.universe();
    let blocks = space.covering().blocks();
    let sets = (0..u.size())
        .map(|x| {
            let mut n = u.full_subset();
            for block in blocks {
                if block.contains(x) {
                    n = n.intersection(block);
                }
            }
            n
        })
        .collect();
    NeighborhoodSystem { sets }
}

fn compute_minimal_descriptions(space: &ApproxSpace) -> MinimalDescriptions {
    let u = space.universe();
    let blocks = space.covering().blocks();
    let per_element = (0..u.size())
        .map(|x| {
            let mut minimal: Vec<Subset> = blocks
                .iter()
                .filter(|k| {
                    k.contains(x)
                        && !blocks
                            .iter()
                            .any(|s| s.contains(x) && s.is_proper_subset_of(k))
                })
                .cloned()
                .collect();
            minimal.sort();
            minimal
        })
        .collect();
    MinimalDescriptions { per_element }
}

impl ApproxSpace {
    /// N(x): the intersection of all blocks containing x.
    pub fn neighborhood(&self, x: usize) -> Result<Subset, Error> {
        self.check_element(x)?;
        Ok(self.neighborhoods().get(x).clone())
    }

    pub fn neighborhoods(&self) -> &NeighborhoodSystem {
        self.space()
            .neighborhoods
            .get_or_init(|| compute_neighborhoods(self))
    }

    /// Md(x): the ⊆-minimal blocks containing x.
    pub fn minimal_description(&self, x: usize) -> Result<Vec<Subset>, Error> {
        self.check_element(x)?;
        Ok(self.minimal_descriptions().get(x).to_vec())
    }

    pub fn minimal_descriptions(&self) -> &MinimalDescriptions {
        self.space()
            .minimal
            .get_or_init(|| compute_minimal_descriptions(self))
    }

    /// True iff |Md(x)| = 1 for every element x.
    pub fn is_unary(&self) -> bool {
        *self
            .space()
            .unary
            .get_or_init(|| self.minimal_descriptions().iter().all(|md| md.len() == 1))
    }

    /// True iff every pairwise intersection of blocks is a union of
    /// blocks; the empty intersection counts as the empty union. This
    /// is the block-level counterpart of the unary property.
    pub fn intersections_are_block_unions(&self) -> bool {
        let blocks = self.covering().blocks();
        for (i, k1) in blocks.iter().enumerate() {
            for k2 in &blocks[i + 1..] {
                let meet = k1.intersection(k2);
                let mut covered = meet.universe().empty_subset();
                for s in blocks {
                    if s.is_subset_of(&meet) {
                        covered = covered.union(s);
                    }
                }
                if covered != meet {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the distinct neighborhoods are pairwise disjoint and
    /// cover the universe.
    pub fn neighborhoods_form_partition(&self) -> bool {
        let distinct = self.neighborhoods().distinct();
        let mut union = self.universe().empty_subset();
        for (i, a) in distinct.iter().enumerate() {
            for b in &distinct[i + 1..] {
                if a.intersects(b) {
                    return false;
                }
            }
            union = union.union(a);
        }
        union == self.universe().full_subset()
    }

    /// Recomputes every cached value from scratch and compares with the
    /// cache; used to pin down cache coherence in tests.
    #[cfg(test)]
    pub(crate) fn caches_match_recomputation(&self) -> bool {
        self.neighborhoods() == &compute_neighborhoods(self)
            && self.minimal_descriptions() == &compute_minimal_descriptions(self)
            && self.reduct() == &crate::reduction::reduct_of(self.covering())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::Covering;
    use crate::set::Universe;

    fn reducible_cover4() -> ApproxSpace {
        let u = Universe::of_size(4);
        ApproxSpace::new(
            Covering::from_indices(&u, &[&[0, 1, 2], &[0], &[0, 2, 3], &[1, 2]]).unwrap(),
        )
    }

    fn unary_cover4() -> ApproxSpace {
        let u = Universe::of_size(4);
        ApproxSpace::new(Covering::from_indices(&u, &[&[2], &[0], &[0, 2, 3], &[1, 2]]).unwrap())
    }

    #[test]
    fn neighborhoods_of_the_reducible_cover() {
        let s = reducible_cover4();
        let shown: Vec<String> = (0..4)
            .map(|x| s.neighborhood(x).unwrap().to_string())
            .collect();
        assert_eq!(shown, vec!["{1}", "{2,3}", "{3}", "{1,3,4}"]);
    }

    #[test]
    fn neighborhood_under_single_block_cover_is_everything() {
        let u = Universe::of_size(3);
        let s = ApproxSpace::new(Covering::from_indices(&u, &[&[0, 1, 2]]).unwrap());
        for x in 0..3 {
            assert_eq!(s.neighborhood(x).unwrap(), u.full_subset());
        }
    }

    #[test]
    fn neighborhood_rejects_unknown_elements() {
        let s = reducible_cover4();
        assert!(s.neighborhood(4).is_err());
        assert!(s.minimal_description(9).is_err());
    }

    #[test]
    fn minimal_descriptions_of_the_reducible_cover() {
        let s = reducible_cover4();
        let md1: Vec<String> = s
            .minimal_description(0)
            .unwrap()
            .iter()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(md1, vec!["{1}"]);
        let md3: Vec<String> = s
            .minimal_description(2)
            .unwrap()
            .iter()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(md3, vec!["{2,3}", "{1,3,4}"]);
    }

    #[test]
    fn minimal_description_of_single_block_cover() {
        let u = Universe::of_size(2);
        let s = ApproxSpace::new(Covering::from_indices(&u, &[&[0, 1]]).unwrap());
        assert_eq!(s.minimal_description(0).unwrap(), vec![u.full_subset()]);
    }

    #[test]
    fn unary_flag() {
        assert!(unary_cover4().is_unary());
        assert!(!reducible_cover4().is_unary());
        let u = Universe::of_size(4);
        let part = ApproxSpace::new(Covering::from_indices(&u, &[&[0, 1], &[2, 3]]).unwrap());
        assert!(part.is_unary());
    }

    #[test]
    fn block_intersections_decompose_iff_unary() {
        assert!(unary_cover4().intersections_are_block_unions());
        assert!(!reducible_cover4().intersections_are_block_unions());
        let u = Universe::of_size(4);
        let part = ApproxSpace::new(Covering::from_indices(&u, &[&[0, 1], &[2, 3]]).unwrap());
        assert!(part.intersections_are_block_unions());
    }

    #[test]
    fn neighborhood_partition_flag() {
        let u = Universe::of_size(4);
        let part = ApproxSpace::new(Covering::from_indices(&u, &[&[0, 1], &[2, 3]]).unwrap());
        assert!(part.neighborhoods_form_partition());
        assert!(!reducible_cover4().neighborhoods_form_partition());
        let u3 = Universe::of_size(3);
        let s = ApproxSpace::new(Covering::from_indices(&u3, &[&[0, 1], &[1, 2]]).unwrap());
        assert!(!s.neighborhoods_form_partition());
    }

    #[test]
    fn neighborhood_is_meet_of_minimal_description() {
        for s in [reducible_cover4(), unary_cover4()] {
            for x in 0..4 {
                let mut meet = s.universe().full_subset();
                for k in s.minimal_description(x).unwrap() {
                    meet = meet.intersection(&k);
                }
                assert_eq!(meet, s.neighborhood(x).unwrap());
            }
        }
    }

    #[test]
    fn neighborhoods_are_monotone_under_membership() {
        // y ∈ N(x) implies N(y) ⊆ N(x).
        for s in [reducible_cover4(), unary_cover4()] {
            for x in 0..4 {
                let nx = s.neighborhood(x).unwrap();
                for y in nx.indices() {
                    assert!(s.neighborhood(y).unwrap().is_subset_of(&nx));
                }
            }
        }
    }

    #[test]
    fn caches_are_coherent() {
        let s = reducible_cover4();
        let _ = s.neighborhoods();
        let _ = s.minimal_descriptions();
        let _ = s.reduct();
        assert!(s.caches_match_recomputation());
    }
}
