//! The two fixed-point families of lower approximations and their
//! lattice operations.
//!
//! `NeighborhoodFixedPoints` collects the sets with XL(X) = X; they are
//! exactly the unions of neighborhoods and form a lattice under ∪/∩.
//! `CoveringFixedPoints` collects the sets with FL(X) = X; they are
//! exactly the unions of blocks and form a lattice where the join is ∪
//! and the meet is FL(X ∩ Y).

use std::collections::BTreeSet;

use crate::approx::{block_bits, fl_bits, neighborhood_bits};
use crate::bits::Bits;
use crate::covering::ApproxSpace;
use crate::error::Error;
use crate::set::Subset;

/// Which lower approximation generated the family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    /// Fixed points of XL; generated by neighborhoods.
    NeighborhoodFixedPoints,
    /// Fixed points of FL; generated by blocks.
    CoveringFixedPoints,
}

impl FamilyKind {
    /// Short display name used by the CLI: P for the neighborhood
    /// family, F for the covering family.
    pub fn letter(&self) -> &'static str {
        match self {
            FamilyKind::NeighborhoodFixedPoints => "P",
            FamilyKind::CoveringFixedPoints => "F",
        }
    }
}

/// Hard upper bound for the 2^|U| subset-scan strategy.
pub const SUBSET_SCAN_HARD_CAP: usize = 24;

/// Default cap for the subset-scan strategy.
pub const SUBSET_SCAN_DEFAULT_CAP: usize = 20;

/// A fixed-point family with its members in canonical bit order.
#[derive(Clone, Debug)]
pub struct FixedPointFamily {
    kind: FamilyKind,
    space: ApproxSpace,
    members: Vec<Subset>,
}

impl FixedPointFamily {
    /// Builds the family as the union closure of its generators
    /// (neighborhoods or blocks), including the empty union. This is
    /// the scalable default; it agrees with the subset scan.
    pub fn build(space: &ApproxSpace, kind: FamilyKind) -> Self {
        let len = space.universe().size();
        let generators = generator_bits(space, kind);
        let mut closed: BTreeSet<Bits> = BTreeSet::new();
        let mut stack = vec![Bits::zero(len)];
        closed.insert(Bits::zero(len));
        while let Some(m) = stack.pop() {
            for g in &generators {
                let u = m.union(g);
                if closed.insert(u.clone()) {
                    stack.push(u);
                }
            }
        }
        let members = closed
            .into_iter()
            .map(|b| space.universe().subset_from_bits(b))
            .collect();
        FixedPointFamily {
            kind,
            space: space.clone(),
            members,
        }
    }

    /// Builds the family by scanning all 2^|U| subsets for fixed points
    /// of the defining operator. Kept as an independent construction
    /// route; fails with `SizeLimit` beyond the cap.
    pub fn build_by_subset_scan(
        space: &ApproxSpace,
        kind: FamilyKind,
        cap: usize,
    ) -> Result<Self, Error> {
        let n = space.universe().size();
        let cap = cap.min(SUBSET_SCAN_HARD_CAP);
        if n > cap {
            return Err(Error::SizeLimit { size: n, cap });
        }
        let members = space
            .universe()
            .iter_all_subsets()
            .filter(|x| match kind {
                FamilyKind::NeighborhoodFixedPoints => space.xl(x).unwrap() == *x,
                FamilyKind::CoveringFixedPoints => space.fl(x).unwrap() == *x,
            })
            .collect();
        Ok(FixedPointFamily {
            kind,
            space: space.clone(),
            members,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn space(&self) -> &ApproxSpace {
        &self.space
    }

    /// Members in canonical bit order; ∅ first, U last.
    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn bottom(&self) -> &Subset {
        &self.members[0]
    }

    pub fn top(&self) -> &Subset {
        self.members.last().unwrap()
    }

    pub fn contains(&self, x: &Subset) -> bool {
        x.universe() == self.space.universe() && self.members.binary_search(x).is_ok()
    }

    fn check_member(&self, x: &Subset) -> Result<(), Error> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotAMember { set: x.to_string() })
        }
    }

    /// X ∨ Y = X ∪ Y for both families.
    pub fn join(&self, x: &Subset, y: &Subset) -> Result<Subset, Error> {
        self.check_member(x)?;
        self.check_member(y)?;
        let out = x.union(y);
        debug_assert!(self.contains(&out));
        Ok(out)
    }

    /// X ∧ Y: plain intersection for the neighborhood family, FL(X ∩ Y)
    /// for the covering family.
    pub fn meet(&self, x: &Subset, y: &Subset) -> Result<Subset, Error> {
        self.check_member(x)?;
        self.check_member(y)?;
        let meet = x.intersection(y);
        let out = match self.kind {
            FamilyKind::NeighborhoodFixedPoints => meet,
            FamilyKind::CoveringFixedPoints => self.space.fl(&meet)?,
        };
        debug_assert!(self.contains(&out));
        Ok(out)
    }

    /// Join of any set of members; the empty join is ∅.
    pub fn arbitrary_join(&self, sets: &[Subset]) -> Result<Subset, Error> {
        let mut out = self.space.universe().empty_subset();
        for s in sets {
            self.check_member(s)?;
            out = out.union(s);
        }
        Ok(out)
    }

    /// Meet of any set of members; the empty meet is U.
    pub fn arbitrary_meet(&self, sets: &[Subset]) -> Result<Subset, Error> {
        let mut meet = self.space.universe().full_subset();
        for s in sets {
            self.check_member(s)?;
            meet = meet.intersection(s);
        }
        Ok(match self.kind {
            FamilyKind::NeighborhoodFixedPoints => meet,
            FamilyKind::CoveringFixedPoints => self.space.fl(&meet)?,
        })
    }

    /// The join-irreducible members, by pairwise scan: a ≠ ∅ such that
    /// a = b ∨ c with members b, c forces a = b or a = c.
    pub fn join_irreducibles(&self) -> Vec<Subset> {
        self.members
            .iter()
            .filter(|a| !a.is_empty() && !self.is_join_reducible(a))
            .cloned()
            .collect()
    }

    fn is_join_reducible(&self, a: &Subset) -> bool {
        // Scan candidate pairs largest-first; reducible members are
        // usually the union of their two biggest proper subsets.
        let mut below: Vec<&Subset> = self
            .members
            .iter()
            .filter(|m| m.is_proper_subset_of(a))
            .collect();
        below.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
        below
            .iter()
            .enumerate()
            .any(|(i, b)| below[i..].iter().any(|c| b.union(c) == *a))
    }

    /// Join-irreducibles via the cover criterion: a non-bottom member
    /// is join-irreducible iff it has exactly one lower cover. Used to
    /// cross-check the pairwise scan.
    pub fn join_irreducibles_by_covers(&self) -> Vec<Subset> {
        let hasse = self.hasse();
        let mut lower_cover_count = vec![0usize; self.members.len()];
        for &(_, upper) in hasse.edges() {
            lower_cover_count[upper] += 1;
        }
        self.members
            .iter()
            .enumerate()
            .filter(|(i, m)| !m.is_empty() && lower_cover_count[*i] == 1)
            .map(|(_, m)| m.clone())
            .collect()
    }

    /// The greatest member meeting x at ∅, when one exists. A maximum
    /// candidate must equal the union of all candidates, so it exists
    /// iff that union is itself a member and a candidate.
    pub fn pseudocomplement(&self, x: &Subset) -> Result<Option<Subset>, Error> {
        self.check_member(x)?;
        let bottom = self.space.universe().empty_subset();
        let mut best = bottom.clone();
        for y in &self.members {
            if self.meet(x, y)? == bottom {
                best = best.union(y);
            }
        }
        if !self.contains(&best) {
            return Ok(None);
        }
        Ok((self.meet(x, &best)? == bottom).then_some(best))
    }

    /// The least member joining x to U, when one exists. Dual to
    /// `pseudocomplement`: a minimum candidate must equal the meet of
    /// all candidates.
    pub fn dual_pseudocomplement(&self, x: &Subset) -> Result<Option<Subset>, Error> {
        self.check_member(x)?;
        let top = self.space.universe().full_subset();
        let candidates: Vec<Subset> = self
            .members
            .iter()
            .filter(|y| x.union(y) == top)
            .cloned()
            .collect();
        let meet = self.arbitrary_meet(&candidates)?;
        if !self.contains(&meet) {
            return Ok(None);
        }
        Ok((x.union(&meet) == top).then_some(meet))
    }
}

fn generator_bits(space: &ApproxSpace, kind: FamilyKind) -> Vec<Bits> {
    let mut gens = match kind {
        FamilyKind::NeighborhoodFixedPoints => neighborhood_bits(space),
        FamilyKind::CoveringFixedPoints => block_bits(space),
    };
    gens.sort();
    gens.dedup();
    gens
}

/// Closed-form pseudocomplement inside the family: XL(Xᶜ) for the
/// neighborhood family, FL(Xᶜ) for the covering family. The covering
/// form is only valid for unary coverings and fails with `NotUnary`
/// otherwise.
pub fn pseudocomplement_formula(
    space: &ApproxSpace,
    kind: FamilyKind,
    x: &Subset,
) -> Result<Subset, Error> {
    space.check_subset(x)?;
    match kind {
        FamilyKind::NeighborhoodFixedPoints => {
            require_member(space, kind, x)?;
            space.xl(&x.complement())
        }
        FamilyKind::CoveringFixedPoints => {
            if !space.is_unary() {
                return Err(Error::NotUnary);
            }
            require_member(space, kind, x)?;
            space.fl(&x.complement())
        }
    }
}

/// Closed-form dual pseudocomplement: the union of the neighborhoods of
/// Xᶜ for the neighborhood family; for the covering family (unary
/// only), the union of the irreducible blocks meeting Xᶜ, i.e. the
/// blocks of the reduction that contain an element outside X.
pub fn dual_pseudocomplement_formula(
    space: &ApproxSpace,
    kind: FamilyKind,
    x: &Subset,
) -> Result<Subset, Error> {
    space.check_subset(x)?;
    let len = space.universe().size();
    match kind {
        FamilyKind::NeighborhoodFixedPoints => {
            require_member(space, kind, x)?;
            let nbhd = neighborhood_bits(space);
            let mut out = Bits::zero(len);
            for z in x.complement().indices() {
                out = out.union(&nbhd[z]);
            }
            Ok(space.universe().subset_from_bits(out))
        }
        FamilyKind::CoveringFixedPoints => {
            if !space.is_unary() {
                return Err(Error::NotUnary);
            }
            require_member(space, kind, x)?;
            let complement = x.complement();
            let mut out = space.universe().empty_subset();
            for block in space.reduct().blocks() {
                if block.intersects(&complement) {
                    out = out.union(block);
                }
            }
            Ok(out)
        }
    }
}

fn require_member(space: &ApproxSpace, kind: FamilyKind, x: &Subset) -> Result<(), Error> {
    let fixed = match kind {
        FamilyKind::NeighborhoodFixedPoints => space.xl(x)? == *x,
        FamilyKind::CoveringFixedPoints => space.fl(x)? == *x,
    };
    if fixed {
        Ok(())
    } else {
        Err(Error::NotAMember { set: x.to_string() })
    }
}

/// Internal view of a family as raw bit patterns, for the exhaustive
/// classification scans. Keeps the inner loops free of refcounting.
pub(crate) struct RawFamily {
    pub kind: FamilyKind,
    pub len: usize,
    pub members: Vec<Bits>,
    pub blocks: Vec<Bits>,
}

impl RawFamily {
    pub fn of(family: &FixedPointFamily) -> Self {
        RawFamily {
            kind: family.kind,
            len: family.space.universe().size(),
            members: family.members.iter().map(|m| m.bits().clone()).collect(),
            blocks: block_bits(family.space()),
        }
    }

    pub fn meet(&self, a: &Bits, b: &Bits) -> Bits {
        let m = a.intersection(b);
        match self.kind {
            FamilyKind::NeighborhoodFixedPoints => m,
            FamilyKind::CoveringFixedPoints => fl_bits(&self.blocks, &m, self.len),
        }
    }

    pub fn contains(&self, b: &Bits) -> bool {
        self.members.binary_search(b).is_ok()
    }

    pub fn bottom(&self) -> Bits {
        Bits::zero(self.len)
    }

    pub fn top(&self) -> Bits {
        Bits::full(self.len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::Covering;
    use crate::set::Universe;

    fn space(blocks: &[&[usize]], n: usize) -> ApproxSpace {
        let u = Universe::of_size(n);
        ApproxSpace::new(Covering::from_indices(&u, blocks).unwrap())
    }

    fn reducible_cover4() -> ApproxSpace {
        space(&[&[0, 1, 2], &[0], &[0, 2, 3], &[1, 2]], 4)
    }

    fn cyclic_cover4() -> ApproxSpace {
        space(&[&[0, 1], &[1, 2], &[0, 2, 3]], 4)
    }

    fn unary_cover4() -> ApproxSpace {
        space(&[&[2], &[0], &[0, 2, 3], &[1, 2]], 4)
    }

    fn set(s: &ApproxSpace, idxs: &[usize]) -> Subset {
        s.universe()
            .subset_from_indices(idxs.iter().copied())
            .unwrap()
    }

    fn shown(members: &[Subset]) -> Vec<String> {
        members.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn builds_neighborhood_fixed_points_of_the_reducible_cover() {
        let s = reducible_cover4();
        let p = FixedPointFamily::build(&s, FamilyKind::NeighborhoodFixedPoints);
        assert_eq!(
            shown(p.members()),
            vec![
                "{}",
                "{1}",
                "{3}",
                "{1,3}",
                "{2,3}",
                "{1,2,3}",
                "{1,3,4}",
                "{1,2,3,4}"
            ]
        );
        let scanned =
            FixedPointFamily::build_by_subset_scan(&s, FamilyKind::NeighborhoodFixedPoints, 20)
                .unwrap();
        assert_eq!(p.members(), scanned.members());
    }

    #[test]
    fn builds_covering_fixed_points_of_the_cyclic_cover() {
        let s = cyclic_cover4();
        let f = FixedPointFamily::build(&s, FamilyKind::CoveringFixedPoints);
        assert_eq!(
            shown(f.members()),
            vec!["{}", "{1,2}", "{2,3}", "{1,2,3}", "{1,3,4}", "{1,2,3,4}"]
        );
        let scanned =
            FixedPointFamily::build_by_subset_scan(&s, FamilyKind::CoveringFixedPoints, 20)
                .unwrap();
        assert_eq!(f.members(), scanned.members());
    }

    #[test]
    fn builds_covering_fixed_points_of_the_unary_cover() {
        let s = unary_cover4();
        let f = FixedPointFamily::build(&s, FamilyKind::CoveringFixedPoints);
        assert_eq!(
            shown(f.members()),
            vec![
                "{}",
                "{1}",
                "{3}",
                "{1,3}",
                "{2,3}",
                "{1,2,3}",
                "{1,3,4}",
                "{1,2,3,4}"
            ]
        );
    }

    #[test]
    fn single_block_cover_gives_the_two_element_family() {
        let s = space(&[&[0, 1, 2]], 3);
        for kind in [
            FamilyKind::NeighborhoodFixedPoints,
            FamilyKind::CoveringFixedPoints,
        ] {
            let fam = FixedPointFamily::build(&s, kind);
            assert_eq!(shown(fam.members()), vec!["{}", "{1,2,3}"]);
        }
    }

    #[test]
    fn partition_cover_families_are_block_unions() {
        let s = space(&[&[0, 1], &[2, 3]], 4);
        let p = FixedPointFamily::build(&s, FamilyKind::NeighborhoodFixedPoints);
        assert_eq!(
            shown(p.members()),
            vec!["{}", "{1,2}", "{3,4}", "{1,2,3,4}"]
        );
    }

    #[test]
    fn subset_scan_respects_the_cap() {
        let s = space(&[&[0, 1, 2]], 3);
        let err = FixedPointFamily::build_by_subset_scan(&s, FamilyKind::CoveringFixedPoints, 2)
            .unwrap_err();
        assert_eq!(err, Error::SizeLimit { size: 3, cap: 2 });
    }

    #[test]
    fn join_and_meet_follow_the_family_kind() {
        let s = cyclic_cover4();
        let f = FixedPointFamily::build(&s, FamilyKind::CoveringFixedPoints);
        let a = set(&s, &[0, 1, 2]); // {1,2,3}
        let b = set(&s, &[0, 2, 3]); // {1,3,4}
        let c = set(&s, &[0, 1]); // {1,2}
        assert_eq!(f.join(&b, &c).unwrap(), s.universe().full_subset());
        assert!(f.meet(&a, &b).unwrap().is_empty());
        assert_eq!(f.meet(&a, &c).unwrap(), c);

        let p = FixedPointFamily::build(&reducible_cover4(), FamilyKind::NeighborhoodFixedPoints);
        let s2 = p.space().clone();
        let x = set(&s2, &[1, 2]);
        let y = set(&s2, &[0, 2, 3]);
        assert_eq!(p.meet(&x, &y).unwrap(), set(&s2, &[2]));
        assert_eq!(
            p.join(&set(&s2, &[0]), &set(&s2, &[2])).unwrap(),
            set(&s2, &[0, 2])
        );
        assert_eq!(p.join(&x, &s2.universe().empty_subset()).unwrap(), x);
        assert_eq!(p.meet(&x, &s2.universe().full_subset()).unwrap(), x);
    }

    #[test]
    fn lattice_ops_reject_non_members() {
        let s = cyclic_cover4();
        let f = FixedPointFamily::build(&s, FamilyKind::CoveringFixedPoints);
        let stray = set(&s, &[1]);
        assert!(matches!(
            f.join(&stray, &s.universe().full_subset()),
            Err(Error::NotAMember { .. })
        ));
    }

    #[test]
    fn arbitrary_ops_cover_the_empty_family() {
        let s = reducible_cover4();
        let p = FixedPointFamily::build(&s, FamilyKind::NeighborhoodFixedPoints);
        assert_eq!(p.arbitrary_join(&[]).unwrap(), s.universe().empty_subset());
        assert_eq!(p.arbitrary_meet(&[]).unwrap(), s.universe().full_subset());
        assert_eq!(
            p.arbitrary_join(p.members()).unwrap(),
            s.universe().full_subset()
        );

        let c = cyclic_cover4();
        let f = FixedPointFamily::build(&c, FamilyKind::CoveringFixedPoints);
        let blocks: Vec<Subset> = c.covering().blocks().to_vec();
        assert!(f.arbitrary_meet(&blocks).unwrap().is_empty());
    }

    #[test]
    fn join_irreducibles_by_scan_and_by_covers_agree() {
        let p = FixedPointFamily::build(&reducible_cover4(), FamilyKind::NeighborhoodFixedPoints);
        assert_eq!(
            shown(&p.join_irreducibles()),
            vec!["{1}", "{3}", "{2,3}", "{1,3,4}"]
        );
        assert_eq!(p.join_irreducibles(), p.join_irreducibles_by_covers());

        let f = FixedPointFamily::build(&cyclic_cover4(), FamilyKind::CoveringFixedPoints);
        assert_eq!(
            shown(&f.join_irreducibles()),
            vec!["{1,2}", "{2,3}", "{1,3,4}"]
        );
        assert_eq!(f.join_irreducibles(), f.join_irreducibles_by_covers());

        let two = FixedPointFamily::build(
            &space(&[&[0, 1, 2]], 3),
            FamilyKind::NeighborhoodFixedPoints,
        );
        assert_eq!(shown(&two.join_irreducibles()), vec!["{1,2,3}"]);
    }

    #[test]
    fn pseudocomplements_of_the_reducible_cover_family() {
        let s = reducible_cover4();
        let p = FixedPointFamily::build(&s, FamilyKind::NeighborhoodFixedPoints);
        let x = set(&s, &[1, 2]); // {2,3}
        assert_eq!(p.pseudocomplement(&x).unwrap(), Some(set(&s, &[0])));
        assert_eq!(
            p.dual_pseudocomplement(&x).unwrap(),
            Some(set(&s, &[0, 2, 3]))
        );
        assert_eq!(
            p.pseudocomplement(&s.universe().empty_subset()).unwrap(),
            Some(s.universe().full_subset())
        );
        assert_eq!(
            p.dual_pseudocomplement(&s.universe().full_subset())
                .unwrap(),
            Some(s.universe().empty_subset())
        );
    }

    #[test]
    fn pseudocomplement_of_covering_family_under_unary_cover() {
        let s = unary_cover4();
        let f = FixedPointFamily::build(&s, FamilyKind::CoveringFixedPoints);
        let x = set(&s, &[2]); // {3}
        assert_eq!(f.pseudocomplement(&x).unwrap(), Some(set(&s, &[0])));
    }

    #[test]
    fn formulas_match_the_worked_values() {
        let s = reducible_cover4();
        let kind = FamilyKind::NeighborhoodFixedPoints;
        let x = set(&s, &[1, 2]); // {2,3}
        let star = pseudocomplement_formula(&s, kind, &x).unwrap();
        assert_eq!(star, set(&s, &[0])); // {1}
        let star2 = pseudocomplement_formula(&s, kind, &star).unwrap();
        assert_eq!(star2, set(&s, &[1, 2])); // {2,3}
        let plus = dual_pseudocomplement_formula(&s, kind, &x).unwrap();
        assert_eq!(plus, set(&s, &[0, 2, 3])); // {1,3,4}
        let plus2 = dual_pseudocomplement_formula(&s, kind, &plus).unwrap();
        assert_eq!(plus2, set(&s, &[1, 2])); // {2,3}
        assert_eq!(
            pseudocomplement_formula(&s, kind, &s.universe().full_subset()).unwrap(),
            s.universe().empty_subset()
        );
        assert_eq!(
            dual_pseudocomplement_formula(&s, kind, &s.universe().full_subset()).unwrap(),
            s.universe().empty_subset()
        );
    }

    #[test]
    fn covering_family_formulas_match_the_worked_values() {
        let s = unary_cover4();
        let kind = FamilyKind::CoveringFixedPoints;
        let x = set(&s, &[2]); // {3}
        let star = pseudocomplement_formula(&s, kind, &x).unwrap();
        assert_eq!(star, set(&s, &[0])); // {1}
        let star2 = pseudocomplement_formula(&s, kind, &star).unwrap();
        assert_eq!(star2, set(&s, &[1, 2])); // {2,3}
        let y = set(&s, &[1, 2]); // {2,3}
        let plus = dual_pseudocomplement_formula(&s, kind, &y).unwrap();
        assert_eq!(plus, set(&s, &[0, 2, 3])); // {1,3,4}
        let plus2 = dual_pseudocomplement_formula(&s, kind, &plus).unwrap();
        assert_eq!(plus2, set(&s, &[1, 2])); // {2,3}
        assert_eq!(
            pseudocomplement_formula(&s, kind, &s.universe().empty_subset()).unwrap(),
            s.universe().full_subset()
        );
        assert_eq!(
            dual_pseudocomplement_formula(&s, kind, &s.universe().empty_subset()).unwrap(),
            s.universe().full_subset()
        );
    }

    #[test]
    fn covering_family_formulas_require_a_unary_cover() {
        let s = cyclic_cover4();
        let kind = FamilyKind::CoveringFixedPoints;
        let x = set(&s, &[0, 1]);
        assert_eq!(pseudocomplement_formula(&s, kind, &x), Err(Error::NotUnary));
        assert_eq!(
            dual_pseudocomplement_formula(&s, kind, &x),
            Err(Error::NotUnary)
        );
    }

    #[test]
    fn formulas_reject_non_members() {
        let s = reducible_cover4();
        let stray = set(&s, &[1]); // {2} is not a fixed point of XL
        assert!(matches!(
            pseudocomplement_formula(&s, FamilyKind::NeighborhoodFixedPoints, &stray),
            Err(Error::NotAMember { .. })
        ));
    }
}
