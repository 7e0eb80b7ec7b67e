//! Structural classification of a fixed-point family: lattice bounds,
//! completeness, distributivity, complements, pseudocomplements, Stone
//! and dual Stone identities.
//!
//! Families over single-word universes run on a packed `u64` engine;
//! wider universes use the same scans over dynamic bit vectors. The two
//! engines are equivalence-tested against each other.

use std::fmt;

use crate::approx::fl_bits;
use crate::bits::Bits;
use crate::family::{FamilyKind, FixedPointFamily, RawFamily};
use crate::set::{Subset, Universe};

/// Members above this count skip the sub-family enumeration when
/// checking completeness; pairwise closure plus the bounds already
/// implies it for finite families.
pub const COMPLETENESS_ENUM_CAP: usize = 20;

/// Why a Stone (or dual Stone) check failed; every variant re-checks
/// false against the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraObstruction {
    /// Distributivity fails at (a, b, c).
    NotDistributive([Subset; 3]),
    /// No (dual) pseudocomplement exists for the member.
    NoPseudocomplement(Subset),
    /// The Stone identity x*∨x** = 1 (dually x⁺∧x⁺⁺ = 0) fails here.
    IdentityFails(Subset),
}

impl fmt::Display for AlgebraObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraObstruction::NotDistributive([a, b, c]) => {
                write!(f, "not distributive at ({a},{b},{c})")
            }
            AlgebraObstruction::NoPseudocomplement(x) => {
                write!(f, "no pseudocomplement for {x}")
            }
            AlgebraObstruction::IdentityFails(x) => write!(f, "identity fails at {x}"),
        }
    }
}

/// Per-family record of lattice and algebra properties. False flags for
/// distributive, complemented, stone and dual_stone carry witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub bounded: bool,
    pub complete: bool,
    pub distributive: bool,
    pub distributivity_witness: Option<[Subset; 3]>,
    pub complemented: bool,
    pub complemented_witness: Option<Subset>,
    pub boolean: bool,
    pub pseudocomplemented: bool,
    pub dual_pseudocomplemented: bool,
    pub double_p_algebra: bool,
    pub stone: bool,
    pub stone_witness: Option<AlgebraObstruction>,
    pub dual_stone: bool,
    pub dual_stone_witness: Option<AlgebraObstruction>,
    pub double_stone: bool,
}

impl FixedPointFamily {
    /// Classifies the family by exhaustive scans over its members:
    /// triples for distributivity, pairs for complements, per-member
    /// searches for pseudocomplements. Witnesses are the first failures
    /// in canonical member order.
    pub fn classify(&self) -> ClassificationReport {
        match WordAlgebra::of_family(self) {
            Some(algebra) => classify_words(&algebra, self.space().universe()),
            None => classify_bits(self),
        }
    }
}

#[derive(Clone, Copy)]
enum StoneSide {
    Pseudo,
    DualPseudo,
}

// ---------------------------------------------------------------------
// Packed word engine (universes of at most 64 elements).
// ---------------------------------------------------------------------

/// A family as sorted raw words plus the meet rule, with the block
/// lower approximation tabulated per subset pattern when the universe
/// is small enough.
pub(crate) struct WordAlgebra {
    pub kind: FamilyKind,
    pub full: u64,
    pub members: Vec<u64>,
    pub blocks: Vec<u64>,
    fl_table: Option<Vec<u64>>,
}

const FL_TABLE_CAP: usize = 16;

impl WordAlgebra {
    pub fn of_family(family: &FixedPointFamily) -> Option<Self> {
        let n = family.space().universe().size();
        if n > 64 {
            return None;
        }
        let members = family
            .members()
            .iter()
            .map(|m| m.bits().as_word().unwrap())
            .collect();
        let blocks = family
            .space()
            .covering()
            .blocks()
            .iter()
            .map(|b| b.bits().as_word().unwrap())
            .collect();
        Some(WordAlgebra::new(family.kind(), n, members, blocks))
    }

    pub fn new(kind: FamilyKind, n: usize, members: Vec<u64>, blocks: Vec<u64>) -> Self {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let fl_table = (matches!(kind, FamilyKind::CoveringFixedPoints) && n <= FL_TABLE_CAP)
            .then(|| (0..=full).map(|x| fl_word(&blocks, x)).collect());
        WordAlgebra {
            kind,
            full,
            members,
            blocks,
            fl_table,
        }
    }

    #[inline]
    pub fn meet(&self, a: u64, b: u64) -> u64 {
        let inter = a & b;
        match self.kind {
            FamilyKind::NeighborhoodFixedPoints => inter,
            FamilyKind::CoveringFixedPoints => match &self.fl_table {
                Some(table) => table[inter as usize],
                None => fl_word(&self.blocks, inter),
            },
        }
    }

    pub fn contains(&self, w: u64) -> bool {
        self.members.binary_search(&w).is_ok()
    }
}

pub(crate) fn fl_word(blocks: &[u64], x: u64) -> u64 {
    let mut out = 0;
    for &k in blocks {
        if k & !x == 0 {
            out |= k;
        }
    }
    out
}

/// Lexicographically least failing triple of
/// a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c), scanning b ≤ c; the dual law is
/// equivalent in lattices and not scanned separately.
pub(crate) fn word_distributivity_witness(alg: &WordAlgebra) -> Option<[u64; 3]> {
    let ms = &alg.members;
    match alg.kind {
        FamilyKind::NeighborhoodFixedPoints => {
            // Plain ∩/∪ triples; accumulate mismatch bits branch-free so
            // the inner loop vectorizes, and rescan only on a hit.
            for &a in ms {
                for (j, &b) in ms.iter().enumerate() {
                    let ab = a & b;
                    let mut bad = 0u64;
                    for &c in &ms[j..] {
                        bad |= (a & (b | c)) ^ (ab | (a & c));
                    }
                    if bad != 0 {
                        for &c in &ms[j..] {
                            if a & (b | c) != ab | (a & c) {
                                return Some([a, b, c]);
                            }
                        }
                    }
                }
            }
            None
        }
        FamilyKind::CoveringFixedPoints => {
            for &a in ms {
                for (j, &b) in ms.iter().enumerate() {
                    let ab = alg.meet(a, b);
                    for &c in &ms[j..] {
                        if alg.meet(a, b | c) != ab | alg.meet(a, c) {
                            return Some([a, b, c]);
                        }
                    }
                }
            }
            None
        }
    }
}

/// The least member with no complement, if any.
fn word_complement_witness(alg: &WordAlgebra) -> Option<u64> {
    alg.members
        .iter()
        .find(|&&a| {
            !alg.members
                .iter()
                .any(|&b| a | b == alg.full && alg.meet(a, b) == 0)
        })
        .copied()
}

/// Greatest member meeting x at ∅, when one exists: the join of all
/// candidates is a member and is the maximum iff it is a candidate.
pub(crate) fn word_pseudocomplement(alg: &WordAlgebra, x: u64) -> Option<u64> {
    let mut best = 0u64;
    for &y in &alg.members {
        if alg.meet(x, y) == 0 {
            best |= y;
        }
    }
    (alg.meet(x, best) == 0).then_some(best)
}

/// Least member joining x to U, when one exists; dual to the above.
pub(crate) fn word_dual_pseudocomplement(alg: &WordAlgebra, x: u64) -> Option<u64> {
    let mut inter = alg.full;
    for &y in &alg.members {
        if x | y == alg.full {
            inter &= y;
        }
    }
    let m = match alg.kind {
        FamilyKind::NeighborhoodFixedPoints => inter,
        FamilyKind::CoveringFixedPoints => match &alg.fl_table {
            Some(table) => table[inter as usize],
            None => fl_word(&alg.blocks, inter),
        },
    };
    (x | m == alg.full).then_some(m)
}

enum WordObstruction {
    NotDistributive([u64; 3]),
    NoPseudocomplement(u64),
    IdentityFails(u64),
}

fn word_stone_obstruction(
    alg: &WordAlgebra,
    dist: &Option<[u64; 3]>,
    side: StoneSide,
) -> Option<WordObstruction> {
    if let Some(w) = dist {
        return Some(WordObstruction::NotDistributive(*w));
    }
    for &x in &alg.members {
        let holds = match side {
            StoneSide::Pseudo => match word_pseudocomplement(alg, x) {
                None => return Some(WordObstruction::NoPseudocomplement(x)),
                Some(star) => match word_pseudocomplement(alg, star) {
                    None => return Some(WordObstruction::NoPseudocomplement(star)),
                    Some(star2) => star | star2 == alg.full,
                },
            },
            StoneSide::DualPseudo => match word_dual_pseudocomplement(alg, x) {
                None => return Some(WordObstruction::NoPseudocomplement(x)),
                Some(plus) => match word_dual_pseudocomplement(alg, plus) {
                    None => return Some(WordObstruction::NoPseudocomplement(plus)),
                    Some(plus2) => alg.meet(plus, plus2) == 0,
                },
            },
        };
        if !holds {
            return Some(WordObstruction::IdentityFails(x));
        }
    }
    None
}

pub(crate) fn word_pairwise_closed(alg: &WordAlgebra) -> bool {
    alg.members.iter().enumerate().all(|(i, &a)| {
        alg.members[i..]
            .iter()
            .all(|&b| alg.contains(a | b) && alg.contains(alg.meet(a, b)))
    })
}

/// Enumerates every sub-family when there are at most
/// [`COMPLETENESS_ENUM_CAP`] members and checks that its join and meet
/// are members; beyond the cap the pairwise closure already settles it.
pub(crate) fn word_subfamily_closed(alg: &WordAlgebra) -> bool {
    let m = alg.members.len();
    if m > COMPLETENESS_ENUM_CAP {
        return true;
    }
    let words = &alg.members;
    let mut joins = vec![0u64; 1 << m];
    let mut inters = vec![alg.full; 1 << m];
    for mask in 1usize..(1 << m) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        joins[mask] = joins[rest] | words[low];
        inters[mask] = inters[rest] & words[low];
    }
    (0..(1usize << m)).all(|mask| {
        let meet = match alg.kind {
            FamilyKind::NeighborhoodFixedPoints => inters[mask],
            FamilyKind::CoveringFixedPoints => match &alg.fl_table {
                Some(table) => table[inters[mask] as usize],
                None => fl_word(&alg.blocks, inters[mask]),
            },
        };
        alg.contains(joins[mask]) && alg.contains(meet)
    })
}

fn classify_words(alg: &WordAlgebra, universe: &Universe) -> ClassificationReport {
    let n = universe.size();
    let mk = |w: u64| universe.subset_from_bits(Bits::from_word(n, w));

    let bounded = alg.contains(0) && alg.contains(alg.full);
    let complete = bounded && word_pairwise_closed(alg) && word_subfamily_closed(alg);

    let dist_raw = word_distributivity_witness(alg);
    let distributive = dist_raw.is_none();
    let distributivity_witness = dist_raw.map(|w| w.map(mk));

    let complemented_raw = word_complement_witness(alg);
    let complemented = complemented_raw.is_none();
    let complemented_witness = complemented_raw.map(mk);

    let boolean = complemented && distributive;

    let pseudocomplemented = alg
        .members
        .iter()
        .all(|&x| word_pseudocomplement(alg, x).is_some());
    let dual_pseudocomplemented = alg
        .members
        .iter()
        .all(|&x| word_dual_pseudocomplement(alg, x).is_some());
    let double_p_algebra = pseudocomplemented && dual_pseudocomplemented;

    let into_obstruction = |o: WordObstruction| match o {
        WordObstruction::NotDistributive(w) => AlgebraObstruction::NotDistributive(w.map(mk)),
        WordObstruction::NoPseudocomplement(w) => AlgebraObstruction::NoPseudocomplement(mk(w)),
        WordObstruction::IdentityFails(w) => AlgebraObstruction::IdentityFails(mk(w)),
    };
    let stone_raw = word_stone_obstruction(alg, &dist_raw, StoneSide::Pseudo);
    let stone = stone_raw.is_none();
    let stone_witness = stone_raw.map(into_obstruction);
    let dual_stone_raw = word_stone_obstruction(alg, &dist_raw, StoneSide::DualPseudo);
    let dual_stone = dual_stone_raw.is_none();
    let dual_stone_witness = dual_stone_raw.map(into_obstruction);
    let double_stone = stone && dual_stone;

    ClassificationReport {
        bounded,
        complete,
        distributive,
        distributivity_witness,
        complemented,
        complemented_witness,
        boolean,
        pseudocomplemented,
        dual_pseudocomplemented,
        double_p_algebra,
        stone,
        stone_witness,
        dual_stone,
        dual_stone_witness,
        double_stone,
    }
}

// ---------------------------------------------------------------------
// Dynamic bit-vector engine (universes beyond one word).
// ---------------------------------------------------------------------

enum RawObstruction {
    NotDistributive([Bits; 3]),
    NoPseudocomplement(Bits),
    IdentityFails(Bits),
}

impl RawObstruction {
    fn into_subsets(self, universe: &Universe) -> AlgebraObstruction {
        match self {
            RawObstruction::NotDistributive(w) => {
                AlgebraObstruction::NotDistributive(w.map(|b| universe.subset_from_bits(b)))
            }
            RawObstruction::NoPseudocomplement(b) => {
                AlgebraObstruction::NoPseudocomplement(universe.subset_from_bits(b))
            }
            RawObstruction::IdentityFails(b) => {
                AlgebraObstruction::IdentityFails(universe.subset_from_bits(b))
            }
        }
    }
}

pub(crate) fn distributivity_witness(raw: &RawFamily) -> Option<[Bits; 3]> {
    let ms = &raw.members;
    for a in ms {
        for (j, b) in ms.iter().enumerate() {
            let a_meet_b = raw.meet(a, b);
            for c in &ms[j..] {
                let lhs = raw.meet(a, &b.union(c));
                let rhs = a_meet_b.union(&raw.meet(a, c));
                if lhs != rhs {
                    return Some([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    None
}

fn complement_witness(raw: &RawFamily) -> Option<Bits> {
    let bottom = raw.bottom();
    let top = raw.top();
    raw.members
        .iter()
        .find(|a| {
            !raw.members
                .iter()
                .any(|b| a.union(b) == top && raw.meet(a, b) == bottom)
        })
        .cloned()
}

pub(crate) fn raw_pseudocomplement(raw: &RawFamily, x: &Bits) -> Option<Bits> {
    let bottom = raw.bottom();
    let mut best = bottom.clone();
    for y in &raw.members {
        if raw.meet(x, y) == bottom {
            best = best.union(y);
        }
    }
    (raw.meet(x, &best) == bottom).then_some(best)
}

pub(crate) fn raw_dual_pseudocomplement(raw: &RawFamily, x: &Bits) -> Option<Bits> {
    let top = raw.top();
    let mut inter = top.clone();
    for y in &raw.members {
        if x.union(y) == top {
            inter = inter.intersection(y);
        }
    }
    let m = match raw.kind {
        FamilyKind::NeighborhoodFixedPoints => inter,
        FamilyKind::CoveringFixedPoints => fl_bits(&raw.blocks, &inter, raw.len),
    };
    (x.union(&m) == top).then_some(m)
}

fn stone_obstruction(
    raw: &RawFamily,
    dist: &Option<[Bits; 3]>,
    side: StoneSide,
) -> Option<RawObstruction> {
    if let Some(w) = dist {
        return Some(RawObstruction::NotDistributive(w.clone()));
    }
    for x in &raw.members {
        let holds = match side {
            StoneSide::Pseudo => match raw_pseudocomplement(raw, x) {
                None => return Some(RawObstruction::NoPseudocomplement(x.clone())),
                Some(star) => match raw_pseudocomplement(raw, &star) {
                    None => return Some(RawObstruction::NoPseudocomplement(star)),
                    Some(star2) => star.union(&star2) == raw.top(),
                },
            },
            StoneSide::DualPseudo => match raw_dual_pseudocomplement(raw, x) {
                None => return Some(RawObstruction::NoPseudocomplement(x.clone())),
                Some(plus) => match raw_dual_pseudocomplement(raw, &plus) {
                    None => return Some(RawObstruction::NoPseudocomplement(plus)),
                    Some(plus2) => raw.meet(&plus, &plus2) == raw.bottom(),
                },
            },
        };
        if !holds {
            return Some(RawObstruction::IdentityFails(x.clone()));
        }
    }
    None
}

pub(crate) fn pairwise_closed(raw: &RawFamily) -> bool {
    raw.members.iter().enumerate().all(|(i, a)| {
        raw.members[i..]
            .iter()
            .all(|b| raw.contains(&a.union(b)) && raw.contains(&raw.meet(a, b)))
    })
}

pub(crate) fn subfamily_closed(raw: &RawFamily) -> bool {
    let m = raw.members.len();
    if m > COMPLETENESS_ENUM_CAP {
        return true;
    }
    (0..(1usize << m)).all(|mask| {
        let mut join = raw.bottom();
        let mut inter = raw.top();
        for (i, member) in raw.members.iter().enumerate() {
            if mask >> i & 1 == 1 {
                join = join.union(member);
                inter = inter.intersection(member);
            }
        }
        let meet = match raw.kind {
            FamilyKind::NeighborhoodFixedPoints => inter,
            FamilyKind::CoveringFixedPoints => fl_bits(&raw.blocks, &inter, raw.len),
        };
        raw.contains(&join) && raw.contains(&meet)
    })
}

fn classify_bits(family: &FixedPointFamily) -> ClassificationReport {
    let raw = RawFamily::of(family);
    let universe = family.space().universe();

    let bounded = raw.contains(&raw.bottom()) && raw.contains(&raw.top());
    let complete = bounded && pairwise_closed(&raw) && subfamily_closed(&raw);

    let dist_raw = distributivity_witness(&raw);
    let distributive = dist_raw.is_none();
    let distributivity_witness = dist_raw
        .as_ref()
        .map(|w| w.clone().map(|b| universe.subset_from_bits(b)));

    let complemented_raw = complement_witness(&raw);
    let complemented = complemented_raw.is_none();
    let complemented_witness = complemented_raw.map(|b| universe.subset_from_bits(b));

    let boolean = complemented && distributive;

    let pseudocomplemented = raw
        .members
        .iter()
        .all(|x| raw_pseudocomplement(&raw, x).is_some());
    let dual_pseudocomplemented = raw
        .members
        .iter()
        .all(|x| raw_dual_pseudocomplement(&raw, x).is_some());
    let double_p_algebra = pseudocomplemented && dual_pseudocomplemented;

    let stone_raw = stone_obstruction(&raw, &dist_raw, StoneSide::Pseudo);
    let stone = stone_raw.is_none();
    let stone_witness = stone_raw.map(|o| o.into_subsets(universe));

    let dual_stone_raw = stone_obstruction(&raw, &dist_raw, StoneSide::DualPseudo);
    let dual_stone = dual_stone_raw.is_none();
    let dual_stone_witness = dual_stone_raw.map(|o| o.into_subsets(universe));

    let double_stone = stone && dual_stone;

    ClassificationReport {
        bounded,
        complete,
        distributive,
        distributivity_witness,
        complemented,
        complemented_witness,
        boolean,
        pseudocomplemented,
        dual_pseudocomplemented,
        double_p_algebra,
        stone,
        stone_witness,
        dual_stone,
        dual_stone_witness,
        double_stone,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{ApproxSpace, Covering};

    fn family(blocks: &[&[usize]], n: usize, kind: FamilyKind) -> FixedPointFamily {
        let u = Universe::of_size(n);
        let s = ApproxSpace::new(Covering::from_indices(&u, blocks).unwrap());
        FixedPointFamily::build(&s, kind)
    }

    fn set(f: &FixedPointFamily, idxs: &[usize]) -> Subset {
        f.space()
            .universe()
            .subset_from_indices(idxs.iter().copied())
            .unwrap()
    }

    #[test]
    fn neighborhood_family_of_the_reducible_cover() {
        let p = family(
            &[&[0, 1, 2], &[0], &[0, 2, 3], &[1, 2]],
            4,
            FamilyKind::NeighborhoodFixedPoints,
        );
        let r = p.classify();
        assert!(r.bounded && r.complete);
        assert!(r.distributive);
        assert!(r.pseudocomplemented && r.dual_pseudocomplemented && r.double_p_algebra);
        assert!(!r.stone && !r.dual_stone && !r.double_stone);
        assert!(!r.complemented && !r.boolean);

        // {2,3} re-checks as a witness against both identities.
        let x = set(&p, &[1, 2]);
        let star = p.pseudocomplement(&x).unwrap().unwrap();
        let star2 = p.pseudocomplement(&star).unwrap().unwrap();
        assert_ne!(star.union(&star2), p.space().universe().full_subset());
        let plus = p.dual_pseudocomplement(&x).unwrap().unwrap();
        let plus2 = p.dual_pseudocomplement(&plus).unwrap().unwrap();
        assert!(!p.meet(&plus, &plus2).unwrap().is_empty());

        // The stored witnesses re-check false too.
        match r.stone_witness.unwrap() {
            AlgebraObstruction::IdentityFails(w) => {
                let s1 = p.pseudocomplement(&w).unwrap().unwrap();
                let s2 = p.pseudocomplement(&s1).unwrap().unwrap();
                assert_ne!(s1.union(&s2), p.space().universe().full_subset());
            }
            other => panic!("unexpected obstruction {other:?}"),
        }
        match r.dual_stone_witness.unwrap() {
            AlgebraObstruction::IdentityFails(w) => assert_eq!(w, set(&p, &[1, 2])),
            other => panic!("unexpected obstruction {other:?}"),
        }
    }

    #[test]
    fn covering_family_of_the_cyclic_cover_is_not_distributive() {
        let f = family(
            &[&[0, 1], &[1, 2], &[0, 2, 3]],
            4,
            FamilyKind::CoveringFixedPoints,
        );
        let r = f.classify();
        assert!(!r.distributive);
        let [a, b, c] = r.distributivity_witness.unwrap();
        let lhs = f.meet(&a, &f.join(&b, &c).unwrap()).unwrap();
        let rhs = f
            .join(&f.meet(&a, &b).unwrap(), &f.meet(&a, &c).unwrap())
            .unwrap();
        assert_ne!(lhs, rhs);
        assert!(!r.boolean);
        assert!(matches!(
            r.stone_witness,
            Some(AlgebraObstruction::NotDistributive(_))
        ));
    }

    #[test]
    fn partition_families_are_boolean_double_stone() {
        for kind in [
            FamilyKind::NeighborhoodFixedPoints,
            FamilyKind::CoveringFixedPoints,
        ] {
            let f = family(&[&[0, 1], &[2, 3]], 4, kind);
            let r = f.classify();
            assert!(r.bounded && r.complete && r.distributive && r.complemented);
            assert!(r.boolean && r.double_p_algebra && r.double_stone);
            assert!(r.stone && r.dual_stone);
            assert!(r.stone_witness.is_none() && r.dual_stone_witness.is_none());
        }
    }

    #[test]
    fn two_element_family_is_boolean() {
        let f = family(&[&[0, 1, 2]], 3, FamilyKind::NeighborhoodFixedPoints);
        let r = f.classify();
        assert!(r.boolean && r.double_stone && r.complete);
    }

    #[test]
    fn unary_cover_family_is_distributive_but_not_stone() {
        let f = family(
            &[&[2], &[0], &[0, 2, 3], &[1, 2]],
            4,
            FamilyKind::CoveringFixedPoints,
        );
        let r = f.classify();
        assert!(r.distributive && r.double_p_algebra);
        assert!(!r.stone && !r.dual_stone);
    }

    #[test]
    fn word_and_bit_vector_engines_agree() {
        let samples: &[(&[&[usize]], usize)] = &[
            (&[&[0, 1, 2], &[0], &[0, 2, 3], &[1, 2]], 4),
            (&[&[0, 1], &[1, 2], &[0, 2, 3]], 4),
            (&[&[2], &[0], &[0, 2, 3], &[1, 2]], 4),
            (&[&[0, 1], &[2, 3]], 4),
            (&[&[0], &[1], &[2], &[0, 1, 2]], 3),
        ];
        for (blocks, n) in samples {
            for kind in [
                FamilyKind::NeighborhoodFixedPoints,
                FamilyKind::CoveringFixedPoints,
            ] {
                let fam = family(blocks, *n, kind);
                let fast = fam.classify();
                let slow = classify_bits(&fam);
                assert_eq!(fast, slow, "engines disagree on {blocks:?} ({kind:?})");
            }
        }
    }
}
