//! Per-covering verification: every structural law of the library is
//! checked outright on one approximation space; conditional laws run
//! only when their hypothesis holds and record which branch ran.
//!
//! The scans run on packed words with the lower approximations and the
//! order-theoretic bound maps tabulated per subset pattern, so a full
//! sweep over thousands of coverings stays fast on one core.

use crate::bits::Bits;
use crate::classify::{
    fl_word, word_distributivity_witness, word_dual_pseudocomplement, word_pseudocomplement,
    word_subfamily_closed, WordAlgebra,
};
use crate::covering::ApproxSpace;
use crate::error::Error;
use crate::family::{FamilyKind, FixedPointFamily};
use crate::reduction::block_is_reducible;
use crate::set::{Subset, Universe};

/// Default universe-size cap for the subset-exhaustive suite.
pub const SUITE_DEFAULT_CAP: usize = 8;

/// Beyond this the 2^|U| subset sweeps stop being worthwhile.
pub const SUITE_HARD_CAP: usize = 16;

/// Outcome of one law on one covering. `conclusion_holds` is false only
/// together with a witness that re-evaluates false.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub id: &'static str,
    pub hypothesis_held: bool,
    pub conclusion_holds: bool,
    pub witness: Option<Witness>,
}

/// A concrete failure: a short note plus the sets involved.
#[derive(Clone, Debug)]
pub struct Witness {
    pub note: String,
    pub sets: Vec<Subset>,
}

/// Runs the whole suite at the default cap.
pub fn run_theorem_suite(space: &ApproxSpace) -> Result<Vec<TheoremReport>, Error> {
    run_theorem_suite_capped(space, SUITE_DEFAULT_CAP)
}

pub fn run_theorem_suite_capped(
    space: &ApproxSpace,
    cap: usize,
) -> Result<Vec<TheoremReport>, Error> {
    let n = space.universe().size();
    let cap = cap.min(SUITE_HARD_CAP);
    if n > cap {
        return Err(Error::SizeLimit { size: n, cap });
    }
    Ok(Suite::new(space).run())
}

struct FamilyTables {
    words: Vec<u64>,
    algebra: WordAlgebra,
    /// Union of all members contained in each subset pattern: the
    /// greatest lower bound candidate of the inclusion order.
    below: Vec<u64>,
    /// Intersection of all members containing each subset pattern: the
    /// least upper bound candidate.
    above: Vec<u64>,
}

impl FamilyTables {
    fn new(kind: FamilyKind, n: usize, words: Vec<u64>, blocks: &[u64]) -> Self {
        let full = (1u64 << n) - 1;
        let mut below = vec![0u64; (full + 1) as usize];
        let mut above = vec![full; (full + 1) as usize];
        for w in 0..=full {
            for &m in &words {
                if m & !w == 0 {
                    below[w as usize] |= m;
                }
                if w & !m == 0 {
                    above[w as usize] &= m;
                }
            }
        }
        let algebra = WordAlgebra::new(kind, n, words.clone(), blocks.to_vec());
        FamilyTables {
            words,
            algebra,
            below,
            above,
        }
    }

    fn contains(&self, w: u64) -> bool {
        self.words.binary_search(&w).is_ok()
    }

    fn meet(&self, a: u64, b: u64) -> u64 {
        self.algebra.meet(a, b)
    }
}

struct Suite<'a> {
    space: &'a ApproxSpace,
    universe: Universe,
    n: usize,
    full: u64,
    /// Block bit patterns, input order.
    blocks: Vec<u64>,
    /// Neighborhood bit patterns per element.
    nbhd: Vec<u64>,
    /// fl/xl of every subset, indexed by bit pattern.
    flv: Vec<u64>,
    xlv: Vec<u64>,
    p: FixedPointFamily,
    f: FixedPointFamily,
    pt: FamilyTables,
    ft: FamilyTables,
    reports: Vec<TheoremReport>,
}

impl<'a> Suite<'a> {
    fn new(space: &'a ApproxSpace) -> Self {
        let universe = space.universe().clone();
        let n = universe.size();
        let full = (1u64 << n) - 1;
        let blocks: Vec<u64> = space.covering().blocks().iter().map(word_of).collect();
        let nbhd: Vec<u64> = space.neighborhoods().iter().map(word_of).collect();
        let flv: Vec<u64> = (0..=full).map(|x| fl_word(&blocks, x)).collect();
        let xlv: Vec<u64> = (0..=full).map(|x| xl_word(&nbhd, x)).collect();
        let p = FixedPointFamily::build(space, FamilyKind::NeighborhoodFixedPoints);
        let f = FixedPointFamily::build(space, FamilyKind::CoveringFixedPoints);
        let p_words: Vec<u64> = p.members().iter().map(word_of).collect();
        let f_words: Vec<u64> = f.members().iter().map(word_of).collect();
        let pt = FamilyTables::new(FamilyKind::NeighborhoodFixedPoints, n, p_words, &blocks);
        let ft = FamilyTables::new(FamilyKind::CoveringFixedPoints, n, f_words, &blocks);
        Suite {
            space,
            universe,
            n,
            full,
            blocks,
            nbhd,
            flv,
            xlv,
            p,
            f,
            pt,
            ft,
            reports: Vec::new(),
        }
    }

    fn subset(&self, word: u64) -> Subset {
        self.universe
            .subset_from_bits(Bits::from_word(self.n, word))
    }

    fn witness(&self, note: &str, words: &[u64]) -> Witness {
        Witness {
            note: note.to_string(),
            sets: words.iter().map(|&w| self.subset(w)).collect(),
        }
    }

    fn push(&mut self, id: &'static str, hypothesis_held: bool, failure: Option<Witness>) {
        self.reports.push(TheoremReport {
            id,
            hypothesis_held,
            conclusion_holds: failure.is_none(),
            witness: failure,
        });
    }

    fn push_law(&mut self, id: &'static str, failure: Option<Witness>) {
        self.push(id, true, failure);
    }

    /// Conditional law: when the hypothesis fails the conclusion is
    /// vacuously true and the report records that the branch did not run.
    fn push_conditional(
        &mut self,
        id: &'static str,
        hypothesis: bool,
        failure: impl FnOnce(&Self) -> Option<Witness>,
    ) {
        if hypothesis {
            let f = failure(self);
            self.push(id, true, f);
        } else {
            self.push(id, false, None);
        }
    }

    fn run(mut self) -> Vec<TheoremReport> {
        self.operator_laws();
        self.unary_equivalence();
        self.reduction_laws();
        self.family_construction_laws();
        self.family_lattice_laws();
        self.neighborhood_family_laws();
        self.covering_family_laws();
        self.conditional_laws();
        self.reports
    }

    fn operator_laws(&mut self) {
        let full = self.full;
        let bounds = (self.flv[0] != 0
            || self.xlv[0] != 0
            || self.flv[full as usize] != full
            || self.xlv[full as usize] != full)
            .then(|| self.witness("a lower approximation moves a bound", &[]));
        self.push_law("lower-approx-bounds", bounds);

        let mut contractive = None;
        let mut idempotent = None;
        for x in 0..=full {
            let (fx, xx) = (self.flv[x as usize], self.xlv[x as usize]);
            if contractive.is_none() && (fx & !x != 0 || xx & !x != 0) {
                contractive = Some(self.witness("lower approximation leaves the set", &[x]));
            }
            if idempotent.is_none() && (self.flv[fx as usize] != fx || self.xlv[xx as usize] != xx)
            {
                idempotent = Some(self.witness("lower approximation is not idempotent", &[x]));
            }
        }
        self.push_law("lower-approx-contractive", contractive);
        self.push_law("lower-approx-idempotent", idempotent);

        let mut monotone = None;
        'outer: for y in 0..=full {
            // Proper submasks of y, then the pair (0, y).
            let mut x = y.wrapping_sub(1) & y;
            loop {
                if self.flv[x as usize] & !self.flv[y as usize] != 0
                    || self.xlv[x as usize] & !self.xlv[y as usize] != 0
                {
                    monotone = Some(self.witness("monotonicity fails", &[x, y]));
                    break 'outer;
                }
                if x == 0 {
                    break;
                }
                x = x.wrapping_sub(1) & y;
            }
        }
        self.push_law("lower-approx-monotone", monotone);

        let fixes = self
            .blocks
            .iter()
            .find(|&&k| self.flv[k as usize] != k || self.xlv[k as usize] != k)
            .map(|&k| self.witness("a block is not a fixed point", &[k]));
        self.push_law("lower-approx-fixes-blocks", fixes);
    }

    fn unary_equivalence(&mut self) {
        let unary = self.space.is_unary();
        let decomposes = self.space.intersections_are_block_unions();
        let failure = (unary != decomposes).then(|| {
            self.witness(
                &format!("unary={unary} but block-intersection decomposition={decomposes}"),
                &[],
            )
        });
        self.push_law("unary-iff-block-intersections-decompose", failure);
    }

    fn reduction_laws(&mut self) {
        let blocks = self.space.covering().blocks().to_vec();
        let reducible: Vec<usize> = (0..blocks.len())
            .filter(|&k| block_is_reducible(&blocks, k))
            .collect();

        let mut keeps_covering = None;
        let mut stability = None;
        let mut fl_removal = None;
        let mut f_removal = None;
        for &k in &reducible {
            let rest: Vec<Subset> = blocks
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, b)| b.clone())
                .collect();
            let rest_words: Vec<u64> = rest.iter().map(word_of).collect();

            if keeps_covering.is_none() {
                let union = rest_words.iter().fold(0u64, |acc, &b| acc | b);
                if union != self.full {
                    keeps_covering =
                        Some(self.witness("removal breaks the covering", &[self.blocks[k]]));
                }
            }

            if stability.is_none() {
                for (pos, rest_idx) in (0..blocks.len()).filter(|&i| i != k).enumerate() {
                    let in_full = block_is_reducible(&blocks, rest_idx);
                    let in_rest = block_is_reducible(&rest, pos);
                    if in_full != in_rest {
                        stability = Some(self.witness(
                            "reducibility changes when another reducible block is removed",
                            &[self.blocks[k], self.blocks[rest_idx]],
                        ));
                        break;
                    }
                }
            }

            if fl_removal.is_none() {
                for x in 0..=self.full {
                    if fl_word(&rest_words, x) != self.flv[x as usize] {
                        fl_removal = Some(self.witness(
                            "block lower approximation changes after removal",
                            &[self.blocks[k], x],
                        ));
                        break;
                    }
                }
            }

            if f_removal.is_none() {
                let closed = union_closure(&rest_words);
                if closed != self.ft.words {
                    f_removal = Some(self.witness(
                        "covering fixed points change after removing a reducible block",
                        &[self.blocks[k]],
                    ));
                }
            }
        }
        self.push_law("reducible-removal-preserves-covering", keeps_covering);
        self.push_law("reducibility-stable-under-reducible-removal", stability);
        self.push_law("fl-invariant-under-reducible-removal", fl_removal);
        self.push_law("f-invariant-under-reducible-removal", f_removal);

        let reduct_space = ApproxSpace::new(self.space.reduct().clone());
        let r_blocks: Vec<u64> = reduct_space
            .covering()
            .blocks()
            .iter()
            .map(word_of)
            .collect();
        let r_nbhd: Vec<u64> = reduct_space.neighborhoods().iter().map(word_of).collect();

        let mut fl_reduct = None;
        let mut xl_reduct = None;
        for x in 0..=self.full {
            if fl_reduct.is_none() && fl_word(&r_blocks, x) != self.flv[x as usize] {
                fl_reduct =
                    Some(self.witness("block lower approximation changes under reduction", &[x]));
            }
            if xl_reduct.is_none() && xl_word(&r_nbhd, x) != self.xlv[x as usize] {
                xl_reduct = Some(self.witness(
                    "neighborhood lower approximation changes under reduction",
                    &[x],
                ));
            }
        }
        self.push_law("fl-invariant-under-reduction", fl_reduct);
        self.push_law("xl-invariant-under-reduction", xl_reduct);

        let p_reduct: Vec<u64> =
            FixedPointFamily::build(&reduct_space, FamilyKind::NeighborhoodFixedPoints)
                .members()
                .iter()
                .map(word_of)
                .collect();
        let p_agrees = (p_reduct != self.pt.words)
            .then(|| self.witness("neighborhood fixed points differ from the reduction's", &[]));
        self.push_law("p-of-reduction-agrees", p_agrees);

        let f_reduct: Vec<u64> =
            FixedPointFamily::build(&reduct_space, FamilyKind::CoveringFixedPoints)
                .members()
                .iter()
                .map(word_of)
                .collect();
        let f_agrees = (f_reduct != self.ft.words)
            .then(|| self.witness("covering fixed points differ from the reduction's", &[]));
        self.push_law("f-of-reduction-agrees", f_agrees);
    }

    fn family_construction_laws(&mut self) {
        // Union-closure members must be exactly the operator fixed points.
        let p_scan: Vec<u64> = (0..=self.full)
            .filter(|&x| self.xlv[x as usize] == x)
            .collect();
        let p_strategies = (p_scan != self.pt.words).then(|| {
            self.witness(
                "closure and scan builds of the neighborhood family differ",
                &[],
            )
        });
        self.push_law("p-build-strategies-agree", p_strategies);

        let f_scan: Vec<u64> = (0..=self.full)
            .filter(|&x| self.flv[x as usize] == x)
            .collect();
        let f_strategies = (f_scan != self.ft.words)
            .then(|| self.witness("closure and scan builds of the covering family differ", &[]));
        self.push_law("f-build-strategies-agree", f_strategies);

        // Membership characterization: XL(X) = X iff X is the union of
        // the neighborhoods of its elements.
        let mut membership = None;
        for x in 0..=self.full {
            let union: u64 = iter_bits(x).fold(0, |acc, i| acc | self.nbhd[i]);
            if (self.xlv[x as usize] == x) != (union == x) {
                membership = Some(self.witness(
                    "fixed-point and neighborhood-union characterizations disagree",
                    &[x],
                ));
                break;
            }
        }
        self.push_law("p-membership-characterization", membership);
    }

    fn family_lattice_laws(&mut self) {
        for kind in [
            FamilyKind::NeighborhoodFixedPoints,
            FamilyKind::CoveringFixedPoints,
        ] {
            let (tables, closure_id, order_id, complete_id) = match kind {
                FamilyKind::NeighborhoodFixedPoints => (
                    &self.pt,
                    "p-closed-under-join-and-meet",
                    "p-ops-agree-with-order",
                    "p-complete",
                ),
                FamilyKind::CoveringFixedPoints => (
                    &self.ft,
                    "f-closed-under-join-and-meet",
                    "f-ops-agree-with-order",
                    "f-complete",
                ),
            };

            let mut closed = None;
            'closure: for (i, &a) in tables.words.iter().enumerate() {
                for &b in &tables.words[i..] {
                    if !tables.contains(a | b) || !tables.contains(tables.meet(a, b)) {
                        closed = Some(self.witness("join or meet leaves the family", &[a, b]));
                        break 'closure;
                    }
                }
            }

            // The computed join/meet must be the least upper / greatest
            // lower bound of the inclusion order on the members.
            let mut order = None;
            'order: for (i, &a) in tables.words.iter().enumerate() {
                for &b in &tables.words[i..] {
                    let join = a | b;
                    let meet = tables.meet(a, b);
                    if tables.above[join as usize] != join {
                        order = Some(self.witness("join is not the least upper bound", &[a, b]));
                        break 'order;
                    }
                    if tables.below[(a & b) as usize] != meet {
                        order = Some(self.witness("meet is not the greatest lower bound", &[a, b]));
                        break 'order;
                    }
                }
            }

            let bounded =
                tables.words.first() == Some(&0) && tables.words.last() == Some(&self.full);
            let complete =
                (!(bounded && closed.is_none() && word_subfamily_closed(&tables.algebra)))
                    .then(|| self.witness("family is not closed under arbitrary joins/meets", &[]));

            self.push_law(closure_id, closed);
            self.push_law(order_id, order);
            self.push_law(complete_id, complete);
        }

        // Join-irreducibles by pairwise scan match the one-lower-cover
        // criterion.
        let mut criterion = None;
        for (family, tables) in [(&self.p, &self.pt), (&self.f, &self.ft)] {
            let by_scan: Vec<u64> = family.join_irreducibles().iter().map(word_of).collect();
            let by_covers = cover_irreducibles(&tables.words);
            if by_scan != by_covers {
                criterion = Some(Witness {
                    note: format!(
                        "irreducible scans disagree in the {} family",
                        family.kind().letter()
                    ),
                    sets: Vec::new(),
                });
            }
        }
        self.push_law("join-irreducibles-match-cover-criterion", criterion);
    }

    fn neighborhood_family_laws(&mut self) {
        let distributive = word_distributivity_witness(&self.pt.algebra)
            .map(|w| self.witness("distributivity fails", &w));
        self.push_law("p-distributive", distributive);

        // Closed-form pseudocomplements agree with definitional search.
        let mut formula = None;
        let mut dual_formula = None;
        for &x in &self.pt.words {
            let star = word_pseudocomplement(&self.pt.algebra, x);
            let by_formula = self.xlv[(!x & self.full) as usize];
            if formula.is_none() && star != Some(by_formula) {
                formula = Some(self.witness(
                    "pseudocomplement search and closed form disagree",
                    &[x, by_formula],
                ));
            }
            let plus = word_dual_pseudocomplement(&self.pt.algebra, x);
            let by_dual: u64 = iter_bits(!x & self.full).fold(0, |acc, z| acc | self.nbhd[z]);
            if dual_formula.is_none() && plus != Some(by_dual) {
                dual_formula = Some(self.witness(
                    "dual pseudocomplement search and closed form disagree",
                    &[x, by_dual],
                ));
            }
        }
        self.push_law("p-pseudocomplement-formula", formula);
        self.push_law("p-dual-pseudocomplement-formula", dual_formula);

        let irreducibles = cover_irreducibles(&self.pt.words);
        let nbhd_irred = self
            .nbhd
            .iter()
            .find(|&&nx| !self.pt.contains(nx) || irreducibles.binary_search(&nx).is_err())
            .map(|&nx| self.witness("a neighborhood is not join-irreducible", &[nx]));
        self.push_law("neighborhoods-join-irreducible-in-p", nbhd_irred);
    }

    fn covering_family_laws(&mut self) {
        let member_fail = self
            .blocks
            .iter()
            .find(|&&k| !self.ft.contains(k))
            .map(|&k| self.witness("a block is missing from the covering family", &[k]));
        self.push_law("blocks-belong-to-f", member_fail);

        let irreducibles = cover_irreducibles(&self.ft.words);
        let all_blocks = self.space.covering().blocks().to_vec();
        let mut irred_fail = None;
        let mut red_fail = None;
        for (k, &word) in self.blocks.iter().enumerate() {
            let join_irreducible = irreducibles.binary_search(&word).is_ok();
            if block_is_reducible(&all_blocks, k) {
                if red_fail.is_none() && join_irreducible {
                    red_fail = Some(self.witness("a reducible block is join-irreducible", &[word]));
                }
            } else if irred_fail.is_none() && !join_irreducible {
                irred_fail = Some(self.witness("an irreducible block is join-reducible", &[word]));
            }
        }
        self.push_law("irreducible-blocks-join-irreducible-in-f", irred_fail);
        self.push_law("reducible-blocks-join-reducible-in-f", red_fail);
    }

    fn conditional_laws(&mut self) {
        let unary = self.space.is_unary();

        let f_dist = unary
            .then(|| word_distributivity_witness(&self.ft.algebra))
            .flatten()
            .map(|w| self.witness("distributivity fails under the unary hypothesis", &w));
        self.push_conditional("f-distributive-when-unary", unary, |_| f_dist);

        self.push_conditional("f-intersection-closed-when-unary", unary, |s| {
            for (i, &a) in s.ft.words.iter().enumerate() {
                for &b in &s.ft.words[i..] {
                    if !s.ft.contains(a & b) {
                        return Some(s.witness("an intersection leaves the family", &[a, b]));
                    }
                }
            }
            None
        });

        let reduct_blocks: Vec<u64> = self.space.reduct().blocks().iter().map(word_of).collect();
        self.push_conditional("f-pseudocomplement-formula-when-unary", unary, |s| {
            for &x in &s.ft.words {
                let star = word_pseudocomplement(&s.ft.algebra, x);
                let by_formula = s.flv[(!x & s.full) as usize];
                if star != Some(by_formula) {
                    return Some(s.witness(
                        "pseudocomplement search and closed form disagree",
                        &[x, by_formula],
                    ));
                }
            }
            None
        });
        self.push_conditional("f-dual-pseudocomplement-formula-when-unary", unary, |s| {
            for &x in &s.ft.words {
                let plus = word_dual_pseudocomplement(&s.ft.algebra, x);
                let complement = !x & s.full;
                let by_formula: u64 = reduct_blocks
                    .iter()
                    .filter(|&&k| k & complement != 0)
                    .fold(0, |acc, &k| acc | k);
                if plus != Some(by_formula) {
                    return Some(s.witness(
                        "dual pseudocomplement search and closed form disagree",
                        &[x, by_formula],
                    ));
                }
            }
            None
        });

        let nbhd_partition = self.space.neighborhoods_form_partition();
        let p_report = nbhd_partition.then(|| self.p.classify());
        self.push_conditional(
            "p-boolean-when-neighborhoods-partition",
            nbhd_partition,
            |s| {
                (!p_report.as_ref().unwrap().boolean)
                    .then(|| s.witness("family is not boolean under the partition hypothesis", &[]))
            },
        );
        self.push_conditional(
            "p-double-stone-when-neighborhoods-partition",
            nbhd_partition,
            |s| {
                if !p_report.as_ref().unwrap().double_stone {
                    return Some(s.witness("family is not a double Stone algebra", &[]));
                }
                // Under the hypothesis both pseudocomplements equal the
                // set complement.
                for &x in &s.pt.words {
                    let complement = !x & s.full;
                    let star = s.xlv[complement as usize];
                    let plus: u64 = iter_bits(complement).fold(0, |acc, z| acc | s.nbhd[z]);
                    if star != complement || plus != complement {
                        return Some(
                            s.witness("pseudocomplements differ from the set complement", &[x]),
                        );
                    }
                }
                None
            },
        );

        let reduct_partition = self.space.reduct_is_partition();
        let f_report = reduct_partition.then(|| self.f.classify());
        self.push_conditional("reduct-partition-implies-unary", reduct_partition, |s| {
            (!unary).then(|| s.witness("covering is not unary", &[]))
        });
        self.push_conditional("f-boolean-when-reduct-partition", reduct_partition, |s| {
            (!f_report.as_ref().unwrap().boolean).then(|| {
                s.witness(
                    "family is not boolean under the reduct-partition hypothesis",
                    &[],
                )
            })
        });
        self.push_conditional(
            "f-double-stone-when-reduct-partition",
            reduct_partition,
            |s| {
                (!f_report.as_ref().unwrap().double_stone)
                    .then(|| s.witness("family is not a double Stone algebra", &[]))
            },
        );
    }
}

fn word_of(s: &Subset) -> u64 {
    s.bits()
        .as_word()
        .expect("suite runs on single-word universes")
}

fn xl_word(nbhd: &[u64], x: u64) -> u64 {
    let mut out = 0;
    for (i, &n) in nbhd.iter().enumerate() {
        if n & !x == 0 {
            out |= 1 << i;
        }
    }
    out
}

fn iter_bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

/// Union closure of the generators, including the empty union, sorted.
fn union_closure(generators: &[u64]) -> Vec<u64> {
    let mut closed = std::collections::BTreeSet::new();
    closed.insert(0u64);
    let mut stack = vec![0u64];
    while let Some(m) = stack.pop() {
        for &g in generators {
            let u = m | g;
            if closed.insert(u) {
                stack.push(u);
            }
        }
    }
    closed.into_iter().collect()
}

/// Join-irreducibles by the cover criterion: a member other than the
/// bottom is join-irreducible iff it has exactly one lower cover, i.e.
/// exactly one maximal proper member subset. Returns them sorted.
fn cover_irreducibles(members: &[u64]) -> Vec<u64> {
    let mut by_size_desc: Vec<u64> = members.to_vec();
    by_size_desc.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then_with(|| a.cmp(b)));
    let mut out = Vec::new();
    let mut maximal: Vec<u64> = Vec::new();
    for &a in members {
        if a == 0 {
            continue;
        }
        maximal.clear();
        for &b in &by_size_desc {
            if b & !a == 0 && b != a && !maximal.iter().any(|&c| b & !c == 0) {
                maximal.push(b);
                if maximal.len() > 1 {
                    break;
                }
            }
        }
        if maximal.len() == 1 {
            out.push(a);
        }
    }
    out
}
