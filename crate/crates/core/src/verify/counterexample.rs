//! Registered structural predicates and a first-failure search over
//! covering generators; re-discovers the small counterexamples.

use crate::classify::{AlgebraObstruction, ClassificationReport};
use crate::covering::{ApproxSpace, Covering};
use crate::error::Error;
use crate::family::{FamilyKind, FixedPointFamily};
use crate::verify::generate::{
    enumerate_coverings_capped, enumerate_partitions, random_covering, ENUM_HARD_CAP,
};
use crate::verify::suite::Witness;

/// How to generate candidate coverings, in a deterministic order.
#[derive(Clone, Debug)]
pub enum GeneratorConfig {
    /// Every covering of an n-element universe, optionally truncated.
    Exhaustive { n: usize, limit: Option<usize> },
    /// Seeded random coverings: seeds seed, seed+1, ..., seed+trials-1.
    Random {
        n: usize,
        density: f64,
        seed: u64,
        trials: u64,
    },
    /// Only partitions of the n-element universe.
    ExhaustivePartitions { n: usize },
}

/// A covering on which a predicate failed, plus the concrete failure.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub covering: Covering,
    pub witness: Witness,
}

const PREDICATES: &[&str] = &[
    "P-distributive",
    "P-complemented",
    "P-boolean",
    "P-stone",
    "P-dual-stone",
    "P-double-stone",
    "F-distributive",
    "F-complemented",
    "F-boolean",
    "F-pseudocomplemented",
    "F-dual-pseudocomplemented",
    "F-stone",
    "F-dual-stone",
    "F-double-stone",
];

/// The registered predicate names accepted by [`find_counterexample`].
pub fn predicate_ids() -> &'static [&'static str] {
    PREDICATES
}

fn parse_predicate(id: &str) -> Result<(FamilyKind, &str), Error> {
    let (kind, flag) = match id.split_once('-') {
        Some(("P", flag)) => (FamilyKind::NeighborhoodFixedPoints, flag),
        Some(("F", flag)) => (FamilyKind::CoveringFixedPoints, flag),
        _ => {
            return Err(Error::UnknownPredicate {
                name: id.to_string(),
            })
        }
    };
    if !PREDICATES.contains(&id) {
        return Err(Error::UnknownPredicate {
            name: id.to_string(),
        });
    }
    Ok((kind, flag))
}

/// Evaluates a registered predicate on one space.
pub fn predicate_holds(id: &str, space: &ApproxSpace) -> Result<bool, Error> {
    Ok(evaluate(id, space)?.is_none())
}

/// Evaluates the predicate, returning the witness when it fails.
pub fn predicate_witness(id: &str, space: &ApproxSpace) -> Result<Option<Witness>, Error> {
    evaluate(id, space)
}

fn evaluate(id: &str, space: &ApproxSpace) -> Result<Option<Witness>, Error> {
    let (kind, flag) = parse_predicate(id)?;
    let family = FixedPointFamily::build(space, kind);
    let report = family.classify();
    Ok(flag_failure(&report, flag))
}

fn obstruction_witness(note: &str, obstruction: &AlgebraObstruction) -> Witness {
    let sets = match obstruction {
        AlgebraObstruction::NotDistributive(t) => t.to_vec(),
        AlgebraObstruction::NoPseudocomplement(x) => vec![x.clone()],
        AlgebraObstruction::IdentityFails(x) => vec![x.clone()],
    };
    Witness {
        note: format!("{note}: {obstruction}"),
        sets,
    }
}

fn flag_failure(report: &ClassificationReport, flag: &str) -> Option<Witness> {
    match flag {
        "distributive" => report.distributivity_witness.as_ref().map(|t| Witness {
            note: "distributivity fails".into(),
            sets: t.to_vec(),
        }),
        "complemented" => report.complemented_witness.as_ref().map(|w| Witness {
            note: "member without a complement".into(),
            sets: vec![w.clone()],
        }),
        "boolean" => (!report.boolean).then(|| {
            report
                .complemented_witness
                .as_ref()
                .map(|w| Witness {
                    note: "member without a complement".into(),
                    sets: vec![w.clone()],
                })
                .or_else(|| {
                    report.distributivity_witness.as_ref().map(|t| Witness {
                        note: "distributivity fails".into(),
                        sets: t.to_vec(),
                    })
                })
                .expect("a non-boolean report carries a witness")
        }),
        "pseudocomplemented" => (!report.pseudocomplemented).then(|| Witness {
            note: "not every member has a pseudocomplement".into(),
            sets: Vec::new(),
        }),
        "dual-pseudocomplemented" => (!report.dual_pseudocomplemented).then(|| Witness {
            note: "not every member has a dual pseudocomplement".into(),
            sets: Vec::new(),
        }),
        "stone" => report
            .stone_witness
            .as_ref()
            .map(|o| obstruction_witness("stone identity obstruction", o)),
        "dual-stone" => report
            .dual_stone_witness
            .as_ref()
            .map(|o| obstruction_witness("dual stone identity obstruction", o)),
        "double-stone" => (!report.double_stone).then(|| {
            report
                .stone_witness
                .as_ref()
                .map(|o| obstruction_witness("stone identity obstruction", o))
                .or_else(|| {
                    report
                        .dual_stone_witness
                        .as_ref()
                        .map(|o| obstruction_witness("dual stone identity obstruction", o))
                })
                .expect("a non-double-stone report carries a witness")
        }),
        _ => unreachable!("parse_predicate filtered the flag"),
    }
}

/// Walks the generator in order and returns the first covering where
/// the predicate fails, with the failing witness; None when the whole
/// budget passes.
pub fn find_counterexample(
    id: &str,
    config: &GeneratorConfig,
) -> Result<Option<Counterexample>, Error> {
    parse_predicate(id)?;
    let check = |covering: Covering| -> Option<Counterexample> {
        let space = ApproxSpace::new(covering.clone());
        evaluate(id, &space)
            .expect("predicate id already validated")
            .map(|witness| Counterexample { covering, witness })
    };
    match config {
        GeneratorConfig::Exhaustive { n, limit } => {
            for covering in enumerate_coverings_capped(*n, *limit, ENUM_HARD_CAP)? {
                if let Some(found) = check(covering) {
                    return Ok(Some(found));
                }
            }
            Ok(None)
        }
        GeneratorConfig::Random {
            n,
            density,
            seed,
            trials,
        } => {
            for s in *seed..seed.saturating_add(*trials) {
                if let Some(found) = check(random_covering(*n, *density, s)) {
                    return Ok(Some(found));
                }
            }
            Ok(None)
        }
        GeneratorConfig::ExhaustivePartitions { n } => {
            for covering in enumerate_partitions(*n) {
                if let Some(found) = check(covering) {
                    return Ok(Some(found));
                }
            }
            Ok(None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_predicates() {
        let cfg = GeneratorConfig::Exhaustive { n: 2, limit: None };
        assert!(matches!(
            find_counterexample("P-frobnicated", &cfg),
            Err(Error::UnknownPredicate { .. })
        ));
        assert!(matches!(
            find_counterexample("Q-stone", &cfg),
            Err(Error::UnknownPredicate { .. })
        ));
    }

    #[test]
    fn neighborhood_family_is_always_distributive_at_small_sizes() {
        for n in [1, 2, 3] {
            let cfg = GeneratorConfig::Exhaustive { n, limit: None };
            assert!(find_counterexample("P-distributive", &cfg)
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn no_stone_failure_exists_on_two_elements() {
        let cfg = GeneratorConfig::Exhaustive { n: 2, limit: None };
        assert!(find_counterexample("P-stone", &cfg).unwrap().is_none());
        assert!(find_counterexample("F-distributive", &cfg)
            .unwrap()
            .is_none());
    }

    #[test]
    fn partition_generator_never_breaks_booleanness() {
        for n in [1, 2, 3, 4] {
            let cfg = GeneratorConfig::ExhaustivePartitions { n };
            assert!(find_counterexample("P-boolean", &cfg).unwrap().is_none());
            assert!(find_counterexample("F-double-stone", &cfg)
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn complement_failures_exist_already_on_two_elements() {
        // {{1},{1,2}} has P = {∅,{1},U}; the middle member has no
        // complement.
        let cfg = GeneratorConfig::Exhaustive { n: 2, limit: None };
        let found = find_counterexample("P-complemented", &cfg)
            .unwrap()
            .unwrap();
        let space = ApproxSpace::new(found.covering.clone());
        assert!(!predicate_holds("P-complemented", &space).unwrap());
        assert_eq!(found.witness.sets.len(), 1);
    }
}
