//! Deterministic covering generators: exhaustive enumeration over small
//! universes, seeded random coverings, and set-partition enumeration.

use crate::bits::Bits;
use crate::covering::Covering;
use crate::error::Error;
use crate::set::Universe;

/// Default universe-size cap for exhaustive covering enumeration.
pub const ENUM_DEFAULT_CAP: usize = 4;

/// Beyond this the candidate space (2^(2^n - 1) families) is hopeless.
pub const ENUM_HARD_CAP: usize = 5;

/// Every family of distinct nonempty subsets of an n-element universe
/// whose union is the universe, each exactly once, in ascending order
/// of the family selection mask. Blocks inside one covering come in
/// canonical bit order.
pub fn enumerate_coverings(
    n: usize,
    limit: Option<usize>,
) -> Result<impl Iterator<Item = Covering>, Error> {
    enumerate_coverings_capped(n, limit, ENUM_DEFAULT_CAP)
}

pub fn enumerate_coverings_capped(
    n: usize,
    limit: Option<usize>,
    cap: usize,
) -> Result<impl Iterator<Item = Covering>, Error> {
    if n == 0 {
        return Err(Error::InvalidUniverse {
            reason: "a universe needs at least one element".into(),
        });
    }
    let cap = cap.min(ENUM_HARD_CAP);
    if n > cap {
        return Err(Error::SizeLimit { size: n, cap });
    }
    let universe = Universe::of_size(n);
    let end = family_mask_end(n);
    let max = limit.unwrap_or(usize::MAX);
    Ok((1..end)
        .filter_map(move |mask| covering_from_mask(&universe, n, mask))
        .take(max))
}

/// The exclusive upper bound of the family-selection mask space:
/// 2^(number of nonempty subsets).
pub(crate) fn family_mask_end(n: usize) -> u64 {
    1u64 << ((1usize << n) - 1)
}

/// Decodes a family-selection mask: bit i of the mask selects the
/// nonempty subset with bit pattern i + 1. Returns None when the
/// selected family does not cover the universe.
pub(crate) fn covering_from_mask(universe: &Universe, n: usize, mask: u64) -> Option<Covering> {
    let full = (1u64 << n) - 1;
    let mut union = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as u64;
        union |= i + 1;
        rest &= rest - 1;
    }
    if union != full {
        return None;
    }
    let mut blocks = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as u64;
        blocks.push(universe.subset_from_bits(Bits::from_word(n, i + 1)));
        rest &= rest - 1;
    }
    Some(
        Covering::new(universe.clone(), blocks)
            .expect("mask decoding yields distinct nonempty covering blocks"),
    )
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A valid covering drawn deterministically from (n, density, seed):
/// every nonempty subset is included independently with the given
/// probability, then any uncovered element is patched with its
/// singleton block, in index order. Identical arguments always produce
/// the identical covering.
pub fn random_covering(n: usize, density: f64, seed: u64) -> Covering {
    assert!(n >= 1, "a universe needs at least one element");
    assert!(n <= 24, "random coverings are generated on small universes");
    assert!(
        density > 0.0 && density < 1.0,
        "density must lie strictly between 0 and 1"
    );
    let universe = Universe::of_size(n);
    let threshold = (density * u64::MAX as f64) as u64;
    let mut state = seed;
    let mut blocks = Vec::new();
    let mut union = 0u64;
    for pattern in 1..(1u64 << n) {
        if splitmix64(&mut state) < threshold {
            blocks.push(universe.subset_from_bits(Bits::from_word(n, pattern)));
            union |= pattern;
        }
    }
    for i in 0..n {
        if union >> i & 1 == 0 {
            blocks.push(universe.subset_from_bits(Bits::from_word(n, 1 << i)));
        }
    }
    Covering::new(universe, blocks).expect("patched random families are valid coverings")
}

/// Every set partition of an n-element universe as a covering, in
/// lexicographic order of the restricted growth string.
pub fn enumerate_partitions(n: usize) -> Vec<Covering> {
    assert!((1..=10).contains(&n));
    let universe = Universe::of_size(n);
    let mut rgs = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        let class_count = rgs.iter().max().unwrap() + 1;
        let mut classes = vec![Vec::new(); class_count];
        for (elem, &class) in rgs.iter().enumerate() {
            classes[class].push(elem);
        }
        let blocks = classes
            .iter()
            .map(|idxs| universe.subset_from_indices(idxs.iter().copied()).unwrap())
            .collect();
        out.push(Covering::new(universe.clone(), blocks).unwrap());

        // Next restricted growth string: a[i] may rise to max(prefix)+1.
        let mut i = n;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().max().copied().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for slot in rgs.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_element_universe_has_one_covering() {
        let all: Vec<Covering> = enumerate_coverings(1, None).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_string(), "{{1}}");
    }

    #[test]
    fn two_element_universe_has_five_coverings() {
        let all: Vec<Covering> = enumerate_coverings(2, None).unwrap().collect();
        assert_eq!(all.len(), 5);
    }

    /// Independent oracle for the covering count: by inclusion and
    /// exclusion over the elements forced to stay uncovered, the number
    /// of coverings of an n-universe is
    /// Σ_k (-1)^k C(n,k) 2^(2^(n-k) - 1).
    fn covering_count_oracle(n: usize) -> i64 {
        fn binom(n: usize, k: usize) -> i64 {
            (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
        }
        (0..=n)
            .map(|k| {
                let families = 1i64 << ((1usize << (n - k)) - 1);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                sign * binom(n, k) * families
            })
            .sum()
    }

    #[test]
    fn three_element_count_matches_the_frozen_golden_value() {
        let count = enumerate_coverings(3, None).unwrap().count();
        assert_eq!(count, 109);
        assert_eq!(covering_count_oracle(3), 109);
        assert_eq!(covering_count_oracle(2), 5);
        assert_eq!(covering_count_oracle(1), 1);
        assert_eq!(covering_count_oracle(4), 32297);
    }

    #[test]
    fn enumeration_respects_limit_and_cap() {
        let some: Vec<Covering> = enumerate_coverings(3, Some(7)).unwrap().collect();
        assert_eq!(some.len(), 7);
        assert!(matches!(
            enumerate_coverings(99, None).map(|_| ()),
            Err(Error::SizeLimit { size: 99, .. })
        ));
        assert!(enumerate_coverings(0, None).map(|_| ()).is_err());
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let mut seen = std::collections::BTreeSet::new();
        for c in enumerate_coverings(3, None).unwrap() {
            let key: Vec<String> = c.canonical_blocks().iter().map(|b| b.to_string()).collect();
            assert!(seen.insert(key));
        }
    }

    #[test]
    fn enumeration_is_complete_under_a_permuted_subset_order() {
        // Re-enumerate with the nonempty-subset indexing reversed; the
        // same covering set must come out, up to block reordering.
        let n = 3usize;
        let full = (1u64 << n) - 1;
        let canonical = |c: &Covering| {
            c.canonical_blocks()
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
        };
        let straight: std::collections::BTreeSet<Vec<String>> = enumerate_coverings(n, None)
            .unwrap()
            .map(|c| canonical(&c))
            .collect();

        let universe = crate::set::Universe::of_size(n);
        let mut permuted = std::collections::BTreeSet::new();
        for mask in 1..family_mask_end(n) {
            let mut union = 0u64;
            let mut patterns = Vec::new();
            for i in 0..(1u64 << n) - 1 {
                if mask >> i & 1 == 1 {
                    let pattern = full - i; // reversed subset indexing
                    union |= pattern;
                    patterns.push(pattern);
                }
            }
            if union == full {
                let blocks = patterns
                    .iter()
                    .map(|&p| universe.subset_from_bits(crate::bits::Bits::from_word(n, p)))
                    .collect();
                let covering = Covering::new(universe.clone(), blocks).unwrap();
                permuted.insert(canonical(&covering));
            }
        }
        assert_eq!(straight, permuted);
    }

    #[test]
    fn random_coverings_are_deterministic_and_valid() {
        for seed in [1u64, 2, 77, 1000] {
            let a = random_covering(8, 0.05, seed);
            let b = random_covering(8, 0.05, seed);
            assert_eq!(a, b);
            assert_eq!(a.blocks(), b.blocks());
        }
        assert_ne!(random_covering(8, 0.05, 1), random_covering(8, 0.05, 2));
    }

    #[test]
    fn patching_covers_sparse_draws() {
        // Tiny density forces the singleton patch path.
        let c = random_covering(6, 0.001, 42);
        assert!(!c.is_empty());
    }

    #[test]
    fn partition_enumeration_counts_are_bell_numbers() {
        assert_eq!(enumerate_partitions(1).len(), 1);
        assert_eq!(enumerate_partitions(2).len(), 2);
        assert_eq!(enumerate_partitions(3).len(), 5);
        assert_eq!(enumerate_partitions(4).len(), 15);
        for p in enumerate_partitions(4) {
            assert!(p.is_partition());
        }
    }
}
