//! Finite universes and bit-vector subsets, the carrier of everything else.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::bits::Bits;
use crate::error::Error;

/// An indexed finite ground set. Indices are canonical; labels are
/// presentation only.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

struct UniverseInner {
    labels: Vec<String>,
}

impl Universe {
    /// A universe with the given element labels, which must be nonempty
    /// and pairwise distinct.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, Error> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidUniverse {
                reason: "a universe needs at least one element".into(),
            });
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::InvalidUniverse {
                    reason: format!("duplicate element label {a:?}"),
                });
            }
        }
        Ok(Universe {
            inner: Arc::new(UniverseInner { labels }),
        })
    }

    /// The universe {1, 2, ..., n}.
    pub fn of_size(n: usize) -> Self {
        assert!(n >= 1, "a universe needs at least one element");
        Universe::new((1..=n).map(|i| i.to_string())).unwrap()
    }

    pub fn size(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.inner.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.labels.iter().position(|l| l == label)
    }

    pub fn empty_subset(&self) -> Subset {
        Subset {
            universe: self.clone(),
            bits: Bits::zero(self.size()),
        }
    }

    pub fn full_subset(&self) -> Subset {
        Subset {
            universe: self.clone(),
            bits: Bits::full(self.size()),
        }
    }

    pub fn singleton(&self, index: usize) -> Result<Subset, Error> {
        self.subset_from_indices([index])
    }

    pub fn subset_from_indices(
        &self,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Subset, Error> {
        let mut bits = Bits::zero(self.size());
        for i in indices {
            if i >= self.size() {
                return Err(Error::UnknownElement {
                    name: format!("#{i}"),
                });
            }
            bits.set(i);
        }
        Ok(Subset {
            universe: self.clone(),
            bits,
        })
    }

    pub fn subset_from_labels<'a>(
        &self,
        labels: impl IntoIterator<Item = &'a str>,
    ) -> Result<Subset, Error> {
        let mut bits = Bits::zero(self.size());
        for label in labels {
            match self.index_of(label) {
                Some(i) => bits.set(i),
                None => {
                    return Err(Error::UnknownElement {
                        name: label.to_string(),
                    })
                }
            }
        }
        Ok(Subset {
            universe: self.clone(),
            bits,
        })
    }

    /// All 2^n subsets in canonical bit order. Only for universes that
    /// fit in one word; callers gate the size.
    pub(crate) fn iter_all_subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        assert!(self.size() <= 64);
        let n = self.size();
        (0u64..(1u64 << n)).map(move |pattern| Subset {
            universe: self.clone(),
            bits: Bits::from_word(n, pattern),
        })
    }

    pub(crate) fn subset_from_bits(&self, bits: Bits) -> Subset {
        Subset {
            universe: self.clone(),
            bits,
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe({})", self.inner.labels.join(","))
    }
}

/// A subset of a [`Universe`], stored as a bit vector.
///
/// Set operations are only defined between subsets of the same universe
/// and panic otherwise; fallible entry points validate before calling
/// them.
#[derive(Clone)]
pub struct Subset {
    universe: Universe,
    bits: Bits,
}

impl Subset {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe.size() && self.bits.get(index)
    }

    fn check_same_universe(&self, other: &Subset) {
        assert!(
            self.universe == other.universe,
            "set operation between subsets of different universes"
        );
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.check_same_universe(other);
        Subset {
            universe: self.universe.clone(),
            bits: self.bits.union(&other.bits),
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.check_same_universe(other);
        Subset {
            universe: self.universe.clone(),
            bits: self.bits.intersection(&other.bits),
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.check_same_universe(other);
        Subset {
            universe: self.universe.clone(),
            bits: self.bits.difference(&other.bits),
        }
    }

    /// U \ X.
    pub fn complement(&self) -> Subset {
        Subset {
            universe: self.universe.clone(),
            bits: self.bits.complement(self.universe.size()),
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.check_same_universe(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_proper_subset_of(&self, other: &Subset) -> bool {
        self.is_subset_of(other) && self.bits != other.bits
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        self.check_same_universe(other);
        self.bits.intersects(&other.bits)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    /// Element labels, ordered by universe index.
    pub fn label_vec(&self) -> Vec<String> {
        self.indices()
            .map(|i| self.universe.label(i).to_string())
            .collect()
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.bits == other.bits
    }
}

impl Eq for Subset {}

impl Hash for Subset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.universe.size().hash(state);
        self.bits.hash(state);
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    /// Canonical bit order: by universe size, then numeric bit pattern.
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .size()
            .cmp(&other.universe.size())
            .then_with(|| self.bits.value_cmp(&other.bits))
    }
}

impl fmt::Display for Subset {
    /// Canonical rendering: `{a,b,c}`, elements in universe index order,
    /// no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.universe.label(i))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u4() -> Universe {
        Universe::of_size(4)
    }

    #[test]
    fn complement_picks_out_the_missing_elements() {
        let u = u4();
        let x = u.subset_from_labels(["2", "3"]).unwrap();
        assert_eq!(x.complement().to_string(), "{1,4}");
        assert_eq!(x.complement().complement(), x);
    }

    #[test]
    fn complement_of_bounds() {
        let u = u4();
        assert_eq!(u.empty_subset().complement(), u.full_subset());
        assert_eq!(u.full_subset().complement(), u.empty_subset());
    }

    #[test]
    fn rejects_unknown_labels_and_indices() {
        let u = u4();
        assert_eq!(
            u.subset_from_labels(["5"]),
            Err(Error::UnknownElement { name: "5".into() })
        );
        assert!(u.subset_from_indices([4]).is_err());
    }

    #[test]
    fn universe_needs_distinct_labels() {
        assert!(Universe::new(["a", "a"]).is_err());
        assert!(Universe::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn display_is_sorted_by_index() {
        let u = u4();
        let x = u.subset_from_indices([3, 0, 2]).unwrap();
        assert_eq!(x.to_string(), "{1,3,4}");
        assert_eq!(u.empty_subset().to_string(), "{}");
    }

    #[test]
    fn subset_order_is_bit_pattern_order() {
        let u = u4();
        let mut v = [
            u.subset_from_indices([0, 2, 3]).unwrap(), // 0b1101 = 13
            u.subset_from_indices([0, 1, 2]).unwrap(), // 0b0111 = 7
            u.empty_subset(),
            u.subset_from_indices([2]).unwrap(), // 4
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, vec!["{}", "{3}", "{1,2,3}", "{1,3,4}"]);
    }

    #[test]
    fn wide_universe_has_same_semantics() {
        let u = Universe::of_size(70);
        let a = u.subset_from_indices([0, 63, 64, 69]).unwrap();
        let b = u.subset_from_indices([63, 64]).unwrap();
        assert!(b.is_subset_of(&a));
        assert_eq!(a.intersection(&b), b);
        assert_eq!(a.union(&b), a);
        assert_eq!(a.difference(&b).len(), 2);
        assert_eq!(a.complement().len(), 66);
        assert_eq!(a.complement().complement(), a);
    }

    #[test]
    #[should_panic(expected = "different universes")]
    fn cross_universe_ops_panic() {
        let a = Universe::of_size(3).empty_subset();
        let b = Universe::of_size(4).empty_subset();
        let _ = a.union(&b);
    }
}
