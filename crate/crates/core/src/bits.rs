//! Raw bit-vector storage behind [`crate::Subset`].
//!
//! Universes of up to 64 elements use a single machine word; larger
//! universes fall back to a boxed word slice with the same semantics.
//! Trailing bits past the universe size are kept at zero so that
//! equality, ordering and hashing can work on raw words.

use std::cmp::Ordering;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) enum Bits {
    Word(u64),
    Wide(Box<[u64]>),
}

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

fn tail_mask(len: usize) -> u64 {
    let rem = len % WORD_BITS;
    if rem == 0 {
        u64::MAX
    } else {
        (1u64 << rem) - 1
    }
}

impl Bits {
    pub fn zero(len: usize) -> Self {
        if len <= WORD_BITS {
            Bits::Word(0)
        } else {
            Bits::Wide(vec![0; word_count(len)].into_boxed_slice())
        }
    }

    pub fn full(len: usize) -> Self {
        if len <= WORD_BITS {
            Bits::Word(tail_mask(len))
        } else {
            let mut words = vec![u64::MAX; word_count(len)];
            *words.last_mut().unwrap() = tail_mask(len);
            Bits::Wide(words.into_boxed_slice())
        }
    }

    pub fn get(&self, i: usize) -> bool {
        match self {
            Bits::Word(w) => i < WORD_BITS && (w >> i) & 1 == 1,
            Bits::Wide(ws) => (ws[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1,
        }
    }

    pub fn set(&mut self, i: usize) {
        match self {
            Bits::Word(w) => {
                debug_assert!(i < WORD_BITS);
                *w |= 1 << i;
            }
            Bits::Wide(ws) => ws[i / WORD_BITS] |= 1 << (i % WORD_BITS),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Bits::Word(w) => *w == 0,
            Bits::Wide(ws) => ws.iter().all(|w| *w == 0),
        }
    }

    pub fn count_ones(&self) -> usize {
        match self {
            Bits::Word(w) => w.count_ones() as usize,
            Bits::Wide(ws) => ws.iter().map(|w| w.count_ones() as usize).sum(),
        }
    }

    fn zip(&self, other: &Bits, f: impl Fn(u64, u64) -> u64) -> Bits {
        match (self, other) {
            (Bits::Word(a), Bits::Word(b)) => Bits::Word(f(*a, *b)),
            (Bits::Wide(a), Bits::Wide(b)) => {
                debug_assert_eq!(a.len(), b.len());
                Bits::Wide(a.iter().zip(b.iter()).map(|(x, y)| f(*x, *y)).collect())
            }
            _ => unreachable!("mixed bit representations for one universe"),
        }
    }

    pub fn union(&self, other: &Bits) -> Bits {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Bits) -> Bits {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Bits) -> Bits {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self, len: usize) -> Bits {
        match self {
            Bits::Word(w) => Bits::Word(!w & tail_mask(len)),
            Bits::Wide(ws) => {
                let mut out: Vec<u64> = ws.iter().map(|w| !w).collect();
                *out.last_mut().unwrap() &= tail_mask(len);
                Bits::Wide(out.into_boxed_slice())
            }
        }
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        match (self, other) {
            (Bits::Word(a), Bits::Word(b)) => a & !b == 0,
            (Bits::Wide(a), Bits::Wide(b)) => a.iter().zip(b.iter()).all(|(x, y)| x & !y == 0),
            _ => unreachable!("mixed bit representations for one universe"),
        }
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        match (self, other) {
            (Bits::Word(a), Bits::Word(b)) => a & b != 0,
            (Bits::Wide(a), Bits::Wide(b)) => a.iter().zip(b.iter()).any(|(x, y)| x & y != 0),
            _ => unreachable!("mixed bit representations for one universe"),
        }
    }

    /// Numeric ordering on the bit pattern; the canonical member order.
    pub fn value_cmp(&self, other: &Bits) -> Ordering {
        match (self, other) {
            (Bits::Word(a), Bits::Word(b)) => a.cmp(b),
            (Bits::Wide(a), Bits::Wide(b)) => {
                debug_assert_eq!(a.len(), b.len());
                a.iter().rev().cmp(b.iter().rev())
            }
            (Bits::Word(_), Bits::Wide(_)) => Ordering::Less,
            (Bits::Wide(_), Bits::Word(_)) => Ordering::Greater,
        }
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        let words: &[u64] = match self {
            Bits::Word(w) => std::slice::from_ref(w),
            Bits::Wide(ws) => ws,
        };
        words.iter().enumerate().flat_map(|(wi, w)| {
            let mut rest = *w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD_BITS + bit)
                }
            })
        })
    }

    /// The raw word when the universe fits in one, used by fast scans.
    pub fn as_word(&self) -> Option<u64> {
        match self {
            Bits::Word(w) => Some(*w),
            Bits::Wide(_) => None,
        }
    }

    pub fn from_word(len: usize, word: u64) -> Bits {
        debug_assert!(len <= WORD_BITS);
        debug_assert_eq!(word & !tail_mask(len), 0);
        Bits::Word(word)
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bits {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value_cmp(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_complement_keeps_tail_clear() {
        let len = 70;
        let full = Bits::full(len);
        assert_eq!(full.count_ones(), len);
        assert_eq!(full.complement(len), Bits::zero(len));
        let mut one = Bits::zero(len);
        one.set(69);
        assert!(one.get(69));
        assert_eq!(one.complement(len).count_ones(), 69);
    }

    #[test]
    fn value_order_matches_numeric_order() {
        let mk = |word: u64| Bits::from_word(4, word);
        let mut v = vec![mk(13), mk(0), mk(7), mk(5)];
        v.sort();
        assert_eq!(v, vec![mk(0), mk(5), mk(7), mk(13)]);
    }

    #[test]
    fn iter_ones_walks_every_word() {
        let mut b = Bits::zero(130);
        for i in [0, 63, 64, 101, 129] {
            b.set(i);
        }
        let got: Vec<usize> = b.iter_ones().collect();
        assert_eq!(got, vec![0, 63, 64, 101, 129]);
    }
}
