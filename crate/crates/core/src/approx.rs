//! The four approximation operators: block-based FL/FH and
//! neighborhood-based XL/XH.

use crate::bits::Bits;
use crate::covering::ApproxSpace;
use crate::error::Error;
use crate::set::Subset;

impl ApproxSpace {
    /// FL(X): the union of all blocks contained in X. Always ⊆ X.
    pub fn fl(&self, x: &Subset) -> Result<Subset, Error> {
        self.check_subset(x)?;
        Ok(self.universe().subset_from_bits(fl_bits(
            &block_bits(self),
            x.bits(),
            self.universe().size(),
        )))
    }

    /// FH(X): the union of all blocks meeting X.
    pub fn fh(&self, x: &Subset) -> Result<Subset, Error> {
        self.check_subset(x)?;
        let mut out = self.universe().empty_subset();
        for block in self.covering().blocks() {
            if block.intersects(x) {
                out = out.union(block);
            }
        }
        Ok(out)
    }

    /// XL(X): the elements whose neighborhood is contained in X.
    /// Always ⊆ X, because x ∈ N(x).
    pub fn xl(&self, x: &Subset) -> Result<Subset, Error> {
        self.check_subset(x)?;
        let nbhd = neighborhood_bits(self);
        Ok(self
            .universe()
            .subset_from_bits(xl_bits(&nbhd, x.bits(), self.universe().size())))
    }

    /// XH(X): the elements whose neighborhood meets X.
    pub fn xh(&self, x: &Subset) -> Result<Subset, Error> {
        self.check_subset(x)?;
        let mut out = self.universe().empty_subset();
        for (i, n) in self.neighborhoods().iter().enumerate() {
            if n.intersects(x) {
                out = out.union(&self.universe().singleton(i)?);
            }
        }
        Ok(out)
    }
}

pub(crate) fn block_bits(space: &ApproxSpace) -> Vec<Bits> {
    space
        .covering()
        .blocks()
        .iter()
        .map(|b| b.bits().clone())
        .collect()
}

pub(crate) fn neighborhood_bits(space: &ApproxSpace) -> Vec<Bits> {
    space
        .neighborhoods()
        .iter()
        .map(|n| n.bits().clone())
        .collect()
}

/// FL on raw bits; the hot path for lattice scans.
pub(crate) fn fl_bits(blocks: &[Bits], x: &Bits, len: usize) -> Bits {
    let mut out = Bits::zero(len);
    for b in blocks {
        if b.is_subset(x) {
            out = out.union(b);
        }
    }
    out
}

/// XL on raw bits.
pub(crate) fn xl_bits(neighborhoods: &[Bits], x: &Bits, len: usize) -> Bits {
    let mut out = Bits::zero(len);
    for (i, n) in neighborhoods.iter().enumerate() {
        if n.is_subset(x) {
            out.set(i);
        }
    }
    debug_assert!(out.is_subset(x));
    out
}
