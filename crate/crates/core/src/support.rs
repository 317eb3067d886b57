//! The support poset: closed subsets with quasi-compact complement, ordered by
//! inclusion.
//!
//! Each element stands for a principal thick subcategory `⟨C⟩`, identified
//! with the support of its generator. Generation order is modelled as
//! inclusion of supports.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::mask::SubsetMask;
use crate::topology::FiniteSpace;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SupportError {
    #[error("{0:?} is not an element of the support poset")]
    ElementNotInPoset(SubsetMask),
    #[error("closed set belongs to a different space")]
    ForeignSpace,
    #[error("{0:?} is not closed")]
    NotClosed(SubsetMask),
    #[error("complement of {0:?} is not quasi-compact")]
    NotQuasiCompact(SubsetMask),
}

/// A closed subset of a particular space whose complement is quasi-compact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedSet {
    mask: SubsetMask,
    space: Arc<FiniteSpace>,
}

impl ClosedSet {
    pub fn new(space: Arc<FiniteSpace>, mask: SubsetMask) -> Result<Self, SupportError> {
        if !space.is_closed(mask) {
            return Err(SupportError::NotClosed(mask));
        }
        if !space.is_quasi_compact(mask.complement(space.len())) {
            return Err(SupportError::NotQuasiCompact(mask));
        }
        Ok(ClosedSet { mask, space })
    }

    pub fn mask(&self) -> SubsetMask {
        self.mask
    }

    pub fn space(&self) -> &Arc<FiniteSpace> {
        &self.space
    }
}

/// All closed sets with quasi-compact complement, in ascending mask order,
/// with the inclusion relation materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportPoset {
    space: Arc<FiniteSpace>,
    elements: Vec<SubsetMask>,
    leq: Vec<bool>,
}

/// Builds the support poset of `x`.
pub fn thomason_supports(x: &FiniteSpace) -> SupportPoset {
    SupportPoset::new(Arc::new(x.clone()))
}

impl SupportPoset {
    pub fn new(space: Arc<FiniteSpace>) -> Self {
        let n = space.len();
        let mut elements: Vec<SubsetMask> = space
            .closed_sets()
            .into_iter()
            .filter(|z| space.is_quasi_compact(z.complement(n)))
            .collect();
        elements.sort_unstable();
        let k = elements.len();
        let mut leq = vec![false; k * k];
        for (a, za) in elements.iter().enumerate() {
            for (b, zb) in elements.iter().enumerate() {
                leq[a * k + b] = za.is_subset_of(*zb);
            }
        }
        SupportPoset {
            space,
            elements,
            leq,
        }
    }

    pub fn space(&self) -> &Arc<FiniteSpace> {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SubsetMask] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> SubsetMask {
        self.elements[i]
    }

    pub fn closed_set(&self, i: usize) -> ClosedSet {
        ClosedSet {
            mask: self.elements[i],
            space: self.space.clone(),
        }
    }

    pub fn index_of(&self, z: SubsetMask) -> Option<usize> {
        self.elements.binary_search(&z).ok()
    }

    /// Index of `∅`, the least element.
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the whole space, the greatest element.
    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    /// Inclusion by index.
    pub fn leq_index(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    fn locate(&self, z: &ClosedSet) -> Result<usize, SupportError> {
        if !Arc::ptr_eq(&z.space, &self.space) && *z.space != *self.space {
            return Err(SupportError::ForeignSpace);
        }
        self.index_of(z.mask)
            .ok_or(SupportError::ElementNotInPoset(z.mask))
    }

    /// `⟨Z1⟩ ⊆ ⟨Z2⟩`, modelled as `Z1 ⊆ Z2`.
    pub fn ps_leq(&self, z1: &ClosedSet, z2: &ClosedSet) -> Result<bool, SupportError> {
        let a = self.locate(z1)?;
        let b = self.locate(z2)?;
        Ok(self.leq_index(a, b))
    }

    pub fn meet_index(&self, a: usize, b: usize) -> usize {
        self.index_of(self.elements[a].intersection(self.elements[b]))
            .expect("support poset is closed under intersection")
    }

    pub fn join_index(&self, a: usize, b: usize) -> usize {
        self.index_of(self.elements[a].union(self.elements[b]))
            .expect("support poset is closed under union")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ix: &[usize]) -> SubsetMask {
        SubsetMask::from_indices(ix.iter().copied())
    }

    #[test]
    fn sierpinski_supports_form_a_chain() {
        // g = 0, c = 1
        let ps = thomason_supports(&FiniteSpace::sierpinski());
        assert_eq!(ps.elements(), &[m(&[]), m(&[1]), m(&[0, 1])]);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(ps.leq_index(a, b), a <= b);
            }
        }
        let empty = ps.closed_set(0);
        let c = ps.closed_set(1);
        assert!(ps.ps_leq(&empty, &c).unwrap());
        assert!(!ps.ps_leq(&c, &empty).unwrap());
    }

    #[test]
    fn discrete_supports_are_boolean() {
        let ps = thomason_supports(&FiniteSpace::discrete(2));
        assert_eq!(ps.len(), 4);
        let a = ps.closed_set(ps.index_of(m(&[0])).unwrap());
        let ab = ps.closed_set(ps.top());
        assert!(ps.ps_leq(&a, &ab).unwrap());
        assert_eq!(ps.meet_index(1, 2), 0);
        assert_eq!(ps.join_index(1, 2), 3);
    }

    #[test]
    fn empty_space_has_one_support() {
        let ps = thomason_supports(&FiniteSpace::empty());
        assert_eq!(ps.elements(), &[SubsetMask::EMPTY]);
        assert_eq!(ps.bottom(), ps.top());
    }

    #[test]
    fn foreign_and_missing_elements_are_rejected() {
        let ps = thomason_supports(&FiniteSpace::sierpinski());
        let other = thomason_supports(&FiniteSpace::discrete(2));
        let foreign = other.closed_set(1);
        assert_eq!(
            ps.ps_leq(&foreign, &ps.closed_set(0)).unwrap_err(),
            SupportError::ForeignSpace
        );
        // {g} is open, not closed, in the Sierpinski space
        assert_eq!(
            ClosedSet::new(ps.space().clone(), m(&[0])).unwrap_err(),
            SupportError::NotClosed(m(&[0]))
        );
        let ok = ClosedSet::new(ps.space().clone(), m(&[1])).unwrap();
        assert_eq!(ps.ps_leq(&ok, &ps.closed_set(2)), Ok(true));
    }

    #[test]
    fn support_count_matches_open_count() {
        for x in [
            FiniteSpace::sierpinski(),
            FiniteSpace::discrete(3),
            FiniteSpace::indiscrete(3),
            FiniteSpace::chain(4),
        ] {
            let ps = thomason_supports(&x);
            assert_eq!(ps.len(), x.opens().len());
            for &z in ps.elements() {
                assert!(x.is_quasi_compact(z.complement(x.len())));
            }
        }
    }
}
