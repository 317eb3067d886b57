//! Filtering subsets of the support poset and the lattice they form.
//!
//! A filtering subset is nonempty, up-closed and downward directed. The maps
//!
//! * `f(S) = X ∖ ⋂_{Z ∈ S} Z` ([`open_of_filtering`]) and
//! * `g(U) = {Z : X ∖ U ⊆ Z}` ([`filtering_of_open`])
//!
//! are mutually inverse and inclusion preserving, which is what makes
//! [`loc_as_lattice`] isomorphic to the lattice of open sets.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::lattice::{BoundedDistributiveLattice, LatticeError, LatticeTables};
use crate::mask::SubsetMask;
use crate::support::SupportPoset;

/// Largest support poset the exhaustive `2^|PS|` scan accepts.
pub const BRUTE_FORCE_LIMIT: usize = 16;

/// Largest support poset turned into a lattice (tables are quadratic in it).
pub const LATTICE_LIMIT: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LocError {
    #[error("index {index} out of range for a support poset of {len} elements")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("support poset has {0} elements, above the brute-force limit of {BRUTE_FORCE_LIMIT}")]
    TooLargeForBruteForce(usize),
    #[error("support poset has {0} elements, above the lattice limit of {LATTICE_LIMIT}")]
    TooLarge(usize),
    #[error("subset is not filtering: {0:?}")]
    NotFiltering(FilterVerdict),
    #[error("{0:?} is not open")]
    NotOpen(SubsetMask),
    #[error("direct join of filtering subsets {0} and {1} disagrees with the transported join")]
    JoinMismatch(usize, usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Outcome of [`is_filtering`], naming the failing axiom and a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterVerdict {
    Filtering,
    Empty,
    /// `member ∈ S`, `member ⊆ missing`, `missing ∉ S`.
    NotUpClosed { member: usize, missing: usize },
    /// No element of `S` lies below both.
    NotDirected { left: usize, right: usize },
}

impl FilterVerdict {
    pub fn is_filtering(&self) -> bool {
        matches!(self, FilterVerdict::Filtering)
    }
}

/// A filtering subset, as sorted indices into its support poset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FilteringSubset {
    members: Vec<usize>,
}

impl FilteringSubset {
    /// Validates `members` against `ps`.
    pub fn new(ps: &SupportPoset, mut members: Vec<usize>) -> Result<Self, LocError> {
        members.sort_unstable();
        members.dedup();
        match is_filtering(ps, &members)? {
            FilterVerdict::Filtering => Ok(FilteringSubset { members }),
            v => Err(LocError::NotFiltering(v)),
        }
    }

    /// `↑z`.
    pub fn principal(ps: &SupportPoset, z: usize) -> Self {
        FilteringSubset {
            members: (0..ps.len()).filter(|&w| ps.leq_index(z, w)).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, z: usize) -> bool {
        self.members.binary_search(&z).is_ok()
    }

    pub fn is_subset_of(&self, other: &FilteringSubset) -> bool {
        self.members.iter().all(|&z| other.contains(z))
    }

    /// The intersection of all members as a closed set.
    pub fn intersection(&self, ps: &SupportPoset) -> SubsetMask {
        self.members
            .iter()
            .fold(ps.space().full(), |acc, &z| acc.intersection(ps.element(z)))
    }

    /// Minimal members (a single one for a filtering subset of a finite poset).
    pub fn minimal_members(&self, ps: &SupportPoset) -> Vec<usize> {
        self.members
            .iter()
            .copied()
            .filter(|&z| {
                !self
                    .members
                    .iter()
                    .any(|&w| w != z && ps.leq_index(w, z))
            })
            .collect()
    }
}

/// Checks nonemptiness, up-closure and downward directedness of `s`.
pub fn is_filtering(ps: &SupportPoset, s: &[usize]) -> Result<FilterVerdict, LocError> {
    let k = ps.len();
    if let Some(&index) = s.iter().find(|&&i| i >= k) {
        return Err(LocError::IndexOutOfRange { index, len: k });
    }
    if s.is_empty() {
        return Ok(FilterVerdict::Empty);
    }
    let mut member = vec![false; k];
    for &i in s {
        member[i] = true;
    }
    for &z in s {
        if let Some(missing) = (0..k).find(|&w| ps.leq_index(z, w) && !member[w]) {
            return Ok(FilterVerdict::NotUpClosed { member: z, missing });
        }
    }
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i..] {
            let has_lower = s.iter().any(|&c| ps.leq_index(c, a) && ps.leq_index(c, b));
            if !has_lower {
                return Ok(FilterVerdict::NotDirected { left: a, right: b });
            }
        }
    }
    Ok(FilterVerdict::Filtering)
}

/// Every filtering subset, found by scanning all `2^|PS|` candidate subsets.
pub fn filtering_subsets_brute_force(ps: &SupportPoset) -> Result<Vec<FilteringSubset>, LocError> {
    let k = ps.len();
    if k > BRUTE_FORCE_LIMIT {
        return Err(LocError::TooLargeForBruteForce(k));
    }
    let up: Vec<u32> = (0..k)
        .map(|z| (0..k).filter(|&w| ps.leq_index(z, w)).fold(0, |m, w| m | 1 << w))
        .collect();
    let down: Vec<u32> = (0..k)
        .map(|z| (0..k).filter(|&w| ps.leq_index(w, z)).fold(0, |m, w| m | 1 << w))
        .collect();
    let bits = |m: u32| (0..k).filter(move |&i| m & (1 << i) != 0);
    let mut out = Vec::new();
    for cand in 1u32..(1u32 << k) {
        let up_closed = bits(cand).all(|z| up[z] & !cand == 0);
        if !up_closed {
            continue;
        }
        let directed = bits(cand).all(|a| bits(cand).all(|b| down[a] & down[b] & cand != 0));
        if directed {
            out.push(FilteringSubset {
                members: bits(cand).collect(),
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Every filtering subset, as the principal up-sets `↑Z`.
///
/// In a finite poset closed under intersection, a nonempty up-closed directed
/// subset contains the intersection of its members and is the up-set of it.
pub fn filtering_subsets(ps: &SupportPoset) -> Vec<FilteringSubset> {
    let mut out: Vec<_> = (0..ps.len())
        .map(|z| FilteringSubset::principal(ps, z))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// `f(S) = X ∖ ⋂_{Z ∈ S} Z`.
pub fn open_of_filtering(ps: &SupportPoset, s: &FilteringSubset) -> Result<SubsetMask, LocError> {
    match is_filtering(ps, s.members())? {
        FilterVerdict::Filtering => {}
        v => return Err(LocError::NotFiltering(v)),
    }
    let n = ps.space().len();
    Ok(s.intersection(ps).complement(n))
}

/// `g(U) = {Z ∈ PS : X ∖ U ⊆ Z}`.
pub fn filtering_of_open(ps: &SupportPoset, u: SubsetMask) -> Result<FilteringSubset, LocError> {
    let space = ps.space();
    if !space.is_open(u) {
        return Err(LocError::NotOpen(u));
    }
    let complement = u.complement(space.len());
    Ok(FilteringSubset {
        members: (0..ps.len())
            .filter(|&z| complement.is_subset_of(ps.element(z)))
            .collect(),
    })
}

pub fn meet(a: &FilteringSubset, b: &FilteringSubset) -> FilteringSubset {
    FilteringSubset {
        members: a
            .members
            .iter()
            .copied()
            .filter(|&z| b.contains(z))
            .collect(),
    }
}

/// `{Z : ∃ Z1 ∈ S1, Z2 ∈ S2 with Z1 ∩ Z2 ⊆ Z}`.
pub fn join_direct(ps: &SupportPoset, a: &FilteringSubset, b: &FilteringSubset) -> FilteringSubset {
    let lows: Vec<SubsetMask> = a
        .members
        .iter()
        .flat_map(|&z1| {
            b.members
                .iter()
                .map(move |&z2| ps.element(z1).intersection(ps.element(z2)))
        })
        .collect();
    FilteringSubset {
        members: (0..ps.len())
            .filter(|&z| lows.iter().any(|l| l.is_subset_of(ps.element(z))))
            .collect(),
    }
}

/// `g(f(S1) ∪ f(S2))`.
pub fn join_transport(
    ps: &SupportPoset,
    a: &FilteringSubset,
    b: &FilteringSubset,
) -> Result<FilteringSubset, LocError> {
    let u = open_of_filtering(ps, a)?.union(open_of_filtering(ps, b)?);
    filtering_of_open(ps, u)
}

/// The lattice of filtering subsets together with the subsets themselves;
/// lattice element `i` is `subsets[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocLattice {
    pub subsets: Vec<FilteringSubset>,
    pub lattice: BoundedDistributiveLattice,
}

impl LocLattice {
    pub fn index_of(&self, s: &FilteringSubset) -> Option<usize> {
        self.subsets.binary_search(s).ok()
    }
}

/// Packages the filtering subsets of `ps` as a bounded distributive lattice:
/// order by inclusion, meet by intersection, join by [`join_direct`] (checked
/// against [`join_transport`]), bottom `g(∅)` and top `g(X)`.
pub fn loc_as_lattice(ps: &SupportPoset) -> Result<LocLattice, LocError> {
    if ps.len() > LATTICE_LIMIT {
        return Err(LocError::TooLarge(ps.len()));
    }
    let subsets = filtering_subsets(ps);
    let n = subsets.len();
    let index = |s: &FilteringSubset| subsets.binary_search(s).ok();
    let mut leq = vec![false; n * n];
    let mut meets = vec![0; n * n];
    let mut joins = vec![0; n * n];
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate() {
            leq[i * n + j] = a.is_subset_of(b);
            let m = meet(a, b);
            meets[i * n + j] = index(&m).ok_or(LocError::NotFiltering(is_filtering(ps, &m.members)?))?;
            let jd = join_direct(ps, a, b);
            if jd != join_transport(ps, a, b)? {
                return Err(LocError::JoinMismatch(i, j));
            }
            joins[i * n + j] =
                index(&jd).ok_or(LocError::NotFiltering(is_filtering(ps, &jd.members)?))?;
        }
    }
    let bottom = index(&filtering_of_open(ps, SubsetMask::EMPTY)?).expect("g(∅) is filtering");
    let top = index(&filtering_of_open(ps, ps.space().full())?).expect("g(X) is filtering");
    let labels: Vec<String> = subsets
        .iter()
        .map(|s| format!("{:?}", s.members()))
        .collect();
    let lattice = BoundedDistributiveLattice::new(LatticeTables {
        labels,
        leq,
        meet: meets,
        join: joins,
        bottom,
        top,
    })?;
    Ok(LocLattice { subsets, lattice })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::support::thomason_supports;
    use crate::topology::FiniteSpace;

    fn m(ix: &[usize]) -> SubsetMask {
        SubsetMask::from_indices(ix.iter().copied())
    }

    // Sierpinski support poset: 0 = ∅, 1 = {c}, 2 = X
    fn sierpinski_ps() -> SupportPoset {
        thomason_supports(&FiniteSpace::sierpinski())
    }

    #[test]
    fn filtering_verdicts() {
        let ps = sierpinski_ps();
        assert_eq!(is_filtering(&ps, &[1, 2]).unwrap(), FilterVerdict::Filtering);
        assert_eq!(
            is_filtering(&ps, &[1]).unwrap(),
            FilterVerdict::NotUpClosed { member: 1, missing: 2 }
        );
        assert_eq!(is_filtering(&ps, &[]).unwrap(), FilterVerdict::Empty);
        assert_eq!(
            is_filtering(&ps, &[3]).unwrap_err(),
            LocError::IndexOutOfRange { index: 3, len: 3 }
        );

        // discrete(2): 0 = ∅, 1 = {a}, 2 = {b}, 3 = {a,b}
        let ps = thomason_supports(&FiniteSpace::discrete(2));
        assert_eq!(
            is_filtering(&ps, &[1, 2, 3]).unwrap(),
            FilterVerdict::NotDirected { left: 1, right: 2 }
        );
    }

    #[test]
    fn enumeration_small_cases() {
        let ps = sierpinski_ps();
        let fast = filtering_subsets(&ps);
        assert_eq!(fast.len(), 3);
        assert_eq!(filtering_subsets_brute_force(&ps).unwrap(), fast);

        let ps = thomason_supports(&FiniteSpace::discrete(2));
        assert_eq!(filtering_subsets_brute_force(&ps).unwrap().len(), 4);

        let ps = thomason_supports(&FiniteSpace::empty());
        let all = filtering_subsets_brute_force(&ps).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].members(), &[0]);
    }

    #[test]
    fn brute_force_limit() {
        let ps = thomason_supports(&FiniteSpace::discrete(5));
        assert_eq!(
            filtering_subsets_brute_force(&ps).unwrap_err(),
            LocError::TooLargeForBruteForce(32)
        );
        assert_eq!(filtering_subsets(&ps).len(), 32);
    }

    #[test]
    fn maps_f_and_g() {
        let ps = sierpinski_ps();
        let up_c = FilteringSubset::principal(&ps, 1);
        assert_eq!(open_of_filtering(&ps, &up_c).unwrap(), m(&[0]));
        let up_x = FilteringSubset::principal(&ps, 2);
        assert_eq!(up_x.members(), &[2]);
        assert_eq!(open_of_filtering(&ps, &up_x).unwrap(), m(&[]));
        let up_empty = FilteringSubset::principal(&ps, 0);
        assert_eq!(open_of_filtering(&ps, &up_empty).unwrap(), m(&[0, 1]));

        assert_eq!(filtering_of_open(&ps, m(&[0])).unwrap(), up_c);
        assert_eq!(filtering_of_open(&ps, m(&[])).unwrap().members(), &[2]);
        assert_eq!(filtering_of_open(&ps, m(&[0, 1])).unwrap().members(), &[0, 1, 2]);
        assert_eq!(
            filtering_of_open(&ps, m(&[1])).unwrap_err(),
            LocError::NotOpen(m(&[1]))
        );
    }

    #[test]
    fn f_rejects_non_filtering_input() {
        let ps = sierpinski_ps();
        let bogus = FilteringSubset { members: vec![1] };
        assert!(matches!(
            open_of_filtering(&ps, &bogus),
            Err(LocError::NotFiltering(FilterVerdict::NotUpClosed { .. }))
        ));
        assert!(FilteringSubset::new(&ps, vec![]).is_err());
        assert!(FilteringSubset::new(&ps, vec![2, 1, 2]).is_ok());
    }

    #[test]
    fn loc_lattice_shapes() {
        let loc = loc_as_lattice(&sierpinski_ps()).unwrap();
        assert_eq!(loc.lattice.len(), 3);
        // a chain: every pair comparable
        for a in 0..3 {
            for b in 0..3 {
                assert!(loc.lattice.leq(a, b) || loc.lattice.leq(b, a));
            }
        }
        assert_eq!(loc.subsets[loc.lattice.bottom()].members(), &[2]);
        assert_eq!(loc.subsets[loc.lattice.top()].members(), &[0, 1, 2]);

        let loc = loc_as_lattice(&thomason_supports(&FiniteSpace::discrete(2))).unwrap();
        assert_eq!(loc.lattice.len(), 4);
        assert_eq!(loc.lattice.proper_primes().unwrap().len(), 2);

        let loc = loc_as_lattice(&thomason_supports(&FiniteSpace::empty())).unwrap();
        assert_eq!(loc.lattice.len(), 1);
    }

    #[test]
    fn joins_agree() {
        let ps = thomason_supports(&FiniteSpace::discrete(3));
        let all = filtering_subsets(&ps);
        for a in &all {
            for b in &all {
                assert_eq!(join_direct(&ps, a, b), join_transport(&ps, a, b).unwrap());
            }
        }
    }
}
