//! Finite topological spaces.
//!
//! A [`FiniteSpace`] stores its points by label and its topology as the full
//! family of open sets, each a [`SubsetMask`] over the canonical point order.
//! The family is kept sorted and deduplicated so two spaces with the same
//! labels and the same topology compare equal; homeomorphism is the separate
//! relation [`are_homeomorphic`].
//!
//! The specialization preorder follows the convention `x <= y` iff `x` lies in
//! the closure of `{y}`: closed sets are down-sets, open sets are up-sets and a
//! generic point is a maximum.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::mask::SubsetMask;

/// Largest point count a space can carry.
pub const MAX_POINTS: usize = 64;

/// Largest point count enumerated without an explicit override.
pub const ENUMERATION_LIMIT: usize = 4;

/// Hard ceiling on enumeration even with the override set.
pub const ENUMERATION_HARD_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("{0} points exceeds the supported maximum of {MAX_POINTS}")]
    TooManyPoints(usize),
    #[error("open set {mask:?} mentions a point outside 0..{points}")]
    MaskOutOfRange { mask: SubsetMask, points: usize },
    #[error("the empty set is not open")]
    MissingEmpty,
    #[error("the full point set is not open")]
    MissingFull,
    #[error("{left:?} and {right:?} are open but their union is not")]
    NotUnionClosed { left: SubsetMask, right: SubsetMask },
    #[error("{left:?} and {right:?} are open but their intersection is not")]
    NotIntersectionClosed { left: SubsetMask, right: SubsetMask },
    #[error("relation table has {found} entries, expected {expected}")]
    PreorderShape { expected: usize, found: usize },
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("refusing to enumerate topologies on {points} points (limit {limit}; override required)")]
    EnumerationGuard { points: usize, limit: usize },
}

/// A reflexive, transitive relation on `0..n`, stored as a row-major table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Preorder {
    n: usize,
    leq: Vec<bool>,
}

impl Preorder {
    /// Validates and wraps a row-major table where `leq[a * n + b]` means `a <= b`.
    pub fn new(n: usize, leq: Vec<bool>) -> Result<Self, TopologyError> {
        if leq.len() != n * n {
            return Err(TopologyError::PreorderShape {
                expected: n * n,
                found: leq.len(),
            });
        }
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(n));
        }
        for a in 0..n {
            if !leq[a * n + a] {
                return Err(TopologyError::NotReflexive(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !leq[a * n + b] {
                    continue;
                }
                for c in 0..n {
                    if leq[b * n + c] && !leq[a * n + c] {
                        return Err(TopologyError::NotTransitive(a, b, c));
                    }
                }
            }
        }
        Ok(Preorder { n, leq })
    }

    /// Builds the reflexive transitive closure of the given pairs.
    pub fn closure_of(n: usize, pairs: &[(usize, usize)]) -> Result<Self, TopologyError> {
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(n));
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            leq[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for a in 0..n {
                if !leq[a * n + k] {
                    continue;
                }
                for b in 0..n {
                    if leq[k * n + b] {
                        leq[a * n + b] = true;
                    }
                }
            }
        }
        Preorder::new(n, leq)
    }

    pub fn discrete(n: usize) -> Self {
        Preorder::closure_of(n, &[]).expect("discrete order is a preorder")
    }

    /// `0 <= 1 <= .. <= n-1`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Preorder::closure_of(n, &pairs).expect("chain is a preorder")
    }

    pub fn total(n: usize) -> Self {
        Preorder {
            n,
            leq: vec![true; n * n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn table(&self) -> &[bool] {
        &self.leq
    }

    pub fn is_partial_order(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| a == b || !(self.leq(a, b) && self.leq(b, a))))
    }

    /// `{b : a <= b}`.
    pub fn up_set(&self, a: usize) -> SubsetMask {
        (0..self.n).filter(|&b| self.leq(a, b)).collect()
    }

    /// `{b : b <= a}`.
    pub fn down_set(&self, a: usize) -> SubsetMask {
        (0..self.n).filter(|&b| self.leq(b, a)).collect()
    }
}

/// A finite set of labelled points with a validated topology.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    labels: Vec<String>,
    opens: Vec<SubsetMask>,
}

/// Outcome of [`FiniteSpace::is_sober`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SoberVerdict {
    Sober,
    /// An irreducible closed set whose generic points are not exactly one.
    NotSober {
        closed_set: SubsetMask,
        generic_points: SubsetMask,
    },
}

impl SoberVerdict {
    pub fn is_sober(&self) -> bool {
        matches!(self, SoberVerdict::Sober)
    }
}

/// `a`, `b`, .. for small spaces, `p0`, `p1`, .. beyond the alphabet.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| String::from((b'a' + i as u8) as char)).collect()
    } else {
        (0..n).map(|i| format!("p{i}")).collect()
    }
}

impl FiniteSpace {
    /// Validates a family of open sets and stores it canonically.
    pub fn from_opens(labels: Vec<String>, opens: &[SubsetMask]) -> Result<Self, TopologyError> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(n));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(TopologyError::DuplicateLabel(l.clone()));
            }
        }
        if let Some(&mask) = opens.iter().find(|m| !m.fits(n)) {
            return Err(TopologyError::MaskOutOfRange { mask, points: n });
        }
        let family: BTreeSet<SubsetMask> = opens.iter().copied().collect();
        if !family.contains(&SubsetMask::EMPTY) {
            return Err(TopologyError::MissingEmpty);
        }
        if !family.contains(&SubsetMask::full(n)) {
            return Err(TopologyError::MissingFull);
        }
        let opens: Vec<SubsetMask> = family.iter().copied().collect();
        for (i, &left) in opens.iter().enumerate() {
            for &right in &opens[i + 1..] {
                if !family.contains(&left.union(right)) {
                    return Err(TopologyError::NotUnionClosed { left, right });
                }
                if !family.contains(&left.intersection(right)) {
                    return Err(TopologyError::NotIntersectionClosed { left, right });
                }
            }
        }
        Ok(FiniteSpace { labels, opens })
    }

    /// The Alexandrov space of a preorder: the open sets are exactly the up-sets.
    pub fn from_preorder(order: &Preorder) -> Self {
        Self::from_preorder_labelled(default_labels(order.len()), order)
            .expect("default labels are distinct")
    }

    pub fn from_preorder_labelled(
        labels: Vec<String>,
        order: &Preorder,
    ) -> Result<Self, TopologyError> {
        let n = order.len();
        assert_eq!(labels.len(), n, "one label per element");
        let principal: Vec<SubsetMask> = (0..n).map(|a| order.up_set(a)).collect();
        // Every up-set is a union of principal up-sets.
        let mut family = BTreeSet::new();
        family.insert(SubsetMask::EMPTY);
        let mut frontier = vec![SubsetMask::EMPTY];
        while let Some(s) = frontier.pop() {
            for &u in &principal {
                let t = s.union(u);
                if family.insert(t) {
                    frontier.push(t);
                }
            }
        }
        let opens: Vec<_> = family.into_iter().collect();
        FiniteSpace::from_opens(labels, &opens)
    }

    pub fn empty() -> Self {
        FiniteSpace {
            labels: Vec::new(),
            opens: vec![SubsetMask::EMPTY],
        }
    }

    /// Points `g` (generic, index 0) and `c` (closed, index 1); opens `∅, {g}, {g, c}`.
    pub fn sierpinski() -> Self {
        let labels = vec![String::from("g"), String::from("c")];
        let opens = [
            SubsetMask::EMPTY,
            SubsetMask::singleton(0),
            SubsetMask::full(2),
        ];
        FiniteSpace::from_opens(labels, &opens).expect("Sierpinski space is valid")
    }

    pub fn discrete(n: usize) -> Self {
        FiniteSpace::from_preorder(&Preorder::discrete(n))
    }

    pub fn indiscrete(n: usize) -> Self {
        FiniteSpace::from_preorder(&Preorder::total(n))
    }

    /// Point `n-1` is generic, point `0` is closed.
    pub fn chain(n: usize) -> Self {
        FiniteSpace::from_preorder(&Preorder::chain(n))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Open sets in canonical (ascending mask) order; `∅` first and the full set last.
    pub fn opens(&self) -> &[SubsetMask] {
        &self.opens
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    /// Closed sets in the order of their complements in [`opens`](Self::opens).
    pub fn closed_sets(&self) -> Vec<SubsetMask> {
        let n = self.len();
        self.opens.iter().map(|u| u.complement(n)).collect()
    }

    pub fn is_open(&self, s: SubsetMask) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: SubsetMask) -> bool {
        s.fits(self.len()) && self.is_open(s.complement(self.len()))
    }

    /// Index of an open set in [`opens`](Self::opens).
    pub fn open_index(&self, s: SubsetMask) -> Option<usize> {
        self.opens.binary_search(&s).ok()
    }

    /// Largest open subset of `s`.
    pub fn interior(&self, s: SubsetMask) -> SubsetMask {
        self.opens
            .iter()
            .filter(|u| u.is_subset_of(s))
            .fold(SubsetMask::EMPTY, |acc, &u| acc.union(u))
    }

    /// Smallest closed superset of `s`.
    pub fn closure(&self, s: SubsetMask) -> SubsetMask {
        let n = self.len();
        self.interior(s.complement(n)).complement(n)
    }

    pub fn point_closure(&self, x: usize) -> SubsetMask {
        self.closure(SubsetMask::singleton(x))
    }

    pub fn specialization_preorder(&self) -> Preorder {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for y in 0..n {
            for x in self.point_closure(y).iter() {
                leq[x * n + y] = true;
            }
        }
        Preorder::new(n, leq).expect("specialization is a preorder")
    }

    /// Every two distinct points are separated by some open set.
    pub fn is_t0(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                self.opens
                    .iter()
                    .any(|u| u.contains(x) != u.contains(y))
            })
        })
    }

    /// Nonempty closed sets that are not the union of two proper closed subsets.
    pub fn irreducible_closed_subsets(&self) -> Vec<SubsetMask> {
        let closed = self.closed_sets();
        let mut out: Vec<SubsetMask> = closed
            .iter()
            .copied()
            .filter(|&z| {
                if z.is_empty() {
                    return false;
                }
                let proper: Vec<SubsetMask> = closed
                    .iter()
                    .copied()
                    .filter(|&w| w.is_subset_of(z) && w != z)
                    .collect();
                !proper.iter().enumerate().any(|(i, &a)| {
                    proper[i..].iter().any(|&b| a.union(b) == z)
                })
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Points `z` of a closed set `z_set` with `closure({z}) = z_set`.
    pub fn generic_points(&self, z_set: SubsetMask) -> SubsetMask {
        z_set
            .iter()
            .filter(|&z| self.point_closure(z) == z_set)
            .collect()
    }

    pub fn is_sober(&self) -> SoberVerdict {
        for z in self.irreducible_closed_subsets() {
            let generic = self.generic_points(z);
            if generic.len() != 1 {
                return SoberVerdict::NotSober {
                    closed_set: z,
                    generic_points: generic,
                };
            }
        }
        SoberVerdict::Sober
    }

    /// Searches the open cover consisting of all open sets for a minimal
    /// finite subcover of `s`. Returns `None` when no subcover exists, which
    /// only happens if `s` is not a subset of the space.
    pub fn finite_subcover(&self, s: SubsetMask) -> Option<Vec<SubsetMask>> {
        let mut covered = SubsetMask::EMPTY;
        let mut chosen = Vec::new();
        for x in s.iter() {
            if covered.contains(x) {
                continue;
            }
            // any open containing x will do; the smallest keeps the cover tight
            let u = self
                .opens
                .iter()
                .copied()
                .filter(|u| u.contains(x))
                .min_by_key(|u| u.len())?;
            covered = covered.union(u);
            chosen.push(u);
        }
        s.is_subset_of(covered).then_some(chosen)
    }

    /// Every open cover of `s` admits a finite subcover.
    ///
    /// A cover drawn from a finite family of opens is itself finite, so the
    /// check reduces to finding a subcover of `s` among all open sets.
    pub fn is_quasi_compact(&self, s: SubsetMask) -> bool {
        self.finite_subcover(s).is_some()
    }

    /// Image of a subset under a point map.
    pub fn map_subset(map: &[usize], s: SubsetMask) -> SubsetMask {
        s.iter().map(|x| map[x]).collect()
    }

    /// Sorted sizes of the open sets; a homeomorphism invariant.
    pub fn open_size_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.opens.iter().map(|u| u.len()).collect();
        sizes.sort_unstable();
        sizes
    }

    /// The same topology with points permuted: point `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        for (i, &j) in perm.iter().enumerate() {
            labels[j] = self.labels[i].clone();
        }
        let opens: Vec<_> = self
            .opens
            .iter()
            .map(|&u| FiniteSpace::map_subset(perm, u))
            .collect();
        FiniteSpace::from_opens(labels, &opens).expect("permutation preserves validity")
    }

    /// Replaces the labels, keeping the topology.
    pub fn relabelled(&self, labels: Vec<String>) -> Result<Self, TopologyError> {
        FiniteSpace::from_opens(labels, &self.opens)
    }
}

/// Finds a homeomorphism `X -> Y` as a point map `x -> map[x]`.
///
/// Backtracks over point bijections in lexicographic order, pruning with
/// per-point signatures and the specialization relation; the first complete
/// bijection carrying opens onto opens is returned.
pub fn are_homeomorphic(x: &FiniteSpace, y: &FiniteSpace) -> Option<Vec<usize>> {
    let n = x.len();
    if n != y.len() || x.opens.len() != y.opens.len() {
        return None;
    }
    if x.open_size_profile() != y.open_size_profile() {
        return None;
    }
    let sig = |s: &FiniteSpace, p: usize| {
        let in_opens = s.opens.iter().filter(|u| u.contains(p)).count();
        (in_opens, s.point_closure(p).len())
    };
    let sx: Vec<_> = (0..n).map(|p| sig(x, p)).collect();
    let sy: Vec<_> = (0..n).map(|p| sig(y, p)).collect();
    let px = x.specialization_preorder();
    let py = y.specialization_preorder();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(x, y, &sx, &sy, &px, &py, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    x: &FiniteSpace,
    y: &FiniteSpace,
    sx: &[(usize, usize)],
    sy: &[(usize, usize)],
    px: &Preorder,
    py: &Preorder,
    next: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = x.len();
    if next == n {
        return x.opens.iter().all(|&u| y.is_open(FiniteSpace::map_subset(map, u)));
    }
    for target in 0..n {
        if used[target] || sx[next] != sy[target] {
            continue;
        }
        let consistent = (0..next).all(|prev| {
            px.leq(prev, next) == py.leq(map[prev], target)
                && px.leq(next, prev) == py.leq(target, map[prev])
        });
        if !consistent {
            continue;
        }
        map[next] = target;
        used[target] = true;
        if extend(x, y, sx, sy, px, py, next + 1, map, used) {
            return true;
        }
        used[target] = false;
        map[next] = usize::MAX;
    }
    false
}

/// Iterator over every topology on `n` labelled points.
///
/// Finite topologies correspond one-to-one with preorders through the
/// specialization/Alexandrov correspondence; the iterator walks all
/// off-diagonal relations in ascending bit order and keeps the transitive ones.
#[derive(Clone, Debug)]
pub struct Topologies {
    n: usize,
    next: u64,
    end: u64,
    t0_only: bool,
}

impl Topologies {
    /// Enumerates topologies on `n` points. Sizes above [`ENUMERATION_LIMIT`]
    /// require `allow_large`, and [`ENUMERATION_HARD_LIMIT`] is never exceeded.
    pub fn new(n: usize, t0_only: bool, allow_large: bool) -> Result<Self, TopologyError> {
        let limit = if allow_large {
            ENUMERATION_HARD_LIMIT
        } else {
            ENUMERATION_LIMIT
        };
        if n > limit {
            return Err(TopologyError::EnumerationGuard { points: n, limit });
        }
        let bits = n * n.saturating_sub(1);
        Ok(Topologies {
            n,
            next: 0,
            end: 1u64 << bits,
            t0_only,
        })
    }

    fn relation(&self, code: u64) -> Vec<bool> {
        let n = self.n;
        let mut leq = vec![false; n * n];
        let mut bit = 0;
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    leq[a * n + b] = true;
                } else {
                    leq[a * n + b] = code & (1 << bit) != 0;
                    bit += 1;
                }
            }
        }
        leq
    }
}

impl Iterator for Topologies {
    type Item = FiniteSpace;

    fn next(&mut self) -> Option<FiniteSpace> {
        while self.next < self.end {
            let code = self.next;
            self.next += 1;
            let Ok(order) = Preorder::new(self.n, self.relation(code)) else {
                continue;
            };
            if self.t0_only && !order.is_partial_order() {
                continue;
            }
            return Some(FiniteSpace::from_preorder(&order));
        }
        None
    }
}

/// All topologies on `n` labelled points, in enumeration order.
pub fn all_topologies(n: usize, allow_large: bool) -> Result<Vec<FiniteSpace>, TopologyError> {
    Ok(Topologies::new(n, false, allow_large)?.collect())
}

/// All T0 topologies on `n` labelled points.
pub fn t0_topologies(n: usize, allow_large: bool) -> Result<Vec<FiniteSpace>, TopologyError> {
    Ok(Topologies::new(n, true, allow_large)?.collect())
}
