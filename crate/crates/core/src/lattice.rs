//! Finite bounded distributive lattices and their points.
//!
//! A point of a lattice `L` is a map `L -> {0, 1}` preserving finite meets and
//! joins (on a finite carrier, arbitrary joins reduce to the binary ones plus
//! the empty join). Points correspond to proper primes: a point `p` gives the
//! join of its kernel, and a prime `P` gives the point with `p(U) = 0` iff
//! `U <= P`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::mask::SubsetMask;
use crate::topology::{FiniteSpace, TopologyError, MAX_POINTS};

/// Raw lattice data as read from a file or assembled by hand. Nothing here is
/// validated; see [`check_lattice`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTables {
    pub labels: Vec<String>,
    /// Row-major; `leq[a * n + b]` means `a <= b`.
    pub leq: Vec<bool>,
    pub meet: Vec<usize>,
    pub join: Vec<usize>,
    pub bottom: usize,
    pub top: usize,
}

/// First failure found by [`check_lattice`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeVerdict {
    Valid,
    Empty,
    BadShape,
    IndexOutOfRange(usize),
    NotReflexive(usize),
    NotAntisymmetric(usize, usize),
    NotTransitive(usize, usize, usize),
    MeetNotGreatestLowerBound(usize, usize),
    JoinNotLeastUpperBound(usize, usize),
    BottomNotLeast(usize),
    TopNotGreatest(usize),
    /// `a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)`.
    NotDistributive(usize, usize, usize),
}

impl LatticeVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, LatticeVerdict::Valid)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("not a bounded distributive lattice: {0:?}")]
    InvalidLattice(LatticeVerdict),
    #[error("order has no greatest lower bound for {0} and {1}")]
    NoMeet(usize, usize),
    #[error("order has no least upper bound for {0} and {1}")]
    NoJoin(usize, usize),
    #[error("element {0} is not a proper prime")]
    NotPrime(usize),
    #[error("assignment is not a lattice point: {0:?}")]
    NotAPoint(PointViolation),
    #[error("lattice has {0} proper primes, more than a space can hold")]
    TooManyPrimes(usize),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// Validates every lattice axiom, returning the first failing witness.
pub fn check_lattice(t: &LatticeTables) -> LatticeVerdict {
    use LatticeVerdict::*;
    let n = t.labels.len();
    if n == 0 {
        return Empty;
    }
    if t.leq.len() != n * n || t.meet.len() != n * n || t.join.len() != n * n {
        return BadShape;
    }
    if let Some(&i) = t
        .meet
        .iter()
        .chain(&t.join)
        .chain([&t.bottom, &t.top])
        .find(|&&i| i >= n)
    {
        return IndexOutOfRange(i);
    }
    let le = |a: usize, b: usize| t.leq[a * n + b];
    for a in 0..n {
        if !le(a, a) {
            return NotReflexive(a);
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && le(a, b) && le(b, a) {
                return NotAntisymmetric(a, b);
            }
            for c in 0..n {
                if le(a, b) && le(b, c) && !le(a, c) {
                    return NotTransitive(a, b, c);
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let m = t.meet[a * n + b];
            if !(le(m, a) && le(m, b)) || (0..n).any(|c| le(c, a) && le(c, b) && !le(c, m)) {
                return MeetNotGreatestLowerBound(a, b);
            }
            let j = t.join[a * n + b];
            if !(le(a, j) && le(b, j)) || (0..n).any(|c| le(a, c) && le(b, c) && !le(j, c)) {
                return JoinNotLeastUpperBound(a, b);
            }
        }
    }
    if let Some(a) = (0..n).find(|&a| !le(t.bottom, a)) {
        return BottomNotLeast(a);
    }
    if let Some(a) = (0..n).find(|&a| !le(a, t.top)) {
        return TopNotGreatest(a);
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = t.meet[a * n + t.join[b * n + c]];
                let rhs = t.join[t.meet[a * n + b] * n + t.meet[a * n + c]];
                if lhs != rhs {
                    return NotDistributive(a, b, c);
                }
            }
        }
    }
    Valid
}

/// A validated finite bounded distributive lattice on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedDistributiveLattice {
    tables: LatticeTables,
}

/// A proper prime, by element index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProperPrime(pub usize);

impl ProperPrime {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A map from the carrier to `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    values: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointViolation {
    WrongLength { expected: usize, found: usize },
    TopNotOne,
    BottomNotZero,
    NotMonotone(usize, usize),
    MeetNotPreserved(usize, usize),
    JoinNotPreserved(usize, usize),
}

impl LatticePoint {
    pub fn new(values: Vec<bool>) -> Self {
        LatticePoint { values }
    }

    pub fn value(&self, u: usize) -> bool {
        self.values[u]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// Elements sent to 0.
    pub fn kernel(&self) -> impl Iterator<Item = usize> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| !v)
            .map(|(i, _)| i)
    }
}

impl BoundedDistributiveLattice {
    pub fn new(tables: LatticeTables) -> Result<Self, LatticeError> {
        match check_lattice(&tables) {
            LatticeVerdict::Valid => Ok(BoundedDistributiveLattice { tables }),
            v => Err(LatticeError::InvalidLattice(v)),
        }
    }

    /// Wraps tables without validation. Used to inject faults when exercising
    /// the validators; every entry point that depends on the axioms re-checks.
    #[doc(hidden)]
    pub fn new_unchecked(tables: LatticeTables) -> Self {
        BoundedDistributiveLattice { tables }
    }

    /// Builds meet/join tables and bounds from a partial order.
    pub fn from_order(labels: Vec<String>, leq: Vec<bool>) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n == 0 || leq.len() != n * n {
            return Err(LatticeError::InvalidLattice(if n == 0 {
                LatticeVerdict::Empty
            } else {
                LatticeVerdict::BadShape
            }));
        }
        let le = |a: usize, b: usize| leq[a * n + b];
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = (0..n)
                    .filter(|&c| le(c, a) && le(c, b))
                    .find(|&c| (0..n).all(|d| !(le(d, a) && le(d, b)) || le(d, c)))
                    .ok_or(LatticeError::NoMeet(a, b))?;
                join[a * n + b] = (0..n)
                    .filter(|&c| le(a, c) && le(b, c))
                    .find(|&c| (0..n).all(|d| !(le(a, d) && le(b, d)) || le(c, d)))
                    .ok_or(LatticeError::NoJoin(a, b))?;
            }
        }
        let bottom = (0..n).find(|&b| (0..n).all(|a| le(b, a))).unwrap_or(0);
        let top = (0..n).find(|&t| (0..n).all(|a| le(a, t))).unwrap_or(0);
        BoundedDistributiveLattice::new(LatticeTables {
            labels,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.tables.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.labels.is_empty()
    }

    pub fn tables(&self) -> &LatticeTables {
        &self.tables
    }

    pub fn labels(&self) -> &[String] {
        &self.tables.labels
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.tables.leq[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.tables.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.tables.join[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.tables.bottom
    }

    pub fn top(&self) -> usize {
        self.tables.top
    }

    pub fn check(&self) -> LatticeVerdict {
        check_lattice(&self.tables)
    }

    fn ensure_valid(&self) -> Result<(), LatticeError> {
        match self.check() {
            LatticeVerdict::Valid => Ok(()),
            v => Err(LatticeError::InvalidLattice(v)),
        }
    }

    /// Whether `p` is a non-top element with `a ∧ b <= p` implying `a <= p` or `b <= p`.
    pub fn is_proper_prime(&self, p: usize) -> bool {
        let n = self.len();
        p < n
            && p != self.top()
            && (0..n).all(|a| {
                (0..n).all(|b| !self.leq(self.meet(a, b), p) || self.leq(a, p) || self.leq(b, p))
            })
    }

    /// All proper primes in ascending index order.
    pub fn proper_primes(&self) -> Result<Vec<ProperPrime>, LatticeError> {
        self.ensure_valid()?;
        Ok((0..self.len())
            .filter(|&p| self.is_proper_prime(p))
            .map(ProperPrime)
            .collect())
    }

    pub fn check_point(&self, p: &LatticePoint) -> Result<(), PointViolation> {
        let n = self.len();
        if p.values.len() != n {
            return Err(PointViolation::WrongLength {
                expected: n,
                found: p.values.len(),
            });
        }
        if !p.value(self.top()) {
            return Err(PointViolation::TopNotOne);
        }
        if p.value(self.bottom()) {
            return Err(PointViolation::BottomNotZero);
        }
        for a in 0..n {
            for b in 0..n {
                if self.leq(a, b) && p.value(a) && !p.value(b) {
                    return Err(PointViolation::NotMonotone(a, b));
                }
                if p.value(self.meet(a, b)) != (p.value(a) && p.value(b)) {
                    return Err(PointViolation::MeetNotPreserved(a, b));
                }
                if p.value(self.join(a, b)) != (p.value(a) || p.value(b)) {
                    return Err(PointViolation::JoinNotPreserved(a, b));
                }
            }
        }
        Ok(())
    }

    /// The point with `p(u) = 0` iff `u <= prime`.
    pub fn point_of_prime(&self, prime: usize) -> Result<LatticePoint, LatticeError> {
        if !self.is_proper_prime(prime) {
            return Err(LatticeError::NotPrime(prime));
        }
        Ok(LatticePoint {
            values: (0..self.len()).map(|u| !self.leq(u, prime)).collect(),
        })
    }

    /// The join of the kernel of `p`.
    pub fn prime_of_point(&self, p: &LatticePoint) -> Result<ProperPrime, LatticeError> {
        self.check_point(p).map_err(LatticeError::NotAPoint)?;
        let prime = p
            .kernel()
            .fold(self.bottom(), |acc, w| self.join(acc, w));
        Ok(ProperPrime(prime))
    }

    /// `{p : p(u) = 1}` for every element `u`, as masks over the given primes.
    pub fn point_opens(&self, primes: &[ProperPrime]) -> Vec<SubsetMask> {
        (0..self.len())
            .map(|u| {
                primes
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| !self.leq(u, p.index()))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }

    /// The space of points, labelled by prime index, with opens `{p : p(u) = 1}`.
    pub fn pt_space(&self) -> Result<FiniteSpace, LatticeError> {
        let primes = self.proper_primes()?;
        if primes.len() > MAX_POINTS {
            return Err(LatticeError::TooManyPrimes(primes.len()));
        }
        let labels = primes.iter().map(|p| format!("{}", p.index())).collect();
        let opens = self.point_opens(&primes);
        Ok(FiniteSpace::from_opens(labels, &opens)?)
    }
}

/// Largest carrier for which [`points_brute_force`] scans all `2^n` assignments.
pub const POINT_SCAN_LIMIT: usize = 16;

/// Every lattice point, found by testing all `2^n` maps to `{0, 1}`.
/// `None` above [`POINT_SCAN_LIMIT`].
pub fn points_brute_force(l: &BoundedDistributiveLattice) -> Option<Vec<LatticePoint>> {
    let n = l.len();
    if n > POINT_SCAN_LIMIT {
        return None;
    }
    Some(
        (0u32..1 << n)
            .map(|code| LatticePoint::new((0..n).map(|i| code & (1 << i) != 0).collect()))
            .filter(|p| l.check_point(p).is_ok())
            .collect(),
    )
}

/// A failure of the correspondence between points and proper primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualityViolation {
    Lattice(LatticeError),
    /// `prime_of_point(point_of_prime(P)) != P`.
    PrimeRoundTrip(usize),
    /// `point_of_prime(prime_of_point(p)) != p` for the `i`th enumerated point.
    PointRoundTrip(usize),
    /// The point scan and the prime list have different sizes.
    CountMismatch { points: usize, primes: usize },
    /// Two elements give the same open set of points.
    NotSpatial(usize, usize),
}

/// Checks both round trips between points and proper primes, and that
/// `u -> {p : p(u) = 1}` is injective.
pub fn check_prime_point_duality(l: &BoundedDistributiveLattice) -> Result<(), DualityViolation> {
    let primes = l.proper_primes().map_err(DualityViolation::Lattice)?;
    for p in &primes {
        let point = l.point_of_prime(p.index()).map_err(DualityViolation::Lattice)?;
        if l.prime_of_point(&point).map_err(DualityViolation::Lattice)? != *p {
            return Err(DualityViolation::PrimeRoundTrip(p.index()));
        }
    }
    let points = match points_brute_force(l) {
        Some(points) => points,
        None => primes
            .iter()
            .map(|p| l.point_of_prime(p.index()))
            .collect::<Result<_, _>>()
            .map_err(DualityViolation::Lattice)?,
    };
    if points.len() != primes.len() {
        return Err(DualityViolation::CountMismatch {
            points: points.len(),
            primes: primes.len(),
        });
    }
    for (i, point) in points.iter().enumerate() {
        let prime = l.prime_of_point(point).map_err(DualityViolation::Lattice)?;
        match l.point_of_prime(prime.index()) {
            Ok(back) if back == *point => {}
            _ => return Err(DualityViolation::PointRoundTrip(i)),
        }
    }
    let opens = l.point_opens(&primes);
    for a in 0..opens.len() {
        if let Some(b) = (a + 1..opens.len()).find(|&b| opens[a] == opens[b]) {
            return Err(DualityViolation::NotSpatial(a, b));
        }
    }
    Ok(())
}

/// The lattice of open sets: carrier in canonical open order, meet `∩`, join `∪`.
pub fn open_set_lattice(x: &FiniteSpace) -> BoundedDistributiveLattice {
    let opens = x.opens();
    let n = opens.len();
    let idx = |s: SubsetMask| x.open_index(s).expect("opens are closed under ∩ and ∪");
    let mut leq = vec![false; n * n];
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for (a, &u) in opens.iter().enumerate() {
        for (b, &v) in opens.iter().enumerate() {
            leq[a * n + b] = u.is_subset_of(v);
            meet[a * n + b] = idx(u.intersection(v));
            join[a * n + b] = idx(u.union(v));
        }
    }
    let labels = opens.iter().map(|u| format!("{:?}", u)).collect();
    BoundedDistributiveLattice {
        tables: LatticeTables {
            labels,
            leq,
            meet,
            join,
            bottom: 0,
            top: n - 1,
        },
    }
}

/// `pt(U(X))` together with the comparison map `x -> X ∖ closure({x})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sobrification {
    pub space: FiniteSpace,
    /// For each point of `X`, the index of its image among the points of `space`.
    /// `None` if the image is not a proper prime (never expected).
    pub comparison: Vec<Option<usize>>,
    /// The open set `X ∖ closure({x})` for each point.
    pub comparison_opens: Vec<SubsetMask>,
    pub injective: bool,
    pub surjective: bool,
    pub homeomorphism: bool,
    /// Two points with the same image.
    pub injectivity_witness: Option<(usize, usize)>,
    /// A point of the sobrification not hit by the comparison map.
    pub surjectivity_witness: Option<usize>,
}

pub fn sobrification(x: &FiniteSpace) -> Sobrification {
    let lattice = open_set_lattice(x);
    let primes = lattice.proper_primes().expect("open-set lattices are valid");
    let space = lattice.pt_space().expect("open-set lattices have few primes");
    let n = x.len();
    let comparison_opens: Vec<SubsetMask> = (0..n)
        .map(|p| x.point_closure(p).complement(n))
        .collect();
    let comparison: Vec<Option<usize>> = comparison_opens
        .iter()
        .map(|&u| {
            let e = x.open_index(u)?;
            primes.iter().position(|p| p.index() == e)
        })
        .collect();

    let mut injectivity_witness = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            if comparison[a] == comparison[b] {
                injectivity_witness = Some((a, b));
                break 'outer;
            }
        }
    }
    let surjectivity_witness =
        (0..primes.len()).find(|&q| !comparison.contains(&Some(q)));
    let total = comparison.iter().all(Option::is_some);
    let injective = total && injectivity_witness.is_none();
    let surjective = surjectivity_witness.is_none();

    // transport: U goes to {p : p(U) = 1}, which must be exactly F(U)
    let homeomorphism = injective && surjective && {
        let map: Vec<usize> = comparison.iter().map(|c| c.unwrap()).collect();
        let opens = lattice.point_opens(&primes);
        x.opens().iter().enumerate().all(|(i, &u)| {
            FiniteSpace::map_subset(&map, u) == opens[i]
        })
    };

    Sobrification {
        space,
        comparison,
        comparison_opens,
        injective,
        surjective,
        homeomorphism,
        injectivity_witness,
        surjectivity_witness,
    }
}
