//! Finite commutative unital rings, their ideals, and their Zariski spectra.
//!
//! Rings are stored as full addition and multiplication tables over element
//! indices `0..n`. Rings built from a [`Descriptor`] also remember their
//! structure, which enables a fast path for ideal and prime enumeration that
//! never scans the tables; the generic path works from the tables alone.

pub mod descriptor;
pub mod poly;

use alloc::boxed::Box;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

pub use descriptor::Descriptor;
use poly::Poly;

use crate::topology::{FiniteSpace, Preorder, TopologyError};

/// Default bound on carrier size for any ring.
pub const DEFAULT_CARRIER_BOUND: usize = 256;
/// Default bound on carrier size for table-scan enumeration.
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("{p} is not prime (byte {position})")]
    NotPrime { p: u64, position: usize },
    #[error("modulus must be positive (byte {position})")]
    InvalidModulus { position: usize },
    #[error("polynomial modulus is not monic (byte {position})")]
    NotMonic { position: usize },
    #[error("ring of size {size} exceeds the carrier bound {bound}")]
    RingTooLarge { size: u64, bound: usize },
    #[error("ring of size {size} exceeds the brute-force bound {bound}")]
    TooLargeForBruteForce { size: usize, bound: usize },
    #[error("ring tables have the wrong shape")]
    BadShape,
    #[error("ring axiom fails: {0}")]
    AxiomViolation(String),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// Size bounds applied to construction and enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingLimits {
    pub carrier: usize,
    pub brute_force: usize,
}

impl Default for RingLimits {
    fn default() -> Self {
        RingLimits {
            carrier: DEFAULT_CARRIER_BOUND,
            brute_force: DEFAULT_BRUTE_FORCE_BOUND,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Structure {
    Table,
    Cyclic(u64),
    PolyQuotient { p: u64, modulus: Poly },
    /// Element `(a, b)` has index `a * |right| + b`.
    Product(Box<FiniteRing>, Box<FiniteRing>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    zero: usize,
    one: usize,
    descriptor: String,
    labels: Vec<String>,
    structure: Structure,
    limits: RingLimits,
}

/// An ideal, as a membership mask over the ring carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    mask: Vec<bool>,
}

impl Ideal {
    pub fn from_mask(mask: Vec<bool>) -> Self {
        Ideal { mask }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }
}

/// Ideals sort by size, then by member list.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members().cmp(other.members()))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Parses a descriptor and builds its ring under the default limits.
pub fn ring_from_descriptor(text: &str) -> Result<FiniteRing, RingError> {
    FiniteRing::from_descriptor(text, RingLimits::default())
}

impl FiniteRing {
    pub fn from_descriptor(text: &str, limits: RingLimits) -> Result<Self, RingError> {
        let desc = descriptor::parse(text)?;
        FiniteRing::from_parsed(&desc, limits)
    }

    pub fn from_parsed(desc: &Descriptor, limits: RingLimits) -> Result<Self, RingError> {
        match desc.size() {
            Some(s) if s <= limits.carrier as u64 => {}
            s => {
                return Err(RingError::RingTooLarge {
                    size: s.unwrap_or(u64::MAX),
                    bound: limits.carrier,
                })
            }
        }
        let ring = FiniteRing::build(desc, limits);
        ring.verify_axioms()?;
        Ok(ring)
    }

    fn build(desc: &Descriptor, limits: RingLimits) -> FiniteRing {
        let descriptor = format!("{desc}");
        match desc {
            Descriptor::Cyclic(n) => {
                let n = *n as usize;
                let table = |op: fn(usize, usize) -> usize| {
                    let mut t = vec![0u16; n * n];
                    for a in 0..n {
                        for b in 0..n {
                            t[a * n + b] = (op(a, b) % n) as u16;
                        }
                    }
                    t
                };
                FiniteRing {
                    size: n,
                    add: table(|a, b| a + b),
                    mul: table(|a, b| a * b),
                    zero: 0,
                    one: 1 % n,
                    descriptor,
                    labels: (0..n).map(|i| format!("{i}")).collect(),
                    structure: Structure::Cyclic(n as u64),
                    limits,
                }
            }
            Descriptor::PolyQuotient { p, modulus } => {
                let (p, d) = (*p, modulus.degree().expect("positive degree"));
                let n = (p as usize).pow(d as u32);
                let elems: Vec<Poly> = (0..n).map(|i| Poly::from_index(i, p, d)).collect();
                let mut add = vec![0u16; n * n];
                let mut mul = vec![0u16; n * n];
                for (a, pa) in elems.iter().enumerate() {
                    for (b, pb) in elems.iter().enumerate() {
                        add[a * n + b] = pa.add(pb, p).to_index(p) as u16;
                        mul[a * n + b] = pa.mul(pb, p).rem_monic(modulus, p).to_index(p) as u16;
                    }
                }
                FiniteRing {
                    size: n,
                    add,
                    mul,
                    zero: 0,
                    one: Poly::one().rem_monic(modulus, p).to_index(p),
                    descriptor,
                    labels: elems.iter().map(|e| format!("{e}")).collect(),
                    structure: Structure::PolyQuotient {
                        p,
                        modulus: modulus.clone(),
                    },
                    limits,
                }
            }
            Descriptor::Product(a, b) => {
                let left = FiniteRing::build(a, limits);
                let right = FiniteRing::build(b, limits);
                let (na, nb) = (left.size, right.size);
                let n = na * nb;
                let mut add = vec![0u16; n * n];
                let mut mul = vec![0u16; n * n];
                for x in 0..n {
                    for y in 0..n {
                        let (xa, xb, ya, yb) = (x / nb, x % nb, y / nb, y % nb);
                        add[x * n + y] = (left.add(xa, ya) * nb + right.add(xb, yb)) as u16;
                        mul[x * n + y] = (left.mul(xa, ya) * nb + right.mul(xb, yb)) as u16;
                    }
                }
                let labels = (0..n)
                    .map(|x| format!("({},{})", left.labels[x / nb], right.labels[x % nb]))
                    .collect();
                FiniteRing {
                    size: n,
                    add,
                    mul,
                    zero: left.zero * nb + right.zero,
                    one: left.one * nb + right.one,
                    descriptor,
                    labels,
                    structure: Structure::Product(Box::new(left), Box::new(right)),
                    limits,
                }
            }
        }
    }

    /// A ring given directly by its tables; only the generic enumeration path applies.
    pub fn from_tables(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
        descriptor: &str,
        limits: RingLimits,
    ) -> Result<Self, RingError> {
        let n = add.len();
        if n == 0 {
            return Err(RingError::BadShape);
        }
        if n > limits.carrier {
            return Err(RingError::RingTooLarge {
                size: n as u64,
                bound: limits.carrier,
            });
        }
        let flat = |t: Vec<Vec<usize>>| -> Result<Vec<u16>, RingError> {
            if t.len() != n || t.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
                return Err(RingError::BadShape);
            }
            Ok(t.into_iter().flatten().map(|v| v as u16).collect())
        };
        if zero >= n || one >= n {
            return Err(RingError::BadShape);
        }
        let ring = FiniteRing {
            size: n,
            add: flat(add)?,
            mul: flat(mul)?,
            zero,
            one,
            descriptor: String::from(descriptor),
            labels: (0..n).map(|i| format!("{i}")).collect(),
            structure: Structure::Table,
            limits,
        };
        ring.verify_axioms()?;
        Ok(ring)
    }

    fn verify_axioms(&self) -> Result<(), RingError> {
        let n = self.size;
        let fail = |what: &str, a: usize, b: usize| {
            Err(RingError::AxiomViolation(format!("{what} at ({a}, {b})")))
        };
        if n > 1 && self.zero == self.one {
            return fail("0 = 1 in a nonzero ring", self.zero, self.one);
        }
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("additive identity", a, self.zero);
            }
            if self.mul(a, self.one) != a {
                return fail("multiplicative identity", a, self.one);
            }
            if !(0..n).any(|b| self.add(a, b) == self.zero) {
                return fail("additive inverse", a, a);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", a, b);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", a, b);
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", a, b);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", a, b);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity", a, b);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn limits(&self) -> RingLimits {
        self.limits
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn has_structure(&self) -> bool {
        !matches!(self.structure, Structure::Table)
    }

    /// Whether the ring has no zero divisors other than zero.
    pub fn is_domain(&self) -> bool {
        let n = self.size;
        n > 1
            && (0..n).all(|a| {
                (0..n).all(|b| a == self.zero || b == self.zero || self.mul(a, b) != self.zero)
            })
    }

    /// Smallest ideal containing `seed`, by saturating under `+` and
    /// multiplication by ring elements.
    pub fn ideal_closure(&self, seed: impl IntoIterator<Item = usize>) -> Ideal {
        let n = self.size;
        let mut mask = vec![false; n];
        let mut members = Vec::new();
        let mut queue = VecDeque::new();
        let push = |x: usize, mask: &mut Vec<bool>, queue: &mut VecDeque<usize>| {
            if !mask[x] {
                mask[x] = true;
                queue.push_back(x);
            }
        };
        push(self.zero, &mut mask, &mut queue);
        for x in seed {
            push(x, &mut mask, &mut queue);
        }
        while let Some(x) = queue.pop_front() {
            members.push(x);
            for &m in &members {
                push(self.add(x, m), &mut mask, &mut queue);
            }
            for r in 0..n {
                push(self.mul(r, x), &mut mask, &mut queue);
            }
        }
        Ideal { mask }
    }

    pub fn is_ideal(&self, ideal: &Ideal) -> bool {
        let n = self.size;
        ideal.mask.len() == n
            && ideal.contains(self.zero)
            && ideal.members().all(|a| {
                ideal.members().all(|b| ideal.contains(self.add(a, b)))
                    && (0..n).all(|r| ideal.contains(self.mul(r, a)))
            })
    }

    fn check_brute_force_bound(&self) -> Result<(), RingError> {
        if self.size > self.limits.brute_force {
            return Err(RingError::TooLargeForBruteForce {
                size: self.size,
                bound: self.limits.brute_force,
            });
        }
        Ok(())
    }

    /// All ideals, found by closing generating sets over the tables.
    pub fn ideals_generic(&self) -> Result<Vec<Ideal>, RingError> {
        self.check_brute_force_bound()?;
        let zero_ideal = self.ideal_closure([]);
        let mut found = BTreeSet::new();
        found.insert(zero_ideal.clone());
        let mut queue = VecDeque::from([zero_ideal]);
        while let Some(ideal) = queue.pop_front() {
            for a in 0..self.size {
                if ideal.contains(a) {
                    continue;
                }
                let bigger = self.ideal_closure(ideal.members().chain([a]));
                if found.insert(bigger.clone()) {
                    queue.push_back(bigger);
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// All ideals from the ring's structure, or `None` for a table-only ring.
    pub fn ideals_structured(&self) -> Option<Vec<Ideal>> {
        let mut out = match &self.structure {
            Structure::Table => return None,
            Structure::Cyclic(n) => (1..=*n)
                .filter(|d| n % d == 0)
                .map(|d| self.multiples_of(d))
                .collect(),
            Structure::PolyQuotient { p, modulus } => Poly::monic_divisors(modulus, *p)
                .iter()
                .map(|g| self.poly_ideal(*p, modulus, g))
                .collect(),
            Structure::Product(a, b) => {
                let (ia, ib) = (a.ideals_structured()?, b.ideals_structured()?);
                let mut v = Vec::new();
                for i in &ia {
                    for j in &ib {
                        v.push(self.product_ideal(b.size, i, j));
                    }
                }
                v
            }
        };
        out.sort();
        out.dedup();
        Some(out)
    }

    /// Ideals via the structured path when available, else the generic one.
    pub fn ideals(&self) -> Result<Vec<Ideal>, RingError> {
        match self.ideals_structured() {
            Some(v) => Ok(v),
            None => self.ideals_generic(),
        }
    }

    /// Whether `ideal` is proper with `xy ∈ P` implying `x ∈ P` or `y ∈ P`.
    pub fn is_prime_ideal(&self, ideal: &Ideal) -> bool {
        let n = self.size;
        !ideal.contains(self.one)
            && (0..n).all(|x| {
                ideal.contains(x)
                    || (0..n).all(|y| ideal.contains(y) || !ideal.contains(self.mul(x, y)))
            })
    }

    /// Prime ideals by scanning the multiplication table over every ideal.
    pub fn prime_ideals_generic(&self) -> Result<Vec<Ideal>, RingError> {
        Ok(self
            .ideals_generic()?
            .into_iter()
            .filter(|i| self.is_prime_ideal(i))
            .collect())
    }

    /// Prime ideals from the ring's structure: `(p)` for primes `p | n`,
    /// `(g)` for monic irreducible `g | f`, and `P × B`, `A × Q` for products.
    pub fn prime_ideals_structured(&self) -> Option<Vec<Ideal>> {
        let mut out: Vec<Ideal> = match &self.structure {
            Structure::Table => return None,
            Structure::Cyclic(n) => (2..=*n)
                .filter(|&d| n % d == 0 && descriptor::is_prime(d))
                .map(|d| self.multiples_of(d))
                .collect(),
            Structure::PolyQuotient { p, modulus } => Poly::monic_divisors(modulus, *p)
                .iter()
                .filter(|g| Poly::is_irreducible(g, *p))
                .map(|g| self.poly_ideal(*p, modulus, g))
                .collect(),
            Structure::Product(a, b) => {
                let whole_a = Ideal { mask: vec![true; a.size] };
                let whole_b = Ideal { mask: vec![true; b.size] };
                let mut v: Vec<Ideal> = a
                    .prime_ideals_structured()?
                    .iter()
                    .map(|pa| self.product_ideal(b.size, pa, &whole_b))
                    .collect();
                v.extend(
                    b.prime_ideals_structured()?
                        .iter()
                        .map(|qb| self.product_ideal(b.size, &whole_a, qb)),
                );
                v
            }
        };
        out.sort();
        Some(out)
    }

    pub fn prime_ideals(&self) -> Result<Vec<Ideal>, RingError> {
        match self.prime_ideals_structured() {
            Some(v) => Ok(v),
            None => self.prime_ideals_generic(),
        }
    }

    fn multiples_of(&self, d: u64) -> Ideal {
        let n = self.size as u64;
        let mut mask = vec![false; self.size];
        let mut k = 0;
        loop {
            mask[(k % n) as usize] = true;
            k += d;
            if k >= n {
                break;
            }
        }
        Ideal { mask }
    }

    fn poly_ideal(&self, p: u64, modulus: &Poly, g: &Poly) -> Ideal {
        let d = modulus.degree().expect("positive degree");
        let mut mask = vec![false; self.size];
        for h in 0..self.size {
            let prod = g.mul(&Poly::from_index(h, p, d), p).rem_monic(modulus, p);
            mask[prod.to_index(p)] = true;
        }
        Ideal { mask }
    }

    fn product_ideal(&self, right_size: usize, left: &Ideal, right: &Ideal) -> Ideal {
        Ideal {
            mask: (0..self.size)
                .map(|x| left.contains(x / right_size) && right.contains(x % right_size))
                .collect(),
        }
    }

    /// Greedy generating set: elements in index order that are not already in
    /// the ideal generated so far.
    pub fn generators(&self, ideal: &Ideal) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.ideal_closure([]);
        for x in ideal.members() {
            if !current.contains(x) {
                gens.push(x);
                current = self.ideal_closure(gens.iter().copied());
            }
        }
        gens
    }

    /// Canonical notation for an ideal: its sorted generator list.
    pub fn ideal_label(&self, ideal: &Ideal) -> String {
        let gens = self.generators(ideal);
        if gens.is_empty() {
            return format!("({})", self.labels[self.zero]);
        }
        let parts: Vec<&str> = gens.iter().map(|&g| self.labels[g].as_str()).collect();
        format!("({})", parts.join(", "))
    }
}

/// `Spec R` with the Zariski topology: the closure of `{P}` is `{Q : P ⊆ Q}`.
pub fn zariski_spectrum(ring: &FiniteRing) -> Result<FiniteSpace, RingError> {
    let primes = ring.prime_ideals()?;
    let n = primes.len();
    // specialization: q <= p iff q ∈ closure({p}) iff p ⊆ q
    let mut leq = vec![false; n * n];
    for (q, iq) in primes.iter().enumerate() {
        for (p, ip) in primes.iter().enumerate() {
            leq[q * n + p] = ip.is_subset_of(iq);
        }
    }
    let order = Preorder::new(n, leq)?;
    let labels = primes.iter().map(|i| ring.ideal_label(i)).collect();
    Ok(FiniteSpace::from_preorder_labelled(labels, &order)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        ring_from_descriptor(s).unwrap()
    }

    fn labels(r: &FiniteRing, ideals: &[Ideal]) -> Vec<String> {
        ideals.iter().map(|i| r.ideal_label(i)).collect()
    }

    #[test]
    fn sizes() {
        assert_eq!(ring("Z/12").size(), 12);
        assert_eq!(ring("F2[x]/(x^2+x+1)").size(), 4);
        assert_eq!(ring("Z/4 x Z/9").size(), 36);
        assert_eq!(ring("Z/1").size(), 1);
    }

    #[test]
    fn f4_is_a_field() {
        let r = ring("F2[x]/(x^2+x+1)");
        assert!(r.is_domain());
        assert_eq!(r.ideals().unwrap().len(), 2);
        assert_eq!(r.ideals_generic().unwrap(), r.ideals_structured().unwrap());
        assert!(!ring("F2[x]/(x^2+1)").is_domain());
    }

    #[test]
    fn ideals_of_z12() {
        let r = ring("Z/12");
        let ideals = r.ideals().unwrap();
        assert_eq!(labels(&r, &ideals), ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]);
        assert_eq!(r.ideals_generic().unwrap(), ideals);
        let primes = r.prime_ideals().unwrap();
        assert_eq!(labels(&r, &primes), ["(3)", "(2)"]);
        assert_eq!(r.prime_ideals_generic().unwrap(), primes);
    }

    #[test]
    fn small_prime_sets() {
        let r = ring("Z/4");
        assert_eq!(labels(&r, &r.ideals_generic().unwrap()), ["(0)", "(2)", "(1)"]);
        let r = ring("Z/7");
        assert_eq!(labels(&r, &r.prime_ideals().unwrap()), ["(0)"]);
        let r = ring("Z/4 x Z/9");
        let primes = r.prime_ideals().unwrap();
        assert_eq!(primes.len(), 2);
        assert_eq!(r.prime_ideals_generic().unwrap(), primes);
        // (2) x Z/9 has 2 * 9 elements, Z/4 x (3) has 4 * 3
        let sizes: Vec<usize> = primes.iter().map(Ideal::len).collect();
        assert_eq!(sizes, [12, 18]);
    }

    #[test]
    fn spectra() {
        let s = zariski_spectrum(&ring("Z/12")).unwrap();
        assert_eq!(s, FiniteSpace::discrete(2).relabelled(vec!["(3)".into(), "(2)".into()]).unwrap());
        assert_eq!(zariski_spectrum(&ring("Z/8")).unwrap().len(), 1);
        let s = zariski_spectrum(&ring("Z/6 x Z/5")).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.opens().len(), 8);
        assert!(zariski_spectrum(&ring("Z/1")).unwrap().is_empty());
    }

    #[test]
    fn table_ring_uses_generic_path() {
        // F2 x F2 by hand
        let add = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let mul = (0..4).map(|a| (0..4).map(|b| a & b).collect()).collect();
        let r = FiniteRing::from_tables(add, mul, 0, 3, "F2 x F2", RingLimits::default()).unwrap();
        assert!(!r.has_structure());
        assert!(r.ideals_structured().is_none());
        assert_eq!(r.ideals().unwrap().len(), 4);
        assert_eq!(r.prime_ideals().unwrap().len(), 2);
    }

    #[test]
    fn rejects_broken_tables_and_bounds() {
        // multiplication that is not distributive
        let add: Vec<Vec<usize>> = (0..2).map(|a| (0..2).map(|b| a ^ b).collect()).collect();
        let mul = vec![vec![0, 0], vec![0, 1]];
        assert!(FiniteRing::from_tables(add.clone(), mul, 0, 1, "F2", RingLimits::default()).is_ok());
        let bad = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            FiniteRing::from_tables(add, bad, 0, 1, "bad", RingLimits::default()),
            Err(RingError::AxiomViolation(_))
        ));
        assert_eq!(
            ring_from_descriptor("Z/257").unwrap_err(),
            RingError::RingTooLarge { size: 257, bound: 256 }
        );
        assert_eq!(
            ring("Z/100").ideals_generic().unwrap_err(),
            RingError::TooLargeForBruteForce { size: 100, bound: 64 }
        );
        assert_eq!(ring("Z/100").prime_ideals().unwrap().len(), 2);
        let limits = RingLimits { carrier: 10, brute_force: 4 };
        assert!(FiniteRing::from_descriptor("Z/11", limits).is_err());
        assert!(FiniteRing::from_descriptor("Z/5", limits).unwrap().ideals_generic().is_err());
    }
}
