//! The full pipeline `X -> PS(X) -> Loc(PS(X)) -> pt(Loc(PS(X)))` and its
//! verification against the input space.

use alloc::vec::Vec;

use thiserror::Error;

use crate::lattice::{
    check_prime_point_duality, open_set_lattice, sobrification, LatticeError,
};
use crate::loc::{
    filtering_of_open, filtering_subsets, loc_as_lattice, open_of_filtering, LocError,
};
use crate::support::{thomason_supports, SupportPoset};
use crate::topology::{are_homeomorphic, FiniteSpace};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error(transparent)]
    Loc(#[from] LocError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Source of monotonic nanosecond timestamps for stage timings.
pub trait Clock {
    fn now_nanos(&self) -> u64;
}

/// Reports every stage as taking zero time.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now_nanos(&self) -> u64 {
        0
    }
}

/// `pt(Loc(PS(X)))`.
pub fn reconstruct(x: &FiniteSpace) -> Result<FiniteSpace, ReconstructError> {
    let ps = thomason_supports(x);
    let loc = loc_as_lattice(&ps)?;
    Ok(loc.lattice.pt_space()?)
}

/// Checks that `f ∘ g` and `g ∘ f` are identities and that `f` preserves and
/// reflects inclusion.
pub fn loc_bijection_holds(ps: &SupportPoset) -> Result<bool, LocError> {
    let space = ps.space();
    for &u in space.opens() {
        if open_of_filtering(ps, &filtering_of_open(ps, u)?)? != u {
            return Ok(false);
        }
    }
    let subsets = filtering_subsets(ps);
    let mut images = Vec::with_capacity(subsets.len());
    for s in &subsets {
        let u = open_of_filtering(ps, s)?;
        if filtering_of_open(ps, u)? != *s {
            return Ok(false);
        }
        images.push(u);
    }
    for (a, sa) in subsets.iter().enumerate() {
        for (b, sb) in subsets.iter().enumerate() {
            if sa.is_subset_of(sb) != images[a].is_subset_of(images[b]) {
                return Ok(false);
            }
        }
    }
    Ok(images.len() == space.opens().len())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StageTimings {
    pub supports_ns: u64,
    pub loc_ns: u64,
    pub points_ns: u64,
    pub verification_ns: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub points: usize,
    pub opens: usize,
    pub t0: bool,
    pub sober: bool,
    pub ps_size: usize,
    pub loc_size: usize,
    pub prime_count: usize,
    pub loc_bijection_ok: bool,
    pub prime_point_roundtrip_ok: bool,
    pub homeomorphic_to_input: bool,
    pub homeomorphic_to_sobrification: bool,
    /// Input point `i` maps to reconstructed point `witness[i]`.
    pub witness: Option<Vec<usize>>,
    /// Sobrification point `i` maps to reconstructed point `sobrification_witness[i]`.
    pub sobrification_witness: Option<Vec<usize>>,
    pub reconstructed: FiniteSpace,
    pub timings: StageTimings,
}

impl ReconstructionReport {
    /// `|Loc| = |opens|`, `#primes = #points of the sobrification`, and
    /// homeomorphism to the input implies homeomorphism to the sobrification.
    pub fn stage_invariants_hold(&self, sobrification_points: usize) -> bool {
        self.loc_size == self.opens
            && self.prime_count == sobrification_points
            && (!self.homeomorphic_to_input || self.homeomorphic_to_sobrification)
    }

    /// Every verdict the pipeline is expected to satisfy for this input.
    pub fn all_ok(&self) -> bool {
        self.loc_bijection_ok
            && self.prime_point_roundtrip_ok
            && self.homeomorphic_to_sobrification
            && self.homeomorphic_to_input == self.sober
    }
}

pub fn verify_reconstruction(x: &FiniteSpace) -> Result<ReconstructionReport, ReconstructError> {
    verify_reconstruction_timed(x, &NoClock)
}

pub fn verify_reconstruction_timed(
    x: &FiniteSpace,
    clock: &impl Clock,
) -> Result<ReconstructionReport, ReconstructError> {
    let t0 = clock.now_nanos();
    let ps = thomason_supports(x);
    let t1 = clock.now_nanos();
    let loc = loc_as_lattice(&ps)?;
    let t2 = clock.now_nanos();
    let reconstructed = loc.lattice.pt_space()?;
    let prime_count = reconstructed.len();
    let t3 = clock.now_nanos();

    let loc_bijection_ok = loc_bijection_holds(&ps)?;
    let prime_point_roundtrip_ok = check_prime_point_duality(&loc.lattice).is_ok()
        && check_prime_point_duality(&open_set_lattice(x)).is_ok();
    let witness = are_homeomorphic(x, &reconstructed);
    let sob = sobrification(x);
    let sobrification_witness = are_homeomorphic(&sob.space, &reconstructed);
    let t4 = clock.now_nanos();

    Ok(ReconstructionReport {
        points: x.len(),
        opens: x.opens().len(),
        t0: x.is_t0(),
        sober: x.is_sober().is_sober(),
        ps_size: ps.len(),
        loc_size: loc.subsets.len(),
        prime_count,
        loc_bijection_ok,
        prime_point_roundtrip_ok,
        homeomorphic_to_input: witness.is_some(),
        homeomorphic_to_sobrification: sobrification_witness.is_some(),
        witness,
        sobrification_witness,
        reconstructed,
        timings: StageTimings {
            supports_ns: t1 - t0,
            loc_ns: t2 - t1,
            points_ns: t3 - t2,
            verification_ns: t4 - t3,
        },
    })
}
