//! Per-space invariant suite used by the exhaustive checks.
//!
//! [`check_space`] runs every structural property of the pipeline on one
//! finite space and collects the violations. An empty list means the space
//! passed; any entry is an implementation bug.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::lattice::{
    check_prime_point_duality, open_set_lattice, sobrification, BoundedDistributiveLattice,
};
use crate::loc::{
    filtering_subsets, filtering_subsets_brute_force, join_direct, join_transport,
    open_of_filtering, LocLattice, BRUTE_FORCE_LIMIT,
};
use crate::loc::loc_as_lattice;
use crate::reconstruct::loc_bijection_holds;
use crate::support::thomason_supports;
use crate::topology::{are_homeomorphic, FiniteSpace};

/// A deliberate corruption applied before the lattice-level checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Overwrites `bottom ∨ top` with `bottom` in the Loc join table.
    CorruptLocJoin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    InvalidTopology(String),
    SoberT0Mismatch { sober: bool, t0: bool },
    SupportCount { supports: usize, opens: usize },
    LocBijection,
    NotPrincipal { subset: usize },
    FilterEnumerationMismatch,
    JoinMismatch { left: usize, right: usize },
    LocBuild(String),
    LocNotIsomorphicToOpens,
    Duality { lattice: &'static str, detail: String },
    SobrificationBijection { sober: bool, bijective: bool },
    SoberNotHomeomorphic,
    MissingNonSoberWitness,
    Reconstruction(String),
    NotHomeomorphicToInput,
    NotHomeomorphicToSobrification,
    StageCounts { loc: usize, opens: usize, primes: usize, sob_points: usize },
}

/// Summary of one space's run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceCheck {
    pub points: usize,
    pub opens: usize,
    pub t0: bool,
    pub sober: bool,
    pub ps_size: usize,
    pub loc_size: usize,
    pub prime_count: usize,
    pub homeomorphic_to_input: bool,
    pub homeomorphic_to_sobrification: bool,
    pub violations: Vec<Violation>,
}

impl SpaceCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn corrupt(lattice: &BoundedDistributiveLattice) -> BoundedDistributiveLattice {
    let mut t = lattice.tables().clone();
    let n = t.labels.len();
    let (b, top) = (t.bottom, t.top);
    t.join[b * n + top] = b;
    t.join[top * n + b] = b;
    BoundedDistributiveLattice::new_unchecked(t)
}

pub fn check_space(x: &FiniteSpace, fault: Option<Fault>) -> SpaceCheck {
    let mut v = Vec::new();

    if let Err(e) = FiniteSpace::from_opens(x.labels().to_vec(), x.opens()) {
        v.push(Violation::InvalidTopology(format!("{e}")));
    }
    let t0 = x.is_t0();
    let sober = x.is_sober().is_sober();
    if t0 != sober {
        v.push(Violation::SoberT0Mismatch { sober, t0 });
    }

    let ps = thomason_supports(x);
    if ps.len() != x.opens().len() {
        v.push(Violation::SupportCount {
            supports: ps.len(),
            opens: x.opens().len(),
        });
    }
    if !matches!(loc_bijection_holds(&ps), Ok(true)) {
        v.push(Violation::LocBijection);
    }

    let subsets = filtering_subsets(&ps);
    for (i, s) in subsets.iter().enumerate() {
        let minimal = s.minimal_members(&ps);
        let principal = minimal.len() == 1
            && ps.element(minimal[0]) == s.intersection(&ps)
            && *s == crate::loc::FilteringSubset::principal(&ps, minimal[0]);
        if !principal {
            v.push(Violation::NotPrincipal { subset: i });
        }
    }
    if ps.len() <= BRUTE_FORCE_LIMIT {
        match filtering_subsets_brute_force(&ps) {
            Ok(brute) if brute == subsets => {}
            _ => v.push(Violation::FilterEnumerationMismatch),
        }
    }
    'pairs: for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate() {
            match join_transport(&ps, a, b) {
                Ok(t) if t == join_direct(&ps, a, b) => {}
                _ => {
                    v.push(Violation::JoinMismatch { left: i, right: j });
                    break 'pairs;
                }
            }
        }
    }

    let opens_lattice = open_set_lattice(x);
    if let Err(e) = check_prime_point_duality(&opens_lattice) {
        v.push(Violation::Duality {
            lattice: "opens",
            detail: format!("{e:?}"),
        });
    }

    let sob = sobrification(x);
    let bijective = sob.injective && sob.surjective;
    if bijective != sober {
        v.push(Violation::SobrificationBijection { sober, bijective });
    }
    if sober && !sob.homeomorphism {
        v.push(Violation::SoberNotHomeomorphic);
    }
    if !sober && sob.injectivity_witness.is_none() && sob.surjectivity_witness.is_none() {
        v.push(Violation::MissingNonSoberWitness);
    }

    let mut check = SpaceCheck {
        points: x.len(),
        opens: x.opens().len(),
        t0,
        sober,
        ps_size: ps.len(),
        loc_size: subsets.len(),
        prime_count: 0,
        homeomorphic_to_input: false,
        homeomorphic_to_sobrification: false,
        violations: Vec::new(),
    };

    let loc = match loc_as_lattice(&ps) {
        Ok(loc) => loc,
        Err(e) => {
            v.push(Violation::LocBuild(format!("{e}")));
            check.violations = v;
            return check;
        }
    };
    let loc = match fault {
        Some(Fault::CorruptLocJoin) => LocLattice {
            lattice: corrupt(&loc.lattice),
            subsets: loc.subsets,
        },
        None => loc,
    };

    // f carries the Loc order onto inclusion of opens
    let images: Vec<Option<usize>> = loc
        .subsets
        .iter()
        .map(|s| open_of_filtering(&ps, s).ok().and_then(|u| x.open_index(u)))
        .collect();
    let iso = images.iter().all(Option::is_some)
        && (0..images.len()).all(|a| {
            (0..images.len()).all(|b| {
                loc.lattice.leq(a, b) == opens_lattice.leq(images[a].unwrap(), images[b].unwrap())
                    && loc.lattice.join(a, b) < images.len()
                    && images[loc.lattice.join(a, b)]
                        == Some(opens_lattice.join(images[a].unwrap(), images[b].unwrap()))
            })
        });
    if !iso {
        v.push(Violation::LocNotIsomorphicToOpens);
    }
    if let Err(e) = check_prime_point_duality(&loc.lattice) {
        v.push(Violation::Duality {
            lattice: "loc",
            detail: format!("{e:?}"),
        });
    }

    match loc.lattice.pt_space() {
        Ok(r) => {
            check.prime_count = r.len();
            check.homeomorphic_to_input = are_homeomorphic(x, &r).is_some();
            check.homeomorphic_to_sobrification = are_homeomorphic(&sob.space, &r).is_some();
            if sober && !check.homeomorphic_to_input {
                v.push(Violation::NotHomeomorphicToInput);
            }
            if !check.homeomorphic_to_sobrification {
                v.push(Violation::NotHomeomorphicToSobrification);
            }
            if loc.subsets.len() != x.opens().len() || r.len() != sob.space.len() {
                v.push(Violation::StageCounts {
                    loc: loc.subsets.len(),
                    opens: x.opens().len(),
                    primes: r.len(),
                    sob_points: sob.space.len(),
                });
            }
        }
        Err(e) => v.push(Violation::Reconstruction(format!("{e}"))),
    }

    check.violations = v;
    check
}
