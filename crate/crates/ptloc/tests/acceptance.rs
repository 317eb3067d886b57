//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ptloc_core::lattice::{
    check_prime_point_duality, open_set_lattice, points_brute_force, sobrification,
    BoundedDistributiveLattice,
};
use ptloc_core::loc::{
    filtering_subsets, filtering_subsets_brute_force, join_direct, join_transport, loc_as_lattice,
    BRUTE_FORCE_LIMIT,
};
use ptloc_core::reconstruct::{loc_bijection_holds, verify_reconstruction};
use ptloc_core::ring::poly::Poly;
use ptloc_core::ring::{ring_from_descriptor, zariski_spectrum, FiniteRing};
use ptloc_core::support::thomason_supports;
use ptloc_core::topology::{all_topologies, t0_topologies, FiniteSpace};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn corpus() -> Vec<FiniteSpace> {
    (0..=4).flat_map(|n| all_topologies(n, false).unwrap()).collect()
}

fn show(x: &FiniteSpace) -> String {
    format!("{:?}", x.opens())
}

fn reconstruction_of_t0_spaces() -> Verdict {
    let start = Instant::now();
    let (three, four) = (t0_topologies(3, false).unwrap(), t0_topologies(4, false).unwrap());
    if (three.len(), four.len()) != (19, 219) {
        return Err(format!("expected 19/219 T0 topologies, got {}/{}", three.len(), four.len()));
    }
    for x in three.iter().chain(&four) {
        let report = verify_reconstruction(x).map_err(|e| format!("{}: {e}", show(x)))?;
        let r = &report.reconstructed;
        let w = report.witness.as_ref().ok_or_else(|| format!("{}: no homeomorphism", show(x)))?;
        // the witness must be a bijection carrying opens exactly onto opens
        let mut hit = vec![false; r.len()];
        for &j in w {
            hit[j] = true;
        }
        let bijective = w.len() == x.len() && r.len() == x.len() && hit.iter().all(|&h| h);
        let transported = x.opens().iter().all(|&u| r.is_open(FiniteSpace::map_subset(w, u)))
            && x.opens().len() == r.opens().len();
        if !bijective || !transported {
            return Err(format!("{}: witness {w:?} is not a homeomorphism", show(x)));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!("19 + 219 T0 spaces reconstructed with witnesses in {elapsed:.2?}"))
}

fn loc_bijection() -> Verdict {
    let (three, four) = (all_topologies(3, false).unwrap(), all_topologies(4, false).unwrap());
    if (three.len(), four.len()) != (29, 355) {
        return Err(format!("expected 29/355 topologies, got {}/{}", three.len(), four.len()));
    }
    for x in three.iter().chain(&four) {
        let ps = thomason_supports(x);
        if loc_bijection_holds(&ps) != Ok(true) {
            return Err(format!("{}: f and g are not inverse order isomorphisms", show(x)));
        }
    }
    Ok("f∘g = id, g∘f = id and order reflection on 29 + 355 spaces".into())
}

fn sobrification_comparison() -> Verdict {
    let mut non_sober = 0;
    for x in corpus() {
        let sober = x.is_sober().is_sober();
        if sober != x.is_t0() {
            return Err(format!("{}: sober={sober} but t0={}", show(&x), x.is_t0()));
        }
        let s = sobrification(&x);
        if (s.injective && s.surjective) != sober || (sober && !s.homeomorphism) {
            return Err(format!("{}: comparison map disagrees with soberness", show(&x)));
        }
        if !sober {
            non_sober += 1;
            let injectivity = s
                .injectivity_witness
                .is_some_and(|(a, b)| a != b && s.comparison[a] == s.comparison[b]);
            let surjectivity = s
                .surjectivity_witness
                .is_some_and(|q| !s.comparison.contains(&Some(q)));
            if !injectivity && !surjectivity {
                return Err(format!("{}: no failure witness", show(&x)));
            }
        }
    }
    Ok(format!("comparison map bijective exactly on sober spaces; {non_sober} non-sober witnesses"))
}

fn duality(l: &BoundedDistributiveLattice) -> Result<(), String> {
    check_prime_point_duality(l).map_err(|e| format!("{e:?}"))?;
    for p in l.proper_primes().map_err(|e| e.to_string())? {
        let point = l.point_of_prime(p.index()).map_err(|e| e.to_string())?;
        if l.prime_of_point(&point).map_err(|e| e.to_string())? != p {
            return Err(format!("prime {} does not round trip", p.index()));
        }
    }
    for point in points_brute_force(l).ok_or("lattice too large to scan")? {
        let p = l.prime_of_point(&point).map_err(|e| e.to_string())?;
        if l.point_of_prime(p.index()).map_err(|e| e.to_string())? != point {
            return Err(format!("point {:?} does not round trip", point.values()));
        }
    }
    Ok(())
}

fn prime_point_duality() -> Verdict {
    let mut lattices = 0;
    for x in corpus() {
        duality(&open_set_lattice(&x)).map_err(|e| format!("opens of {}: {e}", show(&x)))?;
        let loc = loc_as_lattice(&thomason_supports(&x)).map_err(|e| e.to_string())?;
        duality(&loc.lattice).map_err(|e| format!("Loc of {}: {e}", show(&x)))?;
        lattices += 2;
    }
    Ok(format!("{lattices} lattices"))
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn ring_descriptors() -> Vec<String> {
    let mut base: Vec<(String, usize)> = (1..=36).map(|n| (format!("Z/{n}"), n)).collect();
    for p in (2..=32u64).filter(|&p| is_prime(p)) {
        let mut size = p as usize;
        let mut d = 1;
        while size <= 32 {
            for f in Poly::monic_of_degree(d, p) {
                base.push((format!("F{p}[x]/({f})"), size));
            }
            d += 1;
            size *= p as usize;
        }
    }
    let factors: Vec<&(String, usize)> = base.iter().filter(|(_, s)| *s >= 2).collect();
    let mut products = Vec::new();
    for (i, (a, sa)) in factors.iter().enumerate() {
        for (b, sb) in &factors[i..] {
            if sa * sb <= 36 {
                products.push(format!("{a} x {b}"));
            }
        }
    }
    base.into_iter().map(|(d, _)| d).chain(products).collect()
}

fn ring_oracle() -> Verdict {
    let descriptors = ring_descriptors();
    for d in &descriptors {
        let r: FiniteRing = ring_from_descriptor(d).map_err(|e| format!("{d}: {e}"))?;
        let structured = r.prime_ideals_structured().ok_or_else(|| format!("{d}: no structured path"))?;
        let generic = r.prime_ideals_generic().map_err(|e| format!("{d}: {e}"))?;
        if structured != generic {
            return Err(format!("{d}: structured {} primes, generic {}", structured.len(), generic.len()));
        }
    }
    let points = |d: &str| zariski_spectrum(&ring_from_descriptor(d).unwrap()).unwrap().len();
    let (z12, z8) = (points("Z/12"), points("Z/8"));
    if (z12, z8) != (2, 1) {
        return Err(format!("Spec Z/12 has {z12} points, Spec Z/8 has {z8}"));
    }
    Ok(format!("{} rings agree; Spec Z/12 = 2 points, Spec Z/8 = 1", descriptors.len()))
}

fn filter_fast_path() -> Verdict {
    let mut checked = 0;
    for x in corpus() {
        let ps = thomason_supports(&x);
        if ps.len() > BRUTE_FORCE_LIMIT {
            continue;
        }
        let brute = filtering_subsets_brute_force(&ps).map_err(|e| e.to_string())?;
        if brute != filtering_subsets(&ps) {
            return Err(format!("{}: enumerations differ", show(&x)));
        }
        checked += 1;
    }
    Ok(format!("{checked} support posets"))
}

fn join_consistency() -> Verdict {
    let mut pairs = 0;
    for x in corpus() {
        let ps = thomason_supports(&x);
        let subsets = filtering_subsets(&ps);
        for a in &subsets {
            for b in &subsets {
                let t = join_transport(&ps, a, b).map_err(|e| e.to_string())?;
                if t != join_direct(&ps, a, b) {
                    return Err(format!("{}: joins differ", show(&x)));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn cli_contract() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_ptloc");
    let ok = Command::new(bin).args(["check", "--max-points", "3"]).output().map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&ok.stdout);
    if ok.status.code() != Some(0) || !stdout.contains("points=3 topologies=29 ") {
        return Err(format!("check exited {:?}: {stdout}", ok.status.code()));
    }
    let bad = Command::new(bin)
        .args(["check", "--max-points", "3", "--inject-fault"])
        .output()
        .map_err(|e| e.to_string())?;
    if bad.status.code() != Some(2) {
        return Err(format!("fault run exited {:?}", bad.status.code()));
    }
    Ok("clean run exits 0 with 29 topologies; mutated join table exits 2".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("reconstruction of T0 spaces", reconstruction_of_t0_spaces),
        ("Loc bijection", loc_bijection),
        ("sobrification comparison", sobrification_comparison),
        ("prime/point duality", prime_point_duality),
        ("ring oracle", ring_oracle),
        ("filter fast path", filter_fast_path),
        ("join consistency", join_consistency),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
