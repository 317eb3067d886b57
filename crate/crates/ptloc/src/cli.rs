//! The `ptloc` command line.
//!
//! Exit status is 0 on success, 1 for malformed input or arguments, and 2
//! when a verified property fails.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use ptloc_core::lattice::{open_set_lattice, sobrification, BoundedDistributiveLattice};
use ptloc_core::mask::SubsetMask;
use ptloc_core::reconstruct::verify_reconstruction_timed;
use ptloc_core::ring::{ring_from_descriptor, zariski_spectrum};
use ptloc_core::suite::Fault;
use ptloc_core::topology::{FiniteSpace, Topologies};

use crate::driver::{run_check, CheckOptions, DriverError};
use crate::format::{parse_document, parse_space, to_json, Document, FormatError, SpaceDoc};
use crate::StdClock;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_VIOLATION: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    /// Line-delimited JSON.
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "ptloc", version, about = "Reconstruct finite spaces from their support lattices")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Seed for random sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Lift the size guard on enumeration.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Zariski spectrum of a finite ring, e.g. `Z/12` or `F2[x]/(x^2+x+1)`.
    Spec { descriptor: String },
    /// Run the pipeline on a space file or a ring descriptor and verify it.
    Reconstruct { input: String },
    /// Print the sobrification of a space and its comparison map.
    Sobrify { space: String },
    /// List the proper primes and points of a lattice (or of a space's opens).
    Points { input: String },
    /// Check every invariant on all topologies up to a size.
    Check {
        #[arg(long)]
        max_points: usize,
        /// Skip sizes below this.
        #[arg(long, default_value_t = 0)]
        min_points: usize,
        /// Random spaces per size once sampling takes over.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// List all topologies on a number of points.
    Enumerate {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        t0: bool,
    },
}

#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<u8, InputError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let machine = cli.format == OutputFormat::Machine;
    let result = match &cli.command {
        Command::Spec { descriptor } => spec(descriptor, machine, out),
        Command::Reconstruct { input } => reconstruct(input, machine, out),
        Command::Sobrify { space } => sobrify(space, machine, out),
        Command::Points { input } => points(input, machine, out),
        Command::Check { max_points, min_points, samples, inject_fault } => {
            check(&cli, *min_points..=*max_points, *samples, *inject_fault, out)
        }
        Command::Enumerate { points, t0 } => enumerate(*points, *t0, cli.force, machine, out),
    };
    match result {
        Ok(code) => code,
        Err(InputError(msg)) => {
            if machine {
                let _ = writeln!(err, "{}", json!({ "error": msg }));
            } else {
                let _ = writeln!(err, "error: {msg}");
            }
            EXIT_INPUT
        }
    }
}

fn read_file(path: &str) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))
}

fn load_space(path: &str) -> Result<FiniteSpace, InputError> {
    parse_space(&read_file(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &str, e: FormatError) -> InputError {
    InputError(format!("{path}: {e}"))
}

fn set(x: &FiniteSpace, m: SubsetMask) -> String {
    let names: Vec<&str> = m.iter().map(|i| x.labels()[i].as_str()).collect();
    format!("{{{}}}", names.join(", "))
}

fn spec(descriptor: &str, machine: bool, out: &mut dyn Write) -> Outcome {
    let ring = ring_from_descriptor(descriptor)?;
    let x = zariski_spectrum(&ring)?;
    if machine {
        writeln!(out, "{}", json!({ "ring": ring.descriptor(), "size": ring.size(), "spectrum": SpaceDoc::from_space(&x) }))?;
    } else {
        writeln!(out, "ring {} ({} elements)", ring.descriptor(), ring.size())?;
        writeln!(out, "{} prime ideals: {}", x.len(), x.labels().join(", "))?;
        writeln!(out, "{}", to_json(&SpaceDoc::from_space(&x), true))?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ReportRecord {
    input: SpaceDoc,
    points: usize,
    opens: usize,
    t0: bool,
    sober: bool,
    ps: usize,
    loc: usize,
    primes: usize,
    loc_bijection: bool,
    prime_point_duality: bool,
    homeomorphic_to_input: bool,
    homeomorphic_to_sobrification: bool,
    witness: Option<Vec<usize>>,
    reconstructed: SpaceDoc,
    timings_ns: [u64; 4],
    ok: bool,
}

fn reconstruct(input: &str, machine: bool, out: &mut dyn Write) -> Outcome {
    let x = if Path::new(input).exists() {
        load_space(input)?
    } else {
        zariski_spectrum(&ring_from_descriptor(input)?)?
    };
    let report = verify_reconstruction_timed(&x, &StdClock::new())?;
    let sob_points = sobrification(&x).space.len();
    let ok = report.all_ok() && report.stage_invariants_hold(sob_points);
    let t = report.timings;
    if machine {
        let rec = ReportRecord {
            input: SpaceDoc::from_space(&x),
            points: report.points,
            opens: report.opens,
            t0: report.t0,
            sober: report.sober,
            ps: report.ps_size,
            loc: report.loc_size,
            primes: report.prime_count,
            loc_bijection: report.loc_bijection_ok,
            prime_point_duality: report.prime_point_roundtrip_ok,
            homeomorphic_to_input: report.homeomorphic_to_input,
            homeomorphic_to_sobrification: report.homeomorphic_to_sobrification,
            witness: report.witness.clone(),
            reconstructed: SpaceDoc::from_space(&report.reconstructed),
            timings_ns: [t.supports_ns, t.loc_ns, t.points_ns, t.verification_ns],
            ok,
        };
        writeln!(out, "{}", to_json(&rec, false))?;
    } else {
        let mut s = String::new();
        writeln!(s, "input: {} points, {} opens, t0={} sober={}", report.points, report.opens, report.t0, report.sober)?;
        writeln!(s, "supports: {}  filtering subsets: {}  proper primes: {}", report.ps_size, report.loc_size, report.prime_count)?;
        writeln!(s, "loc bijection: {}", report.loc_bijection_ok)?;
        writeln!(s, "prime/point duality: {}", report.prime_point_roundtrip_ok)?;
        writeln!(s, "homeomorphic to input: {}", report.homeomorphic_to_input)?;
        writeln!(s, "homeomorphic to sobrification: {}", report.homeomorphic_to_sobrification)?;
        if let Some(w) = &report.witness {
            let pairs: Vec<String> = w
                .iter()
                .enumerate()
                .map(|(i, &j)| format!("{} -> {}", x.labels()[i], report.reconstructed.labels()[j]))
                .collect();
            writeln!(s, "witness: {}", pairs.join(", "))?;
        }
        writeln!(
            s,
            "timings (us): supports {} loc {} points {} verification {}",
            t.supports_ns / 1000,
            t.loc_ns / 1000,
            t.points_ns / 1000,
            t.verification_ns / 1000
        )?;
        writeln!(s, "reconstructed:\n{}", to_json(&SpaceDoc::from_space(&report.reconstructed), true))?;
        writeln!(s, "{}", if ok { "ok" } else { "VIOLATION" })?;
        out.write_all(s.as_bytes())?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
}

fn sobrify(path: &str, machine: bool, out: &mut dyn Write) -> Outcome {
    let x = load_space(path)?;
    let sob = sobrification(&x);
    let sober = x.is_sober().is_sober();
    let consistent = (sob.injective && sob.surjective) == sober && (!sober || sob.homeomorphism);
    if machine {
        let rec = json!({
            "input": SpaceDoc::from_space(&x),
            "sobrification": SpaceDoc::from_space(&sob.space),
            "comparison": sob.comparison,
            "sober": sober,
            "injective": sob.injective,
            "surjective": sob.surjective,
            "homeomorphism": sob.homeomorphism,
            "injectivity_witness": sob.injectivity_witness,
            "surjectivity_witness": sob.surjectivity_witness,
        });
        writeln!(out, "{rec}")?;
    } else {
        let mut s = String::new();
        writeln!(s, "sober: {sober}")?;
        for (p, c) in sob.comparison.iter().enumerate() {
            let target = c.map_or("?".to_string(), |q| sob.space.labels()[q].clone());
            writeln!(s, "{} -> {} (complement of closure {})", x.labels()[p], target, set(&x, x.point_closure(p)))?;
        }
        writeln!(s, "injective: {}  surjective: {}  homeomorphism: {}", sob.injective, sob.surjective, sob.homeomorphism)?;
        if let Some((a, b)) = sob.injectivity_witness {
            writeln!(s, "not injective: {} and {} have the same closure", x.labels()[a], x.labels()[b])?;
        }
        if let Some(q) = sob.surjectivity_witness {
            writeln!(s, "not surjective: point {} is not hit", sob.space.labels()[q])?;
        }
        writeln!(s, "{}", to_json(&SpaceDoc::from_space(&sob.space), true))?;
        out.write_all(s.as_bytes())?;
    }
    Ok(if consistent { EXIT_OK } else { EXIT_VIOLATION })
}

fn points(path: &str, machine: bool, out: &mut dyn Write) -> Outcome {
    let text = read_file(path)?;
    let lattice: BoundedDistributiveLattice = match parse_document(&text).map_err(|e| in_file(path, e))? {
        Document::Lattice(l) => l,
        Document::Space(x) => open_set_lattice(&x),
    };
    let primes = lattice.proper_primes()?;
    let mut s = String::new();
    for p in &primes {
        let point = lattice.point_of_prime(p.index())?;
        let kernel: Vec<&str> = point.kernel().map(|e| lattice.labels()[e].as_str()).collect();
        if machine {
            writeln!(s, "{}", json!({ "prime": p.index(), "label": lattice.labels()[p.index()], "kernel": kernel }))?;
        } else {
            writeln!(s, "prime {} (element {}): point vanishing on {{{}}}", p.index(), lattice.labels()[p.index()], kernel.join(", "))?;
        }
    }
    if machine {
        writeln!(s, "{}", json!({ "elements": lattice.len(), "primes": primes.len() }))?;
    } else {
        writeln!(s, "{} elements, {} proper primes", lattice.len(), primes.len())?;
    }
    out.write_all(s.as_bytes())?;
    Ok(EXIT_OK)
}

fn check(cli: &Cli, sizes: std::ops::RangeInclusive<usize>, samples: usize, inject_fault: bool, out: &mut dyn Write) -> Outcome {
    let machine = cli.format == OutputFormat::Machine;
    let opts = CheckOptions {
        min_points: *sizes.start(),
        max_points: *sizes.end(),
        force: cli.force,
        seed: cli.seed,
        samples,
        fault: inject_fault.then_some(Fault::CorruptLocJoin),
    };
    let outcome = match run_check(&opts) {
        Ok(o) => o,
        Err(e @ DriverError::SeedRequired(_)) => return Err(InputError(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    let mut s = String::new();
    if machine {
        for r in &outcome.records {
            writeln!(s, "{}", to_json(r, false))?;
        }
        let summary = json!({
            "summary": {
                "sizes": outcome.sizes,
                "topologies": outcome.topologies(),
                "violations": outcome.violations(),
                "seed": outcome.seed,
            }
        });
        writeln!(s, "{summary}")?;
    } else {
        for r in outcome.records.iter().filter(|r| !r.violations.is_empty()) {
            writeln!(s, "violation: points={} index={} opens={:?}: {}", r.points, r.index, r.opens, r.violations.join("; "))?;
        }
        for z in &outcome.sizes {
            write!(s, "points={} topologies={} t0={} violations={}", z.points, z.topologies, z.t0, z.violations)?;
            if z.sampled {
                write!(s, " sampled seed={}", outcome.seed.unwrap_or_default())?;
            }
            if z.skipped > 0 {
                write!(s, " skipped={}", z.skipped)?;
            }
            writeln!(s)?;
        }
        writeln!(s, "total topologies={} violations={}", outcome.topologies(), outcome.violations())?;
    }
    out.write_all(s.as_bytes())?;
    Ok(if outcome.violations() == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

fn enumerate(n: usize, t0: bool, force: bool, machine: bool, out: &mut dyn Write) -> Outcome {
    let mut count = 0usize;
    for x in Topologies::new(n, t0, force)? {
        count += 1;
        let doc = SpaceDoc::from_space(&x);
        if machine {
            writeln!(out, "{}", to_json(&doc, false))?;
        } else {
            writeln!(out, "{:?}", doc.opens)?;
        }
    }
    if machine {
        writeln!(out, "{}", json!({ "summary": { "points": n, "t0": t0, "topologies": count } }))?;
    } else {
        writeln!(out, "topologies={count}")?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("ptloc").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn spec_of_z12() {
        let (code, out, _) = call(&["spec", "Z/12"]);
        assert_eq!(code, 0);
        assert!(out.contains("2 prime ideals: (3), (2)"), "{out}");
    }

    #[test]
    fn bad_descriptor_is_input_error() {
        let (code, _, err) = call(&["spec", "Z/0"]);
        assert_eq!(code, 1);
        assert!(err.contains("byte 2"), "{err}");
        let (code, _, err) = call(&["--format", "machine", "spec", "Z/x"]);
        assert_eq!(code, 1);
        assert!(serde_json::from_str::<serde_json::Value>(err.trim()).is_ok());
    }

    #[test]
    fn unknown_flag_is_input_error() {
        assert_eq!(call(&["check", "--bogus"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn enumerate_counts() {
        let (code, out, _) = call(&["enumerate", "--points", "3", "--t0"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("topologies=19\n"));
        assert_eq!(call(&["enumerate", "--points", "5"]).0, 1);
    }

    #[test]
    fn machine_check_lines_parse() {
        let (code, out, _) = call(&["--format", "machine", "check", "--max-points", "2"]);
        assert_eq!(code, 0);
        let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 1 + 1 + 4 + 1);
        assert_eq!(lines.last().unwrap()["summary"]["topologies"], 6);
    }
}
