//! Argument parsing and dispatch for `gtutte`. Output goes to the writer given
//! to [`run`]; the exit code is 0 on success, 1 when a requested verification
//! fails, and 2 on usage or data errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use genus_tutte::codes::{self, CodeManifest, LinearCode};
use genus_tutte::constructions;
use genus_tutte::covers::{self, Cover};
use genus_tutte::iso::is_equivalent;
use genus_tutte::reconstruct::{self, MonomialList};
use genus_tutte::selfcheck::{self, Status};
use genus_tutte::tutte::GenusJob;
use genus_tutte::{Matroid, SparsePoly};

#[derive(Parser, Debug)]
#[command(name = "gtutte", version, about = "Genus-g Tutte polynomials of matroids and related tools")]
pub struct Cli {
    /// Tuple budget for genus-g enumeration (default: $GTUTTE_BUDGET or 2^26).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Worker threads for enumeration.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::CanonicalPoly)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    CanonicalPoly,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Equal,
    Distinct,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Uniform,
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "S'", aliases = ["s'", "s-prime"])]
    SPrime,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum WeightMode {
    Direct,
    Greene,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum HostArg {
    Cycle,
    Path,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print T^(g) (or R^(g) with --whitney) of a matroid file.
    Tutte {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long, default_value_t = 1)]
        g: usize,
        /// Print the Whitney rank generating function instead.
        #[arg(long)]
        whitney: bool,
        /// Print the monomial list (exponents with tuple counts) as JSON.
        #[arg(long, conflicts_with = "whitney")]
        monomials: bool,
    },
    /// Compare T^(g) of two matroids and print the difference when nonzero.
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = 1)]
        g: usize,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Write a named matroid as JSON.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Scale: ground set n for uniform, 2n for R and Q, 4n for S and S'.
        #[arg(long)]
        n: usize,
        /// Rank, for the uniform family.
        #[arg(long)]
        r: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rebuild a matroid from its monomials at genus |B(M)|.
    Reconstruct {
        /// Round-trip a matroid file and check equivalence.
        #[arg(long, conflicts_with = "monomials")]
        matroid: Option<PathBuf>,
        /// JSON monomial list.
        #[arg(long)]
        monomials: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
    },
    /// Build or verify a 2-fold intersecting cover.
    Cover {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = HostArg::Cycle)]
        host: HostArg,
        /// Verify this cover file instead of building one.
        #[arg(long, conflicts_with = "n")]
        verify: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Weight enumerators and Type II check for a code.
    Code {
        /// Generator rows, one per line.
        #[arg(long)]
        gen: PathBuf,
        /// Manifest {q, n, k, name}; defaults to the rows file with a .json extension if present.
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, value_enum, default_value_t = WeightMode::Both)]
        weight_enum: WeightMode,
        #[arg(long)]
        type2: bool,
    },
    /// Linear independence of the genus-1 Tutte polynomials of several codes.
    Witt {
        #[arg(long, num_args = 1.., required = true)]
        gens: Vec<PathBuf>,
        #[arg(long, default_value_t = 2)]
        q: u32,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Directory holding typeii16/ and typeii24/ code data.
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long)]
        only: Option<u8>,
        #[arg(long)]
        timings: bool,
    },
}

/// A validated job: the parsed command plus checked global settings.
#[derive(Debug)]
pub struct JobConfig {
    pub cli: Cli,
}

impl JobConfig {
    pub fn budget(&self) -> Option<u64> {
        self.cli.budget
    }
}

/// Parses and validates arguments without touching the file system.
pub fn parse_job<I, T>(args: I) -> Result<JobConfig, String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| e.to_string())?;
    if cli.budget == Some(0) {
        return Err("budget must be positive".into());
    }
    if cli.threads == Some(0) {
        return Err("thread count must be positive".into());
    }
    let genus = match &cli.command {
        Command::Tutte { g, .. } | Command::Compare { g, .. } => Some(*g),
        Command::Reconstruct { g, .. } => *g,
        _ => None,
    };
    if genus == Some(0) {
        return Err("genus must be at least 1".into());
    }
    if let Command::Selftest { only: Some(k), .. } = &cli.command {
        if !(1..=13).contains(k) {
            return Err(format!("no criterion {k}"));
        }
    }
    Ok(JobConfig { cli })
}

/// Runs `gtutte` with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let job = match Cli::try_parse_from(&args) {
        Ok(_) => match parse_job(&args) {
            Ok(job) => job,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
        },
        Err(e) => {
            // Help and version go to stdout with success.
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match execute(&job, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_matroid(path: &Path) -> Result<Matroid> {
    Matroid::from_json(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn job_for(job: &JobConfig, m: &Matroid, g: usize) -> Result<GenusJob> {
    let mut j = GenusJob::new(m, g)?.threads(job.cli.threads);
    if let Some(b) = job.budget() {
        j = j.budget(b);
    }
    Ok(j)
}

fn emit_poly(out: &mut dyn Write, format: Format, label: &str, p: &SparsePoly) -> Result<()> {
    match format {
        Format::CanonicalPoly => writeln!(out, "{}", p.to_text())?,
        Format::Json => writeln!(out, "{}", p.to_json())?,
        Format::Human => writeln!(out, "{label} ({} terms):\n{}", p.len(), p.to_text())?,
    }
    Ok(())
}

fn write_or_print(out: &mut dyn Write, output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display()))?,
        None => writeln!(out, "{text}")?,
    }
    Ok(())
}

fn load_code(gen: &Path, manifest: Option<&Path>, q: u32) -> Result<LinearCode> {
    let rows = read(gen)?;
    let sidecar = gen.with_extension("json");
    let manifest = manifest.map(Path::to_path_buf).or_else(|| sidecar.is_file().then_some(sidecar));
    match manifest {
        Some(m) => Ok(CodeManifest::parse(&read(&m)?)?.load(&rows)?),
        None => {
            let name = gen.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok(LinearCode::new(name, codes::parse_rows(&rows, q)?))
        }
    }
}

/// `Ok(false)` means a verification the user asked for did not hold.
fn execute(job: &JobConfig, out: &mut dyn Write) -> Result<bool> {
    let format = job.cli.format;
    match &job.cli.command {
        Command::Tutte { matroid, g, whitney, monomials } => {
            let m = load_matroid(matroid)?;
            let j = job_for(job, &m, *g)?;
            if *monomials {
                let list = MonomialList {
                    g: *g,
                    n: m.size(),
                    monomials: j
                        .whitney_counts()?
                        .entries
                        .into_iter()
                        .map(|(exps, tuple_count)| reconstruct::MonomialWitness { exps, tuple_count })
                        .collect(),
                };
                writeln!(out, "{}", list.to_json())?;
            } else if *whitney {
                emit_poly(out, format, &format!("R^({g})"), &j.whitney_g()?)?;
            } else {
                emit_poly(out, format, &format!("T^({g})"), &j.tutte_g()?)?;
            }
            Ok(true)
        }
        Command::Compare { a, b, g, expect } => {
            let ta = job_for(job, &load_matroid(a)?, *g)?.tutte_g()?;
            let tb = job_for(job, &load_matroid(b)?, *g)?.tutte_g()?;
            let diff = &ta - &tb;
            let equal = diff.is_zero();
            match format {
                Format::Json => writeln!(out, "{{\"equal\":{equal},\"difference\":{}}}", diff.to_json())?,
                _ => {
                    writeln!(out, "{}", if equal { "equal" } else { "distinct" })?;
                    if !equal {
                        writeln!(out, "{}", diff.to_text())?;
                    }
                }
            }
            Ok(match expect {
                None => true,
                Some(Expect::Equal) => equal,
                Some(Expect::Distinct) => !equal,
            })
        }
        Command::Construct { family, n, r, output } => {
            let m = match family {
                Family::Uniform => {
                    let r = r.context("--r is required for the uniform family")?;
                    if r > *n || *n > genus_tutte::subset::MAX_GROUND {
                        bail!("uniform({r}, {n}) is out of range");
                    }
                    constructions::uniform(r, *n)
                }
                Family::R => constructions::construct_r(*n)?,
                Family::Q => constructions::construct_q(*n)?,
                Family::S => constructions::construct_s(*n)?,
                Family::SPrime => constructions::construct_s_prime(*n)?,
            };
            write_or_print(out, output.as_deref(), &m.to_json())?;
            Ok(true)
        }
        Command::Reconstruct { matroid, monomials, n, g } => {
            if let Some(path) = matroid {
                let m = load_matroid(path)?;
                let back = reconstruct::round_trip(&m)?;
                let ok = is_equivalent(&back, &m)?;
                write!(out, "{}", back.canonical_dump())?;
                writeln!(out, "{}", if ok { "equivalent" } else { "NOT equivalent" })?;
                return Ok(ok);
            }
            let path = monomials.as_ref().context("give --matroid or --monomials")?;
            let list = MonomialList::from_json(&read(path)?)?;
            let n = n.unwrap_or(list.n);
            let g = g.unwrap_or(list.g);
            if n != list.n || g != list.g {
                bail!("--n/--g disagree with the monomial file ({}, {})", list.n, list.g);
            }
            let m = reconstruct::reconstruct(list.monomials, n, g)?;
            write!(out, "{}", m.canonical_dump())?;
            Ok(true)
        }
        Command::Cover { n, host, verify, output } => {
            if let Some(path) = verify {
                let c = Cover::from_json(&read(path)?)?;
                let cert = covers::verify_cover(&c);
                match &cert {
                    covers::Certificate::Valid(_) => writeln!(out, "valid: {} sets on {:?} {}", c.len(), c.host, c.n)?,
                    covers::Certificate::Uncovered(e) => writeln!(out, "invalid: edge {e:?} has no witness pair")?,
                }
                return Ok(cert.is_valid());
            }
            let n = n.context("give --n or --verify")?;
            let cycle = covers::cover_cycle(n)?;
            let c = match host {
                HostArg::Cycle => cycle,
                HostArg::Path => covers::cycle_to_path(&cycle)?,
            };
            let ok = covers::verify_cover(&c).is_valid();
            write_or_print(out, output.as_deref(), &c.to_json())?;
            Ok(ok)
        }
        Command::Code { gen, manifest, q, weight_enum, type2 } => {
            let c = load_code(gen, manifest.as_deref(), *q)?;
            writeln!(out, "code {}: q={} n={} k={}", c.name, c.q(), c.length(), c.dimension())?;
            let mut ok = true;
            let direct = matches!(weight_enum, WeightMode::Direct | WeightMode::Both)
                .then(|| codes::weight_enumerator_direct(&c))
                .transpose()?;
            let greene = matches!(weight_enum, WeightMode::Greene | WeightMode::Both)
                .then(|| codes::weight_enumerator_via_greene(&c))
                .transpose()?;
            if let Some(w) = &direct {
                writeln!(out, "direct: {:?}", w.coefficients)?;
            }
            if let Some(w) = &greene {
                writeln!(out, "greene: {:?}", w.coefficients)?;
            }
            if let (Some(a), Some(b)) = (&direct, &greene) {
                ok &= a == b;
                writeln!(out, "{}", if a == b { "enumerators agree" } else { "enumerators DIFFER" })?;
            }
            if *type2 {
                writeln!(out, "type II: {}", codes::is_type_ii(&c)?)?;
            }
            Ok(ok)
        }
        Command::Witt { gens, q } => {
            let list = gens.iter().map(|p| load_code(p, None, *q)).collect::<Result<Vec<_>>>()?;
            let (rank, verdict) = codes::witt_independence(&list)?;
            writeln!(out, "rank {rank} of {}: {verdict:?}", list.len())?;
            Ok(true)
        }
        Command::Selftest { data, only, timings } => {
            let cfg = selfcheck::Config { data_dir: data.clone() };
            let ids: Vec<u8> = match only {
                Some(k) => vec![*k],
                None => (1..=13).collect(),
            };
            let mut ok = true;
            for id in ids {
                let o = selfcheck::run(id, &cfg);
                ok &= o.status != Status::Fail;
                writeln!(out, "{}", o.line(*timings))?;
            }
            Ok(ok)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_accept_both_cases() {
        for (name, fam) in [("R", Family::R), ("r", Family::R), ("S'", Family::SPrime), ("s-prime", Family::SPrime)] {
            let job = parse_job(["gtutte", "construct", "--family", name, "--n", "3"]).unwrap();
            assert!(matches!(job.cli.command, Command::Construct { family, .. } if family == fam));
        }
    }

    #[test]
    fn globals_may_follow_the_subcommand() {
        let job = parse_job(["gtutte", "selftest", "--threads", "2", "--budget", "9"]).unwrap();
        assert_eq!((job.cli.threads, job.budget()), (Some(2), Some(9)));
        assert!(parse_job(["gtutte", "reconstruct", "--g", "0"]).is_err());
    }
}
