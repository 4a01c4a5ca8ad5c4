//! Command-line front door: build the standard shapes, compute homotopy
//! posets, truncations, fibers, nerves and obstructions, and run the
//! acceptance suite. All configuration is via flags; identical invocations
//! produce byte-identical output.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gaunt_core::cells::BasePoint;
use gaunt_core::error::Error;
use gaunt_core::fiber::{les_exactness_check, oriented_right_fiber_pi0};
use gaunt_core::homotopy::{pi0, pi_n};
use gaunt_core::mapping::AdcMap;
use gaunt_core::poset::Poset;
use gaunt_core::shapes;
use gaunt_core::strat::{
    skeleton, stratified_nerve, verify_skeletal_pushout, wedge_cofiber_profile,
    brute_force_extensions, obstruction_poset, FunctorData,
};
use gaunt_core::truncation::{is_n_equivalence, is_n_full, truncate0, truncate1};
use gaunt_core::{Complex, Result};

#[derive(Parser)]
#[command(name = "gaunt", version, about = "Directed complexes and their homotopy posets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct Common {
    /// Coefficient bound for chain enumeration (saturation-checked).
    #[arg(long, default_value_t = 8)]
    cap: u32,
    /// Output format; DOT applies to poset-valued results.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Accepted for interface stability; no code path is randomized.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a shape: a spec, or suspend/wedge/tensor applied to specs.
    Build {
        /// e.g. `oriental:3`, `suspend disk:1`, `wedge disk:1 disk:1`,
        /// `tensor oriental:1 oriental:1`, or a JSON file path
        args: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// π₀ of a shape.
    Pi0 {
        shape: String,
        #[command(flatten)]
        common: Common,
    },
    /// πₙ of a shape at a basepoint.
    Pi {
        shape: String,
        #[arg(long)]
        n: usize,
        /// `a,b` object names, or a JSON basepoint (chain-pair array)
        #[arg(long)]
        basepoint: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// τ≤0 (poset) or τ≤1 (poset-enriched category) of a shape.
    Truncate {
        shape: String,
        #[arg(long, default_value_t = 0)]
        dim: usize,
        #[command(flatten)]
        common: Common,
    },
    /// n-fullness of a map (JSON file).
    CheckFull {
        map: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Whitehead n-equivalence of a map (JSON file).
    CheckEquivalence {
        map: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// π₀ of the oriented right fiber of a map over a target object.
    Fiber {
        map: String,
        #[arg(long)]
        over: String,
        /// Ask for the 2-cell witnesses in the opposite direction.
        #[arg(long, default_value_t = false)]
        reversed: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Elementwise exactness checks of the oriented sequence at n = 0 or 1.
    LesCheck {
        map: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        basepoint: String,
        #[command(flatten)]
        common: Common,
    },
    /// Bounded stratified nerve of a shape.
    Nerve {
        shape: String,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[command(flatten)]
        common: Common,
    },
    /// n-skeleton of the bounded nerve of a shape.
    Skeleton {
        shape: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Verify the skeletal pushout counts of the nerve of a shape.
    PushoutCheck {
        shape: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Sphere multiplicities of the skeletal cofiber of the nerve.
    Cofiber {
        shape: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Obstruction poset for extending a vertex assignment, with the
    /// brute-force oracle.
    Obstruct {
        source: String,
        target: String,
        /// vertex assignment, e.g. `0=0,1=2`
        #[arg(long)]
        assign: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run the full acceptance suite and print one line per criterion.
    Acceptance,
}

fn load_shape(spec: &str) -> Result<Complex> {
    if let Some((kind, arg)) = spec.split_once(':') {
        if let Ok(n) = arg.parse::<usize>() {
            match kind {
                "oriental" => return Ok(shapes::oriental(n)),
                "cube" => return cube_tensor(n),
                "disk" => return Ok(shapes::disk(n)),
                "boundary" => return Ok(shapes::boundary_disk(n)),
                _ => {}
            }
        }
    }
    Complex::from_json(&std::fs::read_to_string(spec)?)
}

/// The n-th Gray power of the arrow, so that `build cube:n` agrees byte for
/// byte with the iterated `build tensor oriental:1 …`.
fn cube_tensor(n: usize) -> Result<Complex> {
    if n == 0 {
        return Ok(shapes::point());
    }
    let mut t = shapes::oriental(1);
    for _ in 1..n {
        t = shapes::gray_tensor(&shapes::oriental(1), &t)?;
    }
    Ok(t)
}

fn load_map(path: &str) -> Result<AdcMap> {
    let text = std::fs::read_to_string(path)?;
    let map: AdcMap = serde_json::from_str(&text)?;
    map.require_valid()?;
    Ok(map)
}

fn object_index(x: &Complex, name: &str) -> Result<usize> {
    if let Some((0, i)) = x.lookup(name) {
        return Ok(i);
    }
    if let Ok(i) = name.parse::<usize>() {
        if i < x.generator_count(0) {
            return Ok(i);
        }
    }
    Err(Error::InvalidObject(format!("no object named {name}")))
}

fn parse_basepoint(x: &Complex, spec: Option<&str>, n: usize) -> Result<BasePoint> {
    let z = match spec {
        None => BasePoint::empty(),
        Some(t) if t.trim_start().starts_with('[') => {
            BasePoint::from_value(x, &serde_json::from_str(t)?)?
        }
        Some(t) => {
            let parts: Vec<&str> = t.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::InvalidBasepoint(format!(
                    "expected `a,b` or a JSON basepoint, got {t}"
                )));
            }
            BasePoint::objects(object_index(x, parts[0])?, object_index(x, parts[1])?)
        }
    };
    if z.len() != n {
        return Err(Error::InvalidBasepoint(format!(
            "π_{n} needs a basepoint of dimension {}, got dimension {}",
            n as i64 - 1,
            z.len() as i64 - 1
        )));
    }
    z.validate(x)?;
    Ok(z)
}

fn emit_poset(p: &Poset, name: &str, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(p)?),
        Format::Dot => print!("{}", p.to_dot(name)),
    }
    Ok(())
}

fn json_only(format: Format) -> Result<()> {
    if format == Format::Dot {
        return Err(Error::InvalidObject("DOT output applies to poset-valued results".into()));
    }
    Ok(())
}

/// Ok(true) = clean exit, Ok(false) = check failure (exit 1).
fn run(cmd: Cmd) -> Result<bool> {
    match cmd {
        Cmd::Build { args, common } => {
            json_only(common.format)?;
            let x = match args.first().map(String::as_str) {
                Some("suspend") if args.len() == 2 => shapes::suspension(&load_shape(&args[1])?),
                Some("wedge") if args.len() >= 3 => {
                    let factors: Vec<Complex> =
                        args[1..].iter().map(|s| load_shape(s)).collect::<Result<_>>()?;
                    shapes::wedge(&factors)?
                }
                Some("tensor") if args.len() == 3 => {
                    shapes::gray_tensor(&load_shape(&args[1])?, &load_shape(&args[2])?)?
                }
                Some(spec) if args.len() == 1 => load_shape(spec)?,
                _ => {
                    return Err(Error::InvalidObject(
                        "build takes a shape spec or suspend/wedge/tensor with shape specs".into(),
                    ))
                }
            };
            x.require_valid()?;
            println!("{}", x.to_json());
            Ok(true)
        }
        Cmd::Pi0 { shape, common } => {
            let x = load_shape(&shape)?;
            let p = pi0(&x, common.cap)?;
            emit_poset(&p.poset, "pi0", common.format)?;
            Ok(true)
        }
        Cmd::Pi { shape, n, basepoint, common } => {
            let x = load_shape(&shape)?;
            let z = parse_basepoint(&x, basepoint.as_deref(), n)?;
            let p = pi_n(&x, &z, common.cap)?;
            emit_poset(&p.poset, &format!("pi{n}"), common.format)?;
            Ok(true)
        }
        Cmd::Truncate { shape, dim, common } => {
            let x = load_shape(&shape)?;
            match dim {
                0 => {
                    let p = truncate0(&x, common.cap)?;
                    emit_poset(&p, "truncate0", common.format)?;
                }
                1 => {
                    json_only(common.format)?;
                    let t = truncate1(&x, common.cap)?;
                    let homs: Vec<Vec<&Poset>> =
                        t.homs.iter().map(|row| row.iter().map(|h| &h.poset).collect()).collect();
                    let v = serde_json::json!({ "objects": t.objects, "homs": homs });
                    println!("{}", serde_json::to_string_pretty(&v)?);
                }
                _ => {
                    return Err(Error::InvalidObject("truncate supports --dim 0 or 1".into()));
                }
            }
            Ok(true)
        }
        Cmd::CheckFull { map, n, common } => {
            json_only(common.format)?;
            let f = load_map(&map)?;
            let pass = is_n_full(&f, n, common.cap)?;
            println!("{}", serde_json::json!({ "check": "full", "n": n, "pass": pass }));
            Ok(pass)
        }
        Cmd::CheckEquivalence { map, n, common } => {
            json_only(common.format)?;
            let f = load_map(&map)?;
            let pass = is_n_equivalence(&f, n, common.cap)?;
            println!("{}", serde_json::json!({ "check": "equivalence", "n": n, "pass": pass }));
            Ok(pass)
        }
        Cmd::Fiber { map, over, reversed, common } => {
            let f = load_map(&map)?;
            let y = object_index(&f.target, &over)?;
            let fib = oriented_right_fiber_pi0(&f, y, common.cap, reversed)?;
            emit_poset(&fib.poset, "fiber", common.format)?;
            Ok(true)
        }
        Cmd::LesCheck { map, n, basepoint, common } => {
            json_only(common.format)?;
            let f = load_map(&map)?;
            let len = if n == 0 { 1 } else { 2 };
            let z = parse_basepoint(&f.source, Some(&basepoint), len)?;
            let r = les_exactness_check(&f, &z, n, common.cap)?;
            println!("{}", serde_json::to_string_pretty(&r)?);
            Ok(r.pass)
        }
        Cmd::Nerve { shape, dim, common } => {
            json_only(common.format)?;
            let x = load_shape(&shape)?;
            let s = stratified_nerve(&x, dim, common.cap)?;
            println!("{}", serde_json::to_string_pretty(&s.to_value())?);
            Ok(true)
        }
        Cmd::Skeleton { shape, n, dim, common } => {
            json_only(common.format)?;
            let x = load_shape(&shape)?;
            let s = stratified_nerve(&x, dim, common.cap)?;
            println!("{}", serde_json::to_string_pretty(&skeleton(&s, n).to_value())?);
            Ok(true)
        }
        Cmd::PushoutCheck { shape, n, dim, common } => {
            json_only(common.format)?;
            let x = load_shape(&shape)?;
            let s = stratified_nerve(&x, dim, common.cap)?;
            let r = verify_skeletal_pushout(&s, n);
            println!("{}", serde_json::to_string_pretty(&r)?);
            Ok(r.pass)
        }
        Cmd::Cofiber { shape, n, dim, common } => {
            json_only(common.format)?;
            let x = load_shape(&shape)?;
            let s = stratified_nerve(&x, dim, common.cap)?;
            let (cat, hom) = wedge_cofiber_profile(&s, n);
            println!(
                "{}",
                serde_json::json!({ "n": n, "categorical": cat, "homotopical": hom })
            );
            Ok(true)
        }
        Cmd::Obstruct { source, target, assign, n, common } => {
            json_only(common.format)?;
            let x = load_shape(&source)?;
            let y = load_shape(&target)?;
            let pairs: Vec<(String, String)> = assign
                .split(',')
                .map(|kv| {
                    kv.split_once('=')
                        .map(|(a, b)| (a.to_string(), b.to_string()))
                        .ok_or_else(|| Error::InvalidObject(format!("bad assignment {kv}")))
                })
                .collect::<Result<_>>()?;
            let borrowed: Vec<(&str, &str)> =
                pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let nerve = stratified_nerve(&x, n, common.cap)?;
            let f = FunctorData::on_objects(&nerve, &y, &borrowed)?;
            let assembled = obstruction_poset(&x, &y, &f, n, common.cap)?;
            let brute = brute_force_extensions(&x, &y, &f, n, common.cap)?;
            let agree = gaunt_core::poset::poset_iso(&assembled, &brute).is_some();
            let v = serde_json::json!({
                "obstruction": assembled,
                "brute_force": brute,
                "agree": agree,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(agree)
        }
        Cmd::Acceptance => {
            let outcomes = gaunt_core::acceptance::run_all();
            let mut pass = true;
            for o in &outcomes {
                let verdict = if o.pass { "PASS" } else { "FAIL" };
                println!("criterion {:>2} [{}] {} — {}", o.id, verdict, o.title, o.detail);
                pass &= o.pass;
            }
            Ok(pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::UnsaturatedEnumeration { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
