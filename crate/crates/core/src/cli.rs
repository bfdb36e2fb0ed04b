//! Command-line front end. Every subcommand is a thin adapter over the library.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::milnor::{self, MilnorSymbolSum};
use crate::patching::Patcher;
use crate::rep::{RepKind, Representation};
use crate::ring::decompose::PatchingDatum;
use crate::ring::milnor_square::{e_projection, l_projection, milnor_square_pullback};
use crate::ring::Ring;
use crate::roots::{RootSystem, RootSystemType};
use crate::selftest::selftest;
use crate::simplicial::{self, MooreGenerator};
use crate::words::SteinbergWord;

#[derive(Parser, Debug)]
#[command(name = "steinberg-lab", version, about = "Exact computations with Steinberg groups")]
struct Cli {
    /// Seed for every randomized sweep.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Human-oriented output (indented JSON, aligned tables).
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List roots, or structure constants with --constants.
    Roots {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        constants: bool,
    },
    /// Word utilities.
    Word {
        #[command(subcommand)]
        op: WordOp,
    },
    /// Evaluate a word in a representation.
    Eval {
        #[command(flatten)]
        word: WordInput,
        #[arg(long, default_value = "adjoint")]
        rep: String,
        /// Exit 1 unless the matrix is the identity.
        #[arg(long)]
        check_identity: bool,
    },
    /// Milnor K2 of the rationals.
    K2m {
        #[command(subcommand)]
        op: K2mOp,
    },
    /// The standard simplicial ring and Moore-complex lifts.
    Simplicial {
        #[command(subcommand)]
        op: SimplicialOp,
    },
    /// Patching for B = Z, A = Z[1/a], h = b.
    Patch {
        #[command(subcommand)]
        op: PatchOp,
    },
    /// Pull back (x, g) along the Milnor square of R = Z and a.
    MilnorSquare {
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        x: String,
        /// A polynomial in t over R[1/a] with g(0) = x.
        #[arg(long)]
        g: String,
    },
    /// Run every module's checks.
    Selftest {
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Args, Debug)]
struct WordInput {
    /// JSON file (or inline JSON) holding a word document or a bare letter list.
    #[arg(long)]
    word: String,
    /// Ring for bare letter lists, overriding the document.
    #[arg(long)]
    ring: Option<String>,
    /// Root system for bare letter lists, overriding the document.
    #[arg(long)]
    phi: Option<String>,
}

#[derive(Subcommand, Debug)]
enum WordOp {
    /// Evaluate in the adjoint representation.
    Eval {
        #[command(flatten)]
        word: WordInput,
    },
    /// Sort letters with R2/R3.
    Reduce {
        #[command(flatten)]
        word: WordInput,
    },
    /// Build the symbol {u, v} on a root.
    Symbol {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        phi: String,
        /// Root coordinates such as e1-e2; defaults to the first simple root.
        #[arg(long)]
        root: Option<String>,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
}

#[derive(Subcommand, Debug)]
enum K2mOp {
    /// Tame symbol at an odd prime, e.g. --symbol "2,3" --prime 3.
    Tame {
        #[arg(long, required_unless_present = "batch")]
        symbol: Option<String>,
        #[arg(long, required_unless_present = "batch")]
        prime: Option<u64>,
        /// JSON list of {"symbol": ..., "prime": ...}.
        #[arg(long)]
        batch: Option<String>,
    },
    /// Normal form of a symbol sum.
    Normalize {
        #[arg(long)]
        symbol: String,
    },
}

#[derive(Subcommand, Debug)]
enum SimplicialOp {
    /// Simplicial identities up to level nmax.
    Check {
        #[arg(long, default_value_t = 3)]
        nmax: usize,
        #[arg(long, default_value = "Z")]
        ring: String,
    },
    /// Lift a level-1 Moore generator (a word over R[t1]) to level 2.
    Lift {
        #[command(flatten)]
        word: WordInput,
    },
}

#[derive(Subcommand, Debug)]
enum PatchOp {
    /// Glue a kernel word over A down to B.
    Demo {
        #[command(flatten)]
        datum: DatumArgs,
        /// Word over A (JSON).
        #[arg(long)]
        word: String,
        /// Word over B used when the orbit representative does not descend.
        #[arg(long)]
        certificate: Option<String>,
    },
    /// Sweeps of the conjugation homomorphisms and the operators T.
    Verify {
        #[command(flatten)]
        datum: DatumArgs,
        /// Only the relation sweeps R1-R3.
        #[arg(long)]
        relations: bool,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Args, Debug)]
struct DatumArgs {
    #[arg(long = "B", default_value = "int")]
    b_ring: String,
    #[arg(long, default_value_t = 2)]
    a: i64,
    #[arg(long, default_value_t = 3)]
    b: i64,
    #[arg(long, default_value = "A3")]
    phi: String,
}

/// Outcome of a command: text to print and whether a verification failed.
struct Output {
    text: String,
    failed: bool,
}

/// Run with `argv` (including the program name), writing to stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run_with(argv, &mut out, &mut err)
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.text.trim_end());
            i32::from(o.failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit(cli: &Cli, j: &Json) -> String {
    if cli.pretty {
        serde_json::to_string_pretty(j).expect("json")
    } else {
        j.to_string()
    }
}

fn ok(text: String) -> Result<Output> {
    Ok(Output { text, failed: false })
}

/// `int`, `Fp:7`, or anything [`Ring::parse_spec`] accepts.
fn parse_ring(s: &str) -> Result<Ring> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("int") {
        return Ok(Ring::integers());
    }
    if let Some(p) = s.strip_prefix("Fp:") {
        let p = p.parse().map_err(|_| Error::Parse(format!("bad prime in {s:?}")))?;
        return Ring::prime_field(p);
    }
    Ring::parse_spec(s)
}

fn read_json(arg: &str) -> Result<Json> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

fn load_word(w: &WordInput) -> Result<SteinbergWord> {
    let ring = w.ring.as_deref().map(parse_ring).transpose()?;
    let phi = w.phi.as_deref().map(RootSystem::parse).transpose()?;
    let j = read_json(&w.word)?;
    let word = SteinbergWord::from_json_document(&j, ring.as_ref(), phi.as_ref())?;
    match &ring {
        Some(r) if word.ring() != r => word.coerce_into(r),
        _ => Ok(word),
    }
}

fn parse_rep(name: &str, phi: &RootSystem) -> Result<Representation> {
    let kind = match name {
        "adjoint" => RepKind::Adjoint,
        "defining" | "standard" | "vector" => match phi.system_type() {
            RootSystemType::A => RepKind::DefiningA,
            RootSystemType::D => RepKind::VectorD,
        },
        _ => return Err(Error::Parse(format!("unknown representation {name:?}"))),
    };
    Representation::new(kind, phi)
}

fn table(cli: &Cli, header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut s = String::new();
    if cli.pretty {
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for r in &rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: Vec<String>| {
            cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ")
        };
        s.push_str(&line(header.iter().map(|h| h.to_string()).collect()));
        s.push('\n');
        for r in rows {
            s.push_str(line(r).trim_end());
            s.push('\n');
        }
    } else {
        for r in rows {
            s.push_str(&r.join("\t"));
            s.push('\n');
        }
    }
    s
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Roots { ty, rank, constants } => {
            let phi = RootSystem::parse(&format!("{ty}{rank}"))?;
            if *constants {
                // One row per unordered pair; N_βα = −N_αβ.
                let rows = phi
                    .constants_table()
                    .into_iter()
                    .filter(|(a, b, _, _)| a < b)
                    .map(|(a, b, c, n)| {
                        vec![
                            phi.root(a).to_string(),
                            phi.root(b).to_string(),
                            phi.root(c).to_string(),
                            format!("{n:+}"),
                        ]
                    })
                    .collect();
                ok(table(cli, &["alpha", "beta", "alpha+beta", "N"], rows))
            } else {
                let rows = (0..phi.len())
                    .map(|i| {
                        let coeffs: Vec<String> = phi.simple_coefficients(i).iter().map(|c| c.to_string()).collect();
                        vec![i.to_string(), phi.root(i).to_string(), coeffs.join(","), phi.is_positive(i).to_string()]
                    })
                    .collect();
                ok(table(cli, &["index", "root", "simple", "positive"], rows))
            }
        }
        Command::Word { op } => match op {
            WordOp::Eval { word } => {
                let w = load_word(word)?;
                ok(emit(cli, &Representation::adjoint(w.system()).evaluate(&w).to_json()))
            }
            WordOp::Reduce { word } => ok(emit(cli, &load_word(word)?.commutator_reduce().to_json_document())),
            WordOp::Symbol { ring, phi, root, u, v } => {
                let ring = parse_ring(ring)?;
                let phi = RootSystem::parse(phi)?;
                let root = match root {
                    Some(r) => phi.parse_root(r)?,
                    None => phi.simple_roots()[0],
                };
                let w = SteinbergWord::symbol(&ring, &phi, root, &ring.parse(u)?, &ring.parse(v)?)?;
                ok(emit(cli, &w.to_json_document()))
            }
        },
        Command::Eval { word, rep, check_identity } => {
            let w = load_word(word)?;
            let m = parse_rep(rep, w.system())?.evaluate(&w);
            let identity = m.is_identity();
            let mut j = m.to_json();
            j["identity"] = json!(identity);
            Ok(Output { text: emit(cli, &j), failed: *check_identity && !identity })
        }
        Command::K2m { op } => k2m(cli, op),
        Command::Simplicial { op } => match op {
            SimplicialOp::Check { nmax, ring } => {
                let r = simplicial::simplicial_identity_check(&parse_ring(ring)?, *nmax)?;
                let j = json!({"check": "simplicial-identities", "samples": r.checks, "failures": r.failures.len(), "details": r.failures});
                Ok(Output { text: emit(cli, &j), failed: !r.passed() })
            }
            SimplicialOp::Lift { word } => {
                let w = load_word(word)?;
                let gen = MooreGenerator::recognize(&w)?;
                let lift = simplicial::moore_lift(&gen)?;
                let check = simplicial::check_lift(&gen, &lift)?;
                let passed = check.passed(gen.g.is_empty());
                let j = json!({"lift": lift.word.to_json_document(), "check": check, "passed": passed});
                Ok(Output { text: emit(cli, &j), failed: !passed })
            }
        },
        Command::Patch { op } => patch(cli, op),
        Command::MilnorSquare { ring, a, x, g } => {
            let r = parse_ring(ring)?;
            let a = r.parse(a)?;
            let ra = Ring::localization(&r, &a)?;
            let rat = Ring::polynomial(&ra, &["t"])?;
            let (x, g) = (r.parse(x)?, rat.parse(g)?);
            let z = milnor_square_pullback(&x, &g)?;
            let (e, l) = (e_projection(&z)?, l_projection(&z)?);
            let round_trip = e == x && l == g;
            let j = json!({"pullback": z.to_json(), "e": e.to_string(), "l": l.to_string(), "round_trip": round_trip});
            Ok(Output { text: emit(cli, &j), failed: !round_trip })
        }
        Command::Selftest { quick } => {
            let checks = selftest(*quick, cli.seed);
            let failed = checks.iter().any(|c| !c.passed);
            let text = if cli.pretty {
                let rows = checks
                    .iter()
                    .map(|c| {
                        let status = if c.passed { "ok" } else { "FAIL" };
                        vec![status.to_string(), c.module.to_string(), c.op.to_string(), c.detail.clone()]
                    })
                    .collect();
                table(cli, &["status", "module", "op", "detail"], rows)
            } else {
                serde_json::to_string(&checks).expect("json")
            };
            Ok(Output { text, failed })
        }
    }
}

fn k2m(cli: &Cli, op: &K2mOp) -> Result<Output> {
    let q = Ring::rationals();
    match op {
        K2mOp::Tame { symbol, prime, batch } => {
            if let Some(path) = batch {
                let items = read_json(path)?;
                let items = items.as_array().ok_or_else(|| Error::Parse("batch must be a JSON list".into()))?;
                let mut out = Vec::new();
                for it in items {
                    let s = it["symbol"].as_str().ok_or_else(|| Error::Parse(format!("no symbol in {it}")))?;
                    let p = it["prime"].as_u64().ok_or_else(|| Error::Parse(format!("no prime in {it}")))?;
                    let t = milnor::tame_symbol(&MilnorSymbolSum::parse(&q, s)?, p)?;
                    out.push(json!({"symbol": s, "prime": p, "value": t.value}));
                }
                return ok(emit(cli, &Json::Array(out)));
            }
            let (Some(s), Some(p)) = (symbol, prime) else {
                return Err(Error::Parse("--symbol and --prime are required".into()));
            };
            let t = milnor::tame_symbol(&MilnorSymbolSum::parse(&q, s)?, *p)?;
            ok(t.value.to_string())
        }
        K2mOp::Normalize { symbol } => {
            let s = milnor::symbol_normalize(&MilnorSymbolSum::parse(&q, symbol)?);
            ok(if cli.pretty { s.to_string() } else { s.to_json().to_string() })
        }
    }
}

fn patcher(d: &DatumArgs) -> Result<Patcher> {
    let base = parse_ring(&d.b_ring)?;
    let phi = RootSystem::parse(&d.phi)?;
    let datum = PatchingDatum::zariski(&base, &base.from_i64(d.a), &base.from_i64(d.b))?;
    Patcher::new(datum, &phi)
}

fn patch(cli: &Cli, op: &PatchOp) -> Result<Output> {
    match op {
        PatchOp::Demo { datum, word, certificate } => {
            let p = patcher(datum)?;
            let x = SteinbergWord::from_json_document(&read_json(word)?, Some(p.a_ring()), Some(p.system()))?;
            let cert = certificate
                .as_deref()
                .map(|c| SteinbergWord::from_json_document(&read_json(c)?, Some(p.b_ring()), Some(p.system())))
                .transpose()?;
            let o = p.glueing_demo(&x, cert.as_ref())?;
            let j = json!({
                "y": o.y.to_json_document(),
                "descended": o.descended,
                "pair": {"u": o.pair.u.to_string(), "v": o.pair.v.to_string()},
                "normalized": {"u": o.normalized.u.to_string(), "v": o.normalized.v.to_string()},
            });
            ok(emit(cli, &j))
        }
        PatchOp::Verify { datum, relations, samples } => {
            let p = patcher(datum)?;
            let reports = if *relations {
                let t = p.verify_t_relations(*samples, cli.seed);
                vec![t.r1, t.r2, t.r3]
            } else {
                p.verify_all(*samples, cli.seed)?
            };
            let failed = reports.iter().any(|r| !r.passed());
            let j = Json::Array(reports.iter().map(|r| r.to_json()).collect());
            Ok(Output { text: emit(cli, &j), failed })
        }
    }
}
