//! The `fqhc` command line. [`run`] returns the process exit code: 0 on
//! success, 1 when a verification fails, 2 on usage or parameter errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::code::{LinearCode, Weight, DEFAULT_BUDGET};
use crate::decode::{
    for_each_vector, list_size_profile, pauli_channel_trial, quantum_list_decode,
    verify_list_decodable, ExhaustiveDecoder, Mode,
};
use crate::folding::{orbit_chains, FoldedCode, HermitianAutomorphism};
use crate::hermitian::HermitianCurve;
use crate::quantum::{
    ea_params, fqhc_construct, table1, table1_from_matrices, Table1Row, TABLE1_ROWS,
};
use crate::verify::{duality_sweep, run_all, VerifyOptions};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecodeMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Parser)]
#[command(name = "fqhc", version, about = "Folded quantum Hermitian codes")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// A field element code given on the command line, or `auto`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Element {
    Auto,
    Code(u16),
}

impl Element {
    fn code(self) -> Option<u16> {
        match self {
            Element::Auto => None,
            Element::Code(c) => Some(c),
        }
    }
}

fn parse_element(s: &str) -> Result<Element, String> {
    if s == "auto" {
        return Ok(Element::Auto);
    }
    s.parse::<u16>()
        .map(Element::Code)
        .map_err(|_| format!("expected an element code or `auto`, got `{s}`"))
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("expected a rational like 1/4, got `{s}`");
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d): (i64, i64) = (n.parse().map_err(|_| bad())?, d.parse().map_err(|_| bad())?);
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => s.parse::<i64>().map(Rational::from).map_err(|_| bad()),
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct SigmaArgs {
    /// Element code of δ, or `auto`.
    #[arg(long, default_value = "auto", value_parser = parse_element)]
    pub delta: Element,
    /// Element code of μ, or `auto`.
    #[arg(long, default_value = "auto", value_parser = parse_element)]
    pub mu: Element,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Affine points of the Hermitian curve over GF(q²).
    Points {
        #[arg(long)]
        q: u32,
    },
    /// The one-point code C(D, rP∞) in sorted point order.
    Code {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        export_matrix: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        exact_distance_budget: u64,
    },
    /// Checks dual(C(D, rP∞)) = C(D, αP∞) for every r in range.
    DualCheck {
        #[arg(long)]
        q: u32,
    },
    /// Folds C(D, rP∞) along the orbits of σ_{δ,μ}.
    Fold {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        sigma: SigmaArgs,
    },
    /// Folded quantum Hermitian code CSS(C(D, r1P∞), C(D, r2P∞)).
    Fqhc {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        r2: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        sigma: SigmaArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        exact_distance_budget: u64,
    },
    /// Rows of the folded Hermitian parameter table.
    Table1 {
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        m: Option<usize>,
        /// Derive dimensions from generator matrices (q <= 8).
        #[arg(long)]
        matrix: bool,
    },
    /// Entanglement-assisted parameters for two folded codes.
    Ea {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        r2: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        sigma: SigmaArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        exact_distance_budget: u64,
    },
    /// Largest list size of a folded code at a block radius.
    #[command(group(ArgGroup::new("rad").args(["radius", "tau"])))]
    Listdecode {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        /// Absolute number of blocks; omit for the whole profile.
        #[arg(long)]
        radius: Option<usize>,
        /// Relative radius, converted to ⌊τN⌋ blocks.
        #[arg(long, value_parser = parse_rational)]
        tau: Option<Rational>,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: DecodeMode,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        sigma: SigmaArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Quantum list decoding: syndrome pair to paired Pauli candidates.
    #[command(group(ArgGroup::new("how").args(["all_syndromes", "seed"]).required(true)))]
    Qdecode {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        r2: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        all_syndromes: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        /// Folded weight of each planted error.
        #[arg(long, default_value_t = 1)]
        weight: usize,
        #[command(flatten)]
        sigma: SigmaArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Runs every acceptance check; exits 1 if any fails.
    VerifyAll {
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        #[arg(long)]
        skip_q16_rank: bool,
    },
}

enum Outcome {
    Ok,
    Failed,
}

type CmdResult = Result<Outcome, Box<dyn std::error::Error>>;

/// Parses `argv` (program name first), runs the command, writes to stdout.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = run_to(argv, &mut out);
    let _ = out.flush();
    code
}

/// [`run`] with output sent to `out`; errors go to stderr.
pub fn run_to<I, T, W>(argv: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let mut text = String::new();
    let result = execute(&cfg, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn sigma_for(
    curve: &HermitianCurve,
    m: usize,
    args: &SigmaArgs,
) -> Result<HermitianAutomorphism, Box<dyn std::error::Error>> {
    Ok(match (args.delta.code(), args.mu.code()) {
        (None, None) => HermitianAutomorphism::default_for(curve, m)?,
        (delta, mu) => {
            let delta = delta.unwrap_or(0);
            let mu = match mu {
                Some(mu) => mu,
                None => {
                    let sols = curve.field().solve_mu_constraint(delta, curve.q())?;
                    // With δ = 0 the least solution is μ = 0, the identity.
                    let pick = sols
                        .iter()
                        .copied()
                        .find(|&mu| delta != 0 || mu != 0 || m == 1);
                    pick.unwrap_or(sols[0])
                }
            };
            HermitianAutomorphism::on(curve, delta, mu)?
        }
    })
}

fn num_den(r: Rational) -> String {
    format!("{} {}", r.numer(), r.denom())
}

fn opt(d: Option<usize>) -> String {
    d.map_or("-".to_string(), |d| d.to_string())
}

fn execute(cfg: &RunConfig, o: &mut String) -> CmdResult {
    let records = cfg.format == Format::Records;
    match &cfg.command {
        Command::Points { q } => {
            let curve = HermitianCurve::new(*q)?;
            writeln!(o, "{}", curve.field().descriptor())?;
            for p in curve.points() {
                if records {
                    writeln!(o, "{} {}", p.x, p.y)?;
                } else {
                    writeln!(o, "{p}")?;
                }
            }
            if !records {
                writeln!(o, "{} affine points, genus {}", curve.len(), curve.genus())?;
            }
        }
        Command::Code {
            q,
            r,
            export_matrix,
            exact_distance_budget,
        } => {
            let curve = HermitianCurve::new(*q)?;
            let code = LinearCode::hermitian(&curve, *r)?;
            let d = code.min_distance(*exact_distance_budget, Weight::Symbol)?;
            if records {
                writeln!(
                    o,
                    "{} {} {} {}",
                    code.len(),
                    code.dim(),
                    d.value(),
                    u8::from(d.is_exact())
                )?;
            } else {
                let label = code.label().unwrap_or("code");
                writeln!(o, "{label}: [{}, {}, {d}]", code.len(), code.dim())?;
            }
            if let Some(path) = export_matrix {
                code.write_export(BufWriter::new(File::create(path)?))?;
            }
        }
        Command::DualCheck { q } => {
            let sweep = duality_sweep(*q)?;
            let failures = sweep.iter().filter(|t| !t.2).count();
            for (r, alpha, ok) in &sweep {
                if records {
                    writeln!(o, "{r} {alpha} {}", u8::from(*ok))?;
                } else {
                    writeln!(o, "r={r} α={alpha} {}", if *ok { "pass" } else { "FAIL" })?;
                }
            }
            if !records {
                writeln!(o, "{} values of r, {failures} failures", sweep.len())?;
            }
            if failures > 0 {
                return Ok(Outcome::Failed);
            }
        }
        Command::Fold { q, r, m, sigma } => {
            let curve = HermitianCurve::new(*q)?;
            let s = sigma_for(&curve, *m, sigma)?;
            let chains = orbit_chains(&s, &curve, *m)?;
            let fc = FoldedCode::hermitian(&curve, *r, &chains)?;
            if !records {
                writeln!(
                    o,
                    "σ(δ={}, μ={}) of order {}",
                    s.delta(),
                    s.mu(),
                    s.order(&curve)
                )?;
            }
            for chain in chains.chains() {
                let pts = chain.iter().map(|&i| curve.points()[i]);
                let line: Vec<String> = if records {
                    pts.map(|p| format!("{} {}", p.x, p.y)).collect()
                } else {
                    pts.map(|p| p.to_string()).collect()
                };
                writeln!(o, "{}", line.join(" "))?;
            }
            if records {
                let d = fc.designed_distance().unwrap_or(0);
                writeln!(o, "{} {} {d}", fc.len(), num_den(fc.dimension()))?;
            } else {
                writeln!(o, "{}", fc.triple())?;
            }
        }
        Command::Fqhc {
            q,
            r1,
            r2,
            m,
            sigma,
            exact_distance_budget,
        } => {
            let curve = HermitianCurve::new(*q)?;
            let s = sigma_for(&curve, *m, sigma)?;
            let f = fqhc_construct(&curve, *r1, *r2, *m, Some(s), *exact_distance_budget)?;
            let css = &f.css;
            let sym = css.symbol_distance().flatten();
            let blk = css.block_distance().flatten();
            if records {
                writeln!(
                    o,
                    "{} {} {} {} {}",
                    css.length(),
                    num_den(css.dimension()),
                    f.formula.distance_bound,
                    opt(sym),
                    opt(blk)
                )?;
            } else {
                writeln!(o, "σ(δ={}, μ={}), m = {m}", f.sigma.delta(), f.sigma.mu())?;
                writeln!(o, "C1 = C(D, {r1}P∞) folded: {}", f.c1.triple())?;
                writeln!(o, "C2 = C(D, {r2}P∞) folded: {}", f.c2.triple())?;
                writeln!(
                    o,
                    "C2^⊥ = C(D, {}P∞) ⊆ C1; folded dual of C2 equals fold of C2^⊥: {}",
                    f.formula.alpha,
                    if f.fold_dual_commutes { "yes" } else { "NO" }
                )?;
                writeln!(o, "{} (designed distances)", f.formula.quantum())?;
                writeln!(
                    o,
                    "exact min{{wt(C1 \\ C2^⊥), wt(C2 \\ C1^⊥)}}: {} counting coordinates, {} counting blocks",
                    opt(sym),
                    opt(blk)
                )?;
            }
            if !f.fold_dual_commutes || !f.matches_formula() {
                return Ok(Outcome::Failed);
            }
        }
        Command::Table1 { q, m, matrix } => {
            let rows: Vec<Table1Row> = TABLE1_ROWS
                .iter()
                .filter(|(rq, rm)| q.is_none_or(|q| q == *rq) && m.is_none_or(|m| m == *rm))
                .map(|&(rq, rm)| {
                    if *matrix && rq <= 8 {
                        table1_from_matrices(rq, rm).map(|(row, _)| row)
                    } else {
                        table1(rq, rm)
                    }
                })
                .collect::<Result<_, _>>()?;
            if rows.is_empty() {
                return Err(format!("no table row for q = {q:?}, m = {m:?}").into());
            }
            if !records {
                writeln!(o, "{:<6} {:<3} {:<26} Q", "q", "m", "C_i folded")?;
            }
            for row in rows {
                if records {
                    writeln!(o, "{}", row.record())?;
                } else {
                    writeln!(
                        o,
                        "{:<6} {:<3} {:<26} {}",
                        row.q,
                        row.m,
                        row.classical.to_string(),
                        row.quantum
                    )?;
                }
            }
        }
        Command::Ea {
            q,
            r1,
            r2,
            m,
            sigma,
            exact_distance_budget,
        } => {
            let curve = HermitianCurve::new(*q)?;
            let s = sigma_for(&curve, *m, sigma)?;
            let chains = orbit_chains(&s, &curve, *m)?;
            let a = FoldedCode::hermitian(&curve, *r1, &chains)?;
            let b = FoldedCode::hermitian(&curve, *r2, &chains)?;
            let ea = ea_params(&a, &b, *exact_distance_budget)?;
            if records {
                writeln!(
                    o,
                    "{} {} {} {:?} {}",
                    ea.length,
                    num_den(ea.dimension),
                    num_den(ea.ebits),
                    ea.case,
                    ea.distance
                )?;
            } else {
                writeln!(o, "{ea} ({:?})", ea.case)?;
            }
        }
        Command::Listdecode {
            q,
            r,
            m,
            radius,
            tau,
            mode,
            trials,
            seed,
            sigma,
            budget,
        } => {
            let curve = HermitianCurve::new(*q)?;
            let s = sigma_for(&curve, *m, sigma)?;
            let chains = orbit_chains(&s, &curve, *m)?;
            let fc = FoldedCode::hermitian(&curve, *r, &chains)?;
            let radius = match (radius, tau) {
                (Some(r), _) => Some(*r),
                (None, Some(t)) => Some(
                    (*t * Rational::from(fc.len() as i64))
                        .floor()
                        .to_integer()
                        .max(0) as usize,
                ),
                (None, None) => None,
            };
            let mode = match mode {
                DecodeMode::Exhaustive => Mode::Exhaustive,
                DecodeMode::Sampled => Mode::Sampled {
                    trials: *trials,
                    seed: *seed,
                },
            };
            let results = match (radius, mode) {
                (Some(rad), _) => vec![verify_list_decodable(&fc, rad, mode, *budget)?],
                (None, Mode::Exhaustive) => {
                    let profile = list_size_profile(&fc, *budget)?;
                    (0..profile.len())
                        .map(|rad| verify_list_decodable(&fc, rad, mode, *budget))
                        .collect::<Result<_, _>>()?
                }
                (None, _) => return Err("sampled mode needs --radius or --tau".into()),
            };
            for ls in results {
                if records {
                    writeln!(
                        o,
                        "{} {} {}",
                        ls.radius,
                        ls.max_list,
                        u8::from(ls.certified)
                    )?;
                } else {
                    let over = if ls.certified {
                        "cosets"
                    } else {
                        "sampled words"
                    };
                    writeln!(
                        o,
                        "radius {}: L = {} ({} over {} {over})",
                        ls.radius,
                        ls.max_list,
                        ls.label(),
                        ls.received_words
                    )?;
                }
            }
        }
        Command::Qdecode {
            q,
            r1,
            r2,
            m,
            radius,
            all_syndromes,
            seed,
            trials,
            weight,
            sigma,
            budget,
        } => {
            let curve = HermitianCurve::new(*q)?;
            let s = sigma_for(&curve, *m, sigma)?;
            let f = fqhc_construct(&curve, *r1, *r2, *m, Some(s), *budget)?;
            let css = &f.css;
            let dec = ExhaustiveDecoder { budget: *budget };
            if *all_syndromes {
                let l = list_size_profile(&f.c1, *budget)?[(*radius).min(f.c1.len())]
                    .max(list_size_profile(&f.c2, *budget)?[(*radius).min(f.c2.len())]);
                let field = css.c1().field().clone();
                let (mut pairs, mut worst, mut over) = (0u64, 0usize, 0u64);
                let mut err = None;
                for_each_vector(&field, css.c1_dual().dim(), |sx| {
                    for_each_vector(&field, css.c2_dual().dim(), |sz| match quantum_list_decode(
                        css, sx, sz, *radius, &dec,
                    ) {
                        Ok(list) => {
                            pairs += 1;
                            worst = worst.max(list.len());
                            over += u64::from(list.len() > l * l);
                            ControlFlow::Continue(())
                        }
                        Err(e) => {
                            err = Some(e);
                            ControlFlow::Break(())
                        }
                    });
                    if err.is_some() {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                if let Some(e) = err {
                    return Err(e.into());
                }
                if records {
                    writeln!(o, "{radius} {pairs} {worst} {l} {over}")?;
                } else {
                    writeln!(
                        o,
                        "radius {radius}: {pairs} syndrome pairs, largest list {worst}, classical L = {l}, {over} above L²"
                    )?;
                }
                if over > 0 {
                    return Ok(Outcome::Failed);
                }
            } else {
                let base = seed.expect("clap requires --seed or --all-syndromes");
                if !records {
                    writeln!(o, "seed weight listsize recovered")?;
                }
                for t in 0..*trials {
                    let rec = pauli_channel_trial(css, *weight, *radius, base + t, &dec)?;
                    writeln!(o, "{}", rec.record())?;
                }
            }
        }
        Command::VerifyAll {
            budget,
            skip_q16_rank,
        } => {
            let opts = VerifyOptions {
                budget: *budget,
                full_rank_q16: !skip_q16_rank,
            };
            let reports = run_all(&opts);
            for r in &reports {
                if records {
                    writeln!(o, "{} {}", r.id, u8::from(r.passed))?;
                } else {
                    writeln!(o, "{r}")?;
                }
            }
            if reports.iter().any(|r| !r.passed) {
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Ok)
}
