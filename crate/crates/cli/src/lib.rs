//! Command-line front end for `liefusion-core`.

pub mod cache;
pub mod render;
pub mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use liefusion_core::fusion::{self, FusionMethod};
use liefusion_core::reduction::{self, ReductionTarget};
use liefusion_core::repbuilder;
use liefusion_core::{Error, LieContext, LieType, RootSystem, Weight};

use crate::cache::{DiskCache, CACHE_DIR_ENV};
use crate::render::q;
use crate::verify::{Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Truncated,
    KacWalton,
    StringCriterion,
    KspaceCorank,
}

#[derive(Debug, Parser)]
#[command(name = "liefusion", version, about = "Exact Lie algebra weights, tensor products and affine fusion rules")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Directory for cached weight systems and modules.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,

    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Refuse to build explicit modules larger than this.
    #[arg(long, global = true, default_value_t = repbuilder::DEFAULT_DIMENSION_CAP)]
    pub module_cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simple and positive roots.
    Roots { lie_type: LieType },
    /// Dominant weights with multiplicities and orbit sizes.
    Weights { lie_type: LieType, lambda: Weight },
    /// Dimension of an irreducible module.
    Dim { lie_type: LieType, lambda: Weight },
    /// Tensor product decomposition.
    Tensor { lie_type: LieType, lambda: Weight, mu: Weight },
    /// dim Hom(λ ⊗ μ, ν).
    Homdim { lie_type: LieType, lambda: Weight, mu: Weight, nu: Weight },
    /// Level-l fusion rules with a given charge.
    Fusion {
        lie_type: LieType,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        charge: Weight,
        mu: Weight,
        nu: Option<Weight>,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Least set of admissible weights closed under fusion with the generators.
    Closure {
        lie_type: LieType,
        #[arg(long)]
        level: u32,
        #[arg(long = "gen", required = true)]
        generators: Vec<Weight>,
    },
    /// K-space of L(λ) at weight ν−μ (F4).
    Kspace { lambda: Weight, mu: Weight, nu: Weight },
    /// Reduce a λ4-charged type to a fundamental type (F4).
    Reduce {
        #[arg(long)]
        level: u32,
        mu: Weight,
        nu: Weight,
    },
    /// Norms and cross pairing of F_ρ3 F_α v and F_ρ4 F_β v in L(λ4) (F4).
    #[command(name = "appendix-b")]
    AppendixB,
    /// Run the verification suite.
    #[command(name = "verify-paper")]
    VerifyPaper {
        #[arg(long)]
        json: bool,
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long, default_value_t = 2)]
        scan_max: i64,
        /// Report 0 for every elapsed time, for byte-stable output.
        #[arg(long)]
        no_timings: bool,
    },
}

/// Parsed output of a subcommand.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: EXIT_OK }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(s) => f.write_str(s),
        }
    }
}

/// Parses `argv`, runs the command and prints to stdout/stderr.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).expect("serializable")),
                Format::Text => out.text,
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush());
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn context(cli: &Cli, t: LieType) -> Result<LieContext, CliError> {
    let mut ctx = LieContext::new(t)?.with_module_cap(cli.module_cap);
    if !cli.no_cache {
        let dir = cli.cache_dir.clone().or_else(cache::default_cache_dir);
        if let Some(dir) = dir {
            if let Ok(store) = DiskCache::new(dir) {
                ctx = ctx.with_store(Arc::new(store));
            }
        }
    }
    Ok(ctx)
}

fn check_rank(rs: &RootSystem, ws: &[&Weight]) -> Result<(), CliError> {
    for w in ws {
        if w.rank() != rs.rank() {
            return Err(Error::DimensionMismatch { expected: rs.rank(), got: w.rank() }.into());
        }
    }
    Ok(())
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Roots { lie_type } => {
            let ctx = context(cli, *lie_type)?;
            let rs = ctx.root_system();
            Ok(Output::ok(render::roots_text(rs), render::roots_json(rs)))
        }
        Command::Weights { lie_type, lambda } => {
            let ctx = context(cli, *lie_type)?;
            check_rank(ctx.root_system(), &[lambda])?;
            let ws = ctx.weight_system(lambda)?;
            let rs = ctx.root_system();
            let mut rows: Vec<(&Weight, u64, u64)> = ws
                .dominant()
                .iter()
                .map(|(mu, &m)| (mu, m, ws.orbit_sizes().get(mu).copied().unwrap_or(0)))
                .collect();
            rows.sort_by_key(|(mu, _, _)| (std::cmp::Reverse(rs.level_int(mu)), (*mu).clone()));
            let mut text = format!(
                "L{} of {}: dimension {}, {} weights, {} dominant\n",
                lambda,
                lie_type,
                ws.total_dim(),
                ws.num_weights(),
                rows.len()
            );
            text.push_str("dominant weight   multiplicity  orbit size\n");
            for (mu, m, o) in &rows {
                text.push_str(&format!("{:<17} {:>12}  {:>10}\n", mu.to_string(), m, o));
            }
            let json = json!({
                "type": lie_type.to_string(),
                "highest_weight": lambda.coords(),
                "dim": ws.total_dim(),
                "num_weights": ws.num_weights(),
                "dominant": rows.iter().map(|(mu, m, o)| json!({"weight": mu.coords(), "multiplicity": m, "orbit_size": o})).collect::<Vec<_>>(),
            });
            Ok(Output::ok(text, json))
        }
        Command::Dim { lie_type, lambda } => {
            let ctx = context(cli, *lie_type)?;
            check_rank(ctx.root_system(), &[lambda])?;
            let d = ctx.dim(lambda)?;
            Ok(Output::ok(format!("{d}\n"), json!({"type": lie_type.to_string(), "highest_weight": lambda.coords(), "dim": d})))
        }
        Command::Tensor { lie_type, lambda, mu } => {
            let ctx = context(cli, *lie_type)?;
            check_rank(ctx.root_system(), &[lambda, mu])?;
            let d = ctx.decompose(lambda, mu)?;
            let line = render::decomposition_line(&ctx, lambda, mu, &d.components);
            Ok(Output::ok(format!("{line}\n"), render::decomposition_json(&ctx, lambda, mu, &d.components)))
        }
        Command::Homdim { lie_type, lambda, mu, nu } => {
            let ctx = context(cli, *lie_type)?;
            check_rank(ctx.root_system(), &[lambda, mu, nu])?;
            let h = ctx.hom_dim(lambda, mu, nu)?;
            Ok(Output::ok(
                format!("{h}\n"),
                json!({"type": lie_type.to_string(), "lambda": lambda.coords(), "mu": mu.coords(), "nu": nu.coords(), "hom_dim": h}),
            ))
        }
        Command::Fusion { lie_type, level, charge, mu, nu, method } => {
            let ctx = context(cli, *lie_type)?;
            check_rank(ctx.root_system(), &[charge, mu])?;
            fusion_command(&ctx, *level, charge, mu, nu.as_ref(), *method)
        }
        Command::Closure { lie_type, level, generators } => {
            let ctx = context(cli, *lie_type)?;
            let gens: Vec<&Weight> = generators.iter().collect();
            check_rank(ctx.root_system(), &gens)?;
            let rs = ctx.root_system();
            let mut c: Vec<Weight> = fusion::fusion_closure(&ctx, *level, generators)?.into_iter().collect();
            c.sort_by_key(|w| (rs.level_int(w), w.clone()));
            let all = fusion::admissible_set(rs, *level).len();
            let names: Vec<String> = c.iter().map(|w| w.compact()).collect();
            let text = format!("{} of {} admissible weights: {}\n", c.len(), all, names.join(" "));
            let json = json!({
                "type": lie_type.to_string(),
                "level": level,
                "generators": generators.iter().map(|g| g.coords()).collect::<Vec<_>>(),
                "closure": c.iter().map(|w| w.coords()).collect::<Vec<_>>(),
                "admissible": all,
            });
            Ok(Output::ok(text, json))
        }
        Command::Kspace { lambda, mu, nu } => {
            let ctx = context(cli, LieType::F4)?;
            let rs = ctx.root_system();
            check_rank(rs, &[lambda, mu, nu])?;
            let m = ctx.module(lambda)?;
            let k = repbuilder::kspace(rs, &m, mu, nu)?;
            let text = format!(
                "weight {}: dim {}, rank K {}, corank {}\n",
                k.weight,
                k.ambient_dim,
                k.rank(),
                k.corank()
            );
            let json = json!({
                "lambda": lambda.coords(), "mu": mu.coords(), "nu": nu.coords(),
                "weight": k.weight.coords(),
                "weight_space_dim": k.ambient_dim,
                "rank": k.rank(),
                "corank": k.corank(),
            });
            Ok(Output::ok(text, json))
        }
        Command::Reduce { level, mu, nu } => {
            let ctx = context(cli, LieType::F4)?;
            check_rank(ctx.root_system(), &[mu, nu])?;
            let c = reduction::reduce_to_fundamental(&ctx, *level, mu, nu)?;
            let target = match c.target {
                ReductionTarget::Fundamental(i) => format!("fundamental type ({i})"),
                ReductionTarget::AdjointOf(i) => format!("adjoint of fundamental type ({i})"),
                ReductionTarget::ZeroRule => "fusion rule 0".to_string(),
            };
            let mut text = format!("{} over {} at level {}: N = {}, {}\n", c.nu, c.mu, c.level, c.rule, target);
            if c.target != ReductionTarget::ZeroRule {
                text.push_str(&format!(
                    "  target {} over {} at level {} (N = {}), ρ = {}\n  rule bound {}, shift {}\n",
                    c.nu0,
                    c.mu0,
                    c.target_level,
                    c.target_rule,
                    c.rho,
                    ok(c.rule_bound),
                    ok(c.shift_ok)
                ));
            }
            let json = serde_json::to_value(&c).expect("serializable");
            Ok(Output::ok(text, json))
        }
        Command::AppendixB => {
            let ctx = context(cli, LieType::F4)?;
            let m = ctx.module(&Weight::fundamental(4, 3))?;
            let p = repbuilder::pairing_report(ctx.root_system(), &m)?;
            let text = format!(
                "‖F_ρ3 F_α v‖² = {}\n‖F_ρ4 F_β v‖² = {}\n|⟨F_ρ3 F_α v | F_ρ4 F_β v⟩| = {}\n",
                q(&p.norm3),
                q(&p.norm4),
                q(&p.cross_abs)
            );
            Ok(Output::ok(text, json!({"norm_rho3": q(&p.norm3), "norm_rho4": q(&p.norm4), "cross_abs": q(&p.cross_abs)})))
        }
        Command::VerifyPaper { json, only, scan_max, no_timings } => {
            if let Some(ids) = only {
                let known = verify::check_ids();
                if let Some(bad) = ids.iter().find(|i| !known.contains(&i.as_str())) {
                    return Err(CliError::Usage(format!("unknown check id `{bad}`; known ids: {}", known.join(", "))));
                }
            }
            let suite = Suite { f4: context(cli, LieType::F4)? };
            let opts = VerifyOptions { only: only.clone(), scan_max: *scan_max, timings: !no_timings };
            let report = verify::run(&suite, &opts);
            let code = if report.failed() { EXIT_CHECK_FAILED } else { EXIT_OK };
            let value = serde_json::to_value(&report).expect("serializable");
            let text = if *json {
                format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
            } else {
                report.to_text()
            };
            Ok(Output { text, json: value, code })
        }
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn fusion_command(
    ctx: &LieContext,
    level: u32,
    charge: &Weight,
    mu: &Weight,
    nu: Option<&Weight>,
    method: MethodArg,
) -> Result<Output, CliError> {
    let rs = ctx.root_system();
    let value_at = |nu: &Weight| -> Result<(u64, FusionMethod), CliError> {
        Ok(match method {
            MethodArg::Auto => {
                let r = fusion::fusion(ctx, level, charge, mu, nu)?;
                (r.value, r.method)
            }
            MethodArg::Truncated => (fusion::fusion_unit_charge(ctx, level, charge, mu, nu)?.value, FusionMethod::Truncated),
            MethodArg::KacWalton => (fusion::fusion_general(ctx, level, charge, mu, nu)?.value, FusionMethod::KacWalton),
            MethodArg::StringCriterion => {
                require_l4(charge)?;
                (fusion::string_criterion(ctx, mu, nu)?, FusionMethod::StringCriterion)
            }
            MethodArg::KspaceCorank => {
                require_l4(charge)?;
                let m = ctx.module(charge)?;
                (repbuilder::fusion_via_kspace(rs, &m, mu, nu)?, FusionMethod::KspaceCorank)
            }
        })
    };
    match nu {
        Some(nu) => {
            check_rank(rs, &[nu])?;
            let (v, m) = value_at(nu)?;
            Ok(Output::ok(
                format!("N = {v}  ({m})\n"),
                json!({"level": level, "charge": charge.coords(), "mu": mu.coords(), "nu": nu.coords(), "value": v, "method": m}),
            ))
        }
        None => {
            let table: BTreeMap<Weight, u64> = match method {
                MethodArg::Auto | MethodArg::KacWalton => fusion::fusion_product(ctx, level, charge, mu)?,
                _ => {
                    let mut t = BTreeMap::new();
                    for nu in fusion::admissible_set(rs, level) {
                        let (v, _) = value_at(&nu)?;
                        if v > 0 {
                            t.insert(nu, v);
                        }
                    }
                    t
                }
            };
            let mut rows: Vec<(&Weight, &u64)> = table.iter().collect();
            rows.sort_by_key(|(w, _)| (rs.level_int(w), (*w).clone()));
            let mut text = format!("{} ⊠ {} at level {}:\n", charge.compact(), mu.compact(), level);
            for (w, n) in &rows {
                text.push_str(&format!("  N^{} = {}\n", w.compact(), n));
            }
            let json = json!({
                "level": level,
                "charge": charge.coords(),
                "mu": mu.coords(),
                "rules": rows.iter().map(|(w, n)| json!({"nu": w.coords(), "value": n})).collect::<Vec<_>>(),
            });
            Ok(Output::ok(text, json))
        }
    }
}

fn require_l4(charge: &Weight) -> Result<(), CliError> {
    if *charge != Weight::fundamental(4, 3) {
        return Err(CliError::Usage("this method needs charge 0,0,0,1".to_string()));
    }
    Ok(())
}
