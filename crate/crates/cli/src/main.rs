//! `wforge`: synthesize qudit circuits, simulate them, and run the named
//! verification suites.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wforge_core::circuit::Circuit;
use wforge_core::gates::{GateKind, GateSpec, LevelResult};
use wforge_core::sim::{apply_circuit, PureState, StateKind, DEFAULT_TOL};
use wforge_core::synth::{self, ChMode};
use wforge_core::verify;
use wforge_core::Registry;

#[derive(Parser)]
#[command(name = "wforge", version, about = "qudit circuit synthesis and verification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a construction: write its circuit document and print a report.
    Synth(SynthArgs),
    /// Apply a circuit document to an input state, optionally post-select and
    /// compare against a target state.
    Simulate(SimulateArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Classify a primitive gate in the Clifford hierarchy.
    Level(LevelArgs),
    /// Resource counts of a circuit document.
    Count(CountArgs),
    /// Post-selection plan for an arbitrary-size W state.
    Plan(PlanArgs),
}

#[derive(Args)]
struct SynthArgs {
    /// Construction name: p1 | cgp | zcx | kcx | gadget | pointphase |
    /// cztau | ch | och | kch | wprime | spread | qspread | wtree | qwtree |
    /// mixed
    #[arg(long)]
    kind: String,
    /// Prime wire dimension.
    #[arg(long)]
    d: Option<usize>,
    /// Tree layers.
    #[arg(long)]
    n: Option<u32>,
    /// Prime factors for mixed trees, comma separated.
    #[arg(long, value_delimiter = ',')]
    factors: Option<Vec<usize>>,
    /// Exact controlled-X variant (default lax).
    #[arg(long)]
    exact: bool,
    /// Control value for zcx/kcx/kch.
    #[arg(long)]
    k: Option<u64>,
    /// Target power for zcx/kcx, or phase power for p1/pointphase.
    #[arg(long)]
    power: Option<i64>,
    /// Control level for pointphase.
    #[arg(long)]
    cval: Option<u64>,
    /// Target level for pointphase.
    #[arg(long)]
    tval: Option<u64>,
    /// Gadget direction.
    #[arg(long)]
    b: Option<u64>,
    /// Gadget exponents, comma separated (ω granularity).
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<i64>>,
    /// Write the circuit document here.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Write the expanded (primitive-only) document instead of the macro form.
    #[arg(long)]
    expanded: bool,
}

#[derive(Args)]
struct SimulateArgs {
    /// Circuit document path.
    file: std::path::PathBuf,
    /// Input state: zero | basis:d0,d1,... | plus[:wire] | resource[:wire] |
    /// w_qubit | w_qudit
    #[arg(long, default_value = "zero")]
    input: String,
    /// Post-selections wire=value, comma separated, applied in order.
    #[arg(long, value_delimiter = ',')]
    postselect: Option<Vec<String>>,
    /// Expected state in the same format as --input.
    #[arg(long)]
    expect: Option<String>,
    /// Comparison tolerance (default 1e-10, or WFORGE_TOL).
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// gates | hierarchy | zcx | ch | wstates | trees | mixed | postselect | all
    #[arg(long)]
    suite: String,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Comparison tolerance (default 1e-10, or WFORGE_TOL).
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct LevelArgs {
    /// Gate name: X | Z | S | H | CX | SQRTZ | T2 | P1 | UMA
    #[arg(long)]
    gate: String,
    /// Prime wire dimension.
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 8)]
    max_level: u32,
    /// Level parameter for P1.
    #[arg(long)]
    k: Option<u64>,
    /// Exponent parameters for UMA.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    a: Option<u32>,
}

#[derive(Args)]
struct CountArgs {
    /// Circuit document path.
    file: std::path::PathBuf,
}

#[derive(Args)]
struct PlanArgs {
    /// Desired W-state size.
    #[arg(long)]
    n_target: usize,
    /// Prime qudit dimension to build with.
    #[arg(long)]
    d: usize,
}

fn tolerance(flag: Option<f64>) -> f64 {
    flag.or_else(|| std::env::var("WFORGE_TOL").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_TOL)
}

fn usage_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Synth(args) => cmd_synth(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Level(args) => cmd_level(args),
        Command::Count(args) => cmd_count(args),
        Command::Plan(args) => cmd_plan(args),
    }
}

fn run_synth(args: &SynthArgs) -> wforge_core::Result<wforge_core::SynthResult> {
    use wforge_core::error::Error;
    let need_d = || {
        args.d.ok_or_else(|| Error::InvalidArgument("this construction needs --d".into()))
    };
    match args.kind.as_str() {
        "p1" => synth::synth_p1(need_d()?, args.k.unwrap_or(0)),
        "cgp" => synth::synth_cgp(need_d()?),
        "zcx" | "kcx" => synth::synth_zcx(
            need_d()?,
            args.k.unwrap_or(0),
            args.power.unwrap_or(1),
            args.exact,
        ),
        "gadget" => {
            let d = need_d()?;
            let exps = args
                .alpha
                .clone()
                .ok_or_else(|| Error::InvalidArgument("gadget needs --alpha".into()))?;
            let alpha =
                wforge_core::PhaseVector::new(d, exps, wforge_core::Granularity::Omega)?;
            synth::synth_phase_gadget(d, &alpha, args.b.unwrap_or(1))
        }
        "pointphase" => synth::synth_point_phase(
            need_d()?,
            args.cval.unwrap_or(0),
            args.tval.unwrap_or(0),
            args.power.unwrap_or(1),
        ),
        "cztau" => synth::synth_controlled_ztau(need_d()?),
        "ch" => synth::synth_controlled_h(need_d()?, ChMode::Subspace),
        "och" => synth::synth_controlled_h(need_d()?, ChMode::Full { k: 1 }),
        "kch" => synth::synth_controlled_h(
            need_d()?,
            ChMode::Full { k: args.k.unwrap_or(1) },
        ),
        "wprime" => synth::synth_w_prime(need_d()?),
        "spread" => synth::synth_spread(need_d()?),
        "qspread" => synth::synth_qudit_spread(need_d()?),
        "wtree" => synth::synth_spread_tree(need_d()?, args.n.unwrap_or(1)),
        "qwtree" => synth::synth_qudit_w_tree(need_d()?, args.n.unwrap_or(1)),
        "mixed" | "mixedtree" => {
            let factors = args
                .factors
                .clone()
                .ok_or_else(|| Error::InvalidArgument("mixed trees need --factors".into()))?;
            synth::synth_mixed_tree(&factors)
        }
        other => Err(Error::InvalidArgument(format!("unknown construction `{other}`"))),
    }
}

fn cmd_synth(args: SynthArgs) -> ExitCode {
    let result = match run_synth(&args) {
        Ok(r) => r,
        Err(e) => return usage_err(e),
    };
    let report = serde_json::json!({
        "name": result.name,
        "action": result.action,
        "contract": result.contract,
        "recorded_phase": result.recorded_phase.map(|p| [p.re, p.im]),
        "controlled_phase": result.controlled_phase.map(|p| [p.re, p.im]),
        "counts": result.report,
        "spread_count": result.spread_count,
    });
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if let Some(path) = args.out {
        let doc = if args.expanded { result.expanded.serialize() } else { result.circuit.serialize() };
        if let Err(e) = std::fs::write(&path, doc) {
            return usage_err(format!("cannot write {}: {e}", path.display()));
        }
    }
    ExitCode::SUCCESS
}

fn parse_state(spec: &str, register: &wforge_core::RadixRegister) -> Result<PureState, String> {
    let (kind, params) = match spec.split_once(':') {
        Some((k, p)) => (k, Some(p)),
        None => (spec, None),
    };
    let state_kind = match kind {
        "zero" => StateKind::Zero,
        "basis" => {
            let digits: Result<Vec<usize>, _> = params
                .ok_or("basis needs digits, e.g. basis:1,0,0")?
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect();
            StateKind::Basis(digits.map_err(|e| format!("bad basis digits: {e}"))?)
        }
        "plus" => StateKind::Plus {
            wire: params.map(|p| p.parse()).transpose().map_err(|e| format!("bad wire: {e}"))?.unwrap_or(0),
        },
        "resource" => StateKind::Resource {
            wire: params.map(|p| p.parse()).transpose().map_err(|e| format!("bad wire: {e}"))?.unwrap_or(0),
        },
        "w_qubit" => {
            check_size(params, register)?;
            StateKind::WQubit
        }
        "w_qudit" => {
            check_size(params, register)?;
            StateKind::WQudit
        }
        other => return Err(format!("unknown state kind `{other}`")),
    };
    PureState::make(&state_kind, register).map_err(|e| e.to_string())
}

/// W-state specs may carry an explicit size (e.g. `w_qubit:8`), which must
/// match the circuit's logical wire count.
fn check_size(params: Option<&str>, register: &wforge_core::RadixRegister) -> Result<(), String> {
    let Some(p) = params else { return Ok(()) };
    let n: usize = p.parse().map_err(|e| format!("bad W-state size `{p}`: {e}"))?;
    if n != register.num_wires() {
        return Err(format!(
            "W-state size {n} does not match the {}-wire register",
            register.num_wires()
        ));
    }
    Ok(())
}

/// Target states compare over the logical wires; ancillas padded with |0⟩.
fn parse_target(
    spec: &str,
    full: &wforge_core::RadixRegister,
    logical: usize,
) -> Result<PureState, String> {
    let logical_reg = wforge_core::RadixRegister::new(full.dims()[..logical].to_vec())
        .map_err(|e| e.to_string())?;
    let small = parse_state(spec, &logical_reg)?;
    let entries: Vec<_> = small
        .support()
        .into_iter()
        .map(|(cfg, amp)| {
            let mut padded = vec![0usize; full.num_wires()];
            padded[..logical].copy_from_slice(&cfg);
            (padded, amp)
        })
        .collect();
    PureState::from_support(full.clone(), entries).map_err(|e| e.to_string())
}

fn cmd_simulate(args: SimulateArgs) -> ExitCode {
    let tol = tolerance(args.tol);
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return usage_err(format!("cannot read {}: {e}", args.file.display())),
    };
    let circuit = match Circuit::parse(&text) {
        Ok(c) => c,
        Err(e) => return usage_err(e),
    };
    let logical = circuit.register.num_wires();
    let expanded = match circuit.expand(&Registry) {
        Ok(c) => c,
        Err(e) => return usage_err(e),
    };
    let input = match parse_target(&args.input, &expanded.register, logical) {
        Ok(s) => s,
        Err(e) => return usage_err(e),
    };
    let mut state = match apply_circuit(&input, &expanded) {
        Ok(s) => s,
        Err(e) => return usage_err(e),
    };
    let mut total_prob = 1.0;
    for sel in args.postselect.unwrap_or_default() {
        let Some((w, v)) = sel.split_once('=') else {
            return usage_err(format!("bad post-selection `{sel}`; use wire=value"));
        };
        let (Ok(w), Ok(v)) = (w.trim().parse::<usize>(), v.trim().parse::<usize>()) else {
            return usage_err(format!("bad post-selection `{sel}`"));
        };
        match state.post_select(w, v) {
            Ok((p, next)) => {
                total_prob *= p;
                state = next;
            }
            Err(e) => return usage_err(e),
        }
    }
    println!("wires: {:?}", expanded.register.dims());
    println!("support ({} configurations):", state.support_size());
    for (cfg, amp) in state.support() {
        println!("  {cfg:?}  {:+.6}{:+.6}i", amp.re, amp.im);
    }
    if total_prob < 1.0 {
        println!("post-selection probability: {total_prob}");
    }
    if let Some(expect) = args.expect {
        let target = match parse_target(&expect, &expanded.register, logical) {
            Ok(s) => s,
            Err(e) => return usage_err(e),
        };
        let fidelity = match state.fidelity(&target) {
            Ok(f) => f,
            Err(e) => return usage_err(e),
        };
        println!("fidelity: {fidelity}");
        if fidelity < 1.0 - tol {
            println!("verdict: FAIL (below 1 - {tol:e})");
            return ExitCode::from(1);
        }
        println!("verdict: PASS");
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let tol = tolerance(args.tol);
    let reports = match verify::run_suite(&args.suite, tol) {
        Ok(r) => r,
        Err(e) => return usage_err(e),
    };
    let mut all_pass = true;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
        all_pass = reports.iter().all(|r| r.overall_pass);
    } else {
        for r in &reports {
            print!("{}", r.render_text());
            all_pass &= r.overall_pass;
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_level(args: LevelArgs) -> ExitCode {
    let Some(kind) = GateKind::from_name(&args.gate.to_uppercase()) else {
        return usage_err(format!("unknown gate `{}`", args.gate));
    };
    let spec = match kind {
        GateKind::P1 => GateSpec::p1(args.d, args.k.unwrap_or(0)),
        GateKind::Uma => GateSpec::uma(args.d, args.m.unwrap_or(1), args.a.unwrap_or(1)),
        GateKind::Cx => GateSpec::cx(args.d, args.d),
        GateKind::X => GateSpec::x(args.d),
        GateKind::Z => GateSpec::z(args.d),
        GateKind::S => GateSpec::s(args.d),
        GateKind::H => GateSpec::h(args.d),
        GateKind::SqrtZ => GateSpec::sqrt_z(args.d),
        GateKind::T2 => GateSpec::t2(),
        GateKind::ZAlpha => {
            return usage_err("ZALPHA needs a phase vector; classify via the library API")
        }
    };
    let matrix = match spec.matrix() {
        Ok(m) => m,
        Err(e) => return usage_err(e),
    };
    match wforge_core::gates::hierarchy_level(&matrix, args.d, args.max_level, DEFAULT_TOL) {
        Ok(LevelResult::Level(n)) => {
            println!("{} at d={}: hierarchy level {n}", spec.kind.name(), args.d);
            ExitCode::SUCCESS
        }
        Ok(LevelResult::ExceedsBound(b)) => {
            println!("{} at d={}: exceeds level bound {b}", spec.kind.name(), args.d);
            ExitCode::SUCCESS
        }
        Err(e) => usage_err(e),
    }
}

fn cmd_count(args: CountArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return usage_err(format!("cannot read {}: {e}", args.file.display())),
    };
    let circuit = match Circuit::parse(&text) {
        Ok(c) => c,
        Err(e) => return usage_err(e),
    };
    let expanded = match circuit.expand(&Registry) {
        Ok(c) => c,
        Err(e) => return usage_err(e),
    };
    let report = match expanded.count_resources() {
        Ok(r) => r,
        Err(e) => return usage_err(e),
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    ExitCode::SUCCESS
}

fn cmd_plan(args: PlanArgs) -> ExitCode {
    match synth::plan_postselected_w(args.n_target, args.d) {
        Ok(plan) => {
            println!("{}", serde_json::to_string_pretty(&plan).expect("plan serializes"));
            ExitCode::SUCCESS
        }
        Err(e) => usage_err(e),
    }
}

