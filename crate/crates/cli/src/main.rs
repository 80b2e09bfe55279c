use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shortloc::algebra::{preset, PresetParams, ShortAlgebra, PRESET_NAMES};
use shortloc::explorer::{classify_complex_with, mho_path_with, omega_path_with, PathRecord, Termination};
use shortloc::homology::{
    a_dual, betti_with, ext_dim_with, is_gp_with, is_inf_torsionfree_with, is_reflexive, is_semi_gp_with,
    is_torsionless, mho_flagged, syzygy_with, transpose_with, DEFAULT_BOUND,
};
use shortloc::io::{algebra_to_json, module_to_json, read_algebra, read_module, to_pretty, Report};
use shortloc::linalg::{Field, Scalar};
use shortloc::module::{cyclic_submodule, left_regular, m_alpha, radical_module, random_module, simple_module, AModule};
use shortloc::numerics::{b_closed_form, b_sequence, is_aligned};
use shortloc::verify::{run_suite, Suite, VerifyOptions};
use shortloc::Limits;

#[derive(Parser)]
#[command(name = "shortloc", version, about = "Modules over short local algebras, computed exactly")]
struct Cli {
    /// Output format; CSV is only available for sequences.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest intermediate module dimension (default: SHORTLOC_CAP or 5000).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

// Preset parameters; unused ones are ignored by the preset.
#[derive(Args, Clone, Default)]
struct PresetArgs {
    /// Number of generators, for L, ex14_1 and ex15_1.
    #[arg(long)]
    e: Option<usize>,
    /// dim J², for ex14_1 and ex15_1.
    #[arg(long)]
    a: Option<usize>,
    /// Index of Λ_c.
    #[arg(long)]
    c: Option<usize>,
    /// Deformation parameter, default 2.
    #[arg(long)]
    q: Option<String>,
    /// Work over F_p instead of Q.
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Args, Clone)]
struct ModuleArgs {
    /// A module JSON file, or a constructor spec used with `--algebra`.
    module: String,
    /// Preset name or algebra JSON file.
    #[arg(long)]
    algebra: Option<String>,
    #[command(flatten)]
    params: PresetArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect or build algebras.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// Build modules.
    #[command(subcommand)]
    Module(ModuleCommand),
    /// syzygy | mho | dual | transpose | ext:<i>:<N>
    Compute {
        op: String,
        #[command(flatten)]
        input: ModuleArgs,
        /// Also write the resulting module here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide a module property; bounded ones report how far they were checked.
    Check {
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        input: ModuleArgs,
        #[arg(long, default_value_t = DEFAULT_BOUND as u64, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Betti numbers t_0 .. t_N.
    Betti {
        #[command(flatten)]
        input: ModuleArgs,
        #[arg(long)]
        n: usize,
    },
    /// The sequence b(e,a) from b_0 to b_N.
    Bseq {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        closed_form: bool,
    },
    /// Follow Ω or ℧ from a module, or classify the complex through it.
    Explore {
        #[arg(value_enum)]
        kind: ExploreKind,
        #[command(flatten)]
        input: ModuleArgs,
        /// Ω-steps.
        #[arg(long, default_value_t = 5)]
        back: usize,
        /// ℧-steps.
        #[arg(long, default_value_t = 5)]
        fwd: usize,
    },
    /// Check the published claims and print one line per claim.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Check an algebra file or preset and report its invariants.
    Validate {
        src: String,
        #[command(flatten)]
        params: PresetArgs,
    },
    /// Report the invariants of an algebra file or preset.
    Info {
        src: String,
        #[command(flatten)]
        params: PresetArgs,
    },
    /// Writes a preset as algebra JSON.
    Preset {
        name: String,
        #[command(flatten)]
        params: PresetArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ModuleCommand {
    /// simple | regular | radical | cyclic:<coords> | malpha:<alpha> | random:<g>,<r>
    Make {
        spec: String,
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        params: PresetArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Solid,
    Torsionless,
    Reflexive,
    Aligned,
    Semigp,
    Inftf,
    Gp,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExploreKind {
    Omega,
    Mho,
    Complex,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Fast,
}

/// A usage problem that clap cannot see.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

struct Output {
    text: String,
    json: Value,
    csv: Option<String>,
    code: u8,
}

impl Output {
    fn new(text: String, json: Value) -> Output {
        Output { text, json, csv: None, code: 0 }
    }
}

struct Ctx {
    seed: u64,
    limits: Limits,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match cli.cap {
        Some(cap) => {
            // Routines without an explicit limits argument read the environment.
            std::env::set_var("SHORTLOC_CAP", cap.to_string());
            Limits::new(cap as usize)
        }
        None => Limits::from_env(),
    };
    let ctx = Ctx { seed: cli.seed, limits };
    match run(cli.command, &ctx).and_then(|out| render(out, cli.format)) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<Usage>() {
            return EXIT_USAGE;
        }
        if let Some(e) = cause.downcast_ref::<shortloc::Error>() {
            return match e {
                shortloc::Error::ResourceCap { .. } => EXIT_CAP,
                shortloc::Error::InvariantViolation(_) => EXIT_FAILED,
                _ => EXIT_USAGE,
            };
        }
    }
    EXIT_USAGE
}

fn render(out: Output, format: Format) -> anyhow::Result<u8> {
    match format {
        Format::Text => print!("{}", out.text),
        Format::Json => print!("{}", to_pretty(&out.json)),
        Format::Csv => match out.csv {
            Some(csv) => print!("{csv}"),
            None => return Err(usage("CSV output is only available for sequences (betti, bseq, explore omega|mho)")),
        },
    }
    Ok(out.code)
}

fn run(cmd: Command, ctx: &Ctx) -> anyhow::Result<Output> {
    match cmd {
        Command::Algebra(c) => run_algebra(c),
        Command::Module(ModuleCommand::Make { spec, algebra, params, output }) => {
            let alg = Arc::new(load_algebra(&algebra, &params)?);
            let m = build_module(&alg, &spec, ctx.seed)?;
            let json = module_to_json(&m);
            let text = match &output {
                Some(path) => {
                    write_file(path, &to_pretty(&json))?;
                    format!("wrote {} (dim {})\n", path.display(), m.dim())
                }
                None => to_pretty(&json),
            };
            Ok(Output::new(text, json))
        }
        Command::Compute { op, input, output } => run_compute(&op, &input, output.as_deref(), ctx),
        Command::Check { property, input, bound } => run_check(property, &input, bound as usize, ctx),
        Command::Betti { input, n } => {
            let (m, inputs) = load_module(&input, ctx)?;
            let t = betti_with(&m, n, &ctx.limits)?.values;
            let report = Report::new("betti", inputs, json!({ "t": t }));
            let mut out = Output::new(format!("{}\n", join(&t)), report.to_json());
            out.csv = Some(csv_columns(&["i", "t"], t.iter().enumerate().map(|(i, v)| vec![i.to_string(), v.to_string()])));
            Ok(out)
        }
        Command::Bseq { e, a, n, closed_form } => run_bseq(e, a, n, closed_form),
        Command::Explore { kind, input, back, fwd } => run_explore(kind, &input, back, fwd, ctx),
        Command::VerifyPaper { suite } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Fast => Suite::Fast,
            };
            let results = run_suite(&VerifyOptions { suite, seed: ctx.seed });
            let mut text = String::new();
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                writeln!(text, "{status} {:>2}  [{}] {}", r.id, r.tag, r.title)?;
                if !r.passed {
                    for c in r.checks.iter().filter(|c| !c.passed) {
                        writeln!(text, "        failed: {}", c.what)?;
                    }
                    if let Some(e) = &r.error {
                        writeln!(text, "        error: {e}")?;
                    }
                }
            }
            let passed = results.iter().filter(|r| r.passed).count();
            writeln!(text, "{passed}/{} claims passed", results.len())?;
            let mut out = Output::new(text, serde_json::to_value(&results)?);
            out.code = if passed == results.len() { 0 } else { EXIT_FAILED };
            Ok(out)
        }
    }
}

fn run_algebra(cmd: AlgebraCommand) -> anyhow::Result<Output> {
    match cmd {
        AlgebraCommand::Validate { src, params } => {
            let alg = load_algebra(&src, &params)?;
            let (e, a) = alg.hilbert_type();
            let json = json!({ "valid": true, "hilbert_type": [e, a] });
            Ok(Output::new(format!("valid: Hilbert type ({e}, {a})\n"), json))
        }
        AlgebraCommand::Info { src, params } => {
            let alg = load_algebra(&src, &params)?;
            let r = alg.report();
            let mut text = String::new();
            writeln!(text, "name                  {}", r.name.as_deref().unwrap_or("-"))?;
            writeln!(text, "field                 {}", field_name(alg.field()))?;
            writeln!(text, "hilbert type          ({}, {})", r.hilbert_type.0, r.hilbert_type.1)?;
            writeln!(text, "commutative           {}", r.commutative)?;
            writeln!(text, "left socle dim        {}", r.left_socle_dim)?;
            writeln!(text, "right socle dim       {}", r.right_socle_dim)?;
            writeln!(text, "self-injective        {}", r.self_injective)?;
            writeln!(text, "J^2 = left socle      {}", r.j2_equals_left_socle)?;
            writeln!(text, "J^2 = right socle     {}", r.j2_equals_right_socle)?;
            Ok(Output::new(text, serde_json::to_value(&r)?))
        }
        AlgebraCommand::Preset { name, params, output } => {
            let alg = build_preset(&name, &params)?;
            let json = algebra_to_json(&alg);
            let text = match &output {
                Some(path) => {
                    write_file(path, &to_pretty(&json))?;
                    format!("wrote {}\n", path.display())
                }
                None => to_pretty(&json),
            };
            Ok(Output::new(text, json))
        }
    }
}

fn run_compute(op: &str, input: &ModuleArgs, output: Option<&Path>, ctx: &Ctx) -> anyhow::Result<Output> {
    let (m, inputs) = load_module(input, ctx)?;
    if let Some(rest) = op.strip_prefix("ext:") {
        let (i, target) = rest
            .split_once(':')
            .ok_or_else(|| usage(format!("expected ext:<i>:<N>, got {op:?}")))?;
        let i: usize = i.parse().map_err(|_| usage(format!("bad Ext degree {i:?}")))?;
        let target_args = ModuleArgs { module: target.to_string(), ..input.clone() };
        let (n, n_inputs) = load_module(&target_args, ctx)?;
        let dim = ext_dim_with(&m, &n, i, &ctx.limits)?;
        let report = Report::new("ext", json!({ "m": inputs, "n": n_inputs, "i": i }), json!({ "dim": dim }));
        return Ok(Output::new(format!("dim Ext^{i}(M, N) = {dim}\n"), report.to_json()));
    }
    let mut flags = Vec::new();
    let result = match op {
        "syzygy" => syzygy_with(&m, &ctx.limits)?,
        "mho" => {
            let (r, f) = mho_flagged(&m)?;
            if !f.torsionless {
                flags.push("not_torsionless".to_string());
            }
            r
        }
        "dual" => {
            flags.push("opposite_algebra".to_string());
            a_dual(&m)?.module
        }
        "transpose" => {
            flags.push("opposite_algebra".to_string());
            transpose_with(&m, &ctx.limits)?
        }
        _ => return Err(usage(format!("unknown operation {op:?}; expected syzygy, mho, dual, transpose or ext:<i>:<N>"))),
    };
    let mut text = module_summary(&result);
    if let Some(path) = output {
        write_file(path, &to_pretty(&module_to_json(&result)))?;
        writeln!(text, "wrote {}", path.display())?;
    }
    for f in &flags {
        writeln!(text, "flag: {f}")?;
    }
    let mut report = Report::new(op, inputs, module_values(&result));
    report.flags = flags;
    Ok(Output::new(text, report.to_json()))
}

fn run_check(property: Property, input: &ModuleArgs, bound: usize, ctx: &Ctx) -> anyhow::Result<Output> {
    let (m, inputs) = load_module(input, ctx)?;
    let name = property.to_possible_value().expect("no skipped variants").get_name().to_string();
    let (holds, detail, bounded) = match property {
        Property::Solid => plain(m.is_solid()?),
        Property::Torsionless => plain(is_torsionless(&m)?),
        Property::Reflexive => plain(is_reflexive(&m)?),
        Property::Aligned => plain(is_aligned(&m)?),
        Property::Semigp => {
            let c = is_semi_gp_with(&m, bound, &ctx.limits)?;
            (c.holds(), c.to_string(), true)
        }
        Property::Inftf => {
            let c = is_inf_torsionfree_with(&m, bound, &ctx.limits)?;
            (c.holds(), c.to_string(), true)
        }
        Property::Gp => {
            let c = is_gp_with(&m, bound, &ctx.limits)?;
            let detail = format!("{} (semi-GP {}; infinitely torsionfree {})", c.holds(), c.semi_gp, c.inf_torsionfree);
            (c.holds(), detail, true)
        }
    };
    let mut report = Report::new(format!("check {name}"), inputs, json!({ "holds": holds, "detail": detail }));
    if bounded {
        report.bound = Some(bound);
    }
    let mut out = Output::new(format!("{detail}\n"), report.to_json());
    out.code = if holds { 0 } else { EXIT_FAILED };
    Ok(out)
}

fn plain(b: bool) -> (bool, String, bool) {
    (b, b.to_string(), false)
}

fn run_bseq(e: usize, a: usize, n: usize, closed_form: bool) -> anyhow::Result<Output> {
    let b: Vec<String> = b_sequence(e, a, n).from_zero().iter().map(|x| x.to_string()).collect();
    let inputs = json!({ "e": e, "a": a, "n": n });
    if !closed_form {
        let mut out = Output::new(format!("{}\n", b.join(" ")), Report::new("bseq", inputs, json!({ "b": b })).to_json());
        out.csv = Some(csv_columns(&["n", "b"], b.iter().enumerate().map(|(i, v)| vec![i.to_string(), v.clone()])));
        return Ok(out);
    }
    let closed = (0..=n)
        .map(|k| b_closed_form(e, a, k).map(|x| x.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<Vec<String>> = (0..=n).map(|k| vec![k.to_string(), b[k].clone(), closed[k].clone()]).collect();
    let headers = ["n", "b", "closed_form"];
    let mut out = Output::new(
        aligned_table(&headers, &rows),
        Report::new("bseq", inputs, json!({ "b": b, "closed_form": closed })).to_json(),
    );
    out.csv = Some(csv_columns(&headers, rows.into_iter()));
    Ok(out)
}

fn run_explore(kind: ExploreKind, input: &ModuleArgs, back: usize, fwd: usize, ctx: &Ctx) -> anyhow::Result<Output> {
    let (m, inputs) = load_module(input, ctx)?;
    let inputs = json!({ "module": inputs, "back": back, "fwd": fwd });
    let record: PathRecord = match kind {
        ExploreKind::Omega => omega_path_with(&m, back, &ctx.limits),
        ExploreKind::Mho => mho_path_with(&m, fwd, &ctx.limits),
        ExploreKind::Complex => {
            let c = classify_complex_with(&m, back, fwd, &ctx.limits)?;
            let mut text = String::new();
            writeln!(text, "kind         {:?}", c.kind)?;
            writeln!(text, "indices      {}..{}", c.first_index, c.first_index + c.ranks.len() as i64 - 1)?;
            writeln!(text, "ranks        {}", join(&c.ranks))?;
            if let Some(v) = c.v_index {
                writeln!(text, "v            {v}")?;
            }
            if let Some(d) = &c.defects {
                writeln!(text, "defects      {}", join(d))?;
            }
            if let Some(p) = c.periodic {
                writeln!(text, "period       {p}")?;
            }
            if let Some(o) = &c.obstruction {
                writeln!(text, "obstruction  {o}")?;
            }
            let report = Report::new("explore complex", inputs, serde_json::to_value(&c)?);
            return Ok(Output::new(text, report.to_json()));
        }
    };
    let headers = ["step", "t", "dim", "dim_vector", "bipartite", "simple", "defect"];
    let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
    let rows: Vec<Vec<String>> = record
        .steps
        .iter()
        .map(|s| {
            vec![
                s.index.to_string(),
                s.rank.to_string(),
                s.dim.to_string(),
                opt(s.dim_vector.map(|v| v.to_string())),
                s.bipartite.to_string(),
                opt(s.simple_mult.map(|v| v.to_string())),
                opt(s.defect.map(|v| v.to_string())),
            ]
        })
        .collect();
    let mut text = aligned_table(&headers, &rows);
    if let Some(t) = record.terminated {
        writeln!(text, "terminated: {}", serde_json::to_value(t)?.as_str().unwrap_or_default())?;
    }
    if let Some(a) = &record.advisory {
        writeln!(text, "advisory: {a}")?;
    }
    let op = match kind {
        ExploreKind::Omega => "explore omega",
        _ => "explore mho",
    };
    let mut report = Report::new(op, inputs, serde_json::to_value(&record)?);
    report.flags = record.advisory.iter().map(|_| "advisory".to_string()).collect();
    let mut out = Output::new(text, report.to_json());
    out.csv = Some(csv_columns(&headers, rows.into_iter()));
    if record.terminated == Some(Termination::ResourceCap) {
        out.code = EXIT_CAP;
    }
    Ok(out)
}

fn field_of(params: &PresetArgs) -> anyhow::Result<Field> {
    Ok(match params.p {
        Some(p) => Field::prime(p)?,
        None => Field::Rationals,
    })
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rationals => "Q".into(),
        Field::Prime { p } => format!("F_{p}"),
    }
}

fn build_preset(name: &str, params: &PresetArgs) -> anyhow::Result<ShortAlgebra> {
    if !PRESET_NAMES.contains(&name) {
        return Err(usage(format!("unknown preset {name:?}; known presets: {}", PRESET_NAMES.join(", "))));
    }
    let field = field_of(params)?;
    let q = params.q.as_deref().map(|q| field.parse(q)).transpose()?;
    let p = PresetParams { field, e: params.e, a: params.a, c: params.c, q };
    Ok(preset(name, &p)?)
}

/// A path to an algebra JSON file, or a preset name.
fn load_algebra(src: &str, params: &PresetArgs) -> anyhow::Result<ShortAlgebra> {
    let path = Path::new(src);
    if path.is_file() {
        return Ok(read_algebra(path)?);
    }
    build_preset(src, params)
}

fn load_module(input: &ModuleArgs, ctx: &Ctx) -> anyhow::Result<(AModule, Value)> {
    let path = Path::new(&input.module);
    if path.is_file() {
        let m = read_module(path)?;
        return Ok((m, json!({ "file": file_label(path) })));
    }
    let Some(src) = &input.algebra else {
        return Err(usage(format!("{:?} is neither a module file nor usable without --algebra", input.module)));
    };
    let alg = Arc::new(load_algebra(src, &input.params)?);
    let m = build_module(&alg, &input.module, ctx.seed)?;
    let label = match alg.name() {
        Some(name) => name.to_string(),
        None => file_label(Path::new(src)),
    };
    Ok((m, json!({ "algebra": label, "spec": input.module })))
}

/// The file name only, so reports do not depend on the working directory.
fn file_label(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

fn build_module(alg: &Arc<ShortAlgebra>, spec: &str, seed: u64) -> anyhow::Result<AModule> {
    let (kind, arg) = match spec.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (spec, None),
    };
    let need = || arg.ok_or_else(|| usage(format!("module spec {kind} needs an argument, as in {kind}:<...>")));
    let f = alg.field();
    Ok(match kind {
        "simple" => simple_module(alg),
        "regular" => left_regular(alg),
        "radical" => radical_module(alg),
        "cyclic" => {
            let coords = need()?
                .split(',')
                .map(|s| f.parse(s))
                .collect::<Result<Vec<Scalar>, _>>()?;
            if coords.len() != alg.dim() {
                return Err(usage(format!(
                    "cyclic needs {} coordinates in the basis (1, v_1..v_e, w_1..w_a), got {}",
                    alg.dim(),
                    coords.len()
                )));
            }
            cyclic_submodule(alg, &coords)?
        }
        "malpha" => m_alpha(alg, &f.parse(need()?)?)?,
        "random" => {
            let arg = need()?;
            let parsed = arg.split_once(',').and_then(|(g, r)| Some((g.trim().parse().ok()?, r.trim().parse().ok()?)));
            let (g, r) = parsed.ok_or_else(|| usage(format!("expected random:<g>,<r>, got random:{arg}")))?;
            random_module(alg, g, r, seed)
        }
        _ => {
            return Err(usage(format!(
                "unknown module spec {spec:?}; expected simple, regular, radical, cyclic:<coords>, malpha:<alpha> or random:<g>,<r>"
            )))
        }
    })
}

fn module_values(m: &AModule) -> Value {
    json!({
        "dim": m.dim(),
        "top": m.top_dim(),
        "loewy_length": m.loewy_length(),
        "dim_vector": m.dim_vector().ok(),
        "module": module_to_json(m),
    })
}

fn module_summary(m: &AModule) -> String {
    let mut s = format!("dim {}\ntop {}\nloewy length {}\n", m.dim(), m.top_dim(), m.loewy_length());
    if let Ok(v) = m.dim_vector() {
        let _ = writeln!(s, "dimension vector {v}");
    }
    for (i, rows) in m.action_strings().iter().enumerate() {
        let _ = writeln!(s, "v_{}:", i + 1);
        for r in rows {
            let _ = writeln!(s, "  [{}]", r.join(", "));
        }
    }
    s
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn aligned_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..headers.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([headers[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        format!("{}\n", padded.join("  "))
    };
    let mut out = line(headers.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn csv_columns(headers: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut out = format!("{}\n", headers.join(","));
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}
