//! `lppkit`: Hilbert functions, lex-plus-powers vectors, residuals and Betti
//! numbers of Artinian monomial ideals from the command line.

mod render;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lppkit_core::growth::lpp_sequence_violation;
use lppkit_core::harness::{
    exit_code, growth_check, lexseg_lemma_check, lpp_dominance_check, residual_lpp_check, socle_equivalence_check,
    sweep_sequences, characteristic_check,
};
use lppkit_core::{
    betti_diagram, colon, gk_expansion, lpp_bound, socle_dims, vector_of_hf, CheckReport, DegreeList, Error, FieldSpec,
    GkRectangle, Guard, HilbertFunction, LppVector, MonomialIdeal,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "lppkit", version, about = "Artinian monomial and lex-plus-powers ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Degree list, comma separated, e.g. 3,4,11.
    #[arg(long = "A", value_name = "CSV", global = true)]
    a: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of R/I.
    Hf {
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        common: Common,
    },
    /// Largest H(d+1) allowed by H(d) = h.
    Bound {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        h: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Is the sequence an lpp sequence for A?
    Validseq {
        #[arg(long)]
        hf: String,
        #[command(flatten)]
        common: Common,
    },
    /// Operations on lpp vectors.
    Vec {
        #[command(subcommand)]
        op: VecOp,
    },
    /// Colon ideal J : I, or the residual c.i.(A) : I.
    Colon {
        #[arg(long)]
        ideal: String,
        /// Divisor I; without it the ideal is divided into c.i.(A).
        #[arg(long)]
        by: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Graded Betti diagram of R/I.
    Betti {
        #[arg(long)]
        ideal: String,
        #[arg(long = "char", default_value = "0")]
        field: FieldSpec,
        #[command(flatten)]
        common: Common,
    },
    /// Socle degrees of R/I.
    Socle {
        #[arg(long)]
        ideal: String,
        #[arg(long = "char", default_value = "0")]
        field: FieldSpec,
        #[command(flatten)]
        common: Common,
    },
    /// Run a check over one Hilbert function or a sweep.
    Check {
        #[command(subcommand)]
        which: CheckKind,
    },
    /// Staircase picture of a two-variable lpp ideal.
    Staircase {
        #[arg(long)]
        vec: Option<String>,
        #[arg(long)]
        ideal: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct VecArgs {
    #[arg(long)]
    vec: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum VecOp {
    Validate(VecArgs),
    ToIdeal(VecArgs),
    ToHf(VecArgs),
    FromHf {
        #[arg(long)]
        hf: String,
        #[command(flatten)]
        common: Common,
    },
    Dual(VecArgs),
    Stats(VecArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// One Hilbert function; without it, every valid H up to --max-sigma.
    #[arg(long)]
    hf: Option<String>,
    #[arg(long, default_value_t = 6)]
    max_sigma: usize,
    #[arg(long = "char", default_value = "0")]
    field: FieldSpec,
    /// Largest number of ideals enumerated per instance.
    #[arg(long)]
    max_count: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum CheckKind {
    Growth(CheckArgs),
    Lpp(CheckArgs),
    Residual(CheckArgs),
    Lexseg(CheckArgs),
    SocleEquiv(CheckArgs),
    /// Compare Betti numbers over QQ and over --char.
    Char(CheckArgs),
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

type Res = Result<Output, Error>;

fn parse_a(common: &Common) -> Result<DegreeList, Error> {
    let raw = common.a.as_deref().ok_or_else(|| Error::Parse { token: "--A".into(), reason: "required here".into() })?;
    let mut v = Vec::new();
    for tok in raw.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        v.push(tok.parse::<u32>().map_err(|_| Error::Parse { token: tok.into(), reason: "expected a positive integer".into() })?);
    }
    DegreeList::sorted(v)
}

fn parse_hf(s: &str) -> Result<HilbertFunction, Error> {
    s.parse()
}

/// `-` reads stdin, an existing path reads the file, anything else is inline.
fn read_source(s: &str) -> Result<String, Error> {
    let io = |e: std::io::Error| Error::Parse { token: s.into(), reason: e.to_string() };
    if s == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(io)?;
        Ok(buf)
    } else if std::path::Path::new(s).is_file() {
        std::fs::read_to_string(s).map_err(io)
    } else {
        Ok(s.to_string())
    }
}

fn parse_ideal(s: &str, common: &Common) -> Result<MonomialIdeal, Error> {
    let n = match common.a {
        Some(_) => Some(parse_a(common)?.len()),
        None => None,
    };
    MonomialIdeal::parse(read_source(s)?.trim(), n)
}

fn parse_vec(s: &str, a: &DegreeList) -> Result<LppVector, Error> {
    LppVector::parse(&read_source(s)?, a.len())
}

fn emit(common: &Common, value: serde_json::Value, text: String) -> Res {
    Ok(Output::ok(if common.json { value.to_string() } else { text }))
}

fn run(cli: Cli) -> Res {
    match cli.command {
        Command::Hf { ideal, common } => {
            let i = parse_ideal(&ideal, &common)?;
            let h = i.hilbert_function()?;
            emit(&common, json!({ "ideal": i.to_json(), "hf": h.values() }), h.to_string())
        }
        Command::Bound { d, h, common } => {
            let a = parse_a(&common)?;
            let rect = GkRectangle::new(&a);
            let b = lpp_bound(h, d, &a)?;
            let exp = if h == 0 { None } else { Some(gk_expansion(h, d, &a)?) };
            let value = json!({ "A": a.as_slice(), "d": d, "h": h, "expansion": exp, "bound": b });
            let mut text = render::rectangle(&rect, exp.as_ref(), d);
            if let Some(e) = &exp {
                let right: Vec<String> =
                    e.terms.iter().map(|t| rect.get(t.row, t.column as usize + 1).to_string()).collect();
                text.push_str(&format!("expansion: {e}\n"));
                text.push_str(&format!("H({}) <= {} = {b}\n", d + 1, right.join(" + ")));
            }
            text.push_str(&b.to_string());
            emit(&common, value, text)
        }
        Command::Validseq { hf, common } => {
            let a = parse_a(&common)?;
            let h = parse_hf(&hf)?;
            let why = lpp_sequence_violation(&h, &a);
            let text = match &why {
                None => "valid".to_string(),
                Some(w) => format!("invalid: {w}"),
            };
            let mut out = emit(&common, json!({ "A": a.as_slice(), "hf": h.values(), "valid": why.is_none(), "reason": why }), text)?;
            out.code = u8::from(why.is_some());
            Ok(out)
        }
        Command::Vec { op } => run_vec(op),
        Command::Colon { ideal, by, common } => {
            let i = parse_ideal(&ideal, &common)?;
            let r = match by {
                Some(by) => colon(&i, &MonomialIdeal::parse(read_source(&by)?.trim(), Some(i.n()))?)?,
                None => colon(&MonomialIdeal::complete_intersection(&parse_a(&common)?), &i)?,
            };
            emit(&common, r.to_json(), r.to_human())
        }
        Command::Betti { ideal, field, common } => {
            let i = parse_ideal(&ideal, &common)?;
            let b = betti_diagram(&i, field)?;
            emit(&common, b.to_json(), b.render())
        }
        Command::Socle { ideal, field, common } => {
            let i = parse_ideal(&ideal, &common)?;
            let s = socle_dims(&i, field)?;
            let text: Vec<String> = s.iter().map(|(d, k)| format!("degree {d}: {k}")).collect();
            let pairs: Vec<[u64; 2]> = s.iter().map(|(&d, &k)| [d as u64, k]).collect();
            emit(&common, json!({ "socle": pairs }), text.join("\n"))
        }
        Command::Check { which } => run_check(which),
        Command::Staircase { vec, ideal, common } => {
            let a = parse_a(&common)?;
            if a.len() != 2 {
                return Err(Error::Parse { token: common.a.unwrap_or_default(), reason: "staircase needs two degrees".into() });
            }
            let i = match (vec, ideal) {
                (Some(v), _) => {
                    let t = parse_vec(&v, &a)?;
                    t.validate(&a)?;
                    t.ideal(&a)?
                }
                (None, Some(s)) => parse_ideal(&s, &common)?,
                (None, None) => {
                    return Err(Error::Parse { token: "staircase".into(), reason: "needs --vec or --ideal".into() })
                }
            };
            let (x, y) = (a.as_slice()[0], a.as_slice()[1]);
            let pic = render::staircase(&i, x, y);
            let rows: Vec<String> = pic.lines().map(str::to_string).collect();
            emit(&common, json!({ "A": a.as_slice(), "ideal": i.to_json(), "rows": rows }), pic.trim_end().to_string())
        }
    }
}

fn run_vec(op: VecOp) -> Res {
    let load = |args: &VecArgs| -> Result<(DegreeList, LppVector), Error> {
        let a = parse_a(&args.common)?;
        let t = parse_vec(&args.vec, &a)?;
        Ok((a, t))
    };
    match op {
        VecOp::Validate(args) => {
            let (a, t) = load(&args)?;
            let why = t.validate(&a).err().map(|e| e.to_string());
            let text = why.as_ref().map_or("valid".to_string(), |w| format!("invalid: {w}"));
            let mut out = emit(&args.common, json!({ "vec": t.to_string(), "valid": why.is_none(), "reason": why }), text)?;
            out.code = u8::from(why.is_some());
            Ok(out)
        }
        VecOp::ToIdeal(args) => {
            let (a, t) = load(&args)?;
            let i = t.ideal(&a)?;
            emit(&args.common, i.to_json(), i.to_human())
        }
        VecOp::ToHf(args) => {
            let (a, t) = load(&args)?;
            t.validate(&a)?;
            let h = t.hilbert_function()?;
            emit(&args.common, json!({ "hf": h.values() }), h.to_string())
        }
        VecOp::FromHf { hf, common } => {
            let a = parse_a(&common)?;
            let t = vector_of_hf(&parse_hf(&hf)?, &a)?;
            emit(&common, json!({ "vec": t.to_string() }), t.to_string())
        }
        VecOp::Dual(args) => {
            let (a, t) = load(&args)?;
            let d = t.dual(&a)?;
            emit(&args.common, json!({ "vec": d.to_string() }), d.to_string())
        }
        VecOp::Stats(args) => {
            let (a, t) = load(&args)?;
            let s = t.stats(&a)?;
            let alpha = s.alpha.map_or("inf".to_string(), |x| x.to_string());
            let text = format!("length {}\nsigma {}\nalpha {alpha}\nci {}", s.length, s.sigma, s.is_ci);
            emit(&args.common, serde_json::to_value(s).expect("stats serialize"), text)
        }
    }
}

fn run_check(which: CheckKind) -> Res {
    let (name, args) = match &which {
        CheckKind::Growth(a) => ("growth", a),
        CheckKind::Lpp(a) => ("lpp", a),
        CheckKind::Residual(a) => ("residual", a),
        CheckKind::Lexseg(a) => ("lexseg", a),
        CheckKind::SocleEquiv(a) => ("socle-equiv", a),
        CheckKind::Char(a) => ("char", a),
    };
    let a = parse_a(&args.common)?;
    let mut guard = Guard::from_env()?;
    if let Some(m) = args.max_count {
        guard.max_ideals = m;
    }
    let reports: Vec<CheckReport> = match name {
        "residual" => vec![residual_lpp_check(&a)],
        "lexseg" => vec![lexseg_lemma_check(&a)],
        _ => {
            let hs = match &args.hf {
                Some(s) => vec![parse_hf(s)?],
                None => sweep_sequences(&a, args.max_sigma, true),
            };
            hs.iter()
                .map(|h| match name {
                    "growth" => growth_check(h, &a, guard),
                    "lpp" => lpp_dominance_check(h, &a, args.field, guard),
                    "socle-equiv" => socle_equivalence_check(h, &a, args.field, guard),
                    _ => characteristic_check(h, &a, args.field, guard),
                })
                .collect()
        }
    };
    let text = if args.common.json {
        reports.iter().map(CheckReport::json_line).collect::<Vec<_>>().join("\n")
    } else {
        let mut lines = vec![CheckReport::table_header()];
        lines.extend(reports.iter().map(CheckReport::table_row));
        let fails = reports.iter().filter(|r| !r.passed()).count();
        lines.push(format!("{} instances, {fails} not passing", reports.len()));
        for r in reports.iter().filter(|r| r.witness.is_some()) {
            lines.push(r.json_line());
        }
        lines.join("\n")
    };
    Ok(Output { text, code: exit_code(&reports) as u8 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
