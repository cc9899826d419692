use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tcoalg::coalgebra::show;
use tcoalg::constructions::{double, dual_coop, mirror, ribbon_extension};
use tcoalg::demos::{self, DEMO_NAMES};
use tcoalg::io;
use tcoalg::rib::validate_rib;
use tcoalg::yd::{
    ddouble_to_yd, halfbraiding_from_yd, validate_yd, yd_compatibility, yd_from_halfbraiding, yd_to_ddouble,
};
use tcoalg::{
    check_drinfeld_props, coopposite, drinfeld_elements, validate_ribbon, validate_rmatrix, validate_tcoalg,
    Report, TCoalg,
};

#[derive(Parser)]
#[command(name = "tcoalg", version, about = "Exact checks and constructions for crossed Hopf group-coalgebras")]
struct Cli {
    /// Output encoding for reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Level {
    Hopf,
    Quasi,
    Ribbon,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Coop,
    Mirror,
    Dualcoop,
    Double,
    RibbonExt,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify a T-coalgebra file (or `demo:NAME`).
    Check {
        file: String,
        #[arg(long, value_enum, default_value_t = Level::Hopf)]
        level: Level,
    },
    /// Build a new T-coalgebra from FILE and write it to OUT.
    Construct {
        #[arg(value_enum)]
        kind: Construction,
        file: String,
        #[arg(short, long)]
        out: String,
    },
    /// Print the Drinfeld elements and check their properties.
    Drinfeld { file: String },
    /// Yetter-Drinfeld module checks.
    Yd {
        #[command(subcommand)]
        cmd: YdCmd,
    },
    /// Twist-paired module checks.
    Rib {
        #[command(subcommand)]
        cmd: RibCmd,
    },
    /// Emit a built-in fixture.
    Demo {
        name: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Run every applicable verifier on every built-in fixture.
    Report,
}

#[derive(Subcommand)]
enum YdCmd {
    /// Validate the YD axioms and the crossed compatibility with the double.
    Check { hfile: String, vfile: String },
    /// Round trip through the double and through the center.
    Roundtrip { hfile: String, vfile: String },
}

#[derive(Subcommand)]
enum RibCmd {
    Check { hfile: String, ofile: String },
}

fn verify(h: &TCoalg, level: Level) -> Result<Report> {
    let mut rep = validate_tcoalg(h);
    if level >= Level::Quasi {
        if h.rmatrix.is_none() {
            bail!("structure has no R-matrix; cannot check at this level");
        }
        rep.extend(validate_rmatrix(h));
        rep.extend(check_drinfeld_props(h));
    }
    if level >= Level::Ribbon {
        if h.twist.is_none() {
            bail!("structure has no twist; cannot check at this level");
        }
        rep.extend(validate_ribbon(h));
    }
    rep.canonicalize();
    Ok(rep)
}

fn applicable_level(h: &TCoalg) -> Level {
    match (&h.rmatrix, &h.twist) {
        (Some(_), Some(_)) => Level::Ribbon,
        (Some(_), None) => Level::Quasi,
        _ => Level::Hopf,
    }
}

fn emit(format: Format, rep: &Report) {
    match format {
        Format::Text => print!("{}", rep.to_text()),
        Format::Json => println!("{}", rep.to_json()),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Check { file, level } => {
            let h = io::load_tcoalg(&file).with_context(|| format!("loading {file}"))?;
            let rep = verify(&h, level)?;
            emit(fmt, &rep);
            Ok(rep.is_clean())
        }
        Cmd::Construct { kind, file, out } => {
            let h = io::load_tcoalg(&file).with_context(|| format!("loading {file}"))?;
            let built = match kind {
                Construction::Coop => coopposite(&h),
                Construction::Mirror => mirror(&h),
                Construction::Dualcoop => dual_coop(&h),
                Construction::Double => double(&h),
                Construction::RibbonExt => ribbon_extension(&h),
            }?;
            io::save(&out, &io::tcoalg_to_string(&built)).with_context(|| format!("writing {out}"))?;
            let dims: Vec<usize> = built.group.elements().map(|a| built.dim(a)).collect();
            match fmt {
                Format::Text => println!("wrote {out} (component dims {dims:?})"),
                Format::Json => println!("{}", json!({ "wrote": out, "dims": dims })),
            }
            Ok(true)
        }
        Cmd::Drinfeld { file } => {
            let h = io::load_tcoalg(&file).with_context(|| format!("loading {file}"))?;
            if h.rmatrix.is_none() {
                bail!("structure has no R-matrix");
            }
            let u = drinfeld_elements(&h);
            let rep = check_drinfeld_props(&h);
            match fmt {
                Format::Text => {
                    for (a, x) in u.iter().enumerate() {
                        println!("u_{a} = {}", show(x));
                    }
                    print!("{}", rep.to_text());
                }
                Format::Json => {
                    let mut v: Value = serde_json::from_str(&rep.to_json())?;
                    let us: Vec<Vec<String>> = u.iter().map(|x| x.iter().map(|s| s.to_string()).collect()).collect();
                    v["drinfeld_elements"] = json!(us);
                    println!("{}", serde_json::to_string_pretty(&v)?);
                }
            }
            Ok(rep.is_clean())
        }
        Cmd::Yd { cmd } => {
            let (hfile, vfile) = match &cmd {
                YdCmd::Check { hfile, vfile } | YdCmd::Roundtrip { hfile, vfile } => (hfile, vfile),
            };
            let h = io::load_tcoalg(hfile).with_context(|| format!("loading {hfile}"))?;
            let v = io::load_yd(vfile).with_context(|| format!("loading {vfile}"))?;
            let mut rep = validate_yd(&h, &v);
            if !rep.is_clean() {
                rep.canonicalize();
                emit(fmt, &rep);
                return Ok(false);
            }
            match cmd {
                YdCmd::Check { .. } => rep.extend(yd_compatibility(&h, &v)?),
                YdCmd::Roundtrip { .. } => {
                    let a = v.grade();
                    let back = ddouble_to_yd(&h, &yd_to_ddouble(&h, &v));
                    rep.record("roundtrip-double", &[a], back == v, || "D̄-module round trip differs".into());
                    let back = yd_from_halfbraiding(&h, &halfbraiding_from_yd(&h, &v));
                    rep.record("roundtrip-center", &[a], back == v, || "half-braiding round trip differs".into());
                }
            }
            rep.canonicalize();
            emit(fmt, &rep);
            Ok(rep.is_clean())
        }
        Cmd::Rib { cmd: RibCmd::Check { hfile, ofile } } => {
            let h = io::load_tcoalg(&hfile).with_context(|| format!("loading {hfile}"))?;
            if h.rmatrix.is_none() {
                bail!("structure has no R-matrix");
            }
            let o = io::load_rib(&ofile).with_context(|| format!("loading {ofile}"))?;
            let rep = validate_rib(&h, &o);
            emit(fmt, &rep);
            Ok(rep.is_clean())
        }
        Cmd::Demo { name, out } => {
            let name = name.strip_prefix("demo:").unwrap_or(&name);
            let text = io::tcoalg_to_string(&demos::demo(name)?);
            match out {
                Some(path) => io::save(&path, &text).with_context(|| format!("writing {path}"))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Cmd::Report => {
            let mut clean = true;
            let mut all = serde_json::Map::new();
            for name in DEMO_NAMES {
                let h = demos::demo(name)?;
                let rep = verify(&h, applicable_level(&h))?;
                clean &= rep.is_clean();
                match fmt {
                    Format::Text => println!("{name}: {}", rep.summary()),
                    Format::Json => {
                        all.insert(name.to_string(), serde_json::from_str(&rep.to_json())?);
                    }
                }
                if fmt == Format::Text {
                    for e in rep.failures() {
                        println!("  FAIL {} {:?} {}", e.check, e.indices, e.witness.as_deref().unwrap_or(""));
                    }
                }
            }
            if fmt == Format::Json {
                println!("{}", serde_json::to_string_pretty(&Value::Object(all))?);
            }
            Ok(clean)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let fmt = cli.format;
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            match fmt {
                Format::Text => eprintln!("error: {e:#}"),
                Format::Json => eprintln!("{}", json!({ "error": format!("{e:#}") })),
            }
            ExitCode::from(2)
        }
    }
}
