use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braidkit::burau::{alexander, burau, burau_at, burau_at_f64};
use braidkit::dynnikov::{act_batch, act_with_matrix, cycle, loopcoords};
use braidkit::linalg::{charpoly, spectral_radius};
use braidkit::props::{self, PlotDir, Properties, KEYS};
use braidkit::render::{render_braid, render_loop, RenderSpec};
use braidkit::spectra::{complexity, entropy, entropy_fixed_iterates, DEFAULT_MAXIT, DEFAULT_TOL};
use braidkit::trajectory::databraid_from_data;
use braidkit::{
    act, AnnularBraid, Braid, ClosureMethod, CycleMode, DataBraid, Error, Loop, LoopBatch,
    LoopNorm, TrajectorySet,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

const NO_CONVERGENCE: &str = "Warning: Failed to converge to requested tolerance; braid is likely finite-order or has low entropy.  Returning zero entropy.";

const FIXTURES: [(&str, &[i32], usize); 4] = [
    ("taffy3", &[-2, 1, 1, -2], 3),
    ("taffy4", &[1, 3, 2, 2, 1, 3], 4),
    ("taffy6", &[3, 2, 1, 2, 4, 5, 4, 3, 3, 2, 1, 2, 5, 4, 5, 3], 6),
    ("taffy6bad", &[2, 1, 2, 4, 5, 4, 3, 3, 2, 1, 2, 4, 5, 4], 6),
];

#[derive(Parser)]
#[command(name = "braidkit", version, about = "Braids, loop coordinates and topological entropy")]
struct Cli {
    /// Emit structured output as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BraidArg {
    /// Space-separated signed generator indices, e.g. "1 -2".
    #[arg(allow_hyphen_values = true, required_unless_present = "fixture")]
    word: Option<String>,
    /// Number of strands (defaults to one more than the largest index).
    #[arg(long)]
    n: Option<usize>,
    /// Read the word as an annular braid.
    #[arg(long)]
    annular: bool,
    /// Number of annulus punctures for --annular.
    #[arg(long, requires = "annular")]
    nann: Option<usize>,
    /// Named braid word instead of WORD.
    #[arg(long, value_parser = ["taffy3", "taffy4", "taffy6", "taffy6bad"], conflicts_with = "word")]
    fixture: Option<String>,
}

#[derive(Args, Clone)]
struct LoopArg {
    /// Space-separated Dynnikov coordinates a then b.
    #[arg(allow_hyphen_values = true)]
    coords: String,
    /// Loop carries a basepoint puncture.
    #[arg(long)]
    bp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Braid construction and algebra.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Loop construction and loop functionals.
    #[command(subcommand)]
    Loop(LoopCmd),
    /// Act with a braid on one or more loops.
    Act {
        #[command(flatten)]
        braid: BraidArg,
        /// Loop coordinates; repeat for a batch (default: canonical loop).
        #[arg(long = "loop", allow_hyphen_values = true)]
        loops: Vec<String>,
        #[arg(long)]
        bp: bool,
        /// Also print the effective linear action.
        #[arg(long)]
        matrix: bool,
    },
    /// Normal form: image of the canonical basepoint loop.
    Loopcoords {
        #[command(flatten)]
        braid: BraidArg,
    },
    /// Limit cycle of the effective linear action.
    Cycle {
        #[command(flatten)]
        braid: BraidArg,
        #[arg(long = "loop", allow_hyphen_values = true)]
        start: Option<String>,
        #[arg(long)]
        bp: bool,
        /// Report one matrix per iterate instead of their product.
        #[arg(long)]
        iter: bool,
        #[arg(long, default_value_t = 1000)]
        maxit: usize,
    },
    /// Characteristic polynomial and spectral radius of the cycle product.
    Charpoly {
        #[command(flatten)]
        braid: BraidArg,
        #[arg(long, default_value_t = 1000)]
        maxit: usize,
    },
    /// Topological entropy estimate.
    Entropy {
        #[command(flatten)]
        braid: BraidArg,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAXIT)]
        maxit: usize,
        /// Use a fixed number of iterates on --loop instead.
        #[arg(long, requires = "start")]
        iterates: Option<usize>,
        #[arg(long = "loop", allow_hyphen_values = true)]
        start: Option<String>,
        #[arg(long)]
        bp: bool,
    },
    /// One-application geometric complexity.
    Complexity {
        #[command(flatten)]
        braid: BraidArg,
    },
    /// Reduced Burau matrix.
    Burau {
        #[command(flatten)]
        braid: BraidArg,
        /// Evaluation point (integer, rational p/q or decimal).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "symbolic")]
        at: Option<String>,
        #[arg(long)]
        symbolic: bool,
    },
    /// Alexander polynomial of the braid closure.
    Alexander {
        #[command(flatten)]
        braid: BraidArg,
        #[arg(long)]
        centered: bool,
    },
    /// Extract a braid from trajectory data (CSV t,id,x,y or JSON).
    Fromdata {
        file: PathBuf,
        /// Projection angle in radians.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        angle: f64,
        #[arg(long, value_enum, default_value_t = Closure::Default)]
        closure: Closure,
        /// Keep crossing times.
        #[arg(long)]
        databraid: bool,
    },
    /// Finite-time braiding exponent of a databraid JSON file.
    Ftbe {
        file: PathBuf,
        /// Time interval (default: span of the crossing times).
        #[arg(long = "T")]
        t: Option<f64>,
        #[arg(long, value_enum, default_value_t = Norm::Intaxis)]
        norm: Norm,
    },
    /// Render a braid diagram or loop as SVG.
    #[command(subcommand)]
    Render(RenderCmd),
    /// Read or persist global properties.
    #[command(subcommand)]
    Prop(PropCmd),
}

#[derive(Subcommand)]
enum BraidCmd {
    Make {
        #[command(flatten)]
        braid: BraidArg,
    },
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        n: Option<usize>,
    },
    Inverse {
        #[command(flatten)]
        braid: BraidArg,
    },
    Power {
        #[command(flatten)]
        braid: BraidArg,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    Compact {
        #[command(flatten)]
        braid: BraidArg,
    },
    Equals {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        n: Option<usize>,
    },
    Istrivial {
        #[command(flatten)]
        braid: BraidArg,
    },
    Perm {
        #[command(flatten)]
        braid: BraidArg,
    },
    Writhe {
        #[command(flatten)]
        braid: BraidArg,
    },
    Subbraid {
        #[command(flatten)]
        braid: BraidArg,
        /// Strands to keep (1-based, space-separated).
        #[arg(long)]
        keep: String,
    },
    Tensor {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        na: Option<usize>,
        #[arg(long)]
        nb: Option<usize>,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    Halftwist {
        n: usize,
    },
    /// Convert an annular braid to an ordinary braid.
    Annular {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        nann: Option<usize>,
    },
}

#[derive(Subcommand)]
enum LoopCmd {
    Make {
        #[command(flatten)]
        l: LoopArg,
    },
    Canonical {
        n: usize,
        #[arg(long)]
        bp: bool,
    },
    Intersec {
        #[command(flatten)]
        l: LoopArg,
    },
    Minlength {
        #[command(flatten)]
        l: LoopArg,
    },
    Intaxis {
        #[command(flatten)]
        l: LoopArg,
    },
}

#[derive(Args)]
struct RenderOpts {
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    dir: Option<PlotDir>,
    /// Draw crossings without over/under gaps.
    #[arg(long)]
    flat: bool,
    #[arg(long)]
    width: Option<u32>,
    #[arg(long)]
    height: Option<u32>,
}

#[derive(Subcommand)]
enum RenderCmd {
    Braid {
        #[command(flatten)]
        braid: BraidArg,
        #[command(flatten)]
        opts: RenderOpts,
    },
    Loop {
        #[command(flatten)]
        l: LoopArg,
        #[command(flatten)]
        opts: RenderOpts,
    },
}

#[derive(Subcommand)]
enum PropCmd {
    Get { key: String },
    Set {
        key: String,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    List,
    /// Remove persisted settings.
    Reset,
}

#[derive(Clone, Copy, ValueEnum)]
enum Closure {
    Default,
    Mindist,
    None,
}

#[derive(Clone, Copy, ValueEnum)]
enum Norm {
    Minlength,
    Intaxis,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn config_path() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os("BRAIDKIT_CONFIG") {
        return Some(PathBuf::from(p));
    }
    std::env::var_os("HOME").map(|h| Path::new(&h).join(".config/braidkit/props.json"))
}

fn load_properties() -> Result<Properties, Error> {
    let mut p = match config_path().filter(|p| p.exists()) {
        Some(path) => {
            let text = fs::read_to_string(&path)?;
            serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
        }
        None => Properties::default(),
    };
    p.apply_env()?;
    Ok(p)
}

fn parse_word(s: &str) -> Result<Vec<i32>, Failure> {
    Braid::parse_word(s).map_err(|e| usage(e.to_string()))
}

fn parse_braid(s: &str, n: Option<usize>) -> Result<Braid, Failure> {
    Ok(Braid::new(parse_word(s)?, n)?)
}

fn parse_ints(s: &str) -> Result<Vec<BigInt>, Failure> {
    s.split(|c: char| c.is_whitespace() || ",()[]".contains(c))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BigInt>().map_err(|_| usage(format!("not an integer: '{t}'"))))
        .collect()
}

fn parse_loop(s: &str, bp: bool) -> Result<Loop, Failure> {
    Ok(Loop::new(parse_ints(s)?, bp)?)
}

enum Input {
    Plain(Braid),
    Annular(AnnularBraid),
}

impl BraidArg {
    fn input(&self) -> Result<Input, Failure> {
        let (word, n) = match &self.fixture {
            Some(name) => {
                let (_, w, n) = FIXTURES.iter().find(|f| f.0 == name).expect("validated by clap");
                (w.to_vec(), Some(self.n.unwrap_or(*n)))
            }
            None => (parse_word(self.word.as_deref().unwrap_or(""))?, self.n),
        };
        if self.annular {
            Ok(Input::Annular(AnnularBraid::new(word, self.nann)?))
        } else {
            Ok(Input::Plain(Braid::new(word, n)?))
        }
    }

    /// Ordinary braid, converting annular input.
    fn braid(&self) -> Result<Braid, Failure> {
        Ok(match self.input()? {
            Input::Plain(b) => b,
            Input::Annular(a) => a.to_braid(),
        })
    }
}

struct Printer {
    json: bool,
}

impl Printer {
    fn emit(&self, text: impl std::fmt::Display, value: Value) {
        if self.json {
            println!("{value}");
        } else {
            println!("{text}");
        }
    }

    fn braid(&self, b: &Braid) {
        self.emit(b, b.to_json());
    }

    fn flag(&self, v: bool) {
        self.emit(v, json!(v));
    }
}

fn big_list(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| serde_json::from_str(&x.to_string()).expect("integer")).collect())
}

fn run(cli: Cli) -> Outcome {
    let out = Printer { json: cli.json };
    match cli.command {
        Command::Braid(cmd) => braid_cmd(cmd, &out),
        Command::Loop(cmd) => loop_cmd(cmd, &out),
        Command::Act { braid, loops, bp, matrix } => {
            let b = braid.braid()?;
            let loops = if loops.is_empty() {
                vec![Loop::canonical(b.n().max(2), bp)?]
            } else {
                loops.iter().map(|s| parse_loop(s, bp)).collect::<Result<_, _>>()?
            };
            if matrix {
                let mut text = Vec::new();
                let mut values = Vec::new();
                for l in &loops {
                    let (image, m) = act_with_matrix(&b, l)?;
                    text.push(format!("{image}\n{m}"));
                    values.push(json!({ "loop": image.to_json(), "matrix": m.to_json() }));
                }
                let value = if values.len() == 1 { values.remove(0) } else { Value::Array(values) };
                out.emit(text.join("\n\n"), value);
            } else if loops.len() == 1 {
                let image = act(&b, &loops[0])?;
                out.emit(&image, image.to_json());
            } else {
                let images = act_batch(&b, &LoopBatch::new(loops)?)?;
                let value = Value::Array(images.loops().iter().map(Loop::to_json).collect());
                out.emit(&images, value);
            }
            Ok(())
        }
        Command::Loopcoords { braid } => {
            let l = loopcoords(&braid.braid()?);
            out.emit(&l, l.to_json());
            Ok(())
        }
        Command::Cycle { braid, start, bp, iter, maxit } => {
            let b = braid.braid()?;
            let l0 = start.map(|s| parse_loop(&s, bp)).transpose()?;
            let mode = if iter { CycleMode::PerIterate } else { CycleMode::Product };
            let r = cycle(&b, l0.as_ref(), maxit, mode)?;
            let mats: Vec<String> = r.matrices.iter().map(|m| m.to_string()).collect();
            let text = format!(
                "period {} (after {} iterates)\n{}",
                r.period,
                r.preperiod,
                mats.join("\n\n")
            );
            let value = json!({
                "period": r.period,
                "preperiod": r.preperiod,
                "matrices": r.matrices.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
            });
            out.emit(text, value);
            Ok(())
        }
        Command::Charpoly { braid, maxit } => {
            let b = braid.braid()?;
            let r = cycle(&b, None, maxit, CycleMode::Product)?;
            let m = r.product();
            let coeffs = charpoly(&m);
            let rho = spectral_radius(&m);
            let entropy = rho.ln() / r.period as f64;
            let text = format!(
                "{}\nspectral radius {rho:.4}\nentropy {entropy:.4}",
                coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            );
            let value = json!({
                "coeffs": big_list(&coeffs),
                "period": r.period,
                "spectral_radius": rho,
                "entropy": entropy,
            });
            out.emit(text, value);
            Ok(())
        }
        Command::Entropy { braid, tol, maxit, iterates, start, bp } => {
            let b = braid.braid()?;
            if let Some(k) = iterates {
                let l = parse_loop(start.as_deref().unwrap_or(""), bp)?;
                let h = entropy_fixed_iterates(&b, &l, k)?;
                out.emit(format!("{h:.4}"), json!({ "value": h, "iterations": k }));
                return Ok(());
            }
            let r = entropy(&b, tol, maxit);
            if !r.converged {
                eprintln!("{NO_CONVERGENCE}");
            }
            let value = serde_json::to_value(r).expect("serializable");
            out.emit(format!("{:.4}", r.value), value);
            Ok(())
        }
        Command::Complexity { braid } => {
            let c = complexity(&braid.braid()?);
            out.emit(format!("{c:.4}"), json!(c));
            Ok(())
        }
        Command::Burau { braid, at, symbolic: _ } => {
            let b = braid.braid()?;
            match at {
                None => {
                    let m = burau(&b);
                    out.emit(&m, m.to_json());
                }
                Some(s) => {
                    if let Ok(t) = s.parse::<BigRational>() {
                        let m = burau_at(&b, &t)?;
                        out.emit(&m, m.to_json());
                    } else {
                        let t: f64 = s.parse().map_err(|_| usage(format!("bad evaluation point '{s}'")))?;
                        let m = burau_at_f64(&b, t)?;
                        out.emit(&m, m.to_json());
                    }
                }
            }
            Ok(())
        }
        Command::Alexander { braid, centered } => {
            let p = alexander(&braid.braid()?, centered)?;
            out.emit(&p, p.to_json());
            Ok(())
        }
        Command::Fromdata { file, angle, closure, databraid } => {
            let ts = read_trajectories(&file)?;
            let ts = match closure {
                Closure::Default => ts.closure(ClosureMethod::Rank),
                Closure::Mindist => ts.closure(ClosureMethod::MinDistance),
                Closure::None => ts,
            };
            let db = databraid_from_data(&ts, angle)?;
            if databraid {
                let times: Vec<String> = db.tcross().iter().map(|t| format!("{t}")).collect();
                out.emit(format!("{}\n{}", db.braid(), times.join(" ")), db.to_json());
            } else {
                out.braid(db.braid());
            }
            Ok(())
        }
        Command::Ftbe { file, t, norm } => {
            let text = fs::read_to_string(&file).map_err(Error::from)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let db = DataBraid::from_json(&v)?;
            let norm = match norm {
                Norm::Minlength => LoopNorm::MinLength,
                Norm::Intaxis => LoopNorm::IntAxis,
            };
            let f = db.ftbe(t, norm)?;
            out.emit(format!("{f:.4}"), json!(f));
            Ok(())
        }
        Command::Render(cmd) => {
            let (svg, opts) = match cmd {
                RenderCmd::Braid { braid, opts } => (render_braid(&braid.braid()?, &opts.spec()), opts),
                RenderCmd::Loop { l, opts } => (render_loop(&parse_loop(&l.coords, l.bp)?, &opts.spec()), opts),
            };
            match opts.out {
                Some(path) => fs::write(&path, svg)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
                None => print!("{svg}"),
            }
            Ok(())
        }
        Command::Prop(cmd) => prop_cmd(cmd, &out),
    }
}

impl RenderOpts {
    fn spec(&self) -> RenderSpec {
        let mut spec = RenderSpec::default();
        if let Some(d) = self.dir {
            spec.direction = d;
        }
        if self.flat {
            spec.over_under = false;
        }
        if let Some(w) = self.width {
            spec.width = w;
        }
        if let Some(h) = self.height {
            spec.height = h;
        }
        spec
    }
}

fn read_trajectories(path: &Path) -> Result<TrajectorySet, Failure> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
    if path.extension().is_some_and(|e| e == "json") {
        let text = fs::read_to_string(path).map_err(io)?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(TrajectorySet::from_json(&v)?)
    } else {
        Ok(TrajectorySet::from_csv(fs::File::open(path).map_err(io)?)?)
    }
}

fn braid_cmd(cmd: BraidCmd, out: &Printer) -> Outcome {
    match cmd {
        BraidCmd::Make { braid } => match braid.input()? {
            Input::Plain(b) => out.braid(&b),
            Input::Annular(a) => out.emit(&a, a.to_json()),
        },
        BraidCmd::Mul { a, b, n } => out.braid(&parse_braid(&a, n)?.mul(&parse_braid(&b, n)?)?),
        BraidCmd::Inverse { braid } => out.braid(&braid.braid()?.inverse()),
        BraidCmd::Power { braid, k } => out.braid(&braid.braid()?.pow(k)),
        BraidCmd::Compact { braid } => out.braid(&braid.braid()?.compact()),
        BraidCmd::Equals { a, b, n } => out.flag(parse_braid(&a, n)?.equals(&parse_braid(&b, n)?)?),
        BraidCmd::Istrivial { braid } => out.flag(braid.braid()?.is_trivial()),
        BraidCmd::Perm { braid } => {
            let p = braid.braid()?.perm();
            let text: Vec<String> = p.iter().map(|k| k.to_string()).collect();
            out.emit(text.join(" "), json!(p));
        }
        BraidCmd::Writhe { braid } => {
            let w = braid.braid()?.writhe();
            out.emit(w, json!(w));
        }
        BraidCmd::Subbraid { braid, keep } => {
            let keep: Vec<usize> = keep
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| usage(format!("not a strand index: '{t}'"))))
                .collect::<Result<_, _>>()?;
            out.braid(&braid.braid()?.subbraid(&keep)?);
        }
        BraidCmd::Tensor { a, b, na, nb } => out.braid(&parse_braid(&a, na)?.tensor(&parse_braid(&b, nb)?)),
        BraidCmd::Random { n, len, seed } => out.braid(&Braid::random(n, len, seed)?),
        BraidCmd::Halftwist { n } => out.braid(&Braid::half_twist(n)?),
        BraidCmd::Annular { word, nann } => out.braid(&AnnularBraid::new(parse_word(&word)?, nann)?.to_braid()),
    }
    Ok(())
}

fn loop_cmd(cmd: LoopCmd, out: &Printer) -> Outcome {
    match cmd {
        LoopCmd::Make { l } => {
            let l = parse_loop(&l.coords, l.bp)?;
            out.emit(&l, l.to_json());
        }
        LoopCmd::Canonical { n, bp } => {
            let l = Loop::canonical(n, bp)?;
            out.emit(&l, l.to_json());
        }
        LoopCmd::Intersec { l } => {
            let x = parse_loop(&l.coords, l.bp)?.intersec();
            let join = |v: &[BigInt]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
            let text = format!("mu = {}\nnu = {}", join(&x.mu), join(&x.nu));
            out.emit(text, json!({ "mu": big_list(&x.mu), "nu": big_list(&x.nu) }));
        }
        LoopCmd::Minlength { l } => {
            let v = parse_loop(&l.coords, l.bp)?.minlength();
            out.emit(&v, big_list(std::slice::from_ref(&v))[0].clone());
        }
        LoopCmd::Intaxis { l } => {
            let v = parse_loop(&l.coords, l.bp)?.intaxis();
            out.emit(&v, big_list(std::slice::from_ref(&v))[0].clone());
        }
    }
    Ok(())
}

fn prop_cmd(cmd: PropCmd, out: &Printer) -> Outcome {
    let current = props::current();
    match cmd {
        PropCmd::Get { key } => {
            let v = current.get(&key)?;
            out.emit(&v, json!(v));
        }
        PropCmd::List => {
            let mut text = Vec::new();
            let mut map = serde_json::Map::new();
            for key in KEYS {
                let v = current.get(key)?;
                text.push(format!("{key}: {v}"));
                map.insert(key.to_string(), json!(v));
            }
            out.emit(text.join("\n"), Value::Object(map));
        }
        PropCmd::Set { key, value } => {
            let path = config_path().ok_or_else(|| Error::Io("no configuration path".into()))?;
            let mut stored = if path.exists() {
                let text = fs::read_to_string(&path).map_err(Error::from)?;
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?
            } else {
                Properties::default()
            };
            stored.set(&key, &value)?;
            if let Some(dir) = path.parent() {
                fs::create_dir_all(dir).map_err(Error::from)?;
            }
            let text = serde_json::to_string_pretty(&stored).expect("serializable");
            fs::write(&path, text).map_err(Error::from)?;
            let v = stored.get(&key)?;
            out.emit(&v, json!(v));
        }
        PropCmd::Reset => {
            if let Some(path) = config_path().filter(|p| p.exists()) {
                fs::remove_file(path).map_err(Error::from)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match load_properties() {
        Ok(p) => props::replace(p),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(Error::FractionalPowers)) => {
            eprintln!("{}", Error::FractionalPowers);
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
