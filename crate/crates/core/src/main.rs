use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverrep::analysis::{self, golden};
use quiverrep::decompose_d;
use quiverrep::format;
use quiverrep::knit;
use quiverrep::quiver::{self, ClassTag, Family, Quiver};
use quiverrep::rep;
use quiverrep::{decompose_a, sample, Error};

#[derive(Parser)]
#[command(name = "qrep", about = "Exact computations with representations of Dynkin quivers")]
struct Cli {
    /// Orientation spec applied to the quiver: toward:<v>, away:<v>, flip:<ids>, opposite.
    #[arg(long, global = true)]
    orientation: Option<String>,
    /// Write a DOT graph to this path.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dynkin, Euclidean or neither; a quiver file or a name such as E8.
    Classify { quiver: String },
    /// Split a representation file into indecomposables.
    Decompose {
        rep: PathBuf,
        #[arg(long)]
        check: bool,
        /// Write the basis change to this path.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// The knitted AR quiver, or a hammock with --hammock <vertex>.
    Knit {
        quiver: String,
        #[arg(long, conflicts_with = "ar")]
        hammock: Option<String>,
        #[arg(long)]
        ar: bool,
        /// Fail unless the hammock is a poset.
        #[arg(long)]
        poset: bool,
    },
    /// Regenerate the tables for a type such as E8 or D6 and compare with the stored ones.
    Tables {
        type_name: String,
        #[arg(long)]
        csv: bool,
    },
    /// Run a check suite: 248, triple <T>, core <T>, periods, quadruple <T>, a2a2,
    /// orientations <T>, random-a, random-d.
    Verify { suite: String, args: Vec<String> },
}

enum Failure {
    Verify(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Verify(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Out = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let res = run(&cli, &mut out);
    print!("{out}");
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verify(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Out {
    match &cli.cmd {
        Cmd::Classify { quiver } => classify(cli, quiver, out),
        Cmd::Decompose { rep, check, witness } => decompose(cli, rep, *check, witness.as_deref(), out),
        Cmd::Knit { quiver, hammock, ar: _, poset } => knit_cmd(cli, quiver, hammock.as_deref(), *poset, out),
        Cmd::Tables { type_name, csv } => tables(type_name, *csv, out),
        Cmd::Verify { suite, args } => verify(cli, suite, args, out),
    }
}

fn load_quiver(cli: &Cli, arg: &str) -> Result<Quiver, Failure> {
    let q = if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
        format::parse_quiver(&text)?
    } else {
        quiver::standard(arg).ok_or_else(|| Failure::Usage(format!("no file or standard quiver '{arg}'")))?
    };
    Ok(match &cli.orientation {
        Some(spec) => format::apply_orientation(&q, spec)?,
        None => q,
    })
}

fn write_dot(cli: &Cli, dot: impl FnOnce() -> String) -> Result<(), Failure> {
    if let Some(p) = &cli.dot {
        std::fs::write(p, dot()).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn labels(q: &Quiver, vs: &[usize]) -> String {
    vs.iter().map(|&v| q.label(v)).collect::<Vec<_>>().join(",")
}

fn classify(cli: &Cli, arg: &str, out: &mut String) -> Out {
    let q = load_quiver(cli, arg)?;
    let c = quiver::classify(&q)?;
    let _ = writeln!(out, "{}", c.tag);
    if let Some(w) = &c.witness {
        let _ = writeln!(out, "euclidean subquiver: {}", labels(&q, w));
    }
    write_dot(cli, || format::quiver_dot(&q))?;
    Ok(c.is_dynkin())
}

fn dims_text(d: &[i64]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn decompose(cli: &Cli, path: &Path, check: bool, witness: Option<&Path>, out: &mut String) -> Out {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let (m, _) = format::parse_rep(&text)?;
    let m = match &cli.orientation {
        Some(_) => return Err(Failure::Usage("--orientation does not apply to representation files".into())),
        None => m,
    };
    let q = m.quiver();
    if !quiver::is_dynkin(q) {
        return Err(Failure::Usage("decomposition needs a Dynkin quiver; use knit for a census".into()));
    }
    let dec = decompose_d::decompose(&m)?;
    let on_qn = decompose_d::qn_rank(q).is_ok();
    for s in &dec.summands {
        let mut line = format!("{}  dim {}", s.kind.describe(q), dims_text(&s.model.dim_vector()));
        if on_qn {
            if let Ok(c) = decompose_d::classify_indec_q(&s.model) {
                let _ = write!(line, "  class {c}");
            }
        }
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(out, "{} summands", dec.summands.len());
    if let Some(p) = witness {
        let mut w = String::new();
        for (v, mat) in dec.witness.iter().enumerate() {
            let _ = writeln!(w, "w {}", q.label(v));
            for i in 0..mat.rows() {
                let row: Vec<String> = mat.row(i).iter().map(|x| x.to_string()).collect();
                let _ = writeln!(w, "{}", row.join(" "));
            }
        }
        std::fs::write(p, w).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    if check {
        let ok = dec.verify(&m);
        let _ = writeln!(out, "witness check: {}", if ok { "ok" } else { "FAILED" });
        return Ok(ok);
    }
    Ok(true)
}

fn knit_cmd(cli: &Cli, arg: &str, hammock: Option<&str>, poset: bool, out: &mut String) -> Out {
    let q = load_quiver(cli, arg)?;
    match hammock {
        Some(x) => {
            let xv = q.vertex_or_err(x)?;
            let hf = knit::hammock_function(&q, xv)?;
            for (v, val) in &hf.values {
                let _ = writeln!(out, "{}@{} {val}", q.label(v.vertex), v.level);
            }
            let _ = writeln!(out, "{} vertices, max value {}", hf.support_size(), hf.max_value());
            write_dot(cli, || hf.to_dot())?;
            if poset {
                let ok = hf.is_poset();
                let _ = writeln!(out, "poset: {}", if ok { "yes" } else { "no" });
                return Ok(ok);
            }
        }
        None => {
            let ar = knit::knit_ar_quiver(&q)?;
            for i in 0..ar.len() {
                let v = ar.vertices[i];
                let _ = writeln!(out, "{}@{} {}", q.label(v.vertex), v.level, format::format_dim_vector(ar.dim(i)));
            }
            let _ = writeln!(out, "{} vertices", ar.len());
            write_dot(cli, || ar.to_dot())?;
        }
    }
    Ok(true)
}

fn parse_type(name: &str) -> Result<(Family, usize, Quiver), Failure> {
    let q = quiver::standard(name).ok_or_else(|| Failure::Usage(format!("unknown type '{name}'")))?;
    let (t, n) = quiver::dynkin_type(&q)?;
    Ok((t, n, q))
}

struct Report<'a> {
    out: &'a mut String,
    csv: bool,
    ok: bool,
}

impl Report<'_> {
    fn row<T: std::fmt::Debug + PartialEq>(&mut self, name: &str, got: &T, want: Option<&T>) {
        let status = match want {
            Some(w) if w == got => "ok",
            Some(_) => {
                self.ok = false;
                "MISMATCH"
            }
            None => "computed",
        };
        if self.csv {
            let _ = writeln!(self.out, "{name},{},{status}", format!("{got:?}").replace(',', ";"));
        } else {
            let _ = writeln!(self.out, "{name}: {got:?} [{status}]");
            if let Some(w) = want.filter(|w| *w != got) {
                let _ = writeln!(self.out, "  expected {w:?}");
            }
        }
    }
}

fn tables(name: &str, csv: bool, out: &mut String) -> Out {
    let (t, n, q) = parse_type(name)?;
    let q = Arc::new(q);
    let mut r = Report { out, csv, ok: true };
    if csv {
        let _ = writeln!(r.out, "table,value,status");
    }
    r.row("dim M", &analysis::highest_root(&q)?, golden::maximal_dims(t, n).as_ref());
    r.row("n_a(dim M)", &analysis::neighbor_sums_of_maximal(&q)?, None);
    if t != Family::A {
        let k = analysis::kinds_table(&q)?;
        r.row("kinds", &k.counts, golden::kinds(t, n).as_ref());
        r.row("total", &k.total(), Some(&(knit::knit_ar_quiver(&q)?.len())));
        r.row("kind 5 y-dims", &k.full_triple_y_dims, Some(&vec![1, 2]));
        if t == Family::E || n >= 5 {
            r.row("second table", &analysis::kinds_table_prime(&q)?, golden::kinds_prime(t, n).as_ref());
        }
    }
    Ok(r.ok)
}

fn verify(cli: &Cli, suite: &str, args: &[String], out: &mut String) -> Out {
    let type_arg = || -> Result<Arc<Quiver>, Failure> {
        let name = args.first().ok_or_else(|| Failure::Usage(format!("suite {suite} needs a type")))?;
        Ok(Arc::new(load_quiver(cli, name)?))
    };
    let mut r = Report { out, csv: false, ok: true };
    match suite {
        "248" => {
            for m in 6..=8 {
                let g = analysis::two_four_eight(&Arc::new(quiver::type_e(m)))?;
                let got = (g.r, g.hammock_size, g.double_prime_hammock_size);
                r.row(&format!("E{m} (r, |H(Δ′,x)|, |H(Δ″)|)"), &got, golden::two_four_eight(m).as_ref());
            }
        }
        "triple" => {
            let q = type_arg()?;
            let t = analysis::special_antichain_triple(&q)?;
            for (i, a) in t.members.iter().enumerate() {
                let _ = writeln!(r.out, "A({}) = {}", i + 1, dims_text(&a.dim_vector()));
            }
            r.row("dim M_y", &t.maximal.dim(t.y), Some(&2));
            r.row("M|Δ′ ≅ A(1)⊕A(2)⊕A(3) witness", &t.verify(), Some(&true));
        }
        "core" => {
            let q = type_arg()?;
            let c = analysis::core(&q)?;
            r.row("shape", &c.quiver.shape()?, Some(&ClassTag::Dynkin(Family::D, 4)));
            r.row("recipe", &c.recipe_holds(&q), Some(&true));
            r.row("dim_C M = (1,1,1;2)", &c.maximal_has_core_dims_1112(), Some(&true));
            write_dot(cli, || c.quiver.to_dot())?;
        }
        "periods" => {
            let figs: Vec<(Family, usize)> =
                (6..=8).map(|m| (Family::E, m)).chain((5..=8).map(|n| (Family::D, n))).collect();
            for (t, n) in figs {
                let f = analysis::euclidean_figure(t, n)?;
                let bars = analysis::abar_triple(&f)?;
                let want: Vec<(Vec<i64>, usize)> = match t {
                    Family::E => golden::abar_e(n).unwrap().to_vec(),
                    _ => golden::abar_d(n).to_vec(),
                };
                let mut got = Vec::new();
                for (d, _) in &want {
                    match bars.iter().find(|b| &b.dim_vector() == d) {
                        Some(b) => got.push(analysis::coxeter_period(&f.tilde, &b.dim_vector())?),
                        None => got.push(None),
                    }
                }
                let want_p: Vec<Option<usize>> = want.iter().map(|(_, p)| Some(*p)).collect();
                r.row(&format!("{t}~{n} periods"), &got, Some(&want_p));
            }
        }
        "quadruple" => {
            let q = type_arg()?;
            let quad = analysis::quadruple(&q)?;
            for (u, v) in quad.pair_dims(q.vertex_count()) {
                let _ = writeln!(r.out, "{} -> {}", dims_text(&u), dims_text(&v));
            }
            for s in &quad.singles {
                let _ = writeln!(r.out, "{}", dims_text(&s.dim_vector()));
            }
            let want_end = if quad.pairs.is_empty() { 2 } else { 6 };
            r.row("dim End(M|Δ″)", &quad.end_dim, Some(&want_end));
            r.row("witness", &quad.witness_ok, Some(&true));
        }
        "a2a2" => {
            for m in 6..=8 {
                let q = Arc::new(quiver::type_e(m).oriented_toward(2));
                r.row(&format!("E{m}"), &analysis::unique_thick_a2a2_check(&q)?, Some(&true));
            }
        }
        "orientations" => {
            let q = type_arg()?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let all: Vec<Quiver> = if q.arrow_count() <= 6 {
                q.all_orientations()
            } else {
                (0..50).map(|_| sample::random_orientation(&q, &mut rng)).collect()
            };
            let mut good = 0;
            for o in &all {
                let o = Arc::new(o.clone());
                if analysis::special_antichain_triple(&o).map(|t| t.verify()).unwrap_or(false) {
                    good += 1;
                }
            }
            r.row("orientations with a verified triple", &good, Some(&all.len()));
        }
        "random-a" | "random-d" => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let mut good = 0;
            let runs = 50;
            for _ in 0..runs {
                let ok = if suite == "random-a" {
                    let n = rand::Rng::gen_range(&mut rng, 1..=8);
                    let q = Arc::new(sample::random_orientation(&quiver::type_a(n), &mut rng));
                    let m = sample::random_rep(&q, 5, &mut rng);
                    decompose_a::decompose_type_a(&m)?.decomposition.verify(&m)
                } else {
                    let n = rand::Rng::gen_range(&mut rng, 4..=7);
                    let q = Arc::new(quiver::type_d(n));
                    let m = sample::random_rep(&q, 4, &mut rng);
                    let d = decompose_d::decompose_type_d(&m)?;
                    d.verify(&m) && d.summands.iter().all(|s| rep::is_brick(&s.model).unwrap_or(false))
                };
                good += ok as usize;
            }
            r.row("verified decompositions", &good, Some(&runs));
        }
        other => return Err(Failure::Usage(format!("unknown suite '{other}'"))),
    }
    Ok(r.ok)
}

