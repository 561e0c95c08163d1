use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use torbord::bordism::{self, null_bordism_flags};
use torbord::charnum::{self, immersion_bounds_for_m, sharp_immersion_family};
use torbord::enumerate::{enumerate, write_jsonl, EnumerateOptions, Find, Source};
use torbord::gamma::{gamma_table, gamma_vector, product_chern};
use torbord::oracle::{verify_with, Checks};
use torbord::symfun::{format_rational, partitions, todd_coefficients, Partition};
use torbord::{analyze, Error, SimplicialComplex};

#[derive(Parser)]
#[command(name = "torbord", version, about = "Invariants and bordism classes of toric manifolds X_K")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Select {
    /// Comma-separated partition, e.g. 1,1,2.
    #[arg(long, conflicts_with = "all")]
    partition: Option<String>,
    /// Every partition of m - 1 (the default).
    #[arg(long)]
    all: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Every invariant of a complex.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Chern numbers of X_K.
    Chern {
        file: PathBuf,
        #[command(flatten)]
        select: Select,
        #[command(flatten)]
        out: Output,
    },
    /// The Milnor number s_{m-1}[X_K].
    Milnor {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Pontryagin numbers of X_K (odd m).
    Pontryagin {
        file: PathBuf,
        #[command(flatten)]
        select: Select,
        #[command(flatten)]
        out: Output,
    },
    /// Stiefel-Whitney numbers of X_K^R, or of X_K with --complex.
    Sw {
        file: PathBuf,
        #[arg(long)]
        complex: bool,
        #[command(flatten)]
        select: Select,
        #[command(flatten)]
        out: Output,
    },
    /// The chi_y genus as a polynomial in -y.
    ChiY {
        file: PathBuf,
        /// Show both the alpha and Bier h-vector computations.
        #[arg(long, short)]
        verbose: bool,
        #[command(flatten)]
        out: Output,
    },
    /// The signature of X_K.
    Signature {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Gamma vectors for a given m.
    Gamma {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        select: Select,
        #[command(flatten)]
        out: Output,
    },
    /// Todd polynomial coefficients tau_I.
    Todd {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// The Alexander dual as a JSON complex.
    Dual { file: PathBuf },
    /// The Bier sphere as a JSON complex on 2m vertices.
    Bier { file: PathBuf },
    /// Fan checks.
    Fan {
        #[command(subcommand)]
        command: FanCommand,
    },
    /// Bordism classes.
    Bordism {
        #[command(subcommand)]
        command: BordismCommand,
    },
    /// Immersion bounds for X_K^R.
    Immersion {
        /// A complex; its m is used.
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        m: Option<usize>,
        /// Show the sharp product family in dimension N instead.
        #[arg(long, conflicts_with_all = ["file", "m"])]
        family: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Compare closed forms with the cohomology-ring oracle.
    Oracle {
        file: PathBuf,
        /// Families to compare: chern, milnor, pontryagin, sw.
        #[arg(long, value_delimiter = ',')]
        check: Vec<CheckKind>,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate complexes on [m] and write JSONL hits.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "all")]
        find: FindKind,
        /// Sample randomly with this seed instead of enumerating exhaustively.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FanCommand {
    /// Exit 0 iff every facet cone is unimodular.
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum BordismCommand {
    /// Whether two complexes give bordant X_K.
    Compare {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// [X_K] over the basis {[X_(m-1-2k)]}.
    Decompose {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Whether [X_K] is a polynomial generator.
    Generator {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Null-bordism of X_K^R (--real) or of oriented X_K (--oriented).
    Null {
        file: PathBuf,
        #[arg(long, required_unless_present = "oriented")]
        real: bool,
        #[arg(long, conflicts_with = "real")]
        oriented: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Chern,
    Milnor,
    Pontryagin,
    Sw,
}

#[derive(Clone, Copy, ValueEnum)]
enum FindKind {
    BordantPairs,
    Generators,
    All,
}

enum Failure {
    Lib(Error),
    Io(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn write_hits(hits: &[torbord::Hit], out: Option<&Path>) -> Result<(), Failure> {
    let result = match out {
        Some(path) => write_jsonl(hits, io::BufWriter::new(fs::File::create(path)?)),
        None => write_jsonl(hits, io::stdout().lock()),
    };
    match result {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Io(_) => 2,
            Failure::Lib(e) => match e {
                Error::MTooLarge { .. } | Error::Dimension { .. } => 3,
                Error::InternalMismatch { .. }
                | Error::Asymmetry { .. }
                | Error::NonRegular { .. }
                | Error::NonIntegral { .. } => 1,
                _ => 2,
            },
        }
    }
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
    };
    Ok(SimplicialComplex::from_str_any(&text)?)
}

fn selected(select: &Select, m: usize) -> Result<Vec<Partition>, Failure> {
    match &select.partition {
        Some(p) => Ok(vec![p.parse::<Partition>()?]),
        None => Ok(partitions(m - 1)),
    }
}

fn print_json(v: &impl serde::Serialize) {
    let mut out = io::stdout().lock();
    if serde_json::to_writer(&mut out, v).is_ok() {
        let _ = writeln!(out);
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { file, out } => {
            let k = read_complex(&file)?;
            let r = analyze(&k)?;
            if out.json {
                print_json(&r);
                return Ok(());
            }
            let c = &r.characteristic;
            println!("K            {k}");
            println!("chi(K)       {}", r.euler_characteristic_k);
            println!("ghosts       {}", join(&r.ghost_vertices));
            println!("f            {}", join(&r.f));
            println!("alpha        {}", join(&r.alpha));
            println!("mu           {}", join(&r.mu));
            println!("h(Bier)      {}", join(&r.h_bier));
            println!("Bier facets  {}", r.bier_facets);
            println!("fan regular  {}", yes(r.fan_regular));
            println!("chi_y        {}", join(&c.chi_y));
            println!("chi(X_K)     {}", c.euler_characteristic);
            println!("signature    {}", c.signature);
            println!("Todd         {}", c.todd);
            println!("Milnor       {}", c.milnor);
            if let Some(chern) = &c.chern {
                for e in chern {
                    println!("c[{}]{:>w$}", e.partition, e.value, w = 12 - e.partition.len());
                }
            }
            for e in &c.pontryagin {
                println!("p[{}]{:>w$}", e.partition, e.value, w = 12 - e.partition.len());
            }
            println!("[X_K]        {}", r.bordism.raw_expression);
            println!("reduced      {}", r.bordism.reduced_expression);
            println!("generator    {}", yes(r.bordism.generator.is_generator));
            println!("X_K^R bounds {}", yes(r.bordism.null.real_null_bordant));
            println!("X_K bounds   {} (oriented)", yes(r.bordism.null.oriented_null_bordant));
            for n in &r.notes {
                println!("note: {n}");
            }
        }
        Command::Chern { file, select, out } => {
            let k = read_complex(&file)?;
            let rows = selected(&select, k.m())?
                .into_iter()
                .map(|p| Ok((p.to_string(), charnum::chern_number(&k, &p)?.to_string())))
                .collect::<Result<Vec<_>, Failure>>()?;
            print_table(&rows, out.json);
        }
        Command::Milnor { file, out } => {
            let k = read_complex(&file)?;
            let s = charnum::milnor_number(&k)?;
            let d = charnum::milnor_divisor(k.m() - 1);
            if out.json {
                print_json(&json!({ "milnor": s.to_string(), "divisor": d.to_string() }));
            } else {
                println!("s_{} = {s}  (m_{} = {d})", k.m() - 1, k.m() - 1);
            }
        }
        Command::Pontryagin { file, select, out } => {
            let k = read_complex(&file)?;
            if k.m() % 2 == 0 {
                return Err(Error::Dimension { what: "Pontryagin numbers", requirement: "odd m", m: k.m() }.into());
            }
            let rows = match &select.partition {
                Some(p) => {
                    let p: Partition = p.parse()?;
                    vec![(p.to_string(), charnum::pontryagin_number(&k, &p)?.to_string())]
                }
                None => charnum::all_pontryagin_numbers(&k)?
                    .into_iter()
                    .map(|(p, v)| (p.to_string(), v.to_string()))
                    .collect(),
            };
            print_table(&rows, out.json);
        }
        Command::Sw { file, complex, select, out } => {
            let k = read_complex(&file)?;
            let rows = selected(&select, k.m())?
                .into_iter()
                .map(|p| {
                    let w = if complex {
                        charnum::sw_number_complex(&k, &p)?
                    } else {
                        charnum::sw_number_real(&k, &p)?
                    };
                    Ok((p.to_string(), w.to_string()))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            print_table(&rows, out.json);
        }
        Command::ChiY { file, verbose, out } => {
            let k = read_complex(&file)?;
            let chi = charnum::chi_y(&k)?;
            if out.json {
                let mut v = json!({ "coefficients": chi.coefficients() });
                if verbose {
                    v["from_alpha"] = json!(chi.from_alpha());
                    v["from_h"] = json!(chi.from_h());
                }
                print_json(&v);
            } else {
                println!("chi_y = {}", polynomial(chi.coefficients()));
                if verbose {
                    println!("alpha route   {}", join(chi.from_alpha()));
                    println!("h(Bier) route {}", join(chi.from_h()));
                }
            }
        }
        Command::Signature { file, out } => {
            let k = read_complex(&file)?;
            let s = charnum::signature(&k)?;
            if out.json {
                print_json(&json!({ "signature": s }));
            } else {
                println!("{s}");
            }
        }
        Command::Gamma { m, select, out } => gamma(m, &select, out.json)?,
        Command::Todd { n, out } => {
            let rows: Vec<(String, String)> = todd_coefficients(n)
                .into_iter()
                .map(|(p, t)| (p.to_string(), format_rational(&t)))
                .collect();
            print_table(&rows, out.json);
        }
        Command::Dual { file } => {
            println!("{}", read_complex(&file)?.alexander_dual().to_json());
        }
        Command::Bier { file } => {
            let k = read_complex(&file)?;
            println!("{}", torbord::bier_sphere(&k).complex().to_json());
        }
        Command::Fan { command: FanCommand::Check { file } } => {
            let k = read_complex(&file)?;
            return match torbord::bier::facet_cone_check(&k) {
                Ok(true) => {
                    println!("regular");
                    Ok(())
                }
                Ok(false) => Err(Failure::Mismatch("a facet cone is not unimodular".into())),
                Err(Error::NonRegular { facet, det }) => {
                    Err(Failure::Mismatch(format!("facet cone {facet} has determinant {det}")))
                }
                Err(e) => Err(e.into()),
            };
        }
        Command::Bordism { command } => bordism_command(command)?,
        Command::Immersion { file, m, family, out } => {
            if let Some(n) = family {
                let fam = sharp_immersion_family(n)?;
                let factors: Vec<String> = fam.factors().iter().map(|k| k.to_text()).collect();
                if out.json {
                    print_json(&json!({
                        "n": n,
                        "factors": factors,
                        "bound": fam.bound(),
                        "product_bound": fam.product_bound(),
                    }));
                } else {
                    println!("factors  {}", factors.join(" x "));
                    println!("no immersion in R^N for N < {}", fam.bound());
                }
                return Ok(());
            }
            let m = match (file, m) {
                (Some(f), _) => read_complex(&f)?.m(),
                (None, Some(m)) => m,
                (None, None) => return Err(Failure::Io("give a complex file, --m or --family".into())),
            };
            if m < 2 {
                return Err(Error::MTooSmall { m }.into());
            }
            let b = immersion_bounds_for_m(m);
            if out.json {
                print_json(&b);
            } else {
                println!("m = {m}, p = {}", b.p);
                println!("w-bar_k nonzero up to k = {}", b.k_max);
                println!("X_K^R needs N >= {}", b.n_real_min);
                println!("X_K needs N >= {}", b.n_complex_min);
            }
        }
        Command::Oracle { file, check, out } => {
            let k = read_complex(&file)?;
            let checks = if check.is_empty() {
                Checks::default()
            } else {
                Checks {
                    chern: check.iter().any(|c| matches!(c, CheckKind::Chern)),
                    milnor: check.iter().any(|c| matches!(c, CheckKind::Milnor)),
                    pontryagin: check.iter().any(|c| matches!(c, CheckKind::Pontryagin)),
                    sw: check.iter().any(|c| matches!(c, CheckKind::Sw)),
                }
            };
            let report = verify_with(&k, checks)?;
            if out.json {
                print_json(&report);
            } else {
                println!("compared {} numbers, {} mismatches", report.compared, report.mismatches.len());
                for mm in &report.mismatches {
                    println!("  {mm}");
                }
            }
            if !report.passed() {
                return Err(Failure::Mismatch(format!("{} mismatches", report.mismatches.len())));
            }
        }
        Command::Enumerate { m, find, seed, samples, out } => {
            let find = match find {
                FindKind::BordantPairs => Find::BordantPairs,
                FindKind::Generators => Find::Generators,
                FindKind::All => Find::All,
            };
            let source = match seed {
                Some(seed) => Source::Sample { count: samples, seed },
                None => Source::Exhaustive,
            };
            let start = Instant::now();
            let hits = enumerate(&EnumerateOptions { m, find, source })?;
            write_hits(&hits, out.as_deref())?;
            eprintln!("{} hits in {:.2?}", hits.len(), start.elapsed());
        }
    }
    Ok(())
}

fn gamma(m: usize, select: &Select, as_json: bool) -> Result<(), Failure> {
    let vectors = match &select.partition {
        Some(p) => vec![gamma_vector(m, &p.parse()?)?],
        None => gamma_table(m)?.entries().to_vec(),
    };
    let mut rows = Vec::new();
    for g in &vectors {
        let product = (0..m)
            .map(|j| product_chern(m, j, g.partition()))
            .collect::<Result<Vec<_>, _>>()?;
        let agree = g.values().iter().zip(&product).all(|(a, b)| a.bit(0) == b.bit(0));
        rows.push((g, product, agree));
    }
    if as_json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(g, product, agree)| {
                json!({
                    "partition": g.partition().to_string(),
                    "gamma": g.values().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "product_chern": product.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "mod2_agrees": agree,
                })
            })
            .collect();
        print_json(&v);
    } else {
        println!("{:<12} {:<32} {:<32} mod 2", "I", "gamma_I", "product");
        for (g, product, agree) in &rows {
            println!(
                "{:<12} {:<32} {:<32} {}",
                g.partition().to_string(),
                join(g.values()),
                join(product),
                if *agree { "ok" } else { "differs" }
            );
        }
    }
    Ok(())
}

fn bordism_command(command: BordismCommand) -> Result<(), Failure> {
    match command {
        BordismCommand::Compare { left, right, out } => {
            let (k1, k2) = (read_complex(&left)?, read_complex(&right)?);
            let f = bordism::f_criterion(&k1, &k2)?;
            let h = bordism::h_criterion(&k1, &k2)?;
            let bordant = bordism::bordant_unitary(&k1, &k2)?;
            if out.json {
                print_json(&json!({ "bordant": bordant, "f_criterion": f, "h_criterion": h }));
            } else {
                println!("{}", if bordant { "bordant" } else { "not bordant" });
            }
        }
        BordismCommand::Decompose { file, out } => {
            let class = bordism::decompose(&read_complex(&file)?)?;
            if out.json {
                print_json(&json!({
                    "class": class,
                    "raw_expression": class.raw_expression(),
                    "reduced_expression": class.reduced_expression(),
                }));
            } else {
                println!("{class}");
            }
        }
        BordismCommand::Generator { file, out } => {
            let cert = bordism::is_polynomial_generator(&read_complex(&file)?)?;
            if out.json {
                print_json(&cert);
            } else {
                println!(
                    "{}  (s_{} = {}, m_{} = {})",
                    if cert.is_generator { "generator" } else { "not a generator" },
                    cert.m - 1,
                    cert.milnor,
                    cert.m - 1,
                    cert.milnor_divisor
                );
            }
        }
        BordismCommand::Null { file, real, oriented: _, out } => {
            let k = read_complex(&file)?;
            let flags = null_bordism_flags(&k);
            if out.json {
                let v = if real {
                    json!({
                        "null_bordant": flags.real_null_bordant,
                        "orientable": flags.real_orientable,
                    })
                } else {
                    json!({
                        "null_bordant": flags.oriented_null_bordant,
                        "oriented_class": flags.oriented_class,
                        "forgetful_kernel": flags.forgetful_kernel,
                    })
                };
                print_json(&v);
            } else if real {
                println!("X_K^R bounds: {}", yes(flags.real_null_bordant));
            } else {
                println!("X_K bounds (oriented): {}", yes(flags.oriented_null_bordant));
                println!("[X_K] = {}[CP^{}] in oriented bordism", flags.oriented_class, k.m() - 1);
            }
        }
    }
    Ok(())
}

fn print_table(rows: &[(String, String)], as_json: bool) {
    if as_json {
        let map: serde_json::Map<String, Value> =
            rows.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        print_json(&map);
    } else {
        let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in rows {
            println!("{k:<w$}  {v}");
        }
    }
}

fn polynomial(c: &[i64]) -> String {
    let mut out = String::new();
    for (p, &a) in c.iter().enumerate().filter(|(_, &a)| a != 0) {
        let sign = if a < 0 { "-" } else { "+" };
        if out.is_empty() {
            if a < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mag = a.unsigned_abs();
        match p {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                }
                out.push_str(if p == 1 { "(-y)" } else { "(-y)^" });
                if p > 1 {
                    out.push_str(&p.to_string());
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Io(msg) | Failure::Mismatch(msg) => eprintln!("error: {msg}"),
            }
            let _ = io::stderr().flush();
            ExitCode::from(f.code())
        }
    }
}
