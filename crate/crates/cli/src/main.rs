use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lensalex_core::alexander::{
    alexander, alexander_direct, alexander_formula, chain_alexander,
    check_skein, twisted_alexander, AlexError,
};
use lensalex_core::homology::{h1_complement, h1_from_presentation, AbelianGroup};
use lensalex_core::presentation::{chain_presentation, lens_presentation, Presentation};

use lensalex::io::{parse_input, poly_to_json, Input};

#[derive(Parser)]
#[command(name = "lensalex", version, about = "Alexander polynomials of links in lens spaces")]
struct Cli {
    /// output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// seed for randomized subcommands (reserved)
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a diagram file against the normal-form constraints
    Validate { path: PathBuf },
    /// Print the fundamental-group presentation of the complement
    Group { path: PathBuf },
    /// First homology of the complement
    H1 { path: PathBuf },
    /// Alexander polynomial, by both routes where applicable
    Alex { path: PathBuf },
    /// Twisted Alexander polynomial at mu = zeta_d^m
    Talex {
        #[arg(long)]
        mu: i64,
        path: PathBuf,
    },
    /// Verify the skein relation at one crossing
    Skein {
        #[arg(long)]
        crossing: usize,
        #[arg(long)]
        unit_bound: Option<i64>,
        path: PathBuf,
    },
    /// Tabulate invariants for a manifest of diagram files
    Batch { manifest: PathBuf },
}

/// exit 1: domain failure (invalid diagram, degenerate input, violated
/// invariant); exit 2: parse or IO failure.
enum Fail {
    Domain(String),
    Io(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Domain(_) => 1,
            Fail::Io(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Fail::Domain(m) | Fail::Io(m) => m,
        }
    }
}

impl From<AlexError> for Fail {
    fn from(e: AlexError) -> Fail {
        Fail::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read_input(path: &Path) -> Result<Input, Fail> {
    let text = fs::read_to_string(path)
        .map_err(|e| Fail::Io(format!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| Fail::Io(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<(), Fail> {
    let _ = cli.seed; // reserved for randomized subcommands
    match &cli.cmd {
        Cmd::Validate { path } => cmd_validate(path, cli.format),
        Cmd::Group { path } => cmd_group(path, cli.format),
        Cmd::H1 { path } => cmd_h1(path, cli.format),
        Cmd::Alex { path } => cmd_alex(path, cli.format),
        Cmd::Talex { mu, path } => cmd_talex(path, *mu, cli.format),
        Cmd::Skein { crossing, unit_bound, path } => {
            cmd_skein(path, *crossing, *unit_bound, cli.format)
        }
        Cmd::Batch { manifest } => cmd_batch(manifest, cli.format),
    }
}

fn cmd_validate(path: &Path, format: Format) -> Result<(), Fail> {
    let violations = match read_input(path)? {
        Input::Single(d) => d.validate().err().unwrap_or_default(),
        Input::Chain(c) => c.validate().err().unwrap_or_default(),
    };
    let ok = violations.is_empty();
    match format {
        Format::Json => {
            let vs: Vec<String> =
                violations.iter().map(|v| v.to_string()).collect();
            println!("{}", json!({ "ok": ok, "violations": vs }));
        }
        _ => {
            if ok {
                println!("ok");
            } else {
                for v in &violations {
                    println!("{v}");
                }
            }
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Fail::Domain(format!("{} violation(s)", violations.len())))
    }
}

fn presentation_of(input: &Input) -> Result<Presentation, Fail> {
    let r = match input {
        Input::Single(d) => lens_presentation(d),
        Input::Chain(c) => chain_presentation(c),
    };
    r.map_err(|e| Fail::Domain(e.to_string()))
}

fn cmd_group(path: &Path, format: Format) -> Result<(), Fail> {
    let pres = presentation_of(&read_input(path)?)?;
    match format {
        Format::Json => {
            let names = pres.gen_names();
            let rels: Vec<Value> = pres
                .relators
                .iter()
                .map(|(tag, w)| {
                    json!({
                        "tag": tag.to_string(),
                        "word": w.to_display(&names),
                    })
                })
                .collect();
            println!("{}", json!({ "gens": names, "relators": rels }));
        }
        _ => print!("{}", pres.to_display()),
    }
    Ok(())
}

/// `Z^r (+) Z_{d1} (+) ...`
fn group_string(g: &AbelianGroup) -> String {
    let mut parts = Vec::new();
    match g.free_rank {
        0 => {}
        1 => parts.push(String::from("Z")),
        r => parts.push(format!("Z^{r}")),
    }
    for t in &g.torsion {
        parts.push(format!("Z_{t}"));
    }
    if parts.is_empty() {
        String::from("0")
    } else {
        parts.join(" (+) ")
    }
}

fn cmd_h1(path: &Path, format: Format) -> Result<(), Fail> {
    let input = read_input(path)?;
    let g = match &input {
        Input::Single(d) => {
            h1_complement(d).map_err(|e| Fail::Domain(e.to_string()))?
        }
        Input::Chain(_) => h1_from_presentation(&presentation_of(&input)?),
    };
    match format {
        Format::Json => {
            let torsion: Vec<String> =
                g.torsion.iter().map(|t| t.to_string()).collect();
            println!(
                "{}",
                json!({ "free_rank": g.free_rank, "torsion": torsion })
            );
        }
        _ => println!("{}", group_string(&g)),
    }
    Ok(())
}

fn cmd_alex(path: &Path, format: Format) -> Result<(), Fail> {
    let input = read_input(path)?;
    let d = match input {
        Input::Chain(c) => {
            let a = chain_alexander(&c)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "routes": { "formula": poly_to_json(&a.value) },
                        "agree": true,
                    })
                ),
                Format::Tsv => {
                    println!("formula\t{}", a.value.to_human_string())
                }
                Format::Human => {
                    println!("formula: {}", a.value.to_human_string())
                }
            }
            return Ok(());
        }
        Input::Single(d) => d,
    };
    let formula = alexander_formula(&d)?;
    let direct = if d.flux().kbar != 0 {
        Some(alexander_direct(&d)?)
    } else {
        None
    };
    let agree = direct
        .as_ref()
        .map_or(true, |a| a.value.equal_up_to_unit(&formula.value));
    match format {
        Format::Json => {
            let dv = direct.as_ref().map(|a| poly_to_json(&a.value));
            println!(
                "{}",
                json!({
                    "p": d.p,
                    "q": d.q,
                    "kbar": d.flux().kbar,
                    "routes": {
                        "direct": dv,
                        "formula": poly_to_json(&formula.value),
                    },
                    "agree": agree,
                })
            );
        }
        Format::Tsv => {
            if let Some(a) = &direct {
                println!("direct\t{}", a.value.to_human_string());
            }
            println!("formula\t{}", formula.value.to_human_string());
        }
        Format::Human => {
            match &direct {
                Some(a) => {
                    println!("direct:  {}", a.value.to_human_string())
                }
                None => println!("direct:  (degenerate flux, skipped)"),
            }
            println!("formula: {}", formula.value.to_human_string());
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Fail::Domain(String::from(
            "route disagreement: direct and formula differ",
        )))
    }
}

fn cmd_talex(path: &Path, mu: i64, format: Format) -> Result<(), Fail> {
    let d = match read_input(path)? {
        Input::Single(d) => d,
        Input::Chain(_) => {
            return Err(Fail::Domain(String::from(
                "talex supports single-surgery diagrams only",
            )))
        }
    };
    let t = twisted_alexander(&d, mu)?;
    match format {
        Format::Json => {
            let mut terms = serde_json::Map::new();
            for (e, c) in t.value.terms() {
                let coords: Vec<String> =
                    c.coords().iter().map(|x| x.to_string()).collect();
                terms.insert(e.to_string(), Value::from(coords));
            }
            println!(
                "{}",
                json!({
                    "order": t.order,
                    "mu": mu,
                    "d": t.params.d,
                    "terms": terms,
                })
            );
        }
        _ => println!("{}", t.value.to_human_string()),
    }
    Ok(())
}

fn unit_string(u: Option<(i8, i64)>) -> String {
    match u {
        None => String::from("none"),
        Some((s, e)) => {
            let sign = if s < 0 { "-" } else { "" };
            format!("{sign}u^{e}")
        }
    }
}

fn cmd_skein(
    path: &Path,
    crossing: usize,
    unit_bound: Option<i64>,
    format: Format,
) -> Result<(), Fail> {
    let d = match read_input(path)? {
        Input::Single(d) => d,
        Input::Chain(_) => {
            return Err(Fail::Domain(String::from(
                "skein supports single-surgery diagrams only",
            )))
        }
    };
    let r = check_skein(&d, crossing, unit_bound)?;
    match format {
        Format::Json => {
            println!(
                "{}",
                json!({
                    "pass": r.pass,
                    "p_prime": r.p_prime,
                    "delta_plus": poly_to_json(&r.delta_plus),
                    "delta_minus": poly_to_json(&r.delta_minus),
                    "delta_zero": poly_to_json(&r.delta_zero),
                    "unit_minus": unit_string(r.unit_minus),
                    "unit_zero": unit_string(r.unit_zero),
                })
            );
        }
        _ => {
            println!("delta_plus:  {}", r.delta_plus.to_human_string());
            println!("delta_minus: {}", r.delta_minus.to_human_string());
            println!("delta_zero:  {}", r.delta_zero.to_human_string());
            println!("unit_minus:  {}", unit_string(r.unit_minus));
            println!("unit_zero:   {}", unit_string(r.unit_zero));
            println!("{}", if r.pass { "PASS" } else { "FAIL" });
        }
    }
    if r.pass {
        Ok(())
    } else {
        Err(Fail::Domain(String::from("skein relation not satisfied")))
    }
}

struct BatchRow {
    name: String,
    fields: Result<Vec<String>, String>,
}

fn batch_entry(name: &str, path: &Path) -> BatchRow {
    let fields = (|| -> Result<Vec<String>, String> {
        let text =
            fs::read_to_string(path).map_err(|e| format!("{e}"))?;
        let d = match parse_input(&text)? {
            Input::Single(d) => d,
            Input::Chain(_) => {
                return Err(String::from("chain inputs not supported in batch"))
            }
        };
        d.validate().map_err(|vs| {
            vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
        })?;
        let f = d.flux();
        let h = h1_complement(&d).map_err(|e| e.to_string())?;
        let a = alexander(&d).map_err(|e| e.to_string())?;
        let mut twisted = Vec::new();
        for m in 0..f.d {
            let t = twisted_alexander(&d, m).map_err(|e| e.to_string())?;
            twisted.push(format!("m={m}:{}", t.value.to_human_string()));
        }
        Ok(vec![
            d.p.to_string(),
            d.q.to_string(),
            f.kbar.to_string(),
            group_string(&h),
            a.value.to_human_string(),
            twisted.join("; "),
        ])
    })();
    BatchRow { name: name.to_string(), fields }
}

fn batch_threads(n_entries: usize) -> usize {
    let cap = std::env::var("LENSALEX_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        });
    cap.min(n_entries).max(1)
}

fn cmd_batch(manifest: &Path, format: Format) -> Result<(), Fail> {
    let text = fs::read_to_string(manifest)
        .map_err(|e| Fail::Io(format!("{}: {e}", manifest.display())))?;
    let base = manifest.parent().unwrap_or_else(|| Path::new("."));
    let mut entries: Vec<(String, PathBuf)> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, rel) = match line.split_once('\t') {
            Some((n, p)) => (n.trim().to_string(), p.trim()),
            None => {
                let stem = Path::new(line)
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| line.to_string());
                (stem, line)
            }
        };
        entries.push((name, base.join(rel)));
    }
    let n = entries.len();
    let threads = batch_threads(n);
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut rows: Vec<Option<BatchRow>> = Vec::new();
    rows.resize_with(n, || None);
    let slots = std::sync::Mutex::new(&mut rows);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= n {
                    break;
                }
                let row = batch_entry(&entries[i].0, &entries[i].1);
                slots.lock().unwrap()[i] = Some(row);
            });
        }
    });
    let rows: Vec<BatchRow> =
        rows.into_iter().map(|r| r.expect("worker filled slot")).collect();
    let mut failed = 0usize;
    match format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| match &r.fields {
                    Ok(f) => json!({
                        "name": r.name,
                        "p": f[0], "q": f[1], "kbar": f[2],
                        "h1": f[3], "delta": f[4], "twisted": f[5],
                    }),
                    Err(e) => {
                        failed += 1;
                        json!({ "name": r.name, "error": e })
                    }
                })
                .collect();
            println!("{}", Value::from(items));
        }
        _ => {
            println!("name\tp\tq\tkbar\th1\tdelta\ttwisted");
            for r in &rows {
                match &r.fields {
                    Ok(f) => println!("{}\t{}", r.name, f.join("\t")),
                    Err(e) => {
                        failed += 1;
                        println!("{}\terror: {}", r.name, e);
                    }
                }
            }
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Fail::Domain(format!("{failed} of {n} entries failed")))
    }
}
