use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use parcat_core::algebra::{
    central_c, central_z, cross_left, cross_right, hc_project, jm_left, jm_right, AlgebraElement,
};
use parcat_core::blocks::{is_typical, recover_kappa};
use parcat_core::diagram::enumerate_diagrams;
use parcat_core::stdmod::{delta_dim, generic_rank, gram_matrix};
use parcat_core::symfun::{deformed_schur, kronecker, partitions_up_to, reduced_kronecker, Partition, ReducedMethod};
use parcat_core::verify::{run_suite, Bounds, Suite};
use parcat_core::{PartitionDiagram, Poly, Rational};

#[derive(Parser)]
#[command(name = "parcat", version, about = "Computations in the partition category")]
struct Cli {
    /// Loop parameter: an exact rational `p/q`, or `generic`.
    #[arg(long, global = true, default_value = "generic")]
    t: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Size bound for enumerating commands.
    #[arg(long, global = true, visible_alias = "max", default_value_t = 4)]
    max_size: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Stabilize,
    Littlewood,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compose diagrams; the first argument is applied first.
    Compose {
        #[arg(required = true)]
        diagrams: Vec<String>,
    },
    /// List the diagram basis of Hom(n, m).
    Basis { m: usize, n: usize },
    /// A Jucys-Murphy element or dotted crossing.
    #[command(group(ArgGroup::new("kind").required(true).args(["left", "right", "cross_left", "cross_right"])))]
    Jm {
        #[arg(long)]
        n: usize,
        /// Position: strand for dots, crossing for dotted crossings.
        #[arg(long)]
        j: usize,
        #[arg(long)]
        left: bool,
        #[arg(long)]
        right: bool,
        #[arg(long)]
        cross_left: bool,
        #[arg(long)]
        cross_right: bool,
    },
    /// Central elements z^(r) or c^(r).
    #[command(group(ArgGroup::new("family").required(true).args(["z", "c"])))]
    Central {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        z: bool,
        #[arg(long)]
        c: bool,
    },
    /// Harish-Chandra projection of an element given in text form.
    Hc { element: String },
    /// Group partitions of size at most --max-size into blocks.
    Blocks,
    /// Kronecker coefficient g(λ, μ, ν), or the reduced one.
    Kron {
        lambda: String,
        mu: String,
        nu: String,
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value_t = Method::Stabilize)]
        method: Method,
    },
    /// Deformed Schur function in the Schur basis.
    Deformed { lambda: String },
    /// Rank of the contravariant form on the weight space m of Δ(λ).
    Gram { lambda: String, m: usize },
    /// Run invariant suites.
    Verify {
        /// relations, centrality, oracle-agreement, block-structure, or all.
        suite: String,
        #[arg(long, default_value = "small")]
        bounds: String,
    },
}

enum CliError {
    Parse(String),
    Precondition(String),
    Failed(String),
}

type Res<T> = Result<T, CliError>;

enum TArg {
    Generic,
    Value(Rational),
}

fn parse<T: FromStr>(s: &str, what: &str) -> Res<T>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e| CliError::Parse(format!("{what} {s:?}: {e}")))
}

fn pre<T, E: std::fmt::Display>(r: Result<T, E>) -> Res<T> {
    r.map_err(|e| CliError::Precondition(e.to_string()))
}

fn parse_t(s: &str) -> Res<TArg> {
    if s == "generic" {
        Ok(TArg::Generic)
    } else {
        parse(s, "t").map(TArg::Value)
    }
}

fn need_t(t: &TArg) -> Res<&Rational> {
    match t {
        TArg::Value(v) => Ok(v),
        TArg::Generic => Err(CliError::Precondition("this command needs a numeric --t".into())),
    }
}

struct Out {
    format: Format,
    text: Vec<String>,
    tsv: Vec<String>,
    json: Value,
}

impl Out {
    fn print(&self) {
        match self.format {
            Format::Text => self.text.iter().for_each(|l| println!("{l}")),
            Format::Tsv => self.tsv.iter().for_each(|l| println!("{l}")),
            Format::Json => println!("{}", serde_json::to_string_pretty(&self.json).unwrap()),
        }
    }
}

fn lines(s: &str) -> Vec<String> {
    s.lines().map(str::to_string).collect()
}

fn element_out(f: &AlgebraElement<Poly>, t: &TArg) -> (Vec<String>, Vec<String>, Value) {
    match t {
        TArg::Generic => {
            let tsv = f.terms().iter().map(|(d, c)| format!("{d}\t{c}")).collect();
            (lines(&f.to_string()), tsv, serde_json::from_str(&f.to_json()).unwrap())
        }
        TArg::Value(v) => {
            let g = f.specialize(v);
            let tsv = g.terms().iter().map(|(d, c)| format!("{d}\t{c}")).collect();
            let mut js: Value = serde_json::from_str(&g.to_json()).unwrap();
            js["t"] = json!(v.to_string());
            (lines(&g.to_string()), tsv, js)
        }
    }
}

fn run(cli: Cli) -> Res<Out> {
    let t = parse_t(&cli.t)?;
    let mut out = Out { format: cli.format, text: vec![], tsv: vec![], json: Value::Null };
    match cli.cmd {
        Cmd::Compose { diagrams } => {
            let ds: Vec<PartitionDiagram> =
                diagrams.iter().map(|s| parse(s, "diagram")).collect::<Res<_>>()?;
            let mut acc = ds[0].clone();
            let mut loops = 0;
            for d in &ds[1..] {
                let (next, l) = pre(d.compose(&acc))?;
                acc = next;
                loops += l;
            }
            let mut text = format!("{acc}, loops={loops}");
            let mut js = json!({"diagram": acc.to_string(), "loops": loops});
            if let TArg::Value(v) = &t {
                let sc = v.pow(loops as u32);
                text.push_str(&format!(", scalar={sc}"));
                js["scalar"] = json!(sc.to_string());
            }
            out.text.push(text);
            out.tsv.push(format!("{acc}\t{loops}"));
            out.json = js;
        }
        Cmd::Basis { m, n } => {
            let ds = enumerate_diagrams(m, n);
            out.text = ds.iter().map(|d| d.to_string()).collect();
            out.text.push(format!("{} diagrams", ds.len()));
            out.tsv = ds.iter().map(|d| d.to_string()).collect();
            out.json = json!({"m": m, "n": n, "count": ds.len(),
                "diagrams": ds.iter().map(|d| d.to_string()).collect::<Vec<_>>()});
        }
        Cmd::Jm { n, j, left, right, cross_left: cl, cross_right: _ } => {
            let f = pre(if left {
                jm_left(n, j)
            } else if right {
                jm_right(n, j)
            } else if cl {
                cross_left(n, j)
            } else {
                cross_right(n, j)
            })?;
            (out.text, out.tsv, out.json) = element_out(&f, &t);
        }
        Cmd::Central { n, r, z, c: _ } => {
            let f = if z { central_z(n, r) } else { central_c(n, r as usize) };
            (out.text, out.tsv, out.json) = element_out(&f, &t);
        }
        Cmd::Hc { element } => {
            let f: AlgebraElement<Poly> = parse(&element, "element")?;
            if f.m() != f.n() {
                return Err(CliError::Precondition(format!("element is {} x {}, not square", f.m(), f.n())));
            }
            let h = hc_project(&f);
            out.text = vec![h.to_string()];
            out.tsv = h.terms().iter().map(|(g, c)| format!("{g}\t{c}")).collect();
            out.json = json!({"n": h.n(),
                "terms": h.terms().iter().map(|(g, c)| json!({"perm": g.to_string(), "coeff": c.to_string()})).collect::<Vec<_>>()});
        }
        Cmd::Blocks => {
            let tv = need_t(&t)?;
            let mut groups: BTreeMap<Partition, Vec<(usize, Partition)>> = BTreeMap::new();
            let mut typical = Vec::new();
            for lam in partitions_up_to(cli.max_size) {
                let atyp = if is_typical(&lam, tv) { None } else { tv.to_natural().and_then(|n| recover_kappa(&lam, n)) };
                match atyp {
                    Some((kappa, n)) => groups.entry(kappa).or_default().push((n, lam)),
                    None => typical.push(lam),
                }
            }
            let mut js = Vec::new();
            for (kappa, mut members) in groups {
                members.sort();
                let names: Vec<String> = members.iter().map(|(_, l)| l.to_string()).collect();
                out.text.push(format!("kappa={kappa}: {{{}}}", names.join(", ")));
                for (n, l) in &members {
                    out.tsv.push(format!("{l}\t{kappa}\t{n}"));
                }
                js.push(json!({"kappa": kappa.to_string(), "members": names}));
            }
            for l in &typical {
                out.text.push(format!("typical: {{{l}}}"));
                out.tsv.push(format!("{l}\t-\t-"));
                js.push(json!({"kappa": Value::Null, "members": [l.to_string()]}));
            }
            out.json = json!({"t": tv.to_string(), "max_size": cli.max_size, "blocks": js});
        }
        Cmd::Kron { lambda, mu, nu, reduced, method } => {
            let (l, m, n): (Partition, Partition, Partition) =
                (parse(&lambda, "partition")?, parse(&mu, "partition")?, parse(&nu, "partition")?);
            let v = if reduced {
                let method = match method {
                    Method::Stabilize => ReducedMethod::Stabilize,
                    Method::Littlewood => ReducedMethod::Littlewood,
                };
                pre(reduced_kronecker(&l, &m, &n, method))?
            } else {
                pre(kronecker(&l, &m, &n))?
            };
            out.text.push(v.to_string());
            out.tsv.push(format!("{l}\t{m}\t{n}\t{v}"));
            out.json = json!({"lambda": l.to_string(), "mu": m.to_string(), "nu": n.to_string(), "reduced": reduced, "value": v});
        }
        Cmd::Deformed { lambda } => {
            let l: Partition = parse(&lambda, "partition")?;
            let p = deformed_schur(&l);
            out.text.push(p.to_string());
            out.tsv = p.terms().iter().map(|(mu, c)| format!("{mu}\t{c}")).collect();
            out.json = json!({"lambda": l.to_string(),
                "terms": p.terms().iter().map(|(mu, c)| json!({"schur": mu.to_string(), "coeff": c.to_string()})).collect::<Vec<_>>()});
        }
        Cmd::Gram { lambda, m } => {
            let l: Partition = parse(&lambda, "partition")?;
            let dim = delta_dim(&l, m);
            let (rank, tstr, matrix) = match &t {
                TArg::Generic => (generic_rank(&l, m), "generic".to_string(), Value::Null),
                TArg::Value(v) => {
                    let g = gram_matrix(&l, m, v);
                    let rows: Vec<Vec<String>> =
                        (0..g.matrix.rows()).map(|i| g.matrix.row(i).iter().map(|x| x.to_string()).collect()).collect();
                    (g.rank, v.to_string(), json!(rows))
                }
            };
            out.text.push(format!("lambda={l} m={m} t={tstr} dim={dim} rank={rank}"));
            out.tsv.push(format!("{l}\t{m}\t{tstr}\t{dim}\t{rank}"));
            out.json = json!({"lambda": l.to_string(), "m": m, "t": tstr, "dim": dim as u64, "rank": rank, "matrix": matrix});
        }
        Cmd::Verify { suite, bounds } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![Suite::from_name(&suite).ok_or_else(|| CliError::Parse(format!("unknown suite {suite:?}")))?]
            };
            let b = Bounds::from_name(&bounds).ok_or_else(|| CliError::Parse(format!("unknown bounds {bounds:?}")))?;
            let mut results = Vec::new();
            for s in suites {
                results.extend(run_suite(s, b, cli.seed));
            }
            for r in &results {
                let tag = if r.passed { "PASS" } else { "FAIL" };
                out.text.push(format!("{tag} {}: {}", r.suite, r.check));
                out.tsv.push(format!("{}\t{}\t{tag}", r.suite, r.check));
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            out.text.push(format!("{} checks, {failed} failed", results.len()));
            out.json = json!({"seed": cli.seed, "bounds": bounds, "failed": failed, "checks": results});
            if failed > 0 {
                out.print();
                return Err(CliError::Failed(format!("{failed} checks failed")));
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            out.print();
            ExitCode::SUCCESS
        }
        Err(CliError::Parse(m)) => {
            eprintln!("parse error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Precondition(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(CliError::Failed(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
    }
}
