use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use rook0::action::{mul, GenWord};
use rook0::order::{self, DotFlavor, ExtendedComposition};
use rook0::rcode::{self, RCode};
use rook0::reptheory::{self, DescentSet, Side};
use rook0::rookcore::{self, RookVector, MAX_N};
use rook0::stellar;
use rook0::verify::{self, Bounds, Suite};
use rook0::Error;

#[derive(Parser)]
#[command(name = "rook0", version, about = "Computations in the 0-rook monoid")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest n accepted by enumerating commands (default 6, or 4 for pairwise suites).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the rooks of size n.
    Enumerate { n: usize },
    /// R-code bijection.
    #[command(subcommand)]
    Code(CodeCmd),
    /// R-code of a word such as "p0 p1 p0".
    Normalize {
        #[arg(short, long)]
        n: usize,
        word: String,
    },
    /// Product in R_n^0, or the matrix product with --classical.
    Mul {
        a: RookVector,
        b: RookVector,
        #[arg(long)]
        classical: bool,
    },
    /// Meet in the R-order.
    Meet { a: RookVector, b: RookVector },
    /// Join in the R-order.
    Join { a: RookVector, b: RookVector },
    /// Hasse diagram or right Cayley graph.
    Hasse {
        n: usize,
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value = "hasse")]
        flavor: DotFlavor,
    },
    /// Enumerative statistics.
    Counts(CountsArgs),
    /// Cartan matrix of R_n^0.
    Cartan {
        n: usize,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// The 2^n idempotents with their descent sets.
    Idempotents { n: usize },
    /// Rooks with right descent set SET, e.g. "{0,2}".
    DescentClass { n: usize, set: String },
    /// Restriction of the projective of an extended composition to the 0-Hecke monoid.
    DecomposeProjective { composition: ExtendedComposition },
    /// Induce S_I ⊗ S_J along R_n × R_m, or R_n × H_m with --hecke.
    InductSimple {
        n: usize,
        i: String,
        m: usize,
        j: String,
        #[arg(long)]
        hecke: bool,
        /// Also print the basis.
        #[arg(long)]
        basis: bool,
    },
    /// Restrict S_J of R_{n+m} to R_n × R_m, or with --hecke to H_n.
    RestrictSimple {
        n: usize,
        #[arg(default_value_t = 0)]
        m: usize,
        j: String,
        #[arg(long)]
        hecke: bool,
    },
    /// Induce P_I ⊗ P_J along R_n × R_m, or P^H_I from H_n with --hecke.
    InductProjective {
        n: usize,
        i: String,
        #[arg(default_value_t = 0)]
        m: usize,
        #[arg(default_value = "")]
        j: String,
        #[arg(long)]
        hecke: bool,
    },
    #[command(subcommand)]
    /// Stellar quotients St_k.
    Stellar(StellarCmd),
    /// Branching graph of simples from level n to n+1.
    Branching {
        n: usize,
        #[arg(long, default_value = "right")]
        side: Side,
        #[arg(long)]
        dot: bool,
    },
    /// Run an invariant suite: rookcore, action, rcode, order, stellar, reptheory or all.
    Verify { suite: Suite },
}

#[derive(Subcommand)]
enum CodeCmd {
    /// R-code of a rook.
    Encode { rook: RookVector },
    /// Rook of a code such as 1,1,-1,2,0.
    Decode { code: RCode },
    /// Canonical word of a rook.
    Word {
        rook: RookVector,
        #[arg(long, default_value = "q0")]
        alphabet: rcode::Alphabet,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CountsFlags {
    #[arg(long)]
    first_zero: bool,
    #[arg(long)]
    chains: bool,
    #[arg(long)]
    irreducibles: bool,
}

#[derive(Args)]
struct CountsArgs {
    n: usize,
    #[command(flatten)]
    which: CountsFlags,
}

#[derive(Subcommand)]
enum StellarCmd {
    /// |St_k(R_n)| for k = 0..n.
    Card { n: usize },
    /// st_k of a rook.
    Project { k: usize, rook: RookVector },
    /// Stellar invariant checks at size n.
    Verify { n: usize },
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Ctx {
    json: bool,
    max_n: Option<usize>,
}

impl Ctx {
    fn linear(&self, n: usize) -> Result<(), Failure> {
        self.bound(n, self.max_n.unwrap_or(6))
    }

    fn quadratic(&self, n: usize) -> Result<(), Failure> {
        self.bound(n, self.max_n.unwrap_or(4))
    }

    fn bound(&self, n: usize, max: usize) -> Result<(), Failure> {
        if n > max.min(MAX_N) {
            Err(Error::BoundExceeded { n, max: max.min(MAX_N) }.into())
        } else {
            Ok(())
        }
    }

    fn emit(&self, text: String, value: Value) {
        if self.json {
            println!("{value}");
        } else {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
        }
    }
}

fn set_arg(n: usize, s: &str) -> Result<DescentSet, Failure> {
    Ok(DescentSet::parse(n, s)?)
}

fn hecke_set(n: usize, s: &str) -> Result<BTreeSet<usize>, Failure> {
    let d = DescentSet::parse(n, s)?;
    if d.contains(0) {
        return Err(Failure::Usage("0-Hecke descent sets live in [1, n-1]".into()));
    }
    Ok(d.members)
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

fn induced_output(ctx: &Ctx, ind: &reptheory::Induced, basis: bool) {
    let mut text = format!("{}\n", ind.simples);
    if basis {
        text.push_str(&lines(&ind.basis));
    }
    ctx.emit(
        text,
        json!({ "basis": ind.basis, "simples": ind.simples.to_json() }),
    );
}

fn run(cli: Cli) -> Result<(), Failure> {
    let ctx = Ctx { json: cli.json, max_n: cli.max_n };
    match cli.cmd {
        Cmd::Enumerate { n } => {
            ctx.linear(n)?;
            let rooks = rookcore::enumerate_rooks(n);
            ctx.emit(lines(&rooks), json!(rooks));
        }
        Cmd::Code(CodeCmd::Encode { rook }) => {
            let c = rcode::encode(&rook);
            ctx.emit(c.to_string(), json!(c));
        }
        Cmd::Code(CodeCmd::Decode { code }) => {
            let r = rcode::decode(&code)?;
            ctx.emit(r.to_string(), json!(r));
        }
        Cmd::Code(CodeCmd::Word { rook, alphabet }) => {
            let w = rcode::canonical_word(&rcode::encode(&rook), alphabet)?;
            ctx.emit(w.to_string(), json!(w.to_string()));
        }
        Cmd::Normalize { n, word } => {
            let w = GenWord::parse(n, &word)?;
            let c = rcode::normalize(&w)?;
            let r = rcode::decode(&c)?;
            ctx.emit(format!("{c}\n{r}"), json!({ "code": c, "rook": r }));
        }
        Cmd::Mul { a, b, classical } => {
            let r = if classical { rookcore::matrix_product(&a, &b)? } else { mul(&a, &b)? };
            ctx.emit(r.to_string(), json!(r));
        }
        Cmd::Meet { a, b } => {
            let r = order::meet(&a, &b)?;
            ctx.emit(r.to_string(), json!(r));
        }
        Cmd::Join { a, b } => {
            let r = order::join(&a, &b)?;
            ctx.emit(r.to_string(), json!(r));
        }
        Cmd::Hasse { n, dot, flavor } => {
            ctx.linear(n)?;
            if dot {
                print!("{}", order::export_dot(n, flavor)?);
            } else {
                let edges = order::hasse_edges(n)?;
                let text = lines(edges.iter().map(|(u, l, g)| {
                    let g: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                    format!("{u} {l} {}", g.join(","))
                }));
                let v: Vec<Value> = edges
                    .iter()
                    .map(|(u, l, g)| json!({ "upper": u, "lower": l, "labels": g.iter().map(|x| x.to_string()).collect::<Vec<_>>() }))
                    .collect();
                ctx.emit(text, json!(v));
            }
        }
        Cmd::Counts(CountsArgs { n, which }) => {
            if which.first_zero {
                ctx.bound(n, MAX_N)?;
                let row = rookcore::count_by_first_zero(n);
                let text = row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                ctx.emit(text, json!({ "n": n, "first_zero": row }));
            } else if which.chains {
                ctx.linear(n)?;
                let c = order::chain_counts(n)?;
                ctx.emit(
                    format!("maximal {}\nmin_length {}\nshortest_length {}", c.maximal, c.shortest_count, c.shortest_len),
                    json!(c),
                );
            } else {
                ctx.linear(n)?;
                let m = order::meet_irreducibles(n)?;
                let j = order::join_irreducibles(n)?;
                let by_first: Vec<usize> = (1..=n).map(|i| m.iter().filter(|r| order::first_value(r) == i).count()).collect();
                let text = format!(
                    "meet {}\njoin {}\nmeet by first value {}",
                    m.len(),
                    j.len(),
                    by_first.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
                );
                ctx.emit(text, json!({ "n": n, "meet": m.len(), "join": j.len(), "meet_by_first_value": by_first }));
            }
        }
        Cmd::Cartan { n, format } => {
            ctx.linear(n)?;
            let c = reptheory::cartan_matrix(n)?;
            match (format.as_str(), ctx.json) {
                ("json", _) | (_, true) => println!("{}", c.to_json()),
                ("csv", false) => print!("{}", c.to_csv()),
                _ => return Err(Failure::Usage(format!("unknown format {format:?}"))),
            }
        }
        Cmd::Idempotents { n } => {
            ctx.linear(n)?;
            let sets = reptheory::all_descent_sets(n);
            let ids = reptheory::idempotents(n);
            let text = lines(sets.iter().zip(&ids).map(|(s, e)| format!("{s} {e}")));
            let v: Vec<Value> = sets.iter().zip(&ids).map(|(s, e)| json!({ "descents": s.to_vec(), "rook": e })).collect();
            ctx.emit(text, json!(v));
        }
        Cmd::DescentClass { n, set } => {
            ctx.linear(n)?;
            let s = set_arg(n, &set)?;
            let class = reptheory::descent_class(&s);
            ctx.emit(lines(&class), json!(class));
        }
        Cmd::DecomposeProjective { composition } => {
            ctx.bound(composition.total, MAX_N)?;
            let d = reptheory::decompose_projective(&composition);
            ctx.emit(d.to_string(), d.to_json());
        }
        Cmd::InductSimple { n, i, m, j, hecke, basis } => {
            ctx.bound(n + m, MAX_N)?;
            let a = set_arg(n, &i)?;
            let ind = if hecke {
                reptheory::ind_simple_rxh(&a, &hecke_set(m, &j)?, m)?
            } else {
                reptheory::tower_ind_simple(&a, &set_arg(m, &j)?)?
            };
            induced_output(&ctx, &ind, basis);
        }
        Cmd::RestrictSimple { n, m, j, hecke } => {
            if hecke {
                let s = set_arg(n, &j)?;
                let r = reptheory::res_simple_to_h(&s);
                let v: Vec<usize> = r.iter().copied().collect();
                ctx.emit(DescentSet { n, members: r }.to_string(), json!({ "descents": v }));
            } else {
                let s = set_arg(n + m, &j)?;
                let (a, b) = reptheory::tower_res_simple(n, m, &s)?;
                ctx.emit(format!("{a} {b}"), json!({ "left": a.to_vec(), "right": b.to_vec() }));
            }
        }
        Cmd::InductProjective { n, i, m, j, hecke } => {
            let s = if hecke {
                reptheory::ind_projective_from_h(n, &hecke_set(n, &i)?)?
            } else {
                ctx.bound(n + m, MAX_N)?;
                reptheory::tower_ind_projective(&set_arg(n, &i)?, &set_arg(m, &j)?)
            };
            ctx.emit(s.to_string(), s.to_json());
        }
        Cmd::Stellar(StellarCmd::Card { n }) => {
            ctx.linear(n)?;
            let row: Vec<usize> = (0..=n).map(|k| stellar::stellar_card(n, k)).collect();
            let text = row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            ctx.emit(text, json!({ "n": n, "cardinalities": row }));
        }
        Cmd::Stellar(StellarCmd::Project { k, rook }) => {
            let r = stellar::st_k(&rook, k);
            ctx.emit(r.to_string(), json!(r));
        }
        Cmd::Stellar(StellarCmd::Verify { n }) => {
            ctx.quadratic(n)?;
            let rep = stellar::verify_stellar(n);
            report(&ctx, &rep)?;
        }
        Cmd::Branching { n, side, dot } => {
            ctx.linear(n)?;
            if dot {
                print!("{}", reptheory::branching_dot(n, side)?);
            } else {
                let edges = reptheory::branching_graph(n, side)?;
                let text = lines(edges.iter().map(|e| format!("{} -> {} via {} x{}", e.from, e.to, e.via, e.mult)));
                let v: Vec<Value> = edges
                    .iter()
                    .map(|e| json!({ "from": e.from.to_vec(), "to": e.to.to_vec(), "via": e.via.to_vec(), "mult": e.mult }))
                    .collect();
                ctx.emit(text, json!(v));
            }
        }
        Cmd::Verify { suite } => {
            let b = Bounds {
                linear: ctx.max_n.unwrap_or(Bounds::default().linear),
                quadratic: ctx.max_n.unwrap_or(Bounds::default().quadratic),
            };
            let rep = verify::run(suite, b);
            report(&ctx, &rep)?;
        }
    }
    Ok(())
}

fn report(ctx: &Ctx, rep: &verify::Report) -> Result<(), Failure> {
    ctx.emit(rep.to_string(), json!(rep));
    if rep.passed() {
        Ok(())
    } else {
        let n = rep.failures().count();
        Err(Failure::Invariant(format!("{n} check(s) failed")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invariant(msg)) => {
            eprintln!("rook0: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("rook0: {msg}");
            ExitCode::from(2)
        }
    }
}
