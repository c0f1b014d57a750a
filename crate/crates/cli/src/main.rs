//! Command-line front end: exact subtree counts on edge-list files, the
//! named constructions, closed-form values, exhaustive certification, and
//! the subtree/Wiener comparison.
//!
//! Exit codes: 0 success (claims hold), 1 certification mismatch, 2 input
//! or parse error, 3 size-guard violation, 4 invalid parameters.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use subtrees_core::atlas::{self, NamedTree};
use subtrees_core::census;
use subtrees_core::certify::{
    certify_extremal, certify_second_max, paper_prediction, wiener_inversion_report,
    CertifyError, Objective,
};
use subtrees_core::formulas;
use subtrees_core::oracle;
use subtrees_core::tree::{parse_tree, serialize_tree, ClassSpec};

#[derive(Parser)]
#[command(name = "subtrees", version, about = "Exact subtree counting and extremal certification for trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count subtrees of the tree in an edge-list file (total by default)
    #[command(group(ArgGroup::new("mode").args(["vertex", "both", "excluding", "wiener"])))]
    Count {
        /// Edge-list file: first line n, then n-1 lines "u v"
        tree_file: PathBuf,
        /// Count only subtrees containing this vertex
        #[arg(long)]
        vertex: Option<usize>,
        /// Count only subtrees containing both vertices
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        both: Option<Vec<usize>>,
        /// Count subtrees containing U but not V
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        excluding: Option<Vec<usize>>,
        /// Compute the Wiener index instead of a subtree count
        #[arg(long)]
        wiener: bool,
        /// Use brute-force enumeration instead of the DP (size-guarded)
        #[arg(long, conflicts_with = "wiener")]
        oracle: bool,
    },
    /// Build a named tree, write its edge list, print landmarks as JSON
    Construct {
        /// One of: path, star, spider, broom, dtree, dstar, nstar, chain, qcat
        family: String,
        /// Family parameters, e.g. "spider 7 3" or "dstar 2 3"
        params: Vec<usize>,
        /// Output file for the edge list
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate a closed-form subtree count
    Formula {
        /// One of: path, star, spider-max, double-broom, broom-gap,
        /// diameter-max, double-star, near-double-star, bipartition-min,
        /// qary-min, binary-caterpillar, double-star-gap
        name: String,
        params: Vec<usize>,
        /// Evaluate the literal printed form where one differs
        #[arg(long)]
        paper_display: bool,
    },
    /// Exhaustively certify an extremal claim over a tree family
    Certify {
        #[arg(long)]
        n: usize,
        /// Family: "leaves:K", "diam:D", "bip:P,Q", or "qary:Q,N"
        #[arg(long)]
        class: String,
        /// "max" or "min"
        #[arg(long)]
        objective: String,
        /// Maximize over the bipartition class minus the double star
        #[arg(long)]
        drop_double_star: bool,
        /// Also write the JSON report to this file
        #[arg(long)]
        json: Option<PathBuf>,
        /// Worker threads (default: available cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Compare subtree-count extremes with Wiener-index extremes
    CompareWiener {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: String,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

enum Failure {
    /// exit 2: unreadable or malformed input
    Input(String),
    /// exit 3: a size guard refused the computation
    Guard(String),
    /// exit 4: invalid or unsupported parameters
    Params(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Guard(_) => 3,
            Failure::Params(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Guard(m) | Failure::Params(m) => m,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Count {
            tree_file,
            vertex,
            both,
            excluding,
            wiener,
            oracle,
        } => {
            let text = fs::read_to_string(&tree_file)
                .map_err(|e| Failure::Input(format!("{}: {e}", tree_file.display())))?;
            let tree = parse_tree(&text).map_err(|e| Failure::Input(e.to_string()))?;
            let check = |v: usize| -> Result<usize, Failure> {
                if v < tree.n() {
                    Ok(v)
                } else {
                    Err(Failure::Input(format!(
                        "vertex {v} out of range for a tree on {} vertices",
                        tree.n()
                    )))
                }
            };
            let guard = |e: oracle::OracleError| Failure::Guard(e.to_string());
            let value = if wiener {
                census::wiener_index(&tree)
            } else if let Some(v) = vertex {
                let v = check(v)?;
                if oracle {
                    oracle::oracle_count_filtered(&tree, &[v], &[]).map_err(guard)?
                } else {
                    census::count_at_vertex(&tree, v)
                }
            } else if let Some(pair) = both {
                let (u, v) = (check(pair[0])?, check(pair[1])?);
                if u == v {
                    return Err(Failure::Input("--both needs two distinct vertices".into()));
                }
                if oracle {
                    oracle::oracle_count_filtered(&tree, &[u, v], &[]).map_err(guard)?
                } else {
                    census::count_containing_both(&tree, u, v)
                }
            } else if let Some(pair) = excluding {
                let (u, v) = (check(pair[0])?, check(pair[1])?);
                if u == v {
                    return Err(Failure::Input(
                        "--excluding needs two distinct vertices".into(),
                    ));
                }
                if oracle {
                    oracle::oracle_count_filtered(&tree, &[u], &[v]).map_err(guard)?
                } else {
                    census::count_containing_excluding(&tree, u, v)
                }
            } else if oracle {
                oracle::oracle_count(&tree).map_err(guard)?
            } else {
                census::count_all_subtrees(&tree)
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { family, params, out } => {
            let named = construct(&family, &params)?;
            fs::write(&out, serialize_tree(&named.tree))
                .map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
            let landmarks =
                serde_json::to_string(&named.landmarks).expect("landmarks serialize");
            println!("{landmarks}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Formula {
            name,
            params,
            paper_display,
        } => {
            let value = evaluate_formula(&name, &params, paper_display)?;
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify {
            n,
            class,
            objective,
            drop_double_star,
            json,
            jobs,
        } => {
            let spec = parse_class(&class)?;
            let objective = parse_objective(&objective)?;
            let report = with_pool(jobs, || -> Result<_, Failure> {
                if drop_double_star {
                    let (p, q) = match (&spec, objective) {
                        (&ClassSpec::Bipartition(p, q), Objective::Max) => (p, q),
                        _ => {
                            return Err(Failure::Params(
                                "--drop-double-star applies to --class bip:P,Q --objective max"
                                    .into(),
                            ))
                        }
                    };
                    certify_second_max(n, p, q).map_err(guard_failure)
                } else {
                    let prediction =
                        paper_prediction(n, Some(&spec), objective).ok_or_else(|| {
                            Failure::Params(format!(
                                "no certified prediction for {class} with objective {objective}"
                            ))
                        })?;
                    certify_extremal(n, Some(&spec), objective, &prediction)
                        .map_err(guard_failure)
                }
            })?;
            let rendered = report.to_json();
            println!("{rendered}");
            if let Some(path) = json {
                fs::write(&path, rendered + "\n")
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            Ok(if report.holds() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::CompareWiener { n, class, json, jobs } => {
            let spec = parse_class(&class)?;
            let report = with_pool(jobs, || {
                wiener_inversion_report(n, Some(&spec)).map_err(guard_failure)
            })?;
            let rendered = report.to_json();
            println!("{rendered}");
            if let Some(path) = json {
                fs::write(&path, rendered + "\n")
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn guard_failure(e: CertifyError) -> Failure {
    Failure::Guard(e.to_string())
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => f(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

fn construct(family: &str, params: &[usize]) -> Result<NamedTree, Failure> {
    let arity: usize = match family {
        "path" | "star" => 1,
        "spider" | "dstar" | "nstar" | "qcat" => 2,
        "broom" | "dtree" | "chain" => 3,
        _ => {
            return Err(Failure::Params(format!(
                "unknown family {family:?}; expected path, star, spider, broom, dtree, dstar, nstar, chain, or qcat"
            )))
        }
    };
    if params.len() != arity {
        return Err(Failure::Params(format!(
            "{family} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    let built = match family {
        "path" => atlas::path(params[0]),
        "star" => atlas::star(params[0]),
        "spider" => atlas::balanced_spider(params[0], params[1]),
        "broom" => atlas::double_broom(params[0], params[1], params[2]),
        "dtree" => atlas::diameter_tree(params[0], params[1], params[2]),
        "dstar" => atlas::double_star(params[0], params[1]),
        "nstar" => atlas::near_double_star(params[0], params[1]),
        "chain" => atlas::three_star_chain(params[0], params[1], params[2]),
        "qcat" => atlas::qary_caterpillar(params[0], params[1]),
        _ => unreachable!(),
    };
    built.map_err(|e| Failure::Params(e.to_string()))
}

fn evaluate_formula(
    name: &str,
    params: &[usize],
    paper_display: bool,
) -> Result<String, Failure> {
    let arity: usize = match name {
        "path" | "star" | "binary-caterpillar" => 1,
        "spider-max" | "diameter-max" | "double-star" | "near-double-star"
        | "bipartition-min" | "qary-min" | "double-star-gap" => 2,
        "double-broom" | "broom-gap" => 4,
        _ => return Err(Failure::Params(format!("unknown formula {name:?}"))),
    };
    if params.len() != arity {
        return Err(Failure::Params(format!(
            "{name} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    if paper_display && !matches!(name, "diameter-max" | "bipartition-min") {
        return Err(Failure::Params(format!(
            "{name} has no paper-display variant"
        )));
    }
    let params_err = |e: formulas::FormulaError| Failure::Params(e.to_string());
    let value = match name {
        "path" => formulas::f_path(params[0]),
        "star" => formulas::f_star(params[0]),
        "spider-max" => formulas::f_spider_max(params[0], params[1]),
        "double-broom" => formulas::f_double_broom(params[0], params[1], params[2], params[3]),
        "broom-gap" => formulas::f_broom_monotone_gap(params[0], params[1], params[2], params[3]),
        "diameter-max" => {
            if paper_display {
                formulas::f_diameter_max_paper_display(params[0], params[1])
            } else {
                formulas::f_diameter_max(params[0], params[1])
            }
        }
        "double-star" => formulas::f_double_star(params[0], params[1]),
        "near-double-star" => formulas::f_near_double_star(params[0], params[1]),
        "bipartition-min" => {
            if paper_display {
                formulas::f_bipartition_min_paper_display(params[0], params[1])
            } else {
                formulas::f_bipartition_min(params[0], params[1])
            }
        }
        "qary-min" => formulas::f_qary_min(params[0], params[1]),
        "binary-caterpillar" => formulas::f_binary_caterpillar(params[0]),
        "double-star-gap" => {
            return formulas::f_double_star_chain_gap(params[0], params[1])
                .map(|gap| gap.to_string())
                .map_err(params_err)
        }
        _ => unreachable!(),
    };
    value.map(|c| c.to_string()).map_err(params_err)
}

fn parse_class(s: &str) -> Result<ClassSpec, Failure> {
    let bad = || {
        Failure::Params(format!(
            "bad class {s:?}; expected leaves:K, diam:D, bip:P,Q, or qary:Q,N"
        ))
    };
    let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
    let one = |txt: &str| txt.parse::<usize>().map_err(|_| bad());
    let two = |txt: &str| -> Result<(usize, usize), Failure> {
        let (a, b) = txt.split_once(',').ok_or_else(bad)?;
        Ok((one(a)?, one(b)?))
    };
    match kind {
        "leaves" => Ok(ClassSpec::Leaves(one(rest)?)),
        "diam" => Ok(ClassSpec::Diameter(one(rest)?)),
        "bip" => {
            let (p, q) = two(rest)?;
            if p > q {
                return Err(Failure::Params(format!(
                    "bip:P,Q expects P <= Q, got {p},{q}"
                )));
            }
            Ok(ClassSpec::Bipartition(p, q))
        }
        "qary" => {
            let (arity, internal) = two(rest)?;
            Ok(ClassSpec::QAry { arity, internal })
        }
        _ => Err(bad()),
    }
}

fn parse_objective(s: &str) -> Result<Objective, Failure> {
    match s {
        "max" => Ok(Objective::Max),
        "min" => Ok(Objective::Min),
        _ => Err(Failure::Params(format!(
            "objective must be max or min, got {s:?}"
        ))),
    }
}
