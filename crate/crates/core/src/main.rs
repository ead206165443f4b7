//! Command-line runner: reproducible verification runs over the library's
//! checkers, plus replay of the bundled worked examples. Identical
//! arguments and seeds give byte-identical stdout; wall times go to stderr
//! behind `--timings`.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use ilnet::golden;
use ilnet::grassmann::{
    is_interlacing_matrix, mstar_membership, path_matrix, phi_embed, verify_intermat,
    verify_intermat_plucker, Matrix,
};
use ilnet::involution::{
    all_patterns, classify_swap, render_trace, tau, verify_parity_relation, verify_three_term,
    SwapKind,
};
use ilnet::network::{
    grid_network_seeded, grid_network_unit, interspace_witness_network, parse_ilnet, Network,
};
use ilnet::paths::{enumerate_pnc, pair_weight, Pattern};
use ilnet::report::RunReport;
use ilnet::rsk::{RskArrays, RskInput};
use ilnet::schur::{
    conjecture_check, is_schur_positive, lr_expand, rectangle_positivity_difference,
    row_omission_positivity_difference, verify_identity, Identity, Partition,
};

#[derive(Parser)]
#[command(
    name = "ilnet",
    about = "Exact verification toolkit for interlacing networks, path-swap involutions, birational RSK and Schur identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print per-check wall times to stderr.
    #[arg(long, global = true)]
    timings: bool,
    /// Output format (only `text`).
    #[arg(long, global = true, default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the full step log of the sink-swapping involution on one pair.
    TauTrace {
        /// Replay the bundled 9x9 example pair.
        #[arg(long)]
        example: bool,
        /// Grid parameters `m,n,k` (when not replaying the example).
        #[arg(long)]
        grid: Option<String>,
        /// Seed for rational edge weights; unit weights when absent.
        #[arg(long)]
        seed: Option<u64>,
        /// Red source positions, e.g. `2,4,6`.
        #[arg(long)]
        i: Option<String>,
        /// Red sink positions.
        #[arg(long)]
        j: Option<String>,
        /// Index into the canonical enumeration of pairs of that pattern.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Exhaustively check that the sink swap is a weight-preserving
    /// involution with end-swap images on a grid.
    VerifyInvolution {
        #[arg(long)]
        grid: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Three-term relation `wt(I,J) = wt(I,J') + wt(I,J'')`.
    VerifyThreeTerm {
        #[arg(long)]
        grid: Option<String>,
        /// Network file in the ILNET format.
        #[arg(long)]
        network: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
    },
    /// Parity relation over sink patterns with a fixed even part.
    VerifyParity {
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        network: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        i: String,
        /// The fixed even part, possibly empty (pass `none`).
        #[arg(long)]
        k_even: String,
    },
    /// Compute the birational RSK tables of a positive matrix.
    Rsk {
        /// Symbolic input of the given size, e.g. `2x2`.
        #[arg(long)]
        symbolic: Option<String>,
        /// Seeded rational input of the given size, e.g. `4x5`.
        #[arg(long)]
        random: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Matrix file: whitespace-separated exact entries, one row per line.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Also run the octahedron/star/recursion checks.
        #[arg(long)]
        verify: bool,
    },
    /// Verify the octahedron recurrence, the product identity behind it and
    /// the entry recursion for one input.
    VerifyOctahedron {
        #[arg(long)]
        symbolic: Option<String>,
        #[arg(long)]
        random: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print the path matrix of a network.
    PathMatrix {
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        network: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check the interlacing-matrix predicate on a matrix file.
    CheckInterlacingMatrix {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Verify the three-term determinant identity on an interlacing matrix,
    /// both directly and at the level of embedded Plucker coordinates.
    VerifyIntermat {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
    },
    /// Vanishing-pattern membership for the interlacing cell.
    Mstar {
        /// Build the glued witness network for this k and test its matrix.
        #[arg(long)]
        witness: Option<u32>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Schur identities, positivity verdicts and the conjecture checker.
    Schur {
        /// Identity name: flagged | flagged-top | flagged-rectangle |
        /// rectangle-square | skew | overlap-shift | interlacing-sum.
        #[arg(long)]
        identity: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        c: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        /// Row count parameter for the overlapping-shift identity.
        #[arg(long)]
        kparam: Option<usize>,
        #[arg(long, default_value_t = 5)]
        nvars: u32,
        /// Positivity family: `rectangle` (c, r, t) or `row-omit` (nu, t).
        #[arg(long)]
        positivity: Option<String>,
        /// Run the conjecture's difference-vector analysis on (lambda, mu).
        #[arg(long)]
        conjecture: bool,
        /// Expand an explicit symmetric polynomial (canonical text form).
        #[arg(long)]
        expand: Option<String>,
    },
    /// Replay the bundled worked examples against their golden transcripts.
    ReplayExamples {
        /// Print one regenerated transcript instead of diffing
        /// (tau-trace | rsk-tables | schur-instance).
        #[arg(long)]
        print: Option<String>,
    },
}

fn parse_set(text: &str) -> Result<BTreeSet<u32>> {
    if text == "none" || text.trim().is_empty() {
        return Ok(BTreeSet::new());
    }
    text.split(',')
        .map(|t| t.trim().parse::<u32>().context("bad index set"))
        .collect()
}

fn parse_grid(text: &str) -> Result<(u32, u32, u32)> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        bail!("grid parameters must be `m,n,k`");
    }
    Ok((
        parts[0].trim().parse()?,
        parts[1].trim().parse()?,
        parts[2].trim().parse()?,
    ))
}

fn parse_size(text: &str) -> Result<(u32, u32)> {
    let (m, n) = text
        .split_once('x')
        .ok_or_else(|| anyhow!("size must be `MxN`"))?;
    Ok((m.trim().parse()?, n.trim().parse()?))
}

fn load_network(
    grid: &Option<String>,
    file: &Option<PathBuf>,
    seed: &Option<u64>,
) -> Result<Network> {
    match (grid, file) {
        (Some(g), None) => {
            let (m, n, k) = parse_grid(g)?;
            Ok(match seed {
                Some(s) => grid_network_seeded(m, n, k, *s)?,
                None => grid_network_unit(m, n, k)?,
            })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            Ok(parse_ilnet(&text)?)
        }
        _ => bail!("pass exactly one of --grid or --network"),
    }
}

fn load_rsk_input(
    symbolic: &Option<String>,
    random: &Option<String>,
    seed: u64,
    input: &Option<PathBuf>,
) -> Result<RskInput> {
    match (symbolic, random, input) {
        (Some(size), None, None) => {
            let (m, n) = parse_size(size)?;
            Ok(RskInput::symbolic(m, n)?)
        }
        (None, Some(size), None) => {
            let (m, n) = parse_size(size)?;
            Ok(RskInput::seeded(m, n, seed)?)
        }
        (None, None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            Ok(RskInput::from_matrix(&Matrix::parse(&text)?)?)
        }
        _ => bail!("pass exactly one of --symbolic, --random, --input"),
    }
}

fn run(command: Command) -> Result<RunReport> {
    match command {
        Command::TauTrace {
            example,
            grid,
            seed,
            i,
            j,
            index,
        } => {
            let mut report = RunReport::new("tau-trace");
            let (net, pattern, pair) = if example {
                let (net, pattern, pair) = ilnet::involution::demo::worked_example()?;
                println!("network: grid 9x9 k=4 weights=unit");
                (net, pattern, pair)
            } else {
                let net = load_network(&grid, &None, &seed)?;
                let pattern = Pattern {
                    i: parse_set(&i.ok_or_else(|| anyhow!("--i required"))?)?,
                    j: parse_set(&j.ok_or_else(|| anyhow!("--j required"))?)?,
                };
                let pairs = enumerate_pnc(&net, &pattern)?;
                if pairs.is_empty() {
                    bail!("the pattern has no pairs");
                }
                let pair = pairs
                    .get(index)
                    .ok_or_else(|| anyhow!("pair index out of range ({} pairs)", pairs.len()))?
                    .clone();
                (net, pattern, pair)
            };
            let (out, trace) = tau(&net, &pattern, &pair)?;
            print!("{}", render_trace(&net, &pattern, &trace));
            report.record(
                "weight preserved",
                pair_weight(&net, &pair) == pair_weight(&net, &out),
                None,
            );
            let out_pattern = Pattern {
                i: pattern.i.clone(),
                j: trace.output_j[0].clone(),
            };
            let (back, _) = tau(&net, &out_pattern, &out)?;
            report.record("involution", back == pair, None);
            Ok(report)
        }
        Command::VerifyInvolution { grid, seed } => {
            let mut report = RunReport::new("verify-involution");
            let net = load_network(&Some(grid), &None, &seed)?;
            let k = net.k();
            let mut pairs_checked = 0usize;
            let mut ok = true;
            'outer: for i_set in all_patterns(k) {
                for j_set in all_patterns(k) {
                    let pattern = Pattern {
                        i: i_set.clone(),
                        j: j_set.clone(),
                    };
                    for pair in enumerate_pnc(&net, &pattern)? {
                        pairs_checked += 1;
                        let (out, trace) = tau(&net, &pattern, &pair)?;
                        ok &= pair_weight(&net, &pair) == pair_weight(&net, &out);
                        let out_j = trace.output_j[0].clone();
                        ok &= classify_swap(&j_set, &out_j, k)?.kind == SwapKind::EndSwap;
                        let out_pattern = Pattern {
                            i: i_set.clone(),
                            j: out_j,
                        };
                        let (back, _) = tau(&net, &out_pattern, &out)?;
                        ok &= back == pair;
                        if !ok {
                            break 'outer;
                        }
                    }
                }
            }
            report.record(
                "involution, weights and end-swap images",
                ok,
                Some(format!("{pairs_checked} pairs")),
            );
            Ok(report)
        }
        Command::VerifyThreeTerm {
            grid,
            network,
            seed,
            i,
            j,
        } => {
            let mut report = RunReport::new("verify-three-term");
            let net = load_network(&grid, &network, &seed)?;
            let ok = verify_three_term(&net, &parse_set(&i)?, &parse_set(&j)?)?;
            report.record("three-term relation", ok, None);
            Ok(report)
        }
        Command::VerifyParity {
            grid,
            network,
            seed,
            i,
            k_even,
        } => {
            let mut report = RunReport::new("verify-parity");
            let net = load_network(&grid, &network, &seed)?;
            let ok = verify_parity_relation(&net, &parse_set(&i)?, &parse_set(&k_even)?)?;
            report.record("parity relation", ok, None);
            Ok(report)
        }
        Command::Rsk {
            symbolic,
            random,
            seed,
            input,
            verify,
        } => {
            let mut report = RunReport::new("rsk");
            let arrays = RskArrays::compute(load_rsk_input(&symbolic, &random, seed, &input)?)?;
            print!("{}", arrays.render_tables());
            if verify {
                report.record("octahedron recurrence", arrays.verify_octahedron()?, None);
                report.record("product identity", arrays.verify_star_all()?, None);
                report.record("entry recursion", arrays.verify_y_recursion()?, None);
            } else {
                report.record("tables computed (dual-route agreement)", true, None);
            }
            Ok(report)
        }
        Command::VerifyOctahedron {
            symbolic,
            random,
            seed,
            input,
        } => {
            let mut report = RunReport::new("verify-octahedron");
            let arrays = RskArrays::compute(load_rsk_input(&symbolic, &random, seed, &input)?)?;
            report.record("octahedron recurrence", arrays.verify_octahedron()?, None);
            report.record("product identity", arrays.verify_star_all()?, None);
            report.record("entry recursion", arrays.verify_y_recursion()?, None);
            Ok(report)
        }
        Command::PathMatrix {
            grid,
            network,
            seed,
        } => {
            let mut report = RunReport::new("path-matrix");
            let net = load_network(&grid, &network, &seed)?;
            let p = path_matrix(&net)?;
            print!("{}", p.render());
            report.record("path matrix computed", true, None);
            Ok(report)
        }
        Command::CheckInterlacingMatrix { input, k } => {
            let mut report = RunReport::new("check-interlacing-matrix");
            let m = Matrix::parse(&std::fs::read_to_string(input)?)?;
            let check = is_interlacing_matrix(&m, k)?;
            report.record(
                "interlacing matrix",
                check.ok,
                check.violation.map(|v| {
                    format!(
                        "{} at rows {:?} cols {:?} = {}",
                        v.reason,
                        v.rows,
                        v.cols,
                        v.value.render(true)
                    )
                }),
            );
            Ok(report)
        }
        Command::VerifyIntermat {
            input,
            grid,
            seed,
            k,
            i,
            j,
        } => {
            let mut report = RunReport::new("verify-intermat");
            let (m, k) = match (&input, &grid) {
                (Some(path), None) => (
                    Matrix::parse(&std::fs::read_to_string(path)?)?,
                    k.ok_or_else(|| anyhow!("--k required with --input"))?,
                ),
                (None, Some(_)) => {
                    let net = load_network(&grid, &None, &seed)?;
                    (path_matrix(&net)?, net.k())
                }
                _ => bail!("pass exactly one of --input or --grid"),
            };
            let i_set = parse_set(&i)?;
            let j_set = parse_set(&j)?;
            report.record(
                "determinant identity",
                verify_intermat(&m, k, &i_set, &j_set)?,
                None,
            );
            report.record(
                "embedded coordinate identity",
                verify_intermat_plucker(&m, k, &i_set, &j_set)?,
                None,
            );
            Ok(report)
        }
        Command::Mstar { witness, input, k } => {
            let mut report = RunReport::new("mstar");
            let (m, k) = match (witness, &input) {
                (Some(k), None) => {
                    let net = interspace_witness_network(k)?;
                    (path_matrix(&net)?, k)
                }
                (None, Some(path)) => (
                    Matrix::parse(&std::fs::read_to_string(path)?)?,
                    k.ok_or_else(|| anyhow!("--k required with --input"))?,
                ),
                _ => bail!("pass exactly one of --witness or --input"),
            };
            let v = phi_embed(&m);
            let result = mstar_membership(&v, k)?;
            report.record("in cell closure", result.in_cell_closure, None);
            report.record("exactly on the cell", result.exact_cell, None);
            Ok(report)
        }
        Command::Schur {
            identity,
            lambda,
            mu,
            nu,
            t,
            c,
            r,
            kparam,
            nvars,
            positivity,
            conjecture,
            expand,
        } => {
            let mut report = RunReport::new("schur");
            let parse_partition = |s: &Option<String>, name: &str| -> Result<Partition> {
                Ok(Partition::parse(
                    s.as_deref().ok_or_else(|| anyhow!("--{name} required"))?,
                )?)
            };
            if let Some(name) = identity {
                let id = match name.as_str() {
                    "flagged" => Identity::FlaggedThreeTerm {
                        lambda: parse_partition(&lambda, "lambda")?,
                        t: t.ok_or_else(|| anyhow!("--t required"))?,
                    },
                    "flagged-top" => Identity::FlaggedTop {
                        lambda: parse_partition(&lambda, "lambda")?,
                    },
                    "flagged-rectangle" => Identity::FlaggedRectangle {
                        c: c.ok_or_else(|| anyhow!("--c required"))?,
                        r: r.ok_or_else(|| anyhow!("--r required"))?,
                    },
                    "rectangle-square" => Identity::RectangleSquare {
                        c: c.ok_or_else(|| anyhow!("--c required"))?,
                        r: r.ok_or_else(|| anyhow!("--r required"))?,
                    },
                    "skew" => Identity::SkewThreeTerm {
                        lambda: parse_partition(&lambda, "lambda")?,
                        t: t.ok_or_else(|| anyhow!("--t required"))?,
                    },
                    "overlap-shift" => {
                        let nu = parse_partition(&nu, "nu")?;
                        let k = kparam.unwrap_or(nu.len());
                        Identity::OverlapShift { nu, k }
                    }
                    "interlacing-sum" => Identity::InterlacingSum {
                        lambda: parse_partition(&lambda, "lambda")?.parts().to_vec(),
                        mu: parse_partition(&mu, "mu")?.parts().to_vec(),
                    },
                    other => bail!("unknown identity `{other}`"),
                };
                report.record(
                    format!("identity {name} at n={nvars}"),
                    verify_identity(&id, nvars)?,
                    None,
                );
            } else if let Some(family) = positivity {
                let diff = match family.as_str() {
                    "rectangle" => rectangle_positivity_difference(
                        c.ok_or_else(|| anyhow!("--c required"))?,
                        r.ok_or_else(|| anyhow!("--r required"))?,
                        t.ok_or_else(|| anyhow!("--t required"))?,
                        nvars,
                    )?,
                    "row-omit" => row_omission_positivity_difference(
                        &parse_partition(&nu, "nu")?,
                        t.ok_or_else(|| anyhow!("--t required"))? as usize,
                        nvars,
                    )?,
                    other => bail!("unknown positivity family `{other}`"),
                };
                let (ok, e) = is_schur_positive(&diff, nvars)?;
                report.record(
                    format!("{family} difference is Schur positive"),
                    ok,
                    Some(e.render()),
                );
            } else if conjecture {
                let lam = parse_partition(&lambda, "lambda")?;
                let m = parse_partition(&mu, "mu")?;
                let rep = conjecture_check(&lam, &m, nvars)?;
                println!("delta = {:?}", rep.delta);
                println!("sigma = {:?}", rep.sigma);
                println!("admissible = {:?}", rep.d_set);
                for case in &rep.cases {
                    report.record(
                        format!(
                            "i={}: s{} * s{} >= s{} * s{}",
                            case.i,
                            case.lambda_minus.render(),
                            case.mu_plus.render(),
                            lam.render(),
                            m.render()
                        ),
                        case.positive,
                        Some(case.expansion.render()),
                    );
                }
                if rep.cases.is_empty() {
                    report.record("empty admissible set", true, None);
                }
            } else if let Some(text) = expand {
                let poly = ilnet::algebra::parse_poly(&text)?;
                let e = lr_expand(&poly, nvars)?;
                report.record("expansion", true, Some(e.render()));
            } else {
                bail!("pass one of --identity, --positivity, --conjecture, --expand");
            }
            Ok(report)
        }
        Command::ReplayExamples { print } => {
            let mut report = RunReport::new("replay-examples");
            if let Some(name) = print {
                let text = match name.as_str() {
                    "tau-trace" => golden::tau_trace_text()?,
                    "rsk-tables" => golden::rsk_tables_text()?,
                    "schur-instance" => golden::schur_instance_text()?,
                    other => bail!("unknown example `{other}`"),
                };
                // Emit only the transcript so it can be captured verbatim.
                print!("{text}");
                std::process::exit(0);
            }
            for (name, expected, actual) in golden::replay_all()? {
                let diff = golden::first_diff(expected, &actual);
                report.record(format!("golden {name}"), diff.is_none(), diff);
            }
            Ok(report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.format != "text" {
        eprintln!("only --format text is supported");
        return ExitCode::from(2);
    }
    let timings = cli.timings;
    match run(cli.command) {
        Ok(report) => {
            print!("{}", report.render());
            if timings {
                eprint!("{}", report.render_timings());
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
