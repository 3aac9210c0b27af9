//! qstab: build stabilizer codes from classical parity-check matrices,
//! verify their defining identities, search minimum distances and
//! reproduce the reference parameter tables.
//!
//! Exit codes: 0 success, 1 contract error (machine-readable JSON error
//! object on stdout), 2 usage error. Long-running searches log progress to
//! stderr only; stdout stays machine-parsable.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stabcodes::bounds::{bound_table, BOUND_NAMES};
use stabcodes::constructions::{
    construction_i, construction_ii, construction_iii, css, enlarged_css,
    find_effective_permutation, permuted_uuv, PermSearchMode, PermSearchOutcome,
};
use stabcodes::cyclic_qr::{
    circulant_code, circulant_search, extended_qr_css, k1_code, qr_circulant, qr_css,
};
use stabcodes::distance::{
    additional_count, build_decoder, build_decoder_from_errors, enumerate_weight_at_most,
    estimate_capability, quantum_min_distance, SearchOptions,
};
use stabcodes::gf2::{parse_matrix, BitMatrix, BitVec, Permutation, PRNG_NAME};
use stabcodes::reed_muller::{
    check_rm_permutation, quantum_rm, quantum_rm_permuted, rm_shift_permutations,
};
use stabcodes::report::{CapabilitySection, CodeReport, SCHEMA_VERSION};
use stabcodes::symplectic::{CheckMatrix, StabilizerCode};

const LONG_BUDGET: u64 = 1 << 31;

#[derive(Parser)]
#[command(
    name = "qstab",
    version,
    about = "Stabilizer codes from classical parity-check matrices"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Worker threads for the enumeration kernels (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Enumeration budget in codewords (default 2^28).
    #[arg(long, global = true, env = "QSTAB_BUDGET")]
    budget: Option<u64>,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a check-matrix file: commutativity, rank and dimensions.
    Check {
        #[arg(long)]
        r#in: PathBuf,
    },
    /// Exact quantum minimum distance of the code in a check-matrix file.
    Mindist {
        #[arg(long)]
        r#in: PathBuf,
        /// Cap on enumerated codewords (overrides --budget for this run).
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Build a code from classical matrices.
    Construct {
        #[arg(value_enum)]
        which: ConstructKind,
        /// Input matrix files, in the order the construction expects.
        #[arg(long = "in", required = true)]
        inputs: Vec<PathBuf>,
        /// Permutation file (whitespace-separated image indices) for uuv-perm.
        #[arg(long)]
        perm_file: Option<PathBuf>,
        /// Also run the exact distance search on the result.
        #[arg(long)]
        mindist: bool,
        /// Also write the check matrix in text form to this file.
        #[arg(long)]
        check_out: Option<PathBuf>,
    },
    /// Quantum Reed-Muller code for parameters r, m.
    Rm {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = RmPerm::None)]
        perm: RmPerm,
        #[arg(long)]
        mindist: bool,
        /// Attach the capability estimate (classical distances, t*, counts).
        #[arg(long)]
        capability: bool,
        #[arg(long)]
        check_out: Option<PathBuf>,
    },
    /// Evaluate the shift-permutation conditions for every (r, m, P) in range.
    RmConjecture {
        #[arg(long)]
        rmax: u32,
        #[arg(long)]
        mmax: u32,
    },
    /// Circulant code from two generator bit strings.
    Circulant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(long)]
        check_out: Option<PathBuf>,
    },
    /// Search circulant generator pairs for the best distance at dimension k.
    CirculantSearch {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Maximum candidate pairs to examine.
        #[arg(long, default_value_t = 1 << 23)]
        search_budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Quadratic-residue code families for a prime p.
    Qr {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum)]
        variant: QrVariant,
        /// Allow enumerations beyond the default budget (p = 29 circulant).
        #[arg(long)]
        long: bool,
        #[arg(long)]
        check_out: Option<PathBuf>,
    },
    /// k = 1 code from a palindromic vector (full n bits, a_0 first).
    K1 {
        #[arg(long)]
        a: String,
        #[arg(long)]
        check_out: Option<PathBuf>,
    },
    /// Asymptotic bound curves as CSV.
    Bounds {
        /// Comma-separated bound names; defaults to all of them.
        #[arg(long)]
        names: Option<String>,
        #[arg(long, default_value_t = 101)]
        grid: usize,
    },
    /// Decode a syndrome against a table built from a check-matrix file.
    Decode {
        #[arg(long)]
        r#in: PathBuf,
        /// Syndrome bits, one character per generator row.
        #[arg(long)]
        syndrome: String,
        /// Build the table over all errors with w(u)+w(v) <= 2 t*.
        #[arg(long, conflicts_with = "weight")]
        t_star: Option<usize>,
        /// Build the table over all errors of generalized weight <= this.
        #[arg(long)]
        weight: Option<usize>,
    },
    /// Search for a column permutation making a parity-check commutative.
    SearchPerm {
        #[arg(long)]
        r#in: PathBuf,
        #[arg(long, value_enum)]
        mode: PermMode,
        #[arg(long, default_value_t = 1 << 20)]
        search_budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Regenerate a reference parameter table at desk scale.
    Tables {
        /// Table number 1-5.
        table: u8,
        /// Largest prime (tables 3-5) to attempt.
        #[arg(long)]
        pmax: Option<u64>,
        /// Largest length (table 2) to attempt.
        #[arg(long)]
        nmax: Option<usize>,
        /// Allow the 2^30-scale cells (table 5, p = 29).
        #[arg(long)]
        long: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    Css,
    Enlarged,
    C1,
    C2,
    C3,
    UuvPerm,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum RmPerm {
    None,
    T,
    Tq,
}

#[derive(Clone, Copy, ValueEnum)]
enum QrVariant {
    Css,
    Extended,
    Circulant,
}

#[derive(Clone, Copy, ValueEnum)]
enum PermMode {
    Exhaustive,
    Random,
}

enum CliError {
    Domain(stabcodes::Error),
    Io { path: String, message: String },
    Input(String),
}

impl From<stabcodes::Error> for CliError {
    fn from(e: stabcodes::Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn to_json(&self) -> Value {
        let (kind, message) = match self {
            CliError::Domain(e) => (e.kind().to_string(), e.to_string()),
            CliError::Io { path, message } => ("io".to_string(), format!("{path}: {message}")),
            CliError::Input(m) => ("input".to_string(), m.clone()),
        };
        json!({
            "schema": SCHEMA_VERSION,
            "version": env!("CARGO_PKG_VERSION"),
            "error": { "kind": kind, "message": message },
        })
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn read_check_matrix(path: &Path) -> CliResult<CheckMatrix> {
    Ok(CheckMatrix::parse(&read_file(path)?)?)
}

fn read_plain_matrix(path: &Path) -> CliResult<BitMatrix> {
    let (m, _) = parse_matrix(&read_file(path)?)?;
    Ok(m)
}

fn read_permutation(path: &Path) -> CliResult<Permutation> {
    let text = read_file(path)?;
    let image: Vec<usize> = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| CliError::Input(format!("bad permutation index {tok:?}")))
        })
        .collect::<CliResult<_>>()?;
    Ok(Permutation::new(image)?)
}

fn parse_bits(s: &str) -> CliResult<BitVec> {
    Ok(BitVec::from_binary_str(s)?)
}

fn write_output(common: &Common, text: &str) -> CliResult<()> {
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_check_out(path: &Option<PathBuf>, code: &StabilizerCode) -> CliResult<()> {
    if let Some(path) = path {
        fs::write(path, code.h().to_text()).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    }
    Ok(())
}

fn envelope(command: &str, seed: Option<u64>, opts: &SearchOptions, payload: Value) -> Value {
    let mut doc = json!({
        "schema": SCHEMA_VERSION,
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "prng": PRNG_NAME,
        "seed": seed,
        "budget": opts.budget,
    });
    if let (Some(obj), Some(extra)) = (doc.as_object_mut(), payload.as_object()) {
        for (k, v) in extra {
            obj.insert(k.clone(), v.clone());
        }
    }
    doc
}

fn render(doc: &Value) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("serializable report");
    text.push('\n');
    text
}

/// Attach the optional distance search, re-validate the defining
/// identities, and serialize.
fn code_payload(
    code: &mut StabilizerCode,
    run_mindist: bool,
    opts: &SearchOptions,
) -> CliResult<Value> {
    if run_mindist && code.d_exact().is_none() {
        let r = quantum_min_distance(code, opts);
        if r.exact {
            if code.d_lower().is_none() {
                code.set_d_lower(r.value);
            }
            code.set_d_exact(r.value);
        } else {
            eprintln!(
                "distance search truncated after {} words; best seen {}",
                r.enumerated, r.value
            );
        }
    }
    code.check_invariants()?;
    Ok(json!({ "code": serde_json::to_value(CodeReport::from(&*code)).unwrap() }))
}

fn search_options(common: &Common) -> SearchOptions {
    SearchOptions {
        budget: common.budget.unwrap_or(1 << 28),
        threads: common.threads,
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let common = cli.common.clone();
    let opts = search_options(&common);
    match cli.command {
        Command::Check { r#in } => {
            let h = read_check_matrix(&r#in)?;
            let rank = h.rank();
            let payload = json!({
                "commutative": h.is_commutative(),
                "rank": rank,
                "n": h.n(),
                "k": h.n() - rank,
                "rows": h.r(),
            });
            write_output(&common, &render(&envelope("check", None, &opts, payload)))
        }
        Command::Mindist { r#in, cap } => {
            let h = read_check_matrix(&r#in)?;
            let code = StabilizerCode::new(h, "from-file")?;
            let run_opts = SearchOptions {
                budget: cap.unwrap_or(opts.budget),
                threads: opts.threads,
            };
            let start = Instant::now();
            let r = quantum_min_distance(&code, &run_opts);
            let seconds = start.elapsed().as_secs_f64();
            let payload = if r.exact {
                json!({
                    "d": r.value,
                    "truncated": false,
                    "enumerated": r.enumerated,
                    "seconds": seconds,
                })
            } else {
                json!({
                    "d_lower": r.value,
                    "truncated": true,
                    "enumerated": r.enumerated,
                    "seconds": seconds,
                })
            };
            write_output(
                &common,
                &render(&envelope("mindist", None, &run_opts, payload)),
            )
        }
        Command::Construct {
            which,
            inputs,
            perm_file,
            mindist,
            check_out,
        } => {
            let need = match which {
                ConstructKind::Css | ConstructKind::C1 | ConstructKind::C2 | ConstructKind::C3 => 2,
                ConstructKind::Enlarged => 5,
                ConstructKind::UuvPerm => 4,
            };
            if inputs.len() != need {
                return Err(CliError::Input(format!(
                    "this construction expects {need} --in files, got {}",
                    inputs.len()
                )));
            }
            let ms: Vec<BitMatrix> = inputs
                .iter()
                .map(|p| read_plain_matrix(p))
                .collect::<CliResult<_>>()?;
            let mut code = match which {
                ConstructKind::Css => css(&ms[0], &ms[1], None, &opts)?,
                ConstructKind::C1 => construction_i(&ms[0], &ms[1], None, &opts)?,
                ConstructKind::C2 => construction_ii(&ms[0], &ms[1])?,
                ConstructKind::C3 => construction_iii(&ms[0], &ms[1], None, &opts)?,
                ConstructKind::Enlarged => {
                    enlarged_css(&ms[0], &ms[1], &ms[2], &ms[3], &ms[4], None, &opts)?
                }
                ConstructKind::UuvPerm => {
                    let Some(pf) = perm_file else {
                        return Err(CliError::Input("uuv-perm needs --perm-file".to_string()));
                    };
                    let p = read_permutation(&pf)?;
                    permuted_uuv(&ms[0], &ms[1], &ms[2], &ms[3], &p, None, &opts)?
                }
            };
            let payload = code_payload(&mut code, mindist, &opts)?;
            write_check_out(&check_out, &code)?;
            write_output(
                &common,
                &render(&envelope("construct", None, &opts, payload)),
            )
        }
        Command::Rm {
            r,
            m,
            perm,
            mindist,
            capability,
            check_out,
        } => {
            let mut code = match perm {
                RmPerm::None => quantum_rm(r, m)?,
                RmPerm::T => quantum_rm_permuted(r, m, &rm_shift_permutations(m)?.t)?,
                RmPerm::Tq => quantum_rm_permuted(r, m, &rm_shift_permutations(m)?.p)?,
            };
            let mut payload = code_payload(&mut code, mindist, &opts)?;
            if capability {
                let cap = estimate_capability(&code, &opts)?;
                payload.as_object_mut().unwrap().insert(
                    "capability".to_string(),
                    serde_json::to_value(CapabilitySection::from(&cap)).unwrap(),
                );
            }
            write_check_out(&check_out, &code)?;
            write_output(&common, &render(&envelope("rm", None, &opts, payload)))
        }
        Command::RmConjecture { rmax, mmax } => {
            let mut rows = Vec::new();
            for r in 1..=rmax {
                for m in (2 * r).max(2)..=mmax {
                    let perms = rm_shift_permutations(m)?;
                    for (name, p) in [("t", &perms.t), ("tq", &perms.p)] {
                        let report = check_rm_permutation(r, m, p)?;
                        rows.push(json!({
                            "r": r,
                            "m": m,
                            "perm": name,
                            "cond8_symmetric": report.commutation_symmetric,
                            "cond8_orthogonal": report.cross_orthogonal,
                            "cond9_c1_fixed": report.c1_fixed,
                            "cond9_c2_fixed": report.c2_fixed,
                            "cond10_moved": report.extension_moved,
                            "all_pass": report.all_pass(),
                        }));
                    }
                }
            }
            let payload = json!({ "rows": rows });
            write_output(
                &common,
                &render(&envelope("rm-conjecture", None, &opts, payload)),
            )
        }
        Command::Circulant {
            n,
            g1,
            g2,
            check_out,
        } => {
            let g1 = parse_bits(&g1)?;
            let g2 = parse_bits(&g2)?;
            if g1.len() != n || g2.len() != n {
                return Err(CliError::Input(format!(
                    "generators must have exactly n = {n} bits"
                )));
            }
            let mut code = circulant_code(&g1, &g2, &opts)?;
            let payload = code_payload(&mut code, false, &opts)?;
            write_check_out(&check_out, &code)?;
            write_output(
                &common,
                &render(&envelope("circulant", None, &opts, payload)),
            )
        }
        Command::CirculantSearch {
            n,
            k,
            search_budget,
            seed,
        } => {
            let found = circulant_search(n, k, search_budget, seed, &opts)?;
            let payload = match found {
                Some(best) => json!({
                    "found": {
                        "g1": best.g1.to_string(),
                        "g2": best.g2.to_string(),
                        "d": best.d,
                    },
                    "candidates": best.candidates,
                    "search_budget": search_budget,
                }),
                None => json!({ "found": null, "search_budget": search_budget }),
            };
            write_output(
                &common,
                &render(&envelope("circulant-search", Some(seed), &opts, payload)),
            )
        }
        Command::Qr {
            p,
            variant,
            long,
            check_out,
        } => {
            let run_opts = SearchOptions {
                budget: if long {
                    opts.budget.max(LONG_BUDGET)
                } else {
                    opts.budget
                },
                threads: opts.threads,
            };
            let mut code = match variant {
                QrVariant::Css => qr_css(p, &run_opts)?,
                QrVariant::Extended => extended_qr_css(p, &run_opts)?,
                QrVariant::Circulant => qr_circulant(p, &run_opts)?,
            };
            let payload = code_payload(&mut code, false, &run_opts)?;
            write_check_out(&check_out, &code)?;
            write_output(&common, &render(&envelope("qr", None, &run_opts, payload)))
        }
        Command::K1 { a, check_out } => {
            let a = parse_bits(&a)?;
            let mut code = k1_code(&a, &opts)?;
            let payload = code_payload(&mut code, false, &opts)?;
            write_check_out(&check_out, &code)?;
            write_output(&common, &render(&envelope("k1", None, &opts, payload)))
        }
        Command::Bounds { names, grid } => {
            let names: Vec<String> = match names {
                Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
                None => BOUND_NAMES.iter().map(|s| s.to_string()).collect(),
            };
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let csv = bound_table(&refs, grid)?;
            write_output(&common, &csv)
        }
        Command::Decode {
            r#in,
            syndrome,
            t_star,
            weight,
        } => {
            let h = read_check_matrix(&r#in)?;
            let code = StabilizerCode::new(h, "from-file")?;
            let table = match (t_star, weight) {
                (Some(ts), None) => build_decoder(&code, ts, &opts)?,
                (None, Some(w)) => {
                    let errors = enumerate_weight_at_most(code.n(), w);
                    build_decoder_from_errors(&code, &errors, w)?
                }
                _ => {
                    return Err(CliError::Input(
                        "pass exactly one of --t-star or --weight".to_string(),
                    ))
                }
            };
            let s = parse_bits(&syndrome)?;
            let payload = match table.decode(&s)? {
                Some(e) => json!({
                    "error": e.pauli_label(),
                    "symplectic": format!("{}|{}", e.u(), e.v()),
                    "table_entries": table.len(),
                }),
                None => json!({
                    "detected_uncorrectable": true,
                    "table_entries": table.len(),
                }),
            };
            write_output(&common, &render(&envelope("decode", None, &opts, payload)))
        }
        Command::SearchPerm {
            r#in,
            mode,
            search_budget,
            seed,
        } => {
            let m = read_plain_matrix(&r#in)?;
            let mode = match mode {
                PermMode::Exhaustive => PermSearchMode::Exhaustive,
                PermMode::Random => PermSearchMode::Random,
            };
            let outcome = find_effective_permutation(&m, mode, search_budget, seed)?;
            let payload = match outcome {
                PermSearchOutcome::Found(p) => json!({
                    "outcome": "found",
                    "permutation": p.image(),
                }),
                PermSearchOutcome::NoneFound => json!({ "outcome": "none-found" }),
                PermSearchOutcome::NoneExists => json!({ "outcome": "none-exists" }),
            };
            write_output(
                &common,
                &render(&envelope("search-perm", Some(seed), &opts, payload)),
            )
        }
        Command::Tables {
            table,
            pmax,
            nmax,
            long,
            seed,
        } => {
            let payload = run_table(table, pmax, nmax, long, seed, &opts)?;
            write_output(
                &common,
                &render(&envelope("tables", Some(seed), &opts, payload)),
            )
        }
    }
}

fn cell(fields: Value, expected: usize, computed: Option<usize>) -> Value {
    let mut obj = fields;
    let status = match computed {
        Some(d) if d == expected => "matched",
        Some(_) => "mismatch",
        None => "skipped-budget",
    };
    let map = obj.as_object_mut().unwrap();
    map.insert("expected_d".into(), json!(expected));
    map.insert("computed_d".into(), json!(computed));
    map.insert("status".into(), json!(status));
    obj
}

fn run_table(
    table: u8,
    pmax: Option<u64>,
    nmax: Option<usize>,
    long: bool,
    seed: u64,
    opts: &SearchOptions,
) -> CliResult<Value> {
    let mut cells = Vec::new();
    match table {
        1 => {
            // additional correctable error counts for the quantum RM codes;
            // the two long-code cells are recomputed exactly and reported as
            // mismatches against the published rounded values
            for (n, t, t_star, published) in [
                (32usize, 1usize, 1usize, "1984"),
                (64, 3, 3, "5.99E+09"),
                (128, 3, 3, "3.87E+11"),
            ] {
                let computed = additional_count(n, t, t_star).to_string();
                let status = if computed == published {
                    "matched"
                } else {
                    "mismatch"
                };
                cells.push(json!({
                    "n": n,
                    "t": t,
                    "t_star": t_star,
                    "published": published,
                    "computed": computed,
                    "status": status,
                }));
            }
        }
        2 => {
            let nmax = nmax.unwrap_or(13);
            let cells_spec: &[(usize, usize, usize)] = &[
                (5, 0, 3),
                (5, 1, 3),
                (6, 0, 4),
                (6, 2, 2),
                (6, 3, 2),
                (6, 4, 2),
                (7, 0, 3),
                (7, 1, 3),
                (7, 3, 2),
                (7, 4, 2),
                (8, 0, 4),
                (8, 1, 3),
                (8, 4, 2),
                (8, 5, 2),
                (8, 6, 2),
                (13, 0, 5),
                (13, 1, 5),
            ];
            for &(n, k, d) in cells_spec {
                let fields = json!({ "n": n, "k": k });
                if n > nmax {
                    cells.push(cell(fields, d, None));
                    continue;
                }
                eprintln!("table 2: searching (n={n}, k={k})");
                let found = circulant_search(n, k, 1 << 23, seed, opts)?;
                cells.push(cell(fields, d, found.map(|b| b.d)));
            }
        }
        3 | 4 => {
            let pmax = pmax.unwrap_or(23);
            let published: &[(u64, usize, usize)] = &[
                (7, 3, 4),
                (17, 5, 6),
                (23, 7, 8),
                (31, 7, 8),
                (41, 9, 10),
                (47, 11, 12),
                (71, 11, 12),
            ];
            for &(p, d3, d4) in published {
                let expected = if table == 3 { d3 } else { d4 };
                let fields = if table == 3 {
                    json!({ "p": p })
                } else {
                    json!({ "p": p, "n": p + 1 })
                };
                if p > pmax {
                    cells.push(cell(fields, expected, None));
                    continue;
                }
                eprintln!("table {table}: running p = {p}");
                let code = if table == 3 {
                    qr_css(p, opts)?
                } else {
                    extended_qr_css(p, opts)?
                };
                cells.push(cell(fields, expected, code.d_exact()));
            }
        }
        5 => {
            let pmax = pmax.unwrap_or(if long { 29 } else { 17 });
            for (p, d) in [(5u64, 3usize), (13, 5), (17, 5), (29, 11)] {
                let fields = json!({ "p": p });
                let needs_long = p >= 29;
                if p > pmax || (needs_long && !long) {
                    cells.push(cell(fields, d, None));
                    continue;
                }
                let run_opts = SearchOptions {
                    budget: if needs_long {
                        opts.budget.max(LONG_BUDGET)
                    } else {
                        opts.budget
                    },
                    threads: opts.threads,
                };
                eprintln!("table 5: running p = {p}");
                let code = qr_circulant(p, &run_opts)?;
                cells.push(cell(fields, d, code.d_exact()));
            }
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown table {other}; expected 1-5"
            )))
        }
    }
    Ok(json!({ "table": table, "cells": cells }))
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            println!("{}", render(&e.to_json()));
            std::process::exit(1);
        }
    }
}
