//! Command-line front end: search graphs for codes, verify stored records,
//! build the catalog families, check bounds and emit infidelity curves.
//!
//! Exit codes: 0 on success (and verified records), 1 on verification
//! failure, 2 on usage or input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use eaqec::catalog::statevector_check_feasible;
use eaqec::noise::{infidelity_curve, AbstractProfile, CorrectabilityProfile, DecodingRule};
use eaqec::search::{
    extract_stabilizer, search, CodingClique, SearchMode, SearchProblem, SearchTarget,
};
use eaqec::verify::{degenerate_pairs, kl_verify_statevector, symplectic_verify, syndrome};
use eaqec::{
    coffeepot_code, hamming_bound, hamming_bound_one_error, star_code, table1_regression,
    CodeParams, CodeRecord, Graph, PauliOperator,
};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "eaqec",
    version,
    about = "Construct, verify and noise-analyze entanglement-assisted graph codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search a graph for coding cliques or coding groups
    Search(SearchArgs),
    /// Re-verify a stored code record
    Verify(VerifyArgs),
    /// Built-in code families
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Reconstruct the 10-qubit [[9,5,3;1]] code from its stabilizer table
    Coffeepot {
        /// Write the verified record as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quantum Hamming bound ledger line
    Bound(BoundArgs),
    /// Infidelity curves over a probability grid, written as CSV
    Infidelity(InfidelityArgs),
    /// Best-known-parameters regression report
    Table1,
}

#[derive(Args)]
struct SearchArgs {
    /// Graph JSON file: {"vertices": n, "edges": [[a,b],...], "pure": [v,...]}
    #[arg(long)]
    graph: PathBuf,
    /// Verified distance target
    #[arg(long)]
    distance: usize,
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Minimum number of logical qubits (group mode: generators; clique
    /// mode: results of size at least 2^k)
    #[arg(long = "min-k")]
    min_k: u32,
    /// Print every maximal result meeting the bar, not just the largest
    #[arg(long)]
    all: bool,
    /// Write the first result as a verified record (group results only)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Code record JSON file
    #[arg(long)]
    record: PathBuf,
    #[arg(long, value_enum, default_value = "both")]
    oracle: OracleArg,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// The star-graph code with a protected center
    Star {
        /// Number of noisy qubits (leaves)
        #[arg(long)]
        n: usize,
        /// Write the verified record as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    e: usize,
}

#[derive(Args)]
struct InfidelityArgs {
    /// Comma-separated record JSON files
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    records: Vec<PathBuf>,
    /// Built-in literature comparison profiles
    #[arg(long = "abstract", value_enum)]
    abstract_profiles: Vec<AbstractArg>,
    #[arg(long = "p-min")]
    p_min: f64,
    #[arg(long = "p-max")]
    p_max: f64,
    #[arg(long)]
    steps: usize,
    /// pe as a fraction of p
    #[arg(long = "pe-ratio")]
    pe_ratio: f64,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
    /// Correctability rule for record-backed profiles
    #[arg(long, value_enum, default_value = "strict")]
    rule: RuleArg,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum ModeArg {
    Group,
    Clique,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum OracleArg {
    Symplectic,
    Statevector,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum AbstractArg {
    #[value(name = "10-4-3")]
    TenFourThree,
    #[value(name = "9-3-3")]
    NineThreeThree,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Strict,
    Decoder,
}

enum CliError {
    /// Bad input or arguments (exit 2).
    Usage(String),
    /// A code failed verification (exit 1).
    VerificationFailed(String),
}

impl From<eaqec::Error> for CliError {
    fn from(e: eaqec::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Search(args) => cmd_search(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Family { family } => match family {
            FamilyCommand::Star { n, out } => cmd_star(n, out),
        },
        Command::Coffeepot { out } => cmd_coffeepot(out),
        Command::Bound(args) => cmd_bound(args),
        Command::Infidelity(args) => cmd_infidelity(args),
        Command::Table1 => cmd_table1(),
    }
}

fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn format_clique(clique: &CodingClique) -> String {
    let members: Vec<String> = clique.members.iter().map(|m| m.to_string()).collect();
    if clique.is_group {
        let gens: Vec<String> = clique.generators.iter().map(|g| g.to_string()).collect();
        format!(
            "group k={} size={} generators [{}] members [{}]",
            clique.generators.len(),
            clique.members.len(),
            gens.join(" "),
            members.join(" ")
        )
    } else {
        format!(
            "clique size={} members [{}]",
            clique.members.len(),
            members.join(" ")
        )
    }
}

fn cmd_search(args: SearchArgs) -> Result<(), CliError> {
    let graph = Graph::from_json_str(&read_to_string(&args.graph)?)?;
    let mode = match args.mode {
        ModeArg::Group => SearchMode::Group,
        ModeArg::Clique => SearchMode::Clique,
    };
    let target = match mode {
        SearchMode::Group => SearchTarget::LogDimension(args.min_k),
        SearchMode::Clique => SearchTarget::Dimension(
            1usize
                .checked_shl(args.min_k)
                .ok_or_else(|| CliError::Usage("min-k too large".into()))?,
        ),
    };
    let problem = SearchProblem {
        graph: graph.clone(),
        distance: args.distance,
        mode,
        target,
        maximum_only: !args.all,
    };
    let results = search(&problem)?;
    println!(
        "search: {} vertices, pure {}, distance {}, {} mode, min k {}",
        graph.vertex_count(),
        graph.pure_set(),
        args.distance,
        match mode {
            SearchMode::Group => "group",
            SearchMode::Clique => "clique",
        },
        args.min_k
    );
    println!("found {} result(s)", results.len());
    for (i, clique) in results.iter().enumerate() {
        println!("result {}: {}", i + 1, format_clique(clique));
    }
    if let Some(out) = args.out {
        let Some(first) = results.first() else {
            return Err(CliError::Usage("no result to write".into()));
        };
        if !first.is_group {
            return Err(CliError::Usage(
                "only group results can be written as records".into(),
            ));
        }
        let record = record_from_group(&graph, first, args.distance, &args.graph)?;
        write_file(&out, &record.to_json_string())?;
        println!("wrote record to {}", out.display());
    }
    Ok(())
}

fn record_from_group(
    graph: &Graph,
    group: &CodingClique,
    distance: usize,
    source: &Path,
) -> Result<CodeRecord, CliError> {
    let stabilizer = extract_stabilizer(graph, group)?;
    let report = symplectic_verify(&stabilizer, &graph.noisy_set(), distance)?;
    if !report.passed {
        return Err(CliError::VerificationFailed(format!(
            "search result fails verification: {}",
            report.summary()
        )));
    }
    let e = graph.pure_set().len();
    let n = graph.vertex_count() - e;
    let k = group.generators.len();
    let stem = source
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".into());
    Ok(CodeRecord {
        name: format!("{stem}-d{distance}-k{k}"),
        graph: graph.clone(),
        group_generators: group.generators.clone(),
        stabilizer,
        params: CodeParams {
            n,
            k,
            d: distance,
            e,
        },
        verification: report,
        provenance: format!("search over {}", source.display()),
    })
}

fn print_record_summary(record: &CodeRecord) {
    println!(
        "record: {} [[{},{},{};{}]]",
        record.name, record.params.n, record.params.k, record.params.d, record.params.e
    );
    println!(
        "graph: {} vertices, edges {:?}, pure {}",
        record.graph.vertex_count(),
        record.graph.edges(),
        record.graph.pure_set()
    );
    let gens: Vec<String> = record
        .group_generators
        .iter()
        .map(|g| g.to_string())
        .collect();
    println!("group generators: [{}]", gens.join(" "));
    for op in &record.stabilizer {
        println!("stabilizer: {}", op.to_letter_string());
    }
}

/// One -/+ line per single-qubit error on the noisy qubits.
fn print_syndrome_table(record: &CodeRecord) {
    let m = record.graph.vertex_count();
    if m > 16 {
        return;
    }
    for q in record.graph.noisy_set().iter() {
        for op in [
            PauliOperator::x_on(m, q),
            PauliOperator::y_on(m, q),
            PauliOperator::z_on(m, q),
        ] {
            println!(
                "syndrome {}: {}",
                describe_single_qubit(&op),
                syndrome(&record.stabilizer, &op)
            );
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let record = CodeRecord::from_json_str(&read_to_string(&args.record)?)?;
    record.check_consistent()?;
    print_record_summary(&record);
    let mut failed = false;

    if args.oracle != OracleArg::Statevector {
        let report = symplectic_verify(
            &record.stabilizer,
            &record.graph.noisy_set(),
            record.params.d,
        )?;
        println!("symplectic: {}", report.summary());
        failed |= !report.passed;
    }
    if args.oracle != OracleArg::Symplectic {
        let feasible = statevector_check_feasible(
            record.graph.vertex_count(),
            record.params.n,
            record.params.d,
        );
        if feasible {
            let report = kl_verify_statevector(&record.graph, &record.members(), record.params.d)?;
            println!("statevector: {}", report.summary());
            failed |= !report.passed;
        } else if args.oracle == OracleArg::Statevector {
            return Err(CliError::Usage(
                "state-vector oracle infeasible for this record size".into(),
            ));
        } else {
            println!("statevector: skipped (enumeration too large)");
        }
    }
    if failed {
        println!("verification failed");
        Err(CliError::VerificationFailed(format!(
            "record {} does not verify at distance {}",
            record.name, record.params.d
        )))
    } else {
        println!("verified");
        Ok(())
    }
}

fn cmd_star(n: usize, out: Option<PathBuf>) -> Result<(), CliError> {
    let record = star_code(n)?;
    print_record_summary(&record);
    print_syndrome_table(&record);
    println!("verification: {}", record.verification.summary());
    if let Some(out) = out {
        write_file(&out, &record.to_json_string())?;
        println!("wrote record to {}", out.display());
    }
    Ok(())
}

fn cmd_coffeepot(out: Option<PathBuf>) -> Result<(), CliError> {
    let record = coffeepot_code()?;
    print_record_summary(&record);
    print_syndrome_table(&record);
    println!("verification: {}", record.verification.summary());
    println!("provenance: {}", record.provenance);
    let groups = degenerate_pairs(&record.stabilizer, &eaqec::VertexSet::full(10));
    for group in &groups {
        let names: Vec<String> = group.iter().map(describe_single_qubit).collect();
        println!("degenerate syndrome group: {{{}}}", names.join(", "));
    }
    // single-qubit syndromes on the noisy qubits stay distinct
    let mut seen = std::collections::HashSet::new();
    let mut total = 0;
    for q in record.graph.noisy_set().iter() {
        for op in [
            PauliOperator::x_on(10, q),
            PauliOperator::y_on(10, q),
            PauliOperator::z_on(10, q),
        ] {
            seen.insert(syndrome(&record.stabilizer, &op));
            total += 1;
        }
    }
    println!("distinct syndromes on noisy qubits: {}/{total}", seen.len());
    if let Some(out) = out {
        write_file(&out, &record.to_json_string())?;
        println!("wrote record to {}", out.display());
    }
    Ok(())
}

fn describe_single_qubit(op: &PauliOperator) -> String {
    let q = op
        .support()
        .iter()
        .next()
        .expect("single-qubit error has support");
    format!("{}{}", op.letter(q), q)
}

fn cmd_bound(args: BoundArgs) -> Result<(), CliError> {
    if args.d < 1 {
        return Err(CliError::Usage("distance must be at least 1".into()));
    }
    if args.k > args.n + args.e {
        return Err(CliError::Usage("k cannot exceed n + e".into()));
    }
    let b = hamming_bound(args.n, args.k, args.d, args.e);
    println!(
        "bound n={} k={} d={} e={}: t={} lhs={} rhs={} {}",
        args.n,
        args.k,
        args.d,
        args.e,
        b.t,
        b.lhs,
        b.rhs,
        if b.violated { "violated" } else { "satisfied" }
    );
    if args.d == 3 {
        let b1 = hamming_bound_one_error(args.n, args.k, args.e);
        println!(
            "one-error form: lhs={} rhs={} {}",
            b1.lhs,
            b1.rhs,
            if b1.violated { "violated" } else { "satisfied" }
        );
    }
    Ok(())
}

fn cmd_infidelity(args: InfidelityArgs) -> Result<(), CliError> {
    let rule = match args.rule {
        RuleArg::Strict => DecodingRule::Strict,
        RuleArg::Decoder => DecodingRule::Decoder,
    };
    let mut profiles = Vec::new();
    for path in &args.records {
        let record = CodeRecord::from_json_str(&read_to_string(path)?)?;
        profiles.push(CorrectabilityProfile::Decoder(record.decoder_profile(rule)));
    }
    for ab in &args.abstract_profiles {
        profiles.push(CorrectabilityProfile::Abstract(match ab {
            AbstractArg::TenFourThree => AbstractProfile::ten_four_three(),
            AbstractArg::NineThreeThree => AbstractProfile::nine_three_three(),
        }));
    }
    if profiles.is_empty() {
        return Err(CliError::Usage(
            "no profiles given: pass --records and/or --abstract".into(),
        ));
    }
    let table = infidelity_curve(&profiles, args.p_min, args.p_max, args.steps, args.pe_ratio)?;
    write_file(&args.out, &table.to_csv())?;
    println!(
        "wrote {} ({} rows, {} profile(s))",
        args.out.display(),
        table.rows.len(),
        profiles.len()
    );
    Ok(())
}

fn cmd_table1() -> Result<(), CliError> {
    let report = table1_regression()?;
    let mut out = String::new();
    for line in report.lines() {
        writeln!(out, "{line}").expect("string write");
    }
    print!("{out}");
    Ok(())
}
