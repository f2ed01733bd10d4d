//! `ferrers` — rook complexes on Ferrers boards from the command line.

mod cache;
mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;

use ferrers_core::board::Board;
use ferrers_core::complex::{self, ComplexView};
use ferrers_core::decompose;
use ferrers_core::error::Error as CoreError;
use ferrers_core::homology::{self, HomologyOptions, SnfResult};
use ferrers_core::morse;
use ferrers_core::partitions;

use report::{placement_pairs, placement_token, Format, Report, StringMap, Table};

#[derive(Parser)]
#[command(name = "ferrers", version, about = "Simplicial complexes of non-attacking rook placements on Ferrers boards", max_term_width = 100)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Omit the timing field so identical runs are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Worker threads for homology (default: available cores). Results do
    /// not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory for the Smith-normal-form cache.
    #[arg(long, global = true, env = "FERRERS_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Face counts by dimension, by closed formula and/or enumeration.
    Fvector {
        /// Board spec: `stirling:<n>` or `psi:<a_n>,...,<a_1>`.
        board: String,
        /// Evaluate the closed formula (the default).
        #[arg(long)]
        formula: bool,
        /// Enumerate faces exhaustively.
        #[arg(long)]
        enumerate: bool,
        /// Run both and compare.
        #[arg(long)]
        both: bool,
    },
    /// Maximal placements by size, with the staircase counting formulas.
    Facets {
        board: String,
        /// Counts per size (the default).
        #[arg(long)]
        by_size: bool,
        /// List the placements themselves.
        #[arg(long)]
        list: bool,
    },
    /// Reduced integer homology: Betti numbers and torsion.
    Betti {
        board: String,
        /// Face-count ceiling (default 2000000).
        #[arg(long)]
        max_faces: Option<u64>,
        /// Allow staircase boards of size 9 and beyond.
        #[arg(long)]
        stretch: bool,
    },
    /// The discrete Morse matching of a staircase complex.
    Morse {
        board: String,
        /// Verify acyclicity (always done; kept as an explicit request).
        #[arg(long)]
        verify_acyclic: bool,
        /// Include the critical cells themselves.
        #[arg(long)]
        critical: bool,
    },
    /// Count set partitions, plain or intertwined.
    Partitions {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// Count partitions whose block pairs are all intertwined.
        #[arg(long)]
        intertwined: bool,
        /// List the partitions (needs n <= 10).
        #[arg(long)]
        list: bool,
    },
    /// Coefficients of the facet-count generating function.
    Gf {
        #[arg(long)]
        k: u64,
        /// Highest power to report.
        #[arg(long)]
        terms: usize,
    },
    /// Vertex decomposability: shedding certificate and/or brute force.
    Vd {
        board: String,
        /// Build and verify a shedding certificate.
        #[arg(long)]
        certificate: bool,
        /// Run the definition-level search.
        #[arg(long)]
        bruteforce: bool,
        /// Vertex ceiling for the brute-force search (default 16).
        #[arg(long)]
        max_vertices: Option<usize>,
    },
}

enum CliError {
    Input(String),
    Resource(String),
    Verification(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Verification(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Resource(m) | CliError::Verification(m) => m,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> CliError {
        match e {
            CoreError::BoardTooLarge { .. } | CoreError::ResourceLimit(_) => CliError::Resource(e.to_string()),
            CoreError::CertificateNotFound(_) => CliError::Verification(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

fn emit<T: Serialize>(cli: &Cli, report: Report<T>, table: Table, elapsed: u128) -> String {
    match cli.format {
        Format::Json => {
            let mut report = report;
            if !cli.no_timing {
                report.timing_ms = Some(elapsed);
            }
            report.to_json()
        }
        Format::Csv => table.render(),
    }
}

fn parse_board(spec: &str) -> Result<Board, CliError> {
    Ok(Board::parse_spec(spec)?)
}

fn big(v: &BigUint) -> String {
    v.to_string()
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Fvector { board, formula, enumerate, both } => cmd_fvector(cli, board, *formula, *enumerate, *both),
        Command::Facets { board, by_size, list } => cmd_facets(cli, board, *by_size, *list),
        Command::Betti { board, max_faces, stretch } => cmd_betti(cli, board, *max_faces, *stretch),
        Command::Morse { board, verify_acyclic, critical } => cmd_morse(cli, board, *verify_acyclic, *critical),
        Command::Partitions { n, k, intertwined, list } => cmd_partitions(cli, *n, *k, *intertwined, *list),
        Command::Gf { k, terms } => cmd_gf(cli, *k, *terms),
        Command::Vd { board, certificate, bruteforce, max_vertices } => {
            cmd_vd(cli, board, *certificate, *bruteforce, *max_vertices)
        }
    }
}

#[derive(Serialize)]
struct FvectorPayload {
    dim: i64,
    /// Face counts from dimension 0 up; the empty face always counts 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    enumerated: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equal: Option<bool>,
    euler: String,
}

fn fvector_strings(fv: &complex::FVector) -> Vec<String> {
    fv.counts().iter().skip(1).map(big).collect()
}

fn cmd_fvector(cli: &Cli, spec: &str, formula: bool, enumerate: bool, both: bool) -> Result<String, CliError> {
    let board = parse_board(spec)?;
    let start = Instant::now();
    let (want_formula, want_enumerated) = if both {
        (true, true)
    } else if enumerate {
        (false, true)
    } else {
        // --formula is the default mode
        let _ = formula;
        (true, false)
    };
    let by_formula = want_formula.then(|| complex::f_vector_formula(&board));
    let by_enumeration = if want_enumerated { Some(complex::f_vector_enumerated(&board)?) } else { None };
    let equal = match (&by_formula, &by_enumeration) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let reference = by_formula.clone().unwrap_or_else(|| by_enumeration.clone().unwrap());
    let payload = FvectorPayload {
        dim: reference.dim(),
        formula: by_formula.as_ref().map(fvector_strings),
        enumerated: by_enumeration.as_ref().map(fvector_strings),
        equal,
        euler: reference.reduced_euler().to_string(),
    };
    let mut rows = Vec::new();
    for d in 0..=reference.dim() {
        rows.push(vec![
            d.to_string(),
            by_formula.as_ref().map(|f| f.f(d).to_string()).unwrap_or_default(),
            by_enumeration.as_ref().map(|f| f.f(d).to_string()).unwrap_or_default(),
        ]);
    }
    let table = Table { header: &["dim", "formula", "enumerated"], rows };
    if equal == Some(false) {
        // Surface the mismatch in the exit code after printing the report.
        let out = emit(cli, Report::new("fvector", payload).with_board(spec, board.canonical_key()), table, start.elapsed().as_millis());
        print!("{out}");
        return Err(CliError::Verification("formula and enumeration disagree".into()));
    }
    Ok(emit(cli, Report::new("fvector", payload).with_board(spec, board.canonical_key()), table, start.elapsed().as_millis()))
}

#[derive(Serialize)]
struct FacetsPayload {
    total: String,
    by_size: StringMap,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula_by_size: Option<StringMap>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    list: Option<BTreeMap<u64, Vec<Vec<[u32; 2]>>>>,
}

fn cmd_facets(cli: &Cli, spec: &str, _by_size: bool, list: bool) -> Result<String, CliError> {
    let board = parse_board(spec)?;
    let start = Instant::now();
    let facets = complex::facets(&board)?;
    let mut by_size: StringMap = BTreeMap::new();
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for f in &facets {
        *counts.entry(f.len() as u64).or_insert(0) += 1;
    }
    for (&size, &count) in &counts {
        by_size.insert(size, count.to_string());
    }
    let formula_by_size = board.staircase_n().map(|n| {
        let mut map: StringMap = BTreeMap::new();
        for size in 0..=n as u64 {
            let count = partitions::facet_count(n as u64, n as u64 - size);
            if count > BigUint::from(0u32) {
                map.insert(size, big(&count));
            }
        }
        map
    });
    let formula_match = formula_by_size.as_ref().map(|m| *m == by_size);
    let listing = list.then(|| {
        let mut map: BTreeMap<u64, Vec<Vec<[u32; 2]>>> = BTreeMap::new();
        let mut sorted = facets.clone();
        sorted.sort();
        for f in &sorted {
            map.entry(f.len() as u64).or_default().push(placement_pairs(f.squares()));
        }
        map
    });
    let payload = FacetsPayload {
        total: facets.len().to_string(),
        by_size: by_size.clone(),
        formula_by_size,
        formula_match,
        list: listing,
    };
    let table = if list {
        let mut rows = Vec::new();
        let mut sorted = facets.clone();
        sorted.sort_by_key(|f| (f.len(), f.squares().to_vec()));
        for f in &sorted {
            rows.push(vec![f.len().to_string(), placement_token(f.squares())]);
        }
        Table { header: &["size", "placement"], rows }
    } else {
        let rows = counts
            .iter()
            .map(|(&size, &count)| {
                let formula = payload
                    .formula_by_size
                    .as_ref()
                    .and_then(|m| m.get(&size).cloned())
                    .unwrap_or_default();
                vec![size.to_string(), count.to_string(), formula]
            })
            .collect();
        Table { header: &["size", "count", "formula"], rows }
    };
    if formula_match == Some(false) {
        let out = emit(cli, Report::new("facets", payload).with_board(spec, board.canonical_key()), table, start.elapsed().as_millis());
        print!("{out}");
        return Err(CliError::Verification("facet enumeration disagrees with the counting formula".into()));
    }
    Ok(emit(cli, Report::new("facets", payload).with_board(spec, board.canonical_key()), table, start.elapsed().as_millis()))
}

#[derive(Serialize)]
struct BettiPayload {
    dim: i64,
    faces: String,
    betti: Vec<String>,
    torsion: Vec<Vec<String>>,
    torsion_free: bool,
    euler: String,
    euler_matches_f_vector: bool,
}

fn cmd_betti(cli: &Cli, spec: &str, max_faces: Option<u64>, stretch: bool) -> Result<String, CliError> {
    let board = parse_board(spec)?;
    if let Some(n) = board.staircase_n() {
        if n >= 9 && !stretch {
            return Err(CliError::Resource(format!(
                "staircase of size {n} is a stretch computation; pass --stretch to run it"
            )));
        }
    }
    let options = HomologyOptions { max_faces: max_faces.unwrap_or_else(|| HomologyOptions::default().max_faces) };
    let start = Instant::now();
    let result = betti_parallel(cli, &board, &options)?;
    let euler = result.reduced_euler();
    let formula_euler = complex::reduced_euler(&board);
    let payload = BettiPayload {
        dim: result.betti.len() as i64 - 1,
        faces: complex::f_vector_formula(&board).total_faces().to_string(),
        betti: result.betti.iter().map(|b| b.to_string()).collect(),
        torsion: result.torsion.iter().map(|t| t.iter().map(big).collect()).collect(),
        torsion_free: result.torsion_free(),
        euler: euler.to_string(),
        euler_matches_f_vector: euler == formula_euler,
    };
    let rows = result
        .betti
        .iter()
        .enumerate()
        .map(|(d, b)| {
            let torsion = payload.torsion[d].join(";");
            vec![d.to_string(), b.to_string(), torsion]
        })
        .collect();
    let table = Table { header: &["dim", "betti", "torsion"], rows };
    Ok(emit(cli, Report::new("betti", payload).with_board(spec, board.canonical_key()), table, start.elapsed().as_millis()))
}

/// Boundary SNFs are independent across dimensions: compute them on a small
/// thread pool (respecting `--threads`), consulting the cache first.
fn betti_parallel(cli: &Cli, board: &Board, options: &HomologyOptions) -> Result<homology::BettiResult, CliError> {
    let predicted = complex::f_vector_formula(board).total_faces();
    if predicted > BigUint::from(options.max_faces) {
        return Err(CliError::Resource(format!(
            "complex has {predicted} faces, above the ceiling of {}",
            options.max_faces
        )));
    }
    let faces = ComplexView::full(board)?.enumerate(Some(options.max_faces))?;
    let counts = faces.counts();
    let dims: Vec<i64> = (0..=faces.dim() + 1).collect();
    let board_key = board.canonical_key();

    let slots: Mutex<Vec<Option<SnfResult>>> = Mutex::new(vec![None; dims.len()]);
    let next: AtomicUsize = AtomicUsize::new(0);
    let failure: Mutex<Option<CoreError>> = Mutex::new(None);
    let workers = cli
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
        .clamp(1, dims.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let slot = next.fetch_add(1, Ordering::Relaxed);
                if slot >= dims.len() {
                    break;
                }
                let k = dims[slot];
                if let Some(dir) = cli.cache_dir.as_deref() {
                    if let Some(hit) = cache::load(dir, &board_key, k) {
                        slots.lock().unwrap()[slot] = Some(hit);
                        continue;
                    }
                }
                let bm = homology::boundary_matrix_from_faces(&faces, k);
                let entries: Vec<(u32, u32, i64)> =
                    bm.entries.iter().map(|&(i, j, s)| (i, j, s as i64)).collect();
                match homology::smith_normal_form(bm.nrows, bm.ncols, &entries) {
                    Ok(snf) => {
                        if let Some(dir) = cli.cache_dir.as_deref() {
                            cache::store(dir, &board_key, k, &snf);
                        }
                        slots.lock().unwrap()[slot] = Some(snf);
                    }
                    Err(e) => {
                        *failure.lock().unwrap() = Some(e);
                        break;
                    }
                }
            });
        }
    });
    if let Some(err) = failure.into_inner().unwrap() {
        return Err(err.into());
    }
    let snfs: Vec<SnfResult> = slots.into_inner().unwrap().into_iter().map(Option::unwrap).collect();
    Ok(homology::betti_from_parts(&counts, &snfs))
}

#[derive(Serialize)]
struct MorsePayload {
    n: u32,
    critical_by_dim: Vec<u64>,
    acyclic: bool,
    contractible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_critical_dim: Option<i64>,
    min_dim_all_facets: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    sphere_count: Option<u64>,
    durfee: u32,
    gamma_size: u64,
    matched_pairs: u64,
    critical_adjacent_pairs: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    critical_cells: Option<Vec<MorseCell>>,
}

#[derive(Serialize)]
struct MorseCell {
    dim: i64,
    squares: Vec<[u32; 2]>,
}

fn cmd_morse(cli: &Cli, spec: &str, _verify: bool, critical: bool) -> Result<String, CliError> {
    let board = parse_board(spec)?;
    let Some(n) = board.staircase_n() else {
        return Err(CliError::Input(
            "the Morse construction requires a staircase board (stirling:<n>)".into(),
        ));
    };
    if n == 0 {
        return Err(CliError::Input("the Morse construction needs a staircase of size >= 1".into()));
    }
    let start = Instant::now();
    let (matching, summary) = morse::critical_summary(n)?;
    let cells = critical.then(|| {
        let mut cells: Vec<_> = matching.critical_cells();
        cells.sort();
        cells.sort_by_key(|c| c.dim());
        cells
            .iter()
            .map(|c| MorseCell { dim: c.dim(), squares: placement_pairs(c.squares()) })
            .collect()
    });
    let payload = MorsePayload {
        n,
        critical_by_dim: summary.counts_by_dim.clone(),
        acyclic: summary.acyclic,
        contractible: summary.contractible,
        min_critical_dim: summary.min_critical_dim,
        min_dim_all_facets: summary.min_dim_all_facets,
        sphere_count: summary.sphere_count,
        durfee: summary.durfee,
        gamma_size: summary.gamma_size,
        matched_pairs: summary.matched_pairs,
        critical_adjacent_pairs: summary.critical_adjacent_pairs,
        critical_cells: cells,
    };
    let rows = summary
        .counts_by_dim
        .iter()
        .enumerate()
        .map(|(d, c)| vec![d.to_string(), c.to_string()])
        .collect();
    let table = Table { header: &["dim", "critical"], rows };
    if !summary.acyclic {
        let out = emit(cli, Report::new("morse", payload).with_board(spec, board.canonical_key()), table, start.elapsed().as_millis());
        print!("{out}");
        return Err(CliError::Verification("matching failed the acyclicity check".into()));
    }
    Ok(emit(cli, Report::new("morse", payload).with_board(spec, board.canonical_key()), table, start.elapsed().as_millis()))
}

#[derive(Serialize)]
struct PartitionsPayload {
    n: u64,
    k: u64,
    intertwined: bool,
    formula: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    bruteforce: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    list: Option<Vec<String>>,
}

const PARTITION_BRUTE_LIMIT: u64 = 12;
const PARTITION_LIST_LIMIT: u64 = 10;

fn cmd_partitions(cli: &Cli, n: u64, k: u64, intertwined: bool, list: bool) -> Result<String, CliError> {
    if list && n > PARTITION_LIST_LIMIT {
        return Err(CliError::Resource(format!("--list supports n <= {PARTITION_LIST_LIMIT}")));
    }
    let start = Instant::now();
    let formula = if intertwined { partitions::count_intertwined(n, k) } else { partitions::stirling2(n as usize, k as usize) };
    let mut brute: Option<BigUint> = None;
    let mut listing: Option<Vec<String>> = None;
    if n <= PARTITION_BRUTE_LIMIT {
        let mut count = 0u64;
        let mut items = Vec::new();
        for p in partitions::SetPartitions::new(n as u32) {
            if p.block_count() as u64 != k {
                continue;
            }
            if intertwined && !p.is_intertwined() {
                continue;
            }
            count += 1;
            if list {
                items.push(p.to_string());
            }
        }
        brute = Some(BigUint::from(count));
        if list {
            items.sort();
            listing = Some(items);
        }
    }
    let agree = brute.as_ref().map(|b| *b == formula);
    let payload = PartitionsPayload {
        n,
        k,
        intertwined,
        formula: big(&formula),
        bruteforce: brute.as_ref().map(big),
        agree,
        list: listing,
    };
    let mut rows = vec![vec!["formula".to_string(), payload.formula.clone()]];
    if let Some(b) = &payload.bruteforce {
        rows.push(vec!["bruteforce".to_string(), b.clone()]);
    }
    let table = Table { header: &["source", "count"], rows };
    if agree == Some(false) {
        let out = emit(cli, Report::new("partitions", payload), table, start.elapsed().as_millis());
        print!("{out}");
        return Err(CliError::Verification("formula and brute force disagree".into()));
    }
    Ok(emit(cli, Report::new("partitions", payload), table, start.elapsed().as_millis()))
}

#[derive(Serialize)]
struct GfPayload {
    k: u64,
    terms: usize,
    /// Coefficient of x^i at index i; entry n counts maximal placements of
    /// n - k rooks onial the staircase of size n.
    coefficients: Vec<String>,
}

fn cmd_gf(cli: &Cli, k: u64, terms: usize) -> Result<String, CliError> {
    if terms > 4096 {
        return Err(CliError::Resource("--terms supports at most 4096".into()));
    }
    let start = Instant::now();
    let coefficients = partitions::gf_coefficients(k, terms);
    let payload = GfPayload { k, terms, coefficients: coefficients.iter().map(big).collect() };
    let rows = coefficients
        .iter()
        .enumerate()
        .map(|(p, c)| vec![p.to_string(), c.to_string()])
        .collect();
    let table = Table { header: &["power", "coefficient"], rows };
    Ok(emit(cli, Report::new("gf", payload), table, start.elapsed().as_millis()))
}

#[derive(Serialize)]
struct VdPayload {
    hypotheses_met: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    vd: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate_verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate_nodes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bruteforce: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<String>,
}

fn cmd_vd(cli: &Cli, spec: &str, certificate: bool, bruteforce: bool, max_vertices: Option<usize>) -> Result<String, CliError> {
    let board = parse_board(spec)?;
    let hypotheses_met = board.meets_vd_hypotheses();
    let (want_cert, want_brute) = if certificate || bruteforce {
        (certificate, bruteforce)
    } else if hypotheses_met {
        (true, false)
    } else {
        (false, true)
    };
    let start = Instant::now();

    let mut cert_text = None;
    let mut cert_verified = None;
    let mut cert_nodes = None;
    let mut cert_vd = None;
    if want_cert {
        let cert = decompose::vd_certificate(&board)?;
        let check = decompose::verify_certificate(&cert);
        cert_verified = Some(check.ok);
        cert_nodes = Some(cert.node_count());
        cert_vd = Some(check.ok);
        cert_text = Some(decompose::serialize_certificate(&cert));
        if !check.ok {
            return Err(CliError::Verification(format!(
                "certificate failed verification at {}",
                check.failure.unwrap_or_default()
            )));
        }
    }

    let mut brute_vd = None;
    if want_brute {
        let options = decompose::VdOptions { max_vertices: max_vertices.unwrap_or(16) };
        let view = ComplexView::full(&board)?;
        brute_vd = Some(decompose::vd_bruteforce(&view, &options)?);
    }

    let agree = match (cert_vd, brute_vd) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let payload = VdPayload {
        hypotheses_met,
        vd: cert_vd.or(brute_vd),
        certificate_verified: cert_verified,
        certificate_nodes: cert_nodes,
        bruteforce: brute_vd,
        agree,
        certificate: cert_text,
    };
    let mut rows = Vec::new();
    if let Some(v) = cert_vd {
        rows.push(vec!["certificate".to_string(), v.to_string()]);
    }
    if let Some(v) = brute_vd {
        rows.push(vec!["bruteforce".to_string(), v.to_string()]);
    }
    let table = Table { header: &["mode", "verdict"], rows };
    if agree == Some(false) {
        let out = emit(cli, Report::new("vd", payload).with_board(spec, board.canonical_key()), table, start.elapsed().as_millis());
        print!("{out}");
        return Err(CliError::Verification("certificate and brute force disagree".into()));
    }
    Ok(emit(cli, Report::new("vd", payload).with_board(spec, board.canonical_key()), table, start.elapsed().as_millis()))
}
