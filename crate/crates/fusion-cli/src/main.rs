//! `fusion` — validate fusion rings, print Frobenius-Perron data, certify
//! morphisms, and run the dimension-arithmetic analyses.
//!
//! Exit codes: 0 success; 1 axiom violation, failed certificate or analysis
//! precondition; 2 parse/IO error; 3 rank bound exceeded.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use fusion_core::{
    analysis::{self, AnalysisError},
    catalog,
    dims::{fp_dimensions_with_tolerance, DimensionData, Evidence, DEFAULT_TOLERANCE},
    files::{load_morphism, load_ring, CatalogArgs, LoadError},
    morphism::{RingMorphism, SmallIndexReport},
    ring::{FusionRing, RingError},
    subring::{enumerate_subrings, restrict_to_subring, DEFAULT_ENUMERATION_BOUND},
    ObjectVector,
};

const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_IO: i32 = 2;
const EXIT_RANK: i32 = 3;

#[derive(Parser)]
#[command(name = "fusion", version, about = "Fusion-ring calculator and certifier")]
struct Cli {
    /// List catalog rings, morphisms and group names, then exit.
    #[arg(long, global = false)]
    list: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Clone)]
struct RingRef {
    /// Ring reference: a JSON file path or `catalog:<name>`.
    reference: String,
    /// Group for `catalog:ty`, e.g. Z3, Z2xZ2, V4.
    #[arg(long)]
    group: Option<String>,
    /// Group name for `catalog:group`.
    #[arg(long)]
    name: Option<String>,
}

impl RingRef {
    fn load(&self) -> Result<FusionRing, LoadError> {
        let args = CatalogArgs { group: self.group.clone(), name: self.name.clone() };
        load_ring(&self.reference, &args, None)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every fusion-ring axiom on the input.
    Validate {
        #[command(flatten)]
        ring: RingRef,
    },
    /// Frobenius-Perron dimensions with integrality markers.
    Dims {
        #[command(flatten)]
        ring: RingRef,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Morphism checks: dominance, normality, index, induced algebra,
    /// exact-sequence certificate, small-index classification.
    Morphism {
        /// Morphism reference: a JSON file path or `catalog:<name>`.
        reference: String,
        #[arg(long)]
        dominant: bool,
        #[arg(long)]
        normal: bool,
        #[arg(long)]
        index: bool,
        #[arg(long)]
        algebra: bool,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Subring lattice, simplicity verdict, or Tambara-Yamagami report.
    Analyze {
        #[command(flatten)]
        ring: RingRef,
        #[arg(long, value_parser = ["subrings", "simplicity", "ty"])]
        mode: String,
        /// Witness morphism files for the simplicity check.
        #[arg(long)]
        witness: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        max_rank: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// List the built-in catalog.
    List,
}

fn main() {
    let cli = Cli::parse();
    let code = run(cli);
    std::process::exit(code);
}

fn run(cli: Cli) -> i32 {
    if cli.list {
        return cmd_list();
    }
    let Some(command) = cli.command else {
        eprintln!("error: a subcommand is required (try `fusion --help`)");
        return EXIT_IO;
    };
    match command {
        Command::Validate { ring } => cmd_validate(&ring),
        Command::Dims { ring, json, tolerance } => cmd_dims(&ring, json, tolerance),
        Command::Morphism {
            reference,
            dominant,
            normal,
            index,
            algebra,
            exact,
            classify,
            json,
            tolerance,
        } => {
            let mut checks = MorphismChecks { dominant, normal, index, algebra, exact, classify };
            if !checks.any() {
                checks = MorphismChecks::all();
            }
            cmd_morphism(&reference, checks, json, tolerance)
        }
        Command::Analyze { ring, mode, witness, max_rank, json, tolerance } => {
            cmd_analyze(&ring, &mode, &witness, max_rank, json, tolerance)
        }
        Command::List => cmd_list(),
    }
}

fn load_failure(err: &LoadError) -> i32 {
    if err.is_io_or_parse() {
        EXIT_IO
    } else {
        EXIT_FAIL
    }
}

fn cmd_list() -> i32 {
    println!("catalog rings:");
    for name in catalog::BUILTIN_RINGS {
        println!("  catalog:{name}");
    }
    println!("  catalog:ty --group <G>      Tambara-Yamagami ring over an abelian group");
    println!("  catalog:group --name <G>    group ring");
    println!("catalog morphisms:");
    for name in catalog::BUILTIN_MORPHISMS {
        println!("  catalog:{name}");
    }
    println!("group names: Zn (n <= 64), products like Z2xZ2xZ3, alias V4");
    EXIT_OK
}

fn cmd_validate(ring_ref: &RingRef) -> i32 {
    match ring_ref.load() {
        Ok(ring) => {
            println!(
                "valid: {} (rank {})",
                ring.name().unwrap_or(&ring_ref.reference),
                ring.rank()
            );
            EXIT_OK
        }
        Err(err) => {
            eprintln!("error: {err}");
            load_failure(&err)
        }
    }
}

/// Formats to 10 significant digits, integers plain.
fn sig10(x: f64) -> String {
    if x == x.round() && x.abs() < 1e12 {
        return format!("{}", x as i64);
    }
    let digits_before = if x.abs() >= 1.0 { x.abs().log10().floor() as i32 + 1 } else { 1 };
    let precision = (10 - digits_before).max(0) as usize;
    format!("{x:.precision$}")
}

fn integrality_marker(dims: &DimensionData, i: usize) -> String {
    match dims.exact() {
        Some(cert) if cert.radicand[i] == 1 => "integer (exact)".to_string(),
        Some(cert) if cert.coeff[i] == 1 => format!("sqrt({}) (exact)", cert.radicand[i]),
        Some(cert) => format!("{}*sqrt({}) (exact)", cert.coeff[i], cert.radicand[i]),
        None => "numeric".to_string(),
    }
}

fn cmd_dims(ring_ref: &RingRef, json: bool, tolerance: f64) -> i32 {
    let ring = match ring_ref.load() {
        Ok(ring) => ring,
        Err(err) => {
            eprintln!("error: {err}");
            return load_failure(&err);
        }
    };
    let dims = match fp_dimensions_with_tolerance(&ring, tolerance) {
        Ok(dims) => dims,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_FAIL;
        }
    };
    if json {
        let report = json!({
            "ring": ring.name(),
            "rank": ring.rank(),
            "labels": ring.labels(),
            "dims": dims,
        });
        println!("{report}");
    } else {
        println!("ring {} (rank {})", ring.name().unwrap_or("?"), ring.rank());
        for i in 0..ring.rank() {
            println!(
                "  {i:>3}  {:<10} {:<16} {}",
                ring.label(i),
                sig10(dims.dim(i)),
                integrality_marker(&dims, i)
            );
        }
        let evidence = match dims.evidence() {
            Evidence::Exact => "exact",
            Evidence::NumericOnly => "numeric-only",
        };
        println!(
            "global: {}  integral: {}  weakly integral: {} [{evidence}]",
            sig10(dims.global()),
            dims.is_integral(),
            dims.is_weakly_integral()
        );
        println!("tolerance: {tolerance:e}");
    }
    EXIT_OK
}

#[derive(Clone, Copy)]
struct MorphismChecks {
    dominant: bool,
    normal: bool,
    index: bool,
    algebra: bool,
    exact: bool,
    classify: bool,
}

impl MorphismChecks {
    fn any(&self) -> bool {
        self.dominant || self.normal || self.index || self.algebra || self.exact || self.classify
    }

    fn all() -> Self {
        MorphismChecks {
            dominant: true,
            normal: true,
            index: true,
            algebra: true,
            exact: true,
            classify: true,
        }
    }
}

fn describe_vector(vector: &ObjectVector) -> String {
    let ring = vector.ring();
    let terms: Vec<String> = vector
        .support()
        .into_iter()
        .map(|i| {
            let c = vector.coeff(i);
            if c == 1 {
                ring.label(i).to_string()
            } else {
                format!("{c} {}", ring.label(i))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn cmd_morphism(reference: &str, checks: MorphismChecks, json: bool, tolerance: f64) -> i32 {
    let morphism: RingMorphism = match load_morphism(reference, tolerance, None) {
        Ok(m) => m,
        Err(err) => {
            eprintln!("error: {err}");
            return load_failure(&err);
        }
    };
    let mut failed = false;
    let mut lines: Vec<String> = Vec::new();
    let mut report = serde_json::Map::new();
    report.insert("tolerance".into(), json!(tolerance));
    report.insert("morphism".into(), json!(reference));

    if checks.dominant {
        let dominant = morphism.is_dominant();
        failed |= !dominant;
        lines.push(format!("dominant: {dominant}"));
        report.insert("dominant".into(), json!(dominant));
    }
    if checks.normal {
        match morphism.normality() {
            Ok(normality) => {
                if normality.normal {
                    lines.push("normal: true".to_string());
                } else {
                    let bad = normality
                        .evidence
                        .iter()
                        .find(|e| {
                            e.verdict == fusion_core::morphism::MultiplicityVerdict::Violation
                        })
                        .expect("non-normal report carries a violation");
                    lines.push(format!(
                        "normal: false ({}: m={} not in {{0, {}}})",
                        bad.label,
                        bad.multiplicity,
                        sig10(bad.dim)
                    ));
                    failed = true;
                }
                report.insert("normal".into(), json!(normality));
            }
            Err(err) => {
                lines.push(format!("normal: error ({err})"));
                report.insert("normal".into(), json!({ "error": err.to_string() }));
                failed = true;
            }
        }
    }
    if checks.index {
        match morphism.fp_index() {
            Ok(index) => {
                lines.push(format!("index: {}", sig10(index)));
                report.insert("index".into(), json!(index));
            }
            Err(err) => {
                lines.push(format!("index: error ({err})"));
                report.insert("index".into(), json!({ "error": err.to_string() }));
                failed = true;
            }
        }
    }
    if checks.algebra {
        match morphism.induced_algebra() {
            Ok(algebra) => {
                lines.push(format!(
                    "algebra: {} (FPdim {})",
                    describe_vector(&algebra.vector),
                    sig10(algebra.fpdim)
                ));
                report.insert(
                    "algebra".into(),
                    json!({ "coeffs": algebra.vector.coeffs(), "fpdim": algebra.fpdim }),
                );
            }
            Err(err) => {
                lines.push(format!("algebra: error ({err})"));
                report.insert("algebra".into(), json!({ "error": err.to_string() }));
                failed = true;
            }
        }
    }
    if checks.exact {
        let cert = morphism.exact_sequence_certificate();
        if cert.certified {
            lines.push(format!(
                "exact: certified, {} = {} * {} ({})",
                sig10(cert.total_fpdim),
                sig10(cert.kernel_fpdim),
                sig10(cert.quotient_fpdim),
                cert.qualifier
            ));
        } else {
            lines.push(format!("exact: not certified ({})", cert.notes.join("; ")));
            failed = true;
        }
        report.insert("exact".into(), json!(cert));
    }
    if checks.classify {
        match morphism.small_index_classification() {
            Ok(classification) => {
                match &classification {
                    SmallIndexReport::EquivariantizationType { label, index, .. } => {
                        lines.push(format!("classify: index {}; {label}", sig10(*index)));
                    }
                    SmallIndexReport::NoClaim { reason, index } => {
                        lines.push(format!(
                            "classify: index {}; no claim ({reason})",
                            sig10(*index)
                        ));
                    }
                    SmallIndexReport::CounterexampleCandidate { failed: claims, index } => {
                        lines.push(format!(
                            "classify: index {}; counterexample candidate ({})",
                            sig10(*index),
                            claims.join("; ")
                        ));
                        failed = true;
                    }
                }
                report.insert("classify".into(), json!(classification));
            }
            Err(err) => {
                lines.push(format!("classify: error ({err})"));
                report.insert("classify".into(), json!({ "error": err.to_string() }));
                failed = true;
            }
        }
    }

    if json {
        println!("{}", serde_json::Value::Object(report));
    } else {
        for line in lines {
            println!("{line}");
        }
    }
    if failed {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn cmd_analyze(
    ring_ref: &RingRef,
    mode: &str,
    witness_paths: &[PathBuf],
    max_rank: usize,
    json: bool,
    tolerance: f64,
) -> i32 {
    let ring = match ring_ref.load() {
        Ok(ring) => ring,
        Err(err) => {
            eprintln!("error: {err}");
            return load_failure(&err);
        }
    };
    let mut witnesses = Vec::new();
    for path in witness_paths {
        match load_morphism(path.to_str().unwrap_or_default(), tolerance, None) {
            Ok(morphism) => witnesses.push(morphism),
            Err(err) => {
                eprintln!("error loading witness {}: {err}", path.display());
                return load_failure(&err);
            }
        }
    }
    match mode {
        "subrings" => {
            let subrings = match enumerate_subrings(&ring, max_rank) {
                Ok(subrings) => subrings,
                Err(err @ RingError::RankBoundExceeded { .. }) => {
                    eprintln!("error: {err}");
                    return EXIT_RANK;
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    return EXIT_FAIL;
                }
            };
            if json {
                let entries: Vec<serde_json::Value> = subrings
                    .iter()
                    .map(|s| {
                        let restricted = restrict_to_subring(&ring, s);
                        let dims = fp_dimensions_with_tolerance(&restricted, tolerance)
                            .expect("restricted dimensions converge");
                        json!({
                            "indices": s.indices(),
                            "rank": s.rank(),
                            "fpdim": dims.global(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({ "tolerance": tolerance, "count": subrings.len(), "subrings": entries })
                );
            } else {
                println!("{} subrings:", subrings.len());
                for s in &subrings {
                    let labels: Vec<&str> =
                        s.indices().iter().map(|&i| ring.label(i)).collect();
                    println!("  rank {:>2}  {{{}}}", s.rank(), labels.join(", "));
                }
            }
            EXIT_OK
        }
        "simplicity" => {
            match analysis::simplicity_check(&ring, &witnesses, max_rank, tolerance) {
                Ok(verdict) => {
                    if json {
                        println!("{}", serde_json::to_string(&verdict).unwrap());
                    } else {
                        match &verdict.status {
                            fusion_core::SimplicityStatus::SimpleCertified => {
                                println!("SimpleCertified");
                            }
                            fusion_core::SimplicityStatus::NotSimple { witness } => {
                                println!("NotSimple (witness {witness})");
                            }
                            fusion_core::SimplicityStatus::Inconclusive { unobstructed } => {
                                println!("Inconclusive ({} unobstructed candidates)", unobstructed.len());
                            }
                        }
                        for candidate in &verdict.candidates {
                            println!(
                                "  candidate {:?}: quotient dim {}, {} obstruction(s)",
                                candidate.subring,
                                sig10(candidate.quotient_dim),
                                candidate.obstructions.len()
                            );
                            for o in &candidate.obstructions {
                                println!("    {:?}: {}", o.rule, o.explanation);
                            }
                        }
                    }
                    EXIT_OK
                }
                Err(AnalysisError::Ring(err @ RingError::RankBoundExceeded { .. })) => {
                    eprintln!("error: {err}");
                    EXIT_RANK
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    EXIT_FAIL
                }
            }
        }
        "ty" => match analysis::ty_report(&ring, max_rank, tolerance) {
            Ok(report) => {
                if json {
                    println!("{}", serde_json::to_string(&report).unwrap());
                } else {
                    println!(
                        "Tambara-Yamagami shape: |Gamma| = {}, d_X = {}",
                        report.gamma_order,
                        sig10(report.d_x)
                    );
                    println!(
                        "pointed part index: {} ({})",
                        sig10(report.pointed_index.value),
                        report.pointed_index.note
                    );
                    println!("|Gamma| is a perfect square: {}", report.gamma_order_is_square);
                    if report.pointed_part_obstructions.is_empty() {
                        println!("pointed part: no obstruction found");
                    } else {
                        for o in &report.pointed_part_obstructions {
                            println!("pointed part {:?}: {}", o.rule, o.explanation);
                        }
                    }
                    match &report.simplicity.status {
                        fusion_core::SimplicityStatus::SimpleCertified => {
                            println!("simplicity: SimpleCertified");
                        }
                        fusion_core::SimplicityStatus::NotSimple { witness } => {
                            println!("simplicity: NotSimple (witness {witness})");
                        }
                        fusion_core::SimplicityStatus::Inconclusive { unobstructed } => {
                            println!(
                                "simplicity: Inconclusive ({} unobstructed candidates)",
                                unobstructed.len()
                            );
                        }
                    }
                }
                EXIT_OK
            }
            Err(AnalysisError::Ring(err @ RingError::RankBoundExceeded { .. })) => {
                eprintln!("error: {err}");
                EXIT_RANK
            }
            Err(err) => {
                eprintln!("error: {err}");
                EXIT_FAIL
            }
        },
        other => {
            eprintln!("error: unknown mode `{other}`");
            EXIT_IO
        }
    }
}
