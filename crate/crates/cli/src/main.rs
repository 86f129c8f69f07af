//! Command-line front end for the graded near-ring toolkit.
//!
//! Exit codes: 0 success, 1 validation or theorem failure, 2 malformed
//! input, 3 enumeration budget exceeded.

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nearring_cli::document::{
    doc_from_entry, doc_from_graded, DocumentError, StructureDocument,
};
use nearring_cli::render::{
    check_json, render_check_table, render_primality_witness, render_report_table, render_set,
    report_json,
};
use nearring_core::corpus::{builtin_corpus, corpus_entry, CorpusEntry};
use nearring_core::grading::GradedNearRing;
use nearring_core::harness::{run_all, run_check, CheckContext, CheckStatus, HarnessError};
use nearring_core::ideals::{
    certify_ideal, enumerate_ideals, enumerate_normal_subgroups, ideal_generated_by,
    EnumerationError, DEFAULT_ENUMERATION_BUDGET,
};
use nearring_core::mask::SubsetMask;
use nearring_core::primality::{checker_by_id, checkers, is_prime_ideal, PrimalityError};
use nearring_core::quotient::quotient;

#[derive(Parser)]
#[command(
    name = "nearring",
    version,
    about = "Finite monoid-graded near-rings: validation, ideals, graded primality, \
             constructions and theorem checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure document and report its certified constants.
    Validate { target: String },
    /// List the two-sided ideals (canonical order: size, then lexicographic).
    Ideals {
        target: String,
        /// Restrict to graded ideals (needs a graded-near-ring document).
        #[arg(long, conflicts_with = "normal_subgroups")]
        graded: bool,
        /// List additive normal subgroups instead of ideals.
        #[arg(long)]
        normal_subgroups: bool,
    },
    /// Per-ideal primality verdicts with witnesses.
    Primes {
        target: String,
        /// Decide graded primality over proper graded ideals instead of
        /// classical primality over proper ideals.
        #[arg(long)]
        graded: bool,
        /// Graded checker: def, def-graded, homog, t28c2, t28c3, p29, p213.
        #[arg(long, default_value = "def", requires = "graded")]
        checker: String,
    },
    /// Close a set of elements into the ideal it generates.
    Generate {
        target: String,
        /// Comma-separated element indices.
        #[arg(long, value_delimiter = ',', required = true)]
        elements: Vec<usize>,
    },
    /// Quotient a graded near-ring by a graded ideal; emits a document.
    Quotient {
        target: String,
        /// Comma-separated member indices of the modulus ideal.
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<usize>,
    },
    /// Componentwise direct product of two graded near-rings.
    Product { left: String, right: String },
    /// Built-in example structures.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Run theorem checks against a structure, a corpus entry, or `all`.
    Check {
        target: String,
        /// A check id (e.g. 2.3, 2.4-cex, 2.21) or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Names, orders and notes of every built-in entry.
    List,
    /// Emit one entry as a structure document.
    Emit { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
    fn malformed(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
    fn budget(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        if e.is_malformed() {
            CliError::malformed(e.to_string())
        } else {
            CliError::validation(e.to_string())
        }
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        CliError::budget(e.to_string())
    }
}

impl From<PrimalityError> for CliError {
    fn from(e: PrimalityError) -> Self {
        match e {
            PrimalityError::Enumeration(inner) => CliError::budget(inner.to_string()),
            other => CliError::validation(other.to_string()),
        }
    }
}

impl From<HarnessError> for CliError {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Enumeration(inner) => CliError::budget(inner.to_string()),
            HarnessError::Primality(inner) => inner.into(),
            HarnessError::UnknownTheoremId { .. } => CliError::malformed(e.to_string()),
            other => CliError::validation(other.to_string()),
        }
    }
}

fn budget() -> usize {
    std::env::var("NEARRING_ENUM_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_BUDGET)
}

fn threads() -> usize {
    std::env::var("NEARRING_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1)
}

/// A target is a document path or a corpus entry name.
fn load_document(target: &str) -> Result<StructureDocument, CliError> {
    let path = Path::new(target);
    if path.exists() {
        return Ok(StructureDocument::read(path)?);
    }
    if let Some(entry) = corpus_entry(target) {
        return Ok(doc_from_entry(&entry));
    }
    Err(CliError::malformed(format!(
        "{target}: no such file or corpus entry"
    )))
}

fn require_graded(doc: &StructureDocument) -> Result<GradedNearRing, CliError> {
    match doc {
        StructureDocument::Graded(g) => Ok(g.validate()?),
        _ => Err(CliError::malformed(format!(
            "{}: needs a graded-near-ring document",
            doc.name()
        ))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Validate { target } => cmd_validate(&target),
        Command::Ideals {
            target,
            graded,
            normal_subgroups,
        } => cmd_ideals(&target, graded, normal_subgroups),
        Command::Primes {
            target,
            graded,
            checker,
        } => cmd_primes(&target, graded, &checker),
        Command::Generate { target, elements } => cmd_generate(&target, &elements),
        Command::Quotient { target, ideal } => cmd_quotient(&target, &ideal),
        Command::Product { left, right } => cmd_product(&left, &right),
        Command::Corpus { action } => cmd_corpus(action),
        Command::Check {
            target,
            theorem,
            format,
        } => cmd_check(&target, &theorem, format),
    }
}

fn cmd_validate(target: &str) -> Result<u8, CliError> {
    let doc = load_document(target)?;
    match &doc {
        StructureDocument::Monoid(d) => {
            let m = d.validate()?;
            println!("kind: monoid");
            println!("name: {}", d.name);
            println!("order: {}", m.order());
            println!("identity: {}", m.identity());
        }
        StructureDocument::NearRing(d) => {
            let nr = d.validate()?;
            print_near_ring_summary("near-ring", &d.name, &nr);
        }
        StructureDocument::Graded(d) => {
            let gn = d.validate()?;
            print_near_ring_summary("graded-near-ring", &d.name, gn.ring());
            println!("grades: {}", gn.grade_count());
            for g in 0..gn.grade_count() {
                println!(
                    "component {g}: {}",
                    render_set(&gn.component_mask(g).indices(), doc.labels())
                );
            }
        }
    }
    println!("valid");
    Ok(0)
}

fn print_near_ring_summary(kind: &str, name: &str, nr: &nearring_core::FiniteNearRing) {
    println!("kind: {kind}");
    println!("name: {name}");
    println!("order: {}", nr.order());
    println!("zero: {}", nr.zero());
    match nr.one() {
        Some(o) => println!("one: {o}"),
        None => println!("one: none"),
    }
    let diag = nr.ring_diagnostic();
    if diag.is_ring() {
        println!("ring: yes");
    } else {
        let mut reasons = Vec::new();
        if let Some((a, b)) = diag.nonabelian_witness {
            reasons.push(format!("addition not abelian at ({a}, {b})"));
        }
        if let Some((a, b, c)) = diag.left_distributivity_witness {
            reasons.push(format!("left distributivity fails at ({a}, {b}, {c})"));
        }
        println!("ring: no ({})", reasons.join("; "));
    }
}

fn cmd_ideals(target: &str, graded: bool, normal_subgroups: bool) -> Result<u8, CliError> {
    let doc = load_document(target)?;
    let labels = doc.labels().cloned();
    if graded {
        let gn = require_graded(&doc)?;
        for ideal in enumerate_ideals(gn.ring(), budget())? {
            if gn.is_graded_ideal(&ideal) {
                println!("{}", render_set(&ideal.members().indices(), labels.as_ref()));
            }
        }
        return Ok(0);
    }
    let nr = match &doc {
        StructureDocument::NearRing(d) => d.validate()?,
        StructureDocument::Graded(d) => d.validate()?.ring().clone(),
        StructureDocument::Monoid(_) => {
            return Err(CliError::malformed(format!(
                "{}: needs a near-ring or graded-near-ring document",
                doc.name()
            )))
        }
    };
    if normal_subgroups {
        for s in enumerate_normal_subgroups(&nr, budget())? {
            println!("{}", render_set(&s.indices(), labels.as_ref()));
        }
    } else {
        for ideal in enumerate_ideals(&nr, budget())? {
            println!("{}", render_set(&ideal.members().indices(), labels.as_ref()));
        }
    }
    Ok(0)
}

fn cmd_primes(target: &str, graded: bool, checker_id: &str) -> Result<u8, CliError> {
    let doc = load_document(target)?;
    let labels = doc.labels().cloned();
    if graded {
        let gn = require_graded(&doc)?;
        let checker = checker_by_id(checker_id).ok_or_else(|| {
            CliError::malformed(format!(
                "unknown checker {checker_id:?}; available:\n{}",
                checkers()
                    .iter()
                    .map(|c| format!("  {:<10} {}", c.id(), c.describe()))
                    .collect::<Vec<_>>()
                    .join("\n")
            ))
        })?;
        let ideals = enumerate_ideals(gn.ring(), budget())?;
        for p in &ideals {
            if !p.is_proper() || !gn.is_graded_ideal(p) {
                continue;
            }
            let report = checker.check(&gn, p, &ideals, budget())?;
            let rendered = render_set(&p.members().indices(), labels.as_ref());
            match &report.witness {
                None => println!("{rendered}: graded prime ({})", report.checker),
                Some(w) => println!(
                    "{rendered}: not graded prime ({})  witness: {}",
                    report.checker,
                    render_primality_witness(w, labels.as_ref())
                ),
            }
        }
        return Ok(0);
    }
    let nr = match &doc {
        StructureDocument::NearRing(d) => d.validate()?,
        StructureDocument::Graded(d) => d.validate()?.ring().clone(),
        StructureDocument::Monoid(_) => {
            return Err(CliError::malformed(format!(
                "{}: needs a near-ring or graded-near-ring document",
                doc.name()
            )))
        }
    };
    let ideals = enumerate_ideals(&nr, budget())?;
    for p in &ideals {
        if !p.is_proper() {
            continue;
        }
        let report = is_prime_ideal(&nr, p, &ideals)?;
        let rendered = render_set(&p.members().indices(), labels.as_ref());
        match &report.witness {
            None => println!("{rendered}: prime"),
            Some(w) => println!(
                "{rendered}: not prime  witness: {}",
                render_primality_witness(w, labels.as_ref())
            ),
        }
    }
    Ok(0)
}

fn cmd_generate(target: &str, elements: &[usize]) -> Result<u8, CliError> {
    let doc = load_document(target)?;
    let labels = doc.labels().cloned();
    let nr = match &doc {
        StructureDocument::NearRing(d) => d.validate()?,
        StructureDocument::Graded(d) => d.validate()?.ring().clone(),
        StructureDocument::Monoid(_) => {
            return Err(CliError::malformed(format!(
                "{}: needs a near-ring or graded-near-ring document",
                doc.name()
            )))
        }
    };
    let seed = SubsetMask::from_indices(nr.order(), elements.iter().copied())
        .map_err(|e| CliError::malformed(e.to_string()))?;
    let ideal = ideal_generated_by(&nr, seed);
    println!("{}", render_set(&ideal.members().indices(), labels.as_ref()));
    Ok(0)
}

fn cmd_quotient(target: &str, members: &[usize]) -> Result<u8, CliError> {
    let doc = load_document(target)?;
    let gn = require_graded(&doc)?;
    let mask = SubsetMask::from_indices(gn.ring().order(), members.iter().copied())
        .map_err(|e| CliError::malformed(e.to_string()))?;
    let ideal = certify_ideal(gn.ring(), mask)
        .map_err(|e| CliError::validation(format!("--ideal is not an ideal: {e}")))?;
    let qs = quotient(&gn, &ideal, budget()).map_err(|e| match e {
        nearring_core::quotient::QuotientError::Enumeration(inner) => {
            CliError::budget(inner.to_string())
        }
        other => CliError::validation(other.to_string()),
    })?;
    let name = format!(
        "{}-mod-{}",
        doc.name(),
        members
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join("-")
    );
    let out = StructureDocument::Graded(doc_from_graded(&name, &qs.quotient, None));
    print!("{}", out.emit());
    Ok(0)
}

fn cmd_product(left: &str, right: &str) -> Result<u8, CliError> {
    let left_doc = load_document(left)?;
    let right_doc = load_document(right)?;
    let l = require_graded(&left_doc)?;
    let r = require_graded(&right_doc)?;
    let product = nearring_core::product::direct_product(&l, &r)
        .map_err(|e| CliError::validation(e.to_string()))?;
    let name = format!("{}x{}", left_doc.name(), right_doc.name());
    let out = StructureDocument::Graded(doc_from_graded(&name, &product, None));
    print!("{}", out.emit());
    Ok(0)
}

fn cmd_corpus(action: CorpusAction) -> Result<u8, CliError> {
    match action {
        CorpusAction::List => {
            for entry in builtin_corpus() {
                println!(
                    "{:<10} order={:<3} grades={}  {}",
                    entry.name,
                    entry.structure.ring().order(),
                    entry.structure.grade_count(),
                    entry.notes
                );
            }
        }
        CorpusAction::Emit { name } => {
            let entry = corpus_entry(&name).ok_or_else(|| {
                CliError::malformed(format!("{name}: no such corpus entry"))
            })?;
            print!("{}", doc_from_entry(&entry).emit());
        }
    }
    Ok(0)
}

fn check_targets(target: &str) -> Result<Vec<CorpusEntry>, CliError> {
    if target == "all" || target == "corpus" {
        return Ok(builtin_corpus());
    }
    // corpus entries keep their product metadata; files have none
    if !Path::new(target).exists() {
        if let Some(entry) = corpus_entry(target) {
            return Ok(vec![entry]);
        }
    }
    let doc = load_document(target)?;
    let gn = require_graded(&doc)?;
    Ok(vec![CorpusEntry {
        name: doc.name().to_string(),
        structure: gn,
        notes: "user structure".into(),
        labels: doc.labels().cloned().unwrap_or_default(),
        product_of: None,
    }])
}

fn cmd_check(target: &str, theorem: &str, format: ReportFormat) -> Result<u8, CliError> {
    let entries = check_targets(target)?;
    if theorem == "all" {
        let report = run_all(entries, budget(), threads())?;
        match format {
            ReportFormat::Table => print!("{}", render_report_table(&report)),
            ReportFormat::Json => print!("{}", report_json(&report)),
        }
        return Ok(if report.has_violation() { 1 } else { 0 });
    }
    let ctx = CheckContext::new(entries, budget())?;
    let check = run_check(theorem, &ctx)?;
    match format {
        ReportFormat::Table => print!("{}", render_check_table(&check)),
        ReportFormat::Json => print!("{}", check_json(&check)),
    }
    Ok(if check.status == CheckStatus::Violation {
        1
    } else {
        0
    })
}
