//! `schubert`: classify groups, resolve and certify single elements, regenerate the
//! S5/S6 tables and inspect Hecke products.
//!
//! Exit codes: 0 success or match, 1 verified mismatch / not small / none found,
//! 2 usage error or unsupported input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use schubert::hecke::{smallness, HeckeAlgebra, HeckeElement, IntPoly, ProfileReport, SmallnessCertificate};
use schubert::resolution::{
    classify, expected_counts, tables, validate, ClassificationReport, ClassifyConfig, ResolutionData, RowOutcome,
    SearchConfig, Searcher,
};
use schubert::{CartanType, CoxeterGroup, Error, ParabolicSet};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Small resolutions of Schubert varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Extra detail in text output (timings, every certified cell).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct GroupArgs {
    /// Cartan type letter: A, B, C, D or G.
    #[arg(long = "type", default_value = "A")]
    kind: String,
    /// Rank; for type A it defaults to the length of --perm minus one.
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args)]
struct SearchArgs {
    /// Node budget of the exhaustive stage, per element.
    #[arg(long, default_value_t = SearchConfig::default().budget)]
    budget: usize,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            ..SearchConfig::default()
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    A4,
    A5,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Search every element of a group and compare counts with the known ones.
    Classify {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Ignore and do not write the on-disk cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Find and certify a small resolution of one Schubert variety.
    Resolve {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Certify given resolution data such as "1,3|2,3|1,3".
    Certify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        perm: String,
        #[arg(long)]
        data: String,
    },
    /// Regenerate the small-resolution tables for S5 (a4) and S6 (a5).
    Tables {
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Print a Hecke algebra element or the fiber profile of parabolic data.
    Hecke {
        #[command(flatten)]
        group: GroupArgs,
        /// Product of generators T_s, e.g. "1 1".
        #[arg(long, conflicts_with_all = ["parabolic", "data"])]
        word: Option<String>,
        /// Parabolic class x_J, e.g. "1,2".
        #[arg(long, conflicts_with = "data")]
        parabolic: Option<String>,
        /// Fiber profile of parabolic data, e.g. "2|1|2".
        #[arg(long)]
        data: Option<String>,
        /// Schubert class of this element, or the expected target of --data.
        #[arg(long)]
        perm: Option<String>,
    },
}

enum Failure {
    /// Exit 1.
    Mismatch(String),
    /// Exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Output {
    format: Format,
    out: Option<PathBuf>,
    verbose: u8,
}

impl Output {
    fn emit<T: Serialize>(&self, text: &str, value: &T) -> Result<(), Failure> {
        let body = match self.format {
            Format::Text => text.to_string(),
            Format::Json => serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))? + "\n",
        };
        match &self.out {
            Some(path) => fs::write(path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(body.as_bytes())
                    .map_err(|e| Failure::Usage(e.to_string()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = Output {
        format: cli.format,
        out: cli.out,
        verbose: cli.verbose,
    };
    let result = match cli.command {
        Command::Classify { group, search, no_cache } => cmd_classify(&output, &group, &search, no_cache),
        Command::Resolve { group, perm, search } => cmd_resolve(&output, &group, &perm, &search),
        Command::Certify { group, perm, data } => cmd_certify(&output, &group, &perm, &data),
        Command::Tables { which, search } => cmd_tables(&output, which, &search),
        Command::Hecke {
            group,
            word,
            parabolic,
            data,
            perm,
        } => cmd_hecke(&output, &group, word, parabolic, data, perm),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Number of entries of a one-line permutation, as accepted by the parser.
fn perm_size(perm: &str) -> usize {
    let cleaned = perm.replace(['(', ')'], " ");
    let tokens: Vec<&str> = cleaned.split_whitespace().collect();
    match tokens.as_slice() {
        [one] if one.len() > 1 && one.chars().all(|c| c.is_ascii_digit()) => one.len(),
        _ => tokens.len(),
    }
}

fn build_group(args: &GroupArgs, perm: Option<&str>) -> Result<CoxeterGroup, Failure> {
    let rank = match (args.rank, perm) {
        (Some(r), _) => r,
        (None, Some(p)) if args.kind.eq_ignore_ascii_case("a") => perm_size(p).saturating_sub(1),
        _ => return Err(Failure::Usage("--rank is required".into())),
    };
    let t: CartanType = format!("{}{}", args.kind.to_ascii_uppercase(), rank).parse()?;
    Ok(CoxeterGroup::new(t)?)
}

fn cache_dir() -> Option<PathBuf> {
    match std::env::var_os("SCHUBERT_CACHE_DIR") {
        Some(dir) => Some(PathBuf::from(dir)),
        None => dirs::cache_dir().map(|d| d.join("schubert")),
    }
}

fn cmd_classify(out: &Output, group: &GroupArgs, search: &SearchArgs, no_cache: bool) -> Outcome {
    let g = build_group(group, None)?;
    let cfg = ClassifyConfig {
        search: search.config(),
        workers: search.workers,
        timings: false,
    };
    let key = format!(
        "classify-{}-budget{}-v{}.json",
        g.cartan_type(),
        search.budget,
        env!("CARGO_PKG_VERSION")
    );
    let cached = cache_dir().map(|d| d.join(key)).filter(|_| !no_cache);
    let report: ClassificationReport = match cached
        .as_ref()
        .and_then(|p| fs::read(p).ok())
        .and_then(|bytes| serde_json::from_slice(&bytes).ok())
    {
        Some(r) => r,
        None => {
            let r = classify(&g, cfg)?;
            if let Some(path) = &cached {
                let stored = path
                    .parent()
                    .map_or(Ok(()), fs::create_dir_all)
                    .and_then(|_| fs::write(path, serde_json::to_vec(&r).unwrap_or_default()));
                if let Err(e) = stored {
                    eprintln!("warning: cache not written to {}: {e}", path.display());
                }
            }
            r
        }
    };
    let c = report.counts;
    let mut text = format!(
        "{}: total {}, small {}, smooth {}, none found {}\n",
        report.system, c.total, c.small, c.smooth, c.none
    );
    for w in report.failures() {
        text += &format!("  none found: {w}\n");
    }
    if out.verbose > 0 {
        for e in &report.elements {
            let data = e.data.as_ref().map(|d| {
                d.iter()
                    .map(|s| s.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
                    .collect::<Vec<_>>()
                    .join("|")
            });
            text += &format!(
                "  {}  {:?}  {}  {}\n",
                e.w,
                e.status,
                e.route.as_deref().unwrap_or("-"),
                data.unwrap_or_default()
            );
        }
    }
    let verdict = expected_counts(&g).map(|want| (want, want == c));
    if let Some((want, ok)) = verdict {
        text += &format!("expected {want:?}: {}\n", if ok { "match" } else { "MISMATCH" });
    }
    out.emit(&text, &report)?;
    match verdict {
        Some((want, false)) => Err(Failure::Mismatch(format!("counts {c:?} differ from expected {want:?}"))),
        _ => Ok(()),
    }
}

#[derive(Serialize, Deserialize)]
struct ResolveReport {
    w: String,
    status: String,
    route: Option<String>,
    data: Option<Vec<Vec<usize>>>,
    certificate: Option<SmallnessCertificate>,
    profile: Option<ProfileReport>,
}

fn describe_profile(p: &ProfileReport) -> String {
    let mut s = String::new();
    for c in &p.cells {
        let n = IntPoly::from_coeffs(c.n.clone());
        if !n.is_one() {
            s += &format!("  N[{}] = {}  (len {})\n", c.u, n, c.len);
        }
    }
    s
}

fn cmd_resolve(out: &Output, group: &GroupArgs, perm: &str, search: &SearchArgs) -> Outcome {
    let g = build_group(group, Some(perm))?;
    let w = g.parse(perm)?;
    let h = HeckeAlgebra::new(&g);
    let searcher = Searcher::new(&h, search.config());
    let found = searcher.search_small(w);
    let smooth = schubert::bp::is_smooth(&g, w);
    let report = match &found.resolution {
        Some(r) => ResolveReport {
            w: g.format(w),
            status: if smooth { "smooth" } else { "small" }.into(),
            route: Some(r.route.as_str().into()),
            data: Some(r.data.to_index_lists()),
            certificate: Some(r.certificate.clone()),
            profile: Some(ProfileReport::new(&g, &r.profile)),
        },
        None => ResolveReport {
            w: g.format(w),
            status: "none".into(),
            route: None,
            data: None,
            certificate: None,
            profile: None,
        },
    };
    let text = match &found.resolution {
        Some(r) => format!(
            "{}: {} via {}\ndata {}\nequivariant: left {}, right {}\nverdict {:?}\n{}",
            report.w,
            report.status,
            r.route.as_str(),
            r.data,
            r.eq_left,
            r.eq_right,
            r.certificate.verdict,
            report.profile.as_ref().map(describe_profile).unwrap_or_default()
        ),
        None => format!(
            "{}: none found within budget {} ({} nodes{})\n",
            report.w,
            search.budget,
            found.nodes,
            if found.exhausted { ", search space exhausted" } else { "" }
        ),
    };
    out.emit(&text, &report)?;
    match found.resolution {
        Some(_) => Ok(()),
        None => Err(Failure::Mismatch(format!("no small resolution found for {}", report.w))),
    }
}

#[derive(Serialize, Deserialize)]
struct CertifyReport {
    w: String,
    data: Vec<Vec<usize>>,
    eq_left: bool,
    eq_right: bool,
    certificate: SmallnessCertificate,
    profile: ProfileReport,
}

fn cmd_certify(out: &Output, group: &GroupArgs, perm: &str, data: &str) -> Outcome {
    let g = build_group(group, Some(perm))?;
    let w = g.parse(perm)?;
    let data = ResolutionData::parse(w, data)?;
    if data.sets.iter().any(|s| !s.is_subset(g.all_simple())) {
        return Err(Failure::Usage(format!("data {data} uses generators outside rank {}", g.rank())));
    }
    let h = HeckeAlgebra::new(&g);
    let profile = validate(&h, &data)?;
    let certificate = smallness(&g, &profile).map_err(|e| Failure::Mismatch(format!("not a resolution: {e}")))?;
    let report = CertifyReport {
        w: g.format(w),
        data: data.to_index_lists(),
        eq_left: data.first() == g.left_descents(w),
        eq_right: data.last() == g.right_descents(w),
        profile: ProfileReport::new(&g, &profile),
        certificate,
    };
    let mut text = format!(
        "{}: data {}\nequivariant: left {}, right {}\nverdict {:?}\n{}",
        report.w,
        data,
        report.eq_left,
        report.eq_right,
        report.certificate.verdict,
        describe_profile(&report.profile)
    );
    let witness = report.certificate.witness().cloned();
    if let Some(bad) = &witness {
        text += &format!(
            "not small: fiber over {} has dimension {} with codimension {}\n",
            bad.u,
            bad.fiber_dim,
            report.certificate.len - bad.len
        );
    }
    out.emit(&text, &report)?;
    match witness {
        Some(bad) => Err(Failure::Mismatch(format!("not small (witness {})", bad.u))),
        None => Ok(()),
    }
}

#[derive(Serialize, Deserialize)]
struct TablesOutput {
    table1: Option<Vec<RowOutcome>>,
    table2: Option<Vec<RowOutcome>>,
}

fn describe_rows(title: &str, rows: &[RowOutcome]) -> String {
    let mut s = format!("{title}: {} rows\n", rows.len());
    for r in rows {
        let state = match (&r.found_w1, r.exact, r.passed()) {
            (None, _, _) => "FAILED: no certified middle".to_string(),
            (Some(_), true, _) => "exact".to_string(),
            (Some(w1), false, true) => format!("variant w1 = {w1}"),
            (Some(w1), false, false) => format!("FAILED: fields differ for w1 = {w1}"),
        };
        s += &format!(
            "  ( {} )  w1 = ( {} )  {}  {}\n",
            r.w,
            r.expected_w1,
            r.data.as_deref().unwrap_or("-"),
            state
        );
    }
    s
}

fn cmd_tables(out: &Output, which: Which, search: &SearchArgs) -> Outcome {
    let cfg = search.config();
    let mut result = TablesOutput {
        table1: None,
        table2: None,
    };
    let mut text = String::new();
    if which != Which::A5 {
        let g = CoxeterGroup::type_a(4)?;
        let h = HeckeAlgebra::new(&g);
        let rows = tables::regenerate_table1(&Searcher::new(&h, cfg))?;
        text += &describe_rows("Table S5", &rows);
        result.table1 = Some(rows);
    }
    if which != Which::A4 {
        let g = CoxeterGroup::type_a(5)?;
        let h = HeckeAlgebra::new(&g);
        let rows = tables::regenerate_table2(&Searcher::new(&h, cfg))?;
        text += &describe_rows("Table S6", &rows);
        result.table2 = Some(rows);
    }
    let rows = || result.table1.iter().chain(&result.table2).flatten();
    let failed = rows().filter(|r| !r.passed()).count();
    let variants = rows().filter(|r| r.is_variant()).count();
    text += &format!("failed {failed}, variants {variants}\n");
    out.emit(&text, &result)?;
    if failed > 0 {
        return Err(Failure::Mismatch(format!("{failed} table rows failed")));
    }
    Ok(())
}

/// Wire form of a Hecke element: `{"terms": [{"w": "2 1", "coeffs": [-1, 1]}]}`.
#[derive(Serialize, Deserialize)]
struct HeckeWire {
    terms: Vec<HeckeTerm>,
}

#[derive(Serialize, Deserialize)]
struct HeckeTerm {
    w: String,
    coeffs: Vec<i128>,
}

fn parse_indices(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Usage(format!("bad generator index {t:?}"))))
        .collect()
}

fn cmd_hecke(
    out: &Output,
    group: &GroupArgs,
    word: Option<String>,
    parabolic: Option<String>,
    data: Option<String>,
    perm: Option<String>,
) -> Outcome {
    let g = build_group(group, perm.as_deref())?;
    let h = HeckeAlgebra::new(&g);
    if let Some(data) = data {
        let sets = data
            .split('|')
            .map(|p| p.parse::<ParabolicSet>())
            .collect::<Result<Vec<_>, _>>()?;
        let chain = schubert::bp::FactorChain::parabolic(&g, &sets)?;
        let target = chain.target(&g);
        if let Some(p) = &perm {
            let want = g.parse(p)?;
            if want != target {
                return Err(Failure::Usage(
                    Error::WrongImage {
                        expected: g.format(want),
                        actual: g.format(target),
                    }
                    .to_string(),
                ));
            }
        }
        let profile = schubert::hecke::fiber_profile(&h, &chain)?;
        let report = ProfileReport::new(&g, &profile);
        let mut text = format!(
            "target {}  dimension {} (length {})  verdict {:?}\n",
            report.w,
            profile.total_dimension,
            g.length(target),
            report.verdict
        );
        for c in &report.cells {
            text += &format!("  N[{}] = {}\n", c.u, IntPoly::from_coeffs(c.n.clone()));
        }
        return out.emit(&text, &report);
    }
    let elem: HeckeElement = if let Some(word) = word {
        let mut acc = HeckeElement::basis(g.identity());
        for s in parse_indices(&word)? {
            if s == 0 || s > g.rank() {
                return Err(Failure::Usage(format!("generator {s} out of range")));
            }
            acc = h.mul_generator_right(&acc, s);
        }
        acc
    } else if let Some(j) = parabolic {
        let j: ParabolicSet = j.parse()?;
        (*h.parabolic_class(j)).clone()
    } else if let Some(p) = &perm {
        (*h.schubert_class(g.parse(p)?)).clone()
    } else {
        return Err(Failure::Usage("one of --word, --parabolic, --data or --perm is required".into()));
    };
    let wire = HeckeWire {
        terms: elem
            .terms()
            .map(|(w, c)| HeckeTerm {
                w: g.format(w),
                coeffs: c.coeffs().to_vec(),
            })
            .collect(),
    };
    out.emit(&format!("{}\n", elem.display(&g)), &wire)
}
