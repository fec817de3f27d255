//! The work behind each subcommand, independent of argument parsing.

use std::time::Instant;

use arrlik_core::graphic::{
    connected_graphs, inclusion_minimal_separators, is_chordal, octahedron_obstruction, Graph,
    GraphicArrangement,
};
use arrlik_core::groebner::{minimal_generators, Budget, Ideal};
use arrlik_core::likelihood::{
    check_verdict, likelihood_ideal, pre_likelihood_ideal, presentation, Arrangement, GentleStatus,
    GentleVerdict, LikelihoodOptions,
};
use arrlik_core::multidegree::{ml_degree, multidegree_with_order};
use arrlik_core::{parse_poly, TermOrder};
use rayon::prelude::*;
use thiserror::Error;

use crate::formats::{parse_graph, FormatError, PolyFile};
use crate::report::{BudgetReport, MultidegreeReport, Report, SeparatorReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_CONSISTENCY: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] arrlik_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Format(_) => EXIT_PARSE,
            CliError::Core(e) => match e {
                arrlik_core::Error::BudgetExceeded(_) => EXIT_BUDGET,
                arrlik_core::Error::Consistency(_) => EXIT_CONSISTENCY,
                _ => EXIT_PARSE,
            },
        }
    }
}

/// Which term order the reported basis and multidegree use.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum OrderChoice {
    #[default]
    Bigraded,
    Grevlex,
    Lex,
}

impl OrderChoice {
    pub fn term_order(self) -> TermOrder {
        match self {
            OrderChoice::Bigraded => TermOrder::Bigraded,
            OrderChoice::Grevlex => TermOrder::Grevlex,
            OrderChoice::Lex => TermOrder::Lex,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    pub order: OrderChoice,
    pub budget: Budget,
    /// Polynomial text in the arrangement's variables.
    pub witness: Option<String>,
    pub skip_minors: bool,
    pub allow_common_factors: bool,
    /// Report a minimal generating set instead of the raw generators.
    pub minimize: bool,
    /// Graphic arrangements with `x_n = 0`.
    pub reduced: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order: OrderChoice::default(),
            budget: Budget::default(),
            witness: None,
            skip_minors: false,
            allow_common_factors: false,
            minimize: true,
            reduced: false,
        }
    }
}

/// A report together with the exit code it should produce.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub code: i32,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome {
            report,
            code: EXIT_OK,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphQuery {
    Arrangement,
    Chordal,
    Separators,
    Generators,
    Obstruction,
    Gentle,
}

impl GraphQuery {
    pub fn name(self) -> &'static str {
        match self {
            GraphQuery::Arrangement => "arrangement",
            GraphQuery::Chordal => "chordal",
            GraphQuery::Separators => "separators",
            GraphQuery::Generators => "generators",
            GraphQuery::Obstruction => "obstruction",
            GraphQuery::Gentle => "gentle",
        }
    }
}

pub fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

fn budget_report(cfg: &Config, pairs: Option<usize>) -> BudgetReport {
    BudgetReport {
        max_pairs: cfg.budget.max_pairs,
        max_degree: cfg.budget.max_degree,
        pairs,
    }
}

fn options(arr: &Arrangement, cfg: &Config) -> Result<LikelihoodOptions, CliError> {
    let witness = match &cfg.witness {
        Some(w) => Some(parse_poly(w, arr.ring())?),
        None => None,
    };
    Ok(LikelihoodOptions {
        budget: cfg.budget,
        witness,
        skip_minors: cfg.skip_minors,
    })
}

fn shown_ideal(ideal: &Ideal, cfg: &Config) -> Result<Ideal, CliError> {
    Ok(if cfg.minimize {
        minimal_generators(ideal, cfg.budget)?
    } else {
        ideal.clone()
    })
}

/// `arrlik prelikelihood`: generators of `I_0` with their bidegrees.
pub fn prelikelihood(input: &str, text: &str, cfg: &Config) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let arr = PolyFile::parse(text)?.arrangement(cfg.allow_common_factors)?;
    let pres = presentation(&arr, cfg.budget)?;
    let pre = pre_likelihood_ideal(&arr, &pres)?;
    let mut report = Report::new("prelikelihood", input);
    report.set_ideal(&shown_ideal(&pre, cfg)?);
    report.minimal = Some(cfg.minimize);
    report.kernel_generators = Some(pres.l);
    report.column_degrees = Some(pres.column_degrees());
    report.budget = Some(budget_report(cfg, None));
    log::info!("prelikelihood finished in {:?}", start.elapsed());
    Ok(Outcome::ok(report))
}

fn verdict_fields(report: &mut Report, v: &GentleVerdict) {
    report.verdict = Some(v.status.to_string());
    report.witness = v.witness.as_ref().map(|w| w.to_string());
    report.reason = v.reason.clone();
}

/// `arrlik likelihood`: the likelihood ideal, its multidegree, ML degree
/// and the gentleness verdict.
pub fn likelihood(input: &str, text: &str, cfg: &Config) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let arr = PolyFile::parse(text)?.arrangement(cfg.allow_common_factors)?;
    let opts = options(&arr, cfg)?;
    let pres = presentation(&arr, cfg.budget)?;
    let pre = pre_likelihood_ideal(&arr, &pres)?;
    let verdict = likelihood_ideal(&arr, &pre, &opts)?;
    let mut report = Report::new("likelihood", input);
    verdict_fields(&mut report, &verdict);
    if verdict.status == GentleStatus::Inconclusive {
        report.set_ideal(&verdict.likelihood);
        report.minimal = Some(false);
        report.budget = Some(budget_report(cfg, None));
        return Ok(Outcome {
            report,
            code: EXIT_BUDGET,
        });
    }
    check_verdict(&verdict, cfg.budget)?;
    let ideal = &verdict.likelihood;
    let pairs = ideal.cached().map(|g| g.stats().pairs);
    let md = multidegree_with_order(ideal, &cfg.order.term_order(), cfg.budget)?;
    report.set_ideal(&shown_ideal(ideal, cfg)?);
    report.minimal = Some(cfg.minimize);
    report.multidegree = Some(MultidegreeReport {
        form: md.to_string(),
        codim: md.degree(),
        coefficients: md
            .coeffs_descending()
            .iter()
            .map(|c| c.to_string())
            .collect(),
    });
    report.ml_degree = Some(ml_degree(&md)?.to_string());
    report.budget = Some(budget_report(cfg, pairs));
    log::info!("likelihood finished in {:?}", start.elapsed());
    Ok(Outcome::ok(report))
}

fn graphic_arrangement(g: &Graph, cfg: &Config) -> Result<GraphicArrangement, CliError> {
    Ok(if cfg.reduced {
        GraphicArrangement::reduced(g)?
    } else {
        GraphicArrangement::new(g)?
    })
}

/// `arrlik graphic <file> <query>`.
pub fn graphic(
    input: &str,
    text: &str,
    query: GraphQuery,
    cfg: &Config,
) -> Result<Outcome, CliError> {
    let g = parse_graph(text)?;
    let mut report = Report::new(&format!("graphic {}", query.name()), input);
    let mut code = EXIT_OK;
    match query {
        GraphQuery::Arrangement => {
            let ga = graphic_arrangement(&g, cfg)?;
            let arr = ga.arrangement();
            let ring = arr.ring();
            report.vars = ring.names().to_vec();
            report.polynomials = Some(arr.polys().iter().map(|p| p.to_string()).collect());
        }
        GraphQuery::Chordal => report.chordal = Some(is_chordal(&g)),
        GraphQuery::Separators => {
            let seps = inclusion_minimal_separators(&g)?;
            report.separators = Some(seps.iter().map(SeparatorReport::from).collect());
        }
        GraphQuery::Generators => {
            let ga = graphic_arrangement(&g, cfg)?;
            let gens = ga.generators(cfg.budget)?;
            let ring = ga.arrangement().s_ring().clone();
            report.set_ideal(&Ideal::new(&ring, gens)?);
            report.minimal = Some(false);
        }
        GraphQuery::Obstruction => report.obstruction = Some(octahedron_obstruction(&g)?),
        GraphQuery::Gentle => {
            let ga = graphic_arrangement(&g, cfg)?;
            let arr = ga.arrangement();
            let opts = options(arr, cfg)?;
            let pres = presentation(arr, cfg.budget)?;
            let pre = pre_likelihood_ideal(arr, &pres)?;
            let verdict = likelihood_ideal(arr, &pre, &opts)?;
            verdict_fields(&mut report, &verdict);
            match verdict.status {
                GentleStatus::Inconclusive => code = EXIT_BUDGET,
                GentleStatus::NotGentle => {
                    check_verdict(&verdict, cfg.budget)?;
                    report.set_ideal(&verdict.likelihood);
                    report.minimal = Some(false);
                }
                GentleStatus::Gentle => {}
            }
        }
    }
    Ok(Outcome { report, code })
}

/// One line of a survey: a graph and its gentleness verdict.
#[derive(Debug, Clone, serde::Serialize, PartialEq, Eq)]
pub struct SurveyEntry {
    pub edges: Vec<(usize, usize)>,
    pub chordal: bool,
    pub verdict: String,
}

/// Gentleness of every connected graph on `n` vertices, in parallel.
pub fn survey(n: usize, cfg: &Config) -> Result<Vec<SurveyEntry>, CliError> {
    let graphs = connected_graphs(n)?;
    graphs
        .par_iter()
        .filter(|g| g.num_edges() > 0)
        .map(|g| {
            let ga = graphic_arrangement(g, cfg)?;
            let arr = ga.arrangement();
            let opts = options(arr, cfg)?;
            let pres = presentation(arr, cfg.budget)?;
            let pre = pre_likelihood_ideal(arr, &pres)?;
            let v = likelihood_ideal(arr, &pre, &opts)?;
            Ok(SurveyEntry {
                edges: g.edges(),
                chordal: is_chordal(g),
                verdict: v.status.to_string(),
            })
        })
        .collect()
}

pub fn survey_text(n: usize, entries: &[SurveyEntry]) -> String {
    let mut out = format!(
        "# survey of {} connected graphs on {n} vertices\n",
        entries.len()
    );
    for e in entries {
        let edges: Vec<String> = e.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        out.push_str(&format!(
            "{} chordal={} {}\n",
            edges.join(","),
            e.chordal,
            e.verdict
        ));
    }
    out
}
