//! The `llt` command line.
//!
//! Exit codes: 0 success, 1 counterexample, 2 usage error, 3 resource limit.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::combinatorics::{
    compositions, enumerate_partitions, enumerate_syt, weighted_sum, Composition, Partition,
    PositionSet, Tableau,
};
use crate::error::Error;
use crate::graphs::{AreaSequence, Lollipop, TwoHeaded};
use crate::polyq::QPoly;
use crate::symfunc::{
    coloring_count, llt_bruteforce, monomial_to_schur, ribbon_by_tableaux, schur_to_monomial,
    Basis, OracleConfig, SymFunc,
};
use crate::theorems::verify::{run as run_claim, Claim, LltOracle};
use crate::theorems::{check_lee_recurrence, formula_two_headed, weighted_ribbon_sum, RecurrenceTriple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

const GRAMMAR: &str = "path:n | complete:m | meltcomplete:m,k | lollipop:m,n,k | \
                       twoheaded:m1,k1,n,m2,k2 | area:c1,c2,...";

#[derive(Parser, Debug)]
#[command(name = "llt", version, about = "Unicellular LLT polynomials and their ribbon Schur expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand the LLT polynomial of a graph, by closed form when the graph is a
    /// (two-headed) melting lollipop.
    Expand {
        /// Graph literal: path:n | complete:m | meltcomplete:m,k | lollipop:m,n,k |
        /// twoheaded:m1,k1,n,m2,k2 | area:c1,c2,...
        #[arg(allow_hyphen_values = true)]
        graph: GraphLiteral,
        #[arg(long, value_enum, default_value_t = OutBasis::Schur)]
        basis: OutBasis,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Use the coloring enumeration instead of the closed form.
        #[arg(long)]
        bruteforce: bool,
        /// Override the enumeration limit (default: LLT_MAX_VERTICES or 8).
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Check a claim exhaustively; prints one JSON report per instance.
    Verify {
        /// One of: path-lemma, union-lemma, progression-lemma, lee-recurrence,
        /// melting-lollipop, two-headed, corollary, ribbon-product,
        /// transpose-invariance, q1-specialization
        claim: String,
        /// Largest graph (or symmetric function degree) in the grid.
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        /// A single recurrence triple `a/a'/a''`, e.g. `3,2,1/2,2,1/1,2,1`.
        #[arg(long)]
        triple: Option<String>,
    },
    /// List standard Young tableaux with their descent sets.
    Syt {
        /// A shape such as `3,2` (or a composition with --composition).
        shape: String,
        /// Treat the argument as a composition α and list every SYT with D(T) = set(α).
        #[arg(long)]
        composition: bool,
        /// Weight list w of length n-1; each tableau gets exponent w(D(T)).
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<usize>>,
        /// Keep only tableaux with exactly this descent set.
        #[arg(long, value_delimiter = ',')]
        descents: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Expand a graph purely by enumerating colorings.
    Oracle {
        #[arg(allow_hyphen_values = true)]
        graph: GraphLiteral,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        max_vertices: Option<usize>,
        /// Also print the Schur expansion at q = 1.
        #[arg(long)]
        at_q1: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutBasis {
    Schur,
    Monomial,
    /// `Σ q^{w(set α)} r_α`; closed forms only.
    Ribbon,
}

/// A parsed graph literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphLiteral {
    Path(usize),
    Complete(usize),
    MeltComplete(usize, usize),
    Lollipop(Lollipop),
    TwoHeaded(TwoHeaded),
    Area(AreaSequence),
}

impl GraphLiteral {
    pub fn area(&self) -> AreaSequence {
        match self {
            GraphLiteral::Path(n) => AreaSequence::path(*n).expect("validated"),
            GraphLiteral::Complete(m) => AreaSequence::complete(*m).expect("validated"),
            GraphLiteral::MeltComplete(m, k) => AreaSequence::melting_complete(*m, *k).expect("validated"),
            GraphLiteral::Lollipop(l) => l.area(),
            GraphLiteral::TwoHeaded(t) => t.area(),
            GraphLiteral::Area(a) => a.clone(),
        }
    }

    /// The weight list of the matching closed form, if the graph belongs to a
    /// supported family.
    pub fn formula_weights(&self) -> Option<(String, Vec<usize>)> {
        match self {
            GraphLiteral::Path(_)
            | GraphLiteral::Complete(_)
            | GraphLiteral::MeltComplete(..)
            | GraphLiteral::Lollipop(_) => Some(("melting-lollipop".into(), self.area().values().to_vec())),
            GraphLiteral::TwoHeaded(t) => Some(("two-headed".into(), t.modified_sequence())),
            GraphLiteral::Area(a) => {
                TwoHeaded::recognize(a).map(|t| (format!("two-headed {t}"), t.modified_sequence()))
            }
        }
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{t:?} is not an integer")))
        })
        .collect()
}

impl FromStr for GraphLiteral {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let hint = |msg: String| Error::Parse(format!("{msg}; expected {GRAMMAR}"));
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| hint(format!("graph literal {s:?} has no ':'")))?;
        let arity = |want: usize| -> Result<Vec<i64>, Error> {
            let v: Vec<i64> = parse_list(args).map_err(|e| hint(e.to_string()))?;
            if v.len() != want {
                return Err(hint(format!("{kind} takes {want} argument(s), got {}", v.len())));
            }
            Ok(v)
        };
        let unsigned = |v: i64| usize::try_from(v).map_err(|_| hint(format!("{v} must be nonnegative")));
        let lit = match kind {
            "path" => {
                let v = arity(1)?;
                AreaSequence::path(unsigned(v[0])?)?;
                GraphLiteral::Path(unsigned(v[0])?)
            }
            "complete" => {
                let v = arity(1)?;
                AreaSequence::complete(unsigned(v[0])?)?;
                GraphLiteral::Complete(unsigned(v[0])?)
            }
            "meltcomplete" => {
                let v = arity(2)?;
                let (m, k) = (unsigned(v[0])?, unsigned(v[1])?);
                AreaSequence::melting_complete(m, k)?;
                GraphLiteral::MeltComplete(m, k)
            }
            "lollipop" => {
                let v = arity(3)?;
                GraphLiteral::Lollipop(Lollipop::new(unsigned(v[0])?, unsigned(v[1])?, unsigned(v[2])?)?)
            }
            "twoheaded" => {
                let v = arity(5)?;
                GraphLiteral::TwoHeaded(TwoHeaded::new(
                    unsigned(v[0])?,
                    unsigned(v[1])?,
                    v[2],
                    unsigned(v[3])?,
                    unsigned(v[4])?,
                )?)
            }
            "area" => GraphLiteral::Area(AreaSequence::new(parse_list(args).map_err(|e| hint(e.to_string()))?)?),
            other => return Err(hint(format!("unknown graph kind {other:?}"))),
        };
        Ok(lit)
    }
}

impl fmt::Display for GraphLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphLiteral::Path(n) => write!(f, "path:{n}"),
            GraphLiteral::Complete(m) => write!(f, "complete:{m}"),
            GraphLiteral::MeltComplete(m, k) => write!(f, "meltcomplete:{m},{k}"),
            GraphLiteral::Lollipop(l) => write!(f, "lollipop:{l}"),
            GraphLiteral::TwoHeaded(t) => write!(f, "twoheaded:{t}"),
            GraphLiteral::Area(a) => {
                let vals: Vec<String> = a.values().iter().map(usize::to_string).collect();
                write!(f, "area:{}", vals.join(","))
            }
        }
    }
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_RESOURCE,
            Error::NonSymmetric(_) => EXIT_COUNTEREXAMPLE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("write failed: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Expand {
            graph,
            basis,
            format,
            bruteforce,
            max_vertices,
        } => expand(&graph, basis, format, bruteforce, config(max_vertices)?, out),
        Command::Verify {
            claim,
            max_vertices,
            triple,
        } => verify(&claim, max_vertices, triple.as_deref(), out, err),
        Command::Syt {
            shape,
            composition,
            weights,
            descents,
            format,
        } => syt(&shape, composition, weights, descents, format, out),
        Command::Oracle {
            graph,
            format,
            max_vertices,
            at_q1,
        } => oracle(&graph, format, config(max_vertices)?, at_q1, out),
    }
}

fn config(max_vertices: Option<usize>) -> Result<OracleConfig, Failure> {
    match max_vertices {
        Some(n) => Ok(OracleConfig::new(n)),
        None => Ok(OracleConfig::from_env()?),
    }
}

fn header(graph: &GraphLiteral, method: &str) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("graph".into(), graph.to_string().into());
    obj.insert("area".into(), json!(graph.area().values()));
    obj.insert("method".into(), method.into());
    obj
}

fn ribbon_terms(weights: &[usize]) -> Vec<(Composition, usize)> {
    compositions(weights.len() + 1)
        .into_iter()
        .map(|alpha| {
            let e = weighted_sum(weights, &alpha.set()).expect("set(α) ⊆ [n-1]");
            (alpha, e)
        })
        .collect()
}

fn expand(
    graph: &GraphLiteral,
    basis: OutBasis,
    format: Format,
    bruteforce: bool,
    config: OracleConfig,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let a = graph.area();
    let (method, family, weights, schur) = if bruteforce {
        if basis == OutBasis::Ribbon {
            return Err(usage("the ribbon basis is only available for closed forms"));
        }
        let f = monomial_to_schur(&llt_bruteforce(&a, &config)?)?;
        ("bruteforce", None, None, f)
    } else {
        let Some((family, weights)) = graph.formula_weights() else {
            return Err(usage(format!(
                "{graph} is not a melting lollipop or two-headed melting lollipop, so no closed \
                 form applies; rerun with --bruteforce to enumerate colorings (at most {} vertices)",
                config.max_vertices
            )));
        };
        let f = match graph {
            GraphLiteral::TwoHeaded(t) => formula_two_headed(t),
            _ => weighted_ribbon_sum(&weights),
        };
        ("formula", Some(family), Some(weights), f)
    };

    let mut obj = header(graph, method);
    if let Some(family) = &family {
        obj.insert("family".into(), family.clone().into());
    }
    if let Some(w) = &weights {
        obj.insert("weights".into(), json!(w));
    }

    if basis == OutBasis::Ribbon {
        let terms = ribbon_terms(weights.as_deref().expect("formula path"));
        return write_ribbon(obj, &terms, format, out);
    }
    let f = match basis {
        OutBasis::Monomial => schur_to_monomial(&schur)?,
        _ => schur,
    };
    obj.insert("basis".into(), f.basis().name().into());
    match format {
        Format::Json => {
            obj.insert("expansion".into(), f.to_json());
            writeln!(out, "{}", Value::Object(obj))?;
        }
        Format::Latex => {
            writeln!(out, "\\mathrm{{LLT}}_{{{}}} = {}", a, f.to_latex())?;
        }
        Format::Plain => {
            write_header_plain(&obj, out)?;
            for line in f.listing() {
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_ribbon(
    mut obj: Map<String, Value>,
    terms: &[(Composition, usize)],
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    obj.insert("basis".into(), "ribbon".into());
    match format {
        Format::Json => {
            let mut coeffs = Map::new();
            for (alpha, e) in terms {
                let key: Vec<String> = alpha.parts().iter().map(usize::to_string).collect();
                coeffs.insert(key.join(","), QPoly::monomial(*e).to_json());
            }
            obj.insert("expansion".into(), Value::Object(coeffs));
            writeln!(out, "{}", Value::Object(obj))?;
        }
        Format::Latex => {
            let body: Vec<String> = terms
                .iter()
                .map(|(alpha, e)| {
                    let key: Vec<String> = alpha.parts().iter().map(usize::to_string).collect();
                    let c = QPoly::monomial(*e);
                    let c = if c.is_one() { String::new() } else { c.to_latex() };
                    format!("{c}r_{{({})}}", key.join(","))
                })
                .collect();
            writeln!(out, "{}", body.join("+"))?;
        }
        Format::Plain => {
            write_header_plain(&obj, out)?;
            for (alpha, e) in terms {
                let key: Vec<String> = alpha.parts().iter().map(usize::to_string).collect();
                writeln!(out, "r[{}]: {}", key.join(","), QPoly::monomial(*e))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_header_plain(obj: &Map<String, Value>, out: &mut dyn Write) -> std::io::Result<()> {
    for (k, v) in obj {
        match v {
            Value::String(s) => writeln!(out, "{k}: {s}")?,
            Value::Array(items) => {
                let vals: Vec<String> = items.iter().map(Value::to_string).collect();
                writeln!(out, "{k}: ({})", vals.join(","))?
            }
            other => writeln!(out, "{k}: {other}")?,
        }
    }
    Ok(())
}

fn oracle(
    graph: &GraphLiteral,
    format: Format,
    config: OracleConfig,
    at_q1: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let a = graph.area();
    let start = Instant::now();
    let monomial = llt_bruteforce(&a, &config)?;
    let schur = monomial_to_schur(&monomial)?;
    let seconds = start.elapsed().as_secs_f64();
    let colorings = coloring_count(a.vertex_count());
    let q1 = at_q1.then(|| {
        let mut f = SymFunc::zero(schur.degree(), Basis::Schur);
        for (shape, c) in schur.eval_at_one() {
            f.add_term(shape, &QPoly::term(c, 0));
        }
        f
    });
    match format {
        Format::Json => {
            let mut obj = header(graph, "bruteforce");
            obj.insert("colorings".into(), Value::Number(colorings.to_string().parse().expect("integer")));
            obj.insert("seconds".into(), json!(seconds));
            obj.insert("monomial".into(), monomial.to_json());
            obj.insert("schur".into(), schur.to_json());
            if let Some(f) = &q1 {
                obj.insert("schur_at_q1".into(), f.to_json());
            }
            writeln!(out, "{}", Value::Object(obj))?;
        }
        Format::Latex => {
            writeln!(out, "\\mathrm{{LLT}}_{{{}}} = {}", a, schur.to_latex())?;
            writeln!(out, "\\mathrm{{LLT}}_{{{}}} = {}", a, monomial.to_latex())?;
        }
        Format::Plain => {
            write_header_plain(&header(graph, "bruteforce"), out)?;
            writeln!(out, "colorings: {colorings}")?;
            writeln!(out, "seconds: {seconds:.6}")?;
            writeln!(out, "monomial: {monomial}")?;
            writeln!(out, "schur: {schur}")?;
            if let Some(f) = &q1 {
                writeln!(out, "schur at q=1: {f}")?;
            }
            for line in schur.listing() {
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    claim: &str,
    max_vertices: usize,
    triple: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let claim = Claim::from_id(claim)?;
    let base = OracleConfig::from_env()?;
    let oracle = LltOracle::new(OracleConfig::new(base.max_vertices.max(max_vertices)));
    let reports = match triple {
        Some(spec) => {
            if claim != Claim::LeeRecurrence {
                return Err(usage("--triple only applies to lee-recurrence"));
            }
            let lists: Vec<Vec<usize>> = spec.split('/').map(parse_list).collect::<Result<_, _>>()?;
            let [a, a1, a2] = <[Vec<usize>; 3]>::try_from(lists)
                .map_err(|_| usage(format!("--triple needs three lists a/a'/a'', got {spec:?}")))?;
            vec![check_lee_recurrence(&RecurrenceTriple::infer(a, a1, a2)?, &oracle)?]
        }
        None => run_claim(claim, max_vertices, &oracle)?,
    };
    let mut failed = 0;
    for r in &reports {
        writeln!(out, "{}", r.to_json())?;
        failed += usize::from(!r.holds);
    }
    writeln!(
        err,
        "{claim}: {} instance(s), {} counterexample(s)",
        reports.len(),
        failed
    )?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn fmt_set(s: &PositionSet) -> String {
    let v: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", v.join(","))
}

fn syt(
    shape: &str,
    as_composition: bool,
    weights: Option<Vec<usize>>,
    descents: Option<Vec<usize>>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let parts: Vec<usize> = parse_list(shape)?;
    let (n, tableaux, label): (usize, Vec<Tableau>, Value) = if as_composition {
        let alpha = Composition::new(parts)?;
        let set = alpha.set();
        let all = enumerate_partitions(alpha.size())
            .iter()
            .flat_map(enumerate_syt)
            .filter(|t| t.descent_set() == set)
            .collect();
        (alpha.size(), all, json!({"composition": alpha.parts()}))
    } else {
        let lambda = Partition::new(parts).map_err(|e| {
            usage(format!("{e}; pass --composition to treat the list as a composition"))
        })?;
        (lambda.size(), enumerate_syt(&lambda), json!({"shape": lambda.parts()}))
    };
    if let Some(w) = &weights {
        if w.len() + 1 != n {
            return Err(usage(format!("--weights needs {} entries, got {}", n.saturating_sub(1), w.len())));
        }
    }
    let filter: Option<PositionSet> = descents.map(|d| d.into_iter().collect());
    let rows: Vec<(Tableau, PositionSet, Option<usize>)> = tableaux
        .into_iter()
        .map(|t| {
            let d = t.descent_set();
            let e = weights.as_ref().map(|w| weighted_sum(w, &d).expect("D(T) ⊆ [n-1]"));
            (t, d, e)
        })
        .filter(|(_, d, _)| filter.as_ref().is_none_or(|f| f == d))
        .collect();
    let total = weights.as_ref().map(|_| {
        rows.iter().fold(QPoly::zero(), |acc, (_, _, e)| acc + QPoly::monomial(e.expect("weights given")))
    });

    match format {
        Format::Json => {
            let mut obj = label.as_object().cloned().unwrap_or_default();
            let list: Vec<Value> = rows
                .iter()
                .map(|(t, d, e)| {
                    let mut o = Map::new();
                    o.insert("shape".into(), json!(t.shape().parts()));
                    o.insert("rows".into(), json!(t.rows()));
                    o.insert("descents".into(), json!(d.iter().collect::<Vec<_>>()));
                    if let Some(e) = e {
                        o.insert("exponent".into(), json!(e));
                    }
                    Value::Object(o)
                })
                .collect();
            obj.insert("count".into(), json!(rows.len()));
            obj.insert("tableaux".into(), Value::Array(list));
            if let Some(p) = &total {
                obj.insert("generating_function".into(), p.to_json());
            }
            writeln!(out, "{}", Value::Object(obj))?;
        }
        Format::Plain | Format::Latex => {
            for (i, (t, d, e)) in rows.iter().enumerate() {
                let mut line = format!("T{}: {}  shape={}  D={}", i + 1, t, t.shape(), fmt_set(d));
                if let Some(e) = e {
                    line.push_str(&format!("  exponent={e}"));
                }
                writeln!(out, "{line}")?;
            }
            writeln!(out, "count: {}", rows.len())?;
            if let Some(p) = &total {
                let shown = if format == Format::Latex { p.to_latex() } else { p.to_string() };
                writeln!(out, "sum: {shown}")?;
            }
            if as_composition && filter.is_none() {
                let alpha = Composition::new(parse_list(shape)?)?;
                writeln!(out, "ribbon: {}", ribbon_by_tableaux(&alpha))?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("llt").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn literal_grammar() {
        assert_eq!("path:3".parse::<GraphLiteral>().unwrap().area().values(), &[1, 1]);
        assert_eq!("complete:3".parse::<GraphLiteral>().unwrap().area().values(), &[2, 1]);
        assert_eq!("meltcomplete:5,2".parse::<GraphLiteral>().unwrap().area().values(), &[2, 3, 2, 1]);
        assert_eq!(
            "lollipop:5,3,2".parse::<GraphLiteral>().unwrap().area().values(),
            &[1, 1, 1, 2, 3, 2, 1]
        );
        assert_eq!(
            "twoheaded:3,0,-1,3,0".parse::<GraphLiteral>().unwrap().area().values(),
            &[2, 1, 2, 1]
        );
        assert_eq!("area:".parse::<GraphLiteral>().unwrap().area().vertex_count(), 1);
        for bad in ["path", "path:x", "path:1,2", "twoheaded:1,0,-2,1,0", "area:3", "cycle:4", "path:-1"] {
            let e = bad.parse::<GraphLiteral>().unwrap_err().to_string();
            assert!(!e.is_empty(), "{bad}");
        }
        assert!("cycle:4".parse::<GraphLiteral>().unwrap_err().to_string().contains("twoheaded:m1,k1,n,m2,k2"));
    }

    #[test]
    fn literal_display_round_trips() {
        for s in ["path:3", "complete:4", "meltcomplete:4,1", "lollipop:3,2,1", "twoheaded:2,1,-1,3,0", "area:2,1,2,1"] {
            assert_eq!(s.parse::<GraphLiteral>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["expand", "cycle:3"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["verify", "nonsense"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("melting-lollipop"));
        let (code, _, err) = call(&["expand", "area:0,0,0"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--bruteforce"));
    }
}
