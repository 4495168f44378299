//! The `nodal` command line: one subcommand per library operation.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::casework::{
    check_rule, degree_argument, derive_facts, enumerate_exceptional, filter_pipeline, kloosterman_bounds,
    node_count_bound, FilterReport, R2Mode, Rule, RuleConfig,
};
use crate::error::{Error, Result};
use crate::gorenstein::{
    apolar_ideal, ci_hilbert_series, ci_socle_degree, is_symmetric, is_unimodal, socle_check, stanley_admissible,
    tate_socle_check,
};
use crate::ideals::{base_locus, dk_profile, hilbert_function, hyperplane_section};
use crate::io::{load_text, FunctionalDoc, IdealDoc, MatrixDoc, NodeConfigDoc};
use crate::macaulay::{
    gotzmann_polynomial, is_o_sequence, lower_bound_profile, lower_shadow, macaulay_expansion, upper_growth, HVector,
};
use crate::nodal::{defect, general_hyperplane, gorenstein_section, jacobian_ideal, points_hilbert, verify_node};
use crate::poly::{euler_check, exact_rank, graded_dim, multiply_span, Poly};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Subcommand and the library operation it exposes.
pub const COMMANDS: &[(&str, &str)] = &[
    ("expand", "macaulay::macaulay_expansion"),
    ("grow", "macaulay::upper_growth"),
    ("shadow", "macaulay::lower_shadow"),
    ("oseq", "macaulay::is_o_sequence"),
    ("profile", "macaulay::lower_bound_profile"),
    ("gotzmann", "macaulay::gotzmann_polynomial"),
    ("graded-dim", "poly::graded_dim"),
    ("rank", "poly::exact_rank"),
    ("span", "poly::multiply_span"),
    ("euler", "poly::euler_check"),
    ("hilbert", "ideals::hilbert_function"),
    ("section", "ideals::hyperplane_section"),
    ("bsdim", "ideals::base_locus_dim"),
    ("dk", "ideals::dk_profile"),
    ("apolar", "gorenstein::apolar_ideal"),
    ("socle", "gorenstein::socle_check"),
    ("symmetric", "gorenstein::is_symmetric"),
    ("unimodal", "gorenstein::is_unimodal"),
    ("stanley", "gorenstein::stanley_admissible"),
    ("ci-series", "gorenstein::ci_hilbert_series"),
    ("ci-socle", "gorenstein::ci_socle_degree"),
    ("tate", "gorenstein::tate_socle_check"),
    ("bounds", "casework::kloosterman_bounds"),
    ("enumerate", "casework::enumerate_exceptional"),
    ("facts", "casework::derive_facts"),
    ("degree-arg", "casework::degree_argument"),
    ("filter", "casework::filter_pipeline"),
    ("nodes", "casework::node_count_bound"),
    ("rule", "casework::check_rule"),
    ("jacobian", "nodal::jacobian_ideal"),
    ("verify-node", "nodal::verify_node"),
    ("points-hilbert", "nodal::points_hilbert"),
    ("defect", "nodal::defect"),
    ("gsection", "nodal::gorenstein_section"),
    ("report", "casework pipeline with cited steps"),
];

#[derive(Debug, Parser)]
#[command(name = "nodal", version, about = "Hilbert functions, Macaulay bounds and defects of nodal hypersurfaces")]
pub struct Cli {
    /// Emit the structured JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every "general" choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Macaulay d-expansion of C.
    Expand { c: BigUint, d: usize },
    /// Upper growth bound C^<d>.
    Grow { c: BigUint, d: usize },
    /// Lower shadow C_{*d} with its strictness flag.
    Shadow { c: BigUint, d: usize },
    /// Macaulay O-sequence test.
    Oseq {
        #[arg(required = true, num_args = 1..)]
        h: Vec<String>,
    },
    /// Lower bound for h(k) given h(d) = h <= 2d+1.
    Profile { h: u64, d: u64, k: u64 },
    /// Hilbert polynomial forced by Gotzmann persistence from h(d) = C.
    Gotzmann { c: BigUint, d: usize },
    /// Number of monomials of degree k in n variables.
    GradedDim { n_vars: usize, k: usize },
    /// Exact rank of a rational matrix document.
    Rank { matrix: String },
    /// Dimension of the degree-k piece of the ideal generated by a document's forms.
    Span { ideal: String, k: usize },
    /// Checks sum x_i dF/dx_i = deg(F) F.
    Euler {
        poly: String,
        #[arg(long)]
        n_vars: Option<usize>,
    },
    /// Hilbert function h(0..=kmax) of S/I.
    Hilbert { ideal: String, kmax: usize },
    /// Hyperplane section by a linear form, compared with first differences.
    Section {
        ideal: String,
        linear: String,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
    },
    /// Dimension of the base locus of |I_t|.
    Bsdim { ideal: String, t: usize },
    /// Degrees d_k of an artinian ideal with socle degree N.
    Dk { ideal: String, n: usize },
    /// Apolar ideal of a functional document.
    Apolar { functional: String },
    /// Socle dimensions of S/I up to degree N.
    Socle { ideal: String, n: usize },
    /// Symmetry of an h-vector.
    Symmetric {
        #[arg(required = true, num_args = 1..)]
        h: Vec<String>,
    },
    /// Unimodality of an h-vector.
    Unimodal {
        #[arg(required = true, num_args = 1..)]
        h: Vec<String>,
    },
    /// Stanley criterion for Gorenstein h-vectors with h_1 <= 3.
    Stanley {
        #[arg(required = true, num_args = 1..)]
        h: Vec<String>,
    },
    /// Hilbert series of a complete intersection of the given degrees.
    CiSeries {
        #[arg(required = true, num_args = 1..)]
        degrees: Vec<usize>,
    },
    /// Socle degree of a complete intersection.
    CiSocle {
        #[arg(required = true, num_args = 1..)]
        degrees: Vec<usize>,
    },
    /// Jacobian determinant of a complete intersection spans the socle.
    Tate { ideal: String },
    /// Lower bounds on h_I and the node cap.
    Bounds { d: usize },
    /// Exceptional h-vectors under the node cap.
    Enumerate { d: usize },
    /// Base-locus facts derived for an h-vector.
    Facts {
        d: usize,
        #[arg(required = true, num_args = 1..)]
        h: Vec<String>,
        #[arg(long)]
        r2_steps: Option<usize>,
    },
    /// The degree argument applied to an h-vector.
    DegreeArg {
        d: usize,
        #[arg(required = true, num_args = 1..)]
        h: Vec<String>,
        #[arg(long)]
        r2_steps: Option<usize>,
    },
    /// Filters every exceptional h-vector.
    Filter {
        d: usize,
        /// Apply base-locus propagation at most this many times.
        #[arg(long)]
        r2_steps: Option<usize>,
    },
    /// Node-count lower bound carried by an h-vector.
    Nodes {
        #[arg(required = true, num_args = 1..)]
        h: Vec<String>,
    },
    /// Checks one fact-calculus rule on a concrete ideal.
    Rule {
        #[arg(value_parser = ["R2", "R3", "R4"])]
        rule: String,
        ideal: String,
        t: usize,
    },
    /// Generators of the Jacobian ideal.
    Jacobian {
        poly: String,
        #[arg(long, default_value_t = 5)]
        n_vars: usize,
    },
    /// Node test for the points of a configuration.
    VerifyNode {
        config: String,
        /// Only this point.
        #[arg(long)]
        point: Option<usize>,
    },
    /// Evaluation rank of the configuration's points in degree k.
    PointsHilbert { config: String, k: usize },
    /// Defect #points - h_J(2d-5).
    Defect { config: String },
    /// Gorenstein ideal from the hyperplane section of the node ideal.
    Gsection {
        config: String,
        /// Linear form; a seeded general one when omitted.
        #[arg(long)]
        hyperplane: Option<String>,
    },
    /// Bounds, enumeration and filtering with the cited steps.
    Report { d: usize },
}

/// Text and JSON renderings of one result.
struct Out {
    text: String,
    json: Value,
}

impl Out {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Out {
            text: text.into(),
            json,
        }
    }

    fn of<T: Serialize>(text: impl Into<String>, v: &T) -> Self {
        Out::new(text, serde_json::to_value(v).expect("serializable"))
    }
}

fn parse_h(parts: &[String]) -> Result<HVector> {
    HVector::parse(&parts.join(" "))
}

fn load_ideal(arg: &str) -> Result<crate::ideals::GradedIdeal> {
    IdealDoc::parse(&load_text(arg)?)?.ideal()
}

fn rule_config(r2_steps: Option<usize>) -> RuleConfig {
    RuleConfig {
        r2: r2_steps.map_or(R2Mode::Saturate, R2Mode::Steps),
    }
}

fn spaced(h: &HVector) -> String {
    h.values().iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn filter_text(r: &FilterReport, full: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "d = {}", r.d);
    let _ = writeln!(s, "lower bounds: {} sum {} cap {}", r.bounds, r.bounds.sum(), r.cap);
    for v in &r.vectors {
        let _ = writeln!(s, "{} sum {}: {}", v.h, v.sum, v.verdict.as_str());
        if full {
            for line in &v.rule_trace {
                let _ = writeln!(s, "  {line}");
            }
            for c in &v.citations {
                let _ = writeln!(s, "  cite: {c}");
            }
        }
    }
    let _ = writeln!(s, "survivors: {}", r.survivors);
    let _ = write!(s, "conclusion: {}", r.conclusion);
    s
}

fn execute(cli: &Cli) -> Result<Out> {
    let seed = cli.seed;
    Ok(match &cli.command {
        Command::Expand { c, d } => {
            let e = macaulay_expansion(c, *d)?;
            let eps: Vec<String> = e.coefficients().iter().map(ToString::to_string).collect();
            Out::new(
                e.to_string(),
                json!({"C": c.to_string(), "d": d, "eps": eps, "terms": e.binomial_terms()}),
            )
        }
        Command::Grow { c, d } => {
            let g = upper_growth(c, *d)?;
            Out::new(g.to_string(), json!({"C": c.to_string(), "d": d, "growth": g.to_string()}))
        }
        Command::Shadow { c, d } => {
            let s = lower_shadow(c, *d)?;
            let bound = &s.value + u32::from(s.strict);
            Out::new(
                format!("shadow = {}, strict = {}, bound = {bound}", s.value, s.strict),
                json!({"C": c.to_string(), "d": d, "shadow": s.value.to_string(), "strict": s.strict, "bound": bound.to_string()}),
            )
        }
        Command::Oseq { h } => {
            let h = parse_h(h)?;
            let r = is_o_sequence(&h);
            let text = match r.first_violation {
                None => format!("{h} is an O-sequence"),
                Some(i) => format!("{h} is not an O-sequence: first violation at index {i}"),
            };
            Out::of(text, &r)
        }
        Command::Profile { h, d, k } => {
            let v = lower_bound_profile(*h, *d, *k)?;
            Out::new(v.to_string(), json!({"h": h, "d": d, "k": k, "bound": v}))
        }
        Command::Gotzmann { c, d } => {
            let g = gotzmann_polynomial(c, *d)?;
            let p = g.polynomial_string()?;
            Out::new(
                format!("{}\np(t) = {p}\ndimension = {}", g.expansion, g.dimension),
                json!({
                    "C": c.to_string(),
                    "d": d,
                    "eps": g.expansion.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "polynomial": p,
                    "dimension": g.dimension.to_string(),
                }),
            )
        }
        Command::GradedDim { n_vars, k } => {
            if *n_vars == 0 {
                return Err(Error::InvalidArgument("need at least one variable".into()));
            }
            let v = graded_dim(*n_vars, *k);
            Out::new(v.to_string(), json!({"n_vars": n_vars, "k": k, "dim": v}))
        }
        Command::Rank { matrix } => {
            let rows = MatrixDoc::parse(&load_text(matrix)?)?.rows()?;
            let r = exact_rank(&rows);
            Out::new(r.to_string(), json!({"rank": r}))
        }
        Command::Span { ideal, k } => {
            let doc = IdealDoc::parse(&load_text(ideal)?)?;
            let piece = multiply_span(&doc.polys()?, *k, doc.n_vars)?;
            Out::new(
                format!("dim = {} of {}", piece.dim(), piece.ambient_dim()),
                json!({"k": k, "dim": piece.dim(), "ambient": piece.ambient_dim()}),
            )
        }
        Command::Euler { poly, n_vars } => {
            let f = match n_vars {
                Some(n) => Poly::parse(poly, *n)?,
                None => Poly::parse_infer(poly)?,
            };
            let ok = euler_check(&f);
            Out::new(yes(ok), json!({"poly": f.to_string(), "holds": ok}))
        }
        Command::Hilbert { ideal, kmax } => {
            let h = hilbert_function(&load_ideal(ideal)?, *kmax)?;
            Out::new(spaced(&h), json!({"h": h}))
        }
        Command::Section { ideal, linear, kmax } => {
            let i = load_ideal(ideal)?;
            let l = Poly::parse(linear, i.n_vars())?;
            let s = hyperplane_section(&i, &l, *kmax)?;
            let h = hilbert_function(&s.ideal, *kmax)?;
            let mut text = format!("eliminated x{}\nsection h: {}\n", s.eliminated, spaced(&h));
            for c in &s.checks {
                let _ = writeln!(
                    text,
                    "t = {}: section {} difference {} {}",
                    c.degree,
                    c.section_value,
                    c.difference,
                    if c.holds { "ok" } else { "differs" }
                );
            }
            let _ = write!(text, "identity holds: {}", s.identity_holds());
            Out::new(
                text,
                json!({"eliminated": s.eliminated, "h": h, "checks": s.checks, "identity_holds": s.identity_holds()}),
            )
        }
        Command::Bsdim { ideal, t } => {
            let b = base_locus(&load_ideal(ideal)?, *t)?;
            let dim = if b.dimension < 0 {
                "empty".to_string()
            } else {
                b.dimension.to_string()
            };
            Out::of(format!("dim Bs|I_{t}| = {dim} ({:?})", b.certificate), &b)
        }
        Command::Dk { ideal, n } => {
            let p = dk_profile(&load_ideal(ideal)?, *n)?;
            let vals: Vec<String> = p.d_values.iter().map(ToString::to_string).collect();
            Out::of(
                format!(
                    "d_k = ({}), sum {}, lemma check (sum >= N + n + 1): {}",
                    vals.join(","),
                    p.sum,
                    p.lemma_check
                ),
                &p,
            )
        }
        Command::Apolar { functional } => {
            let lambda = FunctionalDoc::parse(&load_text(functional)?)?.functional()?;
            let a = apolar_ideal(&lambda)?;
            Out::new(spaced(&a.h), json!({"degree": lambda.degree(), "h": a.h}))
        }
        Command::Socle { ideal, n } => {
            let r = socle_check(&load_ideal(ideal)?, *n)?;
            let dims: Vec<String> = r.socle_dims.iter().map(ToString::to_string).collect();
            Out::of(format!("socle dims: {}\ngorenstein: {}", dims.join(" "), r.is_gorenstein), &r)
        }
        Command::Symmetric { h } => {
            let h = parse_h(h)?;
            let ok = is_symmetric(&h);
            Out::new(yes(ok), json!({"h": h, "symmetric": ok}))
        }
        Command::Unimodal { h } => {
            let h = parse_h(h)?;
            let ok = is_unimodal(&h);
            Out::new(yes(ok), json!({"h": h, "unimodal": ok}))
        }
        Command::Stanley { h } => {
            let h = parse_h(h)?;
            let v = stanley_admissible(&h);
            Out::new(v.as_str(), json!({"h": h, "verdict": v}))
        }
        Command::CiSeries { degrees } => {
            let h = ci_hilbert_series(degrees)?;
            Out::new(spaced(&h), json!({"degrees": degrees, "h": h}))
        }
        Command::CiSocle { degrees } => {
            let s = ci_socle_degree(degrees)?;
            Out::new(s.to_string(), json!({"degrees": degrees, "socle_degree": s}))
        }
        Command::Tate { ideal } => {
            let doc = IdealDoc::parse(&load_text(ideal)?)?;
            let r = tate_socle_check(&doc.polys()?)?;
            Out::of(
                format!(
                    "determinant: {}\nsocle degree: {}\ndeterminant outside I_N: {}\nholds: {}",
                    r.determinant, r.socle_degree, !r.determinant_in_ideal, r.holds
                ),
                &r,
            )
        }
        Command::Bounds { d } => {
            let b = kloosterman_bounds(*d)?;
            let mut text = format!("{} sum {} cap {} slack {}", b.lower, b.sum, b.cap, b.slack);
            for step in &b.chain {
                let _ = write!(text, "\n{step}");
            }
            Out::of(text, &b)
        }
        Command::Enumerate { d } => {
            let v = enumerate_exceptional(*d)?;
            let text = v.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            Out::new(text, json!({"d": d, "count": v.len(), "vectors": v}))
        }
        Command::Facts { d, h, r2_steps } => {
            let st = derive_facts(&parse_h(h)?, *d, rule_config(*r2_steps))?;
            Out::of(st.trace.join("\n"), &st)
        }
        Command::DegreeArg { d, h, r2_steps } => {
            let st = derive_facts(&parse_h(h)?, *d, rule_config(*r2_steps))?;
            let arg = degree_argument(&st)?;
            Out::of(format!("{}\nverdict: {}", arg.trace.join("\n"), arg.verdict.as_str()), &arg)
        }
        Command::Filter { d, r2_steps } => {
            let r = filter_pipeline(*d, rule_config(*r2_steps))?;
            Out::of(filter_text(&r, false), &r)
        }
        Command::Nodes { h } => {
            let h = parse_h(h)?;
            let n = node_count_bound(&h);
            Out::new(n.to_string(), json!({"h": h, "nodes": n}))
        }
        Command::Rule { rule, ideal, t } => {
            let rule = match rule.as_str() {
                "R2" => Rule::R2,
                "R3" => Rule::R3,
                _ => Rule::R4,
            };
            let c = check_rule(rule, &load_ideal(ideal)?, *t)?;
            let actual = c.actual.map_or("-".to_string(), |a| a.to_string());
            Out::of(
                format!(
                    "{:?} at t = {}: hypothesis {}, predicted dim Bs|I_{}| in [{}, {}], actual {actual}, sound {}",
                    c.rule, c.t, c.hypothesis, c.target_degree, c.predicted_min, c.predicted_max, c.sound
                ),
                &c,
            )
        }
        Command::Jacobian { poly, n_vars } => {
            let j = jacobian_ideal(&Poly::parse(poly, *n_vars)?)?;
            let gens: Vec<String> = j.generators().iter().map(ToString::to_string).collect();
            Out::new(gens.join("\n"), json!({"n_vars": n_vars, "generators": gens}))
        }
        Command::VerifyNode { config, point } => {
            let cfg = NodeConfigDoc::parse(&load_text(config)?)?.config()?;
            let indices: Vec<usize> = match point {
                Some(i) if *i < cfg.points.len() => vec![*i],
                Some(i) => return Err(Error::InvalidArgument(format!("no point {i}"))),
                None => (0..cfg.points.len()).collect(),
            };
            let mut lines = Vec::new();
            let mut checks = Vec::new();
            for i in indices {
                let c = verify_node(&cfg.f, &cfg.points[i])?;
                lines.push(format!(
                    "point {i}: gradient {} chart x{} hessian rank {} node {}",
                    if c.gradient_vanishes { "vanishes" } else { "nonzero" },
                    c.chart,
                    c.hessian_rank,
                    c.is_node
                ));
                checks.push(json!({"point": i, "check": c}));
            }
            Out::new(lines.join("\n"), json!({"checks": checks}))
        }
        Command::PointsHilbert { config, k } => {
            let cfg = NodeConfigDoc::parse(&load_text(config)?)?.config()?;
            let v = points_hilbert(&cfg.points, *k);
            Out::new(v.to_string(), json!({"k": k, "h": v}))
        }
        Command::Defect { config } => {
            let r = defect(&NodeConfigDoc::parse(&load_text(config)?)?.config()?)?;
            Out::of(
                format!(
                    "points: {}\nh_J({}) = {}\ndefect: {}\n{}\ncaveat: {}",
                    r.n_points, r.degree, r.h_j, r.defect, r.verdict, r.caveat
                ),
                &r,
            )
        }
        Command::Gsection { config, hyperplane } => {
            let cfg = NodeConfigDoc::parse(&load_text(config)?)?.config()?;
            let n = cfg.f.n_vars();
            let l = match hyperplane {
                Some(s) => Poly::parse(s, n)?,
                None => general_hyperplane(&cfg.points, n, seed),
            };
            let g = gorenstein_section(&cfg.points, cfg.d, &l, seed)?;
            let text = format!(
                "hyperplane: {l}\nh_Jbar: {}\nh_I: {}\ncontains Jbar: {}\nsymmetric: {}\ngorenstein: {}",
                spaced(&g.h_jbar),
                spaced(&g.h),
                g.contains_jbar,
                g.symmetric,
                g.socle.is_gorenstein
            );
            Out::new(
                text,
                json!({
                    "hyperplane": l.to_string(),
                    "socle_degree": g.socle_degree,
                    "h_jbar": g.h_jbar,
                    "h": g.h,
                    "contains_jbar": g.contains_jbar,
                    "symmetric": g.symmetric,
                    "socle": g.socle,
                    "functional": FunctionalDoc::of(&g.lambda),
                }),
            )
        }
        Command::Report { d } => {
            let b = kloosterman_bounds(*d)?;
            let r = filter_pipeline(*d, RuleConfig::default())?;
            let mut text = format!("bounds: {} sum {} cap {}\n", b.lower, b.sum, b.cap);
            let _ = writeln!(text, "exceptional h-vectors: {}", r.vectors.len());
            text.push_str(&filter_text(&r, true));
            for c in r.citations.iter().chain(&r.notes) {
                let _ = write!(text, "\n{c}");
            }
            Out::new(text, json!({"bounds": b, "filter": r}))
        }
    })
}

/// Exit status for an error: 2 for indeterminate computations, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Indeterminate(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&o.json).expect("json value")
            } else {
                o.text
            };
            let _ = writeln!(out, "{body}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
