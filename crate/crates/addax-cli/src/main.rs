//! `addax`: exact computations with local algebras, H-pairs and the
//! hypersurfaces their additive actions cut out.
//!
//! Exit codes: 0 success, 1 mathematical rejection (invalid pair,
//! non-local quotient, failed verification), 2 input error.

use addax_core::algebra::{AlgebraError, LocalAlgebra, QElement};
use addax_core::exec::ExecMode;
use addax_core::groebner::{self, CompletedBasis, GroebnerError, TermOrder};
use addax_core::hpair::{FiniteOrbitCertificate, HPair, HPairError, HypersurfaceEquation};
use addax_core::linalg::Subspace;
use addax_core::orbits::{self, OrbitError, OrbitReport};
use addax_core::rat::{format_rat, parse_rat};
use addax_core::verify;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "addax",
    version,
    about = "Local algebras, H-pairs and hypersurfaces with additive actions",
    propagate_version = true
)]
struct Cli {
    /// Pretty-print the JSON output
    #[arg(long, global = true)]
    pretty: bool,
    /// Compact JSON output (the default; kept as an explicit flag)
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Algebra presentation, e.g. "Q[x]/(x^4)"
    #[arg(value_name = "PRESENTATION")]
    input: Option<String>,
    /// Structure-constant JSON file instead of a presentation
    #[arg(long, value_name = "FILE", conflicts_with = "input")]
    table: Option<std::path::PathBuf>,
    /// Monomial order: grlex | grevlex | lex, with optional -rev suffix
    #[arg(long, default_value = "grlex")]
    order: String,
    /// Buchberger processed-pair cap
    #[arg(long, default_value_t = groebner::DEFAULT_PAIR_CAP)]
    pair_cap: usize,
}

#[derive(Args, Clone)]
struct PairArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Basis of U: element expressions ("x, x^3") or coordinate vectors
    /// ("[0,1,0,0],[0,0,1,0]")
    #[arg(long = "U", value_name = "ELEMS", allow_hyphen_values = true)]
    u: String,
}

#[derive(Subcommand, Clone)]
enum Cmd {
    /// Local-algebra reports
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// H-pair analysis
    Hpair {
        #[command(subcommand)]
        cmd: HpairCmd,
    },
    /// Orbit structure on the hypersurface
    Orbits {
        #[command(subcommand)]
        cmd: OrbitsCmd,
    },
    /// Check the eight classified equations against their H-pairs
    #[command(name = "verify-table1")]
    VerifyTable1 {
        /// Largest chain order to include
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Run the cross-module property suites
    #[command(name = "verify-invariants")]
    VerifyInvariants(VerifyInvariantsArgs),
    // Flattened aliases mirroring the subcommand forms.
    #[command(name = "algebra-info", hide = true)]
    AlgebraInfo(InputArgs),
    #[command(name = "hpair-equation", hide = true)]
    HpairEquation(PairArgs),
    #[command(name = "hpair-degree", hide = true)]
    HpairDegree(PairArgs),
    #[command(name = "hpair-classify", hide = true)]
    HpairClassify(PairArgs),
    #[command(name = "hpair-normality", hide = true)]
    HpairNormality(PairArgs),
    #[command(name = "hpair-smooth", hide = true)]
    HpairSmooth(PairArgs),
    #[command(name = "hpair-dual", hide = true)]
    HpairDual(PairArgs),
    #[command(name = "hpair-reduce", hide = true)]
    HpairReduce(PairArgs),
    #[command(name = "orbits-report", hide = true)]
    OrbitsReport(PairArgs),
    #[command(name = "orbits-poset", hide = true)]
    OrbitsPoset(PairArgs),
    #[command(name = "orbits-op-check", hide = true)]
    OrbitsOpCheck(PairArgs),
}

#[derive(Subcommand, Clone)]
enum AlgebraCmd {
    /// Dimension, Hilbert-Samuel sequence, socle, classification
    Info(InputArgs),
}

#[derive(Subcommand, Clone)]
enum HpairCmd {
    /// Defining equation and its layers
    Equation(PairArgs),
    /// Hypersurface degree
    Degree(PairArgs),
    /// Finite-orbit decision with certificate
    Classify(PairArgs),
    /// Normality via layer coprimality (both conventions)
    Normality(PairArgs),
    /// Smoothness test
    Smooth(PairArgs),
    /// The second induced action on a degenerate chain hypersurface
    Dual(PairArgs),
    /// Quotient by the largest ideal inside U
    Reduce(PairArgs),
}

#[derive(Subcommand, Clone)]
enum OrbitsCmd {
    /// Orbit reports for the standard representatives
    Report(PairArgs),
    /// Orbit poset with closure relations
    Poset(PairArgs),
    /// One-parameter subgroup reachability table
    #[command(name = "op-check")]
    OpCheck(PairArgs),
}

#[derive(Args, Clone)]
struct VerifyInvariantsArgs {
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// exp/log roundtrips per algebra
    #[arg(long, default_value_t = 1000)]
    exp_log_samples: usize,
    /// limit-point samples per pair
    #[arg(long, default_value_t = 50)]
    limit_samples: usize,
    /// Run single-threaded
    #[arg(long)]
    sequential: bool,
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn math(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<HPairError> for CliError {
    fn from(e: HPairError) -> Self {
        CliError::math(e.to_string())
    }
}

impl From<OrbitError> for CliError {
    fn from(e: OrbitError) -> Self {
        CliError::math(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match run(cli.cmd) {
        Ok((value, code)) => {
            let rendered = if pretty {
                serde_json::to_string_pretty(&value).expect("serializable")
            } else {
                value.to_string()
            };
            println!("{rendered}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}

fn run(cmd: Cmd) -> Result<(Value, i32), CliError> {
    match cmd {
        Cmd::Algebra {
            cmd: AlgebraCmd::Info(args),
        }
        | Cmd::AlgebraInfo(args) => algebra_info(&args),
        Cmd::Hpair { cmd } => match cmd {
            HpairCmd::Equation(a) => hpair_equation(&a),
            HpairCmd::Degree(a) => hpair_degree(&a),
            HpairCmd::Classify(a) => hpair_classify(&a),
            HpairCmd::Normality(a) => hpair_normality(&a),
            HpairCmd::Smooth(a) => hpair_smooth(&a),
            HpairCmd::Dual(a) => hpair_dual(&a),
            HpairCmd::Reduce(a) => hpair_reduce(&a),
        },
        Cmd::HpairEquation(a) => hpair_equation(&a),
        Cmd::HpairDegree(a) => hpair_degree(&a),
        Cmd::HpairClassify(a) => hpair_classify(&a),
        Cmd::HpairNormality(a) => hpair_normality(&a),
        Cmd::HpairSmooth(a) => hpair_smooth(&a),
        Cmd::HpairDual(a) => hpair_dual(&a),
        Cmd::HpairReduce(a) => hpair_reduce(&a),
        Cmd::Orbits { cmd } => match cmd {
            OrbitsCmd::Report(a) => orbits_report(&a),
            OrbitsCmd::Poset(a) => orbits_poset(&a),
            OrbitsCmd::OpCheck(a) => orbits_op_check(&a),
        },
        Cmd::OrbitsReport(a) => orbits_report(&a),
        Cmd::OrbitsPoset(a) => orbits_poset(&a),
        Cmd::OrbitsOpCheck(a) => orbits_op_check(&a),
        Cmd::VerifyTable1 { max_n } => verify_table1(max_n),
        Cmd::VerifyInvariants(args) => verify_invariants(&args),
    }
}

fn schema_report(command: &str) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!("addax/1"));
    m.insert("command".into(), json!(command));
    m
}

fn load_algebra(args: &InputArgs) -> Result<(LocalAlgebra, Option<CompletedBasis>), CliError> {
    if let Some(path) = &args.table {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        let value: Value = serde_json::from_str(&text)
            .map_err(|e| CliError::input(format!("invalid JSON in {}: {e}", path.display())))?;
        let alg = LocalAlgebra::from_table_json(&value).map_err(|e| match e {
            AlgebraError::BadJson(_) => CliError::input(e.to_string()),
            other => CliError::math(other.to_string()),
        })?;
        let violations = alg.validate();
        if !violations.is_empty() {
            return Err(CliError::math(format!(
                "structure table violates algebra axioms: {}",
                violations.join("; ")
            )));
        }
        return Ok((alg, None));
    }
    let Some(text) = &args.input else {
        return Err(CliError::input(
            "provide a presentation string or --table FILE",
        ));
    };
    let order: TermOrder = args
        .order
        .parse()
        .map_err(|e: GroebnerError| CliError::input(e.to_string()))?;
    let pres =
        addax_core::parse::parse_presentation(text).map_err(|e| CliError::input(e.to_string()))?;
    let cb = groebner::complete(&pres, order, args.pair_cap).map_err(|e| match e {
        GroebnerError::ZeroGenerator(_) => CliError::input(e.to_string()),
        other => CliError::math(other.to_string()),
    })?;
    let alg = cb
        .quotient_algebra()
        .map_err(|e| CliError::math(e.to_string()))?;
    Ok((alg, Some(cb)))
}

fn parse_u(alg: &LocalAlgebra, text: &str) -> Result<Subspace, CliError> {
    let parts = addax_core::parse::split_top_level(text);
    if parts.is_empty() {
        return Err(CliError::input("--U must list at least one element"));
    }
    let mut vecs = Vec::new();
    for part in parts {
        if part.starts_with('[') {
            let inner = part
                .strip_prefix('[')
                .and_then(|p| p.strip_suffix(']'))
                .ok_or_else(|| CliError::input(format!("malformed vector {part:?}")))?;
            let coords: Vec<_> = inner
                .split(',')
                .map(|c| parse_rat(c.trim()).map_err(CliError::input))
                .collect::<Result<_, _>>()?;
            if coords.len() != alg.dim() {
                return Err(CliError::input(format!(
                    "vector {part:?} has {} coordinates, algebra has dimension {}",
                    coords.len(),
                    alg.dim()
                )));
            }
            vecs.push(coords);
        } else {
            let elem = alg
                .parse_element(&part)
                .map_err(|e| CliError::input(e.to_string()))?;
            vecs.push(elem.coords);
        }
    }
    Ok(Subspace::from_vectors(alg.dim(), vecs))
}

fn load_pair(args: &PairArgs) -> Result<HPair, CliError> {
    let (alg, _) = load_algebra(&args.input)?;
    let u = parse_u(&alg, &args.u)?;
    Ok(HPair::new(alg, u)?)
}

fn coords_json(coords: &[addax_core::Rat]) -> Value {
    Value::Array(coords.iter().map(|c| json!(format_rat(c))).collect())
}

fn subspace_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| coords_json(v)).collect())
}

fn element_json(e: &QElement) -> Value {
    coords_json(&e.coords)
}

fn equation_json(eq: &HypersurfaceEquation) -> (Value, Value, Value) {
    let layers: Vec<Value> = eq
        .layers
        .iter()
        .enumerate()
        .map(|(k, f)| json!({"k": k + 1, "poly": f.to_pretty_string()}))
        .collect();
    (
        json!(eq.poly.to_pretty_string()),
        eq.poly.to_json_terms(),
        Value::Array(layers),
    )
}

fn algebra_info(args: &InputArgs) -> Result<(Value, i32), CliError> {
    let (alg, _) = load_algebra(args)?;
    let mut out = schema_report("algebra-info");
    out.insert("dim".into(), json!(alg.dim()));
    out.insert("basis".into(), json!(alg.basis_names()));
    out.insert("hilbert_samuel".into(), json!(alg.hilbert_samuel()));
    out.insert("socle_dim".into(), json!(alg.socle().dim()));
    out.insert("nilpotency_index".into(), json!(alg.nilpotency_index()));
    out.insert("classification".into(), json!(alg.classify().to_string()));
    Ok((Value::Object(out), 0))
}

fn hpair_equation(args: &PairArgs) -> Result<(Value, i32), CliError> {
    let h = load_pair(args)?;
    let eq = h.equation();
    let (pretty, terms, layers) = equation_json(&eq);
    let mut out = schema_report("hpair-equation");
    out.insert("degree".into(), json!(eq.degree));
    out.insert("equation".into(), pretty);
    out.insert("terms".into(), terms);
    out.insert("layers".into(), layers);
    Ok((Value::Object(out), 0))
}

fn hpair_degree(args: &PairArgs) -> Result<(Value, i32), CliError> {
    let h = load_pair(args)?;
    let mut out = schema_report("hpair-degree");
    out.insert("degree".into(), json!(h.degree()));
    Ok((Value::Object(out), 0))
}

fn hpair_classify(args: &PairArgs) -> Result<(Value, i32), CliError> {
    let h = load_pair(args)?;
    let decision = h.finite_orbits()?;
    let mut out = schema_report("hpair-classify");
    out.insert(
        "classification".into(),
        json!(h.algebra().classify().to_string()),
    );
    out.insert("finite_orbits".into(), json!(decision.finite));
    out.insert(
        "certificate".into(),
        json!(decision.certificate.to_string()),
    );
    if let FiniteOrbitCertificate::ChainCanonical { index, .. }
    | FiniteOrbitCertificate::ChainIndexTooSmall { index, .. } = decision.certificate
    {
        out.insert("canonical_index".into(), json!(index));
    }
    Ok((Value::Object(out), 0))
}

fn hpair_normality(args: &PairArgs) -> Result<(Value, i32), CliError> {
    let h = load_pair(args)?;
    let rep = h.normality();
    let mut out = schema_report("hpair-normality");
    out.insert("degree".into(), json!(h.degree()));
    out.insert("normal".into(), json!(rep.normal));
    out.insert(
        "normal_by_squarefree".into(),
        json!(rep.normal_by_squarefree),
    );
    out.insert("conventions_agree".into(), json!(rep.conventions_agree()));
    out.insert(
        "gcd_radical_once".into(),
        json!(rep.gcd_radical_once.to_pretty_string()),
    );
    out.insert(
        "gcd_squarefree".into(),
        json!(rep.gcd_squarefree.to_pretty_string()),
    );
    Ok((Value::Object(out), 0))
}

fn hpair_smooth(args: &PairArgs) -> Result<(Value, i32), CliError> {
    let h = load_pair(args)?;
    let mut out = schema_report("hpair-smooth");
    out.insert("degree".into(), json!(h.degree()));
    out.insert("smooth".into(), json!(h.is_smooth()));
    out.insert(
        "nondegenerate_algebraic".into(),
        json!(h.is_nondegenerate_algebraic()),
    );
    out.insert(
        "nondegenerate_equation".into(),
        json!(h.is_nondegenerate_equation()),
    );
    Ok((Value::Object(out), 0))
}

fn hpair_dual(args: &PairArgs) -> Result<(Value, i32), CliError> {
    let h = load_pair(args)?;
    let dual = h.dual_hpair()?;
    let eq = dual.equation();
    let decision = dual.finite_orbits()?;
    let (pretty, terms, _) = equation_json(&eq);
    let mut out = schema_report("hpair-dual");
    out.insert("dual_algebra".into(), dual.algebra().to_table_json());
    out.insert("dual_u".into(), subspace_json(dual.u()));
    out.insert("degree".into(), json!(eq.degree));
    out.insert("equation".into(), pretty);
    out.insert("terms".into(), terms);
    out.insert("finite_orbits".into(), json!(decision.finite));
    out.insert(
        "certificate".into(),
        json!(decision.certificate.to_string()),
    );
    Ok((Value::Object(out), 0))
}

fn hpair_reduce(args: &PairArgs) -> Result<(Value, i32), CliError> {
    let h = load_pair(args)?;
    let (reduced, kernel) = h.reduce_by_kernel()?;
    let eq = reduced.equation();
    let (pretty, terms, _) = equation_json(&eq);
    let mut out = schema_report("hpair-reduce");
    out.insert("kernel_ideal".into(), subspace_json(&kernel));
    out.insert("quotient_algebra".into(), reduced.algebra().to_table_json());
    out.insert("quotient_u".into(), subspace_json(reduced.u()));
    out.insert("degree".into(), json!(eq.degree));
    out.insert("equation".into(), pretty);
    out.insert("terms".into(), terms);
    out.insert(
        "nondegenerate".into(),
        json!(reduced.is_nondegenerate_algebraic()),
    );
    Ok((Value::Object(out), 0))
}

fn orbit_report_json(r: &OrbitReport) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("representative".into(), element_json(&r.representative));
    obj.insert("dimension".into(), json!(r.dimension));
    obj.insert("kind".into(), json!(r.kind.to_string()));
    obj.insert("annihilator_dim".into(), json!(r.annihilator.dim()));
    obj.insert("annihilator".into(), subspace_json(&r.annihilator));
    if r.kind == addax_core::orbits::OrbitKind::InfiniteFiber {
        obj.insert(
            "note".into(),
            json!("infinitely many U-orbits inside this ideal orbit"),
        );
    }
    Value::Object(obj)
}

fn orbits_report(args: &PairArgs) -> Result<(Value, i32), CliError> {
    let h = load_pair(args)?;
    let classified = orbits::standard_representatives(&h).is_ok();
    let mut reports = vec![orbits::orbit_report(&h, &h.algebra().unit_element())?];
    for rep in orbits::sampled_representatives(&h) {
        reports.push(orbits::orbit_report(&h, &rep)?);
    }
    let fixed = orbits::fixed_points(&h);
    let mut out = schema_report("orbits-report");
    out.insert(
        "orbits".into(),
        Value::Array(reports.iter().map(orbit_report_json).collect()),
    );
    out.insert(
        "fixed_locus".into(),
        json!({
            "socle": subspace_json(&fixed.socle),
            "projective_dimension": fixed.projective_dimension,
            "forces_infinitely_many_orbits": fixed.forces_infinitely_many_orbits,
        }),
    );
    if !classified {
        out.insert(
            "note".into(),
            json!(
                "representatives sampled from ideal basis combinations; \
                   infinite families appear through single members"
            ),
        );
    }
    Ok((Value::Object(out), 0))
}

fn orbits_poset(args: &PairArgs) -> Result<(Value, i32), CliError> {
    let h = load_pair(args)?;
    let poset = orbits::orbit_poset(&h)?;
    let mut out = schema_report("orbits-poset");
    out.insert(
        "orbits".into(),
        Value::Array(poset.reports.iter().map(orbit_report_json).collect()),
    );
    out.insert(
        "closure_relations".into(),
        Value::Array(
            poset
                .closure_relations
                .iter()
                .map(|&(i, j)| json!([i, j]))
                .collect(),
        ),
    );
    Ok((Value::Object(out), 0))
}

fn orbits_op_check(args: &PairArgs) -> Result<(Value, i32), CliError> {
    let h = load_pair(args)?;
    let report = orbits::op_condition_report(&h)?;
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            let witness = e.witness.as_ref().map(|(s, u, limit)| {
                json!({
                    "s": element_json(s),
                    "base": element_json(u),
                    "limit": element_json(limit),
                })
            });
            json!({
                "representative": element_json(&e.representative),
                "dimension": e.dimension,
                "reached": e.reached,
                "witness": witness,
            })
        })
        .collect();
    let mut out = schema_report("orbits-op-check");
    out.insert("orbits".into(), Value::Array(entries));
    out.insert("all_reached".into(), json!(report.all_reached));
    out.insert(
        "note".into(),
        json!(
            "search over single-generator subgroups and a rational base grid; \
               'reached: false' means not reached under this search"
        ),
    );
    Ok((Value::Object(out), 0))
}

fn verify_table1(max_n: usize) -> Result<(Value, i32), CliError> {
    let rows = verify::table1_rows(max_n);
    let matched = rows.iter().filter(|r| r.matched).count();
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "hypersurface_dim": r.hypersurface_dim,
                "description": r.description,
                "expected": r.expected.to_pretty_string(),
                "computed": r.computed.to_pretty_string(),
                "matched": r.matched,
            })
        })
        .collect();
    let mut out = schema_report("verify-table1");
    out.insert("rows".into(), Value::Array(json_rows));
    out.insert("matched".into(), json!(matched));
    out.insert("total".into(), json!(rows.len()));
    out.insert(
        "summary".into(),
        json!(format!("{matched}/{} rows matched", rows.len())),
    );
    let code = if matched == rows.len() { 0 } else { 1 };
    Ok((Value::Object(out), code))
}

fn verify_invariants(args: &VerifyInvariantsArgs) -> Result<(Value, i32), CliError> {
    let mode = if args.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::default()
    };
    let report = verify::verify_invariants(
        args.max_n,
        args.seed,
        args.exp_log_samples,
        args.limit_samples,
        mode,
    );
    let suites: Vec<Value> = report
        .suites
        .iter()
        .map(|s| {
            json!({
                "name": s.name,
                "runs": s.runs,
                "failures": s.failures,
                "notes": s.notes,
            })
        })
        .collect();
    let mut out = schema_report("verify-invariants");
    out.insert("suites".into(), Value::Array(suites));
    out.insert("ok".into(), json!(report.ok()));
    out.insert("seed".into(), json!(report.seed));
    out.insert("max_n".into(), json!(report.max_n));
    let code = if report.ok() { 0 } else { 1 };
    Ok((Value::Object(out), code))
}
