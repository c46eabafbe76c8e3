use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use taupoly::checks::{self, golden, Check, Suite, SuiteOptions};
use taupoly::dpoly::{self, AlgebraFamily, AlgebraSpec};
use taupoly::hereditary::{self, OrientedQuiver, PolyKind};
use taupoly::series::identities::{self, IdentityReport};
use taupoly::weyl::{self, Options};
use taupoly::{lattice, DiagramUnion, DynkinDiagram, Error, Family, Polynomial};

/// d-, f- and h-polynomials of Dynkin path algebras and preprojective
/// algebras, with brute-force cross-checks.
#[derive(Parser)]
#[command(name = "taupoly", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    D,
    F,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Preprojective,
    Ppa,
    Path,
}

impl From<FamilyArg> for AlgebraFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Preprojective | FamilyArg::Ppa => AlgebraFamily::Preprojective,
            FamilyArg::Path => AlgebraFamily::Path,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Series {
    ExpHPpaA,
    ExpDPpaA,
    OrdHPathA,
    OrdDPathA,
}

#[derive(Subcommand)]
enum Command {
    /// d-, f- or h-polynomial of an algebra.
    Poly {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Diagram such as A5, D6, E7 or A2xA1.
        #[arg(long)]
        diagram: String,
        #[arg(long, value_enum, default_value_t = Kind::D)]
        kind: Kind,
        /// Also compare against the printed tables and closed forms.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        enable_e8: bool,
    },
    /// One of the six d-tables, rows n and columns d_j.
    Table { n: usize },
    /// Leading and constant d-coefficients with their closed forms.
    Aggregates {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        diagram: String,
    },
    /// Eul(Q; t) by descent counting.
    Eulerian {
        diagram: String,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        enable_e8: bool,
    },
    /// Cat(Q; t) by absolute length on noncrossing partitions.
    Narayana {
        diagram: String,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        enable_e8: bool,
    },
    /// Dim([e_l Pi]_s) for preprojective algebras of type A or D.
    DimOrbit {
        #[arg(long, value_enum, default_value_t = FamilyArg::Ppa)]
        family: FamilyArg,
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        rank: usize,
        /// Vertex label; omitted means the sum over all vertices.
        #[arg(long, allow_negative_numbers = true)]
        vertex: Option<i32>,
        /// Sum areas of lattice paths instead of using the closed form.
        #[arg(long)]
        oracle: bool,
    },
    /// Brute-force computations on the module category of a path algebra.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Truncated generating functions of type-A families.
    Genfun {
        #[arg(value_enum)]
        series: Series,
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// Also check the matching differential equation and closed forms.
        #[arg(long)]
        verify: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, default_value_t = 7)]
        max_rank: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// f/h/d-polynomial of kQ from its tau-rigid pair complex.
    Path {
        #[arg(long = "type", default_value = "A")]
        ty: String,
        #[arg(long)]
        rank: usize,
        /// One character per edge, `+` for i -> i+1 and `-` for i+1 -> i.
        #[arg(long)]
        orientation: Option<String>,
        #[arg(long, value_enum, default_value_t = Kind::D)]
        kind: Kind,
    },
    /// Total dimension of the tau-orbit of a projective.
    TauOrbit {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        vertex: i32,
    },
}

enum Failure {
    Usage(String),
    Disabled(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::FeatureDisabled(_) => Failure::Disabled(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

/// What a command printed: a result value, a plain rendering, CSV lines and
/// checks.
struct Output {
    result: Value,
    plain: String,
    csv: String,
    checks: Vec<Check>,
}

impl Output {
    fn poly(p: &Polynomial) -> Self {
        let coeffs = coeff_strings(p);
        Output { result: json!(coeffs), plain: p.to_string(), csv: coeffs.join(","), checks: Vec::new() }
    }

    fn integer(x: &BigInt) -> Self {
        Output { result: json!(x.to_string()), plain: x.to_string(), csv: x.to_string(), checks: Vec::new() }
    }
}

/// Ascending coefficients as decimal strings; the zero polynomial is `["0"]`.
fn coeff_strings(p: &Polynomial) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn diagram(s: &str) -> Result<DiagramUnion, Failure> {
    Ok(s.parse::<DiagramUnion>()?)
}

fn connected(s: &str) -> Result<DynkinDiagram, Failure> {
    Ok(s.parse::<DynkinDiagram>()?)
}

fn poly_of(spec: &AlgebraSpec, kind: Kind, opts: &Options) -> Result<Polynomial, Failure> {
    Ok(match kind {
        Kind::D => dpoly::d_polynomial(spec)?,
        Kind::F => dpoly::f_polynomial_with(spec, opts)?,
        Kind::H => dpoly::h_polynomial_with(spec, opts)?,
    })
}

fn poly_checks(spec: &AlgebraSpec, kind: Kind, p: &Polynomial) -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    let [d] = spec.diagram.components() else {
        return Ok(out);
    };
    let n = d.rank();
    match kind {
        Kind::D => {
            for k in 1..=6 {
                let (fam, ds) = dpoly::table_layout(k).expect("table");
                if fam == spec.family && ds.contains(d) {
                    let table = golden::corrected_table(k);
                    let row = &table.iter().find(|(m, _)| *m == n).expect("row").1;
                    out.push(Check::eq(format!("table-{k}-row-{n}"), golden::row_poly(row), p.clone()));
                }
            }
            let s = p.substitute_shift(&BigInt::from(-1));
            out.push(Check::holds("d(t-1)", "palindromic and unimodal", s.is_palindromic(n - 1) && s.is_unimodal()));
            out.extend(aggregate_checks(spec.family, *d)?);
        }
        Kind::F | Kind::H => {
            let h = if matches!(kind, Kind::F) { p.substitute_shift(&BigInt::from(-1)) } else { p.clone() };
            out.push(Check::holds("h", "palindromic", h.is_palindromic(n)));
        }
    }
    Ok(out)
}

fn aggregate_checks(family: AlgebraFamily, d: DynkinDiagram) -> Result<Vec<Check>, Failure> {
    let (d0, dn) = dpoly::aggregate_dims(&AlgebraSpec::new(family, d))?;
    let (c0, cn) = dpoly::aggregate_closed_forms(family, d);
    let mut out = Vec::new();
    if let Some(c0) = c0 {
        out.push(Check::eq("irigid-closed-form", c0, d0.clone()));
    }
    if family == AlgebraFamily::Path && d.family() == Family::D {
        out.push(Check::eq("irigid-projective-dims", dpoly::path_d_irigid(d.rank()), d0));
    }
    if let Some(cn) = cn {
        out.push(Check::eq("stilt-closed-form", cn, dn.clone()));
    }
    out.push(Check::eq("stilt-group-orders", dpoly::stilt_from_group_orders(family, d)?, dn));
    Ok(out)
}

fn identity_checks(reports: Vec<IdentityReport>) -> Vec<Check> {
    reports
        .into_iter()
        .map(|r| Check {
            name: r.identity,
            expected: format!("equal through z^{}", r.order),
            actual: r.first_failure.map_or(format!("equal through z^{}", r.order), |k| format!("differs at z^{k}")),
            pass: r.pass,
        })
        .collect()
}

fn run(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Poly { family, diagram: s, kind, verify, enable_e8 } => {
            let spec = AlgebraSpec::new(AlgebraFamily::from(*family), diagram(s)?);
            let opts = Options { enable_e8: *enable_e8, ..Options::default() };
            let p = poly_of(&spec, *kind, &opts)?;
            let mut out = Output::poly(&p);
            if *verify {
                out.checks = poly_checks(&spec, *kind, &p)?;
            }
            Ok(out)
        }
        Command::Table { n } => {
            let rows = dpoly::reproduce_table(*n)?;
            let width = rows.iter().map(|(_, r)| r.len()).max().unwrap_or(0);
            let mut csv = vec![std::iter::once("n".to_string()).chain((0..width).map(|j| format!("j{j}"))).collect::<Vec<_>>().join(",")];
            let mut plain = Vec::new();
            let mut result = Vec::new();
            for (m, row) in &rows {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                csv.push(format!("{m},{}", cells.join(",")));
                plain.push(format!("{m}: {}", cells.join(" ")));
                result.push(json!({"n": m, "d": cells}));
            }
            Ok(Output { result: json!(result), plain: plain.join("\n"), csv: csv.join("\n"), checks: Vec::new() })
        }
        Command::Aggregates { family, diagram: s } => {
            let fam = AlgebraFamily::from(*family);
            let d = connected(s)?;
            let (d0, dn) = dpoly::aggregate_dims(&AlgebraSpec::new(fam, d))?;
            Ok(Output {
                result: json!({"irigid": d0.to_string(), "stilt": dn.to_string()}),
                plain: format!("irigid {d0}\nstilt {dn}"),
                csv: format!("irigid,stilt\n{d0},{dn}"),
                checks: aggregate_checks(fam, d)?,
            })
        }
        Command::Eulerian { diagram: s, oracle, enable_e8 } => {
            let opts = Options { enable_e8: *enable_e8, oracle: *oracle };
            Ok(Output::poly(&weyl::eulerian_poly_with(&diagram(s)?, &opts)?))
        }
        Command::Narayana { diagram: s, oracle, enable_e8 } => {
            let opts = Options { enable_e8: *enable_e8, oracle: *oracle };
            Ok(Output::poly(&weyl::narayana_poly_with(&diagram(s)?, &opts)?))
        }
        Command::DimOrbit { family, ty, rank, vertex, oracle } => {
            if AlgebraFamily::from(*family) != AlgebraFamily::Preprojective {
                return Err(Failure::Usage("dim-orbit is defined for --family ppa".into()));
            }
            let d: DynkinDiagram = format!("{ty}{rank}").parse()?;
            let labels = match vertex {
                Some(l) => vec![*l],
                None => d.labels(),
            };
            let mut total = BigInt::from(0);
            for l in labels {
                d.index_of(l)?;
                total += dim_orbit(d, l, *oracle)?;
            }
            Ok(Output::integer(&total))
        }
        Command::Oracle { which: OracleCommand::Path { ty, rank, orientation, kind } } => {
            if !ty.eq_ignore_ascii_case("a") {
                return Err(Failure::Usage("the tau-rigid complex is built for type A only".into()));
            }
            let q = match orientation {
                Some(o) => OrientedQuiver::type_a(*rank, o)?,
                None => OrientedQuiver::linear_a(*rank),
            };
            let c = hereditary::tau_rigid_complex(&q)?;
            let pk = match kind {
                Kind::D => PolyKind::D,
                Kind::F => PolyKind::F,
                Kind::H => PolyKind::H,
            };
            let p = hereditary::poly_from_complex(&c, pk);
            let mut out = Output::poly(&p);
            let formula = poly_of(&AlgebraSpec::path(DynkinDiagram::a(*rank)), *kind, &Options::default())?;
            out.checks.push(Check::eq("formula", formula, p));
            Ok(out)
        }
        Command::Oracle { which: OracleCommand::TauOrbit { ty, vertex } } => {
            let d = connected(ty)?;
            let i = d.index_of(*vertex)?;
            let q = OrientedQuiver::from_diagram(d);
            let dim = hereditary::tau_orbit_dim(&q, i);
            let mut out = Output::integer(&BigInt::from(dim));
            if d.family() == Family::E {
                let want = dpoly::EDimTable::projective_dims(d.rank())[i];
                out.checks.push(Check::eq("printed-dim", want, dim));
            }
            Ok(out)
        }
        Command::Genfun { series, order, verify } => {
            if *order > 14 {
                return Err(Failure::Usage("--order is at most 14".into()));
            }
            let polys = (0..=*order)
                .map(|n| genfun_term(*series, n.saturating_sub(1)))
                .collect::<Result<Vec<_>, _>>()?;
            let coeffs: Vec<Vec<String>> = polys.iter().map(coeff_strings).collect();
            let plain = polys.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n");
            let csv = coeffs.iter().map(|c| c.join(",")).collect::<Vec<_>>().join("\n");
            let checks = if *verify { identity_checks(genfun_identities(*series, *order)?) } else { Vec::new() };
            Ok(Output { result: json!(coeffs), plain, csv, checks })
        }
        Command::Verify { suite, order, max_rank } => {
            let suite: Suite = suite.parse().map_err(|_| Failure::Usage(format!("unknown suite {suite}")))?;
            let checks = checks::run(suite, &SuiteOptions { order: *order, max_rank: *max_rank })?;
            let passed = checks.iter().filter(|c| c.pass).count();
            let summary = format!("{passed}/{} checks passed", checks.len());
            Ok(Output { result: json!(summary), plain: summary.clone(), csv: summary, checks })
        }
    }
}

fn dim_orbit(d: DynkinDiagram, l: i32, oracle: bool) -> Result<BigInt, Failure> {
    let n = d.rank();
    Ok(match (d.family(), oracle) {
        (Family::A, false) => lattice::dim_orbit_ppa_a(n, l as usize)?,
        (Family::A, true) => BigInt::from(lattice::dim_orbit_ppa_a_oracle(n, l as usize)?.0),
        (Family::D, false) => lattice::dim_orbit_ppa_d(n, l)?,
        (Family::D, true) if l.abs() == 1 => BigInt::from(lattice::dim_orbit_ppa_d_oracle_pm1(n).0),
        (Family::D, true) => BigInt::from(lattice::dim_orbit_ppa_d_oracle_mid(n, l as usize)?.0),
        (Family::E, _) => return Err(Failure::Usage("dim-orbit covers types A and D".into())),
    })
}

/// The `z^n` term (before dividing by `n!`) of each series, at rank `k = n-1`.
fn genfun_term(series: Series, k: usize) -> Result<Polynomial, Failure> {
    let u = DiagramUnion::type_a(k);
    Ok(match series {
        Series::ExpHPpaA => weyl::eulerian_poly(&u)?,
        Series::ExpDPpaA => dpoly::d_polynomial(&AlgebraSpec::preprojective(u))?,
        Series::OrdHPathA => weyl::narayana_type_a(k),
        Series::OrdDPathA => dpoly::d_polynomial(&AlgebraSpec::path(u))?,
    })
}

fn genfun_identities(series: Series, order: usize) -> Result<Vec<IdentityReport>, Failure> {
    let order = order.max(1);
    Ok(match series {
        Series::ExpHPpaA => vec![identities::euler_ode(order)?, identities::euler_closed_form(order)?],
        Series::ExpDPpaA => vec![
            identities::dpoly_genfun_ppa(order)?,
            identities::dpoly_closed_form_ppa(order)?,
            identities::dpoly_closed_form_ppa_shifted(order)?,
            identities::dpoly_closed_forms_agree(order),
        ],
        Series::OrdHPathA => {
            vec![identities::narayana_quadratic(order)?, identities::narayana_discriminant(order)?]
        }
        Series::OrdDPathA => vec![identities::dpoly_genfun_path(order)?, identities::dpoly_closed_form_path(order)?],
    })
}

fn configure_threads() {
    if let Some(n) = std::env::var("TAUPOLY_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // fails only if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    match run(&cli.command) {
        Ok(out) => {
            let failed = out.checks.iter().any(|c| !c.pass);
            let status = u8::from(failed);
            let text = match cli.format {
                Format::Json => {
                    let report = json!({
                        "command": echo.join(" "),
                        "results": out.result,
                        "checks": out.checks,
                        "exit_status": status,
                    });
                    serde_json::to_string_pretty(&report).expect("serializable")
                }
                Format::Csv => out.csv + &render_checks(&out.checks),
                Format::Plain => out.plain + &render_checks(&out.checks),
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(status)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Disabled(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn render_checks(checks: &[Check]) -> String {
    checks
        .iter()
        .map(|c| {
            if c.pass {
                format!("\nPASS {}", c.name)
            } else {
                format!("\nFAIL {} expected {} got {}", c.name, c.expected, c.actual)
            }
        })
        .collect()
}
