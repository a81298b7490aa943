//! Report generation behind the `norden` binary.
//!
//! A [`ReportRequest`] is run against a [`FrameSpec`] and yields the text to
//! print plus an exit status. Everything here is deterministic: tables are
//! emitted in row-major index order and JSON objects keep insertion order.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use norden_core::geometry::{validate_spec, FrameSpec};
use norden_core::norden::{theorem3_criteria, PolynomialCondition};
use norden_core::scalars::{parse_rational, Polynomial, Rational};
use norden_core::tensor::Tensor;
use norden_core::{build_context, invariance_suite, GeometryContext};
use serde_json::{json, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INPUT_ERROR: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Structured,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "structured" | "json" => Ok(Format::Structured),
            _ => Err(format!("unknown format `{s}` (expected text, csv or structured)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableName {
    Nabla,
    NablaTwin,
    F,
    FTwin,
    Theta,
    DTheta,
    Phi,
    R,
    RTwin,
    Ricci,
    P,
    K,
    D,
    N,
    S,
    Norms,
}

impl TableName {
    pub const ALL: [TableName; 16] = [
        TableName::Nabla,
        TableName::NablaTwin,
        TableName::F,
        TableName::FTwin,
        TableName::Theta,
        TableName::DTheta,
        TableName::Phi,
        TableName::R,
        TableName::RTwin,
        TableName::Ricci,
        TableName::P,
        TableName::K,
        TableName::D,
        TableName::N,
        TableName::S,
        TableName::Norms,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableName::Nabla => "nabla",
            TableName::NablaTwin => "nabla-twin",
            TableName::F => "F",
            TableName::FTwin => "F-twin",
            TableName::Theta => "theta",
            TableName::DTheta => "dtheta",
            TableName::Phi => "Phi",
            TableName::R => "R",
            TableName::RTwin => "R-twin",
            TableName::Ricci => "ricci",
            TableName::P => "P",
            TableName::K => "K",
            TableName::D => "D",
            TableName::N => "N",
            TableName::S => "S",
            TableName::Norms => "norms",
        }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        TableName::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = TableName::ALL.iter().map(|t| t.as_str()).collect();
                format!("unknown table `{s}` (known: {})", known.join(", "))
            })
    }
}

/// Parses `nabla,R,ricci` into table names, keeping the given order and
/// dropping repeats.
pub fn parse_table_list(text: &str) -> Result<Vec<TableName>, String> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let name: TableName = part.parse()?;
        if !out.contains(&name) {
            out.push(name);
        }
    }
    if out.is_empty() {
        return Err("no table names given".into());
    }
    Ok(out)
}

/// Parses `l1=1,l2=-1/2`.
pub fn parse_substitution(text: &str) -> Result<BTreeMap<String, Rational>, String> {
    let mut out = BTreeMap::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| format!("substitution `{part}` is not of the form name=value"))?;
        let value = parse_rational(value.trim()).map_err(|e| format!("substitution `{part}`: {e}"))?;
        if out.insert(name.trim().to_string(), value).is_some() {
            return Err(format!("`{}` substituted twice", name.trim()));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Classify,
    Tables(Vec<TableName>),
    Invariance,
    Theorem3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRequest {
    pub command: Command,
    pub substitution: BTreeMap<String, Rational>,
    pub format: Format,
    /// Emit zero components too.
    pub all: bool,
}

impl ReportRequest {
    pub fn new(command: Command) -> Self {
        ReportRequest {
            command,
            substitution: BTreeMap::new(),
            format: Format::Text,
            all: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: u8,
}

impl Outcome {
    fn new(output: String, ok: bool) -> Self {
        Outcome {
            output,
            exit_code: if ok { EXIT_OK } else { EXIT_CHECK_FAILED },
        }
    }

    fn input_error(output: String) -> Self {
        Outcome {
            output,
            exit_code: EXIT_INPUT_ERROR,
        }
    }
}

/// Runs `request` on a parsed but not necessarily validated spec.
///
/// An invalid spec or substitution is an input error (exit 2); `validate`
/// still prints its full report in that case.
pub fn run(request: &ReportRequest, spec: &FrameSpec) -> Outcome {
    if let Some(unknown) = request
        .substitution
        .keys()
        .find(|k| !spec.params().iter().any(|p| p == *k))
    {
        return Outcome::input_error(format!(
            "error: cannot substitute `{unknown}`: not a declared parameter\n"
        ));
    }
    let spec = if request.substitution.is_empty() {
        spec.clone()
    } else {
        spec.substitute(&request.substitution)
    };

    if request.command == Command::Validate {
        return validate_report(&spec, request.format);
    }
    let ctx = match build_context(&spec) {
        Ok(ctx) => ctx,
        Err(e) => return Outcome::input_error(format!("error: {e}\n")),
    };
    match &request.command {
        Command::Validate => unreachable!(),
        Command::Classify => classify_report(&ctx, request.format),
        Command::Tables(names) => tables_report(&ctx, names, request.format, request.all),
        Command::Invariance => invariance_report(&ctx, request.format),
        Command::Theorem3 => theorem3_report(&ctx, request.format),
    }
}

fn label(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
    parts.join(" ")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn validate_report(spec: &FrameSpec, format: Format) -> Outcome {
    let report = validate_spec(spec);
    let ok = report.is_valid();
    let output = match format {
        Format::Structured => pretty(&json!({
            "valid": ok,
            "dim": spec.dim(),
            "params": spec.params().iter().collect::<Vec<_>>(),
            "checks": report.checks.iter().map(|c| json!({
                "condition": c.condition,
                "passed": c.passed,
                "violation": c.violation.as_ref().map(|i| label(i)),
            })).collect::<Vec<_>>(),
            "abelian_j": report.abelian_j,
        })),
        Format::Csv => {
            let mut out = String::from("condition,passed,violation\n");
            for c in &report.checks {
                let at = c.violation.as_ref().map(|i| label(i)).unwrap_or_default();
                let _ = writeln!(out, "{},{},{}", c.condition, c.passed, at);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                let verdict = if c.passed { "ok" } else { "FAILED" };
                match &c.violation {
                    Some(i) => {
                        let _ = writeln!(out, "{verdict:6} {} at ({})", c.condition, label(i).replace(' ', ","));
                    }
                    None => {
                        let _ = writeln!(out, "{verdict:6} {}", c.condition);
                    }
                }
            }
            let _ = writeln!(out, "J abelian: {}", if report.abelian_j { "yes" } else { "no" });
            let _ = writeln!(out, "{}", if ok { "valid" } else { "invalid" });
            out
        }
    };
    if ok {
        Outcome::new(output, true)
    } else {
        Outcome::input_error(output)
    }
}

fn classify_report(ctx: &GeometryContext, format: Format) -> Outcome {
    let class = ctx.class();
    let twin = ctx.twin_class();
    let output = match format {
        Format::Structured => pretty(&json!({ "class": class.as_str(), "class_twin": twin.as_str() })),
        Format::Csv => format!("metric,class\ng,{class}\ng-twin,{twin}\n"),
        Format::Text => format!("class (g): {class}\nclass (g~): {twin}\n"),
    };
    Outcome::new(output, true)
}

/// One emitted block: a tensor or a scalar.
enum Section {
    Tensor(&'static str, Tensor),
    Scalar(&'static str, Polynomial),
}

fn sections(ctx: &GeometryContext, name: TableName) -> Vec<Section> {
    let o = &ctx.objects;
    let t = &ctx.objects_twin;
    let lowered = |x: &Tensor| x.lower_index(3, &ctx.metric).expect("(1,3) tensor");
    use Section::{Scalar, Tensor as T};
    match name {
        TableName::Nabla => vec![T("nabla", ctx.conn.gamma().clone())],
        TableName::NablaTwin => vec![T("nabla~", ctx.conn_twin.gamma().clone())],
        TableName::F => vec![T("F", o.fundamental.clone())],
        TableName::FTwin => vec![T("F~", t.fundamental.clone())],
        TableName::Theta => vec![
            T("theta", o.theta.clone()),
            T("theta*", o.theta_star.clone()),
            T("theta~", t.theta.clone()),
            T("theta~*", t.theta_star.clone()),
        ],
        TableName::DTheta => {
            let r = theorem3_criteria(ctx);
            vec![
                T("dtheta", r.d_theta),
                T("dtheta*", r.d_theta_star),
                T("dtheta~", r.d_theta_twin),
                T("dtheta~*", r.d_theta_star_twin),
            ]
        }
        TableName::Phi => vec![
            T("Phi", o.phi03.clone()),
            T("f", o.f.clone()),
            T("f*", o.f_star.clone()),
        ],
        TableName::R => vec![T("R", o.r04.clone())],
        TableName::RTwin => vec![T("R~", t.r04.clone())],
        TableName::Ricci => vec![
            T("rho", o.ricci.clone()),
            Scalar("tau", o.scalar_curvature.clone()),
            T("rho~", t.ricci.clone()),
            Scalar("tau~", t.scalar_curvature.clone()),
        ],
        TableName::P => vec![T("P", lowered(&o.p13))],
        TableName::K => vec![T("K", lowered(&o.k13))],
        TableName::D => vec![T("D", o.d.gamma().clone())],
        TableName::N => vec![T("N", o.n12.clone())],
        TableName::S => vec![T("S", o.s12.clone())],
        TableName::Norms => vec![
            Scalar("|nabla J|^2", o.nabla_j_sqnorm.clone()),
            Scalar("|nabla~ J|^2", t.nabla_j_sqnorm.clone()),
        ],
    }
}

fn tables_report(ctx: &GeometryContext, names: &[TableName], format: Format, all: bool) -> Outcome {
    let blocks: Vec<Section> = names.iter().flat_map(|n| sections(ctx, *n)).collect();
    let output = match format {
        Format::Text => {
            let mut out = String::new();
            for (k, block) in blocks.iter().enumerate() {
                if k > 0 {
                    out.push('\n');
                }
                match block {
                    Section::Tensor(name, t) => {
                        let _ = writeln!(out, "# {name}");
                        out.push_str(&t.to_table_text(all));
                    }
                    Section::Scalar(name, p) => {
                        let _ = writeln!(out, "# {name}\n{p}");
                    }
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("table,index,value\n");
            for block in &blocks {
                match block {
                    Section::Tensor(name, t) => {
                        for (idx, p) in t.table_rows(all) {
                            let parts: Vec<String> = idx.iter().map(usize::to_string).collect();
                            let _ = writeln!(out, "{name},{},{}", parts.join(" "), p);
                        }
                    }
                    Section::Scalar(name, p) => {
                        let _ = writeln!(out, "{name},,{p}");
                    }
                }
            }
            out
        }
        Format::Structured => {
            let tables: Vec<Value> = blocks
                .iter()
                .map(|block| match block {
                    Section::Tensor(name, t) => json!({
                        "name": name,
                        "rank": t.rank(),
                        "components": t.table_rows(all).into_iter().map(|(idx, p)| json!({
                            "index": idx,
                            "value": p.to_string(),
                        })).collect::<Vec<_>>(),
                    }),
                    Section::Scalar(name, p) => json!({ "name": name, "value": p.to_string() }),
                })
                .collect();
            pretty(&json!({ "tables": tables }))
        }
    };
    Outcome::new(output, true)
}

fn invariance_report(ctx: &GeometryContext, format: Format) -> Outcome {
    let report = invariance_suite(ctx);
    let ok = report.all_passed();
    let total = report.checks.len();
    let output = match format {
        Format::Structured => pretty(&json!({
            "passed": report.passed_count(),
            "total": total,
            "checks": serde_json::to_value(&report.checks).expect("checks serialize"),
        })),
        Format::Csv => {
            let mut out = String::from("number,name,status,failure\n");
            for c in &report.checks {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    c.number,
                    c.name,
                    c.status.as_str(),
                    c.failure.as_deref().unwrap_or("")
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                let _ = write!(out, "{:2} {:22} {:24} {}", c.number, c.name, c.status.as_str(), c.statement);
                if let Some(f) = &c.failure {
                    let _ = write!(out, "  [{f}]");
                }
                out.push('\n');
            }
            let _ = writeln!(out, "{}/{} checks passed", report.passed_count(), total);
            out
        }
    };
    Outcome::new(output, ok)
}

fn condition_text(c: &PolynomialCondition) -> String {
    if c.holds() {
        "holds identically".to_string()
    } else {
        let polys: Vec<String> = c.polynomials.iter().map(|p| format!("{p} = 0")).collect();
        format!("holds iff {}", polys.join(", "))
    }
}

fn theorem3_report(ctx: &GeometryContext, format: Format) -> Outcome {
    let r = theorem3_criteria(ctx);
    let flat = r.conformally_flat();
    let scalar = r.scalar_flat_isotropic_union();
    let ok = r.closed_lee_forms.holds() && flat && scalar.holds();
    let output = match format {
        Format::Structured => pretty(&r.to_json()),
        Format::Csv => {
            let list = |c: &PolynomialCondition| {
                let v: Vec<String> = c.polynomials.iter().map(ToString::to_string).collect();
                v.join(";")
            };
            format!(
                "criterion,holds,conditions\n(i),{},{}\n(ii),{},\n(iii),{},{}\n",
                r.closed_lee_forms.holds(),
                list(&r.closed_lee_forms),
                flat,
                scalar.holds(),
                list(&scalar)
            )
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "(i) closed Lee forms: {}", condition_text(&r.closed_lee_forms));
            let _ = writeln!(
                out,
                "(ii) W = 0: {}, W~ = 0: {}, curvature form: {}/{}",
                r.weyl_vanishes, r.weyl_twin_vanishes, r.curvature_form_holds, r.curvature_form_twin_holds
            );
            let _ = writeln!(out, "(iii) scalar flat and isotropic Kaehler: {}", condition_text(&scalar));
            for (name, role) in [("g", &r.scalar_flat_isotropic), ("g~", &r.scalar_flat_isotropic_twin)] {
                let _ = write!(
                    out,
                    "    {name}: tau = {}, |nabla J|^2 = {}",
                    role.scalar_curvature, role.nabla_j_sqnorm
                );
                if let Some(q) = &role.norm_to_scalar_ratio {
                    let _ = write!(out, ", ratio {q}");
                }
                out.push('\n');
            }
            out
        }
    };
    Outcome::new(output, ok)
}
