//! Dispatch from a parsed command line to the library, and rendering of
//! the result as text or JSON.

use std::ffi::OsString;

use clap::Parser;
use gt_algebra::{cyclic_project, TensorElement};
use gt_braid::{dims_csv, dims_table, dk_compose, h_presentation, k_presentation, verify_phi, DkAlgebra, DkFamily, LieQuotient};
use gt_brackets::{bracket_cyclic, cobracket_cyclic, double_bracket};
use gt_cocycles::{check_relative_closed, e_functor};
use gt_fox::{fox_eval, qder_eval, FoxDerivative, Side};
use gt_surface::{check_group_like, conjugation_defect, make_q_framing, make_rho_g, verify_bialgebra};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Format, Part, SideArg, Suite};
use crate::error::{CliError, Result};
use crate::expr::{parse_element, ExprError};
use crate::settings::Settings;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONTEXT: i32 = 3;

/// What the process prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A computed result in both renderings. `passed` is false only for a
/// verification that ran and failed.
struct Output {
    passed: bool,
    text: String,
    json: Value,
}

impl Output {
    fn value(text: impl ToString, json: Value) -> Self {
        Output { passed: true, text: text.to_string(), json }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: EXIT_PASS, stdout: rendered, stderr: String::new() }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = Settings::resolve(&cli.global).and_then(|s| execute(&cli.command, &s).map(|out| (s.format, out)));
    match result {
        Ok((format, out)) => {
            let mut stdout = match format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("JSON values serialize"),
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code: if out.passed { EXIT_PASS } else { EXIT_FAILED }, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(cmd: &Command, s: &Settings) -> Result<Output> {
    match cmd {
        Command::Bracket { a, b } => {
            let sc = s.surface()?;
            let (a, b) = (parse_element(a, sc.ctx())?, parse_element(b, sc.ctx())?);
            let r = bracket_cyclic(&make_rho_g(&sc), &cyclic_project(&a), &cyclic_project(&b))?;
            Ok(Output::value(r.display(), serde_json::to_value(r.to_json()).expect("serializable")))
        }
        Command::Cobracket { a } => {
            let sc = s.surface()?;
            let a = parse_element(a, sc.ctx())?;
            let q = make_q_framing(&sc, &s.framing)?;
            let r = cobracket_cyclic(&q, &cyclic_project(&a))?;
            Ok(Output::value(r.display(), serde_json::to_value(r.to_json()).expect("serializable")))
        }
        Command::Doublebracket { a, b } => {
            let sc = s.surface()?;
            let (a, b) = (parse_element(a, sc.ctx())?, parse_element(b, sc.ctx())?);
            let r = double_bracket(&make_rho_g(&sc), &a, &b)?;
            Ok(Output::value(r.display(), serde_json::to_value(r.to_json()).expect("serializable")))
        }
        Command::FoxEval { side, generator, a } => {
            let sc = s.surface()?;
            let ctx = sc.ctx();
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let d = if generator == "D" {
                FoxDerivative::distinguished(ctx, side)
            } else {
                let l = ctx
                    .alphabet()
                    .letter(generator)
                    .ok_or_else(|| ExprError::UnknownGenerator { name: generator.clone(), offset: 0 })?;
                FoxDerivative::basis(ctx, side, l)
            };
            let a = parse_element(a, ctx)?;
            Ok(element(&fox_eval(&d, &a)?))
        }
        Command::QderEval { a } => {
            let sc = s.surface()?;
            let q = make_q_framing(&sc, &s.framing)?;
            Ok(element(&qder_eval(&q, &parse_element(a, sc.ctx())?)?))
        }
        Command::Verify { suite: Suite::Bialgebra, .. } => {
            let sc = s.surface()?;
            let d = s.check_degree();
            let report = verify_bialgebra(&sc, &s.framing, d)?;
            let mut text: Vec<String> = report.checks.iter().map(|c| c.to_string()).collect();
            text.push(verdict("bialgebra", report.passed()));
            let json = json!({"suite": "bialgebra", "passed": report.passed(), "degree": d, "checks": report});
            Ok(Output { passed: report.passed(), text: text.join("\n"), json })
        }
        Command::Verify { suite: Suite::Phi, .. } | Command::VerifyPhi => phi(s),
        Command::Verify { suite: Suite::Closed, .. } => {
            let sc = s.surface()?;
            let q = make_q_framing(&sc, &s.framing)?;
            let report = check_relative_closed(&e_functor(&q, &make_rho_g(&sc))?)?;
            let mut text = format!("closed           {} (degree ≤ {})", if report.closed { "pass" } else { "FAIL" }, report.degree);
            if let Some(w) = &report.witness {
                text.push_str(&format!(": {w}"));
            }
            text.push('\n');
            text.push_str(&verdict("closed", report.closed));
            let json = json!({"suite": "closed", "passed": report.closed, "degree": report.degree, "witness": report.witness});
            Ok(Output { passed: report.closed, text, json })
        }
        Command::Verify { suite: Suite::Grouplike, element } => {
            let sc = s.surface()?;
            let src = element.as_deref().ok_or_else(|| CliError::Usage("verify grouplike needs an element".into()))?;
            let x = parse_element(src, sc.ctx())?;
            let witness = check_group_like(&x).err().map(|e| e.to_string());
            let passed = witness.is_none();
            let mut text = format!("grouplike        {} (degree ≤ {})", if passed { "pass" } else { "FAIL" }, s.max_degree);
            if let Some(w) = &witness {
                text.push_str(&format!(": {w}"));
            }
            text.push('\n');
            text.push_str(&verdict("grouplike", passed));
            let json = json!({"suite": "grouplike", "passed": passed, "degree": s.max_degree, "witness": witness});
            Ok(Output { passed, text, json })
        }
        Command::DkDims { part } => {
            let n = s.boundaries()?;
            let d = s.check_degree();
            let presentation = match part {
                Part::Full => DkAlgebra::new(s.dk_family()?, n)?.presentation().clone(),
                Part::K => k_presentation(s.genus()?, n)?,
                Part::H => h_presentation(&DkAlgebra::new(DkFamily::Genus(s.genus()?), n)?)?,
            };
            let dims = LieQuotient::new(presentation).dims(d);
            Ok(Output::value(dims_csv(&dims), serde_json::to_value(dims_table(&dims)).expect("serializable")))
        }
        Command::DkCompose { i_labels, k, j_labels } => {
            let family = s.dk_family()?;
            let c = dk_compose(family, &labels(i_labels)?, *k, &labels(j_labels)?)?;
            let joined = match c.labels.is_empty() {
                true => "no strands".to_string(),
                false => c.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","),
            };
            let mut text = format!("{family} on {joined}\n");
            let mut json = json!({"family": family.to_string(), "labels": c.labels});
            for (name, map) in [("left", &c.left), ("right", &c.right)] {
                text.push_str(name);
                text.push('\n');
                let table = map.table();
                for (g, img) in &table {
                    text.push_str(&format!("  {g} ↦ {img}\n"));
                }
                json[name] = table.into_iter().map(|(g, img)| json!({"generator": g, "image": img})).collect();
            }
            Ok(Output::value(text, json))
        }
        Command::Defect { x } => {
            let sc = s.surface()?;
            let d = s.check_degree();
            let x = parse_element(x, sc.ctx())?;
            let r = conjugation_defect(&x, &make_rho_g(&sc), d)?;
            let mut text = format!("commutes         {} (degree ≤ {})", if r.commutes { "pass" } else { "FAIL" }, r.degree);
            if let Some(w) = &r.witness {
                text.push_str(&format!(": {w}"));
            }
            let inverse = r.x_inverse.retruncate(d);
            text.push_str(&format!("\nx^-1 = {}\n", inverse.display()));
            text.push_str(&verdict("defect", r.commutes));
            let json = json!({
                "suite": "defect",
                "passed": r.commutes,
                "degree": r.degree,
                "witness": r.witness,
                "x_inverse": inverse.to_json(),
            });
            Ok(Output { passed: r.commutes, text, json })
        }
    }
}

fn phi(s: &Settings) -> Result<Output> {
    let d = s.check_degree();
    let report = verify_phi(s.genus()?, s.boundaries()?, d)?;
    let mut text = vec![format!("relations        {}", if report.relations_hold { "pass" } else { "FAIL" })];
    for r in &report.degrees {
        text.push(format!("degree {:<9} source {} target {} rank {}", r.degree, r.source_dim, r.target_dim, r.rank));
    }
    if let Some(w) = &report.witness {
        text.push(format!("witness: {w}"));
    }
    text.push(verdict("phi", report.holds));
    let json = json!({"suite": "phi", "passed": report.holds, "degree": d, "report": report});
    Ok(Output { passed: report.holds, text: text.join("\n"), json })
}

fn verdict(name: &str, passed: bool) -> String {
    format!("{name}: {}", if passed { "pass" } else { "FAIL" })
}

fn element(e: &TensorElement) -> Output {
    Output::value(e.display(), serde_json::to_value(e.to_json()).expect("serializable"))
}

fn labels(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| CliError::Usage(format!("bad strand label `{p}`"))))
        .collect()
}
