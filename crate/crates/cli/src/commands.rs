use std::fmt::Write as _;

use serde::Serialize;
use trigdunkl_core::coeff::{CouplingVector, RatFunc};
use trigdunkl_core::dunkl::{
    dunkl_apply, hamiltonian_apply, invariant_apply, jacobi, lk_apply, mu_tilde, rho, SymH,
};
use trigdunkl_core::laurent::{LocalizedDoc, LocalizedElement};
use trigdunkl_core::special::{
    kplus_from_couplings, monodromy_spec, schwarz_table_up_to, special_exponents, verify_report, GeneratorReport,
    IdentityCheck, KPlusReport, ReportDoc, SchwarzRow,
};
use trigdunkl_core::verify::{run_suite, run_suite_on, Suite, SuiteReport};
use trigdunkl_core::{CorootVector, LaurentElement, RootSystem, Weight};

use crate::input;
use crate::{Cli, CliError, Command};

/// Rendered command output plus the first failing identity, if any.
pub struct Output {
    pub json: String,
    pub text: String,
    pub failure: Option<IdentityCheck>,
}

impl Output {
    fn new<T: Serialize>(doc: &T, text: String) -> Result<Self, CliError> {
        Ok(Output {
            json: serde_json::to_string_pretty(doc).map_err(|e| CliError::Usage(e.to_string()))?,
            text,
            failure: None,
        })
    }
}

struct Ctx {
    rs: RootSystem,
    kv: CouplingVector,
}

fn ctx(cli: &Cli) -> Result<Ctx, CliError> {
    let rs = input::root_system(cli.global.r#type.as_deref(), cli.global.rank)?;
    let kv = input::couplings(
        &rs,
        cli.global.k.as_deref(),
        cli.global.kp.as_deref(),
        cli.global.k2.as_deref(),
    )?;
    Ok(Ctx { rs, kv })
}

fn mu(cli: &Cli, rs: &RootSystem) -> Result<Weight, CliError> {
    let s = cli
        .global
        .mu
        .as_deref()
        .ok_or_else(|| CliError::Usage("--mu is required".into()))?;
    input::weight(s, rs.rank())
}

/// The argument function: `--input` if given, else the monomial or orbit
/// sum of `--mu`.
fn argument(cli: &Cli, rs: &RootSystem, orbit: bool) -> Result<LaurentElement, CliError> {
    if let Some(p) = &cli.global.input {
        return input::laurent_file(rs, p);
    }
    let m = mu(cli, rs)?;
    Ok(if orbit {
        LaurentElement::orbit_sum(rs, &m)
    } else {
        LaurentElement::exp(m)
    })
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Roots => roots(cli),
        Command::Orbit => orbit(cli),
        Command::Dunkl => dunkl(cli),
        Command::Jacobi => jacobi_cmd(cli),
        Command::Invariant => invariant(cli),
        Command::Hamiltonian => hamiltonian(cli),
        Command::Special { verify } => special(cli, verify.as_deref()),
        Command::Verify { suite } => verify(cli, suite),
        Command::Schwarz { max_n } => schwarz(*max_n),
        Command::Report => report(cli),
    }
}

#[derive(Serialize)]
struct RootDoc {
    weight: Vec<i64>,
    coroot: Vec<i64>,
    simple_coords: Vec<String>,
    height: String,
    coupling: RatFunc,
}

#[derive(Serialize)]
struct RootsDoc {
    r#type: String,
    rank: usize,
    weyl_order: u64,
    degrees: Vec<u64>,
    cartan: Vec<Vec<i64>>,
    rho_k: Vec<RatFunc>,
    positive_roots: Vec<RootDoc>,
}

fn roots(cli: &Cli) -> Result<Output, CliError> {
    let Ctx { rs, kv } = ctx(cli)?;
    let doc = RootsDoc {
        r#type: rs.spec.to_string(),
        rank: rs.rank(),
        weyl_order: rs.weyl_order,
        degrees: rs.spec.degrees(),
        cartan: rs.cartan.clone(),
        rho_k: rho(&rs, &kv).0,
        positive_roots: rs
            .positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| RootDoc {
                weight: r.weight.0.clone(),
                coroot: r.coroot.clone(),
                simple_coords: r.simple_coords.iter().map(|q| q.to_string()).collect(),
                height: r.height().to_string(),
                coupling: rs.coupling(&kv, i).clone(),
            })
            .collect(),
    };
    let mut text = format!(
        "{}: rank {}, |W| = {}, {} positive roots\n",
        doc.r#type,
        doc.rank,
        doc.weyl_order,
        doc.positive_roots.len()
    );
    for r in &doc.positive_roots {
        let _ = writeln!(text, "  [{}]  height {}  k = {}", r.simple_coords.join(","), r.height, r.coupling);
    }
    Output::new(&doc, text)
}

#[derive(Serialize)]
struct OrbitDoc {
    r#type: String,
    mu: Weight,
    dominant: Weight,
    size: usize,
    orbit: Vec<Weight>,
}

fn orbit(cli: &Cli) -> Result<Output, CliError> {
    let rs = input::root_system(cli.global.r#type.as_deref(), cli.global.rank)?;
    let m = mu(cli, &rs)?;
    let orbit: Vec<Weight> = rs.weyl_orbit(&m).into_iter().collect();
    let doc = OrbitDoc {
        r#type: rs.spec.to_string(),
        dominant: rs.to_dominant(&m),
        size: orbit.len(),
        orbit,
        mu: m,
    };
    let items: Vec<String> = doc.orbit.iter().map(|w| w.to_string()).collect();
    let text = format!("W {} ({} elements): {}\n", doc.mu, doc.size, items.join(" "));
    Output::new(&doc, text)
}

#[derive(Serialize)]
struct Application {
    xi: CorootVector,
    result: LaurentElement,
}

#[derive(Serialize)]
struct DunklDoc {
    r#type: String,
    couplings: CouplingVector,
    input: LaurentElement,
    results: Vec<Application>,
}

fn dunkl(cli: &Cli) -> Result<Output, CliError> {
    let Ctx { rs, kv } = ctx(cli)?;
    let f = argument(cli, &rs, false)?;
    let n = rs.rank();
    let dirs = match &cli.global.xi {
        Some(s) => vec![input::coroot(s, n)?],
        None => (0..n).map(|i| CorootVector::simple(n, i)).collect(),
    };
    let results = dirs
        .into_iter()
        .map(|xi| {
            let result = dunkl_apply(&rs, &xi, &f, &kv)?;
            Ok(Application { xi, result })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut text = String::new();
    for a in &results {
        let _ = writeln!(text, "T({}) ({f}) = {}", a.xi, a.result);
    }
    let doc = DunklDoc {
        r#type: rs.spec.to_string(),
        couplings: kv,
        input: f,
        results,
    };
    Output::new(&doc, text)
}

#[derive(Serialize)]
struct JacobiDoc {
    r#type: String,
    couplings: CouplingVector,
    mu: Weight,
    /// `mu~` in the fundamental-weight basis.
    eigenvalue: Vec<RatFunc>,
    polynomial: LaurentElement,
}

fn jacobi_cmd(cli: &Cli) -> Result<Output, CliError> {
    let Ctx { rs, kv } = ctx(cli)?;
    let m = mu(cli, &rs)?;
    let e = jacobi(&rs, &m, &kv)?;
    let text = format!("E({m}) = {e}\n");
    let doc = JacobiDoc {
        r#type: rs.spec.to_string(),
        eigenvalue: mu_tilde(&rs, &m, &kv).0,
        couplings: kv,
        mu: m,
        polynomial: e,
    };
    Output::new(&doc, text)
}

#[derive(Serialize)]
struct InvariantDoc {
    r#type: String,
    couplings: CouplingVector,
    input: LaurentElement,
    /// `C(T) f` for the Casimir `C`.
    casimir: LaurentElement,
    /// `L_k f`.
    laplacian: LaurentElement,
    rho_norm: RatFunc,
}

fn invariant(cli: &Cli) -> Result<Output, CliError> {
    let Ctx { rs, kv } = ctx(cli)?;
    let f = argument(cli, &rs, true)?;
    let c = invariant_apply(&rs, &SymH::casimir(&rs), &f, &kv)?;
    let l = lk_apply(&rs, &f, &kv)?;
    let r = rho(&rs, &kv);
    let text = format!("C(T) f = {c}\nL_k f = {l}\n");
    let doc = InvariantDoc {
        r#type: rs.spec.to_string(),
        rho_norm: rs.inner(&r, &r),
        couplings: kv,
        input: f,
        casimir: c,
        laplacian: l,
    };
    Output::new(&doc, text)
}

#[derive(Serialize)]
struct HamiltonianDoc {
    r#type: String,
    couplings: CouplingVector,
    input: LocalizedDoc,
    result: LocalizedDoc,
}

fn hamiltonian(cli: &Cli) -> Result<Output, CliError> {
    let Ctx { rs, kv } = ctx(cli)?;
    let f = match &cli.global.input {
        Some(p) => input::localized_file(&rs, p)?,
        None => LocalizedElement::from_laurent(LaurentElement::orbit_sum(&rs, &mu(cli, &rs)?)),
    };
    let h = hamiltonian_apply(&rs, &f, &kv);
    let text = format!("H_k f = {h}\n");
    let doc = HamiltonianDoc {
        r#type: rs.spec.to_string(),
        couplings: kv,
        input: f.to_doc(),
        result: h.to_doc(),
    };
    Output::new(&doc, text)
}

#[derive(Serialize)]
struct SpecialDoc {
    #[serde(flatten)]
    report: ReportDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    monodromy: Option<Vec<GeneratorReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kplus: Option<KPlusReport>,
}

fn special_doc(rs: &RootSystem, kv: &CouplingVector) -> Result<(SpecialDoc, Vec<IdentityCheck>), CliError> {
    let mut rep = special_exponents(rs, kv)?;
    let checks = verify_report(rs, &mut rep)?;
    let rational = kv.as_rational().is_some();
    let doc = SpecialDoc {
        report: ReportDoc::from(&rep),
        monodromy: rational.then(|| monodromy_spec(rs, kv)).transpose()?,
        kplus: rational.then(|| kplus_from_couplings(rs, kv)).transpose()?,
    };
    Ok((doc, checks))
}

fn special_text(doc: &SpecialDoc) -> String {
    let r = &doc.report;
    let mut text = format!("{}{} special exponents (a = {})\n", r.family, r.rank, r.a);
    for (i, m) in r.exponents.iter().enumerate() {
        let parts: Vec<String> = m.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(text, "  mu_{} = [{}]", i + 1, parts.join(", "));
    }
    if let (Some(x), Some(y)) = (&r.x, &r.y) {
        let _ = writeln!(text, "  x = {x}, y = {y}");
    }
    if let Some(v) = &r.verdicts {
        let _ = writeln!(text, "  verdicts: {}", if v.all_hold() { "all hold" } else { "FAILED" });
    }
    if let Some(k) = &doc.kplus {
        let _ = writeln!(text, "  in K+: {}", k.member);
    }
    text
}

fn special(cli: &Cli, verify: Option<&str>) -> Result<Output, CliError> {
    let Ctx { rs, kv } = ctx(cli)?;
    let (doc, checks) = special_doc(&rs, &kv)?;
    let mut out = Output::new(&doc, special_text(&doc))?;
    if let Some(sel) = verify {
        out.failure = match sel {
            "all" => checks.into_iter().find(|c| !c.holds),
            s => {
                let suite: Suite = s.parse()?;
                if !matches!(suite, Suite::Prop32 | Suite::Relations | Suite::Compat) {
                    return Err(CliError::Usage(format!(
                        "special --verify takes prop32, relations, compat or all, not `{s}`"
                    )));
                }
                run_suite_on(suite, &[rs.spec.to_string()])?.first_failure
            }
        };
    }
    Ok(out)
}

fn verify(cli: &Cli, suite: &str) -> Result<Output, CliError> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let only = match cli.global.r#type.as_deref() {
        Some(_) => Some(input::root_system(cli.global.r#type.as_deref(), cli.global.rank)?),
        None => None,
    };
    let reports: Vec<SuiteReport> = suites
        .iter()
        .map(|&s| match &only {
            Some(rs) => run_suite_on(s, &[rs.spec.to_string()]),
            None => run_suite(s),
        })
        .collect::<Result<_, _>>()?;
    let mut text = String::new();
    for r in &reports {
        let verdict = if r.passed { "ok" } else { "FAILED" };
        let _ = writeln!(text, "{}: {verdict} ({} identities on {})", r.suite, r.checked, r.types.join(" "));
    }
    let failure = reports.iter().find_map(|r| r.first_failure.clone());
    let mut out = Output::new(&reports, text)?;
    out.failure = failure;
    Ok(out)
}

fn schwarz(max_n: u64) -> Result<Output, CliError> {
    let rows: Vec<SchwarzRow> = schwarz_table_up_to(max_n);
    let mut text = String::from("n\tk\tq\n");
    for r in &rows {
        let _ = writeln!(text, "{}\t{}\t{}", r.n, r.k, r.q);
    }
    Output::new(&rows, text)
}

#[derive(Serialize)]
struct FullReport {
    r#type: String,
    rank: usize,
    weyl_order: u64,
    coxeter_number: u64,
    positive_roots: usize,
    couplings: CouplingVector,
    rho_k: Vec<RatFunc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    special: Option<SpecialDoc>,
}

fn report(cli: &Cli) -> Result<Output, CliError> {
    let Ctx { rs, kv } = ctx(cli)?;
    let (special, checks) = if rs.family().is_reduced() {
        let (doc, checks) = special_doc(&rs, &kv)?;
        (Some(doc), checks)
    } else {
        (None, Vec::new())
    };
    let doc = FullReport {
        r#type: rs.spec.to_string(),
        rank: rs.rank(),
        weyl_order: rs.weyl_order,
        coxeter_number: *rs.spec.degrees().iter().max().unwrap(),
        positive_roots: rs.positive_roots.len(),
        rho_k: rho(&rs, &kv).0,
        couplings: kv,
        special,
    };
    let mut text = format!(
        "{}: |W| = {}, h = {}, {} positive roots\n",
        doc.r#type, doc.weyl_order, doc.coxeter_number, doc.positive_roots
    );
    if let Some(s) = &doc.special {
        text.push_str(&special_text(s));
    }
    let mut out = Output::new(&doc, text)?;
    out.failure = checks.into_iter().find(|c| !c.holds);
    Ok(out)
}
