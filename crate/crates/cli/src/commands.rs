use std::process::ExitCode;

use serde::Serialize;
use sylowscope::catalog::{
    order_closed_form, order_cyclotomic, order_factored, parse_family_pattern, parse_group,
    GroupId, Sporadic, GRID_PRIMES,
};
use sylowscope::classifier::{
    classify as classify_odd, classify_sylow2, AbelianStructure, ClassifyError, Governing, Rule,
    SylowVerdict, VerdictKind,
};
use sylowscope::enumerator::{
    congruence_conditions, enumerate_by_structure, instantiate, CongruenceReport, EnumError,
    EnumMatch, Scope, Target,
};
use sylowscope::numtheory::divisors;
use sylowscope::verify::{run_suite, sporadic_grid, Suite, SuiteReport};

use crate::output::{CliError, Printer};

type CmdResult = Result<ExitCode, CliError>;

impl From<ClassifyError> for CliError {
    fn from(err: ClassifyError) -> Self {
        CliError::Invalid(err.to_string())
    }
}

impl From<EnumError> for CliError {
    fn from(err: EnumError) -> Self {
        CliError::Invalid(err.to_string())
    }
}

#[derive(Serialize)]
struct GroupQuery<'a> {
    group: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    prime: Option<u64>,
}

#[derive(Serialize)]
struct VerdictOut {
    group: String,
    r: u64,
    m: Governing,
    t: u32,
    valuation: u32,
    kind: VerdictKind,
    structure: Option<String>,
    rule: Rule,
}

impl From<&SylowVerdict> for VerdictOut {
    fn from(v: &SylowVerdict) -> Self {
        VerdictOut {
            group: v.group.to_string(),
            r: v.r,
            m: v.m,
            t: v.t,
            valuation: v.valuation,
            kind: v.kind,
            structure: v.structure.as_ref().map(AbelianStructure::to_string),
            rule: v.rule,
        }
    }
}

fn verdict_text(v: &SylowVerdict, quiet: bool) -> String {
    let shape = match (&v.kind, &v.structure) {
        (VerdictKind::Nonabelian, _) => "nonabelian".to_string(),
        (kind, Some(s)) => format!("{kind} {s}"),
        (kind, None) => kind.to_string(),
    };
    if quiet {
        return shape;
    }
    let mut line = format!("{} r = {}: {shape} [{}]", v.group, v.r, v.rule);
    line.push_str(&format!("\n  v_{}(|G|) = {}", v.r, v.valuation));
    match v.m {
        Governing::Order(m) => line.push_str(&format!(", m = {m}, t = {}", v.t)),
        Governing::Defining => line.push_str(", defining characteristic"),
        Governing::Absent => {}
    }
    line
}

fn emit_verdict(out: &mut Printer, command: &str, group: &str, v: &SylowVerdict) {
    let quiet = out.quiet();
    out.record(
        command,
        GroupQuery {
            group,
            prime: Some(v.r),
        },
        VerdictOut::from(v),
        || verdict_text(v, quiet),
    );
}

pub fn classify(out: &mut Printer, group: &str, prime: u64) -> CmdResult {
    let g = parse_group(group)?;
    let verdict = if prime == 2 {
        classify_sylow2(&g)
    } else {
        classify_odd(&g, prime)?
    };
    emit_verdict(out, "classify", group, &verdict);
    Ok(ExitCode::SUCCESS)
}

pub fn walter(out: &mut Printer, group: &str) -> CmdResult {
    let g = parse_group(group)?;
    emit_verdict(out, "walter", group, &classify_sylow2(&g));
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct OrderCheck {
    closed_form: String,
    second: String,
    /// How the second value was computed.
    method: &'static str,
    equal: bool,
}

#[derive(Serialize)]
struct OrderOut {
    group: String,
    order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    factored: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<(String, u32)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<OrderCheck>,
}

pub fn order(out: &mut Printer, group: &str, factored: bool, check: bool) -> CmdResult {
    let g = parse_group(group)?;
    let order = order_closed_form(&g);
    let factorisation = factored.then(|| order_factored(&g));
    let check = check.then(|| {
        let (second, method) = match &g {
            GroupId::Lie(l) => (order_cyclotomic(l), "cyclotomic"),
            _ => (order_factored(&g).value(), "factorisation"),
        };
        OrderCheck {
            closed_form: order.to_string(),
            equal: second == order,
            second: second.to_string(),
            method,
        }
    });
    let ok = check.as_ref().is_none_or(|c| c.equal);
    let result = OrderOut {
        group: g.to_string(),
        order: order.to_string(),
        factored: factorisation.as_ref().map(|f| f.to_string()),
        factors: factorisation
            .as_ref()
            .map(|f| f.iter().map(|(p, e)| (p.to_string(), *e)).collect()),
        check,
    };
    let quiet = out.quiet();
    out.record("order", GroupQuery { group, prime: None }, &result, || {
        let mut text = if quiet {
            result.order.clone()
        } else {
            format!("|{}| = {}", result.group, result.order)
        };
        if let Some(f) = &result.factored {
            text.push_str(&format!("\n  = {f}"));
        }
        if let Some(c) = &result.check {
            text.push_str(&format!("\n  {} order agrees: {}", c.method, c.equal));
        }
        text
    });
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct EnumerateQuery<'a> {
    prime: u64,
    structure: &'a str,
    scope: &'a [Scope],
    rank_bound: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    concrete: Option<u64>,
}

#[derive(Serialize)]
struct MatchOut<'a> {
    #[serde(flatten)]
    m: &'a EnumMatch,
    #[serde(skip_serializing_if = "Option::is_none")]
    groups: Option<Vec<String>>,
}

pub fn enumerate(
    out: &mut Printer,
    prime: u64,
    structure: &str,
    scope: Vec<Scope>,
    rank_bound: u32,
    concrete: Option<u64>,
) -> CmdResult {
    let parsed: AbelianStructure = structure.parse().map_err(CliError::Syntax)?;
    if parsed.prime != prime {
        return Err(CliError::Invalid(format!(
            "structure {parsed} is not a {prime}-group"
        )));
    }
    let target = Target::from_structure(&parsed)?;
    let mut scope = scope;
    scope.sort();
    scope.dedup();
    let matches = enumerate_by_structure(target, &scope, rank_bound)?;
    let query = EnumerateQuery {
        prime,
        structure,
        scope: &scope,
        rank_bound,
        concrete,
    };
    for m in &matches {
        let groups = concrete.map(|bound| {
            instantiate(m, bound)
                .iter()
                .map(GroupId::to_string)
                .collect::<Vec<_>>()
        });
        let record = MatchOut {
            m,
            groups: groups.clone(),
        };
        out.record("enumerate", &query, &record, || {
            let mut text = format!("{m}  [{}]", m.rule());
            if let Some(groups) = &groups {
                if groups.is_empty() {
                    text.push_str("\n    (none in range)");
                } else {
                    text.push_str(&format!("\n    {}", groups.join(", ")));
                }
            }
            text
        });
    }
    out.note(format!("{} match(es) for {parsed}", matches.len()));
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CongruenceQuery<'a> {
    group: &'a str,
    prime: u64,
    order: u64,
}

fn congruence_text(rep: &CongruenceReport) -> String {
    let verdict = if rep.abelian {
        format!("elementary abelian {}", rep.structure)
    } else {
        "nonabelian".to_string()
    };
    format!(
        "{}, r = {}, m = {}: q in {} -> {verdict} (e_L({}) = {}) [{}]",
        rep.family,
        rep.r,
        rep.m,
        rep.residues,
        rep.m * rep.r,
        rep.criterion,
        rep.rule
    )
}

pub fn congruences(out: &mut Printer, group: &str, prime: u64, order: Option<u64>) -> CmdResult {
    let family = parse_family_pattern(group)?;
    let orders = match order {
        Some(m) => vec![m],
        None if prime >= 3 => divisors(prime - 1),
        None => vec![1],
    };
    for m in orders {
        let report = congruence_conditions(family, prime, m)?;
        out.record(
            "congruences",
            CongruenceQuery {
                group,
                prime,
                order: m,
            },
            &report,
            || congruence_text(&report),
        );
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SporadicRow {
    group: &'static str,
    order: String,
    factored: String,
    /// Primes marked abelian in the published table.
    printed: Vec<u64>,
    /// Primes with a nontrivial abelian Sylow subgroup.
    abelian: Vec<u64>,
}

pub fn sporadic(out: &mut Printer) -> CmdResult {
    let grid = sporadic_grid();
    let header: String = GRID_PRIMES.iter().map(|r| format!("{r:>4}")).collect();
    out.note(format!("{:<6}{header}", ""));
    let mut anomalies = Vec::new();
    for s in Sporadic::ALL {
        let cells: Vec<_> = grid.iter().filter(|c| c.group == s.name()).collect();
        let record = s.record();
        let row = SporadicRow {
            group: s.name(),
            order: record.order.value().to_string(),
            factored: record.order.to_string(),
            printed: cells.iter().filter(|c| c.printed).map(|c| c.r).collect(),
            abelian: cells.iter().filter(|c| c.abelian).map(|c| c.r).collect(),
        };
        for c in cells.iter().filter(|c| c.printed != c.abelian) {
            anomalies.push(format!(
                "{} at {}: printed {}, v_{} = {}",
                c.group,
                c.r,
                if c.printed { "+" } else { "blank" },
                c.r,
                c.valuation
            ));
        }
        out.record("sporadic", serde_json::Value::Null, &row, || {
            let marks: String = cells
                .iter()
                .map(|c| {
                    let mark = match (c.printed, c.abelian) {
                        (true, true) => "+",
                        (false, false) => ".",
                        (true, false) => "+!",
                        (false, true) => ".!",
                    };
                    format!("{mark:>4}")
                })
                .collect();
            format!("{:<6}{marks}", row.group)
        });
    }
    if !anomalies.is_empty() {
        out.note("cells marked ! disagree with the group orders:");
        for a in anomalies {
            out.note(format!("  {a}"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    passed: bool,
    #[serde(flatten)]
    report: &'a SuiteReport,
}

pub fn verify(out: &mut Printer, suite: &str) -> CmdResult {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(CliError::Syntax)?]
    };
    let mut all_passed = true;
    for suite in suites {
        let report = run_suite(suite);
        let passed = report.passed();
        all_passed &= passed;
        let quiet = out.quiet();
        let record = VerifyOut {
            passed,
            report: &report,
        };
        out.record(
            "verify",
            serde_json::json!({ "suite": suite.name() }),
            &record,
            || {
                let mut text = format!("{suite}: {}", if passed { "PASS" } else { "FAIL" });
                if quiet {
                    return text;
                }
                for check in &report.checks {
                    let status = if check.passed() { "PASS" } else { "FAIL" };
                    text.push_str(&format!(
                        "\n  {status}  {} ({} cases, {} failed)",
                        check.name, check.cases, check.failed
                    ));
                    for failure in &check.failures {
                        text.push_str(&format!("\n        {failure}"));
                    }
                }
                for finding in &report.findings {
                    text.push_str(&format!(
                        "\n  documented finding: {}: {}",
                        finding.topic, finding.detail
                    ));
                }
                text
            },
        );
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
