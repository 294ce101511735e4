use std::time::Instant;

use semigroup_forge::{
    bfs_levels, class_min_frobenius, enumerate_packed, existence, is_packed, make_semigroup,
    min_frobenius, min_frobenius_full_set, min_frobenius_packed, min_genus, min_genus_packed,
    wilf_audit, Error, Existence, NumericalSemigroup, SearchOutcome,
};
use serde_json::{json, Value};

use crate::render::{self, semigroup_json};
use crate::verify;
use crate::{Cli, Command, Failure, Generators, Show, Via, MAX_LEVELS, MAX_MULTIPLICITY};

/// Everything a command produces before formatting.
pub(crate) struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub lines: Vec<String>,
    pub explored: Option<u64>,
    /// `None` when `--verify` was not requested.
    pub verify: Option<Result<String, String>>,
    pub elapsed_ms: Option<u128>,
    pub wilf_violations: usize,
}

impl Report {
    fn new(command: &'static str, inputs: Value) -> Self {
        Report {
            command,
            inputs,
            result: Value::Null,
            lines: Vec::new(),
            explored: None,
            verify: None,
            elapsed_ms: None,
            wilf_violations: 0,
        }
    }
}

type Outcome = Result<String, (Option<String>, Failure)>;

pub(crate) fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let mut report = build(cli).map_err(|f| (None, f))?;
    if cli.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    let out = render::render(&report, cli.format);
    if let Some(Err(msg)) = &report.verify {
        return Err((Some(out), Failure::Verification(msg.clone())));
    }
    if report.wilf_violations > 0 {
        let msg = format!(
            "{} semigroup(s) violate e·g ≤ (e−1)(F+1)",
            report.wilf_violations
        );
        return Err((Some(out), Failure::Wilf(msg)));
    }
    Ok(out)
}

fn check_family(m: u64, e: u64) -> Result<Existence, Failure> {
    if m == 0 {
        return Err(Failure::Usage("m must be positive".into()));
    }
    if e == 0 {
        return Err(Failure::Usage("e must be at least 1".into()));
    }
    if m < e {
        return Err(Failure::Usage(format!(
            "m = {m} < e = {e}: the embedding dimension never exceeds the multiplicity"
        )));
    }
    if m > MAX_MULTIPLICITY {
        return Err(Failure::Usage(format!(
            "m = {m} exceeds the limit {MAX_MULTIPLICITY}"
        )));
    }
    match existence(m, e) {
        Existence::Empty => Err(Failure::EmptyFamily(format!(
            "L({m},{e}) is empty: only ℕ has embedding dimension 1"
        ))),
        other => Ok(other),
    }
}

fn check_levels(levels: u64) -> Result<(), Failure> {
    if levels > MAX_LEVELS {
        return Err(Failure::Usage(format!(
            "--levels {levels} exceeds the limit {MAX_LEVELS}"
        )));
    }
    Ok(())
}

fn semigroup_from(gens: &Generators) -> Result<NumericalSemigroup, Failure> {
    let s = make_semigroup(&gens.0).map_err(|e| Failure::Usage(e.to_string()))?;
    if s.multiplicity() > MAX_MULTIPLICITY {
        return Err(Failure::Usage(format!(
            "multiplicity {} exceeds the limit {MAX_MULTIPLICITY}",
            s.multiplicity()
        )));
    }
    Ok(s)
}

fn lib_failure(err: Error) -> Failure {
    match err {
        Error::Family {
            existence: Existence::Empty,
            ..
        } => Failure::EmptyFamily(err.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn naturals_outcome(kind: semigroup_forge::SearchKind) -> SearchOutcome {
    let n = NumericalSemigroup::naturals();
    let (value, level) = match kind {
        semigroup_forge::SearchKind::Genus => (0, Some(0)),
        semigroup_forge::SearchKind::Frobenius => (-1, None),
    };
    SearchOutcome {
        kind,
        m: 1,
        e: 1,
        value,
        minimizers: vec![n],
        level,
        explored: 1,
    }
}

fn build(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::MinGenus { m, e, via } => min_genus_cmd(cli, *m, *e, *via),
        Command::MinFrobenius {
            m,
            e,
            full_set,
            via,
        } => min_frobenius_cmd(cli, *m, *e, *full_set, *via),
        Command::Packed { m, e, show } => packed_cmd(cli, *m, *e, *show),
        Command::Tree { m, levels } => tree_cmd(cli, *m, *levels),
        Command::ClassMinFrob { generators } => class_cmd(cli, generators),
        Command::Info { generators } => info_cmd(cli, generators),
        Command::AuditWilf { m, e, levels } => wilf_cmd(cli, *m, *e, *levels),
    }
}

fn via_name(via: Via) -> &'static str {
    match via {
        Via::Tree => "tree",
        Via::Packed => "packed",
    }
}

fn outcome_report(
    command: &'static str,
    inputs: Value,
    route: &str,
    o: &SearchOutcome,
    symbol: &str,
) -> Report {
    let mut report = Report::new(command, inputs);
    let mut result = json!({
        "route": route,
        "value": o.value,
        "count": o.minimizers.len(),
        "minimizers": o.minimizers.iter().map(semigroup_json).collect::<Vec<_>>(),
    });
    report
        .lines
        .push(format!("{symbol}({},{}) = {}", o.m, o.e, o.value));
    if let Some(level) = o.level {
        result["level"] = json!(level);
        report.lines.push(format!("tree level P = {level}"));
    }
    report.lines.push(format!("route: {route}"));
    report
        .lines
        .push(format!("minimizers ({}):", o.minimizers.len()));
    report
        .lines
        .extend(o.minimizers.iter().map(render::semigroup_line));
    report.result = result;
    report.explored = Some(o.explored);
    report
}

fn min_genus_cmd(cli: &Cli, m: u64, e: u64, via: Via) -> Result<Report, Failure> {
    let inputs = json!({ "m": m, "e": e, "via": via_name(via) });
    let fam = check_family(m, e)?;
    let outcome = if fam == Existence::OnlyNaturals {
        naturals_outcome(semigroup_forge::SearchKind::Genus)
    } else {
        match via {
            Via::Tree => min_genus(m, e),
            Via::Packed => min_genus_packed(m, e),
        }
        .map_err(lib_failure)?
    };
    let mut report = outcome_report("min-genus", inputs, via_name(via), &outcome, "g");
    if cli.verify {
        report.verify = Some(verify::min_genus(&outcome));
    }
    Ok(report)
}

fn min_frobenius_cmd(
    cli: &Cli,
    m: u64,
    e: u64,
    full_set: bool,
    via: Via,
) -> Result<Report, Failure> {
    let inputs = json!({ "m": m, "e": e, "via": via_name(via), "full_set": full_set });
    let fam = check_family(m, e)?;
    let (route, outcome) = if fam == Existence::OnlyNaturals {
        (
            "trivial",
            naturals_outcome(semigroup_forge::SearchKind::Frobenius),
        )
    } else {
        let r = match (via, full_set) {
            (Via::Tree, _) => ("tree", min_frobenius(m, e)),
            (Via::Packed, false) => ("packed", min_frobenius_packed(m, e)),
            (Via::Packed, true) => ("packed+class", min_frobenius_full_set(m, e)),
        };
        (r.0, r.1.map_err(lib_failure)?)
    };
    let mut report = outcome_report("min-frobenius", inputs, route, &outcome, "F");
    if cli.verify {
        let complete = route != "packed";
        report.verify = Some(verify::min_frobenius(&outcome, complete));
    }
    Ok(report)
}

fn packed_cmd(cli: &Cli, m: u64, e: u64, show: Option<Show>) -> Result<Report, Failure> {
    let inputs =
        json!({ "m": m, "e": e, "show": show.map(|s| match s { Show::G => "g", Show::F => "f" }) });
    check_family(m, e)?;
    let family = enumerate_packed(m, e).map_err(lib_failure)?;
    let mut report = Report::new("packed", inputs);
    report.result = json!({
        "count": family.members.len(),
        "members": family.members.iter().map(semigroup_json).collect::<Vec<_>>(),
    });
    report.lines.push(format!(
        "C({m},{e}): {} packed semigroups",
        family.members.len()
    ));
    for s in &family.members {
        report.lines.push(match show {
            None => render::semigroup_line(s),
            Some(Show::G) => format!("  {s}  g={}", s.genus()),
            Some(Show::F) => format!("  {s}  F={}", s.frobenius()),
        });
    }
    report.explored = Some(family.members.len() as u64);
    if cli.verify {
        report.verify = Some(verify::packed(m, e, &family.members));
    }
    Ok(report)
}

fn tree_cmd(cli: &Cli, m: u64, levels: u64) -> Result<Report, Failure> {
    let inputs = json!({ "m": m, "levels": levels });
    if m == 0 || m > MAX_MULTIPLICITY {
        return Err(Failure::Usage(format!(
            "m must lie in 1..={MAX_MULTIPLICITY}, got {m}"
        )));
    }
    check_levels(levels)?;
    let all: Vec<_> = bfs_levels(m).take(levels as usize + 1).collect();
    let mut report = Report::new("tree", inputs);
    let mut json_levels = Vec::new();
    let mut total = 0u64;
    for lvl in &all {
        let genus = m - 1 + lvl.level_index;
        total += lvl.len() as u64;
        report.lines.push(format!(
            "N({},L({m})): {} semigroups of genus {genus}",
            lvl.level_index,
            lvl.len()
        ));
        report.lines.extend(lvl.iter().map(render::semigroup_line));
        json_levels.push(json!({
            "level": lvl.level_index,
            "genus": genus,
            "count": lvl.len(),
            "members": lvl.iter().map(semigroup_json).collect::<Vec<_>>(),
        }));
    }
    report.result = json!({ "levels": json_levels });
    report.explored = Some(total);
    if cli.verify {
        report.verify = Some(verify::tree(m, &all));
    }
    Ok(report)
}

fn class_cmd(cli: &Cli, gens: &Generators) -> Result<Report, Failure> {
    let inputs = json!({ "generators": gens.0 });
    let s = semigroup_from(gens)?;
    if !is_packed(&s) {
        return Err(Failure::Usage(Error::NotPacked(s.to_string()).to_string()));
    }
    let members: Vec<_> = class_min_frobenius(&s)
        .map_err(lib_failure)?
        .into_iter()
        .collect();
    let mut report = Report::new("class-min-frob", inputs);
    report.result = json!({
        "representative": semigroup_json(&s),
        "frobenius": s.frobenius(),
        "count": members.len(),
        "members": members.iter().map(semigroup_json).collect::<Vec<_>>(),
    });
    report.lines.push(format!(
        "class of {s} with F = {}: {} semigroups",
        s.frobenius(),
        members.len()
    ));
    report
        .lines
        .extend(members.iter().map(render::semigroup_line));
    report.explored = Some(members.len() as u64);
    if cli.verify {
        report.verify = Some(verify::class(&s, &members));
    }
    Ok(report)
}

fn info_cmd(cli: &Cli, gens: &Generators) -> Result<Report, Failure> {
    let inputs = json!({ "generators": gens.0 });
    let s = semigroup_from(gens)?;
    let apery = s.apery().entries().to_vec();
    let mut report = Report::new("info", inputs);
    report.result = json!({
        "semigroup": semigroup_json(&s),
        "multiplicity": s.multiplicity(),
        "embedding_dimension": s.embedding_dim(),
        "max_generator": s.max_gen(),
        "packed": is_packed(&s),
        "apery": apery,
    });
    report.lines.push(format!("semigroup: {s}"));
    report
        .lines
        .push(format!("multiplicity m = {}", s.multiplicity()));
    report
        .lines
        .push(format!("embedding dimension e = {}", s.embedding_dim()));
    report
        .lines
        .push(format!("Frobenius number F = {}", s.frobenius()));
    report.lines.push(format!("genus g = {}", s.genus()));
    report.lines.push(format!("packed: {}", is_packed(&s)));
    report.lines.push(format!(
        "Ap(S,{}) = {{{}}}",
        s.multiplicity(),
        s.apery()
            .sorted()
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    ));
    if cli.verify {
        report.verify = Some(verify::semigroups(std::slice::from_ref(&s)).map(|_| "sieve".into()));
    }
    Ok(report)
}

fn wilf_cmd(cli: &Cli, m: u64, e: u64, levels: u64) -> Result<Report, Failure> {
    let inputs = json!({ "m": m, "e": e, "levels": levels });
    check_family(m, e)?;
    check_levels(levels)?;
    let members: Vec<NumericalSemigroup> = bfs_levels(m)
        .take(levels as usize + 1)
        .flat_map(|l| l.members)
        .filter(|s| s.embedding_dim() == e)
        .collect();
    let audit = wilf_audit(&members);
    let mut report = Report::new("audit-wilf", inputs);
    report.result = json!({
        "checked": audit.checked,
        "skipped": audit.skipped,
        "violations": audit.violations.iter().map(|v| json!({
            "semigroup": semigroup_json(&v.semigroup),
            "lhs": v.lhs as i64,
            "rhs": v.rhs as i64,
        })).collect::<Vec<_>>(),
    });
    report.lines.push(format!(
        "Wilf audit over levels 0..={levels} of L({m}), e = {e}: {} checked, {} skipped, {} violations",
        audit.checked,
        audit.skipped,
        audit.violations.len()
    ));
    for v in &audit.violations {
        report.lines.push(format!(
            "  VIOLATION {}: e·g = {} > (e−1)(F+1) = {}",
            v.semigroup, v.lhs, v.rhs
        ));
    }
    report.wilf_violations = audit.violations.len();
    report.explored = Some(members.len() as u64);
    if cli.verify {
        report.verify = Some(verify::semigroups(&members).map(|_| "sieve".into()));
    }
    Ok(report)
}
