//! Text and JSON rendering of analyses, lattice reports and
//! verification summaries. All output is deterministic.

use serde_json::{json, Value};

use covlat::verify::{SweepSummary, TheoremReport};
use covlat::{
    AlgebraObstruction, ApproxSpace, ClassificationReport, Covering, FixedPointFamily, Subset,
};

fn labels(s: &Subset) -> Value {
    Value::from(s.label_vec())
}

fn block_line(blocks: &[Subset]) -> String {
    blocks
        .iter()
        .map(|b| b.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn covering_json(covering: &Covering) -> (Value, Value) {
    let universe = Value::from(covering.universe().labels().to_vec());
    let blocks = Value::from(covering.blocks().iter().map(labels).collect::<Vec<Value>>());
    (universe, blocks)
}

pub fn analyze_text(space: &ApproxSpace) -> String {
    let u = space.universe();
    let covering = space.covering();
    let mut out = String::new();
    out.push_str(&format!(
        "universe ({}): {}\n",
        u.size(),
        u.labels().join(" ")
    ));
    out.push_str(&format!(
        "covering ({} blocks): {}\n",
        covering.len(),
        block_line(covering.blocks())
    ));
    for x in 0..u.size() {
        out.push_str(&format!(
            "N({}) = {}\n",
            u.label(x),
            space.neighborhood(x).unwrap()
        ));
    }
    for x in 0..u.size() {
        let md = space
            .minimal_description(x)
            .unwrap()
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!("Md({}) = {{{md}}}\n", u.label(x)));
    }
    out.push_str(&format!("unary: {}\n", space.is_unary()));
    out.push_str(&format!(
        "neighborhoods form a partition: {}\n",
        space.neighborhoods_form_partition()
    ));
    let reduct = space.reduct();
    out.push_str(&format!(
        "reduct ({} blocks): {}\n",
        reduct.len(),
        block_line(reduct.blocks())
    ));
    out.push_str(&format!(
        "reduct is a partition: {}\n",
        space.reduct_is_partition()
    ));
    out
}

pub fn analyze_json(space: &ApproxSpace) -> Value {
    let u = space.universe();
    let (universe, covering) = covering_json(space.covering());
    let neighborhoods: Vec<Value> = (0..u.size())
        .map(|x| labels(&space.neighborhood(x).unwrap()))
        .collect();
    let minimal: Vec<Value> = (0..u.size())
        .map(|x| {
            Value::from(
                space
                    .minimal_description(x)
                    .unwrap()
                    .iter()
                    .map(labels)
                    .collect::<Vec<Value>>(),
            )
        })
        .collect();
    let (_, reduct_blocks) = covering_json(space.reduct());
    json!({
        "universe": universe,
        "covering": covering,
        "neighborhoods": neighborhoods,
        "minimal_descriptions": minimal,
        "unary": space.is_unary(),
        "neighborhoods_form_partition": space.neighborhoods_form_partition(),
        "reduct": reduct_blocks,
        "reduct_is_partition": space.reduct_is_partition(),
    })
}

fn obstruction_text(o: &AlgebraObstruction) -> String {
    format!("  ({o})")
}

pub fn lattice_text(family: &FixedPointFamily, report: &ClassificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "family {} over {} ({} members)\n",
        family.kind().letter(),
        family.space().covering(),
        family.len()
    ));
    out.push_str(&format!("members: {}\n", block_line(family.members())));
    out.push_str(&format!(
        "join-irreducible: {}\n",
        block_line(&family.join_irreducibles())
    ));
    out.push_str(&format!("bounded: {}\n", report.bounded));
    out.push_str(&format!("complete: {}\n", report.complete));
    match &report.distributivity_witness {
        None => out.push_str(&format!("distributive: {}\n", report.distributive)),
        Some([a, b, c]) => out.push_str(&format!(
            "distributive: false  (witness a={a} b={b} c={c})\n"
        )),
    }
    match &report.complemented_witness {
        None => out.push_str(&format!("complemented: {}\n", report.complemented)),
        Some(w) => out.push_str(&format!("complemented: false  (no complement for {w})\n")),
    }
    out.push_str(&format!("boolean: {}\n", report.boolean));
    out.push_str(&format!(
        "pseudocomplemented: {}\n",
        report.pseudocomplemented
    ));
    out.push_str(&format!(
        "dual pseudocomplemented: {}\n",
        report.dual_pseudocomplemented
    ));
    out.push_str(&format!("double p-algebra: {}\n", report.double_p_algebra));
    match &report.stone_witness {
        None => out.push_str(&format!("stone: {}\n", report.stone)),
        Some(o) => out.push_str(&format!("stone: false{}\n", obstruction_text(o))),
    }
    match &report.dual_stone_witness {
        None => out.push_str(&format!("dual stone: {}\n", report.dual_stone)),
        Some(o) => out.push_str(&format!("dual stone: false{}\n", obstruction_text(o))),
    }
    out.push_str(&format!("double stone: {}\n", report.double_stone));
    out
}

fn obstruction_json(o: &AlgebraObstruction) -> Value {
    match o {
        AlgebraObstruction::NotDistributive([a, b, c]) => json!({
            "kind": "not-distributive",
            "sets": [labels(a), labels(b), labels(c)],
        }),
        AlgebraObstruction::NoPseudocomplement(x) => json!({
            "kind": "no-pseudocomplement",
            "sets": [labels(x)],
        }),
        AlgebraObstruction::IdentityFails(x) => json!({
            "kind": "identity-fails",
            "sets": [labels(x)],
        }),
    }
}

pub fn lattice_json(family: &FixedPointFamily, report: &ClassificationReport) -> Value {
    let (universe, covering) = covering_json(family.space().covering());
    let mut classification = json!({
        "bounded": report.bounded,
        "complete": report.complete,
        "distributive": report.distributive,
        "complemented": report.complemented,
        "boolean": report.boolean,
        "pseudocomplemented": report.pseudocomplemented,
        "dual_pseudocomplemented": report.dual_pseudocomplemented,
        "double_p_algebra": report.double_p_algebra,
        "stone": report.stone,
        "dual_stone": report.dual_stone,
        "double_stone": report.double_stone,
    });
    let map = classification.as_object_mut().unwrap();
    if let Some([a, b, c]) = &report.distributivity_witness {
        map.insert(
            "distributivity_witness".into(),
            json!([labels(a), labels(b), labels(c)]),
        );
    }
    if let Some(w) = &report.complemented_witness {
        map.insert("complemented_witness".into(), labels(w));
    }
    if let Some(o) = &report.stone_witness {
        map.insert("stone_witness".into(), obstruction_json(o));
    }
    if let Some(o) = &report.dual_stone_witness {
        map.insert("dual_stone_witness".into(), obstruction_json(o));
    }
    json!({
        "universe": universe,
        "covering": covering,
        "family": family.kind().letter(),
        "members": family.members().iter().map(labels).collect::<Vec<Value>>(),
        "join_irreducible": family
            .join_irreducibles()
            .iter()
            .map(labels)
            .collect::<Vec<Value>>(),
        "classification": classification,
    })
}

pub fn report_line(report: &TheoremReport) -> String {
    let status = if !report.conclusion_holds {
        "FAIL"
    } else if report.hypothesis_held {
        "ok  "
    } else {
        "skip"
    };
    let mut line = format!("{status} {}", report.id);
    if !report.hypothesis_held {
        line.push_str("  (hypothesis not satisfied)");
    }
    if let Some(w) = &report.witness {
        line.push_str(&format!(
            "  [{} {}]",
            w.note,
            w.sets
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    line
}

pub fn file_report_text(space: &ApproxSpace, reports: &[TheoremReport]) -> String {
    let mut out = format!("covering: {}\n", space.covering());
    for report in reports {
        out.push_str(&report_line(report));
        out.push('\n');
    }
    let failures = reports.iter().filter(|r| !r.conclusion_holds).count();
    out.push_str(if failures == 0 {
        "result: all laws hold\n"
    } else {
        "result: VIOLATIONS FOUND\n"
    });
    out
}

pub fn file_report_json(space: &ApproxSpace, reports: &[TheoremReport]) -> Value {
    let (universe, covering) = covering_json(space.covering());
    json!({
        "mode": "file",
        "universe": universe,
        "covering": covering,
        "all_hold": reports.iter().all(|r| r.conclusion_holds),
        "theorems": reports
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "hypothesis_held": r.hypothesis_held,
                    "conclusion_holds": r.conclusion_holds,
                    "witness": r.witness.as_ref().map(|w| json!({
                        "note": w.note,
                        "sets": w.sets.iter().map(labels).collect::<Vec<Value>>(),
                    })),
                })
            })
            .collect::<Vec<Value>>(),
    })
}

pub fn summary_text(summary: &SweepSummary, heading: &str) -> String {
    let mut out = format!(
        "{heading}: {} covering(s) checked\n",
        summary.coverings_checked
    );
    for stat in &summary.stats {
        out.push_str(&format!(
            "{}  {}  (hypothesis held on {}/{})\n",
            if stat.failures == 0 { "ok  " } else { "FAIL" },
            stat.id,
            stat.hypothesis_held,
            stat.checked,
        ));
    }
    for failure in summary.failures.iter().take(5) {
        out.push_str(&format!(
            "failure #{} on {}: {}\n",
            failure.index,
            failure.covering,
            report_line(&failure.report)
        ));
    }
    out.push_str(if summary.all_hold() {
        "result: all laws hold\n"
    } else {
        "result: VIOLATIONS FOUND\n"
    });
    out
}

pub fn summary_json(summary: &SweepSummary, mode: &str) -> Value {
    json!({
        "mode": mode,
        "coverings_checked": summary.coverings_checked,
        "all_hold": summary.all_hold(),
        "theorems": summary
            .stats
            .iter()
            .map(|s| {
                json!({
                    "id": s.id,
                    "checked": s.checked,
                    "hypothesis_held": s.hypothesis_held,
                    "failures": s.failures,
                })
            })
            .collect::<Vec<Value>>(),
        "failures": summary
            .failures
            .iter()
            .map(|f| {
                let (universe, covering) = covering_json(&f.covering);
                json!({
                    "index": f.index,
                    "universe": universe,
                    "covering": covering,
                    "theorem": f.report.id,
                    "witness": f.report.witness.as_ref().map(|w| json!({
                        "note": w.note,
                        "sets": w.sets.iter().map(labels).collect::<Vec<Value>>(),
                    })),
                })
            })
            .collect::<Vec<Value>>(),
    })
}
