//! Turning reports into text.
//!
//! Two renderings of a subgroup computation: a human-readable trace that
//! walks the five steps in order, and a machine-readable JSON document with
//! every intermediate artifact. The JSON serializer keeps keys sorted, so
//! identical inputs produce byte-identical output.

use std::fmt::Write as _;

use necsig::hoare::{Chain, Link, LinkSource, OrbitAnalysis, OrbitKind, SubgroupReport};
use necsig::lowindex::IndexTwoSubgroup;
use necsig::representation::{ActionReport, CosetAction, OrientabilityKind, OrientabilityVerdict};
use necsig::signature::NecSignature;
use serde_json::{json, Value};

fn cycle_text(cycle: &[u32]) -> String {
    if cycle.is_empty() {
        "( )".to_string()
    } else {
        let inner: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
        format!("({})", inner.join(","))
    }
}

fn orbit_text(orbit: &[usize]) -> String {
    let inner: Vec<String> = orbit.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn orientability_text(verdict: &OrientabilityVerdict) -> String {
    match verdict.kind {
        OrientabilityKind::Fuchsian => "fuchsian".to_string(),
        OrientabilityKind::OrientableNec => "orientable nec".to_string(),
        OrientabilityKind::Nonorientable => {
            let w = verdict
                .witness
                .as_ref()
                .expect("nonorientable verdicts carry a witness");
            format!("nonorientable, witness at coset {}: {}", w.base, w.display)
        }
    }
}

fn chain_line(chain: &Chain) -> String {
    format!("{} -> cycle {}", chain, cycle_text(&chain.period_cycle()))
}

/// The signature alone, or the full five-step trace when `trace` is set.
pub fn render_text(action: &CosetAction, report: &SubgroupReport, trace: bool) -> String {
    if !trace {
        return format!("{}\n", report.signature);
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        "input: degree {} action on {}",
        report.degree,
        action.signature()
    );

    let _ = writeln!(
        out,
        "\nstep 1: induced reflections (fixed cosets of reflection generators)"
    );
    if report.induced_reflections.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    for r in &report.induced_reflections {
        let _ = writeln!(out, "  {r}");
    }

    if !report.elliptic_by_generator.is_empty() {
        let _ = writeln!(out, "\nelliptic periods from rotation generators");
        for (j, periods) in report.elliptic_by_generator.iter().enumerate() {
            if periods.is_empty() {
                let _ = writeln!(out, "  x{} -> (none)", j + 1);
            } else {
                let list: Vec<String> = periods.iter().map(|p| p.to_string()).collect();
                let _ = writeln!(out, "  x{} -> {}", j + 1, list.join(", "));
            }
        }
    }

    let _ = writeln!(out, "\nsteps 2-4: reflection pair orbits");
    if report.orbit_analyses.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    let mut last_pair = (usize::MAX, usize::MAX);
    for a in &report.orbit_analyses {
        if (a.cycle, a.pos) != last_pair {
            let _ = writeln!(
                out,
                "  pair (c{}.{}, c{}.{}), n = {}",
                a.cycle,
                a.pos - 1,
                a.cycle,
                a.pos,
                a.n
            );
            last_pair = (a.cycle, a.pos);
        }
        match &a.kind {
            OrbitKind::Elliptic { period } => {
                let _ = writeln!(
                    out,
                    "    orbit {}: m = {}, elliptic period {}",
                    orbit_text(&a.orbit),
                    a.m,
                    period
                );
            }
            OrbitKind::Link { link } => {
                let _ = writeln!(
                    out,
                    "    orbit {}: m = {}, link {}",
                    orbit_text(&a.orbit),
                    a.m,
                    link
                );
            }
        }
    }

    let _ = writeln!(out, "\nstep 5: closing links along connecting generators");
    let closing: Vec<&Link> = report
        .links
        .iter()
        .filter(|l| matches!(l.source, LinkSource::Closing { .. }))
        .collect();
    if closing.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    for l in closing {
        let LinkSource::Closing { cycle } = l.source else {
            unreachable!()
        };
        let _ = writeln!(out, "  e{cycle}: {l}");
    }

    let _ = writeln!(out, "\nchains");
    if report.chains.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    for chain in &report.chains {
        let _ = writeln!(out, "  {}", chain_line(chain));
    }

    let _ = writeln!(
        out,
        "\norientability: {}",
        orientability_text(&report.orientability)
    );
    let _ = writeln!(
        out,
        "area: {} * {} = {}",
        report.area.input_area, report.area.index, report.area.subgroup_area
    );
    let _ = writeln!(out, "genus: {}", report.genus);
    let _ = writeln!(out, "signature: {}", report.signature);
    out
}

fn link_json(link: &Link) -> Value {
    let source = match link.source {
        LinkSource::Dihedral { cycle, pos } => {
            format!("dihedral (c{}.{}, c{}.{})", cycle, pos - 1, cycle, pos)
        }
        LinkSource::Closing { cycle } => format!("closing e{cycle}"),
    };
    json!({
        "end1": link.end1.to_string(),
        "end2": link.end2.to_string(),
        "period": link.period,
        "source": source,
    })
}

fn orbit_json(a: &OrbitAnalysis) -> Value {
    let mut v = json!({
        "pair": format!("(c{}.{}, c{}.{})", a.cycle, a.pos - 1, a.cycle, a.pos),
        "n": a.n,
        "orbit": a.orbit,
        "m": a.m,
    });
    let obj = v.as_object_mut().unwrap();
    match &a.kind {
        OrbitKind::Elliptic { period } => {
            obj.insert("kind".to_string(), json!("elliptic"));
            obj.insert("period".to_string(), json!(period));
        }
        OrbitKind::Link { link } => {
            obj.insert("kind".to_string(), json!("link"));
            obj.insert("link".to_string(), link_json(link));
        }
    }
    v
}

/// The full report as pretty-printed JSON with sorted keys.
pub fn render_machine(action: &CosetAction, report: &SubgroupReport) -> String {
    let orientability = match report.orientability.kind {
        OrientabilityKind::Fuchsian => json!({"kind": "fuchsian", "witness": Value::Null}),
        OrientabilityKind::OrientableNec => {
            json!({"kind": "orientable_nec", "witness": Value::Null})
        }
        OrientabilityKind::Nonorientable => {
            let w = report.orientability.witness.as_ref().expect("witness");
            json!({
                "kind": "nonorientable",
                "witness": {"base": w.base, "word": w.display},
            })
        }
    };
    let mut elliptic = serde_json::Map::new();
    for (j, periods) in report.elliptic_by_generator.iter().enumerate() {
        elliptic.insert(format!("x{}", j + 1), json!(periods));
    }
    let doc = json!({
        "input": {
            "signature": action.signature().to_string(),
            "degree": report.degree,
        },
        "degree": report.degree,
        "induced_reflections": report
            .induced_reflections
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>(),
        "elliptic_by_generator": Value::Object(elliptic),
        "orbit_analyses": report.orbit_analyses.iter().map(orbit_json).collect::<Vec<_>>(),
        "links": report.links.iter().map(link_json).collect::<Vec<_>>(),
        "chains": report
            .chains
            .iter()
            .map(|c| {
                json!({
                    "vertices": c.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "periods": c.periods,
                    "cycle": c.period_cycle(),
                })
            })
            .collect::<Vec<_>>(),
        "proper_periods": report.proper_periods,
        "period_cycles": report.period_cycles,
        "orientability": orientability,
        "sign": report.signature.sign().to_string(),
        "area": {
            "input": report.area.input_area.to_string(),
            "index": report.area.index,
            "subgroup": report.area.subgroup_area.to_string(),
        },
        "genus": report.genus,
        "signature": report.signature.to_string(),
        "verified": report.action_verified,
        "warnings": report.warnings,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}

/// Validation verdict: the ok line, or one line per failed relator plus a
/// transitivity note. The bool is the verdict itself.
pub fn render_validation(report: &ActionReport) -> (String, bool) {
    if report.is_ok() {
        let line = format!(
            "ok: {} relators verified, transitive, degree {}\n",
            report.relators.len(),
            report.degree
        );
        return (line, true);
    }
    let mut out = String::new();
    for check in report.failed_relators() {
        let _ = writeln!(
            out,
            "relator {} evaluates to {}",
            check.display, check.image
        );
    }
    if !report.transitive {
        let orbit_list: Vec<String> = report.orbits.iter().map(|o| orbit_text(o)).collect();
        let _ = writeln!(
            out,
            "action is not transitive: orbits {}",
            orbit_list.join(" ")
        );
    }
    (out, false)
}

fn subgroup_block(
    out: &mut String,
    number: usize,
    action: &CosetAction,
    report: &SubgroupReport,
    negated: Option<&[String]>,
) {
    let _ = writeln!(out, "subgroup {number}");
    if let Some(names) = negated {
        let _ = writeln!(out, "  negated: {}", names.join(", "));
    }
    for (gen, image) in action
        .presentation()
        .generators()
        .iter()
        .zip(action.images())
    {
        let _ = writeln!(out, "  {} -> {}", gen.name, image);
    }
    let _ = writeln!(out, "  signature: {}", report.signature);
    let _ = writeln!(
        out,
        "  orientability: {}",
        orientability_text(&report.orientability)
    );
}

pub fn render_index_two(sig: &NecSignature, subgroups: &[IndexTwoSubgroup]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "index-2 subgroups of {sig}\n");
    for (i, sub) in subgroups.iter().enumerate() {
        subgroup_block(
            &mut out,
            i + 1,
            &sub.action,
            &sub.report,
            Some(&sub.negated),
        );
        let _ = writeln!(out);
    }
    let noun = if subgroups.len() == 1 {
        "subgroup"
    } else {
        "subgroups"
    };
    let _ = writeln!(out, "{} {} of index 2", subgroups.len(), noun);
    out
}

pub fn render_search(
    sig: &NecSignature,
    degree: usize,
    entries: &[(CosetAction, SubgroupReport)],
    complete: bool,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "index-{degree} subgroups of {sig}\n");
    for (i, (action, report)) in entries.iter().enumerate() {
        subgroup_block(&mut out, i + 1, action, report, None);
        let _ = writeln!(out);
    }
    let noun = if entries.len() == 1 {
        "subgroup"
    } else {
        "subgroups"
    };
    let _ = writeln!(out, "{} {} of index {}", entries.len(), noun, degree);
    if !complete {
        let _ = writeln!(
            out,
            "search stopped at the requested limit; the list may be incomplete"
        );
    }
    out
}
