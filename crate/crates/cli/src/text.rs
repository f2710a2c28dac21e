//! Plain-text rendering of a report, derived from its JSON form so the two
//! formats never disagree.

use std::fmt::Write;

use serde_json::Value;

use crate::job::Command;
use crate::run::Report;

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn yes(v: &Value) -> &'static str {
    if v.as_bool() == Some(true) {
        "yes"
    } else {
        "no"
    }
}

fn groups(out: &mut String, symbol: &str, list: &Value) {
    let parts: Vec<String> = list
        .as_array()
        .into_iter()
        .flatten()
        .map(|g| format!("{symbol}{} = {}", sub(&s(&g["degree"])), s(&g["group"]["presentation"])))
        .collect();
    let _ = writeln!(out, "{}", parts.join(", "));
}

fn sub(n: &str) -> String {
    n.chars()
        .map(|c| match c {
            '-' => '₋',
            d @ '0'..='9' => char::from_u32('₀' as u32 + d.to_digit(10).unwrap()).unwrap(),
            c => c,
        })
        .collect()
}

fn sup(n: &str) -> String {
    n.chars()
        .map(|c| match c {
            '-' => '⁻',
            '1' => '¹',
            '2' => '²',
            '3' => '³',
            d @ '0'..='9' => char::from_u32('⁰' as u32 + d.to_digit(10).unwrap()).unwrap(),
            c => c,
        })
        .collect()
}

fn list(v: &Value) -> String {
    match v {
        Value::Array(xs) => format!("({})", xs.iter().map(list).collect::<Vec<_>>().join(", ")),
        other => s(other),
    }
}

fn integrality_lines(out: &mut String, r: &Value) {
    let _ = writeln!(out, "H{}(f) = {}", sub(&s(&r["degree"])), s(&r["homology"]["presentation"]));
    for g in r["generators"].as_array().into_iter().flatten() {
        let _ = writeln!(out, "  {} generator pairs to {}", s(&g["kind"]), s(&g["value"]));
    }
    let _ = writeln!(out, "integral: {}", yes(&r["integral"]));
    if !r["violating"].is_null() {
        let _ = writeln!(out, "violating value: {}", s(&r["violating"]["value"]));
    }
    let _ = writeln!(out, "minimal multiplier: {}", s(&r["minimal_multiplier"]));
}

fn coordinates(c: &Value) -> String {
    format!("torsion {}, free {}", list(&c["torsion"]), list(&c["free"]))
}

/// Renders `report` for a terminal.
pub fn render(report: &Report) -> String {
    let r = &report.result;
    let mut out = String::new();
    let _ = writeln!(out, "{} ({})", report.command, report.input_digest);
    match report.command {
        Command::Homology => {
            let _ = writeln!(out, "space: {}  coefficients: {}", s(&r["space"]), s(&r["coefficients"]));
            groups(&mut out, "H", &r["homology"]);
            let _ = writeln!(out, "Euler characteristic: {}", s(&r["euler_characteristic"]));
        }
        Command::RelativeHomology => {
            let _ = writeln!(out, "map: {}  coefficients: {}", s(&r["map"]), s(&r["coefficients"]));
            groups(&mut out, "H", &r["homology"]);
            let _ = writeln!(out, "quasi-isomorphism: {}", yes(&r["quasi_isomorphism"]));
        }
        Command::ConeCompare => {
            let _ = writeln!(out, "map: {}", s(&r["map"]));
            for d in r["comparison"]["degrees"].as_array().into_iter().flatten() {
                let _ = writeln!(
                    out,
                    "  degree {}: algebraic {}, topological {}, cylinder {}",
                    s(&d["degree"]),
                    s(&d["algebraic"]["presentation"]),
                    s(&d["topological"]["presentation"]),
                    s(&d["cylinder"]["presentation"]),
                );
            }
            let _ = writeln!(out, "cones agree: {}", yes(&r["agree"]));
        }
        Command::Cech => {
            let name = if r["relative"] == Value::Bool(true) { &r["cover_map"] } else { &r["nerve"] };
            let _ = writeln!(out, "{}: {}  coefficients: {}", if r["relative"] == Value::Bool(true) { "cover map" } else { "nerve" }, s(name), s(&r["coefficients"]));
            let parts: Vec<String> = r["cohomology"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|g| format!("Ȟ{} = {}", sup(&s(&g["degree"])), s(&g["group"]["presentation"])))
                .collect();
            let _ = writeln!(out, "{}", parts.join(", "));
        }
        Command::GerbeClass | Command::RelativeGerbeClass => {
            let class = if report.command == Command::GerbeClass { &r["class"] } else { &r["relative_class"]["class"] };
            let _ = writeln!(out, "class degree: {}", s(&r["class_degree"]));
            let _ = writeln!(out, "group: {}", s(&class["group"]["presentation"]));
            let _ = writeln!(out, "coordinates: {}", coordinates(&class["coordinates"]));
            let _ = writeln!(out, "trivial: {}", yes(&r["trivial"]));
        }
        Command::Integrality | Command::BohrSommerfeld => {
            let _ = writeln!(out, "map: {}", s(&r["map"]));
            integrality_lines(&mut out, &r["report"]);
        }
        Command::Prequant => {
            let p = &r["report"];
            let _ = writeln!(out, "model: {}  level: {}", s(&r["model"]), s(&p["level"]));
            let _ = writeln!(out, "H₂(source) = {}", s(&p["source_h2"]["presentation"]));
            let _ = writeln!(out, "η integral: {}", yes(&p["eta_integral"]));
            let shortcut = &p["shortcut"];
            match shortcut["status"].as_str() {
                Some("applies") => {
                    let _ = writeln!(out, "torsion shortcut: applies (r = {})", s(&shortcut["r"]));
                }
                _ => {
                    let _ = writeln!(out, "torsion shortcut: not applicable ({})", s(&shortcut["reason"]));
                }
            }
            let _ = writeln!(out, "pre-quantizable: {}", yes(&p["prequantizable"]));
        }
        Command::LiePrequant => {
            let _ = writeln!(out, "group: {}  level: {}", s(&r["group"]), s(&r["level"]));
            let _ = writeln!(out, "point: {}", list(&r["point"]));
            if r["reflections"].as_u64().unwrap_or(0) > 0 {
                let _ = writeln!(out, "reflections: {}", s(&r["reflections"]));
            }
            let _ = writeln!(out, "in alcove: {}", yes(&r["in_alcove"]));
            let _ = writeln!(out, "weight coordinates: {}", list(&r["weight_coordinates"]));
            let _ = writeln!(out, "in weight lattice: {}", yes(&r["in_lattice"]));
            let _ = writeln!(out, "pre-quantizable: {}", yes(&r["prequantizable"]));
        }
        Command::LieInfo => {
            for key in [
                "group",
                "rank",
                "root_count",
                "simple_roots",
                "cartan",
                "highest_root",
                "marks",
                "fundamental_weights",
                "alcove_vertices",
                "min_vertex_level",
            ] {
                let _ = writeln!(out, "{}: {}", key.replace('_', " "), list(&r[key]));
            }
        }
    }
    out
}
