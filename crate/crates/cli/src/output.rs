//! Output documents for each command, in JSON and plain text.

use nagata_core::annihilator::{
    build_generators, minimalize, verify_annihilation, AnnihilationReport, Body, GeneratorSet, Item,
};
use nagata_core::hilbert::{bigraded_table, interior_row};
use nagata_core::lefschetz::{check_slp, check_wlp, LefschetzReport, LinearForm};
use nagata_core::oracle::{self, SpanCheck};
use nagata_core::{BigradedTable, FaceModel, NagataInput};
use serde::Serialize;
use serde_json::Value;

use crate::parse::{InputJson, SCHEMA};

/// Largest integer a JSON double holds exactly.
pub const MAX_SAFE_INTEGER: u64 = (1 << 53) - 1;

#[derive(Debug, Clone, Serialize)]
pub struct HilbertPayload {
    pub table: Vec<Vec<usize>>,
    pub vector: Vec<usize>,
    pub f_vector: Vec<usize>,
    pub duality_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorGroup {
    pub item: u8,
    pub tag: &'static str,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub checked: usize,
    pub all_pass: bool,
    pub failures: Vec<nagata_core::annihilator::Residue>,
}

impl From<AnnihilationReport> for Verification {
    fn from(r: AnnihilationReport) -> Self {
        Self {
            checked: r.checked,
            all_pass: r.all_pass(),
            failures: r.failures,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnnPayload {
    pub action: nagata_core::PairingAction,
    pub minimalized: bool,
    pub count: usize,
    pub groups: Vec<GeneratorGroup>,
    pub verification: Verification,
}

#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub i: u32,
    pub j: u32,
    pub closed_form: usize,
    pub oracle: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Generation {
    pub complete: bool,
    pub cells: Vec<SpanCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckPayload {
    pub closed_form: Vec<Vec<usize>>,
    pub oracle: Vec<Vec<usize>>,
    pub vector: Vec<usize>,
    pub equal: bool,
    pub mismatches: Vec<Mismatch>,
    pub self_dual: bool,
    pub generation: Generation,
    pub annihilation: Verification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_note: Option<String>,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HassePayload {
    pub nodes: usize,
    pub edges: usize,
    pub dot: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LefschetzPayload {
    pub wlp: LefschetzReport,
    pub slp: LefschetzReport,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Payload {
    Hilbert(HilbertPayload),
    Ann(AnnPayload),
    Check(CheckPayload),
    Hasse(HassePayload),
    Lefschetz(LefschetzPayload),
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub input: InputJson,
    #[serde(flatten)]
    pub payload: Payload,
}

impl OutputDocument {
    fn new(command: &'static str, input: &NagataInput, payload: Payload) -> Self {
        Self {
            schema_version: SCHEMA,
            command,
            input: InputJson::of(input),
            payload,
        }
    }

    /// False when `check` found a disagreement.
    pub fn ok(&self) -> bool {
        match &self.payload {
            Payload::Check(c) => c.ok,
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("plain data");
        stringify_large(&mut value);
        let mut out = serde_json::to_string_pretty(&value).expect("plain data");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "input: {}\n",
            self.input.expression.as_deref().unwrap_or("")
        );
        match &self.payload {
            Payload::Hilbert(h) => {
                out += &table_text(&h.table);
                out += &format!(
                    "vector: {}\nduality: {}\n",
                    list(&h.vector),
                    yes(h.duality_ok)
                );
            }
            Payload::Ann(a) => {
                out += &format!(
                    "action: {}\nminimalized: {}\n",
                    a.action.name(),
                    yes(a.minimalized)
                );
                for g in &a.groups {
                    out += &format!("[{}] {}: {}\n", g.item, g.tag, g.generators.join(", "));
                }
                out += &verification_text(&a.verification);
            }
            Payload::Check(c) => {
                out += "closed form:\n";
                out += &table_text(&c.closed_form);
                out += "oracle:\n";
                out += &table_text(&c.oracle);
                out += &format!("vector: {}\n", list(&c.vector));
                out += &format!("tables equal: {}\n", yes(c.equal));
                for m in &c.mismatches {
                    out += &format!(
                        "  a[{}][{}]: closed form {}, oracle {}\n",
                        m.i, m.j, m.closed_form, m.oracle
                    );
                }
                out += &format!("self dual: {}\n", yes(c.self_dual));
                out += &format!("generators complete: {}\n", yes(c.generation.complete));
                for s in c.generation.cells.iter().filter(|s| s.span != s.expected) {
                    out += &format!(
                        "  ({}, {}): span {}, expected {}\n",
                        s.i, s.j, s.span, s.expected
                    );
                }
                out += &verification_text(&c.annihilation);
                if let Some(note) = &c.paper_note {
                    out += &format!("note: {note}\n");
                }
                out += &format!("status: {}\n", if c.ok { "ok" } else { "MISMATCH" });
            }
            Payload::Hasse(h) => out = h.dot.clone(),
            Payload::Lefschetz(l) => {
                out += &report_text("weak", &l.wlp);
                out += &report_text("strong", &l.slp);
            }
        }
        out
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn table_text(table: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for (i, row) in table.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>5}")).collect();
        out += &format!("  i={i}:{}\n", cells.join(""));
    }
    out
}

fn verification_text(v: &Verification) -> String {
    let mut out = format!(
        "annihilate f: {} ({} checked)\n",
        yes(v.all_pass),
        v.checked
    );
    for r in &v.failures {
        out += &format!("  {} leaves {}\n", r.generator, r.residue);
    }
    out
}

fn report_text(name: &str, r: &LefschetzReport) -> String {
    let mut out = format!("{name} lefschetz: {}\n", yes(r.verdict));
    if let Some(form) = &r.form {
        let c: Vec<String> = form
            .coefficients()
            .iter()
            .map(ToString::to_string)
            .collect();
        out += &format!("  form: ({})\n", c.join(", "));
    }
    for m in r.maps.iter().filter(|m| !m.maximal) {
        out += &format!(
            "  L^{} on A_{}: rank {} of {}\n",
            m.power, m.degree, m.rank, m.max
        );
    }
    if let Some(note) = &r.note {
        out += &format!("  {note}\n");
    }
    for h in &r.hessians {
        let tag = if h.nonvanishing_certified {
            "nonzero"
        } else if h.vanishing_evidence {
            "deficient at every point (evidence of vanishing)"
        } else {
            "deficient at sampled points"
        };
        out += &format!("  hess^{} ({}x{}): {tag}\n", h.k, h.size, h.size);
    }
    out
}

/// Replace integers beyond `MAX_SAFE_INTEGER` by decimal strings.
pub fn stringify_large(value: &mut Value) {
    match value {
        Value::Number(n) => {
            let big = match (n.as_u64(), n.as_i64()) {
                (Some(u), _) => u > MAX_SAFE_INTEGER,
                (None, Some(i)) => i.unsigned_abs() > MAX_SAFE_INTEGER,
                _ => false,
            };
            if big {
                *value = Value::String(n.to_string());
            }
        }
        Value::Array(items) => items.iter_mut().for_each(stringify_large),
        Value::Object(map) => map.values_mut().for_each(stringify_large),
        _ => {}
    }
}

fn item_tag(item: Item) -> &'static str {
    match item {
        Item::XProduct => "x_products",
        Item::UPower => "u_power",
        Item::NonFace => "minimal_nonfaces",
        Item::MissingVariable => "missing_variables",
        Item::NonDivisor => "nondivisors",
        Item::Binomial => "binomials",
    }
}

fn render_generator(g: &nagata_core::Generator, m: usize) -> String {
    match g.body {
        Body::UPower(d) => {
            let vars: Vec<String> = (1..=m).map(|k| format!("U{k}")).collect();
            format!("({})^{d}", vars.join(","))
        }
        Body::Terms(_) => g.to_string(),
    }
}

fn groups(gens: &GeneratorSet) -> Vec<GeneratorGroup> {
    Item::ALL
        .iter()
        .map(|&item| GeneratorGroup {
            item: item.number(),
            tag: item_tag(item),
            generators: gens
                .by_item(item)
                .map(|g| render_generator(g, gens.m))
                .collect(),
        })
        .collect()
}

pub fn hilbert(input: &NagataInput) -> OutputDocument {
    let model = FaceModel::build(input);
    let table = bigraded_table(&model, input.d1());
    let payload = HilbertPayload {
        vector: table.hilbert_vector(),
        f_vector: model.f_vector().to_vec(),
        duality_ok: table.is_self_dual(),
        table: table.a,
    };
    OutputDocument::new("hilbert", input, Payload::Hilbert(payload))
}

pub fn ann(input: &NagataInput, minimal: bool) -> OutputDocument {
    let model = FaceModel::build(input);
    let mut gens = build_generators(input, &model);
    if minimal {
        gens = minimalize(&gens);
    }
    let payload = AnnPayload {
        action: gens.action,
        minimalized: gens.minimalized,
        count: gens.generators.len(),
        groups: groups(&gens),
        verification: verify_annihilation(&gens, input).into(),
    };
    OutputDocument::new("ann", input, Payload::Ann(payload))
}

/// For `d1 = 1` the only nonzero row past 0 is the mirror row. Reading it
/// with the interior count `sum_r f_(j,r)` changes the vector; the note
/// lists where.
pub fn mirror_row_note(model: &FaceModel, table: &BigradedTable) -> Option<String> {
    if table.d1 != 1 {
        return None;
    }
    let interior = interior_row(model);
    let h = table.hilbert_vector();
    let parts: Vec<String> = (0..=table.d2)
        .filter(|&j| interior[j as usize] != table.get(1, j))
        .map(|j| {
            let (naive, actual) = (interior[j as usize], table.get(1, j));
            let k = j as usize + 1;
            format!(
                "a[1][{j}] = {actual} (interior count {naive}), so h_{k} = {} (not {})",
                h[k],
                h[k] - actual + naive
            )
        })
        .collect();
    if parts.is_empty() {
        return None;
    }
    Some(format!(
        "d1 = 1: row 1 is the mirrored face row, not the interior count; {}",
        parts.join("; ")
    ))
}

pub fn check(input: &NagataInput) -> OutputDocument {
    let model = FaceModel::build(input);
    let closed = bigraded_table(&model, input.d1());
    let gens = build_generators(input, &model);
    let report = oracle::report(input, &closed, &gens);
    let annihilation: Verification = verify_annihilation(&gens, input).into();
    let ok = report.matches_closed_form
        && report.self_dual
        && report.generators_complete
        && annihilation.all_pass;
    let payload = CheckPayload {
        vector: closed.hilbert_vector(),
        paper_note: mirror_row_note(&model, &closed),
        closed_form: closed.a,
        oracle: report.table.a,
        equal: report.matches_closed_form,
        mismatches: report
            .mismatches
            .into_iter()
            .map(|(i, j, closed_form, oracle)| Mismatch {
                i,
                j,
                closed_form,
                oracle,
            })
            .collect(),
        self_dual: report.self_dual,
        generation: Generation {
            complete: report.generators_complete,
            cells: report.generation,
        },
        annihilation,
        ok,
    };
    OutputDocument::new("check", input, Payload::Check(payload))
}

pub fn hasse(input: &NagataInput) -> OutputDocument {
    let model = FaceModel::build(input);
    let dot = model.hasse_dot();
    let payload = HassePayload {
        nodes: dot.lines().filter(|l| l.contains("[label=")).count(),
        edges: dot.lines().filter(|l| l.contains("->")).count(),
        dot,
    };
    OutputDocument::new("hasse", input, Payload::Hasse(payload))
}

pub fn lefschetz(
    input: &NagataInput,
    trials: usize,
    seed: u64,
) -> nagata_core::error::Result<OutputDocument> {
    let payload = LefschetzPayload {
        wlp: check_wlp(input, &LinearForm::sum_of_x(input))?,
        slp: check_slp(input, trials, seed)?,
    };
    Ok(OutputDocument::new(
        "lefschetz",
        input,
        Payload::Lefschetz(payload),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nagata_core::fixtures;

    #[test]
    fn large_integers_become_strings() {
        let mut v = serde_json::json!({"a": [1, 9007199254740991u64, 9007199254740992u64], "b": -9007199254740993i64});
        stringify_large(&mut v);
        assert_eq!(
            v,
            serde_json::json!({"a": [1, 9007199254740991u64, "9007199254740992"], "b": "-9007199254740993"})
        );
    }

    #[test]
    fn octahedron_note() {
        let input = fixtures::octahedron(1);
        let model = FaceModel::build(&input);
        let note = mirror_row_note(&model, &bigraded_table(&model, 1)).unwrap();
        assert!(
            note.contains("a[1][1] = 12 (interior count 24), so h_2 = 24 (not 36)"),
            "{note}"
        );
        let two = fixtures::octahedron(2);
        let model = FaceModel::build(&two);
        assert!(mirror_row_note(&model, &bigraded_table(&model, 2)).is_none());
    }

    #[test]
    fn check_passes_on_fixtures() {
        for input in [
            fixtures::octahedron(1),
            fixtures::edges_and_loop(2),
            fixtures::binary_cubics(),
        ] {
            let doc = check(&input);
            assert!(doc.ok(), "{}", doc.to_text());
        }
    }

    #[test]
    fn u_power_rendering() {
        let doc = ann(&fixtures::edges_and_loop(2), false);
        let Payload::Ann(a) = &doc.payload else {
            unreachable!()
        };
        assert_eq!(a.groups[1].generators, ["(U1,U2,U3)^3"]);
        assert_eq!(a.groups[5].tag, "binomials");
    }

    #[test]
    fn hasse_counts() {
        let doc = hasse(&fixtures::octahedron(2));
        let Payload::Hasse(h) = &doc.payload else {
            unreachable!()
        };
        assert_eq!((h.nodes, h.edges), (27, 54));
    }
}
