//! Task dispatch: turns a resolved document plus a task into a report,
//! and renders reports in human or machine form. Reports are
//! deterministic for a fixed document; timing is excluded from equality.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::coeff::{artinian_ideal, dg_point, small_extension_step, tensor};
use crate::cohdef::{
    deformed_cohomology, formality_zigzag, gauge_trivial_decision, in_image_of_truncated,
    is_deformation, DeformedComplex, GaugeDecision,
};
use crate::cone::{def_on_c0, extended_tangent, long_exact_sequence, suspended_cone, tangent_space};
use crate::doc::{HomTerm, Resolved, Task, TaskEntry, TensorTerm, WorkbenchDocument};
use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedSpace, LinearMap};
use crate::htp::{cartan_check, Contraction};
use crate::mc::{
    bch, gauge_action, gauge_group_law_check, mc_lift, mc_pair, obstruction_class,
    primary_obstruction, McSetting,
};
use crate::path::path_object;
use crate::rational::{format_rat, parse_rat, rint, Rat};
use crate::whitehead::Whitehead;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassEntry {
    pub name: String,
    pub degree: i32,
    pub coords: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TranscriptStep {
    pub order: usize,
    pub class: Vec<String>,
    pub corrected: bool,
}

/// Result of one task. Equality ignores `elapsed_ms`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub task: String,
    pub name: String,
    /// table name -> degree (as string) -> dimension
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dimensions: BTreeMap<String, BTreeMap<String, usize>>,
    /// scalar results and verdicts
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<ClassEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub transcript: Vec<TranscriptStep>,
    pub elapsed_ms: u64,
}

impl PartialEq for Report {
    fn eq(&self, other: &Self) -> bool {
        self.task == other.task
            && self.name == other.name
            && self.dimensions == other.dimensions
            && self.values == other.values
            && self.classes.iter().map(class_key).collect::<Vec<_>>()
                == other.classes.iter().map(class_key).collect::<Vec<_>>()
            && self.transcript.iter().map(step_key).collect::<Vec<_>>()
                == other.transcript.iter().map(step_key).collect::<Vec<_>>()
    }
}

fn class_key(c: &ClassEntry) -> (String, i32, Vec<String>) {
    (c.name.clone(), c.degree, c.coords.clone())
}

fn step_key(s: &TranscriptStep) -> (usize, Vec<String>, bool) {
    (s.order, s.class.clone(), s.corrected)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Format, String> {
        match s {
            "human" => Ok(Format::Human),
            "machine" => Ok(Format::Machine),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Machine => serde_json::to_string_pretty(report).expect("report serialization"),
        Format::Human => {
            let mut out = String::new();
            let push = |out: &mut String, s: String| {
                out.push_str(&s);
                out.push('\n');
            };
            push(&mut out, format!("task: {} ({})", report.task, report.name));
            for (table, dims) in &report.dimensions {
                let row: Vec<String> = dims.iter().map(|(d, n)| format!("{d}:{n}")).collect();
                push(&mut out, format!("  dims {table}: {}", row.join(" ")));
            }
            for (k, v) in &report.values {
                push(&mut out, format!("  {k}: {v}"));
            }
            for c in &report.classes {
                push(
                    &mut out,
                    format!("  class {} (degree {}): [{}]", c.name, c.degree, c.coords.join(", ")),
                );
            }
            for s in &report.transcript {
                push(
                    &mut out,
                    format!(
                        "  order {}: class [{}]{}",
                        s.order,
                        s.class.join(", "),
                        if s.corrected { " corrected" } else { " obstructed" }
                    ),
                );
            }
            push(&mut out, format!("  elapsed: {} ms", report.elapsed_ms));
            out
        }
    }
}

pub fn parse_report(text: &str) -> Result<Report> {
    Ok(serde_json::from_str(text)?)
}

fn fmt_coords(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

fn parse_coords(v: &[String]) -> Result<Vec<Rat>> {
    v.iter().map(|s| parse_rat(s)).collect()
}

/// "1·label + …" over the labels of a space; "0" for zero.
fn fmt_element(space: &GradedSpace, e: &GradedElement) -> String {
    let mut terms = Vec::new();
    for (&deg, coords) in e.coords_map() {
        for (idx, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                terms.push(format!("{}·{}", format_rat(c), space.labels(deg)[idx]));
            }
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn dims_table(dims: &BTreeMap<i32, usize>) -> BTreeMap<String, usize> {
    dims.iter().map(|(d, &n)| (d.to_string(), n)).collect()
}

/// Runs every task of the document in order.
pub fn run_all(doc: &WorkbenchDocument, resolved: &Resolved) -> Result<Vec<Report>> {
    doc.tasks
        .iter()
        .map(|entry| run(doc, resolved, entry))
        .collect()
}

/// Runs the first task matching `kind` (and the entry name, if given).
pub fn run_named(
    doc: &WorkbenchDocument,
    resolved: &Resolved,
    kind: &str,
    name: Option<&str>,
) -> Result<Report> {
    let entry = doc
        .tasks
        .iter()
        .find(|e| {
            e.task.kind() == kind && name.is_none_or(|n| e.name.as_deref() == Some(n))
        })
        .ok_or_else(|| Error::UnknownTask(kind.to_string()))?;
    run(doc, resolved, entry)
}

pub fn run(doc: &WorkbenchDocument, resolved: &Resolved, entry: &TaskEntry) -> Result<Report> {
    let started = Instant::now();
    let mut report = Report {
        task: entry.task.kind().to_string(),
        name: entry
            .name
            .clone()
            .unwrap_or_else(|| entry.task.kind().to_string()),
        dimensions: BTreeMap::new(),
        values: BTreeMap::new(),
        classes: Vec::new(),
        transcript: Vec::new(),
        elapsed_ms: 0,
    };
    run_task(doc, resolved, &entry.task, &mut report)?;
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// The source/target section names of a morphism, for resolving basis
/// labels in task payloads.
fn morphism_ends<'a>(doc: &'a WorkbenchDocument, name: &str) -> (&'a str, &'a str) {
    let section = &doc.morphisms[name];
    (&section.source, &section.target)
}

fn tensor_element(
    resolved: &Resolved,
    dgla: &str,
    t: &crate::coeff::TensorDgla,
    terms: &[TensorTerm],
) -> Result<GradedElement> {
    let n = t.coeff.dim(0) + 1;
    let mut out = GradedElement::zero();
    for term in terms {
        if term.power < 1 || term.power >= n {
            return Err(Error::OutOfRange(format!(
                "t-power {} outside 1..{n}",
                term.power
            )));
        }
        let base = resolved.element(dgla, &term.element)?;
        let tk = t.coeff.space().basis_element(0, term.power - 1);
        out = out.add(&t.tensor_elem(&base, &tk));
    }
    Ok(out)
}

fn hom_terms(
    resolved: &Resolved,
    complex: &str,
    terms: &[HomTerm],
) -> Result<Vec<(usize, LinearMap)>> {
    terms
        .iter()
        .map(|t| Ok((t.power, resolved.degree_map(complex, complex, &t.entries, 1)?)))
        .collect()
}

fn deformed_complex(
    resolved: &Resolved,
    complex: &str,
    order: usize,
    x: &[HomTerm],
) -> Result<DeformedComplex> {
    let base = &resolved.dglas[complex].dgla.complex;
    let terms = hom_terms(resolved, complex, x)?;
    let elem = DeformedComplex::element_from_terms(base, order, &terms)?;
    DeformedComplex::new(base, order, elem)
}

fn run_task(
    doc: &WorkbenchDocument,
    resolved: &Resolved,
    task: &Task,
    report: &mut Report,
) -> Result<()> {
    match task {
        Task::Validate { dgla, morphism } => {
            if let Some(name) = dgla {
                let v = resolved.dglas[name].dgla.validate();
                report
                    .values
                    .insert("violations".into(), v.violations.len().to_string());
                for (k, violation) in v.violations.iter().enumerate() {
                    report
                        .values
                        .insert(format!("violation_{k}"), format!("{violation:?}"));
                }
                report
                    .values
                    .insert("valid".into(), v.is_valid().to_string());
            }
            if let Some(name) = morphism {
                // morphisms only resolve if chain-map and bracket
                // compatibility hold, so presence means validity
                report.values.insert(
                    "morphism_valid".into(),
                    resolved.morphisms.contains_key(name).to_string(),
                );
            }
        }
        Task::Cohomology { dgla } => {
            let h = resolved.dglas[dgla].dgla.complex.cohomology()?;
            report
                .dimensions
                .insert("cohomology".into(), dims_table(&h.dims()));
            for (&deg, &n) in h.dims().iter() {
                for k in 0..n {
                    let rep = h.representative(deg, k);
                    report.classes.push(ClassEntry {
                        name: format!("h{deg}_{k}"),
                        degree: deg,
                        coords: fmt_coords(&rep.degree_part(deg, h.complex.dim(deg))),
                    });
                }
            }
        }
        Task::Cone { morphism } => {
            let cone = suspended_cone(&resolved.morphisms[morphism])?;
            let mut dims = BTreeMap::new();
            for deg in cone.complex.space.degrees() {
                dims.insert(deg, cone.complex.dim(deg));
            }
            report.dimensions.insert("cone".into(), dims_table(&dims));
            let h = cone.cohomology()?;
            report
                .dimensions
                .insert("cohomology".into(), dims_table(&h.dims()));
        }
        Task::Les { morphism } => {
            let les = long_exact_sequence(&resolved.morphisms[morphism])?;
            report
                .dimensions
                .insert("cone".into(), dims_table(&les.h_cone.dims()));
            report
                .dimensions
                .insert("source".into(), dims_table(&les.h_l.dims()));
            report
                .dimensions
                .insert("target".into(), dims_table(&les.h_m.dims()));
            report.values.insert("exact".into(), les.exact.to_string());
            for node in &les.nodes {
                report.values.insert(
                    format!("node {} degree {}", node.at, node.degree),
                    node.exact.to_string(),
                );
            }
        }
        Task::Tangent { morphism } => {
            let t = tangent_space(&resolved.morphisms[morphism])?;
            report.values.insert("dim".into(), t.dim.to_string());
            report
                .values
                .insert("functor_dim".into(), t.def_side.dim.to_string());
            for k in 0..t.dim {
                let rep = t.h1.representative(1, k);
                report.values.insert(
                    format!("representative_{k}"),
                    fmt_element(&t.cone.complex.space, &rep),
                );
                report.classes.push(ClassEntry {
                    name: format!("h1_{k}"),
                    degree: 1,
                    coords: fmt_coords(&rep.degree_part(1, t.cone.complex.dim(1))),
                });
            }
        }
        Task::ExtendedTangent { morphism, n } => {
            let t = extended_tangent(&resolved.morphisms[morphism], *n)?;
            report.values.insert("n".into(), n.to_string());
            report
                .values
                .insert("cone_dim".into(), t.cone_dim.to_string());
            report
                .values
                .insert("functor_dim".into(), t.def_side.dim.to_string());
            report.values.insert(
                "agree".into(),
                (t.cone_dim == t.def_side.dim).to_string(),
            );
        }
        Task::DefC0 { morphism, point } => {
            let c = dg_point(*point);
            let d = def_on_c0(&resolved.morphisms[morphism], &c)?;
            report.values.insert("dim".into(), d.dim.to_string());
        }
        Task::McLift {
            morphism,
            order,
            seed,
        } => {
            let t = mc_lift(&resolved.morphisms[morphism], *order, &parse_coords(seed)?)?;
            report
                .values
                .insert("reached".into(), t.reached.to_string());
            report
                .values
                .insert("obstructed".into(), t.obstructed.to_string());
            for step in &t.steps {
                report.transcript.push(TranscriptStep {
                    order: step.order,
                    class: fmt_coords(&step.class),
                    corrected: step.correction.is_some(),
                });
            }
        }
        Task::Obstruction {
            morphism,
            order,
            x,
            a,
        } => {
            let chi = &resolved.morphisms[morphism];
            let (src, tgt) = morphism_ends(doc, morphism);
            let ext = small_extension_step(*order)?;
            let setting_q = McSetting::new(chi, &ext.quotient)?;
            let xe = tensor_element(resolved, src, &setting_q.tl, x)?;
            let ae = tensor_element(resolved, tgt, &setting_q.tm, a)?;
            let pair = mc_pair(&setting_q, &xe, &ae)?;
            let oc = obstruction_class(chi, &ext, &pair, &setting_q)?;
            report
                .values
                .insert("zero".into(), oc.is_zero().to_string());
            report.classes.push(ClassEntry {
                name: "obstruction".into(),
                degree: 2,
                coords: fmt_coords(&oc.class),
            });
        }
        Task::PrimaryObstruction { morphism, x, a } => {
            let chi = &resolved.morphisms[morphism];
            let (src, tgt) = morphism_ends(doc, morphism);
            let cone = suspended_cone(chi)?;
            let h = cone.cohomology()?;
            let xe = resolved.element(src, x)?;
            let ae = resolved.element(tgt, a)?;
            let coords = primary_obstruction(chi, &cone, &h, &xe, &ae)?;
            report.values.insert(
                "zero".into(),
                coords.iter().all(Zero::is_zero).to_string(),
            );
            report.classes.push(ClassEntry {
                name: "primary_obstruction".into(),
                degree: 2,
                coords: fmt_coords(&coords),
            });
        }
        Task::GaugeCheck {
            dgla,
            order,
            samples,
        } => {
            let seed = doc.seed.ok_or_else(|| {
                Error::OutOfRange("gauge-check samples randomly and needs a document seed".into())
            })?;
            let g = &resolved.dglas[dgla].dgla;
            let t = tensor(g, &artinian_ideal(*order)?)?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut random = |deg: i32| {
                let coords = (0..t.dgla.dim(deg))
                    .map(|_| rint(rng.gen_range(-2..=2)))
                    .collect();
                GradedElement::from_degree(deg, coords)
            };
            let mut all_hold = true;
            for _ in 0..*samples {
                let a = random(0);
                let b = random(0);
                let w = random(1);
                all_hold &= gauge_action(&t.dgla, &GradedElement::zero(), &w)? == w;
                all_hold &= gauge_group_law_check(&t.dgla, &a, &b, &w, *order)?;
            }
            report
                .values
                .insert("samples".into(), samples.to_string());
            report.values.insert("seed".into(), seed.to_string());
            report
                .values
                .insert("all_hold".into(), all_hold.to_string());
        }
        Task::Bch { dgla, order, a, b } => {
            let g = &resolved.dglas[dgla].dgla;
            let t = tensor(g, &artinian_ideal(*order)?)?;
            let ae = tensor_element(resolved, dgla, &t, a)?;
            let be = tensor_element(resolved, dgla, &t, b)?;
            let out = bch(&t.dgla, &ae, &be, *order)?;
            report
                .values
                .insert("result".into(), fmt_element(t.dgla.space(), &out));
            report.classes.push(ClassEntry {
                name: "bch".into(),
                degree: 0,
                coords: fmt_coords(&out.degree_part(0, t.dgla.dim(0))),
            });
        }
        Task::PathObject { morphism, bound } => {
            let r = path_object(&resolved.morphisms[morphism], *bound)?;
            for (n, dims) in &r.slices {
                report
                    .dimensions
                    .insert(format!("weight_{n}"), dims_table(dims));
            }
            report
                .dimensions
                .insert("cone".into(), dims_table(&r.cone_dims));
            report.values.insert(
                "stabilized_at".into(),
                r.stabilized_at
                    .map_or_else(|| "none".into(), |n| n.to_string()),
            );
            report
                .values
                .insert("matches_cone".into(), r.matches_cone.to_string());
        }
        Task::Flatness {
            complex,
            order,
            x,
            degree,
        } => {
            let dc = deformed_complex(resolved, complex, *order, x)?;
            let am = deformed_cohomology(&dc, *degree)?;
            report.values.insert("degree".into(), degree.to_string());
            report.values.insert(
                "exponents".into(),
                am.exponents
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            report
                .values
                .insert("generators".into(), am.generator_count().to_string());
            report
                .values
                .insert("free".into(), am.is_free().to_string());
            report.values.insert(
                "deformation".into(),
                is_deformation(&dc, *degree)?.to_string(),
            );
        }
        Task::GaugeTrivial { complex, order, x } => {
            let dc = deformed_complex(resolved, complex, *order, x)?;
            match gauge_trivial_decision(&dc)? {
                GaugeDecision::Trivial { .. } => {
                    report.values.insert("trivial".into(), "true".into());
                    report
                        .values
                        .insert("witness_verified".into(), "true".into());
                }
                GaugeDecision::NotTrivial { degree, exponents } => {
                    report.values.insert("trivial".into(), "false".into());
                    report
                        .values
                        .insert("obstructing_degree".into(), degree.to_string());
                    report.values.insert(
                        "exponents".into(),
                        exponents
                            .iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                    );
                }
            }
        }
        Task::Truncation {
            complex,
            order,
            x,
            degree,
        } => {
            let dc = deformed_complex(resolved, complex, *order, x)?;
            report.values.insert("degree".into(), degree.to_string());
            report.values.insert(
                "in_image".into(),
                in_image_of_truncated(&dc, *degree)?.to_string(),
            );
        }
        Task::Zigzag { v, w, inclusion } => {
            let vc = &resolved.dglas[v].dgla.complex;
            let wc = &resolved.dglas[w].dgla.complex;
            let incl = resolved.degree_map(v, w, inclusion, 0)?;
            let z = formality_zigzag(vc, wc, &incl)?;
            let mut kdims = BTreeMap::new();
            for deg in z.k.space().degrees() {
                kdims.insert(deg, z.k.dim(deg));
            }
            report.dimensions.insert("k".into(), dims_table(&kdims));
            report
                .values
                .insert("alpha_quasi_iso".into(), z.alpha_quasi_iso.to_string());
            report
                .values
                .insert("beta_quasi_iso".into(), z.beta_quasi_iso.to_string());
        }
        Task::Whitehead {
            morphism,
            i,
            a,
            j,
            b,
        } => {
            let wh = Whitehead::new(&resolved.morphisms[morphism])?;
            report
                .dimensions
                .insert("quotient_cohomology".into(), dims_table(&wh.h.dims()));
            let coords = wh.product(*i, &parse_coords(a)?, *j, &parse_coords(b)?)?;
            report.values.insert(
                "zero".into(),
                coords.iter().all(Zero::is_zero).to_string(),
            );
            report.classes.push(ClassEntry {
                name: "whitehead_product".into(),
                degree: i + j + 1,
                coords: fmt_coords(&coords),
            });
        }
        Task::CartanCheck {
            model,
            dgla,
            contraction,
        } => {
            let m = &resolved.models[model];
            let g = &resolved.dglas[dgla];
            let mut maps = BTreeMap::new();
            for (label, entries) in contraction {
                let key = *g.labels.get(label).ok_or_else(|| Error::Document {
                    path: "contraction".into(),
                    message: format!("unknown basis label {label:?}"),
                })?;
                maps.insert(key, resolved.model_map(model, entries, key.0 - 1)?);
            }
            let r = cartan_check(&m.model, &g.dgla, &Contraction { maps })?;
            report.values.insert("passed".into(), r.passed.to_string());
            report.values.insert(
                "morphism_into_derived".into(),
                r.morphism_into_derived
                    .map_or_else(|| "n/a".into(), |b| b.to_string()),
            );
            for (k, f) in r.failures.iter().enumerate() {
                report.values.insert(
                    format!("failure_{k}"),
                    format!("{} at {}", f.identity, f.witness),
                );
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::doc::{dgla_section, morphism_section, parse_document, resolve};

    fn uwz_document() -> WorkbenchDocument {
        let chi = corpus::uwz_inclusion();
        let mut doc = WorkbenchDocument::default();
        doc.seed = Some(11);
        doc.dglas.insert("sub".into(), dgla_section(&chi.source));
        doc.dglas.insert("uwz".into(), dgla_section(&chi.target));
        doc.morphisms
            .insert("chi".into(), morphism_section(&chi, "sub", "uwz"));
        doc
    }

    fn entry(json: &str) -> TaskEntry {
        serde_json::from_str(json).unwrap()
    }

    fn run_one(doc: &WorkbenchDocument, task_json: &str) -> Report {
        let resolved = resolve(doc).unwrap();
        run(doc, &resolved, &entry(task_json)).unwrap()
    }

    #[test]
    fn validate_and_cohomology_reports() {
        let doc = uwz_document();
        let r = run_one(&doc, r#"{"task": "validate", "dgla": "uwz", "morphism": "chi"}"#);
        assert_eq!(r.values["violations"], "0");
        assert_eq!(r.values["valid"], "true");
        assert_eq!(r.values["morphism_valid"], "true");
        let r = run_one(&doc, r#"{"task": "cohomology", "dgla": "uwz"}"#);
        assert_eq!(r.dimensions["cohomology"]["1"], 1);
    }

    #[test]
    fn tangent_report_names_the_pair() {
        let doc = uwz_document();
        let r = run_one(&doc, r#"{"task": "tangent", "morphism": "chi"}"#);
        assert_eq!(r.values["dim"], "1");
        assert_eq!(r.values["functor_dim"], "1");
        // the representative is (w, u) in the cone basis
        let rep = &r.values["representative_0"];
        assert!(rep.contains('w') && rep.contains('u'), "{rep}");
    }

    #[test]
    fn primary_obstruction_report_is_half_z() {
        let doc = uwz_document();
        let r = run_one(
            &doc,
            r#"{"task": "primary-obstruction", "morphism": "chi",
                "x": {"w1_0": "1"}, "a": {"u": "1"}}"#,
        );
        assert_eq!(r.values["zero"], "false");
        assert_eq!(r.classes[0].coords, vec!["1/2".to_string()]);
    }

    #[test]
    fn obstruction_task_matches_library() {
        let doc = uwz_document();
        let r = run_one(
            &doc,
            r#"{"task": "obstruction", "morphism": "chi", "order": 3,
                "x": [{"power": 1, "element": {"w1_0": "1"}}],
                "a": [{"power": 1, "element": {"u": "1"}}]}"#,
        );
        assert_eq!(r.values["zero"], "false");
        assert_eq!(r.classes[0].coords, vec!["1/2".to_string()]);
    }

    #[test]
    fn gauge_check_and_bch_tasks() {
        let doc = uwz_document();
        let r = run_one(
            &doc,
            r#"{"task": "gauge-check", "dgla": "uwz", "order": 4, "samples": 5}"#,
        );
        assert_eq!(r.values["all_hold"], "true");
        let r = run_one(
            &doc,
            r#"{"task": "bch", "dgla": "uwz", "order": 4,
                "a": [{"power": 1, "element": {"u": "1"}}],
                "b": [{"power": 2, "element": {"u": "1"}}]}"#,
        );
        // commuting arguments: plain sum
        assert!(r.values["result"].contains("u"), "{:?}", r.values);
        let seedless = WorkbenchDocument {
            seed: None,
            ..doc.clone()
        };
        let resolved = resolve(&seedless).unwrap();
        let err = run(
            &seedless,
            &resolved,
            &entry(r#"{"task": "gauge-check", "dgla": "uwz", "order": 3, "samples": 2}"#),
        );
        assert!(err.is_err());
    }

    #[test]
    fn report_round_trip_and_determinism() {
        let doc = uwz_document();
        let r1 = run_one(&doc, r#"{"task": "les", "morphism": "chi"}"#);
        let r2 = run_one(&doc, r#"{"task": "les", "morphism": "chi"}"#);
        assert_eq!(r1, r2);
        let back = parse_report(&emit(&r1, Format::Machine)).unwrap();
        assert_eq!(back, r1);
        let human = emit(&r1, Format::Human);
        for table in r1.dimensions.keys() {
            assert!(human.contains(table.as_str()));
        }
        assert!(human.contains("elapsed"));
    }

    #[test]
    fn run_named_selects_by_kind() {
        let mut doc = uwz_document();
        doc.tasks.push(entry(r#"{"task": "cone", "morphism": "chi"}"#));
        doc.tasks
            .push(entry(r#"{"task": "tangent", "morphism": "chi"}"#));
        let text = crate::doc::emit_document(&doc);
        let doc = parse_document(&text).unwrap();
        let resolved = resolve(&doc).unwrap();
        let r = run_named(&doc, &resolved, "tangent", None).unwrap();
        assert_eq!(r.task, "tangent");
        assert!(matches!(
            run_named(&doc, &resolved, "zigzag", None),
            Err(Error::UnknownTask(_))
        ));
        let all = run_all(&doc, &resolved).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].task, "cone");
    }
}
