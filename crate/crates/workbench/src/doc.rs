//! Declarative JSON documents describing algebras, morphisms, models and
//! tasks, with full resolution into library values and located
//! diagnostics. Rationals are strings ("p/q" or integers) so documents
//! stay exact and diffable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::CochainComplex;
use crate::dgla::{BasisKey, CommutativeSquare, Dgla, DglaMorphism};
use crate::graded::{GradedElement, GradedSpace, LinearMap};
use crate::htp::FiniteBicomplexModel;
use crate::matrix::Mat;
use crate::rational::{format_rat, parse_rat, Rat};

/// A located input problem: `path` names the section/field, `message`
/// says what went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub path: String,
    pub message: String,
}

fn diag(path: impl Into<String>, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkbenchDocument {
    /// required for any task that samples randomly
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dglas: BTreeMap<String, DglaSection>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, MorphismSection>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub models: BTreeMap<String, ModelSection>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub squares: BTreeMap<String, SquareSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tasks: Vec<TaskEntry>,
}

/// Basis labels per degree; labels must be unique across the whole
/// algebra since differentials and brackets refer to them by name.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DglaSection {
    pub degrees: BTreeMap<String, Vec<String>>,
    /// d(key) = Σ value[label] · label
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub differential: BTreeMap<String, BTreeMap<String, String>>,
    /// sparse structure constants; the mirror orientation is filled in
    /// by antisymmetry
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<ProductEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSection {
    pub source: String,
    pub target: String,
    /// image of each source basis label
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub map: BTreeMap<String, BTreeMap<String, String>>,
}

/// A finite algebra with two anticommuting differentials, for the
/// derived-bracket and Cartan-formula tasks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSection {
    pub degrees: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub del: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub delbar: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub products: Vec<ProductEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareSection {
    pub chi: String,
    pub eta: String,
    pub f: String,
    pub f2: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TaskEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub task: Task,
}

/// An element of L ⊗ (t)/(t^n): one term per t-power.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorTerm {
    pub power: usize,
    pub element: BTreeMap<String, String>,
}

/// A degree-1 endomorphism-valued term f ⊗ t^power, f given entrywise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomTerm {
    pub power: usize,
    /// entries label ↦ (label ↦ coefficient), one degree up
    pub entries: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "task", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Task {
    Validate {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dgla: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        morphism: Option<String>,
    },
    Cohomology {
        dgla: String,
    },
    Cone {
        morphism: String,
    },
    Les {
        morphism: String,
    },
    Tangent {
        morphism: String,
    },
    ExtendedTangent {
        morphism: String,
        n: i32,
    },
    DefC0 {
        morphism: String,
        /// degree of the shifted dg-point coefficient
        point: i32,
    },
    McLift {
        morphism: String,
        order: usize,
        seed: Vec<String>,
    },
    Obstruction {
        morphism: String,
        order: usize,
        x: Vec<TensorTerm>,
        a: Vec<TensorTerm>,
    },
    PrimaryObstruction {
        morphism: String,
        x: BTreeMap<String, String>,
        a: BTreeMap<String, String>,
    },
    GaugeCheck {
        dgla: String,
        order: usize,
        samples: usize,
    },
    Bch {
        dgla: String,
        order: usize,
        a: Vec<TensorTerm>,
        b: Vec<TensorTerm>,
    },
    PathObject {
        morphism: String,
        bound: usize,
    },
    Flatness {
        complex: String,
        order: usize,
        x: Vec<HomTerm>,
        degree: i32,
    },
    GaugeTrivial {
        complex: String,
        order: usize,
        x: Vec<HomTerm>,
    },
    Truncation {
        complex: String,
        order: usize,
        x: Vec<HomTerm>,
        degree: i32,
    },
    Zigzag {
        v: String,
        w: String,
        inclusion: BTreeMap<String, BTreeMap<String, String>>,
    },
    Whitehead {
        morphism: String,
        i: i32,
        a: Vec<String>,
        j: i32,
        b: Vec<String>,
    },
    CartanCheck {
        model: String,
        dgla: String,
        /// basis label of the algebra ↦ endomorphism entries of the model
        contraction: BTreeMap<String, BTreeMap<String, BTreeMap<String, String>>>,
    },
}

impl Task {
    /// The kebab-case task name, matching the CLI subcommand.
    pub fn kind(&self) -> &'static str {
        match self {
            Task::Validate { .. } => "validate",
            Task::Cohomology { .. } => "cohomology",
            Task::Cone { .. } => "cone",
            Task::Les { .. } => "les",
            Task::Tangent { .. } => "tangent",
            Task::ExtendedTangent { .. } => "extended-tangent",
            Task::DefC0 { .. } => "def-c0",
            Task::McLift { .. } => "mc-lift",
            Task::Obstruction { .. } => "obstruction",
            Task::PrimaryObstruction { .. } => "primary-obstruction",
            Task::GaugeCheck { .. } => "gauge-check",
            Task::Bch { .. } => "bch",
            Task::PathObject { .. } => "path-object",
            Task::Flatness { .. } => "flatness",
            Task::GaugeTrivial { .. } => "gauge-trivial",
            Task::Truncation { .. } => "truncation",
            Task::Zigzag { .. } => "zigzag",
            Task::Whitehead { .. } => "whitehead",
            Task::CartanCheck { .. } => "cartan-check",
        }
    }
}

/// A fully resolved document: every section turned into library values.
pub struct Resolved {
    pub dglas: BTreeMap<String, ResolvedDgla>,
    pub morphisms: BTreeMap<String, DglaMorphism>,
    pub models: BTreeMap<String, ResolvedModel>,
    pub squares: BTreeMap<String, CommutativeSquare>,
}

pub struct ResolvedDgla {
    pub dgla: Dgla,
    pub labels: BTreeMap<String, BasisKey>,
}

pub struct ResolvedModel {
    pub model: FiniteBicomplexModel,
    pub labels: BTreeMap<String, BasisKey>,
}

/// Parses and fully validates a document; resolution problems come back
/// as located diagnostics.
pub fn parse_document(text: &str) -> std::result::Result<WorkbenchDocument, Vec<Diagnostic>> {
    let doc: WorkbenchDocument =
        serde_json::from_str(text).map_err(|e| vec![diag("document", e.to_string())])?;
    resolve(&doc)?;
    Ok(doc)
}

pub fn emit_document(doc: &WorkbenchDocument) -> String {
    serde_json::to_string_pretty(doc).expect("document serialization")
}

fn parse_degree(s: &str, path: &str, out: &mut Vec<Diagnostic>) -> Option<i32> {
    match s.parse::<i32>() {
        Ok(d) => Some(d),
        Err(_) => {
            out.push(diag(path, format!("degree key {s:?} is not an integer")));
            None
        }
    }
}

fn parse_coeff(s: &str, path: &str, out: &mut Vec<Diagnostic>) -> Option<Rat> {
    match parse_rat(s) {
        Ok(r) => Some(r),
        Err(_) => {
            out.push(diag(path, format!("malformed rational {s:?}")));
            None
        }
    }
}

struct SpaceData {
    space: GradedSpace,
    labels: BTreeMap<String, BasisKey>,
}

fn build_space(
    degrees: &BTreeMap<String, Vec<String>>,
    path: &str,
    out: &mut Vec<Diagnostic>,
) -> Option<SpaceData> {
    let mut by_degree = BTreeMap::new();
    let mut labels = BTreeMap::new();
    for (ds, names) in degrees {
        let deg = parse_degree(ds, &format!("{path}.degrees"), out)?;
        for (idx, name) in names.iter().enumerate() {
            if labels.insert(name.clone(), (deg, idx)).is_some() {
                out.push(diag(
                    format!("{path}.degrees.{ds}"),
                    format!("duplicate basis label {name:?}"),
                ));
                return None;
            }
        }
        by_degree.insert(deg, names.clone());
    }
    match GradedSpace::new(by_degree) {
        Ok(space) => Some(SpaceData { space, labels }),
        Err(e) => {
            out.push(diag(format!("{path}.degrees"), e.to_string()));
            None
        }
    }
}

/// An element written as label ↦ coefficient, resolved against a space.
fn build_element(
    spec: &BTreeMap<String, String>,
    sd: &SpaceData,
    path: &str,
    out: &mut Vec<Diagnostic>,
) -> Option<GradedElement> {
    let mut elem = GradedElement::zero();
    for (label, cs) in spec {
        let Some(&(deg, idx)) = sd.labels.get(label) else {
            out.push(diag(path, format!("unknown basis label {label:?}")));
            return None;
        };
        let c = parse_coeff(cs, path, out)?;
        let dim = sd.space.dim(deg);
        let mut part = elem.degree_part(deg, dim);
        part[idx] = &part[idx] + &c;
        elem.set_degree(deg, part);
    }
    Some(elem)
}

/// A graded map given entrywise by labels; `degree` is checked against
/// the label degrees of every entry.
fn build_map(
    spec: &BTreeMap<String, BTreeMap<String, String>>,
    src: &SpaceData,
    tgt: &SpaceData,
    degree: i32,
    path: &str,
    out: &mut Vec<Diagnostic>,
) -> Option<LinearMap> {
    let mut blocks: BTreeMap<i32, Mat> = BTreeMap::new();
    for (from, cols) in spec {
        let Some(&(sdeg, sidx)) = src.labels.get(from) else {
            out.push(diag(path, format!("unknown basis label {from:?}")));
            return None;
        };
        let rows = tgt.space.dim(sdeg + degree);
        let block = blocks
            .entry(sdeg)
            .or_insert_with(|| Mat::zeros(rows, src.space.dim(sdeg)));
        for (to, cs) in cols {
            let Some(&(tdeg, tidx)) = tgt.labels.get(to) else {
                out.push(diag(path, format!("unknown basis label {to:?}")));
                return None;
            };
            if tdeg != sdeg + degree {
                out.push(diag(
                    path,
                    format!(
                        "entry {from:?} -> {to:?} changes degree by {}, expected {degree}",
                        tdeg - sdeg
                    ),
                ));
                return None;
            }
            let c = parse_coeff(cs, path, out)?;
            block.set(tidx, sidx, &block.get(tidx, sidx).clone() + &c);
        }
    }
    let mut map = LinearMap::zero(src.space.clone(), tgt.space.clone(), degree);
    for (deg, b) in blocks {
        map.set_block(deg, b);
    }
    Some(map)
}

fn build_products(
    entries: &[ProductEntry],
    sd: &SpaceData,
    path: &str,
    out: &mut Vec<Diagnostic>,
) -> Option<Vec<(BasisKey, BasisKey, GradedElement)>> {
    let mut table = Vec::new();
    for (k, e) in entries.iter().enumerate() {
        let epath = format!("{path}[{k}]");
        let key = |label: &String| sd.labels.get(label).copied();
        let (Some(a), Some(b)) = (key(&e.left), key(&e.right)) else {
            let missing = if sd.labels.contains_key(&e.left) {
                &e.right
            } else {
                &e.left
            };
            out.push(diag(epath, format!("unknown basis label {missing:?}")));
            return None;
        };
        let value = build_element(&e.value, sd, &format!("{epath}.value"), out)?;
        table.push((a, b, value));
    }
    Some(table)
}

fn resolve_dgla(
    name: &str,
    section: &DglaSection,
    out: &mut Vec<Diagnostic>,
) -> Option<ResolvedDgla> {
    let path = format!("dglas.{name}");
    let sd = build_space(&section.degrees, &path, out)?;
    let d = build_map(
        &section.differential,
        &sd,
        &sd,
        1,
        &format!("{path}.differential"),
        out,
    )?;
    let table = build_products(&section.brackets, &sd, &format!("{path}.brackets"), out)?;
    let complex = match CochainComplex::new(sd.space.clone(), d) {
        Ok(c) => c,
        Err(e) => {
            out.push(diag(format!("{path}.differential"), e.to_string()));
            return None;
        }
    };
    // deferred axiom checking: the validate task reports violations
    // instead of refusing to construct
    match Dgla::from_table_unchecked(complex, table) {
        Ok(dgla) => Some(ResolvedDgla {
            dgla,
            labels: sd.labels,
        }),
        Err(e) => {
            out.push(diag(format!("{path}.brackets"), e.to_string()));
            None
        }
    }
}

fn resolve_model(
    name: &str,
    section: &ModelSection,
    out: &mut Vec<Diagnostic>,
) -> Option<ResolvedModel> {
    let path = format!("models.{name}");
    let sd = build_space(&section.degrees, &path, out)?;
    let del = build_map(&section.del, &sd, &sd, 1, &format!("{path}.del"), out)?;
    let delbar = build_map(&section.delbar, &sd, &sd, 1, &format!("{path}.delbar"), out)?;
    let mult = build_products(&section.products, &sd, &format!("{path}.products"), out)?;
    match FiniteBicomplexModel::new(sd.space.clone(), del, delbar, mult) {
        Ok(model) => Some(ResolvedModel {
            model,
            labels: sd.labels,
        }),
        Err(e) => {
            out.push(diag(path, e.to_string()));
            None
        }
    }
}

pub fn resolve(doc: &WorkbenchDocument) -> std::result::Result<Resolved, Vec<Diagnostic>> {
    let mut out = Vec::new();
    let mut dglas = BTreeMap::new();
    for (name, section) in &doc.dglas {
        if let Some(r) = resolve_dgla(name, section, &mut out) {
            dglas.insert(name.clone(), r);
        }
    }
    let mut models = BTreeMap::new();
    for (name, section) in &doc.models {
        if let Some(r) = resolve_model(name, section, &mut out) {
            models.insert(name.clone(), r);
        }
    }
    let mut morphisms = BTreeMap::new();
    for (name, section) in &doc.morphisms {
        let path = format!("morphisms.{name}");
        let (Some(src), Some(tgt)) = (dglas.get(&section.source), dglas.get(&section.target))
        else {
            let missing = if dglas.contains_key(&section.source) {
                &section.target
            } else {
                &section.source
            };
            out.push(diag(path, format!("unresolved algebra reference {missing:?}")));
            continue;
        };
        let src_sd = SpaceData {
            space: src.dgla.space().clone(),
            labels: src.labels.clone(),
        };
        let tgt_sd = SpaceData {
            space: tgt.dgla.space().clone(),
            labels: tgt.labels.clone(),
        };
        let Some(map) = build_map(
            &section.map,
            &src_sd,
            &tgt_sd,
            0,
            &format!("{path}.map"),
            &mut out,
        ) else {
            continue;
        };
        match DglaMorphism::new(src.dgla.clone(), tgt.dgla.clone(), map) {
            Ok(m) => {
                morphisms.insert(name.clone(), m);
            }
            Err(e) => out.push(diag(path, e.to_string())),
        }
    }
    let mut squares = BTreeMap::new();
    for (name, section) in &doc.squares {
        let path = format!("squares.{name}");
        let mut get = |field: &str, mname: &String| -> Option<DglaMorphism> {
            match morphisms.get(mname) {
                Some(m) => Some(m.clone()),
                None => {
                    out.push(diag(
                        format!("{path}.{field}"),
                        format!("unresolved morphism reference {mname:?}"),
                    ));
                    None
                }
            }
        };
        let (Some(chi), Some(eta), Some(f), Some(f2)) = (
            get("chi", &section.chi),
            get("eta", &section.eta),
            get("f", &section.f),
            get("f2", &section.f2),
        ) else {
            continue;
        };
        match CommutativeSquare::new(chi, eta, f, f2) {
            Ok(sq) => {
                squares.insert(name.clone(), sq);
            }
            Err(e) => out.push(diag(path, e.to_string())),
        }
    }
    // cheap reference checks for tasks, so invalid documents fail at
    // parse time rather than at run time
    for (k, entry) in doc.tasks.iter().enumerate() {
        let path = format!("tasks[{k}]");
        let mut need = |kind: &str, name: &String, ok: bool| {
            if !ok {
                out.push(diag(
                    path.clone(),
                    format!("unresolved {kind} reference {name:?}"),
                ));
            }
        };
        match &entry.task {
            Task::Validate { dgla, morphism } => {
                if let Some(g) = dgla {
                    need("dgla", g, dglas.contains_key(g));
                }
                if let Some(m) = morphism {
                    need("morphism", m, doc.morphisms.contains_key(m));
                }
                if dgla.is_none() && morphism.is_none() {
                    out.push(diag(path.clone(), "validate needs a dgla or a morphism"));
                }
            }
            Task::Cohomology { dgla }
            | Task::GaugeCheck { dgla, .. }
            | Task::Bch { dgla, .. } => need("dgla", dgla, dglas.contains_key(dgla)),
            Task::Cone { morphism }
            | Task::Les { morphism }
            | Task::Tangent { morphism }
            | Task::ExtendedTangent { morphism, .. }
            | Task::DefC0 { morphism, .. }
            | Task::McLift { morphism, .. }
            | Task::Obstruction { morphism, .. }
            | Task::PrimaryObstruction { morphism, .. }
            | Task::PathObject { morphism, .. }
            | Task::Whitehead { morphism, .. } => {
                need("morphism", morphism, morphisms.contains_key(morphism))
            }
            Task::Flatness { complex, .. }
            | Task::GaugeTrivial { complex, .. }
            | Task::Truncation { complex, .. } => {
                need("dgla", complex, dglas.contains_key(complex))
            }
            Task::Zigzag { v, w, .. } => {
                need("dgla", v, dglas.contains_key(v));
                need("dgla", w, dglas.contains_key(w));
            }
            Task::CartanCheck { model, dgla, .. } => {
                need("model", model, models.contains_key(model));
                need("dgla", dgla, dglas.contains_key(dgla));
            }
        }
    }
    if out.is_empty() {
        Ok(Resolved {
            dglas,
            morphisms,
            models,
            squares,
        })
    } else {
        Err(out)
    }
}

impl Resolved {
    pub(crate) fn element(
        &self,
        dgla: &str,
        spec: &BTreeMap<String, String>,
    ) -> crate::Result<GradedElement> {
        let r = &self.dglas[dgla];
        let sd = SpaceData {
            space: r.dgla.space().clone(),
            labels: r.labels.clone(),
        };
        let mut out = Vec::new();
        build_element(spec, &sd, "element", &mut out).ok_or_else(|| {
            crate::Error::Document {
                path: out[0].path.clone(),
                message: out[0].message.clone(),
            }
        })
    }

    pub(crate) fn model_map(
        &self,
        model: &str,
        spec: &BTreeMap<String, BTreeMap<String, String>>,
        degree: i32,
    ) -> crate::Result<LinearMap> {
        let m = &self.models[model];
        let sd = SpaceData {
            space: m.model.space().clone(),
            labels: m.labels.clone(),
        };
        let mut out = Vec::new();
        build_map(spec, &sd, &sd, degree, "map", &mut out).ok_or_else(|| crate::Error::Document {
            path: out[0].path.clone(),
            message: out[0].message.clone(),
        })
    }

    pub(crate) fn degree_map(
        &self,
        src: &str,
        tgt: &str,
        spec: &BTreeMap<String, BTreeMap<String, String>>,
        degree: i32,
    ) -> crate::Result<LinearMap> {
        let s = &self.dglas[src];
        let t = &self.dglas[tgt];
        let sd = SpaceData {
            space: s.dgla.space().clone(),
            labels: s.labels.clone(),
        };
        let td = SpaceData {
            space: t.dgla.space().clone(),
            labels: t.labels.clone(),
        };
        let mut out = Vec::new();
        build_map(spec, &sd, &td, degree, "map", &mut out).ok_or_else(|| crate::Error::Document {
            path: out[0].path.clone(),
            message: out[0].message.clone(),
        })
    }
}

/// Writes a library algebra back out as a document section (canonical
/// bracket orientation only; the mirror is recovered on parse).
pub fn dgla_section(g: &Dgla) -> DglaSection {
    let space = g.space();
    let mut degrees = BTreeMap::new();
    for deg in space.degrees() {
        degrees.insert(deg.to_string(), space.labels(deg).to_vec());
    }
    let mut differential = BTreeMap::new();
    for deg in space.degrees() {
        let block = g.d().block(deg);
        for (idx, label) in space.labels(deg).iter().enumerate() {
            let mut img = BTreeMap::new();
            for r in 0..block.rows() {
                let c = block.get(r, idx);
                if !num_traits::Zero::is_zero(c) {
                    img.insert(space.labels(deg + 1)[r].clone(), format_rat(c));
                }
            }
            if !img.is_empty() {
                differential.insert(label.clone(), img);
            }
        }
    }
    let mut brackets = Vec::new();
    for ((a, b), value) in g.stored_entries() {
        if a > b {
            continue;
        }
        let mut spec = BTreeMap::new();
        for (&deg, coords) in value.coords_map() {
            for (idx, c) in coords.iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    spec.insert(space.labels(deg)[idx].clone(), format_rat(c));
                }
            }
        }
        if spec.is_empty() {
            continue;
        }
        brackets.push(ProductEntry {
            left: space.labels(a.0)[a.1].clone(),
            right: space.labels(b.0)[b.1].clone(),
            value: spec,
        });
    }
    DglaSection {
        degrees,
        differential,
        brackets,
    }
}

/// Writes a morphism back out entrywise, referencing named sections.
pub fn morphism_section(m: &DglaMorphism, source: &str, target: &str) -> MorphismSection {
    let src = m.source.space();
    let tgt = m.target.space();
    let mut map = BTreeMap::new();
    for deg in src.degrees() {
        let block = m.map.block(deg);
        for (idx, label) in src.labels(deg).iter().enumerate() {
            let mut img = BTreeMap::new();
            for r in 0..block.rows() {
                let c = block.get(r, idx);
                if !num_traits::Zero::is_zero(c) {
                    img.insert(tgt.labels(deg)[r].clone(), format_rat(c));
                }
            }
            if !img.is_empty() {
                map.insert(label.clone(), img);
            }
        }
    }
    MorphismSection {
        source: source.to_string(),
        target: target.to_string(),
        map,
    }
}

fn task(json: serde_json::Value) -> TaskEntry {
    serde_json::from_value(json).expect("task literal")
}

/// Ready-made example documents covering every task kind, built from the
/// library's fixture algebras. Names are stable and suitable as file
/// stems.
pub fn corpus_documents() -> Vec<(String, WorkbenchDocument)> {
    use serde_json::json;
    let mut out = Vec::new();

    let mut sl2 = WorkbenchDocument::default();
    sl2.dglas.insert("sl2".into(), dgla_section(&crate::dgla::sl2()));
    sl2.tasks = vec![
        task(json!({"task": "validate", "dgla": "sl2"})),
        task(json!({"task": "cohomology", "dgla": "sl2"})),
    ];
    out.push(("sl2".to_string(), sl2));

    let chi = crate::corpus::uwz_inclusion();
    let mut uwz = WorkbenchDocument::default();
    uwz.seed = Some(17);
    uwz.dglas.insert("sub".into(), dgla_section(&chi.source));
    uwz.dglas.insert("uwz".into(), dgla_section(&chi.target));
    uwz.morphisms
        .insert("chi".into(), morphism_section(&chi, "sub", "uwz"));
    uwz.tasks = vec![
        task(json!({"task": "validate", "dgla": "uwz", "morphism": "chi"})),
        task(json!({"task": "cone", "morphism": "chi"})),
        task(json!({"task": "les", "morphism": "chi"})),
        task(json!({"task": "tangent", "morphism": "chi"})),
        task(json!({"task": "extended-tangent", "morphism": "chi", "n": 2})),
        task(json!({"task": "def-c0", "morphism": "chi", "point": 0})),
        task(json!({"task": "primary-obstruction", "morphism": "chi",
                    "x": {"w1_0": "1"}, "a": {"u": "1"}})),
        task(json!({"task": "obstruction", "morphism": "chi", "order": 3,
                    "x": [{"power": 1, "element": {"w1_0": "1"}}],
                    "a": [{"power": 1, "element": {"u": "1"}}]})),
        task(json!({"task": "mc-lift", "morphism": "chi", "order": 4, "seed": ["1"]})),
        task(json!({"task": "path-object", "morphism": "chi", "bound": 6})),
        task(json!({"task": "whitehead", "morphism": "chi",
                    "i": 0, "a": ["1"], "j": 0, "b": ["1"]})),
        task(json!({"task": "gauge-check", "dgla": "uwz", "order": 4, "samples": 10})),
        task(json!({"task": "bch", "dgla": "uwz", "order": 4,
                    "a": [{"power": 1, "element": {"u": "1"}}],
                    "b": [{"power": 2, "element": {"u": "1"}}]})),
    ];
    out.push(("uwz".to_string(), uwz));

    let g = crate::corpus::three_step();
    let mut three = WorkbenchDocument::default();
    three.dglas.insert("hom3".into(), dgla_section(&g));
    three.dglas.insert("zero".into(), DglaSection::default());
    three.morphisms.insert(
        "to-zero".into(),
        MorphismSection {
            source: "hom3".into(),
            target: "zero".into(),
            map: BTreeMap::new(),
        },
    );
    three.tasks = vec![
        task(json!({"task": "validate", "dgla": "hom3"})),
        task(json!({"name": "obstructed-seed", "task": "mc-lift",
                    "morphism": "to-zero", "order": 4, "seed": ["1", "1"]})),
        task(json!({"name": "free-seed", "task": "mc-lift",
                    "morphism": "to-zero", "order": 5, "seed": ["1", "0"]})),
    ];
    out.push(("three-step".to_string(), three));

    // three-term complex with zero differential, deformed by v0 ↦ v1 ⊗ t
    let mut flat = WorkbenchDocument::default();
    flat.dglas.insert(
        "v".into(),
        DglaSection {
            degrees: [
                ("0".to_string(), vec!["v0".to_string()]),
                ("1".to_string(), vec!["v1".to_string()]),
                ("2".to_string(), vec!["v2".to_string()]),
            ]
            .into(),
            differential: BTreeMap::new(),
            brackets: Vec::new(),
        },
    );
    let x = json!([{"power": 1, "entries": {"v0": {"v1": "1"}}}]);
    flat.tasks = vec![
        task(json!({"task": "flatness", "complex": "v", "order": 3,
                    "x": x, "degree": 0})),
        task(json!({"task": "gauge-trivial", "complex": "v", "order": 3, "x": x})),
        task(json!({"task": "truncation", "complex": "v", "order": 3,
                    "x": x, "degree": 0})),
    ];
    out.push(("deformed-complex".to_string(), flat));

    // the two-term acyclic complex included into itself: a formality
    // zigzag with both legs quasi-isomorphisms
    let mut zz = WorkbenchDocument::default();
    zz.dglas.insert(
        "inner".into(),
        DglaSection {
            degrees: [("0".to_string(), vec!["a0".to_string()])].into(),
            differential: BTreeMap::new(),
            brackets: Vec::new(),
        },
    );
    zz.dglas.insert(
        "outer".into(),
        DglaSection {
            degrees: [
                ("0".to_string(), vec!["b0".to_string(), "c0".to_string()]),
                ("1".to_string(), vec!["c1".to_string()]),
            ]
            .into(),
            differential: [(
                "c0".to_string(),
                [("c1".to_string(), "1".to_string())].into(),
            )]
            .into(),
            brackets: Vec::new(),
        },
    );
    zz.tasks = vec![task(json!({"task": "zigzag", "v": "inner", "w": "outer",
                "inclusion": {"a0": {"b0": "1"}}}))];
    out.push(("zigzag".to_string(), zz));

    // x/y/xy model with a valid (zero) contraction and a perturbed one
    let mut cartan = WorkbenchDocument::default();
    cartan.models.insert(
        "xy".into(),
        ModelSection {
            degrees: [
                ("1".to_string(), vec!["x".to_string()]),
                ("2".to_string(), vec!["y".to_string()]),
                ("3".to_string(), vec!["xy".to_string()]),
            ]
            .into(),
            del: [("x".to_string(), [("y".to_string(), "1".to_string())].into())].into(),
            delbar: BTreeMap::new(),
            products: vec![ProductEntry {
                left: "x".into(),
                right: "y".into(),
                value: [("xy".to_string(), "1".to_string())].into(),
            }],
        },
    );
    cartan.dglas.insert(
        "g".into(),
        DglaSection {
            degrees: [("1".to_string(), vec!["a".to_string()])].into(),
            differential: BTreeMap::new(),
            brackets: Vec::new(),
        },
    );
    cartan.tasks = vec![
        task(json!({"name": "zero-contraction", "task": "cartan-check",
                    "model": "xy", "dgla": "g", "contraction": {"a": {}}})),
        task(json!({"name": "perturbed", "task": "cartan-check",
                    "model": "xy", "dgla": "g",
                    "contraction": {"a": {"x": {"x": "1"}, "xy": {"xy": "1"}}}})),
    ];
    out.push(("cartan".to_string(), cartan));

    out
}
