//! JSON workspace files: named quantales, modules, frames and
//! F-semilattices whose tables reference element labels.
//!
//! Every object is validated while loading, in dependency order, and a
//! loaded workspace serializes back to an equivalent document.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use tensalg::{FSemilattice, FinLattice, Limits, Quantale, VFrame, VModule};

/// Why a workspace failed to load.
#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{kind} {name:?} is defined twice")]
    DuplicateName { kind: &'static str, name: String },
    #[error("{owner:?} refers to unknown {kind} {name:?}")]
    UnknownReference { owner: String, kind: &'static str, name: String },
    #[error("{owner:?}: unknown element label {label:?}")]
    UnknownLabel { owner: String, label: String },
    #[error("{owner:?}: {message}")]
    Shape { owner: String, message: String },
    #[error("{owner:?} is invalid: {source}")]
    Validation { owner: String, source: tensalg::Error },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default)]
    pub quantales: Vec<QuantaleDoc>,
    #[serde(default)]
    pub modules: Vec<ModuleDoc>,
    #[serde(default)]
    pub frames: Vec<FrameDoc>,
    #[serde(default)]
    pub fsemilattices: Vec<FslDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantaleDoc {
    pub name: String,
    pub elements: Vec<String>,
    pub leq: Vec<Vec<u8>>,
    pub tensor: Vec<Vec<String>>,
    pub unit: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub name: String,
    pub quantale: String,
    pub elements: Vec<String>,
    pub leq: Vec<Vec<u8>>,
    /// One row per quantale element, one label per module element.
    pub action: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameDoc {
    pub name: String,
    pub quantale: String,
    pub points: Vec<String>,
    pub r: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FslDoc {
    pub name: String,
    pub module: String,
    #[serde(rename = "F")]
    pub f: Vec<String>,
}

/// A validated registry of named objects.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub quantales: Vec<(String, Arc<Quantale>)>,
    /// Each module with the name of its quantale.
    pub modules: Vec<(String, String, VModule)>,
    pub frames: Vec<(String, String, Arc<VFrame>)>,
    pub fsemilattices: Vec<(String, String, FSemilattice)>,
}

fn lookup<'a, T>(items: &'a [(String, T)], name: &str) -> Option<&'a T> {
    items.iter().find(|(n, _)| n == name).map(|(_, t)| t)
}

fn index_of(owner: &str, labels: &[String], label: &str) -> Result<usize, LoadError> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| LoadError::UnknownLabel { owner: owner.to_string(), label: label.to_string() })
}

fn order(owner: &str, labels: &[String], leq: &[Vec<u8>]) -> Result<FinLattice, LoadError> {
    let n = labels.len();
    if leq.len() != n || leq.iter().any(|r| r.len() != n) {
        return Err(LoadError::Shape { owner: owner.into(), message: format!("leq must be {n}x{n}") });
    }
    if leq.iter().flatten().any(|&b| b > 1) {
        return Err(LoadError::Shape { owner: owner.into(), message: "leq entries must be 0 or 1".into() });
    }
    let table = leq.iter().map(|r| r.iter().map(|&b| b == 1).collect()).collect();
    FinLattice::validate(labels.to_vec(), table).map_err(|source| LoadError::Validation { owner: owner.into(), source })
}

fn rows(owner: &str, labels: &[String], t: &[Vec<String>]) -> Result<Vec<Vec<usize>>, LoadError> {
    t.iter().map(|r| r.iter().map(|l| index_of(owner, labels, l)).collect()).collect()
}

fn unique<'a>(kind: &'static str, names: impl Iterator<Item = &'a String>) -> Result<(), LoadError> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(LoadError::DuplicateName { kind, name: n.clone() });
        }
    }
    Ok(())
}

impl Workspace {
    pub fn load(path: &Path, limits: &Limits) -> Result<Self, LoadError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text, limits)
    }

    pub fn parse(text: &str, limits: &Limits) -> Result<Self, LoadError> {
        let doc: Document = serde_json::from_str(text).map_err(|e| LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::build(&doc, limits)
    }

    pub fn build(doc: &Document, limits: &Limits) -> Result<Self, LoadError> {
        unique("quantale", doc.quantales.iter().map(|q| &q.name))?;
        unique("module", doc.modules.iter().map(|m| &m.name))?;
        unique("frame", doc.frames.iter().map(|f| &f.name))?;
        unique("F-semilattice", doc.fsemilattices.iter().map(|s| &s.name))?;
        let invalid = |owner: &str| {
            let owner = owner.to_string();
            move |source| LoadError::Validation { owner: owner.clone(), source }
        };
        let mut ws = Workspace::default();
        for q in &doc.quantales {
            limits.check_carrier(q.elements.len()).map_err(invalid(&q.name))?;
            let lat = order(&q.name, &q.elements, &q.leq)?;
            let t = rows(&q.name, &q.elements, &q.tensor)?;
            let unit = index_of(&q.name, &q.elements, &q.unit)?;
            let quantale = Quantale::validate(lat, t, unit).map_err(invalid(&q.name))?;
            ws.quantales.push((q.name.clone(), Arc::new(quantale)));
        }
        let quantale_of = |owner: &str, name: &str| {
            lookup(&ws.quantales, name).cloned().ok_or_else(|| LoadError::UnknownReference {
                owner: owner.into(),
                kind: "quantale",
                name: name.into(),
            })
        };
        let mut modules = Vec::new();
        for m in &doc.modules {
            let q = quantale_of(&m.name, &m.quantale)?;
            limits.check_carrier(m.elements.len()).map_err(invalid(&m.name))?;
            let lat = order(&m.name, &m.elements, &m.leq)?;
            let action = rows(&m.name, &m.elements, &m.action)?;
            let module = VModule::validate(q, lat, action).map_err(invalid(&m.name))?;
            modules.push((m.name.clone(), m.quantale.clone(), module));
        }
        let mut frames = Vec::new();
        for f in &doc.frames {
            let q = quantale_of(&f.name, &f.quantale)?;
            let labels: Vec<String> = (0..q.len()).map(|v| q.label(v).to_string()).collect();
            let r = rows(&f.name, &labels, &f.r)?;
            let frame = VFrame::validate(q, f.points.clone(), r).map_err(invalid(&f.name))?;
            frames.push((f.name.clone(), f.quantale.clone(), Arc::new(frame)));
        }
        let mut fsls = Vec::new();
        for s in &doc.fsemilattices {
            let (_, _, m) = modules.iter().find(|(n, _, _)| *n == s.module).ok_or_else(|| {
                LoadError::UnknownReference { owner: s.name.clone(), kind: "module", name: s.module.clone() }
            })?;
            let labels: Vec<String> = m.carrier().labels().to_vec();
            let f = s.f.iter().map(|l| index_of(&s.name, &labels, l)).collect::<Result<Vec<_>, _>>()?;
            let fsl = FSemilattice::validate(m.clone(), f).map_err(invalid(&s.name))?;
            fsls.push((s.name.clone(), s.module.clone(), fsl));
        }
        ws.modules = modules;
        ws.frames = frames;
        ws.fsemilattices = fsls;
        Ok(ws)
    }

    pub fn module(&self, name: &str) -> Option<&VModule> {
        self.modules.iter().find(|(n, _, _)| n == name).map(|(_, _, m)| m)
    }

    pub fn frame(&self, name: &str) -> Option<&Arc<VFrame>> {
        self.frames.iter().find(|(n, _, _)| n == name).map(|(_, _, f)| f)
    }

    pub fn fsemilattice(&self, name: &str) -> Option<&FSemilattice> {
        self.fsemilattices.iter().find(|(n, _, _)| n == name).map(|(_, _, s)| s)
    }

    /// The module of that name, or the module underlying the F-semilattice
    /// of that name.
    pub fn module_or_carrier(&self, name: &str) -> Option<&VModule> {
        self.module(name).or_else(|| self.fsemilattice(name).map(|s| s.module()))
    }

    /// The document this workspace was loaded from, up to formatting.
    pub fn to_document(&self) -> Document {
        let lab = |l: &FinLattice, i: usize| l.label(i).to_string();
        let leq = |l: &FinLattice| -> Vec<Vec<u8>> {
            (0..l.len()).map(|a| (0..l.len()).map(|b| l.leq(a, b) as u8).collect()).collect()
        };
        let quantales = self
            .quantales
            .iter()
            .map(|(name, q)| {
                let l = q.lattice();
                QuantaleDoc {
                    name: name.clone(),
                    elements: l.labels().to_vec(),
                    leq: leq(l),
                    tensor: q.tensor_table().iter().map(|r| r.iter().map(|&x| lab(l, x)).collect()).collect(),
                    unit: lab(l, q.unit()),
                }
            })
            .collect();
        let modules = self
            .modules
            .iter()
            .map(|(name, qn, m)| {
                let l = m.carrier();
                ModuleDoc {
                    name: name.clone(),
                    quantale: qn.clone(),
                    elements: l.labels().to_vec(),
                    leq: leq(l),
                    action: m.action_table().iter().map(|r| r.iter().map(|&x| lab(l, x)).collect()).collect(),
                }
            })
            .collect();
        let frames = self
            .frames
            .iter()
            .map(|(name, qn, f)| {
                let q = f.quantale();
                FrameDoc {
                    name: name.clone(),
                    quantale: qn.clone(),
                    points: f.points().to_vec(),
                    r: f.r_table().iter().map(|r| r.iter().map(|&v| q.label(v).to_string()).collect()).collect(),
                }
            })
            .collect();
        let fsemilattices = self
            .fsemilattices
            .iter()
            .map(|(name, mn, s)| FslDoc {
                name: name.clone(),
                module: mn.clone(),
                f: s.f_table().iter().map(|&x| lab(s.module().carrier(), x)).collect(),
            })
            .collect();
        Document { quantales, modules, frames, fsemilattices }
    }

    /// Object counts by kind.
    pub fn summary(&self) -> HashMap<&'static str, usize> {
        HashMap::from([
            ("quantales", self.quantales.len()),
            ("modules", self.modules.len()),
            ("frames", self.frames.len()),
            ("fsemilattices", self.fsemilattices.len()),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = include_str!("../data/paper_example.json");

    #[test]
    fn example_loads_and_round_trips() {
        let lim = Limits::default();
        let ws = Workspace::parse(EXAMPLE, &lim).unwrap();
        assert_eq!(ws.module("A").unwrap().len(), 5);
        let doc = ws.to_document();
        let again = Workspace::build(&doc, &lim).unwrap();
        assert_eq!(again.to_document(), doc);
        let original: Document = serde_json::from_str(EXAMPLE).unwrap();
        assert_eq!(doc, original);
    }

    #[test]
    fn empty_workspace_loads() {
        let ws = Workspace::parse("{}", &Limits::default()).unwrap();
        assert!(ws.quantales.is_empty());
    }

    #[test]
    fn unknown_quantale_is_reported() {
        let text = r#"{"modules": [{"name": "M", "quantale": "Q", "elements": ["0"], "leq": [[1]], "action": []}]}"#;
        let err = Workspace::parse(text, &Limits::default()).unwrap_err();
        assert!(matches!(err, LoadError::UnknownReference { kind: "quantale", .. }), "{err}");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = Workspace::parse("{\n  \"quantales\": [,]\n}", &Limits::default()).unwrap_err();
        match err {
            LoadError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn carrier_cap_applies() {
        let lim = Limits { max_carrier: 4, ..Limits::default() };
        let err = Workspace::parse(EXAMPLE, &lim).unwrap_err();
        assert!(err.to_string().contains("A"), "{err}");
    }
}
