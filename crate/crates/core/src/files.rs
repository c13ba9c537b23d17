//! The JSON text formats consumed and emitted by the toolkit.
//!
//! Lattice: `{"elements":["0","a","1"], "covers":[["0","a"],["a","1"]]}`,
//! or with a `"leq"` key instead of `"covers"`; a pair `[x,y]` always means
//! `x ≤ y`, and both keys are closed reflexively and transitively on input.
//!
//! Poset: `{"points":["w0","w1"], "leq":[["w0","w1"]]}`. Emitted posets list
//! the full strict order. Spectra are emitted in the same shape with points
//! `h0, h1, ...` plus sidecar tables `"homs"` (bit vectors over the algebra's
//! canonical element order) and `"filters"` (element names).
//!
//! System: `{"lattice": <lattice>, "points":["x"], "sat":{"x":["1"]}}`, the
//! satisfaction matrix given per point as the list of satisfied elements.
//! Every point must appear as a key.
//!
//! Morphism: `{"f1":{"x":"y0"}, "f2":{"b":"a"}}`, with `f1` keyed by source
//! points and `f2` keyed by target-algebra elements.
//!
//! Model: `{"worlds":["w0"], "leq":[], "val":{"w0":["p"]}}`, the valuation
//! listing the true atoms per world; the atom universe is their union.
//!
//! Hom: `{"source": <lattice>, "target": <lattice>, "map":{"0":"0"}}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::duality::SpectrumPoset;
use crate::kripke::KripkeModel;
use crate::lattice::{DistributiveLattice, HeytingAlgebra, HomCandidate, LatticeSpec};
use crate::poset::Poset;
use crate::topsys::{ITopSystem, SystemMorphism};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FileError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Shape(String),
}

fn shape(detail: impl Into<String>) -> FileError {
    FileError::Shape(detail.into())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeFile {
    pub elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(String, String)>>,
}

impl LatticeFile {
    pub fn to_spec(&self) -> Result<LatticeSpec, FileError> {
        let (order, covers) = match (&self.covers, &self.leq) {
            (Some(c), None) => (c.clone(), true),
            (None, Some(l)) => (l.clone(), false),
            (Some(_), Some(_)) => {
                return Err(shape(
                    "a lattice takes either \"covers\" or \"leq\", not both",
                ))
            }
            (None, None) => return Err(shape("a lattice needs a \"covers\" or \"leq\" key")),
        };
        LatticeSpec::new(self.elements.clone(), order, covers).map_err(|e| shape(e.to_string()))
    }

    pub fn of(lattice: &DistributiveLattice) -> LatticeFile {
        LatticeFile {
            elements: lattice.names().to_vec(),
            covers: Some(
                lattice
                    .covers()
                    .into_iter()
                    .map(|(i, j)| (lattice.name(i).to_string(), lattice.name(j).to_string()))
                    .collect(),
            ),
            leq: None,
        }
    }
}

pub fn parse_lattice_file(text: &str) -> Result<LatticeFile, FileError> {
    serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetFile {
    pub points: Vec<String>,
    pub leq: Vec<(String, String)>,
}

impl PosetFile {
    pub fn to_poset(&self) -> Result<Poset, FileError> {
        let refs: Vec<&str> = self.points.iter().map(|s| s.as_str()).collect();
        let pairs: Vec<(&str, &str)> = self
            .leq
            .iter()
            .map(|(x, y)| (x.as_str(), y.as_str()))
            .collect();
        Poset::from_named_pairs(&refs, &pairs).map_err(|e| shape(e.to_string()))
    }

    pub fn of(poset: &Poset) -> PosetFile {
        PosetFile {
            points: poset.names().to_vec(),
            leq: strict_pairs(poset),
        }
    }
}

fn strict_pairs(poset: &Poset) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for i in 0..poset.len() {
        for j in 0..poset.len() {
            if poset.lt(i, j) {
                out.push((poset.name(i).to_string(), poset.name(j).to_string()));
            }
        }
    }
    out
}

pub fn parse_poset_file(text: &str) -> Result<PosetFile, FileError> {
    serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))
}

/// A spectrum in the poset format plus the hom and filter sidecar tables.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumFile {
    pub points: Vec<String>,
    pub leq: Vec<(String, String)>,
    pub homs: BTreeMap<String, Vec<u8>>,
    pub filters: BTreeMap<String, Vec<String>>,
}

impl SpectrumFile {
    pub fn of(spectrum: &SpectrumPoset, algebra: &HeytingAlgebra) -> SpectrumFile {
        let poset = spectrum.to_poset();
        let mut homs = BTreeMap::new();
        let mut filters = BTreeMap::new();
        for (i, hom) in spectrum.homs().iter().enumerate() {
            let name = format!("h{i}");
            homs.insert(
                name.clone(),
                hom.bits().iter().map(|&b| u8::from(b)).collect(),
            );
            filters.insert(name, hom.filter_names(algebra));
        }
        SpectrumFile {
            points: poset.names().to_vec(),
            leq: strict_pairs(&poset),
            homs,
            filters,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemFile {
    pub lattice: LatticeFile,
    pub points: Vec<String>,
    pub sat: BTreeMap<String, Vec<String>>,
}

impl SystemFile {
    /// Resolves the satisfaction table against a built algebra. Every point
    /// must have a row; every listed element must exist.
    pub fn resolve_sat(&self, algebra: &HeytingAlgebra) -> Result<Vec<Vec<bool>>, FileError> {
        for key in self.sat.keys() {
            if !self.points.contains(key) {
                return Err(shape(format!("sat row for unknown point `{key}`")));
            }
        }
        self.points
            .iter()
            .map(|point| {
                let row_names = self
                    .sat
                    .get(point)
                    .ok_or_else(|| shape(format!("missing sat row for point `{point}`")))?;
                let mut row = vec![false; algebra.n()];
                for name in row_names {
                    let a = algebra
                        .element_index(name)
                        .map_err(|e| shape(e.to_string()))?;
                    row[a] = true;
                }
                Ok(row)
            })
            .collect()
    }

    pub fn of(system: &ITopSystem) -> SystemFile {
        let algebra = system.algebra();
        let mut sat = BTreeMap::new();
        for x in 0..system.len() {
            let names: Vec<String> = (0..algebra.n())
                .filter(|&a| system.satisfies(x, a))
                .map(|a| algebra.name(a).to_string())
                .collect();
            sat.insert(system.point(x).to_string(), names);
        }
        SystemFile {
            lattice: LatticeFile::of(algebra.lattice()),
            points: system.points().to_vec(),
            sat,
        }
    }
}

pub fn parse_system_file(text: &str) -> Result<SystemFile, FileError> {
    serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismFile {
    pub f1: BTreeMap<String, String>,
    pub f2: BTreeMap<String, String>,
}

impl MorphismFile {
    /// Resolves the two name maps against the systems they connect: `f1`
    /// sends source points to target points, `f2` sends target-algebra
    /// elements to source-algebra elements.
    pub fn resolve(
        &self,
        source: &ITopSystem,
        target: &ITopSystem,
    ) -> Result<SystemMorphism, FileError> {
        let f1 = source
            .points()
            .iter()
            .map(|x| {
                let image = self
                    .f1
                    .get(x)
                    .ok_or_else(|| shape(format!("f1 is missing point `{x}`")))?;
                target
                    .point_index(image)
                    .ok_or_else(|| shape(format!("f1 maps `{x}` to unknown point `{image}`")))
            })
            .collect::<Result<Vec<usize>, FileError>>()?;
        let map = target
            .algebra()
            .names()
            .iter()
            .map(|b| {
                let image = self
                    .f2
                    .get(b)
                    .ok_or_else(|| shape(format!("f2 is missing element `{b}`")))?;
                source
                    .algebra()
                    .element_index(image)
                    .map_err(|_| shape(format!("f2 maps `{b}` to unknown element `{image}`")))
            })
            .collect::<Result<Vec<usize>, FileError>>()?;
        let f2 = HomCandidate::new(map, target.algebra(), source.algebra())
            .map_err(|e| shape(e.to_string()))?;
        Ok(SystemMorphism { f1, f2 })
    }
}

pub fn parse_morphism_file(text: &str) -> Result<MorphismFile, FileError> {
    serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelFile {
    pub worlds: Vec<String>,
    pub leq: Vec<(String, String)>,
    pub val: BTreeMap<String, Vec<String>>,
}

impl ModelFile {
    /// Builds the model; the atom universe is the union of the listed atoms.
    pub fn to_model(&self) -> Result<KripkeModel, FileError> {
        let refs: Vec<&str> = self.worlds.iter().map(|s| s.as_str()).collect();
        let pairs: Vec<(&str, &str)> = self
            .leq
            .iter()
            .map(|(x, y)| (x.as_str(), y.as_str()))
            .collect();
        let frame = Poset::from_named_pairs(&refs, &pairs).map_err(|e| shape(e.to_string()))?;
        for key in self.val.keys() {
            if !self.worlds.contains(key) {
                return Err(shape(format!("valuation row for unknown world `{key}`")));
            }
        }
        let mut atoms: Vec<String> = self.val.values().flatten().cloned().collect();
        atoms.sort();
        atoms.dedup();
        let val: Vec<Vec<bool>> = self
            .worlds
            .iter()
            .map(|w| {
                let row = self.val.get(w).cloned().unwrap_or_default();
                atoms.iter().map(|a| row.contains(a)).collect()
            })
            .collect();
        KripkeModel::new(frame, atoms, val).map_err(|e| shape(e.to_string()))
    }

    pub fn of(model: &KripkeModel) -> ModelFile {
        let frame = model.frame();
        let mut val = BTreeMap::new();
        for w in 0..frame.len() {
            let names: Vec<String> = model
                .atoms()
                .iter()
                .enumerate()
                .filter(|&(p, _)| model.holds(w, p))
                .map(|(_, a)| a.clone())
                .collect();
            val.insert(frame.name(w).to_string(), names);
        }
        ModelFile {
            worlds: frame.names().to_vec(),
            leq: strict_pairs(frame),
            val,
        }
    }
}

pub fn parse_model_file(text: &str) -> Result<ModelFile, FileError> {
    serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))
}

/// An algebra homomorphism between two lattice files, for dualization.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomFile {
    pub source: LatticeFile,
    pub target: LatticeFile,
    pub map: BTreeMap<String, String>,
}

impl HomFile {
    pub fn resolve_map(
        &self,
        source: &HeytingAlgebra,
        target: &HeytingAlgebra,
    ) -> Result<HomCandidate, FileError> {
        let map = source
            .names()
            .iter()
            .map(|a| {
                let image = self
                    .map
                    .get(a)
                    .ok_or_else(|| shape(format!("map is missing element `{a}`")))?;
                target
                    .element_index(image)
                    .map_err(|_| shape(format!("map sends `{a}` to unknown element `{image}`")))
            })
            .collect::<Result<Vec<usize>, FileError>>()?;
        HomCandidate::new(map, source, target).map_err(|e| shape(e.to_string()))
    }
}

pub fn parse_hom_file(text: &str) -> Result<HomFile, FileError> {
    serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))
}

/// Canonical serialization: pretty-printed with a trailing newline. Struct
/// fields keep declaration order and maps are sorted, so the output is
/// byte-identical across runs.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}
