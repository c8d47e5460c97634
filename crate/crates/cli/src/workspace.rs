//! The JSON workspace format.
//!
//! Algebras carry `p`, `dim`, `one` and `table`, the table being the flat `dim³` array of
//! structure constants with index `(i*dim + j)*dim + k` for `e_i e_j = Σ_k c_ijk e_k`.
//! Modules name their algebra (`"opposite": true` for right modules) and carry one flat
//! row-major `dim²` matrix per algebra basis element. Bimodules name both algebras and
//! carry `left_action` and `right_action`, the latter holding the matrices of `x ↦ x·e_r`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sdcheck_core::modrep::{Bimodule, LeftModule};
use sdcheck_core::{Algebra, Matrix, PrimeField};
use thiserror::Error;

pub const WORKSPACE_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum WorkspaceError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported workspace version {0}")]
    Version(u32),
    #[error("{kind} {name}: {message}")]
    Invalid { kind: &'static str, name: String, message: String },
    #[error("{kind} {name} refers to unknown algebra {target}")]
    Dangling { kind: &'static str, name: String, target: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub p: u32,
    pub dim: usize,
    pub one: Vec<u32>,
    pub table: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub algebra: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub opposite: bool,
    pub dim: usize,
    pub action: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleDoc {
    pub left: String,
    pub right: String,
    pub dim: usize,
    pub left_action: Vec<Vec<u32>>,
    pub right_action: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkspaceDoc {
    pub version: u32,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraDoc>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleDoc>,
    #[serde(default)]
    pub bimodules: BTreeMap<String, BimoduleDoc>,
}

/// Validated objects of a workspace.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub algebras: BTreeMap<String, Arc<Algebra>>,
    pub modules: BTreeMap<String, LeftModule>,
    pub bimodules: BTreeMap<String, Bimodule>,
}

fn invalid(kind: &'static str, name: &str, message: impl ToString) -> WorkspaceError {
    WorkspaceError::Invalid {
        kind,
        name: name.to_string(),
        message: message.to_string(),
    }
}

fn matrices(field: PrimeField, dim: usize, flat: &[Vec<u32>], kind: &'static str, name: &str) -> Result<Vec<Matrix>, WorkspaceError> {
    flat.iter()
        .map(|m| Matrix::from_flat(field, dim, dim, m.clone()).map_err(|e| invalid(kind, name, e)))
        .collect()
}

pub fn algebra_doc(a: &Algebra) -> AlgebraDoc {
    AlgebraDoc {
        p: a.field().p(),
        dim: a.dim(),
        one: a.one().to_vec(),
        table: a.table().to_vec(),
    }
}

fn flat_actions(ms: &[Matrix]) -> Vec<Vec<u32>> {
    ms.iter().map(|m| m.flatten()).collect()
}

impl WorkspaceDoc {
    pub fn new() -> Self {
        WorkspaceDoc {
            version: WORKSPACE_VERSION,
            ..Default::default()
        }
    }

    pub fn add_algebra(&mut self, a: &Algebra) -> String {
        let name = a.name().to_string();
        self.algebras.insert(name.clone(), algebra_doc(a));
        name
    }

    /// Adds `m` and its algebra (under the algebra's name, or that of the opposite).
    pub fn add_module(&mut self, name: &str, m: &LeftModule, base: &Algebra, opposite: bool) {
        let algebra = self.add_algebra(base);
        self.modules.insert(
            name.to_string(),
            ModuleDoc {
                algebra,
                opposite,
                dim: m.dim(),
                action: flat_actions(m.actions()),
            },
        );
    }

    pub fn add_bimodule(&mut self, name: &str, c: &Bimodule) {
        let left = self.add_algebra(c.left_algebra());
        let right = self.add_algebra(c.right_algebra());
        self.bimodules.insert(
            name.to_string(),
            BimoduleDoc {
                left,
                right,
                dim: c.dim(),
                left_action: flat_actions(c.left().actions()),
                right_action: flat_actions(c.right().actions()),
            },
        );
    }

    pub fn merge(&mut self, other: WorkspaceDoc) {
        self.algebras.extend(other.algebras);
        self.modules.extend(other.modules);
        self.bimodules.extend(other.bimodules);
    }

    /// Builds and validates every object, failing on the first problem.
    pub fn validate(&self) -> Result<Workspace, WorkspaceError> {
        if self.version != WORKSPACE_VERSION {
            return Err(WorkspaceError::Version(self.version));
        }
        let mut ws = Workspace::default();
        for (name, d) in &self.algebras {
            let field = PrimeField::new(d.p).map_err(|e| invalid("algebra", name, e))?;
            let a = Algebra::new(field, d.dim, d.table.clone(), d.one.clone(), name.clone())
                .map_err(|e| invalid("algebra", name, e))?;
            a.validate().map_err(|v| invalid("algebra", name, v))?;
            ws.algebras.insert(name.clone(), Arc::new(a));
        }
        let lookup = |kind, name: &str, target: &str| {
            ws.algebras.get(target).cloned().ok_or_else(|| WorkspaceError::Dangling {
                kind,
                name: name.to_string(),
                target: target.to_string(),
            })
        };
        let mut modules = BTreeMap::new();
        for (name, d) in &self.modules {
            let mut a = lookup("module", name, &d.algebra)?;
            if d.opposite {
                a = Arc::new(a.opposite());
            }
            let action = matrices(a.field(), d.dim, &d.action, "module", name)?;
            let m = LeftModule::new(a, d.dim, action).map_err(|e| invalid("module", name, e))?;
            m.validate().map_err(|v| invalid("module", name, v))?;
            modules.insert(name.clone(), m);
        }
        let mut bimodules = BTreeMap::new();
        for (name, d) in &self.bimodules {
            let s = lookup("bimodule", name, &d.left)?;
            let r = lookup("bimodule", name, &d.right)?;
            let left = matrices(s.field(), d.dim, &d.left_action, "bimodule", name)?;
            let right = matrices(r.field(), d.dim, &d.right_action, "bimodule", name)?;
            let c = Bimodule::new(s, r, d.dim, left, right).map_err(|e| invalid("bimodule", name, e))?;
            c.validate().map_err(|v| invalid("bimodule", name, v))?;
            bimodules.insert(name.clone(), c);
        }
        ws.modules = modules;
        ws.bimodules = bimodules;
        Ok(ws)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("workspace documents serialize")
    }
}

pub fn parse_workspace(text: &str) -> Result<WorkspaceDoc, WorkspaceError> {
    Ok(serde_json::from_str(text)?)
}

pub fn load_workspace(path: &Path) -> Result<(WorkspaceDoc, Workspace), WorkspaceError> {
    let text = std::fs::read_to_string(path).map_err(|source| WorkspaceError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let doc = parse_workspace(&text)?;
    let ws = doc.validate()?;
    Ok((doc, ws))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sdcheck_core::algebra::{matrix_ring, square_zero_local_ring};

    #[test]
    fn minimal_document_loads() {
        let f2 = PrimeField::new(2).unwrap();
        let a = Arc::new(matrix_ring(f2, 1).unwrap());
        let mut doc = WorkspaceDoc::new();
        doc.add_bimodule("regular(F2)", &Bimodule::regular(a));
        let ws = parse_workspace(&doc.to_json()).unwrap().validate().unwrap();
        assert_eq!(ws.bimodules["regular(F2)"].dim(), 1);
    }

    #[test]
    fn broken_associativity_names_algebra_and_triple() {
        let mut doc = WorkspaceDoc::new();
        let f2 = PrimeField::new(2).unwrap();
        let mut d = algebra_doc(&square_zero_local_ring(f2, 2).unwrap());
        // x*y = 1 while y*x = 0: (x y) x = x but x (y x) = 0
        d.table[(3 + 2) * 3] = 1;
        doc.algebras.insert("bad".into(), d);
        let err = doc.validate().unwrap_err().to_string();
        assert!(err.starts_with("algebra bad:"), "{err}");
        assert!(err.contains("!="), "{err}");
    }

    #[test]
    fn dangling_reference_is_reported() {
        let mut doc = WorkspaceDoc::new();
        doc.modules.insert(
            "m".into(),
            ModuleDoc {
                algebra: "missing".into(),
                opposite: false,
                dim: 1,
                action: vec![vec![1]],
            },
        );
        assert!(matches!(doc.validate(), Err(WorkspaceError::Dangling { .. })));
    }
}
