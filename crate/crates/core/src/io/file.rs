use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, LinMap, Param};
use crate::parser::parse_scalar_expr;
use crate::scalar::Scalar;

use super::IoError;

/// Name of the map used as the twisting map.
pub const ALPHA: &str = "alpha";

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamEntry {
    pub name: String,
    #[serde(default)]
    pub nonzero: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: String,
    pub j: String,
    /// Basis label to coefficient expression.
    pub value: BTreeMap<String, String>,
}

/// On-disk form of an algebra. Products not listed are zero. Maps are
/// row-major matrices whose column `j` is the image of `b_j`.
#[derive(Clone, PartialEq, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default)]
    pub params: Vec<ParamEntry>,
    #[serde(default)]
    pub mu: Vec<ProductEntry>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

/// An algebra with its named maps; `algebra.alpha()` is the map named
/// `alpha`, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct Loaded {
    pub algebra: AlgebraSpec,
    pub maps: BTreeMap<String, LinMap>,
    pub notes: Vec<String>,
}

impl Loaded {
    pub fn new(algebra: AlgebraSpec) -> Loaded {
        let mut maps = BTreeMap::new();
        if let Some(a) = algebra.alpha() {
            maps.insert(ALPHA.to_string(), a.clone());
        }
        Loaded {
            algebra,
            maps,
            notes: Vec::new(),
        }
    }

    pub fn map(&self, name: &str) -> Result<&LinMap, IoError> {
        self.maps
            .get(name)
            .ok_or_else(|| IoError::Validation(format!("no map named `{name}`")))
    }
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, IoError> {
        toml::from_str(text).map_err(|e| {
            let (line, column) = e.span().map(|s| line_col(text, s.start)).unwrap_or((1, 1));
            IoError::Syntax {
                line,
                column,
                message: e.message().to_string(),
            }
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("algebra files serialize")
    }

    /// Resolves labels and parses every expression.
    pub fn build(&self) -> Result<Loaded, IoError> {
        if self.basis.len() != self.dim {
            return Err(IoError::Validation(format!(
                "dim is {} but {} basis labels are given",
                self.dim,
                self.basis.len()
            )));
        }
        let names: Vec<&str> = self.params.iter().map(|p| p.name.as_str()).collect();
        for (k, p) in names.iter().enumerate() {
            if names[..k].contains(p) {
                return Err(IoError::Validation(format!(
                    "parameter `{p}` declared twice"
                )));
            }
            if self.basis.iter().any(|b| b == p) {
                return Err(IoError::Validation(format!(
                    "`{p}` is both a parameter and a basis label"
                )));
            }
        }
        let index = |label: &str, what: &str| -> Result<usize, IoError> {
            self.basis.iter().position(|b| b == label).ok_or_else(|| {
                IoError::Validation(format!("{what}: unknown basis label `{label}`"))
            })
        };
        let expr = |text: &str, what: String| -> Result<Scalar, IoError> {
            parse_scalar_expr(text, &names).map_err(|error| IoError::Expression {
                context: what,
                error,
            })
        };
        let mut entries = Vec::new();
        for (n, e) in self.mu.iter().enumerate() {
            let what = format!("mu[{n}] ({}, {})", e.i, e.j);
            let i = index(&e.i, &what)?;
            let j = index(&e.j, &what)?;
            for (label, text) in &e.value {
                let k = index(label, &what)?;
                let c = expr(text, format!("{what} coefficient of {label}"))?;
                entries.push((i, j, k, c));
            }
        }
        let params: Vec<Param> = self
            .params
            .iter()
            .map(|p| Param::new(p.name.clone(), p.nonzero))
            .collect();
        let mut maps = BTreeMap::new();
        for (name, rows) in &self.maps {
            if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                return Err(IoError::Validation(format!(
                    "map `{name}` must be a {0}x{0} matrix",
                    self.dim
                )));
            }
            let mut parsed = Vec::with_capacity(self.dim);
            for (r, row) in rows.iter().enumerate() {
                let mut out = Vec::with_capacity(self.dim);
                for (c, cell) in row.iter().enumerate() {
                    out.push(expr(cell, format!("map `{name}` entry [{r}][{c}]"))?);
                }
                parsed.push(out);
            }
            maps.insert(name.clone(), LinMap::from_rows(parsed)?);
        }
        let unit = match &self.unit {
            Some(u) => Some(index(u, "unit")?),
            None => None,
        };
        let algebra = AlgebraSpec::new(self.name.clone(), self.basis.clone(), params, entries)?
            .with_alpha(maps.get(ALPHA).cloned())?
            .with_unit(unit)?;
        Ok(Loaded {
            algebra,
            maps,
            notes: self.notes.clone(),
        })
    }

    /// Canonical file for an algebra and its maps. The algebra's twisting
    /// map, when present, is written as `alpha`.
    pub fn from_algebra(
        a: &AlgebraSpec,
        maps: &BTreeMap<String, LinMap>,
        notes: &[String],
    ) -> AlgebraFile {
        let basis = a.basis().to_vec();
        let mut mu: Vec<ProductEntry> = Vec::new();
        for (i, j, k, c) in a.entries() {
            let (li, lj) = (&basis[i], &basis[j]);
            match mu.last_mut() {
                Some(last) if &last.i == li && &last.j == lj => {
                    last.value.insert(basis[k].clone(), c.to_string());
                }
                _ => mu.push(ProductEntry {
                    i: li.clone(),
                    j: lj.clone(),
                    value: BTreeMap::from([(basis[k].clone(), c.to_string())]),
                }),
            }
        }
        let mut all_maps = maps.clone();
        match a.alpha() {
            Some(alpha) => {
                all_maps.insert(ALPHA.to_string(), alpha.clone());
            }
            None => {
                all_maps.remove(ALPHA);
            }
        }
        let maps = all_maps
            .into_iter()
            .map(|(name, m)| {
                let rows = m
                    .rows()
                    .map(|r| r.iter().map(Scalar::to_string).collect())
                    .collect();
                (name, rows)
            })
            .collect();
        AlgebraFile {
            name: a.name().to_string(),
            dim: a.dim(),
            basis,
            unit: a.unit().map(|u| a.basis()[u].clone()),
            notes: notes.to_vec(),
            params: a
                .params()
                .iter()
                .map(|p| ParamEntry {
                    name: p.name.clone(),
                    nonzero: p.nonzero,
                })
                .collect(),
            mu,
            maps,
        }
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before
        .rfind('\n')
        .map_or(before.len(), |i| before.len() - i - 1)
        + 1;
    (line, column)
}

pub fn load_str(text: &str) -> Result<Loaded, IoError> {
    AlgebraFile::parse(text)?.build()
}

pub fn load(path: &Path) -> Result<Loaded, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        reason: source.to_string(),
    })?;
    load_str(&text).map_err(|e| e.in_file(path))
}

pub fn to_string(loaded: &Loaded) -> String {
    AlgebraFile::from_algebra(&loaded.algebra, &loaded.maps, &loaded.notes).to_toml()
}

pub fn save(loaded: &Loaded, path: &Path) -> Result<(), IoError> {
    std::fs::write(path, to_string(loaded)).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        reason: source.to_string(),
    })
}
