use std::collections::BTreeMap;

use crate::par;
use crate::scalar::{Scalar, Var};

use super::linmap::LinMap;
use super::report::Assumptions;
use super::vector::Vector;
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Param {
    pub name: String,
    pub nonzero: bool,
}

impl Param {
    pub fn new(name: impl Into<String>, nonzero: bool) -> Param {
        Param {
            name: name.into(),
            nonzero,
        }
    }
}

/// Above this many polynomial terms in the operands, `mul` fans out over
/// output coordinates.
const PARALLEL_MUL_WEIGHT: usize = 96;

/// A finite-dimensional algebra given by structure constants, with an
/// optional twisting map.
///
/// `μ(b_i, b_j) = Σ_k c[i][j][k] b_k`; only nonzero constants are stored.
#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    name: String,
    basis: Vec<String>,
    params: Vec<Param>,
    mu: BTreeMap<(usize, usize, usize), Scalar>,
    // entries grouped by output coordinate: (i, j, c)
    by_output: Vec<Vec<(usize, usize, Scalar)>>,
    alpha: Option<LinMap>,
    unit: Option<usize>,
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.basis == other.basis
            && self.params == other.params
            && self.mu == other.mu
            && self.alpha == other.alpha
            && self.unit == other.unit
    }
}

impl AlgebraSpec {
    /// Validates and builds. Zero constants are dropped; a repeated
    /// `(i, j, k)` is an error.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        params: Vec<Param>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<AlgebraSpec, AlgebraError> {
        let n = basis.len();
        if n == 0 {
            return Err(AlgebraError::EmptyBasis);
        }
        for (i, label) in basis.iter().enumerate() {
            if basis[..i].contains(label) {
                return Err(AlgebraError::DuplicateLabel(label.clone()));
            }
        }
        // register in declaration order
        let declared: Vec<Var> = params.iter().map(|p| Var::named(&p.name)).collect();
        let mut mu = BTreeMap::new();
        for (i, j, k, c) in entries {
            let max = i.max(j).max(k);
            if max >= n {
                return Err(AlgebraError::IndexOutOfRange { index: max, dim: n });
            }
            check_declared(&c, &declared)?;
            if mu.contains_key(&(i, j, k)) {
                return Err(AlgebraError::DuplicateEntry { i, j, k });
            }
            if !c.is_zero() {
                mu.insert((i, j, k), c);
            }
        }
        let mut by_output = vec![Vec::new(); n];
        for (&(i, j, k), c) in &mu {
            by_output[k].push((i, j, c.clone()));
        }
        Ok(AlgebraSpec {
            name: name.into(),
            basis,
            params,
            mu,
            by_output,
            alpha: None,
            unit: None,
        })
    }

    /// Builds from a product function on basis pairs.
    pub fn from_products(
        name: impl Into<String>,
        basis: Vec<String>,
        params: Vec<Param>,
        product: impl Fn(usize, usize) -> Vector,
    ) -> Result<AlgebraSpec, AlgebraError> {
        let n = basis.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                if v.dim() != n {
                    return Err(AlgebraError::DimensionMismatch {
                        expected: n,
                        found: v.dim(),
                    });
                }
                for (k, c) in v.into_coords().into_iter().enumerate() {
                    entries.push((i, j, k, c));
                }
            }
        }
        AlgebraSpec::new(name, basis, params, entries)
    }

    pub fn with_alpha(mut self, alpha: Option<LinMap>) -> Result<AlgebraSpec, AlgebraError> {
        if let Some(a) = &alpha {
            if a.dim() != self.dim() {
                return Err(AlgebraError::DimensionMismatch {
                    expected: self.dim(),
                    found: a.dim(),
                });
            }
            let declared: Vec<Var> = self.params.iter().map(|p| Var::named(&p.name)).collect();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    check_declared(a.get(i, j), &declared)?;
                }
            }
        }
        self.alpha = alpha;
        Ok(self)
    }

    pub fn with_unit(mut self, unit: Option<usize>) -> Result<AlgebraSpec, AlgebraError> {
        if let Some(u) = unit {
            if u >= self.dim() {
                return Err(AlgebraError::IndexOutOfRange {
                    index: u,
                    dim: self.dim(),
                });
            }
        }
        self.unit = unit;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> AlgebraSpec {
        self.name = name.into();
        self
    }

    /// Same algebra with `α = id` when no twisting map is present.
    pub fn with_identity_alpha(&self) -> AlgebraSpec {
        let mut a = self.clone();
        if a.alpha.is_none() {
            a.alpha = Some(LinMap::identity(self.dim()));
        }
        a
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn params(&self) -> &[Param] {
        &self.params
    }

    pub fn alpha(&self) -> Option<&LinMap> {
        self.alpha.as_ref()
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// Nonzero structure constants in `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.mu.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.mu.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> Vector {
        Vector::from_coords(
            (0..self.dim())
                .map(|k| self.structure_constant(i, j, k))
                .collect(),
        )
    }

    /// Same structure constants and twisting map.
    pub fn same_structure(&self, other: &AlgebraSpec) -> bool {
        self.basis.len() == other.basis.len() && self.mu == other.mu && self.alpha == other.alpha
    }

    pub fn same_table(&self, other: &AlgebraSpec) -> bool {
        self.basis.len() == other.basis.len() && self.mu == other.mu
    }

    /// Nonzero-denominator constraints implied by the constants and `α`.
    pub fn assumptions(&self) -> Assumptions {
        let mut a = Assumptions::new();
        for c in self.mu.values() {
            a.note_denominator(c);
        }
        if let Some(alpha) = &self.alpha {
            a.extend(&alpha.assumptions());
        }
        a
    }

    /// The bilinear product `μ(u, v)`.
    pub fn mul(&self, u: &Vector, v: &Vector) -> Result<Vector, AlgebraError> {
        let n = self.dim();
        for d in [u.dim(), v.dim()] {
            if d != n {
                return Err(AlgebraError::DimensionMismatch {
                    expected: n,
                    found: d,
                });
            }
        }
        let coord = |k: usize| -> Scalar {
            self.by_output[k]
                .iter()
                .filter(|(i, j, _)| !u.get(*i).is_zero() && !v.get(*j).is_zero())
                .map(|(i, j, c)| &(c * u.get(*i)) * v.get(*j))
                .sum()
        };
        let coords = if u.weight() + v.weight() > PARALLEL_MUL_WEIGHT {
            par::map_range(n, coord)
        } else {
            (0..n).map(coord).collect()
        };
        Ok(Vector::from_coords(coords))
    }

    pub fn apply_alpha(&self, v: &Vector) -> Result<Vector, AlgebraError> {
        self.alpha
            .as_ref()
            .ok_or(AlgebraError::MissingTwistMap)?
            .apply(v)
    }

    pub(crate) fn from_parts(
        name: String,
        basis: Vec<String>,
        params: Vec<Param>,
        entries: Vec<(usize, usize, usize, Scalar)>,
        alpha: Option<LinMap>,
        unit: Option<usize>,
    ) -> Result<AlgebraSpec, AlgebraError> {
        AlgebraSpec::new(name, basis, params, entries)?
            .with_alpha(alpha)?
            .with_unit(unit)
    }
}

fn check_declared(c: &Scalar, declared: &[Var]) -> Result<(), AlgebraError> {
    match c.vars().into_iter().find(|v| !declared.contains(v)) {
        Some(v) => Err(AlgebraError::UndeclaredParameter(v.name().to_string())),
        None => Ok(()),
    }
}
