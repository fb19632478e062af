//! Constructions and certificate checks on structure-constant algebras.
//!
//! Checks that are bilinear in their arguments (endomorphism, morphism,
//! unit) only need basis pairs; each pair is independent and evaluated in
//! parallel, with the first failure in row-major order reported.

use crate::par;
use crate::scalar::Scalar;

use super::linmap::{Echelon, LinMap};
use super::report::{witness_from, CheckReport, Witness};
use super::spec::AlgebraSpec;
use super::vector::Vector;
use super::AlgebraError;

fn expect_dim(expected: usize, found: usize) -> Result<(), AlgebraError> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { expected, found })
    }
}

fn basis_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

/// `f(μ_A(b_i, b_j)) − μ_B(f b_i, f b_j)` over all pairs; first failure.
fn first_product_defect(
    a: &AlgebraSpec,
    b: &AlgebraSpec,
    f: &LinMap,
) -> Result<Option<Witness>, AlgebraError> {
    let n = a.dim();
    let images: Vec<Vector> = (0..n).map(|j| f.column(j)).collect();
    let pairs = basis_pairs(n);
    let found = par::find_first(&pairs, |&(i, j)| {
        let lhs = f
            .apply(&a.product_of_basis(i, j))
            .expect("dimensions checked");
        let rhs = b.mul(&images[i], &images[j]).expect("dimensions checked");
        witness_from(vec![i, j], &lhs - &rhs)
    });
    Ok(found)
}

/// Whether `f(μ(x, y)) = μ(f x, f y)`.
pub fn is_endomorphism(a: &AlgebraSpec, f: &LinMap) -> Result<CheckReport, AlgebraError> {
    expect_dim(a.dim(), f.dim())?;
    let witness = first_product_defect(a, a, f)?;
    let mut assumptions = a.assumptions();
    assumptions.extend(&f.assumptions());
    Ok(CheckReport::from_outcome(witness, assumptions))
}

/// Whether `f: A → B` satisfies `f∘μ_A = μ_B∘(f⊗f)` and, when both algebras
/// carry a twisting map, `f∘α_A = α_B∘f`.
pub fn is_morphism(
    a: &AlgebraSpec,
    b: &AlgebraSpec,
    f: &LinMap,
) -> Result<CheckReport, AlgebraError> {
    expect_dim(a.dim(), b.dim())?;
    expect_dim(a.dim(), f.dim())?;
    let mut assumptions = a.assumptions();
    assumptions.extend(&b.assumptions());
    assumptions.extend(&f.assumptions());
    if let Some(w) = first_product_defect(a, b, f)? {
        return Ok(CheckReport::failure(w, assumptions));
    }
    if let (Some(alpha_a), Some(alpha_b)) = (a.alpha(), b.alpha()) {
        let left = f.compose(alpha_a)?;
        let right = alpha_b.compose(f)?;
        for j in 0..a.dim() {
            if let Some(w) = witness_from(vec![j], &left.column(j) - &right.column(j)) {
                return Ok(CheckReport::failure(w, assumptions));
            }
        }
    }
    Ok(CheckReport::success(assumptions))
}

/// `(V, f∘μ, f)`; refuses maps that are not endomorphisms.
pub fn yau_twist(a: &AlgebraSpec, f: &LinMap) -> Result<AlgebraSpec, AlgebraError> {
    let report = is_endomorphism(a, f)?;
    if !report.holds() {
        return Err(AlgebraError::NotEndomorphism(Box::new(report)));
    }
    yau_twist_unchecked(a, f)
}

/// [`yau_twist`] without the endomorphism check.
pub fn yau_twist_unchecked(a: &AlgebraSpec, f: &LinMap) -> Result<AlgebraSpec, AlgebraError> {
    expect_dim(a.dim(), f.dim())?;
    let entries = compose_table(a, f);
    AlgebraSpec::from_parts(
        format!("{}_twist", a.name()),
        a.basis().to_vec(),
        a.params().to_vec(),
        entries,
        Some(f.clone()),
        None,
    )
}

fn compose_table(a: &AlgebraSpec, f: &LinMap) -> Vec<(usize, usize, usize, Scalar)> {
    let pairs = basis_pairs(a.dim());
    let images = par::map(&pairs, |&(i, j)| {
        f.apply(&a.product_of_basis(i, j))
            .expect("dimensions checked")
    });
    pairs
        .into_iter()
        .zip(images)
        .flat_map(|((i, j), v)| {
            v.into_coords()
                .into_iter()
                .enumerate()
                .map(move |(k, c)| (i, j, k, c))
        })
        .collect()
}

/// `(V, α⁻¹∘μ)`, recovering the algebra a Yau twist came from.
pub fn untwist(a: &AlgebraSpec) -> Result<AlgebraSpec, AlgebraError> {
    let alpha = a.alpha().ok_or(AlgebraError::MissingTwistMap)?;
    let inverse = alpha.invert()?;
    let name = match a.name().strip_suffix("_twist") {
        Some(base) => base.to_string(),
        None => format!("{}_untwist", a.name()),
    };
    AlgebraSpec::from_parts(
        name,
        a.basis().to_vec(),
        a.params().to_vec(),
        compose_table(a, &inverse),
        None,
        None,
    )
}

/// `μ'(x, y) = μ(y, x)`.
pub fn opposite(a: &AlgebraSpec) -> AlgebraSpec {
    let name = match a.name().strip_suffix("_op") {
        Some(base) => base.to_string(),
        None => format!("{}_op", a.name()),
    };
    AlgebraSpec::from_parts(
        name,
        a.basis().to_vec(),
        a.params().to_vec(),
        a.entries()
            .map(|(i, j, k, c)| (j, i, k, c.clone()))
            .collect(),
        a.alpha().cloned(),
        a.unit(),
    )
    .expect("opposite of a valid algebra is valid")
}

/// `μ'(x, y) = ½(μ(x, y) + μ(y, x))`.
pub fn polarize(a: &AlgebraSpec) -> AlgebraSpec {
    let n = a.dim();
    let half = Scalar::ratio(1, 2);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = &a.structure_constant(i, j, k) + &a.structure_constant(j, i, k);
                if !s.is_zero() {
                    entries.push((i, j, k, &half * &s));
                }
            }
        }
    }
    AlgebraSpec::from_parts(
        format!("{}_polarized", a.name()),
        a.basis().to_vec(),
        a.params().to_vec(),
        entries,
        a.alpha().cloned(),
        a.unit(),
    )
    .expect("polarization of a valid algebra is valid")
}

/// Whether the span of `gens` is closed under `μ` and `α`.
///
/// The witness tuple indexes the echelon basis of the span; `vector` is
/// the offending product or image.
pub fn is_subalgebra(a: &AlgebraSpec, gens: &[Vector]) -> Result<CheckReport, AlgebraError> {
    for g in gens {
        expect_dim(a.dim(), g.dim())?;
    }
    let span = Echelon::new(gens);
    let basis = span.basis().to_vec();
    let mut assumptions = a.assumptions();
    assumptions.extend(&span.assumptions);
    let outside = |tuple: Vec<usize>, v: Vector| -> Option<Witness> {
        let rem = span.reduce(&v);
        let k = rem.first_nonzero()?;
        Some(Witness {
            tuple,
            coordinate: k,
            residual: rem.get(k).clone(),
            vector: v,
            counterexample: None,
        })
    };
    let pairs = basis_pairs(basis.len());
    let found = par::find_first(&pairs, |&(p, q)| {
        let prod = a.mul(&basis[p], &basis[q]).expect("dimensions checked");
        outside(vec![p, q], prod)
    });
    if let Some(w) = found {
        return Ok(CheckReport::failure(w, assumptions));
    }
    if let Some(alpha) = a.alpha() {
        for (p, w) in basis.iter().enumerate() {
            if let Some(w) = outside(vec![p], alpha.apply(w)?) {
                return Ok(CheckReport::failure(w, assumptions));
            }
        }
    }
    Ok(CheckReport::success(assumptions))
}

/// Whether `u` is a two-sided identity for `μ`. The witness tuple is the
/// offending basis index and the residual vector is `μ(u, b_j) − b_j` (or
/// the right-sided version when only that fails).
pub fn check_unit(a: &AlgebraSpec, u: &Vector) -> Result<CheckReport, AlgebraError> {
    expect_dim(a.dim(), u.dim())?;
    let idx: Vec<usize> = (0..a.dim()).collect();
    let found = par::find_first(&idx, |&j| {
        let b = a.basis_vector(j);
        let left = &a.mul(u, &b).expect("dimensions checked") - &b;
        let right = &a.mul(&b, u).expect("dimensions checked") - &b;
        witness_from(vec![j], left).or_else(|| witness_from(vec![j], right))
    });
    let mut assumptions = a.assumptions();
    for c in u.coords() {
        assumptions.note_denominator(c);
    }
    Ok(CheckReport::from_outcome(found, assumptions))
}

pub fn apply_map(f: &LinMap, v: &Vector) -> Result<Vector, AlgebraError> {
    f.apply(v)
}

pub fn compose(f: &LinMap, g: &LinMap) -> Result<LinMap, AlgebraError> {
    f.compose(g)
}

pub fn identity(n: usize) -> LinMap {
    LinMap::identity(n)
}

pub fn invert(f: &LinMap) -> Result<LinMap, AlgebraError> {
    f.invert()
}
