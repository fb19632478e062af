//! Built-in algebras, their twisting maps, and stored twisted tables.

mod data;

use thiserror::Error;

use crate::algebra::{yau_twist_unchecked, AlgebraSpec, LinMap, Param, Vector};
use crate::parser::{parse_scalar_expr, parse_vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Expected {
    Holds,
    Fails,
}

/// A stored value that differs from the published one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Erratum {
    /// Basis labels of the product.
    pub at: (&'static str, &'static str),
    pub published: &'static str,
    pub stored: &'static str,
    pub reason: &'static str,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub algebra: AlgebraSpec,
    pub maps: Vec<(&'static str, LinMap)>,
    pub provenance: &'static str,
    /// `(builtin identity, outcome)` as stated for this algebra. Identities
    /// using `α` are read with `α = id` when the algebra has none.
    pub expected: Vec<(&'static str, Expected)>,
    /// `(base key, map name)` when the table is a stored Yau twist.
    pub twist_of: Option<(&'static str, &'static str)>,
    pub errata: Vec<Erratum>,
}

impl CatalogEntry {
    pub fn map(&self, name: &str) -> Option<&LinMap> {
        self.maps.iter().find(|(n, _)| *n == name).map(|(_, m)| m)
    }

    /// The table with every erratum reverted to its published value.
    pub fn published_algebra(&self) -> AlgebraSpec {
        let a = &self.algebra;
        if self.errata.is_empty() {
            return a.clone();
        }
        let names: Vec<&str> = a.params().iter().map(|p| p.name.as_str()).collect();
        AlgebraSpec::from_products(a.name(), a.basis().to_vec(), a.params().to_vec(), |i, j| {
            let hit = self
                .errata
                .iter()
                .find(|e| a.index_of(e.at.0) == Some(i) && a.index_of(e.at.1) == Some(j));
            match hit {
                Some(e) => parse_vector(e.published, &names, a.basis()).expect("catalog data"),
                None => a.product_of_basis(i, j),
            }
        })
        .and_then(|b| b.with_alpha(a.alpha().cloned()))
        .and_then(|b| b.with_unit(a.unit()))
        .expect("catalog data")
    }
}

/// One coordinate where a stored twisted table and the recomputed twist
/// differ.
#[derive(Clone, PartialEq, Debug)]
pub struct Discrepancy {
    pub at: (String, String),
    pub coordinate: String,
    pub stored: Scalar,
    pub recomputed: Scalar,
}

pub const KEYS: [&str; 9] = [
    "hom_assoc_3d",
    "alt4_mu1",
    "alt4_mu2",
    "alt4_mu1_twist_alpha1",
    "alt4_mu2_twist_alpha1",
    "alt4_mu1_twist_alpha2",
    "alt4_mu2_twist_alpha2",
    "octonions",
    "octonions_twist_diag",
];

const HOM_JORDAN_KEY: &str = "hom_jordan_3d";

pub fn list() -> Vec<&'static str> {
    let mut keys = KEYS.to_vec();
    keys.push(HOM_JORDAN_KEY);
    keys
}

fn labels(basis: &[&str]) -> Vec<String> {
    basis.iter().map(|s| s.to_string()).collect()
}

fn params(spec: &[(&str, bool)]) -> Vec<Param> {
    spec.iter().map(|&(n, nz)| Param::new(n, nz)).collect()
}

fn param_names(ps: &[Param]) -> Vec<&str> {
    ps.iter().map(|p| p.name.as_str()).collect()
}

fn from_cells(
    name: &str,
    basis: Vec<String>,
    ps: Vec<Param>,
    cells: &[(&str, &str, &str)],
) -> AlgebraSpec {
    let names = param_names(&ps);
    let mut entries = Vec::new();
    for &(l, r, value) in cells {
        let i = basis.iter().position(|b| b == l).expect("label");
        let j = basis.iter().position(|b| b == r).expect("label");
        let v = parse_vector(value, &names, &basis).expect("catalog data");
        for (k, c) in v.into_coords().into_iter().enumerate() {
            entries.push((i, j, k, c));
        }
    }
    AlgebraSpec::new(name, basis, ps, entries).expect("catalog data")
}

fn from_grid(name: &str, basis: Vec<String>, ps: Vec<Param>, grid: &[[&str; 8]; 8]) -> AlgebraSpec {
    let cells: Vec<(&str, &str, &str)> = grid
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, cell)| (data::OCTONION_BASIS[i], data::OCTONION_BASIS[j], *cell))
        })
        .collect();
    from_cells(name, basis, ps, &cells)
}

fn diagonal(ps: &[Param], entries: &[&str]) -> LinMap {
    let names = param_names(ps);
    LinMap::diagonal(
        entries
            .iter()
            .map(|e| parse_scalar_expr(e, &names).expect("catalog data"))
            .collect(),
    )
}

fn columns(ps: &[Param], basis: &[String], images: &[&str]) -> LinMap {
    let names = param_names(ps);
    let cols: Vec<Vector> = images
        .iter()
        .map(|img| parse_vector(img, &names, basis).expect("catalog data"))
        .collect();
    LinMap::from_columns(cols).expect("catalog data")
}

fn alt4_params() -> Vec<Param> {
    params(&[
        ("a1", false),
        ("a2", true),
        ("a3", false),
        ("a4", false),
        ("a5", true),
        ("a6", false),
    ])
}

fn alpha1_params() -> Vec<Param> {
    params(&[
        ("a1", false),
        ("a2", true),
        ("a3", false),
        ("a4", false),
        ("a5", false),
    ])
}

fn alt4_maps(ps: &[Param], basis: &[String]) -> Vec<(&'static str, LinMap)> {
    vec![
        ("alpha1", columns(ps, basis, &data::ALPHA1)),
        ("alpha2", columns(ps, basis, &data::ALPHA2)),
    ]
}

const X1_TYPO: Erratum = Erratum {
    at: ("e3", "e1"),
    published: "b*e3",
    stored: "b*e3",
    reason: "printed as mu(e3, x1); read as mu(e3, e1) by symmetry with mu(e1, e3)",
};

const ALTERNATIVE: [(&str, Expected); 4] = [
    ("left_hom_alternative", Expected::Holds),
    ("right_hom_alternative", Expected::Holds),
    ("left_hom_alternative_linearized", Expected::Holds),
    ("right_hom_alternative_linearized", Expected::Holds),
];

fn alt4_twist(
    key: &'static str,
    base: &'static str,
    map: &'static str,
    cells: &[(&str, &str, &str)],
) -> CatalogEntry {
    let basis = labels(&["e0", "e1", "e2", "e3"]);
    let ps = if map == "alpha1" {
        alpha1_params()
    } else {
        alt4_params()
    };
    let images = if map == "alpha1" {
        data::ALPHA1
    } else {
        data::ALPHA2
    };
    let alpha = columns(&ps, &basis, &images);
    let algebra = from_cells(key, basis, ps, cells)
        .with_alpha(Some(alpha.clone()))
        .expect("catalog data");
    let errata = if key == "alt4_mu1_twist_alpha2" {
        vec![Erratum {
            at: ("e3", "e0"),
            published: "e3",
            stored: "a5*e1 + a6*e2 + (a6*a3 - a5)/a2*e3",
            reason: "alpha2(mu1(e3, e0)) = alpha2(e3)",
        }]
    } else {
        Vec::new()
    };
    CatalogEntry {
        key,
        algebra,
        maps: vec![(map, alpha)],
        provenance: "Yau twist of a 4-dimensional alternative algebra",
        expected: ALTERNATIVE.to_vec(),
        twist_of: Some((base, map)),
        errata,
    }
}

pub fn get(key: &str) -> Result<CatalogEntry, CatalogError> {
    let entry = match key {
        "hom_assoc_3d" => {
            let ps = params(&[("a", false), ("b", false)]);
            let alpha = diagonal(&ps, &data::DIAG_3D);
            let algebra = from_cells(key, labels(&["e1", "e2", "e3"]), ps, data::HOM_ASSOC_3D)
                .with_alpha(Some(alpha.clone()))
                .expect("catalog data");
            CatalogEntry {
                key: "hom_assoc_3d",
                algebra,
                maps: vec![("alpha", alpha)],
                provenance: "3-dimensional Hom-associative algebra with parameters a, b",
                expected: vec![("hom_associative", Expected::Holds)],
                twist_of: None,
                errata: vec![X1_TYPO],
            }
        }
        "alt4_mu1" | "alt4_mu2" => {
            let basis = labels(&["e0", "e1", "e2", "e3"]);
            let ps = alt4_params();
            let maps = alt4_maps(&ps, &basis);
            let (k, cells) = if key == "alt4_mu1" {
                ("alt4_mu1", data::ALT4_MU1)
            } else {
                ("alt4_mu2", data::ALT4_MU2)
            };
            let mut expected = ALTERNATIVE.to_vec();
            expected.push(("hom_associative", Expected::Fails));
            CatalogEntry {
                key: k,
                algebra: from_cells(k, basis, ps, cells),
                maps,
                provenance: "4-dimensional alternative, non-associative algebra",
                expected,
                twist_of: None,
                errata: Vec::new(),
            }
        }
        "alt4_mu1_twist_alpha1" => alt4_twist(
            "alt4_mu1_twist_alpha1",
            "alt4_mu1",
            "alpha1",
            data::MU1_ALPHA1,
        ),
        "alt4_mu2_twist_alpha1" => alt4_twist(
            "alt4_mu2_twist_alpha1",
            "alt4_mu2",
            "alpha1",
            data::MU2_ALPHA1,
        ),
        "alt4_mu1_twist_alpha2" => alt4_twist(
            "alt4_mu1_twist_alpha2",
            "alt4_mu1",
            "alpha2",
            data::MU1_ALPHA2,
        ),
        "alt4_mu2_twist_alpha2" => alt4_twist(
            "alt4_mu2_twist_alpha2",
            "alt4_mu2",
            "alpha2",
            data::MU2_ALPHA2,
        ),
        "octonions" => {
            let ps = params(&[("a", false), ("b", false), ("c", false)]);
            let diag = diagonal(&ps, &data::OCT_DIAG);
            let algebra = from_grid(key, labels(&data::OCTONION_BASIS), ps, &data::OCTONIONS)
                .with_unit(Some(0))
                .expect("catalog data");
            let mut expected = ALTERNATIVE.to_vec();
            expected.push(("hom_associative", Expected::Fails));
            CatalogEntry {
                key: "octonions",
                algebra,
                maps: vec![("oct_diag", diag)],
                provenance: "Cayley octonions with unit u",
                expected,
                twist_of: None,
                errata: Vec::new(),
            }
        }
        "octonions_twist_diag" => {
            let ps = params(&[("a", false), ("b", false), ("c", false)]);
            let diag = diagonal(&ps, &data::OCT_DIAG);
            let algebra = from_grid(
                key,
                labels(&data::OCTONION_BASIS),
                ps,
                &data::OCTONIONS_TWIST_DIAG,
            )
            .with_alpha(Some(diag.clone()))
            .expect("catalog data");
            CatalogEntry {
                key: "octonions_twist_diag",
                algebra,
                maps: vec![("oct_diag", diag)],
                provenance: "Yau twist of the octonions by a diagonal map",
                expected: ALTERNATIVE.to_vec(),
                twist_of: Some(("octonions", "oct_diag")),
                errata: Vec::new(),
            }
        }
        HOM_JORDAN_KEY => {
            let ps = params(&[("a", false), ("b", false)]);
            let alpha = diagonal(&ps, &data::DIAG_3D);
            let algebra = from_cells(key, labels(&["e1", "e2", "e3"]), ps, data::HOM_JORDAN_3D)
                .with_alpha(Some(alpha.clone()))
                .expect("catalog data");
            CatalogEntry {
                key: HOM_JORDAN_KEY,
                algebra,
                maps: vec![("alpha", alpha)],
                provenance: "polarization of hom_assoc_3d",
                expected: vec![
                    ("commutative", Expected::Holds),
                    ("hom_jordan", Expected::Holds),
                ],
                twist_of: None,
                errata: vec![
                    X1_TYPO,
                    Erratum {
                        at: ("e3", "e2"),
                        published: "0",
                        stored: "1/2*b*e3",
                        reason: "the product is commutative and mu(e2, e3) = 1/2*b*e3",
                    },
                ],
            }
        }
        other => return Err(CatalogError::UnknownKey(other.to_string())),
    };
    Ok(entry)
}

/// Compares a stored twisted table with `yau_twist(base, map)`.
///
/// Returns `None` for entries that are not stored twists.
pub fn table_discrepancies(entry: &CatalogEntry) -> Option<Vec<Discrepancy>> {
    let (base_key, map_name) = entry.twist_of?;
    let base = get(base_key).expect("catalog key");
    let map = base.map(map_name).expect("catalog map");
    Some(compare_with_twist(&entry.algebra, &base.algebra, map))
}

/// Coordinates where `stored` differs from `f∘μ_base`.
pub fn compare_with_twist(
    stored: &AlgebraSpec,
    base: &AlgebraSpec,
    f: &LinMap,
) -> Vec<Discrepancy> {
    let twisted = yau_twist_unchecked(base, f).expect("dimensions agree");
    let n = stored.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = stored.structure_constant(i, j, k);
                let r = twisted.structure_constant(i, j, k);
                if s != r {
                    out.push(Discrepancy {
                        at: (stored.basis()[i].clone(), stored.basis()[j].clone()),
                        coordinate: stored.basis()[k].clone(),
                        stored: s,
                        recomputed: r,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(entry: &CatalogEntry, l: &str, r: &str) -> Vector {
        let a = &entry.algebra;
        a.product_of_basis(a.index_of(l).unwrap(), a.index_of(r).unwrap())
    }

    #[test]
    fn keys_resolve() {
        for k in list() {
            assert_eq!(get(k).unwrap().key, k);
        }
        assert_eq!(
            get("nonsense").unwrap_err(),
            CatalogError::UnknownKey("nonsense".into())
        );
    }

    #[test]
    fn sample_products() {
        let mu1 = get("alt4_mu1").unwrap();
        assert_eq!(product(&mu1, "e3", "e2"), -&Vector::basis(4, 1));
        let oct = get("octonions_twist_diag").unwrap();
        let v = product(&oct, "e6", "e7");
        assert_eq!(v.get(2), &Scalar::param("b"));
        assert_eq!(v.support(), vec![2]);
        let plain = get("octonions").unwrap();
        assert_eq!(product(&plain, "e3", "e6"), -&Vector::basis(8, 4));
        assert_eq!(product(&plain, "e5", "e6"), Vector::basis(8, 1));
    }

    #[test]
    fn jordan_table_is_commutative() {
        let j = get("hom_jordan_3d").unwrap();
        assert_eq!(product(&j, "e3", "e2"), product(&j, "e2", "e3"));
        let published = j.published_algebra();
        let a = &published;
        assert!(a.product_of_basis(2, 1).is_zero());
    }

    #[test]
    fn alpha1_has_a_zero_column() {
        let e = get("alt4_mu1").unwrap();
        assert!(e.map("alpha1").unwrap().column(1).is_zero());
        assert!(e.map("missing").is_none());
    }

    #[test]
    fn stored_twists_match_except_published_typo() {
        for k in KEYS {
            let e = get(k).unwrap();
            if let Some(d) = table_discrepancies(&e) {
                assert!(d.is_empty(), "{k}: {d:?}");
            }
        }
        let e = get("alt4_mu1_twist_alpha2").unwrap();
        let published = CatalogEntry {
            algebra: e.published_algebra(),
            ..e.clone()
        };
        let d = table_discrepancies(&published).unwrap();
        assert!(!d.is_empty());
        assert!(d
            .iter()
            .all(|x| x.at == ("e3".to_string(), "e0".to_string())));
    }
}
