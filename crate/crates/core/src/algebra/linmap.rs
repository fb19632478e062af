use std::fmt;

use crate::scalar::Scalar;

use super::report::Assumptions;
use super::vector::Vector;
use super::AlgebraError;

/// Square matrix of scalars; column `j` holds the image of basis vector `j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinMap {
    n: usize,
    entries: Vec<Scalar>,
}

impl LinMap {
    pub fn zero(n: usize) -> LinMap {
        LinMap {
            n,
            entries: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> LinMap {
        let mut m = LinMap::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn diagonal(diag: Vec<Scalar>) -> LinMap {
        let n = diag.len();
        let mut m = LinMap::zero(n);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    /// Builds from the images of the basis vectors.
    pub fn from_columns(columns: Vec<Vector>) -> Result<LinMap, AlgebraError> {
        let n = columns.len();
        let mut m = LinMap::zero(n);
        for (j, col) in columns.into_iter().enumerate() {
            if col.dim() != n {
                return Err(AlgebraError::DimensionMismatch {
                    expected: n,
                    found: col.dim(),
                });
            }
            for (i, c) in col.into_coords().into_iter().enumerate() {
                m.entries[i * n + j] = c;
            }
        }
        Ok(m)
    }

    /// Builds from rows: `rows[i][j]` is the coefficient of `b_i` in `f(b_j)`.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<LinMap, AlgebraError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(AlgebraError::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(LinMap { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::from_coords((0..self.n).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn is_identity(&self) -> bool {
        *self == LinMap::identity(self.n)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, AlgebraError> {
        self.expect_dim(v.dim())?;
        let support = v.support();
        let coords = (0..self.n)
            .map(|i| {
                support
                    .iter()
                    .filter(|&&j| !self.get(i, j).is_zero())
                    .map(|&j| self.get(i, j) * v.get(j))
                    .sum()
            })
            .collect();
        Ok(Vector::from_coords(coords))
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap, AlgebraError> {
        self.expect_dim(g.n)?;
        let n = self.n;
        let mut out = LinMap::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = (0..n)
                    .filter(|&k| !self.get(i, k).is_zero() && !g.get(k, j).is_zero())
                    .map(|k| self.get(i, k) * g.get(k, j))
                    .sum();
            }
        }
        Ok(out)
    }

    pub fn power(&self, k: u32) -> LinMap {
        let mut acc = LinMap::identity(self.n);
        for _ in 0..k {
            acc = self.compose(&acc).expect("same dimension");
        }
        acc
    }

    pub fn determinant(&self) -> Scalar {
        let rows: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        bareiss_determinant(rows)
    }

    pub fn invert(&self) -> Result<LinMap, AlgebraError> {
        self.invert_with_assumptions().map(|p| p.0)
    }

    /// Gauss-Jordan inverse; the returned assumptions are the nonconstant
    /// pivots divided by.
    pub fn invert_with_assumptions(&self) -> Result<(LinMap, Assumptions), AlgebraError> {
        let n = self.n;
        let mut a: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        let mut inv: Vec<Vec<Scalar>> =
            LinMap::identity(n).rows().map(<[Scalar]>::to_vec).collect();
        let mut assumptions = Assumptions::new();
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(AlgebraError::SingularMap)?;
            a.swap(col, pivot_row);
            inv.swap(col, pivot_row);
            let p = a[col][col].clone();
            assumptions.note_pivot(&p);
            let pinv = p.inv().expect("nonzero pivot");
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x = &*x * &pinv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    if !a[col][c].is_zero() {
                        a[r][c] = &a[r][c] - &(&factor * &a[col][c]);
                    }
                    if !inv[col][c].is_zero() {
                        inv[r][c] = &inv[r][c] - &(&factor * &inv[col][c]);
                    }
                }
            }
        }
        Ok((LinMap::from_rows(inv)?, assumptions))
    }

    pub fn assumptions(&self) -> Assumptions {
        let mut a = Assumptions::new();
        for e in &self.entries {
            a.note_denominator(e);
        }
        a
    }

    pub fn display_with(&self, labels: &[String]) -> String {
        (0..self.n)
            .map(|j| format!("{} -> {}", labels[j], self.column(j).display_with(labels)))
            .collect::<Vec<_>>()
            .join(", ")
    }

    fn expect_dim(&self, found: usize) -> Result<(), AlgebraError> {
        if found == self.n {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch {
                expected: self.n,
                found,
            })
        }
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            f.write_str(&cells.join(", "))?;
        }
        Ok(())
    }
}

/// Fraction-free determinant with first-nonzero pivoting.
fn bareiss_determinant(mut a: Vec<Vec<Scalar>>) -> Scalar {
    let n = a.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut sign = false;
    let mut prev = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = &t / &prev;
            }
            a[i][k] = Scalar::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Row echelon form of a list of vectors, fraction-free.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    pub assumptions: Assumptions,
}

impl Echelon {
    pub fn new(vectors: &[Vector]) -> Echelon {
        let mut rows: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
        let width = rows.first().map(Vec::len).unwrap_or(0);
        let mut pivots = Vec::new();
        let mut assumptions = Assumptions::new();
        let mut prev = Scalar::one();
        let mut r = 0;
        for col in 0..width {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r][col].clone();
            assumptions.note_pivot(&pivot);
            let (top, bottom) = rows.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in bottom {
                let below = row[col].clone();
                for (cell, above) in row.iter_mut().zip(pivot_row) {
                    let t = &(&pivot * &*cell) - &(&below * above);
                    *cell = &t / &prev;
                }
            }
            prev = pivot;
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        Echelon {
            rows: rows.into_iter().map(Vector::from_coords).collect(),
            pivots,
            assumptions,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    /// Eliminates `v` against the echelon rows; zero iff `v` is in the span.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut w = v.coords().to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let lead = row.get(p).clone();
            let coef = w[p].clone();
            for (j, x) in w.iter_mut().enumerate() {
                *x = &(&lead * &*x) - &(&coef * row.get(j));
            }
        }
        Vector::from_coords(w)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn diagonal_inverse() {
        let a = Scalar::param("a");
        let b = Scalar::param("b");
        let m = LinMap::diagonal(vec![a.clone(), a.clone(), b.clone()]);
        let (inv, asm) = m.invert_with_assumptions().unwrap();
        let one = Scalar::one();
        assert_eq!(inv, LinMap::diagonal(vec![&one / &a, &one / &a, &one / &b]));
        assert!(m.compose(&inv).unwrap().is_identity());
        assert_eq!(asm.to_strings(), vec!["a != 0", "b != 0"]);
        assert_eq!(m.determinant(), &(&a * &a) * &b);
    }

    #[test]
    fn singular() {
        let m = LinMap::from_rows(vec![vec![s(1), s(2)], vec![s(2), s(4)]]).unwrap();
        assert_eq!(m.invert(), Err(AlgebraError::SingularMap));
        assert!(m.determinant().is_zero());
    }

    #[test]
    fn symbolic_determinant_and_inverse() {
        let a = Scalar::param("a");
        let b = Scalar::param("b");
        // [[a, 1, 0], [b, a, 1], [0, b, 2]]
        let m = LinMap::from_rows(vec![
            vec![a.clone(), s(1), s(0)],
            vec![b.clone(), a.clone(), s(1)],
            vec![s(0), b.clone(), s(2)],
        ])
        .unwrap();
        // cofactor expansion along the first row
        let det = &(&a * &(&(&a * &s(2)) - &b)) - &(&b * &s(2));
        assert_eq!(m.determinant(), det);
        let inv = m.invert().unwrap();
        assert!(inv.compose(&m).unwrap().is_identity());
        assert!(m.compose(&inv).unwrap().is_identity());
    }

    #[test]
    fn echelon_membership() {
        let e = |i| Vector::basis(4, i);
        let ech = Echelon::new(&[&e(0) + &e(1), &e(1) + &e(2), &e(0) - &e(2)]);
        assert_eq!(ech.rank(), 2);
        assert!(ech.contains(&(&e(0) - &e(2))));
        assert!(!ech.contains(&e(3)));
        assert!(!ech.contains(&e(0)));
    }

    #[test]
    fn apply_and_power() {
        let a = Scalar::param("a");
        let m = LinMap::diagonal(vec![a.clone(), s(2)]);
        let v = Vector::from_coords(vec![s(1), s(1)]);
        assert_eq!(
            m.apply(&v).unwrap(),
            Vector::from_coords(vec![a.clone(), s(2)])
        );
        assert_eq!(m.power(2), LinMap::diagonal(vec![a.pow(2), s(4)]));
        assert_eq!(
            m.apply(&Vector::zeros(3)),
            Err(AlgebraError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }
}
