//! Numeric oracle: specializes parameters to rationals and evaluates
//! products directly from dense structure constants, without the symbolic
//! evaluator.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use homalg::{AlgebraSpec, LinMap, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random nonzero small rationals for every parameter.
pub fn random_point(a: &AlgebraSpec, rng: &mut ChaCha8Rng) -> BTreeMap<String, Rational> {
    a.params()
        .iter()
        .map(|p| {
            let mut n = 0;
            while n == 0 {
                n = rng.random_range(-7..=7);
            }
            let d = rng.random_range(1..=3);
            (
                p.name.clone(),
                Rational::new(BigInt::from(n), BigInt::from(d)),
            )
        })
        .collect()
}

pub fn random_vector(n: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    (0..n).map(|_| q(rng.random_range(-5..=5))).collect()
}

#[derive(Clone, Debug)]
pub struct Dense {
    pub n: usize,
    // c[(i * n + j) * n + k] = coefficient of b_k in b_i b_j
    pub c: Vec<Rational>,
    // m[k * n + j] = coefficient of b_k in f(b_j)
    pub alpha: Option<Vec<Rational>>,
}

pub fn dense_map(f: &LinMap, point: &BTreeMap<String, Rational>) -> Vec<Rational> {
    let n = f.dim();
    let mut m = Vec::with_capacity(n * n);
    for k in 0..n {
        for j in 0..n {
            m.push(f.get(k, j).specialize(point).expect("defined at point"));
        }
    }
    m
}

impl Dense {
    pub fn new(a: &AlgebraSpec, point: &BTreeMap<String, Rational>) -> Dense {
        let n = a.dim();
        let mut c = vec![Rational::zero(); n * n * n];
        for (i, j, k, s) in a.entries() {
            c[(i * n + j) * n + k] = s.specialize(point).expect("defined at point");
        }
        Dense {
            n,
            c,
            alpha: a.alpha().map(|f| dense_map(f, point)),
        }
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.n;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    let c = &self.c[(i * n + j) * n + k];
                    if !c.is_zero() {
                        out[k] += &xy * c;
                    }
                }
            }
        }
        out
    }

    pub fn apply(m: &[Rational], x: &[Rational]) -> Vec<Rational> {
        let n = x.len();
        (0..n)
            .map(|k| (0..n).map(|j| &m[k * n + j] * &x[j]).sum())
            .collect()
    }

    pub fn alpha(&self, x: &[Rational]) -> Vec<Rational> {
        match &self.alpha {
            Some(m) => Dense::apply(m, x),
            None => x.to_vec(),
        }
    }

    pub fn associator(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let l = self.mul(&self.alpha(x), &self.mul(y, z));
        let r = self.mul(&self.mul(x, y), &self.alpha(z));
        sub(&l, &r)
    }

    /// `μ(α²x, μ(y, μ(x,x))) − μ(μ(αx, y), α μ(x,x))`.
    pub fn jordan(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let xx = self.mul(x, x);
        let l = self.mul(&self.alpha(&self.alpha(x)), &self.mul(y, &xx));
        let r = self.mul(&self.mul(&self.alpha(x), y), &self.alpha(&xx));
        sub(&l, &r)
    }
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Whether `f(μ(x, y)) = μ(f x, f y)` at random points, with `f` given
/// densely and products from two possibly different tables.
pub fn numeric_morphism(
    from: &Dense,
    to: &Dense,
    f: &[Rational],
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> bool {
    (0..trials).all(|_| {
        let x = random_vector(from.n, rng);
        let y = random_vector(from.n, rng);
        let l = Dense::apply(f, &from.mul(&x, &y));
        let r = to.mul(&Dense::apply(f, &x), &Dense::apply(f, &y));
        l == r
    })
}
