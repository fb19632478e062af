//! Multivariate polynomial gcd over Q.
//!
//! Content/primitive-part recursion on a main variable with a primitive
//! pseudo-remainder sequence. Before recursing, variables that occur in only
//! one operand are eliminated by taking the gcd with that operand's
//! coefficients, which keeps the typical case (a small parameter
//! denominator against a large generic numerator) cheap.

use super::monomial::Monomial;
use super::poly::{Polynomial, Rational};
use super::var::Var;

use num_traits::One;

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m = ma.gcd(&mb);
    let a1 = a.div_monomial(&ma).expect("content divides");
    let b1 = b.div_monomial(&mb).expect("content divides");
    let g = gcd_no_monomial_content(&a1, &b1);
    g.mul_term(&m, &Rational::one()).monic()
}

fn gcd_no_monomial_content(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    let va = a.vars();
    let vb = b.vars();
    if va.iter().any(|v| !vb.contains(v)) {
        return gcd_with_coefficients(b, a, |v| !vb.contains(&v));
    }
    if vb.iter().any(|v| !va.contains(v)) {
        return gcd_with_coefficients(a, b, |v| !va.contains(&v));
    }
    // same variable set; pick the variable of least combined degree
    let main = *va
        .iter()
        .min_by_key(|&&v| (a.degree_in(v).max(b.degree_in(v)), v))
        .expect("nonconstant");
    let (ca, pa) = content_and_primitive(a, main);
    let (cb, pb) = content_and_primitive(b, main);
    let c = gcd(&ca, &cb);
    let g = univariate_prs(pa, pb, main);
    (&c * &g).monic()
}

/// gcd(base, other) where `other` is split by the variables absent from
/// `base`: the result must divide each of those coefficients.
fn gcd_with_coefficients(
    base: &Polynomial,
    other: &Polynomial,
    outer: impl Fn(Var) -> bool,
) -> Polynomial {
    let mut parts = other.split_by(outer);
    // smallest coefficients first tends to reach one sooner
    parts.sort_by_key(|(_, c)| (c.total_degree(), c.len()));
    let mut g = base.clone();
    for (_, c) in parts {
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g.monic()
}

fn content_and_primitive(p: &Polynomial, v: Var) -> (Polynomial, Vec<Polynomial>) {
    let coeffs = p.coefficients_in(v);
    let content = coefficient_content(&coeffs);
    let prim = coeffs
        .iter()
        .map(|c| c.div_exact(&content).expect("content divides coefficient"))
        .collect();
    (content, prim)
}

fn coefficient_content(coeffs: &[Polynomial]) -> Polynomial {
    let mut nonzero: Vec<&Polynomial> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| (c.total_degree(), c.len()));
    let mut g = Polynomial::zero();
    for c in nonzero {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn degree(p: &[Polynomial]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn trim(mut p: Vec<Polynomial>) -> Vec<Polynomial> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Pseudo-remainder of `f` by `g` in the main variable.
fn pseudo_remainder(f: &[Polynomial], g: &[Polynomial]) -> Vec<Polynomial> {
    let n = degree(g).expect("nonzero divisor");
    let lc = &g[n];
    let mut r = trim(f.to_vec());
    while let Some(d) = degree(&r) {
        if d < n {
            break;
        }
        let t = r[d].clone();
        let shift = d - n;
        let mut next: Vec<Polynomial> = r.iter().map(|c| c * lc).collect();
        for (k, gk) in g.iter().enumerate() {
            if !gk.is_zero() {
                next[k + shift] = &next[k + shift] - &(&t * gk);
            }
        }
        r = trim(next);
    }
    r
}

fn primitive(p: Vec<Polynomial>) -> Vec<Polynomial> {
    let c = coefficient_content(&p);
    if c.is_zero() || c.is_one() {
        return p;
    }
    p.iter()
        .map(|x| x.div_exact(&c).expect("content divides coefficient"))
        .collect()
}

fn univariate_prs(f: Vec<Polynomial>, g: Vec<Polynomial>, v: Var) -> Polynomial {
    let (mut f, mut g) = (trim(f), trim(g));
    if degree(&f) < degree(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    while degree(&g).is_some() {
        let r = primitive(pseudo_remainder(&f, &g));
        f = g;
        g = r;
    }
    match degree(&f) {
        None | Some(0) => Polynomial::one(),
        Some(_) => Polynomial::from_coefficients_in(v, &f).monic(),
    }
}

/// Monomial gcd of two single-term polynomials' monomials; exposed for the
/// fast path in normalization.
pub fn monomial_gcd_with(p: &Polynomial, m: &Monomial) -> Monomial {
    let mut g = m.clone();
    for (t, _) in p.terms() {
        if g.is_one() {
            break;
        }
        g = g.gcd(t);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(name: &str) -> Polynomial {
        Polynomial::var(Var::named(name))
    }

    fn c(n: i64) -> Polynomial {
        Polynomial::from_int(n)
    }

    #[test]
    fn gcd_of_products() {
        let a = pv("ga");
        let b = pv("gb");
        let x = pv("gx");
        let common = &(&a - &b) * &(&a + &c(2));
        let f = &common * &(&(&x * &b) + &c(1));
        let g = &common * &(&a.pow(2) - &b);
        assert_eq!(gcd(&f, &g), common.monic());
        assert_eq!(gcd(&f, &c(5)), Polynomial::one());
        assert!(gcd(&Polynomial::zero(), &Polynomial::zero()).is_zero());
    }

    #[test]
    fn gcd_with_monomials() {
        let a = pv("ga");
        let b = pv("gb");
        let f = &a.pow(2) * &b;
        let g = &a * &b.pow(3);
        assert_eq!(gcd(&f, &g), &a * &b);
        let h = &(&a.pow(2) * &b) + &(&a * &b.pow(2));
        assert_eq!(gcd(&h, &(&a * &b)), &a * &b);
    }

    #[test]
    fn coprime_multivariate() {
        let a = pv("ga");
        let b = pv("gb");
        let x = pv("gx");
        let f = &(&a * &x) + &b;
        let g = &(&b * &x) + &a;
        assert!(gcd(&f, &g).is_one());
    }

    #[test]
    fn monomial_gcd() {
        let a = Var::named("ga");
        let b = Var::named("gb");
        let p = &Polynomial::var(a).pow(3) + &(&Polynomial::var(a) * &Polynomial::var(b));
        let m = Monomial::from_pairs([(a, 2), (b, 2)]);
        assert_eq!(monomial_gcd_with(&p, &m), Monomial::var(a, 1));
    }
}
