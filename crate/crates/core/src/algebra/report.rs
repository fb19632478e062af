use std::collections::BTreeSet;
use std::fmt;

use crate::scalar::{Monomial, Polynomial, Rational, Scalar};

use super::vector::Vector;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Verdict {
    Holds,
    HoldsUnderAssumptions,
    Fails,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::HoldsUnderAssumptions => "holds-under-assumptions",
            Verdict::Fails => "fails",
        }
    }

    pub fn is_success(self) -> bool {
        self != Verdict::Fails
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Polynomials assumed nonzero, e.g. denominators of structure constants.
///
/// Monomials are split into their variables, so `1/(a2*a5)` contributes
/// `a2 != 0` and `a5 != 0`.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Assumptions(BTreeSet<Polynomial>);

impl Assumptions {
    pub fn new() -> Assumptions {
        Assumptions::default()
    }

    /// Records that `p` must not vanish.
    pub fn require_nonzero(&mut self, p: &Polynomial) {
        if p.is_constant() {
            return;
        }
        if p.is_monomial() {
            let (m, _) = p.leading().expect("nonzero");
            for &(v, _) in m.pairs() {
                self.0.insert(Polynomial::var(v));
            }
            return;
        }
        let content = p.monomial_content();
        if !content.is_one() {
            for &(v, _) in content.pairs() {
                self.0.insert(Polynomial::var(v));
            }
        }
        let rest = p.div_monomial(&content).expect("content divides");
        if !rest.is_constant() {
            self.0.insert(rest.monic());
        }
    }

    /// Records the denominator of `s`.
    pub fn note_denominator(&mut self, s: &Scalar) {
        self.require_nonzero(s.den());
    }

    /// Records both numerator and denominator of a scalar used as a pivot.
    pub fn note_pivot(&mut self, s: &Scalar) {
        self.require_nonzero(s.num());
        self.require_nonzero(s.den());
    }

    pub fn extend(&mut self, other: &Assumptions) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Polynomial> {
        self.0.iter()
    }

    /// `p != 0` strings in canonical order.
    pub fn to_strings(&self) -> Vec<String> {
        let mut v: Vec<(u32, String)> = self
            .0
            .iter()
            .map(|p| {
                let key = p.vars().iter().map(|v| v.index()).min().unwrap_or(0);
                (key, format!("{p} != 0"))
            })
            .collect();
        v.sort();
        v.into_iter().map(|(_, s)| s).collect()
    }

    /// Whether `p` is one of the recorded constraints.
    pub fn contains(&self, p: &Polynomial) -> bool {
        self.0.contains(&p.monic())
    }

    pub fn contains_var(&self, name: &str) -> bool {
        let m = Monomial::var(crate::scalar::Var::named(name), 1);
        self.0
            .contains(&Polynomial::term(m, Rational::from_integer(1.into())))
    }
}

/// Where a check failed and by how much.
#[derive(Clone, PartialEq, Debug)]
pub struct Witness {
    /// Basis indices (pairs for bilinear checks, one per variable for
    /// identities) or spanning-vector indices for subalgebra checks; empty
    /// for generic evaluation.
    pub tuple: Vec<usize>,
    /// Output coordinate carrying `residual`.
    pub coordinate: usize,
    pub residual: Scalar,
    /// The full residual vector.
    pub vector: Vector,
    /// A rational point of the generic coordinates and parameters at which
    /// the residual does not vanish.
    pub counterexample: Option<Vec<(String, Rational)>>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub assumptions: Assumptions,
    pub notes: Vec<String>,
}

impl CheckReport {
    /// Holds, or holds under assumptions when any were recorded.
    pub fn success(assumptions: Assumptions) -> CheckReport {
        let verdict = if assumptions.is_empty() {
            Verdict::Holds
        } else {
            Verdict::HoldsUnderAssumptions
        };
        CheckReport {
            verdict,
            witness: None,
            assumptions,
            notes: Vec::new(),
        }
    }

    pub fn failure(witness: Witness, assumptions: Assumptions) -> CheckReport {
        CheckReport {
            verdict: Verdict::Fails,
            witness: Some(witness),
            assumptions,
            notes: Vec::new(),
        }
    }

    pub fn from_outcome(witness: Option<Witness>, assumptions: Assumptions) -> CheckReport {
        match witness {
            Some(w) => CheckReport::failure(w, assumptions),
            None => CheckReport::success(assumptions),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.is_success()
    }

    /// Conjunction: fails if either fails, assumptions are merged.
    pub fn and(mut self, other: CheckReport) -> CheckReport {
        self.assumptions.extend(&other.assumptions);
        self.notes.extend(other.notes);
        if self.verdict == Verdict::Fails {
            return self;
        }
        if other.verdict == Verdict::Fails {
            self.verdict = Verdict::Fails;
            self.witness = other.witness;
            return self;
        }
        CheckReport {
            witness: None,
            ..CheckReport::success(self.assumptions)
        }
        .with_notes(self.notes)
    }

    fn with_notes(mut self, notes: Vec<String>) -> CheckReport {
        self.notes = notes;
        self
    }
}

/// Residual vector built from a witness location.
pub(crate) fn witness_from(tuple: Vec<usize>, residual: Vector) -> Option<Witness> {
    let k = residual.first_nonzero()?;
    Some(Witness {
        tuple,
        coordinate: k,
        residual: residual.get(k).clone(),
        vector: residual,
        counterexample: None,
    })
}
