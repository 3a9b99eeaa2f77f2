//! Sparse multivariate polynomials with exact big-integer coefficients and a
//! fixed number of variables. Exponent vectors always have length `n`; no
//! zero coefficient is ever stored, so equality is structural.

use crate::composition::WeakComposition;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Coeff = BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, &vec![0; n], Coeff::one())
    }

    pub fn monomial(n: usize, exp: &[u32], coeff: Coeff) -> Self {
        assert_eq!(exp.len(), n, "exponent vector length must equal n");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp.to_vec(), coeff);
        }
        Polynomial { n, terms }
    }

    /// `x^a` for a weak composition `a`.
    pub fn from_weight(a: &WeakComposition) -> Self {
        Self::monomial(a.len(), a.parts(), Coeff::one())
    }

    /// Sum of `x^{wt}` over an iterator of weights (with multiplicity).
    pub fn from_weights<I: IntoIterator<Item = WeakComposition>>(n: usize, weights: I) -> Self {
        let mut p = Polynomial::zero(n);
        for w in weights {
            p.add_term(w.parts(), Coeff::one());
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Coeff)> {
        self.terms.iter()
    }

    /// Terms in decreasing lexicographic order of the exponent vector, the
    /// canonical output order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Vec<u32>, &Coeff)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exp: &[u32]) -> Coeff {
        self.terms.get(exp).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, exp: &[u32], coeff: Coeff) {
        assert_eq!(exp.len(), self.n);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp.to_vec()).or_insert_with(Coeff::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(exp);
        }
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "cannot mix polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul_scalar(&self, s: &Coeff) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Multiplies by the monomial `coeff * x^exp`.
    pub fn mul_monomial(&self, exp: &[u32], coeff: &Coeff) -> Polynomial {
        assert_eq!(exp.len(), self.n);
        if coeff.is_zero() {
            return Polynomial::zero(self.n);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let ne: Vec<u32> = e.iter().zip(exp).map(|(a, b)| a + b).collect();
                (ne, c * coeff)
            })
            .collect();
        Polynomial { n: self.n, terms }
    }

    /// Multiplies by the single variable `x_i` (1-based).
    pub fn mul_var(&self, i: usize) -> Result<Polynomial> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        let mut exp = vec![0u32; self.n];
        exp[i - 1] = 1;
        Ok(self.mul_monomial(&exp, &Coeff::one()))
    }

    /// The action of `s_i`: exchanges `x_i` and `x_{i+1}` (1-based `i < n`).
    pub fn swap_vars(&self, i: usize) -> Result<Polynomial> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne.swap(i - 1, i);
                (ne, c.clone())
            })
            .collect();
        Ok(Polynomial { n: self.n, terms })
    }

    /// The involution `I`: exchanges `x_j` and `x_{n+1-j}` for all `j`.
    pub fn reverse_variables(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne.reverse();
                (ne, c.clone())
            })
            .collect();
        Polynomial { n: self.n, terms }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    pub fn is_monomial_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Splits into homogeneous components, keyed by total degree.
    pub fn degree_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e.iter().sum();
            out.entry(d)
                .or_insert_with(|| Polynomial::zero(self.n))
                .add_term(e, c.clone());
        }
        out
    }

    /// Exponent of `x_i` (1-based) maximized over terms.
    pub fn max_exponent_of(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i - 1]).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms_desc()
            .map(|(e, c)| {
                let coeff = match i64::try_from(c.clone()) {
                    Ok(v) => serde_json::json!(v),
                    Err(_) => serde_json::json!(c.to_string()),
                };
                serde_json::json!({ "exp": e, "coeff": coeff })
            })
            .collect();
        serde_json::json!({ "n": self.n, "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Polynomial> {
        let bad = |msg: &str| Error::Invalid(format!("polynomial json: {msg}"));
        let n = v
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| bad("missing `n`"))? as usize;
        let mut p = Polynomial::zero(n);
        let terms = v
            .get("terms")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("missing `terms`"))?;
        for t in terms {
            let exp: Vec<u32> = t
                .get("exp")
                .and_then(|x| x.as_array())
                .ok_or_else(|| bad("term missing `exp`"))?
                .iter()
                .map(|x| x.as_u64().map(|u| u as u32))
                .collect::<Option<_>>()
                .ok_or_else(|| bad("bad exponent"))?;
            if exp.len() != n {
                return Err(bad("exponent length differs from n"));
            }
            let cv = t.get("coeff").ok_or_else(|| bad("term missing `coeff`"))?;
            let coeff: Coeff = if let Some(i) = cv.as_i64() {
                Coeff::from(i)
            } else if let Some(s) = cv.as_str() {
                s.parse()
                    .map_err(|_| bad(&format!("bad coefficient `{s}`")))?
            } else {
                return Err(bad("bad coefficient"));
            };
            p.add_term(&exp, coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms in decreasing lexicographic exponent
    /// order, each `c*x^(e1,...,en)` with `c` omitted when it is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms_desc().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let exps: Vec<String> = e.iter().map(|x| x.to_string()).collect();
            write!(f, "x^({})", exps.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, exp: &[u32]) -> Polynomial {
        Polynomial::monomial(n, exp, Coeff::one())
    }

    #[test]
    fn reverse_variables_examples() {
        // I(x1^2 x2) with n = 3 is x3^2 x2
        let p = m(3, &[2, 1, 0]);
        assert_eq!(p.reverse_variables(), m(3, &[0, 1, 2]));
        let q = m(3, &[2, 1, 0]).add(&m(3, &[1, 1, 1]).mul_scalar(&Coeff::from(-3)));
        assert_eq!(q.reverse_variables().reverse_variables(), q);
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let p = m(2, &[1, 0]).add(&m(2, &[0, 1]));
        let q = p.sub(&m(2, &[1, 0]));
        assert_eq!(q, m(2, &[0, 1]));
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.mul_var(1).unwrap(), m(2, &[2, 0]).add(&m(2, &[1, 1])));
        assert!(p.is_homogeneous());
        assert!(!p.add(&Polynomial::one(2)).is_homogeneous());
    }

    #[test]
    fn display_canonical() {
        let mut p = Polynomial::zero(3);
        p.add_term(&[0, 3, 2], Coeff::one());
        p.add_term(&[1, 1, 2], Coeff::from(2));
        p.add_term(&[3, 2, 0], Coeff::from(-1));
        assert_eq!(p.to_string(), "-x^(3,2,0) + 2*x^(1,1,2) + x^(0,3,2)");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        assert_eq!(Polynomial::one(2).to_string(), "x^(0,0)");
    }

    #[test]
    fn json_round_trip() {
        let mut p = Polynomial::zero(3);
        p.add_term(&[0, 3, 2], Coeff::one());
        p.add_term(&[1, 1, 2], Coeff::from(-7));
        let v = p.to_json();
        assert_eq!(Polynomial::from_json(&v).unwrap(), p);
        // json terms come out in decreasing lex order
        let terms = v["terms"].as_array().unwrap();
        assert_eq!(terms[0]["exp"].as_array().unwrap().len(), 3);
        assert_eq!(terms[0]["exp"][0], 1);
    }

    #[test]
    fn swap_vars() {
        let p = m(3, &[2, 1, 0]);
        assert_eq!(p.swap_vars(1).unwrap(), m(3, &[1, 2, 0]));
        assert!(p.swap_vars(3).is_err());
    }
}
