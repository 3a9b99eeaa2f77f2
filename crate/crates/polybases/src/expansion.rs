//! Generic exact basis expansion. For each homogeneous degree component,
//! the expander assembles the candidate basis polynomials of that degree,
//! solves the resulting integer linear system by fraction-free elimination,
//! and returns exact rational coefficients (flagged when non-integral).
//! No triangularity is assumed for any basis.

use crate::composition::{Composition, Partition, WeakComposition};
use crate::filling::{gen_poly, FamilyId, Shape};
use crate::linalg::{solve_exact, SolveOutcome};
use crate::polynomial::{Coeff, Polynomial};
use crate::tableau::Tableau;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Bases available to the expansion engine and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisId {
    Key,
    YKey,
    Atom,
    YAtom,
    QKey,
    YQKey,
    FSlide,
    YFSlide,
    MSlide,
    YMSlide,
    Particle,
    YParticle,
    Monomial,
    Schur,
    Fundamental,
    MonomialQ,
    QSchur,
    YQSchur,
}

pub const ALL_BASES: [BasisId; 18] = [
    BasisId::Key,
    BasisId::YKey,
    BasisId::Atom,
    BasisId::YAtom,
    BasisId::QKey,
    BasisId::YQKey,
    BasisId::FSlide,
    BasisId::YFSlide,
    BasisId::MSlide,
    BasisId::YMSlide,
    BasisId::Particle,
    BasisId::YParticle,
    BasisId::Monomial,
    BasisId::Schur,
    BasisId::Fundamental,
    BasisId::MonomialQ,
    BasisId::QSchur,
    BasisId::YQSchur,
];

impl BasisId {
    pub fn name(self) -> &'static str {
        match self {
            BasisId::Key => "key",
            BasisId::YKey => "ykey",
            BasisId::Atom => "atom",
            BasisId::YAtom => "yatom",
            BasisId::QKey => "qkey",
            BasisId::YQKey => "yqkey",
            BasisId::FSlide => "fslide",
            BasisId::YFSlide => "yfslide",
            BasisId::MSlide => "mslide",
            BasisId::YMSlide => "ymslide",
            BasisId::Particle => "particle",
            BasisId::YParticle => "yparticle",
            BasisId::Monomial => "monomial",
            BasisId::Schur => "schur",
            BasisId::Fundamental => "F",
            BasisId::MonomialQ => "M",
            BasisId::QSchur => "QS",
            BasisId::YQSchur => "YQS",
        }
    }

    pub fn parse(s: &str) -> Result<BasisId> {
        match s {
            "F" => return Ok(BasisId::Fundamental),
            "M" => return Ok(BasisId::MonomialQ),
            "QS" => return Ok(BasisId::QSchur),
            "YQS" => return Ok(BasisId::YQSchur),
            _ => {}
        }
        ALL_BASES
            .iter()
            .copied()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownBasis(s.to_string()))
    }

    /// The filling family generating this basis, when there is one.
    pub fn family(self) -> Option<FamilyId> {
        match self {
            BasisId::Key => Some(FamilyId::Kssf),
            BasisId::YKey => Some(FamilyId::Ykssf),
            BasisId::Atom => Some(FamilyId::Assf),
            BasisId::YAtom => Some(FamilyId::Yassf),
            BasisId::QKey => Some(FamilyId::Qf),
            BasisId::YQKey => Some(FamilyId::Yqf),
            BasisId::FSlide => Some(FamilyId::Ff),
            BasisId::YFSlide => Some(FamilyId::Yff),
            BasisId::MSlide => Some(FamilyId::Mf),
            BasisId::YMSlide => Some(FamilyId::Ymf),
            BasisId::Particle => Some(FamilyId::Lf),
            BasisId::YParticle => Some(FamilyId::Ylf),
            BasisId::Fundamental => Some(FamilyId::Fct),
            BasisId::MonomialQ => Some(FamilyId::Mct),
            BasisId::QSchur => Some(FamilyId::Rct),
            BasisId::YQSchur => Some(FamilyId::Yct),
            BasisId::Monomial | BasisId::Schur => None,
        }
    }

    pub fn index_kind(self) -> IndexKind {
        match self {
            BasisId::Schur => IndexKind::Partition,
            BasisId::Fundamental | BasisId::MonomialQ | BasisId::QSchur | BasisId::YQSchur => {
                IndexKind::Composition
            }
            _ => IndexKind::WeakComposition,
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexKind {
    WeakComposition,
    Composition,
    Partition,
}

/// The Schur polynomial as the weight generating function of
/// `SSYT_n(lambda)`.
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Polynomial {
    Polynomial::from_weights(n, Tableau::all_ssyt(lambda, n).iter().map(|t| t.weight(n)))
}

/// The basis element for a raw index vector (interpreted per basis).
pub fn basis_polynomial(basis: BasisId, index: &[u32], n: usize) -> Result<Polynomial> {
    match basis.index_kind() {
        IndexKind::WeakComposition => {
            let a = WeakComposition::new(index.to_vec());
            if basis == BasisId::Monomial {
                if a.len() != n {
                    return Err(Error::LengthMismatch(a.len(), n));
                }
                return Ok(Polynomial::from_weight(&a));
            }
            gen_poly(basis.family().unwrap(), &Shape::Weak(a), n)
        }
        IndexKind::Composition => {
            let c = Composition::new(index.to_vec())?;
            gen_poly(basis.family().unwrap(), &Shape::Comp(c), n)
        }
        IndexKind::Partition => {
            let lam = Partition::new(index.to_vec())?;
            Ok(schur_polynomial(&lam, n))
        }
    }
}

/// All candidate indices for the basis at a fixed total degree.
pub fn basis_indices(basis: BasisId, degree: u32, n: usize) -> Vec<Vec<u32>> {
    match basis.index_kind() {
        IndexKind::WeakComposition => WeakComposition::all(n, degree)
            .into_iter()
            .map(|a| a.parts().to_vec())
            .collect(),
        IndexKind::Composition => Composition::all(degree, n)
            .into_iter()
            .map(|c| c.parts().to_vec())
            .collect(),
        IndexKind::Partition => Partition::all(degree, n)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect(),
    }
}

/// An exact expansion of a polynomial over a basis. Coefficients are
/// rationals so that non-integral results can be reported rather than
/// rejected; `is_integral` distinguishes the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub basis: BasisId,
    pub n: usize,
    pub terms: BTreeMap<Vec<u32>, BigRational>,
}

impl Expansion {
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| *c >= BigRational::zero())
    }

    /// Integer coefficient map; fails when any coefficient is fractional.
    pub fn integer_terms(&self) -> Result<BTreeMap<Vec<u32>, Coeff>> {
        if !self.is_integral() {
            return Err(Error::Invalid(
                "expansion has non-integral coefficients".into(),
            ));
        }
        Ok(self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), v.to_integer()))
            .collect())
    }

    /// Rebuilds the polynomial; exact over rationals, then cast back.
    pub fn reconstruct(&self) -> Result<Polynomial> {
        let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (index, coeff) in &self.terms {
            let p = basis_polynomial(self.basis, index, self.n)?;
            for (e, c) in p.terms() {
                let entry = acc.entry(e.clone()).or_insert_with(BigRational::zero);
                *entry += coeff * BigRational::from(c.clone());
            }
        }
        let mut out = Polynomial::zero(self.n);
        for (e, c) in acc {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return Err(Error::Invalid(
                    "reconstruction has non-integral coefficients".into(),
                ));
            }
            out.add_term(&e, c.to_integer());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(index, c)| {
                let coeff = if c.is_integer() {
                    match i64::try_from(c.to_integer()) {
                        Ok(v) => serde_json::json!(v),
                        Err(_) => serde_json::json!(c.to_integer().to_string()),
                    }
                } else {
                    serde_json::json!(c.to_string())
                };
                serde_json::json!({ "index": index, "coeff": coeff })
            })
            .collect();
        serde_json::json!({ "basis": self.basis.name(), "n": self.n, "terms": terms })
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (index, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            let parts: Vec<String> = index.iter().map(|x| x.to_string()).collect();
            write!(f, "{}[{}]", self.basis.name(), parts.join(","))?;
        }
        Ok(())
    }
}

/// Expands `p` over the basis by one exact linear solve per homogeneous
/// component. Errors with `NotInSpan` when a component lies outside the
/// basis span (possible for the Schur and quasisymmetric bases).
pub fn expand(p: &Polynomial, basis: BasisId, n: usize) -> Result<Expansion> {
    if p.n() != n {
        return Err(Error::LengthMismatch(p.n(), n));
    }
    let mut terms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
    for (degree, component) in p.degree_components() {
        let indices = basis_indices(basis, degree, n);
        let columns: Vec<Polynomial> = indices
            .iter()
            .map(|ix| basis_polynomial(basis, ix, n))
            .collect::<Result<_>>()?;
        // row space: every monomial of the component or of any candidate
        let mut slots: std::collections::BTreeSet<Vec<u32>> =
            component.terms().map(|(e, _)| e.clone()).collect();
        for col in &columns {
            slots.extend(col.terms().map(|(e, _)| e.clone()));
        }
        let slots: Vec<Vec<u32>> = slots.into_iter().collect();
        let slot_index: BTreeMap<&Vec<u32>, usize> =
            slots.iter().enumerate().map(|(k, e)| (e, k)).collect();
        let mut matrix = vec![vec![BigInt::zero(); columns.len()]; slots.len()];
        for (j, col) in columns.iter().enumerate() {
            for (e, c) in col.terms() {
                matrix[slot_index[e]][j] = c.clone();
            }
        }
        let mut rhs = vec![BigInt::zero(); slots.len()];
        for (e, c) in component.terms() {
            rhs[slot_index[e]] = c.clone();
        }
        match solve_exact(&matrix, &rhs) {
            SolveOutcome::Unique(x) => {
                for (ix, coeff) in indices.into_iter().zip(x) {
                    if !coeff.is_zero() {
                        terms.insert(ix, coeff);
                    }
                }
            }
            SolveOutcome::Inconsistent => return Err(Error::NotInSpan),
            SolveOutcome::Underdetermined => {
                return Err(Error::Underdetermined);
            }
        }
    }
    Ok(Expansion { basis, n, terms })
}

/// Membership order on weak compositions: `b <= a` iff they sort to the
/// same partition and the minimal sorting permutations compare in Bruhat
/// order.
pub fn wc_leq(b: &WeakComposition, a: &WeakComposition) -> Result<bool> {
    if b.len() != a.len() {
        return Err(Error::LengthMismatch(b.len(), a.len()));
    }
    if b.sorted_desc() != a.sorted_desc() {
        return Ok(false);
    }
    let (wb, _) = b.sorting_permutation_desc();
    let (wa, _) = a.sorting_permutation_desc();
    wb.bruhat_leq(&wa)
}

/// The atom expansion of `key_a`: coefficient 1 on every `b <= a`.
pub fn key_to_atoms(a: &WeakComposition) -> Result<Expansion> {
    let n = a.len();
    let mut terms = BTreeMap::new();
    for b in WeakComposition::all(n, a.size()) {
        if wc_leq(&b, a)? {
            terms.insert(b.parts().to_vec(), BigRational::one());
        }
    }
    Ok(Expansion {
        basis: BasisId::Atom,
        n,
        terms,
    })
}

/// `s_lambda = sum of QS_alpha = sum of YQS_alpha` over rearrangements
/// `alpha` of `lambda`; returns the two all-ones expansions.
pub fn schur_decompositions(lambda: &Partition, n: usize) -> Result<(Expansion, Expansion)> {
    if lambda.len() > n {
        return Err(Error::ShapeMismatch(format!(
            "partition {lambda} has more than {n} parts"
        )));
    }
    let mk = |basis: BasisId| -> Expansion {
        let terms = lambda
            .rearrangements()
            .into_iter()
            .map(|alpha| (alpha.parts().to_vec(), BigRational::one()))
            .collect();
        Expansion { basis, n, terms }
    };
    Ok((mk(BasisId::QSchur), mk(BasisId::YQSchur)))
}

/// The positive-expansion arrows among the reverse bases; each source
/// expands with nonnegative coefficients in its target.
pub const REVERSE_ARROWS: [(BasisId, BasisId); 8] = [
    (BasisId::Key, BasisId::QKey),
    (BasisId::QKey, BasisId::FSlide),
    (BasisId::QKey, BasisId::Atom),
    (BasisId::FSlide, BasisId::MSlide),
    (BasisId::FSlide, BasisId::Particle),
    (BasisId::Atom, BasisId::Particle),
    (BasisId::Particle, BasisId::Monomial),
    (BasisId::MSlide, BasisId::Monomial),
];

/// The Young analogues of the same arrows.
pub const YOUNG_ARROWS: [(BasisId, BasisId); 8] = [
    (BasisId::YKey, BasisId::YQKey),
    (BasisId::YQKey, BasisId::YFSlide),
    (BasisId::YQKey, BasisId::YAtom),
    (BasisId::YFSlide, BasisId::YMSlide),
    (BasisId::YFSlide, BasisId::YParticle),
    (BasisId::YAtom, BasisId::YParticle),
    (BasisId::YParticle, BasisId::Monomial),
    (BasisId::YMSlide, BasisId::Monomial),
];
