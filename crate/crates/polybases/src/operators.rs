//! Divided-difference calculus. The divided difference `∂_i` is computed
//! termwise by pairing each monomial with its `s_i`-image, which factors the
//! numerator exactly and never performs a polynomial division. Operator
//! words compose right-to-left: the last letter applies first, matching the
//! usual notation `π_{i_1} ... π_{i_r} = π_{i_1} ∘ ... ∘ π_{i_r}`.

use crate::composition::WeakComposition;
use crate::permutation::Permutation;
use crate::polynomial::{Coeff, Polynomial};
use crate::{Error, Result};

/// `∂_i(f) = (f - s_i f) / (x_i - x_{i+1})`.
pub fn partial(i: usize, f: &Polynomial) -> Result<Polynomial> {
    let n = f.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let mut out = Polynomial::zero(n);
    for (e, c) in f.terms() {
        let a = e[i - 1];
        let b = e[i];
        if a == b {
            continue;
        }
        let mut exp = e.clone();
        if a > b {
            for k in b..a {
                exp[i - 1] = k;
                exp[i] = a + b - 1 - k;
                out.add_term(&exp, c.clone());
            }
        } else {
            for k in a..b {
                exp[i - 1] = k;
                exp[i] = a + b - 1 - k;
                out.add_term(&exp, -c.clone());
            }
        }
    }
    Ok(out)
}

/// `π_i(f) = ∂_i(x_i f)`.
pub fn pi(i: usize, f: &Polynomial) -> Result<Polynomial> {
    partial(i, &f.mul_var(i)?)
}

/// `π̄_i(f) = π_i(f) - f`.
pub fn pibar(i: usize, f: &Polynomial) -> Result<Polynomial> {
    Ok(pi(i, f)?.sub(f))
}

/// `π̂_i(f) = -∂_i(x_{i+1} f)`.
pub fn pihat(i: usize, f: &Polynomial) -> Result<Polynomial> {
    Ok(partial(i, &f.mul_var(i + 1)?)?.neg())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Partial,
    Pi,
    PiBar,
    PiHat,
}

impl OpKind {
    pub fn parse(s: &str) -> Result<OpKind> {
        match s {
            "partial" | "d" => Ok(OpKind::Partial),
            "pi" => Ok(OpKind::Pi),
            "pibar" => Ok(OpKind::PiBar),
            "pihat" => Ok(OpKind::PiHat),
            _ => Err(Error::Invalid(format!("unknown operator `{s}`"))),
        }
    }

    pub fn apply(self, i: usize, f: &Polynomial) -> Result<Polynomial> {
        match self {
            OpKind::Partial => partial(i, f),
            OpKind::Pi => pi(i, f),
            OpKind::PiBar => pibar(i, f),
            OpKind::PiHat => pihat(i, f),
        }
    }
}

/// A word of indexed operators, written leftmost-first like the
/// mathematical notation; `apply` therefore folds from the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorWord(pub Vec<(OpKind, usize)>);

impl OperatorWord {
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let mut cur = f.clone();
        for &(kind, i) in self.0.iter().rev() {
            cur = kind.apply(i, &cur)?;
        }
        Ok(cur)
    }

    /// Parses `pihat:2,pihat:1` style operator words.
    pub fn parse(s: &str) -> Result<OperatorWord> {
        let mut ops = Vec::new();
        for piece in s.split(',') {
            let (name, idx) = piece
                .trim()
                .split_once(':')
                .ok_or_else(|| Error::Invalid(format!("operator `{piece}` missing `:index`")))?;
            let i: usize = idx
                .parse()
                .map_err(|e| Error::Invalid(format!("bad operator index `{idx}`: {e}")))?;
            ops.push((OpKind::parse(name)?, i));
        }
        Ok(OperatorWord(ops))
    }
}

fn apply_letters(kind: OpKind, word: &[usize], start: &Polynomial) -> Polynomial {
    // the word is in mathematical order, so the rightmost letter acts first
    let mut cur = start.clone();
    for &i in word.iter().rev() {
        cur = kind.apply(i, &cur).expect("indices validated by caller");
    }
    cur
}

/// `key_a = π_{w_a} x^{sort(a)}`.
pub fn key_ops(a: &WeakComposition) -> Polynomial {
    let (_, word) = a.sorting_permutation_desc();
    let start = Polynomial::monomial(a.len(), a.sorted_desc().parts(), Coeff::from(1));
    apply_letters(OpKind::Pi, &word, &start)
}

/// `atom_a = π̄_{w_a} x^{sort(a)}`.
pub fn atom_ops(a: &WeakComposition) -> Polynomial {
    let (_, word) = a.sorting_permutation_desc();
    let start = Polynomial::monomial(a.len(), a.sorted_desc().parts(), Coeff::from(1));
    apply_letters(OpKind::PiBar, &word, &start)
}

/// `ykey_a = π̂_{ŵ_a} x^{revsort(a)}`.
pub fn ykey_ops(a: &WeakComposition) -> Polynomial {
    let (_, word) = a.sorting_permutation_asc();
    let start = Polynomial::monomial(a.len(), a.sorted_asc().parts(), Coeff::from(1));
    apply_letters(OpKind::PiHat, &word, &start)
}

/// `yatom_a(x_1, ..., x_n) = atom_{rev(a)}(x_n, ..., x_1)`.
pub fn yatom_ops(a: &WeakComposition) -> Polynomial {
    atom_ops(&a.rev()).reverse_variables()
}

/// `sch_w = ∂_{w^{-1} w_0} (x_1^{n-1} x_2^{n-2} ... x_{n-1})`.
pub fn schubert_ops(w: &Permutation) -> Polynomial {
    let n = w.size();
    let staircase: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let start = Polynomial::monomial(n, &staircase, Coeff::from(1));
    let u = w.inverse().compose(&Permutation::longest(n));
    apply_letters(OpKind::Partial, &u.reduced_word(), &start)
}

/// `ysch_w = (-1)^{l(w)} ∂_{w^{-1}} (x_2 x_3^2 ... x_n^{n-1})`.
pub fn yschubert_ops(w: &Permutation) -> Polynomial {
    let n = w.size();
    let staircase: Vec<u32> = (0..n).map(|i| i as u32).collect();
    let start = Polynomial::monomial(n, &staircase, Coeff::from(1));
    let out = apply_letters(OpKind::Partial, &w.inverse().reduced_word(), &start);
    if w.num_inversions() % 2 == 1 {
        out.neg()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filling::{gen_poly_weak, FamilyId};

    fn wc(parts: &[u32]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    fn mono(n: usize, exp: &[u32]) -> Polynomial {
        Polynomial::monomial(n, exp, Coeff::from(1))
    }

    #[test]
    fn partial_basics() {
        // ∂_1(x_1) = 1
        assert_eq!(partial(1, &mono(2, &[1, 0])).unwrap(), Polynomial::one(2));
        // symmetric input gives zero
        let sym = mono(2, &[1, 1]);
        assert!(partial(1, &sym).unwrap().is_zero());
        let sym2 = mono(3, &[2, 1, 0]).add(&mono(3, &[1, 2, 0]));
        assert!(partial(1, &sym2).unwrap().is_zero());
        assert!(partial(3, &mono(3, &[0, 0, 0])).is_err());
    }

    #[test]
    fn partial_division_identity() {
        // (x_i - x_{i+1}) * ∂_i f = f - s_i f, exactly
        for e in [[3, 0, 1], [0, 2, 2], [1, 4, 0], [2, 2, 2]] {
            let f = mono(3, &e);
            for i in 1..3 {
                let d = partial(i, &f).unwrap();
                let xi = d.mul_var(i).unwrap();
                let xi1 = d.mul_var(i + 1).unwrap();
                assert_eq!(xi.sub(&xi1), f.sub(&f.swap_vars(i).unwrap()));
            }
        }
    }

    #[test]
    fn key_chain_golden() {
        assert_eq!(
            key_ops(&wc(&[0, 3, 2])),
            gen_poly_weak(FamilyId::Kssf, &wc(&[0, 3, 2])).unwrap()
        );
    }

    #[test]
    fn ykey_chain_golden() {
        // π̂_2 π̂_1 (x_2^2 x_3^3) = ykey_230
        let start = mono(3, &[0, 2, 3]);
        let step = pihat(1, &start).unwrap();
        let result = pihat(2, &step).unwrap();
        assert_eq!(result, ykey_ops(&wc(&[2, 3, 0])));
        assert_eq!(
            result,
            gen_poly_weak(FamilyId::Ykssf, &wc(&[2, 3, 0])).unwrap()
        );
    }

    #[test]
    fn pi_idempotent_type() {
        for e in [[2, 0, 1], [1, 3, 0], [0, 0, 4]] {
            let f = mono(3, &e);
            for i in 1..3 {
                let once = pi(i, &f).unwrap();
                assert_eq!(pi(i, &once).unwrap(), once);
                let hat = pihat(i, &f).unwrap();
                assert_eq!(pihat(i, &hat).unwrap(), hat);
                let bar = pibar(i, &f).unwrap();
                assert_eq!(pibar(i, &bar).unwrap(), bar.neg());
            }
        }
    }

    #[test]
    fn pihat_braid_and_commutation() {
        for e in [[2, 0, 1, 1], [1, 3, 0, 0], [0, 2, 2, 0]] {
            let f = mono(4, &e);
            let lhs = pihat(1, &pihat(2, &pihat(1, &f).unwrap()).unwrap()).unwrap();
            let rhs = pihat(2, &pihat(1, &pihat(2, &f).unwrap()).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            let lhs = pihat(1, &pihat(3, &f).unwrap()).unwrap();
            let rhs = pihat(3, &pihat(1, &f).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn reduced_word_independence() {
        for w in Permutation::all(4) {
            let a = wc(&[3, 1, 0, 2]);
            let start = Polynomial::monomial(4, a.sorted_desc().parts(), Coeff::from(1));
            let words = w.all_reduced_words();
            let first = apply_letters(OpKind::Pi, &words[0], &start);
            for word in &words[1..] {
                assert_eq!(apply_letters(OpKind::Pi, word, &start), first);
            }
        }
    }

    #[test]
    fn schubert_goldens() {
        let w = Permutation::parse("31524").unwrap();
        let mut expect = Polynomial::zero(5);
        for e in [
            [3, 1, 0, 0, 0],
            [2, 2, 0, 0, 0],
            [3, 0, 1, 0, 0],
            [2, 1, 1, 0, 0],
            [2, 0, 2, 0, 0],
        ] {
            expect.add_term(&e, Coeff::from(1));
        }
        assert_eq!(schubert_ops(&w), expect);
        assert_eq!(schubert_ops(&Permutation::identity(4)), Polynomial::one(4));
    }

    #[test]
    fn yschubert_goldens() {
        let w = Permutation::parse("2314").unwrap();
        let expect = mono(4, &[0, 0, 1, 3]).add(&mono(4, &[0, 1, 0, 3]));
        assert_eq!(yschubert_ops(&w), expect);
        // the identity keeps the increasing staircase
        assert_eq!(
            yschubert_ops(&Permutation::identity(3)),
            mono(3, &[0, 1, 2])
        );
        assert_eq!(yschubert_ops(&Permutation::identity(1)), Polynomial::one(1));
    }

    #[test]
    fn operator_word_parse_apply() {
        let word = OperatorWord::parse("pihat:2,pihat:1").unwrap();
        let start = mono(3, &[0, 2, 3]);
        assert_eq!(word.apply(&start).unwrap(), ykey_ops(&wc(&[2, 3, 0])));
        assert!(OperatorWord::parse("nope:1").is_err());
        assert!(OperatorWord::parse("pi").is_err());
    }
}
