//! Trace realization of Young key polynomials. For a diagram `D(a)` the
//! row group permutes boxes within rows and the column group within
//! columns; `e_T` is the signed group sum whose span, as `T(u)` runs over
//! the row-frank words `YW(a)`, is the Young key module. Each `e_{T(u)}`
//! is a weight vector, so the trace of the diagonal matrix
//! `diag(x_1, ..., x_n)` is the sum of `x^{wt(T(u))}`, the Young key
//! polynomial.

use crate::composition::WeakComposition;
use crate::generators::young_row_frank_words;
use crate::linalg::rank;
use crate::polynomial::{Coeff, Polynomial};
use crate::word::Word;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A raw box assignment: `rows[i]` lists the entries of row `i + 1` in box
/// order. Unlike `Filling`, no ordering inside rows is implied.
pub type BoxFilling = Vec<Vec<u32>>;

/// A finitely supported integer combination of box fillings of one
/// diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalFillingVector {
    pub terms: BTreeMap<BoxFilling, Coeff>,
}

impl FormalFillingVector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common weight of the support when homogeneous.
    pub fn uniform_weight(&self, n: usize) -> Option<WeakComposition> {
        let mut weights = self.terms.keys().map(|rows| {
            let mut parts = vec![0u32; n];
            for row in rows {
                for &x in row {
                    parts[(x - 1) as usize] += 1;
                }
            }
            WeakComposition::new(parts)
        });
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }
}

fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut sign = 1i8;
        // parity by counting inversions; k stays tiny
        for i in 0..k {
            for j in i + 1..k {
                if idx[i] > idx[j] {
                    sign = -sign;
                }
            }
        }
        out.push((idx.clone(), sign));
        if !crate::permutation::next_permutation(&mut idx) {
            break;
        }
    }
    out
}

fn guard(a: &WeakComposition, n: usize) -> Result<()> {
    let boxes = a.size();
    let dim = (n as f64).powi(boxes as i32);
    if dim > 1e6 {
        return Err(Error::SizeGuard(format!(
            "{n}^{boxes} fillings exceed the 10^6 module guard"
        )));
    }
    Ok(())
}

/// `e_T`: the sum of `sgn(beta) T alpha beta` over the row group and the
/// column group of `D(a)`.
pub fn e_vector(rows: &BoxFilling, a: &WeakComposition, n: usize) -> Result<FormalFillingVector> {
    guard(a, n)?;
    if rows.len() != a.len()
        || rows
            .iter()
            .zip(a.parts())
            .any(|(row, &len)| row.len() != len as usize)
    {
        return Err(Error::ShapeMismatch(format!(
            "filling does not match diagram of {a}"
        )));
    }

    // row-symmetrize
    let row_perms: Vec<Vec<(Vec<usize>, i8)>> = a
        .parts()
        .iter()
        .map(|&len| permutations_with_sign(len as usize))
        .collect();
    let mut symmetrized: BTreeMap<BoxFilling, Coeff> = BTreeMap::new();
    let mut stack: Vec<Vec<u32>> = Vec::new();
    fn rec_rows(
        rows: &BoxFilling,
        row_perms: &[Vec<(Vec<usize>, i8)>],
        stack: &mut Vec<Vec<u32>>,
        out: &mut BTreeMap<BoxFilling, Coeff>,
    ) {
        let i = stack.len();
        if i == rows.len() {
            *out.entry(stack.clone()).or_insert_with(Coeff::zero) += 1;
            return;
        }
        for (perm, _) in &row_perms[i] {
            let row: Vec<u32> = perm.iter().map(|&k| rows[i][k]).collect();
            stack.push(row);
            rec_rows(rows, row_perms, stack, out);
            stack.pop();
        }
    }
    rec_rows(rows, &row_perms, &mut stack, &mut symmetrized);

    // columns of D(a): rows owning a box in column c
    let width = a.parts().iter().copied().max().unwrap_or(0) as usize;
    let columns: Vec<Vec<usize>> = (1..=width)
        .map(|c| {
            (0..a.len())
                .filter(|&i| a.parts()[i] as usize >= c)
                .collect()
        })
        .collect();
    let col_perms: Vec<Vec<(Vec<usize>, i8)>> = columns
        .iter()
        .map(|col| permutations_with_sign(col.len()))
        .collect();

    // antisymmetrize over the column group
    let mut result: BTreeMap<BoxFilling, Coeff> = BTreeMap::new();
    let mut choice: Vec<usize> = Vec::new();
    fn rec_cols(
        columns: &[Vec<usize>],
        col_perms: &[Vec<(Vec<usize>, i8)>],
        choice: &mut Vec<usize>,
        symmetrized: &BTreeMap<BoxFilling, Coeff>,
        result: &mut BTreeMap<BoxFilling, Coeff>,
    ) {
        let c = choice.len();
        if c == columns.len() {
            let mut sign = 1i8;
            for (ci, &pi) in choice.iter().enumerate() {
                sign *= col_perms[ci][pi].1;
            }
            for (filling, count) in symmetrized {
                let mut image = filling.clone();
                for (ci, &pi) in choice.iter().enumerate() {
                    let perm = &col_perms[ci][pi].0;
                    let col_rows = &columns[ci];
                    for (k, &row) in col_rows.iter().enumerate() {
                        image[row][ci] = filling[col_rows[perm[k]]][ci];
                    }
                }
                let entry = result.entry(image).or_insert_with(Coeff::zero);
                *entry += count * Coeff::from(sign);
            }
            return;
        }
        for pi in 0..col_perms[c].len() {
            choice.push(pi);
            rec_cols(columns, col_perms, choice, symmetrized, result);
            choice.pop();
        }
    }
    rec_cols(&columns, &col_perms, &mut choice, &symmetrized, &mut result);
    result.retain(|_, c| !c.is_zero());
    Ok(FormalFillingVector { terms: result })
}

/// Places the block `u^{(j)}` of a row-frank word into row `j`.
pub fn word_to_filling(u: &Word, a: &WeakComposition) -> BoxFilling {
    let letters = u.letters();
    let mut rows: BoxFilling = Vec::with_capacity(a.len());
    let mut end = letters.len();
    for i in 1..=a.len() {
        let len = a.part(i) as usize;
        rows.push(letters[end - len..end].to_vec());
        end -= len;
    }
    rows
}

/// The basis `{ e_{T(u)} : u in YW(a) }` of the Young key module.
pub fn young_key_module_basis(
    a: &WeakComposition,
    n: usize,
) -> Result<Vec<(Word, FormalFillingVector)>> {
    if a.len() != n {
        return Err(Error::LengthMismatch(a.len(), n));
    }
    let mut out = Vec::new();
    for u in young_row_frank_words(a)? {
        let filling = word_to_filling(&u, a);
        let vector = e_vector(&filling, a, n)?;
        out.push((u, vector));
    }
    Ok(out)
}

/// Exact rank of a family of formal filling vectors.
pub fn vectors_rank(vectors: &[&FormalFillingVector]) -> usize {
    let mut support: std::collections::BTreeSet<&BoxFilling> = std::collections::BTreeSet::new();
    for v in vectors {
        support.extend(v.terms.keys());
    }
    let support: Vec<&BoxFilling> = support.into_iter().collect();
    let index: BTreeMap<&BoxFilling, usize> =
        support.iter().enumerate().map(|(k, f)| (*f, k)).collect();
    let matrix: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![BigInt::zero(); support.len()];
            for (f, c) in &v.terms {
                row[index[f]] = c.clone();
            }
            row
        })
        .collect();
    rank(matrix)
}

/// The trace of `diag(x_1, ..., x_n)` on the Young key module: the sum of
/// `x^{wt(T(u))}` over `u in YW(a)`, equal to the Young key polynomial.
pub fn module_trace(a: &WeakComposition, n: usize) -> Result<Polynomial> {
    if a.len() != n {
        return Err(Error::LengthMismatch(a.len(), n));
    }
    guard(a, n)?;
    Ok(Polynomial::from_weights(
        n,
        young_row_frank_words(a)?.iter().map(|u| u.weight(n)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filling::{gen_poly_weak, FamilyId};

    fn wc(parts: &[u32]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    #[test]
    fn e_vector_eight_terms() {
        // T with empty first row, then rows [1,2,2] and [2,3]
        let a = wc(&[0, 3, 2]);
        let t: BoxFilling = vec![vec![], vec![1, 2, 2], vec![2, 3]];
        let e = e_vector(&t, &a, 3).unwrap();
        let expect: BTreeMap<BoxFilling, Coeff> = [
            (vec![vec![], vec![1, 2, 2], vec![2, 3]], 2),
            (vec![vec![], vec![2, 2, 2], vec![1, 3]], -2),
            (vec![vec![], vec![1, 3, 2], vec![2, 2]], -2),
            (vec![vec![], vec![2, 3, 2], vec![1, 2]], 2),
            (vec![vec![], vec![2, 1, 2], vec![3, 2]], 2),
            (vec![vec![], vec![3, 1, 2], vec![2, 2]], -2),
            (vec![vec![], vec![2, 2, 2], vec![3, 1]], -2),
            (vec![vec![], vec![3, 2, 2], vec![2, 1]], 2),
        ]
        .into_iter()
        .map(|(f, c)| (f, Coeff::from(c)))
        .collect();
        assert_eq!(e.terms, expect);
        assert_eq!(e.uniform_weight(3).unwrap(), wc(&[1, 3, 1]));
    }

    #[test]
    fn column_repeats_annihilate() {
        // both boxes of a column carry the same entry
        let a = wc(&[1, 1]);
        let t: BoxFilling = vec![vec![2], vec![2]];
        assert!(e_vector(&t, &a, 2).unwrap().is_zero());
    }

    #[test]
    fn trace_is_young_key_230() {
        let a = wc(&[2, 3, 0]);
        assert_eq!(
            module_trace(&a, 3).unwrap(),
            gen_poly_weak(FamilyId::Ykssf, &a).unwrap()
        );
    }

    #[test]
    fn basis_rank_230() {
        let a = wc(&[2, 3, 0]);
        let basis = young_key_module_basis(&a, 3).unwrap();
        assert_eq!(basis.len(), 9);
        for (u, v) in &basis {
            assert!(!v.is_zero(), "e vector of {u} vanished");
            assert!(
                v.uniform_weight(3).is_some(),
                "e vector of {u} mixes weights"
            );
        }
        let vectors: Vec<&FormalFillingVector> = basis.iter().map(|(_, v)| v).collect();
        assert_eq!(vectors_rank(&vectors), 9);
    }

    #[test]
    fn guard_rejects_large() {
        let a = wc(&[9, 9, 9, 9, 9]);
        assert!(matches!(module_trace(&a, 5), Err(Error::SizeGuard(_))));
    }
}
