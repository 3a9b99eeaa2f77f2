//! The type A crystal on semistandard Young tableaux, Demazure truncations
//! from the highest or lowest weight, and reduced factorizations with the
//! Young cutoff.
//!
//! Crystal operators use the signature rule on the column reading word
//! (columns left to right, read top to bottom): each `i+1` opens a bracket,
//! each `i` closes one; `f_i` raises the rightmost unmatched `i`, `e_i`
//! lowers the leftmost unmatched `i+1`. This convention is pinned by
//! reproducing the full `B(21)`, `n = 3` crystal edge for edge.

use crate::composition::{Partition, WeakComposition};
use crate::permutation::Permutation;
use crate::polynomial::Polynomial;
use crate::tableau::Tableau;
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Positions (in column reading order) of the unmatched letters `i` and
/// `i+1`, as indices into the box list.
fn signature(word: &[u32], i: u32) -> (Vec<usize>, Vec<usize>) {
    let mut open: Vec<usize> = Vec::new(); // unmatched i+1 so far
    let mut unmatched_low: Vec<usize> = Vec::new(); // unmatched i
    for (pos, &x) in word.iter().enumerate() {
        if x == i + 1 {
            open.push(pos);
        } else if x == i && open.pop().is_none() {
            unmatched_low.push(pos);
        }
    }
    (unmatched_low, open)
}

/// Boxes of `t` in column reading order, as (row, col) 1-based pairs.
fn column_reading_boxes(t: &Tableau) -> Vec<(usize, usize)> {
    let width = t.rows().first().map_or(0, |r| r.len());
    let mut boxes = Vec::new();
    for c in 1..=width {
        for r in (1..=t.num_rows()).rev() {
            if t.rows()[r - 1].len() >= c {
                boxes.push((r, c));
            }
        }
    }
    boxes
}

fn replace_entry(t: &Tableau, pos: (usize, usize), value: u32) -> Tableau {
    let mut rows: Vec<Vec<u32>> = t.rows().to_vec();
    rows[pos.0 - 1][pos.1 - 1] = value;
    Tableau::new(rows).expect("shape unchanged")
}

/// Kashiwara lowering operator `f_i`: `None` when no arrow leaves `t`.
pub fn crystal_f(t: &Tableau, i: usize) -> Option<Tableau> {
    let boxes = column_reading_boxes(t);
    let word: Vec<u32> = boxes.iter().map(|&(r, c)| t.entry(r, c)).collect();
    let (low, _) = signature(&word, i as u32);
    let &pos = low.last()?;
    let out = replace_entry(t, boxes[pos], i as u32 + 1);
    debug_assert!(out.is_ssyt());
    Some(out)
}

/// Kashiwara raising operator `e_i`, the partial inverse of `f_i`.
pub fn crystal_e(t: &Tableau, i: usize) -> Option<Tableau> {
    let boxes = column_reading_boxes(t);
    let word: Vec<u32> = boxes.iter().map(|&(r, c)| t.entry(r, c)).collect();
    let (_, high) = signature(&word, i as u32);
    let &pos = high.first()?;
    let out = replace_entry(t, boxes[pos], i as u32);
    debug_assert!(out.is_ssyt());
    Some(out)
}

/// A crystal graph on tableau vertices with colored `f_i` edges.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub n: usize,
    pub vertices: Vec<Tableau>,
    /// Edges `(from, to, color)` as vertex indices with `color = i`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl CrystalGraph {
    fn from_vertex_set(n: usize, set: BTreeSet<Tableau>) -> CrystalGraph {
        let vertices: Vec<Tableau> = set.into_iter().collect();
        let index: BTreeMap<&Tableau, usize> =
            vertices.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let mut edges = Vec::new();
        for (from, t) in vertices.iter().enumerate() {
            for i in 1..n {
                if let Some(img) = crystal_f(t, i) {
                    if let Some(&to) = index.get(&img) {
                        edges.push((from, to, i));
                    }
                }
            }
        }
        CrystalGraph { n, vertices, edges }
    }

    pub fn weights(&self) -> Vec<WeakComposition> {
        self.vertices.iter().map(|t| t.weight(self.n)).collect()
    }

    pub fn character(&self) -> Polynomial {
        Polynomial::from_weights(self.n, self.vertices.iter().map(|t| t.weight(self.n)))
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        self.vertices.binary_search(t).is_ok()
    }

    /// Edge triples as tableaux, for golden comparisons.
    pub fn edge_tableaux(&self) -> BTreeSet<(Tableau, Tableau, usize)> {
        self.edges
            .iter()
            .map(|&(f, t, c)| (self.vertices[f].clone(), self.vertices[t].clone(), c))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        const COLORS: [&str; 6] = ["blue", "red", "green", "orange", "purple", "brown"];
        let mut s = String::from("digraph crystal {\n  rankdir=TB;\n");
        for (k, t) in self.vertices.iter().enumerate() {
            let label = format!("{t}").replace('\n', "\\n");
            let wt = t.weight(self.n);
            s.push_str(&format!("  v{k} [label=\"{label}\\nwt {wt}\"];\n"));
        }
        for &(from, to, color) in &self.edges {
            let c = COLORS[(color - 1) % COLORS.len()];
            s.push_str(&format!(
                "  v{from} -> v{to} [label=\"{color}\", color=\"{c}\"];\n"
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// The full crystal `B(lambda)` on `SSYT_n(lambda)`.
pub fn tableau_crystal(lambda: &Partition, n: usize) -> CrystalGraph {
    let set: BTreeSet<Tableau> = Tableau::all_ssyt(lambda, n).into_iter().collect();
    CrystalGraph::from_vertex_set(n, set)
}

fn closure<F>(start: BTreeSet<Tableau>, step: F) -> BTreeSet<Tableau>
where
    F: Fn(&Tableau) -> Option<Tableau>,
{
    let mut set = start;
    let mut frontier: Vec<Tableau> = set.iter().cloned().collect();
    while let Some(t) = frontier.pop() {
        if let Some(next) = step(&t) {
            if set.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    set
}

fn validate_reduced(n: usize, word: &[usize]) -> Result<()> {
    for &i in word {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
    }
    if !Permutation::is_reduced_word(n, word) {
        return Err(Error::NotReduced(word.to_vec()));
    }
    Ok(())
}

/// Demazure truncation from the highest weight: applies the closure
/// operators `D_{i_1} ... D_{i_k}` to the highest weight element, the last
/// letter acting first. The character is the key polynomial of the weak
/// composition sorting to `lambda` along `word`.
pub fn demazure_from_highest(lambda: &Partition, n: usize, word: &[usize]) -> Result<CrystalGraph> {
    validate_reduced(n, word)?;
    let highest = Tableau::new(
        lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| vec![r as u32 + 1; len as usize])
            .collect(),
    )
    .expect("highest weight tableau");
    let mut set = BTreeSet::from([highest]);
    for &i in word.iter().rev() {
        set = closure(set, |t| crystal_f(t, i));
    }
    Ok(CrystalGraph::from_vertex_set(n, set))
}

/// Demazure truncation from the lowest weight element, closing under the
/// raising operators; the character is a Young key polynomial.
pub fn demazure_from_lowest(lambda: &Partition, n: usize, word: &[usize]) -> Result<CrystalGraph> {
    validate_reduced(n, word)?;
    // the lowest weight element fills each column of height h with the
    // largest h letters
    let cols: Vec<Vec<u32>> = lambda
        .conjugate()
        .parts()
        .iter()
        .map(|&h| (n as u32 - h + 1..=n as u32).collect())
        .collect();
    let lowest = Tableau::from_columns(&cols);
    let mut set = BTreeSet::from([lowest]);
    for &i in word.iter().rev() {
        set = closure(set, |t| crystal_e(t, i));
    }
    Ok(CrystalGraph::from_vertex_set(n, set))
}

/// The Demazure crystal whose character is `key_a`.
pub fn key_crystal(a: &WeakComposition) -> CrystalGraph {
    let (_, word) = a.sorting_permutation_desc();
    demazure_from_highest(&a.sort(), a.len(), &word).expect("bubble word is reduced")
}

/// The lowest-weight Demazure crystal whose character is `ykey_a`.
pub fn ykey_crystal(a: &WeakComposition) -> CrystalGraph {
    let (_, word) = a.sorting_permutation_asc();
    demazure_from_lowest(&a.sort(), a.len(), &word).expect("bubble word is reduced")
}

/// A reduced word for `w` cut into blocks, possibly empty, with entries
/// strictly decreasing inside each block; `blocks[0]` is the leftmost.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ReducedFactorization {
    pub blocks: Vec<Vec<usize>>,
}

impl ReducedFactorization {
    /// Weight in `S_n` context: `n - l` zeros followed by the block sizes
    /// read right to left.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let l = self.blocks.len();
        let mut parts = vec![0u32; n - l];
        parts.extend(self.blocks.iter().rev().map(|b| b.len() as u32));
        WeakComposition::new(parts)
    }

    /// Smallest entry of block `i` (1-based from the left) is at least `i`.
    pub fn has_young_cutoff(&self) -> bool {
        self.blocks
            .iter()
            .enumerate()
            .all(|(k, b)| b.iter().all(|&x| x > k))
    }
}

impl fmt::Display for ReducedFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "(")?;
            if block.iter().all(|&x| x <= 9) {
                for x in block {
                    write!(f, "{x}")?;
                }
            } else {
                let s: Vec<String> = block.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", s.join(","))?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// All reduced factorizations of `w` into `num_blocks` blocks.
pub fn reduced_factorizations(w: &Permutation, num_blocks: usize) -> Vec<ReducedFactorization> {
    let mut out = Vec::new();
    for word in w.all_reduced_words() {
        split_into_blocks(&word, num_blocks, &mut Vec::new(), 0, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

fn split_into_blocks(
    word: &[usize],
    blocks_left: usize,
    acc: &mut Vec<Vec<usize>>,
    start: usize,
    out: &mut Vec<ReducedFactorization>,
) {
    if blocks_left == 0 {
        if start == word.len() {
            out.push(ReducedFactorization {
                blocks: acc.clone(),
            });
        }
        return;
    }
    for end in start..=word.len() {
        let block = &word[start..end];
        if block.windows(2).any(|p| p[0] <= p[1]) {
            break; // longer blocks only get worse
        }
        acc.push(block.to_vec());
        split_into_blocks(word, blocks_left - 1, acc, end, out);
        acc.pop();
    }
}

/// Reduced factorizations with Young cutoff: the block count is the
/// position of the rightmost descent of `w` (zero for the identity), and
/// the smallest entry of block `i` must be at least `i`.
pub fn rfyc(w: &Permutation) -> Vec<ReducedFactorization> {
    let num_blocks = w.descents().last().copied().unwrap_or(0);
    reduced_factorizations(w, num_blocks)
        .into_iter()
        .filter(|r| r.has_young_cutoff())
        .collect()
}

/// `ysch_w` as the weight generating function of `RFYC(rev(w))`.
pub fn young_schubert_via_rfyc(w: &Permutation) -> Polynomial {
    let n = w.size();
    Polynomial::from_weights(n, rfyc(&w.rev()).iter().map(|r| r.weight(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filling::{gen_poly_weak, FamilyId};
    use crate::operators::yschubert_ops;

    fn wc(parts: &[u32]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn b21_edge_exact() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        let g = tableau_crystal(&lam, 3);
        assert_eq!(g.vertices.len(), 8);
        let t112 = tab(&[&[1, 1], &[2]]);
        let t113 = tab(&[&[1, 1], &[3]]);
        let t122 = tab(&[&[1, 2], &[2]]);
        let t132 = tab(&[&[1, 3], &[2]]);
        let t123 = tab(&[&[1, 2], &[3]]);
        let t133 = tab(&[&[1, 3], &[3]]);
        let t223 = tab(&[&[2, 2], &[3]]);
        let t233 = tab(&[&[2, 3], &[3]]);
        let expect: BTreeSet<(Tableau, Tableau, usize)> = [
            (t112.clone(), t122.clone(), 1),
            (t113.clone(), t123.clone(), 1),
            (t123.clone(), t223.clone(), 1),
            (t133.clone(), t233.clone(), 1),
            (t112.clone(), t113.clone(), 2),
            (t122.clone(), t132.clone(), 2),
            (t132.clone(), t133.clone(), 2),
            (t223.clone(), t233.clone(), 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(g.edge_tableaux(), expect);
    }

    #[test]
    fn crystal_axioms_small() {
        for lam in Partition::all(4, 3) {
            let g = tableau_crystal(&lam, 3);
            for t in &g.vertices {
                for i in 1..3 {
                    if let Some(img) = crystal_f(t, i) {
                        assert_eq!(crystal_e(&img, i).as_ref(), Some(t));
                        // weight moves by one from coordinate i to i+1
                        let from = t.weight(3);
                        let to = img.weight(3);
                        let mut moved = from.parts().to_vec();
                        moved[i - 1] -= 1;
                        moved[i] += 1;
                        assert_eq!(to.parts(), &moved[..]);
                    }
                    if let Some(img) = crystal_e(t, i) {
                        assert_eq!(crystal_f(&img, i).as_ref(), Some(t));
                    }
                }
            }
        }
    }

    #[test]
    fn characters_are_schur() {
        let lam = Partition::new(vec![2, 2]).unwrap();
        let g = tableau_crystal(&lam, 3);
        let schur =
            Polynomial::from_weights(3, Tableau::all_ssyt(&lam, 3).iter().map(|t| t.weight(3)));
        assert_eq!(g.character(), schur);
        // single box, two variables: a path with one 1-edge
        let g = tableau_crystal(&Partition::new(vec![1]).unwrap(), 2);
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges, vec![(0, 1, 1)]);
    }

    #[test]
    fn demazure_key_102() {
        let g = key_crystal(&wc(&[1, 0, 2]));
        let mut expect = Polynomial::zero(3);
        for e in [[2, 1, 0], [1, 2, 0], [2, 0, 1], [1, 1, 1], [1, 0, 2]] {
            expect.add_term(&e, 1.into());
        }
        assert_eq!(g.character(), expect);
        assert_eq!(
            g.character(),
            gen_poly_weak(FamilyId::Kssf, &wc(&[1, 0, 2])).unwrap()
        );
    }

    #[test]
    fn demazure_ykey_201() {
        let g = ykey_crystal(&wc(&[2, 0, 1]));
        let mut expect = Polynomial::zero(3);
        for e in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 1, 1], [2, 0, 1]] {
            expect.add_term(&e, 1.into());
        }
        assert_eq!(g.character(), expect);
        assert_eq!(
            g.character(),
            gen_poly_weak(FamilyId::Ykssf, &wc(&[2, 0, 1])).unwrap()
        );
    }

    #[test]
    fn demazure_full_word_gives_whole_crystal() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        let w0 = Permutation::longest(3);
        let g = demazure_from_highest(&lam, 3, &w0.reduced_word()).unwrap();
        assert_eq!(g.vertices.len(), 8);
        let g = demazure_from_lowest(&lam, 3, &w0.reduced_word()).unwrap();
        assert_eq!(g.vertices.len(), 8);
    }

    #[test]
    fn demazure_rejects_non_reduced() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        assert!(demazure_from_highest(&lam, 3, &[1, 1]).is_err());
        assert!(demazure_from_highest(&lam, 3, &[7]).is_err());
    }

    #[test]
    fn rf_21534() {
        let w = Permutation::parse("21534").unwrap();
        let rf = reduced_factorizations(&w, 3);
        // the crystal on RF^3(21534): components of sizes 10 and 8
        assert_eq!(rf.len(), 18);
        for r in &rf {
            let total: usize = r.blocks.iter().map(|b| b.len()).sum();
            assert_eq!(total, w.num_inversions());
        }
        let bold: Vec<String> = rfyc(&w).iter().map(|r| r.to_string()).collect();
        let expect = vec![
            "(1)()(43)",
            "(1)(4)(3)",
            "(1)(43)()",
            "(41)()(3)",
            "(41)(3)()",
            "(431)()()",
        ];
        assert_eq!(bold, expect);
    }

    #[test]
    fn rf_weight_convention() {
        // wt((41)()(3)) = 00102 in S_5
        let r = ReducedFactorization {
            blocks: vec![vec![4, 1], vec![], vec![3]],
        };
        assert_eq!(r.weight(5), wc(&[0, 0, 1, 0, 2]));
    }

    #[test]
    fn rf_identity() {
        let id = Permutation::identity(4);
        let rf = reduced_factorizations(&id, 0);
        assert_eq!(rf.len(), 1);
        assert!(rf[0].blocks.is_empty());
        assert_eq!(rfyc(&id).len(), 1);
    }

    #[test]
    fn ysch_43512_via_rfyc() {
        let w = Permutation::parse("43512").unwrap();
        let p = young_schubert_via_rfyc(&w);
        // ykey_{00003} + ykey_{00201}
        let k1 = gen_poly_weak(FamilyId::Ykssf, &wc(&[0, 0, 0, 0, 3])).unwrap();
        let k2 = gen_poly_weak(FamilyId::Ykssf, &wc(&[0, 0, 2, 0, 1])).unwrap();
        assert_eq!(p, k1.add(&k2));
        assert_eq!(p, yschubert_ops(&w));
    }

    #[test]
    fn dot_export() {
        let g = key_crystal(&wc(&[1, 0, 2]));
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("->"));
        assert!(dot.contains("wt"));
    }
}
