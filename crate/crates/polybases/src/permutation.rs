//! Permutations in one-line notation. Adjacent transpositions act on weak
//! compositions on the right by swapping positions, and the group product is
//! `(uv)(i) = u(v(i))`, so `a . (s_{i_1} ... s_{i_r})` applies `s_{i_1}`
//! first. Reduced words are taken with respect to this product.

use crate::composition::WeakComposition;
use crate::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>, // one-line notation, values 1..=m
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let m = word.len();
        let mut seen = vec![false; m + 1];
        for &v in &word {
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidPermutation(word));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            word: (1..=m).collect(),
        }
    }

    pub fn adjacent(m: usize, i: usize) -> Self {
        assert!(i >= 1 && i < m);
        let mut word: Vec<usize> = (1..=m).collect();
        word.swap(i - 1, i);
        Permutation { word }
    }

    pub fn longest(m: usize) -> Self {
        Permutation {
            word: (1..=m).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` with 1-based `i`.
    pub fn value(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            word: other.word.iter().map(|&v| self.word[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    /// Coxeter length: the number of inversions.
    pub fn num_inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.word.len() {
            for j in i + 1..self.word.len() {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Lehmer code: `L(w)_i = #{j > i : w_i > w_j}`.
    pub fn lehmer(&self) -> WeakComposition {
        let n = self.word.len();
        let parts = (0..n)
            .map(|i| ((i + 1..n).filter(|&j| self.word[i] > self.word[j]).count()) as u32)
            .collect();
        WeakComposition::new(parts)
    }

    /// Young Lehmer code: counts pairs `(i, j)` with `i > j` and `w_i > w_j`.
    pub fn young_lehmer(&self) -> WeakComposition {
        let n = self.word.len();
        let parts = (0..n)
            .map(|i| ((0..i).filter(|&j| self.word[i] > self.word[j]).count()) as u32)
            .collect();
        WeakComposition::new(parts)
    }

    /// One-line word reversed; still a permutation.
    pub fn rev(&self) -> Permutation {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    /// `frev(w) = w_0 w w_0`: reverse the one-line word and complement
    /// entries by `m + 1 - v`.
    pub fn frev(&self) -> Permutation {
        let m = self.word.len();
        Permutation {
            word: self.word.iter().rev().map(|&v| m + 1 - v).collect(),
        }
    }

    /// Positions `i` (1-based) with `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.word.len())
            .filter(|&i| self.word[i - 1] > self.word[i])
            .collect()
    }

    /// Bruhat order by the dominance criterion: `u <= v` iff for every `k`
    /// the increasingly sorted prefix `{u_1..u_k}` is entrywise at most the
    /// sorted prefix `{v_1..v_k}`.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::LengthMismatch(self.size(), other.size()));
        }
        let n = self.size();
        let mut su: Vec<usize> = Vec::with_capacity(n);
        let mut sv: Vec<usize> = Vec::with_capacity(n);
        for k in 0..n {
            let iu = su.partition_point(|&x| x < self.word[k]);
            su.insert(iu, self.word[k]);
            let iv = sv.partition_point(|&x| x < other.word[k]);
            sv.insert(iv, other.word[k]);
            if su.iter().zip(sv.iter()).any(|(a, b)| a > b) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Product `s_{i_1} ... s_{i_r}` of adjacent transpositions, so that the
    /// right action on compositions applies `s_{i_1}` first.
    pub fn from_word(m: usize, word: &[usize]) -> Permutation {
        let mut p = Permutation::identity(m);
        for &i in word {
            assert!(i >= 1 && i < m, "letter {i} out of range for S_{m}");
            p = p.compose(&Permutation::adjacent(m, i));
        }
        p
    }

    /// One reduced word, peeling leftmost descents of the inverse image:
    /// `self = s_{i_1} ∘ s_{i_2} ∘ ... ∘ s_{i_r}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut word = Vec::new();
        while !cur.is_identity() {
            // left multiplication by s_i shortens iff value i+1 sits left of i
            let i = (1..cur.size())
                .find(|&i| cur.position(i + 1) < cur.position(i))
                .expect("non-identity permutation has a left descent");
            word.push(i);
            cur = Permutation::adjacent(cur.size(), i).compose(&cur);
        }
        word
    }

    fn position(&self, value: usize) -> usize {
        self.word.iter().position(|&v| v == value).unwrap() + 1
    }

    /// All reduced words for this permutation.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 1..self.size() {
            if self.position(i + 1) < self.position(i) {
                let rest = Permutation::adjacent(self.size(), i).compose(self);
                for mut w in rest.all_reduced_words() {
                    w.insert(0, i);
                    out.push(w);
                }
            }
        }
        out
    }

    /// Checks that a word multiplies out to a permutation of full length.
    pub fn is_reduced_word(m: usize, word: &[usize]) -> bool {
        Permutation::from_word(m, word).num_inversions() == word.len()
    }

    /// Avoids the pattern 2143.
    pub fn is_vexillary(&self) -> bool {
        let w = &self.word;
        let n = w.len();
        for a in 0..n {
            for b in a + 1..n {
                if w[b] >= w[a] {
                    continue;
                }
                for c in b + 1..n {
                    if w[c] <= w[a] {
                        continue;
                    }
                    for d in c + 1..n {
                        // pattern 2143: w_b < w_a < w_d < w_c
                        if w[d] > w[a] && w[d] < w[c] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn all(m: usize) -> Vec<Permutation> {
        let mut word: Vec<usize> = (1..=m).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation { word: word.clone() });
            if !next_permutation(&mut word) {
                break;
            }
        }
        out
    }

    /// Parses either a digit string like `21534` or a comma list `2,1,5,3,4`.
    pub fn parse(s: &str) -> Result<Self> {
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Invalid(format!("cannot parse permutation `{s}`: {e}")))?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Invalid(format!("cannot parse permutation `{s}`")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.iter().all(|&v| v <= 9) {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

/// Advances `slice` to the next lexicographic permutation of its entries,
/// returning false after the last one.
pub fn next_permutation<T: Ord>(slice: &mut [T]) -> bool {
    let n = slice.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && slice[i - 1] >= slice[i] {
        i -= 1;
    }
    if i == 0 {
        slice.reverse();
        return false;
    }
    let mut j = n - 1;
    while slice[j] <= slice[i - 1] {
        j -= 1;
    }
    slice.swap(i - 1, j);
    slice[i..].reverse();
    true
}
