//! Weak compositions, compositions and partitions. A weak composition keeps
//! its explicit length: trailing zeros are significant because the Young
//! bases of `Poly_n` do not embed into `Poly_{n+1}`.

use crate::permutation::Permutation;
use crate::{Error, Result};
use std::fmt;

/// A sequence of nonnegative integers with a fixed, significant length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition {
    parts: Vec<u32>,
}

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        WeakComposition { parts }
    }

    pub fn zeros(n: usize) -> Self {
        WeakComposition { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, written `|a|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part at `row` (1-based, matching row indices of diagrams).
    pub fn part(&self, row: usize) -> u32 {
        self.parts[row - 1]
    }

    pub fn rev(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        WeakComposition { parts }
    }

    /// `sort(a)`: parts rearranged weakly decreasing, zeros retained.
    pub fn sorted_desc(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        WeakComposition { parts }
    }

    /// `revsort(a)`: parts rearranged weakly increasing, zeros retained.
    pub fn sorted_asc(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable();
        WeakComposition { parts }
    }

    /// `sort(a)` as a partition (trailing zeros dropped).
    pub fn sort(&self) -> Partition {
        let mut parts: Vec<u32> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition { parts }
    }

    /// `flat(a)`: zero parts deleted, order kept.
    pub fn flat(&self) -> Composition {
        Composition {
            parts: self.parts.iter().copied().filter(|&p| p > 0).collect(),
        }
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// Right action of a permutation: `(a . w)_i = a_{w(i)}`.
    pub fn act(&self, w: &Permutation) -> Result<Self> {
        if w.size() != self.len() {
            return Err(Error::LengthMismatch(w.size(), self.len()));
        }
        let parts = (1..=self.len())
            .map(|i| self.parts[w.value(i) - 1])
            .collect();
        Ok(WeakComposition { parts })
    }

    /// The minimal-length permutation `w_a` with `a . w_a = sort(a)`,
    /// together with the reduced word recorded swap by swap. Built by a
    /// stable bubble sort that only swaps strictly out-of-order adjacent
    /// entries, so the word is reduced and the permutation minimal.
    pub fn sorting_permutation_desc(&self) -> (Permutation, Vec<usize>) {
        self.sorting_permutation(false)
    }

    /// The minimal-length permutation taking `a` to `revsort(a)`.
    pub fn sorting_permutation_asc(&self) -> (Permutation, Vec<usize>) {
        self.sorting_permutation(true)
    }

    fn sorting_permutation(&self, ascending: bool) -> (Permutation, Vec<usize>) {
        let n = self.len();
        let mut cur = self.parts.clone();
        let mut word = Vec::new();
        loop {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1) {
                let out_of_order = if ascending {
                    cur[i] > cur[i + 1]
                } else {
                    cur[i] < cur[i + 1]
                };
                if out_of_order {
                    cur.swap(i, i + 1);
                    word.push(i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        let w = Permutation::from_word(n, &word);
        debug_assert_eq!(w.num_inversions(), word.len());
        (w, word)
    }

    /// All weak compositions of the given length summing to `size`.
    pub fn all(len: usize, size: u32) -> Vec<Self> {
        let mut out = Vec::new();
        let mut buf = vec![0u32; len];
        fn rec(buf: &mut Vec<u32>, pos: usize, rest: u32, out: &mut Vec<WeakComposition>) {
            if pos == buf.len() {
                if rest == 0 {
                    out.push(WeakComposition::new(buf.clone()));
                }
                return;
            }
            if pos + 1 == buf.len() {
                buf[pos] = rest;
                out.push(WeakComposition::new(buf.clone()));
                return;
            }
            for v in 0..=rest {
                buf[pos] = v;
                rec(buf, pos + 1, rest - v, out);
            }
        }
        if len == 0 {
            if size == 0 {
                out.push(WeakComposition::new(vec![]));
            }
            return out;
        }
        rec(&mut buf, 0, size, &mut out);
        out
    }

    /// All weak compositions of the given length with `1 <= |a| <= max_size`.
    pub fn all_up_to(len: usize, max_size: u32) -> Vec<Self> {
        (1..=max_size).flat_map(|d| Self::all(len, d)).collect()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        parts
            .map(WeakComposition::new)
            .map_err(|e| Error::Invalid(format!("cannot parse weak composition `{s}`: {e}")))
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_parts(&self.parts))
    }
}

fn join_parts(parts: &[u32]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A sequence of strictly positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn rev(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    pub fn sort(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition { parts }
    }

    /// All compositions of `size` with at most `max_parts` parts.
    pub fn all(size: u32, max_parts: usize) -> Vec<Self> {
        let mut out = Vec::new();
        fn rec(buf: &mut Vec<u32>, rest: u32, max_parts: usize, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: buf.clone() });
                return;
            }
            if buf.len() == max_parts {
                return;
            }
            for v in 1..=rest {
                buf.push(v);
                rec(buf, rest - v, max_parts, out);
                buf.pop();
            }
        }
        if size == 0 {
            out.push(Composition { parts: vec![] });
            return out;
        }
        rec(&mut Vec::new(), size, max_parts, &mut out);
        out
    }

    pub fn parse(s: &str) -> Result<Self> {
        let wc = WeakComposition::parse(s)?;
        Composition::new(wc.parts().to_vec())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_parts(&self.parts))
    }
}

/// Weakly decreasing positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "not weakly decreasing positive parts: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Conjugate partition: `conjugate()_j = #{i : parts_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=max)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Pad with zeros on the right to a weak composition of length `n`.
    pub fn to_weak(&self, n: usize) -> Result<WeakComposition> {
        if self.parts.len() > n {
            return Err(Error::LengthMismatch(self.parts.len(), n));
        }
        let mut parts = self.parts.clone();
        parts.resize(n, 0);
        Ok(WeakComposition::new(parts))
    }

    /// All distinct compositions rearranging this partition.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut sorted = self.parts.clone();
        sorted.sort_unstable();
        let mut out = Vec::new();
        loop {
            out.push(Composition {
                parts: sorted.clone(),
            });
            if !crate::permutation::next_permutation(&mut sorted) {
                break;
            }
        }
        out
    }

    /// All partitions of `size` with at most `max_len` parts.
    pub fn all(size: u32, max_len: usize) -> Vec<Self> {
        let mut out = Vec::new();
        fn rec(
            buf: &mut Vec<u32>,
            rest: u32,
            max_part: u32,
            max_len: usize,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition { parts: buf.clone() });
                return;
            }
            if buf.len() == max_len {
                return;
            }
            for v in (1..=rest.min(max_part)).rev() {
                buf.push(v);
                rec(buf, rest - v, v, max_len, out);
                buf.pop();
            }
        }
        if size == 0 {
            out.push(Partition::empty());
            return out;
        }
        rec(&mut Vec::new(), size, size, max_len, &mut out);
        out
    }

    pub fn parse(s: &str) -> Result<Self> {
        let wc = WeakComposition::parse(s)?;
        Partition::new(wc.parts().to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_parts(&self.parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sort_examples() {
        let a = WeakComposition::new(vec![0, 3, 2]);
        assert_eq!(a.sorted_desc().parts(), &[3, 2, 0]);
        assert_eq!(
            WeakComposition::new(vec![0, 0, 0]).sorted_desc().parts(),
            &[0, 0, 0]
        );
        assert_eq!(
            WeakComposition::new(vec![1, 4, 0, 3, 1])
                .sorted_desc()
                .parts(),
            &[4, 3, 1, 1, 0]
        );
        assert_eq!(a.sort().parts(), &[3, 2]);
        assert_eq!(a.sorted_asc().parts(), &[0, 2, 3]);
        assert_eq!(a.flat().parts(), &[3, 2]);
    }

    #[test]
    fn sorting_permutations() {
        let a = WeakComposition::new(vec![0, 3, 2]);
        let (w, word) = a.sorting_permutation_desc();
        assert_eq!(word, vec![1, 2]);
        assert_eq!(a.act(&w).unwrap(), a.sorted_desc());
        assert_eq!(w.num_inversions(), 2);

        let b = WeakComposition::new(vec![2, 3, 0]);
        let (wb, word_b) = b.sorting_permutation_asc();
        assert_eq!(word_b, vec![2, 1]);
        assert_eq!(b.act(&wb).unwrap(), b.sorted_asc());

        let c = WeakComposition::new(vec![3, 2, 1]);
        let (wc, word_c) = c.sorting_permutation_desc();
        assert_eq!(word_c, Vec::<usize>::new());
        assert_eq!(wc, Permutation::identity(3));
    }

    #[test]
    fn sorting_permutation_is_minimal() {
        // brute-force: among all permutations sending a to sort(a), the
        // constructed one has the smallest inversion count, and uniquely so.
        for a in WeakComposition::all_up_to(4, 5) {
            let (w, word) = a.sorting_permutation_desc();
            assert_eq!(a.act(&w).unwrap(), a.sorted_desc());
            assert_eq!(w.num_inversions(), word.len());
            let min = Permutation::all(4)
                .into_iter()
                .filter(|p| a.act(p).unwrap() == a.sorted_desc())
                .map(|p| p.num_inversions())
                .min()
                .unwrap();
            assert_eq!(w.num_inversions(), min, "a = {a}");
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(WeakComposition::all(3, 6).len(), 28);
        assert_eq!(Composition::all(6, 4).len(), 26);
        assert_eq!(Partition::all(6, 3).len(), 7);
        assert_eq!(Partition::all(0, 3).len(), 1);
    }

    #[test]
    fn conjugate_and_rearrangements() {
        let lam = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(lam.conjugate().parts(), &[2, 2, 1]);
        let r = Partition::new(vec![3, 1]).unwrap().rearrangements();
        assert_eq!(r.len(), 2);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }
}
