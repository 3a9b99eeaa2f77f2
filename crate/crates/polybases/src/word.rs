//! Words over the alphabet `{1, ..., n}`: Knuth equivalence, column-word
//! factorizations, flips and flip-reverses.

use crate::composition::{Composition, WeakComposition};
use crate::tableau::schensted_insert;
use crate::{Error, Result};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        debug_assert!(letters.iter().all(|&x| x >= 1));
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(vec![])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `comp(w)`: the weak composition of length `n` counting occurrences.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let mut parts = vec![0u32; n];
        for &x in &self.0 {
            parts[(x - 1) as usize] += 1;
        }
        WeakComposition::new(parts)
    }

    pub fn rev(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// `f(w)`: replaces each letter `x` with `n + 1 - x`.
    pub fn flip(&self, n: usize) -> Result<Word> {
        if self.max_letter() as usize > n {
            return Err(Error::ShapeMismatch(format!(
                "letter {} exceeds alphabet bound {n}",
                self.max_letter()
            )));
        }
        Ok(Word(self.0.iter().map(|&x| n as u32 + 1 - x).collect()))
    }

    /// `frev(w) = f(rev(w)) = rev(f(w))`.
    pub fn frev(&self, n: usize) -> Result<Word> {
        self.rev().flip(n)
    }

    /// Words reachable by one elementary Knuth move:
    /// `xzy ~ zxy` for `x <= y < z` and `yxz ~ yzx` for `x < y <= z`.
    pub fn knuth_neighbors(&self) -> Vec<Word> {
        let w = &self.0;
        let mut out = Vec::new();
        for p in 0..w.len().saturating_sub(2) {
            let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
            // swap the first two letters: xzy <-> zxy needs min,max around c
            if (a <= c && c < b) || (b <= c && c < a) {
                let mut v = w.clone();
                v.swap(p, p + 1);
                out.push(Word(v));
            }
            // swap the last two letters: yxz <-> yzx
            if (b < a && a <= c) || (c < a && a <= b) {
                let mut v = w.clone();
                v.swap(p + 1, p + 2);
                out.push(Word(v));
            }
        }
        out
    }

    /// Breadth-first closure of `{self}` under Knuth moves.
    pub fn knuth_class(&self) -> BTreeSet<Word> {
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.clone());
        queue.push_back(self.clone());
        while let Some(w) = queue.pop_front() {
            for v in w.knuth_neighbors() {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    pub fn knuth_equivalent(&self, other: &Word) -> bool {
        schensted_insert(self) == schensted_insert(other)
    }

    /// Maximal strictly decreasing runs, cutting at every weak ascent.
    pub fn column_runs(&self) -> Vec<Vec<u32>> {
        let mut runs = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        for &x in &self.0 {
            if let Some(&last) = cur.last() {
                if last <= x {
                    runs.push(std::mem::take(&mut cur));
                }
            }
            cur.push(x);
        }
        if !cur.is_empty() {
            runs.push(cur);
        }
        runs
    }

    /// `colform(v)`: lengths of the strictly decreasing runs.
    pub fn colform(&self) -> Composition {
        Composition::new(self.column_runs().iter().map(|r| r.len() as u32).collect())
            .expect("run lengths are positive")
    }

    /// Maximal weakly increasing runs, scanning left to right.
    pub fn row_runs(&self) -> Vec<Vec<u32>> {
        let mut runs = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        for &x in &self.0 {
            if let Some(&last) = cur.last() {
                if last > x {
                    runs.push(std::mem::take(&mut cur));
                }
            }
            cur.push(x);
        }
        if !cur.is_empty() {
            runs.push(cur);
        }
        runs
    }

    /// Column-frank: `colform(v)` rearranges the nonzero parts of the
    /// conjugate of the shape of the insertion tableau of `v`.
    pub fn is_column_frank(&self) -> bool {
        let shape = schensted_insert(self).shape();
        let mut conj = shape.conjugate().parts().to_vec();
        conj.sort_unstable();
        let mut cf = self.colform().parts().to_vec();
        cf.sort_unstable();
        cf == conj
    }

    /// Digit-string form with `|` bars at the strictly decreasing run
    /// boundaries, for display only.
    pub fn barred(&self) -> String {
        self.column_runs()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn parse(s: &str) -> Result<Word> {
        let letters: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Invalid(format!("cannot parse word `{s}`: {e}")))?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Invalid(format!("cannot parse word `{s}`")))
                })
                .collect::<Result<_>>()?
        };
        if letters.contains(&0) {
            return Err(Error::Invalid(format!(
                "word letters must be positive: {s}"
            )));
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x <= 9) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn class_strings(w: &str) -> BTreeSet<String> {
        Word::parse(w)
            .unwrap()
            .knuth_class()
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    #[test]
    fn knuth_class_32322() {
        let expect: BTreeSet<String> = ["32322", "33222", "32232", "23232", "23322"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(class_strings("32322"), expect);
    }

    #[test]
    fn knuth_class_21322() {
        // the closure under the two moves; all five insert to the same
        // tableau, matching the count of standard Young tableaux of the
        // insertion shape (3,2)
        let got = class_strings("21322");
        for w in ["21322", "21232", "22132", "22312"] {
            assert!(got.contains(w), "missing {w}");
        }
        assert_eq!(got.len(), 5);
        assert!(got.contains("23122"));
        let t = schensted_insert(&Word::parse("21322").unwrap());
        for w in &got {
            assert_eq!(schensted_insert(&Word::parse(w).unwrap()), t);
        }
    }

    #[test]
    fn knuth_class_singleton() {
        assert_eq!(class_strings("3").len(), 1);
        assert_eq!(Word::empty().knuth_class().len(), 1);
    }

    #[test]
    fn class_size_matches_insertion_count() {
        // oracle: the class of w is exactly the set of words with the same
        // content and the same insertion tableau
        for w in ["21322", "21212", "32322", "1231"] {
            let w = Word::parse(w).unwrap();
            let t = schensted_insert(&w);
            let mut letters = w.letters().to_vec();
            letters.sort_unstable();
            let mut count = 0;
            loop {
                let cand = Word::new(letters.clone());
                if schensted_insert(&cand) == t {
                    count += 1;
                }
                if !crate::permutation::next_permutation(&mut letters) {
                    break;
                }
            }
            assert_eq!(w.knuth_class().len(), count, "word {w}");
        }
    }

    #[test]
    fn colform_and_frank() {
        assert_eq!(Word::parse("21232").unwrap().colform().parts(), &[2, 1, 2]);
        assert_eq!(Word::parse("21232").unwrap().barred(), "21|2|32");
        assert!(!Word::parse("22312").unwrap().is_column_frank());
        assert!(Word::parse("21322").unwrap().is_column_frank());
        // strictly decreasing word: single run, frank since the insertion
        // tableau is one column
        let w = Word::parse("4321").unwrap();
        assert_eq!(w.colform().parts(), &[4]);
        assert!(w.is_column_frank());
    }

    #[test]
    fn flips() {
        let w = Word::parse("2446154").unwrap();
        assert_eq!(w.flip(6).unwrap(), Word::parse("5331623").unwrap());
        assert_eq!(w.frev(6).unwrap(), Word::parse("3261335").unwrap());
        assert_eq!(w.frev(6).unwrap().frev(6).unwrap(), w);
        assert!(w.flip(5).is_err());
        // weight of frev is the reverse of the weight
        assert_eq!(w.frev(6).unwrap().weight(6), w.weight(6).rev());
    }

    #[test]
    fn row_runs() {
        let runs = Word::parse("33222").unwrap().row_runs();
        assert_eq!(runs, vec![vec![3, 3], vec![2, 2, 2]]);
        let runs = Word::parse("22211").unwrap().row_runs();
        assert_eq!(runs, vec![vec![2, 2, 2], vec![1, 1]]);
    }
}
