//! One enumeration engine for all diagram-filling families. Diagrams are in
//! French notation (row 1 at the bottom); a filling assigns entries from
//! `{1, ..., n}` to the boxes. Key and Young key fillings carry an extra
//! basement column 0 whose entry in row `i` is `n + 1 - i`; basement boxes
//! join the row and triple conditions but never contribute to the weight.

use crate::composition::{Composition, WeakComposition};
use crate::polynomial::Polynomial;
use crate::{Error, Result};
use std::fmt;

/// The filling/tableau families, named by the polynomials they generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// Semistandard reverse composition tableaux: quasisymmetric Schur.
    Rct,
    /// Semistandard Young composition tableaux: Young quasisymmetric Schur.
    Yct,
    /// Fundamental reverse composition tableaux: fundamental quasisymmetric.
    Fct,
    /// Monomial reverse composition tableaux: monomial quasisymmetric.
    Mct,
    /// Fundamental Young composition tableaux (same generating function).
    Yfct,
    /// Monomial Young composition tableaux (same generating function).
    Ymct,
    /// Key fillings (semi-skyline with basement): key polynomials.
    Kssf,
    /// Young key fillings: Young key polynomials.
    Ykssf,
    /// Atom fillings: Demazure atoms.
    Assf,
    /// Young atom fillings: Young atoms.
    Yassf,
    /// Quasi-key fillings.
    Qf,
    /// Young quasi-key fillings.
    Yqf,
    /// Fundamental fillings: fundamental slide polynomials.
    Ff,
    /// Young fundamental fillings: Young fundamental slides.
    Yff,
    /// Monomial fillings: monomial slide polynomials.
    Mf,
    /// Young monomial fillings: Young monomial slides.
    Ymf,
    /// Particle fillings: fundamental particles.
    Lf,
    /// Young particle fillings: Young fundamental particles.
    Ylf,
}

pub const ALL_FAMILIES: [FamilyId; 18] = [
    FamilyId::Rct,
    FamilyId::Yct,
    FamilyId::Fct,
    FamilyId::Mct,
    FamilyId::Yfct,
    FamilyId::Ymct,
    FamilyId::Kssf,
    FamilyId::Ykssf,
    FamilyId::Assf,
    FamilyId::Yassf,
    FamilyId::Qf,
    FamilyId::Yqf,
    FamilyId::Ff,
    FamilyId::Yff,
    FamilyId::Mf,
    FamilyId::Ymf,
    FamilyId::Lf,
    FamilyId::Ylf,
];

impl FamilyId {
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Rct => "RCT",
            FamilyId::Yct => "YCT",
            FamilyId::Fct => "FCT",
            FamilyId::Mct => "MCT",
            FamilyId::Yfct => "YFCT",
            FamilyId::Ymct => "YMCT",
            FamilyId::Kssf => "KSSF",
            FamilyId::Ykssf => "YKSSF",
            FamilyId::Assf => "ASSF",
            FamilyId::Yassf => "YASSF",
            FamilyId::Qf => "QF",
            FamilyId::Yqf => "YQF",
            FamilyId::Ff => "FF",
            FamilyId::Yff => "YFF",
            FamilyId::Mf => "MF",
            FamilyId::Ymf => "YMF",
            FamilyId::Lf => "LF",
            FamilyId::Ylf => "YLF",
        }
    }

    pub fn parse(s: &str) -> Result<FamilyId> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }

    /// Families indexed by compositions rather than weak compositions.
    pub fn composition_shaped(self) -> bool {
        matches!(
            self,
            FamilyId::Rct
                | FamilyId::Yct
                | FamilyId::Fct
                | FamilyId::Mct
                | FamilyId::Yfct
                | FamilyId::Ymct
        )
    }

    fn rules(self) -> Rules {
        use FamilyId::*;
        let mut r = Rules::default();
        match self {
            Rct => {
                r.decreasing_rows = true;
                r.triples = Some(Chirality::Reverse);
                r.first_column_strict = true;
            }
            Yct => {
                r.triples = Some(Chirality::Young);
                r.first_column_strict = true;
            }
            Fct => {
                r.decreasing_rows = true;
                r.row_dominance = true;
            }
            Mct => {
                r.decreasing_rows = true;
                r.row_dominance = true;
                r.row_constant = true;
            }
            Yfct => {
                r.row_dominance = true;
            }
            Ymct => {
                r.row_dominance = true;
                r.row_constant = true;
            }
            Kssf => {
                r.decreasing_rows = true;
                r.triples = Some(Chirality::Reverse);
                r.column_distinct = true;
                r.basement = true;
                r.reversed_diagram = true;
            }
            Ykssf => {
                r.triples = Some(Chirality::Young);
                r.column_distinct = true;
                r.basement = true;
                r.reversed_diagram = true;
            }
            Assf => {
                r.decreasing_rows = true;
                r.triples = Some(Chirality::Reverse);
                r.column_distinct = true;
                r.first_entry_is_row = true;
            }
            Yassf => {
                r.triples = Some(Chirality::Young);
                r.column_distinct = true;
                r.first_entry_is_row = true;
            }
            Qf => {
                r.decreasing_rows = true;
                r.triples = Some(Chirality::Reverse);
                r.column_distinct = true;
                r.first_column_strict = true;
                r.flag = Some(Flag::AtMostRow);
            }
            Yqf => {
                r.triples = Some(Chirality::Young);
                r.column_distinct = true;
                r.first_column_strict = true;
                r.flag = Some(Flag::AtLeastRow);
            }
            Ff => {
                r.decreasing_rows = true;
                r.flag = Some(Flag::AtMostRow);
                r.row_dominance = true;
            }
            Yff => {
                r.flag = Some(Flag::AtLeastRow);
                r.row_dominance = true;
            }
            Mf => {
                r.decreasing_rows = true;
                r.flag = Some(Flag::AtMostRow);
                r.row_dominance = true;
                r.row_constant = true;
            }
            Ymf => {
                r.flag = Some(Flag::AtLeastRow);
                r.row_dominance = true;
                r.row_constant = true;
            }
            Lf => {
                r.decreasing_rows = true;
                r.triples = Some(Chirality::Reverse);
                r.column_distinct = true;
                r.first_entry_is_row = true;
                r.row_dominance = true;
            }
            Ylf => {
                r.triples = Some(Chirality::Young);
                r.column_distinct = true;
                r.first_entry_is_row = true;
                r.row_dominance = true;
            }
        }
        r
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Chirality {
    Reverse, // type A and B triples, inversion means not z >= y >= x
    Young,   // type I and II triples, inversion means not x >= y >= z
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flag {
    AtMostRow,
    AtLeastRow,
}

#[derive(Default)]
struct Rules {
    decreasing_rows: bool,
    triples: Option<Chirality>,
    column_distinct: bool,
    first_column_strict: bool,
    flag: Option<Flag>,
    first_entry_is_row: bool,
    row_dominance: bool,
    row_constant: bool,
    basement: bool,
    reversed_diagram: bool,
}

/// Shape argument for `enumerate_family`: weak-composition families take a
/// weak composition of length `n`, quasisymmetric families a composition
/// with at most `n` parts.
#[derive(Clone, Debug)]
pub enum Shape {
    Weak(WeakComposition),
    Comp(Composition),
}

/// A filling of a diagram: `rows[i]` holds the entries of row `i + 1`
/// (bottom-to-top), excluding the basement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    rows: Vec<Vec<u32>>,
    basement: Option<Vec<u32>>,
}

impl Filling {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        Filling {
            rows,
            basement: None,
        }
    }

    pub fn with_basement(rows: Vec<Vec<u32>>, basement: Vec<u32>) -> Self {
        assert_eq!(rows.len(), basement.len());
        Filling {
            rows,
            basement: Some(basement),
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn has_basement(&self) -> bool {
        self.basement.is_some()
    }

    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    /// Entry at 1-based `row` and `col`; `col = 0` reads the basement.
    pub fn entry(&self, row: usize, col: usize) -> u32 {
        if col == 0 {
            self.basement.as_ref().expect("no basement")[row - 1]
        } else {
            self.rows[row - 1][col - 1]
        }
    }

    fn row_len(&self, row: usize) -> u32 {
        self.rows[row - 1].len() as u32
    }

    /// Weight: occurrence counts of `1..=n` over non-basement boxes.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let mut parts = vec![0u32; n];
        for row in &self.rows {
            for &x in row {
                parts[(x - 1) as usize] += 1;
            }
        }
        WeakComposition::new(parts)
    }

    /// Bottom-to-top, left-to-right reading word; the canonical sort key
    /// for deterministic enumeration order.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape(),
            "basement": self.basement.is_some(),
            "rows": self.rows,
        })
    }
}

impl fmt::Display for Filling {
    /// Rows printed top to bottom; basement entries separated by `|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        for (k, i) in (1..=self.rows.len()).rev().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            if let Some(b) = &self.basement {
                write!(f, "{}|", b[i - 1])?;
            }
            let cells: Vec<String> = self.rows[i - 1].iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The flip-and-reverse involution: moves row `i` to row `n + 1 - i` and
/// replaces every entry `j` with `n + 1 - j`. Basement entries, when
/// present, transform the same way.
pub fn theta(f: &Filling, n: usize) -> Result<Filling> {
    if f.num_rows() != n {
        return Err(Error::LengthMismatch(f.num_rows(), n));
    }
    let flip = |x: u32| n as u32 + 1 - x;
    let rows: Vec<Vec<u32>> = f
        .rows
        .iter()
        .rev()
        .map(|row| row.iter().map(|&x| flip(x)).collect())
        .collect();
    let basement = f
        .basement
        .as_ref()
        .map(|b| b.iter().rev().map(|&x| flip(x)).collect());
    Ok(Filling { rows, basement })
}

/// Inversion-triple test. `A` and `B` follow the reverse convention (an
/// inversion unless `z >= y >= x`); `I` and `II` follow the Young
/// convention (an inversion unless `x >= y >= z`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleKind {
    A,
    B,
    I,
    II,
}

pub fn triple_ok(kind: TripleKind, x: u32, y: u32, z: u32) -> bool {
    match kind {
        TripleKind::A | TripleKind::B => !(z >= y && y >= x),
        TripleKind::I | TripleKind::II => !(x >= y && y >= z),
    }
}

/// Checks every family condition on a complete filling. The basement, when
/// present, is column 0 of each row.
fn satisfies(rules: &Rules, f: &Filling, n: usize) -> bool {
    let rows = f.num_rows();
    let first_col = if rules.basement { 0 } else { 1 };

    for i in 1..=rows {
        let len = f.row_len(i);
        let row_letters: Vec<u32> = (1..=len as usize).map(|c| f.entry(i, c)).collect();
        if row_letters.iter().any(|&x| x < 1 || x as usize > n) {
            return false;
        }
        // row monotonicity, including the basement when present
        let mut prev = if rules.basement {
            Some(f.entry(i, 0))
        } else {
            None
        };
        for &x in &row_letters {
            if let Some(p) = prev {
                let ok = if rules.decreasing_rows {
                    p >= x
                } else {
                    p <= x
                };
                if !ok {
                    return false;
                }
            }
            prev = Some(x);
        }
        if rules.row_constant && row_letters.windows(2).any(|w| w[0] != w[1]) {
            return false;
        }
        if let Some(flag) = rules.flag {
            let ok = match flag {
                Flag::AtMostRow => row_letters.iter().all(|&x| x as usize <= i),
                Flag::AtLeastRow => row_letters.iter().all(|&x| x as usize >= i),
            };
            if !ok {
                return false;
            }
        }
        if rules.first_entry_is_row && len > 0 && f.entry(i, 1) as usize != i {
            return false;
        }
    }

    if rules.column_distinct {
        let width = (1..=rows).map(|i| f.row_len(i)).max().unwrap_or(0);
        for c in 1..=width as usize {
            let mut seen = std::collections::BTreeSet::new();
            for i in 1..=rows {
                if f.row_len(i) as usize >= c && !seen.insert(f.entry(i, c)) {
                    return false;
                }
            }
        }
    }

    if rules.first_column_strict {
        let mut prev: Option<u32> = None;
        for i in 1..=rows {
            if f.row_len(i) == 0 {
                continue;
            }
            let x = f.entry(i, 1);
            if let Some(p) = prev {
                if p >= x {
                    return false;
                }
            }
            prev = Some(x);
        }
    }

    if rules.row_dominance {
        // every entry of a lower row strictly smaller than every entry of
        // any higher row
        let mut max_below: Option<u32> = None;
        for i in 1..=rows {
            if f.row_len(i) == 0 {
                continue;
            }
            let lo = (1..=f.row_len(i) as usize)
                .map(|c| f.entry(i, c))
                .min()
                .unwrap();
            let hi = (1..=f.row_len(i) as usize)
                .map(|c| f.entry(i, c))
                .max()
                .unwrap();
            if let Some(m) = max_below {
                if lo <= m {
                    return false;
                }
            }
            max_below = Some(max_below.map_or(hi, |m| m.max(hi)));
        }
    }

    if let Some(chirality) = rules.triples {
        // row lengths compared without the basement; adding it to both rows
        // of a pair would not change the comparison
        for i in 1..=rows {
            for j in i + 1..=rows {
                let (li, lj) = (f.row_len(i) as usize, f.row_len(j) as usize);
                match chirality {
                    Chirality::Reverse => {
                        if li >= lj {
                            // type A: z = (i,c), x = (i,c+1), y = (j,c+1)
                            for c in first_col..lj {
                                let z = f.entry(i, c);
                                let x = f.entry(i, c + 1);
                                let y = f.entry(j, c + 1);
                                if !triple_ok(TripleKind::A, x, y, z) {
                                    return false;
                                }
                            }
                        } else {
                            // type B: y = (i,c), z = (j,c), x = (j,c+1)
                            for c in first_col..=li {
                                if c + 1 > lj {
                                    break;
                                }
                                let y = f.entry(i, c);
                                let z = f.entry(j, c);
                                let x = f.entry(j, c + 1);
                                if !triple_ok(TripleKind::B, x, y, z) {
                                    return false;
                                }
                            }
                        }
                    }
                    Chirality::Young => {
                        if lj >= li {
                            // type I: z = (j,c), x = (j,c+1), y = (i,c+1)
                            for c in first_col..li {
                                let z = f.entry(j, c);
                                let x = f.entry(j, c + 1);
                                let y = f.entry(i, c + 1);
                                if !triple_ok(TripleKind::I, x, y, z) {
                                    return false;
                                }
                            }
                        } else {
                            // type II: z = (i,c), x = (i,c+1), y = (j,c)
                            for c in first_col..=lj {
                                if c + 1 > li {
                                    break;
                                }
                                let z = f.entry(i, c);
                                let x = f.entry(i, c + 1);
                                let y = f.entry(j, c);
                                if !triple_ok(TripleKind::II, x, y, z) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    true
}

fn monotone_rows(len: u32, lo: u32, hi: u32, decreasing: bool, constant: bool) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    if lo > hi {
        return vec![];
    }
    if constant {
        return (lo..=hi).map(|v| vec![v; len as usize]).collect();
    }
    let mut out = Vec::new();
    let mut buf = vec![0u32; len as usize];
    fn rec(buf: &mut Vec<u32>, pos: usize, lo: u32, hi: u32, out: &mut Vec<Vec<u32>>) {
        if pos == buf.len() {
            out.push(buf.clone());
            return;
        }
        for v in lo..=hi {
            buf[pos] = v;
            rec(buf, pos + 1, v, hi, out);
        }
    }
    rec(&mut buf, 0, lo, hi, &mut out);
    if decreasing {
        for row in &mut out {
            row.reverse();
        }
        out.sort();
    }
    out
}

fn validate_shape(family: FamilyId, shape: &Shape, n: usize) -> Result<Vec<u32>> {
    match (family.composition_shaped(), shape) {
        (true, Shape::Comp(c)) => {
            if c.len() > n {
                return Err(Error::ShapeMismatch(format!(
                    "composition {c} has more than {n} parts"
                )));
            }
            Ok(c.parts().to_vec())
        }
        (false, Shape::Weak(a)) => {
            if a.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "weak composition {a} must have length {n}"
                )));
            }
            Ok(a.parts().to_vec())
        }
        (true, Shape::Weak(_)) => Err(Error::ShapeMismatch(format!(
            "{family} takes a composition shape"
        ))),
        (false, Shape::Comp(_)) => Err(Error::ShapeMismatch(format!(
            "{family} takes a weak composition shape"
        ))),
    }
}

/// Enumerates the family, sorted by bottom-to-top reading word.
pub fn enumerate_family(family: FamilyId, shape: &Shape, n: usize) -> Result<Vec<Filling>> {
    let rules = family.rules();
    let index_lengths = validate_shape(family, shape, n)?;
    // key and Young key fillings live on the reversed diagram
    let row_lengths: Vec<u32> = if rules.reversed_diagram {
        index_lengths.iter().rev().copied().collect()
    } else {
        index_lengths
    };
    let rows = row_lengths.len();
    let basement: Option<Vec<u32>> = rules
        .basement
        .then(|| (1..=rows).map(|i| (n + 1 - i) as u32).collect());

    // candidate rows: monotone sequences narrowed by per-row bounds; the
    // full predicate is re-checked on every complete filling
    let mut candidates: Vec<Vec<Vec<u32>>> = Vec::with_capacity(rows);
    for i in 1..=rows {
        let len = row_lengths[i - 1];
        let mut lo = 1u32;
        let mut hi = n as u32;
        match rules.flag {
            Some(Flag::AtMostRow) => hi = hi.min(i as u32),
            Some(Flag::AtLeastRow) => lo = lo.max(i as u32),
            None => {}
        }
        if let Some(b) = &basement {
            if rules.decreasing_rows {
                hi = hi.min(b[i - 1]);
            } else {
                lo = lo.max(b[i - 1]);
            }
        }
        let mut rows_i = monotone_rows(len, lo, hi, rules.decreasing_rows, rules.row_constant);
        if rules.first_entry_is_row {
            rows_i.retain(|r| r.is_empty() || r[0] as usize == i);
        }
        candidates.push(rows_i);
    }

    let mut out = Vec::new();
    let mut chosen: Vec<Vec<u32>> = Vec::with_capacity(rows);
    fn rec(
        candidates: &[Vec<Vec<u32>>],
        chosen: &mut Vec<Vec<u32>>,
        basement: &Option<Vec<u32>>,
        rules: &Rules,
        n: usize,
        out: &mut Vec<Filling>,
    ) {
        if chosen.len() == candidates.len() {
            let f = match basement {
                Some(b) => Filling::with_basement(chosen.clone(), b.clone()),
                None => Filling::new(chosen.clone()),
            };
            if satisfies(rules, &f, n) {
                out.push(f);
            }
            return;
        }
        for row in &candidates[chosen.len()] {
            chosen.push(row.clone());
            rec(candidates, chosen, basement, rules, n, out);
            chosen.pop();
        }
    }
    rec(&candidates, &mut chosen, &basement, &rules, n, &mut out);
    out.sort_by(|a, b| a.reading_word().cmp(&b.reading_word()).then(a.cmp(b)));
    Ok(out)
}

/// Weight generating polynomial of the family.
pub fn gen_poly(family: FamilyId, shape: &Shape, n: usize) -> Result<Polynomial> {
    let fillings = enumerate_family(family, shape, n)?;
    Ok(Polynomial::from_weights(
        n,
        fillings.iter().map(|f| f.weight(n)),
    ))
}

/// Convenience wrapper for weak-composition families.
pub fn gen_poly_weak(family: FamilyId, a: &WeakComposition) -> Result<Polynomial> {
    gen_poly(family, &Shape::Weak(a.clone()), a.len())
}
