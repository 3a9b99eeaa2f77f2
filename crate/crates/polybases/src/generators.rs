//! Word-model constructions: compatible sequences for key and Young key
//! polynomials, the maxcomp capping procedure and the resulting fundamental
//! slide expansions, flag-compatible sequences for fundamental particles,
//! row-frank word sets `W(a)` / `YW(a)`, and the right/left key filters on
//! semistandard Young tableaux.

use crate::composition::WeakComposition;
use crate::polynomial::Polynomial;
use crate::tableau::{column_insert, Tableau};
use crate::word::Word;
use crate::Result;
use std::collections::BTreeMap;

/// All words `w` compatible with the base word `b`: weakly increasing,
/// strictly increasing across strict ascents of `b`, and `w_k <= b_k`.
pub fn compatible_sequences(b: &Word, n: usize) -> Vec<Word> {
    let letters = b.letters();
    if letters.is_empty() {
        return vec![Word::empty()];
    }
    let mut out = Vec::new();
    let mut buf: Vec<u32> = Vec::with_capacity(letters.len());
    fn rec(letters: &[u32], n: u32, buf: &mut Vec<u32>, out: &mut Vec<Word>) {
        let k = buf.len();
        if k == letters.len() {
            out.push(Word::new(buf.clone()));
            return;
        }
        let mut lo = 1;
        if k > 0 {
            lo = buf[k - 1] + if letters[k - 1] < letters[k] { 1 } else { 0 };
        }
        let hi = letters[k].min(n);
        for v in lo..=hi {
            buf.push(v);
            rec(letters, n, buf, out);
            buf.pop();
        }
    }
    rec(letters, n as u32, &mut buf, &mut out);
    out
}

/// `key_a` as the weight generating function of all compatible sequences
/// for the reversals of the Knuth class of `col(key(a))`.
pub fn key_via_compatible(a: &WeakComposition) -> Polynomial {
    let n = a.len();
    let class = Tableau::key_tableau(a).col_word().knuth_class();
    let mut p = Polynomial::zero(n);
    for v in &class {
        let b = v.rev();
        for w in compatible_sequences(&b, n) {
            p.add_term(w.weight(n).parts(), 1.into());
        }
    }
    p
}

/// `ykey_a` as the flipped weight generating function of the compatible
/// sequences for the flips of the Knuth class of `col(key(a))`.
pub fn ykey_via_compatible(a: &WeakComposition) -> Result<Polynomial> {
    let n = a.len();
    let class = Tableau::key_tableau(a).col_word().knuth_class();
    let mut p = Polynomial::zero(n);
    for y in &class {
        let c = y.flip(n)?;
        for w in compatible_sequences(&c, n) {
            p.add_term(w.flip(n)?.weight(n).parts(), 1.into());
        }
    }
    Ok(p)
}

/// The entrywise-largest `b`-compatible sequence, if any: partition `b`
/// into maximal weakly decreasing runs, then cap right-to-left, replacing
/// run `r_i` by `c_i = min(last(r_i), c_{i+1} - 1)`.
pub fn max_compatible_sequence(b: &Word) -> Option<Word> {
    if b.is_empty() {
        return Some(Word::empty());
    }
    let mut runs: Vec<Vec<u32>> = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    for &x in b.letters() {
        if let Some(&last) = cur.last() {
            if last < x {
                runs.push(std::mem::take(&mut cur));
            }
        }
        cur.push(x);
    }
    runs.push(cur);
    let mut caps = vec![0u32; runs.len()];
    let mut next_cap: Option<u32> = None;
    for (i, run) in runs.iter().enumerate().rev() {
        let smallest = *run.last().unwrap();
        let cap = match next_cap {
            None => smallest,
            Some(c) => {
                if c <= 1 {
                    return None;
                }
                smallest.min(c - 1)
            }
        };
        if cap == 0 {
            return None;
        }
        caps[i] = cap;
        next_cap = Some(cap);
    }
    let letters: Vec<u32> = runs
        .iter()
        .zip(&caps)
        .flat_map(|(run, &c)| std::iter::repeat_n(c, run.len()))
        .collect();
    Some(Word::new(letters))
}

/// `maxcomp(b)` as a weak composition of length `n`.
pub fn maxcomp(b: &Word, n: usize) -> Option<WeakComposition> {
    max_compatible_sequence(b).map(|w| w.weight(n))
}

/// The fundamental slide expansion of `key_a`: one `fs_{maxcomp(b)}` term
/// for every `b` with `rev(b)` in the Knuth class of `col(key(a))`, words
/// with no compatible sequence contributing nothing.
pub fn key_to_fundamental_slides(a: &WeakComposition) -> BTreeMap<WeakComposition, u32> {
    let n = a.len();
    let class = Tableau::key_tableau(a).col_word().knuth_class();
    let mut out = BTreeMap::new();
    for v in &class {
        if let Some(mc) = maxcomp(&v.rev(), n) {
            *out.entry(mc).or_insert(0) += 1;
        }
    }
    out
}

/// The Young fundamental slide expansion of `ykey_a`: one
/// `yfs_{rev(maxcomp(b))}` for every `b` whose flip lies in the Knuth
/// class of `col(key(a))`.
pub fn ykey_to_young_slides(a: &WeakComposition) -> Result<BTreeMap<WeakComposition, u32>> {
    let n = a.len();
    let class = Tableau::key_tableau(a).col_word().knuth_class();
    let mut out = BTreeMap::new();
    for y in &class {
        let b = y.flip(n)?;
        if let Some(mc) = maxcomp(&b, n) {
            *out.entry(mc.rev()).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// The base word of `a`: `a_1` ones, then `a_2` twos, and so on.
fn flag_base_word(a: &WeakComposition) -> Word {
    let letters: Vec<u32> = (1..=a.len())
        .flat_map(|i| std::iter::repeat_n(i as u32, a.part(i) as usize))
        .collect();
    Word::new(letters)
}

/// The `a`-flag compatible sequences: compatible sequences for the base
/// word whose letter at each nonzero partial sum equals the row index of
/// the corresponding nonzero part.
pub fn flag_compatible_sequences(a: &WeakComposition) -> Vec<Word> {
    let b = flag_base_word(a);
    let mut anchors: Vec<(usize, u32)> = Vec::new(); // (position, required letter)
    let mut sum = 0usize;
    for i in 1..=a.len() {
        if a.part(i) > 0 {
            sum += a.part(i) as usize;
            anchors.push((sum, i as u32));
        }
    }
    compatible_sequences(&b, a.len())
        .into_iter()
        .filter(|w| anchors.iter().all(|&(p, r)| w.letters()[p - 1] == r))
        .collect()
}

/// The fundamental particle as the weight generating function of the
/// `a`-flag compatible sequences.
pub fn particle_via_flag(a: &WeakComposition) -> Polynomial {
    let n = a.len();
    Polynomial::from_weights(n, flag_compatible_sequences(a).iter().map(|w| w.weight(n)))
}

/// Splits a word right-to-left into blocks of sizes `a_1, a_2, ...`; the
/// result is `None` unless the blocks are exactly the maximal weakly
/// increasing runs of the word, empty row-words allowed.
fn row_blocks(u: &Word, a: &WeakComposition) -> Option<Vec<Vec<u32>>> {
    let letters = u.letters();
    if letters.len() as u32 != a.size() {
        return None;
    }
    let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(a.len());
    let mut end = letters.len();
    for i in 1..=a.len() {
        let len = a.part(i) as usize;
        if len > end {
            return None;
        }
        blocks.push(letters[end - len..end].to_vec());
        end -= len;
    }
    if end != 0 {
        return None;
    }
    // each block weakly increasing, strict descent between nonempty blocks
    for block in &blocks {
        if block.windows(2).any(|w| w[0] > w[1]) {
            return None;
        }
    }
    let nonempty: Vec<&Vec<u32>> = blocks.iter().filter(|b| !b.is_empty()).collect();
    for k in 0..nonempty.len().saturating_sub(1) {
        // nonempty[k] is u^{(i)}, nonempty[k+1] the next block to its left
        let right_first = nonempty[k][0];
        let left_last = *nonempty[k + 1].last().unwrap();
        if left_last <= right_first {
            return None;
        }
    }
    Some(blocks)
}

/// `W(a)`: words whose row-word factorization has block `i` of size `a_i`
/// with letters at most `i`, column-inserting to recording tableau
/// `std(key(a))`.
pub fn row_frank_words(a: &WeakComposition) -> Vec<Word> {
    let std_key = Tableau::key_tableau(a).standardize();
    enumerate_block_words(a, |i, _| (1, i as u32))
        .into_iter()
        .filter(|u| column_insert(u).1 == std_key)
        .collect()
}

/// `YW(a)`: blocks sized by `a`, letters of block `i` in `i..=len(a)`, and
/// `frev(u)` column-inserting to recording tableau `std(key(rev(a)))`.
pub fn young_row_frank_words(a: &WeakComposition) -> Result<Vec<Word>> {
    let n = a.len();
    let std_key = Tableau::key_tableau(&a.rev()).standardize();
    let mut out = Vec::new();
    for u in enumerate_block_words(a, |i, n| (i as u32, n as u32)) {
        if column_insert(&u.frev(n)?).1 == std_key {
            out.push(u);
        }
    }
    Ok(out)
}

/// All words assembled from weakly increasing blocks `u^{(len)} ... u^{(1)}`
/// with the row-word factorization structure of `a`; `bounds(i, n)` gives
/// the letter range for block `i`.
fn enumerate_block_words<F>(a: &WeakComposition, bounds: F) -> Vec<Word>
where
    F: Fn(usize, usize) -> (u32, u32),
{
    let n = a.len();
    let mut per_block: Vec<Vec<Vec<u32>>> = Vec::with_capacity(n);
    for i in 1..=n {
        let (lo, hi) = bounds(i, n);
        per_block.push(weakly_increasing_words(a.part(i), lo, hi));
    }
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<u32>> = Vec::with_capacity(n);
    fn rec(
        per_block: &[Vec<Vec<u32>>],
        chosen: &mut Vec<Vec<u32>>,
        a: &WeakComposition,
        out: &mut Vec<Word>,
    ) {
        if chosen.len() == per_block.len() {
            let mut letters: Vec<u32> = Vec::new();
            for block in chosen.iter().rev() {
                letters.extend(block);
            }
            let u = Word::new(letters);
            if row_blocks(&u, a).is_some() {
                out.push(u);
            }
            return;
        }
        for block in &per_block[chosen.len()] {
            chosen.push(block.clone());
            rec(per_block, chosen, a, out);
            chosen.pop();
        }
    }
    rec(&per_block, &mut chosen, a, &mut out);
    out.sort();
    out.dedup();
    out
}

fn weakly_increasing_words(len: u32, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    if lo > hi {
        return vec![];
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
    out
}

/// `key_a = sum of x_u over u in W(a)`.
pub fn key_via_row_frank(a: &WeakComposition) -> Polynomial {
    let n = a.len();
    Polynomial::from_weights(n, row_frank_words(a).iter().map(|u| u.weight(n)))
}

/// `ykey_a = sum of x_w over w in YW(a)`.
pub fn ykey_via_row_frank(a: &WeakComposition) -> Result<Polynomial> {
    let n = a.len();
    Ok(Polynomial::from_weights(
        n,
        young_row_frank_words(a)?.iter().map(|u| u.weight(n)),
    ))
}

/// Displays a row-frank word with `|` bars between the blocks prescribed
/// by `a`, including empty row-words.
pub fn barred_by_shape(u: &Word, a: &WeakComposition) -> Option<String> {
    let blocks = row_blocks(u, a)?;
    let mut s = String::new();
    for block in blocks.iter().rev() {
        s.push('|');
        for &x in block {
            s.push_str(&x.to_string());
        }
    }
    Some(s.split_off(1))
}

fn entrywise_leq(s: &Tableau, t: &Tableau) -> bool {
    s.rows()
        .iter()
        .zip(t.rows())
        .all(|(rs, rt)| rs.iter().zip(rt).all(|(a, b)| a <= b))
}

fn key_filter_sum<F>(a: &WeakComposition, accept: F) -> Result<Polynomial>
where
    F: Fn(&Tableau, &Tableau) -> Result<bool>,
{
    let n = a.len();
    let key = Tableau::key_tableau(a);
    let mut p = Polynomial::zero(n);
    for t in Tableau::all_ssyt(&a.sort(), n) {
        if accept(&t, &key)? {
            p.add_term(t.weight(n).parts(), 1.into());
        }
    }
    Ok(p)
}

/// `key_a`: tableaux in `SSYT_n(sort(a))` with `K_+(T) <= key(a)`.
pub fn key_via_right_keys(a: &WeakComposition) -> Result<Polynomial> {
    key_filter_sum(a, |t, key| Ok(entrywise_leq(&t.right_key()?, key)))
}

/// `atom_a`: tableaux with `K_+(T) = key(a)`.
pub fn atom_via_right_keys(a: &WeakComposition) -> Result<Polynomial> {
    key_filter_sum(a, |t, key| Ok(&t.right_key()? == key))
}

/// `ykey_a`: tableaux with `K_-(T) >= key(a)`.
pub fn ykey_via_left_keys(a: &WeakComposition) -> Result<Polynomial> {
    key_filter_sum(a, |t, key| Ok(entrywise_leq(key, &t.left_key()?)))
}

/// `yatom_a`: tableaux with `K_-(T) = key(a)`.
pub fn yatom_via_left_keys(a: &WeakComposition) -> Result<Polynomial> {
    key_filter_sum(a, |t, key| Ok(&t.left_key()? == key))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filling::{gen_poly_weak, FamilyId};
    use std::collections::BTreeSet;

    fn wc(parts: &[u32]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    fn words(list: &[&str]) -> BTreeSet<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn seq_strings(b: &str, n: usize) -> BTreeSet<String> {
        compatible_sequences(&Word::parse(b).unwrap(), n)
            .iter()
            .map(|w| w.to_string())
            .collect()
    }

    #[test]
    fn compatible_sequence_table() {
        assert_eq!(
            seq_strings("22233", 3),
            words(&["22233", "12233", "11233", "11133", "11123", "11122"])
        );
        assert_eq!(seq_strings("22323", 3), words(&["11223"]));
        assert_eq!(seq_strings("23223", 3), words(&["12223"]));
        assert_eq!(seq_strings("23232", 3), words(&[]));
        assert_eq!(seq_strings("22332", 3), words(&["11222"]));
    }

    #[test]
    fn key_and_ykey_via_compatible() {
        let a = wc(&[0, 3, 2]);
        assert_eq!(
            key_via_compatible(&a),
            gen_poly_weak(FamilyId::Kssf, &a).unwrap()
        );
        let b = wc(&[2, 3, 0]);
        assert_eq!(
            ykey_via_compatible(&b).unwrap(),
            gen_poly_weak(FamilyId::Ykssf, &b).unwrap()
        );
        let c = wc(&[0, 2, 0]);
        assert_eq!(
            key_via_compatible(&c),
            gen_poly_weak(FamilyId::Kssf, &c).unwrap()
        );
    }

    #[test]
    fn maxcomp_goldens() {
        let m = max_compatible_sequence(&Word::parse("435254").unwrap()).unwrap();
        assert_eq!(m, Word::parse("112244").unwrap());
        assert_eq!(
            maxcomp(&Word::parse("23223").unwrap(), 3).unwrap(),
            wc(&[1, 3, 1])
        );
        assert_eq!(
            max_compatible_sequence(&Word::parse("23232").unwrap()),
            None
        );
    }

    #[test]
    fn maxcomp_dominates_all_compatible() {
        // every compatible sequence is entrywise at most the capped one
        for letters in [
            "22233", "23223", "22332", "321", "1212", "3312", "2231", "111",
        ] {
            let b = Word::parse(letters).unwrap();
            let n = 4;
            let seqs = compatible_sequences(&b, n);
            match max_compatible_sequence(&b) {
                None => assert!(seqs.is_empty(), "b = {letters}"),
                Some(m) => {
                    assert!(seqs.contains(&m), "b = {letters}");
                    for w in &seqs {
                        assert!(
                            w.letters().iter().zip(m.letters()).all(|(x, y)| x <= y),
                            "b = {letters}, w = {w}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn key_to_slides_golden() {
        let exp = key_to_fundamental_slides(&wc(&[0, 3, 2]));
        let expect: BTreeMap<WeakComposition, u32> = [
            (wc(&[2, 2, 1]), 1),
            (wc(&[0, 3, 2]), 1),
            (wc(&[1, 3, 1]), 1),
            (wc(&[2, 3, 0]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(exp, expect);
        // reconstruction: sum of fs over the expansion equals the key
        let mut sum = Polynomial::zero(3);
        for (b, c) in &exp {
            let fs = gen_poly_weak(FamilyId::Ff, b).unwrap();
            sum = sum.add(&fs.mul_scalar(&(*c).into()));
        }
        assert_eq!(sum, gen_poly_weak(FamilyId::Kssf, &wc(&[0, 3, 2])).unwrap());
    }

    #[test]
    fn ykey_to_young_slides_reconstructs() {
        for a in [wc(&[2, 3, 0]), wc(&[1, 0, 2]), wc(&[0, 2, 1])] {
            let exp = ykey_to_young_slides(&a).unwrap();
            let mut sum = Polynomial::zero(3);
            for (b, c) in &exp {
                let yfs = gen_poly_weak(FamilyId::Yff, b).unwrap();
                sum = sum.add(&yfs.mul_scalar(&(*c).into()));
            }
            assert_eq!(sum, gen_poly_weak(FamilyId::Ykssf, &a).unwrap(), "a = {a}");
        }
    }

    #[test]
    fn flag_compatible_golden() {
        let p = particle_via_flag(&wc(&[1, 0, 3]));
        assert_eq!(p, gen_poly_weak(FamilyId::Lf, &wc(&[1, 0, 3])).unwrap());
        // forced minimal filling when a is weakly increasing without a zero
        // before a part of size at least two
        let a = wc(&[1, 2, 3]);
        let p = particle_via_flag(&a);
        assert_eq!(p, Polynomial::from_weight(&a));
    }

    #[test]
    fn row_frank_w032() {
        let w: BTreeSet<String> = row_frank_words(&wc(&[0, 3, 2]))
            .iter()
            .map(|u| u.to_string())
            .collect();
        assert_eq!(
            w,
            words(&[
                "33222", "33122", "33112", "33111", "23111", "23112", "23122", "22111", "22112"
            ])
        );
        // barred display includes the empty first row-word
        let bar = barred_by_shape(&Word::parse("33222").unwrap(), &wc(&[0, 3, 2])).unwrap();
        assert_eq!(bar, "33|222|");
    }

    #[test]
    fn row_frank_yw230() {
        let yw: BTreeSet<String> = young_row_frank_words(&wc(&[2, 3, 0]))
            .unwrap()
            .iter()
            .map(|u| u.to_string())
            .collect();
        assert_eq!(
            yw,
            words(&[
                "22211", "22311", "23311", "33311", "33312", "23312", "22312", "33322", "23322"
            ])
        );
        let bar = barred_by_shape(&Word::parse("22211").unwrap(), &wc(&[2, 3, 0])).unwrap();
        assert_eq!(bar, "|222|11");
    }

    #[test]
    fn yw_is_frev_of_w() {
        for a in [wc(&[2, 3, 0]), wc(&[1, 0, 2]), wc(&[2, 1, 1])] {
            let n = a.len();
            let w_rev: BTreeSet<Word> = row_frank_words(&a.rev())
                .iter()
                .map(|u| u.frev(n).unwrap())
                .collect();
            let yw: BTreeSet<Word> = young_row_frank_words(&a).unwrap().into_iter().collect();
            assert_eq!(w_rev, yw, "a = {a}");
        }
    }

    #[test]
    fn row_frank_polynomials() {
        let a = wc(&[0, 3, 2]);
        assert_eq!(
            key_via_row_frank(&a),
            gen_poly_weak(FamilyId::Kssf, &a).unwrap()
        );
        let b = wc(&[2, 3, 0]);
        assert_eq!(
            ykey_via_row_frank(&b).unwrap(),
            gen_poly_weak(FamilyId::Ykssf, &b).unwrap()
        );
    }

    #[test]
    fn key_filters() {
        let a = wc(&[0, 3, 2]);
        assert_eq!(
            key_via_right_keys(&a).unwrap(),
            gen_poly_weak(FamilyId::Kssf, &a).unwrap()
        );
        let b = wc(&[1, 0, 3]);
        assert_eq!(
            atom_via_right_keys(&b).unwrap(),
            gen_poly_weak(FamilyId::Assf, &b).unwrap()
        );
        let c = wc(&[2, 0, 1]);
        assert_eq!(
            ykey_via_left_keys(&c).unwrap(),
            gen_poly_weak(FamilyId::Ykssf, &c).unwrap()
        );
        for a in [wc(&[1, 2, 0]), wc(&[0, 2, 1]), wc(&[2, 1, 1])] {
            assert_eq!(
                yatom_via_left_keys(&a).unwrap(),
                gen_poly_weak(FamilyId::Yassf, &a).unwrap(),
                "a = {a}"
            );
        }
    }

    #[test]
    fn nine_tableaux_with_bounded_right_key() {
        // the filter keeps exactly nine tableaux for a = 032
        let a = wc(&[0, 3, 2]);
        let key = Tableau::key_tableau(&a);
        let kept: Vec<Tableau> = Tableau::all_ssyt(&a.sort(), 3)
            .into_iter()
            .filter(|t| entrywise_leq(&t.right_key().unwrap(), &key))
            .collect();
        assert_eq!(kept.len(), 9);
    }
}
