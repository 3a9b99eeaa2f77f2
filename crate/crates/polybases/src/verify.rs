//! Named cross-validation suites. Every suite checks an exact identity over
//! an exhaustive index range and reports counterexamples; the CLI `verify`
//! subcommand and the acceptance tests both run through this registry.
//! Independent indices are fanned out through [`crate::exec::map_items`].

use crate::classify;
use crate::composition::{Composition, Partition, WeakComposition};
use crate::crystal::{
    crystal_e, crystal_f, demazure_from_highest, demazure_from_lowest, key_crystal,
    reduced_factorizations, rfyc, tableau_crystal, ykey_crystal, young_schubert_via_rfyc,
};
use crate::exec::{map_items, ExecMode};
use crate::expansion::{
    basis_polynomial, expand, key_to_atoms, schur_decompositions, schur_polynomial, wc_leq,
    BasisId, REVERSE_ARROWS, YOUNG_ARROWS,
};
use crate::filling::{enumerate_family, gen_poly, theta, FamilyId, Shape, ALL_FAMILIES};
use crate::flagged_module::{
    module_trace, vectors_rank, young_key_module_basis, FormalFillingVector,
};
use crate::generators::{
    atom_via_right_keys, compatible_sequences, key_to_fundamental_slides, key_via_compatible,
    key_via_right_keys, key_via_row_frank, max_compatible_sequence, particle_via_flag,
    row_frank_words, yatom_via_left_keys, ykey_to_young_slides, ykey_via_compatible,
    ykey_via_left_keys, ykey_via_row_frank, young_row_frank_words,
};
use crate::operators::{atom_ops, key_ops, partial, pi, pihat, yatom_ops, ykey_ops, OpKind};
use crate::permutation::Permutation;
use crate::pipedream::{pipe_dreams, schubert_pd, young_schubert_pd};
use crate::polynomial::Polynomial;
use crate::tableau::{schensted_insert, Tableau};
use crate::word::Word;
use crate::{Error, Result};

/// Range overrides for a verification run; `None` keeps each check's
/// default (the range the identity is contractually tested over).
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOpts {
    /// Restrict to one variable count.
    pub n: Option<usize>,
    /// Cap on the number of variables / index length.
    pub max_len: Option<usize>,
    /// Cap on the index size `|a|`.
    pub max_size: Option<u32>,
}

impl VerifyOpts {
    fn lengths(&self, default_max: usize) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (1..=self.max_len.unwrap_or(default_max)).collect(),
        }
    }

    fn size(&self, default: u32) -> u32 {
        self.max_size.unwrap_or(default)
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("PASS {} ({} cases)", self.name, self.cases)
        } else {
            format!(
                "FAIL {} ({} cases, {} failures)",
                self.name,
                self.cases,
                self.failures.len()
            )
        }
    }
}

type CheckFn = fn(&VerifyOpts, ExecMode) -> CheckReport;

/// The registry of named checks with one-line descriptions.
pub const CHECKS: &[(&str, &str)] = &[
    ("golden-values", "worked examples reproduced exactly"),
    (
        "lehmer-rev",
        "Young Lehmer code of the reversal is the reversed Lehmer code",
    ),
    (
        "frev-perm",
        "frev is the length-preserving involution w0 w w0",
    ),
    (
        "wc-order",
        "the membership order on weak compositions is a partial order",
    ),
    ("key-tableau", "key(a) is a key of weight a"),
    (
        "reverse-vars",
        "variable reversal is an involution exchanging chiral pairs",
    ),
    ("knuth-closure", "Knuth classes insert to a single tableau"),
    ("knuth-frev", "frev maps Knuth classes to Knuth classes"),
    (
        "col-colr-knuth",
        "col(key(a)) is Knuth equivalent to colR(key(a))",
    ),
    ("frev-col-key", "frev(col(key(a))) equals colR(key(rev(a)))"),
    (
        "rightkey-leftkey",
        "left key of the frev insertion equals the frev of the right key",
    ),
    (
        "duality",
        "each Young family is the variable-reversed reverse family at rev(a)",
    ),
    (
        "monomial-positivity",
        "every family generating function has positive coefficients",
    ),
    (
        "schur-refinement",
        "QS and YQS both refine Schur polynomials",
    ),
    (
        "containment-chains",
        "particle inside atom inside quasi-key; monomial inside fundamental",
    ),
    (
        "theta-involution",
        "theta is an involution matching chiral filling sets",
    ),
    ("reversediff", "I(pi_i f) = pihat_{n-i} I(f)"),
    (
        "ipartial",
        "I of a partial chain is the sign-twisted reversed chain of I",
    ),
    (
        "op-vs-fillings",
        "operator constructions equal filling generating functions",
    ),
    (
        "pi-word-independence",
        "operator words agree across reduced words",
    ),
    ("key-routes", "five key constructions agree"),
    ("ykey-routes", "five Young key constructions agree"),
    (
        "fs-expansion-consistency",
        "slide expansion of a key reconstructs the key",
    ),
    (
        "maxcomp-dominance",
        "maxcomp is the entrywise maximum compatible sequence",
    ),
    (
        "flag-compatible",
        "flag-compatible sequences generate fundamental particles",
    ),
    ("row-frank-frev", "YW(a) is the frev image of W(rev(a))"),
    (
        "crystal-b21",
        "the crystal B(21) at n = 3 matches edge for edge",
    ),
    (
        "crystal-axioms",
        "e and f are mutually inverse partial maps shifting weight by a simple root",
    ),
    (
        "demazure-full",
        "the full-length Demazure truncation recovers the whole crystal",
    ),
    (
        "demazure-characters",
        "Demazure characters equal key and Young key polynomials",
    ),
    (
        "rf-weights",
        "reduced factorization weights sum to the Coxeter length",
    ),
    (
        "rfyc-ysch",
        "Young Schubert polynomials from reduced factorizations with cutoff",
    ),
    (
        "schubert-s4",
        "pipe dreams, operators and chirality identities over S4",
    ),
    (
        "vexillary",
        "Schubert equals key at the Lehmer code exactly for vexillary permutations",
    ),
    (
        "delta-expansion",
        "expanding a basis element over its own basis is a delta",
    ),
    (
        "expansion-positivity",
        "every expansion arrow has nonnegative integer coefficients",
    ),
    (
        "key-equals-atom-sum",
        "key equals the sum of atoms over the membership order",
    ),
    (
        "yqs-qs",
        "coincidence classifier for quasisymmetric Schur pairs",
    ),
    (
        "key-ykey",
        "keys meet Young keys exactly in the Schur polynomials",
    ),
    ("atom-yatom", "atom/Young atom coincidence classifier"),
    ("qk-yqk", "quasi-key coincidence classifier"),
    ("fp-yfp", "particle coincidence classifier"),
    (
        "slide-intersections",
        "slides meet Young slides exactly in the quasisymmetric bases",
    ),
    (
        "module-suite",
        "Young key module: independent weight vectors with the right trace",
    ),
];

pub fn run_check(name: &str, opts: &VerifyOpts, mode: ExecMode) -> Result<CheckReport> {
    let f: CheckFn = match name {
        "golden-values" => golden_values,
        "lehmer-rev" => lehmer_rev,
        "frev-perm" => frev_perm,
        "wc-order" => wc_order,
        "key-tableau" => key_tableau_check,
        "reverse-vars" => reverse_vars,
        "knuth-closure" => knuth_closure,
        "knuth-frev" => knuth_frev,
        "col-colr-knuth" => col_colr_knuth,
        "frev-col-key" => frev_col_key,
        "rightkey-leftkey" => rightkey_leftkey,
        "duality" => duality,
        "monomial-positivity" => monomial_positivity,
        "schur-refinement" => schur_refinement,
        "containment-chains" => containment_chains,
        "theta-involution" => theta_involution,
        "reversediff" => reversediff,
        "ipartial" => ipartial,
        "op-vs-fillings" => op_vs_fillings,
        "pi-word-independence" => pi_word_independence,
        "key-routes" => key_routes,
        "ykey-routes" => ykey_routes,
        "fs-expansion-consistency" => fs_expansion_consistency,
        "maxcomp-dominance" => maxcomp_dominance,
        "flag-compatible" => flag_compatible,
        "row-frank-frev" => row_frank_frev,
        "crystal-b21" => crystal_b21,
        "crystal-axioms" => crystal_axioms,
        "demazure-full" => demazure_full,
        "demazure-characters" => demazure_characters,
        "rf-weights" => rf_weights,
        "rfyc-ysch" => rfyc_ysch,
        "schubert-s4" => schubert_s4,
        "vexillary" => vexillary,
        "delta-expansion" => delta_expansion,
        "expansion-positivity" => expansion_positivity,
        "key-equals-atom-sum" => key_equals_atom_sum,
        "yqs-qs" => yqs_qs,
        "key-ykey" => key_ykey,
        "atom-yatom" => atom_yatom,
        "qk-yqk" => qk_yqk,
        "fp-yfp" => fp_yfp,
        "slide-intersections" => slide_intersections,
        "module-suite" => module_suite,
        _ => return Err(Error::UnknownCheck(name.to_string())),
    };
    Ok(f(opts, mode))
}

pub fn run_all(opts: &VerifyOpts, mode: ExecMode) -> Vec<CheckReport> {
    CHECKS
        .iter()
        .map(|(name, _)| run_check(name, opts, mode).expect("registered"))
        .collect()
}

fn report(name: &str, cases: usize, failures: Vec<String>) -> CheckReport {
    CheckReport {
        name: name.to_string(),
        cases,
        failures,
    }
}

fn sweep<T, F>(name: &str, mode: ExecMode, items: Vec<T>, f: F) -> CheckReport
where
    T: Send,
    F: Fn(&T) -> Vec<String> + Sync + Send,
{
    let cases = items.len();
    let failures: Vec<String> = map_items(mode, items, |item| f(&item))
        .into_iter()
        .flatten()
        .collect();
    report(name, cases, failures)
}

fn weak_indices(opts: &VerifyOpts, default_len: usize, default_size: u32) -> Vec<WeakComposition> {
    opts.lengths(default_len)
        .into_iter()
        .flat_map(|n| WeakComposition::all_up_to(n, opts.size(default_size)))
        .collect()
}

fn all_words(max_len: usize, alphabet: u32) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for x in 1..=alphabet {
                let mut v = w.clone();
                v.push(x);
                out.push(Word::new(v.clone()));
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

// ---------------------------------------------------------------- checks

fn lehmer_rev(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let perms: Vec<Permutation> = opts
        .lengths(5)
        .into_iter()
        .flat_map(Permutation::all)
        .collect();
    sweep("lehmer-rev", mode, perms, |w| {
        let mut fails = Vec::new();
        if w.rev().young_lehmer() != w.lehmer().rev() {
            fails.push(format!("w = {w}"));
        }
        fails
    })
}

fn frev_perm(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let perms: Vec<Permutation> = opts
        .lengths(5)
        .into_iter()
        .flat_map(Permutation::all)
        .collect();
    sweep("frev-perm", mode, perms, |w| {
        let mut fails = Vec::new();
        let n = w.size();
        let w0 = Permutation::longest(n);
        let f = w.frev();
        if f != w0.compose(w).compose(&w0) {
            fails.push(format!("w = {w}: frev is not w0 w w0"));
        }
        if f.frev() != *w {
            fails.push(format!("w = {w}: frev not an involution"));
        }
        if f.num_inversions() != w.num_inversions() {
            fails.push(format!("w = {w}: frev changes length"));
        }
        if n >= 2 {
            let flipped: Vec<usize> = w.reduced_word().iter().map(|&i| n - i).collect();
            if Permutation::from_word(n, &flipped) != f {
                fails.push(format!("w = {w}: reduced word image mismatch"));
            }
        }
        fails
    })
}

fn wc_order(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    // partial-order axioms inside each rearrangement class
    let mut classes: Vec<Vec<WeakComposition>> = Vec::new();
    for n in opts.lengths(3) {
        for d in 1..=opts.size(5) {
            for lam in Partition::all(d, n) {
                let class: Vec<WeakComposition> = WeakComposition::all(n, d)
                    .into_iter()
                    .filter(|a| a.sort() == lam)
                    .collect();
                classes.push(class);
            }
        }
    }
    sweep("wc-order", mode, classes, |class| {
        let mut fails = Vec::new();
        for a in class {
            if !wc_leq(a, a).unwrap() {
                fails.push(format!("not reflexive at {a}"));
            }
        }
        for a in class {
            for b in class {
                let ab = wc_leq(a, b).unwrap();
                if ab && wc_leq(b, a).unwrap() && a != b {
                    fails.push(format!("antisymmetry fails at {a}, {b}"));
                }
                if !ab {
                    continue;
                }
                for c in class {
                    if wc_leq(b, c).unwrap() && !wc_leq(a, c).unwrap() {
                        fails.push(format!("transitivity fails at {a} <= {b} <= {c}"));
                    }
                }
            }
        }
        fails
    })
}

fn key_tableau_check(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 4, 6);
    sweep("key-tableau", mode, items, |a| {
        let k = Tableau::key_tableau(a);
        let mut fails = Vec::new();
        if !k.is_key() || !k.is_ssyt() {
            fails.push(format!("key({a}) is not a key"));
        }
        if k.weight(a.len()) != *a {
            fails.push(format!("key({a}) has the wrong weight"));
        }
        fails
    })
}

fn reverse_vars(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 3, 5);
    sweep("reverse-vars", mode, items, |a| {
        let mut fails = Vec::new();
        let key = gen_poly(FamilyId::Kssf, &Shape::Weak(a.clone()), a.len()).unwrap();
        if key.reverse_variables().reverse_variables() != key {
            fails.push(format!("involution fails at {a}"));
        }
        let ykey = gen_poly(FamilyId::Ykssf, &Shape::Weak(a.rev()), a.len()).unwrap();
        if key.reverse_variables() != ykey {
            fails.push(format!("I(key_{a}) is not ykey_rev({a})"));
        }
        fails
    })
}

fn knuth_closure(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let len = opts.max_size.map(|s| s.min(6) as usize).unwrap_or(6);
    let alphabet = opts.max_len.unwrap_or(4).min(4) as u32;
    let words = all_words(len, alphabet);
    sweep("knuth-closure", mode, words, |w| {
        let t = schensted_insert(w);
        let mut fails = Vec::new();
        for v in w.knuth_class() {
            if schensted_insert(&v) != t {
                fails.push(format!("word {w}: class member {v} inserts differently"));
            }
        }
        fails
    })
}

fn knuth_frev(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let len = opts.max_size.map(|s| s.min(6) as usize).unwrap_or(6);
    let alphabet = opts.max_len.unwrap_or(4).min(4) as u32;
    let words = all_words(len, alphabet);
    let n = alphabet as usize;
    sweep("knuth-frev", mode, words, move |w| {
        let mut fails = Vec::new();
        let image: std::collections::BTreeSet<Word> = w
            .knuth_class()
            .into_iter()
            .map(|v| v.frev(n).unwrap())
            .collect();
        let direct = w.frev(n).unwrap().knuth_class();
        if image != direct {
            fails.push(format!("class of frev({w}) differs from frev of class"));
        }
        fails
    })
}

fn col_colr_knuth(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 4, 6);
    sweep("col-colr-knuth", mode, items, |a| {
        let k = Tableau::key_tableau(a);
        if k.col_word().knuth_equivalent(&k.col_r_word()) {
            vec![]
        } else {
            vec![format!("a = {a}")]
        }
    })
}

fn frev_col_key(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 4, 6);
    sweep("frev-col-key", mode, items, |a| {
        let n = a.len();
        let lhs = Tableau::key_tableau(a).col_word().frev(n).unwrap();
        let rhs = Tableau::key_tableau(&a.rev()).col_r_word();
        if lhs == rhs {
            vec![]
        } else {
            vec![format!("a = {a}: {lhs} != {rhs}")]
        }
    })
}

fn rightkey_leftkey(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let n = opts.n.unwrap_or(4);
    let mut shapes = Vec::new();
    for d in 1..=opts.size(9) {
        for lam in Partition::all(d, 3) {
            if lam.parts().iter().all(|&p| p <= 3) {
                shapes.push(lam);
            }
        }
    }
    sweep("rightkey-leftkey", mode, shapes, move |lam| {
        let mut fails = Vec::new();
        for t in Tableau::all_ssyt(lam, n) {
            let lhs = schensted_insert(&t.col_word().frev(n).unwrap())
                .left_key()
                .unwrap();
            let rhs = t.right_key().unwrap().frev_key(n).unwrap();
            if lhs != rhs {
                fails.push(format!("shape {lam}, tableau with word {}", t.col_word()));
            }
        }
        fails
    })
}

const DUAL_PAIRS: [(FamilyId, FamilyId); 6] = [
    (FamilyId::Ykssf, FamilyId::Kssf),
    (FamilyId::Yassf, FamilyId::Assf),
    (FamilyId::Yqf, FamilyId::Qf),
    (FamilyId::Yff, FamilyId::Ff),
    (FamilyId::Ymf, FamilyId::Mf),
    (FamilyId::Ylf, FamilyId::Lf),
];

fn duality(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let weak = weak_indices(opts, 4, 6);
    let mut cases = 0;
    let mut failures: Vec<String> = Vec::new();
    let weak_failures: Vec<String> = map_items(mode, weak.clone(), |a| {
        let n = a.len();
        let mut fails = Vec::new();
        for (young, reverse) in DUAL_PAIRS {
            let lhs = gen_poly(young, &Shape::Weak(a.clone()), n).unwrap();
            let rhs = gen_poly(reverse, &Shape::Weak(a.rev()), n)
                .unwrap()
                .reverse_variables();
            if lhs != rhs {
                fails.push(format!("{young} vs {reverse} at a = {a}"));
            }
        }
        fails
    })
    .into_iter()
    .flatten()
    .collect();
    cases += weak.len() * DUAL_PAIRS.len();
    failures.extend(weak_failures);

    // the seventh pair: Young quasisymmetric Schur against quasisymmetric
    // Schur at the reversed composition
    let mut comp_cases: Vec<(Composition, usize)> = Vec::new();
    for n in opts.lengths(4) {
        for d in 1..=opts.size(6) {
            for alpha in Composition::all(d, n) {
                comp_cases.push((alpha, n));
            }
        }
    }
    cases += comp_cases.len();
    let comp_failures: Vec<String> = map_items(mode, comp_cases, |(alpha, n)| {
        let lhs = gen_poly(FamilyId::Yct, &Shape::Comp(alpha.clone()), n).unwrap();
        let rhs = gen_poly(FamilyId::Rct, &Shape::Comp(alpha.rev()), n)
            .unwrap()
            .reverse_variables();
        if lhs != rhs {
            vec![format!("YCT vs RCT at alpha = {alpha}, n = {n}")]
        } else {
            vec![]
        }
    })
    .into_iter()
    .flatten()
    .collect();
    failures.extend(comp_failures);
    report("duality", cases, failures)
}

fn monomial_positivity(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 3, 5);
    let mut rep = sweep("monomial-positivity", mode, items, |a| {
        let mut fails = Vec::new();
        for family in ALL_FAMILIES {
            if family.composition_shaped() {
                continue;
            }
            let p = gen_poly(family, &Shape::Weak(a.clone()), a.len()).unwrap();
            if !p.is_monomial_positive() && !p.is_zero() {
                fails.push(format!("{family} at {a}"));
            }
        }
        fails
    });
    for n in opts.lengths(3) {
        for d in 1..=opts.size(5) {
            for alpha in Composition::all(d, n) {
                rep.cases += 1;
                for family in [FamilyId::Rct, FamilyId::Yct, FamilyId::Fct, FamilyId::Mct] {
                    let p = gen_poly(family, &Shape::Comp(alpha.clone()), n).unwrap();
                    if !p.is_monomial_positive() && !p.is_zero() {
                        rep.failures.push(format!("{family} at {alpha}, n = {n}"));
                    }
                }
            }
        }
    }
    rep
}

fn schur_refinement(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let mut items: Vec<(Partition, usize)> = Vec::new();
    for n in opts.lengths(4) {
        for d in 1..=opts.size(6) {
            for lam in Partition::all(d, n) {
                items.push((lam, n));
            }
        }
    }
    sweep("schur-refinement", mode, items, |(lam, n)| {
        let mut fails = Vec::new();
        let schur = schur_polynomial(lam, *n);
        let (qs, yqs) = schur_decompositions(lam, *n).unwrap();
        if qs.reconstruct().unwrap() != schur {
            fails.push(format!("QS refinement fails at {lam}, n = {n}"));
        }
        if yqs.reconstruct().unwrap() != schur {
            fails.push(format!("YQS refinement fails at {lam}, n = {n}"));
        }
        fails
    })
}

fn containment_chains(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 3, 5);
    sweep("containment-chains", mode, items, |a| {
        let n = a.len();
        let sets = |family: FamilyId| -> std::collections::BTreeSet<crate::filling::Filling> {
            enumerate_family(family, &Shape::Weak(a.clone()), n)
                .unwrap()
                .into_iter()
                .collect()
        };
        let chains: [(FamilyId, FamilyId); 8] = [
            (FamilyId::Lf, FamilyId::Assf),
            (FamilyId::Assf, FamilyId::Qf),
            (FamilyId::Mf, FamilyId::Ff),
            (FamilyId::Ylf, FamilyId::Yassf),
            (FamilyId::Yassf, FamilyId::Yqf),
            (FamilyId::Ymf, FamilyId::Yff),
            (FamilyId::Lf, FamilyId::Qf),
            (FamilyId::Ylf, FamilyId::Yqf),
        ];
        let mut fails = Vec::new();
        for (small, big) in chains {
            if !sets(small).is_subset(&sets(big)) {
                fails.push(format!("{small} not inside {big} at {a}"));
            }
        }
        fails
    })
}

fn theta_involution(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 3, 5);
    let pairs: [(FamilyId, FamilyId); 6] = [
        (FamilyId::Kssf, FamilyId::Ykssf),
        (FamilyId::Assf, FamilyId::Yassf),
        (FamilyId::Qf, FamilyId::Yqf),
        (FamilyId::Ff, FamilyId::Yff),
        (FamilyId::Mf, FamilyId::Ymf),
        (FamilyId::Lf, FamilyId::Ylf),
    ];
    sweep("theta-involution", mode, items, move |a| {
        let n = a.len();
        let mut fails = Vec::new();
        for (reverse, young) in pairs {
            let source = enumerate_family(reverse, &Shape::Weak(a.rev()), n).unwrap();
            let mut mapped: Vec<crate::filling::Filling> =
                source.iter().map(|f| theta(f, n).unwrap()).collect();
            mapped.sort_by(|x, y| x.reading_word().cmp(&y.reading_word()).then(x.cmp(y)));
            let target = enumerate_family(young, &Shape::Weak(a.clone()), n).unwrap();
            if mapped != target {
                fails.push(format!(
                    "theta does not map {reverse}(rev {a}) onto {young}({a})"
                ));
            }
            for f in &source {
                if theta(&theta(f, n).unwrap(), n).unwrap() != *f {
                    fails.push(format!("theta not an involution on {reverse}({a})"));
                }
            }
        }
        fails
    })
}

fn reversediff(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let mut items: Vec<(WeakComposition, usize)> = Vec::new();
    for n in opts.lengths(4) {
        if n < 2 {
            continue;
        }
        for d in 0..=opts.size(5) {
            for e in WeakComposition::all(n, d) {
                items.push((e, n));
            }
        }
    }
    sweep("reversediff", mode, items, |(e, n)| {
        let n = *n;
        let f = Polynomial::from_weight(e);
        let mut fails = Vec::new();
        for i in 1..n {
            let lhs = pi(i, &f).unwrap().reverse_variables();
            let rhs = pihat(n - i, &f.reverse_variables()).unwrap();
            if lhs != rhs {
                fails.push(format!("e = {e}, i = {i}"));
            }
        }
        fails
    })
}

fn ipartial(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let mut items: Vec<(WeakComposition, usize)> = Vec::new();
    for n in opts.lengths(4) {
        if n < 2 {
            continue;
        }
        for d in 0..=opts.size(5) {
            for e in WeakComposition::all(n, d) {
                items.push((e, n));
            }
        }
    }
    sweep("ipartial", mode, items, |(e, n)| {
        let n = *n;
        let f = Polynomial::from_weight(e);
        let mut fails = Vec::new();
        // all operator chains of length at most two
        let mut chains: Vec<Vec<usize>> = vec![vec![]];
        for i in 1..n {
            chains.push(vec![i]);
            for j in 1..n {
                chains.push(vec![i, j]);
            }
        }
        for chain in &chains {
            let mut lhs = f.clone();
            for &i in chain.iter().rev() {
                lhs = partial(i, &lhs).unwrap();
            }
            let mut rhs = f.reverse_variables();
            for &i in chain.iter().rev() {
                rhs = partial(n - i, &rhs).unwrap();
            }
            if chain.len() % 2 == 1 {
                rhs = rhs.neg();
            }
            if lhs.reverse_variables() != rhs {
                fails.push(format!("e = {e}, chain {chain:?}"));
            }
        }
        fails
    })
}

fn op_vs_fillings(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 4, 6);
    sweep("op-vs-fillings", mode, items, |a| {
        let n = a.len();
        let mut fails = Vec::new();
        let checks: [(&str, Polynomial, FamilyId); 4] = [
            ("key", key_ops(a), FamilyId::Kssf),
            ("atom", atom_ops(a), FamilyId::Assf),
            ("ykey", ykey_ops(a), FamilyId::Ykssf),
            ("yatom", yatom_ops(a), FamilyId::Yassf),
        ];
        for (name, ops, family) in checks {
            let fill = gen_poly(family, &Shape::Weak(a.clone()), n).unwrap();
            if ops != fill {
                fails.push(format!("{name} at {a}"));
            }
        }
        fails
    })
}

fn pi_word_independence(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let n = opts.n.unwrap_or(4);
    let perms = Permutation::all(n);
    sweep("pi-word-independence", mode, perms, move |w| {
        let mut fails = Vec::new();
        let start = Polynomial::monomial(
            n,
            &(0..n).map(|i| (n - i) as u32).collect::<Vec<_>>(),
            1.into(),
        );
        let words = w.all_reduced_words();
        for kind in [OpKind::Pi, OpKind::PiHat, OpKind::PiBar] {
            let apply = |word: &[usize]| -> Polynomial {
                let mut cur = start.clone();
                for &i in word.iter().rev() {
                    cur = kind.apply(i, &cur).unwrap();
                }
                cur
            };
            let first = apply(&words[0]);
            for word in &words[1..] {
                if apply(word) != first {
                    fails.push(format!("w = {w}, kind {kind:?}"));
                    break;
                }
            }
        }
        fails
    })
}

fn route_indices(opts: &VerifyOpts) -> Vec<WeakComposition> {
    match (opts.n, opts.max_size) {
        (Some(n), _) => WeakComposition::all_up_to(n, opts.size(if n >= 4 { 4 } else { 6 })),
        (None, Some(s)) => {
            let max_len = opts.max_len.unwrap_or(3);
            (1..=max_len)
                .flat_map(|n| WeakComposition::all_up_to(n, s))
                .collect()
        }
        (None, None) => {
            // the contractual range: every length up to 3 with size up to
            // 6, and length 4 with size up to 4
            let mut v: Vec<WeakComposition> = (1..=3)
                .flat_map(|n| WeakComposition::all_up_to(n, 6))
                .collect();
            v.extend(WeakComposition::all_up_to(4, 4));
            v
        }
    }
}

fn key_routes(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = route_indices(opts);
    sweep("key-routes", mode, items, |a| {
        let n = a.len();
        let reference = gen_poly(FamilyId::Kssf, &Shape::Weak(a.clone()), n).unwrap();
        let mut fails = Vec::new();
        let routes: [(&str, Polynomial); 4] = [
            ("operators", key_ops(a)),
            ("compatible sequences", key_via_compatible(a)),
            ("right keys", key_via_right_keys(a).unwrap()),
            ("row-frank words", key_via_row_frank(a)),
        ];
        for (route, p) in routes {
            if p != reference {
                fails.push(format!("{route} disagrees at {a}"));
            }
        }
        let atom = gen_poly(FamilyId::Assf, &Shape::Weak(a.clone()), n).unwrap();
        if atom_via_right_keys(a).unwrap() != atom {
            fails.push(format!("atom right-key filter disagrees at {a}"));
        }
        fails
    })
}

fn ykey_routes(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = route_indices(opts);
    sweep("ykey-routes", mode, items, |a| {
        let n = a.len();
        let reference = gen_poly(FamilyId::Ykssf, &Shape::Weak(a.clone()), n).unwrap();
        let mut fails = Vec::new();
        let routes: [(&str, Polynomial); 4] = [
            ("operators", ykey_ops(a)),
            ("compatible sequences", ykey_via_compatible(a).unwrap()),
            ("left keys", ykey_via_left_keys(a).unwrap()),
            ("row-frank words", ykey_via_row_frank(a).unwrap()),
        ];
        for (route, p) in routes {
            if p != reference {
                fails.push(format!("{route} disagrees at {a}"));
            }
        }
        let yatom = gen_poly(FamilyId::Yassf, &Shape::Weak(a.clone()), n).unwrap();
        if yatom_via_left_keys(a).unwrap() != yatom {
            fails.push(format!("Young atom left-key filter disagrees at {a}"));
        }
        fails
    })
}

fn fs_expansion_consistency(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 3, 6);
    sweep("fs-expansion-consistency", mode, items, |a| {
        let n = a.len();
        let mut fails = Vec::new();
        let expansion = key_to_fundamental_slides(a);
        let mut sum = Polynomial::zero(n);
        for (b, c) in &expansion {
            let fs = gen_poly(FamilyId::Ff, &Shape::Weak(b.clone()), n).unwrap();
            sum = sum.add(&fs.mul_scalar(&(*c).into()));
        }
        let key = key_ops(a);
        if sum != key {
            fails.push(format!("slide expansion does not rebuild key at {a}"));
        }
        // the Knuth-class expansion coincides with the generic expander
        let solved = expand(&key, BasisId::FSlide, n).unwrap();
        if solved.terms != to_rational_terms(&expansion) {
            fails.push(format!(
                "expander disagrees with the Knuth-class expansion at {a}"
            ));
        }
        // Young side: ykey into Young slides through the flipped classes
        let yexpansion = ykey_to_young_slides(a).unwrap();
        let ykey = ykey_ops(a);
        let solved = expand(&ykey, BasisId::YFSlide, n).unwrap();
        if solved.terms != to_rational_terms(&yexpansion) {
            fails.push(format!("Young slide expansion disagrees at {a}"));
        }
        fails
    })
}

fn to_rational_terms(
    expansion: &std::collections::BTreeMap<WeakComposition, u32>,
) -> std::collections::BTreeMap<Vec<u32>, num_rational::BigRational> {
    expansion
        .iter()
        .map(|(b, c)| {
            (
                b.parts().to_vec(),
                num_rational::BigRational::from(num_bigint::BigInt::from(*c)),
            )
        })
        .collect()
}

fn maxcomp_dominance(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let len = opts.max_size.map(|s| s.min(6) as usize).unwrap_or(6);
    let alphabet = opts.max_len.unwrap_or(4).min(4) as u32;
    let words = all_words(len, alphabet);
    let n = alphabet as usize;
    sweep("maxcomp-dominance", mode, words, move |b| {
        let mut fails = Vec::new();
        let seqs = compatible_sequences(b, n);
        match max_compatible_sequence(b) {
            None => {
                if !seqs.is_empty() {
                    fails.push(format!("b = {b}: maxcomp missing"));
                }
            }
            Some(m) => {
                if !seqs.contains(&m) {
                    fails.push(format!("b = {b}: maxcomp not compatible"));
                }
                for w in &seqs {
                    if !w.letters().iter().zip(m.letters()).all(|(x, y)| x <= y) {
                        fails.push(format!("b = {b}: {w} not dominated"));
                    }
                }
                // the compatible sequences of b generate the fundamental
                // slide polynomial at maxcomp(b)
                let direct = Polynomial::from_weights(n, seqs.iter().map(|w| w.weight(n)));
                let slide = gen_poly(FamilyId::Ff, &Shape::Weak(m.weight(n)), n).unwrap();
                if direct != slide {
                    fails.push(format!("b = {b}: compatible sum is not the slide"));
                }
            }
        }
        fails
    })
}

fn flag_compatible(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 4, 6);
    sweep("flag-compatible", mode, items, |a| {
        let lhs = particle_via_flag(a);
        let rhs = gen_poly(FamilyId::Lf, &Shape::Weak(a.clone()), a.len()).unwrap();
        if lhs == rhs {
            vec![]
        } else {
            vec![format!("a = {a}")]
        }
    })
}

fn row_frank_frev(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 3, 5);
    sweep("row-frank-frev", mode, items, |a| {
        let n = a.len();
        let image: std::collections::BTreeSet<Word> = row_frank_words(&a.rev())
            .iter()
            .map(|u| u.frev(n).unwrap())
            .collect();
        let direct: std::collections::BTreeSet<Word> =
            young_row_frank_words(a).unwrap().into_iter().collect();
        if image == direct {
            vec![]
        } else {
            vec![format!("a = {a}")]
        }
    })
}

fn crystal_b21(_opts: &VerifyOpts, _mode: ExecMode) -> CheckReport {
    let lam = Partition::new(vec![2, 1]).unwrap();
    let g = tableau_crystal(&lam, 3);
    let tab = |rows: &[&[u32]]| Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
    let expect: std::collections::BTreeSet<(Tableau, Tableau, usize)> = [
        (tab(&[&[1, 1], &[2]]), tab(&[&[1, 2], &[2]]), 1),
        (tab(&[&[1, 1], &[3]]), tab(&[&[1, 2], &[3]]), 1),
        (tab(&[&[1, 2], &[3]]), tab(&[&[2, 2], &[3]]), 1),
        (tab(&[&[1, 3], &[3]]), tab(&[&[2, 3], &[3]]), 1),
        (tab(&[&[1, 1], &[2]]), tab(&[&[1, 1], &[3]]), 2),
        (tab(&[&[1, 2], &[2]]), tab(&[&[1, 3], &[2]]), 2),
        (tab(&[&[1, 3], &[2]]), tab(&[&[1, 3], &[3]]), 2),
        (tab(&[&[2, 2], &[3]]), tab(&[&[2, 3], &[3]]), 2),
    ]
    .into_iter()
    .collect();
    let mut failures = Vec::new();
    if g.vertices.len() != 8 {
        failures.push(format!("vertex count {}", g.vertices.len()));
    }
    if g.edge_tableaux() != expect {
        failures.push("edge set differs from the reference figure".to_string());
    }
    report("crystal-b21", 1, failures)
}

fn crystal_axioms(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let mut items: Vec<(Partition, usize)> = Vec::new();
    for n in opts.lengths(4) {
        let max = opts.size(if n >= 4 { 4 } else { 6 });
        for d in 1..=max {
            for lam in Partition::all(d, n) {
                items.push((lam, n));
            }
        }
    }
    sweep("crystal-axioms", mode, items, |(lam, n)| {
        let n = *n;
        let mut fails = Vec::new();
        let g = tableau_crystal(lam, n);
        // connectedness via unique source and sink
        let mut sources = 0;
        let mut sinks = 0;
        for t in &g.vertices {
            if (1..n).all(|i| crystal_e(t, i).is_none()) {
                sources += 1;
            }
            if (1..n).all(|i| crystal_f(t, i).is_none()) {
                sinks += 1;
            }
            for i in 1..n {
                if let Some(img) = crystal_f(t, i) {
                    if crystal_e(&img, i).as_ref() != Some(t) {
                        fails.push(format!("e_{i} does not invert f_{i} at {lam}, n = {n}"));
                    }
                    let mut moved = t.weight(n).parts().to_vec();
                    moved[i - 1] -= 1;
                    moved[i] += 1;
                    if img.weight(n).parts() != moved {
                        fails.push(format!("weight shift wrong at {lam}, n = {n}"));
                    }
                }
                if let Some(img) = crystal_e(t, i) {
                    if crystal_f(&img, i).as_ref() != Some(t) {
                        fails.push(format!("f_{i} does not invert e_{i} at {lam}, n = {n}"));
                    }
                }
            }
        }
        if !g.vertices.is_empty() && (sources != 1 || sinks != 1) {
            fails.push(format!(
                "expected unique highest and lowest weight at {lam}, n = {n}"
            ));
        }
        if g.character() != schur_polynomial(lam, n) {
            fails.push(format!("character differs from Schur at {lam}, n = {n}"));
        }
        fails
    })
}

fn demazure_full(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let n = opts.n.unwrap_or(3);
    let mut items = Vec::new();
    for d in 1..=opts.size(5) {
        items.extend(Partition::all(d, n));
    }
    sweep("demazure-full", mode, items, move |lam| {
        let full = Tableau::all_ssyt(lam, n).len();
        let word = Permutation::longest(n).reduced_word();
        let mut fails = Vec::new();
        if demazure_from_highest(lam, n, &word).unwrap().vertices.len() != full {
            fails.push(format!("highest truncation incomplete at {lam}"));
        }
        if demazure_from_lowest(lam, n, &word).unwrap().vertices.len() != full {
            fails.push(format!("lowest truncation incomplete at {lam}"));
        }
        fails
    })
}

fn demazure_characters(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 3, 5);
    sweep("demazure-characters", mode, items, |a| {
        let n = a.len();
        let mut fails = Vec::new();
        let key = gen_poly(FamilyId::Kssf, &Shape::Weak(a.clone()), n).unwrap();
        if key_crystal(a).character() != key {
            fails.push(format!("highest-weight character at {a}"));
        }
        let ykey = gen_poly(FamilyId::Ykssf, &Shape::Weak(a.clone()), n).unwrap();
        if ykey_crystal(a).character() != ykey {
            fails.push(format!("lowest-weight character at {a}"));
        }
        fails
    })
}

fn rf_weights(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let n = opts.n.unwrap_or(4);
    let perms = Permutation::all(n);
    sweep("rf-weights", mode, perms, move |w| {
        let blocks = w.descents().last().copied().unwrap_or(0);
        let mut fails = Vec::new();
        for r in reduced_factorizations(w, blocks) {
            if r.weight(n).size() as usize != w.num_inversions() {
                fails.push(format!("w = {w}, factorization {r}"));
            }
        }
        fails
    })
}

fn rfyc_ysch(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let n = opts.n.unwrap_or(4);
    let perms = Permutation::all(n);
    let mut rep = sweep("rfyc-ysch", mode, perms, |w| {
        if young_schubert_via_rfyc(w) == young_schubert_pd(w) {
            vec![]
        } else {
            vec![format!("w = {w}")]
        }
    });
    // the bolded factorizations of the reference figure
    let w = Permutation::parse("21534").unwrap();
    let bold: Vec<String> = rfyc(&w).iter().map(|r| r.to_string()).collect();
    let expect = [
        "(1)()(43)",
        "(1)(4)(3)",
        "(1)(43)()",
        "(41)()(3)",
        "(41)(3)()",
        "(431)()()",
    ];
    rep.cases += 1;
    if bold != expect {
        rep.failures.push(format!("RFYC(21534) = {bold:?}"));
    }
    rep
}

fn schubert_s4(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let n = opts.n.unwrap_or(4);
    let perms = Permutation::all(n);
    sweep("schubert-s4", mode, perms, move |w| {
        let mut fails = Vec::new();
        let pd = schubert_pd(w);
        if pd != crate::operators::schubert_ops(w) {
            fails.push(format!("schubert pd vs ops at {w}"));
        }
        let ypd = young_schubert_pd(w);
        if ypd != crate::operators::yschubert_ops(w) {
            fails.push(format!("young schubert pd vs ops at {w}"));
        }
        if ypd != schubert_pd(&w.rev()).reverse_variables() {
            fails.push(format!("chirality identity at {w}"));
        }
        for d in pipe_dreams(w) {
            if d.crosses().len() != w.num_inversions() {
                fails.push(format!("non-reduced pipe dream at {w}"));
            }
        }
        for i in 1..=n {
            if ypd.max_exponent_of(i) > (i - 1) as u32 {
                fails.push(format!("staircase bound fails at {w}, variable {i}"));
            }
        }
        // Schubert polynomials expand nonnegatively into keys, Young
        // Schubert polynomials into Young keys
        for (p, basis) in [(&pd, BasisId::Key), (&ypd, BasisId::YKey)] {
            match expand(p, basis, n) {
                Ok(exp) => {
                    if !exp.is_integral() || !exp.is_nonnegative() {
                        fails.push(format!("{basis} expansion not nonnegative at {w}"));
                    } else if exp.reconstruct().unwrap() != *p {
                        fails.push(format!("{basis} expansion reconstruction at {w}"));
                    }
                }
                Err(e) => fails.push(format!("{basis} expansion at {w}: {e}")),
            }
        }
        fails
    })
}

fn vexillary(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let n = opts.n.unwrap_or(4);
    let perms = Permutation::all(n);
    sweep("vexillary", mode, perms, |w| {
        let key = gen_poly(FamilyId::Kssf, &Shape::Weak(w.lehmer()), w.size()).unwrap();
        let equal = schubert_pd(w) == key;
        if equal == w.is_vexillary() {
            vec![]
        } else {
            vec![format!("w = {w}")]
        }
    })
}

fn delta_expansion(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let mut items: Vec<(BasisId, Vec<u32>, usize)> = Vec::new();
    for n in opts.lengths(3) {
        for d in 1..=opts.size(5) {
            for basis in crate::expansion::ALL_BASES {
                for index in crate::expansion::basis_indices(basis, d, n) {
                    items.push((basis, index, n));
                }
            }
        }
    }
    sweep("delta-expansion", mode, items, |(basis, index, n)| {
        let p = basis_polynomial(*basis, index, *n).unwrap();
        if p.is_zero() {
            return vec![];
        }
        let exp = expand(&p, *basis, *n).unwrap();
        let ok =
            exp.terms.len() == 1 && exp.terms.keys().next() == Some(index) && exp.is_integral();
        if ok {
            vec![]
        } else {
            vec![format!("basis {basis}, index {index:?}, n = {n}")]
        }
    })
}

fn expansion_positivity(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 3, 5);
    sweep("expansion-positivity", mode, items, |a| {
        let n = a.len();
        let mut fails = Vec::new();
        for (source, target) in REVERSE_ARROWS.iter().chain(YOUNG_ARROWS.iter()) {
            let p = basis_polynomial(*source, a.parts(), n).unwrap();
            match expand(&p, *target, n) {
                Ok(exp) => {
                    if !exp.is_integral() || !exp.is_nonnegative() {
                        fails.push(format!("{source} into {target} at {a}"));
                    }
                    if exp.reconstruct().unwrap() != p {
                        fails.push(format!("{source} into {target} reconstruction at {a}"));
                    }
                }
                Err(e) => fails.push(format!("{source} into {target} at {a}: {e}")),
            }
        }
        fails
    })
}

fn key_equals_atom_sum(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 3, 5);
    sweep("key-equals-atom-sum", mode, items, |a| {
        let n = a.len();
        let key = gen_poly(FamilyId::Kssf, &Shape::Weak(a.clone()), n).unwrap();
        let mut fails = Vec::new();
        let direct = key_to_atoms(a).unwrap();
        if direct.reconstruct().unwrap() != key {
            fails.push(format!("atom sum does not rebuild key at {a}"));
        }
        let solved = expand(&key, BasisId::Atom, n).unwrap();
        if solved.terms != direct.terms {
            fails.push(format!(
                "expander disagrees with the membership order at {a}"
            ));
        }
        fails
    })
}

fn yqs_qs(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let mut items: Vec<(Composition, usize)> = Vec::new();
    for n in opts.lengths(4) {
        for d in 1..=opts.size(6) {
            for alpha in Composition::all(d, 4.min(n)) {
                if alpha.len() <= n {
                    items.push((alpha, n));
                }
            }
        }
    }
    sweep("yqs-qs", mode, items, |(alpha, n)| {
        let n = *n;
        let yqs = gen_poly(FamilyId::Yct, &Shape::Comp(alpha.clone()), n).unwrap();
        let mut found = false;
        for beta in Composition::all(alpha.size(), n) {
            let qs = gen_poly(FamilyId::Rct, &Shape::Comp(beta.clone()), n).unwrap();
            if qs == yqs {
                found = true;
                // coincidences only happen at the same index
                if beta != *alpha {
                    return vec![format!(
                        "YQS_{alpha} equals QS_{beta} at a different index, n = {n}"
                    )];
                }
            }
        }
        if found != classify::yqs_equals_qs(alpha, n).unwrap() {
            vec![format!("classifier wrong at alpha = {alpha}, n = {n}")]
        } else {
            vec![]
        }
    })
}

fn cross_search(
    name: &str,
    opts: &VerifyOpts,
    mode: ExecMode,
    young: FamilyId,
    reverse: FamilyId,
    predicate: fn(&WeakComposition) -> bool,
) -> CheckReport {
    let items = weak_indices(opts, 4, 6);
    sweep(name, mode, items, move |a| {
        let n = a.len();
        let target = gen_poly(young, &Shape::Weak(a.clone()), n).unwrap();
        let found = WeakComposition::all(n, a.size())
            .into_iter()
            .any(|b| gen_poly(reverse, &Shape::Weak(b), n).unwrap() == target);
        if found == predicate(a) {
            vec![]
        } else {
            vec![format!(
                "classifier wrong at a = {a} (search found: {found})"
            )]
        }
    })
}

fn key_ykey(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    // both directions: ykey_a is a key iff decreasing, key_a is a ykey iff
    // increasing, and the intersection consists of Schur polynomials
    let items = weak_indices(opts, 4, 6);
    let mut rep = cross_search(
        "key-ykey",
        opts,
        mode,
        FamilyId::Ykssf,
        FamilyId::Kssf,
        classify::young_key_is_key,
    );
    let extra: Vec<String> = map_items(mode, items.clone(), |a| {
        let n = a.len();
        let key = gen_poly(FamilyId::Kssf, &Shape::Weak(a.clone()), n).unwrap();
        let found = WeakComposition::all(n, a.size())
            .into_iter()
            .any(|b| gen_poly(FamilyId::Ykssf, &Shape::Weak(b), n).unwrap() == key);
        let mut fails = Vec::new();
        if found != classify::key_is_young_key(&a) {
            fails.push(format!("key side classifier wrong at {a}"));
        }
        if found && key != schur_polynomial(&a.sort(), n) {
            fails.push(format!("intersection at {a} is not a Schur polynomial"));
        }
        fails
    })
    .into_iter()
    .flatten()
    .collect();
    rep.cases += items.len();
    rep.failures.extend(extra);
    rep
}

fn atom_yatom(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    cross_search(
        "atom-yatom",
        opts,
        mode,
        FamilyId::Yassf,
        FamilyId::Assf,
        classify::atom_equals_young_atom,
    )
}

fn qk_yqk(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    cross_search(
        "qk-yqk",
        opts,
        mode,
        FamilyId::Yqf,
        FamilyId::Qf,
        classify::qkey_equals_young_qkey,
    )
}

fn fp_yfp(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    cross_search(
        "fp-yfp",
        opts,
        mode,
        FamilyId::Ylf,
        FamilyId::Lf,
        classify::particle_equals_young_particle,
    )
}

fn slide_intersections(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let items = weak_indices(opts, 4, 6);
    sweep("slide-intersections", mode, items, |a| {
        let n = a.len();
        let mut fails = Vec::new();
        let pairs: [(FamilyId, FamilyId, FamilyId); 2] = [
            (FamilyId::Ff, FamilyId::Yff, FamilyId::Fct),
            (FamilyId::Mf, FamilyId::Ymf, FamilyId::Mct),
        ];
        for (reverse, young, quasi) in pairs {
            // reverse slide equals some Young slide iff quasisymmetric
            let fs = gen_poly(reverse, &Shape::Weak(a.clone()), n).unwrap();
            let found = WeakComposition::all(n, a.size())
                .into_iter()
                .any(|b| gen_poly(young, &Shape::Weak(b), n).unwrap() == fs);
            if found != classify::slide_is_quasisymmetric(a) {
                fails.push(format!("{reverse} side classifier wrong at {a}"));
            }
            if found {
                let quasi_poly = gen_poly(quasi, &Shape::Comp(a.flat()), n).unwrap();
                if fs != quasi_poly {
                    fails.push(format!(
                        "{reverse} intersection at {a} is not quasisymmetric"
                    ));
                }
            }
            // Young slide equals some reverse slide iff quasisymmetric
            let yfs = gen_poly(young, &Shape::Weak(a.clone()), n).unwrap();
            let found = WeakComposition::all(n, a.size())
                .into_iter()
                .any(|b| gen_poly(reverse, &Shape::Weak(b), n).unwrap() == yfs);
            if found != classify::young_slide_is_quasisymmetric(a) {
                fails.push(format!("{young} side classifier wrong at {a}"));
            }
            if found {
                let quasi_poly = gen_poly(quasi, &Shape::Comp(a.flat()), n).unwrap();
                if yfs != quasi_poly {
                    fails.push(format!("{young} intersection at {a} is not quasisymmetric"));
                }
            }
        }
        fails
    })
}

fn module_suite(opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    let n = opts.n.unwrap_or(3);
    let items = WeakComposition::all_up_to(n, opts.size(5));
    sweep("module-suite", mode, items, move |a| {
        let mut fails = Vec::new();
        let basis = match young_key_module_basis(a, n) {
            Ok(b) => b,
            Err(e) => return vec![format!("a = {a}: {e}")],
        };
        let words = young_row_frank_words(a).unwrap();
        if basis.len() != words.len() {
            fails.push(format!("a = {a}: basis size differs from |YW(a)|"));
        }
        for (u, v) in &basis {
            if v.is_zero() {
                fails.push(format!("a = {a}: e vector of {u} vanished"));
            }
            match v.uniform_weight(n) {
                Some(w) if w == u.weight(n) => {}
                _ => fails.push(format!(
                    "a = {a}: e vector of {u} is not weight-homogeneous"
                )),
            }
        }
        let vectors: Vec<&FormalFillingVector> = basis.iter().map(|(_, v)| v).collect();
        if vectors_rank(&vectors) != basis.len() {
            fails.push(format!("a = {a}: basis not linearly independent"));
        }
        let trace = module_trace(a, n).unwrap();
        if trace != gen_poly(FamilyId::Ykssf, &Shape::Weak(a.clone()), n).unwrap() {
            fails.push(format!("a = {a}: trace is not the Young key polynomial"));
        }
        fails
    })
}

// ------------------------------------------------------------- goldens

fn golden_values(_opts: &VerifyOpts, mode: ExecMode) -> CheckReport {
    type Item = (&'static str, fn() -> std::result::Result<(), String>);
    let items: Vec<Item> = vec![
        ("key-032", || {
            golden_poly(
                FamilyId::Kssf,
                &[0, 3, 2],
                &[
                    "032", "122", "212", "302", "311", "320", "131", "221", "230",
                ],
            )
        }),
        ("ykey-230", || {
            golden_poly(
                FamilyId::Ykssf,
                &[2, 3, 0],
                &[
                    "230", "221", "212", "203", "113", "023", "131", "122", "032",
                ],
            )
        }),
        ("atom-103", || {
            golden_poly(
                FamilyId::Assf,
                &[1, 0, 3],
                &["103", "112", "202", "121", "211"],
            )
        }),
        ("qkey-103", || {
            golden_poly(
                FamilyId::Qf,
                &[1, 0, 3],
                &["103", "112", "202", "121", "211", "130", "220"],
            )
        }),
        ("fslide-103", || {
            golden_poly(FamilyId::Ff, &[1, 0, 3], &["103", "112", "121", "130"])
        }),
        ("mslide-103", || {
            golden_poly(FamilyId::Mf, &[1, 0, 3], &["103", "130"])
        }),
        ("particle-103", || {
            golden_poly(FamilyId::Lf, &[1, 0, 3], &["103", "112", "121"])
        }),
        ("yfslide-301", || {
            golden_poly(FamilyId::Yff, &[3, 0, 1], &["301", "211", "121", "031"])
        }),
        ("ymslide-301", || {
            golden_poly(FamilyId::Ymf, &[3, 0, 1], &["301", "031"])
        }),
        ("F-13", || {
            golden_comp_poly(FamilyId::Fct, &[1, 3], &["013", "103", "112", "121", "130"])
        }),
        ("M-13", || {
            golden_comp_poly(FamilyId::Mct, &[1, 3], &["013", "103", "130"])
        }),
        ("QS-13", || {
            let p = gen_poly(
                FamilyId::Rct,
                &Shape::Comp(Composition::new(vec![1, 3]).unwrap()),
                3,
            )
            .unwrap();
            let mut expect =
                poly_from_digits(3, &["013", "022", "103", "202", "121", "211", "130", "220"]);
            expect.add_term(&[1, 1, 2], 2.into());
            check_eq("QS_13", &p, &expect)?;
            if enumerate_family(
                FamilyId::Rct,
                &Shape::Comp(Composition::new(vec![1, 3]).unwrap()),
                3,
            )
            .unwrap()
            .len()
                != 10
            {
                return Err("RCT(13) should have ten tableaux".into());
            }
            Ok(())
        }),
        ("YQS-13", || {
            golden_comp_poly(FamilyId::Yct, &[1, 3], &["130", "121", "112", "103", "013"])
        }),
        ("sch-31524", || {
            let w = Permutation::parse("31524").unwrap();
            let expect = poly_from_digits(5, &["31000", "22000", "30100", "21100", "20200"]);
            check_eq("sch_31524", &schubert_pd(&w), &expect)
        }),
        ("ysch-42513", || {
            let w = Permutation::parse("42513").unwrap();
            let expect = poly_from_digits(5, &["00013", "00022", "00103", "00112", "00202"]);
            check_eq("ysch_42513", &young_schubert_pd(&w), &expect)
        }),
        ("ysch-small", || {
            check_eq(
                "ysch_132",
                &young_schubert_pd(&Permutation::parse("132").unwrap()),
                &poly_from_digits(3, &["011"]),
            )?;
            check_eq(
                "ysch_1324",
                &young_schubert_pd(&Permutation::parse("1324").unwrap()),
                &poly_from_digits(4, &["0113"]),
            )?;
            check_eq(
                "ysch_2314",
                &young_schubert_pd(&Permutation::parse("2314").unwrap()),
                &poly_from_digits(4, &["0013", "0103"]),
            )
        }),
        ("crystal-characters", || {
            let key102 = key_crystal(&WeakComposition::new(vec![1, 0, 2])).character();
            check_eq(
                "key_102",
                &key102,
                &poly_from_digits(3, &["210", "120", "201", "111", "102"]),
            )?;
            let ykey201 = ykey_crystal(&WeakComposition::new(vec![2, 0, 1])).character();
            check_eq(
                "ykey_201",
                &ykey201,
                &poly_from_digits(3, &["012", "021", "102", "111", "201"]),
            )
        }),
        ("key-to-slides", || {
            let exp = key_to_fundamental_slides(&WeakComposition::new(vec![0, 3, 2]));
            let expect: Vec<(Vec<u32>, u32)> = vec![
                (vec![0, 3, 2], 1),
                (vec![1, 3, 1], 1),
                (vec![2, 2, 1], 1),
                (vec![2, 3, 0], 1),
            ];
            let got: Vec<(Vec<u32>, u32)> =
                exp.iter().map(|(k, v)| (k.parts().to_vec(), *v)).collect();
            if got == expect {
                Ok(())
            } else {
                Err(format!("slide expansion of key_032: {got:?}"))
            }
        }),
        ("ysch-43512-into-ykeys", || {
            let w = Permutation::parse("43512").unwrap();
            let p = young_schubert_via_rfyc(&w);
            let k1 = gen_poly(
                FamilyId::Ykssf,
                &Shape::Weak(WeakComposition::new(vec![0, 0, 0, 0, 3])),
                5,
            )
            .unwrap();
            let k2 = gen_poly(
                FamilyId::Ykssf,
                &Shape::Weak(WeakComposition::new(vec![0, 0, 2, 0, 1])),
                5,
            )
            .unwrap();
            check_eq("ysch_43512", &p, &k1.add(&k2))
        }),
        ("lehmer-31254", || {
            let w = Permutation::parse("31254").unwrap();
            if w.lehmer().parts() == [2, 0, 0, 1, 0] {
                Ok(())
            } else {
                Err(format!("L(31254) = {}", w.lehmer()))
            }
        }),
        ("frev-31542", || {
            let w = Permutation::parse("31542").unwrap();
            if w.frev() == Permutation::parse("42153").unwrap() {
                Ok(())
            } else {
                Err(format!("frev(31542) = {}", w.frev()))
            }
        }),
        ("left-right-keys", || {
            let t = Tableau::new(vec![vec![1, 2, 2], vec![2, 3]]).unwrap();
            let kp = Tableau::new(vec![vec![2, 2, 2], vec![3, 3]]).unwrap();
            let km = Tableau::new(vec![vec![1, 1, 2], vec![2, 2]]).unwrap();
            if t.right_key().map_err(|e| e.to_string())? != kp {
                return Err("right key of the col-word-21322 tableau".into());
            }
            if t.left_key().map_err(|e| e.to_string())? != km {
                return Err("left key of the col-word-21322 tableau".into());
            }
            Ok(())
        }),
        ("knuth-classes", || {
            let class: Vec<String> = Word::parse("32322")
                .unwrap()
                .knuth_class()
                .iter()
                .map(|w| w.to_string())
                .collect();
            let expect = ["23232", "23322", "32232", "32322", "33222"];
            if class != expect {
                return Err(format!("class of 32322: {class:?}"));
            }
            let class = Word::parse("21322").unwrap().knuth_class();
            for need in ["21322", "21232", "22132", "22312"] {
                if !class.contains(&Word::parse(need).unwrap()) {
                    return Err(format!("class of 21322 misses {need}"));
                }
            }
            // closure of the two moves; every member inserts to one tableau
            let t = schensted_insert(&Word::parse("21322").unwrap());
            if class.len() != 5 || class.iter().any(|w| schensted_insert(w) != t) {
                return Err(format!("class of 21322 has {} members", class.len()));
            }
            Ok(())
        }),
        ("compatible-table", || {
            let table: [(&str, &[&str]); 5] = [
                (
                    "22233",
                    &["22233", "12233", "11233", "11133", "11123", "11122"],
                ),
                ("22323", &["11223"]),
                ("23223", &["12223"]),
                ("23232", &[]),
                ("22332", &["11222"]),
            ];
            for (b, expect) in table {
                let got: Vec<String> = compatible_sequences(&Word::parse(b).unwrap(), 3)
                    .iter()
                    .map(|w| w.to_string())
                    .collect();
                let mut expect: Vec<String> = expect.iter().map(|s| s.to_string()).collect();
                expect.sort();
                let mut got_sorted = got.clone();
                got_sorted.sort();
                if got_sorted != expect {
                    return Err(format!("compatible sequences of {b}: {got:?}"));
                }
            }
            Ok(())
        }),
        ("maxcomp-23223", || {
            let mc = crate::generators::maxcomp(&Word::parse("23223").unwrap(), 3);
            if mc == Some(WeakComposition::new(vec![1, 3, 1])) {
                Ok(())
            } else {
                Err(format!("maxcomp(23223) = {mc:?}"))
            }
        }),
        ("row-frank-sets", || {
            let w: Vec<String> = row_frank_words(&WeakComposition::new(vec![0, 3, 2]))
                .iter()
                .map(|u| u.to_string())
                .collect();
            let mut expect = vec![
                "33222", "33122", "33112", "33111", "23111", "23112", "23122", "22111", "22112",
            ];
            expect.sort();
            let mut got = w.clone();
            got.sort();
            if got != expect {
                return Err(format!("W(032) = {w:?}"));
            }
            let yw: Vec<String> = young_row_frank_words(&WeakComposition::new(vec![2, 3, 0]))
                .map_err(|e| e.to_string())?
                .iter()
                .map(|u| u.to_string())
                .collect();
            let mut expect = vec![
                "22211", "22311", "23311", "33311", "33312", "23312", "22312", "33322", "23322",
            ];
            expect.sort();
            let mut got = yw.clone();
            got.sort();
            if got != expect {
                return Err(format!("YW(230) = {yw:?}"));
            }
            Ok(())
        }),
        ("rfyc-21534", || {
            let bold: Vec<String> = rfyc(&Permutation::parse("21534").unwrap())
                .iter()
                .map(|r| r.to_string())
                .collect();
            let expect = [
                "(1)()(43)",
                "(1)(4)(3)",
                "(1)(43)()",
                "(41)()(3)",
                "(41)(3)()",
                "(431)()()",
            ];
            if bold == expect {
                Ok(())
            } else {
                Err(format!("RFYC(21534) = {bold:?}"))
            }
        }),
        ("family-counts", || {
            let checks: [(FamilyId, Shape, usize, usize); 6] = [
                (
                    FamilyId::Rct,
                    Shape::Comp(Composition::new(vec![1, 3]).unwrap()),
                    3,
                    10,
                ),
                (
                    FamilyId::Yct,
                    Shape::Comp(Composition::new(vec![1, 3]).unwrap()),
                    3,
                    5,
                ),
                (
                    FamilyId::Kssf,
                    Shape::Weak(WeakComposition::new(vec![0, 3, 2])),
                    3,
                    9,
                ),
                (
                    FamilyId::Ykssf,
                    Shape::Weak(WeakComposition::new(vec![2, 3, 0])),
                    3,
                    9,
                ),
                (
                    FamilyId::Qf,
                    Shape::Weak(WeakComposition::new(vec![1, 0, 3])),
                    3,
                    7,
                ),
                (
                    FamilyId::Ff,
                    Shape::Weak(WeakComposition::new(vec![1, 0, 3])),
                    3,
                    4,
                ),
            ];
            for (family, shape, n, count) in checks {
                let got = enumerate_family(family, &shape, n).unwrap().len();
                if got != count {
                    return Err(format!("{family} count {got}, expected {count}"));
                }
            }
            Ok(())
        }),
        ("pipe-dream-counts", || {
            let dreams = pipe_dreams(&Permutation::parse("31524").unwrap());
            if dreams.len() == 5 {
                Ok(())
            } else {
                Err(format!("|PD(31524)| = {}", dreams.len()))
            }
        }),
        ("module-golden", || {
            let a = WeakComposition::new(vec![2, 3, 0]);
            let trace = module_trace(&a, 3).map_err(|e| e.to_string())?;
            let ykey = gen_poly(FamilyId::Ykssf, &Shape::Weak(a.clone()), 3).unwrap();
            check_eq("module trace of 230", &trace, &ykey)?;
            let basis = young_key_module_basis(&a, 3).map_err(|e| e.to_string())?;
            let vectors: Vec<&FormalFillingVector> = basis.iter().map(|(_, v)| v).collect();
            if vectors_rank(&vectors) != 9 {
                return Err("rank of the Young key module basis of 230".into());
            }
            Ok(())
        }),
    ];
    let cases = items.len();
    let failures: Vec<String> = map_items(mode, items, |(name, f)| match f() {
        Ok(()) => vec![],
        Err(msg) => vec![format!("{name}: {msg}")],
    })
    .into_iter()
    .flatten()
    .collect();
    report("golden-values", cases, failures)
}

fn poly_from_digits(n: usize, digit_exps: &[&str]) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for s in digit_exps {
        let exp: Vec<u32> = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
        assert_eq!(exp.len(), n);
        p.add_term(&exp, 1.into());
    }
    p
}

fn check_eq(label: &str, got: &Polynomial, expect: &Polynomial) -> std::result::Result<(), String> {
    if got == expect {
        Ok(())
    } else {
        Err(format!("{label}: got {got}, expected {expect}"))
    }
}

fn golden_poly(
    family: FamilyId,
    a: &[u32],
    digit_exps: &[&str],
) -> std::result::Result<(), String> {
    let n = a.len();
    let p = gen_poly(family, &Shape::Weak(WeakComposition::new(a.to_vec())), n).unwrap();
    check_eq(family.name(), &p, &poly_from_digits(n, digit_exps))
}

fn golden_comp_poly(
    family: FamilyId,
    alpha: &[u32],
    digit_exps: &[&str],
) -> std::result::Result<(), String> {
    let n = digit_exps[0].len();
    let p = gen_poly(
        family,
        &Shape::Comp(Composition::new(alpha.to_vec()).unwrap()),
        n,
    )
    .unwrap();
    check_eq(family.name(), &p, &poly_from_digits(n, digit_exps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_wired() {
        for (name, _) in CHECKS {
            // unknown names error; known names dispatch
            assert!(run_check(
                name,
                &VerifyOpts {
                    n: Some(2),
                    max_len: Some(2),
                    max_size: Some(2),
                },
                ExecMode::Sequential
            )
            .is_ok());
        }
        assert!(run_check("nope", &VerifyOpts::default(), ExecMode::Sequential).is_err());
    }

    #[test]
    fn golden_values_pass() {
        let rep = golden_values(&VerifyOpts::default(), ExecMode::Sequential);
        assert!(rep.passed(), "{:?}", rep.failures);
    }
}
