//! Randomized property tests over words, fillings and polynomials.

use polybases::composition::WeakComposition;
use polybases::filling::{theta, Filling};
use polybases::operators::{partial, pi, pihat};
use polybases::polynomial::{Coeff, Polynomial};
use polybases::tableau::schensted_insert;
use polybases::word::Word;
use proptest::prelude::*;

fn word_strategy(max_len: usize, alphabet: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=alphabet, 0..=max_len).prop_map(Word::new)
}

fn poly_strategy(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, n), -4i64..=4), 0..6).prop_map(
        move |terms| {
            let mut p = Polynomial::zero(n);
            for (exp, c) in terms {
                p.add_term(&exp, Coeff::from(c));
            }
            p
        },
    )
}

proptest! {
    #[test]
    fn knuth_moves_preserve_insertion(w in word_strategy(6, 4)) {
        let t = schensted_insert(&w);
        for v in w.knuth_neighbors() {
            prop_assert_eq!(schensted_insert(&v), t.clone());
        }
    }

    #[test]
    fn frev_word_involution(w in word_strategy(6, 4)) {
        let f = w.frev(4).unwrap();
        prop_assert_eq!(f.frev(4).unwrap(), w.clone());
        prop_assert_eq!(f.weight(4), w.weight(4).rev());
    }

    #[test]
    fn frev_respects_knuth(w in word_strategy(5, 4)) {
        // v ~ v' iff frev(v) ~ frev(v'), checked through class images
        let image: std::collections::BTreeSet<Word> =
            w.knuth_class().into_iter().map(|v| v.frev(4).unwrap()).collect();
        prop_assert_eq!(image, w.frev(4).unwrap().knuth_class());
    }

    #[test]
    fn colform_runs_cut_at_weak_ascents(w in word_strategy(8, 4)) {
        let runs = w.column_runs();
        let flat: Vec<u32> = runs.iter().flatten().copied().collect();
        prop_assert_eq!(&flat[..], w.letters());
        for run in &runs {
            prop_assert!(run.windows(2).all(|p| p[0] > p[1]));
        }
        for pair in runs.windows(2) {
            prop_assert!(pair[0].last().unwrap() <= pair[1].first().unwrap());
        }
    }

    #[test]
    fn theta_involution_on_arbitrary_fillings(
        lens in prop::collection::vec(0usize..4, 1..=4),
    ) {
        let n = lens.len();
        let rows: Vec<Vec<u32>> = lens
            .iter()
            .enumerate()
            .map(|(i, &l)| (0..l).map(|k| ((i + k) % n) as u32 + 1).collect())
            .collect();
        let f = Filling::new(rows);
        let g = theta(&f, n).unwrap();
        prop_assert_eq!(theta(&g, n).unwrap(), f.clone());
        prop_assert_eq!(g.weight(n), f.weight(n).rev());
        let mut rev_shape = f.shape();
        rev_shape.reverse();
        prop_assert_eq!(g.shape(), rev_shape);
    }

    #[test]
    fn reverse_variables_involution(p in poly_strategy(4)) {
        prop_assert_eq!(p.reverse_variables().reverse_variables(), p);
    }

    #[test]
    fn divided_difference_division_identity(p in poly_strategy(3), i in 1usize..3) {
        // (x_i - x_{i+1}) * partial_i(p) = p - s_i(p)
        let d = partial(i, &p).unwrap();
        let lhs = d.mul_var(i).unwrap().sub(&d.mul_var(i + 1).unwrap());
        prop_assert_eq!(lhs, p.sub(&p.swap_vars(i).unwrap()));
    }

    #[test]
    fn demazure_operators_idempotent_type(exp in prop::collection::vec(0u32..5, 3), i in 1usize..3) {
        let f = Polynomial::monomial(3, &exp, Coeff::from(1));
        let once = pi(i, &f).unwrap();
        prop_assert_eq!(pi(i, &once).unwrap(), once);
        let hat = pihat(i, &f).unwrap();
        prop_assert_eq!(pihat(i, &hat).unwrap(), hat);
    }

    #[test]
    fn polynomial_json_round_trip(p in poly_strategy(3)) {
        prop_assert_eq!(Polynomial::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn weak_composition_sorting(parts in prop::collection::vec(0u32..5, 1..6)) {
        let a = WeakComposition::new(parts);
        let (w, word) = a.sorting_permutation_desc();
        prop_assert_eq!(a.act(&w).unwrap(), a.sorted_desc());
        prop_assert_eq!(w.num_inversions(), word.len());
        let (v, word_v) = a.sorting_permutation_asc();
        prop_assert_eq!(a.act(&v).unwrap(), a.sorted_asc());
        prop_assert_eq!(v.num_inversions(), word_v.len());
    }
}
