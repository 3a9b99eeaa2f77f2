//! Coincidence classifiers: closed-form predicates deciding when a Young
//! basis element is also an element of its reverse counterpart (and vice
//! versa). Each predicate has a brute-force companion in the verification
//! suites that compares it against direct polynomial equality.

use crate::composition::{Composition, WeakComposition};
use crate::{Error, Result};

/// `YQS_alpha(x_1..x_n)` equals some quasisymmetric Schur polynomial iff
/// all parts agree, or all parts are 1 or 2, or `n` equals the length and
/// consecutive parts differ by at most one.
pub fn yqs_equals_qs(alpha: &Composition, n: usize) -> Result<bool> {
    if alpha.len() > n {
        return Err(Error::ShapeMismatch(format!(
            "composition {alpha} has more than {n} parts"
        )));
    }
    let p = alpha.parts();
    let all_same = p.windows(2).all(|w| w[0] == w[1]);
    let all_one_two = p.iter().all(|&x| x == 1 || x == 2);
    let tight = n == alpha.len() && p.windows(2).all(|w| w[0].abs_diff(w[1]) <= 1);
    Ok(all_same || all_one_two || tight)
}

/// `key_a` equals some Young key polynomial iff it is a Schur polynomial,
/// which happens exactly when `a` is weakly increasing.
pub fn key_is_young_key(a: &WeakComposition) -> bool {
    a.is_weakly_increasing()
}

/// `ykey_a` equals some key polynomial iff `a` is weakly decreasing.
pub fn young_key_is_key(a: &WeakComposition) -> bool {
    a.is_weakly_decreasing()
}

/// `yatom_a` is also a Demazure atom iff adjacent parts differ by at most
/// one (both sides are then the bare monomial).
pub fn atom_equals_young_atom(a: &WeakComposition) -> bool {
    a.parts().windows(2).all(|w| w[0].abs_diff(w[1]) <= 1)
}

/// `yqk_a` is also a quasi-key polynomial iff `a` is equal parts followed
/// by zeros, or ones and twos followed by zeros, or has no zero part with
/// consecutive parts differing by at most one.
pub fn qkey_equals_young_qkey(a: &WeakComposition) -> bool {
    let p = a.parts();
    let nonzero_prefix = {
        let mut seen_zero = false;
        p.iter().all(|&x| {
            if x == 0 {
                seen_zero = true;
                true
            } else {
                !seen_zero
            }
        })
    };
    let prefix: Vec<u32> = p.iter().copied().take_while(|&x| x > 0).collect();
    let equal_then_zeros = nonzero_prefix && prefix.windows(2).all(|w| w[0] == w[1]);
    let ones_twos_then_zeros = nonzero_prefix && prefix.iter().all(|&x| x == 1 || x == 2);
    let no_zero_tight = p.iter().all(|&x| x > 0) && p.windows(2).all(|w| w[0].abs_diff(w[1]) <= 1);
    equal_then_zeros || ones_twos_then_zeros || no_zero_tight
}

/// `yfp_a` is also a fundamental particle iff no zero part of `a` is
/// adjacent to a part of size at least two.
pub fn particle_equals_young_particle(a: &WeakComposition) -> bool {
    a.parts()
        .windows(2)
        .all(|w| !((w[0] == 0 && w[1] >= 2) || (w[0] >= 2 && w[1] == 0)))
}

/// `fs_a` is a fundamental quasisymmetric polynomial (hence also a Young
/// fundamental slide) iff every zero part precedes every nonzero part.
/// The same condition governs the monomial slides.
pub fn slide_is_quasisymmetric(a: &WeakComposition) -> bool {
    let first_nonzero = a.parts().iter().position(|&x| x > 0);
    match first_nonzero {
        None => true,
        Some(k) => a.parts()[k..].iter().all(|&x| x > 0),
    }
}

/// `yfs_a` is a fundamental quasisymmetric polynomial (hence also a
/// reverse slide) iff every zero part trails every nonzero part.
pub fn young_slide_is_quasisymmetric(a: &WeakComposition) -> bool {
    slide_is_quasisymmetric(&a.rev())
}
