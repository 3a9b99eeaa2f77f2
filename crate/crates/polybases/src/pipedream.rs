//! Pipe dreams: tilings of the staircase region `{(r, c) : r + c <= n}` by
//! crosses and elbows, rows numbered 1..n from the bottom. An elbow joins
//! west to south and north to east; a cross lets both strands pass through.
//! The pipe entering the west edge of row `i` exits the bottom edge at
//! column `w_i`. Young pipe dreams read the same tilings with the rows
//! relabeled top-to-bottom, so `YPD(w)` consists of the tilings of
//! `PD(rev(w))` with reversed weights.

use crate::composition::WeakComposition;
use crate::permutation::Permutation;
use crate::polynomial::Polynomial;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PipeDream {
    n: usize,
    /// Cross positions `(row, col)`, 1-based with `row + col <= n`.
    crosses: BTreeSet<(usize, usize)>,
    /// When set, rendering and `weight` use the Young row relabeling.
    young: bool,
}

impl PipeDream {
    pub fn new(n: usize, crosses: BTreeSet<(usize, usize)>, young: bool) -> Self {
        debug_assert!(crosses.iter().all(|&(r, c)| r + c <= n));
        PipeDream { n, crosses, young }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self) -> &BTreeSet<(usize, usize)> {
        &self.crosses
    }

    pub fn is_young(&self) -> bool {
        self.young
    }

    /// The wire permutation: trace each pipe from the west edge to the
    /// bottom edge.
    pub fn permutation(&self) -> Permutation {
        let n = self.n;
        let mut word = vec![0usize; n];
        for start in 1..=n {
            // enter tile (start, 1) heading east
            let (mut r, mut c) = (start, 1usize);
            let mut heading_east = true;
            loop {
                if r == 0 {
                    word[start - 1] = c;
                    break;
                }
                let cross = self.crosses.contains(&(r, c));
                if cross {
                    // pass straight through
                    if heading_east {
                        c += 1;
                    } else {
                        r -= 1;
                    }
                } else {
                    // elbow: west-to-south or north-to-east
                    if heading_east {
                        r -= 1;
                        heading_east = false;
                    } else {
                        c += 1;
                        heading_east = true;
                    }
                }
            }
        }
        Permutation::new(word).expect("pipes induce a permutation")
    }

    /// Crosses per row, rows numbered 1..n bottom-up.
    pub fn weight_standard(&self) -> WeakComposition {
        let mut parts = vec![0u32; self.n];
        for &(r, _) in &self.crosses {
            parts[r - 1] += 1;
        }
        WeakComposition::new(parts)
    }

    /// Crosses per row counted from the top: the Young weight.
    pub fn weight_young(&self) -> WeakComposition {
        self.weight_standard().rev()
    }

    pub fn weight(&self) -> WeakComposition {
        if self.young {
            self.weight_young()
        } else {
            self.weight_standard()
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let crosses: Vec<[usize; 2]> = self.crosses.iter().map(|&(r, c)| [r, c]).collect();
        serde_json::json!({
            "n": self.n,
            "young": self.young,
            "crosses": crosses,
        })
    }
}

impl fmt::Display for PipeDream {
    /// Rows printed top to bottom: `+` for a cross, `.` for an elbow, with
    /// the row label in front.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in (1..=self.n).rev().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let label = if self.young { self.n + 1 - r } else { r };
            write!(f, "{label:>2} ")?;
            for c in 1..=self.n + 1 - r {
                if self.crosses.contains(&(r, c)) {
                    write!(f, "+")?;
                } else {
                    write!(f, ".")?;
                }
            }
        }
        Ok(())
    }
}

fn staircase_cells(n: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for r in 1..=n {
        for c in 1..=n.saturating_sub(r) {
            cells.push((r, c));
        }
    }
    cells
}

/// All reduced pipe dreams for `w`: tilings with exactly `l(w)` crosses
/// whose wires realize `w`.
pub fn pipe_dreams(w: &Permutation) -> Vec<PipeDream> {
    let n = w.size();
    let cells = staircase_cells(n);
    let k = w.num_inversions();
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    fn rec(
        cells: &[(usize, usize)],
        start: usize,
        k: usize,
        chosen: &mut Vec<(usize, usize)>,
        n: usize,
        w: &Permutation,
        out: &mut Vec<PipeDream>,
    ) {
        if chosen.len() == k {
            let pd = PipeDream::new(n, chosen.iter().copied().collect(), false);
            if &pd.permutation() == w {
                out.push(pd);
            }
            return;
        }
        if cells.len() - start < k - chosen.len() {
            return;
        }
        for idx in start..cells.len() {
            chosen.push(cells[idx]);
            rec(cells, idx + 1, k, chosen, n, w, out);
            chosen.pop();
        }
    }
    rec(&cells, 0, k, &mut chosen, n, w, &mut out);
    out.sort();
    out
}

/// `sch_w` from pipe dreams.
pub fn schubert_pd(w: &Permutation) -> Polynomial {
    Polynomial::from_weights(w.size(), pipe_dreams(w).iter().map(|p| p.weight_standard()))
}

/// Young pipe dreams for `w`: the tilings of `PD(rev(w))`, flagged for the
/// Young row labeling.
pub fn young_pipe_dreams(w: &Permutation) -> Vec<PipeDream> {
    pipe_dreams(&w.rev())
        .into_iter()
        .map(|p| PipeDream::new(p.n, p.crosses, true))
        .collect()
}

/// `ysch_w` from Young pipe dreams.
pub fn young_schubert_pd(w: &Permutation) -> Polynomial {
    Polynomial::from_weights(w.size(), young_pipe_dreams(w).iter().map(|p| p.weight()))
}

/// For vexillary `w`, the Schubert polynomial is the key polynomial at the
/// Lehmer code; this checks that identity directly.
pub fn vexillary_identity_check(w: &Permutation) -> bool {
    let key = crate::filling::gen_poly_weak(crate::filling::FamilyId::Kssf, &w.lehmer())
        .expect("Lehmer code has the right length");
    schubert_pd(w) == key
}
