//! Crystal operators `e_a, f_a` and ⋆-crystal operators `e_a^⋆, f_a^⋆`.
//!
//! `f_a` and `e_a` keep every corigging outside the changed row fixed; the
//! ⋆-operators keep every rigging outside the changed row fixed. Adding a box
//! to a row of length `ℓ` in `ν^(a)` moves `p_i^(b)` by `−A_ba` exactly when
//! `i > ℓ`, so fixing coriggings means shifting those riggings by the same
//! amount.

use crate::cartan::{BorcherdsCartanDatum, Index};

use super::{RiggedConfiguration, Row};

impl RiggedConfiguration {
    /// Shifts the rigging of every row (other than `skip` in `ν^(a)`) whose
    /// length passes `affected` by `sign · A_ba`.
    fn shift_riggings(
        &mut self,
        datum: &BorcherdsCartanDatum,
        a: Index,
        skip: Option<usize>,
        sign: i64,
        affected: impl Fn(u32) -> bool,
    ) {
        for b in datum.indices() {
            let delta = sign * datum.entry(b, a);
            if delta == 0 {
                continue;
            }
            for (k, row) in self.part_mut(b).rows_mut().iter_mut().enumerate() {
                if b == a && Some(k) == skip {
                    continue;
                }
                if affected(row.length) {
                    row.rigging += delta;
                }
            }
        }
    }

    /// The crystal operator `f_a`. It never vanishes on rigged configurations.
    ///
    /// For real `a` the box goes on a longest row whose rigging is the
    /// smallest rigging `x = min(0, …)`, a new row when that minimum is only
    /// attained by the implicit empty rows. For imaginary `a` the box always
    /// starts a new row.
    pub fn f(&self, datum: &BorcherdsCartanDatum, a: Index) -> RiggedConfiguration {
        self.f_impl(datum, a, true)
    }

    /// `f_a` without the rigging shift on unchanged rows. Not a crystal
    /// operator; kept for checker self-tests.
    pub(crate) fn f_unshifted(&self, datum: &BorcherdsCartanDatum, a: Index) -> RiggedConfiguration {
        self.f_impl(datum, a, false)
    }

    fn f_impl(&self, datum: &BorcherdsCartanDatum, a: Index, shift: bool) -> RiggedConfiguration {
        let half = datum.half_diagonal(a);
        let part = self.part(a);
        let (chosen, ell, x) = if datum.is_imaginary(a) {
            (None, 0, 0)
        } else {
            let x = part.riggings().min().unwrap_or(0).min(0);
            // Rows are sorted by length descending, so the first hit is longest.
            let chosen = part.rows().iter().position(|r| r.rigging == x);
            (chosen, chosen.map_or(0, |p| part.rows()[p].length), x)
        };

        let mut out = self.clone();
        if shift {
            out.shift_riggings(datum, a, chosen, -1, |len| len > ell);
        }
        let rows = out.part_mut(a).rows_mut();
        match chosen {
            Some(p) => {
                rows[p].length += 1;
                rows[p].rigging = x - half;
            }
            None => rows.push(Row::new(1, x - half)),
        }
        out.part_mut(a).normalize();
        out
    }

    /// The crystal operator `e_a`, or `None` for the null result.
    pub fn e(&self, datum: &BorcherdsCartanDatum, a: Index) -> Option<RiggedConfiguration> {
        let half = datum.half_diagonal(a);
        let part = self.part(a);
        let x = if datum.is_real(a) {
            let x = part.riggings().min().unwrap_or(0).min(0);
            if x == 0 {
                return None;
            }
            x
        } else {
            let x = part.riggings().min()?;
            if x != -half {
                return None;
            }
            x
        };
        // Last hit is a shortest row with rigging x.
        let p = part.rows().iter().rposition(|r| r.rigging == x)?;
        let ell = part.rows()[p].length;

        let mut out = self.clone();
        out.shift_riggings(datum, a, Some(p), 1, |len| len >= ell);
        let row = &mut out.part_mut(a).rows_mut()[p];
        row.length -= 1;
        row.rigging = x + half;
        out.part_mut(a).normalize();
        Some(out)
    }

    /// The ⋆-crystal operator `f_a^⋆`: the dual of [`f`](Self::f) with
    /// coriggings in place of riggings. It never vanishes.
    pub fn f_star(&self, datum: &BorcherdsCartanDatum, a: Index) -> RiggedConfiguration {
        let half = datum.half_diagonal(a);
        let (chosen, x) = if datum.is_imaginary(a) {
            (None, 0)
        } else {
            let cor = self.coriggings(datum, a);
            let x = cor.iter().copied().min().unwrap_or(0).min(0);
            (cor.iter().position(|&c| c == x), x)
        };

        let mut out = self.clone();
        let rows = out.part_mut(a).rows_mut();
        let p = match chosen {
            Some(p) => {
                rows[p].length += 1;
                p
            }
            None => {
                rows.push(Row::new(1, 0));
                rows.len() - 1
            }
        };
        let length = out.part(a).rows()[p].length;
        let vacancy = out.vacancy(datum, a, length);
        out.part_mut(a).rows_mut()[p].rigging = vacancy - (x - half);
        out.part_mut(a).normalize();
        out
    }

    /// The ⋆-crystal operator `e_a^⋆`, or `None` for the null result.
    ///
    /// The shortened row gets corigging `x + A_aa/2`, the dual of the rigging
    /// rule of [`e`](Self::e); this is what makes `e_a^⋆ = ⋆ ∘ e_a ∘ ⋆`.
    pub fn e_star(&self, datum: &BorcherdsCartanDatum, a: Index) -> Option<RiggedConfiguration> {
        let half = datum.half_diagonal(a);
        let cor = self.coriggings(datum, a);
        let x = if datum.is_real(a) {
            let x = cor.iter().copied().min().unwrap_or(0).min(0);
            if x == 0 {
                return None;
            }
            x
        } else {
            let x = cor.iter().copied().min()?;
            if x != -half {
                return None;
            }
            x
        };
        let p = cor.iter().rposition(|&c| c == x)?;

        let mut out = self.clone();
        let row = &mut out.part_mut(a).rows_mut()[p];
        row.length -= 1;
        let length = row.length;
        if length > 0 {
            let vacancy = out.vacancy(datum, a, length);
            out.part_mut(a).rows_mut()[p].rigging = vacancy - (x + half);
        }
        out.part_mut(a).normalize();
        Some(out)
    }

    /// Applies `f_a` for each index of `word`, rightmost first, matching the
    /// composition `f_{a_1} ⋯ f_{a_r}`.
    pub fn f_word(&self, datum: &BorcherdsCartanDatum, word: &[Index]) -> RiggedConfiguration {
        word.iter().rev().fold(self.clone(), |rc, &a| rc.f(datum, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn d2() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::new(&["1", "2"], &[vec![-2, -1], vec![-1, -2]]).unwrap()
    }

    fn sl2() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::new(&["1"], &[vec![2]]).unwrap()
    }

    fn riggings(rc: &RiggedConfiguration, a: Index) -> Vec<i64> {
        rc.part(a).riggings().collect()
    }

    #[test]
    fn worked_example_f() {
        let d = d2();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        let rc = RiggedConfiguration::empty(&d).f_word(&d, &[one, one, one, two]);
        assert_eq!(riggings(&rc, one), vec![5, 3, 1]);
        assert_eq!(riggings(&rc, two), vec![4]);

        let g = rc.f(&d, two);
        assert_eq!(riggings(&g, one), vec![6, 4, 2]);
        assert_eq!(riggings(&g, two), vec![6, 1]);
    }

    #[test]
    fn worked_example_f_star() {
        let d = d2();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        let rc = RiggedConfiguration::empty(&d).f_word(&d, &[one, one, one, two]);
        let g = rc.f_star(&d, two);
        assert_eq!(riggings(&g, one), vec![5, 3, 1]);
        assert_eq!(g.vacancy(&d, one, 1), 8);
        assert_eq!(riggings(&g, two), vec![6, 4]);
    }

    #[test]
    fn worked_example_e() {
        let d = d2();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        let empty = RiggedConfiguration::empty(&d);
        let rc = empty.f_word(&d, &[one, one, one, two]);
        assert_eq!(rc.e(&d, one), Some(empty.f_word(&d, &[one, one, two])));
        assert_eq!(rc.e(&d, two), None);
    }

    #[test]
    fn sl2_operators() {
        let d = sl2();
        let a = d.index("1").unwrap();
        let empty = RiggedConfiguration::empty(&d);
        let one = empty.f(&d, a);
        assert_eq!(one, RiggedConfiguration::from_rows(&d, &[&[(1, -1)]]).unwrap());
        assert_eq!(one.f(&d, a), RiggedConfiguration::from_rows(&d, &[&[(2, -2)]]).unwrap());
        assert_eq!(empty.e(&d, a), None);
        assert_eq!(empty.e_star(&d, a), None);

        let s = empty.f_star(&d, a);
        assert_eq!(s, one);
        assert_eq!(s.corigging(&d, a, s.part(a).rows()[0]), -1);
    }

    #[test]
    fn e_star_dual_reading_on_two_boxes() {
        let d = sl2();
        let a = d.index("1").unwrap();
        let empty = RiggedConfiguration::empty(&d);
        let two = empty.f_star(&d, a).f_star(&d, a);
        assert_eq!(two.e_star(&d, a), Some(empty.f_star(&d, a)));
    }
}
