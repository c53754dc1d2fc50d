//! Crystal statistics on rigged configurations.

use crate::cartan::{BorcherdsCartanDatum, Index};

use super::RiggedConfiguration;

impl RiggedConfiguration {
    /// `ε_a = −min(0, smallest rigging)` for real `a`, `0` for imaginary `a`.
    pub fn epsilon(&self, datum: &BorcherdsCartanDatum, a: Index) -> i64 {
        if datum.is_imaginary(a) {
            return 0;
        }
        -self.part(a).riggings().min().unwrap_or(0).min(0)
    }

    /// `φ_a = p_∞^(a) + ε_a`.
    pub fn phi(&self, datum: &BorcherdsCartanDatum, a: Index) -> i64 {
        self.vacancy_infinity(datum, a) + self.epsilon(datum, a)
    }

    /// `ε_a^⋆ = −min(0, smallest corigging)` for real `a`, `0` for imaginary `a`.
    pub fn epsilon_star(&self, datum: &BorcherdsCartanDatum, a: Index) -> i64 {
        if datum.is_imaginary(a) {
            return 0;
        }
        -self.coriggings(datum, a).into_iter().min().unwrap_or(0).min(0)
    }

    pub fn phi_star(&self, datum: &BorcherdsCartanDatum, a: Index) -> i64 {
        self.vacancy_infinity(datum, a) + self.epsilon_star(datum, a)
    }

    /// `max{k ≥ 0 : e_a^k ≠ 0}`, by iteration.
    pub fn tilde_epsilon(&self, datum: &BorcherdsCartanDatum, a: Index) -> i64 {
        let mut k = 0;
        let mut cur = self.e(datum, a);
        while let Some(next) = cur {
            k += 1;
            cur = next.e(datum, a);
        }
        k
    }

    /// `max{k ≥ 0 : (e_a^⋆)^k ≠ 0}`, by iteration.
    pub fn tilde_epsilon_star(&self, datum: &BorcherdsCartanDatum, a: Index) -> i64 {
        let mut k = 0;
        let mut cur = self.e_star(datum, a);
        while let Some(next) = cur {
            k += 1;
            cur = next.e_star(datum, a);
        }
        k
    }

    /// The jump `κ_a`.
    pub fn kappa(&self, datum: &BorcherdsCartanDatum, a: Index) -> i64 {
        let pairing = self.vacancy_infinity(datum, a);
        if datum.is_real(a) {
            self.epsilon(datum, a) + self.epsilon_star(datum, a) + pairing
        } else {
            self.epsilon(datum, a) + self.tilde_epsilon_star(datum, a) * datum.entry(a, a) + pairing
        }
    }

    /// `κ_a^⋆`; equal to `κ_a` for real `a`.
    pub fn kappa_star(&self, datum: &BorcherdsCartanDatum, a: Index) -> i64 {
        let pairing = self.vacancy_infinity(datum, a);
        if datum.is_real(a) {
            self.epsilon(datum, a) + self.epsilon_star(datum, a) + pairing
        } else {
            self.epsilon_star(datum, a) + self.tilde_epsilon(datum, a) * datum.entry(a, a) + pairing
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn statistics_at_the_empty_configuration() {
        let d = BorcherdsCartanDatum::new(&["1", "2"], &[vec![2, -1], vec![-1, -2]]).unwrap();
        let rc = RiggedConfiguration::empty(&d);
        for a in d.indices() {
            assert_eq!(rc.epsilon(&d, a), 0);
            assert_eq!(rc.phi(&d, a), 0);
            assert_eq!(rc.epsilon_star(&d, a), 0);
            assert_eq!(rc.phi_star(&d, a), 0);
            assert_eq!(rc.tilde_epsilon(&d, a), 0);
            assert_eq!(rc.tilde_epsilon_star(&d, a), 0);
            assert_eq!(rc.kappa(&d, a), 0);
        }
    }

    #[test]
    fn sl2_statistics() {
        let d = BorcherdsCartanDatum::new(&["1"], &[vec![2]]).unwrap();
        let a = d.index("1").unwrap();
        let one = RiggedConfiguration::empty(&d).f(&d, a);
        assert_eq!(one.epsilon_star(&d, a), 1);
        assert_eq!(one.kappa(&d, a), 0);
        let two = one.f(&d, a);
        assert_eq!(two.epsilon(&d, a), 2);
        assert_eq!(two.phi(&d, a), -2);
        assert_eq!(two.tilde_epsilon(&d, a), 2);
    }

    #[test]
    fn purely_imaginary_statistics() {
        let d = BorcherdsCartanDatum::new(&["1", "2"], &[vec![-2, -1], vec![-1, -2]]).unwrap();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        let empty = RiggedConfiguration::empty(&d);
        let rc = empty.f_word(&d, &[one, one, one, two]);
        assert_eq!(rc.epsilon(&d, one), 0);
        assert_eq!(rc.phi(&d, one), 7);
        assert_eq!(rc.epsilon_star(&d, two), 0);

        assert_eq!(empty.f(&d, one).kappa(&d, one), 0);

        // f_1 first, then f_2.
        let rc = empty.f_word(&d, &[two, one]);
        assert_eq!(rc.tilde_epsilon(&d, one), 0);
        assert_eq!(rc.tilde_epsilon(&d, two), 1);
        assert_eq!(rc.tilde_epsilon_star(&d, one), 1);
        assert_eq!(rc.tilde_epsilon_star(&d, two), 0);
    }
}
