//! Exhaustive checkers for the abstract-crystal axioms and for the
//! recognition conditions characterizing `B(∞)`, run on finite truncations.
//!
//! Every condition that mentions an operator image is only asserted where the
//! image lies inside the generated truncation.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::cartan::{BorcherdsCartanDatum, Index, Weight};
use crate::crystal::{closure, rc_infinity_layers, rc_star_layers, Bicrystal, Crystal, Dual, Primal, RcInfinity};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("depth {0} is too small, the recognition conditions need depth at least 2")]
    DepthTooSmall(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub element: String,
    pub indices: String,
}

/// Outcome of one named condition over a finite set of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub condition: String,
    pub checked: usize,
    pub failures: usize,
    pub counterexample: Option<Counterexample>,
    /// Elements of depth at most this were checked.
    pub interior_depth: usize,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Accumulates pass/fail results, keeping the first counterexample.
#[derive(Debug)]
pub struct ReportBuilder {
    report: CheckReport,
}

impl ReportBuilder {
    pub fn new(condition: &str) -> Self {
        ReportBuilder {
            report: CheckReport {
                condition: condition.into(),
                checked: 0,
                failures: 0,
                counterexample: None,
                interior_depth: 0,
            },
        }
    }

    pub fn with_depth(mut self, depth: usize) -> Self {
        self.report.interior_depth = depth;
        self
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> (String, String)) {
        self.report.checked += 1;
        if !ok {
            self.report.failures += 1;
            if self.report.counterexample.is_none() {
                let (element, indices) = witness();
                self.report.counterexample = Some(Counterexample { element, indices });
            }
        }
    }

    pub fn finish(self) -> CheckReport {
        self.report
    }
}

fn weight_plus_root(datum: &BorcherdsCartanDatum, w: &Weight, a: Index) -> Option<Weight> {
    Some(Weight { offset: w.offset.clone(), root: w.root.add_root(datum, a).ok()? })
}

fn weight_minus_root(w: &Weight, a: Index) -> Weight {
    Weight { offset: w.offset.clone(), root: w.root.sub_root(a) }
}

/// The seven abstract-crystal axioms on a layered truncation: `layers[k]`
/// holds the elements of depth `k`. Statements about `f_a v` are checked on
/// every layer but the last.
pub fn check_crystal_axioms<C: Crystal>(c: &C, layers: &[Vec<C::Elem>], prefix: &str) -> Vec<CheckReport> {
    let datum = c.datum();
    let depth = layers.len().saturating_sub(1);
    let interior = depth.saturating_sub(1);
    let names = [
        "1-wt-e",
        "2-wt-f",
        "3-phi-eps-wt",
        "4-e-f-inverse",
        "5-e-string-shift",
        "6-f-string-shift",
        "7-neg-infinity-null",
    ];
    let mut reps: Vec<ReportBuilder> = names
        .iter()
        .enumerate()
        .map(|(k, n)| {
            let d = if k == 1 || k == 5 { interior } else { depth };
            ReportBuilder::new(&format!("{}axiom-{}", prefix, n)).with_depth(d)
        })
        .collect();

    for (level, layer) in layers.iter().enumerate() {
        let inner = level < depth;
        for v in layer {
            let wt = c.weight(v);
            for a in datum.indices() {
                let real = datum.is_real(a);
                let aa = datum.entry(a, a);
                let witness = || (format!("{:?}", v), String::from(datum.label(a)));
                let (eps, phi) = (c.epsilon(v, a), c.phi(v, a));
                let ev = c.e(v, a);
                let fv = if inner { c.f(v, a) } else { None };

                if let Some(u) = &ev {
                    reps[0].record(Some(c.weight(u)) == weight_plus_root(datum, &wt, a), witness);
                    reps[3].record(c.f(u, a).as_ref() == Some(v), witness);
                    let (de, dp) = if real { (-1, 1) } else { (0, aa) };
                    reps[4].record(c.epsilon(u, a) == eps + de && c.phi(u, a) == phi + dp, witness);
                }
                if let Some(w) = &fv {
                    reps[1].record(c.weight(w) == weight_minus_root(&wt, a), witness);
                    reps[3].record(c.e(w, a).as_ref() == Some(v), witness);
                    let (de, dp) = if real { (1, -1) } else { (0, -aa) };
                    reps[5].record(c.epsilon(w, a) == eps + de && c.phi(w, a) == phi + dp, witness);
                }
                reps[2].record(phi == eps + wt.pairing(datum, a), witness);
                if !phi.is_finite() {
                    let null = ev.is_none() && (!inner || c.f(v, a).is_none());
                    reps[6].record(null, witness);
                } else {
                    reps[6].record(true, witness);
                }
            }
        }
    }
    reps.into_iter().map(ReportBuilder::finish).collect()
}

/// [`check_crystal_axioms`] for both the `f` and the `f⋆` structure of
/// `RC(∞)` at `depth`.
pub fn check_axioms(datum: &BorcherdsCartanDatum, depth: usize) -> Vec<CheckReport> {
    let model = RcInfinity::new(datum);
    let mut out = check_crystal_axioms(&Primal(&model), &rc_infinity_layers(datum, depth), "f:");
    out.extend(check_crystal_axioms(&Dual(&model), &rc_star_layers(datum, depth), "f*:"));
    out
}

/// [`check_axioms`] for an arbitrary bicrystal, closing under its own
/// `f` and `f⋆` separately.
pub fn check_bicrystal_axioms<B: Bicrystal>(model: &B, depth: usize) -> Vec<CheckReport> {
    let datum = model.datum();
    let primal = closure(model.highest(), depth, |v| datum.indices().filter_map(|a| model.f(v, a)).collect());
    let dual = closure(model.highest(), depth, |v| datum.indices().filter_map(|a| model.f_star(v, a)).collect());
    let mut out = check_crystal_axioms(&Primal(model), &primal, "f:");
    out.extend(check_crystal_axioms(&Dual(model), &dual, "f*:"));
    out
}

/// Closure of the highest element under both `f_a` and `f_a^⋆`.
pub fn bicrystal_layers<B: Bicrystal>(model: &B, depth: usize) -> Vec<Vec<B::Elem>> {
    let datum = model.datum();
    closure(model.highest(), depth, |v| {
        datum.indices().flat_map(|a| [model.f(v, a), model.f_star(v, a)]).flatten().collect()
    })
}

/// The recognition conditions, verified on all elements of depth at most
/// `depth − 2` inside the joint `f`/`f⋆` closure to `depth`.
pub fn check_recognition_model<B: Bicrystal>(model: &B, depth: usize) -> Result<Vec<CheckReport>, CheckError> {
    if depth < 2 {
        return Err(CheckError::DepthTooSmall(depth));
    }
    let datum = model.datum();
    let interior = depth - 2;
    let layers = bicrystal_layers(model, depth);
    let names = [
        "1-f-and-f*-nonnull",
        "2-f*a-fb-commute",
        "2-tilde-eps*-a-of-fb",
        "2-tilde-eps-b-of-f*a",
        "3-kappa-zero-f-equals-f*",
        "4a-real-kappa-nonnegative",
        "4b-real-kappa-ge-1-eps-preserved",
        "4c-real-kappa-ge-2-f-f*-commute",
        "5-imaginary-kappa-positive",
        "6-imaginary-kappa-zero-iff-kappa*-zero",
    ];
    let mut reps: Vec<ReportBuilder> =
        names.iter().map(|n| ReportBuilder::new(&format!("recognition-{}", n)).with_depth(interior)).collect();

    let elements = layers.iter().take(interior + 1).flatten();
    for v in elements {
        for a in datum.indices() {
            let w_a = || (format!("{:?}", v), String::from(datum.label(a)));
            let fa = model.f(v, a);
            let fsa = model.f_star(v, a);
            reps[0].record(fa.is_some() && fsa.is_some(), w_a);
            let (Some(fa), Some(fsa)) = (fa, fsa) else { continue };

            for b in datum.indices().filter(|&b| b != a) {
                let w_ab = || (format!("{:?}", v), format!("{},{}", datum.label(a), datum.label(b)));
                let fb = model.f(v, b);
                let lhs = fb.as_ref().and_then(|w| model.f_star(w, a));
                let rhs = model.f(&fsa, b);
                reps[1].record(lhs.is_some() && lhs == rhs, w_ab);
                if let Some(fb) = &fb {
                    reps[2].record(model.tilde_epsilon_star(fb, a) == model.tilde_epsilon_star(v, a), w_ab);
                }
                reps[3].record(model.tilde_epsilon(&fsa, b) == model.tilde_epsilon(v, b), w_ab);
            }

            let kappa = model.kappa(v, a);
            if kappa == 0 {
                reps[4].record(fa == fsa, w_a);
            }
            if datum.is_real(a) {
                reps[5].record(kappa >= 0, w_a);
                if kappa >= 1 {
                    let ok = model.epsilon_star(&fa, a) == model.epsilon_star(v, a)
                        && model.epsilon(&fsa, a) == model.epsilon(v, a);
                    reps[6].record(ok, w_a);
                }
                if kappa >= 2 {
                    reps[7].record(model.f(&fsa, a) == model.f_star(&fa, a), w_a);
                }
            } else {
                if kappa > 0 {
                    let ok = model.tilde_epsilon_star(&fa, a) == model.tilde_epsilon_star(v, a)
                        && model.f(&fsa, a) == model.f_star(&fa, a);
                    reps[8].record(ok, w_a);
                }
                reps[9].record((kappa == 0) == (model.kappa_star(v, a) == 0), w_a);
            }
        }
    }
    Ok(reps.into_iter().map(ReportBuilder::finish).collect())
}

/// [`check_recognition_model`] on `RC(∞)`.
pub fn check_recognition(datum: &BorcherdsCartanDatum, depth: usize) -> Result<Vec<CheckReport>, CheckError> {
    check_recognition_model(&RcInfinity::new(datum), depth)
}

/// Distinct elements of a layered closure, for quick set comparisons.
pub fn element_set<T: Clone + Ord>(layers: &[Vec<T>]) -> BTreeSet<T> {
    layers.iter().flatten().cloned().collect()
}

pub mod mutation {
    //! Deliberately broken variants of `RC(∞)`, used to show that the
    //! checkers can fail.

    use crate::cartan::{BorcherdsCartanDatum, Index, RootWeight};
    use crate::crystal::{Bicrystal, RcInfinity};
    use crate::rigged::RiggedConfiguration;

    /// `f_a` adds its box but leaves every other rigging untouched, so
    /// coriggings of unchanged rows drift.
    #[derive(Clone, Copy, Debug)]
    pub struct SkipCoriggingShift<'d>(pub RcInfinity<'d>);

    /// `ε_a` and `ε_a^⋆` are off by one while `φ_a` and `φ_a^⋆` are not.
    #[derive(Clone, Copy, Debug)]
    pub struct ShiftedEpsilon<'d>(pub RcInfinity<'d>);

    macro_rules! delegate {
        ($ty:ident { $($over:item)* }) => {
            impl Bicrystal for $ty<'_> {
                type Elem = RiggedConfiguration;
                fn datum(&self) -> &BorcherdsCartanDatum { self.0.datum }
                fn highest(&self) -> RiggedConfiguration { self.0.highest() }
                fn e(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> { self.0.e(v, a) }
                fn e_star(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> { self.0.e_star(v, a) }
                fn f_star(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> { self.0.f_star(v, a) }
                fn phi(&self, v: &RiggedConfiguration, a: Index) -> i64 { self.0.phi(v, a) }
                fn phi_star(&self, v: &RiggedConfiguration, a: Index) -> i64 { self.0.phi_star(v, a) }
                fn weight(&self, v: &RiggedConfiguration) -> RootWeight { self.0.weight(v) }
                $($over)*
            }
        };
    }

    delegate! {
        SkipCoriggingShift {
            fn f(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> {
                Some(v.f_unshifted(self.0.datum, a))
            }
            fn epsilon(&self, v: &RiggedConfiguration, a: Index) -> i64 {
                self.0.epsilon(v, a)
            }
            fn epsilon_star(&self, v: &RiggedConfiguration, a: Index) -> i64 {
                self.0.epsilon_star(v, a)
            }
        }
    }

    delegate! {
        ShiftedEpsilon {
            fn f(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> {
                self.0.f(v, a)
            }
            fn epsilon(&self, v: &RiggedConfiguration, a: Index) -> i64 {
                self.0.epsilon(v, a) + 1
            }
            fn epsilon_star(&self, v: &RiggedConfiguration, a: Index) -> i64 {
                self.0.epsilon_star(v, a) + 1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::mutation::*;
    use super::*;
    use alloc::vec;

    fn data() -> Vec<BorcherdsCartanDatum> {
        [vec![vec![2]], vec![vec![-2, -1], vec![-1, -2]], vec![vec![2, -1], vec![-1, -2]]]
            .iter()
            .map(|m| {
                let labels: Vec<String> = (1..=m.len()).map(|i| format!("{}", i)).collect();
                BorcherdsCartanDatum::new(&labels, m).unwrap()
            })
            .collect()
    }

    #[test]
    fn axioms_hold_at_depth_four() {
        for d in data() {
            for r in check_axioms(&d, 4) {
                assert!(r.passed(), "{:?}", r);
                assert!(r.checked > 0 || r.condition.contains("5-") || r.condition.contains("7-"), "{:?}", r);
            }
        }
    }

    #[test]
    fn recognition_holds_at_depth_four() {
        for d in data() {
            for r in check_recognition(&d, 4).unwrap() {
                assert!(r.passed(), "{:?}", r);
            }
        }
    }

    #[test]
    fn recognition_needs_depth_two() {
        let d = &data()[0];
        assert_eq!(check_recognition(d, 1), Err(CheckError::DepthTooSmall(1)));
    }

    #[test]
    fn empty_truncation_passes_vacuously() {
        let d = &data()[0];
        let model = RcInfinity::new(d);
        let layers: Vec<Vec<crate::rigged::RiggedConfiguration>> = Vec::new();
        assert!(check_crystal_axioms(&Primal(&model), &layers, "").iter().all(|r| r.passed() && r.checked == 0));
    }

    #[test]
    fn shifted_epsilon_breaks_axiom_three() {
        for d in data() {
            let m = ShiftedEpsilon(RcInfinity::new(&d));
            let reports = check_bicrystal_axioms(&m, 3);
            let three = reports.iter().find(|r| r.condition == "f:axiom-3-phi-eps-wt").unwrap();
            assert!(!three.passed());
            assert!(three.counterexample.is_some());
        }
    }

    #[test]
    fn skipping_the_corigging_shift_breaks_condition_two() {
        let d = &data()[1];
        let m = SkipCoriggingShift(RcInfinity::new(d));
        let reports = check_recognition_model(&m, 4).unwrap();
        assert!(reports.iter().filter(|r| r.condition.starts_with("recognition-2")).any(|r| !r.passed()));
    }
}
