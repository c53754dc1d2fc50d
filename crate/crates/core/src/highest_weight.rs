//! The highest-weight crystal `RC(λ)` and its two characterizations: as the
//! component of `RC(∞) ⊗ T_λ ⊗ C` through `ν_∅ ⊗ t_λ ⊗ c`, and as the
//! elements of `RC(∞)` with bounded ⋆-statistics.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::cartan::{BorcherdsCartanDatum, DominantWeight, Index, Weight};
use crate::checks::{CheckReport, ReportBuilder};
use crate::crystal::{closure, rc_infinity_layers, Crystal, CrystalNode, NodeCrystal};
use crate::extended::ExtendedInt;
use crate::graph::isomorphism_check;
use crate::rigged::RiggedConfiguration;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("rigging {rigging} of a length-{length} row of index {index} exceeds p + <h, lambda> = {bound}")]
    PreconditionViolated { index: String, length: u32, rigging: i64, bound: i64 },
}

/// `RC(λ)`: rigged configurations with every rigging at most
/// `p_i^(a) + ⟨h_a, λ⟩`, generated by the cutoff operators `f′_a`.
#[derive(Clone, Debug)]
pub struct LambdaModel<'d> {
    pub datum: &'d BorcherdsCartanDatum,
    pub lambda: DominantWeight,
}

impl<'d> LambdaModel<'d> {
    pub fn new(datum: &'d BorcherdsCartanDatum, lambda: DominantWeight) -> Self {
        LambdaModel { datum, lambda }
    }

    /// The first row violating the rigging bound, if any.
    fn violation(&self, rc: &RiggedConfiguration) -> Option<LambdaError> {
        let d = self.datum;
        for a in d.indices() {
            for row in rc.part(a).rows() {
                let bound = rc.vacancy(d, a, row.length) + self.lambda.pairing(a);
                if row.rigging > bound {
                    return Some(LambdaError::PreconditionViolated {
                        index: d.label(a).into(),
                        length: row.length,
                        rigging: row.rigging,
                        bound,
                    });
                }
            }
        }
        None
    }

    pub fn satisfies_bound(&self, rc: &RiggedConfiguration) -> bool {
        self.violation(rc).is_none()
    }

    /// `⟨h_a, λ + wt(rc)⟩`.
    pub fn shifted_pairing(&self, rc: &RiggedConfiguration, a: Index) -> i64 {
        self.lambda.pairing(a) + rc.vacancy_infinity(self.datum, a)
    }

    /// `f′_a`: `f_a` unless the result leaves the bounded set, or `a` is
    /// imaginary and `⟨h_a, λ + wt⟩ = 0`.
    pub fn f_lambda(&self, rc: &RiggedConfiguration, a: Index) -> Result<Option<RiggedConfiguration>, LambdaError> {
        if let Some(err) = self.violation(rc) {
            return Err(err);
        }
        if self.datum.is_imaginary(a) && self.shifted_pairing(rc, a) == 0 {
            return Ok(None);
        }
        let out = rc.f(self.datum, a);
        Ok(self.satisfies_bound(&out).then_some(out))
    }

    pub fn highest(&self) -> RiggedConfiguration {
        RiggedConfiguration::empty(self.datum)
    }

    /// `RC(λ)` as layers of the `f′` closure.
    pub fn layers(&self, depth: usize) -> Vec<Vec<RiggedConfiguration>> {
        closure(self.highest(), depth, |v| self.datum.indices().filter_map(|a| self.f(v, a)).collect())
    }
}

impl Crystal for LambdaModel<'_> {
    type Elem = RiggedConfiguration;

    fn datum(&self) -> &BorcherdsCartanDatum {
        self.datum
    }
    fn e(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> {
        v.e(self.datum, a)
    }
    fn f(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> {
        self.f_lambda(v, a).ok().flatten()
    }
    fn epsilon(&self, v: &RiggedConfiguration, a: Index) -> ExtendedInt {
        v.epsilon(self.datum, a).into()
    }
    fn phi(&self, v: &RiggedConfiguration, a: Index) -> ExtendedInt {
        (v.epsilon(self.datum, a) + self.shifted_pairing(v, a)).into()
    }
    fn weight(&self, v: &RiggedConfiguration) -> Weight {
        Weight::from_dominant(self.datum, &self.lambda).add(&Weight::from_root(self.datum, v.weight()))
    }
}

/// Whether `rc ∈ RC(∞)` lies in the image of `RC(λ)`: `ε_a^⋆ ≤ ⟨h_a, λ⟩`
/// for real `a`, and `e_a^⋆ rc = 0` for imaginary `a` with `⟨h_a, λ⟩ = 0`.
pub fn star_membership(datum: &BorcherdsCartanDatum, rc: &RiggedConfiguration, lambda: &DominantWeight) -> bool {
    datum.indices().all(|a| {
        if datum.is_real(a) {
            rc.epsilon_star(datum, a) <= lambda.pairing(a)
        } else {
            lambda.pairing(a) > 0 || rc.e_star(datum, a).is_none()
        }
    })
}

/// `ν_∅ ⊗ t_λ ⊗ c`.
pub fn cutout_root(datum: &BorcherdsCartanDatum, lambda: &DominantWeight) -> CrystalNode {
    CrystalNode::tensor(
        CrystalNode::tensor(CrystalNode::Rc(RiggedConfiguration::empty(datum)), CrystalNode::TLambda(lambda.clone())),
        CrystalNode::C,
    )
}

/// The component through [`cutout_root`] to `depth`.
pub fn cutout_component(
    datum: &BorcherdsCartanDatum,
    lambda: &DominantWeight,
    depth: usize,
) -> crate::graph::CrystalGraph {
    crate::graph::generate(datum, &crate::graph::GraphModel::Cutout(lambda.clone()), depth)
}

/// The `f′`-graph of `RC(λ)` against the tensor cutout, as colored graphs
/// with statistics.
pub fn compare_with_cutout(datum: &BorcherdsCartanDatum, lambda: &DominantWeight, depth: usize) -> CheckReport {
    let model = LambdaModel::new(datum, lambda.clone());
    let mut r = isomorphism_check(&model, model.highest(), &NodeCrystal::new(datum), cutout_root(datum, lambda), depth);
    r.condition = String::from("lambda-cutout-isomorphism");
    r
}

/// The `f′`-closure against the [`star_membership`] filter of the `RC(∞)`
/// truncation at the same depth.
pub fn compare_with_star(datum: &BorcherdsCartanDatum, lambda: &DominantWeight, depth: usize) -> CheckReport {
    let model = LambdaModel::new(datum, lambda.clone());
    let generated: BTreeSet<RiggedConfiguration> = model.layers(depth).into_iter().flatten().collect();
    let mut rep = ReportBuilder::new("lambda-star-characterization").with_depth(depth);
    for rc in rc_infinity_layers(datum, depth).into_iter().flatten() {
        let ok = generated.contains(&rc) == star_membership(datum, &rc, lambda);
        rep.record(ok, || (format!("{:?}", rc), String::new()));
    }
    rep.finish()
}

/// `λ ≤ μ` pairing-wise implies `RC(λ) ⊆ RC(μ)` at `depth`.
pub fn check_monotonicity(
    datum: &BorcherdsCartanDatum,
    lambda: &DominantWeight,
    mu: &DominantWeight,
    depth: usize,
) -> CheckReport {
    let small = LambdaModel::new(datum, lambda.clone());
    let big = LambdaModel::new(datum, mu.clone());
    let big_set: BTreeSet<RiggedConfiguration> = big.layers(depth).into_iter().flatten().collect();
    let mut rep = ReportBuilder::new("lambda-monotonicity").with_depth(depth);
    if lambda.le(mu) {
        for rc in small.layers(depth).into_iter().flatten() {
            rep.record(big_set.contains(&rc), || (format!("{:?}", rc), String::new()));
        }
    }
    rep.finish()
}
