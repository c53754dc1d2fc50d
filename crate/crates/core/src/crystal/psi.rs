//! The embeddings `Ψ_a : RC(∞) → RC(∞) ⊗ N_(a)` and a crystal-morphism checker.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use thiserror::Error;

use crate::cartan::{BorcherdsCartanDatum, Index};
use crate::checks::{CheckReport, ReportBuilder};
use crate::rigged::RiggedConfiguration;

use super::{Crystal, CrystalNode};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PsiError {
    #[error("e*_a vanished after {done} of {needed} steps")]
    NotInModel { done: i64, needed: i64 },
}

/// `Ψ_a(v) = (e_a^⋆)^k v ⊗ z_a(−k)` with `k = t̃ε_a^⋆(v)`.
pub fn psi_embedding(
    datum: &BorcherdsCartanDatum,
    rc: &RiggedConfiguration,
    a: Index,
) -> Result<CrystalNode, PsiError> {
    let k = rc.tilde_epsilon_star(datum, a);
    let mut top = rc.clone();
    for done in 0..k {
        top = top.e_star(datum, a).ok_or(PsiError::NotInModel { done, needed: k })?;
    }
    Ok(CrystalNode::tensor(CrystalNode::Rc(top), CrystalNode::Z { index: a, n: k as u64 }))
}

/// Checks that `map` is a strict crystal embedding on `domain`.
///
/// Statistics are compared on every element; `f`-intertwining only where
/// `f_a v` lies in `domain`, so a truncated closure can be passed directly.
/// Returns one report each for statistics, `f`-intertwining,
/// `e`-intertwining and injectivity.
pub fn morphism_check<C1, C2>(
    src: &C1,
    dst: &C2,
    map: impl Fn(&C1::Elem) -> C2::Elem,
    domain: &[C1::Elem],
) -> Vec<CheckReport>
where
    C1: Crystal,
    C2: Crystal,
{
    let datum = src.datum();
    let members: BTreeSet<&C1::Elem> = domain.iter().collect();
    let images: Vec<C2::Elem> = domain.iter().map(&map).collect();

    let mut stats = ReportBuilder::new("morphism-stats");
    let mut f_rep = ReportBuilder::new("morphism-f-intertwining");
    let mut e_rep = ReportBuilder::new("morphism-e-intertwining");
    let mut inj = ReportBuilder::new("morphism-injective");

    for (v, image) in domain.iter().zip(&images) {
        for a in datum.indices() {
            let ok = src.epsilon(v, a) == dst.epsilon(image, a)
                && src.phi(v, a) == dst.phi(image, a)
                && src.weight(v) == dst.weight(image);
            stats.record(ok, || (format!("{:?}", v), datum.label(a).into()));

            match src.f(v, a) {
                Some(w) if members.contains(&w) => {
                    let ok = dst.f(image, a) == Some(map(&w));
                    f_rep.record(ok, || (format!("{:?}", v), datum.label(a).into()));
                }
                Some(_) => {}
                None => {
                    let ok = dst.f(image, a).is_none();
                    f_rep.record(ok, || (format!("{:?}", v), datum.label(a).into()));
                }
            }

            let expected = src.e(v, a).map(|w| map(&w));
            let ok = dst.e(image, a) == expected;
            e_rep.record(ok, || (format!("{:?}", v), datum.label(a).into()));
        }
    }

    let mut first_seen: BTreeMap<&C2::Elem, &C1::Elem> = BTreeMap::new();
    for (v, image) in domain.iter().zip(&images) {
        let ok = match first_seen.get(image) {
            Some(prev) => *prev == v,
            None => {
                first_seen.insert(image, v);
                true
            }
        };
        inj.record(ok, || (format!("{:?}", v), alloc::string::String::new()));
    }

    alloc::vec![stats.finish(), f_rep.finish(), e_rep.finish(), inj.finish()]
}
