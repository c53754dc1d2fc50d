//! Abstract crystals and bicrystals.
//!
//! [`Crystal`] is the interface the generic graph builders and checkers work
//! against. [`Bicrystal`] pairs two crystal structures on one set with a
//! common weight, the setting of the recognition conditions; [`Primal`] and
//! [`Dual`] view either half as a plain [`Crystal`].

use alloc::vec::Vec;
use core::fmt::Debug;

use crate::cartan::{BorcherdsCartanDatum, Index, RootWeight, Weight};
use crate::extended::ExtendedInt;
use crate::rigged::RiggedConfiguration;

pub mod node;
pub mod psi;

pub use node::{CrystalNode, NodeCrystal};
pub use psi::{morphism_check, psi_embedding, PsiError};

/// An abstract crystal: Kashiwara operators, string statistics and weight.
pub trait Crystal {
    type Elem: Clone + Ord + Debug;

    fn datum(&self) -> &BorcherdsCartanDatum;
    fn e(&self, v: &Self::Elem, a: Index) -> Option<Self::Elem>;
    fn f(&self, v: &Self::Elem, a: Index) -> Option<Self::Elem>;
    fn epsilon(&self, v: &Self::Elem, a: Index) -> ExtendedInt;
    fn phi(&self, v: &Self::Elem, a: Index) -> ExtendedInt;
    fn weight(&self, v: &Self::Elem) -> Weight;

    fn pairing(&self, v: &Self::Elem, a: Index) -> i64 {
        self.weight(v).pairing(self.datum(), a)
    }
}

/// Two crystal structures `(e, f, ε, φ)` and `(e⋆, f⋆, ε⋆, φ⋆)` sharing a
/// weight function and a distinguished weight-zero element.
pub trait Bicrystal {
    type Elem: Clone + Ord + Debug;

    fn datum(&self) -> &BorcherdsCartanDatum;
    fn highest(&self) -> Self::Elem;
    fn e(&self, v: &Self::Elem, a: Index) -> Option<Self::Elem>;
    fn f(&self, v: &Self::Elem, a: Index) -> Option<Self::Elem>;
    fn e_star(&self, v: &Self::Elem, a: Index) -> Option<Self::Elem>;
    fn f_star(&self, v: &Self::Elem, a: Index) -> Option<Self::Elem>;
    fn epsilon(&self, v: &Self::Elem, a: Index) -> i64;
    fn phi(&self, v: &Self::Elem, a: Index) -> i64;
    fn epsilon_star(&self, v: &Self::Elem, a: Index) -> i64;
    fn phi_star(&self, v: &Self::Elem, a: Index) -> i64;
    fn weight(&self, v: &Self::Elem) -> RootWeight;

    fn pairing(&self, v: &Self::Elem, a: Index) -> i64 {
        self.datum().pairing(a, &self.weight(v))
    }

    /// `t̃ε_a`. Iteration stops after `height(wt)` steps, the most a crystal
    /// with weights in `Q⁻` allows.
    fn tilde_epsilon(&self, v: &Self::Elem, a: Index) -> i64 {
        iterate_count(v, self.weight(v).height(), |w| self.e(w, a))
    }

    fn tilde_epsilon_star(&self, v: &Self::Elem, a: Index) -> i64 {
        iterate_count(v, self.weight(v).height(), |w| self.e_star(w, a))
    }

    fn kappa(&self, v: &Self::Elem, a: Index) -> i64 {
        let d = self.datum();
        if d.is_real(a) {
            self.epsilon(v, a) + self.epsilon_star(v, a) + self.pairing(v, a)
        } else {
            self.epsilon(v, a) + self.tilde_epsilon_star(v, a) * d.entry(a, a) + self.pairing(v, a)
        }
    }

    fn kappa_star(&self, v: &Self::Elem, a: Index) -> i64 {
        let d = self.datum();
        if d.is_real(a) {
            self.epsilon(v, a) + self.epsilon_star(v, a) + self.pairing(v, a)
        } else {
            self.epsilon_star(v, a) + self.tilde_epsilon(v, a) * d.entry(a, a) + self.pairing(v, a)
        }
    }
}

fn iterate_count<T>(v: &T, cap: i64, step: impl Fn(&T) -> Option<T>) -> i64 {
    let mut k = 0;
    let mut cur = step(v);
    while let Some(next) = cur {
        k += 1;
        if k > cap {
            break;
        }
        cur = step(&next);
    }
    k
}

/// `RC(∞)` with both its crystal and ⋆-crystal structures.
#[derive(Clone, Copy, Debug)]
pub struct RcInfinity<'d> {
    pub datum: &'d BorcherdsCartanDatum,
}

impl<'d> RcInfinity<'d> {
    pub fn new(datum: &'d BorcherdsCartanDatum) -> Self {
        RcInfinity { datum }
    }
}

impl Bicrystal for RcInfinity<'_> {
    type Elem = RiggedConfiguration;

    fn datum(&self) -> &BorcherdsCartanDatum {
        self.datum
    }
    fn highest(&self) -> RiggedConfiguration {
        RiggedConfiguration::empty(self.datum)
    }
    fn e(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> {
        v.e(self.datum, a)
    }
    fn f(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> {
        Some(v.f(self.datum, a))
    }
    fn e_star(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> {
        v.e_star(self.datum, a)
    }
    fn f_star(&self, v: &RiggedConfiguration, a: Index) -> Option<RiggedConfiguration> {
        Some(v.f_star(self.datum, a))
    }
    fn epsilon(&self, v: &RiggedConfiguration, a: Index) -> i64 {
        v.epsilon(self.datum, a)
    }
    fn phi(&self, v: &RiggedConfiguration, a: Index) -> i64 {
        v.phi(self.datum, a)
    }
    fn epsilon_star(&self, v: &RiggedConfiguration, a: Index) -> i64 {
        v.epsilon_star(self.datum, a)
    }
    fn phi_star(&self, v: &RiggedConfiguration, a: Index) -> i64 {
        v.phi_star(self.datum, a)
    }
    fn weight(&self, v: &RiggedConfiguration) -> RootWeight {
        v.weight()
    }
}

/// The `(e, f, ε, φ)` half of a bicrystal.
#[derive(Clone, Copy, Debug)]
pub struct Primal<'b, B>(pub &'b B);

/// The `(e⋆, f⋆, ε⋆, φ⋆)` half of a bicrystal.
#[derive(Clone, Copy, Debug)]
pub struct Dual<'b, B>(pub &'b B);

impl<B: Bicrystal> Crystal for Primal<'_, B> {
    type Elem = B::Elem;

    fn datum(&self) -> &BorcherdsCartanDatum {
        self.0.datum()
    }
    fn e(&self, v: &B::Elem, a: Index) -> Option<B::Elem> {
        self.0.e(v, a)
    }
    fn f(&self, v: &B::Elem, a: Index) -> Option<B::Elem> {
        self.0.f(v, a)
    }
    fn epsilon(&self, v: &B::Elem, a: Index) -> ExtendedInt {
        self.0.epsilon(v, a).into()
    }
    fn phi(&self, v: &B::Elem, a: Index) -> ExtendedInt {
        self.0.phi(v, a).into()
    }
    fn weight(&self, v: &B::Elem) -> Weight {
        Weight::from_root(self.0.datum(), self.0.weight(v))
    }
}

impl<B: Bicrystal> Crystal for Dual<'_, B> {
    type Elem = B::Elem;

    fn datum(&self) -> &BorcherdsCartanDatum {
        self.0.datum()
    }
    fn e(&self, v: &B::Elem, a: Index) -> Option<B::Elem> {
        self.0.e_star(v, a)
    }
    fn f(&self, v: &B::Elem, a: Index) -> Option<B::Elem> {
        self.0.f_star(v, a)
    }
    fn epsilon(&self, v: &B::Elem, a: Index) -> ExtendedInt {
        self.0.epsilon_star(v, a).into()
    }
    fn phi(&self, v: &B::Elem, a: Index) -> ExtendedInt {
        self.0.phi_star(v, a).into()
    }
    fn weight(&self, v: &B::Elem) -> Weight {
        Weight::from_root(self.0.datum(), self.0.weight(v))
    }
}

/// Breadth-first closure of `start` under `ops`, as layers: layer `k` holds
/// the elements first reached after `k` applications, sorted canonically.
pub fn closure<T: Clone + Ord>(start: T, depth: usize, ops: impl Fn(&T) -> Vec<T>) -> Vec<Vec<T>> {
    let mut seen = alloc::collections::BTreeSet::new();
    seen.insert(start.clone());
    let mut layers = alloc::vec![alloc::vec![start]];
    for _ in 0..depth {
        let mut next = alloc::collections::BTreeSet::new();
        for v in layers.last().unwrap() {
            for w in ops(v) {
                if !seen.contains(&w) {
                    next.insert(w);
                }
            }
        }
        seen.extend(next.iter().cloned());
        layers.push(next.into_iter().collect());
    }
    layers
}

/// `RC(∞)` truncated at `depth` boxes, generated by the `f_a`.
pub fn rc_infinity_layers(datum: &BorcherdsCartanDatum, depth: usize) -> Vec<Vec<RiggedConfiguration>> {
    closure(RiggedConfiguration::empty(datum), depth, |v| datum.indices().map(|a| v.f(datum, a)).collect())
}

/// `RC(∞)^⋆` truncated at `depth` boxes, generated by the `f_a^⋆`.
pub fn rc_star_layers(datum: &BorcherdsCartanDatum, depth: usize) -> Vec<Vec<RiggedConfiguration>> {
    closure(RiggedConfiguration::empty(datum), depth, |v| datum.indices().map(|a| v.f_star(datum, a)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn closure_of_purely_imaginary_example() {
        let d = BorcherdsCartanDatum::new(&["1", "2"], &[vec![-2, -1], vec![-1, -2]]).unwrap();
        let sizes: Vec<usize> = rc_infinity_layers(&d, 3).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 4, 8]);
    }

    #[test]
    fn star_layers_match() {
        let d = BorcherdsCartanDatum::new(&["1", "2"], &[vec![2, -1], vec![-1, -2]]).unwrap();
        assert_eq!(rc_infinity_layers(&d, 4), rc_star_layers(&d, 4));
    }

    #[test]
    fn kappa_through_the_trait_matches_inherent() {
        let d = BorcherdsCartanDatum::new(&["1", "2"], &[vec![2, -1], vec![-1, -2]]).unwrap();
        let model = RcInfinity::new(&d);
        for layer in rc_infinity_layers(&d, 4) {
            for v in layer {
                for a in d.indices() {
                    assert_eq!(model.kappa(&v, a), v.kappa(&d, a));
                    assert_eq!(model.kappa_star(&v, a), v.kappa_star(&d, a));
                    assert_eq!(model.tilde_epsilon(&v, a), v.tilde_epsilon(&d, a));
                }
            }
        }
    }
}
