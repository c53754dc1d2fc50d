//! Elementary crystals `T_λ`, `C`, `N_(a)` and the tensor product rule.

use alloc::boxed::Box;
use core::fmt;

use crate::cartan::{BorcherdsCartanDatum, DominantWeight, Index, RootWeight, Weight};
use crate::extended::ExtendedInt::{self, Finite, NegInfinity};
use crate::rigged::RiggedConfiguration;

use super::Crystal;

/// An element of a tensor product of `RC(∞)` and elementary crystals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrystalNode {
    Rc(RiggedConfiguration),
    /// The single element `t_λ` of `T_λ`.
    TLambda(DominantWeight),
    /// The single element `c` of `C`.
    C,
    /// `z_a(−n)` in `N_(a)`.
    Z {
        index: Index,
        n: u64,
    },
    Tensor(Box<CrystalNode>, Box<CrystalNode>),
}

impl CrystalNode {
    pub fn tensor(left: CrystalNode, right: CrystalNode) -> CrystalNode {
        CrystalNode::Tensor(Box::new(left), Box::new(right))
    }

    /// Left-associated tensor of `factors`; `None` for an empty list.
    pub fn tensor_all(factors: impl IntoIterator<Item = CrystalNode>) -> Option<CrystalNode> {
        factors.into_iter().reduce(CrystalNode::tensor)
    }

    pub fn as_rc(&self) -> Option<&RiggedConfiguration> {
        match self {
            CrystalNode::Rc(rc) => Some(rc),
            _ => None,
        }
    }

    /// The leftmost factor of a tensor, or the node itself.
    pub fn leftmost(&self) -> &CrystalNode {
        match self {
            CrystalNode::Tensor(l, _) => l.leftmost(),
            other => other,
        }
    }
}

impl fmt::Debug for CrystalNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalNode::Rc(rc) => write!(f, "{:?}", rc),
            CrystalNode::TLambda(l) => write!(f, "t{:?}", l.pairings()),
            CrystalNode::C => f.write_str("c"),
            CrystalNode::Z { index, n } => write!(f, "z{}(-{})", index.position() + 1, n),
            CrystalNode::Tensor(l, r) => write!(f, "({:?} ⊗ {:?})", l, r),
        }
    }
}

/// The crystal structure on [`CrystalNode`]s. Rigged-configuration factors
/// carry the `RC(∞)` structure.
#[derive(Clone, Copy, Debug)]
pub struct NodeCrystal<'d> {
    pub datum: &'d BorcherdsCartanDatum,
}

impl<'d> NodeCrystal<'d> {
    pub fn new(datum: &'d BorcherdsCartanDatum) -> Self {
        NodeCrystal { datum }
    }

    /// `ε_a`, `φ_a` and `wt` of a node in one pass.
    pub fn stats(&self, v: &CrystalNode, a: Index) -> (ExtendedInt, ExtendedInt, Weight) {
        (self.epsilon(v, a), self.phi(v, a), self.weight(v))
    }
}

impl Crystal for NodeCrystal<'_> {
    type Elem = CrystalNode;

    fn datum(&self) -> &BorcherdsCartanDatum {
        self.datum
    }

    fn e(&self, v: &CrystalNode, a: Index) -> Option<CrystalNode> {
        let d = self.datum;
        match v {
            CrystalNode::Rc(rc) => rc.e(d, a).map(CrystalNode::Rc),
            CrystalNode::TLambda(_) | CrystalNode::C => None,
            CrystalNode::Z { index, n } => (*index == a && *n > 0).then(|| CrystalNode::Z { index: a, n: n - 1 }),
            CrystalNode::Tensor(l, r) => {
                let phi1 = self.phi(l, a);
                let eps2 = self.epsilon(r, a);
                let on_left = if d.is_real(a) {
                    phi1 >= eps2
                } else {
                    let aa = d.entry(a, a);
                    if phi1 > eps2 - aa {
                        true
                    } else if eps2 < phi1 && phi1 <= eps2 - aa {
                        return None;
                    } else {
                        false
                    }
                };
                if on_left {
                    self.e(l, a).map(|x| CrystalNode::Tensor(Box::new(x), r.clone()))
                } else {
                    self.e(r, a).map(|y| CrystalNode::Tensor(l.clone(), Box::new(y)))
                }
            }
        }
    }

    fn f(&self, v: &CrystalNode, a: Index) -> Option<CrystalNode> {
        match v {
            CrystalNode::Rc(rc) => Some(CrystalNode::Rc(rc.f(self.datum, a))),
            CrystalNode::TLambda(_) | CrystalNode::C => None,
            CrystalNode::Z { index, n } => (*index == a).then(|| CrystalNode::Z { index: a, n: n + 1 }),
            CrystalNode::Tensor(l, r) => {
                if self.phi(l, a) > self.epsilon(r, a) {
                    self.f(l, a).map(|x| CrystalNode::Tensor(Box::new(x), r.clone()))
                } else {
                    self.f(r, a).map(|y| CrystalNode::Tensor(l.clone(), Box::new(y)))
                }
            }
        }
    }

    fn epsilon(&self, v: &CrystalNode, a: Index) -> ExtendedInt {
        let d = self.datum;
        match v {
            CrystalNode::Rc(rc) => Finite(rc.epsilon(d, a)),
            CrystalNode::TLambda(_) => NegInfinity,
            CrystalNode::C => Finite(0),
            CrystalNode::Z { index, n } => match (*index == a, d.is_real(a)) {
                (true, true) => Finite(*n as i64),
                (true, false) => Finite(0),
                (false, _) => NegInfinity,
            },
            CrystalNode::Tensor(l, r) => self.epsilon(l, a).max(self.epsilon(r, a) - self.pairing(l, a)),
        }
    }

    fn phi(&self, v: &CrystalNode, a: Index) -> ExtendedInt {
        let d = self.datum;
        match v {
            CrystalNode::Rc(rc) => Finite(rc.phi(d, a)),
            CrystalNode::TLambda(_) => NegInfinity,
            CrystalNode::C => Finite(0),
            CrystalNode::Z { index, n } => match (*index == a, d.is_real(a)) {
                (true, true) => Finite(-(*n as i64)),
                (true, false) => Finite(-(*n as i64) * d.entry(a, a)),
                (false, _) => NegInfinity,
            },
            CrystalNode::Tensor(l, r) => (self.phi(l, a) + self.pairing(r, a)).max(self.phi(r, a)),
        }
    }

    fn weight(&self, v: &CrystalNode) -> Weight {
        let d = self.datum;
        match v {
            CrystalNode::Rc(rc) => Weight::from_root(d, rc.weight()),
            CrystalNode::TLambda(lambda) => Weight::from_dominant(d, lambda),
            CrystalNode::C => Weight::from_root(d, RootWeight::zero(d)),
            CrystalNode::Z { index, n } => {
                let mut root = RootWeight::zero(d);
                for _ in 0..*n {
                    root = root.sub_root(*index);
                }
                Weight::from_root(d, root)
            }
            CrystalNode::Tensor(l, r) => self.weight(l).add(&self.weight(r)),
        }
    }
}
