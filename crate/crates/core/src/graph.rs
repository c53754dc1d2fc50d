//! Depth-truncated crystal graphs and colored-graph isomorphism.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::cartan::{BorcherdsCartanDatum, DominantWeight, Index};
use crate::checks::{CheckReport, ReportBuilder};
use crate::crystal::{Crystal, CrystalNode, NodeCrystal};
use crate::highest_weight::{cutout_root, LambdaError, LambdaModel};
use crate::rigged::RiggedConfiguration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Operator {
    E,
    F,
    EStar,
    FStar,
    /// The cutoff operator `f′_a` of `RC(λ)`.
    FPrime,
}

impl Operator {
    pub fn symbol(self) -> &'static str {
        match self {
            Operator::E => "e",
            Operator::F => "f",
            Operator::EStar => "e*",
            Operator::FStar => "f*",
            Operator::FPrime => "f'",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Operator> {
        Some(match s {
            "e" => Operator::E,
            "f" => Operator::F,
            "e*" => Operator::EStar,
            "f*" => Operator::FStar,
            "f'" => Operator::FPrime,
            _ => return None,
        })
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphModel {
    /// `RC(∞)` under `f_a`.
    Infinity,
    /// `RC(∞)` under `f_a^⋆`.
    Star,
    /// `RC(λ)` under `f′_a`.
    Lambda(DominantWeight),
    /// The component of `RC(∞) ⊗ T_λ ⊗ C` through `ν_∅ ⊗ t_λ ⊗ c`.
    Cutout(DominantWeight),
}

impl GraphModel {
    pub fn name(&self) -> &'static str {
        match self {
            GraphModel::Infinity => "infinity",
            GraphModel::Star => "star",
            GraphModel::Lambda(_) => "lambda",
            GraphModel::Cutout(_) => "cutout",
        }
    }

    pub fn lambda(&self) -> Option<&DominantWeight> {
        match self {
            GraphModel::Lambda(l) | GraphModel::Cutout(l) => Some(l),
            _ => None,
        }
    }

    pub fn operator(&self) -> Operator {
        match self {
            GraphModel::Infinity | GraphModel::Cutout(_) => Operator::F,
            GraphModel::Star => Operator::FStar,
            GraphModel::Lambda(_) => Operator::FPrime,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub index: Index,
    pub op: Operator,
}

/// Nodes are numbered by BFS layer, then by canonical order within a layer;
/// node `0` is the start element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub datum: BorcherdsCartanDatum,
    pub model: GraphModel,
    pub depth: usize,
    pub nodes: Vec<CrystalNode>,
    pub edges: Vec<Edge>,
}

impl CrystalGraph {
    pub fn node_id(&self, node: &CrystalNode) -> Option<usize> {
        self.nodes.iter().position(|n| n == node)
    }

    /// Edges grouped by source, as `(index, dst)`.
    pub fn successors(&self, src: usize) -> impl Iterator<Item = (Index, usize)> + '_ {
        self.edges.iter().filter(move |e| e.src == src).map(|e| (e.index, e.dst))
    }
}

/// Deterministic BFS: returns the nodes in id order and the deduplicated,
/// sorted edge list. Successors of nodes in the last layer are not explored.
pub fn build_graph<T: Clone + Ord>(
    start: T,
    depth: usize,
    succ: impl Fn(&T) -> Vec<(Index, Operator, T)>,
) -> (Vec<T>, Vec<Edge>) {
    let mut ids: BTreeMap<T, usize> = BTreeMap::new();
    ids.insert(start.clone(), 0);
    let mut nodes = alloc::vec![start];
    let mut layer = 0..1;
    let mut raw = Vec::new();
    for _ in 0..depth {
        let mut next: BTreeMap<T, ()> = BTreeMap::new();
        let mut pending = Vec::new();
        for src in layer.clone() {
            for (index, op, dst) in succ(&nodes[src]) {
                if !ids.contains_key(&dst) {
                    next.insert(dst.clone(), ());
                }
                pending.push((src, index, op, dst));
            }
        }
        let begin = nodes.len();
        for (node, ()) in next {
            ids.insert(node.clone(), nodes.len());
            nodes.push(node);
        }
        layer = begin..nodes.len();
        for (src, index, op, dst) in pending {
            raw.push(Edge { src, dst: ids[&dst], index, op });
        }
    }
    raw.sort();
    raw.dedup();
    (nodes, raw)
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("operator f' needs a dominant weight")]
    MissingLambda,
    #[error(transparent)]
    Lambda(#[from] LambdaError),
}

/// The graph of `model` truncated at `depth` operator applications.
pub fn generate(datum: &BorcherdsCartanDatum, model: &GraphModel, depth: usize) -> CrystalGraph {
    let (nodes, edges) = match model {
        GraphModel::Infinity | GraphModel::Star => {
            let star = matches!(model, GraphModel::Star);
            let op = model.operator();
            let (rcs, edges) = build_graph(RiggedConfiguration::empty(datum), depth, |v| {
                datum.indices().map(|a| (a, op, if star { v.f_star(datum, a) } else { v.f(datum, a) })).collect()
            });
            (rcs.into_iter().map(CrystalNode::Rc).collect(), edges)
        }
        GraphModel::Lambda(lambda) => {
            let m = LambdaModel::new(datum, lambda.clone());
            let (rcs, edges) = build_graph(RiggedConfiguration::empty(datum), depth, |v| {
                datum.indices().filter_map(|a| m.f(v, a).map(|w| (a, Operator::FPrime, w))).collect()
            });
            (rcs.into_iter().map(CrystalNode::Rc).collect(), edges)
        }
        GraphModel::Cutout(lambda) => {
            let c = NodeCrystal::new(datum);
            build_graph(cutout_root(datum, lambda), depth, |v| {
                datum.indices().filter_map(|a| c.f(v, a).map(|w| (a, Operator::F, w))).collect()
            })
        }
    };
    CrystalGraph { datum: datum.clone(), model: model.clone(), depth, nodes, edges }
}

/// Applies `word` to `start` in list order, stopping at the first null
/// result.
pub fn apply_word(
    datum: &BorcherdsCartanDatum,
    word: &[(Operator, Index)],
    start: &RiggedConfiguration,
    lambda: Option<&DominantWeight>,
) -> Result<Option<RiggedConfiguration>, GraphError> {
    let model = lambda.map(|l| LambdaModel::new(datum, l.clone()));
    let mut cur = start.clone();
    for &(op, a) in word {
        let next = match op {
            Operator::E => cur.e(datum, a),
            Operator::F => Some(cur.f(datum, a)),
            Operator::EStar => cur.e_star(datum, a),
            Operator::FStar => Some(cur.f_star(datum, a)),
            Operator::FPrime => model.as_ref().ok_or(GraphError::MissingLambda)?.f_lambda(&cur, a)?,
        };
        match next {
            Some(n) => cur = n,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}

/// Checks that the `f`-graphs of `c1` from `s1` and `c2` from `s2`,
/// truncated at `depth`, are isomorphic as rooted `I`-colored graphs with
/// matching `ε`, `φ`, `wt` and `e`-arrows.
pub fn isomorphism_check<C1: Crystal, C2: Crystal>(
    c1: &C1,
    s1: C1::Elem,
    c2: &C2,
    s2: C2::Elem,
    depth: usize,
) -> CheckReport {
    let datum = c1.datum();
    let mut rep = ReportBuilder::new("colored-graph-isomorphism").with_depth(depth);
    let mut fwd: BTreeMap<C1::Elem, C2::Elem> = BTreeMap::new();
    let mut back: BTreeMap<C2::Elem, C1::Elem> = BTreeMap::new();
    fwd.insert(s1.clone(), s2.clone());
    back.insert(s2.clone(), s1.clone());
    let mut frontier = alloc::vec![(s1, s2)];

    for level in 0..=depth {
        let mut next = Vec::new();
        for (v, w) in core::mem::take(&mut frontier) {
            for a in datum.indices() {
                let witness = || (format!("{:?} ~ {:?}", v, w), String::from(datum.label(a)));
                let stats = c1.epsilon(&v, a) == c2.epsilon(&w, a)
                    && c1.phi(&v, a) == c2.phi(&w, a)
                    && c1.weight(&v) == c2.weight(&w);
                rep.record(stats, witness);

                let ev = c1.e(&v, a);
                let ew = c2.e(&w, a);
                let e_ok = match (&ev, &ew) {
                    (None, None) => true,
                    // e may leave the f-closure of a non-highest root.
                    (Some(x), Some(y)) => match (fwd.get(x), back.get(y)) {
                        (None, None) => true,
                        (m, n) => m == Some(y) && n == Some(x),
                    },
                    _ => false,
                };
                rep.record(e_ok, witness);

                if level == depth {
                    continue;
                }
                match (c1.f(&v, a), c2.f(&w, a)) {
                    (None, None) => rep.record(true, witness),
                    (Some(x), Some(y)) => match (fwd.get(&x), back.get(&y)) {
                        (None, None) => {
                            rep.record(true, witness);
                            fwd.insert(x.clone(), y.clone());
                            back.insert(y.clone(), x.clone());
                            next.push((x, y));
                        }
                        (m, n) => rep.record(m == Some(&y) && n == Some(&x), witness),
                    },
                    _ => rep.record(false, witness),
                }
            }
        }
        frontier = next;
    }
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{Primal, RcInfinity};
    use alloc::vec;

    fn d2() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::new(&["1", "2"], &[vec![-2, -1], vec![-1, -2]]).unwrap()
    }

    #[test]
    fn depth_zero_is_one_node() {
        let d = d2();
        let g = generate(&d, &GraphModel::Infinity, 0);
        assert_eq!(g.nodes.len(), 1);
        assert!(g.edges.is_empty());
    }

    #[test]
    fn d2_depth_two_has_seven_nodes() {
        let d = d2();
        let g = generate(&d, &GraphModel::Infinity, 2);
        assert_eq!(g.nodes.len(), 7);
        assert_eq!(g.edges.len(), 6);
        for e in &g.edges {
            let (s, t) = (g.nodes[e.src].as_rc().unwrap(), g.nodes[e.dst].as_rc().unwrap());
            assert_eq!(t.weight(), s.weight().sub_root(e.index));
        }
    }

    #[test]
    fn sl2_lambda_one() {
        let d = BorcherdsCartanDatum::new(&["1"], &[vec![2]]).unwrap();
        let l = DominantWeight::new(&d, vec![1]).unwrap();
        let g = generate(&d, &GraphModel::Lambda(l), 5);
        assert_eq!((g.nodes.len(), g.edges.len()), (2, 1));
    }

    #[test]
    fn star_graph_has_the_same_nodes() {
        let d = BorcherdsCartanDatum::new(&["1", "2"], &[vec![2, -1], vec![-1, -2]]).unwrap();
        let a = generate(&d, &GraphModel::Infinity, 4);
        let b = generate(&d, &GraphModel::Star, 4);
        assert_eq!(a.nodes, b.nodes);
    }

    #[test]
    fn apply_word_basics() {
        let d = d2();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        let empty = RiggedConfiguration::empty(&d);
        assert_eq!(apply_word(&d, &[], &empty, None), Ok(Some(empty.clone())));
        let word = [(Operator::F, two), (Operator::F, one), (Operator::F, one), (Operator::F, one)];
        assert_eq!(apply_word(&d, &word, &empty, None), Ok(Some(empty.f_word(&d, &[one, one, one, two]))));
        assert_eq!(apply_word(&d, &[(Operator::F, one), (Operator::E, one)], &empty, None), Ok(Some(empty.clone())));
        assert_eq!(apply_word(&d, &[(Operator::E, one), (Operator::F, one)], &empty, None), Ok(None));
        assert_eq!(apply_word(&d, &[(Operator::FPrime, one)], &empty, None), Err(GraphError::MissingLambda));
    }

    #[test]
    fn isomorphism_of_a_model_with_itself() {
        let d = d2();
        let m = RcInfinity::new(&d);
        let empty = RiggedConfiguration::empty(&d);
        let r = isomorphism_check(&Primal(&m), empty.clone(), &Primal(&m), empty.clone(), 3);
        assert!(r.passed(), "{:?}", r);

        let one = d.index("1").unwrap();
        let r = isomorphism_check(&Primal(&m), empty.clone(), &Primal(&m), empty.f(&d, one), 2);
        assert!(!r.passed());
    }
}
