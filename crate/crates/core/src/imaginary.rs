//! The purely imaginary case: `a`-strings, balanced rigged configurations,
//! and the right-angled Artin monoid whose Cayley graph is the crystal graph.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::cartan::{BorcherdsCartanDatum, Index};
use crate::checks::{CheckReport, ReportBuilder};
use crate::crystal::rc_infinity_layers;
use crate::rigged::{RiggedConfiguration, RiggedPartition, Row};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ImaginaryError {
    #[error("index {0} is real")]
    NotImaginary(String),
    #[error("partition of index {0} is not a single column")]
    NotColumn(String),
    #[error("the datum has a real index")]
    NotPurelyImaginary,
}

fn require_purely_imaginary(datum: &BorcherdsCartanDatum) -> Result<(), ImaginaryError> {
    if datum.is_purely_imaginary() {
        Ok(())
    } else {
        Err(ImaginaryError::NotPurelyImaginary)
    }
}

/// A maximal run of riggings `x_1 > x_2 > ⋯` of a column `ν^(a)` with
/// `x_q − x_{q+1} = −A_aa`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AString {
    pub index: Index,
    /// Descending.
    pub riggings: Vec<i64>,
}

impl AString {
    pub fn len(&self) -> usize {
        self.riggings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.riggings.is_empty()
    }

    /// `Σ̄`, the smallest rigging.
    pub fn min(&self) -> i64 {
        *self.riggings.last().expect("strings are nonempty")
    }
}

/// Splits the descending rigging list of the column `ν^(a)` into maximal
/// runs of step `−A_aa`.
pub fn a_strings(
    datum: &BorcherdsCartanDatum,
    rc: &RiggedConfiguration,
    a: Index,
) -> Result<Vec<AString>, ImaginaryError> {
    if datum.is_real(a) {
        return Err(ImaginaryError::NotImaginary(datum.label(a).into()));
    }
    let part = rc.part(a);
    if !part.is_column() {
        return Err(ImaginaryError::NotColumn(datum.label(a).into()));
    }
    let step = -datum.entry(a, a);
    let mut xs: Vec<i64> = part.riggings().collect();
    xs.sort_unstable_by(|x, y| y.cmp(x));
    let mut out: Vec<AString> = Vec::new();
    for x in xs {
        match out.last_mut() {
            Some(s) if AString::min(s) - x == step => s.riggings.push(x),
            _ => out.push(AString { index: a, riggings: alloc::vec![x] }),
        }
    }
    Ok(out)
}

/// Searches for an ordering `Σ_1, …, Σ_m` of all strings with
/// `Σ̄_j = −A_aa/2 − Σ_{k<j} A_{a a_k} |Σ_k|`, `a` the index of `Σ_j`.
/// Returns the witness ordering, or `None` when `rc` is not balanced.
pub fn is_balanced(
    datum: &BorcherdsCartanDatum,
    rc: &RiggedConfiguration,
) -> Result<Option<Vec<AString>>, ImaginaryError> {
    require_purely_imaginary(datum)?;
    let mut strings = Vec::new();
    for a in datum.indices() {
        match a_strings(datum, rc, a) {
            Ok(s) => strings.extend(s),
            Err(ImaginaryError::NotColumn(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    let mut used = alloc::vec![false; strings.len()];
    let mut offset = alloc::vec![0i64; datum.rank()];
    let mut order = Vec::new();
    Ok(search(datum, &strings, &mut used, &mut offset, &mut order)
        .then(|| order.into_iter().map(|k| strings[k].clone()).collect()))
}

fn search(
    datum: &BorcherdsCartanDatum,
    strings: &[AString],
    used: &mut [bool],
    offset: &mut [i64],
    order: &mut Vec<usize>,
) -> bool {
    if order.len() == strings.len() {
        return true;
    }
    let mut tried = BTreeSet::new();
    for k in 0..strings.len() {
        let s = &strings[k];
        let a = s.index;
        if used[k] || s.min() != -datum.half_diagonal(a) - offset[a.position()] {
            continue;
        }
        if !tried.insert((a, s.len(), s.min())) {
            continue;
        }
        used[k] = true;
        order.push(k);
        for b in datum.indices() {
            offset[b.position()] += datum.entry(b, a) * s.len() as i64;
        }
        if search(datum, strings, used, offset, order) {
            return true;
        }
        for b in datum.indices() {
            offset[b.position()] -= datum.entry(b, a) * s.len() as i64;
        }
        order.pop();
        used[k] = false;
    }
    false
}

/// All balanced rigged configurations with at most `depth` boxes: every
/// sequence of strings admissible for the balance condition, kept when
/// [`is_balanced`] confirms it.
pub fn balanced_configurations(
    datum: &BorcherdsCartanDatum,
    depth: usize,
) -> Result<BTreeSet<RiggedConfiguration>, ImaginaryError> {
    require_purely_imaginary(datum)?;
    let mut found = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut stack =
        alloc::vec![(alloc::vec![Vec::<i64>::new(); datum.rank()], alloc::vec![0i64; datum.rank()], 0usize)];
    while let Some((riggings, offset, size)) = stack.pop() {
        if !seen.insert(riggings.clone()) {
            continue;
        }
        let rc = from_columns(datum, &riggings);
        if is_balanced(datum, &rc)?.is_some() {
            found.insert(rc);
        }
        for a in datum.indices() {
            let low = -datum.half_diagonal(a) - offset[a.position()];
            let step = -datum.entry(a, a);
            for len in 1..=depth.saturating_sub(size) {
                let mut next = riggings.clone();
                next[a.position()].extend((0..len as i64).map(|q| low + q * step));
                next[a.position()].sort_unstable();
                let mut off = offset.clone();
                for b in datum.indices() {
                    off[b.position()] += datum.entry(b, a) * len as i64;
                }
                stack.push((next, off, size + len));
            }
        }
    }
    Ok(found)
}

fn from_columns(datum: &BorcherdsCartanDatum, riggings: &[Vec<i64>]) -> RiggedConfiguration {
    let parts = datum
        .indices()
        .map(|a| RiggedPartition::new(riggings[a.position()].iter().map(|&x| Row::new(1, x))))
        .collect::<Result<Vec<_>, _>>()
        .expect("rows have length 1");
    RiggedConfiguration::from_parts(datum, parts).expect("one part per index")
}

/// Balanced configurations against the `RC(∞)` truncation, both to `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedReport {
    pub depth: usize,
    pub balanced: usize,
    pub generated: usize,
    pub only_balanced: Vec<RiggedConfiguration>,
    pub only_generated: Vec<RiggedConfiguration>,
}

impl BalancedReport {
    pub fn passed(&self) -> bool {
        self.only_balanced.is_empty() && self.only_generated.is_empty()
    }
}

pub fn balanced_equals_generated(datum: &BorcherdsCartanDatum, depth: usize) -> Result<BalancedReport, ImaginaryError> {
    let balanced = balanced_configurations(datum, depth)?;
    let generated: BTreeSet<RiggedConfiguration> = rc_infinity_layers(datum, depth).into_iter().flatten().collect();
    Ok(BalancedReport {
        depth,
        balanced: balanced.len(),
        generated: generated.len(),
        only_balanced: balanced.difference(&generated).cloned().collect(),
        only_generated: generated.difference(&balanced).cloned().collect(),
    })
}

/// Whether `f_a f_b = f_b f_a` on every element of the `RC(∞)` truncation.
pub fn operators_commute(
    datum: &BorcherdsCartanDatum,
    a: Index,
    b: Index,
    depth: usize,
) -> Result<bool, ImaginaryError> {
    require_purely_imaginary(datum)?;
    Ok(rc_infinity_layers(datum, depth)
        .into_iter()
        .flatten()
        .all(|v| v.f(datum, a).f(datum, b) == v.f(datum, b).f(datum, a)))
}

/// A word in the generators of the right-angled Artin monoid
/// `⟨f_a | f_a f_b = f_b f_a if A_ab = 0⟩`, letters in application order:
/// `[a, b]` means `f_a` first. Appending a letter is right multiplication,
/// which is a crystal edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidWord {
    pub letters: Vec<Index>,
}

impl MonoidWord {
    pub fn new(datum: &BorcherdsCartanDatum, letters: Vec<Index>) -> Result<Self, ImaginaryError> {
        require_purely_imaginary(datum)?;
        Ok(MonoidWord { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&self, a: Index) -> MonoidWord {
        let mut letters = self.letters.clone();
        letters.push(a);
        MonoidWord { letters }
    }

    /// The lexicographically least word equivalent under commuting swaps:
    /// repeatedly take the smallest letter that commutes with everything
    /// before its first occurrence.
    pub fn normal_form(&self, datum: &BorcherdsCartanDatum) -> MonoidWord {
        let commute = |x: Index, y: Index| x != y && datum.entry(x, y) == 0;
        let mut rest = self.letters.clone();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                if rest[..i].iter().any(|&y| y == rest[i]) {
                    continue;
                }
                if rest[..i].iter().all(|&y| commute(y, rest[i])) && best.is_none_or(|b| rest[i] < rest[b]) {
                    best = Some(i);
                }
            }
            let i = best.expect("the first letter is always available");
            out.push(rest.remove(i));
        }
        MonoidWord { letters: out }
    }

    /// `f_{a_r} ⋯ f_{a_1} ν_∅`.
    pub fn act(&self, datum: &BorcherdsCartanDatum) -> RiggedConfiguration {
        self.letters.iter().fold(RiggedConfiguration::empty(datum), |rc, &a| rc.f(datum, a))
    }
}

/// Builds the Cayley-graph ball of radius `depth` on normal forms and checks
/// that `w ↦ w · ν_∅` is a color-preserving isomorphism onto the `RC(∞)`
/// truncation.
pub fn cayley_isomorphism_check(datum: &BorcherdsCartanDatum, depth: usize) -> Result<CheckReport, ImaginaryError> {
    require_purely_imaginary(datum)?;
    let mut rep = ReportBuilder::new("cayley-isomorphism").with_depth(depth);
    let layers = rc_infinity_layers(datum, depth);
    let mut image: BTreeMap<RiggedConfiguration, MonoidWord> = BTreeMap::new();
    let root = MonoidWord { letters: Vec::new() };
    image.insert(root.act(datum), root.clone());
    let mut frontier = alloc::vec![root];

    for (level, layer) in layers.iter().enumerate() {
        let mut expected: BTreeSet<&RiggedConfiguration> = layer.iter().collect();
        for w in &frontier {
            let v = w.act(datum);
            rep.record(expected.remove(&v), || (format!("{:?}", w.letters), String::from("layer")));
        }
        rep.record(expected.is_empty(), || (format!("{:?}", expected.iter().next()), String::from("layer-surjective")));
        if level == depth {
            break;
        }
        let mut next = BTreeSet::new();
        for w in &frontier {
            let v = w.act(datum);
            for a in datum.indices() {
                let u = w.push(a).normal_form(datum);
                let fu = u.act(datum);
                rep.record(fu == v.f(datum, a), || (format!("{:?}", u.letters), String::from(datum.label(a))));
                let fresh = match image.get(&fu) {
                    Some(prev) => {
                        rep.record(*prev == u, || {
                            (format!("{:?} vs {:?}", prev.letters, u.letters), String::from("injective"))
                        });
                        false
                    }
                    None => true,
                };
                if fresh {
                    image.insert(fu, u.clone());
                    next.insert(u);
                }
            }
        }
        frontier = next.into_iter().collect();
    }
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn d2() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::new(&["1", "2"], &[vec![-2, -1], vec![-1, -2]]).unwrap()
    }

    fn d4() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::new(&["1", "2"], &[vec![-2, 0], vec![0, -2]]).unwrap()
    }

    #[test]
    fn strings_of_the_worked_example() {
        let d = d2();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        let rc = RiggedConfiguration::empty(&d).f_word(&d, &[one, one, one, two]);
        let s = a_strings(&d, &rc, one).unwrap();
        assert_eq!(s, vec![AString { index: one, riggings: vec![5, 3, 1] }]);
        let g = rc.f(&d, two);
        let s: Vec<Vec<i64>> = a_strings(&d, &g, two).unwrap().into_iter().map(|s| s.riggings).collect();
        assert_eq!(s, vec![vec![6], vec![1]]);
        assert!(a_strings(&d, &RiggedConfiguration::empty(&d), one).unwrap().is_empty());
    }

    #[test]
    fn string_errors() {
        let d = BorcherdsCartanDatum::new(&["1", "2"], &[vec![2, -1], vec![-1, -2]]).unwrap();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        let e = RiggedConfiguration::empty(&d);
        assert_eq!(a_strings(&d, &e, one), Err(ImaginaryError::NotImaginary("1".into())));
        let tall = RiggedConfiguration::from_rows(&d, &[&[], &[(2, 1)]]).unwrap();
        assert_eq!(a_strings(&d, &tall, two), Err(ImaginaryError::NotColumn("2".into())));
        assert_eq!(is_balanced(&d, &e), Err(ImaginaryError::NotPurelyImaginary));
    }

    #[test]
    fn balanced_examples() {
        let d = d2();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        let empty = RiggedConfiguration::empty(&d);
        assert_eq!(is_balanced(&d, &empty), Ok(Some(vec![])));
        let rc = empty.f_word(&d, &[one, one, one, two]);
        let w = is_balanced(&d, &rc).unwrap().unwrap();
        assert_eq!(w, vec![AString { index: one, riggings: vec![5, 3, 1] }, AString { index: two, riggings: vec![4] }]);
        let bad = RiggedConfiguration::from_rows(&d, &[&[(1, 2)], &[]]).unwrap();
        assert_eq!(is_balanced(&d, &bad), Ok(None));
    }

    #[test]
    fn balanced_matches_generated_small() {
        for d in [d2(), d4()] {
            let r = balanced_equals_generated(&d, 4).unwrap();
            assert!(r.passed(), "{:?}", r);
        }
    }

    #[test]
    fn commutation() {
        let d = d2();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        assert_eq!(operators_commute(&d, one, two, 0), Ok(false));
        assert_eq!(operators_commute(&d, one, one, 2), Ok(true));
        let d = d4();
        assert_eq!(operators_commute(&d, one, two, 3), Ok(true));
    }

    #[test]
    fn normal_forms() {
        let d = d4();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        let w = MonoidWord::new(&d, vec![two, one]).unwrap();
        assert_eq!(w.normal_form(&d).letters, vec![one, two]);
        let d = d2();
        let w = MonoidWord::new(&d, vec![two, one]).unwrap();
        assert_eq!(w.normal_form(&d).letters, vec![two, one]);
    }

    #[test]
    fn cayley_small() {
        for d in [d2(), d4()] {
            let r = cayley_isomorphism_check(&d, 3).unwrap();
            assert!(r.passed(), "{:?}", r);
        }
    }
}
