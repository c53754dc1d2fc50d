//! Borcherds–Cartan data and the weight arithmetic shared by every model.

use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("index set is empty")]
    Empty,
    #[error("expected {labels} matrix rows to match the labels, found {rows}")]
    LabelCountMismatch { labels: usize, rows: usize },
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: String, len: usize, expected: usize },
    #[error("duplicate index label {0:?}")]
    DuplicateLabel(String),
    #[error("diagonal entry A[{label},{label}] = {value} is odd")]
    DiagonalOdd { label: String, value: i64 },
    #[error("diagonal entry A[{label},{label}] = {value} is neither 2 nor a nonpositive even integer")]
    DiagonalInvalid { label: String, value: i64 },
    #[error("off-diagonal entry A[{row},{col}] = {value} is positive")]
    PositiveOffDiagonal { row: String, col: String, value: i64 },
    #[error("A[{row},{col}] and A[{col},{row}] disagree on being zero")]
    AsymmetricZeroPattern { row: String, col: String },
    #[error("matrix is not symmetrizable: the cycle through A[{row},{col}] is inconsistent")]
    NotSymmetrizable { row: String, col: String },
    #[error("unknown index label {0:?}")]
    UnknownIndex(String),
    #[error("coefficient of {0:?} would become negative")]
    NegativeCoefficient(String),
    #[error("expected {expected} coefficients, found {found}")]
    RankMismatch { expected: usize, found: usize },
}

/// Position of an index inside a [`BorcherdsCartanDatum`].
///
/// Obtained from [`BorcherdsCartanDatum::index`] or
/// [`BorcherdsCartanDatum::indices`]; using an `Index` with a datum of smaller
/// rank panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index(pub(crate) usize);

impl Index {
    pub fn position(self) -> usize {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexKind {
    Real,
    Imaginary,
}

/// A validated, symmetrizable Borcherds–Cartan matrix with integer entries
/// and even diagonal, indexed by a finite ordered list of labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorcherdsCartanDatum {
    labels: Vec<String>,
    entries: Vec<Vec<i64>>,
    symmetrizer: Vec<(i128, i128)>,
}

impl BorcherdsCartanDatum {
    /// Validates `matrix` against the Borcherds–Cartan conditions.
    ///
    /// Rows of `matrix` are indexed by `labels` in order. Errors name the
    /// offending entry by its label pair.
    pub fn new<S: AsRef<str>>(labels: &[S], matrix: &[Vec<i64>]) -> Result<Self, CartanError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let n = labels.len();
        if n == 0 {
            return Err(CartanError::Empty);
        }
        if matrix.len() != n {
            return Err(CartanError::LabelCountMismatch { labels: n, rows: matrix.len() });
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(CartanError::DuplicateLabel(label.clone()));
            }
        }
        for (row, label) in matrix.iter().zip(&labels) {
            if row.len() != n {
                return Err(CartanError::NotSquare { row: label.clone(), len: row.len(), expected: n });
            }
        }
        for a in 0..n {
            let value = matrix[a][a];
            if value != 2 && value > 0 {
                return Err(CartanError::DiagonalInvalid { label: labels[a].clone(), value });
            }
            if value % 2 != 0 {
                return Err(CartanError::DiagonalOdd { label: labels[a].clone(), value });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                if matrix[a][b] > 0 {
                    return Err(CartanError::PositiveOffDiagonal {
                        row: labels[a].clone(),
                        col: labels[b].clone(),
                        value: matrix[a][b],
                    });
                }
                if (matrix[a][b] == 0) != (matrix[b][a] == 0) {
                    return Err(CartanError::AsymmetricZeroPattern { row: labels[a].clone(), col: labels[b].clone() });
                }
            }
        }
        let symmetrizer = symmetrize(matrix)
            .map_err(|(a, b)| CartanError::NotSymmetrizable { row: labels[a].clone(), col: labels[b].clone() })?;
        Ok(BorcherdsCartanDatum { labels, entries: matrix.to_vec(), symmetrizer })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Index) -> &str {
        &self.labels[a.0]
    }

    pub fn index(&self, label: &str) -> Result<Index, CartanError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(Index)
            .ok_or_else(|| CartanError::UnknownIndex(label.to_string()))
    }

    pub fn index_at(&self, position: usize) -> Option<Index> {
        (position < self.rank()).then_some(Index(position))
    }

    pub fn indices(&self) -> impl Iterator<Item = Index> + Clone {
        (0..self.rank()).map(Index)
    }

    /// The entry `A_ab`.
    pub fn entry(&self, a: Index, b: Index) -> i64 {
        self.entries[a.0][b.0]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `A_aa / 2`, an integer because the diagonal is validated even.
    pub fn half_diagonal(&self, a: Index) -> i64 {
        self.entry(a, a) / 2
    }

    pub fn kind(&self, a: Index) -> IndexKind {
        if self.entry(a, a) == 2 {
            IndexKind::Real
        } else {
            IndexKind::Imaginary
        }
    }

    pub fn index_kind(&self, label: &str) -> Result<IndexKind, CartanError> {
        self.index(label).map(|a| self.kind(a))
    }

    pub fn is_real(&self, a: Index) -> bool {
        self.kind(a) == IndexKind::Real
    }

    pub fn is_imaginary(&self, a: Index) -> bool {
        self.kind(a) == IndexKind::Imaginary
    }

    pub fn is_purely_imaginary(&self) -> bool {
        self.indices().all(|a| self.is_imaginary(a))
    }

    /// A positive diagonal `D`, as reduced fractions `(num, den)`, with `D·A`
    /// symmetric.
    pub fn symmetrizer(&self) -> &[(i128, i128)] {
        &self.symmetrizer
    }

    /// `⟨h_a, w⟩ = −Σ_b A_ab c_b` for `w = −Σ_b c_b α_b`.
    pub fn pairing(&self, a: Index, w: &RootWeight) -> i64 {
        -self.entries[a.0].iter().zip(&w.coeffs).map(|(x, c)| x * c).sum::<i64>()
    }

    pub fn pairing_by_label(&self, label: &str, w: &RootWeight) -> Result<i64, CartanError> {
        self.index(label).map(|a| self.pairing(a, w))
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn reduce((n, d): (i128, i128)) -> (i128, i128) {
    let g = gcd(n, d).max(1);
    let sign = if d < 0 { -1 } else { 1 };
    (sign * n / g, sign * d / g)
}

/// Propagates `d_b = d_a · A_ab / A_ba` along a BFS spanning forest of the
/// graph of nonzero off-diagonal entries, then verifies `d_a A_ab = d_b A_ba`
/// on every edge. Returns the first failing edge on error.
fn symmetrize(matrix: &[Vec<i64>]) -> Result<Vec<(i128, i128)>, (usize, usize)> {
    let n = matrix.len();
    let mut d: Vec<Option<(i128, i128)>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some((1, 1));
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            let (num, den) = d[a].unwrap();
            for b in 0..n {
                if b == a || matrix[a][b] == 0 || d[b].is_some() {
                    continue;
                }
                // Both entries are negative, so the ratio is positive.
                d[b] = Some(reduce((num * matrix[a][b] as i128, den * matrix[b][a] as i128)));
                queue.push_back(b);
            }
        }
    }
    let d: Vec<(i128, i128)> = d.into_iter().map(Option::unwrap).collect();
    for a in 0..n {
        for b in (a + 1)..n {
            let (na, da) = d[a];
            let (nb, db) = d[b];
            if na * matrix[a][b] as i128 * db != nb * matrix[b][a] as i128 * da {
                return Err((a, b));
            }
        }
    }
    Ok(d)
}

/// An element `−Σ_a c_a α_a` of `Q⁻`, stored by its nonnegative coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootWeight {
    coeffs: Vec<i64>,
}

impl RootWeight {
    pub fn zero(datum: &BorcherdsCartanDatum) -> Self {
        RootWeight { coeffs: vec![0; datum.rank()] }
    }

    pub fn from_coeffs(datum: &BorcherdsCartanDatum, coeffs: Vec<i64>) -> Result<Self, CartanError> {
        if coeffs.len() != datum.rank() {
            return Err(CartanError::RankMismatch { expected: datum.rank(), found: coeffs.len() });
        }
        if let Some(p) = coeffs.iter().position(|&c| c < 0) {
            return Err(CartanError::NegativeCoefficient(datum.labels[p].clone()));
        }
        Ok(RootWeight { coeffs })
    }

    pub(crate) fn from_raw(coeffs: Vec<i64>) -> Self {
        RootWeight { coeffs }
    }

    /// `c_a`, the coefficient of `−α_a`.
    pub fn coeff(&self, a: Index) -> i64 {
        self.coeffs.get(a.0).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Sum of all coefficients: the number of `f` operators needed to reach
    /// this weight from `0`.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &RootWeight) -> RootWeight {
        let n = self.coeffs.len().max(other.coeffs.len());
        RootWeight {
            coeffs: (0..n).map(|i| self.coeffs.get(i).unwrap_or(&0) + other.coeffs.get(i).unwrap_or(&0)).collect(),
        }
    }

    /// `w − α_a`.
    pub fn sub_root(&self, a: Index) -> RootWeight {
        let mut out = self.clone();
        if out.coeffs.len() <= a.0 {
            out.coeffs.resize(a.0 + 1, 0);
        }
        out.coeffs[a.0] += 1;
        out
    }

    /// `w + α_a`, failing if `c_a = 0` since the result would leave `Q⁻`.
    pub fn add_root(&self, datum: &BorcherdsCartanDatum, a: Index) -> Result<RootWeight, CartanError> {
        if self.coeff(a) == 0 {
            return Err(CartanError::NegativeCoefficient(datum.label(a).to_string()));
        }
        let mut out = self.clone();
        out.coeffs[a.0] -= 1;
        Ok(out)
    }
}

/// A dominant integral weight, recorded only through `⟨h_a, λ⟩ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    pairings: Vec<i64>,
}

impl DominantWeight {
    pub fn new(datum: &BorcherdsCartanDatum, pairings: Vec<i64>) -> Result<Self, CartanError> {
        if pairings.len() != datum.rank() {
            return Err(CartanError::RankMismatch { expected: datum.rank(), found: pairings.len() });
        }
        if let Some(p) = pairings.iter().position(|&c| c < 0) {
            return Err(CartanError::NegativeCoefficient(datum.labels[p].clone()));
        }
        Ok(DominantWeight { pairings })
    }

    pub fn zero(datum: &BorcherdsCartanDatum) -> Self {
        DominantWeight { pairings: vec![0; datum.rank()] }
    }

    /// The fundamental weight `Λ_a`.
    pub fn fundamental(datum: &BorcherdsCartanDatum, a: Index) -> Self {
        let mut pairings = vec![0; datum.rank()];
        pairings[a.0] = 1;
        DominantWeight { pairings }
    }

    pub fn pairing(&self, a: Index) -> i64 {
        self.pairings.get(a.0).copied().unwrap_or(0)
    }

    pub fn pairings(&self) -> &[i64] {
        &self.pairings
    }

    pub fn add(&self, other: &DominantWeight) -> DominantWeight {
        let n = self.pairings.len().max(other.pairings.len());
        DominantWeight {
            pairings: (0..n)
                .map(|i| self.pairings.get(i).unwrap_or(&0) + other.pairings.get(i).unwrap_or(&0))
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> DominantWeight {
        DominantWeight { pairings: self.pairings.iter().map(|p| p * k).collect() }
    }

    /// Pairing-wise `self ≤ other`.
    pub fn le(&self, other: &DominantWeight) -> bool {
        self.pairings.iter().zip(&other.pairings).all(|(a, b)| a <= b)
    }
}

/// A weight in `λ`-offset form: a formal sum of dominant weights (tracked by
/// their coroot pairings) plus an element of `Q⁻`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub offset: Vec<i64>,
    pub root: RootWeight,
}

impl Weight {
    pub fn from_root(datum: &BorcherdsCartanDatum, root: RootWeight) -> Self {
        Weight { offset: vec![0; datum.rank()], root }
    }

    pub fn from_dominant(datum: &BorcherdsCartanDatum, lambda: &DominantWeight) -> Self {
        Weight { offset: lambda.pairings.clone(), root: RootWeight::zero(datum) }
    }

    pub fn pairing(&self, datum: &BorcherdsCartanDatum, a: Index) -> i64 {
        self.offset.get(a.0).copied().unwrap_or(0) + datum.pairing(a, &self.root)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        let n = self.offset.len().max(other.offset.len());
        Weight {
            offset: (0..n).map(|i| self.offset.get(i).unwrap_or(&0) + other.offset.get(i).unwrap_or(&0)).collect(),
            root: self.root.add(&other.root),
        }
    }
}

impl fmt::Display for RootWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "-{}a{}", c, i + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(m: &[Vec<i64>]) -> Result<BorcherdsCartanDatum, CartanError> {
        let labels: Vec<String> = (1..=m.len()).map(|i| i.to_string()).collect();
        BorcherdsCartanDatum::new(&labels, m)
    }

    #[test]
    fn purely_imaginary_example_is_valid() {
        let d = datum(&[vec![-2, -1], vec![-1, -2]]).unwrap();
        assert_eq!(d.index_kind("1").unwrap(), IndexKind::Imaginary);
        assert_eq!(d.index_kind("2").unwrap(), IndexKind::Imaginary);
        assert!(d.is_purely_imaginary());
    }

    #[test]
    fn sl2_is_real() {
        let d = datum(&[vec![2]]).unwrap();
        assert_eq!(d.index_kind("1").unwrap(), IndexKind::Real);
        assert_eq!(d.index_kind("7"), Err(CartanError::UnknownIndex("7".into())));
    }

    #[test]
    fn zero_diagonal_is_imaginary() {
        let d = datum(&[vec![2, -1], vec![-1, 0]]).unwrap();
        assert_eq!(d.index_kind("2").unwrap(), IndexKind::Imaginary);
        assert_eq!(d.index_kind("1").unwrap(), IndexKind::Real);
    }

    #[test]
    fn rejections_name_the_entry() {
        assert_eq!(
            datum(&[vec![2, -1], vec![0, 2]]),
            Err(CartanError::AsymmetricZeroPattern { row: "1".into(), col: "2".into() })
        );
        assert_eq!(datum(&[vec![-3]]), Err(CartanError::DiagonalOdd { label: "1".into(), value: -3 }));
        assert_eq!(datum(&[vec![4]]), Err(CartanError::DiagonalInvalid { label: "1".into(), value: 4 }));
        assert_eq!(datum(&[vec![1]]), Err(CartanError::DiagonalInvalid { label: "1".into(), value: 1 }));
        assert_eq!(
            datum(&[vec![2, 1], vec![1, 2]]),
            Err(CartanError::PositiveOffDiagonal { row: "1".into(), col: "2".into(), value: 1 })
        );
        // The edges at index 1 force d2 = d1 and d3 = d1 / 2; the edge 2–3 breaks it.
        assert_eq!(
            datum(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-2, -1, 2]]),
            Err(CartanError::NotSymmetrizable { row: "2".into(), col: "3".into() })
        );
        assert_eq!(BorcherdsCartanDatum::new::<&str>(&[], &[]), Err(CartanError::Empty));
        assert_eq!(
            BorcherdsCartanDatum::new(&["a", "a"], &[vec![2, 0], vec![0, 2]]),
            Err(CartanError::DuplicateLabel("a".into()))
        );
        assert!(matches!(
            BorcherdsCartanDatum::new(&["a", "b"], &[vec![2, 0], vec![0]]),
            Err(CartanError::NotSquare { .. })
        ));
    }

    #[test]
    fn symmetrizer_symmetrizes() {
        let d = datum(&[vec![-4, -3], vec![-1, -2]]).unwrap();
        let s = d.symmetrizer();
        // d1 * A12 * den2 == d2 * A21 * den1
        assert_eq!(s[0].0 * -3 * s[1].1, -s[1].0 * s[0].1);
    }

    #[test]
    fn pairing_examples() {
        let d = datum(&[vec![2]]).unwrap();
        let a = d.index("1").unwrap();
        assert_eq!(d.pairing(a, &RootWeight::zero(&d)), 0);
        let w = RootWeight::from_coeffs(&d, vec![3]).unwrap();
        assert_eq!(d.pairing(a, &w), -6);

        let d = datum(&[vec![-2, -1], vec![-1, -2]]).unwrap();
        let w = RootWeight::from_coeffs(&d, vec![3, 1]).unwrap();
        assert_eq!(d.pairing_by_label("1", &w).unwrap(), 7);
    }

    #[test]
    fn weight_arithmetic() {
        let d = datum(&[vec![-2, -1], vec![-1, -2]]).unwrap();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        let zero = RootWeight::zero(&d);
        assert_eq!(zero.add(&zero), zero);
        let w = zero.sub_root(one);
        assert_eq!(w.sub_root(one).coeffs(), &[2, 0]);
        assert_eq!(zero.sub_root(one).sub_root(two).coeffs(), &[1, 1]);
        assert_eq!(w.add_root(&d, one).unwrap(), zero);
        assert_eq!(zero.add_root(&d, one), Err(CartanError::NegativeCoefficient("1".into())));
        assert!(RootWeight::from_coeffs(&d, vec![1, -1]).is_err());
    }
}
