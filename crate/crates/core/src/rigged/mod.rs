//! Rigged configurations, vacancy numbers and the ⋆-involution.
//!
//! A rigged configuration assigns to every index `a` a multiset of rows
//! `(length, rigging)`. Rows of length `0` with rigging `0` are implicit and
//! never stored. The crystal operators live in [`ops`], the statistics in
//! [`stats`].

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::cartan::{BorcherdsCartanDatum, Index, RootWeight};

pub mod ops;
pub mod stats;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RcError {
    #[error("rows must have positive length")]
    ZeroLengthRow,
    #[error("expected {expected} rigged partitions, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("partition {index} of an imaginary index is not a single column")]
    NotColumn { index: usize },
    #[error("rigging {rigging} in imaginary partition {index} is below -A_aa/2 = {bound}")]
    RiggingBelowBound { index: usize, rigging: i64, bound: i64 },
}

/// One row of a rigged partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Row {
    pub length: u32,
    pub rigging: i64,
}

impl Row {
    pub fn new(length: u32, rigging: i64) -> Self {
        Row { length, rigging }
    }
}

/// A multiset of rows, stored sorted by length then rigging, both descending.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RiggedPartition {
    rows: Vec<Row>,
}

impl RiggedPartition {
    pub fn new(rows: impl IntoIterator<Item = Row>) -> Result<Self, RcError> {
        let rows: Vec<Row> = rows.into_iter().collect();
        if rows.iter().any(|r| r.length == 0) {
            return Err(RcError::ZeroLengthRow);
        }
        let mut p = RiggedPartition { rows };
        p.normalize();
        Ok(p)
    }

    pub(crate) fn normalize(&mut self) {
        self.rows.retain(|r| r.length > 0);
        self.rows.sort_unstable_by(|x, y| y.cmp(x));
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Row> {
        &mut self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of boxes `|ν^(a)|`.
    pub fn size(&self) -> i64 {
        self.rows.iter().map(|r| r.length as i64).sum()
    }

    pub fn riggings(&self) -> impl Iterator<Item = i64> + '_ {
        self.rows.iter().map(|r| r.rigging)
    }

    pub fn lengths(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().map(|r| r.length)
    }

    /// `m_i`, the number of rows of length `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.rows.iter().filter(|r| r.length == i).count()
    }

    /// `Σ_j min(i, j) m_j`.
    fn truncated_size(&self, i: u32) -> i64 {
        self.rows.iter().map(|r| r.length.min(i) as i64).sum()
    }

    pub fn is_column(&self) -> bool {
        self.rows.iter().all(|r| r.length == 1)
    }
}

/// One rigged partition per index of the underlying datum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RiggedConfiguration {
    parts: Vec<RiggedPartition>,
}

impl RiggedConfiguration {
    /// The highest weight element `(ν_∅, J_∅)`.
    pub fn empty(datum: &BorcherdsCartanDatum) -> Self {
        RiggedConfiguration { parts: (0..datum.rank()).map(|_| RiggedPartition::default()).collect() }
    }

    pub fn from_parts(datum: &BorcherdsCartanDatum, parts: Vec<RiggedPartition>) -> Result<Self, RcError> {
        if parts.len() != datum.rank() {
            return Err(RcError::RankMismatch { expected: datum.rank(), found: parts.len() });
        }
        Ok(RiggedConfiguration { parts })
    }

    /// Builds a configuration from `(length, rigging)` pairs per index.
    pub fn from_rows(datum: &BorcherdsCartanDatum, rows: &[&[(u32, i64)]]) -> Result<Self, RcError> {
        let parts = rows
            .iter()
            .map(|rs| RiggedPartition::new(rs.iter().map(|&(l, x)| Row::new(l, x))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_parts(datum, parts)
    }

    pub fn part(&self, a: Index) -> &RiggedPartition {
        &self.parts[a.0]
    }

    pub fn parts(&self) -> &[RiggedPartition] {
        &self.parts
    }

    pub(crate) fn part_mut(&mut self, a: Index) -> &mut RiggedPartition {
        &mut self.parts[a.0]
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(RiggedPartition::is_empty)
    }

    /// Total number of boxes over all indices.
    pub fn size(&self) -> i64 {
        self.parts.iter().map(RiggedPartition::size).sum()
    }

    /// The vacancy number `p_i^(a) = −Σ_(b,j) A_ab min(i, j) m_j^(b)`.
    pub fn vacancy(&self, datum: &BorcherdsCartanDatum, a: Index, i: u32) -> i64 {
        -datum.indices().map(|b| datum.entry(a, b) * self.parts[b.0].truncated_size(i)).sum::<i64>()
    }

    /// `p_∞^(a) = −Σ_b A_ab |ν^(b)|`, which equals `⟨h_a, wt⟩`.
    pub fn vacancy_infinity(&self, datum: &BorcherdsCartanDatum, a: Index) -> i64 {
        -datum.indices().map(|b| datum.entry(a, b) * self.parts[b.0].size()).sum::<i64>()
    }

    pub fn corigging(&self, datum: &BorcherdsCartanDatum, a: Index, row: Row) -> i64 {
        self.vacancy(datum, a, row.length) - row.rigging
    }

    /// Coriggings of `ν^(a)`, in the stored row order.
    pub fn coriggings(&self, datum: &BorcherdsCartanDatum, a: Index) -> Vec<i64> {
        self.parts[a.0].rows.iter().map(|&r| self.corigging(datum, a, r)).collect()
    }

    /// `wt = −Σ_a |ν^(a)| α_a`.
    pub fn weight(&self) -> RootWeight {
        RootWeight::from_raw(self.parts.iter().map(RiggedPartition::size).collect())
    }

    /// The ⋆-involution: every rigging is replaced by its corigging.
    pub fn star(&self, datum: &BorcherdsCartanDatum) -> RiggedConfiguration {
        let mut out = self.clone();
        for a in datum.indices() {
            for row in out.parts[a.0].rows.iter_mut() {
                row.rigging = self.vacancy(datum, a, row.length) - row.rigging;
            }
            out.parts[a.0].normalize();
        }
        out
    }

    /// Checks the shape constraints every element of `RC(∞)` satisfies at
    /// imaginary indices: a single column with riggings at least `−A_aa/2`.
    pub fn check_imaginary_columns(&self, datum: &BorcherdsCartanDatum) -> Result<(), RcError> {
        for a in datum.indices().filter(|&a| datum.is_imaginary(a)) {
            let part = &self.parts[a.0];
            if !part.is_column() {
                return Err(RcError::NotColumn { index: a.0 });
            }
            let bound = -datum.half_diagonal(a);
            if let Some(x) = part.riggings().find(|&x| x < bound) {
                return Err(RcError::RiggingBelowBound { index: a.0, rigging: x, bound });
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RiggedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("RC[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{:?}", part)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for RiggedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}", r.length, r.rigging)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn d2() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::new(&["1", "2"], &[vec![-2, -1], vec![-1, -2]]).unwrap()
    }

    #[test]
    fn empty_configuration_has_zero_vacancies() {
        let d = d2();
        let rc = RiggedConfiguration::empty(&d);
        for a in d.indices() {
            for i in 1..5 {
                assert_eq!(rc.vacancy(&d, a, i), 0);
            }
            assert_eq!(rc.vacancy_infinity(&d, a), 0);
        }
    }

    #[test]
    fn vacancies_of_worked_example() {
        let d = d2();
        let rc = RiggedConfiguration::from_rows(&d, &[&[(1, 5), (1, 3), (1, 1)], &[(1, 4)]]).unwrap();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        assert_eq!(rc.vacancy(&d, one, 1), 7);
        assert_eq!(rc.vacancy(&d, two, 1), 5);
        assert_eq!(rc.weight().coeffs(), &[3, 1]);
    }

    #[test]
    fn sl2_vacancies() {
        let d = BorcherdsCartanDatum::new(&["1"], &[vec![2]]).unwrap();
        let a = d.index("1").unwrap();
        let rc = RiggedConfiguration::from_rows(&d, &[&[(2, -2)]]).unwrap();
        assert_eq!(rc.vacancy(&d, a, 1), -2);
        assert_eq!(rc.vacancy(&d, a, 2), -4);
        assert_eq!(rc.vacancy_infinity(&d, a), -4);
    }

    #[test]
    fn canonical_order_makes_equality_a_multiset_comparison() {
        let d = d2();
        let x = RiggedConfiguration::from_rows(&d, &[&[(1, 1), (1, 5), (1, 3)], &[]]).unwrap();
        let y = RiggedConfiguration::from_rows(&d, &[&[(1, 5), (1, 3), (1, 1)], &[]]).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.part(d.index("1").unwrap()).riggings().collect::<Vec<_>>(), vec![5, 3, 1]);
        assert_eq!(RiggedPartition::new([Row::new(0, 0)]), Err(RcError::ZeroLengthRow));
    }

    #[test]
    fn star_of_worked_example() {
        let d = d2();
        let rc = RiggedConfiguration::from_rows(&d, &[&[(1, 5), (1, 3), (1, 1)], &[(1, 4)]]).unwrap();
        let s = rc.star(&d);
        let expected = RiggedConfiguration::from_rows(&d, &[&[(1, 2), (1, 4), (1, 6)], &[(1, 1)]]).unwrap();
        assert_eq!(s, expected);
        assert_eq!(s.star(&d), rc);
        let empty = RiggedConfiguration::empty(&d);
        assert_eq!(empty.star(&d), empty);
    }

    #[test]
    fn imaginary_column_validation() {
        let d = d2();
        let bad_shape = RiggedConfiguration::from_rows(&d, &[&[(2, 1)], &[]]).unwrap();
        assert_eq!(bad_shape.check_imaginary_columns(&d), Err(RcError::NotColumn { index: 0 }));
        let bad_rigging = RiggedConfiguration::from_rows(&d, &[&[(1, 0)], &[]]).unwrap();
        assert_eq!(
            bad_rigging.check_imaginary_columns(&d),
            Err(RcError::RiggingBelowBound { index: 0, rigging: 0, bound: 1 })
        );
    }
}
