//! Operator words such as `"f1 f1 f1 f2"`, `"e*_2"` or `"f'1^3"`.
//!
//! A word is read as a composition, so the rightmost token acts first;
//! [`parse_word`] returns the operators in application order.

use borcherds_rc::graph::Operator;
use borcherds_rc::{BorcherdsCartanDatum, CartanError, Index};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown operator in token {0:?}")]
    UnknownOperator(String),
    #[error("bad exponent in token {0:?}")]
    BadExponent(String),
    #[error(transparent)]
    Cartan(#[from] CartanError),
}

fn split_operator(token: &str) -> Option<(Operator, &str)> {
    for (prefix, op) in [
        ("e*", Operator::EStar),
        ("f*", Operator::FStar),
        ("f'", Operator::FPrime),
        ("e", Operator::E),
        ("f", Operator::F),
    ] {
        if let Some(rest) = token.strip_prefix(prefix) {
            return Some((op, rest.strip_prefix('_').unwrap_or(rest)));
        }
    }
    None
}

pub fn parse_word(d: &BorcherdsCartanDatum, text: &str) -> Result<Vec<(Operator, Index)>, WordError> {
    let mut out = Vec::new();
    for token in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let (op, rest) = split_operator(token).ok_or_else(|| WordError::UnknownOperator(token.into()))?;
        let (label, power) = match rest.split_once('^') {
            Some((l, p)) => (l, p.parse::<usize>().map_err(|_| WordError::BadExponent(token.into()))?),
            None => (rest, 1),
        };
        let a = d.index(label)?;
        out.extend(std::iter::repeat_n((op, a), power));
    }
    out.reverse();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        let d = BorcherdsCartanDatum::new(&["1", "2"], &[vec![-2, -1], vec![-1, -2]]).unwrap();
        let (one, two) = (d.index("1").unwrap(), d.index("2").unwrap());
        assert_eq!(
            parse_word(&d, "f1^3 f_2").unwrap(),
            vec![(Operator::F, two), (Operator::F, one), (Operator::F, one), (Operator::F, one)]
        );
        assert_eq!(parse_word(&d, "e*2, f'1").unwrap(), vec![(Operator::FPrime, one), (Operator::EStar, two)]);
        assert_eq!(parse_word(&d, "").unwrap(), vec![]);
        assert_eq!(parse_word(&d, "g1"), Err(WordError::UnknownOperator("g1".into())));
        assert!(matches!(parse_word(&d, "f3"), Err(WordError::Cartan(_))));
    }
}
