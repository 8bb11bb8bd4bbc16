//! Signed particle configurations.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bundle::Frame;
use crate::complex::Simplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Deserialize)]
struct RawConfiguration {
    #[serde(default)]
    positive: Vec<Frame>,
    #[serde(default)]
    negative: Vec<Frame>,
}

impl From<RawConfiguration> for Configuration {
    fn from(raw: RawConfiguration) -> Self {
        Configuration::new(raw.positive, raw.negative)
    }
}

/// A pair of frame multisets: positive and negative particles.
///
/// Both lists are kept sorted, so equality is multiset equality.
/// JSON form: `{"positive": [[v, ...], ...], "negative": [[v, ...], ...]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "RawConfiguration")]
pub struct Configuration {
    positive: Vec<Frame>,
    negative: Vec<Frame>,
}

impl Configuration {
    pub fn new(mut positive: Vec<Frame>, mut negative: Vec<Frame>) -> Self {
        positive.sort_unstable();
        negative.sort_unstable();
        Configuration { positive, negative }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn positive(&self) -> &[Frame] {
        &self.positive
    }

    pub fn negative(&self) -> &[Frame] {
        &self.negative
    }

    pub fn particles(&self) -> impl Iterator<Item = (Sign, &Frame)> {
        self.positive
            .iter()
            .map(|p| (Sign::Positive, p))
            .chain(self.negative.iter().map(|p| (Sign::Negative, p)))
    }

    pub fn len(&self) -> usize {
        self.positive.len() + self.negative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `|positive| - |negative|`.
    pub fn degree(&self) -> i64 {
        self.positive.len() as i64 - self.negative.len() as i64
    }

    pub fn from_particles<I>(particles: I) -> Self
    where
        I: IntoIterator<Item = (Sign, Frame)>,
    {
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for (s, p) in particles {
            match s {
                Sign::Positive => positive.push(p),
                Sign::Negative => negative.push(p),
            }
        }
        Configuration::new(positive, negative)
    }

    pub fn with(mut self, sign: Sign, frame: Frame, copies: usize) -> Self {
        let list = match sign {
            Sign::Positive => &mut self.positive,
            Sign::Negative => &mut self.negative,
        };
        list.extend(std::iter::repeat_n(frame, copies));
        list.sort_unstable();
        self
    }

    /// `(k, l)`: positive and negative particle counts per facet.
    pub fn position_counts(&self) -> BTreeMap<Simplex, (usize, usize)> {
        let mut counts: BTreeMap<Simplex, (usize, usize)> = BTreeMap::new();
        for p in &self.positive {
            counts.entry(p.position()).or_default().0 += 1;
        }
        for p in &self.negative {
            counts.entry(p.position()).or_default().1 += 1;
        }
        counts
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (s, p)) in self.particles().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let sign = if s == Sign::Positive { '+' } else { '-' };
            write!(f, "{sign}{p}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_does_not_matter() {
        let a = Configuration::new(vec![Frame::from([2, 1]), Frame::from([1, 2])], vec![]);
        let b = Configuration::new(vec![Frame::from([1, 2]), Frame::from([2, 1])], vec![]);
        assert_eq!(a, b);
    }

    #[test]
    fn json_shape() {
        let c = Configuration::new(vec![Frame::from([1, 2, 3])], vec![Frame::from([1, 3, 2])]);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"positive":[[1,2,3]],"negative":[[1,3,2]]}"#);
        let back: Configuration = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        let unsorted: Configuration =
            serde_json::from_str(r#"{"positive":[[3,2,1],[1,2,3]]}"#).unwrap();
        assert_eq!(unsorted.positive()[0], Frame::from([1, 2, 3]));
        assert!(unsorted.negative().is_empty());
    }

    #[test]
    fn counts_and_degree() {
        let c = Configuration::new(
            vec![Frame::from([1, 2, 3]), Frame::from([3, 2, 1])],
            vec![Frame::from([2, 3, 4])],
        );
        assert_eq!(c.degree(), 1);
        let counts = c.position_counts();
        assert_eq!(counts[&Simplex::new([1, 2, 3]).unwrap()], (2, 0));
        assert_eq!(counts[&Simplex::new([2, 3, 4]).unwrap()], (0, 1));
        assert_eq!(c.to_string(), "{+(1,2,3), +(3,2,1), -(2,3,4)}");
    }
}
