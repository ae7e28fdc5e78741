//! Losing score sequences and score sequences.
//!
//! Both types are value data: non-decreasing lists of non-negative integers
//! together with the arc size k. Validity in the sense of the prefix-sum
//! characterization is checked by the `verify` module, not here.

use serde::{Deserialize, Serialize};

use crate::comb::binom_us;
use crate::error::{Error, Result};

/// Canonical JSON form shared by both sequence types:
/// `{"n": .., "k": .., "values": [..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct SequenceRepr {
    n: usize,
    k: usize,
    values: Vec<u64>,
}

fn check_sequence(k: usize, values: &[u64]) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArcSize { k });
    }
    for i in 1..values.len() {
        if values[i - 1] > values[i] {
            return Err(Error::SequenceNotSorted { index: i });
        }
    }
    Ok(())
}

/// Parses a comma- or whitespace-separated list of non-negative integers.
pub fn parse_values(text: &str) -> Result<Vec<u64>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>().map_err(|_| Error::ParseValue {
                token: t.to_string(),
            })
        })
        .collect()
}

macro_rules! sequence_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(try_from = "SequenceRepr", into = "SequenceRepr")]
        pub struct $name {
            k: usize,
            values: Vec<u64>,
        }

        impl $name {
            /// Builds the sequence, rejecting k < 2 and out-of-order values.
            pub fn new(k: usize, values: Vec<u64>) -> Result<Self> {
                check_sequence(k, &values)?;
                Ok(Self { k, values })
            }

            /// Sorts the values into non-decreasing order, then builds.
            pub fn from_unsorted(k: usize, mut values: Vec<u64>) -> Result<Self> {
                values.sort_unstable();
                Self::new(k, values)
            }

            /// Number of vertices n (the sequence length).
            pub fn n(&self) -> usize {
                self.values.len()
            }

            /// Arc size k.
            pub fn k(&self) -> usize {
                self.k
            }

            pub fn values(&self) -> &[u64] {
                &self.values
            }
        }

        impl TryFrom<SequenceRepr> for $name {
            type Error = Error;

            fn try_from(repr: SequenceRepr) -> Result<Self> {
                if repr.n != repr.values.len() {
                    return Err(Error::LengthMismatch {
                        n: repr.n,
                        len: repr.values.len(),
                    });
                }
                Self::new(repr.k, repr.values)
            }
        }

        impl From<$name> for SequenceRepr {
            fn from(seq: $name) -> SequenceRepr {
                SequenceRepr {
                    n: seq.values.len(),
                    k: seq.k,
                    values: seq.values,
                }
            }
        }
    };
}

sequence_type! {
    /// Non-decreasing losing scores r_1 <= ... <= r_n.
    ///
    /// r_i counts the arcs in which a vertex occupies the last position.
    LosingScoreSequence
}

sequence_type! {
    /// Non-decreasing scores s_1 <= ... <= s_n.
    ///
    /// s_i counts the arcs containing a vertex anywhere but last. For every
    /// vertex s + r = C(n-1, k-1), since it lies in exactly that many arcs.
    ScoreSequence
}

impl LosingScoreSequence {
    /// The dual score sequence s_i = C(n-1, k-1) - r_{n+1-i}.
    pub fn complement(&self) -> Result<ScoreSequence> {
        ScoreSequence::new(self.k, complement_values(self.k, &self.values)?)
    }
}

impl ScoreSequence {
    /// The dual losing score sequence r_i = C(n-1, k-1) - s_{n+1-i}.
    pub fn complement(&self) -> Result<LosingScoreSequence> {
        LosingScoreSequence::new(self.k, complement_values(self.k, &self.values)?)
    }
}

/// Reverses and subtracts from C(n-1, k-1); keeps non-decreasing order.
fn complement_values(k: usize, values: &[u64]) -> Result<Vec<u64>> {
    let n = values.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let max = binom_us(n - 1, k - 1)?;
    values
        .iter()
        .enumerate()
        .rev()
        .map(|(index, &value)| {
            if value > max {
                Err(Error::EntryOutOfRange { index, value, max })
            } else {
                Ok(max - value)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_rejects_unsorted() {
        assert_eq!(
            LosingScoreSequence::new(3, vec![1, 0, 1]),
            Err(Error::SequenceNotSorted { index: 1 })
        );
        assert!(LosingScoreSequence::new(3, vec![0, 0, 2]).is_ok());
        assert!(LosingScoreSequence::new(3, vec![]).is_ok());
    }

    #[test]
    fn constructor_rejects_small_k() {
        assert_eq!(
            ScoreSequence::new(1, vec![0]),
            Err(Error::InvalidArcSize { k: 1 })
        );
    }

    #[test]
    fn from_unsorted_sorts() {
        let seq = LosingScoreSequence::from_unsorted(2, vec![2, 0, 1]).unwrap();
        assert_eq!(seq.values(), &[0, 1, 2]);
    }

    #[test]
    fn parse_values_accepts_commas_and_spaces() {
        assert_eq!(parse_values("1,1, 2 3").unwrap(), vec![1, 1, 2, 3]);
        assert_eq!(parse_values("").unwrap(), Vec::<u64>::new());
        assert!(matches!(
            parse_values("1,-2"),
            Err(Error::ParseValue { .. })
        ));
        assert!(matches!(parse_values("1,x"), Err(Error::ParseValue { .. })));
    }

    #[test]
    fn complement_reverses_and_subtracts() {
        // n=4, k=3: C(3, 2) = 3 per vertex.
        let r = LosingScoreSequence::new(3, vec![1, 1, 1, 1]).unwrap();
        assert_eq!(r.complement().unwrap().values(), &[2, 2, 2, 2]);

        let s = ScoreSequence::new(2, vec![0, 1, 2]).unwrap();
        assert_eq!(s.complement().unwrap().values(), &[0, 1, 2]);

        let empty = LosingScoreSequence::new(2, vec![]).unwrap();
        assert_eq!(empty.complement().unwrap().values(), &[] as &[u64]);
    }

    #[test]
    fn complement_rejects_oversized_entries() {
        let s = ScoreSequence::new(2, vec![0, 0, 3]).unwrap();
        assert_eq!(
            s.complement(),
            Err(Error::EntryOutOfRange {
                index: 2,
                value: 3,
                max: 2
            })
        );
    }

    #[test]
    fn json_round_trip_checks_length() {
        let r = LosingScoreSequence::new(3, vec![1, 1, 1, 1]).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"n":4,"k":3,"values":[1,1,1,1]}"#);
        let back: LosingScoreSequence = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);

        let bad: std::result::Result<LosingScoreSequence, _> =
            serde_json::from_str(r#"{"n":3,"k":3,"values":[1,1,1,1]}"#);
        assert!(bad.is_err());
    }
}
