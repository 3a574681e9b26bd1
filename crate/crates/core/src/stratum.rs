//! Singularity patterns and the basic invariants of a stratum.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A stratum `H^k(a_1, .., a_n, -b_1, .., -b_p)` of meromorphic
/// k-differentials.
///
/// `zeros` holds the orders of the conical singularities (zeros of any order
/// and poles of order below `k`, the latter as negative numbers). `poles`
/// holds the positive orders `b_j >= k` of the poles of higher order. For
/// `k = 1` simple poles therefore live in `poles`, while for `k = 2` a simple
/// pole is a conical singularity of order `-1`.
///
/// Singularities are addressed by index: zeros first, in input order, then
/// poles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stratum {
    k: u32,
    zeros: Vec<i64>,
    poles: Vec<i64>,
    genus: u32,
}

/// Outcome of the nonemptiness criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Nonemptiness {
    Nonempty,
    Empty,
    Unknown,
}

impl Nonemptiness {
    pub fn as_str(self) -> &'static str {
        match self {
            Nonemptiness::Nonempty => "nonempty",
            Nonemptiness::Empty => "empty",
            Nonemptiness::Unknown => "unknown",
        }
    }
}

impl Stratum {
    /// Builds a stratum, checking the order ranges and the genus formula
    /// `sum(a) - sum(b) = k(2g - 2)` with `g >= 0`.
    pub fn new(k: u32, zeros: Vec<i64>, poles: Vec<i64>) -> Result<Self> {
        if k == 0 {
            return Err(Error::MalformedStratum("k must be positive".into()));
        }
        let kk = i64::from(k);
        for &a in &zeros {
            if a == 0 {
                return Err(Error::MalformedStratum(
                    "order 0 would be a marked point".into(),
                ));
            }
            if a <= -kk {
                return Err(Error::MalformedStratum(format!(
                    "conical order {a} must exceed -k = {}",
                    -kk
                )));
            }
        }
        for &b in &poles {
            if b < kk {
                return Err(Error::MalformedStratum(format!(
                    "pole order {b} is below k = {kk}"
                )));
            }
        }
        let total: i64 = zeros.iter().sum::<i64>() - poles.iter().sum::<i64>();
        let (q, r) = total.div_rem(&(2 * kk));
        if r != 0 {
            return Err(Error::MalformedStratum(format!(
                "total order {total} is not divisible by 2k = {}",
                2 * kk
            )));
        }
        let genus = q + 1;
        if genus < 0 {
            return Err(Error::MalformedStratum(format!(
                "total order {total} gives negative genus {genus}"
            )));
        }
        Ok(Stratum {
            k,
            zeros,
            poles,
            genus: genus as u32,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn zeros(&self) -> &[i64] {
        &self.zeros
    }

    pub fn poles(&self) -> &[i64] {
        &self.poles
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Number of conical singularities.
    pub fn n(&self) -> usize {
        self.zeros.len()
    }

    /// Number of poles of higher order.
    pub fn p(&self) -> usize {
        self.poles.len()
    }

    pub fn singularity_count(&self) -> usize {
        self.zeros.len() + self.poles.len()
    }

    /// Signed order of singularity `index`: `a_i` for conical singularities,
    /// `-b_j` for poles of higher order.
    pub fn order(&self, index: usize) -> i64 {
        if index < self.zeros.len() {
            self.zeros[index]
        } else {
            -self.poles[index - self.zeros.len()]
        }
    }

    pub fn is_conical(&self, index: usize) -> bool {
        index < self.zeros.len()
    }

    /// The full singularity pattern `(a_1, .., a_n, -b_1, .., -b_p)`.
    pub fn pattern(&self) -> Vec<i64> {
        (0..self.singularity_count()).map(|i| self.order(i)).collect()
    }

    /// The genus-zero stratum obtained by appending `2g` poles of order `k`.
    pub fn genus_reduction(&self) -> Stratum {
        let mut poles = self.poles.clone();
        poles.extend(std::iter::repeat(i64::from(self.k)).take(2 * self.genus as usize));
        Stratum::new(self.k, self.zeros.clone(), poles)
            .expect("appending 2g poles of order k lowers the genus to zero")
    }

    /// The same stratum with zeros and poles sorted in decreasing order.
    pub fn canonical(&self) -> Stratum {
        let mut zeros = self.zeros.clone();
        let mut poles = self.poles.clone();
        zeros.sort_unstable_by(|a, b| b.cmp(a));
        poles.sort_unstable_by(|a, b| b.cmp(a));
        Stratum {
            k: self.k,
            zeros,
            poles,
            genus: self.genus,
        }
    }

    /// Decides nonemptiness from the known criteria.
    ///
    /// * `k = 1`: nonempty unless the poles are a single simple pole
    ///   (total pole order at most one).
    /// * `k = 2`: nonempty whenever a pole of higher order exists; without
    ///   poles the patterns `(1, -1)` and `(1, 3)` are empty.
    /// * `k >= 3`: nonempty in genus zero, otherwise unknown.
    pub fn is_nonempty(&self) -> Nonemptiness {
        match self.k {
            1 => {
                if self.poles.is_empty() || self.poles.iter().sum::<i64>() > 1 {
                    Nonemptiness::Nonempty
                } else {
                    Nonemptiness::Empty
                }
            }
            2 => {
                if !self.poles.is_empty() {
                    return Nonemptiness::Nonempty;
                }
                let mut pattern = self.zeros.clone();
                pattern.sort_unstable();
                if pattern == [-1, 1] || pattern == [1, 3] {
                    Nonemptiness::Empty
                } else {
                    Nonemptiness::Nonempty
                }
            }
            _ => {
                if self.genus == 0 {
                    Nonemptiness::Nonempty
                } else {
                    Nonemptiness::Unknown
                }
            }
        }
    }

    pub(crate) fn require_k12(&self) -> Result<()> {
        if self.k == 1 || self.k == 2 {
            Ok(())
        } else {
            Err(Error::UnsupportedK(self.k))
        }
    }
}

/// Genus of a stratum; fails on the same inputs as [`Stratum::new`].
pub fn genus(k: u32, zeros: &[i64], poles: &[i64]) -> Result<u32> {
    Stratum::new(k, zeros.to_vec(), poles.to_vec()).map(|s| s.genus())
}

impl fmt::Display for Stratum {
    /// Renders `H^k(...)` with runs of equal consecutive entries collapsed
    /// into `value^count`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H^{}(", self.k)?;
        let pattern = self.pattern();
        let mut first = true;
        let mut i = 0;
        while i < pattern.len() {
            let v = pattern[i];
            let mut j = i + 1;
            while j < pattern.len() && pattern[j] == v {
                j += 1;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{v}^{}", j - i)?;
            } else {
                write!(f, "{v}")?;
            }
            i = j;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(k: u32, zeros: &[i64], poles: &[i64]) -> Stratum {
        Stratum::new(k, zeros.to_vec(), poles.to_vec()).unwrap()
    }

    #[test]
    fn genus_examples() {
        assert_eq!(s(1, &[3], &[1, 1, 1]).genus(), 1);
        assert_eq!(s(1, &[1], &[1, 1, 1]).genus(), 0);
        // sum(a) - sum(b) = 2 + 3 - 3 - 6 = -4 = 2(2g - 2)
        assert_eq!(s(2, &[2, 1, 1, 1, -1, -1, -1], &[2, 2, 2]).genus(), 0);
        assert_eq!(genus(1, &[1, 1], &[]).unwrap(), 2);
    }

    #[test]
    fn rejects_bad_patterns() {
        assert!(matches!(
            Stratum::new(1, vec![0], vec![2]),
            Err(Error::MalformedStratum(_))
        ));
        assert!(Stratum::new(2, vec![-2], vec![2]).is_err());
        assert!(Stratum::new(2, vec![1], vec![1]).is_err());
        // odd total for k = 1
        assert!(Stratum::new(1, vec![2], vec![1]).is_err());
        // genus -1
        assert!(Stratum::new(1, vec![2, 2], vec![2, 2, 2, 2]).is_err());
        assert!(Stratum::new(0, vec![], vec![]).is_err());
    }

    #[test]
    fn nonemptiness_examples() {
        assert_eq!(s(1, &[1], &[1]).is_nonempty(), Nonemptiness::Empty);
        assert_eq!(s(1, &[2], &[2]).is_nonempty(), Nonemptiness::Nonempty);
        assert_eq!(s(2, &[2], &[2]).is_nonempty(), Nonemptiness::Nonempty);
        assert_eq!(s(2, &[1, -1], &[]).is_nonempty(), Nonemptiness::Empty);
        assert_eq!(s(2, &[-1, 1], &[]).is_nonempty(), Nonemptiness::Empty);
        assert_eq!(s(2, &[1, 3], &[]).is_nonempty(), Nonemptiness::Empty);
        assert_eq!(s(2, &[2, 2], &[]).is_nonempty(), Nonemptiness::Nonempty);
        assert_eq!(
            s(3, &[4, -2, -2], &[3, 3]).is_nonempty(),
            Nonemptiness::Nonempty
        );
        assert_eq!(s(3, &[6], &[]).is_nonempty(), Nonemptiness::Unknown);
        // holomorphic abelian differentials
        assert_eq!(s(1, &[1, 1], &[]).is_nonempty(), Nonemptiness::Nonempty);
    }

    #[test]
    fn display_and_reduction() {
        let st = s(1, &[2, 2, 1], &[1, 1, 1]);
        assert_eq!(st.to_string(), "H^1(2^2,1,-1^3)");
        let st = s(1, &[3], &[1, 1, 1]);
        let red = st.genus_reduction();
        assert_eq!(red.genus(), 0);
        assert_eq!(red.poles(), &[1, 1, 1, 1, 1]);
        let st = s(2, &[3, -1], &[2]);
        assert_eq!(st.to_string(), "H^2(3,-1,-2)");
    }
}
