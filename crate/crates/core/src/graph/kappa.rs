//! Reducibility index and irreducibility.

use std::ops::ControlFlow;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::enumerate::{check_supported, find_rep_at_level};
use crate::graph::partition::{for_each_partition, Multiset};
use crate::graph::{purify, GraphRepresentation};
use crate::stratum::Stratum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KappaMethod {
    /// Search the stratum itself, from the highest admissible level down.
    #[default]
    Direct,
    /// Search the genus-zero stratum with `2g` extra poles of order `k`.
    GenusReduction,
}

/// The largest level `s` at which a graph representation exists.
///
/// Without poles only `k = 1` is accepted, and the index is always computed
/// through the genus reduction.
pub fn kappa(stratum: &Stratum, method: KappaMethod) -> Result<usize> {
    kappa_with_witness(stratum, method).map(|(s, _)| s)
}

fn kappa_with_witness(
    stratum: &Stratum,
    method: KappaMethod,
) -> Result<(usize, Option<GraphRepresentation>)> {
    check_supported(stratum)?;
    if stratum.p() == 0 && stratum.k() != 1 {
        return Err(Error::UnsupportedPattern(
            "the reducibility index without poles is defined for k = 1 only".into(),
        ));
    }
    if method == KappaMethod::GenusReduction || stratum.p() == 0 {
        let reduced = stratum.genus_reduction();
        let (s, _) = direct(&reduced);
        // a witness on the reduced stratum is not a rep of this one
        let own = if s > 0 && stratum.p() > 0 {
            find_rep_at_level(stratum, s)
        } else {
            None
        };
        return Ok((s, own));
    }
    Ok(direct(stratum))
}

fn level_cap(stratum: &Stratum) -> usize {
    let n = stratum.n();
    if stratum.k() != 1 {
        return n - 1;
    }
    let (g, p) = (stratum.genus() as i64, stratum.p() as i64);
    if g == 0 && p == 1 {
        return 0;
    }
    let cap = (2 * g + 2 * p - 3).max(0) as usize;
    cap.min(n - 1)
}

fn direct(stratum: &Stratum) -> (usize, Option<GraphRepresentation>) {
    for level in (1..=level_cap(stratum)).rev() {
        if let Some(rep) = find_rep_at_level(stratum, level) {
            return (level, Some(rep));
        }
    }
    (0, None)
}

/// Irreducibility of a stratum together with the evidence behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irreducibility {
    /// `g = 0` and `kappa = 0`.
    pub irreducible: bool,
    pub kappa: usize,
    /// A representation of level `kappa` when `kappa >= 1`; otherwise, in
    /// positive genus, the purified trivial representation.
    pub witness: Option<GraphRepresentation>,
    /// The pattern splits into two parts each summing to `-k`.
    pub literal_split: bool,
    /// Such a split exists with a conical singularity on each side.
    pub augmented_split: bool,
    /// The two split tests give different answers.
    pub readings_disagree: bool,
}

pub fn is_irreducible(stratum: &Stratum) -> Result<Irreducibility> {
    let (kappa, witness) = kappa_with_witness(stratum, KappaMethod::Direct)?;
    let witness = match witness {
        Some(w) => Some(w),
        None if stratum.genus() > 0 => Some(purify(&GraphRepresentation::trivial(stratum)?)),
        None => None,
    };
    let literal_split = has_split(stratum, false);
    let augmented_split = has_split(stratum, true);
    Ok(Irreducibility {
        irreducible: stratum.genus() == 0 && kappa == 0,
        kappa,
        witness,
        literal_split,
        augmented_split,
        readings_disagree: literal_split != augmented_split,
    })
}

fn has_split(stratum: &Stratum, conical_on_each_side: bool) -> bool {
    let k = i64::from(stratum.k());
    let set = Multiset::from_values(&stratum.pattern());
    let required = |v: i64| !conical_on_each_side || v > -k;
    for_each_partition(&set, 2, required, |b| set.sum(b) == -k, |_| {
        ControlFlow::Break(())
    })
    .is_break()
}

/// Whether `gcd(a_1, .., a_n, b_1, .., b_p) != 1`, which forces `kappa = 0`
/// in genus zero.
pub fn gcd_obstruction(stratum: &Stratum) -> Result<bool> {
    if stratum.k() != 1 {
        return Err(Error::UnsupportedK(stratum.k()));
    }
    if stratum.genus() != 0 {
        return Err(Error::WrongGenus {
            expected: 0,
            actual: stratum.genus(),
        });
    }
    let gcd = stratum
        .pattern()
        .iter()
        .fold(0i64, |acc, &v| acc.gcd(&v.abs()));
    Ok(gcd != 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate;

    fn st(k: u32, zeros: &[i64], poles: &[i64]) -> Stratum {
        Stratum::new(k, zeros.to_vec(), poles.to_vec()).unwrap()
    }

    #[test]
    fn pinned_values() {
        assert_eq!(kappa(&st(1, &[1, 1, 1, 1], &[1, 1, 1, 1]), KappaMethod::Direct), Ok(3));
        assert_eq!(kappa(&st(1, &[1, 7], &[5, 5]), KappaMethod::Direct), Ok(0));
        assert_eq!(kappa(&st(1, &[4, 2], &[3, 3]), KappaMethod::Direct), Ok(1));
        assert_eq!(kappa(&st(1, &[1, 1], &[1, 1, 1, 1]), KappaMethod::Direct), Ok(1));
    }

    #[test]
    fn methods_agree_on_small_strata() {
        for s in [
            st(1, &[3], &[1, 1, 1]),
            st(1, &[2, 1, 1], &[2]),
            st(2, &[3, 1], &[2, 2]),
            st(2, &[2, 1, 1, 1, -1, -1, -1], &[2, 2, 2]),
            st(1, &[1, 1], &[]),
        ] {
            assert_eq!(
                kappa(&s, KappaMethod::Direct),
                kappa(&s, KappaMethod::GenusReduction),
                "{s}"
            );
        }
    }

    #[test]
    fn translation_surfaces_without_poles() {
        // H^1(1,1): reduction H^1(1,1,-1,-1,-1,-1), kappa = n - 1 = 1
        assert_eq!(kappa(&st(1, &[1, 1], &[]), KappaMethod::Direct), Ok(1));
        assert_eq!(kappa(&st(1, &[2], &[]), KappaMethod::Direct), Ok(0));
        assert!(matches!(
            kappa(&st(2, &[1, 1, 1, 1], &[]), KappaMethod::Direct),
            Err(Error::UnsupportedPattern(_))
        ));
    }

    #[test]
    fn irreducibility_and_witnesses() {
        let r = is_irreducible(&st(1, &[1, 7], &[5, 5])).unwrap();
        assert!(r.irreducible && r.witness.is_none());
        assert!(!r.literal_split && !r.readings_disagree);

        let r = is_irreducible(&st(1, &[3], &[1, 1, 1])).unwrap();
        assert!(!r.irreducible);
        let w = r.witness.unwrap();
        assert_eq!(validate(&w), vec![]);

        let r = is_irreducible(&st(1, &[1, 1], &[1, 1, 1, 1])).unwrap();
        assert_eq!(r.kappa, 1);
        assert_eq!(r.witness.as_ref().map(|w| w.level()), Some(1));
        assert!(r.augmented_split);
    }

    #[test]
    fn literal_split_can_disagree() {
        // {-1} | {1, -2}: the first side holds no conical singularity
        let r = is_irreducible(&st(1, &[1], &[1, 2])).unwrap();
        assert!(r.literal_split && !r.augmented_split && r.readings_disagree);
        assert!(r.irreducible);
    }

    #[test]
    fn gcd_obstruction_cases() {
        assert_eq!(
            gcd_obstruction(&st(1, &[4, 2], &[3, 3])),
            Err(Error::WrongGenus {
                expected: 0,
                actual: 1
            })
        );
        assert_eq!(gcd_obstruction(&st(1, &[4, 2], &[3, 3, 2])), Ok(false));
        assert_eq!(gcd_obstruction(&st(1, &[1, 7], &[5, 5])), Ok(false));
        let s = st(1, &[2, 2], &[2, 2, 2]);
        assert_eq!(gcd_obstruction(&s), Ok(true));
        assert_eq!(kappa(&s, KappaMethod::Direct), Ok(0));
        assert_eq!(
            gcd_obstruction(&st(1, &[3], &[1, 1, 1])),
            Err(Error::WrongGenus {
                expected: 0,
                actual: 1
            })
        );
        assert_eq!(
            gcd_obstruction(&st(2, &[2], &[3, 3])),
            Err(Error::UnsupportedK(2))
        );
    }
}
