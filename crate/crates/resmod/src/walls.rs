//! The wall-and-chamber decomposition of the weight interval (1/12, 1].
//!
//! Four families generate every wall. Threshold walls sit at the log
//! canonical thresholds of the fiber dictionary and switch a fiber between
//! its Weierstrass and intermediate models. Section walls at 1/k are where
//! the section over a k-fold stacked point contracts, cut off at k = 5 by
//! the total-weight constraint, with the full section contracting at once
//! on the 12a = 2 wall. Flip walls at a0/k are where a pseudoelliptic tree
//! hanging on an intermediate fiber of threshold a0 under a k-fold mark
//! flips back through the fiber, and absorption walls at 1/k are where an
//! isotrivial j-infinite component under a k-fold mark is absorbed into its
//! neighbor. Coincidences merge: a single rational value can carry labels
//! from every family.
//!
//! ```
//! use resmod::rational::Q;
//! use resmod::walls::{chamber_of, enumerate_walls};
//!
//! let walls = enumerate_walls();
//! assert_eq!(walls.len(), 21);
//! assert_eq!(walls.first().unwrap().value, Q::one());
//! assert_eq!(walls.last().unwrap().value, Q::new(1, 10));
//!
//! let chamber = chamber_of(&Q::new(1, 11))?;
//! assert_eq!(chamber, (Q::new(1, 12), Q::new(1, 10)));
//! # Ok::<(), resmod::walls::WallError>(())
//! ```

use crate::rational::Q;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Why a given rational weight is a wall.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum WallLabel {
    /// Fibers of log canonical threshold `lct` switch model here.
    Threshold { lct: Q },
    /// The section over a k-fold stacked point contracts, 1 <= k <= 5.
    SectionContraction { k: u32 },
    /// The entire section contracts at once: 12a = 2.
    TotalSectionContraction,
    /// A pseudoelliptic on an intermediate fiber of threshold `lct` under a
    /// k-fold mark flips through it, 2 <= k <= 5.
    PseudoellipticFlip { lct: Q, k: u32 },
    /// An isotrivial j-infinite component under a k-fold mark is absorbed,
    /// 2 <= k <= 9.
    IsotrivialAbsorption { k: u32 },
}

impl WallLabel {
    /// Short family tag used in tabular output.
    pub fn family(&self) -> &'static str {
        match self {
            WallLabel::Threshold { .. } => "threshold",
            WallLabel::SectionContraction { .. } => "section",
            WallLabel::TotalSectionContraction => "section-total",
            WallLabel::PseudoellipticFlip { .. } => "flip",
            WallLabel::IsotrivialAbsorption { .. } => "absorption",
        }
    }
}

impl fmt::Display for WallLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WallLabel::Threshold { lct } => write!(f, "threshold(lct = {lct})"),
            WallLabel::SectionContraction { k } => write!(f, "section(k = {k})"),
            WallLabel::TotalSectionContraction => write!(f, "section(total)"),
            WallLabel::PseudoellipticFlip { lct, k } => {
                write!(f, "flip(lct = {lct}, k = {k})")
            }
            WallLabel::IsotrivialAbsorption { k } => write!(f, "absorption(k = {k})"),
        }
    }
}

/// A wall value with every label that lands on it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Wall {
    pub value: Q,
    pub labels: BTreeSet<WallLabel>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WallError {
    #[error("{value} is a wall, not inside a chamber")]
    OnWall { value: Q },
    #[error("{value} is outside the weight interval (1/12, 1]")]
    OutOfRange { value: Q },
}

/// The seven threshold values occurring in the fiber dictionary.
fn threshold_values() -> Vec<Q> {
    [(5, 6), (3, 4), (2, 3), (1, 2), (1, 3), (1, 4), (1, 6)]
        .into_iter()
        .map(|(n, d)| Q::new(n, d))
        .collect()
}

/// All walls on (1/12, 1], strictly descending, labels merged on
/// coinciding values.
pub fn enumerate_walls() -> Vec<Wall> {
    let mut map: BTreeMap<Q, BTreeSet<WallLabel>> = BTreeMap::new();
    let mut add = |value: Q, label: WallLabel| {
        debug_assert!(value > Q::new(1, 12) && value <= Q::one());
        map.entry(value).or_default().insert(label);
    };
    for lct in threshold_values() {
        add(lct.clone(), WallLabel::Threshold { lct });
    }
    for k in 1..=5 {
        add(Q::new(1, k as i64), WallLabel::SectionContraction { k });
    }
    add(Q::new(1, 6), WallLabel::TotalSectionContraction);
    for lct in [Q::new(5, 6), Q::new(3, 4), Q::new(2, 3), Q::new(1, 2)] {
        for k in 2..=5 {
            add(
                &lct / &Q::int(k as i64),
                WallLabel::PseudoellipticFlip { lct: lct.clone(), k },
            );
        }
    }
    for k in 2..=9 {
        add(Q::new(1, k as i64), WallLabel::IsotrivialAbsorption { k });
    }
    map.into_iter()
        .rev()
        .map(|(value, labels)| Wall { value, labels })
        .collect()
}

/// The open chamber containing a non-wall weight: the pair of adjacent
/// walls around it, with 1/12 as the open bottom end.
pub fn chamber_of(a: &Q) -> Result<(Q, Q), WallError> {
    if *a <= Q::new(1, 12) || *a > Q::one() {
        return Err(WallError::OutOfRange { value: a.clone() });
    }
    let walls = enumerate_walls();
    if walls.iter().any(|w| w.value == *a) {
        return Err(WallError::OnWall { value: a.clone() });
    }
    let hi = walls
        .iter()
        .rev()
        .map(|w| &w.value)
        .find(|v| *v > a)
        .expect("1 is a wall above every non-wall weight")
        .clone();
    let lo = walls
        .iter()
        .map(|w| &w.value)
        .find(|v| *v < a)
        .cloned()
        .unwrap_or_else(|| Q::new(1, 12));
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn the_twenty_one_wall_values() {
        let walls = enumerate_walls();
        let values: Vec<Q> = walls.iter().map(|w| w.value.clone()).collect();
        let expected: Vec<Q> = [
            (1, 1),
            (5, 6),
            (3, 4),
            (2, 3),
            (1, 2),
            (5, 12),
            (3, 8),
            (1, 3),
            (5, 18),
            (1, 4),
            (2, 9),
            (5, 24),
            (1, 5),
            (3, 16),
            (1, 6),
            (3, 20),
            (1, 7),
            (2, 15),
            (1, 8),
            (1, 9),
            (1, 10),
        ]
        .into_iter()
        .map(|(n, d)| q(n, d))
        .collect();
        assert_eq!(values, expected);
        assert_eq!(walls.len(), 21);
        assert!(walls.iter().all(|w| !w.labels.is_empty()));
    }

    #[test]
    fn smallest_wall_is_a_flip() {
        let walls = enumerate_walls();
        let last = walls.last().unwrap();
        assert_eq!(last.value, q(1, 10));
        assert_eq!(
            last.labels,
            BTreeSet::from([WallLabel::PseudoellipticFlip { lct: q(1, 2), k: 5 }])
        );
    }

    #[test]
    fn labels_merge_at_one_sixth() {
        let walls = enumerate_walls();
        let sixth = walls.iter().find(|w| w.value == q(1, 6)).unwrap();
        let expected = BTreeSet::from([
            WallLabel::Threshold { lct: q(1, 6) },
            WallLabel::TotalSectionContraction,
            WallLabel::PseudoellipticFlip { lct: q(5, 6), k: 5 },
            WallLabel::PseudoellipticFlip { lct: q(2, 3), k: 4 },
            WallLabel::PseudoellipticFlip { lct: q(1, 2), k: 3 },
            WallLabel::IsotrivialAbsorption { k: 6 },
        ]);
        assert_eq!(sixth.labels, expected);
    }

    #[test]
    fn every_family_member_is_present() {
        let walls = enumerate_walls();
        let has = |value: Q, label: WallLabel| {
            walls
                .iter()
                .find(|w| w.value == value)
                .is_some_and(|w| w.labels.contains(&label))
        };
        for lct in threshold_values() {
            assert!(has(lct.clone(), WallLabel::Threshold { lct }));
        }
        for k in 1..=5u32 {
            assert!(has(q(1, k as i64), WallLabel::SectionContraction { k }));
        }
        assert!(has(q(1, 6), WallLabel::TotalSectionContraction));
        for lct in [q(5, 6), q(3, 4), q(2, 3), q(1, 2)] {
            for k in 2..=5u32 {
                assert!(has(
                    &lct / &Q::int(k as i64),
                    WallLabel::PseudoellipticFlip { lct: lct.clone(), k }
                ));
            }
        }
        for k in 2..=9u32 {
            assert!(has(q(1, k as i64), WallLabel::IsotrivialAbsorption { k }));
        }
        let label_count: usize = walls.iter().map(|w| w.labels.len()).sum();
        assert_eq!(label_count, 7 + 5 + 1 + 16 + 8);
    }

    #[test]
    fn chambers_bracket_their_weight() {
        assert_eq!(chamber_of(&q(1, 11)).unwrap(), (q(1, 12), q(1, 10)));
        assert_eq!(chamber_of(&q(9, 10)).unwrap(), (q(5, 6), q(1, 1)));
        assert_eq!(chamber_of(&q(11, 60)).unwrap(), (q(1, 6), q(3, 16)));
        assert_eq!(chamber_of(&q(19, 96)).unwrap(), (q(3, 16), q(1, 5)));
        assert_eq!(
            chamber_of(&q(1, 6)).unwrap_err(),
            WallError::OnWall { value: q(1, 6) }
        );
        assert_eq!(
            chamber_of(&q(1, 1)).unwrap_err(),
            WallError::OnWall { value: q(1, 1) }
        );
        assert_eq!(
            chamber_of(&q(1, 12)).unwrap_err(),
            WallError::OutOfRange { value: q(1, 12) }
        );
        assert_eq!(
            chamber_of(&q(13, 12)).unwrap_err(),
            WallError::OutOfRange { value: q(13, 12) }
        );

        // each chamber's sample point maps back to its own walls
        let walls = enumerate_walls();
        for pair in walls.windows(2) {
            let mid = (&pair[0].value + &pair[1].value) / Q::int(2);
            let (lo, hi) = chamber_of(&mid).unwrap();
            assert_eq!((lo, hi), (pair[1].value.clone(), pair[0].value.clone()));
        }
    }
}
