//! Weighted stability for genus-zero nodal marked curves.
//!
//! A curve here is a tree of projective lines carrying marked points; every
//! mark is weighted by one constant `a` in `(0, 1]`, scaled by an integer
//! multiplicity. A component is stable when its marks plus nodes give total
//! weight strictly above 2, and a reduction contracts the violating
//! components one at a time until everything is stable or the whole curve
//! collapses to a point.
//!
//! Only two contraction shapes can occur. A component with three or more
//! nodes has weight above 2 outright, and a bridge carrying any mark does
//! too, so progress is always a leaf folding its marks onto its neighbor as
//! one stacked point, or a markless bridge dropping out and joining its two
//! neighbors. Stacking can never push a mark past weight 1: the contracted
//! leaf had `a * (sum of marks) + 1 <= 2`, which is the same bound.
//!
//! ```
//! use resmod::hassett::{is_stable, reduce_tree, Mark, TreeComponent, WeightedTree};
//! use resmod::rational::Q;
//!
//! let marks = |prefix: &str, n: usize| -> Vec<Mark> {
//!     (0..n)
//!         .map(|i| Mark { label: format!("{prefix}{i}"), mult: 1 })
//!         .collect()
//! };
//! let tree = WeightedTree::new(
//!     vec![
//!         TreeComponent { id: 0, marks: marks("p", 5) },
//!         TreeComponent { id: 1, marks: marks("q", 7) },
//!     ],
//!     vec![(0, 1)],
//! )?;
//!
//! // Five unit marks and one node weigh 5a + 1: stable only above a = 1/5.
//! assert!(is_stable(&tree, &Q::new(1, 4)));
//! assert!(!is_stable(&tree, &Q::new(53, 300)));
//!
//! let (reduced, events) = reduce_tree(&tree, &Q::new(53, 300))?;
//! assert_eq!(reduced.components().len(), 1);
//! assert_eq!(events.len(), 1);
//! # Ok::<(), resmod::hassett::TreeError>(())
//! ```

use crate::rational::Q;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A marked point with multiplicity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Mark {
    pub label: String,
    pub mult: u32,
}

/// One projective line of the curve.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TreeComponent {
    pub id: u32,
    pub marks: Vec<Mark>,
}

/// A tree of marked components. Stored normalized: components sorted by id,
/// each edge as an ordered pair, edges sorted.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawTree", into = "RawTree")]
pub struct WeightedTree {
    components: Vec<TreeComponent>,
    edges: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct RawTree {
    components: Vec<TreeComponent>,
    edges: Vec<(u32, u32)>,
}

impl From<WeightedTree> for RawTree {
    fn from(t: WeightedTree) -> RawTree {
        RawTree { components: t.components, edges: t.edges }
    }
}

impl TryFrom<RawTree> for WeightedTree {
    type Error = TreeError;

    fn try_from(raw: RawTree) -> Result<WeightedTree, TreeError> {
        WeightedTree::new(raw.components, raw.edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("dual graph is not a tree: {reason}")]
    NotATree { reason: String },
    #[error("the whole curve contracts to a point at this weight")]
    Collapse,
}

fn not_a_tree(reason: impl Into<String>) -> TreeError {
    TreeError::NotATree { reason: reason.into() }
}

/// A single contraction performed by [`reduce_tree`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ContractionEvent {
    /// A leaf folded onto its neighbor; its marks became one stacked point
    /// (absent when the leaf was unmarked).
    LeafContracted {
        id: u32,
        onto: u32,
        #[serde(skip_serializing_if = "Option::is_none")]
        stacked: Option<Mark>,
    },
    /// A markless bridge dropped out, joining its two neighbors directly.
    BridgeContracted { id: u32, joined: (u32, u32) },
}

impl WeightedTree {
    /// Validates that the components and edges form a tree (connected,
    /// acyclic, unique ids, no self-loops) and normalizes the storage order.
    pub fn new(
        mut components: Vec<TreeComponent>,
        edges: Vec<(u32, u32)>,
    ) -> Result<WeightedTree, TreeError> {
        if components.is_empty() {
            return Err(not_a_tree("no components"));
        }
        components.sort_by_key(|c| c.id);
        let ids: BTreeSet<u32> = components.iter().map(|c| c.id).collect();
        if ids.len() != components.len() {
            return Err(not_a_tree("duplicate component id"));
        }
        for c in &components {
            if c.marks.iter().any(|m| m.mult == 0) {
                return Err(not_a_tree(format!("component {} has a mark of multiplicity 0", c.id)));
            }
        }
        let mut norm_edges: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(not_a_tree(format!("self-loop at component {a}")));
            }
            if !ids.contains(&a) || !ids.contains(&b) {
                return Err(not_a_tree(format!("edge ({a}, {b}) references a missing component")));
            }
            norm_edges.push((a.min(b), a.max(b)));
        }
        norm_edges.sort();
        if let Some(w) = norm_edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(not_a_tree(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        if norm_edges.len() != components.len() - 1 {
            return Err(not_a_tree(format!(
                "{} components need {} edges, got {}",
                components.len(),
                components.len() - 1,
                norm_edges.len()
            )));
        }
        // n - 1 edges and connected imply acyclic
        let mut seen = BTreeSet::from([components[0].id]);
        let mut frontier = vec![components[0].id];
        while let Some(v) = frontier.pop() {
            for &(a, b) in &norm_edges {
                let next = if a == v { b } else if b == v { a } else { continue };
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
        if seen.len() != components.len() {
            return Err(not_a_tree("dual graph is disconnected"));
        }
        Ok(WeightedTree { components, edges: norm_edges })
    }

    pub fn components(&self) -> &[TreeComponent] {
        &self.components
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn component(&self, id: u32) -> Option<&TreeComponent> {
        self.components.iter().find(|c| c.id == id)
    }

    pub fn neighbors(&self, id: u32) -> Vec<u32> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == id {
                    Some(b)
                } else if b == id {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Sum of mark multiplicities over the whole curve.
    pub fn total_multiplicity(&self) -> u32 {
        self.components
            .iter()
            .flat_map(|c| &c.marks)
            .map(|m| m.mult)
            .sum()
    }

    fn weight_exceeds_two(&self, c: &TreeComponent, a: &Q) -> bool {
        let marks: u32 = c.marks.iter().map(|m| m.mult).sum();
        let nodes = self.neighbors(c.id).len() as i64;
        a * &Q::int(marks as i64) + Q::int(nodes) > Q::int(2)
    }
}

fn assert_weight_range(a: &Q) {
    assert!(
        *a > Q::zero() && *a <= Q::one(),
        "weight out of range (0, 1]"
    );
}

/// Whether every component has total weight strictly above 2 and every mark
/// has weight at most 1.
pub fn is_stable(tree: &WeightedTree, a: &Q) -> bool {
    assert_weight_range(a);
    tree.components.iter().all(|c| {
        tree.weight_exceeds_two(c, a)
            && c.marks
                .iter()
                .all(|m| a * &Q::int(m.mult as i64) <= Q::one())
    })
}

/// Contracts unstable components until the curve is stable, returning the
/// reduction and the contractions in order. Among unstable components,
/// leaves go before bridges and smaller ids first; the final model does not
/// depend on this choice, only the event log does.
///
/// Errors with [`TreeError::Collapse`] when the last remaining component is
/// itself unstable, which is the regime where the total weight is at most 2.
///
/// Marks of the input must respect the weight bound `a * mult <= 1`;
/// contraction preserves that bound on its own.
pub fn reduce_tree(
    tree: &WeightedTree,
    a: &Q,
) -> Result<(WeightedTree, Vec<ContractionEvent>), TreeError> {
    assert_weight_range(a);
    for c in &tree.components {
        for m in &c.marks {
            assert!(
                a * &Q::int(m.mult as i64) <= Q::one(),
                "mark {:?} on component {} exceeds weight 1",
                m.label,
                c.id
            );
        }
    }
    let mut cur = tree.clone();
    let mut events = Vec::new();
    loop {
        let mut unstable: Vec<u32> = cur
            .components
            .iter()
            .filter(|c| !cur.weight_exceeds_two(c, a))
            .map(|c| c.id)
            .collect();
        if unstable.is_empty() {
            return Ok((cur, events));
        }
        unstable.sort_by_key(|&id| (cur.neighbors(id).len(), id));
        let id = unstable[0];
        let nbrs = cur.neighbors(id);
        match nbrs.len() {
            0 => return Err(TreeError::Collapse),
            1 => {
                let onto = nbrs[0];
                let victim = cur.component(id).expect("listed id").clone();
                let stacked = (!victim.marks.is_empty()).then(|| {
                    let labels: Vec<&str> =
                        victim.marks.iter().map(|m| m.label.as_str()).collect();
                    Mark {
                        label: labels.join("+"),
                        mult: victim.marks.iter().map(|m| m.mult).sum(),
                    }
                });
                cur.components.retain(|c| c.id != id);
                cur.edges.retain(|&(x, y)| x != id && y != id);
                if let Some(mark) = &stacked {
                    cur.components
                        .iter_mut()
                        .find(|c| c.id == onto)
                        .expect("neighbor exists")
                        .marks
                        .push(mark.clone());
                }
                events.push(ContractionEvent::LeafContracted { id, onto, stacked });
            }
            2 => {
                let joined = (nbrs[0].min(nbrs[1]), nbrs[0].max(nbrs[1]));
                debug_assert!(
                    cur.component(id).expect("listed id").marks.is_empty(),
                    "a marked bridge has weight above 2"
                );
                cur.components.retain(|c| c.id != id);
                cur.edges.retain(|&(x, y)| x != id && y != id);
                cur.edges.push(joined);
                cur.edges.sort();
                events.push(ContractionEvent::BridgeContracted { id, joined });
            }
            n => unreachable!("component with {n} nodes has weight above 2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple_marks(prefix: &str, n: u32) -> Vec<Mark> {
        (0..n)
            .map(|i| Mark { label: format!("{prefix}{i}"), mult: 1 })
            .collect()
    }

    fn tree(shape: &[u32], edges: &[(u32, u32)]) -> WeightedTree {
        let components = shape
            .iter()
            .enumerate()
            .map(|(i, &n)| TreeComponent {
                id: i as u32,
                marks: simple_marks(&format!("m{i}-"), n),
            })
            .collect();
        WeightedTree::new(components, edges.to_vec()).unwrap()
    }

    fn just_above_sixth() -> Q {
        Q::new(1, 6) + Q::new(1, 100)
    }

    #[test]
    fn twelve_marks_shapes_in_the_low_chamber() {
        let a = just_above_sixth();
        assert!(is_stable(&tree(&[12], &[]), &a));
        assert!(is_stable(&tree(&[6, 6], &[(0, 1)]), &a));
        assert!(!is_stable(&tree(&[5, 7], &[(0, 1)]), &a));
    }

    #[test]
    fn leaf_contraction_stacks_marks() {
        let a = just_above_sixth();
        let (reduced, events) = reduce_tree(&tree(&[5, 7], &[(0, 1)]), &a).unwrap();
        assert!(is_stable(&reduced, &a));
        assert_eq!(reduced.components().len(), 1);
        let marks = &reduced.components()[0].marks;
        assert_eq!(marks.len(), 8);
        assert_eq!(marks.iter().filter(|m| m.mult == 1).count(), 7);
        let stacked = marks.iter().find(|m| m.mult == 5).unwrap();
        assert_eq!(stacked.label, "m0-0+m0-1+m0-2+m0-3+m0-4");
        assert_eq!(events.len(), 1);
        assert!(matches!(
            events[0],
            ContractionEvent::LeafContracted { id: 0, onto: 1, .. }
        ));
        assert_eq!(reduced.total_multiplicity(), 12);
    }

    #[test]
    fn stable_input_is_a_fixed_point() {
        let a = just_above_sixth();
        let t = tree(&[6, 6], &[(0, 1)]);
        let (reduced, events) = reduce_tree(&t, &a).unwrap();
        assert_eq!(reduced, t);
        assert!(events.is_empty());
    }

    #[test]
    fn markless_bridge_contracts() {
        let a = just_above_sixth();
        let t = tree(&[6, 0, 6], &[(0, 1), (1, 2)]);
        let (reduced, events) = reduce_tree(&t, &a).unwrap();
        assert_eq!(
            events,
            vec![ContractionEvent::BridgeContracted { id: 1, joined: (0, 2) }]
        );
        let expected = WeightedTree::new(
            vec![
                TreeComponent { id: 0, marks: simple_marks("m0-", 6) },
                TreeComponent { id: 2, marks: simple_marks("m2-", 6) },
            ],
            vec![(0, 2)],
        )
        .unwrap();
        assert_eq!(reduced, expected);
    }

    #[test]
    fn collapse_below_the_total_wall() {
        let a = Q::new(1, 6);
        assert_eq!(reduce_tree(&tree(&[12], &[]), &a).unwrap_err(), TreeError::Collapse);
        // a chain collapses stepwise to the same end
        assert_eq!(
            reduce_tree(&tree(&[6, 6], &[(0, 1)]), &a).unwrap_err(),
            TreeError::Collapse
        );
    }

    #[test]
    fn rejects_non_trees() {
        let comps = |n: u32| {
            (0..n)
                .map(|i| TreeComponent { id: i, marks: vec![] })
                .collect::<Vec<_>>()
        };
        assert!(WeightedTree::new(comps(2), vec![]).is_err());
        assert!(WeightedTree::new(comps(2), vec![(0, 1), (1, 0)]).is_err());
        assert!(WeightedTree::new(comps(1), vec![(0, 0)]).is_err());
        assert!(WeightedTree::new(comps(2), vec![(0, 2)]).is_err());
        assert!(
            WeightedTree::new(
                vec![
                    TreeComponent { id: 3, marks: vec![] },
                    TreeComponent { id: 3, marks: vec![] }
                ],
                vec![(3, 3)]
            )
            .is_err()
        );
        assert!(WeightedTree::new(comps(3), vec![(0, 1)]).is_err());
    }

    #[test]
    fn stable_shapes_in_chamber_above_one_sixth_are_12_and_6_6() {
        // all trees with <= 3 components carrying 12 simple marks
        let a = Q::new(11, 60);
        let mut stable_shapes: BTreeSet<Vec<u32>> = BTreeSet::new();
        for i in 0..=12u32 {
            let shape = vec![i, 12 - i];
            if is_stable(&tree(&[i, 12 - i], &[(0, 1)]), &a) {
                let mut s = shape.clone();
                s.sort();
                stable_shapes.insert(s);
            }
        }
        if is_stable(&tree(&[12], &[]), &a) {
            stable_shapes.insert(vec![12]);
        }
        for i in 0..=12u32 {
            for j in 0..=(12 - i) {
                let k = 12 - i - j;
                for edges in [[(0, 1), (1, 2)], [(0, 1), (0, 2)]] {
                    if is_stable(&tree(&[i, j, k], &edges), &a) {
                        let mut s = vec![i, j, k];
                        s.sort();
                        stable_shapes.insert(s);
                    }
                }
            }
        }
        let expected: BTreeSet<Vec<u32>> =
            BTreeSet::from([vec![12], vec![6, 6]]);
        assert_eq!(stable_shapes, expected);
    }

    #[test]
    fn reduction_is_idempotent_and_order_independent() {
        let a = Q::new(11, 60);
        // star with three unstable leaves around a marked center
        let components = vec![
            TreeComponent { id: 0, marks: simple_marks("c", 3) },
            TreeComponent { id: 1, marks: simple_marks("p", 3) },
            TreeComponent { id: 2, marks: simple_marks("q", 3) },
            TreeComponent { id: 3, marks: simple_marks("r", 3) },
        ];
        let t = WeightedTree::new(components, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let (reduced, events) = reduce_tree(&t, &a).unwrap();
        assert!(is_stable(&reduced, &a));
        assert_eq!(events.len(), 3);
        assert_eq!(reduced.total_multiplicity(), 12);
        let (again, no_events) = reduce_tree(&reduced, &a).unwrap();
        assert_eq!(again, reduced);
        assert!(no_events.is_empty());
    }
}
