//! Combinatorial model of broken elliptic surfaces: trees of components
//! carrying fiber slots with marks and attachments, plus a weight-aware
//! validator and the projection to the marked base tree.
//!
//! Surfaces serialize to a compact JSON document. Attachments name the
//! peer component and the slot index on it holding the matching fiber:
//!
//! ```
//! use resmod::broken::BrokenSurface;
//!
//! let text = r#"{
//!   "weight": "1",
//!   "components": [
//!     { "id": 0, "role": "elliptic-with-section", "degL": 1, "fibers": [
//!       { "type": "I0*", "model": "twisted", "marks": 0, "attach": { "comp": 1, "slot": 0 } },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 }
//!     ] },
//!     { "id": 1, "role": "elliptic-with-section", "degL": 1, "fibers": [
//!       { "type": "I0*", "model": "twisted", "marks": 0, "attach": { "comp": 0, "slot": 0 } },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 },
//!       { "type": "I1", "model": "weierstrass", "marks": 1 }
//!     ] }
//!   ]
//! }"#;
//!
//! let surface: BrokenSurface = serde_json::from_str(text).unwrap();
//! assert!(surface.validate().is_valid());
//! assert_eq!(surface.edges(), vec![((0, 0), (1, 0))]);
//! ```

use crate::fiber::{FiberModel, FiberType};
use crate::hassett::{Mark, TreeComponent, TreeError, WeightedTree};
use crate::rational::Q;
use crate::weierstrass::JValue;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// What a component is, fibration-wise.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    /// Elliptic fibration with a section.
    EllipticWithSection,
    /// Section contracted, attached to an intermediate fiber of its host.
    PseudoellipticTypeI,
    /// Section contracted, attached along a twisted or stable fiber.
    PseudoellipticTypeII,
    /// Nontrivial isotrivial fibration of j-invariant infinity (N-fibers).
    IsotrivialJInf,
    /// Product of a nodal curve with the base line.
    TrivialJInf,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Role::EllipticWithSection => "elliptic-with-section",
            Role::PseudoellipticTypeI => "pseudoelliptic-type-i",
            Role::PseudoellipticTypeII => "pseudoelliptic-type-ii",
            Role::IsotrivialJInf => "isotrivial-j-inf",
            Role::TrivialJInf => "trivial-j-inf",
        };
        write!(f, "{s}")
    }
}

/// The far side of a double locus: a slot on another component.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Attachment {
    #[serde(rename = "comp")]
    pub component: u32,
    pub slot: usize,
}

/// One singular (pseudo)fiber of a component.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FiberSlot {
    #[serde(rename = "type")]
    pub fiber: FiberType,
    pub model: FiberModel,
    /// Number of weight-a markings stacked on this fiber.
    pub marks: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attach: Option<Attachment>,
}

impl FiberSlot {
    pub fn marked(fiber: FiberType, model: FiberModel, marks: u32) -> FiberSlot {
        FiberSlot { fiber, model, marks, attach: None }
    }

    pub fn attaching(fiber: FiberType, model: FiberModel, component: u32, slot: usize) -> FiberSlot {
        FiberSlot { fiber, model, marks: 0, attach: Some(Attachment { component, slot }) }
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// A single surface component of a broken surface.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Component {
    pub id: u32,
    pub role: Role,
    #[serde(rename = "degL")]
    pub deg_l: u32,
    /// Set once the section of a j-infinity component has contracted; the
    /// role keeps recording what the component is made of.
    #[serde(rename = "sectionContracted", default, skip_serializing_if = "is_false")]
    pub section_contracted: bool,
    pub fibers: Vec<FiberSlot>,
}

impl Component {
    pub fn new(id: u32, role: Role, deg_l: u32, fibers: Vec<FiberSlot>) -> Component {
        Component { id, role, deg_l, section_contracted: false, fibers }
    }

    pub fn total_marks(&self) -> u32 {
        self.fibers.iter().map(|s| s.marks).sum()
    }

    /// Whether the section has been contracted, either by role or by flag.
    pub fn is_pseudoelliptic(&self) -> bool {
        matches!(self.role, Role::PseudoellipticTypeI | Role::PseudoellipticTypeII)
            || self.section_contracted
    }

    /// Still carries a section over a base line, hence a base-tree node.
    pub fn is_fibered(&self) -> bool {
        !self.is_pseudoelliptic()
    }

    /// Whether the generic fiber has finite j-invariant.
    pub fn finite_j(&self) -> bool {
        matches!(
            self.role,
            Role::EllipticWithSection | Role::PseudoellipticTypeI | Role::PseudoellipticTypeII
        )
    }
}

/// An A-broken elliptic surface at a fixed marking weight.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BrokenSurface {
    pub weight: Q,
    pub components: Vec<Component>,
}

/// Which structural rule a violation falls under.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleKind {
    /// Weight outside the admissible interval (1/12, 1].
    WeightRange,
    /// Ill-formed references: bad ids, dangling or asymmetric attachments.
    Structure,
    /// The attachment graph is not a tree.
    TreeShape,
    /// An edge glues fiber types that cannot share a double locus.
    Gluing,
    /// Discriminant degree budget of a finite-j component.
    ComponentBudget,
    /// Budget of a full isotrivial j-infinity component.
    IsotrivialBudget,
    /// Global mark count.
    GlobalMarks,
    /// Slot model disagrees with the weight.
    Model,
    /// A marking exceeds total weight one.
    MarkWeight,
    /// A slot is neither marked nor attaching, or both at once.
    SlotShape,
    /// Role-specific constraints (degL bounds, allowed fiber kinds).
    RoleShape,
    /// A fiber kind outside the supported dictionary.
    UnsupportedFiber,
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleKind::WeightRange => "weight-range",
            RuleKind::Structure => "structure",
            RuleKind::TreeShape => "tree-shape",
            RuleKind::Gluing => "gluing",
            RuleKind::ComponentBudget => "component-budget",
            RuleKind::IsotrivialBudget => "isotrivial-budget",
            RuleKind::GlobalMarks => "global-marks",
            RuleKind::Model => "model",
            RuleKind::MarkWeight => "mark-weight",
            RuleKind::SlotShape => "slot-shape",
            RuleKind::RoleShape => "role-shape",
            RuleKind::UnsupportedFiber => "unsupported-fiber",
        };
        write!(f, "{s}")
    }
}

/// One broken rule, with enough context to point at the offending datum.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub rule: RuleKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slot: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ", self.rule)?;
        if let Some(c) = self.component {
            write!(f, "component {c}")?;
            if let Some(s) = self.slot {
                write!(f, " slot {s}")?;
            }
            write!(f, ": ")?;
        }
        write!(f, "{}", self.message)
    }
}

/// Everything the validator found; empty means valid.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, rule: RuleKind, component: Option<u32>, slot: Option<usize>, message: String) {
        self.violations.push(Violation { rule, component, slot, message });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let lines: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", lines.join("; "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BrokenError {
    #[error("surface fails validation: {0}")]
    Invalid(ValidationReport),
    #[error("no fibered component to project onto")]
    NoFiberedComponent,
    #[error("pseudoelliptic subtree bridges fibered components {a} and {b}")]
    PseudoellipticBridge { a: u32, b: u32 },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// An undirected double locus between two slots, endpoints ordered.
pub type Edge = ((u32, usize), (u32, usize));

impl BrokenSurface {
    pub fn new(weight: Q, components: Vec<Component>) -> BrokenSurface {
        BrokenSurface { weight, components }
    }

    pub fn component(&self, id: u32) -> Option<&Component> {
        self.components.iter().find(|c| c.id == id)
    }

    pub fn component_mut(&mut self, id: u32) -> Option<&mut Component> {
        self.components.iter_mut().find(|c| c.id == id)
    }

    pub fn total_marks(&self) -> u32 {
        self.components.iter().map(Component::total_marks).sum()
    }

    /// All double loci, each listed once with endpoints in canonical order.
    /// Requires well-formed symmetric attachments; dangling references are
    /// skipped (the validator reports them).
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = BTreeSet::new();
        for comp in &self.components {
            for (idx, fiber_slot) in comp.fibers.iter().enumerate() {
                if let Some(att) = fiber_slot.attach {
                    let here = (comp.id, idx);
                    let there = (att.component, att.slot);
                    out.insert(if here < there { (here, there) } else { (there, here) });
                }
            }
        }
        out.into_iter().collect()
    }

    fn slot(&self, component: u32, slot: usize) -> Option<&FiberSlot> {
        self.component(component).and_then(|c| c.fibers.get(slot))
    }

    /// Check every structural rule at the stored weight. Violations are
    /// data, not errors; an empty report means the surface is valid.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let weight_ok = self.weight > Q::new(1, 12) && self.weight <= Q::one();
        if !weight_ok {
            report.push(
                RuleKind::WeightRange,
                None,
                None,
                format!("weight {} outside (1/12, 1]", self.weight),
            );
        }
        if self.components.is_empty() {
            report.push(RuleKind::Structure, None, None, "no components".into());
            return report;
        }

        let mut ids = BTreeSet::new();
        for comp in &self.components {
            if !ids.insert(comp.id) {
                report.push(RuleKind::Structure, Some(comp.id), None, "duplicate component id".into());
            }
        }

        let mut structure_ok = report.violations.iter().all(|v| v.rule != RuleKind::Structure);
        for comp in &self.components {
            for (idx, slot) in comp.fibers.iter().enumerate() {
                if slot.fiber == FiberType::N2 {
                    report.push(
                        RuleKind::UnsupportedFiber,
                        Some(comp.id),
                        Some(idx),
                        "N2 fibers are outside the supported dictionary".into(),
                    );
                }
                match (slot.marks, slot.attach) {
                    (0, None) => report.push(
                        RuleKind::SlotShape,
                        Some(comp.id),
                        Some(idx),
                        "slot is neither marked nor attaching".into(),
                    ),
                    (m, Some(_)) if m > 0 => report.push(
                        RuleKind::SlotShape,
                        Some(comp.id),
                        Some(idx),
                        "attaching slots are never marked; the double locus carries coefficient one implicitly".into(),
                    ),
                    _ => {}
                }
                if let Some(att) = slot.attach {
                    if att.component == comp.id {
                        report.push(
                            RuleKind::Structure,
                            Some(comp.id),
                            Some(idx),
                            "slot attaches to its own component".into(),
                        );
                        structure_ok = false;
                        continue;
                    }
                    match self.slot(att.component, att.slot) {
                        None => {
                            report.push(
                                RuleKind::Structure,
                                Some(comp.id),
                                Some(idx),
                                format!("attachment points at missing slot ({}, {})", att.component, att.slot),
                            );
                            structure_ok = false;
                        }
                        Some(back) => {
                            let mirrored = back.attach
                                == Some(Attachment { component: comp.id, slot: idx });
                            if !mirrored {
                                report.push(
                                    RuleKind::Structure,
                                    Some(comp.id),
                                    Some(idx),
                                    format!(
                                        "attachment to ({}, {}) is not mirrored",
                                        att.component, att.slot
                                    ),
                                );
                                structure_ok = false;
                            }
                        }
                    }
                }
            }
        }

        if structure_ok {
            self.check_tree_shape(&mut report);
            self.check_gluing(&mut report);
        }
        self.check_budgets(&mut report);
        self.check_roles(&mut report);

        let total = self.total_marks();
        if total != 12 {
            report.push(
                RuleKind::GlobalMarks,
                None,
                None,
                format!("total mark multiplicity is {total}, expected 12"),
            );
        }

        if weight_ok {
            self.check_models(&mut report);
            for comp in &self.components {
                for (idx, slot) in comp.fibers.iter().enumerate() {
                    if slot.marks > 0 && self.weight.clone() * Q::int(slot.marks as i64) > Q::one() {
                        report.push(
                            RuleKind::MarkWeight,
                            Some(comp.id),
                            Some(idx),
                            format!(
                                "stacked weight {} * {} exceeds one",
                                self.weight, slot.marks
                            ),
                        );
                    }
                }
            }
        }

        report
    }

    fn check_tree_shape(&self, report: &mut ValidationReport) {
        let edges = self.edges();
        let mut seen_pairs = BTreeSet::new();
        for ((a, _), (b, _)) in &edges {
            if !seen_pairs.insert((*a, *b)) {
                report.push(
                    RuleKind::TreeShape,
                    Some(*a),
                    None,
                    format!("components {a} and {b} are glued along more than one double locus"),
                );
            }
        }
        let n = self.components.len();
        if edges.len() != n - 1 {
            report.push(
                RuleKind::TreeShape,
                None,
                None,
                format!("{} components need {} double loci, found {}", n, n - 1, edges.len()),
            );
            return;
        }
        let mut adjacency: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for ((a, _), (b, _)) in &edges {
            adjacency.entry(*a).or_default().push(*b);
            adjacency.entry(*b).or_default().push(*a);
        }
        let start = self.components[0].id;
        let mut seen = BTreeSet::from([start]);
        let mut queue = vec![start];
        while let Some(id) = queue.pop() {
            for next in adjacency.get(&id).into_iter().flatten() {
                if seen.insert(*next) {
                    queue.push(*next);
                }
            }
        }
        if seen.len() != n {
            report.push(
                RuleKind::TreeShape,
                None,
                None,
                "attachment graph is disconnected".into(),
            );
        }
    }

    fn check_gluing(&self, report: &mut ValidationReport) {
        for ((a, sa), (b, sb)) in self.edges() {
            let fa = self.slot(a, sa).expect("edge endpoints exist").fiber;
            let fb = self.slot(b, sb).expect("edge endpoints exist").fiber;
            if !fa.tsm_compatible(&fb) {
                report.push(
                    RuleKind::Gluing,
                    Some(a),
                    Some(sa),
                    format!("{fa} cannot share a double locus with {fb} on component {b}"),
                );
            }
        }
    }

    fn check_budgets(&self, report: &mut ValidationReport) {
        for comp in &self.components {
            if comp.finite_j() && comp.deg_l >= 1 {
                let mut total = 0u32;
                let mut computable = true;
                for slot in &comp.fibers {
                    match slot.fiber.disc_degree() {
                        Ok(d) => total += d,
                        Err(_) => computable = false,
                    }
                }
                if computable && total != 12 * comp.deg_l {
                    report.push(
                        RuleKind::ComponentBudget,
                        Some(comp.id),
                        None,
                        format!(
                            "discriminant degree {} does not fill 12 * degL = {}",
                            total,
                            12 * comp.deg_l
                        ),
                    );
                }
            }
            if comp.role == Role::IsotrivialJInf && comp.deg_l == 1 {
                let n1 = comp.fibers.iter().filter(|s| s.fiber == FiberType::N1).count() as u32;
                let filled = 3 * n1 + comp.total_marks();
                if filled != 12 {
                    report.push(
                        RuleKind::IsotrivialBudget,
                        Some(comp.id),
                        None,
                        format!("3 * {n1} N1 fibers + {} marks = {filled}, expected 12", comp.total_marks()),
                    );
                }
            }
        }
    }

    fn check_roles(&self, report: &mut ValidationReport) {
        for comp in &self.components {
            match comp.role {
                Role::EllipticWithSection | Role::PseudoellipticTypeII => {
                    if comp.deg_l == 0 {
                        report.push(
                            RuleKind::RoleShape,
                            Some(comp.id),
                            None,
                            format!("{} must have degL >= 1", comp.role),
                        );
                    }
                }
                Role::TrivialJInf => {
                    if comp.deg_l != 0 {
                        report.push(
                            RuleKind::RoleShape,
                            Some(comp.id),
                            None,
                            "trivial components have degL = 0".into(),
                        );
                    }
                    for (idx, slot) in comp.fibers.iter().enumerate() {
                        let ok = slot.fiber.is_stable_nodal();
                        if !ok {
                            report.push(
                                RuleKind::RoleShape,
                                Some(comp.id),
                                Some(idx),
                                format!("trivial components carry nodal fibers only, found {}", slot.fiber),
                            );
                        }
                    }
                }
                Role::IsotrivialJInf => {
                    if comp.deg_l > 1 {
                        report.push(
                            RuleKind::RoleShape,
                            Some(comp.id),
                            None,
                            "isotrivial components have degL 0 or 1".into(),
                        );
                    }
                    for (idx, slot) in comp.fibers.iter().enumerate() {
                        if !matches!(slot.fiber, FiberType::N0 | FiberType::N1) {
                            report.push(
                                RuleKind::RoleShape,
                                Some(comp.id),
                                Some(idx),
                                format!("isotrivial components carry N-fibers only, found {}", slot.fiber),
                            );
                        }
                    }
                }
                Role::PseudoellipticTypeI => {}
            }
        }
    }

    fn check_models(&self, report: &mut ValidationReport) {
        let at_one = self.weight == Q::one();
        for comp in &self.components {
            for (idx, slot) in comp.fibers.iter().enumerate() {
                if slot.fiber == FiberType::N2 {
                    continue;
                }
                if slot.attach.is_some() {
                    let nodal_weierstrass =
                        slot.model == FiberModel::Weierstrass && slot.fiber.is_stable_nodal();
                    let ok = if at_one {
                        slot.model == FiberModel::Twisted || nodal_weierstrass
                    } else {
                        slot.model != FiberModel::Weierstrass || nodal_weierstrass
                    };
                    if !ok {
                        report.push(
                            RuleKind::Model,
                            Some(comp.id),
                            Some(idx),
                            format!(
                                "attaching {} cannot be {} at weight {}",
                                slot.fiber, slot.model, self.weight
                            ),
                        );
                    }
                } else {
                    let expected = slot
                        .fiber
                        .model_at_weight(&self.weight)
                        .expect("N2 filtered above");
                    if slot.model != expected {
                        report.push(
                            RuleKind::Model,
                            Some(comp.id),
                            Some(idx),
                            format!(
                                "marked {} should be {expected} at weight {}, found {}",
                                slot.fiber, self.weight, slot.model
                            ),
                        );
                    }
                }
            }
        }
    }

    /// Project to the marked base tree: one node per fibered component,
    /// marked slots becoming points, and each attached pseudoelliptic
    /// subtree collapsing to a single stacked point carrying its total
    /// multiplicity. Model violations are tolerated (the projection is used
    /// mid-transition); anything else is rejected.
    pub fn base_tree(&self) -> Result<WeightedTree, BrokenError> {
        let mut report = self.validate();
        report.violations.retain(|v| v.rule != RuleKind::Model);
        if !report.is_valid() {
            return Err(BrokenError::Invalid(report));
        }

        let mut adjacency: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for ((a, _), (b, _)) in self.edges() {
            adjacency.entry(a).or_default().push(b);
            adjacency.entry(b).or_default().push(a);
        }
        let fibered: BTreeSet<u32> = self
            .components
            .iter()
            .filter(|c| c.is_fibered())
            .map(|c| c.id)
            .collect();
        if fibered.is_empty() {
            return Err(BrokenError::NoFiberedComponent);
        }

        let mut tree_components = Vec::new();
        let mut tree_edges = Vec::new();
        let mut claimed: BTreeMap<u32, u32> = BTreeMap::new();
        for comp in self.components.iter().filter(|c| c.is_fibered()) {
            let mut marks = Vec::new();
            for (idx, slot) in comp.fibers.iter().enumerate() {
                if slot.marks > 0 {
                    marks.push(Mark { label: format!("c{}f{}", comp.id, idx), mult: slot.marks });
                }
            }
            for neighbor in adjacency.get(&comp.id).cloned().unwrap_or_default() {
                if fibered.contains(&neighbor) {
                    if comp.id < neighbor {
                        tree_edges.push((comp.id, neighbor));
                    }
                    continue;
                }
                // Collapse the pseudoelliptic subtree rooted at `neighbor`.
                let mut subtree_marks = 0u32;
                let mut queue = vec![neighbor];
                let mut visited = BTreeSet::from([comp.id, neighbor]);
                while let Some(id) = queue.pop() {
                    if fibered.contains(&id) {
                        return Err(BrokenError::PseudoellipticBridge { a: comp.id, b: id });
                    }
                    if let Some(owner) = claimed.insert(id, comp.id) {
                        if owner != comp.id {
                            return Err(BrokenError::PseudoellipticBridge { a: owner, b: comp.id });
                        }
                    }
                    subtree_marks += self.component(id).expect("validated id").total_marks();
                    for next in adjacency.get(&id).into_iter().flatten() {
                        if visited.insert(*next) {
                            queue.push(*next);
                        }
                    }
                }
                if subtree_marks > 0 {
                    marks.push(Mark {
                        label: format!("c{}p{}", comp.id, neighbor),
                        mult: subtree_marks,
                    });
                }
            }
            tree_components.push(TreeComponent { id: comp.id, marks });
        }

        Ok(WeightedTree::new(tree_components, tree_edges)?)
    }
}

/// A replayable configuration: the surface, optionally the Weierstrass data
/// it degenerated from and the j-invariant of its double locus.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Scenario {
    pub surface: BrokenSurface,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ancestor: Option<AncestorData>,
    #[serde(rename = "doubleLocusJ", default, skip_serializing_if = "Option::is_none")]
    pub double_locus_j: Option<JValue>,
}

/// Affine Weierstrass coefficients as expression text, e.g. `"t^2"`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AncestorData {
    pub a: String,
    pub b: String,
}
