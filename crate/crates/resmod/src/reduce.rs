//! Stable reduction of broken elliptic surfaces across the wall-and-chamber
//! structure of the weight interval, and classification of the surfaces
//! that survive at the small-weight end.
//!
//! The walker crosses one wall at a time, downward. At each wall it applies,
//! in a fixed order: model re-synchronization of marked fibers, section
//! contractions of unstable fibered components (with the flip that hangs the
//! new pseudoelliptic on an intermediate fiber of its neighbor), contractions
//! of pseudoelliptic trees back through intermediate fibers, and absorption
//! of j-infinity components onto their attaching fibers.
//!
//! A generic surface with twelve marked nodal fibers walks all the way down
//! untouched except for the forced section contraction on the 12a = 2 wall:
//!
//! ```
//! use resmod::broken::{BrokenSurface, Component, FiberSlot, Role};
//! use resmod::fiber::{FiberModel, FiberType};
//! use resmod::rational::Q;
//! use resmod::reduce::{classify_boundary, run, BoundaryClass};
//!
//! let fibers = (0..12)
//!     .map(|_| FiberSlot::marked(FiberType::I(1), FiberModel::Weierstrass, 1))
//!     .collect();
//! let surface = BrokenSurface::new(
//!     Q::one(),
//!     vec![Component::new(0, Role::EllipticWithSection, 1, fibers)],
//! );
//! assert!(surface.validate().is_valid());
//!
//! let (end, events) = run(&surface, &Q::one(), &Q::new(11, 120))?;
//! assert_eq!(events.len(), 1);
//! assert_eq!(events[0].wall, Q::new(1, 6));
//! assert_eq!(classify_boundary(&end), Ok(BoundaryClass::Interior));
//! # Ok::<(), resmod::reduce::ReduceError>(())
//! ```

use crate::broken::{BrokenSurface, Component, FiberSlot, Role, ValidationReport};
use crate::fiber::{FiberModel, FiberType};
use crate::rational::Q;
use crate::walls::{enumerate_walls, Wall, WallLabel};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// What happened at a wall.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", rename_all_fields = "camelCase")]
pub enum WallEventKind {
    /// A marked fiber switched its relative log canonical model.
    ModelTransition {
        component: u32,
        slot: usize,
        fiber: FiberType,
        from: FiberModel,
        to: FiberModel,
    },
    /// The sections of the listed components contracted. At a 1/k wall this
    /// names one component and includes the flip onto the host's fiber; on
    /// the 12a = 2 wall it names every component that still had a section.
    SectionContraction { components: Vec<u32> },
    /// A pseudoelliptic leaf contracted to a point, turning its host's
    /// intermediate fiber back into a Weierstrass fiber carrying the marks.
    PseudoContractionToPoint {
        component: u32,
        onto_component: u32,
        onto_slot: usize,
    },
    /// A j-infinity component collapsed onto the fiber it was attached to.
    JInfContractionToFiber {
        component: u32,
        onto_component: u32,
        onto_slot: usize,
    },
}

/// One entry of the reduction log.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WallEvent {
    pub wall: Q,
    #[serde(flatten)]
    pub kind: WallEventKind,
    pub details: String,
}

impl fmt::Display for WallEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.kind {
            WallEventKind::ModelTransition { .. } => "model transition",
            WallEventKind::SectionContraction { .. } => "section contraction",
            WallEventKind::PseudoContractionToPoint { .. } => "pseudoelliptic contraction",
            WallEventKind::JInfContractionToFiber { .. } => "j-infinity contraction",
        };
        write!(f, "a = {}: {kind}: {}", self.wall, self.details)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("weights must satisfy 1/12 < to <= from <= 1, got from = {from}, to = {to}")]
    BadRange { from: Q, to: Q },
    #[error("input surface invalid at weight {at}: {report}")]
    InvalidInput { at: Q, report: ValidationReport },
    #[error("surface invalid after crossing, at weight {at}: {report}")]
    InvalidOutput { at: Q, report: ValidationReport },
}

/// The boundary strata of the degree-one del Pezzo compactification,
/// together with the open stratum of unbroken twelve-marked surfaces.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundaryClass {
    /// A single component with twelve simple marks on Weierstrass fibers.
    Interior,
    /// One pseudoelliptic with Weierstrass fibers of type I_n, II, III, IV.
    TypeA,
    /// Two pseudoelliptics glued along twisted I0* or N1 pseudofibers.
    TypeB,
    /// An isotrivial j-infinity core with pseudoelliptics glued along
    /// twisted N1/I_n* pseudofibers.
    TypeC,
    /// Two isotrivial j-infinity components glued along twisted N1 fibers.
    TypeD,
}

impl fmt::Display for BoundaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundaryClass::Interior => "interior",
            BoundaryClass::TypeA => "type-a",
            BoundaryClass::TypeB => "type-b",
            BoundaryClass::TypeC => "type-c",
            BoundaryClass::TypeD => "type-d",
        };
        write!(f, "{s}")
    }
}

/// A surface that matches none of the boundary shapes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unclassifiable: {reason}")]
pub struct Unclassifiable {
    pub reason: String,
}

fn unclassifiable<T>(reason: impl Into<String>) -> Result<T, Unclassifiable> {
    Err(Unclassifiable { reason: reason.into() })
}

/// Descending wall values, cached per call site.
fn wall_values() -> Vec<Q> {
    enumerate_walls().into_iter().map(|w| w.value).collect()
}

/// A representative weight in the open chamber directly above a wall; the
/// wall value 1 is its own representative since the interval is closed there.
pub fn rep_above(wall: &Q) -> Q {
    if *wall == Q::one() {
        return Q::one();
    }
    let above = wall_values()
        .into_iter()
        .rev()
        .find(|v| v > wall)
        .expect("1 is a wall above every smaller weight");
    (wall + &above) / Q::int(2)
}

/// A representative weight in the open chamber directly below a wall, with
/// the interval bottom 1/12 closing off the lowest chamber.
pub fn rep_below(wall: &Q) -> Q {
    let below = wall_values()
        .into_iter()
        .find(|v| v < wall)
        .unwrap_or_else(|| Q::new(1, 12));
    (wall + &below) / Q::int(2)
}

/// The weight at which a surface handed over "at `a`" is actually checked:
/// `a` itself inside a chamber or at the closed end 1, and the chamber above
/// when `a` sits on a wall (the pre-crossing side owns the wall value).
pub fn validation_weight(a: &Q) -> Q {
    if *a == Q::one() {
        return Q::one();
    }
    if wall_values().contains(a) {
        return rep_above(a);
    }
    a.clone()
}

fn validated(surface: &mut BrokenSurface, at: Q, input: bool) -> Result<(), ReduceError> {
    surface.weight = at;
    let report = surface.validate();
    if report.is_valid() {
        return Ok(());
    }
    let at = surface.weight.clone();
    if input {
        Err(ReduceError::InvalidInput { at, report })
    } else {
        Err(ReduceError::InvalidOutput { at, report })
    }
}

/// Cross a single wall downward. The input must be valid in the chamber
/// above the wall; the output is valid in the chamber below. A wall whose
/// labels touch nothing on the surface is a legal no-op with an empty log.
pub fn step(bs: &BrokenSurface, wall: &Wall) -> Result<(BrokenSurface, Vec<WallEvent>), ReduceError> {
    let mut surface = bs.clone();
    validated(&mut surface, rep_above(&wall.value), true)?;
    let below = rep_below(&wall.value);
    let mut events = Vec::new();

    sync_models(&mut surface, &wall.value, &below, &mut events);
    if wall.labels.iter().any(|l| {
        matches!(
            l,
            WallLabel::SectionContraction { .. } | WallLabel::TotalSectionContraction
        )
    }) {
        contract_sections(&mut surface, wall, &mut events);
    }
    for label in &wall.labels {
        if let WallLabel::PseudoellipticFlip { lct, k } = label {
            contract_pseudoelliptic_leaves(&mut surface, &wall.value, lct, *k, &mut events);
        }
    }
    for label in &wall.labels {
        if let WallLabel::IsotrivialAbsorption { k } = label {
            absorb_j_infinity(&mut surface, &wall.value, *k, &mut events);
        }
    }

    validated(&mut surface, below, false)?;
    Ok((surface, events))
}

/// Fold [`step`] over every wall in the half-open interval `(a_to, a_from]`,
/// descending, and stamp the result with the target weight.
pub fn run(
    bs: &BrokenSurface,
    a_from: &Q,
    a_to: &Q,
) -> Result<(BrokenSurface, Vec<WallEvent>), ReduceError> {
    let bottom = Q::new(1, 12);
    if !(*a_to > bottom && a_to <= a_from && *a_from <= Q::one()) {
        return Err(ReduceError::BadRange { from: a_from.clone(), to: a_to.clone() });
    }
    let mut surface = bs.clone();
    validated(&mut surface, validation_weight(a_from), true)?;
    let mut log = Vec::new();
    for wall in enumerate_walls() {
        if wall.value > *a_from || wall.value <= *a_to {
            continue;
        }
        let (next, events) = step(&surface, &wall)?;
        surface = next;
        log.extend(events);
    }
    validated(&mut surface, validation_weight(a_to), false)?;
    surface.weight = a_to.clone();
    Ok((surface, log))
}

/// Re-model every marked fiber toward its model just below the wall. The
/// threshold labels name the fibers whose log canonical threshold equals the
/// wall value, but crossing the top wall also unwinds twisted marked fibers,
/// so the sync runs over the whole surface at every wall. Attaching slots
/// are owned by the gluing and flip logic and are never touched here.
fn sync_models(surface: &mut BrokenSurface, wall: &Q, below: &Q, events: &mut Vec<WallEvent>) {
    for comp in &mut surface.components {
        for (idx, slot) in comp.fibers.iter_mut().enumerate() {
            if slot.attach.is_some() {
                continue;
            }
            let target = slot
                .fiber
                .model_at_weight(below)
                .expect("validated surfaces carry no unsupported fibers");
            if slot.model != target {
                let from = slot.model;
                slot.model = target;
                events.push(WallEvent {
                    wall: wall.clone(),
                    kind: WallEventKind::ModelTransition {
                        component: comp.id,
                        slot: idx,
                        fiber: slot.fiber,
                        from,
                        to: target,
                    },
                    details: format!(
                        "marked {} fiber re-models from {from} to {target}",
                        slot.fiber
                    ),
                });
            }
        }
    }
}

fn adjacency(surface: &BrokenSurface) -> BTreeMap<u32, Vec<u32>> {
    let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for ((a, _), (b, _)) in surface.edges() {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    adj
}

/// Total marks of the pseudoelliptic subtree hanging off `root`, reached
/// from the fibered component `from`. Fibered components past the root are
/// not traversed; the validator and base-tree projection police those.
fn pseudo_subtree_marks(surface: &BrokenSurface, adj: &BTreeMap<u32, Vec<u32>>, from: u32, root: u32) -> u32 {
    let mut total = 0;
    let mut queue = vec![root];
    let mut seen = BTreeSet::from([from, root]);
    while let Some(id) = queue.pop() {
        let comp = surface.component(id).expect("edge endpoints exist");
        if comp.is_fibered() {
            continue;
        }
        total += comp.total_marks();
        for next in adj.get(&id).into_iter().flatten() {
            if seen.insert(*next) {
                queue.push(*next);
            }
        }
    }
    total
}

/// Both gluing fibers starred (I_m* or N1) means the double locus stays a
/// twisted gluing after the section contracts; any other compatible pair
/// goes through the flip that re-attaches the new pseudoelliptic to a
/// now-intermediate fiber of the neighbor.
fn starred_gluing(a: &FiberType, b: &FiberType) -> bool {
    a.is_starred() && b.is_starred()
}

fn contract_sections(surface: &mut BrokenSurface, wall: &Wall, events: &mut Vec<WallEvent>) {
    let total = wall.labels.contains(&WallLabel::TotalSectionContraction);
    let adj = adjacency(surface);

    if total {
        let fired: Vec<u32> = surface
            .components
            .iter()
            .filter(|c| c.is_fibered())
            .map(|c| c.id)
            .collect();
        if fired.is_empty() {
            return;
        }
        for id in &fired {
            let comp = surface.component_mut(*id).expect("listed above");
            match comp.role {
                Role::EllipticWithSection => comp.role = Role::PseudoellipticTypeII,
                _ => comp.section_contracted = true,
            }
        }
        events.push(WallEvent {
            wall: wall.value.clone(),
            kind: WallEventKind::SectionContraction { components: fired },
            details: "all remaining sections contract at once on the 12a = 2 wall".into(),
        });
        return;
    }

    // A fibered leaf of the base tree with total stacked weight m destabilizes
    // once m a + 1 <= 2, i.e. exactly at the wall 1/m and below.
    let mut fired: Vec<(u32, u32)> = Vec::new();
    for comp in surface.components.iter().filter(|c| c.is_fibered()) {
        let neighbors = adj.get(&comp.id).cloned().unwrap_or_default();
        let fibered_neighbors: Vec<u32> = neighbors
            .iter()
            .copied()
            .filter(|n| surface.component(*n).expect("edge endpoints exist").is_fibered())
            .collect();
        if fibered_neighbors.len() != 1 {
            continue;
        }
        let mut marks = comp.total_marks();
        for n in &neighbors {
            if !fibered_neighbors.contains(n) {
                marks += pseudo_subtree_marks(surface, &adj, comp.id, *n);
            }
        }
        if Q::int(marks as i64) * &wall.value <= Q::one() {
            fired.push((comp.id, fibered_neighbors[0]));
        }
    }

    for (id, host_id) in fired {
        let comp = surface.component(id).expect("still present");
        let slot_idx = comp
            .fibers
            .iter()
            .position(|s| s.attach.map(|a| a.component) == Some(host_id))
            .expect("leaf attaches to its unique fibered neighbor");
        let own_fiber = comp.fibers[slot_idx].fiber;
        let host_slot_idx = comp.fibers[slot_idx].attach.expect("attaching slot").slot;
        let host_fiber = surface
            .component(host_id)
            .expect("edge endpoints exist")
            .fibers[host_slot_idx]
            .fiber;

        let details = if starred_gluing(&own_fiber, &host_fiber) {
            let comp = surface.component_mut(id).expect("still present");
            match comp.role {
                Role::EllipticWithSection => comp.role = Role::PseudoellipticTypeII,
                _ => comp.section_contracted = true,
            }
            format!(
                "section of component {id} contracts; the twisted {own_fiber}/{host_fiber} gluing to component {host_id} survives"
            )
        } else {
            let comp = surface.component_mut(id).expect("still present");
            match comp.role {
                Role::EllipticWithSection => comp.role = Role::PseudoellipticTypeI,
                _ => comp.section_contracted = true,
            }
            let host = surface.component_mut(host_id).expect("edge endpoints exist");
            host.fibers[host_slot_idx].model = FiberModel::Intermediate;
            format!(
                "section of component {id} contracts; the flip re-attaches it to the now-intermediate {host_fiber} fiber of component {host_id}"
            )
        };
        events.push(WallEvent {
            wall: wall.value.clone(),
            kind: WallEventKind::SectionContraction { components: vec![id] },
            details,
        });
    }
}

/// Remove a leaf component and fold its marks onto the far side of its one
/// double locus, which becomes a marked Weierstrass fiber. Recomputes an
/// isotrivial host's bundle degree, since absorbing marks can complete its
/// 3 #N1 + marks = 12 budget.
fn fold_leaf_onto_host(surface: &mut BrokenSurface, leaf_id: u32, host_id: u32, host_slot: usize) {
    let marks = surface.component(leaf_id).expect("leaf exists").total_marks();
    let host = surface.component_mut(host_id).expect("host exists");
    let slot = &mut host.fibers[host_slot];
    slot.marks += marks;
    slot.model = FiberModel::Weierstrass;
    slot.attach = None;
    if host.role == Role::IsotrivialJInf {
        let n1 = host.fibers.iter().filter(|s| s.fiber == FiberType::N1).count() as u32;
        host.deg_l = u32::from(3 * n1 + host.total_marks() == 12);
    }
    surface.components.retain(|c| c.id != leaf_id);
}

/// The single attaching slot of a leaf, with its far side.
fn leaf_edge(comp: &Component) -> Option<(usize, u32, usize)> {
    let mut attachments = comp
        .fibers
        .iter()
        .enumerate()
        .filter_map(|(i, s)| s.attach.map(|a| (i, a.component, a.slot)));
    match (attachments.next(), attachments.next()) {
        (Some(edge), None) => Some(edge),
        _ => None,
    }
}

fn contract_pseudoelliptic_leaves(
    surface: &mut BrokenSurface,
    wall: &Q,
    lct: &Q,
    k: u32,
    events: &mut Vec<WallEvent>,
) {
    // Chains contract leaf-inward: each pass can expose the next candidate.
    loop {
        let candidate = surface.components.iter().find_map(|comp| {
            if !comp.is_pseudoelliptic() || comp.total_marks() != k {
                return None;
            }
            let (_, host_id, host_slot) = leaf_edge(comp)?;
            let slot = &surface.component(host_id)?.fibers[host_slot];
            let matches = slot.model == FiberModel::Intermediate
                && slot.fiber.lct().is_ok_and(|t| t == *lct);
            matches.then_some((comp.id, host_id, host_slot, slot.fiber))
        });
        let Some((id, host_id, host_slot, host_fiber)) = candidate else {
            return;
        };
        fold_leaf_onto_host(surface, id, host_id, host_slot);
        events.push(WallEvent {
            wall: wall.clone(),
            kind: WallEventKind::PseudoContractionToPoint {
                component: id,
                onto_component: host_id,
                onto_slot: host_slot,
            },
            details: format!(
                "pseudoelliptic component {id} contracts to a point under its {k}-fold mark; the {host_fiber} fiber of component {host_id} returns to its Weierstrass model"
            ),
        });
    }
}

fn absorb_j_infinity(surface: &mut BrokenSurface, wall: &Q, k: u32, events: &mut Vec<WallEvent>) {
    loop {
        let candidate = surface.components.iter().find_map(|comp| {
            if comp.role != Role::TrivialJInf || comp.total_marks() != k {
                return None;
            }
            let (_, host_id, host_slot) = leaf_edge(comp)?;
            let host_fiber = surface.component(host_id)?.fibers[host_slot].fiber;
            Some((comp.id, host_id, host_slot, host_fiber))
        });
        let Some((id, host_id, host_slot, host_fiber)) = candidate else {
            return;
        };
        fold_leaf_onto_host(surface, id, host_id, host_slot);
        events.push(WallEvent {
            wall: wall.clone(),
            kind: WallEventKind::JInfContractionToFiber {
                component: id,
                onto_component: host_id,
                onto_slot: host_slot,
            },
            details: format!(
                "j-infinity component {id} contracts onto the {host_fiber} fiber of component {host_id}, stacking its {k} marks there"
            ),
        });
    }
}

fn boundary_weierstrass(slot: &FiberSlot) -> bool {
    let fiber_ok = matches!(slot.fiber, FiberType::I(n) if n <= 9)
        || matches!(slot.fiber, FiberType::II | FiberType::III | FiberType::IV);
    fiber_ok && slot.model == FiberModel::Weierstrass
}

/// Classify a surface against the boundary strata of the weight-shrunken
/// moduli space. The structural shape is checked first, then the weight
/// gates: pseudoelliptic classes exist for weights at most 1/6, and the
/// isotrivial classes only below the last wall 1/10.
pub fn classify_boundary(bs: &BrokenSurface) -> Result<BoundaryClass, Unclassifiable> {
    let one_sixth = Q::new(1, 6);
    let one_tenth = Q::new(1, 10);

    if bs.components.len() == 1 {
        let comp = &bs.components[0];
        if let Some(slot) = comp.fibers.iter().find(|s| s.attach.is_some()) {
            return unclassifiable(format!(
                "single component carries a dangling attachment on its {} fiber",
                slot.fiber
            ));
        }
        if let Some(slot) = comp.fibers.iter().find(|s| !boundary_weierstrass(s)) {
            return unclassifiable(format!(
                "{} fiber in {} model is not a Weierstrass fiber of type I_n (n <= 9), II, III or IV",
                slot.fiber, slot.model
            ));
        }
        if comp.fibers.iter().all(|s| s.marks == 1) {
            return Ok(BoundaryClass::Interior);
        }
        if !(comp.finite_j() && comp.is_pseudoelliptic()) {
            return unclassifiable("marks are stacked but the component still has its section");
        }
        if bs.weight > one_sixth {
            return unclassifiable(format!(
                "pseudoelliptic shape at weight {} above 1/6",
                bs.weight
            ));
        }
        return Ok(BoundaryClass::TypeA);
    }

    if bs.components.iter().any(|c| c.role == Role::TrivialJInf) {
        return unclassifiable("a trivial j-infinity component survives");
    }
    if let Some(comp) = bs.components.iter().find(|c| c.is_fibered()) {
        return unclassifiable(format!("component {} still has its section", comp.id));
    }
    let isotrivial: Vec<&Component> = bs
        .components
        .iter()
        .filter(|c| c.role == Role::IsotrivialJInf)
        .collect();
    let edges = bs.edges();

    if isotrivial.is_empty() {
        if bs.components.len() != 2 {
            return unclassifiable(format!(
                "{} pseudoelliptic components with no isotrivial core",
                bs.components.len()
            ));
        }
        let ((a, sa), (b, sb)) = edges[0];
        let fa = bs.component(a).expect("edge endpoint").fibers[sa].clone();
        let fb = bs.component(b).expect("edge endpoint").fibers[sb].clone();
        let pair_ok = matches!(
            (fa.fiber, fb.fiber),
            (FiberType::IStar(0), FiberType::IStar(0))
                | (FiberType::IStar(0), FiberType::N1)
                | (FiberType::N1, FiberType::IStar(0))
                | (FiberType::N1, FiberType::N1)
        );
        if !pair_ok || fa.model != FiberModel::Twisted || fb.model != FiberModel::Twisted {
            return unclassifiable(format!(
                "double locus {}/{} is not a twisted I0*/N1 pairing",
                fa.fiber, fb.fiber
            ));
        }
        for comp in &bs.components {
            if let Some(slot) = comp
                .fibers
                .iter()
                .find(|s| s.attach.is_none() && !boundary_weierstrass(s))
            {
                return unclassifiable(format!(
                    "component {} carries a non-Weierstrass {} fiber",
                    comp.id, slot.fiber
                ));
            }
        }
        if bs.weight > one_sixth {
            return unclassifiable(format!("glued pseudoelliptics at weight {} above 1/6", bs.weight));
        }
        return Ok(BoundaryClass::TypeB);
    }

    if bs.weight >= one_tenth {
        return unclassifiable(format!(
            "isotrivial shapes are assigned only below the last wall, weight is {}",
            bs.weight
        ));
    }
    for comp in &isotrivial {
        if let Some(slot) = comp.fibers.iter().find(|s| {
            s.attach.is_some() && !(s.fiber == FiberType::N1 && s.model == FiberModel::Twisted)
        }) {
            return unclassifiable(format!(
                "isotrivial component {} attaches along {} in {} model instead of twisted N1",
                comp.id, slot.fiber, slot.model
            ));
        }
    }

    if isotrivial.len() == 1 {
        let core = isotrivial[0].id;
        for ((a, sa), (b, sb)) in &edges {
            let (pseudo, slot) = if *a == core {
                (*b, bs.component(*b).expect("edge endpoint").fibers[*sb].clone())
            } else if *b == core {
                (*a, bs.component(*a).expect("edge endpoint").fibers[*sa].clone())
            } else {
                return unclassifiable(format!(
                    "components {a} and {b} are glued to each other, not to the isotrivial core"
                ));
            };
            let starred = matches!(slot.fiber, FiberType::IStar(_) | FiberType::N1);
            if !starred || slot.model != FiberModel::Twisted {
                return unclassifiable(format!(
                    "component {pseudo} attaches to the core along {} in {} model instead of a twisted I_n* or N1",
                    slot.fiber, slot.model
                ));
            }
        }
        for comp in &bs.components {
            if comp.id == core {
                continue;
            }
            if let Some(slot) = comp
                .fibers
                .iter()
                .find(|s| s.attach.is_none() && !boundary_weierstrass(s))
            {
                return unclassifiable(format!(
                    "component {} carries a non-Weierstrass {} fiber",
                    comp.id, slot.fiber
                ));
            }
        }
        return Ok(BoundaryClass::TypeC);
    }

    if isotrivial.len() == 2 && bs.components.len() == 2 {
        let ((a, sa), (b, sb)) = edges[0];
        let fa = &bs.component(a).expect("edge endpoint").fibers[sa];
        let fb = &bs.component(b).expect("edge endpoint").fibers[sb];
        if fa.fiber != FiberType::N1 || fb.fiber != FiberType::N1 {
            return unclassifiable(format!(
                "double locus {}/{} between isotrivial components is not N1/N1",
                fa.fiber, fb.fiber
            ));
        }
        return Ok(BoundaryClass::TypeD);
    }

    unclassifiable(format!(
        "{} isotrivial components among {} do not form a boundary shape",
        isotrivial.len(),
        bs.components.len()
    ))
}
