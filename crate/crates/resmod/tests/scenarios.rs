//! The checked-in scenario corpus stays in lockstep with the library: every
//! file parses, validates, replays to the documented endpoint, and survives a
//! serialization round trip.

use std::fs;
use std::path::PathBuf;

use resmod::broken::Scenario;
use resmod::git::{self, MirandaClass, PointsClass};
use resmod::parse::parse_coefficients;
use resmod::rational::Q;
use resmod::reduce::{classify_boundary, run, BoundaryClass, WallEventKind};
use resmod::weierstrass::{data_from_affine, JValue};

const CORPUS: &[&str] = &[
    "dual_pair_ii",
    "i7_collision",
    "interior_generic",
    "sandwich_n1_i3star",
    "two_i0star",
    "two_n1_pair",
];

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenarios")
}

fn load(name: &str) -> Scenario {
    let path = corpus_dir().join(format!("{name}.json"));
    let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn bottom() -> Q {
    Q::new(11, 120)
}

#[test]
fn every_scenario_parses_validates_and_carries_twelve_marks() {
    for name in CORPUS {
        let sc = load(name);
        let report = sc.surface.validate();
        assert!(report.is_valid(), "{name}: {report}");
        assert_eq!(sc.surface.total_marks(), 12, "{name}");
    }
}

#[test]
fn corpus_files_are_the_only_files_in_the_directory() {
    let mut found: Vec<String> = fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    found.sort();
    let expected: Vec<String> = CORPUS.iter().map(|n| format!("{n}.json")).collect();
    assert_eq!(found, expected);
}

#[test]
fn scenarios_round_trip_through_json() {
    for name in CORPUS {
        let sc = load(name);
        let once = serde_json::to_string_pretty(&sc).unwrap();
        let back: Scenario = serde_json::from_str(&once).unwrap();
        assert_eq!(back, sc, "{name}: value drift");
        let twice = serde_json::to_string_pretty(&back).unwrap();
        assert_eq!(twice, once, "{name}: unstable serialization");
    }
}

#[test]
fn ancestors_analyze_to_the_configurations_the_scenarios_break() {
    for name in CORPUS {
        let sc = load(name);
        let Some(anc) = sc.ancestor else { continue };
        let (a, b) = parse_coefficients(&format!("A = {}; B = {}", anc.a, anc.b))
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        let data = data_from_affine(&a, &b).unwrap_or_else(|e| panic!("{name}: {e}"));
        let config = data.fiber_configuration().unwrap();
        let mut types: Vec<String> = config.iter().map(|f| f.kodaira.to_string()).collect();
        types.sort();
        let budget: u32 = config.iter().map(|f| f.v_d * f.place.degree() as u32).sum();
        assert_eq!(budget, 12, "{name}");
        match *name {
            "i7_collision" => {
                let i7: Vec<_> = config.iter().filter(|f| f.kodaira.to_string() == "I7").collect();
                assert_eq!(i7.len(), 1, "{name}");
                assert_eq!(i7[0].v_d, 7, "{name}");
                let simple: u32 = config
                    .iter()
                    .filter(|f| f.kodaira.to_string() == "I1")
                    .map(|f| f.place.degree() as u32)
                    .sum();
                assert_eq!(simple, 5, "{name}");
                assert_eq!(git::miranda_class(&data).unwrap(), MirandaClass::Stable);
                let (_, points) = git::discriminant_image(&data);
                assert_eq!(points, PointsClass::Unstable, "{name}");
            }
            "two_i0star" | "sandwich_n1_i3star" => {
                assert_eq!(types, ["I0*", "I0*"], "{name}");
                let coordinate = JValue::Finite(Q::new(6912, 31));
                assert_eq!(
                    git::miranda_class(&data).unwrap(),
                    MirandaClass::StrictlySemistable { coordinate: coordinate.clone() }
                );
                if *name == "two_i0star" {
                    assert_eq!(sc.double_locus_j, Some(coordinate), "{name}");
                }
            }
            "dual_pair_ii" => {
                assert_eq!(types, ["II", "II*"], "{name}");
                assert_eq!(git::miranda_class(&data).unwrap(), MirandaClass::Unstable);
            }
            "interior_generic" => {
                assert!(config.iter().all(|f| f.kodaira.to_string() == "I1" && f.v_d == 1), "{name}");
                let total: usize = config.iter().map(|f| f.place.degree()).sum();
                assert_eq!(total, 12, "{name}");
                assert_eq!(git::miranda_class(&data).unwrap(), MirandaClass::Stable);
                let (_, points) = git::discriminant_image(&data);
                assert_eq!(points, PointsClass::Stable, "{name}");
            }
            other => panic!("{other}: ancestor present but not checked"),
        }
    }
}

#[test]
fn replays_reach_the_documented_boundary_classes() {
    let expected: &[(&str, BoundaryClass)] = &[
        ("dual_pair_ii", BoundaryClass::TypeA),
        ("i7_collision", BoundaryClass::TypeA),
        ("interior_generic", BoundaryClass::Interior),
        ("sandwich_n1_i3star", BoundaryClass::TypeC),
        ("two_i0star", BoundaryClass::TypeB),
        ("two_n1_pair", BoundaryClass::TypeD),
    ];
    for (name, class) in expected {
        let sc = load(name);
        let from = sc.surface.weight.clone();
        let to = if from < bottom() { from.clone() } else { bottom() };
        let (end, _) = run(&sc.surface, &from, &to).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(classify_boundary(&end).unwrap(), *class, "{name}");
    }
}

#[test]
fn seven_fold_collision_walks_the_three_documented_walls() {
    let sc = load("i7_collision");
    let (end, events) = run(&sc.surface, &Q::int(1), &bottom()).unwrap();
    let walls: Vec<Q> = events.iter().map(|e| e.wall.clone()).collect();
    assert_eq!(walls, [Q::new(1, 5), Q::new(1, 6), Q::new(1, 7)]);
    assert!(matches!(events[0].kind, WallEventKind::SectionContraction { .. }));
    assert!(matches!(events[1].kind, WallEventKind::SectionContraction { .. }));
    assert!(matches!(events[2].kind, WallEventKind::JInfContractionToFiber { .. }));
    assert_eq!(end.components.len(), 1);
    let mut fibers: Vec<String> = end.components[0]
        .fibers
        .iter()
        .map(|s| s.fiber.to_string())
        .collect();
    fibers.sort();
    assert_eq!(fibers, ["I1", "I1", "I1", "I1", "I1", "I7"]);
}

#[test]
fn sandwich_keeps_its_twisted_edge_to_the_end() {
    let sc = load("sandwich_n1_i3star");
    let (end, _) = run(&sc.surface, &Q::int(1), &bottom()).unwrap();
    let pairs: Vec<(String, String)> = end
        .edges()
        .iter()
        .map(|((c0, s0), (c1, s1))| {
            let f0 = &end.component(*c0).unwrap().fibers[*s0];
            let f1 = &end.component(*c1).unwrap().fibers[*s1];
            (f0.fiber.to_string(), f1.fiber.to_string())
        })
        .collect();
    assert!(
        pairs.contains(&("I3*".into(), "N1".into())) || pairs.contains(&("N1".into(), "I3*".into())),
        "missing N1/I3* edge: {pairs:?}"
    );
}
