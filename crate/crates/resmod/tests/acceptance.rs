//! The release gate. One test per criterion; each line of the harness output
//! is the pass/fail verdict for that criterion. Time budgets and tolerances
//! are pinned as constants next to the tests that use them.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use resmod::binform::QPoly;
use resmod::broken::{BrokenSurface, Scenario};
use resmod::git::{self, MirandaClass, PointsClass};
use resmod::hassett::{self, Mark, TreeComponent, WeightedTree};
use resmod::parse::parse_coefficients;
use resmod::rational::Q;
use resmod::reduce::{classify_boundary, run, BoundaryClass, WallEvent, WallEventKind};
use resmod::walls::enumerate_walls;
use resmod::weierstrass::{data_from_affine, JValue, WeierstrassData};

const WALL_TABLE_BUDGET: Duration = Duration::from_secs(1);
const CLASSIFY_BUDGET_EACH: Duration = Duration::from_secs(1);
const CORPUS_BUDGET: Duration = Duration::from_secs(30);
const HASSETT_BUDGET: Duration = Duration::from_secs(5);
const CORPUS_SIZE: usize = 200;
const RNG_SEED: u64 = 0x5eed_cafe;

fn scenario_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenarios")
}

fn load_scenario(name: &str) -> Scenario {
    let path = scenario_dir().join(format!("{name}.json"));
    let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

const SCENARIOS: &[&str] = &[
    "dual_pair_ii",
    "i7_collision",
    "interior_generic",
    "sandwich_n1_i3star",
    "two_i0star",
    "two_n1_pair",
];

/// A chamber point below every wall.
fn lowest_chamber() -> Q {
    Q::new(11, 120)
}

fn pair(a_text: &str, b_text: &str) -> WeierstrassData {
    let (a, b) = parse_coefficients(&format!("A = {a_text}; B = {b_text}")).unwrap();
    data_from_affine(&a, &b).unwrap()
}

/// The one seeded example with a high-order I_n fiber: v(D) = 7 at t = 0.
fn i7_pair() -> WeierstrassData {
    pair("3t^4 + 6t^3 + 6t^2 - 3", "7t^6 + 6t^5 - 6t^3 - 6t^2 + 2")
}

#[test]
fn criterion_01_wall_table_matches_a_brute_force_enumeration() {
    let started = Instant::now();
    // independent oracle: generate the four families from their definitions
    let mut oracle: BTreeSet<Q> = BTreeSet::new();
    let thresholds = [
        Q::new(1, 6),
        Q::new(1, 4),
        Q::new(1, 3),
        Q::new(1, 2),
        Q::new(2, 3),
        Q::new(3, 4),
        Q::new(5, 6),
    ];
    oracle.extend(thresholds.iter().cloned());
    for k in 1..=5i64 {
        oracle.insert(Q::new(1, k));
    }
    oracle.insert(Q::new(1, 6));
    for a0 in [Q::new(5, 6), Q::new(3, 4), Q::new(2, 3), Q::new(1, 2)] {
        for k in 2..=5i64 {
            oracle.insert(&a0 / &Q::int(k));
        }
    }
    for k in 2..=9i64 {
        oracle.insert(Q::new(1, k));
    }
    oracle.retain(|v| *v > Q::new(1, 12));

    let walls = enumerate_walls();
    let values: Vec<Q> = walls.iter().map(|w| w.value.clone()).collect();
    let mut expected: Vec<Q> = oracle.into_iter().collect();
    expected.reverse();
    assert_eq!(values, expected, "wall values differ from the oracle");
    assert_eq!(values.len(), 21);
    assert_eq!(values.first(), Some(&Q::int(1)));
    assert_eq!(values.last(), Some(&Q::new(1, 10)));
    assert!(walls.iter().all(|w| !w.labels.is_empty()));
    assert!(started.elapsed() < WALL_TABLE_BUDGET, "took {:?}", started.elapsed());
}

#[test]
fn criterion_02_the_three_reference_surfaces_classify_exactly() {
    let started = Instant::now();
    let data = pair("t^2", "t^3");
    let config = data.fiber_configuration().unwrap();
    assert_eq!(config.len(), 2);
    assert!(config.iter().all(|f| f.kodaira.to_string() == "I0*"));
    assert_eq!(data.j_function().constant_value(), Some(Q::new(6912, 31)));
    assert_eq!(
        git::miranda_class(&data).unwrap(),
        MirandaClass::StrictlySemistable { coordinate: JValue::Finite(Q::new(6912, 31)) }
    );
    assert!(started.elapsed() < CLASSIFY_BUDGET_EACH);

    let started = Instant::now();
    let data = pair("0", "t");
    let mut types: Vec<String> =
        data.fiber_configuration().unwrap().iter().map(|f| f.kodaira.to_string()).collect();
    types.sort();
    assert_eq!(types, ["II", "II*"]);
    assert_eq!(git::miranda_class(&data).unwrap(), MirandaClass::Unstable);
    assert!(started.elapsed() < CLASSIFY_BUDGET_EACH);

    let started = Instant::now();
    let data = pair("t", "1");
    let config = data.fiber_configuration().unwrap();
    let stars: Vec<_> = config.iter().filter(|f| f.kodaira.to_string() == "III*").collect();
    assert_eq!(stars.len(), 1);
    let simple: Vec<_> = config.iter().filter(|f| f.kodaira.to_string() == "I1").collect();
    assert_eq!(simple.len(), 1, "the three I1 points form one place");
    assert_eq!(simple[0].place.degree(), 3);
    assert_eq!(simple[0].v_d, 1);
    let budget: usize = config.iter().map(|f| f.place.degree() * f.v_d as usize).sum();
    assert_eq!(budget, 12);
    assert!(started.elapsed() < CLASSIFY_BUDGET_EACH);
}

fn random_poly(rng: &mut StdRng, max_degree: usize) -> QPoly {
    let coeffs: Vec<Q> = (0..=max_degree).map(|_| Q::int(rng.gen_range(-5..=5))).collect();
    QPoly::new(coeffs)
}

/// At least `CORPUS_SIZE` random minimal surfaces plus the seeded reference
/// examples, so the high-multiplicity strata are represented.
fn corpus() -> Vec<WeierstrassData> {
    let mut rng = StdRng::seed_from_u64(RNG_SEED);
    let mut out = Vec::with_capacity(CORPUS_SIZE + 4);
    while out.len() < CORPUS_SIZE {
        let a = random_poly(&mut rng, 4);
        let b = random_poly(&mut rng, 6);
        let Ok(data) = data_from_affine(&a, &b) else { continue };
        if !data.is_minimal_everywhere() {
            continue;
        }
        out.push(data);
    }
    out.push(i7_pair());
    out.push(pair("t^2", "t^3"));
    out.push(pair("0", "t"));
    out.push(pair("t", "1"));
    out
}

#[test]
fn criterion_03_the_degree_twelve_budget_holds_across_the_corpus() {
    let started = Instant::now();
    let corpus = corpus();
    assert!(corpus.len() >= CORPUS_SIZE);
    for data in &corpus {
        let config = data.fiber_configuration().unwrap();
        let budget: usize = config.iter().map(|f| f.place.degree() * f.v_d as usize).sum();
        assert_eq!(budget, 12);
        for f in &config {
            assert_eq!(
                f.kodaira.disc_degree().unwrap(),
                f.v_d,
                "type {} at a place with v(D) = {}",
                f.kodaira,
                f.v_d
            );
        }
    }
    assert!(started.elapsed() < CORPUS_BUDGET, "took {:?}", started.elapsed());
}

#[test]
fn criterion_04_high_multiplicity_fibers_split_the_two_git_quotients() {
    let corpus = corpus();
    let mut saw_deep = false;
    let mut saw_simple = false;
    for data in &corpus {
        let config = data.fiber_configuration().unwrap();
        let deep_in = config.iter().any(|f| matches!(
            f.kodaira,
            resmod::fiber::FiberType::I(n) if n >= 7
        ));
        if deep_in {
            saw_deep = true;
            assert_eq!(git::miranda_class(data).unwrap(), MirandaClass::Stable);
            let (_, points) = git::discriminant_image(data);
            assert_eq!(points, PointsClass::Unstable);
        }
        if config.iter().all(|f| f.v_d == 1) {
            saw_simple = true;
            assert_eq!(git::miranda_class(data).unwrap(), MirandaClass::Stable);
            let (_, points) = git::discriminant_image(data);
            assert_eq!(points, PointsClass::Stable);
        }
    }
    assert!(saw_deep, "corpus never exercised an I_n, n >= 7 fiber");
    assert!(saw_simple, "corpus never exercised a 12-simple-zero surface");
}

/// What a coordinate change may not alter: the multiset of fiber types with
/// their discriminant orders and place degrees, tagged with the j-value where
/// one exists at a rational point.
fn signature(data: &WeierstrassData) -> BTreeMap<(String, u32, usize, Option<String>), usize> {
    let mut sig = BTreeMap::new();
    for f in data.fiber_configuration().unwrap() {
        let j = f
            .place
            .is_rational_point()
            .then(|| data.j_at(&f.place).unwrap().to_string());
        *sig.entry((f.kodaira.to_string(), f.v_d, f.place.degree(), j)).or_insert(0) += 1;
    }
    sig
}

#[test]
fn criterion_05_scalings_and_mobius_twists_change_nothing() {
    let mut rng = StdRng::seed_from_u64(RNG_SEED ^ 0xff);
    let bases = [pair("t^2", "t^3"), pair("0", "t"), pair("t", "1"), i7_pair()];
    for base in &bases {
        let sig = signature(base);
        let miranda = git::miranda_class(base).unwrap();
        let j_const = base.j_function().constant_value();
        for _ in 0..20 {
            let lambda = loop {
                let v = Q::new(rng.gen_range(-4..=4), rng.gen_range(1..=4));
                if !v.is_zero() {
                    break v;
                }
            };
            let scaled = WeierstrassData::new(
                base.a().scale(&lambda.pow(4)),
                base.b().scale(&lambda.pow(6)),
            )
            .unwrap();
            assert_eq!(signature(&scaled), sig);
            assert_eq!(git::miranda_class(&scaled).unwrap(), miranda);
            assert_eq!(scaled.j_function().constant_value(), j_const);
        }
        for _ in 0..20 {
            let m = loop {
                let m = [
                    [Q::int(rng.gen_range(-3..=3)), Q::int(rng.gen_range(-3..=3))],
                    [Q::int(rng.gen_range(-3..=3)), Q::int(rng.gen_range(-3..=3))],
                ];
                let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
                if !det.is_zero() {
                    break m;
                }
            };
            let lambda = Q::new(rng.gen_range(1..=4), rng.gen_range(1..=4));
            let twisted = WeierstrassData::new(
                base.a().substitute(&m).scale(&lambda.pow(4)),
                base.b().substitute(&m).scale(&lambda.pow(6)),
            )
            .unwrap();
            assert_eq!(signature(&twisted), sig);
            assert_eq!(git::miranda_class(&twisted).unwrap(), miranda);
            assert_eq!(twisted.j_function().constant_value(), j_const);
        }
    }
}

fn simple_marks(prefix: &str, n: u32) -> Vec<Mark> {
    (0..n).map(|i| Mark { label: format!("{prefix}{i}"), mult: 1 }).collect()
}

#[test]
fn criterion_06_brute_force_enumeration_confirms_the_stable_shapes() {
    let started = Instant::now();
    let a = Q::new(11, 60);
    let mut stable_shapes: BTreeSet<Vec<u32>> = BTreeSet::new();

    let single = WeightedTree::new(
        vec![TreeComponent { id: 0, marks: simple_marks("p", 12) }],
        vec![],
    )
    .unwrap();
    if hassett::is_stable(&single, &a) {
        stable_shapes.insert(vec![12]);
    }

    for m in 0..=12u32 {
        let tree = WeightedTree::new(
            vec![
                TreeComponent { id: 0, marks: simple_marks("p", m) },
                TreeComponent { id: 1, marks: simple_marks("q", 12 - m) },
            ],
            vec![(0, 1)],
        )
        .unwrap();
        if hassett::is_stable(&tree, &a) {
            let mut shape = vec![m, 12 - m];
            shape.sort_unstable_by(|x, y| y.cmp(x));
            stable_shapes.insert(shape);
        }
    }

    // all paths x - mid - y over all splits of the 12 marks
    for m0 in 0..=12u32 {
        for m1 in 0..=(12 - m0) {
            let m2 = 12 - m0 - m1;
            let tree = WeightedTree::new(
                vec![
                    TreeComponent { id: 0, marks: simple_marks("p", m0) },
                    TreeComponent { id: 1, marks: simple_marks("q", m1) },
                    TreeComponent { id: 2, marks: simple_marks("r", m2) },
                ],
                vec![(0, 1), (1, 2)],
            )
            .unwrap();
            if hassett::is_stable(&tree, &a) {
                let mut shape = vec![m0, m1, m2];
                shape.sort_unstable_by(|x, y| y.cmp(x));
                stable_shapes.insert(shape);
            }
        }
    }

    let expected: BTreeSet<Vec<u32>> = [vec![12], vec![6, 6]].into_iter().collect();
    assert_eq!(stable_shapes, expected);
    assert!(started.elapsed() < HASSETT_BUDGET, "took {:?}", started.elapsed());
}

#[test]
fn criterion_07_the_collision_scenario_replays_figure_one() {
    let sc = load_scenario("i7_collision");
    let (end, events) = run(&sc.surface, &Q::int(1), &lowest_chamber()).unwrap();
    assert_eq!(events.len(), 3, "{events:#?}");
    assert_eq!(events[0].wall, Q::new(1, 5));
    assert!(matches!(events[0].kind, WallEventKind::SectionContraction { .. }));
    assert!(events[0].details.contains("flip"), "{}", events[0].details);
    assert_eq!(events[1].wall, Q::new(1, 6));
    assert!(matches!(events[1].kind, WallEventKind::SectionContraction { .. }));
    assert_eq!(events[2].wall, Q::new(1, 7));
    assert!(matches!(events[2].kind, WallEventKind::JInfContractionToFiber { .. }));

    assert_eq!(end.components.len(), 1);
    let mut fibers: Vec<String> =
        end.components[0].fibers.iter().map(|s| s.fiber.to_string()).collect();
    fibers.sort();
    assert_eq!(fibers, ["I1", "I1", "I1", "I1", "I1", "I7"]);
    assert_eq!(classify_boundary(&end).unwrap(), BoundaryClass::TypeA);
}

fn edge_fibers(surface: &BrokenSurface) -> Vec<(String, String)> {
    surface
        .edges()
        .iter()
        .map(|((c0, s0), (c1, s1))| {
            let mut pair = [
                surface.component(*c0).unwrap().fibers[*s0].fiber.to_string(),
                surface.component(*c1).unwrap().fibers[*s1].fiber.to_string(),
            ];
            pair.sort();
            (pair[0].clone(), pair[1].clone())
        })
        .collect()
}

#[test]
fn criterion_08_the_two_six_six_scenarios_split_into_type_c_and_type_b() {
    let sc = load_scenario("sandwich_n1_i3star");
    let (end, _) = run(&sc.surface, &Q::int(1), &lowest_chamber()).unwrap();
    assert_eq!(classify_boundary(&end).unwrap(), BoundaryClass::TypeC);
    assert!(
        edge_fibers(&end).contains(&("I3*".into(), "N1".into())),
        "edges: {:?}",
        edge_fibers(&end)
    );

    let sc = load_scenario("two_i0star");
    let (end, _) = run(&sc.surface, &Q::int(1), &lowest_chamber()).unwrap();
    assert_eq!(classify_boundary(&end).unwrap(), BoundaryClass::TypeB);
    assert_eq!(edge_fibers(&end), [("I0*".to_string(), "I0*".to_string())]);
}

#[test]
fn criterion_09_the_walker_composes_and_conserves_marks() {
    for name in SCENARIOS {
        let sc = load_scenario(name);
        let from = sc.surface.weight.clone();
        let to = if from < lowest_chamber() { from.clone() } else { lowest_chamber() };
        let (direct, events) = run(&sc.surface, &from, &to).unwrap();
        assert_eq!(direct.total_marks(), 12, "{name}");
        for pair in events.windows(2) {
            assert!(pair[0].wall > pair[1].wall, "{name}: event weights not decreasing");
        }
        // splitting at any intermediate chamber point gives the same endpoint
        for mid in [Q::new(11, 60), Q::new(5, 24), Q::new(7, 24), Q::new(7, 12)] {
            if !(to < mid && mid < from) {
                continue;
            }
            let (half, first) = run(&sc.surface, &from, &mid).unwrap();
            assert_eq!(half.total_marks(), 12, "{name}");
            let (rest, second) = run(&half, &mid, &to).unwrap();
            assert_eq!(rest, direct, "{name}: split at {mid} diverged");
            let recombined: Vec<WallEvent> =
                first.into_iter().chain(second.into_iter()).collect();
            assert_eq!(recombined, events, "{name}: event log differs when split at {mid}");
        }
    }
}

#[test]
fn criterion_10_every_schema_round_trips_on_the_corpus() {
    fn round_trip<T>(value: &T, context: &str)
    where
        T: serde::Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug,
    {
        let text = serde_json::to_string(value).unwrap();
        let back: T = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{context}: {e}"));
        assert_eq!(&back, value, "{context}");
    }

    for name in SCENARIOS {
        let sc = load_scenario(name);
        round_trip(&sc, name);
        round_trip(&sc.surface, name);
        round_trip(&sc.surface.validate(), name);
        let from = sc.surface.weight.clone();
        let to = if from < lowest_chamber() { from.clone() } else { lowest_chamber() };
        let (end, events) = run(&sc.surface, &from, &to).unwrap();
        round_trip(&end, name);
        round_trip(&events, name);
        if let Ok(class) = classify_boundary(&end) {
            round_trip(&class, name);
        }
        if let Some(anc) = &sc.ancestor {
            let (a, b) = parse_coefficients(&format!("A = {}; B = {}", anc.a, anc.b)).unwrap();
            let data = data_from_affine(&a, &b).unwrap();
            round_trip(&data.fiber_configuration().unwrap(), name);
            round_trip(&git::miranda_class(&data).unwrap(), name);
        }
    }
    round_trip(&enumerate_walls(), "wall table");

    let tree = WeightedTree::new(
        vec![
            TreeComponent { id: 0, marks: simple_marks("p", 5) },
            TreeComponent { id: 1, marks: simple_marks("q", 7) },
        ],
        vec![(0, 1)],
    )
    .unwrap();
    round_trip(&tree, "weighted tree");
    let (reduced, contractions) = hassett::reduce_tree(&tree, &Q::new(53, 300)).unwrap();
    round_trip(&reduced, "reduced tree");
    round_trip(&contractions, "contraction events");
}
