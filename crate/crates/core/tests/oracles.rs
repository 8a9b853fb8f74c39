mod common;

use common::*;
use platsurf::diagram::row_len;
use platsurf::paths::enumerate_shape;
use platsurf::*;
use rand::Rng;

fn reduced(limit: i64) -> impl Iterator<Item = Fraction> {
    (-limit..=limit).flat_map(move |p| {
        (0..=limit).filter_map(move |q| Fraction::new(p, q).ok())
    })
}

#[test]
fn pairing_matches_tangle_tracing() {
    for f in reduced(40) {
        let traced = trace_pairing(&canonical_expansion(f));
        let expected = match pairing(f) {
            Pairing::ThroughIdentity => Traced::Identity,
            Pairing::ThroughSwap => Traced::Swap,
            Pairing::Caps => Traced::Caps,
        };
        assert_eq!(traced, expected, "{f}");
    }
}

#[test]
fn twist_pairing_is_parity() {
    for a in -50i64..=50 {
        let p = pairing(TangleBox::Twist(a).fraction());
        let want = if a % 2 != 0 {
            Pairing::ThroughSwap
        } else {
            Pairing::ThroughIdentity
        };
        assert_eq!(p, want, "a = {a}");
        assert_eq!(box_pairing(&TangleBox::Twist(a)), if a % 2 != 0 { Traced::Swap } else { Traced::Identity });
    }
}

#[test]
fn continued_fractions_agree_with_exact_evaluation() {
    for f in reduced(40) {
        let terms = canonical_expansion(f);
        assert_eq!(continued_fraction(&terms).unwrap(), f, "round trip of {f}");
        assert_eq!(exact_continued_fraction(&terms), (f.p() as i128, f.q() as i128));
    }
    let mut rng = rng(11);
    for _ in 0..2000 {
        let len = rng.gen_range(1..=6);
        let terms: Vec<i64> = (0..len).map(|_| rng.gen_range(-6..=6)).collect();
        let f = continued_fraction(&terms).unwrap();
        assert_eq!(exact_continued_fraction(&terms), (f.p() as i128, f.q() as i128), "{terms:?}");
    }
}

#[test]
fn incompressibility_levels_saturate() {
    let mut last = 0;
    for q in 0..20 {
        let f = Fraction::new(1, q).unwrap();
        let c = incompressibility_class(f);
        assert!(c.level >= last);
        assert!(c.level <= 3);
        last = c.level;
        assert_eq!(c.punctured_disk_incompressible(), q >= 1);
        assert_eq!(c.complement_of_circle_incompressible(), q >= 2);
        assert_eq!(c.compressing_disks_meet_twice(), q >= 3);
    }
}

#[test]
fn components_match_walk() {
    let mut rng = rng(5);
    for _ in 0..500 {
        let d = any_twist_diagram(&mut rng, (1, 6), 9, 4);
        assert_eq!(LinkTopology::build(&d).component_count(), walk_components(&d).len(), "{}", d.to_json());
    }
}

#[test]
fn components_match_walk_with_rational_boxes() {
    let mut rng = rng(6);
    for _ in 0..300 {
        let n = rng.gen_range(2..=5);
        let m = odd(&mut rng, 7);
        let rows = (1..=m)
            .map(|i| {
                (0..row_len(n, i))
                    .map(|_| loop {
                        let (p, q) = (rng.gen_range(-9..=9), rng.gen_range(0..=9));
                        if let Ok(b) = TangleBox::rational(p, q) {
                            break b;
                        }
                    })
                    .collect()
            })
            .collect();
        let d = PlatDiagram::new(n, m, rows).unwrap();
        let t = LinkTopology::build(&d);
        assert_eq!(t.component_count(), walk_components(&d).len());
        // Components are numbered by their smallest segment.
        for c in 1..t.component_count() {
            assert!(t.canonical_segment(c - 1) < t.canonical_segment(c));
        }
    }
}

#[test]
fn braid_permutation_matches_walk() {
    let mut rng = rng(7);
    for _ in 0..500 {
        let d = any_twist_diagram(&mut rng, (1, 6), 9, 5);
        let perm = braid_permutation(&d).unwrap();
        assert_eq!(perm, walk_permutation(&d));
        assert_eq!(to_braid_word(&d).unwrap().permutation(), perm);
        assert_eq!(closure_component_count(&perm), walk_components(&d).len());
    }
}

#[test]
fn step_rule_matches_brute_force() {
    for n in 1..=5 {
        for m in [1, 3, 5, 7] {
            let brute = brute_force_allowable(n, m);
            let listed: Vec<Vec<usize>> = enumerate_shape(n, m)
                .into_iter()
                .map(|p| p.entries().to_vec())
                .collect();
            assert_eq!(listed, brute, "n = {n}, m = {m}");
            assert_eq!(count_allowable(n, m).unwrap(), brute.len().into());
        }
    }
}

#[test]
fn counts_match_enumeration() {
    for n in 3..=6 {
        for m in (1..=9).step_by(2) {
            assert_eq!(
                count_allowable(n, m).unwrap(),
                enumerate_shape(n, m).len().into(),
                "n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn geometry_matches_arithmetic_within_bounds() {
    let d = PlatDiagram::from_twists(4, 3, vec![vec![3, 1, 3], vec![2, 2, 2, 2], vec![3, 1, 3]]).unwrap();
    for v in all_vectors(4, 3) {
        if bounds_hold(4, &v) {
            assert_eq!(crossing_count_oracle(&d, &v).unwrap(), arithmetic_crossings(&v), "{v:?}");
        }
    }
    assert_eq!(crossing_count_oracle(&d, &[1, 3, 1]).unwrap(), 8);
}

#[test]
fn decomposition_arcs_match_walk() {
    let mut rng = rng(8);
    for _ in 0..150 {
        let d = any_twist_diagram(&mut rng, (3, 5), 7, 4);
        for p in enumerate_allowable(&d) {
            let dec = decompose(&d, &p).unwrap();
            let mut both: Vec<(usize, usize)> = dec.left.arcs.iter().chain(&dec.right.arcs).copied().collect();
            both.sort_unstable();
            assert_eq!(both, arcs_from_walk(&d, p.entries()), "{} path {p}", d.to_json());
            let cycles = puncture_cycles(&d, p.entries());
            let meeting: usize = cycles.iter().filter(|c| !c.is_empty()).count();
            assert_eq!(meeting, dec.crossing_components.iter().collect::<std::collections::BTreeSet<_>>().len());
        }
    }
}

#[test]
fn loops_are_components_missing_the_sphere() {
    let mut rng = rng(9);
    for _ in 0..150 {
        let d = any_twist_diagram(&mut rng, (3, 5), 7, 4);
        let cycles = puncture_cycles(&d, &vec![1; d.m()]);
        let missing = cycles.iter().filter(|c| c.is_empty()).count();
        let (left, _) = extremal_paths(&d).unwrap();
        let dec = decompose(&d, &left).unwrap();
        assert_eq!(dec.left.loops + dec.right.loops, missing);
    }
}

#[test]
fn tubed_surfaces_match_ribbon_count() {
    let mut rng = rng(10);
    for _ in 0..100 {
        let d = strict_diagram(&mut rng, (3, 5), (1, 7));
        for p in enumerate_allowable(&d) {
            let dec = decompose(&d, &p).unwrap();
            let [planar, f, f2] = surface_invariants(&dec);
            let m = d.m();
            assert_eq!(ribbon_surface(m + 1, &[]), (planar.euler, planar.boundary, Some(0)));
            assert_eq!(ribbon_surface(m + 1, &dec.left.arcs), (f.euler, 0, Some(f.genus)));
            assert_eq!(ribbon_surface(m + 1, &dec.right.arcs), (f2.euler, 0, Some(f2.genus)));
        }
    }
}

#[test]
fn figure_example_and_spec_counts() {
    let d = random_diagram(4, 5, 5, 3, false).unwrap();
    assert!(check_allowable(&d, &[1, 1, 1, 2, 2]).unwrap().allowable);
    assert_eq!(crossing_count_oracle(&d, &[1, 1, 1, 2, 2]).unwrap(), 6);
    let d3 = random_diagram(3, 3, 5, 3, false).unwrap();
    assert_eq!(crossing_count_oracle(&d3, &[1, 1, 1]).unwrap(), 4);
    let bad = check_allowable(&d3, &[1, 3, 1]).unwrap();
    assert!(!bad.allowable);
    assert!(bad.diagnostic.unwrap().starts_with("row 2"));
}
