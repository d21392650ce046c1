mod common;

use actiongraphs::sequences::{catalan, fuss_catalan, super_catalan};
use actiongraphs::{
    build_by_rules, build_classic, build_fuss, build_super, check_axioms, compute_ntable,
    infer_rules, BigRational, BigUint, GraphFamily, PathRules, SequenceSpec, DEFAULT_EXPAND_LIMIT,
};
use num_bigint::BigInt;

fn assert_matches_naive(fam: &GraphFamily, naive: &[actiongraphs::ExpandedGraph], name: &str) {
    for (n, want) in naive.iter().enumerate() {
        let got = fam.graphs[n].expand().unwrap();
        assert_eq!(got.len(), want.len(), "{name} step {n}");
        assert!(got.iso_shifted(want, 0), "{name} step {n}");
    }
}

#[test]
fn condensed_growth_matches_vertex_by_vertex_growth() {
    assert_matches_naive(
        &build_classic(7).unwrap(),
        &common::family_naive(7, common::classic_rule),
        "classic",
    );
    assert_matches_naive(
        &build_fuss(6, 2).unwrap(),
        &common::family_naive(6, common::fuss_rule(2)),
        "fuss k=2",
    );
    assert_matches_naive(
        &build_fuss(5, 3).unwrap(),
        &common::family_naive(5, common::fuss_rule(3)),
        "fuss k=3",
    );
    assert_matches_naive(
        &build_super(7).unwrap(),
        &common::family_naive(7, common::super_rule),
        "super",
    );
}

#[test]
fn step_counts_at_scale() {
    let classic = build_classic(12).unwrap().new_counts();
    for (n, c) in classic.iter().enumerate() {
        assert_eq!(c, &catalan(n as u64), "classic step {n}");
    }
    for k in 1..=3 {
        let counts = build_fuss(10, k).unwrap().new_counts();
        for (n, c) in counts.iter().enumerate() {
            assert_eq!(
                c,
                &fuss_catalan(n as u64, k).unwrap(),
                "fuss k={k} step {n}"
            );
        }
    }
    let sup = build_super(12).unwrap().new_counts();
    for (n, c) in sup.iter().enumerate() {
        assert_eq!(c, &super_catalan(0, n as u64), "super step {n}");
    }
    // 1430 from the factorial form, apart from the library's kernel
    assert_eq!(classic[8], common::choose(16, 8) / 9u32);
}

#[test]
fn fuss_one_is_classic() {
    let classic = build_classic(6).unwrap();
    let fuss = build_fuss(6, 1).unwrap();
    for n in 0..=6 {
        assert!(classic.graphs[n].iso_shifted(&fuss.graphs[n], 0));
    }
}

#[test]
fn rule_families_reproduce_named_builders() {
    let cases = [
        (
            PathRules::classic(8),
            build_classic(8).unwrap(),
            SequenceSpec::Catalan,
        ),
        (
            PathRules::fuss(2, 8).unwrap(),
            build_fuss(8, 2).unwrap(),
            SequenceSpec::Fuss(2),
        ),
        (
            PathRules::super_catalan(8),
            build_super(8).unwrap(),
            SequenceSpec::SuperCatalanRow(0),
        ),
    ];
    for (rules, named, spec) in cases {
        let built = build_by_rules(&rules, &spec, 8).unwrap();
        assert!(built.mismatches().is_empty(), "{spec}");
        for n in 0..=8 {
            assert!(
                built.family.graphs[n].iso_shifted(&named.graphs[n], 0),
                "{spec} {n}"
            );
        }
    }
}

#[test]
fn earlier_graphs_are_prefixes() {
    for fam in [
        build_classic(8).unwrap(),
        build_fuss(6, 3).unwrap(),
        build_super(8).unwrap(),
    ] {
        for pair in fam.graphs.windows(2) {
            let (old, new) = (&pair[0], &pair[1]);
            // Old nodes keep label, multiplier and parent; only child lists grow.
            for (a, b) in old.nodes().iter().zip(new.nodes()) {
                assert_eq!((a.label, &a.mult, a.parent), (b.label, &b.mult, b.parent));
                assert_eq!(a.children[..], b.children[..a.children.len()]);
            }
            let step = new.max_label();
            for node in &new.nodes()[old.len()..] {
                assert_eq!(node.label, step);
                assert!(node.children.is_empty());
            }
        }
    }
}

#[test]
fn all_axioms_hold_to_six() {
    let families = [
        (build_classic(6).unwrap(), SequenceSpec::Catalan),
        (build_fuss(6, 1).unwrap(), SequenceSpec::Fuss(1)),
        (build_fuss(6, 2).unwrap(), SequenceSpec::Fuss(2)),
        (build_fuss(6, 3).unwrap(), SequenceSpec::Fuss(3)),
        (build_super(6).unwrap(), SequenceSpec::SuperCatalanRow(0)),
    ];
    for (fam, spec) in families {
        let report = check_axioms(&fam, &spec, DEFAULT_EXPAND_LIMIT).unwrap();
        assert!(report.fully_checked(), "{spec}");
        assert!(report.passed(), "{spec}");
        for a2 in &report.axiom2 {
            let actiongraphs::Axiom2Report::Checked {
                n,
                matches,
                unexpected,
                ..
            } = a2
            else {
                unreachable!()
            };
            assert!(unexpected.is_empty(), "{spec} n={n}");
            for m in matches {
                assert_eq!(m.matched_k, n - m.label, "{spec} n={n}");
                assert_eq!(m.shift, m.label);
            }
        }
    }
}

#[test]
fn ntables_match_brute_force() {
    let fam = build_super(5).unwrap();
    for n in 0..=5u32 {
        let table = compute_ntable(&fam, n).unwrap();
        let brute = common::path_counts(&fam.graphs[n as usize].expand().unwrap());
        for l in 0..=n {
            for v in 0..=n {
                let want = brute.get(&(v, n, l)).copied().unwrap_or(0);
                assert_eq!(table.get(l, v), &BigUint::from(want), "n={n} l={l} v={v}");
            }
        }
    }
}

#[test]
fn ntable_zero_pattern_and_row_zero() {
    let fam = build_super(12).unwrap();
    for n in 0..=12u32 {
        let t = compute_ntable(&fam, n).unwrap();
        for l in 0..=n {
            for v in 0..=n {
                let zero = l + v > n || (l == 0 && v != n);
                assert_eq!(
                    t.get(l, v) == &BigUint::from(0u32),
                    zero,
                    "n={n} l={l} v={v}"
                );
            }
        }
        assert_eq!(t.row_sums()[0], super_catalan(0, u64::from(n)));
    }
}

#[test]
fn super_rules_inferred_to_length_ten() {
    let report = infer_rules(&SequenceSpec::SuperCatalanRow(0), 11, false).unwrap();
    assert!(report.consistent());
    let rules = report.inferred.as_slice();
    assert_eq!(rules.len(), 11);
    for (l, r) in rules.iter().enumerate() {
        let want = BigRational::new(BigInt::from(2u32), BigInt::from(2u32).pow(l as u32));
        assert_eq!(r, &want, "l={l}");
    }
}

#[test]
fn inferred_rules_rebuild_their_prefix() {
    for spec in [
        SequenceSpec::Catalan,
        SequenceSpec::Fuss(2),
        SequenceSpec::Fuss(3),
        SequenceSpec::SuperCatalanRow(0),
        SequenceSpec::TriangleDiagonal(2),
    ] {
        let report = infer_rules(&spec, 8, false).unwrap();
        let n = report.inferred.len() as u32;
        let rebuilt = build_by_rules(&report.inferred, &spec, n).unwrap();
        assert!(rebuilt.mismatches().is_empty(), "{spec}");
    }
}

#[test]
fn builds_are_deterministic() {
    assert_eq!(
        build_super(9).unwrap().to_json(),
        build_super(9).unwrap().to_json()
    );
    assert_eq!(
        build_fuss(7, 3).unwrap().to_json(),
        build_fuss(7, 3).unwrap().to_json()
    );
}
