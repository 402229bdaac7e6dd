//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::collections::BTreeSet;
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use clusterfib_core::bijection::{pair_to_letters, phi, phi_inv, psi, theta, theta_inv};
use clusterfib_core::clusterseed::{coefficient_free_variable, principal_variable, Direction, Seed};
use clusterfib_core::maxdyck::{enumerate_compatible, greedy_element, CompatibleSelection, EdgeKind, MaxDyckPath};
use clusterfib_core::nondecdyck::{enumerate, Mountain, NonDecreasingPath, PathClass};
use clusterfib_core::snake::{cluster_variable_via_snake, z_direct, z_recur, Edge, PerfectMatching, SnakeGraph};
use clusterfib_core::{fibonacci, LaurentPolynomial, Var};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use common::{arb_poly, brute_force_pairs, ladder_matchings, nondecreasing_words, product};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn matching_counts() -> Outcome {
    for n in 1..=20 {
        let dp = SnakeGraph::new(n).unwrap().count_matchings();
        ensure!(dp == fibonacci(n as u32 + 2), "H_{n}: {dp} != F_{}", n + 2);
    }
    for n in 1..=10 {
        let brute: BTreeSet<BTreeSet<String>> = ladder_matchings(n).into_iter().collect();
        let listed: BTreeSet<BTreeSet<String>> = SnakeGraph::new(n)
            .unwrap()
            .enumerate_matchings()
            .iter()
            .map(|p| p.edges().iter().map(Edge::to_string).collect())
            .collect();
        ensure!(brute.len() as u128 == fibonacci(n as u32 + 2), "oracle count for H_{n} is {}", brute.len());
        ensure!(brute == listed, "matchings of H_{n} differ from the oracle");
    }
    Ok(())
}

fn expansion_identity() -> Outcome {
    for n in 1..=14 {
        ensure!(z_direct(n).unwrap() == z_recur(n).unwrap(), "z_{n} differs");
    }
    Ok(())
}

fn triple_oracle() -> Outcome {
    for k in 3..=8 {
        let snake = cluster_variable_via_snake(k).unwrap();
        let seed = principal_variable(k).unwrap();
        ensure!(snake == seed, "x_{k}: snake {snake} vs mutation {seed}");
        let free = coefficient_free_variable(k).unwrap();
        ensure!(snake.specialize_ones(&[Var::Y1, Var::Y2]) == free, "x_{k}: y -> 1 differs from {free}");
        let greedy = greedy_element(k as i64 - 2, k as i64 - 3, 2, 2).unwrap();
        ensure!(greedy == free, "x_{k}: greedy {greedy} vs {free}");
    }
    Ok(())
}

fn coefficient_sums() -> Outcome {
    for k in 3..=10 {
        let sum = cluster_variable_via_snake(k).unwrap().coefficient_sum();
        ensure!(sum == fibonacci(2 * k as u32 - 3).into(), "x_{k}: sum {sum}");
    }
    Ok(())
}

fn pair_counts() -> Outcome {
    let sizes: Vec<u128> = (0..=10).map(|n| enumerate_compatible(n).len() as u128).collect();
    for (n, &t) in sizes.iter().enumerate() {
        ensure!(t == fibonacci(2 * n as u32 + 3), "|T_{n}| = {t}");
        if n >= 2 {
            ensure!(t == 3 * sizes[n - 1] - sizes[n - 2], "recurrence fails at n = {n}");
        }
    }
    for n in 0..=5 {
        let brute: BTreeSet<(Vec<usize>, Vec<usize>)> = brute_force_pairs(n).into_iter().collect();
        let fast: BTreeSet<(Vec<usize>, Vec<usize>)> = enumerate_compatible(n)
            .iter()
            .map(|s| (s.s1().iter().copied().collect(), s.s2().iter().copied().collect()))
            .collect();
        ensure!(brute == fast, "n = {n}: {} brute-force pairs vs {} enumerated", brute.len(), fast.len());
    }
    Ok(())
}

fn predicate_equivalence() -> Outcome {
    for n in 0..=5 {
        for m1 in 0u32..1 << (n + 1) {
            for m2 in 0u32..1 << n {
                let s1: Vec<usize> = (0..=n).filter(|i| m1 >> i & 1 == 1).collect();
                let s2: Vec<usize> = (0..n).filter(|j| m2 >> j & 1 == 1).collect();
                let sel = CompatibleSelection::from_ordinals(MaxDyckPath::family(n), s1.clone(), s2.clone()).unwrap();
                let d = sel.is_compatible_definition(2, 2);
                let m = sel.is_compatible_max().unwrap();
                let f = sel.is_compatible_fast().unwrap();
                let oracle = common::compatible_by_definition(n + 1, n, &s1, &s2, 2, 2);
                ensure!(
                    d == m && m == f && f == oracle,
                    "n = {n}, S1 = {s1:?}, S2 = {s2:?}: definition {d}, max {m}, fast {f}, oracle {oracle}"
                );
            }
        }
    }
    Ok(())
}

fn nondecreasing_counts() -> Outcome {
    let all: Vec<Vec<NonDecreasingPath>> = (0..=13).map(|n| if n == 0 { Vec::new() } else { enumerate(n) }).collect();
    for n in 2..=12 {
        let (s_prev, s, s_next) = (all[n - 1].len() as u128, all[n].len() as u128, all[n + 1].len() as u128);
        ensure!(s == fibonacci(2 * n as u32 - 1), "|S_{n}| = {s}");
        ensure!(s_next == 3 * s - s_prev, "recurrence fails at n = {n}");
    }
    for (n, paths) in all.iter().enumerate().take(11).skip(1) {
        let brute = nondecreasing_words(n);
        let listed: BTreeSet<String> = paths.iter().map(|p| p.to_string()).collect();
        ensure!(brute == listed, "S_{n} differs from the filtered word list");
    }
    let class_count = |paths: &[NonDecreasingPath], c: PathClass| {
        paths.iter().filter(|p| p.classify().ok() == Some(c)).count()
    };
    for n in 2..=8 {
        let (cur, prev) = (&all[n], &all[n - 1]);
        let (a, b, c) = (
            class_count(cur, PathClass::A),
            class_count(cur, PathClass::B),
            class_count(cur, PathClass::C),
        );
        ensure!(a + b + c == cur.len(), "n = {n}: classes do not cover S_n");
        ensure!(a == prev.len() && b == prev.len(), "n = {n}: |A| = {a}, |B| = {b}, |S_(n-1)| = {}", prev.len());
        let c_want = class_count(prev, PathClass::B) + class_count(prev, PathClass::C);
        ensure!(c == c_want, "n = {n}: |C| = {c}, expected {c_want}");
    }
    Ok(())
}

fn bijection_round_trips() -> Outcome {
    for n in 0..=7 {
        let matchings = SnakeGraph::new(2 * n + 1).unwrap().enumerate_matchings();
        for p in &matchings {
            let sel = phi(p).map_err(|e| e.to_string())?;
            ensure!(phi_inv(&sel).unwrap() == *p, "phi_inv(phi(P)) != P for {:?}", p.edges());
            let q = theta(&sel).map_err(|e| e.to_string())?;
            ensure!(psi(p).unwrap() == q, "psi != theta . phi on {:?}", p.edges());
        }
        for sel in enumerate_compatible(n) {
            let p = phi_inv(&sel).map_err(|e| e.to_string())?;
            ensure!(phi(&p).unwrap() == sel, "phi(phi_inv(S)) != S, n = {n}");
            let q = theta(&sel).map_err(|e| e.to_string())?;
            ensure!(theta_inv(&q).unwrap() == sel, "theta_inv(theta(S)) != S, n = {n}");
        }
        for q in enumerate(n + 2) {
            let sel = theta_inv(&q).map_err(|e| e.to_string())?;
            ensure!(theta(&sel).unwrap() == q, "theta(theta_inv(Q)) != Q for {q}");
        }
    }
    Ok(())
}

fn worked_examples() -> Outcome {
    use Var::*;
    // the matching listings, transcribed factor by factor
    let z1 = &(&product(&[X3, X4, Y1]) + &product(&[X2, X2])) * &LaurentPolynomial::var_pow(X1, -1).unwrap();
    let z2 = [product(&[X3, X4, X3, Y1]), product(&[X3, X1, X1, Y1, Y2]), product(&[X2, X2, X3])]
        .into_iter()
        .sum::<LaurentPolynomial>()
        .exact_divide(&product(&[X1, X2]))
        .unwrap();
    let z3 = [
        product(&[X3, X4, X3, X4, Y1, Y1]),
        product(&[X3, X4, X2, X2, Y1]),
        product(&[X3, X1, X1, X4, Y1, Y2, Y1]),
        product(&[X2, X2, X3, X4, Y1]),
        product(&[X2, X2, X2, X2]),
    ]
    .into_iter()
    .sum::<LaurentPolynomial>()
    .exact_divide(&product(&[X1, X2, X1]))
    .unwrap();
    for (n, want) in [(1, z1), (2, z2), (3, z3)] {
        let got = z_direct(n).unwrap();
        let (g, w) = (serde_json::to_string(&got).unwrap(), serde_json::to_string(&want).unwrap());
        ensure!(g == w, "z_{n}: {g} vs {w}");
        ensure!(got.to_string() == want.to_string(), "z_{n} text differs");
    }

    // the n = 6 matching and its pair, letters and mountains
    let edges = [
        Edge::SideA(0),
        Edge::SideB(0),
        Edge::Rung(2),
        Edge::Rung(3),
        Edge::SideA(4),
        Edge::SideB(4),
        Edge::Rung(6),
        Edge::Rung(7),
        Edge::Rung(8),
        Edge::SideA(9),
        Edge::SideB(9),
        Edge::SideA(11),
        Edge::SideB(11),
        Edge::Rung(13),
    ];
    let p = PerfectMatching::new(13, edges).map_err(|e| e.to_string())?;
    let pair = CompatibleSelection::family(6, [0, 2], [5, 6]).unwrap();
    ensure!(phi(&p).unwrap() == pair, "phi of the n = 6 matching is {:?}", phi(&p));
    ensure!(phi_inv(&pair).unwrap() == p, "phi_inv of the pair differs");
    ensure!(pair.is_compatible_fast().unwrap() && pair.is_compatible_definition(2, 2), "pair not compatible");
    let letters = pair_to_letters(&pair).unwrap().to_string();
    ensure!(letters == "UOUOOVV", "letters {letters}");
    let want = NonDecreasingPath::from_mountains(
        [[2, 2], [2, 2], [3, 1], [1, 3]].into_iter().map(Mountain::from).collect(),
    )
    .unwrap();
    ensure!(theta(&pair).unwrap() == want, "theta gives {}", theta(&pair).unwrap());
    ensure!(psi(&p).unwrap() == want, "psi gives {}", psi(&p).unwrap());
    let json = serde_json::to_string(&want).unwrap();
    ensure!(json == r#"{"mountains":[[2,2],[2,2],[3,1],[1,3]]}"#, "path JSON {json}");

    // subpath on the 6 x 4 path
    let d = MaxDyckPath::build_maximal(6, 4).unwrap();
    let sub = d.subpath(d.point_at(5, 2).unwrap(), d.point_at(2, 1).unwrap());
    let labels: Vec<String> = sub
        .edges
        .iter()
        .map(|e| match e.kind {
            EdgeKind::Horizontal => format!("u{}", e.ordinal + 1),
            EdgeKind::Vertical => format!("v{}", e.ordinal + 1),
        })
        .collect();
    ensure!(labels == ["v3", "u6", "v4", "u1", "u2", "v1"], "subpath {labels:?}");
    let interior: Vec<(usize, usize)> = sub.interior.iter().map(|&c| d.coordinates(c)).collect();
    ensure!(interior == [(5, 3), (6, 3), (0, 0), (1, 0), (2, 0)], "interior {interior:?}");
    Ok(())
}

fn run_props(cases: u32, name: &str, test: impl Fn(&mut TestRunner) -> Result<(), String>) -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    test(&mut runner).map_err(|e| format!("{name}: {e}"))
}

fn algebra_properties() -> Outcome {
    run_props(1000, "ring axioms", |r| {
        r.run(&(arb_poly(), arb_poly(), arb_poly()), |(a, b, c)| {
            let zero = LaurentPolynomial::zero();
            let one = LaurentPolynomial::one();
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &zero, a.clone());
            prop_assert_eq!(&a * &one, a.clone());
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert_eq!(&a - &b, &a + &(-&b));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    run_props(1000, "exact division", |r| {
        r.run(&(arb_poly(), arb_poly()), |(a, b)| {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    run_props(200, "mutation involution", |r| {
        r.run(&prop::collection::vec(any::<bool>(), 0..9), |walk| {
            let mut seed = Seed::principal();
            for step in walk {
                seed = seed.mutate(if step { Direction::One } else { Direction::Two }).unwrap();
            }
            for k in [Direction::One, Direction::Two] {
                let once = seed.mutate(k).unwrap();
                let neg = seed.matrix().map(|row| row.map(|b| -b));
                prop_assert_eq!(once.matrix(), neg);
                prop_assert_eq!(once.mutate(k).unwrap(), seed.clone());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("matching counts", matching_counts),
        ("expansion identity", expansion_identity),
        ("triple-oracle agreement", triple_oracle),
        ("coefficient sums", coefficient_sums),
        ("compatible-pair counts", pair_counts),
        ("predicate equivalence", predicate_equivalence),
        ("nondecreasing counts", nondecreasing_counts),
        ("bijection round trips", bijection_round_trips),
        ("worked examples", worked_examples),
        ("algebra properties", algebra_properties),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
