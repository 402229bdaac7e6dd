//! Self-checks over small sizes, shared by the command line and the tests.

use std::collections::BTreeSet;
use std::fmt;

use crate::bijection::{phi, phi_inv, psi, theta, theta_inv};
use crate::clusterseed::{coefficient_free_variable, principal_variable};
use crate::exactalg::Var;
use crate::fib::fibonacci;
use crate::maxdyck::{enumerate_compatible, greedy_element, CompatibleSelection, MaxDyckPath};
use crate::nondecdyck::{enumerate, NonDecreasingPath, PathClass};
use crate::snake::{cluster_variable_via_snake, z_direct, z_sequence, SnakeGraph};

/// Largest index used for the polynomial comparisons, whatever `max_n` is.
const POLY_CAP: usize = 14;
/// Largest `k` for which greedy elements are expanded.
const GREEDY_CAP: usize = 10;
/// Largest `n` for the exhaustive predicate comparison.
const PREDICATE_CAP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Oracles,
    Bijections,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{status} {}", c.name)?;
            } else {
                writeln!(f, "{status} {} ({})", c.name, c.detail)?;
            }
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

pub fn run(suite: Suite, max_n: usize) -> Report {
    let mut report = Report::default();
    if matches!(suite, Suite::Counts | Suite::All) {
        counts(&mut report, max_n);
    }
    if matches!(suite, Suite::Oracles | Suite::All) {
        oracles(&mut report, max_n);
    }
    if matches!(suite, Suite::Bijections | Suite::All) {
        bijections(&mut report, max_n);
    }
    report
}

fn eq_detail<T: PartialEq + fmt::Display>(got: T, want: T) -> (bool, String) {
    (got == want, format!("got {got}, expected {want}"))
}

fn counts(report: &mut Report, max_n: usize) {
    for m in 1..=2 * max_n + 1 {
        let g = SnakeGraph::new(m).expect("m >= 1");
        let want = fibonacci(m as u32 + 2);
        let listed = g.enumerate_matchings().len() as u128;
        let (ok, detail) = eq_detail(g.count_matchings(), want);
        report.record(format!("matchings of H_{m} = F_{}", m + 2), ok && listed == want, detail);
    }

    let mut sizes = Vec::new();
    for n in 0..=max_n {
        let t = enumerate_compatible(n).len() as u128;
        sizes.push(t);
        let (ok, detail) = eq_detail(t, fibonacci(2 * n as u32 + 3));
        report.record(format!("compatible pairs on D^({}x{n}) = F_{}", n + 1, 2 * n + 3), ok, detail);
        if n >= 2 {
            let (ok, detail) = eq_detail(t, 3 * sizes[n - 1] - sizes[n - 2]);
            report.record(format!("|T_{n}| = 3|T_{}| - |T_{}|", n - 1, n - 2), ok, detail);
        }
    }

    let mut prev: Option<Vec<NonDecreasingPath>> = None;
    for n in 1..=max_n + 2 {
        let all = enumerate(n);
        let (ok, detail) = eq_detail(all.len() as u128, fibonacci(2 * n as u32 - 1));
        report.record(format!("nondecreasing paths of length {} = F_{}", 2 * n, 2 * n - 1), ok, detail);
        if let Some(prev) = prev.filter(|_| n >= 2) {
            let mut class = [0usize; 3];
            let mut prev_bc = 0;
            for p in &all {
                match p.classify() {
                    Ok(PathClass::A) => class[0] += 1,
                    Ok(PathClass::B) => class[1] += 1,
                    Ok(PathClass::C) => class[2] += 1,
                    Err(_) => {}
                }
            }
            for p in &prev {
                if matches!(p.classify(), Ok(PathClass::B | PathClass::C)) {
                    prev_bc += 1;
                }
            }
            let ok = class[0] == prev.len() && class[1] == prev.len() && class[2] == prev_bc;
            report.record(
                format!("class sizes for length {}", 2 * n),
                ok,
                format!("A={}, B={}, C={}; previous total {}, previous B+C {prev_bc}", class[0], class[1], class[2], prev.len()),
            );
        }
        prev = Some(all);
    }
}

fn oracles(report: &mut Report, max_n: usize) {
    let top = (2 * max_n + 1).min(POLY_CAP);
    let recur = z_sequence(top).expect("top >= 1");
    for (i, z) in recur.iter().enumerate() {
        let n = i + 1;
        let ok = z_direct(n).map(|d| &d == z).unwrap_or(false);
        report.record(format!("z_{n} by matchings = z_{n} by recurrence"), ok, "");
    }

    for k in 3..=(max_n + 3).min(GREEDY_CAP) {
        let snake = cluster_variable_via_snake(k);
        let seed = principal_variable(k);
        let free = coefficient_free_variable(k);
        let greedy = greedy_element(k as i64 - 2, k as i64 - 3, 2, 2);
        let (ok, detail) = match (snake, seed, free, greedy) {
            (Ok(s), Ok(p), Ok(f), Ok(g)) => {
                let specialized = s.specialize_ones(&[Var::Y1, Var::Y2]);
                let sum_ok = f.coefficient_sum() == fibonacci(2 * k as u32 - 3).into();
                (
                    s == p && specialized == f && f == g && sum_ok,
                    format!("coefficient sum {}", f.coefficient_sum()),
                )
            }
            (s, p, f, g) => (
                false,
                format!("errors: {:?} {:?} {:?} {:?}", s.err(), p.err(), f.err(), g.err()),
            ),
        };
        report.record(format!("x_{k}: snake = mutation, free = greedy, sum F_{}", 2 * k - 3), ok, detail);
    }

    for n in 0..=max_n.min(PREDICATE_CAP) {
        let mut mismatches = 0usize;
        for m1 in 0u32..1 << (n + 1) {
            for m2 in 0u32..1 << n {
                let s1 = (0..=n).filter(|i| m1 >> i & 1 == 1);
                let s2 = (0..n).filter(|j| m2 >> j & 1 == 1);
                let sel = CompatibleSelection::from_ordinals(MaxDyckPath::family(n), s1, s2)
                    .expect("in range");
                let d = sel.is_compatible_definition(2, 2);
                if sel.is_compatible_max() != Ok(d) || sel.is_compatible_fast() != Ok(d) {
                    mismatches += 1;
                }
            }
        }
        report.record(
            format!("three compatibility tests agree on D^({}x{n})", n + 1),
            mismatches == 0,
            format!("{mismatches} disagreements"),
        );
    }
}

fn bijections(report: &mut Report, max_n: usize) {
    for n in 0..=max_n {
        let matchings = SnakeGraph::new(2 * n + 1).expect("odd").enumerate_matchings();
        let mut pairs = BTreeSet::new();
        let mut paths = BTreeSet::new();
        let mut failures = Vec::new();
        for p in &matchings {
            let mut step = || -> Result<(), String> {
                let sel = phi(p).map_err(|e| e.to_string())?;
                if phi_inv(&sel).map_err(|e| e.to_string())? != *p {
                    return Err("phi_inv(phi(P)) != P".into());
                }
                let q = theta(&sel).map_err(|e| e.to_string())?;
                if psi(p).map_err(|e| e.to_string())? != q {
                    return Err("psi(P) != theta(phi(P))".into());
                }
                if theta_inv(&q).map_err(|e| e.to_string())? != sel {
                    return Err("theta_inv(theta(S)) != S".into());
                }
                pairs.insert(sel);
                paths.insert(q);
                Ok(())
            };
            if let Err(e) = step() {
                failures.push(e);
            }
        }
        let all_pairs: BTreeSet<_> = enumerate_compatible(n).into_iter().collect();
        let all_paths: BTreeSet<_> = enumerate(n + 2).into_iter().collect();
        let onto = pairs == all_pairs && paths == all_paths;
        for sel in &all_pairs {
            match phi_inv(sel).and_then(|p| phi(&p)) {
                Ok(back) if &back == sel => {}
                _ => failures.push("phi(phi_inv(S)) != S".into()),
            }
        }
        for q in &all_paths {
            match theta_inv(q).and_then(|s| theta(&s)) {
                Ok(back) if &back == q => {}
                _ => failures.push("theta(theta_inv(Q)) != Q".into()),
            }
        }
        let detail = match failures.first() {
            Some(first) => format!("{} failures, first: {first}", failures.len()),
            None => format!("{} matchings", matchings.len()),
        };
        report.record(
            format!("phi, theta, psi bijective for n = {n}"),
            failures.is_empty() && onto,
            detail,
        );
    }
}
