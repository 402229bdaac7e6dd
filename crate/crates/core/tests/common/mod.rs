//! Brute-force oracles written without reference to the library internals.
#![allow(dead_code)]

use std::collections::BTreeSet;

use clusterfib_core::{ExponentVector, LaurentPolynomial, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

/// All perfect matchings of the `n`-tile ladder, found by plain vertex
/// backtracking over an explicit edge list. Edges are named `rung:i`,
/// `sideA:i`, `sideB:i`; vertex `a_i` is `i` and `b_i` is `n + 1 + i`.
pub fn ladder_matchings(n: usize) -> Vec<BTreeSet<String>> {
    let verts = 2 * (n + 1);
    let b = |i: usize| n + 1 + i;
    let mut edges: Vec<(String, usize, usize)> = Vec::new();
    for i in 0..=n {
        edges.push((format!("rung:{i}"), i, b(i)));
    }
    for i in 0..n {
        edges.push((format!("sideA:{i}"), i, i + 1));
        edges.push((format!("sideB:{i}"), b(i), b(i + 1)));
    }

    fn go(
        covered: &mut Vec<bool>,
        edges: &[(String, usize, usize)],
        chosen: &mut Vec<usize>,
        out: &mut Vec<BTreeSet<String>>,
    ) {
        let Some(v) = covered.iter().position(|c| !c) else {
            out.push(chosen.iter().map(|&e| edges[e].0.clone()).collect());
            return;
        };
        for (idx, (_, p, q)) in edges.iter().enumerate() {
            let other = if *p == v {
                *q
            } else if *q == v {
                *p
            } else {
                continue;
            };
            if covered[other] {
                continue;
            }
            covered[v] = true;
            covered[other] = true;
            chosen.push(idx);
            go(covered, edges, chosen, out);
            chosen.pop();
            covered[v] = false;
            covered[other] = false;
        }
    }

    let mut out = Vec::new();
    go(&mut vec![false; verts], &edges, &mut Vec::new(), &mut out);
    out
}

/// Nondecreasing Dyck words of length `2n` by filtering all `2^(2n)` words.
pub fn nondecreasing_words(n: usize) -> BTreeSet<String> {
    let len = 2 * n;
    let mut out = BTreeSet::new();
    'word: for mask in 0u64..1 << len {
        let ups: Vec<bool> = (0..len).map(|i| mask >> (len - 1 - i) & 1 == 1).collect();
        let mut h: i64 = 0;
        let mut last_valley: i64 = -1;
        for i in 0..len {
            h += if ups[i] { 1 } else { -1 };
            if h < 0 {
                continue 'word;
            }
            if !ups[i] && i + 1 < len && ups[i + 1] {
                if h < last_valley {
                    continue 'word;
                }
                last_valley = h;
            }
        }
        if h == 0 {
            out.insert(ups.iter().map(|&u| if u { '/' } else { '\\' }).collect());
        }
    }
    out
}

/// Points of the maximal path in an `a1 x a2` box, from the origin to
/// `(a1, a2)` inclusive, with the kind of each edge (`true` = horizontal).
fn maximal_path(a1: usize, a2: usize) -> (Vec<(usize, usize)>, Vec<bool>) {
    let mut pts = vec![(0, 0)];
    let mut kinds = Vec::new();
    let (mut x, mut y) = (0usize, 0usize);
    while (x, y) != (a1, a2) {
        // step right if the next horizontal edge stays weakly below the diagonal
        if x < a1 && (x * a2) / a1 == y {
            x += 1;
            kinds.push(true);
        } else {
            y += 1;
            kinds.push(false);
        }
        pts.push((x, y));
    }
    (pts, kinds)
}

/// The existential compatibility condition, evaluated on coordinates.
/// `s1` and `s2` hold 0-based ordinals of horizontal and vertical edges.
pub fn compatible_by_definition(a1: usize, a2: usize, s1: &[usize], s2: &[usize], b: usize, c: usize) -> bool {
    let (_, kinds) = maximal_path(a1, a2);
    let len = kinds.len();
    let nth = |horizontal: bool, k: usize| {
        kinds
            .iter()
            .enumerate()
            .filter(|(_, &h)| h == horizontal)
            .nth(k)
            .map(|(i, _)| i)
            .unwrap()
    };
    for &u in s1 {
        let e = nth(true, u);
        for &v in s2 {
            let f = (nth(false, v) + 1) % len;
            let span = match (f + len - e) % len {
                0 => len,
                d => d,
            };
            // edge positions along EF, in order
            let path: Vec<usize> = (0..span).map(|k| (e + k) % len).collect();
            let ordinal = |pos: usize| kinds[..pos].iter().filter(|&&h| h == kinds[pos]).count();
            let found = (1..span).any(|cut| {
                let (ea, af) = path.split_at(cut);
                let ea_vert = ea.iter().filter(|&&p| !kinds[p]).count();
                let ea_s1 = ea.iter().filter(|&&p| kinds[p] && s1.contains(&ordinal(p))).count();
                let af_horiz = af.iter().filter(|&&p| kinds[p]).count();
                let af_s2 = af.iter().filter(|&&p| !kinds[p] && s2.contains(&ordinal(p))).count();
                af_horiz == b * af_s2 || ea_vert == c * ea_s1
            });
            if !found {
                return false;
            }
        }
    }
    true
}

/// Every subset pair on `D^((n+1) x n)` that passes [`compatible_by_definition`].
pub fn brute_force_pairs(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for m1 in 0u32..1 << (n + 1) {
        let s1: Vec<usize> = (0..=n).filter(|i| m1 >> i & 1 == 1).collect();
        for m2 in 0u32..1 << n {
            let s2: Vec<usize> = (0..n).filter(|j| m2 >> j & 1 == 1).collect();
            if compatible_by_definition(n + 1, n, &s1, &s2, 2, 2) {
                out.push((s1.clone(), s2));
            }
        }
    }
    out
}

/// Product of variables as a polynomial, e.g. `[X3, X4, Y1]`.
pub fn product(vars: &[Var]) -> LaurentPolynomial {
    vars.iter()
        .fold(LaurentPolynomial::one(), |acc, v| &acc * &LaurentPolynomial::from(*v))
}

/// Random Laurent polynomials with small exponents and coefficients.
pub fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
    let term = (
        -3i32..=3,
        -3i32..=3,
        0i32..=2,
        0i32..=2,
        0i32..=2,
        0i32..=2,
        -6i64..=6,
    );
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let mut p = LaurentPolynomial::zero();
        for (a, b, c, d, e, f, coef) in terms {
            let exp = ExponentVector::new([a, b, c, d, e, f]).expect("y, x3, x4 exponents are nonnegative");
            p.add_term(exp, BigInt::from(coef));
        }
        p
    })
}
