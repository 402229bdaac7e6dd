//! Bijections between matchings of `H_{2n+1}`, compatible pairs on
//! `D^{(n+1) x n}` and nondecreasing Dyck paths of length `2n + 4`.
//!
//! All three go through a word of `n + 1` letters over `{O, U, V}`:
//!
//! ```text
//!   letter i | matching of H_{2n+1}      | pair on D^{(n+1) x n}
//!   ---------+---------------------------+----------------------
//!   U        | rails at position 2i      | u_i in S1
//!   V        | rails at position 2i - 1  | v_i in S2
//!   O        | rung at position 2i       | neither
//! ```
//!
//! Such words never start with `V` and never contain `UV`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::maxdyck::{CompatibleSelection, DyckError, Indexing};
use crate::nondecdyck::{Mountain, NonDecreasingPath, NondecError};
use crate::snake::{Edge, PerfectMatching, SnakeError, SnakeGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("expected a matching of H_(2n+1), got one of H_{0}")]
    EvenSnake(usize),
    #[error("expected a pair on D^((n+1) x n), got {a1} x {a2}")]
    NotFamily { a1: usize, a2: usize },
    #[error("pair is not compatible: {0}")]
    Incompatible(String),
    #[error("invalid letter word: {0}")]
    Letters(String),
    #[error("path of length {0} is too short, need at least 4")]
    TooShort(usize),
    #[error(transparent)]
    Snake(#[from] SnakeError),
    #[error(transparent)]
    Dyck(#[from] DyckError),
    #[error(transparent)]
    Nondec(#[from] NondecError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    O,
    U,
    V,
}

impl Letter {
    pub fn symbol(self) -> char {
        match self {
            Letter::O => 'O',
            Letter::U => 'U',
            Letter::V => 'V',
        }
    }
}

/// A word over `{O, U, V}` that starts with `O` or `U` and avoids `UV`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterSequence(Vec<Letter>);

impl LetterSequence {
    pub fn new(letters: Vec<Letter>) -> Result<Self, BijectionError> {
        match letters.first() {
            None => return Err(BijectionError::Letters("empty word".into())),
            Some(Letter::V) => return Err(BijectionError::Letters("word starts with V".into())),
            _ => {}
        }
        if let Some(i) = letters.windows(2).position(|w| w == [Letter::U, Letter::V]) {
            return Err(BijectionError::Letters(format!("U followed by V at position {i}")));
        }
        Ok(LetterSequence(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// `n` for a word of `n + 1` letters.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Display for LetterSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for LetterSequence {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| match c {
                'O' | 'o' => Ok(Letter::O),
                'U' | 'u' => Ok(Letter::U),
                'V' | 'v' => Ok(Letter::V),
                other => Err(BijectionError::Letters(format!("unexpected {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        LetterSequence::new(letters)
    }
}

fn family_n(sel: &CompatibleSelection) -> Result<usize, BijectionError> {
    let path = sel.path();
    path.family_index().ok_or(BijectionError::NotFamily {
        a1: path.a1(),
        a2: path.a2(),
    })
}

fn odd_snake_n(p: &PerfectMatching) -> Result<usize, BijectionError> {
    let tiles = p.tiles();
    if tiles % 2 == 0 {
        return Err(BijectionError::EvenSnake(tiles));
    }
    Ok((tiles - 1) / 2)
}

/// Matching of `H_{2n+1}` to compatible pair on `D^{(n+1) x n}`:
/// `u_i` for the rails at `2i`, `v_i` for the rails at `2i - 1`.
pub fn phi(p: &PerfectMatching) -> Result<CompatibleSelection, BijectionError> {
    let n = odd_snake_n(p)?;
    let u = (0..=n).filter(|&i| p.has_rails(2 * i));
    let v = (1..=n).filter(|&i| p.has_rails(2 * i - 1));
    Ok(CompatibleSelection::family(n, u, v)?)
}

/// Inverse of [`phi`]: place the rails named by the pair, then a rung at
/// every position left uncovered.
pub fn phi_inv(sel: &CompatibleSelection) -> Result<PerfectMatching, BijectionError> {
    let n = family_n(sel)?;
    if !sel.is_compatible_fast()? {
        return Err(BijectionError::Incompatible(format!(
            "S1 = {:?}, S2 = {:?}",
            sel.u_labels(Indexing::Zero),
            sel.v_labels()
        )));
    }
    let tiles = 2 * n + 1;
    let mut rails: Vec<usize> = sel.s1().iter().map(|&i| 2 * i).collect();
    rails.extend(sel.s2().iter().map(|&o| 2 * (o + 1) - 1));
    let mut covered = vec![false; tiles + 1];
    let mut edges = Vec::new();
    for &r in &rails {
        covered[r] = true;
        covered[r + 1] = true;
        edges.push(Edge::SideA(r));
        edges.push(Edge::SideB(r));
    }
    edges.extend((0..=tiles).filter(|&i| !covered[i]).map(Edge::Rung));
    Ok(PerfectMatching::new(tiles, edges)?)
}

/// The letter word of a compatible pair on `D^{(n+1) x n}`.
pub fn pair_to_letters(sel: &CompatibleSelection) -> Result<LetterSequence, BijectionError> {
    let n = family_n(sel)?;
    let letters = (0..=n)
        .map(|i| {
            let u = sel.s1().contains(&i);
            let v = i > 0 && sel.s2().contains(&(i - 1));
            match (u, v) {
                (false, false) => Ok(Letter::O),
                (true, false) => Ok(Letter::U),
                (false, true) => Ok(Letter::V),
                (true, true) => Err(BijectionError::Incompatible(format!(
                    "u_{i} and v_{i} both selected"
                ))),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    LetterSequence::new(letters).map_err(|_| BijectionError::Incompatible("u_i and v_(i+1) both selected".into()))
}

pub fn letters_to_pair(word: &LetterSequence) -> CompatibleSelection {
    let n = word.n();
    let at = |l: Letter| word.0.iter().enumerate().filter(move |(_, x)| **x == l).map(|(i, _)| i);
    CompatibleSelection::family(n, at(Letter::U), at(Letter::V)).expect("labels in range")
}

/// The letter word of a matching of `H_{2n+1}`, read off rungs and rails
/// at even positions.
pub fn matching_to_letters(p: &PerfectMatching) -> Result<LetterSequence, BijectionError> {
    let n = odd_snake_n(p)?;
    let letters = (0..=n)
        .map(|i| {
            if p.contains(Edge::Rung(2 * i)) {
                Letter::O
            } else if p.has_rails(2 * i) {
                Letter::U
            } else {
                Letter::V
            }
        })
        .collect();
    LetterSequence::new(letters)
}

/// Mountains of the path for a letter word: each block `U^a O V^b` gives
/// `(a + b + 1, a + 1)`, and the trailing `U`s close the path.
pub fn letters_to_path(word: &LetterSequence) -> NonDecreasingPath {
    let n = word.n();
    let mut mountains = Vec::new();
    let (mut a, mut b, mut open) = (0, 0, false);
    for &l in word.letters() {
        match l {
            Letter::U | Letter::O if open => {
                mountains.push(Mountain::new(a + b + 1, a + 1));
                (a, b, open) = (0, 0, false);
            }
            _ => {}
        }
        match l {
            Letter::U => a += 1,
            Letter::O => open = true,
            Letter::V => b += 1,
        }
    }
    if open {
        mountains.push(Mountain::new(a + b + 1, a + 1));
    }
    let ups: usize = mountains.iter().map(|m| m.up).sum();
    let downs: usize = mountains.iter().map(|m| m.down).sum();
    mountains.push(Mountain::new(n + 2 - ups, n + 2 - downs));
    NonDecreasingPath::from_mountains(mountains).expect("letter words give nondecreasing paths")
}

/// Inverse of [`letters_to_path`].
pub fn path_to_letters(path: &NonDecreasingPath) -> Result<LetterSequence, BijectionError> {
    if path.half_length() < 2 {
        return Err(BijectionError::TooShort(2 * path.half_length()));
    }
    let (last, blocks) = path.mountains().split_last().expect("nonempty");
    let mut letters = Vec::with_capacity(path.half_length() - 1);
    for m in blocks {
        letters.extend(std::iter::repeat(Letter::U).take(m.down - 1));
        letters.push(Letter::O);
        letters.extend(std::iter::repeat(Letter::V).take(m.up - m.down));
    }
    letters.extend(std::iter::repeat(Letter::U).take(last.up - 1));
    LetterSequence::new(letters)
}

/// Compatible pair on `D^{(n+1) x n}` to nondecreasing path of length `2n + 4`.
pub fn theta(sel: &CompatibleSelection) -> Result<NonDecreasingPath, BijectionError> {
    Ok(letters_to_path(&pair_to_letters(sel)?))
}

pub fn theta_inv(path: &NonDecreasingPath) -> Result<CompatibleSelection, BijectionError> {
    Ok(letters_to_pair(&path_to_letters(path)?))
}

/// Matching of `H_{2n+1}` straight to its nondecreasing path.
pub fn psi(p: &PerfectMatching) -> Result<NonDecreasingPath, BijectionError> {
    Ok(letters_to_path(&matching_to_letters(p)?))
}

/// One matching with its images under `phi` and `psi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub matching: PerfectMatching,
    pub pair: CompatibleSelection,
    pub path: NonDecreasingPath,
}

impl Triple {
    pub fn from_matching(p: PerfectMatching) -> Result<Self, BijectionError> {
        let pair = phi(&p)?;
        let path = psi(&p)?;
        Ok(Triple {
            matching: p,
            pair,
            path,
        })
    }
}

/// All triples for `n`, in matching enumeration order.
pub fn enumerate_triples(n: usize) -> Vec<Triple> {
    SnakeGraph::new(2 * n + 1)
        .expect("odd tile count")
        .enumerate_matchings()
        .into_iter()
        .map(|p| Triple::from_matching(p).expect("odd snake"))
        .collect()
}

/// The compatible pairs of `D^{(n+1) x n}` as the images of all letter words.
pub fn all_letter_words(n: usize) -> Vec<LetterSequence> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n + 1);
    fn walk(n: usize, current: &mut Vec<Letter>, out: &mut Vec<LetterSequence>) {
        if current.len() == n + 1 {
            out.push(LetterSequence(current.clone()));
            return;
        }
        for l in [Letter::O, Letter::U, Letter::V] {
            let blocked = l == Letter::V && matches!(current.last(), None | Some(Letter::U));
            if !blocked {
                current.push(l);
                walk(n, current, out);
                current.pop();
            }
        }
    }
    walk(n, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::fibonacci;
    use crate::maxdyck::enumerate_compatible;
    use crate::nondecdyck::enumerate;
    use std::collections::BTreeSet;
    use Edge::{Rung, SideA, SideB};

    fn example_matching() -> PerfectMatching {
        let mut edges = vec![];
        for r in [0, 4, 9, 11] {
            edges.push(SideA(r));
            edges.push(SideB(r));
        }
        for r in [2, 3, 6, 7, 8, 13] {
            edges.push(Rung(r));
        }
        PerfectMatching::new(13, edges).unwrap()
    }

    fn path(ms: &[(usize, usize)]) -> NonDecreasingPath {
        NonDecreasingPath::from_mountains(ms.iter().map(|&(d, e)| Mountain::new(d, e)).collect())
            .unwrap()
    }

    #[test]
    fn worked_example() {
        let p = example_matching();
        let sel = phi(&p).unwrap();
        assert_eq!(sel, CompatibleSelection::family(6, [0, 2], [5, 6]).unwrap());
        assert_eq!(phi_inv(&sel).unwrap(), p);
        let word = pair_to_letters(&sel).unwrap();
        assert_eq!(word.to_string(), "UOUOOVV");
        assert_eq!(matching_to_letters(&p).unwrap(), word);
        let fig = path(&[(2, 2), (2, 2), (3, 1), (1, 3)]);
        assert_eq!(theta(&sel).unwrap(), fig);
        assert_eq!(psi(&p).unwrap(), fig);
        assert_eq!(theta_inv(&fig).unwrap(), sel);
    }

    #[test]
    fn small_cases() {
        let g = SnakeGraph::new(3).unwrap();
        assert_eq!(
            phi(&g.p_minus()).unwrap(),
            CompatibleSelection::family(1, [0, 1], []).unwrap()
        );
        let rungs = PerfectMatching::new(3, (0..=3).map(Rung)).unwrap();
        assert_eq!(phi(&rungs).unwrap(), CompatibleSelection::family(1, [], []).unwrap());
        assert_eq!(phi_inv(&CompatibleSelection::family(1, [], []).unwrap()).unwrap(), rungs);
        assert_eq!(psi(&g.p_minus()).unwrap(), path(&[(3, 3)]));

        let empty0 = CompatibleSelection::family(0, [], []).unwrap();
        assert_eq!(pair_to_letters(&empty0).unwrap().to_string(), "O");
        assert_eq!(theta(&empty0).unwrap(), path(&[(1, 1), (1, 1)]));
        assert_eq!(theta_inv(&path(&[(1, 1), (1, 1)])).unwrap(), empty0);
        let u0 = CompatibleSelection::family(0, [0], []).unwrap();
        assert_eq!(theta(&u0).unwrap(), path(&[(2, 2)]));

        assert_eq!(theta_inv(&path(&[(1, 1)])), Err(BijectionError::TooShort(2)));
        let even = PerfectMatching::new(2, [Rung(0), Rung(1), Rung(2)]).unwrap();
        assert_eq!(phi(&even), Err(BijectionError::EvenSnake(2)));
        let bad = CompatibleSelection::family(2, [1], [2]).unwrap();
        assert!(matches!(phi_inv(&bad), Err(BijectionError::Incompatible(_))));
        assert!(matches!(pair_to_letters(&bad), Err(BijectionError::Incompatible(_))));
    }

    #[test]
    fn letter_words() {
        assert!("UOUOOVV".parse::<LetterSequence>().is_ok());
        assert!("(U,O,U,O,O,V,V)".parse::<LetterSequence>().is_ok());
        assert!("VO".parse::<LetterSequence>().is_err());
        assert!("OUV".parse::<LetterSequence>().is_err());
        assert!("".parse::<LetterSequence>().is_err());
        for n in 0..=6 {
            let words = all_letter_words(n);
            assert_eq!(words.len() as u128, fibonacci(2 * n as u32 + 3));
            let pairs: BTreeSet<_> = words.iter().map(letters_to_pair).collect();
            let expected: BTreeSet<_> = enumerate_compatible(n).into_iter().collect();
            assert_eq!(pairs, expected);
            for w in &words {
                assert_eq!(&pair_to_letters(&letters_to_pair(w)).unwrap(), w);
            }
        }
    }

    #[test]
    fn bijections_round_trip() {
        for n in 0..=6 {
            let matchings = SnakeGraph::new(2 * n + 1).unwrap().enumerate_matchings();
            let mut pairs = BTreeSet::new();
            let mut paths = BTreeSet::new();
            for p in &matchings {
                let sel = phi(p).unwrap();
                assert!(sel.is_compatible_definition(2, 2));
                assert_eq!(&phi_inv(&sel).unwrap(), p);
                let q = theta(&sel).unwrap();
                assert_eq!(psi(p).unwrap(), q);
                assert_eq!(theta_inv(&q).unwrap(), sel);
                pairs.insert(sel);
                paths.insert(q);
            }
            let all_pairs: BTreeSet<_> = enumerate_compatible(n).into_iter().collect();
            let all_paths: BTreeSet<_> = enumerate(n + 2).into_iter().collect();
            assert_eq!(pairs, all_pairs);
            assert_eq!(paths, all_paths);
        }
    }

    #[test]
    fn triple_json() {
        let t = Triple::from_matching(example_matching()).unwrap();
        let text = serde_json::to_string(&t).unwrap();
        assert!(text.starts_with(r#"{"matching":{"n":13,"edges":["#));
        assert!(text.ends_with(r#""path":{"mountains":[[2,2],[2,2],[3,1],[1,3]]}}"#));
        assert_eq!(serde_json::from_str::<Triple>(&text).unwrap(), t);
        assert_eq!(enumerate_triples(2).len(), 13);
    }
}
