//! Nondecreasing Dyck paths of even length.
//!
//! A path of length `2n` is kept as its list of mountains `(d, e)`: `d` up
//! steps followed by `e` down steps. Valley altitudes never decrease, so
//! every mountain but the last has `d >= e`, and the last has `d <= e`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NondecError {
    #[error("empty path")]
    Empty,
    #[error("path has odd length {0}")]
    OddLength(usize),
    #[error("path dips below the axis at step {0}")]
    BelowAxis(usize),
    #[error("path ends at altitude {0}, not 0")]
    EndsAbove(i64),
    #[error("valley at step {step} is lower than the previous valley")]
    DecreasingValley { step: usize },
    #[error("unexpected character {0:?} in step word")]
    BadStep(char),
    #[error("invalid mountain list: {0}")]
    Mountains(String),
    #[error("the single-mountain path (1,1) belongs to no class")]
    Unclassifiable,
    #[error("map {map} needs a path in class {expected}, got {got}")]
    WrongClass {
        map: &'static str,
        expected: &'static str,
        got: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn symbol(self) -> char {
        match self {
            Step::Up => '/',
            Step::Down => '\\',
        }
    }
}

/// A mountain `(d, e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Mountain {
    pub up: usize,
    pub down: usize,
}

impl Mountain {
    pub fn new(up: usize, down: usize) -> Self {
        Mountain { up, down }
    }
}

impl From<[usize; 2]> for Mountain {
    fn from([up, down]: [usize; 2]) -> Self {
        Mountain { up, down }
    }
}

impl From<Mountain> for [usize; 2] {
    fn from(m: Mountain) -> Self {
        [m.up, m.down]
    }
}

impl fmt::Display for Mountain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.up, self.down)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathClass {
    /// Last mountain has at least two up steps.
    A,
    /// Last mountain has one up step; the one before is symmetric.
    B,
    /// Last mountain has one up step; the one before climbs.
    C,
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathClass::A => "A",
            PathClass::B => "B",
            PathClass::C => "C",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathRecord", into = "PathRecord")]
pub struct NonDecreasingPath {
    mountains: Vec<Mountain>,
}

impl NonDecreasingPath {
    pub fn from_mountains(mountains: Vec<Mountain>) -> Result<Self, NondecError> {
        let bad = |msg: String| Err(NondecError::Mountains(msg));
        let Some((last, rest)) = mountains.split_last() else {
            return Err(NondecError::Empty);
        };
        for (i, m) in rest.iter().enumerate() {
            if m.down == 0 || m.up < m.down {
                return bad(format!("mountain {} is {m}, need d >= e >= 1", i + 1));
            }
        }
        if last.up == 0 || last.up > last.down {
            return bad(format!("last mountain is {last}, need 1 <= d <= e"));
        }
        let ups: usize = mountains.iter().map(|m| m.up).sum();
        let downs: usize = mountains.iter().map(|m| m.down).sum();
        if ups != downs {
            return bad(format!("{ups} up steps but {downs} down steps"));
        }
        Ok(NonDecreasingPath { mountains })
    }

    /// Parses and validates a step word.
    pub fn from_steps(steps: &[Step]) -> Result<Self, NondecError> {
        if steps.is_empty() {
            return Err(NondecError::Empty);
        }
        if steps.len() % 2 == 1 {
            return Err(NondecError::OddLength(steps.len()));
        }
        let mut altitude: i64 = 0;
        let mut last_valley: i64 = 0;
        let mut mountains = Vec::new();
        let mut i = 0;
        while i < steps.len() {
            let start = i;
            while i < steps.len() && steps[i] == Step::Up {
                i += 1;
            }
            let up = i - start;
            if up == 0 {
                // a down step right at the origin or after a descent to 0
                return Err(NondecError::BelowAxis(i));
            }
            let peak = i;
            while i < steps.len() && steps[i] == Step::Down {
                i += 1;
            }
            let down = i - peak;
            altitude += up as i64;
            for k in 0..down {
                altitude -= 1;
                if altitude < 0 {
                    return Err(NondecError::BelowAxis(peak + k));
                }
            }
            if i < steps.len() {
                if altitude < last_valley {
                    return Err(NondecError::DecreasingValley { step: i });
                }
                last_valley = altitude;
            }
            mountains.push(Mountain { up, down });
        }
        if altitude != 0 {
            return Err(NondecError::EndsAbove(altitude));
        }
        Self::from_mountains(mountains)
    }

    pub fn to_steps(&self) -> Vec<Step> {
        let mut steps = Vec::with_capacity(2 * self.half_length());
        for m in &self.mountains {
            steps.extend(std::iter::repeat(Step::Up).take(m.up));
            steps.extend(std::iter::repeat(Step::Down).take(m.down));
        }
        steps
    }

    pub fn mountains(&self) -> &[Mountain] {
        &self.mountains
    }

    pub fn last(&self) -> Mountain {
        *self.mountains.last().expect("paths are nonempty")
    }

    /// `n` for a path of length `2n`.
    pub fn half_length(&self) -> usize {
        self.mountains.iter().map(|m| m.up).sum()
    }

    /// Altitudes of the valleys, left to right.
    pub fn valley_altitudes(&self) -> Vec<usize> {
        let mut h = 0;
        let k = self.mountains.len();
        self.mountains[..k - 1]
            .iter()
            .map(|m| {
                h = h + m.up - m.down;
                h
            })
            .collect()
    }

    /// Altitudes of the peaks, left to right.
    pub fn peak_altitudes(&self) -> Vec<usize> {
        let mut h = 0;
        self.mountains
            .iter()
            .map(|m| {
                let peak = h + m.up;
                h = peak - m.down;
                peak
            })
            .collect()
    }

    pub fn classify(&self) -> Result<PathClass, NondecError> {
        let last = self.last();
        if last.up >= 2 {
            return Ok(PathClass::A);
        }
        let k = self.mountains.len();
        if k < 2 {
            return Err(NondecError::Unclassifiable);
        }
        let prev = self.mountains[k - 2];
        Ok(if prev.up == prev.down {
            PathClass::B
        } else {
            PathClass::C
        })
    }

    fn require(&self, map: &'static str, allowed: &[PathClass]) -> Result<(), NondecError> {
        let class = self.classify();
        if matches!(class, Ok(c) if allowed.contains(&c)) {
            return Ok(());
        }
        let expected = match allowed {
            [PathClass::A] => "A",
            [PathClass::B] => "B",
            [PathClass::C] => "C",
            _ => "B or C",
        };
        let got = match class {
            Ok(c) => c.to_string(),
            Err(_) => "none".to_string(),
        };
        Err(NondecError::WrongClass { map, expected, got })
    }

    fn with_mountains(mountains: Vec<Mountain>) -> Self {
        debug_assert!(NonDecreasingPath::from_mountains(mountains.clone()).is_ok());
        NonDecreasingPath { mountains }
    }

    /// `A_n -> S_{n-1}`: shrink the last mountain.
    pub fn map_a(&self) -> Result<Self, NondecError> {
        self.require("A", &[PathClass::A])?;
        let mut ms = self.mountains.clone();
        let last = ms.last_mut().expect("nonempty");
        last.up -= 1;
        last.down -= 1;
        Ok(Self::with_mountains(ms))
    }

    /// `S_{n-1} -> A_n`
    pub fn map_a_inv(&self) -> Self {
        let mut ms = self.mountains.clone();
        let last = ms.last_mut().expect("nonempty");
        last.up += 1;
        last.down += 1;
        Self::with_mountains(ms)
    }

    /// `B_n -> S_{n-1}`: `(d, d), (1, e)` becomes `(d, d + e - 1)`.
    pub fn map_b(&self) -> Result<Self, NondecError> {
        self.require("B", &[PathClass::B])?;
        let mut ms = self.mountains.clone();
        let last = ms.pop().expect("two mountains");
        let prev = ms.last_mut().expect("two mountains");
        prev.down = prev.up + last.down - 1;
        Ok(Self::with_mountains(ms))
    }

    /// `S_{n-1} -> B_n`: `(d, e)` becomes `(d, d), (1, e - d + 1)`.
    pub fn map_b_inv(&self) -> Self {
        let mut ms = self.mountains.clone();
        let last = ms.last_mut().expect("nonempty");
        let tail = Mountain::new(1, last.down - last.up + 1);
        last.down = last.up;
        ms.push(tail);
        Self::with_mountains(ms)
    }

    /// `C_n -> B_{n-1} ⊔ C_{n-1}`: `(d, e), (1, f)` becomes `(d - 1, e), (1, f - 1)`.
    pub fn map_c(&self) -> Result<Self, NondecError> {
        self.require("C", &[PathClass::C])?;
        let mut ms = self.mountains.clone();
        let k = ms.len();
        ms[k - 2].up -= 1;
        ms[k - 1].down -= 1;
        Ok(Self::with_mountains(ms))
    }

    /// `B_{n-1} ⊔ C_{n-1} -> C_n`
    pub fn map_c_inv(&self) -> Result<Self, NondecError> {
        self.require("C inverse", &[PathClass::B, PathClass::C])?;
        let mut ms = self.mountains.clone();
        let k = ms.len();
        ms[k - 2].up += 1;
        ms[k - 1].down += 1;
        Ok(Self::with_mountains(ms))
    }
}

impl fmt::Display for NonDecreasingPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.to_steps() {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for NonDecreasingPath {
    type Err = NondecError;

    /// Accepts `/ u U ↗` for up and `\ d D ↘` for down; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '/' | 'u' | 'U' | '↗' => Ok(Step::Up),
                '\\' | 'd' | 'D' | '↘' => Ok(Step::Down),
                other => Err(NondecError::BadStep(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_steps(&steps)
    }
}

/// Wire form `{"mountains": [[d, e], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathRecord {
    pub mountains: Vec<Mountain>,
}

impl From<NonDecreasingPath> for PathRecord {
    fn from(p: NonDecreasingPath) -> Self {
        PathRecord {
            mountains: p.mountains,
        }
    }
}

impl TryFrom<PathRecord> for NonDecreasingPath {
    type Error = NondecError;

    fn try_from(r: PathRecord) -> Result<Self, Self::Error> {
        NonDecreasingPath::from_mountains(r.mountains)
    }
}

/// All nondecreasing Dyck paths of length `2n`, built mountain by mountain.
///
/// Order: at each valley the finishing mountain comes first, then the
/// climbing mountains by increasing `d` and, within that, increasing `e`.
pub fn enumerate(n: usize) -> Vec<NonDecreasingPath> {
    fn walk(height: usize, remaining: usize, current: &mut Vec<Mountain>, out: &mut Vec<NonDecreasingPath>) {
        current.push(Mountain::new(remaining, height + remaining));
        out.push(NonDecreasingPath {
            mountains: current.clone(),
        });
        current.pop();
        for up in 1..remaining {
            for down in 1..=up {
                current.push(Mountain::new(up, down));
                walk(height + up - down, remaining - up, current, out);
                current.pop();
            }
        }
    }

    let mut out = Vec::new();
    if n > 0 {
        walk(0, n, &mut Vec::new(), &mut out);
    }
    out
}
