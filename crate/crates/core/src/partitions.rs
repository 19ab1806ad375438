//! Integer partitions, strict partitions and Frobenius coordinates.
//!
//! Text forms: parts separated by commas (`3,2`), Frobenius pairs as
//! `2,0|1,0`. The empty partition is written `-`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. Zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

/// A strictly decreasing sequence of non-negative parts. A single `0` may
/// appear, always last, so `(j, 0)` and `(j)` are different values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrictPartition(Vec<u32>);

/// Frobenius coordinates `(alpha | beta)`: arm and leg lengths along the
/// main diagonal, both strict and of the same length `r`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub alpha: StrictPartition,
    pub beta: StrictPartition,
}

impl Partition {
    /// Sorts descending and drops zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), with the implicit trailing zeros.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let cols = (0..width)
            .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition(cols)
    }

    /// Number of diagonal cells.
    pub fn frobenius_rank(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count()
    }
}

impl StrictPartition {
    /// Sorts descending; repeated parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = parts.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotStrict(w[0]));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    /// Builds from an already strictly decreasing vector.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        StrictPartition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn contains(&self, part: u32) -> bool {
        self.0.binary_search_by(|p| part.cmp(p)).is_ok()
    }

    pub fn to_set(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }

    pub fn from_set(set: &BTreeSet<u32>) -> Self {
        StrictPartition(set.iter().rev().copied().collect())
    }

    pub fn intersection(&self, other: &StrictPartition) -> StrictPartition {
        StrictPartition(self.0.iter().copied().filter(|&p| other.contains(p)).collect())
    }

    pub fn union(&self, other: &StrictPartition) -> StrictPartition {
        let set: BTreeSet<u32> = self.0.iter().chain(other.0.iter()).copied().collect();
        Self::from_set(&set)
    }
}

impl FrobeniusCoords {
    pub fn new(alpha: StrictPartition, beta: StrictPartition) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::FrobeniusLength {
                alpha: alpha.len(),
                beta: beta.len(),
            });
        }
        Ok(FrobeniusCoords { alpha, beta })
    }

    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    pub fn weight(&self) -> u32 {
        self.alpha.weight() + self.beta.weight() + self.rank() as u32
    }
}

pub fn frobenius_from_partition(lambda: &Partition) -> FrobeniusCoords {
    let r = lambda.frobenius_rank();
    let conj = lambda.conjugate();
    let alpha = (0..r).map(|i| lambda.part(i) - i as u32 - 1).collect();
    let beta = (0..r).map(|i| conj.part(i) - i as u32 - 1).collect();
    FrobeniusCoords {
        alpha: StrictPartition::from_sorted(alpha),
        beta: StrictPartition::from_sorted(beta),
    }
}

pub fn partition_from_frobenius(fc: &FrobeniusCoords) -> Partition {
    let r = fc.rank();
    let alpha = fc.alpha.parts();
    let beta = fc.beta.parts();
    let mut parts: Vec<u32> = (0..r).map(|i| alpha[i] + i as u32 + 1).collect();
    // rows below the diagonal: cell (i, c) exists iff beta_c + c >= i (1-based)
    let depth = beta.iter().enumerate().map(|(c, &b)| b as usize + c + 1).max().unwrap_or(0);
    for i in (r + 1)..=depth {
        let len = beta
            .iter()
            .enumerate()
            .filter(|(c, &b)| b as usize + c + 1 >= i)
            .count();
        parts.push(len as u32);
    }
    Partition::new(parts)
}

/// `I(alpha)`: every part shifted up by one.
pub fn shift_up(alpha: &StrictPartition) -> StrictPartition {
    StrictPartition(alpha.0.iter().map(|p| p + 1).collect())
}

/// The double `D(I)`, with Frobenius coordinates `(I | I - 1)`.
pub fn double_of(i: &StrictPartition) -> Result<Partition> {
    if i.0.last() == Some(&0) {
        return Err(Error::ZeroPartInDouble);
    }
    let beta = StrictPartition(i.0.iter().map(|p| p - 1).collect());
    Ok(partition_from_frobenius(&FrobeniusCoords {
        alpha: i.clone(),
        beta,
    }))
}

/// Completes `mu` to even cardinality.
///
/// Odd cardinality with a positive last part gets a `0` appended. Odd
/// cardinality ending in `0` has that `0` removed instead: the pair
/// `(0, 0)` contributes `(phi_0)^2 = 1/2`, which exactly cancels the extra
/// `sqrt 2` normalisation, so it collapses with factor one.
pub fn supplement(mu: &StrictPartition) -> StrictPartition {
    let mut parts = mu.0.clone();
    if parts.len() % 2 == 1 {
        if parts.last() == Some(&0) {
            parts.pop();
        } else {
            parts.push(0);
        }
    }
    StrictPartition(parts)
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All strict partitions of weight `n`; with `allow_zero`, each one that has
/// no zero part also appears with a trailing `0`.
pub fn strict_partitions_of(n: u32, allow_zero: bool) -> Vec<StrictPartition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n, n, &mut Vec::new(), &mut raw);
    let mut out = Vec::new();
    for parts in raw {
        if allow_zero {
            let mut z = parts.clone();
            z.push(0);
            out.push(StrictPartition(parts));
            out.push(StrictPartition(z));
        } else {
            out.push(StrictPartition(parts));
        }
    }
    out
}

fn fmt_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("-");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidPartition(format!("bad part {:?} in {s:?}", tok.trim())))
        })
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.alpha, self.beta)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {s:?}")));
        }
        Ok(Partition::new(parts))
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl FromStr for FrobeniusCoords {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(FrobeniusCoords::default());
        }
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::InvalidPartition(format!("missing '|' in {s:?}")))?;
        FrobeniusCoords::new(a.parse()?, b.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn frobenius_examples() {
        let empty = frobenius_from_partition(&Partition::empty());
        assert_eq!(empty.rank(), 0);
        assert_eq!(empty.to_string(), "-|-");

        let fc = frobenius_from_partition(&p(&[3, 2]));
        assert_eq!((fc.alpha.parts(), fc.beta.parts()), (&[2, 0][..], &[1, 0][..]));

        let fc = frobenius_from_partition(&p(&[3, 3]));
        assert_eq!((fc.alpha.parts(), fc.beta.parts()), (&[2, 1][..], &[1, 0][..]));
    }

    #[test]
    fn partition_from_frobenius_examples() {
        assert_eq!(partition_from_frobenius(&FrobeniusCoords::default()), Partition::empty());
        assert_eq!(partition_from_frobenius(&"2,0|1,0".parse().unwrap()), p(&[3, 2]));
        assert_eq!(partition_from_frobenius(&"2,1|1,0".parse().unwrap()), p(&[3, 3]));
        assert_eq!(partition_from_frobenius(&"0|3".parse().unwrap()), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn round_trip_up_to_14() {
        for n in 0..=14 {
            for lam in partitions_of(n) {
                let fc = frobenius_from_partition(&lam);
                assert_eq!(fc.weight(), n);
                assert_eq!(partition_from_frobenius(&fc), lam);
                let diag = lam.parts().iter().enumerate().filter(|(i, &x)| x as usize > *i).count();
                assert_eq!(fc.rank(), diag);
            }
        }
    }

    #[test]
    fn shift_up_examples() {
        assert_eq!(shift_up(&StrictPartition::empty()), StrictPartition::empty());
        assert_eq!(shift_up(&sp(&[1, 0])), sp(&[2, 1]));
        assert_eq!(shift_up(&sp(&[2, 0])), sp(&[3, 1]));
    }

    #[test]
    fn doubles() {
        assert_eq!(double_of(&sp(&[1])).unwrap(), p(&[2]));
        assert_eq!(double_of(&sp(&[2, 1])).unwrap(), p(&[3, 3]));
        // (3,1|2,0): rows 4,3 then column legs give 1,1
        assert_eq!(double_of(&sp(&[3, 1])).unwrap(), p(&[4, 3, 1]));
        assert_eq!(double_of(&sp(&[1, 0])), Err(Error::ZeroPartInDouble));
        for n in 1..=10 {
            for i in strict_partitions_of(n, false) {
                let d = double_of(&i).unwrap();
                let fc = frobenius_from_partition(&d);
                assert_eq!(fc.alpha, i);
                assert_eq!(shift_up(&fc.beta), i);
            }
        }
    }

    #[test]
    fn supplement_cases() {
        assert_eq!(supplement(&sp(&[2, 1])), sp(&[2, 1]));
        assert_eq!(supplement(&sp(&[3])), sp(&[3, 0]));
        assert_eq!(supplement(&sp(&[0])), StrictPartition::empty());
        assert_eq!(supplement(&sp(&[4, 2, 0])), sp(&[4, 2]));
        assert_eq!(supplement(&StrictPartition::empty()), StrictPartition::empty());
    }

    #[test]
    fn constructors_and_text() {
        assert_eq!(Partition::new(vec![1, 3, 0, 2]), p(&[3, 2, 1]));
        assert_eq!(StrictPartition::new(vec![1, 1]), Err(Error::NotStrict(1)));
        assert_eq!("3,2".parse::<Partition>().unwrap(), p(&[3, 2]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert_eq!("2,0".parse::<StrictPartition>().unwrap().parts(), &[2, 0]);
        assert!("2,0,0".parse::<StrictPartition>().is_err());
        assert!("2,1|0".parse::<FrobeniusCoords>().is_err());
        assert_eq!(p(&[3, 2]).to_string(), "3,2");
        assert_eq!("-|-".parse::<FrobeniusCoords>().unwrap().rank(), 0);
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let strict: Vec<usize> = (1..=8).map(|n| strict_partitions_of(n, false).len()).collect();
        assert_eq!(strict, vec![1, 1, 2, 2, 3, 4, 5, 6]);
    }
}
