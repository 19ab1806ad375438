//! Polarizations of a Frobenius pair and the binary markings that produce
//! them.
//!
//! For `(alpha | beta)` of rank `r` the signed word has `2r` letters: the arms
//! `alpha_1, ..., alpha_r` followed by the shifted legs `beta_1 + 1, ...,
//! beta_r + 1`. A marking `j` in `[0, 4^r)` attaches a sign to each letter:
//! reading `j` as a `2r`-digit binary number, most significant digit first,
//! a `0` digit is `+` and a `1` digit is `-`.
//!
//! Sorting the letters into `(+ group descending, - group descending)` gives a
//! polarization `(mu_plus, mu_minus)`. Two letters with the same value and
//! the same sign make the marking vanish.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{shift_up, supplement, FrobeniusCoords, StrictPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i32) -> Sign {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A binary marking `j` of a rank-`r` word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MarkingIndex {
    pub j: u64,
    pub rank: usize,
}

impl MarkingIndex {
    pub fn new(j: u64, rank: usize) -> Result<Self> {
        if rank >= 32 || j >= Self::count(rank) {
            return Err(Error::MarkingOutOfRange { j, rank });
        }
        Ok(MarkingIndex { j, rank })
    }

    /// `4^r`, the number of markings of rank `r`.
    pub fn count(rank: usize) -> u64 {
        1u64 << (2 * rank)
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let j = signs
            .iter()
            .fold(0u64, |acc, s| (acc << 1) | u64::from(*s == Sign::Minus));
        MarkingIndex { j, rank: signs.len() / 2 }
    }

    /// Sign of letter `k` (0-based).
    pub fn sign_at(&self, k: usize) -> Sign {
        let bit = (self.j >> (2 * self.rank - 1 - k)) & 1;
        if bit == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..2 * self.rank).map(|k| self.sign_at(k)).collect()
    }

    /// The signs as a string such as `++-+`.
    pub fn sign_string(&self) -> String {
        self.signs().iter().map(Sign::to_string).collect()
    }
}

impl fmt::Display for MarkingIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polarization {
    pub mu_plus: StrictPartition,
    pub mu_minus: StrictPartition,
    pub sgn: i32,
    /// `#(alpha ∩ mu_minus)`.
    pub pi: usize,
    /// `#(I(beta) ∩ mu_minus)`.
    pub pi_tilde: usize,
    pub m_plus: usize,
    pub m_minus: usize,
    pub hat_mu_plus: StrictPartition,
    pub hat_mu_minus: StrictPartition,
    /// `m_minus` rounded up to the next even number.
    ///
    /// This is the cardinality of `mu_minus` after a zero part is appended,
    /// and it is what enters the sign of the expansion. When `mu_minus` has
    /// odd length and already ends in `0`, the Q-function argument
    /// `hat_mu_minus` drops that zero instead, so `hat_m_minus` is then two
    /// more than `hat_mu_minus.len()`.
    pub hat_m_minus: usize,
    pub canonical_j: MarkingIndex,
}

/// The outcome of reading one marking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Marking {
    Vanishing,
    Nonzero {
        polarization: Polarization,
        /// `(-1)^(number of alpha_m in S carrying -)`.
        sigma: i32,
        /// Sign of the sort taking this marking's word to its polarization.
        word_sign: i32,
    },
}

/// `S = alpha ∩ I(beta)` and `T = alpha ∪ I(beta)`.
pub fn s_and_t(fc: &FrobeniusCoords) -> (StrictPartition, StrictPartition) {
    let ib = shift_up(&fc.beta);
    (fc.alpha.intersection(&ib), fc.alpha.union(&ib))
}

/// The `2r` letter values: arms, then legs shifted up by one.
pub fn word_letters(fc: &FrobeniusCoords) -> Vec<u32> {
    fc.alpha
        .parts()
        .iter()
        .copied()
        .chain(fc.beta.parts().iter().map(|b| b + 1))
        .collect()
}

fn check_rank(fc: &FrobeniusCoords, j: MarkingIndex) -> Result<()> {
    if j.rank != fc.rank() || j.j >= MarkingIndex::count(fc.rank()) {
        return Err(Error::MarkingOutOfRange { j: j.j, rank: fc.rank() });
    }
    Ok(())
}

fn vanishes(letters: &[u32], signs: &[Sign]) -> bool {
    (0..letters.len()).any(|a| {
        (a + 1..letters.len()).any(|b| letters[a] == letters[b] && signs[a] == signs[b])
    })
}

/// Parity of the sort taking the signed word to `(+ descending, - descending)`,
/// all letters treated as anticommuting. `None` if the marking vanishes.
pub fn word_sign(fc: &FrobeniusCoords, j: MarkingIndex) -> Result<Option<i32>> {
    check_rank(fc, j)?;
    let letters = word_letters(fc);
    let signs = j.signs();
    if vanishes(&letters, &signs) {
        return Ok(None);
    }
    let keys: Vec<(Sign, std::cmp::Reverse<u32>)> = letters
        .iter()
        .zip(&signs)
        .map(|(&v, &s)| (s, std::cmp::Reverse(v)))
        .collect();
    let inversions = (0..keys.len())
        .flat_map(|a| (a + 1..keys.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| keys[a] > keys[b])
        .count();
    Ok(Some(if inversions % 2 == 0 { 1 } else { -1 }))
}

/// `true` if every `alpha_m` in `S` carries `+`.
pub fn is_canonical(fc: &FrobeniusCoords, j: MarkingIndex) -> bool {
    let (s, _) = s_and_t(fc);
    fc.alpha
        .parts()
        .iter()
        .enumerate()
        .all(|(k, a)| !s.contains(*a) || j.sign_at(k) == Sign::Plus)
}

/// Sign of the polarization with canonical representative `j0`.
pub fn polarization_sign(fc: &FrobeniusCoords, j0: MarkingIndex) -> Result<i32> {
    check_rank(fc, j0)?;
    if !is_canonical(fc, j0) {
        return Err(Error::NotCanonical(j0.j));
    }
    word_sign(fc, j0)?.ok_or(Error::VanishingMarking(j0.j))
}

fn polarization_from_canonical(fc: &FrobeniusCoords, j0: MarkingIndex) -> Result<Polarization> {
    let letters = word_letters(fc);
    let signs = j0.signs();
    let side = |want: Sign| {
        let mut parts: Vec<u32> = letters
            .iter()
            .zip(&signs)
            .filter(|(_, &s)| s == want)
            .map(|(&v, _)| v)
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        StrictPartition::from_sorted(parts)
    };
    let mu_plus = side(Sign::Plus);
    let mu_minus = side(Sign::Minus);
    let sgn = polarization_sign(fc, j0)?;
    let ib = shift_up(&fc.beta);
    let m_minus = mu_minus.len();
    Ok(Polarization {
        pi: fc.alpha.intersection(&mu_minus).len(),
        pi_tilde: ib.intersection(&mu_minus).len(),
        m_plus: mu_plus.len(),
        m_minus,
        hat_mu_plus: supplement(&mu_plus),
        hat_mu_minus: supplement(&mu_minus),
        hat_m_minus: m_minus + m_minus % 2,
        mu_plus,
        mu_minus,
        sgn,
        canonical_j: j0,
    })
}

/// Reads marking `j`: either it vanishes, or it yields a polarization
/// together with `sigma(j)` and its own word sign.
pub fn binary_marking(fc: &FrobeniusCoords, j: MarkingIndex) -> Result<Marking> {
    check_rank(fc, j)?;
    let Some(ws) = word_sign(fc, j)? else {
        return Ok(Marking::Vanishing);
    };
    let (s, _) = s_and_t(fc);
    let r = fc.rank();
    let mut signs = j.signs();
    let mut flips = 0;
    for (k, a) in fc.alpha.parts().iter().enumerate() {
        if s.contains(*a) && signs[k] == Sign::Minus {
            let partner = r + fc.beta.parts().iter().position(|b| b + 1 == *a).expect("a ∈ I(beta)");
            signs[k] = Sign::Plus;
            signs[partner] = Sign::Minus;
            flips += 1;
        }
    }
    let j0 = MarkingIndex::from_signs(&signs);
    Ok(Marking::Nonzero {
        polarization: polarization_from_canonical(fc, j0)?,
        sigma: if flips % 2 == 0 { 1 } else { -1 },
        word_sign: ws,
    })
}

/// One polarization per assignment of the letters of `T \ S` to a side,
/// in ascending order of canonical representative.
pub fn enumerate_polarizations(fc: &FrobeniusCoords) -> Vec<Polarization> {
    let (s, _) = s_and_t(fc);
    let r = fc.rank();
    let letters = word_letters(fc);
    // positions whose sign is fixed by the S convention, and the free ones
    let mut base = vec![Sign::Plus; 2 * r];
    let mut free = Vec::new();
    for (k, &v) in letters.iter().enumerate() {
        if s.contains(v) {
            if k >= r {
                base[k] = Sign::Minus;
            }
        } else {
            free.push(k);
        }
    }
    let mut out: Vec<Polarization> = (0u64..(1u64 << free.len()))
        .map(|mask| {
            let mut signs = base.clone();
            for (bit, &k) in free.iter().enumerate() {
                if (mask >> bit) & 1 == 1 {
                    signs[k] = Sign::Minus;
                }
            }
            let j0 = MarkingIndex::from_signs(&signs);
            polarization_from_canonical(fc, j0).expect("canonical and nonvanishing by construction")
        })
        .collect();
    out.sort_by_key(|p| p.canonical_j.j);
    out
}

/// Every marking of `fc`, grouped by the polarization it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkingScan {
    /// Canonical `j0` to the list of `(j, sigma(j), word_sign(j))` in its class.
    pub classes: BTreeMap<u64, Vec<(u64, i32, i32)>>,
    pub polarizations: Vec<Polarization>,
    pub vanishing: Vec<u64>,
}

/// Reads all `4^r` markings. The polarizations it finds agree with
/// [`enumerate_polarizations`], which is much cheaper.
pub fn scan_markings(fc: &FrobeniusCoords) -> MarkingScan {
    let r = fc.rank();
    let mut classes: BTreeMap<u64, Vec<(u64, i32, i32)>> = BTreeMap::new();
    let mut pols: BTreeMap<u64, Polarization> = BTreeMap::new();
    let mut vanishing = Vec::new();
    for j in 0..MarkingIndex::count(r) {
        let idx = MarkingIndex { j, rank: r };
        match binary_marking(fc, idx).expect("index in range") {
            Marking::Vanishing => vanishing.push(j),
            Marking::Nonzero { polarization, sigma, word_sign } => {
                let j0 = polarization.canonical_j.j;
                classes.entry(j0).or_default().push((j, sigma, word_sign));
                pols.entry(j0).or_insert(polarization);
            }
        }
    }
    MarkingScan {
        classes,
        polarizations: pols.into_values().collect(),
        vanishing,
    }
}

fn join(items: impl IntoIterator<Item = String>, sep: &str) -> String {
    items.into_iter().collect::<Vec<_>>().join(sep)
}

/// A plain-text table of the polarizations of `fc`, with every marking class
/// and the vanishing markings.
pub fn render_table(fc: &FrobeniusCoords) -> String {
    let (s, t) = s_and_t(fc);
    let scan = scan_markings(fc);
    let mut rows = vec![[
        "j0".to_string(),
        "eps".to_string(),
        "mu+".to_string(),
        "mu-".to_string(),
        "sgn".to_string(),
        "pi".to_string(),
        "m^-".to_string(),
        "class".to_string(),
    ]];
    for p in &scan.polarizations {
        let class = &scan.classes[&p.canonical_j.j];
        rows.push([
            p.canonical_j.to_string(),
            p.canonical_j.sign_string(),
            p.mu_plus.to_string(),
            p.mu_minus.to_string(),
            Sign::from_value(p.sgn).to_string(),
            p.pi.to_string(),
            p.hat_m_minus.to_string(),
            join(class.iter().map(|(j, sigma, _)| format!("{j}:{}", Sign::from_value(*sigma))), " "),
        ]);
    }
    let widths: Vec<usize> = (0..8).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
    let mut out = format!(
        "({fc}) r={} s={} S={s} T={t} polarizations={}\n",
        fc.rank(),
        s.len(),
        scan.polarizations.len()
    );
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| if c == 7 { cell.clone() } else { format!("{cell:<w$}", w = widths[c]) })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    let vanishing = if scan.vanishing.is_empty() {
        "-".to_string()
    } else {
        join(scan.vanishing.iter().map(u64::to_string), ",")
    };
    out.push_str(&format!("vanishing: {vanishing}\n"));
    out
}
