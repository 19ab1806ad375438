//! Basis states `|lambda; n>` of the fermionic Fock space and finite linear
//! combinations of them.
//!
//! The state `|lambda; n>` has occupied positions `l_i = lambda_i - i + n`,
//! `i = 1, 2, ...`, so that beyond `len(lambda)` every position below is
//! filled. The vacuum of charge `n` is `|(); n>`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::gaussian::GaussianPoly;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MayaState {
    pub charge: i64,
    pub lambda: Partition,
}

/// Occupied positions explicitly listed above `floor`; every position at or
/// below `floor` is occupied.
struct Positions {
    above: Vec<i64>,
    floor: i64,
}

impl Positions {
    fn to_state(&self) -> MayaState {
        let k = self.above.len() as i64;
        let charge = self.floor + 1 + k;
        let parts = self
            .above
            .iter()
            .enumerate()
            .map(|(i, &l)| (l + i as i64 + 1 - charge) as u32)
            .collect();
        MayaState { charge, lambda: Partition::new(parts) }
    }

    fn occupied(&self, j: i64) -> bool {
        j <= self.floor || self.above.contains(&j)
    }

    /// Number of occupied positions strictly above `j`.
    fn count_above(&self, j: i64) -> usize {
        let listed = self.above.iter().filter(|&&l| l > j).count();
        listed + if j < self.floor { (self.floor - j) as usize } else { 0 }
    }
}

impl MayaState {
    pub fn vacuum(charge: i64) -> Self {
        MayaState { charge, lambda: Partition::empty() }
    }

    /// The occupied positions `l_1 > l_2 > ...` down to the point where the
    /// vacuum pattern resumes.
    pub fn positions(&self) -> Vec<i64> {
        self.raw().above
    }

    fn raw(&self) -> Positions {
        let parts = self.lambda.parts();
        let k = parts.len() as i64;
        let above = parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 - i as i64 - 1 + self.charge)
            .collect();
        Positions { above, floor: self.charge - k - 1 }
    }

    /// Highest occupied position.
    pub fn top(&self) -> i64 {
        let r = self.raw();
        r.above.first().copied().unwrap_or(r.floor)
    }

    /// Highest position of the filled sea below the listed ones.
    pub fn floor(&self) -> i64 {
        self.raw().floor
    }

    pub fn is_occupied(&self, j: i64) -> bool {
        self.raw().occupied(j)
    }

    /// `psi_j`: insert position `j`, with sign `(-1)^(occupied above j)`.
    pub fn create(&self, j: i64) -> Option<(i32, MayaState)> {
        let raw = self.raw();
        if raw.occupied(j) {
            return None;
        }
        let sign = if raw.count_above(j).is_multiple_of(2) { 1 } else { -1 };
        let mut above = raw.above;
        above.push(j);
        above.sort_unstable_by(|a, b| b.cmp(a));
        Some((sign, Positions { above, floor: raw.floor }.to_state()))
    }

    /// `psi^dag_j`: remove position `j`, with sign `(-1)^(occupied above j)`.
    pub fn annihilate(&self, j: i64) -> Option<(i32, MayaState)> {
        let raw = self.raw();
        if !raw.occupied(j) {
            return None;
        }
        let sign = if raw.count_above(j).is_multiple_of(2) { 1 } else { -1 };
        let (mut above, floor) = (raw.above, raw.floor);
        let floor = if j <= floor {
            above.extend((j + 1..=floor).rev());
            j - 1
        } else {
            above.retain(|&l| l != j);
            floor
        };
        Some((sign, Positions { above, floor }.to_state()))
    }
}

impl fmt::Display for MayaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{};{}>", self.lambda, self.charge)
    }
}

/// A finite combination `2^(sqrt2 / 2) * sum c_s |s>`.
///
/// The global power of `sqrt 2` keeps every coefficient a Gaussian rational
/// even though neutral fermions carry a `1/sqrt 2`.
#[derive(Clone, Debug, Default)]
pub struct FockVector {
    terms: BTreeMap<MayaState, GaussianPoly>,
    pub sqrt2: i32,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(state: MayaState) -> Self {
        Self::from_terms([(state, GaussianPoly::one())], 0)
    }

    pub fn vacuum() -> Self {
        Self::basis(MayaState::vacuum(0))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (MayaState, GaussianPoly)>, sqrt2: i32) -> Self {
        let mut v = FockVector { terms: BTreeMap::new(), sqrt2 };
        for (s, c) in terms {
            v.add_term(s, c);
        }
        v
    }

    pub(crate) fn add_term(&mut self, s: MayaState, c: GaussianPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MayaState, &GaussianPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &MayaState) -> GaussianPoly {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &GaussianPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(s, x)| (s.clone(), x * c)), self.sqrt2)
    }

    /// The same vector with its `sqrt 2` exponent lowered to `e` by folding
    /// whole factors of 2 into the coefficients. `None` when `e` exceeds the
    /// current exponent or has the wrong parity.
    pub fn with_sqrt2(&self, e: i32) -> Option<Self> {
        if self.is_zero() {
            return Some(FockVector { terms: BTreeMap::new(), sqrt2: e });
        }
        let d = self.sqrt2 - e;
        if d < 0 || d % 2 != 0 {
            return None;
        }
        let f = Rational::from_integer(num_bigint::BigInt::from(1) << (d / 2) as usize);
        let terms = self.terms.iter().map(|(s, x)| (s.clone(), x.scale(&f)));
        Some(Self::from_terms(terms, e))
    }

    /// Sum of two vectors whose `sqrt 2` exponents have the same parity.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let e = self.sqrt2.min(other.sqrt2);
        let (Some(a), Some(b)) = (self.with_sqrt2(e), other.with_sqrt2(e)) else {
            return Err(Error::OddSqrtTwo);
        };
        let mut out = a;
        for (s, c) in b.terms {
            out.add_term(s, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-GaussianPoly::one()))
    }

    /// Equality of the represented vectors, whatever their exponents.
    pub fn same_vector(&self, other: &Self) -> bool {
        self.try_sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }

    pub fn truncate(&self, w: u32) -> Self {
        Self::from_terms(self.terms.iter().map(|(s, x)| (s.clone(), x.truncate(w))), self.sqrt2)
    }

    /// Coefficient on `s` with the `sqrt 2` factor applied. Errors when the
    /// coefficient is nonzero and the exponent is odd.
    pub fn exact_coefficient(&self, s: &MayaState) -> Result<GaussianPoly> {
        let c = self.coefficient(s);
        if c.is_zero() {
            return Ok(c);
        }
        if self.sqrt2 % 2 != 0 {
            return Err(Error::OddSqrtTwo);
        }
        Ok(c.scale(&pow2(self.sqrt2 / 2)))
    }
}

/// `2^k` as a rational, `k` of either sign.
pub fn pow2(k: i32) -> Rational {
    let base = if k >= 0 { int(2) } else { Rational::one() / int(2) };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

impl PartialEq for FockVector {
    fn eq(&self, other: &Self) -> bool {
        self.same_vector(other)
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.sqrt2 != 0 {
            write!(f, "2^({}/2) * (", self.sqrt2)?;
        }
        for (k, (s, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){s}")?;
        }
        if self.sqrt2 != 0 {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Every `|lambda; charge>` with `|lambda| <= max_weight`.
pub fn basis_states(charge: i64, max_weight: u32) -> Vec<MayaState> {
    (0..=max_weight)
        .flat_map(crate::partitions::partitions_of)
        .map(|lambda| MayaState { charge, lambda })
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::GradedPoly;

    fn real(c: Rational) -> GaussianPoly {
        GaussianPoly::real(GradedPoly::constant(c))
    }

    fn st(charge: i64, parts: &[u32]) -> MayaState {
        MayaState { charge, lambda: Partition::new(parts.to_vec()) }
    }

    #[test]
    fn positions_and_round_trip() {
        assert_eq!(st(0, &[]).positions(), Vec::<i64>::new());
        assert_eq!(st(0, &[2, 1]).positions(), vec![1, -1]);
        assert_eq!(st(0, &[]).top(), -1);
        assert_eq!(st(2, &[]).top(), 1);
    }

    #[test]
    fn create_examples() {
        let vac = MayaState::vacuum(0);
        assert_eq!(vac.create(-1), None);
        assert_eq!(vac.create(0), Some((1, MayaState::vacuum(1))));
        let (s, one) = vac.create(0).unwrap();
        assert_eq!(s, 1);
        assert_eq!(one.create(1), Some((1, MayaState::vacuum(2))));
        // psi_2 |0> = |(2);1>
        assert_eq!(vac.create(2), Some((1, st(1, &[2]))));
    }

    #[test]
    fn annihilate_examples() {
        let vac = MayaState::vacuum(0);
        assert_eq!(vac.annihilate(0), None);
        assert_eq!(vac.annihilate(-1), Some((1, MayaState::vacuum(-1))));
        // removing -2 passes the occupied -1
        assert_eq!(vac.annihilate(-2), Some((-1, st(-1, &[1]))));
    }

    #[test]
    fn canonical_anticommutator_on_basis() {
        for s in basis_states(0, 4).into_iter().chain(basis_states(1, 3)) {
            for j in -5..=5 {
                let mut total = FockVector::zero();
                if let Some((a, t)) = s.annihilate(j) {
                    if let Some((b, u)) = t.create(j) {
                        total.add_term(u, real(int((a * b) as i64)));
                    }
                }
                if let Some((a, t)) = s.create(j) {
                    if let Some((b, u)) = t.annihilate(j) {
                        total.add_term(u, real(int((a * b) as i64)));
                    }
                }
                assert_eq!(total, FockVector::basis(s.clone()), "{s} j={j}");
            }
        }
    }

    #[test]
    fn sqrt2_bookkeeping() {
        let v = FockVector::from_terms([(MayaState::vacuum(0), GaussianPoly::one())], 2);
        let w = FockVector::from_terms([(MayaState::vacuum(0), real(int(2)))], 0);
        assert_eq!(v, w);
        let odd = FockVector::from_terms([(MayaState::vacuum(0), GaussianPoly::one())], 1);
        assert!(odd.try_add(&w).is_err());
        assert_eq!(odd.exact_coefficient(&MayaState::vacuum(0)), Err(Error::OddSqrtTwo));
        assert_eq!(pow2(-2), Rational::new(1.into(), 4.into()));
    }
}
