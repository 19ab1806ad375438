//! Schur functions and Schur Q-functions as polynomials in the flow
//! variables.
//!
//! `h_k` is the degree-`k` coefficient of `exp(sum_i t_i z^i)` and `q_k` that
//! of `exp(2 sum_{i odd} t_i z^i)`. Setting `z = 1` and grading by weight,
//! both are homogeneous components of a single truncated exponential, which
//! is how [`SymSeries`] computes them.

pub mod cache;
pub mod matrix;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partitions::{supplement, FrobeniusCoords, Partition, StrictPartition};
use crate::polyring::{int, rat, GradedPoly};

pub use matrix::{determinant, pfaffian, PolyMatrix, RingElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesKind {
    /// Complete symmetric functions `h_k`.
    CompleteH,
    /// The `q_k` of the Schur Q-functions.
    NeutralQ,
}

/// Coefficients `0..=W` of one of the two generating series, truncated at
/// weight `W`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymSeries {
    pub kind: SeriesKind,
    pub weight: u32,
    pub coefficients: Vec<GradedPoly>,
}

impl SymSeries {
    pub fn compute(kind: SeriesKind, weight: u32) -> Self {
        let w = Some(weight);
        let exponent = (1..=weight as usize)
            .filter(|i| kind == SeriesKind::CompleteH || i % 2 == 1)
            .fold(GradedPoly::zero().with_cutoff(w), |acc, i| &acc + &GradedPoly::var(i, w));
        let exponent = match kind {
            SeriesKind::CompleteH => exponent,
            SeriesKind::NeutralQ => exponent.scale(&int(2)),
        };
        let total = exponent.exp_truncated().expect("no constant term, finite cutoff");
        let coefficients = (0..=weight).map(|k| total.homogeneous_part(k)).collect();
        SymSeries { kind, weight, coefficients }
    }

    pub fn coefficient(&self, k: i64) -> GradedPoly {
        if k < 0 || k > self.weight as i64 {
            return GradedPoly::zero().with_cutoff(Some(self.weight));
        }
        self.coefficients[k as usize].clone()
    }
}

type SeriesCache = RwLock<HashMap<(SeriesKind, u32), Arc<SymSeries>>>;

fn series_cache() -> &'static SeriesCache {
    static CACHE: OnceLock<SeriesCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The cached series for `(kind, weight)`. Concurrent callers may both
/// compute it; the first insert wins and the results are identical.
pub fn series(kind: SeriesKind, weight: u32) -> Arc<SymSeries> {
    if let Some(s) = series_cache().read().expect("cache lock").get(&(kind, weight)) {
        return Arc::clone(s);
    }
    let computed = Arc::new(SymSeries::compute(kind, weight));
    let mut guard = series_cache().write().expect("cache lock");
    Arc::clone(guard.entry((kind, weight)).or_insert(computed))
}

pub(crate) fn cached_series() -> Vec<Arc<SymSeries>> {
    let guard = series_cache().read().expect("cache lock");
    let mut all: Vec<_> = guard.values().cloned().collect();
    all.sort_by_key(|s| (s.kind, s.weight));
    all
}

pub(crate) fn insert_series(s: SymSeries) {
    let mut guard = series_cache().write().expect("cache lock");
    guard.entry((s.kind, s.weight)).or_insert_with(|| Arc::new(s));
}

/// `h_k` truncated at weight `w`; zero for `k < 0`.
pub fn complete_h(k: i64, w: u32) -> GradedPoly {
    series(SeriesKind::CompleteH, w).coefficient(k)
}

/// `q_k` truncated at weight `w`; zero for `k < 0`.
pub fn neutral_q(k: i64, w: u32) -> GradedPoly {
    series(SeriesKind::NeutralQ, w).coefficient(k)
}

/// Jacobi–Trudi: `s_lambda = det(h_{lambda_i - i + j})`.
pub fn schur(lambda: &Partition, w: u32) -> GradedPoly {
    let h = series(SeriesKind::CompleteH, w);
    let parts = lambda.parts();
    let m = PolyMatrix::from_fn(parts.len(), |i, j| h.coefficient(parts[i] as i64 - i as i64 + j as i64));
    determinant(&m).with_cutoff(Some(w))
}

/// `s_(a|b)`, the hook `(a + 1, 1^b)`.
pub fn hook_schur(arm: u32, leg: u32, w: u32) -> GradedPoly {
    let mut parts = vec![arm + 1];
    parts.extend(std::iter::repeat_n(1, leg as usize));
    schur(&Partition::new(parts), w)
}

/// Giambelli: `s_(alpha|beta) = det(s_(alpha_j | beta_k))`.
pub fn schur_giambelli(fc: &FrobeniusCoords, w: u32) -> GradedPoly {
    let a = fc.alpha.parts();
    let b = fc.beta.parts();
    let m = PolyMatrix::from_fn(fc.rank(), |j, k| hook_schur(a[j], b[k], w));
    determinant(&m).with_cutoff(Some(w))
}

fn q_entry_unchecked(i: i64, j: i64, w: u32) -> GradedPoly {
    if i == 0 && j == 0 {
        return GradedPoly::zero().with_cutoff(Some(w));
    }
    let q = series(SeriesKind::NeutralQ, w);
    let mut acc = &q.coefficient(i) * &q.coefficient(j);
    for k in 1..=j {
        let term = (&q.coefficient(i + k) * &q.coefficient(j - k)).scale(&int(2));
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `Q_ij = q_i q_j + 2 sum_{k=1}^{j} (-1)^k q_{i+k} q_{j-k}`, with `Q_00 = 0`.
pub fn q_matrix_entry(i: i64, j: i64, w: u32) -> Result<GradedPoly> {
    if i < 0 || j < 0 {
        return Err(Error::NegativeIndex(i, j));
    }
    Ok(q_entry_unchecked(i, j, w))
}

/// `Q_alpha` as the Pfaffian of `(Q_{alpha_i alpha_j})`. Odd cardinality goes
/// through [`supplement`].
pub fn schur_q(alpha: &StrictPartition, w: u32) -> GradedPoly {
    let parts = supplement(alpha);
    let parts = parts.parts();
    let m = PolyMatrix::from_fn(parts.len(), |i, j| {
        if i == j {
            GradedPoly::zero()
        } else if i < j {
            q_entry_unchecked(parts[i] as i64, parts[j] as i64, w)
        } else {
            -q_entry_unchecked(parts[j] as i64, parts[i] as i64, w)
        }
    });
    pfaffian(&m).expect("even, skew by construction").with_cutoff(Some(w))
}

/// `Q~_alpha(t_B / 2)`: [`schur_q`] with every variable halved.
pub fn schur_q_half(alpha: &StrictPartition, w: u32) -> GradedPoly {
    schur_q(alpha, w).scale_vars(&rat(1, 2))
}
