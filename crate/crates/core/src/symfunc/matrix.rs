//! Exact determinant and Pfaffian kernels over any [`RingElem`].
//!
//! Both expand by memoised cofactors over index subsets: the determinant
//! walks rows and tracks the set of used columns, the Pfaffian expands along
//! the first remaining index. Costs are `O(2^n n)` ring operations, which is
//! what the small matrices here need.

use std::collections::HashMap;

use crate::error::{Error, Result};
use num_traits::{One, Zero};

use crate::polyring::{GradedPoly, Rational};

/// The operations the determinant and Pfaffian kernels need.
pub trait RingElem: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl RingElem for GradedPoly {
    fn zero() -> Self {
        GradedPoly::zero()
    }
    fn one() -> Self {
        GradedPoly::one()
    }
    fn is_zero(&self) -> bool {
        GradedPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl RingElem for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
}

/// A dense square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<R = GradedPoly> {
    n: usize,
    entries: Vec<R>,
}

impl<R: RingElem> PolyMatrix<R> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Skew-symmetric matrix from its strict upper triangle, listed row by
    /// row: `(0,1), (0,2), ..., (1,2), ...`.
    pub fn skew_from_upper(n: usize, upper: &[R]) -> Self {
        assert_eq!(upper.len(), n * n.saturating_sub(1) / 2, "upper triangle size");
        let mut m = PolyMatrix {
            n,
            entries: vec![R::zero(); n * n],
        };
        let mut it = upper.iter();
        for i in 0..n {
            for j in (i + 1)..n {
                let x = it.next().expect("sized above").clone();
                m.entries[j * n + i] = x.neg();
                m.entries[i * n + j] = x;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    /// `P M P^T` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0; self.n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        PolyMatrix::from_fn(self.n, |i, j| self.get(inv[i], inv[j]).clone())
    }
}

pub fn determinant<R: RingElem>(m: &PolyMatrix<R>) -> R {
    let n = m.n;
    assert!(n < 32, "determinant dimension {n} too large");
    // partial[mask]: signed sum over injections of the first popcount(mask)
    // rows onto the columns in mask
    let mut partial: HashMap<u32, R> = HashMap::new();
    partial.insert(0, R::one());
    for row in 0..n {
        let mut next: HashMap<u32, R> = HashMap::new();
        for (mask, acc) in &partial {
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let entry = m.get(row, col);
                if entry.is_zero() {
                    continue;
                }
                let inversions = (mask >> (col + 1)).count_ones();
                let mut term = acc.mul(entry);
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                let key = mask | (1 << col);
                match next.get_mut(&key) {
                    Some(v) => *v = v.add(&term),
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        partial = next;
    }
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    partial.remove(&full).unwrap_or_else(R::zero)
}

pub fn pfaffian<R: RingElem>(m: &PolyMatrix<R>) -> Result<R> {
    let n = m.n;
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    for i in 0..n {
        if !m.get(i, i).is_zero() {
            return Err(Error::NotSkew(i, i));
        }
        for j in (i + 1)..n {
            if m.get(j, i) != &m.get(i, j).neg() {
                return Err(Error::NotSkew(i, j));
            }
        }
    }
    assert!(n < 64, "pfaffian dimension {n} too large");
    let mut memo = HashMap::new();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    Ok(pfaffian_rec(m, full, &mut memo))
}

fn pfaffian_rec<R: RingElem>(m: &PolyMatrix<R>, mask: u64, memo: &mut HashMap<u64, R>) -> R {
    if mask == 0 {
        return R::one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let first = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << first);
    let mut acc = R::zero();
    let mut position = 0;
    for j in (first + 1)..m.n {
        if rest & (1 << j) == 0 {
            continue;
        }
        let entry = m.get(first, j);
        if !entry.is_zero() {
            let sub = pfaffian_rec(m, rest & !(1 << j), memo);
            let term = entry.mul(&sub);
            acc = if position % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        position += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{int, Rational};

    fn p(s: &str) -> GradedPoly {
        s.parse().unwrap()
    }

    #[test]
    fn det_examples() {
        let empty: PolyMatrix = PolyMatrix::from_fn(0, |_, _| GradedPoly::zero());
        assert_eq!(determinant(&empty), GradedPoly::one());

        let m = PolyMatrix::from_rows(vec![
            vec![p("t3"), p("t4")],
            vec![p("t2"), p("t3")],
        ])
        .unwrap();
        assert_eq!(determinant(&m), p("t3^2 - t2*t4"));

        let diag = PolyMatrix::from_fn(3, |i, j| if i == j { GradedPoly::var(i + 1, None) } else { GradedPoly::zero() });
        assert_eq!(determinant(&diag), p("t1*t2*t3"));
    }

    #[test]
    fn det_rational_3x3() {
        let rows = vec![
            vec![int(2), int(0), int(1)],
            vec![int(1), int(3), int(2)],
            vec![int(1), int(1), int(1)],
        ];
        let m = PolyMatrix::from_rows(rows).unwrap();
        // 2(3-2) - 0 + 1(1-3)
        assert_eq!(determinant(&m), int(0));
        let m = PolyMatrix::<Rational>::from_fn(4, |i, j| int(((i + 1) * (j + 2) % 5) as i64));
        let brute = brute_det(&m);
        assert_eq!(determinant(&m), brute);
    }

    fn brute_det(m: &PolyMatrix<Rational>) -> Rational {
        let n = m.dim();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = int(0);
        permute(&mut perm, 0, &mut |p| {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let prod = (0..n).fold(int(1), |acc, i| acc * m.get(i, p[i]));
            total += if inv % 2 == 0 { prod } else { -prod };
        });
        total
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn pfaffian_examples() {
        let empty: PolyMatrix = PolyMatrix::skew_from_upper(0, &[]);
        assert_eq!(pfaffian(&empty).unwrap(), GradedPoly::one());
        let two = PolyMatrix::skew_from_upper(2, &[p("t1")]);
        assert_eq!(pfaffian(&two).unwrap(), p("t1"));
        // upper entries a,b,c | d,e | f as t1..t6
        let vars: Vec<_> = (1..=6).map(|i| GradedPoly::var(i, None)).collect();
        let four = PolyMatrix::skew_from_upper(4, &vars);
        assert_eq!(pfaffian(&four).unwrap(), p("t1*t6 - t2*t5 + t3*t4"));
    }

    #[test]
    fn pfaffian_errors() {
        let odd: PolyMatrix<Rational> = PolyMatrix::skew_from_upper(3, &[int(1), int(2), int(3)]);
        assert_eq!(pfaffian(&odd), Err(Error::OddDimension(3)));
        let m = PolyMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
        assert_eq!(pfaffian(&m), Err(Error::NotSkew(0, 1)));
        let m = PolyMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(-1), int(0)]]).unwrap();
        assert_eq!(pfaffian(&m), Err(Error::NotSkew(0, 0)));
    }
}
