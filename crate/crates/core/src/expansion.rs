//! The expansion of `s_(alpha|beta)(t')` as a signed sum of products
//! `Q~_{mu+}(t_B / 2) Q~_{mu-}(t_B / 2)` over polarizations, and its exact
//! verification against Jacobi–Trudi.

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partitions::{frobenius_from_partition, partitions_of, FrobeniusCoords, Partition, StrictPartition};
use crate::polarization::{enumerate_polarizations, s_and_t};
use crate::polyring::{format_rational, rat, GradedPoly, Rational};
use crate::symfunc::{schur, schur_q_half};

/// One summand `coeff * Q~_{q_plus} Q~_{q_minus}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub coeff: Rational,
    pub q_plus: StrictPartition,
    pub q_minus: StrictPartition,
    /// The polarization the term came from, before supplementation. Two
    /// polarizations can share supplemented sides, so pairing for
    /// [`dedupe_symmetric`] goes through these.
    pub mu_plus: StrictPartition,
    pub mu_minus: StrictPartition,
}

impl ExpansionTerm {
    pub fn to_json(&self) -> Value {
        json!({
            "coeff": format_rational(&self.coeff),
            "q_plus": self.q_plus.parts(),
            "q_minus": self.q_minus.parts(),
        })
    }
}

fn sign_pow(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// One term per polarization, in the order of [`enumerate_polarizations`].
pub fn bilinear_expansion(fc: &FrobeniusCoords) -> Vec<ExpansionTerm> {
    let r = fc.rank();
    let s = s_and_t(fc).0.len();
    let global = sign_pow(r * (r + 1) / 2 + s);
    let scale = rat(1, 1i64 << (2 * r - s));
    enumerate_polarizations(fc)
        .into_iter()
        .map(|p| {
            let sign = global * i64::from(p.sgn) * sign_pow(p.pi + p.hat_m_minus / 2);
            ExpansionTerm {
                coeff: &scale * Rational::from_integer(sign.into()),
                q_plus: p.hat_mu_plus,
                q_minus: p.hat_mu_minus,
                mu_plus: p.mu_plus,
                mu_minus: p.mu_minus,
            }
        })
        .collect()
}

/// `sum coeff * Q~_{q_plus}(t_B/2) Q~_{q_minus}(t_B/2)`, truncated at `w`.
pub fn evaluate_expansion(terms: &[ExpansionTerm], w: u32) -> GradedPoly {
    let mut cache: HashMap<StrictPartition, GradedPoly> = HashMap::new();
    let mut q = |mu: &StrictPartition| -> GradedPoly {
        cache.entry(mu.clone()).or_insert_with(|| schur_q_half(mu, w)).clone()
    };
    let mut acc = GradedPoly::zero().with_cutoff(Some(w));
    for t in terms {
        let product = &q(&t.q_plus) * &q(&t.q_minus);
        acc = &acc + &product.scale(&t.coeff);
    }
    acc
}

/// Merges each `(mu+, mu-)` / `(mu-, mu+)` pair into one term with twice the
/// coefficient, keeping the first of the two. A self-paired term (`mu+ =
/// mu-`) stays as it is.
pub fn dedupe_symmetric(terms: &[ExpansionTerm]) -> Result<Vec<ExpansionTerm>> {
    let index: HashMap<(&StrictPartition, &StrictPartition), usize> = terms
        .iter()
        .enumerate()
        .map(|(i, t)| ((&t.mu_plus, &t.mu_minus), i))
        .collect();
    let mut used = vec![false; terms.len()];
    let mut out = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let Some(&k) = index.get(&(&t.mu_minus, &t.mu_plus)) else {
            return Err(Error::AsymmetricPair(format_rational(&t.coeff), "missing".into()));
        };
        if k == i {
            out.push(t.clone());
            continue;
        }
        let partner = &terms[k];
        if partner.coeff != t.coeff {
            return Err(Error::AsymmetricPair(format_rational(&t.coeff), format_rational(&partner.coeff)));
        }
        used[k] = true;
        let mut merged = t.clone();
        merged.coeff = &t.coeff * Rational::from_integer(2.into());
        out.push(merged);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub lambda: Partition,
    pub frobenius: FrobeniusCoords,
    pub weight_cutoff: u32,
    pub terms: Vec<ExpansionTerm>,
    pub lhs: GradedPoly,
    pub rhs: GradedPoly,
    pub residual: GradedPoly,
    pub ok: bool,
    pub term_count: usize,
}

impl VerificationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.parts(),
            "frobenius": {
                "alpha": self.frobenius.alpha.parts(),
                "beta": self.frobenius.beta.parts(),
            },
            "weight_cutoff": self.weight_cutoff,
            "term_count": self.term_count,
            "terms": self.terms.iter().map(ExpansionTerm::to_json).collect::<Vec<_>>(),
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "ok": self.ok,
            "residual": self.residual.to_string(),
        })
    }

    /// `OK (4 terms, residual 0)` or `FAIL (...)`.
    pub fn summary(&self) -> String {
        format!(
            "{} ({} term{}, residual {})",
            if self.ok { "OK" } else { "FAIL" },
            self.term_count,
            if self.term_count == 1 { "" } else { "s" },
            self.residual
        )
    }
}

/// Compares `s_lambda(t')` with the expansion, both truncated at `w`.
pub fn verify_identity(lambda: &Partition, w: u32) -> VerificationReport {
    let fc = frobenius_from_partition(lambda);
    let terms = bilinear_expansion(&fc);
    let lhs = schur(lambda, w).restrict_to_odd();
    let rhs = evaluate_expansion(&terms, w);
    let residual = &lhs - &rhs;
    VerificationReport {
        lambda: lambda.clone(),
        frobenius: fc,
        weight_cutoff: w,
        term_count: terms.len(),
        terms,
        ok: residual.is_zero(),
        lhs,
        rhs,
        residual,
    }
}

/// Every partition of weight `1..=max_weight` by weight, then ascending
/// lexicographic order of parts.
pub fn sweep_partitions(max_weight: u32) -> Vec<Partition> {
    (1..=max_weight)
        .flat_map(|n| {
            let mut ps = partitions_of(n);
            ps.sort();
            ps
        })
        .collect()
}

/// [`verify_identity`] at `w = |lambda|` over [`sweep_partitions`].
pub fn sweep(max_weight: u32) -> Vec<VerificationReport> {
    sweep_partitions(max_weight)
        .iter()
        .map(|l| verify_identity(l, l.weight()))
        .collect()
}

/// [`sweep`] on a pool of `jobs` threads (`0` lets rayon choose). The
/// output order does not depend on `jobs`.
pub fn sweep_with_jobs(max_weight: u32, jobs: usize) -> Vec<VerificationReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let lambdas = sweep_partitions(max_weight);
    pool.install(|| lambdas.par_iter().map(|l| verify_identity(l, l.weight())).collect())
}

/// `true` if the coefficients of the expansion are unchanged by swapping
/// the two sides of every polarization.
pub fn is_swap_symmetric(terms: &[ExpansionTerm]) -> bool {
    let map: HashMap<(&StrictPartition, &StrictPartition), &Rational> =
        terms.iter().map(|t| ((&t.mu_plus, &t.mu_minus), &t.coeff)).collect();
    terms.iter().all(|t| map.get(&(&t.mu_minus, &t.mu_plus)) == Some(&&t.coeff))
        && terms.iter().all(|t| !t.coeff.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fc(s: &str) -> FrobeniusCoords {
        s.parse().unwrap()
    }

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn p(s: &str) -> GradedPoly {
        s.parse().unwrap()
    }

    #[test]
    fn hook_terms() {
        // (3|1): 1/2 Q(3,0)Q(2,0) - 1/2 Q(3,2)Q()
        let terms = dedupe_symmetric(&bilinear_expansion(&fc("3|1"))).unwrap();
        let got: Vec<(Rational, StrictPartition, StrictPartition)> =
            terms.into_iter().map(|t| (t.coeff, t.q_plus, t.q_minus)).collect();
        assert_eq!(
            got,
            vec![(rat(-1, 2), sp(&[3, 2]), sp(&[])), (rat(1, 2), sp(&[3, 0]), sp(&[2, 0]))]
        );
    }

    #[test]
    fn double_term() {
        let terms = bilinear_expansion(&fc("2,1|1,0"));
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].coeff, rat(1, 4));
        assert_eq!((terms[0].q_plus.clone(), terms[0].q_minus.clone()), (sp(&[2, 1]), sp(&[2, 1])));
        assert_eq!(dedupe_symmetric(&terms).unwrap(), terms);
        assert_eq!(evaluate_expansion(&terms, 6), p("(1/144)*t1^6 - (1/6)*t1^3*t3 + t3^2"));
    }

    #[test]
    fn near_double() {
        // (a1, a2 | b1, a2 - 1) with a1 > b1 + 1 > a2
        let terms = dedupe_symmetric(&bilinear_expansion(&fc("4,1|2,0"))).unwrap();
        let mut got: Vec<(Rational, StrictPartition, StrictPartition)> =
            terms.into_iter().map(|t| (t.coeff, t.q_plus, t.q_minus)).collect();
        got.sort();
        let mut want = vec![
            (rat(1, 4), sp(&[4, 1]), sp(&[3, 1])),
            (rat(-1, 4), sp(&[4, 3, 1, 0]), sp(&[1, 0])),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(evaluate_expansion(&[], 3), GradedPoly::zero());
        assert_eq!(evaluate_expansion(&bilinear_expansion(&fc("0|0")), 1), p("t1"));
    }

    #[test]
    fn small_identities() {
        for lam in [vec![1], vec![3, 3], vec![3, 2], vec![2, 1], vec![2, 2, 1]] {
            let lam = Partition::new(lam);
            let rep = verify_identity(&lam, lam.weight());
            assert!(rep.ok, "{lam}: residual {}", rep.residual);
        }
        let rep = verify_identity(&Partition::new(vec![3, 2]), 5);
        assert_eq!(rep.summary(), "OK (4 terms, residual 0)");
    }

    #[test]
    fn sweep_counts() {
        assert_eq!(sweep(1).len(), 1);
        let four = sweep(4);
        assert_eq!(four.len(), 11);
        assert!(four.iter().all(|r| r.ok));
        assert_eq!(sweep_with_jobs(4, 2), four);
    }

    #[test]
    fn dedupe_rejects_asymmetry() {
        let mut terms = bilinear_expansion(&fc("3|1"));
        terms[1].coeff = rat(7, 1);
        assert!(matches!(dedupe_symmetric(&terms), Err(Error::AsymmetricPair(..))));
    }

    #[test]
    fn json_shape() {
        let rep = verify_identity(&Partition::new(vec![3, 2]), 5);
        let v = rep.to_json();
        assert_eq!(v["lambda"], json!([3, 2]));
        assert_eq!(v["frobenius"], json!({"alpha": [2, 0], "beta": [1, 0]}));
        assert_eq!(v["terms"][0], json!({"coeff": "1/8", "q_plus": [2, 1], "q_minus": [2, 0]}));
        assert_eq!(v["residual"], json!("0"));
        assert_eq!(v["ok"], json!(true));
    }
}
