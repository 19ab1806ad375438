//! Vacuum expectation values and the identities built on them.

use super::gaussian::GaussianPoly;
use super::operators::{dressed_phi, dressed_psi, dressed_psidag, GeneratorKind, LinearForm, OperatorWord};
use super::state::{pow2, FockVector, MayaState};
use crate::error::{Error, Result};
use crate::partitions::{FrobeniusCoords, StrictPartition};
use crate::polarization::Sign;
use crate::polyring::{int, GradedPoly};
use crate::symfunc::{determinant, pfaffian, PolyMatrix};

/// `<n| w_1 ... w_k |n>`, applying the rightmost form first.
pub fn vev_in_sector(forms: &[LinearForm], charge: i64) -> Result<GaussianPoly> {
    let vac = MayaState::vacuum(charge);
    let mut v = FockVector::basis(vac.clone());
    for f in forms.iter().rev() {
        v = f.apply(&v);
        if v.is_zero() {
            return Ok(GaussianPoly::zero());
        }
    }
    v.exact_coefficient(&vac)
}

/// `<0| w_1 ... w_k |0>`.
pub fn vev_forms(forms: &[LinearForm]) -> Result<GaussianPoly> {
    vev_in_sector(forms, 0)
}

/// VEV of a word, dressed series truncated at `w`.
pub fn vev(word: &OperatorWord, w: u32) -> Result<GaussianPoly> {
    vev_forms(&word.forms(w))
}

fn real_part(g: GaussianPoly) -> Result<GradedPoly> {
    if !g.is_real() {
        return Err(Error::NonzeroImaginary(g.im.to_string()));
    }
    Ok(g.re)
}

/// `(-1)^(sum beta) <0| prod_j psi_{alpha_j}(t) psi^dag_{-beta_j-1}(t) |0>`.
pub fn vev_schur(fc: &FrobeniusCoords, w: u32) -> Result<GradedPoly> {
    let mut forms = Vec::with_capacity(2 * fc.rank());
    for (a, b) in fc.alpha.parts().iter().zip(fc.beta.parts()) {
        forms.push(dressed_psi(i64::from(*a), w));
        forms.push(dressed_psidag(-i64::from(*b) - 1, w));
    }
    let value = vev_forms(&forms)?;
    let sign = if fc.beta.weight().is_multiple_of(2) { 1 } else { -1 };
    Ok(real_part(value)?.scale(&int(sign)).with_cutoff(Some(w)))
}

/// `2^(r/2) <0| phi_{alpha_1}(t_B) ... phi_{alpha_r}(t_B) |0>`. Odd `r` is
/// completed by a trailing `phi_0(t_B)` and the factor `2^((r+1)/2)`.
pub fn vev_schur_q(alpha: &StrictPartition, sign: Sign, w: u32) -> Result<GradedPoly> {
    let mut forms: Vec<LinearForm> = alpha
        .parts()
        .iter()
        .map(|&a| dressed_phi(sign, i64::from(a), w))
        .collect();
    if forms.len() % 2 == 1 {
        forms.push(dressed_phi(sign, 0, w));
    }
    let n = forms.len() as i32;
    let value = vev_forms(&forms)?;
    let factor = pow2(n / 2);
    Ok(real_part(value)?.scale(&factor).with_cutoff(Some(w)))
}

/// The matrix of two-point values `<0| w_j w_k |0>` for `j < k`, extended
/// skew-symmetrically.
fn pairing_matrix(forms: &[LinearForm]) -> Result<PolyMatrix<GaussianPoly>> {
    let n = forms.len();
    let mut upper = Vec::with_capacity(n * (n - 1) / 2);
    for j in 0..n {
        for k in j + 1..n {
            upper.push(vev_forms(&[forms[j].clone(), forms[k].clone()])?);
        }
    }
    Ok(PolyMatrix::skew_from_upper(n, &upper))
}

fn check_anticommuting(forms: &[LinearForm]) -> Result<()> {
    for j in 0..forms.len() {
        for k in j + 1..forms.len() {
            let ac = forms[j].anticommutator(&forms[k])?;
            if !ac.is_zero() {
                return Err(Error::WickHypothesis(format!(
                    "generators {} and {} do not anticommute ({ac})",
                    j + 1,
                    k + 1
                )));
            }
        }
    }
    Ok(())
}

/// `true` for creation operators in odd positions and annihilation
/// operators in even positions (1-based).
pub fn is_alternating(forms: &[LinearForm]) -> bool {
    forms.len().is_multiple_of(2)
        && forms.iter().enumerate().all(|(k, f)| {
            if k % 2 == 0 {
                f.is_creation()
            } else {
                f.is_annihilation()
            }
        })
}

/// Pfaffian form of Wick's theorem for pairwise anticommuting forms.
pub fn wick_pfaffian(forms: &[LinearForm]) -> Result<bool> {
    if forms.len() % 2 == 1 {
        return Err(Error::WickHypothesis(format!("odd length {}", forms.len())));
    }
    check_anticommuting(forms)?;
    let direct = vev_forms(forms)?;
    let pf = pfaffian(&pairing_matrix(forms)?)?;
    Ok(direct == pf)
}

/// Determinant form: `det(<w_j w_k>)` over odd `j`, even `k` (1-based).
pub fn wick_determinant(forms: &[LinearForm]) -> Result<bool> {
    if !is_alternating(forms) {
        return Err(Error::WickHypothesis(
            "expected creation/annihilation alternation".into(),
        ));
    }
    check_anticommuting(forms)?;
    let direct = vev_forms(forms)?;
    let half = forms.len() / 2;
    let mut values = Vec::with_capacity(half * half);
    for j in 0..half {
        for k in 0..half {
            values.push(vev_forms(&[forms[2 * j].clone(), forms[2 * k + 1].clone()])?);
        }
    }
    let m = PolyMatrix::from_fn(half, |j, k| values[j * half + k].clone());
    Ok(direct == determinant(&m))
}

/// Runs the Pfaffian form, and the determinant form too when the word
/// alternates between creation and annihilation operators.
pub fn check_wick(word: &OperatorWord, w: u32) -> Result<bool> {
    let forms = word.forms(w);
    let pf = wick_pfaffian(&forms)?;
    if is_alternating(&forms) {
        return Ok(pf && wick_determinant(&forms)?);
    }
    Ok(pf)
}

fn only_phi(word: &OperatorWord, sign: Sign) -> Result<()> {
    for g in &word.generators {
        if g.kind != GeneratorKind::Phi(sign) {
            return Err(Error::Word(format!("{g} in a phi{sign} word")));
        }
    }
    Ok(())
}

/// The factorization of `<0| u+_1 ... u+_n u-_1 ... u-_m |0>`:
/// the product of the separate values for `n, m` even, zero for mixed
/// parity, and `2i <0|u+ phi+_0|0> <0|u- phi-_0|0>` for `n, m` odd.
pub fn check_factorization(plus: &OperatorWord, minus: &OperatorWord, w: u32) -> Result<bool> {
    only_phi(plus, Sign::Plus)?;
    only_phi(minus, Sign::Minus)?;
    let up = plus.forms(w);
    let um = minus.forms(w);
    let joint: Vec<LinearForm> = up.iter().chain(&um).cloned().collect();
    let lhs = vev_forms(&joint)?;
    let rhs = match (up.len() % 2, um.len() % 2) {
        (0, 0) => &vev_forms(&up)? * &vev_forms(&um)?,
        (1, 1) => {
            let mut a = up.clone();
            a.push(LinearForm::phi(Sign::Plus, 0));
            let mut b = um.clone();
            b.push(LinearForm::phi(Sign::Minus, 0));
            (&vev_forms(&a)? * &vev_forms(&b)?).scale(&int(2)).times_i()
        }
        _ => GaussianPoly::zero(),
    };
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;
    use crate::symfunc::{schur, schur_q_half};

    fn word(s: &str) -> OperatorWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> GradedPoly {
        s.parse().unwrap()
    }

    #[test]
    fn basic_values() {
        assert_eq!(vev(&word(""), 0).unwrap(), GaussianPoly::one());
        assert!(vev(&word("psi(1)"), 0).unwrap().is_zero());
        assert_eq!(
            vev(&word("phi+(0) phi-(0)"), 0).unwrap(),
            GaussianPoly::i().scale(&rat(1, 2))
        );
        assert_eq!(vev(&word("phi+(-1) phi+(1)"), 0).unwrap(), GaussianPoly::rational(int(-1)));
        assert_eq!(vev(&word("phi+(0) phi+(0)"), 0).unwrap(), GaussianPoly::rational(rat(1, 2)));
        assert!(vev(&word("phi+(1) phi+(-1)"), 0).unwrap().is_zero());
        assert_eq!(vev(&word("phi+(0)"), 0), Ok(GaussianPoly::zero()));
    }

    #[test]
    fn schur_examples() {
        let fc = |s: &str| s.parse::<FrobeniusCoords>().unwrap();
        assert_eq!(vev_schur(&fc("-|-"), 3).unwrap(), GradedPoly::one());
        assert_eq!(vev_schur(&fc("0|0"), 1).unwrap(), p("t1"));
        let l33 = crate::partitions::Partition::new(vec![3, 3]);
        assert_eq!(vev_schur(&fc("2,1|1,0"), 6).unwrap(), schur(&l33, 6));
    }

    #[test]
    fn schur_q_examples() {
        let sp = |v: &[u32]| StrictPartition::new(v.to_vec()).unwrap();
        for s in [Sign::Plus, Sign::Minus] {
            assert_eq!(vev_schur_q(&sp(&[]), s, 3).unwrap(), GradedPoly::one());
            assert_eq!(vev_schur_q(&sp(&[1, 0]), s, 1).unwrap(), p("t1"));
            assert_eq!(vev_schur_q(&sp(&[2, 1]), s, 3).unwrap(), p("(1/6)*t1^3 - 2*t3"));
            for alpha in [sp(&[1]), sp(&[2, 1, 0]), sp(&[3]), sp(&[0])] {
                let w = alpha.weight();
                assert_eq!(vev_schur_q(&alpha, s, w).unwrap(), schur_q_half(&alpha, w), "{alpha}");
            }
        }
        // 2 <0| phi+_1(t_B) phi+_0(t_B) |0> = t1
        let v = vev(&word("phi+(1,t) phi+(0,t)"), 1).unwrap();
        assert_eq!(v.scale(&int(2)), GaussianPoly::real(p("t1")));
    }

    #[test]
    fn wick_examples() {
        assert!(check_wick(&word("phi+(2,t) phi+(1,t)"), 4).unwrap());
        assert!(check_wick(&word("phi+(3,t) phi-(1,t) phi+(2,t) phi-(0,t)"), 4).unwrap());
        assert!(check_wick(&word("psi(2,t) psidag(-1,t) psi(1,t) psidag(-2,t) psi(0,t) psidag(-3,t)"), 4).unwrap());
        assert!(matches!(
            check_wick(&word("phi+(-1) phi+(1)"), 0),
            Err(Error::WickHypothesis(_))
        ));
        assert!(matches!(check_wick(&word("phi+(1)"), 0), Err(Error::WickHypothesis(_))));
    }

    #[test]
    fn factorization_examples() {
        assert!(check_factorization(&OperatorWord::default(), &OperatorWord::default(), 0).unwrap());
        assert!(check_factorization(&word("phi+(2,t) phi+(1,t)"), &word("phi-(3,t) phi-(0,t)"), 4).unwrap());
        assert!(check_factorization(&word("phi+(0,t)"), &word("phi-(1,t)"), 1).unwrap());
        let v = vev(&word("phi+(0,t) phi-(1,t)"), 1).unwrap();
        assert_eq!(v, GaussianPoly::new(GradedPoly::zero(), p("(1/2)*t1")));
        assert!(check_factorization(&word("phi+(1,t)"), &word("phi-(2,t) phi-(1,t)"), 3).unwrap());
        assert!(check_factorization(&word("phi-(1)"), &word("phi-(1)"), 0).is_err());
    }

    #[test]
    fn odd_power_is_an_error_only_when_nonzero() {
        let forms = [LinearForm::phi(Sign::Plus, 0), LinearForm::psi(-1)];
        assert!(vev_forms(&forms).unwrap().is_zero());
        let one = [LinearForm::phi(Sign::Plus, 0)];
        assert_eq!(vev_in_sector(&[LinearForm::psidag(0), one[0].clone()], 0), Err(Error::OddSqrtTwo));
    }
}
