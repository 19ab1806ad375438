//! Fermionic generators, their dressed series, and the current operators.
//!
//! Every generator used here is a finite linear form
//! `2^(sqrt2/2) * (sum_j a_j psi_j + sum_j b_j psi^dag_j)`; neutral fermions
//! expand as `phi+_j = (psi_j + (-1)^j psi^dag_{-j}) / sqrt 2` and
//! `phi-_j = i (psi_j - (-1)^j psi^dag_{-j}) / sqrt 2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::gaussian::GaussianPoly;
use super::state::{pow2, FockVector};
use crate::error::{Error, Result};
use crate::polarization::Sign;
use crate::polyring::{int, rat, GradedPoly};
use crate::symfunc::complete_h;

fn parity_sign(j: i64) -> i64 {
    if j.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A finite linear combination of `psi_j` and `psi^dag_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearForm {
    pub psi: BTreeMap<i64, GaussianPoly>,
    pub psidag: BTreeMap<i64, GaussianPoly>,
    pub sqrt2: i32,
}

fn add_into(map: &mut BTreeMap<i64, GaussianPoly>, j: i64, c: GaussianPoly) {
    let slot = map.entry(j).or_default();
    *slot = &*slot + &c;
    if slot.is_zero() {
        map.remove(&j);
    }
}

impl LinearForm {
    pub fn psi(j: i64) -> Self {
        let mut f = LinearForm::default();
        f.psi.insert(j, GaussianPoly::one());
        f
    }

    pub fn psidag(j: i64) -> Self {
        let mut f = LinearForm::default();
        f.psidag.insert(j, GaussianPoly::one());
        f
    }

    pub fn phi(sign: Sign, j: i64) -> Self {
        let unit = match sign {
            Sign::Plus => GaussianPoly::one(),
            Sign::Minus => GaussianPoly::i(),
        };
        let dag = unit.scale(&int(parity_sign(j) * i64::from(sign.value())));
        let mut f = LinearForm { sqrt2: -1, ..Default::default() };
        f.psi.insert(j, unit);
        f.psidag.insert(-j, dag);
        f
    }

    pub fn is_zero(&self) -> bool {
        self.psi.is_empty() && self.psidag.is_empty()
    }

    /// Only `psi` terms.
    pub fn is_creation(&self) -> bool {
        self.psidag.is_empty()
    }

    /// Only `psi^dag` terms.
    pub fn is_annihilation(&self) -> bool {
        self.psi.is_empty()
    }

    pub fn scale(&self, c: &GaussianPoly) -> Self {
        let m = |map: &BTreeMap<i64, GaussianPoly>| {
            map.iter()
                .map(|(j, x)| (*j, x * c))
                .filter(|(_, x)| !x.is_zero())
                .collect()
        };
        LinearForm { psi: m(&self.psi), psidag: m(&self.psidag), sqrt2: self.sqrt2 }
    }

    /// The same form with exponent `e <= sqrt2` of matching parity.
    fn lowered(&self, e: i32) -> Option<Self> {
        let d = self.sqrt2 - e;
        if d < 0 || d % 2 != 0 {
            return None;
        }
        let mut f = self.scale(&GaussianPoly::rational(pow2(d / 2)));
        f.sqrt2 = e;
        Some(f)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let e = self.sqrt2.min(other.sqrt2);
        let (Some(mut a), Some(b)) = (self.lowered(e), other.lowered(e)) else {
            return Err(Error::OddSqrtTwo);
        };
        for (j, c) in b.psi {
            add_into(&mut a.psi, j, c);
        }
        for (j, c) in b.psidag {
            add_into(&mut a.psidag, j, c);
        }
        Ok(a)
    }

    /// Equality as operators, whatever the exponents.
    pub fn same_operator(&self, other: &Self) -> bool {
        self.try_add(&other.scale(&-GaussianPoly::one()))
            .map(|d| d.is_zero())
            .unwrap_or(false)
    }

    pub fn apply(&self, v: &FockVector) -> FockVector {
        let mut out = FockVector::from_terms([], v.sqrt2 + self.sqrt2);
        for (state, c) in v.terms() {
            for (&j, a) in &self.psi {
                if let Some((sign, s)) = state.create(j) {
                    out.add_term(s, (a * c).scale(&int(sign.into())));
                }
            }
            for (&j, b) in &self.psidag {
                if let Some((sign, s)) = state.annihilate(j) {
                    out.add_term(s, (b * c).scale(&int(sign.into())));
                }
            }
        }
        out
    }

    /// `[self, other]_+`, a scalar: `sum_j a_j b'_j + b_j a'_j`.
    pub fn anticommutator(&self, other: &Self) -> Result<GaussianPoly> {
        let mut acc = GaussianPoly::zero();
        for (j, a) in &self.psi {
            if let Some(b) = other.psidag.get(j) {
                acc = &acc + &(a * b);
            }
        }
        for (j, b) in &self.psidag {
            if let Some(a) = other.psi.get(j) {
                acc = &acc + &(b * a);
            }
        }
        let e = self.sqrt2 + other.sqrt2;
        if acc.is_zero() {
            return Ok(acc);
        }
        if e % 2 != 0 {
            return Err(Error::OddSqrtTwo);
        }
        Ok(acc.scale(&pow2(e / 2)))
    }
}

/// `h_k(t)` at cutoff `w`.
fn h(k: i64, w: u32) -> GradedPoly {
    complete_h(k, w)
}

/// `psi_j(t) = sum_k h_k(t) psi_{j-k}`.
pub fn dressed_psi(j: i64, w: u32) -> LinearForm {
    let mut f = LinearForm::default();
    for k in 0..=w as i64 {
        add_into(&mut f.psi, j - k, GaussianPoly::real(h(k, w)));
    }
    f
}

/// `psi^dag_j(t) = sum_k h_k(-t) psi^dag_{j+k}`.
pub fn dressed_psidag(j: i64, w: u32) -> LinearForm {
    let mut f = LinearForm::default();
    for k in 0..=w as i64 {
        add_into(&mut f.psidag, j + k, GaussianPoly::real(h(k, w).scale_vars(&int(-1))));
    }
    f
}

/// `phi+-_j(t_B) = sum_k h_k(t') phi+-_{j-k}`.
pub fn dressed_phi(sign: Sign, j: i64, w: u32) -> LinearForm {
    let mut f = LinearForm { sqrt2: -1, ..Default::default() };
    for k in 0..=w as i64 {
        let c = GaussianPoly::real(h(k, w).restrict_to_odd());
        let term = LinearForm::phi(sign, j - k).scale(&c);
        f = f.try_add(&term).expect("same sqrt2 exponent");
    }
    f
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Psi,
    PsiDag,
    Phi(Sign),
}

/// One generator of a word, possibly dressed by the flows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub index: i64,
    pub dressed: bool,
}

impl Generator {
    pub fn new(kind: GeneratorKind, index: i64, dressed: bool) -> Self {
        Generator { kind, index, dressed }
    }

    pub fn to_form(&self, w: u32) -> LinearForm {
        let j = self.index;
        match (self.kind, self.dressed) {
            (GeneratorKind::Psi, false) => LinearForm::psi(j),
            (GeneratorKind::PsiDag, false) => LinearForm::psidag(j),
            (GeneratorKind::Phi(s), false) => LinearForm::phi(s, j),
            (GeneratorKind::Psi, true) => dressed_psi(j, w),
            (GeneratorKind::PsiDag, true) => dressed_psidag(j, w),
            (GeneratorKind::Phi(s), true) => dressed_phi(s, j, w),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GeneratorKind::Psi => "psi",
            GeneratorKind::PsiDag => "psidag",
            GeneratorKind::Phi(Sign::Plus) => "phi+",
            GeneratorKind::Phi(Sign::Minus) => "phi-",
        };
        if self.dressed {
            write!(f, "{name}({},t)", self.index)
        } else {
            write!(f, "{name}({})", self.index)
        }
    }
}

/// A product of generators, leftmost acting last, with an optional weight
/// cutoff for the dressed series.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorWord {
    pub generators: Vec<Generator>,
    pub weight: Option<u32>,
}

impl OperatorWord {
    pub fn new(generators: Vec<Generator>) -> Self {
        OperatorWord { generators, weight: None }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn forms(&self, w: u32) -> Vec<LinearForm> {
        self.generators.iter().map(|g| g.to_form(w)).collect()
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.generators.iter().map(Generator::to_string).collect();
        f.write_str(&body.join(" "))?;
        if let Some(w) = self.weight {
            write!(f, " | W={w}")?;
        }
        Ok(())
    }
}

fn parse_generator(tok: &str) -> Result<Generator> {
    let bad = || Error::Word(format!("bad generator {tok:?}"));
    let (name, rest) = tok.split_once('(').ok_or_else(bad)?;
    let args = rest.strip_suffix(')').ok_or_else(bad)?;
    let kind = match name.trim() {
        "psi" => GeneratorKind::Psi,
        "psidag" => GeneratorKind::PsiDag,
        "phi+" => GeneratorKind::Phi(Sign::Plus),
        "phi-" => GeneratorKind::Phi(Sign::Minus),
        _ => return Err(bad()),
    };
    let mut parts = args.split(',').map(str::trim);
    let index: i64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let dressed = match parts.next() {
        None => false,
        Some("t") => true,
        Some(_) => return Err(bad()),
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(Generator { kind, index, dressed })
}

impl FromStr for OperatorWord {
    type Err = Error;

    /// `psi(2) psidag(-2) | W=4`, `phi+(2,t) phi-(0) | W=3`. A `,t` argument
    /// selects the dressed generator.
    fn from_str(s: &str) -> Result<Self> {
        let (body, tail) = match s.split_once('|') {
            Some((b, t)) => (b, Some(t.trim())),
            None => (s, None),
        };
        let weight = match tail {
            None => None,
            Some(t) => {
                let v = t
                    .strip_prefix("W=")
                    .or_else(|| t.strip_prefix("W ="))
                    .ok_or_else(|| Error::Word(format!("expected W=<n>, got {t:?}")))?;
                Some(v.trim().parse().map_err(|_| Error::Word(format!("bad weight {v:?}")))?)
            }
        };
        let generators = body
            .split_whitespace()
            .map(parse_generator)
            .collect::<Result<Vec<_>>>()?;
        Ok(OperatorWord { generators, weight })
    }
}

/// `J_n v = sum_i psi_i psi^dag_{i+n} v` for `n >= 1`.
pub fn apply_current(n: i64, v: &FockVector) -> FockVector {
    assert!(n >= 1, "positive current components only");
    let mut out = FockVector::from_terms([], v.sqrt2);
    for (state, c) in v.terms() {
        // i + n must be occupied and i empty after removal
        for i in (state.floor() - n + 1)..=(state.top() - n) {
            let Some((s1, mid)) = state.annihilate(i + n) else { continue };
            let Some((s2, end)) = mid.create(i) else { continue };
            out.add_term(end, c.scale(&int((s1 * s2).into())));
        }
    }
    out
}

/// `J^{B+-}_n v = 1/2 sum_j (-1)^(j+1) phi_j phi_{-j-n} v` for `n >= 1`.
///
/// The sum is cut to `|j| <= B` with `B` past every occupied and every empty
/// position that matters for `v`; the discarded terms vanish on `v`.
pub fn apply_neutral_current(sign: Sign, n: i64, v: &FockVector) -> FockVector {
    assert!(n >= 1, "positive current components only");
    let reach = v
        .terms()
        .map(|(s, _)| s.top().abs().max(s.floor().abs()))
        .max()
        .unwrap_or(0);
    let b = reach + n + 2;
    let mut out = FockVector::from_terms([], v.sqrt2 - 2);
    for j in -b..=b {
        let w = LinearForm::phi(sign, j).apply(&LinearForm::phi(sign, -j - n).apply(v));
        let w = w.scale(&GaussianPoly::rational(rat(-parity_sign(j), 2)));
        out = out.try_add(&w).expect("uniform sqrt2 exponent");
    }
    out
}
