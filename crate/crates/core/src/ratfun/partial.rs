//! Partial fraction decomposition over rationally-splitting denominators.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::func::RationalFunction;
use super::poly::Polynomial;
use super::{RatFunError, Rational};

/// One summand `coeff / (λ - root)^power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialFractionTerm {
    #[serde(with = "super::rational_string")]
    pub root: Rational,
    pub power: u32,
    #[serde(with = "super::rational_string")]
    pub coeff: Rational,
}

/// `f = constant + Σ coeff_k / (λ - root_k)^power_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialFractionForm {
    #[serde(with = "super::rational_string")]
    pub constant: Rational,
    pub terms: Vec<PartialFractionTerm>,
}

impl PartialFractionForm {
    pub fn recombine(&self) -> RationalFunction {
        self.terms
            .iter()
            .fold(RationalFunction::constant(self.constant.clone()), |acc, t| {
                let den = Polynomial::linear(&t.root).pow(t.power);
                let term = RationalFunction::new(Polynomial::constant(t.coeff.clone()), den)
                    .expect("nonzero power of a linear factor");
                &acc + &term
            })
    }
}

/// Rational roots of `p` with multiplicities, plus the cofactor that has no
/// rational roots left. Roots are returned in descending order.
pub fn rational_roots(p: &Polynomial) -> Result<(Vec<(Rational, u32)>, Polynomial), RatFunError> {
    if p.is_zero() {
        return Err(RatFunError::ZeroPolynomial);
    }
    let mut rest = p.clone();
    let mut roots = Vec::new();

    let mut zero_mult = 0;
    while rest.coeff(0).is_zero() && !rest.is_constant() {
        rest = rest.div_exact(&Polynomial::lambda());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }

    if rest.degree().unwrap_or(0) > 0 {
        let ints = rest.integer_coeffs();
        let lead = ints.last().expect("nonconstant").abs();
        let trail = ints[0].abs();
        let mut candidates = BTreeSet::new();
        for num in divisors(&trail) {
            for den in divisors(&lead) {
                let r = Rational::new(num.clone(), den);
                candidates.insert(-r.clone());
                candidates.insert(r);
            }
        }
        for r in candidates.into_iter().rev() {
            let lin = Polynomial::linear(&r);
            let mut mult = 0;
            loop {
                if rest.is_constant() || !rest.eval(&r).is_zero() {
                    break;
                }
                rest = rest.div_exact(&lin);
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
            if rest.is_constant() {
                break;
            }
        }
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    Ok((roots, rest))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    debug_assert!(n.is_positive());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Decomposes `f ∈ 𝕎` into partial fractions over its rational roots.
///
/// Terms are ordered by root descending, then power descending.
pub fn partial_fractions(f: &RationalFunction) -> Result<PartialFractionForm, RatFunError> {
    if !f.in_w() {
        return Err(RatFunError::NotProper);
    }
    let den = f.den();
    let num = f.num();
    let constant = match (num.degree(), den.degree()) {
        (Some(a), Some(b)) if a == b => num.leading().expect("nonzero").clone(),
        _ => Rational::zero(),
    };
    if den.is_constant() {
        return Ok(PartialFractionForm {
            constant,
            terms: Vec::new(),
        });
    }

    let (roots, rest) = rational_roots(den)?;
    if !rest.is_constant() {
        return Err(RatFunError::NonSplittingDenominator(rest.monic()));
    }

    let mut terms = Vec::new();
    for (i, (root, mult)) in roots.iter().enumerate() {
        // f = num / ((λ-r)^m · q), expand g = num/q around λ = r.
        let q = roots
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Polynomial::one(), |acc, (_, (r, m))| {
                &acc * &Polynomial::linear(r).pow(*m)
            });
        let m = *mult as usize;
        let n_u = num.taylor_shift(root);
        let q_u = q.taylor_shift(root);
        let series = power_series_div(&n_u, &q_u, m);
        for (j, c) in series.into_iter().enumerate() {
            if !c.is_zero() {
                terms.push(PartialFractionTerm {
                    root: root.clone(),
                    power: (m - j) as u32,
                    coeff: c,
                });
            }
        }
    }

    let form = PartialFractionForm { constant, terms };
    assert_eq!(&form.recombine(), f, "partial fraction recombination mismatch");
    Ok(form)
}

/// First `len` coefficients of `a(u)/b(u)` as a power series in `u`; `b(0) ≠ 0`.
fn power_series_div(a: &Polynomial, b: &Polynomial, len: usize) -> Vec<Rational> {
    let b0_inv = b.coeff(0).recip();
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for j in 0..len {
        let mut c = a.coeff(j);
        for i in 1..=j {
            let bi = b.coeff(i);
            if !bi.is_zero() {
                c -= bi * &out[j - i];
            }
        }
        out.push(c * &b0_inv);
    }
    out
}
