use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{poly_gcd, Polynomial};
use super::{RatFunError, Rational};

/// A ratio of polynomials in lowest terms with a monic denominator.
///
/// Every constructor normalizes, so two values are equal exactly when their
/// `num` and `den` fields are equal. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Deserialize)]
struct RawRationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawRationalFunction::deserialize(d)?;
        RationalFunction::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

impl RationalFunction {
    /// Builds `num/den` in canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// The indeterminate λ itself (not a member of 𝕎).
    pub fn lambda() -> Self {
        Self::from_poly(Polynomial::lambda())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant value if the function is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_constant() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Membership in 𝕎: numerator degree at most denominator degree.
    pub fn in_w(&self) -> bool {
        self.num.degree().unwrap_or(0) <= self.den.degree().unwrap_or(0)
    }

    /// Strictly proper: numerator degree below denominator degree (zero counts).
    pub fn is_strictly_proper(&self) -> bool {
        match self.num.degree() {
            None => true,
            Some(d) => Some(d) < self.den.degree(),
        }
    }

    pub fn inv(&self) -> Result<Self, RatFunError> {
        if self.is_zero() {
            return Err(RatFunError::DivisionByZeroFunction);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, RatFunError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Total degree `deg num + deg den`, used as a size heuristic for pivots.
    pub fn weight(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    /// Coefficients `c_0..=c_k` of the expansion `Σ c_j t^j` with `t = 1/λ`.
    pub fn series_at_infinity(&self, k: usize) -> Result<Vec<Rational>, RatFunError> {
        if !self.in_w() {
            return Err(RatFunError::NotProper);
        }
        let d = self.den.degree().unwrap_or(0);
        // With t = 1/λ: num = λ^d · N(t), den = λ^d · D(t), and D(0) = 1.
        let rev = |p: &Polynomial| -> Vec<Rational> {
            (0..=d).map(|i| p.coeff(d - i)).collect()
        };
        let n_t = rev(&self.num);
        let d_t = rev(&self.den);
        let mut out: Vec<Rational> = Vec::with_capacity(k + 1);
        for j in 0..=k {
            let mut c = n_t.get(j).cloned().unwrap_or_else(Rational::zero);
            for i in 1..=j.min(d) {
                if !d_t[i].is_zero() {
                    c -= &d_t[i] * &out[j - i];
                }
            }
            out.push(c);
        }
        Ok(out)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            return RationalFunction {
                num: &self.num * &rhs.num,
                den: Polynomial::one(),
            };
        }
        // Cross-cancel first to keep intermediate degrees small.
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = rhs.den.div_exact(&g1);
        let n2 = rhs.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        RationalFunction::normalized(&n1 * &n2, &d1 * &d2)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            let nonzero = p.coeffs().iter().filter(|c| !c.is_zero()).count();
            if nonzero > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
