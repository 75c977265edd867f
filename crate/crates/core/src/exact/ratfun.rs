use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{gcd, rat, BigRat, MPoly, Monomial, UV};
use crate::error::{Error, Result};

/// Quotient of two polynomials in canonical form: numerator and denominator
/// are coprime and the denominator has leading coefficient one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl RatFun {
    /// Canonical representative of `num / den`.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::scaled(num, den))
    }

    /// Assemble from coprime parts, fixing only the scalar normalization.
    fn scaled(num: MPoly, den: MPoly) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(MPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(MPoly::from_int(c))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFun {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn var(i: usize) -> Self {
        Self::from_poly(MPoly::var(i))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<RatFun> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::scaled(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<RatFun> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(Self::scaled(base.num.pow(e), base.den.pow(e)))
    }

    pub fn scale(&self, c: &BigRat) -> RatFun {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Equality by cross multiplication, independent of normal form.
    pub fn cross_eq(&self, other: &RatFun) -> bool {
        (&self.num * &other.den) == (&other.num * &self.den)
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        let num = self.num.fmt_with(names);
        if self.den.is_one() {
            return num;
        }
        format!(
            "{}/{}",
            wrap(&num, self.num.num_terms()),
            wrap(&self.den.fmt_with(names), self.den.num_terms())
        )
    }

    /// Text form with the denominator written as a product of binomials
    /// `(1-x^k)` and `(1+x^k)` where possible.
    pub fn fmt_factored(&self, names: &[&str]) -> String {
        let (num, den) = self.factored_parts(names);
        if den == "1" {
            return num;
        }
        let num = wrap(&num, self.num.num_terms());
        let den = if den.contains('*') || !den.starts_with('(') {
            format!("({den})")
        } else {
            den
        };
        format!("{num}/{den}")
    }

    /// `(numerator, denominator)` as text, with the denominator factored
    /// into binomials and its scalar moved to the numerator.
    pub fn factored_parts(&self, names: &[&str]) -> (String, String) {
        if self.den.is_one() {
            return (self.num.fmt_with(names), "1".to_string());
        }
        let mut f = factor_binomials(&self.den);
        let num = self.num.scale(&f.scalar.recip());
        f.scalar = BigRat::one();
        (num.fmt_with(names), f.fmt_with(names))
    }
}

fn wrap(s: &str, terms: usize) -> String {
    if terms > 1 {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// A polynomial written as `scalar * Π (1 ∓ x_i^k)^m * cofactor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialFactorization {
    pub scalar: BigRat,
    /// (variable, k, plus sign, multiplicity)
    pub factors: Vec<(usize, u32, bool, u32)>,
    pub cofactor: MPoly,
}

impl BinomialFactorization {
    pub fn fmt_with(&self, names: &[&str]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for &(var, k, plus, mult) in &self.factors {
            let x = MPoly::term(BigRat::one(), Monomial::var(var, k)).fmt_with(names);
            let base = format!("(1{}{})", if plus { '+' } else { '-' }, x);
            if mult == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{mult}"));
            }
        }
        if !self.cofactor.is_one() {
            parts.push(format!("({})", self.cofactor.fmt_with(names)));
        }
        let body = parts.join("*");
        let minus_one = -BigRat::one();
        if self.scalar.is_one() {
            if body.is_empty() {
                "1".to_string()
            } else {
                body
            }
        } else if self.scalar == minus_one {
            if body.is_empty() {
                "-1".to_string()
            } else {
                format!("-{body}")
            }
        } else if body.is_empty() {
            rat::fmt(&self.scalar)
        } else {
            format!("{}*{}", rat::fmt(&self.scalar), body)
        }
    }

    pub fn expand(&self) -> MPoly {
        let mut p = self.cofactor.scale(&self.scalar);
        for &(var, k, plus, mult) in &self.factors {
            let xk = MPoly::term(BigRat::one(), Monomial::var(var, k));
            let f = if plus {
                &MPoly::one() + &xk
            } else {
                &MPoly::one() - &xk
            };
            p = &p * &f.pow(mult);
        }
        p
    }
}

/// Greedy extraction of `(1-x^k)` factors (largest `k` first), then
/// `(1+x^k)` factors, variable by variable.
pub fn factor_binomials(p: &MPoly) -> BinomialFactorization {
    let mut rest = p.clone();
    let mut factors = Vec::new();
    for var in 0..p.arity() {
        for plus in [false, true] {
            let top = rest.degree_in(var).unwrap_or(0);
            for k in (1..=top).rev() {
                let xk = MPoly::term(BigRat::one(), Monomial::var(var, k));
                let f = if plus {
                    &MPoly::one() + &xk
                } else {
                    &MPoly::one() - &xk
                };
                let mut mult = 0;
                while rest.degree_in(var).unwrap_or(0) >= k {
                    match rest.div_exact(&f) {
                        Ok(q) => {
                            rest = q;
                            mult += 1;
                        }
                        Err(_) => break,
                    }
                }
                if mult > 0 {
                    factors.push((var, k, plus, mult));
                }
            }
        }
    }
    factors.sort();
    let (scalar, cofactor) = if rest.is_constant() {
        (rest.constant_term(), MPoly::one())
    } else {
        let c = rest.constant_term();
        if c.is_zero() {
            (BigRat::one(), rest)
        } else {
            (c.clone(), rest.scale(&c.recip()))
        }
    };
    BinomialFactorization {
        scalar,
        factors,
        cofactor,
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&UV))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({})", self)
    }
}

impl From<MPoly> for RatFun {
    fn from(p: MPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &'a RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return RatFun::new(num, self.den.clone()).expect("nonzero denominator");
        }
        let g = gcd(&self.den, &rhs.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        let den = &(&a * &b) * &g;
        RatFun::new(num, den).expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &'a RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &'a RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        RatFun::scaled(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        &self - &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}
