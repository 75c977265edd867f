use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{rat, BigRat};
use crate::error::{Error, Result};

/// Exponent vector of a monomial. Trailing zero exponents are never stored,
/// so two monomials are equal iff their vectors are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(exps: &[u32]) -> Self {
        let mut v = exps.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn var(i: usize, e: u32) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = e;
        Monomial::new(&v)
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of variable slots in use (index of the last variable + 1).
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let v: Vec<u32> = (0..n).map(|i| self.exp(i) + other.exp(i)).collect();
        Monomial(v)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut v = self.0.clone();
        for (i, &e) in other.0.iter().enumerate() {
            if v[i] < e {
                return None;
            }
            v[i] -= e;
        }
        Some(Monomial::new(&v))
    }

    fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        if v.len() <= i {
            v.resize(i + 1, 0);
        }
        v[i] = e;
        Monomial::new(&v)
    }
}

/// Graded order: total degree first, ties broken lexicographically with the
/// highest-indexed variable most significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in (0..n).rev() {
                match self.exp(i).cmp(&other.exp(i)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the rationals.
///
/// Variables are identified by index; which names they carry is decided by
/// the caller when printing or parsing. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat::int(c))
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        Self::term(BigRat::one(), Monomial::var(i, 1))
    }

    pub fn term(c: BigRat, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRat)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// Univariate polynomial in variable `var` from dense integer coefficients,
    /// lowest degree first.
    pub fn univariate(var: usize, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, &c)| (Monomial::var(var, e as u32), rat::int(c))),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRat {
        self.terms.get(m).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn constant_term(&self) -> BigRat {
        self.coeff(&Monomial::one())
    }

    /// Leading term in the graded order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigRat {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRat::zero)
    }

    pub fn arity(&self) -> usize {
        self.terms.keys().map(Monomial::arity).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(var)).max()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    pub fn scale(&self, c: &BigRat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Scale so that the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> MPoly {
        match self.leading_term() {
            None => MPoly::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Coefficients with respect to `var`, lowest degree first. The
    /// coefficients no longer contain `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![MPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            out[e].add_term(m.with_exp(var, 0), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                out.add_term(m.with_exp(var, e as u32), a.clone());
            }
        }
        out
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e > 0 {
                out.add_term(m.with_exp(var, e - 1), c * rat::int(e as i64));
            }
        }
        out
    }

    /// Substitute `value` for variable `var`.
    pub fn substitute(&self, var: usize, value: &MPoly) -> MPoly {
        let coeffs = self.coeffs_in(var);
        // Horner
        let mut out = MPoly::zero();
        for c in coeffs.iter().rev() {
            out = &(&out * value) + c;
        }
        out
    }

    /// Evaluate every variable at the given rationals (missing ones at zero).
    pub fn eval(&self, point: &[BigRat]) -> BigRat {
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point.get(i).cloned().unwrap_or_else(BigRat::zero);
                t *= rat::pow(&x, e);
            }
            acc += t;
        }
        acc
    }

    /// Exact division. Fails with [`Error::InexactDivision`] if `divisor`
    /// does not divide `self`.
    pub fn div_exact(&self, divisor: &MPoly) -> Result<MPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Division by leading terms. The remainder is zero iff the division is
    /// exact; otherwise the quotient is not meaningful beyond that.
    pub fn div_rem(&self, divisor: &MPoly) -> Result<(MPoly, MPoly)> {
        let (lm, lc) = match divisor.leading_term() {
            None => return Err(Error::DivisionByZero),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        if divisor.is_constant() {
            return Ok((self.scale(&lc.recip()), MPoly::zero()));
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        let mut stuck = MPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            match m.div(&lm) {
                Some(qm) => {
                    let qc = c / &lc;
                    let t = MPoly::term(qc.clone(), qm.clone());
                    rem -= &(divisor * &t);
                    quot.add_term(qm, qc);
                }
                None => {
                    let (m, c) = (m.clone(), c.clone());
                    rem.terms.remove(&m);
                    stuck.add_term(m, c);
                }
            }
        }
        Ok((quot, stuck))
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                s.push('-');
            } else if idx > 0 {
                s.push('+');
            }
            let mono = fmt_monomial(m, names);
            if mono.is_empty() {
                s.push_str(&rat::fmt(&a));
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&rat::fmt(&a));
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

fn fmt_monomial(m: &Monomial, names: &[&str]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = names
            .get(i)
            .map(|s| s.to_string())
            .unwrap_or_else(|| format!("x{i}"));
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

/// Default names for the generating-function variables.
pub const UV: [&str; 2] = ["u", "v"];

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&UV))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self)
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::from_int(c)
    }
}

impl From<BigRat> for MPoly {
    fn from(c: BigRat) -> Self {
        MPoly::constant(c)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> MPoly {
        MPoly::var(0)
    }
    fn v() -> MPoly {
        MPoly::var(1)
    }

    #[test]
    fn graded_order_puts_higher_degree_last() {
        let a = Monomial::new(&[3]);
        let b = Monomial::new(&[0, 2]);
        let c = Monomial::new(&[1, 1]);
        assert!(b < a);
        assert!(c < b);
        assert!(Monomial::new(&[0, 1]) > Monomial::new(&[1]));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(Monomial::new(&[1, 0, 0]), Monomial::new(&[1]));
        assert_eq!(Monomial::new(&[0, 0]), Monomial::one());
    }

    #[test]
    fn display_is_ascending() {
        let p = &(&MPoly::one() - &u().pow(2)) + &v().scale(&rat::frac(3, 2));
        assert_eq!(p.to_string(), "1+3/2*v-u^2");
        assert_eq!(MPoly::zero().to_string(), "0");
        let q = &u() * &v();
        assert_eq!(q.fmt_with(&["a", "b"]), "a*b");
    }

    #[test]
    fn exact_division() {
        let a = &u() - &MPoly::one();
        let b = &u() + &v();
        let p = &a * &b;
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert_eq!(
            p.div_exact(&(&u() + &MPoly::from_int(2))),
            Err(Error::InexactDivision)
        );
        assert_eq!(p.div_exact(&MPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn coefficient_split_round_trips() {
        let p = &(&u().pow(3) * &v()) + &(&v().pow(2) - &u());
        let cs = p.coeffs_in(1);
        assert_eq!(cs.len(), 3);
        assert_eq!(MPoly::from_coeffs_in(1, &cs), p);
    }

    #[test]
    fn substitution_and_derivative() {
        let p = &u().pow(2) + &u();
        let q = p.substitute(0, &(&v() + &MPoly::one()));
        assert_eq!(
            q,
            &(&v().pow(2) + &v().scale(&rat::int(3))) + &MPoly::from_int(2)
        );
        assert_eq!(p.derivative(0), &u().scale(&rat::int(2)) + &MPoly::one());
    }
}
