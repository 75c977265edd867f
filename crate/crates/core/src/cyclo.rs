//! Arithmetic in the cyclotomic field `Q(ζ)` with `ζ = exp(2πi/120)`.
//!
//! Elements are residues modulo the 120th cyclotomic polynomial in the
//! power basis `1, ζ, …, ζ^31`. Every root of unity of order dividing 120
//! lives here, which covers all Kleinian groups in the catalog.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{cyclotomic_coeffs, rat, BigRat};

/// Order of the ambient group of roots of unity.
pub const N: u32 = 120;
/// Degree of the field, `φ(120)`.
pub const DEGREE: usize = 32;

/// Integer coefficients of the 120th cyclotomic polynomial, lowest first.
fn phi() -> &'static [i64] {
    static PHI: OnceLock<Vec<i64>> = OnceLock::new();
    PHI.get_or_init(|| cyclotomic_polynomial(N as usize))
}

/// `Φ_n` by dividing `x^n - 1` by `Φ_d` for the proper divisors `d`.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    cyclotomic_coeffs(n)
}

/// Element of `Q(ζ_120)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    coeffs: Vec<BigRat>,
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo {
            coeffs: vec![BigRat::zero(); DEGREE],
        }
    }

    pub fn one() -> Self {
        Self::from_rat(BigRat::one())
    }

    pub fn from_rat(c: BigRat) -> Self {
        let mut z = Self::zero();
        z.coeffs[0] = c;
        z
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rat(rat::int(c))
    }

    /// `ζ_120^e` for any integer exponent.
    pub fn root(e: i64) -> Self {
        let e = e.rem_euclid(N as i64) as usize;
        powers_table()[e].clone()
    }

    /// Reduce an arbitrary coefficient vector modulo `Φ_120`.
    pub fn from_coeffs(mut c: Vec<BigRat>) -> Self {
        let phi = phi();
        for top in (DEGREE..c.len()).rev() {
            let lead = std::mem::take(&mut c[top]);
            if lead.is_zero() {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate().take(DEGREE) {
                if pj != 0 {
                    c[top - DEGREE + j] -= &lead * rat::int(pj);
                }
            }
        }
        c.resize(DEGREE, BigRat::zero());
        Cyclo { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRat> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, c: &BigRat) -> Cyclo {
        Cyclo {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Cyclo> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Cyclo::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// `Φ_120` in `Q[x]`.
    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<BigRat> = phi().iter().map(|&c| rat::int(c)).collect();
        let (g, s) = ext_gcd(&self.coeffs, &modulus);
        // g is a nonzero constant because Φ_120 is irreducible
        let g0 = g[0].clone();
        Ok(Cyclo::from_coeffs(s).scale(&g0.recip()))
    }

    /// If this element is a root of unity `ζ_120^e`, the exponent `e` in `0..120`.
    pub fn root_exponent(&self) -> Option<u32> {
        powers_table()
            .iter()
            .position(|z| z == self)
            .map(|e| e as u32)
    }

    /// Complex conjugate (`ζ ↦ ζ^{-1}`).
    pub fn conj(&self) -> Cyclo {
        let mut acc = Cyclo::zero();
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &Cyclo::root(-(e as i64)).scale(c);
            }
        }
        acc
    }
}

fn powers_table() -> &'static [Cyclo] {
    static TABLE: OnceLock<Vec<Cyclo>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..N as usize)
            .map(|e| {
                let mut c = vec![BigRat::zero(); e.max(DEGREE) + 1];
                c[e] = BigRat::one();
                Cyclo::from_coeffs(c)
            })
            .collect()
    })
}

fn poly_trim(p: &mut Vec<BigRat>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_divrem(a: &[BigRat], b: &[BigRat]) -> (Vec<BigRat>, Vec<BigRat>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() <= db {
        return (vec![BigRat::zero()], r);
    }
    let mut q = vec![BigRat::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lb;
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    poly_trim(&mut r);
    (q, r)
}

fn poly_mul(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    let mut out = vec![BigRat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(&mut out);
    out
}

/// Returns `(g, s)` with `s*a ≡ g (mod m)`.
fn ext_gcd(a: &[BigRat], m: &[BigRat]) -> (Vec<BigRat>, Vec<BigRat>) {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    poly_trim(&mut r1);
    let mut s0 = vec![BigRat::zero()];
    let mut s1 = vec![BigRat::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

/// `ζ_n = ζ_120^(120/n)`, a primitive `n`th root of unity.
pub fn zeta(n: u32) -> Result<Cyclo> {
    if n == 0 || !N.is_multiple_of(n) {
        return Err(Error::RootNotRepresentable(n));
    }
    Ok(Cyclo::root((N / n) as i64))
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &'a Cyclo) -> Cyclo {
        Cyclo {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &'a Cyclo) -> Cyclo {
        Cyclo {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &'a Cyclo) -> Cyclo {
        let mut prod = vec![BigRat::zero(); 2 * DEGREE - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclo::from_coeffs(prod)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| match e {
                0 => rat::fmt(c),
                1 => format!("{}*z", rat::fmt(c)),
                _ => format!("{}*z^{e}", rat::fmt(c)),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "Cyclo(0)")
        } else {
            write!(f, "Cyclo({})", terms.join(" + "))
        }
    }
}

/// 2x2 matrix over `Q(ζ_120)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CMat2 {
    pub a: [[Cyclo; 2]; 2],
}

impl CMat2 {
    pub fn new(a00: Cyclo, a01: Cyclo, a10: Cyclo, a11: Cyclo) -> Self {
        CMat2 {
            a: [[a00, a01], [a10, a11]],
        }
    }

    pub fn identity() -> Self {
        Self::new(Cyclo::one(), Cyclo::zero(), Cyclo::zero(), Cyclo::one())
    }

    pub fn minus_identity() -> Self {
        Self::new(
            Cyclo::from_int(-1),
            Cyclo::zero(),
            Cyclo::zero(),
            Cyclo::from_int(-1),
        )
    }

    pub fn diag(x: Cyclo, y: Cyclo) -> Self {
        Self::new(x, Cyclo::zero(), Cyclo::zero(), y)
    }

    pub fn det(&self) -> Cyclo {
        &(&self.a[0][0] * &self.a[1][1]) - &(&self.a[0][1] * &self.a[1][0])
    }

    pub fn trace(&self) -> Cyclo {
        &self.a[0][0] + &self.a[1][1]
    }

    pub fn scale(&self, c: &Cyclo) -> CMat2 {
        CMat2 {
            a: [
                [&self.a[0][0] * c, &self.a[0][1] * c],
                [&self.a[1][0] * c, &self.a[1][1] * c],
            ],
        }
    }

    /// Inverse of a determinant-one matrix (the adjugate).
    pub fn inverse_sl2(&self) -> CMat2 {
        Self::new(
            self.a[1][1].clone(),
            -&self.a[0][1],
            -&self.a[1][0],
            self.a[0][0].clone(),
        )
    }

    pub fn pow(&self, e: u32) -> CMat2 {
        let mut acc = CMat2::identity();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative order, if at most `limit`.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let id = CMat2::identity();
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc == id {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }
}

impl<'a> Mul<&'a CMat2> for &'a CMat2 {
    type Output = CMat2;
    fn mul(self, rhs: &'a CMat2) -> CMat2 {
        let e =
            |i: usize, j: usize| &(&self.a[i][0] * &rhs.a[0][j]) + &(&self.a[i][1] * &rhs.a[1][j]);
        CMat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

/// An eigenvalue `λ` of a finite-order determinant-one matrix: the root of
/// unity with `λ + λ⁻¹ = trace`, smallest exponent of `ζ_120` first.
pub fn eigenvalue_of(m: &CMat2) -> Result<Cyclo> {
    eigenvalue_exponent(m).map(|e| Cyclo::root(e as i64))
}

/// Exponent `e` of the eigenvalue `ζ_120^e` chosen by [`eigenvalue_of`].
pub fn eigenvalue_exponent(m: &CMat2) -> Result<u32> {
    if !m.det().is_one() {
        return Err(Error::ElementOrderNotSupported);
    }
    let tr = m.trace();
    (0..N)
        .find(|&e| &Cyclo::root(e as i64) + &Cyclo::root(-(e as i64)) == tr)
        .ok_or(Error::ElementOrderNotSupported)
}

/// Sum of roots of unity `Σ c_e ζ^e`, kept as an integer vector indexed by
/// exponent mod 120. Products and sums stay in this ring; [`RootSum::reduce`]
/// maps into the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSum(pub Vec<i64>);

impl RootSum {
    pub fn zero() -> Self {
        RootSum(vec![0; N as usize])
    }

    pub fn root(e: i64) -> Self {
        let mut r = Self::zero();
        r.0[e.rem_euclid(N as i64) as usize] = 1;
        r
    }

    /// Multiply by `ζ^e`.
    pub fn rotate(&self, e: i64) -> RootSum {
        let n = N as usize;
        let s = e.rem_euclid(N as i64) as usize;
        let mut out = vec![0; n];
        for (i, &c) in self.0.iter().enumerate() {
            out[(i + s) % n] = c;
        }
        RootSum(out)
    }

    pub fn add_assign(&mut self, other: &RootSum) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    /// Image in the power basis with integer coefficients.
    pub fn reduce(&self) -> CycloInt {
        let table = int_powers_table();
        let mut out = [0i64; DEGREE];
        for (e, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (k, &t) in table[e].iter().enumerate() {
                out[k] += c * t;
            }
        }
        CycloInt(out)
    }
}

fn int_powers_table() -> &'static [[i64; DEGREE]] {
    static TABLE: OnceLock<Vec<[i64; DEGREE]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        powers_table()
            .iter()
            .map(|z| {
                let mut row = [0i64; DEGREE];
                for (k, c) in z.coeffs.iter().enumerate() {
                    row[k] = rat::to_i64(c).expect("powers of ζ have integer coordinates");
                }
                row
            })
            .collect()
    })
}

/// Algebraic integer of `Z[ζ_120]` in the power basis, with machine-word
/// coefficients. Used in hot loops where every value is a sum of roots of
/// unity; overflow is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycloInt(pub [i64; DEGREE]);

impl CycloInt {
    pub fn zero() -> Self {
        CycloInt([0; DEGREE])
    }

    pub fn mul(&self, other: &CycloInt) -> CycloInt {
        let mut prod = [0i64; 2 * DEGREE - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                if b != 0 {
                    prod[i + j] = prod[i + j]
                        .checked_add(a.checked_mul(b).expect("overflow in Z[ζ] product"))
                        .expect("overflow in Z[ζ] product");
                }
            }
        }
        let phi = phi();
        for top in (DEGREE..prod.len()).rev() {
            let lead = prod[top];
            if lead == 0 {
                continue;
            }
            prod[top] = 0;
            for (j, &pj) in phi.iter().enumerate().take(DEGREE) {
                if pj != 0 {
                    prod[top - DEGREE + j] -= lead * pj;
                }
            }
        }
        let mut out = [0i64; DEGREE];
        out.copy_from_slice(&prod[..DEGREE]);
        CycloInt(out)
    }

    pub fn add_assign(&mut self, other: &CycloInt) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("overflow in Z[ζ] sum");
        }
    }

    pub fn scale(&self, k: i64) -> CycloInt {
        let mut out = *self;
        for a in out.0.iter_mut() {
            *a = a.checked_mul(k).expect("overflow in Z[ζ] scale");
        }
        out
    }

    pub fn to_cyclo(&self) -> Cyclo {
        Cyclo {
            coeffs: self.0.iter().map(|&c| rat::int(c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_120_is_phi_30_of_x4() {
        let mut want = vec![0i64; 33];
        for (e, c) in [
            (32, 1),
            (28, 1),
            (20, -1),
            (16, -1),
            (12, -1),
            (4, 1),
            (0, 1),
        ] {
            want[e] = c;
        }
        assert_eq!(phi(), &want[..]);
    }

    #[test]
    fn small_roots() {
        assert!(zeta(1).unwrap().is_one());
        assert_eq!(zeta(2).unwrap(), Cyclo::from_int(-1));
        assert_eq!(zeta(7).unwrap_err(), Error::RootNotRepresentable(7));
    }

    #[test]
    fn sqrt_two_from_eighth_roots() {
        let z = zeta(8).unwrap();
        let s = &z - &z.pow(3).unwrap();
        assert_eq!(&s * &s, Cyclo::from_int(2));
    }

    #[test]
    fn orders_are_exact() {
        for n in (1..=120u32).filter(|n| 120 % n == 0) {
            let z = zeta(n).unwrap();
            assert!(z.pow(n as i64).unwrap().is_one(), "n={n}");
            for k in 1..n {
                assert!(!z.pow(k as i64).unwrap().is_one(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn inverse_of_non_root() {
        let x = &Cyclo::from_int(2) + &zeta(5).unwrap();
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(Cyclo::zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn eigenvalues() {
        assert!(eigenvalue_of(&CMat2::identity()).unwrap().is_one());
        let u = CMat2::new(
            Cyclo::zero(),
            Cyclo::one(),
            Cyclo::from_int(-1),
            Cyclo::zero(),
        );
        assert_eq!(eigenvalue_of(&u).unwrap(), zeta(4).unwrap());
        let e12 = zeta(12).unwrap();
        let s = CMat2::diag(e12.clone(), e12.inv().unwrap());
        assert_eq!(eigenvalue_of(&s).unwrap(), e12);
        let bad = CMat2::diag(Cyclo::from_int(2), Cyclo::from_int(2));
        assert_eq!(
            eigenvalue_of(&bad).unwrap_err(),
            Error::ElementOrderNotSupported
        );
    }

    #[test]
    fn integer_arithmetic_matches_field() {
        let a = RootSum::root(7);
        let mut b = RootSum::root(50);
        b.add_assign(&RootSum::root(-3));
        let prod = a.reduce().mul(&b.reduce()).to_cyclo();
        let want = &Cyclo::root(57) + &Cyclo::root(4);
        assert_eq!(prod, want);
        assert_eq!(RootSum::root(119).rotate(2), RootSum::root(1));
    }

    #[test]
    fn conjugation() {
        let z = zeta(5).unwrap();
        assert_eq!(z.conj(), z.inv().unwrap());
        assert_eq!(z.root_exponent(), Some(24));
    }
}
