use std::ops::{Add, Mul, Sub};

use super::{gcd, MPoly, RatFun};
use crate::error::{Error, Result};

/// Square matrix over the rational function field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FMatrix {
    n: usize,
    entries: Vec<RatFun>,
}

impl FMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        FMatrix {
            n,
            entries: vec![RatFun::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                RatFun::one()
            } else {
                RatFun::zero()
            }
        })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> RatFun>(n: usize, mut f: F) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        FMatrix { n, entries }
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        Self::from_fn(n, |i, j| RatFun::from_int(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFun {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: RatFun) {
        self.entries[i * self.n + j] = x;
    }

    pub fn scale(&self, c: &RatFun) -> FMatrix {
        FMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn transpose(&self) -> FMatrix {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Row `i` of the matrix times `v`.
    pub fn row_times(&self, i: usize, v: &[RatFun]) -> RatFun {
        let mut acc = RatFun::zero();
        for (j, x) in v.iter().enumerate() {
            let a = self.get(i, j);
            if !a.is_zero() && !x.is_zero() {
                acc = &acc + &(a * x);
            }
        }
        acc
    }

    pub fn column(&self, j: usize) -> Vec<RatFun> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// Exact inverse. The error for a singular matrix carries its
    /// (vanishing) determinant.
    pub fn inverse(&self) -> Result<FMatrix> {
        let n = self.n;
        // Common denominator so that elimination runs over polynomials.
        let mut common = MPoly::one();
        for x in &self.entries {
            let g = gcd(&common, x.den());
            common = &common * &x.den().div_exact(&g)?;
        }
        let mut a: Vec<Vec<MPoly>> = (0..n)
            .map(|i| {
                let mut row: Vec<MPoly> = (0..n)
                    .map(|j| {
                        let x = self.get(i, j);
                        let f = common.div_exact(x.den()).expect("common multiple");
                        x.num() * &f
                    })
                    .collect();
                row.extend((0..n).map(|j| if i == j { MPoly::one() } else { MPoly::zero() }));
                row
            })
            .collect();
        fraction_free_gauss_jordan(&mut a).map_err(|e| match e {
            Error::SingularMatrix { .. } => Error::SingularMatrix {
                det: "0".to_string(),
            },
            other => other,
        })?;
        let common = RatFun::from_poly(common);
        let mut out = FMatrix::zeros(n);
        for (i, row) in a.iter().enumerate() {
            let d = row[i].clone();
            for j in 0..n {
                let x = RatFun::new(row[n + j].clone(), d.clone())?;
                out.set(i, j, &x * &common);
            }
        }
        Ok(out)
    }
}

/// In-place fraction-free Gauss-Jordan elimination on an `n x m` matrix
/// (`m >= n`). Afterwards the left block is diagonal and every entry is a
/// polynomial; dividing row `i` by its diagonal entry gives the reduced
/// row echelon form.
#[allow(clippy::needless_range_loop)]
fn fraction_free_gauss_jordan(a: &mut [Vec<MPoly>]) -> Result<()> {
    let n = a.len();
    let m = a[0].len();
    let mut prev = MPoly::one();
    for k in 0..n {
        let p = (k..n)
            .find(|&r| !a[r][k].is_zero())
            .ok_or(Error::SingularMatrix { det: "0".into() })?;
        a.swap(k, p);
        let pivot = a[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let aik = a[i][k].clone();
            for j in 0..m {
                if j == k {
                    continue;
                }
                let t = &(&pivot * &a[i][j]) - &(&aik * &a[k][j]);
                a[i][j] = if prev.is_one() {
                    t
                } else {
                    t.div_exact(&prev)?
                };
            }
            a[i][k] = MPoly::zero();
        }
        if k + 1 < n {
            prev = pivot;
        }
    }
    Ok(())
}

/// Determinant of a polynomial matrix by Bareiss elimination.
pub fn det_bareiss(rows: &[Vec<MPoly>]) -> MPoly {
    let n = rows.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut a = rows.to_vec();
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return MPoly::zero();
        };
        if p != k {
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

impl Mul for &FMatrix {
    type Output = FMatrix;
    fn mul(self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        FMatrix::from_fn(self.n, |i, j| {
            let mut acc = RatFun::zero();
            for k in 0..self.n {
                let a = self.get(i, k);
                let b = rhs.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }
}

impl Add for &FMatrix {
    type Output = FMatrix;
    fn add(self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        FMatrix::from_fn(self.n, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &FMatrix {
    type Output = FMatrix;
    fn sub(self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        FMatrix::from_fn(self.n, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_mpoly, parse_ratfun, UV};

    fn r(s: &str) -> RatFun {
        parse_ratfun(s, &UV).unwrap()
    }

    #[test]
    fn identity_inverse() {
        let i = FMatrix::identity(3);
        assert!(i.inverse().unwrap().is_identity());
    }

    #[test]
    fn one_by_one() {
        let m = FMatrix::from_fn(1, |_, _| r("1-v"));
        let inv = m.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &r("1/(1-v)"));
    }

    #[test]
    fn c2_factor_inverse() {
        // I - u^2 (N^2 - 2I) + u^4 I with N the C2 McKay matrix
        let n = FMatrix::from_ints(&[vec![0, 2], vec![2, 0]]);
        let two = FMatrix::identity(2).scale(&RatFun::from_int(2));
        let v2 = &(&n * &n) - &two;
        let m = &(&FMatrix::identity(2) - &v2.scale(&r("u^2")))
            + &FMatrix::identity(2).scale(&r("u^4"));
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
    }

    #[test]
    fn rational_entries() {
        let m = FMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => r("1/(1-u)"),
            (0, 1) => r("v"),
            (1, 0) => r("u/(1+v)"),
            _ => r("2"),
        });
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
    }

    #[test]
    fn singular() {
        let m = FMatrix::from_fn(2, |_, j| if j == 0 { r("u") } else { r("u v") });
        match m.inverse() {
            Err(Error::SingularMatrix { det }) => assert_eq!(det, "0"),
            other => panic!("expected singular, got {other:?}"),
        }
    }

    #[test]
    fn bareiss_determinant() {
        let p = |s: &str| parse_mpoly(s, &UV).unwrap();
        let m = vec![
            vec![p("u"), p("1"), p("0")],
            vec![p("1"), p("v"), p("1")],
            vec![p("0"), p("1"), p("u")],
        ];
        // u(uv - 1) - 1*(u) = u^2 v - 2u
        assert_eq!(det_bareiss(&m), p("u^2 v - 2u"));
        let swap = vec![vec![p("0"), p("1")], vec![p("1"), p("0")]];
        assert_eq!(det_bareiss(&swap), p("-1"));
    }
}
