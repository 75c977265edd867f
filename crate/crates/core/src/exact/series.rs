use std::ops::{Add, Mul};

use num_traits::Zero;

use super::{BigRat, MPoly, Monomial, RatFun};
use crate::error::{Error, Result};

/// Truncated bivariate power series: `coeffs[i][j]` is the coefficient of
/// `u^i v^j` for `i <= max_u`, `j <= max_v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesBox {
    coeffs: Vec<Vec<BigRat>>,
    max_u: usize,
    max_v: usize,
}

impl SeriesBox {
    pub fn zeros(max_u: usize, max_v: usize) -> Self {
        SeriesBox {
            coeffs: vec![vec![BigRat::zero(); max_v + 1]; max_u + 1],
            max_u,
            max_v,
        }
    }

    pub fn max_u(&self) -> usize {
        self.max_u
    }

    pub fn max_v(&self) -> usize {
        self.max_v
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRat {
        &self.coeffs[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: BigRat) {
        self.coeffs[i][j] = c;
    }

    /// Iterate over `((i, j), coefficient)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &BigRat)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, c)| ((i, j), c)))
    }

    /// The series of a polynomial, truncated.
    pub fn from_poly(p: &MPoly, max_u: usize, max_v: usize) -> Result<Self> {
        let mut s = Self::zeros(max_u, max_v);
        for (m, c) in p.terms() {
            if m.arity() > 2 {
                return Err(Error::Consistency(
                    "series expansion only in the first two variables".into(),
                ));
            }
            let (i, j) = (m.exp(0) as usize, m.exp(1) as usize);
            if i <= max_u && j <= max_v {
                s.coeffs[i][j] = c.clone();
            }
        }
        Ok(s)
    }

    /// The polynomial obtained by forgetting the truncation.
    pub fn to_poly(&self) -> MPoly {
        MPoly::from_terms(
            self.iter()
                .map(|((i, j), c)| (Monomial::new(&[i as u32, j as u32]), c.clone())),
        )
    }

    /// First coefficient (row-major) where the two series differ.
    pub fn first_difference(&self, other: &SeriesBox) -> Option<(usize, usize)> {
        let mu = self.max_u.min(other.max_u);
        let mv = self.max_v.min(other.max_v);
        for i in 0..=mu {
            for j in 0..=mv {
                if self.coeffs[i][j] != other.coeffs[i][j] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn check_shape(&self, other: &SeriesBox) {
        assert!(
            self.max_u == other.max_u && self.max_v == other.max_v,
            "series cutoffs differ"
        );
    }
}

impl Add for &SeriesBox {
    type Output = SeriesBox;
    fn add(self, rhs: &SeriesBox) -> SeriesBox {
        self.check_shape(rhs);
        let mut out = self.clone();
        for i in 0..=self.max_u {
            for j in 0..=self.max_v {
                out.coeffs[i][j] += &rhs.coeffs[i][j];
            }
        }
        out
    }
}

impl Mul for &SeriesBox {
    type Output = SeriesBox;
    fn mul(self, rhs: &SeriesBox) -> SeriesBox {
        self.check_shape(rhs);
        let mut out = SeriesBox::zeros(self.max_u, self.max_v);
        for a in 0..=self.max_u {
            for b in 0..=self.max_v {
                let x = &self.coeffs[a][b];
                if x.is_zero() {
                    continue;
                }
                for c in 0..=(self.max_u - a) {
                    for d in 0..=(self.max_v - b) {
                        let y = &rhs.coeffs[c][d];
                        if !y.is_zero() {
                            out.coeffs[a + c][b + d] += x * y;
                        }
                    }
                }
            }
        }
        out
    }
}

/// Power-series expansion of `f` about the origin, up to `u^max_u v^max_v`.
pub fn series_expand(f: &RatFun, max_u: usize, max_v: usize) -> Result<SeriesBox> {
    let den = f.den();
    let c0 = den.constant_term();
    if c0.is_zero() {
        return Err(Error::NotExpandable);
    }
    let num = SeriesBox::from_poly(f.num(), max_u, max_v)?;
    let den_terms: Vec<((usize, usize), BigRat)> = den
        .terms()
        .filter(|(m, _)| !m.is_one())
        .map(|(m, c)| {
            if m.arity() > 2 {
                Err(Error::Consistency(
                    "series expansion only in the first two variables".into(),
                ))
            } else {
                Ok(((m.exp(0) as usize, m.exp(1) as usize), c.clone()))
            }
        })
        .collect::<Result<_>>()?;
    let inv0 = c0.recip();
    let mut out = SeriesBox::zeros(max_u, max_v);
    for i in 0..=max_u {
        for j in 0..=max_v {
            let mut acc = num.coeffs[i][j].clone();
            for ((a, b), c) in &den_terms {
                if *a <= i && *b <= j {
                    let prev = &out.coeffs[i - a][j - b];
                    if !prev.is_zero() {
                        acc -= c * prev;
                    }
                }
            }
            out.coeffs[i][j] = acc * &inv0;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_ratfun, rat, UV};

    fn r(s: &str) -> RatFun {
        parse_ratfun(s, &UV).unwrap()
    }

    #[test]
    fn geometric_series() {
        let s = series_expand(&r("1/(1-u^2)"), 4, 0).unwrap();
        let got: Vec<BigRat> = (0..=4).map(|i| s.get(i, 0).clone()).collect();
        let want: Vec<BigRat> = [1, 0, 1, 0, 1].iter().map(|&x| rat::int(x)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn c2_row_coefficient() {
        // 6*1 + 1*4: u^2 from the numerator times 1, plus 1 times 4u^2
        let s = series_expand(&r("(u^4+6u^2+1)/((1-u^2)^4(1-v)^6)"), 2, 0).unwrap();
        assert_eq!(s.get(2, 0), &rat::int(10));
    }

    #[test]
    fn not_expandable() {
        assert_eq!(
            series_expand(&r("1/u"), 3, 3).unwrap_err(),
            Error::NotExpandable
        );
    }

    #[test]
    fn multiplying_back_recovers_numerator() {
        let f = r("(1+u v)/((1-u)(1-u v^2)(2-v))");
        let s = series_expand(&f, 6, 5).unwrap();
        let d = SeriesBox::from_poly(f.den(), 6, 5).unwrap();
        let n = SeriesBox::from_poly(f.num(), 6, 5).unwrap();
        assert_eq!(&s * &d, n);
    }
}
