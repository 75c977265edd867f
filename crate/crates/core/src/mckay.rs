//! McKay graphs and the matrix substitution that turns the representation
//! ring expression for a stratum into an explicit rational function.
//!
//! Multiplication by `V` on the irreducible basis of `R(Γ)` is the adjacency
//! matrix `N`; multiplication by a one-dimensional character `χ` is a
//! permutation matrix `P(χ)`. Inverses in `R(Γ)(u, v)` become matrix inverses
//! over the rational function field, and the dimension of invariants is the
//! (trivial, trivial) entry.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{FMatrix, MPoly, RatFun};
use crate::groups::{CharId, GroupId};

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McKayModel {
    pub group: GroupId,
    /// Irreducible labels, trivial first.
    pub labels: Vec<String>,
    pub dims: Vec<i64>,
    /// `N[i][j] = dim Hom(V ⊗ W_i, W_j)`.
    pub n: IntMatrix,
    /// `P(χ)[i][j] = dim Hom(χ ⊗ W_i, W_j)` for each one-dimensional character.
    pub perms: Vec<(CharId, IntMatrix)>,
}

impl McKayModel {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn perm(&self, chi: CharId) -> Result<&IntMatrix> {
        self.perms
            .iter()
            .find(|(c, _)| *c == chi)
            .map(|(_, p)| p)
            .ok_or_else(|| Error::CharacterUndefined {
                group: self.group.name(),
                chi: chi.name(),
            })
    }

    /// The Cartan matrix `A = 2I - N`.
    pub fn cartan(&self) -> IntMatrix {
        let r = self.size();
        (0..r)
            .map(|i| (0..r).map(|j| 2 * (i == j) as i64 - self.n[i][j]).collect())
            .collect()
    }
}

fn zeros(r: usize) -> IntMatrix {
    vec![vec![0; r]; r]
}

pub fn identity(r: usize) -> IntMatrix {
    let mut m = zeros(r);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let r = a.len();
    let mut out = zeros(r);
    for i in 0..r {
        for k in 0..r {
            if a[i][k] != 0 {
                for j in 0..r {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    let r = a.len();
    (0..r).map(|i| (0..r).map(|j| a[j][i]).collect()).collect()
}

fn lin(terms: &[(i64, &IntMatrix)]) -> IntMatrix {
    let r = terms[0].1.len();
    let mut out = zeros(r);
    for (c, m) in terms {
        for i in 0..r {
            for j in 0..r {
                out[i][j] += c * m[i][j];
            }
        }
    }
    out
}

fn undirected(r: usize, edges: &[(usize, usize)]) -> IntMatrix {
    let mut m = zeros(r);
    for &(a, b) in edges {
        m[a][b] += 1;
        m[b][a] += 1;
    }
    m
}

/// Permutation matrix of `i ↦ sigma[i]`.
fn perm_matrix(sigma: &[usize]) -> IntMatrix {
    let mut m = zeros(sigma.len());
    for (i, &j) in sigma.iter().enumerate() {
        m[i][j] = 1;
    }
    m
}

pub fn mckay_model(id: GroupId) -> Result<McKayModel> {
    let model = match id {
        GroupId::Cyclic(n) => cyclic(n as usize),
        GroupId::Quaternionic(q) => quaternionic((q / 4) as usize),
        GroupId::BinaryTetrahedral => {
            // [1, V, V2, χV, χ, χ²V, χ²]
            let labels = ["1", "V", "V2", "chiV", "chi", "chi^2V", "chi^2"];
            McKayModel {
                group: id,
                labels: labels.iter().map(|s| s.to_string()).collect(),
                dims: vec![1, 2, 3, 2, 1, 2, 1],
                n: undirected(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]),
                perms: vec![(CharId::Trivial, identity(7))],
            }
        }
        GroupId::BinaryOctahedral => {
            let labels = ["1", "V", "V2", "V3", "chiV2", "chiV", "chi", "W"];
            McKayModel {
                group: id,
                labels: labels.iter().map(|s| s.to_string()).collect(),
                dims: vec![1, 2, 3, 4, 3, 2, 1, 2],
                n: undirected(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]),
                perms: vec![
                    (CharId::Trivial, identity(8)),
                    (CharId::OctChi, perm_matrix(&[6, 5, 4, 3, 2, 1, 0, 7])),
                ],
            }
        }
        GroupId::BinaryIcosahedral => {
            let labels = ["1", "V", "V2", "V3", "V4", "V5", "V6", "V7", "V8"];
            McKayModel {
                group: id,
                labels: labels.iter().map(|s| s.to_string()).collect(),
                dims: vec![1, 2, 3, 4, 5, 6, 4, 2, 3],
                n: undirected(
                    9,
                    &[
                        (0, 1),
                        (1, 2),
                        (2, 3),
                        (3, 4),
                        (4, 5),
                        (5, 6),
                        (6, 7),
                        (5, 8),
                    ],
                ),
                perms: vec![(CharId::Trivial, identity(9))],
            }
        }
    };
    Ok(model)
}

fn cyclic(n: usize) -> McKayModel {
    let mut adj = zeros(n);
    for i in 0..n {
        adj[i][(i + 1) % n] += 1;
        adj[i][(i + n - 1) % n] += 1;
    }
    let perms = (0..n)
        .map(|m| {
            let chi = if m == 0 {
                CharId::Trivial
            } else {
                CharId::CyclicPower(m as u32)
            };
            let sigma: Vec<usize> = (0..n).map(|i| (i + m) % n).collect();
            (chi, perm_matrix(&sigma))
        })
        .collect();
    McKayModel {
        group: GroupId::Cyclic(n as u32),
        labels: (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "chi".to_string(),
                _ => format!("chi^{i}"),
            })
            .collect(),
        dims: vec![1; n],
        n: adj,
        perms,
    }
}

/// Vertices `[1, χ₀, V_[1], …, V_[n-1], χ₊, χ₋]`.
fn quaternionic(n: usize) -> McKayModel {
    let r = n + 3;
    let v = |i: usize| 1 + i;
    let (one, chi0, plus, minus) = (0, 1, n + 1, n + 2);
    let mut edges = vec![(one, v(1)), (chi0, v(1))];
    for i in 1..n - 1 {
        edges.push((v(i), v(i + 1)));
    }
    edges.push((v(n - 1), plus));
    edges.push((v(n - 1), minus));

    let mut labels = vec!["1".to_string(), "chi0".to_string()];
    labels.extend((1..n).map(|i| format!("V[{i}]")));
    labels.push("chi+".into());
    labels.push("chi-".into());
    let mut dims = vec![1, 1];
    dims.extend(std::iter::repeat_n(2, n - 1));
    dims.extend([1, 1]);

    // χ₊² is trivial for even n and χ₀ for odd n
    let (plus_sq, minus_plus) = if n.is_multiple_of(2) {
        (one, chi0)
    } else {
        (chi0, one)
    };
    let mut p0: Vec<usize> = (0..r).collect();
    p0[one] = chi0;
    p0[chi0] = one;
    p0[plus] = minus;
    p0[minus] = plus;
    let mut pp: Vec<usize> = (0..r).collect();
    pp[one] = plus;
    pp[chi0] = minus;
    pp[plus] = plus_sq;
    pp[minus] = minus_plus;
    for i in 1..n {
        pp[v(i)] = v(n - i);
    }
    let p_plus = perm_matrix(&pp);
    let p_zero = perm_matrix(&p0);
    let p_minus = mat_mul(&p_zero, &p_plus);

    McKayModel {
        group: GroupId::Quaternionic(4 * n as u32),
        labels,
        dims,
        n: undirected(r, &edges),
        perms: vec![
            (CharId::Trivial, identity(r)),
            (CharId::Chi0, p_zero),
            (CharId::ChiPlus, p_plus),
            (CharId::ChiMinus, p_minus),
        ],
    }
}

/// Exact determinant of an integer matrix by Bareiss elimination.
fn int_det(a: &IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| m[r][k] != BigInt::from(0)) else {
            return BigInt::from(0);
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    &m[n - 1][n - 1] * sign
}

/// `A = 2I - N` is positive semi-definite with one-dimensional null space
/// spanned by the dimension vector.
///
/// `A·dims = 0` gives the null vector; positive definiteness of the block
/// with the trivial vertex removed (all leading minors positive) bounds the
/// nullity by one and forces the remaining eigenvalues to be positive.
pub fn cartan_check(m: &McKayModel) -> bool {
    let a = m.cartan();
    let r = m.size();
    let symmetric = (0..r).all(|i| (0..r).all(|j| m.n[i][j] == m.n[j][i]));
    let null = a
        .iter()
        .all(|row| row.iter().zip(&m.dims).map(|(x, d)| x * d).sum::<i64>() == 0);
    let reduced: IntMatrix = a[1..].iter().map(|row| row[1..].to_vec()).collect();
    let definite = (1..r).all(|k| {
        let minor: IntMatrix = reduced[..k].iter().map(|row| row[..k].to_vec()).collect();
        int_det(&minor).is_positive()
    });
    symmetric && null && definite
}

/// Each `P(χ)` is a permutation matrix commuting with `N`.
pub fn permutations_commute(m: &McKayModel) -> bool {
    m.perms.iter().all(|(_, p)| {
        let is_perm = p.iter().all(|row| {
            row.iter().filter(|&&x| x == 1).count() == 1 && row.iter().all(|&x| x == 0 || x == 1)
        }) && transpose(p).iter().all(|col| col.iter().sum::<i64>() == 1);
        is_perm && mat_mul(&m.n, p) == mat_mul(p, &m.n)
    })
}

/// `Σ_k c_k(var) M_k` as a matrix over the rational function field, where
/// `c_k` is the univariate polynomial with the given coefficients.
fn poly_matrix(var: usize, terms: &[(&[i64], &IntMatrix)]) -> FMatrix {
    let r = terms[0].1.len();
    FMatrix::from_fn(r, |i, j| {
        let mut p = MPoly::zero();
        for (coeffs, m) in terms {
            if m[i][j] != 0 {
                p = &p + &MPoly::univariate(var, coeffs).scale(&crate::exact::rat::int(m[i][j]));
            }
        }
        RatFun::from_poly(p)
    })
}

fn row_times(v: &[RatFun], m: &FMatrix) -> Vec<RatFun> {
    let mt = m.transpose();
    (0..m.dim()).map(|i| mt.row_times(i, v)).collect()
}

fn times_col(m: &FMatrix, v: &[RatFun]) -> Vec<RatFun> {
    (0..m.dim()).map(|i| m.row_times(i, v)).collect()
}

/// The bivariate invariant series `Σ u^k v^ℓ dim(S^k V(1) ⊗ S^ℓ Λ²V(1))^{Γ(ρ)}`.
pub fn stratum_series_mckay(id: GroupId, rho: CharId) -> Result<RatFun> {
    let m = mckay_model(id)?;
    let r = m.size();
    let i = identity(r);
    let p = m.perm(rho)?.clone();
    let pt = transpose(&p);
    let n2 = mat_mul(&m.n, &m.n);
    let n2m = lin(&[(1, &n2), (-2, &i)]);
    let n2p = mat_mul(&n2m, &p);
    let n2pt = mat_mul(&n2m, &pt);
    let p2 = mat_mul(&p, &p);
    let pt2 = mat_mul(&pt, &pt);
    let num_mid = lin(&[(1, &n2), (1, &p), (1, &pt)]);

    // u-part: Num(u) · D1(u)⁻¹ · D2(u)⁻¹, only row 0 is needed
    let num = poly_matrix(
        0,
        &[(&[1], &i), (&[0, 0, 1], &num_mid), (&[0, 0, 0, 0, 1], &i)],
    );
    let d1 = poly_matrix(
        0,
        &[(&[1], &i), (&[0, 0, -1], &n2p), (&[0, 0, 0, 0, 1], &p2)],
    );
    let d2 = poly_matrix(
        0,
        &[(&[1], &i), (&[0, 0, -1], &n2pt), (&[0, 0, 0, 0, 1], &pt2)],
    );
    let e0: Vec<RatFun> = (0..r)
        .map(|j| {
            if j == 0 {
                RatFun::one()
            } else {
                RatFun::zero()
            }
        })
        .collect();
    let mut row = row_times(&e0, &num);
    row = row_times(&row, &d1.inverse()?);
    row = row_times(&row, &d2.inverse()?);

    // v-part: D3(v)⁻¹ · D4(v)⁻¹ · D5(v)⁻¹, only column 0 is needed
    let d3 = poly_matrix(1, &[(&[1], &i), (&[0, -1], &n2m), (&[0, 0, 1], &i)]);
    let d4 = poly_matrix(1, &[(&[1], &i), (&[0, -1], &p)]);
    let d5 = poly_matrix(1, &[(&[1], &i), (&[0, -1], &pt)]);
    let mut col = times_col(&d5.inverse()?, &e0);
    col = times_col(&d4.inverse()?, &col);
    col = times_col(&d3.inverse()?, &col);

    let mut acc = RatFun::zero();
    for (a, b) in row.iter().zip(&col) {
        if !a.is_zero() && !b.is_zero() {
            acc = &acc + &(a * b);
        }
    }
    let one_minus_v = RatFun::from_poly(MPoly::univariate(1, &[1, -1]));
    acc.div(&one_minus_v.pow(2)?)
}

/// `Σ_k u^k dim(S^k C²)^{C_n}`, the (trivial, trivial) entry of
/// `(I - uN + u²I)⁻¹` on the circulant McKay graph.
pub fn cyclic_genus1_series(n: u32) -> Result<RatFun> {
    let m = mckay_model(GroupId::Cyclic(n))?;
    let i = identity(m.size());
    let d = poly_matrix(0, &[(&[1], &i), (&[0, -1], &m.n), (&[0, 0, 1], &i)]);
    Ok(d.inverse()?.get(0, 0).clone())
}

/// `(1 + u^n) / ((1 - u²)(1 - u^n))`.
pub fn cyclic_genus1_closed_form(n: u32) -> RatFun {
    let n = n as usize;
    let mut top = vec![0i64; n + 1];
    top[0] = 1;
    top[n] = 1;
    let mut bottom = vec![0i64; n + 1];
    bottom[0] = 1;
    bottom[n] = -1;
    let num = MPoly::univariate(0, &top);
    let den = &MPoly::univariate(0, &[1, 0, -1]) * &MPoly::univariate(0, &bottom);
    RatFun::new(num, den).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_ratfun, series_expand, UV};

    #[test]
    fn c2_model() {
        let m = mckay_model(GroupId::Cyclic(2)).unwrap();
        assert_eq!(m.n, vec![vec![0, 2], vec![2, 0]]);
        assert!(cartan_check(&m));
    }

    #[test]
    fn q8_model() {
        let m = mckay_model(GroupId::Quaternionic(8)).unwrap();
        assert_eq!(m.size(), 5);
        assert_eq!(m.dims, vec![1, 1, 2, 1, 1]);
        for j in [0, 1, 3, 4] {
            assert_eq!(m.n[2][j], 1);
        }
        assert!(cartan_check(&m));
    }

    #[test]
    fn all_cartan_checks_pass() {
        for id in GroupId::CATALOG {
            let m = mckay_model(id).unwrap();
            assert!(cartan_check(&m), "{id}");
            assert!(permutations_commute(&m), "{id}");
            let order: i64 = m.dims.iter().map(|d| d * d).sum();
            assert_eq!(order as usize, id.order(), "{id}");
        }
        let o = mckay_model(GroupId::BinaryOctahedral).unwrap();
        assert_eq!(o.dims, vec![1, 2, 3, 4, 3, 2, 1, 2]);
    }

    #[test]
    fn cartan_check_rejects_wrong_dims() {
        let mut m = mckay_model(GroupId::BinaryOctahedral).unwrap();
        m.dims[7] = 1;
        assert!(!cartan_check(&m));
        let mut m = mckay_model(GroupId::Cyclic(4)).unwrap();
        m.n[0][1] = 2;
        m.n[1][0] = 2;
        assert!(!cartan_check(&m));
    }

    #[test]
    fn quaternionic_character_products() {
        for q in [8, 12, 24] {
            let m = mckay_model(GroupId::Quaternionic(q)).unwrap();
            let p0 = m.perm(CharId::Chi0).unwrap();
            let pp = m.perm(CharId::ChiPlus).unwrap();
            let pm = m.perm(CharId::ChiMinus).unwrap();
            assert_eq!(&mat_mul(p0, pp), pm);
            assert_eq!(mat_mul(p0, p0), identity(m.size()));
        }
    }

    #[test]
    fn c2_stratum() {
        let f = stratum_series_mckay(GroupId::Cyclic(2), CharId::Trivial).unwrap();
        let want = parse_ratfun("(u^4+6u^2+1)/((1-u^2)^4(1-v)^6)", &UV).unwrap();
        assert_eq!(f, want);
    }

    #[test]
    fn c4_stratum() {
        let f = stratum_series_mckay(GroupId::Cyclic(4), CharId::CyclicPower(2)).unwrap();
        let want = parse_ratfun(
            "((u^2+1)^2(v^4+6v^2+1)+16u^2(v^3+v))/((1-u^2)^4(1-v)^2(1-v^2)^4)",
            &UV,
        )
        .unwrap();
        assert_eq!(f, want);
    }

    #[test]
    fn c10_constant_term() {
        let f = stratum_series_mckay(GroupId::Cyclic(10), CharId::CyclicPower(6)).unwrap();
        let s = series_expand(&f, 0, 0).unwrap();
        assert_eq!(s.get(0, 0), &crate::exact::rat::int(1));
    }

    #[test]
    fn genus_one_series() {
        for n in [2, 4, 6] {
            assert_eq!(
                cyclic_genus1_series(n).unwrap(),
                cyclic_genus1_closed_form(n),
                "n={n}"
            );
        }
        let two = parse_ratfun("(1+u^2)/((1-u^2)(1-u^2))", &UV).unwrap();
        assert_eq!(cyclic_genus1_series(2).unwrap(), two);
    }
}
