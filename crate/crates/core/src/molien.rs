//! Independent oracle for the stratum series: a direct average over the
//! elements of `Γ(ρ)` of the eigenvalue products that give the characters of
//! `S^k V(1)` and `S^ℓ Λ²V(1)`.
//!
//! An element `(γ, w)` with `γ` of eigenvalues `λ^{±1}` acts on `V(1)` with
//! eigenvalues `E = {wλ, wλ⁻¹, w⁻¹λ, w⁻¹λ⁻¹}`. The trace on `S^k V(1)` is
//! the complete homogeneous polynomial `h_k(E)`, and on `S^ℓ Λ²V(1)` it is
//! `h_ℓ` of the pairwise products `{w², w⁻², λ², λ⁻², 1, 1}`. All values are
//! sums of roots of unity and are accumulated in `Z[ζ_120]`.

use std::collections::HashMap;

use crate::cyclo::{eigenvalue_exponent, CycloInt, RootSum, N};
use crate::error::{Error, Result};
use crate::exact::{rat, BigRat, SeriesBox};
use crate::groups::{group, CharId, GroupId};

/// `[h_0(E), …, h_max(E)]` for a multiset of roots of unity given by exponents.
fn complete_homogeneous(exps: &[i64], max: usize) -> Vec<CycloInt> {
    let mut h: Vec<RootSum> = (0..=max)
        .map(|k| {
            if k == 0 {
                RootSum::root(0)
            } else {
                RootSum::zero()
            }
        })
        .collect();
    // multiply by 1/(1 - a t) for each a
    for &a in exps {
        for k in 1..=max {
            let prev = h[k - 1].rotate(a);
            h[k].add_assign(&prev);
        }
    }
    h.iter().map(RootSum::reduce).collect()
}

/// Divide an accumulated `Z[ζ]` sum by the group order, requiring a
/// non-negative rational integer.
fn average(sum: &CycloInt, count: usize, at: (usize, usize)) -> Result<BigRat> {
    let non_rational = sum.0[1..].iter().any(|&c| c != 0);
    let c0 = sum.0[0];
    if non_rational || c0 % count as i64 != 0 || c0 < 0 {
        return Err(Error::Consistency(format!(
            "invariant dimension at u^{} v^{} is not a non-negative integer",
            at.0, at.1
        )));
    }
    Ok(rat::int(c0 / count as i64))
}

/// The truncated series `Σ u^k v^ℓ dim(S^k V(1) ⊗ S^ℓ Λ²V(1))^{Γ(ρ)}`.
pub fn molien_series_g2(id: GroupId, rho: CharId, max_u: usize, max_v: usize) -> Result<SeriesBox> {
    molien_g2_impl(id, rho, max_u, max_v, false)
}

/// Same as [`molien_series_g2`] but with each eigenvalue `λ` replaced by `λ⁻¹`.
pub fn molien_series_g2_inverted(
    id: GroupId,
    rho: CharId,
    max_u: usize,
    max_v: usize,
) -> Result<SeriesBox> {
    molien_g2_impl(id, rho, max_u, max_v, true)
}

fn molien_g2_impl(
    id: GroupId,
    rho: CharId,
    max_u: usize,
    max_v: usize,
    invert: bool,
) -> Result<SeriesBox> {
    let g = group(id)?;
    let ext = g.extended_elements(rho)?;
    let lambdas: Vec<i64> = g
        .elements
        .iter()
        .map(|m| {
            let e = eigenvalue_exponent(m)? as i64;
            Ok(if invert { -e } else { e })
        })
        .collect::<Result<_>>()?;

    // terms depend only on the pair of exponents (λ, w)
    let mut classes: HashMap<(i64, i64), usize> = HashMap::new();
    for x in &ext {
        let key = (lambdas[x.gamma].rem_euclid(N as i64), x.w_exp as i64);
        *classes.entry(key).or_default() += 1;
    }
    let mut keys: Vec<_> = classes.into_iter().collect();
    keys.sort();

    let mut acc = vec![vec![CycloInt::zero(); max_v + 1]; max_u + 1];
    for ((l, w), mult) in keys {
        let a = complete_homogeneous(&[w + l, w - l, -w + l, -w - l], max_u);
        let b = complete_homogeneous(&[2 * w, -2 * w, 2 * l, -2 * l, 0, 0], max_v);
        let b: Vec<CycloInt> = b.iter().map(|x| x.scale(mult as i64)).collect();
        for (k, ak) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                acc[k][j].add_assign(&ak.mul(bj));
            }
        }
    }

    let mut out = SeriesBox::zeros(max_u, max_v);
    for (k, row) in acc.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            out.set(k, j, average(s, ext.len(), (k, j))?);
        }
    }
    Ok(out)
}

/// The truncated series `Σ u^k dim(S^k C²)^{C_n}`.
pub fn molien_series_g1(n: u32, max_u: usize) -> Result<SeriesBox> {
    let g = group(GroupId::Cyclic(n))?;
    let mut acc = vec![CycloInt::zero(); max_u + 1];
    for m in &g.elements {
        let l = eigenvalue_exponent(m)? as i64;
        for (k, h) in complete_homogeneous(&[l, -l], max_u).iter().enumerate() {
            acc[k].add_assign(h);
        }
    }
    let mut out = SeriesBox::zeros(max_u, 0);
    for (k, s) in acc.iter().enumerate() {
        out.set(k, 0, average(s, g.order(), (k, 0))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::series_expand;
    use crate::mckay::{cyclic_genus1_series, stratum_series_mckay};

    #[test]
    fn c2_low_coefficients() {
        let s = molien_series_g2(GroupId::Cyclic(2), CharId::Trivial, 2, 1).unwrap();
        assert_eq!(s.get(2, 0), &rat::int(10));
        assert_eq!(s.get(1, 0), &rat::int(0));
        assert_eq!(s.get(0, 0), &rat::int(1));
    }

    #[test]
    fn symplectic_form_is_invariant() {
        // Λ²V(1) always contains the invariant symplectic form
        for (id, rho) in [
            (GroupId::BinaryOctahedral, CharId::OctChi),
            (GroupId::Quaternionic(24), CharId::ChiPlus),
            (GroupId::Cyclic(10), CharId::CyclicPower(6)),
        ] {
            let s = molien_series_g2(id, rho, 0, 1).unwrap();
            assert!(s.get(0, 1) >= &rat::int(1), "{id}");
        }
        let o = molien_series_g2(GroupId::BinaryOctahedral, CharId::OctChi, 0, 1).unwrap();
        assert_eq!(o.get(0, 1), &rat::int(1));
    }

    #[test]
    fn inverse_eigenvalue_symmetry() {
        let a = molien_series_g2(GroupId::BinaryOctahedral, CharId::OctChi, 12, 4).unwrap();
        let b =
            molien_series_g2_inverted(GroupId::BinaryOctahedral, CharId::OctChi, 12, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn genus_one() {
        let s = molien_series_g1(2, 6).unwrap();
        let got: Vec<i64> = (0..=6).map(|k| rat::to_i64(s.get(k, 0)).unwrap()).collect();
        assert_eq!(got, vec![1, 0, 3, 0, 5, 0, 7]);
        assert_eq!(molien_series_g1(4, 2).unwrap().get(2, 0), &rat::int(1));
        assert_eq!(molien_series_g1(6, 0).unwrap().get(0, 0), &rat::int(1));
        for n in [2, 4, 6] {
            let want = series_expand(&cyclic_genus1_series(n).unwrap(), 20, 0).unwrap();
            assert_eq!(molien_series_g1(n, 20).unwrap(), want);
        }
    }

    #[test]
    fn agrees_with_mckay_on_cyclic_strata() {
        for (id, rho) in [
            (GroupId::Cyclic(2), CharId::Trivial),
            (GroupId::Cyclic(4), CharId::CyclicPower(2)),
        ] {
            let f = stratum_series_mckay(id, rho).unwrap();
            let want = series_expand(&f, 10, 4).unwrap();
            assert_eq!(molien_series_g2(id, rho, 10, 4).unwrap(), want);
        }
    }
}
