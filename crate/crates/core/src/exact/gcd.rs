//! Multivariate gcd over the rationals.
//!
//! The polynomial is viewed as univariate in its highest-indexed variable
//! with coefficients in the remaining variables; contents are split off
//! recursively and the primitive parts go through a subresultant PRS.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::MPoly;

/// Coefficients of the `d`th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_coeffs(d: usize) -> Vec<i64> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Vec<i64>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = memo.lock().expect("cyclotomic memo").get(&d) {
        return c.clone();
    }
    let mut p = vec![0i64; d + 1];
    p[0] = -1;
    p[d] = 1;
    for e in 1..d {
        if d.is_multiple_of(e) {
            let q = cyclotomic_coeffs(e);
            let dq = q.len() - 1;
            let mut quot = vec![0i64; p.len() - dq];
            for i in (0..quot.len()).rev() {
                let c = p[i + dq];
                quot[i] = c;
                for (j, &qj) in q.iter().enumerate() {
                    p[i + j] -= c * qj;
                }
            }
            p = quot;
        }
    }
    memo.lock().expect("cyclotomic memo").insert(d, p.clone());
    p
}

/// Factor `p` as a constant times a product of cyclotomic polynomials in
/// single variables, if possible.
fn cyclotomic_factors(p: &MPoly) -> Option<Vec<(MPoly, u32)>> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    for var in 0..p.arity() {
        let deg = rest.degree_in(var)? as usize;
        if deg == 0 {
            continue;
        }
        for d in 1..=5 * deg + 5 {
            let c = cyclotomic_coeffs(d);
            let remaining = rest.degree_in(var)? as usize;
            if remaining == 0 {
                break;
            }
            if c.len() - 1 > remaining {
                continue;
            }
            let f = MPoly::univariate(var, &c);
            let mut m = 0;
            while let Ok(q) = rest.div_exact(&f) {
                rest = q;
                m += 1;
            }
            if m > 0 {
                out.push((f, m));
            }
        }
        if rest.degree_in(var)? > 0 {
            return None;
        }
    }
    rest.is_constant().then_some(out)
}

/// Greatest common divisor, normalized to leading coefficient one.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    if a == b {
        return a.monic();
    }
    // Denominators in this crate are products of cyclotomic polynomials;
    // for those trial division is far cheaper than a PRS.
    let (small, large) = if a.num_terms() <= b.num_terms() {
        (a, b)
    } else {
        (b, a)
    };
    let split = cyclotomic_factors(small)
        .map(|f| (f, large))
        .or_else(|| cyclotomic_factors(large).map(|f| (f, small)));
    if let Some((factors, large)) = split {
        let mut g = MPoly::one();
        let mut rest = large.clone();
        for (f, m) in factors {
            for _ in 0..m {
                match rest.div_exact(&f) {
                    Ok(q) => {
                        rest = q;
                        g = &g * &f;
                    }
                    Err(_) => break,
                }
            }
        }
        return g.monic();
    }
    let n = a.arity().max(b.arity());
    let var = (0..n)
        .rev()
        .find(|&i| a.uses_var(i) || b.uses_var(i))
        .expect("non-constant polynomials use some variable");
    let ca = a.coeffs_in(var);
    let cb = b.coeffs_in(var);
    let cont_a = gcd_many(&ca);
    let cont_b = gcd_many(&cb);
    let cont = gcd(&cont_a, &cont_b);
    if ca.len() == 1 || cb.len() == 1 {
        return cont;
    }
    let pa = divide_all(&ca, &cont_a);
    let pb = divide_all(&cb, &cont_b);
    let g = primitive_prs(pa, pb);
    let g = MPoly::from_coeffs_in(var, &g);
    (&cont * &g).monic()
}

/// Gcd of a list; the gcd of an empty list is zero.
pub fn gcd_many(ps: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero();
    for p in ps {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_all(cs: &[MPoly], d: &MPoly) -> Vec<MPoly> {
    cs.iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn trim(p: &mut Vec<MPoly>) {
    while p.len() > 1 && p.last().is_some_and(MPoly::is_zero) {
        p.pop();
    }
}

fn is_zero(p: &[MPoly]) -> bool {
    p.iter().all(MPoly::is_zero)
}

fn deg(p: &[MPoly]) -> usize {
    p.len() - 1
}

/// Pseudo-remainder of `a` by `b` (both trimmed, `b` nonzero).
fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = deg(b);
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return r;
    }
    let mut e = deg(&r) - db + 1;
    while !is_zero(&r) && deg(&r) >= db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[i + shift] -= &t;
        }
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// Gcd of two primitive polynomials given by coefficient vectors, as a
/// primitive coefficient vector.
fn primitive_prs(a: Vec<MPoly>, b: Vec<MPoly>) -> Vec<MPoly> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    trim(&mut a);
    trim(&mut b);
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let delta = deg(&a) - deg(&b);
        let mut r = prem(&a, &b);
        trim(&mut r);
        if is_zero(&r) {
            break;
        }
        if deg(&r) == 0 {
            return vec![MPoly::one()];
        }
        let d = &g * &h.pow(delta as u32);
        a = std::mem::replace(
            &mut b,
            r.iter()
                .map(|c| c.div_exact(&d).expect("subresultant division is exact"))
                .collect(),
        );
        g = a[deg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta as u32)
                .div_exact(&h.pow(delta as u32 - 1))
                .expect("subresultant division is exact"),
        };
    }
    let cont = gcd_many(&b);
    divide_all(&b, &cont)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn u() -> MPoly {
        MPoly::var(0)
    }
    fn v() -> MPoly {
        MPoly::var(1)
    }
    fn one() -> MPoly {
        MPoly::one()
    }

    #[test]
    fn univariate_gcd() {
        let a = &u().pow(2) - &one();
        let b = &u() - &one();
        assert_eq!(gcd(&a, &b), b);
        let c = &u().pow(4) - &one();
        let d = &u().pow(6) - &one();
        assert_eq!(gcd(&c, &d), a);
    }

    #[test]
    fn bivariate_gcd_with_separate_factors() {
        let s = &one() - &u().pow(2);
        let t = &one() - &v();
        let w = &u() + &v();
        let a = &(&s * &t) * &w;
        let b = &(&s * &w) * &(&one() + &v());
        let g = gcd(&a, &b);
        assert_eq!(g, (&s * &w).monic());
    }

    #[test]
    fn gcd_normalizes_scalars() {
        let a = u().scale(&rat::int(6));
        let b = (&u() * &v()).scale(&rat::int(4));
        assert_eq!(gcd(&a, &b), u());
        assert_eq!(gcd(&MPoly::from_int(3), &u()), one());
        assert_eq!(gcd(&MPoly::zero(), &u().scale(&rat::int(-2))), u());
    }

    #[test]
    fn cyclotomic_table() {
        assert_eq!(cyclotomic_coeffs(1), vec![-1, 1]);
        assert_eq!(cyclotomic_coeffs(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_coeffs(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cyclotomic_fast_path_matches_prs() {
        let den = &(&one() - &u().pow(6)) * &(&one() - &v().pow(4));
        let num = &(&(&one() - &u().pow(2)) * &(&one() + &v())) * &(&u() + &v());
        let fs = cyclotomic_factors(&den).unwrap();
        assert_eq!(fs.len(), 7);
        assert!(cyclotomic_factors(&num).is_none());
        let want = (&(&one() - &u().pow(2)) * &(&one() + &v())).monic();
        assert_eq!(gcd(&num, &den), want);
    }

    #[test]
    fn coprime_inputs() {
        let a = &(&u() * &v()) + &one();
        let b = &u() - &v();
        assert_eq!(gcd(&a, &b), one());
    }
}
