//! Characters of `Sp(4)` as Laurent polynomials in `x_1, x_2` and their
//! decomposition into the characters of `S^k V ⊗ S^ℓ Λ²V`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c · x_1^a x_2^b` with integer coefficients.
/// Exponent pair `(a, b)` of the torus monomial `x^a y^b`.
pub type Weight = (i32, i32);

/// Multiplicities of the irreducibles `V(k, l)`.
pub type Decomposition = BTreeMap<(usize, usize), i64>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylLaurent(BTreeMap<(i32, i32), i64>);

impl WeylLaurent {
    pub fn one() -> Self {
        WeylLaurent(BTreeMap::from([((0, 0), 1)]))
    }

    pub fn monomial(a: i32, b: i32, c: i64) -> Self {
        let mut w = WeylLaurent::default();
        w.add_term((a, b), c);
        w
    }

    /// `ψ^d V = x_1^d + x_1^{-d} + x_2^d + x_2^{-d}`
    pub fn adams(d: i32) -> Self {
        let mut w = WeylLaurent::default();
        for e in [(d, 0), (-d, 0), (0, d), (0, -d)] {
            w.add_term(e, 1);
        }
        w
    }

    pub fn add_term(&mut self, e: (i32, i32), c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.0.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.0.remove(&e);
        }
    }

    pub fn add_scaled(&mut self, other: &WeylLaurent, c: i64) {
        for (&e, &x) in &other.0 {
            self.add_term(e, c * x);
        }
    }

    pub fn mul(&self, other: &WeylLaurent) -> WeylLaurent {
        let mut out = WeylLaurent::default();
        for (&(a, b), &x) in &self.0 {
            for (&(c, d), &y) in &other.0 {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &i64)> {
        self.0.iter()
    }

    /// Value at `x_1 = x_2 = 1`.
    pub fn dimension(&self) -> i64 {
        self.0.values().sum()
    }

    /// Invariance under sign changes and the swap of `x_1`, `x_2`.
    pub fn is_weyl_invariant(&self) -> bool {
        self.0.iter().all(|(&(a, b), &c)| {
            [(-a, b), (a, -b), (b, a)]
                .iter()
                .all(|e| self.0.get(e) == Some(&c))
        })
    }

    /// Dominant exponent `(a, b)` with `a >= b >= 0` that is largest for
    /// `a + b`, ties broken by larger `a`.
    fn top(&self) -> Option<((i32, i32), i64)> {
        self.0
            .iter()
            .filter(|(&(a, b), _)| a >= b && b >= 0)
            .max_by_key(|(&(a, b), _)| (a + b, a))
            .map(|(&e, &c)| (e, c))
    }

    /// Dominant exponents not dominated by another dominant exponent present.
    pub fn maximal_dominant(&self) -> Vec<(i32, i32)> {
        let dom: Vec<(i32, i32)> = self
            .0
            .keys()
            .copied()
            .filter(|&(a, b)| a >= b && b >= 0)
            .collect();
        dom.iter()
            .copied()
            .filter(|&x| !dom.iter().any(|&y| y != x && dominates(y, x)))
            .collect()
    }

    pub fn coeff(&self, e: (i32, i32)) -> i64 {
        self.0.get(&e).copied().unwrap_or(0)
    }
}

/// `λ ≥ μ` in the dominance order: `λ - μ` is a non-negative combination of
/// the simple roots `e_1 - e_2` and `2e_2`.
pub fn dominates(lambda: (i32, i32), mu: (i32, i32)) -> bool {
    let (p, q) = (lambda.0 - mu.0, lambda.1 - mu.1);
    p >= 0 && p + q >= 0 && (p + q) % 2 == 0
}

/// `h_k` of a multiset of monomials, as Laurent polynomials for `k = 0..=max`.
fn complete_homogeneous(weights: &[(i32, i32)], max: usize) -> Vec<WeylLaurent> {
    let mut h = vec![WeylLaurent::default(); max + 1];
    h[0] = WeylLaurent::one();
    for &w in weights {
        let x = WeylLaurent::monomial(w.0, w.1, 1);
        for k in 1..=max {
            let t = h[k - 1].mul(&x);
            h[k].add_scaled(&t, 1);
        }
    }
    h
}

const V_WEIGHTS: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
const L2_WEIGHTS: [(i32, i32); 6] = [(1, 1), (1, -1), (-1, 1), (-1, -1), (0, 0), (0, 0)];

/// Character of `S^k V ⊗ S^ℓ Λ²V`.
pub fn basis_character(k: usize, l: usize) -> WeylLaurent {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), WeylLaurent>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(w) = cache.lock().expect("character cache").get(&(k, l)) {
        return w.clone();
    }
    let a = complete_homogeneous(&V_WEIGHTS, k).pop().expect("nonempty");
    let b = complete_homogeneous(&L2_WEIGHTS, l)
        .pop()
        .expect("nonempty");
    let w = a.mul(&b);
    cache
        .lock()
        .expect("character cache")
        .insert((k, l), w.clone());
    w
}

/// `dim S^k V ⊗ S^ℓ Λ²V = C(k+3, 3) · C(ℓ+5, 5)`.
pub fn basis_dimension(k: usize, l: usize) -> i64 {
    let c = |n: usize, r: usize| (0..r).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1));
    c(k + 3, 3) * c(l + 5, 5)
}

/// Write a Weyl-invariant character as an integer combination of the
/// characters of `S^k V ⊗ S^ℓ Λ²V`, keyed by `(k, ℓ)`.
pub fn decompose(w: &WeylLaurent) -> Result<Decomposition> {
    let mut rest = w.clone();
    let mut out = BTreeMap::new();
    let bound = 4 * (w.0.len() + 1);
    for _ in 0..bound {
        let Some(((a, b), c)) = rest.top() else {
            if rest.is_zero() {
                return Ok(out);
            }
            break;
        };
        let (k, l) = ((a - b) as usize, b as usize);
        rest.add_scaled(&basis_character(k, l), -c);
        *out.entry((k, l)).or_insert(0) += c;
        out.retain(|_, v| *v != 0);
    }
    Err(Error::Consistency(
        "character decomposition did not terminate; input is not Weyl invariant".into(),
    ))
}

/// Like [`decompose`], but `pick` chooses which dominance-maximal exponent
/// to peel off next.
pub fn decompose_with(
    w: &WeylLaurent,
    pick: &mut dyn FnMut(&[Weight]) -> usize,
) -> Result<Decomposition> {
    let mut rest = w.clone();
    let mut out = BTreeMap::new();
    let bound = 4 * (w.0.len() + 1);
    for _ in 0..bound {
        let cands = rest.maximal_dominant();
        if cands.is_empty() {
            if rest.is_zero() {
                return Ok(out);
            }
            break;
        }
        let (a, b) = cands[pick(&cands) % cands.len()];
        let c = rest.coeff((a, b));
        let (k, l) = ((a - b) as usize, b as usize);
        rest.add_scaled(&basis_character(k, l), -c);
        *out.entry((k, l)).or_insert(0) += c;
        out.retain(|_, v| *v != 0);
    }
    Err(Error::Consistency(
        "character decomposition did not terminate; input is not Weyl invariant".into(),
    ))
}

/// Decomposition of `Π_i ψ^{d_i} V`.
pub fn sp4_decompose(degrees: &[usize]) -> Result<Decomposition> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Decomposition>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut key = degrees.to_vec();
    key.sort_unstable();
    if let Some(m) = cache.lock().expect("decomposition cache").get(&key) {
        return Ok(m.clone());
    }
    let w = adams_product(&key);
    let m = decompose(&w)?;
    let dim: i64 = m
        .iter()
        .map(|(&(k, l), &c)| c * basis_dimension(k, l))
        .sum();
    if dim != 4i64.pow(key.len() as u32) {
        return Err(Error::Consistency(format!(
            "decomposition of {key:?} has dimension {dim}"
        )));
    }
    cache
        .lock()
        .expect("decomposition cache")
        .insert(key, m.clone());
    Ok(m)
}

pub fn adams_product(degrees: &[usize]) -> WeylLaurent {
    degrees.iter().fold(WeylLaurent::one(), |acc, &d| {
        acc.mul(&WeylLaurent::adams(d as i32))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(sp4_decompose(&[]).unwrap(), BTreeMap::from([((0, 0), 1)]));
        assert_eq!(sp4_decompose(&[1]).unwrap(), BTreeMap::from([((1, 0), 1)]));
        assert_eq!(
            sp4_decompose(&[2]).unwrap(),
            BTreeMap::from([((2, 0), 1), ((0, 1), -1)])
        );
    }

    #[test]
    fn adams_square_oracle() {
        // ψ²V = S²V - Λ²V, checked directly on characters
        let mut rhs = basis_character(2, 0);
        rhs.add_scaled(&basis_character(0, 1), -1);
        assert_eq!(WeylLaurent::adams(2), rhs);
    }

    #[test]
    fn basis_dimensions() {
        for k in 0..5 {
            for l in 0..4 {
                assert_eq!(basis_character(k, l).dimension(), basis_dimension(k, l));
                assert!(basis_character(k, l).is_weyl_invariant());
            }
        }
    }

    #[test]
    fn reconstruction() {
        for degs in [vec![1, 1, 2], vec![3, 2], vec![1, 1, 1, 1, 3], vec![7]] {
            let w = adams_product(&degs);
            let mut back = WeylLaurent::default();
            for (&(k, l), &c) in &decompose(&w).unwrap() {
                back.add_scaled(&basis_character(k, l), c);
            }
            assert_eq!(back, w, "{degs:?}");
        }
    }

    #[test]
    fn dominance() {
        assert!(dominates((2, 0), (1, 1)));
        assert!(dominates((1, 1), (0, 0)));
        assert!(!dominates((3, 0), (1, 1)));
        assert!(!dominates((1, 1), (2, 0)));
    }

    #[test]
    fn rejects_non_invariant() {
        assert!(decompose(&WeylLaurent::monomial(1, 0, 1)).is_err());
    }
}
