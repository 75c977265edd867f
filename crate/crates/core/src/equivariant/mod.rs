//! Symmetric group equivariant Euler characteristics of `M_{2,n}`.
//!
//! The generating function
//! `(1 + p_1)^2 Π_k (1 + p_k)^{-(1/k) Σ_{d|k} μ(k/d) c_d}`
//! is expanded in power sums, rewritten in the Schur basis, and each
//! monomial in the Adams characters `c_d = ψ^d V` is decomposed into the
//! local systems `S^k V ⊗ S^ℓ Λ²V` whose Euler characteristics are
//! `e_2(1^k 2^ℓ)`.

mod schur;
mod weyl;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, BigRat, MPoly, Monomial};
use crate::strata::euler_char;

pub use schur::{character, fmt_partition, hook_dimension, partitions, Partition};
pub use weyl::{
    adams_product, basis_character, basis_dimension, decompose, decompose_with, dominates,
    sp4_decompose, Decomposition, Weight, WeylLaurent,
};

/// Which exponent to use for `(1 + p_k)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ConfigExponent {
    /// `-(1/k) Σ_{d|k} μ(k/d) c_d`
    #[default]
    Mobius,
    /// `-(1/k) Σ_{d|k} d! μ(k/d) c_d`
    WithFactorial,
}

/// Polynomials in `c_1, c_2, …`; `c_d` is variable `d - 1`.
pub type CPoly = MPoly;

pub fn c_var(d: usize) -> CPoly {
    MPoly::var(d - 1)
}

/// Power-sum expansion: `p_μ ↦` coefficient.
pub type PSumExpr = BTreeMap<Partition, CPoly>;

pub fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn factorial(n: usize) -> BigRat {
    (1..=n as i64).fold(BigRat::one(), |acc, i| acc * rat::int(i))
}

/// Exponent of `(1 + p_k)`.
pub fn config_exponent(k: usize, variant: ConfigExponent) -> CPoly {
    let mut e = CPoly::zero();
    for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
        let mut c = rat::int(mobius(k / d));
        if variant == ConfigExponent::WithFactorial {
            c *= factorial(d);
        }
        e += &c_var(d).scale(&c);
    }
    e.scale(&-rat::frac(1, k as i64))
}

/// `C(E, j) = E(E-1)…(E-j+1)/j!`
fn binomial_poly(e: &CPoly, j: usize) -> CPoly {
    let mut acc = CPoly::one();
    for i in 0..j {
        acc = &acc * &(e - &CPoly::from_int(i as i64));
    }
    acc.scale(&factorial(j).recip())
}

fn mul_truncated(a: &PSumExpr, b: &PSumExpr, n_max: usize) -> PSumExpr {
    let mut out = PSumExpr::new();
    for (ma, ca) in a {
        let da: usize = ma.iter().sum();
        for (mb, cb) in b {
            if da + mb.iter().sum::<usize>() > n_max {
                continue;
            }
            let mut key: Partition = ma.iter().chain(mb).copied().collect();
            key.sort_unstable_by(|x, y| y.cmp(x));
            let slot = out.entry(key).or_insert_with(CPoly::zero);
            *slot += &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The generating function expanded up to total degree `n_max`.
pub fn config_expansion(n_max: usize, variant: ConfigExponent) -> PSumExpr {
    let mut acc = PSumExpr::from([(Vec::new(), CPoly::one())]);
    for k in 1..=n_max {
        let mut e = config_exponent(k, variant);
        if k == 1 {
            e += &CPoly::from_int(2);
        }
        // (1 + p_k)^E = Σ_j C(E, j) p_k^j
        let mut factor = PSumExpr::new();
        for j in 0..=n_max / k {
            let c = binomial_poly(&e, j);
            if !c.is_zero() {
                factor.insert(vec![k; j], c);
            }
        }
        acc = mul_truncated(&acc, &factor, n_max);
    }
    acc
}

/// A vector in the Schur basis of degree `n`, partitions in the order of
/// [`partitions`].
#[derive(Clone, Debug, PartialEq)]
pub struct SchurVector<T> {
    pub n: usize,
    pub coeffs: Vec<(Partition, T)>,
}

impl<T> SchurVector<T> {
    pub fn get(&self, lambda: &[usize]) -> Option<&T> {
        self.coeffs
            .iter()
            .find(|(p, _)| p == lambda)
            .map(|(_, c)| c)
    }
}

impl SchurVector<i64> {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|(_, c)| *c == 0)
    }
}

/// The degree-`n` part of `e` in the Schur basis, using
/// `p_μ = Σ_λ χ^λ(μ) s_λ`.
pub fn psum_to_schur(e: &PSumExpr, n: usize) -> SchurVector<CPoly> {
    let lambdas = partitions(n);
    let mut coeffs: Vec<(Partition, CPoly)> =
        lambdas.iter().map(|l| (l.clone(), CPoly::zero())).collect();
    for (mu, c) in e.iter().filter(|(mu, _)| mu.iter().sum::<usize>() == n) {
        for (lambda, slot) in coeffs.iter_mut() {
            let chi = character(lambda, mu);
            if chi != 0 {
                *slot += &c.scale(&rat::int(chi));
            }
        }
    }
    SchurVector { n, coeffs }
}

/// A rational combination of the symbols `e_2(1^k 2^ℓ)`, keyed by `(k, ℓ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EulerCombo(pub BTreeMap<(usize, usize), BigRat>);

impl EulerCombo {
    pub fn add(&mut self, key: (usize, usize), c: &BigRat) {
        let slot = self.0.entry(key).or_insert_with(BigRat::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn is_integral(&self) -> bool {
        self.0.values().all(BigRat::is_integer)
    }

    /// Remove the symbols with odd `k`, which vanish.
    pub fn drop_odd(&self) -> EulerCombo {
        EulerCombo(
            self.0
                .iter()
                .filter(|((k, _), _)| k % 2 == 0)
                .map(|(&key, c)| (key, c.clone()))
                .collect(),
        )
    }

    /// Substitute the Euler characteristics computed from the strata.
    pub fn evaluate(&self) -> Result<BigRat> {
        let mut acc = BigRat::zero();
        for (&(k, l), c) in &self.0 {
            acc += c * rat::int(euler_char(k, l)?);
        }
        Ok(acc)
    }

    /// Parse the notation `2 e_2(1^2 2) - e_2 + e_2(2^2)`. Bare integers are
    /// kept apart, since the symbol they stand for is not written.
    pub fn parse(s: &str) -> Result<ParsedCombo> {
        let bad = || Error::Parse(format!("bad Euler combination '{s}'"));
        let mut out = ParsedCombo::default();
        let compact: String = s.split_whitespace().collect::<Vec<_>>().join(" ");
        let mut rest = compact.as_str().trim();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1;
            if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
            } else if !first {
                return Err(bad());
            }
            first = false;
            let digits = rest.chars().take_while(char::is_ascii_digit).count();
            let coeff: i64 = if digits > 0 {
                rest[..digits].parse().map_err(|_| bad())?
            } else {
                1
            };
            rest = rest[digits..].trim_start();
            let Some(r) = rest.strip_prefix("e_2") else {
                if digits > 0 && (rest.is_empty() || rest.starts_with(['+', '-'])) {
                    out.constant += sign * coeff;
                    continue;
                }
                return Err(bad());
            };
            rest = r;
            let mut key = (0, 0);
            if let Some(r) = rest.strip_prefix('(') {
                let close = r.find(')').ok_or_else(bad)?;
                let part = crate::fixtures::parse_partition(&r[..close])?;
                if part.iter().any(|&x| x > 2) {
                    return Err(bad());
                }
                key = (
                    part.iter().filter(|&&x| x == 1).count(),
                    part.iter().filter(|&&x| x == 2).count(),
                );
                rest = &r[close + 1..];
            }
            out.symbols.add(key, &rat::int(sign * coeff));
            rest = rest.trim_start();
        }
        Ok(out)
    }
}

/// A parsed combination: symbols plus a bare integer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParsedCombo {
    pub symbols: EulerCombo,
    pub constant: i64,
}

impl ParsedCombo {
    /// The symbols alone, if there is no bare integer.
    pub fn exact(&self) -> Option<&EulerCombo> {
        (self.constant == 0).then_some(&self.symbols)
    }

    /// The bare integer read as a multiple of `e_2`.
    pub fn constant_as_e2(&self) -> EulerCombo {
        let mut c = self.symbols.clone();
        c.add((0, 0), &rat::int(self.constant));
        c
    }
}

impl fmt::Display for EulerCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        // e_2 first, then by total weight
        let mut keys: Vec<_> = self.0.keys().copied().collect();
        keys.sort_by_key(|&(k, l)| (k + 2 * l, l));
        for (i, key) in keys.iter().enumerate() {
            let c = &self.0[key];
            let neg = c < &BigRat::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("- ")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !a.is_one() {
                write!(f, "{} ", rat::fmt(&a))?;
            }
            f.write_str(&symbol_name(*key))?;
        }
        Ok(())
    }
}

/// `e_2` or `e_2(1^k 2^ℓ)`.
pub fn symbol_name((k, l): (usize, usize)) -> String {
    if k == 0 && l == 0 {
        return "e_2".to_string();
    }
    let power = |base: usize, e: usize| match e {
        0 => None,
        1 => Some(base.to_string()),
        _ => Some(format!("{base}^{e}")),
    };
    let parts: Vec<String> = [power(1, k), power(2, l)].into_iter().flatten().collect();
    format!("e_2({})", parts.join(" "))
}

/// Decompose a polynomial in the `c_d` into Euler symbols.
pub fn cpoly_to_symbols(p: &CPoly) -> Result<EulerCombo> {
    let mut out = EulerCombo::default();
    for (m, c) in p.terms() {
        let degrees = monomial_degrees(m);
        for (&key, &n) in &sp4_decompose(&degrees)? {
            out.add(key, &(c * rat::int(n)));
        }
    }
    Ok(out)
}

fn monomial_degrees(m: &Monomial) -> Vec<usize> {
    m.exps()
        .iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize))
        .collect()
}

/// Schur coefficients as combinations of the symbols, odd `k` dropped.
pub fn equivariant_symbolic(n: usize, variant: ConfigExponent) -> Result<SchurVector<EulerCombo>> {
    let expansion = config_expansion(n, variant);
    let sv = psum_to_schur(&expansion, n);
    let mut coeffs = Vec::new();
    for (lambda, p) in sv.coeffs {
        let combo = cpoly_to_symbols(&p)?;
        if !combo.is_integral() {
            return Err(Error::Consistency(format!(
                "coefficient of s_{{{}}} is not integral: {combo}",
                fmt_partition(&lambda)
            )));
        }
        coeffs.push((lambda, combo.drop_odd()));
    }
    Ok(SchurVector { n, coeffs })
}

/// Schur coefficients with the Euler characteristics substituted.
pub fn equivariant_numeric(n: usize, variant: ConfigExponent) -> Result<SchurVector<i64>> {
    let expansion = config_expansion(n, variant);
    let sv = psum_to_schur(&expansion, n);
    let mut coeffs = Vec::new();
    for (lambda, p) in sv.coeffs {
        let value = cpoly_to_symbols(&p)?.evaluate()?;
        let v = rat::to_i64(&value).ok_or_else(|| {
            Error::Consistency(format!(
                "coefficient of s_{{{}}} is not an integer: {}",
                fmt_partition(&lambda),
                rat::fmt(&value)
            ))
        })?;
        coeffs.push((lambda, v));
    }
    Ok(SchurVector { n, coeffs })
}

/// `Σ_λ coeff(λ) · f^λ`.
pub fn schur_dimension(v: &SchurVector<i64>) -> i64 {
    v.coeffs
        .iter()
        .map(|(l, c)| c * hook_dimension(l) as i64)
        .sum()
}

/// Render a numeric Schur vector as `s_4 - s_{31} - s_{2^2}`.
pub fn fmt_schur_numeric(v: &SchurVector<i64>) -> String {
    let mut s = String::new();
    for (lambda, c) in v.coeffs.iter().filter(|(_, c)| *c != 0) {
        let name = schur_name(lambda);
        let a = c.abs();
        s.push_str(match (s.is_empty(), *c < 0) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        if a != 1 {
            s.push_str(&format!("{a} "));
        }
        s.push_str(&name);
    }
    if s.is_empty() {
        "0".to_string()
    } else {
        s
    }
}

/// `s_{3 2^2 1}`; `1` for the empty partition.
pub fn schur_name(lambda: &[usize]) -> String {
    if lambda.is_empty() {
        "1".to_string()
    } else {
        format!("s_{{{}}}", fmt_partition(lambda))
    }
}

/// How a computed symbolic coefficient compares with the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolicMatch {
    Match,
    Mismatch,
    /// The table entry has a bare integer; `true` if reading it as a
    /// multiple of `e_2` gives a match.
    Ambiguous(bool),
}

/// One Schur coefficient of the table against the computation.
#[derive(Clone, Debug)]
pub struct Table2Check {
    pub n: usize,
    pub partition: Partition,
    pub table_symbolic: String,
    pub computed_symbolic: String,
    pub symbolic: SymbolicMatch,
    pub table_numeric: i64,
    pub computed_numeric: i64,
    /// The table's symbolic entry evaluated with the computed Euler
    /// characteristics, when it has no bare integer.
    pub table_symbolic_value: Option<i64>,
}

impl Table2Check {
    pub fn numeric_ok(&self) -> bool {
        self.table_numeric == self.computed_numeric
    }
}

#[derive(Clone, Debug)]
pub struct Table2Report {
    pub entries: Vec<Table2Check>,
    /// `(n, table, computed)` total Euler characteristics.
    pub dims: Vec<(usize, i64, i64)>,
}

impl Table2Report {
    pub fn numeric_ok(&self) -> bool {
        self.entries.iter().all(Table2Check::numeric_ok) && self.dims.iter().all(|d| d.1 == d.2)
    }

    pub fn symbolic_mismatches(&self) -> impl Iterator<Item = &Table2Check> {
        self.entries
            .iter()
            .filter(|e| e.symbolic == SymbolicMatch::Mismatch)
    }
}

/// Compare every Schur coefficient of the embedded table with the
/// computation, for the arities the table covers.
pub fn verify_table2() -> Result<Table2Report> {
    let table = crate::fixtures::table2()?;
    let mut entries = Vec::new();
    let mut dims = Vec::new();
    let max_n = table.entries.iter().map(|e| e.n).max().unwrap_or(0);
    for n in 0..=max_n {
        let sym = equivariant_symbolic(n, ConfigExponent::Mobius)?;
        let num = equivariant_numeric(n, ConfigExponent::Mobius)?;
        for e in table.row(n) {
            let computed = sym
                .get(&e.partition)
                .ok_or_else(|| Error::Consistency(format!("no partition {:?}", e.partition)))?;
            let parsed = EulerCombo::parse(&e.symbolic)?;
            let symbolic = match parsed.exact() {
                Some(c) if c == computed => SymbolicMatch::Match,
                Some(_) => SymbolicMatch::Mismatch,
                None => SymbolicMatch::Ambiguous(&parsed.constant_as_e2() == computed),
            };
            let table_symbolic_value = match parsed.exact() {
                Some(c) => rat::to_i64(&c.evaluate()?),
                None => None,
            };
            entries.push(Table2Check {
                n,
                partition: e.partition.clone(),
                table_symbolic: e.symbolic.clone(),
                computed_symbolic: computed.to_string(),
                symbolic,
                table_numeric: e.numeric,
                computed_numeric: *num.get(&e.partition).expect("same partitions"),
                table_symbolic_value,
            });
        }
        if let Some(d) = table.dim(n) {
            dims.push((n, d, schur_dimension(&num)));
        }
    }
    Ok(Table2Report { entries, dims })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let got: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(got, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn expansion_low_degrees() {
        let e = config_expansion(2, ConfigExponent::Mobius);
        let c1 = c_var(1);
        let c2 = c_var(2);
        assert_eq!(e[&vec![]], CPoly::one());
        assert_eq!(e[&vec![1]], &CPoly::from_int(2) - &c1);
        let two_minus = &CPoly::from_int(2) - &c1;
        let one_minus = &CPoly::from_int(1) - &c1;
        assert_eq!(
            e[&vec![1, 1]],
            (&two_minus * &one_minus).scale(&rat::frac(1, 2))
        );
        assert_eq!(e[&vec![2]], (&c1 - &c2).scale(&rat::frac(1, 2)));
    }

    #[test]
    fn degree_two_schur() {
        let e = config_expansion(2, ConfigExponent::Mobius);
        let sv = psum_to_schur(&e, 2);
        let c1 = c_var(1);
        let c2 = c_var(2);
        let half = rat::frac(1, 2);
        let sq = c1.pow(2);
        let s2 = &(&CPoly::one() - &c1) + &(&sq - &c2).scale(&half);
        let s11 = &(&CPoly::one() - &c1.scale(&rat::int(2))) + &(&sq + &c2).scale(&half);
        assert_eq!(sv.get(&[2]).unwrap(), &s2);
        assert_eq!(sv.get(&[1, 1]).unwrap(), &s11);
    }

    #[test]
    fn factorial_variant_breaks_integrality() {
        assert!(equivariant_symbolic(2, ConfigExponent::WithFactorial).is_err());
    }

    #[test]
    fn symbolic_low_rows() {
        let v = equivariant_symbolic(2, ConfigExponent::Mobius).unwrap();
        assert_eq!(v.get(&[2]).unwrap().to_string(), "e_2 + e_2(2)");
        assert_eq!(v.get(&[1, 1]).unwrap().to_string(), "e_2 + e_2(1^2)");
        let v = equivariant_symbolic(1, ConfigExponent::Mobius).unwrap();
        assert_eq!(v.get(&[1]).unwrap().to_string(), "2 e_2");
    }

    #[test]
    fn parse_combination() {
        let p = EulerCombo::parse("- 3 e_2 + 2 e_2(1^2) - e_2(1^2 2)").unwrap();
        let c = p.exact().unwrap();
        assert_eq!(c.0[&(0, 0)], rat::int(-3));
        assert_eq!(c.0[&(2, 0)], rat::int(2));
        assert_eq!(c.0[&(2, 1)], rat::int(-1));
        let q = EulerCombo::parse("e_2(2) - 1").unwrap();
        assert!(q.exact().is_none());
        assert_eq!(q.constant_as_e2().to_string(), "- e_2 + e_2(2)");
        assert!(EulerCombo::parse("e_3").is_err());
        let back = EulerCombo::parse(&c.to_string()).unwrap();
        assert_eq!(back.exact(), Some(c));
    }

    #[test]
    fn dimensions() {
        let dims: Vec<i64> = (0..=7)
            .map(|n| schur_dimension(&equivariant_numeric(n, ConfigExponent::Mobius).unwrap()))
            .collect();
        assert_eq!(dims, [1, 2, 2, 0, -4, 0, -24, 168]);
        assert!(equivariant_numeric(3, ConfigExponent::Mobius)
            .unwrap()
            .is_zero());
        let five = equivariant_numeric(5, ConfigExponent::Mobius).unwrap();
        assert_eq!(fmt_schur_numeric(&five), "2 s_{5} + 2 s_{4 1} - 2 s_{3 2}");
    }

    #[test]
    fn sign_representation_dimension() {
        let v = SchurVector {
            n: 4,
            coeffs: vec![(vec![1, 1, 1, 1], 1)],
        };
        assert_eq!(schur_dimension(&v), 1);
    }
}
