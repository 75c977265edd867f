//! Partitions, symmetric group characters and the Schur basis.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// A partition as weakly decreasing positive parts.
pub type Partition = Vec<usize>;

/// Partitions of `n`, largest first in lexicographic order: `(n)` first and
/// `(1^n)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compact notation with exponents, e.g. `3 2^2 1`; `-` for the empty partition.
pub fn fmt_partition(p: &[usize]) -> String {
    if p.is_empty() {
        return "-".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < p.len() {
        let j = p[i..].iter().take_while(|&&x| x == p[i]).count();
        parts.push(if j == 1 {
            p[i].to_string()
        } else {
            format!("{}^{j}", p[i])
        });
        i += j;
    }
    parts.join(" ")
}

fn beta_set(lambda: &[usize]) -> Vec<usize> {
    let len = lambda.len();
    lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l + len - 1 - i)
        .collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    beta.iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .filter(|&x| x > 0)
        .collect()
}

type CharCache = Mutex<HashMap<(Partition, Partition), i64>>;

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn character(lambda: &[usize], mu: &[usize]) -> i64 {
    static CACHE: OnceLock<CharCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = cache.lock().expect("character cache").get(&key) {
        return v;
    }
    let v = mn(lambda, mu);
    cache.lock().expect("character cache").insert(key, v);
    v
}

fn mn(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let beta = beta_set(lambda);
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // removing a rim hook of length r; its height is the number of
        // beads jumped over
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[idx] = b - r;
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * character(&from_beta(next), rest);
    }
    total
}

/// `f^λ`, the dimension of the irreducible representation, by hook lengths.
pub fn hook_dimension(lambda: &[usize]) -> u128 {
    let n: usize = lambda.iter().sum();
    let conj: Vec<usize> = (0..lambda.first().copied().unwrap_or(0))
        .map(|j| lambda.iter().filter(|&&l| l > j).count())
        .collect();
    let mut num: u128 = (1..=n as u128).product();
    for (i, &l) in lambda.iter().enumerate() {
        for (j, &c) in conj.iter().enumerate().take(l) {
            let hook = (l - j - 1) + (c - i - 1) + 1;
            num /= hook as u128;
        }
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn small_characters() {
        // p_2 = s_2 - s_11, p_1^2 = s_2 + s_11
        assert_eq!(character(&[2], &[2]), 1);
        assert_eq!(character(&[1, 1], &[2]), -1);
        assert_eq!(character(&[2], &[1, 1]), 1);
        assert_eq!(character(&[1, 1], &[1, 1]), 1);
        assert_eq!(character(&[2, 1], &[3]), -1);
        assert_eq!(character(&[2, 2], &[2, 2]), 2);
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let ps = partitions(n);
            let id = vec![1; n];
            for l in &ps {
                assert_eq!(character(l, &id) as u128, hook_dimension(l), "{l:?}");
            }
            let sum_sq: u128 = ps.iter().map(|l| hook_dimension(l).pow(2)).sum();
            assert_eq!(sum_sq, (1..=n as u128).product());
        }
    }

    #[test]
    fn notation() {
        assert_eq!(fmt_partition(&[3, 2, 2, 1]), "3 2^2 1");
        assert_eq!(fmt_partition(&[]), "-");
    }
}
