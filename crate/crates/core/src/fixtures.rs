//! Embedded reference tables.
//!
//! `data/table1.txt` holds the per-stratum contributions to `f_2`, one
//! summand `r / (s·t)` per line as `id; r; s; t`. `data/table2.txt` holds the
//! equivariant Euler characteristics as `n; partition; symbolic; numeric`.
//! Lines starting with `#` are comments.

use crate::error::{Error, Result};
use crate::exact::{parse_ratfun, RatFun, UV};

pub const TABLE1: &str = include_str!("../data/table1.txt");
pub const TABLE2: &str = include_str!("../data/table2.txt");

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// One summand `r / (s·t)` of a stratum table row.
#[derive(Clone, Debug)]
pub struct Table1Term {
    pub r: RatFun,
    pub s: RatFun,
    pub t: RatFun,
}

impl Table1Term {
    pub fn value(&self) -> Result<RatFun> {
        self.r.div(&(&self.s * &self.t))
    }
}

/// A row of the stratum table: a stratum id such as `q8,chi0`, or `total`.
#[derive(Clone, Debug)]
pub struct Table1Row {
    pub id: String,
    pub terms: Vec<Table1Term>,
}

impl Table1Row {
    /// The row as a single rational function.
    pub fn sum(&self) -> Result<RatFun> {
        let mut acc = RatFun::zero();
        for t in &self.terms {
            acc = &acc + &t.value()?;
        }
        Ok(acc)
    }

    /// `(group, character)` names, or `None` for the subtotal row.
    pub fn stratum(&self) -> Option<(&str, &str)> {
        self.id.split_once(',')
    }
}

pub fn table1() -> Result<Vec<Table1Row>> {
    let mut rows: Vec<Table1Row> = Vec::new();
    for (no, line) in data_lines(TABLE1) {
        let fields: Vec<&str> = line.split(';').map(str::trim).collect();
        let [id, r, s, t] = fields[..] else {
            return Err(Error::Parse(format!(
                "table1 line {no}: expected 4 fields, found {}",
                fields.len()
            )));
        };
        let parse = |x: &str| {
            parse_ratfun(x, &UV).map_err(|e| Error::Parse(format!("table1 line {no}: {e}")))
        };
        let term = Table1Term {
            r: parse(r)?,
            s: parse(s)?,
            t: parse(t)?,
        };
        match rows.last_mut() {
            Some(row) if row.id == id => row.terms.push(term),
            _ => rows.push(Table1Row {
                id: id.to_string(),
                terms: vec![term],
            }),
        }
    }
    Ok(rows)
}

/// One Schur coefficient of the equivariant table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table2Entry {
    pub n: usize,
    pub partition: Vec<usize>,
    /// Combination of Euler symbols as printed, or empty where the table
    /// gives no usable symbolic form.
    pub symbolic: String,
    pub numeric: i64,
}

/// Parse a partition written as `21^2`-style exponent notation with spaces
/// between parts, e.g. `2 1^2`, or `-` for the empty partition.
pub fn parse_partition(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for tok in s.split_whitespace() {
        let (base, mult) = match tok.split_once('^') {
            Some((b, m)) => (b, m),
            None => (tok, "1"),
        };
        let base: usize = base
            .parse()
            .map_err(|_| Error::Parse(format!("bad partition part '{tok}'")))?;
        let mult: usize = mult
            .parse()
            .map_err(|_| Error::Parse(format!("bad partition part '{tok}'")))?;
        if base == 0 {
            return Err(Error::Parse(format!("zero part in '{s}'")));
        }
        parts.extend(std::iter::repeat_n(base, mult));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(parts)
}

/// The equivariant table: Schur coefficients and the total Euler characteristic per arity.
#[derive(Clone, Debug, Default)]
pub struct Table2 {
    pub entries: Vec<Table2Entry>,
    /// `(n, e(M_{2,n}))`
    pub dims: Vec<(usize, i64)>,
}

impl Table2 {
    pub fn row(&self, n: usize) -> impl Iterator<Item = &Table2Entry> {
        self.entries.iter().filter(move |e| e.n == n)
    }

    pub fn dim(&self, n: usize) -> Option<i64> {
        self.dims.iter().find(|d| d.0 == n).map(|d| d.1)
    }
}

pub fn table2() -> Result<Table2> {
    let mut out = Table2::default();
    for (no, line) in data_lines(TABLE2) {
        let fields: Vec<&str> = line.split(';').map(str::trim).collect();
        let [n, part, sym, num] = fields[..] else {
            return Err(Error::Parse(format!(
                "table2 line {no}: expected 4 fields, found {}",
                fields.len()
            )));
        };
        let bad = |what: &str| Error::Parse(format!("table2 line {no}: bad {what}"));
        let n: usize = n.parse().map_err(|_| bad("n"))?;
        let numeric: i64 = num.parse().map_err(|_| bad("numeric coefficient"))?;
        if part == "dim" {
            out.dims.push((n, numeric));
            continue;
        }
        let partition = parse_partition(part)?;
        if partition.iter().sum::<usize>() != n {
            return Err(bad("partition size"));
        }
        out.entries.push(Table2Entry {
            n,
            partition,
            symbolic: sym.to_string(),
            numeric,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_rows() {
        let rows = table1().unwrap();
        let ids: Vec<&str> = rows.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(
            ids,
            [
                "c2,1",
                "c4,chi^2",
                "q8,chi0",
                "q12,chi0",
                "q24,chi+",
                "o,chi",
                "total",
                "c10,chi^6"
            ]
        );
        assert_eq!(rows[5].terms.len(), 5);
    }

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("2 1^2").unwrap(), vec![2, 1, 1]);
        assert_eq!(parse_partition("3^2 1").unwrap(), vec![3, 3, 1]);
        assert_eq!(parse_partition("-").unwrap(), Vec::<usize>::new());
        assert!(parse_partition("a").is_err());
    }

    #[test]
    fn table2_rows() {
        let t = table2().unwrap();
        let dims: Vec<i64> = (0..=7).map(|n| t.dim(n).unwrap()).collect();
        assert_eq!(dims, [1, 2, 2, 0, -4, 0, -24, 168]);
        let counts: Vec<usize> = (0..=7).map(|n| t.row(n).count()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15]);
    }
}
