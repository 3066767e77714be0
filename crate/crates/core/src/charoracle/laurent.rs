use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A formal character: a Laurent polynomial in `nvars` variables with
/// non-negative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentChar {
    nvars: usize,
    #[serde(with = "term_list")]
    terms: BTreeMap<Vec<i64>, u64>,
}

// JSON object keys must be strings, so terms travel as `[[exp, mult], …]`.
mod term_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(t: &BTreeMap<Vec<i64>, u64>, s: S) -> Result<S::Ok, S::Error> {
        t.iter().collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Vec<i64>, u64>, D::Error> {
        let v: Vec<(Vec<i64>, u64)> = Vec::deserialize(d)?;
        Ok(v.into_iter().filter(|(_, m)| *m > 0).collect())
    }
}

impl fmt::Display for LaurentChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, &c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            match (c, mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{}", mono.join("*"))?,
                _ => write!(f, "{c}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl LaurentChar {
    pub fn zero(nvars: usize) -> Self {
        LaurentChar { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exp: Vec<i64>, mult: u64) -> Self {
        let mut c = Self::zero(exp.len());
        c.add_term(exp, mult);
        c
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, exp: &[i64]) -> u64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: Vec<i64>, mult: u64) {
        assert_eq!(exp.len(), self.nvars, "exponent length");
        if mult > 0 {
            *self.terms.entry(exp).or_insert(0) += mult;
        }
    }

    /// Value at `x = (1, …, 1)`.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &LaurentChar) -> Result<LaurentChar> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, &m) in &other.terms {
            out.add_term(e.clone(), m);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &LaurentChar) -> Result<LaurentChar> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (a, &ma) in &self.terms {
            for (b, &mb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ma * mb);
            }
        }
        Ok(out)
    }

    /// Character in disjoint variables: `c(x) · d(y)`.
    pub fn outer(&self, other: &LaurentChar) -> LaurentChar {
        let mut out = Self::zero(self.nvars + other.nvars);
        for (a, &ma) in &self.terms {
            for (b, &mb) in &other.terms {
                let mut e = a.clone();
                e.extend_from_slice(b);
                out.add_term(e, ma * mb);
            }
        }
        out
    }

    /// Multiply every exponent by `q`, the character of a Frobenius twist.
    pub fn dilate(&self, q: i64) -> LaurentChar {
        let mut out = Self::zero(self.nvars);
        for (e, &m) in &self.terms {
            out.add_term(e.iter().map(|x| x * q).collect(), m);
        }
        out
    }

    fn check(&self, other: &LaurentChar) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::Mismatch(format!("characters in {} and {} variables", self.nvars, other.nvars)))
        }
    }
}

/// The Weyl character of `GL(m)` with highest weight `mu`: the Schur
/// polynomial of `mu - mu_m`, times `det^{mu_m}`. Summed over semistandard
/// tableaux.
pub fn schur_char(m: usize, mu: &[i64]) -> Result<LaurentChar> {
    if mu.len() != m || m == 0 {
        return Err(Error::invalid(format!("GL({m}) weight needs {m} entries, got {}", mu.len())));
    }
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::invalid(format!("{mu:?} is not dominant")));
    }
    let shift = mu[m - 1];
    let shape: Vec<usize> = mu.iter().map(|&x| (x - shift) as usize).collect();
    let mut out = LaurentChar::zero(m);
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&len| Vec::with_capacity(len)).collect();
    fill(&shape, m, 0, 0, &mut rows, &mut |rows| {
        let mut exp = vec![shift; m];
        for &v in rows.iter().flatten() {
            exp[v] += 1;
        }
        out.add_term(exp, 1);
    });
    Ok(out)
}

// Fill cells row by row, left to right. Rows weakly increase, columns
// strictly increase.
fn fill(
    shape: &[usize],
    m: usize,
    r: usize,
    c: usize,
    rows: &mut Vec<Vec<usize>>,
    emit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if r == shape.len() || shape[r] == 0 {
        emit(rows);
        return;
    }
    if c == shape[r] {
        fill(shape, m, r + 1, 0, rows, emit);
        return;
    }
    let lo_row = if c > 0 { rows[r][c - 1] } else { 0 };
    let lo_col = if r > 0 { rows[r - 1][c] + 1 } else { 0 };
    for v in lo_row.max(lo_col)..m {
        rows[r].push(v);
        fill(shape, m, r, c + 1, rows, emit);
        rows[r].pop();
    }
}
