//! Sparse multivariate polynomials with big-integer coefficients over the
//! fixed genus-g variable layout.
//!
//! Variables of genus `g`, in order: `x1..xg`, `y1..yg`, then for every pair
//! `i < j` (lexicographic) the four pair variables `xc{i}_{j}` (x on the
//! intersection), `yc{i}_{j}`, `xu{i}_{j}` (x on the union), `yu{i}_{j}`.
//! Names are 1-based; indices everywhere else are 0-based.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("layout mismatch: genus {0} vs genus {1}")]
    LayoutMismatch(usize, usize),
    #[error("exponent exceeds 255")]
    ExponentOverflow,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = PolyError> = std::result::Result<T, E>;

/// Which set of a tuple (or pair of sets) a variable is attached to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum VarKind {
    X(usize),
    Y(usize),
    XCap(usize, usize),
    YCap(usize, usize),
    XCup(usize, usize),
    YCup(usize, usize),
}

/// The genus-g variable layout.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarLayout {
    g: usize,
}

impl VarLayout {
    pub fn new(g: usize) -> VarLayout {
        VarLayout { g }
    }

    #[inline]
    pub fn genus(self) -> usize {
        self.g
    }

    /// `2g + 4·C(g,2)`.
    #[inline]
    pub fn count(self) -> usize {
        2 * self.g + 2 * self.g * self.g.saturating_sub(1)
    }

    #[inline]
    pub fn x(self, i: usize) -> usize {
        i
    }

    #[inline]
    pub fn y(self, i: usize) -> usize {
        self.g + i
    }

    /// Position of the pair `(i, j)`, `i < j`, in lexicographic order.
    #[inline]
    pub fn pair_rank(self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.g);
        i * (2 * self.g - i - 1) / 2 + (j - i - 1)
    }

    /// Index of the first of the four variables of pair `(i, j)`.
    #[inline]
    pub fn pair_base(self, i: usize, j: usize) -> usize {
        2 * self.g + 4 * self.pair_rank(i, j)
    }

    pub fn index(self, kind: VarKind) -> usize {
        match kind {
            VarKind::X(i) => self.x(i),
            VarKind::Y(i) => self.y(i),
            VarKind::XCap(i, j) => self.pair_base(i, j),
            VarKind::YCap(i, j) => self.pair_base(i, j) + 1,
            VarKind::XCup(i, j) => self.pair_base(i, j) + 2,
            VarKind::YCup(i, j) => self.pair_base(i, j) + 3,
        }
    }

    pub fn kind(self, idx: usize) -> VarKind {
        assert!(idx < self.count());
        if idx < self.g {
            return VarKind::X(idx);
        }
        if idx < 2 * self.g {
            return VarKind::Y(idx - self.g);
        }
        let (pair, slot) = ((idx - 2 * self.g) / 4, (idx - 2 * self.g) % 4);
        let (mut i, mut rest) = (0, pair);
        while rest >= self.g - i - 1 {
            rest -= self.g - i - 1;
            i += 1;
        }
        let j = i + 1 + rest;
        match slot {
            0 => VarKind::XCap(i, j),
            1 => VarKind::YCap(i, j),
            2 => VarKind::XCup(i, j),
            _ => VarKind::YCup(i, j),
        }
    }

    pub fn name(self, idx: usize) -> String {
        match self.kind(idx) {
            VarKind::X(i) => format!("x{}", i + 1),
            VarKind::Y(i) => format!("y{}", i + 1),
            VarKind::XCap(i, j) => format!("xc{}_{}", i + 1, j + 1),
            VarKind::YCap(i, j) => format!("yc{}_{}", i + 1, j + 1),
            VarKind::XCup(i, j) => format!("xu{}_{}", i + 1, j + 1),
            VarKind::YCup(i, j) => format!("yu{}_{}", i + 1, j + 1),
        }
    }

    pub fn index_of_name(self, name: &str) -> Option<usize> {
        (0..self.count()).find(|&i| self.name(i) == name)
    }

    /// The variable paired with `idx` under duality: `x ↔ y` on single sets,
    /// `x∩ ↔ y∪` and `y∩ ↔ x∪` on pairs.
    pub fn dual_index(self, idx: usize) -> usize {
        self.index(match self.kind(idx) {
            VarKind::X(i) => VarKind::Y(i),
            VarKind::Y(i) => VarKind::X(i),
            VarKind::XCap(i, j) => VarKind::YCup(i, j),
            VarKind::YCup(i, j) => VarKind::XCap(i, j),
            VarKind::YCap(i, j) => VarKind::XCup(i, j),
            VarKind::XCup(i, j) => VarKind::YCap(i, j),
        })
    }
}

/// Exponents, one byte per layout variable.
pub type ExponentVector = Vec<u8>;

/// What a variable becomes under [`SparsePoly::substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subst {
    Const(BigInt),
    /// A variable of the target layout.
    Var(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    layout: VarLayout,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePoly {
    pub fn zero(layout: VarLayout) -> SparsePoly {
        SparsePoly { layout, terms: BTreeMap::new() }
    }

    pub fn constant(layout: VarLayout, c: impl Into<BigInt>) -> SparsePoly {
        SparsePoly::monomial(layout, vec![0; layout.count()], c)
    }

    pub fn one(layout: VarLayout) -> SparsePoly {
        SparsePoly::constant(layout, 1)
    }

    pub fn var(layout: VarLayout, idx: usize) -> SparsePoly {
        let mut e = vec![0; layout.count()];
        e[idx] = 1;
        SparsePoly::monomial(layout, e, 1)
    }

    pub fn monomial(layout: VarLayout, exps: ExponentVector, c: impl Into<BigInt>) -> SparsePoly {
        assert_eq!(exps.len(), layout.count());
        let mut p = SparsePoly::zero(layout);
        p.add_term(exps, c.into());
        p
    }

    /// Builds from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(layout: VarLayout, terms: I) -> Result<SparsePoly>
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut p = SparsePoly::zero(layout);
        for (e, c) in terms {
            if e.len() != layout.count() {
                return Err(PolyError::Invalid(format!(
                    "exponent vector of length {} in a layout of {} variables",
                    e.len(),
                    layout.count()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Adds `c · x^e` in place.
    pub fn add_term(&mut self, exps: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    #[inline]
    pub fn layout(&self) -> VarLayout {
        self.layout
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u8]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Largest exponent of variable `idx`.
    pub fn degree_in(&self, idx: usize) -> u8 {
        self.terms.keys().map(|e| e[idx]).max().unwrap_or(0)
    }

    fn check_layout(&self, other: &SparsePoly) -> Result<()> {
        if self.layout != other.layout {
            return Err(PolyError::LayoutMismatch(self.layout.g, other.layout.g));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_layout(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_layout(other)?;
        let mut acc: FxHashMap<ExponentVector, BigInt> = FxHashMap::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = e1.clone();
                for (a, b) in e.iter_mut().zip(e2) {
                    *a = a.checked_add(*b).ok_or(PolyError::ExponentOverflow)?;
                }
                *acc.entry(e).or_default() += c1 * c2;
            }
        }
        SparsePoly::from_terms(self.layout, acc)
    }

    pub fn try_pow(&self, k: u32) -> Result<SparsePoly> {
        let mut out = SparsePoly::one(self.layout);
        for _ in 0..k {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.layout);
        }
        SparsePoly { layout: self.layout, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Exact division of every coefficient; `None` if some coefficient is not a multiple.
    pub fn div_exact(&self, c: &BigInt) -> Option<SparsePoly> {
        if c.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (e, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(e.clone(), q);
        }
        Some(SparsePoly { layout: self.layout, terms })
    }

    /// Substitutes `v -> v + delta[v]` for every variable.
    pub fn shift(&self, delta: &[i64]) -> SparsePoly {
        assert_eq!(delta.len(), self.layout.count());
        let mut current: FxHashMap<ExponentVector, BigInt> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        for (v, &d) in delta.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let d = BigInt::from(d);
            let mut next: FxHashMap<ExponentVector, BigInt> = FxHashMap::default();
            for (e, c) in current {
                let k = e[v];
                // (v + d)^k = Σ_j C(k, j) d^(k-j) v^j
                let mut binom = BigInt::one();
                for j in (0..=k).rev() {
                    let mut ej = e.clone();
                    ej[v] = j;
                    let term = &c * &binom * Pow::pow(&d, (k - j) as u32);
                    *next.entry(ej).or_default() += term;
                    // C(k, j-1) = C(k, j) * j / (k - j + 1)
                    if j > 0 {
                        binom = binom * BigInt::from(j) / BigInt::from(k - j + 1);
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            current = next;
        }
        SparsePoly { layout: self.layout, terms: current.into_iter().collect() }
    }

    /// Shifts every variable by the same amount.
    pub fn shift_all(&self, d: i64) -> SparsePoly {
        self.shift(&vec![d; self.layout.count()])
    }

    /// Full evaluation at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.layout.count());
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= Pow::pow(&point[v], k as u32);
                }
            }
            total += t;
        }
        total
    }

    /// Evaluation at an integer point.
    pub fn evaluate_int(&self, point: &[i64]) -> BigInt {
        assert_eq!(point.len(), self.layout.count());
        let pt: Vec<BigInt> = point.iter().map(|&v| BigInt::from(v)).collect();
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= Pow::pow(&pt[v], k as u32);
                }
            }
            total += t;
        }
        total
    }

    /// Replaces each variable by a constant or a variable of `target`.
    pub fn substitute(&self, subs: &[Subst], target: VarLayout) -> Result<SparsePoly> {
        if subs.len() != self.layout.count() {
            return Err(PolyError::Invalid("substitution length differs from layout".into()));
        }
        let mut acc: FxHashMap<ExponentVector, BigInt> = FxHashMap::default();
        for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut out = vec![0u8; target.count()];
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match &subs[v] {
                    Subst::Const(val) => coef *= Pow::pow(val, k as u32),
                    Subst::Var(t) => {
                        if *t >= target.count() {
                            return Err(PolyError::Invalid(format!("target variable {t} out of range")));
                        }
                        out[*t] = out[*t].checked_add(k).ok_or(PolyError::ExponentOverflow)?;
                    }
                }
            }
            if !coef.is_zero() {
                *acc.entry(out).or_default() += coef;
            }
        }
        SparsePoly::from_terms(target, acc)
    }

    /// Applies the duality involution on variables.
    pub fn swap_xy(&self) -> SparsePoly {
        let l = self.layout;
        let perm: Vec<usize> = (0..l.count()).map(|i| l.dual_index(i)).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0u8; e.len()];
                for (i, &k) in e.iter().enumerate() {
                    out[perm[i]] = k;
                }
                (out, c.clone())
            })
            .collect();
        SparsePoly { layout: l, terms }
    }

    /// Canonical text form, terms in ascending exponent order.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n == 0 {
                write!(out, "{c}").unwrap();
            } else if c.is_negative() {
                write!(out, " - {}", c.abs()).unwrap();
            } else {
                write!(out, " + {c}").unwrap();
            }
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(out, " * {}", self.layout.name(v)).unwrap(),
                    _ => write!(out, " * {}^{k}", self.layout.name(v)).unwrap(),
                }
            }
        }
        out
    }

    /// Parses the canonical text form (and any reordering of it) in `layout`.
    pub fn parse_text(text: &str, layout: VarLayout) -> Result<SparsePoly> {
        Parser { src: text.as_bytes(), pos: 0, layout }.parse()
    }

    pub fn to_json_value(&self) -> PolyFile {
        PolyFile {
            g: self.layout.g,
            terms: self.terms.iter().map(|(e, c)| PolyTerm { exps: e.clone(), coef: c.to_string() }).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serialises")
    }

    pub fn from_json(text: &str) -> Result<SparsePoly> {
        let file: PolyFile =
            serde_json::from_str(text).map_err(|e| PolyError::Parse { pos: e.column(), msg: e.to_string() })?;
        file.into_poly()
    }
}

/// JSON shape `{"g": int, "terms": [{"exps": [...], "coef": "decimal"}]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PolyFile {
    pub g: usize,
    pub terms: Vec<PolyTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PolyTerm {
    pub exps: Vec<u8>,
    pub coef: String,
}

/// Genus cap for externally supplied layouts (keeps variable counts small).
pub const MAX_FILE_GENUS: usize = 64;

impl PolyFile {
    pub fn into_poly(self) -> Result<SparsePoly> {
        if self.g > MAX_FILE_GENUS {
            return Err(PolyError::Invalid(format!("genus {} above {}", self.g, MAX_FILE_GENUS)));
        }
        let layout = VarLayout::new(self.g);
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in self.terms {
            let c: BigInt = t.coef.parse().map_err(|_| PolyError::Invalid(format!("bad coefficient {:?}", t.coef)))?;
            terms.push((t.exps, c));
        }
        SparsePoly::from_terms(layout, terms)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    layout: VarLayout,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(PolyError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn ident(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        match self.layout.index_of_name(name) {
            Some(i) => Ok(i),
            None => {
                self.pos = start;
                self.err(format!("unknown variable {name:?}"))
            }
        }
    }

    fn parse(mut self) -> Result<SparsePoly> {
        let mut poly = SparsePoly::zero(self.layout);
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                None if !first => break,
                None => return self.err("empty input"),
                Some(b'+') if !first => self.pos += 1,
                Some(b'-') => {
                    negative = true;
                    self.pos += 1;
                }
                Some(_) if first => {}
                Some(c) => return self.err(format!("expected '+' or '-', found {:?}", c as char)),
            }
            first = false;
            if self.peek() == Some(b'-') {
                negative = !negative;
                self.pos += 1;
            }
            let mut coef: BigInt = match self.peek() {
                Some(c) if c.is_ascii_digit() => self.digits()?.parse().expect("digit run"),
                _ => return self.err("expected coefficient"),
            };
            if negative {
                coef = -coef;
            }
            let mut exps = vec![0u8; self.layout.count()];
            while self.peek() == Some(b'*') {
                self.pos += 1;
                let v = self.ident()?;
                let mut k = 1u8;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let at = self.pos;
                    k = match self.digits()?.parse::<u8>() {
                        Ok(k) => k,
                        Err(_) => {
                            self.pos = at;
                            return self.err("exponent out of range");
                        }
                    };
                }
                exps[v] = match exps[v].checked_add(k) {
                    Some(s) => s,
                    None => return self.err("exponent out of range"),
                };
            }
            poly.add_term(exps, coef);
        }
        Ok(poly)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_add(rhs).expect("matching layouts")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_sub(rhs).expect("matching layouts")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_mul(rhs).expect("matching layouts, exponents below 256")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly { layout: self.layout, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

/// Rank over the rationals of the coefficient vectors (fraction-free elimination).
pub fn linear_rank(family: &[SparsePoly]) -> Result<usize> {
    let Some(first) = family.first() else { return Ok(0) };
    for p in family {
        first.check_layout(p)?;
    }
    let mut columns: BTreeMap<&ExponentVector, usize> = BTreeMap::new();
    for p in family {
        for e in p.terms.keys() {
            let next = columns.len();
            columns.entry(e).or_insert(next);
        }
    }
    let mut rows: Vec<Vec<BigInt>> = family
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::zero(); columns.len()];
            for (e, c) in &p.terms {
                row[columns[e]] = c.clone();
            }
            row
        })
        .collect();
    Ok(bareiss_rank(&mut rows))
}

/// Rank of an integer matrix by Bareiss elimination; the matrix is overwritten.
pub fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let v = &row[j] * &pivot_row[col] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    rank
}

/// `BigInt` to `u64`, for counts known to be small.
pub fn to_u64(c: &BigInt) -> Option<u64> {
    c.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> VarLayout {
        VarLayout::new(1)
    }

    fn x() -> SparsePoly {
        SparsePoly::var(g1(), 0)
    }

    fn y() -> SparsePoly {
        SparsePoly::var(g1(), 1)
    }

    #[test]
    fn layout_counts_and_names() {
        assert_eq!(VarLayout::new(1).count(), 2);
        assert_eq!(VarLayout::new(2).count(), 8);
        assert_eq!(VarLayout::new(3).count(), 18);
        let l = VarLayout::new(3);
        let names: Vec<String> = (0..l.count()).map(|i| l.name(i)).collect();
        assert_eq!(&names[..6], &["x1", "x2", "x3", "y1", "y2", "y3"]);
        assert_eq!(&names[6..10], &["xc1_2", "yc1_2", "xu1_2", "yu1_2"]);
        assert_eq!(&names[14..18], &["xc2_3", "yc2_3", "xu2_3", "yu2_3"]);
        for i in 0..l.count() {
            assert_eq!(l.index(l.kind(i)), i);
            assert_eq!(l.dual_index(l.dual_index(i)), i);
        }
    }

    #[test]
    fn difference_of_squares() {
        let one = SparsePoly::one(g1());
        let p = &(&x() - &one) * &(&x() + &one);
        let expect =
            SparsePoly::from_terms(g1(), [(vec![2, 0], BigInt::from(1)), (vec![0, 0], BigInt::from(-1))]).unwrap();
        assert_eq!(p, expect);
        assert_eq!(&p + &SparsePoly::zero(g1()), p);
    }

    #[test]
    fn layout_mismatch() {
        let p = SparsePoly::one(VarLayout::new(2));
        assert_eq!(x().try_add(&p).unwrap_err(), PolyError::LayoutMismatch(1, 2));
    }

    #[test]
    fn shift_round_trip() {
        let p = &(&x() * &x()) + &(&y().scale(&BigInt::from(-3)) * &x());
        let shifted = p.shift_all(1);
        assert_eq!(shifted.shift_all(-1), p);
        assert_eq!(x().shift_all(1), &x() + &SparsePoly::one(g1()));
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(SparsePoly::zero(g1()).to_text(), "0");
        let p = &x() + &y();
        assert_eq!(p.to_text(), "1 * y1 + 1 * x1");
        assert_eq!(SparsePoly::parse_text(&p.to_text(), g1()).unwrap(), p);
        let q = &(&x() * &y()).scale(&BigInt::from(-7)) + &SparsePoly::constant(g1(), 3);
        assert_eq!(q.to_text(), "3 - 7 * x1 * y1");
        assert_eq!(SparsePoly::parse_text(&q.to_text(), g1()).unwrap(), q);
        assert_eq!(SparsePoly::parse_text("0", g1()).unwrap(), SparsePoly::zero(g1()));
        assert!(matches!(SparsePoly::parse_text("1 * z", g1()), Err(PolyError::Parse { pos: 4, .. })));
        assert!(SparsePoly::parse_text("", g1()).is_err());
        assert!(SparsePoly::parse_text("1 * x1^300", g1()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = &(&x() * &y()).scale(&BigInt::from(-12345678901234567890i128)) + &y();
        assert_eq!(SparsePoly::from_json(&p.to_json()).unwrap(), p);
        assert!(SparsePoly::from_json("{\"g\":1,\"terms\":[{\"exps\":[1],\"coef\":\"1\"}]}").is_err());
    }

    #[test]
    fn ranks() {
        let p = &x() + &y();
        assert_eq!(linear_rank(std::slice::from_ref(&p)).unwrap(), 1);
        assert_eq!(linear_rank(&[p.clone(), p.scale(&BigInt::from(2))]).unwrap(), 1);
        assert_eq!(linear_rank(&[p.clone(), x(), y()]).unwrap(), 2);
        assert_eq!(linear_rank(&[SparsePoly::zero(g1())]).unwrap(), 0);
    }

    #[test]
    fn substitute_and_evaluate() {
        let p = &(&x() * &y()) + &x();
        let at = p.evaluate_int(&[2, 3]);
        assert_eq!(at, BigInt::from(8));
        let q = p.substitute(&[Subst::Const(BigInt::from(2)), Subst::Var(0)], g1()).unwrap();
        assert_eq!(q, &x().scale(&BigInt::from(2)) + &SparsePoly::constant(g1(), 2));
        let r = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(p.evaluate(&[r.clone(), r]), BigRational::new(BigInt::from(3), BigInt::from(4)));
    }

    #[test]
    fn swap_is_involution() {
        let l = VarLayout::new(2);
        let p = &SparsePoly::var(l, l.index(VarKind::XCap(0, 1))) * &SparsePoly::var(l, 0);
        let s = p.swap_xy();
        assert_eq!(s, &SparsePoly::var(l, l.index(VarKind::YCup(0, 1))) * &SparsePoly::var(l, 2));
        assert_eq!(s.swap_xy(), p);
    }
}
