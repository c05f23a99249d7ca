//! Linear codes over `F_q` (`q` in 2, 3, 5, 7): vector matroids, weight
//! enumerators, the Tutte bridge and Type II checks.

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matroid::{Matroid, MatroidError, RankTable};
use crate::poly::{linear_rank, PolyError, SparsePoly, VarLayout};
use crate::subset::{k_subsets, Subset, MAX_GROUND};
use crate::tutte::{self, GenusJob, Specialization, TutteError};

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("field size {0} is not one of 2, 3, 5, 7")]
    UnsupportedField(u32),
    #[error("operation needs the binary field, got q = {0}")]
    WrongField(u8),
    #[error("codes have different lengths: {0} and {1}")]
    MixedLengths(usize, usize),
    #[error("{0} codewords exceed the enumeration budget of {1}")]
    BudgetExceeded(u128, u64),
    #[error("code length {0} exceeds {1}")]
    TooLong(usize, usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Tutte(#[from] TutteError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Result<T, E = CodeError> = std::result::Result<T, E>;

/// Codeword enumeration budget.
pub const WORD_BUDGET: u64 = 1 << 24;

fn check_field(q: u32) -> Result<u8> {
    match q {
        2 | 3 | 5 | 7 => Ok(q as u8),
        _ => Err(CodeError::UnsupportedField(q)),
    }
}

fn inv(a: u8, q: u8) -> u8 {
    (1..q).find(|&b| (a as u32 * b as u32) % q as u32 == 1).expect("nonzero element of a prime field")
}

/// Matrix over a small prime field, entries reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    q: u8,
    cols: usize,
    rows: Vec<Vec<u8>>,
}

impl FieldMatrix {
    pub fn new(q: u32, rows: Vec<Vec<i64>>) -> Result<FieldMatrix> {
        let q = check_field(q)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(CodeError::Invalid("rows have different lengths".into()));
        }
        let rows = rows.into_iter().map(|r| r.into_iter().map(|v| v.rem_euclid(q as i64) as u8).collect()).collect();
        Ok(FieldMatrix { q, cols, rows })
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> FieldMatrix {
        let q = self.q as u32;
        let mut m = self.rows.clone();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, p);
            let iv = inv(m[r][c], self.q) as u32;
            for v in m[r].iter_mut() {
                *v = (*v as u32 * iv % q) as u8;
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c] as u32;
                    for j in 0..self.cols {
                        m[i][j] = ((m[i][j] as u32 + q * q - f * m[r][j] as u32) % q) as u8;
                    }
                }
            }
            r += 1;
        }
        m.truncate(r);
        FieldMatrix { q: self.q, cols: self.cols, rows: m }
    }

    pub fn rank(&self) -> usize {
        self.rref().rows.len()
    }

    /// Rank of the columns in `set`.
    pub fn column_rank(&self, set: Subset) -> usize {
        let sub: Vec<Vec<i64>> = self.rows.iter().map(|r| set.iter().map(|c| r[c] as i64).collect()).collect();
        FieldMatrix::new(self.q as u32, sub).expect("same field").rank()
    }

    /// Rank of every column subset, by a depth-first walk that keeps an echelon
    /// basis of the columns chosen so far.
    pub fn column_rank_table(&self) -> Result<RankTable> {
        let n = self.cols;
        if n > RankTable::MAX_N {
            return Err(MatroidError::TableTooLarge { n, max: RankTable::MAX_N }.into());
        }
        let basis = self.rref();
        let k = basis.rows.len();
        let columns: Vec<Vec<u8>> = (0..n).map(|c| basis.rows.iter().map(|r| r[c]).collect()).collect();
        let mut ranks = vec![0u8; 1 << n];
        let mut walk = RankWalk { q: self.q, k, columns: &columns, ranks: &mut ranks };
        walk.visit(0, 0, &mut Vec::new());
        Ok(RankTable::from_ranks(n, ranks))
    }
}

struct RankWalk<'a> {
    q: u8,
    k: usize,
    columns: &'a [Vec<u8>],
    ranks: &'a mut [u8],
}

impl RankWalk<'_> {
    /// `echelon` holds `(pivot, vector)` pairs with the pivot entry equal to 1.
    fn visit(&mut self, start: usize, mask: usize, echelon: &mut Vec<(usize, Vec<u8>)>) {
        self.ranks[mask] = echelon.len() as u8;
        let q = self.q as u32;
        for f in start..self.columns.len() {
            let mut v = self.columns[f].clone();
            for (p, b) in echelon.iter() {
                let c = v[*p] as u32;
                if c != 0 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = ((*x as u32 + q * q - c * *y as u32) % q) as u8;
                    }
                }
            }
            match (0..self.k).find(|&i| v[i] != 0) {
                Some(p) => {
                    let iv = inv(v[p], self.q) as u32;
                    for x in v.iter_mut() {
                        *x = (*x as u32 * iv % q) as u8;
                    }
                    echelon.push((p, v));
                    self.visit(f + 1, mask | 1 << f, echelon);
                    echelon.pop();
                }
                None => self.visit(f + 1, mask | 1 << f, echelon),
            }
        }
    }
}

/// A code given by a generator matrix; `k` is the matrix rank.
#[derive(Clone, Debug)]
pub struct LinearCode {
    pub name: String,
    generator: FieldMatrix,
    basis: FieldMatrix,
}

impl LinearCode {
    pub fn new(name: impl Into<String>, generator: FieldMatrix) -> LinearCode {
        let basis = generator.rref();
        LinearCode { name: name.into(), generator, basis }
    }

    pub fn from_rows(name: &str, q: u32, rows: &[&str]) -> Result<LinearCode> {
        let text = rows.join("\n");
        Ok(LinearCode::new(name, parse_rows(&text, q)?))
    }

    pub fn q(&self) -> u8 {
        self.generator.q
    }

    pub fn length(&self) -> usize {
        self.generator.cols
    }

    pub fn dimension(&self) -> usize {
        self.basis.rows.len()
    }

    pub fn generator(&self) -> &FieldMatrix {
        &self.generator
    }

    pub fn basis(&self) -> &FieldMatrix {
        &self.basis
    }

    /// Calls `f` on every codeword.
    fn for_each_word(&self, mut f: impl FnMut(&[u8])) -> Result<()> {
        let (q, k, n) = (self.q() as u32, self.dimension(), self.length());
        let count = (q as u128).pow(k as u32);
        if count > WORD_BUDGET as u128 {
            return Err(CodeError::BudgetExceeded(count, WORD_BUDGET));
        }
        let mut msg = vec![0u32; k];
        let mut word = vec![0u8; n];
        loop {
            f(&word);
            // Odometer step: bump the first digit that does not wrap.
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(());
                }
                msg[i] += 1;
                for (w, &b) in word.iter_mut().zip(&self.basis.rows[i]) {
                    *w = ((*w as u32 + b as u32) % q) as u8;
                }
                if msg[i] < q {
                    break;
                }
                msg[i] = 0;
                i += 1;
            }
        }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let q = self.q() as u32;
        let rows = &self.basis.rows;
        rows.iter()
            .all(|a| rows.iter().all(|b| a.iter().zip(b).map(|(&x, &y)| x as u32 * y as u32).sum::<u32>() % q == 0))
    }
}

/// Parses one row per line: digits, optionally separated by spaces or commas.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_rows(text: &str, q: u32) -> Result<FieldMatrix> {
    let qq = check_field(q)?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for ch in line.chars() {
            match ch {
                ' ' | '\t' | ',' => {}
                d if d.is_ascii_digit() => {
                    let v = d as u8 - b'0';
                    if v >= qq {
                        return Err(CodeError::Parse { line: ln + 1, msg: format!("digit {v} not in F_{q}") });
                    }
                    row.push(v as i64);
                }
                other => return Err(CodeError::Parse { line: ln + 1, msg: format!("unexpected character {other:?}") }),
            }
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(CodeError::Parse {
                    line: ln + 1,
                    msg: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        if row.len() > MAX_GROUND {
            return Err(CodeError::TooLong(row.len(), MAX_GROUND));
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CodeError::Parse { line: 0, msg: "no rows".into() });
    }
    FieldMatrix::new(q, rows)
}

/// Sidecar manifest `{q, n, k, name}` for a rows file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CodeManifest {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub name: String,
}

impl CodeManifest {
    pub fn parse(text: &str) -> Result<CodeManifest> {
        let m: CodeManifest =
            serde_json::from_str(text).map_err(|e| CodeError::Parse { line: e.line(), msg: e.to_string() })?;
        check_field(m.q)?;
        Ok(m)
    }

    /// Loads the rows and checks length and dimension against the manifest.
    pub fn load(&self, rows_text: &str) -> Result<LinearCode> {
        let code = LinearCode::new(self.name.clone(), parse_rows(rows_text, self.q)?);
        if code.length() != self.n || code.dimension() != self.k {
            return Err(CodeError::Invalid(format!(
                "{}: manifest says [{}, {}], rows give [{}, {}]",
                self.name,
                self.n,
                self.k,
                code.length(),
                code.dimension()
            )));
        }
        Ok(code)
    }
}

/// Column matroid of `m`, with its bases listed explicitly.
pub fn vector_matroid(m: &FieldMatrix) -> Result<Matroid> {
    let n = m.cols;
    if n > MAX_GROUND {
        return Err(MatroidError::SizeOverflow(n).into());
    }
    let r = m.rank();
    let bases: Vec<Subset> = if n <= RankTable::MAX_N {
        let table = m.column_rank_table()?;
        k_subsets(n, r).filter(|b| table.rank(b.0) as usize == r).collect()
    } else {
        k_subsets(n, r).filter(|&b| m.column_rank(b) == r).collect()
    };
    Ok(Matroid::from_bases(n, bases)?)
}

/// `T^(1)` of the column matroid, straight from the rank table.
pub fn code_tutte(c: &LinearCode) -> Result<SparsePoly> {
    let table = c.generator.column_rank_table()?;
    Ok(GenusJob::from_table(table, 1).tutte_g()?)
}

/// `A_0, ..., A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub coefficients: Vec<u64>,
}

impl WeightEnumerator {
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// `Σ A_w x^{n−w} y^w` as a genus-1 layout polynomial (`x1` = x, `y1` = y).
    pub fn to_poly(&self) -> SparsePoly {
        let n = self.coefficients.len() - 1;
        let terms = self.coefficients.iter().enumerate().map(|(w, &a)| (vec![(n - w) as u8, w as u8], BigInt::from(a)));
        SparsePoly::from_terms(VarLayout::new(1), terms).expect("genus-1 layout")
    }
}

pub fn weight_enumerator_direct(c: &LinearCode) -> Result<WeightEnumerator> {
    let mut coefficients = vec![0u64; c.length() + 1];
    c.for_each_word(|w| coefficients[w.iter().filter(|&&v| v != 0).count()] += 1)?;
    Ok(WeightEnumerator { coefficients })
}

/// `Σ p_ij (x+(q−1)y)^i (x−y)^{dx−i} x^j y^{dy−j}`: the bivariate `p(X, Y)` at
/// `X = (x+(q−1)y)/(x−y)`, `Y = x/y`, multiplied by `(x−y)^dx y^dy`.
pub fn greene_clear(p: &SparsePoly, q: u8, dx: usize, dy: usize) -> Result<SparsePoly> {
    let l = VarLayout::new(1);
    let x = SparsePoly::var(l, 0);
    let y = SparsePoly::var(l, 1);
    let a = &x + &y.scale(&BigInt::from(q - 1));
    let b = &x - &y;
    let mut out = SparsePoly::zero(l);
    for (e, c) in p.terms() {
        let (i, j) = (e[0] as usize, e[1] as usize);
        if i > dx || j > dy {
            return Err(CodeError::Invalid("clearing degrees below the polynomial degree".into()));
        }
        let term = &(&a.try_pow(i as u32)? * &b.try_pow((dx - i) as u32)?)
            * &(&x.try_pow(j as u32)? * &y.try_pow((dy - j) as u32)?);
        out = &out + &term.scale(c);
    }
    Ok(out)
}

fn enumerator_from_poly(p: &SparsePoly, n: usize) -> Result<WeightEnumerator> {
    let mut coefficients = vec![0u64; n + 1];
    for (e, c) in p.terms() {
        if e[0] as usize + e[1] as usize != n || c < &BigInt::zero() {
            return Err(CodeError::Invalid(format!("term {e:?} with coefficient {c} is not a weight count")));
        }
        coefficients[e[1] as usize] =
            u64::try_from(c).map_err(|_| CodeError::Invalid("coefficient overflow".into()))?;
    }
    Ok(WeightEnumerator { coefficients })
}

/// Weight enumerator from `T^(1)` of the column matroid.
pub fn weight_enumerator_via_greene(c: &LinearCode) -> Result<WeightEnumerator> {
    let t = code_tutte(c)?;
    let (n, k) = (c.length(), c.dimension());
    enumerator_from_poly(&greene_clear(&t, c.q(), k, n - k)?, n)
}

/// Per-specialisation comparison of the genus-2 weight-enumerator formulas.
#[derive(Clone, Debug)]
pub struct Genus2WeightReport {
    pub outcomes: Vec<(Specialization, bool)>,
}

impl Genus2WeightReport {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(|(_, ok)| *ok)
    }
}

/// Compares each genus-2 specialisation with `T^(1)` after the Greene
/// substitution, as polynomials in `x, y` with denominators cleared.
pub fn genus2_weight_identities(c: &LinearCode) -> Result<Genus2WeightReport> {
    let table = c.generator.column_rank_table()?;
    let w2 = GenusJob::from_table(table.clone(), 2).whitney_g()?;
    let t1 = GenusJob::from_table(table, 1).tutte_g()?;
    let (n, k) = (c.length(), c.dimension());
    let mut outcomes = Vec::new();
    for s in Specialization::ALL {
        let p = tutte::specialize_genus2(&w2, s)?;
        let dx = k.max(p.degree_in(0) as usize);
        let dy = (n - k).max(p.degree_in(1) as usize);
        let ok = greene_clear(&p, c.q(), dx, dy)? == greene_clear(&t1, c.q(), dx, dy)?;
        outcomes.push((s, ok));
    }
    Ok(Genus2WeightReport { outcomes })
}

/// True when all three genus-2 formulas reproduce the weight enumerator.
pub fn genus2_weight_identities_check(c: &LinearCode) -> Result<bool> {
    Ok(genus2_weight_identities(c)?.all_hold())
}

/// Binary, self-dual, doubly even, length divisible by 8.
pub fn is_type_ii(c: &LinearCode) -> Result<bool> {
    if c.q() != 2 {
        return Err(CodeError::WrongField(c.q()));
    }
    let n = c.length();
    if !n.is_multiple_of(8) || 2 * c.dimension() != n || !c.is_self_orthogonal() {
        return Ok(false);
    }
    let w = weight_enumerator_direct(c)?;
    Ok(w.coefficients.iter().enumerate().all(|(i, &a)| a == 0 || i % 4 == 0))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WittVerdict {
    Independent,
    Dependent,
}

/// Rank of the genus-1 Tutte polynomials of the codes' column matroids.
pub fn witt_independence(codes: &[LinearCode]) -> Result<(usize, WittVerdict)> {
    if let Some(first) = codes.first() {
        if let Some(c) = codes.iter().find(|c| c.length() != first.length()) {
            return Err(CodeError::MixedLengths(first.length(), c.length()));
        }
    }
    let polys = codes.iter().map(code_tutte).collect::<Result<Vec<_>>>()?;
    let rank = linear_rank(&polys)?;
    let verdict = if rank == codes.len() { WittVerdict::Independent } else { WittVerdict::Dependent };
    Ok((rank, verdict))
}

/// `(1/|C|) W_C(x + (q−1)y, x − y)` as a weight enumerator.
pub fn macwilliams_transform(w: &WeightEnumerator, q: u8) -> Result<WeightEnumerator> {
    let n = w.coefficients.len() - 1;
    let l = VarLayout::new(1);
    let x = SparsePoly::var(l, 0);
    let y = SparsePoly::var(l, 1);
    let a = &x + &y.scale(&BigInt::from(q - 1));
    let b = &x - &y;
    let mut out = SparsePoly::zero(l);
    for (i, &c) in w.coefficients.iter().enumerate() {
        out = &out + &(&a.try_pow((n - i) as u32)? * &b.try_pow(i as u32)?).scale(&BigInt::from(c));
    }
    let size = BigInt::from(w.total());
    let out = out.div_exact(&size).ok_or_else(|| CodeError::Invalid("transform not divisible".into()))?;
    enumerator_from_poly(&out, n)
}

/// `q^k` as a `BigInt`, for comparisons.
pub fn code_size(c: &LinearCode) -> BigInt {
    Pow::pow(BigInt::from(c.q()), c.dimension() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::uniform;

    fn hamming74() -> LinearCode {
        LinearCode::from_rows("hamming", 2, &["1000110", "0100101", "0010011", "0001111"]).unwrap()
    }

    #[test]
    fn small_vector_matroids() {
        let id = FieldMatrix::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(vector_matroid(&id).unwrap(), uniform(2, 2));
        let m = FieldMatrix::new(2, vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(vector_matroid(&m).unwrap(), uniform(2, 3));
    }

    #[test]
    fn rank_table_matches_direct() {
        let g = hamming74();
        let t = g.generator().column_rank_table().unwrap();
        for a in 0..128u32 {
            assert_eq!(t.rank(a) as usize, g.generator().column_rank(Subset(a)));
        }
    }

    #[test]
    fn hamming_weights() {
        let w = weight_enumerator_direct(&hamming74()).unwrap();
        assert_eq!(w.coefficients, vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(weight_enumerator_via_greene(&hamming74()).unwrap(), w);
    }

    #[test]
    fn rows_parser() {
        assert!(parse_rows("12\n01", 2).is_err());
        assert!(parse_rows("1 0 1\n0 1", 2).is_err());
        assert!(parse_rows("# comment\n\n1,0,2\n", 3).is_ok());
        assert!(matches!(parse_rows("10", 4), Err(CodeError::UnsupportedField(4))));
        assert!(parse_rows("", 2).is_err());
    }

    #[test]
    fn manifest_checks_shape() {
        let m = CodeManifest::parse(r#"{"q":2,"n":7,"k":4,"name":"h"}"#).unwrap();
        assert!(m.load("1000110\n0100101\n0010011\n0001111").is_ok());
        assert!(m.load("1000110\n0100101").is_err());
        assert!(CodeManifest::parse(r#"{"q":4,"n":7,"k":4,"name":"h"}"#).is_err());
    }

    #[test]
    fn type_ii_flags() {
        let rep = LinearCode::from_rows("rep", 2, &["11"]).unwrap();
        assert!(!is_type_ii(&rep).unwrap());
        assert!(!is_type_ii(&hamming74()).unwrap());
        let t = LinearCode::from_rows("t", 3, &["12"]).unwrap();
        assert!(matches!(is_type_ii(&t), Err(CodeError::WrongField(3))));
    }

    #[test]
    fn mixed_lengths_rejected() {
        let a = LinearCode::from_rows("a", 2, &["11"]).unwrap();
        assert!(matches!(witt_independence(&[a, hamming74()]), Err(CodeError::MixedLengths(2, 7))));
        assert_eq!(witt_independence(&[hamming74()]).unwrap(), (1, WittVerdict::Independent));
    }
}
