//! Genus-g Tutte and Whitney polynomials by exhaustive tuple enumeration,
//! together with genus-1 oracles and the identity checks built on them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Pow};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::matroid::{Matroid, MatroidError, RankTable};
use crate::poly::{ExponentVector, PolyError, SparsePoly, Subst, VarKind, VarLayout};
use crate::subset::{binomial, Subset};

/// Default tuple budget, `2^26`.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "GTUTTE_BUDGET";

/// Largest genus the packed enumeration keys support.
pub const MAX_GENUS: usize = 8;

#[derive(Debug, Error)]
pub enum TutteError {
    #[error("job needs {required} tuples, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("genus must be between 1 and {MAX_GENUS}, got {0}")]
    BadGenus(usize),
    #[error("deletion-contraction oracle is limited to 20 elements, got {0}")]
    TooLarge(usize),
    #[error("thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Result<T, E = TutteError> = std::result::Result<T, E>;

/// Budget from [`BUDGET_ENV`] if set and valid, else the default.
pub fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).filter(|&b| b > 0).unwrap_or(DEFAULT_BUDGET)
}

/// One genus-g enumeration over a rank table.
#[derive(Clone, Debug)]
pub struct GenusJob {
    table: RankTable,
    g: usize,
    budget: u64,
    force: bool,
    threads: Option<usize>,
}

/// Distinct exponent vectors of `R^(g)` with their tuple counts, sorted by exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCounts {
    pub layout: VarLayout,
    pub entries: Vec<(ExponentVector, u64)>,
}

impl MonomialCounts {
    pub fn total(&self) -> u128 {
        self.entries.iter().map(|(_, c)| *c as u128).sum()
    }

    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly::from_terms(self.layout, self.entries.iter().map(|(e, c)| (e.clone(), BigInt::from(*c))))
            .expect("entries match the layout")
    }
}

impl GenusJob {
    pub fn new(m: &Matroid, g: usize) -> Result<GenusJob> {
        Ok(GenusJob::from_table(m.rank_table()?, g))
    }

    pub fn from_table(table: RankTable, g: usize) -> GenusJob {
        GenusJob { table, g, budget: default_budget(), force: false, threads: None }
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Runs even when the tuple count exceeds the budget.
    pub fn force(mut self, force: bool) -> Self {
        self.force = force;
        self
    }

    pub fn threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn layout(&self) -> VarLayout {
        VarLayout::new(self.g)
    }

    /// `2^(g·n)`.
    pub fn tuple_count(&self) -> u128 {
        let bits = self.g * self.table.size();
        if bits >= 128 {
            u128::MAX
        } else {
            1u128 << bits
        }
    }

    fn check(&self) -> Result<()> {
        if self.g == 0 || self.g > MAX_GENUS {
            return Err(TutteError::BadGenus(self.g));
        }
        let required = self.tuple_count();
        if required > self.budget as u128 && !self.force {
            return Err(TutteError::BudgetExceeded { required, budget: self.budget });
        }
        Ok(())
    }

    fn in_pool<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.threads {
            None => Ok(f()),
            Some(k) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(k.max(1))
                    .build()
                    .map_err(|e| TutteError::Pool(e.to_string()))?;
                Ok(pool.install(f))
            }
        }
    }

    /// Tuple counts per distinct exponent vector.
    pub fn whitney_counts(&self) -> Result<MonomialCounts> {
        self.check()?;
        let layout = self.layout();
        let words = layout.count().div_ceil(FIELDS_PER_WORD);
        let entries = self.in_pool(|| match words {
            1 => enumerate::<1>(&self.table, self.g),
            2 => enumerate::<2>(&self.table, self.g),
            3 | 4 => enumerate::<4>(&self.table, self.g),
            5..=8 => enumerate::<8>(&self.table, self.g),
            _ => enumerate::<13>(&self.table, self.g),
        })?;
        Ok(MonomialCounts { layout, entries })
    }

    /// `R^(g)(M)`.
    pub fn whitney_g(&self) -> Result<SparsePoly> {
        Ok(self.whitney_counts()?.to_poly())
    }

    /// `T^(g)(M) = R^(g)(M)` with every variable shifted by `-1`.
    pub fn tutte_g(&self) -> Result<SparsePoly> {
        Ok(self.whitney_g()?.shift_all(-1))
    }

    /// Genus-2 enumeration split by `(|A1∩A2|, |A1|, |A2|)`, in Whitney form.
    pub fn whitney_g2_buckets(&self) -> Result<BTreeMap<(u8, u8, u8), SparsePoly>> {
        if self.g != 2 {
            return Err(TutteError::BadGenus(self.g));
        }
        self.check()?;
        let t = &self.table;
        let n = t.size();
        let r = t.full_rank() as u8;
        let layout = self.layout();
        let buckets = self.in_pool(|| {
            (0..1u32 << n)
                .into_par_iter()
                .fold(FxHashMap::<(u8, u8, u8, u64), u64>::default, |mut acc, a| {
                    for b in 0..1u32 << n {
                        let (c, u) = (a & b, a | b);
                        let ex = [
                            r - t.rank(a),
                            r - t.rank(b),
                            a.count_ones() as u8 - t.rank(a),
                            b.count_ones() as u8 - t.rank(b),
                            r - t.rank(c),
                            c.count_ones() as u8 - t.rank(c),
                            r - t.rank(u),
                            u.count_ones() as u8 - t.rank(u),
                        ];
                        let packed = ex.iter().enumerate().fold(0u64, |k, (i, &v)| k | (v as u64) << (6 * i));
                        let key = (c.count_ones() as u8, a.count_ones() as u8, b.count_ones() as u8, packed);
                        *acc.entry(key).or_default() += 1;
                    }
                    acc
                })
                .reduce(FxHashMap::default, merge_maps)
        })?;
        let mut out: BTreeMap<(u8, u8, u8), SparsePoly> = BTreeMap::new();
        for ((s, ta, ub, packed), count) in buckets {
            let exps: Vec<u8> = (0..8).map(|i| (packed >> (6 * i) & 63) as u8).collect();
            out.entry((s, ta, ub)).or_insert_with(|| SparsePoly::zero(layout)).add_term(exps, BigInt::from(count));
        }
        Ok(out)
    }
}

const FIELDS_PER_WORD: usize = 10;

#[inline]
fn put<const W: usize>(key: &mut [u64; W], var: usize, value: u8) {
    key[var / FIELDS_PER_WORD] += (value as u64) << (6 * (var % FIELDS_PER_WORD));
}

fn merge_maps<K: std::hash::Hash + Eq>(mut a: FxHashMap<K, u64>, b: FxHashMap<K, u64>) -> FxHashMap<K, u64> {
    let (mut a, b) = if a.len() >= b.len() { (a, b) } else { (b, std::mem::take(&mut a)) };
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

struct Enumerator<'a> {
    table: &'a RankTable,
    g: usize,
    layout: VarLayout,
    /// Per subset: `(ρ(E) - ρ(A), |A| - ρ(A))`.
    single: Vec<(u8, u8)>,
}

impl Enumerator<'_> {
    #[inline]
    fn pair_exps(&self, a: u32) -> (u8, u8) {
        self.single[a as usize]
    }

    fn descend<const W: usize>(
        &self,
        depth: usize,
        sets: &mut [u32; MAX_GENUS],
        key: [u64; W],
        out: &mut FxHashMap<[u64; W], u64>,
    ) {
        if depth == self.g {
            *out.entry(key).or_default() += 1;
            return;
        }
        let l = self.layout;
        for a in 0..1u32 << self.table.size() {
            let mut k = key;
            let (x, y) = self.single[a as usize];
            put(&mut k, l.x(depth), x);
            put(&mut k, l.y(depth), y);
            for (i, &b) in sets[..depth].iter().enumerate() {
                let base = l.pair_base(i, depth);
                let (xc, yc) = self.pair_exps(a & b);
                let (xu, yu) = self.pair_exps(a | b);
                put(&mut k, base, xc);
                put(&mut k, base + 1, yc);
                put(&mut k, base + 2, xu);
                put(&mut k, base + 3, yu);
            }
            sets[depth] = a;
            self.descend(depth + 1, sets, k, out);
        }
    }
}

fn enumerate<const W: usize>(table: &RankTable, g: usize) -> Vec<(ExponentVector, u64)> {
    let n = table.size();
    let r = table.full_rank() as u8;
    let layout = VarLayout::new(g);
    let single = (0..1u32 << n).map(|a| (r - table.rank(a), a.count_ones() as u8 - table.rank(a))).collect();
    let en = Enumerator { table, g, layout, single };
    let merged = (0..1u32 << n)
        .into_par_iter()
        .fold(FxHashMap::<[u64; W], u64>::default, |mut acc, a1| {
            let mut sets = [0u32; MAX_GENUS];
            sets[0] = a1;
            let mut key = [0u64; W];
            let (x, y) = en.single[a1 as usize];
            put(&mut key, layout.x(0), x);
            put(&mut key, layout.y(0), y);
            en.descend(1, &mut sets, key, &mut acc);
            acc
        })
        .reduce(FxHashMap::default, merge_maps);
    let vars = layout.count();
    let mut entries: Vec<(ExponentVector, u64)> = merged
        .into_iter()
        .map(|(key, c)| {
            let exps =
                (0..vars).map(|v| (key[v / FIELDS_PER_WORD] >> (6 * (v % FIELDS_PER_WORD)) & 63) as u8).collect();
            (exps, c)
        })
        .collect();
    entries.sort_unstable();
    entries
}

/// `R^(g)(M)`, default budget.
pub fn whitney_g(m: &Matroid, g: usize) -> Result<SparsePoly> {
    GenusJob::new(m, g)?.whitney_g()
}

/// `T^(g)(M)`, default budget.
pub fn tutte_g(m: &Matroid, g: usize) -> Result<SparsePoly> {
    GenusJob::new(m, g)?.tutte_g()
}

fn g1() -> VarLayout {
    VarLayout::new(1)
}

/// `(x - 1)^a (y - 1)^b` in the genus-1 layout.
fn shifted_power(a: u8, b: u8) -> SparsePoly {
    let mut p = SparsePoly::zero(g1());
    for i in 0..=a {
        for j in 0..=b {
            let sign = if (a - i + b - j).is_multiple_of(2) { 1 } else { -1 };
            let c =
                BigInt::from(binomial(a as usize, i as usize)) * BigInt::from(binomial(b as usize, j as usize)) * sign;
            p.add_term(vec![i, j], c);
        }
    }
    p
}

/// Genus-1 Tutte polynomial straight from the rank-sum definition, using the
/// basis-scan rank oracle (no rank table, no engine).
pub fn tutte_rank_sum(m: &Matroid) -> SparsePoly {
    let n = m.size();
    let r = m.rank();
    let mut counts: BTreeMap<(u8, u8), u64> = BTreeMap::new();
    for a in 0..(1u64 << n) {
        let a = Subset(a as u32);
        let ra = m.rank_of(a);
        *counts.entry(((r - ra) as u8, (a.len() - ra) as u8)).or_default() += 1;
    }
    let mut out = SparsePoly::zero(g1());
    for ((a, b), c) in counts {
        out = &out + &shifted_power(a, b).scale(&BigInt::from(c));
    }
    out
}

/// Deletion-contraction with memoisation on the remaining basis family.
pub fn tutte1_deletion_contraction(m: &Matroid) -> Result<SparsePoly> {
    if m.size() > 20 {
        return Err(TutteError::TooLarge(m.size()));
    }
    let mut memo: FxHashMap<(u32, Vec<u32>), SparsePoly> = FxHashMap::default();
    let bases: Vec<u32> = m.bases().iter().map(|b| b.0).collect();
    Ok(dc(m.ground().0, bases, &mut memo))
}

fn dc(ground: u32, bases: Vec<u32>, memo: &mut FxHashMap<(u32, Vec<u32>), SparsePoly>) -> SparsePoly {
    if ground == 0 {
        return SparsePoly::one(g1());
    }
    let key = (ground, bases);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (ground, bases) = key;
    let bit = ground & ground.wrapping_neg();
    let rest = ground & !bit;
    let with: Vec<u32> = bases.iter().filter(|&&b| b & bit != 0).map(|&b| b & !bit).collect();
    let without: Vec<u32> = bases.iter().copied().filter(|&b| b & bit == 0).collect();
    let result = if with.is_empty() {
        &SparsePoly::var(g1(), 1) * &dc(rest, without, memo)
    } else if without.is_empty() {
        &SparsePoly::var(g1(), 0) * &dc(rest, with, memo)
    } else {
        let mut with = with;
        with.sort_unstable();
        &dc(rest, without, memo) + &dc(rest, with, memo)
    };
    memo.insert((ground, bases), result.clone());
    result
}

/// `Σ_{i≤r} C(n,i)(x−1)^{r−i} + Σ_{i>r} C(n,i)(y−1)^{i−r}`.
pub fn uniform_tutte_formula(r: usize, n: usize) -> SparsePoly {
    assert!(r <= n);
    let mut out = SparsePoly::zero(g1());
    for i in 0..=n {
        let c = BigInt::from(binomial(n, i));
        let term = if i <= r { shifted_power((r - i) as u8, 0) } else { shifted_power(0, (i - r) as u8) };
        out = &out + &term.scale(&c);
    }
    out
}

/// `xy - x - y` in the genus-1 layout.
pub fn xy_minus_x_minus_y() -> SparsePoly {
    let x = SparsePoly::var(g1(), 0);
    let y = SparsePoly::var(g1(), 1);
    &(&(&x * &y) - &x) - &y
}

/// Checks `T(relax(M, X)) = T(M) - xy + x + y`.
pub fn relaxation_identity_check(m: &Matroid, x: Subset) -> Result<bool> {
    let relaxed = m.relax(x)?;
    let lhs = tutte_g(&relaxed, 1)?;
    let rhs = &tutte_g(m, 1)? - &xy_minus_x_minus_y();
    Ok(lhs == rhs)
}

/// Which variables of the extra tuple slot the reduction identity fixes.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ReductionReading {
    /// Every variable touching slot `g+1` is set to 2.
    AllSlotVariables,
    /// Only `x_{g+1}`, `y_{g+1}`, `x∩(j,g+1)` and `y∪(k,g+1)` are set; the rest stay symbolic.
    Literal,
}

/// Partial evaluation of `T^(g+1)` on the extra slot, divided by `2^n`.
/// `None` when some coefficient is not a multiple of `2^n`.
pub fn reduce_top_slot(t_next: &SparsePoly, n: usize, reading: ReductionReading) -> Result<Option<SparsePoly>> {
    let big = t_next.layout();
    let g = big.genus() - 1;
    let small = VarLayout::new(g);
    let target = match reading {
        ReductionReading::AllSlotVariables => small,
        ReductionReading::Literal => big,
    };
    let subs: Vec<Subst> = (0..big.count())
        .map(|v| {
            let kind = big.kind(v);
            let touches_top = match kind {
                VarKind::X(i) | VarKind::Y(i) => i == g,
                VarKind::XCap(_, j) | VarKind::YCap(_, j) | VarKind::XCup(_, j) | VarKind::YCup(_, j) => j == g,
            };
            let fixed = touches_top
                && (reading == ReductionReading::AllSlotVariables
                    || matches!(kind, VarKind::X(_) | VarKind::Y(_) | VarKind::XCap(..) | VarKind::YCup(..)));
            if fixed {
                Subst::Const(BigInt::from(2))
            } else if target == big {
                Subst::Var(v)
            } else {
                Subst::Var(small.index(kind))
            }
        })
        .collect();
    let reduced = t_next.substitute(&subs, target)?;
    Ok(reduced.div_exact(&Pow::pow(BigInt::from(2), n as u32)))
}

/// Embeds a genus-g polynomial into the genus-(g+1) layout.
pub fn embed_next_genus(p: &SparsePoly) -> SparsePoly {
    let small = p.layout();
    let big = VarLayout::new(small.genus() + 1);
    let subs: Vec<Subst> = (0..small.count()).map(|v| Subst::Var(big.index(small.kind(v)))).collect();
    p.substitute(&subs, big).expect("embedding is total")
}

/// Checks `T^(g)(M) = 2^{-n} T^(g+1)(M)|_{slot g+1 = 2}` under the given reading.
pub fn reduction_identity_check(m: &Matroid, g: usize, reading: ReductionReading) -> Result<bool> {
    let lower = tutte_g(m, g)?;
    let upper = tutte_g(m, g + 1)?;
    let Some(reduced) = reduce_top_slot(&upper, m.size(), reading)? else {
        return Ok(false);
    };
    Ok(match reading {
        ReductionReading::AllSlotVariables => reduced == lower,
        ReductionReading::Literal => reduced == embed_next_genus(&lower),
    })
}

/// The three genus-2 specialisations `T^(2)(M; 2,2,·,·,2,2,·,·)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `x∩ = 0, x∪ = x, y∩ = 0, y∪ = y`.
    UnionUnion,
    /// `x∩ = x, x∪ = 0, y∩ = y, y∪ = 0`.
    CapCap,
    /// `x∩ = 0, x∪ = x, y∩ = y, y∪ = 0`.
    UnionCap,
}

impl Specialization {
    pub const ALL: [Specialization; 3] = [Specialization::UnionUnion, Specialization::CapCap, Specialization::UnionCap];

    /// Values for `(x∩, y∩, x∪, y∪)`: `None` marks the free `x` or `y`.
    fn pair_values(self) -> [Option<i64>; 4] {
        match self {
            Specialization::UnionUnion => [Some(0), Some(0), None, None],
            Specialization::CapCap => [None, None, Some(0), Some(0)],
            Specialization::UnionCap => [Some(0), None, None, Some(0)],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Specialization::UnionUnion => "T2(M;2,2,0,x,2,2,0,y)",
            Specialization::CapCap => "T2(M;2,2,x,0,2,2,y,0)",
            Specialization::UnionCap => "T2(M;2,2,0,x,2,2,y,0)",
        }
    }
}

/// Evaluates the genus-2 Tutte polynomial, given in Whitney form, at a
/// specialisation; the free `x`, `y` become the genus-1 variables.
pub fn specialize_genus2(whitney2: &SparsePoly, s: Specialization) -> Result<SparsePoly> {
    let l = whitney2.layout();
    if l.genus() != 2 {
        return Err(PolyError::Invalid("specialisation needs a genus-2 polynomial".into()).into());
    }
    let pair = s.pair_values();
    let mut subs = vec![Subst::Const(BigInt::one()); l.count()];
    let slots = [
        (VarKind::XCap(0, 1), pair[0], 0usize),
        (VarKind::YCap(0, 1), pair[1], 1),
        (VarKind::XCup(0, 1), pair[2], 0),
        (VarKind::YCup(0, 1), pair[3], 1),
    ];
    for (kind, value, free) in slots {
        // T at value v is R at v - 1.
        subs[l.index(kind)] = match value {
            Some(v) => Subst::Const(BigInt::from(v - 1)),
            None => Subst::Var(free),
        };
    }
    let partial = whitney2.substitute(&subs, g1())?;
    Ok(partial.shift_all(-1))
}

/// Evaluates a genus-2 specialisation at the free point `(x, y)`.
pub fn specialization_value(whitney2: &SparsePoly, s: Specialization, x: i64, y: i64) -> Result<BigInt> {
    Ok(specialize_genus2(whitney2, s)?.evaluate_int(&[x, y]))
}

/// Outcome of comparing each specialisation with `T(M; x, y)`.
#[derive(Clone, Debug)]
pub struct SpecializationReport {
    pub tutte1: SparsePoly,
    pub variants: Vec<SpecializationOutcome>,
}

#[derive(Clone, Debug)]
pub struct SpecializationOutcome {
    pub variant: Specialization,
    pub value: SparsePoly,
    /// Equal to `T(M; x, y)` as a polynomial.
    pub exact: bool,
    /// Equal to `-T(M; x, y)`.
    pub negated: bool,
}

impl SpecializationReport {
    pub fn all_exact(&self) -> bool {
        self.variants.iter().all(|v| v.exact)
    }
}

pub fn specialization_report_from(whitney2: &SparsePoly, tutte1: SparsePoly) -> Result<SpecializationReport> {
    let mut variants = Vec::new();
    for s in Specialization::ALL {
        let value = specialize_genus2(whitney2, s)?;
        let exact = value == tutte1;
        let negated = value == -&tutte1;
        variants.push(SpecializationOutcome { variant: s, value, exact, negated });
    }
    Ok(SpecializationReport { tutte1, variants })
}

pub fn specialization_report(m: &Matroid) -> Result<SpecializationReport> {
    let w2 = whitney_g(m, 2)?;
    specialization_report_from(&w2, tutte_g(m, 1)?)
}

pub fn specialization_identities_check(m: &Matroid) -> Result<bool> {
    Ok(specialization_report(m)?.all_exact())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CountKind {
    Bases,
    Independent,
    Spanning,
}

impl CountKind {
    /// The free point `(x, y)`: `T(1,1)`, `T(2,1)`, `T(1,2)`.
    pub fn point(self) -> (i64, i64) {
        match self {
            CountKind::Bases => (1, 1),
            CountKind::Independent => (2, 1),
            CountKind::Spanning => (1, 2),
        }
    }
}

/// Direct count by enumeration of the basis family.
pub fn count_direct(m: &Matroid, kind: CountKind) -> u64 {
    match kind {
        CountKind::Bases => m.bases().len() as u64,
        CountKind::Independent => m.independent_sets().len() as u64,
        CountKind::Spanning => m.spanning_set_count(),
    }
}

/// The three genus-2 evaluations of a count, one per specialisation.
pub fn count_via_genus2_from(whitney2: &SparsePoly, kind: CountKind) -> Result<[BigInt; 3]> {
    let (x, y) = kind.point();
    Ok([
        specialization_value(whitney2, Specialization::UnionUnion, x, y)?,
        specialization_value(whitney2, Specialization::CapCap, x, y)?,
        specialization_value(whitney2, Specialization::UnionCap, x, y)?,
    ])
}

pub fn count_via_genus2(m: &Matroid, kind: CountKind) -> Result<[BigInt; 3]> {
    count_via_genus2_from(&whitney_g(m, 2)?, kind)
}

/// `2(x1y1−x1−y1)(x2y2−x2−y2)(x∩y∪−x∩−y∪)(x∩−1)^{n−1}(y∪−1)^{n−1}` in the genus-2 layout.
pub fn pair_genus2_difference(n: usize) -> SparsePoly {
    let l = VarLayout::new(2);
    let v = |k: VarKind| SparsePoly::var(l, l.index(k));
    let one = SparsePoly::one(l);
    let f = |a: &SparsePoly, b: &SparsePoly| &(&(a * b) - a) - b;
    let (x1, y1, x2, y2) = (v(VarKind::X(0)), v(VarKind::Y(0)), v(VarKind::X(1)), v(VarKind::Y(1)));
    let (xc, yu) = (v(VarKind::XCap(0, 1)), v(VarKind::YCup(0, 1)));
    let mut p = SparsePoly::constant(l, 2);
    p = &p * &f(&x1, &y1);
    p = &p * &f(&x2, &y2);
    p = &p * &f(&xc, &yu);
    p = &p * &(&xc - &one).try_pow(n as u32 - 1).expect("small power");
    p = &p * &(&yu - &one).try_pow(n as u32 - 1).expect("small power");
    p
}

/// `T(U_{n,2n}) + 2(xy − x − y)`.
pub fn relaxed_pair_tutte(n: usize) -> SparsePoly {
    &uniform_tutte_formula(n, 2 * n) + &xy_minus_x_minus_y().scale(&BigInt::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_q, construct_r, half_x1, half_x2, uniform};
    use num_traits::Zero;

    fn parse1(s: &str) -> SparsePoly {
        SparsePoly::parse_text(s, g1()).unwrap()
    }

    #[test]
    fn empty_matroid_genus1() {
        let w = whitney_g(&uniform(0, 0), 1).unwrap();
        assert_eq!(w, SparsePoly::one(g1()));
    }

    #[test]
    fn small_uniforms() {
        assert_eq!(tutte_g(&uniform(1, 2), 1).unwrap(), parse1("1 * x1 + 1 * y1"));
        assert_eq!(tutte_g(&uniform(2, 3), 1).unwrap(), parse1("1 * x1^2 + 1 * x1 + 1 * y1"));
        assert_eq!(uniform_tutte_formula(1, 2), parse1("1 * x1 + 1 * y1"));
        assert_eq!(uniform_tutte_formula(0, 1), parse1("1 * y1"));
    }

    #[test]
    fn tuple_mass() {
        let w = whitney_g(&uniform(1, 2), 2).unwrap();
        assert_eq!(w.coefficient_sum(), BigInt::from(16));
        let w = whitney_g(&construct_r(3).unwrap(), 2).unwrap();
        assert_eq!(w.coefficient_sum(), BigInt::from(1u64 << 12));
    }

    #[test]
    fn deletion_contraction_basics() {
        assert_eq!(tutte1_deletion_contraction(&uniform(1, 1)).unwrap(), parse1("1 * x1"));
        assert_eq!(tutte1_deletion_contraction(&uniform(0, 1)).unwrap(), parse1("1 * y1"));
        for m in [construct_r(3).unwrap(), construct_q(3).unwrap(), uniform(3, 6)] {
            assert_eq!(tutte1_deletion_contraction(&m).unwrap(), tutte_g(&m, 1).unwrap());
            assert_eq!(tutte_rank_sum(&m), tutte_g(&m, 1).unwrap());
        }
    }

    #[test]
    fn budget_refusal() {
        let job = GenusJob::new(&uniform(2, 12), 3).unwrap().budget(DEFAULT_BUDGET);
        match job.whitney_g() {
            Err(TutteError::BudgetExceeded { required, .. }) => assert_eq!(required, 1u128 << 36),
            other => panic!("expected refusal, got {other:?}"),
        }
        assert!(matches!(GenusJob::new(&uniform(1, 2), 0).unwrap().whitney_g(), Err(TutteError::BadGenus(0))));
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let m = construct_q(3).unwrap();
        let a = GenusJob::new(&m, 2).unwrap().threads(Some(1)).whitney_g().unwrap();
        let b = GenusJob::new(&m, 2).unwrap().threads(Some(4)).whitney_g().unwrap();
        assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn pair_signature_in_r6_not_q6() {
        // (X1, X2) in R_6: each half has rank 2, they are disjoint and span E.
        let l = VarLayout::new(2);
        let mut e = vec![0u8; l.count()];
        e[l.index(VarKind::X(0))] = 1;
        e[l.index(VarKind::Y(0))] = 1;
        e[l.index(VarKind::X(1))] = 1;
        e[l.index(VarKind::Y(1))] = 1;
        e[l.index(VarKind::XCap(0, 1))] = 3;
        e[l.index(VarKind::YCup(0, 1))] = 3;
        let r6 = whitney_g(&construct_r(3).unwrap(), 2).unwrap();
        let q6 = whitney_g(&construct_q(3).unwrap(), 2).unwrap();
        assert!(!r6.coefficient(&e).is_zero());
        assert!(q6.coefficient(&e).is_zero());
    }

    #[test]
    fn relaxation_identity_r6() {
        let r6 = construct_r(3).unwrap();
        assert!(relaxation_identity_check(&r6, half_x1(3)).unwrap());
        assert!(relaxation_identity_check(&r6, half_x2(3)).unwrap());
    }

    #[test]
    fn reduction_readings_on_u12() {
        let m = uniform(1, 2);
        assert!(reduction_identity_check(&m, 1, ReductionReading::AllSlotVariables).unwrap());
        assert!(!reduction_identity_check(&m, 1, ReductionReading::Literal).unwrap());
    }

    #[test]
    fn specialization_route_matches_full_tutte() {
        // The Whitney-side shortcut agrees with substituting into the full T^(2).
        let m = construct_r(3).unwrap();
        let w2 = whitney_g(&m, 2).unwrap();
        let t2 = w2.shift_all(-1);
        let l = t2.layout();
        for s in Specialization::ALL {
            let pair = s.pair_values();
            let mut subs = vec![Subst::Const(BigInt::from(2)); l.count()];
            let kinds = [VarKind::XCap(0, 1), VarKind::YCap(0, 1), VarKind::XCup(0, 1), VarKind::YCup(0, 1)];
            for (k, (kind, v)) in kinds.iter().zip(pair).enumerate() {
                subs[l.index(*kind)] = match v {
                    Some(c) => Subst::Const(BigInt::from(c)),
                    None => Subst::Var(k % 2),
                };
            }
            let direct = t2.substitute(&subs, g1()).unwrap();
            assert_eq!(direct, specialize_genus2(&w2, s).unwrap());
        }
    }

    #[test]
    fn h_buckets_sum_to_whole() {
        let m = construct_r(3).unwrap();
        let job = GenusJob::new(&m, 2).unwrap();
        let buckets = job.whitney_g2_buckets().unwrap();
        let mut total = SparsePoly::zero(VarLayout::new(2));
        for p in buckets.values() {
            total = &total + p;
        }
        assert_eq!(total, job.whitney_g().unwrap());
    }
}
