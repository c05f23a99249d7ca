//! Recovering a non-separable matroid from the monomials of its Whitney rank
//! generating function at genus `|𝓑(M)|`.
//!
//! The pipeline reads the genus-1 shadow, finds the monomial whose sets are all
//! the bases (giving the base graph), then scans for a witness monomial whose
//! first set is a circuit next to a basis. The witness fixes one of the two
//! neighbourhood partitions of that basis, which labels its neighbourhood; labels
//! then spread through the graph and the one basis left out of the witness is
//! recovered from the circuits visible among the labelled ones.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::base_graph::BaseGraph;
use crate::graph::Graph;
use crate::matroid::{exchange_violation, Matroid, MatroidError};
use crate::poly::{SparsePoly, VarLayout};
use crate::subset::{Subset, MAX_GROUND};
use crate::tutte::{GenusJob, TutteError};

#[derive(Debug, Error)]
pub enum ReconstructError {
    #[error("no monomial has all sets distinct bases; the genus is not the basis count or the input is corrupt")]
    NoSuchMonomial,
    #[error("neighbourhood partitions not found: {0}")]
    PartitionNotFound(String),
    #[error("the anchor class does not single out one partition")]
    AmbiguousPartition,
    #[error("inconsistent labels: {0}")]
    InconsistentLabels(String),
    #[error("the labelled bases show no circuit with three or more elements")]
    NotApplicable,
    #[error("{0} candidates for the missing basis")]
    Ambiguous(usize),
    #[error("no witness monomial passed every check")]
    NoWitness,
    #[error("genus {g} differs from the basis count {bases}")]
    GenusMismatch { g: usize, bases: u64 },
    #[error("the matroid is separable")]
    Separable,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Tutte(#[from] TutteError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

pub type Result<T, E = ReconstructError> = std::result::Result<T, E>;

/// One distinct exponent vector and the number of tuples producing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialWitness {
    pub exps: Vec<u8>,
    pub tuple_count: u64,
}

/// JSON monomial list: `{"g": G, "n": N, "monomials": [{"exps": [...], "tuple_count": c}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialList {
    pub g: usize,
    pub n: usize,
    pub monomials: Vec<MonomialWitness>,
}

impl MonomialList {
    pub fn from_json(text: &str) -> Result<MonomialList> {
        let list: MonomialList = serde_json::from_str(text).map_err(|e| ReconstructError::Invalid(e.to_string()))?;
        if list.g == 0 || list.g > crate::tutte::MAX_GENUS || list.n > MAX_GROUND {
            return Err(ReconstructError::Invalid(format!("g = {}, n = {} out of range", list.g, list.n)));
        }
        let width = VarLayout::new(list.g).count();
        for m in &list.monomials {
            if m.exps.len() != width {
                return Err(ReconstructError::Invalid(format!(
                    "exponent vector of length {}, expected {width}",
                    m.exps.len()
                )));
            }
            if m.tuple_count == 0 {
                return Err(ReconstructError::Invalid("zero tuple count".into()));
            }
            if m.exps.iter().any(|&e| e as usize > list.n) {
                return Err(ReconstructError::Invalid("exponent exceeds the ground set size".into()));
            }
        }
        Ok(list)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

/// Every distinct monomial of `R^(g)(M)` with its tuple count, in exponent order.
pub fn monomial_stream(m: &Matroid, g: usize) -> Result<impl Iterator<Item = MonomialWitness>> {
    let counts = GenusJob::new(m, g)?.whitney_counts()?;
    Ok(counts.entries.into_iter().map(|(exps, tuple_count)| MonomialWitness { exps, tuple_count }))
}

/// Reads one monomial's exponents by set index.
#[derive(Copy, Clone)]
struct View<'a> {
    l: VarLayout,
    e: &'a [u8],
}

impl View<'_> {
    fn x(&self, i: usize) -> u8 {
        self.e[self.l.x(i)]
    }

    fn y(&self, i: usize) -> u8 {
        self.e[self.l.y(i)]
    }

    fn cap(&self, i: usize, j: usize) -> (u8, u8) {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let p = self.l.pair_base(a, b);
        (self.e[p], self.e[p + 1])
    }

    /// Sets `from..g` are pairwise distinct bases.
    fn distinct_bases_from(&self, from: usize) -> bool {
        let g = self.l.genus();
        (from..g).all(|i| self.x(i) == 0 && self.y(i) == 0)
            && (from..g).all(|i| (i + 1..g).all(|j| self.cap(i, j).0 > 0))
    }

    /// Graph on sets `from..g` joining pairs whose intersection has rank deficit 1.
    fn graph_from(&self, from: usize) -> Graph {
        let g = self.l.genus();
        let mut out = Graph::new(g - from);
        for i in from..g {
            for j in i + 1..g {
                if self.cap(i, j).0 == 1 {
                    out.add_edge(i - from, j - from);
                }
            }
        }
        out
    }
}

/// Locates a monomial whose `g` sets are distinct bases and returns the graph
/// joining sets whose intersection has rank deficit exactly 1.
pub fn find_all_bases_monomial(stream: impl IntoIterator<Item = MonomialWitness>, g: usize, n: usize) -> Result<Graph> {
    let l = VarLayout::new(g);
    for m in stream {
        check_width(&m, l, n)?;
        let v = View { l, e: &m.exps };
        if v.distinct_bases_from(0) {
            return Ok(v.graph_from(0));
        }
    }
    Err(ReconstructError::NoSuchMonomial)
}

fn check_width(m: &MonomialWitness, l: VarLayout, n: usize) -> Result<()> {
    if m.exps.len() != l.count() || m.exps.iter().any(|&e| e as usize > n) {
        return Err(ReconstructError::Invalid("exponent vector does not fit the layout".into()));
    }
    Ok(())
}

/// The exponent checks on a witness candidate: sets `2..g` are distinct bases,
/// set 1 has nullity one, and for `i = 2..=m+1` its intersection with set `i`
/// is independent with `m − 1` elements. Returns `m`, the size of set 1.
pub fn witness_shape(exps: &[u8], layout: VarLayout, rho: usize) -> Option<usize> {
    let v = View { l: layout, e: exps };
    let g = layout.genus();
    if g < 2 || !v.distinct_bases_from(1) || v.y(0) != 1 {
        return None;
    }
    let m = (rho + 1).checked_sub(v.x(0) as usize)?;
    if m < 3 || m + 1 > g {
        return None;
    }
    let deficit = (rho + 1 - m) as u8;
    (1..=m).all(|i| v.cap(0, i) == (deficit, 0)).then_some(m)
}

/// Two families of vertex classes.
pub type PartitionPair = (Vec<Vec<usize>>, Vec<Vec<usize>>);

/// Neighbourhood partitions of `b`: classes are cliques, adjacency inside
/// `N(b)` is membership of a common class, and classes from different
/// partitions share at most one vertex.
pub fn neighborhood_partitions(graph: &Graph, b: usize) -> Result<PartitionPair> {
    let nb: Vec<usize> = graph.neighbors(b).to_vec();
    let local = graph.induced(&nb);
    let k = nb.len();
    let cliques: Vec<Vec<usize>> = maximal_cliques(&local).into_iter().filter(|c| c.len() >= 2).collect();
    let mut owner: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (ci, c) in cliques.iter().enumerate() {
        for &v in c {
            owner[v].push(ci);
        }
    }
    if owner.iter().any(|o| o.len() > 2) {
        return Err(ReconstructError::PartitionNotFound("a neighbour lies in three maximal cliques".into()));
    }
    // Two-colour the cliques; cliques sharing a vertex get different colours.
    let mut colour = vec![u8::MAX; cliques.len()];
    let mut components = 0;
    for start in 0..cliques.len() {
        if colour[start] != u8::MAX {
            continue;
        }
        components += 1;
        colour[start] = 0;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for &v in &cliques[c] {
                for &d in &owner[v] {
                    if d == c {
                        continue;
                    }
                    if colour[d] == u8::MAX {
                        colour[d] = 1 - colour[c];
                        stack.push(d);
                    } else if colour[d] == colour[c] {
                        return Err(ReconstructError::PartitionNotFound(
                            "clique overlap graph is not bipartite".into(),
                        ));
                    }
                }
            }
        }
    }
    if components > 1 {
        return Err(ReconstructError::PartitionNotFound(format!(
            "{components} independent clique groups, so the pair is not unique"
        )));
    }
    let mut parts: [Vec<Vec<usize>>; 2] = [Vec::new(), Vec::new()];
    for (c, &col) in cliques.iter().zip(&colour) {
        parts[col as usize].push(c.clone());
    }
    for v in 0..k {
        for col in 0..2u8 {
            if !owner[v].iter().any(|&c| colour[c] == col) {
                parts[col as usize].push(vec![v]);
            }
        }
    }
    let class_of = |part: &[Vec<usize>], v: usize| part.iter().position(|c| c.contains(&v));
    for u in 0..k {
        for w in u + 1..k {
            let together =
                class_of(&parts[0], u) == class_of(&parts[0], w) || class_of(&parts[1], u) == class_of(&parts[1], w);
            if together != local.has_edge(u, w) {
                return Err(ReconstructError::PartitionNotFound("adjacency is not class membership".into()));
            }
        }
    }
    let [p, q] = parts.map(|part| {
        let mut part: Vec<Vec<usize>> = part
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|v| nb[v]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        part.sort();
        part
    });
    Ok((p, q))
}

/// Bron–Kerbosch with pivoting; the neighbourhoods here are small.
fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn bk(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p.iter().chain(&x).copied().max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count());
        let mut p = p;
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| pivot.is_none_or(|u| !g.has_edge(u, v))).collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            bk(g, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    bk(g, &mut Vec::new(), (0..g.vertex_count()).collect(), Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

/// A base graph shape with some vertices labelled by bases.
#[derive(Clone, Debug)]
pub struct LabeledBaseGraph {
    pub graph: Graph,
    pub labels: Vec<Option<Subset>>,
}

/// Labels of `N[b]` with the circuits `C_y ⊆ B ∪ {y}` and cocircuits `D_x`.
#[derive(Clone, Debug)]
pub struct NeighbourhoodLabels {
    pub labeled: LabeledBaseGraph,
    pub circuits: Vec<Subset>,
    pub cocircuits: Vec<Subset>,
}

/// Labels `b` as `{0, ..., ρ−1}` and its neighbours from the two partitions,
/// taking as `π′` the partition that has `anchor` as a class. Elements of `b`
/// follow the order of the `π` classes, outside elements that of `π′`.
pub fn label_neighborhood(graph: &Graph, b: usize, anchor: &[usize], n: usize) -> Result<NeighbourhoodLabels> {
    let (p0, p1) = neighborhood_partitions(graph, b)?;
    let mut anchor = anchor.to_vec();
    anchor.sort_unstable();
    let (pi, pi_prime) = match (p0.contains(&anchor), p1.contains(&anchor)) {
        (true, false) => (p1, p0),
        (false, true) => (p0, p1),
        _ => return Err(ReconstructError::AmbiguousPartition),
    };
    let rho = pi.len();
    if rho + pi_prime.len() != n {
        return Err(ReconstructError::InconsistentLabels(format!(
            "{} + {} classes for {n} elements",
            rho,
            pi_prime.len()
        )));
    }
    let base = Subset::full(rho);
    let mut labels = vec![None; graph.vertex_count()];
    labels[b] = Some(base);
    let mut circuits: Vec<Subset> = (0..pi_prime.len()).map(|y| Subset::singleton(rho + y)).collect();
    let mut cocircuits: Vec<Subset> = (0..rho).map(Subset::singleton).collect();
    for (x, pc) in pi.iter().enumerate() {
        for (yi, qc) in pi_prime.iter().enumerate() {
            let y = rho + yi;
            let shared: Vec<usize> = pc.iter().copied().filter(|v| qc.contains(v)).collect();
            match shared[..] {
                [] => {}
                [v] => {
                    labels[v] = Some(base.without(x).with(y));
                    circuits[yi] = circuits[yi].with(x);
                    cocircuits[x] = cocircuits[x].with(y);
                }
                _ => return Err(ReconstructError::InconsistentLabels("two classes share two neighbours".into())),
            }
        }
    }
    if graph.neighbors(b).iter().any(|&v| labels[v].is_none()) {
        return Err(ReconstructError::InconsistentLabels("a neighbour lies in no class pair".into()));
    }
    Ok(NeighbourhoodLabels { labeled: LabeledBaseGraph { graph: graph.clone(), labels }, circuits, cocircuits })
}

/// Induced subgraphs of the 4-cycle with at least one vertex.
fn is_c4_piece(g: &Graph, set: &[usize]) -> bool {
    let h = g.induced(set);
    let degs = h.degree_multiset();
    match set.len() {
        1 | 2 => true,
        3 => h.edge_count() == 2,
        4 => h.edge_count() == 4 && degs.iter().all(|&d| d == 2),
        _ => false,
    }
}

/// Spreads labels: an unlabelled vertex at distance 2 from a labelled `W`, with
/// two non-adjacent labelled common neighbours `B1`, `B2`, gets
/// `(B1 ∩ B2) ∪ (B1 ∖ W) ∪ (B2 ∖ W)`. Every derivation must agree.
pub fn propagate_labels(seed: LabeledBaseGraph) -> Result<Vec<Subset>> {
    let LabeledBaseGraph { graph, mut labels } = seed;
    let k = graph.vertex_count();
    loop {
        let mut progress = false;
        for v in 0..k {
            if labels[v].is_some() {
                continue;
            }
            let mut derived: Option<Subset> = None;
            for w in 0..k {
                let Some(lw) = labels[w] else { continue };
                if w == v || graph.has_edge(v, w) {
                    continue;
                }
                let common: Vec<usize> = graph.neighbors(v).iter().copied().filter(|&u| graph.has_edge(u, w)).collect();
                if common.is_empty() {
                    continue;
                }
                if !is_c4_piece(&graph, &common) {
                    return Err(ReconstructError::InconsistentLabels(
                        "common neighbourhood is not part of a 4-cycle".into(),
                    ));
                }
                let known: Vec<(usize, Subset)> = common.iter().filter_map(|&u| labels[u].map(|l| (u, l))).collect();
                let pair = known.iter().enumerate().find_map(|(i, &(u1, l1))| {
                    known[i + 1..].iter().find(|&&(u2, _)| !graph.has_edge(u1, u2)).map(|&(_, l2)| (l1, l2))
                });
                if let Some((l1, l2)) = pair {
                    let label = (l1 & l2) | (l1 - lw) | (l2 - lw);
                    match derived {
                        Some(d) if d != label => {
                            return Err(ReconstructError::InconsistentLabels(format!(
                                "vertex {v} derived as {d:?} and {label:?}"
                            )));
                        }
                        _ => derived = Some(label),
                    }
                }
            }
            if derived.is_some() {
                labels[v] = derived;
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    let labels: Vec<Subset> = labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| ReconstructError::InconsistentLabels(format!("vertex {v} never labelled"))))
        .collect::<Result<_>>()?;
    let size = labels.first().map_or(0, |l| l.len());
    let distinct: BTreeSet<Subset> = labels.iter().copied().collect();
    if distinct.len() != labels.len() || labels.iter().any(|l| l.len() != size) {
        return Err(ReconstructError::InconsistentLabels("labels are not distinct sets of one size".into()));
    }
    for u in 0..k {
        for w in u + 1..k {
            if graph.has_edge(u, w) != ((labels[u] - labels[w]).len() == 1) {
                return Err(ReconstructError::InconsistentLabels("labels disagree with adjacency".into()));
            }
        }
    }
    Ok(labels)
}

/// Missing-basis candidates from the families of labelled bases inside each
/// `(ρ+1)`-set spanned by an adjacent pair. A candidate is kept when it is a
/// new `ρ`-set and the enlarged family still satisfies basis exchange.
pub fn missing_base_candidates(labels: &[Subset], rho: usize, n: usize) -> Result<Vec<Subset>> {
    let known: BTreeSet<Subset> = labels.iter().copied().collect();
    let mut unions: BTreeSet<Subset> = BTreeSet::new();
    for (i, &a) in labels.iter().enumerate() {
        for &b in &labels[i + 1..] {
            let u = a | b;
            if u.len() == rho + 1 {
                unions.insert(u);
            }
        }
    }
    // (union, members, C(X))
    let families: Vec<(Subset, Vec<Subset>, Subset)> = unions
        .into_iter()
        .map(|u| {
            let members: Vec<Subset> = labels.iter().copied().filter(|l| l.is_subset_of(u)).collect();
            let c = members.iter().fold(Subset::EMPTY, |acc, &m| acc | (u - m));
            (u, members, c)
        })
        .collect();
    if families.iter().all(|(_, members, _)| members.len() < 3) && families.iter().all(|(_, _, c)| c.len() <= 2) {
        // Only 2-circuits visible, unless a 3-circuit is missing exactly S.
        let any_three = families.iter().any(|(u, _, c)| c.len() == 2 && u.len() >= 3 && rho >= 2);
        if !any_three {
            return Err(ReconstructError::NotApplicable);
        }
    }
    let mut raw: BTreeSet<Subset> = BTreeSet::new();
    for (u, members, c) in &families {
        let k = members.len();
        let inter = members.iter().fold(*u, |acc, &m| acc & m);
        if u.len() == k + 1 && inter.len() == 1 && k == rho {
            raw.insert(*u - inter);
        }
        for (u2, _, c2) in &families {
            let _ = u2;
            if c.is_subset_of(*c2) && c != c2 && (*c2 - *c).len() == 1 {
                raw.insert(*u - (*c2 - *c));
            }
        }
    }
    let full = Subset::full(n);
    let mut out = Vec::new();
    for s in raw {
        if s.len() != rho || !s.is_subset_of(full) || known.contains(&s) {
            continue;
        }
        let mut all: Vec<Subset> = labels.to_vec();
        all.push(s);
        all.sort_unstable();
        if exchange_violation(&all).is_none() {
            out.push(s);
        }
    }
    Ok(out)
}

/// The basis missing from `labels`. Several candidates are accepted only when
/// the completed matroids are all equivalent; the first is returned.
pub fn find_missing_base(labels: &[Subset], rho: usize, n: usize) -> Result<Subset> {
    pick_equivalent(labels, n, missing_base_candidates(labels, rho, n)?)
}

/// As [`find_missing_base`], keeping only candidates whose completed base
/// graph is isomorphic to `full`.
pub fn find_missing_base_in(labels: &[Subset], rho: usize, n: usize, full: &Graph) -> Result<Subset> {
    let kept = missing_base_candidates(labels, rho, n)?
        .into_iter()
        .filter(|&s| completed(labels, n, s).is_some_and(|m| BaseGraph::new(&m).graph().is_isomorphic(full)))
        .collect();
    pick_equivalent(labels, n, kept)
}

fn completed(labels: &[Subset], n: usize, s: Subset) -> Option<Matroid> {
    let mut bases = labels.to_vec();
    bases.push(s);
    Matroid::from_bases(n, bases).ok()
}

fn pick_equivalent(labels: &[Subset], n: usize, candidates: Vec<Subset>) -> Result<Subset> {
    let Some(&first) = candidates.first() else {
        return Err(ReconstructError::Ambiguous(0));
    };
    let reference = completed(labels, n, first).ok_or(ReconstructError::Ambiguous(candidates.len()))?;
    for &s in &candidates[1..] {
        let other = completed(labels, n, s).ok_or(ReconstructError::Ambiguous(candidates.len()))?;
        if !crate::iso::is_equivalent(&reference, &other)? {
            return Err(ReconstructError::Ambiguous(candidates.len()));
        }
    }
    Ok(first)
}

/// Facts read from the genus-1 shadow.
#[derive(Clone, Debug)]
pub struct Shadow {
    pub n: usize,
    pub rank: usize,
    pub corank: usize,
    pub bases: u64,
    pub tutte: SparsePoly,
}

struct Collected {
    marginal: std::collections::BTreeMap<(u8, u8), u128>,
    all_bases: Option<Graph>,
    candidates: Vec<MonomialWitness>,
}

/// Recovers a matroid equivalent to the one whose `R^(g)` monomials are streamed.
pub fn reconstruct(stream: impl IntoIterator<Item = MonomialWitness>, n: usize, g: usize) -> Result<Matroid> {
    if g == 0 || g > crate::tutte::MAX_GENUS || n > MAX_GROUND {
        return Err(ReconstructError::Invalid(format!("g = {g}, n = {n} out of range")));
    }
    let l = VarLayout::new(g);
    // Witness checks need ρ, which needs the whole stream; keep loose candidates.
    let mut col = Collected { marginal: Default::default(), all_bases: None, candidates: Vec::new() };
    for m in stream {
        check_width(&m, l, n)?;
        let v = View { l, e: &m.exps };
        *col.marginal.entry((v.x(0), v.y(0))).or_default() += m.tuple_count as u128;
        if col.all_bases.is_none() && v.distinct_bases_from(0) {
            col.all_bases = Some(v.graph_from(0));
        }
        if v.y(0) == 1 && v.distinct_bases_from(1) {
            col.candidates.push(m);
        }
    }
    let shadow = read_shadow(&col.marginal, n, g)?;
    if shadow.bases != g as u64 {
        return Err(ReconstructError::GenusMismatch { g, bases: shadow.bases });
    }
    if n <= 1 || shadow.rank <= 1 || shadow.corank <= 1 {
        if n >= 2 && (shadow.rank == 0 || shadow.corank == 0) {
            return Err(ReconstructError::Separable);
        }
        return Ok(crate::constructions::uniform(shadow.rank, n));
    }
    let graph = col.all_bases.ok_or(ReconstructError::NoSuchMonomial)?;
    let mut candidates = col.candidates;
    candidates.sort_by(|a, b| {
        let da: u32 = a.exps.iter().map(|&e| e as u32).sum();
        let db: u32 = b.exps.iter().map(|&e| e as u32).sum();
        da.cmp(&db).then_with(|| a.exps.cmp(&b.exps))
    });
    let mut last = ReconstructError::NoWitness;
    for cand in &candidates {
        let Some(m) = witness_shape(&cand.exps, l, shadow.rank) else { continue };
        match try_witness(&cand.exps, l, m, &graph, &shadow) {
            Ok(matroid) => return Ok(matroid),
            Err(e) => {
                if std::env::var_os("GTUTTE_TRACE").is_some() {
                    eprintln!("witness rejected: {e}");
                }
                last = e
            }
        }
    }
    Err(match last {
        ReconstructError::NoWitness => ReconstructError::NoWitness,
        e => e,
    })
}

fn read_shadow(marginal: &std::collections::BTreeMap<(u8, u8), u128>, n: usize, g: usize) -> Result<Shadow> {
    let scale: u128 = 1u128 << ((g - 1) * n);
    let layout = VarLayout::new(1);
    let mut r1 = SparsePoly::zero(layout);
    for (&(x, y), &c) in marginal {
        if c % scale != 0 {
            return Err(ReconstructError::Invalid("marginal counts are not a genus-1 shadow".into()));
        }
        r1.add_term(vec![x, y], BigInt::from(c / scale));
    }
    let total: BigInt = r1.coefficient_sum();
    if total != BigInt::from(1u64) << n {
        return Err(ReconstructError::Invalid("shadow does not count every subset".into()));
    }
    let rank = r1.degree_in(0) as usize;
    let corank = r1.degree_in(1) as usize;
    if rank + corank != n {
        return Err(ReconstructError::Invalid("rank and corank do not add up".into()));
    }
    let bases = u64::try_from(r1.coefficient(&[0, 0])).map_err(|_| ReconstructError::Invalid("basis count".into()))?;
    let tutte = r1.shift_all(-1);
    if n >= 2 && tutte.coefficient(&[1, 0]) == BigInt::from(0) {
        return Err(ReconstructError::Separable);
    }
    Ok(Shadow { n, rank, corank, bases, tutte })
}

fn try_witness(exps: &[u8], l: VarLayout, m: usize, graph: &Graph, shadow: &Shadow) -> Result<Matroid> {
    let v = View { l, e: exps };
    let h = v.graph_from(1);
    let diam = graph.diameter().ok_or(ReconstructError::NoWitness)?;
    if diam < 2 {
        return Err(ReconstructError::NoWitness);
    }
    // H must be the base graph minus a basis at diameter distance from the one sent to set 2.
    let k = graph.vertex_count();
    let fits = (0..k).any(|b2| {
        let dist = graph.distances(b2);
        let reduced = graph.without_vertex(b2);
        (0..k).filter(|&b1| dist[b1] == diam).any(|b1| {
            let b1r = b1 - usize::from(b1 > b2);
            reduced.isomorphism_to(&h, &[(b1r, 0)]).is_some()
        })
    });
    if !fits {
        return Err(ReconstructError::NoWitness);
    }
    let anchor: Vec<usize> = (1..m).collect();
    let seed = label_neighborhood(&h, 0, &anchor, shadow.n)?;
    if seed.circuits.iter().any(|c| c.len() < 2) {
        return Err(ReconstructError::InconsistentLabels("a circuit C_y is a loop".into()));
    }
    let labels = propagate_labels(seed.labeled)?;
    let candidates: Vec<Subset> = missing_base_candidates(&labels, shadow.rank, shadow.n)?
        .into_iter()
        .filter(|&s| {
            completed(&labels, shadow.n, s).is_some_and(|m| {
                crate::tutte::tutte_rank_sum(&m) == shadow.tutte && BaseGraph::new(&m).graph().is_isomorphic(graph)
            })
        })
        .collect();
    let s = pick_equivalent(&labels, shadow.n, candidates)?;
    Ok(completed(&labels, shadow.n, s).expect("checked above"))
}

/// `reconstruct(monomial_stream(M, |𝓑(M)|))`.
pub fn round_trip(m: &Matroid) -> Result<Matroid> {
    let g = m.bases().len();
    reconstruct(monomial_stream(m, g)?, m.size(), g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::uniform;
    use crate::iso::is_equivalent;

    fn s(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied())
    }

    #[test]
    fn stream_totals() {
        let u00: Vec<_> = monomial_stream(&uniform(0, 0), 1).unwrap().collect();
        assert_eq!(u00.len(), 1);
        assert_eq!(u00[0].tuple_count, 1);
        let total: u64 = monomial_stream(&uniform(1, 2), 1).unwrap().map(|m| m.tuple_count).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn all_bases_graphs() {
        let k2 = find_all_bases_monomial(monomial_stream(&uniform(1, 2), 2).unwrap(), 2, 2).unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let tri = find_all_bases_monomial(monomial_stream(&uniform(2, 3), 3).unwrap(), 3, 3).unwrap();
        assert_eq!(tri.edge_count(), 3);
        // Genus above the basis count has no such monomial.
        assert!(matches!(
            find_all_bases_monomial(monomial_stream(&uniform(2, 3), 4).unwrap(), 4, 3),
            Err(ReconstructError::NoSuchMonomial)
        ));
    }

    #[test]
    fn partitions_of_small_graphs() {
        let k2 = Graph::from_edges(2, &[(0, 1)]);
        let (p, q) = neighborhood_partitions(&k2, 0).unwrap();
        assert_eq!((p, q), (vec![vec![1]], vec![vec![1]]));
        let bg = BaseGraph::new(&uniform(2, 4));
        for b in 0..6 {
            let (p, q) = neighborhood_partitions(bg.graph(), b).unwrap();
            assert!(p.iter().chain(&q).all(|c| c.len() == 2));
            assert_eq!((p.len(), q.len()), (2, 2));
        }
        let bg = BaseGraph::new(&uniform(2, 3));
        let (p, q) = neighborhood_partitions(bg.graph(), 0).unwrap();
        for a in &p {
            for b in &q {
                assert!(a.iter().filter(|v| b.contains(v)).count() <= 1);
            }
        }
    }

    #[test]
    fn neighbourhood_labels_match_true_bases() {
        let m = uniform(2, 4);
        let bg = BaseGraph::new(&m);
        let b = bg.index_of(s(&[0, 1])).unwrap();
        // The class of neighbours gaining element 2.
        let anchor: Vec<usize> = bg.pi_prime(b).into_iter().find(|c| c.element == 2).unwrap().members;
        let out = label_neighborhood(bg.graph(), b, &anchor, 4).unwrap();
        let mut got: Vec<Subset> = out.labeled.labels.iter().flatten().copied().collect();
        got.sort_unstable();
        assert_eq!(got.len(), 5);
        let labels = propagate_labels(out.labeled).unwrap();
        let relabeled = Matroid::from_bases(4, labels).unwrap();
        assert_eq!(relabeled, m);

        let m = uniform(2, 3);
        let bg = BaseGraph::new(&m);
        let anchor = bg.pi_prime(0).into_iter().next().unwrap().members;
        let out = label_neighborhood(bg.graph(), 0, &anchor, 3).unwrap();
        assert_eq!(out.circuits, vec![s(&[0, 1, 2])]);
    }

    #[test]
    fn missing_bases() {
        let m = uniform(2, 4);
        for skip in 0..6 {
            let labels: Vec<Subset> =
                m.bases().iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &b)| b).collect();
            assert_eq!(find_missing_base(&labels, 2, 4).unwrap(), m.bases()[skip]);
        }
        assert_eq!(find_missing_base(&[s(&[0, 1]), s(&[0, 2])], 2, 3).unwrap(), s(&[1, 2]));
        // Without the graph, R_6 minus {0,1,3} also completes to a copy of Q_6.
        let r6 = crate::constructions::construct_r(3).unwrap();
        let labels = &r6.bases()[1..];
        assert!(matches!(find_missing_base(labels, 3, 6), Err(ReconstructError::Ambiguous(2))));
        let full = BaseGraph::new(&r6);
        assert_eq!(find_missing_base_in(labels, 3, 6, full.graph()).unwrap(), r6.bases()[0]);
        assert!(matches!(find_missing_base(&[s(&[0]), s(&[1])], 1, 2), Err(ReconstructError::NotApplicable)));
    }

    #[test]
    fn small_round_trips() {
        for m in [uniform(1, 2), uniform(2, 3), uniform(1, 3)] {
            assert!(is_equivalent(&round_trip(&m).unwrap(), &m).unwrap());
        }
        let five = Matroid::from_bases(4, [s(&[0, 1]), s(&[0, 2]), s(&[0, 3]), s(&[1, 2]), s(&[1, 3])]).unwrap();
        assert!(is_equivalent(&round_trip(&five).unwrap(), &five).unwrap());
    }

    #[test]
    fn witness_shape_accepts_true_witness() {
        // U_{2,3}, g = 3: set 1 = {0,1,2}, then the three bases.
        let m = uniform(2, 3);
        let t = m.rank_table().unwrap();
        let sets = [0b111u64, 0b011, 0b101, 0b110];
        let exps = crate::covers::whitney_exponents(&sets, |a| t.rank(a as u32) as usize, 2);
        assert_eq!(witness_shape(&exps, VarLayout::new(4), 2), Some(3));
    }

    #[test]
    fn separable_rejected() {
        let m = crate::matroid::Matroid::from_bases(2, [s(&[0])]).unwrap();
        assert!(matches!(round_trip(&m), Err(ReconstructError::Separable)));
    }
}
