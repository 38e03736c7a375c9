//! Construction of coding cliques and coding groups.
//!
//! The recipe: fix a graph with a protected-vertex set and a distance `d`,
//! compute the purity set (subsets whose stabilizer product is a low-weight
//! error confined to noisy qubits; these force parity constraints on
//! codeword labels) and the coverable family (label differences reachable as
//! `δ △ N_ω` by a low-weight error; these are forbidden), then search for
//! families of labels satisfying
//!
//!   i)   the empty label is included,
//!   ii)  every label has even intersection with every purity set,
//!   iii) the symmetric difference of any two distinct labels is uncoverable.
//!
//! Clique mode finds such families directly as cliques of a compatibility
//! graph; group mode grows GF(2)-closed families from generators, which
//! yield stabilizer codes.

use crate::bits::{BinaryMatrix, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::PauliOperator;
use std::collections::HashSet;

/// Candidate-label spaces larger than this are refused.
const MAX_CANDIDATE_LOG2: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchMode {
    Clique,
    Group,
}

/// Size bar for search results: the subspace dimension `K` (clique size) or
/// its base-2 logarithm `k` (generator count, group mode).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchTarget {
    Dimension(usize),
    LogDimension(u32),
}

#[derive(Clone, Debug)]
pub struct SearchProblem {
    pub graph: Graph,
    pub distance: usize,
    pub mode: SearchMode,
    pub target: SearchTarget,
    /// When set, only results of the maximum size found are returned;
    /// otherwise all maximal results meeting the bar are returned.
    pub maximum_only: bool,
}

/// A family of codeword labels satisfying conditions i-iii.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodingClique {
    /// All members in canonical order; always contains the empty set.
    pub members: Vec<VertexSet>,
    pub is_group: bool,
    /// Canonical (reduced-echelon) generators; empty unless `is_group`.
    pub generators: Vec<VertexSet>,
}

impl CodingClique {
    pub fn dimension(&self) -> usize {
        self.members.len()
    }

    pub fn log_dimension(&self) -> Option<u32> {
        if self.is_group {
            Some(self.generators.len() as u32)
        } else {
            None
        }
    }
}

/// All nonempty `S ⊆ V` with `(S ∪ N_S) ∩ P = ∅` and `|S ∪ N_S| < d`,
/// in canonical order.
///
/// `G_S` for such an `S` is an error of weight below `d` supported entirely
/// on noisy qubits, so every codeword label must meet `S` evenly. The empty
/// set satisfies the definition vacuously and imposes no constraint; it is
/// excluded.
pub fn purity_set(g: &Graph, d: usize) -> Vec<VertexSet> {
    let m = g.vertex_count();
    let pure = g.pure_set();
    VertexSet::all_subsets(m)
        .filter(|s| !s.is_empty())
        .filter(|s| {
            let closure = s.union(&g.set_neighborhood(s));
            closure.is_disjoint(&pure) && closure.len() < d
        })
        .collect()
}

/// The exact set `{δ △ N_ω : (δ∪ω) ∩ P = ∅, |δ∪ω| < d}`, deduplicated.
///
/// A subset is *uncoverable* iff it is absent here. The family always
/// contains the empty set (take δ = ω = ∅). It is stored as a hash set
/// because its complement is exponentially larger at small `d`.
pub fn coverable_family(g: &Graph, d: usize) -> HashSet<VertexSet> {
    let m = g.vertex_count();
    let noisy: Vec<usize> = g.noisy_set().vertices();
    let mut family = HashSet::new();
    family.insert(VertexSet::empty(m));
    // choose a support (= δ∪ω) of size 1..d-1 among noisy vertices, then
    // assign each support vertex to δ, ω, or both
    let mut support: Vec<usize> = Vec::new();
    fn rec(
        g: &Graph,
        noisy: &[usize],
        start: usize,
        support: &mut Vec<usize>,
        max_size: usize,
        family: &mut HashSet<VertexSet>,
    ) {
        if !support.is_empty() {
            let m = g.vertex_count();
            let n = support.len();
            let mut assign = vec![0u8; n];
            loop {
                let mut delta = VertexSet::empty(m);
                let mut omega = VertexSet::empty(m);
                for (i, &v) in support.iter().enumerate() {
                    match assign[i] {
                        0 => delta.insert(v),
                        1 => omega.insert(v),
                        _ => {
                            delta.insert(v);
                            omega.insert(v);
                        }
                    }
                }
                family.insert(g.reduce_error(&omega, &delta));
                // odometer over base-3 assignments
                let mut i = 0;
                loop {
                    if i == n {
                        return rec_continue(g, noisy, start, support, max_size, family);
                    }
                    assign[i] += 1;
                    if assign[i] < 3 {
                        break;
                    }
                    assign[i] = 0;
                    i += 1;
                }
            }
        }
        rec_continue(g, noisy, start, support, max_size, family);
    }
    fn rec_continue(
        g: &Graph,
        noisy: &[usize],
        start: usize,
        support: &mut Vec<usize>,
        max_size: usize,
        family: &mut HashSet<VertexSet>,
    ) {
        if support.len() == max_size {
            return;
        }
        for i in start..noisy.len() {
            support.push(noisy[i]);
            rec(g, noisy, i + 1, support, max_size, family);
            support.pop();
        }
    }
    rec_continue(g, &noisy, 0, &mut support, d.saturating_sub(1), &mut family);
    family
}

pub fn is_uncoverable(family: &HashSet<VertexSet>, s: &VertexSet) -> bool {
    !family.contains(s)
}

/// All `C ⊆ V` with `|S ∩ C|` even for every purity set `S` (condition ii),
/// computed as the nullspace span of the purity incidence matrix. Includes
/// the empty set.
pub fn candidate_subsets(g: &Graph, d: usize) -> Result<Vec<VertexSet>> {
    let m = g.vertex_count();
    let mut matrix = BinaryMatrix::new(m);
    for s in purity_set(g, d) {
        matrix.push_set_row(&s);
    }
    enumerate_nullspace(m, &matrix)
}

fn enumerate_nullspace(m: usize, matrix: &BinaryMatrix) -> Result<Vec<VertexSet>> {
    let basis = matrix.nullspace_basis();
    if basis.len() > MAX_CANDIDATE_LOG2 {
        return Err(Error::EnumerationBound(format!(
            "candidate space has dimension {}, above the 2^{MAX_CANDIDATE_LOG2} cap",
            basis.len()
        )));
    }
    let mut out: Vec<VertexSet> = expand_span_bits(&basis)
        .into_iter()
        .map(|bits| VertexSet::from_bits(m, bits as u64))
        .collect();
    out.sort();
    Ok(out)
}

fn expand_span_bits(basis: &[u128]) -> Vec<u128> {
    let mut out = Vec::with_capacity(1 << basis.len());
    out.push(0u128);
    for &b in basis {
        let prev = out.len();
        for i in 0..prev {
            let v = out[i] ^ b;
            out.push(v);
        }
    }
    out
}

/// Mutually reduced echelon basis of a generator list; the canonical form
/// used to deduplicate groups.
fn rref_basis(gens: &[u64]) -> Vec<u64> {
    let mut rows: Vec<u64> = Vec::new();
    for &g in gens {
        let mut r = g;
        for &b in &rows {
            let p = b.trailing_zeros();
            if r >> p & 1 == 1 {
                r ^= b;
            }
        }
        if r != 0 {
            let p = r.trailing_zeros();
            for b in rows.iter_mut() {
                if *b >> p & 1 == 1 {
                    *b ^= r;
                }
            }
            rows.push(r);
        }
    }
    rows.sort_unstable();
    rows
}

fn span_of(gens: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64];
    for &g in gens {
        let prev = out.len();
        for i in 0..prev {
            out.push(out[i] ^ g);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Runs the configured search and returns every result, deterministically
/// ordered and re-validated against freshly computed purity and coverable
/// families.
///
/// Codeword labels are drawn from subsets of the noisy vertices: encoding
/// operations act only on unprotected qubits, and both published example
/// codes have this form.
pub fn search(problem: &SearchProblem) -> Result<Vec<CodingClique>> {
    let g = &problem.graph;
    let d = problem.distance;
    let m = g.vertex_count();
    let noisy = g.noisy_count();
    if d < 1 || d > noisy {
        return Err(Error::InvalidDistance { distance: d, noisy });
    }
    if m > 20 {
        return Err(Error::SearchInfeasible(format!(
            "{m} vertices would give a candidate space beyond 2^20 labels"
        )));
    }
    let min_size = match (problem.mode, problem.target) {
        (_, SearchTarget::Dimension(k)) => {
            if problem.mode == SearchMode::Group && !k.is_power_of_two() {
                return Err(Error::SearchInfeasible(format!(
                    "group mode needs a power-of-two dimension target, got {k}"
                )));
            }
            k.max(1)
        }
        (_, SearchTarget::LogDimension(k)) => 1usize
            .checked_shl(k)
            .ok_or_else(|| Error::SearchInfeasible("target dimension overflows".into()))?,
    };

    // condition ii plus the label restriction to noisy vertices
    let mut matrix = BinaryMatrix::new(m);
    for s in purity_set(g, d) {
        matrix.push_set_row(&s);
    }
    for v in g.pure_set().iter() {
        matrix.push_row(1u128 << v);
    }
    let candidates = enumerate_nullspace(m, &matrix)?;
    let cover = coverable_family(g, d);

    // every clique member other than ∅ must itself be uncoverable
    // (condition iii against the mandatory member ∅)
    let items: Vec<u64> = candidates
        .iter()
        .filter(|c| !c.is_empty() && is_uncoverable(&cover, c))
        .map(|c| c.bits())
        .collect();

    let raw: Vec<(Vec<u64>, Option<Vec<u64>>)> = match problem.mode {
        SearchMode::Clique => clique_search(&items, &cover, m, min_size, problem.maximum_only)
            .into_iter()
            .map(|members| {
                let gens = group_structure(&members);
                (members, gens)
            })
            .collect(),
        SearchMode::Group => {
            let min_k = match problem.target {
                SearchTarget::LogDimension(k) => k as usize,
                SearchTarget::Dimension(k) => k.trailing_zeros() as usize,
            };
            group_search(&items, &cover, m, min_k)
                .into_iter()
                .map(|gens| {
                    let members = span_of(&gens);
                    (members, Some(gens))
                })
                .collect()
        }
    };

    let mut results: Vec<CodingClique> = raw
        .into_iter()
        .map(|(members_bits, gens)| CodingClique {
            members: members_bits
                .iter()
                .map(|&b| VertexSet::from_bits(m, b))
                .collect(),
            is_group: gens.is_some(),
            generators: gens
                .unwrap_or_default()
                .iter()
                .map(|&b| VertexSet::from_bits(m, b))
                .collect(),
        })
        .collect();

    results.sort_by(|a, b| {
        b.members
            .len()
            .cmp(&a.members.len())
            .then_with(|| a.members.cmp(&b.members))
    });
    results.dedup();
    if problem.maximum_only {
        let best = results.first().map(|c| c.members.len()).unwrap_or(0);
        results.retain(|c| c.members.len() == best);
    }

    let purity = purity_set(g, d);
    for clique in &results {
        assert!(
            validate_against(m, &purity, &cover, clique),
            "search produced a family violating its own conditions: {clique:?}"
        );
    }
    Ok(results)
}

/// Re-checks conditions i-iii (and group closure, when claimed) against
/// freshly computed purity and coverable families.
pub fn validate_clique(g: &Graph, d: usize, clique: &CodingClique) -> bool {
    validate_against(
        g.vertex_count(),
        &purity_set(g, d),
        &coverable_family(g, d),
        clique,
    )
}

fn validate_against(
    m: usize,
    purity: &[VertexSet],
    cover: &HashSet<VertexSet>,
    clique: &CodingClique,
) -> bool {
    let empty = VertexSet::empty(m);
    if !clique.members.contains(&empty) {
        return false;
    }
    for s in purity {
        for c in &clique.members {
            if s.parity_with(c) {
                return false;
            }
        }
    }
    for (i, c) in clique.members.iter().enumerate() {
        for c2 in &clique.members[i + 1..] {
            if !is_uncoverable(cover, &c.sym_diff(c2)) {
                return false;
            }
        }
    }
    if clique.is_group {
        let gens: Vec<u64> = clique.generators.iter().map(|g| g.bits()).collect();
        let mut span: Vec<VertexSet> = span_of(&gens)
            .into_iter()
            .map(|b| VertexSet::from_bits(m, b))
            .collect();
        span.sort();
        let mut members = clique.members.clone();
        members.sort();
        if span != members {
            return false;
        }
    }
    true
}

/// Detects whether a member list is GF(2)-closed; returns canonical
/// generators if so.
fn group_structure(members: &[u64]) -> Option<Vec<u64>> {
    let gens = rref_basis(members);
    let span = span_of(&gens);
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    if span == sorted {
        Some(gens)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// clique mode: Bron-Kerbosch with pivoting and a greedy coloring bound
// ---------------------------------------------------------------------------

struct CliqueCtx<'a> {
    items: &'a [u64],
    cover: &'a HashSet<VertexSet>,
    universe: usize,
    min_extra: usize, // required clique size minus the implicit ∅ member
    /// In maximum-only mode, the largest maximal clique seen so far; used
    /// as a branch-and-bound cutoff (ties are kept).
    best: Option<usize>,
    out: Vec<Vec<u64>>,
}

impl CliqueCtx<'_> {
    fn adjacent(&self, i: usize, j: usize) -> bool {
        let diff = VertexSet::from_bits(self.universe, self.items[i] ^ self.items[j]);
        !self.cover.contains(&diff)
    }

    /// Number of colors a greedy coloring assigns to the candidates; an
    /// upper bound on the largest clique within them.
    fn coloring_bound(&self, p: &[usize]) -> usize {
        let mut colors: Vec<Vec<usize>> = Vec::new();
        'next: for &v in p {
            for class in colors.iter_mut() {
                if class.iter().all(|&u| !self.adjacent(u, v)) {
                    class.push(v);
                    continue 'next;
                }
            }
            colors.push(vec![v]);
        }
        colors.len()
    }

    fn bron_kerbosch(&mut self, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>) {
        if p.is_empty() && x.is_empty() {
            if r.len() >= self.min_extra {
                if let Some(best) = &mut self.best {
                    *best = (*best).max(r.len());
                }
                let mut members: Vec<u64> = r.iter().map(|&i| self.items[i]).collect();
                members.push(0);
                members.sort_unstable();
                self.out.push(members);
            }
            return;
        }
        let floor = self.best.map_or(self.min_extra, |b| b.max(self.min_extra));
        if r.len() + p.len() < floor {
            return;
        }
        if r.len() + self.coloring_bound(&p) < floor {
            return;
        }
        // pivot: most candidate-neighbors, smallest label on ties
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| {
                (
                    p.iter().filter(|&&v| self.adjacent(u, v)).count(),
                    std::cmp::Reverse(self.items[u]),
                )
            })
            .expect("p ∪ x is nonempty");
        let branch: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&v| !self.adjacent(pivot, v))
            .collect();
        let mut p = p;
        let mut x = x;
        for v in branch {
            let new_p: Vec<usize> = p.iter().copied().filter(|&u| self.adjacent(v, u)).collect();
            let new_x: Vec<usize> = x.iter().copied().filter(|&u| self.adjacent(v, u)).collect();
            r.push(v);
            self.bron_kerbosch(r, new_p, new_x);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
}

fn clique_search(
    items: &[u64],
    cover: &HashSet<VertexSet>,
    universe: usize,
    min_size: usize,
    maximum_only: bool,
) -> Vec<Vec<u64>> {
    let mut ctx = CliqueCtx {
        items,
        cover,
        universe,
        min_extra: min_size.saturating_sub(1),
        best: maximum_only.then_some(min_size.saturating_sub(1)),
        out: Vec::new(),
    };
    let p: Vec<usize> = (0..items.len()).collect();
    ctx.bron_kerbosch(&mut Vec::new(), p, Vec::new());
    if maximum_only {
        let best = ctx.out.iter().map(|c| c.len()).max().unwrap_or(0);
        ctx.out.retain(|c| c.len() == best);
    }
    ctx.out
}

// ---------------------------------------------------------------------------
// group mode: grow generator sets whose whole span stays uncoverable
// ---------------------------------------------------------------------------

fn group_search(
    items: &[u64],
    cover: &HashSet<VertexSet>,
    universe: usize,
    min_k: usize,
) -> Vec<Vec<u64>> {
    let uncov = |bits: u64| !cover.contains(&VertexSet::from_bits(universe, bits));
    let mut visited: HashSet<Vec<u64>> = HashSet::new();
    let mut out: Vec<Vec<u64>> = Vec::new();

    // an extension is valid when every new span element stays uncoverable
    let extendable = |span: &[u64], c: u64| span.iter().all(|&s| uncov(s ^ c));

    fn dfs(
        items: &[u64],
        extendable: &dyn Fn(&[u64], u64) -> bool,
        visited: &mut HashSet<Vec<u64>>,
        out: &mut Vec<Vec<u64>>,
        gens: &mut Vec<u64>,
        span: &[u64],
        min_k: usize,
    ) {
        let key = rref_basis(gens);
        if !visited.insert(key) {
            return;
        }
        let mut maximal = true;
        let last = gens.last().copied().unwrap_or(0);
        for &c in items {
            if span.binary_search(&c).is_ok() {
                continue;
            }
            if !extendable(span, c) {
                continue;
            }
            maximal = false;
            // each subgroup is reachable through an ascending generator
            // sequence; the visited set removes the remaining duplicates
            if c > last {
                let mut new_span: Vec<u64> = span.iter().flat_map(|&s| [s, s ^ c]).collect();
                new_span.sort_unstable();
                gens.push(c);
                dfs(items, extendable, visited, out, gens, &new_span, min_k);
                gens.pop();
            }
        }
        if maximal && gens.len() >= min_k {
            out.push(rref_basis(gens));
        }
    }

    dfs(
        items,
        &extendable,
        &mut visited,
        &mut out,
        &mut Vec::new(),
        &[0u64],
        min_k,
    );
    out.sort();
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// stabilizer extraction and codeword labels
// ---------------------------------------------------------------------------

/// Solves `|S ∩ C_i|` even for all group generators `C_i`; the nullspace
/// gives `(n+e) − k` independent subsets `S_j`, and the code stabilizer is
/// generated by the corresponding `G_{S_j}`.
pub fn extract_stabilizer(g: &Graph, clique: &CodingClique) -> Result<Vec<PauliOperator>> {
    if !clique.is_group {
        return Err(Error::NotAGroup);
    }
    let m = g.vertex_count();
    let mut matrix = BinaryMatrix::new(m);
    for gen in &clique.generators {
        matrix.push_set_row(gen);
    }
    let subsets = matrix.nullspace_basis();
    Ok(subsets
        .iter()
        .map(|&bits| g.stabilizer(&VertexSet::from_bits(m, bits as u64)))
        .collect())
}

/// The full GF(2) span of a generator list, in canonical order.
pub fn group_members(universe: usize, generators: &[VertexSet]) -> Vec<VertexSet> {
    let gens: Vec<u64> = generators.iter().map(|g| g.bits()).collect();
    span_of(&gens)
        .into_iter()
        .map(|b| VertexSet::from_bits(universe, b))
        .collect()
}

/// A coding group assembled from an independent generator list
/// (members = span; the supplied generator order is kept).
pub fn group_clique(universe: usize, generators: &[VertexSet]) -> CodingClique {
    let members = group_members(universe, generators);
    debug_assert_eq!(
        members.len(),
        1usize << generators.len(),
        "generators must be independent"
    );
    CodingClique {
        members,
        is_group: true,
        generators: generators.to_vec(),
    }
}

/// The codeword label selected by `mu`: the symmetric difference of the
/// generators at the set positions.
pub fn codeword_basis(generators: &[VertexSet], mu: &[bool]) -> Result<VertexSet> {
    if generators.len() != mu.len() {
        return Err(Error::LengthMismatch {
            got: mu.len(),
            expected: generators.len(),
        });
    }
    let universe = generators
        .first()
        .map(|g| g.universe())
        .unwrap_or(crate::bits::MAX_UNIVERSE);
    let mut acc = VertexSet::empty(universe);
    for (gen, &bit) in generators.iter().zip(mu) {
        if bit {
            acc = acc.sym_diff(gen);
        }
    }
    Ok(acc)
}
