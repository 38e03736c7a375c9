//! Fixed-width vertex subsets and GF(2) linear algebra.
//!
//! Every set of vertices in this crate (neighborhoods, error supports,
//! codeword labels) is a [`VertexSet`]: a bitmask over a declared universe
//! of at most 64 vertices, so all set operations are single machine-word
//! instructions. Subsets are canonically ordered by their bit pattern read
//! as an integer (vertex 0 is the least significant bit); every
//! "first found" result in the crate is defined relative to this order.
//!
//! [`BinaryMatrix`] holds GF(2) linear systems (rows up to 128 bits wide so
//! symplectic vectors over 64 vertices fit) and provides deterministic
//! rank, nullspace and span-membership computations.

use std::fmt;

pub const MAX_UNIVERSE: usize = 64;

/// A subset of vertex indices `0..universe`, stored as a bitmask.
///
/// Symmetric difference is the group operation: associative, commutative,
/// identity `empty`, every element its own inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: u8,
    bits: u64,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        assert!(
            universe <= MAX_UNIVERSE,
            "universe {universe} exceeds {MAX_UNIVERSE}"
        );
        VertexSet {
            universe: universe as u8,
            bits: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        s.bits = if universe == 64 {
            u64::MAX
        } else {
            (1u64 << universe) - 1
        };
        s
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        Self::empty(universe).with(v)
    }

    pub fn from_vertices(universe: usize, vertices: &[usize]) -> Self {
        let mut s = Self::empty(universe);
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    /// Builds a set from a raw bit pattern (bit `i` = vertex `i`).
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        let mut s = Self::empty(universe);
        assert!(
            universe == 64 || bits < (1u64 << universe),
            "bits 0x{bits:x} outside universe {universe}"
        );
        s.bits = bits;
        s
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, v: usize) -> bool {
        assert!(
            v < self.universe(),
            "vertex {v} outside universe {}",
            self.universe
        );
        self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe(),
            "vertex {v} outside universe {}",
            self.universe
        );
        self.bits |= 1 << v;
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes ({} vs {})",
            self.universe, other.universe
        );
    }

    /// Symmetric difference (GF(2) addition of indicator vectors).
    pub fn sym_diff(&self, other: &Self) -> Self {
        self.check_same(other);
        VertexSet {
            universe: self.universe,
            bits: self.bits ^ other.bits,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        VertexSet {
            universe: self.universe,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same(other);
        VertexSet {
            universe: self.universe,
            bits: self.bits & other.bits,
        }
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let full = Self::full(self.universe());
        VertexSet {
            universe: self.universe,
            bits: full.bits ^ self.bits,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_same(other);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_same(other);
        self.bits & other.bits == 0
    }

    /// Parity of the intersection size; the GF(2) inner product.
    pub fn parity_with(&self, other: &Self) -> bool {
        self.check_same(other);
        (self.bits & other.bits).count_ones() % 2 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let universe = self.universe();
        (0..universe).filter(move |&v| self.bits >> v & 1 == 1)
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of the universe in canonical (numeric) order.
    pub fn all_subsets(universe: usize) -> impl Iterator<Item = VertexSet> {
        assert!(
            universe <= 20,
            "subset enumeration over {universe} vertices refused"
        );
        (0u64..1 << universe).map(move |bits| VertexSet {
            universe: universe as u8,
            bits,
        })
    }

    /// All subsets of `self` in canonical order (including the empty set).
    pub fn subsets(&self) -> Vec<VertexSet> {
        let members = self.vertices();
        assert!(
            members.len() <= 20,
            "subset enumeration over {} members refused",
            members.len()
        );
        let mut out = Vec::with_capacity(1 << members.len());
        for mask in 0u64..1 << members.len() {
            let mut bits = 0u64;
            for (i, &v) in members.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    bits |= 1 << v;
                }
            }
            out.push(VertexSet {
                universe: self.universe,
                bits,
            });
        }
        out.sort();
        out
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A GF(2) matrix with up to 128 columns; each row is a bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<u128>,
}

impl BinaryMatrix {
    pub fn new(cols: usize) -> Self {
        assert!(cols <= 128, "at most 128 columns supported");
        BinaryMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<u128>) -> Self {
        let mut m = Self::new(cols);
        for r in rows {
            m.push_row(r);
        }
        m
    }

    pub fn push_row(&mut self, row: u128) {
        assert!(
            self.cols == 128 || row < (1u128 << self.cols),
            "row 0x{row:x} wider than {} columns",
            self.cols
        );
        self.rows.push(row);
    }

    pub fn push_set_row(&mut self, set: &VertexSet) {
        assert!(set.universe() <= self.cols);
        self.rows.push(set.bits() as u128);
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        gaussian_rref(&self.rows, self.cols).len()
    }

    /// A deterministic basis of `{ v : M v = 0 }`.
    ///
    /// The matrix is reduced to row echelon form; one basis vector is
    /// emitted per free column, in ascending column order, with the free
    /// column set and pivot columns back-substituted. The basis size is
    /// always `cols - rank`.
    pub fn nullspace_basis(&self) -> Vec<u128> {
        let rref = gaussian_rref(&self.rows, self.cols);
        // pivot column of each reduced row
        let pivots: Vec<usize> = rref.iter().map(|r| r.trailing_zeros() as usize).collect();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for (free, &pivot) in is_pivot.iter().enumerate() {
            if pivot {
                continue;
            }
            let mut v: u128 = 1 << free;
            for (row, &p) in rref.iter().zip(&pivots) {
                if row >> free & 1 == 1 {
                    v |= 1 << p;
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// In-place reduction to reduced row echelon form; returns the nonzero rows
/// sorted by pivot column (ascending). Pivot selection is by lowest set bit,
/// so the result is deterministic.
fn gaussian_rref(rows: &[u128], cols: usize) -> Vec<u128> {
    let mut reduced: Vec<u128> = Vec::new();
    for &row in rows {
        let mut r = row;
        for &b in &reduced {
            let p = b.trailing_zeros();
            if r >> p & 1 == 1 {
                r ^= b;
            }
        }
        if r != 0 {
            let p = r.trailing_zeros();
            for b in reduced.iter_mut() {
                if *b >> p & 1 == 1 {
                    *b ^= r;
                }
            }
            reduced.push(r);
        }
    }
    let _ = cols;
    reduced.sort_by_key(|r| r.trailing_zeros());
    reduced
}

/// True iff `v` is a GF(2) linear combination of `basis` vectors.
pub fn in_span(v: u128, basis: &[u128]) -> bool {
    Gf2Span::from_vectors(basis).contains(v)
}

/// An incrementally built GF(2) span with O(rank) membership tests.
#[derive(Clone, Debug, Default)]
pub struct Gf2Span {
    // rows kept in reduced form, each with a distinct pivot
    rows: Vec<u128>,
}

impl Gf2Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors(vectors: &[u128]) -> Self {
        let mut s = Self::new();
        for &v in vectors {
            s.insert(v);
        }
        s
    }

    fn reduce(&self, mut v: u128) -> u128 {
        for &b in &self.rows {
            let p = b.trailing_zeros();
            if v >> p & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    /// Adds a vector; returns false if it was already in the span.
    pub fn insert(&mut self, v: u128) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: u128) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}
