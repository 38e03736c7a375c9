//! Exact Pauli-group arithmetic on bitmask supports.
//!
//! An operator is stored as `i^phase · X_{x} · Z_{z}` with `phase` tracked
//! mod 4 (the full single-phase Pauli group). Tracking the full phase is
//! cheap and removes a class of sign bugs even where only mod-2 information
//! is consumed downstream.

use crate::bits::VertexSet;
use std::fmt;

/// `i^phase · X_{x_support} · Z_{z_support}` over a fixed vertex universe.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: VertexSet,
    z: VertexSet,
    phase: u8,
}

impl PauliOperator {
    pub fn new(x: VertexSet, z: VertexSet, phase: u8) -> Self {
        assert_eq!(
            x.universe(),
            z.universe(),
            "x/z supports over different universes"
        );
        PauliOperator {
            x,
            z,
            phase: phase % 4,
        }
    }

    pub fn identity(universe: usize) -> Self {
        Self::new(VertexSet::empty(universe), VertexSet::empty(universe), 0)
    }

    pub fn x_on(universe: usize, v: usize) -> Self {
        Self::new(
            VertexSet::singleton(universe, v),
            VertexSet::empty(universe),
            0,
        )
    }

    pub fn z_on(universe: usize, v: usize) -> Self {
        Self::new(
            VertexSet::empty(universe),
            VertexSet::singleton(universe, v),
            0,
        )
    }

    /// The Hermitian Y on one vertex: `Y = i·X·Z`.
    pub fn y_on(universe: usize, v: usize) -> Self {
        Self::new(
            VertexSet::singleton(universe, v),
            VertexSet::singleton(universe, v),
            1,
        )
    }

    pub fn x_support(&self) -> VertexSet {
        self.x
    }

    pub fn z_support(&self) -> VertexSet {
        self.z
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn universe(&self) -> usize {
        self.x.universe()
    }

    /// Vertices on which the operator acts nontrivially.
    pub fn support(&self) -> VertexSet {
        self.x.union(&self.z)
    }

    pub fn weight(&self) -> usize {
        self.support().len()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_empty() && self.z.is_empty()
    }

    /// Exact group product `self · other`.
    ///
    /// Moving `Z_{z(self)}` past `X_{x(other)}` contributes
    /// `(-1)^{|z(self) ∩ x(other)|}`, i.e. phase `2·|z_a ∩ x_b|` mod 4.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.universe(),
            other.universe(),
            "pauli operators over different universes"
        );
        let cross = self.z.intersection(&other.x).len() as u8;
        PauliOperator {
            x: self.x.sym_diff(&other.x),
            z: self.z.sym_diff(&other.z),
            phase: (self.phase + other.phase + 2 * cross) % 4,
        }
    }

    pub fn inverse(&self) -> Self {
        // (i^p X Z)^-1 = i^-p Z X = i^{-p + 2|x∩z|} X Z
        let cross = self.x.intersection(&self.z).len() as u8;
        PauliOperator {
            x: self.x,
            z: self.z,
            phase: (8 - self.phase + 2 * cross) % 4,
        }
    }

    /// Parity of the symplectic form: 1 iff the operators anticommute.
    pub fn symplectic_product(&self, other: &Self) -> u8 {
        assert_eq!(self.universe(), other.universe());
        let c = self.x.intersection(&other.z).len() + self.z.intersection(&other.x).len();
        (c % 2) as u8
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.symplectic_product(other) == 0
    }

    /// The (x|z) masks packed into one vector: x bits low, z bits shifted by
    /// the universe size. Phase is deliberately dropped: span membership of
    /// this vector is the phase-insensitive stabilizer test.
    pub fn symplectic_vector(&self) -> u128 {
        (self.x.bits() as u128) | ((self.z.bits() as u128) << self.universe())
    }

    /// Single-vertex letter: I, X, Y or Z.
    pub fn letter(&self, v: usize) -> char {
        match (self.x.contains(v), self.z.contains(v)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (false, true) => 'Z',
            (true, true) => 'Y',
        }
    }

    /// Phase exponent of the leading scalar when the operator is written as
    /// a product of I/X/Y/Z letters: `i^print_phase · letters`.
    fn print_phase(&self) -> u8 {
        // i^phase X Z = i^{phase} (-i)^{|x∩z|} ∏ letters
        let y_count = self.x.intersection(&self.z).len() as u8;
        (self.phase + 3 * (y_count % 4)) % 4
    }

    /// Renders `sign + letters`, e.g. `+XZZZ`, `-IXXI`, `-iY`.
    pub fn to_letter_string(&self) -> String {
        let sign = match self.print_phase() {
            0 => "+",
            1 => "+i",
            2 => "-",
            3 => "-i",
            _ => unreachable!(),
        };
        let letters: String = (0..self.universe()).map(|v| self.letter(v)).collect();
        format!("{sign}{letters}")
    }

    /// Parses the `to_letter_string` format. A missing sign means `+`.
    pub fn from_letter_string(s: &str) -> Result<Self, String> {
        let (sign, rest) = if let Some(r) = s.strip_prefix("+i") {
            (1u8, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3u8, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0u8, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2u8, r)
        } else {
            (0u8, s)
        };
        let universe = rest.chars().count();
        if universe > crate::bits::MAX_UNIVERSE {
            return Err(format!(
                "pauli string longer than {} qubits",
                crate::bits::MAX_UNIVERSE
            ));
        }
        let mut x = VertexSet::empty(universe);
        let mut z = VertexSet::empty(universe);
        for (v, c) in rest.chars().enumerate() {
            match c {
                'I' => {}
                'X' => x.insert(v),
                'Z' => z.insert(v),
                'Y' => {
                    x.insert(v);
                    z.insert(v);
                }
                other => return Err(format!("invalid pauli letter '{other}'")),
            }
        }
        let y_count = x.intersection(&z).len() as u8;
        Ok(PauliOperator {
            x,
            z,
            phase: (sign + y_count) % 4,
        })
    }

    /// Same letters, same sign.
    pub fn equals_exactly(&self, other: &Self) -> bool {
        self == other
    }

    /// Same letters, ignoring the leading scalar.
    pub fn equals_up_to_phase(&self, other: &Self) -> bool {
        self.x == other.x && self.z == other.z
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_letter_string())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_letter_string())
    }
}
