//! Exact small-scale state vectors for graph states.
//!
//! This is the ground-truth oracle: graph-state preparation and Pauli
//! application on explicit amplitude vectors, nothing more. Amplitudes of a
//! graph state are `±2^{-m/2}`, so "zero overlap" decisions are safe at
//! tolerance 1e-9.
//!
//! Index convention: vertex 0 is the most significant bit of the
//! computational-basis index (pinned once here, used everywhere).

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::PauliOperator;
use num_complex::Complex64;

/// State vectors are limited to this many qubits; 2^14 amplitudes keep
/// every oracle run fast while covering everything the crate constructs.
pub const MAX_STATE_QUBITS: usize = 14;

pub const OVERLAP_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct StateVector {
    qubits: usize,
    amps: Vec<Complex64>,
}

/// Bitmask of the basis index corresponding to a vertex set, under the
/// vertex-0-is-MSB convention.
fn index_mask(s: &VertexSet, qubits: usize) -> usize {
    let mut mask = 0usize;
    for v in s.iter() {
        mask |= 1 << (qubits - 1 - v);
    }
    mask
}

impl StateVector {
    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(
            self.qubits, other.qubits,
            "states on different qubit counts"
        );
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Applies `i^p X_x Z_z`: `out[b] = i^p (-1)^{|z ∩ (b△x)|} in[b△x]`.
    pub fn apply(&self, op: &PauliOperator) -> StateVector {
        let mut out = self.clone();
        self.apply_into(op, &mut out);
        out
    }

    pub fn apply_into(&self, op: &PauliOperator, out: &mut StateVector) {
        assert_eq!(op.universe(), self.qubits, "operator universe mismatch");
        assert_eq!(out.qubits, self.qubits);
        let phase = match op.phase() {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            3 => Complex64::new(0.0, -1.0),
            _ => unreachable!(),
        };
        let x_mask = index_mask(&op.x_support(), self.qubits);
        let z_mask = index_mask(&op.z_support(), self.qubits);
        for b in 0..self.amps.len() {
            let src = b ^ x_mask;
            let sign = if (src & z_mask).count_ones() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            out.amps[b] = phase * sign * self.amps[src];
        }
    }

    /// Multiplies amplitudes by `(-1)^{|C ∩ b|}`, i.e. applies `Z_C`.
    pub fn phase_flip(&self, c: &VertexSet) -> StateVector {
        assert_eq!(c.universe(), self.qubits);
        let z_mask = index_mask(c, self.qubits);
        let mut out = self.clone();
        for (b, amp) in out.amps.iter_mut().enumerate() {
            if (b & z_mask).count_ones() % 2 == 1 {
                *amp = -*amp;
            }
        }
        out
    }

    pub fn approx_eq(&self, other: &StateVector, tol: f64) -> bool {
        self.qubits == other.qubits
            && self
                .amps
                .iter()
                .zip(&other.amps)
                .all(|(a, b)| (a - b).norm() <= tol)
    }
}

/// Prepares `∏ U_ab^{Γ_ab} |+…+⟩`: amplitude `2^{-m/2} (-1)^{q(b)}` where
/// `q(b)` counts edges with both endpoints set in `b`.
pub fn build_graph_state(g: &Graph) -> Result<StateVector> {
    let m = g.vertex_count();
    if m > MAX_STATE_QUBITS {
        return Err(Error::GraphTooLarge {
            vertices: m,
            limit: MAX_STATE_QUBITS,
        });
    }
    let edges = g.edges();
    let edge_masks: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| (1usize << (m - 1 - a), 1usize << (m - 1 - b)))
        .collect();
    let dim = 1usize << m;
    let base = (dim as f64).sqrt().recip();
    let mut amps = Vec::with_capacity(dim);
    for b in 0..dim {
        let mut parity = 0u32;
        for &(ma, mb) in &edge_masks {
            if b & ma != 0 && b & mb != 0 {
                parity ^= 1;
            }
        }
        amps.push(Complex64::new(if parity == 1 { -base } else { base }, 0.0));
    }
    Ok(StateVector { qubits: m, amps })
}

/// The graph-basis state `|Γ_C⟩ = Z_C |Γ⟩`.
pub fn graph_basis_state(g: &Graph, c: &VertexSet) -> Result<StateVector> {
    Ok(build_graph_state(g)?.phase_flip(c))
}

/// `⟨Γ_C| E |Γ_{C'}⟩` computed on explicit state vectors.
pub fn basis_overlap(
    g: &Graph,
    c: &VertexSet,
    e: &PauliOperator,
    c2: &VertexSet,
) -> Result<Complex64> {
    let bra = graph_basis_state(g, c)?;
    let ket = graph_basis_state(g, c2)?;
    Ok(bra.inner(&ket.apply(e)))
}
