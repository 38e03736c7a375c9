//! Independent correctness oracles, syndrome analysis and bound checks.
//!
//! Two routes establish that a code corrects its claimed errors:
//!
//! * [`symplectic_verify`]: a pure GF(2) argument over the extracted
//!   stabilizer: every error below the claimed distance must either
//!   anticommute with some generator (detectable) or lie in the stabilizer
//!   span (degenerate).
//! * [`kl_verify_statevector`]: the Knill-Laflamme condition
//!   `⟨Γ_C|E|Γ_{C'}⟩ = f(E)·δ_{CC'}` checked on explicit state vectors,
//!   with `f(E)` required to be constant across codewords.
//!
//! The two must agree; the property suite exercises that equivalence on
//! random instances.

use crate::bits::{Gf2Span, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::PauliOperator;
use crate::statevec::{self, MAX_STATE_QUBITS, OVERLAP_TOLERANCE};
use num_bigint::BigUint;
use std::collections::BTreeMap;
use std::fmt;

/// The first error (in canonical enumeration order) violating a check,
/// together with the codeword pair that witnessed it when the state-vector
/// oracle found it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstFailure {
    pub error: PauliOperator,
    pub codewords: Option<(VertexSet, VertexSet)>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub passed: bool,
    pub distance_claimed: usize,
    pub first_failure: Option<FirstFailure>,
    /// Errors below the claimed distance that act as stabilizer elements
    /// (detected syndrome-free but harmless).
    pub degenerate_errors: Vec<PauliOperator>,
}

impl VerificationReport {
    pub fn summary(&self) -> String {
        if self.passed {
            format!(
                "pass (distance {}, {} degenerate error(s) below distance)",
                self.distance_claimed,
                self.degenerate_errors.len()
            )
        } else {
            let f = self
                .first_failure
                .as_ref()
                .expect("failed report carries a witness");
            match f.codewords {
                Some((c, c2)) => format!(
                    "fail (distance {}): error {} on codeword pair ({c}, {c2})",
                    self.distance_claimed, f.error
                ),
                None => format!(
                    "fail (distance {}): undetectable logical error {}",
                    self.distance_claimed, f.error
                ),
            }
        }
    }
}

/// Canonical enumeration of Pauli errors supported on `noisy` with
/// `1 <= weight < max_weight`: weight ascending, support bitmask ascending
/// within a weight, letters lexicographic with X < Y < Z (lowest vertex most
/// significant). Errors are produced as `X_ω Z_δ` with phase zero.
pub struct PauliErrorIter {
    universe: usize,
    noisy: Vec<usize>,
    max_weight: usize,
    weight: usize,
    combo: Option<u64>, // compressed mask over noisy indices
    letters: Vec<u8>,   // 0 = X, 1 = Y, 2 = Z per support position
}

impl PauliErrorIter {
    pub fn new(noisy: &VertexSet, max_weight: usize) -> Self {
        PauliErrorIter {
            universe: noisy.universe(),
            noisy: noisy.vertices(),
            max_weight,
            weight: 1,
            combo: None,
            letters: Vec::new(),
        }
    }

    fn support_vertices(&self, compressed: u64) -> Vec<usize> {
        (0..self.noisy.len())
            .filter(|&i| compressed >> i & 1 == 1)
            .map(|i| self.noisy[i])
            .collect()
    }
}

/// Next same-popcount mask in increasing numeric order (Gosper's hack).
fn next_combination(v: u64) -> u64 {
    let t = v | (v - 1);
    (t + 1) | (((!t & (!t).wrapping_neg()) - 1) >> (v.trailing_zeros() + 1))
}

impl Iterator for PauliErrorIter {
    type Item = PauliOperator;

    fn next(&mut self) -> Option<PauliOperator> {
        if self.weight >= self.max_weight || self.weight > self.noisy.len() {
            return None;
        }
        let combo = match self.combo {
            Some(c) => c,
            None => {
                let first = (1u64 << self.weight) - 1;
                self.combo = Some(first);
                self.letters = vec![0; self.weight];
                first
            }
        };
        let support = self.support_vertices(combo);
        let mut x = VertexSet::empty(self.universe);
        let mut z = VertexSet::empty(self.universe);
        for (i, &v) in support.iter().enumerate() {
            match self.letters[i] {
                0 => x.insert(v),
                2 => z.insert(v),
                _ => {
                    x.insert(v);
                    z.insert(v);
                }
            }
        }
        let op = PauliOperator::new(x, z, 0);

        // advance: letters first (last position fastest), then the support
        // combination, then the weight
        let mut pos = self.weight;
        loop {
            if pos == 0 {
                let next = next_combination(combo);
                if next < (1u64 << self.noisy.len()) {
                    self.combo = Some(next);
                    self.letters.iter_mut().for_each(|l| *l = 0);
                } else {
                    self.weight += 1;
                    self.combo = None;
                }
                break;
            }
            pos -= 1;
            self.letters[pos] += 1;
            if self.letters[pos] < 3 {
                break;
            }
            self.letters[pos] = 0;
        }
        Some(op)
    }
}

/// Knill-Laflamme check on explicit state vectors.
///
/// Enumerates every Pauli error supported on the noisy vertices with weight
/// below `d` and requires `⟨Γ_C|E|Γ_{C'}⟩ = f(E)·δ_{CC'}` across all pairs
/// of codeword labels, with the first label's diagonal as the reference
/// `f(E)`. Amplitudes are dyadic, so the 1e-9 tolerance is safe.
pub fn kl_verify_statevector(
    g: &Graph,
    members: &[VertexSet],
    d: usize,
) -> Result<VerificationReport> {
    let m = g.vertex_count();
    if m > MAX_STATE_QUBITS {
        return Err(Error::GraphTooLarge {
            vertices: m,
            limit: MAX_STATE_QUBITS,
        });
    }
    let base = statevec::build_graph_state(g)?;
    // graph-basis codewords have purely real amplitudes, and a Pauli error
    // contributes a global i^phase times per-amplitude sign flips; overlaps
    // are computed on the real vectors with the global phase factored out
    let codewords: Vec<Vec<f64>> = members
        .iter()
        .map(|c| {
            base.phase_flip(c)
                .amplitudes()
                .iter()
                .map(|a| {
                    debug_assert!(a.im.abs() < OVERLAP_TOLERANCE);
                    a.re
                })
                .collect()
        })
        .collect();
    let dim = 1usize << m;
    let index_mask = |s: &VertexSet| -> usize { s.iter().map(|v| 1usize << (m - 1 - v)).sum() };
    let mut flipped = vec![0.0f64; dim];
    let mut degenerate = Vec::new();

    for e in PauliErrorIter::new(&g.noisy_set(), d) {
        let x_mask = index_mask(&e.x_support());
        let z_mask = index_mask(&e.z_support());
        // M_ij = i^phase · Σ_c cw_i[c ⊕ x] · sign_z(c) · cw_j[c]
        let mut f_ref = None;
        let mut failure: Option<FirstFailure> = None;
        'outer: for (j, ket) in codewords.iter().enumerate() {
            for (c, out) in flipped.iter_mut().enumerate() {
                let sign = if (c & z_mask).count_ones() % 2 == 1 {
                    -1.0
                } else {
                    1.0
                };
                *out = sign * ket[c];
            }
            for (i, bra) in codewords.iter().enumerate() {
                let mut ov = 0.0f64;
                for c in 0..dim {
                    ov += bra[c ^ x_mask] * flipped[c];
                }
                if i == j {
                    match f_ref {
                        None => f_ref = Some(ov),
                        Some(f) => {
                            if (ov - f).abs() > OVERLAP_TOLERANCE {
                                failure = Some(FirstFailure {
                                    error: e,
                                    codewords: Some((members[i], members[j])),
                                });
                                break 'outer;
                            }
                        }
                    }
                } else if ov.abs() > OVERLAP_TOLERANCE {
                    failure = Some(FirstFailure {
                        error: e,
                        codewords: Some((members[i], members[j])),
                    });
                    break 'outer;
                }
            }
        }
        if let Some(first_failure) = failure {
            return Ok(VerificationReport {
                passed: false,
                distance_claimed: d,
                first_failure: Some(first_failure),
                degenerate_errors: degenerate,
            });
        }
        if let Some(f) = f_ref {
            if f.abs() > 1.0 - OVERLAP_TOLERANCE {
                degenerate.push(e);
            }
        }
    }
    Ok(VerificationReport {
        passed: true,
        distance_claimed: d,
        first_failure: None,
        degenerate_errors: degenerate,
    })
}

pub(crate) fn check_generators(stabilizer: &[PauliOperator]) -> Result<Gf2Span> {
    for (i, a) in stabilizer.iter().enumerate() {
        for b in &stabilizer[i + 1..] {
            if !a.commutes_with(b) {
                return Err(Error::InvalidGenerators(format!(
                    "generators {a} and {b} anticommute"
                )));
            }
        }
    }
    let mut span = Gf2Span::new();
    for gen in stabilizer {
        if !span.insert(gen.symplectic_vector()) {
            return Err(Error::InvalidGenerators(format!(
                "generator {gen} is dependent"
            )));
        }
    }
    Ok(span)
}

/// Stabilizer-criterion check restricted to errors inside `noisy`.
///
/// Every Pauli error with `1 <= weight < d` on `noisy` must anticommute
/// with some generator or lie in the generator span (x/z masks only; a
/// sign-flipped stabilizer element still acts as a harmless constant).
pub fn symplectic_verify(
    stabilizer: &[PauliOperator],
    noisy: &VertexSet,
    d: usize,
) -> Result<VerificationReport> {
    let span = check_generators(stabilizer)?;
    let mut degenerate = Vec::new();
    for e in PauliErrorIter::new(noisy, d) {
        let detectable = stabilizer.iter().any(|gen| !gen.commutes_with(&e));
        if detectable {
            continue;
        }
        if span.contains(e.symplectic_vector()) {
            degenerate.push(e);
        } else {
            return Ok(VerificationReport {
                passed: false,
                distance_claimed: d,
                first_failure: Some(FirstFailure {
                    error: e,
                    codewords: None,
                }),
                degenerate_errors: degenerate,
            });
        }
    }
    Ok(VerificationReport {
        passed: true,
        distance_claimed: d,
        first_failure: None,
        degenerate_errors: degenerate,
    })
}

/// Sign pattern of an error against each stabilizer generator;
/// bit i set means the error anticommutes with generator i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Syndrome {
    bits: u64,
    len: usize,
}

impl Syndrome {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_trivial(&self) -> bool {
        self.bits == 0
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.bits >> i & 1 == 1 { '-' } else { '+' })?;
        }
        Ok(())
    }
}

pub fn syndrome(stabilizer: &[PauliOperator], e: &PauliOperator) -> Syndrome {
    let mut bits = 0u64;
    for (i, gen) in stabilizer.iter().enumerate() {
        if !gen.commutes_with(e) {
            bits |= 1 << i;
        }
    }
    Syndrome {
        bits,
        len: stabilizer.len(),
    }
}

/// All single-qubit errors on the given qubits, grouped by syndrome;
/// returns the groups with at least two members. Groups and members are
/// ordered by first occurrence (qubit ascending, letters X, Y, Z).
pub fn degenerate_pairs(
    stabilizer: &[PauliOperator],
    qubits: &VertexSet,
) -> Vec<Vec<PauliOperator>> {
    let universe = qubits.universe();
    let mut order: Vec<Syndrome> = Vec::new();
    let mut groups: BTreeMap<Syndrome, Vec<PauliOperator>> = BTreeMap::new();
    for q in qubits.iter() {
        for op in [
            PauliOperator::x_on(universe, q),
            PauliOperator::y_on(universe, q),
            PauliOperator::z_on(universe, q),
        ] {
            let s = syndrome(stabilizer, &op);
            if !groups.contains_key(&s) {
                order.push(s);
            }
            groups.entry(s).or_default().push(op);
        }
    }
    order
        .into_iter()
        .filter_map(|s| {
            let g = &groups[&s];
            (g.len() >= 2).then(|| g.clone())
        })
        .collect()
}

/// Quantum Hamming bound ledger entry, in exact integer arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub t: usize,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub violated: bool,
}

/// `Σ_{s=0}^{t} 3^s C(n,s) <= 2^{n+e-k}` with `t = ⌊(d-1)/2⌋`.
pub fn hamming_bound(n: usize, k: usize, d: usize, e: usize) -> BoundCheck {
    assert!(d >= 1, "distance must be at least 1");
    assert!(k <= n + e, "cannot encode more qubits than the block holds");
    let t = (d - 1) / 2;
    let mut lhs = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    let mut pow3 = BigUint::from(1u32);
    for s in 0..=t {
        if s > 0 {
            // C(n,s) = C(n,s-1)·(n-s+1)/s; zero once s exceeds n
            binom = if s > n {
                BigUint::from(0u32)
            } else {
                binom * BigUint::from(n + 1 - s) / BigUint::from(s)
            };
        }
        lhs += &pow3 * &binom;
        pow3 *= 3u32;
    }
    let rhs = BigUint::from(2u32).pow((n + e - k) as u32);
    let violated = lhs > rhs;
    BoundCheck {
        t,
        lhs,
        rhs,
        violated,
    }
}

/// The one-error-correcting special form `2^k(3n+1) <= 2^{n+e}`;
/// algebraically identical to `hamming_bound(n, k, 3, e)`.
pub fn hamming_bound_one_error(n: usize, k: usize, e: usize) -> BoundCheck {
    let lhs = BigUint::from(2u32).pow(k as u32) * BigUint::from(3 * n + 1);
    let rhs = BigUint::from(2u32).pow((n + e) as u32);
    let violated = lhs > rhs;
    BoundCheck {
        t: 1,
        lhs,
        rhs,
        violated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{extract_stabilizer, CodingClique};

    fn set(universe: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(universe, vs)
    }

    fn star_code_parts() -> (Graph, Vec<VertexSet>, Vec<PauliOperator>) {
        let g = Graph::star(3).unwrap().with_pure(&[0]).unwrap();
        let members = vec![set(4, &[]), set(4, &[1, 2, 3])];
        let clique = CodingClique {
            members: members.clone(),
            is_group: true,
            generators: vec![set(4, &[1, 2, 3])],
        };
        let stab = extract_stabilizer(&g, &clique).unwrap();
        (g, members, stab)
    }

    #[test]
    fn error_enumeration_order() {
        let noisy = set(3, &[0, 1, 2]);
        let errs: Vec<String> = PauliErrorIter::new(&noisy, 2)
            .map(|e| (0..3).map(|v| e.letter(v)).collect::<String>())
            .collect();
        assert_eq!(
            errs,
            vec!["XII", "YII", "ZII", "IXI", "IYI", "IZI", "IIX", "IIY", "IIZ"]
        );
        // weight-2 supports follow in numeric mask order
        let w2: Vec<String> = PauliErrorIter::new(&noisy, 3)
            .skip(9)
            .take(3)
            .map(|e| (0..3).map(|v| e.letter(v)).collect())
            .collect();
        assert_eq!(w2, vec!["XXI", "XYI", "XZI"]);
    }

    #[test]
    fn star_code_passes_at_its_distance() {
        let (g, members, stab) = star_code_parts();
        let kl = kl_verify_statevector(&g, &members, 3).unwrap();
        assert!(kl.passed, "{}", kl.summary());
        let sp = symplectic_verify(&stab, &g.noisy_set(), 3).unwrap();
        assert!(sp.passed, "{}", sp.summary());
        // the weight-2 collisions are resolved by degeneracy
        assert!(sp
            .degenerate_errors
            .iter()
            .any(|e| e.x_support() == set(4, &[1, 2]) && e.z_support().is_empty()));
    }

    #[test]
    fn star_code_fails_one_past_its_distance() {
        let (g, members, stab) = star_code_parts();
        let kl = kl_verify_statevector(&g, &members, 4).unwrap();
        assert!(!kl.passed);
        let sp = symplectic_verify(&stab, &g.noisy_set(), 4).unwrap();
        assert!(!sp.passed);
        assert_eq!(
            kl.first_failure.unwrap().error,
            sp.first_failure.unwrap().error,
            "both oracles must agree on the first failing error"
        );
    }

    #[test]
    fn syndrome_table_star() {
        let (_, _, stab) = star_code_parts();
        let syn = |e: &PauliOperator| syndrome(&stab, e).to_string();
        assert_eq!(syn(&PauliOperator::x_on(4, 1)), "-++");
        assert_eq!(syn(&PauliOperator::x_on(4, 2)), "-++");
        assert_eq!(syn(&PauliOperator::x_on(4, 3)), "-++");
        assert_eq!(syn(&PauliOperator::z_on(4, 1)), "+--");
        assert_eq!(syn(&PauliOperator::y_on(4, 1)), "---");
        assert_eq!(syn(&PauliOperator::identity(4)), "+++");
    }

    #[test]
    fn syndrome_is_coset_invariant() {
        let (g, _, stab) = star_code_parts();
        let e = PauliOperator::y_on(4, 2);
        let s = g.stabilizer(&set(4, &[1, 3]));
        assert_eq!(syndrome(&stab, &e), syndrome(&stab, &e.mul(&s)));
    }

    #[test]
    fn degenerate_pairs_star_triple() {
        let (_, _, stab) = star_code_parts();
        let groups = degenerate_pairs(&stab, &set(4, &[1, 2, 3]));
        assert_eq!(groups.len(), 1);
        assert_eq!(
            groups[0],
            vec![
                PauliOperator::x_on(4, 1),
                PauliOperator::x_on(4, 2),
                PauliOperator::x_on(4, 3)
            ]
        );
    }

    #[test]
    fn degenerate_pair_single_generator() {
        let stab = vec![PauliOperator::z_on(1, 0)];
        let groups = degenerate_pairs(&stab, &set(1, &[0]));
        assert_eq!(groups.len(), 1);
        assert_eq!(
            groups[0],
            vec![PauliOperator::x_on(1, 0), PauliOperator::y_on(1, 0)]
        );
    }

    #[test]
    fn symplectic_rejects_bad_generators() {
        let x = PauliOperator::x_on(2, 0);
        let z = PauliOperator::z_on(2, 0);
        let noisy = set(2, &[0, 1]);
        assert!(symplectic_verify(&[x, z], &noisy, 2).is_err());
        assert!(symplectic_verify(&[x, x], &noisy, 2).is_err());
    }

    #[test]
    fn hamming_bound_ledger() {
        let b = hamming_bound(3, 1, 3, 1);
        assert_eq!(
            (b.lhs.to_string().as_str(), b.rhs.to_string().as_str()),
            ("10", "8")
        );
        assert!(b.violated);
        let b = hamming_bound(4, 1, 4, 1);
        assert_eq!(
            (b.lhs.to_string().as_str(), b.rhs.to_string().as_str()),
            ("13", "16")
        );
        assert!(!b.violated);
        let b = hamming_bound(5, 1, 5, 1);
        assert_eq!(
            (b.lhs.to_string().as_str(), b.rhs.to_string().as_str()),
            ("106", "32")
        );
        assert!(b.violated);
    }

    #[test]
    fn hamming_bound_forms_agree_at_distance_three() {
        for n in 2..12 {
            for k in 0..=2 {
                for e in 0..=2 {
                    assert_eq!(
                        hamming_bound(n, k, 3, e).violated,
                        hamming_bound_one_error(n, k, e).violated,
                        "forms disagree at n={n} k={k} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn hamming_bound_monotone() {
        for n in 2..10 {
            for e in 0..=1 {
                for d in 1..=n {
                    for k in 0..(n + e) {
                        let a = hamming_bound(n, k, d, e);
                        if a.violated {
                            assert!(hamming_bound(n, k + 1, d, e).violated);
                            if d < n {
                                assert!(hamming_bound(n, k, d + 1, e).violated);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hamming_bound_no_overflow_at_cap() {
        let b = hamming_bound(64, 1, 64, 1);
        assert!(b.lhs > BigUint::from(0u32));
        assert!(b.violated);
    }
}
