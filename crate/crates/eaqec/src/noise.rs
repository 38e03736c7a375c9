//! Independent per-qubit error model, effective-coding probability,
//! infidelity and curve emission.
//!
//! Noisy qubits err with probability `p`, protected qubits with `pe`; given
//! an error the letter is drawn from the X/Y/Z split (uniform by default).
//! `P_C`, the probability that the error which occurs is correctable, is
//! computed exactly, both as a number and as a polynomial in `(p, pe)`, and
//! cross-checked by Monte Carlo sampling.

use crate::bits::{Gf2Span, VertexSet};
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;
use crate::poly::{Polynomial, Rational};
use crate::verify::{check_generators, syndrome, Syndrome};
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};
use std::collections::BTreeMap;

/// Support enumeration above this many qubits is refused.
const MAX_ENUMERATION_QUBITS: usize = 20;
/// Full per-letter enumeration (decoder rule) above this is refused.
const MAX_DECODER_ENUMERATION_QUBITS: usize = 14;

#[derive(Clone, Debug)]
pub struct NoiseModel {
    /// Error probability of each noisy qubit.
    pub p: f64,
    /// Error probability of each protected qubit.
    pub pe: f64,
    /// Conditional X/Y/Z letter probabilities; kept rational so the
    /// symbolic polynomial stays exact.
    pub split: [Rational; 3],
}

impl NoiseModel {
    pub fn uniform(p: f64, pe: f64) -> Result<Self> {
        Self::with_split(p, pe, [Rational::new(1, 3); 3])
    }

    pub fn with_split(p: f64, pe: f64, split: [Rational; 3]) -> Result<Self> {
        for (label, v) in [("p", p), ("pe", pe)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidNoise(format!("{label} = {v} outside [0,1]")));
            }
        }
        let total = split[0] + split[1] + split[2];
        if total != Rational::ONE {
            return Err(Error::InvalidNoise(format!(
                "letter split sums to {total}, not 1"
            )));
        }
        if split.iter().any(|s| s.to_f64() < 0.0) {
            return Err(Error::InvalidNoise("negative letter probability".into()));
        }
        Ok(NoiseModel { p, pe, split })
    }
}

/// How a decoder-backed profile decides correctability.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecodingRule {
    /// Only error supports of size ≤ ⌊(d-1)/2⌋ confined to noisy qubits
    /// count as correctable. This reproduces the closed-form coding
    /// probabilities exactly and is the default.
    Strict,
    /// An error counts as correctable iff composing it with the syndrome
    /// table's correction lands in the stabilizer span, which credits
    /// degeneracy beyond the designed weight.
    Decoder,
}

/// A code whose stabilizer generators are known.
#[derive(Clone, Debug)]
pub struct DecoderProfile {
    pub name: String,
    pub stabilizer: Vec<PauliOperator>,
    pub pure_set: VertexSet,
    pub k: usize,
    pub d: usize,
    pub rule: DecodingRule,
}

/// A code known only by its parameters and an explicit correctable-support
/// rule (used for literature comparison codes without published
/// generators): supports of size ≤ `max_correctable_support` are
/// correctable, larger ones are not, irrespective of which qubits they hit.
#[derive(Clone, Debug)]
pub struct AbstractProfile {
    pub name: String,
    pub noisy: usize,
    pub protected: usize,
    pub k: usize,
    pub max_correctable_support: usize,
}

impl AbstractProfile {
    /// The optimal 10-qubit distance-3 stabilizer code carrying 4 logical
    /// qubits, used with one of its qubits held by the receiver.
    pub fn ten_four_three() -> Self {
        AbstractProfile {
            name: "10-4-3".into(),
            noisy: 9,
            protected: 1,
            k: 4,
            max_correctable_support: 1,
        }
    }

    /// The optimal 9-qubit distance-3 stabilizer code with 3 logical qubits.
    pub fn nine_three_three() -> Self {
        AbstractProfile {
            name: "9-3-3".into(),
            noisy: 9,
            protected: 0,
            k: 3,
            max_correctable_support: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub enum CorrectabilityProfile {
    Decoder(DecoderProfile),
    Abstract(AbstractProfile),
}

impl CorrectabilityProfile {
    pub fn name(&self) -> &str {
        match self {
            CorrectabilityProfile::Decoder(p) => &p.name,
            CorrectabilityProfile::Abstract(p) => &p.name,
        }
    }

    pub fn k(&self) -> usize {
        match self {
            CorrectabilityProfile::Decoder(p) => p.k,
            CorrectabilityProfile::Abstract(p) => p.k,
        }
    }

    pub fn qubit_count(&self) -> usize {
        match self {
            CorrectabilityProfile::Decoder(p) => p.pure_set.universe(),
            CorrectabilityProfile::Abstract(p) => p.noisy + p.protected,
        }
    }

    fn noisy_protected(&self) -> (usize, usize) {
        match self {
            CorrectabilityProfile::Decoder(p) => {
                (p.pure_set.universe() - p.pure_set.len(), p.pure_set.len())
            }
            CorrectabilityProfile::Abstract(p) => (p.noisy, p.protected),
        }
    }
}

/// Minimum-weight syndrome decoding table.
///
/// Errors of weight ≤ `max_weight` on `noisy` are enumerated in canonical
/// order and the first (hence minimum-weight) representative of each
/// syndrome is stored. The trivial syndrome maps to the identity.
pub fn decoder_table(
    stabilizer: &[PauliOperator],
    noisy: &VertexSet,
    max_weight: usize,
) -> Result<BTreeMap<Syndrome, PauliOperator>> {
    check_generators(stabilizer)?;
    let mut table = BTreeMap::new();
    let identity = PauliOperator::identity(noisy.universe());
    table.insert(syndrome(stabilizer, &identity), identity);
    for e in crate::verify::PauliErrorIter::new(noisy, max_weight + 1) {
        table.entry(syndrome(stabilizer, &e)).or_insert(e);
    }
    Ok(table)
}

/// Machinery shared by exact enumeration and Monte Carlo for one profile.
struct DecoderContext {
    table: BTreeMap<Syndrome, PauliOperator>,
    span: Gf2Span,
}

impl DecoderContext {
    fn new(profile: &DecoderProfile) -> Result<Self> {
        let span = check_generators(&profile.stabilizer)?;
        let t = (profile.d.saturating_sub(1)) / 2;
        let table = decoder_table(&profile.stabilizer, &profile.pure_set.complement(), t)?;
        Ok(DecoderContext { table, span })
    }

    /// The decoder-rule correctability test for an arbitrary error.
    fn correctable(&self, stabilizer: &[PauliOperator], e: &PauliOperator) -> bool {
        match self.table.get(&syndrome(stabilizer, e)) {
            None => false,
            Some(correction) => self
                .span
                .contains(correction.symplectic_vector() ^ e.symplectic_vector()),
        }
    }
}

/// Exact coding probability: value plus the expanded polynomial.
#[derive(Clone, Debug)]
pub struct CodingProbability {
    pub value: f64,
    pub polynomial: Polynomial,
}

/// Correctable-mass buckets: `s[(i, j)]` is the split-weighted number of
/// correctable errors with `i` noisy and `j` protected qubits hit.
struct Buckets {
    noisy: usize,
    protected: usize,
    s: BTreeMap<(usize, usize), Rational>,
}

impl Buckets {
    fn numeric_value(&self, p: f64, pe: f64) -> f64 {
        self.s
            .iter()
            .map(|(&(i, j), c)| {
                c.to_f64()
                    * p.powi(i as i32)
                    * (1.0 - p).powi((self.noisy - i) as i32)
                    * pe.powi(j as i32)
                    * (1.0 - pe).powi((self.protected - j) as i32)
            })
            .sum()
    }

    fn polynomial(&self) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (&(i, j), &c) in &self.s {
            let term = Polynomial::monomial(i as u32, 0, Rational::ONE)
                * Polynomial::p_bar().pow((self.noisy - i) as u32)
                * Polynomial::monomial(0, j as u32, Rational::ONE)
                * Polynomial::pe_bar().pow((self.protected - j) as u32);
            acc = acc + term.scale(c);
        }
        acc
    }
}

fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::ZERO;
    }
    let mut c: i128 = 1;
    for s in 1..=k {
        c = c * (n as i128 + 1 - s as i128) / s as i128;
    }
    Rational::from_integer(c)
}

fn buckets_for(profile: &CorrectabilityProfile, model: &NoiseModel) -> Result<Buckets> {
    let (noisy, protected) = profile.noisy_protected();
    let total = noisy + protected;
    if total > MAX_ENUMERATION_QUBITS {
        return Err(Error::EnumerationBound(format!(
            "{total} qubits exceeds the {MAX_ENUMERATION_QUBITS}-qubit support enumeration cap"
        )));
    }
    let mut s: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    match profile {
        CorrectabilityProfile::Abstract(a) => {
            for i in 0..=a.noisy {
                for j in 0..=a.protected {
                    if i + j <= a.max_correctable_support {
                        s.insert((i, j), binomial(a.noisy, i) * binomial(a.protected, j));
                    }
                }
            }
        }
        CorrectabilityProfile::Decoder(dp) => match dp.rule {
            DecodingRule::Strict => {
                let t = (dp.d.saturating_sub(1)) / 2;
                for i in 0..=t.min(noisy) {
                    s.insert((i, 0), binomial(noisy, i));
                }
            }
            DecodingRule::Decoder => {
                if total > MAX_DECODER_ENUMERATION_QUBITS {
                    return Err(Error::EnumerationBound(format!(
                        "{total} qubits exceeds the {MAX_DECODER_ENUMERATION_QUBITS}-qubit \
                         decoder-rule enumeration cap"
                    )));
                }
                let ctx = DecoderContext::new(dp)?;
                let universe = dp.pure_set.universe();
                let noisy_set = dp.pure_set.complement();
                for support in VertexSet::all_subsets(universe) {
                    let frac = correctable_fraction(dp, &ctx, &support, &model.split);
                    if frac.is_zero() {
                        continue;
                    }
                    let i = support.intersection(&noisy_set).len();
                    let j = support.intersection(&dp.pure_set).len();
                    let entry = s.entry((i, j)).or_insert(Rational::ZERO);
                    *entry = *entry + frac;
                }
            }
        },
    }
    Ok(Buckets {
        noisy,
        protected,
        s,
    })
}

/// Split-weighted fraction of letter assignments on `support` that the
/// decoder corrects.
fn correctable_fraction(
    profile: &DecoderProfile,
    ctx: &DecoderContext,
    support: &VertexSet,
    split: &[Rational; 3],
) -> Rational {
    let vertices = support.vertices();
    if vertices.is_empty() {
        return Rational::ONE;
    }
    let universe = support.universe();
    let mut letters = vec![0u8; vertices.len()];
    let mut frac = Rational::ZERO;
    loop {
        let mut x = VertexSet::empty(universe);
        let mut z = VertexSet::empty(universe);
        let mut weight = Rational::ONE;
        for (i, &v) in vertices.iter().enumerate() {
            weight = weight * split[letters[i] as usize];
            match letters[i] {
                0 => x.insert(v),
                2 => z.insert(v),
                _ => {
                    x.insert(v);
                    z.insert(v);
                }
            }
        }
        let e = PauliOperator::new(x, z, 0);
        if ctx.correctable(&profile.stabilizer, &e) {
            frac = frac + weight;
        }
        let mut pos = 0;
        loop {
            if pos == letters.len() {
                return frac;
            }
            letters[pos] += 1;
            if letters[pos] < 3 {
                break;
            }
            letters[pos] = 0;
            pos += 1;
        }
    }
}

/// Sums over all error supports, weighting each by the split-weighted
/// fraction of correctable letter assignments.
pub fn effective_coding_probability(
    profile: &CorrectabilityProfile,
    model: &NoiseModel,
) -> Result<CodingProbability> {
    let buckets = buckets_for(profile, model)?;
    Ok(CodingProbability {
        value: buckets.numeric_value(model.p, model.pe),
        polynomial: buckets.polynomial(),
    })
}

/// `1 - P_C^{1/k}`: the physical error probability at which bare qubits
/// would match the code's effective-coding probability.
pub fn infidelity(profile: &CorrectabilityProfile, model: &NoiseModel) -> Result<f64> {
    let k = profile.k();
    assert!(k >= 1, "infidelity needs at least one logical qubit");
    let pc = effective_coding_probability(profile, model)?.value;
    Ok(infidelity_from_pc(pc, k))
}

fn infidelity_from_pc(pc: f64, k: usize) -> f64 {
    if pc <= 0.0 {
        1.0
    } else {
        1.0 - pc.powf(1.0 / k as f64)
    }
}

/// The no-code baseline: bare qubits fail at exactly the physical rate.
pub fn no_code_infidelity(model: &NoiseModel) -> f64 {
    model.p
}

#[derive(Clone, Debug)]
pub struct CurveTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl CurveTable {
    /// CSV with every float printed to 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.11e}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// Uniform grid of infidelities with `pe = ratio · p`, plus the no-code
/// baseline column.
pub fn infidelity_curve(
    profiles: &[CorrectabilityProfile],
    p_min: f64,
    p_max: f64,
    steps: usize,
    pe_ratio: f64,
) -> Result<CurveTable> {
    if !(0.0 <= p_min && p_min < p_max && p_max <= 1.0) {
        return Err(Error::InvalidRange(format!(
            "need 0 <= p_min < p_max <= 1, got [{p_min}, {p_max}]"
        )));
    }
    if steps < 2 {
        return Err(Error::InvalidRange(format!(
            "need at least 2 steps, got {steps}"
        )));
    }
    if pe_ratio < 0.0 || pe_ratio * p_max > 1.0 {
        return Err(Error::InvalidRange(format!(
            "pe ratio {pe_ratio} sends pe outside [0,1] on this grid"
        )));
    }
    let mut header = vec!["p".to_string()];
    header.extend(profiles.iter().map(|p| p.name().to_string()));
    header.push("no_code".to_string());

    // buckets are probability-independent; compute them once per profile
    let model0 = NoiseModel::uniform(0.0, 0.0)?;
    let mut bucket_list = Vec::new();
    for profile in profiles {
        bucket_list.push((buckets_for(profile, &model0)?, profile.k()));
    }

    let mut rows = Vec::with_capacity(steps);
    for step in 0..steps {
        let p = p_min + (p_max - p_min) * step as f64 / (steps - 1) as f64;
        let pe = pe_ratio * p;
        let mut row = vec![p];
        for (buckets, k) in &bucket_list {
            row.push(infidelity_from_pc(buckets.numeric_value(p, pe), *k));
        }
        row.push(p);
        rows.push(row);
    }
    Ok(CurveTable { header, rows })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub std_err: f64,
    pub trials: u64,
    pub successes: u64,
}

/// Samples independent per-qubit errors and applies the profile's
/// correctability test.
///
/// Bit-stream contract: the generator is ChaCha20 keyed by `seed`
/// (`seed_from_u64`). Qubits are visited in ascending index order; each
/// draws one f64 in [0,1) (top 53 bits of one `next_u64`) for the error
/// decision, and on error one more f64 for the letter. Estimates are
/// therefore bit-identical for a fixed seed.
pub fn monte_carlo_pc(
    profile: &CorrectabilityProfile,
    model: &NoiseModel,
    trials: u64,
    seed: u64,
) -> Result<McEstimate> {
    if trials < 1 {
        return Err(Error::InvalidRange("at least one trial required".into()));
    }
    let split_f = [model.split[0].to_f64(), model.split[1].to_f64()];

    enum Tester<'p> {
        Abstract {
            max: usize,
        },
        Strict {
            t: usize,
        },
        Decoder {
            ctx: DecoderContext,
            profile: &'p DecoderProfile,
        },
    }
    let (noisy, protected) = profile.noisy_protected();
    let total = noisy + protected;
    // qubit order: a decoder profile uses its own universe and pure set;
    // an abstract profile has no structure beyond the two counts, so its
    // protected qubits are taken first
    let is_protected: Vec<bool> = match profile {
        CorrectabilityProfile::Decoder(dp) => (0..total).map(|v| dp.pure_set.contains(v)).collect(),
        CorrectabilityProfile::Abstract(_) => (0..total).map(|v| v < protected).collect(),
    };
    let tester = match profile {
        CorrectabilityProfile::Abstract(a) => Tester::Abstract {
            max: a.max_correctable_support,
        },
        CorrectabilityProfile::Decoder(dp) => match dp.rule {
            DecodingRule::Strict => Tester::Strict {
                t: (dp.d.saturating_sub(1)) / 2,
            },
            DecodingRule::Decoder => Tester::Decoder {
                ctx: DecoderContext::new(dp)?,
                profile: dp,
            },
        },
    };

    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut draw = move || (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);

    let mut successes = 0u64;
    for _ in 0..trials {
        let mut support_len = 0usize;
        let mut protected_hit = false;
        let mut x = 0u64;
        let mut z = 0u64;
        for (q, &prot) in is_protected.iter().enumerate() {
            let prob = if prot { model.pe } else { model.p };
            if draw() >= prob {
                continue;
            }
            support_len += 1;
            protected_hit |= prot;
            let u = draw();
            if u < split_f[0] {
                x |= 1 << q;
            } else if u < split_f[0] + split_f[1] {
                x |= 1 << q;
                z |= 1 << q;
            } else {
                z |= 1 << q;
            }
        }
        let ok = match &tester {
            Tester::Abstract { max } => support_len <= *max,
            Tester::Strict { t } => !protected_hit && support_len <= *t,
            Tester::Decoder { ctx, profile } => {
                if support_len == 0 {
                    true
                } else {
                    let e = PauliOperator::new(
                        VertexSet::from_bits(total, x),
                        VertexSet::from_bits(total, z),
                        0,
                    );
                    ctx.correctable(&profile.stabilizer, &e)
                }
            }
        };
        if ok {
            successes += 1;
        }
    }
    let mean = successes as f64 / trials as f64;
    let std_err = (mean * (1.0 - mean) / trials as f64).sqrt();
    Ok(McEstimate {
        mean,
        std_err,
        trials,
        successes,
    })
}
