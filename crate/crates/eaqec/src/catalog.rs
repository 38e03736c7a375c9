//! Built-in code families, adjacency reconstruction from stabilizer tables,
//! the best-known-parameters regression fixture, and record persistence.

use crate::bits::{BinaryMatrix, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::noise::{DecoderProfile, DecodingRule};
use crate::pauli::PauliOperator;
use crate::search::{extract_stabilizer, group_clique, validate_clique};
use crate::statevec::MAX_STATE_QUBITS;
use crate::verify::{kl_verify_statevector, symplectic_verify, FirstFailure, VerificationReport};
use serde::{Deserialize, Serialize};

/// State-vector verification is skipped when the error sweep would exceed
/// this many Pauli errors (the sweep for a distance-d code on n noisy
/// qubits enumerates sum_{w<d} C(n,w)·3^w of them).
const MAX_KL_ENUMERATION: u128 = 1 << 19;

fn kl_enumeration_cost(noisy: usize, d: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    let mut pow3: u128 = 1;
    for w in 1..d.min(noisy + 1) {
        binom = binom * (noisy as u128 + 1 - w as u128) / w as u128;
        pow3 *= 3;
        total = total.saturating_add(binom.saturating_mul(pow3));
    }
    total
}

/// True when the state-vector oracle is cheap enough to run for this code.
pub fn statevector_check_feasible(vertex_count: usize, noisy: usize, d: usize) -> bool {
    vertex_count <= MAX_STATE_QUBITS && kl_enumeration_cost(noisy, d) <= MAX_KL_ENUMERATION
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub e: usize,
}

/// A constructed (or reloaded) code: graph, coding-group generators,
/// extracted stabilizer, parameters and the verification that admitted it.
#[derive(Clone, Debug)]
pub struct CodeRecord {
    pub name: String,
    pub graph: Graph,
    pub group_generators: Vec<VertexSet>,
    pub stabilizer: Vec<PauliOperator>,
    pub params: CodeParams,
    pub verification: VerificationReport,
    pub provenance: String,
}

impl CodeRecord {
    /// All codeword labels (the span of the group generators).
    pub fn members(&self) -> Vec<VertexSet> {
        crate::search::group_members(self.graph.vertex_count(), &self.group_generators)
    }

    /// Structural consistency: generator/stabilizer/pure counts match the
    /// declared parameters.
    pub fn check_consistent(&self) -> Result<()> {
        let m = self.graph.vertex_count();
        let CodeParams { n, k, d: _, e } = self.params;
        if n + e != m {
            return Err(Error::InvalidRecord(format!(
                "params n+e = {} but the graph has {m} vertices",
                n + e
            )));
        }
        if self.group_generators.len() != k {
            return Err(Error::InvalidRecord(format!(
                "{} group generators but k = {k}",
                self.group_generators.len()
            )));
        }
        if self.stabilizer.len() != m - k {
            return Err(Error::InvalidRecord(format!(
                "{} stabilizer generators but (n+e)-k = {}",
                self.stabilizer.len(),
                m - k
            )));
        }
        if self.graph.pure_set().len() != e {
            return Err(Error::InvalidRecord(format!(
                "{} pure vertices but e = {e}",
                self.graph.pure_set().len()
            )));
        }
        Ok(())
    }

    /// Re-runs the symplectic oracle (always) and the state-vector oracle
    /// (when the graph fits); returns the symplectic report after checking
    /// that both verdicts agree.
    pub fn reverify(&self) -> Result<VerificationReport> {
        self.check_consistent()?;
        let sp = symplectic_verify(&self.stabilizer, &self.graph.noisy_set(), self.params.d)?;
        if statevector_check_feasible(self.graph.vertex_count(), self.params.n, self.params.d) {
            let kl = kl_verify_statevector(&self.graph, &self.members(), self.params.d)?;
            if kl.passed != sp.passed {
                return Err(Error::InvalidRecord(format!(
                    "oracles disagree: symplectic {}, state-vector {}",
                    sp.summary(),
                    kl.summary()
                )));
            }
        }
        Ok(sp)
    }

    /// A noise profile backed by this record's stabilizer.
    pub fn decoder_profile(&self, rule: DecodingRule) -> DecoderProfile {
        DecoderProfile {
            name: self.name.clone(),
            stabilizer: self.stabilizer.clone(),
            pure_set: self.graph.pure_set(),
            k: self.params.k,
            d: self.params.d,
            rule,
        }
    }

    pub fn to_json_string(&self) -> String {
        let json = RecordJson {
            name: self.name.clone(),
            vertices: self.graph.vertex_count(),
            edges: self.graph.edges(),
            pure: self.graph.pure_set().vertices(),
            group_generators: self.group_generators.iter().map(|g| g.vertices()).collect(),
            stabilizer: self
                .stabilizer
                .iter()
                .map(|p| p.to_letter_string())
                .collect(),
            params: ParamsJson {
                n: self.params.n,
                k: self.params.k,
                d: self.params.d,
                e: self.params.e,
            },
            verified: self.verification.passed,
            verification: ReportJson::from_report(&self.verification),
            provenance: self.provenance.clone(),
        };
        serde_json::to_string_pretty(&json).expect("record serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: RecordJson = serde_json::from_str(s)?;
        let m = json.vertices;
        let graph = Graph::new(m, &json.edges, &json.pure)?;
        let mut group_generators = Vec::new();
        for (i, gen) in json.group_generators.iter().enumerate() {
            if gen.iter().any(|&v| v >= m) {
                return Err(Error::InvalidRecord(format!(
                    "group_generators[{i}] has a vertex outside 0..{m}"
                )));
            }
            group_generators.push(VertexSet::from_vertices(m, gen));
        }
        let mut stabilizer = Vec::new();
        for (i, s) in json.stabilizer.iter().enumerate() {
            let op = PauliOperator::from_letter_string(s)
                .map_err(|e| Error::InvalidRecord(format!("stabilizer[{i}]: {e}")))?;
            if op.universe() != m {
                return Err(Error::InvalidRecord(format!(
                    "stabilizer[{i}] is over {} qubits, expected {m}",
                    op.universe()
                )));
            }
            stabilizer.push(op);
        }
        let record = CodeRecord {
            name: json.name,
            graph,
            group_generators,
            stabilizer,
            params: CodeParams {
                n: json.params.n,
                k: json.params.k,
                d: json.params.d,
                e: json.params.e,
            },
            verification: json.verification.to_report(json.params.d, m)?,
            provenance: json.provenance,
        };
        record.check_consistent()?;
        Ok(record)
    }
}

#[derive(Serialize, Deserialize)]
struct RecordJson {
    name: String,
    vertices: usize,
    edges: Vec<(usize, usize)>,
    pure: Vec<usize>,
    group_generators: Vec<Vec<usize>>,
    stabilizer: Vec<String>,
    params: ParamsJson,
    verified: bool,
    verification: ReportJson,
    provenance: String,
}

#[derive(Serialize, Deserialize)]
struct ParamsJson {
    n: usize,
    k: usize,
    d: usize,
    e: usize,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    passed: bool,
    distance: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    first_failure: Option<FailureJson>,
    degenerate_errors: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct FailureJson {
    error: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    codewords: Option<(Vec<usize>, Vec<usize>)>,
}

impl ReportJson {
    fn from_report(r: &VerificationReport) -> Self {
        ReportJson {
            passed: r.passed,
            distance: r.distance_claimed,
            first_failure: r.first_failure.as_ref().map(|f| FailureJson {
                error: f.error.to_letter_string(),
                codewords: f.codewords.map(|(a, b)| (a.vertices(), b.vertices())),
            }),
            degenerate_errors: r
                .degenerate_errors
                .iter()
                .map(|e| e.to_letter_string())
                .collect(),
        }
    }

    fn to_report(&self, _d: usize, universe: usize) -> Result<VerificationReport> {
        let parse = |s: &str| -> Result<PauliOperator> {
            PauliOperator::from_letter_string(s)
                .map_err(|e| Error::InvalidRecord(format!("verification entry: {e}")))
        };
        let first_failure = match &self.first_failure {
            None => None,
            Some(f) => Some(FirstFailure {
                error: parse(&f.error)?,
                codewords: f.codewords.as_ref().map(|(a, b)| {
                    (
                        VertexSet::from_vertices(universe, a),
                        VertexSet::from_vertices(universe, b),
                    )
                }),
            }),
        };
        let mut degenerate_errors = Vec::new();
        for s in &self.degenerate_errors {
            degenerate_errors.push(parse(s)?);
        }
        Ok(VerificationReport {
            passed: self.passed,
            distance_claimed: self.distance,
            first_failure,
            degenerate_errors,
        })
    }
}

/// The star-graph family: the code on the star with a protected center.
///
/// The coding group is generated by the full leaf set and the stabilizer by
/// the center generator together with leaf-pair products; the record is
/// verified before it is returned (symplectic always, state vectors up to
/// the enumeration limit).
pub fn star_code(n: usize) -> Result<CodeRecord> {
    if n < 2 {
        return Err(Error::Construction(format!(
            "star family needs n >= 2, got {n}"
        )));
    }
    if n + 1 > crate::bits::MAX_UNIVERSE {
        return Err(Error::Construction(format!(
            "star family capped at n = 63, got {n}"
        )));
    }
    let m = n + 1;
    let graph = Graph::star(n)?.with_pure(&[0])?;
    let leaves: Vec<usize> = (1..=n).collect();
    let generators = vec![VertexSet::from_vertices(m, &leaves)];
    let clique = group_clique(m, &generators);
    let stabilizer = extract_stabilizer(&graph, &clique)?;
    let report = symplectic_verify(&stabilizer, &graph.noisy_set(), n)?;
    if !report.passed {
        return Err(Error::Construction(format!(
            "star code n={n} failed its own verification: {}",
            report.summary()
        )));
    }
    let statevector_checked = statevector_check_feasible(m, n, n);
    if statevector_checked {
        let kl = kl_verify_statevector(&graph, &clique.members, n)?;
        if !kl.passed {
            return Err(Error::Construction(format!(
                "star code n={n} failed the state-vector oracle: {}",
                kl.summary()
            )));
        }
    }
    Ok(CodeRecord {
        name: format!("star-{n}"),
        graph,
        group_generators: generators,
        stabilizer,
        params: CodeParams {
            n,
            k: 1,
            d: n,
            e: 1,
        },
        verification: report,
        provenance: format!(
            "star graph on {m} vertices with protected center; coding group generated by the \
             leaf set; verified symplectically{}",
            if statevector_checked {
                " and on state vectors"
            } else {
                ""
            }
        ),
    })
}

/// One row of a printed stabilizer table: the generator-product index set
/// and the resulting Pauli string.
#[derive(Clone, Debug)]
pub struct StabilizerRow {
    pub omega: VertexSet,
    pub operator: PauliOperator,
}

impl StabilizerRow {
    pub fn parse(universe: usize, omega: &[usize], letters: &str) -> Result<Self> {
        let operator = PauliOperator::from_letter_string(letters)
            .map_err(|e| Error::InvalidRecord(format!("stabilizer row: {e}")))?;
        if operator.universe() != universe {
            return Err(Error::InvalidRecord(format!(
                "stabilizer row is over {} qubits, expected {universe}",
                operator.universe()
            )));
        }
        let omega = VertexSet::from_vertices(universe, omega);
        if operator.x_support() != omega {
            return Err(Error::InconsistentRows(format!(
                "row {omega} must carry X exactly on its index set, string has X on {}",
                operator.x_support()
            )));
        }
        Ok(StabilizerRow { omega, operator })
    }
}

/// Recovers every adjacency consistent with a printed stabilizer table.
///
/// Each row pins `N_ω` to the Z-support of its string (Y counts as Z),
/// giving one GF(2) equation per vertex over the edge indicators. All
/// solutions are returned as graphs (symmetric, zero diagonal by
/// construction), in canonical order.
pub fn reconstruct_adjacency(rows: &[StabilizerRow]) -> Result<Vec<Graph>> {
    let m = rows.first().map(|r| r.omega.universe()).ok_or_else(|| {
        Error::SolutionSpaceTooLarge("no rows given: every graph is a solution".into())
    })?;
    if m > 16 {
        return Err(Error::SolutionSpaceTooLarge(format!(
            "{m} vertices means {} edge unknowns, above the 128-column solver",
            m * (m - 1) / 2
        )));
    }
    for row in rows {
        if row.omega.universe() != m {
            return Err(Error::InconsistentRows(
                "rows over different vertex counts".into(),
            ));
        }
    }
    let unknowns = m * (m - 1) / 2;
    let edge_index = |a: usize, b: usize| -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        // row-major upper triangle
        a * m - a * (a + 1) / 2 + (b - a - 1)
    };

    // eliminate [A | b] while tracking which input equations combined into
    // each reduced row, for conflict diagnostics
    struct EqRow {
        coeffs: u128,
        rhs: bool,
        sources: u128,
    }
    let mut reduced: Vec<EqRow> = Vec::new();
    for (ri, row) in rows.iter().enumerate() {
        let target = row.operator.z_support();
        for v in 0..m {
            let mut coeffs = 0u128;
            for a in row.omega.iter() {
                if a != v {
                    coeffs ^= 1 << edge_index(a, v);
                }
            }
            let mut eq = EqRow {
                coeffs,
                rhs: target.contains(v),
                sources: 1u128 << ri,
            };
            for b in &reduced {
                let p = b.coeffs.trailing_zeros();
                if b.coeffs != 0 && eq.coeffs >> p & 1 == 1 {
                    eq.coeffs ^= b.coeffs;
                    eq.rhs ^= b.rhs;
                    eq.sources |= b.sources;
                }
            }
            if eq.coeffs == 0 {
                if eq.rhs {
                    let involved: Vec<usize> = (0..rows.len())
                        .filter(|&i| eq.sources >> i & 1 == 1)
                        .collect();
                    return Err(Error::InconsistentRows(format!(
                        "rows {involved:?} conflict at vertex {v} (row {ri} cannot be satisfied)"
                    )));
                }
            } else {
                reduced.push(eq);
            }
        }
    }

    // full mutual reduction so each pivot appears in exactly one row, then
    // a particular solution with all free variables at zero
    for idx in 0..reduced.len() {
        let (coeffs, rhs) = (reduced[idx].coeffs, reduced[idx].rhs);
        let p = coeffs.trailing_zeros();
        for (j, other) in reduced.iter_mut().enumerate() {
            if j != idx && other.coeffs >> p & 1 == 1 {
                other.coeffs ^= coeffs;
                other.rhs ^= rhs;
            }
        }
    }
    let mut particular = 0u128;
    for r in &reduced {
        if r.rhs {
            particular |= 1 << r.coeffs.trailing_zeros();
        }
    }
    let matrix = BinaryMatrix::from_rows(unknowns, reduced.iter().map(|r| r.coeffs).collect());
    let basis = matrix.nullspace_basis();
    if basis.len() > 16 {
        return Err(Error::SolutionSpaceTooLarge(format!(
            "solution space has dimension {} (2^{} graphs)",
            basis.len(),
            basis.len()
        )));
    }

    let mut solutions = Vec::with_capacity(1 << basis.len());
    for mask in 0u32..1 << basis.len() {
        let mut edges_bits = particular;
        for (i, &b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                edges_bits ^= b;
            }
        }
        let mut adj = vec![0u64; m];
        for a in 0..m {
            for b in (a + 1)..m {
                if edges_bits >> edge_index(a, b) & 1 == 1 {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        solutions.push(Graph::from_adjacency_rows(adj, VertexSet::empty(m)));
    }
    solutions.sort_by_key(|g| g.edges());
    for g in &solutions {
        for row in rows {
            debug_assert_eq!(
                g.set_neighborhood(&row.omega),
                row.operator.z_support(),
                "solver must reproduce every input row"
            );
        }
    }
    Ok(solutions)
}

/// The printed five-row stabilizer table of the 10-qubit code, and the two
/// published readings of its coding-group generators (they disagree on
/// whether vertex 7 belongs to the first generator).
pub const TEN_QUBIT_TABLE: [(&[usize], &str); 5] = [
    (&[0], "XZZZIIZZZZ"),
    (&[1, 5, 8], "IXIIZXIZXZ"),
    (&[2, 4, 8, 9], "ZIXIXZZZYY"),
    (&[3, 6, 9], "ZIZXZZXZIX"),
    (&[1, 2, 6, 7], "IXXZIZYYII"),
];

const GROUP_WITH_SEVEN: [&[usize]; 5] =
    [&[1, 5, 7], &[2, 4, 7], &[3, 4, 9], &[3, 6, 7], &[4, 5, 8]];
const GROUP_WITHOUT_SEVEN: [&[usize]; 5] =
    [&[1, 5], &[2, 4, 7], &[3, 4, 9], &[3, 6, 7], &[4, 5, 8]];

pub fn ten_qubit_table_rows() -> Vec<StabilizerRow> {
    TEN_QUBIT_TABLE
        .iter()
        .map(|(omega, letters)| {
            StabilizerRow::parse(10, omega, letters).expect("built-in table is well-formed")
        })
        .collect()
}

/// Reconstructs the 10-vertex graph from its printed stabilizer table and
/// returns the verified [[9,5,3;1]] record.
///
/// Both readings of the coding-group generators are tried; the one whose
/// code passes distance-3 verification on both oracles and whose extracted
/// stabilizer spans the printed rows is recorded, with the choice noted in
/// the provenance.
pub fn coffeepot_code() -> Result<CodeRecord> {
    let rows = ten_qubit_table_rows();
    let mut candidates = reconstruct_adjacency(&rows)?;
    // the table pins the stabilizer but not every edge; prefer the sparsest
    // consistent graph (it is unique) as the canonical representative
    candidates.sort_by_key(|g| (g.edges().len(), g.edges()));
    let mut graphs_tried = 0usize;
    for graph in &candidates {
        let graph = graph.clone().with_pure(&[0])?;
        graphs_tried += 1;
        for (variant_name, variant) in [
            ("first generator includes vertex 7", &GROUP_WITH_SEVEN),
            ("first generator excludes vertex 7", &GROUP_WITHOUT_SEVEN),
        ] {
            let generators: Vec<VertexSet> = variant
                .iter()
                .map(|g| VertexSet::from_vertices(10, g))
                .collect();
            let clique = group_clique(10, &generators);
            if !validate_clique(&graph, 3, &clique) {
                continue;
            }
            let stabilizer = extract_stabilizer(&graph, &clique)?;
            let sp = symplectic_verify(&stabilizer, &graph.noisy_set(), 3)?;
            if !sp.passed {
                continue;
            }
            let kl = kl_verify_statevector(&graph, &clique.members, 3)?;
            if !kl.passed {
                continue;
            }
            // the printed rows must lie in the extracted stabilizer span
            let span = crate::bits::Gf2Span::from_vectors(
                &stabilizer
                    .iter()
                    .map(|p| p.symplectic_vector())
                    .collect::<Vec<_>>(),
            );
            if !rows
                .iter()
                .all(|r| span.contains(r.operator.symplectic_vector()))
            {
                continue;
            }
            return Ok(CodeRecord {
                name: "coffeepot".into(),
                graph,
                group_generators: generators,
                stabilizer,
                params: CodeParams {
                    n: 9,
                    k: 5,
                    d: 3,
                    e: 1,
                },
                verification: sp,
                provenance: format!(
                    "adjacency reconstructed from the printed stabilizer table ({} consistent \
                     solution(s), all sharing this stabilizer; sparsest chosen); coding-group \
                     reading: {variant_name}; verified on both oracles at distance 3",
                    candidates.len()
                ),
            });
        }
    }
    Err(Error::Construction(format!(
        "no reconstructed adjacency ({graphs_tried} tried) admits a verified distance-3 code \
         under either reading of the coding-group generators (vertex 7 in or out of the first \
         generator)"
    )))
}

/// One cell of the best-known-parameters table (block size n+e versus
/// logical count k, entries are distances; starred entries improved on
/// prior constructions).
#[derive(Clone, Debug)]
pub struct Table1Cell {
    pub block: usize,
    pub k: usize,
    pub d: usize,
    pub starred: bool,
    /// How this crate reproduces the entry, if it does.
    pub reproduced: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Table1Report {
    pub cells: Vec<Table1Cell>,
}

impl Table1Report {
    pub fn lines(&self) -> Vec<String> {
        self.cells
            .iter()
            .map(|c| {
                let star = if c.starred { "*" } else { "" };
                match &c.reproduced {
                    Some(how) => format!(
                        "(n+e)={} k={}: d={}{} reproduced ({how})",
                        c.block, c.k, c.d, star
                    ),
                    None => format!(
                        "(n+e)={} k={}: d={}{} not reproduced (no construction in scope)",
                        c.block, c.k, c.d, star
                    ),
                }
            })
            .collect()
    }
}

/// Distances by (block size, k), e = 1 throughout.
const TABLE1: [(usize, &[usize]); 8] = [
    (3, &[2, 1, 1]),
    (4, &[3, 2, 1, 1]),
    (5, &[4, 2, 2, 1, 1]),
    (6, &[5, 3, 2, 2, 1, 1]),
    (7, &[6, 3, 2, 2, 2, 1, 1]),
    (8, &[7, 3, 3, 2, 2, 2, 1, 1]),
    (9, &[8, 3, 3, 3, 2, 2, 2, 1, 1]),
    (10, &[9, 4, 3, 3, 3, 2, 2, 2, 1, 1]),
];

const TABLE1_STARS: [(usize, usize); 11] = [
    (4, 1),
    (5, 1),
    (6, 1),
    (6, 2),
    (7, 1),
    (7, 2),
    (8, 1),
    (9, 1),
    (9, 4),
    (10, 1),
    (10, 5),
];

/// Rebuilds what the crate can reproduce of the best-known table: the k=1
/// column from the star family and the (10, k=5) entry from the
/// reconstructed 10-vertex code. Remaining cells are reported unreproduced.
pub fn table1_regression() -> Result<Table1Report> {
    let mut cells = Vec::new();
    for (block, dists) in TABLE1 {
        for (idx, &d) in dists.iter().enumerate() {
            let k = idx + 1;
            let starred = TABLE1_STARS.contains(&(block, k));
            let reproduced = if k == 1 {
                let record = star_code(block - 1)?;
                if record.params.d == d && record.verification.passed {
                    Some(format!("star family, n={}", block - 1))
                } else {
                    None
                }
            } else if (block, k) == (10, 5) {
                let record = coffeepot_code()?;
                if record.params.d == d && record.verification.passed {
                    Some("reconstructed 10-vertex code".to_string())
                } else {
                    None
                }
            } else {
                None
            };
            cells.push(Table1Cell {
                block,
                k,
                d,
                starred,
                reproduced,
            });
        }
    }
    Ok(Table1Report { cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::degenerate_pairs;

    fn set(universe: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(universe, vs)
    }

    #[test]
    fn star_code_three_matches_printed_stabilizer() {
        let record = star_code(3).unwrap();
        let strings: Vec<String> = record
            .stabilizer
            .iter()
            .map(|p| p.to_letter_string())
            .collect();
        assert_eq!(strings, vec!["+XZZZ", "+IXXI", "+IXIX"]);
        assert_eq!(
            record.params,
            CodeParams {
                n: 3,
                k: 1,
                d: 3,
                e: 1
            }
        );
        assert!(record.verification.passed);
    }

    #[test]
    fn star_code_rejects_tiny() {
        assert!(star_code(1).is_err());
    }

    #[test]
    fn star_code_four_and_nine_parameters() {
        let r4 = star_code(4).unwrap();
        assert_eq!(
            r4.params,
            CodeParams {
                n: 4,
                k: 1,
                d: 4,
                e: 1
            }
        );
        let r9 = star_code(9).unwrap();
        assert_eq!(
            r9.params,
            CodeParams {
                n: 9,
                k: 1,
                d: 9,
                e: 1
            }
        );
    }

    #[test]
    fn record_json_round_trip_reverifies_identically() {
        let record = star_code(3).unwrap();
        let json = record.to_json_string();
        let loaded = CodeRecord::from_json_str(&json).unwrap();
        assert_eq!(loaded.name, record.name);
        assert_eq!(loaded.graph, record.graph);
        assert_eq!(loaded.group_generators, record.group_generators);
        assert_eq!(loaded.stabilizer, record.stabilizer);
        let a = record.reverify().unwrap();
        let b = loaded.reverify().unwrap();
        assert_eq!(a.passed, b.passed);
        assert_eq!(a.degenerate_errors, b.degenerate_errors);
    }

    #[test]
    fn reconstruct_single_row_pins_one_neighborhood() {
        let row = StabilizerRow::parse(4, &[0], "XZZI").unwrap();
        let graphs = reconstruct_adjacency(&[row]).unwrap();
        // N_0 = {1,2} pinned; the other three edges are free: 8 solutions
        assert_eq!(graphs.len(), 8);
        for g in &graphs {
            assert_eq!(g.neighborhood(0), set(4, &[1, 2]));
        }
    }

    #[test]
    fn reconstruct_rejects_inconsistent_rows() {
        // two rows pinning different neighborhoods for the same vertex
        let rows = vec![
            StabilizerRow::parse(3, &[0], "XZI").unwrap(),
            StabilizerRow::parse(3, &[0], "XIZ").unwrap(),
        ];
        let err = reconstruct_adjacency(&rows).unwrap_err();
        assert!(matches!(err, Error::InconsistentRows(_)), "{err}");
    }

    #[test]
    fn reconstruct_no_rows_is_a_size_warning() {
        assert!(matches!(
            reconstruct_adjacency(&[]),
            Err(Error::SolutionSpaceTooLarge(_))
        ));
    }

    #[test]
    fn row_parse_checks_x_support() {
        assert!(StabilizerRow::parse(4, &[0], "IXZZ").is_err());
        assert!(StabilizerRow::parse(4, &[0, 1], "XYZI").is_ok());
    }

    #[test]
    fn coffeepot_record_is_verified() {
        let record = coffeepot_code().unwrap();
        assert_eq!(
            record.params,
            CodeParams {
                n: 9,
                k: 5,
                d: 3,
                e: 1
            }
        );
        assert!(record.verification.passed);
        assert_eq!(record.graph.pure_set(), set(10, &[0]));
        // published generator reading with vertex 7 is the consistent one
        assert_eq!(record.group_generators[0], set(10, &[1, 5, 7]));
        assert!(record.provenance.contains("includes vertex 7"));
    }

    #[test]
    fn coffeepot_reproduces_table_rows() {
        let record = coffeepot_code().unwrap();
        for row in ten_qubit_table_rows() {
            let rebuilt = record.graph.stabilizer(&row.omega);
            assert!(
                rebuilt.equals_up_to_phase(&row.operator),
                "row {} rebuilt as {rebuilt}",
                row.operator
            );
        }
    }

    #[test]
    fn coffeepot_decoder_table_is_injective_on_noisy_singles() {
        // 27 single-qubit errors on the noisy qubits, 27 distinct syndromes,
        // plus the trivial entry
        let record = coffeepot_code().unwrap();
        let table =
            crate::noise::decoder_table(&record.stabilizer, &record.graph.noisy_set(), 1).unwrap();
        assert_eq!(table.len(), 28);
    }

    #[test]
    fn coffeepot_degenerate_pairs() {
        let record = coffeepot_code().unwrap();
        let groups = degenerate_pairs(&record.stabilizer, &VertexSet::full(10));
        let expected: Vec<Vec<PauliOperator>> = vec![
            vec![PauliOperator::x_on(10, 0), PauliOperator::z_on(10, 9)],
            vec![PauliOperator::y_on(10, 0), PauliOperator::y_on(10, 6)],
            vec![PauliOperator::z_on(10, 0), PauliOperator::x_on(10, 1)],
        ];
        assert_eq!(groups, expected);
    }

    #[test]
    fn table1_cells() {
        let report = table1_regression().unwrap();
        let cell = |block: usize, k: usize| {
            report
                .cells
                .iter()
                .find(|c| c.block == block && c.k == k)
                .expect("cell exists")
        };
        let c41 = cell(4, 1);
        assert_eq!((c41.d, c41.starred), (3, true));
        assert!(c41.reproduced.is_some());
        let c33 = cell(3, 3);
        assert_eq!((c33.d, c33.starred), (1, false));
        assert!(c33.reproduced.is_none());
        let c105 = cell(10, 5);
        assert_eq!((c105.d, c105.starred), (3, true));
        assert!(c105.reproduced.is_some());
        // k=1 column is fully reproduced with d = block - 1
        for block in 3..=10 {
            let c = cell(block, 1);
            assert_eq!(c.d, block - 1);
            assert!(c.reproduced.is_some());
        }
    }
}
