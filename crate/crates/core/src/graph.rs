//! Graph associahedra: tubes of a connected simple graph, the tubing
//! complex, the canonical mod-2 map λ_G, signed a-numbers, and the
//! verification that the predicted sphere-wedge summands match the computed
//! homology of the associated quotient space.

use crate::chain::BettiTable;
use crate::decomposition::{rhs_betti, subcomplex_summands, Verdict};
use crate::field::FieldSpec;
use crate::lambda::LambdaMap;
use crate::rzk::quotient_betti;
use crate::simplicial::{SimplicialComplex, MAX_COMPLEX_VERTICES};
use crate::subset::VertexSet;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Memoization over the node-subset lattice caps the node count.
pub const MAX_GRAPH_NODES: u32 = 16;

/// A connected simple graph on labels 1..=nodes with one distinguished node
/// (the label that the map λ_G treats as the dependent coordinate).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    nodes: u32,
    adj: Vec<u32>,
    distinguished: u32,
}

impl SimpleGraph {
    pub fn new(nodes: u32, edges: &[(u32, u32)], distinguished: Option<u32>) -> Result<Self> {
        if nodes < 2 {
            return Err(Error::input("a graph needs at least two nodes"));
        }
        if nodes > MAX_GRAPH_NODES {
            return Err(Error::capacity(format!(
                "{nodes} nodes exceeds the subset-lattice bound {MAX_GRAPH_NODES}"
            )));
        }
        let mut adj = vec![0u32; nodes as usize];
        for &(a, b) in edges {
            if a < 1 || a > nodes || b < 1 || b > nodes {
                return Err(Error::input(format!(
                    "edge ({a},{b}) leaves the node range 1..={nodes}"
                )));
            }
            if a == b {
                return Err(Error::input(format!("loop at node {a}")));
            }
            adj[(a - 1) as usize] |= 1 << (b - 1);
            adj[(b - 1) as usize] |= 1 << (a - 1);
        }
        let distinguished = distinguished.unwrap_or(nodes);
        if distinguished < 1 || distinguished > nodes {
            return Err(Error::input(format!(
                "distinguished node {distinguished} is not a node"
            )));
        }
        let g = SimpleGraph {
            nodes,
            adj,
            distinguished,
        };
        if !g.is_connected_subset(VertexSet::full(nodes)) {
            return Err(Error::input("graph is not connected"));
        }
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let input: GraphInput = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("malformed graph JSON: {e}")))?;
        input.build()
    }

    pub fn node_count(&self) -> u32 {
        self.nodes
    }

    pub fn distinguished(&self) -> u32 {
        self.distinguished
    }

    /// Non-distinguished nodes in ascending order; row j of λ_G belongs to
    /// the j-th entry.
    pub fn row_nodes(&self) -> Vec<u32> {
        (1..=self.nodes)
            .filter(|v| *v != self.distinguished)
            .collect()
    }

    /// Neighbours of the subset s inside the node universe.
    fn neighbourhood(&self, s: VertexSet) -> u32 {
        s.vertices()
            .map(|v| self.adj[(v - 1) as usize])
            .fold(0, |acc, a| acc | a)
    }

    pub fn is_connected_subset(&self, s: VertexSet) -> bool {
        if s.is_empty() {
            return true;
        }
        let inside = s.mask();
        let start = 1 << (s.vertices().next().unwrap() - 1);
        let mut seen = start;
        loop {
            let grown =
                (seen | self.neighbourhood(VertexSet::from_mask(seen)) & inside) & inside;
            if grown == seen {
                break;
            }
            seen = grown;
        }
        seen == inside
    }

    /// Node sets of the connected components of the induced subgraph on s.
    pub fn components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut remaining = s.mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let mut comp = remaining & remaining.wrapping_neg();
            loop {
                let grown = (comp
                    | self.neighbourhood(VertexSet::from_mask(comp)) & remaining)
                    & remaining;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(VertexSet::from_mask(comp));
            remaining &= !comp;
        }
        out
    }

    /// All tubes: proper nonempty node subsets with connected induced
    /// subgraph, in ascending bitmask order.
    pub fn tubes(&self) -> Vec<VertexSet> {
        let full = VertexSet::full(self.nodes).mask();
        (1..full)
            .map(VertexSet::from_mask)
            .filter(|s| self.is_connected_subset(*s))
            .collect()
    }

    /// Two distinct tubes are compatible when nested, or disjoint with no
    /// edge of the graph joining them.
    pub fn compatible(&self, a: VertexSet, b: VertexSet) -> bool {
        if a.is_subset_of(b) || b.is_subset_of(a) {
            return true;
        }
        if !a.intersect(b).is_empty() {
            return false;
        }
        self.neighbourhood(a) & b.mask() == 0
    }

    /// The tubing complex: one vertex per tube (in `tubes` order), faces the
    /// pairwise-compatible tube sets. Returns the complex and the tube list
    /// that labels its vertices.
    pub fn build_tubing_complex(&self) -> Result<(SimplicialComplex, Vec<VertexSet>)> {
        let tubes = self.tubes();
        let count = tubes.len() as u32;
        if count > MAX_COMPLEX_VERTICES {
            return Err(Error::capacity(format!(
                "{count} tubes exceeds the complex bound {MAX_COMPLEX_VERTICES}"
            )));
        }
        let mut compat = vec![0u32; tubes.len()];
        for (i, a) in tubes.iter().enumerate() {
            for (j, b) in tubes.iter().enumerate() {
                if i != j && self.compatible(*a, *b) {
                    compat[i] |= 1 << j;
                }
            }
        }
        // flag complex: a set is a face iff its top tube is compatible with
        // the rest and the rest is a face
        let size = 1usize << count;
        let mut member = vec![false; size];
        member[0] = true;
        for s in 1..size {
            let h = u32::BITS - 1 - (s as u32).leading_zeros();
            let rest = s & !(1 << h);
            member[s] = member[rest] && (rest as u32) & !compat[h as usize] == 0;
        }
        Ok((SimplicialComplex::from_member_table(count, member), tubes))
    }

    /// The canonical map λ_G: one column per tube T, equal to the indicator
    /// of T when the distinguished node is outside T and the indicator of
    /// the complement of T otherwise, over the non-distinguished nodes.
    pub fn lambda_g(&self) -> Result<LambdaMap> {
        let tubes = self.tubes();
        let row_nodes = self.row_nodes();
        let mut rows = vec![0u32; row_nodes.len()];
        for (col, t) in tubes.iter().enumerate() {
            let support = if t.contains(self.distinguished) {
                VertexSet::full(self.nodes).minus(*t)
            } else {
                *t
            };
            for (j, node) in row_nodes.iter().enumerate() {
                if support.contains(*node) {
                    rows[j] |= 1 << col;
                }
            }
        }
        LambdaMap::new(row_nodes.len() as u32, tubes.len() as u32, rows)
    }

    /// φ: parity completion. A set s of non-distinguished nodes maps to s
    /// itself when |s| is even and to s ∪ {distinguished} otherwise, so the
    /// image always has an even number of nodes.
    pub fn phi_map(&self, s: VertexSet) -> Result<VertexSet> {
        if s.contains(self.distinguished) {
            return Err(Error::input(format!(
                "φ takes subsets of the non-distinguished nodes; {} appears",
                self.distinguished
            )));
        }
        if !s.is_subset_of(VertexSet::full(self.nodes)) {
            return Err(Error::input("node subset leaves the universe"));
        }
        Ok(if s.len() % 2 == 0 {
            s
        } else {
            s.insert(self.distinguished)
        })
    }
}

/// Signed a-numbers, memoized over the node-subset lattice:
/// sa(∅) = 1; sa = 0 when some component is odd; otherwise
/// −Σ over proper subsets.
pub struct ANumberTable<'g> {
    graph: &'g SimpleGraph,
    memo: Vec<Option<i64>>,
}

impl<'g> ANumberTable<'g> {
    pub fn new(graph: &'g SimpleGraph) -> Self {
        ANumberTable {
            graph,
            memo: vec![None; 1 << graph.nodes],
        }
    }

    pub fn sa(&mut self, t: VertexSet) -> i64 {
        if let Some(v) = self.memo[t.mask() as usize] {
            return v;
        }
        let value = if t.is_empty() {
            1
        } else if self
            .graph
            .components(t)
            .iter()
            .any(|c| c.len() % 2 == 1)
        {
            0
        } else {
            let mut sum = 0i64;
            for s in t.subsets() {
                if s != t {
                    sum += self.sa(s);
                }
            }
            -sum
        };
        self.memo[t.mask() as usize] = Some(value);
        value
    }

    /// a(T) = |sa(T)|.
    pub fn a(&mut self, t: VertexSet) -> u64 {
        self.sa(t).unsigned_abs()
    }
}

pub fn sa(g: &SimpleGraph, t: VertexSet) -> i64 {
    ANumberTable::new(g).sa(t)
}

/// a_i = Σ_{|T| = 2i} a(G|_T) for 0 ≤ i ≤ (n+1)/2.
pub fn a_numbers(g: &SimpleGraph) -> Vec<u64> {
    let mut table = ANumberTable::new(g);
    let mut out = vec![0u64; (g.nodes / 2 + 1) as usize];
    for t in VertexSet::full(g.nodes).subsets() {
        if t.len() % 2 == 0 {
            out[(t.len() / 2) as usize] += table.a(t);
        }
    }
    out
}

/// One Row(λ_G) element checked against its predicted wedge summand.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SummandCheck {
    /// The Row element: a set of tube indices.
    pub row_element: VertexSet,
    /// The even node set φ(S) for the row combination S giving this element.
    pub node_set: VertexSet,
    /// Predicted count a(φ(S)) of spheres, all in one degree.
    pub expected_count: u64,
    /// Predicted concentration degree |φ(S)|/2 − 1.
    pub expected_degree: i32,
    /// Computed reduced Betti table of the full subcomplex K_I.
    pub actual: BettiTable,
    pub ok: bool,
}

/// Full verification of the graph statement over one field.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphReport {
    pub field: FieldSpec,
    pub nodes: u32,
    pub tube_count: usize,
    pub characteristic_map: bool,
    pub a_numbers: Vec<u64>,
    /// Betti numbers of the quotient space.
    pub betti: BettiTable,
    /// The Row(λ_G) subcomplex sum.
    pub rhs: BettiTable,
    pub summands: Vec<SummandCheck>,
    pub betti_equal_a: bool,
    pub betti_equal_rhs: bool,
    pub summands_ok: bool,
    pub verdict: Verdict,
}

impl GraphReport {
    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    /// Multiset of predicted sphere summands, aggregated per degree: the
    /// shape of the wedge decomposition, comparable across graphs.
    pub fn summand_multiset(&self) -> BTreeMap<i32, u64> {
        let mut out = BTreeMap::new();
        for s in &self.summands {
            if s.expected_count > 0 {
                *out.entry(s.expected_degree).or_insert(0) += s.expected_count;
            }
        }
        out
    }
}

impl std::fmt::Display for GraphReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{} nodes, {} tubes, field {}, characteristic map: {}",
            self.nodes,
            self.tube_count,
            self.field,
            if self.characteristic_map { "yes" } else { "no" }
        )?;
        writeln!(f, "  a-numbers:      {:?}", self.a_numbers)?;
        writeln!(f, "  quotient Betti: {}", self.betti)?;
        writeln!(f, "  subcomplex sum: {}", self.rhs)?;
        for s in &self.summands {
            writeln!(
                f,
                "  I = {:<14} φ = {:<10} expect {} in degree {:>2}: {} [{}]",
                s.row_element.to_string(),
                s.node_set.to_string(),
                s.expected_count,
                s.expected_degree,
                s.actual,
                if s.ok { "ok" } else { "MISMATCH" }
            )?;
        }
        write!(f, "  verdict: {}", self.verdict)
    }
}

/// Checks, over a field of odd or zero characteristic:
///  (a) every Row element's full subcomplex has reduced homology of rank
///      a(φ(S)) concentrated in degree |φ(S)|/2 − 1,
///  (b) the quotient Betti numbers equal the a-numbers,
///  (c) the quotient equals the Row-indexed subcomplex sum.
pub fn verify_graph_corollary(
    g: &SimpleGraph,
    spec: FieldSpec,
    max_cells: usize,
) -> Result<GraphReport> {
    if spec.characteristic() == 2 {
        return Err(Error::input(
            "the graph statement is stated away from characteristic 2; use an odd prime or q",
        ));
    }
    let (complex, tubes) = g.build_tubing_complex()?;
    let lambda = g.lambda_g()?;
    let row_nodes = g.row_nodes();
    // the bijection S ↦ Σ_{s∈S} row_s from node subsets to Row(λ_G)
    let mut by_row_element: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    for s_rows in VertexSet::full(row_nodes.len() as u32).subsets() {
        let mut element = 0u32;
        let mut node_set = VertexSet::EMPTY;
        for (j, node) in row_nodes.iter().enumerate() {
            if s_rows.contains(j as u32 + 1) {
                element ^= lambda.rows()[j];
                node_set = node_set.insert(*node);
            }
        }
        by_row_element.insert(VertexSet::from_mask(element), node_set);
    }
    if by_row_element.len() != 1 << row_nodes.len() {
        return Err(Error::ComplexIntegrity(
            "rows of λ_G are linearly dependent".into(),
        ));
    }
    let row_space = lambda.row_space()?;
    if row_space.elements().len() != by_row_element.len() {
        return Err(Error::ComplexIntegrity(
            "row space does not match the row-combination image".into(),
        ));
    }
    let mut a_table = ANumberTable::new(g);
    let index_sets: Vec<VertexSet> = by_row_element.keys().copied().collect();
    let reduced = subcomplex_summands(&complex, &index_sets, spec)?;
    let mut summands = Vec::new();
    let mut summands_ok = true;
    for (i, actual) in reduced {
        let node_set = g.phi_map(by_row_element[&i])?;
        let expected_count = a_table.a(node_set);
        let expected_degree = node_set.len() as i32 / 2 - 1;
        let expected = if expected_count == 0 {
            BettiTable::zero()
        } else {
            BettiTable::from_pairs(&[(expected_degree, expected_count as usize)])
        };
        let ok = actual == expected;
        summands_ok &= ok;
        summands.push(SummandCheck {
            row_element: i,
            node_set,
            expected_count,
            expected_degree,
            actual,
            ok,
        });
    }
    let a = a_numbers(g);
    let mut a_as_betti = BettiTable::zero();
    a_as_betti.add(0, 0);
    for (i, v) in a.iter().enumerate() {
        a_as_betti.add(i as i32, *v as usize);
    }
    let betti = quotient_betti(&complex, &lambda, spec, max_cells)?;
    let rhs = rhs_betti(&complex, &lambda, spec)?;
    let betti_equal_a = betti == a_as_betti;
    let betti_equal_rhs = betti == rhs;
    let verdict = if summands_ok && betti_equal_a && betti_equal_rhs {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(GraphReport {
        field: spec,
        nodes: g.nodes,
        tube_count: tubes.len(),
        characteristic_map: lambda.is_characteristic(&complex),
        a_numbers: a,
        betti,
        rhs,
        summands,
        betti_equal_a,
        betti_equal_rhs,
        summands_ok,
        verdict,
    })
}

/// Side-by-side verification of two graphs plus the equivalence checks:
/// equal a-number tables and equal summand multisets.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CompareReport {
    pub first: GraphReport,
    pub second: GraphReport,
    pub a_numbers_equal: bool,
    pub summand_multisets_equal: bool,
    pub equivalent: bool,
}

impl CompareReport {
    pub fn exit_code(&self) -> i32 {
        if self.equivalent {
            0
        } else {
            1
        }
    }
}

pub fn compare_graphs(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    spec: FieldSpec,
    max_cells: usize,
) -> Result<CompareReport> {
    let first = verify_graph_corollary(g1, spec, max_cells)?;
    let second = verify_graph_corollary(g2, spec, max_cells)?;
    let a_numbers_equal = first.a_numbers == second.a_numbers;
    let summand_multisets_equal = first.summand_multiset() == second.summand_multiset();
    let equivalent = a_numbers_equal
        && summand_multisets_equal
        && first.verdict == Verdict::Pass
        && second.verdict == Verdict::Pass;
    Ok(CompareReport {
        first,
        second,
        a_numbers_equal,
        summand_multisets_equal,
        equivalent,
    })
}

/// JSON shape: {"nodes": int, "edges": [[a,b],...], "distinguished": int?}.
#[derive(Serialize, Deserialize)]
pub struct GraphInput {
    pub nodes: u32,
    pub edges: Vec<(u32, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinguished: Option<u32>,
}

impl GraphInput {
    pub fn build(&self) -> Result<SimpleGraph> {
        SimpleGraph::new(self.nodes, &self.edges, self.distinguished)
    }
}

/// Path graph 1-2-...-n.
pub fn path_graph(n: u32) -> Result<SimpleGraph> {
    let edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
    SimpleGraph::new(n, &edges, None)
}

/// Star with the given center and n−1 leaves.
pub fn star_graph(n: u32, center: u32) -> Result<SimpleGraph> {
    let edges: Vec<(u32, u32)> = (1..=n).filter(|v| *v != center).map(|v| (center, v)).collect();
    SimpleGraph::new(n, &edges, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rzk::DEFAULT_MAX_CELLS;

    fn vs(v: &[u32], m: u32) -> VertexSet {
        VertexSet::from_vertices(v, m).unwrap()
    }

    fn p4() -> SimpleGraph {
        path_graph(4).unwrap()
    }

    fn claw() -> SimpleGraph {
        star_graph(4, 4).unwrap()
    }

    #[test]
    fn tube_enumeration() {
        let tubes = p4().tubes();
        let expect: Vec<VertexSet> = [
            vec![1],
            vec![2],
            vec![1, 2],
            vec![3],
            vec![2, 3],
            vec![1, 2, 3],
            vec![4],
            vec![3, 4],
            vec![2, 3, 4],
        ]
        .iter()
        .map(|v| vs(v, 4))
        .collect();
        assert_eq!(tubes, expect);
        assert_eq!(claw().tubes().len(), 10);
        let k2 = path_graph(2).unwrap();
        assert_eq!(k2.tubes().len(), 2);
    }

    #[test]
    fn input_validation() {
        assert!(SimpleGraph::new(1, &[], None).is_err());
        assert!(SimpleGraph::new(3, &[(1, 2)], None).is_err()); // disconnected
        assert!(SimpleGraph::new(2, &[(1, 1)], None).is_err()); // loop
        assert!(SimpleGraph::new(2, &[(1, 3)], None).is_err()); // out of range
        assert!(SimpleGraph::new(2, &[(1, 2)], Some(5)).is_err());
        let g = SimpleGraph::from_json(r#"{"nodes":2,"edges":[[1,2]]}"#).unwrap();
        assert_eq!(g.distinguished(), 2);
    }

    #[test]
    fn tubing_complex_shapes() {
        let (k4, _) = p4().build_tubing_complex().unwrap();
        assert_eq!(k4.f_vector(), vec![1, 9, 21, 14]);
        assert!(k4.facets().iter().all(|f| f.len() == 3));
        let (k3, _) = path_graph(3).unwrap().build_tubing_complex().unwrap();
        assert_eq!(k3.f_vector(), vec![1, 5, 5]); // pentagon boundary
        let (kc, _) = claw().build_tubing_complex().unwrap();
        assert_eq!(kc.f_vector(), vec![1, 10, 24, 16]);
        let (k2, _) = path_graph(2).unwrap().build_tubing_complex().unwrap();
        assert_eq!(k2.f_vector(), vec![1, 2]); // two incompatible singletons
    }

    #[test]
    fn lambda_g_columns() {
        let l = p4().lambda_g().unwrap();
        assert_eq!(l.n(), 3);
        assert_eq!(l.m(), 9);
        let cols: Vec<u32> = (1..=9).map(|i| l.column(i)).collect();
        // frozen hand computation: {1}→e1, {2}→e2, {12}→e1+e2, {3}→e3,
        // {23}→e2+e3, {123}→e1+e2+e3, {4}→complement e1+e2+e3,
        // {34}→complement e1+e2, {234}→complement e1
        assert_eq!(cols, vec![1, 2, 3, 4, 6, 7, 7, 3, 1]);
        assert_eq!(l.rank(), 3);
        assert_eq!(l.kernel_elements().unwrap().len(), 64);
        let lc = claw().lambda_g().unwrap();
        assert_eq!(lc.kernel_elements().unwrap().len(), 128);
    }

    #[test]
    fn lambda_g_is_characteristic() {
        for g in [p4(), claw(), path_graph(3).unwrap(), path_graph(2).unwrap()] {
            let (k, _) = g.build_tubing_complex().unwrap();
            let l = g.lambda_g().unwrap();
            assert!(l.is_characteristic(&k));
            assert!(l.free_action_violations(&k).unwrap().is_empty());
            assert_eq!(l.row_space().unwrap().elements().len(), 1 << l.n());
        }
    }

    #[test]
    fn signed_a_numbers() {
        let k2 = path_graph(2).unwrap();
        assert_eq!(sa(&k2, VertexSet::full(2)), -1);
        assert_eq!(sa(&k2, VertexSet::EMPTY), 1);
        assert_eq!(sa(&k2, VertexSet::singleton(1)), 0);
        assert_eq!(sa(&p4(), VertexSet::full(4)), 2);
        assert_eq!(sa(&claw(), VertexSet::full(4)), 2);
        assert_eq!(a_numbers(&p4()), vec![1, 3, 2]);
        assert_eq!(a_numbers(&claw()), vec![1, 3, 2]);
        assert_eq!(a_numbers(&k2), vec![1, 1]);
        assert_eq!(a_numbers(&path_graph(3).unwrap()), vec![1, 2]);
    }

    #[test]
    fn phi_parity_completion() {
        let g = p4();
        assert_eq!(g.phi_map(VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
        assert_eq!(g.phi_map(vs(&[1], 4)).unwrap(), vs(&[1, 4], 4));
        assert_eq!(g.phi_map(vs(&[1, 2], 4)).unwrap(), vs(&[1, 2], 4));
        assert!(g.phi_map(vs(&[4], 4)).is_err());
        // bijection onto even subsets: 2^3 = 8 distinct even-size images
        let mut images: Vec<VertexSet> = VertexSet::full(3)
            .subsets()
            .map(|s| g.phi_map(s).unwrap())
            .collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 8);
        assert!(images.iter().all(|t| t.len() % 2 == 0));
    }

    #[test]
    fn corollary_for_small_graphs() {
        let k2 = path_graph(2).unwrap();
        let r = verify_graph_corollary(&k2, FieldSpec::Prime(3), DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert_eq!(r.betti.nonzero_pairs(), vec![(0, 1), (1, 1)]);
        let p3 = path_graph(3).unwrap();
        let r3 = verify_graph_corollary(&p3, FieldSpec::Rational, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(r3.verdict, Verdict::Pass, "{r3}");
        assert_eq!(r3.betti.nonzero_pairs(), vec![(0, 1), (1, 2)]);
        assert_eq!(r3.summands.len(), 4);
        // characteristic 2 is outside the statement
        assert!(matches!(
            verify_graph_corollary(&k2, FieldSpec::Prime(2), DEFAULT_MAX_CELLS),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn report_round_trip() {
        let p3 = path_graph(3).unwrap();
        let r = verify_graph_corollary(&p3, FieldSpec::Prime(5), DEFAULT_MAX_CELLS).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: GraphReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.verdict, r.verdict);
        assert_eq!(back.a_numbers, r.a_numbers);
    }
}
