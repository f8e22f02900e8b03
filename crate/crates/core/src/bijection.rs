//! The bijection between terrain-like graphs on [n] and Dumont derangements
//! of the second kind on [2n].
//!
//! Mapping a graph composes one value transposition per edge onto the base
//! derangement, outermost edges first. Unmapping sweeps every vertex pair in
//! a valid order, reads off whether the pair sits in edge configuration, and
//! peels it when it does. Both directions are independent of which valid
//! order is used, and [`verify_with`] checks that together with the defining
//! invariants by exhausting both sides for small n.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dumont::{
    base_derangement, base_word, dumont_violation, edge_configuration,
    enumerate_dumont_derangements, pair_transposition,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pairs::{all_pairs, random_valid_order, ValidOrder, VertexPair};
use crate::perm::Permutation;
use crate::terrain::{enumerate_terrain, is_terrain_like};

/// Largest n accepted by [`verify_with`]: both sides are enumerated in full.
pub const VERIFY_MAX_N: usize = 7;

/// Maps a graph to its permutation: edge transpositions are applied to the
/// base derangement from the canonically largest pair down. Total on all
/// graphs; lands on a Dumont derangement of the second kind, and restricted
/// to terrain-like graphs it is the bijection.
pub fn graph_to_permutation(g: &Graph) -> Permutation {
    apply_reversed(g.vertex_count(), &g.edges())
}

/// Same map, but applying the transpositions in the reverse of the given
/// valid order. The order must list exactly the graph's edges; any valid
/// order yields the same permutation.
pub fn graph_to_permutation_ordered(g: &Graph, order: &ValidOrder) -> Result<Permutation> {
    let mut listed: Vec<VertexPair> = order.pairs().to_vec();
    listed.sort_by_key(|e| e.canonical_key());
    if listed != g.edges() {
        return Err(Error::OrderMismatch(
            "valid order must contain exactly the graph's edge set".into(),
        ));
    }
    Ok(apply_reversed(g.vertex_count(), order.pairs()))
}

fn apply_reversed(n: usize, pairs: &[VertexPair]) -> Permutation {
    let mut p = Permutation::from_word_unchecked(base_word(n));
    for e in pairs.iter().rev() {
        let (i, j) = pair_transposition(*e);
        p.swap_values(i, j);
    }
    p
}

/// Recovers the graph from a Dumont derangement of the second kind by
/// sweeping all vertex pairs in canonical valid order.
pub fn permutation_to_graph(p: &Permutation) -> Result<Graph> {
    unmap_inner(p, &all_pairs(p.half_size()), false, None)
}

/// Same map, sweeping the pairs in the given valid order instead. The order
/// must list every vertex pair of [n] exactly once; any valid order yields
/// the same graph.
pub fn permutation_to_graph_ordered(p: &Permutation, order: &ValidOrder) -> Result<Graph> {
    validate_full_order(p.half_size(), order)?;
    unmap_inner(p, order.pairs(), false, None)
}

/// Unmaps while recording one [`UnmapStep`] per pair swept, optionally with
/// the internal invariants re-checked at every step (`paranoid`). Pass an
/// order to sweep, or `None` for the canonical one.
pub fn permutation_to_graph_traced(
    p: &Permutation,
    order: Option<&ValidOrder>,
    paranoid: bool,
) -> Result<(Graph, UnmapTrace)> {
    let canonical;
    let sweep: &[VertexPair] = match order {
        Some(o) => {
            validate_full_order(p.half_size(), o)?;
            o.pairs()
        }
        None => {
            canonical = all_pairs(p.half_size());
            &canonical
        }
    };
    let mut steps = Vec::new();
    let g = unmap_inner(p, sweep, paranoid, Some(&mut steps))?;
    Ok((g, UnmapTrace { steps }))
}

/// One sweep step of the inverse map: the pair inspected, whether it was in
/// edge configuration (and hence inserted), and the working permutation
/// after the step.
#[derive(Debug, Clone)]
pub struct UnmapStep {
    pub pair: VertexPair,
    pub inserted: bool,
    pub after: Permutation,
}

#[derive(Debug, Clone)]
pub struct UnmapTrace {
    pub steps: Vec<UnmapStep>,
}

fn validate_full_order(n: usize, order: &ValidOrder) -> Result<()> {
    let mut listed: Vec<VertexPair> = order.pairs().to_vec();
    listed.sort_by_key(|e| e.canonical_key());
    if listed != all_pairs(n) {
        return Err(Error::OrderMismatch(
            "valid order must contain every vertex pair exactly once".into(),
        ));
    }
    Ok(())
}

fn unmap_inner(
    p: &Permutation,
    sweep: &[VertexPair],
    paranoid: bool,
    mut trace: Option<&mut Vec<UnmapStep>>,
) -> Result<Graph> {
    let n = p.half_size();
    if let Some(v) = dumont_violation(p) {
        return Err(Error::NotDumontDerangement(v));
    }
    let mut work = p.clone();
    let mut g = Graph::new(n)?;
    for &e in sweep {
        let inserted = edge_configuration(&work, e.a(), e.b());
        if inserted {
            g.insert_pair_unchecked(e);
            let (i, j) = pair_transposition(e);
            work.swap_values(i, j);
        }
        if paranoid {
            if edge_configuration(&work, e.a(), e.b()) {
                return Err(Error::InvariantViolated(format!(
                    "pair {e} still in edge configuration after being processed in {work}"
                )));
            }
            if inserted {
                if let Some(v) = dumont_violation(&work) {
                    return Err(Error::InvariantViolated(format!(
                        "intermediate permutation {work} left the class: {v}"
                    )));
                }
            }
        }
        if let Some(t) = trace.as_deref_mut() {
            t.push(UnmapStep {
                pair: e,
                inserted,
                after: work.clone(),
            });
        }
    }
    let residual_is_base = work.word_slice() == base_word(n).as_slice();
    if paranoid && !residual_is_base {
        return Err(Error::InvariantViolated(format!(
            "residual permutation {work} is not the base derangement"
        )));
    }
    debug_assert!(
        residual_is_base,
        "residual permutation is not the base derangement"
    );
    Ok(g)
}

/// Removes a nesting-minimal edge e, returning the smaller graph and the
/// value transposition carried by e. The defining recurrence of the forward
/// map: mapping the result and swapping those two values gives the original
/// graph's permutation. Minimality keeps the smaller graph in the
/// terrain-like class.
pub fn peel_minimal_edge(g: &Graph, e: VertexPair) -> Result<(Graph, (usize, usize))> {
    if !g.has_pair(e) {
        return Err(Error::EdgeAbsent { edge: e });
    }
    for f in g.edges() {
        if f != e && f.precedes(&e) {
            return Err(Error::EdgeNotMinimal { edge: e, nested: f });
        }
    }
    let mut rest = g.clone();
    rest.toggle_pair(e);
    Ok((rest, pair_transposition(e)))
}

fn is_minimal_edge(g: &Graph, e: VertexPair) -> bool {
    g.edges().iter().all(|f| *f == e || !f.precedes(&e))
}

/// Exhaustive verification with default options; see [`verify_with`].
pub fn verify_round_trip(n: usize) -> Result<VerificationReport> {
    verify_with(n, VerifyOptions::default())
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Reservoir size for the random-order spot checks, per side.
    pub samples: usize,
    /// Random valid orders tried per sampled graph or permutation.
    pub orders_per_sample: usize,
    pub seed: u64,
    /// Re-check internal invariants during every unmap.
    pub paranoid: bool,
    /// Check the two configuration lemmas on every graph.
    pub lemma_checks: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 50,
            orders_per_sample: 10,
            seed: 0,
            paranoid: false,
            lemma_checks: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub terrain_count: u64,
    pub dumont_count: u64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

struct Check {
    name: &'static str,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            failure: None,
        }
    }

    // keeps the first counterexample only
    fn fail(&mut self, counterexample: String) {
        if self.failure.is_none() {
            self.failure = Some(counterexample);
        }
    }

    fn result(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.failure.is_none(),
            counterexample: self.failure,
        }
    }
}

fn join_pairs(pairs: &[VertexPair]) -> String {
    pairs
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Enumerates both sides in full and checks, for every member: the two round
/// trips, injectivity, the count identity, uniqueness of the base
/// derangement's preimage, and (optionally) the configuration lemmas. Random
/// valid orders are spot-checked on reservoir samples. Check failures land
/// in the report; `Err` is reserved for out-of-range n.
pub fn verify_with(n: usize, opts: VerifyOptions) -> Result<VerificationReport> {
    if !(1..=VERIFY_MAX_N).contains(&n) {
        return Err(Error::Bound {
            what: "exhaustive verification",
            n,
            max: VERIFY_MAX_N,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let pairs = all_pairs(n);

    let mut counts_equal = Check::new("counts_equal");
    let mut unmap_after_map = Check::new("unmap_after_map");
    let mut map_after_unmap = Check::new("map_after_unmap");
    let mut map_injective = Check::new("map_injective");
    let mut oi_map = Check::new("order_independence_map");
    let mut oi_unmap = Check::new("order_independence_unmap");
    let mut base_unique = Check::new("base_derangement_unique");
    let mut minimal_lemma = Check::new("minimal_edges_edge_config");
    let mut unnested_lemma = Check::new("unnested_pairs_non_edge_config");
    let mut paranoid_inv = Check::new("paranoid_assertions");

    let unmap = |p: &Permutation| -> Result<Graph> {
        if opts.paranoid {
            permutation_to_graph_traced(p, None, true).map(|(g, _)| g)
        } else {
            permutation_to_graph(p)
        }
    };
    // an unmap failure is attributed to the paranoid re-checks when that is
    // what tripped, and to the round trip under test otherwise
    let route = |err: Error, context: String, round_trip: &mut Check, par: &mut Check| match err {
        Error::InvariantViolated(_) => par.fail(format!("{context}: {err}")),
        _ => round_trip.fail(format!("{context}: {err}")),
    };

    // side 1: every terrain-like graph
    let mut terrain_count: u64 = 0;
    let mut images: HashMap<Permutation, Graph> = HashMap::new();
    let mut graph_sample: Vec<Graph> = Vec::new();
    for g in enumerate_terrain(n)? {
        terrain_count += 1;
        let p = graph_to_permutation(&g);
        match unmap(&p) {
            Ok(back) => {
                if back != g {
                    unmap_after_map.fail(format!("{g} maps to {p} which unmaps to {back}"));
                }
            }
            Err(e) => route(
                e,
                format!("{g} maps to {p}"),
                &mut unmap_after_map,
                &mut paranoid_inv,
            ),
        }
        if let Some(prev) = images.insert(p.clone(), g.clone()) {
            map_injective.fail(format!("{prev} and {g} both map to {p}"));
        }
        if opts.lemma_checks {
            for e in g.edges() {
                if is_minimal_edge(&g, e) && !edge_configuration(&p, e.a(), e.b()) {
                    minimal_lemma.fail(format!(
                        "minimal edge {e} of {g} not in edge configuration in {p}"
                    ));
                }
            }
            for &e in &pairs {
                let covered = g.edges().iter().any(|f| f.precedes(&e));
                if !covered && edge_configuration(&p, e.a(), e.b()) {
                    unnested_lemma.fail(format!(
                        "pair {e} nests no edge of {g} yet sits in edge configuration in {p}"
                    ));
                }
            }
        }
        reservoir_push(&mut graph_sample, g, terrain_count, opts.samples, &mut rng);
    }

    // side 2: every Dumont derangement of the second kind
    let mut dumont_count: u64 = 0;
    let mut perm_sample: Vec<Permutation> = Vec::new();
    let mut edgeless_preimages: Vec<Permutation> = Vec::new();
    for q in enumerate_dumont_derangements(n)? {
        dumont_count += 1;
        match unmap(&q) {
            Ok(g) => {
                if !is_terrain_like(&g) {
                    map_after_unmap.fail(format!("{q} unmaps to {g} which is not terrain-like"));
                } else {
                    let p = graph_to_permutation(&g);
                    if p != q {
                        map_after_unmap.fail(format!("{q} unmaps to {g} which maps to {p}"));
                    }
                }
                if g.is_edgeless() {
                    edgeless_preimages.push(q.clone());
                }
            }
            Err(e) => route(
                e,
                format!("{q} fails to unmap"),
                &mut map_after_unmap,
                &mut paranoid_inv,
            ),
        }
        reservoir_push(&mut perm_sample, q, dumont_count, opts.samples, &mut rng);
    }

    if terrain_count != dumont_count {
        counts_equal.fail(format!(
            "{terrain_count} terrain-like graphs vs {dumont_count} Dumont derangements"
        ));
    }
    let base = base_derangement(n)?;
    if edgeless_preimages.len() != 1 {
        base_unique.fail(format!(
            "{} permutations unmap to the edgeless graph",
            edgeless_preimages.len()
        ));
    } else if edgeless_preimages[0] != base {
        base_unique.fail(format!(
            "{} unmaps to the edgeless graph but the base derangement is {base}",
            edgeless_preimages[0]
        ));
    }

    // random-order spot checks on the reservoir samples
    for g in &graph_sample {
        let canonical = graph_to_permutation(g);
        for _ in 0..opts.orders_per_sample {
            let order = random_valid_order(&g.edges(), rng.random());
            match graph_to_permutation_ordered(g, &order) {
                Ok(p) if p == canonical => {}
                Ok(p) => oi_map.fail(format!(
                    "{g} under order [{}] maps to {p}, canonically to {canonical}",
                    join_pairs(order.pairs())
                )),
                Err(e) => oi_map.fail(format!(
                    "{g} under order [{}]: {e}",
                    join_pairs(order.pairs())
                )),
            }
        }
    }
    for q in &perm_sample {
        match permutation_to_graph(q) {
            Ok(canonical) => {
                for _ in 0..opts.orders_per_sample {
                    let order = random_valid_order(&pairs, rng.random());
                    match permutation_to_graph_ordered(q, &order) {
                        Ok(g) if g == canonical => {}
                        Ok(g) => oi_unmap.fail(format!(
                            "{q} under order [{}] unmaps to {g}, canonically to {canonical}",
                            join_pairs(order.pairs())
                        )),
                        Err(e) => oi_unmap.fail(format!(
                            "{q} under order [{}]: {e}",
                            join_pairs(order.pairs())
                        )),
                    }
                }
            }
            Err(e) => oi_unmap.fail(format!("{q} fails to unmap canonically: {e}")),
        }
    }

    let mut checks = vec![
        counts_equal.result(),
        unmap_after_map.result(),
        map_after_unmap.result(),
        map_injective.result(),
        oi_map.result(),
        oi_unmap.result(),
        base_unique.result(),
    ];
    if opts.lemma_checks {
        checks.push(minimal_lemma.result());
        checks.push(unnested_lemma.result());
    }
    if opts.paranoid {
        checks.push(paranoid_inv.result());
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerificationReport {
        n,
        terrain_count,
        dumont_count,
        checks,
        passed,
    })
}

fn reservoir_push<T>(sample: &mut Vec<T>, item: T, seen: u64, cap: usize, rng: &mut ChaCha8Rng) {
    if cap == 0 {
        return;
    }
    if sample.len() < cap {
        sample.push(item);
    } else {
        let j = rng.random_range(0..seen);
        if (j as usize) < cap {
            sample[j as usize] = item;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dumont::apply_pair_transposition;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn perm(word: &[usize]) -> Permutation {
        Permutation::from_word(word).unwrap()
    }

    // the full correspondence for n = 3, ordered by permutation word
    type Row = (&'static [usize], &'static [(usize, usize)]);
    const N3_TABLE: [Row; 8] = [
        (&[2, 1, 4, 3, 6, 5], &[]),
        (&[2, 1, 5, 3, 6, 4], &[(2, 3)]),
        (&[3, 1, 4, 2, 6, 5], &[(1, 2)]),
        (&[3, 1, 5, 2, 6, 4], &[(1, 2), (2, 3)]),
        (&[4, 1, 5, 2, 6, 3], &[(1, 2), (2, 3), (1, 3)]),
        (&[4, 1, 5, 3, 6, 2], &[(2, 3), (1, 3)]),
        (&[5, 1, 4, 2, 6, 3], &[(1, 2), (1, 3)]),
        (&[5, 1, 4, 3, 6, 2], &[(1, 3)]),
    ];

    #[test]
    fn golden_table_n3_both_directions() {
        for (word, edges) in N3_TABLE {
            let g = graph(3, edges);
            let p = perm(word);
            assert_eq!(graph_to_permutation(&g), p, "map of {g}");
            assert_eq!(permutation_to_graph(&p).unwrap(), g, "unmap of {p}");
        }
    }

    #[test]
    fn golden_table_n2_both_directions() {
        let pairs = [
            (perm(&[2, 1, 4, 3]), graph(2, &[])),
            (perm(&[3, 1, 4, 2]), graph(2, &[(1, 2)])),
        ];
        for (p, g) in pairs {
            assert_eq!(graph_to_permutation(&g), p);
            assert_eq!(permutation_to_graph(&p).unwrap(), g);
        }
    }

    #[test]
    fn six_vertex_example_both_directions() {
        let g = graph(6, &[(1, 3), (1, 5), (1, 6), (2, 6), (3, 5)]);
        let p = perm(&[4, 1, 11, 3, 9, 2, 8, 7, 10, 5, 12, 6]);
        assert_eq!(graph_to_permutation(&g), p);
        assert_eq!(permutation_to_graph(&p).unwrap(), g);
    }

    #[test]
    fn edgeless_maps_to_base() {
        for n in 1..=6 {
            let g = Graph::new(n).unwrap();
            let base = base_derangement(n).unwrap();
            assert_eq!(graph_to_permutation(&g), base);
            assert_eq!(permutation_to_graph(&base).unwrap(), g);
        }
    }

    #[test]
    fn unmap_rejects_non_members() {
        // Dumont of the second kind but with a fixed point
        let p = perm(&[4, 1, 3, 2]);
        match permutation_to_graph(&p) {
            Err(Error::NotDumontDerangement(v)) => {
                assert_eq!(v.to_string(), "π(3)=3 is a fixed point");
            }
            other => panic!("expected class rejection, got {other:?}"),
        }
        assert!(permutation_to_graph(&perm(&[1, 2])).is_err());
    }

    #[test]
    fn map_is_total_and_lands_in_the_class() {
        use crate::dumont::is_dumont_derangement;
        // not terrain-like, yet its image is still a Dumont derangement;
        // the round trip is what detects non-membership
        let g = graph(4, &[(1, 3), (2, 4)]);
        let p = graph_to_permutation(&g);
        assert!(is_dumont_derangement(&p));
        assert_ne!(permutation_to_graph(&p).unwrap(), g);
    }

    #[test]
    fn ordered_map_matches_canonical() {
        let g = graph(6, &[(1, 3), (1, 5), (1, 6), (2, 6), (3, 5)]);
        let canonical = graph_to_permutation(&g);
        for seed in 0..20 {
            let order = random_valid_order(&g.edges(), seed);
            assert_eq!(graph_to_permutation_ordered(&g, &order).unwrap(), canonical);
        }
    }

    #[test]
    fn ordered_unmap_matches_canonical() {
        let p = perm(&[4, 1, 11, 3, 9, 2, 8, 7, 10, 5, 12, 6]);
        let canonical = permutation_to_graph(&p).unwrap();
        for seed in 0..20 {
            let order = random_valid_order(&all_pairs(6), seed);
            assert_eq!(permutation_to_graph_ordered(&p, &order).unwrap(), canonical);
        }
    }

    #[test]
    fn ordered_variants_reject_wrong_pair_sets() {
        let g = graph(3, &[(1, 2), (2, 3)]);
        let partial = ValidOrder::new(vec![VertexPair::new(1, 2)]).unwrap();
        assert!(matches!(
            graph_to_permutation_ordered(&g, &partial),
            Err(Error::OrderMismatch(_))
        ));
        let p = graph_to_permutation(&g);
        assert!(matches!(
            permutation_to_graph_ordered(&p, &partial),
            Err(Error::OrderMismatch(_))
        ));
        // correct edge set is accepted even when it is not all of the pairs
        let edges_only = ValidOrder::new(g.edges()).unwrap();
        assert_eq!(graph_to_permutation_ordered(&g, &edges_only).unwrap(), p);
    }

    #[test]
    fn trace_records_every_sweep_step() {
        let p = perm(&[4, 1, 5, 2, 6, 3]); // full triangle
        let (g, trace) = permutation_to_graph_traced(&p, None, true).unwrap();
        assert_eq!(g, graph(3, &[(1, 2), (2, 3), (1, 3)]));
        let pairs: Vec<String> = trace.steps.iter().map(|s| s.pair.to_string()).collect();
        assert_eq!(pairs, ["1-2", "2-3", "1-3"]);
        assert!(trace.steps.iter().all(|s| s.inserted));
        assert_eq!(trace.steps[0].after, perm(&[4, 1, 5, 3, 6, 2]));
        assert_eq!(trace.steps[1].after, perm(&[5, 1, 4, 3, 6, 2]));
        assert_eq!(trace.steps[2].after, base_derangement(3).unwrap());
    }

    #[test]
    fn trace_marks_skipped_pairs() {
        let p = perm(&[5, 1, 4, 3, 6, 2]); // single edge 1-3
        let (g, trace) = permutation_to_graph_traced(&p, None, false).unwrap();
        assert_eq!(g, graph(3, &[(1, 3)]));
        let inserted: Vec<bool> = trace.steps.iter().map(|s| s.inserted).collect();
        assert_eq!(inserted, [false, false, true]);
        // skipped steps leave the working permutation untouched
        assert_eq!(trace.steps[0].after, p);
        assert_eq!(trace.steps[1].after, p);
    }

    #[test]
    fn peel_examples() {
        let triangle = graph(3, &[(1, 2), (2, 3), (1, 3)]);
        let (rest, swap) = peel_minimal_edge(&triangle, VertexPair::new(1, 2)).unwrap();
        assert_eq!(rest, graph(3, &[(2, 3), (1, 3)]));
        assert_eq!(swap, (2, 3));

        match peel_minimal_edge(&Graph::new(3).unwrap(), VertexPair::new(1, 2)) {
            Err(Error::EdgeAbsent { edge }) => assert_eq!(edge, VertexPair::new(1, 2)),
            other => panic!("expected absence error, got {other:?}"),
        }
        match peel_minimal_edge(&triangle, VertexPair::new(1, 3)) {
            Err(Error::EdgeNotMinimal { edge, nested }) => {
                assert_eq!(edge, VertexPair::new(1, 3));
                assert_eq!(nested, VertexPair::new(1, 2));
            }
            other => panic!("expected minimality error, got {other:?}"),
        }
    }

    #[test]
    fn peeling_recurrence_matches_the_map() {
        for n in 1..=4 {
            for g in enumerate_terrain(n).unwrap() {
                let p = graph_to_permutation(&g);
                for e in g.edges() {
                    if !is_minimal_edge(&g, e) {
                        continue;
                    }
                    let (rest, _) = peel_minimal_edge(&g, e).unwrap();
                    let lifted = apply_pair_transposition(&graph_to_permutation(&rest), e);
                    assert_eq!(lifted, p, "peeling {e} from {g}");
                }
            }
        }
    }

    #[test]
    fn verify_small_sizes_pass() {
        for (n, count) in [(1, 1u64), (2, 2), (3, 8), (4, 56), (5, 608)] {
            let report = verify_round_trip(n).unwrap();
            assert!(report.passed, "n={n}: {:?}", report.checks);
            assert_eq!(report.terrain_count, count);
            assert_eq!(report.dumont_count, count);
            assert!(report.checks.iter().all(|c| c.counterexample.is_none()));
            let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
            assert_eq!(
                names,
                [
                    "counts_equal",
                    "unmap_after_map",
                    "map_after_unmap",
                    "map_injective",
                    "order_independence_map",
                    "order_independence_unmap",
                    "base_derangement_unique",
                    "minimal_edges_edge_config",
                    "unnested_pairs_non_edge_config",
                ]
            );
        }
    }

    #[test]
    fn verify_paranoid_adds_its_check() {
        let opts = VerifyOptions {
            paranoid: true,
            samples: 10,
            orders_per_sample: 3,
            ..VerifyOptions::default()
        };
        let report = verify_with(3, opts).unwrap();
        assert!(report.passed);
        assert_eq!(
            report.checks.last().map(|c| c.name),
            Some("paranoid_assertions")
        );
    }

    #[test]
    fn verify_report_serializes() {
        let report = verify_with(2, VerifyOptions::default()).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["n"], 2);
        assert_eq!(json["terrain_count"], 2);
        assert_eq!(json["passed"], true);
        assert!(json["checks"].as_array().unwrap().len() >= 7);
    }

    #[test]
    fn verify_bounds() {
        assert!(matches!(verify_round_trip(0), Err(Error::Bound { .. })));
        assert!(matches!(verify_round_trip(8), Err(Error::Bound { .. })));
    }
}
