//! Exhaustive cross-validation harness: every classifier verdict, code
//! family, and relabeling map is checked against the brute-force oracle over
//! all small instances. Each check produces a [`CriterionReport`] so callers
//! can print one pass/fail line per property.

use itertools::Itertools;
use rayon::prelude::*;

use crate::abelian::{set_literal, Element, GroupSpec};
use crate::classify::{admits_perfect_code, enumerate_identity_codes, CaseTag};
use crate::codes::{
    code_family_dprime, code_family_k2, code_family_prime, to_vertex_set, CodeFamilyParams,
};
use crate::constructions::{
    cayley_form, dprime_condition, gamma_dprime, grid_graph, grid_vertex_index, k2_condition,
    prime_condition, range_len, shared_constraints, CosetRange, GridVertex, PhiMap, Variant,
};
use crate::graph::{cayley, is_perfect_code, Graph, VertexSet};
use crate::numtheory::tau;
use crate::oracle::{enumerate_perfect_codes, enumerate_perfect_codes_naive, find_perfect_code};

/// Outcome of one acceptance check.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub label: String,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl CriterionReport {
    fn new(label: &str, checked: u64, failures: Vec<String>) -> Self {
        CriterionReport {
            label: label.to_string(),
            checked,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One line suitable for a test log or the sweep subcommand.
    pub fn summary_line(&self) -> String {
        if self.passed() {
            format!("PASS {} ({} instances)", self.label, self.checked)
        } else {
            format!(
                "FAIL {} ({} instances, {} failures; first: {})",
                self.label,
                self.checked,
                self.failures.len(),
                self.failures[0]
            )
        }
    }
}

/// Which involution counts to include when enumerating connection sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionFilter {
    One,
    Three,
    Five,
    All,
}

impl InvolutionFilter {
    fn wants(self, count: usize) -> bool {
        match self {
            InvolutionFilter::One => count == 1,
            InvolutionFilter::Three => count == 3,
            InvolutionFilter::Five => count == 5,
            InvolutionFilter::All => true,
        }
    }
}

fn factorizations(n: u64, max_factor: u64) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for d in (2..=max_factor.min(n)).rev() {
        if n % d == 0 {
            for mut tail in factorizations(n / d, d) {
                let mut factors = vec![d];
                factors.append(&mut tail);
                out.push(factors);
            }
        }
    }
    out
}

/// Every group spec of order 2..=max_order, one per unordered factorization
/// into cyclic parts (isomorphic specs with different factorizations are
/// kept; checks are per-instance).
pub fn group_specs_up_to(max_order: u64) -> Vec<GroupSpec> {
    (2..=max_order)
        .flat_map(|n| factorizations(n, n))
        .map(|f| GroupSpec::new(f).expect("factors are >= 2"))
        .collect()
}

/// All generating inverse-closed identity-free 5-subsets of `g` with the
/// requested involution counts, each as [pair, pair, involutions...] with
/// lexicographically minimal pair representatives.
pub fn quintic_connection_sets(g: &GroupSpec, filter: InvolutionFilter) -> Vec<Vec<Element>> {
    let involutions = g.involutions();
    let pair_reps: Vec<Element> = g
        .elements()
        .filter(|x| {
            let neg = g.neg(x);
            neg != *x && *x < neg
        })
        .collect();
    let mut sets: Vec<Vec<Element>> = Vec::new();
    if filter.wants(1) {
        for pair in pair_reps.iter().combinations(2) {
            for v in &involutions {
                sets.push(vec![
                    pair[0].clone(),
                    g.neg(pair[0]),
                    pair[1].clone(),
                    g.neg(pair[1]),
                    v.clone(),
                ]);
            }
        }
    }
    if filter.wants(3) {
        for rep in &pair_reps {
            for tri in involutions.iter().combinations(3) {
                let mut set = vec![rep.clone(), g.neg(rep)];
                set.extend(tri.into_iter().cloned());
                sets.push(set);
            }
        }
    }
    if filter.wants(5) {
        for five in involutions.iter().combinations(5) {
            sets.push(five.into_iter().cloned().collect());
        }
    }
    sets.into_par_iter()
        .filter(|set| g.span(set).len() as u64 == g.order())
        .collect()
}

fn instance_label(g: &GroupSpec, set: &[Element]) -> String {
    format!("{} {}", g, set_literal(set))
}

/// The admissibility classifier agrees with brute-force existence on every
/// connected quintic Cayley graph up to the given order.
pub fn classifier_matches_oracle(max_order: u64, filter: InvolutionFilter) -> CriterionReport {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for g in group_specs_up_to(max_order) {
        let sets = quintic_connection_sets(&g, filter);
        checked += sets.len() as u64;
        failures.par_extend(sets.par_iter().filter_map(|set| {
            let verdict = admits_perfect_code(&g, set).expect("sets are valid by construction");
            let graph = cayley(&g, set).expect("sets are valid by construction");
            let exists = find_perfect_code(&graph).is_some();
            (verdict.admits != exists).then(|| {
                format!(
                    "{}: classifier says {}, oracle says {}",
                    instance_label(&g, set),
                    verdict.admits,
                    exists
                )
            })
        }));
    }
    CriterionReport::new("classifier matches oracle", checked, failures)
}

/// On every admitting one-involution instance, the predicted identity codes
/// equal the oracle's enumeration of codes through the identity.
pub fn identity_code_enumeration_complete(max_order: u64) -> CriterionReport {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for g in group_specs_up_to(max_order) {
        let sets = quintic_connection_sets(&g, InvolutionFilter::One);
        let results: Vec<Result<bool, String>> = sets
            .par_iter()
            .map(|set| {
                let verdict =
                    admits_perfect_code(&g, set).expect("sets are valid by construction");
                if !verdict.admits {
                    return Ok(false);
                }
                let predicted = match enumerate_identity_codes(&g, set) {
                    Ok(codes) => codes,
                    Err(e) => {
                        return Err(format!("{}: {}", instance_label(&g, set), e));
                    }
                };
                let mut predicted: Vec<VertexSet> = predicted
                    .iter()
                    .map(|code| code.iter().map(|x| g.index_of(x)).collect())
                    .collect();
                predicted.sort();
                let graph = cayley(&g, set).expect("sets are valid by construction");
                let through_identity =
                    enumerate_perfect_codes(&graph, Some(g.index_of(&g.identity())));
                if predicted == through_identity {
                    Ok(true)
                } else {
                    Err(format!(
                        "{}: predicted {} identity codes, oracle found {}",
                        instance_label(&g, set),
                        predicted.len(),
                        through_identity.len()
                    ))
                }
            })
            .collect();
        for r in results {
            match r {
                Ok(true) => checked += 1,
                Ok(false) => {}
                Err(msg) => {
                    checked += 1;
                    failures.push(msg);
                }
            }
        }
    }
    CriterionReport::new("identity-code enumeration complete", checked, failures)
}

fn family_params() -> impl Iterator<Item = (u64, u64, u64, i64)> {
    [6u64, 12, 18].into_iter().flat_map(|m| {
        (1..=6u64)
            .flat_map(move |l| (0..m).map(move |h| (m, l, h)))
            .flat_map(|(m, l, h)| [1i64, -1].map(move |a| (m, l, h, a)))
    })
}

fn t_vectors(range: u64) -> impl Iterator<Item = Vec<u8>> {
    (0u64..(1 << range)).map(move |bits| (0..range).map(|i| (bits >> i & 1) as u8).collect())
}

fn check_family<F>(
    label: &str,
    variant: Variant,
    expected_share: u64,
    condition_range: impl Fn(u64, u64, u64, i64) -> Option<CosetRange>,
    generate: F,
) -> CriterionReport
where
    F: Fn(&CodeFamilyParams) -> Result<Vec<GridVertex>, crate::codes::CodeError>,
{
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for (m, l, h, a) in family_params() {
        if !shared_constraints(m, l, h, a) {
            continue;
        }
        let Some(range) = condition_range(m, l, h, a) else {
            continue;
        };
        let tag = format!("({m},{l},{h}) a={a}");
        let Some(range) = range_len(m, l, h, a, range) else {
            failures.push(format!("{tag}: coset range does not divide b"));
            continue;
        };
        let graph = match grid_graph(variant, m, l, h) {
            Ok(graph) => graph,
            Err(e) => {
                failures.push(format!("{tag}: hypotheses hold but construction failed: {e}"));
                continue;
            }
        };
        for t in t_vectors(range) {
            checked += 1;
            let tag = format!("{tag} t={t:?}");
            let p = CodeFamilyParams::new(m, l, h, a, t).expect("shared constraints hold");
            match generate(&p) {
                Err(e) => failures.push(format!("{tag}: {e}")),
                Ok(code) => {
                    if code.len() as u64 != m * l / expected_share {
                        failures.push(format!(
                            "{tag}: size {} instead of {}",
                            code.len(),
                            m * l / expected_share
                        ));
                    } else if !is_perfect_code(&graph, &to_vertex_set(&code, l)) {
                        failures.push(format!("{tag}: generated set is not a perfect code"));
                    }
                }
            }
        }
    }
    CriterionReport::new(label, checked, failures)
}

/// Every hypothesis-satisfying prism-family instance yields a perfect code
/// of size ml/3 on the prism over the grid.
pub fn k2_code_family_sweep() -> CriterionReport {
    check_family(
        "prism family sweep",
        Variant::TimesK2,
        3,
        |m, l, h, a| k2_condition(m, l, h, a).then_some(CosetRange::Third),
        code_family_k2,
    )
}

/// Same for the two half-turn completions, at size ml/6.
pub fn prime_dprime_code_family_sweep() -> CriterionReport {
    let prime = check_family(
        "half-turn family sweeps",
        Variant::Prime,
        6,
        prime_condition,
        code_family_prime,
    );
    let dprime = check_family(
        "half-turn family sweeps",
        Variant::DPrime,
        6,
        dprime_condition,
        code_family_dprime,
    );
    let mut failures = prime.failures;
    failures.extend(dprime.failures);
    CriterionReport::new(
        "half-turn family sweeps",
        prime.checked + dprime.checked,
        failures,
    )
}

fn variant_layers(variant: Variant) -> &'static [Option<u8>] {
    match variant {
        Variant::TimesK2 => &[Some(0), Some(1)],
        _ => &[None],
    }
}

fn iso_failure(variant: Variant, m: u64, l: u64, h: u64, grid: &Graph) -> Option<String> {
    let tag = format!("{variant:?} ({m},{l},{h})");
    let (spec, set) = match cayley_form(variant, m, l, h) {
        Ok(pair) => pair,
        Err(e) => return Some(format!("{tag}: no Cayley form ({e})")),
    };
    let cay = match cayley(&spec, &set) {
        Ok(g) => g,
        Err(e) => return Some(format!("{tag}: Cayley form rejected ({e:?})")),
    };
    if cay.vertex_count() != grid.vertex_count() {
        return Some(format!(
            "{tag}: {} grid vertices vs {} Cayley vertices",
            grid.vertex_count(),
            cay.vertex_count()
        ));
    }
    if cay.edge_count() != grid.edge_count() {
        return Some(format!(
            "{tag}: {} grid edges vs {} Cayley edges",
            grid.edge_count(),
            cay.edge_count()
        ));
    }
    let phi = PhiMap::new(m, l, h).expect("Cayley form exists, so the map is integral");
    let n = grid.vertex_count();
    let mut image = vec![usize::MAX; n];
    for a in 0..m {
        for b in 0..l {
            for &layer in variant_layers(variant) {
                let v = GridVertex { a, b, layer };
                image[grid_vertex_index(l, &v)] = spec.index_of(&phi.image_element(a, b, layer));
            }
        }
    }
    let mut seen = vec![false; n];
    for &x in &image {
        if x == usize::MAX || seen[x] {
            return Some(format!("{tag}: relabeling map is not a bijection"));
        }
        seen[x] = true;
    }
    for u in 0..n {
        for &v in grid.neighbors(u) {
            if u < v && !cay.has_edge(image[u], image[v]) {
                return Some(format!(
                    "{tag}: grid edge {u}-{v} has no image edge {}-{}",
                    image[u], image[v]
                ));
            }
        }
    }
    None
}

/// Whenever the relabeling map is integral, each grid construction is
/// isomorphic to its canonical Cayley form, for all four variants.
pub fn grid_cayley_isomorphism_sweep() -> CriterionReport {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for m in [6u64, 12, 18] {
        for l in 1..=6u64 {
            for h in 0..m {
                let integral = h % tau(h, l) == 0;
                for variant in [Variant::Plain, Variant::TimesK2, Variant::Prime, Variant::DPrime]
                {
                    checked += 1;
                    let tag = format!("{variant:?} ({m},{l},{h})");
                    match (grid_graph(variant, m, l, h), integral) {
                        (Err(_), _) => {
                            // no grid; the Cayley form must refuse too
                            if let Ok((spec, set)) = cayley_form(variant, m, l, h) {
                                failures.push(format!(
                                    "{tag}: no grid but a Cayley form on {} exists",
                                    instance_label(&spec, &set)
                                ));
                            }
                        }
                        (Ok(_), false) => {
                            // map not integral: the Cayley form must refuse
                            if cayley_form(variant, m, l, h).is_ok() {
                                failures.push(format!(
                                    "{tag}: map is not integral but a Cayley form exists"
                                ));
                            }
                        }
                        (Ok(grid), true) => {
                            if let Some(msg) = iso_failure(variant, m, l, h, &grid) {
                                failures.push(msg);
                            }
                        }
                    }
                }
            }
        }
    }
    CriterionReport::new("grid-Cayley isomorphism", checked, failures)
}

/// Connection sets with 3 or 5 involutions never admit a perfect code.
pub fn multi_involution_no_code(max_order: u64) -> CriterionReport {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for g in group_specs_up_to(max_order) {
        for filter in [InvolutionFilter::Three, InvolutionFilter::Five] {
            let sets = quintic_connection_sets(&g, filter);
            checked += sets.len() as u64;
            failures.par_extend(sets.par_iter().filter_map(|set| {
                let graph = cayley(&g, set).expect("sets are valid by construction");
                find_perfect_code(&graph).map(|code| {
                    format!(
                        "{}: oracle found {:?}",
                        instance_label(&g, set),
                        code.members()
                    )
                })
            }));
        }
    }
    CriterionReport::new("multi-involution non-admission", checked, failures)
}

/// The worked examples reproduce exactly.
pub fn desk_fixtures() -> CriterionReport {
    let mut failures = Vec::new();
    let mut check = |ok: bool, msg: &str| {
        if !ok {
            failures.push(msg.to_string());
        }
    };

    let z6 = GroupSpec::parse("Z6").unwrap();
    let s6: Vec<Element> = [1i64, 5, 2, 4, 3]
        .iter()
        .map(|&r| z6.element(&[r]).unwrap())
        .collect();
    let v6 = admits_perfect_code(&z6, &s6).unwrap();
    check(
        v6.admits && v6.case_tag == Some(CaseTag::II) && v6.params == Some((6, 1, 4)),
        "complete graph on six vertices: wrong classification",
    );
    let codes6 = enumerate_identity_codes(&z6, &s6).unwrap();
    check(
        codes6.len() == 1 && codes6[0].len() == 1 && codes6[0].contains(&z6.identity()),
        "complete graph on six vertices: identity code is not {0}",
    );

    let g12 = GroupSpec::parse("Z6xZ2").unwrap();
    let s12: Vec<Element> = [[1, 0], [5, 0], [2, 0], [4, 0], [0, 1]]
        .iter()
        .map(|r| g12.element(&[r[0], r[1]]).unwrap())
        .collect();
    let v12 = admits_perfect_code(&g12, &s12).unwrap();
    check(
        v12.admits && v12.case_tag == Some(CaseTag::I) && v12.params == Some((6, 1, 4)),
        "prism instance: wrong classification",
    );
    let codes12 = enumerate_identity_codes(&g12, &s12).unwrap();
    let expected: std::collections::BTreeSet<Element> =
        [g12.element(&[0, 0]).unwrap(), g12.element(&[3, 1]).unwrap()]
            .into_iter()
            .collect();
    check(
        codes12 == vec![expected],
        "prism instance: identity codes differ from {(0,0),(3,1)}",
    );

    let p = CodeFamilyParams::new(6, 2, 4, -1, vec![0, 0]).unwrap();
    match code_family_dprime(&p) {
        Err(e) => check(false, &format!("diagonal fixture: {e}")),
        Ok(code) => {
            check(
                code == vec![GridVertex::flat(0, 0), GridVertex::flat(3, 0)],
                "diagonal fixture: code differs from {(0,0),(3,0)}",
            );
            let graph = gamma_dprime(6, 2, 4).unwrap();
            check(
                is_perfect_code(&graph, &to_vertex_set(&code, 2)),
                "diagonal fixture: set is not a perfect code",
            );
        }
    }

    CriterionReport::new("desk fixtures", 3, failures)
}

/// Backtracking enumeration equals naive subset enumeration on every suite
/// graph with at most 18 vertices.
pub fn oracle_self_consistency() -> CriterionReport {
    let mut suite: Vec<(String, Graph)> = Vec::new();
    for g in group_specs_up_to(18) {
        for set in quintic_connection_sets(&g, InvolutionFilter::All) {
            let graph = cayley(&g, &set).expect("sets are valid by construction");
            suite.push((instance_label(&g, &set), graph));
        }
    }
    for m in [6u64, 12, 18] {
        for l in 1..=6u64 {
            for h in 0..m {
                for variant in [Variant::Plain, Variant::TimesK2, Variant::Prime, Variant::DPrime]
                {
                    if let Ok(graph) = grid_graph(variant, m, l, h) {
                        if graph.vertex_count() <= 18 {
                            suite.push((format!("{variant:?} ({m},{l},{h})"), graph));
                        }
                    }
                }
            }
        }
    }
    let checked = suite.len() as u64;
    let failures: Vec<String> = suite
        .par_iter()
        .filter_map(|(label, graph)| {
            let fast = enumerate_perfect_codes(graph, None);
            let naive = enumerate_perfect_codes_naive(graph);
            (fast != naive).then(|| {
                format!(
                    "{label}: backtracking found {} codes, naive found {}",
                    fast.len(),
                    naive.len()
                )
            })
        })
        .collect();
    CriterionReport::new("oracle self-consistency", checked, failures)
}

/// Runs every acceptance criterion; reports come back in a fixed order.
pub fn run_all(max_order: u64, filter: InvolutionFilter) -> Vec<CriterionReport> {
    vec![
        classifier_matches_oracle(max_order, filter),
        identity_code_enumeration_complete(max_order),
        k2_code_family_sweep(),
        prime_dprime_code_family_sweep(),
        grid_cayley_isomorphism_sweep(),
        multi_involution_no_code(max_order.min(36)),
        desk_fixtures(),
        oracle_self_consistency(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations_are_unordered_and_descending() {
        assert_eq!(factorizations(12, 12), vec![
            vec![12],
            vec![6, 2],
            vec![4, 3],
            vec![3, 2, 2],
        ]);
        assert_eq!(factorizations(7, 7), vec![vec![7]]);
    }

    #[test]
    fn connection_set_counts_on_a_small_group() {
        let g = GroupSpec::parse("Z6").unwrap();
        // pairs {1,5} and {2,4}, involution 3: one set, and it generates
        let one = quintic_connection_sets(&g, InvolutionFilter::One);
        assert_eq!(one.len(), 1);
        assert!(quintic_connection_sets(&g, InvolutionFilter::Three).is_empty());

        let g8 = GroupSpec::parse("Z2xZ2xZ2").unwrap();
        // no inverse pairs at all; 5 of the 7 involutions must generate
        let five = quintic_connection_sets(&g8, InvolutionFilter::Five);
        assert_eq!(five.len(), 21);
        assert!(five
            .iter()
            .all(|s| g8.span(s).len() as u64 == g8.order()));
    }

    #[test]
    fn small_classifier_sweep_is_clean() {
        let report = classifier_matches_oracle(12, InvolutionFilter::All);
        assert!(report.passed(), "{}", report.summary_line());
        assert!(report.checked > 0);
    }

    #[test]
    fn small_enumeration_sweep_is_clean() {
        let report = identity_code_enumeration_complete(12);
        assert!(report.passed(), "{}", report.summary_line());
        assert!(report.checked > 0);
    }

    #[test]
    fn fixtures_pass() {
        let report = desk_fixtures();
        assert!(report.passed(), "{}", report.summary_line());
    }
}
