//! Connection-set normalization, the admissibility classifier, the
//! identity-code enumerator, and structural diagnostics for a given code.
//!
//! A quintic connection set on an abelian group has 1, 3, or 5 involutions.
//! With 3 or 5 the graph never admits a perfect code, so classification ends
//! there. With exactly 1 the set is {s, -s, s', -s', s0}; the subgroup
//! generated by s and s' carries a grid structure (m, l, h), and the position
//! of s0 relative to that subgroup selects one of three completions. Any
//! perfect code through the identity is closed under adding a s + s' + s0
//! for a fixed sign a, so it is a union of cosets of the subgroup generated
//! by that step, anchored at 3i s; admissibility is decided by building the
//! anchored union and verifying it on the graph. Both assignments of the two
//! inverse pairs to (s, s') are tried, since an arbitrary user-supplied set
//! has no preferred orientation.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::abelian::{Element, GroupSpec};
use crate::codes::d_coset;
use crate::constructions::{shared_constraints, CosetRange};
use crate::graph::{cayley, is_perfect_code, Graph, VertexSet};
use crate::numtheory::gcd_i;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("connection set has {0} distinct elements, need exactly 5")]
    NotQuintic(usize),
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("connection set is not inverse-closed")]
    NotInverseClosed,
    #[error("connection set does not generate the group")]
    NotGenerating,
    #[error("the given set is not a perfect code containing the identity")]
    NotAPerfectCode,
    #[error("internal consistency check failed: {0}")]
    SelfVerification(String),
}

/// The three completions a one-involution quintic Cayley graph can be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    I,
    II,
    III,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CaseTag::I => "I",
            CaseTag::II => "II",
            CaseTag::III => "III",
        })
    }
}

/// Which inverse pair plays the row generator s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    AsGiven,
    Swapped,
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Orientation::AsGiven => "as-given",
            Orientation::Swapped => "swapped",
        })
    }
}

/// Position of the involution s0 relative to the subgroup generated by s
/// and s'. That subgroup is Z^2 modulo the relation lattice spanned by
/// (m, 0) and (h, l), so its involutions are exactly the half-lattice
/// points: (m/2) s, (h/2) s + (l/2) s', and ((m+h)/2) s + (l/2) s'.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SZeroCategory {
    /// s0 outside the subgroup: the graph is a prism over the grid.
    Outside,
    /// s0 = (m/2) s: the row half-turn completion.
    HalfS,
    /// s0 is one of the two column half-turn points (h/2) s + (l/2) s' or
    /// ((m+h)/2) s + (l/2) s': the diagonal half-turn completion. The two
    /// points trade places under the sign reorientation s -> -s, a -> -a,
    /// and the case conditions are invariant under it, so they share a
    /// category.
    Diagonal,
    /// Inside the subgroup but not an involution position; unreachable for
    /// a valid normalized set, kept as a defensive fallback.
    InSpan,
}

/// One orientation of a one-involution quintic set, with its grid data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedSet {
    pub orientation: Orientation,
    pub s: Element,
    pub sp: Element,
    pub s0: Element,
    pub m: u64,
    pub l: u64,
    pub h: u64,
    pub s0_category: SZeroCategory,
}

/// Result of normalization: two orientation candidates, or a terminal
/// involution count of 3 or 5 (which already settles non-admissibility).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalizeOutcome {
    Candidates(Box<[NormalizedSet; 2]>),
    TooManyInvolutions(usize),
}

/// Grid data of the subgroup generated by s and s': m = o(s), l the least
/// positive integer with l s' in span{s}, and h the unique value in [0, m)
/// with h s + l s' = 0.
pub fn derive_hl(g: &GroupSpec, s: &Element, sp: &Element) -> (u64, u64, u64) {
    let m = g.order_of(s);
    let span_s = g.span(std::slice::from_ref(s));
    let l = (1..=g.order_of(sp))
        .find(|&k| span_s.contains(&g.scale(k as i64, sp)))
        .expect("o(sp) multiples of sp reach the identity");
    let target = g.neg(&g.scale(l as i64, sp));
    let h = (0..m)
        .find(|&h| g.scale(h as i64, s) == target)
        .expect("l sp lies in span{s}");
    (m, l, h)
}

fn categorize(
    g: &GroupSpec,
    s: &Element,
    sp: &Element,
    s0: &Element,
    m: u64,
    l: u64,
    h: u64,
) -> SZeroCategory {
    let span = g.span(&[s.clone(), sp.clone()]);
    if !span.contains(s0) {
        return SZeroCategory::Outside;
    }
    if m % 2 == 0 && *s0 == g.scale((m / 2) as i64, s) {
        return SZeroCategory::HalfS;
    }
    if l % 2 == 0 {
        let half_column = g.scale((l / 2) as i64, sp);
        let diagonal = |row: u64| g.add(&g.scale(row as i64, s), &half_column);
        if h % 2 == 0 && *s0 == diagonal(h / 2) {
            return SZeroCategory::Diagonal;
        }
        if (m + h) % 2 == 0 && *s0 == diagonal((m + h) / 2 % m) {
            return SZeroCategory::Diagonal;
        }
    }
    SZeroCategory::InSpan
}

/// Validates a quintic connection set and, when it has exactly one
/// involution, splits it into the two (s, s') orientations.
pub fn normalize(g: &GroupSpec, set: &[Element]) -> Result<NormalizeOutcome, ClassifyError> {
    let distinct: BTreeSet<&Element> = set.iter().collect();
    if distinct.len() != 5 {
        return Err(ClassifyError::NotQuintic(distinct.len()));
    }
    if distinct.contains(&g.identity()) {
        return Err(ClassifyError::ContainsIdentity);
    }
    if distinct.iter().any(|x| !distinct.contains(&g.neg(x))) {
        return Err(ClassifyError::NotInverseClosed);
    }
    if g.span(set).len() as u64 != g.order() {
        return Err(ClassifyError::NotGenerating);
    }
    let involutions: Vec<&Element> = distinct
        .iter()
        .copied()
        .filter(|x| g.neg(x) == **x)
        .collect();
    if involutions.len() != 1 {
        return Ok(NormalizeOutcome::TooManyInvolutions(involutions.len()));
    }
    let s0 = involutions[0].clone();
    let reps: BTreeSet<Element> = distinct
        .iter()
        .filter(|x| g.neg(x) != ***x)
        .map(|x| std::cmp::min((*x).clone(), g.neg(x)))
        .collect();
    debug_assert_eq!(reps.len(), 2);
    let mut reps = reps.into_iter();
    let (first, second) = (reps.next().unwrap(), reps.next().unwrap());
    let candidate = |orientation, s: Element, sp: Element| {
        let (m, l, h) = derive_hl(g, &s, &sp);
        let s0_category = categorize(g, &s, &sp, &s0, m, l, h);
        NormalizedSet {
            orientation,
            s,
            sp,
            s0: s0.clone(),
            m,
            l,
            h,
            s0_category,
        }
    };
    Ok(NormalizeOutcome::Candidates(Box::new([
        candidate(Orientation::AsGiven, first.clone(), second.clone()),
        candidate(Orientation::Swapped, second, first),
    ])))
}

/// One passing (orientation, a) combination with everything the enumerator
/// needs. `range` is the number of anchored step-subgroup cosets in each
/// predicted code, |G| / (6 o(a s + s' + s0)).
#[derive(Clone, Debug)]
pub struct Witness {
    pub orientation: Orientation,
    pub case_tag: CaseTag,
    pub m: u64,
    pub l: u64,
    pub h: u64,
    pub a: i64,
    pub range: usize,
    pub coset_range: Option<CosetRange>,
    pub s: Element,
    pub sp: Element,
    pub s0: Element,
}

/// Admissibility verdict with every witness that passed.
#[derive(Clone, Debug)]
pub struct Classification {
    pub admits: bool,
    pub case_tag: Option<CaseTag>,
    pub params: Option<(u64, u64, u64)>,
    pub sign_set: Vec<i64>,
    pub orientation: Option<Orientation>,
    pub coset_range: Option<CosetRange>,
    pub involution_count: usize,
    pub witnesses: Vec<Witness>,
}

fn case_of(cand: &NormalizedSet) -> Option<CaseTag> {
    match cand.s0_category {
        SZeroCategory::Outside => Some(CaseTag::I),
        SZeroCategory::HalfS => Some(CaseTag::II),
        SZeroCategory::Diagonal => Some(CaseTag::III),
        SZeroCategory::InSpan => None,
    }
}

/// The union of the first `range` step-subgroup cosets, anchored at 3i s,
/// with every layer bit j_i forced to zero.
fn anchored_union(
    g: &GroupSpec,
    cand: &NormalizedSet,
    a: i64,
    range: usize,
) -> BTreeSet<Element> {
    let mut code = BTreeSet::new();
    for i in 0..range {
        let coset = d_coset(g, &cand.s, &cand.sp, &cand.s0, a, i as i64, 0)
            .expect("normalize guarantees o(s0) = 2");
        code.extend(coset);
    }
    code
}

/// Tests one (orientation, a) combination: the step a s + s' + s0 must split
/// |G| into a whole number of ball-sized blocks, and the anchored all-zeros
/// coset union must verify as a perfect code on the graph.
fn witness_for(
    g: &GroupSpec,
    graph: &Graph,
    cand: &NormalizedSet,
    a: i64,
) -> Option<Witness> {
    let case_tag = case_of(cand)?;
    let (m, l, h) = (cand.m, cand.l, cand.h);
    if !shared_constraints(m, l, h, a) {
        return None;
    }
    let step = g.add(&g.add(&g.scale(a, &cand.s), &cand.sp), &cand.s0);
    let block = 6 * g.order_of(&step);
    if g.order() % block != 0 {
        return None;
    }
    let range = (g.order() / block) as usize;
    let code = anchored_union(g, cand, a, range);
    if !is_perfect_code(graph, &code_to_vertex_set(g, &code)) {
        return None;
    }
    let b = gcd_i(l as i64 - a * h as i64, m as i64);
    let coset_range = if 3 * range as u64 == b {
        Some(CosetRange::Third)
    } else if 6 * range as u64 == b {
        Some(CosetRange::Sixth)
    } else {
        None
    };
    Some(Witness {
        orientation: cand.orientation,
        case_tag,
        m,
        l,
        h,
        a,
        range,
        coset_range,
        s: cand.s.clone(),
        sp: cand.sp.clone(),
        s0: cand.s0.clone(),
    })
}

/// Decides whether cayley(G, S) admits a perfect code.
pub fn admits_perfect_code(
    g: &GroupSpec,
    set: &[Element],
) -> Result<Classification, ClassifyError> {
    let candidates = match normalize(g, set)? {
        NormalizeOutcome::TooManyInvolutions(count) => {
            return Ok(Classification {
                admits: false,
                case_tag: None,
                params: None,
                sign_set: Vec::new(),
                orientation: None,
                coset_range: None,
                involution_count: count,
                witnesses: Vec::new(),
            });
        }
        NormalizeOutcome::Candidates(c) => c,
    };
    let graph = cayley(g, set).expect("normalize validated the set");
    let mut witnesses = Vec::new();
    for cand in candidates.iter() {
        for a in [1i64, -1] {
            witnesses.extend(witness_for(g, &graph, cand, a));
        }
    }
    let primary = witnesses.first().cloned();
    let sign_set = primary
        .as_ref()
        .map(|p| {
            witnesses
                .iter()
                .filter(|w| w.orientation == p.orientation)
                .map(|w| w.a)
                .collect()
        })
        .unwrap_or_default();
    Ok(Classification {
        admits: primary.is_some(),
        case_tag: primary.as_ref().map(|w| w.case_tag),
        params: primary.as_ref().map(|w| (w.m, w.l, w.h)),
        sign_set,
        orientation: primary.as_ref().map(|w| w.orientation),
        coset_range: primary.as_ref().and_then(|w| w.coset_range),
        involution_count: 1,
        witnesses,
    })
}

fn code_to_vertex_set(g: &GroupSpec, code: &BTreeSet<Element>) -> VertexSet {
    code.iter().map(|x| g.index_of(x)).collect()
}

/// Enumerates every perfect code containing the identity, as predicted by
/// the witnesses: unions of diagonal cosets over all j-vectors with j_0 = 0,
/// deduplicated across witnesses. Each set is re-verified on the graph
/// before being returned.
pub fn enumerate_identity_codes(
    g: &GroupSpec,
    set: &[Element],
) -> Result<Vec<BTreeSet<Element>>, ClassifyError> {
    let classification = admits_perfect_code(g, set)?;
    if classification.witnesses.is_empty() {
        return Ok(Vec::new());
    }
    let graph = cayley(g, set).expect("normalize validated the set");
    let mut out: BTreeSet<BTreeSet<Element>> = BTreeSet::new();
    for w in &classification.witnesses {
        let range = w.range;
        assert!(range <= 64, "layer choice vector exceeds 64 bits");
        let free_bits = range - 1;
        for jvec in 0u64..(1 << free_bits) {
            let mut code: BTreeSet<Element> = BTreeSet::new();
            for i in 0..range {
                let j = if i == 0 {
                    0
                } else {
                    ((jvec >> (i - 1)) & 1) as u8
                };
                let coset = d_coset(g, &w.s, &w.sp, &w.s0, w.a, i as i64, j)
                    .expect("normalize guarantees o(s0) = 2");
                code.extend(coset);
            }
            if !is_perfect_code(&graph, &code_to_vertex_set(g, &code)) {
                return Err(ClassifyError::SelfVerification(format!(
                    "predicted code is not a perfect code: witness (m,l,h,a) = \
                     ({},{},{},{}), j-vector {:#b}",
                    w.m, w.l, w.h, w.a, jvec
                )));
            }
            out.insert(code);
        }
    }
    Ok(out.into_iter().collect())
}

/// Structural facts about a perfect code containing the identity, measured
/// in the as-given orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeStructureReport {
    /// Signs a for which d in D implies d + a s + s' + s0 in D.
    pub diagonal_signs: Vec<i64>,
    /// Every d in D has d - 3s or d - 3s - s0 in D.
    pub row_backstep: bool,
    /// Every d in D has d - 3s' or d - 3s' - s0 in D.
    pub column_backstep: bool,
    /// 2 divides o(s) o(s').
    pub even_order_product: bool,
}

/// Reports the diagonal closure, backstep, and parity structure of a given
/// perfect code containing the identity.
pub fn code_structure_report(
    g: &GroupSpec,
    set: &[Element],
    code: &BTreeSet<Element>,
) -> Result<CodeStructureReport, ClassifyError> {
    let outcome = normalize(g, set)?;
    let graph = cayley(g, set).expect("normalize validated the set");
    if !code.contains(&g.identity()) || !is_perfect_code(&graph, &code_to_vertex_set(g, code)) {
        return Err(ClassifyError::NotAPerfectCode);
    }
    let cand = match outcome {
        NormalizeOutcome::Candidates(c) => {
            let [as_given, _] = *c;
            as_given
        }
        NormalizeOutcome::TooManyInvolutions(count) => {
            return Err(ClassifyError::SelfVerification(format!(
                "a perfect code exists on a set with {count} involutions"
            )));
        }
    };
    let (s, sp, s0) = (&cand.s, &cand.sp, &cand.s0);
    let shifted_in = |x: &Element, delta: &Element| code.contains(&g.add(x, delta));
    let diagonal_signs = [1i64, -1]
        .into_iter()
        .filter(|&a| {
            let step = g.add(&g.add(&g.scale(a, s), sp), s0);
            code.iter().all(|d| shifted_in(d, &step))
        })
        .collect();
    let backstep = |gen: &Element| {
        let back = g.scale(-3, gen);
        let back_flipped = g.add(&back, &g.neg(s0));
        code.iter()
            .all(|d| shifted_in(d, &back) || shifted_in(d, &back_flipped))
    };
    Ok(CodeStructureReport {
        diagonal_signs,
        row_backstep: backstep(s),
        column_backstep: backstep(sp),
        even_order_product: (g.order_of(s) * g.order_of(sp)) % 2 == 0,
    })
}

/// The machine-readable verdict: field names and value spellings are stable.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerdictJson {
    pub admits: bool,
    pub case: Option<String>,
    pub m: Option<u64>,
    pub l: Option<u64>,
    pub h: Option<u64>,
    pub a_set: Vec<i64>,
    pub orientation: Option<String>,
    pub codes_containing_identity: Vec<Vec<String>>,
}

impl Classification {
    pub fn verdict(&self, codes: &[BTreeSet<Element>]) -> VerdictJson {
        VerdictJson {
            admits: self.admits,
            case: self.case_tag.map(|c| c.to_string()),
            m: self.params.map(|p| p.0),
            l: self.params.map(|p| p.1),
            h: self.params.map(|p| p.2),
            a_set: self.sign_set.clone(),
            orientation: self.orientation.map(|o| o.to_string()),
            codes_containing_identity: codes
                .iter()
                .map(|c| c.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(factors: &[u64]) -> GroupSpec {
        GroupSpec::new(factors.to_vec()).unwrap()
    }

    fn elements(g: &GroupSpec, raw: &[&[i64]]) -> Vec<Element> {
        raw.iter().map(|r| g.element(r).unwrap()).collect()
    }

    fn set(code: &[&[i64]], g: &GroupSpec) -> BTreeSet<Element> {
        code.iter().map(|r| g.element(r).unwrap()).collect()
    }

    #[test]
    fn derive_hl_desk_values() {
        let z6 = group(&[6]);
        let s = z6.element(&[1]).unwrap();
        let sp = z6.element(&[2]).unwrap();
        assert_eq!(derive_hl(&z6, &s, &sp), (6, 1, 4));

        let g = group(&[6, 2]);
        let s = g.element(&[1, 0]).unwrap();
        assert_eq!(derive_hl(&g, &s, &g.element(&[2, 0]).unwrap()), (6, 1, 4));
        assert_eq!(derive_hl(&g, &s, &g.element(&[4, 1]).unwrap()), (6, 2, 4));
    }

    #[test]
    fn normalize_splits_orientations() {
        let z6 = group(&[6]);
        let s = elements(&z6, &[&[1], &[5], &[2], &[4], &[3]]);
        let NormalizeOutcome::Candidates(c) = normalize(&z6, &s).unwrap() else {
            panic!("one involution expected");
        };
        assert_eq!(c[0].orientation, Orientation::AsGiven);
        assert_eq!(c[0].s, z6.element(&[1]).unwrap());
        assert_eq!(c[0].sp, z6.element(&[2]).unwrap());
        assert_eq!(c[0].s0, z6.element(&[3]).unwrap());
        assert_eq!((c[0].m, c[0].l, c[0].h), (6, 1, 4));
        assert_eq!(c[0].s0_category, SZeroCategory::HalfS);
        assert_eq!(c[1].orientation, Orientation::Swapped);
        assert_eq!(c[1].s, z6.element(&[2]).unwrap());
        assert_eq!((c[1].m, c[1].l, c[1].h), (3, 2, 2));
        assert_eq!(c[1].s0_category, SZeroCategory::Diagonal);
    }

    #[test]
    fn normalize_rejects_degenerate_sets() {
        let z6 = group(&[6]);
        assert_eq!(
            normalize(&z6, &elements(&z6, &[&[1], &[5], &[2], &[3]])).unwrap_err(),
            ClassifyError::NotQuintic(4)
        );
        assert_eq!(
            normalize(&z6, &elements(&z6, &[&[1], &[5], &[0], &[2], &[4]])).unwrap_err(),
            ClassifyError::ContainsIdentity
        );
        let z7 = group(&[7]);
        assert_eq!(
            normalize(&z7, &elements(&z7, &[&[1], &[6], &[2], &[5], &[3]])).unwrap_err(),
            ClassifyError::NotInverseClosed
        );
        let z12 = group(&[12]);
        assert_eq!(
            normalize(&z12, &elements(&z12, &[&[2], &[10], &[4], &[8], &[6]])).unwrap_err(),
            ClassifyError::NotGenerating
        );
    }

    #[test]
    fn normalize_counts_involutions() {
        let g = group(&[2, 2, 3]);
        let s = elements(
            &g,
            &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1], &[0, 0, 2]],
        );
        assert_eq!(
            normalize(&g, &s).unwrap(),
            NormalizeOutcome::TooManyInvolutions(3)
        );
    }

    #[test]
    fn complete_graph_classifies_as_half_turn() {
        let z6 = group(&[6]);
        let s = elements(&z6, &[&[1], &[5], &[2], &[4], &[3]]);
        let c = admits_perfect_code(&z6, &s).unwrap();
        assert!(c.admits);
        assert_eq!(c.case_tag, Some(CaseTag::II));
        assert_eq!(c.params, Some((6, 1, 4)));
        assert_eq!(c.sign_set, vec![1]);
        assert_eq!(c.orientation, Some(Orientation::AsGiven));
        assert_eq!(c.coset_range, Some(CosetRange::Third));
        assert_eq!(c.witnesses.len(), 1);

        let codes = enumerate_identity_codes(&z6, &s).unwrap();
        assert_eq!(codes, vec![set(&[&[0]], &z6)]);
    }

    #[test]
    fn prism_instance_classifies_as_case_one() {
        let g = group(&[6, 2]);
        let s = elements(&g, &[&[1, 0], &[5, 0], &[2, 0], &[4, 0], &[0, 1]]);
        let c = admits_perfect_code(&g, &s).unwrap();
        assert!(c.admits);
        assert_eq!(c.case_tag, Some(CaseTag::I));
        assert_eq!(c.params, Some((6, 1, 4)));
        assert_eq!(c.sign_set, vec![1]);

        let codes = enumerate_identity_codes(&g, &s).unwrap();
        assert_eq!(codes, vec![set(&[&[0, 0], &[3, 1]], &g)]);
    }

    #[test]
    fn diagonal_instance_classifies_as_case_three() {
        let g = group(&[6, 2]);
        let s = elements(&g, &[&[1, 0], &[5, 0], &[2, 1], &[4, 1], &[3, 1]]);
        let c = admits_perfect_code(&g, &s).unwrap();
        assert!(c.admits);
        assert_eq!(c.case_tag, Some(CaseTag::III));
        assert_eq!(c.params, Some((6, 2, 2)));
        assert_eq!(c.sign_set, vec![1]);
        assert_eq!(c.coset_range, Some(CosetRange::Third));
        // both orientations carry the diagonal witness here
        assert_eq!(c.witnesses.len(), 2);

        let codes = enumerate_identity_codes(&g, &s).unwrap();
        assert_eq!(
            codes,
            vec![set(&[&[0, 0], &[0, 1]], &g), set(&[&[0, 0], &[3, 0]], &g)]
        );
    }

    #[test]
    fn twelve_cycle_chord_set_does_not_admit() {
        let z12 = group(&[12]);
        let s = elements(&z12, &[&[1], &[11], &[2], &[10], &[6]]);
        let c = admits_perfect_code(&z12, &s).unwrap();
        assert!(!c.admits);
        assert_eq!(c.case_tag, None);
        assert_eq!(c.params, None);
        assert!(c.sign_set.is_empty());
        assert_eq!(c.involution_count, 1);
        assert!(enumerate_identity_codes(&z12, &s).unwrap().is_empty());
    }

    #[test]
    fn multi_involution_sets_never_admit() {
        let g = group(&[2, 2, 3]);
        let s = elements(
            &g,
            &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1], &[0, 0, 2]],
        );
        let c = admits_perfect_code(&g, &s).unwrap();
        assert!(!c.admits);
        assert_eq!(c.involution_count, 3);
        assert!(c.witnesses.is_empty());
    }

    #[test]
    fn structure_report_desk_values() {
        let z6 = group(&[6]);
        let s = elements(&z6, &[&[1], &[5], &[2], &[4], &[3]]);
        let report = code_structure_report(&z6, &s, &set(&[&[0]], &z6)).unwrap();
        assert_eq!(report.diagonal_signs, vec![1]);
        assert!(report.row_backstep);
        assert!(report.column_backstep);
        assert!(report.even_order_product);
        assert_eq!(
            code_structure_report(&z6, &s, &set(&[&[0], &[3]], &z6)).unwrap_err(),
            ClassifyError::NotAPerfectCode
        );

        let g = group(&[6, 2]);
        let s = elements(&g, &[&[1, 0], &[5, 0], &[2, 0], &[4, 0], &[0, 1]]);
        let report =
            code_structure_report(&g, &s, &set(&[&[0, 0], &[3, 1]], &g)).unwrap();
        assert_eq!(report.diagonal_signs, vec![1]);
        assert!(report.row_backstep && report.column_backstep);
    }

    #[test]
    fn verdict_serializes_stably() {
        let z6 = group(&[6]);
        let s = elements(&z6, &[&[1], &[5], &[2], &[4], &[3]]);
        let c = admits_perfect_code(&z6, &s).unwrap();
        let codes = enumerate_identity_codes(&z6, &s).unwrap();
        let json = serde_json::to_string(&c.verdict(&codes)).unwrap();
        assert_eq!(
            json,
            "{\"admits\":true,\"case\":\"II\",\"m\":6,\"l\":1,\"h\":4,\
             \"a_set\":[1],\"orientation\":\"as-given\",\
             \"codes_containing_identity\":[[\"(0)\"]]}"
        );
    }
}
