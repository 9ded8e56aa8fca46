//! Grid quotients and their quintic completions.
//!
//! `gamma(m, l, h)` is the 4-regular graph on `Z_m x Z_l` with row edges
//! `(a,b) ~ (a+1,b)`, column edges `(a,b) ~ (a,b+1)` for `b < l-1`, and wrap
//! edges `(a,l-1) ~ (a-h,0)`. It is the Cayley graph of the quotient of
//! `Z x Z` by the lattice spanned by `(m,0)` and `(h,l)`, with connection set
//! `{(1,0),(-1,0),(0,1),(0,-1)}`; the wrap parameter `h` records how the
//! column cycle re-enters row coordinates.
//!
//! Three 5-regular completions are used throughout:
//! - the prism `gamma x K2` (a new involution outside the grid group),
//! - `gamma_prime`: the half-turn matching `(a,b) ~ (a+m/2,b)`,
//! - `gamma_dprime`: the diagonal half-turn matching, translation by the
//!   group involution at shift `(m+h-lcm0(h,m))/2` rows and `l/2` columns.
//!
//! `PhiMap` relabels the grid onto `Z_{ml/tau} x Z_tau`, `tau = tau(h,l)`,
//! turning each completion into an explicit Cayley form on that product.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::abelian::{Element, GroupSpec};
use crate::classify::CaseTag;
use crate::graph::{cartesian_k2, Graph};
use crate::numtheory::{gcd_i, lcm0, sigma2, sigma2_product_nonzero, tau, ExtValuation};

/// A grid coordinate, optionally carrying a prism layer bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridVertex {
    pub a: u64,
    pub b: u64,
    pub layer: Option<u8>,
}

impl GridVertex {
    pub fn flat(a: u64, b: u64) -> Self {
        GridVertex { a, b, layer: None }
    }

    pub fn layered(a: u64, b: u64, k: u8) -> Self {
        debug_assert!(k < 2);
        GridVertex { a, b, layer: Some(k) }
    }
}

impl fmt::Display for GridVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.layer {
            None => write!(f, "({},{})", self.a, self.b),
            Some(k) => write!(f, "({},{},{k})", self.a, self.b),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("relabeling is not integral: tau = {tau} does not divide h = {h}")]
    NotIntegral { tau: u64, h: u64 },
}

fn degenerate(msg: impl Into<String>) -> ConstructError {
    ConstructError::DegenerateParameters(msg.into())
}

/// Vertex index of `(a, b)` in `gamma(m, l, h)`: row-major, `a * l + b`.
pub fn grid_index(l: u64, a: u64, b: u64) -> usize {
    (a * l + b) as usize
}

/// Vertex index of a grid vertex in `gamma` (no layer) or in
/// `cartesian_k2(gamma)` (layer present; the layer bit is least significant).
pub fn grid_vertex_index(l: u64, v: &GridVertex) -> usize {
    match v.layer {
        None => grid_index(l, v.a, v.b),
        Some(k) => 2 * grid_index(l, v.a, v.b) + k as usize,
    }
}

fn gamma_edges(m: u64, l: u64, h: u64) -> Result<BTreeSet<(usize, usize)>, ConstructError> {
    if m == 0 || l == 0 {
        return Err(degenerate("grid needs m >= 1 and l >= 1"));
    }
    let h = h % m;
    let mut edges = BTreeSet::new();
    let mut insert = |u: usize, v: usize| -> Result<(), ConstructError> {
        if u == v {
            return Err(degenerate(format!("loop at vertex {u}")));
        }
        edges.insert((u.min(v), u.max(v)));
        Ok(())
    };
    for a in 0..m {
        for b in 0..l {
            insert(grid_index(l, a, b), grid_index(l, (a + 1) % m, b))?;
            if b + 1 < l {
                insert(grid_index(l, a, b), grid_index(l, a, b + 1))?;
            }
        }
        insert(grid_index(l, a, l - 1), grid_index(l, (a + m - h) % m, 0))?;
    }
    Ok(edges)
}

fn grid_labels(m: u64, l: u64) -> Vec<String> {
    let mut labels = Vec::with_capacity((m * l) as usize);
    for a in 0..m {
        for b in 0..l {
            labels.push(GridVertex::flat(a, b).to_string());
        }
    }
    labels
}

fn finish_grid(
    m: u64,
    l: u64,
    edges: BTreeSet<(usize, usize)>,
    expect_degree: usize,
) -> Result<Graph, ConstructError> {
    let g = Graph::from_edges((m * l) as usize, &edges, Some(grid_labels(m, l)));
    if g.regular_degree() != Some(expect_degree) {
        return Err(degenerate(format!(
            "edge families collide: graph is not {expect_degree}-regular"
        )));
    }
    Ok(g)
}

/// The 4-regular grid quotient on `Z_m x Z_l` with wrap parameter `h`.
pub fn gamma(m: u64, l: u64, h: u64) -> Result<Graph, ConstructError> {
    finish_grid(m, l, gamma_edges(m, l, h)?, 4)
}

/// `gamma` plus the half-turn matching `(a,b) ~ (a + m/2, b)`; needs `2 | m`.
pub fn gamma_prime(m: u64, l: u64, h: u64) -> Result<Graph, ConstructError> {
    if m % 2 != 0 {
        return Err(degenerate("half-turn matching needs 2 | m"));
    }
    let mut edges = gamma_edges(m, l, h)?;
    for a in 0..m {
        for b in 0..l {
            let u = grid_index(l, a, b);
            let v = grid_index(l, (a + m / 2) % m, b);
            edges.insert((u.min(v), u.max(v)));
        }
    }
    finish_grid(m, l, edges, 5)
}

/// Row shift of the diagonal half-turn matching, reduced into `[0, m)`.
///
/// The raw value `(m + h - lcm0(h, m)) / 2` is the unique row offset whose
/// double is `h` modulo `m` along the direction the wrap identification
/// `(i, j) == (i - h, j - l)` prescribes; `lcm0(h, m) = 0` at `h = 0` makes
/// the shift degrade to `m / 2` there.
pub fn dprime_shift(m: u64, h: u64) -> u64 {
    let raw = (m + h) as i128 - lcm0(h, m) as i128;
    debug_assert!(raw % 2 == 0, "shift must be integral");
    ((raw / 2).rem_euclid(m as i128)) as u64
}

/// `gamma` plus the diagonal half-turn matching
/// `(a, b) ~ (a + shift, b + l/2)`, partners above `l/2` wrapped through the
/// identification `(i, j) == (i - h, j - l)`. Needs
/// `sigma2(h) >= sigma2(m) >= 1` and `sigma2(l) >= 1`.
pub fn gamma_dprime(m: u64, l: u64, h: u64) -> Result<Graph, ConstructError> {
    if m == 0 || l == 0 {
        return Err(degenerate("grid needs m >= 1 and l >= 1"));
    }
    let h = h % m;
    let (sh, sm, sl) = (sigma2(h as i64), sigma2(m as i64), sigma2(l as i64));
    if !(sh >= sm && sm >= ExtValuation::Finite(1) && sl >= ExtValuation::Finite(1)) {
        return Err(degenerate(
            "diagonal matching needs sigma2(h) >= sigma2(m) >= 1 and sigma2(l) >= 1",
        ));
    }
    let mut edges = gamma_edges(m, l, h)?;
    let shift = dprime_shift(m, h);
    for a in 0..m {
        for b in 0..l / 2 {
            let u = grid_index(l, a, b);
            let v = grid_index(l, (a + shift) % m, b + l / 2);
            edges.insert((u.min(v), u.max(v)));
        }
    }
    finish_grid(m, l, edges, 5)
}

/// The four grid completions, named by how the fifth edge is attached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Plain,
    TimesK2,
    Prime,
    DPrime,
}

/// Grid-side graph of a variant.
pub fn grid_graph(variant: Variant, m: u64, l: u64, h: u64) -> Result<Graph, ConstructError> {
    match variant {
        Variant::Plain => gamma(m, l, h),
        Variant::TimesK2 => Ok(cartesian_k2(&gamma(m, l, h)?)),
        Variant::Prime => gamma_prime(m, l, h),
        Variant::DPrime => gamma_dprime(m, l, h),
    }
}

/// The grid-to-Cayley relabeling `(a, b) -> ((l a - h b)/tau, b)` on
/// `Z_{ml/tau} x Z_tau` with `tau = tau(h, l)`.
///
/// `tau` always divides `l`; the map is integral exactly when `tau` also
/// divides `h`, otherwise [`PhiMap::new`] reports [`ConstructError::NotIntegral`].
#[derive(Clone, Debug)]
pub struct PhiMap {
    m: u64,
    l: u64,
    h: u64,
    tau: u64,
}

impl PhiMap {
    pub fn new(m: u64, l: u64, h: u64) -> Result<Self, ConstructError> {
        if m == 0 || l == 0 {
            return Err(degenerate("relabeling needs m >= 1 and l >= 1"));
        }
        let h = h % m;
        let t = tau(h, l);
        if h % t != 0 {
            return Err(ConstructError::NotIntegral { tau: t, h });
        }
        Ok(PhiMap { m, l, h, tau: t })
    }

    pub fn tau(&self) -> u64 {
        self.tau
    }

    /// Image of grid coordinates as a raw pair in `Z_{ml/tau} x Z_tau`.
    pub fn apply(&self, a: u64, b: u64) -> (u64, u64) {
        debug_assert!(a < self.m && b < self.l);
        let num = self.l as i128 * a as i128 - self.h as i128 * b as i128;
        debug_assert_eq!(num.rem_euclid(self.tau as i128), 0, "tau divides l and h");
        let modulus = (self.m * self.l / self.tau) as i128;
        let x = (num / self.tau as i128).rem_euclid(modulus) as u64;
        (x, b % self.tau)
    }

    fn full_factors(&self, with_layer: bool) -> Vec<u64> {
        let mut f = vec![self.m * self.l / self.tau, self.tau];
        if with_layer {
            f.push(2);
        }
        f
    }

    /// Target group with trivial `Z_1` factors dropped.
    pub fn spec(&self, with_layer: bool) -> GroupSpec {
        let factors: Vec<u64> = self
            .full_factors(with_layer)
            .into_iter()
            .filter(|&d| d >= 2)
            .collect();
        GroupSpec::new(factors).expect("first factor is at least 2")
    }

    /// Element of the compressed target group from raw signed coordinates
    /// on `Z_{ml/tau} x Z_tau (x Z_2)`.
    pub fn element_from_raw(&self, x: i64, y: i64, layer: Option<i64>) -> Element {
        let full = self.full_factors(layer.is_some());
        let coords = [Some(x), Some(y), layer];
        let kept: Vec<i64> = full
            .iter()
            .zip(coords)
            .filter(|(&d, _)| d >= 2)
            .map(|(_, c)| c.unwrap())
            .collect();
        self.spec(layer.is_some())
            .element(&kept)
            .expect("coordinate count matches compressed spec")
    }

    /// Image of a grid vertex as an element of the compressed target group.
    pub fn image_element(&self, a: u64, b: u64, layer: Option<u8>) -> Element {
        let (x, y) = self.apply(a, b);
        self.element_from_raw(x as i64, y as i64, layer.map(i64::from))
    }

    /// Images of the four grid generators: `+-(l/tau, 0)` and `+-(-h/tau, 1)`.
    pub fn base_connection(&self, with_layer: bool) -> Vec<Element> {
        let layer = with_layer.then_some(0);
        let (lt, ht) = ((self.l / self.tau) as i64, (self.h / self.tau) as i64);
        vec![
            self.element_from_raw(lt, 0, layer),
            self.element_from_raw(-lt, 0, layer),
            self.element_from_raw(-ht, 1, layer),
            self.element_from_raw(ht, -1, layer),
        ]
    }
}

/// Cayley form of a grid completion: the relabeled group and connection set.
///
/// Gated by the same degeneracy checks as the grid side, plus integrality of
/// the relabeling; the returned set feeds [`crate::graph::cayley`] directly.
pub fn cayley_form(
    variant: Variant,
    m: u64,
    l: u64,
    h: u64,
) -> Result<(GroupSpec, Vec<Element>), ConstructError> {
    gamma(m, l, h)?;
    let h = h % m;
    let phi = PhiMap::new(m, l, h)?;
    let with_layer = variant == Variant::TimesK2;
    let mut set = phi.base_connection(with_layer);
    match variant {
        Variant::Plain => {}
        Variant::TimesK2 => set.push(phi.element_from_raw(0, 0, Some(1))),
        Variant::Prime => {
            if m % 2 != 0 {
                return Err(degenerate("half-turn matching needs 2 | m"));
            }
            set.push(phi.element_from_raw((m * l / (2 * phi.tau)) as i64, 0, None));
        }
        Variant::DPrime => {
            let (sh, sm, sl) = (sigma2(h as i64), sigma2(m as i64), sigma2(l as i64));
            if !(sh >= sm && sm >= ExtValuation::Finite(1) && sl >= ExtValuation::Finite(1)) {
                return Err(degenerate(
                    "diagonal matching needs sigma2(h) >= sigma2(m) >= 1 and sigma2(l) >= 1",
                ));
            }
            let x = (l as i128 * (m + lcm0(m, h)) as i128 / (2 * phi.tau as i128)) as i64;
            set.push(phi.element_from_raw(x, (l / 2) as i64, None));
        }
    }
    Ok((phi.spec(with_layer), set))
}

/// Index ranges for code families: `b/3` or `b/6` coset representatives,
/// where `b = gcd(l - a h, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetRange {
    Third,
    Sixth,
}

/// `b = gcd(l - a h, m)`, with `gcd(0, m) = m`.
pub fn b_param(m: u64, l: u64, h: u64, a: i64) -> u64 {
    gcd_i(l as i64 - a * h as i64, m as i64)
}

/// Number of coset representatives, `None` when the division is not exact.
pub fn range_len(m: u64, l: u64, h: u64, a: i64, range: CosetRange) -> Option<u64> {
    let b = b_param(m, l, h, a);
    let d = match range {
        CosetRange::Third => 3,
        CosetRange::Sixth => 6,
    };
    (b % d == 0 && b / d > 0).then(|| b / d)
}

/// Shared admissibility frame: `l >= 1`, `0 <= h < m`, `6 | m`, `3 | (l - a h)`.
pub fn shared_constraints(m: u64, l: u64, h: u64, a: i64) -> bool {
    m >= 1
        && l >= 1
        && h < m
        && m % 6 == 0
        && (l as i64 - a * h as i64).rem_euclid(3) == 0
}

/// Valuation pattern under which the prism completion `gamma x K2` admits
/// perfect codes: `sigma2(h) sigma2(l) != 0` or `sigma2(m) > sigma2(l - a h)`.
pub fn k2_condition(m: u64, l: u64, h: u64, a: i64) -> bool {
    let lah = l as i64 - a * h as i64;
    sigma2_product_nonzero(h as i64, l as i64) || sigma2(m as i64) > sigma2(lah)
}

/// Valuation pattern for the half-turn completion `gamma_prime`, with the
/// coset range its code families use:
/// `sigma2(l) = 0` and `sigma2(m) = sigma2(l - a h) + 1` (range `b/3`), or
/// `sigma2(h) sigma2(l) != 0` and `sigma2(m) <= sigma2(l - a h)` (range `b/6`).
pub fn prime_condition(m: u64, l: u64, h: u64, a: i64) -> Option<CosetRange> {
    let lah = l as i64 - a * h as i64;
    let (sm, sl) = (sigma2(m as i64), sigma2(l as i64));
    let bumped = match sigma2(lah) {
        ExtValuation::Finite(v) => ExtValuation::Finite(v + 1),
        ExtValuation::Infinity => ExtValuation::Infinity,
    };
    if sl.is_zero() && sm == bumped {
        Some(CosetRange::Third)
    } else if sigma2_product_nonzero(h as i64, l as i64) && sm <= sigma2(lah) {
        Some(CosetRange::Sixth)
    } else {
        None
    }
}

/// Valuation pattern for the diagonal half-turn completion `gamma_dprime`:
/// `sigma2(h) >= sigma2(m) = sigma2(l) = 1` (range `b/3`), or
/// `sigma2(h) >= sigma2(m) > sigma2(l) >= 1` (range `b/6`).
pub fn dprime_condition(m: u64, l: u64, h: u64, _a: i64) -> Option<CosetRange> {
    let one = ExtValuation::Finite(1);
    let (sh, sm, sl) = (sigma2(h as i64), sigma2(m as i64), sigma2(l as i64));
    if sh >= sm && sm == one && sl == one {
        Some(CosetRange::Third)
    } else if sh >= sm && sm > sl && sl >= one {
        Some(CosetRange::Sixth)
    } else {
        None
    }
}

/// Canonical Cayley form for a classification case.
///
/// Case I is the prism completion, case II the half-turn completion, case III
/// the diagonal half-turn completion. The parameters must satisfy the shared
/// frame and the case's valuation pattern for at least one sign `a`.
pub fn canonical_form(
    case: CaseTag,
    m: u64,
    l: u64,
    h: u64,
) -> Result<(GroupSpec, Vec<Element>), ConstructError> {
    if m == 0 {
        return Err(degenerate("grid needs m >= 1"));
    }
    let h = h % m;
    let variant = match case {
        CaseTag::I => Variant::TimesK2,
        CaseTag::II => Variant::Prime,
        CaseTag::III => Variant::DPrime,
    };
    let admissible = [1i64, -1].into_iter().any(|a| {
        shared_constraints(m, l, h, a)
            && match case {
                CaseTag::I => k2_condition(m, l, h, a),
                CaseTag::II => prime_condition(m, l, h, a).is_some(),
                CaseTag::III => dprime_condition(m, l, h, a).is_some(),
            }
    });
    if !admissible {
        return Err(degenerate(format!(
            "parameters (m,l,h) = ({m},{l},{h}) do not satisfy the case {case} pattern for any sign"
        )));
    }
    cayley_form(variant, m, l, h)
}
