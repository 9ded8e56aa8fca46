//! Explicit perfect-code families on the grid completions, and the coset
//! generator behind the identity-code enumeration.
//!
//! Each family is generated from its membership congruence, quantified over
//! coset representatives `r` with one toggle bit `t_r` per representative.
//! The closed parametric orbit descriptions of the same sets are kept as a
//! diagnostic only ([`parametric_family`]); on instances where an orbit
//! description underfills or collides, the congruence is the one that
//! produces a perfect code, so it is normative here.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::abelian::{Element, GroupSpec};
use crate::constructions::{
    b_param, dprime_condition, grid_vertex_index, k2_condition, prime_condition, range_len,
    shared_constraints, CosetRange, GridVertex,
};
use crate::graph::VertexSet;
use crate::numtheory::{alpha, lcm0, sigma2, ExtValuation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("hypotheses unmet: {0}")]
    HypothesisViolation(String),
    #[error("toggle vector has {got} entries, the coset range needs {expected}")]
    TVectorLength { expected: usize, got: usize },
    #[error("the fifth generator must have order exactly 2")]
    InvalidInvolution,
}

fn violated(msg: impl Into<String>) -> CodeError {
    CodeError::HypothesisViolation(msg.into())
}

/// Parameters of a code family: grid shape `(m, l, h)`, diagonal sign `a`,
/// and one toggle bit per coset representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFamilyParams {
    pub m: u64,
    pub l: u64,
    pub h: u64,
    pub a: i64,
    pub t: Vec<u8>,
}

impl CodeFamilyParams {
    pub fn new(m: u64, l: u64, h: u64, a: i64, t: Vec<u8>) -> Result<Self, CodeError> {
        if m == 0 || l == 0 {
            return Err(violated("grid needs m >= 1 and l >= 1"));
        }
        if a != 1 && a != -1 {
            return Err(violated("diagonal sign a must be +1 or -1"));
        }
        if t.iter().any(|&bit| bit > 1) {
            return Err(violated("toggle entries must be 0 or 1"));
        }
        let h = h % m;
        if !shared_constraints(m, l, h, a) {
            return Err(violated("needs 6 | m and 3 | (l - a h)"));
        }
        Ok(CodeFamilyParams { m, l, h, a, t })
    }

    /// `gcd(l - a h, m)`, the column-return invariant the coset ranges divide.
    pub fn b(&self) -> u64 {
        b_param(self.m, self.l, self.h, self.a)
    }

    pub fn alpha_l(&self) -> u64 {
        alpha(self.l as i64)
    }

    /// Row-congruence divisor for the diagonal family: 1 when
    /// `sigma2(m) = 1`, otherwise 2.
    pub fn beta(&self) -> u64 {
        if sigma2(self.m as i64) == ExtValuation::Finite(1) {
            1
        } else {
            2
        }
    }

    fn expect_t_len(&self, range: CosetRange) -> Result<usize, CodeError> {
        let expected = range_len(self.m, self.l, self.h, self.a, range)
            .ok_or_else(|| violated("coset range does not divide b"))?
            as usize;
        if self.t.len() != expected {
            return Err(CodeError::TVectorLength {
                expected,
                got: self.t.len(),
            });
        }
        Ok(expected)
    }
}

fn collect_flat<F: Fn(i64, i64) -> bool>(m: u64, l: u64, member: F) -> Vec<GridVertex> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..l {
            if member(i as i64, j as i64) {
                out.push(GridVertex::flat(i, j));
            }
        }
    }
    out
}

/// Perfect-code family on the prism `gamma(m,l,h) x K2`; `|C| = m l / 3`.
///
/// Membership for `(i, j, k)`: some representative `r` has
/// `i - 3r = a j (mod b)` and `k = j + t_r (mod 2)` when `l` is even, or
/// `a (i - 3r) = b (k - t_r) + (b + 1) j (mod 2b)` when `l` is odd.
pub fn code_family_k2(p: &CodeFamilyParams) -> Result<Vec<GridVertex>, CodeError> {
    if !k2_condition(p.m, p.l, p.h, p.a) {
        return Err(violated(
            "needs sigma2(h) sigma2(l) != 0 or sigma2(m) > sigma2(l - a h)",
        ));
    }
    let rlen = p.expect_t_len(CosetRange::Third)?;
    let b = p.b() as i64;
    let even_l = p.l % 2 == 0;
    let mut out = Vec::new();
    for i in 0..p.m as i64 {
        for j in 0..p.l as i64 {
            for k in 0..2i64 {
                let hit = (0..rlen).any(|r| {
                    let (r, tr) = (r as i64, p.t[r] as i64);
                    if even_l {
                        (i - 3 * r - p.a * j).rem_euclid(b) == 0
                            && (k - j - tr).rem_euclid(2) == 0
                    } else {
                        (p.a * (i - 3 * r) - b * (k - tr) - (b + 1) * j).rem_euclid(2 * b) == 0
                    }
                });
                if hit {
                    out.push(GridVertex::layered(i as u64, j as u64, k as u8));
                }
            }
        }
    }
    Ok(out)
}

/// Perfect-code family on the half-turn completion `gamma_prime(m,l,h)`;
/// `|C| = m l / 6`.
///
/// Membership for `(i, j)`: some `r` has
/// `i - 3r - b t_r / alpha(l) = (b / alpha(l) + a) j (mod 2b / alpha(l))`.
pub fn code_family_prime(p: &CodeFamilyParams) -> Result<Vec<GridVertex>, CodeError> {
    let Some(range) = prime_condition(p.m, p.l, p.h, p.a) else {
        return Err(violated(
            "needs sigma2(l) = 0 with sigma2(m) = sigma2(l - a h) + 1, \
             or sigma2(h) sigma2(l) != 0 with sigma2(m) <= sigma2(l - a h)",
        ));
    };
    let rlen = p.expect_t_len(range)?;
    let (b, al) = (p.b() as i64, p.alpha_l() as i64);
    debug_assert_eq!(b % al, 0);
    let modulus = 2 * b / al;
    Ok(collect_flat(p.m, p.l, |i, j| {
        (0..rlen).any(|r| {
            let (r, tr) = (r as i64, p.t[r] as i64);
            (i - 3 * r - b * tr / al - (b / al + p.a) * j).rem_euclid(modulus) == 0
        })
    }))
}

/// Perfect-code family on the diagonal half-turn completion
/// `gamma_dprime(m,l,h)`; `|C| = m l / 6`.
///
/// Membership for `(i, j)`: when `sigma2(l) >= 2`, some `r` has
/// `a (i - 3r) = (b/2 + 1) j + b t_r / 2 (mod b)`; when `sigma2(l) = 1`,
/// some `r` has `j = t_r (mod 2)` and `i - 3r = a j (mod b / beta)`.
pub fn code_family_dprime(p: &CodeFamilyParams) -> Result<Vec<GridVertex>, CodeError> {
    let Some(range) = dprime_condition(p.m, p.l, p.h, p.a) else {
        return Err(violated(
            "needs sigma2(h) >= sigma2(m) = sigma2(l) = 1 \
             or sigma2(h) >= sigma2(m) > sigma2(l) >= 1",
        ));
    };
    let rlen = p.expect_t_len(range)?;
    let b = p.b() as i64;
    if sigma2(p.l as i64) >= ExtValuation::Finite(2) {
        debug_assert_eq!(b % 2, 0);
        Ok(collect_flat(p.m, p.l, |i, j| {
            (0..rlen).any(|r| {
                let (r, tr) = (r as i64, p.t[r] as i64);
                (p.a * (i - 3 * r) - (b / 2 + 1) * j - b * tr / 2).rem_euclid(b) == 0
            })
        }))
    } else {
        let beta = p.beta() as i64;
        debug_assert_eq!(b % beta, 0);
        Ok(collect_flat(p.m, p.l, |i, j| {
            (0..rlen).any(|r| {
                let (r, tr) = (r as i64, p.t[r] as i64);
                (j - tr).rem_euclid(2) == 0 && (i - 3 * r - p.a * j).rem_euclid(b / beta) == 0
            })
        }))
    }
}

/// The three code families, named by the completion they live on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    K2,
    Prime,
    DPrime,
}

/// Generates a family through the given interface.
pub fn code_family(family: Family, p: &CodeFamilyParams) -> Result<Vec<GridVertex>, CodeError> {
    match family {
        Family::K2 => code_family_k2(p),
        Family::Prime => code_family_prime(p),
        Family::DPrime => code_family_dprime(p),
    }
}

/// The closed orbit description of a family: diagonal orbits
/// `j -> (3r + a j, j)` decorated per family. Diagnostic only; see
/// [`parametric_agrees`].
pub fn parametric_family(
    family: Family,
    p: &CodeFamilyParams,
) -> Result<Vec<GridVertex>, CodeError> {
    // same gating as the congruence generators
    match family {
        Family::K2 => {
            if !k2_condition(p.m, p.l, p.h, p.a) {
                return Err(violated("prism family hypotheses unmet"));
            }
            p.expect_t_len(CosetRange::Third)?;
        }
        Family::Prime => {
            let range = prime_condition(p.m, p.l, p.h, p.a)
                .ok_or_else(|| violated("half-turn family hypotheses unmet"))?;
            p.expect_t_len(range)?;
        }
        Family::DPrime => {
            let range = dprime_condition(p.m, p.l, p.h, p.a)
                .ok_or_else(|| violated("diagonal family hypotheses unmet"))?;
            p.expect_t_len(range)?;
        }
    }
    let (m, l) = (p.m as i64, p.l as i64);
    let period = lcm0(lcm0(p.m, p.l), 2) as i64;
    let mut set = BTreeSet::new();
    for (r, &tr) in p.t.iter().enumerate() {
        let (r, tr) = (r as i64, tr as i64);
        for j in 0..period {
            let diag = 3 * r + p.a * j;
            match family {
                Family::K2 => {
                    set.insert(GridVertex::layered(
                        diag.rem_euclid(m) as u64,
                        j.rem_euclid(l) as u64,
                        (j + tr).rem_euclid(2) as u8,
                    ));
                }
                Family::Prime => {
                    let i = diag + (j + tr) * (m / 2);
                    set.insert(GridVertex::flat(
                        i.rem_euclid(m) as u64,
                        j.rem_euclid(l) as u64,
                    ));
                }
                Family::DPrime => {
                    let shift2 = m + p.h as i64 - lcm0(p.m, p.h) as i64;
                    let i = diag + (j + tr) * shift2 / 2;
                    let col = j + (j + tr) * (l / 2);
                    set.insert(GridVertex::flat(
                        i.rem_euclid(m) as u64,
                        col.rem_euclid(l) as u64,
                    ));
                }
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// True when the orbit description reproduces the congruence family exactly.
pub fn parametric_agrees(family: Family, p: &CodeFamilyParams) -> Result<bool, CodeError> {
    let congruence: BTreeSet<GridVertex> = code_family(family, p)?.into_iter().collect();
    let parametric: BTreeSet<GridVertex> = parametric_family(family, p)?.into_iter().collect();
    Ok(congruence == parametric)
}

/// Converts grid vertices to graph indices (`l` = column count; layered
/// vertices index into the prism).
pub fn to_vertex_set(code: &[GridVertex], l: u64) -> VertexSet {
    code.iter().map(|v| grid_vertex_index(l, v)).collect()
}

/// One diagonal coset `D^a(i, j)`: the elements
/// `(3i + a r) s + r s' + (r + j) s0` for `r` over `lcm(o(s), o(s'), 2)`.
pub fn d_coset(
    g: &GroupSpec,
    s: &Element,
    sp: &Element,
    s0: &Element,
    a: i64,
    i: i64,
    j: u8,
) -> Result<BTreeSet<Element>, CodeError> {
    assert!(a == 1 || a == -1, "diagonal sign a must be +1 or -1");
    if g.order_of(s0) != 2 {
        return Err(CodeError::InvalidInvolution);
    }
    let period = lcm0(lcm0(g.order_of(s), g.order_of(sp)), 2) as i64;
    let mut coset = BTreeSet::new();
    for r in 0..period {
        let x = g.add(
            &g.add(&g.scale(3 * i + a * r, s), &g.scale(r, sp)),
            &g.scale(r + j as i64, s0),
        );
        coset.insert(x);
    }
    Ok(coset)
}
