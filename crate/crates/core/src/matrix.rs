//! Fraction-free exact linear algebra over the rings of the pipeline:
//! Bareiss determinants and elementary-ideal minor gcds, generic over a
//! ring context.

use alloc::vec::Vec;

use crate::algebra::{CycloLaurent, LaurentPoly};
use alloc::string::String;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Ring operations threaded through the generic determinant and minor-gcd
/// code. `exact_div` must succeed on the divisions Bareiss produces; `gcd`
/// returns a normalized representative.
pub trait RingCtx {
    type El: Clone + PartialEq + core::fmt::Debug;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn exact_div(&self, a: &Self::El, b: &Self::El) -> Option<Self::El>;
    fn gcd(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn is_unit(&self, a: &Self::El) -> bool;
    fn normalize(&self, a: &Self::El) -> Self::El;
}

pub struct IntCtx;

impl RingCtx for IntCtx {
    type El = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
    fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.gcd(b)
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn normalize(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
}

pub struct LaurentCtx {
    pub vars: Vec<String>,
}

impl RingCtx for LaurentCtx {
    type El = LaurentPoly;
    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(&self.vars)
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one(&self.vars)
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a + b
    }
    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a - b
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a * b
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        a.neg()
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
    fn exact_div(&self, a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
        a.exact_div(b).ok()
    }
    fn gcd(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.gcd(b).expect("gcd operands share variables")
    }
    fn is_unit(&self, a: &LaurentPoly) -> bool {
        a.is_unit()
    }
    fn normalize(&self, a: &LaurentPoly) -> LaurentPoly {
        a.normalize_unit()
    }
}

pub struct CycloCtx {
    pub order: u32,
}

impl RingCtx for CycloCtx {
    type El = CycloLaurent;
    fn zero(&self) -> CycloLaurent {
        CycloLaurent::zero(self.order)
    }
    fn one(&self) -> CycloLaurent {
        CycloLaurent::one(self.order)
    }
    fn add(&self, a: &CycloLaurent, b: &CycloLaurent) -> CycloLaurent {
        a.add(b)
    }
    fn sub(&self, a: &CycloLaurent, b: &CycloLaurent) -> CycloLaurent {
        a.sub(b)
    }
    fn mul(&self, a: &CycloLaurent, b: &CycloLaurent) -> CycloLaurent {
        a.mul(b)
    }
    fn neg(&self, a: &CycloLaurent) -> CycloLaurent {
        a.neg()
    }
    fn is_zero(&self, a: &CycloLaurent) -> bool {
        a.is_zero()
    }
    fn exact_div(&self, a: &CycloLaurent, b: &CycloLaurent) -> Option<CycloLaurent> {
        a.exact_div(b)
    }
    fn gcd(&self, a: &CycloLaurent, b: &CycloLaurent) -> CycloLaurent {
        a.gcd(b)
    }
    fn is_unit(&self, a: &CycloLaurent) -> bool {
        CycloLaurent::is_unit(a)
    }
    fn normalize(&self, a: &CycloLaurent) -> CycloLaurent {
        a.normalize_unit()
    }
}

/// Fraction-free Bareiss determinant with row pivoting.
pub fn bareiss_det<C: RingCtx>(ctx: &C, mut m: Vec<Vec<C::El>>) -> C::El {
    let n = m.len();
    if n == 0 {
        return ctx.one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign_neg = false;
    let mut prev = ctx.one();
    for k in 0..n {
        if ctx.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ctx.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(k, i);
                    sign_neg = !sign_neg;
                }
                None => return ctx.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ctx.sub(
                    &ctx.mul(&m[k][k], &m[i][j]),
                    &ctx.mul(&m[i][k], &m[k][j]),
                );
                m[i][j] = ctx
                    .exact_div(&t, &prev)
                    .expect("Bareiss division is exact");
            }
            m[i][k] = ctx.zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_neg {
        ctx.neg(&d)
    } else {
        d
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// gcd of all s×s minors of an r×c matrix (the elementary ideal E_{r−s}
/// generator candidate). Stops early when the running gcd becomes a unit.
pub fn minor_gcd<C: RingCtx>(ctx: &C, m: &[Vec<C::El>], s: usize) -> C::El {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    if s == 0 {
        return ctx.one();
    }
    if s > rows || s > cols {
        return ctx.zero();
    }
    let mut g = ctx.zero();
    for ri in combinations(rows, s) {
        for ci in combinations(cols, s) {
            let sub: Vec<Vec<C::El>> = ri
                .iter()
                .map(|&i| ci.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            let det = bareiss_det(ctx, sub);
            if ctx.is_zero(&det) {
                continue;
            }
            g = if ctx.is_zero(&g) { det } else { ctx.gcd(&g, &det) };
            if ctx.is_unit(&g) {
                return ctx.normalize(&g);
            }
        }
    }
    ctx.normalize(&g)
}

/// gcd of all (rows−1)×(rows−1) minors of a Fox matrix, using the Fox
/// fundamental identity to avoid enumerating row deletions.
///
/// `weights[i]` = abelianized (assignment(gᵢ) − 1). The weighted rows sum to
/// zero columnwise, so for a fixed column selection J the row-deleted minors
/// D_i form a vector proportional to the weights: D_i·w_ℓ = ±D_ℓ·w_i. The
/// gcd over all row deletions is then D_{i₀}·gcd(w)/w_{i₀} for any single
/// row i₀ with nonzero weight.
pub fn fox_minor_gcd<C: RingCtx>(
    ctx: &C,
    m: &[Vec<C::El>],
    weights: &[C::El],
) -> C::El {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let s = rows.saturating_sub(1);
    if s == 0 {
        return ctx.one();
    }
    if s > cols {
        return ctx.zero();
    }
    let i0 = match weights.iter().position(|w| !ctx.is_zero(w)) {
        Some(i) => i,
        // All weights zero cannot happen for genuine assignments; fall back.
        None => return minor_gcd(ctx, m, s),
    };
    let w0 = &weights[i0];
    let mut wgcd = ctx.zero();
    for w in weights {
        if ctx.is_zero(w) {
            continue;
        }
        wgcd = if ctx.is_zero(&wgcd) { w.clone() } else { ctx.gcd(&wgcd, w) };
    }
    let keep_rows: Vec<usize> = (0..rows).filter(|&i| i != i0).collect();
    let mut g = ctx.zero();
    for ci in combinations(cols, s) {
        let sub: Vec<Vec<C::El>> = keep_rows
            .iter()
            .map(|&i| ci.iter().map(|&j| m[i][j].clone()).collect())
            .collect();
        let d0 = bareiss_det(ctx, sub);
        if ctx.is_zero(&d0) {
            continue;
        }
        // gcd over all row deletions for this column set: d0·wgcd/w0.
        let num = ctx.mul(&d0, &wgcd);
        let dj = match ctx.exact_div(&num, w0) {
            Some(v) => v,
            // Over ℤ[ζ][t] the weight gcd is only defined up to a field
            // scalar, so the division can fail by a constant; fall back to
            // the full row/column enumeration in that case.
            None => return minor_gcd(ctx, m, s),
        };
        g = if ctx.is_zero(&g) { dj } else { ctx.gcd(&g, &dj) };
        if ctx.is_unit(&g) {
            return ctx.normalize(&g);
        }
    }
    ctx.normalize(&g)
}
