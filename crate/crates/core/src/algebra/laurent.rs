use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::cyclo::{CycloElem, CycloLaurent};
use super::AlgebraError;

/// Graded-lexicographic order on exponent vectors (the artifact's canonical
/// term order for serialization and leading-term selection).
pub(crate) fn grlex(a: &[i64], b: &[i64]) -> Ordering {
    let ga: i64 = a.iter().sum();
    let gb: i64 = b.iter().sum();
    ga.cmp(&gb).then_with(|| a.cmp(b))
}

/// Exact multivariate Laurent polynomial over arbitrary-precision integers.
///
/// Exponents may be negative; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &[String]) -> Self {
        LaurentPoly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c.into());
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, 1)
    }

    pub fn monomial(vars: &[String], exps: &[i64], coeff: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = Self::zero(vars);
        p.add_term(exps.to_vec(), coeff.into());
        p
    }

    pub fn var(vars: &[String], name: &str) -> Self {
        let i = vars.iter().position(|v| v == name).expect("unknown variable");
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Self::monomial(vars, &exps, 1)
    }

    /// Univariate convenience constructor: terms as (exponent, coefficient).
    pub fn from_univ_terms(var: &str, terms: &[(i64, i64)]) -> Self {
        let vars = vec![var.to_string()];
        let mut p = Self::zero(&vars);
        for &(e, c) in terms {
            p.add_term(vec![e], BigInt::from(c));
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map_or(false, |(e, c)| {
                e.iter().all(|&x| x == 0) && c.is_one()
            })
    }

    /// A unit of the Laurent ring: ± a single monomial with coefficient ±1.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    /// Terms sorted ascending in graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&Vec<i64>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex(a.0, b.0));
        v
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub(crate) fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(AlgebraError::VarMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = Self::zero(&self.vars);
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k * c);
        }
        out
    }

    pub fn mul_monomial(&self, exps: &[i64]) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let ne: Vec<i64> = e.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.terms.insert(ne, c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Per-variable minimum exponents (zero vector for the zero polynomial).
    pub fn min_exps(&self) -> Vec<i64> {
        let n = self.vars.len();
        let mut m = vec![i64::MAX; n];
        for e in self.terms.keys() {
            for (mi, &ei) in m.iter_mut().zip(e) {
                *mi = (*mi).min(ei);
            }
        }
        if self.terms.is_empty() {
            m = vec![0; n];
        }
        m
    }

    /// Shift so every variable's minimum exponent becomes 0 (removes the
    /// Laurent unit ambiguity in the monomial direction).
    fn shift_to_poly(&self) -> Self {
        let m = self.min_exps();
        let neg: Vec<i64> = m.iter().map(|x| -x).collect();
        self.mul_monomial(&neg)
    }

    /// Canonical representative modulo units ±(monomial): minimum exponents
    /// shifted to 0 and the graded-lex-first coefficient made positive.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let shifted = self.shift_to_poly();
        let first = shifted
            .terms
            .iter()
            .min_by(|a, b| grlex(a.0, b.0))
            .map(|(_, c)| c.clone())
            .unwrap();
        if first.is_negative() {
            shifted.neg()
        } else {
            shifted
        }
    }

    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.vars == other.vars && self.normalize_unit() == other.normalize_unit()
    }

    /// Exact division in the Laurent ring: returns h with self = g·h.
    pub fn exact_div(&self, g: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(g)?;
        if g.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let fmin = self.min_exps();
        let gmin = g.min_exps();
        let f = self.shift_to_poly();
        let gs = g.shift_to_poly();
        let (glt_e, glt_c) = gs
            .terms
            .iter()
            .max_by(|a, b| grlex(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut r = f;
        let mut q = Self::zero(&self.vars);
        while !r.is_zero() {
            let (rlt_e, rlt_c) = r
                .terms
                .iter()
                .max_by(|a, b| grlex(a.0, b.0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            let qe: Vec<i64> = rlt_e.iter().zip(&glt_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return Err(AlgebraError::NotDivisible);
            }
            let (qc, rem) = rlt_c.div_rem(&glt_c);
            if !rem.is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            let qt = Self::monomial(&self.vars, &qe, qc);
            r = r.try_sub(&qt.try_mul(&gs)?)?;
            q = q.try_add(&qt)?;
        }
        // Restore the Laurent shift: self = x^fmin·f, g = x^gmin·gs.
        let shift: Vec<i64> = fmin.iter().zip(&gmin).map(|(a, b)| a - b).collect();
        Ok(q.mul_monomial(&shift))
    }

    pub fn divides_up_to_unit(&self, multiple: &Self) -> bool {
        if self.is_zero() {
            return multiple.is_zero();
        }
        multiple.exact_div(self).is_ok()
    }

    /// Normalized gcd; gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        if self.is_zero() {
            return Ok(other.normalize_unit());
        }
        if other.is_zero() {
            return Ok(self.normalize_unit());
        }
        let f = self.shift_to_poly();
        let g = other.shift_to_poly();
        Ok(poly_gcd(&f, &g).normalize_unit())
    }

    /// Substitute each variable by a monomial in a fresh variable list
    /// (coefficient 1). Exponents combine additively.
    pub fn substitute(&self, target_vars: &[String], images: &[Vec<i64>]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let mut out = Self::zero(target_vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; target_vars.len()];
            for (ei, img) in e.iter().zip(images) {
                for (nj, ij) in ne.iter_mut().zip(img) {
                    *nj += ei * ij;
                }
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Substitute variable i ↦ unit_i · t^{exp_i} with unit_i a cyclotomic
    /// element, landing in the single-variable cyclotomic Laurent ring.
    pub fn substitute_cyclo(&self, n: u32, images: &[(i64, CycloElem)]) -> CycloLaurent {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let mut out = CycloLaurent::zero(n);
        for (e, c) in &self.terms {
            let mut deg = 0i64;
            let mut unit = CycloElem::from_int(n, c.clone());
            for (&ei, (exp, u)) in e.iter().zip(images) {
                deg += ei * exp;
                unit = unit.mul(&u.pow_signed(ei));
            }
            out.add_term(deg, unit);
        }
        out
    }

    /// Human-readable serialization: graded-lex-sorted `coeff*var^exp` terms
    /// joined by ` + `.
    pub fn to_human_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in self.sorted_terms() {
            let mut s = c.to_string();
            for (v, &x) in self.vars.iter().zip(e) {
                if x == 1 {
                    s.push('*');
                    s.push_str(v);
                } else if x != 0 {
                    s.push('*');
                    s.push_str(v);
                    s.push('^');
                    s.push_str(&x.to_string());
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

impl core::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("variable lists differ")
    }
}

impl core::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("variable lists differ")
    }
}

impl core::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("variable lists differ")
    }
}

impl core::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

// ---- multivariate polynomial gcd (inputs are true polynomials) ----

fn deg_in(f: &LaurentPoly, var: usize) -> i64 {
    f.terms.keys().map(|e| e[var]).max().unwrap_or(0)
}

/// Dense coefficient list of f viewed as univariate in `var`; coefficient
/// polynomials carry exponent 0 in `var`.
fn univ_coeffs(f: &LaurentPoly, var: usize) -> Vec<LaurentPoly> {
    let d = deg_in(f, var) as usize;
    let mut out = vec![LaurentPoly::zero(&f.vars); d + 1];
    for (e, c) in &f.terms {
        let k = e[var] as usize;
        let mut ne = e.clone();
        ne[var] = 0;
        out[k].add_term(ne, c.clone());
    }
    out
}

fn lead_coeff(f: &LaurentPoly, var: usize) -> LaurentPoly {
    let d = deg_in(f, var);
    let mut out = LaurentPoly::zero(&f.vars);
    for (e, c) in &f.terms {
        if e[var] == d {
            let mut ne = e.clone();
            ne[var] = 0;
            out.add_term(ne, c.clone());
        }
    }
    out
}

fn var_pow(vars: &[String], var: usize, k: i64) -> LaurentPoly {
    let mut e = vec![0i64; vars.len()];
    e[var] = k;
    LaurentPoly::monomial(vars, &e, 1)
}

/// Content of f with respect to `var`: gcd of its univariate coefficients.
fn content_in(f: &LaurentPoly, var: usize) -> LaurentPoly {
    let mut g = LaurentPoly::zero(&f.vars);
    for c in univ_coeffs(f, var) {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.normalize_unit() } else { poly_gcd(&g, &c) };
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part(f: &LaurentPoly, var: usize) -> LaurentPoly {
    let c = content_in(f, var);
    f.exact_div(&c).expect("content divides")
}

/// Pseudo-remainder of a by b in `var`: lc(b)^{deg a − deg b + 1}·a mod b.
fn prem(a: &LaurentPoly, b: &LaurentPoly, var: usize) -> LaurentPoly {
    let db = deg_in(b, var);
    let lb = lead_coeff(b, var);
    let mut r = a.clone();
    let mut n = deg_in(a, var) - db + 1;
    while !r.is_zero() && deg_in(&r, var) >= db {
        let lr = lead_coeff(&r, var);
        let e = deg_in(&r, var) - db;
        let shift = var_pow(&a.vars, var, e);
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
        n -= 1;
    }
    let mut lbn = LaurentPoly::one(&a.vars);
    for _ in 0..n.max(0) {
        lbn = &lbn * &lb;
    }
    &lbn * &r
}

/// gcd of nonzero ordinary polynomials: recursive content/primitive-part
/// reduction with a subresultant polynomial remainder sequence in the
/// innermost variable.
fn poly_gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    debug_assert!(!f.is_zero() && !g.is_zero());
    // Pick the highest variable actually present; none means both constant.
    let var = (0..f.vars.len())
        .rev()
        .find(|&v| deg_in(f, v) > 0 || deg_in(g, v) > 0);
    let var = match var {
        None => {
            let a = f.terms.values().next().unwrap();
            let b = g.terms.values().next().unwrap();
            return LaurentPoly::constant(&f.vars, a.gcd(b));
        }
        Some(v) => v,
    };
    if deg_in(f, var) == 0 {
        return poly_gcd(f, &content_in(g, var));
    }
    if deg_in(g, var) == 0 {
        return poly_gcd(&content_in(f, var), g);
    }
    let cont_f = content_in(f, var);
    let cont_g = content_in(g, var);
    let cont = poly_gcd(&cont_f, &cont_g);
    let mut a = f.exact_div(&cont_f).expect("content divides");
    let mut b = g.exact_div(&cont_g).expect("content divides");
    if deg_in(&a, var) < deg_in(&b, var) {
        core::mem::swap(&mut a, &mut b);
    }
    let mut gg = LaurentPoly::one(&f.vars);
    let mut h = LaurentPoly::one(&f.vars);
    loop {
        let delta = (deg_in(&a, var) - deg_in(&b, var)) as u32;
        let r = prem(&a, &b, var);
        if r.is_zero() {
            let pp = primitive_part(&b, var);
            return &cont * &pp;
        }
        let divisor = &gg * &h.pow(delta);
        a = b;
        b = r.exact_div(&divisor).expect("subresultant division is exact");
        gg = lead_coeff(&a, var);
        h = if delta == 0 {
            h
        } else {
            gg.pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant h-update is exact")
        };
    }
}

/// λ₁(p,q)(u) = (u^{pq}−1)(u−1) / ((u^p−1)(u^q−1)): the torsion factor
/// contributed by the surgery when the link misses the disk entirely.
pub fn lambda1(p: u32, q: u32) -> Result<LaurentPoly, AlgebraError> {
    if p == 0 || q == 0 || num_integer::gcd(p, q) != 1 {
        return Err(AlgebraError::NotCoprime);
    }
    let cyc = |k: i64| LaurentPoly::from_univ_terms("u", &[(k, 1), (0, -1)]);
    let num = &cyc((p * q) as i64) * &cyc(1);
    let den = &cyc(p as i64) * &cyc(q as i64);
    num.exact_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_univ_terms("t", terms)
    }

    fn xa(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        let vars = vec!["x".to_string(), "a".to_string()];
        let mut p = LaurentPoly::zero(&vars);
        for &(ex, ea, c) in terms {
            p.add_term(vec![ex, ea], BigInt::from(c));
        }
        p
    }

    /// Plain univariate long division over ℚ-free exact integers: oracle for
    /// exact_div on univariate inputs.
    fn long_division_oracle(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
        let mut num: BTreeMap<i64, BigInt> =
            f.terms().map(|(e, c)| (e[0], c.clone())).collect();
        let den: BTreeMap<i64, BigInt> =
            g.terms().map(|(e, c)| (e[0], c.clone())).collect();
        let (&dd, dc) = den.iter().next_back()?;
        let mut q: Vec<(i64, i64)> = Vec::new();
        let mut qb: BTreeMap<i64, BigInt> = BTreeMap::new();
        while let Some((&nd, nc)) = num.iter().next_back() {
            let (qc, rem) = nc.div_rem(dc);
            if !rem.is_zero() || nd < dd {
                return None;
            }
            qb.insert(nd - dd, qc.clone());
            for (e, c) in &den {
                let k = e + nd - dd;
                let v = num.remove(&k).unwrap_or_else(BigInt::zero) - c * &qc;
                if !v.is_zero() {
                    num.insert(k, v);
                }
            }
        }
        let _ = &mut q;
        let mut out = LaurentPoly::zero(f.vars());
        for (e, c) in qb {
            out.add_term(vec![e], c);
        }
        Some(out)
    }

    #[test]
    fn ring_ops_basics() {
        let a = t(&[(1, 1), (0, -1)]); // t−1
        let b = t(&[(1, 1), (0, 1)]); // t+1
        assert_eq!(&a * &b, t(&[(2, 1), (0, -1)]));
        let u = t(&[(-1, 1)]);
        let v = t(&[(1, 1)]);
        assert!((&u * &v).is_one());
    }

    #[test]
    fn var_mismatch_is_reported() {
        let a = t(&[(0, 1)]);
        let b = LaurentPoly::from_univ_terms("u", &[(0, 1)]);
        assert_eq!(a.try_add(&b), Err(AlgebraError::VarMismatch));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(
            t(&[(2, 1), (0, -1)]).exact_div(&t(&[(1, 1), (0, -1)])).unwrap(),
            t(&[(1, 1), (0, 1)])
        );
        // (t⁶−1)(t−1) ÷ ((t²−1)(t³−1)) = t²−t+1, cross-checked by oracle.
        let num = &t(&[(6, 1), (0, -1)]) * &t(&[(1, 1), (0, -1)]);
        let den = &t(&[(2, 1), (0, -1)]) * &t(&[(3, 1), (0, -1)]);
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, t(&[(2, 1), (1, -1), (0, 1)]));
        assert_eq!(long_division_oracle(&num, &den).unwrap(), q);
        assert_eq!(
            t(&[(2, 1), (0, 1)]).exact_div(&t(&[(1, 1), (0, -1)])),
            Err(AlgebraError::NotDivisible)
        );
    }

    #[test]
    fn exact_div_handles_laurent_units() {
        // (t^{-2}−t^{-4}) ÷ (t^{-1}−t^{-2}) = t^{-1}+t^{-2}
        let f = t(&[(-2, 1), (-4, -1)]);
        let g = t(&[(-1, 1), (-2, -1)]);
        let h = f.exact_div(&g).unwrap();
        assert_eq!(&g * &h, f);
    }

    #[test]
    fn gcd_examples() {
        // canonical form of the (t−1)-class is 1−t (constant-first positive)
        assert_eq!(
            t(&[(2, 1), (0, -1)]).gcd(&t(&[(3, 1), (0, -1)])).unwrap(),
            t(&[(0, 1), (1, -1)])
        );
        // gcd(x−1, a−1) = 1 in two variables.
        let f = xa(&[(1, 0, 1), (0, 0, -1)]);
        let g = xa(&[(0, 1, 1), (0, 0, -1)]);
        assert!(f.gcd(&g).unwrap().is_one());
        // gcd(t^q−1, t^{p'}−1) = t−1 for coprime q, p'.
        for (q, pp) in [(2i64, 3i64), (3, 5), (4, 7), (5, 3)] {
            let a = t(&[(q, 1), (0, -1)]);
            let b = t(&[(pp, 1), (0, -1)]);
            assert_eq!(a.gcd(&b).unwrap(), t(&[(0, 1), (1, -1)]));
        }
    }

    #[test]
    fn gcd_multivariate_with_common_factor() {
        // gcd((x−1)(a²+x), (a−1)(a²+x)) = a²+x
        let h = xa(&[(0, 2, 1), (1, 0, 1)]);
        let f = &xa(&[(1, 0, 1), (0, 0, -1)]) * &h;
        let g = &xa(&[(0, 1, 1), (0, 0, -1)]) * &h;
        assert!(f.gcd(&g).unwrap().equal_up_to_unit(&h));
    }

    #[test]
    fn normalize_unit_examples() {
        assert_eq!(
            t(&[(-2, -1), (-1, 1)]).normalize_unit(),
            t(&[(0, 1), (1, -1)])
        );
        assert!(t(&[(5, 1)]).normalize_unit().is_one());
        // A knot polynomial shifted by t⁶.
        let f = t(&[(-6, 1), (-5, -1), (-2, 1), (0, -1), (2, 1), (5, -1), (6, 1)]);
        let want = t(&[(0, 1), (1, -1), (4, 1), (6, -1), (8, 1), (11, -1), (12, 1)]);
        assert_eq!(f.normalize_unit(), want);
        assert_eq!(f.normalize_unit().normalize_unit(), f.normalize_unit());
    }

    #[test]
    fn equal_up_to_unit_examples() {
        assert!(t(&[(2, 1), (1, -1), (0, 1)])
            .equal_up_to_unit(&t(&[(2, -1), (1, 1), (0, -1)])));
        assert!(!t(&[(1, 1), (0, -1)]).equal_up_to_unit(&t(&[(1, 1), (0, 1)])));
        // Δ(K₁) at p=3 against its t³-shift.
        assert!(t(&[(6, 1), (3, -1), (0, 1)])
            .equal_up_to_unit(&t(&[(-3, 1), (0, -1), (3, 1)])));
    }

    #[test]
    fn substitute_examples() {
        let tv = vec!["t".to_string()];
        let f = xa(&[(1, 1, 1)]); // x·a
        assert_eq!(f.substitute(&tv, &[vec![3], vec![2]]), t(&[(5, 1)]));
        let g = xa(&[(1, 0, 1), (0, 0, -1)]); // x−1
        assert_eq!(g.substitute(&tv, &[vec![3], vec![2]]), t(&[(3, 1), (0, -1)]));
        // t ↦ t^{-1}
        let h = t(&[(2, 1), (0, -1)]);
        assert_eq!(h.substitute(&tv, &[vec![-1]]), t(&[(-2, 1), (0, -1)]));
    }

    #[test]
    fn substitute_cyclo_vanishing() {
        // 1+a+a²+a³ at a ↦ ζ₄·t⁰ evaluates to 0 (Cor "cor0" vanishing).
        let vars = vec!["a".to_string()];
        let mut f = LaurentPoly::zero(&vars);
        for k in 0..4 {
            f.add_term(vec![k], BigInt::one());
        }
        let z = CycloElem::zeta_pow(4, 1);
        let img = [(0i64, z)];
        assert!(f.substitute_cyclo(4, &img).is_zero());
    }

    #[test]
    fn lambda1_examples() {
        assert!(lambda1(1, 7).unwrap().is_one());
        let l23 = lambda1(2, 3).unwrap();
        assert_eq!(l23, LaurentPoly::from_univ_terms("u", &[(2, 1), (1, -1), (0, 1)]));
        let l25 = lambda1(2, 5).unwrap();
        assert_eq!(
            l25,
            LaurentPoly::from_univ_terms("u", &[(4, 1), (3, -1), (2, 1), (1, -1), (0, 1)])
        );
        // (u−1) does not divide λ₁.
        let um1 = LaurentPoly::from_univ_terms("u", &[(1, 1), (0, -1)]);
        assert!(l25.exact_div(&um1).is_err());
        assert_eq!(lambda1(2, 4), Err(AlgebraError::NotCoprime));
    }

    #[test]
    fn human_serialization() {
        let f = xa(&[(0, 0, 1), (1, 0, -2), (1, 1, 3)]);
        assert_eq!(f.to_human_string(), "1 + -2*x + 3*x*a");
    }
}
