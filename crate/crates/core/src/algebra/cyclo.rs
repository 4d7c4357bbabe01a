use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

// ---- univariate BigInt polynomial helpers (dense, ascending) ----

fn poly_trim(p: &mut Vec<BigInt>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of a modulo a monic divisor m (in place on a copy).
fn poly_rem_monic(a: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(m.last().map_or(false, |c| c.is_one()));
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = r.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let k = r.len() - dm;
        for (i, mi) in m[..dm].iter().enumerate() {
            r[k + i] -= &c * mi;
        }
    }
    poly_trim(&mut r);
    r
}

/// Exact quotient a / m for monic m (panics if the division is not exact).
fn poly_div_monic(a: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(dm)];
    while r.len() > dm {
        let c = r.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let k = r.len() - dm;
        q[k] = c.clone();
        for (i, mi) in m[..dm].iter().enumerate() {
            r[k + i] -= &c * mi;
        }
    }
    poly_trim(&mut r);
    assert!(r.is_empty(), "poly_div_monic: division not exact");
    poly_trim(&mut q);
    q
}

/// Coefficients (ascending) of the n-th cyclotomic polynomial Φ_n, computed
/// by exact division of xⁿ−1 by the Φ_d for proper divisors d of n.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut out = num;
    for d in 1..n {
        if n % d == 0 {
            out = poly_div_monic(&out, &cyclotomic_polynomial(d));
        }
    }
    out
}

fn phi_degree(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

// ---- tiny exact rationals for the fraction-field inverse ----

#[derive(Clone, Debug, PartialEq, Eq)]
struct Rat {
    n: BigInt,
    d: BigInt, // always positive
}

impl Rat {
    fn new(n: BigInt, d: BigInt) -> Self {
        assert!(!d.is_zero());
        let g = num_integer::Integer::gcd(&n, &d);
        let (mut n, mut d) = (n / &g, d / g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Rat { n, d }
    }
    fn from_int(n: BigInt) -> Self {
        Rat { n, d: BigInt::one() }
    }
    fn zero() -> Self {
        Self::from_int(BigInt::zero())
    }
    fn is_zero(&self) -> bool {
        self.n.is_zero()
    }
    fn add(&self, o: &Rat) -> Rat {
        Rat::new(&self.n * &o.d + &o.n * &self.d, &self.d * &o.d)
    }
    fn sub(&self, o: &Rat) -> Rat {
        Rat::new(&self.n * &o.d - &o.n * &self.d, &self.d * &o.d)
    }
    fn mul(&self, o: &Rat) -> Rat {
        Rat::new(&self.n * &o.n, &self.d * &o.d)
    }
    fn div(&self, o: &Rat) -> Rat {
        Rat::new(&self.n * &o.d, &self.d * &o.n)
    }
}

fn qpoly_trim(p: &mut Vec<Rat>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

/// Rational-coefficient remainder and quotient-free Euclid step helpers.
fn qpoly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut q = vec![Rat::zero(); a.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let c = r.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let k = r.len() - db;
        let qc = c.div(&lb);
        q[k] = q[k].add(&qc);
        for (i, bi) in b[..db].iter().enumerate() {
            r[k + i] = r[k + i].sub(&qc.mul(bi));
        }
    }
    qpoly_trim(&mut r);
    qpoly_trim(&mut q);
    (q, r)
}

/// An element of ℤ[ζ_n] in the power basis 1, ζ, …, ζ^{φ(n)−1} modulo the
/// n-th cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CycloElem {
    n: u32,
    coords: Vec<BigInt>,
}

impl CycloElem {
    pub fn zero(n: u32) -> Self {
        CycloElem { n, coords: vec![BigInt::zero(); phi_degree(n)] }
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, BigInt::one())
    }

    pub fn from_int(n: u32, c: BigInt) -> Self {
        let mut e = Self::zero(n);
        e.coords[0] = c;
        e
    }

    pub fn from_coords(n: u32, coords: Vec<BigInt>) -> Self {
        assert_eq!(coords.len(), phi_degree(n));
        CycloElem { n, coords }
    }

    /// ζ_n^j (j taken modulo n).
    pub fn zeta_pow(n: u32, j: i64) -> Self {
        let j = j.rem_euclid(n as i64) as usize;
        let mut p = vec![BigInt::zero(); j + 1];
        p[j] = BigInt::one();
        Self::reduce(n, p)
    }

    fn reduce(n: u32, p: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let mut r = poly_rem_monic(&p, &phi);
        r.resize(phi.len() - 1, BigInt::zero());
        CycloElem { n, coords: r }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one(self.n)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        CycloElem {
            n: self.n,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        CycloElem {
            n: self.n,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CycloElem { n: self.n, coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        Self::reduce(self.n, poly_mul(&self.coords, &o.coords))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.n);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Power with a possibly negative exponent; the element must be a unit
    /// of ℤ[ζ_n] when e < 0.
    pub fn pow_signed(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow(e as u32)
        } else {
            let inv = Self::one(self.n)
                .exact_div(self)
                .expect("negative power of a non-unit cyclotomic element");
            inv.pow((-e) as u32)
        }
    }

    /// Inverse over ℚ(ζ_n): extended Euclid against Φ_n. Returns integer
    /// coordinates plus a positive denominator.
    fn rational_inverse(&self) -> Option<(Vec<BigInt>, BigInt)> {
        if self.is_zero() {
            return None;
        }
        let phi: Vec<Rat> =
            cyclotomic_polynomial(self.n).into_iter().map(Rat::from_int).collect();
        let mut a: Vec<Rat> = self.coords.iter().cloned().map(Rat::from_int).collect();
        qpoly_trim(&mut a);
        // Extended Euclid: track u with u·a ≡ r (mod Φ).
        let (mut r0, mut r1) = (phi, a);
        let (mut u0, mut u1) = (vec![], vec![Rat::from_int(BigInt::one())]);
        while !r1.is_empty() {
            let (q, r2) = qpoly_divmod(&r0, &r1);
            // u2 = u0 − q·u1
            let mut qu = vec![Rat::zero(); q.len() + u1.len()];
            for (i, qi) in q.iter().enumerate() {
                for (j, uj) in u1.iter().enumerate() {
                    qu[i + j] = qu[i + j].add(&qi.mul(uj));
                }
            }
            let mut u2 = vec![Rat::zero(); u0.len().max(qu.len())];
            for (i, c) in u0.iter().enumerate() {
                u2[i] = u2[i].add(c);
            }
            for (i, c) in qu.iter().enumerate() {
                u2[i] = u2[i].sub(c);
            }
            qpoly_trim(&mut u2);
            r0 = r1;
            r1 = r2;
            u0 = u1;
            u1 = u2;
        }
        // r0 = gcd (a nonzero constant since Φ_n is irreducible); inverse is
        // u0 / r0.
        if r0.len() != 1 {
            return None;
        }
        let g = r0[0].clone();
        let inv: Vec<Rat> = u0.iter().map(|c| c.div(&g)).collect();
        let mut den = BigInt::one();
        for c in &inv {
            den = num_integer::lcm(den, c.d.clone());
        }
        let mut coords = vec![BigInt::zero(); phi_degree(self.n)];
        for (i, c) in inv.iter().enumerate() {
            coords[i] = &c.n * (&den / &c.d);
        }
        Some((coords, den))
    }

    /// Exact division in ℤ[ζ_n].
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.n, d.n);
        let (inv, den) = d.rational_inverse()?;
        let prod = Self::reduce(self.n, poly_mul(&self.coords, &inv));
        let mut coords = Vec::with_capacity(prod.coords.len());
        for c in &prod.coords {
            let (q, r) = num_integer::Integer::div_rem(c, &den);
            if !r.is_zero() {
                return None;
            }
            coords.push(q);
        }
        Some(CycloElem { n: self.n, coords })
    }

    pub fn is_unit(&self) -> bool {
        Self::one(self.n).exact_div(self).is_some()
    }

    /// Integer content (gcd of coordinates, nonnegative).
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coords {
            g = num_integer::Integer::gcd(&g, c);
        }
        g
    }

    pub fn div_int(&self, d: &BigInt) -> Self {
        CycloElem { n: self.n, coords: self.coords.iter().map(|c| c / d).collect() }
    }

    pub fn to_human_string(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = match i {
                0 => c.to_string(),
                1 => alloc::format!("{}*z", c),
                _ => alloc::format!("{}*z^{}", c, i),
            };
            parts.push(s);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Univariate Laurent polynomial with CycloElem coefficients; the value
/// domain of twisted Alexander polynomials Δ^μ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloLaurent {
    n: u32,
    terms: BTreeMap<i64, CycloElem>,
}

impl CycloLaurent {
    pub fn zero(n: u32) -> Self {
        CycloLaurent { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u32) -> Self {
        Self::monomial(n, 0, CycloElem::one(n))
    }

    pub fn from_elem(c: CycloElem) -> Self {
        let n = c.order();
        Self::monomial(n, 0, c)
    }

    pub fn monomial(n: u32, e: i64, c: CycloElem) -> Self {
        let mut p = Self::zero(n);
        p.add_term(e, c);
        p
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// Unit of the cyclotomic Laurent ring: single term with unit coefficient.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().is_unit()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &CycloElem)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: i64, c: CycloElem) {
        assert_eq!(c.order(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(en) => {
                en.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut en) => {
                let v = en.get().add(&c);
                if v.is_zero() {
                    en.remove();
                } else {
                    *en.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        CycloLaurent {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &CycloElem) -> Self {
        let mut out = Self::zero(self.n);
        for (e, k) in &self.terms {
            out.add_term(*e, k.mul(c));
        }
        out
    }

    pub fn mul_monomial(&self, shift: i64) -> Self {
        CycloLaurent {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    fn min_exp(&self) -> i64 {
        self.terms.keys().next().copied().unwrap_or(0)
    }

    fn max_term(&self) -> Option<(i64, &CycloElem)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Exact division: returns h with self = g·h, if it exists.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        assert_eq!(self.n, g.n);
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.n));
        }
        let shift = self.min_exp() - g.min_exp();
        let mut r = self.mul_monomial(-self.min_exp());
        let gs = g.mul_monomial(-g.min_exp());
        let (gd, gl) = gs.max_term().map(|(e, c)| (e, c.clone())).unwrap();
        let mut q = Self::zero(self.n);
        while !r.is_zero() {
            let (rd, rl) = r.max_term().map(|(e, c)| (e, c.clone())).unwrap();
            if rd < gd {
                return None;
            }
            let qc = rl.exact_div(&gl)?;
            let qt = Self::monomial(self.n, rd - gd, qc);
            r = r.sub(&qt.mul(&gs));
            q = q.add(&qt);
        }
        Some(q.mul_monomial(shift))
    }

    /// Divide by the integer content of all coordinates of all terms.
    fn int_primitive(&self) -> Self {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, &c.int_content());
        }
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        CycloLaurent {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (*e, c.div_int(&g))).collect(),
        }
    }

    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, &c.int_content());
        }
        g
    }

    /// gcd computed over the fraction field ℚ(ζ_n)[t] via pseudo-remainder
    /// Euclid, then denominator clearing to an integer-primitive
    /// representative, scaled back by the gcd of the integer contents (so
    /// rational-integer content like the factor p of Δ¹ survives). The
    /// ℤ[ζ_n]-content beyond ℤ is not recovered; comparisons are up to units.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let content =
            num_integer::Integer::gcd(&self.int_content(), &other.int_content());
        let mut a = self.mul_monomial(-self.min_exp()).int_primitive();
        let mut b = other.mul_monomial(-other.min_exp()).int_primitive();
        if a.max_term().unwrap().0 < b.max_term().unwrap().0 {
            core::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                let c = CycloElem::from_int(self.n, content);
                return a.normalize_unit().scale(&c);
            }
            // pseudo-remainder: lc(b)^{δ+1}·a mod b
            let (db, lb) = b.max_term().map(|(e, c)| (e, c.clone())).unwrap();
            let mut r = a.clone();
            loop {
                let (dr, lr) = match r.max_term() {
                    None => break,
                    Some((e, c)) => (e, c.clone()),
                };
                if dr < db {
                    break;
                }
                let shifted = b.mul_monomial(dr - db).scale(&lr);
                r = r.scale(&lb).sub(&shifted);
            }
            a = b;
            b = r.int_primitive();
        }
    }

    fn canonical_key(&self) -> Vec<(i64, Vec<BigInt>)> {
        self.terms.iter().map(|(e, c)| (*e, c.coords().to_vec())).collect()
    }

    /// Canonical representative modulo units ±ζ^j·t^k: shift the minimum
    /// exponent to 0, then pick the smallest of the 2n coefficient twists.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let shifted = self.mul_monomial(-self.min_exp());
        let mut best: Option<Self> = None;
        for j in 0..self.n.max(1) {
            for sign in [1i64, -1] {
                let mut u = CycloElem::zeta_pow(self.n, j as i64);
                if sign < 0 {
                    u = u.neg();
                }
                let cand = shifted.scale(&u);
                if best
                    .as_ref()
                    .map_or(true, |b| cand.canonical_key() < b.canonical_key())
                {
                    best = Some(cand);
                }
            }
        }
        best.unwrap()
    }

    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.n == other.n && self.normalize_unit() == other.normalize_unit()
    }

    pub fn to_human_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let cs = c.to_human_string();
            let s = match e {
                0 => alloc::format!("({})", cs),
                1 => alloc::format!("({})*t", cs),
                _ => alloc::format!("({})*t^{}", cs, e),
            };
            parts.push(s);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        let phi1 = cyclotomic_polynomial(1);
        assert_eq!(phi1, vec![BigInt::from(-1), BigInt::from(1)]);
        let phi6 = cyclotomic_polynomial(6); // x²−x+1
        assert_eq!(phi6, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        let phi12 = cyclotomic_polynomial(12); // x⁴−x²+1
        assert_eq!(
            phi12,
            [1, 0, -1, 0, 1].iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn zeta_identities() {
        for n in 1..=12u32 {
            let z = CycloElem::zeta_pow(n, 1);
            assert!(z.pow(n).is_one(), "ζ_{}^{} ≠ 1", n, n);
        }
        for n in [2u32, 3, 5, 7, 11] {
            let mut s = CycloElem::zero(n);
            for j in 0..n {
                s = s.add(&CycloElem::zeta_pow(n, j as i64));
            }
            assert!(s.is_zero(), "geometric sum at prime n={}", n);
        }
    }

    #[test]
    fn int_embedding_round_trips() {
        for n in 1..=9u32 {
            let c = CycloElem::from_int(n, BigInt::from(-17));
            assert_eq!(c.coords()[0], BigInt::from(-17));
            assert!(c.coords()[1..].iter().all(|x| x.is_zero()));
        }
    }

    /// Multiplication oracle: evaluate a at the companion matrix of Φ_n and
    /// apply to b's coordinate vector.
    fn matrix_mul_oracle(a: &CycloElem, b: &CycloElem) -> CycloElem {
        let n = a.order();
        let phi = cyclotomic_polynomial(n);
        let m = phi.len() - 1;
        // companion matrix C of Φ_n: C e_i = e_{i+1}, C e_{m-1} = −phi[..m]
        let mut mat = vec![vec![BigInt::zero(); m]; m]; // A = Σ a_i C^i
        let mut pw = vec![vec![BigInt::zero(); m]; m];
        for i in 0..m {
            pw[i][i] = BigInt::one();
        }
        for ai in a.coords() {
            for r in 0..m {
                for c in 0..m {
                    mat[r][c] += ai * &pw[r][c];
                }
            }
            // pw ← C·pw
            let mut next = vec![vec![BigInt::zero(); m]; m];
            for c in 0..m {
                for r in 0..m {
                    if pw[r][c].is_zero() {
                        continue;
                    }
                    if r + 1 < m {
                        let v = pw[r][c].clone();
                        next[r + 1][c] += v;
                    } else {
                        for (k, ph) in phi[..m].iter().enumerate() {
                            next[k][c] -= ph * &pw[r][c];
                        }
                    }
                }
            }
            pw = next;
        }
        let mut out = vec![BigInt::zero(); m];
        for r in 0..m {
            for c in 0..m {
                out[r] += &mat[r][c] * &b.coords()[c];
            }
        }
        CycloElem::from_coords(n, out)
    }

    #[test]
    fn composite_order_reduction_matches_matrix_oracle() {
        for n in [4u32, 6, 8, 9, 12] {
            let m = phi_degree(n);
            let a = CycloElem::from_coords(
                n,
                (0..m).map(|i| BigInt::from(2 * i as i64 - 3)).collect(),
            );
            let b = CycloElem::from_coords(
                n,
                (0..m).map(|i| BigInt::from(i as i64 * i as i64 - 1)).collect(),
            );
            assert_eq!(a.mul(&b), matrix_mul_oracle(&a, &b), "n={}", n);
        }
    }

    #[test]
    fn exact_div_and_units() {
        let n = 5;
        let z = CycloElem::zeta_pow(n, 2);
        let a = CycloElem::from_int(n, BigInt::from(3)).mul(&z);
        assert_eq!(a.exact_div(&z).unwrap(), CycloElem::from_int(n, BigInt::from(3)));
        assert!(z.is_unit());
        // 1+ζ₅ is a nontrivial unit of ℤ[ζ₅]
        let u = CycloElem::one(n).add(&CycloElem::zeta_pow(n, 1));
        assert!(u.is_unit());
        assert!(!CycloElem::from_int(n, BigInt::from(2)).is_unit());
        // pow_signed with negative exponent on a unit
        assert!(z.pow_signed(-1).mul(&z).is_one());
    }

    #[test]
    fn cyclo_laurent_gcd_and_normalize() {
        let n = 4;
        let z = CycloElem::zeta_pow(n, 1);
        // h = t − ζ
        let mut h = CycloLaurent::monomial(n, 1, CycloElem::one(n));
        h.add_term(0, z.neg());
        // f = (t−ζ)(t+1), g = (t−ζ)(t−2)
        let mut tp1 = CycloLaurent::monomial(n, 1, CycloElem::one(n));
        tp1.add_term(0, CycloElem::one(n));
        let mut tm2 = CycloLaurent::monomial(n, 1, CycloElem::one(n));
        tm2.add_term(0, CycloElem::from_int(n, BigInt::from(-2)));
        let f = h.mul(&tp1);
        let g = h.mul(&tm2);
        let d = f.gcd(&g);
        assert!(d.equal_up_to_unit(&h));
        // exact division round trip
        assert_eq!(f.exact_div(&h).unwrap(), tp1);
        // normalization is idempotent and kills ±ζ^j t^k twists
        let tw = f.mul_monomial(-3).scale(&CycloElem::zeta_pow(n, 3).neg());
        assert!(tw.equal_up_to_unit(&f));
        assert_eq!(f.normalize_unit().normalize_unit(), f.normalize_unit());
    }
}
