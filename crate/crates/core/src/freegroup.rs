//! Free-group words, group-ring elements, Fox free differential calculus
//! and abelianization into Laurent polynomials.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{CycloElem, CycloLaurent, LaurentPoly};

/// Freely reduced word in a free group; letters are (generator id, ±1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<(u16, i8)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(id: u16) -> Self {
        Word { letters: vec![(id, 1)] }
    }

    pub fn gen_inv(id: u16) -> Self {
        Word { letters: vec![(id, -1)] }
    }

    pub fn from_letters(letters: &[(u16, i8)]) -> Self {
        let mut w = Word::identity();
        for &(g, s) in letters {
            assert!(s == 1 || s == -1, "letter exponent must be ±1");
            w.push(g, s);
        }
        w
    }

    fn push(&mut self, g: u16, s: i8) {
        if let Some(&(lg, ls)) = self.letters.last() {
            if lg == g && ls == -s {
                self.letters.pop();
                return;
            }
        }
        self.letters.push((g, s));
    }

    pub fn letters(&self) -> &[(u16, i8)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, s) in &other.letters {
            w.push(g, s);
        }
        w
    }

    pub fn inv(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, s)| (g, -s)).collect(),
        }
    }

    /// w^e with e possibly negative; powers are expanded letter by letter.
    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Exponent sum of generator g in this word.
    pub fn exponent_sum(&self, g: u16) -> i64 {
        self.letters
            .iter()
            .filter(|&&(h, _)| h == g)
            .map(|&(_, s)| s as i64)
            .sum()
    }

    pub fn max_gen(&self) -> Option<u16> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Space-separated serialization with `^-1` markers, e.g. `x1 a1^-1 x2`.
    pub fn to_display(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return String::from("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, s)| {
                let n = &names[g as usize];
                if s == 1 {
                    n.clone()
                } else {
                    alloc::format!("{}^-1", n)
                }
            })
            .collect();
        parts.join(" ")
    }
}

/// Formal ℤ-linear combination of free-group words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElem {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::single(Word::identity(), BigInt::one())
    }

    pub fn single(w: Word, c: BigInt) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_word(w: Word) -> Self {
        Self::single(w, BigInt::one())
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElem {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1.mul(w2), c1 * c2);
            }
        }
        out
    }

    /// Left-multiply by a single word.
    pub fn lmul_word(&self, w: &Word) -> Self {
        let mut out = Self::zero();
        for (v, c) in &self.terms {
            out.add_term(w.mul(v), c.clone());
        }
        out
    }
}

/// Fox free derivative ∂w/∂g: ∂g/∂g = 1, ∂g⁻¹/∂g = −g⁻¹, product rule
/// ∂(uv) = ∂u + u·∂v.
pub fn fox_derivative(w: &Word, g: u16) -> GroupRingElem {
    let mut out = GroupRingElem::zero();
    let mut prefix = Word::identity();
    for &(h, s) in w.letters() {
        if h == g {
            if s == 1 {
                out.add_term(prefix.clone(), BigInt::one());
            } else {
                out.add_term(prefix.mul(&Word::gen_inv(g)), -BigInt::one());
            }
        }
        prefix = prefix.mul(&Word::from_letters(&[(h, s)]));
    }
    out
}

/// Abelianize a group-ring element: each generator id maps to the monomial
/// with the given exponent vector (coefficient 1) in `vars`.
pub fn abelianize(
    e: &GroupRingElem,
    vars: &[String],
    assignment: &[Vec<i64>],
) -> LaurentPoly {
    let mut out = LaurentPoly::zero(vars);
    for (w, c) in e.terms() {
        let mut exps = vec![0i64; vars.len()];
        for &(g, s) in w.letters() {
            let img = &assignment[g as usize];
            for (x, i) in exps.iter_mut().zip(img) {
                *x += (s as i64) * i;
            }
        }
        let m = LaurentPoly::monomial(vars, &exps, c.clone());
        out = &out + &m;
    }
    out
}

/// Abelianize with a twisted assignment: generator id ↦ unit·t^{exp} in the
/// single-variable cyclotomic Laurent ring of order n.
pub fn abelianize_cyclo(
    e: &GroupRingElem,
    n: u32,
    assignment: &[(i64, CycloElem)],
) -> CycloLaurent {
    let mut out = CycloLaurent::zero(n);
    for (w, c) in e.terms() {
        let mut deg = 0i64;
        let mut unit = CycloElem::from_int(n, c.clone());
        for &(g, s) in w.letters() {
            let (exp, ref u) = assignment[g as usize];
            deg += (s as i64) * exp;
            unit = unit.mul(&u.pow_signed(s as i64));
        }
        out.add_term(deg, unit);
    }
    out
}
