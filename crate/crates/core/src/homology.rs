//! Integer Smith normal form and first homology of link complements in the
//! surgered manifold, computed both from the presentation and from the
//! closed-form answer as a cross-check.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::diagram::{DiagramError, MixedDiagram};
use crate::presentation::{lens_presentation, Presentation};

/// U * A * V = D with U, V unimodular and D diagonal with the divisibility
/// chain d1 | d2 | ...
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub d: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    pub rank: usize,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

pub fn smith_normal_form(a: &[Vec<BigInt>]) -> Snf {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let steps = rows.min(cols);
    for t in 0..steps {
        loop {
            // Smallest nonzero entry of the trailing block as pivot.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero()
                        && pivot.map_or(true, |(pi, pj)| {
                            m[i][j].abs() < m[pi][pj].abs()
                        })
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(m, u, v, steps);
            };
            m.swap(t, pi);
            u.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }

            let mut dirty = false;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let k = div_round(&m[i][t], &m[t][t]);
                    for j in 0..cols {
                        let delta = &k * &m[t][j];
                        m[i][j] -= delta;
                    }
                    for j in 0..rows {
                        let delta = &k * &u[t][j];
                        u[i][j] -= delta;
                    }
                    if !m[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let k = div_round(&m[t][j], &m[t][t]);
                    for row in m.iter_mut() {
                        let delta = &k * &row[t];
                        row[j] -= delta;
                    }
                    for row in v.iter_mut() {
                        let delta = &k * &row[t];
                        row[j] -= delta;
                    }
                    if !m[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: the pivot must divide everything further down.
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&m[i][j] % &m[t][t]).is_zero() {
                        for jj in 0..cols {
                            let add = m[i][jj].clone();
                            m[t][jj] += add;
                        }
                        for jj in 0..rows {
                            let add = u[i][jj].clone();
                            u[t][jj] += add;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if m[t][t].is_negative() {
            for j in 0..cols {
                m[t][j] = -m[t][j].clone();
            }
            for j in 0..rows {
                u[t][j] = -u[t][j].clone();
            }
        }
    }
    finish(m, u, v, steps)
}

fn finish(m: Vec<Vec<BigInt>>, u: Vec<Vec<BigInt>>, v: Vec<Vec<BigInt>>, steps: usize) -> Snf {
    let d: Vec<BigInt> = (0..steps).map(|i| m[i][i].abs()).collect();
    let rank = d.iter().filter(|x| !x.is_zero()).count();
    Snf { d, u, v, rank }
}

/// Quotient rounded to nearest, so the remainder has at most half the
/// pivot's magnitude.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

pub fn snf_of_i64(a: &[Vec<i64>]) -> Snf {
    let m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    smith_normal_form(&m)
}

/// Finitely generated abelian group in invariant-factor form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    /// invariant factors > 1, each dividing the next
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(String::from("Z")),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(alloc::format!("Z/{t}"));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cokernel of the abelianized relator matrix of a presentation.
pub fn h1_from_presentation(p: &Presentation) -> AbelianGroup {
    let m = p.exponent_matrix();
    let n_gens = m.len();
    let snf = snf_of_i64(&m);
    let torsion: Vec<BigInt> = snf
        .d
        .iter()
        .filter(|x| !x.is_zero() && !x.is_one())
        .cloned()
        .collect();
    AbelianGroup { free_rank: n_gens - snf.rank, torsion }
}

/// H1 of the complement of L in the surgered manifold, from the Fox-ready
/// presentation.
pub fn h1_complement(d: &MixedDiagram) -> Result<AbelianGroup, DiagramError> {
    Ok(h1_from_presentation(&lens_presentation(d)?))
}

/// Closed-form H1: one free meridian summand per component, plus a cyclic
/// summand of order gcd(p, f_1, ..., f_n) from the surgery meridian, where
/// f_i is the flux of component i through the disk.
pub fn h1_closed_form(d: &MixedDiagram) -> AbelianGroup {
    let g = d
        .component_flux()
        .iter()
        .fold(d.p, |acc, f| acc.gcd(f));
    let torsion = if g > 1 { vec![BigInt::from(g)] } else { vec![] };
    AbelianGroup { free_rank: d.components.len(), torsion }
}

/// Homology class of a flux-f component in H1 of the surgered manifold,
/// represented in [0, p).
pub fn homology_class(p: i64, q: i64, f: i64) -> i64 {
    (q * f).rem_euclid(p)
}
