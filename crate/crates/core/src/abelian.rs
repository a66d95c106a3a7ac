//! Abelian invariants (torsion divisor chain plus free rank) and the
//! coordinate map from generators onto abelianization coordinates.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::{smith_normal_form, Matrix};
use crate::word::Word;
use crate::Int;

/// Invariant-factor form of a finitely generated abelian group:
/// `C_{d_1} x ... x C_{d_k} x Z^r` with `2 <= d_1 | d_2 | ... | d_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianInvariants {
    pub torsion: Vec<Int>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants { torsion: Vec::new(), free_rank: 0 }
    }

    /// Builds from a raw divisor list (1s stripped, absolute values taken).
    pub fn from_divisors(divisors: Vec<Int>, free_rank: usize) -> Self {
        let torsion =
            divisors.into_iter().map(|d| d.abs()).filter(|d| *d > Int::from(1)).collect();
        AbelianInvariants { torsion, free_rank }
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order when finite.
    pub fn order(&self) -> Option<Int> {
        if self.free_rank > 0 {
            None
        } else {
            Some(self.torsion.iter().product())
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("C{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// The abelianization map: generator `g` has coordinates `row g of V`,
/// read modulo `moduli[i]` (0 meaning a free `Z` coordinate).
#[derive(Clone, Debug)]
pub struct AbelianMap {
    pub invariants: AbelianInvariants,
    moduli: Vec<Int>,
    coords: Matrix<Int>,
}

impl AbelianMap {
    /// Image of a word as a reduced coordinate vector.
    pub fn image(&self, w: &Word) -> Vec<Int> {
        let n = self.moduli.len();
        let mut raw = vec![Int::zero(); n];
        for &(g, e) in w.syllables() {
            for i in 0..n {
                raw[i] += self.coords[(g, i)].clone() * Int::from(e);
            }
        }
        for i in 0..n {
            if !self.moduli[i].is_zero() {
                raw[i] = raw[i].clone().rem_euclid(&self.moduli[i]);
            }
        }
        raw
    }

    pub fn is_trivial_image(&self, w: &Word) -> bool {
        self.image(w).iter().all(Zero::is_zero)
    }

    /// Order of the image of `w`, `None` when infinite.
    pub fn image_order(&self, w: &Word) -> Option<Int> {
        let img = self.image(w);
        let mut ord = Int::from(1);
        for (x, m) in img.iter().zip(&self.moduli) {
            if m.is_zero() {
                if !x.is_zero() {
                    return None;
                }
            } else if !x.is_zero() {
                let k = m.clone() / x.gcd(m);
                ord = ord.clone() * k.clone() / ord.gcd(&k);
            }
        }
        Some(ord)
    }
}

trait RemEuclid {
    fn rem_euclid(self, m: &Int) -> Int;
}

impl RemEuclid for Int {
    fn rem_euclid(self, m: &Int) -> Int {
        let r = self % m;
        if r.is_negative() {
            r + m.abs()
        } else {
            r
        }
    }
}

/// Abelianization of a relator exponent matrix (relators as rows, one column
/// per generator): the SNF divisor chain plus free rank.
pub fn invariants_of_matrix(rel: &Matrix<Int>) -> AbelianInvariants {
    let snf = smith_normal_form(rel);
    let rank = snf.rank();
    AbelianInvariants::from_divisors(snf.divisors(), rel.cols() - rank)
}

/// Full abelianization data including the generator coordinate map.
pub fn map_of_matrix(rel: &Matrix<Int>) -> AbelianMap {
    let snf = smith_normal_form(rel);
    let n = rel.cols();
    let mut moduli = vec![Int::zero(); n];
    for (i, d) in snf.s.diagonal().into_iter().enumerate() {
        moduli[i] = d;
    }
    // In coordinates y = x * V the relation lattice becomes the span of
    // diag(S) rows, so each coordinate is read mod its divisor.
    let invariants = AbelianInvariants::from_divisors(
        moduli.iter().filter(|d| !d.is_zero()).cloned().collect(),
        n - snf.rank(),
    );
    AbelianMap { invariants, moduli, coords: snf.v }
}
