//! Seifert fibred space data over a genus-0 base: presentations, euler
//! numbers, closed-form first homology for the catalogued triangle bases,
//! Coxeter extensions, central root extensions, and the `S^2(4,4,4)`
//! families `G+(d)`, `G-(d)`.
//!
//! Conventions. Stored data follows the presentation
//! `< c_1..c_t, z | c_j^{p_j} z^{b_j}, (c_1..c_t) z^{-d}, [z, c_j] >`
//! with euler number `-(d + sum b_j/p_j)`. The `gamma444` constructors use
//! the literal family relators `a^4 z^{+-1}, ..., a b c z^d` (so their `d`
//! is the negative of the stored one); the adapter is `gamma444_data`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::abelian::AbelianInvariants;
use crate::matrix::Matrix;
use crate::presentation::Presentation;
use crate::word::Word;
use crate::{Int, IntMatrix, Rat};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SeifertError {
    #[error("cone order {p} and exponent {beta} are not coprime")]
    NotCoprime { p: i64, beta: i64 },
    #[error("cone order must be >= 2, got {0}")]
    SmallConeOrder(i64),
    #[error("root order {n} shares a factor with cone order {p}")]
    RootNotCoprime { n: i64, p: i64 },
    #[error("expected exactly 3 cone points, got {0}")]
    NotThreeCones(usize),
    #[error("H1 must be finite of odd order for the Coxeter extension, found {0}")]
    H1NotOdd(AbelianInvariants),
    #[error("{0} is not in the catalogued triangle list")]
    NotTopList(TriangleKey),
    #[error("all cone orders must be odd and >= 3, got ({0},{1},{2})")]
    NotAllOdd(i64, i64, i64),
    #[error("cannot parse Seifert data: {0}")]
    Parse(String),
}

/// Seifert data over `S^2`: cone pairs `(p_j, b_j)` and the integer `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeifertData {
    pub cones: Vec<(i64, i64)>,
    pub d: i64,
}

impl SeifertData {
    pub fn new(cones: Vec<(i64, i64)>, d: i64) -> Result<Self, SeifertError> {
        for &(p, beta) in &cones {
            if p < 2 {
                return Err(SeifertError::SmallConeOrder(p));
            }
            if p.gcd(&beta) != 1 {
                return Err(SeifertError::NotCoprime { p, beta });
            }
        }
        Ok(SeifertData { cones, d })
    }

    /// Normal form with `0 < b_j < p_j`; `d` absorbs the shifts, so the
    /// euler number is unchanged.
    pub fn normalize(&self) -> SeifertData {
        let mut d = self.d;
        let cones = self
            .cones
            .iter()
            .map(|&(p, beta)| {
                let r = beta.rem_euclid(p);
                d += (beta - r) / p;
                (p, r)
            })
            .collect();
        SeifertData { cones, d }
    }

    /// Euler number `e(M) = -(d + sum b_j / p_j)`, exact.
    pub fn euler_number(&self) -> Rat {
        let mut sum = Rat::from_integer(Int::from(self.d));
        for &(p, beta) in &self.cones {
            sum += Rat::new(Int::from(beta), Int::from(p));
        }
        -sum
    }

    /// The standard presentation `< c_1..c_t, z | ... >` with centrality
    /// materialized as commutator relators.
    pub fn presentation(&self) -> Presentation {
        let t = self.cones.len();
        let mut gens: Vec<String> = match t {
            3 => vec!["a".into(), "b".into(), "c".into()],
            _ => (1..=t).map(|j| format!("c{j}")).collect(),
        };
        gens.push("z".into());
        let zi = t;
        let mut relators = Vec::new();
        for (j, &(p, beta)) in self.cones.iter().enumerate() {
            relators.push(Word::generator(j, p).concat(&Word::generator(zi, beta)));
        }
        let mut prod = Word::empty();
        for j in 0..t {
            prod = prod.concat(&Word::generator(j, 1));
        }
        relators.push(prod.concat(&Word::generator(zi, -self.d)));
        for j in 0..t {
            relators.push(Word::commutator(&Word::generator(zi, 1), &Word::generator(j, 1)));
        }
        Presentation::new(gens, relators).expect("valid Seifert presentation")
    }

    /// The square relation matrix (columns `z, c_1, .., c_t`; one row per
    /// cone relator plus the product row) whose determinant the closed
    /// homology formulas describe.
    pub fn relation_matrix(&self) -> IntMatrix {
        let t = self.cones.len();
        let mut m: IntMatrix = Matrix::zero(t + 1, t + 1);
        for (j, &(p, beta)) in self.cones.iter().enumerate() {
            m[(j, 0)] = Int::from(beta);
            m[(j, j + 1)] = Int::from(p);
        }
        m[(t, 0)] = Int::from(-self.d);
        for j in 0..t {
            m[(t, j + 1)] = Int::from(1);
        }
        m
    }

    /// Central root extension: adjoins a central `N`-th root of `z`
    /// (requires `gcd(N, p_j) = 1`), multiplying the euler number by `N`.
    pub fn root_extension(&self, n: i64) -> Result<SeifertData, SeifertError> {
        assert!(n >= 1, "root order must be >= 1");
        for &(p, _) in &self.cones {
            if p.gcd(&n) != 1 {
                return Err(SeifertError::RootNotCoprime { n, p });
            }
        }
        let cones = self.cones.iter().map(|&(p, beta)| (p, n * beta)).collect();
        SeifertData::new(cones, n * self.d)
    }

    pub fn abelianization(&self) -> AbelianInvariants {
        self.presentation().abelianization()
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cones: Vec<String> =
            self.cones.iter().map(|(p, b)| format!("({p},{b})")).collect();
        write!(f, "SFS[{}; d={}]", cones.join(","), self.d)
    }
}

impl FromStr for SeifertData {
    type Err = SeifertError;

    /// Parses `SFS[(3,1),(3,1),(4,1); d=0]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix("SFS[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| SeifertError::Parse("expected SFS[...; d=..]".into()))?;
        let (cones_part, d_part) = inner
            .split_once(';')
            .ok_or_else(|| SeifertError::Parse("missing `; d=..`".into()))?;
        let d_str = d_part
            .trim()
            .strip_prefix("d=")
            .ok_or_else(|| SeifertError::Parse("missing `d=`".into()))?;
        let d: i64 =
            d_str.trim().parse().map_err(|_| SeifertError::Parse("bad d value".into()))?;
        let mut cones = Vec::new();
        let cp = cones_part.trim();
        if !cp.is_empty() {
            for chunk in cp.split("),") {
                let chunk = chunk.trim().trim_start_matches('(').trim_end_matches(')');
                let (p, b) = chunk
                    .split_once(',')
                    .ok_or_else(|| SeifertError::Parse(format!("bad cone pair `{chunk}`")))?;
                let p: i64 = p
                    .trim()
                    .parse()
                    .map_err(|_| SeifertError::Parse(format!("bad cone order `{p}`")))?;
                let b: i64 = b
                    .trim()
                    .parse()
                    .map_err(|_| SeifertError::Parse(format!("bad cone exponent `{b}`")))?;
                cones.push((p, b));
            }
        }
        SeifertData::new(cones, d)
    }
}

/// An unordered triangle-group triple with its catalogue membership.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TriangleKey {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ListTag {
    Top,
    Bottom,
    Other,
}

pub const TOP_LIST: [(i64, i64, i64); 5] = [(3, 3, 4), (3, 3, 5), (3, 3, 6), (2, 5, 5), (4, 4, 4)];
pub const BOTTOM_LIST: [(i64, i64, i64); 5] =
    [(2, 3, 8), (2, 3, 10), (2, 3, 12), (2, 4, 5), (2, 4, 8)];

impl TriangleKey {
    pub fn new(p: i64, q: i64, r: i64) -> Self {
        TriangleKey { p, q, r }
    }

    fn sorted(&self) -> (i64, i64, i64) {
        let mut v = [self.p, self.q, self.r];
        v.sort_unstable();
        (v[0], v[1], v[2])
    }

    pub fn list_tag(&self) -> ListTag {
        let s = self.sorted();
        let norm = |t: (i64, i64, i64)| {
            let mut v = [t.0, t.1, t.2];
            v.sort_unstable();
            (v[0], v[1], v[2])
        };
        if TOP_LIST.iter().any(|&t| norm(t) == s) {
            ListTag::Top
        } else if BOTTOM_LIST.iter().any(|&t| norm(t) == s) {
            ListTag::Bottom
        } else {
            ListTag::Other
        }
    }

    /// `1/p + 1/q + 1/r < 1`.
    pub fn is_hyperbolic(&self) -> bool {
        self.q * self.r + self.p * self.r + self.p * self.q < self.p * self.q * self.r
    }

    /// `< a,b,c | a^p, b^q, c^r, a*b*c >`.
    pub fn presentation(&self) -> Presentation {
        let relators = vec![
            Word::generator(0, self.p),
            Word::generator(1, self.q),
            Word::generator(2, self.r),
            Word::reduce(&[(0, 1), (1, 1), (2, 1)]),
        ];
        Presentation::new(vec!["a", "b", "c"], relators).expect("triangle presentation")
    }
}

impl fmt::Display for TriangleKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{})", self.p, self.q, self.r)
    }
}

impl FromStr for TriangleKey {
    type Err = SeifertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix("T(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| SeifertError::Parse("expected T(p,q,r)".into()))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(SeifertError::Parse("expected three cone orders".into()));
        }
        let mut v = [0i64; 3];
        for (i, part) in parts.iter().enumerate() {
            v[i] = part
                .trim()
                .parse()
                .map_err(|_| SeifertError::Parse(format!("bad cone order `{part}`")))?;
        }
        Ok(TriangleKey::new(v[0], v[1], v[2]))
    }
}

/// Closed-form `H_1` for Seifert data over the five catalogued bases
/// (`e` are the cone exponents, `d` as stored in [`SeifertData`]):
///
/// * `(3,3,4)`: `C_{3k}`, `k = 4e1 + 4e2 + 3e3 + 12d`
/// * `(3,3,5)`: `C_{3k}`, `k = 5e1 + 5e2 + 3e3 + 15d`
/// * `(3,3,6)`: `C_3 x C_{3k}`, `k = 2e1 + 2e2 + e3 + 6d`
/// * `(2,5,5)`: `C_{5k}`, `k = 5e1 + 2e2 + 2e3 + 10d`
/// * `(4,4,4)`: `C_4 x C_{4k}`, `k = e1 + e2 + e3 + 4d`
pub fn h1_closed_form(
    key: TriangleKey,
    e: (i64, i64, i64),
    d: i64,
) -> Result<AbelianInvariants, SeifertError> {
    if key.list_tag() != ListTag::Top {
        return Err(SeifertError::NotTopList(key));
    }
    let (p, q, r) = (key.p, key.q, key.r);
    let (e1, e2, e3) = e;
    for (cone, exp) in [(p, e1), (q, e2), (r, e3)] {
        if cone.gcd(&exp) != 1 {
            return Err(SeifertError::NotCoprime { p: cone, beta: exp });
        }
    }
    let inv = match (p, q, r) {
        (3, 3, 4) => {
            let k = 4 * e1 + 4 * e2 + 3 * e3 + 12 * d;
            AbelianInvariants::from_divisors(vec![Int::from(3 * k)], 0)
        }
        (3, 3, 5) => {
            let k = 5 * e1 + 5 * e2 + 3 * e3 + 15 * d;
            AbelianInvariants::from_divisors(vec![Int::from(3 * k)], 0)
        }
        (3, 3, 6) => {
            let k = 2 * e1 + 2 * e2 + e3 + 6 * d;
            AbelianInvariants::from_divisors(vec![Int::from(3), Int::from(3 * k)], 0)
        }
        (2, 5, 5) => {
            let k = 5 * e1 + 2 * e2 + 2 * e3 + 10 * d;
            AbelianInvariants::from_divisors(vec![Int::from(5 * k)], 0)
        }
        (4, 4, 4) => {
            let k = e1 + e2 + e3 + 4 * d;
            AbelianInvariants::from_divisors(vec![Int::from(4), Int::from(4 * k)], 0)
        }
        _ => return Err(SeifertError::NotTopList(key)),
    };
    Ok(inv)
}

/// Determinant of the relation matrix as the five closed formulas give it
/// (sign included), for cross-checking against direct expansion.
pub fn determinant_closed_form(key: TriangleKey, e: (i64, i64, i64), d: i64) -> Option<Int> {
    let (e1, e2, e3) = e;
    let val = match (key.p, key.q, key.r) {
        (3, 3, 4) => 3 * (4 * e1 + 4 * e2 + 3 * e3 + 12 * d),
        (3, 3, 5) => 3 * (5 * e1 + 5 * e2 + 3 * e3 + 15 * d),
        (3, 3, 6) => 9 * (2 * e1 + 2 * e2 + e3 + 6 * d),
        (2, 5, 5) => 5 * (5 * e1 + 2 * e2 + 2 * e3 + 10 * d),
        (4, 4, 4) => 16 * (e1 + e2 + e3 + 4 * d),
        _ => return None,
    };
    Some(Int::from(val))
}

/// `|H_1|` of `< a,b,c,z | a^p=b^q=c^r=z, abc=z^{2d} >` for odd `p,q,r`:
/// `|r(q+p) + pq - 2pqrd|`, always odd.
pub fn allodd_order(p: i64, q: i64, r: i64, d: i64) -> Result<Int, SeifertError> {
    if p < 3 || q < 3 || r < 3 || p % 2 == 0 || q % 2 == 0 || r % 2 == 0 {
        return Err(SeifertError::NotAllOdd(p, q, r));
    }
    let val = Int::from(r * (q + p) + p * q - 2 * p * q * r * d).abs();
    debug_assert!(val.is_odd());
    Ok(val)
}

/// The Seifert data realizing `< a,b,c,z | a^p=b^q=c^r=z, abc=z^{2d} >`:
/// cone pairs `(p,-1),(q,-1),(r,-1)` and stored `d = 2d`.
pub fn allodd_data(p: i64, q: i64, r: i64, d: i64) -> Result<SeifertData, SeifertError> {
    if p < 3 || q < 3 || r < 3 || p % 2 == 0 || q % 2 == 0 || r % 2 == 0 {
        return Err(SeifertError::NotAllOdd(p, q, r));
    }
    SeifertData::new(vec![(p, -1), (q, -1), (r, -1)], 2 * d)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Sign::Plus { "+" } else { "-" })
    }
}

/// `G+(d) = < a,b,c,z | a^4 z, b^4 z, c^4 z, a b c z^d >` and `G-(d)` with
/// first relator `a^4 z^-1`, centrality materialized.
pub fn gamma444(sign: Sign, d: i64) -> Presentation {
    let zi = 3;
    let first_beta = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let relators = vec![
        Word::generator(0, 4).concat(&Word::generator(zi, first_beta)),
        Word::generator(1, 4).concat(&Word::generator(zi, 1)),
        Word::generator(2, 4).concat(&Word::generator(zi, 1)),
        Word::reduce(&[(0, 1), (1, 1), (2, 1), (zi, d)]),
        Word::commutator(&Word::generator(zi, 1), &Word::generator(0, 1)),
        Word::commutator(&Word::generator(zi, 1), &Word::generator(1, 1)),
        Word::commutator(&Word::generator(zi, 1), &Word::generator(2, 1)),
    ];
    Presentation::new(vec!["a", "b", "c", "z"], relators).expect("gamma family presentation")
}

/// The same group as Seifert data (the family relator `a b c z^d = 1` means
/// the stored product exponent is `-d`).
pub fn gamma444_data(sign: Sign, d: i64) -> SeifertData {
    let first_beta = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    SeifertData::new(vec![(4, first_beta), (4, 1), (4, 1)], -d).expect("gamma family data")
}

/// The Coxeter involution images `(a,b,c,z) -> (a^-1, b^-1, b c^-1 b^-1,
/// z^-1)` on the 4-generator Seifert presentation.
pub fn coxeter_involution() -> Vec<Word> {
    vec![
        Word::generator(0, -1),
        Word::generator(1, -1),
        Word::reduce(&[(1, 1), (2, -1), (1, -1)]),
        Word::generator(3, -1),
    ]
}

/// Coxeter extension `Lambda = Pi x| C_2` of a 3-cone-point Seifert group
/// whose `H_1` is finite of odd order.
pub fn coxeter_extension(data: &SeifertData) -> Result<Presentation, SeifertError> {
    if data.cones.len() != 3 {
        return Err(SeifertError::NotThreeCones(data.cones.len()));
    }
    let pres = data.presentation();
    let h1 = pres.abelianization();
    let odd = h1.order().map(|o| o.is_odd()).unwrap_or(false);
    if !odd {
        return Err(SeifertError::H1NotOdd(h1));
    }
    Ok(pres.semidirect(&coxeter_involution(), 2).expect("coxeter extension"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tor(inv: &AbelianInvariants) -> Vec<i64> {
        inv.torsion.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn presentation_shape_and_h1() {
        let data = SeifertData::new(vec![(3, 1), (3, 1), (4, 1)], 0).unwrap();
        let p = data.presentation();
        assert_eq!(p.gen_count(), 4);
        assert_eq!(p.relators().len(), 7);
        assert_eq!(tor(&p.abelianization()), vec![33]);
        // (2,5,5) with e = (1,2,2): order 5*13 = 65
        let q = SeifertData::new(vec![(2, 1), (5, 2), (5, 2)], 0).unwrap();
        assert_eq!(q.abelianization().order(), Some(Int::from(65)));
        // no cone points: Z
        let z = SeifertData::new(vec![], 0).unwrap();
        assert_eq!(z.abelianization().free_rank, 1);
        // coprimality rejected
        assert!(SeifertData::new(vec![(4, 2)], 0).is_err());
    }

    #[test]
    fn euler_numbers() {
        let data = SeifertData::new(vec![(4, 1), (4, 1), (4, 1)], 1).unwrap();
        assert_eq!(data.euler_number(), Rat::new(Int::from(-7), Int::from(4)));
        let empty = SeifertData::new(vec![], 0).unwrap();
        assert!(empty.euler_number().is_zero());
        // normalization preserves the euler number
        let raw = SeifertData::new(vec![(4, 5), (4, 1), (4, 1)], 0).unwrap();
        let norm = raw.normalize();
        assert_eq!(norm, SeifertData::new(vec![(4, 1), (4, 1), (4, 1)], 1).unwrap());
        assert_eq!(raw.euler_number(), norm.euler_number());
    }

    #[test]
    fn closed_forms_match_snf() {
        let cases = [
            (TriangleKey::new(3, 3, 4), (1, 1, 1), 0, vec![33]),
            (TriangleKey::new(3, 3, 6), (1, 1, 1), 0, vec![3, 15]),
            (TriangleKey::new(4, 4, 4), (1, 1, 1), 0, vec![4, 12]),
        ];
        for (key, e, d, want) in cases {
            let inv = h1_closed_form(key, e, d).unwrap();
            assert_eq!(tor(&inv), want, "{key}");
            let data = SeifertData::new(vec![(key.p, e.0), (key.q, e.1), (key.r, e.2)], d).unwrap();
            assert_eq!(data.abelianization(), inv, "{key} SNF disagrees");
        }
        assert!(h1_closed_form(TriangleKey::new(2, 3, 7), (1, 1, 1), 0).is_err());
        assert!(h1_closed_form(TriangleKey::new(3, 3, 4), (3, 1, 1), 0).is_err());
    }

    #[test]
    fn allodd_examples() {
        assert_eq!(allodd_order(3, 3, 5, 0).unwrap(), Int::from(39));
        assert_eq!(allodd_order(3, 3, 5, 1).unwrap(), Int::from(51));
        assert_eq!(allodd_order(5, 5, 5, 0).unwrap(), Int::from(75));
        assert!(allodd_order(2, 3, 5, 0).is_err());
        // SNF on the realizing presentation agrees
        let data = allodd_data(3, 3, 5, 1).unwrap();
        assert_eq!(data.abelianization().order(), Some(Int::from(51)));
    }

    #[test]
    fn root_extension_scales_euler() {
        let data = gamma444_data(Sign::Plus, 1);
        let tripled = data.root_extension(3).unwrap();
        assert_eq!(
            tripled.euler_number(),
            data.euler_number() * Rat::from_integer(Int::from(3))
        );
        assert_eq!(data.root_extension(1).unwrap(), data);
        assert!(data.root_extension(2).is_err());
        // worked example: G+(1) data, N = 5, normalizes to G+(2) data
        let ext = data.root_extension(5).unwrap().normalize();
        assert_eq!(ext, gamma444_data(Sign::Plus, 2).normalize());
    }

    #[test]
    fn gamma_family_abelianizations() {
        assert_eq!(tor(&gamma444(Sign::Plus, 1).abelianization()), vec![4, 4]);
        assert_eq!(tor(&gamma444(Sign::Minus, 0).abelianization()), vec![4, 4]);
        // |4d-3| = 5 at d = 2: chain (4, 20)
        assert_eq!(tor(&gamma444(Sign::Plus, 2).abelianization()), vec![4, 20]);
        // matches the Seifert-data adapter
        for d in -3..=3 {
            for sign in [Sign::Plus, Sign::Minus] {
                assert_eq!(
                    gamma444(sign, d).abelianization(),
                    gamma444_data(sign, d).abelianization(),
                    "adapter mismatch at {sign}{d}"
                );
            }
        }
    }

    #[test]
    fn triangle_keys() {
        let k334 = TriangleKey::new(3, 3, 4);
        assert_eq!(k334.list_tag(), ListTag::Top);
        assert_eq!(TriangleKey::new(2, 3, 8).list_tag(), ListTag::Bottom);
        assert_eq!(TriangleKey::new(2, 3, 7).list_tag(), ListTag::Other);
        assert!(k334.is_hyperbolic());
        assert!(!TriangleKey::new(2, 3, 6).is_hyperbolic());
        assert_eq!(tor(&k334.presentation().abelianization()), vec![3]);
        assert_eq!(tor(&TriangleKey::new(2, 5, 5).presentation().abelianization()), vec![5]);
        assert_eq!(tor(&TriangleKey::new(2, 3, 8).presentation().abelianization()), vec![2]);
    }

    #[test]
    fn coxeter_extension_h1() {
        let data = SeifertData::new(vec![(3, 1), (3, 1), (4, 1)], 0).unwrap();
        let lambda = coxeter_extension(&data).unwrap();
        assert_eq!(tor(&lambda.abelianization()), vec![2]);
        assert_eq!(lambda.abelianization().free_rank, 0);
        // (4,4,4): H1 even, rejected
        let bad = gamma444_data(Sign::Plus, 0);
        assert!(matches!(coxeter_extension(&bad), Err(SeifertError::H1NotOdd(_))));
    }

    #[test]
    fn data_text_round_trip() {
        let data = SeifertData::new(vec![(3, 1), (3, 1), (4, 1)], 0).unwrap();
        let s = data.to_string();
        assert_eq!(s, "SFS[(3,1),(3,1),(4,1); d=0]");
        assert_eq!(s.parse::<SeifertData>().unwrap(), data);
        let key: TriangleKey = "T(3,3,4)".parse().unwrap();
        assert_eq!(key, TriangleKey::new(3, 3, 4));
    }

    #[test]
    fn relation_matrix_determinants() {
        for (key, e, d) in [
            (TriangleKey::new(3, 3, 4), (1, 1, 1), 0),
            (TriangleKey::new(3, 3, 5), (1, 2, 3), -2),
            (TriangleKey::new(2, 5, 5), (1, 2, 2), 1),
            (TriangleKey::new(4, 4, 4), (1, 3, 3), 2),
        ] {
            let data =
                SeifertData::new(vec![(key.p, e.0), (key.q, e.1), (key.r, e.2)], d).unwrap();
            let det = data.relation_matrix().determinant().unwrap();
            let formula = determinant_closed_form(key, e, d).unwrap();
            assert_eq!(det.abs(), formula.abs(), "{key} e={e:?} d={d}");
        }
    }
}
