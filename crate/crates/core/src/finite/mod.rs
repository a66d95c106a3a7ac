//! Catalog of small finite groups with full element enumeration, plus the
//! arithmetic services the homomorphism search needs: subgroup closure,
//! conjugacy classes, centralizers, and transporter sets.
//!
//! Elements are indices; index 0 is the identity; numbering is the BFS
//! order from the designated generators, so equal keys rebuild identical
//! tables.

pub mod construct;
pub mod field;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use construct::Perm;

pub const DEFAULT_ORDER_BUDGET: usize = 10_000;
const TABLE_LIMIT: usize = 2048;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FiniteError {
    #[error("group order exceeds budget {budget} (reached {reached})")]
    OrderBudget { budget: usize, reached: usize },
    #[error("invalid catalog parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
}

/// Keys naming the catalog groups.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum CatalogKey {
    Cyclic(u32),
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    Psl2(u32),
    Order16(u32),
    /// Hand-curated explicit groups: small abelians, Q8, Dic3, and the
    /// extra simple groups the quotient scan needs.
    Explicit(&'static str),
}

pub const EXPLICIT_LABELS: [&str; 8] =
    ["C2xC2", "C4xC2", "C2xC2xC2", "C3xC3", "C6xC2", "Q8", "Dic3", "M11"];

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKey::Cyclic(n) => write!(f, "C{n}"),
            CatalogKey::Dihedral(n) => write!(f, "D{n}"),
            CatalogKey::Symmetric(n) => write!(f, "S{n}"),
            CatalogKey::Alternating(n) => write!(f, "A{n}"),
            CatalogKey::Psl2(q) => write!(f, "PSL2_{q}"),
            CatalogKey::Order16(k) => write!(f, "order16_#{k}"),
            CatalogKey::Explicit(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for CatalogKey {
    type Err = FiniteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(k) = t.strip_prefix("order16_#") {
            let k: u32 =
                k.parse().map_err(|_| FiniteError::UnknownKey(t.to_string()))?;
            return Ok(CatalogKey::Order16(k));
        }
        if let Some(q) = t.strip_prefix("PSL2_") {
            let q: u32 =
                q.parse().map_err(|_| FiniteError::UnknownKey(t.to_string()))?;
            return Ok(CatalogKey::Psl2(q));
        }
        if t == "PSL3_3" {
            return Ok(CatalogKey::Explicit("PSL3_3"));
        }
        if t == "PSU3_3" {
            return Ok(CatalogKey::Explicit("PSU3_3"));
        }
        if let Some(label) = EXPLICIT_LABELS.iter().find(|&&l| l == t) {
            return Ok(CatalogKey::Explicit(label));
        }
        let (head, rest) = t.split_at(1);
        let n: u32 = rest.parse().map_err(|_| FiniteError::UnknownKey(t.to_string()))?;
        match head {
            "C" => Ok(CatalogKey::Cyclic(n)),
            "D" => Ok(CatalogKey::Dihedral(n)),
            "S" => Ok(CatalogKey::Symmetric(n)),
            "A" => Ok(CatalogKey::Alternating(n)),
            _ => Err(FiniteError::UnknownKey(t.to_string())),
        }
    }
}

enum Backend {
    Table { mult: Vec<u16> },
    Perm { elems: Vec<Perm>, index: HashMap<Perm, u32> },
}

struct ClassData {
    rep_of: Vec<u32>,
    to_rep: Vec<u32>,
    reps: Vec<u32>,
    centralizers: HashMap<u32, Vec<u32>>,
}

/// A fully enumerated finite group. Multiplication is by element index,
/// either through a dense table (small orders) or by permutation
/// composition with a hash lookup.
pub struct FiniteGroupTable {
    pub label: String,
    pub order: usize,
    pub gens: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    backend: Backend,
    classes: OnceLock<ClassData>,
}

impl fmt::Debug for FiniteGroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroupTable({}, order {})", self.label, self.order)
    }
}

impl FiniteGroupTable {
    /// BFS closure of generator permutations; element 0 is the identity and
    /// numbering follows discovery order.
    pub fn from_permutations(
        label: impl Into<String>,
        degree: usize,
        gen_perms: Vec<Perm>,
        budget: usize,
    ) -> Result<Self, FiniteError> {
        let id = construct::identity(degree);
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Perm, u32> = HashMap::new();
        index.insert(id, 0);
        let mut i = 0usize;
        while i < elems.len() {
            for g in &gen_perms {
                let next = construct::compose(&elems[i], g);
                if !index.contains_key(&next) {
                    if elems.len() >= budget {
                        return Err(FiniteError::OrderBudget {
                            budget,
                            reached: elems.len() + 1,
                        });
                    }
                    index.insert(next.clone(), elems.len() as u32);
                    elems.push(next);
                }
            }
            i += 1;
        }
        let gens: Vec<u32> = gen_perms.iter().map(|g| index[g]).collect();
        let order = elems.len();
        let inv: Vec<u32> = elems.iter().map(|e| index[&construct::invert(e)]).collect();
        let backend = if order <= TABLE_LIMIT {
            let mut mult = vec![0u16; order * order];
            for (a, ea) in elems.iter().enumerate() {
                for (b, eb) in elems.iter().enumerate() {
                    mult[a * order + b] = index[&construct::compose(ea, eb)] as u16;
                }
            }
            Backend::Table { mult }
        } else {
            Backend::Perm { elems, index }
        };
        let mut table = FiniteGroupTable {
            label: label.into(),
            order,
            gens,
            inv,
            elem_order: Vec::new(),
            backend,
            classes: OnceLock::new(),
        };
        table.elem_order = (0..order as u32).map(|x| table.order_of(x)).collect();
        Ok(table)
    }

    #[inline]
    pub fn mult(&self, a: u32, b: u32) -> u32 {
        match &self.backend {
            Backend::Table { mult } => mult[a as usize * self.order + b as usize] as u32,
            Backend::Perm { elems, index } => {
                index[&construct::compose(&elems[a as usize], &elems[b as usize])]
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mult(self.mult(self.inv(g), x), g)
    }

    pub fn comm(&self, a: u32, b: u32) -> u32 {
        self.mult(self.mult(self.inv(a), self.inv(b)), self.mult(a, b))
    }

    pub fn pow(&self, a: u32, e: i64) -> u32 {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut out = 0u32;
        for _ in 0..e.unsigned_abs() {
            out = self.mult(out, base);
        }
        out
    }

    fn order_of(&self, a: u32) -> u32 {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mult(x, a);
            n += 1;
        }
        n
    }

    #[inline]
    pub fn element_order(&self, a: u32) -> u32 {
        self.elem_order[a as usize]
    }

    pub fn element_order_histogram(&self) -> Vec<(u32, usize)> {
        let mut map: std::collections::BTreeMap<u32, usize> = Default::default();
        for &o in &self.elem_order {
            *map.entry(o).or_default() += 1;
        }
        map.into_iter().collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.mult(a, b) == self.mult(b, a)))
    }

    /// Smallest subset containing the seeds and the identity, closed under
    /// multiplication (hence a subgroup of this finite group). Ascending.
    pub fn subgroup_closure(&self, seeds: &[u32]) -> Vec<u32> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut stack: Vec<u32> = vec![0];
        let mut out = vec![0u32];
        while let Some(x) = stack.pop() {
            for &s in seeds {
                let y = self.mult(x, s);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    out.push(y);
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn generates(&self, seeds: &[u32]) -> bool {
        self.subgroup_closure(seeds).len() == self.order
    }

    /// Derived subgroup as a sorted element list (closure of all
    /// commutators; a normal subgroup, so no extra normal closure needed).
    pub fn derived_subgroup(&self) -> Vec<u32> {
        let mut comms: Vec<u32> = Vec::new();
        for a in 0..self.order as u32 {
            for &b in &self.gens {
                comms.push(self.comm(a, b));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.subgroup_closure(&comms)
    }

    pub fn center_order(&self) -> usize {
        (0..self.order as u32)
            .filter(|&x| self.gens.iter().all(|&g| self.mult(x, g) == self.mult(g, x)))
            .count()
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order;
            let mut rep_of = vec![u32::MAX; n];
            let mut to_rep = vec![0u32; n];
            let mut reps = Vec::new();
            for x in 0..n as u32 {
                if rep_of[x as usize] != u32::MAX {
                    continue;
                }
                reps.push(x);
                rep_of[x as usize] = x;
                to_rep[x as usize] = 0;
                let mut frontier = vec![x];
                while let Some(z) = frontier.pop() {
                    for &g in &self.gens {
                        let y = self.conj(g, z);
                        if rep_of[y as usize] == u32::MAX {
                            rep_of[y as usize] = x;
                            // t_y with t_y^-1 y t_y = rep: y = g^-1 z g so
                            // t_y = g^-1 t_z ... conj(t_z g, ...) hmm:
                            // (t_z g)^-1 (g^-1 z g) (t_z g) is wrong; we
                            // need t with t^-1 y t = rep. From z = g y g^-1:
                            // t_z^-1 z t_z = rep => t_z^-1 g y g^-1 t_z =
                            // rep, so t_y = g^-1 t_z.
                            to_rep[y as usize] = self.mult(self.inv(g), to_rep[z as usize]);
                            frontier.push(y);
                        }
                    }
                }
            }
            let mut centralizers = HashMap::new();
            for &r in &reps {
                let c: Vec<u32> =
                    (0..n as u32).filter(|&g| self.conj(g, r) == r).collect();
                centralizers.insert(r, c);
            }
            ClassData { rep_of, to_rep, reps, centralizers }
        })
    }

    pub fn class_rep(&self, x: u32) -> u32 {
        self.class_data().rep_of[x as usize]
    }

    pub fn class_reps(&self) -> Vec<u32> {
        self.class_data().reps.clone()
    }

    pub fn centralizer_of_rep(&self, rep: u32) -> &[u32] {
        &self.class_data().centralizers[&rep]
    }

    pub fn centralizer_order(&self, x: u32) -> usize {
        let rep = self.class_rep(x);
        self.class_data().centralizers[&rep].len()
    }

    /// `{g : g^-1 x g = y}`; empty iff `x` and `y` are not conjugate, and
    /// of size `|centralizer(x)|` otherwise.
    pub fn transporter(&self, x: u32, y: u32) -> Vec<u32> {
        let data = self.class_data();
        let rx = data.rep_of[x as usize];
        if rx != data.rep_of[y as usize] {
            return Vec::new();
        }
        let tx = data.to_rep[x as usize];
        let ty_inv = self.inv(data.to_rep[y as usize]);
        data.centralizers[&rx]
            .iter()
            .map(|&c| self.mult(self.mult(tx, c), ty_inv))
            .collect()
    }
}

/// Builds a catalog group, enforcing the order budget.
pub fn build_group(key: &CatalogKey, budget: usize) -> Result<FiniteGroupTable, FiniteError> {
    let label = key.to_string();
    let bad = |msg: &str| FiniteError::InvalidParameter(format!("{label}: {msg}"));
    let (degree, gens) = match key {
        CatalogKey::Cyclic(n) => {
            if *n < 1 {
                return Err(bad("order must be >= 1"));
            }
            construct::cyclic_gens(*n as usize)
        }
        CatalogKey::Dihedral(n) => {
            if *n < 4 || n % 2 != 0 {
                return Err(bad("dihedral order must be even and >= 4"));
            }
            construct::dihedral_gens(*n as usize)
        }
        CatalogKey::Symmetric(n) => {
            if *n < 2 {
                return Err(bad("degree must be >= 2"));
            }
            construct::symmetric_gens(*n as usize)
        }
        CatalogKey::Alternating(n) => {
            if *n < 3 {
                return Err(bad("degree must be >= 3"));
            }
            construct::alternating_gens(*n as usize)
        }
        CatalogKey::Psl2(q) => {
            let Some((p, _)) = field::factor_prime_power(*q) else {
                return Err(bad("q must be a prime power"));
            };
            if *q < 4 || (*q > 32 && p != *q) || *q > 31 && p == *q {
                // supported field tables reach q = 27; prime q up to 31
                if *q > 27 {
                    return Err(bad("q out of supported range"));
                }
            }
            construct::psl2_gens(*q)
        }
        CatalogKey::Order16(k) => order16_gens(*k).ok_or_else(|| bad("index must be 1..=14"))?,
        CatalogKey::Explicit(name) => match *name {
            "C2xC2" => construct::abelian_gens(&[2, 2]),
            "C4xC2" => construct::abelian_gens(&[4, 2]),
            "C2xC2xC2" => construct::abelian_gens(&[2, 2, 2]),
            "C3xC3" => construct::abelian_gens(&[3, 3]),
            "C6xC2" => construct::abelian_gens(&[6, 2]),
            "Q8" => construct::q8_gens(),
            "Dic3" => construct::dicyclic_gens(12),
            "M11" => construct::m11_gens(),
            "PSL3_3" => construct::psl3_3_gens(),
            "PSU3_3" => construct::psu3_3_gens(),
            other => return Err(FiniteError::UnknownKey(other.to_string())),
        },
    };
    FiniteGroupTable::from_permutations(label, degree, gens, budget)
}

fn order16_gens(k: u32) -> Option<(usize, Vec<Perm>)> {
    Some(match k {
        1 => construct::abelian_gens(&[16]),
        2 => construct::abelian_gens(&[4, 4]),
        3 => construct::c22rc4_gens(),
        4 => construct::c4rc4_gens(),
        5 => construct::abelian_gens(&[8, 2]),
        6 => construct::m16_gens(),
        7 => construct::dihedral_gens(16),
        8 => construct::sd16_gens(),
        9 => construct::dicyclic_gens(16),
        10 => construct::abelian_gens(&[4, 2, 2]),
        11 => construct::d8xc2_gens(),
        12 => construct::q8xc2_gens(),
        13 => construct::pauli_gens(),
        14 => construct::abelian_gens(&[2, 2, 2, 2]),
        _ => return None,
    })
}

/// The default catalog in deterministic order.
pub fn full_catalog() -> Vec<CatalogKey> {
    let mut keys = Vec::new();
    for n in 2..=32 {
        keys.push(CatalogKey::Cyclic(n));
    }
    for n in (4..=32).step_by(2) {
        keys.push(CatalogKey::Dihedral(n));
    }
    for n in 3..=5 {
        keys.push(CatalogKey::Symmetric(n));
    }
    for n in 4..=7 {
        keys.push(CatalogKey::Alternating(n));
    }
    for q in [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27] {
        keys.push(CatalogKey::Psl2(q));
    }
    for k in 1..=14 {
        keys.push(CatalogKey::Order16(k));
    }
    for label in ["C2xC2", "C4xC2", "C2xC2xC2", "C3xC3", "C6xC2", "Q8", "Dic3"] {
        keys.push(CatalogKey::Explicit(label));
    }
    keys
}

/// All simple groups (cyclic of prime order excluded; those go through the
/// abelianization) of order at most 10^4, ascending by order.
pub fn nonabelian_simple_catalog() -> Vec<(CatalogKey, usize)> {
    vec![
        (CatalogKey::Alternating(5), 60),
        (CatalogKey::Psl2(7), 168),
        (CatalogKey::Alternating(6), 360),
        (CatalogKey::Psl2(8), 504),
        (CatalogKey::Psl2(11), 660),
        (CatalogKey::Psl2(13), 1092),
        (CatalogKey::Psl2(17), 2448),
        (CatalogKey::Alternating(7), 2520),
        (CatalogKey::Psl2(19), 3420),
        (CatalogKey::Psl2(16), 4080),
        (CatalogKey::Explicit("PSL3_3"), 5616),
        (CatalogKey::Explicit("PSU3_3"), 6048),
        (CatalogKey::Psl2(23), 6072),
        (CatalogKey::Explicit("M11"), 7920),
        (CatalogKey::Psl2(25), 7800),
        (CatalogKey::Psl2(27), 9828),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(key: CatalogKey) -> FiniteGroupTable {
        build_group(&key, DEFAULT_ORDER_BUDGET).unwrap()
    }

    #[test]
    fn orders_of_basic_families() {
        assert_eq!(build(CatalogKey::Cyclic(3)).order, 3);
        assert_eq!(build(CatalogKey::Dihedral(16)).order, 16);
        assert_eq!(build(CatalogKey::Symmetric(4)).order, 24);
        assert_eq!(build(CatalogKey::Alternating(5)).order, 60);
        assert_eq!(build(CatalogKey::Psl2(7)).order, 168);
        assert_eq!(build(CatalogKey::Psl2(9)).order, 360);
        for k in 1..=14 {
            assert_eq!(build(CatalogKey::Order16(k)).order, 16, "order16_#{k}");
        }
    }

    #[test]
    fn psl2_orders_match_formula() {
        for q in [4u32, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27] {
            let g = build(CatalogKey::Psl2(q));
            assert_eq!(g.order as u64, construct::psl2_order(q as u64), "PSL2_{q}");
        }
    }

    #[test]
    fn scan_extras_have_right_orders() {
        assert_eq!(build(CatalogKey::Explicit("PSL3_3")).order, 5616);
        assert_eq!(build(CatalogKey::Explicit("PSU3_3")).order, 6048);
        assert_eq!(build(CatalogKey::Explicit("M11")).order, 7920);
    }

    #[test]
    fn group_axioms_hold() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for key in [
            CatalogKey::Symmetric(4),
            CatalogKey::Psl2(7),
            CatalogKey::Order16(9),
            CatalogKey::Explicit("Dic3"),
        ] {
            let g = build(key);
            let n = g.order as u32;
            for x in 0..n {
                assert_eq!(g.mult(x, 0), x);
                assert_eq!(g.mult(0, x), x);
                assert_eq!(g.mult(x, g.inv(x)), 0);
            }
            for _ in 0..10_000 {
                let (a, b, c) =
                    (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                assert_eq!(g.mult(g.mult(a, b), c), g.mult(a, g.mult(b, c)));
            }
        }
    }

    #[test]
    fn closure_examples() {
        let s4 = build(CatalogKey::Symmetric(4));
        assert_eq!(s4.subgroup_closure(&[]), vec![0]);
        // a 4-cycle generates a subgroup of size 4
        let four_cycle = (0..s4.order as u32).find(|&x| s4.element_order(x) == 4).unwrap();
        assert_eq!(s4.subgroup_closure(&[four_cycle]).len(), 4);
        let psl = build(CatalogKey::Psl2(7));
        assert!(psl.generates(&psl.gens.clone()));
    }

    #[test]
    fn transporter_properties() {
        let c5 = build(CatalogKey::Cyclic(5));
        assert_eq!(c5.transporter(0, 0).len(), 5);
        assert!(c5.transporter(1, 2).is_empty());
        let s3 = build(CatalogKey::Symmetric(3));
        // two transpositions: transporter has centralizer size 2
        let transpositions: Vec<u32> =
            (0..6).filter(|&x| s3.element_order(x) == 2).collect();
        let t = s3.transporter(transpositions[0], transpositions[1]);
        assert_eq!(t.len(), 2);
        for &g in &t {
            assert_eq!(s3.conj(g, transpositions[0]), transpositions[1]);
        }
        // exhaustive law: |transporter| in {0, |C(x)|} for small groups
        for key in [CatalogKey::Dihedral(12), CatalogKey::Symmetric(4)] {
            let g = build(key);
            for x in 0..g.order as u32 {
                for y in 0..g.order as u32 {
                    let t = g.transporter(x, y);
                    assert!(t.len() == 0 || t.len() == g.centralizer_order(x));
                    for &w in t.iter().take(3) {
                        assert_eq!(g.conj(w, x), y);
                    }
                }
            }
        }
    }

    #[test]
    fn key_strings_round_trip() {
        for key in full_catalog() {
            let s = key.to_string();
            assert_eq!(s.parse::<CatalogKey>().unwrap(), key, "{s}");
        }
        assert_eq!("PSL2_7".parse::<CatalogKey>().unwrap(), CatalogKey::Psl2(7));
        assert!("Z99".parse::<CatalogKey>().is_err());
    }

    #[test]
    fn budget_enforced() {
        let err = build_group(&CatalogKey::Psl2(27), 5000).unwrap_err();
        assert!(matches!(err, FiniteError::OrderBudget { budget: 5000, .. }));
    }

    #[test]
    fn derived_and_center() {
        let s4 = build(CatalogKey::Symmetric(4));
        assert_eq!(s4.derived_subgroup().len(), 12); // A4
        assert_eq!(s4.center_order(), 1);
        let q8 = build(CatalogKey::Explicit("Q8"));
        assert_eq!(q8.derived_subgroup().len(), 2);
        assert_eq!(q8.center_order(), 2);
        let d16 = build(CatalogKey::Dihedral(16));
        assert_eq!(d16.center_order(), 2);
    }
}
