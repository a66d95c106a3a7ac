//! Generator permutations for the catalog groups: natural actions for
//! symmetric/alternating/dihedral groups, projective actions for the
//! matrix families, and right-regular actions for the small 2-groups
//! given by normal-form multiplication rules.

use super::field::Gf;

pub type Perm = Vec<u16>;

pub fn identity(degree: usize) -> Perm {
    (0..degree as u16).collect()
}

pub fn compose(a: &Perm, b: &Perm) -> Perm {
    // (a then b): point p -> b[a[p]]
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn invert(a: &Perm) -> Perm {
    let mut out = vec![0u16; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u16;
    }
    out
}

/// Permutation from disjoint cycles over `0..degree`.
pub fn from_cycles(degree: usize, cycles: &[&[u16]]) -> Perm {
    let mut p = identity(degree);
    for cyc in cycles {
        for w in cyc.windows(2) {
            p[w[0] as usize] = w[1];
        }
        if cyc.len() > 1 {
            p[cyc[cyc.len() - 1] as usize] = cyc[0];
        }
    }
    p
}

pub fn cyclic_gens(n: usize) -> (usize, Vec<Perm>) {
    if n == 1 {
        return (1, vec![]);
    }
    let cyc: Vec<u16> = (0..n as u16).collect();
    (n, vec![from_cycles(n, &[&cyc])])
}

/// Dihedral group of order `n` (n even): rotation and reflection of an
/// `n/2`-gon. Order 4 is the Klein group on two 2-point orbits.
pub fn dihedral_gens(n: usize) -> (usize, Vec<Perm>) {
    assert!(n >= 4 && n % 2 == 0, "dihedral order must be even and >= 4");
    let m = n / 2;
    if m == 2 {
        return (4, vec![from_cycles(4, &[&[0, 1]]), from_cycles(4, &[&[2, 3]])]);
    }
    let rot: Vec<u16> = (0..m as u16).collect();
    let refl: Perm = (0..m).map(|i| ((m - i) % m) as u16).collect();
    (m, vec![from_cycles(m, &[&rot]), refl])
}

pub fn symmetric_gens(n: usize) -> (usize, Vec<Perm>) {
    assert!(n >= 2);
    let cyc: Vec<u16> = (0..n as u16).collect();
    (n, vec![from_cycles(n, &[&[0, 1]]), from_cycles(n, &[&cyc])])
}

pub fn alternating_gens(n: usize) -> (usize, Vec<Perm>) {
    assert!(n >= 3);
    let three = from_cycles(n, &[&[0, 1, 2]]);
    let big = if n % 2 == 1 {
        let cyc: Vec<u16> = (0..n as u16).collect();
        from_cycles(n, &[&cyc])
    } else {
        let cyc: Vec<u16> = (1..n as u16).collect();
        from_cycles(n, &[&cyc])
    };
    (n, vec![three, big])
}

/// 2x2 matrices over GF(q) acting on the projective line (q+1 points:
/// `[1:x]` for x in GF(q) at indices 0..q, `[0:1]` at index q).
fn psl2_point_action(f: &Gf, m: [[u32; 2]; 2]) -> Perm {
    let q = f.q as usize;
    let mut perm = vec![0u16; q + 1];
    for idx in 0..=q {
        let (a, b) = if idx < q { (1, idx as u32) } else { (0, 1) };
        // column vector (a, b), image (m00*a + m01*b, m10*a + m11*b)
        let x = f.add(f.mul(m[0][0], a), f.mul(m[0][1], b));
        let y = f.add(f.mul(m[1][0], a), f.mul(m[1][1], b));
        let img = if x != 0 {
            let s = f.inv(x);
            f.mul(y, s) as usize
        } else {
            assert!(y != 0, "matrix not invertible");
            q
        };
        perm[idx] = img as u16;
    }
    perm
}

/// Generators of PSL(2, q) on the projective line: an upper unipotent, a
/// diagonal torus element, and the Weyl reflection.
pub fn psl2_gens(q: u32) -> (usize, Vec<Perm>) {
    let f = Gf::new(q);
    let one = 1u32;
    let w = [[0, f.neg(one)], [one, 0]];
    let u = [[one, one], [0, one]];
    let mut gens = vec![psl2_point_action(&f, u), psl2_point_action(&f, w)];
    if q > 3 {
        let g = f.primitive();
        let d = [[g, 0], [0, f.inv(g)]];
        gens.push(psl2_point_action(&f, d));
    }
    ((q + 1) as usize, gens)
}

pub fn psl2_order(q: u64) -> u64 {
    let raw = q * (q * q - 1);
    if q % 2 == 0 {
        raw
    } else {
        raw / 2
    }
}

/// Points of PG(2, q): normalized triples, first nonzero coordinate 1.
fn pg2_points(f: &Gf) -> Vec<[u32; 3]> {
    let q = f.q;
    let mut pts = Vec::new();
    for x in 0..q {
        for y in 0..q {
            pts.push([1, x, y]);
        }
    }
    for y in 0..q {
        pts.push([0, 1, y]);
    }
    pts.push([0, 0, 1]);
    pts
}

fn normalize3(f: &Gf, v: [u32; 3]) -> [u32; 3] {
    let lead = v.iter().position(|&x| x != 0).expect("zero projective vector");
    let s = f.inv(v[lead]);
    [f.mul(v[0], s), f.mul(v[1], s), f.mul(v[2], s)]
}

fn action3(f: &Gf, pts: &[[u32; 3]], m: [[u32; 3]; 3]) -> Perm {
    let index = |v: [u32; 3]| -> u16 {
        let n = normalize3(f, v);
        pts.iter().position(|&p| p == n).expect("image not a catalogued point") as u16
    };
    pts.iter()
        .map(|&p| {
            let mut img = [0u32; 3];
            for (i, row) in m.iter().enumerate() {
                let mut acc = 0;
                for (j, &mij) in row.iter().enumerate() {
                    acc = f.add(acc, f.mul(mij, p[j]));
                }
                img[i] = acc;
            }
            index(img)
        })
        .collect()
}

/// PSL(3,3) = SL(3,3) on the 13 points of PG(2,3); generated by a
/// transvection and the cyclic coordinate permutation.
pub fn psl3_3_gens() -> (usize, Vec<Perm>) {
    let f = Gf::new(3);
    let pts = pg2_points(&f);
    let t = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];
    let x = [[0, 0, 1], [1, 0, 0], [0, 1, 0]];
    (pts.len(), vec![action3(&f, &pts, t), action3(&f, &pts, x)])
}

/// PSU(3,3) = SU(3,3) on the 28 isotropic points of the hermitian form
/// `x1 y3^s + x2 y2^s + x3 y1^s` over GF(9), `s` the Frobenius.
pub fn psu3_3_gens() -> (usize, Vec<Perm>) {
    let f = Gf::new(9);
    let herm = |v: [u32; 3]| {
        let mut acc = 0;
        acc = f.add(acc, f.mul(v[0], f.frob(v[2])));
        acc = f.add(acc, f.mul(v[1], f.frob(v[1])));
        f.add(acc, f.mul(v[2], f.frob(v[0])))
    };
    let pts: Vec<[u32; 3]> =
        pg2_points(&f).into_iter().filter(|&p| herm(p) == 0).collect();
    assert_eq!(pts.len(), 28, "isotropic point count");
    // u(alpha, beta) with trace(beta) = -norm(alpha)
    let mk_u = |alpha: u32, beta: u32| {
        [[1, alpha, beta], [0, 1, f.neg(f.frob(alpha))], [0, 0, 1]]
    };
    // alpha = 1: need beta + beta^3 = -1 = 2; beta = 1 + i works (trace 2)
    let mut beta1 = None;
    for b in 0..9 {
        if f.add(b, f.frob(b)) == f.neg(1) {
            beta1 = Some(b);
            break;
        }
    }
    let u1 = mk_u(1, beta1.expect("hermitian trace equation solvable"));
    // alpha = 0: beta with trace 0, beta != 0
    let b0 = (1..9).find(|&b| f.add(b, f.frob(b)) == 0).expect("trace-zero element");
    let u0 = mk_u(0, b0);
    let n1 = f.neg(1);
    let w = [[0, 0, n1], [0, n1, 0], [n1, 0, 0]];
    let g = f.primitive();
    let h = [[g, 0, 0], [0, f.mul(f.frob(g), f.inv(g)), 0], [0, 0, f.inv(f.frob(g))]];
    let gens = vec![
        action3(&f, &pts, u1),
        action3(&f, &pts, u0),
        action3(&f, &pts, w),
        action3(&f, &pts, h),
    ];
    (28, gens)
}

/// Mathieu group M11 on 11 points.
pub fn m11_gens() -> (usize, Vec<Perm>) {
    let a: Vec<u16> = (0..11).collect();
    (11, vec![from_cycles(11, &[&a]), from_cycles(11, &[&[2, 6, 10, 7], &[3, 9, 4, 5]])])
}

/// Builds right-regular generator permutations from normal-form state
/// multiplication rules: `mults[i]` sends a state to `state * gen_i`.
pub fn regular_rep<S>(start: S, mults: &[&dyn Fn(&S) -> S]) -> (usize, Vec<Perm>)
where
    S: Clone + Eq + std::hash::Hash,
{
    let mut states = vec![start.clone()];
    let mut index = std::collections::HashMap::new();
    index.insert(start, 0usize);
    let mut i = 0;
    while i < states.len() {
        for m in mults {
            let next = m(&states[i]);
            if !index.contains_key(&next) {
                index.insert(next.clone(), states.len());
                states.push(next);
            }
        }
        i += 1;
    }
    let n = states.len();
    let perms = mults
        .iter()
        .map(|m| states.iter().map(|s| index[&m(s)] as u16).collect())
        .collect();
    (n, perms)
}

/// Q8 = <x,y | x^4, y^2 = x^2, y^-1 x y = x^-1>, regular representation.
pub fn q8_gens() -> (usize, Vec<Perm>) {
    dicyclic_gens(8)
}

/// Dicyclic group of order 4m: `<x,y | x^{2m}, y^2 = x^m, y^-1 x y = x^-1>`.
/// Order 8 is Q8, order 12 is Dic3, order 16 is Q16.
pub fn dicyclic_gens(order: usize) -> (usize, Vec<Perm>) {
    assert!(order % 4 == 0 && order >= 8);
    let n = (order / 2) as i64;
    let mul_x = move |&(i, e): &(i64, i64)| {
        if e == 0 {
            ((i + 1).rem_euclid(n), 0)
        } else {
            ((i - 1).rem_euclid(n), 1)
        }
    };
    let mul_y = move |&(i, e): &(i64, i64)| {
        if e == 0 {
            (i, 1)
        } else {
            ((i + n / 2).rem_euclid(n), 0)
        }
    };
    regular_rep((0i64, 0i64), &[&mul_x, &mul_y])
}

/// Semidihedral group of order 16: `y x y^-1 = x^3`.
pub fn sd16_gens() -> (usize, Vec<Perm>) {
    regular_rep((0i64, 0i64), &[
        &|&(i, e): &(i64, i64)| if e == 0 { ((i + 1) % 8, 0) } else { ((i + 3) % 8, 1) },
        &|&(i, e): &(i64, i64)| (i, 1 - e),
    ])
}

/// Modular group of order 16: `y x y^-1 = x^5`.
pub fn m16_gens() -> (usize, Vec<Perm>) {
    regular_rep((0i64, 0i64), &[
        &|&(i, e): &(i64, i64)| if e == 0 { ((i + 1) % 8, 0) } else { ((i + 5) % 8, 1) },
        &|&(i, e): &(i64, i64)| (i, 1 - e),
    ])
}

/// C4 x| C4 with inverting action: `y^-1 x y = x^-1`.
pub fn c4rc4_gens() -> (usize, Vec<Perm>) {
    regular_rep((0i64, 0i64), &[
        &|&(i, j): &(i64, i64)| ((i + if j % 2 == 0 { 1 } else { -1 }).rem_euclid(4), j),
        &|&(i, j): &(i64, i64)| (i, (j + 1) % 4),
    ])
}

/// (C2 x C2) x| C4, the C4 swapping the two factors.
pub fn c22rc4_gens() -> (usize, Vec<Perm>) {
    regular_rep((0i64, 0i64, 0i64), &[
        // * u
        &|&(a, b, j): &(i64, i64, i64)| {
            if j % 2 == 0 {
                ((a + 1) % 2, b, j)
            } else {
                (a, (b + 1) % 2, j)
            }
        },
        // * v
        &|&(a, b, j): &(i64, i64, i64)| {
            if j % 2 == 0 {
                (a, (b + 1) % 2, j)
            } else {
                ((a + 1) % 2, b, j)
            }
        },
        // * s
        &|&(a, b, j): &(i64, i64, i64)| (a, b, (j + 1) % 4),
    ])
}

/// D8 x C2 (dihedral of order 8 times a central involution).
pub fn d8xc2_gens() -> (usize, Vec<Perm>) {
    regular_rep((0i64, 0i64, 0i64), &[
        &|&(i, e, t): &(i64, i64, i64)| {
            if e == 0 {
                ((i + 1) % 4, 0, t)
            } else {
                ((i - 1).rem_euclid(4), 1, t)
            }
        },
        &|&(i, e, t): &(i64, i64, i64)| (i, 1 - e, t),
        &|&(i, e, t): &(i64, i64, i64)| (i, e, 1 - t),
    ])
}

/// Q8 x C2.
pub fn q8xc2_gens() -> (usize, Vec<Perm>) {
    regular_rep((0i64, 0i64, 0i64), &[
        &|&(i, e, t): &(i64, i64, i64)| {
            if e == 0 {
                ((i + 1) % 4, 0, t)
            } else {
                ((i - 1).rem_euclid(4), 1, t)
            }
        },
        &|&(i, e, t): &(i64, i64, i64)| if e == 0 { (i, 1, t) } else { ((i + 2) % 4, 0, t) },
        &|&(i, e, t): &(i64, i64, i64)| (i, e, 1 - t),
    ])
}

/// Central product D8 o C4 (the order-16 Pauli group): states `i^k X^a Z^b`
/// with `Z X = i^2 X Z`.
pub fn pauli_gens() -> (usize, Vec<Perm>) {
    regular_rep((0i64, 0i64, 0i64), &[
        // * X
        &|&(k, a, b): &(i64, i64, i64)| ((k + 2 * b) % 4, (a + 1) % 2, b),
        // * Z
        &|&(k, a, b): &(i64, i64, i64)| (k, a, (b + 1) % 2),
        // * i
        &|&(k, a, b): &(i64, i64, i64)| ((k + 1) % 4, a, b),
    ])
}

/// Abelian group as disjoint cycles, one per invariant factor.
pub fn abelian_gens(factors: &[usize]) -> (usize, Vec<Perm>) {
    let degree: usize = factors.iter().sum();
    let mut gens = Vec::new();
    let mut off = 0u16;
    for &f in factors {
        let cyc: Vec<u16> = (off..off + f as u16).collect();
        gens.push(from_cycles(degree, &[&cyc]));
        off += f as u16;
    }
    (degree, gens)
}
