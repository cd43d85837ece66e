//! Builders for extraspecial groups, affine semilinear groups and class-2
//! groups from field pairings.

use crate::algebra::arith::checked_pow;
use crate::algebra::GfTable;
use crate::error::{Error, Result};
use crate::limits;
use crate::linalg::Mat;
use crate::permgrp::{Perm, PermGroup, Quotient};
use crate::semilin::{Elem, SemilinearGroup};

/// Which extraspecial group of a given order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtraspecialVariant {
    /// Odd p, exponent p.
    ExponentP,
    /// Odd p, exponent p^2.
    ExponentP2,
    /// p = 2, central product of dihedral groups of order 8.
    Dihedral,
    /// p = 2, a quaternion factor and dihedral factors.
    Quaternion,
}

impl std::str::FromStr for ExtraspecialVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p" | "exponent-p" | "plus" | "+" => Ok(ExtraspecialVariant::ExponentP),
            "p2" | "exponent-p2" | "minus" | "-" => Ok(ExtraspecialVariant::ExponentP2),
            "d" | "dd" | "dihedral" => Ok(ExtraspecialVariant::Dihedral),
            "q" | "qd" | "quaternion" => Ok(ExtraspecialVariant::Quaternion),
            other => Err(Error::invalid(format!("unknown extraspecial variant {other:?}"))),
        }
    }
}

fn perm_from_fn(n: usize, f: impl Fn(usize) -> usize) -> Result<Perm> {
    Perm::from_images(&(0..n).map(f).collect::<Vec<_>>())
}

/// Extraspecial group of order p^(2m+1).
pub fn extraspecial(p: u64, m: u32, variant: ExtraspecialVariant) -> Result<PermGroup> {
    if m == 0 {
        return Err(Error::invalid("extraspecial groups need m >= 1"));
    }
    let order = checked_pow(p, 2 * m + 1).filter(|&o| o <= limits::MAX_ENUM_ORDER);
    if order.is_none() {
        return Err(Error::scale("MAX_ENUM_ORDER", limits::MAX_ENUM_ORDER, format!("{p}^{}", 2 * m + 1)));
    }
    use ExtraspecialVariant::*;
    match (p == 2, variant) {
        (true, Dihedral) | (false, ExponentP) => heisenberg_cosets(p, m),
        (true, Quaternion) => {
            let q8 = quaternion8()?;
            if m == 1 {
                return Ok(q8);
            }
            let rest = heisenberg_cosets(2, m - 1)?;
            central_product(&q8, &rest)
        }
        (false, ExponentP2) => {
            let mp = metacyclic_p3(p)?;
            if m == 1 {
                return Ok(mp);
            }
            let rest = heisenberg_cosets(p, m - 1)?;
            central_product(&mp, &rest)
        }
        _ => Err(Error::invalid(format!("variant {variant:?} does not exist for p = {p}"))),
    }
}

/// The group of maps (a, z) -> (a + x, z + w + a.y) on GF(p)^m x GF(p).
fn heisenberg_cosets(p: u64, m: u32) -> Result<PermGroup> {
    let pu = p as usize;
    let deg = pu.pow(m + 1);
    if deg > limits::MAX_DEGREE {
        return Err(Error::scale("MAX_DEGREE", limits::MAX_DEGREE, deg));
    }
    // Point index: a_0 + p a_1 + ... + p^(m-1) a_(m-1) + p^m z.
    let digit = |x: usize, i: u32| x / pu.pow(i) % pu;
    let with_digit = |x: usize, i: u32, v: usize| x - digit(x, i) * pu.pow(i) + (v % pu) * pu.pow(i);
    let mut gens = Vec::new();
    for i in 0..m {
        gens.push(perm_from_fn(deg, |x| with_digit(x, i, digit(x, i) + 1))?);
        gens.push(perm_from_fn(deg, |x| with_digit(x, m, digit(x, m) + digit(x, i)))?);
    }
    PermGroup::new(deg, gens)
}

/// Quaternion group on the nonzero vectors of GF(3)^2.
pub fn quaternion8() -> Result<PermGroup> {
    matrix_group_on_vectors(3, &[Mat::from_rows(3, &[vec![0, 2], vec![1, 0]]), Mat::from_rows(3, &[vec![1, 1], vec![1, 2]])])
}

/// SL(2,3) on the nonzero vectors of GF(3)^2.
pub fn sl23() -> Result<PermGroup> {
    matrix_group_on_vectors(3, &[Mat::from_rows(3, &[vec![1, 1], vec![0, 1]]), Mat::from_rows(3, &[vec![1, 0], vec![1, 1]])])
}

/// The nonabelian group of order p^3 and exponent p^2 on Z/p^2.
fn metacyclic_p3(p: u64) -> Result<PermGroup> {
    let n = (p * p) as usize;
    let x = perm_from_fn(n, |i| (i + 1) % n)?;
    let y = perm_from_fn(n, |i| i * (1 + p as usize) % n)?;
    PermGroup::new(n, vec![x, y])
}

/// Central product identifying centers of prime order.
pub fn central_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let za = a.center()?;
    let zb = b.center()?;
    let (Some(p), Some(q)) = (za.prime(), zb.prime()) else {
        return Err(Error::hyp("central product needs nontrivial p-group centers"));
    };
    if p != q || za.size()? != p || zb.size()? != p {
        return Err(Error::hyp("central product needs centers of the same prime order"));
    }
    let d = PermGroup::direct_product(a, b)?;
    let za_gen = za.generators().iter().find(|g| !g.is_identity()).expect("nontrivial").extend(d.degree());
    let zb_gen = zb.generators().iter().find(|g| !g.is_identity()).expect("nontrivial");
    let mut img: Vec<usize> = (0..a.degree()).collect();
    img.extend(zb_gen.inv().images().iter().map(|&x| x as usize + a.degree()));
    let shifted = Perm::from_images(&img)?;
    let diag = za_gen.mul(&shifted);
    let n = d.subgroup(vec![diag])?;
    Ok(Quotient::new(&d, &n)?.group)
}

/// A matrix group over GF(p) acting on the p^dim - 1 nonzero column vectors.
pub fn matrix_group_on_vectors(p: u64, mats: &[Mat]) -> Result<PermGroup> {
    let dim = mats.first().map(|m| m.rows).ok_or_else(|| Error::invalid("no matrices"))?;
    let total = checked_pow(p, dim as u32).filter(|&t| t as usize <= limits::MAX_DEGREE + 1);
    let total = total.ok_or_else(|| Error::scale("MAX_DEGREE", limits::MAX_DEGREE, format!("{p}^{dim}")))? as usize;
    let encode = |v: &[u64]| v.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize);
    let decode = |mut x: usize| -> Vec<u64> {
        (0..dim)
            .map(|_| {
                let c = (x % p as usize) as u64;
                x /= p as usize;
                c
            })
            .collect()
    };
    let gens = mats
        .iter()
        .map(|m| perm_from_fn(total - 1, |i| encode(&m.mul_vec(&decode(i + 1))) - 1))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(total - 1, gens)
}

/// V x| M for matrices M over GF(p), acting on the p^dim vectors.
pub fn affine_matrix_group(p: u64, mats: &[Mat]) -> Result<PermGroup> {
    let dim = mats.first().map(|m| m.rows).ok_or_else(|| Error::invalid("no matrices"))?;
    let total = checked_pow(p, dim as u32).filter(|&t| t <= limits::AFFINE_MAX_ORDER);
    let total = total.ok_or_else(|| Error::scale("AFFINE_MAX_ORDER", limits::AFFINE_MAX_ORDER, format!("{p}^{dim}")))? as usize;
    let pu = p as usize;
    let encode = |v: &[u64]| v.iter().rev().fold(0usize, |acc, &c| acc * pu + c as usize);
    let decode = |mut x: usize| -> Vec<u64> {
        (0..dim)
            .map(|_| {
                let c = (x % pu) as u64;
                x /= pu;
                c
            })
            .collect()
    };
    let mut gens = Vec::new();
    for i in 0..dim {
        gens.push(perm_from_fn(total, |x| {
            let mut v = decode(x);
            v[i] = (v[i] + 1) % p;
            encode(&v)
        })?);
    }
    for m in mats {
        gens.push(perm_from_fn(total, |x| encode(&m.mul_vec(&decode(x))))?);
    }
    PermGroup::new(total, gens)
}

/// V x| H on the q field elements: translations and x -> g^A x^(p^k).
pub fn affine_semilinear(h: &SemilinearGroup) -> Result<PermGroup> {
    let q = h.q();
    if q > limits::AFFINE_MAX_ORDER {
        return Err(Error::scale("AFFINE_MAX_ORDER", limits::AFFINE_MAX_ORDER, q));
    }
    let t = h.table();
    let n = q as usize;
    let mut gens = Vec::new();
    for i in 0..h.n() {
        let b = checked_pow(h.p(), i).expect("below q") as u32;
        gens.push(perm_from_fn(n, |x| t.add(x as u32, b) as usize)?);
    }
    for x in h.generators() {
        let g = semilinear_perm(t, x, 1);
        if g.iter().enumerate().any(|(i, &v)| i != v as usize) {
            gens.push(perm_from_fn(n, |v| g[v] as usize)?);
        }
    }
    let g = PermGroup::new(n, gens)?;
    let expect = q as u128 * h.order() as u128;
    if g.order_u128()? != expect {
        return Err(Error::hyp("semilinear action is not faithful"));
    }
    Ok(g)
}

/// Images of all field codes under x -> g^(eA) x^(p^k).
fn semilinear_perm(t: &GfTable, x: Elem, e: i64) -> Vec<u32> {
    let q1 = (t.q - 1).max(1) as i64;
    let c = t.g_pow((e.rem_euclid(q1) as i128 * x.a as i128 % q1 as i128) as i64);
    (0..t.q as u32).map(|v| t.mul(c, t.frob(v, x.k))).collect()
}

/// P x| H where P = V x V x V with (a, z)(b, w) = (a + b, z + w + a1 b2) and
/// H acting by c(a1, a2, z) = (c a1, c a2, c^2 z) and Frobenius coordinatewise.
/// Acts on the q^3 elements of P.
pub fn heisenberg_pairing(h: &SemilinearGroup) -> Result<PermGroup> {
    let q = h.q();
    let size = checked_pow(q, 3).filter(|&s| s <= limits::PAIRING_MAX_ORDER);
    let size = size.ok_or_else(|| Error::scale("PAIRING_MAX_ORDER", limits::PAIRING_MAX_ORDER, format!("{q}^3")))? as usize;
    let t = h.table();
    let qu = q as usize;
    let split = |x: usize| -> (u32, u32, u32) { ((x % qu) as u32, (x / qu % qu) as u32, (x / (qu * qu)) as u32) };
    let join = |a1: u32, a2: u32, z: u32| a1 as usize + qu * a2 as usize + qu * qu * z as usize;
    let mul = |x: usize, y: usize| -> usize {
        let (a1, a2, z) = split(x);
        let (b1, b2, w) = split(y);
        join(t.add(a1, b1), t.add(a2, b2), t.add(t.add(z, w), t.mul(a1, b2)))
    };
    let mut gens = Vec::new();
    for i in 0..h.n() {
        let b = checked_pow(h.p(), i).expect("below q") as u32;
        for g in [join(b, 0, 0), join(0, b, 0)] {
            gens.push(perm_from_fn(size, |x| mul(x, g))?);
        }
    }
    let mut autos = Vec::new();
    for x in h.generators() {
        let lin = semilinear_perm(t, x, 1);
        let quad = semilinear_perm(t, x, 2);
        let a = perm_from_fn(size, |v| {
            let (a1, a2, z) = split(v);
            join(lin[a1 as usize], lin[a2 as usize], quad[z as usize])
        })?;
        if !a.is_identity() {
            autos.push(a);
        }
    }
    // Equivariance of the pairing on generators: phi(x y) = phi(x) phi(y).
    if q <= 64 {
        for a in &autos {
            for g in &gens {
                let gen_elem = g.apply(0);
                for x in 0..size {
                    if a.apply(mul(x, gen_elem)) != mul(a.apply(x), a.apply(gen_elem)) {
                        return Err(Error::invariant("pairing is not equivariant"));
                    }
                }
            }
        }
    }
    gens.extend(autos);
    let g = PermGroup::new(size, gens)?;
    let expect = size as u128 * h.order() as u128;
    if g.order_u128()? != expect {
        return Err(Error::hyp("action on the pairing group is not faithful"));
    }
    Ok(g)
}

/// The group on GF(q)^2 with (a, z)(b, w) = (a + b, z + w + a b^(p^k)), acting
/// on its own elements, extended by H. H acts as x -> g^A x^(p^j) on a and
/// with exponent 1 + p^k on z.
pub fn suzuki_type(h: &SemilinearGroup, k: u32) -> Result<PermGroup> {
    let q = h.q();
    let size = checked_pow(q, 2).filter(|&s| s <= limits::PAIRING_MAX_ORDER);
    let size = size.ok_or_else(|| Error::scale("PAIRING_MAX_ORDER", limits::PAIRING_MAX_ORDER, format!("{q}^2")))? as usize;
    if k == 0 || k >= h.n() {
        return Err(Error::invalid(format!("twist exponent k = {k} must lie in 1..{}", h.n())));
    }
    let t = h.table();
    let qu = q as usize;
    let split = |x: usize| -> (u32, u32) { ((x % qu) as u32, (x / qu) as u32) };
    let join = |a: u32, z: u32| a as usize + qu * z as usize;
    let mul = |x: usize, y: usize| -> usize {
        let (a, z) = split(x);
        let (b, w) = split(y);
        join(t.add(a, b), t.add(t.add(z, w), t.mul(a, t.frob(b, k))))
    };
    let mut gens = Vec::new();
    for i in 0..h.n() {
        let b = checked_pow(h.p(), i).expect("below q") as u32;
        let e = join(b, 0);
        gens.push(perm_from_fn(size, |x| mul(x, e))?);
    }
    let twist = 1 + checked_pow(h.p(), k).expect("below q") as i64;
    let mut autos = Vec::new();
    for x in h.generators() {
        let lin = semilinear_perm(t, x, 1);
        let top = semilinear_perm(t, x, twist);
        let a = perm_from_fn(size, |v| {
            let (a, z) = split(v);
            join(lin[a as usize], top[z as usize])
        })?;
        if !a.is_identity() {
            autos.push(a);
        }
    }
    let gen_elems: Vec<usize> = gens.iter().map(|g| g.apply(0)).collect();
    for a in &autos {
        for x in 0..size {
            for &y in &gen_elems {
                if a.apply(mul(x, y)) != mul(a.apply(x), a.apply(y)) {
                    return Err(Error::invariant("twisted law is not equivariant"));
                }
            }
        }
    }
    gens.extend(autos);
    let g = PermGroup::new(size, gens)?;
    let expect = size as u128 * h.order() as u128;
    if g.order_u128()? != expect {
        return Err(Error::hyp("action on the twisted group is not faithful"));
    }
    Ok(g)
}

/// The exponent-p extraspecial group of order p^3 on its own elements with
/// (a, z)(b, w) = (a + b, z + w + (a1 b2 - a2 b1)/2), extended by matrices
/// of determinant 1 acting on a.
pub fn extraspecial_by_symplectic(p: u64, mats: &[Mat]) -> Result<PermGroup> {
    if p == 2 {
        return Err(Error::invalid("symplectic law needs odd p"));
    }
    for m in mats {
        if m.rows != 2 || m.cols != 2 || m.p != p || m.det() != 1 {
            return Err(Error::invalid("matrices must lie in SL(2, p)"));
        }
    }
    let pu = p as usize;
    let size = pu * pu * pu;
    let half = crate::algebra::arith::inv_mod(2, p).expect("odd p");
    let split = |x: usize| -> (u64, u64, u64) { ((x % pu) as u64, (x / pu % pu) as u64, (x / (pu * pu)) as u64) };
    let join = |a1: u64, a2: u64, z: u64| (a1 % p) as usize + pu * (a2 % p) as usize + pu * pu * (z % p) as usize;
    let mul = |x: usize, y: usize| -> usize {
        let (a1, a2, z) = split(x);
        let (b1, b2, w) = split(y);
        let form = (a1 * b2 + p * p - a2 * b1) % p * half % p;
        join(a1 + b1, a2 + b2, z + w + form)
    };
    let mut gens = vec![perm_from_fn(size, |x| mul(x, join(1, 0, 0)))?, perm_from_fn(size, |x| mul(x, join(0, 1, 0)))?];
    for m in mats {
        gens.push(perm_from_fn(size, |x| {
            let (a1, a2, z) = split(x);
            let v = m.mul_vec(&[a1, a2]);
            join(v[0], v[1], z)
        })?);
    }
    PermGroup::new(size, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilin::field_table;

    #[test]
    fn extraspecial_orders() {
        use ExtraspecialVariant::*;
        for (p, m, v, order) in [(3, 1, ExponentP, 27), (3, 1, ExponentP2, 27), (2, 1, Quaternion, 8), (2, 1, Dihedral, 8), (2, 2, Quaternion, 32), (2, 2, Dihedral, 32), (5, 1, ExponentP, 125), (3, 2, ExponentP2, 243)] {
            let g = extraspecial(p, m, v).unwrap();
            assert_eq!(g.size().unwrap(), order, "{p} {m} {v:?}");
            assert_eq!(g.center().unwrap().size().unwrap(), p);
            assert_eq!(g.nilpotency_class(), Some(2));
            let e = g.exponent().unwrap();
            match v {
                ExponentP => assert_eq!(e, p),
                ExponentP2 => assert_eq!(e, p * p),
                _ => assert_eq!(e, 4),
            }
        }
        // Q8 has a unique involution; D8 has five.
        let count_inv = |g: &PermGroup| g.elements().unwrap().iter().filter(|x| x.order() == 2).count();
        assert_eq!(count_inv(&extraspecial(2, 1, Quaternion).unwrap()), 1);
        assert_eq!(count_inv(&extraspecial(2, 1, Dihedral).unwrap()), 5);
    }

    #[test]
    fn affine_and_pairing() {
        let h = SemilinearGroup::gamma0(field_table(2, 2).unwrap()).unwrap();
        let a4 = affine_semilinear(&h).unwrap();
        assert_eq!(a4.size().unwrap(), 12);
        assert!(!a4.sylow(3).unwrap().is_normal_in(&a4));
        let h = SemilinearGroup::gamma(field_table(5, 2).unwrap()).unwrap();
        let g = affine_semilinear(&h).unwrap();
        assert_eq!((g.degree(), g.size().unwrap()), (25, 1200));
        let h = SemilinearGroup::gamma0(field_table(2, 2).unwrap()).unwrap();
        let g = heisenberg_pairing(&h).unwrap();
        assert_eq!(g.size().unwrap(), 192);
        let p = g.o_p(2).unwrap();
        assert_eq!(p.derived_subgroup().size().unwrap(), 4);
        assert_eq!(p.nilpotency_class(), Some(2));
    }

    #[test]
    fn sl23_and_symplectic() {
        let g = sl23().unwrap();
        assert_eq!((g.degree(), g.size().unwrap()), (8, 24));
        let j = Mat::from_rows(3, &[vec![0, 2], vec![1, 0]]);
        let g = extraspecial_by_symplectic(3, &[j]).unwrap();
        assert_eq!(g.size().unwrap(), 108);
    }
}
