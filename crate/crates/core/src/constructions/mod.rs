//! Deterministic groups for the test corpus: extraspecial groups, affine
//! semilinear groups, class-2 groups from field pairings and named fixtures.

mod groups;
mod recipe;

pub use groups::{
    affine_matrix_group, affine_semilinear, central_product, extraspecial, extraspecial_by_symplectic, heisenberg_pairing, matrix_group_on_vectors, suzuki_type,
    quaternion8, sl23, ExtraspecialVariant,
};
pub use recipe::{default_corpus, parse_manifest, parse_recipe, Built, ConstructionRecipe, Expected, RecipeKind, CORPUS_MANIFEST};

use crate::cliffordcd::{CliffordSpec, LayerSpec};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::permgrp::{Perm, PermGroup};
use crate::semilin::{field_table, SemilinearGroup};

/// What a named identifier denotes.
#[derive(Clone, Debug)]
pub enum Named {
    Group(PermGroup),
    Spec(CliffordSpec),
}

/// Named group together with a structured description when one exists.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub group: PermGroup,
    pub spec: Option<CliffordSpec>,
}

/// The layered spec: p = 2, n = 15, H = Gamma(2^15), layer exponents 1, 3, 7.
pub fn lewis_spec() -> Result<CliffordSpec> {
    let h = SemilinearGroup::gamma(field_table(2, 15)?)?;
    CliffordSpec::new(
        "lewis",
        h,
        vec![LayerSpec::new(1, 1), LayerSpec::new(3, 1 << 7).with_count(2), LayerSpec::new(7, 1 << 15)],
    )
}

/// Spec of GF(q) x| H.
pub fn affine_spec(h: &SemilinearGroup) -> Result<CliffordSpec> {
    CliffordSpec::new(format!("affine-{}", h.q()), h.clone(), vec![LayerSpec::new(1, 1)])
}

/// Spec of the pairing group: V^2 on top, the centre below with theta(1) = q.
pub fn pairing_spec(h: &SemilinearGroup) -> Result<CliffordSpec> {
    CliffordSpec::new(format!("pairing-{}", h.q()), h.clone(), vec![LayerSpec::new(1, 1).with_copies(2), LayerSpec::new(2, h.q())])
}

/// Semilinear group by name over GF(p^n).
pub fn semilinear_by_name(p: u64, n: u32, which: &str) -> Result<SemilinearGroup> {
    let t = field_table(p, n)?;
    match which {
        "gamma" => SemilinearGroup::gamma(t),
        "gamma0" => SemilinearGroup::gamma0(t),
        "galois" => SemilinearGroup::galois(t),
        "trivial" => SemilinearGroup::new(t, 1, &[]),
        other => Err(Error::invalid(format!("unknown semilinear group `{other}`"))),
    }
}

const AFFINE: [(&str, u64, u32, &str); 10] = [
    ("aff5", 5, 1, "gamma"),
    ("aff7", 7, 1, "gamma"),
    ("a4", 2, 2, "gamma0"),
    ("aff8", 2, 3, "gamma"),
    ("aff9", 3, 2, "gamma"),
    ("aff16", 2, 4, "gamma"),
    ("frob25", 5, 2, "gamma0"),
    ("aff25", 5, 2, "gamma"),
    ("aff27", 3, 3, "gamma"),
    ("aff32", 2, 5, "gamma"),
];

const PAIRING: [(&str, u64, u32, &str); 5] =
    [("heis2", 2, 1, "trivial"), ("heis3", 3, 1, "gamma"), ("heis4", 2, 2, "gamma0"), ("heis5", 5, 1, "gamma"), ("heis8", 2, 3, "gamma")];

/// Identifiers accepted by [`named`].
pub fn named_ids() -> Vec<&'static str> {
    let mut v = vec![
        "trivial", "c2", "c6", "s3", "d8", "q8", "s4", "a5", "sl23", "heis27", "m27", "q8xc2", "d8xc2", "s3xc2", "sl23xc5", "e32d", "e32q",
        "e27c4", "e27sl23", "aq8", "asl23", "frob49", "lewis",
    ];
    v.extend(AFFINE.iter().map(|a| a.0));
    v.extend(PAIRING.iter().map(|a| a.0));
    v.extend(TWISTED.iter().map(|a| a.0));
    v.sort_unstable();
    v
}

/// Twisted class-2 groups: (id, p, n, semilinear group, twist exponent).
const TWISTED: [(&str, u64, u32, &str, u32); 5] = [
    ("suz8", 2, 3, "gamma", 1),
    ("suz8g0", 2, 3, "gamma0", 1),
    ("suz9", 3, 2, "gamma", 1),
    ("suz16", 2, 4, "gamma", 1),
    ("suz16g0", 2, 4, "gamma0", 1),
];

fn m3(rows: [[u64; 2]; 2]) -> Mat {
    Mat::from_rows(3, &[rows[0].to_vec(), rows[1].to_vec()])
}

fn q8_mats() -> Vec<Mat> {
    vec![m3([[0, 2], [1, 0]]), m3([[1, 1], [1, 2]])]
}

fn sl23_mats() -> Vec<Mat> {
    vec![m3([[1, 1], [0, 1]]), m3([[1, 0], [1, 1]])]
}

fn alternating5() -> Result<PermGroup> {
    PermGroup::new(5, vec![Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]])?, Perm::from_cycles(5, &[vec![0, 1, 2]])?])
}

/// A named group with its structured description, if any. `lewis` is a
/// spec only and is rejected here.
pub fn named_group(id: &str) -> Result<NamedGroup> {
    use ExtraspecialVariant::*;
    if let Some(&(_, p, n, which)) = AFFINE.iter().find(|a| a.0 == id) {
        let h = semilinear_by_name(p, n, which)?;
        return Ok(NamedGroup { group: affine_semilinear(&h)?, spec: Some(affine_spec(&h)?) });
    }
    if let Some(&(_, p, n, which)) = PAIRING.iter().find(|a| a.0 == id) {
        let h = semilinear_by_name(p, n, which)?;
        return Ok(NamedGroup { group: heisenberg_pairing(&h)?, spec: Some(pairing_spec(&h)?) });
    }
    if let Some(&(_, p, n, which, k)) = TWISTED.iter().find(|a| a.0 == id) {
        return Ok(NamedGroup { group: suzuki_type(&semilinear_by_name(p, n, which)?, k)?, spec: None });
    }
    let plain = |g: PermGroup| Ok(NamedGroup { group: g, spec: None });
    match id {
        "trivial" => plain(PermGroup::trivial(1)),
        "c2" => plain(PermGroup::cyclic(2)?),
        "c6" => plain(PermGroup::cyclic(6)?),
        "s3" => plain(PermGroup::symmetric(3)?),
        "s4" => plain(PermGroup::symmetric(4)?),
        "a5" => plain(alternating5()?),
        "d8" => plain(extraspecial(2, 1, Dihedral)?),
        "q8" => plain(quaternion8()?),
        "sl23" => plain(sl23()?),
        "heis27" => plain(extraspecial(3, 1, ExponentP)?),
        "m27" => plain(extraspecial(3, 1, ExponentP2)?),
        "e32d" => plain(extraspecial(2, 2, Dihedral)?),
        "e32q" => plain(extraspecial(2, 2, Quaternion)?),
        "q8xc2" => plain(PermGroup::direct_product(&quaternion8()?, &PermGroup::cyclic(2)?)?),
        "d8xc2" => plain(PermGroup::direct_product(&extraspecial(2, 1, Dihedral)?, &PermGroup::cyclic(2)?)?),
        "s3xc2" => plain(PermGroup::direct_product(&PermGroup::symmetric(3)?, &PermGroup::cyclic(2)?)?),
        "sl23xc5" => plain(PermGroup::direct_product(&sl23()?, &PermGroup::cyclic(5)?)?),
        "e27c4" => plain(extraspecial_by_symplectic(3, &[m3([[0, 2], [1, 0]])])?),
        "e27sl23" => plain(extraspecial_by_symplectic(3, &sl23_mats())?),
        "aq8" => plain(affine_matrix_group(3, &q8_mats())?),
        "asl23" => plain(affine_matrix_group(3, &sl23_mats())?),
        "frob49" => {
            let h = semilinear_by_name(7, 2, "gamma0")?;
            Ok(NamedGroup { group: affine_semilinear(&h)?, spec: Some(affine_spec(&h)?) })
        }
        "lewis" => Err(Error::invalid("`lewis` names a layered spec, not a permutation group")),
        other => Err(Error::Unknown(other.to_string())),
    }
}

/// Named object: the layered spec for `lewis`, a permutation group otherwise.
pub fn named(id: &str) -> Result<Named> {
    if id == "lewis" {
        return Ok(Named::Spec(lewis_spec()?));
    }
    Ok(Named::Group(named_group(id)?.group))
}

/// (P, N) pairs with N central, elementary abelian and containing P' and P^p.
#[derive(Clone, Debug)]
pub struct RamificationInstance {
    pub name: String,
    pub p_group: PermGroup,
    pub n: PermGroup,
}

/// The bundled (P, N) instances.
pub fn ramification_instances() -> Result<Vec<RamificationInstance>> {
    use ExtraspecialVariant::*;
    let with_center = |name: &str, g: PermGroup| -> Result<RamificationInstance> {
        let z = g.center()?;
        Ok(RamificationInstance { name: name.into(), p_group: g, n: z })
    };
    let c = |k: usize| PermGroup::cyclic(k);
    let dp = PermGroup::direct_product;
    let pairing = |p: u64, n: u32| -> Result<PermGroup> { heisenberg_pairing(&semilinear_by_name(p, n, "trivial")?) };
    let c2_cubed = dp(&dp(&c(2)?, &c(2)?)?, &c(2)?)?;
    let c2_sub = c2_cubed.subgroup(c2_cubed.generators()[..2].to_vec())?;
    Ok(vec![
        with_center("q8xc2", dp(&quaternion8()?, &c(2)?)?)?,
        with_center("d8xc2", dp(&extraspecial(2, 1, Dihedral)?, &c(2)?)?)?,
        with_center("q8", quaternion8()?)?,
        with_center("d8", extraspecial(2, 1, Dihedral)?)?,
        with_center("heis27", extraspecial(3, 1, ExponentP)?)?,
        with_center("m27", extraspecial(3, 1, ExponentP2)?)?,
        with_center("heis27xc3", dp(&extraspecial(3, 1, ExponentP)?, &c(3)?)?)?,
        with_center("e32d", extraspecial(2, 2, Dihedral)?)?,
        with_center("e32q", extraspecial(2, 2, Quaternion)?)?,
        with_center("e32dxc2xc2", dp(&dp(&extraspecial(2, 2, Dihedral)?, &c(2)?)?, &c(2)?)?)?,
        with_center("q8xq8", dp(&quaternion8()?, &quaternion8()?)?)?,
        with_center("e125", extraspecial(5, 1, ExponentP)?)?,
        with_center("e243", extraspecial(3, 2, ExponentP)?)?,
        with_center("pair2xc2xc2", dp(&dp(&pairing(2, 1)?, &c(2)?)?, &c(2)?)?)?,
        with_center("pair4", pairing(2, 2)?)?,
        with_center("pair8", pairing(2, 3)?)?,
        with_center("pair3", pairing(3, 1)?)?,
        RamificationInstance { name: "c2^3 over c2^2".into(), p_group: c2_cubed.clone(), n: c2_sub },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        let g = named_group("sl23").unwrap().group;
        assert_eq!((g.degree(), g.size().unwrap()), (8, 24));
        assert_eq!(named_group("s4").unwrap().group.degree(), 4);
        match named("lewis").unwrap() {
            Named::Spec(s) => assert_eq!(s.group_order().unwrap(), (1u128 << 45) * 32767 * 15),
            Named::Group(_) => panic!("lewis must be a spec"),
        }
        assert!(matches!(named("nope"), Err(Error::Unknown(_))));
    }
}
