//! Experimental: are two single-copy layers isomorphic as GF(p)H-modules?

use serde::Serialize;

use super::spec::CliffordSpec;
use crate::error::{Error, Result};
use crate::limits;
use crate::linalg::Mat;
use crate::semilin::semilinear_matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerIsomorphism {
    pub first: usize,
    pub second: usize,
    /// dim Hom_H between the two layer modules; both irreducible, so nonzero iff isomorphic.
    pub hom_dim: usize,
    pub isomorphic: bool,
}

/// Hom dimension between all pairs of single-copy layers (1-based indices).
pub fn layer_isomorphisms(spec: &CliffordSpec) -> Result<Vec<LayerIsomorphism>> {
    let h = &spec.h;
    let n = h.n() as usize;
    if n > limits::MAX_MODULE_DIM {
        return Err(Error::scale("MAX_MODULE_DIM", limits::MAX_MODULE_DIM, n));
    }
    let gens = h.generators();
    let mats: Vec<Vec<Mat>> = spec.layers.iter().map(|l| gens.iter().map(|&x| semilinear_matrix(h, l.exponent, x)).collect()).collect();
    let mut out = Vec::new();
    for i in 0..spec.layers.len() {
        for j in i + 1..spec.layers.len() {
            if spec.layers[i].copies != 1 || spec.layers[j].copies != 1 {
                continue;
            }
            let d = hom_dim(h.p(), n, &mats[i], &mats[j]);
            out.push(LayerIsomorphism { first: i + 1, second: j + 1, hom_dim: d, isomorphic: d > 0 });
        }
    }
    Ok(out)
}

/// dim of {X : X A_g = B_g X for all g}.
fn hom_dim(p: u64, n: usize, a: &[Mat], b: &[Mat]) -> usize {
    let id = Mat::identity(p, n);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (x, y) in a.iter().zip(b) {
        let k = x.transpose().kron(&id).sub(&id.kron(y));
        rows.extend(k.to_rows());
    }
    if rows.is_empty() {
        return n * n;
    }
    Mat::from_rows(p, &rows).nullspace().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliffordcd::LayerSpec;
    use crate::semilin::{field_table, SemilinearGroup};

    #[test]
    fn twisted_layers() {
        let h = SemilinearGroup::gamma0(field_table(2, 2).unwrap()).unwrap();
        let s = CliffordSpec::new("h4", h, vec![LayerSpec::new(1, 1).with_copies(2), LayerSpec::new(2, 4)]).unwrap();
        assert!(layer_isomorphisms(&s).unwrap().is_empty());
        // Over GF(4), c -> c^2 is the Galois conjugate of c -> c, so the
        // two twisted one-dimensional GF(4)-actions are GF(2)-isomorphic.
        let t = field_table(2, 2).unwrap();
        let h = SemilinearGroup::gamma0(t).unwrap();
        let mats1: Vec<Mat> = h.generators().iter().map(|&x| semilinear_matrix(&h, 1, x)).collect();
        let mats2: Vec<Mat> = h.generators().iter().map(|&x| semilinear_matrix(&h, 2, x)).collect();
        assert_eq!(hom_dim(2, 2, &mats1, &mats2), 2);
        let mats3: Vec<Mat> = h.generators().iter().map(|&x| semilinear_matrix(&h, 3, x)).collect();
        assert_eq!(hom_dim(2, 2, &mats1, &mats3), 0);
    }
}
