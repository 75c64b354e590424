//! The associated Lie ring `L(G) = ⊕ γ_i/γ_{i+1}` of a nilpotent group whose
//! lower central factors are elementary abelian for one prime.

use crate::actions::Automorphism;
use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::field::Gf;
use crate::group::{FiniteGroup, Subgroup};
use crate::lie::{LieAutomorphism, LieRing};
use crate::linalg::{Matrix, Vector};

/// One factor `γ_i/γ_{i+1}` with a chosen basis of group elements and the
/// coordinates of every element of `γ_i`.
#[derive(Clone, Debug)]
pub struct Layer {
    pub weight: usize,
    pub term: Subgroup,
    pub next: Subgroup,
    pub basis: Vec<usize>,
    /// Offset of this layer's coordinates in the full basis of `L(G)`.
    pub offset: usize,
    coords: Vec<Option<Vec<u64>>>,
}

impl Layer {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `x ∈ γ_i` modulo `γ_{i+1}`.
    pub fn coordinates(&self, x: usize) -> Option<&[u64]> {
        self.coords[x].as_deref()
    }
}

#[derive(Clone, Debug)]
pub struct AssociatedLie {
    pub ring: LieRing,
    pub prime: u64,
    pub layers: Vec<Layer>,
}

/// Builds `L(G)` over `GF(q)`.
///
/// Rejects non-nilpotent groups, the trivial group, and groups with a lower central
/// factor that is not elementary abelian for the prime dividing `|G|`.
pub fn associated_lie_ring(g: &FiniteGroup) -> Result<AssociatedLie> {
    if g.order() == 1 {
        return Err(Error::InvalidSpec(
            "the trivial group has no coefficient prime".into(),
        ));
    }
    let series = g.lower_central_series();
    if !series.last().unwrap().is_trivial() {
        return Err(Error::NotNilpotent);
    }
    let Some((q, _)) = prime_power(g.order() as u64) else {
        return Err(Error::MixedExponentLayer(1));
    };
    let mut layers: Vec<Layer> = Vec::new();
    let mut offset = 0;
    for i in 0..series.len() - 1 {
        let layer = build_layer(g, &series[i], &series[i + 1], q, i + 1, offset)?;
        offset += layer.dim();
        layers.push(layer);
    }
    let dim = offset;
    let field = Gf::prime(q as u32)?;
    let mut constants = vec![0u32; dim * dim * dim];
    for (li, la) in layers.iter().enumerate() {
        for (lj, lb) in layers.iter().enumerate() {
            let target = li + lj + 1;
            if target >= layers.len() {
                continue;
            }
            let lt = &layers[target];
            for (a, &x) in la.basis.iter().enumerate() {
                for (b, &y) in lb.basis.iter().enumerate() {
                    let c = g.commutator(x, y);
                    let coords = lt.coordinates(c).ok_or_else(|| {
                        Error::Internal(format!(
                            "commutator [{x},{y}] is not in gamma_{}",
                            target + 1
                        ))
                    })?;
                    let (u, v) = (la.offset + a, lb.offset + b);
                    for (k, &val) in coords.iter().enumerate() {
                        constants[(u * dim + v) * dim + lt.offset + k] = val as u32;
                    }
                }
            }
        }
    }
    let weights: Vec<usize> = layers
        .iter()
        .flat_map(|l| std::iter::repeat(l.weight).take(l.dim()))
        .collect();
    let labels: Vec<String> = layers
        .iter()
        .flat_map(|l| l.basis.iter().map(move |x| format!("g{x}@{}", l.weight)))
        .collect();
    let ring = LieRing::new(&field, dim, constants)?
        .with_weights(weights)
        .with_labels(labels);
    Ok(AssociatedLie {
        ring,
        prime: q,
        layers,
    })
}

fn build_layer(
    g: &FiniteGroup,
    term: &Subgroup,
    next: &Subgroup,
    q: u64,
    weight: usize,
    offset: usize,
) -> Result<Layer> {
    let bad = || Error::MixedExponentLayer(weight);
    for &x in term.generators() {
        if !next.contains(g.pow(x, q as i64)) {
            return Err(bad());
        }
    }
    let mut coords: Vec<Option<Vec<u64>>> = vec![None; g.order()];
    let mut known: Vec<usize> = next.elements().to_vec();
    for &x in &known {
        coords[x] = Some(Vec::new());
    }
    let mut basis = Vec::new();
    for &b in term.elements() {
        if coords[b].is_some() {
            continue;
        }
        let k = basis.len();
        basis.push(b);
        for c in coords.iter_mut().flatten() {
            c.push(0);
        }
        let mut added = Vec::new();
        let mut power = 0usize;
        for a in 1..q {
            power = g.mul(power, b);
            for &x in &known {
                let y = g.mul(x, power);
                if coords[y].is_some() {
                    return Err(bad());
                }
                let mut c = coords[x].clone().unwrap();
                c[k] = a;
                coords[y] = Some(c);
                added.push(y);
            }
        }
        known.extend(added);
    }
    if known.len() != term.order() {
        return Err(bad());
    }
    Ok(Layer {
        weight,
        term: term.clone(),
        next: next.clone(),
        basis,
        offset,
        coords,
    })
}

impl AssociatedLie {
    /// Coordinates of a group element of weight-`i` layer as a vector of `L(G)`.
    fn embed_layer_vector(&self, layer: &Layer, x: usize) -> Option<Vector> {
        let c = layer.coordinates(x)?;
        let mut v = vec![0u32; self.ring.dim()];
        for (k, &val) in c.iter().enumerate() {
            v[layer.offset + k] = val as u32;
        }
        Some(v)
    }

    /// Block-diagonal matrix induced by a group automorphism on each factor.
    pub fn induced_automorphism(&self, a: &Automorphism) -> Result<LieAutomorphism> {
        let n = self.ring.dim();
        let mut cols: Vec<Vector> = Vec::with_capacity(n);
        for layer in &self.layers {
            for &b in &layer.basis {
                let v = self.embed_layer_vector(layer, a.apply(b)).ok_or_else(|| {
                    Error::Internal(
                        "automorphism does not preserve the lower central series".into(),
                    )
                })?;
                cols.push(v);
            }
        }
        let m = Matrix::from_columns(self.ring.field(), n, &cols);
        LieAutomorphism::new(&self.ring, m)
            .map_err(|e| Error::Internal(format!("induced map: {e}")))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.dim()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::ActionSetup;
    use crate::group::catalog::{self, extraspecial_linear_automorphism};

    #[test]
    fn elementary_abelian_is_abelian() {
        let g = catalog::elementary_abelian(3, 3).unwrap();
        let l = associated_lie_ring(&g).unwrap();
        assert_eq!(l.ring.dim(), 3);
        assert_eq!(l.ring.class().unwrap(), 1);
    }

    #[test]
    fn dihedral_and_extraspecial() {
        let d4 = catalog::dihedral(4).unwrap();
        let l = associated_lie_ring(&d4).unwrap();
        assert_eq!((l.prime, l.dims()), (2, vec![2, 1]));
        assert_eq!(l.ring.class().unwrap(), 2);
        let (x, y) = (l.layers[0].basis[0], l.layers[0].basis[1]);
        assert_eq!(
            l.layers[1].coordinates(d4.commutator(x, y)),
            Some(&[1u64][..])
        );
        let e = catalog::extraspecial_exponent_q(5).unwrap();
        let l = associated_lie_ring(&e).unwrap();
        assert_eq!((l.prime, l.dims()), (5, vec![2, 1]));
        assert_eq!(l.ring.class().unwrap(), 2);
    }

    #[test]
    fn rejections() {
        assert_eq!(
            associated_lie_ring(&catalog::dihedral(3).unwrap()).err(),
            Some(Error::NotNilpotent)
        );
        assert_eq!(
            associated_lie_ring(&catalog::cyclic(4).unwrap()).err(),
            Some(Error::MixedExponentLayer(1))
        );
        assert_eq!(
            associated_lie_ring(&catalog::cyclic(6).unwrap()).err(),
            Some(Error::MixedExponentLayer(1))
        );
    }

    #[test]
    fn induced_maps() {
        let c5 = catalog::cyclic(5).unwrap();
        let l = associated_lie_ring(&c5).unwrap();
        let inv = Automorphism::new(&c5, (0..5).map(|x| (5 - x) % 5).collect()).unwrap();
        let m = l.induced_automorphism(&inv).unwrap();
        assert_eq!(m.matrix().get(0, 0), 4);
        let id = l.induced_automorphism(&Automorphism::identity(5)).unwrap();
        assert!(id.matrix().is_identity());

        // scalar 2 on the extraspecial group: det 4 on the centre
        let e = catalog::extraspecial_exponent_q(5).unwrap();
        let l = associated_lie_ring(&e).unwrap();
        let perm = extraspecial_linear_automorphism(5, [[2, 0], [0, 2]]).unwrap();
        let a = Automorphism::new(&e, perm).unwrap();
        let m = l.induced_automorphism(&a).unwrap();
        let f = l.ring.field();
        assert_eq!(m.matrix().get(2, 2), 4);
        assert_eq!(m.matrix().determinant(), f.pow(2, 4));
        let s =
            ActionSetup::from_generators(catalog::cyclic(4).unwrap(), e, &[(1, a.perm().to_vec())])
                .unwrap();
        let m2 = l.induced_automorphism(s.rep(2)).unwrap();
        assert_eq!(m.compose(&m), m2);
    }
}
