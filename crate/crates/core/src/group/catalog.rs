//! Catalog constructors. Every constructor lists elements lexicographically in the
//! natural coordinates of the construction, so the identity is always index 0.

use serde::{Deserialize, Serialize};

use super::{
    check_automorphism, compose_perms, extend_from_generators, FiniteGroup, DEFAULT_ORDER_CAP,
};
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// How a generator of the acting group moves the normal factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AutomorphismSpec {
    /// `x -> x^exponent`; an automorphism when the normal factor is abelian and the exponent is coprime to its exponent.
    Power { exponent: i64 },
    /// Elementary abelian normal factor only: coordinates as a row vector, `x -> x M`.
    Matrix { rows: Vec<Vec<i64>> },
    /// Explicit permutation of the normal factor's indices.
    Images { images: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorAction {
    pub element: usize,
    pub map: AutomorphismSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CatalogSpec {
    Cyclic {
        n: usize,
    },
    ElementaryAbelian {
        p: u64,
        k: u32,
    },
    /// Dihedral group of order `2n`, elements `r^i s^j` at index `2i + j`.
    Dihedral {
        n: usize,
    },
    /// Quaternion group of order 8, elements `i^a j^b` at index `2a + b`.
    Quaternion {
        order: usize,
    },
    /// Unitriangular 3x3 matrices over GF(q); `(a, b, c)` at index `a q^2 + b q + c`.
    ExtraspecialExponentQ {
        q: u64,
    },
    DirectProduct {
        factors: Vec<CatalogSpec>,
    },
    /// `(f, h)` at index `f |H| + h` with `(f1, h1)(f2, h2) = (f1 h1(f2), h1 h2)`.
    SemidirectProduct {
        normal: Box<CatalogSpec>,
        acting: Box<CatalogSpec>,
        generators: Vec<GeneratorAction>,
    },
}

impl CatalogSpec {
    pub fn cyclic(n: usize) -> Self {
        CatalogSpec::Cyclic { n }
    }
    pub fn elementary_abelian(p: u64, k: u32) -> Self {
        CatalogSpec::ElementaryAbelian { p, k }
    }
    pub fn dihedral(n: usize) -> Self {
        CatalogSpec::Dihedral { n }
    }
    pub fn quaternion8() -> Self {
        CatalogSpec::Quaternion { order: 8 }
    }
    pub fn extraspecial(q: u64) -> Self {
        CatalogSpec::ExtraspecialExponentQ { q }
    }
    pub fn direct(factors: Vec<CatalogSpec>) -> Self {
        CatalogSpec::DirectProduct { factors }
    }
    pub fn semidirect(
        normal: CatalogSpec,
        acting: CatalogSpec,
        generators: Vec<GeneratorAction>,
    ) -> Self {
        CatalogSpec::SemidirectProduct {
            normal: Box::new(normal),
            acting: Box::new(acting),
            generators,
        }
    }
    /// Cyclic acting group whose generator `1` acts by `map`.
    pub fn semidirect_cyclic(normal: CatalogSpec, n: usize, map: AutomorphismSpec) -> Self {
        Self::semidirect(
            normal,
            CatalogSpec::cyclic(n),
            vec![GeneratorAction { element: 1, map }],
        )
    }

    pub fn name(&self) -> String {
        match self {
            CatalogSpec::Cyclic { n } => format!("C{n}"),
            CatalogSpec::ElementaryAbelian { p, k } => format!("C{p}^{k}"),
            CatalogSpec::Dihedral { n } => format!("D{n}"),
            CatalogSpec::Quaternion { order } => format!("Q{order}"),
            CatalogSpec::ExtraspecialExponentQ { q } => format!("UT(3,{q})"),
            CatalogSpec::DirectProduct { factors } => factors
                .iter()
                .map(|f| f.name())
                .collect::<Vec<_>>()
                .join("x"),
            CatalogSpec::SemidirectProduct { normal, acting, .. } => {
                format!("({}):({})", normal.name(), acting.name())
            }
        }
    }

    /// Order without building the table.
    pub fn order(&self) -> usize {
        match self {
            CatalogSpec::Cyclic { n } => *n,
            CatalogSpec::ElementaryAbelian { p, k } => (*p as usize).pow(*k),
            CatalogSpec::Dihedral { n } => 2 * n,
            CatalogSpec::Quaternion { order } => *order,
            CatalogSpec::ExtraspecialExponentQ { q } => (*q as usize).pow(3),
            CatalogSpec::DirectProduct { factors } => factors.iter().map(|f| f.order()).product(),
            CatalogSpec::SemidirectProduct { normal, acting, .. } => {
                normal.order() * acting.order()
            }
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_cap(DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        let order = self.order();
        if order > cap {
            return Err(Error::TooLarge { size: order, cap });
        }
        let g = match self {
            CatalogSpec::Cyclic { n } => {
                if *n == 0 {
                    return Err(Error::InvalidSpec("cyclic group needs n >= 1".into()));
                }
                cyclic(*n)?
            }
            CatalogSpec::ElementaryAbelian { p, k } => {
                if !is_prime(*p) {
                    return Err(Error::InvalidSpec(format!("{p} is not prime")));
                }
                elementary_abelian(*p, *k)?
            }
            CatalogSpec::Dihedral { n } => {
                if *n == 0 {
                    return Err(Error::InvalidSpec("dihedral group needs n >= 1".into()));
                }
                dihedral(*n)?
            }
            CatalogSpec::Quaternion { order } => {
                if *order != 8 {
                    return Err(Error::InvalidSpec(
                        "only the quaternion group of order 8 is supported".into(),
                    ));
                }
                quaternion8()?
            }
            CatalogSpec::ExtraspecialExponentQ { q } => {
                if !is_prime(*q) || *q == 2 {
                    return Err(Error::InvalidSpec(format!(
                        "extraspecial exponent-q group needs an odd prime, got {q}"
                    )));
                }
                extraspecial_exponent_q(*q)?
            }
            CatalogSpec::DirectProduct { factors } => {
                if factors.is_empty() {
                    return Err(Error::InvalidSpec(
                        "direct product needs at least one factor".into(),
                    ));
                }
                let built = factors
                    .iter()
                    .map(|f| f.build_with_cap(cap))
                    .collect::<Result<Vec<_>>>()?;
                let mut acc = built[0].clone();
                for f in &built[1..] {
                    acc = direct_product(&acc, f)?;
                }
                acc
            }
            CatalogSpec::SemidirectProduct {
                normal,
                acting,
                generators,
            } => {
                let n = normal.build_with_cap(cap)?;
                let h = acting.build_with_cap(cap)?;
                let mut gens = Vec::new();
                for ga in generators {
                    if ga.element >= h.order() {
                        return Err(Error::InvalidSpec(format!(
                            "acting element {} out of range",
                            ga.element
                        )));
                    }
                    gens.push((ga.element, automorphism_perm(normal, &n, &ga.map)?));
                }
                let action = action_from_generators(&n, &h, &gens)?;
                semidirect_product(&n, &h, &action)?
            }
        };
        Ok(g.with_name(&self.name()))
    }
}

fn automorphism_perm(
    spec: &CatalogSpec,
    group: &FiniteGroup,
    map: &AutomorphismSpec,
) -> Result<Vec<usize>> {
    let perm = match map {
        AutomorphismSpec::Power { exponent } => (0..group.order())
            .map(|x| group.pow(x, *exponent))
            .collect(),
        AutomorphismSpec::Images { images } => images.clone(),
        AutomorphismSpec::Matrix { rows } => {
            let (p, k) = match spec {
                CatalogSpec::ElementaryAbelian { p, k } => (*p, *k),
                CatalogSpec::Cyclic { n } if is_prime(*n as u64) => (*n as u64, 1),
                _ => {
                    return Err(Error::InvalidSpec(
                        "matrix actions need an elementary abelian normal factor".into(),
                    ))
                }
            };
            elementary_matrix_perm(p, k, rows)?
        }
    };
    check_automorphism(group, &perm)?;
    Ok(perm)
}

/// Extends generator automorphisms to an action `H -> Aut(N)` with
/// `action[h1 h2] = action[h1] ∘ action[h2]`.
pub fn action_from_generators(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    gens: &[(usize, Vec<usize>)],
) -> Result<Vec<Vec<usize>>> {
    let id: Vec<usize> = (0..normal.order()).collect();
    if acting.order() == 1 {
        return Ok(vec![id]);
    }
    extend_from_generators(acting, gens, id, |a, b| compose_perms(a, b))
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    FiniteGroup::from_fn(n, &format!("C{n}"), |a, b| (a + b) % n)
}

/// Coordinates of an element of `elementary_abelian(p, k)`, most significant first.
pub fn elementary_coordinates(index: usize, p: u64, k: u32) -> Vec<u64> {
    let mut out = vec![0; k as usize];
    let mut x = index as u64;
    for c in out.iter_mut().rev() {
        *c = x % p;
        x /= p;
    }
    out
}

pub fn elementary_index(coords: &[u64], p: u64) -> usize {
    coords.iter().fold(0u64, |acc, &c| acc * p + c % p) as usize
}

pub fn elementary_abelian(p: u64, k: u32) -> Result<FiniteGroup> {
    let n = (p as usize).pow(k);
    FiniteGroup::from_fn(n, &format!("C{p}^{k}"), |a, b| {
        let ca = elementary_coordinates(a, p, k);
        let cb = elementary_coordinates(b, p, k);
        let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
        elementary_index(&sum, p)
    })
}

/// Permutation `x -> x M` of `elementary_abelian(p, k)`.
pub fn elementary_matrix_perm(p: u64, k: u32, rows: &[Vec<i64>]) -> Result<Vec<usize>> {
    let k = k as usize;
    if rows.len() != k || rows.iter().any(|r| r.len() != k) {
        return Err(Error::InvalidSpec(format!("matrix must be {k}x{k}")));
    }
    let n = (p as usize).pow(k as u32);
    let pi = p as i64;
    Ok((0..n)
        .map(|x| {
            let c = elementary_coordinates(x, p, k as u32);
            let img: Vec<u64> = (0..k)
                .map(|j| {
                    (0..k)
                        .map(|i| c[i] as i64 * rows[i][j])
                        .sum::<i64>()
                        .rem_euclid(pi) as u64
                })
                .collect();
            elementary_index(&img, p)
        })
        .collect())
}

pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    FiniteGroup::from_fn(2 * n, &format!("D{n}"), |a, b| {
        let (i1, j1) = (a / 2, a % 2);
        let (i2, j2) = (b / 2, b % 2);
        let i = if j1 == 0 {
            (i1 + i2) % n
        } else {
            (i1 + n - i2) % n
        };
        2 * i + (j1 ^ j2)
    })
}

pub fn quaternion8() -> Result<FiniteGroup> {
    FiniteGroup::from_fn(8, "Q8", |x, y| {
        let (a1, b1) = (x / 2, x % 2);
        let (a2, b2) = (y / 2, y % 2);
        let (a, b) = match (b1, b2) {
            (0, _) => (a1 + a2, b2),
            (1, 0) => (a1 + 4 - a2, 1),
            _ => (a1 + 4 - a2 + 2, 0),
        };
        2 * (a % 4) + b
    })
}

pub fn extraspecial_exponent_q(q: u64) -> Result<FiniteGroup> {
    let q = q as usize;
    FiniteGroup::from_fn(q * q * q, &format!("UT(3,{q})"), |x, y| {
        let (a1, b1, c1) = (x / (q * q), (x / q) % q, x % q);
        let (a2, b2, c2) = (y / (q * q), (y / q) % q, y % q);
        let a = (a1 + a2) % q;
        let b = (b1 + b2) % q;
        let c = (c1 + c2 + a1 * b2) % q;
        a * q * q + b * q + c
    })
}

/// Automorphism of `extraspecial_exponent_q(q)` lifting `v -> M v` on the
/// Frattini quotient (column convention, `v = (a, b)`), acting on the centre by `det M`.
pub fn extraspecial_linear_automorphism(q: u64, m: [[i64; 2]; 2]) -> Result<Vec<usize>> {
    if q == 2 || !is_prime(q) {
        return Err(Error::InvalidSpec("needs an odd prime".into()));
    }
    let qi = q as i64;
    let half = (qi + 1) / 2;
    let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).rem_euclid(qi);
    if det == 0 {
        return Err(Error::InvalidSpec("matrix is singular".into()));
    }
    let qu = q as usize;
    Ok((0..qu * qu * qu)
        .map(|x| {
            let (a, b, c) = (
                (x / (qu * qu)) as i64,
                ((x / qu) % qu) as i64,
                (x % qu) as i64,
            );
            let z = (c - a * b * half).rem_euclid(qi);
            let a2 = (m[0][0] * a + m[0][1] * b).rem_euclid(qi);
            let b2 = (m[1][0] * a + m[1][1] * b).rem_euclid(qi);
            let c2 = (det * z + a2 * b2 * half).rem_euclid(qi);
            (a2 as usize) * qu * qu + (b2 as usize) * qu + c2 as usize
        })
        .collect())
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let nb = b.order();
    let name = format!("{}x{}", a.name(), b.name());
    FiniteGroup::from_fn(a.order() * nb, &name, |x, y| {
        a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
    })
}

/// `N ⋊ H` where `action[h]` is the automorphism of `N` induced by `h`.
pub fn semidirect_product(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    action: &[Vec<usize>],
) -> Result<FiniteGroup> {
    if action.len() != acting.order() {
        return Err(Error::InvalidSpec(
            "action must list a permutation for every acting element".into(),
        ));
    }
    for perm in action {
        check_automorphism(normal, perm)?;
    }
    for h1 in 0..acting.order() {
        for h2 in 0..acting.order() {
            if action[acting.mul(h1, h2)] != compose_perms(&action[h1], &action[h2]) {
                return Err(Error::ActionNotHomomorphic(h1, h2));
            }
        }
    }
    let nh = acting.order();
    let name = format!("({}):({})", normal.name(), acting.name());
    FiniteGroup::from_fn(normal.order() * nh, &name, |x, y| {
        let (f1, h1) = (x / nh, x % nh);
        let (f2, h2) = (y / nh, y % nh);
        normal.mul(f1, action[h1][f2]) * nh + acting.mul(h1, h2)
    })
}

/// The groups of order at most 128 used for whole-catalog checks.
pub fn standard_catalog() -> Vec<CatalogSpec> {
    use AutomorphismSpec::{Matrix, Power};
    use CatalogSpec as S;
    let mut v = Vec::new();
    for n in [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 25, 27, 32, 64, 125] {
        v.push(S::cyclic(n));
    }
    for (p, k) in [
        (2, 2),
        (2, 3),
        (2, 4),
        (2, 5),
        (2, 6),
        (3, 2),
        (3, 3),
        (5, 2),
        (5, 3),
        (7, 2),
    ] {
        v.push(S::elementary_abelian(p, k));
    }
    for n in [3, 4, 5, 6, 8, 16, 32] {
        v.push(S::dihedral(n));
    }
    v.push(S::quaternion8());
    v.push(S::extraspecial(3));
    v.push(S::extraspecial(5));
    v.push(S::direct(vec![S::cyclic(4), S::cyclic(2)]));
    v.push(S::direct(vec![S::cyclic(4), S::cyclic(4)]));
    v.push(S::direct(vec![S::dihedral(4), S::cyclic(2)]));
    v.push(S::direct(vec![S::quaternion8(), S::cyclic(2)]));
    v.push(S::direct(vec![S::dihedral(4), S::cyclic(3)]));
    v.push(S::direct(vec![S::dihedral(3), S::cyclic(5)]));
    v.push(S::direct(vec![S::extraspecial(3), S::cyclic(3)]));
    v.push(S::direct(vec![S::dihedral(4), S::dihedral(4)]));
    // semidirect products
    v.push(S::semidirect_cyclic(S::cyclic(7), 3, Power { exponent: 2 }));
    v.push(S::semidirect_cyclic(
        S::cyclic(3),
        4,
        Power { exponent: -1 },
    ));
    v.push(S::semidirect_cyclic(S::cyclic(8), 2, Power { exponent: 3 }));
    v.push(S::semidirect_cyclic(S::cyclic(8), 2, Power { exponent: 5 }));
    v.push(S::semidirect_cyclic(S::cyclic(4), 4, Power { exponent: 3 }));
    v.push(S::semidirect_cyclic(
        S::cyclic(16),
        2,
        Power { exponent: 9 },
    ));
    v.push(S::semidirect_cyclic(S::cyclic(9), 3, Power { exponent: 4 }));
    v.push(S::semidirect_cyclic(
        S::cyclic(25),
        5,
        Power { exponent: 6 },
    ));
    v.push(S::semidirect_cyclic(
        S::elementary_abelian(2, 2),
        3,
        Matrix {
            rows: vec![vec![0, 1], vec![1, 1]],
        },
    ));
    v.push(symmetric4());
    v.push(S::semidirect_cyclic(
        S::elementary_abelian(5, 2),
        4,
        Power { exponent: 2 },
    ));
    v.push(S::semidirect_cyclic(
        S::elementary_abelian(5, 2),
        2,
        Power { exponent: -1 },
    ));
    v.push(S::semidirect_cyclic(
        S::elementary_abelian(2, 3),
        4,
        Matrix {
            rows: vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]],
        },
    ));
    v.push(S::semidirect_cyclic(
        S::elementary_abelian(2, 4),
        2,
        Matrix {
            rows: vec![
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 1, 0],
            ],
        },
    ));
    v
}

/// `S4 = V4 ⋊ S3` with `S3 = GL(2, 2)` acting on `V4 = C2^2`.
pub fn symmetric4() -> CatalogSpec {
    CatalogSpec::semidirect(
        CatalogSpec::elementary_abelian(2, 2),
        CatalogSpec::dihedral(3),
        vec![
            GeneratorAction {
                element: 2,
                map: AutomorphismSpec::Matrix {
                    rows: vec![vec![0, 1], vec![1, 1]],
                },
            },
            GeneratorAction {
                element: 1,
                map: AutomorphismSpec::Matrix {
                    rows: vec![vec![0, 1], vec![1, 0]],
                },
            },
        ],
    )
}

/// `A4 = V4 ⋊ C3`.
pub fn alternating4() -> CatalogSpec {
    CatalogSpec::semidirect_cyclic(
        CatalogSpec::elementary_abelian(2, 2),
        3,
        AutomorphismSpec::Matrix {
            rows: vec![vec![0, 1], vec![1, 1]],
        },
    )
}

/// Groups of order `5^k`, `k <= 4`, available from the constructors.
pub fn five_groups() -> Vec<CatalogSpec> {
    use AutomorphismSpec::{Matrix, Power};
    use CatalogSpec as S;
    vec![
        S::cyclic(5),
        S::cyclic(25),
        S::elementary_abelian(5, 2),
        S::cyclic(125),
        S::direct(vec![S::cyclic(25), S::cyclic(5)]),
        S::elementary_abelian(5, 3),
        S::extraspecial(5),
        S::semidirect_cyclic(S::cyclic(25), 5, Power { exponent: 6 }),
        S::cyclic(625),
        S::direct(vec![S::cyclic(125), S::cyclic(5)]),
        S::direct(vec![S::cyclic(25), S::cyclic(25)]),
        S::direct(vec![S::cyclic(25), S::cyclic(5), S::cyclic(5)]),
        S::elementary_abelian(5, 4),
        S::direct(vec![S::extraspecial(5), S::cyclic(5)]),
        S::direct(vec![
            S::semidirect_cyclic(S::cyclic(25), 5, Power { exponent: 6 }),
            S::cyclic(5),
        ]),
        S::semidirect_cyclic(S::cyclic(125), 5, Power { exponent: 26 }),
        S::semidirect_cyclic(S::cyclic(25), 25, Power { exponent: 6 }),
        S::semidirect_cyclic(
            S::elementary_abelian(5, 3),
            5,
            Matrix {
                rows: vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]],
            },
        ),
        S::semidirect_cyclic(
            S::direct(vec![S::cyclic(25), S::cyclic(5)]),
            5,
            // (x, y) -> (x + 5y, y) on C25 x C5, written as images of all elements
            AutomorphismSpec::Images {
                images: c25xc5_shear(),
            },
        ),
    ]
}

fn c25xc5_shear() -> Vec<usize> {
    (0..125)
        .map(|i| {
            let (x, y) = (i / 5, i % 5);
            ((x + 5 * y) % 25) * 5 + y
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_specs() {
        for spec in standard_catalog() {
            let g = spec.build().unwrap();
            assert_eq!(g.order(), spec.order(), "{}", spec.name());
            assert!(g.order() <= 128);
        }
    }

    #[test]
    fn semidirect_rejects_non_automorphism() {
        let spec = CatalogSpec::semidirect_cyclic(
            CatalogSpec::cyclic(6),
            2,
            AutomorphismSpec::Power { exponent: 2 },
        );
        assert!(matches!(
            spec.build(),
            Err(Error::ActionNotAutomorphic { .. }) | Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn semidirect_rejects_non_homomorphic_action() {
        // generator of C2 acting with order 4
        let spec = CatalogSpec::semidirect_cyclic(
            CatalogSpec::cyclic(5),
            2,
            AutomorphismSpec::Power { exponent: 2 },
        );
        assert!(matches!(spec.build(), Err(Error::ActionNotHomomorphic(..))));
    }

    #[test]
    fn extraspecial_gl2_lift_is_automorphism() {
        let g = extraspecial_exponent_q(5).unwrap();
        for m in [
            [[2, 0], [0, 2]],
            [[0, -1], [1, -1]],
            [[1, 0], [0, -1]],
            [[1, 1], [0, 1]],
        ] {
            let perm = extraspecial_linear_automorphism(5, m).unwrap();
            check_automorphism(&g, &perm).unwrap();
        }
    }

    #[test]
    fn five_groups_are_five_groups() {
        for spec in five_groups() {
            let g = spec.build().unwrap();
            assert!(g.is_p_group(5), "{}", spec.name());
            assert!(g.order() <= 625);
        }
    }
}
