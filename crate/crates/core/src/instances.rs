//! Built-in instances: coprime action setups, Frobenius groups and their actions on
//! groups and Lie algebras, and graded Lie algebras over GF(11) and GF(16).
//!
//! Each family is a list of `(name, builder)` pairs so that a single instance can be
//! built by name without constructing the rest.

use crate::actions::ActionSetup;
use crate::error::{Error, Result};
use crate::field::{Elem, Gf};
use crate::group::catalog::{
    self, elementary_matrix_perm, extraspecial_linear_automorphism, AutomorphismSpec, CatalogSpec,
};
use crate::group::FiniteGroup;
use crate::lie::{free_two_step_automorphism, LieAutomorphism, LieRing};
use crate::linalg::Matrix;
use crate::structure::{automorphism_group, check_frobenius, FrobeniusStructure};

pub type Builder<T> = (&'static str, fn() -> Result<T>);

/// Looks up one builder by name and runs it.
pub fn build_named<T>(family: &[Builder<T>], name: &str) -> Result<T> {
    family
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, b)| b())
        .unwrap_or_else(|| {
            Err(Error::InvalidSpec(format!(
                "unknown built-in instance {name:?}"
            )))
        })
}

pub fn names<T>(family: &[Builder<T>]) -> Vec<&'static str> {
    family.iter().map(|(n, _)| *n).collect()
}

fn power_perm(g: &FiniteGroup, e: i64) -> Vec<usize> {
    (0..g.order()).map(|x| g.pow(x, e)).collect()
}

fn setup(
    actor: FiniteGroup,
    target: FiniteGroup,
    gens: Vec<(usize, Vec<usize>)>,
) -> Result<ActionSetup> {
    ActionSetup::from_generators(actor, target, &gens)
}

fn cyclic_on_cyclic(m: usize, n: usize, e: i64) -> Result<ActionSetup> {
    let g = catalog::cyclic(n)?;
    let perm = power_perm(&g, e);
    setup(catalog::cyclic(m)?, g, vec![(1, perm)])
}

fn elementary_by_matrices(
    p: u64,
    k: u32,
    actor: FiniteGroup,
    mats: &[(usize, Vec<Vec<i64>>)],
) -> Result<ActionSetup> {
    let g = catalog::elementary_abelian(p, k)?;
    let gens = mats
        .iter()
        .map(|(a, rows)| Ok((*a, elementary_matrix_perm(p, k, rows)?)))
        .collect::<Result<Vec<_>>>()?;
    setup(actor, g, gens)
}

fn signs_on_elementary(p: u64) -> Result<ActionSetup> {
    let v4 = catalog::elementary_abelian(2, 2)?;
    // index 1 = (0,1), index 2 = (1,0)
    elementary_by_matrices(
        p,
        2,
        v4,
        &[
            (1, vec![vec![1, 0], vec![0, -1]]),
            (2, vec![vec![-1, 0], vec![0, 1]]),
        ],
    )
}

fn signs_on_extraspecial(q: u64) -> Result<ActionSetup> {
    let g = catalog::extraspecial_exponent_q(q)?;
    let a = extraspecial_linear_automorphism(q, [[1, 0], [0, -1]])?;
    let b = extraspecial_linear_automorphism(q, [[-1, 0], [0, 1]])?;
    setup(catalog::elementary_abelian(2, 2)?, g, vec![(1, a), (2, b)])
}

fn s3_matrices() -> [(usize, Vec<Vec<i64>>); 2] {
    [
        (2, vec![vec![0, -1], vec![1, -1]]),
        (1, vec![vec![0, 1], vec![1, 0]]),
    ]
}

/// Coprime actions used for the coprime-facts suite.
pub fn coprime_setups() -> Vec<Builder<ActionSetup>> {
    vec![
        ("c5_by_c2_inversion", || cyclic_on_cyclic(2, 5, -1)),
        ("c7_by_c3_power2", || cyclic_on_cyclic(3, 7, 2)),
        ("c7_by_c6_power3", || cyclic_on_cyclic(6, 7, 3)),
        ("c9_by_c2_inversion", || cyclic_on_cyclic(2, 9, -1)),
        ("c11_by_c5_power3", || cyclic_on_cyclic(5, 11, 3)),
        ("c15_by_c2_inversion", || cyclic_on_cyclic(2, 15, -1)),
        ("c15_by_c2sq_signs", || {
            let g = catalog::direct_product(&catalog::cyclic(3)?, &catalog::cyclic(5)?)?;
            let a: Vec<usize> = (0..15).map(|i| ((3 - i / 5) % 3) * 5 + i % 5).collect();
            let b: Vec<usize> = (0..15).map(|i| (i / 5) * 5 + (5 - i % 5) % 5).collect();
            setup(catalog::elementary_abelian(2, 2)?, g, vec![(1, a), (2, b)])
        }),
        ("c5sq_by_c2_minus", || {
            elementary_by_matrices(
                5,
                2,
                catalog::cyclic(2)?,
                &[(1, vec![vec![-1, 0], vec![0, -1]])],
            )
        }),
        ("c5sq_by_c4_scalar2", || {
            elementary_by_matrices(
                5,
                2,
                catalog::cyclic(4)?,
                &[(1, vec![vec![2, 0], vec![0, 2]])],
            )
        }),
        ("c5sq_by_c2sq_signs", || signs_on_elementary(5)),
        ("c3sq_by_c2sq_signs", || signs_on_elementary(3)),
        ("c7sq_by_c2sq_signs", || signs_on_elementary(7)),
        ("c7sq_by_c3", || {
            elementary_by_matrices(
                7,
                2,
                catalog::cyclic(3)?,
                &[(1, vec![vec![0, -1], vec![1, -1]])],
            )
        }),
        ("c7sq_by_s3", || {
            elementary_by_matrices(7, 2, catalog::dihedral(3)?, &s3_matrices())
        }),
        ("c2sq_by_c3", || {
            elementary_by_matrices(
                2,
                2,
                catalog::cyclic(3)?,
                &[(1, vec![vec![0, 1], vec![1, 1]])],
            )
        }),
        ("c2cube_by_c7", || {
            let rows = vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]];
            elementary_by_matrices(2, 3, catalog::cyclic(7)?, &[(1, rows)])
        }),
        ("c2_4_by_c5", || {
            let rows = vec![
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
                vec![1, 1, 1, 1],
            ];
            elementary_by_matrices(2, 4, catalog::cyclic(5)?, &[(1, rows)])
        }),
        ("c2_4_by_c3sq", || {
            let a = vec![
                vec![0, 1, 0, 0],
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
            ];
            let b = vec![
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 1, 1],
            ];
            elementary_by_matrices(2, 4, catalog::elementary_abelian(3, 2)?, &[(1, a), (3, b)])
        }),
        ("q8_by_c3", || {
            let q8 = catalog::quaternion8()?;
            let auts = automorphism_group(&q8)?;
            let a = auts
                .iter()
                .find(|a| a.order() == 3)
                .ok_or_else(|| Error::Internal("Q8 has an automorphism of order 3".into()))?;
            let perm = a.perm().to_vec();
            setup(catalog::cyclic(3)?, q8, vec![(1, perm)])
        }),
        ("ut3_5_by_c2_minus", || {
            let perm = extraspecial_linear_automorphism(5, [[-1, 0], [0, -1]])?;
            setup(
                catalog::cyclic(2)?,
                catalog::extraspecial_exponent_q(5)?,
                vec![(1, perm)],
            )
        }),
        ("ut3_5_by_c4_scalar2", || {
            let perm = extraspecial_linear_automorphism(5, [[2, 0], [0, 2]])?;
            setup(
                catalog::cyclic(4)?,
                catalog::extraspecial_exponent_q(5)?,
                vec![(1, perm)],
            )
        }),
        ("ut3_5_by_c2sq_signs", || signs_on_extraspecial(5)),
        ("ut3_3_by_c2sq_signs", || signs_on_extraspecial(3)),
        ("d7_by_c3", || {
            let d7 = catalog::dihedral(7)?;
            let perm: Vec<usize> = (0..14).map(|x| 2 * ((2 * (x / 2)) % 7) + x % 2).collect();
            setup(catalog::cyclic(3)?, d7, vec![(1, perm)])
        }),
        ("c7c3_by_c2", || {
            let g = CatalogSpec::semidirect_cyclic(
                CatalogSpec::cyclic(7),
                3,
                AutomorphismSpec::Power { exponent: 2 },
            )
            .build()?;
            let perm: Vec<usize> = (0..21).map(|x| ((7 - x / 3) % 7) * 3 + x % 3).collect();
            setup(catalog::cyclic(2)?, g, vec![(1, perm)])
        }),
        ("s3_by_c5_trivial", || {
            Ok(ActionSetup::trivial(
                catalog::cyclic(5)?,
                catalog::dihedral(3)?,
            ))
        }),
        ("a4_by_c5_trivial", || {
            Ok(ActionSetup::trivial(
                catalog::cyclic(5)?,
                catalog::alternating4().build()?,
            ))
        }),
    ]
}

/// A Frobenius group `KB` acting on `N`, for the generation check.
#[derive(Clone, Debug)]
pub struct FrobeniusGroupAction {
    pub action: ActionSetup,
    pub frobenius: FrobeniusStructure,
}

/// Multiplication by `x` on `GF(q^d)`, viewed as a permutation of the elementary
/// abelian group whose indices coincide with packed field elements.
fn field_mul_perm(f: &Gf, x: Elem) -> Vec<usize> {
    (0..f.size()).map(|y| f.mul(x, y) as usize).collect()
}

fn field_pow_perm(f: &Gf, e: u64) -> Vec<usize> {
    (0..f.size()).map(|y| f.pow(y, e) as usize).collect()
}

fn c7c3() -> Result<FiniteGroup> {
    CatalogSpec::semidirect_cyclic(
        CatalogSpec::cyclic(7),
        3,
        AutomorphismSpec::Power { exponent: 2 },
    )
    .build()
}

pub fn frobenius_generation_instances() -> Vec<Builder<FrobeniusGroupAction>> {
    vec![
        ("s3_on_c7sq", || {
            let action = elementary_by_matrices(7, 2, catalog::dihedral(3)?, &s3_matrices())?;
            dihedral_kb(action)
        }),
        ("d5_on_c11sq", || {
            let mats = [
                (2, vec![vec![0, -1], vec![1, 7]]),
                (1, vec![vec![0, 1], vec![1, 0]]),
            ];
            let action = elementary_by_matrices(11, 2, catalog::dihedral(5)?, &mats)?;
            dihedral_kb(action)
        }),
        ("c7c3_on_c2cube", || {
            let f8 = Gf::new(2, 3)?;
            let zeta = f8.root_of_unity(7).ok_or(Error::NoRootOfUnity(7))?;
            let whole = c7c3()?;
            let target = catalog::elementary_abelian(2, 3)?;
            let gens = vec![(3, field_mul_perm(&f8, zeta)), (1, field_pow_perm(&f8, 2))];
            let action = setup(whole.clone(), target, gens)?;
            let frobenius = FrobeniusStructure::from_semidirect(&whole, 3)?;
            Ok(FrobeniusGroupAction { action, frobenius })
        }),
        ("s3_sign_on_c7sq", || {
            let mats = [
                (2, vec![vec![1, 0], vec![0, 1]]),
                (1, vec![vec![-1, 0], vec![0, -1]]),
            ];
            let action = elementary_by_matrices(7, 2, catalog::dihedral(3)?, &mats)?;
            dihedral_kb(action)
        }),
    ]
}

fn dihedral_kb(action: ActionSetup) -> Result<FrobeniusGroupAction> {
    let d = action.actor().clone();
    let k = d.subgroup_generated(&[2]);
    let b = d.subgroup_generated(&[1]);
    let frobenius = check_frobenius(&d, &k, &b)?;
    Ok(FrobeniusGroupAction { action, frobenius })
}

/// A catalog Frobenius group `F : H` with `|H|` recorded.
#[derive(Clone, Debug)]
pub struct FrobeniusGroupSpec {
    pub spec: CatalogSpec,
    pub complement_order: usize,
}

impl FrobeniusGroupSpec {
    pub fn build(&self) -> Result<FrobeniusStructure> {
        FrobeniusStructure::from_semidirect(&self.spec.build()?, self.complement_order)
    }
}

fn frob(normal: CatalogSpec, h: usize, map: AutomorphismSpec) -> FrobeniusGroupSpec {
    FrobeniusGroupSpec {
        spec: CatalogSpec::semidirect_cyclic(normal, h, map),
        complement_order: h,
    }
}

fn matrix(rows: &[&[i64]]) -> AutomorphismSpec {
    AutomorphismSpec::Matrix {
        rows: rows.iter().map(|r| r.to_vec()).collect(),
    }
}

pub fn frobenius_groups() -> Vec<Builder<FrobeniusGroupSpec>> {
    use AutomorphismSpec::{Images, Power};
    vec![
        ("c5sq_c4_scalar2", || {
            Ok(frob(
                CatalogSpec::elementary_abelian(5, 2),
                4,
                Power { exponent: 2 },
            ))
        }),
        ("c5sq_c2_inversion", || {
            Ok(frob(
                CatalogSpec::elementary_abelian(5, 2),
                2,
                Power { exponent: -1 },
            ))
        }),
        ("c5sq_c3", || {
            Ok(frob(
                CatalogSpec::elementary_abelian(5, 2),
                3,
                matrix(&[&[0, -1], &[1, -1]]),
            ))
        }),
        ("c5cube_c2_inversion", || {
            Ok(frob(
                CatalogSpec::elementary_abelian(5, 3),
                2,
                Power { exponent: -1 },
            ))
        }),
        ("c7sq_c3_scalar2", || {
            Ok(frob(
                CatalogSpec::elementary_abelian(7, 2),
                3,
                Power { exponent: 2 },
            ))
        }),
        ("c2_4_c5", || {
            Ok(frob(
                CatalogSpec::elementary_abelian(2, 4),
                5,
                matrix(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 1]]),
            ))
        }),
        ("ut3_7_c3", || {
            let images = extraspecial_linear_automorphism(7, [[2, 0], [0, 2]])?;
            Ok(frob(CatalogSpec::extraspecial(7), 3, Images { images }))
        }),
        ("c7_c3", || {
            Ok(frob(CatalogSpec::cyclic(7), 3, Power { exponent: 2 }))
        }),
        ("c11_c5", || {
            Ok(frob(CatalogSpec::cyclic(11), 5, Power { exponent: 3 }))
        }),
        ("c5_c4", || {
            Ok(frob(CatalogSpec::cyclic(5), 4, Power { exponent: 2 }))
        }),
    ]
}

/// A Frobenius group `FH` acting on a group `G`, given on generators of `FH`.
#[derive(Clone, Debug)]
pub struct GroupPipelineInstance {
    pub frobenius: FrobeniusGroupSpec,
    pub target: FiniteGroup,
    pub generators: Vec<(usize, Vec<usize>)>,
    /// Prime for `Z`.
    pub p: u64,
}

impl GroupPipelineInstance {
    pub fn build(&self) -> Result<(FrobeniusStructure, ActionSetup)> {
        let fs = self.frobenius.build()?;
        let action = ActionSetup::from_generators(
            fs.whole().clone(),
            self.target.clone(),
            &self.generators,
        )?;
        Ok((fs, action))
    }
}

/// `UT(3,11)` under `(C5^2):C2`: `(a, b)` acts by `diag(ω^b, ω^-b)` on the Frattini
/// quotient, the involution by the swap.
fn ut3_11_pipeline() -> Result<GroupPipelineInstance> {
    let frobenius = build_named(&frobenius_groups(), "c5sq_c2_inversion")?;
    let w = 3; // order 5 mod 11
    let target = catalog::extraspecial_exponent_q(11)?;
    let generators = vec![
        (2, extraspecial_linear_automorphism(11, [[w, 0], [0, 4]])?),
        (10, (0..target.order()).collect()),
        (1, extraspecial_linear_automorphism(11, [[0, 1], [1, 0]])?),
    ];
    Ok(GroupPipelineInstance {
        frobenius,
        target,
        generators,
        p: 5,
    })
}

/// `GF(q^d)` as an elementary abelian group under `F : H`: `(.., b)` multiplies by
/// `ζ^b` and the complement generator acts by `x -> x^e`.
fn field_pipeline(
    frob_name: &str,
    q: u32,
    d: u32,
    p: u64,
    e: u64,
    kernel_rank: u32,
) -> Result<GroupPipelineInstance> {
    let frobenius = build_named(&frobenius_groups(), frob_name)?;
    let f = Gf::new(q, d)?;
    let zeta = f.root_of_unity(p).ok_or(Error::NoRootOfUnity(p))?;
    let target = catalog::elementary_abelian(q as u64, d)?;
    let h = frobenius.complement_order;
    let mut generators = Vec::new();
    for i in 0..kernel_rank {
        // kernel coordinate vector with a single 1, most significant first
        let f_index = (p as usize).pow(kernel_rank - 1 - i);
        let perm = if i + 1 == kernel_rank {
            field_mul_perm(&f, zeta)
        } else {
            (0..f.size() as usize).collect()
        };
        generators.push((f_index * h, perm));
    }
    generators.push((1, field_pow_perm(&f, e)));
    Ok(GroupPipelineInstance {
        frobenius,
        target,
        generators,
        p,
    })
}

pub fn group_pipeline_instances() -> Vec<Builder<GroupPipelineInstance>> {
    vec![
        ("ut3_11_by_c5sq_c2", ut3_11_pipeline),
        // σ^3 m_ζ σ^-3 = m_{ζ^27} = m_{ζ^2}, matching h f h^-1 = f^2
        ("c3_4_by_c5sq_c4", || {
            field_pipeline("c5sq_c4_scalar2", 3, 4, 5, 27, 2)
        }),
        // σ m_ζ σ^-1 = m_{ζ^2}
        ("c2_3_by_c7sq_c3", || {
            field_pipeline("c7sq_c3_scalar2", 2, 3, 7, 2, 2)
        }),
    ]
}

/// A Frobenius group acting linearly on a Lie algebra, on generators.
#[derive(Clone, Debug)]
pub struct LieFrobeniusInstance {
    pub frobenius: FrobeniusGroupSpec,
    pub ring: LieRing,
    pub generators: Vec<(usize, Matrix)>,
    pub p: u64,
}

fn swap_blocks(f: &Gf, m: usize) -> Matrix {
    let mut s = Matrix::zeros(f, 2 * m, 2 * m);
    for i in 0..m {
        s.set(i, m + i, 1);
        s.set(m + i, i, 1);
    }
    s
}

/// `V = GF(11)^4` with `(a, b) -> diag(ω^a, ω^b, ω^-a, ω^-b)` and the block swap.
fn gl4_generators(f: &Gf) -> Result<Vec<(usize, Matrix)>> {
    let w = f.root_of_unity(5).ok_or(Error::NoRootOfUnity(5))?;
    let wi = f.inv(w).expect("nonzero");
    Ok(vec![
        (2, Matrix::diagonal(f, &[1, w, 1, wi])),
        (10, Matrix::diagonal(f, &[w, 1, wi, 1])),
        (1, swap_blocks(f, 2)),
    ])
}

pub fn lie_frobenius_instances() -> Vec<Builder<LieFrobeniusInstance>> {
    vec![
        ("abelian_gf11_2", || {
            let f = Gf::prime(11)?;
            let frobenius = build_named(&frobenius_groups(), "c5sq_c2_inversion")?;
            let generators = vec![
                (2, Matrix::diagonal(&f, &[3, 4])),
                (10, Matrix::identity(&f, 2)),
                (1, swap_blocks(&f, 1)),
            ];
            Ok(LieFrobeniusInstance {
                frobenius,
                ring: LieRing::abelian(&f, 2),
                generators,
                p: 5,
            })
        }),
        ("abelian_gf11_4", || {
            let f = Gf::prime(11)?;
            let frobenius = build_named(&frobenius_groups(), "c5sq_c2_inversion")?;
            Ok(LieFrobeniusInstance {
                frobenius,
                ring: LieRing::abelian(&f, 4),
                generators: gl4_generators(&f)?,
                p: 5,
            })
        }),
        ("heisenberg_gf11", || {
            let f = Gf::prime(11)?;
            let frobenius = build_named(&frobenius_groups(), "c5sq_c2_inversion")?;
            let generators = vec![
                (2, Matrix::diagonal(&f, &[3, 4, 1])),
                (10, Matrix::identity(&f, 3)),
                (
                    1,
                    Matrix::from_ints(&f, &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -1]]),
                ),
            ];
            Ok(LieFrobeniusInstance {
                frobenius,
                ring: LieRing::heisenberg(&f),
                generators,
                p: 5,
            })
        }),
        ("free_two_step_gf11_4", || {
            let f = Gf::prime(11)?;
            let frobenius = build_named(&frobenius_groups(), "c5sq_c2_inversion")?;
            let ring = LieRing::free_two_step(&f, 4);
            let generators = gl4_generators(&f)?
                .into_iter()
                .map(|(x, m)| {
                    Ok((
                        x,
                        free_two_step_automorphism(&ring, 4, &m)?.matrix().clone(),
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(LieFrobeniusInstance {
                frobenius,
                ring,
                generators,
                p: 5,
            })
        }),
        ("free_two_step_gf11_2", || {
            let f = Gf::prime(11)?;
            let frobenius = build_named(&frobenius_groups(), "c5sq_c2_inversion")?;
            let ring = LieRing::free_two_step(&f, 2);
            let gl = [
                (2, Matrix::diagonal(&f, &[3, 4])),
                (10, Matrix::identity(&f, 2)),
                (1, Matrix::from_ints(&f, &[vec![0, 1], vec![1, 0]])),
            ];
            let generators = gl
                .iter()
                .map(|(x, m)| {
                    Ok((
                        *x,
                        free_two_step_automorphism(&ring, 2, m)?.matrix().clone(),
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(LieFrobeniusInstance {
                frobenius,
                ring,
                generators,
                p: 5,
            })
        }),
    ]
}

/// An automorphism `φ` of order dividing `p` of `L`.
#[derive(Clone, Debug)]
pub struct GradingInstance {
    pub ring: LieRing,
    pub phi: LieAutomorphism,
    pub p: u64,
}

fn diag_grading(ring: LieRing, p: u64, exps: &[u64]) -> Result<GradingInstance> {
    let f = ring.field().clone();
    let w = f.root_of_unity(p).ok_or(Error::NoRootOfUnity(p))?;
    let m = Matrix::diagonal(&f, &exps.iter().map(|&e| f.pow(w, e)).collect::<Vec<_>>());
    let phi = LieAutomorphism::new(&ring, m)?;
    Ok(GradingInstance { ring, phi, p })
}

fn free_two_step_grading(f: &Gf, m: usize, p: u64, exps: &[u64]) -> Result<GradingInstance> {
    let ring = LieRing::free_two_step(f, m);
    let w = f.root_of_unity(p).ok_or(Error::NoRootOfUnity(p))?;
    let gl = Matrix::diagonal(f, &exps.iter().map(|&e| f.pow(w, e)).collect::<Vec<_>>());
    let phi = free_two_step_automorphism(&ring, m, &gl)?;
    Ok(GradingInstance { ring, phi, p })
}

fn gf11() -> Result<Gf> {
    Gf::prime(11)
}

fn gf16() -> Result<Gf> {
    Gf::new(2, 4)
}

/// `[e0,e1]=e2, [e0,e2]=e3`.
fn filiform4(f: &Gf) -> Result<LieRing> {
    LieRing::from_brackets(f, 4, &[(0, 1, 2, 1), (0, 2, 3, 1)])
}

/// `sl2` in the basis `h, e, f`.
fn sl2(f: &Gf) -> Result<LieRing> {
    LieRing::from_brackets(f, 3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

pub fn grading_instances() -> Vec<Builder<GradingInstance>> {
    vec![
        ("gf11_abelian2_diag", || {
            diag_grading(LieRing::abelian(&gf11()?, 2), 5, &[1, 2])
        }),
        ("gf11_heisenberg_123", || {
            diag_grading(LieRing::heisenberg(&gf11()?), 5, &[1, 2, 3])
        }),
        ("gf11_heisenberg_identity", || {
            diag_grading(LieRing::heisenberg(&gf11()?), 5, &[0, 0, 0])
        }),
        ("gf11_heisenberg_011", || {
            diag_grading(LieRing::heisenberg(&gf11()?), 5, &[0, 1, 1])
        }),
        ("gf11_heisenberg_central_l0", || {
            diag_grading(LieRing::heisenberg(&gf11()?), 5, &[1, 4, 0])
        }),
        ("gf11_filiform4", || {
            diag_grading(filiform4(&gf11()?)?, 5, &[1, 2, 3, 4])
        }),
        ("gf11_free_two_step3", || {
            free_two_step_grading(&gf11()?, 3, 5, &[1, 2, 3])
        }),
        ("gf11_free_two_step4", || {
            free_two_step_grading(&gf11()?, 4, 5, &[0, 1, 2, 4])
        }),
        ("gf11_non_nilpotent", || {
            let f = gf11()?;
            diag_grading(LieRing::from_brackets(&f, 2, &[(1, 0, 1, 1)])?, 5, &[0, 1])
        }),
        ("gf11_sl2", || diag_grading(sl2(&gf11()?)?, 5, &[0, 1, 4])),
        ("gf16_abelian3_p3", || {
            diag_grading(LieRing::abelian(&gf16()?, 3), 3, &[1, 2, 0])
        }),
        ("gf16_heisenberg_p5", || {
            diag_grading(LieRing::heisenberg(&gf16()?), 5, &[1, 2, 3])
        }),
        ("gf16_heisenberg_p3", || {
            diag_grading(LieRing::heisenberg(&gf16()?), 3, &[1, 1, 2])
        }),
        ("gf16_free_two_step3_p3", || {
            free_two_step_grading(&gf16()?, 3, 3, &[0, 1, 2])
        }),
        ("gf16_filiform4_p5", || {
            diag_grading(filiform4(&gf16()?)?, 5, &[2, 1, 3, 0])
        }),
    ]
}

/// A `q`-group `A` acting on a `q'`-group `G`, or a Frobenius group acting on `G`.
#[derive(Clone, Debug)]
pub struct CentralizerActionInstance {
    pub actor: FiniteGroup,
    pub target: FiniteGroup,
    pub generators: Vec<(usize, Vec<usize>)>,
    /// Complement order when the actor is a Frobenius group `F : H` in catalog layout.
    pub complement_order: Option<usize>,
}

impl CentralizerActionInstance {
    pub fn setup(&self) -> Result<ActionSetup> {
        ActionSetup::from_generators(self.actor.clone(), self.target.clone(), &self.generators)
    }
}

fn c5cube_on(target: FiniteGroup, maps: [Vec<usize>; 3]) -> Result<CentralizerActionInstance> {
    let actor = catalog::elementary_abelian(5, 3)?;
    let [a, b, c] = maps;
    Ok(CentralizerActionInstance {
        actor,
        target,
        generators: vec![(25, a), (5, b), (1, c)],
        complement_order: None,
    })
}

fn from_pipeline(name: &str) -> Result<CentralizerActionInstance> {
    let inst = build_named(&group_pipeline_instances(), name)?;
    Ok(CentralizerActionInstance {
        actor: inst.frobenius.spec.build()?,
        target: inst.target,
        generators: inst.generators,
        complement_order: Some(inst.frobenius.complement_order),
    })
}

pub fn centralizer_action_instances() -> Vec<Builder<CentralizerActionInstance>> {
    vec![
        ("c5cube_on_ut3_11", || {
            let g = catalog::extraspecial_exponent_q(11)?;
            let id: Vec<usize> = (0..g.order()).collect();
            let a = extraspecial_linear_automorphism(11, [[3, 0], [0, 1]])?;
            let b = extraspecial_linear_automorphism(11, [[1, 0], [0, 3]])?;
            c5cube_on(g, [a, b, id])
        }),
        ("c5cube_on_c11cube", || {
            let g = catalog::elementary_abelian(11, 3)?;
            let m = |i: usize| {
                let mut rows = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
                rows[i][i] = 3;
                elementary_matrix_perm(11, 3, &rows)
            };
            c5cube_on(g, [m(0)?, m(1)?, m(2)?])
        }),
        ("c5cube_on_d11", || {
            let g = catalog::dihedral(11)?;
            let id: Vec<usize> = (0..22).collect();
            let a: Vec<usize> = (0..22).map(|x| 2 * ((3 * (x / 2)) % 11) + x % 2).collect();
            c5cube_on(g, [a, id.clone(), id])
        }),
        ("ut3_5_on_c11sq", || {
            let actor = catalog::extraspecial_exponent_q(5)?;
            let target = catalog::elementary_abelian(11, 2)?;
            let a = elementary_matrix_perm(11, 2, &[vec![3, 0], vec![0, 1]])?;
            let b = elementary_matrix_perm(11, 2, &[vec![1, 0], vec![0, 3]])?;
            Ok(CentralizerActionInstance {
                actor,
                target,
                generators: vec![(25, a), (5, b)],
                complement_order: None,
            })
        }),
        ("c5cube_c2_on_ut3_11", || {
            let frobenius = build_named(&frobenius_groups(), "c5cube_c2_inversion")?;
            let target = catalog::extraspecial_exponent_q(11)?;
            let id: Vec<usize> = (0..target.order()).collect();
            let generators = vec![
                (2, extraspecial_linear_automorphism(11, [[3, 0], [0, 4]])?),
                (10, id.clone()),
                (50, id),
                (1, extraspecial_linear_automorphism(11, [[0, 1], [1, 0]])?),
            ];
            Ok(CentralizerActionInstance {
                actor: frobenius.spec.build()?,
                target,
                generators,
                complement_order: Some(2),
            })
        }),
        ("ut3_7_c3_on_c2_3", || {
            // F = UT(3,7) acts through its first Frattini coordinate, H by x -> x^2
            let frobenius = build_named(&frobenius_groups(), "ut3_7_c3")?;
            let f8 = Gf::new(2, 3)?;
            let zeta = f8.root_of_unity(7).ok_or(Error::NoRootOfUnity(7))?;
            let generators = vec![
                (49 * 3, field_mul_perm(&f8, zeta)),
                (7 * 3, (0..8).collect()),
                (1, field_pow_perm(&f8, 2)),
            ];
            Ok(CentralizerActionInstance {
                actor: frobenius.spec.build()?,
                target: catalog::elementary_abelian(2, 3)?,
                generators,
                complement_order: Some(3),
            })
        }),
        ("c5sq_c4_on_c3_4", || from_pipeline("c3_4_by_c5sq_c4")),
        ("c7sq_c3_on_c2_3", || from_pipeline("c2_3_by_c7sq_c3")),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_builds() {
        for (name, b) in coprime_setups() {
            let s = b().unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(s.is_coprime(), "{name}");
        }
        assert!(coprime_setups().len() >= 20);
        for (name, b) in frobenius_generation_instances() {
            b().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        for (name, b) in frobenius_groups() {
            b().unwrap()
                .build()
                .unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        for (name, b) in group_pipeline_instances() {
            b().unwrap()
                .build()
                .unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        for (name, b) in grading_instances() {
            b().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        for (name, b) in centralizer_action_instances() {
            b().unwrap()
                .setup()
                .unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        for (name, b) in lie_frobenius_instances() {
            b().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(
            build_named(&coprime_setups(), "nope"),
            Err(Error::InvalidSpec(_))
        ));
    }
}
