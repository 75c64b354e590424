//! Structure of q-groups and Frobenius groups: power subgroups, metacyclicity,
//! small exponent-q subgroups, supersolvable series and characteristic subgroups.

use std::collections::BTreeSet;

use crate::actions::Automorphism;
use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::report::{CheckRecord, ScenarioReport};

/// Order bound for automorphism group computations.
pub const AUT_ORDER_CAP: usize = 256;
/// Bound on the number of automorphisms listed before giving up.
pub const AUT_COUNT_LIMIT: usize = 200_000;

fn require_q_group(g: &FiniteGroup, q: u64) -> Result<()> {
    if !is_prime(q) || !g.is_p_group(q) {
        return Err(Error::NotAQGroup(g.order(), q));
    }
    Ok(())
}

/// `G^q`, generated by all q-th powers.
pub fn agemo(g: &FiniteGroup, q: u64) -> Subgroup {
    let powers: Vec<usize> = (0..g.order()).map(|x| g.pow(x, q as i64)).collect();
    g.subgroup_generated(&powers)
}

/// `Ω_1(G)`, generated by the elements with `x^q = 1`.
pub fn omega1(g: &FiniteGroup, q: u64) -> Result<Subgroup> {
    require_q_group(g, q)?;
    let els: Vec<usize> = (0..g.order())
        .filter(|&x| g.pow(x, q as i64) == 0)
        .collect();
    Ok(g.subgroup_generated(&els))
}

/// A cyclic normal subgroup with cyclic quotient, given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetacyclicWitness {
    pub normal: Subgroup,
    pub normal_generator: usize,
    pub quotient_generator: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metacyclicity {
    pub metacyclic: bool,
    pub witness: Option<MetacyclicWitness>,
    /// `[G : G^q] <= q^2`, computed only for q-groups with q odd.
    pub index_test: Option<bool>,
}

impl Metacyclicity {
    /// Whether the index test, when it applies, agrees with the definition.
    pub fn agrees(&self) -> bool {
        self.index_test.map_or(true, |t| t == self.metacyclic)
    }
}

/// Metacyclicity by definition, cross-checked with the index test for odd q-groups.
pub fn is_metacyclic(g: &FiniteGroup) -> Metacyclicity {
    let mut witness = None;
    for n in g.cyclic_subgroups() {
        if !g.is_normal(&n) {
            continue;
        }
        let (quotient, proj) = g.quotient(&n).expect("normality checked");
        let m = quotient.order();
        if let Some(x) = (0..g.order()).find(|&x| quotient.element_order(proj.apply(x)) == m) {
            let normal_generator = n.generators().first().copied().unwrap_or(0);
            witness = Some(MetacyclicWitness {
                normal: n,
                normal_generator,
                quotient_generator: x,
            });
            break;
        }
    }
    let index_test = match prime_power(g.order() as u64) {
        Some((q, _)) if q % 2 == 1 => {
            let index = g.order() / agemo(g, q).order();
            Some(index as u64 <= q * q)
        }
        _ if g.order() == 1 => Some(true),
        _ => None,
    };
    Metacyclicity {
        metacyclic: witness.is_some(),
        witness,
        index_test,
    }
}

/// Compares `|G/G^q|` with `|Ω_1(G)|` for a q-group of order at most `q^q`.
pub fn check_regularity_identity(g: &FiniteGroup, q: u64) -> Result<ScenarioReport> {
    require_q_group(g, q)?;
    let bound = (q as u128).checked_pow(q as u32).unwrap_or(u128::MAX);
    if g.order() as u128 > bound {
        return Err(Error::TooLarge {
            size: g.order(),
            cap: bound.min(usize::MAX as u128) as usize,
        });
    }
    let index = g.order() / agemo(g, q).order();
    let omega = omega1(g, q)?.order();
    let mut r = ScenarioReport::new("lemma_regularity", g.name());
    r.push(
        CheckRecord::from_bool("regularity_identity", index == omega, || {
            format!("|G/G^q| = {index} but |Omega_1(G)| = {omega}")
        })
        .with("agemo_index", index)
        .with("omega1_order", omega),
    );
    Ok(r)
}

fn has_exponent(g: &FiniteGroup, h: &Subgroup, q: u64) -> bool {
    h.elements().iter().all(|&x| g.pow(x, q as i64) == 0)
}

/// First subgroup of order `q^3` and exponent `q`, searching generating pairs and
/// then triples of order-q elements in lexicographic order.
pub fn find_exponent_q_cube(a: &FiniteGroup, q: u64) -> Result<Subgroup> {
    require_q_group(a, q)?;
    let target = (q * q * q) as usize;
    let order_q: Vec<usize> = (1..a.order())
        .filter(|&x| a.pow(x, q as i64) == 0)
        .collect();
    for (i, &x) in order_q.iter().enumerate() {
        for &y in &order_q[i + 1..] {
            let h = a.subgroup_generated(&[x, y]);
            if h.order() == target && has_exponent(a, &h, q) {
                return Ok(h);
            }
        }
    }
    for (i, &x) in order_q.iter().enumerate() {
        for (j, &y) in order_q.iter().enumerate().skip(i + 1) {
            let pair = a.subgroup_generated(&[x, y]);
            // a triple only helps when the pair spans an exponent-q subgroup of order q^2
            if pair.order() != (q * q) as usize || !has_exponent(a, &pair, q) {
                continue;
            }
            for &z in &order_q[j + 1..] {
                if pair.contains(z) {
                    continue;
                }
                let h = a.subgroup_generated(&[x, y, z]);
                if h.order() == target && has_exponent(a, &h, q) {
                    return Ok(h);
                }
            }
        }
    }
    Err(Error::NotFound(format!(
        "no subgroup of order {target} and exponent {q}"
    )))
}

/// A Frobenius group `FH` with kernel `F` and complement `H`.
#[derive(Clone, Debug)]
pub struct FrobeniusStructure {
    whole: FiniteGroup,
    kernel: Subgroup,
    complement: Subgroup,
}

/// Validates the kernel/complement pair, including `C_F(h) = 1` for `h ≠ 1`.
pub fn check_frobenius(
    whole: &FiniteGroup,
    kernel: &Subgroup,
    complement: &Subgroup,
) -> Result<FrobeniusStructure> {
    if let Some((conjugator, _)) = whole.normality_witness(kernel) {
        return Err(Error::KernelNotNormal(conjugator));
    }
    let meet = whole.intersection(kernel, complement);
    if !meet.is_trivial() {
        return Err(Error::NotComplement(format!(
            "kernel and complement share {} elements",
            meet.order()
        )));
    }
    if kernel.order() * complement.order() != whole.order() {
        return Err(Error::NotComplement(format!(
            "{} * {} != {}",
            kernel.order(),
            complement.order(),
            whole.order()
        )));
    }
    for h in complement.nonidentity() {
        for f in kernel.nonidentity() {
            if whole.mul(f, h) == whole.mul(h, f) {
                return Err(Error::FixedPointWitness { h, f });
            }
        }
    }
    Ok(FrobeniusStructure {
        whole: whole.clone(),
        kernel: kernel.clone(),
        complement: complement.clone(),
    })
}

impl FrobeniusStructure {
    /// For a semidirect product `N : H` built by the catalog, where `(n, h)` has index
    /// `n |H| + h`.
    pub fn from_semidirect(whole: &FiniteGroup, complement_order: usize) -> Result<Self> {
        let m = complement_order;
        if m == 0 || whole.order() % m != 0 {
            return Err(Error::InvalidSpec(format!(
                "{m} does not divide {}",
                whole.order()
            )));
        }
        let kernel_els: Vec<usize> = (0..whole.order() / m).map(|f| f * m).collect();
        let comp_els: Vec<usize> = (0..m).collect();
        let kernel = whole.subgroup_from_elements(&kernel_els).ok_or_else(|| {
            Error::NotComplement("kernel coordinates do not form a subgroup".into())
        })?;
        let complement = whole.subgroup_from_elements(&comp_els).ok_or_else(|| {
            Error::NotComplement("complement coordinates do not form a subgroup".into())
        })?;
        check_frobenius(whole, &kernel, &complement)
    }

    pub fn whole(&self) -> &FiniteGroup {
        &self.whole
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn complement(&self) -> &Subgroup {
        &self.complement
    }

    /// The kernel as a group; element `i` is `kernel().elements()[i]`.
    pub fn kernel_group(&self) -> FiniteGroup {
        self.whole.subgroup_as_group(&self.kernel)
    }
}

/// A chief series `1 = N_0 < N_1 < ... < N_k = G` of normal subgroups with prime
/// order factors, or `None`.
pub fn is_supersolvable(g: &FiniteGroup, cap: usize) -> Result<Option<Vec<Subgroup>>> {
    if g.order() > cap {
        return Err(Error::TooLarge {
            size: g.order(),
            cap,
        });
    }
    // current quotient and the composite projection from G
    let mut quotient = g.clone();
    let mut proj: Vec<usize> = (0..g.order()).collect();
    let mut series = vec![g.trivial()];
    while quotient.order() > 1 {
        let found = (1..quotient.order()).find_map(|x| {
            if !is_prime(quotient.element_order(x) as u64) {
                return None;
            }
            let c = quotient.subgroup_generated(&[x]);
            quotient.is_normal(&c).then_some(c)
        });
        let Some(n) = found else { return Ok(None) };
        let (next, hom) = quotient.quotient(&n)?;
        for p in proj.iter_mut() {
            *p = hom.apply(*p);
        }
        quotient = next;
        let kernel: Vec<usize> = (0..g.order()).filter(|&x| proj[x] == 0).collect();
        series.push(g.subgroup_generated(&kernel));
    }
    Ok(Some(series))
}

/// First elementary abelian subgroup of order `p^2` normal in `F`, by prime and then
/// by lexicographic pair of order-p generators.
pub fn find_normal_rank2(f: &FiniteGroup) -> Result<Subgroup> {
    if !f.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    for p in f.primes() {
        let order_p: Vec<usize> = (1..f.order())
            .filter(|&x| f.element_order(x) as u64 == p)
            .collect();
        for (i, &x) in order_p.iter().enumerate() {
            for &y in &order_p[i + 1..] {
                if f.mul(x, y) != f.mul(y, x) {
                    continue;
                }
                let h = f.subgroup_generated(&[x, y]);
                if h.order() as u64 == p * p && f.is_normal(&h) {
                    return Ok(h);
                }
            }
        }
    }
    Err(Error::NotFound(
        "no normal elementary abelian subgroup of rank 2".into(),
    ))
}

/// Minimal (by sorted element list) subgroup of order `p` of the kernel that is
/// normal in the whole Frobenius group.
pub fn choose_z(fs: &FrobeniusStructure, p: u64) -> Result<Subgroup> {
    let g = fs.whole();
    let mut candidates: Vec<Subgroup> = Vec::new();
    let mut seen = BTreeSet::new();
    for x in fs.kernel().nonidentity() {
        if g.element_order(x) as u64 == p {
            let c = g.subgroup_generated(&[x]);
            if seen.insert(c.elements().to_vec()) {
                candidates.push(c);
            }
        }
    }
    candidates.sort_by(|a, b| a.elements().cmp(b.elements()));
    candidates
        .into_iter()
        .find(|c| g.is_normal(c))
        .ok_or_else(|| {
            Error::NotFound(format!(
                "no subgroup of order {p} in the kernel is normal in the whole group"
            ))
        })
}

/// Images of `gens[..=k]` extended over `H_k = <gens[..=k]>`, or `None` when the
/// assignment is inconsistent or not injective.
fn extend_partial(g: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = g.mul(x, s);
            let v = g.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[v] {
                    return None;
                }
                used[v] = true;
                map[y] = v;
                queue.push(y);
            } else if map[y] != v {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}

/// All automorphisms, by backtracking over images of a greedy generating set.
pub fn automorphism_group(g: &FiniteGroup) -> Result<Vec<Automorphism>> {
    automorphism_group_capped(g, AUT_ORDER_CAP, AUT_COUNT_LIMIT)
}

pub fn automorphism_group_capped(
    g: &FiniteGroup,
    cap: usize,
    limit: usize,
) -> Result<Vec<Automorphism>> {
    if g.order() > cap {
        return Err(Error::TooLarge {
            size: g.order(),
            cap,
        });
    }
    let gens = g.generating_set();
    let orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    let mut out = Vec::new();
    let mut imgs = Vec::with_capacity(gens.len());
    search_auts(g, &gens, &orders, &mut imgs, &mut out, limit)?;
    Ok(out)
}

fn search_auts(
    g: &FiniteGroup,
    gens: &[usize],
    orders: &[usize],
    imgs: &mut Vec<usize>,
    out: &mut Vec<Automorphism>,
    limit: usize,
) -> Result<()> {
    let k = imgs.len();
    if k == gens.len() {
        let map = extend_partial(g, gens, imgs).expect("checked at previous depth");
        if out.len() >= limit {
            return Err(Error::TooLarge {
                size: out.len() + 1,
                cap: limit,
            });
        }
        out.push(Automorphism::new_unchecked(map));
        return Ok(());
    }
    let target_order = orders[gens[k]];
    for t in 1..g.order() {
        if orders[t] != target_order {
            continue;
        }
        imgs.push(t);
        if extend_partial(g, &gens[..=k], imgs).is_some() {
            search_auts(g, gens, orders, imgs, out, limit)?;
        }
        imgs.pop();
    }
    Ok(())
}

/// All characteristic subgroups, as joins of subgroups generated by automorphism orbits.
pub fn characteristic_subgroups(g: &FiniteGroup, auts: &[Automorphism]) -> Vec<Subgroup> {
    let mut orbit_closures = Vec::new();
    let mut seen_orbit = vec![false; g.order()];
    let mut seen = BTreeSet::new();
    for x in 0..g.order() {
        if seen_orbit[x] {
            continue;
        }
        let orbit: BTreeSet<usize> = auts.iter().map(|a| a.apply(x)).chain([x]).collect();
        for &y in &orbit {
            seen_orbit[y] = true;
        }
        let c = g.subgroup_generated(&orbit.into_iter().collect::<Vec<_>>());
        if seen.insert(c.elements().to_vec()) {
            orbit_closures.push(c);
        }
    }
    let mut found = vec![g.trivial()];
    let mut all = BTreeSet::new();
    all.insert(vec![0usize]);
    let mut i = 0;
    while i < found.len() {
        let base = found[i].clone();
        for c in &orbit_closures {
            if c.is_subgroup_of(&base) {
                continue;
            }
            let j = g.join(&base, c);
            if all.insert(j.elements().to_vec()) {
                found.push(j);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    found
}

/// Extraspecial of exponent `q`: centre of order `q` equal to the derived subgroup, exponent `q`.
pub fn is_extraspecial_exponent_q(g: &FiniteGroup, h: &Subgroup, q: u64) -> bool {
    let e = g.subgroup_as_group(h);
    let z = e.center();
    z.order() as u64 == q && e.derived_subgroup() == z && e.exponent() as u64 == q
}

/// Searches an extraspecial subgroup `E` of exponent `q` with `Z(Q) E = Q`.
fn find_extraspecial_factor(g: &FiniteGroup, q: u64) -> Option<Subgroup> {
    let z = g.center();
    if g.is_abelian() {
        return Some(g.trivial());
    }
    // Z(Q) ∩ E = Z(E) has order q
    let target = g.order() * q as usize / z.order();
    let order_q: Vec<usize> = (1..g.order())
        .filter(|&x| g.element_order(x) as u64 == q)
        .collect();
    fn dfs(
        g: &FiniteGroup,
        q: u64,
        target: usize,
        z: &Subgroup,
        order_q: &[usize],
        start: usize,
        gens: &mut Vec<usize>,
    ) -> Option<Subgroup> {
        let h = g.subgroup_generated(gens);
        if h.order() > target || !has_exponent(g, &h, q) {
            return None;
        }
        if h.order() == target && is_extraspecial_exponent_q(g, &h, q) {
            let covered = g.set_product(z.elements(), h.elements());
            if covered.iter().all(|&b| b) {
                return Some(h);
            }
        }
        if gens.len() >= 4 {
            return None;
        }
        for (i, &x) in order_q.iter().enumerate().skip(start) {
            if h.contains(x) {
                continue;
            }
            gens.push(x);
            let hit = dfs(g, q, target, z, order_q, i + 1, gens);
            gens.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
    dfs(g, q, target, &z, &order_q, 0, &mut Vec::new())
}

/// Enumerates characteristic abelian subgroups. When none is noncyclic, checks that
/// `Z(Q)` is cyclic and that `Q = Z(Q) E` with `E` extraspecial of exponent `q`.
pub fn check_no_noncyclic_char_abelian(g: &FiniteGroup, q: u64) -> Result<ScenarioReport> {
    require_q_group(g, q)?;
    if q == 2 {
        return Err(Error::InvalidSpec("q must be odd".into()));
    }
    let auts = automorphism_group(g)?;
    let chars = characteristic_subgroups(g, &auts);
    let mut r = ScenarioReport::new("char_abelian_structure", g.name());
    let noncyclic = chars
        .iter()
        .find(|h| g.is_abelian_subgroup(h) && !g.subgroup_as_group(h).is_cyclic());
    if let Some(h) = noncyclic {
        r.push(
            CheckRecord::not_applicable(
                "no_noncyclic_characteristic_abelian",
                format!(
                    "characteristic abelian noncyclic subgroup of order {}: {:?}",
                    h.order(),
                    h.elements()
                ),
            )
            .phase(crate::report::Phase::Hypothesis)
            .with("automorphisms", auts.len()),
        );
        r.push(
            CheckRecord::skipped("centre_cyclic", "hypothesis does not hold")
                .phase(crate::report::Phase::Conclusion),
        );
        r.push(
            CheckRecord::skipped("central_product_decomposition", "hypothesis does not hold")
                .phase(crate::report::Phase::Conclusion),
        );
        return Ok(r);
    }
    r.push(
        CheckRecord::pass("no_noncyclic_characteristic_abelian")
            .phase(crate::report::Phase::Hypothesis)
            .with("automorphisms", auts.len())
            .with("characteristic_subgroups", chars.len()),
    );
    let z = g.center();
    let z_cyclic = g.subgroup_as_group(&z).is_cyclic();
    r.push(
        CheckRecord::from_bool("centre_cyclic", z_cyclic, || {
            format!("Z(Q) of order {} is not cyclic", z.order())
        })
        .phase(crate::report::Phase::Conclusion)
        .with("centre_order", z.order()),
    );
    let check = match find_extraspecial_factor(g, q) {
        Some(e) => CheckRecord::pass("central_product_decomposition")
            .with("extraspecial_order", e.order())
            .with("extraspecial_generators", e.generators().to_vec()),
        None => CheckRecord::fail(
            "central_product_decomposition",
            "no extraspecial E of exponent q with Z(Q)E = Q",
        ),
    };
    r.push(check.phase(crate::report::Phase::Conclusion));
    Ok(r)
}

/// A fixed-point-free automorphism of prime order `r` on `G`, if one exists.
pub fn fixed_point_free_automorphism(auts: &[Automorphism], r: usize) -> Option<&Automorphism> {
    auts.iter()
        .find(|a| a.order() == r && (1..a.perm().len()).all(|x| a.apply(x) != x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::{self, AutomorphismSpec, CatalogSpec};

    #[test]
    fn power_subgroups() {
        let c25 = catalog::cyclic(25).unwrap();
        assert_eq!(agemo(&c25, 5).order(), 5);
        assert_eq!(omega1(&c25, 5).unwrap().order(), 5);
        let e = catalog::elementary_abelian(5, 3).unwrap();
        assert_eq!(agemo(&e, 5).order(), 1);
        assert_eq!(omega1(&e, 5).unwrap().order(), 125);
        let x = catalog::extraspecial_exponent_q(5).unwrap();
        assert_eq!(agemo(&x, 5).order(), 1);
        assert_eq!(omega1(&x, 5).unwrap().order(), 125);
        assert!(matches!(
            omega1(&catalog::cyclic(6).unwrap(), 2),
            Err(Error::NotAQGroup(6, 2))
        ));
    }

    #[test]
    fn metacyclic_examples() {
        let m = is_metacyclic(&catalog::cyclic(25).unwrap());
        assert!(m.metacyclic && m.agrees());
        let m = is_metacyclic(&catalog::elementary_abelian(5, 2).unwrap());
        assert!(m.metacyclic && m.agrees());
        let w = m.witness.unwrap();
        assert_eq!(w.normal.order(), 5);
        let m = is_metacyclic(&catalog::elementary_abelian(5, 3).unwrap());
        assert!(!m.metacyclic);
        assert_eq!(m.index_test, Some(false));
        assert!(is_metacyclic(&catalog::dihedral(4).unwrap()).metacyclic);
        assert!(is_metacyclic(&catalog::quaternion8().unwrap()).metacyclic);
    }

    #[test]
    fn regularity() {
        for g in [
            catalog::cyclic(25).unwrap(),
            catalog::extraspecial_exponent_q(5).unwrap(),
            catalog::cyclic(5).unwrap(),
        ] {
            assert!(check_regularity_identity(&g, 5).unwrap().all_pass());
        }
        let r = check_regularity_identity(&catalog::cyclic(25).unwrap(), 5).unwrap();
        assert_eq!(r.checks[0].observed["agemo_index"], 5);
    }

    #[test]
    fn q_cube_search() {
        let x = catalog::extraspecial_exponent_q(5).unwrap();
        assert_eq!(find_exponent_q_cube(&x, 5).unwrap().order(), 125);
        let e = catalog::elementary_abelian(5, 3).unwrap();
        assert_eq!(find_exponent_q_cube(&e, 5).unwrap().order(), 125);
        assert!(matches!(
            find_exponent_q_cube(&catalog::cyclic(125).unwrap(), 5),
            Err(Error::NotFound(_))
        ));
    }

    fn frobenius_100() -> FiniteGroup {
        CatalogSpec::semidirect_cyclic(
            CatalogSpec::elementary_abelian(5, 2),
            4,
            AutomorphismSpec::Power { exponent: 2 },
        )
        .build()
        .unwrap()
    }

    #[test]
    fn frobenius_checks() {
        let g = frobenius_100();
        let fs = FrobeniusStructure::from_semidirect(&g, 4).unwrap();
        assert_eq!(fs.kernel().order(), 25);
        let s3 = catalog::dihedral(3).unwrap();
        let k = s3.subgroup_generated(&[2]);
        let h = s3.subgroup_generated(&[1]);
        check_frobenius(&s3, &k, &h).unwrap();
        let c6 = catalog::cyclic(6).unwrap();
        let k = c6.subgroup_generated(&[2]);
        let h = c6.subgroup_generated(&[3]);
        match check_frobenius(&c6, &k, &h) {
            Err(Error::FixedPointWitness { h, f }) => {
                assert_eq!(c6.mul(h, f), c6.mul(f, h));
                assert!(f != 0 && h != 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn supersolvable() {
        assert!(is_supersolvable(&catalog::cyclic(12).unwrap(), 512)
            .unwrap()
            .is_some());
        let series = is_supersolvable(&frobenius_100(), 512).unwrap().unwrap();
        assert_eq!(
            series.iter().map(|s| s.order()).collect::<Vec<_>>(),
            vec![1, 5, 25, 50, 100]
        );
        assert!(
            is_supersolvable(&catalog::alternating4().build().unwrap(), 512)
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn normal_rank2() {
        let e = catalog::elementary_abelian(5, 2).unwrap();
        assert_eq!(find_normal_rank2(&e).unwrap().order(), 25);
        let x = catalog::extraspecial_exponent_q(5).unwrap();
        let h = find_normal_rank2(&x).unwrap();
        assert_eq!(h.order(), 25);
        assert!(h.is_subgroup_of(&x.whole()) && x.is_normal(&h));
        assert!(x.center().is_subgroup_of(&h));
        assert!(matches!(
            find_normal_rank2(&catalog::cyclic(125).unwrap()),
            Err(Error::NotFound(_))
        ));
        assert!(matches!(
            find_normal_rank2(&catalog::dihedral(3).unwrap()),
            Err(Error::NotNilpotent)
        ));
    }

    /// Oracle: count bijections preserving the product, by brute force.
    fn brute_force_aut_count(g: &FiniteGroup) -> usize {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(g.order())
            .into_iter()
            .filter(|p| {
                (0..g.order()).all(|x| (0..g.order()).all(|y| p[g.mul(x, y)] == g.mul(p[x], p[y])))
            })
            .count()
    }

    #[test]
    fn automorphism_counts() {
        for (g, n) in [
            (catalog::cyclic(5).unwrap(), 4),
            (catalog::elementary_abelian(2, 2).unwrap(), 6),
            (catalog::cyclic(1).unwrap(), 1),
            (catalog::dihedral(3).unwrap(), 6),
            (catalog::dihedral(4).unwrap(), 8),
            (catalog::quaternion8().unwrap(), 24),
        ] {
            let auts = automorphism_group(&g).unwrap();
            assert_eq!(auts.len(), n, "{}", g.name());
            if g.order() <= 6 {
                assert_eq!(brute_force_aut_count(&g), n);
            }
            for a in &auts {
                Automorphism::new(&g, a.perm().to_vec()).unwrap();
            }
        }
    }

    #[test]
    fn characteristic_abelian_structure() {
        let x = catalog::extraspecial_exponent_q(5).unwrap();
        let r = check_no_noncyclic_char_abelian(&x, 5).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.checks[2].observed["extraspecial_order"], 125);
        let r = check_no_noncyclic_char_abelian(&catalog::elementary_abelian(5, 2).unwrap(), 5)
            .unwrap();
        assert_eq!(r.checks[0].status, crate::report::Status::NotApplicable);
        let r = check_no_noncyclic_char_abelian(&catalog::cyclic(25).unwrap(), 5).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.checks[2].observed["extraspecial_order"], 1);
    }

    #[test]
    fn z_choice() {
        let g = frobenius_100();
        let fs = FrobeniusStructure::from_semidirect(&g, 4).unwrap();
        let z = choose_z(&fs, 5).unwrap();
        assert_eq!(z.order(), 5);
        assert!(z.is_subgroup_of(fs.kernel()) && g.is_normal(&z));
        // oracle: minimal sorted order-5 subgroup of the kernel; all are normal under a scalar action
        let mut lines: Vec<Vec<usize>> = fs
            .kernel()
            .nonidentity()
            .map(|x| g.subgroup_generated(&[x]).elements().to_vec())
            .collect();
        lines.sort();
        assert_eq!(z.elements(), lines[0].as_slice());
        let c5c4 = CatalogSpec::semidirect_cyclic(
            CatalogSpec::cyclic(5),
            4,
            AutomorphismSpec::Power { exponent: 2 },
        )
        .build()
        .unwrap();
        let fs = FrobeniusStructure::from_semidirect(&c5c4, 4).unwrap();
        assert_eq!(choose_z(&fs, 5).unwrap(), *fs.kernel());
    }
}
