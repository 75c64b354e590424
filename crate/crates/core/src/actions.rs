//! Groups acting by automorphisms: fixed points, `[G,A]`, and checks of the
//! standard consequences of coprimality.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::group::io::read_cayley_with_relabel;
use crate::group::{
    check_automorphism, compose_perms, extend_from_generators, FiniteGroup, Subgroup,
    DEFAULT_FITTING_CAP,
};
use crate::report::{CheckRecord, ScenarioReport};

/// A permutation of element indices that respects the group product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    perm: Vec<usize>,
}

impl Automorphism {
    pub fn new(group: &FiniteGroup, perm: Vec<usize>) -> Result<Self> {
        check_automorphism(group, &perm)?;
        Ok(Automorphism { perm })
    }

    pub(crate) fn new_unchecked(perm: Vec<usize>) -> Self {
        Automorphism { perm }
    }

    pub fn identity(order: usize) -> Self {
        Automorphism {
            perm: (0..order).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: compose_perms(&self.perm, &other.perm),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.perm.len()];
        for (x, &y) in self.perm.iter().enumerate() {
            inv[y] = x;
        }
        Automorphism { perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.compose(self);
            k += 1;
        }
        k
    }

    /// Image of a subgroup.
    pub fn image(&self, group: &FiniteGroup, h: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = h.generators().iter().map(|&x| self.perm[x]).collect();
        group.subgroup_generated(&gens)
    }

    pub fn preserves(&self, h: &Subgroup) -> bool {
        h.generators().iter().all(|&x| h.contains(self.perm[x]))
    }
}

/// A homomorphism from `actor` into the automorphisms of `target`, stored for
/// every actor element. Actor products compose as functions:
/// `rep(a b) = rep(a) ∘ rep(b)`.
#[derive(Clone, Debug)]
pub struct ActionSetup {
    actor: FiniteGroup,
    target: FiniteGroup,
    rep: Vec<Automorphism>,
    coprime: bool,
    actor_gens: Vec<usize>,
}

impl ActionSetup {
    /// Builds the action from the automorphisms assigned to a generating set of the actor.
    pub fn from_generators(
        actor: FiniteGroup,
        target: FiniteGroup,
        gens: &[(usize, Vec<usize>)],
    ) -> Result<Self> {
        let mut checked = Vec::with_capacity(gens.len());
        for (a, perm) in gens {
            if *a >= actor.order() {
                return Err(Error::InvalidSpec(format!(
                    "actor element {a} out of range"
                )));
            }
            checked.push((*a, Automorphism::new(&target, perm.clone())?));
        }
        let rep = extend_from_generators(
            &actor,
            &checked,
            Automorphism::identity(target.order()),
            |x, s| x.compose(s),
        )?;
        Ok(Self::assemble(actor, target, rep))
    }

    /// Builds the action from one permutation per actor element, in index order.
    pub fn from_images(
        actor: FiniteGroup,
        target: FiniteGroup,
        images: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if images.len() != actor.order() {
            return Err(Error::InvalidSpec(format!(
                "expected {} permutations, got {}",
                actor.order(),
                images.len()
            )));
        }
        let rep = images
            .into_iter()
            .map(|p| Automorphism::new(&target, p))
            .collect::<Result<Vec<_>>>()?;
        for s in actor.generating_set() {
            for a in 0..actor.order() {
                if rep[actor.mul(a, s)] != rep[a].compose(&rep[s]) {
                    return Err(Error::ActionNotHomomorphic(a, s));
                }
            }
        }
        if !rep[0].is_identity() {
            return Err(Error::ActionNotHomomorphic(0, 0));
        }
        Ok(Self::assemble(actor, target, rep))
    }

    pub fn trivial(actor: FiniteGroup, target: FiniteGroup) -> Self {
        let rep = vec![Automorphism::identity(target.order()); actor.order()];
        Self::assemble(actor, target, rep)
    }

    fn assemble(actor: FiniteGroup, target: FiniteGroup, rep: Vec<Automorphism>) -> Self {
        let coprime = gcd(actor.order() as u64, target.order() as u64) == 1;
        let actor_gens = actor.generating_set();
        ActionSetup {
            actor,
            target,
            rep,
            coprime,
            actor_gens,
        }
    }

    pub fn actor(&self) -> &FiniteGroup {
        &self.actor
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn rep(&self, a: usize) -> &Automorphism {
        &self.rep[a]
    }

    pub fn images(&self) -> Vec<Vec<usize>> {
        self.rep.iter().map(|r| r.perm.clone()).collect()
    }

    pub fn is_coprime(&self) -> bool {
        self.coprime
    }

    /// `g^a`
    pub fn act(&self, a: usize, g: usize) -> usize {
        self.rep[a].apply(g)
    }

    pub fn is_faithful(&self) -> bool {
        (1..self.actor.order()).all(|a| !self.rep[a].is_identity())
    }

    /// `C_G(S) = {g : g^a = g for all a in S}`.
    pub fn fixed_points(&self, s: &[usize]) -> Subgroup {
        let els: Vec<usize> = (0..self.target.order())
            .filter(|&g| s.iter().all(|&a| self.act(a, g) == g))
            .collect();
        self.target.subgroup_generated(&els)
    }

    /// `C_G(A)`
    pub fn fixed_points_all(&self) -> Subgroup {
        self.fixed_points(&self.actor_gens.clone())
    }

    pub fn is_invariant(&self, h: &Subgroup) -> bool {
        self.actor_gens.iter().all(|&a| self.rep[a].preserves(h))
    }

    /// `[K, A]` for an A-invariant subgroup `K`, generated by `k^-1 k^a`.
    pub fn commutator_on(&self, k: &Subgroup) -> Subgroup {
        let mut gens = Vec::new();
        for &x in k.elements() {
            for &a in &self.actor_gens {
                gens.push(self.target.mul(self.target.inv(x), self.act(a, x)));
            }
        }
        self.target.subgroup_generated(&gens)
    }

    /// `[G, A]`. Normality in `G` and A-invariance are asserted.
    pub fn commutator_with_action(&self) -> Subgroup {
        let c = self.commutator_on(&self.target.whole());
        assert!(self.target.is_normal(&c), "[G,A] must be normal in G");
        assert!(self.is_invariant(&c), "[G,A] must be A-invariant");
        c
    }

    /// The same action restricted to a subgroup of the actor.
    pub fn restrict_actor(&self, sub: &Subgroup) -> ActionSetup {
        let actor = self.actor.subgroup_as_group(sub);
        let rep = sub
            .elements()
            .iter()
            .map(|&a| self.rep[a].clone())
            .collect();
        Self::assemble(actor, self.target.clone(), rep)
    }

    /// The induced action on an A-invariant subgroup of the target.
    pub fn restrict_target(&self, sub: &Subgroup) -> Result<ActionSetup> {
        if !self.is_invariant(sub) {
            return Err(Error::InvalidSpec(
                "subgroup is not invariant under the actor".into(),
            ));
        }
        let target = self.target.subgroup_as_group(sub);
        let mut pos = vec![usize::MAX; self.target.order()];
        for (i, &x) in sub.elements().iter().enumerate() {
            pos[x] = i;
        }
        let rep = self
            .rep
            .iter()
            .map(|r| {
                Automorphism::new_unchecked(
                    sub.elements().iter().map(|&x| pos[r.apply(x)]).collect(),
                )
            })
            .collect();
        Ok(Self::assemble(self.actor.clone(), target, rep))
    }

    /// The induced action on `G/N` for an A-invariant normal `N`, with the projection images.
    pub fn on_quotient(&self, n: &Subgroup) -> Result<(ActionSetup, Vec<usize>)> {
        if !self.is_invariant(n) {
            return Err(Error::InvalidSpec(
                "subgroup is not invariant under the actor".into(),
            ));
        }
        let (q, proj) = self.target.quotient(n)?;
        let mut rep = Vec::with_capacity(self.actor.order());
        for r in &self.rep {
            let mut perm = vec![usize::MAX; q.order()];
            for g in 0..self.target.order() {
                perm[proj.apply(g)] = proj.apply(r.apply(g));
            }
            rep.push(Automorphism::new_unchecked(perm));
        }
        Ok((
            Self::assemble(self.actor.clone(), q, rep),
            proj.images().to_vec(),
        ))
    }
}

/// Product `H_1 H_2 ... H_k` of subgroups as a membership vector.
fn product_of_subgroups(g: &FiniteGroup, factors: &[Subgroup]) -> Vec<bool> {
    let mut member = vec![false; g.order()];
    member[0] = true;
    for h in factors {
        let cur: Vec<usize> = (0..g.order()).filter(|&x| member[x]).collect();
        member = g.set_product(&cur, h.elements());
    }
    member
}

/// Checks the coprime-action facts on one setup:
///
/// - `i_generation`: `G = C_G(A) [G,A]`
/// - `ii_commutator_stable`: `[G,A,A] = [G,A]`
/// - `iii_invariant_sylow`: every prime has an A-invariant Sylow subgroup
/// - `iv_quotient_centralizer`: `C_{G/N}(A) = C_G(A)N/N` for A-invariant normal `N`
/// - `v_centralizer_product`: `G = ∏_{a ≠ 1} C_G(a)` when `G` is nilpotent and `A` noncyclic abelian
///
/// The enumerative checks abstain above `cap`.
pub fn verify_coprime_facts(setup: &ActionSetup, cap: usize) -> Result<ScenarioReport> {
    if !setup.is_coprime() {
        return Err(Error::NotCoprime {
            actor: setup.actor.order(),
            target: setup.target.order(),
        });
    }
    let g = &setup.target;
    let a = &setup.actor;
    let mut report = ScenarioReport::new("coprime_facts", &format!("{} on {}", a.name(), g.name()));

    let cga = setup.fixed_points_all();
    let ga = setup.commutator_with_action();

    let product = g.set_product(cga.elements(), ga.elements());
    let missing = product.iter().position(|&m| !m);
    report.push(
        CheckRecord::from_bool("i_generation", missing.is_none(), || {
            format!("element {} is not in C_G(A)[G,A]", missing.unwrap())
        })
        .with("centralizer_order", cga.order())
        .with("commutator_order", ga.order()),
    );

    let gaa = setup.commutator_on(&ga);
    report.push(
        CheckRecord::from_bool("ii_commutator_stable", gaa == ga, || {
            let x = ga.elements().iter().find(|&&x| !gaa.contains(x)).unwrap();
            format!("element {x} of [G,A] is not in [G,A,A]")
        })
        .with("order", gaa.order()),
    );

    report.push(check_invariant_sylow(setup, cap));
    report.push(check_quotient_centralizers(setup, &cga, cap));

    let nonidentity: Vec<usize> = (1..a.order()).collect();
    if g.is_nilpotent() && a.is_abelian() && !a.is_cyclic() {
        let factors: Vec<Subgroup> = nonidentity
            .iter()
            .map(|&x| setup.fixed_points(&[x]))
            .collect();
        let covered = product_of_subgroups(g, &factors);
        let missing = covered.iter().position(|&m| !m);
        report.push(
            CheckRecord::from_bool("v_centralizer_product", missing.is_none(), || {
                format!(
                    "element {} is not in the product of the C_G(a)",
                    missing.unwrap()
                )
            })
            .with("factors", factors.len()),
        );
    } else {
        report.push(CheckRecord::not_applicable(
            "v_centralizer_product",
            "requires G nilpotent and A noncyclic abelian",
        ));
    }
    Ok(report)
}

fn check_invariant_sylow(setup: &ActionSetup, cap: usize) -> CheckRecord {
    let g = &setup.target;
    let name = "iii_invariant_sylow";
    if g.order() > cap {
        return CheckRecord::abstain(
            name,
            format!("|G| = {} exceeds the Sylow conjugate cap {cap}", g.order()),
        );
    }
    let mut found = Vec::new();
    for p in g.primes() {
        let sylow = g.sylow_subgroup(p);
        let mut seen = BTreeSet::new();
        let mut hit = None;
        for x in 0..g.order() {
            let c = g.conjugate_subgroup(&sylow, x);
            if !seen.insert(c.elements().to_vec()) {
                continue;
            }
            if setup.is_invariant(&c) {
                hit = Some(c);
                break;
            }
        }
        match hit {
            Some(c) => found.push(
                serde_json::json!({"prime": p, "order": c.order(), "elements": c.elements()}),
            ),
            None => {
                return CheckRecord::fail(
                    name,
                    format!(
                        "no A-invariant Sylow {p}-subgroup among {} conjugates",
                        seen.len()
                    ),
                )
            }
        }
    }
    CheckRecord::pass(name).with("sylow", found)
}

fn check_quotient_centralizers(setup: &ActionSetup, cga: &Subgroup, cap: usize) -> CheckRecord {
    let g = &setup.target;
    let name = "iv_quotient_centralizer";
    let normals = match g.normal_subgroups(cap) {
        Ok(ns) => ns,
        Err(_) => {
            return CheckRecord::abstain(
                name,
                format!("|G| = {} exceeds the normal subgroup cap {cap}", g.order()),
            )
        }
    };
    let mut tested = 0usize;
    for n in normals.iter().filter(|n| setup.is_invariant(n)) {
        tested += 1;
        let (qs, proj) = match setup.on_quotient(n) {
            Ok(v) => v,
            Err(e) => return CheckRecord::fail(name, format!("quotient construction failed: {e}")),
        };
        let lhs = qs.fixed_points_all();
        let rhs_gens: Vec<usize> = cga.elements().iter().map(|&x| proj[x]).collect();
        let rhs = qs.target().subgroup_generated(&rhs_gens);
        if lhs != rhs {
            return CheckRecord::fail(
                name,
                format!(
                    "N = {:?}: |C_(G/N)(A)| = {} but |C_G(A)N/N| = {}",
                    n.elements(),
                    lhs.order(),
                    rhs.order()
                ),
            );
        }
    }
    CheckRecord::pass(name).with("invariant_normal_subgroups", tested)
}

/// Default cap for the enumerative coprime checks.
pub const DEFAULT_ACTION_CAP: usize = DEFAULT_FITTING_CAP;

/// On-disk form of an action: Cayley table files and one permutation per actor element.
/// Paths are relative to the JSON file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionFile {
    pub actor_file: String,
    pub target_file: String,
    pub images: Vec<Vec<usize>>,
}

impl ActionFile {
    pub fn from_setup(setup: &ActionSetup, actor_file: &str, target_file: &str) -> Self {
        ActionFile {
            actor_file: actor_file.into(),
            target_file: target_file.into(),
            images: setup.images(),
        }
    }
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.parent().unwrap_or_else(|| Path::new(".")).join(p)
    }
}

/// Reads an action file, translating permutations through any identity relabeling
/// applied to the Cayley tables.
pub fn read_action(path: &Path) -> Result<ActionSetup> {
    let spec: ActionFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let (actor, ra) = read_cayley_with_relabel(&resolve(path, &spec.actor_file))?;
    let (target, rg) = read_cayley_with_relabel(&resolve(path, &spec.target_file))?;
    if spec.images.len() != actor.order() {
        return Err(Error::InvalidSpec(format!(
            "expected {} permutations, got {}",
            actor.order(),
            spec.images.len()
        )));
    }
    let mut images = vec![Vec::new(); actor.order()];
    for (old_a, perm) in spec.images.iter().enumerate() {
        if perm.len() != target.order() || perm.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvalidSpec(format!(
                "permutation {old_a} has the wrong shape"
            )));
        }
        let mut relabeled = vec![0; target.order()];
        for (old_x, &old_y) in perm.iter().enumerate() {
            relabeled[rg[old_x]] = rg[old_y];
        }
        images[ra[old_a]] = relabeled;
    }
    ActionSetup::from_images(actor, target, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::{self, elementary_index, elementary_matrix_perm};

    fn c5_inversion() -> ActionSetup {
        let g = catalog::cyclic(5).unwrap();
        let a = catalog::cyclic(2).unwrap();
        let inv: Vec<usize> = (0..5).map(|x| (5 - x) % 5).collect();
        ActionSetup::from_generators(a, g, &[(1, inv)]).unwrap()
    }

    fn c5sq_sign(rows: &[Vec<i64>]) -> ActionSetup {
        let g = catalog::elementary_abelian(5, 2).unwrap();
        let a = catalog::cyclic(2).unwrap();
        let m = elementary_matrix_perm(5, 2, rows).unwrap();
        ActionSetup::from_generators(a, g, &[(1, m)]).unwrap()
    }

    #[test]
    fn fixed_points_examples() {
        let s = c5_inversion();
        assert_eq!(s.fixed_points(&[0]).order(), 5);
        assert_eq!(s.fixed_points(&[0, 1]).elements(), &[0]);
        let s = c5sq_sign(&[vec![1, 0], vec![0, -1]]);
        let c = s.fixed_points(&[1]);
        // pointwise oracle: (x,y) fixed iff y = -y iff y = 0
        let expect: Vec<usize> = (0..5).map(|x| elementary_index(&[x, 0], 5)).collect();
        assert_eq!(c.elements(), expect.as_slice());
    }

    #[test]
    fn commutator_examples() {
        let g = catalog::cyclic(5).unwrap();
        let triv = ActionSetup::trivial(catalog::cyclic(2).unwrap(), g);
        assert_eq!(triv.commutator_with_action().order(), 1);
        assert_eq!(c5_inversion().commutator_with_action().order(), 5);
        let s = c5sq_sign(&[vec![1, 0], vec![0, -1]]);
        let expect: Vec<usize> = (0..5).map(|y| elementary_index(&[0, y], 5)).collect();
        assert_eq!(s.commutator_with_action().elements(), expect.as_slice());
    }

    #[test]
    fn coprime_report_for_inversion() {
        let r = verify_coprime_facts(&c5_inversion(), 512).unwrap();
        assert_eq!(r.checks.len(), 5);
        for name in [
            "i_generation",
            "ii_commutator_stable",
            "iii_invariant_sylow",
            "iv_quotient_centralizer",
        ] {
            assert!(r.check(name).unwrap().is_pass(), "{name}");
        }
        assert!(!r.any_fail());
    }

    #[test]
    fn klein_four_scalings_cover() {
        let g = catalog::elementary_abelian(5, 2).unwrap();
        let a = catalog::elementary_abelian(2, 2).unwrap();
        // A index 2 = (1,0), index 1 = (0,1)
        let d1 = elementary_matrix_perm(5, 2, &[vec![-1, 0], vec![0, 1]]).unwrap();
        let d2 = elementary_matrix_perm(5, 2, &[vec![1, 0], vec![0, -1]]).unwrap();
        let s = ActionSetup::from_generators(a, g, &[(2, d1), (1, d2)]).unwrap();
        let r = verify_coprime_facts(&s, 512).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn non_coprime_is_refused() {
        let g = catalog::cyclic(2).unwrap();
        let s = ActionSetup::trivial(catalog::cyclic(2).unwrap(), g);
        assert!(matches!(
            verify_coprime_facts(&s, 512),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn non_homomorphic_generators_rejected() {
        // C4 generator sent to an involution of C5 would need rep(1)^4 = id: fine.
        // C2 generator sent to x -> 2x (order 4) is inconsistent.
        let g = catalog::cyclic(5).unwrap();
        let dbl: Vec<usize> = (0..5).map(|x| 2 * x % 5).collect();
        let r = ActionSetup::from_generators(catalog::cyclic(2).unwrap(), g, &[(1, dbl)]);
        assert!(matches!(r, Err(Error::ActionNotHomomorphic(..))));
    }

    #[test]
    fn quotient_action_is_well_defined() {
        let s = c5sq_sign(&[vec![-1, 0], vec![0, -1]]);
        let n = s.fixed_points(&[0]).clone();
        let (qs, _) = s.on_quotient(&s.target().trivial()).unwrap();
        assert_eq!(qs.target().order(), 25);
        assert_eq!(n.order(), 25);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]
            #[test]
            fn fixed_points_antitone(a in 0usize..4, b in 0usize..4) {
                let g = catalog::elementary_abelian(5, 2).unwrap();
                let act = catalog::cyclic(4).unwrap();
                let m = elementary_matrix_perm(5, 2, &[vec![2, 0], vec![0, 1]]).unwrap();
                let s = ActionSetup::from_generators(act, g, &[(1, m)]).unwrap();
                let small = s.fixed_points(&[a]);
                let big = s.fixed_points(&[a, b]);
                prop_assert!(big.is_subgroup_of(&small));
            }
        }
    }
}
