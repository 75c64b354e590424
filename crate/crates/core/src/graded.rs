//! `Z/pZ`-gradings by eigenspaces of an automorphism of order `p`, the two-condition
//! nilpotency criterion, and the decomposition checks for Frobenius group actions.

use serde::{Deserialize, Serialize};

use crate::actions::ActionSetup;
use crate::arith::mult_order_mod;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec, Gf};
use crate::group::catalog::{elementary_abelian, elementary_coordinates};
use crate::group::{extend_from_generators, Subgroup};
use crate::lie::{fixed_space, LieAutomorphism, LieRing};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::{CheckRecord, Phase, ScenarioReport};
use crate::structure::{choose_z, FrobeniusStructure};

/// `L = L_0 ⊕ ... ⊕ L_{p-1}` with `L_i = {x : φ x = ω^i x}`.
#[derive(Clone, Debug)]
pub struct Grading {
    ring: LieRing,
    p: u64,
    omega: Elem,
    phi: LieAutomorphism,
    components: Vec<Subspace>,
}

pub fn eigenspace_grading(l: &LieRing, phi: &LieAutomorphism, p: u64) -> Result<Grading> {
    let f = l.field();
    let n = l.dim();
    if !phi.matrix().pow(p).is_identity() {
        return Err(Error::OrderMismatch(p));
    }
    let omega = f.root_of_unity(p).ok_or(Error::NoRootOfUnity(p))?;
    let id = Matrix::identity(f, n);
    let components: Vec<Subspace> = (0..p)
        .map(|i| {
            let shifted = phi.matrix().sub(&id.scale(f.pow(omega, i)));
            Subspace::span(f, n, shifted.kernel())
        })
        .collect();
    let total: usize = components.iter().map(|c| c.dim()).sum();
    if total != n {
        return Err(Error::Internal(format!(
            "eigenspaces have total dimension {total}, expected {n}"
        )));
    }
    let g = Grading {
        ring: l.clone(),
        p,
        omega,
        phi: phi.clone(),
        components,
    };
    if let Some((i, j)) = g.grading_violation() {
        return Err(Error::Internal(format!(
            "[L_{i}, L_{j}] is not in L_{}",
            (i + j) % p as usize
        )));
    }
    Ok(g)
}

impl Grading {
    pub fn ring(&self) -> &LieRing {
        &self.ring
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn omega(&self) -> Elem {
        self.omega
    }

    pub fn phi(&self) -> &LieAutomorphism {
        &self.phi
    }

    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    /// `L_{i mod p}`
    pub fn component(&self, i: u64) -> &Subspace {
        &self.components[(i % self.p) as usize]
    }

    /// Whether every pair of components meets only in zero and the sum is direct.
    pub fn is_direct_sum(&self) -> bool {
        let total: usize = self.components.iter().map(|c| c.dim()).sum();
        let sum = Subspace::sum_all(self.ring.field(), self.ring.dim(), &self.components);
        let pairwise = (0..self.components.len()).all(|i| {
            (i + 1..self.components.len())
                .all(|j| self.components[i].intersect(&self.components[j]).is_zero())
        });
        total == self.ring.dim() && sum.dim() == total && pairwise
    }

    /// First `(i, j)` with `[L_i, L_j] ⊄ L_{i+j}`.
    pub fn grading_violation(&self) -> Option<(usize, usize)> {
        let p = self.p as usize;
        for i in 0..p {
            for j in i..p {
                let b = self
                    .ring
                    .bracket_spaces(&self.components[i], &self.components[j]);
                if !b.is_subspace_of(&self.components[(i + j) % p]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Whether each component is exactly the `ω^i`-eigenspace of `φ`.
    pub fn eigen_condition_holds(&self) -> bool {
        let f = self.ring.field();
        self.components.iter().enumerate().all(|(i, c)| {
            let w = f.pow(self.omega, i as u64);
            c.basis()
                .iter()
                .all(|b| self.phi.apply(b) == b.iter().map(|&x| f.mul(w, x)).collect::<Vector>())
        })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim()).collect()
    }

    pub fn to_file(&self) -> GradingFile {
        GradingFile {
            field: self.ring.field().spec(),
            p: self.p,
            omega: self.omega,
            components: self.components.iter().map(|c| c.basis().to_vec()).collect(),
        }
    }
}

/// Serializable grading: field, `ω`, and the echelon basis of each component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingFile {
    pub field: FieldSpec,
    pub p: u64,
    pub omega: Elem,
    pub components: Vec<Vec<Vector>>,
}

/// `[L, L_0, ..., L_0] = 0` with `u` copies of `L_0`.
pub fn check_condition_1(g: &Grading, u: usize) -> bool {
    g.ring
        .iterated_bracket(&g.ring.full(), g.component(0), u)
        .is_zero()
}

/// `[[L,L] ∩ L_0, L_a, ..., L_a] = 0` with `v` copies, for every residue `a`.
pub fn check_condition_2(g: &Grading, v: usize) -> bool {
    let full = g.ring.full();
    let d = g
        .ring
        .bracket_spaces(&full, &full)
        .intersect(g.component(0));
    (0..g.p).all(|a| g.ring.iterated_bracket(&d, g.component(a), v).is_zero())
}

/// Default scan cap `2 dim + 2`.
pub fn default_scan_cap(g: &Grading) -> usize {
    2 * g.ring.dim() + 2
}

/// Scans for minimal `u` and `v` up to `cap` and checks that both conditions together
/// force nilpotency. Conditions not established under the cap produce abstentions.
pub fn criterion_report(g: &Grading, cap: usize) -> ScenarioReport {
    let mut r = ScenarioReport::new("grading_criterion", "");
    let u = (0..=cap).find(|&u| check_condition_1(g, u));
    let v = (0..=cap).find(|&v| check_condition_2(g, v));
    let class = g.ring.class().ok();
    r.push(
        match u {
            Some(u) => CheckRecord::pass("condition_1").with("u", u),
            None => CheckRecord::abstain("condition_1", format!("not established for u <= {cap}")),
        }
        .phase(Phase::Hypothesis),
    );
    r.push(
        match v {
            Some(v) => CheckRecord::pass("condition_2").with("v", v),
            None => CheckRecord::abstain("condition_2", format!("not established for v <= {cap}")),
        }
        .phase(Phase::Hypothesis),
    );
    let record = if u.is_some() && v.is_some() {
        CheckRecord::from_bool("nilpotent", class.is_some(), || {
            "both conditions hold but the lower central series stabilizes above zero".into()
        })
    } else {
        CheckRecord::skipped("nilpotent", "conditions not established under the scan cap")
    };
    let mut record = record
        .phase(Phase::Conclusion)
        .with("p", g.p)
        .with("dims", g.dims());
    record = match class {
        Some(c) => record.with("class", c),
        None => record.with("class", serde_json::Value::Null),
    };
    if let Some(dl) = g.ring.derived_length() {
        record = record.with("derived_length", dl);
    }
    r.push(record);
    r
}

/// A Frobenius group `FH` with cyclic `H` acting linearly on `L`, graded by a
/// generator `φ` of a subgroup `Z ≤ F` of order `p` normal in `FH`.
#[derive(Clone, Debug)]
pub struct FrobeniusLieAction {
    grading: Grading,
    fs: FrobeniusStructure,
    mats: Vec<Matrix>,
    z: Subgroup,
    phi: usize,
    h: usize,
    r: u64,
    q_h: usize,
}

impl FrobeniusLieAction {
    /// Extends matrices on generators of `FH` to a representation, then derives `Z`,
    /// `φ`, `h` and `r` with `h^-1 φ h = φ^r`.
    pub fn from_generators(
        l: &LieRing,
        fs: FrobeniusStructure,
        gens: &[(usize, Matrix)],
        p: u64,
    ) -> Result<Self> {
        for (x, m) in gens {
            LieAutomorphism::new(l, m.clone())
                .map_err(|e| Error::InvalidSpec(format!("generator {x}: {e}")))?;
        }
        let id = Matrix::identity(l.field(), l.dim());
        let mats = extend_from_generators(fs.whole(), gens, id, |a, b| a.mul(b))?;
        Self::new(l, fs, mats, p)
    }

    pub fn new(l: &LieRing, fs: FrobeniusStructure, mats: Vec<Matrix>, p: u64) -> Result<Self> {
        let whole = fs.whole();
        if mats.len() != whole.order() {
            return Err(Error::InvalidSpec(
                "one matrix per element of FH is required".into(),
            ));
        }
        for s in whole.generating_set() {
            for x in 0..whole.order() {
                if mats[whole.mul(x, s)] != mats[x].mul(&mats[s]) {
                    return Err(Error::ActionNotHomomorphic(x, s));
                }
            }
        }
        let q_h = fs.complement().order();
        let h = fs
            .complement()
            .elements()
            .iter()
            .copied()
            .find(|&x| whole.element_order(x) == q_h)
            .ok_or_else(|| Error::HypothesisFail("the complement is not cyclic".into()))?;
        let z = choose_z(&fs, p)?;
        let phi = z.elements()[1];
        let conj = whole.conj(phi, h);
        let r = (1..p)
            .find(|&r| whole.pow(phi, r as i64) == conj)
            .ok_or_else(|| Error::Internal("h does not normalize Z".into()))?;
        if mult_order_mod(r, p) != Some(q_h as u64) {
            return Err(Error::HypothesisFail(format!(
                "r = {r} is not a primitive {q_h}-th root of unity mod {p}"
            )));
        }
        let phi_auto = LieAutomorphism::new(l, mats[phi].clone())?;
        let grading = eigenspace_grading(l, &phi_auto, p)?;
        Ok(FrobeniusLieAction {
            grading,
            fs,
            mats,
            z,
            phi,
            h,
            r,
            q_h,
        })
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn ring(&self) -> &LieRing {
        &self.grading.ring
    }

    pub fn frobenius(&self) -> &FrobeniusStructure {
        &self.fs
    }

    pub fn z(&self) -> &Subgroup {
        &self.z
    }

    pub fn phi_element(&self) -> usize {
        self.phi
    }

    pub fn h_element(&self) -> usize {
        self.h
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn q_h(&self) -> usize {
        self.q_h
    }

    pub fn matrix(&self, x: usize) -> &Matrix {
        &self.mats[x]
    }

    /// `C_L(S)` for a set of elements of `FH`.
    pub fn centralizer(&self, elements: &[usize]) -> Subspace {
        let maps: Vec<Matrix> = elements.iter().map(|&x| self.mats[x].clone()).collect();
        fixed_space(self.ring().field(), self.ring().dim(), &maps)
    }

    /// `h^f = f^-1 h f` maps `L_i` onto `L_{r i}` for every `f ∈ F`.
    pub fn check_component_permutation(&self) -> CheckRecord {
        let whole = self.fs.whole();
        for &f in self.fs.kernel().elements() {
            let hf = whole.conj(self.h, f);
            for i in 0..self.grading.p {
                let img = self.grading.component(i).image(&self.mats[hf]);
                if img != *self.grading.component(self.r * i) {
                    return CheckRecord::fail(
                        "component_permutation",
                        format!(
                            "h^f with f = {f} maps L_{i} elsewhere than L_{}",
                            (self.r * i) % self.grading.p
                        ),
                    );
                }
            }
        }
        CheckRecord::pass("component_permutation")
            .with("r", self.r)
            .with("q_h", self.q_h)
    }
}

/// `T = span{x + h x + ... + h^{q-1} x : x ∈ L_a}`. Asserts that `T` is fixed by `h`.
pub fn fixed_point_span_t(fa: &FrobeniusLieAction, a: u64) -> Result<Subspace> {
    if a % fa.grading.p == 0 {
        return Err(Error::ZeroResidue);
    }
    let l = fa.ring();
    let f = l.field();
    let whole = fa.fs.whole();
    let powers: Vec<usize> = (0..fa.q_h).map(|k| whole.pow(fa.h, k as i64)).collect();
    let sums = fa.grading.component(a).basis().iter().map(|x| {
        let mut acc = vec![0; l.dim()];
        for &hk in &powers {
            crate::linalg::axpy(f, &mut acc, 1, &fa.mats[hk].apply(x));
        }
        acc
    });
    let t = Subspace::span(f, l.dim(), sums);
    let id = Matrix::identity(f, l.dim());
    let diff = fa.mats[fa.h].sub(&id);
    assert!(t.image(&diff).is_zero(), "orbit sums must be fixed by h");
    Ok(t)
}

/// Exact recovery of eigencomponents from `z, α z, ..., α^{m-1} z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoveryCertificate {
    pub exponents: Vec<u64>,
    pub z: Vector,
    /// `y_s = Σ_j coefficients[s][j] α^j z`
    pub coefficients: Vec<Vec<Elem>>,
    pub recovered: Vec<Vector>,
    pub exact: bool,
}

/// Solves the Vandermonde system `α^j z = Σ_i ω^{t_i j} y_{t_i}` for the `y_{t_i}`.
pub fn vandermonde_recover(
    components: &[(u64, Vector)],
    alpha: &Matrix,
    omega: Elem,
) -> Result<RecoveryCertificate> {
    let f = alpha.field().clone();
    let n = alpha.rows();
    let m = components.len();
    let order = f.order(omega).ok_or(Error::NoRootOfUnity(0))?;
    for (t, y) in components {
        let expected: Vector = y.iter().map(|&c| f.mul(f.pow(omega, *t), c)).collect();
        if alpha.apply(y) != expected {
            return Err(Error::HypothesisFail(format!(
                "component with exponent {t} is not an eigenvector"
            )));
        }
    }
    let exps: Vec<u64> = components.iter().map(|(t, _)| t % order).collect();
    for i in 0..m {
        if exps[i + 1..].contains(&exps[i]) {
            return Err(Error::SingularSystem);
        }
    }
    let mut z = vec![0; n];
    for (_, y) in components {
        crate::linalg::axpy(&f, &mut z, 1, y);
    }
    // V[j][i] = ω^{t_i j}
    let rows: Vec<Vector> = (0..m)
        .map(|j| exps.iter().map(|&t| f.pow(omega, t * j as u64)).collect())
        .collect();
    let v = Matrix::from_rows(&f, &rows);
    let vinv = v.inverse().ok_or(Error::SingularSystem)?;
    let mut powers = Vec::with_capacity(m);
    let mut cur = z.clone();
    for _ in 0..m {
        powers.push(cur.clone());
        cur = alpha.apply(&cur);
    }
    let coefficients: Vec<Vec<Elem>> = (0..m).map(|s| vinv.row(s).to_vec()).collect();
    let recovered: Vec<Vector> = coefficients
        .iter()
        .map(|coef| {
            let mut acc = vec![0; n];
            for (c, w) in coef.iter().zip(&powers) {
                crate::linalg::axpy(&f, &mut acc, *c, w);
            }
            acc
        })
        .collect();
    let exact = recovered.iter().zip(components).all(|(r, (_, y))| r == y);
    Ok(RecoveryCertificate {
        exponents: exps,
        z,
        coefficients,
        recovered,
        exact,
    })
}

/// Checks `L_0 = C_L(F) + Σ_{f ∈ F} V_f` with `V_f = C_L(Z H^f)`, deduplicating equal `V_f`.
pub fn verify_l0_decomposition(fa: &FrobeniusLieAction) -> ScenarioReport {
    let mut r = ScenarioReport::new("decomposition_L0", "");
    let l = fa.ring();
    let whole = fa.fs.whole();
    let l0 = fa.grading.component(0).clone();
    let cz = fa.centralizer(fa.z.elements());
    r.push(CheckRecord::from_bool(
        "l0_is_centralizer_of_z",
        cz == l0,
        || format!("dim L_0 = {} but dim C_L(Z) = {}", l0.dim(), cz.dim()),
    ));
    let cf = fa.centralizer(fa.fs.kernel().elements());
    let mut vfs: Vec<Subspace> = Vec::new();
    for &f in fa.fs.kernel().elements() {
        let hf = whole.conj(fa.h, f);
        let vf = fa.centralizer(&[fa.phi, hf]);
        if !vfs.contains(&vf) {
            vfs.push(vf);
        }
    }
    let sum = Subspace::sum_all(l.field(), l.dim(), vfs.iter().chain([&cf]));
    let vf_dims: Vec<usize> = vfs.iter().map(|v| v.dim()).collect();
    r.push(
        CheckRecord::from_bool("l0_decomposition", sum == l0, || {
            format!(
                "dim L_0 = {} but dim (C_L(F) + sum V_f) = {}",
                l0.dim(),
                sum.dim()
            )
        })
        .with("dim_l0", l0.dim())
        .with("dim_cf", cf.dim())
        .with("distinct_vf", vfs.len())
        .with("vf_dims", vf_dims),
    );
    r
}

fn kernel_is_elementary_rank2(fa: &FrobeniusLieAction) -> bool {
    let whole = fa.fs.whole();
    let k = fa.fs.kernel();
    let p = fa.grading.p as usize;
    k.order() == p * p
        && whole.is_abelian_subgroup(k)
        && k.elements().iter().all(|&x| whole.pow(x, p as i64) == 0)
}

/// Covering `L = Σ_{x ∈ F^#} C_L(x)` and `[L, C_L(F), ..., C_L(F)] = 0` with `d` copies,
/// given that every `C_L(x)` has class at most `d`.
pub fn verify_cf_vanishing(fa: &FrobeniusLieAction, d: usize) -> Result<ScenarioReport> {
    if !kernel_is_elementary_rank2(fa) {
        return Err(Error::HypothesisFail(
            "the kernel is not elementary abelian of order p^2".into(),
        ));
    }
    let l = fa.ring();
    let mut cents = Vec::new();
    let mut classes = Vec::new();
    for x in fa.fs.kernel().nonidentity() {
        let c = fa.centralizer(&[x]);
        let class = l
            .subalgebra_class(&c)
            .map_err(|_| Error::HypothesisFail(format!("C_L(x) for x = {x} is not nilpotent")))?;
        if class > d {
            return Err(Error::HypothesisFail(format!(
                "C_L(x) for x = {x} has class {class} > {d}"
            )));
        }
        classes.push(class);
        cents.push(c);
    }
    let mut r = ScenarioReport::new("cf_vanishing", "");
    let cover = Subspace::sum_all(l.field(), l.dim(), &cents);
    r.push(CheckRecord::from_bool(
        "covering_sum",
        cover.dim() == l.dim(),
        || format!("sum of C_L(x) has dimension {} < {}", cover.dim(), l.dim()),
    ));
    let cf = fa.centralizer(fa.fs.kernel().elements());
    let van = l.iterated_bracket(&l.full(), &cf, d);
    r.push(
        CheckRecord::from_bool("cf_vanishing", van.is_zero(), || {
            format!("[L, C_L(F) x{d}] has dimension {}", van.dim())
        })
        .with("d", d)
        .with(
            "max_centralizer_class",
            classes.iter().copied().max().unwrap_or(0),
        ),
    );
    Ok(r)
}

/// Measured `c = class C_L(H)` and `d = max class C_L(x)` over `x ∈ F^#`.
pub fn measured_classes(fa: &FrobeniusLieAction) -> Result<(usize, usize)> {
    let l = fa.ring();
    let c = l.subalgebra_class(&fa.centralizer(fa.fs.complement().elements()))?;
    let mut d = 0;
    for x in fa.fs.kernel().nonidentity() {
        d = d.max(l.subalgebra_class(&fa.centralizer(&[x]))?);
    }
    Ok((c, d))
}

/// The quantities behind condition (2) for metabelian `L`: `L'_F`, `V'`, the orbit-sum
/// spans `T` and their `φ`-translates, with `v = (c-1)q + 1` and `k(d-1) + 1`.
pub fn metabelian_report(fa: &FrobeniusLieAction) -> ScenarioReport {
    let mut r = ScenarioReport::new("metabelian_quantities", "");
    let l = fa.ring();
    let f = l.field();
    let metabelian = l.derived_length().is_some_and(|dl| dl <= 2);
    if !metabelian {
        r.push(
            CheckRecord::not_applicable("metabelian", "derived length exceeds 2")
                .phase(Phase::Hypothesis),
        );
        return r;
    }
    let (c, d) = match measured_classes(fa) {
        Ok(cd) => cd,
        Err(e) => {
            r.push(
                CheckRecord::not_applicable("centralizers_nilpotent", e.to_string())
                    .phase(Phase::Hypothesis),
            );
            return r;
        }
    };
    r.push(
        CheckRecord::pass("metabelian")
            .phase(Phase::Hypothesis)
            .with("c", c)
            .with("d", d),
    );
    let c_eff = c.max(1);
    let d_eff = d.max(1);
    let q = fa.q_h;
    let v = (c_eff - 1) * q + 1;
    let k = fa.fs.kernel().order() - fa.z.order();
    let t_len = k * (d_eff - 1) + 1;
    let full = l.full();
    let derived = l.bracket_spaces(&full, &full);
    let cf = fa.centralizer(fa.fs.kernel().elements());
    let l_prime_f = derived.intersect(&cf);
    let vz = fa.centralizer(&[fa.phi, fa.h]);
    let v_prime = derived.intersect(&vz);
    let phi_m = fa.matrix(fa.phi);
    let mut failures = Vec::new();
    let mut covers = true;
    for a in 1..fa.grading.p {
        let la = fa.grading.component(a);
        if la.is_zero() {
            continue;
        }
        let t = fixed_point_span_t(fa, a).expect("a is nonzero");
        let mut translates = Vec::new();
        let mut cur = t.clone();
        for _ in 0..q {
            translates.push(cur.clone());
            cur = cur.image(phi_m);
        }
        let sum = Subspace::sum_all(f, l.dim(), &translates);
        if !la.is_subspace_of(&sum) {
            covers = false;
            failures.push(format!("L_{a} not covered by the phi-translates of T"));
        }
        if !l.iterated_bracket(&v_prime, &t, c_eff).is_zero() {
            failures.push(format!("[V', T x{c_eff}] != 0 for a = {a}"));
        }
        if !l.iterated_bracket(&v_prime, la, v).is_zero() {
            failures.push(format!("[V', L_{a} x{v}] != 0"));
        }
        if !l.iterated_bracket(&l_prime_f, la, t_len).is_zero() {
            failures.push(format!("[L'_F, L_{a} x{t_len}] != 0"));
        }
    }
    r.push(
        CheckRecord::from_bool("t_translates_cover", covers, || failures.join("; "))
            .phase(Phase::Conclusion)
            .with("dim_l_prime_f", l_prime_f.dim())
            .with("dim_v_prime", v_prime.dim()),
    );
    r.push(
        CheckRecord::from_bool("metabelian_vanishing", failures.is_empty(), || {
            failures.join("; ")
        })
        .phase(Phase::Conclusion)
        .with("v", v)
        .with("k_d_bound", t_len),
    );
    r
}

/// Generation of `N` by the `C_N(B^y)`, `y ∈ K`, for a Frobenius group `KB` acting with
/// `C_N(K) = 1`. For `N ≅ C_p^2` in its natural labeling the spanning determinant of
/// `v` and `y_1 · v` is reported, where `v` is the least nonzero element of `C_N(B)` and
/// `y_1` the least nonidentity element of `K`.
pub fn frobenius_generation_check(
    action: &ActionSetup,
    kb: &FrobeniusStructure,
) -> Result<ScenarioReport> {
    let n = action.target();
    let whole = kb.whole();
    if action.actor().order() != whole.order() {
        return Err(Error::InvalidSpec(
            "the action must be by the Frobenius group".into(),
        ));
    }
    let cnk = action.fixed_points(kb.kernel().elements());
    if !cnk.is_trivial() {
        return Err(Error::HypothesisFail(format!(
            "C_N(K) has order {}",
            cnk.order()
        )));
    }
    let mut r = ScenarioReport::new("frobenius_generation", n.name());
    r.push(CheckRecord::pass("kernel_fixed_point_free").phase(Phase::Hypothesis));
    let mut parts = Vec::new();
    for &y in kb.kernel().elements() {
        let by: Vec<usize> = kb
            .complement()
            .elements()
            .iter()
            .map(|&b| whole.conj(b, y))
            .collect();
        parts.push(action.fixed_points(&by));
    }
    let joined = n.join_all(parts.iter());
    let mut rec = CheckRecord::from_bool("generation", joined.order() == n.order(), || {
        format!(
            "the C_N(B^y) generate a subgroup of order {} < {}",
            joined.order(),
            n.order()
        )
    })
    .phase(Phase::Conclusion)
    .with(
        "centralizer_orders",
        parts.iter().map(|p| p.order()).collect::<Vec<_>>(),
    );
    if let Some((p, det, rows)) = spanning_determinant(action, kb) {
        rec = rec
            .with("spanning_vectors", rows)
            .with("spanning_determinant", det)
            .with("prime", p);
    }
    r.push(rec);
    Ok(r)
}

fn spanning_determinant(
    action: &ActionSetup,
    kb: &FrobeniusStructure,
) -> Option<(u64, Elem, Vec<Vec<u64>>)> {
    let n = action.target();
    let (p, k) = crate::arith::prime_power(n.order() as u64)?;
    if k != 2 || elementary_abelian(p, 2).ok()?.rows() != n.rows() {
        return None;
    }
    let cb = action.fixed_points(kb.complement().elements());
    let v = *cb.elements().get(1)?;
    let y1 = *kb.kernel().elements().get(1)?;
    let w = action.act(y1, v);
    let rows = vec![
        elementary_coordinates(v, p, 2),
        elementary_coordinates(w, p, 2),
    ];
    let f = Gf::prime(p as u32).ok()?;
    let m = Matrix::from_ints(
        &f,
        &rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect::<Vec<_>>(),
    );
    Some((p, m.determinant(), rows))
}
