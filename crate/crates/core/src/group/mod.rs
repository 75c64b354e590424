//! Finite groups as validated Cayley tables.
//!
//! Elements are indices `0..order` with the identity fixed at `0`. Subgroups are
//! sorted index sets together with a generating set recorded at construction.

pub mod catalog;
pub mod io;
mod series;

use std::collections::BTreeSet;

use crate::arith::{lcm, p_part, prime_divisors, prime_power};
use crate::error::{Error, Result};

pub use series::DEFAULT_FITTING_CAP;

/// Default hard cap on the order of a constructed group.
pub const DEFAULT_ORDER_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
}

/// A homomorphism recorded by its image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source_order: usize,
    target_order: usize,
    images: Vec<usize>,
}

/// Validate a square table as a group operation.
///
/// The identity is relabeled to index 0 by swapping it with the element
/// currently labeled 0.
pub fn validate_group(rows: &[Vec<usize>]) -> Result<FiniteGroup> {
    validate_group_with_relabel(rows).map(|(g, _)| g)
}

/// Like [`validate_group`], also returning the relabeling `old index -> new index`.
pub fn validate_group_with_relabel(rows: &[Vec<usize>]) -> Result<(FiniteGroup, Vec<usize>)> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::InvalidTable("empty table".into()));
    }
    if n > u32::MAX as usize {
        return Err(Error::TooLarge {
            size: n,
            cap: u32::MAX as usize,
        });
    }
    for (i, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::InvalidTable(format!(
                "row {i} has {} entries, expected {n}",
                r.len()
            )));
        }
        if let Some(&bad) = r.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidTable(format!(
                "entry {bad} in row {i} out of range"
            )));
        }
    }
    let m = |a: usize, b: usize| rows[a][b];
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
        .ok_or(Error::NoIdentity)?;
    check_associative(n, &m, identity)?;
    let mut inverses = vec![usize::MAX; n];
    for x in 0..n {
        let y = (0..n)
            .find(|&y| m(x, y) == identity && m(y, x) == identity)
            .ok_or(Error::NoInverse(x))?;
        inverses[x] = y;
    }
    let relabel: Vec<usize> = (0..n)
        .map(|x| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        })
        .collect();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[relabel[a] * n + relabel[b]] = relabel[m(a, b)] as u32;
        }
    }
    let mut inv = vec![0u32; n];
    for x in 0..n {
        inv[relabel[x]] = relabel[inverses[x]] as u32;
    }
    Ok((
        FiniteGroup {
            order: n,
            table,
            inverses: inv,
            name: String::new(),
        },
        relabel,
    ))
}

/// Light's associativity test over a set whose left-normed products reach every
/// element. Returns a violating triple `(x, y, z)` with `(xy)z != x(yz)`.
fn check_associative(n: usize, m: &impl Fn(usize, usize) -> usize, identity: usize) -> Result<()> {
    let mut reached = vec![false; n];
    reached[identity] = true;
    let mut elems = vec![identity];
    let mut gens: Vec<usize> = Vec::new();
    for cand in 0..n {
        if reached[cand] {
            continue;
        }
        gens.push(cand);
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in &gens {
                let y = m(x, s);
                if !reached[y] {
                    reached[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
    }
    for &s in &gens {
        for x in 0..n {
            let xs = m(x, s);
            for y in 0..n {
                if m(xs, y) != m(x, m(s, y)) {
                    return Err(Error::NotAssociative(x, s, y));
                }
            }
        }
    }
    Ok(())
}

struct ClosureBuilder<'a> {
    group: &'a FiniteGroup,
    member: Vec<bool>,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl<'a> ClosureBuilder<'a> {
    fn new(group: &'a FiniteGroup) -> Self {
        let mut member = vec![false; group.order];
        member[0] = true;
        ClosureBuilder {
            group,
            member,
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    fn from_subgroup(group: &'a FiniteGroup, h: &Subgroup) -> Self {
        let mut member = vec![false; group.order];
        for &x in &h.elements {
            member[x] = true;
        }
        ClosureBuilder {
            group,
            member,
            elements: h.elements.clone(),
            generators: h.generators.clone(),
        }
    }

    /// Adds `x` as a generator if it is not already contained. Returns whether the closure grew.
    fn add(&mut self, x: usize) -> bool {
        if self.member[x] {
            return false;
        }
        self.generators.push(x);
        let mut i = 0;
        while i < self.elements.len() {
            let e = self.elements[i];
            for &g in &self.generators {
                let y = self.group.mul(e, g);
                if !self.member[y] {
                    self.member[y] = true;
                    self.elements.push(y);
                }
            }
            i += 1;
        }
        true
    }

    fn finish(mut self) -> Subgroup {
        self.elements.sort_unstable();
        Subgroup {
            elements: self.elements,
            generators: self.generators,
        }
    }
}

impl FiniteGroup {
    /// Builds a group from a closure, validating exhaustively.
    pub fn from_fn(order: usize, name: &str, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|a| (0..order).map(|b| mul(a, b)).collect())
            .collect();
        let (g, relabel) = validate_group_with_relabel(&rows)?;
        if relabel[0] != 0 {
            return Err(Error::InvalidSpec(
                "constructor must place the identity at index 0".into(),
            ));
        }
        Ok(g.with_name(name))
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&x| x as usize)
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut result = 0;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        result
    }

    /// `[a, b] = a^-1 b^-1 a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `x^g = g^-1 x g`
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1u64, |acc, x| lcm(acc, self.element_order(x) as u64)) as usize
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `Some(q)` when the order is a power of the prime `q`.
    pub fn prime_power_order(&self) -> Option<(u64, u32)> {
        prime_power(self.order as u64)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        self.order == 1 || self.prime_power_order().map(|(q, _)| q) == Some(p)
    }

    pub fn whole(&self) -> Subgroup {
        self.subgroup_generated(&self.generating_set())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup {
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    /// Greedy generating set: scan indices in increasing order, keep those not yet generated.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut b = ClosureBuilder::new(self);
        for x in 1..self.order {
            b.add(x);
            if b.elements.len() == self.order {
                break;
            }
        }
        b.generators
    }

    /// Smallest subgroup containing `set`.
    pub fn subgroup_generated(&self, set: &[usize]) -> Subgroup {
        let mut sorted: Vec<usize> = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut b = ClosureBuilder::new(self);
        for x in sorted {
            b.add(x);
        }
        b.finish()
    }

    /// Subgroup from an element list already known to be closed. Returns `None` otherwise.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Option<Subgroup> {
        let h = self.subgroup_generated(elements);
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        (h.elements == sorted).then_some(h)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut builder = ClosureBuilder::from_subgroup(self, a);
        for &g in &b.generators {
            builder.add(g);
        }
        builder.finish()
    }

    pub fn join_all<'s>(&self, subgroups: impl IntoIterator<Item = &'s Subgroup>) -> Subgroup {
        let mut builder = ClosureBuilder::new(self);
        for s in subgroups {
            for &g in &s.generators {
                builder.add(g);
            }
        }
        builder.finish()
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let common: Vec<usize> = a
            .elements
            .iter()
            .copied()
            .filter(|&x| b.contains(x))
            .collect();
        self.subgroup_generated(&common)
    }

    /// Closure of `set` under products and conjugation by `conjugators`.
    fn conjugation_closure(&self, set: &[usize], conjugators: &[usize]) -> Subgroup {
        let mut b = ClosureBuilder::new(self);
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        for x in sorted {
            b.add(x);
        }
        loop {
            let mut grew = false;
            let gens = b.generators.clone();
            for &h in &gens {
                for &g in conjugators {
                    grew |= b.add(self.conj(h, g));
                }
            }
            if !grew {
                break;
            }
        }
        b.finish()
    }

    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &[usize]) -> Subgroup {
        self.conjugation_closure(set, &self.generating_set())
    }

    /// `[H, K]`, generated by commutators of generators and closed under conjugation by both.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut comms = Vec::new();
        for &a in &h.generators {
            for &b in &k.generators {
                comms.push(self.commutator(a, b));
            }
        }
        let conjugators: Vec<usize> = h.generators.iter().chain(&k.generators).copied().collect();
        self.conjugation_closure(&comms, &conjugators)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let g = self.whole();
        self.commutator_subgroup(&g, &g)
    }

    /// Returns a witness `(conjugator, element)` when `h` is not normal.
    pub fn normality_witness(&self, h: &Subgroup) -> Option<(usize, usize)> {
        for g in self.generating_set() {
            for &x in &h.generators {
                if !h.contains(self.conj(x, g)) {
                    return Some((g, x));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normality_witness(h).is_none()
    }

    pub fn is_normalized_by(&self, h: &Subgroup, g: usize) -> bool {
        h.generators.iter().all(|&x| h.contains(self.conj(x, g)))
    }

    pub fn centralizer(&self, set: &[usize]) -> Subgroup {
        let els: Vec<usize> = (0..self.order)
            .filter(|&g| set.iter().all(|&s| self.mul(g, s) == self.mul(s, g)))
            .collect();
        self.subgroup_generated(&els)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.generating_set())
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let els: Vec<usize> = (0..self.order)
            .filter(|&g| self.is_normalized_by(h, g))
            .collect();
        self.subgroup_generated(&els)
    }

    /// `g^-1 H g`
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let gens: Vec<usize> = h.generators.iter().map(|&x| self.conj(x, g)).collect();
        self.subgroup_generated(&gens)
    }

    /// `A B = {ab}` as a membership vector.
    pub fn set_product(&self, a: &[usize], b: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        for &x in a {
            for &y in b {
                member[self.mul(x, y)] = true;
            }
        }
        member
    }

    /// The subgroup viewed as a group in its own right; element `i` of the result is
    /// `h.elements()[i]`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let n = h.order();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in h.elements.iter().enumerate() {
            pos[x] = i;
        }
        let mut table = vec![0u32; n * n];
        for (i, &a) in h.elements.iter().enumerate() {
            for (j, &b) in h.elements.iter().enumerate() {
                table[i * n + j] = pos[self.mul(a, b)] as u32;
            }
        }
        let inverses = h
            .elements
            .iter()
            .map(|&a| pos[self.inv(a)] as u32)
            .collect();
        FiniteGroup {
            order: n,
            table,
            inverses,
            name: String::new(),
        }
    }

    /// Image of a subgroup of `subgroup_as_group(h)` back in this group.
    pub fn lift_subgroup(&self, h: &Subgroup, inner: &Subgroup) -> Subgroup {
        let els: Vec<usize> = inner.elements.iter().map(|&i| h.elements[i]).collect();
        self.subgroup_generated(&els)
    }

    /// Quotient by a normal subgroup, with the projection.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
        if let Some((conjugator, element)) = self.normality_witness(n) {
            return Err(Error::NotNormal {
                conjugator,
                element,
            });
        }
        let mut coset = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &x in &n.elements {
                coset[self.mul(g, x)] = id;
            }
        }
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        let mut inverses = vec![0u32; m];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                table[a * m + b] = coset[self.mul(ra, rb)] as u32;
            }
            inverses[a] = coset[self.inv(ra)] as u32;
        }
        let q = FiniteGroup {
            order: m,
            table,
            inverses,
            name: format!("{}/N", self.name),
        };
        let hom = GroupHom {
            source_order: self.order,
            target_order: m,
            images: coset,
        };
        Ok((q, hom))
    }

    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        series::lower_central_series(self)
    }

    pub fn gamma_infinity(&self) -> Subgroup {
        self.lower_central_series()
            .pop()
            .expect("series is nonempty")
    }

    /// Nilpotency class, or `None` when the group is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.lower_central_series();
        (s.last().unwrap().order() == 1).then(|| s.len() - 1)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    pub fn derived_series(&self) -> Vec<Subgroup> {
        series::derived_series(self)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    pub fn sylow_subgroup(&self, p: u64) -> Subgroup {
        series::sylow_subgroup(self, p)
    }

    /// Largest normal p-subgroup: the intersection of all Sylow p-subgroups.
    pub fn p_core(&self, p: u64) -> Subgroup {
        let sylow = self.sylow_subgroup(p);
        let mut core = sylow.clone();
        for g in 0..self.order {
            if core.order() == 1 {
                break;
            }
            let c = self.conjugate_subgroup(&sylow, g);
            core = self.intersection(&core, &c);
        }
        core
    }

    pub fn fitting_subgroup(&self, level: u8, cap: usize) -> Result<Subgroup> {
        series::fitting_subgroup(self, level, cap)
    }

    /// All normal subgroups, as joins of normal closures of single elements.
    pub fn normal_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order > cap {
            return Err(Error::TooLarge {
                size: self.order,
                cap,
            });
        }
        let mut closures: Vec<Subgroup> = Vec::new();
        let mut seen = BTreeSet::new();
        for x in 0..self.order {
            let c = self.normal_closure(&[x]);
            if seen.insert(c.elements.clone()) {
                closures.push(c);
            }
        }
        let mut found: Vec<Subgroup> = vec![self.trivial()];
        let mut all = BTreeSet::new();
        all.insert(vec![0usize]);
        let mut i = 0;
        while i < found.len() {
            let base = found[i].clone();
            for c in &closures {
                if c.elements.iter().all(|&x| base.contains(x)) {
                    continue;
                }
                let j = self.join(&base, c);
                if all.insert(j.elements.clone()) {
                    found.push(j);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements.cmp(&b.elements))
        });
        Ok(found)
    }

    /// Distinct cyclic subgroups, ordered by their smallest generator.
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for x in 0..self.order {
            let c = self.subgroup_generated(&[x]);
            if seen.insert(c.elements.clone()) {
                out.push(c);
            }
        }
        out
    }

    pub fn primes(&self) -> Vec<u64> {
        prime_divisors(self.order as u64)
    }

    /// Order of the Sylow p-subgroup.
    pub fn sylow_order(&self, p: u64) -> usize {
        p_part(self.order as u64, p) as usize
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|x| self.element_order(x) == self.order)
    }

    pub fn exponent_of(&self, h: &Subgroup) -> usize {
        h.elements
            .iter()
            .fold(1u64, |acc, &x| lcm(acc, self.element_order(x) as u64)) as usize
    }

    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        h.generators.iter().all(|&a| {
            h.generators
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    /// Raw rows, for serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).collect()).collect()
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// Nonidentity elements in increasing order.
    pub fn nonidentity(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().copied().filter(|&x| x != 0)
    }
}

impl GroupHom {
    /// Checks `f(x s) = f(x) f(s)` for all `x` and all `s` in a generating set of the source.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() || images.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvalidSpec("image table has the wrong shape".into()));
        }
        for s in source.generating_set() {
            for x in 0..source.order() {
                if images[source.mul(x, s)] != target.mul(images[x], images[s]) {
                    return Err(Error::ActionNotHomomorphic(x, s));
                }
            }
        }
        if images[0] != 0 {
            return Err(Error::ActionNotHomomorphic(0, 0));
        }
        Ok(GroupHom {
            source_order: source.order(),
            target_order: target.order(),
            images,
        })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    /// Image of a subgroup (assumed a subgroup of the source) in the target.
    pub fn image_of(&self, target: &FiniteGroup, h: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = h.generators.iter().map(|&x| self.images[x]).collect();
        target.subgroup_generated(&gens)
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage(&self, source: &FiniteGroup, h: &Subgroup) -> Subgroup {
        let els: Vec<usize> = (0..self.source_order)
            .filter(|&x| h.contains(self.images[x]))
            .collect();
        source.subgroup_generated(&els)
    }
}

/// Extends values on generators to a homomorphism-like map on every element by
/// breadth-first search over the Cayley graph, checking every edge for consistency.
///
/// `compose(v(x), v(s))` must give `v(x s)`. An inconsistent edge `(x, s)` yields
/// [`Error::ActionNotHomomorphic`].
pub fn extend_from_generators<T, F>(
    group: &FiniteGroup,
    gens: &[(usize, T)],
    identity: T,
    compose: F,
) -> Result<Vec<T>>
where
    T: Clone + PartialEq,
    F: Fn(&T, &T) -> T,
{
    let n = group.order();
    let mut values: Vec<Option<T>> = vec![None; n];
    values[0] = Some(identity);
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        let vx = values[x].clone().unwrap();
        for (s, vs) in gens {
            let y = group.mul(x, *s);
            let vy = compose(&vx, vs);
            match &values[y] {
                None => {
                    values[y] = Some(vy);
                    queue.push(y);
                }
                Some(existing) => {
                    if *existing != vy {
                        return Err(Error::ActionNotHomomorphic(x, *s));
                    }
                }
            }
        }
        i += 1;
    }
    if queue.len() != n {
        return Err(Error::InvalidSpec(
            "given elements do not generate the group".into(),
        ));
    }
    Ok(values.into_iter().map(|v| v.unwrap()).collect())
}

/// Composition of permutations as functions: `(f ∘ g)(x) = f(g(x))`.
pub fn compose_perms(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// Checks that `perm` is a bijective endomorphism; returns a witness pair otherwise.
pub fn check_automorphism(group: &FiniteGroup, perm: &[usize]) -> Result<()> {
    let n = group.order();
    if perm.len() != n {
        return Err(Error::InvalidSpec(
            "permutation length differs from group order".into(),
        ));
    }
    let mut seen = vec![false; n];
    for &y in perm {
        if y >= n || seen[y] {
            return Err(Error::InvalidSpec("map is not a bijection".into()));
        }
        seen[y] = true;
    }
    for s in group.generating_set() {
        for x in 0..n {
            if perm[group.mul(x, s)] != group.mul(perm[x], perm[s]) {
                return Err(Error::ActionNotAutomorphic { x, y: s });
            }
        }
    }
    if perm[0] != 0 {
        return Err(Error::ActionNotAutomorphic { x: 0, y: 0 });
    }
    Ok(())
}
