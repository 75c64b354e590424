//! Finite-dimensional Lie algebras over finite fields, given by structure constants.

use std::fmt::Write as _;

use crate::arith::{gcd, mult_order_mod};
use crate::error::{Error, Result};
use crate::field::{Elem, Gf};
use crate::linalg::{axpy, is_zero, unit_vec, zero_vec, Matrix, Subspace, Vector};

/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`, stored densely at `(i n + j) n + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieRing {
    field: Gf,
    dim: usize,
    labels: Vec<String>,
    constants: Vec<Elem>,
    weights: Option<Vec<usize>>,
}

impl LieRing {
    /// Validates antisymmetry and the Jacobi identity on all basis triples.
    pub fn new(field: &Gf, dim: usize, constants: Vec<Elem>) -> Result<Self> {
        if constants.len() != dim * dim * dim {
            return Err(Error::InvalidSpec(format!(
                "expected {} structure constants",
                dim * dim * dim
            )));
        }
        if constants.iter().any(|&c| !field.contains(c)) {
            return Err(Error::InvalidSpec(
                "structure constant outside the field".into(),
            ));
        }
        let ring = LieRing {
            field: field.clone(),
            dim,
            labels: (0..dim).map(|i| format!("e{i}")).collect(),
            constants,
            weights: None,
        };
        ring.check_antisymmetry()?;
        ring.check_jacobi()?;
        Ok(ring)
    }

    /// Builds from raw `(i, j, k, value)` entries, without filling in `[e_j, e_i]`.
    pub fn from_entries(
        field: &Gf,
        dim: usize,
        entries: &[(usize, usize, usize, Elem)],
    ) -> Result<Self> {
        let mut c = vec![0; dim * dim * dim];
        for &(i, j, k, v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidSpec(format!(
                    "index ({i},{j},{k}) out of range"
                )));
            }
            c[(i * dim + j) * dim + k] = v;
        }
        Self::new(field, dim, c)
    }

    /// Builds from brackets `[e_i, e_j] = Σ v e_k` for `i < j`; `[e_j, e_i]` is filled in.
    pub fn from_brackets(
        field: &Gf,
        dim: usize,
        brackets: &[(usize, usize, usize, i64)],
    ) -> Result<Self> {
        let mut c = vec![0; dim * dim * dim];
        for &(i, j, k, v) in brackets {
            if i >= dim || j >= dim || k >= dim || i == j {
                return Err(Error::InvalidSpec(format!(
                    "bad bracket entry ({i},{j},{k})"
                )));
            }
            let val = field.from_int(v);
            let a = (i * dim + j) * dim + k;
            let b = (j * dim + i) * dim + k;
            c[a] = field.add(c[a], val);
            c[b] = field.sub(c[b], val);
        }
        Self::new(field, dim, c)
    }

    pub fn abelian(field: &Gf, dim: usize) -> Self {
        Self::new(field, dim, vec![0; dim * dim * dim]).expect("zero bracket is a Lie algebra")
    }

    /// `[e0, e1] = e2`
    pub fn heisenberg(field: &Gf) -> Self {
        Self::from_brackets(field, 3, &[(0, 1, 2, 1)]).expect("Heisenberg algebra is valid")
    }

    /// Free two-step nilpotent algebra on `m` generators: `V ⊕ Λ²V` with
    /// `[v_i, v_j] = w_{ij}` for `i < j`. The `w_{ij}` follow in lexicographic order.
    pub fn free_two_step(field: &Gf, m: usize) -> Self {
        let pairs = wedge_pairs(m);
        let dim = m + pairs.len();
        let brackets: Vec<(usize, usize, usize, i64)> = pairs
            .iter()
            .enumerate()
            .map(|(w, &(i, j))| (i, j, m + w, 1))
            .collect();
        let mut ring =
            Self::from_brackets(field, dim, &brackets).expect("free two-step algebra is valid");
        ring.weights = Some((0..dim).map(|i| if i < m { 1 } else { 2 }).collect());
        ring
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn weights(&self) -> Option<&[usize]> {
        self.weights.as_deref()
    }

    pub fn with_weights(mut self, weights: Vec<usize>) -> Self {
        assert_eq!(weights.len(), self.dim);
        self.weights = Some(weights);
        self
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Elem {
        self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[Elem] {
        &self.constants
    }

    fn basis_bracket(&self, i: usize, j: usize) -> &[Elem] {
        let start = (i * self.dim + j) * self.dim;
        &self.constants[start..start + self.dim]
    }

    fn check_antisymmetry(&self) -> Result<()> {
        let f = &self.field;
        for i in 0..self.dim {
            if !is_zero(self.basis_bracket(i, i)) {
                return Err(Error::AntisymmetryFail(i, i));
            }
            for j in i + 1..self.dim {
                let a = self.basis_bracket(i, j);
                let b = self.basis_bracket(j, i);
                if a.iter().zip(b).any(|(&x, &y)| f.add(x, y) != 0) {
                    return Err(Error::AntisymmetryFail(i, j));
                }
            }
        }
        Ok(())
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
                    let a = self.bracket(&self.bracket(&ei, &ej), &ek);
                    let b = self.bracket(&self.bracket(&ej, &ek), &ei);
                    let c = self.bracket(&self.bracket(&ek, &ei), &ej);
                    let mut s = a;
                    axpy(&self.field, &mut s, 1, &b);
                    axpy(&self.field, &mut s, 1, &c);
                    if !is_zero(&s) {
                        return Err(Error::JacobiFail(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Elem], y: &[Elem]) -> Vector {
        let f = &self.field;
        let mut out = zero_vec(self.dim);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 || i == j {
                    continue;
                }
                axpy(f, &mut out, f.mul(xi, yj), self.basis_bracket(i, j));
            }
        }
        out
    }

    /// `[X, Y]`, spanned by brackets of basis pairs.
    pub fn bracket_spaces(&self, x: &Subspace, y: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for a in x.basis() {
            for b in y.basis() {
                vecs.push(self.bracket(a, b));
            }
        }
        Subspace::span(&self.field, self.dim, vecs)
    }

    /// `[X, Y, Y, ..., Y]` with `times` copies of `Y`.
    pub fn iterated_bracket(&self, x: &Subspace, y: &Subspace, times: usize) -> Subspace {
        let mut cur = x.clone();
        for _ in 0..times {
            if cur.is_zero() {
                break;
            }
            cur = self.bracket_spaces(&cur, y);
        }
        cur
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(&self.field, self.dim)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains(&self.bracket(&b[i], &b[j]))))
    }

    /// `L^1 = L`, `L^{i+1} = [L^i, L]`, ending with the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        self.series_of(&self.full())
    }

    fn series_of(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_spaces(last, s);
            if next == *last {
                break;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    pub fn class(&self) -> Result<usize> {
        class_of_series(&self.lower_central_series())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.class().is_ok()
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.full()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_spaces(last, last);
            if next == *last {
                break;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    /// Derived length when solvable.
    pub fn derived_length(&self) -> Option<usize> {
        let s = self.derived_series();
        s.last().unwrap().is_zero().then(|| s.len() - 1)
    }

    /// Nilpotency class of a subalgebra under the restricted bracket.
    pub fn subalgebra_class(&self, s: &Subspace) -> Result<usize> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        class_of_series(&self.series_of(s))
    }

    /// Same structure constants over an extension field of the coefficient field.
    pub fn embed(&self, field: &Gf) -> LieRing {
        assert_eq!(field.q(), self.field.q());
        assert_eq!(field.degree() % self.field.degree(), 0);
        assert!(
            self.field.is_prime_field(),
            "embedding is only defined from a prime field"
        );
        LieRing {
            field: field.clone(),
            ..self.clone()
        }
    }
}

fn class_of_series(series: &[Subspace]) -> Result<usize> {
    if series.last().unwrap().is_zero() {
        Ok(series.len() - 1)
    } else {
        Err(Error::NotNilpotent)
    }
}

pub(crate) fn wedge_pairs(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            out.push((i, j));
        }
    }
    out
}

/// `L ⊗ GF(q^d)` with `d` the multiplicative order of `q` mod `p`, together with the
/// smallest element of multiplicative order `p` in the extension.
pub fn extend_scalars(l: &LieRing, p: u64) -> Result<(LieRing, Elem)> {
    let q = l.field().q() as u64;
    if !l.field().is_prime_field() {
        return Err(Error::InvalidSpec(
            "scalar extension starts from a prime field".into(),
        ));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime {
            actor: p as usize,
            target: q as usize,
        });
    }
    let d = mult_order_mod(q % p, p).ok_or(Error::NoRootOfUnity(p))?;
    let big = Gf::new(q as u32, d as u32)?;
    let omega = big.root_of_unity(p).ok_or(Error::NoRootOfUnity(p))?;
    Ok((l.embed(&big), omega))
}

/// A bracket-preserving invertible linear map, acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAutomorphism {
    matrix: Matrix,
}

impl LieAutomorphism {
    pub fn new(l: &LieRing, matrix: Matrix) -> Result<Self> {
        let n = l.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::NotLieAutomorphism(format!("matrix is not {n}x{n}")));
        }
        if matrix.inverse().is_none() {
            return Err(Error::NotLieAutomorphism("matrix is singular".into()));
        }
        let cols: Vec<Vector> = (0..n).map(|j| matrix.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = l.bracket(&cols[i], &cols[j]);
                let rhs = matrix.apply(&l.bracket(&unit_vec(n, i), &unit_vec(n, j)));
                if lhs != rhs {
                    return Err(Error::NotLieAutomorphism(format!(
                        "[M e{i}, M e{j}] != M [e{i}, e{j}]"
                    )));
                }
            }
        }
        Ok(LieAutomorphism { matrix })
    }

    pub fn identity(l: &LieRing) -> Self {
        LieAutomorphism {
            matrix: Matrix::identity(l.field(), l.dim()),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Elem]) -> Vector {
        self.matrix.apply(v)
    }

    pub fn compose(&self, other: &LieAutomorphism) -> LieAutomorphism {
        LieAutomorphism {
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn embed(&self, field: &Gf) -> LieAutomorphism {
        LieAutomorphism {
            matrix: self.matrix.embed(field),
        }
    }
}

/// Common fixed space of linear maps, checked to be closed under the bracket.
pub fn lie_fixed_points(l: &LieRing, maps: &[Matrix]) -> Result<Subspace> {
    let s = fixed_space(l.field(), l.dim(), maps);
    if !l.is_subalgebra(&s) {
        return Err(Error::NotASubalgebra);
    }
    Ok(s)
}

/// Kernel of the stacked `M - I`.
pub fn fixed_space(field: &Gf, n: usize, maps: &[Matrix]) -> Subspace {
    if maps.is_empty() {
        return Subspace::full(field, n);
    }
    let id = Matrix::identity(field, n);
    let mut rows = Vec::with_capacity(maps.len() * n);
    for m in maps {
        rows.extend(m.sub(&id).row_vectors());
    }
    let stacked = Matrix::from_rows(field, &rows);
    Subspace::span(field, n, stacked.kernel())
}

pub fn fixed_points(l: &LieRing, autos: &[LieAutomorphism]) -> Result<Subspace> {
    let mats: Vec<Matrix> = autos.iter().map(|a| a.matrix.clone()).collect();
    lie_fixed_points(l, &mats)
}

/// Automorphism of [`LieRing::free_two_step`] induced by `M ∈ GL(V)`: `M` on `V` and
/// `Λ²M` on the degree-two part.
pub fn free_two_step_automorphism(l: &LieRing, m: usize, gl: &Matrix) -> Result<LieAutomorphism> {
    let f = l.field();
    let pairs = wedge_pairs(m);
    let dim = m + pairs.len();
    if l.dim() != dim || gl.rows() != m || gl.cols() != m {
        return Err(Error::InvalidSpec(
            "dimension mismatch for the induced automorphism".into(),
        ));
    }
    let mut big = Matrix::zeros(f, dim, dim);
    for i in 0..m {
        for a in 0..m {
            big.set(a, i, gl.get(a, i));
        }
    }
    for (col, &(i, j)) in pairs.iter().enumerate() {
        for (row, &(a, b)) in pairs.iter().enumerate() {
            let v = f.sub(
                f.mul(gl.get(a, i), gl.get(b, j)),
                f.mul(gl.get(b, i), gl.get(a, j)),
            );
            big.set(m + row, m + col, v);
        }
    }
    LieAutomorphism::new(l, big)
}

/// Text format: `q d n`, then the modulus coefficients (constant term first), then
/// nonzero constants as `i j k value` in lexicographic order. An optional final
/// `# weights ...` line records a grading by weight.
pub fn write_lie(l: &LieRing) -> String {
    let f = l.field();
    let n = l.dim();
    let mut out = String::new();
    writeln!(out, "{} {} {}", f.q(), f.degree(), n).unwrap();
    let coeffs: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
    writeln!(out, "{}", coeffs.join(" ")).unwrap();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = l.constant(i, j, k);
                if c != 0 {
                    writeln!(out, "{i} {j} {k} {c}").unwrap();
                }
            }
        }
    }
    if let Some(w) = l.weights() {
        let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        writeln!(out, "# weights {}", ws.join(" ")).unwrap();
    }
    out
}

pub fn parse_lie(text: &str) -> Result<LieRing> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let nums = parse_numbers(header)?;
    let [q, d, n] = nums[..] else {
        return Err(Error::Parse(format!(
            "header must be `q d n`, got {header:?}"
        )));
    };
    let modulus_line = lines
        .next()
        .ok_or_else(|| Error::Parse("missing modulus line".into()))?;
    let modulus: Vec<u32> = parse_numbers(modulus_line)?
        .into_iter()
        .map(|x| x as u32)
        .collect();
    if modulus.len() != d as usize + 1 {
        return Err(Error::Parse(format!(
            "modulus must have {} coefficients",
            d + 1
        )));
    }
    let field = Gf::with_modulus(q as u32, modulus)?;
    let n = n as usize;
    let mut entries = Vec::new();
    let mut weights = None;
    let mut last: Option<(usize, usize, usize)> = None;
    for line in lines {
        if let Some(rest) = line.strip_prefix("# weights") {
            weights = Some(
                parse_numbers(rest)?
                    .into_iter()
                    .map(|x| x as usize)
                    .collect::<Vec<_>>(),
            );
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let v = parse_numbers(line)?;
        let [i, j, k, c] = v[..] else {
            return Err(Error::Parse(format!(
                "expected `i j k value`, got {line:?}"
            )));
        };
        let key = (i as usize, j as usize, k as usize);
        if last.is_some_and(|l| l >= key) {
            return Err(Error::Parse(format!(
                "entries not strictly sorted at {line:?}"
            )));
        }
        last = Some(key);
        if c == 0 {
            return Err(Error::Parse(format!("zero entry listed at {line:?}")));
        }
        entries.push((key.0, key.1, key.2, c as Elem));
    }
    let ring = LieRing::from_entries(&field, n, &entries)?;
    match weights {
        Some(w) if w.len() == n => Ok(ring.with_weights(w)),
        Some(_) => Err(Error::Parse("weights line has the wrong length".into())),
        None => Ok(ring),
    }
}

fn parse_numbers(s: &str) -> Result<Vec<u64>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad number {t:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Gf {
        Gf::prime(q).unwrap()
    }

    #[test]
    fn validation() {
        let f = gf(5);
        assert_eq!(LieRing::abelian(&f, 3).class().unwrap(), 1);
        let h = LieRing::heisenberg(&f);
        assert_eq!(h.class().unwrap(), 2);
        // [e0,e1] = e0 without the antisymmetric partner
        let r = LieRing::from_entries(&f, 2, &[(0, 1, 0, 1)]);
        assert_eq!(r, Err(Error::AntisymmetryFail(0, 1)));
    }

    #[test]
    fn jacobi_violation_detected() {
        // [e0,e1]=e1, [e0,e2]=e2, [e1,e2]=e0 breaks Jacobi
        let f = gf(5);
        let r = LieRing::from_brackets(&f, 3, &[(0, 1, 1, 1), (0, 2, 2, 1), (1, 2, 0, 1)]);
        assert!(matches!(r, Err(Error::JacobiFail(..))));
    }

    #[test]
    fn non_nilpotent_two_dim() {
        let f = gf(5);
        // [e0, e1] = e1
        let l = LieRing::from_brackets(&f, 2, &[(0, 1, 1, 1)]).unwrap();
        let s = l.lower_central_series();
        assert_eq!(s.len(), 2);
        assert_eq!(s[1].dim(), 1);
        assert_eq!(l.class(), Err(Error::NotNilpotent));
        assert_eq!(l.derived_length(), Some(2));
    }

    #[test]
    fn scalar_extension() {
        let (l, w) = extend_scalars(&LieRing::heisenberg(&gf(11)), 5).unwrap();
        assert_eq!(l.field().degree(), 1);
        assert_eq!(w, 3);
        assert_eq!(l.class().unwrap(), 2);
        let (l, w) = extend_scalars(&LieRing::heisenberg(&gf(2)), 5).unwrap();
        assert_eq!(l.field().size(), 16);
        let f = l.field();
        assert_eq!(f.pow(w, 5), 1);
        assert_ne!(w, 1);
        let sum = (0..5).fold(0, |acc, i| f.add(acc, f.pow(w, i)));
        assert_eq!(sum, 0);
        assert_eq!(l.class().unwrap(), 2);
        assert!(matches!(
            extend_scalars(&LieRing::heisenberg(&gf(11)), 11),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn fixed_points_examples() {
        let f = gf(11);
        let l = LieRing::abelian(&f, 2);
        assert_eq!(
            fixed_points(&l, &[LieAutomorphism::identity(&l)])
                .unwrap()
                .dim(),
            2
        );
        let phi = LieAutomorphism::new(&l, Matrix::diagonal(&f, &[3, 9])).unwrap();
        assert!(fixed_points(&l, &[phi]).unwrap().is_zero());
        let h = LieRing::heisenberg(&f);
        assert!(LieAutomorphism::new(&h, Matrix::diagonal(&f, &[3, 9, 3])).is_err());
        let phi = LieAutomorphism::new(&h, Matrix::diagonal(&f, &[3, 9, 5])).unwrap();
        assert!(fixed_points(&h, &[phi]).unwrap().is_zero());
    }

    #[test]
    fn non_subalgebra_fixed_space_rejected() {
        // a linear map fixing e0 and e1 but not e2 is not an automorphism of the Heisenberg algebra
        let f = gf(5);
        let h = LieRing::heisenberg(&f);
        let m = Matrix::diagonal(&f, &[1, 1, 2]);
        assert_eq!(lie_fixed_points(&h, &[m]), Err(Error::NotASubalgebra));
    }

    #[test]
    fn free_two_step_and_induced_maps() {
        let f = gf(11);
        let l = LieRing::free_two_step(&f, 3);
        assert_eq!(l.dim(), 6);
        assert_eq!(l.class().unwrap(), 2);
        let g = Matrix::from_ints(&f, &[vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]]);
        let a = free_two_step_automorphism(&l, 3, &g).unwrap();
        let b = free_two_step_automorphism(&l, 3, &g.mul(&g)).unwrap();
        assert_eq!(a.compose(&a), b);
    }

    #[test]
    fn text_round_trip() {
        let l = LieRing::heisenberg(&gf(5));
        let text = write_lie(&l);
        assert_eq!(text, "5 1 3\n0 1\n0 1 2 1\n1 0 2 4\n");
        assert_eq!(write_lie(&parse_lie(&text).unwrap()), text);
        let (big, _) = extend_scalars(&LieRing::free_two_step(&gf(2), 2), 5).unwrap();
        let text = write_lie(&big);
        assert_eq!(write_lie(&parse_lie(&text).unwrap()), text);
        assert!(parse_lie("5 1 3\n0 1\n1 0 2 4\n0 1 2 1\n").is_err());
    }
}
