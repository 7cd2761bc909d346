//! H-pairs and everything derived from them: hypersurface degree and
//! defining equation, the chain normalization, the finite-orbit decision,
//! nondegeneracy, smoothness, normality, and the second action on
//! degenerate hypersurfaces.
//!
//! An H-pair is a local algebra `A` of dimension `n+1` together with a
//! codimension-1 subspace `U` of the maximal ideal that generates `A` as a
//! unital algebra. The pair determines a hypersurface of degree `d` in
//! `P(A) = P^n`, cut out by `F = sum_{i=1}^{d} (-1)^{i-1} z0^{d-i} pi(z^i)/i`
//! with `z = z1 e1 + ... + zn en`; the series stops at `d` because
//! `pi(m^i) = 0` for `i > d`, so no division by `z0` ever occurs.

use crate::algebra::{Classification, InfiniteReason, LocalAlgebra, QElement, SymElement};
use crate::linalg::{Matrix, Subspace};
use crate::poly::{Monomial, Poly, PolyError, VarSet};
use crate::rat::{rone, rzero, Rat};
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HPairError {
    #[error("subspace is not contained in the maximal ideal")]
    NotInMaximalIdeal,
    #[error("subspace has dimension {got}, expected {expected}")]
    WrongCodimension { expected: usize, got: usize },
    #[error("subspace does not generate the algebra (fixpoint dimension {reached} of {dim})")]
    DoesNotGenerate { reached: usize, dim: usize },
    #[error("algebra is not a chain algebra: {0}")]
    NotChain(String),
    #[error("pair is already nondegenerate: the largest ideal inside U is zero")]
    AlreadyNondegenerate,
    #[error("dual construction needs canonical chain index n-1, found {found} (n = {n})")]
    DualPrecondition { found: usize, n: usize },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A validated H-pair. `w` is the distinguished complement direction of `U`
/// inside the maximal ideal (the lexicographically smallest standard basis
/// coordinate outside the row-reduced `U`), and `pi` the linear functional
/// with `pi(U) = 0`, `pi(w) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct HPair {
    algebra: LocalAlgebra,
    u: Subspace,
    w_coord: usize,
    pi: Vec<Rat>,
}

/// The defining equation `F = sum_k z0^{d-k} f_k` with its homogeneous
/// layers `f_1, ..., f_d` in the ideal coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct HypersurfaceEquation {
    pub poly: Poly,
    pub degree: usize,
    pub layers: Vec<Poly>,
}

/// Result of normalizing a chain pair to one of the `U_i`.
#[derive(Debug, Clone)]
pub struct ChainNormalization {
    /// The unique `i` with the pair isomorphic to `(K[x]/(x^{n+1}), U_i)`.
    pub index: usize,
    /// Algebra automorphism (in the original coordinates) carrying `U` onto
    /// the span of the generator powers with the `i`-th power removed.
    pub automorphism: Matrix,
    /// Columns are `1, g, g^2, ..., g^n` for the chosen chain generator.
    pub power_basis: Matrix,
}

/// Outcome of the finite-orbit decision with its reasoning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteOrbitCertificate {
    ChainCanonical { n: usize, index: usize },
    ChainIndexTooSmall { n: usize, index: usize },
    TwoVariableCanonical,
    AlgebraObstruction(InfiniteReason),
}

impl std::fmt::Display for FiniteOrbitCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FiniteOrbitCertificate::ChainCanonical { n, index } => {
                write!(f, "chain pair with canonical index {index} (n = {n})")
            }
            FiniteOrbitCertificate::ChainIndexTooSmall { n, index } => {
                write!(
                    f,
                    "canonical index {index}, requires i ∈ {{{}, {}}}",
                    n - 1,
                    n
                )
            }
            FiniteOrbitCertificate::TwoVariableCanonical => {
                write!(
                    f,
                    "two-variable pair, equivalent to (Q[x,y]/(x^2, y^2), <x, y>)"
                )
            }
            FiniteOrbitCertificate::AlgebraObstruction(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrbitDecision {
    pub finite: bool,
    pub certificate: FiniteOrbitCertificate,
}

/// Normality verdict with the gcd witnesses under both readings of the
/// reduced top layer: dividing the top layer by its radical once, and
/// replacing it by its full squarefree part. The two agree on every pair
/// this crate constructs; both are reported.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalityReport {
    pub normal: bool,
    pub normal_by_squarefree: bool,
    pub gcd_radical_once: Poly,
    pub gcd_squarefree: Poly,
}

impl NormalityReport {
    pub fn conventions_agree(&self) -> bool {
        self.normal == self.normal_by_squarefree
    }
}

impl HPair {
    /// Validates and builds an H-pair from an algebra and a subspace of it.
    pub fn new(algebra: LocalAlgebra, u: Subspace) -> Result<Self, HPairError> {
        let dim = algebra.dim();
        if u.ambient_dim() != dim {
            return Err(HPairError::AmbientMismatch(u.ambient_dim(), dim));
        }
        let m = algebra.maximal_ideal();
        if !m.contains_subspace(&u) {
            return Err(HPairError::NotInMaximalIdeal);
        }
        if u.dim() + 2 != dim {
            return Err(HPairError::WrongCodimension {
                expected: dim - 2,
                got: u.dim(),
            });
        }
        let generated = algebra.subalgebra_generated(&u);
        if generated.dim() != dim {
            return Err(HPairError::DoesNotGenerate {
                reached: generated.dim(),
                dim,
            });
        }
        let pivots = u.pivots();
        let w_coord = (1..dim)
            .find(|c| !pivots.contains(c))
            .expect("codimension-1 subspace of the ideal leaves one free coordinate");
        let pi: Vec<Rat> = (0..dim)
            .map(|j| {
                let mut e = vec![rzero(); dim];
                e[j] = rone();
                u.reduce(&e)[w_coord].clone()
            })
            .collect();
        Ok(HPair {
            algebra,
            u,
            w_coord,
            pi,
        })
    }

    pub fn algebra(&self) -> &LocalAlgebra {
        &self.algebra
    }

    pub fn u(&self) -> &Subspace {
        &self.u
    }

    /// Index of the distinguished complement coordinate (so `w = e_{w_coord}`).
    pub fn w_coord(&self) -> usize {
        self.w_coord
    }

    pub fn w(&self) -> QElement {
        self.algebra.basis_element(self.w_coord)
    }

    /// The projection functional as a covector on the algebra.
    pub fn pi(&self) -> &[Rat] {
        &self.pi
    }

    pub fn apply_pi(&self, a: &QElement) -> Rat {
        self.pi
            .iter()
            .zip(&a.coords)
            .fold(rzero(), |acc, (p, c)| acc + p * c)
    }

    fn apply_pi_sym(&self, a: &SymElement) -> Poly {
        let mut acc = Poly::zero(a.coords[0].vars());
        for (p, c) in self.pi.iter().zip(&a.coords) {
            if !p.is_zero() {
                acc = acc.add(&c.scale(p));
            }
        }
        acc
    }

    /// Largest `d` with `m^d` not inside `U`; this is the hypersurface degree.
    pub fn degree(&self) -> usize {
        let nil = self.algebra.nilpotency_index();
        (1..=nil)
            .rev()
            .find(|&k| !self.u.contains_subspace(&self.algebra.ideal_power(k)))
            .expect("m itself is never inside U")
    }

    /// The defining equation in coordinates `z0..zn`, scalar-normalized.
    pub fn equation(&self) -> HypersurfaceEquation {
        let dim = self.algebra.dim();
        let d = self.degree();
        let zvars = VarSet::z_vars(dim);
        let mut coords = vec![Poly::zero(&zvars)];
        for k in 1..dim {
            coords.push(Poly::var(&zvars, k));
        }
        let z = SymElement { coords };
        let mut f = Poly::zero(&zvars);
        let mut zpow = z.clone();
        for i in 1..=d {
            let piz = self.apply_pi_sym(&zpow);
            let sign = if i % 2 == 1 { rone() } else { -rone() };
            let coeff = sign / Rat::from_integer(i.into());
            let shifted = piz.mul_monomial(&Monomial::var_pow(dim, 0, (d - i) as u32), &coeff);
            f = f.add(&shifted);
            if i < d {
                zpow = self.algebra.mul_elems(&zpow, &z);
            }
        }
        let poly = f.normalize_scalar().expect("equation is nonzero");
        debug_assert_eq!(poly.homogeneous_degree(), Some(d as u32));
        let layers = (1..=d)
            .map(|k| poly.coeff_of_power(0, (d - k) as u32))
            .collect();
        HypersurfaceEquation {
            poly,
            degree: d,
            layers,
        }
    }

    /// A generator of the chain algebra: the smallest basis vector of `m`
    /// outside `m^2`, whose powers form a basis.
    pub fn chain_generator(&self) -> Result<QElement, HPairError> {
        let Classification::Chain(_) = self.algebra.classify() else {
            return Err(HPairError::NotChain(self.algebra.classify().to_string()));
        };
        let m2 = self.algebra.ideal_power(2);
        let idx = (1..self.algebra.dim())
            .find(|&i| !m2.contains(&self.algebra.basis_element(i).coords))
            .expect("m/m^2 is nonzero");
        Ok(self.algebra.basis_element(idx))
    }

    /// Matrix whose columns are `1, g, ..., g^n` for the chain generator.
    fn power_basis_matrix(&self, g: &QElement) -> Matrix {
        let dim = self.algebra.dim();
        let mut cols: Vec<QElement> = vec![self.algebra.unit_element()];
        for _ in 1..dim {
            let prev = cols.last().unwrap();
            cols.push(self.algebra.mul_elems(prev, g));
        }
        let mut p = Matrix::zero(dim, dim);
        for (j, c) in cols.iter().enumerate() {
            for i in 0..dim {
                p.set(i, j, c.coords[i].clone());
            }
        }
        p
    }

    /// Normalizes a chain pair onto its canonical `U_i`.
    ///
    /// In power coordinates: while `x^n` lies in `U` pass to the quotient by
    /// `<x^n>`; once it does not, the row-reduced basis reads
    /// `x^k + a_k x^n` and the substitution `x -> x + b_2 x^2 + ... + b_n x^n`
    /// is solved triangularly (`b` of highest index from `k = 1` upward is
    /// fixed last; the solve runs `k = n-1` down to `1`).
    pub fn canonical_chain_index(&self) -> Result<ChainNormalization, HPairError> {
        let g = self.chain_generator()?;
        let p = self.power_basis_matrix(&g);
        let p_inv = p
            .inverse()
            .expect("powers of a chain generator form a basis");
        let u_power = Subspace::from_vectors(
            self.algebra.dim(),
            self.u.basis().iter().map(|v| p_inv.mul_vec(v)).collect(),
        );
        let n = self.algebra.dim() - 1;
        let (index, subst) = normalize_chain_subspace(n, &u_power);
        let phi_power = substitution_matrix(&subst);
        let automorphism = p.mul(&phi_power).mul(&p_inv);
        Ok(ChainNormalization {
            index,
            automorphism,
            power_basis: p,
        })
    }

    /// The finite-orbit decision by classification.
    pub fn finite_orbits(&self) -> Result<FiniteOrbitDecision, HPairError> {
        match self.algebra.classify() {
            Classification::Chain(n) => {
                let norm = self.canonical_chain_index()?;
                if norm.index + 1 >= n {
                    Ok(FiniteOrbitDecision {
                        finite: true,
                        certificate: FiniteOrbitCertificate::ChainCanonical {
                            n,
                            index: norm.index,
                        },
                    })
                } else {
                    Ok(FiniteOrbitDecision {
                        finite: false,
                        certificate: FiniteOrbitCertificate::ChainIndexTooSmall {
                            n,
                            index: norm.index,
                        },
                    })
                }
            }
            Classification::TwoVariable => Ok(FiniteOrbitDecision {
                finite: true,
                certificate: FiniteOrbitCertificate::TwoVariableCanonical,
            }),
            Classification::NotFiniteOrbitCandidate(reason) => Ok(FiniteOrbitDecision {
                finite: false,
                certificate: FiniteOrbitCertificate::AlgebraObstruction(reason),
            }),
        }
    }

    /// Nondegeneracy via the algebra: one-dimensional socle complementing `U`.
    pub fn is_nondegenerate_algebraic(&self) -> bool {
        let soc = self.algebra.socle();
        if soc.dim() != 1 {
            return false;
        }
        let sum = self.u.sum(&soc).expect("same ambient");
        sum == self.algebra.maximal_ideal()
    }

    /// Nondegeneracy via the equation: all `n+1` variables are essential.
    pub fn is_nondegenerate_equation(&self) -> bool {
        let eq = self.equation();
        eq.poly
            .essential_variable_count()
            .expect("nonzero homogeneous")
            == self.algebra.dim()
    }

    /// Smooth iff a nondegenerate quadric.
    pub fn is_smooth(&self) -> bool {
        self.degree() == 2 && self.is_nondegenerate_algebraic()
    }

    /// Normality via coprimality of the reduced top layer with the next one.
    pub fn normality(&self) -> NormalityReport {
        let eq = self.equation();
        let d = eq.degree;
        assert!(d >= 2, "valid pairs have degree at least 2");
        let f_d = &eq.layers[d - 1];
        let f_dm1 = &eq.layers[d - 2];
        let radical = f_d.squarefree_part().expect("top layer is nonzero");
        let tilde = f_d.div_exact(&radical).expect("radical divides");
        let gcd_radical_once = tilde.gcd(f_dm1).expect("nonzero");
        let gcd_squarefree = radical.gcd(f_dm1).expect("nonzero");
        NormalityReport {
            normal: gcd_radical_once.is_constant(),
            normal_by_squarefree: gcd_squarefree.is_constant(),
            gcd_radical_once,
            gcd_squarefree,
        }
    }

    /// The largest ideal of the algebra contained in `U`, by shrinking `U`
    /// to the fixpoint of the ideal test.
    pub fn largest_ideal_within(&self) -> Subspace {
        let dim = self.algebra.dim();
        let mut current = self.u.clone();
        loop {
            if current.is_zero() {
                return current;
            }
            let rows: Vec<Vec<Rat>> = current.basis().to_vec();
            // keep those combinations sent back into `current` by every e_i
            let mut constraints: Vec<Vec<Rat>> = Vec::new();
            for i in 1..dim {
                let ei = self.algebra.basis_element(i);
                let images: Vec<Vec<Rat>> = rows
                    .iter()
                    .map(|v| {
                        let prod = self
                            .algebra
                            .mul_elems(&ei, &QElement::from_coords(v.clone()));
                        current.reduce(&prod.coords)
                    })
                    .collect();
                for coord in 0..dim {
                    let row: Vec<Rat> = images.iter().map(|im| im[coord].clone()).collect();
                    if row.iter().any(|x| !x.is_zero()) {
                        constraints.push(row);
                    }
                }
            }
            if constraints.is_empty() {
                return current;
            }
            let kernel = Matrix::from_rows(constraints).kernel();
            if kernel.dim() == current.dim() {
                return current;
            }
            let vecs: Vec<Vec<Rat>> = kernel
                .basis()
                .iter()
                .map(|c| {
                    let mut v = vec![rzero(); dim];
                    for (coef, row) in c.iter().zip(&rows) {
                        if !coef.is_zero() {
                            for (o, r) in v.iter_mut().zip(row) {
                                *o = &*o + coef * r;
                            }
                        }
                    }
                    v
                })
                .collect();
            current = Subspace::from_vectors(dim, vecs);
        }
    }

    /// Quotients away the largest ideal inside `U`; the result is the
    /// nondegenerate pair carrying the same equation.
    pub fn reduce_by_kernel(&self) -> Result<(HPair, Subspace), HPairError> {
        let j = self.largest_ideal_within();
        if j.is_zero() {
            return Err(HPairError::AlreadyNondegenerate);
        }
        let (q_alg, proj) = self
            .algebra
            .quotient_by_ideal(&j)
            .expect("largest ideal inside U is an ideal");
        let u_q = Subspace::from_vectors(
            q_alg.dim(),
            self.u.basis().iter().map(|v| proj.mul_vec(v)).collect(),
        );
        Ok((HPair::new(q_alg, u_q)?, j))
    }

    /// The H-pair of the second induced action on a degenerate chain
    /// hypersurface: basis `1, y, ..., y^{n-1}, z` with `y^n = z^2 = zy = 0`
    /// and `U = <y, ..., y^{n-2}, z>`.
    pub fn dual_hpair(&self) -> Result<HPair, HPairError> {
        let n = self.algebra.dim() - 1;
        let norm = self.canonical_chain_index()?;
        if norm.index + 1 != n {
            return Err(HPairError::DualPrecondition {
                found: norm.index,
                n,
            });
        }
        let alg = dual_chain_algebra(n);
        let mut coords: Vec<usize> = (1..=n.saturating_sub(2)).collect();
        coords.push(n);
        let u = Subspace::span_of_std(n + 1, &coords);
        HPair::new(alg, u)
    }
}

/// The algebra `K[y,z]/(y^n, z^2, zy)` on the basis `1, y, ..., y^{n-1}, z`.
pub fn dual_chain_algebra(n: usize) -> LocalAlgebra {
    assert!(n >= 2);
    let dim = n + 1;
    let mut names: Vec<String> = vec!["1".into(), "y".into()];
    for k in 2..n {
        names.push(format!("y^{k}"));
    }
    names.push("z".into());
    let mut table = vec![vec![vec![rzero(); dim]; dim]; dim];
    for j in 0..dim {
        table[0][j][j] = rone();
        table[j][0][j] = rone();
    }
    // indices 1..=n-1 are y^1..y^{n-1}; index n is z
    for i in 1..n {
        for j in 1..n {
            if i + j < n {
                table[i][j][i + j] = rone();
            }
        }
    }
    LocalAlgebra::new(names, table).expect("well-shaped table")
}

/// Power-coordinate normalization; returns `(index, substitution coeffs)`
/// where the substitution sends `x` to `sum_i b[i] x^i` (`b[1] = 1`).
fn normalize_chain_subspace(n: usize, u_power: &Subspace) -> (usize, Vec<Rat>) {
    let dim = n + 1;
    let mut top = vec![rzero(); dim];
    top[n] = rone();
    if u_power.contains(&top) {
        // x^n lies in U: recurse in the quotient by <x^n>
        let projected: Vec<Vec<Rat>> = u_power.basis().iter().map(|v| v[..n].to_vec()).collect();
        let u_q = Subspace::from_vectors(n, projected);
        let (index, mut b) = normalize_chain_subspace(n - 1, &u_q);
        b.push(rzero());
        return (index, b);
    }
    // RREF rows are x^k + a_k x^n for k = 1..n-1
    let mut alphas = vec![rzero(); n];
    for row in u_power.basis() {
        let k = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
        alphas[k] = row[n].clone();
    }
    let mut b = vec![rzero(); dim];
    b[1] = rone();
    for k in (1..n).rev() {
        // x^n-coefficient of phi(x^k) + a_k, with b[n-k+1] still zero
        let phi_x = b.clone();
        let pk = poly_pow_mod(&phi_x, k, dim);
        let c = &pk[n] + &alphas[k];
        b[n - k + 1] = -c / Rat::from_integer(k.into());
    }
    (n, b)
}

/// Convolution power of a truncated polynomial in x (coefficient vectors).
fn poly_pow_mod(coeffs: &[Rat], e: usize, dim: usize) -> Vec<Rat> {
    let mut out = vec![rzero(); dim];
    out[0] = rone();
    for _ in 0..e {
        let mut next = vec![rzero(); dim];
        for (i, a) in out.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in coeffs.iter().enumerate() {
                if i + j < dim && !b.is_zero() {
                    next[i + j] = &next[i + j] + a * b;
                }
            }
        }
        out = next;
    }
    out
}

/// Matrix of the substitution `x -> sum b[i] x^i` on the power basis.
fn substitution_matrix(b: &[Rat]) -> Matrix {
    let dim = b.len();
    let mut m = Matrix::zero(dim, dim);
    for j in 0..dim {
        let col = poly_pow_mod(b, j, dim);
        for i in 0..dim {
            m.set(i, j, col[i].clone());
        }
    }
    m
}

/// Subspace image under a matrix.
pub fn subspace_image(m: &Matrix, s: &Subspace) -> Subspace {
    Subspace::from_vectors(m.rows(), s.basis().iter().map(|v| m.mul_vec(v)).collect())
}

/// Scalar-insensitive comparison of two defining equations.
pub fn equations_match(a: &Poly, b: &Poly) -> bool {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => true,
        (false, false) => {
            a.normalize_scalar().expect("nonzero") == b.normalize_scalar().expect("nonzero")
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::poly::VarSet;
    use crate::rat::rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn pair(n: usize, i: usize) -> HPair {
        corpus::chain_pair(n, i)
    }

    #[test]
    fn make_hpair_examples() {
        // (Q[x]/(x^3), <x>) is valid with w = x^2
        let h = pair(2, 2);
        assert_eq!(h.w_coord(), 2);
        assert_eq!(h.apply_pi(&h.w()), rone());

        // <x^2, x^3> in Q[x]/(x^4) does not generate
        let alg = corpus::chain_algebra(3);
        let bad = Subspace::span_of_std(4, &[2, 3]);
        assert!(matches!(
            HPair::new(alg, bad),
            Err(HPairError::DoesNotGenerate { reached: 3, dim: 4 })
        ));

        // (Q[x,y]/(x^2,y^2), <x,y>) is valid with w = xy
        let tv = corpus::two_var_pair();
        assert_eq!(tv.w_coord(), 3);
    }

    #[test]
    fn make_hpair_rejects_bad_subspaces() {
        let alg = corpus::chain_algebra(3);
        let not_in_m = Subspace::span_of_std(4, &[0, 1]);
        assert_eq!(
            HPair::new(alg.clone(), not_in_m),
            Err(HPairError::NotInMaximalIdeal)
        );
        let wrong_dim = Subspace::span_of_std(4, &[1]);
        assert_eq!(
            HPair::new(alg, wrong_dim),
            Err(HPairError::WrongCodimension {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn degree_examples() {
        assert_eq!(pair(2, 2).degree(), 2);
        for n in 2..=6 {
            assert_eq!(pair(n, n).degree(), n);
            if n >= 3 {
                assert_eq!(pair(n, n - 1).degree(), n - 1);
            }
        }
    }

    #[test]
    fn skew_pair_degree() {
        // U = <x + x^3, x^2> in Q[x]/(x^4) still has m^3 outside U
        let alg = corpus::chain_algebra(3);
        let u = Subspace::from_vectors(
            4,
            vec![
                QElement::from_i64(&[0, 1, 0, 1]).coords,
                QElement::from_i64(&[0, 0, 1, 0]).coords,
            ],
        );
        let h = HPair::new(alg, u).unwrap();
        assert_eq!(h.degree(), 3);
    }

    fn poly_of(vars: &VarSet, terms: &[(i64, i64, &[u32])]) -> Poly {
        let t: Vec<(Rat, &[u32])> = terms.iter().map(|&(p, q, e)| (rat(p, q), e)).collect();
        Poly::from_terms(vars, &t)
    }

    #[test]
    fn equation_worked_example() {
        // (Q[x]/(x^3), <x>) -> z0 z2 - 1/2 z1^2
        let eq = pair(2, 2).equation();
        let v = VarSet::z_vars(3);
        assert_eq!(eq.degree, 2);
        assert_eq!(
            eq.poly,
            poly_of(&v, &[(1, 1, &[1, 0, 1]), (-1, 2, &[0, 2, 0])])
        );
        assert_eq!(eq.poly.to_pretty_string(), "z0*z2 - 1/2*z1^2");
    }

    #[test]
    fn equation_cubic_and_quartic() {
        let v4 = VarSet::z_vars(4);
        let cubic = pair(3, 3).equation();
        assert_eq!(
            cubic.poly,
            poly_of(
                &v4,
                &[
                    (1, 1, &[2, 0, 0, 1]),
                    (-1, 1, &[1, 1, 1, 0]),
                    (1, 3, &[0, 3, 0, 0])
                ]
            )
        );

        let v5 = VarSet::z_vars(5);
        let quartic = pair(4, 4).equation();
        assert_eq!(
            quartic.poly,
            poly_of(
                &v5,
                &[
                    (1, 1, &[3, 0, 0, 0, 1]),
                    (-1, 1, &[2, 1, 0, 1, 0]),
                    (-1, 2, &[2, 0, 2, 0, 0]),
                    (1, 1, &[1, 2, 1, 0, 0]),
                    (-1, 4, &[0, 4, 0, 0, 0]),
                ]
            )
        );
    }

    #[test]
    fn equation_layers_recompose() {
        for h in [pair(3, 3), pair(4, 3), corpus::two_var_pair()] {
            let eq = h.equation();
            let d = eq.degree;
            let dim = h.algebra().dim();
            let mut sum = Poly::zero(eq.poly.vars());
            for (k, f_k) in eq.layers.iter().enumerate() {
                let shift = Monomial::var_pow(dim, 0, (d - (k + 1)) as u32);
                sum = sum.add(&f_k.mul_monomial(&shift, &rone()));
            }
            assert_eq!(sum, eq.poly);
            assert_eq!(eq.poly.homogeneous_degree(), Some(d as u32));
            assert_eq!(h.degree(), d);
        }
    }

    #[test]
    fn equation_vanishes_on_open_orbit() {
        // master correctness check: F(exp(sum s_j u_j) * 1) = 0 symbolically
        for h in [
            pair(2, 2),
            pair(3, 3),
            pair(3, 2),
            pair(4, 3),
            corpus::two_var_pair(),
        ] {
            assert!(corpus::equation_vanishes_symbolically(&h));
        }
    }

    #[test]
    fn canonical_index_already_canonical() {
        for n in 2..=5 {
            let norm = pair(n, n).canonical_chain_index().unwrap();
            assert_eq!(norm.index, n);
            assert_eq!(norm.automorphism, Matrix::identity(n + 1));
        }
        let norm = pair(5, 3).canonical_chain_index().unwrap();
        assert_eq!(norm.index, 3);
    }

    #[test]
    fn canonical_index_skew_example() {
        // U = <x + x^3, x^2> in Q[x]/(x^4) normalizes to U_3 = <x, x^2>
        let alg = corpus::chain_algebra(3);
        let u = Subspace::from_vectors(
            4,
            vec![
                QElement::from_i64(&[0, 1, 0, 1]).coords,
                QElement::from_i64(&[0, 0, 1, 0]).coords,
            ],
        );
        let h = HPair::new(alg, u.clone()).unwrap();
        let norm = h.canonical_chain_index().unwrap();
        assert_eq!(norm.index, 3);
        let image = subspace_image(&norm.automorphism, &u);
        assert_eq!(image, Subspace::span_of_std(4, &[1, 2]));
    }

    #[test]
    fn canonical_index_requires_chain_algebra() {
        assert!(matches!(
            corpus::two_var_pair().canonical_chain_index(),
            Err(HPairError::NotChain(_))
        ));
    }

    #[test]
    fn canonical_index_invariant_under_automorphisms() {
        let mut rng = StdRng::seed_from_u64(42);
        for n in 3..=5 {
            for i in 2..=n {
                let base = corpus::chain_u(n, i);
                for _ in 0..5 {
                    let mut b = vec![rzero(); n + 1];
                    b[1] = rone();
                    for coeff in b.iter_mut().take(n + 1).skip(2) {
                        *coeff = rat(rng.gen_range(-2..=2), 1);
                    }
                    let phi = substitution_matrix(&b);
                    let moved = subspace_image(&phi, &base);
                    let h = HPair::new(corpus::chain_algebra(n), moved).unwrap();
                    assert_eq!(h.canonical_chain_index().unwrap().index, i);
                }
            }
        }
    }

    #[test]
    fn finite_orbits_examples() {
        assert!(pair(4, 4).finite_orbits().unwrap().finite);
        assert!(pair(4, 3).finite_orbits().unwrap().finite);
        let dec = pair(4, 2).finite_orbits().unwrap();
        assert!(!dec.finite);
        assert_eq!(
            dec.certificate,
            FiniteOrbitCertificate::ChainIndexTooSmall { n: 4, index: 2 }
        );
        assert!(corpus::two_var_pair().finite_orbits().unwrap().finite);
        let dual = corpus::dual_pair(4);
        let dec = dual.finite_orbits().unwrap();
        assert!(!dec.finite);
        assert!(matches!(
            dec.certificate,
            FiniteOrbitCertificate::AlgebraObstruction(InfiniteReason::SocleTooBig { dim: 2 })
        ));
    }

    #[test]
    fn nondegeneracy_both_criteria() {
        let cases = [
            (pair(3, 3), true),  // nondegenerate cubic
            (pair(3, 2), false), // degenerate quadric of rank 3
            (corpus::two_var_pair(), true),
        ];
        for (h, expected) in cases {
            assert_eq!(h.is_nondegenerate_algebraic(), expected);
            assert_eq!(h.is_nondegenerate_equation(), expected);
        }
    }

    #[test]
    fn smoothness_examples() {
        assert!(pair(2, 2).is_smooth());
        assert!(corpus::two_var_pair().is_smooth());
        assert!(!pair(3, 3).is_smooth());
        assert!(!pair(3, 2).is_smooth());
    }

    #[test]
    fn normality_examples() {
        // degree-2 chain: normal
        let rep = pair(2, 2).normality();
        assert!(rep.normal && rep.normal_by_squarefree);

        // chain U_n, n = 4: not normal, witnessed by powers of z1
        // (reduced top layer z1^3 against f_3 = z1^2 z2)
        let rep = pair(4, 4).normality();
        assert!(!rep.normal && !rep.normal_by_squarefree);
        let v = VarSet::z_vars(5);
        assert_eq!(rep.gcd_radical_once, Poly::var(&v, 1).pow(2));
        assert_eq!(rep.gcd_squarefree, Poly::var(&v, 1));

        // P1 x P1: normal
        let rep = corpus::two_var_pair().normality();
        assert!(rep.normal && rep.normal_by_squarefree);

        // degenerate quadric of rank 3 in P^3: normal
        let rep = pair(3, 2).normality();
        assert!(rep.normal && rep.normal_by_squarefree);
    }

    #[test]
    fn chain_top_layer_factors_as_a_power_of_z1() {
        // brute-force factorization of f_d for the top chain pairs: f_d is
        // a scalar times z1^n, its squarefree part is z1, and dividing by
        // the radical once leaves a scalar times z1^{n-1}
        for n in 2..=6 {
            let eq = pair(n, n).equation();
            let d = eq.degree;
            let f_d = &eq.layers[d - 1];
            let v = eq.poly.vars();
            let z1 = Poly::var(v, 1);
            let mut quotient = f_d.clone();
            for _ in 0..n {
                quotient = quotient.div_exact(&z1).expect("z1 divides f_d");
            }
            let c = quotient.as_constant().expect("f_d / z1^n is a scalar");
            let expected = if n % 2 == 1 {
                rat(1, n as i64)
            } else {
                rat(-1, n as i64)
            };
            assert_eq!(c, expected);
            assert_eq!(f_d.squarefree_part().unwrap(), z1);
            let radical_once = f_d.div_exact(&z1).unwrap().normalize_scalar().unwrap();
            assert_eq!(radical_once, z1.pow((n - 1) as u32));
        }
    }

    #[test]
    fn largest_ideal_is_zero_for_nondegenerate_pairs() {
        assert!(corpus::two_var_pair().largest_ideal_within().is_zero());
        for n in 2..=5 {
            assert!(pair(n, n).largest_ideal_within().is_zero());
        }
    }

    #[test]
    fn dual_pair_reduces_to_the_same_nondegenerate_pair() {
        // quotienting the dual pair by <z> and the degenerate chain pair by
        // <x^n> lands on the same hypersurface one dimension down
        for n in 3..=5 {
            let dual = corpus::dual_pair(n);
            let j = dual.largest_ideal_within();
            assert_eq!(j, Subspace::span_of_std(n + 1, &[n]));
            let (dual_reduced, _) = dual.reduce_by_kernel().unwrap();
            let (chain_reduced, _) = pair(n, n - 1).reduce_by_kernel().unwrap();
            assert!(dual_reduced.is_nondegenerate_algebraic());
            assert!(equations_match(
                &dual_reduced.equation().poly,
                &chain_reduced.equation().poly
            ));
        }
    }

    #[test]
    fn largest_ideal_examples() {
        for n in 3..=6 {
            let h = pair(n, n - 1);
            let j = h.largest_ideal_within();
            assert_eq!(j, Subspace::span_of_std(n + 1, &[n]));
            let h_top = pair(n, n);
            assert!(h_top.largest_ideal_within().is_zero());
        }
    }

    #[test]
    fn largest_ideal_is_maximal_among_ideals_in_u() {
        let h = pair(5, 4);
        let j = h.largest_ideal_within();
        let alg = h.algebra();
        // adding any U-basis vector outside J must break ideality
        for v in h.u().basis() {
            if j.contains(v) {
                continue;
            }
            let bigger = j
                .sum(&Subspace::from_vectors(alg.dim(), vec![v.clone()]))
                .unwrap();
            let mut is_ideal = true;
            for i in 1..alg.dim() {
                for w in bigger.basis() {
                    let prod =
                        alg.mul_elems(&alg.basis_element(i), &QElement::from_coords(w.clone()));
                    if !bigger.contains(&prod.coords) {
                        is_ideal = false;
                    }
                }
            }
            assert!(!is_ideal);
        }
    }

    #[test]
    fn reduce_by_kernel_examples() {
        // (Q[x]/(x^5), U_3) reduces to a pair equivalent to (Q[x]/(x^4), <x, x^2>)
        let h = pair(4, 3);
        let (reduced, j) = h.reduce_by_kernel().unwrap();
        assert_eq!(j, Subspace::span_of_std(5, &[4]));
        assert_eq!(reduced.algebra().dim(), 4);
        assert!(reduced.is_nondegenerate_algebraic());
        let target = pair(3, 3);
        assert!(equations_match(
            &reduced.equation().poly,
            &target.equation().poly
        ));

        assert_eq!(
            pair(4, 4).reduce_by_kernel(),
            Err(HPairError::AlreadyNondegenerate)
        );
    }

    #[test]
    fn reduced_equation_is_original_with_kernel_coords_deleted() {
        for n in 3..=5 {
            let h = pair(n, n - 1);
            let (reduced, _) = h.reduce_by_kernel().unwrap();
            let original = h.equation().poly;
            let small = reduced.equation().poly;
            // original never mentions z_n; rebuilding it in one fewer
            // variable must give the reduced equation
            let vq = VarSet::z_vars(n);
            let rebuilt = Poly::from_terms(
                &vq,
                &original
                    .terms()
                    .map(|(m, c)| (c.clone(), &m.0[..n]))
                    .collect::<Vec<_>>(),
            );
            assert!(equations_match(&rebuilt, &small));
        }
    }

    #[test]
    fn dual_pair_examples() {
        // n = 3: dual of (Q[x]/(x^4), <x, x^3>)
        let h = pair(3, 2);
        let dual = h.dual_hpair().unwrap();
        assert_eq!(dual.algebra().basis_names(), ["1", "y", "y^2", "z"]);
        assert_eq!(dual.u(), &Subspace::span_of_std(4, &[1, 3]));
        assert!(equations_match(&dual.equation().poly, &h.equation().poly));
        assert!(!dual.finite_orbits().unwrap().finite);
    }

    #[test]
    fn dual_equation_matches_for_all_n() {
        for n in 3..=6 {
            let h = pair(n, n - 1);
            let dual = h.dual_hpair().unwrap();
            assert_eq!(dual.equation().poly, h.equation().poly);
        }
    }

    #[test]
    fn dual_requires_index_n_minus_1() {
        assert!(matches!(
            pair(4, 4).dual_hpair(),
            Err(HPairError::DualPrecondition { found: 4, n: 4 })
        ));
    }

    #[test]
    fn degree_equals_equation_degree_on_corpus() {
        for item in corpus::standard_corpus(5) {
            let eq = item.pair.equation();
            assert_eq!(eq.poly.homogeneous_degree(), Some(eq.degree as u32));
            assert_eq!(item.pair.degree(), eq.degree);
        }
    }

    #[test]
    fn nondegeneracy_criteria_agree_on_corpus() {
        for item in corpus::standard_corpus(5) {
            assert_eq!(
                item.pair.is_nondegenerate_algebraic(),
                item.pair.is_nondegenerate_equation(),
                "criteria disagree on {}",
                item.name
            );
        }
    }
}
