//! Multivariate polynomials over the exact rationals.
//!
//! Terms are kept in a map ordered by the canonical graded-lexicographic
//! order in which the first variable is the largest (`z0 > z1 > ...`); this
//! single serialization order keeps golden outputs byte-stable. The gcd and
//! squarefree-part routines here drive the normality and nondegeneracy
//! predicates downstream.

use crate::linalg::Matrix;
use crate::rat::{format_rat, rone, rzero, Rat};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Largest exponent a single variable may carry.
pub const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable lists do not match: [{0}] vs [{1}]")]
    VarMismatch(String, String),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("both gcd arguments are zero")]
    BothZero,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("substitution size mismatch: expected {expected}, got {got}")]
    SubstitutionArity { expected: usize, got: usize },
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("empty variable list")]
    NoVariables,
}

/// An ordered list of variable names shared by all polynomials of one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new(names: Vec<String>) -> Result<Self, PolyError> {
        if names.is_empty() {
            return Err(PolyError::NoVariables);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarSet(Arc::new(names)))
    }

    /// Projective coordinate variables `z0, ..., z{count-1}`.
    pub fn z_vars(count: usize) -> Self {
        VarSet::new((0..count).map(|i| format!("z{i}")).collect()).expect("distinct names")
    }

    /// Action parameters `s1, ..., s{count}`.
    pub fn s_vars(count: usize) -> Self {
        VarSet::new((1..=count).map(|i| format!("s{i}")).collect()).expect("distinct names")
    }

    /// The single curve parameter `t`.
    pub fn t_var() -> Self {
        VarSet::new(vec!["t".to_string()]).expect("distinct names")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    fn joined(&self) -> String {
        self.0.join(", ")
    }
}

/// Exponent vector; one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn var_pow(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

/// Canonical graded-lex order with the first variable largest.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with exact rational coefficients. No zero
/// coefficients are ever stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(vars: &VarSet) -> Self {
        Poly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Poly::constant(vars, rone())
    }

    pub fn constant(vars: &VarSet, c: Rat) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut p = Poly::zero(vars);
        p.terms.insert(Monomial::var(vars.len(), i), rone());
        p
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: Rat) -> Self {
        assert_eq!(m.0.len(), vars.len());
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(vars: &VarSet, terms: &[(Rat, &[u32])]) -> Self {
        let mut p = Poly::zero(vars);
        for (c, exps) in terms {
            assert_eq!(exps.len(), vars.len());
            p.add_term(Monomial(exps.to_vec()), c.clone());
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(rzero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Largest term under the canonical graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(rzero)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn compatible(&self, other: &Poly) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VarMismatch(
                self.vars.joined(),
                other.vars.joined(),
            ));
        }
        Ok(())
    }

    fn assert_compatible(&self, other: &Poly) {
        self.compatible(other)
            .expect("polynomials from different rings");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rat) -> Poly {
        if r.is_zero() {
            return Poly::zero(&self.vars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c * r;
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_compatible(other);
        let mut out = Poly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            out.add_term(ma.mul(m), ca * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(&self.vars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative in the given variable.
    pub fn partial_derivative(&self, var: usize) -> Poly {
        assert!(var < self.nvars(), "variable index out of range");
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut me = m.clone();
                me.0[var] = e - 1;
                out.add_term(me, c * Rat::from_integer(e.into()));
            }
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Common degree of all terms, or `None` when terms disagree or the
    /// polynomial is zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Scales so the canonical leading coefficient becomes 1; idempotent.
    pub fn normalize_scalar(&self) -> Result<Poly, PolyError> {
        let (_, c) = self.leading().ok_or(PolyError::ZeroPolynomial)?;
        Ok(self.scale(&c.recip()))
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Coefficient of `var^e`, with that variable's exponent zeroed out.
    pub fn coeff_of_power(&self, var: usize, e: u32) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.0[var] == e {
                let mut me = m.clone();
                me.0[var] = 0;
                out.add_term(me, c.clone());
            }
        }
        out
    }

    /// Largest variable index that actually occurs.
    pub fn highest_occurring_var(&self) -> Option<usize> {
        (0..self.nvars())
            .rev()
            .find(|&i| self.terms.keys().any(|m| m.0[i] > 0))
    }

    pub fn eval_rat(&self, args: &[Rat]) -> Rat {
        assert_eq!(args.len(), self.nvars());
        let mut acc = rzero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &args[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes a polynomial for each variable. The arguments live in a
    /// common (possibly different) ring; the result lives there too.
    pub fn eval_poly(&self, args: &[Poly]) -> Result<Poly, PolyError> {
        if args.len() != self.nvars() {
            return Err(PolyError::SubstitutionArity {
                expected: self.nvars(),
                got: args.len(),
            });
        }
        let target = args.first().ok_or(PolyError::NoVariables)?.vars.clone();
        for a in args {
            if a.vars != target {
                return Err(PolyError::VarMismatch(target.joined(), a.vars.joined()));
            }
        }
        // Power cache per variable: powers[i][e] = args[i]^e.
        let mut powers: Vec<Vec<Poly>> = args
            .iter()
            .map(|a| vec![Poly::one(&target), a.clone()])
            .collect();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&args[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Composes with the linear change of variables `z_i <- sum_j m[i][j] z_j`.
    pub fn substitute_linear(&self, m: &Matrix) -> Result<Poly, PolyError> {
        let n = self.nvars();
        if m.rows() != n || m.cols() != n {
            return Err(PolyError::SubstitutionArity {
                expected: n,
                got: m.rows(),
            });
        }
        if m.inverse().is_none() {
            return Err(PolyError::SingularMatrix);
        }
        let args: Vec<Poly> = (0..n)
            .map(|i| {
                let mut l = Poly::zero(&self.vars);
                for j in 0..n {
                    l.add_term(Monomial::var(n, j), m.at(i, j).clone());
                }
                l
            })
            .collect();
        self.eval_poly(&args)
    }

    /// Minimal number of variables reachable by an invertible linear change:
    /// in characteristic zero this is the rank of the span of the first
    /// partial derivatives. Requires a nonzero homogeneous input.
    pub fn essential_variable_count(&self) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        self.homogeneous_degree().ok_or(PolyError::NotHomogeneous)?;
        let partials: Vec<Poly> = (0..self.nvars())
            .map(|i| self.partial_derivative(i))
            .collect();
        let mut monos: Vec<&Monomial> = Vec::new();
        for p in &partials {
            for m in p.terms.keys() {
                if !monos.contains(&m) {
                    monos.push(m);
                }
            }
        }
        let rows: Vec<Vec<Rat>> = partials
            .iter()
            .map(|p| monos.iter().map(|m| p.coeff(m)).collect())
            .collect();
        if monos.is_empty() {
            return Ok(0);
        }
        Ok(Matrix::from_rows(rows).rank())
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        self.assert_compatible(divisor);
        let (dm, dc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.vars);
        while let Some((rm, rc)) = rem.leading() {
            let q = rm.div(dm)?;
            let qc = rc / dc;
            rem = rem.sub(&divisor.mul_monomial(&q, &qc));
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    /// Greatest common divisor, normalized to leading coefficient 1.
    ///
    /// Primitive pseudo-remainder sequences, treating the inputs as
    /// univariate in their largest occurring variable over the polynomial
    /// ring in the remaining ones.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.assert_compatible(other);
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(PolyError::BothZero),
            (true, false) => other.normalize_scalar(),
            (false, true) => self.normalize_scalar(),
            (false, false) => gcd_inner(self, other).normalize_scalar(),
        }
    }

    /// Product of the distinct irreducible factors of `self`, normalized.
    ///
    /// Computed as `self` divided by the gcd of `self` with all its partial
    /// derivatives, repeated until every partial is coprime to the result.
    pub fn squarefree_part(&self) -> Result<Poly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut r = self.normalize_scalar()?;
        loop {
            let mut g = r.clone();
            for i in 0..self.nvars() {
                let d = r.partial_derivative(i);
                if !d.is_zero() {
                    g = g.gcd(&d).expect("nonzero inputs");
                }
            }
            if g.is_constant() {
                return Ok(r);
            }
            r = r.div_exact(&g).expect("gcd divides").normalize_scalar()?;
        }
    }

    /// Human-readable form like `z0^2*z3 - z0*z1*z2 + 1/3*z1^3`.
    pub fn to_pretty_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = self.monomial_string(m);
            match (abs.is_one(), mono.as_str()) {
                (true, "") => out.push('1'),
                (true, s) => out.push_str(s),
                (false, "") => out.push_str(&format_rat(&abs)),
                (false, s) => {
                    out.push_str(&format_rat(&abs));
                    out.push('*');
                    out.push_str(s);
                }
            }
        }
        out
    }

    fn monomial_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars.name(i).to_string()),
                _ => parts.push(format!("{}^{}", self.vars.name(i), e)),
            }
        }
        parts.join("*")
    }

    /// JSON term list `[{"monomial": [...], "coeff": "p/q"}, ...]` in
    /// descending canonical order (leading term first).
    pub fn to_json_terms(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| {
                    serde_json::json!({
                        "monomial": m.0.clone(),
                        "coeff": format_rat(c),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pretty_string())
    }
}

fn content_in(p: &Poly, var: usize) -> Poly {
    let mut g: Option<Poly> = None;
    for e in 0..=p.degree_in(var) {
        let c = p.coeff_of_power(var, e);
        if c.is_zero() {
            continue;
        }
        g = Some(match g {
            None => c.normalize_scalar().expect("nonzero"),
            Some(prev) => {
                if prev.is_constant() {
                    prev
                } else {
                    gcd_inner(&prev, &c).normalize_scalar().expect("nonzero")
                }
            }
        });
    }
    g.expect("nonzero polynomial has content")
}

/// Pseudo-remainder of `p` by `q` in the variable `var`; `q` must have
/// positive degree there no larger than `p`'s.
fn prem(p: &Poly, q: &Poly, var: usize) -> Poly {
    let dq = q.degree_in(var);
    let lc_q = q.coeff_of_power(var, dq);
    let mut r = p.clone();
    while !r.is_zero() {
        let dr = r.degree_in(var);
        if dr < dq {
            break;
        }
        let lc_r = r.coeff_of_power(var, dr);
        let shift = Monomial::var_pow(p.nvars(), var, dr - dq);
        r = r
            .mul(&lc_q)
            .sub(&q.mul(&lc_r).mul_monomial(&shift, &rone()));
    }
    r
}

fn gcd_inner(a: &Poly, b: &Poly) -> Poly {
    debug_assert!(!a.is_zero() && !b.is_zero());
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.vars());
    }
    let va = a.highest_occurring_var().expect("nonconstant");
    let vb = b.highest_occurring_var().expect("nonconstant");
    let k = va.max(vb);
    if a.degree_in(k) == 0 {
        return gcd_inner(a, &content_in(b, k));
    }
    if b.degree_in(k) == 0 {
        return gcd_inner(&content_in(a, k), b);
    }
    let ca = content_in(a, k);
    let cb = content_in(b, k);
    let g_cont = if ca.is_constant() || cb.is_constant() {
        Poly::one(a.vars())
    } else {
        gcd_inner(&ca, &cb)
    };
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(k) < q.degree_in(k) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        if q.is_zero() {
            break;
        }
        let r = prem(&p, &q, k);
        p = q;
        q = if r.is_zero() {
            r
        } else {
            r.div_exact(&content_in(&r, k)).expect("content divides")
        };
    }
    g_cont.mul(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn zvars(n: usize) -> VarSet {
        VarSet::z_vars(n)
    }

    #[test]
    fn square_of_sum_expands() {
        let v = zvars(2);
        let p = Poly::var(&v, 0).add(&Poly::var(&v, 1));
        let sq = p.pow(2);
        let expected = Poly::from_terms(
            &v,
            &[(rint(1), &[2, 0]), (rint(2), &[1, 1]), (rint(1), &[0, 2])],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn multiply_by_zero() {
        let v = zvars(2);
        let p = Poly::var(&v, 0).add(&Poly::one(&v));
        assert!(p.mul(&Poly::zero(&v)).is_zero());
    }

    #[test]
    fn var_mismatch_detected() {
        let a = Poly::var(&zvars(2), 0);
        let b = Poly::var(&VarSet::new(vec!["x".into(), "y".into()]).unwrap(), 0);
        assert!(a.compatible(&b).is_err());
    }

    #[test]
    #[should_panic(expected = "different rings")]
    fn var_mismatch_panics_in_arith() {
        let a = Poly::var(&zvars(2), 0);
        let b = Poly::var(&VarSet::new(vec!["x".into(), "y".into()]).unwrap(), 0);
        let _ = a.add(&b);
    }

    #[test]
    fn partial_derivative_examples() {
        // d(z0*z2 - 1/2 z1^2)/dz1 = -z1
        let v = zvars(3);
        let p = Poly::from_terms(&v, &[(rint(1), &[1, 0, 1]), (rat(-1, 2), &[0, 2, 0])]);
        assert_eq!(
            p.partial_derivative(1),
            Poly::from_terms(&v, &[(rint(-1), &[0, 1, 0])])
        );
        assert!(Poly::constant(&v, rint(5)).partial_derivative(0).is_zero());
    }

    #[test]
    fn gcd_monomials() {
        let v = zvars(3);
        // gcd(z1^2 z2, z1 z2^2) = z1 z2
        let a = Poly::from_terms(&v, &[(rint(1), &[0, 2, 1])]);
        let b = Poly::from_terms(&v, &[(rint(1), &[0, 1, 2])]);
        assert_eq!(
            a.gcd(&b).unwrap(),
            Poly::from_terms(&v, &[(rint(1), &[0, 1, 1])])
        );
        assert_eq!(a.gcd(&Poly::one(&v)).unwrap(), Poly::one(&v));
    }

    #[test]
    fn gcd_chain_noncoprimality_witness() {
        // gcd(z1^{n-1}, z1^{n-2} z2) = z1^{n-2} for n >= 3
        for n in 3..=6u32 {
            let v = zvars(3);
            let a = Poly::monomial(&v, Monomial::var_pow(3, 1, n - 1), rone());
            let b = Poly::from_terms(&v, &[(rint(1), &[0, n - 2, 1])]);
            let g = a.gcd(&b).unwrap();
            assert_eq!(
                g,
                Poly::monomial(&v, Monomial::var_pow(3, 1, n - 2), rone())
            );
        }
    }

    #[test]
    fn gcd_divides_both_inputs() {
        let v = zvars(3);
        let p = Poly::var(&v, 0).add(&Poly::var(&v, 1));
        let q = Poly::var(&v, 1).add(&Poly::var(&v, 2));
        let r = Poly::var(&v, 0).sub(&Poly::var(&v, 2));
        let a = p.mul(&q);
        let b = p.mul(&r);
        let g = a.gcd(&b).unwrap();
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());
        assert_eq!(g, p.normalize_scalar().unwrap());
    }

    #[test]
    fn gcd_common_factor_scales() {
        // gcd(p*r, q*r) = gcd(p,q)*r up to the scalar normalization
        let v = zvars(3);
        let p = Poly::var(&v, 0).add(&Poly::var(&v, 1)).pow(2);
        let q = Poly::var(&v, 0).sub(&Poly::var(&v, 1));
        let r = Poly::var(&v, 2).add(&Poly::one(&v));
        let lhs = p.mul(&r).gcd(&q.mul(&r)).unwrap();
        let rhs = p.gcd(&q).unwrap().mul(&r).normalize_scalar().unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn squarefree_part_examples() {
        let v = zvars(2);
        let z1cube = Poly::monomial(&v, Monomial::var_pow(2, 1, 3), rat(2, 3));
        assert_eq!(z1cube.squarefree_part().unwrap(), Poly::var(&v, 1));

        let sf = Poly::var(&v, 0).add(&Poly::var(&v, 1));
        assert_eq!(
            sf.squarefree_part().unwrap(),
            sf.normalize_scalar().unwrap()
        );

        // x^2 y^2 -> x y, exercising the joint gcd over all partials
        let p = Poly::from_terms(&v, &[(rint(1), &[2, 2])]);
        assert_eq!(
            p.squarefree_part().unwrap(),
            Poly::from_terms(&v, &[(rint(1), &[1, 1])])
        );
    }

    #[test]
    fn squarefree_part_coprime_to_partials() {
        let v = zvars(2);
        let p = Poly::var(&v, 0)
            .add(&Poly::var(&v, 1))
            .pow(3)
            .mul(&Poly::var(&v, 0).sub(&Poly::var(&v, 1)));
        let s = p.squarefree_part().unwrap();
        // joint gcd with all partials is constant in characteristic zero
        let mut g = s.clone();
        for i in 0..2 {
            let d = s.partial_derivative(i);
            if !d.is_zero() {
                g = g.gcd(&d).unwrap();
            }
        }
        assert!(g.is_constant());
        assert!(p.div_exact(&s).is_some());
    }

    #[test]
    fn substitute_identity_and_swap() {
        let v = zvars(2);
        let p = Poly::from_terms(&v, &[(rint(1), &[1, 1])]);
        assert_eq!(p.substitute_linear(&Matrix::identity(2)).unwrap(), p);
        let swap = Matrix::from_rows(vec![vec![rzero(), rone()], vec![rone(), rzero()]]);
        assert_eq!(p.substitute_linear(&swap).unwrap(), p);
    }

    #[test]
    fn substitute_singular_rejected() {
        let v = zvars(2);
        let p = Poly::var(&v, 0);
        let sing = Matrix::from_rows(vec![vec![rone(), rone()], vec![rone(), rone()]]);
        assert_eq!(p.substitute_linear(&sing), Err(PolyError::SingularMatrix));
    }

    #[test]
    fn essential_variable_count_examples() {
        // z0 z2 - 1/2 z1^2 in three variables: rank 3
        let v3 = zvars(3);
        let q3 = Poly::from_terms(&v3, &[(rint(1), &[1, 0, 1]), (rat(-1, 2), &[0, 2, 0])]);
        assert_eq!(q3.essential_variable_count().unwrap(), 3);

        // the same quadric viewed in four variables stays rank 3
        let v4 = zvars(4);
        let q4 = Poly::from_terms(
            &v4,
            &[(rint(1), &[1, 0, 1, 0]), (rat(-1, 2), &[0, 2, 0, 0])],
        );
        assert_eq!(q4.essential_variable_count().unwrap(), 3);

        let sq = Poly::from_terms(&v4, &[(rint(1), &[2, 0, 0, 0])]);
        assert_eq!(sq.essential_variable_count().unwrap(), 1);

        let nonhom = Poly::var(&v3, 0).add(&Poly::one(&v3));
        assert_eq!(
            nonhom.essential_variable_count(),
            Err(PolyError::NotHomogeneous)
        );
    }

    #[test]
    fn homogeneous_degree_examples() {
        let v = zvars(3);
        let q = Poly::from_terms(&v, &[(rint(1), &[1, 0, 1]), (rat(-1, 2), &[0, 2, 0])]);
        assert_eq!(q.homogeneous_degree(), Some(2));
        let bad = Poly::var(&v, 0).add(&Poly::var(&v, 1).pow(2));
        assert_eq!(bad.homogeneous_degree(), None);
    }

    #[test]
    fn normalize_scalar_examples() {
        let v = zvars(3);
        let p = Poly::from_terms(&v, &[(rint(2), &[1, 0, 1]), (rint(-1), &[0, 2, 0])]);
        let n = p.normalize_scalar().unwrap();
        assert_eq!(
            n,
            Poly::from_terms(&v, &[(rint(1), &[1, 0, 1]), (rat(-1, 2), &[0, 2, 0])])
        );
        assert_eq!(n.normalize_scalar().unwrap(), n);
        assert_eq!(
            Poly::zero(&v).normalize_scalar(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn pretty_string_matches_convention() {
        let v = zvars(4);
        let p = Poly::from_terms(
            &v,
            &[
                (rint(1), &[2, 0, 0, 1]),
                (rint(-1), &[1, 1, 1, 0]),
                (rat(1, 3), &[0, 3, 0, 0]),
            ],
        );
        assert_eq!(p.to_pretty_string(), "z0^2*z3 - z0*z1*z2 + 1/3*z1^3");
        assert_eq!(Poly::zero(&v).to_pretty_string(), "0");
    }

    #[test]
    fn eval_poly_substitution() {
        let v = zvars(2);
        let p = Poly::var(&v, 0).mul(&Poly::var(&v, 1));
        let t = VarSet::t_var();
        let tt = Poly::var(&t, 0);
        let r = p.eval_poly(&[tt.clone(), tt.clone()]).unwrap();
        assert_eq!(r, tt.pow(2));
    }
}
