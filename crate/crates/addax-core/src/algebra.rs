//! Artinian local algebras given by structure constants, and the calculus
//! on them: element arithmetic, truncated exp/ln, the maximal-ideal
//! filtration, socle, annihilators, quotients and the classification filter
//! that decides which algebras can carry finitely many orbits.
//!
//! Convention: basis vector `e0` is the unit and `e1..en` span the maximal
//! ideal. The presentation pipeline guarantees this ordering; JSON input is
//! validated against it.

use crate::linalg::{Matrix, Subspace};
use crate::parse::{Expr, ParseError};
use crate::poly::Poly;
use crate::rat::{format_rat, parse_rat, rone, rzero, Rat};
use num::Zero;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("structure table has wrong shape: {0}")]
    BadShape(String),
    #[error("element does not lie in the maximal ideal")]
    NotInMaximalIdeal,
    #[error("unit coordinate must be 1")]
    UnitCoordinateNotOne,
    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("cannot quotient by the whole algebra")]
    QuotientByFullAlgebra,
    #[error("invalid algebra: {0}")]
    Invalid(String),
    #[error("invalid structure-constant JSON: {0}")]
    BadJson(String),
    #[error("unknown basis element {0:?}")]
    UnknownBasisElement(String),
    #[error("{0}")]
    Expr(String),
}

/// Coefficient scalars an element's coordinates can range over: exact
/// rationals for concrete elements, polynomials for symbolic ones.
pub trait Coeff: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rat) -> Self;
    fn is_zero(&self) -> bool;
}

impl Coeff for Rat {
    fn zero_like(&self) -> Self {
        rzero()
    }
    fn one_like(&self) -> Self {
        rone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Coeff for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        Poly::one(self.vars())
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn scale(&self, r: &Rat) -> Self {
        Poly::scale(self, r)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

/// An algebra element as a coordinate vector over the basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Element<C> {
    pub coords: Vec<C>,
}

pub type QElement = Element<Rat>;
pub type SymElement = Element<Poly>;

impl<C: Coeff> Element<C> {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Element<C>) -> Element<C> {
        assert_eq!(self.dim(), other.dim());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element<C>) -> Element<C> {
        assert_eq!(self.dim(), other.dim());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Element<C> {
        Element {
            coords: self.coords.iter().map(|a| a.scale(r)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Coeff::is_zero)
    }
}

impl QElement {
    pub fn from_coords(coords: Vec<Rat>) -> Self {
        Element { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Element {
            coords: coords
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect(),
        }
    }
}

/// How the classification filter rejects an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfiniteReason {
    /// dim m^k/m^{k+1} > 1 for some k >= 2.
    GradedPieceTooBig { level: usize, dim: usize },
    /// dim m/m^2 >= 3.
    EmbeddingDimTooBig { dim: usize },
    /// dim Soc(A) >= 2.
    SocleTooBig { dim: usize },
    /// Hilbert-Samuel (1,2,1,...,1) longer than (1,2,1).
    NilpotencyIndexTooBig { index: usize },
}

impl std::fmt::Display for InfiniteReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InfiniteReason::GradedPieceTooBig { level, dim } => {
                write!(f, "dim m^{level}/m^{} = {dim} > 1", level + 1)
            }
            InfiniteReason::EmbeddingDimTooBig { dim } => write!(f, "dim m/m^2 = {dim} >= 3"),
            InfiniteReason::SocleTooBig { dim } => write!(f, "socle dimension {dim} >= 2"),
            InfiniteReason::NilpotencyIndexTooBig { index } => {
                write!(
                    f,
                    "nilpotency index {index} > 2 with Hilbert-Samuel (1,2,1,...,1)"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Chain(usize),
    TwoVariable,
    NotFiniteOrbitCandidate(InfiniteReason),
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::Chain(n) => write!(f, "chain({n})"),
            Classification::TwoVariable => write!(f, "two-variable"),
            Classification::NotFiniteOrbitCandidate(r) => {
                write!(f, "no finite-orbit pair possible: {r}")
            }
        }
    }
}

/// Finite-dimensional commutative local algebra with nilpotent maximal ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    /// `table[i][j]` holds the coordinates of `e_i * e_j`.
    table: Vec<Vec<Vec<Rat>>>,
}

impl LocalAlgebra {
    pub fn new(basis_names: Vec<String>, table: Vec<Vec<Vec<Rat>>>) -> Result<Self, AlgebraError> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(AlgebraError::BadShape("empty basis".into()));
        }
        if table.len() != dim || table.iter().any(|r| r.len() != dim) {
            return Err(AlgebraError::BadShape(format!("table must be {dim}x{dim}")));
        }
        for row in &table {
            for v in row {
                if v.len() != dim {
                    return Err(AlgebraError::BadShape(format!(
                        "product vectors must have length {dim}"
                    )));
                }
            }
        }
        Ok(LocalAlgebra {
            dim,
            basis_names,
            table,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the maximal ideal.
    pub fn ideal_dim(&self) -> usize {
        self.dim - 1
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn product_coords(&self, i: usize, j: usize) -> &[Rat] {
        &self.table[i][j]
    }

    pub fn zero_element(&self) -> QElement {
        Element {
            coords: vec![rzero(); self.dim],
        }
    }

    pub fn unit_element(&self) -> QElement {
        self.basis_element(0)
    }

    pub fn basis_element(&self, i: usize) -> QElement {
        let mut coords = vec![rzero(); self.dim];
        coords[i] = rone();
        Element { coords }
    }

    /// The maximal ideal `m = <e1, ..., en>` as a subspace of the algebra.
    pub fn maximal_ideal(&self) -> Subspace {
        Subspace::span_of_std(self.dim, &(1..self.dim).collect::<Vec<_>>())
    }

    pub fn in_maximal_ideal<C: Coeff>(&self, a: &Element<C>) -> bool {
        a.coords[0].is_zero()
    }

    pub fn mul_elems<C: Coeff>(&self, a: &Element<C>, b: &Element<C>) -> Element<C> {
        assert_eq!(a.dim(), self.dim);
        assert_eq!(b.dim(), self.dim);
        let proto = a.coords[0].zero_like();
        let mut out = vec![proto; self.dim];
        for i in 0..self.dim {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b.coords[j].is_zero() {
                    continue;
                }
                let prod = a.coords[i].mul(&b.coords[j]);
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !Zero::is_zero(c) {
                        out[k] = out[k].add(&prod.scale(c));
                    }
                }
            }
        }
        Element { coords: out }
    }

    pub fn pow_elem<C: Coeff>(&self, a: &Element<C>, e: usize) -> Element<C> {
        let mut out = self.embed_one_like(a);
        for _ in 0..e {
            out = self.mul_elems(&out, a);
        }
        out
    }

    fn embed_one_like<C: Coeff>(&self, proto: &Element<C>) -> Element<C> {
        let zero = proto.coords[0].zero_like();
        let mut coords = vec![zero; self.dim];
        coords[0] = proto.coords[0].one_like();
        Element { coords }
    }

    /// Truncated exponential `1 + m + m^2/2 + ...`; exact because the
    /// series stops at the nilpotency index.
    pub fn exp<C: Coeff>(&self, m: &Element<C>) -> Result<Element<C>, AlgebraError> {
        if !self.in_maximal_ideal(m) {
            return Err(AlgebraError::NotInMaximalIdeal);
        }
        let mut out = self.embed_one_like(m);
        let mut term = m.clone();
        let mut factorial = rone();
        let mut k: usize = 1;
        while !term.is_zero() {
            if k > self.dim + 1 {
                return Err(AlgebraError::Invalid(
                    "maximal ideal is not nilpotent".into(),
                ));
            }
            out = out.add(&term.scale(&factorial.recip()));
            k += 1;
            factorial *= Rat::from_integer(k.into());
            term = self.mul_elems(&term, m);
        }
        Ok(out)
    }

    /// Truncated logarithm of `1 + m`; inverse to [`LocalAlgebra::exp`].
    pub fn log<C: Coeff>(&self, u: &Element<C>) -> Result<Element<C>, AlgebraError> {
        let unit_coord = &u.coords[0];
        if *unit_coord != unit_coord.one_like() {
            return Err(AlgebraError::UnitCoordinateNotOne);
        }
        let mut m = u.clone();
        m.coords[0] = unit_coord.zero_like();
        let mut out = Element {
            coords: vec![m.coords[0].zero_like(); self.dim],
        };
        let mut term = m.clone();
        let mut k: usize = 1;
        while !term.is_zero() {
            if k > self.dim + 1 {
                return Err(AlgebraError::Invalid(
                    "maximal ideal is not nilpotent".into(),
                ));
            }
            let sign = if k % 2 == 1 { rone() } else { -rone() };
            out = out.add(&term.scale(&(sign / Rat::from_integer(k.into()))));
            k += 1;
            term = self.mul_elems(&term, &m);
        }
        Ok(out)
    }

    /// `m^k` as a subspace: the span of all k-fold products.
    pub fn ideal_power(&self, k: usize) -> Subspace {
        assert!(k >= 1);
        let mut current = self.maximal_ideal();
        for _ in 1..k {
            if current.is_zero() {
                return current;
            }
            let mut products = Vec::new();
            for i in 1..self.dim {
                let ei = self.basis_element(i);
                for v in current.basis() {
                    let prod = self.mul_elems(&ei, &QElement::from_coords(v.clone()));
                    products.push(prod.coords);
                }
            }
            current = Subspace::from_vectors(self.dim, products);
        }
        current
    }

    /// Largest `N` with `m^N != 0`.
    pub fn nilpotency_index(&self) -> usize {
        if self.maximal_ideal().is_zero() {
            return 0;
        }
        let mut k = 1;
        // a nilpotent ideal dies by m^dim; callers validate non-nilpotent tables
        while k <= self.dim && !self.ideal_power(k + 1).is_zero() {
            k += 1;
        }
        k
    }

    /// `(dim A/m, dim m/m^2, dim m^2/m^3, ...)` down to the last nonzero.
    pub fn hilbert_samuel(&self) -> Vec<usize> {
        let mut seq = vec![1];
        let mut k = 1;
        let mut prev = self.maximal_ideal().dim();
        while prev > 0 {
            let next = self.ideal_power(k + 1).dim();
            seq.push(prev - next);
            prev = next;
            k += 1;
            if k > self.dim + 1 {
                break;
            }
        }
        seq
    }

    /// Matrix of multiplication by `z`: column `j` holds `z * e_j`.
    pub fn mul_matrix(&self, z: &QElement) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_elems(z, &self.basis_element(j));
            for i in 0..self.dim {
                m.set(i, j, col.coords[i].clone());
            }
        }
        m
    }

    /// `Soc(A) = {z : z * m = 0}`.
    pub fn socle(&self) -> Subspace {
        if self.dim == 1 {
            return Subspace::full(1);
        }
        let mut stacked = self.mul_matrix(&self.basis_element(1));
        for i in 2..self.dim {
            stacked = stacked.vcat(&self.mul_matrix(&self.basis_element(i)));
        }
        stacked.kernel()
    }

    /// `Ann(z) = {a : a z = 0}`.
    pub fn annihilator(&self, z: &QElement) -> Subspace {
        self.mul_matrix(z).kernel()
    }

    /// Smallest unital subalgebra containing `s`, by span-and-multiply
    /// iteration to a fixpoint.
    pub fn subalgebra_generated(&self, s: &Subspace) -> Subspace {
        assert_eq!(s.ambient_dim(), self.dim);
        let mut vecs: Vec<Vec<Rat>> = vec![self.unit_element().coords];
        vecs.extend(s.basis().iter().cloned());
        let mut current = Subspace::from_vectors(self.dim, vecs);
        loop {
            let mut vecs: Vec<Vec<Rat>> = current.basis().to_vec();
            for a in current.basis() {
                for b in current.basis() {
                    let prod = self.mul_elems(
                        &QElement::from_coords(a.clone()),
                        &QElement::from_coords(b.clone()),
                    );
                    vecs.push(prod.coords);
                }
            }
            let next = Subspace::from_vectors(self.dim, vecs);
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }

    /// Quotient by an ideal `J`, returning the quotient algebra on the
    /// complement coordinates together with the projection matrix.
    pub fn quotient_by_ideal(&self, j: &Subspace) -> Result<(LocalAlgebra, Matrix), AlgebraError> {
        assert_eq!(j.ambient_dim(), self.dim);
        if j.dim() == self.dim {
            return Err(AlgebraError::QuotientByFullAlgebra);
        }
        for v in j.basis() {
            for i in 1..self.dim {
                let prod =
                    self.mul_elems(&self.basis_element(i), &QElement::from_coords(v.clone()));
                if !j.contains(&prod.coords) {
                    return Err(AlgebraError::NotAnIdeal(format!(
                        "e{i} * ({}) escapes the subspace",
                        coords_string(v)
                    )));
                }
            }
        }
        let complement = j.complement_coords();
        if complement.first() != Some(&0) {
            return Err(AlgebraError::NotAnIdeal("subspace contains a unit".into()));
        }
        let qdim = complement.len();
        let mut proj = Matrix::zero(qdim, self.dim);
        for col in 0..self.dim {
            let reduced = j.reduce(&self.basis_element(col).coords);
            for (row, &c) in complement.iter().enumerate() {
                proj.set(row, col, reduced[c].clone());
            }
        }
        let names: Vec<String> = complement
            .iter()
            .map(|&c| self.basis_names[c].clone())
            .collect();
        let mut table = vec![vec![Vec::new(); qdim]; qdim];
        for (a, &ca) in complement.iter().enumerate() {
            for (b, &cb) in complement.iter().enumerate() {
                let prod = self.mul_elems(&self.basis_element(ca), &self.basis_element(cb));
                table[a][b] = proj.mul_vec(&prod.coords);
            }
        }
        Ok((LocalAlgebra::new(names, table)?, proj))
    }

    /// Full invariant check; returns a list of violations (empty = valid).
    pub fn validate(&self) -> Vec<String> {
        let mut violations = Vec::new();
        for i in 0..self.dim {
            for j in 0..i {
                if self.table[i][j] != self.table[j][i] {
                    violations.push(format!("not commutative: e{i}*e{j} != e{j}*e{i}"));
                }
            }
        }
        for j in 0..self.dim {
            let expected = self.basis_element(j).coords;
            if self.table[0][j] != expected {
                violations.push(format!("e0 is not a unit on e{j}"));
            }
        }
        for i in 1..self.dim {
            for j in 1..self.dim {
                if !Zero::is_zero(&self.table[i][j][0]) {
                    violations.push(format!(
                        "span(e1..e{}) is not an ideal: e{i}*e{j} has a unit component",
                        self.dim - 1
                    ));
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let ab = self.mul_elems(&self.basis_element(i), &self.basis_element(j));
                    let ab_c = self.mul_elems(&ab, &self.basis_element(k));
                    let bc = self.mul_elems(&self.basis_element(j), &self.basis_element(k));
                    let a_bc = self.mul_elems(&self.basis_element(i), &bc);
                    if ab_c != a_bc {
                        violations.push(format!("not associative on (e{i}, e{j}, e{k})"));
                    }
                }
            }
        }
        if violations.is_empty() && !self.ideal_power(self.dim).is_zero() {
            violations.push("maximal ideal is not nilpotent".into());
        }
        violations
    }

    /// Decides which finite-orbit family the algebra could belong to.
    pub fn classify(&self) -> Classification {
        let hs = self.hilbert_samuel();
        for (k, &d) in hs.iter().enumerate().skip(2) {
            if d > 1 {
                return Classification::NotFiniteOrbitCandidate(
                    InfiniteReason::GradedPieceTooBig { level: k, dim: d },
                );
            }
        }
        if hs.len() >= 2 && hs[1] >= 3 {
            return Classification::NotFiniteOrbitCandidate(InfiniteReason::EmbeddingDimTooBig {
                dim: hs[1],
            });
        }
        if hs.iter().all(|&d| d == 1) {
            return Classification::Chain(self.dim - 1);
        }
        // Hilbert-Samuel (1, 2, 1, ..., 1) from here on.
        let socle_dim = self.socle().dim();
        if socle_dim >= 2 {
            return Classification::NotFiniteOrbitCandidate(InfiniteReason::SocleTooBig {
                dim: socle_dim,
            });
        }
        if hs.len() != 3 {
            return Classification::NotFiniteOrbitCandidate(
                InfiniteReason::NilpotencyIndexTooBig {
                    index: hs.len() - 1,
                },
            );
        }
        Classification::TwoVariable
    }

    /// Evaluates a parsed expression where identifiers name basis elements;
    /// products and powers run through the structure constants.
    pub fn eval_expr(&self, expr: &Expr) -> Result<QElement, AlgebraError> {
        match expr {
            Expr::Num(r) => Ok(self.unit_element().scale(r)),
            Expr::Sym(name, _) => {
                let i = self
                    .basis_names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| AlgebraError::UnknownBasisElement(name.clone()))?;
                Ok(self.basis_element(i))
            }
            Expr::Add(a, b) => Ok(self.eval_expr(a)?.add(&self.eval_expr(b)?)),
            Expr::Sub(a, b) => Ok(self.eval_expr(a)?.sub(&self.eval_expr(b)?)),
            Expr::Mul(a, b) => Ok(self.mul_elems(&self.eval_expr(a)?, &self.eval_expr(b)?)),
            Expr::Pow(a, e) => Ok(self.pow_elem(&self.eval_expr(a)?, *e as usize)),
            Expr::Neg(a) => Ok(self.eval_expr(a)?.scale(&-rone())),
        }
    }

    /// Parses and evaluates an element expression such as `x + 2*x^3`.
    pub fn parse_element(&self, text: &str) -> Result<QElement, AlgebraError> {
        let expr = crate::parse::parse_expr(text)
            .map_err(|e: ParseError| AlgebraError::Expr(e.to_string()))?;
        self.eval_expr(&expr)
    }

    /// Structure-constant JSON: `{"dim", "basis", "table": [[i, j, [c...]]]}`.
    pub fn to_table_json(&self) -> Value {
        let mut entries = Vec::new();
        for i in 1..self.dim {
            for j in i..self.dim {
                entries.push(json!([
                    i,
                    j,
                    self.table[i][j].iter().map(format_rat).collect::<Vec<_>>()
                ]));
            }
        }
        json!({
            "dim": self.dim,
            "basis": self.basis_names,
            "table": entries,
        })
    }

    /// Parses the structure-constant JSON schema. Unit products are filled
    /// in automatically; every pair `1 <= i <= j` must be listed.
    pub fn from_table_json(v: &Value) -> Result<Self, AlgebraError> {
        let obj = v
            .as_object()
            .ok_or_else(|| AlgebraError::BadJson("expected object".into()))?;
        let dim = obj
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| AlgebraError::BadJson("missing numeric \"dim\"".into()))?
            as usize;
        let basis = obj
            .get("basis")
            .and_then(Value::as_array)
            .ok_or_else(|| AlgebraError::BadJson("missing \"basis\" array".into()))?
            .iter()
            .map(|b| {
                b.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| AlgebraError::BadJson("basis names must be strings".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if basis.len() != dim {
            return Err(AlgebraError::BadJson(format!(
                "dim {dim} does not match basis length {}",
                basis.len()
            )));
        }
        if dim == 0 {
            return Err(AlgebraError::BadJson("dim must be positive".into()));
        }
        let mut table = vec![vec![None::<Vec<Rat>>; dim]; dim];
        for j in 0..dim {
            table[0][j] = Some(unit_row(dim, j));
            table[j][0] = Some(unit_row(dim, j));
        }
        let entries = obj
            .get("table")
            .and_then(Value::as_array)
            .ok_or_else(|| AlgebraError::BadJson("missing \"table\" array".into()))?;
        for e in entries {
            let trip = e.as_array().filter(|a| a.len() == 3).ok_or_else(|| {
                AlgebraError::BadJson("table entries must be [i, j, coords]".into())
            })?;
            let i = trip[0]
                .as_u64()
                .ok_or_else(|| AlgebraError::BadJson("bad index".into()))?
                as usize;
            let j = trip[1]
                .as_u64()
                .ok_or_else(|| AlgebraError::BadJson("bad index".into()))?
                as usize;
            if i >= dim || j >= dim {
                return Err(AlgebraError::BadJson(format!(
                    "index ({i},{j}) out of range"
                )));
            }
            let coords = trip[2]
                .as_array()
                .filter(|a| a.len() == dim)
                .ok_or_else(|| {
                    AlgebraError::BadJson(format!("product ({i},{j}) must have {dim} coordinates"))
                })?
                .iter()
                .map(parse_coord)
                .collect::<Result<Vec<_>, _>>()?;
            table[i][j] = Some(coords.clone());
            table[j][i] = Some(coords);
        }
        let mut full = Vec::with_capacity(dim);
        for (i, row) in table.into_iter().enumerate() {
            let mut out_row = Vec::with_capacity(dim);
            for (j, cell) in row.into_iter().enumerate() {
                out_row.push(
                    cell.ok_or_else(|| {
                        AlgebraError::BadJson(format!("missing product ({i},{j})"))
                    })?,
                );
            }
            full.push(out_row);
        }
        LocalAlgebra::new(basis, full)
    }
}

fn unit_row(dim: usize, j: usize) -> Vec<Rat> {
    let mut v = vec![rzero(); dim];
    v[j] = rone();
    v
}

fn parse_coord(v: &Value) -> Result<Rat, AlgebraError> {
    match v {
        Value::String(s) => parse_rat(s).map_err(AlgebraError::BadJson),
        Value::Number(n) => n
            .as_i64()
            .map(|x| Rat::from_integer(x.into()))
            .ok_or_else(|| AlgebraError::BadJson(format!("non-integer coordinate {n}"))),
        other => Err(AlgebraError::BadJson(format!("bad coordinate {other}"))),
    }
}

pub fn coords_string(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(format_rat).collect();
    format!("[{}]", parts.join(", "))
}
