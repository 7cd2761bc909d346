//! Capped Buchberger completion and quotient-algebra construction.
//!
//! The default monomial order is graded-lex with variables in declaration
//! order, meaning later-declared variables are larger (`Q[x,y]` gives
//! `y > x`). Completion is deterministic given the generator order, and a
//! pair cap turns pathological inputs into clean errors.

use crate::algebra::LocalAlgebra;
use crate::parse::AlgebraPresentation;
use crate::poly::{Monomial, Poly, VarSet};
use crate::rat::{rone, rzero, Rat};
use std::cmp::Ordering;
use std::str::FromStr;
use thiserror::Error;

pub const DEFAULT_PAIR_CAP: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("pair cap exceeded after processing {processed} S-pairs")]
    PairCapExceeded { processed: usize },
    #[error("zero generator at position {0}")]
    ZeroGenerator(usize),
    #[error("staircase is infinite: the ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("quotient is the zero ring: 1 lies in the ideal")]
    UnitIdeal,
    #[error("quotient is not local: {witness} is not nilpotent")]
    NotLocal { witness: String },
    #[error("unknown monomial order {0:?}")]
    UnknownOrder(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Grlex,
    Grevlex,
    Lex,
}

/// A monomial order for completion. `reversed = false` ranks later-declared
/// variables higher; `reversed = true` flips the variable significance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub reversed: bool,
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder {
            kind: OrderKind::Grlex,
            reversed: false,
        }
    }
}

impl FromStr for TermOrder {
    type Err = GroebnerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (base, reversed) = match s.strip_suffix("-rev") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let kind = match base {
            "grlex" => OrderKind::Grlex,
            "grevlex" => OrderKind::Grevlex,
            "lex" => OrderKind::Lex,
            _ => return Err(GroebnerError::UnknownOrder(s.to_string())),
        };
        Ok(TermOrder { kind, reversed })
    }
}

impl TermOrder {
    /// Variable indices from most to least significant.
    fn significance(&self, nvars: usize) -> Vec<usize> {
        if self.reversed {
            (0..nvars).collect()
        } else {
            (0..nvars).rev().collect()
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let sig = self.significance(a.0.len());
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b, &sig),
            OrderKind::Grlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.lex_cmp(a, b, &sig)),
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in sig.iter().rev() {
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => {}
                        // smaller exponent on the least significant variable wins
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial, sig: &[usize]) -> Ordering {
        for &v in sig {
            match a.0[v].cmp(&b.0[v]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Leading term of a nonzero polynomial under this order.
    pub fn leading<'p>(&self, p: &'p Poly) -> (&'p Monomial, &'p Rat) {
        p.terms()
            .max_by(|(a, _), (b, _)| self.cmp(a, b))
            .expect("leading term of nonzero polynomial")
    }

    /// Sort key used for the quotient basis: degree first, then this order.
    fn graded_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| self.cmp(a, b))
    }
}

/// A reduced Groebner basis with its staircase of standard monomials.
#[derive(Debug, Clone)]
pub struct CompletedBasis {
    pub vars: VarSet,
    pub order: TermOrder,
    pub basis: Vec<Poly>,
    pub staircase: Staircase,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Staircase {
    Finite(Vec<Monomial>),
    Infinite,
}

/// Runs Buchberger completion with a processed-pair cap.
pub fn complete(
    pres: &AlgebraPresentation,
    order: TermOrder,
    pair_cap: usize,
) -> Result<CompletedBasis, GroebnerError> {
    for (i, g) in pres.generators.iter().enumerate() {
        if g.is_zero() {
            return Err(GroebnerError::ZeroGenerator(i));
        }
    }
    let mut basis: Vec<Poly> = Vec::new();
    for g in &pres.generators {
        let red = reduce(g, &basis, order);
        if !red.is_zero() {
            push_scaled(&mut basis, red, order);
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        // normal selection: smallest lcm degree, ties by order then indices
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, &(i1, j1)), (_, &(i2, j2))| {
                let l1 = pair_lcm(&basis, i1, j1, order);
                let l2 = pair_lcm(&basis, i2, j2, order);
                l1.degree()
                    .cmp(&l2.degree())
                    .then_with(|| order.cmp(&l1, &l2))
                    .then((i1, j1).cmp(&(i2, j2)))
            })
            .map(|(k, _)| k)
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(best);
        processed += 1;
        if processed > pair_cap {
            return Err(GroebnerError::PairCapExceeded { processed });
        }
        let (lm_i, _) = order.leading(&basis[i]);
        let (lm_j, _) = order.leading(&basis[j]);
        // product criterion
        if lm_i.mul(lm_j) == lm_i.lcm(lm_j) {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let red = reduce(&s, &basis, order);
        if !red.is_zero() {
            let new_idx = basis.len();
            push_scaled(&mut basis, red, order);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
    }
    let basis = auto_reduce(basis, order);
    let staircase = staircase_of(&basis, &pres.vars, order);
    Ok(CompletedBasis {
        vars: pres.vars.clone(),
        order,
        basis,
        staircase,
    })
}

fn push_scaled(basis: &mut Vec<Poly>, p: Poly, order: TermOrder) {
    let (_, lc) = order.leading(&p);
    let scaled = p.scale(&lc.recip());
    basis.push(scaled);
}

fn pair_lcm(basis: &[Poly], i: usize, j: usize, order: TermOrder) -> Monomial {
    let (a, _) = order.leading(&basis[i]);
    let (b, _) = order.leading(&basis[j]);
    a.lcm(b)
}

/// S-polynomial of two nonzero polynomials.
pub fn s_poly(f: &Poly, g: &Poly, order: TermOrder) -> Poly {
    let (lm_f, lc_f) = order.leading(f);
    let (lm_g, lc_g) = order.leading(g);
    let l = lm_f.lcm(lm_g);
    let mf = l.div(lm_f).expect("lcm divisible");
    let mg = l.div(lm_g).expect("lcm divisible");
    f.mul_monomial(&mf, &lc_f.recip())
        .sub(&g.mul_monomial(&mg, &lc_g.recip()))
}

/// Fully reduces `p` modulo `basis` under `order`; the remainder has no
/// term divisible by any basis leading monomial.
pub fn reduce(p: &Poly, basis: &[Poly], order: TermOrder) -> Poly {
    let mut rem = Poly::zero(p.vars());
    let mut work = p.clone();
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = order.leading(&work);
            (m.clone(), c.clone())
        };
        for g in basis {
            let (lm_g, lc_g) = order.leading(g);
            if let Some(q) = lm.div(lm_g) {
                work = work.sub(&g.mul_monomial(&q, &(&lc / lc_g)));
                continue 'outer;
            }
        }
        // leading term is irreducible: move it to the remainder
        work = work.sub(&Poly::monomial(p.vars(), lm.clone(), lc.clone()));
        rem = rem.add(&Poly::monomial(p.vars(), lm, lc));
    }
    rem
}

fn auto_reduce(mut basis: Vec<Poly>, order: TermOrder) -> Vec<Poly> {
    // drop elements whose leading monomial another element's divides
    let mut keep: Vec<Poly> = Vec::new();
    'next: for i in 0..basis.len() {
        let (lm_i, _) = order.leading(&basis[i]);
        for j in 0..basis.len() {
            if i == j {
                continue;
            }
            let (lm_j, _) = order.leading(&basis[j]);
            if lm_j.divides(lm_i) && (lm_j != lm_i || j < i) {
                continue 'next;
            }
        }
        keep.push(basis[i].clone());
    }
    basis = keep;
    // reduce every element against the others until stable
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<Poly> = basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let red = reduce(&basis[i], &others, order);
            let (_, lc) = order.leading(&red);
            let red = red.scale(&lc.recip());
            if red != basis[i] {
                basis[i] = red;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| order.cmp(order.leading(a).0, order.leading(b).0));
    basis
}

fn staircase_of(basis: &[Poly], vars: &VarSet, order: TermOrder) -> Staircase {
    let n = vars.len();
    let lms: Vec<Monomial> = basis.iter().map(|g| order.leading(g).0.clone()).collect();
    // finite iff every variable has a pure-power leading monomial
    let mut bounds = vec![0u32; n];
    for (i, bound) in bounds.iter_mut().enumerate() {
        let pure = lms
            .iter()
            .filter(|m| m.0.iter().enumerate().all(|(j, &e)| j == i || e == 0))
            .map(|m| m.0[i])
            .min();
        match pure {
            Some(b) => *bound = b,
            None => return Staircase::Infinite,
        }
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial(exps.clone());
        if !lms.iter().any(|lm| lm.divides(&m)) {
            out.push(m);
        }
        // odometer over the exponent box
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| order.graded_cmp(a, b));
                return Staircase::Finite(out);
            }
            exps[i] += 1;
            if exps[i] >= bounds[i].max(1) {
                exps[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

impl CompletedBasis {
    /// Unique fully reduced remainder modulo the completed basis.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        reduce(p, &self.basis, self.order)
    }

    pub fn staircase_monomials(&self) -> Result<&[Monomial], GroebnerError> {
        match &self.staircase {
            Staircase::Finite(m) => Ok(m),
            Staircase::Infinite => Err(GroebnerError::NotZeroDimensional),
        }
    }

    /// Quotient algebra on the staircase basis, with the unit first. The
    /// quotient must be local: every non-unit staircase monomial nilpotent.
    pub fn quotient_algebra(&self) -> Result<LocalAlgebra, GroebnerError> {
        let stairs = self.staircase_monomials()?.to_vec();
        if stairs.is_empty() || !stairs[0].is_one() {
            return Err(GroebnerError::UnitIdeal);
        }
        let dim = stairs.len();
        let names: Vec<String> = stairs
            .iter()
            .map(|m| {
                let p = Poly::monomial(&self.vars, m.clone(), rone());
                if m.is_one() {
                    "1".to_string()
                } else {
                    p.to_pretty_string()
                }
            })
            .collect();
        let coords_of = |p: &Poly| -> Vec<Rat> {
            let mut v = vec![rzero(); dim];
            for (m, c) in p.terms() {
                let idx = stairs
                    .iter()
                    .position(|s| s == m)
                    .expect("reduced to staircase");
                v[idx] = c.clone();
            }
            v
        };
        // locality: powers of every non-unit staircase monomial must vanish
        for m in stairs.iter().skip(1) {
            let gen = Poly::monomial(&self.vars, m.clone(), rone());
            let mut acc = gen.clone();
            let mut nilpotent = false;
            for _ in 0..=dim {
                acc = self.normal_form(&acc.mul(&gen));
                if acc.is_zero() {
                    nilpotent = true;
                    break;
                }
            }
            if !nilpotent {
                return Err(GroebnerError::NotLocal {
                    witness: gen.to_pretty_string(),
                });
            }
        }
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let prod = Poly::monomial(&self.vars, stairs[i].mul(&stairs[j]), rone());
                table[i][j] = coords_of(&self.normal_form(&prod));
            }
        }
        LocalAlgebra::new(names, table).map_err(|e| GroebnerError::NotLocal {
            witness: e.to_string(),
        })
    }

    /// Coordinates of a polynomial's residue class in the staircase basis.
    pub fn residue_coords(&self, p: &Poly) -> Result<Vec<Rat>, GroebnerError> {
        let stairs = self.staircase_monomials()?;
        let nf = self.normal_form(p);
        let mut v = vec![rzero(); stairs.len()];
        for (m, c) in nf.terms() {
            let idx = stairs
                .iter()
                .position(|s| s == m)
                .expect("reduced to staircase");
            v[idx] = c.clone();
        }
        Ok(v)
    }
}

/// Convenience: parse, complete and build the quotient algebra.
pub fn algebra_from_presentation(
    text: &str,
    order: TermOrder,
    pair_cap: usize,
) -> Result<(LocalAlgebra, CompletedBasis), String> {
    let pres = crate::parse::parse_presentation(text).map_err(|e| e.to_string())?;
    let cb = complete(&pres, order, pair_cap).map_err(|e| e.to_string())?;
    let alg = cb.quotient_algebra().map_err(|e| e.to_string())?;
    Ok((alg, cb))
}
