//! Orbit structure on the hypersurface of an H-pair: membership in the
//! complement of the open orbit, orbit dimensions and kinds via the
//! annihilator test, the closure poset for the classified finite pairs,
//! fixed points, and limit points of one-parameter subgroups.

use crate::algebra::{Classification, QElement, SymElement};
use crate::hpair::{FiniteOrbitCertificate, HPair};
use crate::linalg::Subspace;
use crate::poly::{Poly, VarSet};
use crate::rat::{rat_sqrt, rint, rone, rzero, Rat};
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OrbitError {
    #[error("element is zero")]
    ZeroElement,
    #[error("element does not lie in the maximal ideal")]
    NotInMaximalIdeal,
    #[error("element does not lie in U")]
    NotInU,
    #[error("point does not lie on the hypersurface")]
    NotOnHypersurface,
    #[error("pair does not have certified finite orbits: {0}")]
    NotFinite(String),
    #[error("the two ruling lines are conjugate over a quadratic extension; no rational representatives exist")]
    IrrationalRulings,
    #[error("orbit analysis needs a chain or two-variable classification, found {0}")]
    UnsupportedClass(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitKind {
    Open,
    /// The ideal orbit of the point equals its `U`-orbit.
    Coincides,
    /// The ideal orbit splits into infinitely many `U`-orbits.
    InfiniteFiber,
}

impl std::fmt::Display for OrbitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrbitKind::Open => write!(f, "open"),
            OrbitKind::Coincides => write!(f, "coincides"),
            OrbitKind::InfiniteFiber => write!(f, "infinite-fiber"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitReport {
    pub representative: QElement,
    pub dimension: usize,
    pub kind: OrbitKind,
    pub annihilator: Subspace,
}

/// Orbits with their closure order; `(i, j)` records that the orbit of
/// report `i` lies in the closure of the orbit of report `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitPoset {
    pub reports: Vec<OrbitReport>,
    pub closure_relations: Vec<(usize, usize)>,
}

/// True iff `p(z)` lies on the hypersurface outside the open orbit,
/// i.e. `z^d` falls into `U`.
pub fn complement_member(h: &HPair, z: &QElement) -> Result<bool, OrbitError> {
    if z.is_zero() {
        return Err(OrbitError::ZeroElement);
    }
    if !h.algebra().in_maximal_ideal(z) {
        return Err(OrbitError::NotInMaximalIdeal);
    }
    let d = h.degree();
    let zd = h.algebra().pow_elem(z, d);
    Ok(h.u().contains(&zd.coords))
}

/// Orbit data of a point: the open orbit for unit-like `z`, otherwise the
/// annihilator-based dimension and the coincides/infinite-fiber dichotomy.
pub fn orbit_report(h: &HPair, z: &QElement) -> Result<OrbitReport, OrbitError> {
    let alg = h.algebra();
    let n = alg.ideal_dim();
    if z.is_zero() {
        return Err(OrbitError::ZeroElement);
    }
    if !alg.in_maximal_ideal(z) {
        // open orbit representative: the U-orbit of p(1) has dimension dim U
        return Ok(OrbitReport {
            representative: z.clone(),
            dimension: h.u().dim(),
            kind: OrbitKind::Open,
            annihilator: alg.annihilator(z),
        });
    }
    if !complement_member(h, z)? {
        return Err(OrbitError::NotOnHypersurface);
    }
    let ann = alg.annihilator(z);
    let dimension = n - ann.dim();
    let sum = ann.sum(h.u()).expect("same ambient");
    let kind = if sum == alg.maximal_ideal() {
        OrbitKind::Coincides
    } else {
        debug_assert!(h.u().contains_subspace(&ann));
        OrbitKind::InfiniteFiber
    };
    Ok(OrbitReport {
        representative: z.clone(),
        dimension,
        kind,
        annihilator: ann,
    })
}

/// Non-open orbit representatives for the classified families: the powers
/// of the chain generator, or the two ruling directions plus the socle for
/// the two-variable case.
pub fn standard_representatives(h: &HPair) -> Result<Vec<QElement>, OrbitError> {
    let alg = h.algebra();
    match alg.classify() {
        Classification::Chain(n) => {
            let g = h.chain_generator().expect("chain classification");
            let mut reps = Vec::new();
            let mut power = alg.mul_elems(&g, &g);
            for _ in 2..=n {
                reps.push(power.clone());
                power = alg.mul_elems(&power, &g);
            }
            Ok(reps)
        }
        Classification::TwoVariable => {
            let (r1, r2) = ruling_representatives(h)?;
            let socle = alg.socle();
            let fixed = QElement::from_coords(socle.basis()[0].clone());
            Ok(vec![r1, r2, fixed])
        }
        other => Err(OrbitError::UnsupportedClass(other.to_string())),
    }
}

/// Representatives for reporting on an arbitrary valid pair: the classified
/// families use their standard representatives; anything else is sampled
/// from the socle, the ideal basis vectors, and their pairwise sums,
/// keeping the points that land on the hypersurface (one per ideal orbit).
pub fn sampled_representatives(h: &HPair) -> Vec<QElement> {
    if let Ok(reps) = standard_representatives(h) {
        return reps;
    }
    let alg = h.algebra();
    let mut candidates: Vec<QElement> = alg
        .socle()
        .basis()
        .iter()
        .map(|v| QElement::from_coords(v.clone()))
        .collect();
    for i in 1..alg.dim() {
        candidates.push(alg.basis_element(i));
        for j in i + 1..alg.dim() {
            candidates.push(alg.basis_element(i).add(&alg.basis_element(j)));
        }
    }
    let mut reps: Vec<QElement> = Vec::new();
    for z in candidates {
        if z.is_zero() || !complement_member(h, &z).unwrap_or(false) {
            continue;
        }
        if !reps
            .iter()
            .any(|r| in_ideal_orbit(h, r, &z) || in_ideal_orbit(h, &z, r))
        {
            reps.push(z);
        }
    }
    reps
}

/// Rational representatives of the two ruling lines of the two-variable
/// quadric, found by splitting the binary quadratic form
/// `Q(a, b) = pi((a r1 + b r2)^2)` over the `U`-basis.
fn ruling_representatives(h: &HPair) -> Result<(QElement, QElement), OrbitError> {
    let alg = h.algebra();
    let rows = h.u().basis();
    assert_eq!(rows.len(), 2, "two-variable pairs have 2-dimensional U");
    let x = QElement::from_coords(rows[0].clone());
    let y = QElement::from_coords(rows[1].clone());
    let a = h.apply_pi(&alg.mul_elems(&x, &x));
    let b = h.apply_pi(&alg.mul_elems(&x, &y)) * rint(2);
    let c = h.apply_pi(&alg.mul_elems(&y, &y));
    let combine = |alpha: &Rat, beta: &Rat| -> QElement { x.scale(alpha).add(&y.scale(beta)) };
    if a.is_zero() && c.is_zero() {
        return Ok((x.clone(), y.clone()));
    }
    let disc = &b * &b - Rat::from_integer(4.into()) * &a * &c;
    let Some(s) = rat_sqrt(&disc) else {
        return Err(OrbitError::IrrationalRulings);
    };
    if a.is_zero() {
        // Q = beta (b alpha + c beta): roots (1, 0) and (-c, b)
        return Ok((x.clone(), combine(&-c, &b)));
    }
    let two_a = Rat::from_integer(2.into()) * &a;
    let r1 = combine(&(-&b + &s), &two_a);
    let r2 = combine(&(-&b - &s), &two_a);
    Ok((r1, r2))
}

/// Audit of the finiteness criterion: every standard complement
/// representative must have `Ann(z) + U = m`.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub per_rep: Vec<(QElement, bool)>,
    pub all_coincide: bool,
}

pub fn orbit_audit(h: &HPair) -> Result<AuditReport, OrbitError> {
    let alg = h.algebra();
    let m = alg.maximal_ideal();
    let reps = standard_representatives(h)?;
    let per_rep: Vec<(QElement, bool)> = reps
        .into_iter()
        .map(|z| {
            let ann = alg.annihilator(&z);
            let coincides = ann.sum(h.u()).expect("same ambient") == m;
            (z, coincides)
        })
        .collect();
    let all_coincide = per_rep.iter().all(|(_, c)| *c);
    Ok(AuditReport {
        per_rep,
        all_coincide,
    })
}

/// The full orbit poset of a certified finite pair.
pub fn orbit_poset(h: &HPair) -> Result<OrbitPoset, OrbitError> {
    let decision = h
        .finite_orbits()
        .map_err(|e| OrbitError::NotFinite(e.to_string()))?;
    if !decision.finite {
        return Err(OrbitError::NotFinite(decision.certificate.to_string()));
    }
    let alg = h.algebra();
    let open = OrbitReport {
        representative: alg.unit_element(),
        dimension: h.u().dim(),
        kind: OrbitKind::Open,
        annihilator: alg.annihilator(&alg.unit_element()),
    };
    match decision.certificate {
        FiniteOrbitCertificate::ChainCanonical { n, .. } => {
            let mut reports = vec![open];
            let reps = standard_representatives(h)?;
            for z in reps {
                reports.push(orbit_report(h, &z)?);
            }
            // dims n-1, n-2, ..., 0: a total chain in the closure order
            let mut relations = Vec::new();
            for i in 0..reports.len() {
                for j in 0..i {
                    relations.push((i, j));
                }
            }
            // closure containment, verified symbolically: the representative
            // g^k lies in p(<g^l, ..., g^n>) whenever k >= l
            let g = h.chain_generator().expect("chain");
            let mut powers = vec![g.clone()];
            for _ in 2..=n {
                powers.push(alg.mul_elems(powers.last().unwrap(), &g));
            }
            for k in 2..=n {
                for l in 2..=k {
                    let span = Subspace::from_vectors(
                        alg.dim(),
                        powers[l - 1..].iter().map(|p| p.coords.clone()).collect(),
                    );
                    debug_assert!(span.contains(&powers[k - 1].coords));
                }
            }
            Ok(OrbitPoset {
                reports,
                closure_relations: relations,
            })
        }
        FiniteOrbitCertificate::TwoVariableCanonical => {
            let reps = standard_representatives(h)?;
            let mut reports = vec![open];
            for z in &reps {
                reports.push(orbit_report(h, z)?);
            }
            // 0 = open, 1 and 2 = rulings, 3 = fixed point
            let relations = vec![(1, 0), (2, 0), (3, 0), (3, 1), (3, 2)];
            Ok(OrbitPoset {
                reports,
                closure_relations: relations,
            })
        }
        other => Err(OrbitError::NotFinite(other.to_string())),
    }
}

/// Fixed locus: the projectivized socle.
#[derive(Debug, Clone)]
pub struct FixedPoints {
    pub socle: Subspace,
    pub projective_dimension: usize,
    pub forces_infinitely_many_orbits: bool,
}

pub fn fixed_points(h: &HPair) -> FixedPoints {
    let socle = h.algebra().socle();
    let dim = socle.dim();
    FixedPoints {
        socle: socle.clone(),
        projective_dimension: dim.saturating_sub(1),
        forces_infinitely_many_orbits: dim > 1,
    }
}

/// The curve `t -> exp(t s) exp(u) * 1` and its unique limit point at
/// `t -> infinity` (the top t-degree coefficient vector).
#[derive(Debug, Clone, PartialEq)]
pub struct LimitResult {
    pub curve: Vec<Poly>,
    pub top_degree: u32,
    pub limit: QElement,
}

pub fn one_param_limit(
    h: &HPair,
    s: &QElement,
    base: &QElement,
) -> Result<LimitResult, OrbitError> {
    if s.is_zero() {
        return Err(OrbitError::ZeroElement);
    }
    if !h.u().contains(&s.coords) {
        return Err(OrbitError::NotInU);
    }
    if !base.is_zero() && !h.u().contains(&base.coords) {
        return Err(OrbitError::NotInU);
    }
    let alg = h.algebra();
    let tvar = VarSet::t_var();
    let t = Poly::var(&tvar, 0);
    let ts = SymElement {
        coords: s.coords.iter().map(|c| t.scale(c)).collect(),
    };
    let exp_ts = alg.exp(&ts).expect("s lies in the ideal");
    let exp_u = alg.exp(base).expect("base lies in the ideal");
    let exp_u_sym = SymElement {
        coords: exp_u
            .coords
            .iter()
            .map(|c| Poly::constant(&tvar, c.clone()))
            .collect(),
    };
    let curve = alg.mul_elems(&exp_ts, &exp_u_sym).coords;
    let top_degree = curve
        .iter()
        .filter_map(Poly::total_degree)
        .max()
        .expect("curve starts at the unit");
    let limit = QElement::from_coords(
        curve
            .iter()
            .map(|g| {
                g.terms()
                    .find(|(m, _)| m.degree() == top_degree)
                    .map_or_else(rzero, |(_, c)| c.clone())
            })
            .collect(),
    );
    debug_assert!(!limit.is_zero());
    Ok(LimitResult {
        curve,
        top_degree,
        limit,
    })
}

/// Projective equality of nonzero coordinate vectors.
pub fn projectively_equal(a: &QElement, b: &QElement) -> bool {
    if a.is_zero() || b.is_zero() || a.dim() != b.dim() {
        return false;
    }
    let i = a.coords.iter().position(|c| !c.is_zero()).expect("nonzero");
    if b.coords[i].is_zero() {
        return false;
    }
    let f = &b.coords[i] / &a.coords[i];
    a.scale(&f) == *b
}

/// True when `point` lies on the ideal orbit of `rep`, which is the affine
/// subspace `rep + rep*m`.
pub fn in_ideal_orbit(h: &HPair, rep: &QElement, point: &QElement) -> bool {
    let alg = h.algebra();
    let dim = alg.dim();
    let orbit_dirs: Vec<Vec<Rat>> = (1..dim)
        .map(|i| alg.mul_elems(rep, &alg.basis_element(i)).coords)
        .collect();
    let w = Subspace::from_vectors(dim, orbit_dirs);
    let mut vecs = w.basis().to_vec();
    vecs.push(rep.coords.clone());
    let v = Subspace::from_vectors(dim, vecs);
    v.contains(&point.coords) && !w.contains(&point.coords)
}

/// One orbit's entry in the one-parameter reachability table.
#[derive(Debug, Clone)]
pub struct OpOrbitEntry {
    pub representative: QElement,
    pub dimension: usize,
    pub reached: bool,
    /// `(s, base, limit)` witnessing reachability.
    pub witness: Option<(QElement, QElement, QElement)>,
}

#[derive(Debug, Clone)]
pub struct OpReport {
    pub entries: Vec<OpOrbitEntry>,
    pub all_reached: bool,
}

/// Searches one-parameter subgroups `S = <s>` over a structured family of
/// generators (each leading filtration level of `U`, alone and in pairwise
/// combinations) and a small grid of base points, and records which
/// non-open orbits contain a computed limit point.
///
/// This reports computational evidence: "not reached" means not reached
/// under this search, not a proof of unreachability.
pub fn op_condition_report(h: &HPair) -> Result<OpReport, OrbitError> {
    let poset = orbit_poset(h)?;
    let generators = candidate_generators(h);
    let bases = candidate_bases(h);
    let entries: Vec<OpOrbitEntry> = poset
        .reports
        .iter()
        .filter(|r| r.kind != OrbitKind::Open)
        .map(|r| {
            let mut witness = None;
            'search: for s in &generators {
                for base in &bases {
                    let lim = one_param_limit(h, s, base).expect("valid search point");
                    if in_ideal_orbit(h, &r.representative, &lim.limit) {
                        witness = Some((s.clone(), base.clone(), lim.limit));
                        break 'search;
                    }
                }
            }
            OpOrbitEntry {
                representative: r.representative.clone(),
                dimension: r.dimension,
                reached: witness.is_some(),
                witness,
            }
        })
        .collect();
    let all_reached = entries.iter().all(|e| e.reached);
    Ok(OpReport {
        entries,
        all_reached,
    })
}

fn candidate_generators(h: &HPair) -> Vec<QElement> {
    let rows: Vec<QElement> = h
        .u()
        .basis()
        .iter()
        .map(|v| QElement::from_coords(v.clone()))
        .collect();
    let mut out = rows.clone();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            out.push(rows[i].add(&rows[j]));
            out.push(rows[i].sub(&rows[j]));
        }
    }
    if matches!(h.algebra().classify(), Classification::TwoVariable) && rows.len() == 2 {
        out.push(rows[0].scale(&rint(2)).add(&rows[1]));
        out.push(rows[0].add(&rows[1].scale(&rint(2))));
    }
    out
}

fn candidate_bases(h: &HPair) -> Vec<QElement> {
    let mut out = vec![h.algebra().zero_element()];
    for v in h.u().basis() {
        let e = QElement::from_coords(v.clone());
        out.push(e.clone());
        out.push(e.scale(&-rone()));
        out.push(e.scale(&rint(2)));
    }
    out
}

/// Convenience wrapper: evaluate the defining equation at a point.
pub fn equation_value_at(h: &HPair, point: &QElement) -> Rat {
    h.equation().poly.eval_rat(&point.coords)
}
