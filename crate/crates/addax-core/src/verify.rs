//! Cross-module verification: the eight classified hypersurface equations
//! and the randomized property suites behind `verify-invariants`.

use crate::algebra::LocalAlgebra;
use crate::corpus::{self, CorpusItem, Family};
use crate::exec::{map_range, map_slice, ExecMode};
use crate::hpair::{equations_match, HPair};
use crate::orbits;
use crate::poly::{Poly, VarSet};
use crate::rat::{rat, Rat};
use num::Zero;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// One row of the classified-equation table.
pub struct Table1Row {
    pub hypersurface_dim: usize,
    pub description: String,
    pub pair: HPair,
    pub expected: Poly,
    pub computed: Poly,
    pub matched: bool,
}

fn poly_of(vars: &VarSet, terms: &[(i64, i64, &[u32])]) -> Poly {
    let t: Vec<(Rat, &[u32])> = terms.iter().map(|&(p, q, e)| (rat(p, q), e)).collect();
    Poly::from_terms(vars, &t)
}

fn conic(vars: &VarSet) -> Poly {
    // z0 z2 - 1/2 z1^2, padded to the ambient variable count
    let n = vars.len();
    let mut e1 = vec![0u32; n];
    e1[0] = 1;
    e1[2] = 1;
    let mut e2 = vec![0u32; n];
    e2[1] = 2;
    poly_of(vars, &[(1, 1, &e1), (-1, 2, &e2)])
}

fn cubic(vars: &VarSet) -> Poly {
    let n = vars.len();
    let pad = |exps: &[u32]| {
        let mut v = exps.to_vec();
        v.resize(n, 0);
        v
    };
    poly_of(
        vars,
        &[
            (1, 1, &pad(&[2, 0, 0, 1])),
            (-1, 1, &pad(&[1, 1, 1, 0])),
            (1, 3, &pad(&[0, 3, 0, 0])),
        ],
    )
}

fn quartic(vars: &VarSet) -> Poly {
    let n = vars.len();
    let pad = |exps: &[u32]| {
        let mut v = exps.to_vec();
        v.resize(n, 0);
        v
    };
    poly_of(
        vars,
        &[
            (1, 1, &pad(&[3, 0, 0, 0, 1])),
            (-1, 1, &pad(&[2, 1, 0, 1, 0])),
            (-1, 2, &pad(&[2, 0, 2, 0, 0])),
            (1, 1, &pad(&[1, 2, 1, 0, 0])),
            (-1, 4, &pad(&[0, 4, 0, 0, 0])),
        ],
    )
}

fn quintic(vars: &VarSet) -> Poly {
    poly_of(
        vars,
        &[
            (1, 1, &[4, 0, 0, 0, 0, 1]),
            (-1, 1, &[3, 1, 0, 0, 1, 0]),
            (-1, 1, &[3, 0, 1, 1, 0, 0]),
            (1, 1, &[2, 2, 0, 1, 0, 0]),
            (1, 1, &[2, 1, 2, 0, 0, 0]),
            (-1, 1, &[1, 3, 1, 0, 0, 0]),
            (1, 5, &[0, 5, 0, 0, 0, 0]),
        ],
    )
}

/// Builds the eight classified pairs of hypersurface dimensions 1 through 4
/// (restricted to chain order `n <= max_n`) and compares their computed
/// equations against the expected closed forms.
pub fn table1_rows(max_n: usize) -> Vec<Table1Row> {
    let mut targets: Vec<(usize, String, HPair, Poly)> = Vec::new();
    if max_n >= 2 {
        targets.push((
            1,
            "conic: Veronese P^1 in P^2".into(),
            corpus::chain_pair(2, 2),
            conic(&VarSet::z_vars(3)),
        ));
    }
    if max_n >= 3 {
        let v4 = VarSet::z_vars(4);
        targets.push((
            2,
            "Segre quadric P^1 x P^1 in P^3".into(),
            corpus::two_var_pair(),
            poly_of(&v4, &[(1, 1, &[1, 0, 0, 1]), (-1, 1, &[0, 1, 1, 0])]),
        ));
        targets.push((
            2,
            "nondegenerate cubic in P^3".into(),
            corpus::chain_pair(3, 3),
            cubic(&v4),
        ));
        targets.push((
            2,
            "degenerate quadric of rank 3 in P^3".into(),
            corpus::chain_pair(3, 2),
            conic(&v4),
        ));
    }
    if max_n >= 4 {
        let v5 = VarSet::z_vars(5);
        targets.push((
            3,
            "nondegenerate quartic in P^4".into(),
            corpus::chain_pair(4, 4),
            quartic(&v5),
        ));
        targets.push((
            3,
            "degenerate cubic in P^4".into(),
            corpus::chain_pair(4, 3),
            cubic(&v5),
        ));
    }
    if max_n >= 5 {
        let v6 = VarSet::z_vars(6);
        targets.push((
            4,
            "nondegenerate quintic in P^5".into(),
            corpus::chain_pair(5, 5),
            quintic(&v6),
        ));
        targets.push((
            4,
            "degenerate quartic in P^5".into(),
            corpus::chain_pair(5, 4),
            quartic(&v6),
        ));
    }
    targets
        .into_iter()
        .map(|(dim, description, pair, expected)| {
            let computed = pair.equation().poly;
            let matched = equations_match(&computed, &expected);
            Table1Row {
                hypersurface_dim: dim,
                description,
                pair,
                expected,
                computed,
                matched,
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: String,
    pub runs: usize,
    pub failures: usize,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn from_flags(name: &str, flags: Vec<Option<String>>) -> Self {
        let runs = flags.len();
        let notes: Vec<String> = flags.into_iter().flatten().collect();
        SuiteOutcome {
            name: name.to_string(),
            runs,
            failures: notes.len(),
            notes,
        }
    }

    pub fn ok(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub suites: Vec<SuiteOutcome>,
    pub seed: u64,
    pub max_n: usize,
}

impl InvariantReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::ok)
    }
}

/// Distinct algebras appearing in the corpus.
fn corpus_algebras(max_n: usize) -> Vec<(String, LocalAlgebra)> {
    let mut out: Vec<(String, LocalAlgebra)> = Vec::new();
    for n in 2..=max_n {
        out.push((format!("chain(n={n})"), corpus::chain_algebra(n)));
    }
    out.push(("two-variable".into(), corpus::two_var_algebra()));
    for n in 3..=max_n {
        out.push((format!("dual(n={n})"), corpus::dual_algebra(n)));
    }
    out
}

pub fn validate_corpus_suite(mode: ExecMode, algebras: &[(String, LocalAlgebra)]) -> SuiteOutcome {
    let flags = map_slice(mode, algebras, |(name, alg)| {
        let violations = alg.validate();
        if violations.is_empty() {
            None
        } else {
            Some(format!("{name}: {}", violations.join("; ")))
        }
    });
    SuiteOutcome::from_flags("algebra-validation", flags)
}

pub fn exp_log_suite(
    mode: ExecMode,
    algebras: &[(String, LocalAlgebra)],
    seed: u64,
    samples: usize,
) -> SuiteOutcome {
    let tasks: Vec<(String, LocalAlgebra, u64)> = algebras
        .iter()
        .enumerate()
        .map(|(k, (name, alg))| (name.clone(), alg.clone(), seed.wrapping_add(k as u64)))
        .collect();
    let flags = map_slice(mode, &tasks, |(name, alg, algebra_seed)| {
        let mut rng = StdRng::seed_from_u64(*algebra_seed);
        for trial in 0..samples {
            let m = corpus::random_ideal_element(alg, &mut rng);
            let e = alg.exp(&m).expect("ideal element");
            let back = alg.log(&e).expect("unit series");
            if back != m {
                return Some(format!("{name}: log(exp(m)) != m at trial {trial}"));
            }
            let u = {
                let mut v = m.clone();
                v.coords[0] = crate::rat::rone();
                v
            };
            let fwd = alg
                .exp(&alg.log(&u).expect("unit series"))
                .expect("ideal element");
            if fwd != u {
                return Some(format!("{name}: exp(log(1+m)) != 1+m at trial {trial}"));
            }
        }
        None
    });
    SuiteOutcome::from_flags("exp-log-roundtrips", flags)
}

pub fn vanishing_suite(mode: ExecMode, items: &[CorpusItem]) -> SuiteOutcome {
    let small: Vec<&CorpusItem> = items
        .iter()
        .filter(|it| it.pair.algebra().dim() <= 6)
        .collect();
    let flags = map_slice(mode, &small, |item| {
        if corpus::equation_vanishes_symbolically(&item.pair) {
            None
        } else {
            Some(format!(
                "{}: equation does not vanish on the open orbit",
                item.name
            ))
        }
    });
    SuiteOutcome::from_flags("equation-vanishing", flags)
}

pub fn nondegeneracy_agreement_suite(mode: ExecMode, items: &[CorpusItem]) -> SuiteOutcome {
    let flags = map_slice(mode, items, |item| {
        let alg = item.pair.is_nondegenerate_algebraic();
        let eq = item.pair.is_nondegenerate_equation();
        if alg == eq {
            None
        } else {
            Some(format!(
                "{}: socle criterion {alg} vs essential-variable {eq}",
                item.name
            ))
        }
    });
    SuiteOutcome::from_flags("nondegeneracy-agreement", flags)
}

pub fn finite_vs_audit_suite(mode: ExecMode, items: &[CorpusItem]) -> SuiteOutcome {
    let chains: Vec<&CorpusItem> = items
        .iter()
        .filter(|it| matches!(it.family, Family::Chain { .. } | Family::RandomChain { .. }))
        .collect();
    let flags = map_slice(mode, &chains, |item| {
        let decision = item.pair.finite_orbits().expect("chain pair");
        let audit = orbits::orbit_audit(&item.pair).expect("chain pair");
        if decision.finite == audit.all_coincide {
            None
        } else {
            Some(format!(
                "{}: classification says finite={}, audit says {}",
                item.name, decision.finite, audit.all_coincide
            ))
        }
    });
    SuiteOutcome::from_flags("finite-orbits-vs-audit", flags)
}

pub fn dual_equation_suite(mode: ExecMode, max_n: usize) -> SuiteOutcome {
    let ns: Vec<usize> = (3..=max_n).collect();
    let flags = map_slice(mode, &ns, |&n| {
        let original = corpus::chain_pair(n, n - 1);
        let dual = original.dual_hpair().expect("index n-1");
        let ok = equations_match(&dual.equation().poly, &original.equation().poly)
            && !dual.finite_orbits().expect("classified").finite;
        if ok {
            None
        } else {
            Some(format!("dual(n={n}): equation or orbit count mismatch"))
        }
    });
    SuiteOutcome::from_flags("dual-equation", flags)
}

/// Limit points of generic one-parameter subgroups: with a nonzero leading
/// coefficient the limit is the top power point; every limit satisfies the
/// equation; translation by a base point acts as expected.
pub fn limit_point_suite(mode: ExecMode, max_n: usize, seed: u64, samples: usize) -> SuiteOutcome {
    let mut pairs: Vec<(String, HPair)> = Vec::new();
    for n in 2..=max_n {
        pairs.push((format!("chain(n={n}, i={n})"), corpus::chain_pair(n, n)));
        if n >= 3 {
            pairs.push((
                format!("chain(n={n}, i={})", n - 1),
                corpus::chain_pair(n, n - 1),
            ));
        }
    }
    let tasks: Vec<(String, HPair, u64)> = pairs
        .into_iter()
        .enumerate()
        .map(|(k, (name, p))| (name, p, seed.wrapping_add(1000 + k as u64)))
        .collect();
    let flags = map_slice(mode, &tasks, |(name, h, pair_seed)| {
        let alg = h.algebra();
        let n = alg.dim() - 1;
        let top = alg.basis_element(n);
        let eq = h.equation();
        let mut rng = StdRng::seed_from_u64(*pair_seed);
        for trial in 0..samples {
            let mut s = corpus::random_u_element(h, &mut rng);
            // force a nonzero leading coefficient on the generator x
            if s.coords[1].is_zero() {
                s = s.add(&alg.basis_element(1));
            }
            let u = corpus::random_u_element(h, &mut rng);
            let lim = orbits::one_param_limit(h, &s, &u).expect("valid input");
            if !orbits::projectively_equal(&lim.limit, &top) {
                return Some(format!(
                    "{name}: generic limit missed the top power at trial {trial}"
                ));
            }
            if !eq.poly.eval_rat(&lim.limit.coords).is_zero() {
                return Some(format!(
                    "{name}: limit off the hypersurface at trial {trial}"
                ));
            }
            let origin = orbits::one_param_limit(h, &s, &alg.zero_element()).expect("valid");
            let translated = alg.mul_elems(&alg.exp(&u).expect("in U"), &origin.limit);
            if !orbits::projectively_equal(&lim.limit, &translated) {
                return Some(format!(
                    "{name}: translation equivariance failed at trial {trial}"
                ));
            }
        }
        None
    });
    SuiteOutcome::from_flags("limit-points", flags)
}

/// Both readings of the reduced top layer must give the same normality
/// verdict across the corpus.
pub fn normality_convention_suite(mode: ExecMode, items: &[CorpusItem]) -> SuiteOutcome {
    let flags = map_slice(mode, items, |item| {
        let rep = item.pair.normality();
        if rep.conventions_agree() {
            None
        } else {
            Some(format!(
                "{}: radical-once says {}, squarefree says {}",
                item.name, rep.normal, rep.normal_by_squarefree
            ))
        }
    });
    SuiteOutcome::from_flags("normality-conventions", flags)
}

/// Runs every suite and collects the counts.
pub fn verify_invariants(
    max_n: usize,
    seed: u64,
    exp_log_samples: usize,
    limit_samples: usize,
    mode: ExecMode,
) -> InvariantReport {
    let algebras = corpus_algebras(max_n);
    let mut items = corpus::standard_corpus(max_n);
    let mut rng = StdRng::seed_from_u64(seed);
    items.extend(corpus::random_corpus(max_n, 20, &mut rng));
    let suites = vec![
        validate_corpus_suite(mode, &algebras),
        exp_log_suite(mode, &algebras, seed, exp_log_samples),
        vanishing_suite(mode, &items),
        nondegeneracy_agreement_suite(mode, &items),
        finite_vs_audit_suite(mode, &items),
        dual_equation_suite(mode, max_n),
        limit_point_suite(mode, max_n, seed, limit_samples),
        normality_convention_suite(mode, &items),
    ];
    InvariantReport {
        suites,
        seed,
        max_n,
    }
}

/// Sweeps the whole corpus through the classification and audit; used by
/// benchmarks and the CLI classify path.
pub fn classification_sweep(mode: ExecMode, items: &[CorpusItem]) -> Vec<bool> {
    map_slice(mode, items, |item| {
        item.pair.finite_orbits().expect("classified").finite
    })
}

/// Batch of exp/log roundtrips, used by the benchmark suite.
pub fn exp_log_batch(mode: ExecMode, alg: &LocalAlgebra, seed: u64, count: usize) -> usize {
    let results = map_range(mode, count, |k| {
        let mut rng = StdRng::seed_from_u64(seed.wrapping_add(k as u64));
        let m = corpus::random_ideal_element(alg, &mut rng);
        let back = alg.log(&alg.exp(&m).expect("ideal")).expect("unit");
        usize::from(back == m)
    });
    results.into_iter().sum()
}
