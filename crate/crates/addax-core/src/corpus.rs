//! Builders for the standard family of algebras and H-pairs the
//! verification suites sweep over, plus seeded random pair generation.

use crate::algebra::{LocalAlgebra, QElement, SymElement};
use crate::hpair::{dual_chain_algebra, HPair};
use crate::linalg::Subspace;
use crate::poly::{Poly, VarSet};
use crate::rat::{rat, rone, rzero, Rat};
use num::Zero;
use rand::rngs::StdRng;
use rand::Rng;

/// The chain algebra `Q[x]/(x^{n+1})` on the basis `1, x, ..., x^n`.
pub fn chain_algebra(n: usize) -> LocalAlgebra {
    let dim = n + 1;
    let mut names: Vec<String> = vec!["1".into(), "x".into()];
    for k in 2..dim {
        names.push(format!("x^{k}"));
    }
    let mut table = vec![vec![vec![rzero(); dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if i + j < dim {
                table[i][j][i + j] = rone();
            }
        }
    }
    LocalAlgebra::new(names, table).expect("well-shaped table")
}

/// `U_i = <x, ..., x^{i-1}, x^{i+1}, ..., x^n>` inside the chain algebra.
pub fn chain_u(n: usize, i: usize) -> Subspace {
    assert!((2..=n).contains(&i));
    let coords: Vec<usize> = (1..=n).filter(|&k| k != i).collect();
    Subspace::span_of_std(n + 1, &coords)
}

pub fn chain_pair(n: usize, i: usize) -> HPair {
    HPair::new(chain_algebra(n), chain_u(n, i)).expect("chain pairs are valid for i >= 2")
}

/// `Q[x,y]/(x^2, y^2)` on the basis `1, x, y, xy`.
pub fn two_var_algebra() -> LocalAlgebra {
    let names: Vec<String> = vec!["1".into(), "x".into(), "y".into(), "x*y".into()];
    let mut table = vec![vec![vec![rzero(); 4]; 4]; 4];
    for j in 0..4 {
        table[0][j][j] = rone();
        table[j][0][j] = rone();
    }
    table[1][2][3] = rone();
    table[2][1][3] = rone();
    // x^2 = y^2 = x*xy = y*xy = (xy)^2 = 0
    LocalAlgebra::new(names, table).expect("well-shaped table")
}

/// The Segre-quadric pair `(Q[x,y]/(x^2, y^2), <x, y>)`.
pub fn two_var_pair() -> HPair {
    HPair::new(two_var_algebra(), Subspace::span_of_std(4, &[1, 2])).expect("valid pair")
}

/// `Q[x,y]/(x^2, xy, y^2)`: two-dimensional socle, never finite-orbit.
pub fn fat_point_algebra() -> LocalAlgebra {
    let names: Vec<String> = vec!["1".into(), "x".into(), "y".into()];
    let mut table = vec![vec![vec![rzero(); 3]; 3]; 3];
    for j in 0..3 {
        table[0][j][j] = rone();
        table[j][0][j] = rone();
    }
    LocalAlgebra::new(names, table).expect("well-shaped table")
}

/// `K[y,z]/(y^n, z^2, zy)` on the basis `1, y, ..., y^{n-1}, z`.
pub fn dual_algebra(n: usize) -> LocalAlgebra {
    dual_chain_algebra(n)
}

/// The pair of the second action on a degenerate chain hypersurface:
/// `(K[y,z]/(y^n, z^2, zy), <y, ..., y^{n-2}, z>)`.
pub fn dual_pair(n: usize) -> HPair {
    let mut coords: Vec<usize> = (1..=n - 2).collect();
    coords.push(n);
    HPair::new(dual_algebra(n), Subspace::span_of_std(n + 1, &coords)).expect("valid pair")
}

/// A random valid chain H-pair over `Q[x]/(x^{n+1})` by rejection sampling
/// of small-integer subspaces.
pub fn random_chain_pair(n: usize, rng: &mut StdRng) -> HPair {
    let alg = chain_algebra(n);
    loop {
        let rows: Vec<Vec<Rat>> = (0..n - 1)
            .map(|_| {
                let mut v = vec![rzero(); n + 1];
                for c in v.iter_mut().skip(1) {
                    *c = rat(rng.gen_range(-3..=3), 1);
                }
                v
            })
            .collect();
        let u = Subspace::from_vectors(n + 1, rows);
        if u.dim() != n - 1 {
            continue;
        }
        if let Ok(h) = HPair::new(alg.clone(), u) {
            return h;
        }
    }
}

/// A random element of the maximal ideal with small rational coordinates.
pub fn random_ideal_element(alg: &LocalAlgebra, rng: &mut StdRng) -> QElement {
    let mut coords = vec![rzero(); alg.dim()];
    for c in coords.iter_mut().skip(1) {
        *c = rat(rng.gen_range(-4..=4), rng.gen_range(1..=3));
    }
    QElement::from_coords(coords)
}

/// A random element of `U` as a small-rational combination of its basis.
pub fn random_u_element(h: &HPair, rng: &mut StdRng) -> QElement {
    let mut out = h.algebra().zero_element();
    for v in h.u().basis() {
        let c = rat(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        out = out.add(&QElement::from_coords(v.clone()).scale(&c));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Chain { n: usize, i: usize },
    TwoVariable,
    Dual { n: usize },
    RandomChain { n: usize },
}

pub struct CorpusItem {
    pub name: String,
    pub family: Family,
    pub pair: HPair,
}

/// The deterministic corpus: all chain pairs `(n, i)` with
/// `2 <= i <= n <= max_n`, the two-variable pair, and the dual pairs for
/// `3 <= n <= max_n`.
pub fn standard_corpus(max_n: usize) -> Vec<CorpusItem> {
    let mut items = Vec::new();
    for n in 2..=max_n {
        for i in 2..=n {
            items.push(CorpusItem {
                name: format!("chain(n={n}, i={i})"),
                family: Family::Chain { n, i },
                pair: chain_pair(n, i),
            });
        }
    }
    items.push(CorpusItem {
        name: "two-variable".into(),
        family: Family::TwoVariable,
        pair: two_var_pair(),
    });
    for n in 3..=max_n {
        items.push(CorpusItem {
            name: format!("dual(n={n})"),
            family: Family::Dual { n },
            pair: dual_pair(n),
        });
    }
    items
}

/// Seeded random chain pairs appended to the corpus sweep.
pub fn random_corpus(max_n: usize, count: usize, rng: &mut StdRng) -> Vec<CorpusItem> {
    (0..count)
        .map(|k| {
            let n = rng.gen_range(2..=max_n.max(2));
            CorpusItem {
                name: format!("random-chain-{k}(n={n})"),
                family: Family::RandomChain { n },
                pair: random_chain_pair(n, rng),
            }
        })
        .collect()
}

/// The generic point of the open orbit, `exp(sum_j s_j u_j) * 1`, as a
/// symbolic element over the action parameters.
pub fn symbolic_open_orbit_point(h: &HPair) -> SymElement {
    let alg = h.algebra();
    let k = h.u().dim();
    let svars = VarSet::s_vars(k);
    let mut u = SymElement {
        coords: vec![Poly::zero(&svars); alg.dim()],
    };
    for (j, row) in h.u().basis().iter().enumerate() {
        let sj = Poly::var(&svars, j);
        for (c, coord) in row.iter().zip(u.coords.iter_mut()) {
            if !Zero::is_zero(c) {
                *coord = coord.add(&sj.scale(c));
            }
        }
    }
    alg.exp(&u).expect("u lies in the maximal ideal")
}

/// Master oracle: substituting the symbolic open-orbit point into the
/// defining equation must give the identically-zero polynomial.
pub fn equation_vanishes_symbolically(h: &HPair) -> bool {
    let eq = h.equation();
    let point = symbolic_open_orbit_point(h);
    let value = eq.poly.eval_poly(&point.coords).expect("matching arity");
    value.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn corpus_pairs_are_valid() {
        for item in standard_corpus(6) {
            assert!(
                item.pair.algebra().validate().is_empty(),
                "{} invalid",
                item.name
            );
        }
    }

    #[test]
    fn random_pairs_are_chain_classified() {
        let mut rng = StdRng::seed_from_u64(0);
        for item in random_corpus(5, 10, &mut rng) {
            assert!(matches!(
                item.pair.algebra().classify(),
                crate::algebra::Classification::Chain(_)
            ));
        }
    }

    #[test]
    fn random_corpus_is_seed_deterministic() {
        let mut a = StdRng::seed_from_u64(123);
        let mut b = StdRng::seed_from_u64(123);
        let ca = random_corpus(5, 5, &mut a);
        let cb = random_corpus(5, 5, &mut b);
        for (x, y) in ca.iter().zip(&cb) {
            assert_eq!(x.pair.u(), y.pair.u());
        }
    }
}
