//! Property tests for the algebraic substrate: subspace lattice laws,
//! polynomial ring axioms, derivative and substitution identities.

use addax_core::linalg::{Matrix, Subspace};
use addax_core::poly::{Poly, VarSet};
use addax_core::rat::{rint, rone, rzero, Rat};
use proptest::prelude::*;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |entries| Matrix::new(rows, cols, entries.into_iter().map(rint).collect()))
}

fn small_subspace(ambient: usize) -> impl Strategy<Value = Subspace> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, ambient), 0..=ambient).prop_map(
        move |rows| {
            Subspace::from_vectors(
                ambient,
                rows.into_iter()
                    .map(|r| r.into_iter().map(rint).collect())
                    .collect(),
            )
        },
    )
}

fn small_poly(nvars: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
    let vars = VarSet::z_vars(nvars);
    proptest::collection::vec(
        (proptest::collection::vec(0..=max_deg, nvars), -4i64..=4),
        0..=5,
    )
    .prop_map(move |terms| {
        let t: Vec<(Rat, Vec<u32>)> = terms.into_iter().map(|(e, c)| (rint(c), e)).collect();
        let refs: Vec<(Rat, &[u32])> = t.iter().map(|(c, e)| (c.clone(), e.as_slice())).collect();
        Poly::from_terms(&vars, &refs)
    })
}

/// Invertible by construction: product of unitriangular factors.
fn invertible_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-2i64..=2, n * n).prop_map(move |entries| {
        let mut lower = Matrix::identity(n);
        let mut upper = Matrix::identity(n);
        let mut it = entries.into_iter();
        for i in 0..n {
            for j in 0..n {
                let v = rint(it.next().unwrap());
                if i > j {
                    lower.set(i, j, v);
                } else if i < j {
                    upper.set(i, j, v);
                }
            }
        }
        lower.mul(&upper)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn modular_law_for_subspaces(a in small_subspace(5), b in small_subspace(5)) {
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(sum.contains_subspace(&a));
        prop_assert!(a.contains_subspace(&meet));
    }

    #[test]
    fn kernel_rank_count(m in small_matrix(3, 5)) {
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).iter().all(num::Zero::is_zero));
        }
    }

    #[test]
    fn rref_is_idempotent_and_preserves_row_space(m in small_matrix(4, 4)) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r.clone());
        let s1 = Subspace::from_vectors(4, m.row_vecs());
        let s2 = Subspace::from_vectors(4, r.row_vecs());
        prop_assert_eq!(s1, s2);
    }

    #[test]
    fn ring_axioms(p in small_poly(3, 3), q in small_poly(3, 3), r in small_poly(3, 3)) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn leibniz_rule(p in small_poly(3, 3), q in small_poly(3, 3)) {
        for var in 0..3 {
            let lhs = p.mul(&q).partial_derivative(var);
            let rhs = p.partial_derivative(var).mul(&q).add(&p.mul(&q.partial_derivative(var)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn substitution_roundtrip(p in small_poly(3, 3), m in invertible_matrix(3)) {
        let inv = m.inverse().expect("unitriangular product");
        let there = p.substitute_linear(&m).unwrap();
        let back = there.substitute_linear(&inv).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn essential_count_is_substitution_invariant(exps in proptest::collection::vec((0u32..=2, 0u32..=2, 0u32..=2), 1..4), m in invertible_matrix(3)) {
        // build a homogeneous polynomial by padding each term to degree 3 with z0
        let vars = VarSet::z_vars(3);
        let mut p = Poly::zero(&vars);
        for (a, b, c) in exps {
            let total = a + b + c;
            if total > 3 { continue; }
            let filler = 3 - total;
            let term = Poly::from_terms(&vars, &[(rone(), &[a + filler, b, c])]);
            p = p.add(&term);
        }
        prop_assume!(!p.is_zero());
        let moved = p.substitute_linear(&m).unwrap();
        prop_assume!(!moved.is_zero());
        prop_assert_eq!(
            p.essential_variable_count().unwrap(),
            moved.essential_variable_count().unwrap()
        );
    }

    #[test]
    fn normalize_scalar_idempotent_and_scale_invariant(p in small_poly(3, 3), num in 1i64..=5, den in 1i64..=5) {
        prop_assume!(!p.is_zero());
        let n1 = p.normalize_scalar().unwrap();
        prop_assert_eq!(n1.normalize_scalar().unwrap(), n1.clone());
        let c = Rat::new(num.into(), den.into());
        prop_assert_eq!(p.scale(&c).normalize_scalar().unwrap(), n1.clone());
        prop_assert_eq!(p.scale(&-c).normalize_scalar().unwrap(), n1);
    }

    #[test]
    fn gcd_divides_both(p in small_poly(2, 2), q in small_poly(2, 2)) {
        prop_assume!(!p.is_zero() || !q.is_zero());
        let g = p.gcd(&q).unwrap();
        if !p.is_zero() {
            prop_assert!(p.div_exact(&g).is_some());
        }
        if !q.is_zero() {
            prop_assert!(q.div_exact(&g).is_some());
        }
    }

    #[test]
    fn squarefree_divides_and_is_coprime_to_partials(p in small_poly(2, 2)) {
        prop_assume!(!p.is_zero());
        let s = p.squarefree_part().unwrap();
        prop_assert!(p.div_exact(&s).is_some());
        // squarefreeness in characteristic zero: the joint gcd of s with
        // all its partials is constant (per-variable gcds need not be,
        // e.g. gcd(z0*z1, z1))
        let mut g = s.clone();
        for var in 0..2 {
            let d = s.partial_derivative(var);
            if !d.is_zero() {
                g = g.gcd(&d).unwrap();
            }
        }
        prop_assert!(g.is_constant());
    }
}

#[test]
fn zero_vector_is_in_every_subspace() {
    let s = Subspace::span_of_std(4, &[1, 3]);
    assert!(s.contains(&vec![rzero(); 4]));
}
