use confpoly::exactalg::{rat, Monomial, Polynomial, RatMatrix, Rational};
use num::{Integer, Signed, Zero};
use proptest::prelude::*;

/// Determinant by first-row cofactor expansion.
fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return rat(1);
    }
    let mut total = Rational::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][c] * cofactor_det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn square_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (0..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec((-4i64..=4).prop_map(rat), n), n))
}

fn any_matrix() -> impl Strategy<Value = (usize, Vec<Vec<Rational>>)> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| {
        (
            Just(c),
            prop::collection::vec(
                prop::collection::vec((-3i64..=3, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into())), c),
                r,
            ),
        )
    })
}

/// Sparse polynomial in 3 variables, degree ≤ 3, small coefficients.
fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u32..=2, 0u32..=2, 0u32..=1), -3i64..=3), 0..5).prop_map(|terms| {
        Polynomial::from_terms(
            3,
            terms
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::from_pairs([(0, a), (1, b), (2, c)]), rat(k))),
        )
    })
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into())), 3)
}

fn var(i: usize) -> Polynomial {
    Polynomial::var(3, i)
}

proptest! {
    #[test]
    fn bareiss_matches_cofactor_expansion(m in square_matrix(5)) {
        let n = m.len();
        let mat = RatMatrix::from_rows(n, m.clone()).unwrap();
        prop_assert_eq!(mat.det().unwrap(), cofactor_det(&m));
    }

    #[test]
    fn rank_plus_nullity((cols, rows) in any_matrix()) {
        let m = RatMatrix::from_rows(cols, rows).unwrap();
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.rows(), cols);
        for r in 0..k.rows() {
            prop_assert!(m.apply(k.row(r)).unwrap().iter().all(Zero::is_zero));
        }
        prop_assert_eq!(k.rank(), k.rows());
    }

    #[test]
    fn integer_kernel_spans_rational_kernel((cols, rows) in any_matrix()) {
        let m = RatMatrix::from_rows(cols, rows).unwrap();
        let z = m.integer_kernel();
        let k = m.kernel();
        prop_assert!(z.is_integral());
        prop_assert_eq!(z.rows(), k.rows());
        prop_assert!(z.row_space_contains(&k).unwrap());
        for r in 0..z.rows() {
            prop_assert!(m.apply(z.row(r)).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rationals_are_reduced(n in -1000i64..1000, d in 1i64..1000) {
        let q = Rational::new(n.into(), d.into());
        prop_assert!(q.denom().is_positive());
        prop_assert!(q.numer().gcd(q.denom()) == 1.into() || q.is_zero());
        if q.is_zero() {
            prop_assert_eq!(q.denom(), &1.into());
        }
    }

    #[test]
    fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in small_poly(), q in small_poly(), a in point()) {
        let (pa, qa) = (p.eval(&a).unwrap(), q.eval(&a).unwrap());
        prop_assert_eq!((&p * &q).eval(&a).unwrap(), &pa * &qa);
        prop_assert_eq!((&p + &q).eval(&a).unwrap(), &pa + &qa);
    }

    #[test]
    fn derivative_is_a_derivation(p in small_poly(), q in small_poly(), e in 0usize..3) {
        let lhs = (&p * &q).derivative(e).unwrap();
        let rhs = &(&p.derivative(e).unwrap() * &q) + &(&p * &q.derivative(e).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_formula(p in small_poly(), d in 0u32..=3) {
        let h = p.homogeneous_part(d);
        let mut euler = Polynomial::zero(3);
        for i in 0..3 {
            euler = &euler + &(&var(i) * &h.derivative(i).unwrap());
        }
        prop_assert_eq!(euler, h.scale(&rat(d as i64)));
    }

    #[test]
    fn taylor_shift_agrees_with_evaluation(p in small_poly(), a in point(), y in point()) {
        let shifted = p.translate(&a).unwrap();
        let sum: Vec<Rational> = a.iter().zip(&y).map(|(x, z)| x + z).collect();
        prop_assert_eq!(shifted.eval(&y).unwrap(), p.eval(&sum).unwrap());
    }

    #[test]
    fn proportionality_recovers_scale(p in small_poly(), c in prop_oneof![-5i64..=-1, 1i64..=5]) {
        let scaled = p.scale(&rat(c));
        if p.is_zero() {
            prop_assert_eq!(scaled.proportional(&p), Some(rat(1)));
        } else {
            prop_assert_eq!(scaled.proportional(&p), Some(rat(c)));
            // A1^3 lies outside the support of every generated polynomial
            prop_assert_eq!(p.proportional(&(&p + &var(0).pow(3))), None);
        }
    }

    #[test]
    fn text_is_canonical(p in small_poly(), q in small_poly()) {
        // equal polynomials print identically; order independent of construction
        let a = &p + &q;
        let b = &q + &p;
        prop_assert_eq!(a.to_string(), b.to_string());
        prop_assert!(!a.to_string().is_empty());
        prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
    }
}

#[test]
fn fixed_examples() {
    let m = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
    assert_eq!(m.rank(), 1);
    let k = m.kernel();
    assert_eq!(k.rows(), 1);
    assert_eq!(k.row(0)[0].clone() * rat(-1), k.row(0)[1].clone() * rat(2));
    let d = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
    assert_eq!((d.rank(), d.kernel().rows()), (1, 2));
    assert_eq!(RatMatrix::from_i64(&[&[1, 1], &[0, -1]]).det().unwrap(), rat(-1));
    assert_eq!(RatMatrix::from_i64(&[&[1, 0], &[-1, 2]]).det().unwrap(), rat(2));
    assert!(RatMatrix::from_i64(&[&[1, 2, 3]]).det().is_err());
}
