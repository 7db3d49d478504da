use wittsat::clifford::{omega_element, vector_action, DiagonalElement, EfbTerm, WittVector};
use wittsat::oracle::{build_gamma, DyadicMatrix};

#[test]
fn vector_action_matches_matrices() {
    for n in 1..=4 {
        let g = build_gamma(n).unwrap();
        let zero = DyadicMatrix::zero(g.dim());
        for psi in EfbTerm::all(n).unwrap() {
            let m = g.matrix_of_term(&psi).unwrap();
            for i in 0..n {
                for v in [WittVector::p(i), WittVector::q(i)] {
                    let lhs = g.vector(v).unwrap() * &m;
                    let rhs = match vector_action(v, &psi).unwrap() {
                        Some(t) => g.matrix_of_term(&t).unwrap(),
                        None => zero.clone(),
                    };
                    assert_eq!(lhs, rhs, "{v} acting on {psi}");
                }
            }
        }
    }
}

#[test]
fn literal_matrices_are_idempotent() {
    let g = build_gamma(3).unwrap();
    for pos in 0..3 {
        for negated in [false, true] {
            let m = g
                .matrix_of_diagonal(&DiagonalElement::literal(3, pos, negated).unwrap())
                .unwrap();
            assert_eq!(&m * &m, m);
        }
    }
}

#[test]
fn omega_is_product_of_generators() {
    for n in 1..=3 {
        let g = build_gamma(n).unwrap();
        let mut product = g.identity();
        for i in 1..=2 * n {
            product = &product * g.gamma(i);
        }
        assert_eq!(g.omega(), product);
        assert_eq!(
            g.matrix_of_diagonal(&omega_element(n).unwrap()).unwrap(),
            product
        );
    }
}
