use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wittsat::clifford::{DiagSymbol, DiagonalElement, Pattern};
use wittsat::oracle::brute_force;
use wittsat::sat::{
    count_models, encode_formula, encode_formula_with, parse_dimacs, random_formula,
    serialize_dimacs, Assignment, ClauseOrder, CnfFormula, EncodeOptions,
};

fn formula(n: usize, m: usize, seed: u64) -> CnfFormula {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_formula(n, m, n.min(4), &mut rng)
}

fn diagonal() -> impl Strategy<Value = DiagonalElement> {
    let symbol = prop_oneof![
        Just(DiagSymbol::QP),
        Just(DiagSymbol::PQ),
        Just(DiagSymbol::Id)
    ];
    let term = (prop::collection::vec(symbol, 4), -5i64..=5);
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        DiagonalElement::from_terms(
            4,
            terms
                .into_iter()
                .map(|(s, c)| (Pattern::from_symbols(&s), c.into())),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn dimacs_roundtrip(n in 1usize..12, m in 0usize..30, seed: u64) {
        let f = formula(n, m, seed);
        let g = parse_dimacs(&serialize_dimacs(&f)).unwrap();
        prop_assert_eq!(g.n(), f.n());
        prop_assert_eq!(g.clauses(), f.clauses());
        prop_assert!(g.meta.warnings.is_empty());
    }

    #[test]
    fn evaluation_is_multiplicative(a in diagonal(), b in diagonal(), bits in 0u64..16) {
        let sigma = Assignment::from_bits(4, bits);
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.eval_at(&sigma).unwrap(), a.eval_at(&sigma).unwrap() * b.eval_at(&sigma).unwrap());
        let sum = a.try_add(&b).unwrap();
        prop_assert_eq!(sum.eval_at(&sigma).unwrap(), a.eval_at(&sigma).unwrap() + b.eval_at(&sigma).unwrap());
    }

    #[test]
    fn product_is_commutative(a in diagonal(), b in diagonal()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn clause_order_does_not_change_s(n in 1usize..8, m in 0usize..16, seed: u64) {
        let f = formula(n, m, seed);
        let s = encode_formula(&f).unwrap();
        let mut reversed = f.clauses().to_vec();
        reversed.reverse();
        prop_assert_eq!(&encode_formula(&f.with_clauses(reversed)).unwrap(), &s);
        let opts = EncodeOptions { order: ClauseOrder::Activity, ..EncodeOptions::default() };
        prop_assert_eq!(&encode_formula_with(&f, &opts).unwrap().0, &s);
    }

    #[test]
    fn s_is_idempotent_and_counts_models(n in 1usize..9, m in 0usize..20, seed: u64) {
        let f = formula(n, m, seed);
        let s = encode_formula(&f).unwrap();
        prop_assert_eq!(&s.mul(&s).unwrap(), &s);
        let truth = brute_force(&f).unwrap();
        prop_assert_eq!(count_models(&f).unwrap(), truth.models.len().into());
        for bits in 0..1u64 << n {
            let sigma = Assignment::from_bits(n, bits);
            let v = s.eval_at(&sigma).unwrap();
            prop_assert_eq!(v, u8::from(f.evaluate(&sigma)).into());
        }
    }
}
