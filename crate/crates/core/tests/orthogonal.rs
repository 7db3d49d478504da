use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wittsat::orthogonal::{
    intersect_dim, is_null_plane, mtnp_from_isometry, sample_orthogonal, sample_orthogonal_with,
    strict_membership, OrthogonalMatrix,
};
use wittsat::sat::Clause;

#[test]
fn haar_samples_are_orthogonal_with_balanced_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut positive = 0;
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let t = sample_orthogonal_with(3, &mut rng).unwrap();
        worst = worst.max(t.residual());
        positive += (t.det() > 0.0) as usize;
    }
    assert!(worst < 1e-12, "residual {worst}");
    let freq = positive as f64 / 10_000.0;
    assert!((0.45..=0.55).contains(&freq), "det = +1 frequency {freq}");
}

#[test]
fn sampling_is_reproducible() {
    let a = sample_orthogonal(5, 42).unwrap();
    let b = sample_orthogonal(5, 42).unwrap();
    assert_eq!(a.matrix(), b.matrix());
}

#[test]
fn planes_of_isometries_are_null_and_distinct() {
    for seed in 0..50 {
        let t = sample_orthogonal(4, seed).unwrap();
        let u = sample_orthogonal(4, seed + 500).unwrap();
        let (pt, pu) = (mtnp_from_isometry(&t), mtnp_from_isometry(&u));
        assert!(is_null_plane(&pt));
        assert!(intersect_dim(&pt, &pu).unwrap() < 4);
        assert_eq!(intersect_dim(&pt, &pt).unwrap(), 4);
    }
}

#[test]
fn random_isometries_avoid_the_clause_sets() {
    let c = Clause::from_dimacs(&[1, -3]).unwrap();
    assert!(strict_membership(
        &OrthogonalMatrix::diagonal(&[1, 1, -1]).unwrap(),
        &c
    ));
    for seed in 0..1000 {
        assert!(!strict_membership(&sample_orthogonal(3, seed).unwrap(), &c));
    }
}
