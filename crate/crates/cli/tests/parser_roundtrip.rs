mod common;

use common::{random_expr, round_trips, CORPUS, CORPUS_SEED};
use proptest::prelude::*;
use quadric_cli::parse::parse;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn seeded_corpus_round_trips() {
    let mut r = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    for n in 0..CORPUS {
        let k = 2 + n % 3;
        let e = random_expr(&mut r, k, 5);
        round_trips(&e, k).unwrap();
    }
}

#[test]
fn printed_text_is_a_fixed_point() {
    let mut r = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let e = random_expr(&mut r, 3, 4);
        let s = e.to_string();
        assert_eq!(parse(&s, 3).unwrap().to_string(), s);
    }
}

#[test]
fn multiplication_order_is_kept() {
    let ab = parse("XX1*YY2", 2).unwrap();
    let ba = parse("YY2*XX1", 2).unwrap();
    assert_ne!(ab, ba);
}

proptest! {
    #[test]
    fn random_trees_round_trip(seed in any::<u64>(), k in 2usize..5, depth in 0u32..6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let e = random_expr(&mut r, k, depth);
        prop_assert_eq!(round_trips(&e, k), Ok(()));
    }

    #[test]
    fn arbitrary_text_never_panics(s in "[-+*^() xyXYdEQDeltaBopC0-9]{0,24}") {
        let _ = parse(&s, 3);
    }
}
