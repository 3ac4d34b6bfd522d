use iwk_core::iwahori_weyl::IwElement;
use iwk_core::root_datum::RootDatum;
use iwk_oracles::suites::WORD_PRESETS;
use iwk_oracles::{bfs_length, cone_member, subword_leq};
use num_bigint::BigInt;
use proptest::prelude::*;

fn word_element(preset: usize, word: &[usize]) -> IwElement {
    let d = RootDatum::preset(WORD_PRESETS[preset % WORD_PRESETS.len()]).unwrap();
    let gens = IwElement::generators(&d);
    word.iter().fold(IwElement::identity(&d), |x, &i| &x * &gens[i % gens.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn length_agrees(p in 0usize..7, word in prop::collection::vec(0usize..4, 0..7)) {
        let x = word_element(p, &word);
        prop_assert_eq!(x.length(), bfs_length(&x).unwrap());
    }

    #[test]
    fn bruhat_agrees(p in 0usize..7, a in prop::collection::vec(0usize..4, 0..5), b in prop::collection::vec(0usize..4, 0..5)) {
        let x = word_element(p, &a);
        let y = word_element(p, &b);
        prop_assert_eq!(x.bruhat_leq(&y), subword_leq(&x, &y).unwrap());
    }

    #[test]
    fn cone_sums_are_members(c in prop::collection::vec(0i64..2, 2)) {
        let d = RootDatum::preset("SL3").unwrap();
        let gens: Vec<Vec<BigInt>> = (0..2).map(|i| d.simple_coroot(i).0).collect();
        let v: Vec<BigInt> = (0..2).map(|k| gens.iter().zip(&c).map(|(g, ci)| &g[k] * BigInt::from(*ci)).sum()).collect();
        prop_assert!(cone_member(&v, &gens).unwrap());
    }
}
