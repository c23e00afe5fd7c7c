mod common;

use common::{gram, is_lcd, min_weight, rows_of};
use lcd_tools::family::{
    build_parity_family, pad_with_column_pairs, parity_family_gram, parity_family_matrix,
};
use lcd_tools::paper::h26_matrix;

#[test]
fn parity_family_matches_reference_checks() {
    for n in 3..=12 {
        for i in 2..n {
            let h = rows_of(&parity_family_matrix(n, i).unwrap());
            assert_eq!(
                gram(3, &h),
                rows_of(&parity_family_gram(n, i)),
                "n={n} i={i}"
            );
            assert!(is_lcd(3, &h), "n={n} i={i}");
            let c = build_parity_family(n, i).unwrap();
            assert_eq!((c.n(), c.k()), (n, n - i));
            if n - i <= 7 {
                assert_eq!(min_weight(3, &rows_of(c.generator())), 2, "n={n} i={i}");
            }
        }
    }
}

#[test]
fn parity_family_examples() {
    let h = rows_of(&parity_family_matrix(10, 2).unwrap());
    assert_eq!(gram(3, &h), vec![vec![0, 2], vec![2, 0]]);
    let c = build_parity_family(12, 4).unwrap();
    assert_eq!((c.n(), c.k()), (12, 8));
    let c = build_parity_family(3, 2).unwrap();
    assert_eq!((c.n(), c.k()), (3, 1));
    assert!(build_parity_family(2, 2).is_err());
    assert!(build_parity_family(5, 1).is_err());
}

#[test]
fn column_pairs_keep_the_gram_matrix() {
    let h = h26_matrix();
    for extra in [0usize, 2, 6] {
        let p = pad_with_column_pairs(&h, 26 + extra).unwrap();
        assert_eq!(gram(2, &rows_of(&p)), gram(2, &rows_of(&h)));
    }
    assert!(pad_with_column_pairs(&h, 27).is_err());
}
