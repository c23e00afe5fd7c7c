mod common;

use common::{is_lcd, min_weight, rank, rows_of};
use lcd_core::{FieldOrder, FqMatrix, LinearCode, DEFAULT_ENUMERATION_BUDGET};
use lcd_tools::paper::{
    all_codes, build_paper_code, claim, h25_lcd_matrix, paper_matrix, PaperCodeId,
};

/// Columns of `h` are nonzero and pairwise independent (distance >= 3), and
/// some three of them are dependent (distance exactly 3).
fn parity_check_distance_is_three(h: &FqMatrix) -> bool {
    let q = h.field().q();
    let cols: Vec<Vec<u8>> = (0..h.cols()).map(|j| h.column(j)).collect();
    let comb = |a: &[u8], ca: u8, b: &[u8], cb: u8| -> Vec<u8> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (ca * x + cb * y) % q)
            .collect()
    };
    let scalars: Vec<u8> = (1..q).collect();
    for (i, a) in cols.iter().enumerate() {
        if a.iter().all(|&x| x == 0) {
            return false;
        }
        for b in &cols[i + 1..] {
            if scalars.iter().any(|&c| comb(a, c, b, 0) == *b) {
                return false;
            }
        }
    }
    for (i, a) in cols.iter().enumerate() {
        for (j, b) in cols.iter().enumerate().skip(i + 1) {
            for &ca in &scalars {
                for &cb in &scalars {
                    let v = comb(a, ca, b, cb);
                    if cols
                        .iter()
                        .enumerate()
                        .any(|(l, c)| l != i && l != j && *c == v)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[test]
fn multiplicity_codes_match_their_rows() {
    let ids: Vec<_> = all_codes()
        .into_iter()
        .filter(|i| matches!(i, PaperCodeId::T(_)))
        .collect();
    assert_eq!(ids.len(), 29);
    for id in ids {
        let cl = claim(id).unwrap();
        let g = rows_of(build_paper_code(id).unwrap().generator());
        assert_eq!((g.len(), g[0].len()), (cl.k, cl.n), "{id}");
        assert!(is_lcd(3, &g), "{id} not LCD");
        assert_eq!(min_weight(3, &g), cl.d, "{id}");
    }
    let t30 = claim(PaperCodeId::T(30)).unwrap();
    assert_eq!((t30.n, t30.k, t30.d), (30, 4, 19));
}

#[test]
fn systematic_matrices_give_stated_codes() {
    let ids: Vec<_> = all_codes()
        .into_iter()
        .filter(|i| matches!(i, PaperCodeId::M { .. }))
        .collect();
    assert_eq!(ids.len(), 9);
    assert!(ids.contains(&PaperCodeId::M { n: 13, k: 6, d: 6 }));
    for id in ids {
        let cl = claim(id).unwrap();
        let c = build_paper_code(id).unwrap();
        let g = rows_of(c.generator());
        assert_eq!((g.len(), g[0].len()), (cl.k, cl.n), "{id}");
        assert!(is_lcd(3, &g), "{id} not LCD");
        let d = if cl.k <= 9 {
            min_weight(3, &g)
        } else {
            c.min_distance(DEFAULT_ENUMERATION_BUDGET).unwrap()
        };
        assert_eq!(d, cl.d, "{id}");
    }
}

#[test]
fn h26_is_an_lcd_distance_three_code() {
    let h = paper_matrix(PaperCodeId::H26).unwrap();
    assert_eq!((h.rows(), h.cols()), (5, 26));
    // C is LCD iff its dual is, i.e. iff H H^T is nonsingular
    assert!(is_lcd(2, &rows_of(&h)));
    assert!(parity_check_distance_is_three(&h));
    let c = build_paper_code(PaperCodeId::H26).unwrap();
    assert_eq!(
        (
            c.n(),
            c.k(),
            c.min_distance(DEFAULT_ENUMERATION_BUDGET).unwrap()
        ),
        (26, 21, 3)
    );
}

#[test]
fn h25_as_listed_has_a_singular_gram_matrix() {
    let h = paper_matrix(PaperCodeId::H25).unwrap();
    assert_eq!((h.rows(), h.cols()), (5, 25));
    let rows = rows_of(&h);
    assert_eq!(rank(2, &rows), 5);
    assert_eq!(rank(2, &common::gram(2, &rows)), 4);
    assert!(!build_paper_code(PaperCodeId::H25).unwrap().is_lcd());

    let alt = h25_lcd_matrix();
    assert!(is_lcd(2, &rows_of(&alt)));
    assert!(parity_check_distance_is_three(&alt));
    let c = LinearCode::from_parity_check(&alt).unwrap();
    assert_eq!((c.n(), c.k()), (25, 20));
}

#[test]
fn chain_codes_are_lcd_with_distance_three() {
    for i in 7..=32u32 {
        let id = PaperCodeId::M36Chain(i);
        let c = build_paper_code(id).unwrap();
        assert_eq!(
            (c.field(), c.n(), c.k()),
            (FieldOrder::Ternary, i as usize + 4, i as usize)
        );
        assert!(is_lcd(3, &rows_of(c.generator())), "{id}");
        assert!(parity_check_distance_is_three(&c.parity_check()), "{id}");
    }
}
