//! Every connected positive word with a non-trivial closure, knots and
//! links alike, reaches square-prefix form.

use hopfplumb::corpus::necklaces;
use hopfplumb_core::braid::DEFAULT_SEARCH_BUDGET;
use hopfplumb_core::BraidWord;

const MAX_CROSSINGS: usize = 10;

fn check_prefix(w: &BraidWord, m: usize) {
    let g: Vec<usize> = w.generators().collect();
    assert!(g.len() >= 2 && g[0] == m && g[1] == m, "{w:?}");
    let mut pos = 2;
    for want in (1..m).rev() {
        let start = pos;
        while pos < g.len() && g[pos] == want {
            pos += 1;
        }
        assert!(pos > start, "{w:?}: missing run of σ{want}");
    }
}

#[test]
fn normalize_all_connected_words() {
    let mut count = 0usize;
    for s in 2..=MAX_CROSSINGS + 1 {
        for c in (s - 1)..=MAX_CROSSINGS {
            if c + 1 == s {
                continue; // b1 = 0: the closure is the unknot
            }
            for letters in necklaces(s, c, 1) {
                let w = BraidWord::new(s, letters).unwrap();
                let n = w
                    .normalize_to_square(DEFAULT_SEARCH_BUDGET)
                    .unwrap_or_else(|e| panic!("{w:?}: {e}"));
                check_prefix(&n.word, n.m);
                assert_eq!(n.word.square_prefix(), Some(n.m));
                assert_eq!(n.word.first_betti(), w.first_betti());
                assert_eq!(n.word.component_count(), w.component_count());
                count += 1;
            }
        }
    }
    println!("{count} words normalized");
}
