//! Randomized invariants for the order, the ambiguity scanner and the
//! reduction machinery.

use proptest::prelude::*;

use shirshov::completion::{complete, Caps};
use shirshov::coxeter::{preset_presentation, Family};
use shirshov::rewrite::RewriteSystem;
use shirshov::words::{find_ambiguities, Alphabet, Ambiguity, AmbiguityKind, Word};

fn test_alphabet() -> Alphabet {
    Alphabet::new(
        vec!["s0".into(), "s1".into(), "s2".into(), "s3".into()],
        vec![3, 2, 1, 0],
    )
    .unwrap()
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..4, 0..=max_len).prop_map(Word::from_letters)
}

fn nonempty_word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..4, 1..=max_len).prop_map(Word::from_letters)
}

proptest! {
    #[test]
    fn deglex_is_total_and_antisymmetric(u in word_strategy(10), v in word_strategy(10)) {
        let a = test_alphabet();
        let uv = a.deglex(&u, &v).unwrap();
        let vu = a.deglex(&v, &u).unwrap();
        prop_assert_eq!(uv, vu.reverse());
        prop_assert_eq!(uv == std::cmp::Ordering::Equal, u == v);
    }

    #[test]
    fn deglex_is_transitive(
        u in word_strategy(8),
        v in word_strategy(8),
        w in word_strategy(8),
    ) {
        use std::cmp::Ordering::Less;
        let a = test_alphabet();
        if a.deglex(&u, &v).unwrap() == Less && a.deglex(&v, &w).unwrap() == Less {
            prop_assert_eq!(a.deglex(&u, &w).unwrap(), Less);
        }
    }

    #[test]
    fn deglex_is_a_monomial_order(
        u in word_strategy(8),
        v in word_strategy(8),
        left in word_strategy(5),
        right in word_strategy(5),
    ) {
        // u > v implies a·u·b > a·v·b
        use std::cmp::Ordering::Greater;
        let a = test_alphabet();
        if a.deglex(&u, &v).unwrap() == Greater {
            let framed_u = left.concat(&u).concat(&right);
            let framed_v = left.concat(&v).concat(&right);
            prop_assert_eq!(a.deglex(&framed_u, &framed_v).unwrap(), Greater);
        }
    }

    #[test]
    fn ambiguity_witnesses_recompose(
        u in nonempty_word_strategy(8),
        v in nonempty_word_strategy(8),
    ) {
        for amb in find_ambiguities(&u, &v).unwrap() {
            prop_assert!(amb.recomposes(&u, &v));
            match amb.kind {
                AmbiguityKind::Intersection => {
                    prop_assert!(amb.witness.len() < u.len() + v.len());
                }
                AmbiguityKind::Inclusion => prop_assert_eq!(&amb.witness, &u),
            }
        }
    }

    #[test]
    fn ambiguity_scan_is_exhaustive(
        u in nonempty_word_strategy(7),
        v in nonempty_word_strategy(7),
    ) {
        // every candidate margin pair that recomposes is reported
        let found = find_ambiguities(&u, &v).unwrap();
        for t in 1..u.len().min(v.len()) {
            let candidate = Ambiguity {
                kind: AmbiguityKind::Intersection,
                witness: u.concat(&v.factor(t, v.len())),
                left_margin: u.factor(0, u.len() - t),
                right_margin: v.factor(t, v.len()),
            };
            prop_assert_eq!(candidate.recomposes(&u, &v), found.contains(&candidate));
        }
    }
}

// The reduction-path invariants run on one fixed completed system; building
// it once keeps the proptest cases cheap.
fn affine_a3() -> &'static RewriteSystem {
    use std::sync::OnceLock;
    static SYS: OnceLock<RewriteSystem> = OnceLock::new();
    SYS.get_or_init(|| {
        let p = preset_presentation(Family::AffineA(3)).unwrap();
        complete(&p.relations, &p.alphabet, &Caps::with_max_word_len(12))
            .unwrap()
            .system
    })
}

proptest! {
    #[test]
    fn normal_forms_terminate_and_are_irreducible(w in word_strategy(30)) {
        let sys = affine_a3();
        let mut cur = w.clone();
        let mut steps = 0usize;
        while let Some((next, _, _)) = sys.reduce_once(&cur) {
            // each step strictly decreases deglex, so the chain is finite;
            // a generous explicit bound catches any non-termination early
            steps += 1;
            prop_assert!(steps <= 2 * w.len() * w.len() + 4);
            cur = next;
        }
        prop_assert!(sys.is_irreducible(&cur));
        prop_assert_eq!(cur, sys.normal_form(&w));
        let ord = sys.alphabet().deglex(&sys.normal_form(&w), &w).unwrap();
        prop_assert_ne!(ord, std::cmp::Ordering::Greater);
    }

    #[test]
    fn normal_form_is_sound_for_the_group(w in word_strategy(14)) {
        use shirshov::oracle::element_of;
        let sys = affine_a3();
        let nf = sys.normal_form(&w);
        prop_assert_eq!(
            element_of(&w, Family::AffineA(3)).unwrap(),
            element_of(&nf, Family::AffineA(3)).unwrap()
        );
    }
}
