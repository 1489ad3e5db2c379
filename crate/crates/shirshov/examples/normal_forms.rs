//! Reduce words to canonical form and decide the word problem, with the
//! group model double-checking every answer.

use shirshov::completion::{complete, Caps};
use shirshov::coxeter::{preset_presentation, Family};
use shirshov::oracle::element_of;

fn main() {
    let family = Family::AffineA(3);
    let p = preset_presentation(family).expect("preset");
    let sys = complete(&p.relations, &p.alphabet, &Caps::with_max_word_len(12))
        .expect("completion")
        .system;

    let samples = [
        "s3 s0 s1 s0",
        "s1 s1",
        "s2 s1 s2 s2",
        "s3 s2 s1 s0 s3 s2 s1 s0",
        "s0 s1 s0 s1 s0 s1",
    ];
    for text in samples {
        let w = p.alphabet.parse_word(text).expect("parse");
        let nf = sys.normal_form(&w);
        let same = element_of(&w, family).unwrap() == element_of(&nf, family).unwrap();
        println!(
            "{:28} ->  {:24} (model agrees: {same})",
            text,
            p.alphabet.format_word(&nf)
        );
    }

    // two words denote the same group element iff their normal forms agree
    let u = p.alphabet.parse_word("s1 s0 s1 s2").expect("parse");
    let v = p.alphabet.parse_word("s0 s1 s0 s2").expect("parse");
    println!(
        "\nword problem: {} == {} ? {}",
        p.alphabet.format_word(&u),
        p.alphabet.format_word(&v),
        sys.normal_form(&u) == sys.normal_form(&v)
    );
}
