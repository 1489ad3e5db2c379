//! Growth series from the forbidden-factor automaton, cross-validated
//! against breadth-first search over the concrete group models.

use shirshov::completion::{complete, Caps};
use shirshov::coxeter::{preset_presentation, Family};
use shirshov::enumerate::{growth, stream_irreducible};
use shirshov::oracle::cayley_growth;

fn main() {
    for (family, max_len) in [
        (Family::A(3), 7),
        (Family::B(3), 10),
        (Family::D(4), 13),
        (Family::AffineA(3), 8),
    ] {
        let p = preset_presentation(family).expect("preset");
        let sys = complete(&p.relations, &p.alphabet, &Caps::with_max_word_len(18))
            .expect("completion")
            .system;
        let series = growth(&sys, max_len);
        let oracle = cayley_growth(family, max_len).expect("oracle BFS");
        println!("{family}:");
        for k in 0..=max_len {
            let mark = if series.counts[k] == oracle.counts[k] { "ok" } else { "MISMATCH" };
            println!("  length {k:2}: {:8} words   {mark}", series.counts[k].to_string());
        }
        match &series.total {
            Some(t) => println!("  total: {t} (finite group)"),
            None => println!("  total: infinite"),
        }
        println!();
    }

    // streaming: coset representatives are the irreducible words with a
    // fixed first letter
    let p = preset_presentation(Family::AffineA(3)).expect("preset");
    let sys = complete(&p.relations, &p.alphabet, &Caps::with_max_word_len(12))
        .expect("completion")
        .system;
    let prefix = p.alphabet.parse_word("s3").expect("parse");
    println!("irreducible words starting with s3, length <= 3:");
    for w in stream_irreducible(&sys, 3, Some(&prefix)) {
        println!("  {}", p.alphabet.format_word(&w));
    }
}
