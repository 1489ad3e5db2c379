//! Run completion on a few preset Coxeter groups and print the resulting
//! bases.

use shirshov::completion::{complete, Caps};
use shirshov::coxeter::{preset_presentation, Family};

fn main() {
    for family in [Family::A(3), Family::B(3), Family::AffineA(3)] {
        let p = preset_presentation(family).expect("preset");
        let caps = Caps::with_max_word_len(12);
        let result = complete(&p.relations, &p.alphabet, &caps).expect("completion");
        println!(
            "{family}: {:?}, {} rules ({} compositions examined, {} nontrivial)",
            result.status,
            result.system.rules().len(),
            result.stats.compositions_examined,
            result.stats.nontrivial
        );
        for rule in result.system.rules() {
            println!(
                "  {}  ->  {}",
                p.alphabet.format_word(&rule.lhs),
                p.alphabet.format_word(&rule.rhs)
            );
        }
        println!();
    }
}
