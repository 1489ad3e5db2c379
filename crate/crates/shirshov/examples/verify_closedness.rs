//! Closedness both ways: the bare defining relations of the affine group
//! have nontrivial compositions, and completion repairs exactly those.

use shirshov::completion::{complete, verify_closed, Caps};
use shirshov::coxeter::{preset_presentation, Family};
use shirshov::rewrite::RewriteSystem;

fn main() {
    let p = preset_presentation(Family::AffineA(3)).expect("preset");

    let initial = RewriteSystem::new(p.alphabet.clone(), p.relations.clone()).expect("system");
    let residues = verify_closed(&initial);
    println!("initial relations: {} nontrivial compositions", residues.len());
    for res in &residues {
        let (lhs, rhs) = res.residue.as_ref().expect("nontrivial");
        println!(
            "  witness {:16} residue {}  ->  {}",
            p.alphabet.format_word(&res.ambiguity.witness),
            p.alphabet.format_word(lhs),
            p.alphabet.format_word(rhs)
        );
    }

    let completed = complete(&p.relations, &p.alphabet, &Caps::with_max_word_len(12))
        .expect("completion")
        .system;
    println!(
        "\ncompleted basis ({} rules): {} nontrivial compositions",
        completed.rules().len(),
        verify_closed(&completed).len()
    );
}
