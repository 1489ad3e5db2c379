//! Block-shaped reduced elements of the affine group on five generators:
//! expand the displayed block families, test irreducibility, and show which
//! leading word fires when juxtaposition breaks down.

use shirshov::cli::affine_block_audit;

fn main() {
    let audit = affine_block_audit(4, 3, 18).expect("audit");
    let mut ok = 0usize;
    let mut broken = 0usize;
    for check in &audit.checks {
        if check.irreducible {
            ok += 1;
        } else {
            broken += 1;
            if let Some((lhs, pos)) = &check.violation {
                if broken <= 5 {
                    println!(
                        "reducible: {} (family `{}`, exponents {:?}; {} fires at {pos})",
                        check.word, check.family, check.exponents, lhs
                    );
                }
            }
        }
    }
    println!("\n{ok} block words irreducible, {broken} reducible");
    println!(
        "negative control s0 s4 s1 s2 s3 s4 s0 s4 s3 reducible: {}",
        audit.negative_word_reducible
    );
}
