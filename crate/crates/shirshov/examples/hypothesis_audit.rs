//! Audit completed bases against the alternating-word pattern: finite types
//! match throughout, while the affine basis contains rules the pattern
//! cannot express.

use shirshov::completion::{complete, Caps};
use shirshov::coxeter::{preset_matrix, preset_presentation, Family};
use shirshov::hypothesis::{audit_basis, Mode, Verdict};

fn audit(family: Family, mode: Mode) {
    let p = preset_presentation(family).expect("preset");
    let sys = complete(&p.relations, &p.alphabet, &Caps::with_max_word_len(18))
        .expect("completion")
        .system;
    let (matrix, _, _) = preset_matrix(family).expect("preset");
    let report = audit_basis(&sys, &matrix, mode);
    println!(
        "{family} ({mode:?}): {} rules, {} initial, {} matched, {} fail",
        report.reports.len(),
        report.initial,
        report.matched,
        report.no_match
    );
    for r in &report.reports {
        if let Verdict::NoMatch(reason) = &r.verdict {
            let rule = &sys.rules()[r.rule_id];
            println!(
                "  cannot express {}  ->  {}\n    ({reason})",
                p.alphabet.format_word(&rule.lhs),
                p.alphabet.format_word(&rule.rhs)
            );
        }
    }
}

fn main() {
    for family in [Family::A(3), Family::B(3), Family::D(4)] {
        audit(family, Mode::Strict);
    }
    println!();
    audit(Family::AffineA(3), Mode::Strict);
    println!();
    audit(Family::AffineA(3), Mode::Relaxed);
}
