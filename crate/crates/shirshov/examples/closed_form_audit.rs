//! Compare the closed-form basis families against completion output for
//! every preset; discrepancies are printed rule by rule.

use shirshov::cli::closed_form_report;
use shirshov::coxeter::{preset_presentation, Family};

fn main() {
    let presets = [
        Family::A(3),
        Family::A(4),
        Family::B(3),
        Family::B(4),
        Family::D(3),
        Family::D(4),
        Family::AffineA(3),
    ];
    for family in presets {
        let report = closed_form_report(family, 18).expect("audit");
        let alphabet = preset_presentation(family).expect("preset").alphabet;
        print!(
            "{family}: {} family rules vs {} completed rules -> ",
            report.family_rules.len(),
            report.completion_rules.len()
        );
        if report.matches() {
            println!("exact match");
        } else {
            println!("discrepancy");
            for (label, l, r) in &report.invalid_instances {
                println!(
                    "  refuted instance {label}: {} = {}",
                    alphabet.format_word(l),
                    alphabet.format_word(r)
                );
            }
            for (l, r) in &report.family_only {
                println!(
                    "  family-only   : {}  ->  {}",
                    alphabet.format_word(l),
                    alphabet.format_word(r)
                );
            }
            for (l, r) in &report.completion_only {
                println!(
                    "  completion-only: {}  ->  {}",
                    alphabet.format_word(l),
                    alphabet.format_word(r)
                );
            }
        }
    }
}
