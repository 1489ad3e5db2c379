//! Gröbner–Shirshov bases for finitely presented monoids and groups given by
//! binomial (word = word) relations, with Coxeter-group presets.
//!
//! The toolkit computes and verifies noncommutative Gröbner bases by
//! Knuth–Bendix-style completion over the degree-lexicographic order,
//! enumerates reduced (irreducible) words through a forbidden-factor
//! automaton, audits basis rules against the alternating-word pattern
//! conjectured for Coxeter systems, and cross-validates everything against
//! brute-force group models (permutations, signed permutations, affine
//! permutations in window notation).
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --example complete_preset      # completion on preset groups
//! cargo run --example normal_forms        # word reduction and the word problem
//! cargo run --example verify_closedness   # composition checks both ways
//! cargo run --example growth_census       # growth series vs. Cayley BFS
//! cargo run --example hypothesis_audit    # the pattern counter-example
//! cargo run --example affine_blocks       # block-shaped reduced elements
//! cargo run --example closed_form_audit   # printed families vs. completion
//! ```
//!
//! The same functionality is scriptable through the `shirshov` binary; see
//! the README for the command reference.
//!
//! # Quick start
//!
//! ```
//! use shirshov::completion::{complete, Caps};
//! use shirshov::coxeter::{preset_presentation, Family};
//!
//! let p = preset_presentation(Family::A(3)).unwrap();
//! let result = complete(&p.relations, &p.alphabet, &Caps::default()).unwrap();
//! assert!(result.status.is_closed());
//! let w = p.alphabet.parse_word("s2 s1 s2").unwrap();
//! let nf = result.system.normal_form(&w);
//! assert_eq!(result.system.alphabet().format_word(&nf), "s1 s2 s1");
//! ```

pub mod cli;
pub mod completion;
pub mod coxeter;
pub mod enumerate;
pub mod hypothesis;
pub mod oracle;
pub mod rewrite;
pub mod words;

pub use completion::{complete, Caps, CompletionResult, CompletionStatus};
pub use coxeter::{CoxeterMatrix, Family, Presentation};
pub use rewrite::{RewriteSystem, Rule};
pub use words::{Alphabet, Word};

/// Errors shared across the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidInput(message.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }

    pub(crate) fn resource(message: impl Into<String>) -> Self {
        Error::Resource(message.into())
    }
}
