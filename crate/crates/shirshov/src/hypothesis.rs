//! The alternating-word pattern audit: word builders, equivalence modulo
//! commutations (trace equivalence), pattern matching of basis rules against
//! the conjectured product shape, and whole-basis audits.

use std::fmt;
use std::str::FromStr;

use crate::coxeter::CoxeterMatrix;
use crate::rewrite::{Rule, RewriteSystem};
use crate::words::{Alphabet, Letter, Word};
use crate::Error;

/// An alternating word `first second first ...` of a given length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlternatingWord {
    pub first: Letter,
    pub second: Letter,
    pub length: usize,
}

impl AlternatingWord {
    pub fn expand(&self) -> Word {
        Word::from_letters(
            (0..self.length)
                .map(|t| if t % 2 == 0 { self.first } else { self.second })
                .collect(),
        )
    }
}

/// The alternating word of length `m` starting with `s`.
pub fn m_word(s: Letter, s_prime: Letter, m: usize) -> Result<Word, Error> {
    if m == 0 {
        return Err(Error::invalid("alternating word length must be positive"));
    }
    if s == s_prime {
        return Err(Error::invalid("alternating word needs two distinct generators"));
    }
    Ok(AlternatingWord { first: s, second: s_prime, length: m }.expand())
}

fn project(w: &Word, a: Letter, b: Letter) -> Vec<Letter> {
    w.letters().iter().copied().filter(|&c| c == a || c == b).collect()
}

fn letter_counts(w: &Word, n: usize) -> Vec<usize> {
    let mut counts = vec![0usize; n];
    for &c in w.letters() {
        counts[c as usize] += 1;
    }
    counts
}

/// Equality in the trace monoid whose independent pairs are exactly the
/// commuting generator pairs (`m = 2`). Decided by the projection
/// characterization: words are equivalent iff they agree letterwise in
/// multiplicity and in the projection onto every dependent pair.
pub fn trace_equivalent(u: &Word, v: &Word, matrix: &CoxeterMatrix) -> bool {
    let n = matrix.size();
    if u.len() != v.len() {
        return false;
    }
    if letter_counts(u, n) != letter_counts(v, n) {
        return false;
    }
    for a in 0..n as Letter {
        for b in (a + 1)..n as Letter {
            if !matrix.commutes(a, b) && project(u, a, b) != project(v, a, b) {
                return false;
            }
        }
    }
    true
}

/// Necessary condition for `u` to extend to a trace of `w`: all projections
/// of `u` onto dependent pairs are prefixes of those of `w`.
fn trace_prefix(u: &Word, w: &Word, matrix: &CoxeterMatrix) -> bool {
    let n = matrix.size();
    if u.len() > w.len() {
        return false;
    }
    let cu = letter_counts(u, n);
    let cw = letter_counts(w, n);
    if cu.iter().zip(&cw).any(|(a, b)| a > b) {
        return false;
    }
    for a in 0..n as Letter {
        for b in (a + 1)..n as Letter {
            if !matrix.commutes(a, b) {
                let pu = project(u, a, b);
                let pw = project(w, a, b);
                if pw.len() < pu.len() || pw[..pu.len()] != pu[..] {
                    return false;
                }
            }
        }
    }
    true
}

/// A link of the pattern chain: the pair as written, tagged with the parity
/// of the preceding pair's braid order (the constraint source). The last
/// link is the closing pair whose full alternating word ends the left side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLink {
    pub pair: (Letter, Letter),
    pub after_even: bool,
}

/// A concrete factorization of a rule in the conjectured shape:
/// `(m-1)(head) (m-1)(link_1) ... (m-1)(link_{k}) m(link_{k+1})` on the left
/// and `m(head rev) (m-1)(link_1) ... (m-1)(link_{k+1})` on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternInstance {
    pub head: (Letter, Letter),
    pub chain: Vec<ChainLink>,
}

impl PatternInstance {
    /// Re-expands the two sides of the pattern.
    pub fn expand(&self, matrix: &CoxeterMatrix) -> Result<(Word, Word), Error> {
        let (s, sp) = self.head;
        let m = matrix
            .order(s, sp)
            .ok_or_else(|| Error::invalid("head pair has infinite order"))? as usize;
        let mut lhs = m_word(s, sp, m - 1)?;
        let mut rhs = m_word(sp, s, m)?;
        for (idx, link) in self.chain.iter().enumerate() {
            let (x, y) = link.pair;
            let mm = matrix
                .order(x, y)
                .ok_or_else(|| Error::invalid("chain pair has infinite order"))?
                as usize;
            let last = idx + 1 == self.chain.len();
            lhs = lhs.concat(&m_word(x, y, if last { mm } else { mm - 1 })?);
            rhs = rhs.concat(&m_word(x, y, mm - 1)?);
        }
        Ok((lhs, rhs))
    }
}

/// How strictly the pattern's side conditions are enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// The case-block as displayed: each pair is written ascending and its
    /// second component is pinned by the parity of the previous pair's
    /// braid order.
    Strict,
    /// The prose reading: the second component is still pinned by parity but
    /// the first component of each chain pair is free (either orientation).
    Relaxed,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "strict" => Ok(Mode::Strict),
            "relaxed" => Ok(Mode::Relaxed),
            other => Err(Error::invalid(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Trace-equivalent to a defining relation (involution or braid).
    InitialRelation,
    Matched(PatternInstance),
    NoMatch(String),
}

#[derive(Debug, Clone)]
pub struct MatchReport {
    pub rule_id: usize,
    pub verdict: Verdict,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::InitialRelation => write!(f, "initial-relation"),
            Verdict::Matched(_) => write!(f, "matched"),
            Verdict::NoMatch(reason) => write!(f, "no-match ({reason})"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct SearchOptions {
    parity: bool,
    ordered: bool,
}

struct Searcher<'a> {
    matrix: &'a CoxeterMatrix,
    alphabet: &'a Alphabet,
    lhs: &'a Word,
    rhs: &'a Word,
    opts: SearchOptions,
}

impl Searcher<'_> {
    /// The second component forced on the next pair by the previous pair as
    /// written: its own second component after an even braid order, its
    /// first after an odd one.
    fn forced_second(&self, prev: (Letter, Letter)) -> Option<Letter> {
        let m = self.matrix.order(prev.0, prev.1)?;
        Some(if m % 2 == 0 { prev.1 } else { prev.0 })
    }

    fn candidate_pairs(&self, prev: (Letter, Letter)) -> Vec<(Letter, Letter)> {
        let n = self.matrix.size() as Letter;
        let mut out = Vec::new();
        let push_if_valid = |x: Letter, y: Letter, out: &mut Vec<(Letter, Letter)>| {
            if x == y {
                return;
            }
            if self.opts.ordered && !self.alphabet.greater(y, x) {
                return;
            }
            if (x, y) == prev || (y, x) == prev {
                return; // neighbor pairs must differ
            }
            if self.matrix.order(x, y).is_none() {
                return;
            }
            out.push((x, y));
        };
        if self.opts.parity {
            if let Some(y) = self.forced_second(prev) {
                for x in 0..n {
                    push_if_valid(x, y, &mut out);
                }
            }
        } else {
            for x in 0..n {
                for y in 0..n {
                    push_if_valid(x, y, &mut out);
                }
            }
        }
        out
    }

    fn dfs(
        &self,
        l_acc: &Word,
        r_acc: &Word,
        prev: (Letter, Letter),
        chain: &mut Vec<ChainLink>,
    ) -> Option<Vec<ChainLink>> {
        for (x, y) in self.candidate_pairs(prev) {
            let m = self.matrix.order(x, y).expect("candidates have finite order") as usize;
            let after_even = self.matrix.order(prev.0, prev.1).is_some_and(|e| e % 2 == 0);
            // closing pair: full alternating word on the left, one short on
            // the right
            let full_l = l_acc.concat(&m_word(x, y, m).expect("valid pair"));
            let short_r = r_acc.concat(&m_word(x, y, m - 1).expect("valid pair"));
            if full_l.len() == self.lhs.len()
                && trace_equivalent(&full_l, self.lhs, self.matrix)
                && trace_equivalent(&short_r, self.rhs, self.matrix)
            {
                chain.push(ChainLink { pair: (x, y), after_even });
                return Some(chain.clone());
            }
            // chain link: one short on both sides
            let link_l = l_acc.concat(&m_word(x, y, m - 1).expect("valid pair"));
            let link_r = short_r;
            if link_l.len() < self.lhs.len()
                && trace_prefix(&link_l, self.lhs, self.matrix)
                && trace_prefix(&link_r, self.rhs, self.matrix)
            {
                chain.push(ChainLink { pair: (x, y), after_even });
                if let Some(found) = self.dfs(&link_l, &link_r, (x, y), chain) {
                    return Some(found);
                }
                chain.pop();
            }
        }
        None
    }

    fn search(&self) -> Option<PatternInstance> {
        let n = self.matrix.size() as Letter;
        for s in 0..n {
            for sp in 0..n {
                if s == sp || !self.alphabet.greater(s, sp) {
                    continue;
                }
                let Some(m) = self.matrix.order(s, sp) else { continue };
                let head_l = m_word(s, sp, m as usize - 1).expect("distinct pair");
                let head_r = m_word(sp, s, m as usize).expect("distinct pair");
                if !trace_prefix(&head_l, self.lhs, self.matrix)
                    || !trace_prefix(&head_r, self.rhs, self.matrix)
                {
                    continue;
                }
                let mut chain = Vec::new();
                if let Some(chain) = self.dfs(&head_l, &head_r, (s, sp), &mut chain) {
                    return Some(PatternInstance { head: (s, sp), chain });
                }
            }
        }
        None
    }
}

fn is_initial_relation(rule: &Rule, matrix: &CoxeterMatrix) -> bool {
    let (lhs, rhs) = (&rule.lhs, &rule.rhs);
    if lhs.len() == 2 && rhs.is_empty() && lhs.letters()[0] == lhs.letters()[1] {
        return true;
    }
    let n = matrix.size() as Letter;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let Some(m) = matrix.order(i, j) else { continue };
            let fwd = m_word(i, j, m as usize).expect("distinct");
            let bwd = m_word(j, i, m as usize).expect("distinct");
            if trace_equivalent(lhs, &fwd, matrix) && trace_equivalent(rhs, &bwd, matrix) {
                return true;
            }
        }
    }
    false
}

/// Matches one rule against the conjectured pattern.
///
/// The chain search is exhaustive: every factor contributes at least one
/// letter, so chains are bounded by the rule length and a `NoMatch` verdict
/// is a proof of non-matchability in the given mode, not a timeout. The
/// `NoMatch` reason names the nearest relaxation (if any) that would match.
pub fn matches_hypothesis(
    rule: &Rule,
    matrix: &CoxeterMatrix,
    alphabet: &Alphabet,
    mode: Mode,
) -> MatchReport {
    let verdict = (|| {
        if is_initial_relation(rule, matrix) {
            return Verdict::InitialRelation;
        }
        if rule.lhs.len() != rule.rhs.len() {
            return Verdict::NoMatch(
                "sides differ in length; the pattern's sides are equally long".into(),
            );
        }
        let search = |opts: SearchOptions| {
            Searcher { matrix, alphabet, lhs: &rule.lhs, rhs: &rule.rhs, opts }.search()
        };
        let strict = SearchOptions { parity: true, ordered: true };
        let free_first = SearchOptions { parity: true, ordered: false };
        let no_parity = SearchOptions { parity: false, ordered: false };
        match mode {
            Mode::Strict => {
                if let Some(instance) = search(strict) {
                    return Verdict::Matched(instance);
                }
                if search(free_first).is_some() {
                    return Verdict::NoMatch(
                        "matches only with a free first component (pair order violated)".into(),
                    );
                }
                if search(no_parity).is_some() {
                    return Verdict::NoMatch(
                        "matches only after dropping the parity constraint".into(),
                    );
                }
                Verdict::NoMatch("no factorization of the pattern shape exists".into())
            }
            Mode::Relaxed => {
                if let Some(instance) = search(free_first) {
                    return Verdict::Matched(instance);
                }
                if search(no_parity).is_some() {
                    return Verdict::NoMatch(
                        "matches only after dropping the parity constraint".into(),
                    );
                }
                Verdict::NoMatch("no factorization of the pattern shape exists".into())
            }
        }
    })();
    MatchReport { rule_id: rule.id, verdict }
}

/// Per-rule verdicts for a whole basis, with summary counts.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub reports: Vec<MatchReport>,
    pub initial: usize,
    pub matched: usize,
    pub no_match: usize,
}

impl AuditReport {
    pub fn failed_rule_ids(&self) -> Vec<usize> {
        self.reports
            .iter()
            .filter(|r| matches!(r.verdict, Verdict::NoMatch(_)))
            .map(|r| r.rule_id)
            .collect()
    }
}

/// Audits every rule of `sys` against the pattern.
pub fn audit_basis(sys: &RewriteSystem, matrix: &CoxeterMatrix, mode: Mode) -> AuditReport {
    let mut reports = Vec::with_capacity(sys.rules().len());
    let (mut initial, mut matched, mut no_match) = (0, 0, 0);
    for rule in sys.rules() {
        let report = matches_hypothesis(rule, matrix, sys.alphabet(), mode);
        match report.verdict {
            Verdict::InitialRelation => initial += 1,
            Verdict::Matched(_) => matched += 1,
            Verdict::NoMatch(_) => no_match += 1,
        }
        reports.push(report);
    }
    AuditReport { reports, initial, matched, no_match }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::{complete, Caps};
    use crate::coxeter::{preset_matrix, preset_presentation, Family};

    fn affine3() -> (RewriteSystem, CoxeterMatrix) {
        let p = preset_presentation(Family::AffineA(3)).unwrap();
        let sys = complete(&p.relations, &p.alphabet, &Caps::with_max_word_len(12))
            .unwrap()
            .system;
        let (matrix, _, _) = preset_matrix(Family::AffineA(3)).unwrap();
        (sys, matrix)
    }

    #[test]
    fn m_word_examples() {
        assert_eq!(m_word(2, 1, 3).unwrap(), Word::from([2, 1, 2]));
        assert_eq!(m_word(3, 1, 2).unwrap(), Word::from([3, 1]));
        assert_eq!(m_word(2, 1, 1).unwrap(), Word::from([2]));
        assert!(m_word(2, 1, 0).is_err());
        assert!(m_word(2, 2, 3).is_err());
    }

    #[test]
    fn trace_equivalence_basics() {
        let (_, matrix) = affine3();
        // s0 s2 = s2 s0 (commuting pair)
        assert!(trace_equivalent(&Word::from([0, 2]), &Word::from([2, 0]), &matrix));
        // s0 s1 != s1 s0 (braid pair)
        assert!(!trace_equivalent(&Word::from([0, 1]), &Word::from([1, 0]), &matrix));
        // s3 s1 s0 = s1 s3 s0
        assert!(trace_equivalent(
            &Word::from([3, 1, 0]),
            &Word::from([1, 3, 0]),
            &matrix
        ));
    }

    #[test]
    fn trace_equivalence_is_an_equivalence_and_refines_the_group() {
        use crate::oracle::element_of;
        let (_, matrix) = affine3();
        let mut state = 7u64;
        let mut rng = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 33) as usize
        };
        let rand_word = |rng: &mut dyn FnMut() -> usize| {
            let len = rng() % 8;
            Word::from_letters((0..len).map(|_| (rng() % 4) as u8).collect())
        };
        for _ in 0..200 {
            let u = rand_word(&mut rng);
            let v = rand_word(&mut rng);
            let w = rand_word(&mut rng);
            assert!(trace_equivalent(&u, &u, &matrix));
            assert_eq!(
                trace_equivalent(&u, &v, &matrix),
                trace_equivalent(&v, &u, &matrix)
            );
            if trace_equivalent(&u, &v, &matrix) && trace_equivalent(&v, &w, &matrix) {
                assert!(trace_equivalent(&u, &w, &matrix));
            }
            if trace_equivalent(&u, &v, &matrix) {
                assert_eq!(
                    element_of(&u, Family::AffineA(3)).unwrap(),
                    element_of(&v, Family::AffineA(3)).unwrap()
                );
            }
        }
    }

    #[test]
    fn first_extra_rule_matches_strictly() {
        // s3 s0 s1 s0 -> s1 s3 s0 s1 is pattern-expressible
        let (sys, matrix) = affine3();
        let rule = sys
            .rules()
            .iter()
            .find(|r| r.lhs == Word::from([3, 0, 1, 0]))
            .expect("rule present");
        let report = matches_hypothesis(rule, &matrix, sys.alphabet(), Mode::Strict);
        let Verdict::Matched(instance) = &report.verdict else {
            panic!("expected a match, got {}", report.verdict);
        };
        // certification: re-expansion is trace-equivalent to the rule
        let (l, r) = instance.expand(&matrix).unwrap();
        assert!(trace_equivalent(&l, &rule.lhs, &matrix));
        assert!(trace_equivalent(&r, &rule.rhs, &matrix));
    }

    #[test]
    fn commutation_rule_is_initial() {
        let (sys, matrix) = affine3();
        let rule = sys
            .rules()
            .iter()
            .find(|r| r.lhs == Word::from([2, 0]))
            .expect("commutation present");
        let report = matches_hypothesis(rule, &matrix, sys.alphabet(), Mode::Strict);
        assert_eq!(report.verdict, Verdict::InitialRelation);
    }

    #[test]
    fn counterexample_rule_fails_strict_but_not_relaxed() {
        // s3 s0 s2 s1 s3 s0 s1 -> s2 s3 s0 s2 s1 s3 s0: the published
        // obstruction, expressible only with a free first component
        let (sys, matrix) = affine3();
        let rule = sys
            .rules()
            .iter()
            .find(|r| r.lhs == Word::from([3, 0, 2, 1, 3, 0, 1]))
            .expect("rule present");
        let strict = matches_hypothesis(rule, &matrix, sys.alphabet(), Mode::Strict);
        assert!(matches!(strict.verdict, Verdict::NoMatch(_)));
        let relaxed = matches_hypothesis(rule, &matrix, sys.alphabet(), Mode::Relaxed);
        assert!(matches!(relaxed.verdict, Verdict::Matched(_)));
    }

    #[test]
    fn second_counterexample_has_no_factorization_at_all() {
        let (sys, matrix) = affine3();
        let rule = sys
            .rules()
            .iter()
            .find(|r| r.lhs == Word::from([3, 0, 2, 1, 0, 3, 0, 1]))
            .expect("rule present");
        let report = matches_hypothesis(rule, &matrix, sys.alphabet(), Mode::Strict);
        let Verdict::NoMatch(reason) = &report.verdict else {
            panic!("expected no-match");
        };
        assert!(reason.contains("no factorization"), "reason: {reason}");
    }

    #[test]
    fn bare_presentations_audit_as_initial_relations() {
        for family in [Family::A(3), Family::B(3), Family::AffineA(3)] {
            let p = preset_presentation(family).unwrap();
            let sys = RewriteSystem::new(p.alphabet.clone(), p.relations).unwrap();
            let (matrix, _, _) = preset_matrix(family).unwrap();
            let report = audit_basis(&sys, &matrix, Mode::Strict);
            assert_eq!(report.initial, sys.rules().len(), "{family}");
        }
    }

    #[test]
    fn every_match_is_certified_by_reexpansion() {
        let (sys, matrix) = affine3();
        for mode in [Mode::Strict, Mode::Relaxed] {
            let report = audit_basis(&sys, &matrix, mode);
            for r in &report.reports {
                if let Verdict::Matched(instance) = &r.verdict {
                    let rule = &sys.rules()[r.rule_id];
                    let (l, f) = instance.expand(&matrix).unwrap();
                    assert!(trace_equivalent(&l, &rule.lhs, &matrix));
                    assert!(trace_equivalent(&f, &rule.rhs, &matrix));
                }
            }
        }
    }

    #[test]
    fn affine_audit_counts_are_pinned() {
        // ground truth for the 27-rule affine basis: 10 defining relations,
        // 14 strict matches, and 3 strict failures (the two published
        // obstructions plus the longest rule, which admits no factorization
        // of the pattern shape under any reading)
        let (sys, matrix) = affine3();
        let strict = audit_basis(&sys, &matrix, Mode::Strict);
        assert_eq!(
            (strict.initial, strict.matched, strict.no_match),
            (10, 14, 3)
        );
        let failing: Vec<&Word> =
            strict.failed_rule_ids().iter().map(|&id| &sys.rules()[id].lhs).collect();
        assert!(failing.contains(&&Word::from([3, 0, 2, 1, 3, 0, 1])));
        assert!(failing.contains(&&Word::from([3, 0, 2, 1, 0, 3, 0, 1])));
        assert!(failing.contains(&&Word::from([3, 0, 1, 2, 1, 3, 0, 1, 2, 1, 0])));
        // the free-first-component reading recovers exactly one of them
        let relaxed = audit_basis(&sys, &matrix, Mode::Relaxed);
        assert_eq!(relaxed.no_match, 2);
    }

    #[test]
    fn matcher_agrees_with_bounded_brute_force() {
        // cross-check the pruned search against a naive enumeration of all
        // pattern instances for every short rule of the affine basis
        let (sys, matrix) = affine3();
        let alphabet = sys.alphabet();
        for rule in sys.rules().iter().filter(|r| r.lhs.len() <= 12) {
            if is_initial_relation(rule, &matrix) || rule.lhs.len() != rule.rhs.len() {
                continue;
            }
            let fast = Searcher {
                matrix: &matrix,
                alphabet,
                lhs: &rule.lhs,
                rhs: &rule.rhs,
                opts: SearchOptions { parity: true, ordered: true },
            }
            .search()
            .is_some();
            let slow = brute_force_match(rule, &matrix, alphabet);
            assert_eq!(fast, slow, "rule {}", alphabet.format_word(&rule.lhs));
        }
    }

    /// naive exhaustive enumeration without trace-prefix pruning
    fn brute_force_match(rule: &Rule, matrix: &CoxeterMatrix, alphabet: &Alphabet) -> bool {
        let n = matrix.size() as Letter;
        fn rec(
            matrix: &CoxeterMatrix,
            alphabet: &Alphabet,
            lhs: &Word,
            rhs: &Word,
            l_acc: Word,
            r_acc: Word,
            prev: (Letter, Letter),
        ) -> bool {
            let n = matrix.size() as Letter;
            let Some(y) = matrix
                .order(prev.0, prev.1)
                .map(|m| if m % 2 == 0 { prev.1 } else { prev.0 })
            else {
                return false;
            };
            for x in 0..n {
                if x == y
                    || !alphabet.greater(y, x)
                    || (x, y) == prev
                    || (y, x) == prev
                {
                    continue;
                }
                let Some(m) = matrix.order(x, y) else { continue };
                let m = m as usize;
                let full_l = l_acc.concat(&m_word(x, y, m).unwrap());
                let short = m_word(x, y, m - 1).unwrap();
                let short_r = r_acc.concat(&short);
                if full_l.len() == lhs.len()
                    && trace_equivalent(&full_l, lhs, matrix)
                    && trace_equivalent(&short_r, rhs, matrix)
                {
                    return true;
                }
                let link_l = l_acc.concat(&short);
                if link_l.len() < lhs.len()
                    && rec(matrix, alphabet, lhs, rhs, link_l, short_r, (x, y))
                {
                    return true;
                }
            }
            false
        }
        for s in 0..n {
            for sp in 0..n {
                if s == sp || !alphabet.greater(s, sp) {
                    continue;
                }
                let Some(m) = matrix.order(s, sp) else { continue };
                let head_l = m_word(s, sp, m as usize - 1).unwrap();
                let head_r = m_word(sp, s, m as usize).unwrap();
                if head_l.len() > rule.lhs.len() {
                    continue;
                }
                if rec(matrix, alphabet, &rule.lhs, &rule.rhs, head_l, head_r, (s, sp)) {
                    return true;
                }
            }
        }
        false
    }
}
