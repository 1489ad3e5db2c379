//! Oriented binomial rules, multi-pattern leading-word indexing, single-step
//! reduction and normal forms.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::words::{Alphabet, Letter, Word};
use crate::Error;

/// An oriented binomial relation `lhs -> rhs` with `lhs` strictly
/// deglex-greater than `rhs`. A rule with empty `rhs` encodes `lhs = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub id: usize,
    pub lhs: Word,
    pub rhs: Word,
}

/// Orients a binomial `u - v` so its leading word comes first. Fails when
/// `u = v` (the zero binomial has no orientation).
pub fn orient(u: Word, v: Word, alphabet: &Alphabet) -> Result<(Word, Word), Error> {
    match alphabet.deglex(&u, &v)? {
        Ordering::Greater => Ok((u, v)),
        Ordering::Less => Ok((v, u)),
        Ordering::Equal => Err(Error::invalid(format!(
            "cannot orient the zero binomial `{} = {}`",
            alphabet.format_word(&u),
            alphabet.format_word(&v)
        ))),
    }
}

/// Aho-Corasick dictionary automaton over the leading words of a rule set.
///
/// States are trie nodes for pattern prefixes; `fail` links point to the
/// longest proper suffix that is again a prefix. `matches[s]` lists every
/// pattern ending at state `s` (own output merged with the fail chain), so a
/// single scan reports all factor occurrences.
#[derive(Debug, Clone)]
pub struct FactorIndex {
    alphabet_size: usize,
    /// goto[s * alphabet_size + c] = next state (dense transition table).
    goto_: Vec<u32>,
    /// patterns ending at each state: (pattern id, pattern length).
    matches: Vec<Vec<(usize, usize)>>,
    max_pattern_len: usize,
}

impl FactorIndex {
    // index loops mirror the transition-table layout
    #[allow(clippy::needless_range_loop)]
    pub fn build(patterns: &[&Word], alphabet_size: usize) -> FactorIndex {
        let mut trie_goto: Vec<Vec<u32>> = vec![vec![0; alphabet_size]];
        let mut own: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        let mut max_len = 0;
        for (pid, pat) in patterns.iter().enumerate() {
            debug_assert!(!pat.is_empty());
            max_len = max_len.max(pat.len());
            let mut state = 0usize;
            for &c in pat.letters() {
                let next = trie_goto[state][c as usize];
                if next == 0 {
                    trie_goto.push(vec![0; alphabet_size]);
                    own.push(Vec::new());
                    let new_state = (trie_goto.len() - 1) as u32;
                    trie_goto[state][c as usize] = new_state;
                    state = new_state as usize;
                } else {
                    state = next as usize;
                }
            }
            own[state].push((pid, pat.len()));
        }
        // BFS to fill fail links and convert goto into a total transition map.
        let n_states = trie_goto.len();
        let mut fail = vec![0u32; n_states];
        let mut matches = own;
        let mut queue = VecDeque::new();
        for c in 0..alphabet_size {
            let s = trie_goto[0][c];
            if s != 0 {
                queue.push_back(s as usize);
            }
        }
        while let Some(s) = queue.pop_front() {
            for c in 0..alphabet_size {
                let t = trie_goto[s][c];
                if t != 0 {
                    let mut f = fail[s] as usize;
                    fail[t as usize] = trie_goto[f][c];
                    f = fail[t as usize] as usize;
                    let inherited = matches[f].clone();
                    matches[t as usize].extend(inherited);
                    queue.push_back(t as usize);
                } else {
                    trie_goto[s][c] = trie_goto[fail[s] as usize][c];
                }
            }
        }
        let mut goto_ = Vec::with_capacity(n_states * alphabet_size);
        for row in &trie_goto {
            goto_.extend_from_slice(row);
        }
        FactorIndex { alphabet_size, goto_, matches, max_pattern_len: max_len }
    }

    #[inline]
    fn step(&self, state: usize, c: Letter) -> usize {
        self.goto_[state * self.alphabet_size + c as usize] as usize
    }

    pub fn max_pattern_len(&self) -> usize {
        self.max_pattern_len
    }

    /// Every `(pattern id, start position)` with the pattern occurring as a
    /// factor of `w`, ordered by end position.
    pub fn find_all(&self, w: &Word) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut state = 0usize;
        for (i, &c) in w.letters().iter().enumerate() {
            state = self.step(state, c);
            for &(pid, plen) in &self.matches[state] {
                out.push((pid, i + 1 - plen));
            }
        }
        out
    }

    /// The match minimizing `(start position, pattern id)`, scanning from
    /// `from`. Matches are reported by end position, so after the first hit
    /// the scan continues just far enough to rule out an earlier start.
    pub fn find_leftmost(&self, w: &Word, from: usize) -> Option<(usize, usize)> {
        let mut state = 0usize;
        let mut best: Option<(usize, usize)> = None; // (start, pid)
        for (i, &c) in w.letters().iter().enumerate().skip(from) {
            if let Some((start, _)) = best {
                // Any later match ends at >= i+1, hence starts at
                // >= i+1 - max_pattern_len; once that bound passes `start`
                // no improvement is possible.
                if i + 1 > start + self.max_pattern_len {
                    break;
                }
            }
            state = self.step(state, c);
            for &(pid, plen) in &self.matches[state] {
                let cand = (i + 1 - plen, pid);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        best.map(|(start, pid)| (pid, start))
    }

    /// The match maximizing start position (ties: lowest pattern id). Exists
    /// solely to drive the alternate reduction strategy in confluence tests.
    pub fn find_rightmost(&self, w: &Word) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (pid, start) in self.find_all(w) {
            let better = match best {
                None => true,
                Some((bs, bp)) => start > bs || (start == bs && pid < bp),
            };
            if better {
                best = Some((start, pid));
            }
        }
        best.map(|(start, pid)| (pid, start))
    }
}

/// Which occurrence a single reduction step rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Leftmost match position, then lowest rule id. The default everywhere.
    Leftmost,
    /// Rightmost match position, then lowest rule id. Confluence testing only.
    Rightmost,
}

/// An ordered rule set over an alphabet, with a factor index over all
/// leading words. Immutable once constructed; sealed systems are freely
/// shareable across threads.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    index: FactorIndex,
}

impl RewriteSystem {
    /// Builds a system from oriented pairs `(lhs, rhs)`. Rule ids are assigned
    /// in order of appearance. Fails if a pair is not strictly oriented or a
    /// left side is empty.
    pub fn new(alphabet: Alphabet, pairs: Vec<(Word, Word)>) -> Result<Self, Error> {
        let mut rules = Vec::with_capacity(pairs.len());
        for (id, (lhs, rhs)) in pairs.into_iter().enumerate() {
            if lhs.is_empty() {
                return Err(Error::invalid("rule left side must be nonempty"));
            }
            if alphabet.deglex(&lhs, &rhs)? != Ordering::Greater {
                return Err(Error::invalid(format!(
                    "rule `{} -> {}` is not deglex-oriented",
                    alphabet.format_word(&lhs),
                    alphabet.format_word(&rhs)
                )));
            }
            rules.push(Rule { id, lhs, rhs });
        }
        let index = {
            let pats: Vec<&Word> = rules.iter().map(|r| &r.lhs).collect();
            FactorIndex::build(&pats, alphabet.size())
        };
        Ok(RewriteSystem { alphabet, rules, index })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn index(&self) -> &FactorIndex {
        &self.index
    }

    /// Applies exactly one rewrite if any leading word occurs as a factor:
    /// `a·lhs·b -> a·rhs·b`, reporting the rewritten word, rule id and
    /// position. Returns `None` on irreducible input.
    pub fn reduce_once(&self, w: &Word) -> Option<(Word, usize, usize)> {
        self.reduce_once_with(w, Strategy::Leftmost)
    }

    pub fn reduce_once_with(&self, w: &Word, strategy: Strategy) -> Option<(Word, usize, usize)> {
        let found = match strategy {
            Strategy::Leftmost => self.index.find_leftmost(w, 0),
            Strategy::Rightmost => self.index.find_rightmost(w),
        }?;
        let (pid, pos) = found;
        let rule = &self.rules[pid];
        Some((w.splice(pos, rule.lhs.len(), &rule.rhs), rule.id, pos))
    }

    /// Repeats [`reduce_once`](Self::reduce_once) until irreducible. Each
    /// step strictly decreases the word in deglex, so this terminates.
    pub fn normal_form(&self, w: &Word) -> Word {
        self.normal_form_with(w, Strategy::Leftmost)
    }

    pub fn normal_form_with(&self, w: &Word, strategy: Strategy) -> Word {
        match strategy {
            Strategy::Leftmost => {
                // Rescan window: after rewriting at `pos` nothing left of
                // pos - max_pattern_len + 1 can start a new match.
                let mut cur = w.clone();
                let mut from = 0usize;
                while let Some((pid, pos)) = self.index.find_leftmost(&cur, from) {
                    let rule = &self.rules[pid];
                    cur = cur.splice(pos, rule.lhs.len(), &rule.rhs);
                    from = (pos + 1).saturating_sub(self.index.max_pattern_len);
                }
                cur
            }
            Strategy::Rightmost => {
                let mut cur = w.clone();
                while let Some((next, _, _)) = self.reduce_once_with(&cur, strategy) {
                    cur = next;
                }
                cur
            }
        }
    }

    /// `true` iff no leading word occurs as a factor of `w`.
    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.index.find_leftmost(w, 0).is_none()
    }

    /// Rules sorted by (deglex of lhs, lhs, rhs) with ids renumbered in that
    /// order: the canonical presentation used by serialization and set
    /// comparison.
    pub fn canonicalized(&self) -> RewriteSystem {
        let mut pairs: Vec<(Word, Word)> =
            self.rules.iter().map(|r| (r.lhs.clone(), r.rhs.clone())).collect();
        sort_pairs_canonically(&mut pairs, &self.alphabet);
        RewriteSystem::new(self.alphabet.clone(), pairs)
            .expect("re-sorting preserves orientation")
    }

    /// Serializes in the canonical basis file format.
    pub fn to_text(&self) -> String {
        let canon = self.canonicalized();
        let mut out = String::from("basis-format 1\n");
        out.push_str(&format!("generators: {}\n", self.alphabet.names().join(" ")));
        let ranking: Vec<&str> =
            self.alphabet.ranking().iter().map(|&g| self.alphabet.name(g)).collect();
        out.push_str(&format!("ranking: {}\n", ranking.join(" ")));
        for rule in canon.rules() {
            let lhs: Vec<String> = rule.lhs.letters().iter().map(|c| c.to_string()).collect();
            let rhs: Vec<String> = rule.rhs.letters().iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("rule: {} -> {}\n", lhs.join(" "), rhs.join(" ")));
        }
        out
    }

    /// Parses the basis file format produced by [`to_text`](Self::to_text).
    pub fn from_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().enumerate();
        let magic = lines.next().map(|(_, l)| l.trim()).unwrap_or("");
        if magic != "basis-format 1" {
            return Err(Error::parse(1, "expected header `basis-format 1`"));
        }
        let mut names: Option<Vec<String>> = None;
        let mut ranking_names: Option<Vec<String>> = None;
        let mut raw_rules: Vec<(usize, Vec<Letter>, Vec<Letter>)> = Vec::new();
        for (i, line) in lines {
            let lineno = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("generators:") {
                names = Some(rest.split_whitespace().map(str::to_string).collect());
            } else if let Some(rest) = line.strip_prefix("ranking:") {
                ranking_names = Some(rest.split_whitespace().map(str::to_string).collect());
            } else if let Some(rest) = line.strip_prefix("rule:") {
                let (l, r) = rest
                    .split_once("->")
                    .ok_or_else(|| Error::parse(lineno, "rule line missing `->`"))?;
                let parse_side = |side: &str| -> Result<Vec<Letter>, Error> {
                    side.split_whitespace()
                        .map(|tok| {
                            tok.parse::<Letter>()
                                .map_err(|_| Error::parse(lineno, format!("bad index `{tok}`")))
                        })
                        .collect()
                };
                raw_rules.push((lineno, parse_side(l)?, parse_side(r)?));
            } else {
                return Err(Error::parse(lineno, format!("unrecognized line `{line}`")));
            }
        }
        let names = names.ok_or_else(|| Error::parse(0, "missing `generators:` line"))?;
        let ranking_names =
            ranking_names.ok_or_else(|| Error::parse(0, "missing `ranking:` line"))?;
        let probe = Alphabet::new(names.clone(), (0..names.len() as u8).collect())
            .map_err(|e| Error::parse(0, e.to_string()))?;
        let ranking: Vec<Letter> = ranking_names
            .iter()
            .map(|n| {
                probe
                    .index_of(n)
                    .ok_or_else(|| Error::parse(0, format!("ranking names unknown generator `{n}`")))
            })
            .collect::<Result<_, _>>()?;
        let alphabet = Alphabet::new(names, ranking).map_err(|e| Error::parse(0, e.to_string()))?;
        let mut pairs = Vec::with_capacity(raw_rules.len());
        for (lineno, l, r) in raw_rules {
            let lhs = Word::from_letters(l);
            let rhs = Word::from_letters(r);
            if !alphabet.contains_word(&lhs) || !alphabet.contains_word(&rhs) {
                return Err(Error::parse(lineno, "rule index out of range"));
            }
            pairs.push((lhs, rhs));
        }
        RewriteSystem::new(alphabet, pairs)
    }
}

/// Sorts rule pairs by (deglex of lhs, lhs indices, rhs indices).
pub fn sort_pairs_canonically(pairs: &mut [(Word, Word)], alphabet: &Alphabet) {
    pairs.sort_by(|(al, ar), (bl, br)| {
        alphabet
            .deglex_unchecked(al, bl)
            .then_with(|| al.cmp(bl))
            .then_with(|| ar.cmp(br))
    });
}
