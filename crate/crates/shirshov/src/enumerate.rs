//! Enumeration and counting of irreducible words through a forbidden-factor
//! automaton, growth series, and block-pattern verification for the affine
//! reduced-element families.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::rewrite::RewriteSystem;
use crate::words::{Letter, Word};

/// Irreducible-word counts per length. `total` is present exactly when the
/// automaton proves the set of irreducible words finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSeries {
    pub counts: Vec<BigUint>,
    pub total: Option<BigUint>,
}

impl GrowthSeries {
    /// The tab-separated `length<TAB>count` rendering, plus a total line when
    /// finite.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{k}\t{c}\n"));
        }
        if let Some(t) = &self.total {
            out.push_str(&format!("total\t{t}\n"));
        }
        out
    }
}

/// Deterministic automaton recognizing the words that avoid every leading
/// word of a rewrite system as a factor.
///
/// States are the live (non-matching) Aho-Corasick states of the
/// leading-word dictionary; a transition entering a matching state is
/// removed. Walks from the root therefore correspond exactly to irreducible
/// words.
#[derive(Debug)]
pub struct AvoidanceAutomaton {
    alphabet_size: usize,
    /// next[s * alphabet_size + c] = Some(state) if the extension stays live.
    next: Vec<Option<u32>>,
    n_states: usize,
}

impl AvoidanceAutomaton {
    // index loops mirror the transition-table layout
    #[allow(clippy::needless_range_loop)]
    pub fn from_system(sys: &RewriteSystem) -> Self {
        // Rebuilds a trie over the leading words; counting needs the full
        // transition table with match flags, which the factor index does
        // not expose.
        let alphabet_size = sys.alphabet().size();
        let patterns: Vec<&[Letter]> = sys.rules().iter().map(|r| r.lhs.letters()).collect();
        let mut goto: Vec<Vec<u32>> = vec![vec![0; alphabet_size]];
        let mut is_match = vec![false];
        for pat in &patterns {
            let mut state = 0usize;
            for &c in *pat {
                let t = goto[state][c as usize];
                if t == 0 {
                    goto.push(vec![0; alphabet_size]);
                    is_match.push(false);
                    let ns = (goto.len() - 1) as u32;
                    goto[state][c as usize] = ns;
                    state = ns as usize;
                } else {
                    state = t as usize;
                }
            }
            is_match[state] = true;
        }
        let n = goto.len();
        let mut fail = vec![0u32; n];
        let mut queue = std::collections::VecDeque::new();
        for c in 0..alphabet_size {
            let s = goto[0][c];
            if s != 0 {
                queue.push_back(s as usize);
            }
        }
        while let Some(s) = queue.pop_front() {
            for c in 0..alphabet_size {
                let t = goto[s][c];
                if t != 0 {
                    fail[t as usize] = goto[fail[s] as usize][c];
                    if is_match[fail[t as usize] as usize] {
                        is_match[t as usize] = true;
                    }
                    queue.push_back(t as usize);
                } else {
                    goto[s][c] = goto[fail[s] as usize][c];
                }
            }
        }
        let mut next = vec![None; n * alphabet_size];
        for s in 0..n {
            if is_match[s] {
                continue;
            }
            for c in 0..alphabet_size {
                let t = goto[s][c] as usize;
                if !is_match[t] {
                    next[s * alphabet_size + c] = Some(goto[s][c]);
                }
            }
        }
        AvoidanceAutomaton { alphabet_size, next, n_states: n }
    }

    #[inline]
    pub fn step(&self, state: u32, c: Letter) -> Option<u32> {
        self.next[state as usize * self.alphabet_size + c as usize]
    }

    /// Walks a word from the root; `None` if the word hits a forbidden factor.
    pub fn walk(&self, w: &Word) -> Option<u32> {
        let mut s = 0u32;
        for &c in w.letters() {
            s = self.step(s, c)?;
        }
        Some(s)
    }

    /// `true` when some live cycle is reachable from the root, i.e. the set
    /// of irreducible words is infinite.
    pub fn has_reachable_cycle(&self) -> bool {
        // iterative three-color depth-first search from the root
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color = vec![WHITE; self.n_states];
        let mut stack: Vec<(u32, usize)> = vec![(0, 0)];
        color[0] = GRAY;
        while let Some(top) = stack.last_mut() {
            let (s, ci) = *top;
            if ci < self.alphabet_size {
                top.1 += 1;
                if let Some(t) = self.step(s, ci as Letter) {
                    match color[t as usize] {
                        GRAY => return true,
                        WHITE => {
                            color[t as usize] = GRAY;
                            stack.push((t, 0));
                        }
                        _ => {}
                    }
                }
            } else {
                color[s as usize] = BLACK;
                stack.pop();
            }
        }
        false
    }
}

/// Counts the irreducible words of each length up to `max_len` by iterating
/// the automaton's transition counts; exact integers. When the automaton is
/// acyclic the full (finite) total is also returned.
#[allow(clippy::needless_range_loop)]
pub fn growth(sys: &RewriteSystem, max_len: usize) -> GrowthSeries {
    let auto = AvoidanceAutomaton::from_system(sys);
    let finite = !auto.has_reachable_cycle();
    let mut vec: Vec<BigUint> = vec![BigUint::zero(); auto.n_states];
    vec[0] = BigUint::from(1u32);
    let mut counts = Vec::with_capacity(max_len + 1);
    counts.push(BigUint::from(1u32));
    let mut total = BigUint::from(1u32);
    let mut k = 0usize;
    loop {
        if vec.iter().all(Zero::is_zero) {
            break;
        }
        if k >= max_len && !finite {
            break;
        }
        if finite && k > auto.n_states + 1 {
            unreachable!("acyclic automaton must drain within its state count");
        }
        k += 1;
        let mut next: Vec<BigUint> = vec![BigUint::zero(); auto.n_states];
        for s in 0..auto.n_states {
            if vec[s].is_zero() {
                continue;
            }
            for c in 0..auto.alphabet_size {
                if let Some(t) = auto.step(s as u32, c as Letter) {
                    next[t as usize] += &vec[s];
                }
            }
        }
        let level: BigUint = next.iter().sum();
        if k <= max_len {
            counts.push(level.clone());
        }
        total += level;
        vec = next;
    }
    while counts.len() < max_len + 1 {
        counts.push(BigUint::zero());
    }
    GrowthSeries { counts, total: finite.then_some(total) }
}

/// Streams all irreducible words of length at most `max_len`, optionally
/// restricted to a fixed prefix, in depth-first order with letters tried
/// from the greatest generator down.
pub fn stream_irreducible<'a>(
    sys: &'a RewriteSystem,
    max_len: usize,
    prefix: Option<&Word>,
) -> IrreducibleWords<'a> {
    let auto = AvoidanceAutomaton::from_system(sys);
    let order: Vec<Letter> = sys.alphabet().ranking().to_vec();
    let start = prefix.cloned().unwrap_or_else(Word::empty);
    let stack = match auto.walk(&start) {
        Some(state) if start.len() <= max_len => vec![(state, 0usize)],
        _ => Vec::new(),
    };
    IrreducibleWords { _sys: sys, auto, order, max_len, current: start, stack, emit_current: true }
}

/// Iterator over irreducible words; see [`stream_irreducible`].
pub struct IrreducibleWords<'a> {
    _sys: &'a RewriteSystem,
    auto: AvoidanceAutomaton,
    order: Vec<Letter>,
    max_len: usize,
    current: Word,
    stack: Vec<(u32, usize)>,
    emit_current: bool,
}

impl Iterator for IrreducibleWords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            if self.stack.is_empty() {
                return None;
            }
            if self.emit_current {
                self.emit_current = false;
                return Some(self.current.clone());
            }
            let depth = self.stack.len() - 1;
            let (state, next_choice) = self.stack[depth];
            if self.current.len() >= self.max_len || next_choice >= self.order.len() {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.current = self.current.factor(0, self.current.len() - 1);
                }
                continue;
            }
            self.stack[depth].1 += 1;
            let c = self.order[next_choice];
            if let Some(t) = self.auto.step(state, c) {
                self.current = self.current.concat(&Word::single(c));
                self.stack.push((t, 0));
                self.emit_current = true;
            }
        }
    }
}

/// One segment of a block family: a base word, repeated a variable number of
/// times or appearing exactly once.
#[derive(Debug, Clone)]
pub struct BlockSegment {
    pub word: Word,
    pub repeatable: bool,
}

/// A displayed family of juxtaposed blocks, e.g. `(B)^q (C) (D)^p tail`.
#[derive(Debug, Clone)]
pub struct BlockFamily {
    pub label: String,
    pub segments: Vec<BlockSegment>,
}

impl BlockFamily {
    fn expand(&self, exponents: &[usize]) -> Word {
        let mut w = Word::empty();
        let mut e = exponents.iter();
        for seg in &self.segments {
            let times = if seg.repeatable { *e.next().expect("one exponent per repeatable segment") } else { 1 };
            for _ in 0..times {
                w = w.concat(&seg.word);
            }
        }
        w
    }

    fn arity(&self) -> usize {
        self.segments.iter().filter(|s| s.repeatable).count()
    }
}

/// Outcome of checking one expanded block word.
#[derive(Debug, Clone)]
pub struct BlockCheck {
    pub family: String,
    pub exponents: Vec<usize>,
    pub word: Word,
    pub irreducible: bool,
    /// Leading word that fires, with its position, when reducible.
    pub violation: Option<(Word, usize)>,
}

/// Expands each family over all exponent tuples up to `max_exp` and tests
/// irreducibility under `sys`, reporting which factor fires on failures.
pub fn check_block_words(
    sys: &RewriteSystem,
    families: &[BlockFamily],
    max_exp: usize,
) -> Vec<BlockCheck> {
    let mut out = Vec::new();
    for fam in families {
        let arity = fam.arity();
        let mut exps = vec![0usize; arity];
        loop {
            let w = fam.expand(&exps);
            let violation = sys.reduce_once(&w).map(|(_, rule_id, pos)| {
                let rule = &sys.rules()[rule_id];
                (rule.lhs.clone(), pos)
            });
            out.push(BlockCheck {
                family: fam.label.clone(),
                exponents: exps.clone(),
                word: w,
                irreducible: violation.is_none(),
                violation,
            });
            // advance the exponent odometer
            let mut i = 0;
            loop {
                if i == arity {
                    break;
                }
                exps[i] += 1;
                if exps[i] <= max_exp {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
            if i == arity {
                break;
            }
        }
    }
    out
}

/// The displayed reduced-element block families of the affine group on
/// `n+1` generators, under the `s0 > s1 > ... > sn` convention: the cyclic
/// ascent block, the split ascent block, and the split block followed by the
/// turnaround `s_n s_0 s_n` and the shifted ascent, each with every proper
/// prefix of the repeating block as a tail.
pub fn affine_block_families(n: usize) -> Vec<BlockFamily> {
    let letter = |i: usize| i as Letter;
    // (s0 s1 ... sn)
    let ascent = Word::from_letters((0..=n).map(letter).collect());
    // (s0 sn s1 s2 ... s_{n-1})
    let mut split = vec![letter(0), letter(n)];
    split.extend((1..n).map(letter));
    let split = Word::from_letters(split);
    // (sn s0 sn)
    let turnaround = Word::from_letters(vec![letter(n), letter(0), letter(n)]);
    // (s1 s2 ... sn s0)
    let mut shifted = (1..=n).map(letter).collect::<Vec<_>>();
    shifted.push(letter(0));
    let shifted = Word::from_letters(shifted);

    let mut out = Vec::new();
    let prefixes = |w: &Word| -> Vec<Word> { (0..w.len()).map(|k| w.factor(0, k)).collect() };
    for tail in prefixes(&ascent) {
        out.push(BlockFamily {
            label: format!("ascent^p {}", if tail.is_empty() { "1".into() } else { tail.to_string() }),
            segments: vec![
                BlockSegment { word: ascent.clone(), repeatable: true },
                BlockSegment { word: tail, repeatable: false },
            ],
        });
    }
    for tail in prefixes(&split) {
        out.push(BlockFamily {
            label: format!("split^q {}", if tail.is_empty() { "1".into() } else { tail.to_string() }),
            segments: vec![
                BlockSegment { word: split.clone(), repeatable: true },
                BlockSegment { word: tail, repeatable: false },
            ],
        });
    }
    for tail in prefixes(&shifted) {
        out.push(BlockFamily {
            label: format!(
                "split^q turnaround shifted^p {}",
                if tail.is_empty() { "1".into() } else { tail.to_string() }
            ),
            segments: vec![
                BlockSegment { word: split.clone(), repeatable: true },
                BlockSegment { word: turnaround.clone(), repeatable: false },
                BlockSegment { word: shifted.clone(), repeatable: true },
                BlockSegment { word: tail, repeatable: false },
            ],
        });
    }
    out
}
