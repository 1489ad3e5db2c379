//! Critical-pair computation, capped Buchberger–Shirshov completion,
//! closedness verification and interreduction.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::rewrite::{orient, FactorIndex, Rule, RewriteSystem};
use crate::words::{find_ambiguities, Alphabet, Ambiguity, AmbiguityKind, Word};
use crate::Error;

/// Resource bounds for a completion run. All three must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Residues whose left side exceeds this length are discarded.
    pub max_word_len: usize,
    /// Stop once this many rules are alive.
    pub max_rules: usize,
    /// Stop after examining this many queue entries.
    pub max_steps: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_word_len: 64, max_rules: 20_000, max_steps: 2_000_000 }
    }
}

impl Caps {
    pub fn with_max_word_len(len: usize) -> Self {
        Caps { max_word_len: len, ..Caps::default() }
    }

    fn validate(&self) -> Result<(), Error> {
        if self.max_word_len == 0 || self.max_rules == 0 || self.max_steps == 0 {
            return Err(Error::invalid("completion caps must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    /// Queue emptied and no residue was ever discarded.
    Closed,
    /// Queue emptied but at least one over-length residue was discarded.
    LengthCapped(usize),
    /// Stopped early at the rule-count cap.
    RuleCapped(usize),
    /// Stopped early at the step cap.
    StepCapped(usize),
}

impl CompletionStatus {
    pub fn is_closed(&self) -> bool {
        matches!(self, CompletionStatus::Closed)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CompletionStats {
    pub compositions_examined: usize,
    pub nontrivial: usize,
    pub rules_added: usize,
    pub rules_removed: usize,
}

/// Where a rule in the derivation log came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Initial,
    Composition { f: usize, g: usize, witness: Word },
    /// Re-derived while interreducing after `from` became reducible.
    Rederived { from: usize },
}

#[derive(Debug, Clone)]
pub struct DerivationRecord {
    pub rule_id: usize,
    pub lhs: Word,
    pub rhs: Word,
    pub origin: Origin,
}

#[derive(Debug)]
pub struct CompletionResult {
    pub system: RewriteSystem,
    pub status: CompletionStatus,
    pub stats: CompletionStats,
    pub log: Vec<DerivationRecord>,
}

/// A critical pair `(f, g)_w` and its reduced residue.
#[derive(Debug, Clone)]
pub struct CompositionResidue {
    pub f: usize,
    pub g: usize,
    pub ambiguity: Ambiguity,
    /// The two sides of the composition before reduction:
    /// `(f.rhs·b, a·g.rhs)` for intersections, `(f.rhs, a·g.rhs·b)` for
    /// inclusions.
    pub raw: (Word, Word),
    /// Oriented normal forms of the raw sides; absent when they coincide.
    pub residue: Option<(Word, Word)>,
}

fn composition_sides(f: &Rule, g: &Rule, amb: &Ambiguity) -> (Word, Word) {
    match amb.kind {
        AmbiguityKind::Intersection => {
            (f.rhs.concat(&amb.right_margin), amb.left_margin.concat(&g.rhs))
        }
        AmbiguityKind::Inclusion => (
            f.rhs.clone(),
            amb.left_margin.concat(&g.rhs).concat(&amb.right_margin),
        ),
    }
}

/// Computes the composition of `f` and `g` relative to the witness of `amb`
/// and reduces both sides to normal form under `sys`.
pub fn compose(
    f: &Rule,
    g: &Rule,
    amb: &Ambiguity,
    sys: &RewriteSystem,
) -> Result<CompositionResidue, Error> {
    if !amb.recomposes(&f.lhs, &g.lhs) {
        return Err(Error::invalid("ambiguity is inconsistent with the given rules"));
    }
    let raw = composition_sides(f, g, amb);
    let n1 = sys.normal_form(&raw.0);
    let n2 = sys.normal_form(&raw.1);
    let residue =
        if n1 == n2 { None } else { Some(orient(n1, n2, sys.alphabet())?) };
    Ok(CompositionResidue { f: f.id, g: g.id, ambiguity: amb.clone(), raw, residue })
}

/// Enumerates every ambiguity among all ordered rule pairs (self-pairs
/// included) and returns the compositions with nonvanishing residue. Empty
/// output certifies that `sys` is a Gröbner–Shirshov basis.
pub fn verify_closed(sys: &RewriteSystem) -> Vec<CompositionResidue> {
    let mut out = Vec::new();
    for f in sys.rules() {
        for g in sys.rules() {
            let ambs = find_ambiguities(&f.lhs, &g.lhs)
                .expect("rule left sides are nonempty");
            for amb in ambs {
                let res = compose(f, g, &amb, sys).expect("ambiguity from the rules themselves");
                if res.residue.is_some() {
                    out.push(res);
                }
            }
        }
    }
    out
}

/// Brings a rule list into interreduced form: every left side avoids the
/// other left sides as factors and every right side is fully reduced.
/// Rules that collapse to `1 = 1` are dropped. Idempotent and canonical.
pub fn interreduce(
    pairs: &[(Word, Word)],
    alphabet: &Alphabet,
) -> Result<Vec<(Word, Word)>, Error> {
    let mut current: Vec<(Word, Word)> = Vec::new();
    for (u, v) in pairs {
        let (l, r) = orient(u.clone(), v.clone(), alphabet)?;
        if !current.contains(&(l.clone(), r.clone())) {
            current.push((l, r));
        }
    }
    loop {
        let mut next: Vec<(Word, Word)> = Vec::new();
        let mut changed = false;
        for i in 0..current.len() {
            let others: Vec<(Word, Word)> = current
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let sys = RewriteSystem::new(alphabet.clone(), others)?;
            let nu = sys.normal_form(&current[i].0);
            let nv = sys.normal_form(&current[i].1);
            if (nu.clone(), nv.clone()) != current[i] {
                changed = true;
            }
            if nu == nv {
                continue;
            }
            let oriented = orient(nu, nv, alphabet)?;
            if !next.contains(&oriented) {
                next.push(oriented);
            } else {
                changed = true;
            }
        }
        crate::rewrite::sort_pairs_canonically(&mut next, alphabet);
        if !changed && next == current {
            return Ok(next);
        }
        current = next;
    }
}

/// Mutable rule store used inside the completion loop. Left sides never
/// change for a live id; a rule whose left side becomes reducible is removed
/// and its equation re-derived under a fresh id.
struct Engine<'a> {
    alphabet: &'a Alphabet,
    caps: &'a Caps,
    rules: BTreeMap<usize, (Word, Word)>,
    index: FactorIndex,
    /// rule ids in the order the index patterns were built.
    index_ids: Vec<usize>,
    next_id: usize,
    seq: u64,
    queue: BinaryHeap<Reverse<Pending>>,
    stats: CompletionStats,
    log: Vec<DerivationRecord>,
    discarded_over_cap: bool,
}

/// Queue entry ordered by deglex of the witness word, then insertion order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pending {
    witness_len: usize,
    witness_key: Vec<u8>,
    seq: u64,
    f: usize,
    g: usize,
    amb_kind_inclusion: bool,
    left_margin: Word,
    right_margin: Word,
}

impl<'a> Engine<'a> {
    fn new(alphabet: &'a Alphabet, caps: &'a Caps) -> Self {
        Engine {
            alphabet,
            caps,
            rules: BTreeMap::new(),
            index: FactorIndex::build(&[], alphabet.size()),
            index_ids: Vec::new(),
            next_id: 0,
            seq: 0,
            queue: BinaryHeap::new(),
            stats: CompletionStats::default(),
            log: Vec::new(),
            discarded_over_cap: false,
        }
    }

    fn rebuild_index(&mut self) {
        self.index_ids = self.rules.keys().copied().collect();
        let pats: Vec<&Word> = self.index_ids.iter().map(|id| &self.rules[id].0).collect();
        self.index = FactorIndex::build(&pats, self.alphabet.size());
    }

    fn normal_form(&self, w: &Word) -> Word {
        let mut cur = w.clone();
        let mut from = 0usize;
        while let Some((pid, pos)) = self.index.find_leftmost(&cur, from) {
            let (lhs, rhs) = &self.rules[&self.index_ids[pid]];
            cur = cur.splice(pos, lhs.len(), rhs);
            from = (pos + 1).saturating_sub(self.index.max_pattern_len());
        }
        cur
    }

    fn enqueue_pairs_with(&mut self, new_id: usize) {
        let new_lhs = self.rules[&new_id].0.clone();
        let ids: Vec<usize> = self.rules.keys().copied().collect();
        for id in ids {
            let other_lhs = self.rules[&id].0.clone();
            for amb in find_ambiguities(&new_lhs, &other_lhs).expect("nonempty") {
                self.push_pending(new_id, id, amb);
            }
            if id != new_id {
                for amb in find_ambiguities(&other_lhs, &new_lhs).expect("nonempty") {
                    self.push_pending(id, new_id, amb);
                }
            }
        }
    }

    fn push_pending(&mut self, f: usize, g: usize, amb: Ambiguity) {
        let key = self.alphabet.deglex_key(&amb.witness);
        self.seq += 1;
        self.queue.push(Reverse(Pending {
            witness_len: amb.witness.len(),
            witness_key: key,
            seq: self.seq,
            f,
            g,
            amb_kind_inclusion: amb.kind == AmbiguityKind::Inclusion,
            left_margin: amb.left_margin,
            right_margin: amb.right_margin,
        }));
    }

    /// Normalizes, orients and inserts an equation, then restores the
    /// interreduced invariant. Follow-up equations from displaced rules are
    /// processed on an explicit stack.
    fn add_equation(&mut self, u: Word, v: Word, origin: Origin) {
        let mut stack = vec![(u, v, origin)];
        while let Some((u, v, origin)) = stack.pop() {
            let nu = self.normal_form(&u);
            let nv = self.normal_form(&v);
            if nu == nv {
                continue; // trivial equation
            }
            let (lhs, rhs) = orient(nu, nv, self.alphabet)
                .expect("distinct normal forms orient");
            if lhs.len() > self.caps.max_word_len {
                self.discarded_over_cap = true;
                continue;
            }
            let id = self.next_id;
            self.next_id += 1;
            self.rules.insert(id, (lhs.clone(), rhs.clone()));
            self.stats.rules_added += 1;
            self.log.push(DerivationRecord { rule_id: id, lhs: lhs.clone(), rhs: rhs.clone(), origin });
            // remove rules whose left side now contains the new one
            let displaced: Vec<usize> = self
                .rules
                .iter()
                .filter(|(&oid, (ol, _))| {
                    oid != id && contains_factor(ol, &lhs)
                })
                .map(|(&oid, _)| oid)
                .collect();
            for oid in displaced {
                let (ol, or) = self.rules.remove(&oid).expect("present");
                self.stats.rules_removed += 1;
                stack.push((ol, or, Origin::Rederived { from: oid }));
            }
            self.rebuild_index();
            // re-reduce right sides in place (left sides and ids unchanged)
            let ids: Vec<usize> = self.rules.keys().copied().collect();
            for oid in ids {
                if oid == id {
                    continue;
                }
                let r = self.rules[&oid].1.clone();
                let nr = self.normal_form(&r);
                if nr != r {
                    self.rules.get_mut(&oid).expect("present").1 = nr;
                }
            }
            self.enqueue_pairs_with(id);
        }
    }
}

fn contains_factor(haystack: &Word, needle: &Word) -> bool {
    let (lh, ln) = (haystack.len(), needle.len());
    if ln > lh {
        return false;
    }
    (0..=lh - ln).any(|p| &haystack.letters()[p..p + ln] == needle.letters())
}

/// Runs Buchberger–Shirshov completion on `initial` under the given caps.
///
/// Pending compositions are processed smallest witness first (deglex, then
/// insertion order) and the rule set is kept interreduced after every
/// insertion, so the run is deterministic for fixed input and caps.
pub fn complete(
    initial: &[(Word, Word)],
    alphabet: &Alphabet,
    caps: &Caps,
) -> Result<CompletionResult, Error> {
    caps.validate()?;
    for (u, v) in initial {
        if u.is_empty() {
            return Err(Error::invalid("initial rule has empty left side"));
        }
        if alphabet.deglex(u, v)? != std::cmp::Ordering::Greater {
            return Err(Error::invalid(format!(
                "initial rule `{} -> {}` is not deglex-oriented",
                alphabet.format_word(u),
                alphabet.format_word(v)
            )));
        }
    }
    let mut engine = Engine::new(alphabet, caps);
    for (u, v) in initial {
        engine.add_equation(u.clone(), v.clone(), Origin::Initial);
    }
    let mut steps = 0usize;
    let status = loop {
        if engine.rules.len() > caps.max_rules {
            break CompletionStatus::RuleCapped(caps.max_rules);
        }
        let Some(Reverse(pending)) = engine.queue.pop() else {
            break if engine.discarded_over_cap {
                CompletionStatus::LengthCapped(caps.max_word_len)
            } else {
                CompletionStatus::Closed
            };
        };
        if steps >= caps.max_steps {
            break CompletionStatus::StepCapped(caps.max_steps);
        }
        steps += 1;
        let (Some(f), Some(g)) =
            (engine.rules.get(&pending.f), engine.rules.get(&pending.g))
        else {
            continue; // stale: a parent rule was displaced since queueing
        };
        engine.stats.compositions_examined += 1;
        let fl = f.0.clone();
        let fr = f.1.clone();
        let gr = g.1.clone();
        let (witness, s1, s2) = if pending.amb_kind_inclusion {
            (
                fl,
                fr,
                pending.left_margin.concat(&gr).concat(&pending.right_margin),
            )
        } else {
            (
                fl.concat(&pending.right_margin),
                fr.concat(&pending.right_margin),
                pending.left_margin.concat(&gr),
            )
        };
        let n1 = engine.normal_form(&s1);
        let n2 = engine.normal_form(&s2);
        if n1 != n2 {
            engine.stats.nontrivial += 1;
            engine.add_equation(
                n1,
                n2,
                Origin::Composition { f: pending.f, g: pending.g, witness },
            );
        }
    };
    let pairs: Vec<(Word, Word)> = engine.rules.values().cloned().collect();
    let mut sorted = pairs;
    crate::rewrite::sort_pairs_canonically(&mut sorted, alphabet);
    let system = RewriteSystem::new(alphabet.clone(), sorted)?;
    Ok(CompletionResult { system, status, stats: engine.stats, log: engine.log })
}

/// Checks the chained-composition property for binomials `f`, `g`, `h`.
///
/// For every pair of overlaps `v1` (between `f.lhs` and `g.lhs`) and `v2`
/// (between `g.lhs` and `h.lhs`) with `g.lhs = a2·v2`, the preconditions are
/// the margin condition `a2 = v1·ā2` and triviality of `<f;g>` under `sys`.
/// Returns whether `<f; <g;h>>` is trivial for all admissible pairs; errs
/// with a precondition failure when no pair is admissible.
pub fn chained_composition_check(
    f: &Rule,
    g: &Rule,
    h: &Rule,
    sys: &RewriteSystem,
) -> Result<bool, Error> {
    let fg: Vec<Ambiguity> = find_ambiguities(&f.lhs, &g.lhs)?
        .into_iter()
        .filter(|a| a.kind == AmbiguityKind::Intersection)
        .collect();
    let gh: Vec<Ambiguity> = find_ambiguities(&g.lhs, &h.lhs)?
        .into_iter()
        .filter(|a| a.kind == AmbiguityKind::Intersection)
        .collect();
    let mut admissible = 0usize;
    let mut all_trivial = true;
    for amb1 in &fg {
        // f.lhs = a1·v1, g.lhs = v1·b1
        let a1 = &amb1.left_margin;
        let v1 = f.lhs.factor(a1.len(), f.lhs.len());
        let fg_trivial = {
            let s1 = sys.normal_form(&f.rhs.concat(&amb1.right_margin));
            let s2 = sys.normal_form(&a1.concat(&g.rhs));
            s1 == s2
        };
        for amb2 in &gh {
            // g.lhs = a2·v2, h.lhs = v2·b2
            let a2 = &amb2.left_margin;
            let b2 = &amb2.right_margin;
            if !a2.starts_with(&v1) || !fg_trivial {
                continue;
            }
            admissible += 1;
            let a2_bar = a2.factor(v1.len(), a2.len());
            // <f; a2·h2 - g2·b2> = a1·g2·b2 - f2·ā2·h2
            let lhs_side = a1.concat(&g.rhs).concat(b2);
            let rhs_side = f.rhs.concat(&a2_bar).concat(&h.rhs);
            if sys.normal_form(&lhs_side) != sys.normal_form(&rhs_side) {
                all_trivial = false;
            }
        }
    }
    if admissible == 0 {
        return Err(Error::precondition(
            "no overlap pair satisfies the margin and triviality preconditions",
        ));
    }
    Ok(all_trivial)
}
