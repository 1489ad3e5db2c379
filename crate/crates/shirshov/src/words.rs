//! Alphabets, words, the degree-lexicographic order, and overlap/containment
//! detection between words.

use std::cmp::Ordering;
use std::fmt;

use crate::Error;

/// A generator index; alphabets hold at most 255 generators.
pub type Letter = u8;

/// A finite, linearly ordered generating set.
///
/// Generators are dense indices `0..size`; display names are presentation
/// metadata only. The linear order is given by `ranking`: `ranking[0]` is the
/// *greatest* generator, `ranking[size-1]` the least.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    ranking: Vec<Letter>,
    /// rank_of[g] = position of g in `ranking`; 0 means greatest.
    rank_of: Vec<u8>,
}

impl Alphabet {
    pub fn new(names: Vec<String>, ranking: Vec<Letter>) -> Result<Self, Error> {
        let size = names.len();
        if size == 0 || size > 255 {
            return Err(Error::invalid("alphabet must have between 1 and 255 generators"));
        }
        if names.iter().any(|n| n.is_empty()) {
            return Err(Error::invalid("generator names must be nonempty"));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::invalid(format!("duplicate generator name `{a}`")));
            }
        }
        if ranking.len() != size {
            return Err(Error::invalid("ranking must list every generator exactly once"));
        }
        let mut rank_of = vec![u8::MAX; size];
        for (pos, &g) in ranking.iter().enumerate() {
            let gi = g as usize;
            if gi >= size || rank_of[gi] != u8::MAX {
                return Err(Error::invalid("ranking must be a permutation of the generators"));
            }
            rank_of[gi] = pos as u8;
        }
        Ok(Alphabet { names, ranking, rank_of })
    }

    /// Alphabet with names `s0..s{n-1}` and the identity ranking
    /// (`s0` greatest).
    pub fn with_ascending_names(n: usize) -> Result<Self, Error> {
        let names = (0..n).map(|i| format!("s{i}")).collect();
        let ranking = (0..n).map(|i| i as Letter).collect();
        Alphabet::new(names, ranking)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: Letter) -> &str {
        &self.names[g as usize]
    }

    /// The ranking permutation; entry 0 is the greatest generator.
    pub fn ranking(&self) -> &[Letter] {
        &self.ranking
    }

    /// Position of `g` in the ranking (0 = greatest).
    pub fn rank_of(&self, g: Letter) -> usize {
        self.rank_of[g as usize] as usize
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| i as Letter)
    }

    /// `true` when `a` is strictly greater than `b` in the generator order.
    pub fn greater(&self, a: Letter, b: Letter) -> bool {
        self.rank_of[a as usize] < self.rank_of[b as usize]
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        w.letters().iter().all(|&c| (c as usize) < self.size())
    }

    fn check_word(&self, w: &Word) -> Result<(), Error> {
        if self.contains_word(w) {
            Ok(())
        } else {
            Err(Error::invalid("word contains a letter outside the alphabet"))
        }
    }

    /// Degree-lexicographic comparison: first by length, then letter by
    /// letter in the generator order.
    pub fn deglex(&self, u: &Word, v: &Word) -> Result<Ordering, Error> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(self.deglex_unchecked(u, v))
    }

    pub(crate) fn deglex_unchecked(&self, u: &Word, v: &Word) -> Ordering {
        match u.len().cmp(&v.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (&a, &b) in u.letters().iter().zip(v.letters()) {
            // smaller rank position = greater generator
            match self.rank_of[b as usize].cmp(&self.rank_of[a as usize]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// A key that sorts words in deglex order under `Ord`.
    pub(crate) fn deglex_key(&self, w: &Word) -> Vec<u8> {
        let size = self.size() as u8;
        w.letters()
            .iter()
            .map(|&c| size - 1 - self.rank_of[c as usize])
            .collect()
    }

    /// Parses whitespace-separated generator names; `1` denotes the empty
    /// word.
    pub fn parse_word(&self, text: &str) -> Result<Word, Error> {
        let text = text.trim();
        if text == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            match self.index_of(tok) {
                Some(g) => letters.push(g),
                None => return Err(Error::invalid(format!("unknown generator name `{tok}`"))),
            }
        }
        Ok(Word::from_letters(letters))
    }

    /// Renders a word as whitespace-separated names; the empty word is `1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|&c| self.name(c))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// An element of the free monoid on the alphabet: a finite sequence of
/// generator indices. The empty word is the monoid identity.
///
/// The derived `Ord` is plain length-then-index order and is only used as a
/// canonical tiebreak; the mathematical order is [`Alphabet::deglex`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn single(g: Letter) -> Self {
        Word { letters: vec![g] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word { letters: self.letters[start..end].to_vec() }
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.letters.starts_with(&prefix.letters)
    }

    /// Splices `replacement` over `self[start..start+len]`.
    pub fn splice(&self, start: usize, len: usize, replacement: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() - len + replacement.len());
        letters.extend_from_slice(&self.letters[..start]);
        letters.extend_from_slice(&replacement.letters);
        letters.extend_from_slice(&self.letters[start + len..]);
        Word { letters }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), &self.letters).cmp(&(other.len(), &other.letters))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word { letters }
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word { letters: letters.to_vec() }
    }
}

impl<const N: usize> From<[Letter; N]> for Word {
    fn from(letters: [Letter; N]) -> Self {
        Word { letters: letters.to_vec() }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, c) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{c}")?;
        }
        Ok(())
    }
}

/// How two leading words can interfere: a proper suffix/prefix overlap or a
/// factor containment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbiguityKind {
    Intersection,
    Inclusion,
}

/// An ambiguity between two words `u` and `v`.
///
/// * `Intersection`: `witness = u·right_margin = left_margin·v`, where the
///   shared part is a proper suffix of `u` and proper prefix of `v`.
/// * `Inclusion`: `witness = u = left_margin·v·right_margin`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub witness: Word,
    pub left_margin: Word,
    pub right_margin: Word,
}

impl Ambiguity {
    /// Checks the defining equation of this ambiguity against `u`, `v`.
    pub fn recomposes(&self, u: &Word, v: &Word) -> bool {
        match self.kind {
            AmbiguityKind::Intersection => {
                self.witness == u.concat(&self.right_margin)
                    && self.witness == self.left_margin.concat(v)
                    && u.len() + v.len() > self.witness.len()
            }
            AmbiguityKind::Inclusion => {
                self.witness == *u
                    && self.witness
                        == self.left_margin.concat(v).concat(&self.right_margin)
            }
        }
    }
}

/// Enumerates every ambiguity between `u` and `v`: each occurrence of `v` as
/// a factor of `u` (inclusion) and each proper overlap where a suffix of `u`
/// equals a prefix of `v` (intersection). Both are scanned left to right by
/// the start position of `v` inside the witness. The degenerate inclusion
/// `u = v` with empty margins is excluded.
pub fn find_ambiguities(u: &Word, v: &Word) -> Result<Vec<Ambiguity>, Error> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::invalid("ambiguity search requires nonempty words"));
    }
    let (lu, lv) = (u.len(), v.len());
    let mut out = Vec::new();
    for p in 0..lu {
        if p + lv <= lu {
            if &u.letters()[p..p + lv] == v.letters() {
                if p == 0 && lv == lu {
                    continue; // u == v in place: vacuous
                }
                out.push(Ambiguity {
                    kind: AmbiguityKind::Inclusion,
                    witness: u.clone(),
                    left_margin: u.factor(0, p),
                    right_margin: u.factor(p + lv, lu),
                });
            }
        } else if p >= 1 {
            let t = lu - p;
            if u.letters()[p..] == v.letters()[..t] {
                out.push(Ambiguity {
                    kind: AmbiguityKind::Intersection,
                    witness: u.concat(&v.factor(t, lv)),
                    left_margin: u.factor(0, p),
                    right_margin: v.factor(t, lv),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        // s0 < s1 < s2 < s3: highest index greatest
        Alphabet::new(
            vec!["s0".into(), "s1".into(), "s2".into(), "s3".into()],
            vec![3, 2, 1, 0],
        )
        .unwrap()
    }

    #[test]
    fn deglex_length_dominates() {
        let a = abc();
        let u = Word::from([0, 1]);
        let v = Word::from([2]);
        assert_eq!(a.deglex(&u, &v).unwrap(), Ordering::Greater);
    }

    #[test]
    fn deglex_identity() {
        let a = abc();
        let u = Word::from([1, 0, 1]);
        assert_eq!(a.deglex(&u, &u.clone()).unwrap(), Ordering::Equal);
    }

    #[test]
    fn deglex_equal_length_uses_ranking() {
        // s1 s0 s1 > s0 s1 s0 under s0<s1<s2<s3
        let a = abc();
        let u = Word::from([1, 0, 1]);
        let v = Word::from([0, 1, 0]);
        assert_eq!(a.deglex(&u, &v).unwrap(), Ordering::Greater);
    }

    #[test]
    fn deglex_rejects_foreign_letters() {
        let a = abc();
        assert!(a.deglex(&Word::from([9]), &Word::empty()).is_err());
    }

    #[test]
    fn self_overlap_found() {
        let u = Word::from([1, 0, 1]);
        let ambs = find_ambiguities(&u, &u).unwrap();
        assert_eq!(ambs.len(), 1);
        assert_eq!(ambs[0].kind, AmbiguityKind::Intersection);
        assert_eq!(ambs[0].witness, Word::from([1, 0, 1, 0, 1]));
        assert!(ambs[0].recomposes(&u, &u));
    }

    #[test]
    fn intersection_with_short_word() {
        // u = s0 s1 s0, v = s0 s2: witness s0 s1 s0 s2
        let u = Word::from([0, 1, 0]);
        let v = Word::from([0, 2]);
        let ambs = find_ambiguities(&u, &v).unwrap();
        assert_eq!(ambs.len(), 1);
        assert_eq!(ambs[0].witness, Word::from([0, 1, 0, 2]));
        assert!(ambs[0].recomposes(&u, &v));
    }

    #[test]
    fn inclusion_with_margins() {
        // u = s0 s1 s2 s0 contains v = s1 s2 with margins s0, s0
        let u = Word::from([0, 1, 2, 0]);
        let v = Word::from([1, 2]);
        let ambs = find_ambiguities(&u, &v).unwrap();
        assert_eq!(ambs.len(), 1);
        assert_eq!(ambs[0].kind, AmbiguityKind::Inclusion);
        assert_eq!(ambs[0].left_margin, Word::from([0]));
        assert_eq!(ambs[0].right_margin, Word::from([0]));
    }

    #[test]
    fn vacuous_self_inclusion_excluded() {
        let u = Word::from([0, 1]);
        let ambs = find_ambiguities(&u, &u).unwrap();
        assert!(ambs.iter().all(|a| a.kind == AmbiguityKind::Intersection));
    }

    #[test]
    fn empty_word_rejected() {
        assert!(find_ambiguities(&Word::empty(), &Word::from([0])).is_err());
    }

    #[test]
    fn word_text_round_trip() {
        let a = abc();
        let w = a.parse_word("s3 s0 s1 s0").unwrap();
        assert_eq!(w, Word::from([3, 0, 1, 0]));
        assert_eq!(a.format_word(&w), "s3 s0 s1 s0");
        assert_eq!(a.parse_word("1").unwrap(), Word::empty());
        assert_eq!(a.format_word(&Word::empty()), "1");
        assert!(a.parse_word("s9").is_err());
    }
}
