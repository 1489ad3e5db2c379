//! Coxeter matrices, presentation generation, preset families, and the
//! closed-form basis families as instantiable rule generators.

use std::fmt;

use crate::completion::interreduce;
use crate::rewrite::orient;
use crate::words::{Alphabet, Letter, Word};
use crate::Error;

/// A symmetric matrix of braid orders; `0` encodes an infinite entry.
/// Diagonal entries are 1, off-diagonal entries are at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self, Error> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::invalid("matrix must be square and nonempty"));
        }
        for i in 0..n {
            if entries[i * n + i] != 1 {
                return Err(Error::invalid("diagonal entries must be 1"));
            }
            for j in 0..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::invalid("matrix must be symmetric"));
                }
                if i != j && entries[i * n + j] == 1 {
                    return Err(Error::invalid("off-diagonal entries must be >= 2 or infinite"));
                }
            }
        }
        Ok(CoxeterMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// The braid order `m(i,j)`, or `None` for an infinite entry.
    pub fn order(&self, i: Letter, j: Letter) -> Option<u32> {
        let e = self.entries[i as usize * self.n + j as usize];
        (e != 0).then_some(e)
    }

    /// `true` when `i` and `j` commute (`m = 2`).
    pub fn commutes(&self, i: Letter, j: Letter) -> bool {
        self.order(i, j) == Some(2)
    }

    /// Parses a square integer grid, one row per line, `0` denoting infinity.
    pub fn parse_grid(text: &str) -> Result<Self, Error> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row: Vec<u32> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>()
                        .map_err(|_| Error::parse(i + 1, format!("bad matrix entry `{tok}`")))
                })
                .collect::<Result<_, _>>()?;
            rows.push(row);
        }
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::parse(0, "matrix rows must all have the same length"));
        }
        CoxeterMatrix::new(n, rows.into_iter().flatten().collect())
    }

    pub fn to_grid(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<String> =
                (0..self.n).map(|j| self.entries[i * self.n + j].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A monoid presentation of a Coxeter group: involutions plus oriented braid
/// relations.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<(Word, Word)>,
}

/// Emits the involution `s s -> 1` for each generator and, for each unordered
/// pair with finite braid order `m`, the rule `m(s,s') -> m(s',s)` with the
/// greater generator first. Infinite entries contribute no rule.
pub fn presentation_from_matrix(
    matrix: &CoxeterMatrix,
    ranking: &[Letter],
    names: &[String],
) -> Result<Presentation, Error> {
    let alphabet = Alphabet::new(names.to_vec(), ranking.to_vec())?;
    if alphabet.size() != matrix.size() {
        return Err(Error::invalid("ranking size does not match the matrix"));
    }
    let n = matrix.size() as Letter;
    let mut relations = Vec::new();
    for i in 0..n {
        relations.push((Word::from([i, i]), Word::empty()));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let Some(m) = matrix.order(i, j) else { continue };
            let (hi, lo) = if alphabet.greater(i, j) { (i, j) } else { (j, i) };
            relations.push((alternating(hi, lo, m as usize), alternating(lo, hi, m as usize)));
        }
    }
    Ok(Presentation { alphabet, relations })
}

/// The alternating word `x y x y ...` of the given length.
pub(crate) fn alternating(x: Letter, y: Letter, len: usize) -> Word {
    Word::from_letters((0..len).map(|t| if t % 2 == 0 { x } else { y }).collect())
}

/// The preset families carried by the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A(usize),
    B(usize),
    D(usize),
    AffineA(usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(l) => write!(f, "a:{l}"),
            Family::B(l) => write!(f, "b:{l}"),
            Family::D(l) => write!(f, "d:{l}"),
            Family::AffineA(n) => write!(f, "affine-a:{n}"),
        }
    }
}

/// Parses a preset name: `a:<l>`, `b:<l>`, `d:<l>` or `affine-a:<n>`.
pub fn parse_preset(text: &str) -> Result<Family, Error> {
    let (kind, size) = text
        .split_once(':')
        .ok_or_else(|| Error::invalid(format!("bad preset `{text}`, expected e.g. `a:3`")))?;
    let size: usize = size
        .parse()
        .map_err(|_| Error::invalid(format!("bad preset size in `{text}`")))?;
    match kind {
        "a" => Ok(Family::A(size)),
        "b" => Ok(Family::B(size)),
        "d" => Ok(Family::D(size)),
        "affine-a" => Ok(Family::AffineA(size)),
        _ => Err(Error::invalid(format!("unknown preset family `{kind}`"))),
    }
}

fn finite_names(l: usize) -> Vec<String> {
    (1..=l).map(|i| format!("s{i}")).collect()
}

fn affine_names(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("s{i}")).collect()
}

/// Ranking with the highest index greatest: `ranking[0]` is the last letter.
fn descending_ranking(size: usize) -> Vec<Letter> {
    (0..size).rev().map(|i| i as Letter).collect()
}

/// The Coxeter matrix, ranking and generator names of a preset.
///
/// Finite types use generators `s1..sl` with `sl` greatest; the affine type
/// uses `s0..sn` on a cycle with `sn` greatest, the convention under which
/// the reference basis for the 4-generator affine group is oriented.
pub fn preset_matrix(family: Family) -> Result<(CoxeterMatrix, Vec<Letter>, Vec<String>), Error> {
    match family {
        Family::A(l) => {
            if !(2..=200).contains(&l) {
                return Err(Error::invalid("preset a:<l> requires 2 <= l <= 200"));
            }
            let mut entries = vec![2u32; l * l];
            for i in 0..l {
                entries[i * l + i] = 1;
            }
            for i in 0..l - 1 {
                entries[i * l + i + 1] = 3;
                entries[(i + 1) * l + i] = 3;
            }
            Ok((CoxeterMatrix::new(l, entries)?, descending_ranking(l), finite_names(l)))
        }
        Family::B(l) => {
            if !(2..=200).contains(&l) {
                return Err(Error::invalid("preset b:<l> requires 2 <= l <= 200"));
            }
            let (m, r, n) = preset_matrix(Family::A(l))?;
            let mut entries = m.entries;
            entries[(l - 2) * l + l - 1] = 4;
            entries[(l - 1) * l + l - 2] = 4;
            Ok((CoxeterMatrix::new(l, entries)?, r, n))
        }
        Family::D(l) => {
            if !(3..=200).contains(&l) {
                return Err(Error::invalid("preset d:<l> requires 3 <= l <= 200"));
            }
            let mut entries = vec![2u32; l * l];
            for i in 0..l {
                entries[i * l + i] = 1;
            }
            // path s1 - s2 - ... - s_{l-1}, with s_l attached to s_{l-2}
            for i in 0..l - 2 {
                entries[i * l + i + 1] = 3;
                entries[(i + 1) * l + i] = 3;
            }
            entries[(l - 3) * l + l - 1] = 3;
            entries[(l - 1) * l + l - 3] = 3;
            Ok((CoxeterMatrix::new(l, entries)?, descending_ranking(l), finite_names(l)))
        }
        Family::AffineA(n) => {
            if !(2..=200).contains(&n) {
                return Err(Error::invalid("preset affine-a:<n> requires 2 <= n <= 200"));
            }
            let matrix = affine_cycle_matrix(n)?;
            Ok((matrix, descending_ranking(n + 1), affine_names(n)))
        }
    }
}

/// The (n+1)-generator cycle matrix of the affine type: order 3 between
/// cyclically adjacent generators, 2 otherwise.
pub fn affine_cycle_matrix(n: usize) -> Result<CoxeterMatrix, Error> {
    let size = n + 1;
    let mut entries = vec![2u32; size * size];
    for i in 0..size {
        entries[i * size + i] = 1;
    }
    for i in 0..size {
        let j = (i + 1) % size;
        entries[i * size + j] = 3;
        entries[j * size + i] = 3;
    }
    CoxeterMatrix::new(size, entries)
}

pub fn preset_presentation(family: Family) -> Result<Presentation, Error> {
    let (matrix, ranking, names) = preset_matrix(family)?;
    presentation_from_matrix(&matrix, &ranking, &names)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanDirection {
    Descending,
    Ascending,
}

/// The run word `s_{i,j}`: descending `s_i s_{i-1} .. s_j` or ascending
/// `s_i s_{i+1} .. s_j`, with `s_{i,i} = s_i` and the empty sentinel one past
/// the end (`j = i+1` descending, `j = i-1` ascending).
pub fn word_sij(i: usize, j: usize, direction: SpanDirection) -> Result<Word, Error> {
    if i > 255 || j > 256 {
        return Err(Error::invalid("run index out of range"));
    }
    match direction {
        SpanDirection::Descending => {
            if j == i + 1 {
                Ok(Word::empty())
            } else if j <= i {
                Ok(Word::from_letters((j..=i).rev().map(|x| x as Letter).collect()))
            } else {
                Err(Error::invalid("descending run requires j <= i+1"))
            }
        }
        SpanDirection::Ascending => {
            if i == j + 1 {
                Ok(Word::empty())
            } else if i <= j {
                Ok(Word::from_letters((i..=j).map(|x| x as Letter).collect()))
            } else {
                Err(Error::invalid("ascending run requires j >= i-1"))
            }
        }
    }
}

/// The hat word: the pair chain `(s_{t+1} s_t)` for `t = i-1 .. j`. Requires
/// `i >= 1` and `j >= i-1`.
pub fn word_shat(i: usize, j: usize) -> Result<Word, Error> {
    if i == 0 || j + 1 < i || j > 254 {
        return Err(Error::invalid("hat word requires i >= 1 and j >= i-1"));
    }
    let mut letters = Vec::with_capacity(2 * (j + 2 - i));
    for t in (i - 1)..=j {
        letters.push((t + 1) as Letter);
        letters.push(t as Letter);
    }
    Ok(Word::from_letters(letters))
}

/// Three-case run: descending for `i > j`, single letter for `i = j`,
/// ascending for `i < j`.
fn span(i: usize, j: usize) -> Word {
    if i > j {
        word_sij(i, j, SpanDirection::Descending).expect("in range")
    } else {
        word_sij(i, j, SpanDirection::Ascending).expect("in range")
    }
}

/// One instantiation of a closed-form basis family, with its printed sides
/// (not yet oriented).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub label: String,
    pub left: Word,
    pub right: Word,
}

impl FamilyInstance {
    fn new(label: String, left: Word, right: Word) -> Self {
        FamilyInstance { label, left, right }
    }
}

/// All printed-family instantiations for a preset, over that family's native
/// alphabet. Finite types share the preset convention (highest index
/// greatest); the affine families are stated with `s0` greatest, the mirror
/// of the preset ranking.
pub fn closed_form_instances(family: Family) -> Result<(Alphabet, Vec<FamilyInstance>), Error> {
    match family {
        Family::A(l) => {
            let (_, ranking, names) = preset_matrix(family)?;
            Ok((Alphabet::new(names, ranking)?, a_instances(l, "A")))
        }
        Family::B(l) => {
            let (_, ranking, names) = preset_matrix(family)?;
            Ok((Alphabet::new(names, ranking)?, b_instances(l)))
        }
        Family::D(l) => {
            let (_, ranking, names) = preset_matrix(family)?;
            Ok((Alphabet::new(names, ranking)?, d_instances(l)))
        }
        Family::AffineA(n) => {
            if !(2..=200).contains(&n) {
                return Err(Error::invalid("affine closed form requires 2 <= n <= 200"));
            }
            let names = affine_names(n);
            let ranking: Vec<Letter> = (0..=n).map(|i| i as Letter).collect(); // s0 greatest
            Ok((Alphabet::new(names, ranking)?, affine_instances(n)))
        }
    }
}

/// The closed-form basis: every family member instantiated over its printed
/// index ranges, oriented by deglex and interreduced.
pub fn closed_form_basis(family: Family) -> Result<(Alphabet, Vec<(Word, Word)>), Error> {
    let (alphabet, instances) = closed_form_instances(family)?;
    let mut pairs = Vec::new();
    for inst in instances {
        if inst.left == inst.right {
            continue;
        }
        let oriented = orient(inst.left, inst.right, &alphabet)?;
        if !pairs.contains(&oriented) {
            pairs.push(oriented);
        }
    }
    let reduced = interreduce(&pairs, &alphabet)?;
    Ok((alphabet, reduced))
}

/// type A over generators `s1..sl` (letters `0..l-1`), 1-based in labels.
fn a_instances(l: usize, tag: &str) -> Vec<FamilyInstance> {
    let g = |i: usize| (i - 1) as Letter;
    let run = |i: usize, j: usize| -> Word {
        // descending s_i s_{i-1} .. s_j on 1-based generators
        Word::from_letters((j..=i).rev().map(g).collect())
    };
    let mut out = Vec::new();
    for i in 1..=l {
        out.push(FamilyInstance::new(
            format!("{tag}1[i={i}]"),
            Word::from([g(i), g(i)]),
            Word::empty(),
        ));
    }
    for i in 1..=l {
        for j in 1..i {
            if i - j > 1 {
                out.push(FamilyInstance::new(
                    format!("{tag}2[i={i},j={j}]"),
                    Word::from([g(i), g(j)]),
                    Word::from([g(j), g(i)]),
                ));
            }
        }
    }
    for i in 1..l {
        out.push(FamilyInstance::new(
            format!("{tag}3[i={i}]"),
            Word::from([g(i + 1), g(i), g(i + 1)]),
            Word::from([g(i), g(i + 1), g(i)]),
        ));
    }
    for i in 1..l {
        for j in 1..=i {
            out.push(FamilyInstance::new(
                format!("{tag}4[i={i},j={j}]"),
                run(i + 1, j).concat(&Word::single(g(i + 1))),
                Word::single(g(i)).concat(&run(i + 1, j)),
            ));
        }
    }
    out
}

fn b_instances(l: usize) -> Vec<FamilyInstance> {
    let g = |i: usize| (i - 1) as Letter;
    let run = |i: usize, j: usize| -> Word { Word::from_letters((j..=i).rev().map(g).collect()) };
    let mut out = Vec::new();
    for i in 1..=l {
        out.push(FamilyInstance::new(
            format!("B1[i={i}]"),
            Word::from([g(i), g(i)]),
            Word::empty(),
        ));
    }
    for i in 1..=l {
        for j in 1..i {
            if i - j > 1 {
                out.push(FamilyInstance::new(
                    format!("B2[i={i},j={j}]"),
                    Word::from([g(i), g(j)]),
                    Word::from([g(j), g(i)]),
                ));
            }
        }
    }
    for i in 1..=l.saturating_sub(2) {
        out.push(FamilyInstance::new(
            format!("B3[i={i}]"),
            Word::from([g(i + 1), g(i), g(i + 1)]),
            Word::from([g(i), g(i + 1), g(i)]),
        ));
    }
    for i in 1..=l.saturating_sub(2) {
        for j in 1..=i {
            out.push(FamilyInstance::new(
                format!("B4[i={i},j={j}]"),
                run(i + 1, j).concat(&Word::single(g(i + 1))),
                Word::single(g(i)).concat(&run(i + 1, j)),
            ));
        }
    }
    out.push(FamilyInstance::new(
        "B5".to_string(),
        Word::from([g(l), g(l - 1), g(l), g(l - 1)]),
        Word::from([g(l - 1), g(l), g(l - 1), g(l)]),
    ));
    for j in 1..l {
        out.push(FamilyInstance::new(
            format!("B6[j={j}]"),
            run(l, j).concat(&run(l, j)),
            Word::single(g(l - 1)).concat(&run(l, j)).concat(&run(l, j + 1)),
        ));
    }
    out
}

fn d_instances(l: usize) -> Vec<FamilyInstance> {
    let g = |i: usize| (i - 1) as Letter;
    // type-A descending run on 1-based generators
    let run = |i: usize, j: usize| -> Word { Word::from_letters((j..=i).rev().map(g).collect()) };
    // branch run s_{l,j} = s_l s_{l-2} .. s_j (skips s_{l-1});
    // s_{l,l} = 1, s_{l,l-1} = s_l
    let branch = |j: usize| -> Word {
        if j == l {
            Word::empty()
        } else if j == l - 1 {
            Word::single(g(l))
        } else {
            let mut letters = vec![g(l)];
            letters.extend((j..=l - 2).rev().map(g));
            Word::from_letters(letters)
        }
    };
    // defining relations of the type-A subgroup on s_1..s_{l-1}
    let mut out = a_instances(l - 1, "D:A");
    out.push(FamilyInstance::new(
        "D1".into(),
        Word::from([g(l), g(l)]),
        Word::empty(),
    ));
    out.push(FamilyInstance::new(
        "D2".into(),
        Word::from([g(l), g(l - 1)]),
        Word::from([g(l - 1), g(l)]),
    ));
    out.push(FamilyInstance::new(
        "D3".into(),
        Word::from([g(l), g(l - 2), g(l)]),
        Word::from([g(l - 2), g(l), g(l - 2)]),
    ));
    for j in 1..=l - 2 {
        out.push(FamilyInstance::new(
            format!("D4[j={j}]"),
            branch(j).concat(&run(l - 1, j)),
            Word::single(g(l - 1)).concat(&branch(j)).concat(&run(l - 1, j + 1)),
        ));
    }
    for j in 1..=l - 2 {
        out.push(FamilyInstance::new(
            format!("D5[j={j}]"),
            branch(j).concat(&Word::from([g(l - 1), g(l)])),
            Word::single(g(l - 2)).concat(&branch(j)).concat(&Word::single(g(l - 1))),
        ));
    }
    // D6 as printed repeats the middle run on both sides, which makes the
    // sides unequal in length; instances are emitted verbatim and left to the
    // audit against completion output.
    for j in 1..=l.saturating_sub(2) {
        for k in j + 1..=l.saturating_sub(2) {
            out.push(FamilyInstance::new(
                format!("D6[j={j},k={k}]"),
                branch(j).concat(&run(l - 1, k)),
                Word::single(g(l - 2))
                    .concat(&branch(j))
                    .concat(&run(l - 1, k))
                    .concat(&branch(k + 1)),
            ));
        }
    }
    for i in 1..=l - 1 {
        out.push(FamilyInstance::new(
            format!("D7[i={i}]"),
            Word::from([g(i), g(i)]),
            Word::empty(),
        ));
    }
    for i in 1..=l {
        for j in 1..i {
            if i - j > 2 {
                out.push(FamilyInstance::new(
                    format!("D8[i={i},j={j}]"),
                    Word::from([g(i), g(j)]),
                    Word::from([g(j), g(i)]),
                ));
            }
        }
    }
    for i in 1..=l - 2 {
        out.push(FamilyInstance::new(
            format!("D9[i={i}]"),
            Word::from([g(i + 1), g(i), g(i + 1)]),
            Word::from([g(i), g(i + 1), g(i)]),
        ));
    }
    for i in 1..=l.saturating_sub(2) {
        for j in 1..=i {
            out.push(FamilyInstance::new(
                format!("D10[i={i},j={j}]"),
                run(i + 1, j).concat(&Word::single(g(i + 1))),
                Word::single(g(i)).concat(&run(i + 1, j)),
            ));
        }
    }
    out
}

/// Families (1)-(10) of the affine type, plus its initial relations, stated
/// under the `s0 > s1 > ... > sn` ordering.
fn affine_instances(n: usize) -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    let letter = |i: usize| i as Letter;
    for i in 0..=n {
        out.push(FamilyInstance::new(
            format!("inv[i={i}]"),
            Word::from([letter(i), letter(i)]),
            Word::empty(),
        ));
    }
    for i in 0..=n {
        for j in i + 1..=n {
            let adjacent = j - i == 1 || (i == 0 && j == n);
            if adjacent {
                out.push(FamilyInstance::new(
                    format!("braid[{i},{j}]"),
                    alternating(letter(i), letter(j), 3),
                    alternating(letter(j), letter(i), 3),
                ));
            } else {
                out.push(FamilyInstance::new(
                    format!("comm[{i},{j}]"),
                    Word::from([letter(i), letter(j)]),
                    Word::from([letter(j), letter(i)]),
                ));
            }
        }
    }
    let one = Word::single;
    // (1) s_{ij} s_i - s_{i+1} s_{ij}; the i = 0, j = n corner is excluded
    // because s_0 and s_n do not commute on the cycle.
    for i in 0..n.saturating_sub(1) {
        for j in i + 2..=n {
            if i == 0 && j == n {
                continue;
            }
            out.push(FamilyInstance::new(
                format!("(1)[i={i},j={j}]"),
                span(i, j).concat(&one(letter(i))),
                one(letter(i + 1)).concat(&span(i, j)),
            ));
        }
    }
    // (2) s_0 s_{nk} s_j - s_j s_0 s_{nk}
    for j in 2..=n.saturating_sub(2) {
        for k in j + 2..=n {
            out.push(FamilyInstance::new(
                format!("(2)[j={j},k={k}]"),
                one(0).concat(&span(n, k)).concat(&one(letter(j))),
                one(letter(j)).concat(&one(0)).concat(&span(n, k)),
            ));
        }
    }
    // (3) s_0 s_{nj} s_{j+1} - s_j s_0 s_{nj}, j = n-1 .. 0
    for j in (0..n).rev() {
        out.push(FamilyInstance::new(
            format!("(3)[j={j}]"),
            one(0).concat(&span(n, j)).concat(&one(letter(j + 1))),
            one(letter(j)).concat(&one(0)).concat(&span(n, j)),
        ));
    }
    // (4) s_0 s_{nj} s_0 - s_n s_0 s_{nj}
    for j in 2..n {
        out.push(FamilyInstance::new(
            format!("(4)[j={j}]"),
            one(0).concat(&span(n, j)).concat(&one(0)),
            one(letter(n)).concat(&one(0)).concat(&span(n, j)),
        ));
    }
    // (5) s_0 s_{nj} ŝ_{1k} s_{k+1} - s_n s_0 s_{nj} ŝ_{1k}; j = 2..n-1, n
    for j in 2..=n {
        for k in 0..n {
            let hat = word_shat(1, k).expect("k >= 0");
            out.push(FamilyInstance::new(
                format!("(5)[j={j},k={k}]"),
                one(0).concat(&span(n, j)).concat(&hat).concat(&one(letter(k + 1))),
                one(letter(n)).concat(&one(0)).concat(&span(n, j)).concat(&hat),
            ));
        }
    }
    // (6) s_{0j} s_n s_0 s_n - s_1 s_{0j} s_n s_0
    for j in 1..n {
        out.push(FamilyInstance::new(
            format!("(6)[j={j}]"),
            span(0, j).concat(&Word::from([letter(n), 0, letter(n)])),
            one(1).concat(&span(0, j)).concat(&Word::from([letter(n), 0])),
        ));
    }
    // (7) s_0 s_{nj} s_1 s_0 s_{nk} s_1 - s_n s_0 s_{nj} s_1 s_0 s_{nk}
    for j in 2..n {
        for k in j - 1..=n {
            out.push(FamilyInstance::new(
                format!("(7)[j={j},k={k}]"),
                one(0)
                    .concat(&span(n, j))
                    .concat(&Word::from([1, 0]))
                    .concat(&span(n, k))
                    .concat(&one(1)),
                one(letter(n))
                    .concat(&one(0))
                    .concat(&span(n, j))
                    .concat(&Word::from([1, 0]))
                    .concat(&span(n, k)),
            ));
        }
    }
    // (8) s_0 s_{nj} s_1 s_0 s_{nk} ŝ_{2l} s_{l+1} - s_n s_0 s_{nj} s_1 s_0 s_{nk} ŝ_{2l}
    for j in 2..n {
        for k in j + 1..=n {
            for l in 1..n {
                let hat = word_shat(2, l).expect("l >= 1");
                out.push(FamilyInstance::new(
                    format!("(8)[j={j},k={k},l={l}]"),
                    one(0)
                        .concat(&span(n, j))
                        .concat(&Word::from([1, 0]))
                        .concat(&span(n, k))
                        .concat(&hat)
                        .concat(&one(letter(l + 1))),
                    one(letter(n))
                        .concat(&one(0))
                        .concat(&span(n, j))
                        .concat(&Word::from([1, 0]))
                        .concat(&span(n, k))
                        .concat(&hat),
                ));
            }
        }
    }
    // (9) s_{0j} s_n s_k s_0 s_{nk} - s_1 s_{0j} s_n s_0 s_{n-1,k} s_{k+1}
    for j in 1..n {
        for k in (j + 2..n).rev() {
            out.push(FamilyInstance::new(
                format!("(9)[j={j},k={k}]"),
                span(0, j)
                    .concat(&Word::from([letter(n), letter(k), 0]))
                    .concat(&span(n, k)),
                one(1)
                    .concat(&span(0, j))
                    .concat(&Word::from([letter(n), 0]))
                    .concat(&span(n - 1, k))
                    .concat(&one(letter(k + 1))),
            ));
        }
    }
    // (10) s_{0j} s_n s_{kl} s_0 s_{nl} - s_1 s_{0j} s_n s_0 s_{n-1,l} s_{k+1,l+1}
    for j in 1..n {
        for k in (j + 2..n).rev() {
            for l in (2..k).rev() {
                out.push(FamilyInstance::new(
                    format!("(10)[j={j},k={k},l={l}]"),
                    span(0, j)
                        .concat(&one(letter(n)))
                        .concat(&span(k, l))
                        .concat(&one(0))
                        .concat(&span(n, l)),
                    one(1)
                        .concat(&span(0, j))
                        .concat(&Word::from([letter(n), 0]))
                        .concat(&span(n - 1, l))
                        .concat(&span(k + 1, l + 1)),
                ));
            }
        }
    }
    out
}

/// Relabels every letter through `map` (used to move between the two affine
/// ordering conventions, `i -> n - i`).
pub fn relabel_word(w: &Word, map: &[Letter]) -> Word {
    Word::from_letters(w.letters().iter().map(|&c| map[c as usize]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_a3_presentation_matches_listed_relations() {
        let p = preset_presentation(Family::AffineA(3)).unwrap();
        assert_eq!(p.relations.len(), 10); // 4 involutions + 6 braid rules
        // s2 s0 -> s0 s2 (commutation, greater generator first)
        assert!(p.relations.contains(&(Word::from([2, 0]), Word::from([0, 2]))));
        // s1 s0 s1 -> s0 s1 s0
        assert!(p.relations.contains(&(Word::from([1, 0, 1]), Word::from([0, 1, 0]))));
        // cycle entry: order of (s0, s3) is 3
        let (m, _, _) = preset_matrix(Family::AffineA(3)).unwrap();
        assert_eq!(m.order(0, 3), Some(3));
    }

    #[test]
    fn single_generator_presentation() {
        let m = CoxeterMatrix::new(1, vec![1]).unwrap();
        let p = presentation_from_matrix(&m, &[0], &["s1".into()]).unwrap();
        assert_eq!(p.relations, vec![(Word::from([0, 0]), Word::empty())]);
    }

    #[test]
    fn infinite_entry_contributes_no_rule() {
        let m = CoxeterMatrix::new(2, vec![1, 0, 0, 1]).unwrap();
        let p =
            presentation_from_matrix(&m, &[1, 0], &["s1".into(), "s2".into()]).unwrap();
        assert_eq!(p.relations.len(), 2);
        assert!(p.relations.iter().all(|(l, r)| l.len() == 2 && r.is_empty()));
    }

    #[test]
    fn preset_matrices() {
        let (a2, _, _) = preset_matrix(Family::A(2)).unwrap();
        assert_eq!(a2.order(0, 1), Some(3));
        let (b3, _, _) = preset_matrix(Family::B(3)).unwrap();
        assert_eq!(b3.order(1, 2), Some(4));
        assert_eq!(b3.order(0, 1), Some(3));
        assert_eq!(b3.order(0, 2), Some(2));
    }

    #[test]
    fn run_words() {
        assert_eq!(
            word_sij(4, 2, SpanDirection::Descending).unwrap(),
            Word::from([4, 3, 2])
        );
        assert_eq!(word_sij(3, 4, SpanDirection::Descending).unwrap(), Word::empty());
        assert_eq!(word_sij(2, 2, SpanDirection::Ascending).unwrap(), Word::from([2]));
        assert!(word_sij(4, 6, SpanDirection::Descending).is_err());
        assert_eq!(word_shat(1, 0).unwrap(), Word::from([1, 0]));
        assert_eq!(word_shat(1, 2).unwrap(), Word::from([1, 0, 2, 1, 3, 2]));
        assert!(word_shat(3, 1).is_err());
    }

    #[test]
    fn a4_instance_at_i2_j1() {
        let (_, instances) = closed_form_instances(Family::A(3)).unwrap();
        let inst = instances.iter().find(|i| i.label == "A4[i=2,j=1]").unwrap();
        // s_{3,1} s_3 = s_2 s_{3,1}: letters are 1-based generators minus one
        assert_eq!(inst.left, Word::from([2, 1, 0, 2]));
        assert_eq!(inst.right, Word::from([1, 2, 1, 0]));
    }

    #[test]
    fn b6_at_top_index_reproduces_b5() {
        let (_, instances) = closed_form_instances(Family::B(3)).unwrap();
        let b5 = instances.iter().find(|i| i.label == "B5").unwrap();
        let b6 = instances.iter().find(|i| i.label == "B6[j=2]").unwrap();
        assert_eq!(b5.left, b6.left);
        assert_eq!(b5.right, b6.right);
    }

    #[test]
    fn affine_family3_base_case() {
        // at j = n-1 the rule is s_0 s_n s_{n-1} s_n - s_{n-1} s_0 s_n s_{n-1}
        let n = 3;
        let (_, instances) = closed_form_instances(Family::AffineA(n)).unwrap();
        let inst = instances.iter().find(|i| i.label == "(3)[j=2]").unwrap();
        assert_eq!(inst.left, Word::from([0, 3, 2, 3]));
        assert_eq!(inst.right, Word::from([2, 0, 3, 2]));
    }

    #[test]
    fn matrix_grid_round_trip() {
        let (m, _, _) = preset_matrix(Family::AffineA(3)).unwrap();
        let grid = m.to_grid();
        assert_eq!(CoxeterMatrix::parse_grid(&grid).unwrap(), m);
        // 0 denotes infinity
        let inf = CoxeterMatrix::parse_grid("1 0\n0 1\n").unwrap();
        assert_eq!(inf.order(0, 1), None);
    }

    #[test]
    fn preset_parsing() {
        assert_eq!(parse_preset("a:3").unwrap(), Family::A(3));
        assert_eq!(parse_preset("affine-a:4").unwrap(), Family::AffineA(4));
        assert!(parse_preset("e:8").is_err());
        assert!(parse_preset("a").is_err());
    }

    #[test]
    fn preset_size_bounds() {
        assert!(preset_matrix(Family::A(1)).is_err());
        assert!(preset_matrix(Family::D(2)).is_err());
        assert!(preset_matrix(Family::AffineA(1)).is_err());
    }
}
