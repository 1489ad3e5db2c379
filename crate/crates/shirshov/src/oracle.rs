//! Brute-force group models used as ground truth: permutations, signed and
//! even-signed permutations, and affine permutations in window notation, with
//! Cayley-graph breadth-first search.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::coxeter::Family;
use crate::enumerate::GrowthSeries;
use crate::words::{Letter, Word};
use crate::Error;

/// A concrete group element in the model attached to a preset family.
///
/// * `Permutation`: window of a permutation of `{0..l}` (l+1 points).
/// * `Signed`: window of signed values `±1..±l`, bijective on absolute values.
/// * `EvenSigned`: as `Signed` with an even number of negative entries.
/// * `Affine`: window `w(1..n+1)` of an affine permutation: the periodic
///   extension `w(i + n+1) = w(i) + n+1` is a bijection of the integers and
///   the window sums to `(n+1)(n+2)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Permutation(Vec<u8>),
    Signed(Vec<i32>),
    EvenSigned(Vec<i32>),
    Affine(Vec<i64>),
}

fn model_rank(family: Family) -> usize {
    match family {
        Family::A(l) | Family::B(l) | Family::D(l) => l,
        Family::AffineA(n) => n,
    }
}

/// Number of generators of the preset.
pub fn generator_count(family: Family) -> usize {
    match family {
        Family::A(l) | Family::B(l) | Family::D(l) => l,
        Family::AffineA(n) => n + 1,
    }
}

/// The identity element of the model.
pub fn identity(family: Family) -> GroupElement {
    let r = model_rank(family);
    match family {
        Family::A(l) => GroupElement::Permutation((0..=l as u8).collect()),
        Family::B(_) => GroupElement::Signed((1..=r as i32).collect()),
        Family::D(_) => GroupElement::EvenSigned((1..=r as i32).collect()),
        Family::AffineA(n) => GroupElement::Affine((1..=(n + 1) as i64).collect()),
    }
}

/// Right-multiplies `e` by the simple reflection with the given letter index.
pub fn apply_generator(e: &GroupElement, family: Family, letter: Letter) -> Result<GroupElement, Error> {
    let c = letter as usize;
    if c >= generator_count(family) {
        return Err(Error::invalid("generator index out of range for the family"));
    }
    Ok(match (e, family) {
        (GroupElement::Permutation(w), Family::A(_)) => {
            // letter c is the adjacent transposition of points c, c+1
            let mut w = w.clone();
            w.swap(c, c + 1);
            GroupElement::Permutation(w)
        }
        (GroupElement::Signed(w), Family::B(l)) => {
            let mut w = w.clone();
            if c == l - 1 {
                w[l - 1] = -w[l - 1];
            } else {
                w.swap(c, c + 1);
            }
            GroupElement::Signed(w)
        }
        (GroupElement::EvenSigned(w), Family::D(l)) => {
            let mut w = w.clone();
            if c == l - 1 {
                w.swap(l - 2, l - 1);
                w[l - 2] = -w[l - 2];
                w[l - 1] = -w[l - 1];
            } else {
                w.swap(c, c + 1);
            }
            GroupElement::EvenSigned(w)
        }
        (GroupElement::Affine(w), Family::AffineA(n)) => {
            let period = (n + 1) as i64;
            let mut w = w.clone();
            if c == 0 {
                // the cycle-closing generator: swap w(1) and w(n+1) across
                // the period boundary
                let first = w[0];
                let last = w[n];
                w[0] = last - period;
                w[n] = first + period;
            } else {
                w.swap(c - 1, c);
            }
            GroupElement::Affine(w)
        }
        _ => return Err(Error::invalid("element does not belong to the family's model")),
    })
}

/// The standard simple reflection for a generator, as a group element.
pub fn generator_action(family: Family, index: Letter) -> Result<GroupElement, Error> {
    apply_generator(&identity(family), family, index)
}

/// Evaluates a word as the left-to-right product of generator actions.
/// The empty word maps to the identity.
pub fn element_of(w: &Word, family: Family) -> Result<GroupElement, Error> {
    let mut e = identity(family);
    for &c in w.letters() {
        e = apply_generator(&e, family, c)?;
    }
    Ok(e)
}

/// The order of the product `s_i s_j` in the model, up to `max`.
pub fn braid_order(family: Family, i: Letter, j: Letter, max: u32) -> Result<Option<u32>, Error> {
    let id = identity(family);
    let mut e = id.clone();
    for k in 1..=max {
        e = apply_generator(&e, family, i)?;
        e = apply_generator(&e, family, j)?;
        if e == id {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

const BFS_GUARD: usize = 4_000_000;

/// Breadth-first search over the Cayley graph from the identity: `c_k` is the
/// number of elements first reached at depth `k`.
///
/// Finite families are exhausted (producing a total) no matter how small `L`
/// is, with counts padded by zeros up to `L`. The affine family is explored
/// to depth `L` only. Exceeding the internal size guard is a resource error.
pub fn cayley_growth(family: Family, max_len: usize) -> Result<GrowthSeries, Error> {
    let finite = !matches!(family, Family::AffineA(_));
    let gens = generator_count(family);
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut frontier = vec![identity(family)];
    seen.insert(identity(family));
    let mut counts: Vec<usize> = vec![1];
    let mut depth = 0usize;
    while !frontier.is_empty() && (finite || depth < max_len) {
        depth += 1;
        let mut next = Vec::new();
        for e in &frontier {
            for c in 0..gens {
                let x = apply_generator(e, family, c as Letter)?;
                if seen.insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        if seen.len() > BFS_GUARD {
            return Err(Error::resource("Cayley BFS exceeded the element guard"));
        }
        if next.is_empty() {
            break;
        }
        counts.push(next.len());
        frontier = next;
    }
    let total = finite.then(|| BigUint::from(seen.len()));
    let mut big: Vec<BigUint> = counts.into_iter().map(BigUint::from).collect();
    while big.len() < max_len + 1 {
        big.push(BigUint::from(0u32));
    }
    big.truncate(max_len + 1);
    Ok(GrowthSeries { counts: big, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{preset_matrix, preset_presentation};

    #[test]
    fn a3_first_generator_is_a_transposition() {
        let g = generator_action(Family::A(3), 0).unwrap();
        assert_eq!(g, GroupElement::Permutation(vec![1, 0, 2, 3]));
    }

    #[test]
    fn generators_are_involutions() {
        for family in [Family::A(3), Family::B(3), Family::D(4), Family::AffineA(3)] {
            for c in 0..generator_count(family) {
                let g = generator_action(family, c as Letter).unwrap();
                let gg = apply_generator(&g, family, c as Letter).unwrap();
                assert_eq!(gg, identity(family), "{family} generator {c}");
            }
        }
    }

    #[test]
    fn braid_orders_reproduce_the_preset_matrix() {
        for family in [Family::A(4), Family::B(3), Family::D(4), Family::AffineA(3)] {
            let (matrix, _, _) = preset_matrix(family).unwrap();
            let n = generator_count(family);
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let expected = matrix.order(i as Letter, j as Letter);
                    let got = braid_order(family, i as Letter, j as Letter, 6).unwrap();
                    assert_eq!(got, expected, "{family} pair ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn defining_relations_evaluate_to_identity() {
        for family in [Family::A(3), Family::B(3), Family::D(4), Family::AffineA(4)] {
            let p = preset_presentation(family).unwrap();
            for (lhs, rhs) in &p.relations {
                assert_eq!(
                    element_of(lhs, family).unwrap(),
                    element_of(rhs, family).unwrap(),
                    "{family}: {} = {}",
                    p.alphabet.format_word(lhs),
                    p.alphabet.format_word(rhs)
                );
            }
        }
    }

    #[test]
    fn affine_braid_and_commutation_examples() {
        // s1 s0 s1 = s0 s1 s0 and s0 s2 = s2 s0 in the 4-generator affine group
        let f = Family::AffineA(3);
        let e1 = element_of(&Word::from([1, 0, 1]), f).unwrap();
        let e2 = element_of(&Word::from([0, 1, 0]), f).unwrap();
        assert_eq!(e1, e2);
        let e3 = element_of(&Word::from([0, 2]), f).unwrap();
        let e4 = element_of(&Word::from([2, 0]), f).unwrap();
        assert_eq!(e3, e4);
        // cycle adjacency: order of s0 s3 is 3
        assert_eq!(braid_order(f, 0, 3, 6).unwrap(), Some(3));
    }

    #[test]
    fn small_growth_totals() {
        let a2 = cayley_growth(Family::A(2), 3).unwrap();
        let counts: Vec<u64> = a2.counts.iter().map(|c| u64::try_from(c).unwrap()).collect();
        assert_eq!(counts, vec![1, 2, 2, 1]);
        assert_eq!(a2.total, Some(BigUint::from(6u32)));
        let b2 = cayley_growth(Family::B(2), 4).unwrap();
        assert_eq!(b2.total, Some(BigUint::from(8u32)));
    }

    #[test]
    fn affine_growth_is_unbounded_but_positive() {
        let g = cayley_growth(Family::AffineA(2), 4).unwrap();
        assert!(g.total.is_none());
        assert_eq!(g.counts.len(), 5);
        assert!(g.counts.iter().all(|c| *c > BigUint::from(0u32)));
    }

    #[test]
    fn window_invariants_hold_along_random_words() {
        let f = Family::AffineA(3);
        let period = 4i64;
        let mut state = 99u64;
        let mut rng = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 33) as usize
        };
        for _ in 0..100 {
            let len = rng() % 12;
            let w = Word::from_letters((0..len).map(|_| (rng() % 4) as Letter).collect());
            let GroupElement::Affine(win) = element_of(&w, f).unwrap() else {
                panic!("wrong variant")
            };
            let sum: i64 = win.iter().sum();
            assert_eq!(sum, period * (period + 1) / 2);
            let mut residues: Vec<i64> = win.iter().map(|x| x.rem_euclid(period)).collect();
            residues.sort_unstable();
            assert_eq!(residues, vec![0, 1, 2, 3]);
        }
    }

    #[test]
    fn even_signed_model_keeps_even_sign_count() {
        let f = Family::D(4);
        let mut e = identity(f);
        for c in [3u8, 0, 3, 2, 1, 3, 3, 2] {
            e = apply_generator(&e, f, c).unwrap();
            let GroupElement::EvenSigned(w) = &e else { panic!("wrong variant") };
            assert_eq!(w.iter().filter(|x| **x < 0).count() % 2, 0);
        }
    }

    #[test]
    fn out_of_range_generator_rejected() {
        assert!(generator_action(Family::A(3), 3).is_err());
        assert!(generator_action(Family::AffineA(2), 3).is_err());
    }
}
