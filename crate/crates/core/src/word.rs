//! Freely reduced words over an indexed generator alphabet.

use std::fmt;

/// A syllable is a generator index with a nonzero exponent.
pub type Syllable = (usize, i64);

/// A freely reduced word: adjacent syllables have distinct generator
/// indices and no zero exponents. This makes equality syntactic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.syllables)
    }
}

impl Word {
    pub fn empty() -> Self {
        Word { syllables: Vec::new() }
    }

    /// A single generator to a power (empty word when `exp == 0`).
    pub fn generator(gen: usize, exp: i64) -> Self {
        if exp == 0 {
            Word::empty()
        } else {
            Word { syllables: vec![(gen, exp)] }
        }
    }

    /// Freely reduces a raw syllable sequence: merges adjacent syllables of
    /// equal generator and drops zero exponents. Idempotent.
    pub fn reduce(raw: &[Syllable]) -> Self {
        let mut out: Vec<Syllable> = Vec::with_capacity(raw.len());
        for &(g, e) in raw {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word { syllables: out }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length counting exponent multiplicity.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut raw = self.syllables.clone();
        raw.extend_from_slice(&other.syllables);
        Word::reduce(&raw)
    }

    pub fn inverse(&self) -> Word {
        Word { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Commutator `[u, v] = u^-1 v^-1 u v`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.inverse().concat(&v.inverse()).concat(u).concat(v)
    }

    pub fn conjugate(&self, by: &Word) -> Word {
        by.inverse().concat(self).concat(by)
    }

    /// Cyclic reduction: merges first and last syllables of equal generator
    /// (a conjugacy-class representative, canonical for relators).
    pub fn cyclically_reduce(&self) -> Word {
        let mut s = self.syllables.clone();
        loop {
            if s.len() < 2 {
                break;
            }
            let (fg, fe) = s[0];
            let (lg, le) = *s.last().unwrap();
            if fg != lg {
                break;
            }
            let sum = fe + le;
            s.pop();
            s.remove(0);
            if sum != 0 {
                s.insert(0, (fg, sum));
            }
        }
        Word::reduce(&s)
    }

    /// Generator indices occurring in the word, deduplicated, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = self.syllables.iter().map(|&(g, _)| g).collect();
        gens.sort_unstable();
        gens.dedup();
        gens
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    /// Net exponent of `gen` in the word (abelianized coefficient).
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.syllables.iter().filter(|&&(g, _)| g == gen).map(|&(_, e)| e).sum()
    }

    /// Number of syllable occurrences of `gen` (not exponent-weighted).
    pub fn occurrences(&self, gen: usize) -> usize {
        self.syllables.iter().filter(|&&(g, _)| g == gen).count()
    }

    /// Substitutes each generator by the given word (`images[g]` replaces
    /// generator `g`), then freely reduces.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::empty();
        for &(g, e) in &self.syllables {
            out = out.concat(&images[g].pow(e));
        }
        out
    }

    /// Renders with the given generator names, `*` separated, `^` powers.
    pub fn display(&self, names: &[String]) -> String {
        if self.syllables.is_empty() {
            return "1".to_string();
        }
        self.syllables
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{}", names[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_cancels() {
        // a * a^-1 -> empty
        assert!(Word::reduce(&[(0, 1), (0, -1)]).is_empty());
        // a^2 * a^3 -> a^5
        assert_eq!(Word::reduce(&[(0, 2), (0, 3)]).syllables(), &[(0, 5)]);
        // a b b^-1 a -> a^2
        assert_eq!(Word::reduce(&[(0, 1), (1, 1), (1, -1), (0, 1)]).syllables(), &[(0, 2)]);
    }

    #[test]
    fn reduce_idempotent_and_cascading() {
        // a b^2 b^-2 a^-1 collapses fully
        let w = Word::reduce(&[(0, 1), (1, 2), (1, -2), (0, -1)]);
        assert!(w.is_empty());
        let v = Word::reduce(&[(0, 1), (1, -1), (2, 3)]);
        assert_eq!(Word::reduce(v.syllables()), v);
    }

    #[test]
    fn inverse_concat_is_identity() {
        let w = Word::reduce(&[(0, 2), (1, -1), (2, 4)]);
        assert!(w.concat(&w.inverse()).is_empty());
        assert!(w.inverse().concat(&w).is_empty());
    }

    #[test]
    fn cyclic_reduction() {
        // a b a^-1 cyclically reduces to b
        let w = Word::reduce(&[(0, 1), (1, 1), (0, -1)]);
        assert_eq!(w.cyclically_reduce().syllables(), &[(1, 1)]);
        // a b a merges cyclically to the conjugate a^2 b
        let v = Word::reduce(&[(0, 1), (1, 1), (0, 1)]);
        assert_eq!(v.cyclically_reduce().syllables(), &[(0, 2), (1, 1)]);
        // a^2 b a^-1 -> a b
        let x = Word::reduce(&[(0, 2), (1, 1), (0, -1)]);
        assert_eq!(x.cyclically_reduce().syllables(), &[(0, 1), (1, 1)]);
    }

    #[test]
    fn commutator_shape() {
        let a = Word::generator(0, 1);
        let b = Word::generator(1, 1);
        assert_eq!(Word::commutator(&a, &b).syllables(), &[(0, -1), (1, -1), (0, 1), (1, 1)]);
    }

    #[test]
    fn substitution_reduces() {
        // w = a b, a -> x y, b -> y^-1 x: w -> x y y^-1 x = x^2
        let w = Word::reduce(&[(0, 1), (1, 1)]);
        let images =
            vec![Word::reduce(&[(0, 1), (1, 1)]), Word::reduce(&[(1, -1), (0, 1)])];
        assert_eq!(w.substitute(&images).syllables(), &[(0, 2)]);
    }
}
