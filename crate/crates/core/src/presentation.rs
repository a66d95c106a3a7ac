//! Finitely presented groups: construction, the text grammar used by the
//! CLI and fixtures, abelianization, and presentation-level products.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! < a,b,c,z | a^4*z, b^4*z, c^4*z, a*b*c*z^1, [z,a], [z,b], [z,c] >
//! ```
//!
//! Relators are `*`-separated factors; a factor is a generator with an
//! optional `^` integer exponent, or a commutator `[u,v]` which expands to
//! `u^-1*v^-1*u*v`.

use std::fmt;
use std::str::FromStr;

use crate::abelian::{self, AbelianInvariants, AbelianMap};
use crate::matrix::Matrix;
use crate::word::Word;
use crate::{Int, IntMatrix};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("relator references generator index {index} but there are only {count} generators")]
    InvalidGenerator { index: usize, count: usize },
    #[error("endomorphism image count {got} != generator count {want}")]
    ImageCountMismatch { got: usize, want: usize },
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

/// A finitely presented group: named generators and freely-and-cyclically
/// reduced relator words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    gens: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new<S: Into<String>>(
        gens: Vec<S>,
        relators: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        let gens: Vec<String> = gens.into_iter().map(Into::into).collect();
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].contains(g) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        let mut reduced = Vec::with_capacity(relators.len());
        for r in relators {
            if let Some(index) = r.max_generator() {
                if index >= gens.len() {
                    return Err(PresentationError::InvalidGenerator { index, count: gens.len() });
                }
            }
            let r = r.cyclically_reduce();
            if !r.is_empty() {
                reduced.push(r);
            }
        }
        Ok(Presentation { gens, relators: reduced })
    }

    /// Free group of rank `n` with generators `x1..xn`.
    pub fn free(n: usize) -> Self {
        let gens = (1..=n).map(|i| format!("x{i}")).collect();
        Presentation { gens, relators: Vec::new() }
    }

    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    pub fn gen_count(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Relator exponent matrix: one row per relator, one column per
    /// generator, entries are net exponents.
    pub fn relator_matrix(&self) -> IntMatrix {
        let mut m: IntMatrix = Matrix::zero(self.relators.len(), self.gens.len());
        for (i, r) in self.relators.iter().enumerate() {
            for &(g, e) in r.syllables() {
                m[(i, g)] = m[(i, g)].clone() + Int::from(e);
            }
        }
        m
    }

    /// Abelianization via Smith normal form of the relator matrix.
    pub fn abelianization(&self) -> AbelianInvariants {
        abelian::invariants_of_matrix(&self.relator_matrix())
    }

    /// Abelianization together with the generator coordinate map.
    pub fn abelianization_map(&self) -> AbelianMap {
        abelian::map_of_matrix(&self.relator_matrix())
    }

    /// Direct product: disjoint generator union, both relator sets, and all
    /// cross commutators. Colliding right-hand names get primes appended.
    pub fn direct_product(&self, other: &Presentation) -> Presentation {
        let mut gens = self.gens.clone();
        for g in &other.gens {
            let mut name = g.clone();
            while gens.contains(&name) {
                name.push('\'');
            }
            gens.push(name);
        }
        let off = self.gens.len();
        let shift = |w: &Word| -> Word {
            Word::reduce(&w.syllables().iter().map(|&(g, e)| (g + off, e)).collect::<Vec<_>>())
        };
        let mut relators = self.relators.clone();
        relators.extend(other.relators.iter().map(&shift));
        for i in 0..self.gens.len() {
            for j in 0..other.gens.len() {
                relators
                    .push(Word::commutator(&Word::generator(i, 1), &Word::generator(off + j, 1)));
            }
        }
        Presentation::new(gens, relators).expect("product of valid presentations")
    }

    /// Semidirect product `P x| C_m` for an endomorphism given by generator
    /// images: adds a generator `t` with `t^m` and `t g t^-1 phi(g)^-1`.
    pub fn semidirect(
        &self,
        images: &[Word],
        m: i64,
    ) -> Result<Presentation, PresentationError> {
        if images.len() != self.gens.len() {
            return Err(PresentationError::ImageCountMismatch {
                got: images.len(),
                want: self.gens.len(),
            });
        }
        assert!(m >= 2, "semidirect order must be >= 2");
        let mut gens = self.gens.clone();
        let mut t = "t".to_string();
        while gens.contains(&t) {
            t.push('\'');
        }
        gens.push(t);
        let ti = gens.len() - 1;
        let mut relators = self.relators.clone();
        relators.push(Word::generator(ti, m));
        for (g, img) in images.iter().enumerate() {
            if let Some(index) = img.max_generator() {
                if index >= self.gens.len() {
                    return Err(PresentationError::InvalidGenerator {
                        index,
                        count: self.gens.len(),
                    });
                }
            }
            let w = Word::generator(ti, 1)
                .concat(&Word::generator(g, 1))
                .concat(&Word::generator(ti, -1))
                .concat(&img.inverse());
            relators.push(w);
        }
        Presentation::new(gens, relators)
    }

    /// Renders a word over this presentation's generator names.
    pub fn show_word(&self, w: &Word) -> String {
        w.display(&self.gens)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.display(&self.gens)).collect();
        write!(f, "< {} | {} >", self.gens.join(","), rels.join(", "))
    }
}

impl FromStr for Presentation {
    type Err = PresentationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).presentation()
    }
}

/// Parses a word in the relator grammar over the given presentation.
pub fn parse_word(p: &Presentation, s: &str) -> Result<Word, PresentationError> {
    let mut parser = Parser::new(s);
    parser.skip_ws();
    let names = p.gens.to_vec();
    let w = parser.word(&names)?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.error("trailing input after word"));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { src: s.as_bytes(), pos: 0 }
    }

    fn error(&self, msg: &str) -> PresentationError {
        let mut line = 1;
        let mut col = 1;
        for &b in &self.src[..self.pos.min(self.src.len())] {
            if b == b'\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        PresentationError::Parse { line, col, msg: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), PresentationError> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", b as char)))
        }
    }

    fn ident(&mut self) -> Result<String, PresentationError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_alphanumeric() || b == b'_' || b == b'\'')
        {
            self.pos += 1;
        }
        if self.pos == start || self.src[start].is_ascii_digit() {
            return Err(self.error("expected generator name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn integer(&mut self) -> Result<i64, PresentationError> {
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i64 = digits.parse().map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn factor(&mut self, names: &[String]) -> Result<Word, PresentationError> {
        self.skip_ws();
        let base = match self.peek() {
            Some(b'[') => {
                self.bump();
                let u = self.word(names)?;
                self.expect(b',')?;
                let v = self.word(names)?;
                self.expect(b']')?;
                Word::commutator(&u, &v)
            }
            Some(b'1') => {
                self.bump();
                Word::empty()
            }
            _ => {
                let name = self.ident()?;
                let idx = names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| self.error(&format!("unknown generator `{name}`")))?;
                Word::generator(idx, 1)
            }
        };
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn word(&mut self, names: &[String]) -> Result<Word, PresentationError> {
        let mut w = self.factor(names)?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.bump();
                let f = self.factor(names)?;
                w = w.concat(&f);
            } else {
                break;
            }
        }
        Ok(w)
    }

    fn presentation(&mut self) -> Result<Presentation, PresentationError> {
        self.expect(b'<')?;
        let mut names = Vec::new();
        self.skip_ws();
        if self.peek() != Some(b'|') && self.peek() != Some(b'>') {
            loop {
                names.push(self.ident()?);
                self.skip_ws();
                if self.peek() == Some(b',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        let mut relators = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b'|') {
            self.bump();
            self.skip_ws();
            if self.peek() != Some(b'>') {
                loop {
                    relators.push(self.word(&names)?);
                    self.skip_ws();
                    if self.peek() == Some(b',') {
                        self.bump();
                    } else {
                        break;
                    }
                }
            }
        }
        self.expect(b'>')?;
        self.skip_ws();
        if !self.at_end() {
            return Err(self.error("trailing input after presentation"));
        }
        Presentation::new(names, relators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    fn tor(p: &Presentation) -> Vec<i64> {
        p.abelianization().torsion.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn parse_round_trip() {
        let p = pres("< a,b,c,z | a^4*z, b^4*z, c^4*z, a*b*c*z^1, [z,a], [z,b], [z,c] >");
        assert_eq!(p.gen_count(), 4);
        assert_eq!(p.relators().len(), 7);
        let shown = p.to_string();
        let q: Presentation = shown.parse().unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = "< a,b | a*q >".parse::<Presentation>().unwrap_err();
        match err {
            PresentationError::Parse { line, col, msg } => {
                assert_eq!(line, 1);
                assert!(col > 8, "col = {col}");
                assert!(msg.contains("unknown generator"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!("< a,a | >".parse::<Presentation>().is_err());
    }

    #[test]
    fn commutator_shorthand_expands() {
        let p = pres("< x,y | [x,y] >");
        assert_eq!(p.relators()[0], Word::commutator(&Word::generator(0, 1), &Word::generator(1, 1)));
    }

    #[test]
    fn triangle_abelianizations() {
        assert_eq!(tor(&pres("< a,b,c | a^3, b^3, c^4, a*b*c >")), vec![3]);
        assert_eq!(tor(&pres("< a,b,c | a^4, b^4, c^4, a*b*c >")), vec![4, 4]);
        let free = pres("< x | >");
        let ab = free.abelianization();
        assert_eq!(ab.free_rank, 1);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn direct_product_examples() {
        let p = pres("< x | x^2 >").direct_product(&pres("< y | y^3 >"));
        assert_eq!(tor(&p), vec![6]);
        let f2 = Presentation::free(2);
        let sq = f2.direct_product(&f2);
        assert_eq!(sq.abelianization().free_rank, 4);
        assert_eq!(sq.relators().len(), 4); // cross commutators only
        let d = pres("< a,b,c | a^3, b^3, c^4, a*b*c >");
        let dd = d.direct_product(&d);
        assert_eq!(tor(&dd), vec![3, 3]);
    }

    #[test]
    fn semidirect_examples() {
        // <z> x| C2 with inversion: infinite dihedral, H1 = C2 x C2
        let z = pres("< z | >");
        let lambda = z.semidirect(&[Word::generator(0, -1)], 2).unwrap();
        assert_eq!(tor(&lambda), vec![2, 2]);
        assert_eq!(lambda.abelianization().free_rank, 0);
        // identity action, m = 3: Z x C3
        let t = z.semidirect(&[Word::generator(0, 1)], 3).unwrap();
        let ab = t.abelianization();
        assert_eq!(ab.free_rank, 1);
        assert_eq!(tor(&t), vec![3]);
        // image count mismatch
        assert!(z.semidirect(&[], 2).is_err());
    }

    #[test]
    fn abelianization_map_orders() {
        let p = pres("< a,b,c | a^3, b^3, c^4, a*b*c >");
        let map = p.abelianization_map();
        assert_eq!(map.invariants, p.abelianization());
        // c dies in H1 = C3, a has order 3
        assert!(map.is_trivial_image(&Word::generator(2, 1)));
        assert_eq!(map.image_order(&Word::generator(0, 1)), Some(Int::from(3)));
        // free coordinate: <x | > has x of infinite order
        let f = pres("< x | >");
        assert_eq!(f.abelianization_map().image_order(&Word::generator(0, 1)), None);
    }
}
