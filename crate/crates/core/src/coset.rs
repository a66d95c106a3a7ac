//! Todd-Coxeter coset enumeration (HLT relator tracing with union-find
//! coincidence handling) and Reidemeister-Schreier subgroup presentations.

use crate::finite::FiniteGroupTable;
use crate::presentation::Presentation;
use crate::word::Word;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CosetError {
    #[error("coset budget {max_cosets} exceeded before closure (index may be infinite or the budget too small)")]
    BudgetExceeded { max_cosets: usize },
    #[error("map does not kill relator #{relator}; not a homomorphism")]
    InvalidMap { relator: usize },
    #[error("image count {got} != generator count {want}")]
    ImageCountMismatch { got: usize, want: usize },
}

/// A letter is a generator with a direction: column `2g` is the action of
/// `g`, column `2g+1` of `g^-1`.
type Letter = usize;

fn letter(g: usize, inverse: bool) -> Letter {
    2 * g + usize::from(inverse)
}

fn letter_inv(l: Letter) -> Letter {
    l ^ 1
}

fn word_letters(w: &Word) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len());
    for &(g, e) in w.syllables() {
        for _ in 0..e.unsigned_abs() {
            out.push(letter(g, e < 0));
        }
    }
    out
}

/// A complete coset table: every (coset, letter) action defined, every
/// relator closing at every coset, every subgroup generator fixing coset 0.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub cosets: usize,
    n_gens: usize,
    action: Vec<u32>, // cosets x 2n, row-major
    pub subgroup_gens: Vec<Word>,
}

impl CosetTable {
    #[inline]
    pub fn act(&self, coset: usize, g: usize, inverse: bool) -> usize {
        self.action[coset * 2 * self.n_gens + letter(g, inverse)] as usize
    }

    fn act_letter(&self, coset: usize, l: Letter) -> usize {
        self.action[coset * 2 * self.n_gens + l] as usize
    }

    pub fn trace(&self, start: usize, w: &Word) -> usize {
        word_letters(w).iter().fold(start, |c, &l| self.act_letter(c, l))
    }
}

struct Enumerator {
    n_gens: usize,
    relators: Vec<Vec<Letter>>,
    table: Vec<Vec<Option<u32>>>,
    parent: Vec<u32>, // union-find
    processed: Vec<bool>,
    queue: std::collections::VecDeque<(u32, u32)>,
    max_cosets: usize,
    defined: usize,
}

impl Enumerator {
    fn new(n_gens: usize, relators: Vec<Vec<Letter>>, max_cosets: usize) -> Self {
        let mut e = Enumerator {
            n_gens,
            relators,
            table: Vec::new(),
            parent: Vec::new(),
            processed: Vec::new(),
            queue: Default::default(),
            max_cosets,
            defined: 0,
        };
        e.new_coset().expect("first coset within budget");
        e
    }

    fn find(&self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            c = self.parent[c as usize];
        }
        c
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn new_coset(&mut self) -> Result<u32, CosetError> {
        if self.table.len() >= self.max_cosets {
            return Err(CosetError::BudgetExceeded { max_cosets: self.max_cosets });
        }
        let id = self.table.len() as u32;
        self.table.push(vec![None; 2 * self.n_gens]);
        self.parent.push(id);
        self.processed.push(false);
        self.defined += 1;
        Ok(id)
    }

    fn entry(&self, c: u32, l: Letter) -> Option<u32> {
        self.table[c as usize][l].map(|t| self.find(t))
    }

    /// Records `c * l = d` in both directions, queuing a coincidence when an
    /// entry disagrees.
    fn set(&mut self, c: u32, l: Letter, d: u32) {
        let c = self.find(c);
        let d = self.find(d);
        match self.entry(c, l) {
            Some(existing) if existing != d => self.queue.push_back((existing, d)),
            _ => self.table[c as usize][l] = Some(d),
        }
        match self.entry(d, letter_inv(l)) {
            Some(existing) if existing != c => self.queue.push_back((existing, c)),
            _ => self.table[d as usize][letter_inv(l)] = Some(c),
        }
    }

    /// Merges pending coincidences; the smaller-numbered coset survives.
    fn process_coincidences(&mut self) {
        while let Some((a, b)) = self.queue.pop_front() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (keep, kill) = if a < b { (a, b) } else { (b, a) };
            self.parent[kill as usize] = keep;
            // fold the dead row into the survivor
            for l in 0..2 * self.n_gens {
                if let Some(t) = self.table[kill as usize][l] {
                    let t = self.find(t);
                    match self.entry(keep, l) {
                        Some(existing) if existing != t => self.queue.push_back((existing, t)),
                        Some(_) => {}
                        None => self.table[keep as usize][l] = Some(t),
                    }
                }
            }
            // survivor changed; it must be rescanned
            self.processed[keep as usize] = false;
        }
    }

    /// Scans a relator (or subgroup generator) from `start`, defining cosets
    /// to fill the gap (HLT style), then closes with a deduction or
    /// coincidence.
    fn scan_fill(&mut self, start: u32, word: &[Letter]) -> Result<(), CosetError> {
        if word.is_empty() {
            return Ok(());
        }
        let start = self.find(start);
        let mut f = start;
        let mut i = 0;
        while i < word.len() {
            match self.entry(f, word[i]) {
                Some(next) => {
                    f = next;
                    i += 1;
                }
                None => break,
            }
        }
        if i == word.len() {
            if f != start {
                self.queue.push_back((f, start));
            }
            return Ok(());
        }
        let mut b = start;
        let mut j = word.len();
        while j > i {
            match self.entry(b, letter_inv(word[j - 1])) {
                Some(prev) => {
                    b = prev;
                    j -= 1;
                }
                None => break,
            }
        }
        if j == i {
            // both scans met across a full trace
            if f != b {
                self.queue.push_back((f, b));
            }
            return Ok(());
        }
        while j > i + 1 {
            let d = self.new_coset()?;
            self.set(f, word[i], d);
            f = self.find(d);
            i += 1;
        }
        self.set(f, word[i], b);
        Ok(())
    }

    fn run(&mut self, subgens: &[Vec<Letter>]) -> Result<(), CosetError> {
        for w in subgens {
            self.scan_fill(0, w)?;
            self.process_coincidences();
        }
        loop {
            let next = (0..self.table.len() as u32)
                .find(|&c| self.alive(c) && !self.processed[c as usize]);
            let Some(alpha) = next else { break };
            self.processed[alpha as usize] = true;
            for ri in 0..self.relators.len() {
                let r = self.relators[ri].clone();
                self.scan_fill(alpha, &r)?;
                self.process_coincidences();
                if !self.alive(alpha) {
                    break;
                }
            }
            if self.alive(alpha) {
                for l in 0..2 * self.n_gens {
                    if self.entry(alpha, l).is_none() {
                        let d = self.new_coset()?;
                        self.set(alpha, l, d);
                        self.process_coincidences();
                        if !self.alive(alpha) {
                            break;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Compacts live cosets and renumbers them in BFS order from coset 0
    /// (letters in fixed order), the canonical numbering.
    fn standardize(&self, subgroup_gens: Vec<Word>) -> CosetTable {
        let root = self.find(0);
        let mut number = vec![u32::MAX; self.table.len()];
        let mut order = vec![root];
        number[root as usize] = 0;
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for l in 0..2 * self.n_gens {
                let t = self.entry(c, l).expect("table complete");
                if number[t as usize] == u32::MAX {
                    number[t as usize] = order.len() as u32;
                    order.push(t);
                }
            }
        }
        let cosets = order.len();
        let mut action = vec![0u32; cosets * 2 * self.n_gens];
        for (new_c, &old_c) in order.iter().enumerate() {
            for l in 0..2 * self.n_gens {
                let t = self.entry(old_c, l).expect("table complete");
                action[new_c * 2 * self.n_gens + l] = number[t as usize];
            }
        }
        CosetTable { cosets, n_gens: self.n_gens, action, subgroup_gens }
    }
}

/// Enumerates the cosets of `<H>` in the group presented by `p`.
pub fn enumerate_cosets(
    p: &Presentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, CosetError> {
    let relators: Vec<Vec<Letter>> = p.relators().iter().map(word_letters).collect();
    let mut e = Enumerator::new(p.gen_count(), relators, max_cosets);
    let subletters: Vec<Vec<Letter>> = subgroup.iter().map(word_letters).collect();
    e.run(&subletters)?;
    let table = e.standardize(subgroup.to_vec());
    debug_assert!(verify_table(p, &table));
    Ok(table)
}

/// Builds the coset table of `ker(phi)` for a homomorphism into a finite
/// group given by generator images: cosets are the elements of the image
/// subgroup acting by right multiplication. Always complete.
pub fn kernel_coset_table(
    p: &Presentation,
    target: &FiniteGroupTable,
    images: &[u32],
) -> Result<CosetTable, CosetError> {
    if images.len() != p.gen_count() {
        return Err(CosetError::ImageCountMismatch {
            got: images.len(),
            want: p.gen_count(),
        });
    }
    let eval = |w: &Word| -> u32 {
        w.syllables().iter().fold(0u32, |acc, &(g, e)| {
            target.mult(acc, target.pow(images[g], e))
        })
    };
    for (i, r) in p.relators().iter().enumerate() {
        if eval(r) != 0 {
            return Err(CosetError::InvalidMap { relator: i });
        }
    }
    // BFS the image subgroup so coset numbering is deterministic
    let mut elems: Vec<u32> = vec![0];
    let mut pos = std::collections::HashMap::new();
    pos.insert(0u32, 0usize);
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head];
        head += 1;
        for &img in images {
            for y in [target.mult(x, img), target.mult(x, target.inv(img))] {
                if !pos.contains_key(&y) {
                    pos.insert(y, elems.len());
                    elems.push(y);
                }
            }
        }
    }
    let cosets = elems.len();
    let n = p.gen_count();
    let mut action = vec![0u32; cosets * 2 * n];
    for (c, &x) in elems.iter().enumerate() {
        for g in 0..n {
            action[c * 2 * n + letter(g, false)] = pos[&target.mult(x, images[g])] as u32;
            action[c * 2 * n + letter(g, true)] =
                pos[&target.mult(x, target.inv(images[g]))] as u32;
        }
    }
    Ok(CosetTable { cosets, n_gens: n, action, subgroup_gens: Vec::new() })
}

fn verify_table(p: &Presentation, t: &CosetTable) -> bool {
    for c in 0..t.cosets {
        for r in p.relators() {
            if t.trace(c, r) != c {
                return false;
            }
        }
    }
    t.subgroup_gens.iter().all(|w| t.trace(0, w) == 0)
}

/// Schreier generators of the subgroup the table enumerates, as words in
/// the ambient group: one per non-tree edge of the coset graph.
pub fn schreier_generators(p: &Presentation, t: &CosetTable) -> Vec<Word> {
    let (reps, tree) = schreier_tree(t);
    let mut out = Vec::new();
    for c in 0..t.cosets {
        for g in 0..p.gen_count() {
            if tree.contains(&(c, g)) {
                continue;
            }
            let d = t.act(c, g, false);
            let w = reps[c].concat(&Word::generator(g, 1)).concat(&reps[d].inverse());
            if !w.is_empty() {
                out.push(w);
            }
        }
    }
    out
}

/// BFS spanning tree: coset representatives and the set of tree edges
/// (coset, generator) pointing along positive letters.
fn schreier_tree(t: &CosetTable) -> (Vec<Word>, std::collections::HashSet<(usize, usize)>) {
    let mut reps: Vec<Option<Word>> = vec![None; t.cosets];
    reps[0] = Some(Word::empty());
    let mut tree = std::collections::HashSet::new();
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for g in 0..t.n_gens {
            for inverse in [false, true] {
                let d = t.act(c, g, inverse);
                if reps[d].is_none() {
                    let step = Word::generator(g, if inverse { -1 } else { 1 });
                    reps[d] = Some(reps[c].clone().unwrap().concat(&step));
                    // record the positive-direction edge
                    if inverse {
                        tree.insert((d, g));
                    } else {
                        tree.insert((c, g));
                    }
                    queue.push_back(d);
                }
            }
        }
    }
    (reps.into_iter().map(Option::unwrap).collect(), tree)
}

/// Reidemeister-Schreier: a presentation of the subgroup the complete table
/// enumerates, on its Schreier generators, simplified by free and cyclic
/// reduction, duplicate removal, and elimination of generators made trivial
/// by length-1 relators.
pub fn subgroup_presentation(p: &Presentation, t: &CosetTable) -> Presentation {
    let (reps, tree) = schreier_tree(t);
    // number the Schreier generators (non-tree edges)
    let mut sgen_index: std::collections::HashMap<(usize, usize), usize> = Default::default();
    let mut sgen_words: Vec<Word> = Vec::new();
    for c in 0..t.cosets {
        for g in 0..t.n_gens {
            if tree.contains(&(c, g)) {
                continue;
            }
            let d = t.act(c, g, false);
            let w = reps[c].concat(&Word::generator(g, 1)).concat(&reps[d].inverse());
            sgen_index.insert((c, g), sgen_words.len());
            sgen_words.push(w);
        }
    }
    // rewrite every relator trace from every coset
    let mut relators: Vec<Word> = Vec::new();
    for c in 0..t.cosets {
        for r in p.relators() {
            let mut acc: Vec<(usize, i64)> = Vec::new();
            let mut cur = c;
            for &(g, e) in r.syllables() {
                for _ in 0..e.unsigned_abs() {
                    if e > 0 {
                        if let Some(&s) = sgen_index.get(&(cur, g)) {
                            acc.push((s, 1));
                        }
                        cur = t.act(cur, g, false);
                    } else {
                        let prev = t.act(cur, g, true);
                        if let Some(&s) = sgen_index.get(&(prev, g)) {
                            acc.push((s, -1));
                        }
                        cur = prev;
                    }
                }
            }
            debug_assert_eq!(cur, c, "relator trace must close");
            let w = Word::reduce(&acc).cyclically_reduce();
            if !w.is_empty() {
                relators.push(w);
            }
        }
    }
    simplify_subgroup_presentation(sgen_words.len(), relators)
}

/// Keeps only free/cyclic reduction, duplicate removal and elimination of
/// length-1 relators; no aggressive Tietze search, so the output is
/// canonical for invariant computations.
fn simplify_subgroup_presentation(mut n_gens: usize, mut relators: Vec<Word>) -> Presentation {
    loop {
        // drop duplicates (up to rotation and inversion)
        let mut seen = std::collections::HashSet::new();
        relators.retain(|r| seen.insert(cyclic_canonical(r)));
        // find a generator killed by a length-1 relator
        let trivial = relators.iter().position(|r| {
            r.syllables().len() == 1 && r.syllables()[0].1.abs() == 1
        });
        let Some(pos) = trivial else { break };
        let dead = relators[pos].syllables()[0].0;
        relators.remove(pos);
        // substitute 1 for the dead generator and renumber the rest
        let mut rewritten = Vec::with_capacity(relators.len());
        for r in &relators {
            let raw: Vec<(usize, i64)> = r
                .syllables()
                .iter()
                .filter(|&&(g, _)| g != dead)
                .map(|&(g, e)| (if g > dead { g - 1 } else { g }, e))
                .collect();
            let w = Word::reduce(&raw).cyclically_reduce();
            if !w.is_empty() {
                rewritten.push(w);
            }
        }
        relators = rewritten;
        n_gens -= 1;
    }
    let names: Vec<String> = (1..=n_gens).map(|i| format!("s{i}")).collect();
    Presentation::new(names, relators).expect("valid subgroup presentation")
}

/// Canonical form of a relator up to cyclic rotation and inversion, for
/// duplicate detection.
fn cyclic_canonical(w: &Word) -> Vec<(usize, i64)> {
    let mut best: Option<Vec<(usize, i64)>> = None;
    for cand in [w.clone(), w.inverse()] {
        let letters: Vec<(usize, i64)> = word_letters(&cand)
            .iter()
            .map(|&l| (l / 2, if l % 2 == 0 { 1 } else { -1 }))
            .collect();
        let n = letters.len();
        for rot in 0..n.max(1) {
            let rotated: Vec<(usize, i64)> =
                (0..n).map(|i| letters[(i + rot) % n]).collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap_or_default()
}

/// Schreier generators of `ker(phi)` for a valid map onto a subgroup of a
/// finite group; the index equals the image order.
pub fn kernel_gens(
    p: &Presentation,
    target: &FiniteGroupTable,
    images: &[u32],
) -> Result<Vec<Word>, CosetError> {
    let table = kernel_coset_table(p, target, images)?;
    Ok(schreier_generators(p, &table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{build_group, CatalogKey, DEFAULT_ORDER_BUDGET};
    use crate::seifert::TriangleKey;

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn cyclic_five() {
        let p = pres("< x | x^5 >");
        let t = enumerate_cosets(&p, &[], 100).unwrap();
        assert_eq!(t.cosets, 5);
    }

    #[test]
    fn index_two_in_z() {
        let p = pres("< x | >");
        let h = vec![Word::generator(0, 2)];
        let t = enumerate_cosets(&p, &h, 100).unwrap();
        assert_eq!(t.cosets, 2);
        let sub = subgroup_presentation(&p, &t);
        let ab = sub.abelianization();
        assert_eq!(ab.free_rank, 1);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn budget_exceeded_reported() {
        let f2 = Presentation::free(2);
        let err = enumerate_cosets(&f2, &[], 50).unwrap_err();
        assert_eq!(err, CosetError::BudgetExceeded { max_cosets: 50 });
    }

    #[test]
    fn full_generator_subgroup_is_index_one() {
        let p = pres("< a,b | a^3, b^2, [a,b] >");
        let h = vec![Word::generator(0, 1), Word::generator(1, 1)];
        let t = enumerate_cosets(&p, &h, 100).unwrap();
        assert_eq!(t.cosets, 1);
        let sub = subgroup_presentation(&p, &t);
        assert_eq!(sub.abelianization(), p.abelianization());
    }

    #[test]
    fn triangle_334_kernel_is_444() {
        // kernel of Delta(3,3,4) ->> C3 has index 3 and abelianization C4 x C4
        let d = TriangleKey::new(3, 3, 4).presentation();
        let c3 = build_group(&CatalogKey::Cyclic(3), DEFAULT_ORDER_BUDGET).unwrap();
        // abelianization map: a -> 1, b -> 2, c -> 0 satisfies all relators
        let images = vec![1u32, 2, 0];
        let kt = kernel_coset_table(&d, &c3, &images).unwrap();
        assert_eq!(kt.cosets, 3);
        let kgens = schreier_generators(&d, &kt);
        // Schreier generator count: index*(gens) - index + 1 = 3*3 - 2 = 7,
        // minus those that reduce to the empty word
        assert!(kgens.len() <= 7);
        let t = enumerate_cosets(&d, &kgens, 1000).unwrap();
        assert_eq!(t.cosets, 3);
        let sub = subgroup_presentation(&d, &t);
        let tor: Vec<i64> =
            sub.abelianization().torsion.iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(tor, vec![4, 4]);
    }

    #[test]
    fn invalid_map_rejected() {
        let d = TriangleKey::new(3, 3, 4).presentation();
        let c3 = build_group(&CatalogKey::Cyclic(3), DEFAULT_ORDER_BUDGET).unwrap();
        // a -> 1, b -> 1, c -> 0 violates the product relator
        let err = kernel_coset_table(&d, &c3, &[1, 1, 0]).unwrap_err();
        assert!(matches!(err, CosetError::InvalidMap { .. }));
    }

    #[test]
    fn schreier_generator_count_before_reduction() {
        // for H of index i in an n-generator group: i*n - i + 1 non-tree edges
        let p = pres("< a,b | a^4, b^4, [a,b] >");
        let h = vec![Word::generator(0, 2), Word::generator(1, 1)];
        let t = enumerate_cosets(&p, &h, 100).unwrap();
        assert_eq!(t.cosets, 2);
        let mut non_tree = 0;
        let (_, tree) = schreier_tree(&t);
        for c in 0..t.cosets {
            for g in 0..p.gen_count() {
                if !tree.contains(&(c, g)) {
                    non_tree += 1;
                }
            }
        }
        assert_eq!(non_tree, t.cosets * p.gen_count() - t.cosets + 1);
    }

    #[test]
    fn subgroup_abelianization_invariant_under_word_permutation() {
        let p = pres("< a,b | a^6, b^2, b*a*b^-1*a >");
        let h1 = vec![Word::generator(0, 1)];
        let t1 = enumerate_cosets(&p, &h1, 100).unwrap();
        // permuted / conjugated subgroup words give the same subgroup
        let h2 = vec![Word::generator(0, 1).conjugate(&Word::generator(1, 1))];
        let t2 = enumerate_cosets(&p, &h2, 100).unwrap();
        assert_eq!(t1.cosets, t2.cosets);
        assert_eq!(
            subgroup_presentation(&p, &t1).abelianization(),
            subgroup_presentation(&p, &t2).abelianization()
        );
    }
}
