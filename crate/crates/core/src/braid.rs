//! Positive braid words and the rewriting moves that preserve their closures.
//!
//! Letters are 1-based generator indices: letter `i` is the positive crossing
//! between strands `i` and `i + 1`. Words are read top to bottom.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Strand counts are bounded so that letters fit in a byte.
pub const MAX_STRANDS: usize = 255;

/// Default node budget of [`BraidWord::normalize_to_square`].
pub const DEFAULT_SEARCH_BUDGET: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `σ_i σ_{i+1} σ_i -> σ_{i+1} σ_i σ_{i+1}`
    Raise,
    /// `σ_{i+1} σ_i σ_{i+1} -> σ_i σ_{i+1} σ_i`
    Lower,
}

/// A rewriting step between positive words with the same closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RewriteMove {
    /// Move the first `shift` letters to the end.
    CyclicConjugate { shift: usize },
    /// Braid relation on the three letters starting at `position`.
    BraidRelation {
        position: usize,
        direction: Direction,
    },
    /// Swap the far-commuting letters at `position` and `position + 1`.
    CommutationSwap { position: usize },
    /// Remove the single occurrence of `generator` and merge its two strands.
    Destabilize { generator: usize },
}

/// Summary numbers of a connected positive braid word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidInvariants {
    pub crossings: usize,
    pub strands: usize,
    pub first_betti: usize,
    pub components: usize,
    /// Only for knots.
    pub genus: Option<usize>,
    pub reduced: bool,
    pub connected: bool,
}

/// Output of [`BraidWord::normalize_to_square`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    pub word: BraidWord,
    /// The squared generator at the front of `word`.
    pub m: usize,
    /// Replaying these on the input yields `word`.
    pub moves: Vec<RewriteMove>,
    pub nodes_visited: usize,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<u8>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidGenerator(0));
        }
        if strands > MAX_STRANDS {
            return Err(Error::TooManyStrands(strands));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::InvalidGenerator(0));
            }
            if usize::from(l) >= strands {
                return Err(Error::GeneratorOutOfRange {
                    generator: usize::from(l),
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Builds a word from generator indices, with the minimal strand count.
    pub fn from_generators(gens: &[usize]) -> Result<Self> {
        let strands = gens.iter().copied().max().unwrap_or(0) + 1;
        if strands > MAX_STRANDS {
            return Err(Error::TooManyStrands(strands));
        }
        let letters = gens
            .iter()
            .map(|&g| u8::try_from(g).map_err(|_| Error::TooManyStrands(g + 1)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    /// Parses whitespace-separated positive generator indices.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut gens = Vec::new();
        for tok in text.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::InvalidToken(tok.to_string()))?;
            if v <= 0 {
                return Err(Error::InvalidGenerator(v));
            }
            let g = usize::try_from(v).map_err(|_| Error::InvalidGenerator(v))?;
            if g >= MAX_STRANDS {
                return Err(Error::TooManyStrands(g + 1));
            }
            gens.push(g);
        }
        let natural = gens.iter().copied().max().unwrap_or(0) + 1;
        let strands = strands.unwrap_or(natural);
        if let Some(&g) = gens.iter().find(|&&g| g >= strands) {
            return Err(Error::GeneratorOutOfRange {
                generator: g,
                strands,
            });
        }
        Self::new(strands, gens.into_iter().map(|g| g as u8).collect())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().map(|&l| usize::from(l))
    }

    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Occurrence count of each generator, indexed by generator (index 0 unused).
    pub fn occurrences(&self) -> Vec<usize> {
        let mut counts = alloc::vec![0; self.strands];
        for &l in &self.letters {
            counts[usize::from(l)] += 1;
        }
        counts
    }

    /// Every generator occurs; otherwise the closure is split.
    pub fn is_connected(&self) -> bool {
        self.occurrences().iter().skip(1).all(|&c| c >= 1)
    }

    /// Every generator occurs at least twice.
    pub fn is_reduced(&self) -> bool {
        self.occurrences().iter().skip(1).all(|&c| c >= 2)
    }

    pub fn require_connected(&self) -> Result<()> {
        match self.occurrences().iter().skip(1).position(|&c| c == 0) {
            Some(i) => Err(Error::DisconnectedWord { missing: i + 1 }),
            None => Ok(()),
        }
    }

    /// `c - s + 1`; meaningful for connected words.
    pub fn first_betti(&self) -> usize {
        (self.letters.len() + 1).saturating_sub(self.strands)
    }

    /// `perm[p]` is the position at the bottom reached by the strand entering at position `p`.
    pub fn closure_permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = usize::from(l);
            at.swap(i - 1, i);
        }
        let mut perm = alloc::vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of link components of the closure together with the cycles
    /// of the closure permutation (1-based strand positions).
    pub fn closure_components(&self) -> (usize, Vec<Vec<usize>>) {
        let perm = self.closure_permutation();
        let mut seen = alloc::vec![false; self.strands];
        let mut cycles = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = perm[p];
            }
            cycles.push(cycle);
        }
        (cycles.len(), cycles)
    }

    pub fn component_count(&self) -> usize {
        self.closure_components().0
    }

    pub fn invariants(&self) -> Result<BraidInvariants> {
        self.require_connected()?;
        let components = self.component_count();
        let first_betti = self.first_betti();
        Ok(BraidInvariants {
            crossings: self.len(),
            strands: self.strands,
            first_betti,
            components,
            genus: (components == 1).then_some(first_betti / 2),
            reduced: self.is_reduced(),
            connected: true,
        })
    }

    /// Rotates left by `shift` (cyclic conjugation).
    pub fn rotated(&self, shift: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(shift % self.letters.len());
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Lexicographically least rotation and the shift producing it.
    pub fn canonical_rotation(&self) -> (Self, usize) {
        let shift = least_rotation(&self.letters);
        (self.rotated(shift), shift)
    }

    pub fn apply_move(&self, mv: &RewriteMove) -> Result<Self> {
        let n = self.letters.len();
        let illegal = |why: &str| Err(Error::IllegalMove(format!("{mv:?}: {why}")));
        match *mv {
            RewriteMove::CyclicConjugate { shift } => {
                if n == 0 && shift != 0 {
                    return illegal("empty word");
                }
                Ok(self.rotated(shift))
            }
            RewriteMove::BraidRelation {
                position,
                direction,
            } => {
                if position + 3 > n {
                    return illegal("position out of range");
                }
                let (a, b, c) = (
                    self.letters[position],
                    self.letters[position + 1],
                    self.letters[position + 2],
                );
                let ok = a == c
                    && match direction {
                        Direction::Raise => b == a + 1,
                        Direction::Lower => a == b + 1,
                    };
                if !ok {
                    return illegal("letters do not match the relation");
                }
                let mut letters = self.letters.clone();
                letters[position] = b;
                letters[position + 1] = a;
                letters[position + 2] = b;
                Ok(Self {
                    strands: self.strands,
                    letters,
                })
            }
            RewriteMove::CommutationSwap { position } => {
                if position + 2 > n {
                    return illegal("position out of range");
                }
                let (a, b) = (self.letters[position], self.letters[position + 1]);
                if a.abs_diff(b) < 2 {
                    return illegal("letters do not commute");
                }
                let mut letters = self.letters.clone();
                letters.swap(position, position + 1);
                Ok(Self {
                    strands: self.strands,
                    letters,
                })
            }
            RewriteMove::Destabilize { generator } => {
                if generator == 0 || generator >= self.strands {
                    return illegal("no such generator");
                }
                let g = generator as u8;
                let count = self.letters.iter().filter(|&&l| l == g).count();
                if count != 1 {
                    return illegal("generator must occur exactly once");
                }
                Ok(self.destabilized(g))
            }
        }
    }

    /// Letters below and above a once-occurring `g` commute past each other,
    /// so the word is `σ_g A B` cyclically; the result is `A B'` with the
    /// letters of `B` renumbered down by one.
    fn destabilized(&self, g: u8) -> Self {
        let at = self.letters.iter().position(|&l| l == g).unwrap();
        let n = self.letters.len();
        let after = (1..n).map(|k| self.letters[(at + k) % n]);
        let mut letters: Vec<u8> = after.clone().filter(|&l| l < g).collect();
        letters.extend(after.filter(|&l| l > g).map(|l| l - 1));
        Self {
            strands: self.strands - 1,
            letters,
        }
    }

    /// Whether the word starts with `σ_m² σ_{m-1}^{n_{m-1}} … σ_1^{n_1}`
    /// with every exponent positive; returns `m`.
    pub fn square_prefix(&self) -> Option<usize> {
        let l = &self.letters;
        if l.len() < 2 || l[0] != l[1] {
            return None;
        }
        let m = l[0];
        let mut pos = 2;
        for g in (1..m).rev() {
            let start = pos;
            while pos < l.len() && l[pos] == g {
                pos += 1;
            }
            if pos == start {
                return None;
            }
        }
        Some(usize::from(m))
    }

    /// Rewrites the word into square-prefix form `σ_m² σ_{m-1}^+ … σ_1^+` by
    /// breadth-first search over conjugation, braid relations, far
    /// commutations and destabilizations. Cyclic words are deduplicated by
    /// their least rotation.
    pub fn normalize_to_square(&self, budget: usize) -> Result<Normalization> {
        self.require_connected()?;
        if self.first_betti() == 0 {
            return Err(Error::TrivialLink);
        }
        let (start, shift0) = self.canonical_rotation();
        let mut nodes: Vec<SearchNode> = Vec::new();
        let mut index: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
        let mut queue = VecDeque::new();
        index.insert(start.letters.clone(), 0);
        nodes.push(SearchNode {
            word: start,
            parent: usize::MAX,
            edge: Vec::new(),
        });
        queue.push_back(0usize);

        while let Some(id) = queue.pop_front() {
            let word = nodes[id].word.clone();
            if let Some(rot) = (0..word.len()).find(|&r| word.rotated(r).square_prefix().is_some())
            {
                let mut moves = Vec::new();
                push_rotation(&mut moves, shift0, self.len());
                let mut chain = Vec::new();
                let mut cur = id;
                while cur != 0 {
                    chain.push(cur);
                    cur = nodes[cur].parent;
                }
                let mut len = self.len();
                for &node in chain.iter().rev() {
                    for mv in &nodes[node].edge {
                        match mv {
                            RewriteMove::CyclicConjugate { shift } => {
                                push_rotation(&mut moves, *shift, len)
                            }
                            RewriteMove::Destabilize { .. } => {
                                len -= 1;
                                moves.push(*mv)
                            }
                            _ => moves.push(*mv),
                        }
                    }
                }
                push_rotation(&mut moves, rot, word.len());
                let out = word.rotated(rot);
                let m = out.square_prefix().unwrap();
                return Ok(Normalization {
                    word: out,
                    m,
                    moves,
                    nodes_visited: nodes.len(),
                });
            }
            for (next, edge) in word.neighbours() {
                if nodes.len() >= budget {
                    return Err(Error::SearchBudgetExceeded { budget });
                }
                let (canon, k) = next.canonical_rotation();
                if index.contains_key(&canon.letters) {
                    continue;
                }
                let mut edge = edge;
                if k != 0 {
                    edge.push(RewriteMove::CyclicConjugate { shift: k });
                }
                index.insert(canon.letters.clone(), nodes.len());
                queue.push_back(nodes.len());
                nodes.push(SearchNode {
                    word: canon,
                    parent: id,
                    edge,
                });
            }
        }
        // The search space is finite; exhausting it without a goal means the
        // closure admits no square, which only happens for trivial closures.
        Err(Error::TrivialLink)
    }

    /// One-move neighbours, each with the move list that produces it. A
    /// legal destabilization is taken eagerly as the only successor: it
    /// keeps the closure and the first Betti number, so nothing is lost.
    fn neighbours(&self) -> Vec<(BraidWord, Vec<RewriteMove>)> {
        if let Some(g) = self.occurrences().iter().skip(1).position(|&c| c == 1) {
            let g = g + 1;
            let mv = RewriteMove::Destabilize { generator: g };
            return alloc::vec![(self.destabilized(g as u8), alloc::vec![mv])];
        }
        let n = self.letters.len();
        let mut out = Vec::new();
        let mut at = |p: usize, width: usize, mk: &dyn Fn(usize) -> RewriteMove| {
            let (base, pos, mut edge) = if p + width <= n {
                (self.clone(), p, Vec::new())
            } else {
                (
                    self.rotated(p),
                    0,
                    alloc::vec![RewriteMove::CyclicConjugate { shift: p }],
                )
            };
            let mv = mk(pos);
            if let Ok(w) = base.apply_move(&mv) {
                edge.push(mv);
                out.push((w, edge));
            }
        };
        if n >= 3 {
            for p in 0..n {
                let (a, b, c) = (
                    self.letters[p],
                    self.letters[(p + 1) % n],
                    self.letters[(p + 2) % n],
                );
                if a == c && a.abs_diff(b) == 1 {
                    let direction = if b > a {
                        Direction::Raise
                    } else {
                        Direction::Lower
                    };
                    at(p, 3, &|pos| RewriteMove::BraidRelation {
                        position: pos,
                        direction,
                    });
                }
            }
        }
        if n >= 2 {
            for p in 0..n {
                let (a, b) = (self.letters[p], self.letters[(p + 1) % n]);
                if a.abs_diff(b) >= 2 {
                    at(p, 2, &|pos| RewriteMove::CommutationSwap { position: pos });
                }
            }
        }
        out
    }

    /// Repeatedly removes once-occurring generators.
    pub fn fully_destabilized(&self) -> Self {
        let mut w = self.clone();
        while let Some(g) = w.occurrences().iter().skip(1).position(|&c| c == 1) {
            w = w.destabilized(g as u8 + 1);
        }
        w
    }
}

struct SearchNode {
    word: BraidWord,
    parent: usize,
    edge: Vec<RewriteMove>,
}

fn push_rotation(moves: &mut Vec<RewriteMove>, shift: usize, len: usize) {
    if len == 0 || shift.is_multiple_of(len) {
        return;
    }
    if let Some(RewriteMove::CyclicConjugate { shift: prev }) = moves.last_mut() {
        *prev = (*prev + shift) % len;
        if *prev == 0 {
            moves.pop();
        }
        return;
    }
    moves.push(RewriteMove::CyclicConjugate { shift: shift % len });
}

/// Index of the lexicographically least rotation.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let mut best = 0;
    for r in 1..n {
        for k in 0..n {
            let (a, b) = (&s[(r + k) % n], &s[(best + k) % n]);
            if a != b {
                if a < b {
                    best = r;
                }
                break;
            }
        }
    }
    best
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(s={}, [{}])", self.strands, self)
    }
}
