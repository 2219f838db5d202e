//! Complete deterministic finite automata: parsing, simulation, minimization,
//! complement, and reachability queries.
//!
//! States and letters are referred to by index everywhere in this crate; the
//! indices follow declaration order in the input file, which is also the
//! canonical tie-break order for every deterministic choice downstream.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Index of a state in a [`Dfa`].
pub type StateId = usize;
/// Index of a letter in a [`Dfa`]'s alphabet.
pub type LetterId = usize;

/// Rendering of the empty word in files and reports.
pub const EPSILON_TOKEN: &str = "<eps>";

/// A word over some automaton's alphabet, stored as letter indices.
///
/// `Ord` is shortlex: shorter words sort first, equal lengths compare by
/// letter index, i.e. by alphabet declaration order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<LetterId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[LetterId] {
        &self.0
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `self` followed by a single letter.
    pub fn extended(&self, letter: LetterId) -> Word {
        let mut letters = self.0.clone();
        letters.push(letter);
        Word(letters)
    }

    /// The suffix starting at position `from`.
    pub fn suffix(&self, from: usize) -> Word {
        Word(self.0[from..].to_vec())
    }

    /// The prefix of length `len`.
    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.0)
    }
}

/// Whether a sinkhole is accepting or rejecting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    Positive,
    Negative,
}

/// States whose transitions are all self-loops, with their acceptance polarity.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SinkReport {
    pub sinks: Vec<(StateId, Polarity)>,
}

impl SinkReport {
    /// The negative sinkhole, if one exists (a DFA has at most one once minimal).
    pub fn negative(&self) -> Option<StateId> {
        self.sinks
            .iter()
            .find(|(_, p)| *p == Polarity::Negative)
            .map(|(s, _)| *s)
    }

    /// The positive sinkhole, if one exists.
    pub fn positive(&self) -> Option<StateId> {
        self.sinks
            .iter()
            .find(|(_, p)| *p == Polarity::Positive)
            .map(|(s, _)| *s)
    }
}

/// Errors raised while parsing the DFA file format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed line `{text}`")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: duplicate `{header}:` header")]
    DuplicateHeader { line: usize, header: &'static str },
    #[error("missing `{header}:` header")]
    MissingHeader { header: &'static str },
    #[error("line {line}: unknown state `{token}`")]
    UnknownState { line: usize, token: String },
    #[error("line {line}: unknown letter `{token}`")]
    UnknownLetter { line: usize, token: String },
    #[error("line {line}: duplicate transition for ({state}, {letter})")]
    DuplicateTransition {
        line: usize,
        state: String,
        letter: char,
    },
    #[error("no transition declared for ({state}, {letter})")]
    MissingTransition { state: String, letter: char },
    #[error("line {line}: invalid state token `{token}`")]
    BadStateToken { line: usize, token: String },
    #[error("line {line}: invalid letter token `{token}`")]
    BadLetterToken { line: usize, token: String },
    #[error("line {line}: duplicate state `{token}` in declaration")]
    DuplicateState { line: usize, token: String },
    #[error("line {line}: duplicate letter `{token}` in declaration")]
    DuplicateLetter { line: usize, token: String },
    #[error("automaton must declare at least one state and one letter")]
    EmptyDeclaration,
}

/// Error raised when a word references a letter outside the alphabet.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("letter `{0}` is not in the alphabet")]
pub struct UnknownLetterError(pub char);

/// A complete deterministic finite automaton.
///
/// The transition function is total by construction: `delta` holds one target
/// per (state, letter) pair, flattened row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Dfa {
    names: Vec<String>,
    alphabet: Vec<char>,
    delta: Vec<StateId>,
    initial: StateId,
    finals: Vec<bool>,
}

impl fmt::Debug for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Dfa")
            .field("names", &self.names)
            .field("alphabet", &self.alphabet)
            .field("initial", &self.initial)
            .field("finals", &self.finals)
            .finish()
    }
}

impl Dfa {
    /// Builds a DFA from parts. Intended for programmatic construction;
    /// panics when the parts are structurally inconsistent.
    pub fn from_parts(
        names: Vec<String>,
        alphabet: Vec<char>,
        delta: Vec<StateId>,
        initial: StateId,
        finals: Vec<bool>,
    ) -> Self {
        assert!(!names.is_empty() && !alphabet.is_empty());
        assert_eq!(delta.len(), names.len() * alphabet.len());
        assert_eq!(finals.len(), names.len());
        assert!(initial < names.len());
        assert!(delta.iter().all(|&t| t < names.len()));
        Dfa {
            names,
            alphabet,
            delta,
            initial,
            finals,
        }
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet.len()
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals[state]
    }

    pub fn final_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.state_count()).filter(|&s| self.finals[s])
    }

    pub fn state_name(&self, state: StateId) -> &str {
        &self.names[state]
    }

    pub fn state_index(&self, name: &str) -> Option<StateId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn letter_char(&self, letter: LetterId) -> char {
        self.alphabet[letter]
    }

    pub fn letter_index(&self, ch: char) -> Option<LetterId> {
        self.alphabet.iter().position(|&c| c == ch)
    }

    /// One transition step.
    pub fn step(&self, state: StateId, letter: LetterId) -> StateId {
        self.delta[state * self.alphabet.len() + letter]
    }

    /// The extended transition function over a whole word.
    pub fn delta_star(&self, state: StateId, word: &Word) -> StateId {
        word.letters()
            .iter()
            .fold(state, |s, &l| self.step(s, l))
    }

    /// Whether the automaton accepts `word` from its initial state.
    pub fn accepts(&self, word: &Word) -> bool {
        self.finals[self.delta_star(self.initial, word)]
    }

    /// Converts a string of letter characters into a [`Word`].
    /// The empty string and [`EPSILON_TOKEN`] both denote the empty word.
    pub fn word_from_str(&self, text: &str) -> Result<Word, UnknownLetterError> {
        if text == EPSILON_TOKEN {
            return Ok(Word::empty());
        }
        let mut letters = Vec::with_capacity(text.len());
        for ch in text.chars() {
            letters.push(self.letter_index(ch).ok_or(UnknownLetterError(ch))?);
        }
        Ok(Word(letters))
    }

    /// Renders a word as concatenated letters, or [`EPSILON_TOKEN`] when empty.
    pub fn render_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return EPSILON_TOKEN.to_string();
        }
        word.letters().iter().map(|&l| self.alphabet[l]).collect()
    }

    /// Same automaton with final and non-final states swapped.
    pub fn complement(&self) -> Dfa {
        let mut out = self.clone();
        for f in &mut out.finals {
            *f = !*f;
        }
        out
    }

    /// States reachable from the initial state, in BFS discovery order
    /// (letters explored in alphabet order).
    pub fn reachable_states(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.state_count()];
        let mut order = Vec::with_capacity(self.state_count());
        let mut queue = VecDeque::new();
        seen[self.initial] = true;
        queue.push_back(self.initial);
        while let Some(s) = queue.pop_front() {
            order.push(s);
            for l in 0..self.alphabet.len() {
                let t = self.step(s, l);
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// States from which some final state is reachable.
    pub fn can_reach_final(&self) -> Vec<bool> {
        self.can_reach(|s| self.finals[s])
    }

    /// States from which some state satisfying `pred` is reachable.
    pub fn can_reach(&self, pred: impl Fn(StateId) -> bool) -> Vec<bool> {
        let n = self.state_count();
        let mut reverse = vec![Vec::new(); n];
        for s in 0..n {
            for l in 0..self.alphabet.len() {
                reverse[self.step(s, l)].push(s);
            }
        }
        let mut hit = vec![false; n];
        let mut queue: VecDeque<StateId> = (0..n).filter(|&s| pred(s)).collect();
        for &s in &queue {
            hit[s] = true;
        }
        while let Some(s) = queue.pop_front() {
            for &p in &reverse[s] {
                if !hit[p] {
                    hit[p] = true;
                    queue.push_back(p);
                }
            }
        }
        hit
    }

    /// All states whose transitions are self-loops, with polarity.
    pub fn find_sinkholes(&self) -> SinkReport {
        let sinks = (0..self.state_count())
            .filter(|&s| (0..self.alphabet.len()).all(|l| self.step(s, l) == s))
            .map(|s| {
                let polarity = if self.finals[s] {
                    Polarity::Positive
                } else {
                    Polarity::Negative
                };
                (s, polarity)
            })
            .collect();
        SinkReport { sinks }
    }

    /// Shortest word leading from the initial state to `target`, ties broken
    /// lexicographically by alphabet order. `None` when `target` is unreachable.
    pub fn shortest_word_to(&self, target: StateId) -> Option<Word> {
        if target == self.initial {
            return Some(Word::empty());
        }
        let n = self.state_count();
        let mut pred: Vec<Option<(StateId, LetterId)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[self.initial] = true;
        let mut queue = VecDeque::new();
        queue.push_back(self.initial);
        while let Some(s) = queue.pop_front() {
            for l in 0..self.alphabet.len() {
                let t = self.step(s, l);
                if !seen[t] {
                    seen[t] = true;
                    pred[t] = Some((s, l));
                    if t == target {
                        let mut letters = Vec::new();
                        let mut cur = target;
                        while let Some((p, letter)) = pred[cur] {
                            letters.push(letter);
                            cur = p;
                        }
                        letters.reverse();
                        return Some(Word(letters));
                    }
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// The canonical minimal DFA for the same language: unreachable states
    /// removed, language-equivalent states merged, states renamed by BFS
    /// discovery order from the initial state.
    pub fn minimize(&self) -> Dfa {
        let reachable = self.reachable_states();
        let mut index_of = vec![usize::MAX; self.state_count()];
        for (i, &s) in reachable.iter().enumerate() {
            index_of[s] = i;
        }
        let n = reachable.len();
        let k = self.alphabet.len();

        // Moore partition refinement over the reachable sub-automaton.
        let mut block: Vec<usize> = reachable
            .iter()
            .map(|&s| usize::from(self.finals[s]))
            .collect();
        loop {
            let mut signature: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
            for (i, &s) in reachable.iter().enumerate() {
                let succ = (0..k).map(|l| block[index_of[self.step(s, l)]]).collect();
                signature.push((block[i], succ));
            }
            let mut next = vec![0usize; n];
            let mut ids: Vec<(&(usize, Vec<usize>), usize)> = Vec::new();
            for i in 0..n {
                let id = match ids.iter().find(|(sig, _)| **sig == signature[i]) {
                    Some((_, id)) => *id,
                    None => {
                        let id = ids.len();
                        ids.push((&signature[i], id));
                        id
                    }
                };
                next[i] = id;
            }
            if next == block {
                break;
            }
            block = next;
        }

        let block_count = block.iter().copied().max().map_or(0, |m| m + 1);
        // Representative per block: smallest reachable index.
        let mut rep = vec![usize::MAX; block_count];
        for i in 0..n {
            if rep[block[i]] == usize::MAX {
                rep[block[i]] = i;
            }
        }

        // Quotient automaton, then canonical BFS rename.
        let quotient_step = |b: usize, l: usize| -> usize {
            let s = reachable[rep[b]];
            block[index_of[self.step(s, l)]]
        };
        let initial_block = block[index_of[self.initial]];
        let mut order = Vec::with_capacity(block_count);
        let mut new_id = vec![usize::MAX; block_count];
        let mut queue = VecDeque::new();
        new_id[initial_block] = 0;
        order.push(initial_block);
        queue.push_back(initial_block);
        while let Some(b) = queue.pop_front() {
            for l in 0..k {
                let t = quotient_step(b, l);
                if new_id[t] == usize::MAX {
                    new_id[t] = order.len();
                    order.push(t);
                    queue.push_back(t);
                }
            }
        }

        let m = order.len();
        let mut delta = vec![0usize; m * k];
        let mut finals = vec![false; m];
        for (i, &b) in order.iter().enumerate() {
            for l in 0..k {
                delta[i * k + l] = new_id[quotient_step(b, l)];
            }
            finals[i] = self.finals[reachable[rep[b]]];
        }
        Dfa {
            names: (0..m).map(|i| i.to_string()).collect(),
            alphabet: self.alphabet.clone(),
            delta,
            initial: 0,
            finals,
        }
    }

    /// True iff no smaller DFA accepts the same language.
    pub fn is_minimal(&self) -> bool {
        self.minimize().state_count() == self.state_count()
    }

    /// Same automaton with states renamed by BFS discovery order. Unreachable
    /// states are dropped, so this is only a faithful rename when all states
    /// are reachable.
    pub fn canonicalized(&self) -> Dfa {
        let reachable = self.reachable_states();
        let mut new_id = vec![usize::MAX; self.state_count()];
        for (i, &s) in reachable.iter().enumerate() {
            new_id[s] = i;
        }
        let k = self.alphabet.len();
        let m = reachable.len();
        let mut delta = vec![0usize; m * k];
        let mut finals = vec![false; m];
        for (i, &s) in reachable.iter().enumerate() {
            for l in 0..k {
                delta[i * k + l] = new_id[self.step(s, l)];
            }
            finals[i] = self.finals[s];
        }
        Dfa {
            names: (0..m).map(|i| i.to_string()).collect(),
            alphabet: self.alphabet.clone(),
            delta,
            initial: 0,
            finals,
        }
    }

    /// Structural isomorphism over the reachable parts (state names ignored).
    pub fn is_isomorphic(&self, other: &Dfa) -> bool {
        if self.alphabet != other.alphabet {
            return false;
        }
        let a = self.canonicalized();
        let b = other.canonicalized();
        a.delta == b.delta && a.finals == b.finals
    }

    /// Parses the line-oriented DFA file format.
    pub fn parse(text: &str) -> Result<Dfa, ParseError> {
        let mut states_decl: Option<(usize, Vec<String>)> = None;
        let mut alphabet_decl: Option<(usize, Vec<char>)> = None;
        let mut initial_decl: Option<(usize, String)> = None;
        let mut final_decl: Option<(usize, Vec<String>)> = None;
        let mut transition_lines: Vec<(usize, Vec<String>)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<String> = trimmed.split_whitespace().map(str::to_string).collect();
            match tokens[0].as_str() {
                "states:" => {
                    if states_decl.is_some() {
                        return Err(ParseError::DuplicateHeader {
                            line,
                            header: "states",
                        });
                    }
                    let mut names = Vec::new();
                    for tok in &tokens[1..] {
                        if tok.contains('<') {
                            return Err(ParseError::BadStateToken {
                                line,
                                token: tok.clone(),
                            });
                        }
                        if names.contains(tok) {
                            return Err(ParseError::DuplicateState {
                                line,
                                token: tok.clone(),
                            });
                        }
                        names.push(tok.clone());
                    }
                    states_decl = Some((line, names));
                }
                "alphabet:" => {
                    if alphabet_decl.is_some() {
                        return Err(ParseError::DuplicateHeader {
                            line,
                            header: "alphabet",
                        });
                    }
                    let mut letters = Vec::new();
                    for tok in &tokens[1..] {
                        let mut chars = tok.chars();
                        let (ch, rest) = (chars.next(), chars.next());
                        let ch = match (ch, rest) {
                            (Some(c), None) if c != '<' => c,
                            _ => {
                                return Err(ParseError::BadLetterToken {
                                    line,
                                    token: tok.clone(),
                                })
                            }
                        };
                        if letters.contains(&ch) {
                            return Err(ParseError::DuplicateLetter {
                                line,
                                token: tok.clone(),
                            });
                        }
                        letters.push(ch);
                    }
                    alphabet_decl = Some((line, letters));
                }
                "initial:" => {
                    if initial_decl.is_some() {
                        return Err(ParseError::DuplicateHeader {
                            line,
                            header: "initial",
                        });
                    }
                    if tokens.len() != 2 {
                        return Err(ParseError::MalformedLine {
                            line,
                            text: trimmed.to_string(),
                        });
                    }
                    initial_decl = Some((line, tokens[1].clone()));
                }
                "final:" => {
                    if final_decl.is_some() {
                        return Err(ParseError::DuplicateHeader {
                            line,
                            header: "final",
                        });
                    }
                    final_decl = Some((line, tokens[1..].to_vec()));
                }
                _ => transition_lines.push((line, tokens)),
            }
        }

        let (_, names) = states_decl.ok_or(ParseError::MissingHeader { header: "states" })?;
        let (_, alphabet) =
            alphabet_decl.ok_or(ParseError::MissingHeader { header: "alphabet" })?;
        let (initial_line, initial_name) =
            initial_decl.ok_or(ParseError::MissingHeader { header: "initial" })?;
        let (final_line, final_names) =
            final_decl.ok_or(ParseError::MissingHeader { header: "final" })?;
        if names.is_empty() || alphabet.is_empty() {
            return Err(ParseError::EmptyDeclaration);
        }

        let state_index = |line: usize, tok: &str| -> Result<usize, ParseError> {
            names
                .iter()
                .position(|n| n == tok)
                .ok_or_else(|| ParseError::UnknownState {
                    line,
                    token: tok.to_string(),
                })
        };

        let initial = state_index(initial_line, &initial_name)?;
        let mut finals = vec![false; names.len()];
        for tok in &final_names {
            finals[state_index(final_line, tok)?] = true;
        }

        let k = alphabet.len();
        let mut delta: Vec<Option<StateId>> = vec![None; names.len() * k];
        for (line, tokens) in &transition_lines {
            if tokens.len() != 3 {
                return Err(ParseError::MalformedLine {
                    line: *line,
                    text: tokens.join(" "),
                });
            }
            let src = state_index(*line, &tokens[0])?;
            let mut chars = tokens[1].chars();
            let letter_ch = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => {
                    return Err(ParseError::UnknownLetter {
                        line: *line,
                        token: tokens[1].clone(),
                    })
                }
            };
            let letter =
                alphabet
                    .iter()
                    .position(|&c| c == letter_ch)
                    .ok_or(ParseError::UnknownLetter {
                        line: *line,
                        token: tokens[1].clone(),
                    })?;
            let dst = state_index(*line, &tokens[2])?;
            let cell = &mut delta[src * k + letter];
            if cell.is_some() {
                return Err(ParseError::DuplicateTransition {
                    line: *line,
                    state: tokens[0].clone(),
                    letter: letter_ch,
                });
            }
            *cell = Some(dst);
        }

        let mut flat = Vec::with_capacity(delta.len());
        for (i, cell) in delta.iter().enumerate() {
            match cell {
                Some(t) => flat.push(*t),
                None => {
                    return Err(ParseError::MissingTransition {
                        state: names[i / k].clone(),
                        letter: alphabet[i % k],
                    })
                }
            }
        }

        Ok(Dfa {
            names,
            alphabet,
            delta: flat,
            initial,
            finals,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_fixtures::{fig1, FIG1_TEXT};

    #[test]
    fn parses_reference_automaton() {
        let d = fig1();
        assert_eq!(d.state_count(), 5);
        assert_eq!(d.alphabet_len(), 2);
        assert_eq!(d.state_name(d.initial()), "1");
        let finals: Vec<&str> = d.final_states().map(|s| d.state_name(s)).collect();
        assert_eq!(finals, ["A"]);
    }

    #[test]
    fn parses_single_state_automaton() {
        let d = Dfa::parse("states: s\nalphabet: a\ninitial: s\nfinal: s\ns a s\n").unwrap();
        assert_eq!(d.state_count(), 1);
        assert!(d.accepts(&Word::empty()));
    }

    #[test]
    fn missing_transition_is_reported() {
        let broken = FIG1_TEXT.replace("2 a 3\n", "");
        match Dfa::parse(&broken) {
            Err(ParseError::MissingTransition { state, letter }) => {
                assert_eq!(state, "2");
                assert_eq!(letter, 'a');
            }
            other => panic!("expected MissingTransition, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_transition_is_reported() {
        let broken = format!("{FIG1_TEXT}2 a 2\n");
        assert!(matches!(
            Dfa::parse(&broken),
            Err(ParseError::DuplicateTransition { .. })
        ));
    }

    #[test]
    fn unknown_references_are_reported() {
        let broken = FIG1_TEXT.replace("1 b X", "1 b Y");
        assert!(matches!(
            Dfa::parse(&broken),
            Err(ParseError::UnknownState { token, .. }) if token == "Y"
        ));
        let broken = FIG1_TEXT.replace("1 b X", "1 c X");
        assert!(matches!(
            Dfa::parse(&broken),
            Err(ParseError::UnknownLetter { .. })
        ));
    }

    #[test]
    fn delta_star_follows_the_graph() {
        let d = fig1();
        // Independent step-by-step trace of "aaa" from state 1.
        let word = d.word_from_str("aaa").unwrap();
        let mut s = d.state_index("1").unwrap();
        for &l in word.letters() {
            s = d.step(s, l);
        }
        assert_eq!(d.state_name(s), "A");
        assert_eq!(d.delta_star(d.state_index("1").unwrap(), &word), s);

        assert_eq!(d.delta_star(d.initial(), &Word::empty()), d.initial());
        let b = d.word_from_str("b").unwrap();
        assert_eq!(d.state_name(d.delta_star(d.initial(), &b)), "X");
    }

    #[test]
    fn acceptance_matches_reference_traces() {
        let d = fig1();
        assert!(d.accepts(&d.word_from_str("aabbaa").unwrap()));
        assert!(!d.accepts(&Word::empty()));
        assert!(!d.accepts(&d.word_from_str("aaaa").unwrap()));
    }

    #[test]
    fn reference_automaton_is_minimal() {
        let d = fig1();
        assert!(d.is_minimal());
        assert!(d.minimize().is_isomorphic(&d));
    }

    #[test]
    fn minimize_merges_equivalent_states() {
        // Two states, both final, identical structure: collapses to one.
        let d = Dfa::from_parts(
            vec!["p".into(), "q".into()],
            vec!['a'],
            vec![1, 0],
            0,
            vec![true, true],
        );
        assert!(!d.is_minimal());
        assert_eq!(d.minimize().state_count(), 1);
    }

    #[test]
    fn minimize_drops_unreachable_states() {
        // Figure-one plus an unreachable copy of state 2.
        let text = "states: 1 2 3 A X D\nalphabet: a b\ninitial: 1\nfinal: A\n\
                    1 a 2\n1 b X\n2 a 3\n2 b 2\n3 a A\n3 b 2\nA a X\nA b X\nX a X\nX b X\n\
                    D a 3\nD b D\n";
        let d = Dfa::parse(text).unwrap();
        assert!(!d.is_minimal());
        assert!(d.minimize().is_isomorphic(&fig1()));
    }

    #[test]
    fn minimize_is_idempotent() {
        let d = fig1();
        let once = d.minimize();
        assert!(once.minimize().is_isomorphic(&once));
    }

    #[test]
    fn complement_flips_finals_and_preserves_minimality() {
        let d = fig1();
        let c = d.complement();
        let finals: Vec<&str> = c.final_states().map(|s| c.state_name(s)).collect();
        assert_eq!(finals, ["1", "2", "3", "X"]);
        assert_eq!(c.complement(), d);
        assert!(c.is_minimal());
    }

    #[test]
    fn sinkhole_detection() {
        let d = fig1();
        let report = d.find_sinkholes();
        assert_eq!(report.sinks.len(), 1);
        let (s, p) = report.sinks[0];
        assert_eq!(d.state_name(s), "X");
        assert_eq!(p, Polarity::Negative);
        assert_eq!(report.negative(), Some(s));
        assert_eq!(report.positive(), None);

        let single = Dfa::parse("states: s\nalphabet: a\ninitial: s\nfinal: s\ns a s\n").unwrap();
        assert_eq!(single.find_sinkholes().sinks, vec![(0, Polarity::Positive)]);

        // Two states swapping on every letter: no sinkhole.
        let swap = Dfa::from_parts(
            vec!["p".into(), "q".into()],
            vec!['a'],
            vec![1, 0],
            0,
            vec![false, true],
        );
        assert!(swap.find_sinkholes().sinks.is_empty());
    }

    #[test]
    fn shortest_words_to_states() {
        let d = fig1();
        let to = |name: &str| d.shortest_word_to(d.state_index(name).unwrap()).unwrap();
        assert_eq!(d.render_word(&to("A")), "aaa");
        assert_eq!(to("1"), Word::empty());
        assert_eq!(d.render_word(&to("X")), "b");
    }

    #[test]
    fn shortest_word_absent_for_unreachable_state() {
        let d = Dfa::from_parts(
            vec!["p".into(), "q".into()],
            vec!['a'],
            vec![0, 1],
            0,
            vec![true, false],
        );
        assert_eq!(d.shortest_word_to(1), None);
    }

    #[test]
    fn word_ordering_is_shortlex() {
        let d = fig1();
        let w = |s: &str| d.word_from_str(s).unwrap();
        assert!(w("b") < w("aa"));
        assert!(w("ab") < w("ba"));
        assert!(Word::empty() < w("a"));
    }

    #[test]
    fn epsilon_round_trips_through_rendering() {
        let d = fig1();
        assert_eq!(d.render_word(&Word::empty()), EPSILON_TOKEN);
        assert_eq!(d.word_from_str(EPSILON_TOKEN).unwrap(), Word::empty());
    }
}
