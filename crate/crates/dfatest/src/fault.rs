//! Single incorrect-transition mutants: enumeration, the fault-detecting
//! product automaton, shortest detecting words, and kill matrices.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

use crate::automata::{Dfa, LetterId, StateId, Word};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// One mutant: transition (source, letter) redirected to a wrong target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransitionFault {
    pub source: StateId,
    pub letter: LetterId,
    pub wrong_target: StateId,
}

impl TransitionFault {
    /// Report rendering, e.g. `1 -a-> X`.
    pub fn render(&self, dfa: &Dfa) -> String {
        format!(
            "{} -{}-> {}",
            dfa.state_name(self.source),
            dfa.letter_char(self.letter),
            dfa.state_name(self.wrong_target)
        )
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not a fault: {source} -{letter}-> {target} is the correct transition")]
pub struct InvalidFault {
    pub source: String,
    pub letter: char,
    pub target: String,
}

/// All faults of a DFA in canonical (source, letter, wrong_target) order.
/// There are exactly |Q| * |Sigma| * (|Q| - 1) of them.
pub fn enumerate_faults(dfa: &Dfa) -> Vec<TransitionFault> {
    let mut out = Vec::with_capacity(
        dfa.state_count() * dfa.alphabet_len() * dfa.state_count().saturating_sub(1),
    );
    for source in 0..dfa.state_count() {
        for letter in 0..dfa.alphabet_len() {
            let correct = dfa.step(source, letter);
            for wrong_target in 0..dfa.state_count() {
                if wrong_target != correct {
                    out.push(TransitionFault {
                        source,
                        letter,
                        wrong_target,
                    });
                }
            }
        }
    }
    out
}

/// The mutant automaton: identical except for the redirected transition.
pub fn apply_fault(dfa: &Dfa, fault: &TransitionFault) -> Result<Dfa, InvalidFault> {
    let correct = dfa.step(fault.source, fault.letter);
    if correct == fault.wrong_target {
        return Err(InvalidFault {
            source: dfa.state_name(fault.source).to_string(),
            letter: dfa.letter_char(fault.letter),
            target: dfa.state_name(fault.wrong_target).to_string(),
        });
    }
    let k = dfa.alphabet_len();
    let mut delta: Vec<StateId> = (0..dfa.state_count() * k)
        .map(|i| dfa.step(i / k, i % k))
        .collect();
    delta[fault.source * k + fault.letter] = fault.wrong_target;
    Ok(Dfa::from_parts(
        (0..dfa.state_count())
            .map(|s| dfa.state_name(s).to_string())
            .collect(),
        dfa.alphabet().to_vec(),
        delta,
        dfa.initial(),
        (0..dfa.state_count()).map(|s| dfa.is_final(s)).collect(),
    ))
}

/// One mutant transition step without materializing the mutant.
#[inline]
pub fn fault_step(dfa: &Dfa, fault: &TransitionFault, state: StateId, letter: LetterId) -> StateId {
    if state == fault.source && letter == fault.letter {
        fault.wrong_target
    } else {
        dfa.step(state, letter)
    }
}

/// The mutant's extended transition function.
pub fn fault_delta_star(dfa: &Dfa, fault: &TransitionFault, state: StateId, word: &Word) -> StateId {
    word.letters()
        .iter()
        .fold(state, |s, &l| fault_step(dfa, fault, s, l))
}

/// True iff specification and mutant disagree on accepting `word`.
pub fn kills(dfa: &Dfa, fault: &TransitionFault, word: &Word) -> bool {
    let spec = dfa.delta_star(dfa.initial(), word);
    let mutant = fault_delta_star(dfa, fault, dfa.initial(), word);
    dfa.is_final(spec) != dfa.is_final(mutant)
}

/// Reachable product of the specification with one mutant. A pair is final
/// iff exactly one coordinate is final, so the accepted language is the set
/// of words on which the two automata disagree.
#[derive(Clone, Debug)]
pub struct ProductAutomaton {
    pub pair_states: Vec<(StateId, StateId)>,
    /// `pair_delta[p * alphabet_len + letter]` indexes into `pair_states`.
    pub pair_delta: Vec<usize>,
    pub pair_initial: usize,
    pub pair_finals: Vec<bool>,
    alphabet_len: usize,
}

impl ProductAutomaton {
    pub fn step(&self, pair: usize, letter: LetterId) -> usize {
        self.pair_delta[pair * self.alphabet_len + letter]
    }

    pub fn is_final(&self, pair: usize) -> bool {
        self.pair_finals[pair]
    }

    /// Shortest accepted word, lexicographic tie-break; `None` when the
    /// product accepts nothing (possible only for non-minimal inputs).
    pub fn shortest_accepted(&self) -> Option<Word> {
        if self.pair_finals[self.pair_initial] {
            return Some(Word::empty());
        }
        let mut pred: Vec<Option<(usize, LetterId)>> = vec![None; self.pair_states.len()];
        let mut seen = vec![false; self.pair_states.len()];
        seen[self.pair_initial] = true;
        let mut queue = VecDeque::new();
        queue.push_back(self.pair_initial);
        while let Some(p) = queue.pop_front() {
            for l in 0..self.alphabet_len {
                let t = self.step(p, l);
                if !seen[t] {
                    seen[t] = true;
                    pred[t] = Some((p, l));
                    if self.pair_finals[t] {
                        let mut letters = Vec::new();
                        let mut cur = t;
                        while let Some((prev, letter)) = pred[cur] {
                            letters.push(letter);
                            cur = prev;
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
}

/// Builds the reachable spec x mutant product for one fault, BFS order.
pub fn product_automaton(dfa: &Dfa, fault: &TransitionFault) -> ProductAutomaton {
    let k = dfa.alphabet_len();
    let mut index = std::collections::HashMap::new();
    let start = (dfa.initial(), dfa.initial());
    index.insert(start, 0usize);
    let mut pair_states = vec![start];
    let mut pair_delta: Vec<usize> = Vec::new();
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    let mut next_row = 0usize;
    while let Some(p) = queue.pop_front() {
        debug_assert_eq!(p, next_row);
        next_row += 1;
        let (s, m) = pair_states[p];
        for l in 0..k {
            let t = (dfa.step(s, l), fault_step(dfa, fault, m, l));
            let id = match index.get(&t) {
                Some(&id) => id,
                None => {
                    let id = pair_states.len();
                    index.insert(t, id);
                    pair_states.push(t);
                    queue.push_back(id);
                    id
                }
            };
            pair_delta.push(id);
        }
    }
    let pair_finals = pair_states
        .iter()
        .map(|&(s, m)| dfa.is_final(s) != dfa.is_final(m))
        .collect();
    ProductAutomaton {
        pair_states,
        pair_delta,
        pair_initial: 0,
        pair_finals,
        alphabet_len: k,
    }
}

/// Shortest word on which specification and mutant disagree, lexicographic
/// tie-break; `None` iff the fault is undetectable (non-minimal input).
pub fn shortest_detecting_word(dfa: &Dfa, fault: &TransitionFault) -> Option<Word> {
    product_automaton(dfa, fault).shortest_accepted()
}

/// Boolean matrix words x faults; entry true iff the word kills the fault.
#[derive(Clone, Debug)]
pub struct KillMatrix {
    pub words: Vec<Word>,
    pub faults: Vec<TransitionFault>,
    /// `kills[w][f]` indexed by positions in `words` / `faults`.
    pub kills: Vec<Vec<bool>>,
}

impl KillMatrix {
    /// Fault columns with no true entry.
    pub fn uncovered_faults(&self) -> Vec<TransitionFault> {
        (0..self.faults.len())
            .filter(|&f| !self.kills.iter().any(|row| row[f]))
            .map(|f| self.faults[f])
            .collect()
    }

    /// Tab-separated export: header row of faults, one line per word.
    pub fn export_tsv(&self, dfa: &Dfa) -> String {
        let mut out = String::from("word");
        for f in &self.faults {
            out.push('\t');
            out.push_str(&f.render(dfa));
        }
        out.push('\n');
        for (i, w) in self.words.iter().enumerate() {
            out.push_str(&dfa.render_word(w));
            for cell in &self.kills[i] {
                let _ = write!(out, "\t{}", u8::from(*cell));
            }
            out.push('\n');
        }
        out
    }
}

/// Computes the kill matrix. Fault columns are evaluated independently (in
/// parallel with the `parallel` feature); the result is identical to
/// sequential evaluation.
pub fn kill_matrix(dfa: &Dfa, words: &[Word], faults: &[TransitionFault]) -> KillMatrix {
    let column = |f: &TransitionFault| -> Vec<bool> {
        words.iter().map(|w| kills(dfa, f, w)).collect()
    };
    #[cfg(feature = "parallel")]
    let columns: Vec<Vec<bool>> = faults.par_iter().map(column).collect();
    #[cfg(not(feature = "parallel"))]
    let columns: Vec<Vec<bool>> = faults.iter().map(column).collect();

    let kills = (0..words.len())
        .map(|w| columns.iter().map(|col| col[w]).collect())
        .collect();
    KillMatrix {
        words: words.to_vec(),
        faults: faults.to_vec(),
        kills,
    }
}

/// Outcome of replaying a suite against every mutant.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub total_faults: usize,
    pub killed: usize,
    /// Surviving faults, each with one shortest detecting word the suite is
    /// missing (`None` when the fault is undetectable).
    pub survivors: Vec<(TransitionFault, Option<Word>)>,
}

/// Replays `words` against every fault of `dfa`.
pub fn verify_suite(dfa: &Dfa, words: &[Word]) -> VerifyReport {
    let faults = enumerate_faults(dfa);
    let matrix = kill_matrix(dfa, words, &faults);
    let surviving = matrix.uncovered_faults();
    let survivors: Vec<(TransitionFault, Option<Word>)> = surviving
        .into_iter()
        .map(|f| {
            let witness = shortest_detecting_word(dfa, &f);
            (f, witness)
        })
        .collect();
    VerifyReport {
        total_faults: faults.len(),
        killed: faults.len() - survivors.len(),
        survivors,
    }
}
