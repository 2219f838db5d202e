//! Test-suite generation and verification for deterministic finite automata.
//!
//! Given a complete, minimal DFA this crate enumerates every single
//! incorrect-transition mutant, generates small test suites guaranteed to
//! detect each one, verifies arbitrary suites against the mutant set, and
//! computes exact minimum suites (over a bounded candidate pool) together
//! with a pool-independent lower bound.
//!
//! With the default `parallel` feature, kill-matrix columns, candidate
//! kill-vectors and fault-pair compatibility checks run on rayon; disabling
//! the feature falls back to identical sequential evaluation.

pub mod automata;
pub mod cli;
pub mod corpus;
pub mod cover;
pub mod fault;
pub mod suite;
pub mod sync;

pub use automata::{Dfa, LetterId, ParseError, Polarity, SinkReport, StateId, Word};
pub use cover::{CoverError, CoverInstance, CoverResult};
pub use fault::{KillMatrix, ProductAutomaton, TransitionFault, VerifyReport};
pub use suite::{GenerateError, Path, Provenance, TestSuite};
pub use sync::{PairAutomaton, SyncPartition, SyncTable};

#[cfg(test)]
pub(crate) mod test_fixtures {
    use crate::automata::Dfa;

    /// The five-state sample automaton used throughout the unit tests.
    pub const FIG1_TEXT: &str = "\
states: 1 2 3 A X
alphabet: a b
initial: 1
final: A
1 a 2
1 b X
2 a 3
2 b 2
3 a A
3 b 2
A a X
A b X
X a X
X b X
";

    pub fn fig1() -> Dfa {
        Dfa::parse(FIG1_TEXT).expect("fixture parses")
    }
}
