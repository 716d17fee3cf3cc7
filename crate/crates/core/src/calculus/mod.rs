//! The proper display calculi D.MTnabla and D.MT>: structural language,
//! rule schemas, proof checking, bounded backward search, structure
//! interpretation, and the semantic rule-soundness harness.

pub mod check;
pub mod interpret;
pub mod rules;
pub mod schema;
pub mod search;
pub mod sound;
pub mod structure;

pub use check::{check_proof, CheckError};
pub use interpret::{interpret_sequent, interpret_structure, Position};
pub use rules::{rule_schemas, Calculus, RuleSetError};
pub use schema::{MetaVar, RuleSchema};
pub use search::{search_proof, SearchOptions};
pub use sound::{rule_sound, SoundnessReport};
pub use structure::{ProofTree, Sequent, Structure};
