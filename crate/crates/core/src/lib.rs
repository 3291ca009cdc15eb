pub mod lamcore;
pub mod syntree;
pub mod grammar;
pub mod coherence;
pub mod ellipsis;
pub mod harness;
