//! Corpus files, batch runs and the command line.

mod cli;
mod io;
mod run;

pub use cli::{cli_main, EXIT_OK, EXIT_SCHEMA, EXIT_USAGE, EXIT_VIOLATIONS};
pub use io::{
    corpus_from_value, corpus_to_string, corpus_to_value, load_corpus, parse_corpus,
    record_from_value, record_to_value, CorpusError, CorpusFile, SCHEMA_JSON, SCHEMA_VERSION,
};
pub use run::{run_all, FactorSummary, RunReport, Verdict, CITE_FACTORS, CITE_LATTICE};
