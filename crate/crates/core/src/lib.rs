pub mod cli;
pub mod elliptic;
pub mod error;
pub mod groupdata;
pub mod repdatum;
pub mod rgroup;
pub mod rootdata;
pub mod sweep;
pub mod weylgroup;
