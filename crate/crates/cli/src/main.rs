//! Command-line front end for the socle classification library.
//!
//! One request per invocation: an algebra, a command, and a JSON payload
//! from a file or standard input. Results go to standard output as JSON
//! or LaTeX; errors go to standard error as a JSON object naming the
//! failing operation. Exit codes: 0 for success, 1 for domain failures
//! (a parameter outside the classified families, a verification or
//! oracle mismatch, a window that never stabilized), 2 for malformed
//! input.

mod report;
mod request;
mod run;

use clap::Parser;

fn main() {
    let cli = request::Cli::parse();
    std::process::exit(run::execute(&cli));
}
