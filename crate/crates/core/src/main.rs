use clap::Parser;
use fracsde::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
