use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = u21topo_cli::Cli::parse();
    u21topo_cli::run(&cli)
}
