use clap::Parser;

fn main() -> std::process::ExitCode {
    hurwitz_cli::run(hurwitz_cli::Cli::parse())
}
