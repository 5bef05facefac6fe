use clap::Parser;

fn main() {
    let cli = linkhom_cli::args::Cli::parse();
    std::process::exit(linkhom_cli::run(cli));
}
