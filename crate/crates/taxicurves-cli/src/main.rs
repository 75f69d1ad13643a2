use clap::Parser;

fn main() {
    let cli = taxicurves_cli::Cli::parse();
    std::process::exit(taxicurves_cli::run(cli));
}
