use clap::Parser;

fn main() {
    let cli = floer_cli::args::Cli::parse();
    std::process::exit(floer_cli::run(&cli));
}
