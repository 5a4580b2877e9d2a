use clap::Parser;

use aqec_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let result = run(cli);
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    std::process::exit(result.exit);
}
