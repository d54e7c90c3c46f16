use clap::Parser;
use diagalg_cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match execute(&cli) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
