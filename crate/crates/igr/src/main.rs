use std::process::ExitCode;

use clap::Parser;
use igr::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = igr::init_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            match out.summary {
                Some(s) => {
                    println!("{}", s.line());
                    if s.pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
