use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use ginlab_cli::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    let env_seed = std::env::var("GINLAB_SEED").ok();
    let started = Instant::now();
    match ginlab_cli::execute(cli, env_seed.as_deref()) {
        Ok(output) => {
            print!("{output}");
            eprintln!("# elapsed: {} ms", started.elapsed().as_millis());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("# elapsed: {} ms", started.elapsed().as_millis());
            if matches!(e, ginlab::Error::StabilizationFailure { .. }) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
