use clap::Parser;
use fhtw_cli::RunConfig;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let config = RunConfig::parse();
    if let Err(e) = fhtw_cli::run(&config) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
