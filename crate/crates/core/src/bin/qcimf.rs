use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("QCIMF_LOG", "warn")).init();
    let (outcome, json) = qcimf::cli::run_from(std::env::args_os());
    let out = outcome.rendered(json);
    if outcome.code == qcimf::cli::EXIT_INPUT {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(outcome.code as u8)
}
