use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let report = finprime_cli::run_command(&argv);
    print!("{}", report.render());
    ExitCode::from(report.exit_code)
}
