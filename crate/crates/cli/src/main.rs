use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let tol_env = std::env::var(fermix_cli::TOL_ENV).ok();
    let code = fermix_cli::run(
        std::env::args_os(),
        tol_env.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code)
}
