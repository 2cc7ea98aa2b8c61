use std::process::ExitCode;

fn main() -> ExitCode {
    susy_extend::cli::main_impl()
}
