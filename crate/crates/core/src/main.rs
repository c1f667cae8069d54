fn main() -> std::process::ExitCode {
    twistlab::cli::main_with_args(std::env::args_os())
}
