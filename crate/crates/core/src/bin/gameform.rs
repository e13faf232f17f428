fn main() -> std::process::ExitCode {
    gameform::cli::main()
}
