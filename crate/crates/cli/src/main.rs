fn main() -> std::process::ExitCode {
    ginforge_cli::main_with_args()
}
