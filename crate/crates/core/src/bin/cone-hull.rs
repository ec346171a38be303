fn main() -> std::process::ExitCode {
    cone_hull::cli::main()
}
