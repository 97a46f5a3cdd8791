fn main() {
    std::process::exit(flagrep_cli::main_with_args(std::env::args_os()));
}
