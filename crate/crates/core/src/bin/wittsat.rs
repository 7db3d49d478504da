fn main() {
    std::process::exit(wittsat::cli::main_with_args(std::env::args_os()));
}
