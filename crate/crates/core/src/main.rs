fn main() {
    std::process::exit(s3harm::cli::main_with_args(std::env::args_os()));
}
