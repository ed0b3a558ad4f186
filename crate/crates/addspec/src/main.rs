fn main() {
    std::process::exit(addspec::cli::run(std::env::args_os()));
}
