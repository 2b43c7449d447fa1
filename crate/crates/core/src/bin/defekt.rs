fn main() {
    std::process::exit(defekt::cli::run(std::env::args_os()));
}
