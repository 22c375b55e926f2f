fn main() {
    std::process::exit(msf7::cli::run(std::env::args_os()));
}
